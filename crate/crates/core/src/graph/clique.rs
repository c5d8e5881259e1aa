use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::DenseGraph;
use crate::bits::words_for;

/// Clique counts by size: `coeffs[s]` is the number of complete subgraphs on
/// `s` vertices, with `coeffs[0] = 1` for the empty clique.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CliquePolynomial {
    pub coeffs: Vec<u64>,
}

impl CliquePolynomial {
    /// Clique number, the degree of the polynomial.
    pub fn clique_number(&self) -> usize {
        self.coeffs.len() - 1
    }
}

impl fmt::Display for CliquePolynomial {
    /// Highest power first, e.g. `t^4 + 4t^3 + 6t^2 + 4t + 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (s, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match (s, c) {
                (0, _) => write!(f, "{c}")?,
                (_, 1) => {}
                _ => write!(f, "{c}")?,
            }
            match s {
                0 => {}
                1 => f.write_str("t")?,
                _ => write!(f, "t^{s}")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Counts every complete subgraph by size.
///
/// Cliques are grown in decreasing vertex order: after choosing `u`, the
/// candidates are the neighbours of `u` with smaller index, so each clique is
/// counted once.
pub fn clique_polynomial(g: &DenseGraph) -> CliquePolynomial {
    let v = g.vertex_count();
    let words = words_for(v);
    let mut coeffs = vec![0u64; v + 1];
    coeffs[0] = 1;
    let mut below = vec![0u64; words];
    // Scratch candidate sets, one per recursion depth.
    let mut stack: Vec<Vec<u64>> = Vec::new();
    for u in 0..v {
        let row = g.neighbors(u);
        let mut cand = vec![0u64; words];
        for (c, (r, b)) in cand.iter_mut().zip(row.iter().zip(&below)) {
            *c = r & b;
        }
        extend(g, &cand, 1, &mut coeffs, &mut stack);
        below[u / 64] |= 1 << (u % 64);
    }
    let top = coeffs.iter().rposition(|&c| c != 0).unwrap_or(0);
    coeffs.truncate(top + 1);
    CliquePolynomial { coeffs }
}

fn extend(g: &DenseGraph, cand: &[u64], size: usize, coeffs: &mut [u64], stack: &mut Vec<Vec<u64>>) {
    coeffs[size] += 1;
    let pending: u32 = cand.iter().map(|w| w.count_ones()).sum();
    if pending == 0 {
        return;
    }
    if pending == 1 {
        coeffs[size + 1] += 1;
        return;
    }
    let mut next = stack.pop().unwrap_or_else(|| vec![0u64; cand.len()]);
    for (wi, &word) in cand.iter().enumerate().rev() {
        let mut w = word;
        while w != 0 {
            let bit = 63 - w.leading_zeros() as usize;
            w &= !(1u64 << bit);
            let u = wi * 64 + bit;
            let row = g.neighbors(u);
            // Candidates below u: earlier words fully, this word below `bit`.
            for k in 0..cand.len() {
                next[k] = if k < wi {
                    cand[k] & row[k]
                } else if k == wi {
                    cand[k] & row[k] & ((1u64 << bit) - 1)
                } else {
                    0
                };
            }
            extend(g, &next, size + 1, coeffs, stack);
        }
    }
    stack.push(next);
}
