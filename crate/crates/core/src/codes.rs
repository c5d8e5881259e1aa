//! Linear codes built from the support of a Boolean function, the code graph
//! `R(f)`, and symmetric-difference-property designs.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use crate::bits::{dot, BitMatrix};
use crate::boolean_fn::BooleanFunction;
use crate::graph::DenseGraph;
use crate::{Error, Result};

/// Largest dimension whose codewords are enumerated.
pub const MAX_ENUMERATED_DIMENSION: usize = 24;

/// A binary linear code given by spanning generator rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryLinearCode {
    generator: BitMatrix,
    dimension: usize,
}

impl BinaryLinearCode {
    pub fn new(generator: BitMatrix) -> Self {
        let dimension = generator.rank();
        BinaryLinearCode {
            generator,
            dimension,
        }
    }

    pub fn length(&self) -> usize {
        self.generator.cols()
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    /// The generator rows as given.
    pub fn generator(&self) -> &BitMatrix {
        &self.generator
    }

    /// The nonzero rows of the reduced row echelon form.
    pub fn echelon_form(&self) -> BitMatrix {
        let mut m = self.generator.clone();
        let rank = m.eliminate();
        BitMatrix::from_fn(rank, m.cols(), |r, c| m.get(r, c))
    }

    /// Number of codewords of each weight, by Gray-code enumeration.
    pub fn weight_distribution(&self) -> Result<BTreeMap<usize, u64>> {
        let k = self.dimension;
        if k > MAX_ENUMERATED_DIMENSION {
            return Err(Error::TooLarge(alloc::format!(
                "code dimension {k} exceeds {MAX_ENUMERATED_DIMENSION}"
            )));
        }
        let basis = self.echelon_form();
        let mut word = vec![0u64; basis.words_per_row()];
        let mut dist = BTreeMap::new();
        dist.insert(0, 1u64);
        for i in 1u64..(1 << k) {
            let r = i.trailing_zeros() as usize;
            for (w, b) in word.iter_mut().zip(basis.row(r)) {
                *w ^= b;
            }
            let weight: usize = word.iter().map(|w| w.count_ones() as usize).sum();
            *dist.entry(weight).or_insert(0) += 1;
        }
        Ok(dist)
    }

    /// The distinct weights of nonzero codewords, ascending.
    pub fn nonzero_weights(&self) -> Result<Vec<usize>> {
        let dist = self.weight_distribution()?;
        Ok(dist.keys().copied().filter(|&w| w != 0).collect())
    }

    /// Minimum weight of a nonzero codeword; `None` for the zero code.
    pub fn min_distance(&self) -> Result<Option<usize>> {
        Ok(self
            .weight_distribution()?
            .keys()
            .copied()
            .find(|&w| w != 0))
    }

    /// `true` iff the generator columns are nonzero and pairwise distinct.
    pub fn is_projective(&self) -> bool {
        let columns = self.echelon_form().transpose();
        let mut seen = BTreeSet::new();
        (0..columns.rows()).all(|c| {
            let col = columns.row(c);
            col.iter().any(|&w| w != 0) && seen.insert(col.to_vec())
        })
    }
}

/// The code `C(f)` spanned by the rows of `Y`, whose columns are the support
/// points of `f` in ascending order.
pub fn code_of(f: &BooleanFunction) -> Result<BinaryLinearCode> {
    let support = f.support();
    if support.is_empty() {
        return Err(Error::InvalidArgument("function has empty support".into()));
    }
    let n = f.num_vars();
    let y = BitMatrix::from_fn(n, support.len(), |k, j| (support[j] >> k) & 1 == 1);
    Ok(BinaryLinearCode::new(y))
}

/// Rows of `M = X^T Y`: the codeword `x^T Y` for every `x` in `F_2^n`, indexed by `x`.
pub fn codeword_rows(f: &BooleanFunction) -> Result<BitMatrix> {
    let code = code_of(f)?;
    let y = code.generator();
    let n = f.num_vars();
    let mut m = BitMatrix::zeros(1 << n, y.cols());
    for x in 1usize..(1 << n) {
        let low = x.trailing_zeros() as usize;
        let prev = x & (x - 1);
        let row: Vec<u64> = m
            .row(prev)
            .iter()
            .zip(y.row(low))
            .map(|(a, b)| a ^ b)
            .collect();
        m.row_mut(x).copy_from_slice(&row);
    }
    Ok(m)
}

/// The graph `R(f)` on the codewords of `C(f)`, indexed by `x`.
///
/// Codewords `u` and `v` are adjacent iff `wt(u + v)` is `2^{2m-2} - 2^{m-1}`
/// when `f` has weight class 0, or `2^{2m-2} + 2^{m-1}` when it has weight class 1.
pub fn graph_r(f: &BooleanFunction) -> Result<DenseGraph> {
    if !f.is_bent() {
        return Err(Error::NotBent);
    }
    let m = f.num_vars() / 2;
    let quarter = 1usize << (2 * m - 2);
    let half = 1usize << (m - 1);
    let target = if f.weight_class()? == 0 {
        quarter - half
    } else {
        quarter + half
    };
    let words = codeword_rows(f)?;
    let v = words.rows();
    let mut adj = BitMatrix::zeros(v, v);
    for a in 0..v {
        for b in a + 1..v {
            let d: usize = words
                .row(a)
                .iter()
                .zip(words.row(b))
                .map(|(x, y)| (x ^ y).count_ones() as usize)
                .sum();
            if d == target {
                adj.set(a, b, true);
                adj.set(b, a, true);
            }
        }
    }
    DenseGraph::from_adjacency(adj)
}

/// A square incidence structure: rows are blocks, columns are points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDesign {
    incidence: BitMatrix,
}

impl BlockDesign {
    pub fn new(incidence: BitMatrix) -> Result<Self> {
        if incidence.rows() != incidence.cols() {
            return Err(Error::InvalidArgument("incidence matrix is not square".into()));
        }
        Ok(BlockDesign { incidence })
    }

    pub fn incidence(&self) -> &BitMatrix {
        &self.incidence
    }

    pub fn points(&self) -> usize {
        self.incidence.cols()
    }

    /// Block sizes in row order.
    pub fn block_sizes(&self) -> Vec<usize> {
        (0..self.incidence.rows())
            .map(|r| self.incidence.row_weight(r) as usize)
            .collect()
    }
}

/// The SDP design of a bent `f`: block `c` contains point `x` iff
/// `f(x) + <c, x> + dual(f)(c) = 1`.
pub fn sdp_design(f: &BooleanFunction) -> Result<BlockDesign> {
    let dual = f.dual()?;
    let v = f.len();
    let incidence = BitMatrix::from_fn(v, v, |c, x| {
        f.value(x) ^ dot(c as u64, x as u64) ^ dual.value(c) == 1
    });
    BlockDesign::new(incidence)
}

/// Largest design checked by [`has_sdp_property`].
pub const MAX_SDP_POINTS: usize = 64;

/// `true` iff the symmetric difference of every three distinct blocks is a
/// block or the complement of a block.
pub fn has_sdp_property(d: &BlockDesign) -> Result<bool> {
    let v = d.points();
    if v > MAX_SDP_POINTS {
        return Err(Error::TooLarge(alloc::format!(
            "design with {v} points exceeds {MAX_SDP_POINTS}"
        )));
    }
    let inc = d.incidence();
    let rows: Vec<Vec<u64>> = (0..inc.rows()).map(|r| inc.row(r).to_vec()).collect();
    let complement = |row: &[u64]| -> Vec<u64> {
        let mut out: Vec<u64> = row.iter().map(|w| !w).collect();
        if v % 64 != 0 {
            if let Some(last) = out.last_mut() {
                *last &= (1u64 << (v % 64)) - 1;
            }
        }
        out
    };
    let blocks: BTreeSet<Vec<u64>> = rows.iter().cloned().collect();
    let mut sum = vec![0u64; inc.words_per_row()];
    for i in 0..rows.len() {
        for j in i + 1..rows.len() {
            for k in j + 1..rows.len() {
                for (w, ((a, b), c)) in sum.iter_mut().zip(rows[i].iter().zip(&rows[j]).zip(&rows[k])) {
                    *w = a ^ b ^ c;
                }
                if !blocks.contains(&sum) && !blocks.contains(&complement(&sum)) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// `true` iff the blocks of [`sdp_design`] are exactly the minimum-weight
/// words of the code spanned by `f` and the first-order Reed–Muller code.
pub fn min_weight_rows_check(f: &BooleanFunction) -> Result<bool> {
    let n = f.num_vars();
    if n > 6 {
        return Err(Error::TooLarge(alloc::format!(
            "minimum-weight enumeration is limited to 6 variables, got {n}"
        )));
    }
    let design = sdp_design(f)?;
    let mut gens: Vec<BooleanFunction> = vec![f.clone(), BooleanFunction::zero(n).complement()];
    gens.extend((0..n).map(|k| BooleanFunction::linear(n, 1 << k)));
    let mut min_weight = usize::MAX;
    let mut min_words: BTreeSet<BooleanFunction> = BTreeSet::new();
    for mask in 1u32..(1 << gens.len()) {
        let mut word = BooleanFunction::zero(n);
        for (i, g) in gens.iter().enumerate() {
            if (mask >> i) & 1 == 1 {
                word = word.xor(g)?;
            }
        }
        let w = word.weight() as usize;
        if w == 0 || w > min_weight {
            continue;
        }
        if w < min_weight {
            min_weight = w;
            min_words.clear();
        }
        min_words.insert(word);
    }
    let inc = design.incidence();
    let rows: BTreeSet<BooleanFunction> = (0..inc.rows())
        .map(|r| BooleanFunction::from_fn(n, |x| inc.get(r, x)))
        .collect();
    Ok(rows.len() == inc.rows() && rows == min_words)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse_anf;

    #[test]
    fn small_example_code() {
        let f = BooleanFunction::from_bits(&[0, 1, 0, 0, 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 1, 1]).unwrap();
        let code = code_of(&f).unwrap();
        assert_eq!(code.dimension(), 4);
        assert_eq!(code.length(), 5);
        // Support columns 1, 5, 8, 14, 15; row bit j is column j.
        let e = code.echelon_form();
        let rows: Vec<u64> = (0..4).map(|r| e.row_mask(r)).collect();
        assert_eq!(rows, [0b10001, 0b00010, 0b00100, 0b11000]);
    }

    #[test]
    fn zero_code() {
        let f = BooleanFunction::from_fn(2, |x| x == 0);
        let code = code_of(&f).unwrap();
        assert_eq!(code.length(), 1);
        assert_eq!(code.dimension(), 0);
        assert_eq!(code.weight_distribution().unwrap(), BTreeMap::from([(0, 1)]));
        assert_eq!(code.min_distance().unwrap(), None);
        assert!(code_of(&BooleanFunction::zero(2)).is_err());
    }

    #[test]
    fn projectivity() {
        let f41 = parse_anf("x0*x1 + x2*x3", 4).unwrap();
        assert!(code_of(&f41).unwrap().is_projective());
        let repeated = BinaryLinearCode::new(BitMatrix::from_row_masks(3, &[0b011, 0b100]));
        assert!(!repeated.is_projective());
        let zero_col = BinaryLinearCode::new(BitMatrix::from_row_masks(2, &[0b01]));
        assert!(!zero_col.is_projective());
    }

    #[test]
    fn f61_code_weights() {
        let f = parse_anf("x0*x1 + x2*x3 + x4*x5", 6).unwrap();
        let code = code_of(&f).unwrap();
        assert_eq!((code.length(), code.dimension()), (28, 6));
        assert_eq!(code.nonzero_weights().unwrap(), [12, 16]);
        assert_eq!(code.min_distance().unwrap(), Some(12));
    }

    #[test]
    fn sdp_examples() {
        let f21 = parse_anf("x0*x1", 2).unwrap();
        assert!(has_sdp_property(&sdp_design(&f21).unwrap()).unwrap());
        let f41 = parse_anf("x0*x1 + x2*x3", 4).unwrap();
        let d = sdp_design(&f41).unwrap();
        assert!(d.block_sizes().iter().all(|&s| s == 6));
        assert!(has_sdp_property(&d).unwrap());
        assert!(min_weight_rows_check(&f41).unwrap());
        assert!(matches!(
            has_sdp_property(&BlockDesign::new(BitMatrix::zeros(65, 65)).unwrap()),
            Err(Error::TooLarge(_))
        ));
    }

    #[test]
    fn non_design_fails() {
        // Singleton blocks on five points: three of them sum to a 3-set, whose
        // complement is a 2-set, and neither is a block.
        let inc = BitMatrix::from_row_masks(5, &[0b00001, 0b00010, 0b00100, 0b01000, 0b10000]);
        let d = BlockDesign::new(inc).unwrap();
        assert!(!has_sdp_property(&d).unwrap());
    }
}
