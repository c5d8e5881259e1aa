//! Dense simple graphs: Cayley graphs of Boolean functions, strongly regular
//! parameters, exact canonical labeling, graph6, clique polynomials and
//! 2-ranks.

mod canon;
mod clique;
mod graph6;

use core::fmt;

pub use self::canon::{canonical_form, canonical_form_with_stats, CanonStats, CanonicalForm};
pub use self::clique::{clique_polynomial, CliquePolynomial};
pub use self::graph6::{graph6_decode, graph6_encode};

use crate::bits::{iter_ones, BitMatrix};
use crate::boolean_fn::BooleanFunction;
use crate::{Error, Result};

/// Undirected loop-free graph stored as adjacency bit rows.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DenseGraph {
    adj: BitMatrix,
}

impl DenseGraph {
    pub fn empty(v: usize) -> Self {
        DenseGraph {
            adj: BitMatrix::zeros(v, v),
        }
    }

    pub fn complete(v: usize) -> Self {
        DenseGraph {
            adj: BitMatrix::from_fn(v, v, |i, j| i != j),
        }
    }

    pub fn from_edges(v: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut g = Self::empty(v);
        for (i, j) in edges {
            if i >= v || j >= v {
                return Err(Error::InvalidArgument(alloc::format!(
                    "edge ({i}, {j}) out of range for {v} vertices"
                )));
            }
            if i == j {
                return Err(Error::InvalidArgument(alloc::format!("loop at vertex {i}")));
            }
            g.add_edge(i, j);
        }
        Ok(g)
    }

    /// Wraps a symmetric zero-diagonal adjacency matrix.
    pub fn from_adjacency(adj: BitMatrix) -> Result<Self> {
        if adj.rows() != adj.cols() {
            return Err(Error::InvalidArgument("adjacency matrix is not square".into()));
        }
        if (0..adj.rows()).any(|i| adj.get(i, i)) {
            return Err(Error::InvalidArgument("adjacency matrix has a loop".into()));
        }
        if !adj.is_symmetric() {
            return Err(Error::InvalidArgument("adjacency matrix is not symmetric".into()));
        }
        Ok(DenseGraph { adj })
    }

    pub(crate) fn add_edge(&mut self, i: usize, j: usize) {
        self.adj.set(i, j, true);
        self.adj.set(j, i, true);
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.adj.rows()
    }

    #[inline]
    pub fn has_edge(&self, i: usize, j: usize) -> bool {
        self.adj.get(i, j)
    }

    /// Neighbour set of `i` as packed bits.
    #[inline]
    pub fn neighbors(&self, i: usize) -> &[u64] {
        self.adj.row(i)
    }

    pub fn degree(&self, i: usize) -> usize {
        self.adj.row_weight(i) as usize
    }

    pub fn edge_count(&self) -> usize {
        (0..self.vertex_count()).map(|i| self.degree(i)).sum::<usize>() / 2
    }

    /// Edges `(i, j)` with `i < j`, in row order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.vertex_count())
            .flat_map(move |i| iter_ones(self.adj.row(i)).filter(move |&j| j > i).map(move |j| (i, j)))
    }

    pub fn adjacency(&self) -> &BitMatrix {
        &self.adj
    }

    /// The graph with vertex `u` renamed to `labeling[u]`.
    pub fn relabel(&self, labeling: &[usize]) -> DenseGraph {
        let v = self.vertex_count();
        assert_eq!(labeling.len(), v, "labeling has the wrong length");
        let mut out = DenseGraph::empty(v);
        for u in 0..v {
            for w in iter_ones(self.adj.row(u)) {
                out.adj.set(labeling[u], labeling[w], true);
            }
        }
        out
    }

    pub fn complement(&self) -> DenseGraph {
        let v = self.vertex_count();
        DenseGraph {
            adj: BitMatrix::from_fn(v, v, |i, j| i != j && !self.adj.get(i, j)),
        }
    }

    pub fn is_complete(&self) -> bool {
        let v = self.vertex_count();
        (0..v).all(|i| self.degree(i) + 1 == v)
    }
}

impl fmt::Debug for DenseGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DenseGraph({} vertices, {})", self.vertex_count(), graph6_encode(self))
    }
}

/// Cayley graph of `f`: vertices `F_2^n`, edge `(i, j)` iff `f(i XOR j) = 1`.
pub fn cayley_graph(f: &BooleanFunction) -> Result<DenseGraph> {
    if f.get(0) {
        return Err(Error::NonzeroAtOrigin);
    }
    let v = f.len();
    let support = f.support();
    let mut g = DenseGraph::empty(v);
    for i in 0..v {
        let row = g.adj.row_mut(i);
        for &s in &support {
            let j = i ^ s;
            row[j / 64] |= 1 << (j % 64);
        }
    }
    Ok(g)
}

/// Parameters `(v, k, λ, μ)` of a strongly regular graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SrgParams {
    pub v: usize,
    pub k: usize,
    pub lambda: usize,
    pub mu: usize,
}

impl SrgParams {
    /// `k(k - λ - 1) = (v - k - 1) μ`.
    pub fn satisfies_counting_identity(&self) -> bool {
        let (v, k, l, m) = (self.v as i64, self.k as i64, self.lambda as i64, self.mu as i64);
        k * (k - l - 1) == (v - k - 1) * m
    }

    /// Parameters of the Cayley graph of a bent function of the given weight class.
    pub fn bent(m: usize, weight_class: u8) -> SrgParams {
        let v = 1usize << (2 * m);
        let half = 1usize << (m - 1);
        let (k, lambda) = if weight_class == 0 {
            ((1 << (2 * m - 1)) - half, (1 << (2 * m - 2)) - half)
        } else {
            ((1 << (2 * m - 1)) + half, (1 << (2 * m - 2)) + half)
        };
        SrgParams {
            v,
            k,
            lambda,
            mu: lambda,
        }
    }
}

impl fmt::Display for SrgParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {}, {})", self.v, self.k, self.lambda, self.mu)
    }
}

/// Strongly regular parameters, or `None` when the graph is not strongly
/// regular. Complete and edgeless graphs are not counted as strongly regular.
pub fn srg_params(g: &DenseGraph) -> Option<SrgParams> {
    let v = g.vertex_count();
    if v == 0 {
        return None;
    }
    let k = g.degree(0);
    if (1..v).any(|i| g.degree(i) != k) || k == 0 || k + 1 == v {
        return None;
    }
    let mut lambda = None;
    let mut mu = None;
    for i in 0..v {
        let ri = g.neighbors(i);
        for j in i + 1..v {
            let rj = g.neighbors(j);
            let common: usize = ri.iter().zip(rj).map(|(a, b)| (a & b).count_ones() as usize).sum();
            let slot = if g.has_edge(i, j) { &mut lambda } else { &mut mu };
            match *slot {
                None => *slot = Some(common),
                Some(c) if c != common => return None,
                Some(_) => {}
            }
        }
    }
    Some(SrgParams {
        v,
        k,
        lambda: lambda?,
        mu: mu?,
    })
}

/// Rank of the adjacency matrix over GF(2).
pub fn rank2(g: &DenseGraph) -> usize {
    g.adj.rank()
}

/// `true` iff the two graphs have equal canonical forms.
pub fn is_isomorphic(g: &DenseGraph, h: &DenseGraph) -> bool {
    g.vertex_count() == h.vertex_count()
        && g.edge_count() == h.edge_count()
        && canonical_form(g).g6 == canonical_form(h).g6
}
