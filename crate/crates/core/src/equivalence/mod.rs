//! Extended-translation classes and their extended-Cayley classification.
//!
//! For a bent `f` on `n` variables, the ET class members normalized to vanish
//! at the origin are `g_{b,c}(x) = f(x + b) + <c, x> + f(b)`. Classifying the
//! class means canonicalizing `Cay(g_{b,c})` and
//! `Cay(dual(g_{b,c}) + wc(g_{b,c}))` for all `4^n` pairs `(b, c)`.

mod quadratic;

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

pub use self::quadratic::{
    canonical_quadratic, check_witness, gl_witness_q0, gl_witness_q1, quadratic_form_matrix,
    reduce_translation, verify_quadratic_theorem, QuadraticWitness,
};

use crate::anf::render;
use crate::bits::{dot, BitMatrix};
use crate::boolean_fn::{fwht_in_place, weight_class_of_weight, BooleanFunction};
use crate::graph::{
    canonical_form, cayley_graph, clique_polynomial, graph6_decode, rank2, srg_params,
    CliquePolynomial, SrgParams,
};
use crate::{Error, Result};

/// `x ↦ f(x + b) + <c, x> + f(b)`, the ET class member that vanishes at 0.
pub fn et_member(f: &BooleanFunction, b: u64, c: u64) -> Result<BooleanFunction> {
    let n = f.num_vars();
    for v in [b, c] {
        if v >> n != 0 {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: 64 - v.leading_zeros() as usize,
            });
        }
    }
    Ok(f.translate(b as usize).add_affine(c, f.get(b as usize)))
}

/// `x ↦ f(A x)`.
pub fn apply_linear(f: &BooleanFunction, a: &BitMatrix) -> Result<BooleanFunction> {
    f.compose_linear(a)
}

/// Rewrites `h(x) = f(A x + b) + <c, x> + δ` as `h(x) = g(A x)` with
/// `g(x) = f(x + b) + <(A^{-1})^T c, x> + δ`. Returns `g` and `A`.
pub fn affine_to_translation(
    f: &BooleanFunction,
    a: &BitMatrix,
    b: u64,
    c: u64,
    delta: bool,
) -> Result<(BooleanFunction, BitMatrix)> {
    let n = f.num_vars();
    if a.rows() != n || a.cols() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            found: a.rows(),
        });
    }
    let inv = a.inverse().ok_or(Error::SingularMatrix)?;
    let c2 = inv.transpose().apply(c);
    let g = f.translate(b as usize).add_affine(c2, delta);
    Ok((g, a.clone()))
}

/// Weight classes of the ET class: entry `(c, b)` is `wc(g_{b,c})`.
///
/// Row `b` of the transposed problem is one Walsh transform of `f(x + b)`:
/// `wt(f(x + b) + <c, x>) = (2^n - W(c)) / 2`.
pub fn weight_class_matrix(f: &BooleanFunction) -> Result<BitMatrix> {
    if !f.is_bent() {
        return Err(Error::NotBent);
    }
    let n = f.num_vars();
    let v = f.len();
    let mut out = BitMatrix::zeros(v, v);
    let mut values = vec![0i32; v];
    for b in 0..v {
        for (x, w) in values.iter_mut().enumerate() {
            *w = if f.get(x ^ b) { -1 } else { 1 };
        }
        fwht_in_place(&mut values);
        let flip = f.get(b);
        for (c, &w) in values.iter().enumerate() {
            let weight = ((v as i64 - i64::from(w)) / 2) as u64;
            let weight = if flip { v as u64 - weight } else { weight };
            if weight_class_of_weight(n, weight)? == 1 {
                out.set(c, b, true);
            }
        }
    }
    Ok(out)
}

/// Entry `(c, b)` is `f(b) + <c, b> + dual(f)(c)`.
pub fn dillon_schatz_matrix(f: &BooleanFunction) -> Result<BitMatrix> {
    let dual = f.dual()?;
    let v = f.len();
    Ok(BitMatrix::from_fn(v, v, |c, b| {
        f.value(b) ^ dot(c as u64, b as u64) ^ dual.value(c) == 1
    }))
}

/// Isomorphism of `Cay(f)` and `Cay(g)`.
pub fn is_cayley_equivalent(f: &BooleanFunction, g: &BooleanFunction) -> Result<bool> {
    let gf = cayley_graph(f)?;
    let gg = cayley_graph(g)?;
    Ok(f.num_vars() == g.num_vars()
        && f.weight() == g.weight()
        && canonical_form(&gf).g6 == canonical_form(&gg).g6)
}

/// Isomorphism of `Cay(f + f(0))` and `Cay(g + g(0))`.
pub fn is_extended_cayley_equivalent(f: &BooleanFunction, g: &BooleanFunction) -> bool {
    let f0 = f.add_constant(f.get(0));
    let g0 = g.add_constant(g.get(0));
    is_cayley_equivalent(&f0, &g0).expect("normalized functions vanish at the origin")
}

/// Selects one of the three matrices of a [`Classification`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MatrixKind {
    Bent,
    Dual,
    WeightClass,
}

/// The extended-Cayley census of one ET class.
///
/// Matrices are `2^n × 2^n`, row `c`, column `b`, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Classification {
    anf: String,
    n: usize,
    graphs: Vec<String>,
    bent_index: Vec<u32>,
    dual_index: Vec<u32>,
    wc: Vec<u8>,
}

/// Summary of one class as listed in the classification tables.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ClassDescriptor {
    pub class: usize,
    /// `None` for graphs that are not strongly regular, such as complete graphs.
    pub params: Option<SrgParams>,
    pub vertices: usize,
    pub complete: bool,
    pub rank2: usize,
    pub clique: CliquePolynomial,
    pub frequency: u64,
}

impl Classification {
    /// Assembles a classification from stored parts, checking consistency.
    pub fn from_parts(
        anf: String,
        n: usize,
        graphs: Vec<String>,
        bent_index: Vec<u32>,
        dual_index: Vec<u32>,
        wc: Vec<u8>,
    ) -> Result<Self> {
        if n == 0 || n > crate::boolean_fn::MAX_VARS || n % 2 != 0 {
            return Err(Error::InvalidArgument(alloc::format!("bad dimension {n}")));
        }
        let cells = 1usize << (2 * n);
        for (name, len) in [
            ("bent", bent_index.len()),
            ("dual", dual_index.len()),
            ("wc", wc.len()),
        ] {
            if len != cells {
                return Err(Error::InvalidArgument(alloc::format!(
                    "{name} matrix has {len} entries, expected {cells}"
                )));
            }
        }
        let mut referenced = vec![false; graphs.len()];
        for &i in bent_index.iter().chain(&dual_index) {
            let slot = referenced.get_mut(i as usize).ok_or_else(|| {
                Error::InvalidArgument(alloc::format!("class index {i} out of range"))
            })?;
            *slot = true;
        }
        if let Some(unused) = referenced.iter().position(|&r| !r) {
            return Err(Error::InvalidArgument(alloc::format!(
                "graph {unused} is never referenced"
            )));
        }
        if wc.iter().any(|&w| w > 1) {
            return Err(Error::InvalidArgument("weight classes must be 0 or 1".into()));
        }
        Ok(Classification {
            anf,
            n,
            graphs,
            bent_index,
            dual_index,
            wc,
        })
    }

    pub fn anf(&self) -> &str {
        &self.anf
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    /// Canonical graph6 strings, indexed by class.
    pub fn graphs(&self) -> &[String] {
        &self.graphs
    }

    /// Side length `2^n` of the matrices.
    pub fn side(&self) -> usize {
        1 << self.n
    }

    pub fn bent_index(&self) -> &[u32] {
        &self.bent_index
    }

    pub fn dual_index(&self) -> &[u32] {
        &self.dual_index
    }

    pub fn wc(&self) -> &[u8] {
        &self.wc
    }

    /// The selected matrix, row-major, widened to `u32`.
    pub fn matrix(&self, kind: MatrixKind) -> Vec<u32> {
        match kind {
            MatrixKind::Bent => self.bent_index.clone(),
            MatrixKind::Dual => self.dual_index.clone(),
            MatrixKind::WeightClass => self.wc.iter().map(|&w| u32::from(w)).collect(),
        }
    }

    pub fn bent_class(&self, c: usize, b: usize) -> u32 {
        self.bent_index[c * self.side() + b]
    }

    pub fn dual_class(&self, c: usize, b: usize) -> u32 {
        self.dual_index[c * self.side() + b]
    }

    pub fn weight_class(&self, c: usize, b: usize) -> u8 {
        self.wc[c * self.side() + b]
    }

    /// How often each class occurs in the bent or dual matrix, by class index.
    /// Classes absent from that matrix are omitted.
    pub fn frequencies(&self, kind: MatrixKind) -> BTreeMap<u32, u64> {
        let mut freq = BTreeMap::new();
        let source = match kind {
            MatrixKind::Bent => &self.bent_index,
            MatrixKind::Dual => &self.dual_index,
            MatrixKind::WeightClass => {
                for &w in &self.wc {
                    *freq.entry(u32::from(w)).or_insert(0) += 1;
                }
                return freq;
            }
        };
        for &i in source {
            *freq.entry(i).or_insert(0) += 1;
        }
        freq
    }

    /// Number of distinct classes among the bent functions of the ET class.
    pub fn bent_class_count(&self) -> usize {
        self.frequencies(MatrixKind::Bent).len()
    }

    /// Number of distinct classes among the duals.
    pub fn dual_class_count(&self) -> usize {
        self.frequencies(MatrixKind::Dual).len()
    }

    /// Descriptors of the classes occurring in the bent or dual matrix.
    pub fn descriptors(&self, kind: MatrixKind) -> Result<Vec<ClassDescriptor>> {
        self.frequencies(kind)
            .into_iter()
            .map(|(class, frequency)| {
                let g = graph6_decode(&self.graphs[class as usize])?;
                Ok(ClassDescriptor {
                    class: class as usize,
                    params: srg_params(&g),
                    vertices: g.vertex_count(),
                    complete: g.is_complete(),
                    rank2: rank2(&g),
                    clique: clique_polynomial(&g),
                    frequency,
                })
            })
            .collect()
    }
}

/// `true` iff every pair `(b, c)` gives its own bent class, `4^n` in all.
pub fn is_prolific(cl: &Classification) -> bool {
    cl.bent_class_count() == 1 << (2 * cl.num_vars())
}

/// Classes found in one row `c` of the matrices, numbered locally by first occurrence.
struct RowResult {
    c: usize,
    graphs: Vec<String>,
    bent: Vec<u32>,
    dual: Vec<u32>,
    wc: Vec<u8>,
}

fn classify_row(f: &BooleanFunction, c: usize) -> Result<RowResult> {
    let v = f.len();
    let mut seen: BTreeMap<String, u32> = BTreeMap::new();
    let mut row = RowResult {
        c,
        graphs: Vec::new(),
        bent: Vec::with_capacity(v),
        dual: Vec::with_capacity(v),
        wc: Vec::with_capacity(v),
    };
    let mut intern = |g6: String, graphs: &mut Vec<String>| -> u32 {
        if let Some(&i) = seen.get(&g6) {
            return i;
        }
        let i = graphs.len() as u32;
        seen.insert(g6.clone(), i);
        graphs.push(g6);
        i
    };
    for b in 0..v {
        let g = et_member(f, b as u64, c as u64)?;
        let wc = g.weight_class()?;
        let dual = g.dual()?.add_constant(wc == 1);
        let bent_g6 = canonical_form(&cayley_graph(&g)?).g6;
        let dual_g6 = canonical_form(&cayley_graph(&dual)?).g6;
        row.bent.push(intern(bent_g6, &mut row.graphs));
        row.dual.push(intern(dual_g6, &mut row.graphs));
        row.wc.push(wc);
    }
    Ok(row)
}

/// Merges rows in order `c = 0, 1, ...`, numbering classes by first occurrence.
struct Merger {
    n: usize,
    next_row: usize,
    pending: BTreeMap<usize, RowResult>,
    index: BTreeMap<String, u32>,
    graphs: Vec<String>,
    bent: Vec<u32>,
    dual: Vec<u32>,
    wc: Vec<u8>,
}

impl Merger {
    fn new(n: usize) -> Self {
        let cells = 1usize << (2 * n);
        Merger {
            n,
            next_row: 0,
            pending: BTreeMap::new(),
            index: BTreeMap::new(),
            graphs: Vec::new(),
            bent: Vec::with_capacity(cells),
            dual: Vec::with_capacity(cells),
            wc: Vec::with_capacity(cells),
        }
    }

    fn push(&mut self, row: RowResult) {
        self.pending.insert(row.c, row);
        while let Some(row) = self.pending.remove(&self.next_row) {
            // Local numbering follows first occurrence within the row, so
            // interning in local order preserves global first-occurrence order.
            let global: Vec<u32> = row
                .graphs
                .into_iter()
                .map(|g6| {
                    let next = self.graphs.len() as u32;
                    *self.index.entry(g6).or_insert_with_key(|g6| {
                        self.graphs.push(g6.clone());
                        next
                    })
                })
                .collect();
            self.bent.extend(row.bent.iter().map(|&i| global[i as usize]));
            self.dual.extend(row.dual.iter().map(|&i| global[i as usize]));
            self.wc.extend(row.wc);
            self.next_row += 1;
        }
    }

    fn finish(self, f: &BooleanFunction) -> Classification {
        debug_assert_eq!(self.next_row, 1 << self.n);
        Classification {
            anf: render(f),
            n: self.n,
            graphs: self.graphs,
            bent_index: self.bent,
            dual_index: self.dual,
            wc: self.wc,
        }
    }
}

/// Classifies the ET class of a bent `f`.
///
/// Rows `c` are distributed over `workers` threads (0 means one per available
/// core); the result does not depend on the worker count. Without the `std`
/// feature the work runs on the calling thread.
pub fn classify_et_class(f: &BooleanFunction, workers: usize) -> Result<Classification> {
    if !f.is_bent() {
        return Err(Error::NotBent);
    }
    let n = f.num_vars();
    let mut merger = Merger::new(n);
    run_rows(f, workers, &mut |row| merger.push(row))?;
    Ok(merger.finish(f))
}

#[cfg(not(feature = "std"))]
fn run_rows(f: &BooleanFunction, _workers: usize, sink: &mut dyn FnMut(RowResult)) -> Result<()> {
    for c in 0..f.len() {
        sink(classify_row(f, c)?);
    }
    Ok(())
}

#[cfg(feature = "std")]
fn run_rows(f: &BooleanFunction, workers: usize, sink: &mut dyn FnMut(RowResult)) -> Result<()> {
    use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
    use std::sync::mpsc;

    let rows = f.len();
    let workers = match workers {
        0 => std::thread::available_parallelism().map_or(1, |p| p.get()),
        w => w,
    }
    .min(rows);
    if workers <= 1 {
        for c in 0..rows {
            sink(classify_row(f, c)?);
        }
        return Ok(());
    }
    let next = AtomicUsize::new(0);
    let stop = AtomicBool::new(false);
    let (tx, rx) = mpsc::channel::<Result<RowResult>>();
    std::thread::scope(|scope| {
        for _ in 0..workers {
            let tx = tx.clone();
            let (next, stop) = (&next, &stop);
            scope.spawn(move || {
                while !stop.load(Ordering::Relaxed) {
                    let c = next.fetch_add(1, Ordering::Relaxed);
                    if c >= rows {
                        break;
                    }
                    let result = classify_row(f, c);
                    let failed = result.is_err();
                    if tx.send(result).is_err() || failed {
                        stop.store(true, Ordering::Relaxed);
                        break;
                    }
                }
            });
        }
        drop(tx);
        for result in rx {
            match result {
                Ok(row) => sink(row),
                Err(e) => {
                    stop.store(true, Ordering::Relaxed);
                    return Err(e);
                }
            }
        }
        Ok(())
    })
}
