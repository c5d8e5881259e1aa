//! Theorem suites run by `bentgraph verify`.

use std::fmt;

use bentgraph_core::anf::render;
use bentgraph_core::catalog::{self, NamedFunction};
use bentgraph_core::codes::{graph_r, has_sdp_property, min_weight_rows_check, sdp_design};
use bentgraph_core::equivalence::{
    check_witness, dillon_schatz_matrix, et_member, gl_witness_q0, gl_witness_q1,
    verify_quadratic_theorem, weight_class_matrix,
};
use bentgraph_core::graph::{canonical_form, cayley_graph, srg_params};
use bentgraph_core::sequences::{sigma, tau};
use bentgraph_core::{BitMatrix, BooleanFunction, Result, SrgParams};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::ingest::{sbox_bit_function, SBoxes};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
}

#[derive(Debug, Clone, Default)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    fn check(&mut self, name: impl Into<String>, passed: bool) {
        self.checks.push(Check {
            name: name.into(),
            passed,
        });
    }

    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{} {}", if c.passed { "pass" } else { "FAIL" }, c.name)?;
        }
        let ok = self.checks.iter().filter(|c| c.passed).count();
        write!(f, "{ok}/{} checks passed", self.checks.len())
    }
}

fn representatives(dims: impl Fn(usize) -> bool) -> Vec<NamedFunction> {
    catalog::all().filter(|f| dims(f.n)).collect()
}

fn random_symmetric(n: usize, rng: &mut impl Rng) -> BitMatrix {
    let mut z = BitMatrix::zeros(n, n);
    for i in 0..n {
        for j in i + 1..n {
            let bit = rng.gen();
            z.set(i, j, bit);
            z.set(j, i, bit);
        }
    }
    z
}

fn q_parity(m: usize, c: u64) -> u32 {
    (c & (c >> m) & ((1 << m) - 1)).count_ones() & 1
}

/// Two-class theorem by classification for `m <= theorem_m`, and exhaustive
/// witness checks for `m <= witness_m` with a random symmetric `Z` per matrix.
pub fn quadratic(theorem_m: usize, witness_m: usize, workers: usize, seed: u64) -> Result<Report> {
    let mut report = Report::default();
    for m in 1..=theorem_m {
        report.check(
            format!("q on {} variables has two classes laid out as wc", 2 * m),
            verify_quadratic_theorem(m, workers)?,
        );
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for m in 1..=witness_m {
        let n = 2 * m;
        let all: Vec<u64> = (0..1u64 << n).collect();
        let even: Vec<u64> = all.iter().copied().filter(|&c| q_parity(m, c) == 0).collect();
        let odd: Vec<u64> = all.iter().copied().filter(|&c| q_parity(m, c) == 1).collect();
        let mut ok = true;
        for &c in &even {
            let w = gl_witness_q0(m, c)?;
            ok &= w.validate(m, &random_symmetric(n, &mut rng))?;
        }
        report.check(format!("q0 witnesses, m = {m} ({} vectors)", even.len()), ok);
        let mut ok = true;
        for &c in &odd {
            for &cp in &odd {
                let a = gl_witness_q1(m, c, cp)?;
                ok &= check_witness(m, &a, c, cp, &random_symmetric(n, &mut rng))?;
            }
        }
        report.check(format!("q1 witnesses, m = {m} ({} pairs)", odd.len() * odd.len()), ok);
    }
    Ok(report)
}

/// Weight-class matrix by Walsh transforms against the closed formula, for
/// every catalog function with at most `max_dim` variables.
pub fn dillon_schatz(max_dim: usize) -> Result<Report> {
    let mut report = Report::default();
    for named in representatives(|n| n <= max_dim) {
        let f = named.function();
        report.check(
            format!("wc matrix of {} equals the dual formula", named.name),
            weight_class_matrix(&f)? == dillon_schatz_matrix(&f)?,
        );
    }
    Ok(report)
}

/// `R(g) ≅ Cay(dual(g) + wc(g))`.
pub fn r_graph_holds(g: &BooleanFunction) -> Result<bool> {
    let shifted = g.dual()?.add_constant(g.weight_class()? == 1);
    Ok(canonical_form(&graph_r(g)?).g6 == canonical_form(&cayley_graph(&shifted)?).g6)
}

/// R(f) theorem for the catalog functions on `dim` variables and `samples`
/// random members of each ET class.
pub fn r_graph(dim: usize, samples: usize, seed: u64) -> Result<Report> {
    let mut report = Report::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for named in representatives(|n| n == dim) {
        let f = named.function();
        report.check(format!("R({0}) is Cay(dual({0}) + wc)", named.name), r_graph_holds(&f)?);
        let mut ok = true;
        for _ in 0..samples {
            let b = rng.gen_range(0..1u64 << dim);
            let c = rng.gen_range(0..1u64 << dim);
            ok &= r_graph_holds(&et_member(&f, b, c)?)?;
        }
        report.check(format!("R(g) for {samples} random ET members of {}", named.name), ok);
    }
    Ok(report)
}

/// SDP property of the designs of the representatives on at most `max_dim`
/// variables, and minimum-weight rows for the same functions.
pub fn sdp(max_dim: usize) -> Result<Report> {
    let mut report = Report::default();
    for named in representatives(|n| n <= max_dim.min(6)) {
        let f = named.function();
        report.check(
            format!("design of {} has the SDP property", named.name),
            has_sdp_property(&sdp_design(&f)?)?,
        );
        report.check(
            format!("design of {} consists of minimum-weight words", named.name),
            min_weight_rows_check(&f)?,
        );
    }
    Ok(report)
}

/// SRG parameters of σ_m, τ_m for `m <= max_m`, σ_m ≅ τ_m for m ≤ 3,
/// σ_4 ≇ τ_4, and the degrees of τ_3, τ_4.
pub fn sigma_tau(max_m: usize) -> Result<Report> {
    let mut report = Report::default();
    for m in 1..=max_m {
        let s = cayley_graph(&sigma(m))?;
        let t = cayley_graph(&tau(m))?;
        let expected = Some(SrgParams::bent(m, 0));
        report.check(
            format!("sigma_{m} and tau_{m} have SRG parameters {}", SrgParams::bent(m, 0)),
            srg_params(&s) == expected && srg_params(&t) == expected,
        );
        let iso = canonical_form(&s).g6 == canonical_form(&t).g6;
        if m <= 3 {
            report.check(format!("sigma_{m} and tau_{m} are Cayley isomorphic"), iso);
        } else if m == 4 {
            report.check("sigma_4 and tau_4 are not Cayley isomorphic", !iso);
        }
        if m == 3 || m == 4 {
            report.check(format!("tau_{m} has degree {m}"), tau(m).degree() == m);
        }
    }
    Ok(report)
}

/// The printed ANF of the first bent function of S-box 1.
pub const CAST128_1_0_ANF: &str = "x0*x1*x2*x3 + x0*x1*x2*x4 + x0*x1*x2*x5 + x0*x1*x2 + x0*x1*x3*x5 + \
x0*x1*x3*x6 + x0*x1*x3 + x0*x1*x5*x6 + x0*x1*x6 + x0*x1*x7 + x0*x2*x3*x4 + x0*x2*x3 + x0*x2*x4*x5 + \
x0*x2*x5*x7 + x0*x2*x6 + x0*x2*x7 + x0*x2 + x0*x3*x4*x5 + x0*x3*x4*x6 + x0*x3*x5*x6 + x0*x3 + \
x0*x4*x5*x6 + x0*x4*x5*x7 + x0*x4*x5 + x0*x4*x6 + x0*x4 + x0*x5*x6 + x0*x5*x7 + x0*x6 + x0*x7 + x0 + \
x1*x2*x4*x6 + x1*x2*x4*x7 + x1*x2*x5*x6 + x1*x2*x7 + x1*x3*x4*x6 + x1*x3*x4*x7 + x1*x3*x5 + x1*x3*x7 + \
x1*x4*x5*x7 + x1*x4*x6 + x1*x5*x6 + x1 + x2*x3*x4*x6 + x2*x3*x4 + x2*x3*x5*x6 + x2*x3*x5 + x2*x3*x7 + \
x2*x4 + x2*x5*x6 + x2*x5 + x2 + x3*x4*x5*x6 + x3*x5*x6 + x3*x5*x7 + x3*x6 + x3 + x4 + x6*x7";

pub fn cast128(tables: &SBoxes) -> Result<Report> {
    let mut report = Report::default();
    let mut bent = 0;
    let mut degree4 = 0;
    let mut weights_ok = true;
    for sbox in 1..=8 {
        for bit in 0..32 {
            let f = sbox_bit_function(tables, sbox, bit).expect("indices in range");
            bent += usize::from(f.is_bent());
            degree4 += usize::from(f.degree() == 4);
            weights_ok &= matches!(f.weight(), 120 | 136);
        }
    }
    report.check(format!("{bent}/256 bent"), bent == 256);
    report.check(format!("{degree4}/256 of degree 4"), degree4 == 256);
    report.check("every weight is 120 or 136", weights_ok);
    let first = sbox_bit_function(tables, 1, 0).expect("indices in range");
    report.check("S-box 1, bit 0 has the published ANF", render(&first) == CAST128_1_0_ANF);
    Ok(report)
}
