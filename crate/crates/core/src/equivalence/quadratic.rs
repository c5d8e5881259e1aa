//! Explicit linear equivalences between the quadratic bent functions
//! `q(x) + <c, x>`, where `q(x) = Σ_{k<m} x_k x_{m+k}`.
//!
//! Write `e^(k) = e_k + e_{m+k}` and `h^(k)(x) = q(x) + <e^(k), x>`, and let
//! `K(c) = {k < m : c_k = c_{m+k} = 1}`, so that `q(c) = |K(c)| mod 2`.

use crate::bits::{dot, BitMatrix};
use crate::boolean_fn::{BooleanFunction, MAX_VARS};
use crate::{Error, Result};

use super::classify_et_class;

/// `q(x) = Σ_{k<m} x_k x_{m+k}` on `2m` variables.
pub fn canonical_quadratic(m: usize) -> BooleanFunction {
    assert!(m >= 1 && 2 * m <= MAX_VARS, "m = {m} out of range");
    BooleanFunction::from_fn(2 * m, |x| q(m, x as u64) == 1)
}

fn q(m: usize, x: u64) -> u8 {
    let low = x & ((1 << m) - 1);
    ((low & (x >> m)).count_ones() & 1) as u8
}

fn k_set(m: usize, c: u64) -> u64 {
    c & (c >> m) & ((1 << m) - 1)
}

fn check_vec(m: usize, c: u64) -> Result<()> {
    if m == 0 || 2 * m > MAX_VARS || c >> (2 * m) != 0 {
        return Err(Error::DimensionMismatch {
            expected: 2 * m,
            found: 64 - c.leading_zeros() as usize,
        });
    }
    Ok(())
}

/// The upper-triangular matrix `L` with `q(x) = x^T L x`.
pub fn quadratic_form_matrix(m: usize) -> BitMatrix {
    BitMatrix::from_fn(2 * m, 2 * m, |i, j| i < m && j == i + m)
}

/// `c' = (L + L^T) b + c`, so that `q(x + b) + <c, x> + q(b) = q(x) + <c', x>`.
pub fn reduce_translation(m: usize, b: u64, c: u64) -> Result<u64> {
    check_vec(m, b)?;
    check_vec(m, c)?;
    let low = (1u64 << m) - 1;
    let swapped = ((b & low) << m) | (b >> m);
    Ok(swapped ^ c)
}

/// A matrix `A` with `q(A x) = q(x) + <c, x>` for all `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadraticWitness {
    pub a: BitMatrix,
    pub target_c: u64,
}

/// For `q(c) = 0`: pair up `K(c)` in ascending order into a symmetric `T`,
/// put the halves of `c` on the diagonals `C00`, `C11`, and return
/// `A = [[I, T + C11], [T + C00, I]]`. This `A` is an involution.
pub fn gl_witness_q0(m: usize, c: u64) -> Result<QuadraticWitness> {
    check_vec(m, c)?;
    if q(m, c) != 0 {
        return Err(Error::WrongParity { expected: 0 });
    }
    let ks: alloc::vec::Vec<usize> = (0..m).filter(|&k| (k_set(m, c) >> k) & 1 == 1).collect();
    let mut t = BitMatrix::zeros(m, m);
    for pair in ks.chunks(2) {
        t.set(pair[0], pair[1], true);
        t.set(pair[1], pair[0], true);
    }
    let c00 = BitMatrix::from_fn(m, m, |i, j| i == j && (c >> i) & 1 == 1);
    let c11 = BitMatrix::from_fn(m, m, |i, j| i == j && (c >> (m + i)) & 1 == 1);
    let mut a = BitMatrix::identity(2 * m);
    a.set_block(0, m, &t.add(&c11));
    a.set_block(m, 0, &t.add(&c00));
    Ok(QuadraticWitness { a, target_c: c })
}

/// Swaps coordinates `k ↔ l` and `m+k ↔ m+l`; fixes `q` and maps `e^(k)` to `e^(l)`.
fn pair_swap(m: usize, k: usize, l: usize) -> BitMatrix {
    let mut perm: alloc::vec::Vec<usize> = (0..2 * m).collect();
    perm.swap(k, l);
    perm.swap(m + k, m + l);
    BitMatrix::permutation(&perm)
}

/// For `q(c) = q(c') = 1`, a matrix `M` with `q(M x) + <c, M x> = q(x) + <c', x>`.
///
/// With `l = min K(c)` and `c0 = c + e^(l)`, `q(c0) = 0` and the witness
/// `A_{c0}` satisfies `h^(l)(A_{c0} x) = q(x) + <c, x>`. Likewise for `c'`
/// with `l'`. Since `A_{c0}` is an involution and the pair swaps carry
/// `h^(l)` to `h^(0)` to `h^(l')`,
/// `M = A_{c0} · P_{l,0} · P_{0,l'} · A_{c0'}`.
pub fn gl_witness_q1(m: usize, c: u64, c_prime: u64) -> Result<BitMatrix> {
    check_vec(m, c)?;
    check_vec(m, c_prime)?;
    if q(m, c) != 1 || q(m, c_prime) != 1 {
        return Err(Error::WrongParity { expected: 1 });
    }
    let e = |k: usize| (1u64 << k) | (1u64 << (m + k));
    let l = k_set(m, c).trailing_zeros() as usize;
    let lp = k_set(m, c_prime).trailing_zeros() as usize;
    let a0 = gl_witness_q0(m, c ^ e(l))?.a;
    let a1 = gl_witness_q0(m, c_prime ^ e(lp))?.a;
    Ok(a0
        .mul(&pair_swap(m, l, 0))
        .mul(&pair_swap(m, 0, lp))
        .mul(&a1))
}

/// Checks `q(A x) + <c_left, A x> = q(x) + <c_right, x>` at every `x`.
///
/// `q(A x)` is evaluated twice: directly, and as `x^T (A^T L A + Z) x`, which
/// must agree for any symmetric zero-diagonal `Z`.
pub fn check_witness(m: usize, a: &BitMatrix, c_left: u64, c_right: u64, z: &BitMatrix) -> Result<bool> {
    let n = 2 * m;
    check_vec(m, c_left)?;
    check_vec(m, c_right)?;
    for mat in [a, z] {
        if mat.rows() != n || mat.cols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: mat.rows(),
            });
        }
    }
    if !z.is_symmetric() || (0..n).any(|i| z.get(i, i)) {
        return Err(Error::InvalidArgument("Z must be symmetric with zero diagonal".into()));
    }
    let form = a.transpose().mul(&quadratic_form_matrix(m)).mul(a).add(z);
    for x in 0..1u64 << n {
        let ax = a.apply(x);
        let direct = q(m, ax);
        let via_form = dot(x, form.apply(x));
        let rhs = q(m, x) ^ dot(c_right, x);
        if direct != via_form || direct ^ dot(c_left, ax) != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

impl QuadraticWitness {
    /// Exhaustive check of `q(A x) = q(x) + <c, x>` and `A^2 = I`.
    pub fn validate(&self, m: usize, z: &BitMatrix) -> Result<bool> {
        Ok(self.a.mul(&self.a).is_identity() && check_witness(m, &self.a, 0, self.target_c, z)?)
    }
}

/// Classifies the ET class of `q` and checks that it has exactly two bent
/// classes, laid out like the weight-class matrix.
pub fn verify_quadratic_theorem(m: usize, workers: usize) -> Result<bool> {
    let cl = classify_et_class(&canonical_quadratic(m), workers)?;
    if cl.bent_class_count() != 2 {
        return Ok(false);
    }
    let flip = u32::from(cl.wc()[0]) ^ cl.bent_index()[0];
    Ok(cl
        .bent_index()
        .iter()
        .zip(cl.wc())
        .all(|(&i, &w)| i == u32::from(w) ^ flip))
}
