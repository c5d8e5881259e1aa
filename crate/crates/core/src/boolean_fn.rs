//! Boolean functions on `F_2^n`, their Walsh–Hadamard spectra, bentness,
//! duals, weight classes and the action of the extended general affine group.
//!
//! Truth-table index `i` encodes the point `x` with `x_k` = bit `k` of `i`.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::anf::Anf;
use crate::bits::{dot, words_for, BitMatrix};
use crate::{Error, Result};

/// Largest supported variable count. Keeps Walsh values inside `i32`.
pub const MAX_VARS: usize = 16;

/// Masks selecting the table positions whose index has bit `k` clear, `k < 6`.
const LOW_HALF: [u64; 6] = [
    0x5555_5555_5555_5555,
    0x3333_3333_3333_3333,
    0x0F0F_0F0F_0F0F_0F0F,
    0x00FF_00FF_00FF_00FF,
    0x0000_FFFF_0000_FFFF,
    0x0000_0000_FFFF_FFFF,
];

/// Truth table of a function `F_2^n -> F_2`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BooleanFunction {
    n: usize,
    words: Vec<u64>,
}

impl BooleanFunction {
    /// The constant zero function on `n` variables.
    pub fn zero(n: usize) -> Self {
        assert!((1..=MAX_VARS).contains(&n), "variable count {n} out of range");
        BooleanFunction {
            n,
            words: vec![0; words_for(1 << n)],
        }
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(usize) -> bool) -> Self {
        let mut out = Self::zero(n);
        for x in 0..out.len() {
            if f(x) {
                out.set(x, true);
            }
        }
        out
    }

    /// Builds a function from a table of 0/1 values; the length must be a power of two.
    pub fn from_bits(bits: &[u8]) -> Result<Self> {
        let len = bits.len();
        if !len.is_power_of_two() || len < 2 || len > 1 << MAX_VARS {
            return Err(Error::InvalidArgument(alloc::format!(
                "truth table length {len} is not 2^n with 1 <= n <= {MAX_VARS}"
            )));
        }
        let n = len.trailing_zeros() as usize;
        let mut out = Self::zero(n);
        for (x, &b) in bits.iter().enumerate() {
            match b {
                0 => {}
                1 => out.set(x, true),
                _ => {
                    return Err(Error::InvalidArgument(alloc::format!(
                        "truth table entry {b} at {x} is not 0 or 1"
                    )))
                }
            }
        }
        Ok(out)
    }

    /// Builds a function from packed table words (bit `x % 64` of word `x / 64`).
    pub fn from_words(n: usize, words: Vec<u64>) -> Self {
        assert!((1..=MAX_VARS).contains(&n), "variable count {n} out of range");
        assert_eq!(words.len(), words_for(1 << n), "wrong table length");
        let mut out = BooleanFunction { n, words };
        out.clear_padding();
        out
    }

    /// The linear function `x ↦ <c, x>`.
    pub fn linear(n: usize, c: u64) -> Self {
        Self::from_fn(n, |x| dot(c, x as u64) == 1)
    }

    fn clear_padding(&mut self) {
        if self.n < 6 {
            self.words[0] &= (1u64 << (1 << self.n)) - 1;
        }
    }

    #[inline]
    pub fn num_vars(&self) -> usize {
        self.n
    }

    /// Number of table entries, `2^n`.
    #[inline]
    pub fn len(&self) -> usize {
        1 << self.n
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        false
    }

    #[inline]
    pub fn get(&self, x: usize) -> bool {
        (self.words[x / 64] >> (x % 64)) & 1 == 1
    }

    #[inline]
    pub fn value(&self, x: usize) -> u8 {
        u8::from(self.get(x))
    }

    #[inline]
    pub fn set(&mut self, x: usize, v: bool) {
        if v {
            self.words[x / 64] |= 1 << (x % 64);
        } else {
            self.words[x / 64] &= !(1 << (x % 64));
        }
    }

    /// Packed truth table.
    pub fn words(&self) -> &[u64] {
        &self.words
    }

    pub fn to_bits(&self) -> Vec<u8> {
        (0..self.len()).map(|x| self.value(x)).collect()
    }

    pub fn weight(&self) -> u64 {
        self.words.iter().map(|w| u64::from(w.count_ones())).sum()
    }

    /// Sorted list of points where the function is 1.
    pub fn support(&self) -> Vec<usize> {
        crate::bits::iter_ones(&self.words).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    /// Pointwise sum with another function on the same variables.
    pub fn xor(&self, other: &BooleanFunction) -> Result<BooleanFunction> {
        self.check_dim(other.n)?;
        let words = self.words.iter().zip(&other.words).map(|(a, b)| a ^ b).collect();
        Ok(BooleanFunction { n: self.n, words })
    }

    pub fn complement(&self) -> BooleanFunction {
        let mut out = BooleanFunction {
            n: self.n,
            words: self.words.iter().map(|w| !w).collect(),
        };
        out.clear_padding();
        out
    }

    /// `f + δ` for a constant `δ`.
    pub fn add_constant(&self, delta: bool) -> BooleanFunction {
        if delta {
            self.complement()
        } else {
            self.clone()
        }
    }

    /// `x ↦ f(x) + <c, x> + δ`.
    pub fn add_affine(&self, c: u64, delta: bool) -> BooleanFunction {
        let mut out = self.add_constant(delta);
        if c != 0 {
            for x in 0..self.len() {
                if dot(c, x as u64) == 1 {
                    out.words[x / 64] ^= 1 << (x % 64);
                }
            }
        }
        out
    }

    /// `x ↦ f(x + b)`.
    pub fn translate(&self, b: usize) -> BooleanFunction {
        Self::from_fn(self.n, |x| self.get(x ^ b))
    }

    /// `x ↦ f(A x)`.
    pub fn compose_linear(&self, a: &BitMatrix) -> Result<BooleanFunction> {
        self.check_matrix(a)?;
        if a.rank() != self.n {
            return Err(Error::SingularMatrix);
        }
        Ok(Self::from_fn(self.n, |x| self.get(a.apply(x as u64) as usize)))
    }

    /// Algebraic normal form via the binary Möbius transform.
    pub fn anf(&self) -> Anf {
        let mut w = self.words.clone();
        moebius_in_place(self.n, &mut w);
        let monomials = crate::bits::iter_ones(&w).map(|m| m as u32).collect();
        Anf::from_sorted_masks(self.n, monomials)
    }

    /// Algebraic degree; the zero function has degree 0.
    pub fn degree(&self) -> usize {
        self.anf().degree()
    }

    pub fn walsh_hadamard(&self) -> WalshSpectrum {
        let mut values: Vec<i32> = (0..self.len())
            .map(|x| if self.get(x) { -1 } else { 1 })
            .collect();
        fwht_in_place(&mut values);
        WalshSpectrum { n: self.n, values }
    }

    pub fn is_bent(&self) -> bool {
        if self.n % 2 != 0 {
            return false;
        }
        let target = 1i32 << (self.n / 2);
        self.walsh_hadamard().values.iter().all(|v| v.abs() == target)
    }

    /// Weight class of a bent-weight function: 0 for weight `2^{2m-1} - 2^{m-1}`,
    /// 1 for weight `2^{2m-1} + 2^{m-1}`.
    pub fn weight_class(&self) -> Result<u8> {
        weight_class_of_weight(self.n, self.weight())
    }

    /// The dual bent function, read off the signs of the Walsh spectrum.
    pub fn dual(&self) -> Result<BooleanFunction> {
        let spectrum = self.walsh_hadamard();
        let target = 1i32 << (self.n / 2);
        if self.n % 2 != 0 || spectrum.values.iter().any(|v| v.abs() != target) {
            return Err(Error::NotBent);
        }
        Ok(Self::from_fn(self.n, |x| spectrum.values[x] < 0))
    }

    /// The dual computed pointwise as the weight class of `y ↦ f(y) + <x, y>`.
    pub fn dual_via_weight_classes(&self) -> Result<BooleanFunction> {
        if !self.is_bent() {
            return Err(Error::NotBent);
        }
        let coords: Vec<BooleanFunction> =
            (0..self.n).map(|k| Self::linear(self.n, 1 << k)).collect();
        let mut out = Self::zero(self.n);
        let mut lin = vec![0u64; self.words.len()];
        for x in 0..self.len() {
            lin.fill(0);
            for (k, coord) in coords.iter().enumerate() {
                if (x >> k) & 1 == 1 {
                    for (l, c) in lin.iter_mut().zip(&coord.words) {
                        *l ^= c;
                    }
                }
            }
            let weight: u64 = lin
                .iter()
                .zip(&self.words)
                .map(|(l, f)| u64::from((l ^ f).count_ones()))
                .sum();
            out.set(x, weight_class_of_weight(self.n, weight)? == 1);
        }
        Ok(out)
    }

    /// `x ↦ f(A x + b) + <c, x> + δ`.
    pub fn apply_ega(&self, e: &EgaElement) -> Result<BooleanFunction> {
        self.check_dim(e.num_vars())?;
        let mut out = Self::zero(self.n);
        for x in 0..self.len() {
            let y = (e.a.apply(x as u64) ^ e.b) as usize;
            let v = self.value(y) ^ dot(e.c, x as u64) ^ e.delta;
            out.set(x, v == 1);
        }
        Ok(out)
    }

    fn check_dim(&self, n: usize) -> Result<()> {
        if self.n != n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: n,
            });
        }
        Ok(())
    }

    fn check_matrix(&self, a: &BitMatrix) -> Result<()> {
        if a.rows() != self.n || a.cols() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                found: a.rows().max(a.cols()),
            });
        }
        Ok(())
    }
}

impl fmt::Debug for BooleanFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BooleanFunction(n={}, ", self.n)?;
        for x in 0..self.len().min(256) {
            f.write_str(if self.get(x) { "1" } else { "0" })?;
        }
        if self.len() > 256 {
            f.write_str("...")?;
        }
        f.write_str(")")
    }
}

impl fmt::Display for BooleanFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.anf(), f)
    }
}

/// Weight class from a weight, by `wc = 2^{-m} wt - 2^{m-1} + 1/2`.
pub fn weight_class_of_weight(n: usize, weight: u64) -> Result<u8> {
    let err = Error::NotBentWeight { n, weight };
    if n % 2 != 0 || n == 0 {
        return Err(err);
    }
    let m = n / 2;
    // 2^{m+1} wc = 2 wt - 2^{2m} + 2^m
    let scaled = 2 * weight as i64 - (1i64 << (2 * m)) + (1i64 << m);
    let denom = 1i64 << (m + 1);
    if scaled % denom != 0 {
        return Err(err);
    }
    match scaled / denom {
        0 => Ok(0),
        1 => Ok(1),
        _ => Err(err),
    }
}

/// The two admissible weights of a bent function on `2m` variables, by class.
pub fn bent_weight(m: usize, class: u8) -> u64 {
    let base = 1u64 << (2 * m - 1);
    let delta = 1u64 << (m - 1);
    if class == 0 {
        base - delta
    } else {
        base + delta
    }
}

pub(crate) fn moebius_in_place(n: usize, words: &mut [u64]) {
    for k in 0..n.min(6) {
        let shift = 1 << k;
        for w in words.iter_mut() {
            *w ^= (*w & LOW_HALF[k]) << shift;
        }
    }
    for k in 6..n {
        let stride = 1 << (k - 6);
        for block in words.chunks_mut(2 * stride) {
            let (lo, hi) = block.split_at_mut(stride);
            for (h, l) in hi.iter_mut().zip(lo.iter()) {
                *h ^= l;
            }
        }
    }
}

/// In-place unnormalized Walsh–Hadamard butterfly.
pub(crate) fn fwht_in_place(values: &mut [i32]) {
    let mut h = 1;
    while h < values.len() {
        for block in values.chunks_mut(2 * h) {
            let (lo, hi) = block.split_at_mut(h);
            for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                let (x, y) = (*a, *b);
                *a = x + y;
                *b = x - y;
            }
        }
        h *= 2;
    }
}

/// Walsh–Hadamard spectrum: `values[x] = Σ_y (-1)^{f(y) + <x, y>}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WalshSpectrum {
    n: usize,
    values: Vec<i32>,
}

impl WalshSpectrum {
    #[inline]
    pub fn num_vars(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn values(&self) -> &[i32] {
        &self.values
    }

    /// `Σ_x W(x)^2`, which is `4^n` for every Boolean function.
    pub fn energy(&self) -> u64 {
        self.values.iter().map(|&v| (i64::from(v) * i64::from(v)) as u64).sum()
    }
}

/// An element `(A, b, c, δ)` of the extended general affine group `EGA(n, 2)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EgaElement {
    a: BitMatrix,
    b: u64,
    c: u64,
    delta: u8,
}

impl EgaElement {
    pub fn new(a: BitMatrix, b: u64, c: u64, delta: bool) -> Result<Self> {
        let n = a.rows();
        if a.cols() != n || n == 0 || n > MAX_VARS {
            return Err(Error::InvalidArgument(alloc::format!(
                "EGA matrix must be square with 1..={MAX_VARS} rows, got {}x{}",
                a.rows(),
                a.cols()
            )));
        }
        if a.rank() != n {
            return Err(Error::SingularMatrix);
        }
        let mask = (1u64 << n) - 1;
        if b & !mask != 0 || c & !mask != 0 {
            return Err(Error::InvalidArgument(alloc::format!(
                "translation or linear part does not fit in {n} bits"
            )));
        }
        Ok(EgaElement {
            a,
            b,
            c,
            delta: u8::from(delta),
        })
    }

    pub fn identity(n: usize) -> Self {
        EgaElement {
            a: BitMatrix::identity(n),
            b: 0,
            c: 0,
            delta: 0,
        }
    }

    /// An element of the extended translation subgroup, `A = I`.
    pub fn translation(n: usize, b: u64, c: u64, delta: bool) -> Result<Self> {
        Self::new(BitMatrix::identity(n), b, c, delta)
    }

    pub fn num_vars(&self) -> usize {
        self.a.rows()
    }

    pub fn matrix(&self) -> &BitMatrix {
        &self.a
    }

    pub fn translation_part(&self) -> u64 {
        self.b
    }

    pub fn linear_part(&self) -> u64 {
        self.c
    }

    pub fn constant(&self) -> bool {
        self.delta == 1
    }

    /// Group law `(A,b,c,δ)(A',b',c',δ') = (AA', Ab'+b, A'^T c + c', <c,b'> + δ + δ')`.
    ///
    /// Acting with the product equals acting with `self` first, then `other`.
    pub fn compose(&self, other: &EgaElement) -> Result<EgaElement> {
        if self.num_vars() != other.num_vars() {
            return Err(Error::DimensionMismatch {
                expected: self.num_vars(),
                found: other.num_vars(),
            });
        }
        Ok(EgaElement {
            a: self.a.mul(&other.a),
            b: self.a.apply(other.b) ^ self.b,
            c: other.a.transpose().apply(self.c) ^ other.c,
            delta: dot(self.c, other.b) ^ self.delta ^ other.delta,
        })
    }
}

impl fmt::Debug for EgaElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("EgaElement")
            .field("a", &self.a)
            .field("b", &self.b)
            .field("c", &self.c)
            .field("delta", &self.delta)
            .finish()
    }
}
