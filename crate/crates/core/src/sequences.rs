//! The σ_m and τ_m sequences of bent functions on `2m` variables.
//!
//! Indices are read as bit strings with the most significant bit first, so
//! the string "10" is the integer 2 and prepending a two-bit prefix `p` to an
//! index of `2m - 2` bits sets bits `2m - 1` and `2m - 2`.

use crate::boolean_fn::{BooleanFunction, MAX_VARS};

/// `σ_m(i) = 1` iff the base-4 representation of `i` has an odd number of 1 digits.
///
/// # Panics
/// If `m` is 0 or `2m` exceeds the supported variable count.
pub fn sigma(m: usize) -> BooleanFunction {
    check(m);
    BooleanFunction::from_fn(2 * m, sigma_at)
}

fn sigma_at(i: usize) -> bool {
    let mut ones = 0;
    let mut x = i;
    while x != 0 {
        ones += usize::from(x & 3 == 1);
        x >>= 2;
    }
    ones % 2 == 1
}

/// `τ_1` is the indicator of "10"; for `m > 1`, by the two leading bits of the index,
/// `τ_m(00⊙i) = τ_{m-1}(i)`, `τ_m(01⊙i) = σ_{m-1}(i)`, `τ_m(10⊙i) = σ_{m-1}(i) + 1`
/// and `τ_m(11⊙i) = τ_{m-1}(i)`.
///
/// # Panics
/// If `m` is 0 or `2m` exceeds the supported variable count.
pub fn tau(m: usize) -> BooleanFunction {
    check(m);
    BooleanFunction::from_fn(2 * m, |i| tau_at(m, i))
}

fn tau_at(m: usize, i: usize) -> bool {
    if m == 1 {
        return i == 0b10;
    }
    let shift = 2 * (m - 1);
    let low = i & ((1 << shift) - 1);
    match i >> shift {
        0b00 | 0b11 => tau_at(m - 1, low),
        0b01 => sigma_at(low),
        _ => !sigma_at(low),
    }
}

fn check(m: usize) {
    assert!(m >= 1 && 2 * m <= MAX_VARS, "sequence index m = {m} out of range");
}
