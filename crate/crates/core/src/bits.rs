//! Dense matrices over GF(2) stored as packed `u64` rows.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

/// The standard dot product of two bit vectors packed into integers, mod 2.
#[inline]
pub fn dot(x: u64, y: u64) -> u8 {
    ((x & y).count_ones() & 1) as u8
}

#[inline]
pub(crate) fn words_for(bits: usize) -> usize {
    bits.div_ceil(64)
}

/// A `rows × cols` matrix over GF(2).
///
/// Row `r` occupies `words_per_row` consecutive words; bit `c` of the row is
/// bit `c % 64` of word `c / 64`. Padding bits past `cols` are always zero.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    words_per_row: usize,
    data: Vec<u64>,
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let words_per_row = words_for(cols);
        BitMatrix {
            rows,
            cols,
            words_per_row,
            data: vec![0; rows * words_per_row],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> bool) -> Self {
        let mut m = Self::zeros(rows, cols);
        for r in 0..rows {
            for c in 0..cols {
                if f(r, c) {
                    m.set(r, c, true);
                }
            }
        }
        m
    }

    /// Builds a matrix with at most 64 columns from integer rows.
    ///
    /// Bits at or above `cols` are discarded.
    pub fn from_row_masks(cols: usize, masks: &[u64]) -> Self {
        assert!(cols <= 64, "from_row_masks needs cols <= 64");
        let mut m = Self::zeros(masks.len(), cols);
        let keep = if cols == 64 { u64::MAX } else { (1u64 << cols) - 1 };
        for (r, &mask) in masks.iter().enumerate() {
            if m.words_per_row > 0 {
                m.data[r] = mask & keep;
            }
        }
        m
    }

    /// Permutation matrix `P` with `P e_j = e_{perm[j]}`, so `(P x)_{perm[j]} = x_j`.
    pub fn permutation(perm: &[usize]) -> Self {
        let n = perm.len();
        let mut m = Self::zeros(n, n);
        for (j, &i) in perm.iter().enumerate() {
            m.set(i, j, true);
        }
        m
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn words_per_row(&self) -> usize {
        self.words_per_row
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        debug_assert!(r < self.rows && c < self.cols);
        (self.data[r * self.words_per_row + c / 64] >> (c % 64)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, value: bool) {
        debug_assert!(r < self.rows && c < self.cols);
        let w = &mut self.data[r * self.words_per_row + c / 64];
        if value {
            *w |= 1 << (c % 64);
        } else {
            *w &= !(1 << (c % 64));
        }
    }

    #[inline]
    pub fn row(&self, r: usize) -> &[u64] {
        &self.data[r * self.words_per_row..(r + 1) * self.words_per_row]
    }

    #[inline]
    pub fn row_mut(&mut self, r: usize) -> &mut [u64] {
        &mut self.data[r * self.words_per_row..(r + 1) * self.words_per_row]
    }

    /// Row `r` as an integer; requires `cols <= 64`.
    #[inline]
    pub fn row_mask(&self, r: usize) -> u64 {
        debug_assert!(self.cols <= 64);
        if self.words_per_row == 0 {
            0
        } else {
            self.data[r]
        }
    }

    /// Column `c` as an integer; requires `rows <= 64`.
    pub fn col_mask(&self, c: usize) -> u64 {
        debug_assert!(self.rows <= 64);
        (0..self.rows).fold(0, |acc, r| acc | (u64::from(self.get(r, c)) << r))
    }

    /// `row[dst] ^= row[src]`.
    pub fn xor_row(&mut self, src: usize, dst: usize) {
        if src == dst {
            self.row_mut(dst).fill(0);
            return;
        }
        let w = self.words_per_row;
        for k in 0..w {
            let v = self.data[src * w + k];
            self.data[dst * w + k] ^= v;
        }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let w = self.words_per_row;
        for k in 0..w {
            self.data.swap(a * w + k, b * w + k);
        }
    }

    pub fn row_weight(&self, r: usize) -> u32 {
        self.row(r).iter().map(|w| w.count_ones()).sum()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in iter_ones(self.row(r)) {
                t.set(c, r, true);
            }
        }
        t
    }

    pub fn mul(&self, other: &BitMatrix) -> BitMatrix {
        assert_eq!(self.cols, other.rows, "inner dimensions differ");
        let mut out = BitMatrix::zeros(self.rows, other.cols);
        let w = out.words_per_row;
        for r in 0..self.rows {
            for k in iter_ones(self.row(r)) {
                for j in 0..w {
                    out.data[r * w + j] ^= other.data[k * w + j];
                }
            }
        }
        out
    }

    /// `A x` for a column vector packed into an integer; requires `cols <= 64`.
    #[inline]
    pub fn apply(&self, x: u64) -> u64 {
        debug_assert!(self.cols <= 64 && self.rows <= 64);
        let mut y = 0u64;
        for r in 0..self.rows {
            y |= u64::from(dot(self.row_mask(r), x)) << r;
        }
        y
    }

    /// Reduces in place to row echelon form and returns the rank.
    pub fn eliminate(&mut self) -> usize {
        let mut rank = 0;
        for c in 0..self.cols {
            let word = c / 64;
            let bit = 1u64 << (c % 64);
            let Some(pivot) =
                (rank..self.rows).find(|&r| self.data[r * self.words_per_row + word] & bit != 0)
            else {
                continue;
            };
            self.swap_rows(rank, pivot);
            for r in 0..self.rows {
                if r != rank && self.data[r * self.words_per_row + word] & bit != 0 {
                    self.xor_row(rank, r);
                }
            }
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        rank
    }

    pub fn rank(&self) -> usize {
        self.clone().eliminate()
    }

    /// Inverse of a square matrix, or `None` when singular.
    pub fn inverse(&self) -> Option<BitMatrix> {
        assert_eq!(self.rows, self.cols, "inverse of a non-square matrix");
        let n = self.rows;
        let mut aug = BitMatrix::zeros(n, 2 * n);
        for r in 0..n {
            for c in iter_ones(self.row(r)) {
                aug.set(r, c, true);
            }
            aug.set(r, n + r, true);
        }
        for c in 0..n {
            let pivot = (c..n).find(|&r| aug.get(r, c))?;
            aug.swap_rows(c, pivot);
            for r in 0..n {
                if r != c && aug.get(r, c) {
                    aug.xor_row(c, r);
                }
            }
        }
        Some(BitMatrix::from_fn(n, n, |r, c| aug.get(r, n + c)))
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == BitMatrix::identity(self.rows)
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols && *self == self.transpose()
    }

    /// Sum of two matrices of equal shape.
    pub fn add(&self, other: &BitMatrix) -> BitMatrix {
        assert!(self.rows == other.rows && self.cols == other.cols);
        let mut out = self.clone();
        for (a, b) in out.data.iter_mut().zip(&other.data) {
            *a ^= b;
        }
        out
    }

    /// Copies `block` into this matrix with its top-left corner at `(r0, c0)`.
    pub fn set_block(&mut self, r0: usize, c0: usize, block: &BitMatrix) {
        for r in 0..block.rows {
            for c in 0..block.cols {
                self.set(r0 + r, c0 + c, block.get(r, c));
            }
        }
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BitMatrix {}x{} [", self.rows, self.cols)?;
        for r in 0..self.rows {
            write!(f, "  ")?;
            for c in 0..self.cols {
                f.write_str(if self.get(r, c) { "1" } else { "0" })?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

/// Iterates over the indices of set bits in a packed bit slice.
pub fn iter_ones(words: &[u64]) -> impl Iterator<Item = usize> + '_ {
    words.iter().enumerate().flat_map(|(i, &w)| {
        let mut w = w;
        core::iter::from_fn(move || {
            if w == 0 {
                None
            } else {
                let t = w.trailing_zeros() as usize;
                w &= w - 1;
                Some(i * 64 + t)
            }
        })
    })
}
