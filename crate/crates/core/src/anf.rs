//! Algebraic normal form and its text syntax.
//!
//! Text form: terms joined by `+`, products by `*`, variables `x0`..`x{n-1}`
//! and an optional constant `1`. Whitespace is ignored, so
//! `"x0*x1 + x2*x3"` and `"x0*x1+x2*x3"` are the same function. Repeated
//! terms cancel and repeated variables inside a product collapse.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::boolean_fn::{moebius_in_place, BooleanFunction, MAX_VARS};
use crate::{Error, Result};

/// Reduced multilinear polynomial over GF(2).
///
/// Each monomial is a bitmask over the variables; the empty mask is the
/// constant term.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Anf {
    n: usize,
    monomials: Vec<u32>,
}

impl Anf {
    pub(crate) fn from_sorted_masks(n: usize, monomials: Vec<u32>) -> Self {
        Anf { n, monomials }
    }

    /// Builds a reduced form from arbitrary monomials; duplicates cancel in pairs.
    pub fn from_monomials(n: usize, monomials: impl IntoIterator<Item = u32>) -> Result<Self> {
        if n == 0 || n > MAX_VARS {
            return Err(Error::InvalidArgument(alloc::format!(
                "variable count {n} out of range"
            )));
        }
        let mut ms: Vec<u32> = Vec::new();
        for m in monomials {
            if m >> n != 0 {
                return Err(Error::VariableOutOfRange {
                    index: (31 - m.leading_zeros()) as usize,
                    n,
                });
            }
            ms.push(m);
        }
        ms.sort_unstable();
        let mut reduced: Vec<u32> = Vec::with_capacity(ms.len());
        for m in ms {
            if reduced.last() == Some(&m) {
                reduced.pop();
            } else {
                reduced.push(m);
            }
        }
        Ok(Anf {
            n,
            monomials: reduced,
        })
    }

    pub fn num_vars(&self) -> usize {
        self.n
    }

    /// Monomials as variable bitmasks, in increasing mask order.
    pub fn monomials(&self) -> &[u32] {
        &self.monomials
    }

    /// Size of the largest monomial; 0 for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.monomials
            .iter()
            .map(|m| m.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    pub fn to_function(&self) -> BooleanFunction {
        let mut table = BooleanFunction::zero(self.n);
        for &m in &self.monomials {
            table.set(m as usize, true);
        }
        let mut words = table.words().to_vec();
        moebius_in_place(self.n, &mut words);
        BooleanFunction::from_words(self.n, words)
    }

    /// Monomials in display order: exponent vectors `(e_0, e_1, ...)` in
    /// decreasing lexicographic order, so the constant comes last.
    pub fn display_order(&self) -> Vec<u32> {
        let mut ms = self.monomials.clone();
        ms.sort_unstable_by_key(|m| core::cmp::Reverse(m.reverse_bits()));
        ms
    }
}

impl fmt::Display for Anf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.monomials.is_empty() {
            return f.write_str("0");
        }
        for (i, m) in self.display_order().into_iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if m == 0 {
                f.write_str("1")?;
                continue;
            }
            for (j, var) in crate::bits::iter_ones(&[u64::from(m)]).enumerate() {
                if j > 0 {
                    f.write_str("*")?;
                }
                write!(f, "x{var}")?;
            }
        }
        Ok(())
    }
}

/// Renders a function's ANF in the text syntax accepted by [`parse_anf`].
pub fn render(f: &BooleanFunction) -> String {
    alloc::format!("{}", f.anf())
}

/// Parses the ANF text syntax into a function on `n` variables.
pub fn parse_anf(text: &str, n: usize) -> Result<BooleanFunction> {
    Ok(parse_anf_terms(text, n)?.to_function())
}

/// Parses the ANF text syntax into a reduced [`Anf`].
pub fn parse_anf_terms(text: &str, n: usize) -> Result<Anf> {
    if n == 0 || n > MAX_VARS {
        return Err(Error::InvalidArgument(alloc::format!(
            "variable count {n} out of range 1..={MAX_VARS}"
        )));
    }
    let mut parser = Parser {
        chars: text.char_indices().peekable(),
        text,
    };
    let mut monomials = Vec::new();
    parser.skip_ws();
    if parser.at_end() {
        return Err(parser.error("empty expression"));
    }
    loop {
        // A term containing the literal 0 vanishes.
        if let Some(m) = parser.term(n)? {
            monomials.push(m);
        }
        parser.skip_ws();
        match parser.next() {
            None => break,
            Some((_, '+')) => continue,
            Some((pos, c)) => {
                return Err(Error::Parse {
                    column: col(text, pos),
                    message: alloc::format!("expected '+' but found '{c}'"),
                })
            }
        }
    }
    Anf::from_monomials(n, monomials)
}

fn col(text: &str, byte_pos: usize) -> usize {
    text[..byte_pos].chars().count() + 1
}

struct Parser<'a> {
    chars: core::iter::Peekable<core::str::CharIndices<'a>>,
    text: &'a str,
}

impl Parser<'_> {
    fn skip_ws(&mut self) {
        while matches!(self.chars.peek(), Some((_, c)) if c.is_whitespace()) {
            self.chars.next();
        }
    }

    fn at_end(&mut self) -> bool {
        self.chars.peek().is_none()
    }

    fn next(&mut self) -> Option<(usize, char)> {
        self.chars.next()
    }

    fn pos(&mut self) -> usize {
        self.chars.peek().map_or(self.text.len(), |&(p, _)| p)
    }

    fn error(&mut self, message: &str) -> Error {
        let pos = self.pos();
        Error::Parse {
            column: col(self.text, pos),
            message: message.into(),
        }
    }

    /// A product of factors; `None` when a factor is the literal 0.
    fn term(&mut self, n: usize) -> Result<Option<u32>> {
        let mut mask = 0u32;
        let mut zero = false;
        loop {
            self.skip_ws();
            match self.factor(n)? {
                Factor::One => {}
                Factor::Zero => zero = true,
                Factor::Var(v) => mask |= 1 << v,
            }
            self.skip_ws();
            if matches!(self.chars.peek(), Some((_, '*'))) {
                self.chars.next();
            } else {
                break;
            }
        }
        Ok(if zero { None } else { Some(mask) })
    }

    fn factor(&mut self, n: usize) -> Result<Factor> {
        match self.chars.peek().copied() {
            Some((_, 'x')) | Some((_, 'X')) => {
                self.chars.next();
                let start = self.pos();
                let mut index: usize = 0;
                let mut digits = 0;
                while let Some(&(_, c)) = self.chars.peek() {
                    let Some(d) = c.to_digit(10) else { break };
                    index = index.saturating_mul(10).saturating_add(d as usize);
                    digits += 1;
                    self.chars.next();
                }
                if digits == 0 {
                    return Err(Error::Parse {
                        column: col(self.text, start),
                        message: "expected a variable index after 'x'".into(),
                    });
                }
                if index >= n {
                    return Err(Error::VariableOutOfRange { index, n });
                }
                Ok(Factor::Var(index))
            }
            Some((_, '1')) => {
                self.chars.next();
                self.reject_trailing_digits()?;
                Ok(Factor::One)
            }
            Some((_, '0')) => {
                self.chars.next();
                self.reject_trailing_digits()?;
                Ok(Factor::Zero)
            }
            Some((pos, c)) => Err(Error::Parse {
                column: col(self.text, pos),
                message: alloc::format!("unexpected '{c}'"),
            }),
            None => Err(self.error("unexpected end of input")),
        }
    }

    fn reject_trailing_digits(&mut self) -> Result<()> {
        if matches!(self.chars.peek(), Some((_, c)) if c.is_ascii_digit()) {
            return Err(self.error("only the constants 0 and 1 are allowed"));
        }
        Ok(())
    }
}

enum Factor {
    One,
    Zero,
    Var(usize),
}
