//! Bent Boolean functions and their Cayley graphs.
//!
//! The crate classifies bent functions into extended-Cayley classes by exact
//! canonical labeling of their Cayley graphs, and checks the links between
//! bent functions, strongly regular graphs, projective two-weight codes and
//! symmetric-difference-property designs.
//!
//! Everything here is pure computation over immutable values. The crate is
//! `no_std` (with `alloc`) when the default `std` feature is disabled; the
//! `std` feature only adds a thread pool to [`equivalence::classify_et_class`].

#![cfg_attr(not(feature = "std"), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod anf;
pub mod bits;
pub mod boolean_fn;
pub mod catalog;
pub mod codes;
pub mod equivalence;
mod error;
pub mod graph;
pub mod sequences;

pub use crate::anf::{parse_anf, Anf};
pub use crate::bits::BitMatrix;
pub use crate::boolean_fn::{BooleanFunction, EgaElement, WalshSpectrum};
pub use crate::codes::{BinaryLinearCode, BlockDesign};
pub use crate::equivalence::Classification;
pub use crate::error::Error;
pub use crate::graph::{CanonicalForm, CliquePolynomial, DenseGraph, SrgParams};

/// Result alias used throughout the crate.
pub type Result<T, E = Error> = core::result::Result<T, E>;
