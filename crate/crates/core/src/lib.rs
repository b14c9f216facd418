//! Exact invariants of closed 3-braids.
//!
//! Jones and Alexander polynomials are computed from the trace of the reduced
//! Burau representation, braid words are reduced to Schreier's conjugacy
//! normal form, and closed 3-braid knots are classified as L-space knots or
//! not, with the Alexander-polynomial obstructions available as an
//! independent check.

pub mod braid;
pub mod burau;
pub mod census;
pub mod coefficients;
pub mod error;
pub mod invariants;
pub mod laurent;
pub mod lspace;
pub mod schreier;
pub mod selfcheck;

pub use braid::{BraidWord, Letter, ParseError, Permutation3};
pub use burau::{burau, BurauMatrix};
pub use error::{Error, Result};
pub use laurent::HalfLaurentPoly;
pub use lspace::{classify, obstruct, Verdict};
pub use schreier::{normalize, SchreierForm};
