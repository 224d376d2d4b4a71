//! Exact computations around link symmetric functions.
//!
//! The crate computes the triply graded Poincaré series `f_v(q, a, t)`
//! indexed by binary words `v` by four independent routes (a recurrence,
//! a finite sum over barred Fubini words, a truncated sum over all level
//! words and Hall inner products of `L_v`), evaluates the link symmetric
//! functions `L_v` and their normalizations, and checks their conjectured
//! relations with the modified Macdonald eigenoperators `∇` and `Δ_F`.
//!
//! All arithmetic is exact: coefficients are arbitrary-precision integers
//! and rational functions live either in `Z[q,a,t][(1-q)^-1]`
//! ([`RationalQAT`]) or in `Q(q,t)` ([`RatFuncQT`]).

pub mod cli;
pub mod conjectures;
pub mod error;
pub mod linalg;
pub mod macdonald;
pub mod poincare;
pub mod qt_arith;
pub mod symfunc;
pub mod words;

pub use error::{Error, Result};
pub use qt_arith::{Mono, PolyQAT, RatFuncQT, RationalQAT};
pub use words::{BarredWord, BinaryWord, Label, LabelWord, LevelWord};
