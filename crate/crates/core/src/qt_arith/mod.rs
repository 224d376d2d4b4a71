//! Exact arithmetic in `Z[q, a, t]`, in `Z[q, a, t][(1 - q)^-1]` and in `Q(q, t)`.

mod dense;
pub mod emit;
mod poly;
mod ratfunc;
mod rational;

pub use dense::{div_exact, gcd};
pub use poly::{Mono, PolyQAT};
pub use ratfunc::{common_denominator, RatFuncQT};
pub use rational::RationalQAT;
