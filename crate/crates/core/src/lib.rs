//! Exact construction and verification of simultaneous rational
//! approximations `p_{n,mu} / q_n` to values of complete Bell polynomials at
//! points built from Euler's constant and zeta values.
//!
//! Module map:
//! - [`numerics`]: rationals, fixed-point reals, reference values of γ, ζ(m), π
//! - [`symring`]: polynomials over Q in the symbols `g`, `z2`, ..., `zM`
//! - [`bell`]: complete Bell polynomials over any [`ring::Ring`]
//! - [`powerseries`], [`polyq`]: truncated series and polynomials over Q
//! - [`bernoulli`]: generalized Bernoulli polynomials
//! - [`sequences`]: the approximation sequences and their exact identities
//! - [`asymptotics`]: exponent coefficients, growth rates, saddle roots

pub mod asymptotics;
pub mod bell;
pub mod bernoulli;
pub mod error;
pub mod numerics;
pub mod polyq;
pub mod powerseries;
pub mod ring;
pub mod sequences;
pub mod symring;

pub use error::{Error, Result};
pub use num_bigint::BigInt;
pub use numerics::{BigFix, Rat};
pub use polyq::PolyQ;
pub use powerseries::SeriesQ;
pub use symring::SymPoly;
