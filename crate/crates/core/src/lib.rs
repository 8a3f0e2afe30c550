//! Zeros of Dirichlet L-functions on the critical line and the sum of
//! `L'(rho, chi)` over them.
//!
//! The crate is organised bottom-up:
//!
//! - [`characters`]: Dirichlet characters, conductors, Gauss sums.
//! - [`analytic`]: Hurwitz zeta by Euler-Maclaurin, log-gamma, Bernoulli
//!   numbers, Stieltjes constants.
//! - [`lfunc`]: `L`, `L'`, `L'/L`, the functional-equation factor, the
//!   approximate functional equation and the rotated real function `Z`.
//! - [`zeros`]: critical-line zero scanning with an argument-principle
//!   completeness certificate.
//! - [`zerosum`]: the asymptotic main term, empirical sums over zeros, and
//!   remainder reports.

#![allow(clippy::neg_cmp_op_on_partial_ord, clippy::needless_range_loop)]

pub mod analytic;
mod arith;
pub mod characters;
pub mod error;
pub mod lfunc;
pub mod summation;
pub mod zeros;
pub mod zerosum;

pub use arith::{euler_phi, factorize, gcd, prime_divisors};
pub use error::{Error, Result};
pub use num_complex::Complex64;

/// Complex argument type used throughout; always finite on output.
pub type ComplexValue = Complex64;
