//! High-precision evaluation of the Riesz function
//! `Riesz(x) = Σ_{k≥1} (−1)^{k+1} x^k / ((k−1)! ζ(2k))` and of the transforms
//! `R_c(x) = Σ_{k≥1} (−1)^{k+1} f(ck) x^k / (k−1)!` of Dirichlet series `f(s) = Σ a_n n^{−s}`.
//!
//! Three routes are available and cross-checked against one another: the rational-coefficient
//! Maclaurin series, the exponential sum `x Σ a_n n^{−c} e^{−x/n^c}`, and its Kummer-accelerated
//! form. The [`zeros`] module rebuilds `Riesz(x)` from nontrivial zeta zeros.

pub mod api;
pub mod error;
pub mod numtheory;
pub mod series;
pub mod zeros;

pub use error::{Result, RieszError};
pub use numtheory::{BigComplex, BigReal};

/// Guard bits carried beyond every requested precision.
pub const GUARD_BITS: u32 = 32;

/// Bits needed to carry `digits` significant decimal digits, guard included.
pub fn digits_to_bits(digits: u32) -> u32 {
    (digits as f64 * std::f64::consts::LOG2_10).ceil() as u32 + GUARD_BITS
}
