//! Number-theoretic primitives: Möbius values, Bernoulli numbers, ζ and log Γ.

pub mod bernoulli;
pub mod complex;
pub mod gamma;
pub mod mobius;
pub mod zeta;

pub use bernoulli::{bernoulli_coefficients, bernoulli_even, tangent_numbers};
pub use complex::{BigComplex, BigReal};
pub use gamma::{gamma_complex, gauss_pi, log_gamma_complex};
pub use mobius::{mobius_sieve, MobiusTable};
pub use zeta::{
    completed_zeta, complex_zeta, zeta_even, zeta_even_table, zeta_odd, zeta_odd_table, zeta_real,
};
