//! Zero tables and the explicit formula for Riesz(x) in terms of zeta zeros.

pub mod expansion;
pub mod table;

pub use expansion::{
    bracket_zeros, envelope_tail, g_function, g_terms_needed, reconstruct_riesz, zero_term,
    zero_term_at, zeta_prime_at, DerivativeEstimate, GValue, Reconstruction, DEFAULT_BRACKET_K,
    ENVELOPE_CONSTANT, MIN_RECONSTRUCTION_X, MULTIPLE_ZERO_THRESHOLD,
};
pub use table::{load_zeros, parse_zeros, ZeroRecord, ZeroTable};

/// The first hundred zeros with ζ'(ρ), 50 significant digits each.
pub const BUNDLED_ZEROS: &str = include_str!("../../data/zeros_100.txt");

pub fn bundled_zeros() -> ZeroTable {
    parse_zeros(BUNDLED_ZEROS, "bundled").expect("bundled zero table parses")
}
