use rug::Float;

use super::exponential::{check_domain, kummer_tail_bound};
use super::provider::{CoefficientProvider, MobiusProvider};
use super::SeriesParams;
use crate::error::{domain, Result, RieszError};

const MAX_ORDER: u32 = 4096;

/// Kummer-route parameters for |a(n)| ≤ 1 coefficients (the Möbius case).
pub fn plan_truncation(x: &Float, c: f64, tolerance: &Float) -> Result<SeriesParams> {
    plan_truncation_for(&MobiusProvider, x, c, tolerance)
}

/// Chooses n_max = ⌈x^{1/c}⌉, so every omitted term has x/n^c < 1, and then the smallest
/// order m whose truncation bound is below tolerance/2. The precision leaves the other half
/// of the tolerance for rounding.
pub fn plan_truncation_for(
    provider: &dyn CoefficientProvider,
    x: &Float,
    c: f64,
    tolerance: &Float,
) -> Result<SeriesParams> {
    plan_shifted(provider, x, c, 0, tolerance)
}

/// Planner for [`shifted_kummer_series`](super::shifted_kummer_series).
pub fn plan_shifted(
    provider: &dyn CoefficientProvider,
    x: &Float,
    c: f64,
    shift: u32,
    tolerance: &Float,
) -> Result<SeriesParams> {
    if tolerance.is_nan() || *tolerance <= 0 {
        return domain("tolerance must be positive");
    }
    check_domain(provider, c, x)?;
    let xf = x.to_f64();
    let tol_log2 = tolerance.to_f64().log2();
    let precision_bits = ((xf.max(1.0).log2() - tol_log2).ceil() as i64 + 16).max(64) as u32;
    if x.is_zero() {
        return Ok(SeriesParams {
            c,
            m: 1,
            n_max: 1,
            precision_bits,
        });
    }
    let n_max = (xf.powf(1.0 / c).ceil() as u64).max(1);
    let half = Float::with_val(64, tolerance / 2u32);
    for m in 1..=MAX_ORDER {
        if kummer_tail_bound(provider, c, x, m, n_max, shift) < half {
            return Ok(SeriesParams {
                c,
                m,
                n_max,
                precision_bits,
            });
        }
    }
    Err(RieszError::Planner(format!(
        "no acceleration order up to {MAX_ORDER} reaches the tolerance at x = {xf}"
    )))
}

/// The truncation part of the Kummer error bound for given parameters.
pub fn kummer_truncation_bound(
    provider: &dyn CoefficientProvider,
    x: &Float,
    params: &SeriesParams,
) -> Float {
    kummer_tail_bound(provider, params.c, x, params.m, params.n_max, 0)
}
