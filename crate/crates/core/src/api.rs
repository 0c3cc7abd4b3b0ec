//! User-facing evaluation of Riesz(x) and R_c(x).

use rayon::prelude::*;
use rug::Float;

use crate::error::{domain, Result, RieszError};
use crate::numtheory::complex::pow2;
use crate::series::provider::inflate;
use crate::series::{
    kummer_series, maclaurin_riesz, maclaurin_terms_needed, plan_shifted, plan_truncation_for,
    shifted_kummer_series, theorem1_series, CoefficientProvider, EvaluationResult, Method,
    MobiusProvider,
};

/// Method requested by a caller; `Auto` picks Maclaurin for small x and Kummer otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum MethodChoice {
    #[default]
    Auto,
    Fixed(Method),
}

impl std::str::FromStr for MethodChoice {
    type Err = RieszError;

    fn from_str(s: &str) -> Result<Self> {
        if s == "auto" {
            Ok(MethodChoice::Auto)
        } else {
            s.parse().map(MethodChoice::Fixed)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RieszConfig {
    /// Auto mode uses the Maclaurin series for x ≤ this threshold.
    pub maclaurin_threshold: f64,
    /// Largest cutoff a forced plain exponential sum may use.
    pub theorem1_max_terms: u64,
}

impl Default for RieszConfig {
    fn default() -> Self {
        Self {
            maclaurin_threshold: 32.0,
            theorem1_max_terms: 10_000_000,
        }
    }
}

#[derive(Debug, Clone)]
pub struct RieszQuery {
    pub x: Float,
    pub tolerance: Float,
    pub method: MethodChoice,
}

impl RieszQuery {
    pub fn new(x: Float, tolerance: Float, method: MethodChoice) -> Result<Self> {
        if x.is_nan() || x.is_infinite() || (x.is_sign_negative() && !x.is_zero()) {
            return domain("Riesz queries need finite x >= 0");
        }
        if tolerance.is_nan() || tolerance <= 0 {
            return domain("tolerance must be positive");
        }
        Ok(Self {
            x,
            tolerance,
            method,
        })
    }
}

/// Output precision that resolves `tolerance` on values of size up to max(1, x).
pub fn precision_for(x: &Float, tolerance: &Float) -> u32 {
    let lx = x.to_f64().abs().max(1.0).log2();
    let lt = tolerance.to_f64().log2();
    ((lx - lt).ceil() as i64 + 16).max(64) as u32
}

pub fn riesz(query: &RieszQuery) -> Result<EvaluationResult> {
    riesz_with(query, &RieszConfig::default())
}

/// Riesz(x) with error_bound ≤ tolerance.
pub fn riesz_with(query: &RieszQuery, config: &RieszConfig) -> Result<EvaluationResult> {
    let RieszQuery {
        x,
        tolerance,
        method,
    } = query;
    let prec = precision_for(x, tolerance).max(x.prec());
    let method = match method {
        MethodChoice::Fixed(m) => *m,
        MethodChoice::Auto if x.to_f64() <= config.maclaurin_threshold => Method::Maclaurin,
        MethodChoice::Auto => Method::Kummer,
    };
    let result = match method {
        Method::Maclaurin => {
            let terms = maclaurin_terms_needed(x, tolerance)?;
            maclaurin_riesz(x, terms, prec)?
        }
        Method::Kummer => riesz_general(&MobiusProvider, 2.0, x, tolerance)?,
        Method::Theorem1 => {
            // |x| Σ_{n>N} n^{−2} < |x|/N ≤ tol/2
            let needed = (Float::with_val(64, x * 2u32) / tolerance).ceil();
            let n_max = needed.to_f64().max(1.0);
            if n_max > config.theorem1_max_terms as f64 {
                return Err(RieszError::Planner(format!(
                    "the plain exponential sum needs about {n_max:e} terms for this tolerance \
                     (limit {}); use the kummer method",
                    config.theorem1_max_terms
                )));
            }
            theorem1_series(&MobiusProvider, 2.0, x, n_max as u64, prec)?
        }
    };
    ensure_within(result, tolerance)
}

fn ensure_within(result: EvaluationResult, tolerance: &Float) -> Result<EvaluationResult> {
    if result.error_bound > *tolerance {
        return Err(RieszError::Planner(format!(
            "{} route reached only {:e} against tolerance {:e}",
            result.method,
            result.error_bound.to_f64(),
            tolerance.to_f64()
        )));
    }
    Ok(result)
}

/// R_c(x) for a general Dirichlet series, by the Kummer route with planned parameters.
pub fn riesz_general(
    provider: &dyn CoefficientProvider,
    c: f64,
    x: &Float,
    tolerance: &Float,
) -> Result<EvaluationResult> {
    let params = plan_truncation_for(provider, x, c, tolerance)?;
    let prec = params.precision_bits.max(x.prec());
    let result = kummer_series(provider, c, x, params.m, params.n_max, prec)?;
    ensure_within(result, tolerance)
}

/// R_c'(x) = R_c(x)/x − x Σ a(n) n^{−2c} e^{−x/n^c}, from differentiating the exponential sum
/// term by term. The subtracted series is the transform of f(s + c); it coincides with R_{2c}
/// only when a(n) vanishes for n > 1. Each part is evaluated to half the tolerance.
pub fn riesz_derivative(
    provider: &dyn CoefficientProvider,
    c: f64,
    x: &Float,
    tolerance: &Float,
) -> Result<EvaluationResult> {
    if x.is_nan() || *x <= 0 {
        return domain("the derivative identity needs x > 0");
    }
    if tolerance.is_nan() || *tolerance <= 0 {
        return domain("tolerance must be positive");
    }
    let half = Float::with_val(64, tolerance / 2u32);
    let scaled_tol = Float::with_val(64, &half * x) * 0.5f64;
    let rc = riesz_general(provider, c, x, &scaled_tol)?;
    let shifted = shifted_transform(provider, c, x, &half)?;
    let prec = rc.value.prec().max(shifted.value.prec());
    let value = Float::with_val(prec, &rc.value / x) - &shifted.value;
    let bound = Float::with_val(64, &rc.error_bound / x)
        + &shifted.error_bound
        + Float::with_val(64, value.abs_ref()) * pow2(64, 3 - prec as i64);
    let mut params = rc.params;
    params.precision_bits = prec;
    Ok(EvaluationResult {
        value,
        error_bound: inflate(bound),
        params,
        method: rc.method,
    })
}

/// x Σ a(n) n^{−2c} e^{−x/n^c} to the given tolerance.
pub fn shifted_transform(
    provider: &dyn CoefficientProvider,
    c: f64,
    x: &Float,
    tolerance: &Float,
) -> Result<EvaluationResult> {
    let params = plan_shifted(provider, x, c, 1, tolerance)?;
    let prec = params.precision_bits.max(x.prec());
    let result = shifted_kummer_series(provider, c, 1, x, params.m, params.n_max, prec)?;
    ensure_within(result, tolerance)
}

/// One row of a growth scan. `scaled_value` = value / x^{1/(2c)}.
#[derive(Debug, Clone)]
pub struct ScanRow {
    pub x: Float,
    pub riesz_value: Float,
    pub scaled_value: Float,
    pub error_bound: Float,
}

/// x_min·(x_max/x_min)^{i/(steps−1)} for i = 0..steps, endpoints exact.
pub fn geometric_grid(x_min: &Float, x_max: &Float, steps: usize, prec: u32) -> Result<Vec<Float>> {
    if steps < 2 {
        return domain("a scan needs at least 2 steps");
    }
    if x_min.is_nan() || x_max.is_nan() || *x_min <= 0 || *x_max <= *x_min || x_max.is_infinite() {
        return domain("a scan needs 0 < x_min < x_max");
    }
    let lo = Float::with_val(prec, x_min.ln_ref());
    let hi = Float::with_val(prec, x_max.ln_ref());
    let span = Float::with_val(prec, &hi - &lo);
    Ok((0..steps)
        .map(|i| {
            if i == 0 {
                Float::with_val(prec, x_min)
            } else if i == steps - 1 {
                Float::with_val(prec, x_max)
            } else {
                let frac = Float::with_val(prec, i) / (steps - 1) as u64;
                (frac * &span + &lo).exp()
            }
        })
        .collect())
}

/// Diagnostic growth table of R_c for f = 1/ζ over a geometric grid.
///
/// Rows are independent and evaluated on the current rayon pool; their order follows x.
pub fn rh_scan(
    x_min: &Float,
    x_max: &Float,
    steps: usize,
    c: f64,
    tolerance: &Float,
) -> Result<Vec<ScanRow>> {
    let prec = precision_for(x_max, tolerance);
    let grid = geometric_grid(x_min, x_max, steps, prec)?;
    let exponent = Float::with_val(prec, 1) / Float::with_val(prec, 2.0 * c);
    grid.into_par_iter()
        .map(|x| {
            let result = if c == 2.0 {
                riesz(&RieszQuery::new(
                    x.clone(),
                    tolerance.clone(),
                    MethodChoice::Auto,
                )?)?
            } else {
                riesz_general(&MobiusProvider, c, &x, tolerance)?
            };
            let p = result.value.prec();
            let denom = (Float::with_val(p, x.ln_ref()) * &exponent).exp();
            let scaled_value = Float::with_val(p, &result.value / &denom);
            Ok(ScanRow {
                x,
                riesz_value: result.value,
                scaled_value,
                error_bound: result.error_bound,
            })
        })
        .collect()
}
