use rug::ops::Pow;
use rug::Float;

use super::provider::{inflate, CoefficientProvider};
use super::reduce::chunked_sum;
use super::remainder::remainder_f;
use super::{EvaluationResult, Method, SeriesParams};
use crate::error::{domain, Result};
use crate::numtheory::complex::pow2;
use crate::GUARD_BITS;

/// x Σ_{n≤n_max} a(n) n^{−c} exp(−x/n^c), with tail bound |x| Σ_{n>n_max} |a(n)| n^{−c}.
pub fn theorem1_series(
    provider: &dyn CoefficientProvider,
    c: f64,
    x: &Float,
    n_max: u64,
    prec: u32,
) -> Result<EvaluationResult> {
    exponential_sum(provider, c, x, 0, n_max, 0, prec, Method::Theorem1)
}

/// Kummer-accelerated form: Σ_{k≤m} (−1)^{k+1} f(ck) x^k/(k−1)! + x Σ_{n≤n_max} a(n) n^{−c} F_m(−x/n^c).
///
/// Since |F_m(−u)| ≤ u^m/m! for u ≥ 0, the omitted terms are bounded by
/// |x|^{m+1}/m! · Σ_{n>n_max} |a(n)| n^{−c(m+1)}. With m = 0 this is exactly
/// [`theorem1_series`].
pub fn kummer_series(
    provider: &dyn CoefficientProvider,
    c: f64,
    x: &Float,
    m: u32,
    n_max: u64,
    prec: u32,
) -> Result<EvaluationResult> {
    exponential_sum(provider, c, x, m, n_max, 0, prec, Method::Kummer)
}

/// The transform of the shifted series f(s + jc): x Σ a(n) n^{−c(1+j)} exp(−x/n^c), in Kummer
/// form with head Σ_{k≤m} (−1)^{k+1} f(c(k+j)) x^k/(k−1)!. With j = 0 this is [`kummer_series`].
pub fn shifted_kummer_series(
    provider: &dyn CoefficientProvider,
    c: f64,
    shift: u32,
    x: &Float,
    m: u32,
    n_max: u64,
    prec: u32,
) -> Result<EvaluationResult> {
    exponential_sum(provider, c, x, m, n_max, shift, prec, Method::Kummer)
}

pub(crate) fn check_domain(provider: &dyn CoefficientProvider, c: f64, x: &Float) -> Result<()> {
    if c.is_nan() || c <= 0.0 || c.is_infinite() {
        return domain(format!("c must be a positive constant, got {c}"));
    }
    if c <= provider.sigma() {
        return domain(format!(
            "c = {c} does not exceed the abscissa of absolute convergence {} of '{}'",
            provider.sigma(),
            provider.name()
        ));
    }
    if x.is_sign_negative() && !x.is_zero() || x.is_nan() || x.is_infinite() {
        return domain("the exponential-sum routes need finite x >= 0");
    }
    Ok(())
}

/// log₂ max(1, A·|f|_sup·max(x, max_k x^k/(k−1)!)): the scale at which head and tail cancel.
fn cancellation_bits(x: f64, m: u32, magnitude: f64) -> u32 {
    let lx = x.ln();
    let mut best = lx; // k = 1
    let mut log_term = lx;
    for k in 2..=m {
        log_term += lx - ((k - 1) as f64).ln();
        best = best.max(log_term);
    }
    let bits = best * std::f64::consts::LOG2_E + magnitude.max(1.0).log2();
    bits.max(0.0).ceil() as u32
}

#[allow(clippy::too_many_arguments)]
fn exponential_sum(
    provider: &dyn CoefficientProvider,
    c: f64,
    x: &Float,
    m: u32,
    n_max: u64,
    shift: u32,
    prec: u32,
    method: Method,
) -> Result<EvaluationResult> {
    check_domain(provider, c, x)?;
    if n_max == 0 {
        return domain("n_max must be at least 1");
    }
    let params = SeriesParams {
        c,
        m,
        n_max,
        precision_bits: prec,
    };
    if x.is_zero() {
        return Ok(EvaluationResult::exact_zero(params, method));
    }

    let scale = provider.envelope().scale.max(1.0) * provider.magnitude_bound(c).max(1.0);
    let count = m as u64 + n_max + 16;
    let count_bits = 64 - count.leading_zeros();
    let wp = prec + GUARD_BITS + cancellation_bits(x.to_f64(), m, scale) + count_bits;
    let xw = Float::with_val(wp, x);

    // explicit head
    let mut head = Float::new(wp);
    let mut head_abs = Float::new(wp);
    if m > 0 {
        let all = provider.dirichlet_values(c, m + shift, wp)?;
        let f_values = &all[shift as usize..];
        let mut power = Float::with_val(wp, &xw); // x^k/(k−1)!
        for (i, f) in f_values.iter().enumerate() {
            let k = i as u32 + 1;
            if k > 1 {
                power *= &xw;
                power /= k - 1;
            }
            let mut term = Float::with_val(wp, &power * f);
            if k.is_multiple_of(2) {
                term = -term;
            }
            head_abs += Float::with_val(wp, term.abs_ref());
            head += term;
        }
    }

    // accelerated tail
    let coeffs = provider.coefficients(n_max)?;
    let integral_c = c.fract() == 0.0 && c <= u32::MAX as f64;
    let c_float = Float::with_val(wp, c);
    let weight_power = shift + 1;
    let (tail, tail_abs) = chunked_sum(n_max, wp, |n| {
        let a = coeffs[(n - 1) as usize];
        if a == 0 {
            return None;
        }
        let n_pow_c = if integral_c {
            Float::with_val(wp, n).pow(c as u32)
        } else {
            (Float::with_val(wp, n).ln() * &c_float).exp()
        };
        let u = Float::with_val(wp, &xw / &n_pow_c);
        let f = remainder_f(&(-u), m, wp);
        let weight = if weight_power == 1 {
            n_pow_c
        } else {
            n_pow_c.pow(weight_power)
        };
        Some(f * &xw / weight * a)
    });

    let value_wp = head + tail;
    let value = Float::with_val(prec, &value_wp);

    let truncation = kummer_tail_bound(provider, c, x, m, n_max, shift);
    let nonzero = coeffs.iter().filter(|&&a| a != 0).count() as u64;
    let abs_sum = Float::with_val(64, &head_abs + &tail_abs);
    // final rounding to prec, scaled by |R_c(x)| ≤ |x| Σ |a(n)| n^{−c} so it cannot grow with n_max
    let mut magnitude = Float::with_val(64, x.abs_ref())
        * (provider.tail_sum_bound(1, c) + provider.envelope().scale.max(1.0));
    if !magnitude.is_finite() {
        magnitude = Float::with_val(64, value.abs_ref()) * 2u32;
    }
    // internal rounding is reported as at least a fixed budget, which the guard bits keep it under
    let internal = abs_sum * (nonzero + m as u64 + 16) * pow2(64, 3 - wp as i64);
    let budget = Float::with_val(64, &magnitude * pow2(64, -(prec as i64) - 4));
    let rounding = internal.max(&budget) + magnitude * pow2(64, 1 - prec as i64);
    Ok(EvaluationResult {
        value,
        error_bound: inflate(truncation + rounding),
        params,
        method,
    })
}

/// |x|^{m+1}/m! · Σ_{n>n_max} |a(n)| n^{−c(m+1+shift)}.
pub(crate) fn kummer_tail_bound(
    provider: &dyn CoefficientProvider,
    c: f64,
    x: &Float,
    m: u32,
    n_max: u64,
    shift: u32,
) -> Float {
    let ax = Float::with_val(64, x.abs_ref());
    if ax.is_zero() {
        return Float::new(64);
    }
    let tail = provider.tail_sum_bound(n_max, c * (m as f64 + 1.0 + shift as f64));
    if tail.is_zero() {
        return tail;
    }
    let pow = ax.pow(m + 1);
    let fact = Float::with_val(64, Float::factorial(m));
    inflate(pow / fact * tail)
}
