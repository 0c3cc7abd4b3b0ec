use rug::float::Constant;
use rug::ops::Pow;
use rug::{Float, Rational};

use super::provider::inflate;
use super::{EvaluationResult, Method, SeriesParams};
use crate::error::{domain, Result, RieszError};
use crate::numtheory::bernoulli_coefficients;
use crate::numtheory::complex::pow2;

/// Exact coefficients of Riesz(4π² y) = Σ_{k≥1} a_k y^k, a_k = 2/(c_{2k} (k−1)!).
///
/// Halving them gives the familiar 12, −720, 15120, …
pub fn riesz_maclaurin_coefficients(count: usize) -> Vec<Rational> {
    let c = bernoulli_coefficients(count + 1);
    let mut fact = rug::Integer::from(1); // (k−1)!
    c.iter()
        .skip(1)
        .enumerate()
        .map(|(i, c2k)| {
            if i > 0 {
                fact *= i as u64;
            }
            Rational::from(2) / (Rational::from(c2k * &fact))
        })
        .collect()
}

/// x^{K+1}/K! / (1 − x/(K+1)): the tail after K terms, since |1/ζ(2k)| ≤ 1 and consecutive
/// terms of Σ x^k/(k−1)! shrink by x/(k) ≤ x/(K+1) < 1 beyond K.
fn tail_bound(ax: &Float, terms: u32) -> Option<Float> {
    let k1 = Float::with_val(64, terms + 1);
    let ratio = Float::with_val(64, ax / &k1);
    if ratio >= 1 {
        return None;
    }
    let pow = Float::with_val(64, ax).pow(terms + 1);
    let fact = Float::with_val(64, Float::factorial(terms));
    Some(inflate(pow / fact / (1 - ratio)))
}

/// Smallest number of terms whose tail bound is below `tolerance`/2.
pub fn maclaurin_terms_needed(x: &Float, tolerance: &Float) -> Result<u32> {
    if *tolerance <= 0 || tolerance.is_nan() {
        return domain("tolerance must be positive");
    }
    let ax = Float::with_val(64, x.abs_ref());
    let half_tol = Float::with_val(64, tolerance / 2u32);
    let mut k = (ax.to_f64().ceil() as u32).max(1);
    loop {
        if let Some(b) = tail_bound(&ax, k) {
            if b < half_tol {
                return Ok(k);
            }
        }
        k += 1;
        if k > 1_000_000 {
            return Err(RieszError::Planner(
                "Maclaurin series needs more than 10^6 terms".into(),
            ));
        }
    }
}

/// Riesz(x) from `terms` terms of its Maclaurin series at working precision
/// prec + ⌈|x| log₂ e⌉ + 64 (the terms peak near k ≈ |x| with size ~e^{|x|}).
pub fn maclaurin_riesz(x: &Float, terms: u32, prec: u32) -> Result<EvaluationResult> {
    if terms == 0 {
        return domain("maclaurin_riesz needs terms >= 1");
    }
    let params = SeriesParams {
        c: 2.0,
        m: terms,
        n_max: 1,
        precision_bits: prec,
    };
    if x.is_zero() {
        return Ok(EvaluationResult::exact_zero(params, Method::Maclaurin));
    }
    let ax = Float::with_val(64, x.abs_ref());
    let truncation = tail_bound(&ax, terms).ok_or_else(|| {
        RieszError::Planner(format!(
            "{terms} Maclaurin terms stop before the terms start shrinking at x = {}; use more than {} terms",
            x.to_f64(),
            ax.to_f64().ceil()
        ))
    })?;

    let wp = prec + (ax.to_f64() * std::f64::consts::LOG2_E).ceil() as u32 + 64;
    let coeffs = riesz_maclaurin_coefficients(terms as usize);
    let four_pi_sq = Float::with_val(wp, Constant::Pi).square() * 4u32;
    let y = Float::with_val(wp, x / &four_pi_sq);
    let mut power = y.clone();
    let mut acc = Float::new(wp);
    let mut abs_sum = Float::new(wp);
    for a in &coeffs {
        let term = Float::with_val(wp, a) * &power;
        abs_sum += Float::with_val(wp, term.abs_ref());
        acc += term;
        power *= &y;
    }
    let value = Float::with_val(prec, &acc);
    let rounding =
        Float::with_val(64, &abs_sum) * (4 * terms as u64 + 16) * pow2(64, 2 - wp as i64)
            + Float::with_val(64, value.abs_ref()) * pow2(64, 1 - prec as i64);
    Ok(EvaluationResult {
        value,
        error_bound: inflate(truncation + rounding),
        params,
        method: Method::Maclaurin,
    })
}
