//! Rebuilding Riesz(x) from the nontrivial zeros of ζ.
//!
//! Riesz(x) = Σ_ρ Π(−ρ/2) x^{ρ/2} / (2 ζ'(ρ)) − G(π²/x), where
//! G(y) = Σ_{k≥1} (−1)^{k+1} (y/π)^k / κ(2k+1) and κ(s) = Γ(s/2) π^{−s/2} ζ(s).
//! Using Γ(k + 1/2) = √π (2k−1)!!/2^k the coefficients of G reduce to
//! 2^k / ((2k−1)!! ζ(2k+1)), which is how they are computed here.

use std::ops::Range;

use rayon::prelude::*;
use rug::float::Constant;
use rug::Float;

use super::table::{ZeroRecord, ZeroTable};
use crate::error::{domain, Result, RieszError};
use crate::numtheory::complex::pow2;
use crate::numtheory::{complex_zeta, log_gamma_complex, zeta_odd_table, BigComplex};
use crate::GUARD_BITS;

/// Smallest x accepted by [`reconstruct_riesz`].
pub const MIN_RECONSTRUCTION_X: f64 = 0.1;

/// Default closeness parameter for [`bracket_zeros`].
pub const DEFAULT_BRACKET_K: f64 = 2.0;

/// |ζ'(ρ)| below this is treated as a possible multiple zero.
pub const MULTIPLE_ZERO_THRESHOLD: f64 = 1e-12;

/// Envelope constant C in |2 Re term| ≲ 2C x^{1/4} t^{7/12} log t e^{−πt/4} per unit of t.
/// Comes from Stirling for |Γ(3/4 + it/2)|, the zero density log(t/2π)/2π and the working
/// assumption 1/|ζ'(ρ)| ≤ t^{1/3}; the first hundred zeros sit well inside it.
pub const ENVELOPE_CONSTANT: f64 = 0.168;

const ENVELOPE_EXPONENT: f64 = 7.0 / 12.0;

#[derive(Debug, Clone)]
pub struct GValue {
    pub value: Float,
    pub error_bound: Float,
    pub terms: u32,
}

/// Number of terms after which the tail of G(y) is below 2^{−bits}.
pub fn g_terms_needed(y: f64, bits: u32) -> u32 {
    let two_y = 2.0 * y;
    if two_y == 0.0 {
        return 1;
    }
    let target = -(bits as f64) * std::f64::consts::LN_2;
    // log of (2y)^k / (2k−1)!!
    let mut log_r = two_y.ln();
    let mut k: u32 = 1;
    loop {
        let next = log_r + two_y.ln() - ((2 * k + 1) as f64).ln();
        let ratio = two_y / (2 * k + 3) as f64;
        if ratio < 0.5 && next - (1.0 - ratio).ln() < target {
            return k;
        }
        log_r = next;
        k += 1;
    }
}

/// G(y) summed over `terms` terms, or enough terms for `prec` bits when `terms` is `None`.
/// The error bound covers the truncated tail and rounding.
pub fn g_function(y: &Float, terms: Option<u32>, prec: u32) -> Result<GValue> {
    if !y.is_finite() || y.is_sign_negative() && !y.is_zero() {
        return domain("G needs finite y >= 0");
    }
    let yf = y.to_f64();
    let k_max = terms.unwrap_or_else(|| g_terms_needed(yf, prec + 2)).max(1);
    let growth = (yf * std::f64::consts::LOG2_E).ceil() as u32;
    let wp = prec + GUARD_BITS + growth + 32 - k_max.leading_zeros();
    // ζ(2k+1) − 1 < 2^{−wp} once 2k+1 > wp + 1
    let exact_k = k_max.min(wp / 2 + 1);
    let zetas = zeta_odd_table(exact_k, wp);
    let one = Float::with_val(wp, 1);
    let two_y = Float::with_val(wp, y * 2u32);
    let mut r = Float::with_val(wp, &two_y);
    let mut sum = Float::new(wp);
    let mut abs_sum = Float::new(wp);
    for k in 1..=k_max {
        if k > 1 {
            r *= &two_y;
            r /= 2 * k - 1;
        }
        let z = zetas.get(k as usize - 1).unwrap_or(&one);
        let term = Float::with_val(wp, &r / z);
        abs_sum += &term;
        if k % 2 == 1 {
            sum += &term;
        } else {
            sum -= &term;
        }
    }
    // next term bound (2y)^{K+1}/(2K+1)!!, geometric once 2y < 2K+3
    let next = Float::with_val(wp, &r * &two_y) / (2 * k_max + 1);
    let ratio = Float::with_val(wp, &two_y / (2 * k_max + 3));
    let tail = if ratio < 1 {
        next / (1 - ratio)
    } else {
        Float::with_val(prec, f64::INFINITY)
    };
    let rounding = abs_sum * (3 * k_max + 16) * pow2(wp, 1 - wp as i64);
    let error_bound = Float::with_val(53, tail + rounding) * (1.0 + 1e-12);
    Ok(GValue {
        value: Float::with_val(prec, sum),
        error_bound,
        terms: k_max,
    })
}

#[derive(Debug, Clone)]
pub struct DerivativeEstimate {
    pub value: BigComplex,
    pub error_estimate: Float,
}

/// ζ'(1/2 + it) by a central difference with step h = 2^{−prec/2}.
pub fn zeta_prime_at(t: &Float, prec: u32) -> Result<DerivativeEstimate> {
    if prec < 32 {
        return Err(RieszError::Precision(format!(
            "difference step too coarse at {prec} bits"
        )));
    }
    let half_bits = prec / 2;
    if half_bits as i64 > -(rug::float::exp_min() as i64) / 2 {
        return Err(RieszError::Precision("difference step underflows".into()));
    }
    let wp = prec + half_bits + GUARD_BITS;
    let s = BigComplex {
        re: Float::with_val(wp, 0.5),
        im: Float::with_val(wp, t),
    };
    let diff = |h: &Float| -> Result<BigComplex> {
        let plus = complex_zeta(&s.add_real(h), wp)?;
        let minus_h = Float::with_val(wp, -h);
        let minus = complex_zeta(&s.add_real(&minus_h), wp)?;
        let two_h = Float::with_val(wp, h * 2u32);
        Ok((&plus - &minus).scale(&two_h.recip()))
    };
    let h = pow2(wp, -(half_bits as i64));
    let fine = diff(&h)?;
    let coarse = diff(&Float::with_val(wp, &h * 2u32))?;
    let spread = Float::with_val(53, (&fine - &coarse).abs()) / 3u32;
    let floor = Float::with_val(53, fine.abs()) * pow2(53, -(prec as i64));
    let mut value = fine;
    value.set_prec(prec);
    Ok(DerivativeEstimate {
        value,
        error_estimate: spread + floor,
    })
}

fn check_simple(rho: &BigComplex, zeta_prime: &BigComplex) -> Result<()> {
    let m = zeta_prime.abs().to_f64();
    if m < MULTIPLE_ZERO_THRESHOLD {
        return Err(RieszError::NearMultipleZero {
            t: format!("{:.20}", rho.im.to_f64()),
            magnitude: m,
        });
    }
    Ok(())
}

/// Π(−ρ/2) x^{ρ/2} / (2 ζ'(ρ)) for any zero ρ with the given derivative.
pub fn zero_term_at(
    rho: &BigComplex,
    zeta_prime: &BigComplex,
    x: &Float,
    prec: u32,
) -> Result<BigComplex> {
    if !x.is_finite() || *x <= 0 {
        return domain("zero terms need x > 0");
    }
    check_simple(rho, zeta_prime)?;
    let t = rho.im.to_f64().abs().max(2.0);
    let lx = x.to_f64().ln().abs().max(1.0);
    let extra = (t * t.ln()).log2().max(0.0) + (t * lx).log2().max(0.0);
    let wp = prec + GUARD_BITS + extra.ceil() as u32;
    let r = BigComplex::with_prec(&rho.re, &rho.im, wp);
    let half = Float::with_val(wp, 0.5);
    let half_rho = r.scale(&half);
    // Π(−ρ/2) = Γ(1 − ρ/2)
    let arg = BigComplex {
        re: Float::with_val(wp, 1 - &half_rho.re),
        im: Float::with_val(wp, -&half_rho.im),
    };
    let gamma = log_gamma_complex(&arg, wp)?.exp();
    let xw = Float::with_val(wp, x);
    let power = BigComplex::real_base_pow(&xw, &half_rho);
    let mut zp = zeta_prime.clone();
    zp.set_prec(wp);
    let den = zp.scale(&Float::with_val(wp, 2));
    let mut term = &(&gamma * &power) / &den;
    term.set_prec(prec);
    Ok(term)
}

/// The residue term for ρ = 1/2 + it, using the table's ζ'(ρ) or computing it.
pub fn zero_term(zero: &ZeroRecord, x: &Float, prec: u32) -> Result<BigComplex> {
    let zp = match &zero.zeta_prime {
        Some(z) => z.clone(),
        None => zeta_prime_at(&zero.t, prec)?.value,
    };
    zero_term_at(&rho_of(zero, prec), &zp, x, prec)
}

fn rho_of(zero: &ZeroRecord, prec: u32) -> BigComplex {
    let p = prec.max(zero.t.prec());
    BigComplex {
        re: Float::with_val(p, 0.5),
        im: Float::with_val(p, &zero.t),
    }
}

fn closeness(t: f64, k: f64) -> f64 {
    if t <= std::f64::consts::E {
        return 0.0;
    }
    k.powf(-t / t.ln())
}

/// Groups consecutive zeros whose gap is below K^{−γ₁/log γ₁} + K^{−γ₂/log γ₂}.
/// The ranges index into the table and cover it in order.
pub fn bracket_zeros(table: &ZeroTable, k: f64) -> Result<Vec<Range<usize>>> {
    if k.is_nan() || k <= 1.0 || k.is_infinite() {
        return domain("bracketing parameter K must be finite and > 1");
    }
    let mut out = Vec::new();
    let mut start = 0;
    for i in 1..table.zeros.len() {
        let g1 = &table.zeros[i - 1].t;
        let g2 = &table.zeros[i].t;
        let gap = Float::with_val(g2.prec().max(g1.prec()), g2 - g1).to_f64();
        let threshold = closeness(g1.to_f64(), k) + closeness(g2.to_f64(), k);
        if gap >= threshold {
            out.push(start..i);
            start = i;
        }
    }
    if !table.zeros.is_empty() {
        out.push(start..table.zeros.len());
    }
    Ok(out)
}

#[derive(Debug, Clone)]
pub struct Reconstruction {
    pub value: Float,
    /// Σ over ρ and ρ̄; the imaginary part only measures rounding.
    pub zero_sum: BigComplex,
    pub g_value: GValue,
    /// Sum of the components below. Not rigorous: the zero tail relies on the envelope.
    pub error_estimate: Float,
    pub envelope_tail: Float,
    pub table_error: Float,
    pub zeros_used: usize,
    pub brackets: usize,
}

/// Upper bound for ∫_T^∞ t^a log t e^{−bt} dt, valid when b T > a + 1/log T.
fn envelope_integral(t: f64) -> f64 {
    let a = ENVELOPE_EXPONENT;
    let b = std::f64::consts::FRAC_PI_4;
    let lt = t.ln();
    let den = b - (a + 1.0 / lt) / t;
    if t <= std::f64::consts::E || den <= 0.0 {
        return f64::INFINITY;
    }
    (a * lt + lt.ln() - b * t).exp() / den
}

/// Estimated size of the zero sum beyond ordinate T.
pub fn envelope_tail(x: f64, t: f64) -> f64 {
    2.0 * ENVELOPE_CONSTANT * x.powf(0.25) * envelope_integral(t)
}

/// Riesz(x) from the zeros in `table` (paired with their conjugates) and G(π²/x).
pub fn reconstruct_riesz(
    x: &Float,
    table: &ZeroTable,
    k: f64,
    g_terms: Option<u32>,
    prec: u32,
) -> Result<Reconstruction> {
    if !x.is_finite() || *x < MIN_RECONSTRUCTION_X {
        return domain(format!("reconstruction needs x >= {MIN_RECONSTRUCTION_X}"));
    }
    if table.is_empty() {
        return domain("table empty");
    }
    let brackets = bracket_zeros(table, k)?;
    let wp = prec + GUARD_BITS;
    let xf = x.to_f64();
    let digits_rel = 10f64.powi(1 - table.precision_decimal_digits as i32);

    let per_zero: Vec<Result<(BigComplex, f64)>> = table
        .zeros
        .par_iter()
        .map(|zero| {
            let (zp, zp_rel) = match &zero.zeta_prime {
                Some(z) => (z.clone(), digits_rel),
                None => {
                    let d = zeta_prime_at(&zero.t, wp)?;
                    let rel = (d.error_estimate.clone() / d.value.abs()).to_f64();
                    (d.value, rel)
                }
            };
            let rho = rho_of(zero, wp);
            let a = zero_term_at(&rho, &zp, x, wp)?;
            let b = zero_term_at(&rho.conj(), &zp.conj(), x, wp)?;
            let size = a.abs().to_f64() + b.abs().to_f64();
            let t = zero.t.to_f64();
            // sensitivity of the term to the ordinate and to ζ'
            let dt = t * digits_rel;
            let table_err = size * ((xf.ln().abs() / 2.0 + t.ln() + 2.0) * dt + zp_rel);
            Ok((&a + &b, table_err))
        })
        .collect();

    let mut zero_sum = BigComplex::zero(wp);
    let mut table_error = 0.0;
    let mut abs_total = 0.0;
    for range in &brackets {
        let mut bracket = BigComplex::zero(wp);
        for item in &per_zero[range.clone()] {
            let (term, err) = item.as_ref().map_err(clone_err)?;
            abs_total += term.abs().to_f64();
            table_error += err;
            bracket = &bracket + term;
        }
        zero_sum = &zero_sum + &bracket;
    }

    let pi = Float::with_val(wp, Constant::Pi);
    let y = Float::with_val(wp, pi.square_ref()) / x;
    let g_value = g_function(&y, g_terms, wp)?;
    let value = Float::with_val(wp, &zero_sum.re - &g_value.value);

    let last_t = table.zeros.last().expect("nonempty").t.to_f64();
    let tail = envelope_tail(xf, last_t);
    let rounding = (abs_total + g_value.value.to_f64().abs() + 1.0) * 2f64.powi(4 - prec as i32);
    let error_estimate = Float::with_val(53, tail + table_error + rounding) + &g_value.error_bound;

    let mut out_sum = zero_sum;
    out_sum.set_prec(prec);
    Ok(Reconstruction {
        value: Float::with_val(prec, value),
        zero_sum: out_sum,
        g_value,
        error_estimate,
        envelope_tail: Float::with_val(53, tail),
        table_error: Float::with_val(53, table_error),
        zeros_used: table.len(),
        brackets: brackets.len(),
    })
}

fn clone_err(e: &RieszError) -> RieszError {
    match e {
        RieszError::Domain(m) => RieszError::Domain(m.clone()),
        RieszError::Planner(m) => RieszError::Planner(m.clone()),
        RieszError::Precision(m) => RieszError::Precision(m.clone()),
        RieszError::Resource(m) => RieszError::Resource(m.clone()),
        RieszError::NearMultipleZero { t, magnitude } => RieszError::NearMultipleZero {
            t: t.clone(),
            magnitude: *magnitude,
        },
        RieszError::Format { line, message } => RieszError::Format {
            line: *line,
            message: message.clone(),
        },
        RieszError::Validation(m) => RieszError::Validation(m.clone()),
        RieszError::Io(e) => RieszError::Io(std::io::Error::new(e.kind(), e.to_string())),
    }
}
