//! F_m(x) = exp(x) − Σ_{k<m} x^k/k!, evaluated without losing relative accuracy.

use rug::ops::Pow;
use rug::Float;

use crate::numtheory::complex::pow2;

/// F_m(x) with relative error at most about 2^{−prec}.
///
/// For |x| ≤ m/2 the tail Σ_{k≥m} x^k/k! is summed directly: successive terms shrink by at
/// least half and no cancellation occurs. Otherwise exp(x) minus the partial sum is formed at a
/// precision widened by log₂ of (largest term / |result|), re-checked after the fact and
/// widened again if the rounding estimate misses the target.
pub fn remainder_f(x: &Float, m: u32, prec: u32) -> Float {
    if m == 0 {
        return Float::with_val(prec, x.exp_ref());
    }
    if x.is_zero() {
        return Float::new(prec);
    }
    let ax = x.to_f64().abs();
    if ax <= m as f64 / 2.0 {
        tail_series(x, m, prec)
    } else {
        exp_minus_partial(x, m, prec)
    }
}

fn tail_series(x: &Float, m: u32, prec: u32) -> Float {
    let wp = prec + 16 + (32 - m.leading_zeros());
    let xw = Float::with_val(wp, x);
    let fact = Float::with_val(wp, Float::factorial(m));
    let mut term = Float::with_val(wp, xw.clone().pow(m as i32)) / fact;
    let stop = Float::with_val(wp, term.abs_ref()) * pow2(wp, -(wp as i64) - 2);
    let mut acc = term.clone();
    let mut k = m + 1;
    loop {
        term *= &xw;
        term /= k;
        acc += &term;
        if Float::with_val(wp, term.abs_ref()) < stop || term.is_zero() {
            break;
        }
        k += 1;
    }
    Float::with_val(prec, acc)
}

/// log₂ of the largest of e^x and |x|^k/k! for k < m.
fn log2_max_term(x: f64, m: u32) -> f64 {
    let lx = x.abs().ln();
    let mut best = x.max(0.0);
    let mut log_term = 0.0f64; // ln(|x|^k/k!)
    for k in 1..m {
        log_term += lx - (k as f64).ln();
        best = best.max(log_term);
    }
    best * std::f64::consts::LOG2_E
}

fn exp_minus_partial(x: &Float, m: u32, prec: u32) -> Float {
    let xf = x.to_f64();
    let lx = xf.abs().ln();
    let log2_scale = {
        let mut ln_fact = 0.0f64;
        for k in 2..=m {
            ln_fact += (k as f64).ln();
        }
        (m as f64 * lx - ln_fact) * std::f64::consts::LOG2_E
    };
    // Optimistic first guess: |F_m(x)| ≈ |x|^m/m!, to within the e^{-|x|} of the Cauchy form.
    let mut guard = (log2_max_term(xf, m) - log2_scale).max(0.0).ceil() as u32;
    let slack = 8 + (32 - (m + 4).leading_zeros());
    loop {
        let wp = prec + guard + slack + 8;
        let xw = Float::with_val(wp, x);
        let e = Float::with_val(wp, xw.exp_ref());
        let mut abs_sum = Float::with_val(wp, e.abs_ref());
        let mut partial = Float::with_val(wp, 1);
        let mut term = Float::with_val(wp, 1);
        abs_sum += 1;
        for k in 1..m {
            term *= &xw;
            term /= k;
            partial += &term;
            abs_sum += Float::with_val(wp, term.abs_ref());
        }
        let f = e - partial;
        // Accumulated rounding ≤ (m + 4)·2^{1−wp}·Σ|terms|; need ≤ 2^{−prec−1}|F|.
        if !f.is_zero() {
            let lost = abs_sum.to_f64().log2() - f.to_f64().abs().log2();
            let lost = if lost.is_finite() {
                lost
            } else {
                f64::from(wp)
            };
            let have = f64::from(wp) - f64::from(slack) - lost;
            if have >= f64::from(prec) + 1.0 {
                return Float::with_val(prec, f);
            }
            guard += (f64::from(prec) + 2.0 - have).ceil() as u32 + 16;
        } else {
            guard = guard * 2 + 64;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(x: f64, m: u32) -> f64 {
        remainder_f(&Float::with_val(128, x), m, 128).to_f64()
    }

    #[test]
    fn trivial_cases() {
        assert_eq!(f(0.0, 1), 0.0);
        assert_eq!(f(0.0, 7), 0.0);
        assert!((f(1.0, 0) - std::f64::consts::E).abs() < 1e-15);
    }

    #[test]
    fn first_order_at_one() {
        // F_1(1) = e − 1, from the tail series Σ_{k≥1} 1/k!
        let oracle: f64 = (1..30u32)
            .map(|k| 1.0 / (1..=k).map(|j| j as f64).product::<f64>())
            .sum();
        assert!((f(1.0, 1) - oracle).abs() < 1e-15);
        assert!((f(1.0, 1) - 1.718_281_828_459_045).abs() < 1e-15);
    }

    #[test]
    fn cauchy_bound_example() {
        let v = f(-0.5, 2);
        assert!(v.abs() <= 0.125);
        // e^{−1/2} − 1 + 1/2
        assert!((v - ((-0.5f64).exp() - 0.5)).abs() < 1e-16);
    }

    #[test]
    fn both_routes_agree_at_the_switch() {
        // m = 10: x = ±5 is the last tail-series point, ±5.000001 the first subtraction point
        for &x in &[5.0, -5.0] {
            let a = f(x, 10);
            let b = f(x * (1.0 + 1e-12), 10);
            assert!(((a - b) / a).abs() < 1e-9, "{x}: {a} {b}");
        }
    }

    #[test]
    fn heavy_cancellation_keeps_relative_accuracy() {
        // F_20(−1000) ≈ −Σ_{k<20}(−1000)^k/k!, |F| ≪ e^{1000}-scaled bounds
        let prec = 200;
        let x = Float::with_val(prec, -1000);
        let v = remainder_f(&x, 20, prec);
        let mut partial = rug::Rational::from(0);
        let mut term = rug::Rational::from(1);
        for k in 0..20u32 {
            if k > 0 {
                term *= rug::Rational::from((-1000, k));
            }
            partial += &term;
        }
        let exact = Float::with_val(4000, x.exp_ref()) - Float::with_val(4000, &partial);
        let rel = Float::with_val(4000, (Float::with_val(4000, &v) - &exact) / &exact).abs();
        assert!(rel.to_f64() < 1e-55);
    }
}
