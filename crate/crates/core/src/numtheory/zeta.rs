//! ζ at integers and on the critical strip.

use rug::float::Constant;
use std::ops::Neg;

use rug::Float;

use super::bernoulli::bernoulli_coefficients;
use super::complex::{pow2, BigComplex, BigReal};
use super::gamma::log_gamma_complex;
use crate::error::{domain, Result};
use crate::GUARD_BITS;

/// ζ(2k) = |c_{2k}| (2π)^{2k} / 2, with c_{2k} = B_{2k}/(2k)! exact.
pub fn zeta_even(k: u32, prec: u32) -> Result<BigReal> {
    if k == 0 {
        return domain("zeta_even needs k >= 1");
    }
    Ok(zeta_even_table(k, prec).pop().expect("table has k entries"))
}

/// ζ(2), ζ(4), …, ζ(2·count).
pub fn zeta_even_table(count: u32, prec: u32) -> Vec<BigReal> {
    let wp = prec + GUARD_BITS;
    let coeffs = bernoulli_coefficients(count as usize + 1);
    let two_pi = Float::with_val(wp, Constant::Pi) * 2u32;
    let two_pi_sq = Float::with_val(wp, two_pi.square_ref());
    let mut power = Float::with_val(wp, 1);
    coeffs
        .iter()
        .skip(1)
        .map(|c| {
            power *= &two_pi_sq;
            let v = Float::with_val(wp, c).abs() * &power / 2u32;
            Float::with_val(prec, v)
        })
        .collect()
}

/// ζ(2k+1) by Euler–Maclaurin summation.
pub fn zeta_odd(k: u32, prec: u32) -> Result<BigReal> {
    if k == 0 {
        return domain("zeta_odd needs k >= 1 (zeta(1) is a pole)");
    }
    let s = Float::with_val(prec + GUARD_BITS, 2 * k + 1);
    zeta_real(&s, prec)
}

/// ζ(3), ζ(5), …, ζ(2·count+1).
pub fn zeta_odd_table(count: u32, prec: u32) -> Vec<BigReal> {
    let wp = prec + GUARD_BITS;
    let mut em = EulerMaclaurin::new(wp);
    (1..=count)
        .map(|k| {
            let s = BigComplex::from_real(&Float::with_val(wp, 2 * k + 1), wp);
            Float::with_val(prec, &em.zeta(&s).re)
        })
        .collect()
}

/// ζ(s) for real s > 1.
pub fn zeta_real(s: &Float, prec: u32) -> Result<BigReal> {
    if *s <= 1 {
        return domain(format!("zeta_real needs s > 1, got {}", s.to_f64()));
    }
    let wp = prec + GUARD_BITS;
    let z = EulerMaclaurin::new(wp).zeta(&BigComplex::from_real(s, wp));
    Ok(Float::with_val(prec, &z.re))
}

/// ζ(s) on the whole plane minus s = 1.
///
/// Re s ≥ 0 uses the alternating η series with Borwein's Chebyshev weights (falling back to
/// Euler–Maclaurin where 1 − 2^{1−s} nearly vanishes); Re s < 0 goes through the functional
/// equation ζ(s) = 2^s π^{s−1} sin(πs/2) Γ(1−s) ζ(1−s).
pub fn complex_zeta(s: &BigComplex, prec: u32) -> Result<BigComplex> {
    if s.im.is_zero() && s.re == 1 {
        return domain("zeta has a pole at s = 1");
    }
    let wp = prec + GUARD_BITS;
    let sw = BigComplex::with_prec(&s.re, &s.im, wp);
    let mut z = if s.re.is_sign_negative() && !s.re.is_zero() {
        reflected(&sw, wp)?
    } else {
        let factor = sw.one_minus_two_pow_one_minus();
        if factor.abs().to_f64() < 0.25 {
            EulerMaclaurin::new(wp).zeta(&sw)
        } else {
            borwein_eta(&sw, &factor, wp)
        }
    };
    z.set_prec(prec);
    Ok(z)
}

fn reflected(s: &BigComplex, wp: u32) -> Result<BigComplex> {
    let one_minus = BigComplex {
        re: Float::with_val(wp, 1 - &s.re),
        im: Float::with_val(wp, -&s.im),
    };
    let zeta_1ms = complex_zeta(&one_minus, wp)?;
    let gamma_1ms = log_gamma_complex(&one_minus, wp)?.exp();
    let pi = Float::with_val(wp, Constant::Pi);
    let two = Float::with_val(wp, 2);
    let two_s = BigComplex::real_base_pow(&two, s);
    let pi_s1 = BigComplex::real_base_pow(&pi, &s.add_real(&Float::with_val(wp, -1)));
    let half_pi = Float::with_val(wp, &pi / 2u32);
    let sine = s.scale(&half_pi).sin();
    Ok(&(&(&two_s * &pi_s1) * &sine) * &(&gamma_1ms * &zeta_1ms))
}

/// ζ(s) = −1/(d_n (1 − 2^{1−s})) Σ_{k<n} (−1)^k (d_k − d_n)/(k+1)^s.
fn borwein_eta(s: &BigComplex, factor: &BigComplex, wp: u32) -> BigComplex {
    let t = s.im.to_f64().abs();
    let log2_e = std::f64::consts::LOG2_E;
    // Truncation ≲ 3(1+2|t|) e^{π|t|/2} / ((3+√8)^n |1−2^{1−s}|).
    let needed =
        wp as f64 + std::f64::consts::PI * t / 2.0 * log2_e + (3.0 * (1.0 + 2.0 * t)).log2()
            - factor.abs().to_f64().log2()
            + 8.0;
    let n = (needed / (3.0 + 8f64.sqrt()).log2()).ceil().max(4.0) as usize;
    // Terms grow like (k+1)^{−Re s}; pay for that cancellation too.
    let extra = ((n as f64).log2() * (1.0 - s.re.to_f64()).max(0.0)).ceil() as u32 + 8;
    let p = wp + extra;

    // d_k = n Σ_{i≤k} (n+i−1)! 4^i / ((n−i)! (2i)!); successive summands differ by
    // 4(n+i)(n−i)/((2i+1)(2i+2)).
    let mut d = Vec::with_capacity(n + 1);
    let mut term = Float::with_val(p, 1);
    let mut acc = Float::with_val(p, 1);
    d.push(acc.clone());
    for i in 0..n {
        let num = 4 * (n + i) as u64 * (n - i) as u64;
        let den = (2 * i + 1) as u64 * (2 * i + 2) as u64;
        term *= num;
        term /= den;
        acc += &term;
        d.push(acc.clone());
    }
    let dn = d[n].clone();

    let neg_t = Float::with_val(p, -&s.im);
    let mut sum_re = Float::new(p);
    let mut sum_im = Float::new(p);
    for (k, dk) in d.iter().enumerate().take(n) {
        let ln_k1 = Float::with_val(p, (k + 1) as u64).ln();
        let modulus = (Float::with_val(p, &s.re * &ln_k1)).neg().exp();
        let angle = Float::with_val(p, &neg_t * &ln_k1);
        let (sin, cos) = angle.sin_cos(Float::new(p));
        let mut w = Float::with_val(p, dk - &dn) * modulus;
        if k % 2 == 1 {
            w = -w;
        }
        sum_re += Float::with_val(p, &w * &cos);
        sum_im += w * sin;
    }
    let sum = BigComplex {
        re: sum_re,
        im: sum_im,
    };
    let mut fac = BigComplex::with_prec(&factor.re, &factor.im, p);
    fac = fac.scale(&dn);
    let mut out = -&(&sum / &fac);
    out.set_prec(wp);
    out
}

/// Euler–Maclaurin summation of ζ(s) with its coefficient table kept across calls.
pub(crate) struct EulerMaclaurin {
    wp: u32,
    // B_{2j}/(2j)! for j = 0, 1, …
    coeffs: Vec<Float>,
}

impl EulerMaclaurin {
    pub(crate) fn new(wp: u32) -> Self {
        Self {
            wp,
            coeffs: Vec::new(),
        }
    }

    fn ensure_coeffs(&mut self, count: usize) {
        if self.coeffs.len() < count {
            let count = count.max(2 * self.coeffs.len());
            self.coeffs = bernoulli_coefficients(count)
                .iter()
                .map(|c| Float::with_val(self.wp, c))
                .collect();
        }
    }

    /// ζ(s) = Σ_{n<N} n^{−s} + N^{1−s}/(s−1) + N^{−s}/2 + Σ_j c_{2j} (s)_{2j−1} N^{−s−2j+1} + R,
    /// with |R| ≤ |next term| · |s+2J+1| / (Re s + 2J + 1). Requires Re s > −1.
    pub(crate) fn zeta(&mut self, s: &BigComplex) -> BigComplex {
        let p = self.wp + 16;
        let s = BigComplex::with_prec(&s.re, &s.im, p);
        let sigma = s.re.to_f64();
        let abs_s = s.abs().to_f64();
        let target_bits = self.wp as f64;
        let mut big_n = ((target_bits * std::f64::consts::LN_2 + abs_s + 10.0)
            / (2.0 * std::f64::consts::PI))
            .ceil()
            .max(4.0) as u64;
        loop {
            if let Some(z) = self.try_sum(&s, big_n, sigma, p) {
                let mut z = z;
                z.set_prec(self.wp);
                return z;
            }
            big_n *= 2;
        }
    }

    fn try_sum(&mut self, s: &BigComplex, big_n: u64, sigma: f64, p: u32) -> Option<BigComplex> {
        let neg_s = -s;
        let mut acc = BigComplex::zero(p);
        for n in 1..big_n {
            acc = &acc + &BigComplex::real_base_pow(&Float::with_val(p, n), &neg_s);
        }
        let nf = Float::with_val(p, big_n);
        let n_pow = BigComplex::real_base_pow(&nf, &neg_s); // N^{−s}
        let s_minus_1 = s.add_real(&Float::with_val(p, -1));
        acc = &acc + &(&n_pow.scale(&nf) / &s_minus_1);
        acc = &acc + &n_pow.scale(&Float::with_val(p, 0.5));

        let target = pow2(p, -(self.wp as i64 + 4));
        let n_inv = Float::with_val(p, nf.recip_ref());
        let n_inv_sq = Float::with_val(p, n_inv.square_ref());
        // rising = s(s+1)…(s+2j−2), power = N^{−s−2j+1}
        let mut rising = s.clone();
        let mut power = n_pow.scale(&n_inv);
        let max_j = (std::f64::consts::PI * big_n as f64) as usize + 4;
        self.ensure_coeffs(max_j + 2);
        for j in 1..=max_j {
            let c = &self.coeffs[j];
            let term = (&rising * &power).scale(&Float::with_val(p, c));
            acc = &acc + &term;
            // next term's magnitude, times the remainder factor
            let r1 = s.add_real(&Float::with_val(p, (2 * j - 1) as u64));
            let r2 = s.add_real(&Float::with_val(p, (2 * j) as u64));
            rising = &(&rising * &r1) * &r2;
            power = power.scale(&n_inv_sq);
            let next = (&rising * &power)
                .scale(&Float::with_val(p, &self.coeffs[j + 1]))
                .abs();
            let s_next = s.add_real(&Float::with_val(p, (2 * j + 1) as u64)).abs();
            let bound = next * s_next / (sigma + (2 * j + 1) as f64);
            if bound < target {
                return Some(acc);
            }
        }
        None
    }
}

/// κ(s) = Γ(s/2) π^{−s/2} ζ(s), symmetric under s ↦ 1 − s.
pub fn completed_zeta(s: &BigComplex, prec: u32) -> Result<BigComplex> {
    let wp = prec + GUARD_BITS;
    let sw = BigComplex::with_prec(&s.re, &s.im, wp);
    let half = Float::with_val(wp, 0.5);
    let half_s = sw.scale(&half);
    let gamma = log_gamma_complex(&half_s, wp)?.exp();
    let pi = Float::with_val(wp, Constant::Pi);
    let pi_pow = BigComplex::real_base_pow(&pi, &(-&half_s));
    let zeta = complex_zeta(&sw, wp)?;
    let mut k = &(&gamma * &pi_pow) * &zeta;
    k.set_prec(prec);
    Ok(k)
}
