//! Complex log-gamma by Stirling's series after an upward argument shift.

use rug::float::Constant;
use rug::Float;

use super::bernoulli::bernoulli_even;
use super::complex::BigComplex;
use crate::error::{domain, Result};
use crate::GUARD_BITS;

/// Principal branch of log Γ(z).
///
/// z is shifted to w = z + N with Re w ≥ 1/2 and |w| ≥ R(p), Stirling's series is summed at w
/// until its remainder bound |B_{2K+2}| sec^{2K+2}(arg w / 2) / ((2K+2)(2K+1)|w|^{2K+1})
/// drops below 2^{−p}, and log Γ(z) = log Γ(w) − Σ_{k<N} log(z + k).
pub fn log_gamma_complex(z: &BigComplex, prec: u32) -> Result<BigComplex> {
    let re = z.re.to_f64();
    if z.im.is_zero() && re <= 0.0 && z.re.is_integer() {
        return domain(format!("log_gamma pole at z = {re}"));
    }
    let magnitude = z.abs().to_f64().max(2.0);
    let wp = prec + GUARD_BITS + (magnitude * magnitude.ln()).log2().max(0.0).ceil() as u32;

    // Minimal Stirling term ~ exp(−2π|w|/√2) once Re w ≥ 0.
    let radius = (wp as f64 + 10.0) * std::f64::consts::SQRT_2
        / (2.0 * std::f64::consts::PI * std::f64::consts::LOG2_E);
    let im = z.im.to_f64();
    let mut shift: u64 = 0;
    loop {
        let wr = re + shift as f64;
        if wr >= 0.5 && wr.hypot(im) >= radius {
            break;
        }
        shift += 1;
    }

    let zw = BigComplex::with_prec(&z.re, &z.im, wp);
    let w = zw.add_real(&Float::with_val(wp, shift));
    let mut acc = stirling(&w, wp)?;
    for k in 0..shift {
        let term = zw.add_real(&Float::with_val(wp, k)).ln();
        acc = &acc - &term;
    }
    acc.set_prec(prec);
    Ok(acc)
}

fn stirling(w: &BigComplex, wp: u32) -> Result<BigComplex> {
    let ln_w = w.ln();
    let half = Float::with_val(wp, 0.5);
    let w_minus_half = w.add_real(&Float::with_val(wp, -&half));
    let two_pi = Float::with_val(wp, Constant::Pi) * 2u32;
    let half_ln_two_pi = Float::with_val(wp, two_pi.ln() / 2u32);
    let mut acc = (&w_minus_half * &ln_w) - w.clone();
    acc = acc.add_real(&half_ln_two_pi);

    let abs_w = w.abs();
    let theta = w.arg();
    let sec_half = Float::with_val(wp, (theta / 2u32).cos()).recip();
    let sec_half_sq = Float::with_val(wp, sec_half.square_ref());
    let target = crate::numtheory::complex::pow2(wp, -(wp as i64));

    let w_inv = w.recip();
    let w_inv_sq = &w_inv * &w_inv;
    let mut w_pow = w_inv.clone(); // w^{−(2k−1)}
    let abs_w_sq = Float::with_val(wp, abs_w.square_ref());

    // Enough Bernoulli numbers for the expected stopping index with headroom.
    let mut k_cap =
        (std::f64::consts::PI * abs_w.to_f64() / std::f64::consts::SQRT_2).ceil() as usize + 8;
    let mut bern = bernoulli_even(k_cap + 2);
    let mut k = 1usize;
    // |w|^{2K+1} for the remainder bound, K = k.
    let mut abs_w_pow = Float::with_val(wp, &abs_w * &abs_w_sq);
    let mut sec_pow = Float::with_val(wp, sec_half_sq.square_ref()); // sec^{2K+2}, K = 1
    loop {
        if k + 1 >= bern.len() {
            k_cap *= 2;
            bern = bernoulli_even(k_cap + 2);
        }
        let b = Float::with_val(wp, &bern[k]);
        let coeff = b / ((2 * k * (2 * k - 1)) as u64);
        acc = &acc + &w_pow.scale(&coeff);

        let b_next = Float::with_val(wp, &bern[k + 1]).abs();
        let denom = Float::with_val(wp, &abs_w_pow * ((2 * k + 2) * (2 * k + 1)) as u64);
        let bound = b_next * &sec_pow / denom;
        if bound < target {
            break;
        }
        if k > 100_000 {
            return Err(crate::error::RieszError::Precision(
                "Stirling series failed to reach the target precision".into(),
            ));
        }
        w_pow = &w_pow * &w_inv_sq;
        abs_w_pow *= &abs_w_sq;
        sec_pow *= &sec_half_sq;
        k += 1;
    }
    Ok(acc)
}

/// Γ(z) = exp(log Γ(z)).
pub fn gamma_complex(z: &BigComplex, prec: u32) -> Result<BigComplex> {
    let mut lg = log_gamma_complex(z, prec + GUARD_BITS)?;
    let mut g = lg.exp();
    lg.set_prec(prec);
    g.set_prec(prec);
    Ok(g)
}

/// Gauss' factorial Π(s) = Γ(s + 1).
pub fn gauss_pi(s: &BigComplex, prec: u32) -> Result<BigComplex> {
    let shifted = s.add_real(&Float::with_val(s.prec(), 1));
    gamma_complex(&shifted, prec)
}
