//! Dirichlet coefficient sources for the exponential-sum routes.

use std::fmt;

use rug::Float;

use crate::error::{domain, Result};
use crate::numtheory::{mobius_sieve, zeta_even_table, zeta_real};
use crate::GUARD_BITS;

/// Growth envelope |a(n)| ≤ scale · n^exponent.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Envelope {
    pub scale: f64,
    pub exponent: f64,
}

/// Source of Dirichlet coefficients a(n) of f(s) = Σ a(n) n^{−s}.
///
/// `sigma` is the abscissa of absolute convergence: Σ |a(n)| n^{−s} converges for s > sigma.
/// The envelope must be consistent with it (sigma ≥ exponent + 1).
pub trait CoefficientProvider: Send + Sync {
    fn name(&self) -> &str;

    fn sigma(&self) -> f64;

    fn envelope(&self) -> Envelope;

    /// a(1), …, a(n_max).
    fn coefficients(&self, n_max: u64) -> Result<Vec<i64>>;

    /// Upper bound on Σ_{n>n_max} |a(n)| n^{−s}, from the envelope by integral comparison:
    /// A·((N+1)^{e−s} + (N+1)^{e−s+1}/(s−e−1)). Infinite when s ≤ e + 1.
    fn tail_sum_bound(&self, n_max: u64, s: f64) -> Float {
        let Envelope { scale, exponent } = self.envelope();
        let p = 64;
        let gap = s - exponent - 1.0;
        if gap <= 0.0 {
            return Float::with_val(p, f64::INFINITY);
        }
        let n1 = Float::with_val(p, n_max + 1);
        let head = powf(&n1, exponent - s);
        let integral = powf(&n1, exponent - s + 1.0) / gap;
        inflate((head + integral) * scale)
    }

    /// f(s) for real s > sigma. The default sums the series directly until the envelope tail
    /// drops below 2^{−prec}, which is only practical when s is well clear of sigma.
    fn dirichlet_value(&self, s: &Float, prec: u32) -> Result<Float> {
        let sf = s.to_f64();
        if sf <= self.sigma() {
            return domain(format!(
                "{}: f(s) needs s > sigma = {}",
                self.name(),
                self.sigma()
            ));
        }
        let wp = prec + GUARD_BITS;
        let target = crate::numtheory::complex::pow2(64, -(wp as i64));
        let mut n_max = 64u64;
        while self.tail_sum_bound(n_max, sf) > target {
            n_max *= 2;
            if n_max > 1 << 28 {
                return domain(format!(
                    "{}: f({sf}) converges too slowly for direct summation",
                    self.name()
                ));
            }
        }
        let coeffs = self.coefficients(n_max)?;
        let mut acc = Float::new(wp);
        for (i, &a) in coeffs.iter().enumerate().rev() {
            if a != 0 {
                let ln_n = Float::with_val(wp, (i + 1) as u64).ln();
                let term = (-(ln_n * s)).exp();
                acc += term * a;
            }
        }
        Ok(Float::with_val(prec, acc))
    }

    /// f(c), f(2c), …, f(mc).
    fn dirichlet_values(&self, c: f64, m: u32, prec: u32) -> Result<Vec<Float>> {
        (1..=m)
            .map(|k| self.dirichlet_value(&Float::with_val(prec + GUARD_BITS, c * k as f64), prec))
            .collect()
    }

    /// A crude bound on sup_{s ≥ c} |f(s)| used to size guard bits.
    fn magnitude_bound(&self, c: f64) -> f64 {
        let Envelope { scale, exponent } = self.envelope();
        let gap = c - exponent - 1.0;
        if gap <= 0.0 {
            f64::INFINITY
        } else {
            scale * (1.0 + 1.0 / gap)
        }
    }
}

impl fmt::Debug for dyn CoefficientProvider + '_ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CoefficientProvider({})", self.name())
    }
}

/// a(n) = μ(n), so f(s) = 1/ζ(s) and R_2 is the Riesz function.
#[derive(Debug, Clone, Copy, Default)]
pub struct MobiusProvider;

impl CoefficientProvider for MobiusProvider {
    fn name(&self) -> &str {
        "mobius"
    }

    fn sigma(&self) -> f64 {
        1.0
    }

    fn envelope(&self) -> Envelope {
        Envelope {
            scale: 1.0,
            exponent: 0.0,
        }
    }

    fn coefficients(&self, n_max: u64) -> Result<Vec<i64>> {
        let table = mobius_sieve(n_max as usize)?;
        Ok(table.values().iter().map(|&v| v as i64).collect())
    }

    fn dirichlet_value(&self, s: &Float, prec: u32) -> Result<Float> {
        if *s <= 1 {
            return domain(format!(
                "1/zeta(s) Dirichlet series needs s > 1, got {}",
                s.to_f64()
            ));
        }
        let wp = prec + GUARD_BITS;
        let z = if s.is_integer() && (s.to_f64() as u64).is_multiple_of(2) {
            let k = (s.to_f64() / 2.0) as u32;
            zeta_even_table(k, wp).pop().expect("k >= 1")
        } else {
            zeta_real(s, wp)?
        };
        Ok(Float::with_val(prec, z.recip()))
    }

    fn dirichlet_values(&self, c: f64, m: u32, prec: u32) -> Result<Vec<Float>> {
        if c <= 1.0 {
            return domain(format!("1/zeta(s) Dirichlet series needs c > 1, got {c}"));
        }
        if c.fract() == 0.0 && (c as u64).is_multiple_of(2) {
            // ζ(ck) with ck even: one Bernoulli table serves every k.
            let step = (c as u32) / 2;
            let wp = prec + GUARD_BITS;
            let table = zeta_even_table(step * m, wp);
            return Ok((1..=m)
                .map(|k| Float::with_val(prec, table[(step * k - 1) as usize].recip_ref()))
                .collect());
        }
        (1..=m)
            .map(|k| self.dirichlet_value(&Float::with_val(prec + GUARD_BITS, c * k as f64), prec))
            .collect()
    }

    fn magnitude_bound(&self, _c: f64) -> f64 {
        // 1/ζ(s) ∈ (0, 1] for s > 1
        1.0
    }
}

/// a(1) = 1 and a(n) = 0 otherwise: f ≡ 1 and R_c(x) = x e^{−x} for every c.
#[derive(Debug, Clone, Copy, Default)]
pub struct UnitProvider;

impl CoefficientProvider for UnitProvider {
    fn name(&self) -> &str {
        "unit"
    }

    fn sigma(&self) -> f64 {
        f64::NEG_INFINITY
    }

    fn envelope(&self) -> Envelope {
        Envelope {
            scale: 1.0,
            exponent: 0.0,
        }
    }

    fn coefficients(&self, n_max: u64) -> Result<Vec<i64>> {
        let mut v = vec![0i64; n_max as usize];
        if let Some(first) = v.first_mut() {
            *first = 1;
        }
        Ok(v)
    }

    fn tail_sum_bound(&self, _n_max: u64, _s: f64) -> Float {
        Float::new(64)
    }

    fn dirichlet_value(&self, s: &Float, prec: u32) -> Result<Float> {
        let _ = s;
        Ok(Float::with_val(prec, 1))
    }

    fn magnitude_bound(&self, _c: f64) -> f64 {
        1.0
    }
}

/// Multiply by 1 + 2^{−40} so that bounds computed at 64 bits stay upper bounds.
pub(crate) fn inflate(v: Float) -> Float {
    let f = Float::with_val(64, 1) + crate::numtheory::complex::pow2(64, -40);
    v * f
}

/// base^e for positive base, at the base's precision.
pub(crate) fn powf(base: &Float, e: f64) -> Float {
    let p = base.prec();
    (Float::with_val(p, base.ln_ref()) * Float::with_val(p, e)).exp()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mobius_head_values_are_reciprocal_zeta() {
        let p = MobiusProvider;
        let v = p.dirichlet_values(2.0, 3, 128).unwrap();
        let z2 = crate::numtheory::zeta_even(1, 128).unwrap();
        assert!((Float::with_val(128, &v[0] * &z2).to_f64() - 1.0).abs() < 1e-35);
        // c = 3 goes through the real ζ path
        let v3 = p.dirichlet_values(3.0, 2, 128).unwrap();
        let z3 = Float::with_val(128, 3).zeta();
        assert!((Float::with_val(128, &v3[0] * &z3).to_f64() - 1.0).abs() < 1e-35);
        // default direct summation agrees with 1/ζ(6)
        struct Plain;
        impl CoefficientProvider for Plain {
            fn name(&self) -> &str {
                "plain-mobius"
            }
            fn sigma(&self) -> f64 {
                1.0
            }
            fn envelope(&self) -> Envelope {
                Envelope {
                    scale: 1.0,
                    exponent: 0.0,
                }
            }
            fn coefficients(&self, n_max: u64) -> Result<Vec<i64>> {
                MobiusProvider.coefficients(n_max)
            }
        }
        let direct = Plain.dirichlet_value(&Float::with_val(64, 6), 60).unwrap();
        let exact = MobiusProvider
            .dirichlet_value(&Float::with_val(64, 6), 60)
            .unwrap();
        assert!(Float::with_val(60, &direct - &exact).abs().to_f64() < 1e-17);
    }

    #[test]
    fn tail_bound_dominates_actual_tail() {
        let p = MobiusProvider;
        let coeffs = p.coefficients(20_000).unwrap();
        for &(n_max, s) in &[(10u64, 2.0), (100, 2.0), (50, 4.0), (3, 6.0)] {
            let actual: f64 = coeffs[n_max as usize..]
                .iter()
                .enumerate()
                .map(|(i, &a)| (a.abs() as f64) * ((n_max as usize + i + 1) as f64).powf(-s))
                .sum();
            assert!(p.tail_sum_bound(n_max, s).to_f64() >= actual);
        }
        assert!(p.tail_sum_bound(10, 1.0).is_infinite());
        assert!(UnitProvider.tail_sum_bound(1, 0.5).is_zero());
    }

    #[test]
    fn unit_coefficients() {
        assert_eq!(UnitProvider.coefficients(4).unwrap(), vec![1, 0, 0, 0]);
        assert_eq!(
            MobiusProvider.coefficients(6).unwrap(),
            vec![1, -1, -1, 0, -1, 1]
        );
    }

    #[test]
    fn sigma_respected() {
        assert!(MobiusProvider
            .dirichlet_value(&Float::with_val(64, 1), 64)
            .is_err());
        assert!(MobiusProvider.dirichlet_values(1.0, 2, 64).is_err());
    }
}
