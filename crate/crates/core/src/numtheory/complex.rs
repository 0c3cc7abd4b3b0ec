//! A minimal complex type over MPFR floats.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use rug::float::Constant;
use rug::ops::Pow;
use rug::Float;

/// Arbitrary-precision real. MPFR rounds every operation correctly, so the relative
/// error of a single operation at precision p is at most 2^{1−p}.
pub type BigReal = Float;

#[derive(Debug, Clone, PartialEq)]
pub struct BigComplex {
    pub re: BigReal,
    pub im: BigReal,
}

impl BigComplex {
    pub fn zero(prec: u32) -> Self {
        Self {
            re: Float::new(prec),
            im: Float::new(prec),
        }
    }

    pub fn from_f64(re: f64, im: f64, prec: u32) -> Self {
        Self {
            re: Float::with_val(prec, re),
            im: Float::with_val(prec, im),
        }
    }

    /// Both parts are rounded to `prec`.
    pub fn with_prec(re: &Float, im: &Float, prec: u32) -> Self {
        Self {
            re: Float::with_val(prec, re),
            im: Float::with_val(prec, im),
        }
    }

    pub fn from_real(re: &Float, prec: u32) -> Self {
        Self {
            re: Float::with_val(prec, re),
            im: Float::new(prec),
        }
    }

    pub fn prec(&self) -> u32 {
        self.re.prec()
    }

    pub fn set_prec(&mut self, prec: u32) {
        self.re.set_prec(prec);
        self.im.set_prec(prec);
    }

    pub fn conj(&self) -> Self {
        Self {
            re: self.re.clone(),
            im: Float::with_val(self.prec(), -&self.im),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn norm_sqr(&self) -> Float {
        let p = self.prec();
        Float::with_val(p, self.re.square_ref()) + Float::with_val(p, self.im.square_ref())
    }

    pub fn abs(&self) -> Float {
        Float::with_val(self.prec(), self.re.hypot_ref(&self.im))
    }

    pub fn arg(&self) -> Float {
        Float::with_val(self.prec(), self.im.atan2_ref(&self.re))
    }

    pub fn scale(&self, k: &Float) -> Self {
        let p = self.prec();
        Self {
            re: Float::with_val(p, &self.re * k),
            im: Float::with_val(p, &self.im * k),
        }
    }

    pub fn exp(&self) -> Self {
        let p = self.prec();
        let modulus = Float::with_val(p, self.re.exp_ref());
        let (s, c) = self.im.clone().sin_cos(Float::new(p));
        Self {
            re: c * &modulus,
            im: s * modulus,
        }
    }

    /// Principal logarithm, imaginary part in (−π, π].
    pub fn ln(&self) -> Self {
        Self {
            re: self.abs().ln(),
            im: self.arg(),
        }
    }

    pub fn sin(&self) -> Self {
        // sin(a+ib) = sin a cosh b + i cos a sinh b
        let p = self.prec();
        let (s, c) = self.re.clone().sin_cos(Float::new(p));
        let (sh, ch) = self.im.clone().sinh_cosh(Float::new(p));
        Self {
            re: s * ch,
            im: c * sh,
        }
    }

    /// `base^self` for a positive real base.
    pub fn real_base_pow(base: &Float, exponent: &BigComplex) -> Self {
        let p = exponent.prec();
        let lb = Float::with_val(p, base.ln_ref());
        exponent.scale(&lb).exp()
    }

    /// `self^k` for a small integer power (repeated squaring).
    pub fn powi(&self, mut k: u32) -> Self {
        let p = self.prec();
        let mut base = self.clone();
        let mut acc = BigComplex {
            re: Float::with_val(p, 1),
            im: Float::new(p),
        };
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            k >>= 1;
        }
        acc
    }

    pub fn recip(&self) -> Self {
        let p = self.prec();
        let n = self.norm_sqr();
        Self {
            re: Float::with_val(p, &self.re / &n),
            im: Float::with_val(p, -&self.im) / n,
        }
    }

    pub fn add_real(&self, r: &Float) -> Self {
        Self {
            re: Float::with_val(self.prec(), &self.re + r),
            im: self.im.clone(),
        }
    }

    pub fn pi(prec: u32) -> Float {
        Float::with_val(prec, Constant::Pi)
    }

    /// 1 − 2^{1−s}, the factor linking ζ to the alternating η series.
    pub(crate) fn one_minus_two_pow_one_minus(&self) -> Self {
        let p = self.prec();
        let e = BigComplex {
            re: Float::with_val(p, 1 - &self.re),
            im: Float::with_val(p, -&self.im),
        };
        let two = Float::with_val(p, 2);
        let t = BigComplex::real_base_pow(&two, &e);
        BigComplex {
            re: Float::with_val(p, 1 - &t.re),
            im: -t.im,
        }
    }

    pub fn to_f64_pair(&self) -> (f64, f64) {
        (self.re.to_f64(), self.im.to_f64())
    }

    /// |self − other| / |other| as an f64, for comparisons in tests and reports.
    pub fn rel_diff(&self, other: &BigComplex) -> f64 {
        let d = self - other;
        let den = other.abs();
        if den.is_zero() {
            d.abs().to_f64()
        } else {
            Float::with_val(self.prec(), d.abs() / den).to_f64()
        }
    }
}

impl fmt::Display for BigComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_sign_negative() {
            write!(
                f,
                "{} - {}i",
                self.re,
                Float::with_val(self.prec(), -&self.im)
            )
        } else {
            write!(f, "{} + {}i", self.re, self.im)
        }
    }
}

impl Add for &BigComplex {
    type Output = BigComplex;
    fn add(self, o: &BigComplex) -> BigComplex {
        let p = self.prec();
        BigComplex {
            re: Float::with_val(p, &self.re + &o.re),
            im: Float::with_val(p, &self.im + &o.im),
        }
    }
}

impl Sub for &BigComplex {
    type Output = BigComplex;
    fn sub(self, o: &BigComplex) -> BigComplex {
        let p = self.prec();
        BigComplex {
            re: Float::with_val(p, &self.re - &o.re),
            im: Float::with_val(p, &self.im - &o.im),
        }
    }
}

impl Mul for &BigComplex {
    type Output = BigComplex;
    fn mul(self, o: &BigComplex) -> BigComplex {
        let p = self.prec();
        let re = Float::with_val(p, &self.re * &o.re) - Float::with_val(p, &self.im * &o.im);
        let im = Float::with_val(p, &self.re * &o.im) + Float::with_val(p, &self.im * &o.re);
        BigComplex { re, im }
    }
}

impl Div for &BigComplex {
    type Output = BigComplex;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, o: &BigComplex) -> BigComplex {
        self * &o.recip()
    }
}

impl Neg for &BigComplex {
    type Output = BigComplex;
    fn neg(self) -> BigComplex {
        let p = self.prec();
        BigComplex {
            re: Float::with_val(p, -&self.re),
            im: Float::with_val(p, -&self.im),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for BigComplex {
            type Output = BigComplex;
            fn $m(self, o: BigComplex) -> BigComplex {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

/// 2^e as a Float, for bounds.
pub(crate) fn pow2(prec: u32, e: i64) -> Float {
    let two = Float::with_val(prec, 2);
    two.pow(e as i32)
}
