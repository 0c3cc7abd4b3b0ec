//! Series evaluators for R_c(x) and their truncation planning.
//!
//! * [`maclaurin_riesz`]: the defining power series rewritten with rational coefficients
//!   2/(c_{2k}(k−1)!) in y = x/(4π²).
//! * [`theorem1_series`]: x Σ a(n) n^{−c} exp(−x/n^c).
//! * [`kummer_series`]: the same sum after subtracting the first m terms of each exponential,
//!   with those m terms restored as an explicit head Σ_{k≤m} (−1)^{k+1} f(ck) x^k/(k−1)!.
//!
//! Every evaluator returns a rigorous error bound covering truncation and rounding.

use std::fmt;
use std::str::FromStr;

use rug::Float;

mod exponential;
mod maclaurin;
mod planner;
pub mod provider;
pub mod reduce;
mod remainder;

pub use exponential::{kummer_series, shifted_kummer_series, theorem1_series};
pub use maclaurin::{maclaurin_riesz, maclaurin_terms_needed, riesz_maclaurin_coefficients};
pub use planner::{kummer_truncation_bound, plan_shifted, plan_truncation, plan_truncation_for};
pub use provider::{CoefficientProvider, Envelope, MobiusProvider, UnitProvider};
pub use remainder::remainder_f;

use crate::error::{Result, RieszError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Maclaurin,
    Theorem1,
    Kummer,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Maclaurin => "maclaurin",
            Method::Theorem1 => "theorem1",
            Method::Kummer => "kummer",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Method {
    type Err = RieszError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "maclaurin" => Ok(Method::Maclaurin),
            "theorem1" => Ok(Method::Theorem1),
            "kummer" => Ok(Method::Kummer),
            other => Err(RieszError::Domain(format!("unknown method '{other}'"))),
        }
    }
}

/// Truncation and precision parameters. For the Maclaurin route `m` is the number of series
/// terms and `n_max` is 1.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesParams {
    pub c: f64,
    pub m: u32,
    pub n_max: u64,
    pub precision_bits: u32,
}

#[derive(Debug, Clone)]
pub struct EvaluationResult {
    pub value: Float,
    /// Rigorous, finite, nonnegative bound on |value − exact|.
    pub error_bound: Float,
    pub params: SeriesParams,
    pub method: Method,
}

impl EvaluationResult {
    pub(crate) fn exact_zero(params: SeriesParams, method: Method) -> Self {
        Self {
            value: Float::new(params.precision_bits),
            error_bound: Float::new(64),
            params,
            method,
        }
    }

    /// Whether |self − other| ≤ self.error_bound + other.error_bound.
    pub fn agrees_with(&self, other: &EvaluationResult) -> bool {
        let p = self.value.prec().max(other.value.prec());
        let diff = Float::with_val(p, &self.value - &other.value).abs();
        let allowed = Float::with_val(64, &self.error_bound + &other.error_bound);
        diff <= allowed
    }
}
