//! Plain-text tables of nontrivial zeta zeros.
//!
//! One zero per line: the imaginary part t of ρ = 1/2 + it, optionally followed by the real and
//! imaginary parts of ζ'(ρ). Blank lines and lines starting with `#` are ignored.

use std::fs;
use std::path::Path;

use rug::Float;

use crate::error::{Result, RieszError};
use crate::numtheory::BigComplex;

#[derive(Debug, Clone, PartialEq)]
pub struct ZeroRecord {
    pub t: Float,
    pub zeta_prime: Option<BigComplex>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ZeroTable {
    pub zeros: Vec<ZeroRecord>,
    pub source: String,
    /// Fewest significant digits among the ordinates; 0 for an empty table.
    pub precision_decimal_digits: u32,
}

impl ZeroTable {
    pub fn len(&self) -> usize {
        self.zeros.len()
    }

    pub fn is_empty(&self) -> bool {
        self.zeros.is_empty()
    }

    /// The first `count` zeros.
    pub fn truncated(&self, count: usize) -> ZeroTable {
        ZeroTable {
            zeros: self.zeros.iter().take(count).cloned().collect(),
            source: format!("{} (first {count})", self.source),
            precision_decimal_digits: self.precision_decimal_digits,
        }
    }

    /// Same ordinates with any supplied ζ'(ρ) dropped, forcing numerical differentiation.
    pub fn without_derivatives(&self) -> ZeroTable {
        ZeroTable {
            zeros: self
                .zeros
                .iter()
                .map(|z| ZeroRecord {
                    t: z.t.clone(),
                    zeta_prime: None,
                })
                .collect(),
            source: self.source.clone(),
            precision_decimal_digits: self.precision_decimal_digits,
        }
    }
}

pub fn load_zeros(path: impl AsRef<Path>) -> Result<ZeroTable> {
    let path = path.as_ref();
    let text = fs::read_to_string(path)?;
    parse_zeros(&text, &path.display().to_string())
}

fn significant_digits(token: &str) -> u32 {
    let mantissa = token.split(['e', 'E']).next().unwrap_or("");
    let digits: String = mantissa.chars().filter(|c| c.is_ascii_digit()).collect();
    digits.trim_start_matches('0').len() as u32
}

fn parse_number(token: &str, prec: u32, line: usize) -> Result<Float> {
    let parsed = Float::parse(token).map_err(|e| RieszError::Format {
        line,
        message: format!("'{token}' is not a decimal number ({e})"),
    })?;
    let v = Float::with_val(prec, parsed);
    if !v.is_finite() {
        return Err(RieszError::Format {
            line,
            message: format!("'{token}' is not finite"),
        });
    }
    Ok(v)
}

pub fn parse_zeros(text: &str, source: &str) -> Result<ZeroTable> {
    let mut zeros: Vec<ZeroRecord> = Vec::new();
    let mut min_digits: Option<u32> = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        if !trimmed.is_ascii() {
            return Err(RieszError::Format {
                line,
                message: "non-ASCII content".into(),
            });
        }
        let fields: Vec<&str> = trimmed.split_whitespace().collect();
        if fields.len() != 1 && fields.len() != 3 {
            return Err(RieszError::Format {
                line,
                message: format!("expected 't' or 't re im', found {} fields", fields.len()),
            });
        }
        let digits = significant_digits(fields[0]);
        let prec = ((digits as f64 * std::f64::consts::LOG2_10).ceil() as u32 + 64).max(128);
        let t = parse_number(fields[0], prec, line)?;
        if t <= 0 {
            return Err(RieszError::Validation(format!(
                "line {line}: ordinate must be positive"
            )));
        }
        if let Some(prev) = zeros.last() {
            if t == prev.t {
                return Err(RieszError::Validation(format!(
                    "line {line}: duplicate ordinate {}",
                    fields[0]
                )));
            }
            if t < prev.t {
                return Err(RieszError::Validation(format!(
                    "line {line}: ordinates not ascending"
                )));
            }
        }
        let zeta_prime = if fields.len() == 3 {
            let re = parse_number(fields[1], prec, line)?;
            let im = parse_number(fields[2], prec, line)?;
            Some(BigComplex { re, im })
        } else {
            None
        };
        min_digits = Some(min_digits.map_or(digits, |d| d.min(digits)));
        zeros.push(ZeroRecord { t, zeta_prime });
    }
    Ok(ZeroTable {
        zeros,
        source: source.to_string(),
        precision_decimal_digits: min_digits.unwrap_or(0),
    })
}
