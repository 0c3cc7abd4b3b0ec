//! Möbius function by linear sieve.

use crate::error::{Result, RieszError};

/// Sieves above this limit are refused rather than attempted.
pub const MAX_SIEVE_LIMIT: usize = 1 << 32;

/// μ(n) for 1 ≤ n ≤ limit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MobiusTable {
    limit: usize,
    // values[0] is unused padding so that values[n] = μ(n).
    values: Vec<i8>,
}

impl MobiusTable {
    pub fn limit(&self) -> usize {
        self.limit
    }

    /// μ(n), or `None` when n is 0 or beyond the sieved range.
    pub fn get(&self, n: usize) -> Option<i8> {
        if n == 0 || n > self.limit {
            None
        } else {
            Some(self.values[n])
        }
    }

    /// μ(1), μ(2), …, μ(limit).
    pub fn values(&self) -> &[i8] {
        &self.values[1..]
    }
}

/// Linear (Euler) sieve: each composite is struck exactly once by its least prime factor,
/// so the whole table costs O(limit).
pub fn mobius_sieve(limit: usize) -> Result<MobiusTable> {
    if limit == 0 {
        return Err(RieszError::Domain("mobius_sieve needs limit >= 1".into()));
    }
    if limit > MAX_SIEVE_LIMIT {
        return Err(RieszError::Resource(format!(
            "mobius_sieve limit {limit} exceeds {MAX_SIEVE_LIMIT}"
        )));
    }
    let mut values = Vec::new();
    values
        .try_reserve_exact(limit + 1)
        .map_err(|e| RieszError::Resource(format!("mobius table of {limit} entries: {e}")))?;
    values.resize(limit + 1, 0i8);
    let mut composite = vec![false; limit + 1];
    let mut primes: Vec<usize> = Vec::new();
    values[1] = 1;
    for i in 2..=limit {
        if !composite[i] {
            primes.push(i);
            values[i] = -1;
        }
        for &p in &primes {
            let Some(ip) = i.checked_mul(p).filter(|&v| v <= limit) else {
                break;
            };
            composite[ip] = true;
            if i % p == 0 {
                values[ip] = 0;
                break;
            }
            values[ip] = -values[i];
        }
    }
    Ok(MobiusTable { limit, values })
}
