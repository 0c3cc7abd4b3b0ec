//! Order-fixed parallel summation.
//!
//! The index range is cut into fixed-size chunks independent of the worker count; each chunk
//! is summed left to right and the chunk totals are combined by a pairwise tree in index order.
//! The rounding sequence, and therefore every bit of the result, is the same for any pool size.

use rayon::prelude::*;
use rug::Float;

const CHUNK: u64 = 1024;

/// Σ term(n) and Σ |term(n)| over n in 1..=n_max at precision `wp`.
pub fn chunked_sum<F>(n_max: u64, wp: u32, term: F) -> (Float, Float)
where
    F: Fn(u64) -> Option<Float> + Sync,
{
    let chunks = n_max.div_ceil(CHUNK);
    let partials: Vec<(Float, Float)> = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let lo = c * CHUNK + 1;
            let hi = ((c + 1) * CHUNK).min(n_max);
            let mut acc = Float::new(wp);
            let mut abs = Float::new(wp);
            for n in lo..=hi {
                if let Some(t) = term(n) {
                    abs += Float::with_val(wp, t.abs_ref());
                    acc += t;
                }
            }
            (acc, abs)
        })
        .collect();
    let (sums, abss): (Vec<Float>, Vec<Float>) = partials.into_iter().unzip();
    (tree_sum(sums, wp), tree_sum(abss, wp))
}

/// Pairwise sum in index order.
pub fn tree_sum(mut values: Vec<Float>, wp: u32) -> Float {
    if values.is_empty() {
        return Float::new(wp);
    }
    while values.len() > 1 {
        let mut next = Vec::with_capacity(values.len().div_ceil(2));
        let mut it = values.into_iter();
        while let Some(a) = it.next() {
            match it.next() {
                Some(b) => next.push(a + b),
                None => next.push(a),
            }
        }
        values = next;
    }
    values.pop().expect("nonempty")
}
