//! Exact Bernoulli numbers and the Maclaurin coefficients of (x/2)·coth(x/2).
//!
//! Even-index Bernoulli numbers come from the tangent numbers T_k (tan x = Σ T_k x^{2k−1}/(2k−1)!),
//! which satisfy an integer-only in-place recurrence. Only small-integer multiplies and
//! additions on `Integer`s are needed, so the table up to B_{2n} costs O(n²) big-integer
//! operations and no rational normalisation until the very end.

use rug::{Integer, Rational};

/// T_1, …, T_n. Empty for n = 0.
pub fn tangent_numbers(n: usize) -> Vec<Integer> {
    let mut t: Vec<Integer> = Vec::with_capacity(n);
    if n == 0 {
        return t;
    }
    t.push(Integer::from(1));
    for k in 1..n {
        let next = Integer::from(&t[k - 1] * k as u64);
        t.push(next);
    }
    for k in 1..n {
        for j in k..n {
            // T_j ← (j−k)·T_{j−1} + (j−k+2)·T_j in 1-based indices.
            let lower = Integer::from(&t[j - 1] * (j - k) as u64);
            t[j] *= (j - k + 2) as u64;
            t[j] += lower;
        }
    }
    t
}

/// B_0, B_2, …, B_{2(count−1)} as exact rationals.
pub fn bernoulli_even(count: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(count);
    if count == 0 {
        return out;
    }
    out.push(Rational::from(1));
    let tangents = tangent_numbers(count - 1);
    for (i, tk) in tangents.into_iter().enumerate() {
        let k = i as u32 + 1;
        // B_{2k} = (−1)^{k−1} · 2k · T_k / (4^k (4^k − 1))
        let four_k = Integer::from(1) << (2 * k);
        let den = Integer::from(&four_k - 1u32) * &four_k;
        let mut num = tk * (2 * k);
        if k.is_multiple_of(2) {
            num = -num;
        }
        out.push(Rational::from((num, den)));
    }
    out
}

/// c_0, c_2, …, c_{2(count−1)} where (x/2)·coth(x/2) = Σ c_{2n} x^{2n}, i.e. c_{2n} = B_{2n}/(2n)!.
///
/// Odd-index coefficients vanish and are not stored.
pub fn bernoulli_coefficients(count: usize) -> Vec<Rational> {
    let bern = bernoulli_even(count);
    let mut factorial = Integer::from(1);
    bern.into_iter()
        .enumerate()
        .map(|(n, b)| {
            if n > 0 {
                factorial *= (2 * n - 1) as u64;
                factorial *= (2 * n) as u64;
            }
            b / &factorial
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    /// B_0..B_n from the classical recurrence Σ_{j=0}^{m} C(m+1, j) B_j = 0,
    /// which shares nothing with the tangent-number path.
    fn bernoulli_naive(n: usize) -> Vec<Rational> {
        let mut b: Vec<Rational> = vec![Rational::from(1)];
        for m in 1..=n {
            let mut acc = Rational::new();
            let mut binom = Integer::from(1); // C(m+1, 0)
            for (j, bj) in b.iter().enumerate() {
                acc += Rational::from(bj * &binom);
                binom *= (m + 1 - j) as u64;
                binom /= (j + 1) as u64;
            }
            // binom is now C(m+1, m)
            b.push(-acc / binom);
        }
        b
    }

    #[test]
    fn tangent_numbers_small() {
        let t: Vec<u64> = tangent_numbers(6)
            .iter()
            .map(|v| v.to_u64().unwrap())
            .collect();
        assert_eq!(t, vec![1, 2, 16, 272, 7936, 353792]);
    }

    #[test]
    fn coth_expansion_head() {
        let c = bernoulli_coefficients(4);
        assert_eq!(c[0], Rational::from(1));
        assert_eq!(c[1], Rational::from((1, 12)));
        assert_eq!(c[2], Rational::from((-1, 720)));
        assert_eq!(c[3], Rational::from((1, 30240)));
    }

    #[test]
    fn agrees_with_classical_recurrence() {
        let naive = bernoulli_naive(120);
        let fast = bernoulli_even(61);
        for (k, b) in fast.iter().enumerate() {
            assert_eq!(b, &naive[2 * k], "B_{}", 2 * k);
        }
        // odd Bernoulli numbers beyond B_1 vanish, so the even table is complete
        for k in 1..60 {
            assert_eq!(naive[2 * k + 1], Rational::new(), "B_{}", 2 * k + 1);
        }
    }

    #[test]
    fn signs_alternate() {
        for (k, b) in bernoulli_even(40).iter().enumerate().skip(1) {
            let expected = if k % 2 == 1 { 1 } else { -1 };
            assert_eq!(b.cmp0() as i32, expected, "B_{}", 2 * k);
        }
    }

    #[test]
    fn empty_and_single() {
        assert!(bernoulli_even(0).is_empty());
        assert_eq!(bernoulli_coefficients(1), vec![Rational::from(1)]);
    }
}
