use std::sync::OnceLock;

use proptest::prelude::*;
use rug::ops::Pow;
use rug::{Float, Integer};

use riesz::api::{riesz, riesz_general, MethodChoice, RieszQuery};
use riesz::numtheory::{completed_zeta, complex_zeta, mobius_sieve, BigComplex, MobiusTable};
use riesz::series::{
    kummer_series, maclaurin_riesz, remainder_f, riesz_maclaurin_coefficients, Method,
    MobiusProvider,
};
use riesz::zeros::{bracket_zeros, bundled_zeros, parse_zeros, zero_term};

fn factorial(m: u32, prec: u32) -> Float {
    Float::with_val(prec, Integer::from(Integer::factorial(m)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn remainder_steps_by_one_power(x in -10.0f64..10.0, m in 0u32..=30) {
        let prec = 256;
        let xf = Float::with_val(prec, x);
        let a = remainder_f(&xf, m, prec);
        let b = remainder_f(&xf, m + 1, prec);
        let term = Float::with_val(prec, xf.clone().pow(m)) / factorial(m, prec);
        let diff = Float::with_val(prec, &a - &b) - &term;
        let scale = Float::with_val(prec, a.abs_ref()).max(&Float::with_val(prec, term.abs_ref()));
        prop_assert!(diff.abs() <= scale * Float::with_val(prec, Float::i_exp(1, 8 - prec as i32)));
    }

    #[test]
    fn remainder_bound(x in -20.0f64..20.0, m in 0u32..=25) {
        // Lagrange: F_m(x) = e^ξ x^m/m! with ξ between 0 and x, so |F_m(x)| ≤ |x|^m/m! for x ≤ 0
        let prec = 140;
        let xf = Float::with_val(prec, x);
        let f = remainder_f(&xf, m, prec);
        let mut bound = Float::with_val(prec, xf.clone().abs().pow(m)) / factorial(m, prec);
        if x > 0.0 {
            bound *= Float::with_val(prec, xf.exp_ref());
        }
        prop_assert!(f.abs() <= bound);
    }

    #[test]
    fn longer_sums_never_loosen_the_bound(x in 0.5f64..200.0, m in 0u32..12, n in 1u64..400) {
        let xf = Float::with_val(128, x);
        let short = kummer_series(&MobiusProvider, 2.0, &xf, m, n, 128).unwrap();
        let long = kummer_series(&MobiusProvider, 2.0, &xf, m, n + 1 + n / 3, 128).unwrap();
        prop_assert!(long.error_bound <= short.error_bound);
        prop_assert!(short.agrees_with(&long));
    }

    #[test]
    fn mobius_multiplicative(a in 1u32..3000, b in 1u32..3000) {
        static TABLE: OnceLock<MobiusTable> = OnceLock::new();
        let table = TABLE.get_or_init(|| mobius_sieve(9_000_000).unwrap());
        let (a, b) = (a as usize, b as usize);
        let g = Integer::from(a).gcd(&Integer::from(b));
        if g == 1 {
            let ab = table.get(a * b).unwrap();
            prop_assert_eq!(ab, table.get(a).unwrap() * table.get(b).unwrap());
        }
    }

    #[test]
    fn completed_zeta_symmetry(re in 0.2f64..0.8, im in -30.0f64..30.0) {
        let s = BigComplex::from_f64(re, im, 200);
        let one_minus = BigComplex { re: Float::with_val(200, 1 - &s.re), im: Float::with_val(200, -&s.im) };
        let a = completed_zeta(&s, 160).unwrap();
        let b = completed_zeta(&one_minus, 160).unwrap();
        prop_assert!(a.rel_diff(&b) < 1e-40);
    }

    #[test]
    fn zeta_conjugate_symmetry(re in -3.0f64..3.0, im in 0.5f64..40.0) {
        let s = BigComplex::from_f64(re, im, 160);
        let a = complex_zeta(&s, 128).unwrap();
        let b = complex_zeta(&s.conj(), 128).unwrap();
        prop_assert!(b.rel_diff(&a.conj()) < 1e-35);
    }

    #[test]
    fn brackets_partition(gaps in proptest::collection::vec(1e-9f64..3.0, 0..40), k in 1.0001f64..1e6) {
        let mut t = 20.0;
        let mut text = String::new();
        for g in &gaps {
            t += g;
            text.push_str(&format!("{t:.12}\n"));
        }
        let table = parse_zeros(&text, "random").unwrap();
        let brackets = bracket_zeros(&table, k).unwrap();
        let mut next = 0;
        for b in &brackets {
            prop_assert!(b.start == next && b.end > b.start);
            next = b.end;
        }
        prop_assert_eq!(next, table.len());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(20))]

    #[test]
    fn general_route_specializes_to_riesz(x in 0.0f64..200.0) {
        let xf = Float::with_val(128, x);
        let tol = Float::with_val(64, 1e-25);
        let direct = riesz(&RieszQuery::new(xf.clone(), tol.clone(), MethodChoice::Auto).unwrap()).unwrap();
        let general = riesz_general(&MobiusProvider, 2.0, &xf, &tol).unwrap();
        prop_assert!(direct.agrees_with(&general));
    }

    #[test]
    fn forced_methods_agree(x in 0.1f64..60.0) {
        let xf = Float::with_val(128, x);
        let tol = Float::with_val(64, 1e-20);
        let auto = riesz(&RieszQuery::new(xf.clone(), tol.clone(), MethodChoice::Auto).unwrap()).unwrap();
        let expected = if x <= 32.0 { Method::Maclaurin } else { Method::Kummer };
        prop_assert_eq!(auto.method, expected);
        for m in [Method::Maclaurin, Method::Kummer] {
            let forced = riesz(&RieszQuery::new(xf.clone(), tol.clone(), MethodChoice::Fixed(m)).unwrap()).unwrap();
            prop_assert_eq!(forced.method, m);
            prop_assert!(forced.agrees_with(&auto));
        }
    }

    #[test]
    fn zero_terms_decay_in_t(x in 0.1f64..1000.0) {
        let table = bundled_zeros();
        let xf = Float::with_val(128, x);
        let sizes: Vec<Float> = table.zeros.iter().map(|z| zero_term(z, &xf, 128).unwrap().abs()).collect();
        for w in sizes.windows(2).skip(3) {
            prop_assert!(w[1] < w[0]);
        }
    }
}

/// Riesz(x) > 0 on (0, 1]: summed with exact rationals at x = p/q, bounding π² rationally.
#[test]
fn positive_near_origin() {
    use rug::Rational;
    let coeffs = riesz_maclaurin_coefficients(40);
    // 4π² ∈ (39.4784, 39.4785)
    let four_pi_sq_lo = Rational::from((394_784, 10_000));
    let four_pi_sq_hi = Rational::from((394_785, 10_000));
    for q in 1..=20u32 {
        let x = Rational::from((q, 20));
        // the odd (positive) terms use the larger y, even (negative) terms the smaller one: a lower bound
        let mut lower = Rational::new();
        for (i, c) in coeffs.iter().enumerate() {
            let k = i as u32 + 1;
            let four = if k % 2 == 1 {
                &four_pi_sq_hi
            } else {
                &four_pi_sq_lo
            };
            let y = Rational::from(&x / four);
            lower += c * y.pow(k);
        }
        // remaining terms are below 1e-60 for x ≤ 1
        assert!(lower > 0, "x = {q}/20");
        let xf = Float::with_val(128, q) / 20u32;
        assert!(maclaurin_riesz(&xf, 40, 128).unwrap().value > 0);
    }
}
