use rug::Float;

use riesz::api::{riesz, MethodChoice, RieszQuery};
use riesz::numtheory::{complex_zeta, BigComplex};
use riesz::zeros::{load_zeros, reconstruct_riesz, DEFAULT_BRACKET_K};
use riesz::RieszError;

fn bundled_path() -> String {
    concat!(env!("CARGO_MANIFEST_DIR"), "/data/zeros_100.txt").to_string()
}

#[test]
fn loads_from_disk() {
    let table = load_zeros(bundled_path()).unwrap();
    assert_eq!(table.len(), 100);
    assert_eq!(table.precision_decimal_digits, 50);
    assert!(table.zeros.iter().all(|z| z.zeta_prime.is_some()));
    assert!(table.source.ends_with("zeros_100.txt"));
}

#[test]
fn missing_file_is_io() {
    let e = load_zeros("/nonexistent/zeros.txt").unwrap_err();
    assert!(matches!(e, RieszError::Io(_)));
}

#[test]
fn tabulated_ordinates_are_zeros() {
    // |ζ(1/2 + it)| ≤ |ζ'(ρ)| · δt with δt the table's last-digit uncertainty
    let table = load_zeros(bundled_path()).unwrap();
    for z in table.zeros.iter().step_by(11) {
        let s = BigComplex {
            re: Float::with_val(200, 0.5),
            im: Float::with_val(200, &z.t),
        };
        let value = complex_zeta(&s, 200).unwrap();
        let slope = z.zeta_prime.as_ref().unwrap().abs().to_f64();
        let dt = z.t.to_f64() * 1e-49;
        assert!(value.abs().to_f64() <= slope * dt, "t = {}", z.t.to_f64());
    }
}

#[test]
fn more_zeros_reconstruct_better() {
    let table = load_zeros(bundled_path()).unwrap();
    for x in [1.0, 10.0] {
        let xf = Float::with_val(256, x);
        let q =
            RieszQuery::new(xf.clone(), Float::with_val(64, 1e-66), MethodChoice::Auto).unwrap();
        let reference = riesz(&q).unwrap();
        let error = |n: usize| {
            let rec =
                reconstruct_riesz(&xf, &table.truncated(n), DEFAULT_BRACKET_K, None, 240).unwrap();
            Float::with_val(240, &rec.value - &reference.value).abs()
        };
        let (e50, e100) = (error(50), error(100));
        assert!(e50 >= e100, "x = {x}");
        assert!(e100 < 1e-40);
    }
}
