use proptest::prelude::*;

use super::*;

fn z(n: u64, k: i64) -> Cyclotomic {
    Cyclotomic::root_of_unity(n, k)
}

fn int(i: i64) -> Cyclotomic {
    Cyclotomic::from_integer(i)
}

/// Numerical value, used only as an independent check.
fn approx(c: &Cyclotomic) -> (f64, f64) {
    let n = c.conductor() as f64;
    c.coeffs().iter().enumerate().fold((0.0, 0.0), |(re, im), (i, q)| {
        let q = q.to_f64().unwrap();
        let t = std::f64::consts::TAU * i as f64 / n;
        (re + q * t.cos(), im + q * t.sin())
    })
}

fn close(a: (f64, f64), b: (f64, f64)) -> bool {
    (a.0 - b.0).abs() < 1e-9 && (a.1 - b.1).abs() < 1e-9
}

#[test]
fn sums_of_roots() {
    let s: Cyclotomic = (1..5).map(|k| z(5, k)).sum();
    assert_eq!(s, int(-1));
    let x = &int(1) + &z(5, 1);
    assert_eq!(&x + &Cyclotomic::zero(), x);
    assert_eq!(&x + &(&int(1) - &z(5, 1)), int(2));
}

#[test]
fn products() {
    assert_eq!(&z(4, 1) * &z(4, 1), int(-1));
    assert_eq!(&z(5, 1) * &z(5, 4), int(1));
    let golden = -(&z(5, 2) + &z(5, 3));
    let expected = &int(1) - &(&z(5, 2) + &z(5, 3));
    assert_eq!(&golden * &golden, expected);
    assert_eq!(&(&golden * &golden) - &golden, int(1));
}

#[test]
fn integrality() {
    assert_eq!(int(6).as_rational_integer().unwrap(), 6.into());
    let s = &(&z(3, 1) + &z(3, 2)) + &int(1);
    assert_eq!(s.as_rational_integer().unwrap(), 0.into());
    match z(5, 1).as_rational_integer() {
        Err(Error::Integrality { residual }) => assert_eq!(residual, "z5"),
        other => panic!("unexpected {other:?}"),
    }
    let half = Cyclotomic::from_rational(BigRational::new(1.into(), 2.into()));
    assert!(half.as_rational_integer().is_err());
}

#[test]
fn conductors_are_minimal() {
    assert_eq!(z(6, 2).conductor(), 3);
    assert_eq!(z(6, 1).conductor(), 3); // -z3^2
    assert_eq!(z(10, 1), -z(5, 3));
    assert_eq!(z(12, 3), z(4, 1));
    assert_eq!(z(2, 1), int(-1));
    // sqrt(5) = 1 + 2(z5 + z5^4) lives in conductor 5
    let r5 = &int(1) + &(&z(5, 1) + &z(5, 4)).scale(&BigRational::from_integer(2.into()));
    assert_eq!(r5.conductor(), 5);
    assert_eq!(&r5 * &r5, int(5));
    // i*sqrt(3) = z3 - z3^2; times i is back in conductor 3 after a trip through 12
    let s = &z(3, 1) - &z(3, 2);
    let p = &s * &z(4, 1);
    assert_eq!(p.conductor(), 12);
    assert_eq!(&p * &z(4, 3), s);
    // z15 + z15^4 + ... sums that land in a subfield
    let gauss: Cyclotomic = [1, 4, 11, 14].iter().map(|&k| z(15, k)).sum();
    assert!(close(approx(&gauss), approx(&gauss.conj())));
}

#[test]
fn conjugation() {
    assert_eq!(z(7, 1).conj(), z(7, 6));
    assert_eq!(int(3).conj(), int(3));
    let x = &int(2) + &z(8, 3);
    let norm = &x * &x.conj();
    assert_eq!(norm.conj(), norm);
    let (re, im) = approx(&norm);
    assert!(im.abs() < 1e-12 && re > 0.0);
}

#[test]
fn display() {
    assert_eq!(int(-3).to_string(), "-3");
    let x = &(&int(1) - &z(5, 1)).scale(&BigRational::new(1.into(), 2.into())) + &z(5, 2).scale(&BigRational::from_integer(3.into()));
    assert_eq!(x.to_string(), "1/2 - 1/2*z5 + 3*z5^2");
}

#[test]
fn serde_round_trip() {
    let x = &z(12, 5) + &int(7);
    let s = serde_json::to_string(&x).unwrap();
    let back: Cyclotomic = serde_json::from_str(&s).unwrap();
    assert_eq!(back, x);
    let plain: Cyclotomic = serde_json::from_str("-2").unwrap();
    assert_eq!(plain, int(-2));
    // unreduced input over x^4 in conductor 5
    let raw: Cyclotomic =
        serde_json::from_str(r#"{"conductor":5,"coeffs":[[0,1],[1,1],[1,1],[1,1],[1,1]]}"#).unwrap();
    assert_eq!(raw, int(-1));
    assert!(serde_json::from_str::<Cyclotomic>(r#"{"conductor":3,"coeffs":[[1,0]]}"#).is_err());
}

const CONDUCTORS: [u64; 7] = [1, 3, 4, 5, 7, 8, 15];

fn element() -> impl Strategy<Value = Cyclotomic> {
    (prop::sample::select(&CONDUCTORS[..]), prop::collection::vec((-4i64..5, 1i64..4), 1..9)).prop_map(
        |(n, cs)| {
            let coeffs = cs
                .into_iter()
                .take(n as usize)
                .map(|(a, b)| BigRational::new(a.into(), b.into()))
                .collect();
            Cyclotomic::from_polynomial(n, coeffs)
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(a in element(), b in element(), c in element()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a - &a), &Cyclotomic::zero());
        let (x, y) = (approx(&a), approx(&b));
        let expected = (x.0 * y.0 - x.1 * y.1, x.0 * y.1 + x.1 * y.0);
        prop_assert!(close(approx(&(&a * &b)), expected));
    }

    #[test]
    fn lifting_then_reducing_is_identity(a in element(), k in 1u64..5) {
        let m = a.conductor() * k;
        let up = Cyclotomic::from_polynomial(m, a.lifted(m));
        prop_assert_eq!(up, a);
    }

    #[test]
    fn conjugation_matches_numerics(a in element()) {
        let (re, im) = approx(&a);
        prop_assert!(close(approx(&a.conj()), (re, -im)));
        prop_assert_eq!(a.conj().conj(), a);
    }
}
