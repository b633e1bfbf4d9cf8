use cyclo::{CycloNumber, ratio};
use proptest::prelude::*;

fn element(n: u32) -> impl Strategy<Value = CycloNumber> {
    prop::collection::vec((0..n as i64, -6i64..=6, 1i64..=4), 0..6).prop_map(move |terms| {
        let terms: Vec<_> = terms.into_iter().map(|(k, p, q)| (k, ratio(p, q))).collect();
        CycloNumber::from_terms(n, &terms)
    })
}

fn check_axioms(a: &CycloNumber, b: &CycloNumber, c: &CycloNumber) -> Result<(), TestCaseError> {
    prop_assert_eq!(a + b, b + a);
    prop_assert_eq!(a * b, b * a);
    prop_assert_eq!(&(a * b) * c, a * &(b * c));
    prop_assert_eq!(a * &(b + c), &(a * b) + &(a * c));
    prop_assert_eq!(&(a - b) + b, a.clone());
    prop_assert_eq!((a * b).conj(), &a.conj() * &b.conj());
    if !a.is_zero() {
        let inv = a.inv().unwrap();
        prop_assert!((a * &inv).is_one());
    }
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn conductor_24(a in element(24), b in element(24), c in element(24)) {
        check_axioms(&a, &b, &c)?;
    }

    #[test]
    fn conductor_39(a in element(39), b in element(39), c in element(39)) {
        check_axioms(&a, &b, &c)?;
    }

    #[test]
    fn galois_is_a_ring_map(a in element(39), b in element(39), k in prop::sample::select(vec![2i64, 5, 7, 38])) {
        prop_assert_eq!((&a * &b).galois(k), &a.galois(k) * &b.galois(k));
        prop_assert_eq!((&a + &b).galois(k), &a.galois(k) + &b.galois(k));
    }

    #[test]
    fn literal_round_trip(a in element(24)) {
        let back = CycloNumber::from_literal(24, &a.to_literal()).unwrap();
        prop_assert_eq!(back, a);
    }

    #[test]
    fn approx_matches_f64(a in element(24)) {
        let z = a.to_c64();
        let ap = a.approx(20);
        prop_assert!((ap.re - z.re).abs() < 1e-9 && (ap.im - z.im).abs() < 1e-9);
    }
}
