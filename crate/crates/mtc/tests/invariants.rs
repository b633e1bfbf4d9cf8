use mtc::liedata::{self, SimpleLieType};
use mtc::{data, Exec, FusionRing};
use proptest::prelude::*;

fn ring(haagerup: bool) -> FusionRing {
    let md = if haagerup { data::z_haagerup() } else { data::z_e6() };
    FusionRing::verlinde(&md, Exec::Parallel).unwrap()
}

fn lie_type() -> impl Strategy<Value = SimpleLieType> {
    prop_oneof![
        (1u32..=5).prop_map(|r| format!("A{r}")),
        (2u32..=4).prop_map(|r| format!("B{r}")),
        (2u32..=4).prop_map(|r| format!("C{r}")),
        (4u32..=5).prop_map(|r| format!("D{r}")),
        Just("G2".to_string()),
        Just("F4".to_string()),
    ]
    .prop_map(|s| s.parse().unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn verlinde_ring_symmetries(h in any::<bool>(), i in 0usize..10, j in 0usize..10, k in 0usize..10) {
        let fr = ring(h);
        let (d, n) = (&fr.dual, |a, b, c| fr.n(a, b, c));
        prop_assert_eq!(n(i, j, k), n(j, i, k));
        prop_assert_eq!(n(i, j, k), n(i, d[k], d[j]));
        prop_assert_eq!(n(i, j, k), n(d[i], d[j], d[k]));
    }

    #[test]
    fn verlinde_ring_associative(h in any::<bool>(), i in 0usize..10, j in 0usize..10, k in 0usize..10) {
        let fr = ring(h);
        let r = fr.rank();
        for l in 0..r {
            let left: u32 = (0..r).map(|m| fr.n(i, j, m) * fr.n(m, k, l)).sum();
            let right: u32 = (0..r).map(|m| fr.n(j, k, m) * fr.n(i, m, l)).sum();
            prop_assert_eq!(left, right);
        }
    }

    #[test]
    fn alcove_count_matches_series(g in lie_type(), k in 0u64..6) {
        let ell = g.lacing() * (k + g.dual_coxeter());
        prop_assert_eq!(liedata::rank_count(&g, ell).unwrap() as u128, liedata::rank_by_series(&g, k));
    }

    #[test]
    fn labels_are_closed_under_duality(g in lie_type(), k in 1u64..4) {
        let ell = g.lacing() * (k + g.dual_coxeter());
        let labels = liedata::labels(&g, ell).unwrap();
        for l in &labels {
            prop_assert!(labels.contains(&liedata::dual_label(&g, l)));
            // dual objects share twists and dimensions
            prop_assert_eq!(liedata::twist(&g, ell, l), liedata::twist(&g, ell, &liedata::dual_label(&g, l)));
        }
    }

    #[test]
    fn alcove_dims_are_positive(g in lie_type(), k in 1u64..3) {
        let ell = g.lacing() * (k + g.dual_coxeter());
        for l in liedata::labels(&g, ell).unwrap() {
            let d = liedata::qnumber_dim(&g, ell, &l).unwrap();
            prop_assert!(d.to_c64().re > 0.5, "{} {:?}", g, l);
            prop_assert!(d.to_c64().im.abs() < 1e-9);
        }
    }
}
