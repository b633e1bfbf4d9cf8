use mtc::sl2z::{self, MatrixRep, Traversal};
use mtc::{data, Exec, FusionRing};

#[test]
fn e6_double_validates() {
    let md = data::z_e6();
    let rep = md.validate();
    assert!(rep.passed(), "{rep}");
}

#[test]
fn haagerup_double_validates() {
    let md = data::z_haagerup();
    let rep = md.validate();
    assert!(rep.passed(), "{rep}");
}

#[test]
fn verlinde_gives_consistent_rings() {
    for md in [data::z_e6(), data::z_haagerup()] {
        let fr = FusionRing::verlinde(&md, Exec::Parallel).unwrap();
        let inv = fr.invariants();
        assert!(inv.passed(), "{inv}");
        let seq = FusionRing::verlinde(&md, Exec::Sequential).unwrap();
        assert_eq!(fr, seq);
    }
}

#[test]
fn e6_closure_order() {
    let rep = MatrixRep::from_modular_data(&data::z_e6()).unwrap();
    let n = sl2z::closure_order(&rep, 40_000, Exec::Parallel).unwrap();
    assert_eq!(n, 1152);
    assert_eq!(sl2z::closure_order_with(&rep, 40_000, Exec::Sequential, Traversal::Depth).unwrap(), n);
    assert_eq!(31104 % n, 0);
}

#[test]
fn haagerup_closure_order() {
    let rep = MatrixRep::from_modular_data(&data::z_haagerup()).unwrap();
    let n = sl2z::closure_order(&rep, 40_000, Exec::Parallel).unwrap();
    assert_eq!(n, 13104);
}

#[test]
fn haagerup_squared_braid_eigs_match_printed_lists() {
    use mtc::braid::{self, Convention, Verdict};
    let md = data::z_haagerup();
    let fr = FusionRing::verlinde(&md, Exec::Parallel).unwrap();
    let seven = braid::squared_braid_eigs(&md, &fr, "mu1", "mu2").unwrap();
    let ten = braid::squared_braid_eigs(&md, &fr, "mu1", "mu1").unwrap();
    let p7 = mtc::reproduce::printed::haagerup_eigs_7();
    let p10 = mtc::reproduce::printed::haagerup_eigs_10();
    assert_eq!(seven.len(), 7);
    assert_eq!(ten.len(), 10);
    assert_eq!(seven.match_up_to_conjugation(&p7), Some(Convention::Conjugate));
    assert_eq!(ten.match_up_to_conjugation(&p10), Some(Convention::Conjugate));
    assert_eq!(braid::tw_irreducibility(&md, &fr, "mu1", None).unwrap(), Verdict::Undetermined);
}
