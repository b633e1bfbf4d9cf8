use mtc::braid::{self, Convention, EigenvalueMultiset};
use mtc::center::{ops, verify};
use mtc::reproduce::printed;
use mtc::{data, Exec};

#[test]
fn data_suites_pass() {
    let cat = data::half_e6();
    let rep = verify::verify_all(&cat, Exec::Parallel);
    assert!(rep.passed(), "{rep}");
    assert_eq!(cat.objects.len(), 10);
}

#[test]
fn twists_and_s() {
    let cat = data::half_e6();
    let md = data::z_e6();
    assert_eq!(ops::twists(&cat).unwrap(), md.t);
    assert_eq!(ops::s_matrix(&cat, Exec::Parallel).unwrap(), md.s.conj());
}

#[test]
fn x4_eigenvalues() {
    let cat = data::half_e6();
    let e = ops::braiding_eigenvalues(&cat, "X4").unwrap();
    let summands: Vec<&str> = e.iter().map(|b| b.summand.as_str()).collect();
    assert_eq!(summands, ["1", "X4", "V"]);
    assert!(e.iter().all(|b| b.multiplicity == 1));
    let m = EigenvalueMultiset::new(e.into_iter().map(|b| b.value).collect());
    assert_eq!(m.match_up_to_conjugation(&printed::x4_eigs()), Some(Convention::Direct));
    assert_eq!(braid::projective_order(&m).unwrap(), 12);
}

#[test]
fn squares_decompose_as_verlinde() {
    let cat = data::half_e6();
    let sk = &cat.skeleton;
    let fr = mtc::FusionRing::verlinde(&data::z_e6(), Exec::Parallel).unwrap();
    for name in ["X4", "W"] {
        let x = cat.object(name).unwrap();
        let m = ops::decompose(sk, &cat.objects, x, x).unwrap();
        let i = fr.index(name).unwrap();
        let want: Vec<usize> = fr.product(i, i).into_iter().map(|n| n as usize).collect();
        assert_eq!(m, want, "{name}⊗{name}");
    }
}
