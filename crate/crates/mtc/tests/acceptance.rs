//! The ten acceptance criteria, one PASS/FAIL line each.
//!
//! Criterion 9 is expected to FAIL: the computed c = 24 and rank-12
//! self-dual lists differ from the printed ones. Everything else in it must
//! pass, and no other criterion may fail.

use cyclo::CycloNumber;
use mtc::liedata::{self, SimpleLieType};
use mtc::reproduce::{self, CriterionReport};
use mtc::Exec;

/// |D(Z(H)) − (39+9√13)/2| on the f64 embedding.
const TOL_HAAGERUP_D: f64 = 1e-6;
/// |dim(vector of C11 at level 1) − 1.94188|.
const TOL_C11_QDIM: f64 = 1e-5;
/// |orbifold bound − 63.3| and |… − 82.8|.
const TOL_ORBIFOLD: f64 = 0.1;

const KNOWN_FAILURES: &[(usize, &str)] = &[(9, "rank12-self-dual-list"), (9, "c24-solutions")];

fn print_line(c: &CriterionReport) {
    println!("{c}");
    for f in c.report.failures() {
        println!("    FAIL {}: {}", f.name, f.witness);
    }
}

#[test]
fn acceptance() {
    let crit = reproduce::all(Exec::Parallel);
    assert_eq!(crit.len(), 10);
    for c in &crit {
        print_line(c);
    }
    let failures: Vec<(usize, &str)> = crit.iter().flat_map(|c| c.report.failures().map(move |f| (c.number, f.name.as_str()))).collect();
    assert_eq!(failures, KNOWN_FAILURES, "unexpected failures");
    for c in &crit {
        assert_eq!(c.passed(), c.number != 9, "criterion {}", c.number);
    }
}

#[test]
fn pinned_tolerances() {
    let d = liedata::target_dims()[1].1.to_c64().re;
    let want = (39.0 + 9.0 * 13f64.sqrt()) / 2.0;
    assert!((d - want).abs() < TOL_HAAGERUP_D, "D(Z(H)) = {d}");
    assert!((d - 35.7).abs() < 0.05);

    let c11: SimpleLieType = "C11".parse().unwrap();
    let mut v = vec![0; 11];
    v[0] = 1;
    let q = liedata::qnumber_dim(&c11, 26, &v).unwrap();
    assert_eq!(q, CycloNumber::root_of_unity(26, 1) + CycloNumber::root_of_unity(26, -1));
    assert!((q.to_c64().re - 1.94188).abs() < TOL_C11_QDIM);

    let b1 = liedata::orbifold_bound_from_rank(1001, 2).bound;
    let b2 = liedata::orbifold_bound_from_rank(1716, 2).bound;
    assert!((b1 - 63.3).abs() < TOL_ORBIFOLD, "{b1}");
    assert!((b2 - 82.8).abs() < TOL_ORBIFOLD, "{b2}");
}

#[test]
fn sequential_and_parallel_agree() {
    let inp = reproduce::Inputs::load(Exec::Sequential);
    let a = reproduce::mutation_sensitivity(&inp, Exec::Sequential, reproduce::MUTATION_SEED, reproduce::MUTATION_COUNT);
    let b = reproduce::mutation_sensitivity(&inp, Exec::Parallel, reproduce::MUTATION_SEED, reproduce::MUTATION_COUNT);
    assert_eq!(a.report.to_json(), b.report.to_json());
}

#[test]
fn other_seeds_are_caught_too() {
    let inp = reproduce::Inputs::load(Exec::Parallel);
    for seed in [1, 2, 3] {
        let r = reproduce::mutation_sensitivity(&inp, Exec::Parallel, seed, reproduce::MUTATION_COUNT);
        assert!(r.passed(), "seed {seed}: {}", r.report);
    }
}
