//! End-to-end reproduction of every published claim on the bundled data,
//! one report per acceptance criterion.

pub mod printed;

use std::fmt;

use cyclo::CycloNumber;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::braid::{self, Advisory, Convention, Verdict};
use crate::center::{mutate, ops, verify, Category};
use crate::fusion::{self, FusionRing};
use crate::liedata::{self, SimpleLieType};
use crate::moddata::ModularData;
use crate::report::Report;
use crate::sl2z::{self, MatrixRep};
use crate::{data, Exec};

const SUITE: &str = "reproduce";

/// Default seed for the mutation sweep.
pub const MUTATION_SEED: u64 = 20_240_611;
pub const MUTATION_COUNT: usize = 20;

#[derive(Clone, Debug)]
pub struct CriterionReport {
    pub number: usize,
    pub title: &'static str,
    pub report: Report,
}

impl CriterionReport {
    pub fn passed(&self) -> bool {
        self.report.passed()
    }
}

impl fmt::Display for CriterionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "CRITERION {:>2} {status} {}", self.number, self.title)?;
        let failed: Vec<&str> = self.report.failures().map(|c| c.name.as_str()).collect();
        if !failed.is_empty() {
            write!(f, " (failing: {})", failed.join(", "))?;
        }
        Ok(())
    }
}

/// Bundled inputs shared by the criteria.
pub struct Inputs {
    pub e6: ModularData,
    pub haagerup: ModularData,
    pub fr_e6: FusionRing,
    pub fr_haagerup: FusionRing,
    pub center: Category,
}

impl Inputs {
    pub fn load(exec: Exec) -> Inputs {
        let e6 = data::z_e6();
        let haagerup = data::z_haagerup();
        let fr_e6 = FusionRing::verlinde(&e6, exec).expect("Verlinde on bundled Z(E)");
        let fr_haagerup = FusionRing::verlinde(&haagerup, exec).expect("Verlinde on bundled Z(H)");
        Inputs { e6, haagerup, fr_e6, fr_haagerup, center: data::half_e6() }
    }
}

fn idx(fr: &FusionRing, label: &str) -> usize {
    fr.index(label).unwrap_or_else(|| panic!("bundled label {label}"))
}

fn indices(fr: &FusionRing, labels: &[&str]) -> Vec<usize> {
    let mut v: Vec<usize> = labels.iter().map(|l| idx(fr, l)).collect();
    v.sort_unstable();
    v
}

fn names(fr: &FusionRing, set: &[usize]) -> String {
    format!("{{{}}}", set.iter().map(|&i| fr.labels[i].as_str()).collect::<Vec<_>>().join(","))
}

pub fn modular_axioms(inp: &Inputs) -> CriterionReport {
    let mut rep = Report::new();
    for (name, md) in [("z_e6", &inp.e6), ("z_haagerup", &inp.haagerup)] {
        let v = md.validate();
        rep.check(SUITE, &format!("{name}-axioms"), v.passed(), || v.failures().map(|c| c.name.clone()).collect::<Vec<_>>().join(", "));
        let exact = md.st_cubed_equals_s_squared().unwrap_or(false);
        rep.check(SUITE, &format!("{name}-st-cubed-equals-s-squared"), exact, || "(ST)^3 != S^2".into());
    }
    CriterionReport { number: 1, title: "modular axioms on both data sets", report: rep }
}

pub fn quantum_orders(inp: &Inputs) -> CriterionReport {
    let mut rep = Report::new();
    let targets = liedata::target_dims();
    let de = inp.e6.total_quantum_order();
    rep.check(SUITE, "z_e6-total-quantum-order", de.as_ref().map(|d| *d == targets[0].1).unwrap_or(false), || format!("{de:?}"));
    let dh = &targets[1].1;
    rep.check(SUITE, "z_haagerup-global-dimension", inp.haagerup.global_dim_sq() == dh * dh, || format!("{}", inp.haagerup.global_dim_sq()));
    let approx = (39.0 + 9.0 * 13f64.sqrt()) / 2.0;
    let got = inp.haagerup.total_quantum_order().map(|d| d.to_c64().re).unwrap_or(f64::NAN);
    rep.check(SUITE, "z_haagerup-total-quantum-order", (got - approx).abs() < 1e-6 && (got - 35.7).abs() < 0.05, || format!("D = {got}"));
    let early = printed::haagerup_d_as_printed_early();
    rep.note(SUITE, "z_haagerup-printed-d-inconsistent", early != *dh, format!("(39+3√13)/2 ≈ {:.4} does not match Σd²", early.to_c64().re));
    CriterionReport { number: 2, title: "total quantum orders", report: rep }
}

pub fn central_charges(inp: &Inputs) -> CriterionReport {
    let mut rep = Report::new();
    for (name, md) in [("z_e6", &inp.e6), ("z_haagerup", &inp.haagerup)] {
        let c = md.central_charge();
        let zero = c.as_ref().map(num_traits::Zero::is_zero).unwrap_or(false);
        rep.check(SUITE, &format!("{name}-central-charge-zero"), zero, || format!("{c:?}"));
        let ratio = md.total_quantum_order().map(|d| md.gauss_sum() * d.inv().unwrap());
        let one = ratio.as_ref().map(CycloNumber::is_one).unwrap_or(false);
        rep.check(SUITE, &format!("{name}-gauss-sum-equals-d"), one, || format!("D+/D = {ratio:?}"));
    }
    CriterionReport { number: 3, title: "central charge 0 mod 8", report: rep }
}

/// Printed Z(E) products against a fusion ring; returns the mismatches
/// (a, b, printed, computed).
pub fn ze_table_mismatches(fr: &FusionRing) -> Vec<(String, String, String, String)> {
    let mut out = vec![];
    for &(a, b, s) in printed::ZE_PRODUCTS {
        let want = printed::parse_sum(fr, s).expect("printed labels");
        let got = fr.product(idx(fr, a), idx(fr, b));
        if want != got {
            out.push((a.into(), b.into(), s.into(), fr.format_vector(&got)));
        }
    }
    out
}

fn permuted(fr: &FusionRing, m: &[Vec<u32>], swaps: &[(&str, &str)]) -> Vec<Vec<u32>> {
    let mut p: Vec<usize> = (0..fr.rank()).collect();
    for (a, b) in swaps {
        p.swap(idx(fr, a), idx(fr, b));
    }
    (0..m.len()).map(|i| (0..m.len()).map(|j| m[p[i]][p[j]]).collect()).collect()
}

pub fn fusion_reproduction(inp: &Inputs) -> CriterionReport {
    let mut rep = Report::new();
    let fr = &inp.fr_e6;
    let bad = ze_table_mismatches(fr);
    let (ta, tb, tprinted, tfixed) = printed::ZE_TYPO;
    let only_typo = bad.len() == 1 && bad[0].0 == ta && bad[0].1 == tb && bad[0].2 == tprinted;
    let fixed = printed::parse_sum(fr, tfixed).map(|v| v == fr.product(idx(fr, ta), idx(fr, tb))).unwrap_or(false);
    rep.check(SUITE, "z_e6-tables", only_typo && fixed, || format!("{bad:?}"));
    // the printed entry breaks N_{V,X2}^{X2} = N_{V,X3}^{X3}
    let as_printed = printed::parse_sum(fr, tprinted).unwrap();
    rep.note(
        SUITE,
        "z_e6-printed-entry-inconsistent",
        as_printed[idx(fr, "X2")] != fr.n(idx(fr, "V"), idx(fr, "X3"), idx(fr, "X3")),
        format!("{ta}⊗{tb} printed {tprinted}, computed {tfixed}"),
    );
    let h = &inp.fr_haagerup;
    rep.check(SUITE, "z_haagerup-n-pi1", h.matrix(idx(h, "pi1")) == printed::haagerup_n_pi1(), || "N_pi1 differs".into());
    rep.check(SUITE, "z_haagerup-n-pi2", h.matrix(idx(h, "pi2")) == printed::haagerup_n_pi2(), || "N_pi2 differs".into());
    let mu1 = h.matrix(idx(h, "mu1"));
    let direct = mu1 == printed::haagerup_n_mu1();
    let relabeled = permuted(h, &mu1, printed::HAAGERUP_MU_SWAP) == printed::haagerup_n_mu1();
    rep.note(
        SUITE,
        "z_haagerup-n-mu1",
        direct || relabeled,
        if direct { "direct".to_string() } else { "matches after relabeling (mu1 mu2)(mu3 mu4)(mu5 mu6)".to_string() },
    );
    CriterionReport { number: 4, title: "Verlinde reproduces the printed fusion rules", report: rep }
}

pub fn subcategories(inp: &Inputs) -> CriterionReport {
    let mut rep = Report::new();
    let (e, fe) = (&inp.e6, &inp.fr_e6);
    let (h, fh) = (&inp.haagerup, &inp.fr_haagerup);
    let subs_h = fh.tensor_subcategories();
    rep.check(SUITE, "z_haagerup-two-subcategories", subs_h.len() == 2, || format!("{} fusion-closed subsets", subs_h.len()));
    let subs_e = fe.tensor_subcategories();
    let one_y = indices(fe, &["1", "Y"]);
    let f = indices(fe, printed::ZE_F);
    rep.check(SUITE, "z_e6-lattice", subs_e.contains(&one_y) && subs_e.contains(&f), || {
        subs_e.iter().map(|s| names(fe, s)).collect::<Vec<_>>().join(" ")
    });
    let cf = fusion::centralizer(e, &f);
    let dim_ok = fusion::subset_dim(e, &cf) == CycloNumber::from_int(1, 2);
    rep.check(SUITE, "z_e6-centralizer-of-f", cf == one_y && dim_ok, || names(fe, &cf));
    for (name, md, fr) in [("z_e6", e, fe), ("z_haagerup", h, fh)] {
        rep.check(SUITE, &format!("{name}-prime"), fusion::is_prime(md, fr), || {
            fusion::modular_subcategories(md, fr).iter().map(|s| names(fr, s)).collect::<Vec<_>>().join(" ")
        });
        let fac = fusion::product_factorization(md, fr);
        rep.check(SUITE, &format!("{name}-no-factorization"), fac.is_none(), || format!("{fac:?}"));
    }
    let filt = fusion::dimension_filter(e, &liedata::target_dims()[0].1);
    let one = CycloNumber::from_int(1, 1);
    let want = vec![vec![one.clone(), one.clone(), one + CycloNumber::sqrt_int(3)]];
    rep.check(SUITE, "z_e6-dimension-filter", filt == want, || format!("{filt:?}"));
    CriterionReport { number: 5, title: "subcategories and primality", report: rep }
}

pub fn modular_group(inp: &Inputs, exec: Exec, cap: usize) -> CriterionReport {
    let mut rep = Report::new();
    match MatrixRep::from_modular_data(&inp.e6) {
        Ok(r) => {
            let rel = sl2z::verify_e6_relation_suite(&r);
            rep.check(SUITE, "z_e6-relations", rel.passed(), || rel.failures().map(|c| c.name.clone()).collect::<Vec<_>>().join(", "));
            match sl2z::closure_order(&r, cap, exec) {
                Ok(n) => rep.note(SUITE, "z_e6-image-order", 31104 % n == 0 && n % 10 != 0, format!("|image| = {n}")),
                Err(e) => rep.check(SUITE, "z_e6-image-order", false, || e.to_string()),
            }
        }
        Err(e) => rep.check(SUITE, "z_e6-relations", false, || e.to_string()),
    }
    match MatrixRep::from_modular_data(&inp.haagerup).and_then(|r| sl2z::psl2_presentation_check(&r, 39)) {
        Ok(p) => rep.check(SUITE, "z_haagerup-psl2-39", p.passed(), || p.failures().map(|c| c.name.clone()).collect::<Vec<_>>().join(", ")),
        Err(e) => rep.check(SUITE, "z_haagerup-psl2-39", false, || e.to_string()),
    }
    CriterionReport { number: 6, title: "finite SL(2,Z) images", report: rep }
}

pub fn center_rederivation(inp: &Inputs, exec: Exec) -> CriterionReport {
    let mut rep = Report::new();
    let cat = &inp.center;
    let sk = &cat.skeleton;
    let v = verify::verify_all(cat, exec);
    // the unit's half-braiding is the trivial one; the other nine carry data
    let halves = v
        .checks
        .iter()
        .filter(|c| c.name.starts_with("half-braiding-") && c.name != "half-braiding-1" && !c.name.ends_with("-invertible") && !c.name.ends_with("-unit"))
        .count();
    rep.check(SUITE, "center-data-suites", v.passed() && halves == 9, || {
        format!("{} half-braidings; failing: {}", halves, v.failures().map(|c| c.name.clone()).collect::<Vec<_>>().join(", "))
    });
    let pairs: Vec<(usize, usize)> = (0..cat.objects.len()).flat_map(|i| (i..cat.objects.len()).map(move |j| (i, j))).collect();
    let homs = exec.map(&pairs, |&(i, j)| ops::center_hom(sk, &cat.objects[i], &cat.objects[j]).dim);
    let bad: Vec<String> = pairs
        .iter()
        .zip(&homs)
        .filter(|((i, j), d)| **d != (i == j) as usize)
        .map(|((i, j), d)| format!("dim Hom({}, {}) = {d}", cat.objects[*i].name, cat.objects[*j].name))
        .collect();
    rep.check(SUITE, "center-simple-distinct", bad.is_empty() && cat.objects.len() == 10, || bad.join(", "));
    let dd = ops::dim_double_check(cat);
    rep.extend(dd);
    match ops::s_matrix(cat, exec) {
        Ok(s) => {
            let conv = if s == inp.e6.s { Some(Convention::Direct) } else if s == inp.e6.s.conj() { Some(Convention::Conjugate) } else { None };
            rep.note(SUITE, "center-s-matrix", conv.is_some(), format!("convention: {}", conv.map(|c| c.to_string()).unwrap_or("none".into())));
        }
        Err(e) => rep.check(SUITE, "center-s-matrix", false, || e.to_string()),
    }
    match ops::twists(cat) {
        Ok(t) => rep.check(SUITE, "center-twists", t == inp.e6.t, || format!("{t:?}")),
        Err(e) => rep.check(SUITE, "center-twists", false, || e.to_string()),
    }
    match ops::derived_fusion(cat, exec) {
        Ok(fr) => {
            let same = fr.labels == inp.fr_e6.labels && fr == inp.fr_e6;
            rep.check(SUITE, "center-fusion", same, || format!("{:?}", ze_table_mismatches(&fr)));
        }
        Err(e) => rep.check(SUITE, "center-fusion", false, || e.to_string()),
    }
    CriterionReport { number: 7, title: "center re-derivation from the half E6 data", report: rep }
}

pub fn braid_diagnostics(inp: &Inputs) -> CriterionReport {
    let mut rep = Report::new();
    match ops::braiding_eigenvalues(&inp.center, "X4") {
        Ok(eigs) => {
            let mut values = vec![];
            for e in &eigs {
                values.extend(std::iter::repeat_n(e.value.clone(), e.multiplicity));
            }
            let m = braid::EigenvalueMultiset::new(values.clone());
            let conv = m.match_up_to_conjugation(&printed::x4_eigs());
            rep.note(SUITE, "x4-eigenvalues", conv.is_some(), format!("{m}, convention {}", conv.map(|c| c.to_string()).unwrap_or("none".into())));
            let order = braid::projective_order(&m).unwrap_or(0);
            rep.check(SUITE, "x4-projective-order", order == 12, || format!("order {order}"));
            let tw = braid::tw_irreducibility(&inp.e6, &inp.fr_e6, "X4", Some(&values)).unwrap_or(Verdict::False);
            rep.check(SUITE, "x4-irreducible", tw == Verdict::True, || tw.to_string());
            let adv = braid::density_advisory(eigs.len(), order, tw);
            rep.note(SUITE, "x4-density", adv == Advisory::InfiniteImage, adv.to_string());
        }
        Err(e) => rep.check(SUITE, "x4-eigenvalues", false, || e.to_string()),
    }
    let (md, fr) = (&inp.haagerup, &inp.fr_haagerup);
    for (target, want, n) in [("mu2", printed::haagerup_eigs_7(), 7), ("mu1", printed::haagerup_eigs_10(), 10)] {
        let got = braid::squared_braid_eigs(md, fr, "mu1", target);
        let conv = got.as_ref().ok().and_then(|g| g.match_up_to_conjugation(&want));
        let size = got.as_ref().map(|g| g.len()).unwrap_or(0);
        rep.note(
            SUITE,
            &format!("haagerup-eigs-{n}"),
            conv.is_some() && size == n,
            format!("dim {size}, convention {}", conv.map(|c| c.to_string()).unwrap_or("none".into())),
        );
    }
    CriterionReport { number: 8, title: "braid group diagnostics", report: rep }
}

pub fn lie_exclusion() -> CriterionReport {
    let mut rep = liedata::exclusion_report();
    let c4: SimpleLieType = "C4".parse().unwrap();
    let n = liedata::rank_count(&c4, 2 * (10 + c4.dual_coxeter())).unwrap_or(0);
    rep.check(SUITE, "c4-level10-rank", n == 1001, || format!("rank {n}"));
    let c11: SimpleLieType = "C11".parse().unwrap();
    let mut v = vec![0; 11];
    v[0] = 1;
    let d = liedata::qnumber_dim(&c11, 26, &v).map(|d| d.to_c64().re).unwrap_or(f64::NAN);
    rep.check(SUITE, "c11-vector-dim-decimal", (d - 1.94188).abs() < 1e-5, || format!("{d}"));
    let b1 = liedata::orbifold_bound_from_rank(1001, 2).bound;
    let b2 = liedata::orbifold_bound_from_rank(liedata::binomial(13, 7), 2).bound;
    rep.check(SUITE, "orbifold-bounds", (b1 - 63.3).abs() < 0.1 && (b2 - 82.8).abs() < 0.1, || format!("{b1:.2}, {b2:.2}"));
    CriterionReport { number: 9, title: "Lie-theoretic exclusion", report: rep }
}

/// The seeded sample of mutation sites and phases.
pub fn mutation_sample(cat: &Category, seed: u64, count: usize) -> Vec<(mutate::Site, i64)> {
    let sites = mutate::sites(cat);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| (sites[rng.gen_range(0..sites.len())].clone(), rng.gen_range(1..24))).collect()
}

pub fn mutation_sensitivity(inp: &Inputs, exec: Exec, seed: u64, count: usize) -> CriterionReport {
    let mut rep = Report::new();
    let cat = &inp.center;
    let sample = mutation_sample(cat, seed, count);
    let caught = exec.map(&sample, |(site, k)| mutate::run(cat, site, *k));
    for (i, ((site, k), by)) in sample.iter().zip(caught).enumerate() {
        let what = format!("{} ×ζ24^{k}", mutate::describe(cat, site));
        match by {
            Some(s) => rep.note(SUITE, &format!("mutation-{i:02}"), true, format!("{what} caught by {s}")),
            None => rep.check(SUITE, &format!("mutation-{i:02}"), false, || format!("{what} not caught")),
        }
    }
    CriterionReport { number: 10, title: "mutation sensitivity", report: rep }
}

/// All ten criteria in order.
pub fn all(exec: Exec) -> Vec<CriterionReport> {
    let inp = Inputs::load(exec);
    vec![
        modular_axioms(&inp),
        quantum_orders(&inp),
        central_charges(&inp),
        fusion_reproduction(&inp),
        subcategories(&inp),
        modular_group(&inp, exec, 40_000),
        center_rederivation(&inp, exec),
        braid_diagnostics(&inp),
        lie_exclusion(),
        mutation_sensitivity(&inp, exec, MUTATION_SEED, MUTATION_COUNT),
    ]
}
