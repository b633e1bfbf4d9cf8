//! The projective SL(2,Z) representation (S, T) of a modular datum:
//! relation suites, presentation checks, and exact finite closure.

pub mod kernel;

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

use cyclo::CycloNumber;

use crate::exec::Exec;
use crate::linalg::Mat;
use crate::moddata::ModularData;
use crate::report::Report;
use crate::Error;

use kernel::{Gen, IntMat, Ring};

const SUITE: &str = "sl2z";

#[derive(Clone, Debug)]
pub struct MatrixRep {
    pub conductor: u32,
    pub s: Mat<CycloNumber>,
    pub t: Mat<CycloNumber>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Generator {
    S,
    T,
}

/// A word in S and T, read left to right as a matrix product.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GroupWord(pub Vec<(Generator, i64)>);

impl GroupWord {
    pub fn new() -> GroupWord {
        GroupWord(vec![])
    }

    pub fn s(mut self, e: i64) -> GroupWord {
        if e != 0 {
            self.0.push((Generator::S, e));
        }
        self
    }

    pub fn t(mut self, e: i64) -> GroupWord {
        if e != 0 {
            self.0.push((Generator::T, e));
        }
        self
    }

    /// Parse words like `S T^4 S^-1`.
    pub fn parse(s: &str) -> Result<GroupWord, Error> {
        let mut w = GroupWord::new();
        for tok in s.split_whitespace() {
            let (g, e) = match tok.split_once('^') {
                Some((g, e)) => (g, e.parse::<i64>().map_err(|_| Error::Parse(format!("bad exponent in {tok}")))?),
                None => (tok, 1),
            };
            w = match g {
                "S" => w.s(e),
                "T" => w.t(e),
                _ => return Err(Error::Parse(format!("unknown generator {g}"))),
            };
        }
        Ok(w)
    }
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|(g, e)| {
                let g = if *g == Generator::S { "S" } else { "T" };
                if *e == 1 {
                    g.to_string()
                } else {
                    format!("{g}^{e}")
                }
            })
            .collect();
        f.write_str(&parts.join(" "))
    }
}

impl MatrixRep {
    /// S = s̃/D and T = diag(θ).
    pub fn from_modular_data(md: &ModularData) -> Result<MatrixRep, Error> {
        let s = md.s_normalized()?;
        let t = md.t_matrix();
        let conductor = s
            .to_rows()
            .iter()
            .chain(t.to_rows().iter())
            .flatten()
            .fold(md.conductor, |n, x| cyclo::common_conductor(n, x.conductor()));
        Ok(MatrixRep { conductor, s, t })
    }

    pub fn dim(&self) -> usize {
        self.s.rows()
    }

    fn inverse(&self, m: &Mat<CycloNumber>) -> Mat<CycloNumber> {
        m.inverse().expect("generators are invertible")
    }

    pub fn eval_word(&self, w: &GroupWord) -> Mat<CycloNumber> {
        let mut acc = Mat::identity(self.dim());
        for &(g, e) in &w.0 {
            let base = if g == Generator::S { &self.s } else { &self.t };
            let m = if e < 0 { self.inverse(base) } else { base.clone() };
            acc = acc.mul(&m.pow(e.unsigned_abs() as u32));
        }
        acc
    }
}

/// g^h = h g h⁻¹.
pub fn conjugate(g: &Mat<CycloNumber>, h: &Mat<CycloNumber>) -> Mat<CycloNumber> {
    h.mul(g).mul(&h.inverse().expect("invertible"))
}

/// The relation suite for the ½E6 double: S⁴ = T¹² = I, (ST)³ = S²,
/// (T⁴ST⁶S)⁶ = I, the conjugation action on A, B, C, D and the relations among them.
pub fn verify_e6_relation_suite(rep: &MatrixRep) -> Report {
    let mut r = Report::new();
    let id = Mat::<CycloNumber>::identity(rep.dim());
    let s = &rep.s;
    let t = &rep.t;
    let sinv = s.inverse().expect("S invertible");
    let tinv = t.inverse().expect("T invertible");
    r.check(SUITE, "s4-identity", s.pow(4).is_identity(), || "S^4 != I".into());
    r.check(SUITE, "t12-identity", t.pow(12).is_identity(), || "T^12 != I".into());
    let st = s.mul(t);
    r.check(SUITE, "st-cubed-s-squared", st.pow(3) == s.pow(2), || "(ST)^3 != S^2".into());
    let base = t.pow(4).mul(s).mul(&t.pow(6)).mul(s);
    r.check(SUITE, "arel", base.pow(6).is_identity(), || "(T^4 S T^6 S)^6 != I".into());
    let a = base.pow(2);
    let a_diag = a.is_diagonal() && a.pow(3).is_identity() && !a.is_identity();
    r.check(SUITE, "a-diagonal-order-3", a_diag, || "A = (T^4 S T^6 S)^2 is not diagonal of order 3".into());

    // g^h = h g h⁻¹
    let conj = |g: &Mat<CycloNumber>, h: &Mat<CycloNumber>, hinv: &Mat<CycloNumber>| h.mul(g).mul(hinv);
    let b = conj(&a, s, &sinv);
    let c = conj(&b, t, &tinv);
    let d = conj(&c, s, &sinv);
    let staction: [(&str, Mat<CycloNumber>, &Mat<CycloNumber>); 8] = [
        ("staction-a-t", conj(&a, t, &tinv), &a),
        ("staction-a-s", conj(&a, s, &sinv), &b),
        ("staction-b-t", conj(&b, t, &tinv), &c),
        ("staction-b-s", conj(&b, s, &sinv), &a),
        ("staction-c-t", conj(&c, t, &tinv), &d),
        ("staction-c-s", conj(&c, s, &sinv), &d),
        ("staction-d-t", conj(&d, t, &tinv), &b),
        ("staction-d-s", conj(&d, s, &sinv), &c),
    ];
    for (name, lhs, rhs) in staction {
        r.check(SUITE, name, &lhs == rhs, || format!("{name} fails"));
    }
    let ainv = a.inverse().expect("A invertible");
    let binv = b.inverse().expect("B invertible");
    r.check(SUITE, "nrel-a-cubed", a.pow(3) == id, || "A^3 != I".into());
    r.check(SUITE, "nrel-b-by-a", conj(&b, &a, &ainv) == d, || "B^A != D".into());
    r.check(SUITE, "nrel-c-by-a", conj(&c, &a, &ainv) == b, || "C^A != B".into());
    r.check(SUITE, "nrel-d-by-a", conj(&d, &a, &ainv) == c, || "D^A != C".into());
    r.check(SUITE, "nrel-d-by-b", conj(&d, &b, &binv) == a, || "D^B != A".into());
    r
}

/// With A = S, B = T: (AB)³ = A² = B^N = (B⁴AB^{(N+1)/2}A)² = I.
pub fn psl2_presentation_check(rep: &MatrixRep, n: u32) -> Result<Report, Error> {
    if n.is_multiple_of(2) {
        return Err(Error::Data(format!("N = {n} must be odd")));
    }
    let mut r = Report::new();
    let a = &rep.s;
    let b = &rep.t;
    r.check(SUITE, "psl2-ab-cubed", a.mul(b).pow(3).is_identity(), || "(AB)^3 != I".into());
    r.check(SUITE, "psl2-a-squared", a.pow(2).is_identity(), || "A^2 != I".into());
    r.check(SUITE, &format!("psl2-b-to-{n}"), b.pow(n).is_identity(), || format!("B^{n} != I"));
    let w = b.pow(4).mul(a).mul(&b.pow(n.div_ceil(2))).mul(a);
    r.check(SUITE, "psl2-sunday", w.pow(2).is_identity(), || "(B^4 A B^((N+1)/2) A)^2 != I".into());
    Ok(r)
}

/// Traversal order for the closure, used for the determinism check.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Traversal {
    /// Level-by-level, frontier expanded with the given executor.
    Breadth,
    /// Depth-first with an explicit stack, generators tried T before S.
    Depth,
}

/// |⟨S, T⟩| by exact closure, or `CapExceeded`.
pub fn closure_order(rep: &MatrixRep, cap: usize, exec: Exec) -> Result<usize, Error> {
    closure_order_with(rep, cap, exec, Traversal::Breadth)
}

pub fn closure_order_with(rep: &MatrixRep, cap: usize, exec: Exec, order: Traversal) -> Result<usize, Error> {
    let ring = Ring::new(rep.conductor);
    let gens = [Gen::from_mat(&ring, &rep.s)?, Gen::from_mat(&ring, &rep.t)?];
    let id = IntMat::identity(&ring, rep.dim());
    let mut seen: HashSet<Arc<IntMat>> = HashSet::new();
    let first = Arc::new(id);
    seen.insert(first.clone());
    match order {
        Traversal::Breadth => {
            let mut frontier = vec![first];
            while !frontier.is_empty() {
                let products = exec.map(&frontier, |m| -> Result<[IntMat; 2], Error> {
                    Ok([m.mul_gen(&ring, &gens[0])?, m.mul_gen(&ring, &gens[1])?])
                });
                let mut next = Vec::new();
                for pair in products {
                    for p in pair? {
                        let p = Arc::new(p);
                        if seen.insert(p.clone()) {
                            next.push(p);
                            if seen.len() > cap {
                                return Err(Error::CapExceeded(cap));
                            }
                        }
                    }
                }
                frontier = next;
            }
        }
        Traversal::Depth => {
            let mut stack = vec![first];
            while let Some(m) = stack.pop() {
                for g in gens.iter().rev() {
                    let p = Arc::new(m.mul_gen(&ring, g)?);
                    if seen.insert(p.clone()) {
                        stack.push(p);
                        if seen.len() > cap {
                            return Err(Error::CapExceeded(cap));
                        }
                    }
                }
            }
        }
    }
    Ok(seen.len())
}

/// Closure through the general cyclotomic matrix type (slow; small groups only).
pub fn closure_order_general(rep: &MatrixRep, cap: usize) -> Result<usize, Error> {
    let key = |m: &Mat<CycloNumber>| -> String {
        m.to_rows().iter().flatten().map(|x| x.to_literal().to_string()).collect::<Vec<_>>().join(";")
    };
    let id = Mat::<CycloNumber>::identity(rep.dim());
    let mut seen = HashSet::new();
    seen.insert(key(&id));
    let mut frontier = vec![id];
    while !frontier.is_empty() {
        let mut next = vec![];
        for m in &frontier {
            for g in [&rep.s, &rep.t] {
                let p = m.mul(g).map(|x| x.embed(rep.conductor).unwrap_or_else(|_| x.clone()));
                if seen.insert(key(&p)) {
                    next.push(p);
                    if seen.len() > cap {
                        return Err(Error::CapExceeded(cap));
                    }
                }
            }
        }
        frontier = next;
    }
    Ok(seen.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn semion_rep() -> MatrixRep {
        MatrixRep::from_modular_data(&ModularData::semion()).unwrap()
    }

    #[test]
    fn empty_word_is_identity() {
        let rep = semion_rep();
        assert!(rep.eval_word(&GroupWord::new()).is_identity());
    }

    #[test]
    fn word_parsing_round_trip() {
        let w = GroupWord::parse("S T^4 S^-1").unwrap();
        assert_eq!(w.to_string(), "S T^4 S^-1");
        assert!(GroupWord::parse("Q").is_err());
    }

    #[test]
    fn inverse_exponents() {
        let rep = semion_rep();
        let w = GroupWord::new().t(3).t(-3).s(1).s(-1);
        assert!(rep.eval_word(&w).is_identity());
    }

    #[test]
    fn trivial_group_has_order_one() {
        let rep = MatrixRep::from_modular_data(&ModularData::trivial()).unwrap();
        assert_eq!(closure_order(&rep, 10, Exec::Sequential).unwrap(), 1);
    }

    #[test]
    fn kernel_and_general_closure_agree_on_semion() {
        let rep = semion_rep();
        let a = closure_order(&rep, 1000, Exec::Parallel).unwrap();
        let b = closure_order_general(&rep, 1000).unwrap();
        let c = closure_order_with(&rep, 1000, Exec::Sequential, Traversal::Depth).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, c);
    }

    #[test]
    fn cap_is_enforced() {
        let rep = semion_rep();
        assert!(matches!(closure_order(&rep, 2, Exec::Sequential), Err(Error::CapExceeded(2))));
    }

    #[test]
    fn conjugate_matches_definition() {
        let rep = semion_rep();
        let g = conjugate(&rep.t, &rep.s);
        assert_eq!(g, rep.s.mul(&rep.t).mul(&rep.s.inverse().unwrap()));
    }
}
