//! Braid group diagnostics from modular data: eigenvalues of braid
//! generators, projective order, and the irreducibility and density tests.

use std::fmt;

use cyclo::CycloNumber;
use num_integer::Integer;

use crate::fusion::FusionRing;
use crate::moddata::ModularData;
use crate::Error;

/// A multiset of roots of unity, kept as a list with repetitions.
#[derive(Clone, Debug, PartialEq)]
pub struct EigenvalueMultiset {
    pub values: Vec<CycloNumber>,
}

impl EigenvalueMultiset {
    pub fn new(values: Vec<CycloNumber>) -> EigenvalueMultiset {
        EigenvalueMultiset { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn conj(&self) -> EigenvalueMultiset {
        EigenvalueMultiset { values: self.values.iter().map(CycloNumber::conj).collect() }
    }

    pub fn scale(&self, c: &CycloNumber) -> EigenvalueMultiset {
        EigenvalueMultiset { values: self.values.iter().map(|v| v * c).collect() }
    }

    /// Equality as multisets.
    pub fn same_multiset(&self, other: &EigenvalueMultiset) -> bool {
        if self.len() != other.len() {
            return false;
        }
        let mut used = vec![false; other.len()];
        self.values.iter().all(|v| match (0..other.len()).find(|&j| !used[j] && other.values[j] == *v) {
            Some(j) => {
                used[j] = true;
                true
            }
            None => false,
        })
    }

    /// Which convention, if either, makes the two multisets agree.
    pub fn match_up_to_conjugation(&self, other: &EigenvalueMultiset) -> Option<Convention> {
        if self.same_multiset(other) {
            Some(Convention::Direct)
        } else if self.conj().same_multiset(other) {
            Some(Convention::Conjugate)
        } else {
            None
        }
    }

    /// Exponents k/m with v = e^{2πik/m}, sorted, in lowest terms with the given denominator.
    pub fn exponents_over(&self, denom: u32) -> Option<Vec<u32>> {
        let mut out = vec![];
        for v in &self.values {
            let (k, m) = v.root_of_unity_exponent()?;
            if !denom.is_multiple_of(m) {
                return None;
            }
            out.push(k * (denom / m));
        }
        out.sort_unstable();
        Some(out)
    }

    pub fn distinct(&self) -> usize {
        let mut seen: Vec<&CycloNumber> = vec![];
        for v in &self.values {
            if !seen.contains(&v) {
                seen.push(v);
            }
        }
        seen.len()
    }
}

impl fmt::Display for EigenvalueMultiset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .values
            .iter()
            .map(|v| match v.root_of_unity_exponent() {
                Some((k, m)) => format!("e(2πi·{k}/{m})"),
                None => v.to_string(),
            })
            .collect();
        write!(f, "{{{}}}", parts.join(", "))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Convention {
    Direct,
    Conjugate,
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Convention::Direct => "direct",
            Convention::Conjugate => "conjugate",
        })
    }
}

fn label(md: &ModularData, name: &str) -> Result<usize, Error> {
    md.index(name).ok_or_else(|| Error::UnknownLabel(name.to_string()))
}

fn ratio(num: &CycloNumber, den: &CycloNumber) -> CycloNumber {
    num * &den.inv().expect("twists are nonzero")
}

/// θ_Z/θ_X² over summands Z of X⊗X, each repeated N_{XX}^Z·N_{ZX}^{target} times:
/// the eigenvalues of the squared generator on Hom(target, X^{⊗3}).
pub fn squared_braid_eigs(md: &ModularData, fr: &FusionRing, x: &str, target: &str) -> Result<EigenvalueMultiset, Error> {
    let xi = label(md, x)?;
    let ti = label(md, target)?;
    let tx2 = &md.t[xi] * &md.t[xi];
    let mut values = vec![];
    for z in 0..md.rank() {
        let mult = fr.n(xi, xi, z) * fr.n(z, xi, ti);
        let v = ratio(&md.t[z], &tx2);
        for _ in 0..mult {
            values.push(v.clone());
        }
    }
    Ok(EigenvalueMultiset::new(values))
}

/// The squared eigenvalue θ_Z/θ_X² for each summand Z of X⊗X, with N_{XX}^Z.
pub fn squared_by_summand(md: &ModularData, fr: &FusionRing, x: &str) -> Result<Vec<(String, CycloNumber, u32)>, Error> {
    let xi = label(md, x)?;
    let tx2 = &md.t[xi] * &md.t[xi];
    Ok((0..md.rank())
        .filter(|&z| fr.n(xi, xi, z) > 0)
        .map(|z| (md.labels[z].clone(), ratio(&md.t[z], &tx2), fr.n(xi, xi, z)))
        .collect())
}

/// Least m ≥ 1 with all e_i^m equal.
pub fn projective_order(e: &EigenvalueMultiset) -> Result<u64, Error> {
    let first = e.values.first().ok_or_else(|| Error::Data("empty eigenvalue multiset".into()))?;
    let mut m: u64 = 1;
    for v in &e.values[1..] {
        let (_, ord) = ratio(v, first)
            .root_of_unity_exponent()
            .ok_or_else(|| Error::Data(format!("{v} / {first} is not a root of unity")))?;
        m = m.lcm(&(ord as u64));
    }
    Ok(m)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    True,
    False,
    Undetermined,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::True => "true",
            Verdict::False => "false",
            Verdict::Undetermined => "undetermined",
        })
    }
}

/// Irreducibility of B3 on Hom(X, X^{⊗3}) for simple self-dual X: X⊗X is a sum
/// of d ≥ 2 distinct simples and the generator has d distinct eigenvalues.
///
/// `signed` gives the actual eigenvalues (one per summand) when known. Without
/// them, distinct squares settle the question; repeated squares leave it open.
pub fn tw_irreducibility(md: &ModularData, fr: &FusionRing, x: &str, signed: Option<&[CycloNumber]>) -> Result<Verdict, Error> {
    let xi = label(md, x)?;
    if fr.dual[xi] != xi {
        return Err(Error::Data(format!("{x} is not self-dual")));
    }
    let summands = squared_by_summand(md, fr, x)?;
    if summands.iter().any(|(_, _, n)| *n > 1) || summands.len() < 2 {
        return Ok(Verdict::False);
    }
    let d = summands.len();
    if let Some(sig) = signed {
        if sig.len() != d {
            return Err(Error::Data(format!("expected {d} eigenvalues, got {}", sig.len())));
        }
        let distinct = EigenvalueMultiset::new(sig.to_vec()).distinct();
        return Ok(if distinct == d { Verdict::True } else { Verdict::False });
    }
    let squares = EigenvalueMultiset::new(summands.into_iter().map(|(_, v, _)| v).collect());
    Ok(if squares.distinct() == d { Verdict::True } else { Verdict::Undetermined })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Advisory {
    InfiniteImage,
    Inconclusive(String),
}

impl fmt::Display for Advisory {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Advisory::InfiniteImage => f.write_str("infinite image"),
            Advisory::Inconclusive(why) => write!(f, "inconclusive ({why})"),
        }
    }
}

/// Advisory only: an irreducible image whose generator has projective order
/// outside {1, 2, 3, 4, 6} is reported as infinite.
pub fn density_advisory(dimension: usize, proj_order: u64, irreducible: Verdict) -> Advisory {
    match irreducible {
        Verdict::True if ![1, 2, 3, 4, 6].contains(&proj_order) => Advisory::InfiniteImage,
        Verdict::True => Advisory::Inconclusive(format!("projective order {proj_order} is in {{1,2,3,4,6}}")),
        Verdict::False => Advisory::Inconclusive(format!("{dimension}-dimensional space not known to be irreducible")),
        Verdict::Undetermined => Advisory::Inconclusive("irreducibility undetermined; primitivity would need separate work".into()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: u32, k: i64) -> CycloNumber {
        CycloNumber::root_of_unity(n, k)
    }

    #[test]
    fn projective_order_examples() {
        let q = |k| z(12, k);
        let e = EigenvalueMultiset::new(vec![q(-2), -q(-1), q(1)]);
        assert_eq!(projective_order(&e).unwrap(), 12);
        assert_eq!(projective_order(&EigenvalueMultiset::new(vec![z(1, 0)])).unwrap(), 1);
        let g = |k| z(13, k);
        assert_eq!(projective_order(&EigenvalueMultiset::new(vec![g(2), g(5)])).unwrap(), 13);
        assert!(projective_order(&EigenvalueMultiset::new(vec![])).is_err());
    }

    #[test]
    fn advisory_cases() {
        assert_eq!(density_advisory(3, 12, Verdict::True), Advisory::InfiniteImage);
        assert!(matches!(density_advisory(1, 1, Verdict::False), Advisory::Inconclusive(_)));
        assert!(matches!(density_advisory(7, 13, Verdict::Undetermined), Advisory::Inconclusive(_)));
        assert!(matches!(density_advisory(3, 6, Verdict::True), Advisory::Inconclusive(_)));
    }

    #[test]
    fn semion_unit_is_not_irreducible() {
        let md = ModularData::semion();
        let fr = FusionRing::verlinde(&md, crate::Exec::Sequential).unwrap();
        assert_eq!(tw_irreducibility(&md, &fr, "1", None).unwrap(), Verdict::False);
        // s⊗s = 1: a single summand
        assert_eq!(tw_irreducibility(&md, &fr, "s", None).unwrap(), Verdict::False);
        let e = squared_braid_eigs(&md, &fr, "s", "s").unwrap();
        assert_eq!(e.values, vec![-z(4, 0)]);
    }

    #[test]
    fn multiset_matching() {
        let a = EigenvalueMultiset::new(vec![z(12, 1), z(12, 1), z(12, 5)]);
        let b = EigenvalueMultiset::new(vec![z(12, -5), z(12, -1), z(12, -1)]);
        assert_eq!(a.match_up_to_conjugation(&a), Some(Convention::Direct));
        assert_eq!(a.match_up_to_conjugation(&b), Some(Convention::Conjugate));
        let c = EigenvalueMultiset::new(vec![z(12, 1), z(12, 5), z(12, 5)]);
        assert_eq!(a.match_up_to_conjugation(&c), None);
        assert_eq!(a.exponents_over(12).unwrap(), vec![1, 1, 5]);
    }
}
