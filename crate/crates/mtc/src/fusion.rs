//! Fusion rings: Verlinde formula, subcategories, centralizers, primality,
//! product factorization, universal grading and dimension filters.

use std::collections::{BTreeMap, BTreeSet};

use cyclo::CycloNumber;
use num_traits::{Signed, ToPrimitive};
use serde_json::{json, Value};

use crate::exec::Exec;
use crate::linalg::Mat;
use crate::moddata::ModularData;
use crate::report::Report;
use crate::Error;

const SUITE: &str = "fusion";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionRing {
    pub labels: Vec<String>,
    /// Duality involution i ↦ i*.
    pub dual: Vec<usize>,
    n: Vec<u32>,
}

impl FusionRing {
    /// `mult(i, j, k)` gives the multiplicity of k in i ⊗ j.
    pub fn from_fn(labels: Vec<String>, dual: Vec<usize>, mult: impl Fn(usize, usize, usize) -> u32) -> FusionRing {
        let r = labels.len();
        let mut n = vec![0; r * r * r];
        for i in 0..r {
            for j in 0..r {
                for k in 0..r {
                    n[(i * r + j) * r + k] = mult(i, j, k);
                }
            }
        }
        FusionRing { labels, dual, n }
    }

    /// Build from a table of products `(i, j) -> [(k, multiplicity)]`. Unit
    /// rows are filled in, and products are symmetrized.
    pub fn from_products(labels: Vec<String>, dual: Vec<usize>, products: &[(usize, usize, Vec<(usize, u32)>)]) -> FusionRing {
        let r = labels.len();
        let mut fr = FusionRing { labels, dual, n: vec![0; r * r * r] };
        for j in 0..r {
            fr.set(0, j, j, 1);
            fr.set(j, 0, j, 1);
        }
        for (i, j, out) in products {
            for &(k, m) in out {
                fr.set(*i, *j, k, m);
                fr.set(*j, *i, k, m);
            }
        }
        fr
    }

    fn set(&mut self, i: usize, j: usize, k: usize, m: u32) {
        let r = self.rank();
        self.n[(i * r + j) * r + k] = m;
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn n(&self, i: usize, j: usize, k: usize) -> u32 {
        let r = self.rank();
        self.n[(i * r + j) * r + k]
    }

    pub fn index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Multiplicity vector of i ⊗ j.
    pub fn product(&self, i: usize, j: usize) -> Vec<u32> {
        (0..self.rank()).map(|k| self.n(i, j, k)).collect()
    }

    /// Fusion matrix of i: entry [j][k] = N_{ij}^k.
    pub fn matrix(&self, i: usize) -> Vec<Vec<u32>> {
        (0..self.rank()).map(|j| self.product(i, j)).collect()
    }

    /// Human-readable sum such as `1 + X4 + 2V`.
    pub fn format_vector(&self, v: &[u32]) -> String {
        let terms: Vec<String> = v
            .iter()
            .enumerate()
            .filter(|(_, &m)| m > 0)
            .map(|(k, &m)| if m == 1 { self.labels[k].clone() } else { format!("{m}{}", self.labels[k]) })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }

    /// Verlinde formula: N_{ij}^k = Σ_t s̃_it s̃_jt conj(s̃_kt) / (D² s̃_0t),
    /// checked exactly to be a nonnegative integer.
    pub fn verlinde(md: &ModularData, exec: Exec) -> Result<FusionRing, Error> {
        let r = md.rank();
        let s = &md.s;
        let d2 = md.global_dim_sq();
        let weights: Vec<CycloNumber> = (0..r)
            .map(|t| (&d2 * &s[(0, t)]).inv().map_err(|e| Error::Data(e.to_string())))
            .collect::<Result<_, _>>()?;
        let sconj = s.conj();
        let pairs: Vec<(usize, usize)> = (0..r).flat_map(|i| (i..r).map(move |j| (i, j))).collect();
        let rows = exec.map(&pairs, |&(i, j)| -> Result<Vec<u32>, Error> {
            let a: Vec<CycloNumber> = (0..r)
                .map(|t| {
                    let x = &s[(i, t)] * &s[(j, t)];
                    if x.is_zero() {
                        x
                    } else {
                        &x * &weights[t]
                    }
                })
                .collect();
            (0..r)
                .map(|k| {
                    let v = (0..r).fold(CycloNumber::zero(1), |acc, t| {
                        if a[t].is_zero() || sconj[(k, t)].is_zero() {
                            acc
                        } else {
                            &acc + &(&a[t] * &sconj[(k, t)])
                        }
                    });
                    let q = v.to_rational().filter(|q| q.is_integer() && !q.is_negative());
                    q.and_then(|q| q.to_integer().to_u32()).ok_or_else(|| {
                        Error::Data(format!(
                            "Verlinde coefficient N[{}][{}][{}] = {v} is not a nonnegative integer",
                            md.labels[i], md.labels[j], md.labels[k]
                        ))
                    })
                })
                .collect()
        });
        let mut n = vec![0; r * r * r];
        for (&(i, j), row) in pairs.iter().zip(rows) {
            let row = row?;
            for k in 0..r {
                n[(i * r + j) * r + k] = row[k];
                n[(j * r + i) * r + k] = row[k];
            }
        }
        let dual = (0..r).map(|i| (0..r).find(|&j| n[(i * r + j) * r] == 1).unwrap_or(i)).collect();
        Ok(FusionRing { labels: md.labels.clone(), dual, n })
    }

    /// Unit, associativity, duality and Frobenius reciprocity.
    pub fn invariants(&self) -> Report {
        let r = self.rank();
        let mut rep = Report::new();
        let unit_bad = (0..r)
            .flat_map(|j| (0..r).map(move |k| (j, k)))
            .find(|&(j, k)| self.n(0, j, k) != (j == k) as u32 || self.n(j, 0, k) != (j == k) as u32);
        rep.check(SUITE, "unit", unit_bad.is_none(), || format!("unit rule fails at {unit_bad:?}"));

        let mut assoc_bad = None;
        'outer: for i in 0..r {
            for j in 0..r {
                for k in 0..r {
                    for l in 0..r {
                        let a: u32 = (0..r).map(|m| self.n(i, j, m) * self.n(m, k, l)).sum();
                        let b: u32 = (0..r).map(|m| self.n(j, k, m) * self.n(i, m, l)).sum();
                        if a != b {
                            assoc_bad = Some((i, j, k, l));
                            break 'outer;
                        }
                    }
                }
            }
        }
        rep.check(SUITE, "associativity", assoc_bad.is_none(), || format!("fails at {assoc_bad:?}"));

        let dual_ok = (0..r).all(|i| self.dual[self.dual[i]] == i) && self.dual[0] == 0;
        let dual_bad = (0..r)
            .flat_map(|i| (0..r).map(move |j| (i, j)))
            .find(|&(i, j)| self.n(i, j, 0) != (j == self.dual[i]) as u32);
        rep.check(SUITE, "duality", dual_ok && dual_bad.is_none(), || format!("fails at {dual_bad:?}"));

        let frob_bad = (0..r).flat_map(|i| (0..r).flat_map(move |j| (0..r).map(move |k| (i, j, k)))).find(|&(i, j, k)| {
            let v = self.n(i, j, k);
            v != self.n(self.dual[i], k, j) || v != self.n(k, self.dual[j], i)
        });
        rep.check(SUITE, "frobenius-reciprocity", frob_bad.is_none(), || format!("fails at {frob_bad:?}"));
        rep
    }

    /// Smallest fusion-closed, duality-closed subset containing `gens` and the unit.
    pub fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let r = self.rank();
        let mut inside = vec![false; r];
        inside[0] = true;
        let mut stack: Vec<usize> = gens.to_vec();
        let mut members = vec![0];
        while let Some(g) = stack.pop() {
            if inside[g] {
                continue;
            }
            inside[g] = true;
            members.push(g);
            stack.push(self.dual[g]);
            for &m in &members.clone() {
                for k in 0..r {
                    if !inside[k] && (self.n(g, m, k) > 0 || self.n(m, g, k) > 0) {
                        stack.push(k);
                    }
                }
            }
        }
        (0..r).filter(|&i| inside[i]).collect()
    }

    /// Every fusion-closed subset, found by closing each subset of simples.
    pub fn tensor_subcategories(&self) -> Vec<Vec<usize>> {
        let r = self.rank();
        assert!(r <= 24, "subset enumeration is sized for small ranks");
        let mut found = BTreeSet::new();
        for mask in 0u32..(1 << (r - 1)) {
            let gens: Vec<usize> = (1..r).filter(|&i| mask >> (i - 1) & 1 == 1).collect();
            found.insert(self.closure(&gens));
        }
        let mut out: Vec<Vec<usize>> = found.into_iter().collect();
        out.sort_by_key(|s| (s.len(), s.clone()));
        out
    }

    /// Universal grading: the adjoint subring and the group of its cosets.
    pub fn universal_grading(&self) -> Result<Grading, Error> {
        let r = self.rank();
        let ad_gens: Vec<usize> =
            (0..r).flat_map(|x| (0..r).filter(move |&k| self.n(x, self.dual[x], k) > 0)).collect();
        let adjoint = self.closure(&ad_gens);
        // component of i: everything reachable as a summand of i ⊗ (adjoint)
        let mut comp = vec![usize::MAX; r];
        let mut parts: Vec<Vec<usize>> = Vec::new();
        for i in 0..r {
            if comp[i] != usize::MAX {
                continue;
            }
            let id = parts.len();
            let mut part = BTreeSet::new();
            let mut stack = vec![i];
            while let Some(x) = stack.pop() {
                if !part.insert(x) {
                    continue;
                }
                for &a in &adjoint {
                    for k in 0..r {
                        if self.n(x, a, k) > 0 && !part.contains(&k) {
                            stack.push(k);
                        }
                    }
                }
            }
            for &x in &part {
                if comp[x] != usize::MAX {
                    return Err(Error::Data("inconsistent grading: overlapping components".into()));
                }
                comp[x] = id;
            }
            parts.push(part.into_iter().collect());
        }
        let g = parts.len();
        let mut table = vec![vec![0; g]; g];
        for a in 0..g {
            for b in 0..g {
                let mut target = None;
                for k in 0..r {
                    if self.n(parts[a][0], parts[b][0], k) > 0 {
                        match target {
                            None => target = Some(comp[k]),
                            Some(t) if t != comp[k] => {
                                return Err(Error::Data("inconsistent grading: product spans components".into()))
                            }
                            _ => {}
                        }
                    }
                }
                table[a][b] = target.ok_or_else(|| Error::Data("empty product".into()))?;
            }
        }
        let abelian = (0..g).all(|a| (0..g).all(|b| table[a][b] == table[b][a]));
        let invariant_factors = if abelian { abelian_invariants(&table) } else { vec![] };
        Ok(Grading { parts, table, abelian, invariant_factors })
    }

    /// Multiplicities of each simple in x^{⊗ℓ} for ℓ = 1..=n.
    pub fn tensor_power_tower(&self, x: usize, n: usize) -> Vec<Vec<u64>> {
        let r = self.rank();
        let mut levels = Vec::with_capacity(n);
        let mut v: Vec<u64> = (0..r).map(|k| (k == x) as u64).collect();
        for _ in 0..n {
            levels.push(v.clone());
            v = (0..r).map(|k| (0..r).map(|j| v[j] * self.n(j, x, k) as u64).sum()).collect();
        }
        levels
    }

    /// dim Hom(target, w_1 ⊗ … ⊗ w_n).
    pub fn hom_dimension(&self, target: usize, word: &[usize]) -> u64 {
        let r = self.rank();
        let mut v: Vec<u64> = (0..r).map(|k| (k == 0) as u64).collect();
        for &w in word {
            v = (0..r).map(|k| (0..r).map(|j| v[j] * self.n(j, w, k) as u64).sum()).collect();
        }
        v[target]
    }

    pub fn to_json(&self) -> Value {
        let r = self.rank();
        json!({
            "labels": self.labels,
            "dual": self.dual,
            "N": (0..r).map(|i| self.matrix(i)).collect::<Vec<_>>(),
        })
    }
}

/// Result of [`FusionRing::universal_grading`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Grading {
    /// Label partition; part 0 is the trivial component (adjoint subring).
    pub parts: Vec<Vec<usize>>,
    /// Multiplication table of the components.
    pub table: Vec<Vec<usize>>,
    pub abelian: bool,
    /// Invariant factors d_1 | d_2 | … of the group when abelian; empty for the trivial group.
    pub invariant_factors: Vec<u64>,
}

impl Grading {
    pub fn order(&self) -> usize {
        self.parts.len()
    }
}

fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = vec![];
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            out.push(p);
            while n.is_multiple_of(p) {
                n /= p;
            }
        }
        p += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Invariant factors of a finite abelian group from its multiplication table,
/// using the counts of elements with g^{p^j} = e.
fn abelian_invariants(table: &[Vec<usize>]) -> Vec<u64> {
    let g = table.len();
    let identity = (0..g).find(|&e| (0..g).all(|a| table[e][a] == a)).expect("identity component");
    let power = |a: usize, e: u64| (0..e).fold(identity, |acc, _| table[acc][a]);
    let mut primary: Vec<u64> = Vec::new();
    for p in prime_factors(g as u64) {
        // c[j] = log_p #{g : g^{p^j} = e}
        let mut logs = vec![0u32];
        let mut j = 1;
        loop {
            let pj = p.pow(j);
            let count = (0..g).filter(|&a| power(a, pj) == identity).count() as u64;
            let mut l = 0;
            let mut c = count;
            while c > 1 {
                c /= p;
                l += 1;
            }
            logs.push(l);
            if count == g as u64 || logs[j as usize] == logs[j as usize - 1] {
                break;
            }
            j += 1;
        }
        // number of cyclic factors of order ≥ p^j is logs[j] - logs[j-1]
        let at_least: Vec<u32> = (1..logs.len()).map(|j| logs[j] - logs[j - 1]).collect();
        for (idx, &cnt) in at_least.iter().enumerate() {
            let next = at_least.get(idx + 1).copied().unwrap_or(0);
            for _ in 0..(cnt - next) {
                primary.push(p.pow(idx as u32 + 1));
            }
        }
    }
    // combine prime powers into invariant factors
    let mut by_prime: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
    for q in primary {
        let p = prime_factors(q)[0];
        by_prime.entry(p).or_default().push(q);
    }
    let len = by_prime.values().map(Vec::len).max().unwrap_or(0);
    let mut factors = vec![1u64; len];
    for qs in by_prime.values_mut() {
        qs.sort_unstable();
        let off = len - qs.len();
        for (i, q) in qs.iter().enumerate() {
            factors[off + i] *= q;
        }
    }
    factors
}

/// Simples x with s̃[x][y] = d_x d_y for every y in `subset`.
pub fn centralizer(md: &ModularData, subset: &[usize]) -> Vec<usize> {
    let d = md.quantum_dims();
    (0..md.rank())
        .filter(|&x| subset.iter().all(|&y| md.s[(x, y)] == &d[x] * &d[y]))
        .collect()
}

/// Σ_{i∈subset} d_i².
pub fn subset_dim(md: &ModularData, subset: &[usize]) -> CycloNumber {
    let d = md.quantum_dims();
    subset.iter().fold(CycloNumber::zero(1), |acc, &i| &acc + &(&d[i] * &d[i]))
}

/// dim(K) · dim(C(K)) = D².
pub fn dim_product_check(md: &ModularData, subset: &[usize]) -> bool {
    let c = centralizer(md, subset);
    &subset_dim(md, subset) * &subset_dim(md, &c) == md.global_dim_sq()
}

/// Whether the s̃ block on `subset` is invertible.
pub fn is_modular_subset(md: &ModularData, subset: &[usize]) -> bool {
    md.s.select(subset, subset).rank() == subset.len()
}

/// Primality: no nontrivial proper fusion-closed subset is modular.
/// Returns the modular ones found (empty iff prime).
pub fn modular_subcategories(md: &ModularData, fr: &FusionRing) -> Vec<Vec<usize>> {
    fr.tensor_subcategories()
        .into_iter()
        .filter(|s| s.len() > 1 && s.len() < md.rank() && is_modular_subset(md, s))
        .collect()
}

pub fn is_prime(md: &ModularData, fr: &FusionRing) -> bool {
    modular_subcategories(md, fr).is_empty()
}

/// A factorization md ≅ K1 ⊠ K2 with the label bijection (a, b) ↦ a ⊗ b.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub first: Vec<usize>,
    pub second: Vec<usize>,
    /// `map[i][j]` is the simple a_i ⊗ b_j.
    pub map: Vec<Vec<usize>>,
}

pub fn product_factorization(md: &ModularData, fr: &FusionRing) -> Option<Factorization> {
    let mods = modular_subcategories(md, fr);
    let d2 = md.global_dim_sq();
    for (ai, a) in mods.iter().enumerate() {
        for b in &mods[ai + 1..] {
            if a.iter().any(|x| *x != 0 && b.contains(x)) || a.len() * b.len() != md.rank() {
                continue;
            }
            if &subset_dim(md, a) * &subset_dim(md, b) != d2 {
                continue;
            }
            let mut map = vec![vec![0; b.len()]; a.len()];
            let mut seen = BTreeSet::new();
            let mut ok = true;
            'pairs: for (i, &x) in a.iter().enumerate() {
                for (j, &y) in b.iter().enumerate() {
                    let p = fr.product(x, y);
                    let support: Vec<usize> = (0..p.len()).filter(|&k| p[k] > 0).collect();
                    if support.len() != 1 || p[support[0]] != 1 || !seen.insert(support[0]) {
                        ok = false;
                        break 'pairs;
                    }
                    map[i][j] = support[0];
                }
            }
            if !ok {
                continue;
            }
            let kron = (0..a.len()).all(|i| {
                (0..b.len()).all(|j| {
                    (0..a.len()).all(|k| {
                        (0..b.len()).all(|l| {
                            md.s[(map[i][j], map[k][l])] == &md.s[(a[i], a[k])] * &md.s[(b[j], b[l])]
                        })
                    })
                })
            });
            if kron {
                return Some(Factorization { first: a.clone(), second: b.clone(), map });
            }
        }
    }
    None
}

/// All multisets of simple dimensions (each value used at most as often as it
/// occurs, the unit at least once) whose squares sum to `target`.
pub fn dimension_filter(md: &ModularData, target: &CycloNumber) -> Vec<Vec<CycloNumber>> {
    let mut values: Vec<(CycloNumber, usize)> = Vec::new();
    for d in md.quantum_dims() {
        match values.iter_mut().find(|(v, _)| *v == d) {
            Some((_, c)) => *c += 1,
            None => values.push((d, 1)),
        }
    }
    values.sort_by(|a, b| a.0.to_c64().re.total_cmp(&b.0.to_c64().re));
    let squares: Vec<CycloNumber> = values.iter().map(|(v, _)| v * v).collect();
    let target_f = target.to_c64().re;
    let mut out = Vec::new();
    let mut counts = vec![0usize; values.len()];
    fn rec(
        idx: usize,
        acc: CycloNumber,
        counts: &mut Vec<usize>,
        values: &[(CycloNumber, usize)],
        squares: &[CycloNumber],
        target: &CycloNumber,
        target_f: f64,
        out: &mut Vec<Vec<CycloNumber>>,
    ) {
        if acc.to_c64().re > target_f + 1e-9 {
            return;
        }
        if idx == values.len() {
            if &acc == target {
                let mut ms = Vec::new();
                for (i, &c) in counts.iter().enumerate() {
                    ms.extend(std::iter::repeat_n(values[i].0.clone(), c));
                }
                out.push(ms);
            }
            return;
        }
        let lo = if values[idx].0.is_one() { 1 } else { 0 };
        for c in lo..=values[idx].1 {
            counts[idx] = c;
            let next = &acc + &squares[idx].scale(&cyclo::ratio(c as i64, 1));
            rec(idx + 1, next, counts, values, squares, target, target_f, out);
        }
        counts[idx] = 0;
    }
    rec(0, CycloNumber::zero(1), &mut counts, &values, &squares, target, target_f, &mut out);
    out
}

/// Exact restriction of s̃ to a subset, as used by the primality test.
pub fn restricted_s(md: &ModularData, subset: &[usize]) -> Mat<CycloNumber> {
    md.s.select(subset, subset)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_ring() {
        let fr = FusionRing::verlinde(&ModularData::trivial(), Exec::Sequential).unwrap();
        assert_eq!(fr.n(0, 0, 0), 1);
        assert_eq!(fr.tensor_subcategories(), vec![vec![0]]);
        let g = fr.universal_grading().unwrap();
        assert_eq!(g.order(), 1);
        assert!(g.invariant_factors.is_empty());
    }

    #[test]
    fn semion_is_z2_graded() {
        let fr = FusionRing::verlinde(&ModularData::semion(), Exec::Sequential).unwrap();
        assert_eq!(fr.product(1, 1), vec![1, 0]);
        let g = fr.universal_grading().unwrap();
        assert_eq!(g.invariant_factors, vec![2]);
    }

    #[test]
    fn product_is_detected_and_recovered() {
        let md = ModularData::semion().product(&ModularData::semion());
        let fr = FusionRing::verlinde(&md, Exec::Sequential).unwrap();
        assert!(fr.invariants().passed());
        assert!(!is_prime(&md, &fr));
        let f = product_factorization(&md, &fr).expect("factorization");
        assert_eq!(f.first.len() * f.second.len(), 4);
        let g = fr.universal_grading().unwrap();
        assert_eq!(g.invariant_factors, vec![2, 2]);
    }

    #[test]
    fn invariant_factors_of_cyclic_products() {
        // Z/2 x Z/3 given as Z/6 addition table
        let t: Vec<Vec<usize>> = (0..6).map(|a| (0..6).map(|b| (a + b) % 6).collect()).collect();
        assert_eq!(abelian_invariants(&t), vec![6]);
        let t: Vec<Vec<usize>> = (0..8).map(|a| (0..8).map(|b| a ^ b).collect()).collect();
        assert_eq!(abelian_invariants(&t), vec![2, 2, 2]);
        let t: Vec<Vec<usize>> = (0..8)
            .map(|a| (0..8).map(|b| ((a % 4 + b % 4) % 4) + 4 * ((a / 4 + b / 4) % 2)).collect())
            .collect();
        assert_eq!(abelian_invariants(&t), vec![2, 4]);
    }

    #[test]
    fn unit_tower_and_duality_hom() {
        let fr = FusionRing::verlinde(&ModularData::semion(), Exec::Sequential).unwrap();
        assert!(fr.tensor_power_tower(0, 4).iter().all(|v| v == &vec![1, 0]));
        assert_eq!(fr.hom_dimension(0, &[1, fr.dual[1]]), 1);
    }
}
