//! Derived data of the center: Hom spaces, tensor products and their
//! decompositions, S̃, twists, and braiding eigenvalues.

use cyclo::CycloNumber;

use crate::exec::Exec;
use crate::fusion::FusionRing;
use crate::linalg::{Field, Mat};
use crate::report::Report;
use crate::Error;

use super::morph::{Mor, Word};
use super::scalar::Scalar;
use super::skeleton::Skeleton;
use super::{Category, CenterObject};

/// One coordinate of a morphism between two formal sums of words.
#[derive(Clone, Debug)]
struct Slot {
    src: Word,
    tgt: Word,
    channel: usize,
    row: usize,
    col: usize,
}

fn slots(sk: &Skeleton, srcs: &[Word], tgts: &[Word]) -> Vec<Slot> {
    let mut v = vec![];
    for s in srcs {
        for u in tgts {
            for t in 0..sk.rank() {
                let (ns, nu) = (sk.basis(s, t).len(), sk.basis(u, t).len());
                for row in 0..nu {
                    for col in 0..ns {
                        v.push(Slot { src: s.clone(), tgt: u.clone(), channel: t, row, col });
                    }
                }
            }
        }
    }
    v
}

fn read(m: &Mor, s: &Slot) -> Scalar {
    m.block(&s.src, &s.tgt, s.channel).map(|b| b[(s.row, s.col)].clone()).unwrap_or_else(Scalar::zero)
}

fn unit_mor(sk: &Skeleton, s: &Slot) -> Mor {
    sk.elementary(&s.src, &s.tgt, s.channel, s.row, s.col, Scalar::one())
}

/// Hom_Z(A, B) with an explicit basis.
#[derive(Clone, Debug)]
pub struct HomSpace {
    pub dim: usize,
    pub basis: Vec<Mor>,
}

/// Solve (id_w⊗f)∘e_A(w) = e_B(w)∘(f⊗id_w) for all simples w.
pub fn center_hom(sk: &Skeleton, a: &CenterObject, b: &CenterObject) -> HomSpace {
    let unknowns = slots(sk, &a.words, &b.words);
    if unknowns.is_empty() {
        return HomSpace { dim: 0, basis: vec![] };
    }
    // equation coordinates: for each w, maps A⊗w → w⊗B
    let mut eq_slots = vec![];
    for w in 0..sk.rank() {
        let lw = Word::Leaf(w);
        let srcs: Vec<Word> = a.words.iter().map(|z| Word::pair(z.clone(), lw.clone())).collect();
        let tgts: Vec<Word> = b.words.iter().map(|z| Word::pair(lw.clone(), z.clone())).collect();
        eq_slots.push(slots(sk, &srcs, &tgts));
    }
    let ids: Vec<Mor> = (0..sk.rank()).map(|w| sk.identity(&Word::Leaf(w))).collect();
    let rows: usize = eq_slots.iter().map(Vec::len).sum();
    let mut sys = Mat::zeros(rows, unknowns.len());
    for (ci, u) in unknowns.iter().enumerate() {
        let f = unit_mor(sk, u);
        let mut r0 = 0;
        for w in 0..sk.rank() {
            let resid = a.e[w].then(&sk.tensor(&ids[w], &f)).sub(&sk.tensor(&f, &ids[w]).then(&b.e[w]));
            for (ri, s) in eq_slots[w].iter().enumerate() {
                sys[(r0 + ri, ci)] = read(&resid, s);
            }
            r0 += eq_slots[w].len();
        }
    }
    let null = sys.nullspace();
    let basis = null
        .iter()
        .map(|v| {
            let parts: Vec<Mor> = unknowns
                .iter()
                .zip(v)
                .filter(|(_, c)| !c.is_zero())
                .map(|(u, c)| sk.elementary(&u.src, &u.tgt, u.channel, u.row, u.col, c.clone()))
                .collect();
            Mor::sum(parts.iter())
        })
        .collect();
    HomSpace { dim: null.len(), basis }
}

/// (A⊗B, e_AB) with e_AB(w) = α(w,a,b)∘(e_A(w)⊗id)∘α⁻¹(a,w,b)∘(id⊗e_B(w))∘α(a,b,w).
pub fn tensor_product(sk: &Skeleton, a: &CenterObject, b: &CenterObject) -> CenterObject {
    let mut words = vec![];
    for x in &a.words {
        for y in &b.words {
            words.push(Word::pair(x.clone(), y.clone()));
        }
    }
    let sum = |parts: Vec<Mor>| Mor::sum(parts.iter());
    let mut e = vec![];
    for w in 0..sk.rank() {
        let lw = Word::Leaf(w);
        let pairs = || a.words.iter().flat_map(|x| b.words.iter().map(move |y| (x, y)));
        let step = sum(pairs().map(|(x, y)| sk.assoc(x, y, &lw)).collect())
            .then(&sum(a.words.iter().map(|x| sk.tensor(&sk.identity(x), &b.e[w])).collect()))
            .then(&sum(pairs().map(|(x, y)| sk.assoc_inv(x, &lw, y)).collect()))
            .then(&sum(b.words.iter().map(|y| sk.tensor(&a.e[w], &sk.identity(y))).collect()))
            .then(&sum(pairs().map(|(x, y)| sk.assoc(&lw, x, y)).collect()));
        e.push(step);
    }
    CenterObject { name: format!("{}*{}", a.name, b.name), words, e, entries: vec![] }
}

/// Multiplicity of each listed simple in A⊗B, plus the dimension balance check.
pub fn decompose(sk: &Skeleton, simples: &[CenterObject], a: &CenterObject, b: &CenterObject) -> Result<Vec<usize>, Error> {
    let p = tensor_product(sk, a, b);
    let mult: Vec<usize> = simples.iter().map(|k| center_hom(sk, k, &p).dim).collect();
    let total = simples.iter().zip(&mult).fold(Scalar::zero(), |acc, (k, &m)| acc.add(&k.dim(sk).mul(&Scalar::from_i64(m as i64))));
    if total != a.dim(sk).mul(&b.dim(sk)) {
        return Err(Error::Data(format!("{}⊗{}: multiplicities do not account for the product dimension", a.name, b.name)));
    }
    Ok(mult)
}

/// Fusion ring of the center objects from explicit decompositions (pairs a ≤ b).
pub fn derived_fusion(cat: &Category, exec: Exec) -> Result<FusionRing, Error> {
    let sk = &cat.skeleton;
    let objs = &cat.objects;
    let r = objs.len();
    let pairs: Vec<(usize, usize)> = (0..r).flat_map(|i| (i..r).map(move |j| (i, j))).collect();
    let results = exec.map(&pairs, |&(i, j)| decompose(sk, objs, &objs[i], &objs[j]));
    let mut table = vec![0u32; r * r * r];
    for (&(i, j), res) in pairs.iter().zip(results) {
        for (k, m) in res?.into_iter().enumerate() {
            table[(i * r + j) * r + k] = m as u32;
            table[(j * r + i) * r + k] = m as u32;
        }
    }
    let dual = (0..r).map(|i| (0..r).find(|&j| table[(i * r + j) * r] == 1).unwrap_or(i)).collect();
    Ok(FusionRing::from_fn(cat.names(), dual, |i, j, k| table[(i * r + j) * r + k]))
}

fn e_on(obj: &CenterObject, words: &[Word]) -> Mor {
    let parts: Vec<&Mor> = words
        .iter()
        .map(|w| match w {
            Word::Leaf(x) => &obj.e[*x],
            _ => panic!("braiding with a non-simple word"),
        })
        .collect();
    Mor::sum(parts)
}

fn cyclo(x: Scalar, what: &str) -> Result<CycloNumber, Error> {
    x.to_cyclo().ok_or_else(|| Error::NotExpressible(format!("{what} has a nonzero tau part")))
}

/// θ_A = tr(e_A(z))/dim z.
pub fn twist(sk: &Skeleton, a: &CenterObject) -> Result<CycloNumber, Error> {
    let tr = sk.trace(&e_on(a, &a.words));
    let d = a.dim(sk);
    cyclo(tr.mul(&d.inv().expect("nonzero dimension")), &format!("twist of {}", a.name))
}

pub fn twists(cat: &Category) -> Result<Vec<CycloNumber>, Error> {
    cat.objects.iter().map(|o| twist(&cat.skeleton, o)).collect()
}

/// s̃(A,B) = tr(c_{B,A}∘c_{A,B}).
pub fn s_entry(sk: &Skeleton, a: &CenterObject, b: &CenterObject) -> Result<CycloNumber, Error> {
    let m = e_on(a, &b.words).then(&e_on(b, &a.words));
    cyclo(sk.trace(&m), &format!("s({}, {})", a.name, b.name))
}

pub fn s_matrix(cat: &Category, exec: Exec) -> Result<Mat<CycloNumber>, Error> {
    let r = cat.objects.len();
    let entries = exec.map_range(r * r, |idx| s_entry(&cat.skeleton, &cat.objects[idx / r], &cat.objects[idx % r]));
    let entries = entries.into_iter().collect::<Result<Vec<_>, _>>()?;
    Ok(Mat::from_rows(entries.chunks(r).map(<[CycloNumber]>::to_vec).collect()))
}

/// Σ (dim A)² over the center simples equals (dim E)².
pub fn dim_double_check(cat: &Category) -> Report {
    let sk = &cat.skeleton;
    let mut rep = Report::new();
    let lhs = cat.objects.iter().fold(Scalar::zero(), |acc, o| {
        let d = o.dim(sk);
        acc.add(&d.mul(&d))
    });
    let de = sk.global_dim();
    let rhs = de.mul(&de);
    rep.check("center", "dim-double", lhs == rhs, || format!("Σ dim² = {lhs}, (dim E)² = {rhs}"));
    rep
}

/// An eigenvalue of c_{A,A} on the K-isotypic part of A⊗A.
#[derive(Clone, Debug, PartialEq)]
pub struct BraidEigen {
    pub summand: String,
    pub value: CycloNumber,
    pub multiplicity: usize,
}

fn coords(sk: &Skeleton, m: &Mor, srcs: &[Word], tgts: &[Word]) -> Vec<Scalar> {
    slots(sk, srcs, tgts).iter().map(|s| read(m, s)).collect()
}

/// Eigenvalues of c_{A,A} acting by composition on each Hom(K, A⊗A).
/// Candidates are the square roots of θ_K/θ_A², multiplicities from nullities.
pub fn braiding_eigenvalues(cat: &Category, name: &str) -> Result<Vec<BraidEigen>, Error> {
    let sk = &cat.skeleton;
    let a = cat.object(name)?;
    let p = tensor_product(sk, a, a);
    let c = e_on(a, &a.words);
    let theta_a = twist(sk, a)?;
    let mut out = vec![];
    for k in &cat.objects {
        let hom = center_hom(sk, k, &p);
        if hom.dim == 0 {
            continue;
        }
        let basis_mat = Mat::from_rows(hom.basis.iter().map(|f| coords(sk, f, &k.words, &p.words)).collect()).transpose();
        let mut action = Mat::zeros(hom.dim, hom.dim);
        for (i, f) in hom.basis.iter().enumerate() {
            let g = f.then(&c);
            let x = basis_mat
                .solve(&coords(sk, &g, &k.words, &p.words))
                .ok_or_else(|| Error::Data(format!("braiding does not preserve Hom({}, {name}⊗{name})", k.name)))?;
            for (j, v) in x.into_iter().enumerate() {
                action[(j, i)] = v;
            }
        }
        let sq = &twist(sk, k)? * &(&theta_a * &theta_a).inv().map_err(|e| Error::Data(e.to_string()))?;
        let (e, m) = sq.root_of_unity_exponent().ok_or_else(|| Error::Data("twist ratio is not a root of unity".into()))?;
        let root = CycloNumber::root_of_unity(2 * m, e as i64);
        let mut found = 0;
        for lam in [root.clone(), -&root] {
            let shifted = action.sub(&Mat::identity(hom.dim).scale(&Scalar::from_cyclo(lam.clone())));
            let mult = hom.dim - shifted.rank();
            if mult > 0 {
                found += mult;
                out.push(BraidEigen { summand: k.name.clone(), value: lam, multiplicity: mult });
            }
        }
        if found != hom.dim {
            return Err(Error::Data(format!("c_{{{name},{name}}} is not semisimple on Hom({}, {name}⊗{name})", k.name)));
        }
    }
    Ok(out)
}
