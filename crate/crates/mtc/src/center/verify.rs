//! Coherence checks on the skeletal data and the half-braidings.

use crate::exec::Exec;
use crate::linalg::{Field, Mat};
use crate::report::Report;

use super::morph::{Mor, Word};
use super::scalar::Scalar;
use super::skeleton::Skeleton;
use super::{Category, CenterObject};

/// The two rebracketings ((ab)c)d → a(b(cd)) agree, for every 4-tuple and target.
pub fn pentagon(sk: &Skeleton) -> Report {
    let mut rep = Report::new();
    let r = sk.rank();
    let mut bad = vec![];
    for a in 0..r {
        for b in 0..r {
            for c in 0..r {
                for d in 0..r {
                    for w in 0..r {
                        if !pentagon_at(sk, [a, b, c, d, w]) {
                            bad.push(sk.names(&[a, b, c, d, w]).join(","));
                        }
                    }
                }
            }
        }
    }
    rep.check("center", "pentagon", bad.is_empty(), || format!("fails at {}", bad.join("; ")));
    rep
}

/// Pentagon at a single (a, b, c, d; w).
pub fn pentagon_at(sk: &Skeleton, [a, b, c, d, w]: [usize; 5]) -> bool {
    let r = sk.rank();
    let n = |x, y, z| sk.n(x, y, z);
    let mut src = vec![];
    for e in 0..r {
        for i in 0..n(a, b, e) {
            for g in 0..r {
                for j in 0..n(e, c, g) {
                    for k in 0..n(g, d, w) {
                        src.push((e, i, g, j, k));
                    }
                }
            }
        }
    }
    if src.is_empty() {
        return true;
    }
    let mut tgt = vec![];
    for h in 0..r {
        for p in 0..n(c, d, h) {
            for m in 0..r {
                for q in 0..n(b, h, m) {
                    for s in 0..n(a, m, w) {
                        tgt.push((h, p, m, q, s));
                    }
                }
            }
        }
    }
    let pos = |t: &(usize, usize, usize, usize, usize)| tgt.iter().position(|x| x == t).expect("target tree");
    let mut p1: Mat<Scalar> = Mat::zeros(tgt.len(), src.len());
    let mut p2: Mat<Scalar> = Mat::zeros(tgt.len(), src.len());
    // column of F[key] at left triple, as (right triple, coefficient)
    let apply = |key: [usize; 4], left: (usize, usize, usize)| -> Vec<((usize, usize, usize), Scalar)> {
        let blk = sk.f_block(key).expect("associator block");
        let col = blk.left.iter().position(|x| *x == left).expect("left triple");
        blk.right.iter().enumerate().filter(|(ri, _)| !blk.f[(*ri, col)].is_zero()).map(|(ri, t)| (*t, blk.f[(ri, col)].clone())).collect()
    };
    for (si, &(e, i, g, j, k)) in src.iter().enumerate() {
        // α_{ab,c,d} then α_{a,b,cd}
        for ((h, p, s1), c1) in apply([e, c, d, w], (g, j, k)) {
            for ((m, q, s), c2) in apply([a, b, h, w], (e, i, s1)) {
                let ti = pos(&(h, p, m, q, s));
                p1[(ti, si)] = p1[(ti, si)].add(&c1.mul(&c2));
            }
        }
        // (α_{a,b,c}⊗id) then α_{a,bc,d} then (id⊗α_{b,c,d})
        for ((f, q1, n1), c1) in apply([a, b, c, g], (e, i, j)) {
            for ((m, t, s), c2) in apply([a, f, d, w], (g, n1, k)) {
                let c12 = c1.mul(&c2);
                for ((h, p, q), c3) in apply([b, c, d, m], (f, q1, t)) {
                    let ti = pos(&(h, p, m, q, s));
                    p2[(ti, si)] = p2[(ti, si)].add(&c12.mul(&c3));
                }
            }
        }
    }
    p1 == p2
}

/// Snake identities for every simple and d_a = ev_a∘coev_a consistent with fusion.
pub fn rigidity(sk: &Skeleton) -> Report {
    let mut rep = Report::new();
    for a in 1..sk.rank() {
        let name = &sk.simples[a];
        if sk.dual[a] != a {
            rep.note("center", &format!("snake-{name}"), false, "only self-dual simples are supported");
            continue;
        }
        let la = Word::Leaf(a);
        let unitor = sk.unit_swap(&la);
        // a⊗1 → a⊗(aa) → (aa)⊗a → 1⊗a
        let left = sk
            .tensor(&sk.identity(&la), &sk.coev(a))
            .then(&sk.assoc_inv(&la, &la, &la))
            .then(&sk.tensor(&sk.ev(a), &sk.identity(&la)));
        rep.check("center", &format!("snake-{name}-left"), left.same_as(&unitor), || format!("{left:?}"));
        // 1⊗a → (aa)⊗a → a⊗(aa) → a⊗1
        let back = reverse_unit(&sk.unit_swap(&la));
        let right = sk
            .tensor(&sk.coev(a), &sk.identity(&la))
            .then(&sk.assoc(&la, &la, &la))
            .then(&sk.tensor(&sk.identity(&la), &sk.ev(a)));
        rep.check("center", &format!("snake-{name}-right"), right.same_as(&back), || format!("{right:?}"));
    }
    // d_a d_b = Σ N_ab^c d_c
    let r = sk.rank();
    let mut ok = true;
    for a in 0..r {
        for b in 0..r {
            let rhs = (0..r).fold(Scalar::zero(), |acc, c| acc.add(&sk.dim(c).mul(&Scalar::from_i64(sk.n(a, b, c) as i64))));
            ok &= sk.dim(a).mul(&sk.dim(b)) == rhs;
        }
    }
    rep.check("center", "dims-fusion-character", ok, || "quantum dimensions are not a fusion character".into());
    let dims_ok = (0..r).all(|a| sk.dim(a).to_c64().re > 0.0 && sk.dim(a).to_cyclo().is_some());
    rep.check("center", "dims-positive", dims_ok, || "a quantum dimension is not positive".into());
    rep
}

/// Swap source and target of a block-identity morphism.
fn reverse_unit(m: &Mor) -> Mor {
    let mut r = Mor::new();
    for ((s, t), d) in &m.blocks {
        for (c, b) in d {
            r.add_block(t.clone(), s.clone(), *c, b.transpose());
        }
    }
    r
}

/// Σ_{t,i} (v^{ab}_t)_i ∘ (v^t_{ab})_i = id_{a⊗b} on every two-letter word.
pub fn completeness(sk: &Skeleton) -> Report {
    let mut rep = Report::new();
    let r = sk.rank();
    let mut ok = true;
    for a in 0..r {
        for b in 0..r {
            let ab = Word::leaves(a, b);
            let mut acc = Mor::new();
            for t in 0..r {
                for i in 0..sk.n(a, b, t) {
                    let down = sk.elementary(&ab, &Word::Leaf(t), t, 0, i, Scalar::one());
                    let up = sk.elementary(&Word::Leaf(t), &ab, t, i, 0, Scalar::one());
                    acc = acc.add(&down.then(&up));
                }
            }
            ok &= acc.same_as(&sk.identity(&ab));
        }
    }
    rep.check("center", "basis-completeness", ok, || "Σ v∘v differs from the identity".into());
    rep
}

/// Naturality of e_z with respect to every basis morphism x_i⊗x_j → x_k.
pub fn naturality_failures(sk: &Skeleton, obj: &CenterObject) -> Vec<String> {
    let r = sk.rank();
    let z_id = obj.identity(sk);
    let mut bad = vec![];
    for xi in 0..r {
        for xj in 0..r {
            for xk in 0..r {
                for m in 0..sk.n(xi, xj, xk) {
                    if !naturality_at(sk, obj, &z_id, xi, xj, xk, m) {
                        bad.push(format!("({},{}->{} #{m})", sk.simples[xi], sk.simples[xj], sk.simples[xk]));
                    }
                }
            }
        }
    }
    bad
}

#[allow(clippy::too_many_arguments)]
fn naturality_at(sk: &Skeleton, obj: &CenterObject, z_id: &Mor, xi: usize, xj: usize, xk: usize, m: usize) -> bool {
    let (li, lj) = (Word::Leaf(xi), Word::Leaf(xj));
    let f = sk.elementary(&Word::leaves(xi, xj), &Word::Leaf(xk), xk, 0, m, Scalar::one());
    let lhs = sk.tensor(z_id, &f).then(&obj.e[xk]);
    let sum = |parts: Vec<Mor>| Mor::sum(parts.iter());
    let rhs = sum(obj.words.iter().map(|z| sk.assoc_inv(z, &li, &lj)).collect())
        .then(&sk.tensor(&obj.e[xi], &sk.identity(&lj)))
        .then(&sum(obj.words.iter().map(|z| sk.assoc(&li, z, &lj)).collect()))
        .then(&sk.tensor(&sk.identity(&li), &obj.e[xj]))
        .then(&sum(obj.words.iter().map(|z| sk.assoc_inv(&li, &lj, z)).collect()))
        .then(&sk.tensor(&f, z_id));
    lhs.same_as(&rhs)
}

/// The matrix of a morphism at channel t, with sources and targets
/// concatenated in the given word order.
pub fn assemble(sk: &Skeleton, m: &Mor, srcs: &[Word], tgts: &[Word], t: usize) -> Mat<Scalar> {
    let src_sizes: Vec<usize> = srcs.iter().map(|w| sk.basis(w, t).len()).collect();
    let tgt_sizes: Vec<usize> = tgts.iter().map(|w| sk.basis(w, t).len()).collect();
    let mut out = Mat::zeros(tgt_sizes.iter().sum(), src_sizes.iter().sum());
    let mut c0 = 0;
    for (s, &sn) in srcs.iter().zip(&src_sizes) {
        let mut r0 = 0;
        for (u, &un) in tgts.iter().zip(&tgt_sizes) {
            if let Some(b) = m.block(s, u, t) {
                for i in 0..un {
                    for j in 0..sn {
                        out[(r0 + i, c0 + j)] = b[(i, j)].clone();
                    }
                }
            }
            r0 += un;
        }
        c0 += sn;
    }
    out
}

/// e_z(w) is invertible at every channel.
pub fn invertibility_failures(sk: &Skeleton, obj: &CenterObject) -> Vec<String> {
    let mut bad = vec![];
    for w in 0..sk.rank() {
        let lw = Word::Leaf(w);
        let srcs: Vec<Word> = obj.words.iter().map(|z| Word::pair(z.clone(), lw.clone())).collect();
        let tgts: Vec<Word> = obj.words.iter().map(|z| Word::pair(lw.clone(), z.clone())).collect();
        for t in 0..sk.rank() {
            let m = assemble(sk, &obj.e[w], &srcs, &tgts, t);
            if m.rows() == 0 && m.cols() == 0 {
                continue;
            }
            if m.inverse().is_none() {
                bad.push(format!("e({}) at channel {}", sk.simples[w], sk.simples[t]));
            }
        }
    }
    bad
}

/// Naturality, invertibility and the unit property for one object.
pub fn half_braiding(sk: &Skeleton, obj: &CenterObject) -> Report {
    let mut rep = Report::new();
    let name = &obj.name;
    let bad = naturality_failures(sk, obj);
    rep.check("center", &format!("half-braiding-{name}"), bad.is_empty(), || format!("naturality fails at {}", bad.join(" ")));
    let bad = invertibility_failures(sk, obj);
    rep.check("center", &format!("half-braiding-{name}-invertible"), bad.is_empty(), || bad.join(", "));
    let unit = Mor::sum(obj.words.iter().map(|z| sk.unit_swap(z)).collect::<Vec<_>>().iter());
    rep.check("center", &format!("half-braiding-{name}-unit"), obj.e[0].same_as(&unit), || "e(1) is not the identity".into());
    rep
}

/// Every data-level suite: pentagon, rigidity, completeness, all half-braidings.
pub fn verify_all(cat: &Category, exec: Exec) -> Report {
    let sk = &cat.skeleton;
    let mut rep = pentagon(sk);
    rep.extend(rigidity(sk));
    rep.extend(completeness(sk));
    for r in exec.map(&cat.objects, |o| half_braiding(sk, o)) {
        rep.extend(r);
    }
    rep
}
