//! A skeletal fusion category given by fusion multiplicities, associator
//! matrices and rigidity scalars, with tree-basis morphism operations.

use std::collections::HashMap;
use std::sync::{Arc, RwLock};

use crate::linalg::{Field, Mat};
use crate::Error;

use super::morph::{Mor, Tree, Word};
use super::scalar::Scalar;

/// Splitting-tree triples: (e, i, j) for ((ab)_e c)_w and (f, k, l) for (a(bc)_f)_w.
pub type Triple = (usize, usize, usize);

#[derive(Clone, Debug)]
pub struct FBlock {
    pub left: Vec<Triple>,
    pub right: Vec<Triple>,
    left_index: HashMap<Triple, usize>,
    right_index: HashMap<Triple, usize>,
    /// Rows: right basis; columns: left basis.
    pub f: Mat<Scalar>,
    pub finv: Mat<Scalar>,
}

#[derive(Debug)]
pub struct Basis {
    pub trees: Vec<Tree>,
    index: HashMap<Tree, usize>,
}

impl Basis {
    pub fn len(&self) -> usize {
        self.trees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.trees.is_empty()
    }

    pub fn position(&self, t: &Tree) -> usize {
        self.index[t]
    }
}

#[derive(Debug)]
pub struct Skeleton {
    pub simples: Vec<String>,
    /// N[a][b][c], flattened.
    fusion: Vec<usize>,
    pub blocks: HashMap<[usize; 4], FBlock>,
    /// (coev, ev) scalars for each simple: coev = β·v^{aa}_1, ev = δ·v^1_{aa}.
    pub rigidity: Vec<(Scalar, Scalar)>,
    /// Index of the dual of each simple.
    pub dual: Vec<usize>,
    cache: RwLock<HashMap<(Word, usize), Arc<Basis>>>,
}

impl Clone for Skeleton {
    fn clone(&self) -> Skeleton {
        Skeleton {
            simples: self.simples.clone(),
            fusion: self.fusion.clone(),
            blocks: self.blocks.clone(),
            rigidity: self.rigidity.clone(),
            dual: self.dual.clone(),
            cache: RwLock::new(HashMap::new()),
        }
    }
}

impl Skeleton {
    /// `fusion(a, b, c)` gives N_{ab}^c; `assoc` maps non-unit (a, b, c, w) to
    /// the matrix in the (right, left) basis convention. Unit entries are identities.
    pub fn new(
        simples: Vec<String>,
        fusion: impl Fn(usize, usize, usize) -> usize,
        assoc: &HashMap<[usize; 4], Mat<Scalar>>,
        rigidity: Vec<(Scalar, Scalar)>,
    ) -> Result<Skeleton, Error> {
        let r = simples.len();
        let mut table = vec![0; r * r * r];
        for a in 0..r {
            for b in 0..r {
                for c in 0..r {
                    table[(a * r + b) * r + c] = fusion(a, b, c);
                }
            }
        }
        let dual = (0..r)
            .map(|a| (0..r).find(|&b| table[(a * r + b) * r] == 1).ok_or_else(|| Error::Data(format!("{} has no dual", simples[a]))))
            .collect::<Result<Vec<_>, _>>()?;
        let mut sk = Skeleton { simples, fusion: table, blocks: HashMap::new(), rigidity, dual, cache: RwLock::new(HashMap::new()) };
        for a in 0..r {
            for b in 0..r {
                for c in 0..r {
                    for w in 0..r {
                        let left = sk.left_basis(a, b, c, w);
                        if left.is_empty() {
                            continue;
                        }
                        let right = sk.right_basis(a, b, c, w);
                        if right.len() != left.len() {
                            return Err(Error::Data(format!("fusion is not associative at ({a},{b},{c};{w})")));
                        }
                        let f = if a == 0 || b == 0 || c == 0 {
                            unit_block(a, b, c, w, &left, &right)
                        } else {
                            let m = assoc.get(&[a, b, c, w]).ok_or_else(|| {
                                Error::Data(format!("missing associator for {:?}", sk.names(&[a, b, c, w])))
                            })?;
                            if m.rows() != right.len() || m.cols() != left.len() {
                                return Err(Error::Shape(format!("associator {:?} has wrong shape", sk.names(&[a, b, c, w]))));
                            }
                            m.clone()
                        };
                        let finv = f.inverse().ok_or_else(|| Error::Data(format!("associator {:?} is singular", sk.names(&[a, b, c, w]))))?;
                        let left_index = left.iter().enumerate().map(|(i, x)| (*x, i)).collect();
                        let right_index = right.iter().enumerate().map(|(i, x)| (*x, i)).collect();
                        sk.blocks.insert([a, b, c, w], FBlock { left, right, left_index, right_index, f, finv });
                    }
                }
            }
        }
        Ok(sk)
    }

    pub fn rank(&self) -> usize {
        self.simples.len()
    }

    pub fn names(&self, idx: &[usize]) -> Vec<String> {
        idx.iter().map(|&i| self.simples[i].clone()).collect()
    }

    pub fn index(&self, name: &str) -> Option<usize> {
        self.simples.iter().position(|s| s == name)
    }

    pub fn n(&self, a: usize, b: usize, c: usize) -> usize {
        let r = self.rank();
        self.fusion[(a * r + b) * r + c]
    }

    pub fn left_basis(&self, a: usize, b: usize, c: usize, w: usize) -> Vec<Triple> {
        let mut v = vec![];
        for e in 0..self.rank() {
            for i in 0..self.n(a, b, e) {
                for j in 0..self.n(e, c, w) {
                    v.push((e, i, j));
                }
            }
        }
        v
    }

    pub fn right_basis(&self, a: usize, b: usize, c: usize, w: usize) -> Vec<Triple> {
        let mut v = vec![];
        for f in 0..self.rank() {
            for k in 0..self.n(b, c, f) {
                for l in 0..self.n(a, f, w) {
                    v.push((f, k, l));
                }
            }
        }
        v
    }

    pub fn f_block(&self, key: [usize; 4]) -> Option<&FBlock> {
        self.blocks.get(&key)
    }

    /// Replace one associator entry and refresh its inverse.
    pub fn set_assoc_entry(&mut self, key: [usize; 4], row: usize, col: usize, v: Scalar) -> Result<(), Error> {
        let b = self.blocks.get_mut(&key).ok_or_else(|| Error::Data("no such associator".into()))?;
        b.f[(row, col)] = v;
        b.finv = b.f.inverse().ok_or_else(|| Error::Data("mutated associator is singular".into()))?;
        Ok(())
    }

    /// Quantum dimension d_a = ev_a ∘ coev_a.
    pub fn dim(&self, a: usize) -> Scalar {
        let (coev, ev) = &self.rigidity[a];
        coev.mul(ev)
    }

    pub fn global_dim(&self) -> Scalar {
        (0..self.rank()).fold(Scalar::zero(), |acc, a| {
            let d = self.dim(a);
            acc.add(&d.mul(&d))
        })
    }

    pub fn basis(&self, w: &Word, t: usize) -> Arc<Basis> {
        let key = (w.clone(), t);
        if let Some(b) = self.cache.read().unwrap().get(&key) {
            return b.clone();
        }
        let trees: Vec<Tree> = match w {
            Word::Leaf(a) => {
                if *a == t {
                    vec![Tree::Leaf]
                } else {
                    vec![]
                }
            }
            Word::Node(l, r) => {
                let mut v = vec![];
                for e1 in 0..self.rank() {
                    let bl = self.basis(l, e1);
                    if bl.is_empty() {
                        continue;
                    }
                    for b1 in &bl.trees {
                        for e2 in 0..self.rank() {
                            let mult = self.n(e1, e2, t);
                            if mult == 0 {
                                continue;
                            }
                            let br = self.basis(r, e2);
                            for b2 in &br.trees {
                                for m in 0..mult {
                                    v.push(Tree::Node { e1, b1: Box::new(b1.clone()), e2, b2: Box::new(b2.clone()), m });
                                }
                            }
                        }
                    }
                }
                v
            }
        };
        let index = trees.iter().enumerate().map(|(i, x)| (x.clone(), i)).collect();
        let b = Arc::new(Basis { trees, index });
        self.cache.write().unwrap().insert(key, b.clone());
        b
    }

    pub fn identity(&self, w: &Word) -> Mor {
        let mut m = Mor::new();
        for t in 0..self.rank() {
            let n = self.basis(w, t).len();
            if n > 0 {
                m.add_block(w.clone(), w.clone(), t, Mat::identity(n));
            }
        }
        m
    }

    /// The morphism with a single coefficient: row `k` of Hom(t, tgt) against
    /// column `j` of Hom(t, src).
    pub fn elementary(&self, src: &Word, tgt: &Word, t: usize, k: usize, j: usize, coef: Scalar) -> Mor {
        let mut mat = Mat::zeros(self.basis(tgt, t).len(), self.basis(src, t).len());
        mat[(k, j)] = coef;
        let mut m = Mor::new();
        m.add_block(src.clone(), tgt.clone(), t, mat);
        m
    }

    /// The canonical identification z⊗1 → 1⊗z.
    pub fn unit_swap(&self, z: &Word) -> Mor {
        let src = Word::pair(z.clone(), Word::Leaf(0));
        let tgt = Word::pair(Word::Leaf(0), z.clone());
        let mut m = Mor::new();
        for t in 0..self.rank() {
            let n = self.basis(z, t).len();
            if n > 0 {
                m.add_block(src.clone(), tgt.clone(), t, Mat::identity(n));
            }
        }
        m
    }

    pub fn tensor(&self, f: &Mor, g: &Mor) -> Mor {
        let mut out = Mor::new();
        for ((a1, b1), fb) in &f.blocks {
            for ((a2, b2), gb) in &g.blocks {
                let src = Word::pair(a1.clone(), a2.clone());
                let tgt = Word::pair(b1.clone(), b2.clone());
                for t in 0..self.rank() {
                    let bs = self.basis(&src, t);
                    let bt = self.basis(&tgt, t);
                    if bs.is_empty() || bt.is_empty() {
                        continue;
                    }
                    let mut mat: Mat<Scalar> = Mat::zeros(bt.len(), bs.len());
                    let mut any = false;
                    for (si, tree) in bs.trees.iter().enumerate() {
                        let Tree::Node { e1, b1: t1, e2, b2: t2, m } = tree else { unreachable!() };
                        let (Some(f1), Some(g2)) = (fb.get(e1), gb.get(e2)) else { continue };
                        let i1 = self.basis(a1, *e1).position(t1);
                        let i2 = self.basis(a2, *e2).position(t2);
                        let out1 = self.basis(b1, *e1);
                        let out2 = self.basis(b2, *e2);
                        for o1 in 0..f1.rows() {
                            let c1 = &f1[(o1, i1)];
                            if c1.is_zero() {
                                continue;
                            }
                            for o2 in 0..g2.rows() {
                                let c2 = &g2[(o2, i2)];
                                if c2.is_zero() {
                                    continue;
                                }
                                let target = Tree::Node {
                                    e1: *e1,
                                    b1: Box::new(out1.trees[o1].clone()),
                                    e2: *e2,
                                    b2: Box::new(out2.trees[o2].clone()),
                                    m: *m,
                                };
                                let ti = bt.position(&target);
                                mat[(ti, si)] = mat[(ti, si)].add(&c1.mul(c2));
                                any = true;
                            }
                        }
                    }
                    if any {
                        out.add_block(src.clone(), tgt.clone(), t, mat);
                    }
                }
            }
        }
        out
    }

    /// α_{A,B,C}: (A⊗B)⊗C → A⊗(B⊗C).
    pub fn assoc(&self, a: &Word, b: &Word, c: &Word) -> Mor {
        let src = Word::pair(Word::pair(a.clone(), b.clone()), c.clone());
        let tgt = Word::pair(a.clone(), Word::pair(b.clone(), c.clone()));
        let mut out = Mor::new();
        for t in 0..self.rank() {
            let bs = self.basis(&src, t);
            if bs.is_empty() {
                continue;
            }
            let bt = self.basis(&tgt, t);
            let mut mat = Mat::zeros(bt.len(), bs.len());
            for (si, tree) in bs.trees.iter().enumerate() {
                let Tree::Node { e1: eab, b1: bab, e2: ec, b2: bc, m: j } = tree else { unreachable!() };
                let Tree::Node { e1: ea, b1: ba, e2: eb, b2: bb, m: i } = bab.as_ref() else { unreachable!() };
                let blk = &self.blocks[&[*ea, *eb, *ec, t]];
                let col = blk.left_index[&(*eab, *i, *j)];
                for (ri, &(f, k, l)) in blk.right.iter().enumerate() {
                    let coef = &blk.f[(ri, col)];
                    if coef.is_zero() {
                        continue;
                    }
                    let target = Tree::Node {
                        e1: *ea,
                        b1: ba.clone(),
                        e2: f,
                        b2: Box::new(Tree::Node { e1: *eb, b1: bb.clone(), e2: *ec, b2: bc.clone(), m: k }),
                        m: l,
                    };
                    mat[(bt.position(&target), si)] = coef.clone();
                }
            }
            out.add_block(src.clone(), tgt.clone(), t, mat);
        }
        out
    }

    /// α⁻¹_{A,B,C}: A⊗(B⊗C) → (A⊗B)⊗C.
    pub fn assoc_inv(&self, a: &Word, b: &Word, c: &Word) -> Mor {
        let src = Word::pair(a.clone(), Word::pair(b.clone(), c.clone()));
        let tgt = Word::pair(Word::pair(a.clone(), b.clone()), c.clone());
        let mut out = Mor::new();
        for t in 0..self.rank() {
            let bs = self.basis(&src, t);
            if bs.is_empty() {
                continue;
            }
            let bt = self.basis(&tgt, t);
            let mut mat = Mat::zeros(bt.len(), bs.len());
            for (si, tree) in bs.trees.iter().enumerate() {
                let Tree::Node { e1: ea, b1: ba, e2: f, b2: bbc, m: l } = tree else { unreachable!() };
                let Tree::Node { e1: eb, b1: bb, e2: ec, b2: bc, m: k } = bbc.as_ref() else { unreachable!() };
                let blk = &self.blocks[&[*ea, *eb, *ec, t]];
                let col = blk.right_index[&(*f, *k, *l)];
                for (li, &(e, i, j)) in blk.left.iter().enumerate() {
                    let coef = &blk.finv[(li, col)];
                    if coef.is_zero() {
                        continue;
                    }
                    let target = Tree::Node {
                        e1: e,
                        b1: Box::new(Tree::Node { e1: *ea, b1: ba.clone(), e2: *eb, b2: bb.clone(), m: i }),
                        e2: *ec,
                        b2: bc.clone(),
                        m: j,
                    };
                    mat[(bt.position(&target), si)] = coef.clone();
                }
            }
            out.add_block(src.clone(), tgt.clone(), t, mat);
        }
        out
    }

    /// Spherical trace of an endomorphism: Σ over diagonal blocks of d_t·tr.
    pub fn trace(&self, m: &Mor) -> Scalar {
        let mut acc = Scalar::zero();
        for ((s, t), d) in &m.blocks {
            if s != t {
                continue;
            }
            for (c, mat) in d {
                acc = acc.add(&self.dim(*c).mul(&mat.trace()));
            }
        }
        acc
    }

    /// coev_a: 1 → a*⊗a and ev_a: a⊗a* → 1 (self-dual simples only).
    pub fn coev(&self, a: usize) -> Mor {
        let ad = self.dual[a];
        self.elementary(&Word::Leaf(0), &Word::leaves(ad, a), 0, 0, 0, self.rigidity[a].0.clone())
    }

    pub fn ev(&self, a: usize) -> Mor {
        let ad = self.dual[a];
        self.elementary(&Word::leaves(a, ad), &Word::Leaf(0), 0, 0, 0, self.rigidity[a].1.clone())
    }
}

/// Associators with a unit entry: the natural identification of trees.
fn unit_block(a: usize, b: usize, _c: usize, w: usize, left: &[Triple], right: &[Triple]) -> Mat<Scalar> {
    let mut m = Mat::zeros(right.len(), left.len());
    for (li, &(_e, i, j)) in left.iter().enumerate() {
        for (ri, &(f, k, l)) in right.iter().enumerate() {
            let hit = if a == 0 {
                f == w && k == j
            } else if b == 0 {
                l == j
            } else {
                l == i
            };
            if hit {
                m[(ri, li)] = Scalar::one();
            }
        }
    }
    m
}
