//! Words (parenthesized tensor products of simples), their fusion-tree bases,
//! and morphisms stored blockwise by (source word, target word, channel).

use std::collections::BTreeMap;
use std::fmt;

use crate::linalg::{Field, Mat};

use super::scalar::Scalar;

/// A parenthesized tensor word; leaves are simple indices.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Word {
    Leaf(usize),
    Node(Box<Word>, Box<Word>),
}

impl Word {
    pub fn pair(a: Word, b: Word) -> Word {
        Word::Node(Box::new(a), Box::new(b))
    }

    pub fn leaves(a: usize, b: usize) -> Word {
        Word::pair(Word::Leaf(a), Word::Leaf(b))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Word::Leaf(a) => write!(f, "{a}"),
            Word::Node(a, b) => write!(f, "({a:?} {b:?})"),
        }
    }
}

/// A fusion-tree basis vector of Hom(t, W) for a word W.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tree {
    Leaf,
    Node { e1: usize, b1: Box<Tree>, e2: usize, b2: Box<Tree>, m: usize },
}

/// Blocks keyed by (source, target); each maps a channel to a matrix with
/// rows indexed by the target basis and columns by the source basis.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Mor {
    pub blocks: BTreeMap<(Word, Word), BTreeMap<usize, Mat<Scalar>>>,
}

impl Mor {
    pub fn new() -> Mor {
        Mor::default()
    }

    pub fn add_block(&mut self, src: Word, tgt: Word, channel: usize, m: Mat<Scalar>) {
        let slot = self.blocks.entry((src, tgt)).or_default();
        match slot.get_mut(&channel) {
            Some(old) => *old = old.add(&m),
            None => {
                slot.insert(channel, m);
            }
        }
    }

    pub fn add(&self, o: &Mor) -> Mor {
        let mut r = self.clone();
        for ((s, t), d) in &o.blocks {
            for (c, m) in d {
                r.add_block(s.clone(), t.clone(), *c, m.clone());
            }
        }
        r
    }

    pub fn sum<'a>(ms: impl IntoIterator<Item = &'a Mor>) -> Mor {
        let mut r = Mor::new();
        for m in ms {
            for ((s, t), d) in &m.blocks {
                for (c, b) in d {
                    r.add_block(s.clone(), t.clone(), *c, b.clone());
                }
            }
        }
        r
    }

    pub fn scale(&self, k: &Scalar) -> Mor {
        let mut r = self.clone();
        for d in r.blocks.values_mut() {
            for m in d.values_mut() {
                *m = m.scale(k);
            }
        }
        r
    }

    pub fn sub(&self, o: &Mor) -> Mor {
        self.add(&o.scale(&Scalar::from_i64(-1)))
    }

    /// g ∘ self.
    pub fn then(&self, g: &Mor) -> Mor {
        let mut r = Mor::new();
        for ((a, b), fb) in &self.blocks {
            for ((b2, c), gb) in g.blocks.range((b.clone(), Word::Leaf(0))..) {
                if b2 != b {
                    break;
                }
                for (t, fm) in fb {
                    if let Some(gm) = gb.get(t) {
                        r.add_block(a.clone(), c.clone(), *t, gm.mul(fm));
                    }
                }
            }
        }
        r
    }

    pub fn is_zero(&self) -> bool {
        self.blocks.values().all(|d| d.values().all(|m| m.is_zero()))
    }

    /// Exact equality treating missing blocks as zero.
    pub fn same_as(&self, o: &Mor) -> bool {
        self.sub(o).is_zero()
    }

    /// Every (source, target, channel) key with its matrix shape.
    pub fn keys(&self) -> Vec<(Word, Word, usize)> {
        let mut v = vec![];
        for ((s, t), d) in &self.blocks {
            for c in d.keys() {
                v.push((s.clone(), t.clone(), *c));
            }
        }
        v
    }

    pub fn block(&self, s: &Word, t: &Word, c: usize) -> Option<&Mat<Scalar>> {
        self.blocks.get(&(s.clone(), t.clone())).and_then(|d| d.get(&c))
    }

    pub fn count_nonzero(&self) -> usize {
        self.blocks
            .values()
            .flat_map(|d| d.values())
            .map(|m| m.to_rows().iter().flatten().filter(|x| !x.is_zero()).count())
            .sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn one_by_one(v: i64) -> Mat<Scalar> {
        Mat::from_rows(vec![vec![Scalar::from_i64(v)]])
    }

    #[test]
    fn compose_matches_blocks() {
        let a = Word::Leaf(0);
        let b = Word::Leaf(1);
        let mut f = Mor::new();
        f.add_block(a.clone(), b.clone(), 0, one_by_one(2));
        let mut g = Mor::new();
        g.add_block(b.clone(), a.clone(), 0, one_by_one(3));
        let h = f.then(&g);
        assert_eq!(h.block(&a, &a, 0).unwrap(), &one_by_one(6));
        assert!(g.then(&g).is_zero());
    }

    #[test]
    fn add_and_subtract() {
        let a = Word::Leaf(2);
        let mut f = Mor::new();
        f.add_block(a.clone(), a.clone(), 2, one_by_one(5));
        assert!(f.sub(&f).is_zero());
        assert!(f.add(&f).same_as(&f.scale(&Scalar::from_i64(2))));
        assert_eq!(f.count_nonzero(), 1);
    }
}
