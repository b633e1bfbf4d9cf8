//! Skeletal evaluator for the ½E6 fusion category and its Drinfeld center.
//!
//! Words are bracketed tensor products of simples; morphisms are stored on
//! fusion-tree bases, associators are applied explicitly when rebracketing.
//! Half-braidings are read from the bundled data and verified, never solved for.

pub mod morph;
pub mod mutate;
pub mod ops;
pub mod scalar;
pub mod skeleton;
pub mod verify;

use std::collections::HashMap;

use serde_json::Value;

use crate::linalg::{Field, Mat};
use crate::Error;

pub use morph::{Mor, Tree, Word};
pub use scalar::Scalar;
pub use skeleton::Skeleton;

/// One stored coefficient of a half-braiding: the entry [row][col] of the
/// block at `channel` from word (src) to word (dst), for braiding with `w`.
#[derive(Clone, Debug, PartialEq)]
pub struct HbEntry {
    pub w: usize,
    pub src: (usize, usize),
    pub dst: (usize, usize),
    pub channel: usize,
    pub row: usize,
    pub col: usize,
    pub value: Scalar,
}

/// An object (z, e_z) of the center: z is a formal sum of words, e[w] is the
/// half-braiding z⊗w → w⊗z for each simple w.
#[derive(Clone, Debug)]
pub struct CenterObject {
    pub name: String,
    pub words: Vec<Word>,
    pub e: Vec<Mor>,
    /// Source coefficients, when the object was read from data.
    pub entries: Vec<HbEntry>,
}

impl CenterObject {
    /// Build e from stored entries; e(1) is the canonical identification.
    pub fn from_entries(sk: &Skeleton, name: &str, support: &[usize], entries: Vec<HbEntry>) -> CenterObject {
        let words: Vec<Word> = support.iter().map(|&z| Word::Leaf(z)).collect();
        let mut obj = CenterObject { name: name.to_string(), words, e: vec![], entries };
        obj.rebuild(sk);
        obj
    }

    pub fn rebuild(&mut self, sk: &Skeleton) {
        let mut e = vec![Mor::sum(self.words.iter().map(|z| sk.unit_swap(z)).collect::<Vec<_>>().iter())];
        for w in 1..sk.rank() {
            let parts: Vec<Mor> = self
                .entries
                .iter()
                .filter(|h| h.w == w)
                .map(|h| {
                    sk.elementary(
                        &Word::leaves(h.src.0, h.src.1),
                        &Word::leaves(h.dst.0, h.dst.1),
                        h.channel,
                        h.row,
                        h.col,
                        h.value.clone(),
                    )
                })
                .collect();
            e.push(Mor::sum(parts.iter()));
        }
        self.e = e;
    }

    /// Underlying dimension Σ d_z.
    pub fn dim(&self, sk: &Skeleton) -> Scalar {
        self.words.iter().fold(Scalar::zero(), |acc, w| {
            let d = (0..sk.rank()).fold(Scalar::zero(), |a, t| a.add(&sk.dim(t).mul(&Scalar::from_i64(sk.basis(w, t).len() as i64))));
            acc.add(&d)
        })
    }

    /// Σ_z id_z.
    pub fn identity(&self, sk: &Skeleton) -> Mor {
        Mor::sum(self.words.iter().map(|z| sk.identity(z)).collect::<Vec<_>>().iter())
    }
}

/// The fusion category together with the center objects read from data.
#[derive(Clone, Debug)]
pub struct Category {
    pub skeleton: Skeleton,
    pub objects: Vec<CenterObject>,
}

impl Category {
    pub fn from_json_str(s: &str) -> Result<Category, Error> {
        let v: Value = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        Category::from_json(&v)
    }

    pub fn from_json(v: &Value) -> Result<Category, Error> {
        let conductor = v.get("conductor").and_then(Value::as_u64).ok_or_else(|| Error::Parse("missing conductor".into()))?;
        if conductor != scalar::CONDUCTOR as u64 {
            return Err(Error::Data(format!("the evaluator works over conductor {}, got {conductor}", scalar::CONDUCTOR)));
        }
        if let Some(ext) = v.get("extension") {
            let sq = ext.get("square").ok_or_else(|| Error::Parse("extension without square".into()))?;
            let sq = Scalar::from_json(sq)?;
            if sq.to_cyclo().as_ref() != Some(scalar::tau_square()) {
                return Err(Error::Data("only the extension tau^2 = sqrt(3)/2 is supported".into()));
            }
        }
        let simples: Vec<String> = v
            .get("simples")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("missing simples".into()))?
            .iter()
            .map(|x| x.as_str().map(str::to_string).ok_or_else(|| Error::Parse("simple names must be strings".into())))
            .collect::<Result<_, _>>()?;
        if simples.first().map(String::as_str) != Some("1") {
            return Err(Error::Data("the first simple must be the unit \"1\"".into()));
        }
        let idx = |name: &Value| -> Result<usize, Error> {
            let s = name.as_str().ok_or_else(|| Error::Parse(format!("expected a simple name, got {name}")))?;
            simples.iter().position(|x| x == s).ok_or_else(|| Error::UnknownLabel(s.to_string()))
        };
        let r = simples.len();

        let mut table = vec![0usize; r * r * r];
        for a in 0..r {
            table[(a * r) * r + a] = 1;
            table[a * r + a] = 1;
        }
        for item in v.get("fusion").and_then(Value::as_array).ok_or_else(|| Error::Parse("missing fusion".into()))? {
            let item = item.as_array().filter(|a| a.len() == 3).ok_or_else(|| Error::Parse("fusion rows are [a, b, {c: n}]".into()))?;
            let (a, b) = (idx(&item[0])?, idx(&item[1])?);
            let prods = item[2].as_object().ok_or_else(|| Error::Parse("fusion products must be objects".into()))?;
            for (c, n) in prods {
                let c = simples.iter().position(|x| x == c).ok_or_else(|| Error::UnknownLabel(c.clone()))?;
                table[(a * r + b) * r + c] = n.as_u64().ok_or_else(|| Error::Parse("multiplicity must be an integer".into()))? as usize;
            }
        }

        let mut assoc = HashMap::new();
        for item in v.get("associators").and_then(Value::as_array).ok_or_else(|| Error::Parse("missing associators".into()))? {
            let abc = item.get("abc").and_then(Value::as_array).filter(|a| a.len() == 3).ok_or_else(|| Error::Parse("associator needs abc".into()))?;
            let w = idx(item.get("w").ok_or_else(|| Error::Parse("associator needs w".into()))?)?;
            let rows = item.get("matrix").and_then(Value::as_array).ok_or_else(|| Error::Parse("associator needs matrix".into()))?;
            let rows = rows
                .iter()
                .map(|row| {
                    row.as_array()
                        .ok_or_else(|| Error::Parse("matrix rows must be arrays".into()))?
                        .iter()
                        .map(Scalar::from_json)
                        .collect::<Result<Vec<_>, _>>()
                })
                .collect::<Result<Vec<_>, _>>()?;
            if rows.iter().any(|row| row.len() != rows.len()) {
                return Err(Error::Shape("associator matrices must be square".into()));
            }
            assoc.insert([idx(&abc[0])?, idx(&abc[1])?, idx(&abc[2])?, w], Mat::from_rows(rows));
        }

        let rig = v.get("rigidity").and_then(Value::as_object).ok_or_else(|| Error::Parse("missing rigidity".into()))?;
        let mut rigidity = vec![(Scalar::one(), Scalar::one()); r];
        for (name, data) in rig {
            let a = simples.iter().position(|x| x == name).ok_or_else(|| Error::UnknownLabel(name.clone()))?;
            let get = |k: &str| data.get(k).ok_or_else(|| Error::Parse(format!("rigidity of {name} needs {k}"))).and_then(Scalar::from_json);
            rigidity[a] = (get("coev")?, get("ev")?);
        }

        let skeleton = Skeleton::new(simples.clone(), |a, b, c| table[(a * r + b) * r + c], &assoc, rigidity)?;

        let mut objects = vec![];
        for hb in v.get("half_braidings").and_then(Value::as_array).ok_or_else(|| Error::Parse("missing half_braidings".into()))? {
            let name = hb.get("name").and_then(Value::as_str).ok_or_else(|| Error::Parse("half-braiding needs a name".into()))?;
            let support = hb
                .get("support")
                .and_then(Value::as_array)
                .ok_or_else(|| Error::Parse(format!("{name}: missing support")))?
                .iter()
                .map(idx)
                .collect::<Result<Vec<_>, _>>()?;
            let mut entries = vec![];
            if let Some(e) = hb.get("e").and_then(Value::as_object) {
                for (wname, list) in e {
                    let w = simples.iter().position(|x| x == wname).ok_or_else(|| Error::UnknownLabel(wname.clone()))?;
                    for ent in list.as_array().ok_or_else(|| Error::Parse(format!("{name}: e({wname}) must be a list")))? {
                        entries.push(parse_entry(&skeleton, w, ent, &idx).map_err(|e| Error::Parse(format!("{name}: {e}")))?);
                    }
                }
            }
            objects.push(CenterObject::from_entries(&skeleton, name, &support, entries));
        }
        Ok(Category { skeleton, objects })
    }

    pub fn object(&self, name: &str) -> Result<&CenterObject, Error> {
        self.objects.iter().find(|o| o.name == name).ok_or_else(|| Error::UnknownLabel(name.to_string()))
    }

    pub fn names(&self) -> Vec<String> {
        self.objects.iter().map(|o| o.name.clone()).collect()
    }
}

fn parse_entry(
    sk: &Skeleton,
    w: usize,
    ent: &Value,
    idx: &impl Fn(&Value) -> Result<usize, Error>,
) -> Result<HbEntry, Error> {
    let pair = |key: &str| -> Result<(usize, usize), Error> {
        let a = ent.get(key).and_then(Value::as_array).filter(|a| a.len() == 2).ok_or_else(|| Error::Parse(format!("entry needs {key}")))?;
        Ok((idx(&a[0])?, idx(&a[1])?))
    };
    let num = |key: &str| -> Result<usize, Error> {
        ent.get(key).and_then(Value::as_u64).map(|x| x as usize).ok_or_else(|| Error::Parse(format!("entry needs {key}")))
    };
    let src = pair("src")?;
    let dst = pair("dst")?;
    let channel = idx(ent.get("channel").ok_or_else(|| Error::Parse("entry needs channel".into()))?)?;
    let (row, col) = (num("row")?, num("col")?);
    if src.1 != w || dst.0 != w {
        return Err(Error::Data(format!("entry {src:?} -> {dst:?} is not a braiding with {}", sk.simples[w])));
    }
    if row >= sk.n(dst.0, dst.1, channel) || col >= sk.n(src.0, src.1, channel) {
        return Err(Error::Shape(format!("entry index ({row}, {col}) out of range")));
    }
    let value = Scalar::from_json(ent.get("value").ok_or_else(|| Error::Parse("entry needs value".into()))?)?;
    Ok(HbEntry { w, src, dst, channel, row, col, value })
}
