//! Single-entry perturbations of the category data, for checking that the
//! verification suites actually detect corrupted input.

use cyclo::CycloNumber;

use crate::linalg::Field;
use crate::Error;

use super::scalar::Scalar;
use super::{verify, Category};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Site {
    /// Entry (row, col) of the associator block for (a, b, c; w).
    Associator { key: [usize; 4], row: usize, col: usize },
    /// A stored coefficient of a half-braiding.
    HalfBraiding { object: usize, entry: usize },
}

/// Every nonzero associator entry on non-unit triples and every nonzero
/// stored half-braiding coefficient. Scaling a zero entry changes nothing.
pub fn sites(cat: &Category) -> Vec<Site> {
    let sk = &cat.skeleton;
    let mut keys: Vec<&[usize; 4]> = sk.blocks.keys().filter(|k| k[..3].iter().all(|&x| x != 0)).collect();
    keys.sort();
    let mut out = vec![];
    for key in keys {
        let f = &sk.blocks[key].f;
        for row in 0..f.rows() {
            for col in 0..f.cols() {
                if !f[(row, col)].is_zero() {
                    out.push(Site::Associator { key: *key, row, col });
                }
            }
        }
    }
    for (object, o) in cat.objects.iter().enumerate() {
        for (entry, h) in o.entries.iter().enumerate() {
            if !h.value.is_zero() {
                out.push(Site::HalfBraiding { object, entry });
            }
        }
    }
    out
}

/// Multiply the entry at `site` by ζ24^k.
pub fn apply(cat: &Category, site: &Site, k: i64) -> Result<Category, Error> {
    let factor = Scalar::from_cyclo(CycloNumber::root_of_unity(24, k));
    let mut out = cat.clone();
    match site {
        Site::Associator { key, row, col } => {
            let v = out.skeleton.blocks[key].f[(*row, *col)].mul(&factor);
            out.skeleton.set_assoc_entry(*key, *row, *col, v)?;
            for o in &mut out.objects {
                o.rebuild(&out.skeleton);
            }
        }
        Site::HalfBraiding { object, entry } => {
            let obj = &mut out.objects[*object];
            obj.entries[*entry].value = obj.entries[*entry].value.mul(&factor);
            obj.rebuild(&out.skeleton);
        }
    }
    Ok(out)
}

/// The first suite that fails, running the cheap ones first.
pub fn detected_by(cat: &Category) -> Option<String> {
    let sk = &cat.skeleton;
    if !verify::pentagon(sk).passed() {
        return Some("pentagon".into());
    }
    if !verify::rigidity(sk).passed() {
        return Some("rigidity".into());
    }
    for o in &cat.objects {
        if !verify::naturality_failures(sk, o).is_empty() || !verify::invertibility_failures(sk, o).is_empty() {
            return Some(format!("half-braiding-{}", o.name));
        }
    }
    None
}

/// Apply a mutation and name the suite that catches it ("singular" when the
/// mutated associator is not invertible).
pub fn run(cat: &Category, site: &Site, k: i64) -> Option<String> {
    match apply(cat, site, k) {
        Ok(m) => detected_by(&m),
        Err(_) => Some("associator-invertible".into()),
    }
}

pub fn describe(cat: &Category, site: &Site) -> String {
    let sk = &cat.skeleton;
    match site {
        Site::Associator { key, row, col } => format!("a[{}][{row},{col}]", sk.names(key).join(",")),
        Site::HalfBraiding { object, entry } => {
            let o = &cat.objects[*object];
            let h = &o.entries[*entry];
            format!(
                "e_{}({}) {}{}->{}{} @{} [{},{}]",
                o.name,
                sk.simples[h.w],
                sk.simples[h.src.0],
                sk.simples[h.src.1],
                sk.simples[h.dst.0],
                sk.simples[h.dst.1],
                sk.simples[h.channel],
                h.row,
                h.col
            )
        }
    }
}
