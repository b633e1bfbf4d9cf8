//! Modular data (S̃, T): loading, axiom checks, dimensions, central charge.

use std::cmp::Ordering;
use std::path::Path;

use cyclo::{BigRational, CycloNumber};
use num_bigint::BigInt;
use num_traits::Signed;
use serde_json::{json, Value};

use crate::linalg::Mat;
use crate::report::Report;
use crate::Error;

const SUITE: &str = "moddata";

#[derive(Clone, Debug, PartialEq)]
pub struct ModularData {
    pub labels: Vec<String>,
    pub conductor: u32,
    /// Unnormalized S-matrix s̃, with s̃[0][i] = d_i.
    pub s: Mat<CycloNumber>,
    /// Twists θ_i.
    pub t: Vec<CycloNumber>,
    /// Total quantum order D when supplied by the data file.
    pub d_total: Option<CycloNumber>,
}

fn literal(n: u32, v: &Value, what: &str) -> Result<CycloNumber, Error> {
    CycloNumber::from_literal(n, v).map_err(|e| Error::Data(format!("{what}: {e}")))
}

impl ModularData {
    /// Build from parts, checking shapes and the unitary convention s̃[0][i] > 0.
    pub fn new(
        labels: Vec<String>,
        conductor: u32,
        s: Mat<CycloNumber>,
        t: Vec<CycloNumber>,
        d_total: Option<CycloNumber>,
    ) -> Result<ModularData, Error> {
        let n = labels.len();
        if n == 0 {
            return Err(Error::Shape("no simple objects".into()));
        }
        if s.rows() != n || s.cols() != n || t.len() != n {
            return Err(Error::Shape(format!(
                "{} labels but S is {}x{} and T has {} entries",
                n,
                s.rows(),
                s.cols(),
                t.len()
            )));
        }
        for (i, a) in labels.iter().enumerate() {
            if labels[..i].contains(a) {
                return Err(Error::Data(format!("duplicate label {a}")));
            }
        }
        if !s[(0, 0)].is_one() {
            return Err(Error::Data("s[0][0] must be 1".into()));
        }
        for (j, d) in s.row(0).iter().enumerate() {
            if !d.is_real() || d.real_sign() != Ordering::Greater {
                return Err(Error::Data(format!("s[0][{j}] = {d} is not a positive real dimension")));
            }
        }
        let lift = |x: &CycloNumber, what: &str| {
            x.embed(conductor).map_err(|_| Error::Data(format!("{what} = {x} does not lie in conductor {conductor}")))
        };
        let s = Mat::from_rows(
            s.to_rows().iter().map(|r| r.iter().map(|x| lift(x, "s entry")).collect::<Result<Vec<_>, _>>()).collect::<Result<Vec<_>, _>>()?,
        );
        let t = t.iter().map(|x| lift(x, "twist")).collect::<Result<Vec<_>, _>>()?;
        let d_total = d_total.map(|d| lift(&d, "d_total")).transpose()?;
        Ok(ModularData { labels, conductor, s, t, d_total })
    }

    pub fn from_json(v: &Value) -> Result<ModularData, Error> {
        let n = v["conductor"]
            .as_u64()
            .filter(|&n| n > 0 && n <= u32::MAX as u64)
            .ok_or_else(|| Error::Data("missing or invalid conductor".into()))? as u32;
        let labels: Vec<String> = v["labels"]
            .as_array()
            .ok_or_else(|| Error::Data("missing labels".into()))?
            .iter()
            .map(|l| l.as_str().map(str::to_string).ok_or_else(|| Error::Data("label must be a string".into())))
            .collect::<Result<_, _>>()?;
        let rows = v["s_unnormalized"]
            .as_array()
            .ok_or_else(|| Error::Data("missing s_unnormalized".into()))?;
        let mut s_rows = Vec::with_capacity(rows.len());
        for (i, r) in rows.iter().enumerate() {
            let r = r.as_array().ok_or_else(|| Error::Data(format!("s row {i} is not an array")))?;
            if r.len() != labels.len() {
                return Err(Error::Shape(format!("s row {i} has {} entries, expected {}", r.len(), labels.len())));
            }
            s_rows.push(
                r.iter()
                    .enumerate()
                    .map(|(j, x)| literal(n, x, &format!("s[{i}][{j}]")))
                    .collect::<Result<Vec<_>, _>>()?,
            );
        }
        if s_rows.len() != labels.len() {
            return Err(Error::Shape(format!("s has {} rows, expected {}", s_rows.len(), labels.len())));
        }
        let t = v["t_diag"]
            .as_array()
            .ok_or_else(|| Error::Data("missing t_diag".into()))?
            .iter()
            .enumerate()
            .map(|(i, x)| literal(n, x, &format!("t[{i}]")))
            .collect::<Result<Vec<_>, _>>()?;
        let d_total = match v.get("d_total") {
            None | Some(Value::Null) => None,
            Some(x) => Some(literal(n, x, "d_total")?),
        };
        ModularData::new(labels, n, Mat::from_rows(s_rows), t, d_total)
    }

    pub fn from_json_str(s: &str) -> Result<ModularData, Error> {
        let v: Value = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        ModularData::from_json(&v)
    }

    pub fn load(path: impl AsRef<Path>) -> Result<ModularData, Error> {
        let text = std::fs::read_to_string(path.as_ref())
            .map_err(|e| Error::Io(format!("{}: {e}", path.as_ref().display())))?;
        ModularData::from_json_str(&text)
    }

    /// Canonical JSON serialization (round-trips through `from_json`).
    pub fn to_json(&self) -> Value {
        let n = self.conductor;
        let lit = |x: &CycloNumber| x.embed(n).map(|y| y.to_literal()).unwrap_or_else(|_| x.to_literal());
        let mut v = json!({
            "conductor": n,
            "labels": self.labels,
            "s_unnormalized": self.s.to_rows().iter().map(|r| r.iter().map(lit).collect::<Vec<_>>()).collect::<Vec<_>>(),
            "t_diag": self.t.iter().map(lit).collect::<Vec<_>>(),
        });
        if let Some(d) = &self.d_total {
            v["d_total"] = lit(d);
        }
        v
    }

    /// The rank-1 datum of the trivial category.
    pub fn trivial() -> ModularData {
        let one = CycloNumber::one(1);
        ModularData::new(vec!["1".into()], 1, Mat::from_rows(vec![vec![one.clone()]]), vec![one.clone()], Some(one))
            .expect("trivial datum")
    }

    /// The rank-2 semion datum: s̃ = [[1,1],[1,-1]], T = (1, i).
    pub fn semion() -> ModularData {
        let int = |v| CycloNumber::from_int(8, v);
        ModularData::new(
            vec!["1".into(), "s".into()],
            8,
            Mat::from_rows(vec![vec![int(1), int(1)], vec![int(1), int(-1)]]),
            vec![int(1), CycloNumber::root_of_unity(4, 1)],
            Some(CycloNumber::sqrt_int(2)),
        )
        .expect("semion datum")
    }

    /// Deligne product: s̃ and T are Kronecker products, labels "a*b".
    pub fn product(&self, other: &ModularData) -> ModularData {
        let mut labels = Vec::new();
        let mut t = Vec::new();
        for (a, ta) in self.labels.iter().zip(&self.t) {
            for (b, tb) in other.labels.iter().zip(&other.t) {
                labels.push(if a == "1" && b == "1" { "1".to_string() } else { format!("{a}*{b}") });
                t.push(ta * tb);
            }
        }
        let d_total = match (&self.d_total, &other.d_total) {
            (Some(a), Some(b)) => Some(a * b),
            _ => None,
        };
        let n = num_integer::lcm(self.conductor, other.conductor);
        ModularData::new(labels, n, self.s.kron(&other.s), t, d_total).expect("product of valid data")
    }

    pub fn rank(&self) -> usize {
        self.labels.len()
    }

    pub fn index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn quantum_dims(&self) -> Vec<CycloNumber> {
        self.s.row(0).to_vec()
    }

    /// D² = Σ d_i².
    pub fn global_dim_sq(&self) -> CycloNumber {
        self.s.row(0).iter().fold(CycloNumber::zero(self.conductor), |acc, d| &acc + &(d * d))
    }

    /// D₊ = Σ θ_i d_i².
    pub fn gauss_sum(&self) -> CycloNumber {
        self.s
            .row(0)
            .iter()
            .zip(&self.t)
            .fold(CycloNumber::zero(self.conductor), |acc, (d, t)| &acc + &(&(d * d) * t))
    }

    /// The positive square root D of Σ d_i², exactly.
    pub fn total_quantum_order(&self) -> Result<CycloNumber, Error> {
        let d2 = self.global_dim_sq();
        if let Some(d) = &self.d_total {
            if (d * d) == d2 && d.real_sign() == Ordering::Greater {
                return Ok(d.clone());
            }
            return Err(Error::Data(format!("d_total {d} does not square to the global dimension {d2}")));
        }
        d2.sqrt_exact()
            .ok_or_else(|| Error::NotExpressible(format!("sqrt({d2}) not found in conductor {}", d2.conductor())))
    }

    /// Normalized S = s̃/D.
    pub fn s_normalized(&self) -> Result<Mat<CycloNumber>, Error> {
        let dinv = self.total_quantum_order()?.inv().map_err(|e| Error::Data(e.to_string()))?;
        Ok(self.s.scale(&dinv))
    }

    pub fn t_matrix(&self) -> Mat<CycloNumber> {
        Mat::diagonal(&self.t)
    }

    /// c modulo 8 from D₊/D = e^{πic/4}, as a rational in [0, 8).
    pub fn central_charge(&self) -> Result<BigRational, Error> {
        let dplus = self.gauss_sum();
        let (k, m) = match self.total_quantum_order() {
            Ok(d) => {
                let lambda = dplus.checked_div(&d).map_err(|e| Error::Data(e.to_string()))?;
                lambda
                    .root_of_unity_exponent()
                    .ok_or_else(|| Error::Data(format!("D+/D = {lambda} is not a root of unity")))?
            }
            Err(_) => {
                // only λ² = D₊²/D² is available; pick the square root numerically
                let l2 = (&dplus * &dplus).checked_div(&self.global_dim_sq()).map_err(|e| Error::Data(e.to_string()))?;
                let (k2, m2) = l2
                    .root_of_unity_exponent()
                    .ok_or_else(|| Error::Data(format!("(D+/D)^2 = {l2} is not a root of unity")))?;
                let z = dplus.to_c64() / self.global_dim_sq().to_c64().sqrt();
                let cand = |k: u32| {
                    let a = 2.0 * std::f64::consts::PI * k as f64 / (2 * m2) as f64;
                    (z.re - a.cos()).abs() + (z.im - a.sin()).abs()
                };
                let k = if cand(k2) <= cand(k2 + m2) { k2 } else { k2 + m2 };
                let g = num_integer::gcd(k, 2 * m2);
                (k / g, 2 * m2 / g)
            }
        };
        // e^{2πik/m} = e^{πic/4}  =>  c = 8k/m
        let c = BigRational::new(BigInt::from(8 * k), BigInt::from(m));
        let eight = BigRational::from_integer(8.into());
        let mut c = c % &eight;
        if c.is_negative() {
            c += eight;
        }
        Ok(c)
    }

    /// C from s̃² = D²·C.
    pub fn charge_conjugation(&self) -> Result<Vec<usize>, Error> {
        let d2 = self.global_dim_sq();
        let s2 = self.s.mul(&self.s);
        let mut perm = Vec::with_capacity(self.rank());
        for i in 0..self.rank() {
            let row = s2.row(i);
            let nz: Vec<usize> = (0..row.len()).filter(|&j| !row[j].is_zero()).collect();
            if nz.len() != 1 || row[nz[0]] != d2 {
                return Err(Error::Data(format!("row {i} of S^2 is not a permutation row")));
            }
            perm.push(nz[0]);
        }
        Ok(perm)
    }

    /// (number of self-dual simples, number of dual pairs).
    pub fn self_duality(&self) -> Result<(usize, usize), Error> {
        let c = self.charge_conjugation()?;
        let fixed = c.iter().enumerate().filter(|(i, &j)| *i == j).count();
        Ok((fixed, (c.len() - fixed) / 2))
    }

    /// All modular-data axioms, each recorded with a witness on failure.
    pub fn validate(&self) -> Report {
        let mut r = Report::new();
        let n = self.rank();
        let s = &self.s;
        let d2 = self.global_dim_sq();

        let asym = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).find(|&(i, j)| s[(i, j)] != s[(j, i)]);
        r.check(SUITE, "s-symmetric", asym.is_none(), || format!("s[{:?}] != s[transpose]", asym.unwrap()));

        let unit = s.mul(&s.adjoint());
        let bad = (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).find(|&(i, j)| {
            let want = if i == j { d2.clone() } else { CycloNumber::zero(1) };
            unit[(i, j)] != want
        });
        r.check(SUITE, "s-unitary", bad.is_none(), || {
            let (i, j) = bad.unwrap();
            format!("(s s^H)[{i}][{j}] = {}", unit[(i, j)])
        });

        let conj = self.charge_conjugation();
        let conj_ok = match &conj {
            Ok(c) => c[0] == 0 && (0..n).all(|i| c[c[i]] == i),
            Err(_) => false,
        };
        r.check(SUITE, "s-squared-charge-conjugation", conj_ok, || match &conj {
            Ok(c) => format!("C = {c:?} is not an involution fixing the unit"),
            Err(e) => e.to_string(),
        });

        let bad_t = self.t.iter().position(|t| t.root_of_unity_order().is_none());
        r.check(SUITE, "twists-roots-of-unity", bad_t.is_none(), || {
            format!("theta[{}] = {}", bad_t.unwrap(), self.t[bad_t.unwrap()])
        });
        r.check(SUITE, "unit-twist", self.t[0].is_one(), || format!("theta[0] = {}", self.t[0]));

        // (s̃T)³ = D₊·s̃², which is (ST)³ = (D₊/D)·S² after normalizing
        let st = s.mul(&self.t_matrix());
        let lhs = st.mul(&st).mul(&st);
        let dplus = self.gauss_sum();
        let rhs = s.mul(s).scale(&dplus);
        r.check(SUITE, "st-cubed-projective", lhs == rhs, || "(sT)^3 != D+ s^2".into());

        match self.total_quantum_order() {
            Ok(d) => {
                let lambda = &dplus / &d;
                let ok = lambda.root_of_unity_order().is_some();
                r.note(SUITE, "gauss-sum-root-of-unity", ok, format!("D+/D = {lambda}"));
                r.note(SUITE, "total-quantum-order", true, format!("D = {d} ~ {:.6}", d.to_c64().re));
            }
            Err(e) => r.push(SUITE, "total-quantum-order", crate::report::Status::Undetermined, e.to_string()),
        }
        match self.central_charge() {
            Ok(c) => r.note(SUITE, "central-charge", true, format!("c = {c} mod 8")),
            Err(e) => r.push(SUITE, "central-charge", crate::report::Status::Fail, e.to_string()),
        }
        r
    }

    /// Whether (ST)³ = S² holds on the nose, i.e. D₊ = D.
    pub fn st_cubed_equals_s_squared(&self) -> Result<bool, Error> {
        let s = self.s_normalized()?;
        let st = s.mul(&self.t_matrix());
        Ok(st.mul(&st).mul(&st) == s.mul(&s))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn trivial_datum_passes() {
        let md = ModularData::trivial();
        assert!(md.validate().passed());
        assert!(md.total_quantum_order().unwrap().is_one());
        assert!(md.central_charge().unwrap().is_zero());
        assert_eq!(md.charge_conjugation().unwrap(), vec![0]);
    }

    #[test]
    fn semion_has_central_charge_one() {
        let md = ModularData::semion();
        let rep = md.validate();
        assert!(rep.passed(), "{rep}");
        assert_eq!(md.central_charge().unwrap(), BigRational::from_integer(1.into()));
    }

    #[test]
    fn rejects_nonpositive_dimension() {
        let int = |v| CycloNumber::from_int(1, v);
        let bad = ModularData::new(
            vec!["1".into(), "a".into()],
            1,
            Mat::from_rows(vec![vec![int(1), int(-1)], vec![int(-1), int(1)]]),
            vec![int(1), int(1)],
            None,
        );
        assert!(bad.is_err());
    }

    #[test]
    fn broken_twist_is_reported() {
        let mut md = ModularData::semion();
        md.t[1] = CycloNumber::from_int(8, 2);
        let rep = md.validate();
        assert!(!rep.passed());
        assert_eq!(rep.get("twists-roots-of-unity").unwrap().status, crate::report::Status::Fail);
    }

    #[test]
    fn json_round_trip() {
        let md = ModularData::semion();
        let back = ModularData::from_json(&md.to_json()).unwrap();
        assert_eq!(back, md);
    }

    #[test]
    fn product_of_semions() {
        let p = ModularData::semion().product(&ModularData::semion());
        assert_eq!(p.rank(), 4);
        assert!(p.validate().passed());
        assert_eq!(p.central_charge().unwrap(), BigRational::from_integer(2.into()));
    }
}
