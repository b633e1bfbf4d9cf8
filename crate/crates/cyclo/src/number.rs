use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::Arc;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::field::{content_gcd, field, Field};
use crate::CycloError;

/// An exact element of Q(ζ_N), stored as Σ (num_j / den) ζ_N^j over the
/// power basis j < φ(N), reduced modulo Φ_N.
///
/// The representation is canonical: `den > 0` and the content of `num`
/// is coprime to `den`. Values of different conductors are compared by
/// embedding both into the lcm conductor.
#[derive(Clone)]
pub struct CycloNumber {
    field: Arc<Field>,
    num: Vec<BigInt>,
    den: BigInt,
}

impl CycloNumber {
    fn from_parts(field: Arc<Field>, num: Vec<BigInt>, den: BigInt) -> CycloNumber {
        let mut out = CycloNumber { field, num, den };
        out.normalize();
        out
    }

    fn normalize(&mut self) {
        if self.den.is_negative() {
            self.den = -std::mem::take(&mut self.den);
            for c in &mut self.num {
                *c = -std::mem::take(c);
            }
        }
        if self.num.iter().all(|c| c.is_zero()) {
            self.den = BigInt::one();
            return;
        }
        if self.den.is_one() {
            return;
        }
        let g = content_gcd(&self.den, self.num.iter());
        if !g.is_one() {
            for c in &mut self.num {
                *c /= &g;
            }
            self.den /= &g;
        }
    }

    /// Accumulate an unreduced coefficient vector (indices may exceed φ) into canonical form.
    fn from_unreduced(field: Arc<Field>, mut acc: Vec<BigInt>, den: BigInt) -> CycloNumber {
        let phi = field.phi;
        if acc.len() > phi {
            let (low, high) = acc.split_at_mut(phi);
            for (offset, c) in high.iter_mut().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let c = std::mem::take(c);
                let pw = field.power((phi + offset) as i64);
                for (t, p) in pw.iter().enumerate() {
                    if *p != 0 {
                        low[t] += &c * *p;
                    }
                }
            }
            acc.truncate(phi);
        }
        CycloNumber::from_parts(field, acc, den)
    }

    pub fn zero(n: u32) -> CycloNumber {
        let f = field(n);
        let phi = f.phi;
        CycloNumber {
            field: f,
            num: vec![BigInt::zero(); phi],
            den: BigInt::one(),
        }
    }

    pub fn one(n: u32) -> CycloNumber {
        CycloNumber::from_int(n, 1)
    }

    pub fn from_int(n: u32, v: i64) -> CycloNumber {
        CycloNumber::from_rational(n, &BigRational::from_integer(BigInt::from(v)))
    }

    pub fn from_rational(n: u32, r: &BigRational) -> CycloNumber {
        let mut out = CycloNumber::zero(n);
        out.num[0] = r.numer().clone();
        out.den = r.denom().clone();
        out.normalize();
        out
    }

    /// ζ_N^k.
    pub fn root_of_unity(n: u32, k: i64) -> CycloNumber {
        let f = field(n);
        let num = f.power(k).iter().map(|&c| BigInt::from(c)).collect();
        CycloNumber::from_parts(f, num, BigInt::one())
    }

    /// Σ (p/q) ζ_N^k over the given terms; exponents may be any integers.
    pub fn from_terms(n: u32, terms: &[(i64, BigRational)]) -> CycloNumber {
        let f = field(n);
        let mut den = BigInt::one();
        for (_, r) in terms {
            den = den.lcm(r.denom());
        }
        let mut acc = vec![BigInt::zero(); f.phi];
        for (k, r) in terms {
            let scale = r.numer() * (&den / r.denom());
            for (t, p) in f.power(*k).iter().enumerate() {
                if *p != 0 {
                    acc[t] += &scale * *p;
                }
            }
        }
        CycloNumber::from_parts(f, acc, den)
    }

    /// Same as [`from_terms`](Self::from_terms) with small integer fractions.
    pub fn from_small_terms(n: u32, terms: &[(i64, i64, i64)]) -> CycloNumber {
        let terms: Vec<(i64, BigRational)> = terms
            .iter()
            .map(|&(k, p, q)| (k, BigRational::new(p.into(), q.into())))
            .collect();
        CycloNumber::from_terms(n, &terms)
    }

    /// Build from power-basis coefficients (length φ(N)).
    pub fn from_coeffs(n: u32, coeffs: &[BigRational]) -> Result<CycloNumber, CycloError> {
        let f = field(n);
        if coeffs.len() != f.phi {
            return Err(CycloError::BadLiteral(format!(
                "expected {} coefficients for conductor {n}, got {}",
                f.phi,
                coeffs.len()
            )));
        }
        let terms: Vec<(i64, BigRational)> = coeffs
            .iter()
            .enumerate()
            .map(|(j, c)| (j as i64, c.clone()))
            .collect();
        Ok(CycloNumber::from_terms(n, &terms))
    }

    pub fn conductor(&self) -> u32 {
        self.field.n
    }

    /// φ(N), the degree of the field.
    pub fn degree(&self) -> usize {
        self.field.phi
    }

    /// Power-basis coefficients as exact rationals.
    pub fn coeffs(&self) -> Vec<BigRational> {
        self.num
            .iter()
            .map(|c| BigRational::new(c.clone(), self.den.clone()))
            .collect()
    }

    /// Integer numerator coefficients and the common denominator.
    pub fn numerators(&self) -> (&[BigInt], &BigInt) {
        (&self.num, &self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.den.is_one() && self.num[0].is_one() && self.num[1..].iter().all(|c| c.is_zero())
    }

    pub fn is_rational(&self) -> bool {
        self.num[1..].iter().all(|c| c.is_zero())
    }

    pub fn to_rational(&self) -> Option<BigRational> {
        self.is_rational()
            .then(|| BigRational::new(self.num[0].clone(), self.den.clone()))
    }

    /// Whether this value is fixed by complex conjugation.
    pub fn is_real(&self) -> bool {
        *self == self.conj()
    }

    /// Embed into Q(ζ_M); `M` must be a multiple of the current conductor.
    pub fn embed(&self, m: u32) -> Result<CycloNumber, CycloError> {
        let n = self.conductor();
        if m == n {
            return Ok(self.clone());
        }
        if !m.is_multiple_of(n) {
            return Err(CycloError::NotAMultiple { from: n, to: m });
        }
        let step = (m / n) as i64;
        let target = field(m);
        let mut acc = vec![BigInt::zero(); target.phi];
        for (j, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (t, p) in target.power(j as i64 * step).iter().enumerate() {
                if *p != 0 {
                    acc[t] += c * *p;
                }
            }
        }
        Ok(CycloNumber::from_parts(target, acc, self.den.clone()))
    }

    /// Both operands in their common (lcm) conductor.
    pub fn unify(a: &CycloNumber, b: &CycloNumber) -> (CycloNumber, CycloNumber) {
        let m = a.conductor().lcm(&b.conductor());
        (a.embed(m).unwrap(), b.embed(m).unwrap())
    }

    fn same_field(&self, other: &CycloNumber) -> bool {
        Arc::ptr_eq(&self.field, &other.field) || self.field.n == other.field.n
    }

    /// The Galois automorphism ζ ↦ ζ^k (k coprime to N).
    pub fn galois(&self, k: i64) -> CycloNumber {
        let f = self.field.clone();
        assert!(
            (k.rem_euclid(f.n as i64) as u32).gcd(&f.n) == 1,
            "galois exponent must be coprime to the conductor"
        );
        let mut acc = vec![BigInt::zero(); f.phi];
        for (j, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (t, p) in f.power(j as i64 * k).iter().enumerate() {
                if *p != 0 {
                    acc[t] += c * *p;
                }
            }
        }
        CycloNumber::from_parts(f, acc, self.den.clone())
    }

    /// Complex conjugation, the Galois map ζ ↦ ζ^{-1}.
    pub fn conj(&self) -> CycloNumber {
        self.galois(-1)
    }

    fn add_same(&self, other: &CycloNumber, sign: i8) -> CycloNumber {
        let f = self.field.clone();
        if self.den == other.den {
            let num = self
                .num
                .iter()
                .zip(&other.num)
                .map(|(a, b)| if sign > 0 { a + b } else { a - b })
                .collect();
            return CycloNumber::from_parts(f, num, self.den.clone());
        }
        let num = self
            .num
            .iter()
            .zip(&other.num)
            .map(|(a, b)| {
                let x = a * &other.den;
                let y = b * &self.den;
                if sign > 0 {
                    x + y
                } else {
                    x - y
                }
            })
            .collect();
        CycloNumber::from_parts(f, num, &self.den * &other.den)
    }

    fn mul_same(&self, other: &CycloNumber) -> CycloNumber {
        let f = self.field.clone();
        let phi = f.phi;
        let mut acc = vec![BigInt::zero(); 2 * phi - 1];
        for (i, a) in self.num.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.num.iter().enumerate() {
                if !b.is_zero() {
                    acc[i + j] += a * b;
                }
            }
        }
        CycloNumber::from_unreduced(f, acc, &self.den * &other.den)
    }

    fn binary(&self, other: &CycloNumber, op: impl Fn(&Self, &Self) -> Self) -> CycloNumber {
        if self.same_field(other) {
            op(self, other)
        } else {
            let (a, b) = CycloNumber::unify(self, other);
            op(&a, &b)
        }
    }

    /// Multiplication by ζ_N^k, a cheap monomial shift.
    pub fn mul_root(&self, k: i64) -> CycloNumber {
        let f = self.field.clone();
        let mut acc = vec![BigInt::zero(); f.phi];
        for (j, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (t, p) in f.power(j as i64 + k).iter().enumerate() {
                if *p != 0 {
                    acc[t] += c * *p;
                }
            }
        }
        CycloNumber::from_parts(f, acc, self.den.clone())
    }

    /// Multiplicative inverse via the extended Euclidean algorithm in Q[x]/Φ_N.
    pub fn inv(&self) -> Result<CycloNumber, CycloError> {
        if self.is_zero() {
            return Err(CycloError::DivisionByZero);
        }
        if let Some(r) = self.to_rational() {
            return Ok(CycloNumber::from_rational(self.conductor(), &r.recip()));
        }
        let a: Vec<BigRational> = self.num.iter().map(|c| BigRational::from(c.clone())).collect();
        let m: Vec<BigRational> = self
            .field
            .cyclo_poly
            .iter()
            .map(|&c| BigRational::from(BigInt::from(c)))
            .collect();
        // invariant: s * a ≡ r (mod m)
        let mut r0 = m;
        let mut s0: Vec<BigRational> = vec![];
        let mut r1 = trim(a);
        let mut s1 = vec![BigRational::one()];
        while !(r1.len() == 1) {
            let (q, r) = poly_divmod(&r0, &r1);
            let s2 = poly_sub(&s0, &poly_mul_q(&q, &s1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s2);
            if r1.is_empty() {
                unreachable!("Φ_N is irreducible, so a nonzero element is a unit");
            }
        }
        let c = r1[0].recip();
        let coeffs: Vec<(i64, BigRational)> = s1
            .into_iter()
            .enumerate()
            .map(|(j, x)| (j as i64, x * &c))
            .collect();
        let inv = CycloNumber::from_terms(self.conductor(), &coeffs);
        Ok(inv.scale(&BigRational::from(self.den.clone())))
    }

    pub fn checked_div(&self, other: &CycloNumber) -> Result<CycloNumber, CycloError> {
        Ok(self * &other.inv()?)
    }

    /// Integer power; negative exponents invert.
    pub fn pow(&self, e: i64) -> CycloNumber {
        let mut base = if e < 0 {
            self.inv().expect("negative power of zero")
        } else {
            self.clone()
        };
        let mut e = e.unsigned_abs();
        let mut acc = CycloNumber::one(self.conductor());
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn scale(&self, r: &BigRational) -> CycloNumber {
        let num = self.num.iter().map(|c| c * r.numer()).collect();
        CycloNumber::from_parts(self.field.clone(), num, &self.den * r.denom())
    }

    /// Fast double-precision evaluation (display and numeric guesses only).
    pub fn to_c64(&self) -> Complex64 {
        let n = self.conductor() as f64;
        let den = self.den.to_f64().unwrap_or(f64::INFINITY);
        let mut z = Complex64::new(0.0, 0.0);
        for (j, c) in self.num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let v = c.to_f64().unwrap_or(f64::NAN) / den;
            let ang = 2.0 * std::f64::consts::PI * j as f64 / n;
            z += Complex64::from_polar(v, ang);
        }
        z
    }

    /// If this value is a root of unity, the reduced fraction k/m with value e^{2πik/m}.
    pub fn root_of_unity_exponent(&self) -> Option<(u32, u32)> {
        let n = self.conductor();
        let l = if n.is_multiple_of(2) { n } else { 2 * n };
        let z = self.to_c64();
        if (z.norm() - 1.0).abs() > 1e-6 {
            return None;
        }
        let t = z.arg() / (2.0 * std::f64::consts::PI) * l as f64;
        let k = (t.round() as i64).rem_euclid(l as i64);
        let candidate = CycloNumber::root_of_unity(l, k);
        if candidate != *self {
            return None;
        }
        let k = k as u32;
        let g = k.gcd(&l);
        Some((k / g, l / g))
    }

    /// Multiplicative order when this is a root of unity.
    pub fn root_of_unity_order(&self) -> Option<u32> {
        self.root_of_unity_exponent().map(|(_, m)| m)
    }

    /// Sign of a real value, decided exactly for zero and numerically at high precision otherwise.
    pub fn real_sign(&self) -> Ordering {
        if self.is_zero() {
            return Ordering::Equal;
        }
        let a = self.approx(40);
        if a.re_exact_sign() > 0 {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }
}

fn trim(mut p: Vec<BigRational>) -> Vec<BigRational> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

fn poly_sub(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    let n = a.len().max(b.len());
    let out = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(BigRational::zero);
            let y = b.get(i).cloned().unwrap_or_else(BigRational::zero);
            x - y
        })
        .collect();
    trim(out)
}

fn poly_mul_q(a: &[BigRational], b: &[BigRational]) -> Vec<BigRational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![BigRational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn poly_divmod(a: &[BigRational], b: &[BigRational]) -> (Vec<BigRational>, Vec<BigRational>) {
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    if rem.len() < b.len() {
        return (vec![], trim(rem));
    }
    let lead = b[db].clone();
    let mut q = vec![BigRational::zero(); rem.len() - db];
    for i in (0..q.len()).rev() {
        let c = &rem[i + db] / &lead;
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            rem[i + j] -= &c * bj;
        }
        q[i] = c;
    }
    (trim(q), trim(rem))
}

impl PartialEq for CycloNumber {
    fn eq(&self, other: &CycloNumber) -> bool {
        if self.same_field(other) {
            self.den == other.den && self.num == other.num
        } else {
            let (a, b) = CycloNumber::unify(self, other);
            a.den == b.den && a.num == b.num
        }
    }
}

impl Eq for CycloNumber {}

impl fmt::Debug for CycloNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CycloNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.conductor();
        let mut first = true;
        for (j, c) in self.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            if j == 0 {
                write!(f, "{mag}")?;
            } else {
                if !mag.is_one() {
                    write!(f, "{mag}*")?;
                }
                if j == 1 {
                    write!(f, "z{n}")?;
                } else {
                    write!(f, "z{n}^{j}")?;
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $body:expr) => {
        impl $tr<&CycloNumber> for &CycloNumber {
            type Output = CycloNumber;
            fn $method(self, rhs: &CycloNumber) -> CycloNumber {
                let f: fn(&CycloNumber, &CycloNumber) -> CycloNumber = $body;
                self.binary(rhs, f)
            }
        }
        impl $tr<CycloNumber> for CycloNumber {
            type Output = CycloNumber;
            fn $method(self, rhs: CycloNumber) -> CycloNumber {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&CycloNumber> for CycloNumber {
            type Output = CycloNumber;
            fn $method(self, rhs: &CycloNumber) -> CycloNumber {
                (&self).$method(rhs)
            }
        }
        impl $tr<CycloNumber> for &CycloNumber {
            type Output = CycloNumber;
            fn $method(self, rhs: CycloNumber) -> CycloNumber {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, |a, b| a.add_same(b, 1));
forward_binop!(Sub, sub, |a, b| a.add_same(b, -1));
forward_binop!(Mul, mul, |a, b| a.mul_same(b));
forward_binop!(Div, div, |a, b| a.checked_div(b).expect("division by zero"));

impl Neg for &CycloNumber {
    type Output = CycloNumber;
    fn neg(self) -> CycloNumber {
        CycloNumber {
            field: self.field.clone(),
            num: self.num.iter().map(|c| -c).collect(),
            den: self.den.clone(),
        }
    }
}

impl Neg for CycloNumber {
    type Output = CycloNumber;
    fn neg(mut self) -> CycloNumber {
        for c in &mut self.num {
            *c = -std::mem::take(c);
        }
        self
    }
}

impl AddAssign<&CycloNumber> for CycloNumber {
    fn add_assign(&mut self, rhs: &CycloNumber) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&CycloNumber> for CycloNumber {
    fn sub_assign(&mut self, rhs: &CycloNumber) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&CycloNumber> for CycloNumber {
    fn mul_assign(&mut self, rhs: &CycloNumber) {
        *self = &*self * rhs;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(p: i64, d: i64) -> BigRational {
        BigRational::new(p.into(), d.into())
    }

    #[test]
    fn i_squared_is_minus_one() {
        let i = CycloNumber::root_of_unity(4, 1);
        assert_eq!(&i * &i, CycloNumber::from_int(4, -1));
    }

    #[test]
    fn zeta13_to_the_13_is_one() {
        assert!(CycloNumber::root_of_unity(13, 1).pow(13).is_one());
    }

    #[test]
    fn terms_reduce_to_canonical_form() {
        // 1 + ζ_3 + ζ_3^2 = 0
        let z = CycloNumber::from_small_terms(3, &[(0, 1, 1), (1, 1, 1), (2, 1, 1)]);
        assert!(z.is_zero());
        let a = CycloNumber::from_small_terms(12, &[(1, 1, 2), (13, 1, 2)]);
        assert_eq!(a, CycloNumber::root_of_unity(12, 1));
    }

    #[test]
    fn inverse_round_trip() {
        let x = CycloNumber::from_small_terms(24, &[(0, 3, 1), (1, -2, 5), (7, 1, 3)]);
        let y = x.inv().unwrap();
        assert!((&x * &y).is_one());
        assert!(matches!(
            CycloNumber::zero(24).inv(),
            Err(CycloError::DivisionByZero)
        ));
    }

    #[test]
    fn mixed_conductors_embed_into_lcm() {
        let z3 = CycloNumber::root_of_unity(3, 1);
        let z13 = CycloNumber::root_of_unity(13, 1);
        let p = &z3 * &z13;
        assert_eq!(p.conductor(), 39);
        // ζ_3 ζ_13 = ζ_39^{13+3}
        assert_eq!(p, CycloNumber::root_of_unity(39, 16));
    }

    #[test]
    fn equality_across_conductors() {
        assert_eq!(CycloNumber::from_int(1, 5), CycloNumber::from_int(24, 5));
        assert_ne!(
            CycloNumber::root_of_unity(4, 1),
            CycloNumber::root_of_unity(8, 1)
        );
    }

    #[test]
    fn conjugation() {
        let i = CycloNumber::root_of_unity(4, 1);
        assert_eq!(i.conj(), -&i);
        let w = CycloNumber::root_of_unity(12, 5);
        assert_eq!(w.conj(), CycloNumber::root_of_unity(12, -5));
        assert_eq!(w.conj().conj(), w);
    }

    #[test]
    fn root_of_unity_exponent_detection() {
        assert_eq!(
            CycloNumber::root_of_unity(24, 14).root_of_unity_exponent(),
            Some((7, 12))
        );
        // -ζ_13 has order 26 inside Q(ζ_13)
        assert_eq!(
            (-CycloNumber::root_of_unity(13, 1)).root_of_unity_order(),
            Some(26)
        );
        assert_eq!(CycloNumber::from_int(3, 2).root_of_unity_exponent(), None);
    }

    #[test]
    fn rational_helpers() {
        let x = CycloNumber::from_rational(24, &q(7, 3));
        assert_eq!(x.to_rational(), Some(q(7, 3)));
        assert!(CycloNumber::root_of_unity(24, 1).to_rational().is_none());
        assert_eq!(x.scale(&q(3, 7)), CycloNumber::one(24));
    }

    #[test]
    fn mul_root_matches_mul() {
        let x = CycloNumber::from_small_terms(39, &[(0, 1, 2), (5, -3, 1), (20, 1, 1)]);
        assert_eq!(x.mul_root(17), &x * &CycloNumber::root_of_unity(39, 17));
    }

    #[test]
    fn display_is_readable() {
        let x = CycloNumber::from_small_terms(12, &[(0, 1, 2), (1, -1, 1)]);
        assert_eq!(x.to_string(), "1/2 - z12");
        assert_eq!(CycloNumber::zero(5).to_string(), "0");
    }
}
