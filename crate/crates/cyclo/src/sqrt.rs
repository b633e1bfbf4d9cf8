//! Square roots of integers via Gauss sums, and exact square roots of
//! elements lying in real quadratic subfields.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::number::CycloNumber;

fn factor(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = vec![];
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

fn legendre(a: u64, p: u64) -> i64 {
    let mut result = 1u64;
    let mut base = a % p;
    let mut e = (p - 1) / 2;
    while e > 0 {
        if e & 1 == 1 {
            result = result * base % p;
        }
        base = base * base % p;
        e >>= 1;
    }
    match result {
        0 => 0,
        1 => 1,
        _ => -1,
    }
}

/// √p for a prime p, as an element of Q(ζ_p), Q(ζ_{4p}) or Q(ζ_8).
fn sqrt_prime(p: u64) -> CycloNumber {
    if p == 2 {
        return CycloNumber::from_small_terms(8, &[(1, 1, 1), (-1, 1, 1)]);
    }
    let terms: Vec<(i64, i64, i64)> = (1..p)
        .map(|k| (k as i64, legendre(k, p), 1))
        .collect();
    let gauss = CycloNumber::from_small_terms(p as u32, &terms);
    if p % 4 == 1 {
        gauss
    } else {
        // the Gauss sum is i√p here
        &gauss * &CycloNumber::root_of_unity(4, -1)
    }
}

/// The conductor of Q(√m) for squarefree m (|discriminant|).
pub fn quadratic_conductor(m: i64) -> u32 {
    let a = m.unsigned_abs() as u32;
    if m.rem_euclid(4) == 1 {
        a
    } else {
        4 * a
    }
}

impl CycloNumber {
    /// √n for any integer n: the positive root for n > 0, i√|n| for n < 0.
    ///
    /// Built from quadratic Gauss sums, so the conductor is that of Q(√n)
    /// (or a small multiple when a square factor or sign is present).
    pub fn sqrt_int(n: i64) -> CycloNumber {
        if n == 0 {
            return CycloNumber::zero(1);
        }
        let mut outside = 1i64;
        let mut root = CycloNumber::one(1);
        for (p, e) in factor(n.unsigned_abs()) {
            outside *= (p as i64).pow(e / 2);
            if e % 2 == 1 {
                root = &root * &sqrt_prime(p);
            }
        }
        if n < 0 {
            root = &root * &CycloNumber::root_of_unity(4, 1);
        }
        let root = root.scale(&BigRational::from_integer(outside.into()));
        if n > 0 && root.real_sign() == Ordering::Less {
            -root
        } else {
            root
        }
    }

    /// Exact positive square root of a positive real value when it lies in
    /// Q(√m)·√c for small squarefree m, c with √m, √c in this field.
    /// Returns `None` when no such root is found.
    pub fn sqrt_exact(&self) -> Option<CycloNumber> {
        if self.is_zero() {
            return Some(self.clone());
        }
        if !self.is_real() || self.real_sign() != Ordering::Greater {
            return None;
        }
        let n = self.conductor();
        let mut radicands: Vec<i64> = vec![1];
        for m in 2..=(4 * n as i64) {
            if is_squarefree(m) && n.is_multiple_of(quadratic_conductor(m)) {
                radicands.push(m);
            }
        }
        for &c in &radicands {
            let sc = CycloNumber::sqrt_int(c).embed(n).ok()?;
            // √self = √(self·c)/√c
            let scaled = self * &CycloNumber::from_int(n, c);
            for &m in &radicands {
                if let Some(r) = sqrt_in_quadratic(&scaled, m) {
                    let root = if c == 1 { r } else { &r / &sc };
                    if &(&root * &root) == self {
                        return Some(root);
                    }
                }
            }
        }
        None
    }

    /// Write the value as a + b√m with rational a, b, if possible.
    pub fn quadratic_parts(&self, m: i64) -> Option<(BigRational, BigRational)> {
        let n = self.conductor();
        if m == 1 {
            return self.to_rational().map(|a| (a, BigRational::zero()));
        }
        let s = CycloNumber::sqrt_int(m);
        let nn = n.lcm(&s.conductor());
        let s = s.embed(nn).ok()?;
        let v = self.embed(nn).ok()?;
        let sc = s.coeffs();
        let vc = v.coeffs();
        let idx = (1..sc.len()).find(|&i| !sc[i].is_zero())?;
        let b = &vc[idx] / &sc[idx];
        let a = &vc[0] - &b * &sc[0];
        let rebuilt = &CycloNumber::from_rational(nn, &a) + &s.scale(&b);
        (rebuilt == v).then_some((a, b))
    }
}

fn is_squarefree(m: i64) -> bool {
    factor(m as u64).iter().all(|&(_, e)| e == 1)
}

fn rational_sqrt(r: &BigRational) -> Option<BigRational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    (&n * &n == *r.numer() && &d * &d == *r.denom()).then(|| BigRational::new(n, d))
}

/// √(a + b√m) = x + y√m with rational x, y, when such a denesting exists.
fn sqrt_in_quadratic(v: &CycloNumber, m: i64) -> Option<CycloNumber> {
    let n = v.conductor();
    let (a, b) = v.quadratic_parts(m)?;
    let mq = BigRational::from_integer(BigInt::from(m));
    let two = BigRational::from_integer(2.into());
    let sm = CycloNumber::sqrt_int(m);
    let build = |x: &BigRational, y: &BigRational| -> CycloNumber {
        let r = &CycloNumber::from_rational(n, x) + &sm.scale(y);
        r.embed(r.conductor().lcm(&n)).unwrap()
    };
    let mut candidates = vec![];
    if b.is_zero() {
        if let Some(x) = rational_sqrt(&a) {
            candidates.push(build(&x, &BigRational::zero()));
        }
        if m != 1 {
            if let Some(y) = rational_sqrt(&(&a / &mq)) {
                candidates.push(build(&BigRational::zero(), &y));
            }
        }
    } else {
        let disc = &a * &a - &mq * &b * &b;
        let r = rational_sqrt(&disc)?;
        for x2 in [(&a + &r) / &two, (&a - &r) / &two] {
            if let Some(x) = rational_sqrt(&x2) {
                if x.is_zero() {
                    continue;
                }
                let y = &b / (&two * &x);
                candidates.push(build(&x, &y));
                candidates.push(-build(&x, &y));
            }
        }
    }
    candidates
        .into_iter()
        .find(|c| c.real_sign() == Ordering::Greater && &(c * c) == v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn legendre_symbols_mod_13() {
        let residues: Vec<u64> = (1..13).filter(|&k| legendre(k, 13) == 1).collect();
        assert_eq!(residues, vec![1, 3, 4, 9, 10, 12]);
    }

    #[test]
    fn sqrt3_is_the_expected_combination() {
        let s3 = CycloNumber::sqrt_int(3);
        let expected = CycloNumber::from_small_terms(12, &[(1, 1, 1), (5, -1, 1)]);
        assert_eq!(s3, expected);
    }

    #[test]
    fn sqrt_of_composites_and_negatives() {
        for n in [2, 3, 5, 6, 12, 13, 15, 39, -1, -3, -7] {
            let r = CycloNumber::sqrt_int(n);
            assert_eq!(&r * &r, CycloNumber::from_int(1, n), "n={n}");
        }
        assert!(CycloNumber::sqrt_int(0).is_zero());
    }

    #[test]
    fn denesting_finds_square_roots() {
        let s3 = CycloNumber::sqrt_int(3).embed(24).unwrap();
        let d = &CycloNumber::from_int(24, 6) + &s3.scale(&BigRational::from_integer(2.into()));
        let d2 = &d * &d;
        assert_eq!(d2.sqrt_exact(), Some(d));
        // 2 + √3 = ((1+√3)/√2)^2 needs the √c rescaling
        let v = &CycloNumber::from_int(24, 2) + &s3;
        let r = v.sqrt_exact().expect("2+√3 has a root in Q(ζ_24)");
        assert_eq!(&r * &r, v);
        assert!(CycloNumber::from_int(24, -4).sqrt_exact().is_none());
    }
}
