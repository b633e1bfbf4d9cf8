//! Per-conductor context: the cyclotomic polynomial and a table of reduced powers.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Reduction data for Q(ζ_N).
#[derive(Debug)]
pub(crate) struct Field {
    pub n: u32,
    pub phi: usize,
    /// Φ_N, lowest degree first, monic.
    pub cyclo_poly: Vec<i64>,
    /// `powers[k]` is x^k mod Φ_N for 0 <= k < N.
    pub powers: Vec<Vec<i64>>,
}

impl Field {
    fn new(n: u32) -> Field {
        assert!(n >= 1, "conductor must be positive");
        let cyclo_poly = cyclotomic_polynomial(n);
        let phi = cyclo_poly.len() - 1;
        let mut powers = Vec::with_capacity(n as usize);
        let mut cur = vec![0i64; phi];
        if phi > 0 {
            cur[0] = 1;
        }
        for _ in 0..n {
            powers.push(cur.clone());
            // multiply by x and reduce the overflowing top coefficient
            let top = cur[phi - 1];
            for j in (1..phi).rev() {
                cur[j] = cur[j - 1];
            }
            cur[0] = 0;
            if top != 0 {
                for j in 0..phi {
                    cur[j] = cur[j]
                        .checked_sub(top * cyclo_poly[j])
                        .expect("power table overflow");
                }
            }
        }
        Field {
            n,
            phi,
            cyclo_poly,
            powers,
        }
    }

    /// Reduced representation of x^k for any integer k.
    pub fn power(&self, k: i64) -> &[i64] {
        let idx = k.rem_euclid(self.n as i64) as usize;
        &self.powers[idx]
    }
}

fn fields() -> &'static RwLock<HashMap<u32, Arc<Field>>> {
    static FIELDS: OnceLock<RwLock<HashMap<u32, Arc<Field>>>> = OnceLock::new();
    FIELDS.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Shared context for conductor `n`; built once per process.
pub(crate) fn field(n: u32) -> Arc<Field> {
    if let Some(f) = fields().read().unwrap().get(&n) {
        return f.clone();
    }
    let built = Arc::new(Field::new(n));
    fields()
        .write()
        .unwrap()
        .entry(n)
        .or_insert(built)
        .clone()
}

pub(crate) fn mobius(mut n: u64) -> i32 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

fn poly_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Exact division by a monic polynomial; panics if the remainder is nonzero.
fn poly_div_exact(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let mut rem = a.to_vec();
    let db = b.len() - 1;
    assert!(b[db].is_one());
    let mut q = vec![BigInt::zero(); a.len() - db];
    for i in (0..q.len()).rev() {
        let c = rem[i + db].clone();
        if c.is_zero() {
            continue;
        }
        for (j, bj) in b.iter().enumerate() {
            rem[i + j] -= &c * bj;
        }
        q[i] = c;
    }
    assert!(rem.iter().all(|r| r.is_zero()), "inexact polynomial division");
    q
}

/// Φ_N by the Möbius product Π_{d | N} (x^d - 1)^{μ(N/d)}.
pub(crate) fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    let mut num = vec![BigInt::one()];
    let mut den = vec![BigInt::one()];
    for d in 1..=n {
        if !n.is_multiple_of(d) {
            continue;
        }
        let mut f = vec![BigInt::zero(); d as usize + 1];
        f[0] = BigInt::from(-1);
        f[d as usize] = BigInt::one();
        match mobius((n / d) as u64) {
            1 => num = poly_mul(&num, &f),
            -1 => den = poly_mul(&den, &f),
            _ => {}
        }
    }
    // (x^d - 1) factors have leading coefficient 1, so den is monic
    poly_div_exact(&num, &den)
        .into_iter()
        .map(|c| c.to_i64().expect("cyclotomic coefficient exceeds i64"))
        .collect()
}

/// Euler's totient.
pub fn totient(n: u32) -> u32 {
    let mut n = n as u64;
    let mut result = n;
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result as u32
}

/// Least common conductor of two fields.
pub fn common_conductor(a: u32, b: u32) -> u32 {
    a.lcm(&b)
}

/// gcd of a slice of big integers together with `seed`.
pub(crate) fn content_gcd<'a>(seed: &BigInt, items: impl Iterator<Item = &'a BigInt>) -> BigInt {
    let mut g = seed.abs();
    for x in items {
        if g.is_one() {
            break;
        }
        if !x.is_zero() {
            g = g.gcd(x);
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(8), vec![1, 0, 0, 0, 1]);
    }

    #[test]
    fn degree_is_totient() {
        for n in 1..200 {
            assert_eq!(cyclotomic_polynomial(n).len() - 1, totient(n) as usize, "n={n}");
        }
    }

    #[test]
    fn phi_105_has_a_coefficient_minus_two() {
        assert!(cyclotomic_polynomial(105).contains(&-2));
    }

    #[test]
    fn power_table_wraps() {
        let f = field(24);
        assert_eq!(f.power(24), f.power(0));
        assert_eq!(f.power(-1), f.power(23));
        // x^12 = -1 in Q(ζ_24)
        let mut minus_one = vec![0; f.phi];
        minus_one[0] = -1;
        assert_eq!(f.power(12), &minus_one[..]);
    }
}
