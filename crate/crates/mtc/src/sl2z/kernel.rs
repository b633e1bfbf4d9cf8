//! Integer kernel for group closure: matrices over Z[ζ_N] with one common
//! denominator, in canonical form (content of numerators coprime to the
//! denominator, denominator positive), so equality is vector equality.

use std::sync::Arc;

use cyclo::CycloNumber;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;

use crate::linalg::Mat;
use crate::Error;

/// Reduction data for Z[x]/Φ_N.
#[derive(Debug)]
pub struct Ring {
    pub n: u32,
    pub phi: usize,
    /// Φ_N coefficients, low degree first (monic, length phi + 1).
    cyclo: Vec<i64>,
    /// x^k reduced mod Φ_N for k in 0..n.
    powers: Vec<Vec<i64>>,
}

impl Ring {
    pub fn new(n: u32) -> Arc<Ring> {
        let one = CycloNumber::one(n);
        let phi = one.degree();
        // Φ_N from x^phi: ζ^phi = -Σ c_j ζ^j
        let top = CycloNumber::root_of_unity(n, phi as i64);
        let (nums, den) = top.numerators();
        assert!(den == &BigInt::from(1));
        let mut cyclo: Vec<i64> = nums.iter().map(|c| -c.to_i64().unwrap()).collect();
        cyclo.resize(phi, 0);
        cyclo.push(1);
        let powers = (0..n as i64)
            .map(|k| {
                let z = CycloNumber::root_of_unity(n, k);
                let (nums, _) = z.numerators();
                let mut v: Vec<i64> = nums.iter().map(|c| c.to_i64().unwrap()).collect();
                v.resize(phi, 0);
                v
            })
            .collect();
        Arc::new(Ring { n, phi, cyclo, powers })
    }

    /// Reduce an unreduced polynomial (degree < 2·phi) in place; returns the low phi coefficients.
    fn reduce(&self, acc: &mut [i128]) {
        let phi = self.phi;
        for deg in (phi..acc.len()).rev() {
            let c = acc[deg];
            if c == 0 {
                continue;
            }
            acc[deg] = 0;
            let base = deg - phi;
            for t in 0..phi {
                let f = self.cyclo[t];
                if f != 0 {
                    acc[base + t] -= c * f as i128;
                }
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntMat {
    pub dim: usize,
    /// Numerators: entry (i, j) occupies [(i·dim + j)·phi, … + phi).
    pub num: Box<[i64]>,
    pub den: i64,
}

/// A generator prepared for fast right multiplication.
#[derive(Debug)]
pub enum Gen {
    /// Diagonal matrix of roots of unity ζ_N^{e_j}.
    Diagonal(Vec<u32>),
    /// General matrix, with each entry's nonzero coefficients listed.
    Dense { den: i64, entries: Vec<Vec<(usize, i64)>> },
}

impl IntMat {
    pub fn identity(ring: &Ring, dim: usize) -> IntMat {
        let mut num = vec![0i64; dim * dim * ring.phi];
        for i in 0..dim {
            num[(i * dim + i) * ring.phi] = 1;
        }
        IntMat { dim, num: num.into_boxed_slice(), den: 1 }
    }

    pub fn from_mat(ring: &Ring, m: &Mat<CycloNumber>) -> Result<IntMat, Error> {
        let dim = m.rows();
        let phi = ring.phi;
        let mut den = BigInt::from(1);
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                let e = m[(i, j)].embed(ring.n).map_err(|e| Error::Data(e.to_string()))?;
                den = den.lcm(e.numerators().1);
                entries.push(e);
            }
        }
        let mut num = vec![0i64; dim * dim * phi];
        for (idx, e) in entries.iter().enumerate() {
            let (nums, d) = e.numerators();
            let f = &den / d;
            for (t, c) in nums.iter().enumerate() {
                num[idx * phi + t] = (c * &f)
                    .to_i64()
                    .ok_or_else(|| Error::Data("matrix coefficients exceed the integer kernel range".into()))?;
            }
        }
        let den = den.to_i64().ok_or_else(|| Error::Data("denominator exceeds the integer kernel range".into()))?;
        let mut out = IntMat { dim, num: num.into_boxed_slice(), den };
        out.canonicalize_i64();
        Ok(out)
    }

    pub fn to_mat(&self, ring: &Ring) -> Mat<CycloNumber> {
        let phi = ring.phi;
        let rows = (0..self.dim)
            .map(|i| {
                (0..self.dim)
                    .map(|j| {
                        let base = (i * self.dim + j) * phi;
                        let terms: Vec<(i64, i64, i64)> =
                            (0..phi).map(|t| (t as i64, self.num[base + t], self.den)).collect();
                        CycloNumber::from_small_terms(ring.n, &terms)
                    })
                    .collect()
            })
            .collect();
        Mat::from_rows(rows)
    }

    fn canonicalize_i64(&mut self) {
        let mut g = self.den.abs();
        for &c in self.num.iter() {
            if g == 1 {
                break;
            }
            g = g.gcd(&c.abs());
        }
        if self.den < 0 {
            g = -g;
        }
        if g != 1 {
            for c in self.num.iter_mut() {
                *c /= g;
            }
            self.den /= g;
        }
    }

    pub fn is_identity(&self, ring: &Ring) -> bool {
        *self == IntMat::identity(ring, self.dim)
    }

    /// self · g, exactly.
    pub fn mul_gen(&self, ring: &Ring, g: &Gen) -> Result<IntMat, Error> {
        let dim = self.dim;
        let phi = ring.phi;
        match g {
            Gen::Diagonal(exps) => {
                let mut num = vec![0i64; dim * dim * phi];
                for i in 0..dim {
                    for (j, &e) in exps.iter().enumerate() {
                        let base = (i * dim + j) * phi;
                        let src = &self.num[base..base + phi];
                        let dst = &mut num[base..base + phi];
                        for (t, &c) in src.iter().enumerate() {
                            if c == 0 {
                                continue;
                            }
                            let p = &ring.powers[(t + e as usize) % ring.n as usize];
                            for (u, &pc) in p.iter().enumerate() {
                                if pc != 0 {
                                    dst[u] += c * pc;
                                }
                            }
                        }
                    }
                }
                // multiplying by roots of unity preserves canonical form
                Ok(IntMat { dim, num: num.into_boxed_slice(), den: self.den })
            }
            Gen::Dense { den, entries } => {
                let mut wide = vec![0i128; dim * dim * phi];
                let mut acc = vec![0i128; 2 * phi];
                for i in 0..dim {
                    for j in 0..dim {
                        acc.iter_mut().for_each(|a| *a = 0);
                        for k in 0..dim {
                            let gk = &entries[k * dim + j];
                            if gk.is_empty() {
                                continue;
                            }
                            let base = (i * dim + k) * phi;
                            let a = &self.num[base..base + phi];
                            for (t, &c) in a.iter().enumerate() {
                                if c == 0 {
                                    continue;
                                }
                                let c = c as i128;
                                for &(u, d) in gk {
                                    acc[t + u] += c * d as i128;
                                }
                            }
                        }
                        ring.reduce(&mut acc);
                        let base = (i * dim + j) * phi;
                        wide[base..base + phi].copy_from_slice(&acc[..phi]);
                    }
                }
                let mut total_den = self.den as i128 * *den as i128;
                let mut gcd = total_den.abs();
                for &c in &wide {
                    if gcd == 1 {
                        break;
                    }
                    gcd = gcd.gcd(&c.abs());
                }
                if gcd > 1 {
                    wide.iter_mut().for_each(|c| *c /= gcd);
                    total_den /= gcd;
                }
                let narrow = |v: i128| i64::try_from(v).map_err(|_| Error::Data("coefficient overflow in closure kernel".into()));
                let num = wide.into_iter().map(narrow).collect::<Result<Vec<_>, _>>()?;
                Ok(IntMat { dim, num: num.into_boxed_slice(), den: narrow(total_den)? })
            }
        }
    }
}

impl Gen {
    pub fn from_mat(ring: &Ring, m: &Mat<CycloNumber>) -> Result<Gen, Error> {
        if m.is_diagonal() {
            let exps: Option<Vec<u32>> = (0..m.rows())
                .map(|i| {
                    let z = &m[(i, i)];
                    z.root_of_unity_exponent().and_then(|(k, ord)| {
                        ring.n.is_multiple_of(ord).then(|| k * (ring.n / ord))
                    })
                })
                .collect();
            if let Some(exps) = exps {
                return Ok(Gen::Diagonal(exps));
            }
        }
        let im = IntMat::from_mat(ring, m)?;
        let phi = ring.phi;
        let entries = (0..im.dim * im.dim)
            .map(|idx| {
                (0..phi)
                    .filter_map(|t| {
                        let c = im.num[idx * phi + t];
                        (c != 0).then_some((t, c))
                    })
                    .collect()
            })
            .collect();
        Ok(Gen::Dense { den: im.den, entries })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_and_products_match_general_path() {
        let ring = Ring::new(24);
        let z = |k| CycloNumber::root_of_unity(24, k);
        let half = cyclo::ratio(1, 2);
        let a = Mat::from_rows(vec![
            vec![z(1).scale(&half), z(5)],
            vec![CycloNumber::sqrt_int(3).scale(&cyclo::ratio(1, 3)), z(7)],
        ]);
        let b = Mat::from_rows(vec![vec![z(2), z(0)], vec![CycloNumber::sqrt_int(2), z(11)]]);
        let ia = IntMat::from_mat(&ring, &a).unwrap();
        assert_eq!(ia.to_mat(&ring), a);
        let g = Gen::from_mat(&ring, &b).unwrap();
        assert_eq!(ia.mul_gen(&ring, &g).unwrap().to_mat(&ring), a.mul(&b));
        let t = Mat::diagonal(&[z(3), z(-5)]);
        let gt = Gen::from_mat(&ring, &t).unwrap();
        assert!(matches!(gt, Gen::Diagonal(_)));
        assert_eq!(ia.mul_gen(&ring, &gt).unwrap().to_mat(&ring), a.mul(&t));
    }

    #[test]
    fn canonical_form_is_unique() {
        let ring = Ring::new(12);
        let m = Mat::from_rows(vec![vec![CycloNumber::from_small_terms(12, &[(0, 2, 4)])]]);
        let a = IntMat::from_mat(&ring, &m).unwrap();
        assert_eq!(a.den, 2);
        assert_eq!(a.num[0], 1);
    }
}
