//! Scalars of the ½E6 evaluator: a + bτ with a, b ∈ Q(ζ24) and τ² = √3/2.
//!
//! τ is not cyclotomic (Q(τ) is a non-Galois quartic), so the half-braidings
//! of X2 and X3 need this quadratic extension of the cyclotomic field.

use std::fmt;
use std::sync::OnceLock;

use cyclo::CycloNumber;
use serde_json::Value;

use crate::linalg::Field;
use crate::Error;

pub const CONDUCTOR: u32 = 24;

/// τ² = √3/2 in Q(ζ24).
pub fn tau_square() -> &'static CycloNumber {
    static SQ: OnceLock<CycloNumber> = OnceLock::new();
    SQ.get_or_init(|| CycloNumber::sqrt_int(3).scale(&cyclo::ratio(1, 2)).embed(CONDUCTOR).unwrap())
}

#[derive(Clone, PartialEq)]
pub struct Scalar {
    pub base: CycloNumber,
    pub tau: CycloNumber,
}

impl Scalar {
    pub fn new(base: CycloNumber, tau: CycloNumber) -> Scalar {
        Scalar { base, tau }
    }

    pub fn from_cyclo(base: CycloNumber) -> Scalar {
        Scalar { base, tau: CycloNumber::zero(1) }
    }

    pub fn tau() -> Scalar {
        Scalar { base: CycloNumber::zero(1), tau: CycloNumber::one(1) }
    }

    /// The value as a cyclotomic number, if the τ part vanishes.
    pub fn to_cyclo(&self) -> Option<CycloNumber> {
        self.tau.is_zero().then(|| self.base.clone())
    }

    pub fn scale_cyclo(&self, c: &CycloNumber) -> Scalar {
        Scalar { base: &self.base * c, tau: &self.tau * c }
    }

    /// Parse a cyclotomic literal or `{"base": lit, "tau": lit}`.
    pub fn from_json(v: &Value) -> Result<Scalar, Error> {
        let lit = |v: &Value| CycloNumber::from_literal(CONDUCTOR, v).map_err(|e| Error::Parse(e.to_string()));
        match v {
            Value::Object(map) => {
                let base = match map.get("base") {
                    Some(b) => lit(b)?,
                    None => CycloNumber::zero(CONDUCTOR),
                };
                let tau = match map.get("tau") {
                    Some(t) => lit(t)?,
                    None => CycloNumber::zero(CONDUCTOR),
                };
                Ok(Scalar { base, tau })
            }
            _ => Ok(Scalar::from_cyclo(lit(v)?)),
        }
    }

    pub fn to_json(&self) -> Value {
        let lit = |c: &CycloNumber| c.embed(CONDUCTOR).unwrap_or_else(|_| c.clone()).to_literal();
        if self.tau.is_zero() {
            lit(&self.base)
        } else {
            serde_json::json!({"base": lit(&self.base), "tau": lit(&self.tau)})
        }
    }

    pub fn to_c64(&self) -> num_complex::Complex64 {
        let t = tau_square().to_c64().re.sqrt();
        self.base.to_c64() + self.tau.to_c64() * t
    }
}

impl Field for Scalar {
    fn zero() -> Self {
        Scalar::from_cyclo(CycloNumber::zero(1))
    }
    fn one() -> Self {
        Scalar::from_cyclo(CycloNumber::one(1))
    }
    fn is_zero(&self) -> bool {
        self.base.is_zero() && self.tau.is_zero()
    }
    fn add(&self, o: &Self) -> Self {
        Scalar { base: &self.base + &o.base, tau: &self.tau + &o.tau }
    }
    fn sub(&self, o: &Self) -> Self {
        Scalar { base: &self.base - &o.base, tau: &self.tau - &o.tau }
    }
    fn mul(&self, o: &Self) -> Self {
        if self.tau.is_zero() && o.tau.is_zero() {
            return Scalar::from_cyclo(&self.base * &o.base);
        }
        let base = &self.base * &o.base + &(&self.tau * &o.tau) * tau_square();
        let tau = &self.base * &o.tau + &self.tau * &o.base;
        Scalar { base, tau }
    }
    fn neg(&self) -> Self {
        Scalar { base: -&self.base, tau: -&self.tau }
    }
    fn inv(&self) -> Option<Self> {
        if self.tau.is_zero() {
            return self.base.inv().ok().map(Scalar::from_cyclo);
        }
        // (a + bτ)(a - bτ) = a² - b²τ², nonzero since τ ∉ Q(ζ24)
        let norm = &self.base * &self.base - &(&self.tau * &self.tau) * tau_square();
        let ni = norm.inv().ok()?;
        Some(Scalar { base: &self.base * &ni, tau: -(&self.tau * &ni) })
    }
    fn from_i64(v: i64) -> Self {
        Scalar::from_cyclo(CycloNumber::from_int(1, v))
    }
}

impl From<CycloNumber> for Scalar {
    fn from(c: CycloNumber) -> Scalar {
        Scalar::from_cyclo(c)
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.tau.is_zero() {
            write!(f, "{}", self.base)
        } else if self.base.is_zero() {
            write!(f, "({})*tau", self.tau)
        } else {
            write!(f, "{} + ({})*tau", self.base, self.tau)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tau_squares_to_half_sqrt3() {
        let t = Scalar::tau();
        assert_eq!(t.mul(&t).to_cyclo().unwrap(), *tau_square());
    }

    #[test]
    fn inverse_in_extension() {
        let x = Scalar::new(CycloNumber::root_of_unity(24, 5), CycloNumber::from_int(24, 3));
        let y = x.inv().unwrap();
        assert_eq!(x.mul(&y), Scalar::one());
        assert!(Scalar::zero().inv().is_none());
    }

    #[test]
    fn json_forms() {
        let v = serde_json::json!({"base": [], "tau": [[6, 1, 1]]});
        let s = Scalar::from_json(&v).unwrap();
        assert_eq!(s.tau, CycloNumber::root_of_unity(24, 6));
        assert_eq!(Scalar::from_json(&s.to_json()).unwrap(), s);
        let plain = Scalar::from_json(&serde_json::json!([[0, 2, 3]])).unwrap();
        assert_eq!(plain.to_cyclo().unwrap(), CycloNumber::from_rational(24, &cyclo::ratio(2, 3)));
    }

    #[test]
    fn numeric_value() {
        let t = Scalar::tau().to_c64();
        assert!((t.re - (3f64.sqrt() / 2.0).sqrt()).abs() < 1e-12);
    }
}
