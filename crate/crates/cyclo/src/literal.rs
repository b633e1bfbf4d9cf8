//! JSON literal format: an array of terms `[k, p, q]` meaning (p/q)·ζ_N^k,
//! with the conductor N supplied by the enclosing document.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde_json::Value;

use crate::number::CycloNumber;
use crate::CycloError;

fn parse_int(v: &Value) -> Result<BigInt, CycloError> {
    match v {
        Value::Number(n) => n
            .as_i64()
            .map(BigInt::from)
            .ok_or_else(|| CycloError::BadLiteral(format!("not an integer: {n}"))),
        Value::String(s) => s
            .parse::<BigInt>()
            .map_err(|_| CycloError::BadLiteral(format!("not an integer: {s:?}"))),
        other => Err(CycloError::BadLiteral(format!("not an integer: {other}"))),
    }
}

fn emit_int(v: &BigInt) -> Value {
    match v.to_i64() {
        Some(i) => Value::from(i),
        None => Value::from(v.to_string()),
    }
}

impl CycloNumber {
    /// Parse a literal in conductor `n`. Exponents may be any integers and
    /// terms may repeat; the result is canonicalized.
    pub fn from_literal(n: u32, v: &Value) -> Result<CycloNumber, CycloError> {
        if n == 0 {
            return Err(CycloError::BadLiteral("conductor must be positive".into()));
        }
        let terms = v
            .as_array()
            .ok_or_else(|| CycloError::BadLiteral(format!("expected an array of terms, got {v}")))?;
        let mut parsed = Vec::with_capacity(terms.len());
        for t in terms {
            let t = t
                .as_array()
                .filter(|t| t.len() == 3)
                .ok_or_else(|| CycloError::BadLiteral(format!("term must be [k, p, q], got {t}")))?;
            let k = t[0]
                .as_i64()
                .ok_or_else(|| CycloError::BadLiteral(format!("bad exponent {}", t[0])))?;
            let p = parse_int(&t[1])?;
            let q = parse_int(&t[2])?;
            if q.is_zero() {
                return Err(CycloError::BadLiteral("zero denominator in term".into()));
            }
            parsed.push((k, BigRational::new(p, q)));
        }
        Ok(CycloNumber::from_terms(n, &parsed))
    }

    /// Canonical literal: one term per nonzero power-basis coefficient, in
    /// increasing exponent order, fractions in lowest terms.
    pub fn to_literal(&self) -> Value {
        let terms = self
            .coeffs()
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| Value::Array(vec![Value::from(j as i64), emit_int(c.numer()), emit_int(c.denom())]))
            .collect();
        Value::Array(terms)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn parse_and_canonicalize() {
        let v = CycloNumber::from_literal(12, &json!([[1, 1, 1], [5, -1, 1]])).unwrap();
        assert_eq!(v, CycloNumber::sqrt_int(3));
        let again = CycloNumber::from_literal(12, &v.to_literal()).unwrap();
        assert_eq!(again.to_literal(), v.to_literal());
    }

    #[test]
    fn big_integers_as_strings() {
        let v = CycloNumber::from_literal(1, &json!([[0, "123456789012345678901234567891", 7]])).unwrap();
        let lit = v.to_literal();
        assert_eq!(lit, json!([[0, "123456789012345678901234567891", 7]]));
    }

    #[test]
    fn rejects_malformed_terms() {
        assert!(CycloNumber::from_literal(4, &json!([[1, 1]])).is_err());
        assert!(CycloNumber::from_literal(4, &json!([[1, 1, 0]])).is_err());
        assert!(CycloNumber::from_literal(4, &json!({"k": 1})).is_err());
        assert!(CycloNumber::from_literal(0, &json!([])).is_err());
    }

    #[test]
    fn empty_literal_is_zero() {
        assert!(CycloNumber::from_literal(24, &json!([])).unwrap().is_zero());
    }
}
