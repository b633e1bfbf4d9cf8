//! High-precision decimal evaluation of cyclotomic numbers using fixed-point
//! big-integer arithmetic (scale 10^(digits + GUARD)).

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::number::CycloNumber;

const GUARD: u32 = 20;
/// Largest supported number of decimal digits.
pub const MAX_DIGITS: u32 = 50;

/// Complex approximation with a rigorous absolute error bound on each part.
#[derive(Clone, Debug)]
pub struct Approx {
    pub re: f64,
    pub im: f64,
    /// Bound on |exact - printed decimal| for each of the real and imaginary parts.
    pub err: f64,
    pub digits: u32,
    re_scaled: BigInt,
    im_scaled: BigInt,
}

impl Approx {
    /// Real part as a decimal string with `digits` places after the point.
    pub fn re_decimal(&self) -> String {
        format_scaled(&self.re_scaled, self.digits)
    }

    pub fn im_decimal(&self) -> String {
        format_scaled(&self.im_scaled, self.digits)
    }

    /// Whether |re - target| and |im| are both within `tol`.
    pub fn close_to_real(&self, target: f64, tol: f64) -> bool {
        (self.re - target).abs() <= tol + self.err && self.im.abs() <= tol + self.err
    }

    pub(crate) fn re_exact_sign(&self) -> i32 {
        if self.re_scaled.is_positive() {
            1
        } else if self.re_scaled.is_negative() {
            -1
        } else {
            0
        }
    }
}

fn pow10(e: u32) -> BigInt {
    BigInt::from(10u32).pow(e)
}

/// arctan(1/x) at fixed-point scale `w`.
fn atan_inv(x: i64, w: &BigInt) -> BigInt {
    let x2 = BigInt::from(x * x);
    let mut term = w / BigInt::from(x);
    let mut sum = BigInt::zero();
    let mut k: i64 = 0;
    while !term.is_zero() {
        let t = &term / BigInt::from(2 * k + 1);
        if k % 2 == 0 {
            sum += t;
        } else {
            sum -= t;
        }
        term /= &x2;
        k += 1;
    }
    sum
}

fn pi_scaled(w: &BigInt) -> BigInt {
    atan_inv(5, w) * 16 - atan_inv(239, w) * 4
}

/// (cos θ, sin θ) at scale `w` for θ given at scale `w`.
fn cos_sin(theta: &BigInt, w: &BigInt) -> (BigInt, BigInt) {
    let mut cos = BigInt::zero();
    let mut sin = BigInt::zero();
    let mut term = w.clone();
    let mut n: i64 = 0;
    while !term.is_zero() {
        match n % 4 {
            0 => cos += &term,
            1 => sin += &term,
            2 => cos -= &term,
            _ => sin -= &term,
        }
        n += 1;
        term = &term * theta / w / BigInt::from(n);
    }
    (cos, sin)
}

fn format_scaled(v: &BigInt, digits: u32) -> String {
    let neg = v.is_negative();
    let s = v.abs().to_string();
    let d = digits as usize;
    let padded = if s.len() <= d {
        format!("{}{}", "0".repeat(d + 1 - s.len()), s)
    } else {
        s
    };
    let (int_part, frac) = padded.split_at(padded.len() - d);
    let body = if d == 0 {
        int_part.to_string()
    } else {
        format!("{int_part}.{frac}")
    };
    if neg {
        format!("-{body}")
    } else {
        body
    }
}

/// Round a value at scale 10^(digits + GUARD) to scale 10^digits.
fn round_guard(v: &BigInt) -> BigInt {
    let g = pow10(GUARD);
    let half = &g / 2;
    if v.is_negative() {
        let q: BigInt = (-v + &half) / &g;
        -q
    } else {
        (v + &half) / &g
    }
}

impl CycloNumber {
    /// Evaluate to `digits` decimal places (at most [`MAX_DIGITS`]).
    pub fn approx(&self, digits: u32) -> Approx {
        let digits = digits.min(MAX_DIGITS);
        let (num, den) = self.numerators();
        if self.is_zero() {
            return Approx {
                re: 0.0,
                im: 0.0,
                err: 0.0,
                digits,
                re_scaled: BigInt::zero(),
                im_scaled: BigInt::zero(),
            };
        }
        let w = pow10(digits + GUARD);
        let n = self.conductor() as i64;
        let two_pi = pi_scaled(&w) * 2;
        let mut re = BigInt::zero();
        let mut im = BigInt::zero();
        let mut coeff_mass = BigInt::zero();
        for (j, c) in num.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            coeff_mass += c.abs();
            // use the representative angle in (-π, π]
            let j = j as i64;
            let jj = if 2 * j > n { j - n } else { j };
            let theta = &two_pi * BigInt::from(jj) / BigInt::from(n);
            let (cs, sn) = cos_sin(&theta, &w);
            re += c * cs;
            im += c * sn;
        }
        let re = &re / den;
        let im = &im / den;
        let re_scaled = round_guard(&re);
        let im_scaled = round_guard(&im);
        // each fixed-point evaluation is off by at most a few hundred units of 10^-(digits+GUARD)
        let mass = (coeff_mass.to_f64().unwrap_or(f64::MAX) / den.to_f64().unwrap_or(1.0)) + 1.0;
        let err = 0.5 * 10f64.powi(-(digits as i32))
            + mass * 1e3 * 10f64.powi(-((digits + GUARD) as i32));
        let re_f = format_scaled(&re_scaled, digits).parse::<f64>().unwrap_or(f64::NAN);
        let im_f = format_scaled(&im_scaled, digits).parse::<f64>().unwrap_or(f64::NAN);
        Approx {
            re: re_f,
            im: im_f,
            err,
            digits,
            re_scaled,
            im_scaled,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pi_digits() {
        let w = pow10(40);
        let p = pi_scaled(&w);
        assert!(p.to_string().starts_with("31415926535897932384626433832795028841"));
    }

    #[test]
    fn zero_is_exact() {
        let a = CycloNumber::zero(13).approx(30);
        assert_eq!(a.re, 0.0);
        assert_eq!(a.err, 0.0);
    }

    #[test]
    fn root_of_unity_values() {
        let a = CycloNumber::root_of_unity(12, 1).approx(30);
        assert_eq!(a.im_decimal(), "0.500000000000000000000000000000");
        assert!(a.re_decimal().starts_with("0.86602540378443864676372317075"));
        let b = CycloNumber::root_of_unity(7, 5).approx(10);
        let exact = (2.0 * std::f64::consts::PI * 5.0 / 7.0).sin();
        assert!((b.im - exact).abs() < 1e-10);
    }

    #[test]
    fn negative_values_format() {
        let a = CycloNumber::from_small_terms(1, &[(0, -3, 2)]).approx(3);
        assert_eq!(a.re_decimal(), "-1.500");
        let b = CycloNumber::from_small_terms(1, &[(0, -1, 200)]).approx(3);
        assert_eq!(b.re_decimal(), "-0.005");
    }
}
