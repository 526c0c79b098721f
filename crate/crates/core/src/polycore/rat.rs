//! Exact rational scalars.
//!
//! `Rat` is an arbitrary-precision rational, always in lowest terms with a
//! positive denominator (the canonical zero is 0/1). The representation is
//! `num_rational::BigRational`, which maintains exactly these invariants.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rat = BigRational;

/// Rational from an integer.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Rational from a numerator/denominator pair. Panics if `d == 0`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// Exact integer power with a signed exponent. Panics on `0^negative`.
pub fn rat_pow(base: &Rat, exp: i64) -> Rat {
    if exp == 0 {
        return Rat::one();
    }
    let positive = if exp < 0 {
        assert!(!base.is_zero(), "zero to a negative power");
        base.recip()
    } else {
        base.clone()
    };
    let mut result = Rat::one();
    let mut b = positive;
    let mut e = exp.unsigned_abs();
    while e > 0 {
        if e & 1 == 1 {
            result = &result * &b;
        }
        e >>= 1;
        if e > 0 {
            b = &b * &b;
        }
    }
    result
}

/// Lossy conversion to f64 for the numeric identity checker.
pub fn rat_to_f64(r: &Rat) -> f64 {
    r.to_f64().expect("rational out of f64 range")
}

/// JSON value for a rational: plain number for small integers, string otherwise.
pub fn rat_to_json(r: &Rat) -> serde_json::Value {
    if r.is_integer() {
        if let Some(i) = r.numer().to_i64() {
            return serde_json::Value::from(i);
        }
        return serde_json::Value::from(r.numer().to_string());
    }
    serde_json::Value::from(format!("{}/{}", r.numer(), r.denom()))
}

/// Parse "p", "-p" or "p/q" into a rational. Returns a plain message on failure.
pub fn rat_from_str(s: &str) -> std::result::Result<Rat, String> {
    let s = s.trim();
    if s.is_empty() {
        return Err("empty rational".into());
    }
    match s.split_once('/') {
        Some((num, den)) => {
            let n: BigInt = num
                .trim()
                .parse()
                .map_err(|_| format!("bad numerator: {num:?}"))?;
            let d: BigInt = den
                .trim()
                .parse()
                .map_err(|_| format!("bad denominator: {den:?}"))?;
            if d.is_zero() {
                return Err("zero denominator".into());
            }
            Ok(Rat::new(n, d))
        }
        None => {
            let n: BigInt = s.parse().map_err(|_| format!("bad integer: {s:?}"))?;
            Ok(Rat::from_integer(n))
        }
    }
}

/// True when the rational is a nonnegative integer sign-wise usable as a sign marker.
pub fn is_negative(r: &Rat) -> bool {
    r.numer().is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form() {
        let r = Rat::new(BigInt::from(4), BigInt::from(-6));
        assert_eq!(r, rat(-2, 3));
        assert_eq!(r.denom(), &BigInt::from(3));
    }

    #[test]
    fn pow_signs() {
        assert_eq!(rat_pow(&rat(2, 3), 2), rat(4, 9));
        assert_eq!(rat_pow(&rat(2, 3), -1), rat(3, 2));
        assert_eq!(rat_pow(&rat(5, 7), 0), rat_int(1));
    }

    #[test]
    fn parse_forms() {
        assert_eq!(rat_from_str("3").unwrap(), rat_int(3));
        assert_eq!(rat_from_str("-3/2").unwrap(), rat(-3, 2));
        assert_eq!(rat_from_str("4/-6").unwrap(), rat(-2, 3));
        assert!(rat_from_str("1/0").is_err());
        assert!(rat_from_str("x").is_err());
    }
}
