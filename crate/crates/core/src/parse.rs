//! Polynomial and spec parsing for the CLI and file formats.
//!
//! Two polynomial input forms are accepted: a JSON array of ascending
//! coefficients (integers or "p/q" strings), and a human syntax like
//! "x^2+ 3/2*x - 1" with implicit multiplication ("2x") allowed.

use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::Value;

use crate::error::{Error, Result};
use crate::polycore::{rat_to_json, Poly, Rat};
use crate::recurrence::RecurrenceSpec;

/// Ascending coefficient array, integers where possible, "p/q" strings otherwise.
pub fn poly_to_json(p: &Poly) -> Value {
    Value::Array(p.coeffs().iter().map(rat_to_json).collect())
}

/// Parse one JSON coefficient: an integer number or an integer/"p/q" string.
/// Non-integer numbers are rejected to keep inputs exact.
fn rat_from_json(v: &Value) -> std::result::Result<Rat, String> {
    match v {
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(Rat::from_integer(BigInt::from(i)))
            } else {
                Err(format!("non-integer numeric coefficient: {n}"))
            }
        }
        Value::String(s) => crate::polycore::rat_from_str(s),
        other => Err(format!("bad coefficient: {other}")),
    }
}

pub fn poly_from_json(v: &Value) -> Result<Poly> {
    let arr = v.as_array().ok_or_else(|| Error::Parse {
        pos: 0,
        msg: "expected a coefficient array".into(),
    })?;
    let mut coeffs = Vec::with_capacity(arr.len());
    for (i, item) in arr.iter().enumerate() {
        let c = rat_from_json(item).map_err(|msg| Error::Parse { pos: i, msg })?;
        coeffs.push(c);
    }
    Ok(Poly::from_coeffs(coeffs))
}

/// Spec JSON: {"A0": [...], "A1": [...], "G0": [...], "G1": [...]}.
pub fn spec_from_json(v: &Value) -> Result<RecurrenceSpec> {
    let obj = v.as_object().ok_or_else(|| Error::Parse {
        pos: 0,
        msg: "expected a spec object".into(),
    })?;
    let mut polys = Vec::with_capacity(4);
    for key in ["A0", "A1", "G0", "G1"] {
        let field = obj.get(key).ok_or_else(|| Error::Parse {
            pos: 0,
            msg: format!("missing field {key}"),
        })?;
        polys.push(poly_from_json(field)?);
    }
    let g1 = polys.pop().unwrap();
    let g0 = polys.pop().unwrap();
    let a1 = polys.pop().unwrap();
    let a0 = polys.pop().unwrap();
    RecurrenceSpec::new(a0, a1, g0, g1)
}

pub fn spec_from_json_str(s: &str) -> Result<RecurrenceSpec> {
    let v: Value = serde_json::from_str(s).map_err(|e| Error::Parse {
        pos: e.column(),
        msg: e.to_string(),
    })?;
    spec_from_json(&v)
}

pub fn spec_to_json(spec: &RecurrenceSpec) -> Value {
    serde_json::json!({
        "A0": poly_to_json(spec.a0()),
        "A1": poly_to_json(spec.a1()),
        "G0": poly_to_json(spec.g0()),
        "G1": poly_to_json(spec.g1()),
    })
}

/// Parse either input form: a JSON array when the text starts with '[',
/// otherwise the human syntax.
pub fn parse_poly(text: &str) -> Result<Poly> {
    if text.trim_start().starts_with('[') {
        let v: Value = serde_json::from_str(text).map_err(|e| Error::Parse {
            pos: e.column().saturating_sub(1),
            msg: e.to_string(),
        })?;
        return poly_from_json(&v);
    }
    HumanParser::new(text).parse()
}

struct HumanParser<'a> {
    text: &'a str,
    bytes: &'a [u8],
    pos: usize,
}

impl<'a> HumanParser<'a> {
    fn new(text: &'a str) -> Self {
        HumanParser {
            text,
            bytes: text.as_bytes(),
            pos: 0,
        }
    }

    fn error(&self, msg: impl Into<String>) -> Error {
        Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        while self.pos < self.bytes.len() && self.bytes[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos == start {
            return Err(self.error("expected digits"));
        }
        self.text[start..self.pos]
            .parse::<BigInt>()
            .map_err(|e| self.error(e.to_string()))
    }

    /// number := integer [ '/' integer ]
    fn number(&mut self) -> Result<Rat> {
        let num = self.integer()?;
        self.skip_ws();
        if self.peek() == Some(b'/') {
            self.pos += 1;
            self.skip_ws();
            let den_pos = self.pos;
            let den = self.integer()?;
            if den.is_zero() {
                self.pos = den_pos;
                return Err(self.error("zero denominator"));
            }
            Ok(Rat::new(num, den))
        } else {
            Ok(Rat::from_integer(num))
        }
    }

    /// exponent following '^'; must be a plain nonnegative integer
    fn exponent(&mut self) -> Result<usize> {
        self.skip_ws();
        match self.peek() {
            Some(c) if c.is_ascii_digit() => {
                let e = self.integer()?;
                let digits = e.to_string();
                digits
                    .parse::<usize>()
                    .map_err(|_| self.error("exponent too large"))
            }
            _ => Err(self.error("expected an exponent")),
        }
    }

    /// term := [number] [['*'] 'x' ['^' exponent]]
    /// Returns (coefficient, degree). Sign is handled by the caller.
    fn term(&mut self) -> Result<(Rat, usize)> {
        self.skip_ws();
        let coeff = match self.peek() {
            Some(c) if c.is_ascii_digit() => Some(self.number()?),
            _ => None,
        };
        self.skip_ws();
        let explicit_star = if self.peek() == Some(b'*') {
            if coeff.is_none() {
                return Err(self.error("unexpected '*'"));
            }
            self.pos += 1;
            self.skip_ws();
            true
        } else {
            false
        };
        if self.peek() == Some(b'x') {
            self.pos += 1;
            let degree = if self.peek() == Some(b'^') {
                self.pos += 1;
                self.exponent()?
            } else {
                1
            };
            Ok((coeff.unwrap_or_else(|| Rat::from_integer(1.into())), degree))
        } else if explicit_star {
            Err(self.error("expected 'x' after '*'"))
        } else {
            match coeff {
                Some(c) => Ok((c, 0)),
                None => Err(self.error("expected a term")),
            }
        }
    }

    fn parse(mut self) -> Result<Poly> {
        self.skip_ws();
        if self.pos == self.bytes.len() {
            return Err(self.error("empty input"));
        }
        let mut acc: Vec<Rat> = Vec::new();
        let mut first = true;
        loop {
            self.skip_ws();
            let negative = match self.peek() {
                Some(b'+') => {
                    self.pos += 1;
                    false
                }
                Some(b'-') => {
                    self.pos += 1;
                    true
                }
                None if !first => break,
                _ if first => false,
                _ => return Err(self.error("expected '+' or '-'")),
            };
            let (coeff, degree) = self.term()?;
            if acc.len() <= degree {
                acc.resize(degree + 1, Rat::zero());
            }
            let signed = if negative { -coeff } else { coeff };
            acc[degree] = &acc[degree] + &signed;
            first = false;
            self.skip_ws();
            if self.pos == self.bytes.len() {
                break;
            }
        }
        Ok(Poly::from_coeffs(acc))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::{rat, rat_int};

    #[test]
    fn human_syntax() {
        assert_eq!(
            parse_poly("x^2+3/2*x").unwrap(),
            Poly::from_coeffs(vec![rat_int(0), rat(3, 2), rat_int(1)])
        );
        assert_eq!(parse_poly("2x").unwrap(), Poly::from_ints(&[0, 2]));
        assert_eq!(parse_poly(" - x + 1 ").unwrap(), Poly::from_ints(&[1, -1]));
        assert_eq!(
            parse_poly("8x^4 - 8x^2 + 1").unwrap(),
            Poly::from_ints(&[1, 0, -8, 0, 8])
        );
        assert_eq!(parse_poly("5").unwrap(), Poly::constant(rat_int(5)));
        // repeated degrees accumulate
        assert_eq!(parse_poly("x + x").unwrap(), Poly::from_ints(&[0, 2]));
    }

    #[test]
    fn malformed_inputs() {
        match parse_poly("x^+2").unwrap_err() {
            Error::Parse { pos, .. } => assert_eq!(pos, 2),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_poly("").is_err());
        assert!(parse_poly("x^2 + ").is_err());
        assert!(parse_poly("3*").is_err());
        assert!(parse_poly("1/0").is_err());
        assert!(parse_poly("y").is_err());
    }

    #[test]
    fn json_array_form() {
        assert_eq!(parse_poly("[0, 1]").unwrap(), Poly::x());
        assert_eq!(
            parse_poly("[0, \"3/2\", 1]").unwrap(),
            Poly::from_coeffs(vec![rat_int(0), rat(3, 2), rat_int(1)])
        );
        assert!(parse_poly("[0.5]").is_err());

        let p = Poly::from_coeffs(vec![rat(1, 3), rat_int(-2), rat_int(1)]);
        assert_eq!(poly_from_json(&poly_to_json(&p)).unwrap(), p);
    }

    #[test]
    fn spec_round_trip() {
        let spec = RecurrenceSpec::fibonacci();
        let v = spec_to_json(&spec);
        let back = spec_from_json(&v).unwrap();
        assert_eq!(back, spec);

        assert!(spec_from_json_str("{\"A0\": [1]}").is_err());
        assert!(spec_from_json_str("{\"A0\": [0], \"A1\": [0,1], \"G0\": [0], \"G1\": [1]}")
            .is_err());
    }

    #[test]
    fn display_parses_back() {
        let polys = [
            Poly::from_ints(&[1, 0, -8, 0, 8]),
            Poly::from_coeffs(vec![rat(-1, 2), rat(3, 4)]),
            Poly::x(),
            Poly::constant(rat_int(-7)),
        ];
        for p in &polys {
            assert_eq!(parse_poly(&p.to_string()).unwrap(), *p, "{p}");
        }
    }
}
