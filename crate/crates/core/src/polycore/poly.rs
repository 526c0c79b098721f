//! Dense univariate polynomials over the rationals.
//!
//! Coefficients are stored in ascending degree order: `coeffs[i]` holds the
//! coefficient of x^i. The vector is empty for the zero polynomial and its
//! last entry is nonzero otherwise.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::polycore::rat::{rat_int, Rat};

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rat::one())
    }

    /// The identity polynomial x.
    pub fn x() -> Self {
        Poly::from_coeffs(vec![Rat::zero(), Rat::one()])
    }

    pub fn constant(c: Rat) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// c * x^deg.
    pub fn monomial(deg: usize, c: Rat) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rat::zero(); deg + 1];
        coeffs[deg] = c;
        Poly { coeffs }
    }

    /// Build from ascending coefficients, stripping trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::from_coeffs(coeffs.iter().map(|&c| rat_int(c)).collect())
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    /// Coefficient of x^i (zero beyond the degree).
    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    /// Degree with the deg(0) := 0 convention used by the bound formulas.
    pub fn degree_or_zero(&self) -> usize {
        self.degree().unwrap_or(0)
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// The constant value when `self` is constant (zero polynomial gives 0).
    pub fn as_constant(&self) -> Option<Rat> {
        if self.is_constant() {
            Some(self.coeff(0))
        } else {
            None
        }
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    /// Scalar multiple of `self`.
    pub fn scaled(&self, c: &Rat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Monic associate; the zero polynomial stays zero.
    pub fn make_monic(&self) -> Poly {
        match self.leading() {
            None => Poly::zero(),
            Some(lc) => self.scaled(&lc.recip()),
        }
    }

    /// Exact Horner evaluation.
    pub fn eval(&self, v: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = &acc * v + c;
        }
        acc
    }

    /// Composition self(inner(x)), by Horner over polynomials.
    pub fn compose(&self, inner: &Poly) -> Poly {
        let mut acc = Poly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Poly::constant(c.clone());
        }
        acc
    }

    /// f(x + t), the translation used by normal-form classification.
    pub fn shifted(&self, t: &Rat) -> Poly {
        self.compose(&Poly::from_coeffs(vec![t.clone(), Rat::one()]))
    }

    pub fn pow(&self, e: usize) -> Poly {
        let mut result = Poly::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Euclidean division: f = q*d + r with deg r < deg d (or r = 0).
    pub fn divrem(&self, d: &Poly) -> Result<(Poly, Poly)> {
        let dd = d.degree().ok_or(Error::DivisionByZeroPoly)?;
        let lc_inv = d.leading().unwrap().recip();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Poly::zero(), self.clone()));
        }
        let mut quot = vec![Rat::zero(); rem.len() - dd];
        while rem.len() > dd {
            let k = rem.len() - 1;
            let c = rem.pop().unwrap();
            if c.is_zero() {
                continue;
            }
            let q = &c * &lc_inv;
            for i in 0..dd {
                let delta = &q * &d.coeffs[i];
                rem[k - dd + i] = &rem[k - dd + i] - &delta;
            }
            quot[k - dd] = q;
        }
        Ok((Poly::from_coeffs(quot), Poly::from_coeffs(rem)))
    }

    /// Monic greatest common divisor. Errors when both inputs are zero.
    ///
    /// Runs a primitive pseudo-remainder sequence over the integers: rational
    /// Euclidean remainders suffer heavy coefficient growth (every rational
    /// operation also pays an integer gcd), while primitive integer
    /// remainders stay small.
    pub fn gcd(&self, other: &Poly) -> Result<Poly> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::GcdOfZeros);
        }
        if self.is_zero() {
            return Ok(other.make_monic());
        }
        if other.is_zero() {
            return Ok(self.make_monic());
        }
        let mut a = int_primitive(self);
        let mut b = int_primitive(other);
        if int_deg(&a) < int_deg(&b) {
            std::mem::swap(&mut a, &mut b);
        }
        loop {
            if int_deg(&b) == 0 {
                return Ok(Poly::one());
            }
            let r = int_pseudo_rem(&a, &b);
            if r.is_empty() {
                let monic_den = b.last().unwrap().clone();
                let coeffs = b
                    .iter()
                    .map(|c| Rat::new(c.clone(), monic_den.clone()))
                    .collect();
                return Ok(Poly::from_coeffs(coeffs));
            }
            a = b;
            b = int_make_primitive(r);
        }
    }

    /// Whether `self` is a square in C\[x\]: returns the monic u with
    /// self = lc * u^2 when the monic associate is a perfect square.
    ///
    /// Squareness is judged over C, so the leading coefficient itself need not
    /// be a rational square.
    pub fn sqrt_in_cx(&self) -> Result<Option<Poly>> {
        let n = self.degree().ok_or(Error::SqrtOfZero)?;
        if n % 2 == 1 {
            return Ok(None);
        }
        let monic = self.make_monic();
        let m = n / 2;
        // Solve u = x^m + u_{m-1} x^{m-1} + ... descending from the top:
        // the x^(2m-k) coefficient of u^2 is 2*u_{m-k} plus terms in already
        // determined coefficients.
        let mut u = vec![Rat::zero(); m + 1];
        u[m] = Rat::one();
        let two = rat_int(2);
        for k in 1..=m {
            let target = monic.coeff(2 * m - k);
            let mut known = Rat::zero();
            for i in (m - k + 1)..=m {
                let rest = 2 * m - k - i;
                if rest > m - k && rest <= m {
                    known = &known + &(&u[i] * &u[rest]);
                }
            }
            u[m - k] = &(&target - &known) / &two;
        }
        let u = Poly::from_coeffs(u);
        if (&u * &u) == monic {
            Ok(Some(u))
        } else {
            Ok(None)
        }
    }
}

/// Integer polynomial helpers for the gcd kernel. Representation: ascending
/// coefficients, trailing zeros stripped, empty = zero.
use num_bigint::BigInt;
use num_integer::Integer;

fn int_deg(p: &[BigInt]) -> usize {
    p.len().saturating_sub(1)
}

fn int_trim(mut p: Vec<BigInt>) -> Vec<BigInt> {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
    p
}

/// Divide by the content and normalize the leading coefficient positive.
fn int_make_primitive(p: Vec<BigInt>) -> Vec<BigInt> {
    let p = int_trim(p);
    if p.is_empty() {
        return p;
    }
    let mut content = BigInt::from(0);
    for c in &p {
        content = content.gcd(c);
    }
    if p.last().unwrap().sign() == num_bigint::Sign::Minus {
        content = -content;
    }
    p.into_iter().map(|c| c / &content).collect()
}

/// Clear denominators and reduce to a primitive integer polynomial.
fn int_primitive(p: &Poly) -> Vec<BigInt> {
    let mut denom_lcm = BigInt::from(1);
    for c in p.coeffs() {
        denom_lcm = denom_lcm.lcm(c.denom());
    }
    let ints = p
        .coeffs()
        .iter()
        .map(|c| c.numer() * (&denom_lcm / c.denom()))
        .collect();
    int_make_primitive(ints)
}

/// Pseudo-remainder of a by b: the remainder of lc(b)^(deg a - deg b + 1) * a.
fn int_pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = int_deg(b);
    let lead = b.last().expect("nonzero divisor");
    let mut rem: Vec<BigInt> = a.to_vec();
    let mut scale_steps = int_deg(a) as i64 - db as i64 + 1;
    while rem.len() > db {
        let k = rem.len() - 1;
        let top = rem.pop().unwrap();
        if top.is_zero() {
            scale_steps -= 1;
            continue;
        }
        for coeff in rem.iter_mut() {
            *coeff *= lead;
        }
        for i in 0..db {
            rem[k - db + i] -= &top * &b[i];
        }
        rem = int_trim(rem);
        scale_steps -= 1;
    }
    // account for skipped scalings so the result is the exact pseudo-remainder
    for _ in 0..scale_steps.max(0) {
        for coeff in rem.iter_mut() {
            *coeff *= lead;
        }
    }
    int_trim(rem)
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(&self.coeff(i) + &rhs.coeff(i));
        }
        Poly::from_coeffs(out)
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(&self.coeff(i) - &rhs.coeff(i));
        }
        Poly::from_coeffs(out)
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        Poly::from_coeffs(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for i in (0..self.coeffs.len()).rev() {
            let c = &self.coeffs[i];
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit = mag.is_one();
            if i == 0 || !unit {
                write!(f, "{mag}")?;
            }
            if i > 0 {
                if !unit {
                    write!(f, "*")?;
                }
                write!(f, "x")?;
                if i > 1 {
                    write!(f, "^{i}")?;
                }
            }
        }
        Ok(())
    }
}
