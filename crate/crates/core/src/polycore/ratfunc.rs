//! Reduced rational functions over Q(x).
//!
//! Invariant: numerator and denominator are coprime, the denominator is monic
//! and nonzero. Zero is 0/1.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::polycore::poly::Poly;
use crate::polycore::rat::Rat;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatFunc {
    num: Poly,
    den: Poly,
}

impl RatFunc {
    /// Reduce num/den to canonical form. Errors when `den` is zero.
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        if num.is_zero() {
            return Ok(RatFunc {
                num: Poly::zero(),
                den: Poly::one(),
            });
        }
        let g = num.gcd(&den)?;
        let (num, r) = num.divrem(&g)?;
        debug_assert!(r.is_zero());
        let (den, r) = den.divrem(&g)?;
        debug_assert!(r.is_zero());
        let lc = den.leading().unwrap().clone();
        Ok(RatFunc {
            num: num.scaled(&lc.recip()),
            den: den.make_monic(),
        })
    }

    pub fn zero() -> Self {
        RatFunc {
            num: Poly::zero(),
            den: Poly::one(),
        }
    }

    pub fn constant(c: Rat) -> Self {
        RatFunc {
            num: Poly::constant(c),
            den: Poly::one(),
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        RatFunc {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn as_constant(&self) -> Option<Rat> {
        if self.is_constant() {
            Some(self.num.coeff(0))
        } else {
            None
        }
    }

    /// Whether the value is a polynomial (denominator 1).
    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    /// Canonicalize a pair that is already known to be coprime: only the
    /// monic-denominator scaling is applied, no gcd runs.
    fn from_coprime(num: Poly, den: Poly) -> RatFunc {
        debug_assert!(!den.is_zero());
        if num.is_zero() {
            return RatFunc::zero();
        }
        let lc_inv = den.leading().unwrap().recip();
        RatFunc {
            num: num.scaled(&lc_inv),
            den: den.scaled(&lc_inv),
        }
    }

    /// q/p is already reduced when p/q is.
    pub fn recip(&self) -> Result<RatFunc> {
        if self.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(RatFunc::from_coprime(self.den.clone(), self.num.clone()))
    }

    /// p^e / q^e stays coprime, so no reduction is needed.
    pub fn pow(&self, e: i64) -> Result<RatFunc> {
        if e < 0 {
            return self.recip()?.pow(-e);
        }
        if e == 0 {
            return Ok(RatFunc::constant(Rat::from_integer(1.into())));
        }
        Ok(RatFunc::from_coprime(
            self.num.pow(e as usize),
            self.den.pow(e as usize),
        ))
    }

    /// A(self) for a nonzero polynomial A.
    ///
    /// For reduced p/q the value is (sum a_i p^i q^(m-i)) / q^m, and that pair
    /// is already coprime: a common root y of both would force, via q(y) = 0,
    /// the contradiction a_m p(y)^m = 0.
    pub fn apply_poly(a: &Poly, f: &RatFunc) -> RatFunc {
        let Some(m) = a.degree() else {
            return RatFunc::zero();
        };
        let mut num = Poly::zero();
        let mut p_power = Poly::one();
        let mut q_powers = Vec::with_capacity(m + 1);
        q_powers.push(Poly::one());
        for i in 1..=m {
            q_powers.push(&q_powers[i - 1] * &f.den);
        }
        for (i, c) in a.coeffs().iter().enumerate() {
            if !c.is_zero() {
                num = &num + &(&p_power * &q_powers[m - i]).scaled(c);
            }
            if i < m {
                p_power = &p_power * &f.num;
            }
        }
        RatFunc::from_coprime(num, q_powers.pop().expect("q^m present"))
    }
}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        RatFunc::new(num, &self.den * &rhs.den).expect("nonzero denominators")
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        RatFunc::new(&self.num * &rhs.num, &self.den * &rhs.den).expect("nonzero denominators")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::rat::rat;

    #[test]
    fn reduce_examples() {
        // (x^2 - 1)/(2x - 2) -> (x + 1)/2
        let r = RatFunc::new(Poly::from_ints(&[-1, 0, 1]), Poly::from_ints(&[-2, 2])).unwrap();
        assert_eq!(r.num(), &Poly::from_coeffs(vec![rat(1, 2), rat(1, 2)]));
        assert_eq!(r.den(), &Poly::one());

        // (0, x) -> 0/1
        let r = RatFunc::new(Poly::zero(), Poly::x()).unwrap();
        assert!(r.is_zero());
        assert_eq!(r.den(), &Poly::one());

        // (1 - x^2)/(4x^2 - 4) -> -1/4
        let r = RatFunc::new(Poly::from_ints(&[1, 0, -1]), Poly::from_ints(&[-4, 0, 4])).unwrap();
        assert_eq!(r.as_constant(), Some(rat(-1, 4)));

        assert_eq!(
            RatFunc::new(Poly::one(), Poly::zero()).unwrap_err(),
            Error::ZeroDenominator
        );
    }

    #[test]
    fn arithmetic_stays_reduced() {
        let a = RatFunc::new(Poly::one(), Poly::from_ints(&[4, 0, 1])).unwrap();
        let b = RatFunc::new(Poly::from_ints(&[4, 0, 1]), Poly::one()).unwrap();
        let prod = &a * &b;
        assert_eq!(prod.as_constant(), Some(rat(1, 1)));

        let s = &a - &a;
        assert!(s.is_zero());
        assert_eq!(s.den(), &Poly::one());
    }

    #[test]
    fn apply_poly_matches_composition() {
        // A = t^2 + 1 applied to f = 1/x gives (1 + x^2)/x^2
        let a = Poly::from_ints(&[1, 0, 1]);
        let f = RatFunc::new(Poly::one(), Poly::x()).unwrap();
        let out = RatFunc::apply_poly(&a, &f);
        assert_eq!(out.num(), &Poly::from_ints(&[1, 0, 1]));
        assert_eq!(out.den(), &Poly::from_ints(&[0, 0, 1]));
    }
}
