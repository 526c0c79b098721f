//! Second-order polynomial recurrences G_{n+2} = A1*G_{n+1} + A0*G_n.
//!
//! A spec carries its validation flags from construction: simple (distinct
//! characteristic roots), non-degenerate (nonconstant root ratio) and minimal
//! (no lower-order relation). The criteria, bound and sweep layers refuse
//! specs that are not validated on all three.


use crate::error::{Error, Result};
use crate::polycore::{rat_int, Poly, RatFunc};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct ValidationFlags {
    pub simple: bool,
    pub non_degenerate: bool,
    pub minimal: bool,
}

impl ValidationFlags {
    pub fn all(&self) -> bool {
        self.simple && self.non_degenerate && self.minimal
    }
}

/// Symmetric Binet invariants of a simple spec.
///
/// Only the symmetric functions of the characteristic roots are rational in x:
/// the discriminant A1^2 + 4*A0, the minimality numerator
/// G1^2 - G0*G1*A1 - A0*G0^2, and their ratio, the product of the two Binet
/// coefficients. The roots themselves live in a quadratic extension and are
/// never materialized.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BinetData {
    pub discriminant: Poly,
    pub minimality_numerator: Poly,
    pub pi_product: RatFunc,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RecurrenceSpec {
    a0: Poly,
    a1: Poly,
    g0: Poly,
    g1: Poly,
    flags: ValidationFlags,
}

impl RecurrenceSpec {
    /// Construct and validate. The only hard construction error is A0 = 0;
    /// the three validation flags are computed and cached.
    pub fn new(a0: Poly, a1: Poly, g0: Poly, g1: Poly) -> Result<Self> {
        if a0.is_zero() {
            return Err(Error::ZeroRecurrenceCoefficient);
        }
        let discriminant = Self::discriminant_of(&a0, &a1);
        let simple = !discriminant.is_zero();
        // The root ratio r satisfies r + 1/r = -A1^2/A0 - 2, so it is constant
        // exactly when A1^2/A0 reduces to a constant.
        let ratio = RatFunc::new(&a1 * &a1, a0.clone()).expect("a0 nonzero");
        let non_degenerate = !ratio.is_constant();
        let minimal = !Self::minimality_numerator_of(&a0, &a1, &g0, &g1).is_zero();
        Ok(RecurrenceSpec {
            a0,
            a1,
            g0,
            g1,
            flags: ValidationFlags {
                simple,
                non_degenerate,
                minimal,
            },
        })
    }

    fn discriminant_of(a0: &Poly, a1: &Poly) -> Poly {
        &(a1 * a1) + &a0.scaled(&rat_int(4))
    }

    fn minimality_numerator_of(a0: &Poly, a1: &Poly, g0: &Poly, g1: &Poly) -> Poly {
        &(&(g1 * g1) - &(&(g0 * g1) * a1)) - &(&(a0 * g0) * g0)
    }

    /// The Fibonacci polynomials: A0 = 1, A1 = x, G0 = 0, G1 = 1.
    pub fn fibonacci() -> Self {
        RecurrenceSpec::new(Poly::one(), Poly::x(), Poly::zero(), Poly::one())
            .expect("fibonacci spec is valid")
    }

    /// The Chebyshev polynomials of the first kind: A0 = -1, A1 = 2x, G0 = 1, G1 = x.
    pub fn chebyshev() -> Self {
        RecurrenceSpec::new(
            Poly::constant(rat_int(-1)),
            Poly::from_ints(&[0, 2]),
            Poly::one(),
            Poly::x(),
        )
        .expect("chebyshev spec is valid")
    }

    pub fn a0(&self) -> &Poly {
        &self.a0
    }

    pub fn a1(&self) -> &Poly {
        &self.a1
    }

    pub fn g0(&self) -> &Poly {
        &self.g0
    }

    pub fn g1(&self) -> &Poly {
        &self.g1
    }

    pub fn validate(&self) -> ValidationFlags {
        self.flags
    }

    pub fn is_validated(&self) -> bool {
        self.flags.all()
    }

    /// Require all three validation flags before consuming the spec.
    pub fn require_validated(&self) -> Result<()> {
        if self.is_validated() {
            Ok(())
        } else {
            Err(Error::InvalidSpec)
        }
    }

    /// G_n by exact iteration of the recurrence.
    pub fn term(&self, n: usize) -> Poly {
        self.terms(n).pop().expect("terms up to n is nonempty")
    }

    /// G_0 ..= G_max, the shared read-only prefix used by sweep workers.
    pub fn terms(&self, max: usize) -> Vec<Poly> {
        let mut out = Vec::with_capacity(max + 1);
        out.push(self.g0.clone());
        if max >= 1 {
            out.push(self.g1.clone());
        }
        for n in 2..=max {
            let next = &(&self.a1 * &out[n - 1]) + &(&self.a0 * &out[n - 2]);
            out.push(next);
        }
        out.truncate(max + 1);
        out
    }

    /// Discriminant, minimality numerator and the reduced Binet-coefficient
    /// product -N/Delta. Errors for non-simple specs.
    pub fn binet_data(&self) -> Result<BinetData> {
        let discriminant = Self::discriminant_of(&self.a0, &self.a1);
        if discriminant.is_zero() {
            return Err(Error::NonSimpleSpec);
        }
        let numerator =
            Self::minimality_numerator_of(&self.a0, &self.a1, &self.g0, &self.g1);
        let pi_product = RatFunc::new(-&numerator, discriminant.clone())?;
        Ok(BinetData {
            discriminant,
            minimality_numerator: numerator,
            pi_product,
        })
    }
}

/// Recover (A0, A1) from four consecutive terms, when the 2x2 system is
/// nonsingular. Returns None when g1^2 - g0*g2 vanishes.
pub fn recover_coeffs(g0: &Poly, g1: &Poly, g2: &Poly, g3: &Poly) -> Option<(RatFunc, RatFunc)> {
    let det = &(g1 * g1) - &(g0 * g2);
    if det.is_zero() {
        return None;
    }
    let a0 = RatFunc::new(&(g1 * g3) - &(g2 * g2), det.clone()).expect("nonzero det");
    let a1 = RatFunc::new(&(g1 * g2) - &(g0 * g3), det).expect("nonzero det");
    Some((a0, a1))
}
