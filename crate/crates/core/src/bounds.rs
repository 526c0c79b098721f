//! Projective heights on C(x) and the explicit degree-bound certificate.
//!
//! Heights are implemented only on C(x), where the height of a reduced p/q is
//! max(deg p, deg q). Heights on the quadratic extension appear solely through
//! the numeric ledger bounds; none of the extension elements is materialized.
//!
//! Inside the certificate formulas the zero polynomial counts as degree 0;
//! the certificate flags whenever that convention was used.

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::polycore::RatFunc;
use crate::recurrence::RecurrenceSpec;

/// Height value; the zero function has infinite height.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Height {
    Finite(u64),
    Infinite,
}

impl Height {
    pub fn finite(&self) -> Option<u64> {
        match self {
            Height::Finite(v) => Some(*v),
            Height::Infinite => None,
        }
    }
}

impl PartialOrd for Height {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Height {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        match (self, other) {
            (Height::Infinite, Height::Infinite) => std::cmp::Ordering::Equal,
            (Height::Infinite, _) => std::cmp::Ordering::Greater,
            (_, Height::Infinite) => std::cmp::Ordering::Less,
            (Height::Finite(a), Height::Finite(b)) => a.cmp(b),
        }
    }
}

/// Projective height of a reduced rational function over C(x):
/// max of numerator and denominator degree; zero exactly on nonzero constants.
pub fn height(r: &RatFunc) -> Height {
    if r.is_zero() {
        return Height::Infinite;
    }
    let num_deg = r.num().degree().expect("nonzero numerator") as u64;
    let den_deg = r.den().degree().expect("nonzero denominator") as u64;
    Height::Finite(num_deg.max(den_deg))
}

/// Named right-hand sides of the inequality chain, evaluated at one deg h.
///
/// Each entry reproduces one displayed bound independently; the left-hand
/// quantities (genus, valuation-set size, extension heights) are never
/// computed.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct BoundLedger {
    pub deg_h: u64,
    /// 4 * C1 * deg_h^2
    pub genus_bound: u64,
    /// (8(deg A0 + C1 + C2) + 4) * deg_h
    pub s_bound: u64,
    /// 4(2 deg A0 + 4 C1 + 2 C2 + 1) * deg_h^2
    pub hu2_bound: u64,
    /// 4 * deg_h
    pub s_infinity_bound: u64,
}

impl BoundLedger {
    pub fn to_json(&self) -> Value {
        json!({
            "deg_h": self.deg_h,
            "genus_bound": self.genus_bound,
            "s_bound": self.s_bound,
            "hu2_bound": self.hu2_bound,
            "s_infinity_bound": self.s_infinity_bound,
        })
    }
}

/// The constant chain of the degree bound: C1, C2, the closed-form C and the
/// final bound deg g < 2C, all functions of the four input degrees only.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct BoundCertificate {
    pub deg_a0: u64,
    pub deg_a1: u64,
    pub deg_g0: u64,
    pub deg_g1: u64,
    /// max(deg A0, 2 deg A1)
    pub c1: u64,
    /// max(2 deg G1, deg G0 + deg G1 + deg A1, 2 deg G0 + deg A0)
    pub c2: u64,
    /// 16 (2(deg A0 + deg G0 + deg G1) + 7 C1 + 2 C2 + 1) (deg G0 + deg G1 + 6 C1)
    pub big_c: u64,
    /// 2 * big_c; the sweep asserts deg g < this.
    pub deg_g_bound: u64,
    /// True when some input polynomial was zero and deg(0) := 0 was applied.
    pub zero_degree_convention_used: bool,
}

impl BoundCertificate {
    /// Evaluate the ledger at a given inner degree. Requires deg_h >= 2.
    pub fn ledger(&self, deg_h: u64) -> Result<BoundLedger> {
        if deg_h < 2 {
            return Err(Error::DegHTooSmall { got: deg_h });
        }
        let sq = deg_h * deg_h;
        Ok(BoundLedger {
            deg_h,
            genus_bound: 4 * self.c1 * sq,
            s_bound: (8 * (self.deg_a0 + self.c1 + self.c2) + 4) * deg_h,
            hu2_bound: 4 * (2 * self.deg_a0 + 4 * self.c1 + 2 * self.c2 + 1) * sq,
            s_infinity_bound: 4 * deg_h,
        })
    }

    pub fn to_json(&self) -> Value {
        json!({
            "deg_a0": self.deg_a0,
            "deg_a1": self.deg_a1,
            "deg_g0": self.deg_g0,
            "deg_g1": self.deg_g1,
            "c1": self.c1,
            "c2": self.c2,
            "c": self.big_c,
            "deg_g_bound": self.deg_g_bound,
            "zero_degree_convention_used": self.zero_degree_convention_used,
        })
    }
}

/// Compute the certificate from the degrees of a validated spec.
pub fn constants_certificate(spec: &RecurrenceSpec) -> Result<BoundCertificate> {
    spec.require_validated()?;
    let deg_a0 = spec.a0().degree_or_zero() as u64;
    let deg_a1 = spec.a1().degree_or_zero() as u64;
    let deg_g0 = spec.g0().degree_or_zero() as u64;
    let deg_g1 = spec.g1().degree_or_zero() as u64;
    let zero_used = spec.a0().is_zero()
        || spec.a1().is_zero()
        || spec.g0().is_zero()
        || spec.g1().is_zero();

    let c1 = deg_a0.max(2 * deg_a1);
    let c2 = (2 * deg_g1)
        .max(deg_g0 + deg_g1 + deg_a1)
        .max(2 * deg_g0 + deg_a0);
    let big_c = 16 * (2 * (deg_a0 + deg_g0 + deg_g1) + 7 * c1 + 2 * c2 + 1)
        * (deg_g0 + deg_g1 + 6 * c1);

    Ok(BoundCertificate {
        deg_a0,
        deg_a1,
        deg_g0,
        deg_g1,
        c1,
        c2,
        big_c,
        deg_g_bound: 2 * big_c,
        zero_degree_convention_used: zero_used,
    })
}

/// Certificate plus ledger in one call.
pub fn bound_chain(spec: &RecurrenceSpec, deg_h: u64) -> Result<BoundLedger> {
    constants_certificate(spec)?.ledger(deg_h)
}
