//! Condition evaluation for a (spec, inner factor, index) triple.
//!
//! Every flag is an exact polynomial identity check on the spec data. The
//! clause logic decides when the no-vanishing-subsum hypothesis is licensed;
//! it never inspects the subsum itself, since the individual Binet terms live
//! off C(x). The bound layer consumes a licensed clause as an assumption.

use serde_json::{json, Value};

use crate::decompose::{classify, member_poly, member_rat, ClassTag};
use crate::error::{Error, Result};
use crate::polycore::{rat_int, rat_to_json, Poly, Rat, RatFunc};
use crate::recurrence::RecurrenceSpec;

/// The representation pi_product = coefficient * A0^exponent with a constant
/// coefficient and minimal exponent.
#[derive(Clone, PartialEq, Debug)]
pub struct PowerForm {
    pub coefficient: Rat,
    pub exponent: usize,
}

/// Which clause licensed the no-vanishing-subsum conclusion.
///
/// The first block requires a constant A0 and an inner factor that is neither
/// cyclic nor dihedral; the second block only excludes cyclic inner factors.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Clause {
    FirstEqualCoeffs,
    FirstSumShift,
    FirstNegDouble,
    SecondPowerForm,
    SecondConstantCoeffs,
    SecondSumShift,
    SecondNegDouble,
}

impl Clause {
    pub fn label(&self) -> &'static str {
        match self {
            Clause::FirstEqualCoeffs => "first.i",
            Clause::FirstSumShift => "first.ii",
            Clause::FirstNegDouble => "first.iii",
            Clause::SecondPowerForm => "second.i",
            Clause::SecondConstantCoeffs => "second.ii",
            Clause::SecondSumShift => "second.iii",
            Clause::SecondNegDouble => "second.iv",
        }
    }
}

impl std::fmt::Display for Clause {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}

/// All condition flags for one (spec, h, n) triple.
#[derive(Clone, Debug)]
pub struct ConditionReport {
    pub n: usize,
    pub a0_constant: bool,
    pub a0_degree_one: bool,
    pub sqrt_delta_polynomial: bool,
    /// 2*G1 = G0*A1, i.e. the two Binet coefficients coincide.
    pub pi_equal: bool,
    /// The Binet-coefficient product is a constant.
    pub pi_product_constant: bool,
    /// G1 = 2*A0 + G0^2 and G0 = A1.
    pub case_sum_shift: bool,
    /// G1 = -2*A0 and G0 = A1.
    pub case_neg_double: bool,
    pub pi_product_power_form: Option<PowerForm>,
    pub all_terms_in_ch: bool,
    pub h_class: ClassTag,
    pub subsum_membership: bool,
    pub theorem_main_applies: Option<Clause>,
}

impl ConditionReport {
    pub fn to_json(&self) -> Value {
        json!({
            "n": self.n,
            "a0_constant": self.a0_constant,
            "a0_degree_one": self.a0_degree_one,
            "sqrt_delta_polynomial": self.sqrt_delta_polynomial,
            "pi_equal": self.pi_equal,
            "pi_product_constant": self.pi_product_constant,
            "case_sum_shift": self.case_sum_shift,
            "case_neg_double": self.case_neg_double,
            "pi_product_power_form": self.pi_product_power_form.as_ref().map(|pf| {
                json!({ "coefficient": rat_to_json(&pf.coefficient), "exponent": pf.exponent })
            }),
            "all_terms_in_ch": self.all_terms_in_ch,
            "h_class": self.h_class.as_str(),
            "subsum_membership": self.subsum_membership,
            "theorem_main_applies": self.theorem_main_applies.map(|c| c.label()),
        })
    }
}

fn require_inner(h: &Poly) -> Result<usize> {
    match h.degree() {
        Some(d) if d >= 2 => Ok(d),
        Some(d) => Err(Error::InnerDegreeTooSmall { actual: d }),
        None => Err(Error::InnerDegreeTooSmall { actual: 0 }),
    }
}

/// Whether pi_product * A0^n lies in C(h(x)).
///
/// For non-cyclic h this is equivalent to a proper vanishing subsum of the
/// four-term Binet identity; for cyclic h the membership is still computed
/// and the caller interprets.
pub fn subsum_membership(spec: &RecurrenceSpec, h: &Poly, n: usize) -> Result<bool> {
    spec.require_validated()?;
    require_inner(h)?;
    let binet = spec.binet_data()?;
    let shifted = &binet.pi_product * &RatFunc::from_poly(spec.a0().pow(n));
    Ok(member_rat(&shifted, h))
}

/// Membership profile for n = 0..=max_n; the criterion genuinely depends on
/// n whenever A0 is nonconstant.
pub fn subsum_membership_profile(
    spec: &RecurrenceSpec,
    h: &Poly,
    max_n: usize,
) -> Result<Vec<bool>> {
    spec.require_validated()?;
    require_inner(h)?;
    let binet = spec.binet_data()?;
    let mut shifted = binet.pi_product.clone();
    let step = RatFunc::from_poly(spec.a0().clone());
    let mut out = Vec::with_capacity(max_n + 1);
    for _ in 0..=max_n {
        out.push(member_rat(&shifted, h));
        shifted = &shifted * &step;
    }
    Ok(out)
}

/// Whether G0, G1, A0 and A1 all lie in C\[h\], which is equivalent to every
/// term of the sequence lying in C\[h\].
pub fn all_terms_in_ch(spec: &RecurrenceSpec, h: &Poly) -> Result<bool> {
    require_inner(h)?;
    for p in [spec.g0(), spec.g1(), spec.a0(), spec.a1()] {
        if member_poly(p, h)?.is_none() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The representation pi_product = c * A0^m with constant c and minimal
/// m >= 0, when one exists.
pub fn pi_product_power_form(spec: &RecurrenceSpec) -> Result<Option<PowerForm>> {
    spec.require_validated()?;
    let binet = spec.binet_data()?;
    let product = binet.pi_product;
    if let Some(c) = product.as_constant() {
        return Ok(Some(PowerForm {
            coefficient: c,
            exponent: 0,
        }));
    }
    // A nonconstant representation needs a polynomial value and nonconstant A0.
    if !product.is_polynomial() || spec.a0().is_constant() {
        return Ok(None);
    }
    let mut remaining = product.num().scaled(&product.den().coeff(0).recip());
    let mut exponent = 0usize;
    loop {
        if let Some(c) = remaining.as_constant() {
            return Ok(Some(PowerForm {
                coefficient: c,
                exponent,
            }));
        }
        let (q, r) = remaining.divrem(spec.a0())?;
        if !r.is_zero() {
            return Ok(None);
        }
        remaining = q;
        exponent += 1;
    }
}

/// Evaluate every hypothesis of the two clause blocks for (spec, h, n).
/// The inner factor must be indecomposable; that is the caller's check.
pub fn condition_report(spec: &RecurrenceSpec, h: &Poly, n: usize) -> Result<ConditionReport> {
    spec.require_validated()?;
    require_inner(h)?;
    let binet = spec.binet_data()?;

    let a0_deg = spec.a0().degree_or_zero();
    let a0_constant = a0_deg == 0;
    let a0_degree_one = a0_deg == 1;
    let sqrt_delta_polynomial = binet.discriminant.sqrt_in_cx()?.is_some();

    let two_g1 = spec.g1().scaled(&rat_int(2));
    let pi_equal = (&two_g1 - &(spec.g0() * spec.a1())).is_zero();
    let pi_product_constant = binet.pi_product.is_constant();

    let g0_matches_a1 = (spec.g0() - spec.a1()).is_zero();
    let sum_shift_target = &spec.a0().scaled(&rat_int(2)) + &(spec.g0() * spec.g0());
    let case_sum_shift = g0_matches_a1 && (spec.g1() - &sum_shift_target).is_zero();
    let neg_double_target = spec.a0().scaled(&rat_int(-2));
    let case_neg_double = g0_matches_a1 && (spec.g1() - &neg_double_target).is_zero();

    let pi_product_power_form = pi_product_power_form(spec)?;
    let all_in = all_terms_in_ch(spec, h)?;
    let h_class = classify(h)?;
    let membership = subsum_membership(spec, h, n)?;

    let mut clause = None;
    if h_class == ClassTag::Other && !all_in && a0_constant {
        clause = if pi_equal {
            Some(Clause::FirstEqualCoeffs)
        } else if case_sum_shift {
            Some(Clause::FirstSumShift)
        } else if case_neg_double {
            Some(Clause::FirstNegDouble)
        } else {
            None
        };
    }
    if clause.is_none() && h_class != ClassTag::Cyclic && !all_in {
        let escape = sqrt_delta_polynomial || a0_degree_one;
        clause = if pi_product_power_form.is_some() && a0_degree_one {
            Some(Clause::SecondPowerForm)
        } else if pi_equal && pi_product_constant && escape {
            // "pi_1 = pi_2 = pi constant": equal coefficients with constant
            // product, equivalently constant G0.
            Some(Clause::SecondConstantCoeffs)
        } else if case_sum_shift && escape {
            Some(Clause::SecondSumShift)
        } else if case_neg_double && escape {
            Some(Clause::SecondNegDouble)
        } else {
            None
        };
    }

    Ok(ConditionReport {
        n,
        a0_constant,
        a0_degree_one,
        sqrt_delta_polynomial,
        pi_equal,
        pi_product_constant,
        case_sum_shift,
        case_neg_double,
        pi_product_power_form,
        all_terms_in_ch: all_in,
        h_class,
        subsum_membership: membership,
        theorem_main_applies: clause,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::rat;

    fn x_pow(n: usize) -> Poly {
        Poly::monomial(n, rat_int(1))
    }

    /// x^4 + x: indecomposable and genuinely neither cyclic nor dihedral.
    /// (No cubic can play this role: S_3 is dihedral, so every cubic is
    /// cyclic or dihedral over C.)
    fn x4_plus_x() -> Poly {
        Poly::from_ints(&[0, 1, 0, 0, 1])
    }

    #[test]
    fn subsum_membership_examples() {
        let fib = RecurrenceSpec::fibonacci();
        assert!(subsum_membership(&fib, &x_pow(2), 3).unwrap());

        let cheb = RecurrenceSpec::chebyshev();
        let t3 = crate::dickson::chebyshev_t(3);
        assert!(subsum_membership(&cheb, &t3, 2).unwrap());

        // A0 = x + 1, A1 = x^2, G0 = 0, G1 = 1: membership fails for n = 1
        let spec = RecurrenceSpec::new(
            Poly::from_ints(&[1, 1]),
            x_pow(2),
            Poly::zero(),
            Poly::one(),
        )
        .unwrap();
        assert!(!subsum_membership(&spec, &x_pow(2), 1).unwrap());
    }

    #[test]
    fn membership_profile_depends_on_n() {
        // A0 = x, A1 = 2x, G0 = 2, G1 = 4x + 2 gives the product -1/x, so the
        // shifted value is -x^(n-1), which lies in C(x^3) exactly when
        // 3 divides n - 1.
        let spec = RecurrenceSpec::new(
            Poly::x(),
            Poly::from_ints(&[0, 2]),
            Poly::constant(rat_int(2)),
            Poly::from_ints(&[2, 4]),
        )
        .unwrap();
        assert!(spec.is_validated());
        let binet = spec.binet_data().unwrap();
        assert_eq!(
            binet.pi_product,
            RatFunc::new(Poly::constant(rat_int(-1)), Poly::x()).unwrap()
        );
        let cube = Poly::monomial(3, rat_int(1));
        let profile = subsum_membership_profile(&spec, &cube, 7).unwrap();
        let expected: Vec<bool> = (0..=7).map(|n| n % 3 == 1).collect();
        assert_eq!(profile, expected);
    }

    #[test]
    fn all_terms_in_ch_examples() {
        // Everything already a polynomial in x^2
        let spec = RecurrenceSpec::new(
            Poly::from_ints(&[1, 0, 1]),
            x_pow(2),
            Poly::one(),
            x_pow(2),
        )
        .unwrap();
        assert!(all_terms_in_ch(&spec, &x_pow(2)).unwrap());
        for m in 0..=10 {
            assert!(member_poly(&spec.term(m), &x_pow(2)).unwrap().is_some());
        }

        let fib = RecurrenceSpec::fibonacci();
        assert!(!all_terms_in_ch(&fib, &x_pow(2)).unwrap());
    }

    #[test]
    fn power_form_examples() {
        let cheb = RecurrenceSpec::chebyshev();
        let pf = pi_product_power_form(&cheb).unwrap().unwrap();
        assert_eq!(pf.coefficient, rat(1, 4));
        assert_eq!(pf.exponent, 0);

        // G0 = A1, G1 = -2 A0 with A1 = x, A0 = x + 2: product is -A0
        let spec = RecurrenceSpec::new(
            Poly::from_ints(&[2, 1]),
            Poly::x(),
            Poly::x(),
            Poly::from_ints(&[-4, -2]),
        )
        .unwrap();
        let pf = pi_product_power_form(&spec).unwrap().unwrap();
        assert_eq!(pf.coefficient, rat_int(-1));
        assert_eq!(pf.exponent, 1);

        let fib = RecurrenceSpec::fibonacci();
        assert!(pi_product_power_form(&fib).unwrap().is_none());
    }

    #[test]
    fn condition_report_first_block() {
        // A1 = x, A0 = 1, G0 = x, G1 = x^2 + 2 with h = x^4 + x
        let spec = RecurrenceSpec::new(
            Poly::one(),
            Poly::x(),
            Poly::x(),
            Poly::from_ints(&[2, 0, 1]),
        )
        .unwrap();
        let report = condition_report(&spec, &x4_plus_x(), 2).unwrap();
        assert!(report.case_sum_shift);
        assert!(!report.sqrt_delta_polynomial);
        assert!(report.a0_constant);
        assert!(!report.all_terms_in_ch);
        assert_eq!(report.h_class, ClassTag::Other);
        assert_eq!(report.theorem_main_applies, Some(Clause::FirstSumShift));
        assert_eq!(report.theorem_main_applies.unwrap().label(), "first.ii");
    }

    #[test]
    fn condition_report_equal_coeffs_clause() {
        // The Chebyshev data with an Other-class inner factor licenses the
        // equal-coefficients clause of the first block.
        let cheb = RecurrenceSpec::chebyshev();
        let report = condition_report(&cheb, &x4_plus_x(), 2).unwrap();
        assert!(report.pi_equal);
        assert!(report.a0_constant);
        assert!(!report.all_terms_in_ch);
        assert_eq!(report.theorem_main_applies, Some(Clause::FirstEqualCoeffs));
    }

    #[test]
    fn every_cubic_is_cyclic_or_dihedral() {
        // x^3 + x = D_3(x, -1/3), so it is dihedral, not Other.
        let cubic = Poly::from_ints(&[0, 1, 0, 1]);
        assert_eq!(classify(&cubic).unwrap(), ClassTag::Dihedral);
    }

    #[test]
    fn condition_report_cyclic_excluded() {
        let fib = RecurrenceSpec::fibonacci();
        let report = condition_report(&fib, &x_pow(2), 5).unwrap();
        assert_eq!(report.h_class, ClassTag::Cyclic);
        assert!(report.theorem_main_applies.is_none());
        assert!(report.subsum_membership);
    }

    #[test]
    fn case_flags_force_product_minus_a0() {
        // case G1 = 2A0 + G0^2, G0 = A1
        let spec = RecurrenceSpec::new(
            Poly::one(),
            Poly::x(),
            Poly::x(),
            Poly::from_ints(&[2, 0, 1]),
        )
        .unwrap();
        let binet = spec.binet_data().unwrap();
        assert_eq!(binet.pi_product, RatFunc::from_poly(-spec.a0()));

        // case G1 = -2A0, G0 = A1
        let spec = RecurrenceSpec::new(
            Poly::from_ints(&[2, 1]),
            Poly::x(),
            Poly::x(),
            Poly::from_ints(&[-4, -2]),
        )
        .unwrap();
        let binet = spec.binet_data().unwrap();
        assert_eq!(binet.pi_product, RatFunc::from_poly(-spec.a0()));
    }

    #[test]
    fn invalid_spec_rejected() {
        let degen = RecurrenceSpec::new(x_pow(2), Poly::x(), Poly::zero(), Poly::one()).unwrap();
        assert_eq!(
            subsum_membership(&degen, &x_pow(2), 1).unwrap_err(),
            Error::InvalidSpec
        );
        assert_eq!(
            condition_report(&degen, &x_pow(2), 1).unwrap_err(),
            Error::InvalidSpec
        );
    }
}
