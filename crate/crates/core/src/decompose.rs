//! Functional decomposition of polynomials.
//!
//! Splits use the canonical normalization: the inner factor is monic with
//! zero constant term, and the outer factor absorbs both linear adjustments.
//! This makes the inner factor of a given degree unique, so membership and
//! split results are invariant under affine changes of the inner polynomial.

use num_traits::{One, Zero};

use crate::dickson::dickson_d;
use crate::error::{Error, Result};
use crate::polycore::{rat_int, BiPoly, Poly, Rat, RatFunc};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ClassTag {
    /// Equivalent to x^n (n > 1). Every quadratic is cyclic.
    Cyclic,
    /// Equivalent to the Chebyshev T_n (n > 2).
    Dihedral,
    Other,
}

impl ClassTag {
    pub fn as_str(&self) -> &'static str {
        match self {
            ClassTag::Cyclic => "cyclic",
            ClassTag::Dihedral => "dihedral",
            ClassTag::Other => "other",
        }
    }
}

impl std::fmt::Display for ClassTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A complete decomposition: indecomposable factors, outermost first,
/// composing back to the input exactly.
#[derive(Clone, PartialEq, Debug)]
pub struct Decomposition {
    pub chain: Vec<(Poly, ClassTag)>,
}

impl Decomposition {
    /// Recompose the chain; used by tests and the sweep cross-checks.
    pub fn recompose(&self) -> Poly {
        let mut it = self.chain.iter().map(|(f, _)| f);
        let first = it.next().expect("chain is nonempty").clone();
        it.fold(first, |acc, inner| acc.compose(inner))
    }
}

/// Whether f lies in C\[h\]; on success returns the g with f = g(h).
///
/// Computed by h-adic expansion: repeated division by h, where membership
/// holds exactly when every remainder is constant. Requires deg h >= 1.
pub fn member_poly(f: &Poly, h: &Poly) -> Result<Option<Poly>> {
    match h.degree() {
        None | Some(0) => return Err(Error::ConstantInner),
        Some(_) => {}
    }
    let mut digits = Vec::new();
    let mut current = f.clone();
    while !current.is_zero() {
        let (q, r) = current.divrem(h)?;
        match r.as_constant() {
            Some(c) => digits.push(c),
            None => return Ok(None),
        }
        current = q;
    }
    Ok(Some(Poly::from_coeffs(digits)))
}

/// Whether h(X) - h(Y) divides n exactly in Q\[X, Y\]. Requires deg h >= 2.
pub fn hdiff_divides(h: &Poly, n: &BiPoly) -> bool {
    assert!(
        h.degree().is_some_and(|d| d >= 2),
        "hdiff_divides requires deg h >= 2"
    );
    n.divisible_by_hdiff(h)
}

/// Whether the reduced rational function r lies in the subfield C(h(x)).
///
/// For r = p/q coprime this holds exactly when h(X) - h(Y) divides
/// p(X)q(Y) - p(Y)q(X): the divisibility says r(X) - r(Y) vanishes on the
/// curve h(X) = h(Y), i.e. r is constant on generic fibers of h, which by
/// Lueroth forces r through h. Requires deg h >= 2.
pub fn member_rat(r: &RatFunc, h: &Poly) -> bool {
    assert!(
        h.degree().is_some_and(|d| d >= 2),
        "member_rat requires deg h >= 2"
    );
    let crossed = &BiPoly::product_xy(r.num(), r.den()) - &BiPoly::product_xy(r.den(), r.num());
    crossed.divisible_by_hdiff(h)
}

fn check_proper_divisor(d: usize, degree: usize) -> Result<()> {
    if d <= 1 || d >= degree || !degree.is_multiple_of(d) {
        return Err(Error::NotAProperDivisor { divisor: d, degree });
    }
    Ok(())
}

/// Split f = g(h) with deg h = d, h monic and h(0) = 0, if such a split exists.
///
/// The top d coefficients of the normalized f depend only on h^(deg f / d),
/// and each unknown coefficient of h enters the matching equation affinely,
/// so the candidate inner factor is recovered one coefficient at a time from
/// the top and then confirmed by membership.
pub fn split_at_degree(f: &Poly, d: usize) -> Result<Option<(Poly, Poly)>> {
    let degree = f.degree().ok_or(Error::ZeroPolynomial)?;
    check_proper_divisor(d, degree)?;
    let outer_deg = degree / d;
    let monic = f.make_monic();

    let mut inner = Poly::monomial(d, Rat::one());
    for k in 1..d {
        let target = monic.coeff(degree - k);
        let base = inner.pow(outer_deg).coeff(degree - k);
        let probe = (&inner + &Poly::monomial(d - k, Rat::one()))
            .pow(outer_deg)
            .coeff(degree - k);
        let slope = &probe - &base;
        debug_assert_eq!(slope, rat_int(outer_deg as i64));
        let b = &(&target - &base) / &slope;
        if !b.is_zero() {
            inner = &inner + &Poly::monomial(d - k, b);
        }
    }

    Ok(member_poly(f, &inner)?.map(|outer| (outer, inner)))
}

/// Whether f admits no split at any proper divisor of its degree.
pub fn is_indecomposable(f: &Poly) -> Result<bool> {
    let degree = f.degree().ok_or(Error::ZeroPolynomial)?;
    if degree <= 1 {
        return Err(Error::DegreeTooSmall { actual: degree });
    }
    for d in 2..degree {
        if degree % d != 0 {
            continue;
        }
        if split_at_degree(f, d)?.is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A complete decomposition, built by repeatedly splitting off an inner
/// factor of minimal degree. A minimal-degree inner factor is automatically
/// indecomposable: any further split of it would give a smaller inner factor.
pub fn complete_decomposition(f: &Poly) -> Result<Decomposition> {
    let degree = f.degree().ok_or(Error::ZeroPolynomial)?;
    if degree <= 1 {
        return Err(Error::DegreeTooSmall { actual: degree });
    }
    let mut factors = Vec::new();
    decompose_into(f.clone(), &mut factors)?;
    let chain = factors
        .into_iter()
        .map(|p| {
            let tag = classify(&p)?;
            Ok((p, tag))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Decomposition { chain })
}

fn decompose_into(f: Poly, out: &mut Vec<Poly>) -> Result<()> {
    let degree = f.degree().expect("nonconstant by construction");
    for d in 2..degree {
        if !degree.is_multiple_of(d) {
            continue;
        }
        if let Some((outer, inner)) = split_at_degree(&f, d)? {
            decompose_into(outer, out)?;
            out.push(inner);
            return Ok(());
        }
    }
    out.push(f);
    Ok(())
}

/// Classify by exact normal forms: cyclic when a translation reduces f to
/// a(x - b)^n + c; dihedral (n > 2) when after centering and monic scaling
/// the result is D_n(x, a') + const with the parameter a' != 0 read off the
/// x^(n-2) coefficient. No root-finding, no floats.
pub fn classify(f: &Poly) -> Result<ClassTag> {
    let n = f.degree().ok_or(Error::ZeroPolynomial)?;
    if n <= 1 {
        return Err(Error::DegreeTooSmall { actual: n });
    }
    let lc = f.leading().unwrap().clone();
    // Kill the x^(n-1) coefficient by translation, then scale monic.
    let shift = &(-&f.coeff(n - 1)) / &(&rat_int(n as i64) * &lc);
    let centered = f.shifted(&shift).make_monic();

    if (1..n).all(|i| centered.coeff(i).is_zero()) {
        return Ok(ClassTag::Cyclic);
    }
    if n > 2 {
        // D_n(x, a') has x^(n-2) coefficient -n a'; homogeneity
        // D_n(cx, c^2 a) = c^n D_n(x, a) lets centering+scaling reach it.
        let a = &(-&centered.coeff(n - 2)) / &rat_int(n as i64);
        if !a.is_zero() {
            let candidate = dickson_d(n, &a);
            if (&centered - &candidate).is_constant() {
                return Ok(ClassTag::Dihedral);
            }
        }
    }
    Ok(ClassTag::Other)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dickson::chebyshev_t;
    use crate::recurrence::RecurrenceSpec;

    fn x_pow(n: usize) -> Poly {
        Poly::monomial(n, rat_int(1))
    }

    #[test]
    fn member_poly_examples() {
        let f = Poly::from_ints(&[2, 0, 3, 0, 1]);
        let g = member_poly(&f, &x_pow(2)).unwrap().unwrap();
        assert_eq!(g, Poly::from_ints(&[2, 3, 1]));

        // F_5 = x^4 + 3x^2 + 1 through x^2
        let f5 = RecurrenceSpec::fibonacci().term(5);
        let g = member_poly(&f5, &x_pow(2)).unwrap().unwrap();
        assert_eq!(g, Poly::from_ints(&[1, 3, 1]));

        assert!(member_poly(&x_pow(3), &x_pow(2)).unwrap().is_none());
        assert_eq!(
            member_poly(&x_pow(3), &Poly::one()).unwrap_err(),
            Error::ConstantInner
        );
    }

    #[test]
    fn member_rat_examples() {
        // (x^4 + 1)/x^2 = (t^2 + 1)/t through x^2
        let r = RatFunc::new(Poly::from_ints(&[1, 0, 0, 0, 1]), x_pow(2)).unwrap();
        assert!(member_rat(&r, &x_pow(2)));

        let r = RatFunc::from_poly(x_pow(3));
        assert!(!member_rat(&r, &x_pow(2)));

        // -1/(x^2 + 4), the Fibonacci Binet product, factors through x^2
        let r = RatFunc::new(Poly::from_ints(&[-1]), Poly::from_ints(&[4, 0, 1])).unwrap();
        assert!(member_rat(&r, &x_pow(2)));
    }

    #[test]
    fn split_examples() {
        let f = Poly::from_ints(&[2, 0, 3, 0, 1]);
        let (g, h) = split_at_degree(&f, 2).unwrap().unwrap();
        assert_eq!(h, x_pow(2));
        assert_eq!(g, Poly::from_ints(&[2, 3, 1]));

        // T_6 at degree 3: inner factor x^3 - (3/4)x, chain matches T_2 o T_3
        let t6 = chebyshev_t(6);
        let (g, h) = split_at_degree(&t6, 3).unwrap().unwrap();
        assert_eq!(
            h,
            Poly::from_coeffs(vec![
                rat_int(0),
                crate::polycore::rat(-3, 4),
                rat_int(0),
                rat_int(1)
            ])
        );
        assert_eq!(g.compose(&h), t6);

        // odd-degree term obstructs any quadratic inner factor
        let f = Poly::from_ints(&[0, 1, 1, 0, 1]);
        assert!(split_at_degree(&f, 2).unwrap().is_none());

        assert_eq!(
            split_at_degree(&f, 3).unwrap_err(),
            Error::NotAProperDivisor {
                divisor: 3,
                degree: 4
            }
        );
    }

    #[test]
    fn complete_decomposition_examples() {
        // F_9 has degree 8 and inner factor x^2
        let f9 = RecurrenceSpec::fibonacci().term(9);
        let dec = complete_decomposition(&f9).unwrap();
        assert_eq!(dec.recompose(), f9);
        let (inner, tag) = dec.chain.last().unwrap();
        assert_eq!(inner, &x_pow(2));
        assert_eq!(*tag, ClassTag::Cyclic);
        assert_eq!(dec.chain.len(), 2);
        assert_eq!(dec.chain[0].0.degree(), Some(4));

        // T_8 = T_2 o T_2 o T_2: three quadratics, all cyclic as quadratics
        let dec = complete_decomposition(&chebyshev_t(8)).unwrap();
        assert_eq!(dec.chain.len(), 3);
        assert!(dec
            .chain
            .iter()
            .all(|(p, tag)| p.degree() == Some(2) && *tag == ClassTag::Cyclic));
        assert_eq!(dec.recompose(), chebyshev_t(8));

        // x^6 + x + 1 is indecomposable
        let f = &(&x_pow(6) + &Poly::x()) + &Poly::one();
        let dec = complete_decomposition(&f).unwrap();
        assert_eq!(dec.chain.len(), 1);
        assert_eq!(dec.chain[0].0, f);
    }

    #[test]
    fn classify_examples() {
        // 3(x-1)^4 + 2
        let f = &Poly::from_ints(&[-1, 1]).pow(4).scaled(&rat_int(3)) + &Poly::constant(rat_int(2));
        assert_eq!(classify(&f).unwrap(), ClassTag::Cyclic);

        assert_eq!(classify(&chebyshev_t(4)).unwrap(), ClassTag::Dihedral);

        let f = Poly::from_ints(&[0, 1, 1, 0, 1]);
        assert_eq!(classify(&f).unwrap(), ClassTag::Other);

        assert_eq!(
            classify(&Poly::x()).unwrap_err(),
            Error::DegreeTooSmall { actual: 1 }
        );
        assert_eq!(classify(&Poly::zero()).unwrap_err(), Error::ZeroPolynomial);
    }

    #[test]
    fn classify_chebyshev_range() {
        assert_eq!(classify(&chebyshev_t(2)).unwrap(), ClassTag::Cyclic);
        for n in 3..=30 {
            assert_eq!(classify(&chebyshev_t(n)).unwrap(), ClassTag::Dihedral, "T_{n}");
        }
        for n in 2..=30 {
            assert_eq!(classify(&x_pow(n)).unwrap(), ClassTag::Cyclic, "x^{n}");
        }
    }
}
