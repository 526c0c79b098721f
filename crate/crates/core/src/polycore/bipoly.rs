//! Sparse bivariate polynomials over the rationals.
//!
//! Terms map (deg_x, deg_y) to a nonzero coefficient. The only division in
//! scope is by h(X) - h(Y), whose leading coefficient in X is the constant
//! lc(h), so division runs coefficient-wise in X over Q[Y].

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Sub};

use num_traits::Zero;

use crate::polycore::poly::Poly;
use crate::polycore::rat::Rat;

#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct BiPoly {
    terms: BTreeMap<(usize, usize), Rat>,
}

impl BiPoly {
    pub fn zero() -> Self {
        BiPoly::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn constant(c: Rat) -> Self {
        let mut p = BiPoly::zero();
        p.add_term(0, 0, c);
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(usize, usize), &Rat)> {
        self.terms.iter()
    }

    pub fn add_term(&mut self, dx: usize, dy: usize, c: Rat) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((dx, dy)).or_insert_with(Rat::zero);
        *entry = &*entry + &c;
        if entry.is_zero() {
            self.terms.remove(&(dx, dy));
        }
    }

    pub fn deg_x(&self) -> Option<usize> {
        self.terms.keys().map(|&(dx, _)| dx).max()
    }

    pub fn total_degree(&self) -> Option<usize> {
        self.terms.keys().map(|&(dx, dy)| dx + dy).max()
    }

    /// p(X) viewed as a bivariate polynomial.
    pub fn from_poly_x(p: &Poly) -> Self {
        let mut out = BiPoly::zero();
        for (i, c) in p.coeffs().iter().enumerate() {
            out.add_term(i, 0, c.clone());
        }
        out
    }

    /// p(Y) viewed as a bivariate polynomial.
    pub fn from_poly_y(p: &Poly) -> Self {
        let mut out = BiPoly::zero();
        for (i, c) in p.coeffs().iter().enumerate() {
            out.add_term(0, i, c.clone());
        }
        out
    }

    /// p(X) * q(Y).
    pub fn product_xy(p: &Poly, q: &Poly) -> Self {
        let mut out = BiPoly::zero();
        for (i, a) in p.coeffs().iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in q.coeffs().iter().enumerate() {
                out.add_term(i, j, a * b);
            }
        }
        out
    }

    /// h(X) - h(Y).
    pub fn hdiff(h: &Poly) -> Self {
        &BiPoly::from_poly_x(h) - &BiPoly::from_poly_y(h)
    }

    /// Swap the two variables.
    pub fn swapped(&self) -> Self {
        let mut out = BiPoly::zero();
        for (&(dx, dy), c) in &self.terms {
            out.add_term(dy, dx, c.clone());
        }
        out
    }

    pub fn eval(&self, x: &Rat, y: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for (&(dx, dy), c) in &self.terms {
            let mut t = c.clone();
            for _ in 0..dx {
                t = &t * x;
            }
            for _ in 0..dy {
                t = &t * y;
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Coefficients in X, each a polynomial in Y; index is the X-degree.
    fn x_view(&self) -> Vec<Poly> {
        let Some(dx_max) = self.deg_x() else {
            return Vec::new();
        };
        let mut rows: Vec<Vec<Rat>> = vec![Vec::new(); dx_max + 1];
        for (&(dx, dy), c) in &self.terms {
            if rows[dx].len() <= dy {
                rows[dx].resize(dy + 1, Rat::zero());
            }
            rows[dx][dy] = c.clone();
        }
        rows.into_iter().map(Poly::from_coeffs).collect()
    }

    /// Remainder of `self` on division by h(X) - h(Y) in (Q\[Y\])\[X\].
    ///
    /// Valid because the divisor's leading X-coefficient is the constant lc(h).
    /// Requires deg h >= 1.
    pub fn rem_by_hdiff(&self, h: &Poly) -> BiPoly {
        let d = h.degree().expect("divisor h must be nonconstant");
        assert!(d >= 1, "divisor h must be nonconstant");
        let lc_inv = h.leading().unwrap().recip();
        // Divisor X-coefficients: index i in 1..=d holds the constant h_i;
        // index 0 holds h_0 - h(Y).
        let mut div: Vec<Poly> = (0..=d).map(|i| Poly::constant(h.coeff(i))).collect();
        div[0] = &div[0] - h;

        let mut rem = self.x_view();
        while rem.len() > d {
            let k = rem.len() - 1;
            let c = rem.pop().unwrap();
            if c.is_zero() {
                continue;
            }
            let q = c.scaled(&lc_inv);
            for (i, di) in div.iter().enumerate().take(d) {
                let delta = &q * di;
                rem[k - d + i] = &rem[k - d + i] - &delta;
            }
            while rem.last().is_some_and(Poly::is_zero) {
                rem.pop();
            }
        }
        let mut out = BiPoly::zero();
        for (dx, row) in rem.iter().enumerate() {
            for (dy, c) in row.coeffs().iter().enumerate() {
                out.add_term(dx, dy, c.clone());
            }
        }
        out
    }

    /// Whether h(X) - h(Y) divides `self` exactly.
    pub fn divisible_by_hdiff(&self, h: &Poly) -> bool {
        self.rem_by_hdiff(h).is_zero()
    }
}

impl Add for &BiPoly {
    type Output = BiPoly;
    fn add(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(dx, dy), c) in &rhs.terms {
            out.add_term(dx, dy, c.clone());
        }
        out
    }
}

impl Sub for &BiPoly {
    type Output = BiPoly;
    fn sub(self, rhs: &BiPoly) -> BiPoly {
        let mut out = self.clone();
        for (&(dx, dy), c) in &rhs.terms {
            out.add_term(dx, dy, -c);
        }
        out
    }
}

impl Mul for &BiPoly {
    type Output = BiPoly;
    fn mul(self, rhs: &BiPoly) -> BiPoly {
        let mut out = BiPoly::zero();
        for (&(ax, ay), a) in &self.terms {
            for (&(bx, by), b) in &rhs.terms {
                out.add_term(ax + bx, ay + by, a * b);
            }
        }
        out
    }
}
