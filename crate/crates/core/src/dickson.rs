//! Chebyshev and Dickson polynomial families and their identity suite.
//!
//! All identities are checked exactly as polynomial equalities, except the
//! difference factorization over roots of unity, which is the one place
//! non-rational data enters: it is verified numerically at random complex
//! points with an explicit 1e-9 relative tolerance.

use num_complex::Complex64;
use num_traits::Zero;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::polycore::{rat_int, rat_pow, rat_to_f64, rat_to_json, BiPoly, Poly, Rat};

/// Chebyshev polynomial of the first kind, T_0 = 1, T_1 = x,
/// T_n = 2x*T_{n-1} - T_{n-2}.
pub fn chebyshev_t(n: usize) -> Poly {
    let two_x = Poly::from_ints(&[0, 2]);
    let mut prev = Poly::one();
    let mut cur = Poly::x();
    if n == 0 {
        return prev;
    }
    for _ in 2..=n {
        let next = &(&two_x * &cur) - &prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Dickson polynomial with parameter a, D_0 = 2, D_1 = x,
/// D_n = x*D_{n-1} - a*D_{n-2}.
pub fn dickson_d(n: usize, a: &Rat) -> Poly {
    let mut prev = Poly::constant(rat_int(2));
    let mut cur = Poly::x();
    if n == 0 {
        return prev;
    }
    for _ in 2..=n {
        let next = &(&Poly::x() * &cur) - &prev.scaled(a);
        prev = cur;
        cur = next;
    }
    cur
}

/// D_n(X+Y, XY) computed through the Dickson recurrence in two variables.
fn dickson_sum_form(n: usize) -> BiPoly {
    let mut x_plus_y = BiPoly::zero();
    x_plus_y.add_term(1, 0, rat_int(1));
    x_plus_y.add_term(0, 1, rat_int(1));
    let mut xy = BiPoly::zero();
    xy.add_term(1, 1, rat_int(1));

    let mut prev = BiPoly::constant(rat_int(2));
    let mut cur = x_plus_y.clone();
    if n == 0 {
        return prev;
    }
    for _ in 2..=n {
        let next = &(&x_plus_y * &cur) - &(&xy * &prev);
        prev = cur;
        cur = next;
    }
    cur
}

#[derive(Clone, PartialEq, Debug)]
pub enum IdentityStatus {
    ExactPass,
    NumericPass { max_residual: f64 },
    Fail,
}

impl IdentityStatus {
    pub fn passed(&self) -> bool {
        !matches!(self, IdentityStatus::Fail)
    }
}

#[derive(Clone, Debug)]
pub struct IdentityReport {
    pub name: String,
    pub params: Value,
    pub status: IdentityStatus,
}

impl IdentityReport {
    pub fn to_json(&self) -> Value {
        let status = match &self.status {
            IdentityStatus::ExactPass => json!({ "kind": "exact-pass" }),
            IdentityStatus::NumericPass { max_residual } => {
                json!({ "kind": "numeric-pass", "max_residual": max_residual })
            }
            IdentityStatus::Fail => json!({ "kind": "fail" }),
        };
        json!({ "name": self.name, "params": self.params, "status": status })
    }
}

/// Parameters for `verify_identity`; unused fields may stay None.
#[derive(Clone, Debug, Default)]
pub struct IdentityParams {
    pub m: Option<usize>,
    pub n: Option<usize>,
    pub a: Option<Rat>,
}

fn exact_report(name: &str, params: Value, holds: bool) -> IdentityReport {
    IdentityReport {
        name: name.to_string(),
        params,
        status: if holds {
            IdentityStatus::ExactPass
        } else {
            IdentityStatus::Fail
        },
    }
}

/// Check one named identity exactly. Names: `t_composition` (m, n),
/// `d_composition` (m, n, a), `d_sum` (n), `dick_scaling` (n, a).
pub fn verify_identity(name: &str, params: &IdentityParams) -> Result<IdentityReport> {
    let need_n = || params.n.ok_or_else(|| Error::UnknownIdentity(format!("{name}: missing n")));
    match name {
        "t_composition" => {
            let m = params
                .m
                .ok_or_else(|| Error::UnknownIdentity(format!("{name}: missing m")))?;
            let n = need_n()?;
            let lhs = chebyshev_t(m * n);
            let rhs = chebyshev_t(m).compose(&chebyshev_t(n));
            Ok(exact_report(name, json!({ "m": m, "n": n }), lhs == rhs))
        }
        "d_composition" => {
            let m = params
                .m
                .ok_or_else(|| Error::UnknownIdentity(format!("{name}: missing m")))?;
            let n = need_n()?;
            let a = params
                .a
                .clone()
                .ok_or_else(|| Error::UnknownIdentity(format!("{name}: missing a")))?;
            let lhs = dickson_d(m * n, &a);
            let a_pow_n = rat_pow(&a, n as i64);
            let rhs = dickson_d(m, &a_pow_n).compose(&dickson_d(n, &a));
            Ok(exact_report(
                name,
                json!({ "m": m, "n": n, "a": rat_to_json(&a) }),
                lhs == rhs,
            ))
        }
        "d_sum" => {
            let n = need_n()?;
            let lhs = dickson_sum_form(n);
            let mut rhs = BiPoly::zero();
            if n == 0 {
                rhs.add_term(0, 0, rat_int(2));
            } else {
                rhs.add_term(n, 0, rat_int(1));
                rhs.add_term(0, n, rat_int(1));
            }
            Ok(exact_report(name, json!({ "n": n }), lhs == rhs))
        }
        "dick_scaling" => {
            let n = need_n()?;
            let a = params
                .a
                .clone()
                .ok_or_else(|| Error::UnknownIdentity(format!("{name}: missing a")))?;
            if a.is_zero() {
                return Err(Error::UnknownIdentity(format!("{name}: a must be nonzero")));
            }
            // D_n(2ax, a^2) = 2 a^n T_n(x)
            let two_a_x = Poly::monomial(1, &rat_int(2) * &a);
            let lhs = dickson_d(n, &rat_pow(&a, 2)).compose(&two_a_x);
            let scale = &rat_int(2) * &rat_pow(&a, n as i64);
            let rhs = chebyshev_t(n).scaled(&scale);
            Ok(exact_report(
                name,
                json!({ "n": n, "a": rat_to_json(&a) }),
                lhs == rhs,
            ))
        }
        other => Err(Error::UnknownIdentity(other.to_string())),
    }
}

/// Deterministic pseudo-random stream for the numeric checker.
struct SplitMix64(u64);

impl SplitMix64 {
    fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9e37_79b9_7f4a_7c15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        z ^ (z >> 31)
    }

    /// Uniform in [-1, 1].
    fn next_unit(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 / (1u64 << 52) as f64 * 2.0 - 1.0
    }

    fn next_complex(&mut self) -> Complex64 {
        Complex64::new(self.next_unit(), self.next_unit())
    }
}

fn dickson_eval_complex(n: usize, a: Complex64, x: Complex64) -> Complex64 {
    let mut prev = Complex64::new(2.0, 0.0);
    let mut cur = x;
    if n == 0 {
        return prev;
    }
    for _ in 2..=n {
        let next = x * cur - a * prev;
        prev = cur;
        cur = next;
    }
    cur
}

/// Numeric check of the difference factorization
/// D_n(x,a) - D_n(y,a) = (x-y) [(x+y)] prod_k (x^2 - gamma_k xy + y^2 + delta_k^2 a)
/// at 25 random complex points, with gamma_k, delta_k from the n-th roots of
/// unity. Relative residual must stay within 1e-9.
pub fn diff_factor_check(n: usize, a: &Rat) -> IdentityReport {
    assert!((2..=12).contains(&n), "diff factorization supports 2 <= n <= 12");
    let a_f = Complex64::new(rat_to_f64(a), 0.0);
    let theta = 2.0 * std::f64::consts::PI / n as f64;
    let pair_count = if n % 2 == 1 { (n - 1) / 2 } else { (n - 2) / 2 };
    let gammas: Vec<f64> = (1..=pair_count).map(|k| 2.0 * (theta * k as f64).cos()).collect();
    // delta_k^2 = gamma_k^2 - 4
    let delta_sqs: Vec<f64> = gammas.iter().map(|g| g * g - 4.0).collect();

    let mut rng = SplitMix64(0x00d1c50 + n as u64);
    let mut max_residual: f64 = 0.0;
    for _ in 0..25 {
        let x = rng.next_complex();
        let y = rng.next_complex();
        let lhs = dickson_eval_complex(n, a_f, x) - dickson_eval_complex(n, a_f, y);
        let mut rhs = x - y;
        if n.is_multiple_of(2) {
            rhs *= x + y;
        }
        for (g, d2) in gammas.iter().zip(&delta_sqs) {
            rhs *= x * x - g * x * y + y * y + d2 * a_f;
        }
        let scale = lhs.norm().max(rhs.norm()).max(1.0);
        let residual = (lhs - rhs).norm() / scale;
        max_residual = max_residual.max(residual);
    }

    IdentityReport {
        name: "d_diff_factorization".to_string(),
        params: json!({ "n": n, "a": rat_to_json(a) }),
        status: if max_residual <= 1e-9 {
            IdentityStatus::NumericPass { max_residual }
        } else {
            IdentityStatus::Fail
        },
    }
}

/// The default identity suite behind the CLI `identities` command.
pub fn identity_suite(max_n: usize) -> Vec<IdentityReport> {
    let params_a = [rat_int(1), rat_int(2), rat_int(-3), crate::polycore::rat(1, 2)];
    let mut out = Vec::new();
    for m in 2..=max_n {
        for n in 2..=max_n {
            out.push(
                verify_identity(
                    "t_composition",
                    &IdentityParams {
                        m: Some(m),
                        n: Some(n),
                        ..Default::default()
                    },
                )
                .expect("known identity"),
            );
        }
    }
    for a in &params_a {
        for m in 2..=max_n {
            for n in 2..=max_n {
                if m * n > max_n * 2 {
                    continue;
                }
                out.push(
                    verify_identity(
                        "d_composition",
                        &IdentityParams {
                            m: Some(m),
                            n: Some(n),
                            a: Some(a.clone()),
                        },
                    )
                    .expect("known identity"),
                );
            }
        }
    }
    for n in 2..=max_n.max(2) {
        out.push(
            verify_identity(
                "d_sum",
                &IdentityParams {
                    n: Some(n),
                    ..Default::default()
                },
            )
            .expect("known identity"),
        );
        for a in &params_a {
            out.push(
                verify_identity(
                    "dick_scaling",
                    &IdentityParams {
                        n: Some(n),
                        a: Some(a.clone()),
                        ..Default::default()
                    },
                )
                .expect("known identity"),
            );
            if (2..=12).contains(&n) {
                out.push(diff_factor_check(n, a));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::rat;

    #[test]
    fn chebyshev_values() {
        assert_eq!(chebyshev_t(0), Poly::one());
        assert_eq!(chebyshev_t(3), Poly::from_ints(&[0, -3, 0, 4]));
        assert_eq!(chebyshev_t(4), Poly::from_ints(&[1, 0, -8, 0, 8]));
    }

    #[test]
    fn dickson_values() {
        assert_eq!(dickson_d(0, &rat_int(7)), Poly::constant(rat_int(2)));
        assert_eq!(dickson_d(3, &rat_int(2)), Poly::from_ints(&[0, -6, 0, 1]));
        assert_eq!(dickson_d(5, &rat_int(0)), Poly::monomial(5, rat_int(1)));
    }

    #[test]
    fn exact_identities() {
        let r = verify_identity(
            "t_composition",
            &IdentityParams {
                m: Some(2),
                n: Some(3),
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(r.status, IdentityStatus::ExactPass);

        let r = verify_identity(
            "d_composition",
            &IdentityParams {
                m: Some(2),
                n: Some(3),
                a: Some(rat_int(2)),
            },
        )
        .unwrap();
        assert_eq!(r.status, IdentityStatus::ExactPass);

        let r = verify_identity(
            "d_sum",
            &IdentityParams {
                n: Some(4),
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(r.status, IdentityStatus::ExactPass);

        assert!(matches!(
            verify_identity("no_such", &IdentityParams::default()),
            Err(Error::UnknownIdentity(_))
        ));
    }

    #[test]
    fn functional_equation_spot_check() {
        // D_n(z + a/z, a) = z^n + (a/z)^n at rational points, exactly.
        let mut rng = SplitMix64(41);
        for n in 1..=8usize {
            for a in [rat_int(1), rat_int(-2), rat(1, 2)] {
                for _ in 0..20 {
                    let raw = (rng.next_u64() % 13) as i64 - 6;
                    let z = if raw == 0 { rat_int(1) } else { rat_int(raw) };
                    let arg = &z + &(&a / &z);
                    let lhs = dickson_d(n, &a).eval(&arg);
                    let rhs = &rat_pow(&z, n as i64) + &rat_pow(&(&a / &z), n as i64);
                    assert_eq!(lhs, rhs, "n={n} a={a} z={z}");
                }
            }
        }
    }

    #[test]
    fn diff_factor_examples() {
        // even case with empty product: D_2 diff = (x-y)(x+y)
        let r = diff_factor_check(2, &rat_int(5));
        assert!(r.status.passed());

        let r = diff_factor_check(3, &rat_int(1));
        assert!(matches!(r.status, IdentityStatus::NumericPass { max_residual } if max_residual <= 1e-9));

        let r = diff_factor_check(5, &rat(1, 2));
        assert!(matches!(r.status, IdentityStatus::NumericPass { max_residual } if max_residual <= 1e-9));
    }

    #[test]
    fn diff_factor_exact_cross_check_n3() {
        // x^3 - 3x - (y^3 - 3y) = (x - y)(x^2 + xy + y^2 - 3) with gamma_1 = -1,
        // delta_1^2 = -3.
        let d3 = dickson_d(3, &rat_int(1));
        let lhs = &BiPoly::from_poly_x(&d3) - &BiPoly::from_poly_y(&d3);
        let mut x_minus_y = BiPoly::zero();
        x_minus_y.add_term(1, 0, rat_int(1));
        x_minus_y.add_term(0, 1, rat_int(-1));
        let mut quad = BiPoly::zero();
        quad.add_term(2, 0, rat_int(1));
        quad.add_term(1, 1, rat_int(1));
        quad.add_term(0, 2, rat_int(1));
        quad.add_term(0, 0, rat_int(-3));
        assert_eq!(lhs, &x_minus_y * &quad);
    }

    #[test]
    fn degree_and_leading_laws() {
        for n in 1..=10usize {
            let t = chebyshev_t(n);
            assert_eq!(t.degree(), Some(n));
            assert_eq!(t.leading().unwrap(), &rat_pow(&rat_int(2), n as i64 - 1));
            let d = dickson_d(n, &rat(3, 2));
            assert_eq!(d.degree(), Some(n));
            assert!(d.is_monic());
        }
    }
}
