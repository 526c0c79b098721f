//! Shared deterministic generators for the randomized suites.

use polyrec::polycore::{rat, Poly, Rat};
use polyrec::RecurrenceSpec;
use rand::rngs::StdRng;
use rand::Rng;

pub fn random_rat(rng: &mut StdRng) -> Rat {
    rat(rng.random_range(-9..=9), rng.random_range(1..=4))
}

pub fn random_poly(rng: &mut StdRng, max_deg: usize) -> Poly {
    let deg = rng.random_range(0..=max_deg);
    let coeffs = (0..=deg).map(|_| random_rat(rng)).collect();
    Poly::from_coeffs(coeffs)
}

pub fn random_nonzero_poly(rng: &mut StdRng, max_deg: usize) -> Poly {
    loop {
        let p = random_poly(rng, max_deg);
        if !p.is_zero() {
            return p;
        }
    }
}

/// Polynomial with exact degree `deg` (nonzero leading coefficient).
pub fn random_poly_of_degree(rng: &mut StdRng, deg: usize) -> Poly {
    let mut coeffs: Vec<Rat> = (0..=deg).map(|_| random_rat(rng)).collect();
    while coeffs[deg] == rat(0, 1) {
        coeffs[deg] = random_rat(rng);
    }
    Poly::from_coeffs(coeffs)
}

/// Rejection-sample a spec that passes all three validation flags.
pub fn random_validated_spec(rng: &mut StdRng, max_deg: usize) -> RecurrenceSpec {
    loop {
        let a0 = random_nonzero_poly(rng, max_deg);
        let a1 = random_poly(rng, max_deg);
        let g0 = random_poly(rng, max_deg);
        let g1 = random_poly(rng, max_deg);
        if let Ok(spec) = RecurrenceSpec::new(a0, a1, g0, g1) {
            if spec.is_validated() {
                return spec;
            }
        }
    }
}
