//! Seeded random Laurent polynomials and the standard parameter grid used by
//! the verification runs.

use std::f64::consts::TAU;

use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::space::{LaurentPoly, SpaceParams};

pub const STANDARD_ALPHAS: [f64; 4] = [-0.5, 0.0, 1.0, 2.5];
pub const STANDARD_BETAS: [f64; 4] = [-0.5, 0.0, 1.0, 2.5];
pub const STANDARD_PS: [f64; 3] = [1.0, 2.0, 3.0];

/// Every `(α, β, p)` combination of the given lists.
pub fn parameter_grid(alphas: &[f64], betas: &[f64], ps: &[f64]) -> crate::Result<Vec<SpaceParams>> {
    let mut out = Vec::with_capacity(alphas.len() * betas.len() * ps.len());
    for &a in alphas {
        for &b in betas {
            for &p in ps {
                out.push(SpaceParams::new(a, b, p)?);
            }
        }
    }
    Ok(out)
}

/// `count` Laurent polynomials with unit-modulus, uniformly random-phase
/// coefficients. Each has a random index range inside
/// `[lowest, highest]` that contains `0` whenever the bounds allow it.
pub fn random_family(seed: u64, count: usize, lowest: i32, highest: i32) -> Vec<LaurentPoly> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_member(&mut rng, lowest, highest)).collect()
}

fn random_member(rng: &mut ChaCha8Rng, lowest: i32, highest: i32) -> LaurentPoly {
    let lo = rng.random_range(lowest..=lowest.max(0).min(highest));
    let hi = rng.random_range(lo.max(0).min(highest)..=highest);
    let coeffs = (lo..=hi)
        .map(|_| Complex64::from_polar(1.0, rng.random_range(0.0..TAU)))
        .collect();
    LaurentPoly::new(lo, coeffs)
}
