//! Tensor quadrature for `∫_D f dμ_{α,β}`.
//!
//! With `u = |z|²` the measure becomes
//! `u^β (1-u)^α du/B(α+1,β+1) × dθ/2π`, so the radial factor is a Jacobi
//! weight on (0, 1) and the angular factor is the uniform trapezoid rule.

use std::f64::consts::TAU;

use num_complex::Complex64;

use super::gamma::ln_beta_unchecked;
use super::jacobi::radial_rule;
use crate::error::{domain, Result};

/// Points and weights approximating integration against `μ_{α,β}`.
///
/// A nonzero `radial_shift` s builds the radial rule for `u^(β+s)` and folds
/// `u^(-s)` back into the weights. Integration is then exact whenever
/// `u^s f` is a polynomial of low enough degree, which is how integrands with
/// a pole (s < 0) or a zero (s > 0) at the origin are integrated without
/// losing spectral accuracy.
#[derive(Debug, Clone)]
pub struct DiscGrid {
    points: Vec<Complex64>,
    weights: Vec<f64>,
    alpha: f64,
    beta: f64,
    radial_shift: f64,
    n_r: usize,
    n_theta: usize,
}

/// Grid for `μ_{α,β}` with `n_r` radial and `n_theta` angular nodes.
pub fn disc_grid(n_r: usize, n_theta: usize, alpha: f64, beta: f64) -> Result<DiscGrid> {
    DiscGrid::with_radial_shift(n_r, n_theta, alpha, beta, 0.0)
}

impl DiscGrid {
    pub fn with_radial_shift(
        n_r: usize,
        n_theta: usize,
        alpha: f64,
        beta: f64,
        radial_shift: f64,
    ) -> Result<Self> {
        if n_theta == 0 {
            return Err(domain("disc_grid", "need at least one angular node"));
        }
        if !(alpha > -1.0 && beta > -1.0) {
            return Err(domain(
                "disc_grid",
                format!("measure exponents ({alpha}, {beta}) must exceed -1"),
            ));
        }
        let rule = radial_rule(n_r, alpha, beta + radial_shift)?;
        let norm = ln_beta_unchecked(alpha + 1.0, beta + 1.0).exp();
        let angular: Vec<Complex64> = (0..n_theta)
            .map(|j| Complex64::from_polar(1.0, TAU * j as f64 / n_theta as f64))
            .collect();

        let mut points = Vec::with_capacity(n_r * n_theta);
        let mut weights = Vec::with_capacity(n_r * n_theta);
        for (u, w) in rule.iter() {
            let r = u.sqrt();
            let radial_weight = w * u.powf(-radial_shift) / (norm * n_theta as f64);
            for e in &angular {
                points.push(e * r);
                weights.push(radial_weight);
            }
        }
        Ok(Self {
            points,
            weights,
            alpha,
            beta,
            radial_shift,
            n_r,
            n_theta,
        })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn radial_shift(&self) -> f64 {
        self.radial_shift
    }

    pub fn n_r(&self) -> usize {
        self.n_r
    }

    pub fn n_theta(&self) -> usize {
        self.n_theta
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Complex64, f64)> + '_ {
        self.points.iter().copied().zip(self.weights.iter().copied())
    }

    /// `Σ w f(z)`.
    pub fn integrate(&self, f: impl Fn(Complex64) -> Complex64) -> Complex64 {
        self.iter().map(|(z, w)| f(z) * w).sum()
    }

    pub fn integrate_real(&self, f: impl Fn(Complex64) -> f64) -> f64 {
        self.iter().map(|(z, w)| f(z) * w).sum()
    }

    /// Quadrature mass of the measure; 1 up to rounding.
    pub fn mass(&self) -> f64 {
        self.weights.iter().sum()
    }

    /// Largest modulus among the grid points.
    pub fn max_modulus(&self) -> f64 {
        self.points.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }
}
