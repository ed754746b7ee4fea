use std::f64::consts::TAU;

use num_complex::Complex64;

use super::laurent::LaurentPoly;
use crate::error::{domain, Result};

/// Exponent of a circle mean: finite `p > 0` or the supremum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MeanExponent {
    Finite(f64),
    Infinity,
}

impl MeanExponent {
    /// `1/τ`, zero for the supremum.
    pub fn reciprocal(&self) -> f64 {
        match self {
            Self::Finite(p) => 1.0 / p,
            Self::Infinity => 0.0,
        }
    }
}

/// Circle mean `M_p(r, f)`; `M_∞` is the circle maximum.
///
/// Finite means use the `n_theta`-point trapezoid rule. The maximum is taken
/// over the same samples and the best local maxima are refined by
/// golden-section search to `1e-10` in the angle.
pub fn mean_value(f: &LaurentPoly, r: f64, exponent: MeanExponent, n_theta: usize) -> Result<f64> {
    if !(r > 0.0 && r < 1.0) {
        return Err(domain("mean_value", format!("radius {r} outside (0, 1)")));
    }
    if n_theta == 0 {
        return Err(domain("mean_value", "need at least one sample"));
    }
    let modulus = |theta: f64| f.eval(Complex64::from_polar(r, theta)).norm();
    let step = TAU / n_theta as f64;
    let samples: Vec<f64> = (0..n_theta).map(|j| modulus(step * j as f64)).collect();
    match exponent {
        MeanExponent::Finite(p) => {
            if !(p > 0.0) {
                return Err(domain("mean_value", format!("exponent {p} must be positive")));
            }
            let mean = samples.iter().map(|m| m.powf(p)).sum::<f64>() / n_theta as f64;
            Ok(mean.powf(1.0 / p))
        }
        MeanExponent::Infinity => Ok(circle_max(&samples, step, modulus)),
    }
}

fn circle_max(samples: &[f64], step: f64, modulus: impl Fn(f64) -> f64) -> f64 {
    let n = samples.len();
    let mut peaks: Vec<usize> = (0..n)
        .filter(|&j| {
            let prev = samples[(j + n - 1) % n];
            let next = samples[(j + 1) % n];
            samples[j] >= prev && samples[j] >= next
        })
        .collect();
    peaks.sort_by(|&a, &b| samples[b].total_cmp(&samples[a]));
    let mut best = samples.iter().copied().fold(0.0, f64::max);
    for &j in peaks.iter().take(4) {
        let centre = step * j as f64;
        best = best.max(golden_max(&modulus, centre - step, centre + step, 1e-10));
    }
    best
}

fn golden_max(g: &impl Fn(f64) -> f64, mut a: f64, mut b: f64, tol: f64) -> f64 {
    let inv_phi = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = b - inv_phi * (b - a);
    let mut d = a + inv_phi * (b - a);
    let (mut gc, mut gd) = (g(c), g(d));
    while (b - a).abs() > tol {
        if gc > gd {
            b = d;
            d = c;
            gd = gc;
            c = b - inv_phi * (b - a);
            gc = g(c);
        } else {
            a = c;
            c = d;
            gc = gd;
            d = a + inv_phi * (b - a);
            gd = g(d);
        }
    }
    gc.max(gd).max(g(0.5 * (a + b)))
}
