use num_complex::Complex64;

use crate::error::{domain, Result};
use crate::specfun::{ln_beta_unchecked, DiscGrid};

/// Bergman projection `P_{α,m} f` at the given points.
///
/// `P f(z) = (α+1) B(α+1,m+1) ∫ f(w) / ((z conj w)^m (1 - z conj w)^(2+α)) dμ_{α,m}(w)`,
/// discretized on `grid`, which must be built for `μ_{α,m}`. A grid with
/// radial shift `-m` makes the discretization exact (up to angular aliasing)
/// for Laurent polynomial inputs with `n_min ≥ -m`, because the `|w|^(2m)`
/// of the measure cancels the kernel's `conj(w)^-m`.
pub fn project(
    f: impl Fn(Complex64) -> Complex64,
    alpha: f64,
    m: u32,
    grid: &DiscGrid,
    points: &[Complex64],
) -> Result<Vec<Complex64>> {
    const OP: &str = "project";
    if grid.alpha() != alpha || grid.beta() != m as f64 {
        return Err(domain(
            OP,
            format!(
                "grid built for ({}, {}) but projection needs ({alpha}, {m})",
                grid.alpha(),
                grid.beta()
            ),
        ));
    }
    let reach = grid.max_modulus();
    for z in points {
        if !(z.norm() * reach < 1.0) {
            return Err(domain(OP, format!("|z| max|w| >= 1 at z = {z}")));
        }
        if m > 0 && z.norm() == 0.0 {
            return Err(domain(OP, "evaluation point at the pole z = 0"));
        }
    }
    let lead = (alpha + 1.0) * ln_beta_unchecked(alpha + 1.0, m as f64 + 1.0).exp();
    let samples: Vec<(Complex64, Complex64)> = grid.iter().map(|(w, wt)| (w.conj(), f(w) * wt)).collect();
    let one = Complex64::new(1.0, 0.0);
    let exponent = 2.0 + alpha;
    Ok(points
        .iter()
        .map(|&z| {
            let acc: Complex64 = samples
                .iter()
                .map(|&(wbar, fw)| {
                    let x = z * wbar;
                    fw / (x.powi(m as i32) * (one - x).powf(exponent))
                })
                .sum();
            acc * lead
        })
        .collect())
}
