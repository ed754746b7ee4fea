use std::f64::consts::PI;

use crate::error::{domain, Error, Result};
use crate::specfun::{gauss_legendre, ln_beta_unchecked, radial_rule};

/// Relative agreement demanded between successive refinements.
pub const I_OMEGA_TOL: f64 = 1e-6;
const ORDERS: [usize; 5] = [12, 20, 32, 48, 64];
const MAX_ANGULAR_LEVEL: u32 = 26;

/// `I_ω(z) = ∫_D (1-|w|²)^σ |w|^(2γ) / |1 - z conj w|^(2+σ+ω) dA(w)`
/// with normalized area `dA`.
///
/// Radially the disc is cut into `[0, 1/2]` (Gauss-Jacobi with `u^γ`),
/// geometric panels toward `1`, and a final panel of width below
/// `(1-|z|²)/64` (Gauss-Jacobi with `(1-u)^σ`); the angular average is a
/// trapezoid rule doubled until it settles. The radial order is raised until
/// two orders agree to `1e-6`.
pub fn i_omega(z: num_complex::Complex64, sigma: f64, gamma: f64, omega: f64) -> Result<f64> {
    i_omega_radial(z.norm(), sigma, gamma, omega, I_OMEGA_TOL)
}

/// [`i_omega`] as a function of `|z|` with an explicit refinement tolerance.
pub fn i_omega_radial(r: f64, sigma: f64, gamma: f64, omega: f64, tol: f64) -> Result<f64> {
    const OP: &str = "i_omega";
    if !(sigma > -1.0 && gamma > -1.0) {
        return Err(domain(OP, format!("need sigma, gamma > -1, got ({sigma}, {gamma})")));
    }
    if !(r >= 0.0 && r < 1.0) {
        return Err(domain(OP, format!("|z| = {r} outside [0, 1)")));
    }
    if r == 0.0 {
        return Ok(ln_beta_unchecked(gamma + 1.0, sigma + 1.0).exp());
    }
    let lambda = (2.0 + sigma + omega) / 2.0;
    let delta = 1.0 - r * r;
    let levels = (64.0 / delta).log2().ceil().max(1.0) as i32;
    let mut prev: Option<f64> = None;
    let mut achieved = f64::NAN;
    for &n in &ORDERS {
        let v = radial_sum(n, levels, r, sigma, gamma, lambda)?;
        if let Some(pv) = prev {
            achieved = ((v - pv) / v).abs();
            if achieved <= tol {
                return Ok(v);
            }
        }
        prev = Some(v);
    }
    Err(Error::NoConvergence {
        op: OP,
        iterations: ORDERS.len(),
        achieved,
    })
}

fn radial_sum(n: usize, levels: i32, r: f64, sigma: f64, gamma: f64, lambda: f64) -> Result<f64> {
    let ang = |u: f64| angular_mean(r * u.sqrt(), lambda);
    let mut total = 0.0;
    let head = radial_rule(n, 0.0, gamma)?;
    for (u, w) in head.mapped(0.0, 0.5) {
        total += w * (1.0 - u).powf(sigma) * ang(u)?;
    }
    for j in 1..levels {
        let lo = 1.0 - 0.5f64.powi(j);
        let hi = 1.0 - 0.5f64.powi(j + 1);
        for (u, w) in gauss_legendre(n, lo, hi)? {
            total += w * u.powf(gamma) * (1.0 - u).powf(sigma) * ang(u)?;
        }
    }
    let tail = radial_rule(n, sigma, 0.0)?;
    for (u, w) in tail.mapped(1.0 - 0.5f64.powi(levels), 1.0) {
        total += w * u.powf(gamma) * ang(u)?;
    }
    Ok(total)
}

/// `(1/2π) ∫ |1 - ρ e^{iθ}|^(-2λ) dθ` by a trapezoid rule on `[0, π]`.
///
/// The angle is reparametrized by `tan(θ/2) = c tan(φ/2)` with
/// `c = √((1-ρ)/(1+ρ))`, which widens the peak at `θ = 0` from `O(1-ρ)` to
/// `O(√(1-ρ))`.
fn angular_mean(rho: f64, lambda: f64) -> Result<f64> {
    if lambda == 0.0 || rho == 0.0 {
        return Ok(1.0);
    }
    let c = ((1.0 - rho) / (1.0 + rho)).sqrt();
    let g = |phi: f64| {
        let (sn, cs) = (phi / 2.0).sin_cos();
        let den = cs * cs + c * c * sn * sn;
        let half_sin_sq = c * c * sn * sn / den;
        let dist_sq = (1.0 - rho).powi(2) + 4.0 * rho * half_sin_sq;
        dist_sq.powf(-lambda) * c / den
    };
    let mut n = 8usize;
    let mut sum = 0.5 * (g(0.0) + g(PI)) + (1..n).map(|j| g(PI * j as f64 / n as f64)).sum::<f64>();
    let mut est = sum / n as f64;
    for _ in 4..MAX_ANGULAR_LEVEL {
        sum += (0..n).map(|j| g(PI * (2 * j + 1) as f64 / (2 * n) as f64)).sum::<f64>();
        n *= 2;
        let next = sum / n as f64;
        if (next - est).abs() <= 1e-13 * next.abs() {
            return Ok(next);
        }
        est = next;
    }
    Err(Error::NoConvergence {
        op: "i_omega",
        iterations: n,
        achieved: f64::NAN,
    })
}

/// Least-squares line through `(x, y)`: `(slope, intercept, r²)`.
pub fn linear_fit(xs: &[f64], ys: &[f64]) -> (f64, f64, f64) {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let syy: f64 = ys.iter().map(|y| (y - my).powi(2)).sum();
    let slope = sxy / sxx;
    let r2 = if syy == 0.0 { 1.0 } else { sxy * sxy / (sxx * syy) };
    (slope, my - slope * mx, r2)
}

/// Boundary behaviour of `I_ω` along a sequence of radii.
#[derive(Debug, Clone, PartialEq)]
pub struct AsymptoticFit {
    pub radii: Vec<f64>,
    pub values: Vec<f64>,
    /// Slope of `log |I(r_{k+1}) - I(r_k)|` against `log 1/(1-r_k²)`; tends
    /// to `ω` whether `I` grows like a power, a logarithm, or converges.
    pub slope: f64,
    pub slope_r2: f64,
    /// Slope of `log I` against `log 1/(1-r²)`, biased by lower-order terms.
    pub plain_slope: f64,
    /// `r²` of the fit of `I` against `log 1/(1-r²)`.
    pub log_linear_r2: f64,
    /// `max I / min I` over the radii.
    pub spread: f64,
}

pub fn default_fit_radii() -> Vec<f64> {
    (4..=12).map(|k| 1.0 - 0.5f64.powi(k)).collect()
}

pub fn i_omega_asymptotic_fit(sigma: f64, gamma: f64, omega: f64, radii: &[f64]) -> Result<AsymptoticFit> {
    if radii.len() < 3 {
        return Err(domain("i_omega_asymptotic_fit", "need at least three radii"));
    }
    let values = radii
        .iter()
        .map(|&r| i_omega_radial(r, sigma, gamma, omega, 1e-9))
        .collect::<Result<Vec<_>>>()?;
    let logs: Vec<f64> = radii.iter().map(|r| -(1.0 - r * r).ln()).collect();
    let (plain_slope, _, _) = linear_fit(&logs, &values.iter().map(|v| v.ln()).collect::<Vec<_>>());
    let (_, _, log_linear_r2) = linear_fit(&logs, &values);
    let diffs: Vec<f64> = values.windows(2).map(|w| (w[1] - w[0]).abs().ln()).collect();
    let (slope, _, slope_r2) = linear_fit(&logs[..diffs.len()], &diffs);
    let max = values.iter().cloned().fold(f64::MIN, f64::max);
    let min = values.iter().cloned().fold(f64::MAX, f64::min);
    Ok(AsymptoticFit {
        radii: radii.to_vec(),
        values,
        slope,
        slope_r2,
        plain_slope,
        log_linear_r2,
        spread: max / min,
    })
}
