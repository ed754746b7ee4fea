use num_complex::Complex64;

use super::eval::{series_coefficient, KernelEval};
use crate::error::{domain, Error, Result};
use crate::space::LaurentPoly;

const MIN_LEVEL: u32 = 8;
const MAX_LEVEL: u32 = 16;
const CONTOUR_FLOOR: f64 = 1e-12;
const MAX_RETRIES: usize = 5;

/// Truncated kernel `w ↦ K̂(w, z)`: the first `trunc` terms of the series,
/// starting at `w^-m`.
pub fn truncated_kernel(alpha: f64, beta: f64, z: Complex64, trunc: usize) -> Result<LaurentPoly> {
    let m = KernelEval::new(alpha, beta)?.m() as i32;
    let zbar = z.conj();
    let coeffs = (0..trunc)
        .map(|i| {
            let n = -m + i as i32;
            series_coefficient(alpha, beta, n).map(|c| zbar.powi(n) * c)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(LaurentPoly::new(-m, coeffs))
}

/// Number of zeros of the truncated kernel in the open annulus
/// `r_in < |w| < r_out`, by the argument principle on both boundary circles.
///
/// A circle on which the kernel nearly vanishes is nudged outward, up to five
/// times, before giving up.
pub fn kernel_zero_count(
    alpha: f64,
    beta: f64,
    annulus: (f64, f64),
    z_fixed: Complex64,
    trunc: usize,
) -> Result<i64> {
    const OP: &str = "kernel_zero_count";
    let (r_in, r_out) = annulus;
    if !(r_in > 0.0 && r_in < r_out) {
        return Err(domain(OP, format!("bad annulus ({r_in}, {r_out})")));
    }
    if trunc == 0 {
        return Err(domain(OP, "trunc must be at least 1"));
    }
    let k = truncated_kernel(alpha, beta, z_fixed, trunc)?;
    let dk = k.derivative(1);
    let outer = winding_with_retry(&k, &dk, r_out)?;
    let inner = winding_with_retry(&k, &dk, r_in)?;
    Ok(outer - inner)
}

fn winding_with_retry(k: &LaurentPoly, dk: &LaurentPoly, r: f64) -> Result<i64> {
    let mut radius = r;
    for attempt in 0..=MAX_RETRIES {
        match winding(k, dk, radius) {
            Ok(n) => return Ok(n),
            Err(ContourError::NearZero) if attempt < MAX_RETRIES => {
                radius *= 1.0 + 1e-3 * (attempt as f64 + 1.0);
            }
            Err(ContourError::NearZero) => {
                return Err(domain(
                    "kernel_zero_count",
                    format!("contour passes through a zero near |w| = {r} after {MAX_RETRIES} retries"),
                ))
            }
            Err(ContourError::Unsettled(achieved)) => {
                return Err(Error::NoConvergence {
                    op: "kernel_zero_count",
                    iterations: MAX_LEVEL as usize,
                    achieved,
                })
            }
        }
    }
    unreachable!()
}

enum ContourError {
    NearZero,
    Unsettled(f64),
}

// (1/2πi)∮ K'/K dw = mean over the circle of w K'(w)/K(w)
fn winding(k: &LaurentPoly, dk: &LaurentPoly, r: f64) -> std::result::Result<i64, ContourError> {
    let mut prev: Option<f64> = None;
    let mut last = f64::NAN;
    for level in MIN_LEVEL..=MAX_LEVEL {
        let n = 1usize << level;
        let mut acc = Complex64::new(0.0, 0.0);
        for j in 0..n {
            let w = Complex64::from_polar(r, std::f64::consts::TAU * j as f64 / n as f64);
            let kv = k.eval(w);
            if kv.norm() < CONTOUR_FLOOR {
                return Err(ContourError::NearZero);
            }
            acc += w * dk.eval(w) / kv;
        }
        let est = acc.re / n as f64;
        last = est;
        if let Some(p) = prev {
            let nearest = est.round();
            if (est - p).abs() < 0.01 && (est - nearest).abs() < 0.01 {
                return Ok(nearest as i64);
            }
        }
        prev = Some(est);
    }
    Err(ContourError::Unsettled(last))
}
