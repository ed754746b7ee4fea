use num_complex::Complex64;

use super::eval::{series_coefficient, KernelEval};
use crate::error::{domain, Error, Result};
use crate::space::LaurentPoly;

/// The quantities characterizing point evaluation at `z`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Extremal {
    /// `sup { |f(z)|² : ‖f‖ ≤ 1 } = K(z, z)`.
    pub q: f64,
    /// `inf { ‖f‖ : f(z) = 1 } = K(z, z)^(-1/2)`.
    pub m: f64,
    /// Norm of the evaluation functional, `√K(z, z)`.
    pub dirac_norm: f64,
}

pub fn extremal_quantities(alpha: f64, beta: f64, z: Complex64) -> Result<Extremal> {
    let r = z.norm();
    if !(r > 0.0 && r < 1.0) {
        return Err(domain("extremal_quantities", format!("z = {z} is not in the punctured disc")));
    }
    let k = KernelEval::new(alpha, beta)?.diagonal(z)?;
    Ok(Extremal {
        q: k,
        m: k.sqrt().recip(),
        dirac_norm: k.sqrt(),
    })
}

/// `K(·, z)` truncated to a Laurent polynomial in `w`, with coefficients
/// `c_n conj(z)^n`. The omitted part has squared norm below `tol` relative
/// to the retained part.
pub fn kernel_section(alpha: f64, beta: f64, z: Complex64, tol: f64) -> Result<LaurentPoly> {
    const OP: &str = "kernel_section";
    const MAX_TERMS: usize = 1_000_000;
    let k = KernelEval::new(alpha, beta)?;
    let r2 = z.norm_sqr();
    if !(r2 > 0.0 && r2 < 1.0) {
        return Err(domain(OP, format!("z = {z} is not in the punctured disc")));
    }
    let m = k.m() as i32;
    let zbar = z.conj();
    let mut coeffs = Vec::new();
    let mut c = series_coefficient(alpha, beta, -m)?;
    let mut norm_sq = 0.0;
    for i in 0..MAX_TERMS {
        let n = -m + i as i32;
        coeffs.push(zbar.powi(n) * c);
        // ‖·‖² = Σ c_n |z|^(2n): same ratio structure as the kernel series
        let term = c * r2.powi(n);
        norm_sq += term;
        let nb = n as f64 + beta;
        let q = r2 * (nb + alpha + 2.0) / (nb + 1.0);
        if q < 1.0 && term * q / (1.0 - q) <= tol * norm_sq {
            return Ok(LaurentPoly::new(-m, coeffs));
        }
        c *= (nb + alpha + 2.0) / (nb + 1.0);
    }
    Err(Error::NoConvergence {
        op: OP,
        iterations: MAX_TERMS,
        achieved: f64::NAN,
    })
}
