use std::time::Instant;

use num_complex::Complex64;

use super::mean_bounds::reduced_j;
use super::{base_params, reference_norm};
use crate::error::{domain, Result};
use crate::report::CheckReport;
use crate::space::{membership, LaurentPoly, SpaceParams};
use crate::specfun::adaptive_gauss_legendre;

const PROVENANCE: &str = "Fejer-Riesz inequality along a diameter";

/// `∫_{-1}^1 |f(tξ)|^p J(|t|) dt ≤ π ‖f‖^p`.
///
/// The integrand is evaluated as `|t^m f(tξ)|^p · J(|t|)/|t|^(pm)`, which
/// stays bounded at the origin; each half of `[-1, 1]` is integrated
/// adaptively with `n_quad`-point panels.
pub fn fejer_riesz_check(f: &LaurentPoly, params: &SpaceParams, xi: Complex64, n_quad: usize) -> Result<CheckReport> {
    const OP: &str = "fejer_riesz_check";
    let start = Instant::now();
    if (xi.norm() - 1.0).abs() > 1e-12 {
        return Err(domain(OP, format!("|xi| = {} is not 1", xi.norm())));
    }
    if !membership(f, params) {
        return Err(domain(OP, "function is not in the space"));
    }
    let p = params.p();
    let m = params.pole_order_bound() as i32;
    let lifted = f.shift(m);
    let integrand = |t: f64| -> f64 {
        let w = lifted.eval(xi * t).norm().powf(p);
        // both factors are bounded; J's tail never fails inside (0,1)
        w * reduced_j(t.abs(), params).unwrap_or(f64::NAN)
    };
    let left = adaptive_gauss_legendre(&integrand, -1.0, 0.0, 1e-12, n_quad)?;
    let right = adaptive_gauss_legendre(&integrand, 0.0, 1.0, 1e-12, n_quad)?;
    let lhs = left.value + right.value;
    if !lhs.is_finite() {
        return Err(domain(OP, "integrand evaluation failed"));
    }
    let norm = reference_norm(f, params)?;
    let mut report = CheckReport::new("fejer_riesz", PROVENANCE);
    for (k, v) in base_params(params) {
        report = report.param(k, v);
    }
    Ok(report
        .param("xi_re", xi.re)
        .param("xi_im", xi.im)
        .upper_bound(lhs, std::f64::consts::PI * norm.powf(p), 1e-8)
        .timed(start))
}
