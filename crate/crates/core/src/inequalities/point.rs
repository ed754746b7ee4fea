use std::time::Instant;

use super::{base_params, circle_points, reference_norm};
use crate::error::{domain, Result};
use crate::report::CheckReport;
use crate::space::{membership, LaurentPoly, SpaceParams};
use crate::specfun::ln_beta_unchecked;

const PROVENANCE: &str = "pointwise bound from subharmonicity on a small disc";
const DERIVATIVE_PROVENANCE: &str = "derivative bound via Cauchy estimate and pointwise bound";

/// Constants of the pointwise estimate `|f(z)|^p ≤ B(α+1,β+1)/c_ε(r) ‖f‖^p`
/// at `|z| = r`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PointBoundConstants {
    pub r: f64,
    pub eps: f64,
    pub r_eps: f64,
    pub a_eps: f64,
    pub b_eps: f64,
    pub c_eps: f64,
    /// `B(α+1,β+1)/c_ε`.
    pub bound: f64,
}

pub fn point_bound_constant(r: f64, eps: f64, alpha: f64, beta: f64) -> Result<PointBoundConstants> {
    const OP: &str = "point_bound_constant";
    if !(r > 0.0 && r < 1.0) {
        return Err(domain(OP, format!("r = {r} outside (0, 1)")));
    }
    if !(eps > 0.0 && eps < 1.0) {
        return Err(domain(OP, format!("eps = {eps} outside (0, 1)")));
    }
    if !(alpha > -1.0 && beta > -1.0) {
        return Err(domain(OP, format!("need alpha, beta > -1, got ({alpha}, {beta})")));
    }
    let r_eps = eps * r.min(1.0 - r);
    let a_eps = if alpha >= 0.0 {
        (1.0 - (r + r_eps).powi(2)).powf(alpha)
    } else {
        (1.0 - (r - r_eps).powi(2)).powf(alpha)
    };
    let b_eps = if beta >= 0.0 {
        (r - r_eps).powf(2.0 * beta)
    } else {
        (r + r_eps).powf(2.0 * beta)
    };
    let c_eps = r_eps * r_eps * a_eps * b_eps;
    let bound = ln_beta_unchecked(alpha + 1.0, beta + 1.0).exp() / c_eps;
    Ok(PointBoundConstants {
        r,
        eps,
        r_eps,
        a_eps,
        b_eps,
        c_eps,
        bound,
    })
}

fn require_member(op: &'static str, f: &LaurentPoly, params: &SpaceParams) -> Result<()> {
    if membership(f, params) {
        Ok(())
    } else {
        Err(domain(
            op,
            format!("pole order {} exceeds {}", f.pole_order(), params.pole_order_bound()),
        ))
    }
}

fn point_report(
    f: &LaurentPoly,
    params: &SpaceParams,
    consts: &PointBoundConstants,
    norm: f64,
    n_samples: usize,
    start: Instant,
) -> CheckReport {
    let p = params.p();
    let lhs = circle_points(consts.r, n_samples)
        .map(|z| f.eval(z).norm().powf(p))
        .fold(0.0, f64::max);
    let mut report = CheckReport::new("point_bound", PROVENANCE);
    for (k, v) in base_params(params) {
        report = report.param(k, v);
    }
    report
        .param("r", consts.r)
        .param("eps", consts.eps)
        .upper_bound(lhs, consts.bound * norm.powf(p), 1e-10)
        .timed(start)
}

/// `max_{|z|=r} |f(z)|^p` over `n_samples` points against
/// `B(α+1,β+1)/c_ε(r) ‖f‖^p`.
pub fn check_point_bound(
    f: &LaurentPoly,
    params: &SpaceParams,
    r: f64,
    eps: f64,
    n_samples: usize,
) -> Result<CheckReport> {
    let start = Instant::now();
    require_member("check_point_bound", f, params)?;
    let consts = point_bound_constant(r, eps, params.alpha(), params.beta())?;
    let norm = reference_norm(f, params)?;
    Ok(point_report(f, params, &consts, norm, n_samples, start))
}

/// [`check_point_bound`] over several `(r, ε)` pairs, sharing one norm.
pub fn check_point_bound_batch(
    f: &LaurentPoly,
    params: &SpaceParams,
    pairs: &[(f64, f64)],
    n_samples: usize,
) -> Result<Vec<CheckReport>> {
    require_member("check_point_bound_batch", f, params)?;
    let norm = reference_norm(f, params)?;
    pairs
        .iter()
        .map(|&(r, eps)| {
            let start = Instant::now();
            let consts = point_bound_constant(r, eps, params.alpha(), params.beta())?;
            Ok(point_report(f, params, &consts, norm, n_samples, start))
        })
        .collect()
}

/// `|f^(n)(z)|^p ≤ c ‖f‖^p` on `|z| = r` with
/// `c = (n!/ρ^n)^p · max_{r' ∈ [r-ρ, r+ρ]} B/c_ε(r')`, `ρ = r_ε/2`.
///
/// The maximum over `r'` is taken on 257 equispaced radii.
pub fn derivative_bound(
    f: &LaurentPoly,
    n: u32,
    params: &SpaceParams,
    r: f64,
    eps: f64,
) -> Result<CheckReport> {
    const SAMPLES: usize = 64;
    const RADII: usize = 257;
    let start = Instant::now();
    require_member("derivative_bound", f, params)?;
    let (alpha, beta, p) = (params.alpha(), params.beta(), params.p());
    let rho = point_bound_constant(r, eps, alpha, beta)?.r_eps / 2.0;
    let mut worst: f64 = 0.0;
    for i in 0..RADII {
        let rr = r - rho + 2.0 * rho * i as f64 / (RADII - 1) as f64;
        worst = worst.max(point_bound_constant(rr, eps, alpha, beta)?.bound);
    }
    let factorial: f64 = (1..=n).map(f64::from).product();
    let c = (factorial / rho.powi(n as i32)).powf(p) * worst;
    let norm = reference_norm(f, params)?;
    let df = f.derivative(n);
    let lhs = circle_points(r, SAMPLES)
        .map(|z| df.eval(z).norm().powf(p))
        .fold(0.0, f64::max);
    let mut report = CheckReport::new("derivative_bound", DERIVATIVE_PROVENANCE);
    for (k, v) in base_params(params) {
        report = report.param(k, v);
    }
    Ok(report
        .param("n", n as f64)
        .param("r", r)
        .param("eps", eps)
        .upper_bound(lhs, c * norm.powf(p), 1e-10)
        .timed(start))
}
