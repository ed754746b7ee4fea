//! Constructive constants and numerical verifiers for the point-evaluation,
//! circle-mean, Hardy-Littlewood, and Fejér-Riesz inequalities.

mod fejer;
mod mean_bounds;
mod point;

pub use fejer::fejer_riesz_check;
pub use mean_bounds::{
    check_mp_bound, default_hl_grid, hardy_littlewood_scan, j_lower_bound, j_weight, HlScan,
};
pub use point::{
    check_point_bound, check_point_bound_batch, derivative_bound, point_bound_constant,
    PointBoundConstants,
};

use crate::error::Result;
use crate::space::{space_norm, LaurentPoly, SpaceParams};

/// Radial nodes used when a check needs `‖f‖_{α,β,p}` by quadrature.
pub const NORM_NR: usize = 48;
/// Minimum angular nodes for the same.
pub const NORM_NTHETA: usize = 128;

/// `‖f‖_{α,β,p}` as used by the checks: exact for `p = 2`, otherwise an
/// adapted product rule whose angular size grows with the degree span.
pub fn reference_norm(f: &LaurentPoly, params: &SpaceParams) -> Result<f64> {
    let span = if f.is_zero() {
        0
    } else {
        (f.n_max() - f.n_min()) as usize
    };
    space_norm(f, params, NORM_NR, NORM_NTHETA.max(16 * span))
}

fn circle_points(r: f64, n: usize) -> impl Iterator<Item = num_complex::Complex64> {
    (0..n).map(move |j| num_complex::Complex64::from_polar(r, std::f64::consts::TAU * j as f64 / n as f64))
}

fn base_params(p: &SpaceParams) -> [(&'static str, f64); 3] {
    [("alpha", p.alpha()), ("beta", p.beta()), ("p", p.p())]
}
