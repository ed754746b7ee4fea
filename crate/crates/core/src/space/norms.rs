use num_complex::Complex64;

use super::laurent::LaurentPoly;
use super::params::SpaceParams;
use crate::error::{domain, Result};
use crate::specfun::{ln_beta_unchecked, DiscGrid};

/// `‖z^n‖^2_{α,β,2} = B(α+1, n+β+1)/B(α+1, β+1)`, or an error when the
/// moment diverges.
pub fn monomial_moment(n: i32, alpha: f64, beta: f64) -> Result<f64> {
    radial_moment(n as f64, alpha, beta)
}

/// `∫ |z|^(2s) dμ_{α,β} = B(α+1, s+β+1)/B(α+1, β+1)` for real `s`.
pub fn radial_moment(s: f64, alpha: f64, beta: f64) -> Result<f64> {
    if !(s + beta + 1.0 > 0.0) {
        return Err(domain(
            "radial_moment",
            format!("moment of |z|^(2·{s}) diverges for beta = {beta}"),
        ));
    }
    Ok((ln_beta_unchecked(alpha + 1.0, s + beta + 1.0)
        - ln_beta_unchecked(alpha + 1.0, beta + 1.0))
    .exp())
}

/// `‖z^n‖_{α,β,p}`.
pub fn monomial_norm(n: i32, params: &SpaceParams) -> Result<f64> {
    let p = params.p();
    let s = p * n as f64 / 2.0;
    radial_moment(s, params.alpha(), params.beta())
        .map(|m| m.powf(1.0 / p))
        .map_err(|_| {
            domain(
                "monomial_norm",
                format!("z^{n} is not p-integrable for {params:?}"),
            )
        })
}

/// `f ∈ A^p_{α,β}`: the pole order does not exceed `m_{p,β}`.
pub fn membership(f: &LaurentPoly, params: &SpaceParams) -> bool {
    f.pole_order() <= params.pole_order_bound()
}

/// `⟨f, g⟩_{α,β}` from the coefficients:
/// `Σ a_n conj(b_n) B(α+1, n+β+1)/B(α+1, β+1)`.
pub fn inner_product(f: &LaurentPoly, g: &LaurentPoly, alpha: f64, beta: f64) -> Result<Complex64> {
    if f.is_zero() || g.is_zero() {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let lo = f.n_min().max(g.n_min());
    let hi = f.n_max().min(g.n_max());
    let mut acc = Complex64::new(0.0, 0.0);
    for n in lo..=hi {
        let prod = f.coeff(n) * g.coeff(n).conj();
        if prod == Complex64::new(0.0, 0.0) {
            continue;
        }
        let moment = monomial_moment(n, alpha, beta).map_err(|_| {
            domain(
                "inner_product",
                format!("shared index {n} has n + beta + 1 <= 0 (beta = {beta})"),
            )
        })?;
        acc += prod * moment;
    }
    Ok(acc)
}

/// `‖f‖_{α,β,2}` from the coefficients.
pub fn coefficient_norm(f: &LaurentPoly, alpha: f64, beta: f64) -> Result<f64> {
    Ok(inner_product(f, f, alpha, beta)?.re.max(0.0).sqrt())
}

/// Outcome of [`norm_quadrature`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureNorm {
    pub value: f64,
    /// Set when `f` has a pole and `β ≤ 0`; the accuracy contract is then
    /// `1e-6` instead of `1e-9`.
    pub degraded: bool,
}

/// `(Σ w |f(z)|^p)^(1/p)` over a grid for `μ_{α,β}`.
pub fn norm_quadrature(f: &LaurentPoly, params: &SpaceParams, grid: &DiscGrid) -> Result<QuadratureNorm> {
    const OP: &str = "norm_quadrature";
    if grid.alpha() != params.alpha() || grid.beta() != params.beta() {
        return Err(domain(
            OP,
            format!(
                "grid built for ({}, {}) but parameters are ({}, {})",
                grid.alpha(),
                grid.beta(),
                params.alpha(),
                params.beta()
            ),
        ));
    }
    if !membership(f, params) {
        return Err(domain(
            OP,
            format!(
                "pole order {} exceeds m_(p,beta) = {}",
                f.pole_order(),
                params.pole_order_bound()
            ),
        ));
    }
    let p = params.p();
    let sum = grid.integrate_real(|z| f.eval(z).norm().powf(p));
    Ok(QuadratureNorm {
        value: sum.powf(1.0 / p),
        degraded: f.pole_order() > 0 && params.beta() <= 0.0,
    })
}

/// A grid adapted to `|f|^p`: the radial rule absorbs `|z|^(p·n_min)`, so the
/// remaining integrand `|f(z)/z^n_min|^p` is smooth at the origin.
pub fn norm_grid(f: &LaurentPoly, params: &SpaceParams, n_r: usize, n_theta: usize) -> Result<DiscGrid> {
    let shift = if f.is_zero() {
        0.0
    } else {
        params.p() * f.n_min() as f64 / 2.0
    };
    DiscGrid::with_radial_shift(n_r, n_theta, params.alpha(), params.beta(), shift)
}

/// `‖f‖_{α,β,p}`: exact coefficient sum when `p = 2`, adapted quadrature
/// otherwise.
pub fn space_norm(f: &LaurentPoly, params: &SpaceParams, n_r: usize, n_theta: usize) -> Result<f64> {
    if params.p() == 2.0 {
        return coefficient_norm(f, params.alpha(), params.beta());
    }
    let grid = norm_grid(f, params, n_r, n_theta)?;
    Ok(norm_quadrature(f, params, &grid)?.value)
}

/// `(f̃, ν_f)` with `f̃(z) = z^ν_f f(z)` holomorphic on the disc.
pub fn tilde_transform(f: &LaurentPoly) -> (LaurentPoly, u32) {
    let nu = f.pole_order();
    (f.shift(nu as i32), nu)
}
