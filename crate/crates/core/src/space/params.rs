use crate::error::{domain, Result};
use crate::specfun::ln_beta_unchecked;

/// Absolute tolerance used to decide whether a float is an integer.
pub const INTEGRALITY_TOL: f64 = 1e-12;

/// `Some(k)` when `x` is within [`INTEGRALITY_TOL`] of the integer `k`.
pub fn nearest_integer(x: f64) -> Option<i64> {
    let k = x.round();
    ((x - k).abs() <= INTEGRALITY_TOL).then_some(k as i64)
}

/// The parameters `(α, β, p)` of `A^p_{α,β}(D*)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpaceParams {
    alpha: f64,
    beta: f64,
    p: f64,
}

impl SpaceParams {
    pub fn new(alpha: f64, beta: f64, p: f64) -> Result<Self> {
        if !(alpha > -1.0 && alpha.is_finite()) {
            return Err(domain("SpaceParams", format!("alpha = {alpha} must be > -1")));
        }
        if !(beta > -1.0 && beta.is_finite()) {
            return Err(domain("SpaceParams", format!("beta = {beta} must be > -1")));
        }
        if !(p > 0.0 && p.is_finite()) {
            return Err(domain("SpaceParams", format!("p = {p} must be positive")));
        }
        Ok(Self { alpha, beta, p })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn beta(&self) -> f64 {
        self.beta
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    /// Largest admissible pole order `m_{p,β}`.
    pub fn pole_order_bound(&self) -> u32 {
        pole_order_unchecked(self.p, self.beta)
    }

    /// The integer `m` with `β ∈ (m-1, m]`; the Hilbert basis starts at `z^-m`.
    pub fn m_ceil(&self) -> u32 {
        beta_ceiling(self.beta)
    }

    /// `B(α+1, β+1)`, the normalizing constant of `μ_{α,β}`.
    pub fn norm_constant(&self) -> f64 {
        ln_beta_unchecked(self.alpha + 1.0, self.beta + 1.0).exp()
    }

    pub fn with_p(&self, p: f64) -> Result<Self> {
        Self::new(self.alpha, self.beta, p)
    }
}

/// Maximal pole order at the origin of a member of `A^p_{α,β}`:
/// `⌊2(β+1)/p⌋`, lowered by one when `2(β+1)/p` is an integer.
///
/// Integrality is decided with an absolute tolerance of `1e-12`, so values
/// such as `β = 0.1 * 3 - 0.3` land on the integer branch deterministically.
pub fn pole_order_bound(p: f64, beta: f64) -> Result<u32> {
    if !(p > 0.0 && p.is_finite()) || !(beta > -1.0 && beta.is_finite()) {
        return Err(domain(
            "pole_order_bound",
            format!("need p > 0 and beta > -1, got p = {p}, beta = {beta}"),
        ));
    }
    Ok(pole_order_unchecked(p, beta))
}

fn pole_order_unchecked(p: f64, beta: f64) -> u32 {
    let x = 2.0 * (beta + 1.0) / p;
    match nearest_integer(x) {
        Some(k) => (k - 1).max(0) as u32,
        None => x.floor() as u32,
    }
}

pub(crate) fn beta_ceiling(beta: f64) -> u32 {
    match nearest_integer(beta) {
        Some(k) => k.max(0) as u32,
        None => beta.ceil().max(0.0) as u32,
    }
}
