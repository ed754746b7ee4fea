use num_complex::Complex64;

use super::lemma::i_omega_radial;
use super::params::OperatorParams;
use crate::error::{domain, Result};
use crate::specfun::{ln_beta_unchecked, DiscGrid};

/// Which of the two operators a grid discretizes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OperatorKind {
    S,
    T,
}

/// A product rule for the composite measure of `S` or `T`.
///
/// The factors `(1-|w|²)^(α-a) |w|^(m-2b)` (for `S`) or
/// `(1-|w|²)^(α-a) |w|^(-2b)` (for `T`) are merged with `μ_{a,b}` into
/// the net radial weights `u^(m/2) (1-u)^α` and `(1-u)^α`, so the rule
/// never evaluates their ratio near the endpoints.
#[derive(Debug, Clone)]
pub struct OperatorGrid {
    kind: OperatorKind,
    params: OperatorParams,
    grid: DiscGrid,
    scale: f64,
}

impl OperatorGrid {
    pub fn new(kind: OperatorKind, params: &OperatorParams, n_r: usize, n_theta: usize) -> Result<Self> {
        let alpha = params.alpha();
        let u_exp = match kind {
            OperatorKind::S => params.m() as f64 / 2.0,
            OperatorKind::T => 0.0,
        };
        let grid = DiscGrid::with_radial_shift(n_r, n_theta, alpha, u_exp, 0.0)?;
        let scale = (ln_beta_unchecked(alpha + 1.0, u_exp + 1.0)
            - ln_beta_unchecked(params.a() + 1.0, params.b() + 1.0))
        .exp();
        Ok(Self {
            kind,
            params: *params,
            grid,
            scale,
        })
    }

    pub fn kind(&self) -> OperatorKind {
        self.kind
    }

    pub fn params(&self) -> &OperatorParams {
        &self.params
    }

    fn check(&self, kind: OperatorKind, op: &OperatorParams, z: Complex64) -> Result<()> {
        const OP: &str = "apply";
        if self.kind != kind {
            return Err(domain(OP, format!("grid built for {:?}, used for {kind:?}", self.kind)));
        }
        if self.params != *op {
            return Err(domain(OP, "grid built for different operator parameters"));
        }
        if !(z.norm() * self.grid.max_modulus() < 1.0) {
            return Err(domain(OP, format!("|z| = {} too close to the boundary", z.norm())));
        }
        if op.m() > 0 && z.norm() == 0.0 {
            return Err(domain(OP, "z = 0 is a pole of the kernel"));
        }
        Ok(())
    }
}

/// `Sf(z) = |z|^-m ∫ f(w) (1-|w|²)^(α-a) |w|^(m-2b) / |1 - z conj w|^(2+α) dμ_{a,b}(w)`.
pub fn apply_s(
    f: impl Fn(Complex64) -> f64,
    z: Complex64,
    op: &OperatorParams,
    grid: &OperatorGrid,
) -> Result<f64> {
    grid.check(OperatorKind::S, op, z)?;
    let e = 2.0 + op.alpha();
    let sum: f64 = grid
        .grid
        .iter()
        .map(|(w, wt)| wt * f(w) / (Complex64::new(1.0, 0.0) - z * w.conj()).norm().powf(e))
        .sum();
    Ok(grid.scale * sum / z.norm().powi(op.m() as i32))
}

/// `Tf(z) = z^-m ∫ f(w) (1-|w|²)^(α-a) w^m / (|w|^(2b) (1 - z conj w)^(2+α)) dμ_{a,b}(w)`.
pub fn apply_t(
    f: impl Fn(Complex64) -> Complex64,
    z: Complex64,
    op: &OperatorParams,
    grid: &OperatorGrid,
) -> Result<Complex64> {
    grid.check(OperatorKind::T, op, z)?;
    let e = 2.0 + op.alpha();
    let m = op.m() as i32;
    let one = Complex64::new(1.0, 0.0);
    let sum: Complex64 = grid
        .grid
        .iter()
        .map(|(w, wt)| f(w) * w.powi(m) * wt / (one - z * w.conj()).powf(e))
        .sum();
    Ok(sum * grid.scale / z.powi(m))
}

/// The adjoint of `S` applied to the constant `1`, with area measure:
/// `(1-|w|²)^(α-a) |w|^(m-2b) I_ω(w)` where `σ = a`, `γ = b - m/2`,
/// `ω = α - a`. Errors when `γ ≤ -1`, where the inner integral diverges.
pub fn adjoint_s_one(w: Complex64, op: &OperatorParams) -> Result<f64> {
    let r = w.norm();
    if !(r > 0.0 && r < 1.0) {
        return Err(domain("adjoint_s_one", format!("w = {w} not in the punctured disc")));
    }
    adjoint_s_one_radial(r, op, super::lemma::I_OMEGA_TOL)
}

pub(crate) fn adjoint_s_one_radial(r: f64, op: &OperatorParams, tol: f64) -> Result<f64> {
    let (alpha, a, b, m) = (op.alpha(), op.a(), op.b(), op.m() as f64);
    let inner = i_omega_radial(r, a, b - m / 2.0, alpha - a, tol)?;
    Ok((1.0 - r * r).powf(alpha - a) * r.powf(m - 2.0 * b) * inner)
}
