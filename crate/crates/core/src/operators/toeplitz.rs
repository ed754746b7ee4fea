use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

use crate::error::{domain, Result};
use crate::inequalities::j_weight;
use crate::space::{monomial_moment, pole_order_bound, SpaceParams};
use crate::specfun::adaptive_gauss_legendre;

const QUAD_TOL: f64 = 1e-11;

/// Matrix of the diameter Toeplitz operator
/// `Tf(z) = ∫_{-1}^1 f(ξx) K(z, ξx) J_{α,β,2}(|x|) dx`
/// in the orthonormal basis `e_n`, `n = -m … N-m-1`:
/// `T_jk = ⟨T e_k, e_j⟩ = ∫_{-1}^1 e_k(ξx) conj(e_j(ξx)) J(|x|) dx`.
#[derive(Debug, Clone, PartialEq)]
pub struct ToeplitzMatrix {
    pub xi: Complex64,
    pub alpha: f64,
    pub beta: f64,
    pub m: u32,
    pub entries: DMatrix<Complex64>,
}

impl ToeplitzMatrix {
    pub fn size(&self) -> usize {
        self.entries.nrows()
    }

    /// Basis index of row/column `i`.
    pub fn index(&self, i: usize) -> i32 {
        i as i32 - self.m as i32
    }

    /// `max |T_jk - conj(T_kj)|`.
    pub fn hermitian_defect(&self) -> f64 {
        let t = &self.entries;
        let mut worst: f64 = 0.0;
        for j in 0..t.nrows() {
            for k in 0..t.ncols() {
                worst = worst.max((t[(j, k)] - t[(k, j)].conj()).norm());
            }
        }
        worst
    }

    /// Eigenvalues of the Hermitian part, ascending.
    pub fn eigenvalues(&self) -> Vec<f64> {
        let h = (&self.entries + self.entries.adjoint()) * Complex64::new(0.5, 0.0);
        let mut ev: Vec<f64> = h.symmetric_eigen().eigenvalues.iter().copied().collect();
        ev.sort_by(|a, b| a.total_cmp(b));
        ev
    }

    /// `⟨Tf, f⟩ = a^H T a` for `f = Σ a_i e_{index(i)}`.
    pub fn quadratic_form(&self, coeffs: &[Complex64]) -> Result<f64> {
        if coeffs.len() != self.size() {
            return Err(domain("quadratic_form", "coefficient count does not match the matrix"));
        }
        let a = DVector::from_column_slice(coeffs);
        Ok((a.adjoint() * &self.entries * &a)[(0, 0)].re)
    }
}

/// `∫_{-1}^1 x^n J_{α,β,2}(|x|) dx`, each half integrated adaptively.
pub fn diameter_moment(n: i32, params: &SpaceParams, n_quad: usize) -> Result<f64> {
    let m = params.pole_order_bound() as i32;
    if n + 2 * m < 0 {
        return Err(domain("diameter_moment", format!("x^{n} J(|x|) is not integrable")));
    }
    let g = |x: f64| x.powi(n) * j_weight(x.abs(), params).unwrap_or(f64::NAN);
    let left = adaptive_gauss_legendre(&g, -1.0, 0.0, QUAD_TOL, n_quad)?;
    let right = adaptive_gauss_legendre(&g, 0.0, 1.0, QUAD_TOL, n_quad)?;
    Ok(left.value + right.value)
}

/// Builds the `N×N` matrix at `ξ = 1` from diameter moments and conjugates
/// it by `diag(ξ^k)` for general `ξ`.
pub fn toeplitz_matrix(xi: Complex64, alpha: f64, beta: f64, n: usize, n_quad: usize) -> Result<ToeplitzMatrix> {
    const OP: &str = "toeplitz_matrix";
    if n == 0 {
        return Err(domain(OP, "need N >= 1"));
    }
    if (xi.norm() - 1.0).abs() > 1e-12 {
        return Err(domain(OP, format!("|xi| = {} is not 1", xi.norm())));
    }
    let params = SpaceParams::new(alpha, beta, 2.0)?;
    let m = pole_order_bound(2.0, beta)?;
    let idx = |i: usize| i as i32 - m as i32;
    let scale = (0..n)
        .map(|i| monomial_moment(idx(i), alpha, beta).map(|v| v.sqrt().recip()))
        .collect::<Result<Vec<_>>>()?;
    let moments = (0..2 * n - 1)
        .map(|s| diameter_moment(s as i32 - 2 * m as i32, &params, n_quad))
        .collect::<Result<Vec<_>>>()?;
    let entries = DMatrix::from_fn(n, n, |j, k| {
        let phase = xi.conj().powi(idx(j)) * xi.powi(idx(k));
        phase * (scale[j] * scale[k] * moments[j + k])
    });
    Ok(ToeplitzMatrix {
        xi,
        alpha,
        beta,
        m,
        entries,
    })
}

/// One entry computed directly from `e_k(ξx) conj(e_j(ξx)) J(|x|)`, without
/// the moment reduction.
pub fn toeplitz_entry_direct(xi: Complex64, alpha: f64, beta: f64, j: i32, k: i32, n_quad: usize) -> Result<Complex64> {
    let params = SpaceParams::new(alpha, beta, 2.0)?;
    let cj = monomial_moment(j, alpha, beta)?.sqrt().recip();
    let ck = monomial_moment(k, alpha, beta)?.sqrt().recip();
    let integrand = |x: f64| {
        let w = xi * x;
        w.powi(k) * ck * (w.powi(j) * cj).conj() * j_weight(x.abs(), &params).unwrap_or(f64::NAN)
    };
    let part = |f: &dyn Fn(f64) -> f64| -> Result<f64> {
        Ok(adaptive_gauss_legendre(f, -1.0, 0.0, QUAD_TOL, n_quad)?.value
            + adaptive_gauss_legendre(f, 0.0, 1.0, QUAD_TOL, n_quad)?.value)
    };
    let re = part(&|x| integrand(x).re)?;
    let im = part(&|x| integrand(x).im)?;
    Ok(Complex64::new(re, im))
}
