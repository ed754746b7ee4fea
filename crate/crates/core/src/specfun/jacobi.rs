//! Gauss-Jacobi rules on (0, 1).
//!
//! Nodes start from the eigenvalues of the symmetric Jacobi matrix
//! (Golub-Welsch) and are polished by Newton steps on `P_n^(a,b)`. Weights
//! come from the closed-form Christoffel expression, which is more accurate
//! near the endpoints than squared eigenvector components.

use nalgebra::DMatrix;

use super::gamma::{ln_beta_unchecked, ln_gamma_unchecked};
use crate::error::{domain, Error, Result};

const NEWTON_MAX_ITER: usize = 50;
const NODE_TOL: f64 = 1e-14;

/// An `n`-point rule for `∫_0^1 u^b_exp (1-u)^a_exp g(u) du`.
#[derive(Debug, Clone, PartialEq)]
pub struct QuadRule1D {
    nodes: Vec<f64>,
    weights: Vec<f64>,
    a_exp: f64,
    b_exp: f64,
}

impl QuadRule1D {
    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Exponent on `(1-u)`.
    pub fn a_exp(&self) -> f64 {
        self.a_exp
    }

    /// Exponent on `u`.
    pub fn b_exp(&self) -> f64 {
        self.b_exp
    }

    /// Polynomial degree integrated exactly, `2n - 1`.
    pub fn degree(&self) -> usize {
        2 * self.nodes.len() - 1
    }

    pub fn iter(&self) -> impl Iterator<Item = (f64, f64)> + '_ {
        self.nodes.iter().copied().zip(self.weights.iter().copied())
    }

    pub fn integrate(&self, mut g: impl FnMut(f64) -> f64) -> f64 {
        self.iter().map(|(u, w)| w * g(u)).sum()
    }

    /// Same rule mapped affinely onto `(lo, hi)`; weights absorb the Jacobian
    /// `(hi - lo)^(1 + a_exp + b_exp)` so that the weight becomes
    /// `(v - lo)^b_exp (hi - v)^a_exp`.
    pub fn mapped(&self, lo: f64, hi: f64) -> Vec<(f64, f64)> {
        let len = hi - lo;
        let scale = len.powf(1.0 + self.a_exp + self.b_exp);
        self.iter().map(|(u, w)| (lo + len * u, w * scale)).collect()
    }
}

/// Gauss-Jacobi rule with weight `u^b_exp (1-u)^a_exp` on `(0, 1)`, exact for
/// polynomials of degree `≤ 2n - 1`.
pub fn radial_rule(n: usize, a_exp: f64, b_exp: f64) -> Result<QuadRule1D> {
    const OP: &str = "radial_rule";
    if n == 0 {
        return Err(domain(OP, "need at least one node"));
    }
    if !(a_exp > -1.0 && b_exp > -1.0) {
        return Err(domain(
            OP,
            format!("exponents ({a_exp}, {b_exp}) must exceed -1"),
        ));
    }
    // On [-1, 1] the Jacobi weight is (1-x)^a (1+x)^b, and u = (1+x)/2.
    let (a, b) = (a_exp, b_exp);
    let guesses = jacobi_matrix_eigenvalues(n, a, b);

    let nf = n as f64;
    let ln_const = ln_gamma_unchecked(nf + a + 1.0) + ln_gamma_unchecked(nf + b + 1.0)
        - ln_gamma_unchecked(nf + a + b + 1.0)
        - ln_gamma_unchecked(nf + 1.0);

    let mut nodes = Vec::with_capacity(n);
    let mut weights = Vec::with_capacity(n);
    for x0 in guesses {
        let (x, dp) = newton_polish(n, a, b, x0)?;
        // Christoffel weight on [-1,1] is 2^(a+b+1) C / ((1-x²) P'²); the map to
        // (0,1) divides by 2^(a+b+1).
        let w = ln_const.exp() / ((1.0 - x * x) * dp * dp);
        nodes.push(0.5 * (1.0 + x));
        weights.push(w);
    }
    // Recover exact normalization from the closed-form mass; this only absorbs
    // rounding in the gamma prefactor.
    let mass: f64 = weights.iter().sum();
    let exact = ln_beta_unchecked(b + 1.0, a + 1.0).exp();
    let fix = exact / mass;
    if (fix - 1.0).abs() > 1e-10 {
        return Err(Error::NoConvergence {
            op: OP,
            iterations: NEWTON_MAX_ITER,
            achieved: (fix - 1.0).abs(),
        });
    }
    for w in &mut weights {
        *w *= fix;
    }
    Ok(QuadRule1D {
        nodes,
        weights,
        a_exp,
        b_exp,
    })
}

/// Gauss-Legendre nodes and weights on `(lo, hi)`.
pub fn gauss_legendre(n: usize, lo: f64, hi: f64) -> Result<Vec<(f64, f64)>> {
    Ok(radial_rule(n, 0.0, 0.0)?.mapped(lo, hi))
}

fn jacobi_matrix_eigenvalues(n: usize, a: f64, b: f64) -> Vec<f64> {
    let mut m = DMatrix::<f64>::zeros(n, n);
    let ab = a + b;
    for k in 0..n {
        let kf = k as f64;
        let diag = if k == 0 {
            (b - a) / (ab + 2.0)
        } else {
            (b * b - a * a) / ((2.0 * kf + ab) * (2.0 * kf + ab + 2.0))
        };
        m[(k, k)] = diag;
        if k + 1 < n {
            let j = kf + 1.0;
            let off2 = if k == 0 {
                // the (j + a + b) factor cancels against (2j + a + b - 1) at j = 1
                4.0 * (1.0 + a) * (1.0 + b) / ((2.0 + ab).powi(2) * (3.0 + ab))
            } else {
                4.0 * j * (j + a) * (j + b) * (j + ab)
                    / ((2.0 * j + ab).powi(2) * (2.0 * j + ab + 1.0) * (2.0 * j + ab - 1.0))
            };
            let off = off2.sqrt();
            m[(k, k + 1)] = off;
            m[(k + 1, k)] = off;
        }
    }
    let mut eig: Vec<f64> = m.symmetric_eigenvalues().iter().copied().collect();
    eig.sort_by(|x, y| x.total_cmp(y));
    eig
}

/// `(P_n(x), P_n'(x))` for the Jacobi polynomial with parameters `(a, b)`.
fn jacobi_p_and_derivative(n: usize, a: f64, b: f64, x: f64) -> (f64, f64) {
    let ab = a + b;
    let mut p_prev = 1.0;
    let mut p = 0.5 * (a - b + (ab + 2.0) * x);
    if n == 1 {
        return (p, 0.5 * (ab + 2.0));
    }
    for k in 2..=n {
        let kf = k as f64;
        let c = 2.0 * kf + ab;
        let a1 = 2.0 * kf * (kf + ab) * (c - 2.0);
        let a2 = (c - 1.0) * (c * (c - 2.0) * x + a * a - b * b);
        let a3 = 2.0 * (kf + a - 1.0) * (kf + b - 1.0) * c;
        let next = (a2 * p - a3 * p_prev) / a1;
        p_prev = p;
        p = next;
    }
    let nf = n as f64;
    let c = 2.0 * nf + ab;
    let dp = (nf * (a - b - c * x) * p + 2.0 * (nf + a) * (nf + b) * p_prev) / (c * (1.0 - x * x));
    (p, dp)
}

fn newton_polish(n: usize, a: f64, b: f64, x0: f64) -> Result<(f64, f64)> {
    let mut x = x0;
    for _ in 0..NEWTON_MAX_ITER {
        let (p, dp) = jacobi_p_and_derivative(n, a, b, x);
        let step = p / dp;
        x -= step;
        if step.abs() <= NODE_TOL * x.abs().max(1e-3) {
            let (_, dp) = jacobi_p_and_derivative(n, a, b, x);
            return Ok((x, dp));
        }
    }
    let (p, dp) = jacobi_p_and_derivative(n, a, b, x);
    if (p / dp).abs() < 1e-12 {
        return Ok((x, dp));
    }
    Err(Error::NoConvergence {
        op: "radial_rule",
        iterations: NEWTON_MAX_ITER,
        achieved: (p / dp).abs(),
    })
}
