use crate::error::{domain, Result};

/// Parameters of the integral operators `T` and `S`: kernel exponent `α`,
/// target measure `μ_{a,b}`, pole order `m` and Lebesgue exponent `p`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OperatorParams {
    alpha: f64,
    a: f64,
    b: f64,
    m: u32,
    p: f64,
    q: f64,
}

impl OperatorParams {
    pub fn new(alpha: f64, a: f64, b: f64, m: u32, p: f64) -> Result<Self> {
        const OP: &str = "OperatorParams::new";
        for (name, v) in [("alpha", alpha), ("a", a), ("b", b)] {
            if !(v > -1.0 && v.is_finite()) {
                return Err(domain(OP, format!("{name} = {v} must be finite and > -1")));
            }
        }
        if !(p >= 1.0 && p.is_finite()) {
            return Err(domain(OP, format!("p = {p} must be finite and >= 1")));
        }
        let q = if p == 1.0 { f64::INFINITY } else { p / (p - 1.0) };
        Ok(Self { alpha, a, b, m, p, q })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn p(&self) -> f64 {
        self.p
    }

    /// Conjugate exponent; infinite when `p = 1`.
    pub fn q(&self) -> f64 {
        self.q
    }
}

/// The boundedness criterion for `T` and `S` on `L^p(μ_{a,b})`:
/// `p(α+1) > a+1` together with `m-2 < 2b ≤ m` (`p = 1`) or
/// `mp-2 < 2b < mp-2+2p` (`p > 1`).
pub fn condition3(op: &OperatorParams) -> bool {
    let (p, m, b2) = (op.p, op.m as f64, 2.0 * op.b);
    let weight = p * (op.alpha + 1.0) > op.a + 1.0;
    let pole = if p == 1.0 {
        m - 2.0 < b2 && b2 <= m
    } else {
        m * p - 2.0 < b2 && b2 < m * p - 2.0 + 2.0 * p
    };
    weight && pole
}

/// Exponents `(t, s)` of a Schur test function
/// `h(z) = |z|^-t (1-|z|²)^-s`, taken at the midpoints of
/// `[m/q, (m+2)/q) ∩ [(2b-m)/p, (2b-m+2)/p)` and
/// `(0, (α+1)/q) ∩ ((a-α)/p, (a+1)/p)`; `None` if either is empty.
pub fn schur_witness(op: &OperatorParams) -> Result<Option<(f64, f64)>> {
    if op.p <= 1.0 {
        return Err(domain("schur_witness", "needs p > 1"));
    }
    let (p, q, m, b) = (op.p, op.q, op.m as f64, op.b);
    let t_lo = (m / q).max((2.0 * b - m) / p);
    let t_hi = ((m + 2.0) / q).min((2.0 * b - m + 2.0) / p);
    let s_lo = 0f64.max((op.a - op.alpha) / p);
    let s_hi = ((op.alpha + 1.0) / q).min((op.a + 1.0) / p);
    if t_lo < t_hi && s_lo < s_hi {
        Ok(Some(((t_lo + t_hi) / 2.0, (s_lo + s_hi) / 2.0)))
    } else {
        Ok(None)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn op(alpha: f64, a: f64, b: f64, m: u32, p: f64) -> OperatorParams {
        OperatorParams::new(alpha, a, b, m, p).unwrap()
    }

    #[test]
    fn conjugate_exponent() {
        assert_eq!(op(0.0, 0.0, 0.0, 0, 2.0).q(), 2.0);
        assert!((op(0.0, 0.0, 0.0, 0, 3.0).q() - 1.5).abs() < 1e-15);
        assert!(op(0.0, 0.0, 0.0, 0, 1.0).q().is_infinite());
        assert!(OperatorParams::new(-1.0, 0.0, 0.0, 0, 2.0).is_err());
        assert!(OperatorParams::new(0.0, 0.0, 0.0, 0, 0.5).is_err());
    }

    #[test]
    fn condition_examples() {
        assert!(condition3(&op(0.7, 0.7, 0.0, 0, 2.0)));
        assert!(!condition3(&op(0.7, 0.7, 0.0, 0, 1.0)));
        // 2b = mp
        assert!(condition3(&op(1.5, 0.5, 2.0, 2, 2.0)));
        // p = 1 closed upper end
        assert!(condition3(&op(1.0, 0.0, 1.0, 2, 1.0)));
        assert!(!condition3(&op(1.0, 0.0, 1.01, 2, 1.0)));
    }

    #[test]
    fn witness_examples() {
        let alpha = 0.8;
        let (t, s) = schur_witness(&op(alpha, alpha, 0.0, 0, 2.0)).unwrap().unwrap();
        assert!((t - 0.5).abs() < 1e-15 && (s - (alpha + 1.0) / 4.0).abs() < 1e-15);
        assert!(schur_witness(&op(alpha, 2.0 * alpha + 2.0, 0.0, 0, 2.0)).unwrap().is_none());
        let (t, _) = schur_witness(&op(alpha, alpha, 1.0, 1, 2.0)).unwrap().unwrap();
        assert!((t - 1.0).abs() < 1e-15);
        assert!(schur_witness(&op(alpha, alpha, 0.0, 0, 1.0)).is_err());
    }
}
