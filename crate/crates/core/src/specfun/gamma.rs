//! Log-gamma, beta and the unnormalized upper incomplete beta integral.

use std::f64::consts::PI;

use crate::error::{domain, Error, Result};

const LANCZOS_G: f64 = 7.0;
const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// `ln Γ(x)` for `x > 0` (Lanczos, g = 7, nine terms).
pub fn log_gamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(domain("log_gamma", format!("x = {x} must be positive")));
    }
    Ok(ln_gamma_unchecked(x))
}

pub(crate) fn ln_gamma_unchecked(x: f64) -> f64 {
    if x < 0.5 {
        // Γ(x) = Γ(x+1)/x keeps the Lanczos sum on its accurate range.
        return ln_gamma_unchecked(x + 1.0) - x.ln();
    }
    let x = x - 1.0;
    let mut acc = LANCZOS_COEFFS[0];
    for (i, c) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        acc += c / (x + i as f64);
    }
    let t = x + LANCZOS_G + 0.5;
    0.5 * (2.0 * PI).ln() + (x + 0.5) * t.ln() - t + acc.ln()
}

/// `ln B(s, t)`.
pub fn log_beta(s: f64, t: f64) -> Result<f64> {
    if !(s > 0.0 && t > 0.0) {
        return Err(domain("beta", format!("arguments ({s}, {t}) must be positive")));
    }
    Ok(ln_beta_unchecked(s, t))
}

pub(crate) fn ln_beta_unchecked(s: f64, t: f64) -> f64 {
    ln_gamma_unchecked(s) + ln_gamma_unchecked(t) - ln_gamma_unchecked(s + t)
}

/// `B(s, t) = Γ(s)Γ(t)/Γ(s+t)`, evaluated in log space.
pub fn beta(s: f64, t: f64) -> Result<f64> {
    log_beta(s, t).map(f64::exp)
}

/// `∫_x^1 u^(b-1) (1-u)^(a-1) du`, not normalized.
///
/// Note the argument order: `a` is the exponent attached to `(1-u)`.
pub fn incomplete_beta_upper(x: f64, a: f64, b: f64) -> Result<f64> {
    const OP: &str = "incomplete_beta_upper";
    if !(0.0..=1.0).contains(&x) {
        return Err(domain(OP, format!("x = {x} outside [0, 1]")));
    }
    if !(a > 0.0 && b > 0.0) {
        return Err(domain(OP, format!("exponents a = {a}, b = {b} must be positive")));
    }
    if x == 0.0 {
        return Ok(ln_beta_unchecked(b, a).exp());
    }
    if x == 1.0 {
        return Ok(0.0);
    }
    // With v = 1 - u the upper tail is the lower integral ∫_0^y v^(a-1)(1-v)^(b-1).
    let y = 1.0 - x;
    if y < (a + 1.0) / (a + b + 2.0) {
        lower_incomplete(y, a, b)
    } else {
        Ok(ln_beta_unchecked(b, a).exp() - lower_incomplete(x, b, a)?)
    }
}

/// `∫_0^y v^(s-1)(1-v)^(t-1) dv` by the modified Lentz continued fraction.
/// Converges quickly for `y < (s+1)/(s+t+2)`.
fn lower_incomplete(y: f64, s: f64, t: f64) -> Result<f64> {
    const TINY: f64 = 1e-300;
    const EPS: f64 = 1e-16;
    const MAX_ITER: usize = 10_000;

    if y == 0.0 {
        return Ok(0.0);
    }
    let prefactor = (s * y.ln() + t * (1.0 - y).ln()).exp() / s;

    let qab = s + t;
    let qap = s + 1.0;
    let qam = s - 1.0;
    let mut c = 1.0;
    let mut d = 1.0 - qab * y / qap;
    if d.abs() < TINY {
        d = TINY;
    }
    d = 1.0 / d;
    let mut h = d;
    for m in 1..=MAX_ITER {
        let m = m as f64;
        let m2 = 2.0 * m;
        let aa = m * (t - m) * y / ((qam + m2) * (s + m2));
        d = 1.0 + aa * d;
        if d.abs() < TINY {
            d = TINY;
        }
        c = 1.0 + aa / c;
        if c.abs() < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        h *= d * c;

        let aa = -(s + m) * (qab + m) * y / ((s + m2) * (qap + m2));
        d = 1.0 + aa * d;
        if d.abs() < TINY {
            d = TINY;
        }
        c = 1.0 + aa / c;
        if c.abs() < TINY {
            c = TINY;
        }
        d = 1.0 / d;
        let delta = d * c;
        h *= delta;
        if (delta - 1.0).abs() < EPS {
            return Ok(prefactor * h);
        }
    }
    Err(Error::NoConvergence {
        op: "incomplete_beta_upper",
        iterations: MAX_ITER,
        achieved: f64::NAN,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / b.abs()
    }

    #[test]
    fn log_gamma_reference_values() {
        assert!(log_gamma(1.0).unwrap().abs() < 1e-15);
        assert!(log_gamma(2.0).unwrap().abs() < 1e-15);
        assert!(rel(log_gamma(0.5).unwrap(), 0.5 * PI.ln()) < 1e-14);
        assert!(rel(log_gamma(6.0).unwrap(), 120f64.ln()) < 1e-14);
        // Γ(0.1) = 9.513507698668731836...
        assert!(rel(log_gamma(0.1).unwrap(), 9.513_507_698_668_732f64.ln()) < 1e-14);
    }

    #[test]
    fn log_gamma_rejects_nonpositive() {
        assert!(log_gamma(0.0).is_err());
        assert!(log_gamma(-2.5).is_err());
        assert!(log_gamma(f64::NAN).is_err());
    }

    #[test]
    fn beta_examples() {
        assert!(rel(beta(1.0, 1.0).unwrap(), 1.0) < 1e-14);
        assert!(rel(beta(2.0, 3.0).unwrap(), 1.0 / 12.0) < 1e-14);
        assert!(rel(beta(0.5, 0.5).unwrap(), PI) < 1e-14);
        assert!(beta(0.0, 1.0).is_err());
        assert!(beta(1.0, -0.5).is_err());
    }

    #[test]
    fn beta_large_arguments_stay_finite() {
        // B(α+1, n+β+1) for n ≈ 100
        let b = beta(3.5, 103.5).unwrap();
        assert!(b > 0.0 && b.is_finite());
        let recur = beta(3.5, 102.5).unwrap() * 102.5 / (3.5 + 102.5);
        assert!(rel(b, recur) < 1e-12);
    }

    #[test]
    fn incomplete_beta_examples() {
        let (a, b) = (2.5, 0.7);
        let full = beta(b, a).unwrap();
        assert!(rel(incomplete_beta_upper(0.0, a, b).unwrap(), full) < 1e-14);
        assert_eq!(incomplete_beta_upper(1.0, a, b).unwrap(), 0.0);
        assert!(rel(incomplete_beta_upper(0.25, 1.0, 1.0).unwrap(), 0.75) < 1e-13);
        assert!(incomplete_beta_upper(1.5, a, b).is_err());
        assert!(incomplete_beta_upper(0.5, 0.0, b).is_err());
    }

    #[test]
    fn incomplete_beta_closed_forms() {
        // a = 1: ∫_x^1 u^(b-1) du = (1 - x^b)/b
        for &(x, b) in &[(0.3, 0.5), (0.9, 2.0), (0.01, 3.7), (0.999, 1.3)] {
            let expect = (1.0 - f64::powf(x, b)) / b;
            assert!(rel(incomplete_beta_upper(x, 1.0, b).unwrap(), expect) < 1e-12);
        }
        // b = 1: ∫_x^1 (1-u)^(a-1) du = (1-x)^a / a, tiny near x = 1
        for &(x, a) in &[(0.3f64, 0.5), (1.0 - 1e-9, 2.5), (0.75, 1.0)] {
            let expect = (1.0 - x).powf(a) / a;
            assert!(rel(incomplete_beta_upper(x, a, 1.0).unwrap(), expect) < 1e-10);
        }
    }
}
