use std::time::Instant;

use super::{base_params, reference_norm};
use crate::error::{domain, Result};
use crate::report::CheckReport;
use crate::space::{mean_value, membership, LaurentPoly, MeanExponent, SpaceParams};
use crate::specfun::incomplete_beta_upper;

const MP_PROVENANCE: &str = "circle-mean bound through the radial tail weight J";
const HL_PROVENANCE: &str = "Hardy-Littlewood growth of circle means";
const MIN_ANGULAR: usize = 512;

/// Radial tail weight
/// `J(r) = (2 r^(pm) / B(α+1,β+1)) ∫_r^1 t^(2β-pm+1) (1-t²)^α dt`, `m = m_{p,β}`.
pub fn j_weight(r: f64, params: &SpaceParams) -> Result<f64> {
    if !(r > 0.0 && r < 1.0) {
        return Err(domain("j_weight", format!("r = {r} outside (0, 1)")));
    }
    let pm = params.p() * params.pole_order_bound() as f64;
    Ok(r.powf(pm) * reduced_j(r, params)?)
}

/// `J(r) / r^(pm)`, finite and positive at `r = 0`.
pub(crate) fn reduced_j(r: f64, params: &SpaceParams) -> Result<f64> {
    let pm = params.p() * params.pole_order_bound() as f64;
    let tail = incomplete_beta_upper(r * r, params.alpha() + 1.0, params.beta() - pm / 2.0 + 1.0)?;
    Ok(tail / params.norm_constant())
}

/// `r^max(2β, pm) (1-r²)^(α+1) / ((α+1) B(α+1,β+1))`, a lower bound for `J(r)`.
pub fn j_lower_bound(r: f64, params: &SpaceParams) -> f64 {
    let pm = params.p() * params.pole_order_bound() as f64;
    let alpha = params.alpha();
    r.powf((2.0 * params.beta()).max(pm)) * (1.0 - r * r).powf(alpha + 1.0)
        / ((alpha + 1.0) * params.norm_constant())
}

fn angular_size(f: &LaurentPoly) -> usize {
    let span = if f.is_zero() {
        0
    } else {
        (f.n_max() - f.n_min()) as usize
    };
    MIN_ANGULAR.max(16 * span)
}

fn with_base(mut report: CheckReport, params: &SpaceParams) -> CheckReport {
    for (k, v) in base_params(params) {
        report = report.param(k, v);
    }
    report
}

/// Circle-mean bounds for `p > 1` on the radii of `r_grid`:
///
/// - `mp_bound.j_form`: `max_r M_p(r,f) J(r)^(1/p) ≤ ‖f‖`;
/// - `mp_bound.kappa1_form`: `M_p(r,f) r^e (1-r²)^((α+1)/p) ≤ κ₁‖f‖` with
///   `e = max(2β/p, m)`, `κ₁ = ((α+1)B(α+1,β+1))^(1/p)`;
/// - `mp_bound.kappa1_nu_form`: the same with `m` replaced by the pole order
///   of `f`, emitted only when that order is below `m`;
/// - `mp_bound.j_chain`: `J(r)` dominates [`j_lower_bound`] on the grid.
pub fn check_mp_bound(f: &LaurentPoly, params: &SpaceParams, r_grid: &[f64]) -> Result<Vec<CheckReport>> {
    const OP: &str = "check_mp_bound";
    let start = Instant::now();
    let p = params.p();
    if !(p > 1.0) {
        return Err(domain(OP, format!("needs p > 1, got {p}")));
    }
    if !membership(f, params) {
        return Err(domain(OP, "function is not in the space"));
    }
    if r_grid.is_empty() {
        return Err(domain(OP, "empty radius grid"));
    }
    let norm = reference_norm(f, params)?;
    let m = params.pole_order_bound();
    let nu = f.pole_order();
    let beta = params.beta();
    let kappa1 = ((params.alpha() + 1.0) * params.norm_constant()).powf(1.0 / p);
    let e_m = (2.0 * beta / p).max(m as f64);
    let e_nu = (2.0 * beta / p).max(nu as f64);
    let n_theta = angular_size(f);

    let (mut j_form, mut k_form, mut nu_form, mut chain) = (0.0f64, 0.0f64, 0.0f64, 0.0f64);
    for &r in r_grid {
        let mp = mean_value(f, r, MeanExponent::Finite(p), n_theta)?;
        let j = j_weight(r, params)?;
        let decay = (1.0 - r * r).powf((params.alpha() + 1.0) / p);
        j_form = j_form.max(mp * j.powf(1.0 / p));
        k_form = k_form.max(mp * r.powf(e_m) * decay / kappa1);
        nu_form = nu_form.max(mp * r.powf(e_nu) * decay / kappa1);
        chain = chain.max(j_lower_bound(r, params) / j);
    }
    let n = r_grid.len() as f64;
    let mut out = vec![
        with_base(CheckReport::new("mp_bound.j_form", MP_PROVENANCE), params)
            .param("n_radii", n)
            .upper_bound(j_form, norm, 1e-9),
        with_base(CheckReport::new("mp_bound.kappa1_form", MP_PROVENANCE), params)
            .param("n_radii", n)
            .upper_bound(k_form, norm, 1e-9),
        with_base(CheckReport::new("mp_bound.j_chain", MP_PROVENANCE), params)
            .param("n_radii", n)
            .upper_bound(chain, 1.0, 1e-12),
    ];
    if nu < m {
        out.push(
            with_base(CheckReport::new("mp_bound.kappa1_nu_form", MP_PROVENANCE), params)
                .param("n_radii", n)
                .param("nu", nu as f64)
                .upper_bound(nu_form, norm, 1e-9),
        );
    }
    Ok(out.into_iter().map(|r| r.timed(start)).collect())
}

/// Output of [`hardy_littlewood_scan`].
#[derive(Debug, Clone, PartialEq)]
pub struct HlScan {
    /// `(r, ρ(r))` over the grid.
    pub curve: Vec<(f64, f64)>,
    pub sup: f64,
    pub reports: Vec<CheckReport>,
}

/// 40 radii in `[0.5, 0.999]`, log-spaced in `1 - r`.
pub fn default_hl_grid() -> Vec<f64> {
    let n = 40;
    (0..n)
        .map(|i| 1.0 - 0.5 * (0.002f64).powf(i as f64 / (n - 1) as f64))
        .collect()
}

/// Scans `ρ(r) = M_τ(r,f) r^max(2β/p, m) (1-r²)^((α+2)/p - 1/τ) / ‖f‖`.
///
/// `hardy_littlewood.proxy` passes iff the largest value with
/// `1 - r ∈ [0.001, 0.01]` is at most twice the largest with
/// `1 - r ∈ (0.01, 0.1]`. For `τ = p`, `hardy_littlewood.kappa1` also checks
/// `sup ρ ≤ κ₁`.
pub fn hardy_littlewood_scan(
    f: &LaurentPoly,
    params: &SpaceParams,
    tau: MeanExponent,
    r_grid: &[f64],
) -> Result<HlScan> {
    const OP: &str = "hardy_littlewood_scan";
    let start = Instant::now();
    let p = params.p();
    let tau_value = match tau {
        MeanExponent::Finite(t) => t,
        MeanExponent::Infinity => f64::INFINITY,
    };
    if !(p > 1.0 && p <= tau_value) {
        return Err(domain(OP, format!("needs 1 < p <= tau, got p = {p}, tau = {tau_value}")));
    }
    if !membership(f, params) {
        return Err(domain(OP, "function is not in the space"));
    }
    let norm = reference_norm(f, params)?;
    let e = (2.0 * params.beta() / p).max(params.pole_order_bound() as f64);
    let decay = (params.alpha() + 2.0) / p - tau.reciprocal();
    let n_theta = angular_size(f);
    let curve = r_grid
        .iter()
        .map(|&r| {
            let mt = mean_value(f, r, tau, n_theta)?;
            Ok((r, mt * r.powf(e) * (1.0 - r * r).powf(decay) / norm))
        })
        .collect::<Result<Vec<_>>>()?;

    let decade = |lo: f64, hi: f64, closed_lo: bool| {
        curve
            .iter()
            .filter(|(r, _)| {
                let d = (1.0 - r).log10();
                let above = if closed_lo { d >= lo - 1e-9 } else { d > lo + 1e-9 };
                above && d <= hi + 1e-9
            })
            .map(|&(_, v)| v)
            .fold(None, |acc: Option<f64>, v| Some(acc.map_or(v, |a| a.max(v))))
    };
    let (last, mid) = match (decade(-3.0, -2.0, true), decade(-2.0, -1.0, false)) {
        (Some(l), Some(m)) => (l, m),
        _ => return Err(domain(OP, "radius grid must reach both 1-r in (0.01,0.1] and [0.001,0.01]")),
    };
    let sup = curve.iter().map(|&(_, v)| v).fold(0.0, f64::max);
    let mut reports = vec![with_base(CheckReport::new("hardy_littlewood.proxy", HL_PROVENANCE), params)
        .param("tau", tau_value)
        .upper_bound(last, 2.0 * mid, 0.0)];
    if tau_value == p {
        let kappa1 = ((params.alpha() + 1.0) * params.norm_constant()).powf(1.0 / p);
        reports.push(
            with_base(CheckReport::new("hardy_littlewood.kappa1", HL_PROVENANCE), params)
                .param("tau", tau_value)
                .upper_bound(sup, kappa1, 1e-9),
        );
    }
    Ok(HlScan {
        curve,
        sup,
        reports: reports.into_iter().map(|r| r.timed(start)).collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    fn params(a: f64, b: f64, p: f64) -> SpaceParams {
        SpaceParams::new(a, b, p).unwrap()
    }

    #[test]
    fn j_examples() {
        let p = params(0.0, 0.0, 2.0);
        assert!((j_weight(0.6, &p).unwrap() - 0.64).abs() < 1e-14);
        assert!((j_weight(1e-8, &p).unwrap() - 1.0).abs() < 1e-12);
        for &(a, b, q) in &[(0.0, 0.0, 2.0), (2.5, 1.0, 1.5), (-0.5, -0.5, 3.0), (1.0, 2.5, 2.0)] {
            let v = j_weight(1.0 - 1e-6, &params(a, b, q)).unwrap();
            let w = j_weight(1.0 - 1e-3, &params(a, b, q)).unwrap();
            assert!(v > 0.0 && v < 1e-2 && v < w, "{a} {b} {q}: {v}");
        }
        assert!(j_weight(0.0, &p).is_err());
    }

    #[test]
    fn sharpness_witness_shape() {
        let p = params(0.0, 0.0, 2.0);
        let z = LaurentPoly::monomial(1, Complex64::new(1.0, 0.0));
        let r = 0.5f64.sqrt();
        let reps = check_mp_bound(&z, &p, &[r]).unwrap();
        let j = reps.iter().find(|r| r.check_id == "mp_bound.j_form").unwrap();
        assert!((j.lhs - 0.5).abs() < 1e-12);
        assert!((j.rhs - 0.5f64.sqrt()).abs() < 1e-15);
        assert!(j.passed());
    }

    #[test]
    fn mp_bound_constant_and_pole() {
        let one = LaurentPoly::from_real(0, &[1.0]);
        let grid = default_hl_grid();
        for rep in check_mp_bound(&one, &params(1.0, 0.5, 1.5), &grid).unwrap() {
            assert!(rep.passed(), "{rep:?}");
        }
        let inv = LaurentPoly::monomial(-1, Complex64::new(1.0, 0.0));
        // α = 0, 2β = pm: the lower bound for J is attained exactly
        for rep in check_mp_bound(&inv, &params(0.0, 1.0, 2.0), &[0.5]).unwrap() {
            assert!(rep.passed(), "{rep:?}");
            if rep.check_id == "mp_bound.j_form" {
                assert!(rep.margin > 0.0);
            }
        }
        assert!(check_mp_bound(&one, &params(0.0, 0.0, 1.0), &[0.5]).is_err());
    }

    #[test]
    fn hl_examples() {
        let grid = default_hl_grid();
        assert_eq!(grid.len(), 40);
        assert!((grid[0] - 0.5).abs() < 1e-15 && (grid[39] - 0.999).abs() < 1e-12);
        let one = LaurentPoly::from_real(0, &[1.0]);
        let scan = hardy_littlewood_scan(&one, &params(0.0, 0.0, 2.0), MeanExponent::Infinity, &grid).unwrap();
        for (r, v) in &scan.curve {
            assert!((v - (1.0 - r * r)).abs() < 1e-12);
        }
        assert!(scan.reports.iter().all(|r| r.passed()));
        let f = LaurentPoly::from_real(0, &[1.0; 11]);
        let p = params(0.5, 0.0, 2.0);
        let a = hardy_littlewood_scan(&f, &p, MeanExponent::Finite(4.0), &grid).unwrap();
        assert!(a.reports.iter().all(|r| r.passed()));
        let fine: Vec<f64> = (0..79).map(|i| 1.0 - 0.5 * (0.002f64).powf(i as f64 / 78.0)).collect();
        let b = hardy_littlewood_scan(&f, &p, MeanExponent::Finite(4.0), &fine).unwrap();
        assert!(((a.sup - b.sup) / b.sup).abs() < 0.05);
        let s = hardy_littlewood_scan(&f, &p, MeanExponent::Finite(2.0), &grid).unwrap();
        assert_eq!(s.reports.len(), 2);
        assert!(s.reports.iter().all(|r| r.passed()));
    }
}
