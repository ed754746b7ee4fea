use std::time::Instant;

use bergman_core::operators::{default_fit_radii, i_omega_asymptotic_fit, AsymptoticFit};
use bergman_core::report::CheckReport;

use super::{settle, Run};
use crate::svg::{Plot, Series};

const PROVENANCE: &str = "boundary growth of the integral I_omega";
const SIGMA: f64 = 0.0;
const GAMMA: f64 = 0.0;

pub fn run(run: &mut Run<'_>) -> Vec<CheckReport> {
    let mut out = Vec::new();
    let mut curves = Vec::new();
    let radii = default_fit_radii();
    let near: Vec<f64> = (0..12).map(|i| 1.0 - 0.1 * 0.01f64.powf(i as f64 / 11.0)).collect();
    let cases: [(f64, &str, &[f64]); 5] = [
        (0.5, "asymptotics.slope", &radii),
        (1.0, "asymptotics.slope", &radii),
        (2.0, "asymptotics.slope", &radii),
        (0.0, "asymptotics.log_fit", &radii),
        (-0.5, "asymptotics.bounded", &near),
    ];
    for (omega, id, rs) in cases {
        let start = Instant::now();
        let params = [("sigma", SIGMA), ("gamma", GAMMA), ("omega", omega)];
        let result = i_omega_asymptotic_fit(SIGMA, GAMMA, omega, rs).map(|fit| {
            curves.push(Series {
                label: format!("omega = {omega}"),
                points: fit
                    .radii
                    .iter()
                    .zip(&fit.values)
                    .map(|(r, v)| ((-(1.0 - r * r).ln()).ln(), v.ln()))
                    .collect(),
            });
            judge(id, omega, &fit).timed(start)
        });
        out.push(settle(id, PROVENANCE, &params, result));
    }
    if run.config.svg_dir.is_some() {
        run.plots.push((
            "i_omega_fits".into(),
            Plot {
                title: "log I_omega against log log 1/(1 - |z|^2)".into(),
                x_label: "log log 1/(1 - |z|^2)".into(),
                y_label: "log I_omega".into(),
                series: curves,
            },
        ));
    }
    out
}

fn judge(id: &str, omega: f64, fit: &AsymptoticFit) -> CheckReport {
    let r = CheckReport::new(id, PROVENANCE)
        .param("sigma", SIGMA)
        .param("gamma", GAMMA)
        .param("omega", omega);
    match id {
        "asymptotics.slope" => r.agreement(fit.slope, omega, 0.05 * omega),
        "asymptotics.log_fit" => r.upper_bound(0.99, fit.log_linear_r2, 0.0),
        _ => r.upper_bound(fit.spread, 1.5, 0.0),
    }
}
