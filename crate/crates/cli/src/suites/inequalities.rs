use std::collections::BTreeMap;
use std::f64::consts::TAU;
use std::time::Instant;

use bergman_core::family::random_family;
use bergman_core::inequalities::{
    check_mp_bound, check_point_bound_batch, default_hl_grid, derivative_bound, fejer_riesz_check,
    hardy_littlewood_scan, j_weight,
};
use bergman_core::report::CheckReport;
use bergman_core::space::{mean_value, monomial_norm, LaurentPoly, MeanExponent, SpaceParams};
use bergman_core::Result;
use num_complex::Complex64;
use rand::Rng;

use super::{settle, space_params, worst, Run};
use crate::svg::{Plot, Series};

const PAIRS: [(f64, f64); 9] = [
    (0.2, 0.25),
    (0.2, 0.5),
    (0.2, 0.75),
    (0.5, 0.25),
    (0.5, 0.5),
    (0.5, 0.75),
    (0.8, 0.25),
    (0.8, 0.5),
    (0.8, 0.75),
];
const HIGHEST: i32 = 12;
const POINT: &str = "pointwise bound from subharmonicity on a small disc";
const DERIVATIVE: &str = "derivative bound via Cauchy estimate and pointwise bound";
const FEJER: &str = "Fejer-Riesz inequality along a diameter";
const MP: &str = "circle-mean bound through the radial tail weight J";
const HL: &str = "Hardy-Littlewood growth of circle means";
const WITNESS: &str = "circle-mean bound for f = z at alpha = beta = 0, p = 2";
const CONSTANT_ONE: &str = "diameter integral of f = 1 at alpha = beta = 0, p = 2";

pub fn run(run: &mut Run<'_>) -> Vec<CheckReport> {
    let mut out = Vec::new();
    let mut rng = run.rng(3);
    let mp_grid: Vec<f64> = (1..=40).map(|i| i as f64 / 41.0).collect();
    let hl_grid = default_hl_grid();
    for (idx, params) in run.points().iter().enumerate() {
        let m = params.pole_order_bound() as i32;
        let family = random_family(run.sub_seed(3, idx), run.config.family_size, -m, HIGHEST);
        let base: Vec<(&str, f64)> = vec![("alpha", params.alpha()), ("beta", params.beta()), ("p", params.p())];

        // pointwise bounds, worst case per (r, ε)
        let mut by_pair: BTreeMap<usize, Vec<CheckReport>> = BTreeMap::new();
        for f in &family {
            match check_point_bound_batch(f, params, &PAIRS, 64) {
                Ok(reps) => reps.into_iter().enumerate().for_each(|(i, r)| by_pair.entry(i).or_default().push(r)),
                Err(e) => out.push(settle::<_>("point_bound", POINT, &base, Err(e))),
            }
        }
        out.extend(by_pair.into_values().filter_map(worst));

        for n in [1u32, 2] {
            let reps = family
                .iter()
                .map(|f| settle("derivative_bound", DERIVATIVE, &base, derivative_bound(f, n, params, 0.5, 0.5)))
                .collect();
            out.extend(worst(reps));
        }

        let reps = family
            .iter()
            .map(|f| {
                let xi = Complex64::from_polar(1.0, TAU * rng.random::<f64>());
                settle("fejer_riesz", FEJER, &base, fejer_riesz_check(f, params, xi, 16))
            })
            .collect();
        out.extend(worst(reps));

        if params.p() > 1.0 {
            let scan_family = &family[..run.config.scan_family_size.min(family.len())];
            let mut by_id: BTreeMap<String, Vec<CheckReport>> = BTreeMap::new();
            for f in scan_family {
                match check_mp_bound(f, params, &mp_grid) {
                    Ok(reps) => reps.into_iter().for_each(|r| by_id.entry(r.check_id.clone()).or_default().push(r)),
                    Err(e) => out.push(settle::<_>("mp_bound.j_form", MP, &base, Err(e))),
                }
            }
            out.extend(by_id.into_values().filter_map(worst));
            out.extend(hardy_littlewood(run, params, scan_family, &hl_grid, &base));
        }
    }
    out.push(settle("mp_bound.witness", WITNESS, &[], witness()));
    out.push(settle("fejer_riesz.constant_one", CONSTANT_ONE, &[], constant_one()));
    out
}

fn hardy_littlewood(
    run: &mut Run<'_>,
    params: &SpaceParams,
    family: &[LaurentPoly],
    grid: &[f64],
    base: &[(&str, f64)],
) -> Vec<CheckReport> {
    let p = params.p();
    let mut out = Vec::new();
    for (tag, tau) in [
        ("p", MeanExponent::Finite(p)),
        ("2p", MeanExponent::Finite(2.0 * p)),
        ("inf", MeanExponent::Infinity),
    ] {
        let mut by_id: BTreeMap<String, Vec<CheckReport>> = BTreeMap::new();
        let mut curves = Vec::new();
        for (i, f) in family.iter().enumerate() {
            match hardy_littlewood_scan(f, params, tau, grid) {
                Ok(scan) => {
                    curves.push(Series {
                        label: format!("f{i}"),
                        points: scan.curve.iter().map(|&(r, rho)| (-(1.0 - r).log10(), rho)).collect(),
                    });
                    scan.reports
                        .into_iter()
                        .for_each(|r| by_id.entry(r.check_id.clone()).or_default().push(r));
                }
                Err(e) => out.push(settle::<_>("hardy_littlewood.proxy", HL, base, Err(e))),
            }
        }
        out.extend(by_id.into_values().filter_map(worst));
        if run.config.svg_dir.is_some() {
            let stem = format!(
                "hardy_littlewood_a{}_b{}_p{}_tau{}",
                params.alpha(),
                params.beta(),
                params.p(),
                tag
            );
            run.plots.push((
                stem,
                Plot {
                    title: format!(
                        "rho(r), alpha = {}, beta = {}, p = {}, tau = {}",
                        params.alpha(),
                        params.beta(),
                        params.p(),
                        tag
                    ),
                    x_label: "-log10(1 - r)".into(),
                    y_label: "rho(r)".into(),
                    series: curves,
                },
            ));
        }
    }
    out
}

/// `sup_r M_2(r, z) J(r)^(1/2)` by golden-section search, against `‖z‖`.
fn witness() -> Result<CheckReport> {
    let start = Instant::now();
    let params = SpaceParams::new(0.0, 0.0, 2.0)?;
    let z = LaurentPoly::monomial(1, Complex64::new(1.0, 0.0));
    let norm = monomial_norm(1, &params)?;
    let lhs = |r: f64| -> Result<f64> {
        Ok(mean_value(&z, r, MeanExponent::Finite(2.0), 64)? * j_weight(r, &params)?.sqrt())
    };
    let g = 0.5 * (5f64.sqrt() - 1.0);
    let (mut lo, mut hi) = (0.01, 0.99);
    for _ in 0..200 {
        let (x1, x2) = (hi - g * (hi - lo), lo + g * (hi - lo));
        if lhs(x1)? < lhs(x2)? {
            lo = x1;
        } else {
            hi = x2;
        }
    }
    let r = 0.5 * (lo + hi);
    Ok(space_params(CheckReport::new("mp_bound.witness", WITNESS), &params)
        .param("r", r)
        .upper_bound(lhs(r)?, norm, 1e-9)
        .timed(start))
}

fn constant_one() -> Result<CheckReport> {
    let start = Instant::now();
    let params = SpaceParams::new(0.0, 0.0, 2.0)?;
    let one = LaurentPoly::monomial(0, Complex64::new(1.0, 0.0));
    let lhs = fejer_riesz_check(&one, &params, Complex64::new(1.0, 0.0), 16)?.lhs;
    Ok(space_params(CheckReport::new("fejer_riesz.constant_one", CONSTANT_ONE), &params)
        .agreement(lhs, 4.0 / 3.0, 1e-10)
        .timed(start))
}
