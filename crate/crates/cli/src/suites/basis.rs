use std::time::Instant;

use bergman_core::report::CheckReport;
use bergman_core::space::{monomial_norm, norm_grid, norm_quadrature, LaurentPoly, SpaceParams};
use bergman_core::specfun::{disc_grid, DiscGrid};
use num_complex::Complex64;

use super::{settle, space_params, Run};

const MASS: &str = "normalization of the weighted area measure";
const GRAM: &str = "orthonormal monomial basis";
const MONOMIAL: &str = "closed-form norm of a monomial";
const GRAM_TOP: i32 = 20;

pub fn run(run: &mut Run<'_>) -> Vec<CheckReport> {
    let (nr, nt) = (run.config.nr, run.config.ntheta);
    let mut out = Vec::new();
    for (a, b) in run.pairs() {
        let ab = [("alpha", a), ("beta", b)];
        let start = Instant::now();
        out.push(settle(
            "basis.mass",
            MASS,
            &ab,
            disc_grid(nr, nt, a, b).map(|g| {
                CheckReport::new("basis.mass", MASS)
                    .param("alpha", a)
                    .param("beta", b)
                    .agreement(g.mass(), 1.0, 1e-10)
                    .timed(start)
            }),
        ));
        out.push(settle("basis.gram", GRAM, &ab, gram(a, b, nr, nt)));
    }
    for params in run.points() {
        let m = params.pole_order_bound() as i32;
        for n in -m..=8 {
            let start = Instant::now();
            let f = LaurentPoly::monomial(n, Complex64::new(1.0, 0.0));
            let report = norm_grid(&f, &params, nr, nt)
                .and_then(|g| norm_quadrature(&f, &params, &g))
                .and_then(|q| {
                    let exact = monomial_norm(n, &params)?;
                    let tol = if q.degraded { 1e-6 } else { 1e-9 };
                    Ok(space_params(CheckReport::new("basis.monomial_norm", MONOMIAL), &params)
                        .param("n", n as f64)
                        .agreement(((q.value - exact) / exact).abs(), 0.0, tol)
                        .timed(start))
                });
            out.push(settle(
                "basis.monomial_norm",
                MONOMIAL,
                &[("alpha", params.alpha()), ("beta", params.beta()), ("p", params.p()), ("n", n as f64)],
                report,
            ));
        }
    }
    out
}

/// Largest entry of `G - I` for the basis `e_n`, `-m ≤ n ≤ 20`.
fn gram(a: f64, b: f64, nr: usize, nt: usize) -> bergman_core::Result<CheckReport> {
    let start = Instant::now();
    let params = SpaceParams::new(a, b, 2.0)?;
    let m = params.m_ceil() as i32;
    let grid = DiscGrid::with_radial_shift(nr, nt, a, b, -(m as f64))?;
    let idx: Vec<i32> = (-m..=GRAM_TOP).collect();
    let norms = idx.iter().map(|&n| monomial_norm(n, &params)).collect::<bergman_core::Result<Vec<_>>>()?;
    let k = idx.len();
    let mut g = vec![Complex64::new(0.0, 0.0); k * k];
    for (z, w) in grid.iter() {
        let e: Vec<Complex64> = idx.iter().zip(&norms).map(|(&n, &nn)| z.powi(n) / nn).collect();
        for i in 0..k {
            for j in 0..k {
                g[i * k + j] += e[i] * e[j].conj() * w;
            }
        }
    }
    let mut dev: f64 = 0.0;
    for i in 0..k {
        for j in 0..k {
            let target = if i == j { 1.0 } else { 0.0 };
            dev = dev.max((g[i * k + j] - target).norm());
        }
    }
    Ok(CheckReport::new("basis.gram", GRAM)
        .param("alpha", a)
        .param("beta", b)
        .param("n_max", GRAM_TOP as f64)
        .agreement(dev, 0.0, 1e-8)
        .timed(start))
}
