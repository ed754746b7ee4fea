use std::f64::consts::{PI, TAU};
use std::time::Instant;

use bergman_core::family::random_family;
use bergman_core::inequalities::fejer_riesz_check;
use bergman_core::operators::{toeplitz_entry_direct, toeplitz_matrix};
use bergman_core::report::CheckReport;
use bergman_core::space::{monomial_norm, SpaceParams};
use bergman_core::Result;
use num_complex::Complex64;
use rand::Rng;

use super::{settle, Run};

const PROVENANCE: &str = "Toeplitz operator with symbol the weight J on a diameter";
const SIZE: usize = 16;

pub fn run(run: &mut Run<'_>) -> Vec<CheckReport> {
    let mut out = Vec::new();
    let mut rng = run.rng(5);
    for (i, (a, b)) in run.pairs().into_iter().enumerate() {
        let xi = Complex64::from_polar(1.0, TAU * rng.random::<f64>());
        let seed = run.sub_seed(5, i);
        match matrix_checks(a, b, xi, seed) {
            Ok(reps) => out.extend(reps),
            Err(e) => {
                for id in [
                    "toeplitz.hermitian",
                    "toeplitz.spectrum_lower",
                    "toeplitz.spectrum_upper",
                    "toeplitz.quadratic_form",
                ] {
                    out.push(settle::<_>(id, PROVENANCE, &[("alpha", a), ("beta", b)], Err(&e)));
                }
            }
        }
    }
    out.push(settle("toeplitz.t00", PROVENANCE, &[], t00(false)));
    out.push(settle("toeplitz.t00_direct", PROVENANCE, &[], t00(true)));
    out
}

fn matrix_checks(a: f64, b: f64, xi: Complex64, seed: u64) -> Result<Vec<CheckReport>> {
    let start = Instant::now();
    let params = SpaceParams::new(a, b, 2.0)?;
    let t = toeplitz_matrix(xi, a, b, SIZE, 16)?;
    let ev = t.eigenvalues();
    let m = params.pole_order_bound() as i32;
    let mut form_err: f64 = 0.0;
    for f in random_family(seed, 5, -m, SIZE as i32 - 1 - m) {
        let coeffs = (0..SIZE as i32)
            .map(|i| Ok(f.coeff(i - m) * monomial_norm(i - m, &params)?))
            .collect::<Result<Vec<_>>>()?;
        let form = t.quadratic_form(&coeffs)?;
        let direct = fejer_riesz_check(&f, &params, xi, 16)?.lhs;
        form_err = form_err.max(((form - direct) / direct).abs());
    }
    let base = |id| {
        CheckReport::new(id, PROVENANCE)
            .param("alpha", a)
            .param("beta", b)
            .param("n", SIZE as f64)
            .param("xi_re", xi.re)
            .param("xi_im", xi.im)
    };
    Ok(vec![
        base("toeplitz.hermitian").agreement(t.hermitian_defect(), 0.0, 1e-12).timed(start),
        base("toeplitz.spectrum_lower").upper_bound(-ev[0], 1e-8, 0.0).timed(start),
        base("toeplitz.spectrum_upper").upper_bound(ev[ev.len() - 1], PI + 1e-8, 0.0).timed(start),
        base("toeplitz.quadratic_form").agreement(form_err, 0.0, 1e-9).timed(start),
    ])
}

fn t00(direct: bool) -> Result<CheckReport> {
    let start = Instant::now();
    let one = Complex64::new(1.0, 0.0);
    let (id, v) = if direct {
        ("toeplitz.t00_direct", toeplitz_entry_direct(one, 0.0, 0.0, 0, 0, 16)?.re)
    } else {
        ("toeplitz.t00", toeplitz_matrix(one, 0.0, 0.0, SIZE, 16)?.entries[(0, 0)].re)
    };
    Ok(CheckReport::new(id, PROVENANCE)
        .param("alpha", 0.0)
        .param("beta", 0.0)
        .agreement(v, 4.0 / 3.0, 1e-10)
        .timed(start))
}
