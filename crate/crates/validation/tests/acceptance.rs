//! Acceptance criteria. Each criterion prints one PASS/FAIL line; the process
//! exits nonzero if any criterion fails.

use std::f64::consts::{PI, TAU};
use std::time::Instant;

use bergman_core::family::{random_family, STANDARD_ALPHAS, STANDARD_BETAS};
use bergman_core::inequalities::{
    check_mp_bound, check_point_bound_batch, default_hl_grid, fejer_riesz_check, hardy_littlewood_scan, j_weight,
};
use bergman_core::kernel::{kernel_closed, kernel_section, project, KernelEval};
use bergman_core::operators::{
    condition3, divergence_probe, holder_check, i_omega_asymptotic_fit, schur_witness, toeplitz_entry_direct,
    toeplitz_matrix, default_fit_radii, Growth, OperatorParams,
};
use bergman_core::space::{
    coefficient_norm, mean_value, monomial_norm, norm_grid, norm_quadrature, LaurentPoly, MeanExponent, SpaceParams,
};
use bergman_core::specfun::{disc_grid, log_beta, DiscGrid};
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const SEED: u64 = 42;

struct Outcome {
    ok: bool,
    detail: String,
}

impl Outcome {
    fn new(ok: bool, detail: impl Into<String>) -> Self {
        Self { ok, detail: detail.into() }
    }
}

fn std_params(ps: &[f64]) -> Vec<SpaceParams> {
    let mut out = Vec::new();
    for &a in &STANDARD_ALPHAS {
        for &b in &STANDARD_BETAS {
            for &p in ps {
                out.push(SpaceParams::new(a, b, p).unwrap());
            }
        }
    }
    out
}

fn family_for(params: &SpaceParams, count: usize, highest: i32, salt: u64) -> Vec<LaurentPoly> {
    let m = params.pole_order_bound() as i32;
    random_family(SEED ^ salt, count, -m, highest)
}

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

fn unit_points(rng: &mut ChaCha8Rng, n: usize, r_max: f64) -> Vec<Complex64> {
    (0..n)
        .map(|_| Complex64::from_polar(r_max * rng.random::<f64>().sqrt(), TAU * rng.random::<f64>()))
        .collect()
}

fn c01_measure_mass() -> Outcome {
    let start = Instant::now();
    let mut worst: f64 = 0.0;
    for &a in &STANDARD_ALPHAS {
        for &b in &STANDARD_BETAS {
            worst = worst.max((disc_grid(64, 64, a, b).unwrap().mass() - 1.0).abs());
        }
    }
    let secs = start.elapsed().as_secs_f64();
    Outcome::new(worst <= 1e-10 && secs < 1.0, format!("max |mass - 1| = {worst:.2e}, {secs:.3} s"))
}

fn c02_gram_identity() -> Outcome {
    let start = Instant::now();
    let mut worst: f64 = 0.0;
    for &a in &STANDARD_ALPHAS {
        for &b in &STANDARD_BETAS {
            let params = SpaceParams::new(a, b, 2.0).unwrap();
            let m = params.m_ceil() as i32;
            let grid = DiscGrid::with_radial_shift(64, 64, a, b, -(m as f64)).unwrap();
            let idx: Vec<i32> = (-m..=20).collect();
            let norms: Vec<f64> = idx.iter().map(|&n| monomial_norm(n, &params).unwrap()).collect();
            // one pass over the grid accumulating every entry
            let k = idx.len();
            let mut gram = vec![Complex64::new(0.0, 0.0); k * k];
            for (z, w) in grid.iter() {
                let e: Vec<Complex64> = idx.iter().zip(&norms).map(|(&n, &nn)| z.powi(n) / nn).collect();
                for i in 0..k {
                    for j in 0..k {
                        gram[i * k + j] += e[i] * e[j].conj() * w;
                    }
                }
            }
            for i in 0..k {
                for j in 0..k {
                    let target = if i == j { 1.0 } else { 0.0 };
                    worst = worst.max((gram[i * k + j] - target).norm());
                }
            }
        }
    }
    let secs = start.elapsed().as_secs_f64();
    Outcome::new(worst <= 1e-8 && secs < 5.0, format!("max |G - I| = {worst:.2e}, {secs:.3} s"))
}

fn c03_monomial_norms() -> Outcome {
    let (mut worst, mut worst_degraded): (f64, f64) = (0.0, 0.0);
    let mut count = 0;
    for params in std_params(&[1.0, 2.0, 3.0, 4.0]) {
        let m = params.pole_order_bound() as i32;
        for n in -m..=8 {
            let f = LaurentPoly::monomial(n, Complex64::new(1.0, 0.0));
            let grid = norm_grid(&f, &params, 64, 64).unwrap();
            let q = norm_quadrature(&f, &params, &grid).unwrap();
            let err = rel(q.value, monomial_norm(n, &params).unwrap());
            if q.degraded {
                worst_degraded = worst_degraded.max(err);
            } else {
                worst = worst.max(err);
            }
            count += 1;
        }
    }
    Outcome::new(
        worst <= 1e-9 && worst_degraded <= 1e-6,
        format!("{count} cases, max rel err {worst:.2e} (pole with beta <= 0: {worst_degraded:.2e})"),
    )
}

fn c04_kernel_forms() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 4);
    let mut worst: f64 = 0.0;
    for m in 0..4u32 {
        for &a in &STANDARD_ALPHAS {
            let series = KernelEval::series(a, m as f64, 1e-15, 1_000_000).unwrap();
            let mut done = 0;
            while done < 100 {
                let w = unit_points(&mut rng, 1, 1.0)[0];
                let z = unit_points(&mut rng, 1, 1.0)[0];
                if (w * z.conj()).norm() > 0.9 || w.norm() < 0.05 || z.norm() < 0.05 {
                    continue;
                }
                let s = series.eval(w, z).unwrap().value;
                let c = kernel_closed(a, m, w, z).unwrap();
                worst = worst.max((s - c).norm() / c.norm());
                done += 1;
            }
        }
    }
    Outcome::new(worst <= 1e-10, format!("max rel err {worst:.2e} over 1600 pairs"))
}

fn c05_reproducing() -> Outcome {
    let pts: Vec<Complex64> = (0..16).map(|k| Complex64::from_polar(0.4, 0.05 + TAU * k as f64 / 16.0)).collect();
    let mut worst: f64 = 0.0;
    for m in 0..4u32 {
        for &a in &STANDARD_ALPHAS {
            let grid = DiscGrid::with_radial_shift(32, 64, a, m as f64, -(m as f64)).unwrap();
            for f in random_family(SEED ^ 5 ^ m as u64, 50, -(m as i32), 10) {
                let out = project(|w| f.eval(w), a, m, &grid, &pts).unwrap();
                for (z, v) in pts.iter().zip(out) {
                    worst = worst.max((v - f.eval(*z)).norm());
                }
            }
        }
    }
    Outcome::new(worst <= 1e-8, format!("sup error {worst:.2e} over 800 functions"))
}

fn c06_projection_oracle() -> Outcome {
    let pts: Vec<Complex64> = (0..8).map(|k| Complex64::from_polar(0.4, 0.3 + TAU * k as f64 / 8.0)).collect();
    let mut worst: f64 = 0.0;
    for m in 0..4u32 {
        let b = m as f64;
        for &a in &STANDARD_ALPHAS {
            let grid = DiscGrid::with_radial_shift(24, 48, a, b, -b).unwrap();
            for j in 0..=5i32 {
                for k in 0..=5i32 {
                    let out = project(|w| w.powi(j) * w.conj().powi(k), a, m, &grid, &pts).unwrap();
                    let d = j - k;
                    for (z, v) in pts.iter().zip(out) {
                        let expect = if d < -(m as i32) {
                            Complex64::new(0.0, 0.0)
                        } else {
                            let ratio = (log_beta(a + 1.0, j as f64 + b + 1.0).unwrap()
                                - log_beta(a + 1.0, d as f64 + b + 1.0).unwrap())
                            .exp();
                            z.powi(d) * ratio
                        };
                        worst = worst.max((v - expect).norm());
                    }
                }
            }
        }
    }
    Outcome::new(worst <= 1e-8, format!("max error {worst:.2e}"))
}

fn c07_extremal() -> Outcome {
    let mut radii: Vec<f64> = (0..18).map(|i| 0.1 + 0.8 * i as f64 / 17.0).collect();
    radii.push(0.05);
    radii.push(0.95);
    let (mut worst_norm, mut worst_dirac): (f64, f64) = (0.0, 0.0);
    for &a in &STANDARD_ALPHAS {
        for &b in &STANDARD_BETAS {
            let k = KernelEval::new(a, b).unwrap();
            for (i, &r) in radii.iter().enumerate() {
                let z = Complex64::from_polar(r, 0.37 * i as f64);
                let kzz = k.diagonal(z).unwrap();
                let section = kernel_section(a, b, z, 1e-16).unwrap();
                let norm = coefficient_norm(&section, a, b).unwrap();
                worst_norm = worst_norm.max(rel(norm * norm, kzz));
                // |K_z(z)| / ‖K_z‖ realizes the norm of evaluation at z
                let dirac = bergman_core::kernel::extremal_quantities(a, b, z).unwrap().dirac_norm;
                worst_dirac = worst_dirac.max(rel(section.eval(z).norm() / norm, dirac));
            }
        }
    }
    Outcome::new(
        worst_norm <= 1e-9 && worst_dirac <= 1e-9,
        format!("norm identity {worst_norm:.2e}, evaluation norm {worst_dirac:.2e}"),
    )
}

fn c08_point_bound() -> Outcome {
    let pairs: Vec<(f64, f64)> = [0.2, 0.5, 0.8]
        .iter()
        .flat_map(|&r| [0.25, 0.5, 0.75].map(|e| (r, e)))
        .collect();
    let (mut checks, mut violations) = (0usize, 0usize);
    let mut min_margin = f64::INFINITY;
    for (i, params) in std_params(&[1.0, 2.0, 3.0]).iter().enumerate() {
        for f in family_for(params, 200, 12, 8 + i as u64) {
            for rep in check_point_bound_batch(&f, params, &pairs, 64).unwrap() {
                checks += 1;
                violations += usize::from(!rep.passed());
                min_margin = min_margin.min(rep.margin / rep.rhs);
            }
        }
    }
    Outcome::new(
        violations == 0,
        format!("{violations} violations in {checks} checks, min relative margin {min_margin:.3e}"),
    )
}

fn c09_mp_bound() -> Outcome {
    let grid: Vec<f64> = (1..=40).map(|i| i as f64 / 41.0).collect();
    let (mut checks, mut violations) = (0usize, 0usize);
    for (i, params) in std_params(&[1.5, 2.0, 3.0]).iter().enumerate() {
        for f in family_for(params, 50, 12, 9 + i as u64) {
            for rep in check_mp_bound(&f, params, &grid).unwrap() {
                if rep.check_id == "mp_bound.j_form" {
                    checks += 1;
                    violations += usize::from(!rep.passed());
                }
            }
        }
    }
    // witness f = z at (0, 0, 2): sup_r M_2(r,z) J(r)^(1/2) against ‖z‖
    let params = SpaceParams::new(0.0, 0.0, 2.0).unwrap();
    let z = LaurentPoly::monomial(1, Complex64::new(1.0, 0.0));
    let norm = monomial_norm(1, &params).unwrap();
    let lhs = |r: f64| mean_value(&z, r, MeanExponent::Finite(2.0), 64).unwrap() * j_weight(r, &params).unwrap().sqrt();
    let (mut lo, mut hi) = (0.01, 0.99);
    let g = 0.5 * (5f64.sqrt() - 1.0);
    for _ in 0..200 {
        let (x1, x2) = (hi - g * (hi - lo), lo + g * (hi - lo));
        if lhs(x1) < lhs(x2) {
            lo = x1;
        } else {
            hi = x2;
        }
    }
    let r_star = 0.5 * (lo + hi);
    let peak = lhs(r_star);
    let gap = (peak - norm).abs();
    Outcome::new(
        violations == 0 && gap <= 1e-9,
        format!(
            "{violations} violations in {checks} checks; witness peak {peak:.12} at r^2 = {:.6} vs norm {norm:.12} (gap {gap:.3e})",
            r_star * r_star
        ),
    )
}

fn c10_fejer_riesz() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 10);
    let (mut checks, mut violations) = (0usize, 0usize);
    let mut max_ratio: f64 = 0.0;
    for (i, params) in std_params(&[1.0, 2.0, 3.0]).iter().enumerate() {
        for f in family_for(params, 200, 12, 10 + i as u64) {
            let xi = Complex64::from_polar(1.0, TAU * rng.random::<f64>());
            let rep = fejer_riesz_check(&f, params, xi, 16).unwrap();
            checks += 1;
            violations += usize::from(!rep.passed());
            max_ratio = max_ratio.max(rep.lhs / rep.rhs * PI);
        }
    }
    let one = LaurentPoly::monomial(0, Complex64::new(1.0, 0.0));
    let spot = fejer_riesz_check(&one, &SpaceParams::new(0.0, 0.0, 2.0).unwrap(), Complex64::new(1.0, 0.0), 16)
        .unwrap()
        .lhs;
    let spot_err = (spot - 4.0 / 3.0).abs();
    Outcome::new(
        violations == 0 && spot_err <= 1e-10,
        format!("{violations} violations in {checks}, max LHS/norm^p = {max_ratio:.4} (pi = {PI:.4}); f = 1 gives {spot:.14}"),
    )
}

fn c11_hardy_littlewood() -> Outcome {
    let grid = default_hl_grid();
    let (mut checks, mut failures) = (0usize, 0usize);
    let mut worst = 0.0f64;
    for (i, params) in std_params(&[1.5, 2.0, 3.0]).iter().enumerate() {
        let p = params.p();
        for f in family_for(params, 20, 12, 11 + i as u64) {
            for tau in [MeanExponent::Finite(p), MeanExponent::Finite(2.0 * p), MeanExponent::Infinity] {
                let scan = hardy_littlewood_scan(&f, params, tau, &grid).unwrap();
                for rep in scan.reports {
                    checks += 1;
                    failures += usize::from(!rep.passed());
                    if rep.check_id == "hardy_littlewood.proxy" {
                        worst = worst.max(rep.lhs / rep.rhs);
                    }
                }
            }
        }
    }
    Outcome::new(
        failures == 0,
        format!("{failures} failures in {checks} checks, worst last/mid decade ratio {:.3} (limit 2)", 2.0 * worst),
    )
}

fn c12_asymptotics() -> Outcome {
    let start = Instant::now();
    let radii = default_fit_radii();
    let mut ok = true;
    let mut notes = Vec::new();
    for omega in [0.5, 1.0, 2.0] {
        let fit = i_omega_asymptotic_fit(0.0, 0.0, omega, &radii).unwrap();
        ok &= rel(fit.slope, omega) <= 0.05;
        notes.push(format!("w={omega}: slope {:.4}", fit.slope));
    }
    let fit = i_omega_asymptotic_fit(0.0, 0.0, 0.0, &radii).unwrap();
    ok &= fit.log_linear_r2 > 0.99;
    notes.push(format!("w=0: log-fit r2 {:.5}", fit.log_linear_r2));
    let near: Vec<f64> = (0..12).map(|i| 1.0 - 0.1 * 0.01f64.powf(i as f64 / 11.0)).collect();
    let fit = i_omega_asymptotic_fit(0.0, 0.0, -0.5, &near).unwrap();
    ok &= fit.spread < 1.5;
    notes.push(format!("w=-0.5: max/min {:.4}", fit.spread));
    let secs = start.elapsed().as_secs_f64();
    ok &= secs < 20.0;
    Outcome::new(ok, format!("{}, {secs:.2} s", notes.join("; ")))
}

// (weight, lower pole, upper pole) slack of condition (3); negative means violated
fn margins(op: &OperatorParams) -> [f64; 3] {
    let (p, m, b2) = (op.p(), op.m() as f64, 2.0 * op.b());
    let weight = p * (op.alpha() + 1.0) - (op.a() + 1.0);
    if p == 1.0 {
        [weight, b2 - (m - 2.0), m - b2]
    } else {
        [weight, b2 - (m * p - 2.0), (m * p - 2.0 + 2.0 * p) - b2]
    }
}

fn random_op(rng: &mut ChaCha8Rng, p: f64) -> OperatorParams {
    OperatorParams::new(
        rng.random_range(-0.9..3.0),
        rng.random_range(-0.9..4.0),
        rng.random_range(-0.9..4.0),
        rng.random_range(0..4u32),
        p,
    )
    .unwrap()
}

fn c13_operator_coherence() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 13);
    let mut mismatches = 0;
    for _ in 0..1000 {
        let p = rng.random_range(1.0f64..4.0).max(1.0 + 1e-9);
        let op = random_op(&mut rng, p);
        if schur_witness(&op).unwrap().is_some() != condition3(&op) {
            mismatches += 1;
        }
    }
    let (mut bounded, mut unbounded) = (Vec::new(), Vec::new());
    let mut tries = 0;
    while (bounded.len() < 20 || unbounded.len() < 20) && tries < 100_000 {
        tries += 1;
        let p = if rng.random::<bool>() { 1.0 } else { rng.random_range(1.2..3.5) };
        let op = random_op(&mut rng, p);
        let mg = margins(&op);
        if mg.iter().all(|&x| x >= 0.3) && bounded.len() < 20 {
            bounded.push(op);
        } else if mg.iter().filter(|&&x| x <= -0.3).count() == 1
            && mg.iter().filter(|&&x| x >= 0.3).count() == 2
            && unbounded.len() < 20
        {
            unbounded.push(op);
        }
    }
    let mut wrong = Vec::new();
    for (ops, expect) in [(&bounded, Growth::Bounded), (&unbounded, Growth::Unbounded)] {
        for op in ops.iter() {
            let probe = divergence_probe(op).unwrap();
            if probe.verdict != expect {
                wrong.push(format!("{op:?} -> {:?}", probe.verdict));
            }
        }
    }
    Outcome::new(
        mismatches == 0 && wrong.is_empty() && bounded.len() == 20 && unbounded.len() == 20,
        format!(
            "{mismatches}/1000 witness mismatches; probe misclassified {} of {} {}",
            wrong.len(),
            bounded.len() + unbounded.len(),
            wrong.join(", ")
        ),
    )
}

fn c14_toeplitz() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 14);
    let (mut herm, mut ev_lo, mut ev_hi, mut form_err): (f64, f64, f64, f64) = (0.0, f64::INFINITY, 0.0, 0.0);
    for &a in &STANDARD_ALPHAS {
        for &b in &STANDARD_BETAS {
            let params = SpaceParams::new(a, b, 2.0).unwrap();
            let xi = Complex64::from_polar(1.0, TAU * rng.random::<f64>());
            let t = toeplitz_matrix(xi, a, b, 16, 16).unwrap();
            herm = herm.max(t.hermitian_defect());
            let ev = t.eigenvalues();
            ev_lo = ev_lo.min(ev[0]);
            ev_hi = ev_hi.max(ev[ev.len() - 1]);
            let m = params.pole_order_bound() as i32;
            for f in random_family(SEED ^ 140 ^ rng.random::<u64>(), 5, -m, 15 - m) {
                let coeffs: Vec<Complex64> = (0..16)
                    .map(|i| {
                        let n = i - m;
                        f.coeff(n) * monomial_norm(n, &params).unwrap()
                    })
                    .collect();
                let form = t.quadratic_form(&coeffs).unwrap();
                let direct = fejer_riesz_check(&f, &params, xi, 16).unwrap().lhs;
                form_err = form_err.max(rel(form, direct));
            }
        }
    }
    let t00 = toeplitz_matrix(Complex64::new(1.0, 0.0), 0.0, 0.0, 16, 16).unwrap().entries[(0, 0)].re;
    let t00_direct = toeplitz_entry_direct(Complex64::new(1.0, 0.0), 0.0, 0.0, 0, 0, 16).unwrap().re;
    let t00_err = (t00 - 4.0 / 3.0).abs().max((t00_direct - 4.0 / 3.0).abs());
    Outcome::new(
        herm <= 1e-12 && ev_lo >= -1e-8 && ev_hi <= PI + 1e-8 && t00_err <= 1e-10 && form_err <= 1e-9,
        format!(
            "hermitian defect {herm:.1e}, eigenvalues in [{ev_lo:.3e}, {ev_hi:.6}], |T00 - 4/3| {t00_err:.1e}, form rel err {form_err:.1e}"
        ),
    )
}

fn c15_duality() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(SEED ^ 15);
    let (mut violations, mut min_margin) = (0, f64::INFINITY);
    for i in 0..100u64 {
        let a = rng.random_range(-0.9..3.0);
        let b = rng.random_range(-0.9..3.0);
        let p: f64 = rng.random_range(1.1..4.0);
        let q = p / (p - 1.0);
        let fp = SpaceParams::new(a, b, p).unwrap();
        let gq = SpaceParams::new(a, b, q).unwrap();
        let f = &random_family(SEED ^ 150 ^ i, 1, -(fp.pole_order_bound() as i32), 8)[0];
        let g = &random_family(SEED ^ 151 ^ i, 1, -(gq.pole_order_bound() as i32), 8)[0];
        let rep = holder_check(f, g, a, b, p).unwrap();
        violations += usize::from(!rep.passed());
        min_margin = min_margin.min(rep.margin / rep.rhs);
    }
    Outcome::new(violations == 0, format!("{violations} violations in 100, min relative margin {min_margin:.3e}"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 15] = [
        ("probability measure normalization", c01_measure_mass),
        ("basis orthonormality", c02_gram_identity),
        ("monomial norm oracle", c03_monomial_norms),
        ("series and closed-form kernels agree", c04_kernel_forms),
        ("reproducing property", c05_reproducing),
        ("projection of mixed monomials", c06_projection_oracle),
        ("extremal identities", c07_extremal),
        ("pointwise bound", c08_point_bound),
        ("circle-mean bound and its witness", c09_mp_bound),
        ("Fejer-Riesz along diameters", c10_fejer_riesz),
        ("Hardy-Littlewood boundedness proxy", c11_hardy_littlewood),
        ("boundary asymptotics of I_w", c12_asymptotics),
        ("operator boundedness coherence", c13_operator_coherence),
        ("diameter Toeplitz operator", c14_toeplitz),
        ("Holder bound for the pairing", c15_duality),
    ];
    let filter: Vec<String> = std::env::args().skip(1).filter(|a| !a.starts_with('-')).collect();
    let total = Instant::now();
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let id = format!("criterion_{:02}", i + 1);
        if !filter.is_empty() && !filter.iter().any(|f| id.contains(f.as_str())) {
            continue;
        }
        let start = Instant::now();
        let out = run();
        let verdict = if out.ok { "PASS" } else { "FAIL" };
        failed += usize::from(!out.ok);
        println!(
            "{id} {verdict} {name}: {} [{:.2} s]",
            out.detail,
            start.elapsed().as_secs_f64()
        );
    }
    println!("acceptance: {failed} failed, total {:.1} s", total.elapsed().as_secs_f64());
    if failed > 0 {
        std::process::exit(1);
    }
}
