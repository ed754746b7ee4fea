use std::time::Instant;

use bergman_core::family::random_family;
use bergman_core::kernel::project;
use bergman_core::operators::{
    apply_s, apply_t, condition3, default_schur_radii, divergence_probe, holder_check, schur_constants, schur_witness,
    Growth, OperatorGrid, OperatorKind, OperatorParams,
};
use bergman_core::report::CheckReport;
use bergman_core::space::SpaceParams;
use bergman_core::specfun::disc_grid;
use bergman_core::Result;
use num_complex::Complex64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{settle, worst, Run};

const COHERENCE: &str = "Schur test functions exist exactly when the boundedness condition holds";
const DIVERGENCE: &str = "truncation growth of quantities that are finite for bounded operators";
const CONSTANTS: &str = "Schur test constants for the positive operator";
const SLICE: &str = "integral operator T reduces to the Bergman projection";
const DOMINATED: &str = "T is pointwise dominated by S applied to the modulus";
const HOLDER: &str = "Holder bound for the integral pairing";

// (alpha, a, b, m, p)
const FIXED: [(f64, f64, f64, u32, f64); 8] = [
    (0.5, 0.0, 0.5, 1, 2.0),
    (0.5, 2.5, 0.5, 1, 2.0),
    (0.5, 0.0, -0.8, 1, 2.0),
    (0.5, 0.0, 3.0, 1, 2.0),
    (1.0, 0.0, 0.5, 1, 1.0),
    (0.0, 0.5, 0.5, 1, 1.0),
    (1.0, 0.0, 1.0, 1, 1.0),
    (1.0, 0.0, -0.8, 2, 1.0),
];
const RANDOM_PER_CLASS: usize = 4;

pub fn run(run: &mut Run<'_>) -> Vec<CheckReport> {
    let mut out = Vec::new();
    let mut rng = run.rng(4);
    out.push(coherence(&mut rng));

    let mut tuples: Vec<OperatorParams> = FIXED
        .iter()
        .map(|&(al, a, b, m, p)| OperatorParams::new(al, a, b, m, p).expect("fixed tuple"))
        .collect();
    tuples.extend(random_tuples(&mut rng));
    for op in &tuples {
        out.push(settle("operators.divergence", DIVERGENCE, &op_params(op), divergence(op)));
    }
    for op in tuples.iter().filter(|op| op.p() > 1.0 && condition3(op)).take(3) {
        out.push(settle("operators.schur_constants", CONSTANTS, &op_params(op), constants(op)));
        out.push(settle("operators.t_dominated", DOMINATED, &op_params(op), dominated(op)));
    }
    for &alpha in &run.config.alpha {
        out.push(settle("operators.t_projection", SLICE, &[("alpha", alpha)], slice(alpha)));
    }
    let reps = (0..100)
        .map(|i| {
            let a = rng.random_range(-0.9..3.0);
            let b = rng.random_range(-0.9..3.0);
            let p: f64 = rng.random_range(1.1..4.0);
            let seed = run.sub_seed(4, i);
            settle("duality.holder", HOLDER, &[("a", a), ("b", b), ("p", p)], holder(a, b, p, seed))
        })
        .collect();
    out.extend(worst(reps));
    out
}

fn op_params(op: &OperatorParams) -> [(&'static str, f64); 5] {
    [("alpha", op.alpha()), ("a", op.a()), ("b", op.b()), ("m", op.m() as f64), ("p", op.p())]
}

fn with_op(mut r: CheckReport, op: &OperatorParams) -> CheckReport {
    for (k, v) in op_params(op) {
        r = r.param(k, v);
    }
    r
}

fn random_op(rng: &mut ChaCha8Rng, p: f64) -> OperatorParams {
    OperatorParams::new(
        rng.random_range(-0.9..3.0),
        rng.random_range(-0.9..4.0),
        rng.random_range(-0.9..4.0),
        rng.random_range(0..4u32),
        p,
    )
    .expect("sampled in range")
}

fn coherence(rng: &mut ChaCha8Rng) -> CheckReport {
    let start = Instant::now();
    let mut mismatches = 0;
    for _ in 0..1000 {
        let p = rng.random_range(1.0f64..4.0).max(1.0 + 1e-9);
        let op = random_op(rng, p);
        if schur_witness(&op).map(|w| w.is_some()).unwrap_or(!condition3(&op)) != condition3(&op) {
            mismatches += 1;
        }
    }
    CheckReport::new("operators.schur_coherence", COHERENCE)
        .param("tuples", 1000.0)
        .agreement(mismatches as f64, 0.0, 0.0)
        .timed(start)
}

/// Slack of the boundedness condition: weight, lower and upper pole bound.
fn margins(op: &OperatorParams) -> [f64; 3] {
    let (p, m, b2) = (op.p(), op.m() as f64, 2.0 * op.b());
    let weight = p * (op.alpha() + 1.0) - (op.a() + 1.0);
    if p == 1.0 {
        [weight, b2 - (m - 2.0), m - b2]
    } else {
        [weight, b2 - (m * p - 2.0), (m * p - 2.0 + 2.0 * p) - b2]
    }
}

/// Tuples at least 0.3 away from the boundary of the condition, half of them
/// violating exactly one inequality.
fn random_tuples(rng: &mut ChaCha8Rng) -> Vec<OperatorParams> {
    let (mut good, mut bad) = (Vec::new(), Vec::new());
    while good.len() < RANDOM_PER_CLASS || bad.len() < RANDOM_PER_CLASS {
        let p = if rng.random::<bool>() { 1.0 } else { rng.random_range(1.2..3.5) };
        let op = random_op(rng, p);
        let mg = margins(&op);
        let clear = mg.iter().filter(|&&x| x >= 0.3).count();
        if clear == 3 && good.len() < RANDOM_PER_CLASS {
            good.push(op);
        } else if clear == 2 && mg.iter().any(|&x| x <= -0.3) && bad.len() < RANDOM_PER_CLASS {
            bad.push(op);
        }
    }
    good.extend(bad);
    good
}

fn divergence(op: &OperatorParams) -> Result<CheckReport> {
    let start = Instant::now();
    let probe = divergence_probe(op)?;
    let expect = if condition3(op) { Growth::Bounded } else { Growth::Unbounded };
    let ratio = probe.series.iter().map(|s| s.tail_ratio).fold(0.0, f64::max);
    let threshold = if expect == Growth::Bounded { 0.93 } else { 0.97 };
    Ok(with_op(CheckReport::new("operators.divergence", DIVERGENCE), op)
        .property(probe.verdict == expect, ratio, threshold)
        .timed(start))
}

fn constants(op: &OperatorParams) -> Result<CheckReport> {
    let start = Instant::now();
    let (t, s) = schur_witness(op)?.ok_or_else(|| bergman_core::Error::Domain {
        op: "schur_constants",
        detail: "no witness".into(),
    })?;
    let radii = default_schur_radii();
    let (a1, a2) = schur_constants(op, t, s, &radii, 1e-6)?;
    let (b1, b2) = schur_constants(op, t, s, &radii, 1e-9)?;
    let drift = ((a1 - b1) / b1).abs().max(((a2 - b2) / b2).abs());
    let finite = a1.is_finite() && a2.is_finite();
    Ok(with_op(CheckReport::new("operators.schur_constants", CONSTANTS), op)
        .param("t", t)
        .param("s", s)
        .param("c1", b1)
        .param("c2", b2)
        .agreement(if finite { drift } else { f64::INFINITY }, 0.0, 1e-5)
        .timed(start))
}

fn dominated(op: &OperatorParams) -> Result<CheckReport> {
    let start = Instant::now();
    let gs = OperatorGrid::new(OperatorKind::S, op, 20, 40)?;
    let gt = OperatorGrid::new(OperatorKind::T, op, 20, 40)?;
    let f = |w: Complex64| Complex64::new(1.0, -0.5) + w * w * 2.0 - w.powi(3) * w.conj();
    let mut ratio: f64 = 0.0;
    for k in 0..8 {
        let z = Complex64::from_polar(0.1 + 0.1 * k as f64, 0.7 * k as f64);
        let t = apply_t(f, z, op, &gt)?.norm();
        let s = apply_s(|w| f(w).norm(), z, op, &gs)?;
        ratio = ratio.max(t / s);
    }
    Ok(with_op(CheckReport::new("operators.t_dominated", DOMINATED), op)
        .upper_bound(ratio, 1.0, 1e-12)
        .timed(start))
}

fn slice(alpha: f64) -> Result<CheckReport> {
    let start = Instant::now();
    let op = OperatorParams::new(alpha, alpha, 0.0, 0, 2.0)?;
    let gt = OperatorGrid::new(OperatorKind::T, &op, 24, 48)?;
    let gp = disc_grid(24, 48, alpha, 0.0)?;
    let f = |w: Complex64| Complex64::new(1.0, 0.5) + w * w * 2.0 - w.powi(3) * w.conj();
    let pts: Vec<Complex64> = (0..8).map(|k| Complex64::from_polar(0.08 * (k + 1) as f64, 1.1 * k as f64)).collect();
    let proj = project(f, alpha, 0, &gp, &pts)?;
    let mut diff: f64 = 0.0;
    for (z, pv) in pts.iter().zip(proj) {
        diff = diff.max((apply_t(f, *z, &op, &gt)? - pv).norm() / pv.norm().max(1.0));
    }
    Ok(CheckReport::new("operators.t_projection", SLICE)
        .param("alpha", alpha)
        .agreement(diff, 0.0, 1e-12)
        .timed(start))
}

fn holder(a: f64, b: f64, p: f64, seed: u64) -> Result<CheckReport> {
    let q = p / (p - 1.0);
    let fp = SpaceParams::new(a, b, p)?;
    let gq = SpaceParams::new(a, b, q)?;
    let f = &random_family(seed, 1, -(fp.pole_order_bound() as i32), 8)[0];
    let g = &random_family(seed ^ 1, 1, -(gq.pole_order_bound() as i32), 8)[0];
    holder_check(f, g, a, b, p)
}
