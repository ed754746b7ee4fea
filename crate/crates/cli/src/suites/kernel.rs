use std::f64::consts::TAU;
use std::time::Instant;

use bergman_core::family::random_family;
use bergman_core::kernel::{extremal_quantities, kernel_closed, kernel_section, project, KernelEval};
use bergman_core::report::CheckReport;
use bergman_core::space::coefficient_norm;
use bergman_core::specfun::{log_beta, DiscGrid};
use bergman_core::Result;
use num_complex::Complex64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

use super::{settle, Run};

const SERIES: &str = "power series of the kernel against its closed form for integer beta";
const HERMITIAN: &str = "Hermitian symmetry of the reproducing kernel";
const DIAGONAL: &str = "positivity of the kernel on the diagonal";
const REPRODUCING: &str = "reproducing property of the Bergman projection";
const ORACLE: &str = "projection of mixed monomials against beta-ratio formula";
const EXTREMAL: &str = "norm of the kernel section equals its diagonal value";
const DIRAC: &str = "norm of point evaluation equals the square root of the diagonal";

const PAIRS: usize = 100;
const POLES: [u32; 4] = [0, 1, 2, 3];
// projection grids are sized for degree-10 inputs, independent of nr/ntheta
const PROJ_NR: usize = 32;
const PROJ_NT: usize = 64;

pub fn run(run: &mut Run<'_>) -> Vec<CheckReport> {
    let mut out = Vec::new();
    let mut rng = run.rng(2);
    for &a in &run.config.alpha {
        for m in POLES {
            let am = [("alpha", a), ("m", m as f64)];
            out.push(settle("kernel.series_closed", SERIES, &am, series_closed(a, m, &mut rng)));
            let seed = run.sub_seed(2, out.len());
            out.push(settle("kernel.reproducing", REPRODUCING, &am, reproducing(a, m, seed)));
            out.push(settle("kernel.projection_oracle", ORACLE, &am, projection_oracle(a, m)));
        }
    }
    for (a, b) in run.pairs() {
        let ab = [("alpha", a), ("beta", b)];
        out.push(settle("kernel.hermitian", HERMITIAN, &ab, hermitian(a, b, &mut rng)));
        out.push(settle("kernel.diagonal_positive", DIAGONAL, &ab, diagonal(a, b)));
        match extremal(a, b) {
            Ok(reports) => out.extend(reports),
            Err(e) => {
                out.push(settle::<_>("kernel.extremal_norm", EXTREMAL, &ab, Err(&e)));
                out.push(settle::<_>("kernel.dirac_norm", DIRAC, &ab, Err(&e)));
            }
        }
    }
    out
}

fn disc_point(rng: &mut ChaCha8Rng, r_min: f64, r_max: f64) -> Complex64 {
    Complex64::from_polar(rng.random_range(r_min..r_max), TAU * rng.random::<f64>())
}

fn series_closed(a: f64, m: u32, rng: &mut ChaCha8Rng) -> Result<CheckReport> {
    let start = Instant::now();
    let series = KernelEval::series(a, m as f64, 1e-15, 1_000_000)?;
    let mut worst: f64 = 0.0;
    let mut done = 0;
    while done < PAIRS {
        let (w, z) = (disc_point(rng, 0.05, 1.0), disc_point(rng, 0.05, 1.0));
        if (w * z.conj()).norm() > 0.9 {
            continue;
        }
        let s = series.eval(w, z)?.value;
        let c = kernel_closed(a, m, w, z)?;
        worst = worst.max((s - c).norm() / c.norm());
        done += 1;
    }
    Ok(CheckReport::new("kernel.series_closed", SERIES)
        .param("alpha", a)
        .param("m", m as f64)
        .agreement(worst, 0.0, 1e-10)
        .timed(start))
}

fn hermitian(a: f64, b: f64, rng: &mut ChaCha8Rng) -> Result<CheckReport> {
    let start = Instant::now();
    let k = KernelEval::new(a, b)?;
    let mut worst: f64 = 0.0;
    for _ in 0..PAIRS {
        let (w, z) = (disc_point(rng, 0.05, 0.95), disc_point(rng, 0.05, 0.95));
        let kwz = k.eval(w, z)?.value;
        let kzw = k.eval(z, w)?.value;
        worst = worst.max((kwz - kzw.conj()).norm() / kwz.norm().max(1.0));
    }
    Ok(CheckReport::new("kernel.hermitian", HERMITIAN)
        .param("alpha", a)
        .param("beta", b)
        .agreement(worst, 0.0, 1e-12)
        .timed(start))
}

fn diagonal(a: f64, b: f64) -> Result<CheckReport> {
    let start = Instant::now();
    let k = KernelEval::new(a, b)?;
    let mut least = f64::INFINITY;
    // log-spaced toward both 0 and 1
    for i in 0..=20 {
        let t = i as f64 / 20.0;
        for r in [1e-3f64.powf(1.0 - t) * 0.5, 1.0 - 0.5 * 1e-3f64.powf(t)] {
            least = least.min(k.diagonal(Complex64::from_polar(r, 0.3 * i as f64))?);
        }
    }
    Ok(CheckReport::new("kernel.diagonal_positive", DIAGONAL)
        .param("alpha", a)
        .param("beta", b)
        .property(least > 0.0, least, 0.0)
        .timed(start))
}

fn circle(n: usize, r: f64, phase: f64) -> Vec<Complex64> {
    (0..n).map(|k| Complex64::from_polar(r, phase + TAU * k as f64 / n as f64)).collect()
}

fn reproducing(a: f64, m: u32, seed: u64) -> Result<CheckReport> {
    let start = Instant::now();
    let grid = DiscGrid::with_radial_shift(PROJ_NR, PROJ_NT, a, m as f64, -(m as f64))?;
    let pts = circle(16, 0.4, 0.05);
    let mut worst: f64 = 0.0;
    for f in random_family(seed, 50, -(m as i32), 10) {
        let out = project(|w| f.eval(w), a, m, &grid, &pts)?;
        for (z, v) in pts.iter().zip(out) {
            worst = worst.max((v - f.eval(*z)).norm());
        }
    }
    Ok(CheckReport::new("kernel.reproducing", REPRODUCING)
        .param("alpha", a)
        .param("m", m as f64)
        .param("family_size", 50.0)
        .agreement(worst, 0.0, 1e-8)
        .timed(start))
}

fn projection_oracle(a: f64, m: u32) -> Result<CheckReport> {
    let start = Instant::now();
    let b = m as f64;
    let grid = DiscGrid::with_radial_shift(24, 48, a, b, -b)?;
    let pts = circle(8, 0.4, 0.3);
    let mut worst: f64 = 0.0;
    for j in 0..=5i32 {
        for k in 0..=5i32 {
            let out = project(|w| w.powi(j) * w.conj().powi(k), a, m, &grid, &pts)?;
            let d = j - k;
            let ratio = if d < -(m as i32) {
                0.0
            } else {
                (log_beta(a + 1.0, j as f64 + b + 1.0)? - log_beta(a + 1.0, d as f64 + b + 1.0)?).exp()
            };
            for (z, v) in pts.iter().zip(out) {
                worst = worst.max((v - z.powi(d) * ratio).norm());
            }
        }
    }
    Ok(CheckReport::new("kernel.projection_oracle", ORACLE)
        .param("alpha", a)
        .param("m", m as f64)
        .agreement(worst, 0.0, 1e-8)
        .timed(start))
}

fn extremal(a: f64, b: f64) -> Result<[CheckReport; 2]> {
    let start = Instant::now();
    let k = KernelEval::new(a, b)?;
    let mut radii: Vec<f64> = (0..18).map(|i| 0.1 + 0.8 * i as f64 / 17.0).collect();
    radii.extend([0.05, 0.95]);
    let (mut norm_err, mut dirac_err): (f64, f64) = (0.0, 0.0);
    for (i, &r) in radii.iter().enumerate() {
        let z = Complex64::from_polar(r, 0.37 * i as f64);
        let kzz = k.diagonal(z)?;
        let section = kernel_section(a, b, z, 1e-16)?;
        let norm = coefficient_norm(&section, a, b)?;
        norm_err = norm_err.max((norm * norm - kzz).abs() / kzz);
        let dirac = extremal_quantities(a, b, z)?.dirac_norm;
        dirac_err = dirac_err.max((section.eval(z).norm() / norm - dirac).abs() / dirac);
    }
    let base = |id, prov| CheckReport::new(id, prov).param("alpha", a).param("beta", b);
    Ok([
        base("kernel.extremal_norm", EXTREMAL).agreement(norm_err, 0.0, 1e-9).timed(start),
        base("kernel.dirac_norm", DIRAC).agreement(dirac_err, 0.0, 1e-9).timed(start),
    ])
}
