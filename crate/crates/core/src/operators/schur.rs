use super::integral::adjoint_s_one_radial;
use super::lemma::i_omega_radial;
use super::params::OperatorParams;
use crate::error::{domain, Result};
use crate::specfun::gauss_legendre;

/// Twenty radii from `0.01` to `0.9995` at which Schur ratios are sampled.
pub fn default_schur_radii() -> Vec<f64> {
    vec![
        0.01, 0.05, 0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 0.95, 0.97, 0.98, 0.99, 0.995, 0.997,
        0.998, 0.999, 0.9995,
    ]
}

/// Largest observed ratios of the two Schur integrals to the test function,
/// with `h(z) = |z|^-t (1-|z|²)^-s`:
///
/// - `c1 = max_z ∫ κ(z,w) h(w)^q dA(w) / h(z)^q`,
/// - `c2 = max_w ∫ κ(z,w) h(z)^p dA(z) / h(w)^p`,
///
/// where `κ(z,w) = (1-|w|²)^(α-a) |w|^(m-2b) / (|z|^m |1 - z conj w|^(2+α))`
/// and the measure factors of `μ_{a,b}` are absorbed as in the area form.
pub fn schur_constants(op: &OperatorParams, t: f64, s: f64, radii: &[f64], tol: f64) -> Result<(f64, f64)> {
    if op.p() <= 1.0 {
        return Err(domain("schur_constants", "needs p > 1"));
    }
    let (p, q, m, alpha, a, b) = (op.p(), op.q(), op.m() as f64, op.alpha(), op.a(), op.b());
    let mut c1: f64 = 0.0;
    let mut c2: f64 = 0.0;
    for &r in radii {
        let d = 1.0 - r * r;
        let i1 = i_omega_radial(r, alpha - s * q, (m - t * q) / 2.0, s * q, tol)?;
        c1 = c1.max(r.powf(t * q - m) * d.powf(s * q) * i1);
        let i2 = i_omega_radial(r, a - s * p, (2.0 * b - m - t * p) / 2.0, alpha - a + s * p, tol)?;
        c2 = c2.max(d.powf(alpha - a + s * p) * r.powf(m - 2.0 * b + t * p) * i2);
    }
    Ok((c1, c2))
}

/// Classification of a truncated radial integral or a sampled supremum.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Growth {
    Bounded,
    Unbounded,
    Inconclusive,
}

/// Successive dyadic contributions and their classification. The tail
/// ratio is the geometric mean of the last four contribution ratios:
/// at least `0.97` reads as divergent, at most `0.93` as convergent.
#[derive(Debug, Clone, PartialEq)]
pub struct ShellSeries {
    pub label: &'static str,
    pub contributions: Vec<f64>,
    pub tail_ratio: f64,
    pub growth: Growth,
}

impl ShellSeries {
    fn classify(label: &'static str, contributions: Vec<f64>) -> Self {
        let n = contributions.len();
        let tail = &contributions[n.saturating_sub(5)..];
        let (growth, tail_ratio) = if tail.iter().all(|&c| c == 0.0) {
            (Growth::Bounded, 0.0)
        } else {
            let logs: f64 = tail.windows(2).map(|w| (w[1] / w[0]).ln()).sum();
            let ratio = (logs / (tail.len() - 1) as f64).exp();
            let growth = if ratio >= 0.97 {
                Growth::Unbounded
            } else if ratio <= 0.93 {
                Growth::Bounded
            } else {
                Growth::Inconclusive
            };
            (growth, ratio)
        };
        Self {
            label,
            contributions,
            tail_ratio,
            growth,
        }
    }
}

/// Evidence for or against boundedness of `S`, built from quantities that
/// must be finite when `S` is bounded: `‖S f_N‖_p` and `‖S* f_N‖_q` with
/// `f_N = (1-|z|²)^N` for `p > 1`, and `sup |S* 1|` for `p = 1`. Each is
/// truncated on dyadic shells toward `0` and toward `1`.
#[derive(Debug, Clone, PartialEq)]
pub struct DivergenceProbe {
    pub series: Vec<ShellSeries>,
    pub verdict: Growth,
}

const ZERO_SHELLS: usize = 24;
const ONE_SHELLS: usize = 12;
const SUP_SAMPLES: usize = 12;
const SHELL_NODES: usize = 8;

#[derive(Clone, Copy)]
enum End {
    Zero,
    One,
}

fn shells(end: End, count: usize, g: impl Fn(f64) -> Result<f64>) -> Result<Vec<f64>> {
    let mut out = Vec::with_capacity(count);
    for k in 1..=count {
        let (hi_gap, lo_gap) = (0.5f64.powi(k as i32), 0.5f64.powi(k as i32 + 1));
        let (lo, hi) = match end {
            End::Zero => (lo_gap, hi_gap),
            End::One => (1.0 - hi_gap, 1.0 - lo_gap),
        };
        let mut acc = 0.0;
        for (u, w) in gauss_legendre(SHELL_NODES, lo, hi)? {
            acc += w * g(u)?;
        }
        out.push(acc);
    }
    Ok(out)
}

fn increments(values: Vec<f64>) -> Vec<f64> {
    values.windows(2).map(|w| (w[1] - w[0]).abs()).collect()
}

pub fn divergence_probe(op: &OperatorParams) -> Result<DivergenceProbe> {
    let (p, q, m, alpha, a, b) = (op.p(), op.q(), op.m() as f64, op.alpha(), op.a(), op.b());
    let gamma = b - m / 2.0;
    let mut series = Vec::new();
    if gamma <= -1.0 {
        // the inner integral of S* diverges at the origin for every w
        let c = shells(End::Zero, ZERO_SHELLS, |u| Ok(u.powf(gamma) * (1.0 - u).powf(a)))?;
        series.push(ShellSeries::classify("adjoint_inner.zero", c));
    }
    if p == 1.0 {
        if gamma > -1.0 {
            // differences of samples need the inner integral well below their size
            let sample = |u: f64| adjoint_s_one_radial(u.sqrt(), op, 1e-11);
            let zero = (1..=SUP_SAMPLES + 1)
                .map(|k| sample(0.5f64.powi(k as i32)))
                .collect::<Result<Vec<_>>>()?;
            series.push(ShellSeries::classify("adjoint_one.zero", increments(zero)));
            let one = (1..=SUP_SAMPLES + 1)
                .map(|k| sample(1.0 - 0.5f64.powi(k as i32)))
                .collect::<Result<Vec<_>>>()?;
            series.push(ShellSeries::classify("adjoint_one.one", increments(one)));
        }
    } else {
        let n = (alpha - a).max(0.0).ceil() + 1.0;
        let tol = super::lemma::I_OMEGA_TOL;
        let sf = shells(End::Zero, ZERO_SHELLS, |u| {
            let inner = i_omega_radial(u.sqrt(), alpha + n, m / 2.0, -n, tol)?;
            Ok(u.powf(b - m * p / 2.0) * (1.0 - u).powf(a) * inner.powf(p))
        })?;
        series.push(ShellSeries::classify("forward_fn.zero", sf));
        if gamma > -1.0 {
            let g = |u: f64| -> Result<f64> {
                let inner = i_omega_radial(u.sqrt(), a + n, gamma, alpha - a - n, tol)?;
                Ok(u.powf(b + (m - 2.0 * b) * q / 2.0) * (1.0 - u).powf(a + q * (alpha - a)) * inner.powf(q))
            };
            series.push(ShellSeries::classify("adjoint_fn.zero", shells(End::Zero, ZERO_SHELLS, g)?));
            series.push(ShellSeries::classify("adjoint_fn.one", shells(End::One, ONE_SHELLS, g)?));
        }
    }
    let verdict = if series.iter().any(|s| s.growth == Growth::Unbounded) {
        Growth::Unbounded
    } else if series.iter().all(|s| s.growth == Growth::Bounded) {
        Growth::Bounded
    } else {
        Growth::Inconclusive
    };
    Ok(DivergenceProbe { series, verdict })
}
