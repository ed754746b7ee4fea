//! Verification suites. Each returns reports; plots are collected on the side.

use std::fmt::Display;

use bergman_core::report::CheckReport;
use bergman_core::space::SpaceParams;
use clap::ValueEnum;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::config::RunConfig;
use crate::svg::Plot;

mod asymptotics;
mod basis;
mod inequalities;
mod kernel;
mod operators;
mod toeplitz;
mod zeros;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Basis,
    Kernel,
    Inequalities,
    Operators,
    Toeplitz,
    Asymptotics,
    Zeros,
    All,
}

pub const KNOWN_CHECKS: &[&str] = &[
    "asymptotics.bounded",
    "asymptotics.log_fit",
    "asymptotics.slope",
    "basis.gram",
    "basis.mass",
    "basis.monomial_norm",
    "derivative_bound",
    "duality.holder",
    "fejer_riesz",
    "fejer_riesz.constant_one",
    "hardy_littlewood.kappa1",
    "hardy_littlewood.proxy",
    "kernel.diagonal_positive",
    "kernel.dirac_norm",
    "kernel.extremal_norm",
    "kernel.hermitian",
    "kernel.projection_oracle",
    "kernel.reproducing",
    "kernel.series_closed",
    "kernel.zero_count",
    "mp_bound.j_chain",
    "mp_bound.j_form",
    "mp_bound.kappa1_form",
    "mp_bound.kappa1_nu_form",
    "mp_bound.witness",
    "operators.divergence",
    "operators.schur_coherence",
    "operators.schur_constants",
    "operators.t_dominated",
    "operators.t_projection",
    "point_bound",
    "toeplitz.hermitian",
    "toeplitz.quadratic_form",
    "toeplitz.spectrum_lower",
    "toeplitz.spectrum_upper",
    "toeplitz.t00",
    "toeplitz.t00_direct",
];

/// State shared by the suites of one run.
pub struct Run<'a> {
    pub config: &'a RunConfig,
    /// `(file stem, plot)`.
    pub plots: Vec<(String, Plot)>,
}

impl<'a> Run<'a> {
    pub fn new(config: &'a RunConfig) -> Self {
        Self { config, plots: Vec::new() }
    }

    /// Every `(α, β)` pair of the grid.
    fn pairs(&self) -> Vec<(f64, f64)> {
        let c = self.config;
        c.alpha.iter().flat_map(|&a| c.beta.iter().map(move |&b| (a, b))).collect()
    }

    /// Every `(α, β, p)` point of the grid.
    fn points(&self) -> Vec<SpaceParams> {
        let c = self.config;
        self.pairs()
            .into_iter()
            .flat_map(|(a, b)| c.p.iter().map(move |&p| SpaceParams::new(a, b, p).expect("validated grid")))
            .collect()
    }

    /// Independent stream for one consumer, fully determined by the seed.
    fn rng(&self, stream: u64) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.config.seed);
        rng.set_stream(stream);
        rng
    }

    fn sub_seed(&self, stream: u64, index: usize) -> u64 {
        self.config
            .seed
            .wrapping_mul(0x9e37_79b9_7f4a_7c15)
            .wrapping_add(stream << 32)
            .wrapping_add(index as u64)
    }
}

pub fn run_suite(run: &mut Run<'_>, suite: Suite) -> Vec<CheckReport> {
    match suite {
        Suite::Basis => basis::run(run),
        Suite::Kernel => kernel::run(run),
        Suite::Inequalities => inequalities::run(run),
        Suite::Operators => operators::run(run),
        Suite::Toeplitz => toeplitz::run(run),
        Suite::Asymptotics => asymptotics::run(run),
        Suite::Zeros => zeros::run(run),
        Suite::All => [
            Suite::Basis,
            Suite::Kernel,
            Suite::Inequalities,
            Suite::Operators,
            Suite::Toeplitz,
            Suite::Asymptotics,
            Suite::Zeros,
        ]
        .into_iter()
        .flat_map(|s| run_suite(run, s))
        .collect(),
    }
}

fn space_params(report: CheckReport, params: &SpaceParams) -> CheckReport {
    report
        .param("alpha", params.alpha())
        .param("beta", params.beta())
        .param("p", params.p())
}

/// Turns a computation error into a failing report instead of aborting.
fn settle<E: Display>(id: &str, provenance: &str, params: &[(&str, f64)], r: Result<CheckReport, E>) -> CheckReport {
    r.unwrap_or_else(|e| {
        eprintln!("warning: {id} failed to compute: {e}");
        params
            .iter()
            .fold(CheckReport::new(id, provenance), |rep, (k, v)| rep.param(*k, *v))
    })
}

fn relative_margin(r: &CheckReport) -> f64 {
    let m = if r.rhs.is_finite() && r.rhs != 0.0 {
        r.margin / r.rhs.abs()
    } else {
        r.margin
    };
    if m.is_nan() {
        f64::NEG_INFINITY
    } else {
        m
    }
}

/// The report closest to failing (failures first), with summed runtime and
/// the family size recorded.
fn worst(reports: Vec<CheckReport>) -> Option<CheckReport> {
    let n = reports.len();
    let total: u64 = reports.iter().map(|r| r.runtime_ms).sum();
    let mut out = reports
        .into_iter()
        .min_by(|a, b| (a.passed(), relative_margin(a)).partial_cmp(&(b.passed(), relative_margin(b))).unwrap())?;
    out.runtime_ms = total;
    Some(out.param("family_size", n as f64))
}
