use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use bergman_core::family::{STANDARD_ALPHAS, STANDARD_BETAS, STANDARD_PS};
use serde::Deserialize;

use crate::suites::KNOWN_CHECKS;

/// Everything a run depends on. Loaded from JSON, then overridden by flags.
#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub alpha: Vec<f64>,
    pub beta: Vec<f64>,
    pub p: Vec<f64>,
    pub nr: usize,
    pub ntheta: usize,
    pub seed: u64,
    /// Random functions per parameter point for the pointwise and diameter checks.
    pub family_size: usize,
    /// Random functions per parameter point for the circle-mean scans.
    pub scan_family_size: usize,
    pub out: Option<PathBuf>,
    pub svg_dir: Option<PathBuf>,
    /// Replacement margin slack per check id.
    pub tol_override: BTreeMap<String, f64>,
    /// Write `runtime_ms = 0` so that repeated runs are byte-identical.
    pub no_timing: bool,
}

impl Default for RunConfig {
    fn default() -> Self {
        Self {
            alpha: STANDARD_ALPHAS.to_vec(),
            beta: STANDARD_BETAS.to_vec(),
            p: STANDARD_PS.to_vec(),
            nr: 64,
            ntheta: 256,
            seed: 42,
            family_size: 50,
            scan_family_size: 10,
            out: None,
            svg_dir: None,
            tol_override: BTreeMap::new(),
            no_timing: false,
        }
    }
}

impl RunConfig {
    pub fn from_json_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading config {}", path.display()))?;
        serde_json::from_str(&text).with_context(|| format!("parsing config {}", path.display()))
    }

    /// Rejects anything outside the domain before any computation starts.
    pub fn validate(&self) -> Result<()> {
        for (name, list) in [("alpha", &self.alpha), ("beta", &self.beta)] {
            if list.is_empty() {
                bail!("{name} grid is empty");
            }
            if let Some(v) = list.iter().find(|v| !(v.is_finite() && **v > -1.0)) {
                bail!("{name} = {v} is outside (-1, inf)");
            }
        }
        if self.p.is_empty() {
            bail!("p grid is empty");
        }
        if let Some(v) = self.p.iter().find(|v| !(v.is_finite() && **v >= 1.0)) {
            bail!("p = {v} is outside [1, inf)");
        }
        if self.nr < 2 {
            bail!("nr = {} must be at least 2", self.nr);
        }
        if self.ntheta < 8 {
            bail!("ntheta = {} must be at least 8", self.ntheta);
        }
        if self.family_size == 0 || self.scan_family_size == 0 {
            bail!("family sizes must be positive");
        }
        for (id, v) in &self.tol_override {
            if !KNOWN_CHECKS.contains(&id.as_str()) {
                bail!("--tol-override: unknown check id {id:?}");
            }
            if !(v.is_finite() && *v >= 0.0) {
                bail!("--tol-override {id}={v}: tolerance must be finite and nonnegative");
            }
        }
        Ok(())
    }
}

/// Parses `check_id=value`.
pub fn parse_tol_override(s: &str) -> Result<(String, f64)> {
    let (id, v) = s.split_once('=').with_context(|| format!("expected check_id=value, got {s:?}"))?;
    let v: f64 = v.trim().parse().with_context(|| format!("bad tolerance in {s:?}"))?;
    Ok((id.trim().to_string(), v))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_is_valid() {
        RunConfig::default().validate().unwrap();
    }

    #[test]
    fn rejects_out_of_domain() {
        let mut c = RunConfig::default();
        c.alpha.push(-1.0);
        assert!(c.validate().is_err());
        let mut c = RunConfig::default();
        c.p = vec![0.5];
        assert!(c.validate().is_err());
        let mut c = RunConfig::default();
        c.tol_override.insert("no_such_check".into(), 1e-3);
        assert!(c.validate().is_err());
    }

    #[test]
    fn json_fields_and_unknown_keys() {
        let c: RunConfig = serde_json::from_str(r#"{"alpha": [0.5], "seed": 7}"#).unwrap();
        assert_eq!(c.alpha, vec![0.5]);
        assert_eq!(c.seed, 7);
        assert_eq!(c.nr, 64);
        assert!(serde_json::from_str::<RunConfig>(r#"{"alpah": [0.5]}"#).is_err());
    }

    #[test]
    fn tol_override_syntax() {
        assert_eq!(parse_tol_override("fejer_riesz=1e-6").unwrap(), ("fejer_riesz".into(), 1e-6));
        assert!(parse_tol_override("fejer_riesz").is_err());
        assert!(parse_tol_override("fejer_riesz=abc").is_err());
    }
}
