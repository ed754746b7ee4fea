//! Verification runs over parameter grids, with CSV reports and SVG plots.

pub mod config;
pub mod csv_io;
pub mod suites;
pub mod svg;

use std::fs;
use std::io::Write;

use anyhow::{Context, Result};
use bergman_core::report::{CheckReport, Verdict};

use config::RunConfig;
use suites::{run_suite, Run, Suite};

/// Outcome of [`execute`].
#[derive(Debug)]
pub struct Summary {
    pub total: usize,
    pub failed: usize,
    pub informational: usize,
}

impl Summary {
    pub fn all_passed(&self) -> bool {
        self.failed == 0
    }
}

/// Runs a suite and returns its reports in canonical order with tolerance
/// overrides applied.
pub fn collect(config: &RunConfig, suite: Suite) -> (Vec<CheckReport>, Vec<(String, svg::Plot)>) {
    let mut run = Run::new(config);
    let mut reports = run_suite(&mut run, suite);
    for r in &mut reports {
        if let Some(&slack) = config.tol_override.get(&r.check_id) {
            r.rejudge(slack);
        }
        if config.no_timing {
            r.runtime_ms = 0;
        }
    }
    sort_reports(&mut reports);
    (reports, run.plots)
}

/// By check id, then by parameters.
pub fn sort_reports(reports: &mut [CheckReport]) {
    reports.sort_by(|a, b| {
        a.check_id.cmp(&b.check_id).then_with(|| {
            let ka = a.params.iter().map(|(k, v)| (k.as_str(), *v));
            let kb = b.params.iter().map(|(k, v)| (k.as_str(), *v));
            ka.zip(kb)
                .map(|((k1, v1), (k2, v2))| k1.cmp(k2).then(v1.total_cmp(&v2)))
                .find(|o| o.is_ne())
                .unwrap_or(a.params.len().cmp(&b.params.len()))
        })
    });
}

/// Runs, writes the CSV (stdout when no path is configured) and the plots.
pub fn execute(config: &RunConfig, suite: Suite, stdout: impl Write) -> Result<Summary> {
    let (reports, plots) = collect(config, suite);
    match &config.out {
        Some(path) => {
            if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
                fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
            }
            let file = fs::File::create(path).with_context(|| format!("creating {}", path.display()))?;
            csv_io::write_reports(std::io::BufWriter::new(file), &reports)?;
        }
        None => csv_io::write_reports(stdout, &reports)?,
    }
    if let Some(dir) = &config.svg_dir {
        fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;
        for (stem, plot) in &plots {
            let path = dir.join(format!("{stem}.svg"));
            fs::write(&path, plot.render()).with_context(|| format!("writing {}", path.display()))?;
        }
    }
    Ok(Summary {
        total: reports.len(),
        failed: reports.iter().filter(|r| r.verdict == Verdict::Fail).count(),
        informational: reports.iter().filter(|r| r.verdict == Verdict::Informational).count(),
    })
}
