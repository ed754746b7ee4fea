use std::time::Instant;

use bergman_core::kernel::kernel_zero_count;
use bergman_core::report::CheckReport;
use num_complex::Complex64;

use super::{settle, Run};

const PROVENANCE: &str = "zeros of the truncated kernel by the argument principle";
const TRUNC: usize = 200;
const ANNULUS: (f64, f64) = (0.1, 0.95);

/// Zero counts of `w ↦ K̂(w, z)`; reported without a pass criterion.
pub fn run(run: &mut Run<'_>) -> Vec<CheckReport> {
    let mut out = Vec::new();
    for (a, b) in run.pairs() {
        for r in [0.5, 0.9] {
            let start = Instant::now();
            let z = Complex64::new(r, 0.0);
            let params = [("alpha", a), ("beta", b), ("z", r), ("r_in", ANNULUS.0), ("r_out", ANNULUS.1)];
            let result = kernel_zero_count(a, b, ANNULUS, z, TRUNC).map(|count| {
                params
                    .iter()
                    .fold(CheckReport::new("kernel.zero_count", PROVENANCE), |rep, (k, v)| rep.param(*k, *v))
                    .param("trunc", TRUNC as f64)
                    .informational(count as f64, f64::NAN)
                    .timed(start)
            });
            let mut rep = settle("kernel.zero_count", PROVENANCE, &params, result);
            rep.verdict = bergman_core::report::Verdict::Informational;
            out.push(rep);
        }
    }
    out
}
