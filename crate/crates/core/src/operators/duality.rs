use std::time::Instant;

use num_complex::Complex64;

use crate::error::{domain, Result};
use crate::inequalities::reference_norm;
use crate::report::CheckReport;
use crate::space::{inner_product, membership, LaurentPoly, SpaceParams};

/// `⟨f, g⟩_{a,b} = ∫ f conj(g) dμ_{a,b}`, summed over coefficients.
pub fn duality_pairing(f: &LaurentPoly, g: &LaurentPoly, a: f64, b: f64) -> Result<Complex64> {
    inner_product(f, g, a, b)
}

/// Hölder bound `|⟨f, g⟩_{a,b}| ≤ ‖f‖_{a,b,p} ‖g‖_{a,b,q}` for `p > 1`.
pub fn holder_check(f: &LaurentPoly, g: &LaurentPoly, a: f64, b: f64, p: f64) -> Result<CheckReport> {
    let start = Instant::now();
    if !(p > 1.0) {
        return Err(domain("holder_check", format!("needs p > 1, got {p}")));
    }
    let q = p / (p - 1.0);
    let fp = SpaceParams::new(a, b, p)?;
    let gq = SpaceParams::new(a, b, q)?;
    if !membership(f, &fp) || !membership(g, &gq) {
        return Err(domain("holder_check", "f or g outside its space"));
    }
    let lhs = duality_pairing(f, g, a, b)?.norm();
    let rhs = reference_norm(f, &fp)? * reference_norm(g, &gq)?;
    Ok(CheckReport::new("duality.holder", "Holder bound for the integral pairing")
        .param("a", a)
        .param("b", b)
        .param("p", p)
        .upper_bound(lhs, rhs, 1e-9)
        .timed(start))
}
