use num_complex::Complex64;

use crate::error::{domain, Result};

/// `φ_ζ(z) = (ζ - z)/(1 - conj(ζ) z)`, an involution of the disc swapping
/// `0` and `ζ`.
pub fn mobius(zeta: Complex64, z: Complex64) -> Result<Complex64> {
    let den = Complex64::new(1.0, 0.0) - zeta.conj() * z;
    if den.norm() == 0.0 {
        return Err(domain("mobius", format!("pole at z = {z}")));
    }
    Ok((zeta - z) / den)
}

/// `z ↦ f(φ_ζ(z))`, carrying a function on `D \ {ζ}` to one on `D*`.
#[derive(Debug, Clone)]
pub struct MobiusTransfer<F> {
    f: F,
    zeta: Complex64,
}

pub fn mobius_transfer<F>(f: F, zeta: Complex64) -> Result<MobiusTransfer<F>>
where
    F: Fn(Complex64) -> Complex64,
{
    if !(zeta.norm() < 1.0) {
        return Err(domain("mobius_transfer", format!("|zeta| = {} must be < 1", zeta.norm())));
    }
    Ok(MobiusTransfer { f, zeta })
}

impl<F> MobiusTransfer<F>
where
    F: Fn(Complex64) -> Complex64,
{
    pub fn zeta(&self) -> Complex64 {
        self.zeta
    }

    pub fn eval(&self, z: Complex64) -> Result<Complex64> {
        Ok((self.f)(mobius(self.zeta, z)?))
    }
}
