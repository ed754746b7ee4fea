//! Integral operators with Bergman-type kernels, the model integral `I_ω`,
//! Schur tests, the duality pairing, and the diameter Toeplitz operator.

mod duality;
mod integral;
mod lemma;
mod params;
mod schur;
mod toeplitz;

pub use duality::{duality_pairing, holder_check};
pub use integral::{adjoint_s_one, apply_s, apply_t, OperatorGrid, OperatorKind};
pub use lemma::{
    default_fit_radii, i_omega, i_omega_asymptotic_fit, i_omega_radial, linear_fit, AsymptoticFit,
    I_OMEGA_TOL,
};
pub use params::{condition3, schur_witness, OperatorParams};
pub use schur::{default_schur_radii, divergence_probe, schur_constants, DivergenceProbe, Growth, ShellSeries};
pub use toeplitz::{diameter_moment, toeplitz_entry_direct, toeplitz_matrix, ToeplitzMatrix};
