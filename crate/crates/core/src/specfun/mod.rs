//! Special functions and quadrature rules.
//!
//! | Item | Purpose |
//! |------|---------|
//! | [`log_gamma`], [`beta`] | Γ and B in log space |
//! | [`incomplete_beta_upper`] | `∫_x^1 u^(b-1)(1-u)^(a-1) du` |
//! | [`radial_rule`] | Gauss-Jacobi on (0, 1) |
//! | [`disc_grid`] | tensor rule for `μ_{α,β}` |
//! | [`adaptive_gauss_legendre`] | 1-D adaptive integration |

mod adaptive;
mod gamma;
mod grid;
mod jacobi;

pub use adaptive::{adaptive_gauss_legendre, Integral};
pub use gamma::{beta, incomplete_beta_upper, log_beta, log_gamma};
pub use grid::{disc_grid, DiscGrid};
pub use jacobi::{gauss_legendre, radial_rule, QuadRule1D};

pub(crate) use gamma::ln_beta_unchecked;
