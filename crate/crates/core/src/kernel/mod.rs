//! Reproducing kernels, the Bergman projection, and point-evaluation bounds.

mod eval;
mod extremal;
mod projection;
mod zeros;

pub use eval::{kernel_closed, kernel_series, KernelEval, KernelMode, KernelValue, DEFAULT_MAX_TERMS, DEFAULT_TRUNC_TOL};
pub use extremal::{extremal_quantities, kernel_section, Extremal};
pub use projection::project;
pub use zeros::{kernel_zero_count, truncated_kernel};
