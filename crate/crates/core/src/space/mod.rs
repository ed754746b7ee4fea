//! Space parameters, the Laurent-polynomial function model, and norms.

mod laurent;
mod mean;
mod mobius;
mod norms;
mod params;

pub use laurent::LaurentPoly;
pub use mean::{mean_value, MeanExponent};
pub use mobius::{mobius, mobius_transfer, MobiusTransfer};
pub use norms::{
    coefficient_norm, inner_product, membership, monomial_moment, monomial_norm, norm_grid,
    norm_quadrature, radial_moment, space_norm, tilde_transform, QuadratureNorm,
};
pub use params::{nearest_integer, pole_order_bound, SpaceParams, INTEGRALITY_TOL};
