//! Exact polynomial arithmetic over arbitrary-precision integers.

mod binomial;
mod bivariate;
mod transform;
mod univariate;

pub use binomial::{binomial, Binomials};
pub use bivariate::BiPoly;
pub use transform::{binomial_relation_holds, p_to_s, s_to_p};
pub use univariate::{expand_series, UniPoly};
