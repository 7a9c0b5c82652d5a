//! Sparse multivariate polynomials over the rationals and Gaussian rationals.

pub mod factor;
pub mod gcd;
pub mod matrix;
pub mod monomial;
pub mod parse;
pub mod poly;
pub mod subres;

pub use matrix::{jacobian, PolyMatrix};
pub use monomial::{Monomial, MonomialOrder};
pub use parse::{parse_gaussian, parse_poly};
pub use poly::{GPoly, MPoly, QPoly};
pub use subres::{resultant, subresultant_chain};
