//! Exact scalars and univariate polynomials: rationals, Gaussian rationals,
//! Sturm sequences, root isolation, factorization and real algebraic numbers.

pub mod algebraic;
pub mod factor;
pub mod field;
pub mod gaussian;
pub mod modp;
pub mod rational;
pub mod roots;
pub mod sign;
pub mod sturm;
pub mod upoly;

pub use algebraic::AlgebraicNumber;
pub use factor::{factor_univariate, UniFactor, UniFactorization};
pub use field::Field;
pub use gaussian::GaussianRational;
pub use roots::isolate_real_roots;
pub use sign::sign_at;

pub use sturm::sturm_count;
pub use upoly::UniPoly;

pub type Integer = num_bigint::BigInt;
pub type Rational = num_rational::BigRational;
