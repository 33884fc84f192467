//! Exact arithmetic substrate.

pub mod det;
pub mod epoly;
pub mod json;
pub mod laurent;
pub mod ring;
pub mod series;
pub mod unipoly;

pub use det::DetStrategy;
pub use epoly::EPolynomial;
pub use laurent::LaurentClass;
pub use ring::{binomial, Field, IntegralDomain, Ring};
pub use series::SeriesPrefix;
pub use unipoly::UniPoly;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
