//! Exact scalar arithmetic: number theory helpers, cyclotomic and finite
//! fields, polynomials and linear algebra.

pub mod cyclo;
pub mod cyclotomic;
pub mod ffactor;
pub mod field;
pub mod fp;
pub mod gf;
pub mod linalg;
pub mod modular;
pub mod ntheory;
pub mod poly;
pub mod scalar;

pub use cyclo::Cyc;
pub use field::{Ambient, Base, FieldSpec, Gal, Subfield};
pub use gf::{Gf, GfField};
pub use poly::Poly;
pub use scalar::Scalar;
