//! Exact computations in semisimple group algebras `F[G]` for `F` one of
//! `Q`, `Q(zeta_m)` or `GF(q)` with `q` prime to `|G|`.

pub mod arith;
pub mod error;

pub use error::{Error, Result};
pub mod algebra;
pub mod berman;
pub mod catalog;
pub mod chartable;
pub mod ftheory;
pub mod group;
pub mod oracle;
pub mod report;
pub mod structure;
pub mod verify;
