//! Exact canonical bases of level-1 Fock spaces in affine types `A(1)` and
//! `A(2)`, together with the combinatorial maps comparing them and the
//! closed formulas available for Rouquier cores.
//!
//! Everything is exact: coefficients are integer Laurent polynomials and no
//! floating point is involved anywhere.

pub mod abacus;
pub mod compare;
pub mod error;
pub mod fock;
pub mod hstrict;
pub mod partition;
pub mod qpoly;
pub mod report;
pub mod rouquier;
pub mod symfunc;

pub use error::{Error, Result};
pub use fock::{CanonicalBasisMatrix, FockKind, FockVector};
pub use partition::{Node, Partition};
pub use qpoly::{LaurentPoly, TPoly};
pub use report::Report;
