//! Exact Lie-ideal calculus for finite-dimensional associative algebras
//! over GF(p).
//!
//! Algebras are given by structure constants. Every additive subgroup of an
//! algebra over GF(p) is a subspace, so Lie ideals, ideals, products and
//! brackets of subgroups are all computed as canonical subspaces. On top of
//! that sit classifiers (simplicity, primeness, the exceptional case),
//! enumeration of Lie ideal and ideal lattices, and [`verify`], which checks
//! structural statements about Lie ideals over every enumerated instance.
//!
//! ```
//! use lieideal::{algebra::matrix_algebra, enumerate::all_lie_ideals};
//!
//! let m = matrix_algebra(2, 2).unwrap();
//! assert_eq!(all_lie_ideals(&m, 1000).unwrap().len(), 7);
//! ```

pub mod algebra;
pub mod calc;
pub mod classify;
pub mod enumerate;
pub mod error;
pub mod linalg;
pub mod par;
pub mod report;
pub mod verify;

pub use algebra::{Algebra, AlgebraDefinition, Element};
pub use error::{Error, Result};
pub use linalg::{PrimeField, Subspace, Vector};
pub use par::Exec;
pub use report::{CheckReport, Status};
