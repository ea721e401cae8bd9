//! Exact structure theory for finite-dimensional Lie algebras over ℚ.
//!
//! The crate is layered: [`linalg`] provides exact rational linear algebra,
//! [`algebra`] the structure-constant representation, [`structure`] the
//! radical/nilradical/Levi machinery, [`frattini`] Frattini ideals and
//! socles, [`rootsys`] split semisimple algebras and parabolics, and
//! [`classes`] the class predicates with their certificates.

#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod classes;
pub mod error;
pub mod frattini;
pub mod json;
pub mod linalg;
pub mod rootsys;
pub mod sampling;
pub mod structure;
pub mod verdict;
pub mod zoo;

pub use algebra::{JacobiCheck, LieAlgebra, LieAlgebraBuilder};
pub use error::{Error, Result};
pub use linalg::{Matrix, Poly, Rat, Subspace};
pub use sampling::Config;
pub use verdict::{TriState, Verdict, Witness};
