//! Two-term silting theory of finite-dimensional bound quiver algebras.
//!
//! Algebras are built from a small relation language (see [`dsl`]), and the
//! [`silting`] and [`hasse`] modules enumerate two-term silting complexes by
//! iterated left mutation, which counts support tau-tilting modules.

pub mod algebra;
pub mod catalog;
pub mod complex;
pub mod dsl;
pub mod error;
pub mod hasse;
pub mod linalg;
pub mod quiver;
pub mod reduce;
pub mod report;
pub mod rewrite;
pub mod scalar;
pub mod silting;

pub use algebra::{Algebra, Elem};
pub use error::{Error, Result};
pub use quiver::{Path, Quiver};
pub use rewrite::Bounds;
pub use scalar::Scalar;
