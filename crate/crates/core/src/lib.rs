//! Exact homological computations over the bigraded dual Steenrod algebra.
//!
//! The crate is organised bottom-up:
//!
//!  - [`f2linalg`]: sparse/dense linear algebra over the two-element field.
//!  - [`hopf`]: monomial bases, coproducts and dual products of the bigraded
//!    dual Steenrod algebra `G`, its isotropic extension and the homology of
//!    the point.
//!  - [`comodule`]: finite bigraded comodules over `G`, with Chow-Novikov
//!    splitting, heart regrading, composition series and extensions.
//!  - [`extengine`]: the cobar complex and minimal-resolution Ext engines.
//!  - [`specseq`]: spectral-sequence E2 pages and hom-set formulas assembled
//!    from the engines.
//!  - [`tate`]: isotropic homology dimensions and Tate-motive hom sets.
//!  - [`sampling`]: random valid comodules for tests.

pub mod comodule;
pub mod error;
pub mod extengine;
pub mod f2linalg;
pub mod grading;
pub mod hopf;
pub mod sampling;
pub mod specseq;
pub mod tate;

pub use error::{Error, Result};
pub use grading::{Bidegree, Tridegree};
