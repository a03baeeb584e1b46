//! Exact Reidemeister torsion and intersection Reidemeister torsion of finite
//! simplicial complexes.
//!
//! Everything is computed over the rationals with arbitrary precision, so
//! every identity below is checked as an exact equality:
//!
//! - [`chain`]: based chain complexes, homology, scalar torsion.
//! - [`detline`]: determinant lines of homology and torsion norms.
//! - [`spaces`]: simplicial complexes, spheres, cones, products, subdivision.
//! - [`stratified`]: perversities and intersection chain complexes.
//! - [`sequences`]: Mayer–Vietoris gluing and product formulas.
//! - [`hodge`]: combinatorial Laplacians and the finite Cheeger–Müller identity.
#![no_std]

extern crate alloc;

pub mod chain;
pub mod detline;
pub mod error;
pub mod hodge;
pub mod linalg;
pub mod sequences;
pub mod spaces;
pub mod stratified;

pub use chain::{homology, torsion, BasedChainComplex, HomologyBasis, TorsionScalar};
pub use error::{Error, Result};
pub use linalg::{Rational, RationalMatrix};
