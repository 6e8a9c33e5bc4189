//! Recovery of uniformly stressed elastic inclusion shapes in a traction-free
//! half-plane under antiplane shear.
//!
//! The inclusion boundary is the image of the slit `[0,1]` under a conformal
//! map from a two-slit parametric plane. The map is assembled from the
//! solutions of two scalar Riemann-Hilbert problems posed on the genus-1
//! surface of `u^2 = zeta (1 - zeta)(zeta - m)`, which in turn require a
//! factorization step driven by a Jacobi inversion problem.
//!
//! The crate is `no_std` (with `alloc`); all IO, file formats and the CLI
//! live in the companion `slitmap-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod elliptic;
pub mod factorization;
pub mod params;
pub mod quadrature;
pub mod rh1;
pub mod rh2;
pub mod shape;
pub mod solver;
pub mod surface;

pub use num_complex::Complex64;

pub use params::{DerivedConstants, ModelParams, ValidationReport};
pub use shape::{Diagnostics, InclusionContour};
pub use solver::SolverState;
pub use surface::{Sheet, Side, SideValue, Slit, SurfacePoint};
