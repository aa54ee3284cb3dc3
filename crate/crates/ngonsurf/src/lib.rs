//! Exact flat geometry of the regular n-gon and double n-gon translation surfaces.
//!
//! Everything is computed over the cyclotomic field Q(zeta_{4n}) with
//! arbitrary-precision rational coefficients; floating point appears only in
//! diagnostic "shadows" attached to JSON/SVG output. The crate builds the
//! surfaces, their Veech-group generators and affine action, cylinder
//! decompositions in periodic directions, candidate-segment exclusion
//! arguments for periodic points, and finite-blocking queries, each backed by
//! exact certificates.
//!
//! The `examples/` directory has one runnable program per capability; the
//! `ngonsurf` binary exposes the same operations as subcommands.

pub mod blocking;
pub mod cli;
pub mod cylinders;
pub mod error;
pub mod exactnum;
pub mod geom;
pub mod periodic;
pub mod surface;
pub mod svg;
pub mod veech;

pub use error::{Error, Result};
pub use exactnum::{CycElt, CycPoly, Rational};
