//! Curves and complete families of curves on real rational surfaces given by
//! a birational parametrization of the plane.
//!
//! The pipeline: find the base locus of the parametrizing map
//! ([`linser::basepoint_analysis`]), build the Neron-Severi lattice
//! ([`nslattice::NSLattice`]), enumerate candidate classes of prescribed
//! degree and self-intersection ([`classenum::enumerate_classes`]) and
//! certify each candidate through its linear series
//! ([`families::find_families`]). All arithmetic is exact.

pub mod classenum;
pub mod cli;
pub mod error;
pub mod exactmath;
pub mod families;
pub mod json;
pub mod linser;
pub mod nslattice;

pub use error::{Error, Result};
