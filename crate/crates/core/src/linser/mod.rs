//! Linear series of plane curves: series with prescribed (possibly
//! infinitely near) basepoints, basepoint analysis of a given series, actual
//! classes and irreducibility tests.

mod basepoints;
mod irreducible;
pub mod linalg;
mod local;
mod series;

pub use basepoints::{basepoint_analysis, basepoint_analysis_seeded, plane_common_zeros, BaseLocus, PlanePoint};
pub use irreducible::{is_irreducible, Irreducibility, SeriesCache};
pub use series::{actual_class, member_at, series_from_class};

use crate::error::{Error, Result};
use crate::exactmath::{FieldDesc, MultiPoly};

/// Default bound on the depth of infinitely near points.
pub const DEFAULT_DEPTH_CAP: usize = 8;
/// Default seed for the random combinations used in basepoint analysis.
pub const DEFAULT_SEED: u64 = 0x6e73_6661_6d00_0001;

/// Homogeneous forms of one degree in `x0, x1, x2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSeries {
    pub degree: u32,
    pub basis: Vec<MultiPoly>,
    pub field: FieldDesc,
}

impl LinearSeries {
    pub fn new(degree: u32, basis: Vec<MultiPoly>, field: FieldDesc) -> Result<Self> {
        for b in &basis {
            if b.nvars() != 3 {
                return Err(Error::InvalidInput(format!("series member {b} is not in 3 variables")));
            }
            if b.is_zero() || !b.is_homogeneous() || b.total_degree() != Some(degree) {
                return Err(Error::InvalidInput(format!("series member {b} is not a nonzero form of degree {degree}")));
            }
        }
        Ok(LinearSeries { degree, basis, field })
    }

    /// Number of basis members, i.e. `h0` of the series.
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }
}
