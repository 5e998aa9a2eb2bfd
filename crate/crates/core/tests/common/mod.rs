#![allow(dead_code)]

pub mod oracle;

use std::path::PathBuf;

use nsfam::exactmath::text::{default_names, parse_poly};
use nsfam::exactmath::{FieldDesc, MultiPoly, QuadField, Q};
use nsfam::families::RationalMap;
use nsfam::json::{parse_map_file, MapInput};
use nsfam::nslattice::DivClass;
use proptest::prelude::*;

pub fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name)
}

pub fn fixture(name: &str) -> MapInput {
    parse_map_file(&data(name)).unwrap()
}

pub fn eta() -> FieldDesc {
    FieldDesc::quadratic(QuadField::new(Q::from_integer((-1).into()), Q::from_integer(1.into())).unwrap())
}

pub fn names() -> Vec<String> {
    default_names(3)
}

pub fn poly(s: &str) -> MultiPoly {
    parse_poly(s, &default_names(3), &FieldDesc::Rationals).unwrap()
}

pub fn poly_in(s: &str, n: usize, field: &FieldDesc) -> MultiPoly {
    parse_poly(s, &default_names(n), field).unwrap()
}

pub fn map(forms: &[&str]) -> RationalMap {
    RationalMap::new(forms.iter().map(|s| poly(s)).collect(), FieldDesc::Rationals).unwrap()
}

/// Parses `e0-e4-e5` and pads to `rank`.
pub fn cls(s: &str, rank: usize) -> DivClass {
    let mut c: DivClass = s.parse().unwrap();
    c.0.resize(rank, 0);
    c
}

/// The five cubics of the example surface in P^4.
pub const CUBIC_MAP: [&str; 5] = [
    "x1^3+2*x2^2*x0-x1*x0^2-2*x2*x0^2",
    "x1^2*x2",
    "x1*x2^2-2*x2^2*x0+2*x2*x0^2",
    "x1*x2*x0-2*x2^2*x0+2*x2*x0^2",
    "x2^3-2*x2^2*x0+x2*x0^2",
];

/// Small nonzero rationals.
pub fn small_q() -> impl Strategy<Value = Q> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| Q::new(n.into(), d.into()))
}
