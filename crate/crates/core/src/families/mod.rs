//! Complete families of curves of prescribed degree, dimension and genus on
//! a surface given by a plane parametrization.

mod circles;

pub use circles::{absolute_witness, compose_maps, inverse_stereographic, real_filter, Witness};

use std::collections::BTreeSet;

use crate::classenum::{enumerate_classes, EnumQuery};
use crate::error::{Error, Result};
use crate::exactmath::{gcd_content, FieldDesc, MultiPoly};
use crate::linser::{actual_class, basepoint_analysis_seeded, BaseLocus, Irreducibility, LinearSeries, SeriesCache};
use crate::nslattice::{ClassShape, DivClass, NSLattice};

/// `(x0 : x1 : x2) -> (f_0 : ... : f_n)` with forms of one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMap {
    pub components: Vec<MultiPoly>,
    pub field: FieldDesc,
}

impl RationalMap {
    /// Checks that the components are nonzero forms of one degree in a
    /// common number of variables.
    pub fn new(components: Vec<MultiPoly>, field: FieldDesc) -> Result<Self> {
        let first = components.first().ok_or_else(|| Error::InvalidInput("map without components".into()))?;
        let nvars = first.nvars();
        let degree = components
            .iter()
            .find_map(MultiPoly::total_degree)
            .ok_or_else(|| Error::InvalidInput("all components are zero".into()))?;
        for c in &components {
            if c.nvars() != nvars {
                return Err(Error::InvalidInput("components differ in the number of variables".into()));
            }
            if !c.is_zero() && (!c.is_homogeneous() || c.total_degree() != Some(degree)) {
                return Err(Error::InvalidInput(format!("component {c} is not a form of degree {degree}")));
            }
        }
        Ok(RationalMap { components, field })
    }

    pub fn nvars(&self) -> usize {
        self.components[0].nvars()
    }

    pub fn degree(&self) -> u32 {
        self.components.iter().find_map(MultiPoly::total_degree).unwrap_or(0)
    }

    /// Components as a linear series, after checking the surface-map
    /// conditions: three variables, at least three components, no common
    /// factor.
    pub fn series(&self) -> Result<LinearSeries> {
        if self.nvars() != 3 {
            return Err(Error::InvalidInput(format!("map has {} source variables, expected 3", self.nvars())));
        }
        if self.components.len() < 3 {
            return Err(Error::InvalidInput("a surface map needs at least 3 components".into()));
        }
        let g = gcd_content(&self.components);
        if !g.is_constant() {
            return Err(Error::FixedComponent(format!("components share the factor {g}")));
        }
        let basis = self.components.iter().filter(|c| !c.is_zero()).cloned().collect();
        LinearSeries::new(self.degree(), basis, self.field.clone())
    }
}

/// Options for surface analysis.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AnalysisOptions {
    pub depth_cap: usize,
    pub seed: u64,
}

impl Default for AnalysisOptions {
    fn default() -> Self {
        AnalysisOptions { depth_cap: crate::linser::DEFAULT_DEPTH_CAP, seed: crate::linser::DEFAULT_SEED }
    }
}

/// Base locus of the map and the lattice it spans.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Surface {
    pub lattice: NSLattice,
    pub locus: BaseLocus,
}

impl Surface {
    /// Lattice from known base-locus data, skipping the analysis.
    pub fn from_locus(m: &RationalMap, locus: BaseLocus) -> Result<Self> {
        let lattice = NSLattice::new(m.degree(), locus.tree.clone(), &locus.mults)?;
        Ok(Surface { lattice, locus })
    }
}

pub fn analyze_surface_with(m: &RationalMap, opts: AnalysisOptions) -> Result<Surface> {
    let s = m.series()?;
    let locus = basepoint_analysis_seeded(&s, opts.depth_cap, opts.seed)?;
    Surface::from_locus(m, locus)
}

/// Neron-Severi lattice of the surface parametrized by `m`.
pub fn analyze_surface(m: &RationalMap, depth_cap: usize) -> Result<NSLattice> {
    Ok(analyze_surface_with(m, AnalysisOptions { depth_cap, ..Default::default() })?.lattice)
}

/// Degree `alpha`, `h0 = nu` (dimension `nu - 1`) and genus `rho`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FamilyQuery {
    pub alpha: i64,
    pub nu: i64,
    pub rho: i64,
    /// Keep only classes fixed by the real structure.
    pub real_only: bool,
}

impl FamilyQuery {
    pub fn new(alpha: i64, nu: i64, rho: i64) -> Result<Self> {
        if alpha < 0 || nu < 1 || rho < 0 {
            return Err(Error::InvalidQuery(format!("need alpha >= 0, nu >= 1, rho >= 0, got ({alpha}, {nu}, {rho})")));
        }
        Ok(FamilyQuery { alpha, nu, rho, real_only: false })
    }

    pub fn real(mut self) -> Self {
        self.real_only = true;
        self
    }

    /// Self-intersections to scan: `-2 ..= nu + rho - 2`.
    pub fn betas(&self) -> std::ops::RangeInclusive<i64> {
        -2..=self.nu + self.rho - 2
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyReport {
    pub cls: DivClass,
    pub degree: i64,
    /// `h0 - 1`.
    pub dimension: i64,
    pub genus: i64,
    pub series: Option<LinearSeries>,
    /// False for exceptional curves over basepoints, which the
    /// parametrization does not reach.
    pub reachable: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum RejectReason {
    WrongDimension,
    WrongGenus,
    Reducible,
    ClassMismatch,
    Unsupported,
}

impl RejectReason {
    pub fn as_str(self) -> &'static str {
        match self {
            RejectReason::WrongDimension => "wrong-dimension",
            RejectReason::WrongGenus => "wrong-genus",
            RejectReason::Reducible => "reducible",
            RejectReason::ClassMismatch => "class-mismatch",
            RejectReason::Unsupported => "unsupported",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rejection {
    pub cls: DivClass,
    pub reason: RejectReason,
    pub detail: String,
    /// Recomputed class, for class mismatches.
    pub actual: Option<DivClass>,
    pub witness: Option<MultiPoly>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyOutcome {
    pub query: FamilyQuery,
    pub candidates: BTreeSet<DivClass>,
    pub accepted: Vec<FamilyReport>,
    pub rejected: Vec<Rejection>,
}

impl FamilyOutcome {
    pub fn accepted_classes(&self) -> BTreeSet<DivClass> {
        self.accepted.iter().map(|r| r.cls.clone()).collect()
    }

    pub fn rejection(&self, c: &DivClass) -> Option<&Rejection> {
        self.rejected.iter().find(|r| r.cls == *c)
    }
}

/// Candidate classes: the class enumeration over the self-intersection
/// range, optionally restricted to real classes.
pub fn candidate_classes(lattice: &NSLattice, q: &FamilyQuery) -> Result<BTreeSet<DivClass>> {
    let mut out = BTreeSet::new();
    for beta in q.betas() {
        out.extend(enumerate_classes(&EnumQuery::new(lattice.h.clone(), q.alpha, beta)?)?);
    }
    if q.real_only {
        out = real_filter(&out, &lattice.sigma);
    }
    Ok(out)
}

fn reject(cls: &DivClass, reason: RejectReason, detail: String) -> Rejection {
    Rejection { cls: cls.clone(), reason, detail, actual: None, witness: None }
}

/// Certifies every candidate of an analyzed surface.
pub fn find_families_on(surface: &Surface, q: &FamilyQuery, depth_cap: usize) -> Result<FamilyOutcome> {
    let lattice = &surface.lattice;
    let tree = &lattice.tree;
    let candidates = candidate_classes(lattice, q)?;
    let cache = SeriesCache::new(lattice, tree);
    let mut accepted = Vec::new();
    let mut rejected = Vec::new();
    for c in &candidates {
        let degree = lattice.degree(c)?;
        let genus = lattice.genus(c)?;
        if genus != q.rho {
            rejected.push(reject(c, RejectReason::WrongGenus, format!("genus {genus}")));
            continue;
        }
        match c.shape() {
            Some(ClassShape::Exceptional(i)) => {
                if !tree.point(i).is_root() {
                    rejected.push(reject(c, RejectReason::Unsupported, format!("p{i} is infinitely near")));
                } else if q.nu != 1 {
                    rejected.push(reject(c, RejectReason::WrongDimension, "h0 = 1".into()));
                } else {
                    accepted.push(FamilyReport { cls: c.clone(), degree, dimension: 0, genus, series: None, reachable: false });
                }
            }
            Some(ClassShape::Planar) => {
                let s = cache.series(c)?;
                if s.dim() as i64 != q.nu {
                    rejected.push(reject(c, RejectReason::WrongDimension, format!("h0 = {}", s.dim())));
                    continue;
                }
                if let Irreducibility::Reducible { reason, witness } = cache.is_irreducible(c) {
                    rejected.push(Rejection { witness, ..reject(c, RejectReason::Reducible, reason) });
                    continue;
                }
                let actual = actual_class(&s, tree, depth_cap)?;
                if actual != *c {
                    rejected.push(Rejection {
                        actual: Some(actual.clone()),
                        ..reject(c, RejectReason::ClassMismatch, format!("actual class {actual}"))
                    });
                    continue;
                }
                accepted.push(FamilyReport {
                    cls: c.clone(),
                    degree,
                    dimension: q.nu - 1,
                    genus,
                    series: Some((*s).clone()),
                    reachable: true,
                });
            }
            Some(ClassShape::Difference(..)) => {
                rejected.push(reject(c, RejectReason::Unsupported, "contracted to a point".into()))
            }
            None => rejected.push(reject(c, RejectReason::Unsupported, "unsupported class shape".into())),
        }
    }
    Ok(FamilyOutcome { query: *q, candidates, accepted, rejected })
}

/// Analyzes the surface and certifies the candidates of `q`.
pub fn find_families(m: &RationalMap, q: &FamilyQuery) -> Result<FamilyOutcome> {
    let opts = AnalysisOptions::default();
    let surface = analyze_surface_with(m, opts)?;
    find_families_on(&surface, q, opts.depth_cap)
}
