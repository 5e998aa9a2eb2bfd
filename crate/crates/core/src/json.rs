//! JSON documents: map input files and reports.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exactmath::text::{default_names, format_poly};
use crate::exactmath::{parse_elem, parse_minpoly, parse_poly, FieldDesc};
use crate::families::{FamilyOutcome, RationalMap, Surface};
use crate::linser::{BaseLocus, LinearSeries};
use crate::nslattice::{Basepoint, BasepointTree, Chart, DivClass};

/// One basepoint. `patch` defaults to 0 (the chart `x0 = 1`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NodeJson {
    pub id: usize,
    pub parent: Option<usize>,
    pub chart: String,
    pub coords: [String; 2],
    pub mult: u32,
    #[serde(default)]
    pub patch: usize,
}

/// Map input file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MapFile {
    #[serde(default)]
    pub variables: Option<Vec<String>>,
    pub map: Vec<String>,
    #[serde(default)]
    pub minpoly: Option<String>,
    #[serde(default)]
    pub basepoints: Option<Vec<NodeJson>>,
}

/// A parsed map file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MapInput {
    pub map: RationalMap,
    pub field: FieldDesc,
    pub names: Vec<String>,
    pub basepoints: Option<BaseLocus>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesJson {
    pub degree: u32,
    pub basis: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceJson {
    pub field: Option<String>,
    pub h: Vec<i64>,
    pub k: Vec<i64>,
    pub sigma: Vec<usize>,
    pub basepoints: Vec<NodeJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QueryJson {
    pub alpha: i64,
    pub nu: i64,
    pub rho: i64,
    pub real: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AcceptedJson {
    pub class: Vec<i64>,
    pub name: String,
    pub degree: i64,
    pub dimension: i64,
    pub genus: i64,
    pub series: Option<SeriesJson>,
    pub reachable: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RejectedJson {
    pub class: Vec<i64>,
    pub name: String,
    pub reason: String,
    pub detail: String,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub actual: Option<Vec<i64>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamiliesJson {
    pub surface: SurfaceJson,
    pub query: QueryJson,
    pub candidates: Vec<Vec<i64>>,
    pub accepted: Vec<AcceptedJson>,
    pub rejected: Vec<RejectedJson>,
}

pub fn parse_map_text(text: &str) -> Result<MapInput> {
    let file: MapFile = serde_json::from_str(text).map_err(|e| Error::Parse(format!("map file: {e}")))?;
    map_input(&file)
}

/// Reads a map file from disk.
pub fn parse_map_file(path: &std::path::Path) -> Result<MapInput> {
    parse_map_text(&std::fs::read_to_string(path)?)
}

pub fn map_input(file: &MapFile) -> Result<MapInput> {
    let names = file.variables.clone().unwrap_or_else(|| default_names(3));
    if names.len() != 3 {
        return Err(Error::Parse(format!("expected 3 variables, got {}", names.len())));
    }
    let field = match &file.minpoly {
        Some(m) => FieldDesc::quadratic(parse_minpoly(m).map_err(|e| Error::Parse(e.to_string()))?),
        None => FieldDesc::Rationals,
    };
    let comps = file.map.iter().map(|s| parse_poly(s, &names, &field)).collect::<Result<Vec<_>>>()?;
    let map = RationalMap::new(comps, field.clone()).map_err(|e| Error::Parse(e.to_string()))?;
    let basepoints = match &file.basepoints {
        Some(nodes) => Some(locus_from_json(nodes, &field)?),
        None => None,
    };
    Ok(MapInput { map, field, names, basepoints })
}

pub fn locus_from_json(nodes: &[NodeJson], field: &FieldDesc) -> Result<BaseLocus> {
    let mut points = Vec::with_capacity(nodes.len());
    let mut mults = Vec::with_capacity(nodes.len());
    for n in nodes {
        if n.mult == 0 {
            return Err(Error::Parse(format!("p{} has multiplicity 0", n.id)));
        }
        points.push(Basepoint {
            id: n.id,
            coords: [parse_elem(&n.coords[0], field)?, parse_elem(&n.coords[1], field)?],
            parent: n.parent,
            chart: Chart::parse(&n.chart)?,
            patch: n.patch,
        });
        mults.push(n.mult);
    }
    let tree = BasepointTree::new(points).map_err(|e| Error::Parse(e.to_string()))?;
    Ok(BaseLocus { tree, mults, field: field.clone() })
}

pub fn locus_to_json(locus: &BaseLocus) -> Vec<NodeJson> {
    locus
        .tree
        .points()
        .iter()
        .zip(&locus.mults)
        .map(|(p, &mult)| NodeJson {
            id: p.id,
            parent: p.parent,
            chart: p.chart.as_str().to_string(),
            coords: [p.coords[0].to_string(), p.coords[1].to_string()],
            mult,
            patch: p.patch,
        })
        .collect()
}

pub fn series_to_json(s: &LinearSeries, names: &[String]) -> SeriesJson {
    SeriesJson { degree: s.degree, basis: s.basis.iter().map(|b| format_poly(b, names)).collect() }
}

pub fn surface_to_json(s: &Surface) -> SurfaceJson {
    SurfaceJson {
        field: s.locus.field.minpoly_string(),
        h: s.lattice.h.0.clone(),
        k: s.lattice.k.0.clone(),
        sigma: s.lattice.sigma.clone(),
        basepoints: locus_to_json(&s.locus),
    }
}

pub fn classes_to_json(classes: impl IntoIterator<Item = DivClass>) -> Vec<Vec<i64>> {
    classes.into_iter().map(|c| c.0).collect()
}

/// Report document; `witnesses` runs parallel to the accepted families.
pub fn families_to_json(surface: &Surface, out: &FamilyOutcome, names: &[String], witnesses: Option<&[String]>) -> FamiliesJson {
    let accepted = out
        .accepted
        .iter()
        .enumerate()
        .map(|(i, r)| AcceptedJson {
            class: r.cls.0.clone(),
            name: r.cls.to_string(),
            degree: r.degree,
            dimension: r.dimension,
            genus: r.genus,
            series: r.series.as_ref().map(|s| series_to_json(s, names)),
            reachable: r.reachable,
            witness: witnesses.and_then(|w| w.get(i).cloned()),
        })
        .collect();
    let rejected = out
        .rejected
        .iter()
        .map(|r| RejectedJson {
            class: r.cls.0.clone(),
            name: r.cls.to_string(),
            reason: r.reason.as_str().to_string(),
            detail: r.detail.clone(),
            actual: r.actual.as_ref().map(|a| a.0.clone()),
            witness: r.witness.as_ref().map(|w| format_poly(w, names)),
        })
        .collect();
    FamiliesJson {
        surface: surface_to_json(surface),
        query: QueryJson { alpha: out.query.alpha, nu: out.query.nu, rho: out.query.rho, real: out.query.real_only },
        candidates: classes_to_json(out.candidates.iter().cloned()),
        accepted,
        rejected,
    }
}
