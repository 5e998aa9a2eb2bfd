//! Base locus of a linear series: common zeros in the plane by resultants,
//! then infinitely near points by repeated blowups.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::local::{blowup, min_order, root_local, translate};
use super::{LinearSeries, DEFAULT_SEED};
use crate::error::{Error, Result};
use crate::exactmath::{gcd, gcd_content, resultant, univariate_roots, FieldDesc, FieldElem, MultiPoly};
use crate::nslattice::{Basepoint, BasepointTree, Chart};

/// Basepoints with their multiplicities (`mults[id - 1]`) and the field the
/// coordinates live in.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BaseLocus {
    pub tree: BasepointTree,
    pub mults: Vec<u32>,
    pub field: FieldDesc,
}

impl BaseLocus {
    pub fn empty() -> Self {
        BaseLocus { tree: BasepointTree::empty(), mults: Vec::new(), field: FieldDesc::Rationals }
    }
}

/// A point of the plane: patch `x_patch = 1` and the two other coordinates.
pub type PlanePoint = (usize, [FieldElem; 2]);

fn random_combination(polys: &[MultiPoly], rng: &mut ChaCha8Rng) -> MultiPoly {
    loop {
        let mut out = MultiPoly::zero(polys[0].nvars());
        for p in polys {
            let c: i64 = rng.gen_range(-9..=9);
            out = &out + &p.scale(&FieldElem::int(c));
        }
        if !out.is_zero() {
            return out;
        }
    }
}

fn gcd_all(polys: &[MultiPoly]) -> MultiPoly {
    polys.iter().fold(MultiPoly::zero(polys[0].nvars()), |g, p| gcd(&g, p))
}

/// Values of `x` over which the affine curves `polys` (in `x, y`) may meet.
fn x_candidates(polys: &[MultiPoly], rng: &mut ChaCha8Rng) -> Result<MultiPoly> {
    if polys.len() == 2 {
        let r = resultant(&polys[0], &polys[1], 1);
        if r.is_zero() {
            return Err(Error::FixedComponent("the curves share a component".into()));
        }
        return Ok(r);
    }
    for _ in 0..8 {
        let g: Vec<MultiPoly> = (0..3).map(|_| random_combination(polys, rng)).collect();
        let r12 = resultant(&g[0], &g[1], 1);
        let r13 = resultant(&g[0], &g[2], 1);
        if !r12.is_zero() && !r13.is_zero() {
            return Ok(gcd(&r12, &r13));
        }
    }
    Err(Error::FixedComponent("random combinations keep sharing a component".into()))
}

/// Common zeros in the plane of homogeneous forms in three variables, in
/// the order: patch `x0 = 1`, then the line `x0 = 0`, then `(0:0:1)`.
pub fn plane_common_zeros(forms: &[MultiPoly], field: &FieldDesc, seed: u64) -> Result<Vec<PlanePoint>> {
    if forms.is_empty() || forms.iter().all(MultiPoly::is_zero) {
        return Err(Error::FixedComponent("no nonzero forms".into()));
    }
    let forms: Vec<MultiPoly> = forms.iter().filter(|f| !f.is_zero()).cloned().collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();

    if forms.len() == 1 {
        if forms[0].is_constant() {
            return Ok(out);
        }
        return Err(Error::FixedComponent(format!("the zero set of {} is a curve", forms[0])));
    }

    let affine: Vec<MultiPoly> = forms.iter().map(|f| f.dehomogenize(0)).collect();
    let cand = x_candidates(&affine, &mut rng)?;
    if !cand.is_constant() {
        for (a, _) in univariate_roots(&cand, field)? {
            let fibers: Vec<MultiPoly> = affine.iter().map(|f| f.eval_var(0, &a)).collect();
            let g = gcd_all(&fibers);
            if g.is_zero() {
                return Err(Error::FixedComponent("a vertical line is a common component".into()));
            }
            if g.is_constant() {
                continue;
            }
            for (b, _) in univariate_roots(&g, field)? {
                out.push((0, [a.clone(), b]));
            }
        }
    }

    // (0 : 1 : y)
    let on_line: Vec<MultiPoly> = forms.iter().map(|f| f.eval_var(0, &FieldElem::zero()).eval_var(1, &FieldElem::one())).collect();
    let g = gcd_all(&on_line);
    if g.is_zero() {
        return Err(Error::FixedComponent("x0 is a common component".into()));
    }
    if !g.is_constant() {
        for (b, _) in univariate_roots(&g, field)? {
            out.push((1, [FieldElem::zero(), b]));
        }
    }

    let corner = [FieldElem::zero(), FieldElem::zero(), FieldElem::one()];
    if forms.iter().all(|f| f.eval(&corner).is_zero()) {
        out.push((2, [FieldElem::zero(), FieldElem::zero()]));
    }
    Ok(out)
}

/// Sorted by patch, then `(y, x)`, with each point directly followed by its
/// conjugate.
fn order_roots(mut pts: Vec<PlanePoint>) -> Vec<PlanePoint> {
    pts.sort_by(|a, b| (a.0, &a.1[1], &a.1[0]).cmp(&(b.0, &b.1[1], &b.1[0])));
    let mut out: Vec<PlanePoint> = Vec::with_capacity(pts.len());
    let mut used = vec![false; pts.len()];
    for i in 0..pts.len() {
        if used[i] {
            continue;
        }
        used[i] = true;
        out.push(pts[i].clone());
        let conj = [pts[i].1[0].conjugate(), pts[i].1[1].conjugate()];
        if let Some(j) = (0..pts.len()).find(|&j| !used[j] && pts[j].0 == pts[i].0 && pts[j].1 == conj) {
            used[j] = true;
            out.push(pts[j].clone());
        }
    }
    out
}

struct Node {
    parent: Option<usize>,
    chart: Chart,
    coords: [FieldElem; 2],
    patch: usize,
    depth: usize,
    mult: u32,
    locals: Vec<MultiPoly>,
}

fn analyze_in(s: &LinearSeries, field: &FieldDesc, depth_cap: usize, seed: u64) -> Result<BaseLocus> {
    let roots = order_roots(plane_common_zeros(&s.basis, field, seed)?);
    let mut nodes: Vec<Node> = roots
        .into_iter()
        .map(|(patch, coords)| {
            let locals: Vec<MultiPoly> = s.basis.iter().map(|f| root_local(f, patch, &coords)).collect();
            Node { parent: None, chart: Chart::Root, mult: min_order(&locals), coords, patch, depth: 0, locals }
        })
        .collect();

    let mut i = 0;
    while i < nodes.len() {
        let m = nodes[i].mult;
        let mut children = Vec::new();

        let t: Vec<MultiPoly> = nodes[i].locals.iter().map(|g| blowup(g, Chart::T, m)).collect();
        let on_e: Vec<MultiPoly> = t.iter().map(|h| h.eval_var(0, &FieldElem::zero())).collect();
        let g = gcd_all(&on_e);
        if !g.is_constant() {
            for (c, _) in univariate_roots(&g, field)? {
                let coords = [FieldElem::zero(), c];
                let locals: Vec<MultiPoly> = t.iter().map(|h| translate(h, &coords)).collect();
                children.push((Chart::T, coords, locals));
            }
        }
        let sch: Vec<MultiPoly> = nodes[i].locals.iter().map(|g| blowup(g, Chart::S, m)).collect();
        if min_order(&sch) >= 1 {
            children.push((Chart::S, [FieldElem::zero(), FieldElem::zero()], sch));
        }

        for (chart, coords, locals) in children {
            let depth = nodes[i].depth + 1;
            if depth > depth_cap {
                return Err(Error::DepthCap(depth_cap));
            }
            nodes.push(Node {
                parent: Some(i),
                chart,
                coords,
                patch: nodes[i].patch,
                depth,
                mult: min_order(&locals),
                locals,
            });
        }
        i += 1;
    }

    let points = nodes
        .iter()
        .enumerate()
        .map(|(k, n)| Basepoint { id: k + 1, coords: n.coords.clone(), parent: n.parent.map(|p| p + 1), chart: n.chart, patch: n.patch })
        .collect();
    Ok(BaseLocus { tree: BasepointTree::new(points)?, mults: nodes.iter().map(|n| n.mult).collect(), field: field.clone() })
}

/// [`basepoint_analysis_seeded`] with the default seed.
pub fn basepoint_analysis(s: &LinearSeries, depth_cap: usize) -> Result<BaseLocus> {
    basepoint_analysis_seeded(s, depth_cap, DEFAULT_SEED)
}

/// All basepoints of `s`, including infinitely near ones up to `depth_cap`
/// blowups deep. Starts over the series' field and moves to a quadratic
/// extension when a coordinate needs one.
pub fn basepoint_analysis_seeded(s: &LinearSeries, depth_cap: usize, seed: u64) -> Result<BaseLocus> {
    if s.is_empty() {
        return Err(Error::InvalidInput("basepoint analysis of an empty series".into()));
    }
    let g = gcd_content(&s.basis);
    if !g.is_constant() {
        return Err(Error::FixedComponent(format!("the series has fixed component {g}")));
    }
    match analyze_in(s, &s.field, depth_cap, seed) {
        Err(Error::ExtensionRequest(qf)) if s.field.quad().is_none() => {
            analyze_in(s, &FieldDesc::quadratic(qf), depth_cap, seed)
        }
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::text::{default_names, parse_poly};
    use crate::exactmath::{qf, QuadField};

    fn p(s: &str) -> MultiPoly {
        parse_poly(s, &default_names(3), &FieldDesc::Rationals).unwrap()
    }

    fn series(forms: &[&str]) -> LinearSeries {
        let basis: Vec<MultiPoly> = forms.iter().map(|s| p(s)).collect();
        let d = basis[0].total_degree().unwrap();
        LinearSeries::new(d, basis, FieldDesc::Rationals).unwrap()
    }

    #[test]
    fn full_net_has_no_basepoints() {
        let b = basepoint_analysis(&series(&["x0", "x1", "x2"]), 8).unwrap();
        assert!(b.tree.is_empty());
    }

    #[test]
    fn conics_through_four_points() {
        // (1:0:0), (0:1:0), (0:0:1), (1:1:1)
        let b = basepoint_analysis(&series(&["x0*x1-x1*x2", "x0*x2-x1*x2"]), 8).unwrap();
        assert_eq!(b.mults, vec![1, 1, 1, 1]);
        let pts: Vec<_> = b.tree.points().iter().map(|q| q.projective().unwrap()).collect();
        let e = |a, b, c| [FieldElem::int(a), FieldElem::int(b), FieldElem::int(c)];
        assert_eq!(pts, vec![e(1, 0, 0), e(1, 1, 1), e(0, 1, 0), e(0, 0, 1)]);
    }

    #[test]
    fn tangency_gives_infinitely_near_point() {
        // conics tangent to y = 0 at the origin of x0 = 1
        let b = basepoint_analysis(&series(&["x2*x0", "x2^2-x1^2", "x1*x2"]), 8).unwrap();
        let root = b.tree.points().iter().find(|q| q.is_root() && q.coords == [FieldElem::zero(), FieldElem::zero()]).unwrap();
        let kids: Vec<_> = b.tree.children(root.id).collect();
        assert_eq!(kids.len(), 1);
        assert_eq!(kids[0].chart, Chart::T);
        assert_eq!(kids[0].coords, [FieldElem::zero(), FieldElem::zero()]);
    }

    #[test]
    fn vertical_direction_uses_chart_s() {
        let b = basepoint_analysis(&series(&["x1*x0", "x1^2-x2^2", "x1*x2"]), 8).unwrap();
        assert!(b.tree.points().iter().any(|q| q.chart == Chart::S));
    }

    #[test]
    fn conjugate_points_request_an_extension() {
        // x2 = 0 meets x1^2 + x1 x0 + x0^2 = 0 at roots of t^2 + t + 1; the
        // third point is (0:0:1)
        let b = basepoint_analysis(&series(&["x2*x0", "x2*x1", "x1^2+x0*x1+x0^2"]), 8).unwrap();
        assert_eq!(b.field, FieldDesc::quadratic(QuadField::new(qf(-1, 1), qf(1, 1)).unwrap()));
        assert_eq!(b.tree.len(), 3);
        assert_eq!(b.tree.conj(1), 2);
        assert!(b.tree.is_real(3));
        for pt in b.tree.points() {
            let x = pt.projective().unwrap();
            for f in &series(&["x2*x0", "x2*x1", "x1^2+x0*x1+x0^2"]).basis {
                assert!(f.eval(&x).is_zero());
            }
        }
    }

    #[test]
    fn fixed_component_and_depth_cap() {
        assert!(matches!(
            basepoint_analysis(&series(&["x0*x1", "x0*x2"]), 8),
            Err(Error::FixedComponent(_))
        ));
        // y = x^5 osculates to high order: a chain of infinitely near points
        let s = series(&["x2*x0^4-x1^5", "x1^5", "x0^3*x2^2"]);
        assert!(matches!(basepoint_analysis(&s, 2), Err(Error::DepthCap(2))));
        assert!(basepoint_analysis(&s, 8).is_ok());
    }
}
