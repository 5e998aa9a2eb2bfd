//! Local equations of forms at basepoints and along blowup charts.

use crate::exactmath::{FieldElem, MultiPoly};
use crate::nslattice::{BasepointTree, Chart};

fn shift(var: usize, c: &FieldElem) -> MultiPoly {
    let v = MultiPoly::var(2, var);
    if c.is_zero() {
        v
    } else {
        &v + &MultiPoly::constant(2, c.clone())
    }
}

/// `g(x + c0, y + c1)`.
pub(crate) fn translate(g: &MultiPoly, coords: &[FieldElem; 2]) -> MultiPoly {
    if coords.iter().all(FieldElem::is_zero) {
        return g.clone();
    }
    g.substitute(&[shift(0, &coords[0]), shift(1, &coords[1])]).expect("two variables")
}

/// Affine equation of the form `f` on patch `x_patch = 1`, centered at `coords`.
pub(crate) fn root_local(f: &MultiPoly, patch: usize, coords: &[FieldElem; 2]) -> MultiPoly {
    translate(&f.dehomogenize(patch), coords)
}

/// Transform along a blowup chart, divided by the `m`-th power of the
/// exceptional equation. Terms that would need a negative power are dropped,
/// which is exact whenever `g` vanishes to order `m` at the origin.
pub(crate) fn blowup(g: &MultiPoly, chart: Chart, m: u32) -> MultiPoly {
    let x = MultiPoly::var(2, 0);
    let y = MultiPoly::var(2, 1);
    match chart {
        Chart::T => g.substitute(&[x.clone(), &x * &y]).expect("two variables").shift_down(0, m),
        Chart::S => g.substitute(&[&x * &y, y.clone()]).expect("two variables").shift_down(1, m),
        Chart::Root => g.clone(),
    }
}

/// How much of the exceptional divisor is removed when passing from a point
/// to its children.
pub(crate) enum MultRule<'a> {
    /// Prescribed multiplicities, indexed by `id - 1`.
    Virtual(&'a [u32]),
    /// Minimum order of the transformed forms at the point itself.
    Actual,
}

pub(crate) fn min_order(polys: &[MultiPoly]) -> u32 {
    polys.iter().filter_map(MultiPoly::order).min().unwrap_or(u32::MAX)
}

/// Local equations of every form at every point of `tree`, indexed by
/// `id - 1`, together with the multiplicity used at each point.
pub(crate) fn local_equations(forms: &[MultiPoly], tree: &BasepointTree, rule: MultRule<'_>) -> (Vec<Vec<MultiPoly>>, Vec<u32>) {
    let mut locals: Vec<Vec<MultiPoly>> = Vec::with_capacity(tree.len());
    let mut mults: Vec<u32> = Vec::with_capacity(tree.len());
    for p in tree.points() {
        let here: Vec<MultiPoly> = match p.parent {
            None => forms.iter().map(|f| root_local(f, p.patch, &p.coords)).collect(),
            Some(par) => {
                let m = mults[par - 1];
                locals[par - 1].iter().map(|g| translate(&blowup(g, p.chart, m), &p.coords)).collect()
            }
        };
        let m = match rule {
            MultRule::Virtual(ms) => ms[p.id - 1],
            MultRule::Actual => {
                let o = min_order(&here);
                if o == u32::MAX {
                    0
                } else {
                    o
                }
            }
        };
        mults.push(m);
        locals.push(here);
    }
    (locals, mults)
}
