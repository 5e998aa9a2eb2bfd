use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::linalg::nullspace;
use super::local::{local_equations, MultRule};
use super::LinearSeries;
use crate::error::{Error, Result};
use crate::exactmath::{FieldElem, Monomial, MultiPoly, Q};
use crate::nslattice::{BasepointTree, ClassShape, DivClass};

/// Monomials of degree `d` in three variables, largest first.
pub(crate) fn monomials_desc(d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    for a in 0..=d {
        for b in 0..=d - a {
            out.push(Monomial(vec![a, b, d - a - b]));
        }
    }
    out.sort();
    out.reverse();
    out
}

/// Integer primitive form of a rational vector; others are left alone.
fn primitive(v: Vec<FieldElem>) -> Vec<FieldElem> {
    if !v.iter().all(FieldElem::is_rational) {
        return v;
    }
    let mut lcm = BigInt::one();
    for x in &v {
        lcm = lcm.lcm(x.a0().denom());
    }
    let mut g = BigInt::zero();
    for x in &v {
        g = g.gcd(&(x.a0() * Q::from_integer(lcm.clone())).to_integer());
    }
    if g.is_zero() {
        return v;
    }
    let s = Q::new(lcm, g);
    v.iter().map(|x| x.scale(&s)).collect()
}

fn check_rank(c: &DivClass, tree: &BasepointTree) -> Result<()> {
    if c.rank() != tree.len() + 1 {
        return Err(Error::LengthMismatch(c.rank(), tree.len() + 1));
    }
    Ok(())
}

/// Forms of degree `c0` with multiplicity at least `-c_i` at every `p_i`.
///
/// Conditions at an infinitely near point are imposed on the transform in its
/// chart after dividing out the prescribed multiplicity of the parent.
pub fn series_from_class(c: &DivClass, tree: &BasepointTree) -> Result<LinearSeries> {
    check_rank(c, tree)?;
    if c.shape() != Some(ClassShape::Planar) {
        return Err(Error::UnsupportedClass(format!("{c} needs c0 > 0 and ci <= 0")));
    }
    let field = tree.field();
    let d = c.c0() as u32;
    let monos = monomials_desc(d);
    let forms: Vec<MultiPoly> = monos.iter().map(|m| MultiPoly::monomial(3, m.clone(), FieldElem::one())).collect();
    let mults = c.multiplicities();
    let (locals, _) = local_equations(&forms, tree, MultRule::Virtual(&mults));
    let mut rows = Vec::new();
    for (i, &m) in mults.iter().enumerate() {
        for a in 0..m {
            for b in 0..m - a {
                let mono = Monomial(vec![a, b]);
                rows.push(locals[i].iter().map(|g| g.coeff(&mono)).collect::<Vec<_>>());
            }
        }
    }
    let basis = nullspace(rows, monos.len())
        .into_iter()
        .map(|v| {
            let v = primitive(v);
            MultiPoly::from_terms(3, monos.iter().zip(v).map(|(m, x)| (m.0.clone(), x)))
        })
        .collect();
    LinearSeries::new(d, basis, field)
}

/// Class `d e0 - sum m_i e_i` where `m_i` is the multiplicity of a general
/// member of `s` at the host point `p_i`, following each branch with the
/// series' own multiplicities.
pub fn actual_class(s: &LinearSeries, host: &BasepointTree, depth_cap: usize) -> Result<DivClass> {
    if s.is_empty() {
        return Err(Error::InvalidInput("actual class of an empty series".into()));
    }
    if let Some(p) = host.points().iter().find(|p| host.depth(p.id) > depth_cap) {
        return Err(Error::DepthCap(host.depth(p.id)));
    }
    let (_, mults) = local_equations(&s.basis, host, MultRule::Actual);
    let mut v = vec![s.degree as i64];
    v.extend(mults.iter().map(|&m| -(m as i64)));
    Ok(DivClass(v))
}

/// `sum coeffs_i basis_i`.
pub fn member_at(s: &LinearSeries, coeffs: &[FieldElem]) -> Result<MultiPoly> {
    if coeffs.len() != s.dim() {
        return Err(Error::LengthMismatch(coeffs.len(), s.dim()));
    }
    if coeffs.iter().all(FieldElem::is_zero) {
        return Err(Error::InvalidInput("all coefficients are zero".into()));
    }
    let mut out = MultiPoly::zero(3);
    for (c, b) in coeffs.iter().zip(&s.basis) {
        out = &out + &b.scale(c);
    }
    Ok(out)
}
