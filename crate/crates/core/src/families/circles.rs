//! Real classes, stereographic maps and the Euclidean absolute.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::RationalMap;
use crate::error::{Error, Result};
use crate::exactmath::{gcd_content, FieldDesc, FieldElem, MultiPoly, Q};
use crate::linser::{plane_common_zeros, PlanePoint, DEFAULT_SEED};
use crate::nslattice::DivClass;

/// Classes fixed by the basis permutation `sigma`.
pub fn real_filter(classes: &BTreeSet<DivClass>, sigma: &[usize]) -> BTreeSet<DivClass> {
    classes.iter().filter(|c| c.permuted(sigma) == **c).cloned().collect()
}

/// `(y0 : ... : yn) -> (y0^2 + D : 2 y0 y1 : ... : 2 y0 yn : -y0^2 + D)` with
/// `D = y1^2 + ... + yn^2`, onto the sphere `-X0^2 + X1^2 + ... + X(n+1)^2 = 0`.
pub fn inverse_stereographic(n: usize) -> Result<RationalMap> {
    if n == 0 {
        return Err(Error::InvalidInput("inverse stereographic projection needs n >= 1".into()));
    }
    let y = |i| MultiPoly::var(n + 1, i);
    let y0sq = y(0).pow(2);
    let mut delta = MultiPoly::zero(n + 1);
    for i in 1..=n {
        delta = &delta + &y(i).pow(2);
    }
    let mut comps = vec![&y0sq + &delta];
    for i in 1..=n {
        comps.push((&y(0) * &y(i)).scale(&FieldElem::int(2)));
    }
    comps.push(&delta - &y0sq);
    RationalMap::new(comps, FieldDesc::Rationals)
}

/// `outer` after `inner`, with the common factor of the components removed.
pub fn compose_maps(outer: &RationalMap, inner: &RationalMap) -> Result<RationalMap> {
    if outer.nvars() != inner.components.len() {
        return Err(Error::LengthMismatch(outer.nvars(), inner.components.len()));
    }
    let comps = outer
        .components
        .iter()
        .map(|f| f.substitute(&inner.components))
        .collect::<Result<Vec<_>>>()?;
    if comps.iter().all(MultiPoly::is_zero) {
        return Err(Error::InvalidInput("composition is the zero map".into()));
    }
    let g = gcd_content(&comps);
    let comps = comps.iter().map(|c| c.exact_div(&g)).collect::<Result<Vec<_>>>()?;
    let comps = primitive_tuple(comps);
    let field = match (&outer.field, &inner.field) {
        (FieldDesc::Quadratic(q), _) | (_, FieldDesc::Quadratic(q)) => FieldDesc::Quadratic(q.clone()),
        _ => FieldDesc::Rationals,
    };
    RationalMap::new(comps, field)
}

/// Divides a rational tuple by the positive rational content of all its
/// coefficients, so the result has coprime integer coefficients.
fn primitive_tuple(comps: Vec<MultiPoly>) -> Vec<MultiPoly> {
    let coeffs: Vec<&FieldElem> = comps.iter().flat_map(|c| c.terms().map(|(_, x)| x)).collect();
    if !coeffs.iter().all(|x| x.is_rational()) {
        return comps;
    }
    let mut lcm = BigInt::one();
    let mut g = BigInt::zero();
    for x in &coeffs {
        lcm = lcm.lcm(x.a0().denom());
    }
    for x in &coeffs {
        g = g.gcd(&(x.a0() * Q::from_integer(lcm.clone())).to_integer());
    }
    if g.is_zero() {
        return comps;
    }
    let s = FieldElem::rational(Q::new(lcm, g));
    comps.iter().map(|c| c.scale(&s)).collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Witness {
    Circle,
    NotCircle,
    Inconclusive,
}

impl Witness {
    pub fn as_str(self) -> &'static str {
        match self {
            Witness::Circle => "circle",
            Witness::NotCircle => "not-circle",
            Witness::Inconclusive => "inconclusive",
        }
    }
}

fn divides(d: &MultiPoly, f: &MultiPoly) -> bool {
    f.is_zero() || f.div_rem(d).map(|(_, r)| r.is_zero()).unwrap_or(false)
}

fn zeros_with_extension(forms: &[MultiPoly], field: &FieldDesc) -> Result<(Vec<PlanePoint>, FieldDesc)> {
    match plane_common_zeros(forms, field, DEFAULT_SEED) {
        Ok(pts) => Ok((pts, field.clone())),
        Err(Error::ExtensionRequest(qf)) if field.quad().is_none() => {
            let k = FieldDesc::quadratic(qf);
            Ok((plane_common_zeros(forms, &k, DEFAULT_SEED)?, k))
        }
        Err(e) => Err(e),
    }
}

fn projective(p: &PlanePoint) -> [FieldElem; 3] {
    let mut it = p.1.iter();
    let v: Vec<FieldElem> = (0..3).map(|i| if i == p.0 { FieldElem::one() } else { it.next().unwrap().clone() }).collect();
    [v[0].clone(), v[1].clone(), v[2].clone()]
}

/// Decides whether the image of the curve `member = 0` under `m` (into
/// `P^4`) is a circle, by counting the points of the curve outside the base
/// locus that map to the Euclidean absolute `x0 = 0 = x1^2 + ... + x4^2`.
/// Exactly two conjugate points make a circle.
pub fn absolute_witness(m: &RationalMap, member: &MultiPoly) -> Witness {
    if m.components.len() != 5 || m.nvars() != 3 || member.nvars() != 3 || member.is_constant() {
        return Witness::Inconclusive;
    }
    let mut square_sum = MultiPoly::zero(3);
    for c in &m.components[1..] {
        square_sum = &square_sum + &c.pow(2);
    }
    let eqs: Vec<MultiPoly> =
        [m.components[0].clone(), square_sum].into_iter().filter(|e| !divides(member, e)).collect();
    if eqs.is_empty() {
        return Witness::Inconclusive;
    }
    let mut forms = vec![member.clone()];
    forms.extend(eqs);
    let Ok((pts, _)) = zeros_with_extension(&forms, &m.field) else {
        return Witness::Inconclusive;
    };
    let outside: Vec<[FieldElem; 3]> = pts
        .iter()
        .map(projective)
        .filter(|x| !m.components.iter().all(|c| c.eval(x).is_zero()))
        .collect();
    match outside.as_slice() {
        [a, b] if a.iter().any(|x| !x.is_rational()) && a.iter().map(FieldElem::conjugate).eq(b.iter().cloned()) => {
            Witness::Circle
        }
        _ => Witness::NotCircle,
    }
}
