//! Univariate polynomials (dense, lowest coefficient first) and exact root
//! finding over the rationals or one quadratic extension.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::field::{FieldDesc, FieldElem, QuadField, Q};
use super::poly::MultiPoly;
use crate::error::{Error, Result};

pub type UPoly = Vec<FieldElem>;

pub fn trim(mut p: UPoly) -> UPoly {
    while p.last().is_some_and(FieldElem::is_zero) {
        p.pop();
    }
    p
}

pub fn degree(p: &[FieldElem]) -> Option<usize> {
    p.iter().rposition(|c| !c.is_zero())
}

pub fn eval(p: &[FieldElem], x: &FieldElem) -> FieldElem {
    let mut acc = FieldElem::zero();
    for c in p.iter().rev() {
        acc = &(&acc * x) + c;
    }
    acc
}

pub fn derivative(p: &[FieldElem]) -> UPoly {
    trim(p.iter().enumerate().skip(1).map(|(i, c)| c.scale(&Q::from_integer(BigInt::from(i)))).collect())
}

pub fn mul(a: &[FieldElem], b: &[FieldElem]) -> UPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![FieldElem::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += &(x * y);
        }
    }
    trim(out)
}

pub fn div_rem(a: &[FieldElem], b: &[FieldElem]) -> Result<(UPoly, UPoly)> {
    let b = trim(b.to_vec());
    let db = degree(&b).ok_or(Error::DivisionByZero)?;
    let inv = b[db].inv()?;
    let mut r = trim(a.to_vec());
    if r.len() <= db {
        return Ok((Vec::new(), r));
    }
    let mut quot = vec![FieldElem::zero(); r.len() - db];
    while let Some(dr) = degree(&r) {
        if dr < db {
            break;
        }
        let c = &r[dr] * &inv;
        for (k, bc) in b.iter().enumerate() {
            r[dr - db + k] -= &(&c * bc);
        }
        r[dr] = FieldElem::zero();
        quot[dr - db] = c;
        r = trim(r);
    }
    Ok((trim(quot), r))
}

pub fn monic(p: &[FieldElem]) -> UPoly {
    let p = trim(p.to_vec());
    match p.last() {
        None => p,
        Some(lc) => {
            let inv = lc.inv().expect("nonzero");
            p.iter().map(|c| c * &inv).collect()
        }
    }
}

pub fn gcd(a: &[FieldElem], b: &[FieldElem]) -> UPoly {
    let mut a = trim(a.to_vec());
    let mut b = trim(b.to_vec());
    while !b.is_empty() {
        let (_, r) = div_rem(&a, &b).expect("nonzero divisor");
        a = b;
        b = r;
    }
    monic(&a)
}

fn conjugate(p: &[FieldElem]) -> UPoly {
    p.iter().map(FieldElem::conjugate).collect()
}

fn to_integer_primitive(p: &[FieldElem]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for c in p {
        lcm = lcm.lcm(c.a0().denom());
    }
    let ints: Vec<BigInt> = p.iter().map(|c| (c.a0() * Q::from_integer(lcm.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    ints.into_iter().map(|x| x / &g).collect()
}

fn positive_divisors(n: &BigInt) -> Vec<BigInt> {
    let mut m = n.abs();
    let mut factors: Vec<(BigInt, u32)> = Vec::new();
    let mut p = BigInt::from(2);
    while &p * &p <= m && p < BigInt::from(10_000_000u64) {
        let mut e = 0;
        while (&m % &p).is_zero() {
            m /= &p;
            e += 1;
        }
        if e > 0 {
            factors.push((p.clone(), e));
        }
        p += 1;
    }
    if m > BigInt::one() {
        // Treated as prime past the trial bound; a miss surfaces later as an
        // unsupported-field error rather than a wrong root.
        factors.push((m, 1));
    }
    let mut divs = vec![BigInt::one()];
    for (p, e) in factors {
        let mut next = Vec::new();
        for d in &divs {
            let mut pk = BigInt::one();
            for _ in 0..=e {
                next.push(d * &pk);
                pk *= &p;
            }
        }
        divs = next;
    }
    divs.sort();
    divs
}

fn int_poly(p: &[BigInt]) -> UPoly {
    p.iter().map(|c| FieldElem::rational(Q::from_integer(c.clone()))).collect()
}

/// Rational roots of a squarefree rational polynomial, and the cofactor.
fn rational_roots(p: &[FieldElem]) -> (Vec<Q>, UPoly) {
    let mut rest = trim(p.to_vec());
    let mut roots = Vec::new();
    if rest.first().is_some_and(FieldElem::is_zero) {
        roots.push(Q::zero());
        rest.remove(0);
    }
    if degree(&rest).unwrap_or(0) == 0 {
        return (roots, rest);
    }
    let ints = to_integer_primitive(&rest);
    let lead = ints.last().unwrap().clone();
    let constant = ints[0].clone();
    let dl = positive_divisors(&lead);
    let dc = positive_divisors(&constant);
    let mut candidates: Vec<Q> = Vec::new();
    for u in &dc {
        for v in &dl {
            let r = Q::new(u.clone(), v.clone());
            candidates.push(r.clone());
            candidates.push(-r);
        }
    }
    candidates.sort();
    candidates.dedup();
    for r in candidates {
        if degree(&rest).unwrap_or(0) == 0 {
            break;
        }
        let x = FieldElem::rational(r.clone());
        if eval(&rest, &x).is_zero() {
            let lin = vec![-&x, FieldElem::one()];
            rest = div_rem(&rest, &lin).unwrap().0;
            roots.push(r);
        }
    }
    (roots, rest)
}

/// Cauchy bound on root moduli, rounded up.
fn root_bound(ints: &[BigInt]) -> BigInt {
    let lead = ints.last().unwrap().abs();
    let m = ints[..ints.len() - 1].iter().map(|c| c.abs()).max().unwrap_or_else(BigInt::zero);
    BigInt::one() + m.div_ceil(&lead)
}

/// Quadratic factors over the rationals of a squarefree rational polynomial
/// without rational roots; returns (monic quadratics, leftover).
fn quadratic_factors(p: &[FieldElem]) -> (Vec<UPoly>, UPoly) {
    let mut rest = trim(p.to_vec());
    let mut found = Vec::new();
    'outer: while degree(&rest).unwrap_or(0) > 2 {
        let ints = to_integer_primitive(&rest);
        let lead = ints.last().unwrap().clone();
        let constant = ints[0].clone();
        let bound = root_bound(&ints);
        for qd in positive_divisors(&lead) {
            let s_max = (BigInt::from(2) * &qd * &bound).to_i64().unwrap_or(i64::MAX).min(1 << 20);
            let n_max = &qd * &bound * &bound;
            for nd in positive_divisors(&constant) {
                if nd > n_max {
                    continue;
                }
                for n in [nd.clone(), -nd.clone()] {
                    for s in -s_max..=s_max {
                        let cand = int_poly(&[n.clone(), BigInt::from(-s), qd.clone()]);
                        let (quot, rem) = div_rem(&rest, &cand).unwrap();
                        if rem.is_empty() {
                            found.push(monic(&cand));
                            rest = quot;
                            continue 'outer;
                        }
                    }
                }
            }
        }
        break;
    }
    if degree(&rest) == Some(2) {
        found.push(monic(&rest));
        rest = vec![FieldElem::one()];
    }
    (found, rest)
}

/// Distinct roots in `field` of a squarefree polynomial with rational
/// coefficients.
fn roots_of_rational_squarefree(p: &[FieldElem], field: &FieldDesc) -> Result<Vec<FieldElem>> {
    let (rats, rest) = rational_roots(p);
    let mut roots: Vec<FieldElem> = rats.into_iter().map(FieldElem::rational).collect();
    if degree(&rest).unwrap_or(0) == 0 {
        return Ok(roots);
    }
    let (quads, leftover) = quadratic_factors(&rest);
    if degree(&leftover).unwrap_or(0) > 0 {
        return Err(Error::UnsupportedField(format!(
            "irreducible factor of degree {} over the rationals",
            degree(&leftover).unwrap()
        )));
    }
    let mut request: Option<QuadField> = None;
    for quad in quads {
        // x^2 + s x + n
        let (n, s) = (quad[0].a0().clone(), quad[1].a0().clone());
        let disc = &s * &s - Q::from_integer(4.into()) * &n;
        match field {
            FieldDesc::Rationals => {
                let qf = QuadField::for_discriminant(&disc)?;
                match &request {
                    None => request = Some(qf),
                    Some(prev) if prev.contains_sqrt_of(&disc) => {}
                    Some(_) => {
                        return Err(Error::UnsupportedField(
                            "roots need two different quadratic extensions".into(),
                        ))
                    }
                }
            }
            FieldDesc::Quadratic(qf) => {
                let sq = field.sqrt_of_rational(&disc).ok_or_else(|| {
                    Error::UnsupportedField(format!(
                        "quadratic factor with discriminant {disc} does not split over Q[t]/({qf})"
                    ))
                })?;
                let half = Q::new(1.into(), 2.into());
                let minus_s = FieldElem::rational(-s);
                roots.push((&minus_s + &sq).scale(&half));
                roots.push((&minus_s - &sq).scale(&half));
            }
        }
    }
    if let Some(qf) = request {
        return Err(Error::ExtensionRequest(qf));
    }
    Ok(roots)
}

fn multiplicity(p: &[FieldElem], r: &FieldElem) -> u32 {
    let lin = vec![-r, FieldElem::one()];
    let mut cur = trim(p.to_vec());
    let mut m = 0;
    loop {
        let (quot, rem) = div_rem(&cur, &lin).unwrap();
        if !rem.is_empty() {
            return m;
        }
        m += 1;
        cur = quot;
    }
}

/// Roots lying in `field`, with multiplicities, sorted.
///
/// Over the rationals an irreducible quadratic factor produces
/// [`Error::ExtensionRequest`]; factors needing anything beyond one quadratic
/// extension produce [`Error::UnsupportedField`].
pub fn roots_in_field(p: &[FieldElem], field: &FieldDesc) -> Result<Vec<(FieldElem, u32)>> {
    let p = trim(p.to_vec());
    if p.is_empty() {
        return Err(Error::InvalidInput("roots of the zero polynomial".into()));
    }
    if p.iter().any(|c| !field.admits(c)) {
        return Err(Error::UnsupportedField("coefficients outside the active field".into()));
    }
    if degree(&p) == Some(0) {
        return Ok(Vec::new());
    }
    let g = gcd(&p, &derivative(&p));
    let sqfree = monic(&div_rem(&p, &g)?.0);
    let candidates = if sqfree.iter().all(FieldElem::is_rational) {
        roots_of_rational_squarefree(&sqfree, field)?
    } else {
        let norm = mul(&sqfree, &conjugate(&sqfree));
        let norm_sqfree = monic(&div_rem(&norm, &gcd(&norm, &derivative(&norm)))?.0);
        roots_of_rational_squarefree(&norm_sqfree, field)?
            .into_iter()
            .filter(|r| eval(&sqfree, r).is_zero())
            .collect()
    };
    let found: usize = candidates.len();
    if found < degree(&sqfree).unwrap() {
        return Err(Error::UnsupportedField(
            "polynomial has roots outside the active field".into(),
        ));
    }
    let mut out: Vec<(FieldElem, u32)> = candidates.into_iter().map(|r| {
        let m = multiplicity(&p, &r);
        (r, m)
    }).collect();
    out.sort();
    Ok(out)
}

/// [`roots_in_field`] for a [`MultiPoly`] involving at most one variable.
pub fn univariate_roots(p: &MultiPoly, field: &FieldDesc) -> Result<Vec<(FieldElem, u32)>> {
    let var = (0..p.nvars()).find(|&v| p.uses_var(v)).unwrap_or(0);
    let coeffs = if p.nvars() == 0 {
        vec![p.constant_value().unwrap_or_else(FieldElem::zero)]
    } else {
        p.to_univariate(var)
            .ok_or_else(|| Error::InvalidInput("polynomial is not univariate".into()))?
    };
    roots_in_field(&coeffs, field)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::field::q;

    fn ints(cs: &[i64]) -> UPoly {
        cs.iter().map(|&c| FieldElem::int(c)).collect()
    }

    fn eta() -> FieldDesc {
        FieldDesc::quadratic(QuadField::new(q(-1), q(1)).unwrap())
    }

    #[test]
    fn cubic_with_three_rational_roots() {
        // x^3 - x
        let r = roots_in_field(&ints(&[0, -1, 0, 1]), &FieldDesc::Rationals).unwrap();
        let vals: Vec<_> = r.iter().map(|(x, m)| (x.to_string(), *m)).collect();
        assert_eq!(vals, vec![("-1".into(), 1), ("0".into(), 1), ("1".into(), 1)]);
    }

    #[test]
    fn eta_minpoly_requests_extension() {
        let p = ints(&[1, -1, 1]);
        match roots_in_field(&p, &FieldDesc::Rationals) {
            Err(Error::ExtensionRequest(qf)) => assert_eq!(qf.to_string(), "t^2-t+1"),
            other => panic!("{other:?}"),
        }
        let k = eta();
        let r = roots_in_field(&p, &k).unwrap();
        let t = k.generator().unwrap();
        let mut expect = vec![(t.clone(), 1), (&FieldElem::one() - &t, 1)];
        expect.sort();
        assert_eq!(r, expect);
    }

    #[test]
    fn double_root() {
        let r = roots_in_field(&ints(&[4, -4, 1]), &FieldDesc::Rationals).unwrap();
        assert_eq!(r, vec![(FieldElem::int(2), 2)]);
    }

    #[test]
    fn quartic_splits_into_two_quadratics_over_same_field() {
        // x^4 + x^2 + 1 = (x^2 + x + 1)(x^2 - x + 1)
        let p = ints(&[1, 0, 1, 0, 1]);
        assert!(matches!(roots_in_field(&p, &FieldDesc::Rationals), Err(Error::ExtensionRequest(_))));
        let r = roots_in_field(&p, &eta()).unwrap();
        assert_eq!(r.len(), 4);
        for (x, _) in r {
            assert!(eval(&p, &x).is_zero());
        }
    }

    #[test]
    fn unsupported_cubic_and_incompatible_quadratics() {
        assert!(matches!(
            roots_in_field(&ints(&[-2, 0, 0, 1]), &FieldDesc::Rationals),
            Err(Error::UnsupportedField(_))
        ));
        // (x^2 + 1)(x^2 - 2)
        assert!(matches!(
            roots_in_field(&ints(&[-2, 0, -1, 0, 1]), &FieldDesc::Rationals),
            Err(Error::UnsupportedField(_))
        ));
        assert!(matches!(
            roots_in_field(&ints(&[1, 0, 1]), &eta()),
            Err(Error::UnsupportedField(_))
        ));
    }

    #[test]
    fn roots_of_polynomial_with_extension_coefficients() {
        let k = eta();
        let t = k.generator().unwrap();
        // (x - t)(x - 3)
        let p = mul(&[-&t, FieldElem::one()], &ints(&[-3, 1]));
        let r = roots_in_field(&p, &k).unwrap();
        assert_eq!(r.len(), 2);
        assert!(r.iter().any(|(x, _)| *x == t));
    }

    #[test]
    fn rational_roots_with_denominators() {
        // (2x - 1)(3x + 2)
        let p = ints(&[-2, 1, 6]);
        let r = roots_in_field(&p, &FieldDesc::Rationals).unwrap();
        let vals: Vec<String> = r.iter().map(|(x, _)| x.to_string()).collect();
        assert_eq!(vals, vec!["-2/3", "1/2"]);
    }
}
