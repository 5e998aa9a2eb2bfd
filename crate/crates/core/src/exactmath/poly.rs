//! Sparse multivariate polynomials over [`FieldElem`].

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::field::{FieldElem, Q};
use crate::error::{Error, Result};

/// Exponent vector ordered graded-lexicographically with `x0 > x1 > ...`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    fn div(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial in `nvars` variables; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, FieldElem>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, FieldElem::one())
    }

    pub fn constant(nvars: usize, c: FieldElem) -> Self {
        Self::monomial(nvars, Monomial::one(nvars), c)
    }

    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index {i} out of range for {nvars} variables");
        Self::monomial(nvars, Monomial::var(nvars, i), FieldElem::one())
    }

    pub fn monomial(nvars: usize, m: Monomial, c: FieldElem) -> Self {
        assert_eq!(m.0.len(), nvars);
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Vec<u32>, FieldElem)>>(nvars: usize, terms: I) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in terms {
            p.add_term(Monomial(e), &c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &FieldElem)> {
        self.terms.iter()
    }

    pub fn nterms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> FieldElem {
        self.terms.get(m).cloned().unwrap_or_else(FieldElem::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: &FieldElem) {
        assert_eq!(m.0.len(), self.nvars, "exponent length must equal nvars");
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(|m| m.degree() == 0)
    }

    /// Value of a constant polynomial (zero for the zero polynomial).
    pub fn constant_value(&self) -> Option<FieldElem> {
        if !self.is_constant() {
            return None;
        }
        Some(self.coeff(&Monomial::one(self.nvars)))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// Lowest total degree of a term: the order of vanishing at the origin.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).min()
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|m| m.0[var]).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(Monomial::degree);
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    pub fn uses_var(&self, var: usize) -> bool {
        self.terms.keys().any(|m| m.0[var] > 0)
    }

    /// Leading term in graded-lex order.
    pub fn leading_term(&self) -> Option<(&Monomial, &FieldElem)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> FieldElem {
        self.leading_term().map(|(_, c)| c.clone()).unwrap_or_else(FieldElem::zero)
    }

    pub fn scale(&self, c: &FieldElem) -> Self {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn map_coeffs<F: Fn(&FieldElem) -> FieldElem>(&self, f: F) -> Self {
        let mut p = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            p.add_term(m.clone(), &f(c));
        }
        p
    }

    pub fn conjugate(&self) -> Self {
        self.map_coeffs(FieldElem::conjugate)
    }

    pub fn has_rational_coeffs(&self) -> bool {
        self.terms.values().all(FieldElem::is_rational)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one(self.nvars);
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                out = &out * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        out
    }

    fn mul_term(&self, m: &Monomial, c: &FieldElem) -> Self {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(k, v)| (k.mul(m), v * c)).collect(),
        }
    }

    /// Division by a single divisor in graded-lex order: `self = quot * d + rem`.
    pub fn div_rem(&self, d: &MultiPoly) -> Result<(MultiPoly, MultiPoly)> {
        assert_eq!(self.nvars, d.nvars);
        let (dm, dc) = d.leading_term().ok_or(Error::DivisionByZero)?;
        let dm = dm.clone();
        let dinv = dc.inv()?;
        let mut quot = Self::zero(self.nvars);
        let mut rem = Self::zero(self.nvars);
        let mut p = self.clone();
        while let Some((m, c)) = p.leading_term() {
            if dm.divides(m) {
                let qm = m.div(&dm);
                let qc = c * &dinv;
                p = &p - &d.mul_term(&qm, &qc);
                quot.add_term(qm, &qc);
            } else {
                let (m, c) = (m.clone(), c.clone());
                p.terms.remove(&m);
                rem.add_term(m, &c);
            }
        }
        Ok((quot, rem))
    }

    /// `self / d`, failing unless `d` divides `self`.
    pub fn exact_div(&self, d: &MultiPoly) -> Result<MultiPoly> {
        let (quot, rem) = self.div_rem(d)?;
        if rem.is_zero() {
            Ok(quot)
        } else {
            Err(Error::InexactDivision)
        }
    }

    pub fn partial_derivative(&self, var: usize) -> Self {
        assert!(var < self.nvars);
        let mut p = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[var];
            if e == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2.0[var] -= 1;
            p.add_term(m2, &c.scale(&Q::from_integer(BigInt::from(e))));
        }
        p
    }

    /// Full composition `p(assignment[0], ..., assignment[n-1])`.
    pub fn substitute(&self, assignment: &[MultiPoly]) -> Result<Self> {
        if assignment.len() != self.nvars {
            return Err(Error::LengthMismatch(assignment.len(), self.nvars));
        }
        let target = assignment.first().map(|a| a.nvars).unwrap_or(0);
        if assignment.iter().any(|a| a.nvars != target) {
            return Err(Error::InvalidInput("substitution polynomials differ in nvars".into()));
        }
        let mut powers: Vec<Vec<MultiPoly>> = assignment.iter().map(|a| vec![MultiPoly::one(target), a.clone()]).collect();
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut t = Self::constant(target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let next = &powers[i][powers[i].len() - 1] * &assignment[i];
                    powers[i].push(next);
                }
                t = &t * &powers[i][e as usize];
            }
            out = &out + &t;
        }
        Ok(out)
    }

    pub fn eval(&self, point: &[FieldElem]) -> FieldElem {
        assert_eq!(point.len(), self.nvars);
        let mut acc = FieldElem::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                if e > 0 {
                    t = &t * &x.pow(e);
                }
            }
            acc += &t;
        }
        acc
    }

    /// Sets `var` to `value`; the variable remains but no longer occurs.
    pub fn eval_var(&self, var: usize, value: &FieldElem) -> Self {
        let mut p = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.0[var];
            let mut m2 = m.clone();
            m2.0[var] = 0;
            p.add_term(m2, &(c * &value.pow(e)));
        }
        p
    }

    /// Coefficients with respect to `var`, lowest power first; `var` does not
    /// occur in them.
    pub fn coefficients_in(&self, var: usize) -> Vec<MultiPoly> {
        let d = self.degree_in(var).unwrap_or(0) as usize;
        let mut out = vec![Self::zero(self.nvars); if self.is_zero() { 0 } else { d + 1 }];
        for (m, c) in &self.terms {
            let e = m.0[var] as usize;
            let mut m2 = m.clone();
            m2.0[var] = 0;
            out[e].add_term(m2, c);
        }
        out
    }

    pub fn from_coefficients_in(nvars: usize, var: usize, coeffs: &[MultiPoly]) -> Self {
        let mut out = Self::zero(nvars);
        for (e, c) in coeffs.iter().enumerate() {
            for (m, v) in &c.terms {
                let mut m2 = m.clone();
                m2.0[var] += e as u32;
                out.add_term(m2, v);
            }
        }
        out
    }

    /// Coefficient list (lowest first) of a polynomial involving only `var`.
    pub fn to_univariate(&self, var: usize) -> Option<Vec<FieldElem>> {
        let d = self.degree_in(var).unwrap_or(0) as usize;
        let mut out = vec![FieldElem::zero(); d + 1];
        for (m, c) in &self.terms {
            if m.0.iter().enumerate().any(|(i, &e)| i != var && e > 0) {
                return None;
            }
            out[m.0[var] as usize] = c.clone();
        }
        Some(out)
    }

    pub fn from_univariate(nvars: usize, var: usize, coeffs: &[FieldElem]) -> Self {
        let mut p = Self::zero(nvars);
        for (e, c) in coeffs.iter().enumerate() {
            let mut m = Monomial::one(nvars);
            m.0[var] = e as u32;
            p.add_term(m, c);
        }
        p
    }

    /// Sets `x_var = 1` and drops that variable.
    pub fn dehomogenize(&self, var: usize) -> Self {
        let mut p = Self::zero(self.nvars - 1);
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            e.remove(var);
            p.add_term(Monomial(e), c);
        }
        p
    }

    /// Inverse of [`dehomogenize`](Self::dehomogenize) at the given degree.
    pub fn homogenize(&self, var: usize, degree: u32) -> Self {
        let mut p = Self::zero(self.nvars + 1);
        for (m, c) in &self.terms {
            let mut e = m.0.clone();
            let d = m.degree();
            assert!(d <= degree, "degree too small to homogenize");
            e.insert(var, degree - d);
            p.add_term(Monomial(e), c);
        }
        p
    }

    /// Drops every term of total degree below `d`.
    pub fn truncate_below(&self, d: u32) -> Self {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().filter(|(m, _)| m.degree() >= d).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    /// Divides by `x_var^k`, discarding terms whose `var` exponent is below `k`.
    pub fn shift_down(&self, var: usize, k: u32) -> Self {
        let mut p = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            if m.0[var] >= k {
                let mut m2 = m.clone();
                m2.0[var] -= k;
                p.add_term(m2, c);
            }
        }
        p
    }

    /// Scaled so the leading coefficient is 1.
    pub fn monic(&self) -> Self {
        match self.leading_term() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.inv().expect("nonzero leading coefficient")),
        }
    }

    /// Display normalization: monic, and for rational coefficients an integer
    /// primitive polynomial with positive leading coefficient.
    pub fn normalized(&self) -> Self {
        let p = self.monic();
        if !p.has_rational_coeffs() || p.is_zero() {
            return p;
        }
        let mut lcm = BigInt::one();
        for c in p.terms.values() {
            lcm = lcm.lcm(c.a0().denom());
        }
        let p = p.scale(&FieldElem::rational(Q::from_integer(lcm)));
        let mut g = BigInt::zero();
        for c in p.terms.values() {
            g = g.gcd(c.a0().numer());
        }
        let p = p.scale(&FieldElem::rational(Q::new(BigInt::one(), g)));
        if p.leading_coeff().a0().is_negative() {
            -&p
        } else {
            p
        }
    }

    /// Whether `self = lambda * other` for a nonzero scalar lambda.
    pub fn is_scalar_multiple_of(&self, other: &MultiPoly) -> bool {
        if self.is_zero() || other.is_zero() {
            return self.is_zero() && other.is_zero();
        }
        self.monic() == other.monic()
    }
}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &'a MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars, "nvars mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c);
        }
        out
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &'a MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars, "nvars mismatch");
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), &-c);
        }
        out
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &'a MultiPoly) -> MultiPoly {
        assert_eq!(self.nvars, rhs.nvars, "nvars mismatch");
        let mut out = MultiPoly::zero(self.nvars);
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), &(c1 * c2));
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.map_coeffs(|c| -c)
    }
}

macro_rules! owned_binop {
    ($tr:ident, $m:ident) => {
        impl $tr for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$m(&rhs)
            }
        }
    };
}

owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

/// Binary polynomial operation selector for [`poly_ops`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PolyOp {
    Add,
    Mul,
    ExactDiv,
}

pub fn poly_ops(p: &MultiPoly, q: &MultiPoly, op: PolyOp) -> Result<MultiPoly> {
    if p.nvars != q.nvars {
        return Err(Error::LengthMismatch(p.nvars, q.nvars));
    }
    match op {
        PolyOp::Add => Ok(p + q),
        PolyOp::Mul => Ok(p * q),
        PolyOp::ExactDiv => p.exact_div(q),
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.nvars).map(|i| format!("x{i}")).collect();
        f.write_str(&super::text::format_poly(self, &names))
    }
}
