//! Coefficient field: the rationals or one quadratic extension `Q[t]/(t^2 + b t + c)`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};
use std::sync::Arc;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Shorthand for an exact rational.
pub type Q = BigRational;

pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

/// Square root of a rational, when it is a rational square.
pub fn rational_sqrt(x: &Q) -> Option<Q> {
    if x.is_negative() {
        return None;
    }
    let (n, d) = (x.numer(), x.denom());
    let (sn, sd) = (n.sqrt(), d.sqrt());
    if &(&sn * &sn) == n && &(&sd * &sd) == d {
        Some(Q::new(sn, sd))
    } else {
        None
    }
}

/// Squarefree part of a nonzero integer, keeping its sign.
///
/// Trial division only; the integers reaching this are discriminants of
/// small quadratics.
pub fn squarefree_part(n: &BigInt) -> BigInt {
    let sign = n.sign();
    let mut m = n.abs();
    let mut out = BigInt::one();
    let mut p = BigInt::from(2);
    while &p * &p <= m {
        let mut e = 0u32;
        while (&m % &p).is_zero() {
            m /= &p;
            e += 1;
        }
        if e % 2 == 1 {
            out *= &p;
        }
        p += 1;
    }
    out *= m;
    if sign == Sign::Minus {
        -out
    } else {
        out
    }
}

/// Minimal polynomial `t^2 + b t + c` of a quadratic extension generator.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuadField {
    b: Q,
    c: Q,
}

impl QuadField {
    /// Fails when `t^2 + b t + c` splits over the rationals.
    pub fn new(b: Q, c: Q) -> Result<Self> {
        let disc = &b * &b - q(4) * &c;
        if rational_sqrt(&disc).is_some() {
            return Err(Error::ReducibleMinpoly(format!(
                "t^2 + ({b})*t + ({c}) has a rational root"
            )));
        }
        Ok(QuadField { b, c })
    }

    /// Canonical field containing `sqrt(disc)`: `t^2 - t + (1-d)/4` when the
    /// squarefree part `d` is 1 mod 4, else `t^2 - d`.
    pub fn for_discriminant(disc: &Q) -> Result<Self> {
        if disc.is_zero() || rational_sqrt(disc).is_some() {
            return Err(Error::ReducibleMinpoly(format!("{disc} is a rational square")));
        }
        let d = squarefree_part(&(disc.numer() * disc.denom()));
        if d.mod_floor(&BigInt::from(4)) == BigInt::one() {
            QuadField::new(q(-1), Q::from_integer((BigInt::one() - &d) / 4))
        } else {
            QuadField::new(Q::zero(), Q::from_integer(-d))
        }
    }

    pub fn b(&self) -> &Q {
        &self.b
    }

    pub fn c(&self) -> &Q {
        &self.c
    }

    pub fn discriminant(&self) -> Q {
        &self.b * &self.b - q(4) * &self.c
    }

    /// Whether `sqrt(d)` lies in this field, i.e. `d / disc` is a rational square.
    pub fn contains_sqrt_of(&self, d: &Q) -> bool {
        !d.is_zero() && rational_sqrt(&(d / self.discriminant())).is_some()
    }
}

impl fmt::Display for QuadField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = crate::exactmath::text::format_univariate(&[self.c.clone(), self.b.clone(), q(1)], "t");
        f.write_str(&p)
    }
}

/// Description of the active coefficient field.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub enum FieldDesc {
    #[default]
    Rationals,
    Quadratic(Arc<QuadField>),
}

impl FieldDesc {
    pub fn quadratic(qf: QuadField) -> Self {
        FieldDesc::Quadratic(Arc::new(qf))
    }

    pub fn quad(&self) -> Option<&Arc<QuadField>> {
        match self {
            FieldDesc::Rationals => None,
            FieldDesc::Quadratic(qf) => Some(qf),
        }
    }

    /// The generator `t`. Fails over the rationals.
    pub fn generator(&self) -> Result<FieldElem> {
        match self {
            FieldDesc::Rationals => Err(Error::UnsupportedField(
                "no extension generator over the rationals".into(),
            )),
            FieldDesc::Quadratic(qf) => Ok(FieldElem::from_parts(Q::zero(), q(1), Some(qf.clone()))),
        }
    }

    pub fn minpoly_string(&self) -> Option<String> {
        self.quad().map(|qf| qf.to_string())
    }

    /// Whether an element can live in this field.
    pub fn admits(&self, x: &FieldElem) -> bool {
        match (&x.field, self) {
            (None, _) => true,
            (Some(a), FieldDesc::Quadratic(b)) => a == b,
            (Some(_), FieldDesc::Rationals) => false,
        }
    }

    /// `sqrt(d)` in this field, when it exists there.
    pub fn sqrt_of_rational(&self, d: &Q) -> Option<FieldElem> {
        if let Some(r) = rational_sqrt(d) {
            return Some(FieldElem::rational(r));
        }
        let qf = self.quad()?;
        let w = rational_sqrt(&(d / qf.discriminant()))?;
        // (2t + b)^2 = disc
        let root = FieldElem::from_parts(qf.b().clone(), q(2), Some(qf.clone()));
        Some(root.scale(&w))
    }
}

/// Element `a0 + a1 t` of the active field. `a1 = 0` for rationals.
///
/// The minimal polynomial travels with the element whenever `a1 != 0`;
/// rational elements carry no field and mix freely with any extension.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldElem {
    a0: Q,
    a1: Q,
    field: Option<Arc<QuadField>>,
}

impl FieldElem {
    fn from_parts(a0: Q, a1: Q, field: Option<Arc<QuadField>>) -> Self {
        let field = if a1.is_zero() { None } else { field };
        debug_assert!(a1.is_zero() || field.is_some());
        FieldElem { a0, a1, field }
    }

    pub fn new(a0: Q, a1: Q, field: &FieldDesc) -> Result<Self> {
        if a1.is_zero() {
            return Ok(Self::rational(a0));
        }
        match field {
            FieldDesc::Rationals => Err(Error::UnsupportedField(
                "irrational element over the rationals".into(),
            )),
            FieldDesc::Quadratic(qf) => Ok(Self::from_parts(a0, a1, Some(qf.clone()))),
        }
    }

    pub fn rational(a0: Q) -> Self {
        FieldElem { a0, a1: Q::zero(), field: None }
    }

    pub fn int(n: i64) -> Self {
        Self::rational(q(n))
    }

    pub fn zero() -> Self {
        Self::int(0)
    }

    pub fn one() -> Self {
        Self::int(1)
    }

    pub fn a0(&self) -> &Q {
        &self.a0
    }

    pub fn a1(&self) -> &Q {
        &self.a1
    }

    pub fn field(&self) -> Option<&Arc<QuadField>> {
        self.field.as_ref()
    }

    pub fn is_zero(&self) -> bool {
        self.a0.is_zero() && self.a1.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.a0.is_one() && self.a1.is_zero()
    }

    pub fn is_rational(&self) -> bool {
        self.a1.is_zero()
    }

    pub fn as_rational(&self) -> Option<&Q> {
        self.is_rational().then_some(&self.a0)
    }

    fn join(&self, other: &Self) -> Result<Option<Arc<QuadField>>> {
        match (&self.field, &other.field) {
            (Some(a), Some(b)) if a != b => Err(Error::UnsupportedField(format!(
                "two incompatible quadratic extensions: {a} and {b}"
            ))),
            (Some(a), _) => Ok(Some(a.clone())),
            (None, b) => Ok(b.clone()),
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        let field = self.join(other)?;
        Ok(Self::from_parts(&self.a0 + &other.a0, &self.a1 + &other.a1, field))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        let field = self.join(other)?;
        Ok(Self::from_parts(&self.a0 - &other.a0, &self.a1 - &other.a1, field))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        let field = self.join(other)?;
        if self.a1.is_zero() {
            return Ok(Self::from_parts(&self.a0 * &other.a0, &self.a0 * &other.a1, field));
        }
        if other.a1.is_zero() {
            return Ok(Self::from_parts(&self.a0 * &other.a0, &self.a1 * &other.a0, field));
        }
        let qf = field.as_ref().expect("irrational operands carry their field");
        // t^2 = -b t - c
        let hi = &self.a1 * &other.a1;
        let a0 = &self.a0 * &other.a0 - qf.c() * &hi;
        let a1 = &self.a0 * &other.a1 + &self.a1 * &other.a0 - qf.b() * &hi;
        Ok(Self::from_parts(a0, a1, field))
    }

    /// Field norm `x * conjugate(x)`, a rational.
    pub fn norm(&self) -> Q {
        match &self.field {
            None => self.a0.clone(),
            Some(qf) => {
                &self.a0 * &self.a0 - qf.b() * &self.a0 * &self.a1 + qf.c() * &self.a1 * &self.a1
            }
        }
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.a1.is_zero() {
            return Ok(Self::rational(self.a0.recip()));
        }
        let n = self.norm();
        Ok(self.conjugate().scale(&n.recip()))
    }

    pub fn checked_div(&self, other: &Self) -> Result<Self> {
        self.checked_mul(&other.inv()?)
    }

    /// The nontrivial automorphism `t -> -b - t`; identity on rationals.
    pub fn conjugate(&self) -> Self {
        match &self.field {
            None => self.clone(),
            Some(qf) => Self::from_parts(&self.a0 - qf.b() * &self.a1, -&self.a1, self.field.clone()),
        }
    }

    pub fn scale(&self, r: &Q) -> Self {
        Self::from_parts(&self.a0 * r, &self.a1 * r, self.field.clone())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::one();
        let mut base = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                out = &out * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        out
    }
}

/// Binary operation selector for [`field_arith`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FieldOp {
    Add,
    Sub,
    Mul,
    Div,
}

pub fn field_arith(a: &FieldElem, b: &FieldElem, op: FieldOp) -> Result<FieldElem> {
    match op {
        FieldOp::Add => a.checked_add(b),
        FieldOp::Sub => a.checked_sub(b),
        FieldOp::Mul => a.checked_mul(b),
        FieldOp::Div => a.checked_div(b),
    }
}

impl Ord for FieldElem {
    fn cmp(&self, other: &Self) -> Ordering {
        self.a0
            .cmp(&other.a0)
            .then_with(|| self.a1.cmp(&other.a1))
            .then_with(|| self.field.cmp(&other.field))
    }
}

impl PartialOrd for FieldElem {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<Q> for FieldElem {
    fn from(r: Q) -> Self {
        FieldElem::rational(r)
    }
}

impl From<i64> for FieldElem {
    fn from(n: i64) -> Self {
        FieldElem::int(n)
    }
}

// Operator impls panic on mixing two different extensions; use the
// `checked_*` methods where that can happen.
macro_rules! binop {
    ($tr:ident, $m:ident, $checked:ident) => {
        impl<'a> $tr<&'a FieldElem> for &'a FieldElem {
            type Output = FieldElem;
            fn $m(self, rhs: &'a FieldElem) -> FieldElem {
                self.$checked(rhs).expect("incompatible coefficient fields")
            }
        }
        impl $tr for FieldElem {
            type Output = FieldElem;
            fn $m(self, rhs: FieldElem) -> FieldElem {
                (&self).$m(&rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl<'a> Div<&'a FieldElem> for &'a FieldElem {
    type Output = FieldElem;
    fn div(self, rhs: &'a FieldElem) -> FieldElem {
        self.checked_div(rhs).expect("division by zero or incompatible fields")
    }
}

impl Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        FieldElem::from_parts(-&self.a0, -&self.a1, self.field.clone())
    }
}

impl Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        -&self
    }
}

impl AddAssign<&FieldElem> for FieldElem {
    fn add_assign(&mut self, rhs: &FieldElem) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&FieldElem> for FieldElem {
    fn sub_assign(&mut self, rhs: &FieldElem) {
        *self = &*self - rhs;
    }
}

impl MulAssign<&FieldElem> for FieldElem {
    fn mul_assign(&mut self, rhs: &FieldElem) {
        *self = &*self * rhs;
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.a1.is_zero() {
            return write!(f, "{}", self.a0);
        }
        let t = if self.a1.is_one() {
            "t".to_string()
        } else if (-&self.a1).is_one() {
            "-t".to_string()
        } else {
            format!("{}*t", self.a1)
        };
        if self.a0.is_zero() {
            f.write_str(&t)
        } else if self.a0.is_negative() {
            write!(f, "{t}-{}", -&self.a0)
        } else {
            write!(f, "{t}+{}", self.a0)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eta_field() -> FieldDesc {
        FieldDesc::quadratic(QuadField::new(q(-1), q(1)).unwrap())
    }

    #[test]
    fn eta_squared_is_eta_minus_one() {
        let k = eta_field();
        let eta = k.generator().unwrap();
        assert_eq!(&eta * &eta, &eta - &FieldElem::one());
    }

    #[test]
    fn adding_zero() {
        let eta = eta_field().generator().unwrap();
        assert_eq!(&eta + &FieldElem::zero(), eta);
    }

    #[test]
    fn inverse_of_one_plus_eta() {
        let eta = eta_field().generator().unwrap();
        let x = &FieldElem::one() + &eta;
        let inv = x.inv().unwrap();
        assert!((&x * &inv).is_one());
    }

    #[test]
    fn conjugate_eta() {
        let eta = eta_field().generator().unwrap();
        assert_eq!(eta.conjugate(), &FieldElem::one() - &eta);
        let r = FieldElem::rational(qf(3, 2));
        assert_eq!(r.conjugate(), r);
    }

    #[test]
    fn division_by_zero_is_an_error() {
        let r = FieldElem::int(3);
        assert!(matches!(
            field_arith(&r, &FieldElem::zero(), FieldOp::Div),
            Err(Error::DivisionByZero)
        ));
    }

    #[test]
    fn reducible_minpoly_rejected() {
        // t^2 - 1
        assert!(QuadField::new(q(0), q(-1)).is_err());
    }

    #[test]
    fn canonical_field_for_minus_three() {
        let qf = QuadField::for_discriminant(&q(-3)).unwrap();
        assert_eq!(qf, QuadField::new(q(-1), q(1)).unwrap());
        let qf = QuadField::for_discriminant(&q(-12)).unwrap();
        assert_eq!(qf, QuadField::new(q(-1), q(1)).unwrap());
        let qf = QuadField::for_discriminant(&q(-4)).unwrap();
        assert_eq!(qf, QuadField::new(q(0), q(1)).unwrap());
    }

    #[test]
    fn sqrt_in_field() {
        let k = eta_field();
        let s = k.sqrt_of_rational(&q(-3)).unwrap();
        assert_eq!(&s * &s, FieldElem::int(-3));
        assert!(k.sqrt_of_rational(&q(-1)).is_none());
    }

    #[test]
    fn display() {
        let eta = eta_field().generator().unwrap();
        assert_eq!((&eta - &FieldElem::one()).to_string(), "t-1");
        assert_eq!((-&eta).to_string(), "-t");
        assert_eq!(FieldElem::rational(qf(-1, 2)).to_string(), "-1/2");
    }
}
