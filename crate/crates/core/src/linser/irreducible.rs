//! Irreducibility of the general member of a complete linear series, decided
//! on the lattice where possible.
//!
//! Tiers, in order: a polynomial fixed component of the series; a known
//! effective class `d` with `c.d < 0`; a known effective `d` with
//! `h0(c - d) = h0(c)`; a splitting `c = a + b` whose product family is at
//! least as large as the series. The known effective classes are the
//! differences `e_i - e_j` of infinitely near points and the classes of the
//! lines through two basepoints. The last tier is a heuristic.

use std::cell::RefCell;
use std::collections::HashMap;
use std::rc::Rc;

use super::series::{actual_class, series_from_class};
use super::{LinearSeries, DEFAULT_DEPTH_CAP};
use crate::error::Result;
use crate::exactmath::{gcd_content, MultiPoly};
use crate::nslattice::{intersect, neg_curve_classes, BasepointTree, DivClass, NSLattice};

/// Upper bound on the number of splittings tried by the last tier.
const MAX_SPLITTINGS: usize = 50_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Irreducibility {
    Irreducible,
    Reducible {
        reason: String,
        /// A reducible member, or the fixed component, when one is known.
        witness: Option<MultiPoly>,
    },
}

impl Irreducibility {
    pub fn is_irreducible(&self) -> bool {
        matches!(self, Irreducibility::Irreducible)
    }
}

/// Memoized series and `h0` values for one basepoint tree.
pub struct SeriesCache<'a> {
    lattice: &'a NSLattice,
    tree: &'a BasepointTree,
    series: RefCell<HashMap<DivClass, Rc<LinearSeries>>>,
    pool: RefCell<Option<Rc<Vec<(DivClass, Option<MultiPoly>)>>>>,
}

impl<'a> SeriesCache<'a> {
    pub fn new(lattice: &'a NSLattice, tree: &'a BasepointTree) -> Self {
        SeriesCache { lattice, tree, series: RefCell::new(HashMap::new()), pool: RefCell::new(None) }
    }

    pub fn tree(&self) -> &BasepointTree {
        self.tree
    }

    pub fn series(&self, c: &DivClass) -> Result<Rc<LinearSeries>> {
        if let Some(s) = self.series.borrow().get(c) {
            return Ok(s.clone());
        }
        let s = Rc::new(series_from_class(c, self.tree)?);
        self.series.borrow_mut().insert(c.clone(), s.clone());
        Ok(s)
    }

    pub fn h0(&self, c: &DivClass) -> Result<usize> {
        self.lattice.h0(c, |c| Ok(self.series(c)?.dim()))
    }

    /// Known effective classes, with a defining polynomial for the lines.
    fn pool(&self) -> Rc<Vec<(DivClass, Option<MultiPoly>)>> {
        if let Some(p) = self.pool.borrow().as_ref() {
            return p.clone();
        }
        let rank = self.tree.len() + 1;
        let mut out: Vec<(DivClass, Option<MultiPoly>)> =
            neg_curve_classes(self.tree).into_iter().map(|d| (d, None)).collect();
        for i in 1..rank {
            for j in i + 1..rank {
                let c = DivClass::e(rank, 0).sub(&DivClass::e(rank, i)).sub(&DivClass::e(rank, j));
                let Ok(s) = self.series(&c) else { continue };
                if s.dim() != 1 {
                    continue;
                }
                let Ok(d) = actual_class(&s, self.tree, DEFAULT_DEPTH_CAP) else { continue };
                if !out.iter().any(|(x, _)| *x == d) {
                    out.push((d, Some(s.basis[0].clone())));
                }
            }
        }
        let out = Rc::new(out);
        *self.pool.borrow_mut() = Some(out.clone());
        out
    }

    fn divisible_member(&self, c: &DivClass, factor: &Option<MultiPoly>) -> Option<MultiPoly> {
        let f = factor.as_ref()?;
        let s = self.series(c).ok()?;
        s.basis.iter().find(|b| b.div_rem(f).map(|(_, r)| r.is_zero()).unwrap_or(false)).cloned()
    }

    /// See the module documentation for the tiers.
    pub fn is_irreducible(&self, c: &DivClass) -> Irreducibility {
        let Ok(s) = self.series(c) else {
            return Irreducibility::Irreducible;
        };
        if s.dim() >= 2 {
            let g = gcd_content(&s.basis);
            if !g.is_constant() {
                return Irreducibility::Reducible { reason: format!("fixed component {g}"), witness: Some(g) };
            }
        }
        let h0c = match self.h0(c) {
            Ok(n) => n,
            Err(_) => return Irreducibility::Irreducible,
        };
        let pool = self.pool();
        for (d, poly) in pool.iter() {
            if d == c {
                continue;
            }
            let cd = intersect(c, d).unwrap_or(0);
            if cd < 0 {
                return Irreducibility::Reducible {
                    reason: format!("{c} . ({d}) = {cd} < 0"),
                    witness: self.divisible_member(c, poly),
                };
            }
        }
        for (d, poly) in pool.iter() {
            if d == c {
                continue;
            }
            let rest = c.sub(d);
            if rest.shape().is_none() {
                continue;
            }
            if self.h0(&rest).ok() == Some(h0c) {
                return Irreducibility::Reducible {
                    reason: format!("h0({rest}) = h0({c}) = {h0c}"),
                    witness: self.divisible_member(c, poly),
                };
            }
        }
        if let Some(r) = self.split(c, h0c) {
            return r;
        }
        Irreducibility::Irreducible
    }

    /// Splittings `c = a + b` with `1 <= a0 < c0` and `c_i <= a_i <= 0`.
    fn split(&self, c: &DivClass, h0c: usize) -> Option<Irreducibility> {
        let rank = c.rank();
        let ranges: Vec<i64> = c.coeffs()[1..].iter().map(|&x| -x).collect();
        let count: usize = (c.c0() - 1).max(0) as usize * ranges.iter().map(|&r| r as usize + 1).product::<usize>();
        if count == 0 || count > MAX_SPLITTINGS {
            return None;
        }
        for a0 in 1..c.c0() {
            let mut digits = vec![0i64; rank - 1];
            loop {
                let mut a = vec![a0];
                a.extend(digits.iter().map(|&x| -x));
                let a = DivClass(a);
                let b = c.sub(&a);
                if a <= b {
                    let ha = self.h0(&a).unwrap_or(0);
                    if ha >= 1 {
                        let hb = self.h0(&b).unwrap_or(0);
                        if hb >= 1 && ha + hb >= h0c + 1 {
                            let witness = match (self.series(&a), self.series(&b)) {
                                (Ok(sa), Ok(sb)) => Some(&sa.basis[0] * &sb.basis[0]),
                                _ => None,
                            };
                            return Some(Irreducibility::Reducible {
                                reason: format!("{c} = ({a}) + ({b}) with h0 {ha} + {hb}"),
                                witness,
                            });
                        }
                    }
                }
                let mut k = 0;
                loop {
                    if k == digits.len() {
                        break;
                    }
                    digits[k] += 1;
                    if digits[k] <= ranges[k] {
                        break;
                    }
                    digits[k] = 0;
                    k += 1;
                }
                if k == digits.len() {
                    break;
                }
            }
        }
        None
    }
}

/// Irreducibility of the general member of `|c|`; builds a fresh cache.
pub fn is_irreducible(c: &DivClass, lattice: &NSLattice, tree: &BasepointTree) -> Irreducibility {
    SeriesCache::new(lattice, tree).is_irreducible(c)
}
