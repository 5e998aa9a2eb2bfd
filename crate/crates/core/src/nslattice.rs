//! Neron-Severi lattices with a type-1 basis `<e0, ..., er>`, intersection
//! form `diag(1, -1, ..., -1)`, and the basepoint trees they come from.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::exactmath::{FieldDesc, FieldElem};

/// Where a basepoint lives: a point of the plane, or a point on the
/// exceptional curve of its parent in one of the two blowup charts
/// `T: (x, y) -> (x, x y')` and `S: (x, y) -> (x' y, y)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Chart {
    Root,
    T,
    S,
}

impl Chart {
    pub fn as_str(self) -> &'static str {
        match self {
            Chart::Root => "root",
            Chart::T => "T",
            Chart::S => "S",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "root" => Ok(Chart::Root),
            "T" | "t" => Ok(Chart::T),
            "S" | "s" => Ok(Chart::S),
            _ => Err(Error::Parse(format!("unknown chart {s:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Basepoint {
    /// 1-based; equals the index of `e_id` in the lattice.
    pub id: usize,
    /// Affine coordinates: for a root point, the two coordinates other than
    /// `x_patch = 1`; for an infinitely near point, chart coordinates with the
    /// exceptional curve at first coordinate 0 (chart T) or second 0 (chart S).
    pub coords: [FieldElem; 2],
    pub parent: Option<usize>,
    pub chart: Chart,
    /// Affine patch `x_patch != 0` of the plane holding the root of this branch.
    pub patch: usize,
}

impl Basepoint {
    pub fn is_root(&self) -> bool {
        self.parent.is_none()
    }

    /// Projective coordinates of a root point.
    pub fn projective(&self) -> Option<[FieldElem; 3]> {
        if !self.is_root() {
            return None;
        }
        let mut out = Vec::with_capacity(3);
        let mut it = self.coords.iter();
        for i in 0..3 {
            if i == self.patch {
                out.push(FieldElem::one());
            } else {
                out.push(it.next().unwrap().clone());
            }
        }
        Some([out[0].clone(), out[1].clone(), out[2].clone()])
    }

    fn conjugate_key(&self, conj_parent: Option<usize>) -> (Option<usize>, Chart, usize, [FieldElem; 2]) {
        (
            conj_parent,
            self.chart,
            self.patch,
            [self.coords[0].conjugate(), self.coords[1].conjugate()],
        )
    }
}

/// Basepoints ordered by id, with their complex-conjugation pairing.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct BasepointTree {
    points: Vec<Basepoint>,
    /// `conj[i]` pairs point `i + 1` with point `conj[i] + 1`.
    conj: Vec<usize>,
}

impl BasepointTree {
    /// Validates the structure and derives the conjugation pairing from the
    /// coordinates.
    pub fn new(points: Vec<Basepoint>) -> Result<Self> {
        for (i, p) in points.iter().enumerate() {
            if p.id != i + 1 {
                return Err(Error::InvalidInput(format!("basepoint ids must be 1..r in order, got {}", p.id)));
            }
            match p.parent {
                None if p.chart != Chart::Root => {
                    return Err(Error::InvalidInput(format!("p{} has no parent but chart {}", p.id, p.chart.as_str())))
                }
                Some(_) if p.chart == Chart::Root => {
                    return Err(Error::InvalidInput(format!("p{} has a parent but chart root", p.id)))
                }
                Some(par) if par >= p.id || par == 0 => {
                    return Err(Error::InvalidInput(format!("p{} has parent p{par}", p.id)))
                }
                _ => {}
            }
            if p.patch > 2 {
                return Err(Error::InvalidInput(format!("p{} has patch {}", p.id, p.patch)));
            }
            if let Some(par) = p.parent {
                if points[par - 1].patch != p.patch {
                    return Err(Error::InvalidInput(format!("p{} patch differs from its parent", p.id)));
                }
            }
        }
        let mut conj = vec![usize::MAX; points.len()];
        for (i, p) in points.iter().enumerate() {
            let cp = p.parent.map(|par| conj[par - 1] + 1);
            let key = p.conjugate_key(cp);
            let j = points
                .iter()
                .position(|o| (o.parent, o.chart, o.patch, o.coords.clone()) == key)
                .ok_or_else(|| Error::InvalidInput(format!("conjugate of p{} is missing", p.id)))?;
            conj[i] = j;
        }
        Ok(BasepointTree { points, conj })
    }

    pub fn empty() -> Self {
        BasepointTree::default()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[Basepoint] {
        &self.points
    }

    /// Point by 1-based id.
    pub fn point(&self, id: usize) -> &Basepoint {
        &self.points[id - 1]
    }

    pub fn conj(&self, id: usize) -> usize {
        self.conj[id - 1] + 1
    }

    pub fn is_real(&self, id: usize) -> bool {
        self.conj(id) == id
    }

    pub fn children(&self, id: usize) -> impl Iterator<Item = &Basepoint> {
        self.points.iter().filter(move |p| p.parent == Some(id))
    }

    /// Smallest supported field holding every coordinate.
    pub fn field(&self) -> FieldDesc {
        self.points
            .iter()
            .flat_map(|p| p.coords.iter())
            .find_map(|c| c.field().cloned())
            .map(FieldDesc::Quadratic)
            .unwrap_or(FieldDesc::Rationals)
    }

    /// Ids from the root of the branch down to `id`.
    pub fn path(&self, id: usize) -> Vec<usize> {
        let mut out = vec![id];
        let mut cur = self.point(id).parent;
        while let Some(p) = cur {
            out.push(p);
            cur = self.point(p).parent;
        }
        out.reverse();
        out
    }

    pub fn depth(&self, id: usize) -> usize {
        self.path(id).len() - 1
    }

    pub fn is_descendant(&self, ancestor: usize, id: usize) -> bool {
        let mut cur = self.point(id).parent;
        while let Some(p) = cur {
            if p == ancestor {
                return true;
            }
            cur = self.point(p).parent;
        }
        false
    }
}

/// Divisor class `c0 e0 + c1 e1 + ... + cr er` with signed coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DivClass(pub Vec<i64>);

/// The three class shapes `h0` is defined for.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ClassShape {
    /// `e_i`, `i > 0`
    Exceptional(usize),
    /// `e_i - e_j`, `i, j > 0`
    Difference(usize, usize),
    /// `c0 > 0` and `ci <= 0` for `i > 0`
    Planar,
}

impl DivClass {
    pub fn zero(rank: usize) -> Self {
        DivClass(vec![0; rank])
    }

    /// Basis vector `e_i` in a lattice of the given rank (`r + 1`).
    pub fn e(rank: usize, i: usize) -> Self {
        let mut v = vec![0; rank];
        v[i] = 1;
        DivClass(v)
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn c0(&self) -> i64 {
        self.0[0]
    }

    pub fn add(&self, other: &DivClass) -> DivClass {
        DivClass(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &DivClass) -> DivClass {
        DivClass(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn self_intersection(&self) -> i64 {
        intersect(self, self).expect("equal lengths")
    }

    /// Pushforward along a basis permutation: `e_i -> e_sigma(i)`.
    pub fn permuted(&self, sigma: &[usize]) -> DivClass {
        let mut out = vec![0; self.rank()];
        for (i, &c) in self.0.iter().enumerate() {
            out[sigma[i]] += c;
        }
        DivClass(out)
    }

    pub fn shape(&self) -> Option<ClassShape> {
        let pos: Vec<usize> = (1..self.rank()).filter(|&i| self.0[i] != 0).collect();
        if self.0[0] > 0 {
            return self.0[1..].iter().all(|&c| c <= 0).then_some(ClassShape::Planar);
        }
        if self.0[0] != 0 {
            return None;
        }
        match pos.as_slice() {
            [i] if self.0[*i] == 1 => Some(ClassShape::Exceptional(*i)),
            [a, b] => match (self.0[*a], self.0[*b]) {
                (1, -1) => Some(ClassShape::Difference(*a, *b)),
                (-1, 1) => Some(ClassShape::Difference(*b, *a)),
                _ => None,
            },
            _ => None,
        }
    }

    /// Positive multiplicities `-c_i` of a planar class.
    pub fn multiplicities(&self) -> Vec<u32> {
        self.0[1..].iter().map(|&c| (-c).max(0) as u32).collect()
    }
}

impl fmt::Display for DivClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (i, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if c < 0 {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            if c.abs() != 1 {
                out.push_str(&c.abs().to_string());
            }
            out.push_str(&format!("e{i}"));
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

impl std::str::FromStr for DivClass {
    type Err = Error;

    /// Parses either `[3,-1,-1]` / `3,-1,-1` or class notation `3e0-e1-e2`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.contains('e') {
            let mut coeffs: Vec<i64> = Vec::new();
            let cleaned = s.replace(' ', "");
            let mut rest = cleaned.as_str();
            while !rest.is_empty() {
                let (sign, tail) = match rest.as_bytes()[0] {
                    b'-' => (-1, &rest[1..]),
                    b'+' => (1, &rest[1..]),
                    _ => (1, rest),
                };
                let epos = tail.find('e').ok_or_else(|| Error::Parse(format!("bad class {s}")))?;
                let mag: i64 = if epos == 0 {
                    1
                } else {
                    tail[..epos].parse().map_err(|_| Error::Parse(format!("bad class {s}")))?
                };
                let after = &tail[epos + 1..];
                let end = after.find(['+', '-']).unwrap_or(after.len());
                let idx: usize = after[..end].parse().map_err(|_| Error::Parse(format!("bad class {s}")))?;
                if coeffs.len() <= idx {
                    coeffs.resize(idx + 1, 0);
                }
                coeffs[idx] += sign * mag;
                rest = &after[end..];
            }
            Ok(DivClass(coeffs))
        } else {
            let inner = s.trim_start_matches('[').trim_end_matches(']');
            let coeffs = inner
                .split(',')
                .map(|x| x.trim().parse::<i64>().map_err(|_| Error::Parse(format!("bad class {s}"))))
                .collect::<Result<Vec<_>>>()?;
            Ok(DivClass(coeffs))
        }
    }
}

pub fn intersect(a: &DivClass, b: &DivClass) -> Result<i64> {
    if a.rank() != b.rank() {
        return Err(Error::LengthMismatch(a.rank(), b.rank()));
    }
    if a.rank() == 0 {
        return Ok(0);
    }
    let tail: i64 = a.0[1..].iter().zip(&b.0[1..]).map(|(x, y)| x * y).sum();
    Ok(a.0[0] * b.0[0] - tail)
}

/// Arithmetic genus `(c^2 + c.k)/2 + 1`.
pub fn genus(c: &DivClass, k: &DivClass) -> Result<i64> {
    let s = intersect(c, c)? + intersect(c, k)?;
    if s % 2 != 0 {
        return Err(Error::MalformedClass(c.to_string()));
    }
    Ok(s / 2 + 1)
}

pub fn degree(c: &DivClass, h: &DivClass) -> Result<i64> {
    intersect(h, c)
}

/// Canonical class `-3 e0 + e1 + ... + er` of a blowup of the plane.
pub fn canonical_class(rank: usize) -> DivClass {
    let mut v = vec![1; rank];
    if rank > 0 {
        v[0] = -3;
    }
    DivClass(v)
}

/// Real structure on the basis: `sigma(0) = 0`, `sigma(i) = conj(i)`.
pub fn involution_from_tree(tree: &BasepointTree) -> Vec<usize> {
    std::iter::once(0).chain((1..=tree.len()).map(|i| tree.conj(i))).collect()
}

/// Classes `e_i - e_j` with `p_j` infinitely near `p_i` (a child, or
/// further down the chain).
pub fn neg_curve_classes(tree: &BasepointTree) -> BTreeSet<DivClass> {
    let rank = tree.len() + 1;
    let mut out = BTreeSet::new();
    for p in tree.points() {
        for q in tree.points() {
            if tree.is_descendant(p.id, q.id) {
                out.insert(DivClass::e(rank, p.id).sub(&DivClass::e(rank, q.id)));
            }
        }
    }
    out
}

/// A Neron-Severi lattice built from the base locus of a parametrization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NSLattice {
    pub h: DivClass,
    pub k: DivClass,
    pub sigma: Vec<usize>,
    pub tree: BasepointTree,
}

impl NSLattice {
    /// `h = degree e0 - sum m_i e_i` from the multiplicities of the base locus.
    pub fn new(degree: u32, tree: BasepointTree, mults: &[u32]) -> Result<Self> {
        if mults.len() != tree.len() {
            return Err(Error::LengthMismatch(mults.len(), tree.len()));
        }
        let rank = tree.len() + 1;
        let mut h = vec![degree as i64];
        h.extend(mults.iter().map(|&m| -(m as i64)));
        let sigma = involution_from_tree(&tree);
        Ok(NSLattice { h: DivClass(h), k: canonical_class(rank), sigma, tree })
    }

    pub fn rank(&self) -> usize {
        self.h.rank()
    }

    pub fn intersect(&self, a: &DivClass, b: &DivClass) -> Result<i64> {
        intersect(a, b)
    }

    pub fn degree(&self, c: &DivClass) -> Result<i64> {
        degree(c, &self.h)
    }

    pub fn genus(&self, c: &DivClass) -> Result<i64> {
        genus(c, &self.k)
    }

    pub fn apply_sigma(&self, c: &DivClass) -> DivClass {
        c.permuted(&self.sigma)
    }

    /// `h0` for the three supported shapes; planar classes go through
    /// `series_dim`, which returns the dimension of the computed series.
    pub fn h0<F>(&self, c: &DivClass, series_dim: F) -> Result<usize>
    where
        F: FnOnce(&DivClass) -> Result<usize>,
    {
        if c.rank() != self.rank() {
            return Err(Error::LengthMismatch(c.rank(), self.rank()));
        }
        match c.shape() {
            Some(ClassShape::Exceptional(_)) => Ok(1),
            Some(ClassShape::Difference(i, j)) => Ok(usize::from(self.tree.is_descendant(i, j))),
            Some(ClassShape::Planar) => series_dim(c),
            None => Err(Error::UnsupportedClass(c.to_string())),
        }
    }
}
