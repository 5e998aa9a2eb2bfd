//! Enumeration of divisor classes with prescribed degree `h.c = alpha` and
//! self-intersection `c^2 = beta`.
//!
//! Classes with `c0 > 0` are found slice by slice in `c0`: the remaining
//! coefficients are weighted partitions of `h0 c0 - alpha` with square sum
//! `c0^2 - beta`. By Cauchy-Schwarz a slice can only contain solutions when
//! `f(c0) <= 0` for
//!
//! ```text
//! f(t) = (h0 t - alpha)^2 - (h0^2 - h^2)(t^2 - beta)
//! ```
//!
//! and `f` is an upward parabola once `h^2 > 0`, so the scan stops at the
//! first `c0` with `f(c0) > 0` and `f(c0) > f(c0 - 1)`.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::nslattice::{intersect, DivClass};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumQuery {
    pub h: DivClass,
    pub alpha: i64,
    pub beta: i64,
}

impl EnumQuery {
    pub fn new(h: DivClass, alpha: i64, beta: i64) -> Result<Self> {
        if h.rank() == 0 || h.c0() <= 0 {
            return Err(Error::InvalidQuery(format!("h0 must be positive in {h}")));
        }
        if h.coeffs()[1..].iter().any(|&c| c > 0) {
            return Err(Error::InvalidQuery(format!("h has a positive exceptional coefficient: {h}")));
        }
        if alpha < 0 {
            return Err(Error::InvalidQuery(format!("alpha = {alpha} < 0")));
        }
        if beta < -2 {
            return Err(Error::InvalidQuery(format!("beta = {beta} < -2")));
        }
        Ok(EnumQuery { h, alpha, beta })
    }

    fn h_squared(&self) -> i64 {
        self.h.self_intersection()
    }

    /// Positive magnitudes `-h_i` of the exceptional coefficients of `h`.
    fn weights(&self) -> Vec<u64> {
        self.h.coeffs()[1..].iter().map(|&c| (-c) as u64).collect()
    }
}

/// `f(t) = (h0 t - alpha)^2 - (h0^2 - h^2)(t^2 - beta)`.
pub fn halting_poly(q: &EnumQuery, t: i64) -> i128 {
    let h0 = q.h.c0() as i128;
    let tail = h0 * h0 - q.h_squared() as i128;
    let t = t as i128;
    let lin = h0 * t - q.alpha as i128;
    lin * lin - tail * (t * t - q.beta as i128)
}

/// All `m >= 0` with `sum weights_i m_i = total`. Weights must be positive.
pub fn weighted_partitions(total: u64, weights: &[u64]) -> Vec<Vec<u64>> {
    assert!(weights.iter().all(|&w| w > 0), "weights must be positive");
    let mut out = Vec::new();
    let mut cur = vec![0; weights.len()];
    fn rec(i: usize, left: u64, weights: &[u64], cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if i == weights.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for m in 0..=left / weights[i] {
            cur[i] = m;
            rec(i + 1, left - m * weights[i], weights, cur, out);
        }
        cur[i] = 0;
    }
    rec(0, total, weights, &mut cur, &mut out);
    out
}

/// Weighted partitions of `total` whose square sum is exactly `squares`.
/// Zero weights are allowed; the square budget bounds those coordinates.
fn partitions_with_squares(total: u64, squares: u64, weights: &[u64]) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut cur = vec![0; weights.len()];
    fn rec(i: usize, left: u64, sq_left: u64, weights: &[u64], cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if i == weights.len() {
            if left == 0 && sq_left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let mut m = 0u64;
        loop {
            let cost = m * weights[i];
            if cost > left || m * m > sq_left {
                break;
            }
            cur[i] = m;
            rec(i + 1, left - cost, sq_left - m * m, weights, cur, out);
            m += 1;
        }
        cur[i] = 0;
    }
    rec(0, total, squares, weights, &mut cur, &mut out);
    out
}

/// The exceptional seed: every `e_i` and `e_i - e_j` (`i != j`, both `> 0`)
/// with `(h.c, c^2) = (alpha, beta)`.
pub fn seed_exceptional(q: &EnumQuery) -> BTreeSet<DivClass> {
    let rank = q.h.rank();
    let mut out = BTreeSet::new();
    for i in 1..rank {
        let ei = DivClass::e(rank, i);
        if intersect(&q.h, &ei).unwrap() == q.alpha && q.beta == -1 {
            out.insert(ei.clone());
        }
        for j in 1..rank {
            if i == j {
                continue;
            }
            let c = ei.sub(&DivClass::e(rank, j));
            if intersect(&q.h, &c).unwrap() == q.alpha && q.beta == -2 {
                out.insert(c);
            }
        }
    }
    out
}

/// Seed classes plus every class with `c0 >= 1`, `ci <= 0`, `h.c = alpha`
/// and `c^2 = beta`, in lexicographic order.
pub fn enumerate_classes(q: &EnumQuery) -> Result<BTreeSet<DivClass>> {
    if q.h_squared() <= 0 {
        return Err(Error::InvalidQuery(format!(
            "h^2 = {} <= 0; the class scan would not terminate",
            q.h_squared()
        )));
    }
    let mut out = seed_exceptional(q);
    let weights = q.weights();
    let h0 = q.h.c0();
    let mut c0: i64 = 1;
    while halting_poly(q, c0) <= 0 || halting_poly(q, c0) <= halting_poly(q, c0 - 1) {
        let total = h0 * c0 - q.alpha;
        let squares = c0 * c0 - q.beta;
        if total >= 0 && squares >= 0 {
            for m in partitions_with_squares(total as u64, squares as u64, &weights) {
                let mut v = vec![c0];
                v.extend(m.iter().map(|&x| -(x as i64)));
                out.insert(DivClass(v));
            }
        }
        c0 += 1;
    }
    Ok(out)
}

/// Every class `c` in the output satisfies the Cauchy-Schwarz bound
/// `f(c0) <= 0`; exposed for property checks.
pub fn satisfies_halting_bound(q: &EnumQuery, c: &DivClass) -> bool {
    c.c0() <= 0 || halting_poly(q, c.c0()) <= 0
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cubic_h() -> DivClass {
        DivClass(vec![3, -1, -1, -1, -1, -1])
    }

    fn roman_h() -> DivClass {
        DivClass(vec![4, -1, -1, -1, -1, -1, -1, -1, -1])
    }

    #[test]
    fn halting_poly_values() {
        let q = EnumQuery::new(cubic_h(), 1, -1).unwrap();
        // f(t) = 4t^2 - 6t - 4
        for t in -3..6 {
            assert_eq!(halting_poly(&q, t), (4 * t * t - 6 * t - 4) as i128);
        }
        assert_eq!(halting_poly(&q, 1), -6);
        assert_eq!(halting_poly(&q, 2), 0);
        assert_eq!(halting_poly(&q, 3), 14);
        // c = h is the equality case of Cauchy-Schwarz
        let q = EnumQuery::new(cubic_h(), 4, 4).unwrap();
        assert_eq!(halting_poly(&q, 3), 0);
    }

    /// Brute force over `{0..=total}^n`.
    fn brute_partitions(total: u64, weights: &[u64]) -> BTreeSet<Vec<u64>> {
        let n = weights.len();
        let mut out = BTreeSet::new();
        let mut cur = vec![0u64; n];
        loop {
            if cur.iter().zip(weights).map(|(m, w)| m * w).sum::<u64>() == total {
                out.insert(cur.clone());
            }
            let mut i = 0;
            loop {
                if i == n {
                    return out;
                }
                cur[i] += 1;
                if cur[i] <= total {
                    break;
                }
                cur[i] = 0;
                i += 1;
            }
        }
    }

    #[test]
    fn partitions() {
        assert_eq!(weighted_partitions(0, &[1, 1, 1, 1, 1]), vec![vec![0; 5]]);
        let p: BTreeSet<_> = weighted_partitions(2, &[1; 5]).into_iter().collect();
        assert_eq!(p.len(), 15);
        assert_eq!(p, brute_partitions(2, &[1; 5]));
        let p: BTreeSet<_> = weighted_partitions(3, &[2, 1]).into_iter().collect();
        assert_eq!(p, BTreeSet::from([vec![0, 3], vec![1, 1]]));
        assert_eq!(
            weighted_partitions(5, &[2, 3, 1]).into_iter().collect::<BTreeSet<_>>(),
            brute_partitions(5, &[2, 3, 1])
        );
    }

    #[test]
    fn seeds() {
        let q = EnumQuery::new(cubic_h(), 1, -1).unwrap();
        let s = seed_exceptional(&q);
        assert_eq!(s, (1..6).map(|i| DivClass::e(6, i)).collect());
        assert!(seed_exceptional(&EnumQuery::new(cubic_h(), 1, -2).unwrap()).is_empty());
        assert_eq!(seed_exceptional(&EnumQuery::new(cubic_h(), 0, -2).unwrap()).len(), 20);
    }

    #[test]
    fn cubic_lines_union() {
        let mut got = BTreeSet::new();
        for beta in -2..=-1 {
            got.extend(enumerate_classes(&EnumQuery::new(cubic_h(), 1, beta).unwrap()).unwrap());
        }
        let mut want = BTreeSet::new();
        for i in 1..6 {
            want.insert(DivClass::e(6, i));
            for j in i + 1..6 {
                let mut v = vec![1, 0, 0, 0, 0, 0];
                v[i] = -1;
                v[j] = -1;
                want.insert(DivClass(v));
            }
        }
        want.insert(DivClass(vec![2, -1, -1, -1, -1, -1]));
        assert_eq!(got, want);
    }

    #[test]
    fn roman_enumerations() {
        let h = roman_h();
        let got = enumerate_classes(&EnumQuery::new(h.clone(), 2, -2).unwrap()).unwrap();
        let mut want = BTreeSet::new();
        for i in 1..9 {
            for j in i + 1..9 {
                let c = h
                    .sub(&DivClass::e(9, 0))
                    .sub(&DivClass::e(9, 0))
                    .add(&DivClass::e(9, i))
                    .add(&DivClass::e(9, j));
                want.insert(c);
            }
        }
        assert_eq!(got, want);
        assert_eq!(got.len(), 28);

        let got = enumerate_classes(&EnumQuery::new(h, 2, -1).unwrap()).unwrap();
        let mut want = BTreeSet::new();
        for i in 1..9 {
            for j in i + 1..9 {
                want.insert(DivClass::e(9, 0).sub(&DivClass::e(9, i)).sub(&DivClass::e(9, j)));
            }
        }
        assert_eq!(got, want);
    }

    #[test]
    fn rejects_non_halting_queries() {
        let q = EnumQuery::new(DivClass(vec![1, -1, -1]), 0, 0).unwrap();
        assert!(enumerate_classes(&q).is_err());
        assert!(EnumQuery::new(cubic_h(), 1, -3).is_err());
        assert!(EnumQuery::new(DivClass(vec![0, -1]), 1, 0).is_err());
    }
}
