//! Brute-force class enumeration over a coefficient box.

use std::collections::BTreeSet;

use nsfam::nslattice::DivClass;

/// Minimum box size.
pub const BOX: i64 = 12;

fn dot(h: &[i64], c: &[i64]) -> i64 {
    h[0] * c[0] - h[1..].iter().zip(&c[1..]).map(|(a, b)| a * b).sum::<i64>()
}

/// Every class with `1 <= c0 <= c0_max` and `ci <= 0`, plus the `e_i` and
/// `e_i - e_j`, with `h.c = alpha` and `c^2 = beta`.
pub fn brute_force(h: &[i64], alpha: i64, beta: i64, c0_max: i64) -> BTreeSet<DivClass> {
    let r = h.len() - 1;
    let mut out = BTreeSet::new();
    let mut push = |c: Vec<i64>| {
        let sq = c[0] * c[0] - c[1..].iter().map(|x| x * x).sum::<i64>();
        if dot(h, &c) == alpha && sq == beta {
            out.insert(DivClass(c));
        }
    };
    for i in 1..=r {
        let mut e = vec![0; r + 1];
        e[i] = 1;
        push(e.clone());
        for j in 1..=r {
            if j != i {
                let mut d = e.clone();
                d[j] = -1;
                push(d);
            }
        }
    }
    for c0 in 1..=c0_max {
        let mut cur = vec![c0];
        rec(&mut cur, r, c0 * c0 - beta, &mut push);
    }
    out
}

fn rec(cur: &mut Vec<i64>, r: usize, budget: i64, push: &mut impl FnMut(Vec<i64>)) {
    if cur.len() == r {
        // the last coefficient is forced by c^2
        let m = (budget.max(0) as f64).sqrt().round() as i64;
        if m * m == budget {
            cur.push(-m);
            push(cur.clone());
            cur.pop();
        }
        return;
    }
    for m in 0.. {
        if m * m > budget {
            break;
        }
        cur.push(-m);
        rec(cur, r, budget - m * m, push);
        cur.pop();
    }
}

/// Largest `t` with `f(t) <= 0`, scanning up to `limit`.
pub fn last_nonpositive(f: impl Fn(i64) -> i128, limit: i64) -> Option<i64> {
    (1..=limit).rev().find(|&t| f(t) <= 0)
}
