//! Dense linear algebra over the active field.

use crate::exactmath::FieldElem;

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(rows: &mut Vec<Vec<FieldElem>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][col].inv().expect("nonzero pivot");
        for x in rows[r].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..rows.len() {
            if i == r || rows[i][col].is_zero() {
                continue;
            }
            let f = rows[i][col].clone();
            for j in col..ncols {
                let d = &f * &rows[r][j];
                rows[i][j] -= &d;
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

/// Basis of `{v : A v = 0}`, one vector per free column, with a 1 in that
/// column.
pub fn nullspace(mut rows: Vec<Vec<FieldElem>>, ncols: usize) -> Vec<Vec<FieldElem>> {
    let pivots = rref(&mut rows, ncols);
    let mut out = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![FieldElem::zero(); ncols];
        v[free] = FieldElem::one();
        for (row, &pc) in rows.iter().zip(&pivots) {
            v[pc] = -&row[free];
        }
        out.push(v);
    }
    out
}

pub fn rank(mut rows: Vec<Vec<FieldElem>>, ncols: usize) -> usize {
    rref(&mut rows, ncols).len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<FieldElem>> {
        rows.iter().map(|r| r.iter().map(|&x| FieldElem::int(x)).collect()).collect()
    }

    #[test]
    fn nullspace_of_plane() {
        let ns = nullspace(m(&[&[1, 0, 1]]), 3);
        assert_eq!(ns, m(&[&[0, 1, 0], &[-1, 0, 1]]));
    }

    #[test]
    fn nullspace_vectors_are_killed() {
        let a = m(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, -1, 2]]);
        let ns = nullspace(a.clone(), 4);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            for row in &a {
                let s = row.iter().zip(v).fold(FieldElem::zero(), |acc, (x, y)| &acc + &(x * y));
                assert!(s.is_zero());
            }
        }
        assert_eq!(rank(a, 4), 2);
    }

    #[test]
    fn full_rank_and_empty() {
        assert!(nullspace(m(&[&[1, 0], &[0, 1]]), 2).is_empty());
        assert_eq!(nullspace(Vec::new(), 2).len(), 2);
    }
}
