//! Multivariate gcd (recursive primitive PRS) and Sylvester resultants.

use super::poly::{Monomial, MultiPoly};

fn lead_in(p: &MultiPoly, var: usize) -> (u32, MultiPoly) {
    let coeffs = p.coefficients_in(var);
    let d = coeffs.len() - 1;
    (d as u32, coeffs[d].clone())
}

fn var_power(nvars: usize, var: usize, e: u32) -> MultiPoly {
    let mut m = Monomial::one(nvars);
    m.0[var] = e;
    MultiPoly::monomial(nvars, m, super::FieldElem::one())
}

/// Pseudo-remainder of `f` by `g` with respect to `var`.
pub fn pseudo_rem(f: &MultiPoly, g: &MultiPoly, var: usize) -> MultiPoly {
    let (dg, lc_g) = lead_in(g, var);
    let mut r = f.clone();
    while !r.is_zero() {
        let (dr, lc_r) = lead_in(&r, var);
        if dr < dg {
            break;
        }
        let shifted = &(&lc_r * &var_power(r.nvars(), var, dr - dg)) * g;
        r = &(&lc_g * &r) - &shifted;
    }
    r
}

/// Gcd of the coefficients of `p` viewed as a polynomial in `var`.
pub fn content_in(p: &MultiPoly, var: usize) -> MultiPoly {
    if !p.uses_var(var) {
        return p.monic();
    }
    let mut g = MultiPoly::zero(p.nvars());
    for c in p.coefficients_in(var).iter().filter(|c| !c.is_zero()) {
        g = gcd(&g, c);
        if g.is_constant() {
            break;
        }
    }
    g
}

pub fn primitive_part(p: &MultiPoly, var: usize) -> MultiPoly {
    if p.is_zero() {
        return p.clone();
    }
    p.exact_div(&content_in(p, var)).expect("content divides")
}

/// True when the gcd of `a` and `b` is certainly free of `var`: at a point
/// where the leading coefficient of `a` in `var` survives, the gcd keeps its
/// degree in `var` and divides both specializations.
fn gcd_free_of(a: &MultiPoly, b: &MultiPoly, var: usize) -> bool {
    if !a.uses_var(var) || !b.uses_var(var) {
        return true;
    }
    let n = a.nvars();
    for trial in 0..3i64 {
        let point: Vec<super::FieldElem> = (0..n).map(|i| super::FieldElem::int(2 + trial * 7 + 3 * i as i64)).collect();
        let special = |p: &MultiPoly| {
            (0..n).filter(|&i| i != var).fold(p.clone(), |acc, i| acc.eval_var(i, &point[i]))
        };
        let (_, lc) = lead_in(a, var);
        if special(&lc).is_zero() {
            continue;
        }
        let (Some(ua), Some(ub)) = (special(a).to_univariate(var), special(b).to_univariate(var)) else {
            continue;
        };
        let g = super::roots::gcd(&ua, &ub);
        return g.len() == 1;
    }
    false
}

/// Monic greatest common divisor over the coefficient field.
pub fn gcd(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    let n = a.nvars();
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_constant() || b.is_constant() || (0..n).all(|v| gcd_free_of(a, b, v)) {
        return MultiPoly::one(n);
    }
    let var = (0..n).find(|&v| a.uses_var(v) || b.uses_var(v)).expect("nonconstant");
    let ca = content_in(a, var);
    let cb = content_in(b, var);
    let c = gcd(&ca, &cb);
    let pa = a.exact_div(&ca).expect("content divides");
    let pb = b.exact_div(&cb).expect("content divides");
    let (mut f, mut g) = if pa.degree_in(var) >= pb.degree_in(var) { (pa, pb) } else { (pb, pa) };
    while !g.is_zero() {
        let r = pseudo_rem(&f, &g, var);
        f = g;
        g = primitive_part(&r, var);
    }
    (&c * &primitive_part(&f, var)).monic()
}

/// Common divisor of a list, normalized; each input divided by it shares no
/// further nonconstant factor over the active field.
pub fn gcd_content(ps: &[MultiPoly]) -> MultiPoly {
    let n = ps.first().map(|p| p.nvars()).unwrap_or(0);
    let mut g = MultiPoly::zero(n);
    for p in ps {
        g = gcd(&g, p);
        if g.is_constant() && !g.is_zero() {
            return MultiPoly::one(n);
        }
    }
    if g.is_zero() {
        MultiPoly::one(n)
    } else {
        g.normalized()
    }
}

/// Determinant of a square matrix of polynomials by fraction-free elimination.
pub fn determinant(mut m: Vec<Vec<MultiPoly>>, nvars: usize) -> MultiPoly {
    let n = m.len();
    if n == 0 {
        return MultiPoly::one(nvars);
    }
    let mut negate = false;
    let mut prev = MultiPoly::one(nvars);
    for k in 0..n.saturating_sub(1) {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(k, i);
                    negate = !negate;
                }
                None => return MultiPoly::zero(nvars),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                m[i][j] = num.exact_div(&prev).expect("Bareiss division is exact");
            }
        }
        prev = m[k][k].clone();
    }
    let det = m[n - 1][n - 1].clone();
    if negate {
        -&det
    } else {
        det
    }
}

/// Sylvester resultant with respect to `var`.
pub fn resultant(p: &MultiPoly, q: &MultiPoly, var: usize) -> MultiPoly {
    let nvars = p.nvars();
    if p.is_zero() || q.is_zero() {
        return MultiPoly::zero(nvars);
    }
    let pc = p.coefficients_in(var);
    let qc = q.coefficients_in(var);
    let m = pc.len() - 1;
    let n = qc.len() - 1;
    let size = m + n;
    let zero = MultiPoly::zero(nvars);
    let mut mat = vec![vec![zero; size]; size];
    for row in 0..n {
        for (k, c) in pc.iter().rev().enumerate() {
            mat[row][row + k] = c.clone();
        }
    }
    for row in 0..m {
        for (k, c) in qc.iter().rev().enumerate() {
            mat[n + row][row + k] = c.clone();
        }
    }
    determinant(mat, nvars)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactmath::text::{default_names, parse_poly};
    use crate::exactmath::FieldDesc;

    fn p(s: &str) -> MultiPoly {
        parse_poly(s, &default_names(3), &FieldDesc::Rationals).unwrap()
    }

    #[test]
    fn gcd_of_reducible_series() {
        assert_eq!(gcd_content(&[p("x2*x1"), p("x2*(x2-x0)")]), p("x2"));
    }

    #[test]
    fn gcd_with_self() {
        let a = p("3*x0^2*x1 - x2^3 + x1");
        assert!(gcd(&a, &a).is_scalar_multiple_of(&a));
    }

    #[test]
    fn gcd_coprime() {
        assert_eq!(gcd(&p("x0^2+x1^2"), &p("x0-x1")), MultiPoly::one(3));
    }

    #[test]
    fn gcd_planted_factor() {
        let g = p("x0*x1 - x2^2 + 2*x0");
        let a = &g * &p("x0 + x1 + 1");
        let b = &g * &p("x1^2 - x2");
        assert_eq!(gcd(&a, &b), g.monic());
    }

    #[test]
    fn resultant_linear() {
        // Res(x - a, x - b, x) = a - b with a = x1, b = x2.
        let r = resultant(&p("x0 - x1"), &p("x0 - x2"), 0);
        assert!(r.is_scalar_multiple_of(&p("x1 - x2")));
        assert_eq!(r, p("x1 - x2"));
    }

    #[test]
    fn resultant_sylvester_by_hand() {
        // | 1 0 1 |
        // | 1 -1 0 |  = 2
        // | 0 1 -1 |
        let r = resultant(&p("x0^2+1"), &p("x0-1"), 0);
        assert_eq!(r, MultiPoly::constant(3, 2.into()));
    }

    #[test]
    fn resultant_vanishes_on_common_root() {
        let r = resultant(&p("(x0-x1)*(x0+2)"), &p("(x0-x1)*(x0-3)"), 0);
        assert!(r.is_zero());
    }
}
