//! Alexander polynomial from the Wirtinger presentation's Fox matrix.

use crate::diagram::{PlanarDiagram, UnionFind};
use crate::error::Result;
use crate::poly::{LaurentPoly, Var};

/// The `n × n` Alexander matrix: one row per crossing, one column per
/// overarc.
pub fn alexander_matrix(d: &PlanarDiagram) -> Vec<Vec<LaurentPoly>> {
    let r = d.relabeled();
    let xs = r.crossings();
    let n = xs.len();
    let mut uf = UnionFind::new(2 * n + 1);
    for x in xs {
        uf.union(x[1] as usize, x[3] as usize);
    }
    let mut class = vec![usize::MAX; 2 * n + 1];
    let mut next = 0;
    for l in 1..=2 * n {
        let root = uf.find(l);
        if class[root] == usize::MAX {
            class[root] = next;
            next += 1;
        }
        class[l] = class[root];
    }
    let t = |e: i32, c: i64| LaurentPoly::monomial(Var::T, e, c);
    let mut m = vec![vec![LaurentPoly::zero(Var::T); next]; n];
    for (c, x) in xs.iter().enumerate() {
        let (i, j, k) = (class[x[0] as usize], class[x[2] as usize], class[x[1] as usize]);
        let (ck, ci, cj) = if r.sign(c) > 0 {
            (&t(0, 1) - &t(1, 1), t(1, 1), t(0, -1))
        } else {
            (&t(1, 1) - &t(0, 1), t(0, 1), t(1, -1))
        };
        m[c][k] += &ck;
        m[c][i] += &ci;
        m[c][j] += &cj;
    }
    m
}

/// Determinant by fraction-free (Bareiss) elimination.
pub fn determinant(mut a: Vec<Vec<LaurentPoly>>) -> LaurentPoly {
    let n = a.len();
    let var = Var::T;
    if n == 0 {
        return LaurentPoly::one(var);
    }
    let mut sign = 1i64;
    let mut prev = LaurentPoly::one(var);
    for k in 0..n {
        if a[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return LaurentPoly::zero(var);
            };
            a.swap(k, r);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
            a[i][k] = LaurentPoly::zero(var);
        }
        prev = a[k][k].clone();
    }
    a[n - 1][n - 1].scale(&sign.into())
}

/// Symmetrizes `±tᵏ·p` so that `p(t) = p(t⁻¹)` and `p(1) = 1`.
pub fn conway_normalize(p: &LaurentPoly) -> LaurentPoly {
    let (Some(lo), Some(hi)) = (p.min_exp(), p.max_exp()) else {
        return p.clone();
    };
    let s = p.shift(-(lo + hi) / 2);
    match s.eval_int(1) {
        Some(v) if v < 0.into() => s.scale(&(-1).into()),
        _ => s,
    }
}

pub fn alexander(d: &PlanarDiagram) -> Result<LaurentPoly> {
    d.require_knot()?;
    if d.n_crossings() == 0 {
        return Ok(LaurentPoly::one(Var::T));
    }
    let mut m = alexander_matrix(d);
    m.pop();
    for row in &mut m {
        row.pop();
    }
    Ok(conway_normalize(&determinant(m)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{realize_dt, DtCode};

    #[test]
    fn small_knots() {
        let tref = PlanarDiagram::parse("X(1,4,2,5) X(3,6,4,1) X(5,2,6,3)").unwrap();
        assert_eq!(alexander(&tref).unwrap(), LaurentPoly::parse(Var::T, "t^-1-1+t").unwrap());
        let fig8 = realize_dt(&DtCode::parse("4_1 4 6 8 2").unwrap()).unwrap();
        assert_eq!(alexander(&fig8).unwrap(), LaurentPoly::parse(Var::T, "-t^-1+3-t").unwrap());
        assert!(alexander(&PlanarDiagram::parse("X(1,2,2,1)").unwrap()).unwrap().is_one());
        assert!(alexander(&PlanarDiagram::unknot()).unwrap().is_one());
    }

    #[test]
    fn links_rejected() {
        let hopf = PlanarDiagram::parse("X(1,3,2,4) X(3,1,4,2)").unwrap();
        assert!(alexander(&hopf).is_err());
    }
}
