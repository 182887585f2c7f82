use num_traits::{One, Zero};

use super::field::{Field, Rational};
use super::mpoly::MPoly;
use super::AlgebraError;

/// Norm of `g0 + g1 θ + g2 θ²` where θ has the given monic cubic minimal
/// polynomial (coefficients low degree first).
pub fn norm_form<C: Field>(
    g: [&MPoly<C>; 3],
    minpoly: &[Rational],
) -> Result<MPoly<C>, AlgebraError> {
    if minpoly.len() != 4 || minpoly[3].is_zero() {
        return Err(AlgebraError::BadMinpoly("norm form needs a cubic".into()));
    }
    if !minpoly[3].is_one() {
        return Err(AlgebraError::BadMinpoly("not monic".into()));
    }
    norm_any(&g, minpoly)
}

/// Norm for a monic minimal polynomial of any degree `n = g.len()`.
pub(crate) fn norm_any<C: Field>(
    g: &[&MPoly<C>],
    minpoly: &[Rational],
) -> Result<MPoly<C>, AlgebraError> {
    let n = g.len();
    if minpoly.len() != n + 1 {
        return Err(AlgebraError::BadMinpoly(format!(
            "expected degree {n}, got {}",
            minpoly.len().saturating_sub(1)
        )));
    }
    let vars = g[0].vars().clone();
    for p in g {
        if p.vars() != &vars {
            return Err(AlgebraError::VariableMismatch);
        }
    }
    let f: Vec<C> = minpoly.iter().map(C::from_rational).collect();
    // Column j holds the coordinates of g·θ^j.
    let mut cols: Vec<Vec<MPoly<C>>> = Vec::with_capacity(n);
    let mut cur: Vec<MPoly<C>> = g.iter().map(|p| (*p).clone()).collect();
    for _ in 0..n {
        cols.push(cur.clone());
        let top = cur[n - 1].clone();
        let mut next = vec![MPoly::zero(&vars); n];
        for i in (1..n).rev() {
            next[i] = cur[i - 1].clone();
        }
        for (i, slot) in next.iter_mut().enumerate() {
            *slot = slot.sub(&top.scale(&f[i]));
        }
        cur = next;
    }
    let m: Vec<Vec<MPoly<C>>> = (0..n)
        .map(|i| (0..n).map(|j| cols[j][i].clone()).collect())
        .collect();
    Ok(det(&m))
}

/// Determinant by cofactor expansion along the first row.
fn det<C: Field>(m: &[Vec<MPoly<C>>]) -> MPoly<C> {
    let n = m.len();
    match n {
        1 => m[0][0].clone(),
        2 => m[0][0].mul(&m[1][1]).sub(&m[0][1].mul(&m[1][0])),
        _ => {
            let mut acc = MPoly::zero(m[0][0].vars());
            for j in 0..n {
                if m[0][j].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<MPoly<C>>> = m[1..]
                    .iter()
                    .map(|row| {
                        row.iter()
                            .enumerate()
                            .filter(|(k, _)| *k != j)
                            .map(|(_, x)| x.clone())
                            .collect()
                    })
                    .collect();
                let t = m[0][j].mul(&det(&minor));
                acc = if j % 2 == 0 { acc.add(&t) } else { acc.sub(&t) };
            }
            acc
        }
    }
}
