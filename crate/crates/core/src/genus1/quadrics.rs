//! Smooth intersections of two quadrics in P³, reduced to a quartic model
//! through a conic parametrization of one of them.

use crate::algebra::{Field, MPoly, Monomial};

use super::conic::{parametrize_conic, Conic, ConicParam};
use super::quartic::{form_eval, form_mul, quartic_discriminant, BinaryForm, QuarticModel};
use super::Genus1Error;

#[derive(Clone, Debug)]
pub struct QuadricIntersection<F> {
    pub qa: MPoly<F>,
    pub qb: MPoly<F>,
    pub base: [F; 4],
}

fn mono(e: [u32; 4]) -> Monomial {
    Monomial(e.to_vec())
}

fn pair(i: usize, j: usize) -> Monomial {
    let mut e = [0u32; 4];
    e[i] += 1;
    e[j] += 1;
    mono(e)
}

/// Symmetric Gram matrix of a quaternary quadratic form.
pub fn gram4<F: Field>(q: &MPoly<F>) -> [[F; 4]; 4] {
    let half = F::from_int(2).inv().unwrap();
    std::array::from_fn(|i| {
        std::array::from_fn(|j| {
            let c = q.coeff(&pair(i, j));
            if i == j {
                c
            } else {
                c * &half
            }
        })
    })
}

/// `det(λ·A + μ·B)` as a binary quartic, entry `k` the coefficient of `λ^k μ^(4−k)`.
pub fn pencil_determinant<F: Field>(qa: &MPoly<F>, qb: &MPoly<F>) -> BinaryForm<F> {
    let (a, b) = (gram4(qa), gram4(qb));
    let mut out = vec![F::zero(); 5];
    let perms = permutations4();
    for (p, sign) in perms {
        let mut term = vec![F::one()];
        for (i, &j) in p.iter().enumerate() {
            term = form_mul(&term, &[b[i][j].clone(), a[i][j].clone()]);
        }
        for (k, v) in term.into_iter().enumerate() {
            out[k] = if sign {
                out[k].clone() + v
            } else {
                out[k].clone() - v
            };
        }
    }
    out
}

fn permutations4() -> Vec<([usize; 4], bool)> {
    let mut out = Vec::with_capacity(24);
    for a in 0..4 {
        for b in 0..4 {
            for c in 0..4 {
                for d in 0..4 {
                    let p = [a, b, c, d];
                    let mut seen = [false; 4];
                    if p.iter().any(|&x| std::mem::replace(&mut seen[x], true)) {
                        continue;
                    }
                    let mut inv = 0;
                    for i in 0..4 {
                        for j in i + 1..4 {
                            if p[i] > p[j] {
                                inv += 1;
                            }
                        }
                    }
                    out.push((p, inv % 2 == 0));
                }
            }
        }
    }
    out
}

/// Reduction data: the conic parametrization of one quadric and the residual
/// quadratic in the eliminated coordinate.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadricReduction<F> {
    pub model: QuarticModel<F>,
    param: ConicParam<F>,
    /// Eliminated coordinate and the remaining three, in order.
    elim: usize,
    rest: [usize; 3],
    alpha: F,
    lin: [F; 3],
    rest_form: Conic<F>,
}

impl<F: Field> QuadricIntersection<F> {
    pub fn new(qa: MPoly<F>, qb: MPoly<F>, base: [F; 4]) -> Result<Self, Genus1Error> {
        for q in [&qa, &qb] {
            if q.vars().len() != 4 || !q.is_homogeneous_of(2) {
                return Err(Genus1Error::Degenerate(
                    "expected quaternary quadrics".into(),
                ));
            }
        }
        let s = Self { qa, qb, base };
        if !s.contains(&s.base) {
            return Err(Genus1Error::NotOnCurve("base point".into()));
        }
        Ok(s)
    }

    pub fn contains(&self, p: &[F; 4]) -> bool {
        !p.iter().all(|x| x.is_zero()) && self.qa.eval(p).is_zero() && self.qb.eval(p).is_zero()
    }

    /// Nonzero exactly when the intersection is a smooth genus-one curve.
    pub fn pencil_discriminant(&self) -> F {
        quartic_discriminant(&pencil_determinant(&self.qa, &self.qb))
    }

    pub fn reduce(&self) -> Result<QuadricReduction<F>, Genus1Error> {
        if self.pencil_discriminant().is_zero() {
            return Err(Genus1Error::Singular(
                "pencil determinant has a repeated root".into(),
            ));
        }
        let mut last = Genus1Error::Unsupported("no quadric omits a coordinate".into());
        for (c, o) in [(&self.qa, &self.qb), (&self.qb, &self.qa)] {
            for elim in 0..4 {
                if c.degree_in(elim) != 0 || o.coeff(&pair(elim, elim)).is_zero() {
                    continue;
                }
                match self.reduce_with(c, o, elim) {
                    Ok(r) => return Ok(r),
                    Err(e) => last = e,
                }
            }
        }
        Err(last)
    }

    fn reduce_with(
        &self,
        c: &MPoly<F>,
        o: &MPoly<F>,
        elim: usize,
    ) -> Result<QuadricReduction<F>, Genus1Error> {
        let rest: [usize; 3] = {
            let v: Vec<usize> = (0..4).filter(|&i| i != elim).collect();
            [v[0], v[1], v[2]]
        };
        let sub = |q: &MPoly<F>| {
            let k = |i: usize, j: usize| q.coeff(&pair(rest[i], rest[j]));
            Conic::from_coeffs([k(0, 0), k(1, 1), k(2, 2), k(0, 1), k(0, 2), k(1, 2)])
        };
        let conic = sub(c);
        let b3 = rest.map(|i| self.base[i].clone());
        let param = parametrize_conic(&conic, &b3)?;
        let alpha = o.coeff(&pair(elim, elim));
        let lin = rest.map(|i| o.coeff(&pair(elim, i)));
        let rest_form = sub(o);
        // n² = L(φ)² − 4αR(φ) with n = 2α·m/λ + L(φ).
        let mut lphi = vec![F::zero(); 3];
        for (k, l) in lin.iter().enumerate() {
            for (t, v) in param.forms[k].iter().enumerate() {
                lphi[t] = lphi[t].clone() + l.clone() * v;
            }
        }
        let mut f = form_mul(&lphi, &lphi);
        let four_alpha = F::from_int(4) * &alpha;
        for s in 0..3 {
            for t in 0..3 {
                let g = &rest_form.m[s][t];
                if g.is_zero() {
                    continue;
                }
                let prod = form_mul(&param.forms[s], &param.forms[t]);
                for (k, v) in prod.into_iter().enumerate() {
                    f[k] = f[k].clone() - four_alpha.clone() * g * &v;
                }
            }
        }
        let mut red = QuadricReduction {
            model: QuarticModel {
                c: F::one(),
                f,
                base: [F::zero(), F::zero(), F::zero()],
            },
            param,
            elim,
            rest,
            alpha,
            lin,
            rest_form,
        };
        let base = red.forward(&self.base)?;
        red.model = QuarticModel::new(F::one(), red.model.f.clone(), base)?;
        Ok(red)
    }
}

impl<F: Field> QuadricReduction<F> {
    fn linear(&self, x: &[F; 3]) -> F {
        self.lin
            .iter()
            .zip(x)
            .fold(F::zero(), |acc, (l, v)| acc + l.clone() * v)
    }

    /// Point of the intersection to `(a : b : n)` on the quartic model.
    pub fn forward(&self, p: &[F; 4]) -> Result<[F; 3], Genus1Error> {
        let x = self.rest.map(|i| p[i].clone());
        let [a, b] = self.param.inverse(&x)?;
        let phi = self.param.eval(&a, &b);
        let k = phi
            .iter()
            .position(|v| !v.is_zero())
            .ok_or_else(|| Genus1Error::Indeterminate("conic parameter".into()))?;
        let lam = x[k].try_div(&phi[k]).unwrap();
        if lam.is_zero() {
            return Err(Genus1Error::Indeterminate(
                "point off the conic chart".into(),
            ));
        }
        let m = p[self.elim].try_div(&lam).unwrap();
        let n = F::from_int(2) * &self.alpha * &m + self.linear(&phi);
        Ok([a, b, n])
    }

    /// `(a : b : n)` back to projective coordinates on the intersection.
    pub fn backward(&self, q: &[F; 3]) -> Result<[F; 4], Genus1Error> {
        if q[0].is_zero() && q[1].is_zero() {
            return Err(Genus1Error::Degenerate("a and b both zero".into()));
        }
        let phi = self.param.eval(&q[0], &q[1]);
        let two_alpha = F::from_int(2) * &self.alpha;
        let m = (q[2].clone() - self.linear(&phi))
            .try_div(&two_alpha)
            .unwrap();
        let mut out: [F; 4] = std::array::from_fn(|_| F::zero());
        for (k, &i) in self.rest.iter().enumerate() {
            out[i] = phi[k].clone();
        }
        out[self.elim] = m;
        Ok(out)
    }

    /// Residual quadratic `R` in the remaining coordinates, for inspection.
    pub fn residual_value(&self, x: &[F; 3]) -> F {
        self.rest_form.eval(x)
    }

    pub fn parametrized(&self, a: &F, b: &F) -> [F; 3] {
        self.param.eval(a, b)
    }

    pub fn quartic_at(&self, a: &F, b: &F) -> F {
        form_eval(&self.model.f, a, b)
    }
}

/// Projective equality of points in P³.
pub fn same_projective<F: Field>(p: &[F], q: &[F]) -> bool {
    let k = match p.iter().position(|v| !v.is_zero()) {
        Some(k) => k,
        None => return q.iter().all(|v| v.is_zero()),
    };
    if q[k].is_zero() {
        return false;
    }
    let lam = q[k].try_div(&p[k]).unwrap();
    p.iter().zip(q).all(|(a, b)| a.clone() * &lam == *b)
}

#[cfg(test)]
pub(crate) mod tests_support {
    use super::*;
    use crate::algebra::field::int;
    use crate::algebra::{parse_infix, vars_from, EvalContext, Rational};

    pub fn poly(src: &str) -> MPoly<Rational> {
        let vars = vars_from(&["X", "Y", "Z", "W"]);
        let e = parse_infix(src).unwrap();
        let rf = EvalContext::new(vars.clone()).eval(&e).unwrap();
        rf.num().map_coeffs(|c| c.as_rational().unwrap().clone())
    }

    pub fn ex1(u: i64) -> QuadricIntersection<Rational> {
        let qa = poly(&format!("X^2 - 2*X*Y - 2*{u}*Y^2 - Z^2"));
        let qb = poly(&format!("X^2 + 2*{u}*X*Y - 2*{u}*Y^2 - W^2"));
        QuadricIntersection::new(qa, qb, [int(1), int(0), int(1), int(1)]).unwrap()
    }
}

#[cfg(test)]
mod tests {
    use super::tests_support::{ex1, poly};
    use super::*;
    use crate::algebra::field::int;
    use crate::genus1::WeierstrassCurve;
    use num_traits::Zero;

    #[test]
    fn reduction_round_trip() {
        let c = ex1(2);
        let red = c.reduce().unwrap();
        let seed = [int(1), int(0), int(1), int(-1)];
        let q = red.forward(&seed).unwrap();
        assert!(red.model.contains(&q));
        let back = red.backward(&q).unwrap();
        assert!(same_projective(&back, &seed));
        assert!(c.contains(&back));
    }

    #[test]
    fn weierstrass_model_matches() {
        let red = ex1(2).reduce().unwrap();
        let (e, _) = red.model.to_weierstrass().unwrap();
        let target = WeierstrassCurve::new(int(2808), int(35424)).unwrap();
        assert_eq!(e.j_invariant(), target.j_invariant());
    }

    #[test]
    fn degenerate_pencil_rejected() {
        // u = −1 makes the pencil singular.
        let qa = poly("X^2 - 2*X*Y + 2*Y^2 - Z^2");
        let qb = poly("X^2 - 2*X*Y + 2*Y^2 - W^2");
        let c = QuadricIntersection::new(qa, qb, [int(1), int(0), int(1), int(1)]).unwrap();
        assert!(c.pencil_discriminant().is_zero());
        assert!(c.reduce().is_err());
    }
}
