//! Plane cubics with a chosen origin and the chord-tangent group law.

use crate::algebra::{Field, MPoly, Monomial};

use super::Genus1Error;

#[derive(Clone, Debug)]
pub struct PlaneCubic<F> {
    pub f: MPoly<F>,
    pub origin: [F; 3],
    grad: [MPoly<F>; 3],
}

fn dot<F: Field>(a: &[F; 3], b: &[F; 3]) -> F {
    a[0].clone() * &b[0] + a[1].clone() * &b[1] + a[2].clone() * &b[2]
}

fn cross<F: Field>(a: &[F; 3], b: &[F; 3]) -> [F; 3] {
    [
        a[1].clone() * &b[2] - a[2].clone() * &b[1],
        a[2].clone() * &b[0] - a[0].clone() * &b[2],
        a[0].clone() * &b[1] - a[1].clone() * &b[0],
    ]
}

fn is_null<F: Field>(p: &[F; 3]) -> bool {
    p.iter().all(|x| x.is_zero())
}

/// Determinant by Gaussian elimination over a field.
pub fn det_gauss<F: Field>(mut m: Vec<Vec<F>>) -> F {
    let n = m.len();
    let mut acc = F::one();
    for c in 0..n {
        let Some(r) = (c..n).find(|&r| !m[r][c].is_zero()) else {
            return F::zero();
        };
        if r != c {
            m.swap(r, c);
            acc = -acc;
        }
        let piv = m[c][c].clone();
        acc = acc * &piv;
        let inv = piv.inv().unwrap();
        for r in c + 1..n {
            if m[r][c].is_zero() {
                continue;
            }
            let k = m[r][c].clone() * &inv;
            for j in c..n {
                let v = k.clone() * &m[c][j];
                m[r][j] = m[r][j].clone() - v;
            }
        }
    }
    acc
}

/// Resultant (up to a constant) of the three partials of a ternary cubic,
/// via the determinant of the quadrics and the partials of their Jacobian.
pub fn cubic_resultant<F: Field>(f: &MPoly<F>) -> F {
    let q: Vec<MPoly<F>> = (0..3).map(|i| f.derivative(i)).collect();
    let jac = |i: usize, j: usize| q[i].derivative(j);
    let m3 = |r: [usize; 3]| jac(0, r[0]).mul(&jac(1, r[1])).mul(&jac(2, r[2]));
    let j = m3([0, 1, 2])
        .add(&m3([1, 2, 0]))
        .add(&m3([2, 0, 1]))
        .sub(&m3([2, 1, 0]))
        .sub(&m3([0, 2, 1]))
        .sub(&m3([1, 0, 2]));
    let rows: Vec<MPoly<F>> = q
        .into_iter()
        .chain((0..3).map(|i| j.derivative(i)))
        .collect();
    let monos: [[u32; 3]; 6] = [
        [2, 0, 0],
        [0, 2, 0],
        [0, 0, 2],
        [1, 1, 0],
        [1, 0, 1],
        [0, 1, 1],
    ];
    let mat = rows
        .iter()
        .map(|p| {
            monos
                .iter()
                .map(|e| p.coeff(&Monomial(e.to_vec())))
                .collect()
        })
        .collect();
    det_gauss(mat)
}

impl<F: Field> PlaneCubic<F> {
    pub fn new(f: MPoly<F>, origin: [F; 3]) -> Result<Self, Genus1Error> {
        if f.vars().len() != 3 || !f.is_homogeneous_of(3) {
            return Err(Genus1Error::Degenerate(
                "expected a ternary cubic form".into(),
            ));
        }
        if cubic_resultant(&f).is_zero() {
            return Err(Genus1Error::Singular("cubic has a singular point".into()));
        }
        let grad = std::array::from_fn(|i| f.derivative(i));
        let c = Self { f, origin, grad };
        if !c.contains(&c.origin) {
            return Err(Genus1Error::NotOnCurve("origin".into()));
        }
        Ok(c)
    }

    pub fn contains(&self, p: &[F; 3]) -> bool {
        !is_null(p) && self.f.eval(p).is_zero()
    }

    fn gradient(&self, p: &[F; 3]) -> [F; 3] {
        std::array::from_fn(|i| self.grad[i].eval(p))
    }

    pub fn is_flex(&self, p: &[F; 3]) -> bool {
        let t = self.third(p, p).unwrap();
        same_point(&t, p)
    }

    /// Third intersection of the line through `p` and `q` (tangent if equal).
    pub fn third(&self, p: &[F; 3], q: &[F; 3]) -> Result<[F; 3], Genus1Error> {
        if !self.contains(p) || !self.contains(q) {
            return Err(Genus1Error::NotOnCurve("chord endpoint".into()));
        }
        let r = if same_point(p, q) {
            let g = self.gradient(p);
            let mut d = cross(&g, p);
            let mut k = 0;
            while is_null(&d) || same_point(&d, p) {
                let mut e = [F::zero(), F::zero(), F::zero()];
                e[k] = F::one();
                d = cross(&g, &e);
                k += 1;
            }
            let fd = self.f.eval(&d);
            let gd = dot(&self.gradient(&d), p);
            std::array::from_fn(|i| fd.clone() * &p[i] - gd.clone() * &d[i])
        } else {
            let alpha = dot(&self.gradient(p), q);
            let beta = dot(&self.gradient(q), p);
            std::array::from_fn(|i| beta.clone() * &p[i] - alpha.clone() * &q[i])
        };
        if is_null(&r) {
            return Err(Genus1Error::Degenerate("line lies on the cubic".into()));
        }
        Ok(normalize(&r))
    }

    pub fn add(&self, p: &[F; 3], q: &[F; 3]) -> Result<[F; 3], Genus1Error> {
        let r = self.third(p, q)?;
        self.third(&r, &self.origin)
    }

    pub fn neg(&self, p: &[F; 3]) -> Result<[F; 3], Genus1Error> {
        let oo = self.third(&self.origin, &self.origin)?;
        self.third(p, &oo)
    }

    pub fn mul(&self, n: i64, p: &[F; 3]) -> Result<[F; 3], Genus1Error> {
        let mut acc = normalize(&self.origin);
        let mut base = if n < 0 { self.neg(p)? } else { normalize(p) };
        let mut k = n.unsigned_abs();
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add(&acc, &base)?;
            }
            k >>= 1;
            if k > 0 {
                base = self.add(&base, &base)?;
            }
        }
        Ok(acc)
    }
}

/// Scales so the last nonzero coordinate is one.
pub fn normalize<F: Field>(p: &[F; 3]) -> [F; 3] {
    match p.iter().rposition(|x| !x.is_zero()) {
        Some(k) => {
            let inv = p[k].inv().unwrap();
            std::array::from_fn(|i| p[i].clone() * &inv)
        }
        None => p.clone(),
    }
}

pub fn same_point<F: Field>(p: &[F; 3], q: &[F; 3]) -> bool {
    is_null(&cross(p, q)) && !is_null(p) && !is_null(q)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::int;
    use crate::algebra::{vars_from, Rational};
    use num_traits::Zero;

    fn cubic(coeffs: &[([u32; 3], i64)]) -> MPoly<Rational> {
        let v = vars_from(&["x", "y", "z"]);
        MPoly::from_terms(
            &v,
            coeffs.iter().map(|(e, c)| (Monomial(e.to_vec()), int(*c))),
        )
    }

    #[test]
    fn resultant_detects_singularity() {
        let cusp = cubic(&[([0, 2, 1], 1), ([3, 0, 0], -1)]);
        assert!(cubic_resultant(&cusp).is_zero());
        let node = cubic(&[([0, 2, 1], 1), ([3, 0, 0], -1), ([2, 0, 1], -1)]);
        assert!(cubic_resultant(&node).is_zero());
        let fermat = cubic(&[([3, 0, 0], 1), ([0, 3, 0], 1), ([0, 0, 3], 1)]);
        assert!(!cubic_resultant(&fermat).is_zero());
    }

    #[test]
    fn matches_weierstrass_law() {
        // y²z = x³ − 2xz² + z³ with origin (0:1:0).
        let f = cubic(&[
            ([0, 2, 1], 1),
            ([3, 0, 0], -1),
            ([1, 0, 2], 2),
            ([0, 0, 3], -1),
        ]);
        let c = PlaneCubic::new(f, [int(0), int(1), int(0)]).unwrap();
        let p = [int(1), int(0), int(1)];
        let q = [int(0), int(1), int(1)];
        let s = c.add(&p, &q).unwrap();
        let e = crate::genus1::WeierstrassCurve::new(int(-2), int(1)).unwrap();
        let ps = e.point(int(1), int(0)).unwrap();
        let qs = e.point(int(0), int(1)).unwrap();
        let r = e.add(&ps, &qs).unwrap();
        let (x, y) = (r.x().unwrap().clone(), r.y().unwrap().clone());
        assert_eq!(s, [x, y, int(1)]);
        let m3 = c.mul(3, &q).unwrap();
        let e3 = e.mul(3, &qs).unwrap();
        assert_eq!(m3[0], *e3.x().unwrap());
        assert!(c.mul(2, &p).unwrap()[2].is_zero());
        let back = c
            .add(&c.mul(-2, &q).unwrap(), &c.mul(2, &q).unwrap())
            .unwrap();
        assert!(same_point(&back, &c.origin));
        assert!(c.is_flex(&c.origin));
    }
}
