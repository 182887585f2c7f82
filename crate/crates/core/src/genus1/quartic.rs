//! Curves `c·w² = F(a, b)` for a binary quartic `F`, in weighted projective
//! coordinates `(a : b : w)` with `(a, b, w) ~ (λa, λb, λ²w)`.

use crate::algebra::Field;

use super::weierstrass::{ECPoint, LongWeierstrass, WeierstrassCurve};
use super::Genus1Error;

/// Homogeneous binary form; entry `i` is the coefficient of `a^i b^(d−i)`.
pub type BinaryForm<F> = Vec<F>;

pub fn form_mul<F: Field>(p: &[F], q: &[F]) -> BinaryForm<F> {
    let mut out = vec![F::zero(); p.len() + q.len() - 1];
    for (i, x) in p.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in q.iter().enumerate() {
            out[i + j] = out[i + j].clone() + x.clone() * y;
        }
    }
    out
}

pub fn form_eval<F: Field>(p: &[F], a: &F, b: &F) -> F {
    let d = p.len() - 1;
    let mut acc = F::zero();
    for (i, c) in p.iter().enumerate() {
        if !c.is_zero() {
            acc = acc + c.clone() * &a.pow(i as u32) * &b.pow((d - i) as u32);
        }
    }
    acc
}

/// `F(x0·ρ + x1·σ, y0·ρ + y1·σ)` as a form in `(ρ, σ)`, for any degree.
pub fn form_compose<F: Field>(p: &[F], x: [&F; 2], y: [&F; 2]) -> BinaryForm<F> {
    let d = p.len() - 1;
    // Linear forms in (ρ, σ) as [σ-coefficient, ρ-coefficient].
    let lx = vec![x[1].clone(), x[0].clone()];
    let ly = vec![y[1].clone(), y[0].clone()];
    let mut px = vec![vec![F::one()]];
    let mut py = vec![vec![F::one()]];
    for i in 1..=d {
        px.push(form_mul(&px[i - 1], &lx));
        py.push(form_mul(&py[i - 1], &ly));
    }
    let mut out = vec![F::zero(); d + 1];
    for (i, c) in p.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let t = form_mul(&px[i], &py[d - i]);
        for (j, v) in t.into_iter().enumerate() {
            out[j] = out[j].clone() + c.clone() * &v;
        }
    }
    out
}

/// Discriminant of a binary quartic up to a nonzero constant: `4I³ − J²`.
pub fn quartic_discriminant<F: Field>(f: &[F]) -> F {
    let n = |k: i64| F::from_int(k);
    let (a, b, c, d, e) = (&f[4], &f[3], &f[2], &f[1], &f[0]);
    let i = n(12) * a * e - n(3) * b * d + c.square();
    let j = n(72) * a * c * e + n(9) * b * c * d
        - n(27) * a * &d.square()
        - n(27) * e * &b.square()
        - n(2) * &c.pow(3);
    n(4) * &i.pow(3) - j.square()
}

#[derive(Clone, Debug, PartialEq)]
pub struct QuarticModel<F> {
    pub c: F,
    pub f: BinaryForm<F>,
    pub base: [F; 3],
}

impl<F: Field> QuarticModel<F> {
    pub fn new(c: F, f: BinaryForm<F>, base: [F; 3]) -> Result<Self, Genus1Error> {
        if f.len() != 5 {
            return Err(Genus1Error::Degenerate(
                "quartic needs five coefficients".into(),
            ));
        }
        if c.is_zero() {
            return Err(Genus1Error::Degenerate("zero scale constant".into()));
        }
        if quartic_discriminant(&f).is_zero() {
            return Err(Genus1Error::Singular("quartic is not squarefree".into()));
        }
        let m = Self { c, f, base };
        if !m.contains(&m.base) {
            return Err(Genus1Error::NotOnCurve(format!("base {}", show(&m.base))));
        }
        Ok(m)
    }

    /// `c·w² = f(t)` with `f` low degree first and base `(t0, w0)`.
    pub fn affine(c: F, f: BinaryForm<F>, t0: F, w0: F) -> Result<Self, Genus1Error> {
        let mut f = f;
        f.resize(5, F::zero());
        Self::new(c, f, [t0, F::one(), w0])
    }

    pub fn contains(&self, p: &[F; 3]) -> bool {
        if p[0].is_zero() && p[1].is_zero() {
            return false;
        }
        self.c.clone() * &p[2].square() == form_eval(&self.f, &p[0], &p[1])
    }

    /// Representative with `b = 1`, or `a = 1` when `b = 0`.
    pub fn normalize(p: &[F; 3]) -> [F; 3] {
        let lam = if !p[1].is_zero() {
            p[1].inv().unwrap()
        } else {
            p[0].inv().expect("a and b both zero")
        };
        [
            p[0].clone() * &lam,
            p[1].clone() * &lam,
            p[2].clone() * &lam.square(),
        ]
    }

    pub fn same_point(p: &[F; 3], q: &[F; 3]) -> bool {
        Self::normalize(p) == Self::normalize(q)
    }

    pub fn to_weierstrass(&self) -> Result<(WeierstrassCurve<F>, QuarticMap<F>), Genus1Error> {
        let [a0, b0, w0] = self.base.clone();
        let (k, l) = if !b0.is_zero() {
            (F::one(), F::zero())
        } else {
            (F::zero(), F::one())
        };
        let det = a0.clone() * &l - k.clone() * &b0;
        let cinv = self.c.inv().unwrap();
        let g: Vec<F> = form_compose(&self.f, [&k, &a0], [&l, &b0])
            .into_iter()
            .map(|x| x * &cinv)
            .collect();
        // g[i] is the coefficient of ρ^i σ^(4−i); g[0] = w0².
        let (cc, dd, bb, aa) = (g[2].clone(), g[1].clone(), g[3].clone(), g[4].clone());
        let q = w0;
        let long = if !q.is_zero() {
            let q2 = q.square();
            let a1 = dd.try_div(&q).unwrap();
            let a2 = cc.clone() - dd.square().try_div(&(F::from_int(4) * &q2)).unwrap();
            let a3 = F::from_int(2) * &q * &bb;
            let a4 = -(F::from_int(4) * &q2 * &aa);
            let a6 = a2.clone() * &a4;
            LongWeierstrass { a1, a2, a3, a4, a6 }
        } else {
            if dd.is_zero() {
                return Err(Genus1Error::Singular(
                    "base point is a multiple root".into(),
                ));
            }
            LongWeierstrass {
                a1: F::zero(),
                a2: cc.clone(),
                a3: F::zero(),
                a4: bb.clone() * &dd,
                a6: aa.clone() * &dd.square(),
            }
        };
        let short = long.to_short()?;
        let map = QuarticMap {
            model: self.clone(),
            a0,
            b0,
            k,
            l,
            det,
            q,
            c2: cc,
            d1: dd,
            long,
            short: short.clone(),
        };
        Ok((short, map))
    }
}

fn show<F: Field>(p: &[F]) -> String {
    let parts: Vec<String> = p.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(" : "))
}

/// Exact map from a [`QuarticModel`] to a short Weierstrass curve sending the
/// base point to infinity.
#[derive(Clone, Debug)]
pub struct QuarticMap<F> {
    pub model: QuarticModel<F>,
    a0: F,
    b0: F,
    k: F,
    l: F,
    det: F,
    q: F,
    c2: F,
    d1: F,
    pub long: LongWeierstrass<F>,
    pub short: WeierstrassCurve<F>,
}

impl<F: Field> QuarticMap<F> {
    fn long_special(&self) -> (F, F) {
        let lw = &self.long;
        let a2 = lw.a2.clone();
        (-a2.clone(), lw.a1.clone() * &a2 - &lw.a3)
    }

    /// Image of a curve point on the long model.
    pub fn forward_long(&self, p: &[F; 3]) -> Result<ECPoint<F>, Genus1Error> {
        if !self.model.contains(p) {
            return Err(Genus1Error::NotOnCurve(show(p)));
        }
        let [a, b, w] = p.clone();
        let dinv = self.det.inv().unwrap();
        let sigma = (self.l.clone() * &a - self.k.clone() * &b) * &dinv;
        let rho = (self.a0.clone() * &b - self.b0.clone() * &a) * &dinv;
        let n = |k: i64| F::from_int(k);
        let q = &self.q;
        if q.is_zero() {
            if rho.is_zero() {
                return Ok(ECPoint::Infinity);
            }
            let x = (self.d1.clone() * &sigma).try_div(&rho).unwrap();
            let y = (self.d1.clone() * &w).try_div(&rho.square()).unwrap();
            return Ok(ECPoint::Affine(x, y));
        }
        if rho.is_zero() {
            let v = w.try_div(&sigma.square()).unwrap();
            if &v == q {
                return Ok(ECPoint::Infinity);
            }
            let (x, y) = self.long_special();
            return Ok(ECPoint::Affine(x, y));
        }
        let s = w.clone() + q.clone() * &sigma.square();
        let (d, c) = (&self.d1, &self.c2);
        let x = (n(2) * q * &s + d.clone() * &rho * &sigma)
            .try_div(&rho.square())
            .unwrap();
        let inner = n(4) * &q.square() * &s
            + n(2) * q * &(d.clone() * &rho * &sigma + c.clone() * &rho.square())
            - (d.square() * &rho.square()).try_div(&(n(2) * q)).unwrap();
        let y = (sigma * &inner).try_div(&rho.pow(3)).unwrap();
        Ok(ECPoint::Affine(x, y))
    }

    pub fn forward(&self, p: &[F; 3]) -> Result<ECPoint<F>, Genus1Error> {
        Ok(self.long.point_to_short(&self.forward_long(p)?))
    }

    pub fn backward_long(&self, p: &ECPoint<F>) -> Result<[F; 3], Genus1Error> {
        let n = |k: i64| F::from_int(k);
        let q = &self.q;
        let (rho, sigma, w) = match p {
            ECPoint::Infinity => (F::zero(), F::one(), q.clone()),
            ECPoint::Affine(x, y) => {
                if !self.long.contains(x, y) {
                    return Err(Genus1Error::NotOnCurve(p.to_string()));
                }
                if q.is_zero() {
                    (self.d1.clone(), x.clone(), y.clone() * &self.d1)
                } else if (x.clone(), y.clone()) == self.long_special() {
                    (F::zero(), F::one(), -q.clone())
                } else {
                    let (d, c) = (&self.d1, &self.c2);
                    let two_q = n(2) * q;
                    let rho =
                        two_q.clone() * &(x.clone() + c) - d.square().try_div(&two_q).unwrap();
                    let sigma = y.clone();
                    let w = -(q.clone() * &y.square())
                        + (rho.clone() * &(rho.clone() * x - d.clone() * y))
                            .try_div(&two_q)
                            .unwrap();
                    if rho.is_zero() && sigma.is_zero() {
                        return Err(Genus1Error::Indeterminate(format!(
                            "backward map undefined at {p}"
                        )));
                    }
                    (rho, sigma, w)
                }
            }
        };
        let a = self.a0.clone() * &sigma + &(self.k.clone() * &rho);
        let b = self.b0.clone() * &sigma + &(self.l.clone() * &rho);
        Ok([a, b, w])
    }

    pub fn backward(&self, p: &ECPoint<F>) -> Result<[F; 3], Genus1Error> {
        if !self.short.contains(p) {
            return Err(Genus1Error::NotOnCurve(p.to_string()));
        }
        self.backward_long(&self.long.point_from_short(p))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::int;
    use crate::algebra::Rational;

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn squarefree_required() {
        let f = ints(&[0, 0, 0, 0, 1]);
        assert!(QuarticModel::affine(int(1), f, int(1), int(1)).is_err());
    }

    #[test]
    fn base_to_infinity_and_back() {
        // w² = t⁴ + 3t² + 1 with base (0, 1).
        let f = ints(&[1, 0, 3, 0, 1]);
        let m = QuarticModel::affine(int(1), f, int(0), int(1)).unwrap();
        let (e, map) = m.to_weierstrass().unwrap();
        assert!(map.forward(&m.base).unwrap().is_infinity());
        let other = [int(0), int(1), int(-1)];
        let p = map.forward(&other).unwrap();
        assert!(e.contains(&p));
        let back = map.backward(&p).unwrap();
        assert!(QuarticModel::same_point(&back, &other));
    }

    #[test]
    fn round_trip_affine_points() {
        // 2w² = t⁴ − 2t³ + t + 2 through (1, ±1) and (0, ±1).
        let f = ints(&[2, 1, 0, -2, 1]);
        let m = QuarticModel::affine(int(2), f, int(1), int(1)).unwrap();
        let (e, map) = m.to_weierstrass().unwrap();
        for p in [
            [int(1), int(1), int(-1)],
            [int(0), int(1), int(1)],
            [int(0), int(1), int(-1)],
        ] {
            assert!(m.contains(&p));
            let img = map.forward(&p).unwrap();
            assert!(e.contains(&img));
            assert!(QuarticModel::same_point(&map.backward(&img).unwrap(), &p));
        }
    }

    #[test]
    fn root_as_base_point() {
        // w² = t(t−1)(t+1)(t−2): base at the simple root t = 0.
        let f = ints(&[0, 2, -1, -2, 1]);
        let m = QuarticModel::affine(int(1), f, int(0), int(0)).unwrap();
        let (e, map) = m.to_weierstrass().unwrap();
        assert!(map.forward(&m.base).unwrap().is_infinity());
        let p = [int(1), int(1), int(0)];
        let img = map.forward(&p).unwrap();
        assert!(e.contains(&img));
        assert!(QuarticModel::same_point(&map.backward(&img).unwrap(), &p));
    }
}
