use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::algebra::{Field, MPoly, Monomial, Rational};

use super::quartic::{form_eval, form_mul, BinaryForm};
use super::Genus1Error;

/// Ternary quadratic form `vᵀ M v` with `M` symmetric.
#[derive(Clone, Debug, PartialEq)]
pub struct Conic<F> {
    pub m: [[F; 3]; 3],
}

impl<F: Field> Conic<F> {
    /// From the coefficients of `x², y², z², xy, xz, yz`.
    pub fn from_coeffs(c: [F; 6]) -> Self {
        let half = F::from_int(2).inv().unwrap();
        let [xx, yy, zz, xy, xz, yz] = c;
        let xy = xy * &half;
        let xz = xz * &half;
        let yz = yz * &half;
        Conic {
            m: [
                [xx, xy.clone(), xz.clone()],
                [xy, yy, yz.clone()],
                [xz, yz, zz],
            ],
        }
    }

    /// From a homogeneous quadratic polynomial in three variables.
    pub fn from_poly(p: &MPoly<F>) -> Result<Self, Genus1Error> {
        if p.vars().len() != 3 || !p.is_homogeneous_of(2) {
            return Err(Genus1Error::Degenerate(
                "conic must be a ternary quadratic form".into(),
            ));
        }
        let c = |e: [u32; 3]| p.coeff(&Monomial(e.to_vec()));
        Ok(Self::from_coeffs([
            c([2, 0, 0]),
            c([0, 2, 0]),
            c([0, 0, 2]),
            c([1, 1, 0]),
            c([1, 0, 1]),
            c([0, 1, 1]),
        ]))
    }

    pub fn bilinear(&self, p: &[F; 3], v: &[F; 3]) -> F {
        let mut acc = F::zero();
        for i in 0..3 {
            for j in 0..3 {
                if !self.m[i][j].is_zero() {
                    acc = acc + self.m[i][j].clone() * &p[i] * &v[j];
                }
            }
        }
        acc
    }

    pub fn eval(&self, p: &[F; 3]) -> F {
        self.bilinear(p, p)
    }

    pub fn determinant(&self) -> F {
        let m = &self.m;
        m[0][0].clone() * &(m[1][1].clone() * &m[2][2] - m[1][2].clone() * &m[2][1])
            - m[0][1].clone() * &(m[1][0].clone() * &m[2][2] - m[1][2].clone() * &m[2][0])
            + m[0][2].clone() * &(m[1][0].clone() * &m[2][1] - m[1][1].clone() * &m[2][0])
    }
}

/// Quadratic parametrization `(a : b) ↦ (φ0 : φ1 : φ2)` of a conic through a
/// base point, with its inverse.
#[derive(Clone, Debug, PartialEq)]
pub struct ConicParam<F> {
    pub conic: Conic<F>,
    pub base: [F; 3],
    /// Binary quadratic forms, entry `i` the coefficient of `a^i b^(2−i)`.
    pub forms: [BinaryForm<F>; 3],
    pivot: usize,
    free: [usize; 2],
}

pub fn parametrize_conic<F: Field>(
    conic: &Conic<F>,
    base: &[F; 3],
) -> Result<ConicParam<F>, Genus1Error> {
    if conic.determinant().is_zero() {
        return Err(Genus1Error::Degenerate("conic has zero determinant".into()));
    }
    let pivot = base
        .iter()
        .position(|x| !x.is_zero())
        .ok_or_else(|| Genus1Error::Degenerate("base point is zero".into()))?;
    if !conic.eval(base).is_zero() {
        return Err(Genus1Error::NotOnCurve(
            "base point is not on the conic".into(),
        ));
    }
    let free = match pivot {
        0 => [1, 2],
        1 => [0, 2],
        _ => [0, 1],
    };
    let m = &conic.m;
    let (j1, j2) = (free[0], free[1]);
    let two = F::from_int(2);
    // C(v) for v = a e_j1 + b e_j2.
    let cv = [
        m[j2][j2].clone(),
        two.clone() * &m[j1][j2],
        m[j1][j1].clone(),
    ];
    let e = |k: usize| {
        let mut v = [F::zero(), F::zero(), F::zero()];
        v[k] = F::one();
        v
    };
    // 2·B(p, v) as a linear form [b, a].
    let bl = vec![
        two.clone() * &conic.bilinear(base, &e(j2)),
        two * &conic.bilinear(base, &e(j1)),
    ];
    let forms: [BinaryForm<F>; 3] = std::array::from_fn(|t| {
        let mut f: Vec<F> = cv.iter().map(|c| -(c.clone() * &base[t])).collect();
        let lin = if t == j1 {
            Some(vec![F::zero(), F::one()])
        } else if t == j2 {
            Some(vec![F::one(), F::zero()])
        } else {
            None
        };
        if let Some(lin) = lin {
            for (k, v) in form_mul(&bl, &lin).into_iter().enumerate() {
                f[k] = f[k].clone() + v;
            }
        }
        f
    });
    Ok(ConicParam {
        conic: conic.clone(),
        base: base.clone(),
        forms,
        pivot,
        free,
    })
}

impl<F: Field> ConicParam<F> {
    pub fn eval(&self, a: &F, b: &F) -> [F; 3] {
        std::array::from_fn(|t| form_eval(&self.forms[t], a, b))
    }

    /// `(a : b)` of a conic point.
    pub fn inverse(&self, x: &[F; 3]) -> Result<[F; 2], Genus1Error> {
        if x.iter().all(|c| c.is_zero()) {
            return Err(Genus1Error::Degenerate("zero point".into()));
        }
        if !self.conic.eval(x).is_zero() {
            return Err(Genus1Error::NotOnCurve("point is not on the conic".into()));
        }
        let p = &self.base;
        let lam = x[self.pivot].try_div(&p[self.pivot]).unwrap();
        let [j1, j2] = self.free;
        let mu = x[j1].clone() - &(lam.clone() * &p[j1]);
        let nu = x[j2].clone() - &(lam * &p[j2]);
        if mu.is_zero() && nu.is_zero() {
            let e = |k: usize| {
                let mut v = [F::zero(), F::zero(), F::zero()];
                v[k] = F::one();
                v
            };
            let b1 = self.conic.bilinear(p, &e(j1));
            let b2 = self.conic.bilinear(p, &e(j2));
            return Ok([b2, -b1]);
        }
        Ok([mu, nu])
    }

    /// `C(φ(a, b))` as a binary quartic; identically zero for a valid map.
    pub fn composed(&self) -> BinaryForm<F> {
        let mut out = vec![F::zero(); 5];
        for s in 0..3 {
            for t in 0..3 {
                let c = &self.conic.m[s][t];
                if c.is_zero() {
                    continue;
                }
                for (k, v) in form_mul(&self.forms[s], &self.forms[t])
                    .into_iter()
                    .enumerate()
                {
                    out[k] = out[k].clone() + c.clone() * &v;
                }
            }
        }
        out
    }
}

impl ConicParam<Rational> {
    /// Rescales the three forms to coprime integer coefficients.
    pub fn normalize_integral(&mut self) {
        let all: Vec<&Rational> = self.forms.iter().flatten().collect();
        let den = all.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        let num = all.iter().fold(BigInt::zero(), |acc, q| {
            acc.gcd(&(q.numer() * &den / q.denom()))
        });
        if num.is_zero() {
            return;
        }
        let mut s = Rational::new(den, num.abs());
        let lead = self.forms.iter().flatten().find(|q| !q.is_zero()).unwrap();
        if lead.is_negative() {
            s = -s;
        }
        for f in self.forms.iter_mut() {
            for c in f.iter_mut() {
                *c = &*c * &s;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::int;

    fn pythagoras() -> Conic<Rational> {
        Conic::from_coeffs([int(1), int(1), int(-1), int(0), int(0), int(0)])
    }

    #[test]
    fn pythagorean_parametrization() {
        let c = pythagoras();
        let mut p = parametrize_conic(&c, &[int(1), int(0), int(1)]).unwrap();
        p.normalize_integral();
        assert!(p.composed().iter().all(|x| x.is_zero()));
        let (a, b) = (int(2), int(1));
        let pt = p.eval(&a, &b);
        assert!(c.eval(&pt).is_zero());
        let ab = p.inverse(&pt).unwrap();
        assert_eq!(&ab[0] * &b, &ab[1] * &a);
    }

    #[test]
    fn base_point_uses_tangent() {
        let c = pythagoras();
        let p = parametrize_conic(&c, &[int(1), int(0), int(1)]).unwrap();
        let ab = p.inverse(&[int(1), int(0), int(1)]).unwrap();
        let img = p.eval(&ab[0], &ab[1]);
        assert_eq!(&img[0] * &int(1), img[2]);
        assert!(img[1].is_zero());
    }

    #[test]
    fn degenerate_and_off_conic() {
        let c = Conic::from_coeffs([int(1), int(-1), int(0), int(0), int(0), int(0)]);
        assert!(parametrize_conic(&c, &[int(1), int(1), int(0)]).is_err());
        assert!(parametrize_conic(&pythagoras(), &[int(1), int(1), int(1)]).is_err());
    }
}
