use num_traits::Zero;
use std::fmt;

use crate::algebra::field::{exact_root, rational_sqrt};
use crate::algebra::{Field, Rational};

use super::Genus1Error;

/// Short Weierstrass curve `Y² = X³ + A X + B`.
#[derive(Clone, Debug, PartialEq)]
pub struct WeierstrassCurve<F> {
    pub a: F,
    pub b: F,
}

#[derive(Clone, Debug, PartialEq)]
pub enum ECPoint<F> {
    Infinity,
    Affine(F, F),
}

impl<F: Field> ECPoint<F> {
    pub fn is_infinity(&self) -> bool {
        matches!(self, ECPoint::Infinity)
    }

    pub fn x(&self) -> Option<&F> {
        match self {
            ECPoint::Affine(x, _) => Some(x),
            ECPoint::Infinity => None,
        }
    }

    pub fn y(&self) -> Option<&F> {
        match self {
            ECPoint::Affine(_, y) => Some(y),
            ECPoint::Infinity => None,
        }
    }
}

impl<F: Field> fmt::Display for ECPoint<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ECPoint::Infinity => write!(f, "O"),
            ECPoint::Affine(x, y) => write!(f, "({x}, {y})"),
        }
    }
}

/// Long Weierstrass coefficients `y² + a1 xy + a3 y = x³ + a2 x² + a4 x + a6`.
#[derive(Clone, Debug, PartialEq)]
pub struct LongWeierstrass<F> {
    pub a1: F,
    pub a2: F,
    pub a3: F,
    pub a4: F,
    pub a6: F,
}

impl<F: Field> LongWeierstrass<F> {
    pub fn b2(&self) -> F {
        self.a1.square() + F::from_int(4) * &self.a2
    }

    pub fn b4(&self) -> F {
        F::from_int(2) * &self.a4 + self.a1.clone() * &self.a3
    }

    pub fn b6(&self) -> F {
        self.a3.square() + F::from_int(4) * &self.a6
    }

    pub fn contains(&self, x: &F, y: &F) -> bool {
        let lhs = y.square() + self.a1.clone() * x * y + self.a3.clone() * y;
        let rhs = x.square() * x + self.a2.clone() * &x.square() + self.a4.clone() * x + &self.a6;
        lhs == rhs
    }

    /// The short model `Y² = X³ − 27 c4 X − 54 c6` with `X = 36x + 3 b2`,
    /// `Y = 108 (2y + a1 x + a3)`.
    pub fn to_short(&self) -> Result<WeierstrassCurve<F>, Genus1Error> {
        let (b2, b4, b6) = (self.b2(), self.b4(), self.b6());
        let c4 = b2.square() - F::from_int(24) * &b4;
        let c6 = -(b2.square() * &b2) + F::from_int(36) * &b2 * &b4 - F::from_int(216) * &b6;
        WeierstrassCurve::new(-(F::from_int(27) * &c4), -(F::from_int(54) * &c6))
    }

    pub fn point_to_short(&self, p: &ECPoint<F>) -> ECPoint<F> {
        match p {
            ECPoint::Infinity => ECPoint::Infinity,
            ECPoint::Affine(x, y) => {
                let xs = F::from_int(36) * x + &(F::from_int(3) * &self.b2());
                let ys =
                    F::from_int(108) * (F::from_int(2) * y + &(self.a1.clone() * x) + &self.a3);
                ECPoint::Affine(xs, ys)
            }
        }
    }

    pub fn point_from_short(&self, p: &ECPoint<F>) -> ECPoint<F> {
        match p {
            ECPoint::Infinity => ECPoint::Infinity,
            ECPoint::Affine(xs, ys) => {
                let x =
                    (xs.clone() - &(F::from_int(3) * &self.b2())) * &F::from_int(36).inv().unwrap();
                let s = ys.clone() * &F::from_int(108).inv().unwrap()
                    - &(self.a1.clone() * &x)
                    - &self.a3;
                let y = s * &F::from_int(2).inv().unwrap();
                ECPoint::Affine(x, y)
            }
        }
    }
}

impl<F: Field> WeierstrassCurve<F> {
    pub fn new(a: F, b: F) -> Result<Self, Genus1Error> {
        let c = Self { a, b };
        if c.discriminant().is_zero() {
            return Err(Genus1Error::Singular(format!(
                "Y^2 = X^3 + ({})X + ({}) has zero discriminant",
                c.a, c.b
            )));
        }
        Ok(c)
    }

    /// `−16 (4A³ + 27B²)`.
    pub fn discriminant(&self) -> F {
        let t = F::from_int(4) * &self.a.pow(3) + &(F::from_int(27) * &self.b.square());
        -(F::from_int(16) * &t)
    }

    pub fn j_invariant(&self) -> F {
        let num = F::from_int(-1728) * &(F::from_int(64) * &self.a.pow(3));
        num.try_div(&self.discriminant()).unwrap()
    }

    pub fn contains(&self, p: &ECPoint<F>) -> bool {
        match p {
            ECPoint::Infinity => true,
            ECPoint::Affine(x, y) => y.square() == x.square() * x + &(self.a.clone() * x) + &self.b,
        }
    }

    pub fn point(&self, x: F, y: F) -> Result<ECPoint<F>, Genus1Error> {
        let p = ECPoint::Affine(x, y);
        self.require(&p)?;
        Ok(p)
    }

    fn require(&self, p: &ECPoint<F>) -> Result<(), Genus1Error> {
        if self.contains(p) {
            Ok(())
        } else {
            Err(Genus1Error::NotOnCurve(p.to_string()))
        }
    }

    pub fn neg(&self, p: &ECPoint<F>) -> ECPoint<F> {
        match p {
            ECPoint::Infinity => ECPoint::Infinity,
            ECPoint::Affine(x, y) => ECPoint::Affine(x.clone(), -y.clone()),
        }
    }

    pub fn add(&self, p: &ECPoint<F>, q: &ECPoint<F>) -> Result<ECPoint<F>, Genus1Error> {
        self.require(p)?;
        self.require(q)?;
        Ok(self.add_unchecked(p, q))
    }

    fn add_unchecked(&self, p: &ECPoint<F>, q: &ECPoint<F>) -> ECPoint<F> {
        let (x1, y1, x2, y2) = match (p, q) {
            (ECPoint::Infinity, _) => return q.clone(),
            (_, ECPoint::Infinity) => return p.clone(),
            (ECPoint::Affine(x1, y1), ECPoint::Affine(x2, y2)) => (x1, y1, x2, y2),
        };
        let slope = if x1 == x2 {
            if (y1.clone() + y2).is_zero() {
                return ECPoint::Infinity;
            }
            let num = F::from_int(3) * &x1.square() + &self.a;
            num.try_div(&(F::from_int(2) * y1)).unwrap()
        } else {
            (y2.clone() - y1).try_div(&(x2.clone() - x1)).unwrap()
        };
        let x3 = slope.square() - x1 - x2;
        let y3 = slope * &(x1.clone() - &x3) - y1;
        ECPoint::Affine(x3, y3)
    }

    /// `n·P` by double-and-add; negative `n` uses `−P`.
    pub fn mul(&self, n: i64, p: &ECPoint<F>) -> Result<ECPoint<F>, Genus1Error> {
        self.require(p)?;
        let mut base = if n < 0 { self.neg(p) } else { p.clone() };
        let mut k = n.unsigned_abs();
        let mut acc = ECPoint::Infinity;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.add_unchecked(&acc, &base);
            }
            k >>= 1;
            if k > 0 {
                base = self.add_unchecked(&base, &base);
            }
        }
        Ok(acc)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TorsionOrder {
    Finite(u32),
    Infinite,
}

impl WeierstrassCurve<Rational> {
    /// Order of `P` over Q: finite orders are at most 12 with 11 impossible,
    /// so absence of `kP = O` for `k ≤ 12` proves infinite order.
    pub fn torsion_test(&self, p: &ECPoint<Rational>) -> Result<TorsionOrder, Genus1Error> {
        self.require(p)?;
        let mut q = p.clone();
        for k in 1..=12u32 {
            if q.is_infinity() {
                return Ok(TorsionOrder::Finite(k));
            }
            q = self.add_unchecked(&q, p);
        }
        Ok(TorsionOrder::Infinite)
    }

    pub fn is_integral(&self) -> bool {
        self.a.is_integer() && self.b.is_integer()
    }

    /// On an integral model every torsion point has integer coordinates, so the
    /// smallest `n ≤ max` with `nP` non-integral certifies infinite order.
    pub fn lutz_nagell_certificate(
        &self,
        p: &ECPoint<Rational>,
        max: i64,
    ) -> Result<Option<i64>, Genus1Error> {
        if !self.is_integral() {
            return Err(Genus1Error::Degenerate("model is not integral".into()));
        }
        self.require(p)?;
        let mut q = p.clone();
        for n in 1..=max {
            if let ECPoint::Affine(x, y) = &q {
                if !x.is_integer() || !y.is_integer() {
                    return Ok(Some(n));
                }
            }
            q = self.add_unchecked(&q, p);
        }
        Ok(None)
    }

    /// Scale `u` with `A' = u⁴A`, `B' = u⁶B` when `other` is isomorphic to `self` over Q.
    /// The isomorphism sends `(X, Y)` to `(u²X, u³Y)`.
    pub fn isomorphism_to(&self, other: &Self) -> Option<Rational> {
        if self.a.is_zero() != other.a.is_zero() || self.b.is_zero() != other.b.is_zero() {
            return None;
        }
        let u2 = if !self.a.is_zero() && !self.b.is_zero() {
            (&other.b * &self.a) / (&other.a * &self.b)
        } else if self.a.is_zero() {
            rational_root(&(&other.b / &self.b), 3)?
        } else {
            rational_sqrt(&(&other.a / &self.a))?
        };
        let u = rational_sqrt(&u2)?;
        let u4 = &u2 * &u2;
        if &u4 * &self.a == other.a && &u4 * &u2 * &self.b == other.b {
            Some(u)
        } else {
            None
        }
    }

    pub fn map_isomorphism(u: &Rational, p: &ECPoint<Rational>) -> ECPoint<Rational> {
        match p {
            ECPoint::Infinity => ECPoint::Infinity,
            ECPoint::Affine(x, y) => {
                let u2 = u * u;
                ECPoint::Affine(x * &u2, y * &(&u2 * u))
            }
        }
    }
}

fn rational_root(q: &Rational, k: u32) -> Option<Rational> {
    Some(Rational::new(
        exact_root(q.numer(), k)?,
        exact_root(q.denom(), k)?,
    ))
}

/// Number of decimal digits in the largest numerator or denominator of a point.
pub fn point_size(p: &ECPoint<Rational>) -> usize {
    match p {
        ECPoint::Infinity => 0,
        ECPoint::Affine(x, y) => [x.numer(), x.denom(), y.numer(), y.denom()]
            .iter()
            .map(|n| n.magnitude().to_string().len())
            .max()
            .unwrap_or(0),
    }
}
