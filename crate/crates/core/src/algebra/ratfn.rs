use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::field::{Field, Rational};

/// Dense univariate polynomial over Q, low degree first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct UPoly(Vec<Rational>);

impl UPoly {
    pub fn new(mut c: Vec<Rational>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        UPoly(c)
    }

    pub fn constant(q: Rational) -> Self {
        Self::new(vec![q])
    }

    pub fn x() -> Self {
        Self::new(vec![Rational::zero(), Rational::one()])
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn lead(&self) -> Rational {
        self.0.last().cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.0.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn scale(&self, q: &Rational) -> Self {
        Self::new(self.0.iter().map(|c| c * q).collect())
    }

    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let l = self.lead().recip();
        self.scale(&l)
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.0.len().max(o.0.len());
        let z = Rational::zero();
        Self::new(
            (0..n)
                .map(|i| self.0.get(i).unwrap_or(&z) + o.0.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    pub fn neg(&self) -> Self {
        UPoly(self.0.iter().map(|c| -c).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return UPoly::default();
        }
        let mut out = vec![Rational::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, d: &Self) -> (Self, Self) {
        let dd = d.degree().expect("division by zero polynomial");
        let lead_inv = d.lead().recip();
        let mut r = self.0.clone();
        let mut q = vec![Rational::zero(); self.0.len().saturating_sub(dd)];
        while r.len() > dd && !r.is_empty() {
            let top = r.last().unwrap().clone();
            let k = r.len() - 1 - dd;
            if !top.is_zero() {
                let f = &top * &lead_inv;
                for (i, c) in d.0.iter().enumerate() {
                    r[k + i] -= &f * c;
                }
                q[k] = f;
            }
            r.pop();
        }
        (Self::new(q), Self::new(r))
    }

    /// Monic gcd, via a primitive pseudo-remainder sequence over Z.
    pub fn gcd(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.monic();
        }
        if o.is_zero() {
            return self.monic();
        }
        if self.degree() == Some(0) || o.degree() == Some(0) {
            return Self::constant(Rational::one());
        }
        let (mut a, mut b) = (primitive(self), primitive(o));
        if a.len() < b.len() {
            std::mem::swap(&mut a, &mut b);
        }
        while b.len() > 1 {
            let r = pseudo_rem(&a, &b);
            if r.is_empty() {
                break;
            }
            a = b;
            b = primitive_int(r);
        }
        if b.len() == 1 {
            return Self::constant(Rational::one());
        }
        Self::new(b.into_iter().map(Rational::from_integer).collect()).monic()
    }
}

/// Integer coefficients with content 1 and positive leading term.
fn primitive(p: &UPoly) -> Vec<BigInt> {
    let l = p.0.iter().fold(BigInt::one(), |a, c| a.lcm(c.denom()));
    primitive_int(
        p.0.iter()
            .map(|c| (c * Rational::from_integer(l.clone())).to_integer())
            .collect(),
    )
}

fn primitive_int(mut v: Vec<BigInt>) -> Vec<BigInt> {
    while v.last().is_some_and(|x| x.is_zero()) {
        v.pop();
    }
    let g = v.iter().fold(BigInt::zero(), |a, c| a.gcd(c));
    let g = if v.last().is_some_and(|x| x.is_negative()) {
        -g
    } else {
        g
    };
    if !g.is_zero() && !g.is_one() {
        v.iter_mut().for_each(|c| *c = &*c / &g);
    }
    v
}

/// A nonzero integer multiple of `a mod b`, over Z.
fn pseudo_rem(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    let db = b.len() - 1;
    let lb = &b[db];
    let mut r = a.to_vec();
    while r.len() > db {
        let top = r.pop().unwrap();
        let k = r.len() - db;
        r.iter_mut().for_each(|c| *c *= lb);
        if !top.is_zero() {
            for (i, c) in b[..db].iter().enumerate() {
                r[k + i] -= &top * c;
            }
        }
        while r.last().is_some_and(|x| x.is_zero()) && r.len() > db {
            r.pop();
        }
    }
    while r.last().is_some_and(|x| x.is_zero()) {
        r.pop();
    }
    r
}

/// A univariate rational function `num/den` over Q in lowest terms, `den` monic.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RatFn {
    num: UPoly,
    den: UPoly,
}

impl RatFn {
    pub fn new(num: UPoly, den: UPoly) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        if num.is_zero() {
            return Some(Self::from_poly(UPoly::default()));
        }
        if den.degree() == Some(0) {
            let l = den.lead().recip();
            return Some(RatFn {
                num: num.scale(&l),
                den: UPoly::constant(Rational::one()),
            });
        }
        let g = num.gcd(&den);
        let (mut n, _) = num.div_rem(&g);
        let (mut d, _) = den.div_rem(&g);
        let l = d.lead().recip();
        n = n.scale(&l);
        d = d.scale(&l);
        Some(RatFn { num: n, den: d })
    }

    pub fn from_poly(p: UPoly) -> Self {
        RatFn {
            num: p,
            den: UPoly::constant(Rational::one()),
        }
    }

    /// The indeterminate.
    pub fn var() -> Self {
        Self::from_poly(UPoly::x())
    }

    pub fn num(&self) -> &UPoly {
        &self.num
    }

    pub fn den(&self) -> &UPoly {
        &self.den
    }

    /// Value at a rational point, `None` at a pole.
    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(x) / d)
        }
    }
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for (i, c) in self.0.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            parts.push(match i {
                0 => format!("{c}"),
                1 => format!("({c})*x"),
                _ => format!("({c})*x^{i}"),
            });
        }
        write!(f, "{}", parts.join(" + "))
    }
}

impl fmt::Display for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.degree() == Some(0) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl Add<&RatFn> for RatFn {
    type Output = RatFn;
    fn add(self, o: &RatFn) -> RatFn {
        if self.den == o.den {
            return RatFn::new(self.num.add(&o.num), self.den).unwrap();
        }
        RatFn::new(
            self.num.mul(&o.den).add(&o.num.mul(&self.den)),
            self.den.mul(&o.den),
        )
        .unwrap()
    }
}

impl Sub<&RatFn> for RatFn {
    type Output = RatFn;
    fn sub(self, o: &RatFn) -> RatFn {
        self + &(-o.clone())
    }
}

impl Mul<&RatFn> for RatFn {
    type Output = RatFn;
    fn mul(self, o: &RatFn) -> RatFn {
        RatFn::new(self.num.mul(&o.num), self.den.mul(&o.den)).unwrap()
    }
}

impl Add for RatFn {
    type Output = RatFn;
    fn add(self, o: RatFn) -> RatFn {
        self + &o
    }
}

impl Sub for RatFn {
    type Output = RatFn;
    fn sub(self, o: RatFn) -> RatFn {
        self - &o
    }
}

impl Mul for RatFn {
    type Output = RatFn;
    fn mul(self, o: RatFn) -> RatFn {
        self * &o
    }
}

impl Neg for RatFn {
    type Output = RatFn;
    fn neg(self) -> RatFn {
        RatFn {
            num: self.num.neg(),
            den: self.den,
        }
    }
}

impl Zero for RatFn {
    fn zero() -> Self {
        Self::from_poly(UPoly::default())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RatFn {
    fn one() -> Self {
        Self::from_poly(UPoly::constant(Rational::one()))
    }
}

impl Field for RatFn {
    fn inv(&self) -> Option<Self> {
        if self.num.is_zero() {
            None
        } else {
            RatFn::new(self.den.clone(), self.num.clone())
        }
    }
    fn from_rational(q: &Rational) -> Self {
        Self::from_poly(UPoly::constant(q.clone()))
    }
    /// Polynomial coordinates without a common factor.
    fn normalize_projective(v: &mut [Self]) {
        let den = v.iter().fold(UPoly::constant(Rational::one()), |l, x| {
            let g = l.gcd(&x.den);
            l.mul(&x.den).div_rem(&g).0
        });
        let nums: Vec<UPoly> = v
            .iter()
            .map(|x| x.num.mul(&den.div_rem(&x.den).0))
            .collect();
        let g = nums.iter().fold(UPoly::default(), |g, n| g.gcd(n));
        if g.is_zero() {
            return;
        }
        for (x, n) in v.iter_mut().zip(nums) {
            *x = RatFn::from_poly(n.div_rem(&g).0);
        }
    }
    fn to_rational(&self) -> Option<Rational> {
        match self.num.degree() {
            None => Some(Rational::zero()),
            Some(0) if self.den.degree() == Some(0) => Some(self.num.lead()),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::int;

    #[test]
    fn reduces_to_lowest_terms() {
        let x = RatFn::var();
        let one = RatFn::one();
        let num = (x.clone() - &one) * (x.clone() + &one);
        let f = num.try_div(&(x.clone() - &one)).unwrap();
        assert_eq!(f, x + &one);
    }

    #[test]
    fn gcd_is_monic() {
        let a = UPoly::new(vec![int(-2), int(2)]);
        let b = UPoly::new(vec![int(-3), int(0), int(3)]);
        assert_eq!(a.gcd(&b), UPoly::new(vec![int(-1), int(1)]));
    }

    #[test]
    fn eval_at_pole() {
        let x = RatFn::var();
        let f = RatFn::one().try_div(&x).unwrap();
        assert_eq!(f.eval(&int(0)), None);
        assert_eq!(f.eval(&int(2)), Some(crate::algebra::field::rat(1, 2)));
    }
}
