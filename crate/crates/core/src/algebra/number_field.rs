use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::{One, Zero};

use super::field::{Field, Rational};
use super::AlgebraError;

/// `Q[θ]/(f)` for a monic `f` of degree 2 or 3.
#[derive(Debug, PartialEq, Eq, Hash)]
pub struct NumberField {
    name: String,
    /// Coefficients of the monic minimal polynomial, low degree first.
    minpoly: Vec<Rational>,
}

impl NumberField {
    pub fn new(name: &str, minpoly: Vec<Rational>) -> Result<Arc<Self>, AlgebraError> {
        let mut minpoly = minpoly;
        while minpoly.last().is_some_and(|c| c.is_zero()) {
            minpoly.pop();
        }
        let deg = minpoly.len().saturating_sub(1);
        if !(2..=3).contains(&deg) {
            return Err(AlgebraError::BadMinpoly(format!(
                "degree {deg}, expected 2 or 3"
            )));
        }
        if !minpoly[deg].is_one() {
            return Err(AlgebraError::BadMinpoly("not monic".into()));
        }
        Ok(Arc::new(Self {
            name: name.to_string(),
            minpoly,
        }))
    }

    pub fn degree(&self) -> usize {
        self.minpoly.len() - 1
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn minpoly(&self) -> &[Rational] {
        &self.minpoly
    }

    /// Coordinates of `θ^k` in the power basis.
    pub fn power_coords(&self, k: usize) -> Vec<Rational> {
        let n = self.degree();
        let mut v = vec![Rational::zero(); n];
        if k < n {
            v[k] = Rational::one();
            return v;
        }
        v[n - 1] = Rational::one();
        for _ in n - 1..k {
            v = self.mul_theta(&v);
        }
        v
    }

    fn mul_theta(&self, v: &[Rational]) -> Vec<Rational> {
        let n = self.degree();
        let top = v[n - 1].clone();
        let mut out = vec![Rational::zero(); n];
        for i in (1..n).rev() {
            out[i] = v[i - 1].clone();
        }
        for i in 0..n {
            out[i] -= &top * &self.minpoly[i];
        }
        out
    }

    fn reduce(&self, prod: Vec<Rational>) -> Vec<Rational> {
        let n = self.degree();
        let mut p = prod;
        while p.len() > n {
            let top = p.pop().unwrap();
            if top.is_zero() {
                continue;
            }
            let shift = p.len() - n;
            for i in 0..n {
                p[shift + i] -= &top * &self.minpoly[i];
            }
        }
        p.resize(n, Rational::zero());
        p
    }
}

/// An element of a [`NumberField`], reduced modulo the minimal polynomial.
#[derive(Clone, Debug)]
pub struct NfElem {
    field: Arc<NumberField>,
    coords: Vec<Rational>,
}

impl NfElem {
    pub fn new(field: &Arc<NumberField>, coords: Vec<Rational>) -> Self {
        let coords = field.reduce(coords);
        Self {
            field: field.clone(),
            coords,
        }
    }

    pub fn generator(field: &Arc<NumberField>) -> Self {
        Self::new(field, vec![Rational::zero(), Rational::one()])
    }

    pub fn constant(field: &Arc<NumberField>, q: Rational) -> Self {
        Self::new(field, vec![q])
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn same_field(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.field, &other.field) || self.field == other.field
    }

    pub fn is_rational(&self) -> bool {
        self.coords[1..].iter().all(|c| c.is_zero())
    }

    fn assert_same(&self, other: &Self) {
        assert!(
            self.same_field(other),
            "arithmetic between elements of different number fields"
        );
    }

    /// Matrix of multiplication by `self` in the power basis, column `j` = `self·θ^j`.
    pub fn mul_matrix(&self) -> Vec<Vec<Rational>> {
        let n = self.field.degree();
        let mut cols = Vec::with_capacity(n);
        let mut cur = self.coords.clone();
        for _ in 0..n {
            cols.push(cur.clone());
            cur = self.field.mul_theta(&cur);
        }
        (0..n)
            .map(|i| (0..n).map(|j| cols[j][i].clone()).collect())
            .collect()
    }

    pub fn norm(&self) -> Rational {
        det_rational(self.mul_matrix())
    }

    pub fn inverse(&self) -> Option<Self> {
        let n = self.field.degree();
        let mut m = self.mul_matrix();
        let mut rhs = vec![Rational::zero(); n];
        rhs[0] = Rational::one();
        // Gauss-Jordan on M x = e0.
        for col in 0..n {
            let piv = (col..n).find(|&r| !m[r][col].is_zero())?;
            m.swap(col, piv);
            rhs.swap(col, piv);
            let inv = m[col][col].recip();
            for j in 0..n {
                m[col][j] = &m[col][j] * &inv;
            }
            rhs[col] = &rhs[col] * &inv;
            for r in 0..n {
                if r != col && !m[r][col].is_zero() {
                    let f = m[r][col].clone();
                    for j in 0..n {
                        let d = &f * &m[col][j];
                        m[r][j] -= d;
                    }
                    let d = &f * &rhs[col];
                    rhs[r] -= d;
                }
            }
        }
        Some(Self::new(&self.field, rhs))
    }
}

fn det_rational(m: Vec<Vec<Rational>>) -> Rational {
    let n = m.len();
    let mut m = m;
    let mut det = Rational::one();
    for col in 0..n {
        let Some(piv) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rational::zero();
        };
        if piv != col {
            m.swap(col, piv);
            det = -det;
        }
        det *= &m[col][col];
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] / &m[col][col];
            for j in col..n {
                let d = &f * &m[col][j];
                m[r][j] -= d;
            }
        }
    }
    det
}

impl PartialEq for NfElem {
    fn eq(&self, other: &Self) -> bool {
        self.same_field(other) && self.coords == other.coords
    }
}

impl fmt::Display for NfElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            parts.push(match i {
                0 => format!("{c}"),
                1 => format!("({c})*{}", self.field.name),
                _ => format!("({c})*{}^{i}", self.field.name),
            });
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

impl Add for NfElem {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        self + &o
    }
}

impl Add<&NfElem> for NfElem {
    type Output = Self;
    fn add(mut self, o: &NfElem) -> Self {
        self.assert_same(o);
        for (a, b) in self.coords.iter_mut().zip(&o.coords) {
            *a += b;
        }
        self
    }
}

impl Sub for NfElem {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self - &o
    }
}

impl Sub<&NfElem> for NfElem {
    type Output = Self;
    fn sub(mut self, o: &NfElem) -> Self {
        self.assert_same(o);
        for (a, b) in self.coords.iter_mut().zip(&o.coords) {
            *a -= b;
        }
        self
    }
}

impl Mul for NfElem {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        self * &o
    }
}

impl Mul<&NfElem> for NfElem {
    type Output = Self;
    fn mul(self, o: &NfElem) -> Self {
        self.assert_same(o);
        let n = self.coords.len();
        let mut prod = vec![Rational::zero(); 2 * n - 1];
        for (i, a) in self.coords.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coords.iter().enumerate() {
                prod[i + j] += a * b;
            }
        }
        Self::new(&self.field, prod)
    }
}

impl Neg for NfElem {
    type Output = Self;
    fn neg(mut self) -> Self {
        for c in self.coords.iter_mut() {
            *c = -c.clone();
        }
        self
    }
}

/// An exact scalar: a rational, or an element of a declared number field.
///
/// Elements of an extension whose coordinates are purely rational are stored
/// as [`FieldElem::Rat`], so equal values always have equal representations.
#[derive(Clone, Debug, PartialEq)]
pub enum FieldElem {
    Rat(Rational),
    Ext(NfElem),
}

impl FieldElem {
    pub fn from_ext(e: NfElem) -> Self {
        if e.is_rational() {
            FieldElem::Rat(e.coords[0].clone())
        } else {
            FieldElem::Ext(e)
        }
    }

    pub fn as_rational(&self) -> Option<&Rational> {
        match self {
            FieldElem::Rat(q) => Some(q),
            FieldElem::Ext(_) => None,
        }
    }

    fn lift(&self, field: &Arc<NumberField>) -> NfElem {
        match self {
            FieldElem::Rat(q) => NfElem::constant(field, q.clone()),
            FieldElem::Ext(e) => e.clone(),
        }
    }

    fn combine(
        &self,
        other: &Self,
        rat: impl Fn(&Rational, &Rational) -> Rational,
        ext: impl Fn(NfElem, &NfElem) -> NfElem,
    ) -> Result<Self, AlgebraError> {
        match (self, other) {
            (FieldElem::Rat(a), FieldElem::Rat(b)) => Ok(FieldElem::Rat(rat(a, b))),
            (FieldElem::Ext(a), FieldElem::Ext(b)) if !a.same_field(b) => {
                Err(AlgebraError::MixedFields)
            }
            (FieldElem::Ext(a), b) | (b, FieldElem::Ext(a)) => {
                let (x, y) = if matches!(self, FieldElem::Ext(_)) {
                    (a.clone(), b.lift(a.field()))
                } else {
                    (b.lift(a.field()), a.clone())
                };
                Ok(FieldElem::from_ext(ext(x, &y)))
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// Checked arithmetic on two scalars.
pub fn field_arith(a: &FieldElem, b: &FieldElem, op: ArithOp) -> Result<FieldElem, AlgebraError> {
    match op {
        ArithOp::Add => a.combine(b, |x, y| x + y, |x, y| x + y),
        ArithOp::Sub => a.combine(b, |x, y| x - y, |x, y| x - y),
        ArithOp::Mul => a.combine(b, |x, y| x * y, |x, y| x * y),
        ArithOp::Div => {
            if let (FieldElem::Ext(x), FieldElem::Ext(y)) = (a, b) {
                if !x.same_field(y) {
                    return Err(AlgebraError::MixedFields);
                }
            }
            let inv = b.inv().ok_or(AlgebraError::DivisionByZero)?;
            field_arith(a, &inv, ArithOp::Mul)
        }
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldElem::Rat(q) => write!(f, "{q}"),
            FieldElem::Ext(e) => write!(f, "{e}"),
        }
    }
}

macro_rules! fe_binop {
    ($tr:ident, $m:ident, $op:expr) => {
        impl $tr for FieldElem {
            type Output = FieldElem;
            fn $m(self, o: FieldElem) -> FieldElem {
                field_arith(&self, &o, $op).expect("mixed number fields")
            }
        }
        impl<'a> $tr<&'a FieldElem> for FieldElem {
            type Output = FieldElem;
            fn $m(self, o: &FieldElem) -> FieldElem {
                field_arith(&self, o, $op).expect("mixed number fields")
            }
        }
    };
}

fe_binop!(Add, add, ArithOp::Add);
fe_binop!(Sub, sub, ArithOp::Sub);
fe_binop!(Mul, mul, ArithOp::Mul);

impl Neg for FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        match self {
            FieldElem::Rat(q) => FieldElem::Rat(-q),
            FieldElem::Ext(e) => FieldElem::Ext(-e),
        }
    }
}

impl Zero for FieldElem {
    fn zero() -> Self {
        FieldElem::Rat(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        match self {
            FieldElem::Rat(q) => q.is_zero(),
            FieldElem::Ext(_) => false,
        }
    }
}

impl One for FieldElem {
    fn one() -> Self {
        FieldElem::Rat(Rational::one())
    }
}

impl Field for FieldElem {
    fn inv(&self) -> Option<Self> {
        match self {
            FieldElem::Rat(q) => Field::inv(q).map(FieldElem::Rat),
            FieldElem::Ext(e) => e.inverse().map(FieldElem::from_ext),
        }
    }
    fn from_rational(q: &Rational) -> Self {
        FieldElem::Rat(q.clone())
    }
    fn to_rational(&self) -> Option<Rational> {
        self.as_rational().cloned()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::{int, rat};

    fn cube_root_two() -> Arc<NumberField> {
        NumberField::new("th", vec![int(-2), int(0), int(0), int(1)]).unwrap()
    }

    fn golden() -> Arc<NumberField> {
        NumberField::new("e", vec![int(-1), int(-1), int(1)]).unwrap()
    }

    #[test]
    fn rational_sum() {
        let a = FieldElem::Rat(rat(1, 2));
        let b = FieldElem::Rat(rat(1, 3));
        assert_eq!(
            field_arith(&a, &b, ArithOp::Add).unwrap(),
            FieldElem::Rat(rat(5, 6))
        );
    }

    #[test]
    fn theta_cubed_is_two() {
        let k = cube_root_two();
        let th = FieldElem::Ext(NfElem::generator(&k));
        let cube = th.clone() * &th * &th;
        assert_eq!(cube, FieldElem::Rat(int(2)));
    }

    #[test]
    fn golden_ratio_square() {
        let k = golden();
        let e = FieldElem::Ext(NfElem::generator(&k));
        let sq = e.clone() * &e;
        assert_eq!(sq, e + FieldElem::one());
    }

    #[test]
    fn inverse_and_division_by_zero() {
        let k = golden();
        let e = FieldElem::Ext(NfElem::generator(&k));
        let inv = e.inv().unwrap();
        assert_eq!(inv, e.clone() - FieldElem::one());
        assert_eq!(
            field_arith(&e, &FieldElem::zero(), ArithOp::Div),
            Err(AlgebraError::DivisionByZero)
        );
    }

    #[test]
    fn mixed_fields_rejected() {
        let a = FieldElem::Ext(NfElem::generator(&golden()));
        let b = FieldElem::Ext(NfElem::generator(&cube_root_two()));
        assert_eq!(
            field_arith(&a, &b, ArithOp::Mul),
            Err(AlgebraError::MixedFields)
        );
    }

    #[test]
    fn norm_of_theta() {
        let k = cube_root_two();
        assert_eq!(NfElem::generator(&k).norm(), int(2));
    }

    #[test]
    fn minpoly_validation() {
        assert!(NumberField::new("x", vec![int(1), int(2)]).is_err());
        assert!(NumberField::new("x", vec![int(1), int(0), int(2)]).is_err());
    }
}
