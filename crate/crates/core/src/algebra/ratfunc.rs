use std::collections::BTreeMap;
use std::fmt;

use super::field::Field;
use super::mpoly::{MPoly, Monomial, Vars};
use super::AlgebraError;

/// A quotient of two multivariate polynomials.
///
/// The denominator is kept with leading coefficient one and no monomial
/// factor shared with the numerator. No polynomial gcd is taken, so two equal
/// functions may have different representations; `==` compares by
/// cross-multiplication.
#[derive(Clone, Debug)]
pub struct RationalFunction<C> {
    num: MPoly<C>,
    den: MPoly<C>,
}

impl<C: Field> RationalFunction<C> {
    pub fn new(num: MPoly<C>, den: MPoly<C>) -> Result<Self, AlgebraError> {
        if den.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        let mut r = RationalFunction { num, den };
        r.normalize();
        Ok(r)
    }

    pub fn from_poly(p: MPoly<C>) -> Self {
        let den = MPoly::one(p.vars());
        RationalFunction { num: p, den }
    }

    pub fn constant(vars: &Vars, c: C) -> Self {
        Self::from_poly(MPoly::constant(vars, c))
    }

    fn normalize(&mut self) {
        if self.num.is_zero() {
            self.den = MPoly::one(self.num.vars());
            return;
        }
        if let Some(c) = self.den.as_constant() {
            let inv = c.inv().expect("nonzero denominator");
            self.num = self.num.scale(&inv);
            self.den = MPoly::one(self.num.vars());
            return;
        }
        let g = self
            .num
            .monomial_content()
            .gcd(&self.den.monomial_content());
        if g.degree() > 0 {
            self.num = self.num.div_monomial(&g);
            self.den = self.den.div_monomial(&g);
        }
        let lc = self.den.leading().unwrap().1.clone();
        if !lc.is_one() {
            let inv = lc.inv().unwrap();
            self.num = self.num.scale(&inv);
            self.den = self.den.scale(&inv);
        }
        // Cancel an exact polynomial factor when the denominator divides cheaply.
        if let Some(q) = self.num.divide_exact(&self.den) {
            self.num = q;
            self.den = MPoly::one(self.num.vars());
        }
    }

    pub fn num(&self) -> &MPoly<C> {
        &self.num
    }

    pub fn den(&self) -> &MPoly<C> {
        &self.den
    }

    pub fn vars(&self) -> &Vars {
        self.num.vars()
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.as_constant().is_some()
    }

    pub fn add(&self, o: &Self) -> Self {
        if self.den == o.den {
            return Self::new(self.num.add(&o.num), self.den.clone()).unwrap();
        }
        Self::new(
            self.num.mul(&o.den).add(&o.num.mul(&self.den)),
            self.den.mul(&o.den),
        )
        .unwrap()
    }

    pub fn neg(&self) -> Self {
        RationalFunction {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Self {
        Self::new(self.num.mul(&o.num), self.den.mul(&o.den)).unwrap()
    }

    pub fn div(&self, o: &Self) -> Result<Self, AlgebraError> {
        if o.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        Self::new(self.num.mul(&o.den), self.den.mul(&o.num))
    }

    pub fn pow(&self, n: i64) -> Result<Self, AlgebraError> {
        let e = n.unsigned_abs() as u32;
        let p = RationalFunction {
            num: self.num.pow(e),
            den: self.den.pow(e),
        };
        if n >= 0 {
            Ok(p)
        } else {
            Self::constant(self.vars(), C::one()).div(&p)
        }
    }

    pub fn embed(&self, vars: &Vars) -> Result<Self, AlgebraError> {
        Ok(RationalFunction {
            num: self.num.embed(vars)?,
            den: self.den.embed(vars)?,
        })
    }

    /// Evaluates at a point, `None` if the denominator vanishes there.
    pub fn eval(&self, point: &[C]) -> Option<C> {
        let d = self.den.eval(point);
        self.num.eval(point).try_div(&d)
    }
}

impl<C: Field> PartialEq for RationalFunction<C> {
    fn eq(&self, o: &Self) -> bool {
        self.num.mul(&o.den) == o.num.mul(&self.den)
    }
}

impl<C: Field> fmt::Display for RationalFunction<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

/// Substitutes `subs[i]` for variable `i` of `p` simultaneously.
///
/// All substitutes must share one variable list, which becomes the variable
/// list of the result. Terms are brought to a single common denominator so no
/// intermediate sums of fractions are formed.
pub fn poly_substitute<C: Field>(
    p: &MPoly<C>,
    subs: &[RationalFunction<C>],
) -> Result<RationalFunction<C>, AlgebraError> {
    if subs.len() != p.vars().len() {
        return Err(AlgebraError::Arity {
            expected: p.vars().len(),
            got: subs.len(),
        });
    }
    let Some(target) = subs.first().map(|s| s.vars().clone()) else {
        let c = p.as_constant().unwrap_or_else(C::zero);
        return Ok(RationalFunction::constant(&Vars::from(Vec::new()), c));
    };
    if subs.iter().any(|s| s.vars() != &target) {
        return Err(AlgebraError::VariableMismatch);
    }
    let n = subs.len();
    let degs: Vec<u32> = (0..n).map(|i| p.degree_in(i)).collect();
    let mut num_pows: Vec<Vec<MPoly<C>>> = Vec::with_capacity(n);
    let mut den_pows: Vec<Vec<MPoly<C>>> = Vec::with_capacity(n);
    for (i, s) in subs.iter().enumerate() {
        let poly_den = s.is_polynomial();
        let mut np = vec![MPoly::one(&target)];
        let mut dp = vec![MPoly::one(&target)];
        for k in 1..=degs[i] as usize {
            np.push(np[k - 1].mul(s.num()));
            if !poly_den {
                dp.push(dp[k - 1].mul(s.den()));
            }
        }
        num_pows.push(np);
        den_pows.push(dp);
    }
    let mut num = MPoly::zero(&target);
    let mut terms_by_pattern: BTreeMap<Monomial, Vec<(&Monomial, &C)>> = BTreeMap::new();
    for (m, c) in p.terms() {
        // Group by the denominator exponent pattern to share partial products.
        let pat = Monomial(
            m.0.iter()
                .zip(&degs)
                .enumerate()
                .map(|(i, (&e, &d))| if den_pows[i].len() > 1 { d - e } else { 0 })
                .collect(),
        );
        terms_by_pattern.entry(pat).or_default().push((m, c));
    }
    for (pat, terms) in terms_by_pattern {
        let mut dfac = MPoly::one(&target);
        for (i, &e) in pat.0.iter().enumerate() {
            if e > 0 {
                dfac = dfac.mul(&den_pows[i][e as usize]);
            }
        }
        let mut group = MPoly::zero(&target);
        for (m, c) in terms {
            let mut t = MPoly::constant(&target, c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e > 0 {
                    t = t.mul(&num_pows[i][e as usize]);
                }
            }
            group = group.add(&t);
        }
        num = num.add(&group.mul(&dfac));
    }
    let mut den = MPoly::one(&target);
    for i in 0..n {
        if den_pows[i].len() > 1 {
            den = den.mul(&den_pows[i][degs[i] as usize]);
        }
    }
    RationalFunction::new(num, den)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::{int, Rational};
    use crate::algebra::mpoly::vars_from;

    #[test]
    fn equality_by_cross_multiplication() {
        let v = vars_from(&["x", "y"]);
        let x = MPoly::<Rational>::var(&v, 0);
        let y = MPoly::<Rational>::var(&v, 1);
        let a = RationalFunction::new(x.clone(), y.clone()).unwrap();
        let b = RationalFunction::new(x.mul(&x.add(&y)), y.mul(&x.add(&y))).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn substitution_common_denominator() {
        let v = vars_from(&["x"]);
        let w = vars_from(&["t"]);
        let x = MPoly::<Rational>::var(&v, 0);
        let t = MPoly::<Rational>::var(&w, 0);
        // x^2 + x at x = 1/t is (1 + t)/t^2.
        let p = x.mul(&x).add(&x);
        let s = RationalFunction::new(MPoly::one(&w), t.clone()).unwrap();
        let r = poly_substitute(&p, &[s]).unwrap();
        let expect = RationalFunction::new(MPoly::one(&w).add(&t), t.mul(&t)).unwrap();
        assert_eq!(r, expect);
        assert_eq!(r.eval(&[int(2)]), Some(Rational::new(3.into(), 4.into())));
    }

    #[test]
    fn zero_denominator_rejected() {
        let v = vars_from(&["x"]);
        assert!(RationalFunction::<Rational>::new(MPoly::one(&v), MPoly::zero(&v)).is_err());
    }
}
