use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::Arc;

use super::field::{Field, Rational};
use super::AlgebraError;

/// Exponent vector, ordered graded-lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, o: &Self) -> Self {
        Monomial(self.0.iter().zip(&o.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, o: &Self) -> bool {
        self.0.iter().zip(&o.0).all(|(a, b)| a <= b)
    }

    pub fn div(&self, o: &Self) -> Self {
        Monomial(self.0.iter().zip(&o.0).map(|(a, b)| a - b).collect())
    }

    pub fn gcd(&self, o: &Self) -> Self {
        Monomial(self.0.iter().zip(&o.0).map(|(a, b)| *a.min(b)).collect())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl Ord for Monomial {
    fn cmp(&self, o: &Self) -> Ordering {
        self.degree()
            .cmp(&o.degree())
            .then_with(|| self.0.cmp(&o.0))
    }
}

/// Sparse multivariate polynomial over a field, with named variables.
#[derive(Clone, Debug)]
pub struct MPoly<C> {
    vars: Arc<[String]>,
    terms: BTreeMap<Monomial, C>,
}

pub type Vars = Arc<[String]>;

pub fn vars_from(names: &[&str]) -> Vars {
    names
        .iter()
        .map(|s| s.to_string())
        .collect::<Vec<_>>()
        .into()
}

impl<C: Field> PartialEq for MPoly<C> {
    fn eq(&self, o: &Self) -> bool {
        self.vars == o.vars && self.terms == o.terms
    }
}

impl<C: Field> MPoly<C> {
    pub fn zero(vars: &Vars) -> Self {
        MPoly {
            vars: vars.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: &Vars, c: C) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(vars.len()), c);
        }
        p
    }

    pub fn one(vars: &Vars) -> Self {
        Self::constant(vars, C::one())
    }

    pub fn var(vars: &Vars, i: usize) -> Self {
        let mut p = Self::zero(vars);
        p.terms.insert(Monomial::var(vars.len(), i), C::one());
        p
    }

    pub fn var_named(vars: &Vars, name: &str) -> Option<Self> {
        vars.iter()
            .position(|v| v == name)
            .map(|i| Self::var(vars, i))
    }

    pub fn from_terms(vars: &Vars, terms: impl IntoIterator<Item = (Monomial, C)>) -> Self {
        let mut p = Self::zero(vars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn vars(&self) -> &Vars {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    /// The constant value, if the polynomial has no non-constant terms.
    pub fn as_constant(&self) -> Option<C> {
        match self.terms.len() {
            0 => Some(C::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                (m.degree() == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn leading(&self) -> Option<(&Monomial, &C)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                let s = v.clone() + &c;
                if s.is_zero() {
                    self.terms.remove(&m);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    fn check_vars(&self, o: &Self) {
        assert!(
            self.vars == o.vars,
            "polynomial variable lists differ: {:?} vs {:?}",
            self.vars,
            o.vars
        );
    }

    pub fn add(&self, o: &Self) -> Self {
        self.check_vars(o);
        let mut p = self.clone();
        for (m, c) in &o.terms {
            p.add_term(m.clone(), c.clone());
        }
        p
    }

    pub fn neg(&self) -> Self {
        MPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.check_vars(o);
        let mut p = self.clone();
        for (m, c) in &o.terms {
            p.add_term(m.clone(), -c.clone());
        }
        p
    }

    pub fn mul(&self, o: &Self) -> Self {
        self.check_vars(o);
        let mut acc: HashMap<Monomial, C> = HashMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                let m = m1.mul(m2);
                let c = c1.clone() * c2;
                match acc.get_mut(&m) {
                    Some(v) => *v = v.clone() + &c,
                    None => {
                        acc.insert(m, c);
                    }
                }
            }
        }
        MPoly {
            vars: self.vars.clone(),
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn scale(&self, k: &C) -> Self {
        if k.is_zero() {
            return Self::zero(&self.vars);
        }
        MPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.clone() * k))
                .collect(),
        }
    }

    pub fn mul_monomial(&self, mono: &Monomial) -> Self {
        MPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.mul(mono), c.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(&self.vars);
        let mut base = self.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = acc.mul(&base);
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Partial derivative with respect to variable `i`.
    pub fn derivative(&self, i: usize) -> Self {
        let mut out = Self::zero(&self.vars);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut m2 = m.clone();
            m2.0[i] -= 1;
            out.add_term(m2, c.clone() * &C::from_int(e as i64));
        }
        out
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|m| m.0[i]).max().unwrap_or(0)
    }

    pub fn is_homogeneous_of(&self, d: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == d)
    }

    /// Largest monomial dividing every term.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.keys();
        match it.next() {
            None => Monomial::one(self.vars.len()),
            Some(first) => it.fold(first.clone(), |g, m| g.gcd(m)),
        }
    }

    pub fn div_monomial(&self, mono: &Monomial) -> Self {
        MPoly {
            vars: self.vars.clone(),
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.div(mono), c.clone()))
                .collect(),
        }
    }

    /// Exact quotient `self / d`, `None` if `d` does not divide `self`.
    pub fn divide_exact(&self, d: &Self) -> Option<Self> {
        self.check_vars(d);
        let (lm, lc) = d.leading()?;
        let lc_inv = lc.inv()?;
        let (lm, lc_inv) = (lm.clone(), lc_inv);
        let mut rem = self.clone();
        let mut q = Self::zero(&self.vars);
        while let Some((m, c)) = rem.leading() {
            if !lm.divides(m) {
                return None;
            }
            let qm = m.div(&lm);
            let qc = c.clone() * &lc_inv;
            rem = rem.sub(&d.mul_monomial(&qm).scale(&qc));
            q.add_term(qm, qc);
        }
        Some(q)
    }

    /// Evaluates with every coefficient mapped into `F`.
    pub fn eval_map<F: Field>(&self, point: &[F], coeff: impl Fn(&C) -> F) -> F {
        assert_eq!(point.len(), self.vars.len(), "wrong number of values");
        let mut cache: Vec<Vec<F>> = point.iter().map(|x| vec![F::one(), x.clone()]).collect();
        let mut acc = F::zero();
        for (m, c) in &self.terms {
            let mut t = coeff(c);
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let e = e as usize;
                while cache[i].len() <= e {
                    let next = cache[i].last().unwrap().clone() * &point[i];
                    cache[i].push(next);
                }
                t = t * &cache[i][e];
            }
            acc = acc + t;
        }
        acc
    }

    pub fn eval(&self, point: &[C]) -> C {
        self.eval_map(point, |c| c.clone())
    }

    /// Re-expresses the polynomial over a larger variable list.
    pub fn embed(&self, vars: &Vars) -> Result<Self, AlgebraError> {
        let idx: Vec<usize> = self
            .vars
            .iter()
            .map(|v| {
                vars.iter()
                    .position(|w| w == v)
                    .ok_or_else(|| AlgebraError::UnknownVariable(v.clone()))
            })
            .collect::<Result<_, _>>()?;
        let mut p = Self::zero(vars);
        for (m, c) in &self.terms {
            let mut e = vec![0; vars.len()];
            for (i, &k) in m.0.iter().enumerate() {
                e[idx[i]] = k;
            }
            p.add_term(Monomial(e), c.clone());
        }
        Ok(p)
    }

    pub fn map_coeffs<D: Field>(&self, f: impl Fn(&C) -> D) -> MPoly<D> {
        MPoly::from_terms(
            &self.vars,
            self.terms.iter().map(|(m, c)| (m.clone(), f(c))),
        )
    }
}

impl MPoly<Rational> {
    /// Coefficients as rationals.
    pub fn rational_coeffs(&self) -> impl Iterator<Item = &Rational> {
        self.terms.values()
    }
}

impl<C: Field> fmt::Display for MPoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms.iter().rev() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mut factors = Vec::new();
            for (i, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.vars[i].clone()),
                    _ => factors.push(format!("{}^{}", self.vars[i], e)),
                }
            }
            if factors.is_empty() {
                write!(f, "({c})")?;
            } else if c.is_one() {
                write!(f, "{}", factors.join("*"))?;
            } else {
                write!(f, "({c})*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}
