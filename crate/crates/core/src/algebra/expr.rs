//! Expression trees and their two text syntaxes.
//!
//! Fixture files use prefix notation, `(+ a (* 2 b) (^ c 3))`; family
//! templates use ordinary infix notation, `a + 2*b + c^3`.

use num_traits::{One, Zero};
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use super::field::{parse_rational, Rational};
use super::mpoly::{MPoly, Vars};
use super::norm::norm_form;
use super::number_field::{FieldElem, NfElem, NumberField};
use super::ratfunc::RationalFunction;
use super::AlgebraError;

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Num(Rational),
    Var(String),
    Add(Vec<Expr>),
    /// `a - b - c ...`
    Sub(Vec<Expr>),
    Neg(Box<Expr>),
    Mul(Vec<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, i64),
    Norm(Box<[Expr; 3]>),
}

impl Expr {
    pub fn int(n: i64) -> Self {
        Expr::Num(Rational::from_integer(BigInt::from(n)))
    }

    pub fn var(s: &str) -> Self {
        Expr::Var(s.to_string())
    }

    pub fn free_vars(&self) -> BTreeSet<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Expr::Num(_) => {}
            Expr::Var(v) => {
                out.insert(v.clone());
            }
            Expr::Add(xs) | Expr::Sub(xs) | Expr::Mul(xs) => {
                xs.iter().for_each(|x| x.collect_vars(out))
            }
            Expr::Neg(x) | Expr::Pow(x, _) => x.collect_vars(out),
            Expr::Div(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
            Expr::Norm(g) => g.iter().for_each(|x| x.collect_vars(out)),
        }
    }

    /// Applies `f` to every numeric literal; used to build perturbed copies.
    pub fn map_literals(&self, f: &mut dyn FnMut(&Rational) -> Rational) -> Expr {
        fn map_all(xs: &[Expr], f: &mut dyn FnMut(&Rational) -> Rational) -> Vec<Expr> {
            xs.iter().map(|x| x.map_literals(f)).collect()
        }
        match self {
            Expr::Num(q) => Expr::Num(f(q)),
            Expr::Var(_) => self.clone(),
            Expr::Add(xs) => Expr::Add(map_all(xs, f)),
            Expr::Sub(xs) => Expr::Sub(map_all(xs, f)),
            Expr::Mul(xs) => Expr::Mul(map_all(xs, f)),
            Expr::Neg(x) => Expr::Neg(Box::new(x.map_literals(f))),
            Expr::Pow(x, n) => Expr::Pow(Box::new(x.map_literals(f)), *n),
            Expr::Div(a, b) => {
                let a = a.map_literals(f);
                Expr::Div(Box::new(a), Box::new(b.map_literals(f)))
            }
            Expr::Norm(g) => {
                let a = g[0].map_literals(f);
                let b = g[1].map_literals(f);
                let c = g[2].map_literals(f);
                Expr::Norm(Box::new([a, b, c]))
            }
        }
    }

    /// Number of numeric literals in the tree.
    pub fn literal_count(&self) -> usize {
        let mut n = 0;
        self.map_literals(&mut |q| {
            n += 1;
            q.clone()
        });
        n
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn list(f: &mut fmt::Formatter<'_>, op: &str, xs: &[Expr]) -> fmt::Result {
            write!(f, "({op}")?;
            for x in xs {
                write!(f, " {x}")?;
            }
            write!(f, ")")
        }
        match self {
            Expr::Num(q) => write!(f, "{q}"),
            Expr::Var(v) => write!(f, "{v}"),
            Expr::Add(xs) => list(f, "+", xs),
            Expr::Sub(xs) => list(f, "-", xs),
            Expr::Neg(x) => write!(f, "(- {x})"),
            Expr::Mul(xs) => list(f, "*", xs),
            Expr::Div(a, b) => write!(f, "(/ {a} {b})"),
            Expr::Pow(x, n) => write!(f, "(^ {x} {n})"),
            Expr::Norm(g) => write!(f, "(norm {} {} {})", g[0], g[1], g[2]),
        }
    }
}

fn perr(msg: impl Into<String>) -> AlgebraError {
    AlgebraError::Parse(msg.into())
}

fn is_name_start(c: char) -> bool {
    c.is_alphabetic() || c == '_'
}

fn is_name_char(c: char) -> bool {
    c.is_alphanumeric() || c == '_' || c == '\''
}

mod infix;
mod prefix;

pub use infix::parse_infix;
pub use prefix::parse_prefix;

/// Evaluation environment: the variable list of the result, an optional
/// algebraic symbol, and named sub-expressions already evaluated.
#[derive(Clone)]
pub struct EvalContext {
    pub vars: Vars,
    pub ext: Option<(String, Arc<NumberField>)>,
    pub bindings: BTreeMap<String, RationalFunction<FieldElem>>,
}

impl EvalContext {
    pub fn new(vars: Vars) -> Self {
        Self {
            vars,
            ext: None,
            bindings: BTreeMap::new(),
        }
    }

    pub fn with_ext(mut self, symbol: &str, field: Arc<NumberField>) -> Self {
        self.ext = Some((symbol.to_string(), field));
        self
    }

    fn constant(&self, c: FieldElem) -> RationalFunction<FieldElem> {
        RationalFunction::constant(&self.vars, c)
    }

    pub fn eval(&self, e: &Expr) -> Result<RationalFunction<FieldElem>, AlgebraError> {
        Ok(match e {
            Expr::Num(q) => self.constant(FieldElem::Rat(q.clone())),
            Expr::Var(v) => {
                if let Some((sym, k)) = &self.ext {
                    if sym == v {
                        return Ok(self.constant(FieldElem::from_ext(NfElem::generator(k))));
                    }
                }
                if let Some(b) = self.bindings.get(v) {
                    return Ok(b.clone());
                }
                let p = MPoly::var_named(&self.vars, v)
                    .ok_or_else(|| AlgebraError::UnknownVariable(v.clone()))?;
                RationalFunction::from_poly(p)
            }
            Expr::Add(xs) => {
                let mut acc = self.constant(FieldElem::zero());
                for x in xs {
                    acc = acc.add(&self.eval(x)?);
                }
                acc
            }
            Expr::Sub(xs) => {
                let (first, rest) = xs.split_first().ok_or_else(|| perr("empty subtraction"))?;
                let mut acc = self.eval(first)?;
                if rest.is_empty() {
                    return Ok(acc.neg());
                }
                for x in rest {
                    acc = acc.sub(&self.eval(x)?);
                }
                acc
            }
            Expr::Neg(x) => self.eval(x)?.neg(),
            Expr::Mul(xs) => {
                let mut acc = self.constant(FieldElem::one());
                for x in xs {
                    acc = acc.mul(&self.eval(x)?);
                }
                acc
            }
            Expr::Div(a, b) => self.eval(a)?.div(&self.eval(b)?)?,
            Expr::Pow(x, n) => self.eval(x)?.pow(*n)?,
            Expr::Norm(g) => self.eval_norm(g)?,
        })
    }

    fn eval_norm(&self, g: &[Expr; 3]) -> Result<RationalFunction<FieldElem>, AlgebraError> {
        let (_, k) = self
            .ext
            .as_ref()
            .ok_or_else(|| AlgebraError::BadMinpoly("norm without a declared minpoly".into()))?;
        let parts: Vec<_> = g.iter().map(|x| self.eval(x)).collect::<Result<_, _>>()?;
        let mut den = MPoly::one(&self.vars);
        for p in &parts {
            if p.den() != &den {
                den = den.mul(p.den());
            }
        }
        let nums: Vec<MPoly<FieldElem>> = parts
            .iter()
            .map(|p| {
                let cof = den.divide_exact(p.den()).expect("common denominator");
                p.num().mul(&cof)
            })
            .collect();
        let n = norm_form([&nums[0], &nums[1], &nums[2]], k.minpoly())?;
        RationalFunction::new(n, den.pow(3))
    }
}

/// Coefficients of a univariate polynomial expression in `symbol`, low degree first.
pub fn univariate_coeffs(e: &Expr, symbol: &str) -> Result<Vec<Rational>, AlgebraError> {
    let vars: Vars = vec![symbol.to_string()].into();
    let rf = EvalContext::new(vars).eval(e)?;
    if !rf.is_polynomial() {
        return Err(perr("expected a polynomial"));
    }
    let p = rf.num();
    let mut out = vec![Rational::zero(); p.total_degree() as usize + 1];
    for (m, c) in p.terms() {
        out[m.0[0] as usize] = c
            .as_rational()
            .cloned()
            .ok_or_else(|| perr("non-rational coefficient"))?;
    }
    Ok(out)
}

fn parse_int_exponent(s: &str) -> Result<i64, AlgebraError> {
    let q = parse_rational(s).ok_or_else(|| perr(format!("bad exponent {s}")))?;
    if !q.is_integer() {
        return Err(perr(format!("non-integer exponent {s}")));
    }
    q.to_integer()
        .to_i64()
        .ok_or_else(|| perr(format!("exponent too large {s}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::int;
    use crate::algebra::mpoly::vars_from;

    #[test]
    fn prefix_and_infix_agree() {
        let a = parse_prefix("(- (+ (^ x 2) (* 3 x y)) (/ 1 2))").unwrap();
        let b = parse_infix("x^2 + 3*x*y - 1/2").unwrap();
        let ctx = EvalContext::new(vars_from(&["x", "y"]));
        assert_eq!(ctx.eval(&a).unwrap(), ctx.eval(&b).unwrap());
    }

    #[test]
    fn elkies_holds() {
        let l = parse_infix("(1-T-T^2)^3 + (1+T-T^2)^3").unwrap();
        let r = parse_infix("2 - 2*T^6").unwrap();
        let ctx = EvalContext::new(vars_from(&["T"]));
        assert!(ctx.eval(&l).unwrap().sub(&ctx.eval(&r).unwrap()).is_zero());
    }

    #[test]
    fn epsilon_symbol() {
        let k = NumberField::new("e", vec![int(-1), int(-1), int(1)]).unwrap();
        let ctx = EvalContext::new(vars_from(&["u"])).with_ext("e", k);
        let d = ctx.eval(&parse_infix("e^2 - e - 1").unwrap()).unwrap();
        assert!(d.is_zero());
    }

    #[test]
    fn coefficients_of_minpoly() {
        let c = univariate_coeffs(&parse_prefix("(- (^ th 3) 2)").unwrap(), "th").unwrap();
        assert_eq!(c, vec![int(-2), int(0), int(0), int(1)]);
    }

    #[test]
    fn unknown_variable() {
        let ctx = EvalContext::new(vars_from(&["x"]));
        assert!(ctx.eval(&Expr::var("q")).is_err());
    }
}
