use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rayon::prelude::*;

use crate::algebra::expr::univariate_coeffs;
use crate::algebra::{
    poly_substitute, AlgebraError, EvalContext, Expr, Field, FieldElem, MPoly, NumberField,
    Rational, RationalFunction, Vars,
};

use super::fixture::IdentityFixture;
use super::VerifyError;

#[derive(Clone, Debug, PartialEq)]
pub struct VerifyReport {
    pub id: String,
    pub passed: bool,
    /// Small integer assignment on which the two sides differ; set on failure.
    pub witness: Option<Vec<(String, BigInt)>>,
    pub detail: String,
    pub elapsed: Duration,
}

struct Prepared {
    ctx_src: EvalContext,
    ctx_tgt: EvalContext,
    subs: Option<Vec<RationalFunction<FieldElem>>>,
}

fn sorted_vars(set: BTreeSet<String>) -> Vars {
    set.into_iter().collect::<Vec<_>>().into()
}

fn prepare(fx: &IdentityFixture) -> Result<Prepared, AlgebraError> {
    let ext = match &fx.minpoly {
        Some((sym, e)) => {
            let k = NumberField::new(sym, univariate_coeffs(e, sym)?)?;
            Some((sym.clone(), k))
        }
        None => None,
    };
    let sym = ext.as_ref().map(|(s, _)| s.clone());
    let strip = |mut s: BTreeSet<String>| {
        if let Some(x) = &sym {
            s.remove(x);
        }
        s
    };
    let mut src = fx.lhs.free_vars();
    src.extend(fx.rhs.free_vars());
    let src = strip(src);
    let subst_names: BTreeSet<String> = fx.substitutions.iter().map(|(n, _)| n.clone()).collect();
    let mut tgt: BTreeSet<String> = src.difference(&subst_names).cloned().collect();
    for (_, e) in &fx.substitutions {
        tgt.extend(strip(e.free_vars()));
    }
    if let Some(r) = &fx.relation {
        tgt.extend(strip(r.free_vars()));
    }
    let src_vars = sorted_vars(src);
    let tgt_vars = sorted_vars(tgt);
    let with_ext = |c: EvalContext| match &ext {
        Some((s, k)) => c.with_ext(s, k.clone()),
        None => c,
    };
    let ctx_src = with_ext(EvalContext::new(src_vars.clone()));
    let ctx_tgt = with_ext(EvalContext::new(tgt_vars.clone()));
    let subs = if fx.substitutions.is_empty() {
        None
    } else {
        let mut v = Vec::with_capacity(src_vars.len());
        for name in src_vars.iter() {
            let e = fx
                .substitutions
                .iter()
                .find(|(n, _)| n == name)
                .map(|(_, e)| e.clone())
                .unwrap_or_else(|| Expr::Var(name.clone()));
            v.push(ctx_tgt.eval(&e)?);
        }
        Some(v)
    };
    Ok(Prepared {
        ctx_src,
        ctx_tgt,
        subs,
    })
}

/// Numerator of `lhs - rhs` after substitution, over the target variables.
fn residual(fx: &IdentityFixture, p: &Prepared) -> Result<MPoly<FieldElem>, AlgebraError> {
    let diff = p.ctx_src.eval(&fx.lhs)?.sub(&p.ctx_src.eval(&fx.rhs)?);
    match &p.subs {
        Some(subs) => Ok(poly_substitute(diff.num(), subs)?.num().clone()),
        None => diff.num().embed(&p.ctx_tgt.vars),
    }
}

/// Checks one fixture.
pub fn run_fixture(fx: &IdentityFixture) -> VerifyReport {
    let start = Instant::now();
    let outcome = check(fx);
    let elapsed = start.elapsed();
    match outcome {
        Ok(Outcome::Pass(detail)) => VerifyReport {
            id: fx.id.clone(),
            passed: true,
            witness: None,
            detail,
            elapsed,
        },
        Ok(Outcome::Fail { detail, witness }) => VerifyReport {
            id: fx.id.clone(),
            passed: false,
            witness: Some(witness),
            detail,
            elapsed,
        },
        Err(e) => VerifyReport {
            id: fx.id.clone(),
            passed: false,
            witness: Some(Vec::new()),
            detail: format!("evaluation error: {e}"),
            elapsed,
        },
    }
}

enum Outcome {
    Pass(String),
    Fail {
        detail: String,
        witness: Vec<(String, BigInt)>,
    },
}

fn check(fx: &IdentityFixture) -> Result<Outcome, AlgebraError> {
    let p = prepare(fx)?;
    let res = residual(fx, &p)?;
    if res.is_zero() {
        return Ok(Outcome::Pass("difference is identically zero".into()));
    }
    if let Some(r) = &fx.relation {
        let rel = p.ctx_tgt.eval(r)?;
        if rel.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        if res.divide_exact(rel.num()).is_some() {
            return Ok(Outcome::Pass(
                "difference is divisible by the relation".into(),
            ));
        }
    }
    let witness = find_witness(fx, &p)?;
    Ok(Outcome::Fail {
        detail: format!("nonzero residual with {} terms", res.num_terms()),
        witness,
    })
}

/// Deterministic small integer points, cycling through a fixed pattern.
fn candidate(i: usize, n: usize) -> Vec<i64> {
    const VALS: [i64; 9] = [2, -1, 3, 5, -2, 7, 1, -3, 4];
    (0..n)
        .map(|j| VALS[(i * 7 + j * 3 + i / 9) % VALS.len()] + (i / 81) as i64)
        .collect()
}

fn find_witness(fx: &IdentityFixture, p: &Prepared) -> Result<Vec<(String, BigInt)>, AlgebraError> {
    let vars = &p.ctx_tgt.vars;
    let mut ctx = p.ctx_tgt.clone();
    ctx.vars = Vars::from(Vec::new());
    for i in 0..2000 {
        let vals = candidate(i, vars.len());
        ctx.bindings.clear();
        for (name, v) in vars.iter().zip(&vals) {
            ctx.bindings.insert(
                name.clone(),
                RationalFunction::constant(&ctx.vars, FieldElem::from_int(*v)),
            );
        }
        let mut lhs_ctx = ctx.clone();
        if !fx.substitutions.is_empty() {
            let bound: Vec<(String, RationalFunction<FieldElem>)> = fx
                .substitutions
                .iter()
                .map(|(n, e)| ctx.eval(e).map(|v| (n.clone(), v)))
                .filter_map(Result::ok)
                .collect();
            if bound.len() != fx.substitutions.len() {
                continue;
            }
            lhs_ctx.bindings.extend(bound);
        }
        let l = lhs_ctx.eval(&fx.lhs).ok().and_then(|r| r.eval(&[]));
        let r = lhs_ctx.eval(&fx.rhs).ok().and_then(|r| r.eval(&[]));
        if let (Some(l), Some(r)) = (l, r) {
            if l != r {
                return Ok(vars
                    .iter()
                    .zip(vals)
                    .map(|(n, v)| (n.clone(), BigInt::from(v)))
                    .collect());
            }
        }
    }
    Ok(Vec::new())
}

/// Runs the fixtures whose ids are in `filter` (all when `None`), in parallel,
/// reporting in corpus order.
pub fn run_identity_suite(
    corpus: &[IdentityFixture],
    filter: Option<&[String]>,
) -> Result<Vec<VerifyReport>, VerifyError> {
    let selected: Vec<&IdentityFixture> = match filter {
        None => corpus.iter().collect(),
        Some(ids) => {
            for id in ids {
                if !corpus.iter().any(|f| &f.id == id) {
                    return Err(VerifyError::UnknownFixture(id.clone()));
                }
            }
            corpus.iter().filter(|f| ids.contains(&f.id)).collect()
        }
    };
    Ok(selected.par_iter().map(|f| run_fixture(f)).collect())
}

/// Numeric literals available to [`perturb`]: those of the left side, then the right.
pub fn literal_count(fx: &IdentityFixture) -> usize {
    fx.lhs.literal_count() + fx.rhs.literal_count()
}

/// A copy of `fx` with its `k`-th numeric literal increased by one.
pub fn perturb(fx: &IdentityFixture, k: usize) -> IdentityFixture {
    let mut i = 0;
    let mut bump = |q: &Rational| {
        let out = if i == k {
            q + Rational::from_integer(1.into())
        } else {
            q.clone()
        };
        i += 1;
        out
    };
    let lhs = fx.lhs.map_literals(&mut bump);
    let rhs = fx.rhs.map_literals(&mut bump);
    IdentityFixture {
        id: format!("{}~{k}", fx.id),
        lhs,
        rhs,
        ..fx.clone()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verify::fixture::parse_fixtures;

    fn one(text: &str) -> IdentityFixture {
        parse_fixtures(text).unwrap().remove(0)
    }

    #[test]
    fn plain_identity_passes() {
        let fx = one("id: sq\nlhs: (^ (+ x y) 2)\nrhs: (+ (^ x 2) (* 2 x y) (^ y 2))");
        assert!(run_fixture(&fx).passed);
    }

    #[test]
    fn relation_identity_passes() {
        let fx = one("id: rel\nrelation: (- (^ x 2) 2)\nlhs: (^ x 4)\nrhs: (* 2 (^ x 2))");
        assert!(run_fixture(&fx).passed);
    }

    #[test]
    fn perturbed_fails_with_witness() {
        let fx = one("id: sq\nlhs: (^ (+ x (* 1 y)) 2)\nrhs: (+ (^ x 2) (* 2 x y) (^ y 2))");
        let rep = run_fixture(&perturb(&fx, 0));
        assert!(!rep.passed);
        assert!(!rep.witness.unwrap().is_empty());
    }

    #[test]
    fn substitution_is_simultaneous() {
        let fx = one("id: s\nsubst: x y\nsubst: y x\nlhs: (- x y)\nrhs: (- y x)");
        assert!(!run_fixture(&fx).passed);
        let fx = one("id: s\nsubst: x y\nsubst: y x\nlhs: (* x y)\nrhs: (* y x)");
        assert!(run_fixture(&fx).passed);
    }
}
