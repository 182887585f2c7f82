//! Plain-text identity corpus.
//!
//! A file is a sequence of blocks, each opened by an `id:` line. Other header
//! lines are `note:`, `vars:` (informational), `minpoly: SYMBOL EXPR`,
//! `relation: EXPR`, `subst: NAME EXPR` (repeatable, applied simultaneously),
//! `lhs: EXPR` and `rhs: EXPR`. Expressions use prefix notation. Lines starting
//! with `#` and blank lines are ignored.

use std::collections::BTreeSet;

use crate::algebra::{parse_prefix, Expr};

use super::VerifyError;

#[derive(Clone, Debug, PartialEq)]
pub struct IdentityFixture {
    pub id: String,
    pub note: String,
    pub vars: Vec<String>,
    pub lhs: Expr,
    pub rhs: Expr,
    pub relation: Option<Expr>,
    pub minpoly: Option<(String, Expr)>,
    pub substitutions: Vec<(String, Expr)>,
}

/// The corpus shipped with the crate.
pub const BUILTIN_CORPUS: &str = include_str!("../../fixtures/identities.fix");

/// Environment variable that overrides the corpus location.
pub const FIXTURES_ENV: &str = "DIAGFORGE_FIXTURES";

#[derive(Default)]
struct Draft {
    id: String,
    line: usize,
    note: String,
    vars: Vec<String>,
    lhs: Option<Expr>,
    rhs: Option<Expr>,
    relation: Option<Expr>,
    minpoly: Option<(String, Expr)>,
    substitutions: Vec<(String, Expr)>,
}

impl Draft {
    fn finish(self) -> Result<IdentityFixture, VerifyError> {
        let missing = |what: &str| VerifyError::Fixture {
            line: self.line,
            msg: format!("fixture {} has no {what}", self.id),
        };
        let lhs = self.lhs.clone().ok_or_else(|| missing("lhs"))?;
        let rhs = self.rhs.clone().ok_or_else(|| missing("rhs"))?;
        if matches!(&self.relation, Some(Expr::Num(q)) if num_traits::Zero::is_zero(q)) {
            return Err(VerifyError::Fixture {
                line: self.line,
                msg: format!("fixture {} has a zero relation", self.id),
            });
        }
        Ok(IdentityFixture {
            id: self.id,
            note: self.note,
            vars: self.vars,
            lhs,
            rhs,
            relation: self.relation,
            minpoly: self.minpoly,
            substitutions: self.substitutions,
        })
    }
}

pub fn parse_fixtures(text: &str) -> Result<Vec<IdentityFixture>, VerifyError> {
    let mut out = Vec::new();
    let mut cur: Option<Draft> = None;
    let mut seen = BTreeSet::new();
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |msg: String| VerifyError::Fixture { line: lineno, msg };
        let (key, val) = line
            .split_once(':')
            .ok_or_else(|| err(format!("expected `key: value`, got {line:?}")))?;
        let val = val.trim();
        let expr = |s: &str| parse_prefix(s).map_err(|e| err(e.to_string()));
        if key == "id" {
            if let Some(d) = cur.take() {
                out.push(d.finish()?);
            }
            if !seen.insert(val.to_string()) {
                return Err(err(format!("duplicate id {val}")));
            }
            cur = Some(Draft {
                id: val.to_string(),
                line: lineno,
                ..Draft::default()
            });
            continue;
        }
        let d = cur
            .as_mut()
            .ok_or_else(|| err("header before the first id".into()))?;
        match key {
            "note" => d.note = val.to_string(),
            "vars" => d.vars = val.split_whitespace().map(str::to_string).collect(),
            "lhs" => d.lhs = Some(expr(val)?),
            "rhs" => d.rhs = Some(expr(val)?),
            "relation" => d.relation = Some(expr(val)?),
            "minpoly" | "subst" => {
                let (name, e) = val
                    .split_once(char::is_whitespace)
                    .ok_or_else(|| err(format!("{key} needs a name and an expression")))?;
                let pair = (name.to_string(), expr(e.trim())?);
                if key == "minpoly" {
                    d.minpoly = Some(pair);
                } else {
                    d.substitutions.push(pair);
                }
            }
            _ => return Err(err(format!("unknown header {key:?}"))),
        }
    }
    if let Some(d) = cur.take() {
        out.push(d.finish()?);
    }
    Ok(out)
}

/// Loads the corpus from `DIAGFORGE_FIXTURES` when set, else the built-in copy.
pub fn load_corpus() -> Result<Vec<IdentityFixture>, VerifyError> {
    match std::env::var_os(FIXTURES_ENV) {
        Some(path) => {
            let text = std::fs::read_to_string(&path).map_err(|e| VerifyError::Io {
                path: path.to_string_lossy().into_owned(),
                msg: e.to_string(),
            })?;
            parse_fixtures(&text)
        }
        None => parse_fixtures(BUILTIN_CORPUS),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_corpus_parses() {
        let fx = parse_fixtures(BUILTIN_CORPUS).unwrap();
        assert!(fx.len() >= 18);
        assert!(fx.iter().any(|f| f.id == "elkies"));
    }

    #[test]
    fn rejects_malformed() {
        assert!(parse_fixtures("lhs: 1").is_err());
        assert!(parse_fixtures("id: a\nlhs: 1").is_err());
        assert!(parse_fixtures("id: a\nlhs: 1\nrhs: 1\nid: a\nlhs: 1\nrhs: 1").is_err());
        assert!(parse_fixtures("id: a\nbogus: 1").is_err());
    }

    #[test]
    fn substitutions_in_order() {
        let fx =
            parse_fixtures("id: s\nsubst: x (+ t 1)\nsubst: y t\nlhs: x\nrhs: (+ y 1)").unwrap();
        assert_eq!(fx[0].substitutions.len(), 2);
        assert_eq!(fx[0].substitutions[1].0, "y");
    }
}
