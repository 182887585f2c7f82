//! Exact scalars, polynomials, rational functions and expressions.

pub mod expr;
pub mod field;
pub mod mpoly;
pub mod norm;
pub mod number_field;
pub mod ratfn;
pub mod ratfunc;

pub use expr::{parse_infix, parse_prefix, EvalContext, Expr};
pub use field::{int, parse_rational, rat, Field, Rational};
pub use mpoly::{vars_from, MPoly, Monomial, Vars};
pub use norm::norm_form;
pub use number_field::{field_arith, ArithOp, FieldElem, NfElem, NumberField};
pub use ratfn::{RatFn, UPoly};
pub use ratfunc::{poly_substitute, RationalFunction};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different number fields")]
    MixedFields,
    #[error("invalid minimal polynomial: {0}")]
    BadMinpoly(String),
    #[error("unknown variable {0}")]
    UnknownVariable(String),
    #[error("variable lists do not match")]
    VariableMismatch,
    #[error("expected {expected} substitutions, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("parse error: {0}")]
    Parse(String),
}
