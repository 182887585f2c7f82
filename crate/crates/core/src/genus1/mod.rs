//! Genus-one curves: Weierstrass, quartic, intersection-of-quadrics and plane
//! cubic models, group laws, and exact maps between them.

pub mod conic;
pub mod cubic;
pub mod map;
pub mod quadrics;
pub mod quartic;
pub mod weierstrass;

pub use conic::{parametrize_conic, Conic, ConicParam};
pub use cubic::PlaneCubic;
pub use map::{BirationalMap, FiberGroup, Genus1Model};
pub use quadrics::{QuadricIntersection, QuadricReduction};
pub use quartic::{QuarticMap, QuarticModel};
pub use weierstrass::{ECPoint, LongWeierstrass, TorsionOrder, WeierstrassCurve};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Genus1Error {
    #[error("point not on curve: {0}")]
    NotOnCurve(String),
    #[error("singular model: {0}")]
    Singular(String),
    #[error("degenerate input: {0}")]
    Degenerate(String),
    #[error("indeterminate: {0}")]
    Indeterminate(String),
    #[error("unsupported model: {0}")]
    Unsupported(String),
}
