//! Executable families: parameters in, surface, fiber curve, seed point and
//! pullback out.

pub mod instance;
pub mod registry;
pub mod special;
pub mod surface;
pub mod template;

pub use instance::{
    generate_points, instantiate, instantiate_with, Fiber, Generated, SurfaceInstance,
};
pub use registry::{family, list_families, CurveTemplate, FamilySpec, ParamSpec, FAMILIES};
pub use special::{carmichael_solution, conic_2k2_solution, sixth_power_chain, ChainMember};
pub use surface::{
    canonicalize, class_key, equivalent, weights, DiagonalSurface, ProjPoint, EXPONENT_TYPES,
};

use crate::algebra::AlgebraError;
use crate::genus1::Genus1Error;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FamilyError {
    #[error("unknown family {0}")]
    UnknownFamily(String),
    #[error("bad parameter: {0}")]
    BadParam(String),
    #[error("inadmissible parameters: {0}")]
    Inadmissible(String),
    #[error("bad surface: {0}")]
    BadSurface(String),
    #[error("bad point: {0}")]
    BadPoint(String),
    #[error("degenerate specialization: {0}")]
    Degenerate(String),
    #[error("indeterminate: {0}")]
    Indeterminate(String),
    #[error(transparent)]
    Genus1(#[from] Genus1Error),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
