//! Rational points on diagonal quartic and sextic surfaces via genus-one fibrations.

#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod cli;
pub mod families;
pub mod genus1;
pub mod verify;
