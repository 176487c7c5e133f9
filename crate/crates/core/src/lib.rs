//! Exact root-system computations for extended Dynkin quivers and the
//! singularities of their quiver varieties at dimension `delta`.

#![allow(clippy::needless_range_loop)]

pub mod bordism;
pub mod classify;
pub mod cli;
pub mod decompose;
pub mod diagrams;
pub mod error;
pub mod gaussian;
pub mod oracle;
pub mod replab;
pub mod roots;
pub mod verify;

pub use diagrams::{AdeType, Diagram, ExtendedDiagram, Quiver};
pub use error::{Error, Result};
pub use gaussian::GaussianRational;
pub use roots::{Parameter, Root, RootSystem};
