//! Exact Riemann solutions and wave-speed bounds for three hyperbolic
//! systems: the ideal-gas Euler equations, the shallow-water equations and
//! the one-dimensional blood-flow equations.
//!
//! Each system reduces its Riemann problem to a scalar, monotone, concave
//! star function. The exact solver finds its root with a guarded Newton
//! iteration; the bound estimators (`Toro`, `TmsA`..`TmsD`) avoid the
//! iteration and are guaranteed to enclose the exact extreme speeds.

pub mod bloodflow;
pub mod cfl;
pub mod check;
pub mod cli;
pub mod ensemble;
pub mod error;
pub mod euler;
pub mod fixtures;
pub mod reproduce;
pub mod roots;
pub mod shallow;
pub mod system;
pub mod types;

pub use cfl::courant_dt;
pub use error::{Error, Result};
pub use roots::{find_root, find_root_newton, interpolate_root, RootBracket};
pub use system::{RiemannProblem, StarSolution, WaveSystem};
pub use types::{EstimatorId, SpeedBounds, WavePattern};
