//! Exact Riemann solver for the one-dimensional Euler equations with a
//! Dirac-delta source concentrated at `x = 0`.
//!
//! The source acts as a stationary discontinuity whose flux jump is a fixed
//! diagonal gain. The crate provides the ideal-gas layer, classical waves and
//! the exact classical Riemann solver, the stationary wave with its admissible
//! sets, and the coupled solver that classifies the global structure.
//!
//! ```
//! use singular_riemann::{solve, GasModel, GasState, SolveOptions, SourceCoefficients};
//!
//! let model = GasModel::default();
//! let left = GasState::new(1.0, 0.3, 1.0).unwrap();
//! let right = GasState::new(1.0, 0.3, 1.0).unwrap();
//! let coeffs = SourceCoefficients::new(0.0, 0.0, 0.2).unwrap();
//! let sol = solve(&left, &right, &coeffs, &model, &SolveOptions::default()).unwrap();
//! assert!(sol.stationary.is_some());
//! ```

#![cfg_attr(not(any(test, feature = "std")), no_std)]

extern crate alloc;

pub mod classical;
pub mod coupled;
pub mod error;
pub mod gas;
mod math;
pub mod roots;
pub mod small;
pub mod stationary;

pub use classical::{solve_crp, ClassicalWave, CrpSolution, WaveFamily, WaveKind};
pub use coupled::{
    admissible_constructions, classify, mirror_problem, residual_report, solve, verify_uniqueness_pair,
    ResidualReport, SingularSolution, SolveOptions, StructureTag, StructureType,
};
pub use error::{Error, Result};
pub use gas::{ConservedVector, FluxVector, GasModel, GasState};
pub use stationary::{
    admissible_sets, backward_curve, composite_k, critical_machs, forward_curve, SourceCoefficients,
    StationaryWavePair,
};
