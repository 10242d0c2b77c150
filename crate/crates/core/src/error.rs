use alloc::string::String;
use alloc::vec::Vec;

use crate::coupled::StructureTag;

/// Errors raised anywhere in the solver stack.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    /// A state or conserved vector violates positivity (vacuum or negative pressure).
    #[error("non-physical {quantity}: {value}")]
    NonPhysical { quantity: &'static str, value: f64 },

    /// Ratio of specific heats must exceed one.
    #[error("gamma must be > 1, got {0}")]
    InvalidGamma(f64),

    /// Source gains must satisfy k_i > -1.
    #[error("{name} > -1 required, got {value}")]
    InvalidCoefficient { name: &'static str, value: f64 },

    /// Wave-curve evaluation outside the branch's pressure range.
    #[error("{0}")]
    Domain(&'static str),

    /// Shock speed estimates from the three Rankine-Hugoniot rows disagree.
    #[error("inconsistent shock states: sigma estimates spread {spread:e}")]
    InconsistentStates { spread: f64 },

    /// The two rarefactions separate and a vacuum forms.
    #[error("vacuum generated: pressure positivity condition violated (du = {du}, limit = {limit})")]
    Vacuum { du: f64, limit: f64 },

    /// Root finding exceeded its iteration budget.
    #[error("root finding did not converge after {iterations} iterations")]
    Convergence { iterations: usize },

    /// No stationary wave exists for this upstream Mach number.
    #[error("no stationary wave for Mach number {mach}")]
    NoSolution { mach: f64 },

    /// Supersonic branch undefined because gamma * I > 1.
    #[error("supersonic branch undefined at Mach number {mach} (gamma*I = {gamma_i})")]
    BranchUndefined { mach: f64, gamma_i: f64 },

    /// Stationary-wave routines expect positive velocity; mirror first.
    #[error("upstream velocity must be positive, got {0}")]
    NegativeVelocity(f64),

    /// Mach pair lies outside the admissible quadrants of the criterion.
    #[error("Mach pair ({m_minus}, {m_plus}) outside the admissible region")]
    OutsideAdmissible { m_minus: f64, m_plus: f64 },

    /// Every construction attempt failed.
    #[error("no admissible structure: {}", attempts.join("; "))]
    NoAdmissibleStructure { attempts: Vec<String> },

    /// Realized wave pattern and Mach-range table disagree.
    #[error("classification conflict: wave pattern says {pattern:?}, Mach ranges say {table:?}")]
    ClassificationConflict {
        pattern: StructureTag,
        table: StructureTag,
    },
}

pub type Result<T> = core::result::Result<T, Error>;
