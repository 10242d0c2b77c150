//! Global Riemann solver with the source at the origin.
//!
//! The solution is a classical wave fan on each half line, glued together by
//! the stationary wave on `x = 0`. Left waves run at nonpositive speed from
//! `U_L` to `U-`, right waves at nonnegative speed from `U+` to `U_R`.

mod classify;
mod construct;
mod residual;

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

pub use classify::{classify, pattern_tags, table_verdict};
pub use construct::{admissible_constructions, solve, verify_uniqueness_pair, Candidate, Route};
pub use residual::{residual_report, ResidualReport};

use crate::classical::{sample_waves, ClassicalWave, CrpSolution};
use crate::error::{Error, Result};
use crate::gas::{GasModel, GasState};
use crate::roots::RootOptions;
use crate::stationary::{FlowDirection, SourceCoefficients, StationaryWavePair};

/// The seven global structures plus the source-free fallback.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum StructureTag {
    /// `W + D + C + W`, unchoked, subsonic through the origin.
    Type1,
    /// `D + W + C + W`, unchoked, supersonic through the origin.
    Type2,
    /// `W + D + R + C + W` with `M+ = 1`.
    Type3,
    /// `D + R + C + W` with `M+ = 1`.
    Type4,
    /// `R + D + W + C + W` with `M- = 1`.
    Type5,
    /// `R + D + C + W` with `M- = 1`.
    Type6,
    /// `R + D + R + C + W` with `M- = M+ = 1`.
    Type7,
    /// Flow stagnates or reverses at the origin, so the source is inactive.
    SourceOffClassical,
}

impl StructureTag {
    pub const ALL: [StructureTag; 8] = [
        Self::Type1,
        Self::Type2,
        Self::Type3,
        Self::Type4,
        Self::Type5,
        Self::Type6,
        Self::Type7,
        Self::SourceOffClassical,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Self::Type1 => "Type1",
            Self::Type2 => "Type2",
            Self::Type3 => "Type3",
            Self::Type4 => "Type4",
            Self::Type5 => "Type5",
            Self::Type6 => "Type6",
            Self::Type7 => "Type7",
            Self::SourceOffClassical => "SourceOffClassical",
        }
    }

    pub fn is_choked(self) -> bool {
        matches!(
            self,
            Self::Type3 | Self::Type4 | Self::Type5 | Self::Type6 | Self::Type7
        )
    }
}

impl fmt::Display for StructureTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Structure tag plus whether the problem was solved in the mirrored frame.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct StructureType {
    pub tag: StructureTag,
    pub mirrored: bool,
}

/// Tolerances and caps for [`solve`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolveOptions {
    pub root: RootOptions,
    /// `|M - 1|` below this counts as sonic in classification.
    pub sonic_tol: f64,
    /// Allowed wrong-sign wave speed, relative to the problem's speed scale.
    pub speed_tol: f64,
    /// Largest accepted entry of the residual report.
    pub residual_tol: f64,
    /// Sample count of the scan that brackets the subsonic trace root.
    pub scan_points: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        Self {
            root: RootOptions::default(),
            sonic_tol: 1e-9,
            speed_tol: 1e-9,
            residual_tol: 1e-8,
            scan_points: 64,
        }
    }
}

impl SolveOptions {
    pub fn validate(&self) -> Result<()> {
        let positive = [
            ("root.abs_tol", self.root.abs_tol),
            ("root.rel_tol", self.root.rel_tol),
            ("sonic_tol", self.sonic_tol),
            ("speed_tol", self.speed_tol),
            ("residual_tol", self.residual_tol),
        ];
        for (name, v) in positive {
            if !(v > 0.0) || !v.is_finite() {
                return Err(Error::NonPhysical { quantity: name, value: v });
            }
        }
        if self.root.max_iter == 0 {
            return Err(Error::NonPhysical {
                quantity: "root.max_iter",
                value: 0.0,
            });
        }
        if self.scan_points < 2 {
            return Err(Error::NonPhysical {
                quantity: "scan_points",
                value: self.scan_points as f64,
            });
        }
        Ok(())
    }
}

/// Self-similar solution `U(x/t)` of the Riemann problem with source.
#[derive(Debug, Clone, PartialEq)]
pub struct SingularSolution {
    pub structure: StructureType,
    pub left: GasState,
    pub right: GasState,
    pub coeffs: SourceCoefficients,
    /// Waves in `x < 0`, ordered left to right.
    pub left_waves: Vec<ClassicalWave>,
    /// Waves in `x > 0`, ordered left to right.
    pub right_waves: Vec<ClassicalWave>,
    pub stationary: Option<StationaryWavePair>,
    /// Present only for the source-free fallback.
    pub classical: Option<CrpSolution>,
    pub route: Option<Route>,
    pub diagnostics: Vec<String>,
}

impl SingularSolution {
    pub(crate) fn source_off(classical: CrpSolution, coeffs: SourceCoefficients) -> Self {
        Self {
            structure: StructureType {
                tag: StructureTag::SourceOffClassical,
                mirrored: false,
            },
            left: classical.left,
            right: classical.right,
            coeffs,
            left_waves: Vec::new(),
            right_waves: Vec::new(),
            stationary: None,
            classical: Some(classical),
            route: None,
            diagnostics: Vec::new(),
        }
    }

    /// State at `xi = x / t`; right-continuous, so `sample(0)` is the limit from `x > 0`.
    pub fn sample(&self, xi: f64, model: &GasModel) -> GasState {
        if let Some(c) = &self.classical {
            return c.sample(xi, model);
        }
        if xi < 0.0 {
            sample_waves(&self.left_waves, &self.left, xi, model)
        } else {
            sample_waves(&self.right_waves, &self.right_limit(), xi, model)
        }
    }

    /// `U(0-)`.
    pub fn left_limit(&self, model: &GasModel) -> GasState {
        match (&self.stationary, &self.classical) {
            (Some(pair), _) => pair.left_state,
            (None, Some(c)) => c.sample(-f64::MIN_POSITIVE, model),
            (None, None) => self.left,
        }
    }

    /// `U(0+)`.
    pub fn right_limit(&self) -> GasState {
        match &self.stationary {
            Some(pair) => pair.right_state,
            None => self.right,
        }
    }

    /// Every wave in spatial order.
    pub fn waves(&self) -> Vec<ClassicalWave> {
        match &self.classical {
            Some(c) => c.waves.clone(),
            None => self.left_waves.iter().chain(self.right_waves.iter()).copied().collect(),
        }
    }

    /// Constant states in spatial order with their conventional names.
    pub fn states(&self) -> Vec<(String, GasState)> {
        let mut out = Vec::new();
        out.push((String::from("UL"), self.left));
        if let Some(c) = &self.classical {
            out.push((String::from("U*L"), c.star_left()));
            out.push((String::from("U*R"), c.star_right()));
        } else {
            let mut n = 1;
            let left_count = self.left_waves.len();
            for (i, w) in self.left_waves.iter().enumerate() {
                let name = if i + 1 == left_count {
                    String::from("U-")
                } else {
                    let s = format!("U{n}");
                    n += 1;
                    s
                };
                out.push((name, w.right_state));
            }
            if left_count == 0 {
                out.push((String::from("U-"), self.left_limit(&GasModel::default())));
            }
            out.push((String::from("U+"), self.right_limit()));
            let mut n = 3;
            let right_count = self.right_waves.len();
            for w in self.right_waves.iter().take(right_count.saturating_sub(1)) {
                out.push((format!("U{n}"), w.right_state));
                n += 1;
            }
        }
        out.push((String::from("UR"), self.right));
        out
    }

    /// The reflected solution `x -> -x, u -> -u`.
    pub fn mirror(&self) -> Self {
        let flip = |ws: &[ClassicalWave]| ws.iter().rev().map(ClassicalWave::mirror).collect();
        Self {
            structure: StructureType {
                tag: self.structure.tag,
                mirrored: !self.structure.mirrored,
            },
            left: self.right.mirror(),
            right: self.left.mirror(),
            coeffs: self.coeffs,
            left_waves: flip(&self.right_waves),
            right_waves: flip(&self.left_waves),
            stationary: self.stationary.map(|p| p.mirror()),
            classical: self.classical.as_ref().map(CrpSolution::mirror),
            route: self.route,
            diagnostics: self.diagnostics.clone(),
        }
    }

    /// The same solution seen in the frame where the flow through the origin is rightward.
    pub(crate) fn rightward_frame(&self) -> Self {
        match &self.stationary {
            Some(p) if p.direction == FlowDirection::Leftward => self.mirror(),
            _ => self.clone(),
        }
    }
}

/// Reflects a Riemann problem: `(U_L, U_R) -> (m(U_R), m(U_L))`.
pub fn mirror_problem(left: &GasState, right: &GasState) -> (GasState, GasState) {
    (right.mirror(), left.mirror())
}
