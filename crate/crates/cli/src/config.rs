//! TOML problem description.
//!
//! ```toml
//! gamma = 1.4
//!
//! [left]
//! rho = 1.0
//! u = 0.0
//! p = 1.0
//!
//! [right]
//! rho = 0.125
//! u = 0.0
//! p = 0.1
//!
//! [coefficients]
//! k3 = 0.2
//! ```
//!
//! Every other table (`solver`, `grid`, `curve`, `sweep`) is optional and
//! filled with defaults on parse.

use serde::{Deserialize, Serialize};
use singular_riemann::roots::RootOptions;
use singular_riemann::{GasModel, GasState, SolveOptions, SourceCoefficients};

use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemConfig {
    #[serde(default = "default_gamma")]
    pub gamma: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub left: Option<StateConfig>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub right: Option<StateConfig>,
    #[serde(default)]
    pub coefficients: CoeffConfig,
    #[serde(default)]
    pub solver: SolverConfig,
    #[serde(default)]
    pub grid: GridConfig,
    #[serde(default)]
    pub curve: CurveConfig,
    #[serde(default)]
    pub sweep: SweepConfig,
}

fn default_gamma() -> f64 {
    1.4
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct StateConfig {
    pub rho: f64,
    #[serde(default)]
    pub u: f64,
    pub p: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct CoeffConfig {
    pub k1: f64,
    pub k2: f64,
    pub k3: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct SolverConfig {
    pub sonic_tol: f64,
    pub speed_tol: f64,
    pub residual_tol: f64,
    pub scan_points: usize,
    pub root_abs_tol: f64,
    pub root_rel_tol: f64,
    pub root_max_iter: usize,
}

impl Default for SolverConfig {
    fn default() -> Self {
        let o = SolveOptions::default();
        Self {
            sonic_tol: o.sonic_tol,
            speed_tol: o.speed_tol,
            residual_tol: o.residual_tol,
            scan_points: o.scan_points,
            root_abs_tol: o.root.abs_tol,
            root_rel_tol: o.root.rel_tol,
            root_max_iter: o.root.max_iter,
        }
    }
}

/// Sampling grid for `profile`. With `time` set, the grid runs over `x` in
/// `[x_min, x_max]` and is sampled at `xi = x / time`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct GridConfig {
    pub xi_min: f64,
    pub xi_max: f64,
    pub count: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub time: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x_min: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub x_max: Option<f64>,
}

impl Default for GridConfig {
    fn default() -> Self {
        Self {
            xi_min: -2.0,
            xi_max: 2.0,
            count: 201,
            time: None,
            x_min: None,
            x_max: None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CurveKind {
    /// `M+` from `M-` along the admissible branch.
    Forward,
    /// `M-` from `M+`.
    Backward,
    /// Both algebraic branches, admissible or not.
    Branch,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct CurveConfig {
    pub kind: CurveKind,
    pub m_min: f64,
    pub m_max: f64,
    pub count: usize,
}

impl Default for CurveConfig {
    fn default() -> Self {
        Self {
            kind: CurveKind::Forward,
            m_min: 0.01,
            m_max: 3.0,
            count: 300,
        }
    }
}

/// Structure atlas over inflow Mach numbers. Densities and pressures come
/// from `left` and `right`; velocities are `M * a`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct SweepConfig {
    pub ml_min: f64,
    pub ml_max: f64,
    pub ml_count: usize,
    pub mr_min: f64,
    pub mr_max: f64,
    pub mr_count: usize,
    /// Coefficient sets to sweep; empty means the top-level `coefficients`.
    pub coefficients: Vec<CoeffConfig>,
    /// Worker threads; 0 lets the pool decide.
    pub workers: usize,
    /// If nonzero, draw this many random `(ML, MR)` points per coefficient set
    /// (seeded by `--seed`) instead of the tensor grid.
    pub samples: usize,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self {
            ml_min: -3.0,
            ml_max: 3.0,
            ml_count: 50,
            mr_min: -3.0,
            mr_max: 3.0,
            mr_count: 50,
            coefficients: Vec::new(),
            workers: 0,
            samples: 0,
        }
    }
}

/// Parses and validates a TOML document.
pub fn parse_config(text: &str) -> CliResult<ProblemConfig> {
    let table: toml::Table = text.parse().map_err(|e: toml::de::Error| CliError::Parse {
        path: String::from("<document>"),
        message: e.message().to_string(),
    })?;
    let cfg: ProblemConfig =
        serde_path_to_error::deserialize(toml::Value::Table(table)).map_err(|e| CliError::Parse {
            path: e.path().to_string(),
            message: e.inner().to_string(),
        })?;
    cfg.validate()?;
    Ok(cfg)
}

/// Serializes a config back to TOML with every default spelled out.
pub fn emit_config(cfg: &ProblemConfig) -> String {
    toml::to_string(cfg).expect("config tables serialize")
}

fn require(ok: bool, field: &str, constraint: &str) -> CliResult<()> {
    if ok {
        Ok(())
    } else {
        Err(CliError::validation(field, constraint))
    }
}

fn finite(v: f64, field: &str) -> CliResult<()> {
    require(v.is_finite(), field, &format!("{} must be finite", leaf(field)))
}

fn leaf(field: &str) -> &str {
    field.rsplit('.').next().unwrap_or(field)
}

fn positive(v: f64, field: &str) -> CliResult<()> {
    require(v.is_finite() && v > 0.0, field, &format!("{} > 0 required", leaf(field)))
}

impl StateConfig {
    fn validate(&self, side: &str) -> CliResult<()> {
        positive(self.rho, &format!("{side}.rho"))?;
        finite(self.u, &format!("{side}.u"))?;
        positive(self.p, &format!("{side}.p"))
    }

    pub fn state(&self) -> GasState {
        GasState {
            rho: self.rho,
            u: self.u,
            p: self.p,
        }
    }
}

impl CoeffConfig {
    fn validate(&self, prefix: &str) -> CliResult<()> {
        for (name, v) in [("k1", self.k1), ("k2", self.k2), ("k3", self.k3)] {
            let field = format!("{prefix}.{name}");
            finite(v, &field)?;
            require(v > -1.0, &field, &format!("{name} > -1 required"))?;
        }
        Ok(())
    }

    pub fn coeffs(&self) -> SourceCoefficients {
        SourceCoefficients {
            k1: self.k1,
            k2: self.k2,
            k3: self.k3,
        }
    }
}

impl ProblemConfig {
    pub fn validate(&self) -> CliResult<()> {
        require(self.gamma.is_finite() && self.gamma > 1.0, "gamma", "gamma > 1 required")?;
        if let Some(s) = &self.left {
            s.validate("left")?;
        }
        if let Some(s) = &self.right {
            s.validate("right")?;
        }
        self.coefficients.validate("coefficients")?;

        let s = &self.solver;
        for (name, v) in [
            ("solver.sonic_tol", s.sonic_tol),
            ("solver.speed_tol", s.speed_tol),
            ("solver.residual_tol", s.residual_tol),
            ("solver.root_abs_tol", s.root_abs_tol),
            ("solver.root_rel_tol", s.root_rel_tol),
        ] {
            positive(v, name)?;
        }
        require(s.scan_points >= 2, "solver.scan_points", "scan_points >= 2 required")?;
        require(s.root_max_iter >= 1, "solver.root_max_iter", "root_max_iter >= 1 required")?;

        let g = &self.grid;
        require(g.count >= 2, "grid.count", "count >= 2 required")?;
        match g.time {
            Some(t) => {
                positive(t, "grid.time")?;
                let (Some(lo), Some(hi)) = (g.x_min, g.x_max) else {
                    return Err(CliError::validation("grid", "x_min and x_max required with time"));
                };
                finite(lo, "grid.x_min")?;
                finite(hi, "grid.x_max")?;
                require(lo < hi, "grid.x_max", "x_min < x_max required")?;
            }
            None => {
                require(g.x_min.is_none() && g.x_max.is_none(), "grid.x_min", "x range requires time")?;
                finite(g.xi_min, "grid.xi_min")?;
                finite(g.xi_max, "grid.xi_max")?;
                require(g.xi_min < g.xi_max, "grid.xi_max", "xi_min < xi_max required")?;
            }
        }

        let c = &self.curve;
        require(c.count >= 2, "curve.count", "count >= 2 required")?;
        positive(c.m_min, "curve.m_min")?;
        finite(c.m_max, "curve.m_max")?;
        require(c.m_min < c.m_max, "curve.m_max", "m_min < m_max required")?;

        let w = &self.sweep;
        for (name, v) in [
            ("sweep.ml_min", w.ml_min),
            ("sweep.ml_max", w.ml_max),
            ("sweep.mr_min", w.mr_min),
            ("sweep.mr_max", w.mr_max),
        ] {
            finite(v, name)?;
        }
        require(w.ml_min <= w.ml_max, "sweep.ml_max", "ml_min <= ml_max required")?;
        require(w.mr_min <= w.mr_max, "sweep.mr_max", "mr_min <= mr_max required")?;
        require(w.ml_count >= 1, "sweep.ml_count", "ml_count >= 1 required")?;
        require(w.mr_count >= 1, "sweep.mr_count", "mr_count >= 1 required")?;
        for (i, k) in w.coefficients.iter().enumerate() {
            k.validate(&format!("sweep.coefficients[{i}]"))?;
        }
        Ok(())
    }

    pub fn model(&self) -> GasModel {
        GasModel::new(self.gamma).expect("validated gamma")
    }

    pub fn coeffs(&self) -> SourceCoefficients {
        self.coefficients.coeffs()
    }

    pub fn options(&self) -> SolveOptions {
        let s = &self.solver;
        SolveOptions {
            root: RootOptions {
                abs_tol: s.root_abs_tol,
                rel_tol: s.root_rel_tol,
                max_iter: s.root_max_iter,
            },
            sonic_tol: s.sonic_tol,
            speed_tol: s.speed_tol,
            residual_tol: s.residual_tol,
            scan_points: s.scan_points,
        }
    }

    /// Both Riemann states; an error names the missing table.
    pub fn states(&self) -> CliResult<(GasState, GasState)> {
        let l = self.left.ok_or_else(|| CliError::validation("left", "left state required"))?;
        let r = self.right.ok_or_else(|| CliError::validation("right", "right state required"))?;
        Ok((l.state(), r.state()))
    }

    /// Coefficient sets the sweep runs over.
    pub fn sweep_coeffs(&self) -> Vec<CoeffConfig> {
        if self.sweep.coefficients.is_empty() {
            vec![self.coefficients]
        } else {
            self.sweep.coefficients.clone()
        }
    }
}
