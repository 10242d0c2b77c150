//! Building candidate solutions and choosing among them.
//!
//! In the frame where the flow crosses the origin rightward, `U-` lies on the
//! 1-wave curve of `U_L`, `U+` is its image under the stationary wave and the
//! right half line carries a classical Riemann fan from `U+` to `U_R`. Three
//! routes fix `U-`:
//!
//! * no left wave: `U- = U_L` (supersonic or sonic inflow),
//! * choke boundary: `M-` sits on the edge of the upstream admissible set and
//!   the right fan absorbs the remaining mismatch,
//! * interior trace: `U+` lies on the 3-wave curve of `U_R`, a scalar root in `p-`.
//!
//! Leftward flow is handled by mirroring the problem.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::classical::{
    check_vacuum, solve_crp_with, wave_between, wave_curve_state, wave_curve_velocity, CrpSolution, CurveSide,
    WaveFamily,
};
use crate::error::{Error, Result};
use crate::gas::{GasModel, GasState};
use crate::math::{abs, powf};
use crate::roots::{brent_with_values, expand_upward};
use crate::stationary::{critical_machs, forward_curve, CriticalMachNumbers, SourceCoefficients, StationaryWavePair};

use super::{classify, residual_report, SingularSolution, SolveOptions, StructureTag, StructureType};

/// How `U-` was fixed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Route {
    NoLeftWave,
    InteriorTrace,
    ChokeBoundary,
}

impl Route {
    pub fn name(self) -> &'static str {
        match self {
            Self::NoLeftWave => "no-left-wave",
            Self::InteriorTrace => "interior-trace",
            Self::ChokeBoundary => "choke-boundary",
        }
    }
}

/// One complete construction with its classification outcome.
#[derive(Debug, Clone, PartialEq)]
pub struct Candidate {
    pub route: Route,
    pub solution: SingularSolution,
    pub classification: Result<StructureType>,
    /// Largest entry of the residual report.
    pub residual: f64,
}

struct Ctx<'a> {
    left: GasState,
    right: GasState,
    coeffs: SourceCoefficients,
    model: &'a GasModel,
    opts: &'a SolveOptions,
    /// Absolute speed tolerance.
    speed_tol: f64,
    mirrored: bool,
}

impl Ctx<'_> {
    fn tag(&self) -> &'static str {
        if self.mirrored {
            "leftward"
        } else {
            "rightward"
        }
    }

    fn right_fan_ok(&self, crp: &CrpSolution) -> core::result::Result<(), String> {
        for w in crp.waves.iter().filter(|w| !w.degenerate) {
            if w.speed_lo < -self.speed_tol {
                return Err(format!("{:?} {:?} at speed {:.3e} < 0", w.family, w.kind, w.speed_lo));
            }
        }
        Ok(())
    }

    fn assemble(&self, route: Route, u_minus: GasState, pair: StationaryWavePair, crp: CrpSolution) -> SingularSolution {
        let left_wave = wave_between(WaveFamily::Family1, self.left, u_minus, self.model);
        SingularSolution {
            structure: StructureType {
                tag: StructureTag::Type1,
                mirrored: false,
            },
            left: self.left,
            right: self.right,
            coeffs: self.coeffs,
            left_waves: vec![left_wave],
            right_waves: crp.waves,
            stationary: Some(pair),
            classical: None,
            route: Some(route),
            diagnostics: Vec::new(),
        }
    }

    /// Accepts a construction if the left wave runs leftward and the right fan rightward.
    fn try_close(
        &self,
        route: Route,
        u_minus: GasState,
        pair: StationaryWavePair,
        crp: Result<CrpSolution>,
        out: &mut Vec<SingularSolution>,
        log: &mut Vec<String>,
    ) {
        let crp = match crp {
            Ok(c) => c,
            Err(e) => {
                log.push(format!("{} {}: right fan failed: {e}", self.tag(), route.name()));
                return;
            }
        };
        if let Err(why) = self.right_fan_ok(&crp) {
            log.push(format!("{} {}: {why}", self.tag(), route.name()));
            return;
        }
        let sol = self.assemble(route, u_minus, pair, crp);
        let lw = &sol.left_waves[0];
        if !lw.degenerate && lw.speed_hi > self.speed_tol {
            log.push(format!(
                "{} {}: left {:?} at speed {:.3e} > 0",
                self.tag(),
                route.name(),
                lw.kind,
                lw.speed_hi
            ));
            return;
        }
        out.push(sol);
    }

    /// Pressure on the left 1-curve where the velocity vanishes, if reachable.
    fn zero_velocity_pressure(&self) -> Option<f64> {
        let (l, m) = (&self.left, self.model);
        let g = m.gamma();
        if l.u == 0.0 {
            return Some(l.p);
        }
        if l.u < 0.0 {
            let base = 1.0 + 0.5 * (g - 1.0) * l.u / m.sound_speed(l);
            if base <= 0.0 {
                return None;
            }
            return Some(l.p * powf(base, 2.0 * g / (g - 1.0)));
        }
        let f = |p: f64| wave_curve_velocity(CurveSide::FromLeftState, p, l, m);
        let (hi, fhi) = expand_upward(f, l.p, l.u, 2.0 * l.p, 400).ok()?;
        brent_with_values(f, l.p, hi, l.u, fhi, &self.opts.root).ok()
    }

    /// Pressure on the left 1-curve where `M- = target`.
    fn choke_pressure(&self, target: f64) -> Result<f64> {
        let (l, m) = (&self.left, self.model);
        let g = m.gamma();
        let ml = m.mach(l);
        if ml == target {
            return Ok(l.p);
        }
        if ml < target {
            // along the rarefaction u + 2a/(g-1) is constant and M = u/a
            let al = m.sound_speed(l);
            let j = l.u + 2.0 * al / (g - 1.0);
            let ab = j / (target + 2.0 / (g - 1.0));
            return Ok(l.p * powf(ab / al, 2.0 * g / (g - 1.0)));
        }
        let f = |p: f64| match wave_curve_state(CurveSide::FromLeftState, p, l, m) {
            Ok(s) => m.mach(&s) - target,
            Err(_) => f64::NAN,
        };
        let f0 = ml - target;
        let (hi, fhi) = expand_upward(f, l.p, f0, 2.0 * l.p, 400)?;
        brent_with_values(f, l.p, hi, f0, fhi, &self.opts.root)
    }

    fn rightward(&self, log: &mut Vec<String>) -> Vec<SingularSolution> {
        let (l, m, c) = (&self.left, self.model, &self.coeffs);
        let g = m.gamma();
        let ml = m.mach(l);
        let mut out = Vec::new();

        if ml >= 1.0 - self.opts.sonic_tol {
            match forward_curve(l, c, m) {
                Ok(pairs) => {
                    for pair in pairs {
                        let crp = solve_crp_with(&pair.right_state, &self.right, m, &self.opts.root);
                        self.try_close(Route::NoLeftWave, *l, pair, crp, &mut out, log);
                    }
                }
                Err(e) => log.push(format!("{} no-left-wave: {e}", self.tag())),
            }
        }

        let Some(p_zero) = self.zero_velocity_pressure() else {
            log.push(format!("{}: left 1-curve never reaches positive velocity", self.tag()));
            return out;
        };
        let m_bound = match critical_machs(c.k(), m) {
            CriticalMachNumbers::Positive { m1_star, .. } => m1_star,
            _ => 1.0,
        };
        // a left shock from supersonic inflow must not run rightward
        let p_still = if ml > 1.0 {
            l.p * (2.0 * g * ml * ml - (g - 1.0)) / (g + 1.0)
        } else {
            0.0
        };
        let p_choke = match self.choke_pressure(m_bound) {
            Ok(p) => Some(p),
            Err(e) => {
                log.push(format!("{} choke-boundary: {e}", self.tag()));
                None
            }
        };

        if let Some(pb) = p_choke {
            if pb >= p_still * (1.0 - 1e-10) && pb < p_zero {
                self.choke_candidates(pb, &mut out, log);
            } else {
                log.push(format!(
                    "{} choke-boundary: pressure {pb:.6e} outside [{p_still:.6e}, {p_zero:.6e})",
                    self.tag()
                ));
            }
        }

        let p_lo = p_choke.unwrap_or(0.0).max(p_still);
        if p_lo > 0.0 && p_lo < p_zero {
            self.interior_candidates(p_lo, p_zero, &mut out, log);
        }
        out
    }

    fn choke_candidates(&self, pb: f64, out: &mut Vec<SingularSolution>, log: &mut Vec<String>) {
        let (m, c) = (self.model, &self.coeffs);
        let u_minus = match wave_curve_state(CurveSide::FromLeftState, pb, &self.left, m) {
            Ok(s) => s,
            Err(e) => {
                log.push(format!("{} choke-boundary: {e}", self.tag()));
                return;
            }
        };
        match forward_curve(&u_minus, c, m) {
            Ok(pairs) => {
                for pair in pairs {
                    let crp = solve_crp_with(&pair.right_state, &self.right, m, &self.opts.root);
                    self.try_close(Route::ChokeBoundary, u_minus, pair, crp, out, log);
                }
            }
            Err(e) => log.push(format!("{} choke-boundary: {e}", self.tag())),
        }
    }

    /// Mismatch between the subsonic downstream trace and the right 3-curve.
    fn trace(&self, p: f64) -> Option<(GasState, StationaryWavePair, f64)> {
        let m = self.model;
        let u_minus = wave_curve_state(CurveSide::FromLeftState, p, &self.left, m).ok()?;
        if !(u_minus.u > 0.0) {
            return None;
        }
        let pair = forward_curve(&u_minus, &self.coeffs, m).ok()?.first()?;
        let down = pair.right_state;
        let g = down.u - wave_curve_velocity(CurveSide::FromRightState, down.p, &self.right, m);
        Some((u_minus, pair, g))
    }

    fn interior_candidates(&self, p_lo: f64, p_hi: f64, out: &mut Vec<SingularSolution>, log: &mut Vec<String>) {
        let m = self.model;
        let n = self.opts.scan_points;
        let eval = |p: f64| self.trace(p).map_or(f64::NAN, |t| t.2);
        // zero inflow: U+ stagnates at pressure (1 + k2) p-
        let g_hi = -wave_curve_velocity(CurveSide::FromRightState, (1.0 + self.coeffs.k2) * p_hi, &self.right, m);
        let ratio = p_hi / p_lo;
        let mut pts: Vec<(f64, f64)> = (0..n)
            .map(|i| {
                let p = p_lo * powf(ratio, i as f64 / n as f64);
                (p, eval(p))
            })
            .collect();
        pts.push((p_hi, g_hi));

        let mut roots: Vec<f64> = Vec::new();
        let scale = m.velocity_scale(&self.left).max(m.velocity_scale(&self.right));
        if abs(pts[0].1) <= 1e-12 * scale {
            roots.push(p_lo);
        }
        for w in pts.windows(2) {
            let ((pa, ga), (pb, gb)) = (w[0], w[1]);
            if ga.is_nan() || gb.is_nan() || ga == 0.0 || (ga > 0.0) == (gb > 0.0) {
                continue;
            }
            match brent_with_values(eval, pa, pb, ga, gb, &self.opts.root) {
                Ok(p) if p < p_hi => roots.push(p),
                Ok(_) => {}
                Err(e) => log.push(format!("{} interior-trace: {e}", self.tag())),
            }
        }
        if roots.is_empty() {
            log.push(format!(
                "{} interior-trace: no sign change on [{p_lo:.6e}, {p_hi:.6e})",
                self.tag()
            ));
        }
        for p in roots {
            let Some((u_minus, pair, _)) = self.trace(p) else {
                continue;
            };
            let down = pair.right_state;
            let crp = CrpSolution::from_star(down, self.right, down.p, down.u, m);
            self.try_close(Route::InteriorTrace, u_minus, pair, crp, out, log);
        }
    }
}

fn candidates_in_frame(
    left: GasState,
    right: GasState,
    coeffs: &SourceCoefficients,
    model: &GasModel,
    opts: &SolveOptions,
    mirrored: bool,
    log: &mut Vec<String>,
) -> Vec<Candidate> {
    let scale = model.velocity_scale(&left).max(model.velocity_scale(&right));
    let ctx = Ctx {
        left,
        right,
        coeffs: *coeffs,
        model,
        opts,
        speed_tol: opts.speed_tol * scale,
        mirrored,
    };
    ctx.rightward(log)
        .into_iter()
        .map(|s| {
            let mut sol = if mirrored { s.mirror() } else { s };
            let classification = classify(&sol, model);
            if let Ok(t) = classification {
                sol.structure = t;
            } else {
                sol.structure.mirrored = mirrored;
            }
            let residual = residual_report(&sol, model).max;
            Candidate {
                route: sol.route.unwrap_or(Route::InteriorTrace),
                solution: sol,
                classification,
                residual,
            }
        })
        .collect()
}

/// Every construction in both flow directions, without the source-off shortcut.
/// Returns the candidates and a log of the attempts that failed.
pub fn admissible_constructions(
    left: &GasState,
    right: &GasState,
    coeffs: &SourceCoefficients,
    model: &GasModel,
    opts: &SolveOptions,
) -> Result<(Vec<Candidate>, Vec<String>)> {
    left.validate()?;
    right.validate()?;
    coeffs.validate()?;
    opts.validate()?;
    let mut log = Vec::new();
    let mut all = candidates_in_frame(*left, *right, coeffs, model, opts, false, &mut log);
    let (ml, mr) = (right.mirror(), left.mirror());
    all.extend(candidates_in_frame(ml, mr, coeffs, model, opts, true, &mut log));
    Ok((all, log))
}

/// Solves the Riemann problem with the source at the origin.
pub fn solve(
    left: &GasState,
    right: &GasState,
    coeffs: &SourceCoefficients,
    model: &GasModel,
    opts: &SolveOptions,
) -> Result<SingularSolution> {
    left.validate()?;
    right.validate()?;
    coeffs.validate()?;
    opts.validate()?;
    check_vacuum(left, right, model)?;

    let assoc = solve_crp_with(left, right, model, &opts.root)?;
    if coeffs.is_zero() {
        return Ok(SingularSolution::source_off(assoc, *coeffs));
    }
    let before = assoc.sample(-f64::MIN_POSITIVE, model);
    let after = assoc.sample(0.0, model);
    let snap = |s: &GasState| {
        if abs(s.u) <= opts.sonic_tol * model.sound_speed(s) {
            0.0
        } else {
            s.u
        }
    };
    if snap(&before) * snap(&after) <= 0.0 {
        return Ok(SingularSolution::source_off(assoc, *coeffs));
    }

    let (mut all, mut log) = admissible_constructions(left, right, coeffs, model, opts)?;
    all.retain(|c| {
        if c.residual > opts.residual_tol {
            log.push(format!(
                "{} {}: residual {:.3e} above tolerance",
                if c.solution.structure.mirrored { "leftward" } else { "rightward" },
                c.route.name(),
                c.residual
            ));
            false
        } else {
            true
        }
    });
    all.sort_by_key(|c| (c.solution.structure.mirrored, c.route));

    let clean: Vec<&Candidate> = all.iter().filter(|c| c.classification.is_ok()).collect();
    let Some(first) = clean.first() else {
        if let Some(c) = all.first() {
            return Err(c.classification.clone().unwrap_err());
        }
        return Err(Error::NoAdmissibleStructure { attempts: log });
    };
    let rival = clean
        .iter()
        .find(|c| c.solution.structure.mirrored != first.solution.structure.mirrored);
    let mut chosen = (*first).clone();
    if let Some(r) = rival {
        let keep_rival = r.residual < first.residual;
        let (kept, dropped) = if keep_rival { (*r, *first) } else { (*first, *r) };
        chosen = kept.clone();
        chosen.solution.diagnostics.push(format!(
            "both flow directions closed: kept {} (residual {:.3e}), dropped {} (residual {:.3e})",
            kept.solution.structure.tag, kept.residual, dropped.solution.structure.tag, dropped.residual
        ));
    }
    Ok(chosen.solution)
}

/// Builds the global solution along every admissible stationary branch and
/// checks that they coincide at 100 sample points.
///
/// Requires at least two constructions (a double-branch input).
pub fn verify_uniqueness_pair(
    left: &GasState,
    right: &GasState,
    coeffs: &SourceCoefficients,
    model: &GasModel,
) -> Result<bool> {
    let opts = SolveOptions::default();
    let (all, log) = admissible_constructions(left, right, coeffs, model, &opts)?;
    let built: Vec<&Candidate> = all.iter().filter(|c| c.residual <= opts.residual_tol).collect();
    if built.len() < 2 {
        return Err(Error::NoAdmissibleStructure {
            attempts: {
                let mut a = log;
                a.push(format!("only {} construction(s); not a double-branch input", built.len()));
                a
            },
        });
    }
    let span = built
        .iter()
        .flat_map(|c| c.solution.waves())
        .filter(|w| !w.degenerate)
        .map(|w| abs(w.speed_lo).max(abs(w.speed_hi)))
        .fold(1.0, f64::max)
        * 1.25;
    let vscale = model.velocity_scale(left).max(model.velocity_scale(right));
    let reference = &built[0].solution;
    for other in &built[1..] {
        for i in 0..100 {
            let xi = -span + 2.0 * span * i as f64 / 99.0;
            let a = reference.sample(xi, model);
            let b = other.solution.sample(xi, model);
            let bad = abs(a.rho - b.rho) > 1e-8 * a.rho.max(b.rho)
                || abs(a.u - b.u) > 1e-8 * vscale
                || abs(a.p - b.p) > 1e-8 * a.p.max(b.p);
            if bad {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
