//! Pointwise consistency checks of an assembled solution.

use alloc::vec::Vec;

use crate::classical::{ClassicalWave, WaveFamily, WaveKind};
use crate::gas::{GasModel, GasState};
use crate::math::abs;
use crate::stationary::satisfies_criterion;

use super::SingularSolution;

/// Relative residuals of every wave in a solution.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct ResidualReport {
    /// Rankine-Hugoniot residual per shock.
    pub shocks: Vec<f64>,
    /// Riemann-invariant and entropy drift per rarefaction.
    pub rarefactions: Vec<f64>,
    /// Velocity and pressure mismatch per contact.
    pub contacts: Vec<f64>,
    /// Flux-jump residual of the stationary wave.
    pub stationary: Option<f64>,
    /// Size of each wrong-sign wave speed, relative to the speed scale.
    pub speed_violations: Vec<f64>,
    /// Whether the stationary pair passes the Mach-form criterion.
    pub criterion_ok: bool,
    /// Largest entry above, or 1 if the criterion fails.
    pub max: f64,
}

fn speed_scale(states: impl Iterator<Item = GasState>, model: &GasModel) -> f64 {
    states.map(|s| model.velocity_scale(&s)).fold(0.0, f64::max)
}

fn rh_residual(w: &ClassicalWave, model: &GasModel) -> f64 {
    let s = w.speed_lo;
    let ul = model.conserved_from_primitive(&w.left_state).as_array();
    let ur = model.conserved_from_primitive(&w.right_state).as_array();
    let fl = model.flux(&w.left_state).as_array();
    let fr = model.flux(&w.right_state).as_array();
    let mut worst: f64 = 0.0;
    for i in 0..3 {
        let scale = abs(fl[i])
            .max(abs(fr[i]))
            .max(abs(s * ul[i]))
            .max(abs(s * ur[i]))
            .max(f64::MIN_POSITIVE);
        worst = worst.max(abs(fr[i] - fl[i] - s * (ur[i] - ul[i])) / scale);
    }
    worst
}

fn fan_drift(w: &ClassicalWave, model: &GasModel) -> f64 {
    let g = model.gamma();
    let (l, r) = (&w.left_state, &w.right_state);
    let (al, ar) = (model.sound_speed(l), model.sound_speed(r));
    let sign = if w.family == WaveFamily::Family1 { 1.0 } else { -1.0 };
    let jl = l.u + sign * 2.0 * al / (g - 1.0);
    let jr = r.u + sign * 2.0 * ar / (g - 1.0);
    let scale = model.velocity_scale(l).max(model.velocity_scale(r));
    let (sl, sr) = (model.isentrope(l), model.isentrope(r));
    let entropy = abs(sl - sr) / sl.max(sr);
    (abs(jl - jr) / scale).max(entropy)
}

fn contact_mismatch(w: &ClassicalWave, model: &GasModel) -> f64 {
    let (l, r) = (&w.left_state, &w.right_state);
    let scale = model.velocity_scale(l).max(model.velocity_scale(r));
    (abs(l.u - r.u) / scale).max(abs(l.p - r.p) / l.p.max(r.p))
}

fn wave_residual(w: &ClassicalWave, model: &GasModel, report: &mut ResidualReport) {
    match w.kind {
        WaveKind::Shock => report.shocks.push(if w.degenerate { 0.0 } else { rh_residual(w, model) }),
        WaveKind::Rarefaction => report.rarefactions.push(fan_drift(w, model)),
        WaveKind::Contact => report.contacts.push(contact_mismatch(w, model)),
    }
}

/// Residuals of every wave, the stationary jump and the speed-sign partition.
pub fn residual_report(sol: &SingularSolution, model: &GasModel) -> ResidualReport {
    let mut report = ResidualReport {
        criterion_ok: true,
        ..Default::default()
    };
    for w in sol.waves() {
        wave_residual(&w, model, &mut report);
    }
    let scale = speed_scale(
        sol.waves()
            .iter()
            .flat_map(|w| [w.left_state, w.right_state])
            .chain([sol.left, sol.right]),
        model,
    );
    for w in sol.left_waves.iter().filter(|w| !w.degenerate) {
        report.speed_violations.push(w.speed_hi.max(0.0) / scale);
    }
    for w in sol.right_waves.iter().filter(|w| !w.degenerate) {
        report.speed_violations.push((-w.speed_lo).max(0.0) / scale);
    }
    if let Some(pair) = &sol.stationary {
        report.stationary = Some(pair.jump_residual(model));
        report.criterion_ok = satisfies_criterion(&pair.left_state, &pair.right_state, model).criterion2;
    }
    let all = report
        .shocks
        .iter()
        .chain(&report.rarefactions)
        .chain(&report.contacts)
        .chain(&report.speed_violations)
        .chain(report.stationary.iter());
    report.max = all.fold(0.0, |a, &b| if b.is_nan() { f64::INFINITY } else { a.max(b) });
    if !report.criterion_ok {
        report.max = report.max.max(1.0);
    }
    report
}
