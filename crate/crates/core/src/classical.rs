//! Elementary waves of the homogeneous Euler equations and the exact
//! classical Riemann solver used on each side of the origin.

use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::gas::{GasModel, GasState};
use crate::math::{abs, powf, rel_diff, sqrt};
use crate::roots::{brent_with_values, RootOptions};

/// Relative jump below which a wave is treated as having zero strength.
pub const ZERO_STRENGTH_TOL: f64 = 1e-10;

/// Characteristic family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum WaveFamily {
    Family1,
    Family2,
    Family3,
}

impl WaveFamily {
    fn index(self) -> usize {
        match self {
            WaveFamily::Family1 => 0,
            WaveFamily::Family2 => 1,
            WaveFamily::Family3 => 2,
        }
    }

    /// Family seen from the mirrored frame (1 and 3 swap).
    pub fn mirror(self) -> Self {
        match self {
            WaveFamily::Family1 => WaveFamily::Family3,
            WaveFamily::Family2 => WaveFamily::Family2,
            WaveFamily::Family3 => WaveFamily::Family1,
        }
    }

    pub fn is_genuinely_nonlinear(self) -> bool {
        self != WaveFamily::Family2
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WaveKind {
    Shock,
    Rarefaction,
    Contact,
}

/// Which anchor a wave curve is drawn from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CurveSide {
    /// Right states reachable from a left anchor by a 1-wave.
    FromLeftState,
    /// Left states reachable from a right anchor by a 3-wave.
    FromRightState,
}

/// A single shock, rarefaction fan or contact between two constant states.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassicalWave {
    pub family: WaveFamily,
    pub kind: WaveKind,
    pub left_state: GasState,
    pub right_state: GasState,
    /// Slowest signal speed (head of a 1-fan, tail of a 3-fan).
    pub speed_lo: f64,
    /// Fastest signal speed; equals `speed_lo` for shocks and contacts.
    pub speed_hi: f64,
    /// Zero-strength wave kept for uniform bookkeeping.
    pub degenerate: bool,
}

impl ClassicalWave {
    pub fn mirror(&self) -> Self {
        Self {
            family: self.family.mirror(),
            kind: self.kind,
            left_state: self.right_state.mirror(),
            right_state: self.left_state.mirror(),
            speed_lo: -self.speed_hi,
            speed_hi: -self.speed_lo,
            degenerate: self.degenerate,
        }
    }

    /// State inside a rarefaction fan at `xi`, clamped to the fan edges.
    pub fn fan_state(&self, xi: f64, model: &GasModel) -> GasState {
        let g = model.gamma();
        let xi = xi.clamp(self.speed_lo, self.speed_hi);
        let (anchor, u, a) = match self.family {
            WaveFamily::Family1 => {
                let s = self.left_state;
                let a0 = model.sound_speed(&s);
                let u = 2.0 / (g + 1.0) * (a0 + 0.5 * (g - 1.0) * s.u + xi);
                let a = 2.0 / (g + 1.0) * (a0 + 0.5 * (g - 1.0) * (s.u - xi));
                (s, u, a)
            }
            _ => {
                let s = self.right_state;
                let a0 = model.sound_speed(&s);
                let u = 2.0 / (g + 1.0) * (-a0 + 0.5 * (g - 1.0) * s.u + xi);
                let a = 2.0 / (g + 1.0) * (a0 - 0.5 * (g - 1.0) * (s.u - xi));
                (s, u, a)
            }
        };
        let a0 = model.sound_speed(&anchor);
        let rho = anchor.rho * powf(a / a0, 2.0 / (g - 1.0));
        let p = anchor.p * powf(rho / anchor.rho, g);
        GasState { rho, u, p }
    }
}

/// State on the shock branch of a 1- or 3-wave curve at pressure `p >= anchor.p`.
pub fn shock_state(family: WaveFamily, p: f64, anchor: &GasState, model: &GasModel) -> Result<GasState> {
    if family == WaveFamily::Family2 {
        return Err(Error::Domain("shock curves exist only for families 1 and 3"));
    }
    if !(p >= anchor.p) || !p.is_finite() {
        return Err(Error::Domain("shock branch requires p >= anchor pressure"));
    }
    if p == anchor.p {
        return Ok(*anchor);
    }
    let g = model.gamma();
    let rho = anchor.rho * ((g - 1.0) * anchor.p + (g + 1.0) * p) / ((g - 1.0) * p + (g + 1.0) * anchor.p);
    let du = (p - anchor.p) * sqrt(2.0 / (anchor.rho * ((g + 1.0) * p + (g - 1.0) * anchor.p)));
    let u = match family {
        WaveFamily::Family1 => anchor.u - du,
        _ => anchor.u + du,
    };
    Ok(GasState { rho, u, p })
}

/// State on the rarefaction branch of a 1- or 3-wave curve at `0 < p <= anchor.p`.
pub fn rarefaction_state(
    family: WaveFamily,
    p: f64,
    anchor: &GasState,
    model: &GasModel,
) -> Result<GasState> {
    if family == WaveFamily::Family2 {
        return Err(Error::Domain("rarefaction curves exist only for families 1 and 3"));
    }
    if !(p > 0.0) || p > anchor.p {
        return Err(Error::Domain("rarefaction branch requires 0 < p <= anchor pressure"));
    }
    if p == anchor.p {
        return Ok(*anchor);
    }
    let g = model.gamma();
    let ratio = p / anchor.p;
    let rho = anchor.rho * powf(ratio, 1.0 / g);
    let du = 2.0 * model.sound_speed(anchor) / (g - 1.0) * (powf(ratio, (g - 1.0) / (2.0 * g)) - 1.0);
    let u = match family {
        WaveFamily::Family1 => anchor.u - du,
        _ => anchor.u + du,
    };
    Ok(GasState { rho, u, p })
}

/// Contact jump: same velocity and pressure, new density.
pub fn contact_state(anchor: &GasState, rho_other: f64) -> Result<GasState> {
    if !(rho_other > 0.0) || !rho_other.is_finite() {
        return Err(Error::NonPhysical {
            quantity: "density",
            value: rho_other,
        });
    }
    Ok(anchor.with_density(rho_other))
}

/// Velocity change along a 1-curve from `anchor` (Toro's `f_K`).
fn velocity_jump(p: f64, anchor: &GasState, model: &GasModel) -> f64 {
    let g = model.gamma();
    if p > anchor.p {
        (p - anchor.p) * sqrt(2.0 / (anchor.rho * ((g + 1.0) * p + (g - 1.0) * anchor.p)))
    } else {
        2.0 * model.sound_speed(anchor) / (g - 1.0) * (powf(p / anchor.p, (g - 1.0) / (2.0 * g)) - 1.0)
    }
}

/// Composite shock/rarefaction velocity on the wave curve through `anchor`.
///
/// Decreasing in `p` from a left anchor, increasing from a right anchor, and
/// continuously differentiable at `p = anchor.p`.
pub fn wave_curve_velocity(side: CurveSide, p: f64, anchor: &GasState, model: &GasModel) -> f64 {
    match side {
        CurveSide::FromLeftState => anchor.u - velocity_jump(p, anchor, model),
        CurveSide::FromRightState => anchor.u + velocity_jump(p, anchor, model),
    }
}

/// Full state on the composite wave curve.
pub fn wave_curve_state(side: CurveSide, p: f64, anchor: &GasState, model: &GasModel) -> Result<GasState> {
    let family = match side {
        CurveSide::FromLeftState => WaveFamily::Family1,
        CurveSide::FromRightState => WaveFamily::Family3,
    };
    if p >= anchor.p {
        shock_state(family, p, anchor, model)
    } else {
        rarefaction_state(family, p, anchor, model)
    }
}

/// Closed-form Lax shock speed from the pre-shock state and post-shock pressure.
fn lax_shock_speed(family: WaveFamily, pre: &GasState, p_post: f64, model: &GasModel) -> f64 {
    let g = model.gamma();
    let a = model.sound_speed(pre);
    let factor = sqrt((g + 1.0) / (2.0 * g) * p_post / pre.p + (g - 1.0) / (2.0 * g));
    match family {
        WaveFamily::Family1 => pre.u - a * factor,
        _ => pre.u + a * factor,
    }
}

/// Shock speed from the Rankine-Hugoniot conditions.
///
/// For family 1 the pre-shock state is the left state, for family 3 the right
/// state. All three flux rows are checked for a common speed.
pub fn shock_speed(family: WaveFamily, pre: &GasState, post: &GasState, model: &GasModel) -> Result<f64> {
    if family == WaveFamily::Family2 {
        return Ok(pre.u);
    }
    let sigma = lax_shock_speed(family, pre, post.p, model);
    if rel_diff(post.p, pre.p, 0.0) <= 1e-8 {
        return Ok(sigma);
    }
    let (l, r) = match family {
        WaveFamily::Family1 => (pre, post),
        _ => (post, pre),
    };
    let ul = model.conserved_from_primitive(l).as_array();
    let ur = model.conserved_from_primitive(r).as_array();
    let fl = model.flux(l).as_array();
    let fr = model.flux(r).as_array();
    let scale = model.velocity_scale(l).max(model.velocity_scale(r));
    let mut spread: f64 = 0.0;
    for i in 0..3 {
        let du = ur[i] - ul[i];
        if abs(du) <= 1e-12 * abs(ur[i]).max(abs(ul[i])) {
            continue;
        }
        let estimate = (fr[i] - fl[i]) / du;
        spread = spread.max(abs(estimate - sigma) / scale);
    }
    if spread > 1e-9 {
        return Err(Error::InconsistentStates { spread });
    }
    Ok(sigma)
}

/// Builds a 1- or 3-wave between `left` and `right` (the star-side state).
fn nonlinear_wave(family: WaveFamily, left: GasState, right: GasState, model: &GasModel) -> ClassicalWave {
    let (outer, inner) = match family {
        WaveFamily::Family1 => (left, right),
        _ => (right, left),
    };
    let k = family.index();
    let degenerate = rel_diff(inner.p, outer.p, 0.0) <= ZERO_STRENGTH_TOL;
    if degenerate {
        let s = model.eigenvalues(&outer)[k];
        let kind = if inner.p >= outer.p {
            WaveKind::Shock
        } else {
            WaveKind::Rarefaction
        };
        return ClassicalWave {
            family,
            kind,
            left_state: left,
            right_state: right,
            speed_lo: s,
            speed_hi: s,
            degenerate,
        };
    }
    if inner.p > outer.p {
        let s = lax_shock_speed(family, &outer, inner.p, model);
        ClassicalWave {
            family,
            kind: WaveKind::Shock,
            left_state: left,
            right_state: right,
            speed_lo: s,
            speed_hi: s,
            degenerate,
        }
    } else {
        let lo = model.eigenvalues(&left)[k];
        let hi = model.eigenvalues(&right)[k];
        ClassicalWave {
            family,
            kind: WaveKind::Rarefaction,
            left_state: left,
            right_state: right,
            speed_lo: lo,
            speed_hi: hi,
            degenerate,
        }
    }
}

/// Builds the wave connecting `left` to `right` along the family-`family`
/// curve; `right` (family 1) or `left` (family 3) must lie on that curve.
pub fn wave_between(family: WaveFamily, left: GasState, right: GasState, model: &GasModel) -> ClassicalWave {
    if family == WaveFamily::Family2 {
        let degenerate = rel_diff(left.rho, right.rho, 0.0) <= ZERO_STRENGTH_TOL;
        let s = 0.5 * (left.u + right.u);
        return ClassicalWave {
            family,
            kind: WaveKind::Contact,
            left_state: left,
            right_state: right,
            speed_lo: s,
            speed_hi: s,
            degenerate,
        };
    }
    nonlinear_wave(family, left, right, model)
}

/// Piecewise evaluation of a left-to-right wave sequence starting at `first`.
pub fn sample_waves(waves: &[ClassicalWave], first: &GasState, xi: f64, model: &GasModel) -> GasState {
    let mut current = *first;
    for w in waves {
        if w.degenerate {
            current = w.right_state;
            continue;
        }
        if xi < w.speed_lo {
            return w.left_state;
        }
        if w.kind == WaveKind::Rarefaction && xi <= w.speed_hi {
            return w.fan_state(xi, model);
        }
        current = w.right_state;
    }
    current
}

/// Exact solution of a classical Riemann problem.
#[derive(Debug, Clone, PartialEq)]
pub struct CrpSolution {
    pub left: GasState,
    pub right: GasState,
    pub star_pressure: f64,
    pub star_velocity: f64,
    /// `(rho*_L, rho*_R)`.
    pub star_densities: (f64, f64),
    /// Ordered 1-wave, contact, 3-wave.
    pub waves: Vec<ClassicalWave>,
}

impl CrpSolution {
    /// Assembles the solution from a known star pressure and velocity.
    pub fn from_star(
        left: GasState,
        right: GasState,
        p_star: f64,
        u_star: f64,
        model: &GasModel,
    ) -> Result<Self> {
        let star_l = wave_curve_state(CurveSide::FromLeftState, p_star, &left, model)?;
        let star_r = wave_curve_state(CurveSide::FromRightState, p_star, &right, model)?;
        let star_l = GasState { u: u_star, ..star_l };
        let star_r = GasState { u: u_star, ..star_r };
        let waves = alloc::vec![
            wave_between(WaveFamily::Family1, left, star_l, model),
            wave_between(WaveFamily::Family2, star_l, star_r, model),
            wave_between(WaveFamily::Family3, star_r, right, model),
        ];
        Ok(Self {
            left,
            right,
            star_pressure: p_star,
            star_velocity: u_star,
            star_densities: (star_l.rho, star_r.rho),
            waves,
        })
    }

    pub fn star_left(&self) -> GasState {
        self.waves[1].left_state
    }

    pub fn star_right(&self) -> GasState {
        self.waves[1].right_state
    }

    pub fn sample(&self, xi: f64, model: &GasModel) -> GasState {
        sample_waves(&self.waves, &self.left, xi, model)
    }

    pub fn slowest_speed(&self) -> f64 {
        self.waves
            .iter()
            .filter(|w| !w.degenerate)
            .map(|w| w.speed_lo)
            .fold(f64::INFINITY, f64::min)
    }

    pub fn fastest_speed(&self) -> f64 {
        self.waves
            .iter()
            .filter(|w| !w.degenerate)
            .map(|w| w.speed_hi)
            .fold(f64::NEG_INFINITY, f64::max)
    }

    /// Solution of the reflected problem `(m(right), m(left))`.
    pub fn mirror(&self) -> Self {
        let waves = self.waves.iter().rev().map(ClassicalWave::mirror).collect();
        Self {
            left: self.right.mirror(),
            right: self.left.mirror(),
            star_pressure: self.star_pressure,
            star_velocity: -self.star_velocity,
            star_densities: (self.star_densities.1, self.star_densities.0),
            waves,
        }
    }
}

/// Checks the pressure positivity condition `u_R - u_L < 2 (a_L + a_R) / (gamma - 1)`.
pub fn check_vacuum(left: &GasState, right: &GasState, model: &GasModel) -> Result<()> {
    let du = right.u - left.u;
    let limit = 2.0 * (model.sound_speed(left) + model.sound_speed(right)) / (model.gamma() - 1.0);
    if du >= limit {
        return Err(Error::Vacuum { du, limit });
    }
    Ok(())
}

/// Exact classical Riemann solver with default root tolerances.
pub fn solve_crp(left: &GasState, right: &GasState, model: &GasModel) -> Result<CrpSolution> {
    solve_crp_with(left, right, model, &RootOptions::default())
}

/// Exact classical Riemann solver: intersects the left 1-curve and right
/// 3-curve in the `(p, u)` plane by bracketed root finding.
pub fn solve_crp_with(
    left: &GasState,
    right: &GasState,
    model: &GasModel,
    opts: &RootOptions,
) -> Result<CrpSolution> {
    left.validate()?;
    right.validate()?;
    check_vacuum(left, right, model)?;
    if left == right {
        return CrpSolution::from_star(*left, *right, left.p, left.u, model);
    }

    let du = right.u - left.u;
    let mismatch = |p: f64| velocity_jump(p, left, model) + velocity_jump(p, right, model) + du;

    let mut lo = 1e-12 * left.p.min(right.p);
    let mut flo = mismatch(lo);
    while flo > 0.0 {
        // near-vacuum star state below the default floor
        lo *= 1e-3;
        if lo < f64::MIN_POSITIVE * 1e6 {
            return Err(Error::Vacuum {
                du,
                limit: 2.0 * (model.sound_speed(left) + model.sound_speed(right)) / (model.gamma() - 1.0),
            });
        }
        flo = mismatch(lo);
    }
    let mut hi = left.p.max(right.p);
    let mut fhi = mismatch(hi);
    let mut grow = 0;
    while fhi < 0.0 {
        lo = hi;
        flo = fhi;
        hi *= 4.0;
        fhi = mismatch(hi);
        grow += 1;
        if grow > 200 {
            return Err(Error::Convergence { iterations: grow });
        }
    }
    let p_star = brent_with_values(mismatch, lo, hi, flo, fhi, opts)?;
    let u_star = 0.5
        * (wave_curve_velocity(CurveSide::FromLeftState, p_star, left, model)
            + wave_curve_velocity(CurveSide::FromRightState, p_star, right, model));
    CrpSolution::from_star(*left, *right, p_star, u_star, model)
}
