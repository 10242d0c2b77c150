//! The stationary discontinuity generated by the source at `x = 0`.
//!
//! Across the origin the flux jumps by fixed gains,
//! `F(U+) = diag(1 + k1, 1 + k2, 1 + k3) F(U-)`, for flow moving left to right.
//! Everything here assumes `u > 0`; the coupled solver mirrors leftward flow
//! into this frame before calling in.

mod critical;
mod oracle;

pub use critical::{admissible_sets, critical_machs, AdmissibleSets, CriticalMachNumbers, IntervalList, MachInterval};
pub use oracle::oracle_jump_solutions;

use crate::error::{Error, Result};
use crate::gas::{GasModel, GasState};
use crate::math::{abs, sqrt};
use crate::small::UpToTwo;

/// `|M - 1|` below this is treated as sonic.
pub const SONIC_TOL: f64 = 1e-9;

/// `|k|` below this is treated as zero, so that gains which cancel in exact
/// arithmetic select the identity regime.
pub const K_ZERO_TOL: f64 = 1e-12;

/// Source gains `k1, k2, k3` on mass, momentum and energy flux.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SourceCoefficients {
    pub k1: f64,
    pub k2: f64,
    pub k3: f64,
}

impl Default for SourceCoefficients {
    fn default() -> Self {
        Self::zero()
    }
}

impl SourceCoefficients {
    pub fn new(k1: f64, k2: f64, k3: f64) -> Result<Self> {
        let c = Self { k1, k2, k3 };
        c.validate()?;
        Ok(c)
    }

    pub fn zero() -> Self {
        Self {
            k1: 0.0,
            k2: 0.0,
            k3: 0.0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        for (name, value) in [("k1", self.k1), ("k2", self.k2), ("k3", self.k3)] {
            if !(value > -1.0) || !value.is_finite() {
                return Err(Error::InvalidCoefficient { name, value });
            }
        }
        Ok(())
    }

    /// All three gains exactly zero: no source at all.
    pub fn is_zero(&self) -> bool {
        self.k1 == 0.0 && self.k2 == 0.0 && self.k3 == 0.0
    }

    /// `(1 + k1, 1 + k2, 1 + k3)`.
    pub fn gains(&self) -> [f64; 3] {
        [1.0 + self.k1, 1.0 + self.k2, 1.0 + self.k3]
    }

    /// Composite coefficient, snapped to zero within [`K_ZERO_TOL`].
    pub fn k(&self) -> f64 {
        snap_k(composite_k(self))
    }

    /// Coefficients of the inverse jump, `k'_i = -k_i / (1 + k_i)`.
    pub fn inverse(&self) -> Self {
        let inv = |k: f64| -k / (1.0 + k);
        Self {
            k1: inv(self.k1),
            k2: inv(self.k2),
            k3: inv(self.k3),
        }
    }
}

/// `(1 + k1)(1 + k3) / (1 + k2)^2 - 1`, unsnapped.
pub fn composite_k(coeffs: &SourceCoefficients) -> f64 {
    let [g1, g2, g3] = coeffs.gains();
    g1 * g3 / (g2 * g2) - 1.0
}

fn snap_k(k: f64) -> f64 {
    if abs(k) <= K_ZERO_TOL {
        0.0
    } else {
        k
    }
}

/// Sign of the composite coefficient, which selects the rows of both tables.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum KRegime {
    Positive,
    Zero,
    Negative,
}

impl KRegime {
    pub fn of(k: f64) -> Self {
        let k = snap_k(k);
        if k > 0.0 {
            Self::Positive
        } else if k < 0.0 {
            Self::Negative
        } else {
            Self::Zero
        }
    }
}

/// Which root of the jump relation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Branch {
    Subsonic,
    Supersonic,
}

/// Direction of the flow through the stationary wave.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FlowDirection {
    /// `u > 0`: the left state is upstream.
    Rightward,
    /// `u < 0`: the right state is upstream.
    Leftward,
}

pub(crate) fn is_sonic(m: f64) -> bool {
    abs(m - 1.0) <= SONIC_TOL
}

pub(crate) fn radicand(m: f64, k: f64, g: f64) -> f64 {
    let m2 = m * m;
    let a = g * m2 + 1.0;
    a * a - (g + 1.0) * m2 * ((g - 1.0) * m2 + 2.0) * (1.0 + k)
}

/// `I(M-)`, the discriminant term of the downstream Mach number.
pub fn i_value(m_minus: f64, k: f64, model: &GasModel) -> Result<f64> {
    if !(m_minus > 0.0) || !m_minus.is_finite() {
        return Err(Error::NoSolution { mach: m_minus });
    }
    let k = snap_k(k);
    let g = model.gamma();
    // M1* and M2* are simple roots of the radicand, so I grows like the square
    // root of the distance to them; snap within the sonic tolerance on both sides
    if let CriticalMachNumbers::Positive { m1_star, m2_star, .. } = critical_machs(k, model) {
        let near = |c: f64| c.is_finite() && abs(m_minus - c) <= SONIC_TOL * c.max(1.0);
        if near(m1_star) || near(m2_star) {
            return Ok(0.0);
        }
    }
    let rad = radicand(m_minus, k, g);
    if rad >= 0.0 {
        let den = g * m_minus * m_minus + 1.0;
        return Ok((sqrt(rad) / den).min(1.0));
    }
    Err(Error::NoSolution { mach: m_minus })
}

/// Downstream Mach number on one branch.
pub fn branch_mach(branch: Branch, m_minus: f64, k: f64, model: &GasModel) -> Result<f64> {
    let i = i_value(m_minus, k, model)?;
    let g = model.gamma();
    match branch {
        Branch::Subsonic => Ok(sqrt((1.0 - i) / (1.0 + g * i))),
        Branch::Supersonic => {
            if g * i >= 1.0 {
                return Err(Error::BranchUndefined {
                    mach: m_minus,
                    gamma_i: g * i,
                });
            }
            Ok(sqrt((1.0 + i) / (1.0 - g * i)))
        }
    }
}

/// Admissible downstream Mach numbers, subsonic first.
///
/// Two values only when `k < 0` and the upstream flow is sonic.
pub fn downstream_mach(m_minus: f64, k: f64, model: &GasModel) -> Result<UpToTwo<(Branch, f64)>> {
    let k = snap_k(k);
    let no = || Error::NoSolution { mach: m_minus };
    let sub = |m| branch_mach(Branch::Subsonic, m, k, model);
    let sup = |m| match branch_mach(Branch::Supersonic, m, k, model) {
        Err(Error::BranchUndefined { .. }) => Err(no()),
        other => other,
    };
    let regime = KRegime::of(k);
    if is_sonic(m_minus) {
        return match regime {
            KRegime::Negative => {
                let mut out = UpToTwo::one((Branch::Subsonic, sub(m_minus)?));
                if let Ok(m) = sup(m_minus) {
                    out.push((Branch::Supersonic, m));
                }
                Ok(out)
            }
            KRegime::Zero => Ok(UpToTwo::one((Branch::Subsonic, m_minus))),
            KRegime::Positive => Ok(UpToTwo::one((Branch::Subsonic, sub(m_minus)?))),
        };
    }
    if m_minus < 1.0 {
        if regime == KRegime::Zero {
            return Ok(UpToTwo::one((Branch::Subsonic, m_minus)));
        }
        Ok(UpToTwo::one((Branch::Subsonic, sub(m_minus)?)))
    } else {
        if regime == KRegime::Zero {
            return Ok(UpToTwo::one((Branch::Supersonic, m_minus)));
        }
        Ok(UpToTwo::one((Branch::Supersonic, sup(m_minus)?)))
    }
}

/// Admissible upstream Mach numbers for a given downstream Mach number,
/// subsonic first. Two values only when `k > 0` and the downstream flow is sonic.
pub fn upstream_mach(m_plus: f64, k: f64, model: &GasModel) -> Result<UpToTwo<(Branch, f64)>> {
    let k = snap_k(k);
    downstream_mach(m_plus, snap_k(-k / (1.0 + k)), model).map_err(|_| Error::NoSolution { mach: m_plus })
}

/// `(rho+/rho-, u+/u-, p+/p-)` for a Mach pair.
pub fn state_ratios(m_minus: f64, m_plus: f64, coeffs: &SourceCoefficients, model: &GasModel) -> (f64, f64, f64) {
    let g = model.gamma();
    let [g1, g2, _] = coeffs.gains();
    let am = g * m_minus * m_minus + 1.0;
    let ap = g * m_plus * m_plus + 1.0;
    let r = m_minus / m_plus;
    let rho = r * r * ap / am * g1 * g1 / g2;
    let u = am / (r * r * ap) * g2 / g1;
    let p = am / ap * g2;
    (rho, u, p)
}

/// A stationary discontinuity at the origin.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StationaryWavePair {
    pub left_state: GasState,
    pub right_state: GasState,
    pub coeffs: SourceCoefficients,
    pub choked: bool,
    pub direction: FlowDirection,
    /// Branch of the downstream Mach number.
    pub branch: Branch,
}

impl StationaryWavePair {
    pub fn upstream(&self) -> GasState {
        match self.direction {
            FlowDirection::Rightward => self.left_state,
            FlowDirection::Leftward => self.right_state,
        }
    }

    pub fn downstream(&self) -> GasState {
        match self.direction {
            FlowDirection::Rightward => self.right_state,
            FlowDirection::Leftward => self.left_state,
        }
    }

    /// Reflection `x -> -x, u -> -u`; the gains stay attached to the flow direction.
    pub fn mirror(&self) -> Self {
        Self {
            left_state: self.right_state.mirror(),
            right_state: self.left_state.mirror(),
            direction: match self.direction {
                FlowDirection::Rightward => FlowDirection::Leftward,
                FlowDirection::Leftward => FlowDirection::Rightward,
            },
            ..*self
        }
    }

    /// Largest componentwise relative residual of the flux jump, measured in
    /// the frame where the flow is rightward.
    pub fn jump_residual(&self, model: &GasModel) -> f64 {
        let pair = match self.direction {
            FlowDirection::Rightward => *self,
            FlowDirection::Leftward => self.mirror(),
        };
        jump_residual(&pair.left_state, &pair.right_state, &pair.coeffs, model)
    }
}

/// `max_i |F_i(U+) - (1 + k_i) F_i(U-)| / |(1 + k_i) F_i(U-)|`.
pub fn jump_residual(up: &GasState, down: &GasState, coeffs: &SourceCoefficients, model: &GasModel) -> f64 {
    let f_up = model.flux(up).as_array();
    let f_down = model.flux(down).as_array();
    let gains = coeffs.gains();
    let mut worst: f64 = 0.0;
    for i in 0..3 {
        let target = gains[i] * f_up[i];
        let scale = abs(target).max(f64::MIN_POSITIVE);
        worst = worst.max(abs(f_down[i] - target) / scale);
    }
    worst
}

fn require_rightward(s: &GasState) -> Result<()> {
    s.validate()?;
    if !(s.u > 0.0) {
        return Err(Error::NegativeVelocity(s.u));
    }
    Ok(())
}

/// Downstream states reachable from `upstream` through the stationary wave.
pub fn forward_curve(
    upstream: &GasState,
    coeffs: &SourceCoefficients,
    model: &GasModel,
) -> Result<UpToTwo<StationaryWavePair>> {
    coeffs.validate()?;
    require_rightward(upstream)?;
    let m_minus = model.mach(upstream);
    let candidates = downstream_mach(m_minus, coeffs.k(), model)?;
    Ok(candidates.map(|(branch, m_plus)| {
        let (rr, ru, rp) = state_ratios(m_minus, m_plus, coeffs, model);
        let down = GasState {
            rho: upstream.rho * rr,
            u: upstream.u * ru,
            p: upstream.p * rp,
        };
        StationaryWavePair {
            left_state: *upstream,
            right_state: down,
            coeffs: *coeffs,
            choked: is_sonic(m_minus) || is_sonic(m_plus),
            direction: FlowDirection::Rightward,
            branch,
        }
    }))
}

/// Upstream states that the stationary wave maps onto `downstream`.
pub fn backward_curve(
    downstream: &GasState,
    coeffs: &SourceCoefficients,
    model: &GasModel,
) -> Result<UpToTwo<StationaryWavePair>> {
    coeffs.validate()?;
    require_rightward(downstream)?;
    let g = model.gamma();
    let m_plus = model.mach(downstream);
    let candidates = upstream_mach(m_plus, coeffs.k(), model)?;
    let [g1, g2, _] = coeffs.gains();
    Ok(candidates.map(|(_, m_minus)| {
        let am = g * m_minus * m_minus + 1.0;
        let ap = g * m_plus * m_plus + 1.0;
        let r = m_plus / m_minus;
        let up = GasState {
            rho: downstream.rho * r * r * am / ap * g2 / (g1 * g1),
            u: downstream.u * ap / (r * r * am) * g1 / g2,
            p: downstream.p * ap / am / g2,
        };
        StationaryWavePair {
            left_state: up,
            right_state: *downstream,
            coeffs: *coeffs,
            choked: is_sonic(m_minus) || is_sonic(m_plus),
            direction: FlowDirection::Rightward,
            branch: if m_plus < 1.0 || (is_sonic(m_plus) && m_minus < 1.0) {
                Branch::Subsonic
            } else {
                Branch::Supersonic
            },
        }
    }))
}

/// Per-eigenvalue products and the two admissibility criteria.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CriterionReport {
    /// `lambda_k(U-) * lambda_k(U+)` for `k = 1, 2, 3`.
    pub products: [f64; 3],
    /// Eigenvalue form: every product nonnegative.
    pub criterion1: bool,
    /// Mach form: `u- u+ >= 0` and `(|M-| - 1)(|M+| - 1) >= 0`.
    pub criterion2: bool,
}

impl CriterionReport {
    pub fn satisfied(&self) -> bool {
        self.criterion1
    }
}

/// Evaluates both forms of the admissibility criterion.
///
/// Eigenvalues within the sonic tolerance of zero (relative to the sound
/// speed) count as zero, matching the Mach form's sonic snapping. The Mach
/// form uses `|M|` so it also covers pairs with negative velocity.
pub fn satisfies_criterion(u_minus: &GasState, u_plus: &GasState, model: &GasModel) -> CriterionReport {
    let am = model.sound_speed(u_minus);
    let ap = model.sound_speed(u_plus);
    let snap = |x: f64, a: f64| if abs(x) <= SONIC_TOL * a { 0.0 } else { x };
    let lm = model.eigenvalues(u_minus);
    let lp = model.eigenvalues(u_plus);
    let products = [
        snap(lm[0], am) * snap(lp[0], ap),
        snap(lm[1], am) * snap(lp[1], ap),
        snap(lm[2], am) * snap(lp[2], ap),
    ];
    let criterion1 = products.iter().all(|&p| p >= 0.0);

    let sonic_gap = |s: &GasState| {
        let d = abs(model.mach(s)) - 1.0;
        if abs(d) <= SONIC_TOL {
            0.0
        } else {
            d
        }
    };
    let uu = snap(u_minus.u, am) * snap(u_plus.u, ap);
    let criterion2 = uu >= 0.0 && sonic_gap(u_minus) * sonic_gap(u_plus) >= 0.0;
    CriterionReport {
        products,
        criterion1,
        criterion2,
    }
}

/// Choked: some characteristic speed vanishes on one side, i.e.
/// `min_k |lambda_k(U-) lambda_k(U+)| <= tol * a- * a+`.
pub fn is_choked(pair: &StationaryWavePair, tol: f64, model: &GasModel) -> bool {
    let a = model.sound_speed(&pair.left_state) * model.sound_speed(&pair.right_state);
    let lm = model.eigenvalues(&pair.left_state);
    let lp = model.eigenvalues(&pair.right_state);
    (0..3).any(|i| abs(lm[i] * lp[i]) <= tol * a)
}

/// Sub-areas of the admissible quadrants of the `(M-, M+)` plane.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum MachRegion {
    /// Both subsonic, `M+ > M-`.
    Omega1,
    /// Both subsonic, `M+ < M-`.
    Omega2,
    /// Both supersonic, `M+ > M-`.
    Omega3,
    /// Both supersonic, `M+ < M-`.
    Omega4,
    /// On the diagonal `M+ = M-`.
    Boundary,
}

/// Locates a Mach pair. Sonic values belong to both quadrants, as in the
/// closed-set definitions of the regions.
pub fn region_of(m_minus: f64, m_plus: f64) -> Result<MachRegion> {
    let outside = Error::OutsideAdmissible { m_minus, m_plus };
    if !(m_minus > 0.0 && m_plus > 0.0) {
        return Err(outside);
    }
    if abs(m_plus - m_minus) <= SONIC_TOL * m_minus.max(1.0) {
        return Ok(MachRegion::Boundary);
    }
    let sub = |m: f64| m <= 1.0 + SONIC_TOL;
    let sup = |m: f64| m >= 1.0 - SONIC_TOL;
    let rising = m_plus > m_minus;
    if sub(m_minus) && sub(m_plus) {
        Ok(if rising { MachRegion::Omega1 } else { MachRegion::Omega2 })
    } else if sup(m_minus) && sup(m_plus) {
        Ok(if rising { MachRegion::Omega3 } else { MachRegion::Omega4 })
    } else {
        Err(outside)
    }
}
