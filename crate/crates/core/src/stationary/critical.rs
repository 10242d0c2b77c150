//! Critical Mach numbers and the admissible Mach sets of the stationary wave.

use crate::gas::GasModel;
use crate::math::sqrt;
use crate::roots::{brent, RootOptions};
use crate::small::UpToTwo;

use super::{radicand, Branch, KRegime, SONIC_TOL};

/// Width of the neighborhood of `k = 1/(gamma^2 - 1)` where the closed forms
/// for `M1*`, `M2*` lose precision and root finding takes over.
const SINGULAR_BAND: f64 = 1e-8;

/// Boundary Mach numbers of the admissible sets.
///
/// For `k > 0`: `m1` is the subsonic pre-image of sonic flow (`M1*`), `m2` the
/// supersonic one (`M2*`), `m3` the supremum of the supersonic downstream Mach
/// number (`M3*`). For `k < 0`: `m1`, `m2` are the two downstream images of a
/// sonic upstream state (`M1**`, `M2**`) and `m3` bounds the supersonic
/// upstream range (`M3**`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum CriticalMachNumbers {
    Positive { m1_star: f64, m2_star: f64, m3_star: f64 },
    Zero,
    Negative { m1_dstar: f64, m2_dstar: f64, m3_dstar: f64 },
}

impl CriticalMachNumbers {
    /// `(m1, m2, m3)` for the active regime; `None` when `k = 0`.
    pub fn triple(&self) -> Option<(f64, f64, f64)> {
        match *self {
            Self::Positive {
                m1_star,
                m2_star,
                m3_star,
            } => Some((m1_star, m2_star, m3_star)),
            Self::Negative {
                m1_dstar,
                m2_dstar,
                m3_dstar,
            } => Some((m1_dstar, m2_dstar, m3_dstar)),
            Self::Zero => None,
        }
    }
}

/// Critical Mach numbers for composite coefficient `k > -1`.
pub fn critical_machs(k: f64, model: &GasModel) -> CriticalMachNumbers {
    let g = model.gamma();
    match KRegime::of(k) {
        KRegime::Zero => CriticalMachNumbers::Zero,
        KRegime::Positive => {
            let den = k + 1.0 - k * g * g;
            let root = (g + 1.0) * sqrt(k * (k + 1.0));
            let base = k * g + k + 1.0;
            let m1_star = if den == 0.0 {
                sqrt((g - 1.0) / (2.0 * g))
            } else if den.abs() < SINGULAR_BAND {
                radicand_root(k, model, 1e-300, 1.0)
            } else {
                sqrt((base - root) / den)
            };
            let (m2_star, m3_star) = if den <= 0.0 {
                (f64::INFINITY, f64::INFINITY)
            } else {
                let m2 = if den < SINGULAR_BAND {
                    let mut hi = 2.0;
                    while radicand(hi, k, g) < 0.0 && hi < 1e150 {
                        hi *= 2.0;
                    }
                    radicand_root(k, model, 1.0, hi)
                } else {
                    sqrt((base + root) / den)
                };
                let s = sqrt(1.0 - k * (g * g - 1.0));
                (m2, sqrt((g + s) / (g - g * s)))
            };
            CriticalMachNumbers::Positive {
                m1_star,
                m2_star,
                m3_star,
            }
        }
        KRegime::Negative => {
            let r = sqrt(-k);
            let m1_dstar = sqrt((1.0 - r) / (1.0 + g * r));
            let (m2_dstar, m3_dstar) = if k > -1.0 / (g * g) {
                let a = g * sqrt(1.0 + k);
                let b = sqrt(1.0 + k * g * g);
                (sqrt((1.0 + r) / (1.0 - g * r)), sqrt((a + b) / (a - g * b)))
            } else {
                (f64::INFINITY, 1.0)
            };
            CriticalMachNumbers::Negative {
                m1_dstar,
                m2_dstar,
                m3_dstar,
            }
        }
    }
}

/// Root of the stationary-wave radicand in `[lo, hi]`.
fn radicand_root(k: f64, model: &GasModel, lo: f64, hi: f64) -> f64 {
    let g = model.gamma();
    let opts = RootOptions {
        abs_tol: 1e-15,
        rel_tol: 1e-15,
        max_iter: 400,
    };
    brent(|m| radicand(m, k, g), lo, hi, &opts).unwrap_or(f64::NAN)
}

/// One interval of Mach numbers together with the branch it belongs to.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MachInterval {
    pub branch: Branch,
    pub lo: f64,
    pub hi: f64,
    pub lo_closed: bool,
    pub hi_closed: bool,
}

impl MachInterval {
    fn new(branch: Branch, lo: f64, lo_closed: bool, hi: f64, hi_closed: bool) -> Self {
        Self {
            branch,
            lo,
            hi,
            lo_closed,
            hi_closed,
        }
    }

    /// Membership with the sonic tolerance applied at closed ends.
    pub fn contains(&self, m: f64) -> bool {
        let tol_lo = SONIC_TOL * self.lo.abs().max(1.0);
        let tol_hi = SONIC_TOL * self.hi.abs().max(1.0);
        let above = if self.lo_closed { m >= self.lo - tol_lo } else { m > self.lo };
        let below = if self.hi_closed {
            m <= self.hi + tol_hi
        } else {
            m < self.hi
        };
        above && below
    }

    pub fn is_empty(&self) -> bool {
        self.lo > self.hi || (self.lo == self.hi && !(self.lo_closed && self.hi_closed))
    }
}

/// Admissible upstream (`gamma_minus`) and downstream (`gamma_plus`) Mach sets.
#[derive(Debug, Clone, PartialEq)]
pub struct AdmissibleSets {
    pub k: f64,
    pub gamma_minus: IntervalList,
    pub gamma_plus: IntervalList,
}

impl AdmissibleSets {
    pub fn upstream_contains(&self, m: f64) -> bool {
        self.gamma_minus.iter().any(|i| i.contains(m))
    }

    pub fn downstream_contains(&self, m: f64) -> bool {
        self.gamma_plus.iter().any(|i| i.contains(m))
    }
}

/// Admissible Mach sets keyed by the sign of `k`.
///
/// Where the supersonic branch does not exist (`k >= 1/(gamma^2-1)`, or
/// `k <= -1/gamma^2` upstream) the corresponding interval is omitted.
pub fn admissible_sets(k: f64, model: &GasModel) -> AdmissibleSets {
    let inf = f64::INFINITY;
    let mut minus = IntervalList::new();
    let mut plus = IntervalList::new();
    match critical_machs(k, model) {
        CriticalMachNumbers::Zero => {
            minus.push(MachInterval::new(Branch::Subsonic, 0.0, false, 1.0, true));
            minus.push(MachInterval::new(Branch::Supersonic, 1.0, true, inf, false));
            plus.push(MachInterval::new(Branch::Subsonic, 0.0, false, 1.0, true));
            plus.push(MachInterval::new(Branch::Supersonic, 1.0, true, inf, false));
        }
        CriticalMachNumbers::Positive {
            m1_star,
            m2_star,
            m3_star,
        } => {
            minus.push(MachInterval::new(Branch::Subsonic, 0.0, false, m1_star, true));
            plus.push(MachInterval::new(Branch::Subsonic, 0.0, false, 1.0, true));
            if m2_star.is_finite() {
                minus.push(MachInterval::new(Branch::Supersonic, m2_star, true, inf, false));
                plus.push(MachInterval::new(Branch::Supersonic, 1.0, true, m3_star, false));
            }
        }
        CriticalMachNumbers::Negative {
            m1_dstar,
            m2_dstar,
            m3_dstar,
        } => {
            minus.push(MachInterval::new(Branch::Subsonic, 0.0, false, 1.0, true));
            plus.push(MachInterval::new(Branch::Subsonic, 0.0, false, m1_dstar, true));
            if m2_dstar.is_finite() {
                minus.push(MachInterval::new(Branch::Supersonic, 1.0, true, m3_dstar, false));
                plus.push(MachInterval::new(Branch::Supersonic, m2_dstar, true, inf, false));
            }
        }
    }
    AdmissibleSets {
        k,
        gamma_minus: minus,
        gamma_plus: plus,
    }
}

/// Up to two Mach intervals, subsonic first.
pub type IntervalList = UpToTwo<MachInterval>;
