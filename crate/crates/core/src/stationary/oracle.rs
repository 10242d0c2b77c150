//! Brute-force solver for the flux jump, independent of the Mach-branch
//! closed forms. Verification tool only.

use alloc::vec::Vec;

use crate::gas::{GasModel, GasState};

use super::SourceCoefficients;

const GRID_POINTS: usize = 40_000;

/// Every state `U+` with `u+ > 0` and `p+ > 0` satisfying the three flux-jump
/// equations, ordered by increasing `u+`.
///
/// Mass and momentum rows give `rho+ = m / u+` and `p+ = P - m u+`, leaving one
/// scalar residual in `u+` (the energy row). That residual is scanned on a
/// uniform grid over `(0, P/m)`, the whole range with positive pressure, and
/// each sign change is bisected.
pub fn oracle_jump_solutions(upstream: &GasState, coeffs: &SourceCoefficients, model: &GasModel) -> Vec<GasState> {
    let mut out = Vec::new();
    if !(upstream.u > 0.0) || upstream.validate().is_err() {
        return out;
    }
    let g = model.gamma();
    let [g1, g2, g3] = coeffs.gains();
    let flux = model.flux(upstream);
    let mass = g1 * flux.mass_flux;
    let mom = g2 * flux.momentum_flux;
    let energy = g3 * flux.energy_flux;
    let residual = |u: f64| g / (g - 1.0) * (mom - mass * u) * u + 0.5 * mass * u * u - energy;

    let top = mom / mass;
    let h = top / GRID_POINTS as f64;
    let mut prev_u = h * 1e-6;
    let mut prev_r = residual(prev_u);
    for i in 1..=GRID_POINTS {
        let u = if i == GRID_POINTS { top * (1.0 - 1e-15) } else { h * i as f64 };
        let r = residual(u);
        let root = if r == 0.0 {
            Some(u)
        } else if prev_r != 0.0 && (r > 0.0) != (prev_r > 0.0) {
            Some(bisect(&residual, prev_u, u, prev_r))
        } else {
            None
        };
        if let Some(u_plus) = root {
            let p = mom - mass * u_plus;
            if p > 0.0 {
                out.push(GasState {
                    rho: mass / u_plus,
                    u: u_plus,
                    p,
                });
            }
        }
        prev_u = u;
        prev_r = r;
    }
    out
}

fn bisect(f: &impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, mut flo: f64) -> f64 {
    for _ in 0..200 {
        if hi - lo <= 1e-15 * hi {
            break;
        }
        let mid = 0.5 * (lo + hi);
        let fm = f(mid);
        if fm == 0.0 {
            return mid;
        }
        if (fm > 0.0) == (flo > 0.0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}
