//! Ideal-gas states, equation of state and eigenstructure.
//!
//! Primitive variables `(rho, u, p)` are the canonical representation. The
//! conserved vector and the flux are derived from them through a [`GasModel`],
//! which carries the ratio of specific heats.

use crate::error::{Error, Result};
use crate::math::{abs, powf, sqrt};

/// Polytropic ideal gas, `p = (gamma - 1) rho e`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GasModel {
    gamma: f64,
}

impl Default for GasModel {
    fn default() -> Self {
        Self { gamma: 1.4 }
    }
}

/// Primitive fluid state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GasState {
    pub rho: f64,
    pub u: f64,
    pub p: f64,
}

/// Conserved variables `(rho, rho u, E)` per unit volume.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConservedVector {
    pub mass: f64,
    pub momentum: f64,
    pub energy: f64,
}

/// Physical flux `(rho u, rho u^2 + p, (E + p) u)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct FluxVector {
    pub mass_flux: f64,
    pub momentum_flux: f64,
    pub energy_flux: f64,
}

impl FluxVector {
    pub fn as_array(&self) -> [f64; 3] {
        [self.mass_flux, self.momentum_flux, self.energy_flux]
    }

    /// Flux seen from the mirrored frame `x -> -x, u -> -u`.
    pub fn mirror(&self) -> Self {
        Self {
            mass_flux: -self.mass_flux,
            momentum_flux: self.momentum_flux,
            energy_flux: -self.energy_flux,
        }
    }
}

impl ConservedVector {
    pub fn as_array(&self) -> [f64; 3] {
        [self.mass, self.momentum, self.energy]
    }
}

impl GasState {
    /// Builds a validated state; density and pressure must be positive and finite.
    pub fn new(rho: f64, u: f64, p: f64) -> Result<Self> {
        let state = Self { rho, u, p };
        state.validate()?;
        Ok(state)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.rho > 0.0) || !self.rho.is_finite() {
            return Err(Error::NonPhysical {
                quantity: "density",
                value: self.rho,
            });
        }
        if !(self.p > 0.0) || !self.p.is_finite() {
            return Err(Error::NonPhysical {
                quantity: "pressure",
                value: self.p,
            });
        }
        if !self.u.is_finite() {
            return Err(Error::NonPhysical {
                quantity: "velocity",
                value: self.u,
            });
        }
        Ok(())
    }

    /// Reflection `x -> -x, u -> -u`.
    pub fn mirror(&self) -> Self {
        Self {
            rho: self.rho,
            u: -self.u,
            p: self.p,
        }
    }

    /// Same velocity and pressure, different density (a contact jump).
    pub fn with_density(&self, rho: f64) -> Self {
        Self { rho, ..*self }
    }
}

impl GasModel {
    pub fn new(gamma: f64) -> Result<Self> {
        if !(gamma > 1.0) || !gamma.is_finite() {
            return Err(Error::InvalidGamma(gamma));
        }
        Ok(Self { gamma })
    }

    pub fn gamma(&self) -> f64 {
        self.gamma
    }

    pub fn sound_speed(&self, s: &GasState) -> f64 {
        sqrt(self.gamma * s.p / s.rho)
    }

    /// Signed Mach number `u / a`.
    pub fn mach(&self, s: &GasState) -> f64 {
        s.u / self.sound_speed(s)
    }

    pub fn internal_energy(&self, s: &GasState) -> f64 {
        s.p / ((self.gamma - 1.0) * s.rho)
    }

    /// Total energy density `E = p / (gamma - 1) + rho u^2 / 2`.
    pub fn total_energy(&self, s: &GasState) -> f64 {
        s.p / (self.gamma - 1.0) + 0.5 * s.rho * s.u * s.u
    }

    /// Isentrope invariant `p / rho^gamma`, a monotone function of entropy.
    pub fn isentrope(&self, s: &GasState) -> f64 {
        s.p / powf(s.rho, self.gamma)
    }

    pub fn flux(&self, s: &GasState) -> FluxVector {
        let energy = self.total_energy(s);
        FluxVector {
            mass_flux: s.rho * s.u,
            momentum_flux: s.rho * s.u * s.u + s.p,
            energy_flux: (energy + s.p) * s.u,
        }
    }

    /// Characteristic speeds `(u - a, u, u + a)`.
    pub fn eigenvalues(&self, s: &GasState) -> [f64; 3] {
        let a = self.sound_speed(s);
        [s.u - a, s.u, s.u + a]
    }

    pub fn conserved_from_primitive(&self, s: &GasState) -> ConservedVector {
        ConservedVector {
            mass: s.rho,
            momentum: s.rho * s.u,
            energy: self.total_energy(s),
        }
    }

    pub fn primitive_from_conserved(&self, v: &ConservedVector) -> Result<GasState> {
        if !(v.mass > 0.0) {
            return Err(Error::NonPhysical {
                quantity: "density",
                value: v.mass,
            });
        }
        let u = v.momentum / v.mass;
        let p = (self.gamma - 1.0) * (v.energy - 0.5 * v.momentum * u);
        let state = GasState { rho: v.mass, u, p };
        state.validate()?;
        Ok(state)
    }

    /// Scale for relative comparisons of velocities near a state.
    pub(crate) fn velocity_scale(&self, s: &GasState) -> f64 {
        abs(s.u).max(self.sound_speed(s))
    }
}
