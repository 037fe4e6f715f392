//! Driven biharmonic potential, its gradient, and the named parameter presets.
//!
//! The potential is
//!
//! ```text
//! V(x, t) = 1 - cos x - A cos(2x + phi_a) + F sin x [cos t + B cos(2t + phi_b)]
//! ```
//!
//! with spatial asymmetry controlled by `A`, `phi_a` and temporal asymmetry
//! by `B`, `phi_b`. The drive has period 2*pi in `t`.

use std::f64::consts::{FRAC_PI_2, PI};
use std::str::FromStr;

use crate::error::{RatchetError, Result};

/// Physical constants and driving/coupling parameters of the model.
///
/// Units: mass and Boltzmann constant are 1, position is in radians on a
/// 2*pi-periodic coordinate, time is in radians of drive phase (one driving
/// period is 2*pi).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SystemParams {
    pub mass: f64,
    pub k_b: f64,
    /// Effective Planck constant; sets the momentum quantization p_k = hbar * k.
    pub hbar: f64,
    /// Driving strength.
    pub drive_strength: f64,
    /// Spatial asymmetry amplitude (cos 2x component).
    pub spatial_asymmetry: f64,
    /// Spatial phase of the cos 2x component, radians.
    pub spatial_phase: f64,
    /// Temporal asymmetry amplitude (cos 2t component of the drive).
    pub temporal_asymmetry: f64,
    /// Temporal phase of the cos 2t component, radians.
    pub temporal_phase: f64,
    /// Classical velocity-proportional damping rate, in [0, 1].
    pub damping: f64,
    /// Bath temperature (energy units, k_B = 1).
    pub temperature: f64,
    /// Quantum system-bath coupling rate; equals `damping` in the presets.
    pub coupling: f64,
    /// Diagnostic: zero the full potential so momentum decay can be compared
    /// between the classical and quantum integrators in isolation.
    pub free_particle: bool,
}

impl Default for SystemParams {
    fn default() -> Self {
        SystemParams {
            mass: 1.0,
            k_b: 1.0,
            hbar: 0.041,
            drive_strength: 0.0,
            spatial_asymmetry: 0.5,
            spatial_phase: 0.0,
            temporal_asymmetry: 0.0,
            temporal_phase: FRAC_PI_2,
            damping: 0.0,
            temperature: 0.0,
            coupling: 0.0,
            free_particle: false,
        }
    }
}

impl SystemParams {
    /// Check all model invariants, returning the first violation found.
    pub fn validate(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.damping) {
            return Err(RatchetError::Validation(format!(
                "damping must satisfy 0 <= Gamma <= 1, got {}",
                self.damping
            )));
        }
        if self.temperature < 0.0 {
            return Err(RatchetError::Validation(format!(
                "temperature must be >= 0, got {}",
                self.temperature
            )));
        }
        if self.drive_strength < 0.0 {
            return Err(RatchetError::Validation(format!(
                "drive strength must be >= 0, got {}",
                self.drive_strength
            )));
        }
        if !(self.hbar > 0.0) {
            return Err(RatchetError::Validation(format!(
                "hbar must be > 0, got {}",
                self.hbar
            )));
        }
        if self.coupling < 0.0 {
            return Err(RatchetError::Validation(format!(
                "coupling must be >= 0, got {}",
                self.coupling
            )));
        }
        if !(self.mass > 0.0) || !(self.k_b > 0.0) {
            return Err(RatchetError::Validation(
                "mass and k_B must be positive".into(),
            ));
        }
        Ok(())
    }

    /// Time-dependent factor of the drive, `cos t + B cos(2t + phi_b)`.
    #[inline]
    pub fn drive_factor(&self, t: f64) -> f64 {
        t.cos() + self.temporal_asymmetry * (2.0 * t + self.temporal_phase).cos()
    }
}

/// The named parameter sets studied in the two forcing regimes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PresetName {
    /// Weak forcing, F = 0.02: mixed phase space, built-in spatiotemporal
    /// asymmetry (B = 0.2), very weak coupling Gamma = 1e-4.
    Weak002,
    /// Weak forcing, F = 0.05: same asymmetry, stronger drive.
    Weak005,
    /// Strong forcing, F = 2.5: harmonic drive (B = 0), spatial phase pi/2,
    /// dissipation-induced chaotic attractor, Gamma = 0.05.
    Strong,
}

impl PresetName {
    pub const ALL: [PresetName; 3] = [PresetName::Weak002, PresetName::Weak005, PresetName::Strong];

    pub fn as_str(&self) -> &'static str {
        match self {
            PresetName::Weak002 => "weak_002",
            PresetName::Weak005 => "weak_005",
            PresetName::Strong => "strong",
        }
    }
}

impl FromStr for PresetName {
    type Err = RatchetError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "weak_002" => Ok(PresetName::Weak002),
            "weak_005" => Ok(PresetName::Weak005),
            "strong" => Ok(PresetName::Strong),
            other => Err(RatchetError::Config(format!(
                "unknown preset `{other}` (expected weak_002, weak_005 or strong)"
            ))),
        }
    }
}

/// Parameter set for a named preset.
///
/// Temperature is deliberately left at 0 here: it is swept in every study
/// and must be set explicitly by the caller. The quantum coupling `epsilon`
/// is set equal to the classical damping `Gamma`: with m = 1 the Kraus
/// ladder contracts mean momentum at rate epsilon while the Langevin drift
/// contracts it at rate Gamma, so equality makes the two dynamics agree.
pub fn preset(name: PresetName) -> SystemParams {
    let common = SystemParams {
        spatial_asymmetry: 0.5,
        temporal_phase: FRAC_PI_2,
        hbar: 0.041,
        ..SystemParams::default()
    };
    match name {
        PresetName::Weak002 | PresetName::Weak005 => SystemParams {
            drive_strength: if name == PresetName::Weak002 { 0.02 } else { 0.05 },
            spatial_phase: 0.0,
            temporal_asymmetry: 0.2,
            damping: 1e-4,
            coupling: 1e-4,
            ..common
        },
        PresetName::Strong => SystemParams {
            drive_strength: 2.5,
            spatial_phase: FRAC_PI_2,
            temporal_asymmetry: 0.0,
            damping: 0.05,
            coupling: 0.05,
            ..common
        },
    }
}

/// Potential energy V(x, t).
#[inline]
pub fn potential(x: f64, t: f64, p: &SystemParams) -> f64 {
    if p.free_particle {
        return 0.0;
    }
    1.0 - x.cos() - p.spatial_asymmetry * (2.0 * x + p.spatial_phase).cos()
        + p.drive_strength * x.sin() * p.drive_factor(t)
}

/// Spatial gradient V'(x, t); the force in the Langevin equation is -V'.
#[inline]
pub fn potential_gradient(x: f64, t: f64, p: &SystemParams) -> f64 {
    if p.free_particle {
        return 0.0;
    }
    x.sin() + 2.0 * p.spatial_asymmetry * (2.0 * x + p.spatial_phase).sin()
        + p.drive_strength * x.cos() * p.drive_factor(t)
}

/// Reduce a position to [0, 2*pi) for reporting and histograms.
#[inline]
pub fn wrap_position(x: f64) -> f64 {
    let r = x.rem_euclid(2.0 * PI);
    if r == 2.0 * PI {
        0.0
    } else {
        r
    }
}
