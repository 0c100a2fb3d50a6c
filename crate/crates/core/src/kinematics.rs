//! Single-photon transmission through a dielectric block.
//!
//! A photon of energy ħω enters a block of index `n` and rest mass `M`. In the
//! medium it propagates as a polariton carrying energy `E = ħω + δm c²` and
//! momentum `p` at speed `c/n`; the block recoils with mass `M_r = M − δm` and
//! velocity `V_r`. For a chosen polariton momentum the rest of the partition
//! follows from four-momentum conservation and `E = p c²/v`.

use std::ops::{Add, Sub};

use crate::constants::{C, HBAR};
use crate::error::{at_least_one, finite, positive, Error, Result};

/// Relative slack used when testing closed-form identities.
pub const DEFAULT_SLACK: f64 = 1e-12;

/// Energy-momentum four-vector `(E/c, px, py, pz)`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct FourMomentum {
    pub e_over_c: f64,
    pub px: f64,
    pub py: f64,
    pub pz: f64,
}

impl FourMomentum {
    pub const fn new(e_over_c: f64, px: f64, py: f64, pz: f64) -> Self {
        Self { e_over_c, px, py, pz }
    }

    /// Four-momentum of a body with energy `energy` moving along x with momentum `px`.
    pub fn along_x(energy: f64, px: f64) -> Self {
        Self::new(energy / C, px, 0.0, 0.0)
    }

    pub fn energy(&self) -> f64 {
        self.e_over_c * C
    }

    /// Minkowski norm `(E/c)² − |p|²`, as computed.
    pub fn norm_sq(&self) -> f64 {
        self.e_over_c * self.e_over_c - self.px * self.px - self.py * self.py - self.pz * self.pz
    }

    /// Rest mass `√(norm²)/c`, clamping round-off negatives to zero.
    pub fn invariant_mass(&self) -> f64 {
        self.norm_sq().max(0.0).sqrt() / C
    }

    /// `norm² ≥ −slack·(E/c)²`.
    pub fn is_physical(&self, slack: f64) -> bool {
        self.norm_sq() >= -slack * self.e_over_c * self.e_over_c
    }
}

impl Add for FourMomentum {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(
            self.e_over_c + rhs.e_over_c,
            self.px + rhs.px,
            self.py + rhs.py,
            self.pz + rhs.pz,
        )
    }
}

impl Sub for FourMomentum {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(
            self.e_over_c - rhs.e_over_c,
            self.px - rhs.px,
            self.py - rhs.py,
            self.pz - rhs.pz,
        )
    }
}

/// Incident photon, identified by its angular frequency.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PhotonInput {
    omega: f64,
}

impl PhotonInput {
    pub fn new(omega: f64) -> Result<Self> {
        positive("omega", omega)?;
        Ok(Self { omega })
    }

    pub fn from_energy_ev(ev: f64) -> Result<Self> {
        positive("photon energy", ev)?;
        Self::new(crate::constants::omega_from_ev(ev))
    }

    /// Photon with vacuum wavelength `lambda0` (m).
    pub fn from_wavelength(lambda0: f64) -> Result<Self> {
        positive("wavelength", lambda0)?;
        Self::new(std::f64::consts::TAU * C / lambda0)
    }

    pub fn omega(&self) -> f64 {
        self.omega
    }

    /// Vacuum wavenumber ω/c.
    pub fn k0(&self) -> f64 {
        self.omega / C
    }

    /// ħω in joules.
    pub fn energy(&self) -> f64 {
        HBAR * self.omega
    }

    /// Vacuum photon momentum ħk₀.
    pub fn momentum(&self) -> f64 {
        HBAR * self.k0()
    }

    pub fn wavelength(&self) -> f64 {
        std::f64::consts::TAU * C / self.omega
    }

    pub fn four_momentum(&self) -> FourMomentum {
        FourMomentum::new(self.momentum(), self.momentum(), 0.0, 0.0)
    }
}

/// Lossless, dispersionless dielectric block initially at rest.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MediumBlock {
    pub n: f64,
    pub mass: f64,
    pub length: f64,
    pub density: Option<f64>,
}

impl MediumBlock {
    pub fn new(n: f64, mass: f64, length: f64) -> Result<Self> {
        at_least_one("refractive index", n)?;
        positive("block mass", mass)?;
        positive("block length", length)?;
        Ok(Self {
            n,
            mass,
            length,
            density: None,
        })
    }

    pub fn with_density(mut self, density: f64) -> Result<Self> {
        positive("density", density)?;
        self.density = Some(density);
        Ok(self)
    }

    pub fn four_momentum(&self) -> FourMomentum {
        FourMomentum::new(self.mass * C, 0.0, 0.0, 0.0)
    }
}

/// Choice of the total polariton momentum.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MomentumConvention {
    /// `ħk₀/n`: field momentum only, no dipole contribution.
    Abraham,
    /// `nħk₀`.
    Minkowski,
    /// Caller-supplied momentum (kg·m/s).
    General(f64),
}

impl MomentumConvention {
    pub fn validate(&self) -> Result<()> {
        if let Self::General(p) = *self {
            finite("general momentum", p)?;
            if p < 0.0 {
                return Err(Error::InvalidInput {
                    name: "general momentum",
                    value: p,
                    reason: "must be >= 0",
                });
            }
        }
        Ok(())
    }

    pub fn name(&self) -> &'static str {
        match self {
            Self::Abraham => "abraham",
            Self::Minkowski => "minkowski",
            Self::General(_) => "general",
        }
    }
}

pub fn photon_momentum(photon: &PhotonInput, n: f64, conv: MomentumConvention) -> Result<f64> {
    at_least_one("refractive index", n)?;
    conv.validate()?;
    Ok(match conv {
        MomentumConvention::Abraham => photon.momentum() / n,
        MomentumConvention::Minkowski => n * photon.momentum(),
        MomentumConvention::General(p) => p,
    })
}

/// Full energy/momentum partition of a transmitted photon.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolaritonSolution {
    /// Total polariton energy (J).
    pub energy: f64,
    /// Field part, always ħω.
    pub energy_field: f64,
    /// Dipole part δm c².
    pub energy_dipole: f64,
    pub momentum: f64,
    /// Field part ħk₀/n.
    pub momentum_field: f64,
    pub momentum_dipole: f64,
    /// Dipole rest mass δm (kg); negative only for exotic general momenta.
    pub delta_m: f64,
    /// Effective rest mass m₀ from `E² − (pc)² = (m₀c²)²`.
    pub rest_mass: f64,
    /// Propagation speed c/n.
    pub velocity: f64,
    /// Recoil mass `M − δm`.
    pub recoil_mass: f64,
    /// Recoil velocity (signed, +x is the photon direction).
    pub recoil_velocity: f64,
}

impl PolaritonSolution {
    /// δm < 0: momentum below the Abraham value.
    pub fn is_exotic(&self) -> bool {
        self.delta_m < 0.0
    }

    pub fn polariton_four_momentum(&self) -> FourMomentum {
        FourMomentum::along_x(self.energy, self.momentum)
    }

    pub fn medium_four_momentum(&self) -> FourMomentum {
        FourMomentum::new(
            self.recoil_mass * C,
            self.recoil_mass * self.recoil_velocity,
            0.0,
            0.0,
        )
    }
}

pub fn solve_transmission(
    photon: &PhotonInput,
    block: &MediumBlock,
    conv: MomentumConvention,
) -> Result<PolaritonSolution> {
    let n = block.n;
    let p = photon_momentum(photon, n, conv)?;
    let hw = photon.energy();
    let hk0 = photon.momentum();

    // Branch-specific closed forms avoid subtracting nearly equal totals.
    let (energy_dipole, momentum_dipole, recoil_momentum) = match conv {
        MomentumConvention::Minkowski => (
            (n * n - 1.0) * hw,
            (n - 1.0 / n) * hk0,
            (1.0 - n) * hk0,
        ),
        MomentumConvention::Abraham => (0.0, 0.0, (1.0 - 1.0 / n) * hk0),
        MomentumConvention::General(p) => (n * p * C - hw, p - hk0 / n, (hw - C * p) / C),
    };

    if hw + energy_dipole <= 0.0 {
        return Err(Error::Infeasible(format!(
            "momentum {p:e} kg m/s gives dipole energy {energy_dipole:e} J <= -hbar*omega"
        )));
    }
    let delta_m = energy_dipole / (C * C);
    if delta_m >= block.mass {
        return Err(Error::Infeasible(format!(
            "dipole mass {delta_m:e} kg >= block mass {:e} kg",
            block.mass
        )));
    }
    let recoil_mass = block.mass - delta_m;
    let energy = hw + energy_dipole;
    let pc = p * C;
    let rest_mass = ((energy - pc) * (energy + pc)).max(0.0).sqrt() / (C * C);

    Ok(PolaritonSolution {
        energy,
        energy_field: hw,
        energy_dipole,
        momentum: p,
        momentum_field: hk0 / n,
        momentum_dipole,
        delta_m,
        rest_mass,
        velocity: C / n,
        recoil_mass,
        recoil_velocity: recoil_momentum / recoil_mass,
    })
}

/// Center-of-energy velocity before entry and during transit.
pub fn cev_check(photon: &PhotonInput, block: &MediumBlock, sol: &PolaritonSolution) -> (f64, f64) {
    let hw = photon.energy();
    let before = hw * C / (hw + block.mass * C * C);
    (before, cev_in_medium(sol))
}

fn cev_in_medium(sol: &PolaritonSolution) -> f64 {
    let rest = sol.recoil_mass * C * C;
    (sol.energy * sol.velocity + rest * sol.recoil_velocity) / (sol.energy + rest)
}

/// Polariton momentum from the in-medium wavelength `λ₀/n`, i.e. `2πħ/λ`.
pub fn bloch_momentum(photon: &PhotonInput, n: f64) -> Result<f64> {
    at_least_one("refractive index", n)?;
    let lambda = photon.wavelength() / n;
    Ok(std::f64::consts::TAU * HBAR / lambda)
}

/// Side of a cube of the given density holding mass `delta_m`.
pub fn mass_transfer_cube(delta_m: f64, density: f64) -> Result<f64> {
    positive("transferred mass", delta_m)?;
    positive("density", density)?;
    Ok((delta_m / density).cbrt())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TransitPhase {
    InMedium,
    Exited,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TimelineSample {
    pub time: f64,
    /// Block displacement from its initial rest position (m).
    pub block_displacement: f64,
    /// Polariton front measured from the entry face (m).
    pub polariton_position: f64,
    /// Instantaneous center-of-energy velocity (m/s).
    pub cev: f64,
    pub phase: TransitPhase,
}

/// Samples the transit on `steps` evenly spaced instants from entry (t = 0)
/// to exit (t = nL/c). Entry and exit are instantaneous; the last sample is
/// the post-exit state with the block displaced and at rest.
pub fn transit_timeline(
    photon: &PhotonInput,
    block: &MediumBlock,
    conv: MomentumConvention,
    steps: usize,
) -> Result<Vec<TimelineSample>> {
    if steps < 2 {
        return Err(Error::InvalidInput {
            name: "steps",
            value: steps as f64,
            reason: "must be >= 2",
        });
    }
    positive("block length", block.length)?;
    let sol = solve_transmission(photon, block, conv)?;
    let (cev_vacuum, cev_medium) = cev_check(photon, block, &sol);
    let transit = block.length / sol.velocity;
    let last = steps - 1;

    Ok((0..steps)
        .map(|k| {
            let time = if k == last {
                transit
            } else {
                transit * k as f64 / last as f64
            };
            if k == last {
                TimelineSample {
                    time,
                    block_displacement: sol.recoil_velocity * transit,
                    polariton_position: block.length,
                    cev: cev_vacuum,
                    phase: TransitPhase::Exited,
                }
            } else {
                TimelineSample {
                    time,
                    block_displacement: sol.recoil_velocity * time,
                    polariton_position: sol.velocity * time,
                    cev: cev_medium,
                    phase: TransitPhase::InMedium,
                }
            }
        })
        .collect())
}
