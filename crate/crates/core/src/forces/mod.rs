//! Spectral pressures and forces on a lossless three-layer stack.
//!
//! The LDOS and the total photon number are piecewise constant, so the
//! gradient terms of the force density collapse onto the two interfaces.
//! Each interface carries an impulse split into a zero-point (ZCF), thermal
//! (TCF) and nonequilibrium (NCF) part. Summed over both interfaces and
//! multiplied by the area they equal the pressure difference between the
//! outer layers.
//!
//! LDOS model: `ρ = n ρ₀` with `ρ₀ = 1/(πc)` (1D mode counting, both
//! directions). Every reported ratio is independent of `ρ₀`.

mod spectrum;

pub use spectrum::{integrate_spectrum, OmegaGrid, Source, SpectralQuantity, ThermalScenario};

use crate::cavity::{photon_numbers_with, composite, DirectionalPhotonNumbers, LayerStack};
use crate::constants::{C, HBAR};
use crate::error::{at_least_one, non_negative, positive, Error, Result};

/// Tolerance on the beam force law `F/F₀ = |R₁|²` before a guard trips.
pub const BEAM_LAW_GUARD: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ForceModel {
    /// Vacuum LDOS per unit length and angular frequency.
    pub rho0: f64,
}

impl Default for ForceModel {
    fn default() -> Self {
        Self {
            rho0: 1.0 / (std::f64::consts::PI * C),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LdosProfile {
    pub rho0: f64,
    /// Layers 1, 2, 3.
    pub rho: [f64; 3],
}

/// Impulse at one interface, per unit area and angular frequency.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct InterfaceImpulse {
    pub zcf: f64,
    pub tcf: f64,
    pub ncf: f64,
}

impl InterfaceImpulse {
    pub fn total(&self) -> f64 {
        self.zcf + self.tcf + self.ncf
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PressureForce {
    pub force: f64,
    /// ε₁ ≠ ε₃: zero-point pressures do not cancel and `force` contains a
    /// static offset.
    pub zero_point_unbalanced: bool,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpectralForce {
    pub interfaces: [InterfaceImpulse; 2],
    /// `S·Σ` of the interface impulses.
    pub net_impulse: f64,
    /// `S·[P(x₁) − P(x₂)]`.
    pub net_pressure: f64,
    /// Perfect-reflector force for the left input alone.
    pub f0: f64,
    /// `net_pressure / f0`, zero when there is no left input.
    pub ratio_to_f0: f64,
    pub zero_point_unbalanced: bool,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BeamForce {
    pub force: f64,
    /// `F/F₀`, equal to |R₁|².
    pub ratio: f64,
    pub f0: f64,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ArInterfaceForces {
    /// Beam-driven force on the entry interface.
    pub f1: f64,
    /// Beam-driven force on the exit interface.
    pub f2: f64,
    /// Zero-point (ZCF) parts at the two interfaces, independent of the beam.
    pub zero_point: [f64; 2],
    pub f0: f64,
    /// `F₁ / ((1 − n) F₀)`; undefined at n = 1.
    pub kappa: Option<f64>,
}

/// Spectral pressure `ħωρ(⟨n⟩ + 1/2)`.
pub fn pressure(rho: f64, n_total: f64, omega: f64) -> f64 {
    HBAR * omega * rho * (n_total + 0.5)
}

/// Interface impulses of a piecewise-constant profile. Values at a jump are
/// two-sided means, which makes `zcf + tcf + ncf = −Δ[ħωρ(n + ½)]` exactly.
fn interface_impulses(rho: [f64; 3], totals: [f64; 3], omega: f64) -> [InterfaceImpulse; 2] {
    let hw = HBAR * omega;
    let jump = |i: usize| {
        let d_rho = rho[i + 1] - rho[i];
        let d_n = totals[i + 1] - totals[i];
        let rho_mean = 0.5 * (rho[i + 1] + rho[i]);
        let n_mean = 0.5 * (totals[i + 1] + totals[i]);
        InterfaceImpulse {
            zcf: -0.5 * hw * d_rho,
            tcf: -hw * d_rho * n_mean,
            ncf: -hw * rho_mean * d_n,
        }
    };
    [jump(0), jump(1)]
}

impl ForceModel {
    pub fn new(rho0: f64) -> Result<Self> {
        positive("rho0", rho0)?;
        Ok(Self { rho0 })
    }

    pub fn ldos(&self, stack: &LayerStack) -> LdosProfile {
        let [n1, n2, n3] = stack.indices();
        LdosProfile {
            rho0: self.rho0,
            rho: [n1 * self.rho0, n2 * self.rho0, n3 * self.rho0],
        }
    }

    pub fn force_density_decomposition(
        &self,
        stack: &LayerStack,
        omega: f64,
        numbers: &DirectionalPhotonNumbers,
    ) -> [InterfaceImpulse; 2] {
        interface_impulses(self.ldos(stack).rho, numbers.totals(), omega)
    }

    /// Net force from the pressures at `x1` (layer 1, `x1 < 0`) and `x2`
    /// (layer 3, `x2 > d2`).
    pub fn net_force_pressure(
        &self,
        stack: &LayerStack,
        omega: f64,
        numbers: &DirectionalPhotonNumbers,
        x1: f64,
        x2: f64,
        area: f64,
    ) -> Result<PressureForce> {
        positive("area", area)?;
        if !x1.is_finite() || x1 >= 0.0 {
            return Err(Error::InvalidInput {
                name: "x1",
                value: x1,
                reason: "must lie in layer 1 (x < 0)",
            });
        }
        if !x2.is_finite() || x2 <= stack.d2 {
            return Err(Error::InvalidInput {
                name: "x2",
                value: x2,
                reason: "must lie in layer 3 (x > d2)",
            });
        }
        let rho = self.ldos(stack).rho;
        let totals = numbers.totals();
        let p1 = pressure(rho[0], totals[0], omega);
        let p3 = pressure(rho[2], totals[2], omega);
        Ok(PressureForce {
            force: area * (p1 - p3),
            zero_point_unbalanced: !stack.symmetric(),
        })
    }

    /// Force on a perfect reflector surrounded by a medium of LDOS `rho_outer`
    /// with beam occupation `in1` from the left and darkness on the right.
    pub fn perfect_reflector_force(&self, rho_outer: f64, omega: f64, in1: f64, area: f64) -> f64 {
        // Incident plus fully reflected beam on the left.
        let left = pressure(rho_outer, 0.5 * (in1 + in1), omega);
        let right = pressure(rho_outer, 0.0, omega);
        area * (left - right)
    }

    /// All force quantities for inputs `in1`, `in3` at one frequency.
    pub fn spectral_force(
        &self,
        stack: &LayerStack,
        omega: f64,
        in1: f64,
        in3: f64,
        area: f64,
    ) -> Result<SpectralForce> {
        positive("area", area)?;
        let cc = composite(stack, omega)?;
        let numbers = photon_numbers_with(stack, &cc, in1, in3)?;
        let interfaces = self.force_density_decomposition(stack, omega, &numbers);
        let net_impulse = area * (interfaces[0].total() + interfaces[1].total());
        let by_pressure = self.net_force_pressure(stack, omega, &numbers, -1.0, stack.d2 + 1.0, area)?;
        let rho1 = self.ldos(stack).rho[0];
        let f0 = self.perfect_reflector_force(rho1, omega, in1, area);
        Ok(SpectralForce {
            interfaces,
            net_impulse,
            net_pressure: by_pressure.force,
            f0,
            ratio_to_f0: if f0 > 0.0 { by_pressure.force / f0 } else { 0.0 },
            zero_point_unbalanced: by_pressure.zero_point_unbalanced,
        })
    }

    pub fn total_force_beam(
        &self,
        stack: &LayerStack,
        omega: f64,
        in1: f64,
        area: f64,
    ) -> Result<BeamForce> {
        if !stack.symmetric() {
            return Err(Error::InvalidInput {
                name: "eps3",
                value: stack.eps3,
                reason: "beam force law needs eps1 == eps3",
            });
        }
        positive("beam occupation", in1)?;
        positive("area", area)?;
        let cc = composite(stack, omega)?;
        let numbers = photon_numbers_with(stack, &cc, in1, 0.0)?;
        let [n1, _, n3] = numbers.totals();
        let f0 = self.perfect_reflector_force(self.ldos(stack).rho[0], omega, in1, area);
        let ratio = (n1 - n3) / in1;
        let reflectance = cc.reflectance();
        if (ratio - reflectance).abs() > BEAM_LAW_GUARD {
            return Err(Error::NumericalGuard(format!(
                "beam force ratio {ratio:e} differs from |R1|^2 = {reflectance:e}"
            )));
        }
        Ok(BeamForce {
            force: ratio * f0,
            ratio,
            f0,
        })
    }

    /// Interface forces on a slab of index `n` in vacuum whose faces carry
    /// ideal anti-reflection coatings: no reflections, and the amplitude
    /// transmissions carry unit photon flux (|t|² = 1/n entering, n leaving).
    pub fn ar_interface_forces(&self, n: f64, omega: f64, in1: f64, area: f64) -> Result<ArInterfaceForces> {
        at_least_one("slab index", n)?;
        positive("omega", omega)?;
        non_negative("beam occupation", in1)?;
        positive("area", area)?;
        let eps = n * n;
        let t_in_sq = 1.0 / n;
        let t_out_sq = n;
        let slab_forward = (eps / 1.0).sqrt() * t_in_sq * in1;
        let exit_forward = (1.0 / eps).sqrt() * t_out_sq * slab_forward;
        let totals = [
            0.5 * in1,
            0.5 * slab_forward,
            0.5 * exit_forward,
        ];
        let rho = [self.rho0, n * self.rho0, self.rho0];
        let [i1, i2] = interface_impulses(rho, totals, omega);
        let f1 = area * (i1.tcf + i1.ncf);
        let f2 = area * (i2.tcf + i2.ncf);
        let f0 = self.perfect_reflector_force(self.rho0, omega, in1, area);
        let kappa = (n > 1.0 && f0 > 0.0).then(|| f1 / ((1.0 - n) * f0));
        Ok(ArInterfaceForces {
            f1,
            f2,
            zero_point: [area * i1.zcf, area * i2.zcf],
            f0,
            kappa,
        })
    }
}

pub fn ldos(stack: &LayerStack) -> LdosProfile {
    ForceModel::default().ldos(stack)
}

pub fn force_density_decomposition(
    stack: &LayerStack,
    omega: f64,
    numbers: &DirectionalPhotonNumbers,
) -> [InterfaceImpulse; 2] {
    ForceModel::default().force_density_decomposition(stack, omega, numbers)
}

pub fn net_force_pressure(
    stack: &LayerStack,
    omega: f64,
    numbers: &DirectionalPhotonNumbers,
    x1: f64,
    x2: f64,
    area: f64,
) -> Result<PressureForce> {
    ForceModel::default().net_force_pressure(stack, omega, numbers, x1, x2, area)
}

pub fn total_force_beam(stack: &LayerStack, omega: f64, in1: f64, area: f64) -> Result<BeamForce> {
    ForceModel::default().total_force_beam(stack, omega, in1, area)
}

pub fn ar_interface_forces(n: f64, omega: f64, in1: f64, area: f64) -> Result<ArInterfaceForces> {
    ForceModel::default().ar_interface_forces(n, omega, in1, area)
}
