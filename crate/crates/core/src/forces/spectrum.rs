//! Trapezoidal integration of spectral forces over an angular-frequency grid.

use rayon::prelude::*;

use super::ForceModel;
use crate::cavity::{bose_einstein, photon_numbers, LayerStack};
use crate::constants::{C, HBAR};
use crate::error::{non_negative, positive, Error, Result};

/// Photon-number input on one side of the stack.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Source {
    /// Thermal radiation at the given temperature (K).
    Temperature(f64),
    /// Frequency-independent beam occupation.
    Occupation(f64),
}

impl Source {
    pub fn occupation(&self, omega: f64) -> f64 {
        match *self {
            Self::Temperature(t) => bose_einstein(omega, t),
            Self::Occupation(n) => n,
        }
    }

    fn validate(&self) -> Result<()> {
        match *self {
            Self::Temperature(t) => non_negative("temperature", t).map(drop),
            Self::Occupation(n) => non_negative("occupation", n).map(drop),
        }
    }
}

/// Evenly spaced angular frequencies; a single point stands for a spectral
/// line of unit weight.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OmegaGrid {
    pub min: f64,
    pub max: f64,
    pub points: usize,
}

impl OmegaGrid {
    pub fn new(min: f64, max: f64, points: usize) -> Result<Self> {
        let grid = Self { min, max, points };
        grid.validate()?;
        Ok(grid)
    }

    pub fn single(omega: f64) -> Result<Self> {
        Self::new(omega, omega, 1)
    }

    pub fn validate(&self) -> Result<()> {
        positive("omega_min", self.min)?;
        positive("omega_max", self.max)?;
        match self.points {
            0 => Err(Error::InvalidInput {
                name: "grid points",
                value: 0.0,
                reason: "grid is empty",
            }),
            1 => Ok(()),
            _ if self.max > self.min => Ok(()),
            _ => Err(Error::InvalidInput {
                name: "omega_max",
                value: self.max,
                reason: "must exceed omega_min for a multi-point grid",
            }),
        }
    }

    pub fn omega(&self, i: usize) -> f64 {
        if self.points == 1 {
            return self.min;
        }
        if i + 1 == self.points {
            return self.max;
        }
        self.min + (self.max - self.min) * i as f64 / (self.points - 1) as f64
    }

    pub fn omegas(&self) -> Vec<f64> {
        (0..self.points).map(|i| self.omega(i)).collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThermalScenario {
    pub left: Source,
    pub right: Source,
    pub grid: OmegaGrid,
    /// Area S (m²).
    pub area: f64,
}

impl ThermalScenario {
    pub fn validate(&self) -> Result<()> {
        self.left.validate()?;
        self.right.validate()?;
        self.grid.validate()?;
        positive("area", self.area).map(drop)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpectralQuantity {
    /// Net force on the stack (N).
    NetForce,
    /// Full impulse (ZCF + TCF + NCF) at the left interface times S (N).
    FirstInterfaceForce,
    /// Same at the right interface (N).
    SecondInterfaceForce,
    /// Net rightward energy flux through the stack (W/m²).
    EnergyFlux,
}

impl ForceModel {
    pub fn spectral_value(
        &self,
        scenario: &ThermalScenario,
        stack: &LayerStack,
        quantity: SpectralQuantity,
        omega: f64,
    ) -> Result<f64> {
        let in1 = scenario.left.occupation(omega);
        let in3 = scenario.right.occupation(omega);
        Ok(match quantity {
            SpectralQuantity::EnergyFlux => {
                let pn = photon_numbers(stack, omega, in1, in3)?;
                // Forward LDOS ρ/2 times group speed c/n is ρ₀c/2 in every layer.
                HBAR * omega * 0.5 * self.rho0 * C * (pn.n3p - pn.n3m)
            }
            _ => {
                let sf = self.spectral_force(stack, omega, in1, in3, scenario.area)?;
                match quantity {
                    SpectralQuantity::NetForce => sf.net_pressure,
                    SpectralQuantity::FirstInterfaceForce => scenario.area * sf.interfaces[0].total(),
                    _ => scenario.area * sf.interfaces[1].total(),
                }
            }
        })
    }

    /// Spectral values on every grid point, in grid order.
    pub fn spectral_values(
        &self,
        scenario: &ThermalScenario,
        stack: &LayerStack,
        quantity: SpectralQuantity,
        parallel: bool,
    ) -> Result<Vec<f64>> {
        scenario.validate()?;
        let eval = |i: usize| self.spectral_value(scenario, stack, quantity, scenario.grid.omega(i));
        if parallel {
            (0..scenario.grid.points).into_par_iter().map(eval).collect()
        } else {
            (0..scenario.grid.points).map(eval).collect()
        }
    }

    /// Trapezoidal integral over the grid. Evaluation may run in parallel;
    /// the reduction is sequential in grid order.
    pub fn integrate_spectrum(
        &self,
        scenario: &ThermalScenario,
        stack: &LayerStack,
        quantity: SpectralQuantity,
        parallel: bool,
    ) -> Result<f64> {
        let values = self.spectral_values(scenario, stack, quantity, parallel)?;
        Ok(trapezoid(&scenario.grid, &values))
    }
}

fn trapezoid(grid: &OmegaGrid, values: &[f64]) -> f64 {
    if values.len() == 1 {
        return values[0];
    }
    let h = (grid.max - grid.min) / (grid.points - 1) as f64;
    let inner: f64 = values[1..values.len() - 1].iter().sum();
    h * (0.5 * (values[0] + values[values.len() - 1]) + inner)
}

pub fn integrate_spectrum(
    scenario: &ThermalScenario,
    stack: &LayerStack,
    quantity: SpectralQuantity,
) -> Result<f64> {
    ForceModel::default().integrate_spectrum(scenario, stack, quantity, true)
}
