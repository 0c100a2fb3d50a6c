//! Photon momentum in dielectric media and steady-state optical forces in
//! three-layer cavities.
//!
//! * [`kinematics`]: single-photon transmission through a dielectric block
//!   (polariton energy/momentum partition, dipole rest mass, recoil, CEV).
//! * [`cavity`]: Fresnel data, Fabry–Pérot composite coefficients and the
//!   directional photon numbers of a lossless three-layer stack.
//! * [`forces`]: LDOS, spectral pressure, ZCF/TCF/NCF interface impulses,
//!   beam and anti-reflection interface forces, and spectral integration.
//!
//! All quantities are SI. Energies in eV are converted through
//! [`constants`] only.

pub mod cavity;
pub mod constants;
mod error;
pub mod forces;
pub mod kinematics;

pub use cavity::{
    bose_einstein, composite, fresnel, photon_numbers, total_photon_number,
    CompositeCoefficients, DirectionalPhotonNumbers, InterfaceCoefficients, LayerStack,
};
pub use error::{Error, Result};
pub use forces::{
    ar_interface_forces, force_density_decomposition, integrate_spectrum, ldos,
    net_force_pressure, pressure, total_force_beam, ArInterfaceForces, BeamForce, ForceModel,
    InterfaceImpulse, LdosProfile, OmegaGrid, PressureForce, Source, SpectralForce,
    SpectralQuantity, ThermalScenario,
};
pub use kinematics::{
    bloch_momentum, cev_check, mass_transfer_cube, photon_momentum, solve_transmission,
    transit_timeline, FourMomentum, MediumBlock, MomentumConvention, PhotonInput,
    PolaritonSolution, TimelineSample, TransitPhase,
};
