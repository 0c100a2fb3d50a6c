//! Physical constants (CODATA 2018, exact SI values where defined).
//!
//! Every conversion in the crate goes through this table.

/// Identifier written into output metadata.
pub const TABLE_VERSION: &str = "CODATA-2018";

/// Speed of light in vacuum (m/s).
pub const C: f64 = 299_792_458.0;
/// Reduced Planck constant (J·s).
pub const HBAR: f64 = 1.054_571_817e-34;
/// Elementary charge, i.e. joules per electronvolt.
pub const EV: f64 = 1.602_176_634e-19;
/// Boltzmann constant (J/K).
pub const K_B: f64 = 1.380_649e-23;

pub fn ev_to_joule(ev: f64) -> f64 {
    ev * EV
}

pub fn joule_to_ev(j: f64) -> f64 {
    j / EV
}

/// Angular frequency (rad/s) of a photon with the given energy in eV.
pub fn omega_from_ev(ev: f64) -> f64 {
    ev * EV / HBAR
}

pub fn ev_from_omega(omega: f64) -> f64 {
    HBAR * omega / EV
}
