//! Lossless three-layer stack at normal incidence: Fresnel data, composite
//! Fabry–Pérot coefficients and directional photon numbers.
//!
//! Layer 1 occupies `x < 0`, the cavity layer 2 spans `[0, d2]` and layer 3
//! `x > d2`. Inputs are the photon numbers incident from the left in layer 1
//! (`in1`) and from the right in layer 3 (`in3`).

use std::f64::consts::TAU;

use num_complex::Complex64;

use crate::constants::{C, HBAR, K_B};
use crate::error::{at_least_one, non_negative, positive, Error, Result};

/// Guard on `|1 + r₁r₂e^{2ik₂d₂}|`.
pub const RESONANCE_GUARD: f64 = 1e-14;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LayerStack {
    pub eps1: f64,
    pub eps2: f64,
    pub eps3: f64,
    /// Cavity width (m).
    pub d2: f64,
}

impl LayerStack {
    pub fn new(eps1: f64, eps2: f64, eps3: f64, d2: f64) -> Result<Self> {
        at_least_one("eps1", eps1)?;
        at_least_one("eps2", eps2)?;
        at_least_one("eps3", eps3)?;
        positive("d2", d2)?;
        Ok(Self { eps1, eps2, eps3, d2 })
    }

    /// Slab of permittivity `eps2` in a uniform surrounding `eps_outer`.
    pub fn slab(eps_outer: f64, eps2: f64, d2: f64) -> Result<Self> {
        Self::new(eps_outer, eps2, eps_outer, d2)
    }

    pub fn indices(&self) -> [f64; 3] {
        [self.eps1.sqrt(), self.eps2.sqrt(), self.eps3.sqrt()]
    }

    pub fn n1(&self) -> f64 {
        self.eps1.sqrt()
    }

    pub fn n2(&self) -> f64 {
        self.eps2.sqrt()
    }

    pub fn n3(&self) -> f64 {
        self.eps3.sqrt()
    }

    /// Wavenumber in the cavity layer, n₂ω/c.
    pub fn k2(&self, omega: f64) -> f64 {
        self.n2() * omega / C
    }

    pub fn symmetric(&self) -> bool {
        self.eps1 == self.eps3
    }

    /// Round-trip propagation factor e^{2ik₂d₂}, with the phase reduced mod 2π.
    pub fn round_trip_phase(&self, omega: f64) -> Complex64 {
        let phase = (2.0 * self.k2(omega) * self.d2).rem_euclid(TAU);
        Complex64::from_polar(1.0, phase)
    }
}

/// Single-interface amplitudes for left (`r`, `t`) and right (`r_p`, `t_p`) incidence.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InterfaceCoefficients {
    pub r: Complex64,
    pub t: Complex64,
    pub r_p: Complex64,
    pub t_p: Complex64,
}

impl InterfaceCoefficients {
    /// `t t' − r r'`, which is 1 for this sign convention.
    pub fn stokes(&self) -> Complex64 {
        self.t * self.t_p - self.r * self.r_p
    }
}

/// Normal-incidence Fresnel amplitudes for a wave going from index `n_a` into `n_b`.
pub fn fresnel(n_a: f64, n_b: f64) -> Result<InterfaceCoefficients> {
    at_least_one("n_a", n_a)?;
    at_least_one("n_b", n_b)?;
    let sum = n_a + n_b;
    let r = (n_a - n_b) / sum;
    Ok(InterfaceCoefficients {
        r: r.into(),
        t: (2.0 * n_a / sum).into(),
        r_p: (-r).into(),
        t_p: (2.0 * n_b / sum).into(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CompositeCoefficients {
    pub nu2: Complex64,
    pub r1: Complex64,
    pub r2: Complex64,
    pub t1: Complex64,
    pub t2: Complex64,
    pub r1p: Complex64,
    pub r2p: Complex64,
    pub t1p: Complex64,
    pub t2p: Complex64,
    /// e^{2ik₂d₂}.
    pub round_trip: Complex64,
    /// Re[1 + 2R₁′R₂ν₂e^{2ik₂d₂}], the intracavity normalization.
    pub denom: f64,
}

impl CompositeCoefficients {
    /// Power reflectance |R₁|² for left incidence.
    pub fn reflectance(&self) -> f64 {
        self.r1.norm_sqr()
    }

    /// Raw |T₁T₂|².
    pub fn transmission_sq(&self) -> f64 {
        (self.t1 * self.t2).norm_sqr()
    }
}

pub fn composite(stack: &LayerStack, omega: f64) -> Result<CompositeCoefficients> {
    positive("omega", omega)?;
    let [n1, n2, n3] = stack.indices();
    let i1 = fresnel(n1, n2)?;
    let i2 = fresnel(n2, n3)?;
    let e = stack.round_trip_phase(omega);

    let loop_gain = 1.0 + i1.r * i2.r * e;
    if loop_gain.norm() < RESONANCE_GUARD {
        return Err(Error::NumericalGuard(format!(
            "degenerate cavity resonance: |1 + r1 r2 e^(2ik2d2)| = {:e}",
            loop_gain.norm()
        )));
    }
    let nu2 = 1.0 / loop_gain;
    let r1p = i1.r_p;
    let r2 = i2.r;
    Ok(CompositeCoefficients {
        nu2,
        r1: (i1.r + i2.r * e) * nu2,
        r2,
        t1: i1.t * nu2,
        t2: i2.t,
        r1p,
        r2p: (i2.r_p + i1.r_p * e) * nu2,
        t1p: i1.t_p,
        t2p: i2.t_p * nu2,
        round_trip: e,
        denom: (1.0 + 2.0 * r1p * r2 * nu2 * e).re,
    })
}

/// Directional photon numbers: `n{layer}{p|m}` for right (+) / left (−) propagation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DirectionalPhotonNumbers {
    pub n1p: f64,
    pub n1m: f64,
    pub n2p: f64,
    pub n2m: f64,
    pub n3p: f64,
    pub n3m: f64,
}

impl DirectionalPhotonNumbers {
    pub fn as_array(&self) -> [f64; 6] {
        [self.n1p, self.n1m, self.n2p, self.n2m, self.n3p, self.n3m]
    }

    /// Per-layer totals, see [`total_photon_number`].
    pub fn totals(&self) -> [f64; 3] {
        [
            total_photon_number(self.n1p, self.n1m),
            total_photon_number(self.n2p, self.n2m),
            total_photon_number(self.n3p, self.n3m),
        ]
    }
}

pub fn photon_numbers(
    stack: &LayerStack,
    omega: f64,
    in1: f64,
    in3: f64,
) -> Result<DirectionalPhotonNumbers> {
    let cc = composite(stack, omega)?;
    photon_numbers_with(stack, &cc, in1, in3)
}

/// As [`photon_numbers`] with precomputed composite coefficients.
pub fn photon_numbers_with(
    stack: &LayerStack,
    cc: &CompositeCoefficients,
    in1: f64,
    in3: f64,
) -> Result<DirectionalPhotonNumbers> {
    non_negative("in1", in1)?;
    non_negative("in3", in3)?;
    let (e1, e2, e3) = (stack.eps1, stack.eps2, stack.eps3);
    let s21 = (e2 / e1).sqrt();
    let s23 = (e2 / e3).sqrt();

    let n1m = cc.r1.norm_sqr() * in1 + (e1 / e3).sqrt() * (cc.t1p * cc.t2p).norm_sqr() * in3;
    let n2p = (s21 * cc.t1.norm_sqr() * in1 + s23 * (cc.t2p * cc.r1p).norm_sqr() * in3) / cc.denom;
    let n2m = (s21 * (cc.t1 * cc.r2).norm_sqr() * in1 + s23 * cc.t2p.norm_sqr() * in3) / cc.denom;
    let n3p = (e3 / e1).sqrt() * (cc.t1 * cc.t2).norm_sqr() * in1 + cc.r2p.norm_sqr() * in3;

    Ok(DirectionalPhotonNumbers {
        n1p: in1,
        n1m,
        n2p,
        n2m,
        n3p,
        n3m: in3,
    })
}

/// Total photon number of a homogeneous lossless layer: the mean of the two
/// directional values.
pub fn total_photon_number(n_plus: f64, n_minus: f64) -> f64 {
    0.5 * (n_plus + n_minus)
}

/// Bose–Einstein occupation `1/(e^{ħω/k_BT} − 1)`; zero at T = 0.
pub fn bose_einstein(omega: f64, temperature: f64) -> f64 {
    if temperature <= 0.0 {
        return 0.0;
    }
    let x = HBAR * omega / (K_B * temperature);
    if x > 700.0 {
        0.0
    } else if x < 1e-8 {
        1.0 / x
    } else {
        1.0 / x.exp_m1()
    }
}
