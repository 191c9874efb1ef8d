//! Species data, characteristic scales and the reduced-unit system.
//!
//! All internal computation uses reduced units: lengths in R*, energies in
//! E* = hbar^2/(2 mu R*^2), times in hbar/E*, speeds in R*/(hbar/E*). SI and
//! atomic units appear only at the I/O boundary, through [`CharScales`].

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::half::Half;

/// CODATA 2018 constants used at the unit boundary.
pub mod constants {
    /// Electron masses per atomic mass unit.
    pub const AMU_TO_ME: f64 = 1822.888486209;
    /// Hartree expressed as a frequency, E_h/h in Hz.
    pub const HARTREE_HZ: f64 = 6.579_683_920_502e15;
    /// Bohr radius in meters.
    pub const BOHR_M: f64 = 5.291_772_109_03e-11;
    /// Atomic unit of time in seconds.
    pub const ATOMIC_TIME_S: f64 = 2.418_884_326_585_7e-17;
}

/// One trapped ion plus one trapped atom, with the constants that fix the
/// interaction strength and the hyperfine thresholds.
///
/// Polarizabilities and hyperfine splittings are inputs with documented
/// defaults (see [`SpeciesPair::ba135_rb87`]); they can be overridden in the
/// run configuration.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpeciesPair {
    pub label: String,
    /// Ion mass in atomic mass units.
    pub ion_mass_amu: f64,
    /// Atom mass in atomic mass units.
    pub atom_mass_amu: f64,
    /// Static electric dipole polarizability of the atom, in a0^3.
    pub atom_polarizability_au: f64,
    pub ion_nuclear_spin: Half,
    pub atom_nuclear_spin: Half,
    /// Ground-state hyperfine splitting of the ion in GHz.
    pub ion_hf_splitting_ghz: f64,
    /// Ground-state hyperfine splitting of the atom in GHz.
    pub atom_hf_splitting_ghz: f64,
}

impl SpeciesPair {
    pub fn new(
        label: impl Into<String>,
        ion_mass_amu: f64,
        atom_mass_amu: f64,
        atom_polarizability_au: f64,
        ion_nuclear_spin: Half,
        atom_nuclear_spin: Half,
        ion_hf_splitting_ghz: f64,
        atom_hf_splitting_ghz: f64,
    ) -> Result<Self> {
        if ion_mass_amu <= 0.0 || atom_mass_amu <= 0.0 {
            return Err(Error::InvalidInput("masses must be positive".into()));
        }
        if atom_polarizability_au <= 0.0 {
            return Err(Error::InvalidInput("polarizability must be positive".into()));
        }
        if ion_nuclear_spin.0 < 0 || atom_nuclear_spin.0 < 0 {
            return Err(Error::InvalidInput("nuclear spins must be non-negative".into()));
        }
        if ion_hf_splitting_ghz < 0.0 || atom_hf_splitting_ghz < 0.0 {
            return Err(Error::InvalidInput("hyperfine splittings must be non-negative".into()));
        }
        Ok(SpeciesPair {
            label: label.into(),
            ion_mass_amu,
            atom_mass_amu,
            atom_polarizability_au,
            ion_nuclear_spin,
            atom_nuclear_spin,
            ion_hf_splitting_ghz,
            atom_hf_splitting_ghz,
        })
    }

    /// 135Ba+ + 87Rb.
    ///
    /// Atomic masses from the AME2020 evaluation. Rb polarizability 319.1 a0^3
    /// (ground-state scalar value, Derevianko et al. compilation). Hyperfine
    /// splittings: 87Rb 6.834683 GHz, 135Ba+ 7.183340 GHz (2x the magnetic
    /// dipole constant A = 3591.67 MHz).
    pub fn ba135_rb87() -> SpeciesPair {
        SpeciesPair::new(
            "Ba135-Rb87",
            134.905_688_6,
            86.909_180_5,
            319.1,
            Half(3),
            Half(3),
            7.183_340,
            6.834_683,
        )
        .unwrap()
    }

    /// 40Ca+ + 23Na. Na polarizability 162.7 a0^3; Na hyperfine splitting
    /// 1.771626 GHz. 40Ca has no nuclear spin.
    pub fn ca40_na23() -> SpeciesPair {
        SpeciesPair::new(
            "Ca40-Na23",
            39.962_590_9,
            22.989_769_3,
            162.7,
            Half(0),
            Half(3),
            0.0,
            1.771_626,
        )
        .unwrap()
    }

    pub fn reduced_mass_amu(&self) -> f64 {
        self.ion_mass_amu * self.atom_mass_amu / (self.ion_mass_amu + self.atom_mass_amu)
    }

    pub fn reduced_mass_me(&self) -> f64 {
        self.reduced_mass_amu() * constants::AMU_TO_ME
    }
}

/// Characteristic scales of the polarization interaction in a trap of angular
/// frequency omega: R* = sqrt(2 mu C4 / hbar^2) with C4 = alpha e^2 / 2,
/// E* = hbar^2/(2 mu R*^2), l0 = sqrt(hbar/(mu omega)), kappa = R*/l0.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CharScales {
    /// Characteristic range R* in a0.
    pub r_star_a0: f64,
    /// Characteristic energy as a frequency, E*/h in Hz.
    pub e_star_hz: f64,
    /// Harmonic oscillator length in a0.
    pub l_osc_a0: f64,
    /// R*/l0, the single dimensionless parameter of the reduced radial problem.
    pub kappa: f64,
    /// Trap angular frequency in rad/s.
    pub omega_rad_s: f64,
    /// Reduced mass in electron masses.
    pub reduced_mass_me: f64,
}

/// Reduced radial equation: [-d^2/dx^2 + l(l+1)/x^2 + kappa^4 x^2 - 1/x^4 - eps] psi = 0,
/// x in R*, eps in E*. The trap level spacing hbar omega is 2 kappa^2 E*.
pub fn characteristic_scales(pair: &SpeciesPair, omega_rad_s: f64) -> Result<CharScales> {
    if omega_rad_s <= 0.0 {
        return Err(Error::InvalidInput("trap frequency must be positive".into()));
    }
    let mu = pair.reduced_mass_me();
    // In atomic units C4 = alpha/2, so R* = sqrt(2 mu C4) = sqrt(mu alpha).
    let r_star = (mu * pair.atom_polarizability_au).sqrt();
    let e_star_hartree = 1.0 / (2.0 * mu * r_star * r_star);
    let e_star_hz = e_star_hartree * constants::HARTREE_HZ;
    let omega_au = omega_rad_s * constants::ATOMIC_TIME_S;
    let l_osc = (1.0 / (mu * omega_au)).sqrt();
    Ok(CharScales {
        r_star_a0: r_star,
        e_star_hz,
        l_osc_a0: l_osc,
        kappa: r_star / l_osc,
        omega_rad_s,
        reduced_mass_me: mu,
    })
}

impl CharScales {
    /// hbar/E* in seconds, the reduced unit of time.
    pub fn time_unit_s(&self) -> f64 {
        1.0 / (2.0 * std::f64::consts::PI * self.e_star_hz)
    }

    /// R*/(hbar/E*) in m/s, the reduced unit of speed.
    pub fn speed_unit_m_s(&self) -> f64 {
        self.r_star_a0 * constants::BOHR_M / self.time_unit_s()
    }

    /// Trap level spacing hbar omega in reduced energy units: 2 kappa^2.
    pub fn trap_spacing_reduced(&self) -> f64 {
        2.0 * self.kappa * self.kappa
    }

    /// Convert a frequency quoted in GHz into reduced energy units.
    pub fn ghz_to_reduced(&self, f_ghz: f64) -> f64 {
        f_ghz * 1e9 / self.e_star_hz
    }
}

/// Physical dimension of a converted quantity.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Quantity {
    Length,
    Energy,
    Time,
    Speed,
}

/// Unit system at the conversion boundary. `Si` uses m, Hz (E/h), s, m/s;
/// `Atomic` uses a0, Hartree, atomic time, a0 per atomic time; `Reduced`
/// uses R*, E*, hbar/E*, R* E*/hbar.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum UnitSystem {
    Si,
    Atomic,
    Reduced,
}

/// Multiplicative factor taking `quantity` from `from` to `to`.
pub fn conversion_factor(quantity: Quantity, from: UnitSystem, to: UnitSystem, scales: &CharScales) -> f64 {
    // factor from `sys` to SI for each dimension
    let to_si = |sys: UnitSystem| -> f64 {
        match (quantity, sys) {
            (_, UnitSystem::Si) => 1.0,
            (Quantity::Length, UnitSystem::Atomic) => constants::BOHR_M,
            (Quantity::Length, UnitSystem::Reduced) => scales.r_star_a0 * constants::BOHR_M,
            (Quantity::Energy, UnitSystem::Atomic) => constants::HARTREE_HZ,
            (Quantity::Energy, UnitSystem::Reduced) => scales.e_star_hz,
            (Quantity::Time, UnitSystem::Atomic) => constants::ATOMIC_TIME_S,
            (Quantity::Time, UnitSystem::Reduced) => scales.time_unit_s(),
            (Quantity::Speed, UnitSystem::Atomic) => constants::BOHR_M / constants::ATOMIC_TIME_S,
            (Quantity::Speed, UnitSystem::Reduced) => scales.speed_unit_m_s(),
        }
    };
    to_si(from) / to_si(to)
}

/// Exact multiplicative conversion; round-trips to machine precision.
pub fn convert(value: f64, quantity: Quantity, from: UnitSystem, to: UnitSystem, scales: &CharScales) -> f64 {
    value * conversion_factor(quantity, from, to, scales)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::{assert_abs_diff_eq, assert_relative_eq};
    use std::f64::consts::PI;

    fn omega_khz(nu: f64) -> f64 {
        2.0 * PI * nu * 1e3
    }

    #[test]
    fn ba_rb_scales_match_reference_row() {
        let pair = SpeciesPair::ba135_rb87();
        let s = characteristic_scales(&pair, omega_khz(100.0)).unwrap();
        assert_relative_eq!(s.r_star_a0, 5544.0, max_relative = 0.01);
        assert_relative_eq!(s.l_osc_a0, 826.0, max_relative = 0.01);
        assert_relative_eq!(s.e_star_hz, 1111.0, max_relative = 0.01);
    }

    #[test]
    fn ca_na_scales_match_reference_row() {
        let pair = SpeciesPair::ca40_na23();
        let s = characteristic_scales(&pair, omega_khz(100.0)).unwrap();
        assert_relative_eq!(s.r_star_a0, 2081.0, max_relative = 0.01);
        assert_relative_eq!(s.e_star_hz, 28_545.0, max_relative = 0.01);
    }

    #[test]
    fn kappa_at_30_khz() {
        let pair = SpeciesPair::ba135_rb87();
        let s = characteristic_scales(&pair, omega_khz(30.0)).unwrap();
        assert_abs_diff_eq!(s.kappa, 3.68, epsilon = 0.01);
        // l0 scales as omega^(-1/2)
        let s100 = characteristic_scales(&pair, omega_khz(100.0)).unwrap();
        assert_relative_eq!(s.l_osc_a0, s100.l_osc_a0 * (100.0f64 / 30.0).sqrt(), max_relative = 1e-12);
    }

    #[test]
    fn speed_and_time_units() {
        let pair = SpeciesPair::ba135_rb87();
        let s = characteristic_scales(&pair, omega_khz(30.0)).unwrap();
        // one reduced speed unit ~ 2.05 mm/s
        assert_relative_eq!(s.speed_unit_m_s(), 2.05e-3, max_relative = 0.01);
        // 9.14 hbar/E* ~ 1.31 ms
        let t = convert(9.14, Quantity::Time, UnitSystem::Reduced, UnitSystem::Si, &s);
        assert_relative_eq!(t, 1.31e-3, max_relative = 0.01);
    }

    #[test]
    fn omega_scaling_invariants() {
        let pair = SpeciesPair::ba135_rb87();
        let a = characteristic_scales(&pair, omega_khz(30.0)).unwrap();
        let b = characteristic_scales(&pair, omega_khz(120.0)).unwrap();
        // E* R*^2 is omega-independent
        assert_relative_eq!(
            a.e_star_hz * a.r_star_a0 * a.r_star_a0,
            b.e_star_hz * b.r_star_a0 * b.r_star_a0,
            max_relative = 1e-12
        );
        // kappa scales as omega^(1/2)
        assert_relative_eq!(b.kappa, a.kappa * 2.0, max_relative = 1e-12);
    }

    #[test]
    fn kappa4_consistent_with_raw_constants() {
        let pair = SpeciesPair::ba135_rb87();
        let s = characteristic_scales(&pair, omega_khz(30.0)).unwrap();
        // kappa^4 = (mu omega R*^2 / hbar)^2 recomputed in atomic units
        let mu = pair.reduced_mass_me();
        let omega_au = s.omega_rad_s * constants::ATOMIC_TIME_S;
        let direct = (mu * omega_au * s.r_star_a0 * s.r_star_a0).powi(2);
        assert_relative_eq!(s.kappa.powi(4), direct, max_relative = 1e-12);
    }

    #[test]
    fn conversion_round_trip() {
        let pair = SpeciesPair::ba135_rb87();
        let s = characteristic_scales(&pair, omega_khz(30.0)).unwrap();
        for q in [Quantity::Length, Quantity::Energy, Quantity::Time, Quantity::Speed] {
            for (a, b) in [
                (UnitSystem::Si, UnitSystem::Reduced),
                (UnitSystem::Atomic, UnitSystem::Reduced),
                (UnitSystem::Si, UnitSystem::Atomic),
            ] {
                let x = 1.234_567;
                let y = convert(convert(x, q, a, b, &s), q, b, a, &s);
                assert_relative_eq!(x, y, max_relative = 1e-13);
            }
        }
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(SpeciesPair::new("x", -1.0, 1.0, 1.0, Half(0), Half(0), 0.0, 0.0).is_err());
        assert!(SpeciesPair::new("x", 1.0, 1.0, -1.0, Half(0), Half(0), 0.0, 0.0).is_err());
        let pair = SpeciesPair::ba135_rb87();
        assert!(characteristic_scales(&pair, 0.0).is_err());
    }
}
