//! Average oscillator energies under several statistics and the spectral
//! intensity tables built from them.

use std::fmt;
use std::io::{self, Write};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::scalar::LightSpeed;

/// Statistics weighting the oscillator levels of a mode.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Statistics {
    /// Geometric Boltzmann weights: `⟨E⟩ = ħω/(e^{ħω/kT} - 1)`.
    Planck,
    /// Levels cut off at `2W` and weighted by the bounded decay family.
    Bounded,
    /// Odd-level sign bookkeeping: `⟨E⟩ = ħω/(e^{ħω/kT} + 1)`.
    FermiOdd,
    /// Even-level sign bookkeeping: `⟨E⟩ = -ħω/(e^{ħω/kT} - 1)`, negative.
    FermiEven,
}

impl Statistics {
    pub fn label(self) -> &'static str {
        match self {
            Statistics::Planck => "planck",
            Statistics::Bounded => "bounded",
            Statistics::FermiOdd => "fermi-odd",
            Statistics::FermiEven => "fermi-even",
        }
    }
}

impl fmt::Display for Statistics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

/// Level parity selecting the sign bookkeeping of the Fermi-type average.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Odd,
    Even,
}

/// Oscillator quantum `ħω`, thermal energy `kT`, and an optional level
/// bound `W` for the bounded statistics (which require `ħω < 2W`).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ThermalParams {
    hbar_omega: f64,
    kt: f64,
    bound: Option<f64>,
}

impl ThermalParams {
    pub fn new(hbar_omega: f64, kt: f64, bound: Option<f64>) -> Result<Self> {
        if !(hbar_omega.is_finite() && hbar_omega > 0.0) {
            return Err(Error::DomainError(format!(
                "oscillator quantum must be finite and positive, got {hbar_omega}"
            )));
        }
        if !(kt.is_finite() && kt > 0.0) {
            return Err(Error::DomainError(format!(
                "thermal energy must be finite and positive, got {kt}"
            )));
        }
        if let Some(w) = bound {
            if !(w.is_finite() && w > 0.0) {
                return Err(Error::DomainError(format!(
                    "energy bound must be finite and positive, got {w}"
                )));
            }
            if hbar_omega >= 2.0 * w {
                return Err(Error::DomainError(format!(
                    "oscillator quantum {hbar_omega} must lie below the bound 2W = {}",
                    2.0 * w
                )));
            }
        }
        Ok(ThermalParams {
            hbar_omega,
            kt,
            bound,
        })
    }

    #[inline]
    pub fn hbar_omega(&self) -> f64 {
        self.hbar_omega
    }

    #[inline]
    pub fn kt(&self) -> f64 {
        self.kt
    }

    #[inline]
    pub fn bound(&self) -> Option<f64> {
        self.bound
    }
}

/// Planck average `⟨E⟩ = ħω/(e^{ħω/kT} - 1)`.
pub fn average_energy_planck(p: &ThermalParams) -> f64 {
    p.hbar_omega / (p.hbar_omega / p.kt).exp_m1()
}

/// Average over the bounded levels `Eₙ = n·ħω ≤ 2W`, weighted by the decay
/// family `f₁(Eₙ, s = 1/kT)`; converges to [`average_energy_planck`] as
/// `W → ∞`. The cost is linear in `2W/ħω`.
pub fn average_energy_bounded(p: &ThermalParams) -> Result<f64> {
    let w = p.bound.ok_or_else(|| {
        Error::DomainError("bounded statistics require the energy bound W".into())
    })?;
    let n_max = (2.0 * w / p.hbar_omega).floor() as u64;
    let mut weighted = 0.0;
    let mut total = 0.0;
    for n in 0..=n_max {
        let energy = n as f64 * p.hbar_omega;
        let ratio = energy / (2.0 * w);
        // a level landing exactly on the bound carries zero weight
        let weight = if ratio >= 1.0 {
            0.0
        } else {
            (-2.0 * w / p.kt * ratio.atanh()).exp()
        };
        weighted += energy * weight;
        total += weight;
    }
    Ok(weighted / total)
}

/// Fermi-type average: odd parity gives `ħω/(e^{ħω/kT} + 1)`, even parity
/// `-ħω/(e^{ħω/kT} - 1)`, which is negative by construction.
pub fn average_energy_fermi(p: &ThermalParams, parity: Parity) -> f64 {
    let x = p.hbar_omega / p.kt;
    match parity {
        Parity::Odd => p.hbar_omega / (x.exp() + 1.0),
        Parity::Even => -p.hbar_omega / x.exp_m1(),
    }
}

/// Dispatch the average-energy computation on the statistics choice.
pub fn average_energy(p: &ThermalParams, statistics: Statistics) -> Result<f64> {
    match statistics {
        Statistics::Planck => Ok(average_energy_planck(p)),
        Statistics::Bounded => average_energy_bounded(p),
        Statistics::FermiOdd => Ok(average_energy_fermi(p, Parity::Odd)),
        Statistics::FermiEven => Ok(average_energy_fermi(p, Parity::Even)),
    }
}

/// Spectral intensity `I(ω) = ⟨E⟩·ω²/(π²c²)`.
pub fn spectral_intensity(omega: f64, avg_energy: f64, c: LightSpeed) -> f64 {
    spectral_intensity_with_c_power(omega, avg_energy, c, 2)
}

/// Intensity with a configurable power of `c` in the prefactor denominator.
///
/// The default power 2 matches [`spectral_intensity`]; power 3 recovers the
/// textbook density-of-modes normalization `ω²/(π²c³)`.
pub fn spectral_intensity_with_c_power(
    omega: f64,
    avg_energy: f64,
    c: LightSpeed,
    power: i32,
) -> f64 {
    avg_energy * omega * omega / (std::f64::consts::PI.powi(2) * c.value().powi(power))
}

/// One spectrum row: frequency, average energy, intensity.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SpectralRow {
    pub omega: f64,
    pub avg_energy: f64,
    pub intensity: f64,
}

/// Spectrum rows at geometrically spaced frequencies for one statistics
/// choice; `omega` is strictly increasing.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectralSeries {
    statistics: Statistics,
    rows: Vec<SpectralRow>,
}

impl SpectralSeries {
    #[inline]
    pub fn statistics(&self) -> Statistics {
        self.statistics
    }

    #[inline]
    pub fn rows(&self) -> &[SpectralRow] {
        &self.rows
    }

    /// Row with the largest intensity (first on ties).
    pub fn peak(&self) -> Option<&SpectralRow> {
        self.rows
            .iter()
            .reduce(|best, row| if row.intensity > best.intensity { row } else { best })
    }

    /// CSV with header `omega,avg_energy,intensity` and 17 significant
    /// digits per field, enough to round-trip every double exactly.
    pub fn write_csv<W: Write>(&self, out: &mut W) -> io::Result<()> {
        writeln!(out, "omega,avg_energy,intensity")?;
        for row in &self.rows {
            writeln!(
                out,
                "{:.16e},{:.16e},{:.16e}",
                row.omega, row.avg_energy, row.intensity
            )?;
        }
        Ok(())
    }

    pub fn to_csv(&self) -> String {
        let mut buf = Vec::new();
        self.write_csv(&mut buf).expect("writing to a Vec cannot fail");
        String::from_utf8(buf).expect("CSV output is ASCII")
    }
}

/// Sweep `points` geometrically spaced frequencies in
/// `[omega_min, omega_max]` and tabulate the average energy and intensity at
/// thermal energy `kt`. The sweep identifies `ħω` with `ω` (natural units,
/// `ħ = 1`); `bound` feeds the bounded statistics.
pub fn spectrum_table(
    omega_min: f64,
    omega_max: f64,
    points: usize,
    kt: f64,
    statistics: Statistics,
    bound: Option<f64>,
    c: LightSpeed,
) -> Result<SpectralSeries> {
    if !(omega_min.is_finite() && omega_min > 0.0) || !omega_max.is_finite() {
        return Err(Error::DomainError(format!(
            "frequency range must be finite and positive, got [{omega_min}, {omega_max}]"
        )));
    }
    if omega_min >= omega_max {
        return Err(Error::DomainError(format!(
            "frequency range is empty: [{omega_min}, {omega_max}]"
        )));
    }
    if points == 0 {
        return Err(Error::DomainError("a sweep needs at least one point".into()));
    }
    let ratio = omega_max / omega_min;
    let mut rows = Vec::with_capacity(points);
    for i in 0..points {
        let omega = if points == 1 {
            omega_min
        } else {
            omega_min * ratio.powf(i as f64 / (points - 1) as f64)
        };
        let params = ThermalParams::new(omega, kt, bound)?;
        let avg_energy = average_energy(&params, statistics)?;
        rows.push(SpectralRow {
            omega,
            avg_energy,
            intensity: spectral_intensity(omega, avg_energy, c),
        });
    }
    Ok(SpectralSeries { statistics, rows })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn params(hw: f64, kt: f64) -> ThermalParams {
        ThermalParams::new(hw, kt, None).unwrap()
    }

    #[test]
    fn thermal_params_validation() {
        assert!(ThermalParams::new(0.0, 1.0, None).is_err());
        assert!(ThermalParams::new(1.0, 0.0, None).is_err());
        assert!(ThermalParams::new(1.0, 1.0, Some(0.4)).is_err()); // hw >= 2W
        assert!(ThermalParams::new(1.0, 1.0, Some(0.6)).is_ok());
    }

    #[test]
    fn planck_average_hand_values() {
        // ħω = kT: ⟨E⟩ = kT/(e - 1)
        assert_relative_eq!(
            average_energy_planck(&params(1.0, 1.0)),
            0.5819767068693264,
            max_relative = 1e-12
        );
        // ħω = 10 kT
        assert_relative_eq!(
            average_energy_planck(&params(10.0, 1.0)),
            4.540199100968777e-4,
            max_relative = 1e-12
        );
    }

    #[test]
    fn planck_equipartition_limit() {
        let avg = average_energy_planck(&params(1e-8, 1.0));
        assert_relative_eq!(avg, 1.0, max_relative = 1e-7);
    }

    #[test]
    fn bounded_average_two_level_case() {
        // W = 0.9, ħω = kT = 1: only n = 0, 1 survive the cutoff
        let p = ThermalParams::new(1.0, 1.0, Some(0.9)).unwrap();
        let avg = average_energy_bounded(&p).unwrap();
        assert_relative_eq!(avg, 0.2446252249407888, max_relative = 1e-12);
        // brute-force two-term oracle
        let w = 0.9_f64;
        let f1 = (-2.0 * w * (1.0 / (2.0 * w)).atanh()).exp();
        assert_relative_eq!(avg, f1 / (1.0 + f1), max_relative = 1e-13);
    }

    #[test]
    fn bounded_average_converges_to_planck() {
        let p = ThermalParams::new(1.0, 1.0, Some(1e3)).unwrap();
        let bounded = average_energy_bounded(&p).unwrap();
        let planck = average_energy_planck(&p);
        assert!((bounded - planck).abs() / planck < 1e-3);
    }

    #[test]
    fn bounded_average_freezes_out() {
        let p = ThermalParams::new(1.0, 1e-3, Some(100.0)).unwrap();
        assert!(average_energy_bounded(&p).unwrap() < 1e-300);
    }

    #[test]
    fn bounded_average_requires_bound() {
        assert!(matches!(
            average_energy_bounded(&params(1.0, 1.0)),
            Err(Error::DomainError(_))
        ));
    }

    #[test]
    fn fermi_average_hand_values() {
        assert_relative_eq!(
            average_energy_fermi(&params(1.0, 1.0), Parity::Odd),
            0.2689414213699951,
            max_relative = 1e-12
        );
        assert_relative_eq!(
            average_energy_fermi(&params(1.0, 1.0), Parity::Even),
            -0.5819767068693264,
            max_relative = 1e-12
        );
        // exponential suppression
        assert!(average_energy_fermi(&params(40.0, 1.0), Parity::Odd) < 1e-15);
        assert!(average_energy_fermi(&params(40.0, 1.0), Parity::Odd) > 0.0);
    }

    #[test]
    fn fermi_planck_reciprocal_gap() {
        // 1/⟨E⟩_odd - 1/⟨E⟩_planck = 2/ħω
        for &hw in &[0.2, 1.0, 3.7] {
            let p = params(hw, 1.3);
            let gap = 1.0 / average_energy_fermi(&p, Parity::Odd)
                - 1.0 / average_energy_planck(&p);
            assert_relative_eq!(gap, 2.0 / hw, max_relative = 1e-12);
        }
    }

    #[test]
    fn intensity_hand_values() {
        let c = LightSpeed::NATURAL;
        assert_eq!(spectral_intensity(5.0, 0.0, c), 0.0);
        assert_relative_eq!(
            spectral_intensity(1.0, 1.0, c),
            0.10132118364233778,
            max_relative = 1e-13
        );
        // ω² scaling
        let i1 = spectral_intensity(3.0, 0.7, c);
        let i2 = spectral_intensity(6.0, 0.7, c);
        assert_relative_eq!(i2, 4.0 * i1, max_relative = 1e-13);
        // c-power hook
        let c2 = LightSpeed::new(2.0).unwrap();
        let literal = spectral_intensity(1.0, 1.0, c2);
        let modes = spectral_intensity_with_c_power(1.0, 1.0, c2, 3);
        assert_relative_eq!(literal, 2.0 * modes, max_relative = 1e-13);
    }

    #[test]
    fn spectrum_geometric_midpoint() {
        let s = spectrum_table(1.0, 4.0, 3, 1.0, Statistics::Planck, None, LightSpeed::NATURAL)
            .unwrap();
        assert_eq!(s.rows().len(), 3);
        assert_eq!(s.rows()[0].omega, 1.0);
        assert_eq!(s.rows()[1].omega, 2.0);
        assert_eq!(s.rows()[2].omega, 4.0);
    }

    #[test]
    fn spectrum_single_point_reproduces_intensity() {
        let s = spectrum_table(2.0, 3.0, 1, 1.0, Statistics::Planck, None, LightSpeed::NATURAL)
            .unwrap();
        assert_eq!(s.rows().len(), 1);
        let row = s.rows()[0];
        assert_eq!(row.omega, 2.0);
        let avg = average_energy_planck(&params(2.0, 1.0));
        assert_eq!(row.avg_energy, avg);
        assert_eq!(
            row.intensity,
            spectral_intensity(2.0, avg, LightSpeed::NATURAL)
        );
    }

    #[test]
    fn spectrum_orders_and_signs() {
        let s = spectrum_table(
            0.5,
            20.0,
            64,
            1.0,
            Statistics::FermiEven,
            None,
            LightSpeed::NATURAL,
        )
        .unwrap();
        for pair in s.rows().windows(2) {
            assert!(pair[0].omega < pair[1].omega);
        }
        assert!(s.rows().iter().all(|r| r.intensity <= 0.0));
        let s = spectrum_table(
            0.5,
            20.0,
            64,
            1.0,
            Statistics::FermiOdd,
            None,
            LightSpeed::NATURAL,
        )
        .unwrap();
        assert!(s.rows().iter().all(|r| r.intensity >= 0.0));
    }

    #[test]
    fn bounded_sweep_tracks_planck_pointwise() {
        // W = 1e3 kT: within 0.1% of the Planck series for every hw <= 10 kT
        let kt = 1.0;
        let c = LightSpeed::NATURAL;
        let bounded =
            spectrum_table(0.5, 10.0, 24, kt, Statistics::Bounded, Some(1e3 * kt), c).unwrap();
        let planck = spectrum_table(0.5, 10.0, 24, kt, Statistics::Planck, None, c).unwrap();
        for (b, p) in bounded.rows().iter().zip(planck.rows()) {
            assert_eq!(b.omega, p.omega);
            assert!((b.avg_energy - p.avg_energy).abs() <= 1e-3 * p.avg_energy);
            assert!((b.intensity - p.intensity).abs() <= 1e-3 * p.intensity);
        }
    }

    #[test]
    fn spectrum_csv_round_trips() {
        let s = spectrum_table(0.7, 9.0, 5, 1.3, Statistics::Planck, None, LightSpeed::NATURAL)
            .unwrap();
        let csv = s.to_csv();
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("omega,avg_energy,intensity"));
        for (line, row) in lines.zip(s.rows()) {
            let fields: Vec<f64> = line.split(',').map(|f| f.parse().unwrap()).collect();
            assert_eq!(fields, vec![row.omega, row.avg_energy, row.intensity]);
        }
        // repeat runs are byte-identical
        assert_eq!(csv, s.to_csv());
    }

    #[test]
    fn spectrum_range_validation() {
        let c = LightSpeed::NATURAL;
        assert!(spectrum_table(0.0, 1.0, 4, 1.0, Statistics::Planck, None, c).is_err());
        assert!(spectrum_table(2.0, 1.0, 4, 1.0, Statistics::Planck, None, c).is_err());
        assert!(spectrum_table(1.0, 2.0, 0, 1.0, Statistics::Planck, None, c).is_err());
    }
}
