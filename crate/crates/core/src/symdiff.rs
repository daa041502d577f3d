//! Reflection-symmetric finite differences and their exact solution families.
//!
//! The central difference `(f(x+δ) - f(x-δ))/(2δ)` is invariant under
//! `δ → -δ`. Two families solve first-order equations built from it exactly
//! on the grid: a bounded decay pair `f₁`/`f₂` whose eigenvalue is the
//! effective energy `Ē = E/(1 - (E/2W)²)`, and a discrete oscillator pair
//! `g₁`/`g₂` with a unit-modulus base. Both collapse to the classical
//! exponentials as the step vanishes.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

/// Arithmetic grid `origin + k·step` for `k = 0..count`.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricGrid {
    step: f64,
    origin: f64,
    count: usize,
}

impl SymmetricGrid {
    pub fn new(step: f64, origin: f64, count: usize) -> Result<Self> {
        if !(step.is_finite() && step > 0.0) {
            return Err(Error::DomainError(format!(
                "grid step must be finite and positive, got {step}"
            )));
        }
        if !origin.is_finite() {
            return Err(Error::DomainError(format!(
                "grid origin must be finite, got {origin}"
            )));
        }
        if count == 0 {
            return Err(Error::DomainError("grid needs at least one point".into()));
        }
        Ok(SymmetricGrid {
            step,
            origin,
            count,
        })
    }

    #[inline]
    pub fn step(&self) -> f64 {
        self.step
    }

    #[inline]
    pub fn origin(&self) -> f64 {
        self.origin
    }

    #[inline]
    pub fn count(&self) -> usize {
        self.count
    }

    #[inline]
    pub fn point(&self, k: usize) -> f64 {
        self.origin + k as f64 * self.step
    }

    pub fn points(&self) -> impl Iterator<Item = f64> + '_ {
        (0..self.count).map(|k| self.point(k))
    }
}

/// Complex samples of a function on a [`SymmetricGrid`].
#[derive(Debug, Clone, PartialEq)]
pub struct GridFunction {
    grid: SymmetricGrid,
    values: Vec<Complex64>,
}

impl GridFunction {
    pub fn new(grid: SymmetricGrid, values: Vec<Complex64>) -> Result<Self> {
        if values.len() != grid.count() {
            return Err(Error::DomainError(format!(
                "{} values do not fill a grid with {} points",
                values.len(),
                grid.count()
            )));
        }
        Ok(GridFunction { grid, values })
    }

    /// Sample a function at every grid point.
    pub fn sample<F: FnMut(f64) -> Complex64>(grid: SymmetricGrid, mut f: F) -> Self {
        let values = grid.points().map(&mut f).collect();
        GridFunction { grid, values }
    }

    #[inline]
    pub fn grid(&self) -> &SymmetricGrid {
        &self.grid
    }

    #[inline]
    pub fn values(&self) -> &[Complex64] {
        &self.values
    }

    /// Central difference `(f[k+1] - f[k-1])/(2δ)` at the interior index `k`.
    pub fn symmetric_difference(&self, k: usize) -> Result<Complex64> {
        if k == 0 || k + 1 >= self.grid.count() {
            return Err(Error::IndexError {
                index: k,
                count: self.grid.count(),
            });
        }
        Ok((self.values[k + 1] - self.values[k - 1]) / (2.0 * self.grid.step()))
    }
}

/// Parameters of the bounded decay family: level energy `E`, bound `W`
/// confining the levels to `|E| < 2W`, and normalization `A`. The natural
/// grid step is `δ = 1/W`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundedDecayParams {
    energy: f64,
    bound: f64,
    amplitude: f64,
}

impl BoundedDecayParams {
    pub fn new(energy: f64, bound: f64, amplitude: f64) -> Result<Self> {
        if !(bound.is_finite() && bound > 0.0) {
            return Err(Error::DomainError(format!(
                "energy bound must be finite and positive, got {bound}"
            )));
        }
        if !energy.is_finite() || !amplitude.is_finite() {
            return Err(Error::DomainError(
                "energy and normalization must be finite".into(),
            ));
        }
        if energy.abs() >= 2.0 * bound {
            return Err(Error::DomainError(format!(
                "|E| = {} must lie strictly below the bound 2W = {}",
                energy.abs(),
                2.0 * bound
            )));
        }
        Ok(BoundedDecayParams {
            energy,
            bound,
            amplitude,
        })
    }

    #[inline]
    pub fn energy(&self) -> f64 {
        self.energy
    }

    #[inline]
    pub fn bound(&self) -> f64 {
        self.bound
    }

    #[inline]
    pub fn amplitude(&self) -> f64 {
        self.amplitude
    }

    /// `δ = 1/W`.
    #[inline]
    pub fn step(&self) -> f64 {
        1.0 / self.bound
    }

    /// Decaying solution `f₁(s) = A·((1 - E/2W)/(1 + E/2W))^{W·s}`.
    ///
    /// Evaluated as `A·exp(-2·W·s·atanh(E/2W))`, which keeps full precision
    /// for large `W` and reduces to `A·e^{-E·s}` as `W → ∞`.
    pub fn f1(&self, s: f64) -> f64 {
        let e = self.energy / (2.0 * self.bound);
        self.amplitude * (-2.0 * self.bound * s * e.atanh()).exp()
    }

    /// Companion solution with the argument sent to its reciprocal,
    /// `E/2W → -2W/E`: `f₂(s) = A·((1 + 2W/E)/(1 - 2W/E))^{W·s}`.
    ///
    /// The base is negative, so off the integer grid the principal branch
    /// makes the value complex; on the grid it alternates in sign. Undefined
    /// at `E = 0`.
    pub fn f2(&self, s: f64) -> Result<Complex64> {
        if self.energy == 0.0 {
            return Err(Error::DomainError(
                "the reciprocal-argument solution is undefined at E = 0".into(),
            ));
        }
        let e = self.energy / (2.0 * self.bound);
        let p = self.bound * s;
        let magnitude = (2.0 * p * e.atanh()).exp();
        let phase = PI * p;
        Ok(self.amplitude * magnitude * Complex64::new(phase.cos(), phase.sin()))
    }

    /// The same companion written on the positive base
    /// `(1 + Eδ/2)/(1 - Eδ/2)`.
    ///
    /// Agrees with [`Self::f2`] whenever `s/δ` is an even integer and differs
    /// by the alternating factor `(-1)^{s/δ}` on odd integers.
    pub fn f2_alt(&self, s: f64) -> f64 {
        let e = self.energy / (2.0 * self.bound);
        self.amplitude * (2.0 * self.bound * s * e.atanh()).exp()
    }

    /// Effective eigenvalue `Ē = E/(1 - (E/2W)²)` produced by the central
    /// difference acting on `f₁`.
    pub fn effective_energy(&self) -> f64 {
        let e = self.energy / (2.0 * self.bound);
        self.energy / (1.0 - e * e)
    }

    /// Both solutions and the eigenvalue at once: `(f₁, f₂, Ē)`.
    pub fn solutions(&self, s: f64) -> Result<(f64, Complex64, f64)> {
        Ok((self.f1(s), self.f2(s)?, self.effective_energy()))
    }
}

/// Sign of `i·w` in the discrete oscillator equation `Dg/Dt = ±i·w·g`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OscillatorSign {
    Plus,
    Minus,
}

impl OscillatorSign {
    #[inline]
    fn signum(self) -> f64 {
        match self {
            OscillatorSign::Plus => 1.0,
            OscillatorSign::Minus => -1.0,
        }
    }
}

/// Discrete oscillator: angular frequency `w`, time step `δ` with
/// `|wδ| < 1`, complex normalization `A`, and the equation sign.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OscillatorParams {
    omega: f64,
    step: f64,
    amplitude: Complex64,
    sign: OscillatorSign,
}

impl OscillatorParams {
    pub fn new(omega: f64, step: f64, amplitude: Complex64, sign: OscillatorSign) -> Result<Self> {
        if !(omega.is_finite() && omega > 0.0) {
            return Err(Error::DomainError(format!(
                "angular frequency must be finite and positive, got {omega}"
            )));
        }
        if !(step.is_finite() && step > 0.0) {
            return Err(Error::DomainError(format!(
                "time step must be finite and positive, got {step}"
            )));
        }
        if !(amplitude.re.is_finite() && amplitude.im.is_finite()) {
            return Err(Error::DomainError("normalization must be finite".into()));
        }
        if omega * step >= 1.0 {
            return Err(Error::DomainError(format!(
                "wδ = {} must lie strictly below 1",
                omega * step
            )));
        }
        Ok(OscillatorParams {
            omega,
            step,
            amplitude,
            sign,
        })
    }

    #[inline]
    pub fn omega(&self) -> f64 {
        self.omega
    }

    #[inline]
    pub fn step(&self) -> f64 {
        self.step
    }

    #[inline]
    pub fn amplitude(&self) -> Complex64 {
        self.amplitude
    }

    #[inline]
    pub fn sign(&self) -> OscillatorSign {
        self.sign
    }

    /// Half-angle ratio `q = (1 - √(1 - w²δ²))/(wδ)`, evaluated in the
    /// cancellation-free form `wδ/(1 + √(1 - w²δ²))`.
    pub fn half_angle_ratio(&self) -> f64 {
        let x = self.omega * self.step;
        x / (1.0 + (1.0 - x * x).sqrt())
    }

    /// Phase advance per step, `2·atan(q)`; satisfies `sin` of it `= wδ`.
    fn phase_step(&self) -> f64 {
        2.0 * self.half_angle_ratio().atan()
    }

    /// The two exact solutions at time `t`.
    ///
    /// With `q` the half-angle ratio, `g₁ = A·((1 - iq)/(1 + iq))^{t/δ}` for
    /// the minus equation (and its conjugate base for plus), tending to
    /// `A·e^{±iwt}` as `δ → 0`; `g₂` carries the opposite base. The base has
    /// unit modulus, so `|g₁| = |g₂| = |A|` everywhere.
    pub fn solutions(&self, t: f64) -> (Complex64, Complex64) {
        let phase = self.sign.signum() * self.phase_step() * (t / self.step);
        let rotation = Complex64::new(phase.cos(), phase.sin());
        (self.amplitude * rotation, self.amplitude * rotation.conj())
    }

    /// First solution; tends to the classical `A·e^{±iwt}` as `δ → 0`.
    pub fn g1(&self, t: f64) -> Complex64 {
        self.solutions(t).0
    }

    /// Companion solution with the reciprocated base.
    pub fn g2(&self, t: f64) -> Complex64 {
        self.solutions(t).1
    }
}

/// Effective frequency of the companion branch `n`: `w' = (2n+1)π/δ + w`.
///
/// `step` must be positive.
pub fn effective_frequency(n: i64, step: f64, omega: f64) -> f64 {
    debug_assert!(step > 0.0);
    (2 * n + 1) as f64 * PI / step + omega
}

/// Decomposition of `(w')²` into square-well, half-integral cross, and
/// harmonic parts.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EnergyTerms {
    /// `((2n+1)π/δ)²`, the free-particle (square-well) part.
    pub square_well: f64,
    /// `2·(2n+1)·(π/δ)·w`, carrying the half-integral multiples of `w`.
    pub cross: f64,
    /// `w²`.
    pub harmonic: f64,
}

impl EnergyTerms {
    pub fn total(&self) -> f64 {
        self.square_well + self.cross + self.harmonic
    }
}

/// Split the squared effective frequency of branch `n` into its three terms;
/// the sum equals `effective_frequency(n, step, omega)²`.
pub fn oscillator_energy_terms(n: i64, step: f64, omega: f64) -> EnergyTerms {
    debug_assert!(step > 0.0);
    let y = (2 * n + 1) as f64 * PI / step;
    EnergyTerms {
        square_well: y * y,
        cross: 2.0 * y * omega,
        harmonic: omega * omega,
    }
}

/// Energy of level `n ≥ 1` of a free particle oscillating between reflecting
/// walls of half-width `a`: `E = ½·m·(a·n·π/δ)²`.
pub fn well_energy(n: u32, mass: f64, half_width: f64, step: f64) -> Result<f64> {
    if n == 0 {
        return Err(Error::DomainError(
            "level index must be positive; n = 0 is the trivial solution".into(),
        ));
    }
    if !(mass.is_finite() && mass > 0.0)
        || !(half_width.is_finite() && half_width > 0.0)
        || !(step.is_finite() && step > 0.0)
    {
        return Err(Error::DomainError(
            "mass, half-width and step must be finite and positive".into(),
        ));
    }
    let y = half_width * n as f64 * PI / step;
    Ok(0.5 * mass * y * y)
}
