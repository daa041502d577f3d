//! Scalar velocity/slowness algebra.
//!
//! A velocity `v` and its slowness `v* = c²/v` are reciprocal images of one
//! another, with light the fixed point of the reciprocation. Velocities
//! compose through `u ⊕ v = (u + v)/(1 + uv/c²)`, slownesses through the dual
//! law `u* ⊕* v* = (c² + u*v*)/(u* + v*)`, and each law comes with a
//! compatible scaling `n ⊗ u` / `n ⊗* u*` built on powers of the base
//! `(c + u)/(c - u)`. The energy-transfer rates at the end of the module are
//! the same scalings applied to `E/T` with exponent `T/t`.

use crate::error::{Error, Result};

/// The light-speed constant a kinematic value is measured against.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LightSpeed(f64);

impl LightSpeed {
    /// Natural units, `c = 1`.
    pub const NATURAL: LightSpeed = LightSpeed(1.0);

    pub fn new(c: f64) -> Result<Self> {
        if c.is_finite() && c > 0.0 {
            Ok(LightSpeed(c))
        } else {
            Err(Error::DomainError(format!(
                "light speed must be finite and positive, got {c}"
            )))
        }
    }

    #[inline]
    pub fn value(self) -> f64 {
        self.0
    }

    #[inline]
    pub fn squared(self) -> f64 {
        self.0 * self.0
    }
}

impl Default for LightSpeed {
    fn default() -> Self {
        LightSpeed::NATURAL
    }
}

pub(crate) fn same_light_speed(a: LightSpeed, b: LightSpeed) -> Result<LightSpeed> {
    if a == b {
        Ok(a)
    } else {
        Err(Error::MismatchedLightSpeed {
            left: a.value(),
            right: b.value(),
        })
    }
}

/// A signed speed bounded by its light-speed constant, `|value| ≤ c`.
///
/// The boundary is permitted: light itself takes part in the algebra.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Velocity {
    value: f64,
    c: LightSpeed,
}

impl Velocity {
    pub fn new(value: f64, c: LightSpeed) -> Result<Self> {
        if value.is_nan() || value.abs() > c.value() {
            return Err(Error::DomainError(format!(
                "velocity {value} exceeds the light speed {}",
                c.value()
            )));
        }
        Ok(Velocity { value, c })
    }

    /// Velocity in natural units, `c = 1`.
    pub fn natural(value: f64) -> Result<Self> {
        Self::new(value, LightSpeed::NATURAL)
    }

    #[inline]
    pub fn value(self) -> f64 {
        self.value
    }

    #[inline]
    pub fn light_speed(self) -> LightSpeed {
        self.c
    }

    /// `c²/v`, the slowness image. Zero maps to the rest slowness `±∞`
    /// following the sign of the zero, and `±c` is a fixed point.
    pub fn reciprocate(self) -> Slowness {
        let c = self.c.value();
        let value = if self.value.abs() == c {
            self.value
        } else if self.value == 0.0 {
            f64::INFINITY.copysign(self.value)
        } else {
            self.c.squared() / self.value
        };
        Slowness { value, c: self.c }
    }
}

/// A signed slowness, `|value| ≥ c`, with `±∞` standing for the body at rest.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Slowness {
    value: f64,
    c: LightSpeed,
}

impl Slowness {
    pub fn new(value: f64, c: LightSpeed) -> Result<Self> {
        if value.is_nan() || (value.is_finite() && value.abs() < c.value()) {
            return Err(Error::DomainError(format!(
                "slowness {value} lies below the slowness of light {}",
                c.value()
            )));
        }
        Ok(Slowness { value, c })
    }

    /// Slowness in natural units, `c = 1`.
    pub fn natural(value: f64) -> Result<Self> {
        Self::new(value, LightSpeed::NATURAL)
    }

    /// The slowness of the body at rest, `+∞`.
    pub fn rest(c: LightSpeed) -> Self {
        Slowness {
            value: f64::INFINITY,
            c,
        }
    }

    #[inline]
    pub fn value(self) -> f64 {
        self.value
    }

    #[inline]
    pub fn light_speed(self) -> LightSpeed {
        self.c
    }

    #[inline]
    pub fn is_rest(self) -> bool {
        self.value.is_infinite()
    }

    /// `c²/v*`, the velocity image. `±∞` maps to a signed zero and `±c` is a
    /// fixed point.
    pub fn reciprocate(self) -> Velocity {
        let c = self.c.value();
        let value = if self.value.abs() == c {
            self.value
        } else if self.value.is_infinite() {
            0.0_f64.copysign(self.value)
        } else {
            self.c.squared() / self.value
        };
        Velocity { value, c: self.c }
    }
}

/// Compose two velocities: `u ⊕ v = (u + v)/(1 + uv/c²)`.
///
/// `±c` is absorbing (composing anything with light gives light exactly);
/// the opposite-light pair `(c, -c)` is a 0/0 form and is rejected.
pub fn add_velocity(u: Velocity, v: Velocity) -> Result<Velocity> {
    let c = same_light_speed(u.c, v.c)?;
    let cv = c.value();
    if u.value.abs() == cv && u.value == -v.value {
        return Err(Error::DegenerateSum(format!(
            "velocity pair ({}, {}) is a 0/0 form",
            u.value, v.value
        )));
    }
    if u.value.abs() == cv {
        return Ok(u);
    }
    if v.value.abs() == cv {
        return Ok(v);
    }
    let value = (u.value + v.value) / (1.0 + u.value * v.value / c.squared());
    // Stays within |value| <= c up to final rounding; constructed directly so
    // a sub-ulp overshoot at the boundary is not rejected.
    Ok(Velocity { value, c })
}

/// Compose two slownesses: `u* ⊕* v* = (c² + u*v*)/(u* + v*)`.
///
/// The rest slowness `±∞` is the identity, `±c` is absorbing, and the
/// mirror pair `u* = -v*` is a 0/0 form and is rejected.
pub fn add_slowness(u: Slowness, v: Slowness) -> Result<Slowness> {
    let c = same_light_speed(u.c, v.c)?;
    let cv = c.value();
    if u.value == -v.value {
        return Err(Error::DegenerateSum(format!(
            "slowness pair ({}, {}) is a 0/0 form",
            u.value, v.value
        )));
    }
    if u.value.is_infinite() {
        return Ok(v);
    }
    if v.value.is_infinite() {
        return Ok(u);
    }
    if u.value.abs() == cv {
        return Ok(u);
    }
    if v.value.abs() == cv {
        return Ok(v);
    }
    let value = (c.squared() + u.value * v.value) / (u.value + v.value);
    Ok(Slowness { value, c })
}

/// Scale a velocity: `n ⊗ u`, the n-fold composition extended to real n.
///
/// Evaluated as `c·tanh(n·atanh(u/c))`, the closed form of
/// `c·(rⁿ - 1)/(rⁿ + 1)` with `r = (c + u)/(c - u)`; the hyperbolic form
/// stays accurate where `rⁿ - 1` cancels. Distributes over ⊕ in both
/// arguments and tends to `n·u` as `u/c → 0`.
pub fn scale_velocity(n: f64, u: Velocity) -> Result<Velocity> {
    if n.is_nan() {
        return Err(Error::DomainError("scaling exponent is NaN".into()));
    }
    let cv = u.c.value();
    if u.value.abs() == cv {
        if n > 0.0 {
            return Ok(u);
        }
        return Err(Error::DomainError(format!(
            "cannot scale the light-speed velocity {} by the nonpositive exponent {n}",
            u.value
        )));
    }
    if n == 1.0 {
        return Ok(u);
    }
    if n == -1.0 {
        return Ok(Velocity {
            value: -u.value,
            c: u.c,
        });
    }
    let value = cv * (n * (u.value / cv).atanh()).tanh();
    Ok(Velocity { value, c: u.c })
}

/// Scale a slowness: `n ⊗* u*`, the reciprocal image of [`scale_velocity`].
///
/// Evaluated as `c/tanh(n·atanh(c/u*))`, the closed form of
/// `c·(qⁿ + 1)/(qⁿ - 1)` with `q = (u* + c)/(u* - c)`. Satisfies the duality
/// `n ⊗* (c²/u) = c²/(n ⊗ u)` and tends to `u*/n` as `c/u* → 0`.
pub fn scale_slowness(n: f64, u: Slowness) -> Result<Slowness> {
    if n.is_nan() {
        return Err(Error::DomainError("scaling exponent is NaN".into()));
    }
    if n == 0.0 {
        return Err(Error::DegenerateSum(
            "scaling a slowness by the exponent 0 is a 0/0 form".into(),
        ));
    }
    let cv = u.c.value();
    if u.value.abs() == cv {
        return Err(Error::DomainError(
            "a slowness on the light-speed boundary cannot be scaled".into(),
        ));
    }
    if n == 1.0 {
        return Ok(u);
    }
    if n == -1.0 {
        return Ok(Slowness {
            value: -u.value,
            c: u.c,
        });
    }
    let value = cv / (n * (cv / u.value).atanh()).tanh();
    Ok(Slowness { value, c: u.c })
}

/// Energy `E` transferred over an elapsed time `t`, measured against a
/// reference timescale `T` and the rate bound `c`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransferRate {
    energy: f64,
    elapsed: f64,
    scale: f64,
    c: LightSpeed,
}

impl TransferRate {
    pub fn new(energy: f64, elapsed: f64, scale: f64, c: LightSpeed) -> Result<Self> {
        if !energy.is_finite() {
            return Err(Error::DomainError(format!(
                "transferred energy must be finite, got {energy}"
            )));
        }
        if !(elapsed.is_finite() && elapsed > 0.0) {
            return Err(Error::DomainError(format!(
                "elapsed time must be finite and positive, got {elapsed}"
            )));
        }
        if !(scale.is_finite() && scale > 0.0) {
            return Err(Error::DomainError(format!(
                "timescale must be finite and positive, got {scale}"
            )));
        }
        Ok(TransferRate {
            energy,
            elapsed,
            scale,
            c,
        })
    }

    /// Transfer rate in natural units, `c = 1`.
    pub fn natural(energy: f64, elapsed: f64, scale: f64) -> Result<Self> {
        Self::new(energy, elapsed, scale, LightSpeed::NATURAL)
    }

    #[inline]
    pub fn energy(self) -> f64 {
        self.energy
    }

    #[inline]
    pub fn elapsed(self) -> f64 {
        self.elapsed
    }

    #[inline]
    pub fn scale(self) -> f64 {
        self.scale
    }

    #[inline]
    pub fn light_speed(self) -> LightSpeed {
        self.c
    }

    /// `E·t ≥ c·T²`, the slowness-side image of the rate bound `E/t ≤ c`.
    pub fn heisenberg_holds(self) -> bool {
        self.energy * self.elapsed >= self.c.value() * self.scale * self.scale
    }
}

/// Bounded rate of energy transfer, `y = (T/t) ⊗ (E/T)`.
///
/// Always satisfies `y ≤ c` and tends to the classical rate `E/t` as
/// `E/(cT) → 0`. Defined for `|E/T| < c`.
pub fn rate_of_transfer(r: TransferRate) -> Result<f64> {
    let cv = r.c.value();
    let ratio = r.energy / r.scale;
    if ratio.abs() >= cv {
        return Err(Error::DomainError(format!(
            "|E/T| = {} must lie below the rate bound {cv}",
            ratio.abs()
        )));
    }
    let n = r.scale / r.elapsed;
    if n == 1.0 {
        return Ok(ratio);
    }
    Ok(cv * (n * (ratio / cv).atanh()).tanh())
}

/// Rate of energy transfer in reciprocal space, `y* = (T/t) ⊗* (E/T)`.
///
/// Always satisfies `|y*| ≥ c` and tends to `E·t/T²` as `cT/E → 0`; combined
/// with the bound this is the inequality reported by
/// [`TransferRate::heisenberg_holds`]. Defined for `|E/T| > c`.
pub fn reciprocal_rate(r: TransferRate) -> Result<f64> {
    let cv = r.c.value();
    let ratio = r.energy / r.scale;
    if ratio.abs() <= cv {
        return Err(Error::DomainError(format!(
            "|E/T| = {} must lie above the rate bound {cv}",
            ratio.abs()
        )));
    }
    let n = r.scale / r.elapsed;
    if n == 1.0 {
        return Ok(ratio);
    }
    Ok(cv / (n * (cv / ratio).atanh()).tanh())
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn vel(v: f64) -> Velocity {
        Velocity::natural(v).unwrap()
    }

    fn slo(v: f64) -> Slowness {
        Slowness::natural(v).unwrap()
    }

    #[test]
    fn light_speed_rejects_nonpositive() {
        assert!(LightSpeed::new(0.0).is_err());
        assert!(LightSpeed::new(-1.0).is_err());
        assert!(LightSpeed::new(f64::INFINITY).is_err());
        assert!(LightSpeed::new(f64::NAN).is_err());
    }

    #[test]
    fn velocity_bounds_enforced() {
        assert!(Velocity::natural(1.0).is_ok());
        assert!(Velocity::natural(-1.0).is_ok());
        assert!(Velocity::natural(1.0 + 1e-9).is_err());
        assert!(Velocity::natural(f64::NAN).is_err());
        assert!(Slowness::natural(0.5).is_err());
        assert!(Slowness::natural(f64::INFINITY).is_ok());
    }

    #[test]
    fn reciprocate_half_c() {
        let s = vel(0.5).reciprocate();
        assert_eq!(s.value(), 2.0);
    }

    #[test]
    fn reciprocate_fixed_point_at_c() {
        assert_eq!(vel(1.0).reciprocate().value(), 1.0);
        assert_eq!(vel(-1.0).reciprocate().value(), -1.0);
        let c2 = LightSpeed::new(2.0).unwrap();
        let v = Velocity::new(2.0, c2).unwrap();
        assert_eq!(v.reciprocate().value(), 2.0);
    }

    #[test]
    fn reciprocate_rest_prescription() {
        assert_eq!(vel(0.0).reciprocate().value(), f64::INFINITY);
        assert_eq!(vel(-0.0).reciprocate().value(), f64::NEG_INFINITY);
        assert_eq!(slo(f64::INFINITY).reciprocate().value(), 0.0);
        assert!(slo(f64::NEG_INFINITY).reciprocate().value().is_sign_negative());
    }

    #[test]
    fn reciprocate_is_involutive() {
        for &v in &[0.0, 1e-6, 0.25, 0.5, 0.75, 1.0 - 1e-9, 1.0] {
            let back = vel(v).reciprocate().reciprocate().value();
            assert_relative_eq!(back, v, max_relative = 1e-12, epsilon = 1e-300);
            let back = vel(-v).reciprocate().reciprocate().value();
            assert_relative_eq!(back, -v, max_relative = 1e-12, epsilon = 1e-300);
        }
    }

    #[test]
    fn add_velocity_hand_values() {
        // (0.5c, 0.5c) -> 0.8c
        let w = add_velocity(vel(0.5), vel(0.5)).unwrap();
        assert_relative_eq!(w.value(), 0.8, max_relative = 1e-15);
        // identity element
        let w = add_velocity(vel(0.0), vel(0.7)).unwrap();
        assert_eq!(w.value(), 0.7);
        // light is absorbing
        let w = add_velocity(vel(1.0), vel(0.3)).unwrap();
        assert_eq!(w.value(), 1.0);
        let w = add_velocity(vel(0.3), vel(-1.0)).unwrap();
        assert_eq!(w.value(), -1.0);
    }

    #[test]
    fn add_velocity_degenerate_pair() {
        assert!(matches!(
            add_velocity(vel(1.0), vel(-1.0)),
            Err(Error::DegenerateSum(_))
        ));
        assert!(matches!(
            add_velocity(vel(-1.0), vel(1.0)),
            Err(Error::DegenerateSum(_))
        ));
        // same-signed light pair is fine: c + c = c
        assert_eq!(add_velocity(vel(1.0), vel(1.0)).unwrap().value(), 1.0);
    }

    #[test]
    fn add_velocity_rejects_mismatched_c() {
        let c2 = LightSpeed::new(2.0).unwrap();
        let u = Velocity::new(0.5, c2).unwrap();
        assert!(matches!(
            add_velocity(u, vel(0.5)),
            Err(Error::MismatchedLightSpeed { .. })
        ));
    }

    #[test]
    fn add_slowness_hand_values() {
        // (2c, 2c) -> 1.25c, the image of 0.5c + 0.5c = 0.8c
        let w = add_slowness(slo(2.0), slo(2.0)).unwrap();
        assert_relative_eq!(w.value(), 1.25, max_relative = 1e-15);
        // rest is the identity
        let w = add_slowness(Slowness::rest(LightSpeed::NATURAL), slo(3.0)).unwrap();
        assert_eq!(w.value(), 3.0);
        // light is a fixed point
        let w = add_slowness(slo(1.0), slo(1.0)).unwrap();
        assert_eq!(w.value(), 1.0);
    }

    #[test]
    fn add_slowness_degenerate_pair() {
        assert!(matches!(
            add_slowness(slo(2.0), slo(-2.0)),
            Err(Error::DegenerateSum(_))
        ));
        assert!(matches!(
            add_slowness(slo(f64::INFINITY), slo(f64::NEG_INFINITY)),
            Err(Error::DegenerateSum(_))
        ));
        // both at rest with the same sign stays at rest
        let w = add_slowness(slo(f64::INFINITY), slo(f64::INFINITY)).unwrap();
        assert_eq!(w.value(), f64::INFINITY);
    }

    #[test]
    fn add_slowness_closure() {
        let w = add_slowness(slo(1.5), slo(100.0)).unwrap();
        assert!(w.value().abs() >= 1.0);
        let w = add_slowness(slo(-3.0), slo(2.0)).unwrap();
        assert!(w.value().abs() >= 1.0);
    }

    #[test]
    fn scale_velocity_identity_and_doubling() {
        let u = vel(0.37);
        assert_eq!(scale_velocity(1.0, u).unwrap().value(), 0.37);
        // 2 ⊗ 0.5c must equal 0.5c ⊕ 0.5c
        let doubled = scale_velocity(2.0, vel(0.5)).unwrap();
        let summed = add_velocity(vel(0.5), vel(0.5)).unwrap();
        assert_relative_eq!(doubled.value(), summed.value(), max_relative = 1e-14);
        assert_relative_eq!(doubled.value(), 0.8, max_relative = 1e-14);
    }

    #[test]
    fn scale_velocity_small_argument_limit() {
        // 3 ⊗ 1e-9 c = 3e-9 c to relative 1e-15
        let z = scale_velocity(3.0, vel(1e-9)).unwrap();
        assert_relative_eq!(z.value(), 3e-9, max_relative = 1e-15);
    }

    #[test]
    fn scale_velocity_boundary_rules() {
        assert_eq!(scale_velocity(2.0, vel(1.0)).unwrap().value(), 1.0);
        assert_eq!(scale_velocity(0.5, vel(-1.0)).unwrap().value(), -1.0);
        assert!(matches!(
            scale_velocity(0.0, vel(1.0)),
            Err(Error::DomainError(_))
        ));
        assert!(matches!(
            scale_velocity(-1.0, vel(1.0)),
            Err(Error::DomainError(_))
        ));
        // zero exponent on an interior velocity is the identity element
        assert_eq!(scale_velocity(0.0, vel(0.9)).unwrap().value(), 0.0);
    }

    #[test]
    fn scale_slowness_hand_values() {
        let u = slo(7.5);
        assert_eq!(scale_slowness(1.0, u).unwrap().value(), 7.5);
        // 2 ⊗* 2c = 1.25c = 2c ⊕* 2c
        let doubled = scale_slowness(2.0, slo(2.0)).unwrap();
        assert_relative_eq!(doubled.value(), 1.25, max_relative = 1e-14);
        let summed = add_slowness(slo(2.0), slo(2.0)).unwrap();
        assert_relative_eq!(doubled.value(), summed.value(), max_relative = 1e-14);
    }

    #[test]
    fn scale_slowness_large_argument_limit() {
        // 2 ⊗* 1e6 c ≈ 5e5 c to relative 1e-6
        let z = scale_slowness(2.0, slo(1e6)).unwrap();
        assert_relative_eq!(z.value(), 5e5, max_relative = 1e-6);
    }

    #[test]
    fn scale_slowness_boundary_rules() {
        assert!(matches!(
            scale_slowness(2.0, slo(1.0)),
            Err(Error::DomainError(_))
        ));
        assert!(matches!(
            scale_slowness(0.0, slo(2.0)),
            Err(Error::DegenerateSum(_))
        ));
        // the rest slowness scales to itself for positive n, flipping with n's sign
        assert_eq!(
            scale_slowness(2.0, Slowness::rest(LightSpeed::NATURAL))
                .unwrap()
                .value(),
            f64::INFINITY
        );
        assert_eq!(
            scale_slowness(-2.0, Slowness::rest(LightSpeed::NATURAL))
                .unwrap()
                .value(),
            f64::NEG_INFINITY
        );
    }

    #[test]
    fn scale_duality() {
        // n ⊗* (c²/u) = c²/(n ⊗ u)
        for &u in &[0.1, 0.5, 0.9] {
            for &n in &[-3.0, -1.5, 0.5, 2.0, 7.0] {
                let lhs = scale_slowness(n, vel(u).reciprocate()).unwrap();
                let rhs = scale_velocity(n, vel(u)).unwrap().reciprocate();
                assert_relative_eq!(lhs.value(), rhs.value(), max_relative = 1e-10);
            }
        }
    }

    #[test]
    fn transfer_rate_validation() {
        assert!(TransferRate::natural(1.0, 1.0, 1.0).is_ok());
        assert!(TransferRate::natural(1.0, 0.0, 1.0).is_err());
        assert!(TransferRate::natural(1.0, 1.0, -2.0).is_err());
        assert!(TransferRate::natural(f64::INFINITY, 1.0, 1.0).is_err());
    }

    #[test]
    fn rate_n_equals_one_is_identity() {
        let r = TransferRate::natural(0.5, 2.0, 2.0).unwrap();
        assert_eq!(rate_of_transfer(r).unwrap(), 0.25);
        let r = TransferRate::natural(4.0, 2.0, 2.0).unwrap();
        assert_eq!(reciprocal_rate(r).unwrap(), 2.0);
    }

    #[test]
    fn rate_saturates_at_c() {
        let r = TransferRate::natural(2.0 * (1.0 - 1e-15), 1.0, 2.0).unwrap();
        let y = rate_of_transfer(r).unwrap();
        assert!(y <= 1.0);
        assert!(y > 1.0 - 1e-9);
    }

    #[test]
    fn rate_small_argument_limit() {
        // E = 1e-6 cT, t = T/2: y ≈ E/t = 2e-6 c to relative 1e-6
        let r = TransferRate::natural(1e-6, 0.5, 1.0).unwrap();
        let y = rate_of_transfer(r).unwrap();
        assert_relative_eq!(y, 2e-6, max_relative = 1e-6);
    }

    #[test]
    fn rate_domain_errors() {
        let r = TransferRate::natural(1.0, 1.0, 1.0).unwrap();
        assert!(matches!(rate_of_transfer(r), Err(Error::DomainError(_))));
        assert!(matches!(reciprocal_rate(r), Err(Error::DomainError(_))));
        let r = TransferRate::natural(0.5, 1.0, 1.0).unwrap();
        assert!(matches!(reciprocal_rate(r), Err(Error::DomainError(_))));
    }

    #[test]
    fn reciprocal_rate_large_argument() {
        // E = 1e6 cT, t = T: y* ≈ 1e6 c and Et ≥ cT²
        let r = TransferRate::natural(1e6, 1.0, 1.0).unwrap();
        let ys = reciprocal_rate(r).unwrap();
        assert_relative_eq!(ys, 1e6, max_relative = 1e-6);
        assert!(r.heisenberg_holds());
    }

    #[test]
    fn reciprocal_rate_stays_above_c() {
        for &ratio in &[1.0 + 1e-9, 1.1, 3.0, 1e3] {
            for &n in &[0.1, 0.9, 1.7, 40.0] {
                let r = TransferRate::natural(ratio, 1.0 / n, 1.0).unwrap();
                assert!(reciprocal_rate(r).unwrap() >= 1.0);
            }
        }
    }

    #[test]
    fn heisenberg_predicate_literal() {
        let r = TransferRate::natural(2.0, 1.0, 1.0).unwrap();
        assert!(r.heisenberg_holds()); // 2*1 >= 1*1
        let r = TransferRate::natural(2.0, 0.1, 1.0).unwrap();
        assert!(!r.heisenberg_holds()); // 0.2 < 1
    }
}
