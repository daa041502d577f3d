//! Complex 3-vector composition of velocities, rotation in reciprocity
//! space, and the reciprocal-vector construction.
//!
//! Dot and cross products are bilinear — no conjugation — which is what makes
//! the reciprocal relation `W·W̃ = c²` exact. Compositions couple both
//! products: `U +̂ V = (U + V + i·U×V/c²)/(1 + U·V/c²)`, with the difference
//! `U +̂ (-V)` the relative velocity of `U` against an observer `V`. The
//! cross-term scaling matches the scalar laws in natural units (`c = 1`),
//! where all the algebraic identities hold exactly.

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::scalar::{same_light_speed, LightSpeed};

const I: Complex64 = Complex64::new(0.0, 1.0);

/// 3-vector with complex components, measured against a light speed.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexVec3 {
    pub x: Complex64,
    pub y: Complex64,
    pub z: Complex64,
    c: LightSpeed,
}

impl ComplexVec3 {
    pub fn new(x: Complex64, y: Complex64, z: Complex64, c: LightSpeed) -> Self {
        ComplexVec3 { x, y, z, c }
    }

    pub fn from_real(x: f64, y: f64, z: f64, c: LightSpeed) -> Self {
        ComplexVec3 {
            x: Complex64::new(x, 0.0),
            y: Complex64::new(y, 0.0),
            z: Complex64::new(z, 0.0),
            c,
        }
    }

    pub fn zero(c: LightSpeed) -> Self {
        ComplexVec3::from_real(0.0, 0.0, 0.0, c)
    }

    #[inline]
    pub fn light_speed(&self) -> LightSpeed {
        self.c
    }

    /// Bilinear dot product `Σ aᵢbᵢ`, without conjugation.
    pub fn dot(&self, other: &Self) -> Complex64 {
        self.x * other.x + self.y * other.y + self.z * other.z
    }

    /// Formal determinant cross product.
    pub fn cross(&self, other: &Self) -> Self {
        ComplexVec3 {
            x: self.y * other.z - self.z * other.y,
            y: self.z * other.x - self.x * other.z,
            z: self.x * other.y - self.y * other.x,
            c: self.c,
        }
    }

    pub fn scaled(&self, k: Complex64) -> Self {
        ComplexVec3 {
            x: self.x * k,
            y: self.y * k,
            z: self.z * k,
            c: self.c,
        }
    }

    fn plus(&self, other: &Self) -> Self {
        ComplexVec3 {
            x: self.x + other.x,
            y: self.y + other.y,
            z: self.z + other.z,
            c: self.c,
        }
    }

    fn divided(&self, d: Complex64) -> Self {
        ComplexVec3 {
            x: self.x / d,
            y: self.y / d,
            z: self.z / d,
            c: self.c,
        }
    }

    /// Largest component magnitude.
    pub fn max_component_norm(&self) -> f64 {
        self.x.norm().max(self.y.norm()).max(self.z.norm())
    }

    /// Euclidean norm of the real parts; meaningful for real vectors.
    pub fn real_norm(&self) -> f64 {
        (self.x.re * self.x.re + self.y.re * self.y.re + self.z.re * self.z.re).sqrt()
    }
}

impl std::ops::Neg for ComplexVec3 {
    type Output = ComplexVec3;

    fn neg(self) -> ComplexVec3 {
        self.scaled(Complex64::new(-1.0, 0.0))
    }
}

/// Whether [`compose`] forms the sum `U +̂ V` or the relative velocity
/// `U +̂ (-V)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComposeSign {
    Sum,
    Difference,
}

/// Reciprocal-symmetric composition
/// `U +̂ (±V) = (U ± V ± i·U×V/c²)/(1 ± U·V/c²)`.
///
/// Collinear real inputs reduce to the scalar velocity law. The denominator
/// vanishing exactly is a 0/0 form and is rejected.
pub fn compose(u: &ComplexVec3, v: &ComplexVec3, sign: ComposeSign) -> Result<ComplexVec3> {
    let c = same_light_speed(u.light_speed(), v.light_speed())?;
    let c2 = c.squared();
    let s = match sign {
        ComposeSign::Sum => 1.0,
        ComposeSign::Difference => -1.0,
    };
    let numerator = u
        .plus(&v.scaled(s.into()))
        .plus(&u.cross(v).scaled(I * s / c2));
    let denominator = Complex64::new(1.0, 0.0) + u.dot(v) * s / c2;
    if denominator == Complex64::new(0.0, 0.0) {
        return Err(Error::DegenerateSum(
            "vector composition denominator vanished".into(),
        ));
    }
    Ok(numerator.divided(denominator))
}

/// Rotation of a composed velocity in reciprocity space: a real unit axis
/// and an angle, with `|r| = 1` to within 1e-12.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReciprocityRotation {
    axis: [f64; 3],
    angle: f64,
}

impl ReciprocityRotation {
    pub fn new(axis: [f64; 3], angle: f64) -> Result<Self> {
        if !angle.is_finite() {
            return Err(Error::DomainError(format!(
                "rotation angle must be finite, got {angle}"
            )));
        }
        let norm = (axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]).sqrt();
        if !norm.is_finite() || (norm - 1.0).abs() > 1e-12 {
            return Err(Error::DomainError(format!(
                "rotation axis must be a unit vector, |r| = {norm}"
            )));
        }
        Ok(ReciprocityRotation { axis, angle })
    }

    /// Normalize a nonzero axis before constructing.
    pub fn normalized(axis: [f64; 3], angle: f64) -> Result<Self> {
        let norm = (axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2]).sqrt();
        if !(norm.is_finite() && norm > 0.0) {
            return Err(Error::DomainError(
                "rotation axis must be nonzero and finite".into(),
            ));
        }
        Self::new([axis[0] / norm, axis[1] / norm, axis[2] / norm], angle)
    }

    #[inline]
    pub fn axis(&self) -> [f64; 3] {
        self.axis
    }

    #[inline]
    pub fn angle(&self) -> f64 {
        self.angle
    }
}

fn axis_vec(axis: [f64; 3], c: LightSpeed) -> ComplexVec3 {
    ComplexVec3::from_real(axis[0], axis[1], axis[2], c)
}

/// Rotate `W` through `φ` about the axis `r`:
/// `W̃ = (W + (i·r - W×r/c²)·tan(φ/2)) / (1 + i·(W·r)/c²·tan(φ/2))`.
///
/// `φ = 0` returns `W` unchanged; `|φ| = π`, where `tan(φ/2)` is singular,
/// dispatches to the closed form [`reciprocal_vector`].
pub fn rotate_reciprocity(w: &ComplexVec3, rotation: &ReciprocityRotation) -> Result<ComplexVec3> {
    if rotation.angle == 0.0 {
        return Ok(*w);
    }
    if rotation.angle.abs() == std::f64::consts::PI {
        return reciprocal_vector(w, rotation.axis);
    }
    let c2 = w.light_speed().squared();
    let r = axis_vec(rotation.axis, w.light_speed());
    let t = (rotation.angle / 2.0).tan();
    let numerator = w.plus(
        &r.scaled(I)
            .plus(&w.cross(&r).scaled((-1.0 / c2).into()))
            .scaled(t.into()),
    );
    let denominator = Complex64::new(1.0, 0.0) + I * w.dot(&r) / c2 * t;
    if denominator == Complex64::new(0.0, 0.0) {
        return Err(Error::DegenerateSum(
            "reciprocity rotation denominator vanished".into(),
        ));
    }
    Ok(numerator.divided(denominator))
}

/// The `φ → π` limit of the rotation:
/// `W̃ = (i·r - W×r/c²)/(i·(W·r)/c²)`.
///
/// Under the bilinear dot product the cross term is orthogonal to `W`, so
/// `W·W̃ = c²` exactly. Requires `W·r ≠ 0`.
pub fn reciprocal_vector(w: &ComplexVec3, axis: [f64; 3]) -> Result<ComplexVec3> {
    let c2 = w.light_speed().squared();
    let r = axis_vec(axis, w.light_speed());
    let d = w.dot(&r);
    if d == Complex64::new(0.0, 0.0) {
        return Err(Error::DegenerateSum(
            "rotation axis is orthogonal to the vector".into(),
        ));
    }
    let numerator = r.scaled(I).plus(&w.cross(&r).scaled((-1.0 / c2).into()));
    Ok(numerator.divided(I * d / c2))
}

/// Compose the rotated inputs: the relative velocity at `φ = 0` and the
/// relative slowness at `φ = π`.
pub fn general_compose(
    u: &ComplexVec3,
    v: &ComplexVec3,
    rotation: &ReciprocityRotation,
) -> Result<ComplexVec3> {
    let ut = rotate_reciprocity(u, rotation)?;
    let vt = rotate_reciprocity(v, rotation)?;
    compose(&ut, &vt, ComposeSign::Difference)
}

/// Largest componentwise gap between `(U +̂ V) +̂ Y` and `U +̂ (V +̂ Y)`,
/// relative to the larger grouping's component scale.
pub fn associativity_residual(
    u: &ComplexVec3,
    v: &ComplexVec3,
    y: &ComplexVec3,
) -> Result<f64> {
    let left = compose(&compose(u, v, ComposeSign::Sum)?, y, ComposeSign::Sum)?;
    let right = compose(u, &compose(v, y, ComposeSign::Sum)?, ComposeSign::Sum)?;
    let gap = (left.x - right.x)
        .norm()
        .max((left.y - right.y).norm())
        .max((left.z - right.z).norm());
    let scale = left.max_component_norm().max(right.max_component_norm());
    Ok(if scale == 0.0 { gap } else { gap / scale })
}
