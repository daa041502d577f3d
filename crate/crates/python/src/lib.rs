//! Python bindings for the reciprocal-symmetric kinematics library.
//!
//! Scalar operations take and return floats; vector operations use
//! 3-tuples of Python complex numbers. Domain violations raise `ValueError`
//! carrying the library's error name.

use std::collections::BTreeMap;

use num_complex::Complex64;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use recipro_core::radiation as rad;
use recipro_core::scalar;
use recipro_core::symdiff;
use recipro_core::vector;
use recipro_core::verify;
use recipro_core::{Error, LightSpeed};

fn to_py_err(e: Error) -> PyErr {
    PyValueError::new_err(format!("{}: {e}", e.name()))
}

fn light_speed(c: f64) -> PyResult<LightSpeed> {
    LightSpeed::new(c).map_err(to_py_err)
}

type Triple = (Complex64, Complex64, Complex64);

fn vec_from(t: Triple, c: LightSpeed) -> vector::ComplexVec3 {
    vector::ComplexVec3::new(t.0, t.1, t.2, c)
}

fn vec_into(v: vector::ComplexVec3) -> Triple {
    (v.x, v.y, v.z)
}

// --- scalar algebra ---------------------------------------------------------

/// Reciprocate a velocity into the matching slowness, `c^2/v`.
#[pyfunction]
#[pyo3(signature = (value, c = 1.0))]
fn reciprocate_velocity(value: f64, c: f64) -> PyResult<f64> {
    let c = light_speed(c)?;
    let v = scalar::Velocity::new(value, c).map_err(to_py_err)?;
    Ok(v.reciprocate().value())
}

/// Reciprocate a slowness into the matching velocity, `c^2/v*`.
#[pyfunction]
#[pyo3(signature = (value, c = 1.0))]
fn reciprocate_slowness(value: f64, c: f64) -> PyResult<f64> {
    let c = light_speed(c)?;
    let v = scalar::Slowness::new(value, c).map_err(to_py_err)?;
    Ok(v.reciprocate().value())
}

/// Velocity composition `(u + v)/(1 + u*v/c^2)`.
#[pyfunction]
#[pyo3(signature = (u, v, c = 1.0))]
fn add_velocity(u: f64, v: f64, c: f64) -> PyResult<f64> {
    let c = light_speed(c)?;
    let u = scalar::Velocity::new(u, c).map_err(to_py_err)?;
    let v = scalar::Velocity::new(v, c).map_err(to_py_err)?;
    Ok(scalar::add_velocity(u, v).map_err(to_py_err)?.value())
}

/// Slowness composition `(c^2 + u*v)/(u + v)`.
#[pyfunction]
#[pyo3(signature = (u, v, c = 1.0))]
fn add_slowness(u: f64, v: f64, c: f64) -> PyResult<f64> {
    let c = light_speed(c)?;
    let u = scalar::Slowness::new(u, c).map_err(to_py_err)?;
    let v = scalar::Slowness::new(v, c).map_err(to_py_err)?;
    Ok(scalar::add_slowness(u, v).map_err(to_py_err)?.value())
}

/// Velocity scaling `n (x) u = c*tanh(n*atanh(u/c))`.
#[pyfunction]
#[pyo3(signature = (n, u, c = 1.0))]
fn scale_velocity(n: f64, u: f64, c: f64) -> PyResult<f64> {
    let c = light_speed(c)?;
    let u = scalar::Velocity::new(u, c).map_err(to_py_err)?;
    Ok(scalar::scale_velocity(n, u).map_err(to_py_err)?.value())
}

/// Slowness scaling `n (x)* u* = c/tanh(n*atanh(c/u*))`.
#[pyfunction]
#[pyo3(signature = (n, u, c = 1.0))]
fn scale_slowness(n: f64, u: f64, c: f64) -> PyResult<f64> {
    let c = light_speed(c)?;
    let u = scalar::Slowness::new(u, c).map_err(to_py_err)?;
    Ok(scalar::scale_slowness(n, u).map_err(to_py_err)?.value())
}

/// Bounded transfer rate `y = (T/t) (x) (E/T) <= c`.
#[pyfunction]
#[pyo3(signature = (energy, elapsed, scale, c = 1.0))]
fn rate_of_transfer(energy: f64, elapsed: f64, scale: f64, c: f64) -> PyResult<f64> {
    let c = light_speed(c)?;
    let r = scalar::TransferRate::new(energy, elapsed, scale, c).map_err(to_py_err)?;
    scalar::rate_of_transfer(r).map_err(to_py_err)
}

/// Reciprocal-space transfer rate `y* = (T/t) (x)* (E/T) >= c`.
#[pyfunction]
#[pyo3(signature = (energy, elapsed, scale, c = 1.0))]
fn reciprocal_rate(energy: f64, elapsed: f64, scale: f64, c: f64) -> PyResult<f64> {
    let c = light_speed(c)?;
    let r = scalar::TransferRate::new(energy, elapsed, scale, c).map_err(to_py_err)?;
    scalar::reciprocal_rate(r).map_err(to_py_err)
}

/// The predicate `E*t >= c*T^2`.
#[pyfunction]
#[pyo3(signature = (energy, elapsed, scale, c = 1.0))]
fn heisenberg_holds(energy: f64, elapsed: f64, scale: f64, c: f64) -> PyResult<bool> {
    let c = light_speed(c)?;
    let r = scalar::TransferRate::new(energy, elapsed, scale, c).map_err(to_py_err)?;
    Ok(r.heisenberg_holds())
}

// --- symmetric difference ----------------------------------------------------

/// Central difference `(values[k+1] - values[k-1])/(2*step)`.
#[pyfunction]
fn symmetric_difference(values: Vec<Complex64>, step: f64, k: usize) -> PyResult<Complex64> {
    let grid = symdiff::SymmetricGrid::new(step, 0.0, values.len()).map_err(to_py_err)?;
    let f = symdiff::GridFunction::new(grid, values).map_err(to_py_err)?;
    f.symmetric_difference(k).map_err(to_py_err)
}

/// Bounded decay family: `f1`, the complex companion `f2`, and the effective
/// energy the central difference produces on them.
#[pyclass]
struct BoundedDecay {
    params: symdiff::BoundedDecayParams,
}

#[pymethods]
impl BoundedDecay {
    #[new]
    #[pyo3(signature = (energy, bound, amplitude = 1.0))]
    fn new(energy: f64, bound: f64, amplitude: f64) -> PyResult<Self> {
        Ok(BoundedDecay {
            params: symdiff::BoundedDecayParams::new(energy, bound, amplitude)
                .map_err(to_py_err)?,
        })
    }

    /// Natural grid step `1/W`.
    fn step(&self) -> f64 {
        self.params.step()
    }

    fn f1(&self, s: f64) -> f64 {
        self.params.f1(s)
    }

    fn f2(&self, s: f64) -> PyResult<Complex64> {
        self.params.f2(s).map_err(to_py_err)
    }

    fn f2_alt(&self, s: f64) -> f64 {
        self.params.f2_alt(s)
    }

    fn effective_energy(&self) -> f64 {
        self.params.effective_energy()
    }
}

/// Discrete oscillator solutions with unit-modulus base.
#[pyclass]
struct Oscillator {
    params: symdiff::OscillatorParams,
}

#[pymethods]
impl Oscillator {
    #[new]
    #[pyo3(signature = (omega, step, amplitude = Complex64::new(1.0, 0.0), sign = -1))]
    fn new(omega: f64, step: f64, amplitude: Complex64, sign: i32) -> PyResult<Self> {
        let sign = match sign {
            1 => symdiff::OscillatorSign::Plus,
            -1 => symdiff::OscillatorSign::Minus,
            other => {
                return Err(PyValueError::new_err(format!(
                    "sign must be +1 or -1, got {other}"
                )))
            }
        };
        Ok(Oscillator {
            params: symdiff::OscillatorParams::new(omega, step, amplitude, sign)
                .map_err(to_py_err)?,
        })
    }

    fn g1(&self, t: f64) -> Complex64 {
        self.params.g1(t)
    }

    fn g2(&self, t: f64) -> Complex64 {
        self.params.g2(t)
    }

    fn half_angle_ratio(&self) -> f64 {
        self.params.half_angle_ratio()
    }
}

/// Effective frequency `(2n+1)*pi/step + omega` of the companion branch.
#[pyfunction]
fn effective_frequency(n: i64, step: f64, omega: f64) -> f64 {
    symdiff::effective_frequency(n, step, omega)
}

/// Decomposition of the squared effective frequency:
/// `(square_well, cross, harmonic)`.
#[pyfunction]
fn oscillator_energy_terms(n: i64, step: f64, omega: f64) -> (f64, f64, f64) {
    let t = symdiff::oscillator_energy_terms(n, step, omega);
    (t.square_well, t.cross, t.harmonic)
}

/// Square-well level energy `0.5*m*(a*n*pi/step)^2`.
#[pyfunction]
fn well_energy(n: u32, mass: f64, half_width: f64, step: f64) -> PyResult<f64> {
    symdiff::well_energy(n, mass, half_width, step).map_err(to_py_err)
}

// --- radiation ----------------------------------------------------------------

fn parse_statistics(name: &str) -> PyResult<rad::Statistics> {
    match name {
        "planck" => Ok(rad::Statistics::Planck),
        "bounded" => Ok(rad::Statistics::Bounded),
        "fermi-odd" => Ok(rad::Statistics::FermiOdd),
        "fermi-even" => Ok(rad::Statistics::FermiEven),
        other => Err(PyValueError::new_err(format!(
            "unknown statistics {other:?}; expected planck, bounded, fermi-odd or fermi-even"
        ))),
    }
}

/// Planck average `hw/(exp(hw/kT) - 1)`.
#[pyfunction]
fn average_energy_planck(hbar_omega: f64, kt: f64) -> PyResult<f64> {
    let p = rad::ThermalParams::new(hbar_omega, kt, None).map_err(to_py_err)?;
    Ok(rad::average_energy_planck(&p))
}

/// Average over the levels cut off at `2*bound`, weighted by the decay family.
#[pyfunction]
fn average_energy_bounded(hbar_omega: f64, kt: f64, bound: f64) -> PyResult<f64> {
    let p = rad::ThermalParams::new(hbar_omega, kt, Some(bound)).map_err(to_py_err)?;
    rad::average_energy_bounded(&p).map_err(to_py_err)
}

/// Fermi-type average; `parity` is `"odd"` or `"even"`.
#[pyfunction]
fn average_energy_fermi(hbar_omega: f64, kt: f64, parity: &str) -> PyResult<f64> {
    let parity = match parity {
        "odd" => rad::Parity::Odd,
        "even" => rad::Parity::Even,
        other => {
            return Err(PyValueError::new_err(format!(
                "parity must be \"odd\" or \"even\", got {other:?}"
            )))
        }
    };
    let p = rad::ThermalParams::new(hbar_omega, kt, None).map_err(to_py_err)?;
    Ok(rad::average_energy_fermi(&p, parity))
}

/// Spectral intensity `avg_energy * omega^2 / (pi^2 c^2)`.
#[pyfunction]
#[pyo3(signature = (omega, avg_energy, c = 1.0))]
fn spectral_intensity(omega: f64, avg_energy: f64, c: f64) -> PyResult<f64> {
    Ok(rad::spectral_intensity(omega, avg_energy, light_speed(c)?))
}

/// Spectrum sweep returning `(omega, avg_energy, intensity)` rows.
#[pyfunction]
#[pyo3(signature = (omega_min, omega_max, points, kt, statistics, bound = None, c = 1.0))]
fn spectrum_rows(
    omega_min: f64,
    omega_max: f64,
    points: usize,
    kt: f64,
    statistics: &str,
    bound: Option<f64>,
    c: f64,
) -> PyResult<Vec<(f64, f64, f64)>> {
    let series = rad::spectrum_table(
        omega_min,
        omega_max,
        points,
        kt,
        parse_statistics(statistics)?,
        bound,
        light_speed(c)?,
    )
    .map_err(to_py_err)?;
    Ok(series
        .rows()
        .iter()
        .map(|r| (r.omega, r.avg_energy, r.intensity))
        .collect())
}

/// Spectrum sweep rendered as the CSV the CLI emits.
#[pyfunction]
#[pyo3(signature = (omega_min, omega_max, points, kt, statistics, bound = None, c = 1.0))]
fn spectrum_csv(
    omega_min: f64,
    omega_max: f64,
    points: usize,
    kt: f64,
    statistics: &str,
    bound: Option<f64>,
    c: f64,
) -> PyResult<String> {
    let series = rad::spectrum_table(
        omega_min,
        omega_max,
        points,
        kt,
        parse_statistics(statistics)?,
        bound,
        light_speed(c)?,
    )
    .map_err(to_py_err)?;
    Ok(series.to_csv())
}

// --- vector composition ---------------------------------------------------------

/// Vector composition; the sum `u ++ v` or, with `difference=True`, the
/// relative velocity `u ++ (-v)`.
#[pyfunction]
#[pyo3(signature = (u, v, difference = false, c = 1.0))]
fn compose_vectors(u: Triple, v: Triple, difference: bool, c: f64) -> PyResult<Triple> {
    let c = light_speed(c)?;
    let sign = if difference {
        vector::ComposeSign::Difference
    } else {
        vector::ComposeSign::Sum
    };
    let w = vector::compose(&vec_from(u, c), &vec_from(v, c), sign).map_err(to_py_err)?;
    Ok(vec_into(w))
}

/// Rotate a composed velocity in reciprocity space.
#[pyfunction]
#[pyo3(signature = (w, axis, angle, c = 1.0))]
fn rotate_reciprocity(w: Triple, axis: (f64, f64, f64), angle: f64, c: f64) -> PyResult<Triple> {
    let c = light_speed(c)?;
    let rotation = vector::ReciprocityRotation::normalized([axis.0, axis.1, axis.2], angle)
        .map_err(to_py_err)?;
    let out = vector::rotate_reciprocity(&vec_from(w, c), &rotation).map_err(to_py_err)?;
    Ok(vec_into(out))
}

/// The reciprocal vector `(i*r - W x r/c^2)/(i*(W.r)/c^2)`; satisfies
/// `W . W~ = c^2` under the bilinear dot product.
#[pyfunction]
#[pyo3(signature = (w, axis, c = 1.0))]
fn reciprocal_vector(w: Triple, axis: (f64, f64, f64), c: f64) -> PyResult<Triple> {
    let c = light_speed(c)?;
    let out =
        vector::reciprocal_vector(&vec_from(w, c), [axis.0, axis.1, axis.2]).map_err(to_py_err)?;
    Ok(vec_into(out))
}

/// Compose the rotated inputs: relative velocity at angle 0, relative
/// slowness at angle pi.
#[pyfunction]
#[pyo3(signature = (u, v, axis, angle, c = 1.0))]
fn general_compose(
    u: Triple,
    v: Triple,
    axis: (f64, f64, f64),
    angle: f64,
    c: f64,
) -> PyResult<Triple> {
    let c = light_speed(c)?;
    let rotation = vector::ReciprocityRotation::normalized([axis.0, axis.1, axis.2], angle)
        .map_err(to_py_err)?;
    let w = vector::general_compose(&vec_from(u, c), &vec_from(v, c), &rotation)
        .map_err(to_py_err)?;
    Ok(vec_into(w))
}

/// Relative gap between the two associativity groupings of `u ++ v ++ y`.
#[pyfunction]
#[pyo3(signature = (u, v, y, c = 1.0))]
fn associativity_residual(u: Triple, v: Triple, y: Triple, c: f64) -> PyResult<f64> {
    let c = light_speed(c)?;
    vector::associativity_residual(&vec_from(u, c), &vec_from(v, c), &vec_from(y, c))
        .map_err(to_py_err)
}

// --- verification ------------------------------------------------------------------

/// Run the identity-verification suite and return the JSON report.
#[pyfunction]
#[pyo3(signature = (seed = 42, trials = 10_000, c = 1.0, tolerances = None))]
fn verify_json(
    seed: u64,
    trials: usize,
    c: f64,
    tolerances: Option<BTreeMap<String, f64>>,
) -> PyResult<String> {
    let config = verify::RunConfig {
        c,
        seed,
        trials,
        tolerance_overrides: tolerances.unwrap_or_default(),
    };
    Ok(verify::run(&config).map_err(to_py_err)?.to_json())
}

#[pymodule]
fn recipro(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(reciprocate_velocity, m)?)?;
    m.add_function(wrap_pyfunction!(reciprocate_slowness, m)?)?;
    m.add_function(wrap_pyfunction!(add_velocity, m)?)?;
    m.add_function(wrap_pyfunction!(add_slowness, m)?)?;
    m.add_function(wrap_pyfunction!(scale_velocity, m)?)?;
    m.add_function(wrap_pyfunction!(scale_slowness, m)?)?;
    m.add_function(wrap_pyfunction!(rate_of_transfer, m)?)?;
    m.add_function(wrap_pyfunction!(reciprocal_rate, m)?)?;
    m.add_function(wrap_pyfunction!(heisenberg_holds, m)?)?;
    m.add_function(wrap_pyfunction!(symmetric_difference, m)?)?;
    m.add_function(wrap_pyfunction!(effective_frequency, m)?)?;
    m.add_function(wrap_pyfunction!(oscillator_energy_terms, m)?)?;
    m.add_function(wrap_pyfunction!(well_energy, m)?)?;
    m.add_function(wrap_pyfunction!(average_energy_planck, m)?)?;
    m.add_function(wrap_pyfunction!(average_energy_bounded, m)?)?;
    m.add_function(wrap_pyfunction!(average_energy_fermi, m)?)?;
    m.add_function(wrap_pyfunction!(spectral_intensity, m)?)?;
    m.add_function(wrap_pyfunction!(spectrum_rows, m)?)?;
    m.add_function(wrap_pyfunction!(spectrum_csv, m)?)?;
    m.add_function(wrap_pyfunction!(compose_vectors, m)?)?;
    m.add_function(wrap_pyfunction!(rotate_reciprocity, m)?)?;
    m.add_function(wrap_pyfunction!(reciprocal_vector, m)?)?;
    m.add_function(wrap_pyfunction!(general_compose, m)?)?;
    m.add_function(wrap_pyfunction!(associativity_residual, m)?)?;
    m.add_function(wrap_pyfunction!(verify_json, m)?)?;
    m.add_class::<BoundedDecay>()?;
    m.add_class::<Oscillator>()?;
    Ok(())
}
