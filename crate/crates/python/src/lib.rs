//! Python bindings for `loopseries`.

use loopseries as core;
use num_bigint::BigInt;
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

create_exception!(pyloopseries, HypothesisViolation, PyValueError);
create_exception!(pyloopseries, ParseError, PyValueError);

fn to_py(e: core::Error) -> PyErr {
    match e {
        core::Error::HypothesisViolation(_) | core::Error::PathConnectednessViolation(_) => {
            HypothesisViolation::new_err(e.to_string())
        }
        core::Error::Parse { .. } | core::Error::UnknownName { .. } => {
            ParseError::new_err(e.to_string())
        }
        _ => PyValueError::new_err(e.to_string()),
    }
}

/// Ratio of integer polynomials in `t`, stored in lowest terms.
#[pyclass(name = "RationalGF", frozen, eq, skip_from_py_object)]
#[derive(Clone, PartialEq)]
struct PyRationalGF(core::RationalGF);

#[pymethods]
impl PyRationalGF {
    #[new]
    #[pyo3(signature = (numerator, denominator = vec![BigInt::from(1)]))]
    fn new(numerator: Vec<BigInt>, denominator: Vec<BigInt>) -> PyResult<Self> {
        core::RationalGF::new(numerator.into(), denominator.into())
            .map(Self)
            .map_err(to_py)
    }

    /// Ascending coefficients of the reduced numerator.
    #[getter]
    fn numerator(&self) -> Vec<BigInt> {
        self.0.numerator().coeffs().to_vec()
    }

    #[getter]
    fn denominator(&self) -> Vec<BigInt> {
        self.0.denominator().coeffs().to_vec()
    }

    /// Power series coefficients a_0..a_bound.
    fn expand(&self, bound: usize) -> Vec<BigInt> {
        self.0.expand(bound).into_coeffs()
    }

    fn __add__(&self, other: &Self) -> Self {
        Self(&self.0 + &other.0)
    }

    fn __sub__(&self, other: &Self) -> Self {
        Self(&self.0 - &other.0)
    }

    fn __mul__(&self, other: &Self) -> Self {
        Self(&self.0 * &other.0)
    }

    fn __truediv__(&self, other: &Self) -> PyResult<Self> {
        self.0.checked_div(&other.0).map(Self).map_err(to_py)
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        let list = |v: Vec<BigInt>| {
            v.iter().map(BigInt::to_string).collect::<Vec<_>>().join(", ")
        };
        format!("RationalGF([{}], [{}])", list(self.numerator()), list(self.denominator()))
    }
}

#[pyclass(name = "SpaceProfile", frozen, skip_from_py_object)]
#[derive(Clone)]
struct PySpaceProfile(core::SpaceProfile);

#[pymethods]
impl PySpaceProfile {
    #[new]
    #[pyo3(signature = (name, series, diagonal_null = false))]
    fn new(name: String, series: &PyRationalGF, diagonal_null: bool) -> PyResult<Self> {
        core::SpaceProfile::new(name, series.0.clone(), diagonal_null)
            .map(Self)
            .map_err(to_py)
    }

    #[staticmethod]
    fn point() -> Self {
        Self(core::SpaceProfile::point())
    }

    #[staticmethod]
    fn sphere(n: u32) -> PyResult<Self> {
        core::SpaceProfile::sphere(n).map(Self).map_err(to_py)
    }

    /// `RP^n`; pass `None` for `RP^inf`.
    #[staticmethod]
    #[pyo3(signature = (n = None))]
    fn projective(n: Option<u32>) -> PyResult<Self> {
        let dim = n.map_or(core::ProjDim::Infinite, core::ProjDim::Finite);
        core::SpaceProfile::projective(dim).map(Self).map_err(to_py)
    }

    /// Evaluates a space expression such as `"susp(S^1 v S^2)"`.
    #[staticmethod]
    fn parse(text: &str) -> PyResult<Self> {
        core::evaluate_space(text, &core::Catalog::new())
            .map(Self)
            .map_err(to_py)
    }

    fn wedge(&self, other: &Self) -> Self {
        Self(self.0.wedge(&other.0))
    }

    fn smash(&self, other: &Self) -> Self {
        Self(self.0.smash(&other.0))
    }

    fn suspend(&self) -> Self {
        Self(self.0.suspend())
    }

    fn cone(&self) -> Self {
        Self(self.0.cone())
    }

    #[getter]
    fn name(&self) -> String {
        self.0.name().to_owned()
    }

    #[getter]
    fn series(&self) -> PyRationalGF {
        PyRationalGF(self.0.series().clone())
    }

    #[getter]
    fn diagonal_null(&self) -> bool {
        self.0.diagonal_null()
    }

    fn __repr__(&self) -> String {
        format!("SpaceProfile({})", self.0)
    }
}

#[pyclass(name = "PairInclusion", frozen)]
struct PyPairInclusion(core::PairInclusion);

#[pymethods]
impl PyPairInclusion {
    #[new]
    #[pyo3(signature = (sub, ambient, mono_in_homology = false))]
    fn new(sub: &PySpaceProfile, ambient: &PySpaceProfile, mono_in_homology: bool) -> Self {
        Self(core::PairInclusion::new(sub.0.clone(), ambient.0.clone(), mono_in_homology))
    }

    #[getter]
    fn sub(&self) -> PySpaceProfile {
        PySpaceProfile(self.0.sub.clone())
    }

    #[getter]
    fn ambient(&self) -> PySpaceProfile {
        PySpaceProfile(self.0.ambient.clone())
    }

    #[getter]
    fn mono_in_homology(&self) -> bool {
        self.0.mono_in_homology
    }
}

/// Closed-form loop space series for the pair.
#[pyfunction]
fn main_theorem(pair: &PyPairInclusion) -> PyResult<PyRationalGF> {
    core::main_theorem(&pair.0).map(PyRationalGF).map_err(to_py)
}

#[pyfunction]
fn bott_samelson(y: &PySpaceProfile) -> PyResult<PyRationalGF> {
    core::bott_samelson(&y.0).map(PyRationalGF).map_err(to_py)
}

#[pyfunction]
fn bousfield_curtis(x: &PySpaceProfile) -> PyResult<PyRationalGF> {
    core::bousfield_curtis(&x.0).map(PyRationalGF).map_err(to_py)
}

#[pyfunction]
fn union_poinser(pair: &PyPairInclusion) -> PyResult<PyRationalGF> {
    core::union_poinser(&pair.0).map(PyRationalGF).map_err(to_py)
}

#[pyfunction]
fn euler_e1(x_series: &PyRationalGF) -> PyResult<PyRationalGF> {
    core::euler_e1(&x_series.0).map(PyRationalGF).map_err(to_py)
}

#[pyfunction]
fn euler_einf(loop_series: &PyRationalGF) -> PyRationalGF {
    PyRationalGF(core::euler_einf(&loop_series.0))
}

#[pyfunction]
fn collapse_check(pair: &PyPairInclusion) -> PyResult<bool> {
    core::collapse_check(&pair.0).map_err(to_py)
}

/// Betti numbers b_0..b_bound from the multiindex enumeration.
#[pyfunction]
fn loop_series_oracle(pair: &PyPairInclusion, bound: usize) -> PyResult<Vec<BigInt>> {
    core::loop_series_oracle(&pair.0, bound)
        .map(|s| s.into_coeffs())
        .map_err(to_py)
}

#[pyfunction]
fn delta_betti(pair: &PyPairInclusion, s: usize, q: usize) -> PyResult<BigInt> {
    core::delta_betti(&pair.0, s, q).map_err(to_py)
}

#[pyfunction]
fn smash_power_betti(y: &PySpaceProfile, s: usize, q: usize) -> PyResult<BigInt> {
    core::smash_power_betti(&y.0, s, q).map_err(to_py)
}

#[pyfunction]
fn quotient_betti(pair: &PyPairInclusion, s: usize, q: usize) -> PyResult<BigInt> {
    core::quotient_betti(&pair.0, s, q).map_err(to_py)
}

#[pyfunction]
fn binom(n: i64, k: i64) -> BigInt {
    core::binom(n, k)
}

#[pyfunction]
fn binomial_gf_check(k: u32, m: u32, bound: usize) -> PyResult<bool> {
    core::binomial_gf_check(k, m, bound).map_err(to_py)
}

#[pyfunction]
fn c_coeff(lambda: Vec<usize>, mu: Vec<usize>, s: usize) -> PyResult<BigInt> {
    let lambda = core::MultiIndex::new(lambda).map_err(to_py)?;
    let mu = core::MultiIndex::new(mu).map_err(to_py)?;
    Ok(core::c_coeff(&lambda, &mu, s))
}

#[pymodule]
fn pyloopseries(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyRationalGF>()?;
    m.add_class::<PySpaceProfile>()?;
    m.add_class::<PyPairInclusion>()?;
    m.add("HypothesisViolation", m.py().get_type::<HypothesisViolation>())?;
    m.add("ParseError", m.py().get_type::<ParseError>())?;
    m.add_function(wrap_pyfunction!(main_theorem, m)?)?;
    m.add_function(wrap_pyfunction!(bott_samelson, m)?)?;
    m.add_function(wrap_pyfunction!(bousfield_curtis, m)?)?;
    m.add_function(wrap_pyfunction!(union_poinser, m)?)?;
    m.add_function(wrap_pyfunction!(euler_e1, m)?)?;
    m.add_function(wrap_pyfunction!(euler_einf, m)?)?;
    m.add_function(wrap_pyfunction!(collapse_check, m)?)?;
    m.add_function(wrap_pyfunction!(loop_series_oracle, m)?)?;
    m.add_function(wrap_pyfunction!(delta_betti, m)?)?;
    m.add_function(wrap_pyfunction!(smash_power_betti, m)?)?;
    m.add_function(wrap_pyfunction!(quotient_betti, m)?)?;
    m.add_function(wrap_pyfunction!(binom, m)?)?;
    m.add_function(wrap_pyfunction!(binomial_gf_check, m)?)?;
    m.add_function(wrap_pyfunction!(c_coeff, m)?)?;
    Ok(())
}
