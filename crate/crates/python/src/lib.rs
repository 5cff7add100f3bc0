use gaudin_duality::cyclotomic::lax::check_quantum_candidate;
use gaudin_duality::cyclotomic::neumann::verify_neumann;
use gaudin_duality::cyclotomic::{
    lax_algebra_cyclotomic, lax_algebra_sp2n, neumann_artifacts, verify_cyclotomic_duality, verify_gl_m_homomorphism,
    verify_sp2n_homomorphism, CycloDivisor, CycloFault, CycloInstance, Mu,
};
use gaudin_duality::gaudin::duality::{verify_classical_bosonic_duality, verify_classical_fermionic_duality, verify_quantum_duality};
use gaudin_duality::gaudin::generators::{check_commutativity, extract_classical_generators, extract_quantum_generators};
use gaudin_duality::gaudin::realize::verify_homomorphism;
use gaudin_duality::gaudin::{AlgebraSide, Bosonic, Divisor, Fermionic, Quantum, Realization};
use gaudin_duality::runner::{self, Limits, Mode, SpecFile};
use gaudin_duality::{
    parse_rational, poisson_bracket, GrassmannElement, ManinCheck, Matrix, MultiPoly, Rational, Ring, Var, WeylElement,
};
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use serde::Serialize;

fn value_error(e: impl std::fmt::Display) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn rational(s: &str) -> PyResult<Rational> {
    parse_rational(s).map_err(value_error)
}

fn points(list: Vec<(String, usize)>) -> PyResult<Vec<(Rational, usize)>> {
    list.into_iter().map(|(p, d)| Ok((rational(&p)?, d))).collect()
}

/// Serializes a report and hands it to Python as plain dicts and lists.
fn to_python<T: Serialize>(py: Python<'_>, value: &T) -> PyResult<Py<PyAny>> {
    let text = serde_json::to_string(value).map_err(value_error)?;
    Ok(py.import("json")?.call_method1("loads", (text,))?.unbind())
}

fn side(name: &str) -> PyResult<AlgebraSide> {
    match name {
        "gl_m" | "M" => Ok(AlgebraSide::GlM),
        "gl_n" | "N" => Ok(AlgebraSide::GlN),
        _ => Err(value_error(format!("side must be 'gl_m' or 'gl_n', got {name:?}"))),
    }
}

/// Commutative polynomial in x^a_i, p^a_i, z, λ, µ with exact rational coefficients.
#[pyclass(name = "Poly", frozen, from_py_object)]
#[derive(Clone)]
struct PyPoly(MultiPoly);

#[pymethods]
impl PyPoly {
    #[staticmethod]
    fn x(a: usize, i: usize) -> Self {
        PyPoly(MultiPoly::x(a, i))
    }
    #[staticmethod]
    fn p(a: usize, i: usize) -> Self {
        PyPoly(MultiPoly::p(a, i))
    }
    #[staticmethod]
    fn z() -> Self {
        PyPoly(MultiPoly::var(Var::Z))
    }
    #[staticmethod]
    fn lam() -> Self {
        PyPoly(MultiPoly::var(Var::Lambda))
    }
    #[staticmethod]
    fn constant(c: &str) -> PyResult<Self> {
        Ok(PyPoly(MultiPoly::constant(rational(c)?)))
    }
    fn __add__(&self, o: &Self) -> Self {
        PyPoly(self.0.add(&o.0))
    }
    fn __sub__(&self, o: &Self) -> Self {
        PyPoly(self.0.sub(&o.0))
    }
    fn __mul__(&self, o: &Self) -> Self {
        PyPoly(self.0.mul(&o.0))
    }
    fn __neg__(&self) -> Self {
        PyPoly(self.0.neg())
    }
    fn __eq__(&self, o: &Self) -> bool {
        self.0 == o.0
    }
    fn __len__(&self) -> usize {
        self.0.len()
    }
    fn __str__(&self) -> String {
        self.0.to_string()
    }
    fn __repr__(&self) -> String {
        format!("Poly({})", self.0)
    }
    /// Canonical Poisson bracket with {p, x} = 1.
    fn bracket(&self, o: &Self) -> Self {
        PyPoly(poisson_bracket(&self.0, &o.0))
    }
}

/// Normal-ordered element of the Weyl algebra in x^a_i, ∂^a_i, z, ∂_z.
#[pyclass(name = "Weyl", frozen, from_py_object)]
#[derive(Clone)]
struct PyWeyl(WeylElement);

#[pymethods]
impl PyWeyl {
    #[staticmethod]
    fn x(a: usize, i: usize) -> Self {
        PyWeyl(WeylElement::x(a, i))
    }
    #[staticmethod]
    fn d(a: usize, i: usize) -> Self {
        PyWeyl(WeylElement::d(a, i))
    }
    #[staticmethod]
    fn z() -> Self {
        PyWeyl(WeylElement::z())
    }
    #[staticmethod]
    fn dz() -> Self {
        PyWeyl(WeylElement::dz())
    }
    #[staticmethod]
    fn constant(c: &str) -> PyResult<Self> {
        Ok(PyWeyl(WeylElement::constant(rational(c)?)))
    }
    fn __add__(&self, o: &Self) -> Self {
        PyWeyl(self.0.add(&o.0))
    }
    fn __sub__(&self, o: &Self) -> Self {
        PyWeyl(self.0.sub(&o.0))
    }
    fn __mul__(&self, o: &Self) -> Self {
        PyWeyl(self.0.mul(&o.0))
    }
    fn __neg__(&self) -> Self {
        PyWeyl(self.0.neg())
    }
    fn __eq__(&self, o: &Self) -> bool {
        self.0 == o.0
    }
    fn __str__(&self) -> String {
        self.0.to_string()
    }
    fn __repr__(&self) -> String {
        format!("Weyl({})", self.0)
    }
    fn commutator(&self, o: &Self) -> Self {
        PyWeyl(self.0.commutator(&o.0))
    }
    /// Classical symbol: ∂ → p, ∂_z → λ.
    fn symbol(&self) -> PyPoly {
        PyPoly(self.0.symbol())
    }
}

/// Element of the Grassmann algebra on ψ^a_i, π^a_i.
#[pyclass(name = "Grassmann", frozen, from_py_object)]
#[derive(Clone)]
struct PyGrassmann(GrassmannElement);

#[pymethods]
impl PyGrassmann {
    #[staticmethod]
    fn psi(a: usize, i: usize) -> Self {
        PyGrassmann(GrassmannElement::psi(a, i))
    }
    #[staticmethod]
    fn pi(a: usize, i: usize) -> Self {
        PyGrassmann(GrassmannElement::pi(a, i))
    }
    #[staticmethod]
    fn constant(c: &str) -> PyResult<Self> {
        Ok(PyGrassmann(GrassmannElement::constant(rational(c)?)))
    }
    fn __add__(&self, o: &Self) -> Self {
        PyGrassmann(self.0.add(&o.0))
    }
    fn __sub__(&self, o: &Self) -> Self {
        PyGrassmann(self.0.sub(&o.0))
    }
    fn __mul__(&self, o: &Self) -> Self {
        PyGrassmann(self.0.mul(&o.0))
    }
    fn __eq__(&self, o: &Self) -> bool {
        self.0 == o.0
    }
    fn __str__(&self) -> String {
        self.0.to_string()
    }
    fn __repr__(&self) -> String {
        format!("Grassmann({})", self.0)
    }
    /// 0 for even, 1 for odd, None for mixed.
    fn parity(&self) -> Option<u32> {
        self.0.parity()
    }
    /// Graded bracket; raises ValueError on inhomogeneous input.
    fn bracket(&self, o: &Self) -> PyResult<Self> {
        self.0.bracket(&o.0).map(PyGrassmann).map_err(value_error)
    }
}

/// Column-ordered determinant of a square matrix of Weyl elements.
#[pyfunction]
fn cdet(rows: Vec<Vec<PyWeyl>>) -> PyResult<PyWeyl> {
    let m = Matrix::from_rows(rows.into_iter().map(|r| r.into_iter().map(|e| e.0).collect()).collect());
    m.cdet().map(PyWeyl).map_err(value_error)
}

/// `None` for a Manin matrix, otherwise the 0-based violating quadruple (i, j, k, l).
#[pyfunction]
fn manin_check(rows: Vec<Vec<PyWeyl>>) -> Option<(usize, usize, usize, usize)> {
    let m = Matrix::from_rows(rows.into_iter().map(|r| r.into_iter().map(|e| e.0).collect()).collect());
    match m.manin_check() {
        ManinCheck::Manin => None,
        ManinCheck::Violation { i, j, k, l } => Some((i, j, k, l)),
    }
}

/// A pair of divisors D (points z_i, degrees τ_i) and D̃ (points λ_a, degrees τ̃_a), with N = Σ τ_i
/// and M = Σ τ̃_a. Points are rationals written as "p/q".
#[pyclass(name = "Realization", frozen)]
struct PyRealization(Realization);

#[pymethods]
impl PyRealization {
    #[new]
    fn new(divisor: Vec<(String, usize)>, dual_divisor: Vec<(String, usize)>) -> PyResult<Self> {
        let d = Divisor::new(points(divisor)?).map_err(value_error)?;
        let dd = Divisor::new(points(dual_divisor)?).map_err(value_error)?;
        let (n, m) = (d.total_degree(), dd.total_degree());
        Realization::new(m, n, d, dd).map(PyRealization).map_err(value_error)
    }
    #[getter]
    fn m(&self) -> usize {
        self.0.m
    }
    #[getter]
    fn n(&self) -> usize {
        self.0.n
    }
    fn classical_bosonic_duality(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        to_python(py, &verify_classical_bosonic_duality(&self.0).map_err(value_error)?)
    }
    fn classical_fermionic_duality(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        to_python(py, &verify_classical_fermionic_duality::<Fermionic>(&self.0).map_err(value_error)?)
    }
    fn quantum_duality(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        to_python(py, &verify_quantum_duality(&self.0).map_err(value_error)?)
    }
    /// Exhaustive generator-pair check; flavor is "bosonic", "fermionic" or "quantum".
    #[pyo3(signature = (flavor, side_name = "gl_m"))]
    fn homomorphism(&self, py: Python<'_>, flavor: &str, side_name: &str) -> PyResult<Py<PyAny>> {
        let s = side(side_name)?;
        let rep = match flavor {
            "bosonic" => verify_homomorphism::<Bosonic>(&self.0, s),
            "fermionic" => verify_homomorphism::<Fermionic>(&self.0, s),
            "quantum" => verify_homomorphism::<Quantum>(&self.0, s),
            _ => return Err(value_error(format!("unknown flavor {flavor:?}"))),
        }
        .map_err(value_error)?;
        to_python(py, &rep)
    }
    fn commutativity(&self, py: Python<'_>, flavor: &str) -> PyResult<Py<PyAny>> {
        let rep = match flavor {
            "bosonic" => check_commutativity::<Bosonic>(&extract_classical_generators::<Bosonic>(&self.0).map_err(value_error)?),
            "fermionic" => {
                check_commutativity::<Fermionic>(&extract_classical_generators::<Fermionic>(&self.0).map_err(value_error)?)
            }
            "quantum" => check_commutativity::<Quantum>(&extract_quantum_generators(&self.0).map_err(value_error)?),
            _ => return Err(value_error(format!("unknown flavor {flavor:?}"))),
        };
        to_python(py, &rep)
    }
}

/// Cyclotomic instance: gl_M with divisor τ₀[0] + Σ τ_i([z_i] + [−z_i]) + 2[∞], sp_2N with simple
/// poles at λ_a, and µ given as "p/q" or "symbolic".
#[pyclass(name = "CyclotomicInstance", frozen)]
struct PyCyclotomic(CycloInstance);

#[pymethods]
impl PyCyclotomic {
    #[new]
    #[pyo3(signature = (tau0, lambdas, mu, points = Vec::new()))]
    fn new(tau0: usize, lambdas: Vec<String>, mu: &str, points: Vec<(String, usize)>) -> PyResult<Self> {
        let divisor = CycloDivisor::new(tau0, self::points(points)?).map_err(value_error)?;
        let lambdas: Vec<Rational> = lambdas.iter().map(|l| rational(l)).collect::<PyResult<_>>()?;
        let mu = if mu == "symbolic" { Mu::Symbolic } else { Mu::Value(rational(mu)?) };
        let n = divisor.total_degree();
        CycloInstance::new(lambdas.len(), n, divisor, lambdas, mu).map(PyCyclotomic).map_err(value_error)
    }
    #[getter]
    fn m(&self) -> usize {
        self.0.m
    }
    #[getter]
    fn n(&self) -> usize {
        self.0.n
    }
    fn duality(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        to_python(py, &verify_cyclotomic_duality(&self.0).map_err(value_error)?)
    }
    fn lax_algebra(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        to_python(py, &[lax_algebra_cyclotomic(&self.0), lax_algebra_sp2n(&self.0)])
    }
    fn homomorphism(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        to_python(py, &[verify_gl_m_homomorphism(&self.0, CycloFault::None), verify_sp2n_homomorphism(&self.0)])
    }
    fn quantum_candidate(&self, py: Python<'_>) -> PyResult<Py<PyAny>> {
        to_python(py, &check_quantum_candidate(&self.0).map_err(value_error)?)
    }
}

/// Neumann model with frequencies ω_a (as "p/q" strings): both Lax determinants and H.
#[pyfunction]
fn neumann(py: Python<'_>, frequencies: Vec<String>) -> PyResult<Py<PyAny>> {
    let omegas: Vec<Rational> = frequencies.iter().map(|s| rational(s)).collect::<PyResult<_>>()?;
    let art = neumann_artifacts(&omegas).map_err(value_error)?;
    to_python(py, &verify_neumann(&art).map_err(value_error)?)
}

/// Validates and runs a JSON spec document; returns one report dict per instance.
#[pyfunction]
#[pyo3(signature = (spec_json, sampled = false))]
fn run_spec(py: Python<'_>, spec_json: &str, sampled: bool) -> PyResult<Py<PyAny>> {
    let spec: SpecFile = serde_json::from_str(spec_json).map_err(value_error)?;
    let limits = Limits::default();
    let prepared = runner::prepare_all(&spec, &limits).map_err(value_error)?;
    let mode = if sampled { Mode::Sampled } else { Mode::Symbolic };
    let reports = py.detach(|| runner::run_all(&spec, &prepared, mode, &limits));
    to_python(py, &reports)
}

/// The JSON spec document of a built-in preset ("paper-core" or "neumann").
#[pyfunction]
#[pyo3(signature = (name, m = None))]
fn preset(name: &str, m: Option<usize>) -> PyResult<String> {
    let spec = runner::preset(name, m).ok_or_else(|| value_error(format!("unknown preset {name:?}")))?;
    serde_json::to_string(&spec).map_err(value_error)
}

#[pymodule]
fn pygaudin(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyPoly>()?;
    m.add_class::<PyWeyl>()?;
    m.add_class::<PyGrassmann>()?;
    m.add_class::<PyRealization>()?;
    m.add_class::<PyCyclotomic>()?;
    m.add_function(wrap_pyfunction!(cdet, m)?)?;
    m.add_function(wrap_pyfunction!(manin_check, m)?)?;
    m.add_function(wrap_pyfunction!(neumann, m)?)?;
    m.add_function(wrap_pyfunction!(run_spec, m)?)?;
    m.add_function(wrap_pyfunction!(preset, m)?)?;
    Ok(())
}
