//! Python bindings: load algebra documents, run the axiom and operator
//! checks, and apply constructions. Scalars cross the boundary as `"p/q"`
//! strings, so nothing is rounded.

use algcheck_core::axioms::{check_structure, commutator_bracket};
use algcheck_core::constructions::{self, Construction, Parameters};
use algcheck_core::document::{parse_document, serialize_document, AlgebraDocument};
use algcheck_core::fixtures;
use algcheck_core::operators::{check_operator_scoped, OperatorKind, Product, ProductScope};
use algcheck_core::scalar::{format_scalar, parse_scalar, Scalar};
use algcheck_core::{AxiomReport, Error, OperatorClaim};
use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyValueError};
use pyo3::prelude::*;

create_exception!(algcheck, AlgcheckError, PyException);
create_exception!(algcheck, GateError, AlgcheckError);

fn to_py(e: Error) -> PyErr {
    match e {
        Error::Gate { gate, report } => GateError::new_err(format!("{gate}\n{}", report.summary())),
        Error::Shape(_)
        | Error::Parameter(_)
        | Error::NotEven { .. }
        | Error::InvalidRepresentation(_) => PyValueError::new_err(e.to_string()),
        other => AlgcheckError::new_err(other.to_string()),
    }
}

fn scalar(text: &str) -> PyResult<Scalar> {
    parse_scalar(text).map_err(|e| PyValueError::new_err(e.to_string()))
}

/// Verdict of a sweep, with every violation kept.
#[pyclass(module = "algcheck", frozen, skip_from_py_object)]
#[derive(Clone)]
struct Report {
    inner: AxiomReport,
}

#[pymethods]
impl Report {
    #[getter]
    fn holds(&self) -> bool {
        self.inner.holds()
    }

    #[getter]
    fn violation_count(&self) -> usize {
        self.inner.violation_count()
    }

    /// `(label, checked, violated)` for each section.
    #[getter]
    fn sections(&self) -> Vec<(String, usize, usize)> {
        self.inner
            .sections
            .iter()
            .map(|s| (s.label.clone(), s.checked, s.violations.len()))
            .collect()
    }

    fn summary(&self) -> String {
        self.inner.summary()
    }

    fn dump(&self) -> String {
        self.inner.full_dump()
    }

    fn to_json(&self) -> String {
        self.inner.to_json().to_string()
    }

    fn __bool__(&self) -> bool {
        self.inner.holds()
    }

    fn __repr__(&self) -> String {
        let verdict = if self.inner.holds() { "pass" } else { "fail" };
        format!(
            "<Report {verdict}, {} violations>",
            self.inner.violation_count()
        )
    }
}

fn report(inner: AxiomReport) -> Report {
    Report { inner }
}

/// A graded algebra with its named operators and multipliers.
#[pyclass(module = "algcheck", frozen, from_py_object)]
#[derive(Clone)]
struct Algebra {
    doc: AlgebraDocument,
}

#[pymethods]
impl Algebra {
    #[staticmethod]
    fn from_json(text: &str) -> PyResult<Self> {
        parse_document(text)
            .map(|doc| Algebra { doc })
            .map_err(|d| PyValueError::new_err(d.to_string()))
    }

    #[staticmethod]
    fn load(path: std::path::PathBuf) -> PyResult<Self> {
        let text = std::fs::read_to_string(&path)?;
        Self::from_json(&text)
    }

    fn to_json(&self) -> String {
        serialize_document(&self.doc)
    }

    #[getter]
    fn name(&self) -> &str {
        &self.doc.name
    }

    #[getter]
    fn dim(&self) -> usize {
        self.doc.algebra.dim()
    }

    #[getter]
    fn operators(&self) -> Vec<String> {
        self.doc.operators.keys().cloned().collect()
    }

    #[getter]
    fn multipliers(&self) -> Vec<String> {
        self.doc.multipliers.keys().cloned().collect()
    }

    /// Nonzero `(i, j, k, c)` of `"mu"` or `"bracket"`, 1-based.
    fn structure_constants(&self, product: &str) -> PyResult<Vec<(usize, usize, usize, String)>> {
        let a = &self.doc.algebra;
        let p = match product {
            "mu" => a.mu(),
            "bracket" => a.bracket(),
            other => return Err(PyValueError::new_err(format!("unknown product {other:?}"))),
        };
        Ok(p.map(|p| {
            p.triples()
                .map(|(i, j, k, c)| (i + 1, j + 1, k + 1, format_scalar(c)))
                .collect()
        })
        .unwrap_or_default())
    }

    /// Coefficients of `e_i · e_j` (1-based) as strings.
    fn product(&self, i: usize, j: usize) -> PyResult<Vec<String>> {
        let a = &self.doc.algebra;
        let mu = a.require_mu().map_err(to_py)?;
        if i == 0 || j == 0 || i > a.dim() || j > a.dim() {
            return Err(PyValueError::new_err("basis index out of range"));
        }
        Ok(mu
            .basis_product(i - 1, j - 1)
            .iter()
            .map(format_scalar)
            .collect())
    }

    #[pyo3(signature = (commutative = false))]
    fn validate(&self, commutative: bool) -> PyResult<Report> {
        let a = &self.doc.algebra;
        let mut r = a.factor().validate(a.group()).map_err(to_py)?;
        r.extend(check_structure(a, commutative).map_err(to_py)?);
        Ok(report(r))
    }

    #[pyo3(signature = (name, kind, power = 0, weight = "0", product = None))]
    fn check_operator(
        &self,
        name: &str,
        kind: &str,
        power: u32,
        weight: &str,
        product: Option<&str>,
    ) -> PyResult<Report> {
        let map = self
            .doc
            .operators
            .get(name)
            .ok_or_else(|| PyValueError::new_err(format!("unknown operator {name:?}")))?
            .clone();
        let kind: OperatorKind = kind.parse().map_err(to_py)?;
        let scope = match product {
            None => ProductScope::All,
            Some("mu") => ProductScope::Only(Product::Mu),
            Some("bracket") => ProductScope::Only(Product::Bracket),
            Some(other) => return Err(PyValueError::new_err(format!("unknown product {other:?}"))),
        };
        let claim = OperatorClaim {
            map,
            kind,
            power,
            weight: scalar(weight)?,
        };
        check_operator_scoped(&self.doc.algebra, &claim, scope)
            .map(report)
            .map_err(to_py)
    }

    /// Adds the commutator bracket; the algebra must be Hom-associative.
    fn commutator(&self) -> PyResult<Algebra> {
        let a = commutator_bracket(&self.doc.algebra).map_err(to_py)?;
        let mut doc = self.doc.clone();
        doc.algebra = a;
        Ok(Algebra { doc })
    }

    #[pyo3(signature = (
        construction,
        operator = None,
        multiplier = None,
        weight = "0",
        power = 0,
        xi = None,
        with_algebra = None,
        endomorphisms = Vec::new(),
    ))]
    #[allow(clippy::too_many_arguments)]
    fn twist(
        &self,
        construction: &str,
        operator: Option<&str>,
        multiplier: Option<&str>,
        weight: &str,
        power: u32,
        xi: Option<Vec<String>>,
        with_algebra: Option<Algebra>,
        endomorphisms: Vec<String>,
    ) -> PyResult<Twist> {
        let lookup = |n: &str| {
            self.doc
                .operators
                .get(n)
                .cloned()
                .ok_or_else(|| PyValueError::new_err(format!("unknown operator {n:?}")))
        };
        let mut p = Parameters {
            weight: scalar(weight)?,
            power,
            with: with_algebra.map(|a| a.doc.algebra),
            ..Parameters::default()
        };
        if let Some(n) = operator {
            p.operator = Some(lookup(n)?);
        }
        if let Some(key) = multiplier {
            let s = self
                .doc
                .multipliers
                .get(key)
                .ok_or_else(|| PyValueError::new_err(format!("unknown multiplier {key:?}")))?;
            p.multiplier = Some(s.clone());
        }
        if let Some(xi) = xi {
            p.xi = Some(xi.iter().map(|t| scalar(t)).collect::<PyResult<_>>()?);
        }
        for n in endomorphisms {
            let m = lookup(&n)?;
            p.endomorphisms.push((n, m));
        }
        let c = constructions::apply(construction, &self.doc.algebra, &p).map_err(to_py)?;
        Ok(Twist::new(&self.doc.name, c))
    }

    fn __repr__(&self) -> String {
        format!(
            "<Algebra {:?}, dimension {}>",
            self.doc.name,
            self.doc.algebra.dim()
        )
    }

    fn __eq__(&self, other: &Algebra) -> bool {
        self.doc == other.doc
    }
}

/// The output of a construction and its evidence.
#[pyclass(module = "algcheck", frozen)]
struct Twist {
    #[pyo3(get)]
    algebra: Algebra,
    #[pyo3(get)]
    certification: Report,
    morphisms: Vec<(String, AxiomReport)>,
}

impl Twist {
    fn new(input: &str, c: Construction) -> Self {
        let doc = AlgebraDocument::new(format!("{input} / {}", c.name), c.algebra);
        Twist {
            algebra: Algebra { doc },
            certification: report(c.certification),
            morphisms: c.morphisms,
        }
    }
}

#[pymethods]
impl Twist {
    #[getter]
    fn certified(&self) -> bool {
        self.certification.inner.holds()
    }

    /// Morphism claims by label.
    #[getter]
    fn morphisms(&self) -> Vec<(String, Report)> {
        self.morphisms
            .iter()
            .map(|(l, r)| (l.clone(), report(r.clone())))
            .collect()
    }
}

/// Names of the bundled fixtures.
#[pyfunction]
fn fixture_names() -> Vec<&'static str> {
    fixtures::shipped_documents()
        .into_iter()
        .map(|(n, _)| n)
        .collect()
}

#[pyfunction]
fn fixture(name: &str) -> PyResult<Algebra> {
    fixtures::shipped_documents()
        .into_iter()
        .find(|(n, _)| *n == name)
        .map(|(_, doc)| Algebra { doc })
        .ok_or_else(|| PyValueError::new_err(format!("unknown fixture {name:?}")))
}

/// Runs the command line in-process; returns `(exit code, stdout, stderr)`.
#[pyfunction]
fn run(args: Vec<String>) -> (i32, String, String) {
    let out = algcheck_core::cli::run(std::iter::once("algcheck".to_string()).chain(args));
    (out.code, out.stdout, out.stderr)
}

#[pymodule]
fn algcheck(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Algebra>()?;
    m.add_class::<Report>()?;
    m.add_class::<Twist>()?;
    m.add_function(wrap_pyfunction!(fixture_names, m)?)?;
    m.add_function(wrap_pyfunction!(fixture, m)?)?;
    m.add_function(wrap_pyfunction!(run, m)?)?;
    m.add("AlgcheckError", m.py().get_type::<AlgcheckError>())?;
    m.add("GateError", m.py().get_type::<GateError>())?;
    m.add("CONSTRUCTIONS", constructions::NAMES.to_vec())?;
    Ok(())
}
