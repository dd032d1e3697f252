//! Python bindings for the skein-core library: exact scalars, partition
//! combinatorics, the annulus skein with its Hecke oracle, skein
//! dilogarithms, the wall-crossing verifiers, skein lifts, and the
//! triangulation effectivity decision. Verifiers return their reports as
//! JSON strings.

use pyo3::exceptions::{PyValueError, PyZeroDivisionError};
use pyo3::prelude::*;
use pyo3::types::PyDict;
use skein_core::annulus::{self, BraidWord};
use skein_core::scalars::{parse_scalar, Scalar as CoreScalar, Var};
use skein_core::symfun::{self, Partition};
use skein_core::torus::{Cone, LatticeVector};
use skein_core::triangulate::{self, Effectivity, Marking};
use skein_core::{dilog, lift, qtorus, torus};

fn to_value_err<E: std::fmt::Display>(e: E) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn partition_from(parts: Vec<u32>) -> PyResult<Partition> {
    let mut sorted = parts.clone();
    sorted.sort_unstable_by(|a, b| b.cmp(a));
    if sorted != parts {
        return Err(PyValueError::new_err(
            "partition parts must be weakly decreasing",
        ));
    }
    Ok(Partition::new(parts))
}

fn var_from(name: &str) -> PyResult<Option<Var>> {
    match name {
        "a" => Ok(Some(Var::A)),
        "a1" => Ok(Some(Var::A1)),
        "a2" => Ok(Some(Var::A2)),
        "xi" => Ok(Some(Var::Xi)),
        "a1a2" => Ok(None),
        other => Err(PyValueError::new_err(format!("unknown variable {other}"))),
    }
}

/// Exact scalar: Laurent monomials in `a`, `a1`, `a2`, `xi` over the
/// rational-function field in `s = q^(1/2)`.
#[pyclass(name = "Scalar")]
#[derive(Clone)]
struct PyScalar {
    inner: CoreScalar,
}

#[pymethods]
impl PyScalar {
    /// Parse an expression like `(a - a^-1)/(s - s^-1)`.
    #[new]
    fn new(text: &str) -> PyResult<Self> {
        Ok(PyScalar { inner: parse_scalar(text).map_err(to_value_err)? })
    }

    #[staticmethod]
    fn integer(n: i64) -> Self {
        PyScalar { inner: CoreScalar::from_int(n) }
    }

    fn __add__(&self, other: &PyScalar) -> PyScalar {
        PyScalar { inner: &self.inner + &other.inner }
    }

    fn __sub__(&self, other: &PyScalar) -> PyScalar {
        PyScalar { inner: &self.inner - &other.inner }
    }

    fn __mul__(&self, other: &PyScalar) -> PyScalar {
        PyScalar { inner: &self.inner * &other.inner }
    }

    fn __truediv__(&self, other: &PyScalar) -> PyResult<PyScalar> {
        if other.inner.is_zero() {
            return Err(PyZeroDivisionError::new_err("division by zero"));
        }
        if let Some(q) = other.inner.as_qfield() {
            return Ok(PyScalar { inner: self.inner.scale(&q.inverse()) });
        }
        let inv = other.inner.try_inverse().map_err(to_value_err)?;
        Ok(PyScalar { inner: &self.inner * &inv })
    }

    fn __neg__(&self) -> PyScalar {
        PyScalar { inner: -self.inner.clone() }
    }

    fn __richcmp__(&self, other: &PyScalar, op: pyo3::basic::CompareOp) -> PyResult<bool> {
        match op {
            pyo3::basic::CompareOp::Eq => Ok(self.inner == other.inner),
            pyo3::basic::CompareOp::Ne => Ok(self.inner != other.inner),
            _ => Err(PyValueError::new_err("scalars are not ordered")),
        }
    }

    fn is_zero(&self) -> bool {
        self.inner.is_zero()
    }

    /// Substitute expressions for variables, e.g. `{"a": "s^2"}`.
    fn specialize(&self, bindings: &Bound<'_, PyDict>) -> PyResult<PyScalar> {
        let mut subs = vec![];
        for (k, v) in bindings.iter() {
            let name: String = k.extract()?;
            let var = var_from(&name)?
                .ok_or_else(|| PyValueError::new_err("cannot bind the product a1a2"))?;
            let value: String = v.extract()?;
            subs.push((var, parse_scalar(&value).map_err(to_value_err)?));
        }
        Ok(PyScalar { inner: self.inner.specialize(&subs).map_err(to_value_err)? })
    }

    fn __repr__(&self) -> String {
        self.inner.to_string()
    }

    fn __str__(&self) -> String {
        self.inner.to_string()
    }
}

/// `(content, hook)` per cell of the partition's Young diagram.
#[pyfunction]
fn hooks_contents(parts: Vec<u32>) -> PyResult<Vec<(i64, u32)>> {
    Ok(symfun::hooks_contents(&partition_from(parts)?))
}

/// Littlewood-Richardson coefficients `c^lambda_{mu nu}` keyed by `lambda`.
#[pyfunction]
fn lr_coefficients(mu: Vec<u32>, nu: Vec<u32>) -> PyResult<Vec<(Vec<u32>, u64)>> {
    let mu = partition_from(mu)?;
    let nu = partition_from(nu)?;
    Ok(symfun::lr_coefficients(&mu, &nu)
        .into_iter()
        .map(|(l, c)| (l.parts().to_vec(), c))
        .collect())
}

/// The power sum `p_d` expanded in the Schur basis.
#[pyfunction]
fn power_sum_in_schur(d: u32) -> Vec<(Vec<u32>, PyScalar)> {
    annulus::power_sum_element(d, d)
        .terms()
        .map(|(l, c)| (l.parts().to_vec(), PyScalar { inner: c.clone() }))
        .collect()
}

/// Meridian eigenvalue on `W_lambda` for orientation `+1` or `-1`.
#[pyfunction]
fn meridian_eigenvalue(parts: Vec<u32>, orientation: i8) -> PyResult<PyScalar> {
    if orientation != 1 && orientation != -1 {
        return Err(PyValueError::new_err("orientation must be +1 or -1"));
    }
    Ok(PyScalar {
        inner: annulus::meridian_eigenvalue(&partition_from(parts)?, orientation),
    })
}

/// Colored-unknot value with framing variable `a`, `a1`, `a2`, or `a1a2`.
#[pyfunction]
fn framed_unknot_value(parts: Vec<u32>, var: &str) -> PyResult<PyScalar> {
    Ok(PyScalar {
        inner: annulus::framed_unknot_value(&partition_from(parts)?, var_from(var)?),
    })
}

/// Annular closure of a braid word like `"s1 -s2"`, as `W`-basis terms.
#[pyfunction]
fn hecke_closure(strands: usize, word: &str) -> PyResult<Vec<(Vec<u32>, PyScalar)>> {
    let beta = BraidWord::parse(strands, word).map_err(to_value_err)?;
    let closure = annulus::hecke_closure(&beta).map_err(to_value_err)?;
    Ok(closure
        .terms()
        .map(|(l, c)| (l.parts().to_vec(), PyScalar { inner: c.clone() }))
        .collect())
}

/// The annulus element `A_{i,j}` from its defining recursion.
#[pyfunction]
fn aij(i: u32, j: u32) -> Vec<(Vec<u32>, PyScalar)> {
    annulus::aij(i, j, i + j + 1)
        .terms()
        .map(|(l, c)| (l.parts().to_vec(), PyScalar { inner: c.clone() }))
        .collect()
}

/// Coefficient of `W_lambda` in the skein dilogarithm (product form).
#[pyfunction]
fn psi_coefficient(parts: Vec<u32>) -> PyResult<PyScalar> {
    let lambda = partition_from(parts)?;
    let n = lambda.size();
    Ok(PyScalar { inner: dilog::psi_product_form(n).element().coeff(&lambda) })
}

/// Runs the four dilogarithm checks; returns a JSON array of reports.
#[pyfunction]
fn verify_dilog(max_degree: u32) -> String {
    let reports = [
        dilog::verify_forms_agree(max_degree),
        dilog::verify_psi_inverse(max_degree),
        dilog::verify_recurrence(max_degree),
        dilog::verify_inverse_recurrence(max_degree),
    ];
    let all: Vec<String> = reports
        .iter()
        .map(|r| r.render("json").expect("json renders"))
        .collect();
    format!("[{}]", all.join(","))
}

#[pyfunction]
#[pyo3(signature = (max_weight, twisted = false))]
fn verify_pentagon(max_weight: u32, twisted: bool) -> String {
    torus::verify_pentagon(max_weight, twisted)
        .render("json")
        .expect("json renders")
}

#[pyfunction]
fn verify_sw(max_weight: u32) -> String {
    torus::verify_sw(max_weight).render("json").expect("json renders")
}

#[pyfunction]
fn verify_gl1_pentagon(max_weight: u32) -> String {
    qtorus::verify_gl1_pentagon(max_weight)
        .render("json")
        .expect("json renders")
}

#[pyfunction]
fn verify_gl1_sw(max_weight: u32) -> String {
    qtorus::verify_gl1_sw(max_weight)
        .render("json")
        .expect("json renders")
}

#[pyfunction]
fn verify_coproduct_on_braid(strands: usize, word: &str) -> PyResult<String> {
    let beta = BraidWord::parse(strands, word).map_err(to_value_err)?;
    Ok(lift::verify_coproduct_on_braid(&beta)
        .map_err(to_value_err)?
        .render("json")
        .expect("json renders"))
}

#[pyfunction]
fn verify_colored_unknot(max_size: u32) -> String {
    lift::verify_colored_unknot(max_size)
        .render("json")
        .expect("json renders")
}

#[pyfunction]
fn verify_lift_tables() -> PyResult<String> {
    Ok(lift::verify_tables()
        .map_err(to_value_err)?
        .render("json")
        .expect("json renders"))
}

/// `sigma(i,j) = (-1)^(ij + i + j)`, the quadratic refinement.
#[pyfunction]
fn quadratic_refinement(i: i64, j: i64) -> i64 {
    torus::quadratic_refinement(LatticeVector(i, j))
}

/// Taut angle structures of a triangulation, as per-tet quad-type names.
#[pyfunction]
fn taut_structures(text: &str) -> PyResult<Vec<Vec<String>>> {
    let tri = triangulate::IdealTriangulation::parse(text).map_err(to_value_err)?;
    Ok(triangulate::enumerate_taut(&tri)
        .into_iter()
        .map(|t| t.pi_quads.iter().map(|q| q.to_string()).collect())
        .collect())
}

/// Effectivity of every marking: (marking names, effective, witness or
/// certificate as rational strings).
#[pyfunction]
fn effectivity(text: &str) -> PyResult<Vec<(Vec<String>, bool, Vec<String>)>> {
    let tri = triangulate::IdealTriangulation::parse(text).map_err(to_value_err)?;
    let mut out = vec![];
    for m in Marking::all(tri.tets()) {
        let names: Vec<String> = m.quads.iter().map(|q| q.to_string()).collect();
        match triangulate::is_effective(&tri, &m) {
            Effectivity::Effective { witness } => {
                out.push((names, true, witness.iter().map(|w| w.to_string()).collect()));
            }
            Effectivity::Ineffective { certificate } => {
                out.push((
                    names,
                    false,
                    certificate.iter().map(|p| p.to_string()).collect(),
                ));
            }
        }
    }
    Ok(out)
}

/// Enumerate and evaluate the lifts of a diagram text over the trivial
/// cover (or the gl(1) target for torus charts); returns a rendering.
#[pyfunction]
#[pyo3(signature = (diagram, chart = None, target = "trivial"))]
fn lift_evaluate(diagram: &str, chart: Option<&str>, target: &str) -> PyResult<String> {
    let d = lift::LeafDiagram::parse(diagram).map_err(to_value_err)?;
    let chart = match chart {
        Some(c) => lift::parse_chart(c).map_err(to_value_err)?,
        None => lift::CoverChart::trivial(d.chart),
    };
    let lifts = lift::enumerate_lifts(&d, &chart).map_err(to_value_err)?;
    match target {
        "trivial" => match lift::evaluate_trivial_cover(&lifts).map_err(to_value_err)? {
            lift::TrivialEvaluation::Annular(t) => Ok(t
                .terms()
                .map(|((m, n), c)| format!("[{}] W{} (x) W{}", c, m, n))
                .collect::<Vec<_>>()
                .join(" + ")),
            lift::TrivialEvaluation::PlanarClosed(s) => Ok(s.to_string()),
            lift::TrivialEvaluation::PlanarTangle(map) => Ok(map
                .iter()
                .map(|(k, v)| format!("{k:?}: {v}"))
                .collect::<Vec<_>>()
                .join("; ")),
        },
        "gl1" => Ok(lift::evaluate_homological(&lifts, Cone::UpperWedge, 16)
            .map_err(to_value_err)?
            .render()),
        other => Err(PyValueError::new_err(format!("unknown target {other}"))),
    }
}

#[pymodule]
fn skein_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyScalar>()?;
    m.add_function(wrap_pyfunction!(hooks_contents, m)?)?;
    m.add_function(wrap_pyfunction!(lr_coefficients, m)?)?;
    m.add_function(wrap_pyfunction!(power_sum_in_schur, m)?)?;
    m.add_function(wrap_pyfunction!(meridian_eigenvalue, m)?)?;
    m.add_function(wrap_pyfunction!(framed_unknot_value, m)?)?;
    m.add_function(wrap_pyfunction!(hecke_closure, m)?)?;
    m.add_function(wrap_pyfunction!(aij, m)?)?;
    m.add_function(wrap_pyfunction!(psi_coefficient, m)?)?;
    m.add_function(wrap_pyfunction!(verify_dilog, m)?)?;
    m.add_function(wrap_pyfunction!(verify_pentagon, m)?)?;
    m.add_function(wrap_pyfunction!(verify_sw, m)?)?;
    m.add_function(wrap_pyfunction!(verify_gl1_pentagon, m)?)?;
    m.add_function(wrap_pyfunction!(verify_gl1_sw, m)?)?;
    m.add_function(wrap_pyfunction!(verify_coproduct_on_braid, m)?)?;
    m.add_function(wrap_pyfunction!(verify_colored_unknot, m)?)?;
    m.add_function(wrap_pyfunction!(verify_lift_tables, m)?)?;
    m.add_function(wrap_pyfunction!(quadratic_refinement, m)?)?;
    m.add_function(wrap_pyfunction!(taut_structures, m)?)?;
    m.add_function(wrap_pyfunction!(effectivity, m)?)?;
    m.add_function(wrap_pyfunction!(lift_evaluate, m)?)?;
    Ok(())
}
