//! Python bindings: the main types and operations of `springer-core`,
//! with structured results returned as plain dicts matching the CLI's
//! JSON schemas.

use num_bigint::BigInt;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyBool, PyDict, PyList, PyNone, PyString};
use serde_json::Value;

use springer_core as core;
use springer_core::census::{Form, OrbitLabel};
use springer_core::error::Error;
use springer_core::partition::Partition;
use springer_core::schema::{match_output, OrbitRow, TripleRow};

fn py_err(err: Error) -> PyErr {
    PyValueError::new_err(err.to_string())
}

fn parse_partition(parts: Vec<u32>) -> PyResult<Partition> {
    Partition::new(parts).map_err(py_err)
}

fn parse_form(form: Option<&str>) -> PyResult<Option<Form>> {
    match form {
        None => Ok(None),
        Some("I") => Ok(Some(Form::I)),
        Some("II") => Ok(Some(Form::II)),
        Some(other) => Err(PyValueError::new_err(format!(
            "form must be \"I\" or \"II\", got {other:?}"
        ))),
    }
}

fn parse_orbit(lambda: Vec<u32>, form: Option<&str>) -> PyResult<OrbitLabel> {
    OrbitLabel::new(parse_partition(lambda)?, parse_form(form)?).map_err(py_err)
}

/// Recursively converts a JSON value into Python objects.
fn to_py<'py>(py: Python<'py>, value: &Value) -> PyResult<Bound<'py, PyAny>> {
    Ok(match value {
        Value::Null => PyNone::get(py).to_owned().into_any(),
        Value::Bool(b) => PyBool::new(py, *b).to_owned().into_any(),
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                i.into_pyobject(py)?.into_any()
            } else if let Some(u) = n.as_u64() {
                u.into_pyobject(py)?.into_any()
            } else {
                n.as_f64()
                    .expect("finite JSON number")
                    .into_pyobject(py)?
                    .into_any()
            }
        }
        Value::String(s) => PyString::new(py, s).into_any(),
        Value::Array(items) => {
            let list = PyList::empty(py);
            for item in items {
                list.append(to_py(py, item)?)?;
            }
            list.into_any()
        }
        Value::Object(map) => {
            let dict = PyDict::new(py);
            for (key, item) in map {
                dict.set_item(key, to_py(py, item)?)?;
            }
            dict.into_any()
        }
    })
}

fn serialize<'py, T: serde::Serialize>(py: Python<'py>, value: &T) -> PyResult<Bound<'py, PyAny>> {
    let json = serde_json::to_value(value).expect("serializable");
    to_py(py, &json)
}

#[pyfunction]
fn partitions(n: u32) -> Vec<Vec<u32>> {
    core::partition::partitions(n)
        .into_iter()
        .map(Vec::from)
        .collect()
}

#[pyfunction]
fn two_regular_partitions(n: u32) -> Vec<Vec<u32>> {
    core::partition::two_regular_partitions(n)
        .into_iter()
        .map(Vec::from)
        .collect()
}

#[pyfunction]
fn transpose(parts: Vec<u32>) -> PyResult<Vec<u32>> {
    Ok(parse_partition(parts)?.transpose().into())
}

#[pyfunction]
fn partition_stats(parts: Vec<u32>) -> PyResult<(u32, u32)> {
    let stats = parse_partition(parts)?.stats();
    Ok((stats.f, stats.g))
}

#[pyfunction]
fn dominates(a: Vec<u32>, b: Vec<u32>) -> PyResult<bool> {
    parse_partition(a)?
        .dominates(&parse_partition(b)?)
        .map_err(py_err)
}

#[pyfunction]
fn count_p(n: u32) -> u64 {
    core::partition::count_p(n)
}

#[pyfunction]
fn count_q(n: u32) -> u64 {
    core::partition::count_q(n)
}

#[pyfunction]
fn count_plk(l: u32, k: u32) -> u64 {
    core::partition::count_plk(l, k)
}

#[pyfunction]
fn q_series(degree: usize) -> Vec<BigInt> {
    core::series::product_one_plus(degree).coeffs().to_vec()
}

#[pyfunction]
fn p_series(degree: usize) -> Vec<BigInt> {
    core::series::product_inv_one_minus(degree)
        .coeffs()
        .to_vec()
}

#[pyfunction]
fn ratio_series(degree: usize) -> Vec<BigInt> {
    core::series::product_ratio(degree).coeffs().to_vec()
}

#[pyfunction]
fn verify_series_identities(degree: usize) -> bool {
    core::series::verify_partition_product_identities(degree)
}

#[pyfunction]
fn orbits(py: Python<'_>, n: u32) -> PyResult<Bound<'_, PyAny>> {
    let rows: Vec<OrbitRow> = core::census::enumerate_orbits(n)
        .map_err(py_err)?
        .iter()
        .map(OrbitRow::from)
        .collect();
    serialize(py, &rows)
}

#[pyfunction]
fn census_count(n: u32) -> PyResult<u64> {
    core::census::census_count(n).map_err(py_err)
}

#[pyfunction]
fn d_of(k: u32) -> u64 {
    core::census::d_of(k)
}

#[pyfunction]
fn e_of(k: u32) -> u64 {
    core::census::e_of(k)
}

#[pyfunction]
fn verify_census(py: Python<'_>, n: u32) -> PyResult<Bound<'_, PyAny>> {
    serialize(py, &core::census::verify_census(n).map_err(py_err)?)
}

#[pyfunction]
fn sigma(py: Python<'_>, n: u32) -> PyResult<Bound<'_, PyAny>> {
    let rows = core::sigma::enumerate_sigma(n)
        .map_err(py_err)?
        .iter()
        .map(|t| TripleRow::new(t, n))
        .collect::<Result<Vec<_>, _>>()
        .map_err(py_err)?;
    serialize(py, &rows)
}

#[pyfunction]
fn sigma_count(n: u32) -> PyResult<u64> {
    core::sigma::sigma_count(n).map_err(py_err)
}

#[pyfunction]
#[pyo3(signature = (lambda, form=None))]
fn match_orbit<'py>(
    py: Python<'py>,
    lambda: Vec<u32>,
    form: Option<&str>,
) -> PyResult<Bound<'py, PyAny>> {
    let orbit = parse_orbit(lambda, form)?;
    serialize(py, &match_output(&orbit).map_err(py_err)?)
}

#[pyfunction]
#[pyo3(signature = (lambda, form=None))]
fn full_support_count(lambda: Vec<u32>, form: Option<&str>) -> PyResult<u64> {
    Ok(core::matching::full_support_count(&parse_orbit(
        lambda, form,
    )?))
}

/// Transpose split by multiplicity parity: (even_block, odd_block) as
/// lists of (size, m) pairs for multiplicities 2m and 2m-1.
#[pyfunction]
fn decompose(lambda: Vec<u32>) -> PyResult<(Vec<(u32, u32)>, Vec<(u32, u32)>)> {
    let dec = core::matching::decompose(&parse_partition(lambda)?).map_err(py_err)?;
    Ok((dec.even_block().to_vec(), dec.odd_block().to_vec()))
}

#[pyfunction]
fn verify_partition_of_sigma(py: Python<'_>, n: u32) -> PyResult<Bound<'_, PyAny>> {
    serialize(
        py,
        &core::matching::verify_partition_of_sigma(n).map_err(py_err)?,
    )
}

#[pyfunction]
fn image_of_tau(m: u32, n: u32) -> PyResult<Vec<u32>> {
    Ok(core::geometry::image_of_tau(m, n).map_err(py_err)?.into())
}

#[pyfunction]
fn codim_a(m: u32, j: u32, n: u32) -> PyResult<i64> {
    core::geometry::codim_a(m, j, n).map_err(py_err)
}

#[pyfunction]
fn omega_k_range(m: u32, j: u32, n: u32) -> Option<(i64, i64)> {
    core::geometry::omega_k_range(m, j, n)
}

#[pyfunction]
fn omega_dim(m: u32, j: u32, n: u32, k: i64) -> PyResult<i64> {
    core::geometry::omega_dim(m, j, n, k).map_err(py_err)
}

#[pyfunction]
fn fiber_dim(m: u32, j: u32, n: u32) -> PyResult<i64> {
    core::geometry::fiber_dim(m, j, n).map_err(py_err)
}

#[pyfunction]
fn smallness(py: Python<'_>, n: u32) -> PyResult<Bound<'_, PyAny>> {
    let reports = (1..=(n / 2))
        .map(|m| core::geometry::smallness_report(m, n))
        .collect::<Result<Vec<_>, _>>()
        .map_err(py_err)?;
    serialize(py, &reports)
}

#[pyfunction]
fn induce_orbit(alpha: Vec<u32>, beta: Vec<u32>) -> PyResult<Vec<u32>> {
    let alpha = parse_partition(alpha)?;
    let beta = parse_partition(beta)?;
    let n = 2 * alpha.weight() + beta.weight();
    Ok(core::geometry::induce_orbit(&alpha, &beta, n)
        .map_err(py_err)?
        .into())
}

#[pyfunction]
fn chi(m: u32, n: u32) -> PyResult<Vec<i8>> {
    Ok(core::characters::chi(m, n)
        .map_err(py_err)?
        .values()
        .to_vec())
}

#[pyfunction]
fn character_orbit_count(n: u32) -> PyResult<u64> {
    core::characters::orbit_count_on_characters(n).map_err(py_err)
}

#[pyfunction]
fn stabilizer_flags(m: u32, n: u32) -> PyResult<(u64, bool)> {
    let flags = core::characters::stabilizer_flags(m, n).map_err(py_err)?;
    Ok((
        flags.index_in_braid_group,
        flags.stabilizer_equals_parabolic,
    ))
}

#[pyfunction]
fn composition_factors(py: Python<'_>, m: u32, n: u32) -> PyResult<Bound<'_, PyAny>> {
    serialize(
        py,
        &core::characters::composition_factors(m, n).map_err(py_err)?,
    )
}

#[pyfunction]
fn jacobian_factors(n: u32, i: u32) -> PyResult<Vec<Vec<u32>>> {
    Ok(core::characters::jacobian_factors(n, i)
        .map_err(py_err)?
        .into_iter()
        .map(Vec::from)
        .collect())
}

#[pyfunction]
fn e_label(py: Python<'_>, n: u32, i: u32, j: u32) -> PyResult<Bound<'_, PyAny>> {
    let triple = core::matching::e_label(n, i, j).map_err(py_err)?;
    serialize(py, &TripleRow::new(&triple, 2 * n + 1).map_err(py_err)?)
}

#[pyfunction]
fn tilde_e_label(py: Python<'_>, n: u32, i: u32, j: u32) -> PyResult<Bound<'_, PyAny>> {
    let triple = core::matching::tilde_e_label(n, i, j).map_err(py_err)?;
    serialize(py, &TripleRow::new(&triple, 2 * n + 1).map_err(py_err)?)
}

#[pyfunction]
fn tilde_e_support(n: u32, i: u32, j: u32) -> PyResult<Vec<u32>> {
    Ok(core::matching::tilde_e_support(n, i, j)
        .map_err(py_err)?
        .into())
}

#[pyfunction]
fn tilde_support_report(py: Python<'_>, n: u32) -> PyResult<Bound<'_, PyAny>> {
    serialize(
        py,
        &core::matching::tilde_support_report(n).map_err(py_err)?,
    )
}

#[pyfunction]
fn verify_single(py: Python<'_>, n: u32) -> PyResult<Bound<'_, PyAny>> {
    serialize(py, &core::verify::verify_single(n).map_err(py_err)?)
}

#[pyfunction]
#[pyo3(signature = (max_n=None))]
fn verify_suite(py: Python<'_>, max_n: Option<u32>) -> PyResult<Bound<'_, PyAny>> {
    serialize(py, &core::verify::default_suite(max_n))
}

#[pymodule]
fn springer_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add("__version__", env!("CARGO_PKG_VERSION"))?;
    m.add_function(wrap_pyfunction!(partitions, m)?)?;
    m.add_function(wrap_pyfunction!(two_regular_partitions, m)?)?;
    m.add_function(wrap_pyfunction!(transpose, m)?)?;
    m.add_function(wrap_pyfunction!(partition_stats, m)?)?;
    m.add_function(wrap_pyfunction!(dominates, m)?)?;
    m.add_function(wrap_pyfunction!(count_p, m)?)?;
    m.add_function(wrap_pyfunction!(count_q, m)?)?;
    m.add_function(wrap_pyfunction!(count_plk, m)?)?;
    m.add_function(wrap_pyfunction!(q_series, m)?)?;
    m.add_function(wrap_pyfunction!(p_series, m)?)?;
    m.add_function(wrap_pyfunction!(ratio_series, m)?)?;
    m.add_function(wrap_pyfunction!(verify_series_identities, m)?)?;
    m.add_function(wrap_pyfunction!(orbits, m)?)?;
    m.add_function(wrap_pyfunction!(census_count, m)?)?;
    m.add_function(wrap_pyfunction!(d_of, m)?)?;
    m.add_function(wrap_pyfunction!(e_of, m)?)?;
    m.add_function(wrap_pyfunction!(verify_census, m)?)?;
    m.add_function(wrap_pyfunction!(sigma, m)?)?;
    m.add_function(wrap_pyfunction!(sigma_count, m)?)?;
    m.add_function(wrap_pyfunction!(match_orbit, m)?)?;
    m.add_function(wrap_pyfunction!(full_support_count, m)?)?;
    m.add_function(wrap_pyfunction!(decompose, m)?)?;
    m.add_function(wrap_pyfunction!(verify_partition_of_sigma, m)?)?;
    m.add_function(wrap_pyfunction!(image_of_tau, m)?)?;
    m.add_function(wrap_pyfunction!(codim_a, m)?)?;
    m.add_function(wrap_pyfunction!(omega_k_range, m)?)?;
    m.add_function(wrap_pyfunction!(omega_dim, m)?)?;
    m.add_function(wrap_pyfunction!(fiber_dim, m)?)?;
    m.add_function(wrap_pyfunction!(smallness, m)?)?;
    m.add_function(wrap_pyfunction!(induce_orbit, m)?)?;
    m.add_function(wrap_pyfunction!(chi, m)?)?;
    m.add_function(wrap_pyfunction!(character_orbit_count, m)?)?;
    m.add_function(wrap_pyfunction!(stabilizer_flags, m)?)?;
    m.add_function(wrap_pyfunction!(composition_factors, m)?)?;
    m.add_function(wrap_pyfunction!(jacobian_factors, m)?)?;
    m.add_function(wrap_pyfunction!(e_label, m)?)?;
    m.add_function(wrap_pyfunction!(tilde_e_label, m)?)?;
    m.add_function(wrap_pyfunction!(tilde_e_support, m)?)?;
    m.add_function(wrap_pyfunction!(tilde_support_report, m)?)?;
    m.add_function(wrap_pyfunction!(verify_single, m)?)?;
    m.add_function(wrap_pyfunction!(verify_suite, m)?)?;
    Ok(())
}
