//! Python module `cylindric`.
//!
//! ```python
//! import cylindric
//! lam = cylindric.CylindricPartition([[7, 4, 4, 3], [6, 5, 4]], [1, 1])
//! pair = cylindric.forward(lam)
//! pair.mu, pair.beta            # ([5, 5, 4, 3, 3, 3, 2], [7, 1])
//! cylindric.series("f11", 4)    # [1, 2, 3, 6, 10]
//! ```

use cylindric_core::bijection::{self, BijectionError, DependencyRule, Flavor};
use cylindric_core::identities::{self, run_check, VerifyConfig};
use cylindric_core::qseries::{TrackedPoly, TruncatedSeries};
use cylindric_core::{enumerate, partition, PartFilter};
use num_bigint::BigInt;
use pyo3::create_exception;
use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

create_exception!(cylindric, NotInImageError, PyValueError);

fn invalid(e: impl ToString) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn bijection_err(e: BijectionError) -> PyErr {
    match e {
        BijectionError::NotInImage { .. } => NotInImageError::new_err(e.to_string()),
        other => invalid(other),
    }
}

fn profile(entries: Vec<usize>) -> PyResult<partition::Profile> {
    partition::Profile::new(entries).map_err(invalid)
}

fn filter(name: &str) -> PyResult<PartFilter> {
    name.parse().map_err(invalid)
}

fn flavor(name: &str) -> PyResult<Flavor> {
    serde_json::from_value(serde_json::Value::String(name.to_string()))
        .map_err(|_| invalid(format!("unknown flavor {name:?}")))
}

fn parts(p: &partition::Partition) -> Vec<u64> {
    p.parts().to_vec()
}

#[pyclass(frozen, eq, skip_from_py_object, module = "cylindric")]
#[derive(Clone, PartialEq)]
pub struct CylindricPartition(partition::CylindricPartition);

#[pymethods]
impl CylindricPartition {
    #[new]
    fn new(rows: Vec<Vec<i64>>, profile_entries: Vec<usize>) -> PyResult<Self> {
        let p = profile(profile_entries)?;
        partition::CylindricPartition::validate(&rows, &p)
            .map(Self)
            .map_err(invalid)
    }

    #[getter]
    fn rows(&self) -> Vec<Vec<u64>> {
        self.0.to_rows()
    }

    #[getter]
    fn profile(&self) -> Vec<usize> {
        self.0.profile().entries().to_vec()
    }

    #[getter]
    fn weight(&self) -> u64 {
        self.0.weight()
    }

    #[getter]
    fn max_part(&self) -> u64 {
        self.0.max_part()
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.0).expect("serializable")
    }

    #[staticmethod]
    fn from_json(s: &str) -> PyResult<Self> {
        serde_json::from_str(s).map(Self).map_err(invalid)
    }

    fn __repr__(&self) -> String {
        format!("CylindricPartition({:?}, {:?})", self.rows(), self.profile())
    }
}

#[pyclass(frozen, eq, skip_from_py_object, module = "cylindric")]
#[derive(Clone, PartialEq)]
pub struct PartitionPair(bijection::PartitionPair);

#[pymethods]
impl PartitionPair {
    #[new]
    #[pyo3(signature = (mu, beta, flavor_name = "distinct-odd"))]
    fn new(mu: Vec<i64>, beta: Vec<i64>, flavor_name: &str) -> PyResult<Self> {
        let mu = partition::Partition::from_signed(&mu).map_err(invalid)?;
        let beta = partition::Partition::from_signed(&beta).map_err(invalid)?;
        Ok(Self(bijection::PartitionPair::new(mu, beta, flavor(flavor_name)?)))
    }

    #[getter]
    fn mu(&self) -> Vec<u64> {
        parts(&self.0.mu)
    }

    #[getter]
    fn beta(&self) -> Vec<u64> {
        parts(&self.0.beta)
    }

    #[getter]
    fn flavor(&self) -> String {
        self.0.flavor.to_string()
    }

    #[getter]
    fn effective_weight(&self) -> u64 {
        self.0.effective_weight()
    }

    fn to_json(&self) -> String {
        serde_json::to_string(&self.0).expect("serializable")
    }

    fn __repr__(&self) -> String {
        format!("PartitionPair({:?}, {:?}, {:?})", self.mu(), self.beta(), self.flavor())
    }
}

/// All cylindric partitions of one weight, in canonical order.
#[pyfunction]
#[pyo3(signature = (profile_entries, weight, part_filter = "none"))]
fn enumerate_cylindric(
    profile_entries: Vec<usize>,
    weight: u64,
    part_filter: &str,
) -> PyResult<Vec<CylindricPartition>> {
    let p = profile(profile_entries)?;
    Ok(enumerate::enumerate_cylindric(&p, weight, filter(part_filter)?)
        .into_iter()
        .map(CylindricPartition)
        .collect())
}

#[pyfunction]
#[pyo3(signature = (profile_entries, max_weight, part_filter = "none"))]
fn count_sequence(profile_entries: Vec<usize>, max_weight: u64, part_filter: &str) -> PyResult<Vec<u64>> {
    let p = profile(profile_entries)?;
    Ok(enumerate::count_sequence(&p, max_weight, filter(part_filter)?))
}

/// Forward map; the flavor defaults to the one matching the profile.
#[pyfunction]
#[pyo3(signature = (lam, odd = false))]
fn forward(lam: &CylindricPartition, odd: bool) -> PyResult<PartitionPair> {
    let f = match (odd, lam.0.profile().entries()) {
        (false, [2, 0]) => Flavor::DistinctEven,
        (false, _) => Flavor::DistinctOdd,
        (true, _) => Flavor::DoubledOdd,
    };
    bijection::forward(&lam.0, f)
        .map(|(p, _)| PartitionPair(p))
        .map_err(bijection_err)
}

#[pyfunction]
#[pyo3(signature = (pair, strict = false))]
fn inverse(pair: &PartitionPair, strict: bool) -> PyResult<CylindricPartition> {
    let out = if pair.0.flavor == Flavor::DoubledOdd {
        let rule = if strict { DependencyRule::Exactly } else { DependencyRule::AtMost };
        bijection::inverse_odd_11_with(&pair.0, rule)
    } else {
        bijection::inverse(&pair.0)
    };
    out.map(|(lam, _)| CylindricPartition(lam)).map_err(bijection_err)
}

fn ints(s: TruncatedSeries<BigInt>) -> Vec<BigInt> {
    s.coeffs().to_vec()
}

fn polys(s: TruncatedSeries<TrackedPoly>) -> Vec<Vec<BigInt>> {
    s.coeffs().iter().map(|p| p.coeffs().to_vec()).collect()
}

/// Coefficients of a named univariate series up to `q^order`.
#[pyfunction]
#[pyo3(signature = (name, order, profile_entries = None))]
fn series(name: &str, order: usize, profile_entries: Option<Vec<usize>>) -> PyResult<Vec<BigInt>> {
    Ok(match name {
        "borodin" => {
            let p = profile(profile_entries.unwrap_or_else(|| vec![1, 1]))?;
            ints(identities::borodin_series(&p, order))
        }
        "f11" => ints(identities::f11_closed(order)),
        "f20" => ints(identities::f20_closed(order)),
        "d11" => ints(identities::d11_series(order)),
        "d20" => ints(identities::d20_series(order)),
        "oc" => ints(identities::oc_two_sum(order)),
        other => return Err(invalid(format!("unknown univariate series {other:?}"))),
    })
}

/// `result[n][m]` is the coefficient of `v^m q^n`.
#[pyfunction]
fn bivariate_series(name: &str, order: usize) -> PyResult<Vec<Vec<BigInt>>> {
    Ok(match name {
        "f11z" => polys(identities::f11_bivariate(order)),
        "d11t" => polys(identities::d11_bivariate(order)),
        "d20t" => polys(identities::d20_bivariate(order)),
        other => return Err(invalid(format!("unknown bivariate series {other:?}"))),
    })
}

/// `(identity, passed, order, first differing index)` per check.
#[pyfunction]
#[pyo3(signature = (check = "all", order = None))]
fn verify(check: &str, order: Option<usize>) -> PyResult<Vec<(String, bool, usize, Option<usize>)>> {
    let cfg = order.map_or_else(VerifyConfig::default, VerifyConfig::with_order);
    let reports = run_check(check, &cfg).map_err(invalid)?;
    Ok(reports
        .into_iter()
        .map(|r| (r.identity, r.pass, r.order, r.first_diff.map(|d| d.index)))
        .collect())
}

/// Rows `(n, series, enumeration, pairs, strict pairs)` of the all-odd table.
#[pyfunction]
fn oc_table(max_weight: u64) -> Vec<(u64, u64, u64, u64, u64)> {
    identities::oc_vs_enumeration(max_weight)
        .rows
        .into_iter()
        .map(|r| (r.n, r.series, r.enumeration, r.image, r.strict))
        .collect()
}

#[pymodule]
fn cylindric(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<CylindricPartition>()?;
    m.add_class::<PartitionPair>()?;
    m.add("NotInImageError", m.py().get_type::<NotInImageError>())?;
    m.add_function(wrap_pyfunction!(enumerate_cylindric, m)?)?;
    m.add_function(wrap_pyfunction!(count_sequence, m)?)?;
    m.add_function(wrap_pyfunction!(forward, m)?)?;
    m.add_function(wrap_pyfunction!(inverse, m)?)?;
    m.add_function(wrap_pyfunction!(series, m)?)?;
    m.add_function(wrap_pyfunction!(bivariate_series, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(oc_table, m)?)?;
    Ok(())
}
