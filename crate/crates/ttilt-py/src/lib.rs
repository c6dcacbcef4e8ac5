use pyo3::prelude::*;

#[pymodule]
mod pyttilt {
    use pyo3::exceptions::{PyRuntimeError, PyValueError};
    use pyo3::prelude::*;
    use std::collections::{BTreeMap, HashMap};
    use ttilt::catalog::{self, CatalogEntry, Params};
    use ttilt::hasse::HasseOptions;
    use ttilt::reduce::central_radical_reduce;
    use ttilt::{dsl, report, Algebra, Bounds, Error, Scalar};

    fn err(e: Error) -> PyErr {
        match e {
            Error::BoundExceeded(_) | Error::UndecidedEither(_) => PyRuntimeError::new_err(e.to_string()),
            _ => PyValueError::new_err(e.to_string()),
        }
    }

    fn params(raw: Option<HashMap<String, Bound<'_, PyAny>>>) -> PyResult<Params> {
        let mut p = Params::new();
        for (k, v) in raw.unwrap_or_default() {
            let text = v.str()?.to_string();
            let s: Scalar = text.parse().map_err(|_| PyValueError::new_err(format!("bad value for {k}: {text}")))?;
            p.insert(k, s);
        }
        Ok(p)
    }

    /// `@Name` picks a catalog entry; anything else is relation source text.
    fn load(source: &str, p: &Params) -> PyResult<(String, Algebra, Option<CatalogEntry>)> {
        if let Some(name) = source.strip_prefix('@') {
            let (a, e) = catalog::get(name, p, Bounds::default()).map_err(err)?;
            return Ok((name.to_string(), a, Some(e)));
        }
        let spec = dsl::parse_with(source, p).map_err(err)?;
        let a = spec.build(Bounds::default()).map_err(err)?;
        Ok((spec.name, a, None))
    }

    /// Dimension, basis paths, completed relations and a center basis.
    #[pyfunction]
    #[pyo3(signature = (source, params=None))]
    fn basis(source: &str, params: Option<HashMap<String, Bound<'_, PyAny>>>) -> PyResult<BTreeMap<String, Py<PyAny>>> {
        let (_, a, _) = load(source, &self::params(params)?)?;
        Python::attach(|py| {
            let mut out = BTreeMap::new();
            out.insert("dim".to_string(), a.dim().into_pyobject(py)?.into_any().unbind());
            let b: Vec<String> = (0..a.dim()).map(|i| a.format_basis(i)).collect();
            out.insert("basis".to_string(), b.into_pyobject(py)?.into_any().unbind());
            out.insert("relations".to_string(), a.relation_strings().into_pyobject(py)?.into_any().unbind());
            let c: Vec<String> = a.center_basis().iter().map(|z| a.format_elem(z)).collect();
            out.insert("center".to_string(), c.into_pyobject(py)?.into_any().unbind());
            Ok(out)
        })
    }

    /// Enumerate two-term silting complexes; returns the JSON run report.
    #[pyfunction]
    #[pyo3(signature = (source, params=None, max_nodes=None))]
    fn hasse(
        source: &str,
        params: Option<HashMap<String, Bound<'_, PyAny>>>,
        max_nodes: Option<usize>,
    ) -> PyResult<String> {
        let (name, a, entry) = load(source, &self::params(params)?)?;
        let mut opts = HasseOptions::default();
        if let Some(n) = max_nodes {
            opts.max_nodes = n;
        }
        let (mut rep, _) = report::run(&name, &a, entry.as_ref(), &opts).map_err(err)?;
        rep.timing_ms = None;
        Ok(rep.to_json())
    }

    /// Graphviz source for the Hasse quiver of a finite enumeration.
    #[pyfunction]
    #[pyo3(signature = (source, params=None))]
    fn hasse_dot(source: &str, params: Option<HashMap<String, Bound<'_, PyAny>>>) -> PyResult<String> {
        let (name, a, entry) = load(source, &self::params(params)?)?;
        let (_, g) = report::run(&name, &a, entry.as_ref(), &HasseOptions::default()).map_err(err)?;
        let g = g.ok_or_else(|| PyRuntimeError::new_err("no graph: bound exceeded"))?;
        Ok(report::to_dot(&name, &g))
    }

    /// Killed elements and resulting dimension, one pair per step.
    #[pyfunction]
    #[pyo3(signature = (source, params=None))]
    fn reduce(source: &str, params: Option<HashMap<String, Bound<'_, PyAny>>>) -> PyResult<Vec<(Vec<String>, usize)>> {
        let (_, a, _) = load(source, &self::params(params)?)?;
        let t = central_radical_reduce(&a).map_err(err)?;
        Ok(t.steps.into_iter().map(|s| (s.killed_text, s.dim)).collect())
    }

    #[pyfunction]
    fn catalog_list() -> BTreeMap<String, Vec<String>> {
        catalog::list().into_iter().map(|(t, names)| (t.to_string(), names)).collect()
    }
}
