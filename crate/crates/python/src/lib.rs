//! Python bindings: the automaton engine, the numeration oracles, and the
//! synthesized relations, with digit words as plain `list[int]` (lsd first).

use std::sync::OnceLock;

use num_bigint::BigUint;
use pyo3::exceptions::{PyRuntimeError, PyValueError};
use pyo3::prelude::*;

use fibnum::automata::{DigitWord, MultiTrackAutomaton};
use fibnum::format::{export_dot, export_native, import_native};
use fibnum::numeration;
use fibnum::synthesis::{self, Synthesized};
use fibnum::verify;

fn err(e: fibnum::Error) -> PyErr {
    match e {
        fibnum::Error::Parse { .. } | fibnum::Error::InvalidWord { .. } => {
            PyValueError::new_err(e.to_string())
        }
        other => PyRuntimeError::new_err(other.to_string()),
    }
}

fn synthesized() -> PyResult<&'static Synthesized> {
    static S: OnceLock<Synthesized> = OnceLock::new();
    if S.get().is_none() {
        let built = Synthesized::build_all().map_err(err)?;
        let _ = S.set(built);
    }
    Ok(S.get().unwrap())
}

/// A minimized-on-demand multi-track DFA over digit tuples.
#[pyclass(name = "Automaton", frozen)]
#[derive(Clone)]
struct PyAutomaton {
    inner: MultiTrackAutomaton,
}

#[pymethods]
impl PyAutomaton {
    /// Parse the native text format.
    #[staticmethod]
    fn from_native(text: &str) -> PyResult<Self> {
        Ok(PyAutomaton {
            inner: import_native(text).map_err(err)?,
        })
    }

    /// Track alphabets, one digit list per track.
    #[getter]
    fn tracks(&self) -> Vec<Vec<u8>> {
        self.inner
            .tracks()
            .iter()
            .map(|a| a.digits().to_vec())
            .collect()
    }

    #[getter]
    fn live_states(&self) -> usize {
        self.inner.live_state_count()
    }

    #[getter]
    fn total_states(&self) -> usize {
        self.inner.total_state_count()
    }

    /// Test a word: one digit row per track, all rows the same length.
    fn accepts(&self, rows: Vec<Vec<u8>>) -> PyResult<bool> {
        let refs: Vec<&[u8]> = rows.iter().map(|r| r.as_slice()).collect();
        let w = DigitWord::from_rows(&refs).map_err(err)?;
        self.inner.accepts(&w).map_err(err)
    }

    fn minimize(&self) -> Self {
        PyAutomaton {
            inner: self.inner.minimize(),
        }
    }

    fn complement(&self) -> Self {
        PyAutomaton {
            inner: self.inner.complement(),
        }
    }

    fn intersect(&self, other: &PyAutomaton) -> PyResult<Self> {
        Ok(PyAutomaton {
            inner: self.inner.intersect(&other.inner).map_err(err)?,
        })
    }

    fn union(&self, other: &PyAutomaton) -> PyResult<Self> {
        Ok(PyAutomaton {
            inner: self.inner.union(&other.inner).map_err(err)?,
        })
    }

    fn equivalent(&self, other: &PyAutomaton) -> PyResult<bool> {
        self.inner.equivalent(&other.inner).map_err(err)
    }

    fn is_empty(&self) -> bool {
        self.inner.is_empty()
    }

    /// Complete the inputs (`None` marks the single free track) to all
    /// accepted tuples; outputs are canonical (no trailing zeros).
    fn apply(&self, inputs: Vec<Option<Vec<u8>>>) -> PyResult<Vec<Vec<u8>>> {
        let refs: Vec<Option<&[u8]>> = inputs.iter().map(|o| o.as_deref()).collect();
        synthesis::apply_relation(&self.inner, &refs).map_err(err)
    }

    fn to_native(&self) -> String {
        export_native(&self.inner)
    }

    fn to_dot(&self, name: &str) -> String {
        export_dot(&self.inner, name)
    }

    fn __repr__(&self) -> String {
        format!(
            "Automaton(tracks={}, live_states={})",
            self.inner.tracks().len(),
            self.inner.live_state_count()
        )
    }
}

/// Synthesize a named automaton (zeckval, cgval, cgadd, fibcg, cgrep, …).
#[pyfunction]
fn synth(name: &str) -> PyResult<PyAutomaton> {
    Ok(PyAutomaton {
        inner: synthesis::synth_by_name(name).map_err(err)?,
    })
}

/// Zeckendorf digits of n, lsd first.
#[pyfunction]
fn zeck_encode(n: BigUint) -> Vec<u8> {
    numeration::zeck_encode(&n)
}

/// Chung-Graham digits of n, lsd first.
#[pyfunction]
fn cg_encode(n: BigUint) -> PyResult<Vec<u8>> {
    synthesis::cg_encode_via(&synthesized()?.fibcg, &n).map_err(err)
}

/// Value of a digit string under shifted Fibonacci weights F_{i+2+shift}.
#[pyfunction]
#[pyo3(signature = (digits, shift = 0))]
fn decode(digits: Vec<u8>, shift: usize) -> BigUint {
    numeration::value(&digits, shift)
}

#[pyfunction]
fn zeck_valid(digits: Vec<u8>) -> bool {
    numeration::zeck_valid(&digits)
}

#[pyfunction]
fn cg_valid(digits: Vec<u8>) -> bool {
    numeration::cg_valid(&digits)
}

/// Split a Chung-Graham word into its two Zeckendorf parts (digitwise
/// 0→(0,0), 1→(0,1), 2→(1,1)).
#[pyfunction]
fn cg_split(digits: Vec<u8>) -> PyResult<(Vec<u8>, Vec<u8>)> {
    numeration::cg_split(&digits).map_err(err)
}

/// Exact ⌊φ·n⌋ via integer square root.
#[pyfunction]
fn phi_floor(n: BigUint) -> BigUint {
    numeration::phi_floor(&n)
}

/// Run the full verification suite; returns (all_passed, report_lines).
#[pyfunction]
#[pyo3(signature = (max_n = None))]
fn run_verification(max_n: Option<u64>) -> PyResult<(bool, Vec<String>)> {
    let report = verify::run_all(&verify::VerifyOptions {
        max_n,
        golden_dir: None,
    });
    let mut buf = Vec::new();
    report
        .write(&mut buf)
        .map_err(|e| PyRuntimeError::new_err(e.to_string()))?;
    let lines = String::from_utf8_lossy(&buf)
        .lines()
        .map(str::to_string)
        .collect();
    Ok((report.all_passed(), lines))
}

#[pymodule]
fn fibnum_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyAutomaton>()?;
    m.add_function(wrap_pyfunction!(synth, m)?)?;
    m.add_function(wrap_pyfunction!(zeck_encode, m)?)?;
    m.add_function(wrap_pyfunction!(cg_encode, m)?)?;
    m.add_function(wrap_pyfunction!(decode, m)?)?;
    m.add_function(wrap_pyfunction!(zeck_valid, m)?)?;
    m.add_function(wrap_pyfunction!(cg_valid, m)?)?;
    m.add_function(wrap_pyfunction!(cg_split, m)?)?;
    m.add_function(wrap_pyfunction!(phi_floor, m)?)?;
    m.add_function(wrap_pyfunction!(run_verification, m)?)?;
    m.add("SYNTH_NAMES", synthesis::SYNTH_NAMES.to_vec())?;
    Ok(())
}
