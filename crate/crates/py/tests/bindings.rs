use std::ffi::CString;

use pyo3::prelude::*;
use pyo3::types::PyModule;

fn with_module(code: &str) -> PyResult<()> {
    Python::initialize();
    Python::attach(|py| {
        let m = PyModule::new(py, "pynsfam")?;
        pynsfam::pynsfam(&m)?;
        let globals = pyo3::types::PyDict::new(py);
        globals.set_item("pynsfam", m)?;
        py.run(&CString::new(code).unwrap(), Some(&globals), None)
    })
}

#[test]
fn classes_and_lattice() {
    with_module(
        r#"
h = pynsfam.DivClass.parse("3e0-e1-e2-e3-e4-e5")
assert h.self_intersection() == 4
assert len(pynsfam.classes(h, 1, -1)) == 16
m = pynsfam.RationalMap(["x0", "x1", "x2"])
s = pynsfam.Surface.analyze(m)
assert str(s.h) == "e0" and s.field is None
"#,
    )
    .unwrap();
}

#[test]
fn errors_surface_as_exceptions() {
    let r = with_module(r#"pynsfam.RationalMap(["x0^2", "x1"])"#);
    Python::attach(|py| assert!(r.unwrap_err().get_type(py).name().unwrap() == "NsfamError"));
}
