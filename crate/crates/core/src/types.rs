use serde::Serialize;

pub use num_complex::Complex64 as Complex;

/// How a value was obtained; carried on every evaluation for diagnostics.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Series,
    EulerMaclaurin,
    Quadrature,
    ClosedForm,
    Recurrence,
}

impl std::fmt::Display for Method {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            Method::Series => "series",
            Method::EulerMaclaurin => "euler-maclaurin",
            Method::Quadrature => "quadrature",
            Method::ClosedForm => "closed-form",
            Method::Recurrence => "recurrence",
        };
        f.write_str(s)
    }
}

/// A computed complex value with an absolute-error estimate.
/// `abs_err` is a truncation/discretization bound plus a rounding heuristic;
/// it is conservative but not certified.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EvalResult {
    pub value: Complex,
    pub abs_err: f64,
    pub method: Method,
}

impl EvalResult {
    pub fn new(value: Complex, abs_err: f64, method: Method) -> Self {
        Self { value, abs_err, method }
    }

    pub fn re(&self) -> f64 {
        self.value.re
    }
}
