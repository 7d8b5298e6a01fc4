//! Riemann-Siegel theta and the large-t form of the smoothed phase density.

use crate::consts::{LN_PI, PSI_R, THETA_C};
use crate::specfun::lngamma;
use crate::types::Complex;
use std::f64::consts::PI;

/// theta(t) = arg Gamma(1/4 + it/2) - (t/2) ln pi, continuous, theta(0) = -pi/8.
/// The asymptotic series is machine-exact for t >= 10; below that the exact
/// log-Gamma form takes over.
pub(crate) fn theta(t: f64) -> f64 {
    if t < 10.0 {
        return lngamma(Complex::new(0.25, 0.5 * t)).im - 0.5 * t * LN_PI;
    }
    let mut s = 0.5 * t * (t / (2.0 * PI)).ln() - 0.5 * t - PI / 8.0;
    let t2 = t * t;
    let mut p = t;
    for c in THETA_C {
        s += c / p;
        p *= t2;
    }
    s
}

/// theta'(t) = -Psi(t)/2 where Psi is the smoothed phase density.
pub(crate) fn theta_deriv(t: f64) -> f64 {
    if t < 10.0 {
        return -0.5 * crate::specfun::psi_smooth(t);
    }
    let mut s = 0.5 * (t / (2.0 * PI)).ln();
    let t2 = t * t;
    let mut p = t2;
    for (j, c) in THETA_C.iter().enumerate() {
        s -= (2 * j + 1) as f64 * c / p;
        p *= t2;
    }
    s
}

/// Large-t expansion of Psi(t) = ln pi - Re psi(1/4 + it/2): the leading
/// -ln(t/2pi) plus the first `j_terms` reciprocal-even-power corrections.
pub(crate) fn psi_inf(t: f64, j_terms: usize) -> f64 {
    let mut s = -(t / (2.0 * PI)).ln();
    let t2 = t * t;
    let mut p = t2;
    for r in PSI_R.iter().take(j_terms) {
        s += r / p;
        p *= t2;
    }
    s
}
