//! Complex ln-gamma, gamma, reciprocal gamma, digamma. Stirling series for
//! Re z >= 8, downward recurrence below, reflection across Re z = 1/2.

use crate::consts::{DIGAMMA_C, EULER_GAMMA, LNGAMMA_TAYLOR, LN_2PI, STIRLING};
use crate::types::Complex;

pub(crate) fn is_nonpositive_integer(z: Complex) -> bool {
    z.im == 0.0 && z.re <= 0.0 && z.re == z.re.round()
}

/// ln Gamma(z) up to an integer multiple of 2*pi*i (exact branch is not
/// needed by any caller: everything downstream exponentiates or differences).
/// Poles return +infinity on the real part.
pub(crate) fn lngamma(z: Complex) -> Complex {
    if z.re < 0.5 {
        if is_nonpositive_integer(z) {
            return Complex::new(f64::INFINITY, 0.0);
        }
        let pi = std::f64::consts::PI;
        return Complex::new(pi.ln(), 0.0)
            - (z * pi).sin().ln()
            - lngamma(Complex::new(1.0, 0.0) - z);
    }
    let mut z = z;
    let mut shift = Complex::new(0.0, 0.0);
    while z.re < 8.0 {
        shift += z.ln();
        z += 1.0;
    }
    let zi = z.inv();
    let zi2 = zi * zi;
    let mut s = Complex::new(0.0, 0.0);
    let mut p = zi;
    for c in STIRLING {
        s += p * c;
        p *= zi2;
    }
    (z - 0.5) * z.ln() - z + 0.5 * LN_2PI + s - shift
}

pub(crate) fn cgamma(z: Complex) -> Complex {
    lngamma(z).exp()
}

/// ln Gamma(1+x) with full relative accuracy near the zero at x = 0, where
/// the shifted Stirling route only delivers absolute accuracy. Taylor series
/// for |x| <= 0.6, general route beyond.
pub(crate) fn lngamma_near_one(x: Complex) -> Complex {
    if x.norm() > 0.6 {
        return lngamma(x + 1.0);
    }
    let mut s = Complex::new(0.0, 0.0);
    let mut p = x * x;
    for c in LNGAMMA_TAYLOR {
        let t = p * c;
        s += t;
        if t.norm() < 1e-19 * s.norm().max(1e-300) {
            break;
        }
        p *= x;
    }
    s - x * EULER_GAMMA
}

/// 1/Gamma(z): entire, vanishes at nonpositive integers.
pub(crate) fn crgamma(z: Complex) -> Complex {
    if z.re < 0.5 {
        let pi = std::f64::consts::PI;
        return (z * pi).sin() / pi * lngamma(Complex::new(1.0, 0.0) - z).exp();
    }
    (-lngamma(z)).exp()
}

pub(crate) fn cdigamma(z: Complex) -> Complex {
    if z.re < 0.5 {
        let pi = std::f64::consts::PI;
        return cdigamma(Complex::new(1.0, 0.0) - z) - pi / (z * pi).tan();
    }
    let mut z = z;
    let mut acc = Complex::new(0.0, 0.0);
    while z.re < 8.0 {
        acc -= z.inv();
        z += 1.0;
    }
    let zi = z.inv();
    let zi2 = zi * zi;
    let mut s = z.ln() - zi * 0.5;
    let mut p = zi2;
    for c in DIGAMMA_C {
        s -= p * c;
        p *= zi2;
    }
    s + acc
}
