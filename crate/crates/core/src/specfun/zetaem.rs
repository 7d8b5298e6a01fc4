//! Euler-Maclaurin zeta and its s-derivative, computed together so the
//! correction-product recurrences are shared. Reflection via chi(s) for
//! sigma < -0.5, where the direct sum loses digits to cancellation.

use super::gammafn::{cdigamma, cgamma};
use crate::consts::{EM_C, LN_2PI};
use crate::error::{Error, Result};
use crate::types::Complex;

/// zeta(s) and zeta'(s). `Err(Pole)` only at s = 1 (|s-1| <= 1e-12).
pub(crate) fn zeta_and_deriv(s: Complex) -> Result<(Complex, Complex)> {
    if (s - 1.0).norm() <= 1e-12 {
        return Err(Error::Pole("zeta has its only pole at s = 1".into()));
    }
    if s.im < 0.0 {
        let (v, d) = zeta_and_deriv(s.conj())?;
        return Ok((v.conj(), d.conj()));
    }
    let pi = std::f64::consts::PI;
    if s.re < -0.5 {
        // zeta(s) = chi(s) zeta(1-s), chi = 2^s pi^{s-1} sin(pi s/2) Gamma(1-s).
        let (zv, zd) = zeta_and_deriv(Complex::new(1.0, 0.0) - s)?;
        let g = cgamma(Complex::new(1.0, 0.0) - s);
        let pref = (s * 2.0_f64.ln() + (s - 1.0) * pi.ln()).exp() * g;
        let sn = (s * (pi / 2.0)).sin();
        let chi = pref * sn;
        // chi'/chi has a cot(pi s/2) pole at even integers; this form does not.
        let chip = chi * (LN_2PI - cdigamma(Complex::new(1.0, 0.0) - s))
            + pref * (pi / 2.0) * (s * (pi / 2.0)).cos();
        return Ok((chi * zv, chip * zv - chi * zd));
    }
    let n_cut = (0.5 * s.norm()).ceil() as usize + 12;
    let n_cut = n_cut.max(18);
    let mut v = Complex::new(0.0, 0.0);
    let mut dv = Complex::new(0.0, 0.0);
    for n in 1..n_cut {
        let ln_n = (n as f64).ln();
        let t = (-s * ln_n).exp();
        v += t;
        dv -= t * ln_n;
    }
    let ln_n = (n_cut as f64).ln();
    let nms = (-s * ln_n).exp();
    let t = nms * n_cut as f64 / (s - 1.0);
    v += t;
    dv += t * (-ln_n - (s - 1.0).inv());
    v += nms * 0.5;
    dv += nms * (-0.5 * ln_n);
    // T_k = EM_C[k-1] N^{1-s-2k} prod_{j=0}^{2k-2}(s+j); break needs value
    // AND derivative small (at s=0 every value term carries a factor s).
    let mut prod = s;
    let mut dprod = Complex::new(1.0, 0.0);
    for k in 1..=30 {
        let npow = ((Complex::new((1 - 2 * k as i64) as f64, 0.0) - s) * ln_n).exp();
        let c = EM_C[k - 1];
        let term = npow * prod * c;
        let dterm = npow * (dprod - prod * ln_n) * c;
        v += term;
        dv += dterm;
        if term.norm() < 1e-18 * v.norm().max(1.0) && dterm.norm() < 1e-18 * dv.norm().max(1.0) {
            break;
        }
        let f1 = s + (2 * k - 1) as f64;
        let f2 = s + (2 * k) as f64;
        dprod = dprod * f1 * f2 + prod * (f1 + f2);
        prod = prod * f1 * f2;
    }
    Ok((v, dv))
}

pub(crate) fn zeta(s: Complex) -> Result<Complex> {
    Ok(zeta_and_deriv(s)?.0)
}
