//! Analytic continuation of G(s) = sum over zero ordinates of gamma^{-s}.
//!
//! The sum is split with a Gaussian window e^{-pi a gamma^2}: the windowed
//! zero sum stays finite, and the complement is rewritten through the explicit
//! formula as a short prime-power sum, a power series in the window width, and
//! two smooth phase integrals. The split parameter a adapts to the table so
//! that every discarded term is below e^{-50}; the result is a-independent to
//! machine precision, analytic in s, and finite at s = 0 (the completed form
//! keeps 1/Gamma factors, so the only singularities are s = 1 and the
//! negative ordinates forced by the phase expansion).

use crate::arith::von_mangoldt;
use crate::consts::{round_err, PSI_R};
use crate::error::{Error, Result};
use crate::quad::{quad_ts, quad_ts_panels};
use crate::specfun::{crgamma, ensure_finite, gamma_upper, pscaled, psi_smooth, q_reg};
use crate::types::{Complex, EvalResult, Method};
use std::f64::consts::PI;

const J_TERMS: usize = 6;

pub(crate) fn g_continued(s: Complex, gammas: &[f64]) -> Result<EvalResult> {
    ensure_finite(s)?;
    let gmax = match gammas.last() {
        Some(&g) if g >= 4.0 => g,
        _ => {
            return Err(Error::Domain(
                "continuation needs a zeros table reaching at least gamma = 4".into(),
            ))
        }
    };
    if (s - 1.0).norm() < 0.01 {
        return Err(Error::Pole(format!(
            "G has a double pole at s = 1 (evaluation at {s})"
        )));
    }
    let a = (50.0 / (PI * gmax * gmax)).clamp(0.015, 0.25);
    let c = PI * a;
    let tmax = (52.0 / c).sqrt();
    let t0 = 12.0_f64.min(0.8 * tmax);
    let half = s / 2.0;

    // windowed zero sum; the window cutoff spares nothing the table has
    let mut zsum = Complex::new(0.0, 0.0);
    for &g in gammas {
        let w = c * g * g;
        if w > 60.0 {
            break;
        }
        zsum += (-s * g.ln()).exp() * q_reg(half, w);
    }

    // prime-power complement: nonzero von Mangoldt terms up to the window edge
    let mut psum = Complex::new(0.0, 0.0);
    let mut n = 2u64;
    loop {
        let beta = (n as f64).ln().powi(2) / (4.0 * PI);
        if beta / a > 52.0 {
            break;
        }
        let lam = von_mangoldt(n);
        if lam != 0.0 {
            psum += ((s - 1.0) / 2.0 * beta.ln()).exp()
                * gamma_upper((1.0 - s) / 2.0, beta / a)
                * (lam / (n as f64).sqrt());
        }
        n += 1;
    }
    psum *= (half * PI.ln()).exp() * crgamma(half) * (-1.0 / (2.0 * PI));

    // window-width power series (entire: reciprocal Gamma throughout)
    let mut wsum = Complex::new(0.0, 0.0);
    let mut prod = Complex::new(1.0, 0.0);
    let mut fact = 1.0;
    for m in 0..30 {
        if m > 0 {
            prod *= half + (m - 1) as f64;
            fact *= m as f64;
        }
        wsum += (PI / 4.0).powi(m as i32) * ((half + m as f64) * a.ln()).exp() * prod / fact
            * crgamma(half + (m + 1) as f64);
    }
    wsum *= (half * PI.ln()).exp();

    // smooth phase integrals: exact density on [0, t0], asymptotic from t0 out,
    // with the divergent part of the asymptotic piece integrated in closed form
    let cs2 = (half * c.ln()).exp();
    let mut pts: Vec<f64> = [0.0, 2.0, 6.0, 10.0]
        .iter()
        .copied()
        .filter(|&x| x < t0)
        .collect();
    pts.push(t0);
    let (u1, e1) = quad_ts_panels(
        |t| psi_smooth(t) * cs2 * pscaled(half, c * t * t),
        &pts,
        1e-13,
    )?;
    let mut t3 = -((1.0 - s) * t0.ln()).exp()
        * ((t0 / (2.0 * PI)).ln() / (s - 1.0) + 1.0 / ((s - 1.0) * (s - 1.0)));
    for j in 1..=J_TERMS {
        let denom = s + (2 * j) as f64 - 1.0;
        if denom.norm() < 1e-9 {
            return Err(Error::Pole(format!(
                "simple pole at s = {}",
                1 - 2 * j as i64
            )));
        }
        t3 += ((1.0 - (2 * j) as f64 - s) * t0.ln()).exp() * PSI_R[j - 1] / denom;
    }
    let (u4, e4) = quad_ts(
        |t| super::theta::psi_inf(t, J_TERMS) * (-s * t.ln()).exp() * q_reg(half, c * t * t),
        t0,
        tmax,
        1e-13,
    )?;

    let g = zsum + psum + wsum - (u1 + t3 - u4) / (2.0 * PI);
    let scale = zsum.norm() + psum.norm() + wsum.norm()
        + (u1.norm() + t3.norm() + u4.norm()) / (2.0 * PI);
    let abs_err = (e1 + e4) / (2.0 * PI) + round_err(400, scale.max(g.norm()));
    Ok(EvalResult::new(g, abs_err, Method::Quadrature))
}
