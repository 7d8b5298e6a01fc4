//! Hardy's Z function and the zero finder: sign-change bracketing on a grid
//! tied to the local mean gap, bisection plus Newton polish, a gap-driven
//! rescan ladder for close pairs, and a counting-estimate audit.

use super::theta::{theta, theta_deriv};
use crate::error::{Error, Result};
use crate::specfun::{zeta, zeta_and_deriv};
use crate::types::{Complex, EvalResult, Method};
use rayon::prelude::*;
use std::f64::consts::PI;

/// Hybrid split: the rotated Euler-Maclaurin zeta below, the main-sum
/// Riemann-Siegel formula with its first correction above.
const RS_CROSSOVER: f64 = 300.0;

fn z_em(t: f64) -> f64 {
    let zv = zeta(Complex::new(0.5, t)).expect("critical line avoids the pole");
    (Complex::new(0.0, theta(t)).exp() * zv).re
}

fn z_rs(t: f64) -> f64 {
    let ax = (t / (2.0 * PI)).sqrt();
    let m = ax as i64;
    let th = theta(t);
    let mut s = 0.0;
    for n in 1..=m {
        s += (th - t * (n as f64).ln()).cos() / (n as f64).sqrt();
    }
    let mut p = ax - m as f64;
    // the correction factor has removable singularities at p = 1/4, 3/4
    if (p - 0.25).abs() < 3e-6 {
        p = 0.25 + 3e-6;
    }
    if (p - 0.75).abs() < 3e-6 {
        p = 0.75 + 3e-6;
    }
    let c0 = (2.0 * PI * (p * p - p - 1.0 / 16.0)).cos() / (2.0 * PI * p).cos();
    let sign = if m % 2 == 0 { -1.0 } else { 1.0 };
    2.0 * s + sign * c0 / ax.sqrt()
}

fn z_fast(t: f64) -> f64 {
    if t <= RS_CROSSOVER {
        z_em(t)
    } else {
        z_rs(t)
    }
}

/// Z(t) = e^{i theta(t)} zeta(1/2 + it), real by the functional equation.
pub fn riemann_siegel_z(t: f64) -> Result<EvalResult> {
    if !t.is_finite() {
        return Err(Error::Domain(format!("t must be finite, got {t}")));
    }
    let ta = t.abs();
    if ta <= RS_CROSSOVER {
        let v = z_em(ta);
        Ok(EvalResult::new(
            Complex::new(v, 0.0),
            1e-12 * (1.0 + v.abs()),
            Method::EulerMaclaurin,
        ))
    } else {
        let v = z_rs(ta);
        let err = 0.053 * (ta / (2.0 * PI)).powf(-0.75);
        Ok(EvalResult::new(Complex::new(v, 0.0), err, Method::Series))
    }
}

/// Smooth zero-count estimate (t/2pi) ln(t/2pi) - t/2pi + 7/8.
pub(crate) fn count_estimate(t: f64) -> f64 {
    if t <= 2.0 * PI {
        return 0.0;
    }
    let x = t / (2.0 * PI);
    (x * (x.ln() - 1.0) + 0.875).max(0.0)
}

fn grid_step(t: f64) -> f64 {
    // a quarter of the local mean gap
    2.0 * PI / (t.max(15.0) / (2.0 * PI)).ln() / 4.0
}

/// Newton on Z via the Euler-Maclaurin pair (zeta, zeta'), bisection fallback.
/// Brackets are certified sign changes, so this always lands inside.
fn polish(mut lo: f64, mut hi: f64) -> f64 {
    let mut flo = z_fast(lo);
    while hi - lo > 1e-3 {
        let mid = 0.5 * (lo + hi);
        let fm = z_fast(mid);
        if (fm > 0.0) == (flo > 0.0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    let mut t = 0.5 * (lo + hi);
    for _ in 0..12 {
        let (zv, zd) = match zeta_and_deriv(Complex::new(0.5, t)) {
            Ok(p) => p,
            Err(_) => break,
        };
        let phase = Complex::new(0.0, theta(t)).exp();
        let z = (phase * zv).re;
        // dZ/dt = Re[i e^{i theta} (theta' zeta + zeta')]
        let dz = -(phase * (zv * theta_deriv(t) + zd)).im;
        if dz == 0.0 {
            break;
        }
        let step = z / dz;
        t -= step;
        if !(lo - 0.5..=hi + 0.5).contains(&t) {
            // very flat spot: fall back to deep bisection of Z itself
            let (mut blo, mut bhi, mut bflo) = (lo, hi, flo);
            for _ in 0..60 {
                let mid = 0.5 * (blo + bhi);
                let fm = z_fast(mid);
                if (fm > 0.0) == (bflo > 0.0) {
                    blo = mid;
                    bflo = fm;
                } else {
                    bhi = mid;
                }
            }
            return 0.5 * (blo + bhi);
        }
        if step.abs() < 1e-10 {
            break;
        }
    }
    t
}

/// Sign-change brackets of Z on [lo, hi] with the step divided by `refine`.
fn scan_interval(lo: f64, hi: f64, refine: f64) -> Vec<(f64, f64)> {
    let mut out = Vec::new();
    let mut t = lo;
    let mut prev = z_fast(t);
    while t < hi {
        let next = (t + grid_step(t) / refine).min(hi);
        let cur = z_fast(next);
        if (cur > 0.0) != (prev > 0.0) {
            out.push((t, next));
        }
        t = next;
        prev = cur;
    }
    out
}

/// First `n` ordinates plus the largest t searched.
pub(crate) fn find_zeros(n: usize) -> Result<(Vec<f64>, f64)> {
    // first pass: walk up from below the first zero until n brackets
    let mut brackets = Vec::with_capacity(n);
    let mut t = 6.0;
    let mut prev = z_fast(t);
    while brackets.len() < n {
        let next = t + grid_step(t);
        let cur = z_fast(next);
        if (cur > 0.0) != (prev > 0.0) {
            brackets.push((t, next));
        }
        t = next;
        prev = cur;
    }
    let horizon = t;
    let mut zeros: Vec<f64> = brackets
        .par_iter()
        .map(|&(lo, hi)| polish(lo, hi))
        .collect();

    // rescan ladder: a gap worth ~2 mean spacings hides close pairs (the
    // grid sees no sign change when two zeros share a cell)
    for _ in 0..3 {
        let mut extra = Vec::new();
        for w in zeros.windows(2) {
            let expect = count_estimate(w[1]) - count_estimate(w[0]);
            if expect > 1.8 {
                for refine in [8.0, 32.0, 128.0] {
                    let found = scan_interval(w[0] + 1e-6, w[1] - 1e-6, refine);
                    if !found.is_empty() {
                        extra.extend(found.par_iter().map(|&(lo, hi)| polish(lo, hi)).collect::<Vec<_>>());
                        break;
                    }
                }
            }
        }
        if extra.is_empty() {
            break;
        }
        zeros.extend(extra);
        zeros.sort_by(f64::total_cmp);
    }
    zeros.truncate(n);

    // audit every inter-zero midpoint against the counting estimate;
    // fluctuations stay well under 1.6 in this range, a miss shifts by 2
    for (k, w) in zeros.windows(2).enumerate() {
        let mid = 0.5 * (w[0] + w[1]);
        let drift = count_estimate(mid) - (k + 1) as f64;
        if drift.abs() > 1.6 {
            return Err(Error::MissedZero(format!(
                "count audit fails at t = {mid:.6}: {} zeros found, estimate {:.3}",
                k + 1,
                count_estimate(mid)
            )));
        }
    }
    Ok((zeros, horizon))
}
