//! Scalar special functions: gamma, zeta and friends on the complex plane,
//! the exponential integral family, the Jacobi-type theta sum, and the
//! completed xi. Everything downstream builds on these.

mod expint;
mod gammafn;
mod incgamma;
mod zetaem;

pub(crate) use expint::{expint_en_principal, log_branch_coeff};
pub(crate) use gammafn::{cdigamma, cgamma, crgamma, is_nonpositive_integer, lngamma};
pub(crate) use incgamma::{gamma_upper, pscaled, q_reg};
pub(crate) use zetaem::{zeta, zeta_and_deriv};

use crate::consts::{round_err, EULER_GAMMA, LN_PI};
use crate::error::{Error, Result};
use crate::types::{Complex, EvalResult, Method};

pub(crate) fn ensure_finite(s: Complex) -> Result<()> {
    if s.re.is_finite() && s.im.is_finite() {
        Ok(())
    } else {
        Err(Error::Domain("input must have finite components".into()))
    }
}

/// Gamma(s). Poles at the nonpositive integers.
pub fn gamma(s: Complex) -> Result<EvalResult> {
    ensure_finite(s)?;
    if is_nonpositive_integer(s) {
        return Err(Error::Pole(format!("gamma pole at s = {}", s.re)));
    }
    let v = cgamma(s);
    let err = v.norm() * round_err(40 + s.norm() as usize, 1.0) + 1e-300;
    Ok(EvalResult::new(v, err, Method::ClosedForm))
}

/// zeta(s) over the whole plane; the only pole is s = 1.
pub fn riemann_zeta(s: Complex) -> Result<EvalResult> {
    ensure_finite(s)?;
    let (v, _) = zeta_and_deriv(s)?;
    let ops = 120 + (0.5 * s.norm()) as usize;
    let err = 1e-17 * v.norm() + round_err(ops, v.norm().max(1.0));
    Ok(EvalResult::new(v, err, Method::EulerMaclaurin))
}

/// ln zeta(s) on the half-plane Re s > 1, branch anchored by continuity
/// from sigma -> +infinity (where ln zeta -> 0).
pub fn log_zeta(s: Complex) -> Result<EvalResult> {
    ensure_finite(s)?;
    if s.re <= 1.0 {
        return Err(Error::Domain(format!(
            "log_zeta requires Re(s) > 1 (got Re = {}); the continued prime zeta handles the strip",
            s.re
        )));
    }
    let v = ln_zeta_tracked(s)?;
    let err = 1e-14 * v.norm().max(1.0);
    Ok(EvalResult::new(v, err, Method::EulerMaclaurin))
}

/// Continued ln zeta for Re s > 0 (not at zeros / the pole): horizontal walk
/// from sigma = 3 with phase unwinding. Real axis: zeta is real and negative
/// exactly on (0,1), so the log is principal with an i*pi offset there.
pub(crate) fn ln_zeta_tracked(s: Complex) -> Result<Complex> {
    let pi = std::f64::consts::PI;
    if s.re > 2.5 && s.im.abs() < 1e-300 {
        let v = zeta(s)?.re;
        return Ok(Complex::new(v.ln(), 0.0));
    }
    if s.im == 0.0 {
        let v = zeta(s)?.re;
        if v == 0.0 {
            return Err(Error::Singular(format!("zeta vanishes at s = {}", s.re)));
        }
        return Ok(Complex::new(v.abs().ln(), if v < 0.0 { pi } else { 0.0 }));
    }
    if s.re > 2.5 {
        return Ok(zeta(s)?.ln());
    }
    let start = Complex::new(3.0, s.im);
    let mut lz = zeta(start)?.ln();
    let mut sigma = 3.0;
    let mut step = -0.25_f64;
    while sigma > s.re + 1e-15 {
        let h = step.max(s.re - sigma);
        let nxt = Complex::new(sigma + h, s.im);
        let vz = zeta(nxt)?;
        let mut cand = vz.ln();
        let k = ((lz.im - cand.im) / (2.0 * pi)).round();
        cand += Complex::new(0.0, 2.0 * pi * k);
        if (cand - lz).norm() > 1.5 {
            step = h / 2.0;
            if step.abs() < 1e-6 {
                return Err(Error::Singular(format!(
                    "log-tracking stalled near a zero of zeta approaching s = {s}"
                )));
            }
            continue;
        }
        lz = cand;
        sigma = nxt.re;
        step = -0.25;
    }
    Ok(lz)
}

/// zeta'(s)/zeta(s). Refuses points whose Newton distance |zeta/zeta'| is
/// inside `exclusion` (covers both zeros of zeta and the s = 1 pole, where
/// that distance is ~|s-1|).
pub fn zeta_log_derivative_with(s: Complex, exclusion: f64) -> Result<EvalResult> {
    ensure_finite(s)?;
    if (s - 1.0).norm() < exclusion {
        return Err(Error::Singular(format!(
            "zeta'/zeta pole at s = 1 (distance {:.3e} < exclusion {:.1e})",
            (s - 1.0).norm(),
            exclusion
        )));
    }
    let (v, d) = zeta_and_deriv(s)?;
    let newton = if d.norm() > 0.0 { (v / d).norm() } else { f64::INFINITY };
    if newton < exclusion {
        return Err(Error::Singular(format!(
            "zeta'/zeta singular: a zero of zeta lies within {newton:.3e} of s = {s}"
        )));
    }
    let ld = d / v;
    let err = 5e-13 * ld.norm().max(1.0);
    Ok(EvalResult::new(ld, err, Method::EulerMaclaurin))
}

pub fn zeta_log_derivative(s: Complex) -> Result<EvalResult> {
    zeta_log_derivative_with(s, 1e-3)
}

/// Psi(t) = 2 Re[zeta'/zeta(1/2 + it)] on the critical line.
pub fn psi_critical_with(t: f64, exclusion: f64) -> Result<EvalResult> {
    if !t.is_finite() || t < 0.0 {
        return Err(Error::Domain(format!("psi_critical needs t >= 0, got {t}")));
    }
    let r = zeta_log_derivative_with(Complex::new(0.5, t), exclusion).map_err(|e| match e {
        Error::Singular(_) => Error::Singular(format!(
            "t = {t} lies within the exclusion radius {exclusion:.1e} of a zero ordinate"
        )),
        other => other,
    })?;
    let v = 2.0 * r.value.re;
    Ok(EvalResult::new(Complex::new(v, 0.0), 2.0 * r.abs_err, Method::EulerMaclaurin))
}

pub fn psi_critical(t: f64) -> Result<EvalResult> {
    psi_critical_with(t, 1e-3)
}

/// Smooth closed form of the same Psi(t): ln pi - Re psi(1/4 + it/2).
/// The pole parts of the conjugate pair cancel, so this is C^inf in t;
/// internal quadratures use it. Agrees with `psi_critical` off the zeros.
pub(crate) fn psi_smooth(t: f64) -> f64 {
    LN_PI - cdigamma(Complex::new(0.25, 0.5 * t)).re
}

/// E_n(z) on the principal branch. The negative real axis is the branch cut;
/// use `exp_integral_en_sheet` to pick a sheet there.
pub fn exp_integral_en(n: u32, z: Complex) -> Result<EvalResult> {
    ensure_finite(z)?;
    if n == 0 {
        return Err(Error::Domain("exp_integral_en needs n >= 1".into()));
    }
    if z.norm() == 0.0 {
        if n == 1 {
            return Err(Error::Domain("E_1 diverges at z = 0".into()));
        }
        return Ok(EvalResult::new(
            Complex::new(1.0 / (n as f64 - 1.0), 0.0),
            f64::EPSILON,
            Method::ClosedForm,
        ));
    }
    if z.im == 0.0 && z.re < 0.0 {
        return Err(Error::BranchCut(format!(
            "E_{n} has its branch cut on the negative real axis (z = {}); select a sheet",
            z.re
        )));
    }
    en_result(n, z)
}

/// E_n continued onto sheet `m`: the principal value (limit from above on
/// the cut) shifted by m full counterclockwise loops of the logarithm, i.e.
/// m * (-2 pi i) * (-z)^{n-1}/(n-1)!.
pub fn exp_integral_en_sheet(n: u32, z: Complex, m: i64) -> Result<EvalResult> {
    ensure_finite(z)?;
    if n == 0 {
        return Err(Error::Domain("exp_integral_en needs n >= 1".into()));
    }
    if z.norm() == 0.0 {
        return exp_integral_en(n, z);
    }
    let mut r = en_result(n, z)?;
    if m != 0 {
        let shift = Complex::new(0.0, -2.0 * std::f64::consts::PI * m as f64)
            * log_branch_coeff(n, z);
        r.value += shift;
        r.abs_err += f64::EPSILON * shift.norm();
    }
    Ok(r)
}

fn en_result(n: u32, z: Complex) -> Result<EvalResult> {
    let v = expint_en_principal(n, z);
    let (method, ops) = if z.norm() <= 3.5 { (Method::Series, 200) } else { (Method::Recurrence, 400) };
    let scale = v.norm().max(log_branch_coeff(n, z).norm() * 4.0);
    let err = 2e-19 * (v.norm() + 1.0) + round_err(ops, scale.max(1e-300));
    Ok(EvalResult::new(v, err, method))
}

/// phi(x) = sum_{n>=1} e^{-n^2 pi x}, truncated when the next term drops
/// below 1e-18 of the running sum.
pub fn jacobi_phi(x: f64) -> Result<EvalResult> {
    if !x.is_finite() || x <= 0.0 {
        return Err(Error::Domain(format!("jacobi_phi needs x > 0, got {x}")));
    }
    let pi = std::f64::consts::PI;
    let mut sum = 0.0_f64;
    let mut n = 1u64;
    let mut next = (-pi * x).exp();
    loop {
        sum += next;
        n += 1;
        let e = -((n * n) as f64) * pi * x;
        next = if e < -745.0 { 0.0 } else { e.exp() };
        if next < 1e-18 * sum {
            break;
        }
    }
    let err = next + round_err(n as usize, sum.max(1e-300));
    Ok(EvalResult::new(Complex::new(sum, 0.0), err, Method::Series))
}

/// Completed xi(s) = (s-1) pi^{-s/2} Gamma(s/2 + 1) zeta(s): entire, and
/// symmetric under s -> 1-s. The (s-1) factor absorbs the zeta pole; right
/// at s = 1 the product (s-1) zeta(s) is continued as 1 + gamma (s-1).
pub fn completed_xi(s: Complex) -> Result<EvalResult> {
    ensure_finite(s)?;
    let sm1_zeta = if (s - 1.0).norm() < 1e-8 {
        Complex::new(1.0, 0.0) + (s - 1.0) * EULER_GAMMA
    } else {
        (s - 1.0) * zeta(s)?
    };
    let pref = (-s * 0.5 * LN_PI).exp() * cgamma(s * 0.5 + 1.0);
    let v = sm1_zeta * pref;
    let err = 5e-13 * v.norm().max(1e-300);
    Ok(EvalResult::new(v, err, Method::EulerMaclaurin))
}
