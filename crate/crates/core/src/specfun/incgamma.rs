//! Upper incomplete gamma for complex order and real positive argument,
//! built to stay finite through the Gamma poles: the continued fraction
//! carries no Gamma(nu) factor, and the small-argument side goes through an
//! expm1-stabilized form near nonpositive integer orders.

use super::expint::expint_en_principal;
use super::gammafn::{cgamma, crgamma, is_nonpositive_integer, lngamma_near_one};
use crate::types::Complex;

/// e^{-w} sum_k w^k / Gamma(nu+k+1): entire in nu, w >= 0.
/// Equals P(nu,w) w^{-nu} (regularized lower gamma with the power removed).
pub(crate) fn pscaled(nu: Complex, w: f64) -> Complex {
    let mut tot = Complex::new(0.0, 0.0);
    let mut k = 0u32;
    let mut wk = 1.0_f64;
    loop {
        let t = crgamma(nu + (k + 1) as f64) * wk;
        tot += t;
        if k > 2 && t.norm() <= 1e-18 * (tot.norm() + 1e-300) {
            break;
        }
        k += 1;
        wk *= w;
        if k > 500 {
            break;
        }
    }
    tot * (-w).exp()
}

/// Lentz continued fraction for Gamma_up(nu, w); no Gamma(nu) factor, so it
/// is entire in nu. Valid for w comfortably to the right of nu.
fn upper_cf(nu: Complex, w: f64) -> Complex {
    let tiny = 1e-290;
    let mut b = Complex::new(w + 1.0, 0.0) - nu;
    let mut f = if b.norm() > tiny { b } else { Complex::new(tiny, 0.0) };
    let mut c = f;
    let mut d = Complex::new(0.0, 0.0);
    for i in 1..600 {
        let an = -(i as f64) * (Complex::new(i as f64, 0.0) - nu);
        b += 2.0;
        d = b + an * d;
        if d.norm() < tiny {
            d = Complex::new(tiny, 0.0);
        }
        c = b + an / c;
        if c.norm() < tiny {
            c = Complex::new(tiny, 0.0);
        }
        d = d.inv();
        let delta = c * d;
        f *= delta;
        if (delta - 1.0).norm() < 1e-16 {
            break;
        }
    }
    (nu * w.ln() - w).exp() / f
}

fn cexpm1(z: Complex) -> Complex {
    if z.norm() < 1e-4 {
        z * (1.0 + z * (0.5 + z * (1.0 / 6.0 + z / 24.0)))
    } else {
        z.exp() - 1.0
    }
}

/// Gamma_up(nu, w) for |nu| < 0.5, w < 2.5: series rearranged so the
/// 1/nu pieces cancel analytically before they are evaluated.
fn gup_near_zero(nu: Complex, w: f64) -> Complex {
    let g1 = cexpm1(lngamma_near_one(nu)) / nu;
    let p1 = cexpm1(nu * w.ln()) / nu;
    let mut ssum = Complex::new(0.0, 0.0);
    let mut term = 1.0_f64;
    for k in 1..200 {
        term *= -w / k as f64;
        let t = term / (nu + k as f64);
        ssum += t;
        if t.norm() < 1e-19 {
            break;
        }
    }
    g1 - p1 - (nu * w.ln()).exp() * ssum
}

/// Unregularized upper incomplete gamma, w > 0, entire in nu.
pub(crate) fn gamma_upper(nu: Complex, w: f64) -> Complex {
    if w >= nu.re.max(0.5) + 2.0 {
        return upper_cf(nu, w);
    }
    let m = nu.re.round();
    if nu.im == 0.0 && m <= 0.0 && (nu.re - m).abs() < 1e-9 {
        // Gup(1-n, w) = w^{1-n} E_n(w), n = 1 - m
        let n = (1.0 - m) as u32;
        return Complex::new(w.powi(m as i32), 0.0) * expint_en_principal(n, Complex::new(w, 0.0));
    }
    if (nu.re - m).abs() < 0.5 && m <= 0.0 && w < 2.5 {
        // reduce to the near-zero case, then walk back down:
        // Gup(x-1) = (Gup(x) - w^{x-1} e^{-w}) / (x-1)
        let mut x = nu - m;
        let mut g = gup_near_zero(x, w);
        let ew = (-w).exp();
        while x.re > nu.re + 0.5 {
            x -= 1.0;
            g = (g - (x * w.ln()).exp() * ew) / x;
        }
        return g;
    }
    cgamma(nu) * (Complex::new(1.0, 0.0) - (nu * w.ln()).exp() * pscaled(nu, w))
}

/// Regularized Q(nu, w) = Gamma_up(nu, w)/Gamma(nu), continued to all nu
/// (vanishes at the Gamma poles).
pub(crate) fn q_reg(nu: Complex, w: f64) -> Complex {
    if is_nonpositive_integer(nu) {
        // finite Gamma_up over a Gamma pole: the ratio is identically 0
        return Complex::new(0.0, 0.0);
    }
    if w >= (2.0 * nu.re.abs() + 4.0).max(10.0) {
        return upper_cf(nu, w) * crgamma(nu);
    }
    Complex::new(1.0, 0.0) - (nu * w.ln()).exp() * pscaled(nu, w)
}
