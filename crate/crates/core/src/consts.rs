//! Fixed coefficient tables for the asymptotic expansions used across the
//! library. All entries are exact f64 renderings of the rational values.

// B_{2n}/(2n(2n-1)), n=1..8 (Stirling series for ln Gamma)
pub(crate) const STIRLING: [f64; 8] = [
    0.08333333333333333,
    -0.002777777777777778,
    0.0007936507936507937,
    -0.0005952380952380953,
    0.0008417508417508417,
    -0.0019175269175269176,
    0.00641025641025641,
    -0.029550653594771242,
];

// B_{2n}/(2n), n=1..8 (digamma asymptotic)
pub(crate) const DIGAMMA_C: [f64; 8] = [
    0.08333333333333333,
    -0.008333333333333333,
    0.003968253968253968,
    -0.004166666666666667,
    0.007575757575757576,
    -0.021092796092796094,
    0.08333333333333333,
    -0.4432598039215686,
];

// B_{2k}/(2k)!, k=1..30 (Euler-Maclaurin tail)
pub(crate) const EM_C: [f64; 30] = [
    0.08333333333333333,
    -0.001388888888888889,
    3.306878306878307e-05,
    -8.267195767195768e-07,
    2.08767569878681e-08,
    -5.284190138687493e-10,
    1.3382536530684679e-11,
    -3.3896802963225827e-13,
    8.586062056277845e-15,
    -2.174868698558062e-16,
    5.5090028283602295e-18,
    -1.3954464685812522e-19,
    3.534707039629467e-21,
    -8.953517427037546e-23,
    2.267952452337683e-24,
    -5.744790668872202e-26,
    1.455172475614865e-27,
    -3.6859949406653103e-29,
    9.336734257095045e-31,
    -2.36502241570063e-32,
    5.990671762482134e-34,
    -1.5174548844682903e-35,
    3.843758125454189e-37,
    -9.736353072646691e-39,
    2.466247044200681e-40,
    -6.247076741820743e-42,
    1.5824030244644914e-43,
    -4.008273685948936e-45,
    1.0153075855569557e-46,
    -2.5718041582418717e-48,
];

// Riemann-Siegel theta asymptotic: theta(t) = (t/2)ln(t/2pi) - t/2 - pi/8
// + sum_j c_j t^{1-2j}; c_1..c_7.
pub(crate) const THETA_C: [f64; 7] = [
    0.020833333333333332,
    0.0012152777777777778,
    0.00038442460317460316,
    0.0002952938988095238,
    0.0004200533985690236,
    0.0009582953125433594,
    0.0032047369541266025,
];

// r_j = 2(2j-1) c_j: Psi_inf(t) = -ln(t/2pi) + sum_j r_j t^{-2j}.
pub(crate) const PSI_R: [f64; 7] = [
    0.041666666666666664,
    0.007291666666666667,
    0.0038442460317460315,
    0.004134114583333333,
    0.007560961174242424,
    0.021082496875953906,
    0.08332316080729167,
];

pub(crate) const EULER_GAMMA: f64 = 0.5772156649015329;
pub(crate) const LN_2PI: f64 = 1.8378770664093453;
pub(crate) const LN_PI: f64 = 1.1447298858494002;

/// Machine-heuristic rounding term added to truncation bounds:
/// `10 * eps * opcount`, per the shared error model.
pub(crate) fn round_err(opcount: usize, scale: f64) -> f64 {
    10.0 * f64::EPSILON * opcount as f64 * scale
}

// Taylor coefficients of lnGamma(1+x) after the leading -gamma x term:
// coefficient of x^k is (-1)^k zeta(k)/k, listed for k = 2..=71.
pub(crate) const LNGAMMA_TAYLOR: [f64; 70] = [
    0.8224670334241132, -0.40068563438653143, 0.27058080842778454, -0.20738555102867398,
    0.1695571769974082, -0.1440498967688461, 0.12550966952474304, -0.11133426586956469,
    0.1000994575127818, -0.09095401714582904, 0.083353840546109, -0.0769325164113522,
    0.07143294629536133, -0.06666870588242046, 0.06250095514121304, -0.058823978658684585,
    0.055555767627403614, -0.05263167937961666, 0.05000004769810169, -0.047619070330142226,
    0.04545455629320467, -0.04347826605304026, 0.04166666915034121, -0.04000000119214014,
    0.03846153903467518, -0.037037037312989324, 0.035714285847333355, -0.034482758684919304,
    0.03333333336437758, -0.03225806453115042, 0.03125000000727597, -0.030303030306558044,
    0.029411764707594344, -0.02857142857226011, 0.027777777778181998, -0.027027027027223673,
    0.02631578947377995, -0.025641025641072283, 0.025000000000022737, -0.024390243902450117,
    0.023809523809529224, -0.023255813953491015, 0.02272727272727402, -0.022222222222222855,
    0.021739130434782917, -0.021276595744681003, 0.02083333333333341, -0.02040816326530616,
    0.020000000000000018, -0.019607843137254912, 0.019230769230769235, -0.01886792452830189,
    0.01851851851851852, -0.01818181818181818, 0.017857142857142856, -0.017543859649122806,
    0.017241379310344827, -0.01694915254237288, 0.016666666666666666, -0.01639344262295082,
    0.016129032258064516, -0.015873015873015872, 0.015625, -0.015384615384615385,
    0.015151515151515152, -0.014925373134328358, 0.014705882352941176, -0.014492753623188406,
    0.014285714285714285, -0.014084507042253521,
];
