//! Explicit constants and bound polynomials for the distance/cover
//! inequalities, evaluated as pure arithmetic.
//!
//! Everything here is a function of the surface signature (through
//! `|chi|` and closed/punctured) and a handful of universal hyperbolic
//! constants. Polynomials like `A1` blow past the f64 range at moderate
//! `|chi|`, so each polynomial value is computed in log domain first and
//! reported as a (value, log10) pair.

use crate::{Error, Result, SurfaceSig};
use serde::Serialize;
use std::f64::consts::PI;

/// Lower bound for the 3-dimensional Margulis constant. We use the floor
/// itself; this is conservative for every quantity derived from it.
pub const EPS3: f64 = 0.104;

/// Coefficient in the tube-depth estimate `F(mu) = arccosh(EPS3 / sqrt(TUBE_DEPTH_COEFF * mu)) - TUBE_DEPTH_OFFSET`.
pub const TUBE_DEPTH_COEFF: f64 = 7.256;

/// Additive offset in the tube-depth estimate.
pub const TUBE_DEPTH_OFFSET: f64 = 0.0424;

/// Area of a hyperbolic disk of radius `r`.
pub fn vol2(r: f64) -> Result<f64> {
    if !(r >= 0.0) {
        return Err(Error::domain("vol2", format!("radius {r} must be >= 0")));
    }
    Ok(4.0 * PI * (r / 2.0).sinh().powi(2))
}

/// Volume of a hyperbolic 3-ball of radius `r`.
///
/// Uses the series for `sinh(2r) - 2r` at small radius, where the direct
/// difference loses most of its significant digits.
pub fn vol3(r: f64) -> Result<f64> {
    if !(r >= 0.0) {
        return Err(Error::domain("vol3", format!("radius {r} must be >= 0")));
    }
    Ok(PI * sinh_minus_x(2.0 * r))
}

/// `sinh(x) - x`, accurate for all x >= 0.
fn sinh_minus_x(x: f64) -> f64 {
    if x < 0.5 {
        // sum x^(2k+1)/(2k+1)! from k = 1; converges fast for x < 0.5
        let x2 = x * x;
        let mut term = x * x2 / 6.0;
        let mut sum = 0.0;
        let mut k = 1.0;
        while term > sum * f64::EPSILON || sum == 0.0 {
            sum += term;
            term *= x2 / ((2.0 * k + 2.0) * (2.0 * k + 3.0));
            k += 1.0;
            if k > 40.0 {
                break;
            }
        }
        sum
    } else {
        x.sinh() - x
    }
}

/// Length bound for the shortest essential loop through a point of a
/// closed hyperbolic surface: `4 asinh(sqrt(|chi|/2))`.
pub fn ell_s(chi_abs: u64) -> Result<f64> {
    if chi_abs < 1 {
        return Err(Error::domain("ell_s", "|chi| must be at least 1"));
    }
    let x = chi_abs as f64;
    Ok(4.0 * (x / 2.0).sqrt().asinh())
}

/// Simplified upper bound for [`ell_s`]: `4 log(2 sqrt(|chi|))`.
pub fn ell_s_bound(chi_abs: u64) -> f64 {
    4.0 * (2.0 * (chi_abs as f64).sqrt()).ln()
}

/// Length bound for an essential loop through any point of the
/// delta-thick part of a finite-area hyperbolic surface:
/// `2 log(1/delta) + ell_S + 4 log(pi |chi|) + 6`.
pub fn l_s_delta(chi_abs: u64, delta: f64) -> Result<f64> {
    if !(delta > 0.0 && delta <= 1.0) {
        return Err(Error::domain(
            "l_s_delta",
            format!("delta {delta} must lie in (0, 1]"),
        ));
    }
    let x = chi_abs as f64;
    Ok(2.0 * (1.0 / delta).ln() + ell_s(chi_abs)? + 4.0 * (PI * x).ln() + 6.0)
}

/// Simplified upper bound for [`l_s_delta`]:
/// `2 log(1/delta) + 6 log(pi |chi|) + 9`.
pub fn l_s_delta_bound(chi_abs: u64, delta: f64) -> f64 {
    let x = chi_abs as f64;
    2.0 * (1.0 / delta).ln() + 6.0 * (PI * x).ln() + 9.0
}

/// The per-surface loop-length constant `L_S`: `ell_S` for closed
/// surfaces, `L_{S,EPS3}` for punctured ones.
pub fn l_s(sig: SurfaceSig) -> f64 {
    let chi = sig.chi_abs();
    if sig.is_closed() {
        ell_s(chi).expect("chi_abs >= 2")
    } else {
        l_s_delta(chi, EPS3).expect("EPS3 in (0,1]")
    }
}

/// Ceiling for the punctured-case `L_S`: `6 log(pi |chi|) + 14`.
pub fn l_s_punctured_ceiling(chi_abs: u64) -> f64 {
    6.0 * (PI * chi_abs as f64).ln() + 14.0
}

/// Lower bound for the distance from a deep Margulis tube to the tube
/// boundary: `arccosh(EPS3 / sqrt(7.256 mu)) - 0.0424`, decreasing in mu.
pub fn f_of_mu(mu: f64) -> Result<f64> {
    let max = EPS3 * EPS3 / TUBE_DEPTH_COEFF;
    if !(mu > 0.0 && mu <= max) {
        return Err(Error::domain(
            "f_of_mu",
            format!("mu {mu} must lie in (0, {max}] so the arccosh argument is >= 1"),
        ));
    }
    Ok((EPS3 / (TUBE_DEPTH_COEFF * mu).sqrt()).acosh() - TUBE_DEPTH_OFFSET)
}

/// The surface-dependent thinness threshold, defined by
/// `F(eps_S) = L_S / 2`:
/// `eps_S = EPS3^2 / (7.256 cosh^2(L_S/2 + 0.0424))`.
pub fn epsilon_s(sig: SurfaceSig) -> f64 {
    let l = l_s(sig);
    EPS3 * EPS3 / (TUBE_DEPTH_COEFF * (l / 2.0 + TUBE_DEPTH_OFFSET).cosh().powi(2))
}

/// Closed-case floor for [`epsilon_s`]: `1 / (e^10 |chi|^2)`.
pub fn epsilon_s_floor_closed(chi_abs: u64) -> f64 {
    let x = chi_abs as f64;
    (-10.0 - 2.0 * x.ln()).exp()
}

/// Punctured-case floor for [`epsilon_s`]: `1 / (e^20 pi^6 |chi|^6)`.
pub fn epsilon_s_floor_punctured(chi_abs: u64) -> f64 {
    let x = chi_abs as f64;
    (-20.0 - 6.0 * PI.ln() - 6.0 * x.ln()).exp()
}

/// Bound for the number of homotopy classes of loops of length < L based
/// at a point of the delta-thick part: `Vol3(L + delta) / Vol3(delta)`.
pub fn p_bound(l: f64, delta: f64) -> Result<f64> {
    if !(l >= 1.0) {
        return Err(Error::domain("p_bound", format!("L {l} must be >= 1")));
    }
    if !(delta > 0.0 && delta <= 1.0) {
        return Err(Error::domain(
            "p_bound",
            format!("delta {delta} must lie in (0, 1]"),
        ));
    }
    Ok(vol3(l + delta)? / vol3(delta)?)
}

/// Relaxation of [`p_bound`]: `sinh(2(L + delta)) / delta^3`.
pub fn p_bound_relaxed(l: f64, delta: f64) -> f64 {
    (2.0 * (l + delta)).sinh() / delta.powi(3)
}

/// Universal curve-graph distance bound between two loops shorter than
/// `L_S`, with the sharper piecewise values.
pub fn d_const(sig: SurfaceSig) -> u32 {
    let chi = sig.chi_abs();
    if sig.is_closed() {
        if chi < 8 {
            20
        } else {
            10
        }
    } else if chi < 10 {
        104
    } else {
        92
    }
}

/// The coarse value of the same constant as consumed by the `A1`
/// polynomial: 20 for closed surfaces, 104 in general.
pub fn d_used(sig: SurfaceSig) -> u32 {
    if sig.is_closed() {
        20
    } else {
        104
    }
}

/// A positive quantity reported both linearly and in log10, for values
/// that overflow f64 at large `|chi|`.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct LogValue {
    /// Linear value; `inf` when the quantity exceeds f64 range.
    pub value: f64,
    /// Natural log, always finite.
    pub ln: f64,
    /// Base-10 log, always finite.
    pub log10: f64,
}

impl LogValue {
    fn from_ln(ln: f64) -> Self {
        LogValue {
            value: ln.exp(),
            ln,
            log10: ln / std::f64::consts::LN_10,
        }
    }
}

/// ln of the polynomial `A1`: `20 e^44 x^10` closed, `104 e^94 pi^30 x^30` punctured.
fn ln_a1(chi_abs: u64, closed: bool) -> f64 {
    let x = chi_abs as f64;
    if closed {
        20f64.ln() + 44.0 + 10.0 * x.ln()
    } else {
        104f64.ln() + 94.0 + 30.0 * PI.ln() + 30.0 * x.ln()
    }
}

/// ln of the polynomial `A2`: `4 e^10 pi x^3` closed, `4 e^20 pi^7 x^7` punctured.
fn ln_a2(chi_abs: u64, closed: bool) -> f64 {
    let x = chi_abs as f64;
    if closed {
        4f64.ln() + 10.0 + PI.ln() + 3.0 * x.ln()
    } else {
        4f64.ln() + 20.0 + 7.0 * PI.ln() + 7.0 * x.ln()
    }
}

/// ln of the product polynomial `A3 = A1 * A2`, written with its own
/// coefficients: `80 e^54 pi x^13` closed, `416 e^114 pi^37 x^37` punctured.
fn ln_a3(chi_abs: u64, closed: bool) -> f64 {
    let x = chi_abs as f64;
    if closed {
        80f64.ln() + 54.0 + PI.ln() + 13.0 * x.ln()
    } else {
        416f64.ln() + 114.0 + 37.0 * PI.ln() + 37.0 * x.ln()
    }
}

pub fn a1(chi_abs: u64, closed: bool) -> LogValue {
    LogValue::from_ln(ln_a1(chi_abs, closed))
}

pub fn a2(chi_abs: u64, closed: bool) -> LogValue {
    LogValue::from_ln(ln_a2(chi_abs, closed))
}

pub fn a3(chi_abs: u64, closed: bool) -> LogValue {
    LogValue::from_ln(ln_a3(chi_abs, closed))
}

/// `C = 3 A1 A2`, the polynomial in the minimal-degree bound for
/// detangling covers and special covers.
pub fn c_poly(chi_abs: u64, closed: bool) -> LogValue {
    LogValue::from_ln(3f64.ln() + ln_a1(chi_abs, closed) + ln_a2(chi_abs, closed))
}

/// Electric-diameter coefficient `4 pi x / eta`.
pub fn a_coeff(x: f64, eta: f64) -> Result<f64> {
    if !(eta > 0.0) {
        return Err(Error::domain("a_coeff", format!("eta {eta} must be > 0")));
    }
    Ok(4.0 * PI * x / eta)
}

/// Intersection-number distance bound `2 log2(i) + 2`.
pub fn hempel_bound(i: u64) -> Result<f64> {
    if i == 0 {
        return Err(Error::domain(
            "hempel_bound",
            "intersection number must be >= 1 (disjoint pairs are handled directly)",
        ));
    }
    Ok(2.0 * (i as f64).log2() + 2.0)
}

/// Topology-sensitive strict distance bound
/// `2 + 2 log(i/2) / log((|chi|-2)/2)`; valid for `|chi| >= 5`.
/// Distance is strictly less than the returned value.
pub fn bowditch_bound(i: u64, chi_abs: u64) -> Result<f64> {
    if chi_abs < 5 {
        return Err(Error::domain(
            "bowditch_bound",
            format!("|chi| = {chi_abs} must be >= 5 for the denominator to be positive"),
        ));
    }
    if i < 2 {
        return Err(Error::domain("bowditch_bound", "need i >= 2"));
    }
    let num = (i as f64 / 2.0).ln();
    let den = ((chi_abs as f64 - 2.0) / 2.0).ln();
    Ok(2.0 + 2.0 * num / den)
}

/// Exact intersection bound for two `L_S`-short loops on a punctured
/// surface: `(6 log(pi|chi|) + 14) / log((e^7 pi^3 |chi|^3 + 1)/(e^7 pi^3 |chi|^3 - 1))`.
pub fn w_s(chi_abs: u64) -> Result<f64> {
    if chi_abs < 2 {
        return Err(Error::domain("w_s", "|chi| must be >= 2"));
    }
    let x = chi_abs as f64;
    let y = (7.0 + 3.0 * PI.ln() + 3.0 * x.ln()).exp();
    // log((y+1)/(y-1)) = log1p(2/(y-1)), stable for huge y
    let den = (2.0 / (y - 1.0)).ln_1p();
    Ok((6.0 * (PI * x).ln() + 14.0) / den)
}

/// Simplified ceiling for [`w_s`]: `2^40 |chi|^3 log |chi|`.
pub fn w_s_bound(chi_abs: u64) -> f64 {
    let x = chi_abs as f64;
    (40.0 * 2f64.ln() + 3.0 * x.ln()).exp() * x.ln()
}

/// The guaranteed enclosure of the curve-graph distance between full
/// preimages on a degree-`deg` cover, given the distance downstairs.
///
/// Closed base: `d / (deg * A3(|chi|)) <= d_cover <= d`.
/// Punctured base: `d / (deg^4 * A3(|chi|)) <= d_cover <= d`.
pub fn cover_theorem_bounds(d_base: u64, deg: u64, sig: SurfaceSig) -> (f64, f64) {
    if d_base == 0 {
        return (0.0, 0.0);
    }
    let chi = sig.chi_abs();
    let closed = sig.is_closed();
    let ln_deg_factor = if closed {
        (deg as f64).ln()
    } else {
        4.0 * (deg as f64).ln()
    };
    let lower = ((d_base as f64).ln() - ln_deg_factor - ln_a3(chi, closed)).exp();
    (lower, d_base as f64)
}

/// The full table of per-surface constants, as rendered by the CLI.
#[derive(Debug, Clone, Serialize)]
pub struct ConstantsTable {
    pub genus: u32,
    pub punctures: u32,
    pub chi_abs: u64,
    pub omega: i64,
    pub closed: bool,
    pub ell_s: f64,
    pub l_s: f64,
    pub eps3: f64,
    pub eps_s: f64,
    pub eps_s_floor: f64,
    pub d_const: u32,
    pub d_used: u32,
    pub a1: LogValue,
    pub a2: LogValue,
    pub a3: LogValue,
    pub c: LogValue,
    /// Intersection bound for short loops; punctured surfaces only.
    pub w_s: Option<f64>,
}

impl ConstantsTable {
    pub fn for_sig(sig: SurfaceSig) -> Self {
        let chi = sig.chi_abs();
        let closed = sig.is_closed();
        ConstantsTable {
            genus: sig.genus(),
            punctures: sig.punctures(),
            chi_abs: chi,
            omega: sig.omega(),
            closed,
            ell_s: ell_s(chi).expect("chi_abs >= 2"),
            l_s: l_s(sig),
            eps3: EPS3,
            eps_s: epsilon_s(sig),
            eps_s_floor: if closed {
                epsilon_s_floor_closed(chi)
            } else {
                epsilon_s_floor_punctured(chi)
            },
            d_const: d_const(sig),
            d_used: d_used(sig),
            a1: a1(chi, closed),
            a2: a2(chi, closed),
            a3: a3(chi, closed),
            c: c_poly(chi, closed),
            w_s: (!closed).then(|| w_s(chi).expect("chi_abs >= 2")),
        }
    }

    /// Relative log-domain discrepancy of the product identity
    /// `A3 = A1 * A2`; must be below 1e-12 for every signature.
    pub fn a3_identity_error(&self) -> f64 {
        let lhs = self.a3.ln;
        let rhs = self.a1.ln + self.a2.ln;
        ((lhs - rhs) / lhs).abs()
    }

    /// Relative log-domain discrepancy of `C = 3 A1 A2`.
    pub fn c_identity_error(&self) -> f64 {
        let lhs = self.c.ln;
        let rhs = 3f64.ln() + self.a1.ln + self.a2.ln;
        ((lhs - rhs) / lhs).abs()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sig(g: u32, n: u32) -> SurfaceSig {
        SurfaceSig::new(g, n).unwrap()
    }

    #[test]
    fn volumes_vanish_at_zero_and_increase() {
        assert_eq!(vol2(0.0).unwrap(), 0.0);
        assert_eq!(vol3(0.0).unwrap(), 0.0);
        assert!(vol2(-1.0).is_err());
        assert!(vol3(-0.5).is_err());
        let mut prev2 = 0.0;
        let mut prev3 = 0.0;
        for k in 1..200 {
            let r = k as f64 / 20.0;
            let v2 = vol2(r).unwrap();
            let v3 = vol3(r).unwrap();
            assert!(v2 > prev2 && v3 > prev3, "volumes must be strictly increasing");
            prev2 = v2;
            prev3 = v3;
        }
    }

    #[test]
    fn vol3_at_one_matches_oracle() {
        // pi (sinh 2 - 2), high-precision oracle value
        let expect = 5.110932705708289;
        assert!((vol3(1.0).unwrap() - expect).abs() < 1e-12);
    }

    #[test]
    fn vol3_series_agrees_with_direct_difference() {
        // the two evaluation routes must agree where both are accurate
        for k in 1..100 {
            let r = 0.2 + k as f64 / 250.0;
            let direct = PI * ((2.0 * r).sinh() - 2.0 * r);
            let val = vol3(r).unwrap();
            assert!(((val - direct) / direct).abs() < 1e-10);
        }
    }

    #[test]
    fn ell_s_matches_oracle_and_bound() {
        let expect = 3.525494348078172; // 4 ln(1 + sqrt 2)
        assert!((ell_s(2).unwrap() - expect).abs() < 1e-12);
        for chi in [2u64, 3, 5, 10, 100, 1000] {
            let v = ell_s(chi).unwrap();
            assert!(v <= ell_s_bound(chi) + 1e-12);
            assert!(ell_s_bound(chi) <= 2.0 * (chi as f64).ln() + 4.0 + 1e-12);
        }
        assert!(ell_s(0).is_err());
    }

    #[test]
    fn l_s_delta_collapses_at_delta_one() {
        let v = l_s_delta(2, 1.0).unwrap();
        let expect = ell_s(2).unwrap() + 4.0 * (2.0 * PI).ln() + 6.0;
        assert!((v - expect).abs() < 1e-12);
        assert!(l_s_delta(2, 0.0).is_err());
        assert!(l_s_delta(2, 1.5).is_err());
    }

    #[test]
    fn l_s_delta_below_simple_bound() {
        let v = l_s_delta(2, 0.104).unwrap();
        assert!((v - 21.403731373397082).abs() < 1e-10);
        assert!(v <= l_s_delta_bound(2, 0.104));
        let exact = l_s_delta(10, 0.5).unwrap();
        assert!(exact <= l_s_delta_bound(10, 0.5));
    }

    #[test]
    fn l_s_dispatches_by_closedness() {
        let closed = sig(2, 0);
        assert!((l_s(closed) - 3.525494348078172).abs() < 1e-12);
        let punctured = sig(1, 2);
        assert!(l_s(punctured) <= l_s_punctured_ceiling(2));
        let five = sig(0, 5);
        assert!((l_s(five) - l_s_delta(3, EPS3).unwrap()).abs() == 0.0);
    }

    #[test]
    fn f_of_mu_domain_and_values() {
        let boundary = EPS3 * EPS3 / TUBE_DEPTH_COEFF;
        let at_boundary = f_of_mu(boundary).unwrap();
        assert!((at_boundary - (-TUBE_DEPTH_OFFSET)).abs() < 1e-15);
        let v = f_of_mu(0.001).unwrap();
        assert!((v - 0.6106341541742808).abs() < 1e-12);
        assert!(f_of_mu(0.0001).unwrap() > v, "F must be decreasing");
        assert!(f_of_mu(boundary * 1.01).is_err());
        assert!(f_of_mu(0.0).is_err());
    }

    #[test]
    fn epsilon_s_values_floors_and_round_trip() {
        let g2 = sig(2, 0);
        let e = epsilon_s(g2);
        assert!((e - 1.5286937142760543e-4).abs() < 1e-16);
        assert!(e >= epsilon_s_floor_closed(2));
        assert!(e < EPS3);
        // defining round trip F(eps_S) = L_S / 2
        let rt = f_of_mu(e).unwrap();
        assert!((rt - l_s(g2) / 2.0).abs() < 1e-9);

        let p = sig(0, 5);
        let ep = epsilon_s(p);
        assert!(ep >= epsilon_s_floor_punctured(3));
        assert!((f_of_mu(ep).unwrap() - l_s(p) / 2.0).abs() < 1e-9);
    }

    #[test]
    fn p_bound_value_and_relaxation() {
        let v = p_bound(1.0, 0.1).unwrap();
        assert!((v - 1689.4467645904772).abs() < 1e-9 * v);
        assert!(v <= p_bound_relaxed(1.0, 0.1));
        assert!(p_bound(1.0, 0.1).unwrap() < p_bound(1.5, 0.1).unwrap());
        assert!(p_bound(1.0, 0.2).unwrap() < p_bound(1.0, 0.1).unwrap());
        assert!(p_bound(0.5, 0.1).is_err());
        assert!(p_bound(1.0, 0.0).is_err());
    }

    #[test]
    fn d_const_piecewise() {
        assert_eq!(d_const(sig(2, 0)), 20); // |chi| = 2
        assert_eq!(d_const(sig(5, 0)), 10); // |chi| = 8
        assert_eq!(d_const(sig(4, 0)), 20); // |chi| = 6
        assert_eq!(d_const(sig(1, 10)), 92); // |chi| = 10
        assert_eq!(d_const(sig(0, 5)), 104); // |chi| = 3
        assert_eq!(d_used(sig(5, 0)), 20);
        assert_eq!(d_used(sig(0, 5)), 104);
    }

    #[test]
    fn polynomial_values_match_direct_products() {
        // closed A2(2) = 32 pi e^10
        let v = a2(2, true);
        let direct = 32.0 * PI * 10f64.exp();
        assert!(((v.value - direct) / direct).abs() < 1e-12);
        // closed A1(2) against oracle
        assert!((a1(2, true).log10 - 23.420287156046874).abs() < 1e-10);
        // punctured coefficient identity 104 * 4 = 416, e^94 e^20 = e^114, pi^30 pi^7 = pi^37
        for chi in [2u64, 3, 7, 50] {
            let t = (ln_a1(chi, false) + ln_a2(chi, false) - ln_a3(chi, false)).abs();
            assert!(t < 1e-12 * ln_a3(chi, false));
            let t = (ln_a1(chi, true) + ln_a2(chi, true) - ln_a3(chi, true)).abs();
            assert!(t < 1e-12 * ln_a3(chi, true));
        }
    }

    #[test]
    fn a_coeff_basic() {
        let v = a_coeff(2.0, 0.5).unwrap();
        assert!((v - 16.0 * PI).abs() < 1e-12);
        assert!(a_coeff(2.0, 0.0).is_err());
    }

    #[test]
    fn hempel_values() {
        assert!((hempel_bound(1).unwrap() - 2.0).abs() < 1e-15);
        assert!((hempel_bound(2).unwrap() - 4.0).abs() < 1e-15);
        assert!((hempel_bound(16).unwrap() - 10.0).abs() < 1e-15);
        assert!(hempel_bound(0).is_err());
        // monotone
        let mut prev = 0.0;
        for i in 1..100 {
            let v = hempel_bound(i).unwrap();
            assert!(v >= prev);
            prev = v;
        }
    }

    #[test]
    fn bowditch_values_and_domain() {
        assert!((bowditch_bound(32, 10).unwrap() - 6.0).abs() < 1e-12);
        assert!((bowditch_bound(2, 10).unwrap() - 2.0).abs() < 1e-15);
        assert!(bowditch_bound(32, 4).is_err());
        let mut prev = 0.0;
        for i in 2..100 {
            let v = bowditch_bound(i, 10).unwrap();
            assert!(v >= prev);
            prev = v;
        }
    }

    #[test]
    fn w_s_values_and_ceiling() {
        let v = w_s(2).unwrap();
        assert!((v - 3403959.0727144592).abs() < 1e-4 * v);
        assert!(v <= w_s_bound(2));
        let v100 = w_s(100).unwrap();
        assert!(v100 <= w_s_bound(100));
        assert!(w_s(1).is_err());
    }

    #[test]
    fn cover_bounds_examples() {
        let g2 = sig(2, 0);
        let (lo, hi) = cover_theorem_bounds(5, 2, g2);
        assert_eq!(hi, 5.0);
        let expect = 5.0 / (2.0 * a3(2, true).value);
        assert!(((lo - expect) / expect).abs() < 1e-12);

        let (lo0, hi0) = cover_theorem_bounds(0, 7, g2);
        assert_eq!((lo0, hi0), (0.0, 0.0));

        let p = sig(1, 2); // |chi| = 2
        let (lo, hi) = cover_theorem_bounds(5, 2, p);
        assert_eq!(hi, 5.0);
        let expect = 5.0 / (16.0 * a3(2, false).value);
        assert!(((lo - expect) / expect).abs() < 1e-12);
    }

    #[test]
    fn table_identities() {
        for (g, n) in [(2, 0), (3, 0), (0, 5), (1, 2), (10, 7)] {
            let t = ConstantsTable::for_sig(sig(g, n));
            assert!(t.a3_identity_error() < 1e-12);
            assert!(t.c_identity_error() < 1e-12);
            assert!(t.eps_s < t.eps3);
            assert!(t.eps_s >= t.eps_s_floor);
        }
    }
}
