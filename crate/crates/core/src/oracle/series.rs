//! Generating functions and periodic corrections written in Delaunay
//! variables as trigonometric series in `f` and `g`.
//!
//! These are the classical route: every evaluation needs the Kepler
//! equation and the sines and cosines of `f`, `f + 2g`, `2f + 2g` and
//! `3f + 2g`.

use crate::anomaly::{reduce_angle, AnomalyTriple, CIRCULAR_ECCENTRICITY};
use crate::error::{Error, Result};
use crate::gravity::{critical_inclination_guard, small_params, GravityField};
use crate::state::{eccentricity_from_actions, DelaunayState, EQUATORIAL_TOLERANCE};
use crate::trig;

/// Corrections to the Delaunay variables, laid out like the state.
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct DelaunayDeltas {
    pub ell: f64,
    pub g: f64,
    pub h: f64,
    pub big_l: f64,
    pub big_g: f64,
    pub big_h: f64,
}

impl DelaunayDeltas {
    pub fn apply(&self, d: &DelaunayState, sign: f64) -> DelaunayState {
        DelaunayState {
            ell: d.ell + sign * self.ell,
            g: d.g + sign * self.g,
            h: d.h + sign * self.h,
            big_l: d.big_l + sign * self.big_l,
            big_g: d.big_g + sign * self.big_g,
            big_h: d.big_h + sign * self.big_h,
        }
    }
}

/// Shared quantities at one Delaunay state.
struct Setup {
    e: f64,
    eta: f64,
    c: f64,
    s2: f64,
    eps2: f64,
    eps3: f64,
    f: f64,
    phi: f64,
}

impl Setup {
    fn new(d: &DelaunayState, field: &GravityField) -> Result<Setup> {
        field.validate()?;
        let e = eccentricity_from_actions(d.big_l, d.big_g)?;
        let c = d.big_h / d.big_g;
        if !(c.abs() <= 1.0) {
            return Err(Error::Degenerate("|H| must not exceed G"));
        }
        let sp = small_params(d.big_g, field)?;
        let a = AnomalyTriple::from_mean(d.ell, e)?;
        Ok(Setup {
            e,
            eta: d.big_g / d.big_l,
            c,
            s2: (1.0 - c) * (1.0 + c),
            eps2: sp.eps2,
            eps3: sp.eps3,
            f: a.f,
            phi: reduce_angle(a.f - a.ell),
        })
    }

    /// `e` derivatives in `L` and `G`.
    fn e_partials(&self, d: &DelaunayState) -> Result<(f64, f64)> {
        if self.e < CIRCULAR_ECCENTRICITY {
            return Err(Error::Circular);
        }
        let el = self.e * d.big_l;
        Ok((self.eta * self.eta / el, -self.eta / el))
    }

    /// `s^2` derivatives in `G` and `H`.
    fn s2_partials(&self, d: &DelaunayState) -> (f64, f64) {
        (2.0 * self.c * self.c / d.big_g, -2.0 * self.c / d.big_g)
    }
}

/// Sines and cosines of the four short-period arguments.
struct Harmonics {
    sf: f64,
    cf: f64,
    s1: f64,
    c1: f64,
    s2: f64,
    c2: f64,
    s3: f64,
    c3: f64,
}

impl Harmonics {
    fn new(f: f64, g: f64) -> Harmonics {
        let (sf, cf) = trig::sin_cos(f);
        let (s1, c1) = trig::sin_cos(f + 2.0 * g);
        let (s2, c2) = trig::sin_cos(2.0 * f + 2.0 * g);
        let (s3, c3) = trig::sin_cos(3.0 * f + 2.0 * g);
        Harmonics {
            sf,
            cf,
            s1,
            c1,
            s2,
            c2,
            s3,
            c3,
        }
    }
}

fn u1_bracket(st: &Setup, h: &Harmonics) -> f64 {
    let e = st.e;
    (4.0 - 6.0 * st.s2) * (st.phi + e * h.sf) + st.s2 * (3.0 * e * h.s1 + 3.0 * h.s2 + e * h.s3)
}

/// Short-period generating function in Delaunay variables.
pub fn u1_delaunay(d: &DelaunayState, field: &GravityField) -> Result<f64> {
    let st = Setup::new(d, field)?;
    let h = Harmonics::new(st.f, d.g);
    Ok(0.5 * d.big_g * st.eps2 * u1_bracket(&st, &h))
}

/// Long-period generating function in Delaunay variables.
pub fn x1_delaunay(d: &DelaunayState, field: &GravityField, guard_tolerance: f64) -> Result<f64> {
    let st = Setup::new(d, field)?;
    critical_inclination_guard(st.c, guard_tolerance)?;
    let (s2g, _) = trig::sin_cos(2.0 * d.g);
    let cg = trig::cos(d.g);
    let s2 = st.s2;
    let e = st.e;
    let k = (14.0 - 15.0 * s2) / (4.0 - 5.0 * s2);
    Ok(d.big_g * (-st.eps2 * k * s2 * e * e * s2g / 8.0 + st.eps3 * s2.sqrt() * e * cg))
}

/// Short-period corrections from the partials of `u1_delaunay`.
pub fn short_corrections_delaunay(d: &DelaunayState, field: &GravityField) -> Result<DelaunayDeltas> {
    let st = Setup::new(d, field)?;
    let (e_l, e_g) = st.e_partials(d)?;
    let (s2_g, s2_h) = st.s2_partials(d);
    let h = Harmonics::new(st.f, d.g);
    let (e, s2, eta) = (st.e, st.s2, st.eta);
    let tilt = 4.0 - 6.0 * s2;
    let one_ecf = 1.0 + e * h.cf;

    let b = u1_bracket(&st, &h);
    let b_f = tilt * one_ecf + s2 * (3.0 * e * h.c1 + 6.0 * h.c2 + 3.0 * e * h.c3);
    let b_e = tilt * h.sf + s2 * (3.0 * h.s1 + h.s3);
    let b_g = s2 * (6.0 * e * h.c1 + 6.0 * h.c2 + 2.0 * e * h.c3);
    let b_s2 = -6.0 * (st.phi + e * h.sf) + 3.0 * e * h.s1 + 3.0 * h.s2 + e * h.s3;
    let f_ell = one_ecf * one_ecf / (eta * eta * eta);
    let f_e = h.sf * (2.0 + e * h.cf) / (eta * eta);
    let b_ecc = b_f * f_e + b_e;

    let k = 0.5 * d.big_g * st.eps2;
    Ok(DelaunayDeltas {
        ell: k * b_ecc * e_l,
        g: -1.5 * st.eps2 * b + k * (b_ecc * e_g + b_s2 * s2_g),
        h: k * b_s2 * s2_h,
        big_l: -k * (b_f * f_ell - tilt),
        big_g: -k * b_g,
        big_h: 0.0,
    })
}

/// Long-period corrections from the partials of `x1_delaunay`.
pub fn long_corrections_delaunay(
    d: &DelaunayState,
    field: &GravityField,
    guard_tolerance: f64,
) -> Result<DelaunayDeltas> {
    let st = Setup::new(d, field)?;
    critical_inclination_guard(st.c, guard_tolerance)?;
    let (e_l, e_g) = st.e_partials(d)?;
    let (s2_g, s2_h) = st.s2_partials(d);
    let s = st.s2.sqrt();
    if st.eps3 != 0.0 && s < EQUATORIAL_TOLERANCE {
        return Err(Error::Equatorial(s));
    }
    let (s2g, c2g) = trig::sin_cos(2.0 * d.g);
    let (sg, cg) = trig::sin_cos(d.g);
    let (e, s2) = (st.e, st.s2);
    let den = 4.0 - 5.0 * s2;
    let k = (14.0 - 15.0 * s2) / den;
    let shape = s2 * k;
    let shape_s2 = k + s2 * 10.0 / (den * den);
    let a2 = -d.big_g * st.eps2 / 8.0;
    let a3 = d.big_g * st.eps3;

    let x_g = 2.0 * a2 * shape * e * e * c2g - a3 * s * e * sg;
    let x_e = 2.0 * a2 * shape * e * s2g + a3 * s * cg;
    let x_s2 = a2 * shape_s2 * e * e * s2g + if a3 == 0.0 { 0.0 } else { a3 * e * cg / (2.0 * s) };
    let x_big_g = 3.0 * st.eps2 / 8.0 * shape * e * e * s2g - st.eps3 * s * e * cg;

    Ok(DelaunayDeltas {
        ell: x_e * e_l,
        g: x_big_g + x_e * e_g + x_s2 * s2_g,
        h: x_s2 * s2_h,
        big_l: 0.0,
        big_g: -x_g,
        big_h: 0.0,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gravity::DEFAULT_GUARD_TOLERANCE;

    fn state(e: f64, i_deg: f64) -> DelaunayState {
        let mu = GravityField::earth().mu;
        let big_l = (mu * 7200.0f64).sqrt();
        let big_g = big_l * (1.0 - e * e).sqrt();
        DelaunayState {
            ell: 0.8,
            g: 1.9,
            h: -0.6,
            big_l,
            big_g,
            big_h: big_g * i_deg.to_radians().cos(),
        }
    }

    /// Central differences of `gen` in each Delaunay variable, as brackets.
    fn fd_brackets(gen: impl Fn(&DelaunayState) -> f64, d: &DelaunayState) -> DelaunayDeltas {
        let ha = 1e-6;
        let hm = 1e-7 * d.big_l;
        let diff = |shift: &dyn Fn(&mut DelaunayState, f64), h: f64| {
            let (mut up, mut down) = (*d, *d);
            shift(&mut up, h);
            shift(&mut down, -h);
            (gen(&up) - gen(&down)) / (2.0 * h)
        };
        DelaunayDeltas {
            ell: diff(&|s, h| s.big_l += h, hm),
            g: diff(&|s, h| s.big_g += h, hm),
            h: diff(&|s, h| s.big_h += h, hm),
            big_l: -diff(&|s, h| s.ell += h, ha),
            big_g: -diff(&|s, h| s.g += h, ha),
            big_h: -diff(&|s, h| s.h += h, ha),
        }
    }

    fn close(a: &DelaunayDeltas, b: &DelaunayDeltas, tol: f64) {
        let pairs = [
            (a.ell, b.ell),
            (a.g, b.g),
            (a.h, b.h),
            (a.big_l, b.big_l),
            (a.big_g, b.big_g),
            (a.big_h, b.big_h),
        ];
        let scale = pairs.iter().map(|p| p.0.abs()).fold(0.0, f64::max);
        for (x, y) in pairs {
            assert!((x - y).abs() <= tol * x.abs().max(1e-3 * scale), "{a:?}\n{b:?}");
        }
    }

    #[test]
    fn circular_u1_keeps_one_term() {
        let field = GravityField::earth();
        let d = state(0.0, 40.0);
        let st = Setup::new(&d, &field).unwrap();
        let expected = 0.5 * d.big_g * st.eps2 * 3.0 * st.s2 * (2.0 * st.f + 2.0 * d.g).sin();
        let u = u1_delaunay(&d, &field).unwrap();
        assert!((u - expected).abs() < 1e-13 * expected.abs());
        assert_eq!(x1_delaunay(&d, &field, DEFAULT_GUARD_TOLERANCE).unwrap(), 0.0);
    }

    #[test]
    fn short_corrections_are_brackets_of_u1() {
        let field = GravityField::earth();
        for (e, i) in [(0.1, 30.0), (0.5, 100.0), (0.02, 150.0)] {
            let d = state(e, i);
            let fd = fd_brackets(|s| u1_delaunay(s, &field).unwrap(), &d);
            close(&short_corrections_delaunay(&d, &field).unwrap(), &fd, 1e-6);
        }
    }

    #[test]
    fn long_corrections_are_brackets_of_x1() {
        let field = GravityField::earth();
        let tol = DEFAULT_GUARD_TOLERANCE;
        for (e, i) in [(0.1, 30.0), (0.5, 100.0), (0.02, 150.0)] {
            let d = state(e, i);
            let fd = fd_brackets(|s| x1_delaunay(s, &field, tol).unwrap(), &d);
            close(&long_corrections_delaunay(&d, &field, tol).unwrap(), &fd, 1e-6);
        }
    }

    #[test]
    fn guard_applies_to_long_period() {
        let field = GravityField::earth();
        let d = state(0.1, 63.435);
        assert!(x1_delaunay(&d, &field, DEFAULT_GUARD_TOLERANCE)
            .unwrap_err()
            .is_guard_rejection());
    }
}
