//! Central-difference Poisson brackets over the polar-nodal pairs
//! `(r, R)`, `(theta, Theta)`, `(nu, N)`.

use crate::corrections::PolarNodalDeltas;
use crate::error::{Error, Result};
use crate::state::PolarNodalState;

/// Default step as a fraction of each variable's scale.
pub const DEFAULT_RELATIVE_STEP: f64 = 1e-6;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PolarCoordinate {
    Radius,
    Latitude,
    Node,
    RadialMomentum,
    AngularMomentum,
    PolarMomentum,
}

impl PolarCoordinate {
    pub const ALL: [PolarCoordinate; 6] = [
        PolarCoordinate::Radius,
        PolarCoordinate::Latitude,
        PolarCoordinate::Node,
        PolarCoordinate::RadialMomentum,
        PolarCoordinate::AngularMomentum,
        PolarCoordinate::PolarMomentum,
    ];

    /// The other member of the canonical pair and whether `self` is the
    /// coordinate (rather than the momentum) of it.
    fn conjugate(self) -> (PolarCoordinate, bool) {
        use PolarCoordinate::*;
        match self {
            Radius => (RadialMomentum, true),
            Latitude => (AngularMomentum, true),
            Node => (PolarMomentum, true),
            RadialMomentum => (Radius, false),
            AngularMomentum => (Latitude, false),
            PolarMomentum => (Node, false),
        }
    }

    fn scale(self, pn: &PolarNodalState) -> f64 {
        use PolarCoordinate::*;
        match self {
            Radius => pn.r,
            Latitude | Node => 1.0,
            RadialMomentum => pn.big_theta / pn.r,
            AngularMomentum | PolarMomentum => pn.big_theta,
        }
    }

    fn shifted(self, pn: &PolarNodalState, h: f64) -> PolarNodalState {
        use PolarCoordinate::*;
        let mut s = *pn;
        match self {
            Radius => s.r += h,
            Latitude => s.theta += h,
            Node => s.nu += h,
            RadialMomentum => s.big_r += h,
            AngularMomentum => s.big_theta += h,
            PolarMomentum => s.big_n += h,
        }
        s
    }
}

fn partial<G>(gen: &G, by: PolarCoordinate, pn: &PolarNodalState, relative_step: f64) -> Result<f64>
where
    G: Fn(&PolarNodalState) -> Result<f64>,
{
    let h = relative_step * by.scale(pn);
    let up = gen(&by.shifted(pn, h))?;
    let down = gen(&by.shifted(pn, -h))?;
    if !(up.is_finite() && down.is_finite()) {
        return Err(Error::NonFinite("generator"));
    }
    Ok((up - down) / (2.0 * h))
}

/// `{coordinate, gen}` with steps `relative_step` times each variable's scale.
pub fn coordinate_bracket<G>(
    gen: &G,
    coordinate: PolarCoordinate,
    pn: &PolarNodalState,
    relative_step: f64,
) -> Result<f64>
where
    G: Fn(&PolarNodalState) -> Result<f64>,
{
    let (other, is_coordinate) = coordinate.conjugate();
    let d = partial(gen, other, pn, relative_step)?;
    Ok(if is_coordinate { d } else { -d })
}

pub fn poisson_bracket_fd<G>(gen: &G, coordinate: PolarCoordinate, pn: &PolarNodalState) -> Result<f64>
where
    G: Fn(&PolarNodalState) -> Result<f64>,
{
    coordinate_bracket(gen, coordinate, pn, DEFAULT_RELATIVE_STEP)
}

/// All six brackets, laid out as a correction set.
pub fn bracket_deltas<G>(gen: &G, pn: &PolarNodalState, relative_step: f64) -> Result<PolarNodalDeltas>
where
    G: Fn(&PolarNodalState) -> Result<f64>,
{
    use PolarCoordinate::*;
    let b = |c| coordinate_bracket(gen, c, pn, relative_step);
    Ok(PolarNodalDeltas {
        r: b(Radius)?,
        theta: b(Latitude)?,
        nu: b(Node)?,
        big_r: b(RadialMomentum)?,
        big_theta: b(AngularMomentum)?,
        big_n: b(PolarMomentum)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn state() -> PolarNodalState {
        PolarNodalState {
            r: 7100.0,
            theta: 0.9,
            nu: -2.0,
            big_r: 0.4,
            big_theta: 53_000.0,
            big_n: 21_000.0,
        }
    }

    #[test]
    fn constant_generator_has_zero_brackets() {
        let gen = |_: &PolarNodalState| Ok(3.5);
        for c in PolarCoordinate::ALL {
            assert_eq!(poisson_bracket_fd(&gen, c, &state()).unwrap(), 0.0);
        }
    }

    #[test]
    fn canonical_pairs() {
        let gen = |s: &PolarNodalState| Ok(s.big_theta);
        for c in PolarCoordinate::ALL {
            let b = poisson_bracket_fd(&gen, c, &state()).unwrap();
            let expected = if c == PolarCoordinate::Latitude { 1.0 } else { 0.0 };
            assert!((b - expected).abs() < 1e-9, "{c:?}: {b}");
        }
        let gen = |s: &PolarNodalState| Ok(s.r);
        let b = poisson_bracket_fd(&gen, PolarCoordinate::RadialMomentum, &state()).unwrap();
        assert!((b + 1.0).abs() < 1e-9);
    }

    #[test]
    fn non_finite_generator_reported() {
        let gen = |_: &PolarNodalState| Ok(f64::NAN);
        assert!(poisson_bracket_fd(&gen, PolarCoordinate::Radius, &state()).is_err());
    }
}
