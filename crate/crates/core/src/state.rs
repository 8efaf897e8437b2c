//! State representations and the exact maps between them.

use crate::anomaly::{
    self, eccentric_from_true, reduce_angle, solve_kepler, true_from_eccentric, CIRCULAR_ECCENTRICITY,
};
use crate::error::{finite, Error, Result};
use crate::trig;

/// Below this `sin I` the node and argument of latitude are not separated.
pub const EQUATORIAL_TOLERANCE: f64 = 1e-12;

/// Smallest `1 + cos I` accepted by a chart.
pub const CHART_TOLERANCE: f64 = 1e-12;

/// Which nonsingular angle is in use: `theta + nu` or `theta - nu`.
///
/// The retrograde chart is the prograde one seen in the frame mirrored
/// through the x-z plane, where `y`, `Y` and `N` change sign.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Chart {
    Prograde,
    Retrograde,
}

impl Chart {
    /// Retrograde for `N < 0`. A polar orbit (`N = 0`) uses the prograde chart.
    pub fn for_polar_momentum(big_n: f64) -> Chart {
        if big_n < 0.0 {
            Chart::Retrograde
        } else {
            Chart::Prograde
        }
    }

    /// +1 for prograde, -1 for retrograde.
    pub fn sign(self) -> f64 {
        match self {
            Chart::Prograde => 1.0,
            Chart::Retrograde => -1.0,
        }
    }
}

pub(crate) fn dot(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

pub(crate) fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

pub(crate) fn norm(a: [f64; 3]) -> f64 {
    dot(a, a).sqrt()
}

/// Inertial position and velocity.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CartesianState {
    pub position: [f64; 3],
    pub velocity: [f64; 3],
}

impl CartesianState {
    pub fn new(position: [f64; 3], velocity: [f64; 3]) -> Self {
        CartesianState { position, velocity }
    }

    pub fn radius(&self) -> f64 {
        norm(self.position)
    }

    pub fn angular_momentum(&self) -> [f64; 3] {
        cross(self.position, self.velocity)
    }

    /// `x Y - y X`.
    pub fn polar_momentum(&self) -> f64 {
        self.position[0] * self.velocity[1] - self.position[1] * self.velocity[0]
    }

    /// Two-body energy `v^2/2 - mu/r`.
    pub fn kepler_energy(&self, mu: f64) -> f64 {
        0.5 * dot(self.velocity, self.velocity) - mu / self.radius()
    }

    pub fn is_finite(&self) -> bool {
        self.position.iter().chain(&self.velocity).all(|v| v.is_finite())
    }

    fn mirrored(&self) -> CartesianState {
        let [x, y, z] = self.position;
        let [vx, vy, vz] = self.velocity;
        CartesianState::new([x, -y, z], [vx, -vy, vz])
    }

    pub fn to_nonsingular(&self) -> Result<NonsingularState> {
        cartesian_to_nonsingular(self)
    }

    /// Direct route through the angular-momentum vector; fails on the equator.
    pub fn to_polar_nodal(&self) -> Result<PolarNodalState> {
        if !self.is_finite() {
            return Err(Error::NonFinite("Cartesian state"));
        }
        let r = self.radius();
        if r == 0.0 {
            return Err(Error::Degenerate("zero radius"));
        }
        let h = self.angular_momentum();
        let big_theta = norm(h);
        if big_theta == 0.0 {
            return Err(Error::Degenerate("rectilinear orbit"));
        }
        let h_xy = h[0].hypot(h[1]);
        let s = h_xy / big_theta;
        if s < EQUATORIAL_TOLERANCE {
            return Err(Error::Equatorial(s));
        }
        let nu = h[0].atan2(-h[1]);
        let (sn, cn) = nu.sin_cos();
        let [x, y, z] = self.position;
        let theta = (z / s).atan2(x * cn + y * sn);
        Ok(PolarNodalState {
            r,
            theta,
            nu,
            big_r: dot(self.position, self.velocity) / r,
            big_theta,
            big_n: h[2],
        })
    }
}

/// Hill (polar-nodal) canonical variables.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PolarNodalState {
    pub r: f64,
    /// Argument of latitude.
    pub theta: f64,
    /// Right ascension of the ascending node.
    pub nu: f64,
    /// Radial velocity.
    pub big_r: f64,
    /// Total angular momentum.
    pub big_theta: f64,
    /// Polar component of the angular momentum.
    pub big_n: f64,
}

impl PolarNodalState {
    pub fn cos_incl(&self) -> f64 {
        self.big_n / self.big_theta
    }

    /// `sin I >= 0`, formed without cancellation near the equator.
    pub fn sin_incl(&self) -> f64 {
        sin_from_momenta(self.big_theta, self.big_n)
    }

    pub fn validate(&self) -> Result<()> {
        for (v, what) in [
            (self.r, "r"),
            (self.theta, "theta"),
            (self.nu, "nu"),
            (self.big_r, "R"),
            (self.big_theta, "Theta"),
            (self.big_n, "N"),
        ] {
            finite(v, what)?;
        }
        if self.r <= 0.0 {
            return Err(Error::Degenerate("radius must be positive"));
        }
        if self.big_theta <= 0.0 {
            return Err(Error::Degenerate("angular momentum must be positive"));
        }
        if self.big_n.abs() > self.big_theta * (1.0 + 1e-14) {
            return Err(Error::Degenerate("|N| exceeds Theta"));
        }
        Ok(())
    }

    pub fn to_nonsingular(&self) -> NonsingularState {
        polar_to_nonsingular(self)
    }

    /// Rotation-matrix route `R3(-nu) R1(-I) R3(-theta)`.
    pub fn to_cartesian(&self) -> CartesianState {
        let ci = self.cos_incl();
        let si = self.sin_incl();
        let (sn, cn) = self.nu.sin_cos();
        let (st, ct) = self.theta.sin_cos();
        let radial = [cn * ct - sn * st * ci, sn * ct + cn * st * ci, st * si];
        let transverse = [-cn * st - sn * ct * ci, -sn * st + cn * ct * ci, ct * si];
        let vt = self.big_theta / self.r;
        CartesianState {
            position: radial.map(|u| self.r * u),
            velocity: [0, 1, 2].map(|k| self.big_r * radial[k] + vt * transverse[k]),
        }
    }

    pub fn to_delaunay(&self, mu: f64) -> Result<DelaunayState> {
        polar_to_delaunay(self, mu)
    }
}

fn sin_from_momenta(big_theta: f64, big_n: f64) -> f64 {
    let a = big_n.abs();
    ((big_theta - a).max(0.0) * (big_theta + a)).sqrt() / big_theta
}

/// Nonsingular variables `(psi, xi, chi, r, R, Theta)` with the constant `N`.
///
/// `psi = theta + nu` (or `theta - nu` in the retrograde chart),
/// `xi = sin I sin theta`, `chi = sin I cos theta`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NonsingularState {
    pub psi: f64,
    pub xi: f64,
    pub chi: f64,
    pub r: f64,
    pub big_r: f64,
    pub big_theta: f64,
    pub big_n: f64,
    pub chart: Chart,
}

impl NonsingularState {
    /// `cos I` as seen by the chart, so never negative in the retrograde chart.
    pub fn chart_cos(&self) -> f64 {
        self.chart.sign() * self.big_n / self.big_theta
    }

    pub fn validate(&self) -> Result<()> {
        for (v, what) in [
            (self.psi, "psi"),
            (self.xi, "xi"),
            (self.chi, "chi"),
            (self.r, "r"),
            (self.big_r, "R"),
            (self.big_theta, "Theta"),
            (self.big_n, "N"),
        ] {
            finite(v, what)?;
        }
        if self.r <= 0.0 {
            return Err(Error::Degenerate("radius must be positive"));
        }
        if self.big_theta <= 0.0 {
            return Err(Error::Degenerate("angular momentum must be positive"));
        }
        Ok(())
    }

    pub fn to_polar_nodal(&self, tolerance: f64) -> Result<PolarNodalState> {
        nonsingular_to_polar(self, tolerance)
    }

    pub fn to_cartesian(&self) -> Result<CartesianState> {
        nonsingular_to_cartesian(self)
    }

    pub fn rotation_aux(&self) -> Result<RotationAux> {
        RotationAux::new(self.xi, self.chi, self.chart_cos())
    }
}

/// Delaunay action-angle variables.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DelaunayState {
    pub ell: f64,
    pub g: f64,
    pub h: f64,
    pub big_l: f64,
    pub big_g: f64,
    pub big_h: f64,
}

impl DelaunayState {
    pub fn eccentricity(&self) -> Result<f64> {
        eccentricity_from_actions(self.big_l, self.big_g)
    }

    pub fn to_polar_nodal(&self, mu: f64) -> Result<PolarNodalState> {
        delaunay_to_polar(self, mu)
    }
}

/// `e` from `L` and `G` as `sqrt((L - G)(L + G))/L`.
pub fn eccentricity_from_actions(big_l: f64, big_g: f64) -> Result<f64> {
    finite(big_l, "L")?;
    finite(big_g, "G")?;
    if big_g <= 0.0 || big_l <= 0.0 {
        return Err(Error::Degenerate("Delaunay actions must be positive"));
    }
    let diff = big_l - big_g;
    if diff < -1e-14 * big_l {
        return Err(Error::Degenerate("G exceeds L"));
    }
    Ok((diff.max(0.0) * (big_l + big_g)).sqrt() / big_l)
}

/// Auxiliary quantities of the nonsingular-to-Cartesian rotation.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RotationAux {
    pub t: f64,
    pub tau: f64,
    pub q: f64,
}

impl RotationAux {
    /// `c` is the chart cosine; fails when `1 + c` vanishes.
    pub fn new(xi: f64, chi: f64, c: f64) -> Result<Self> {
        let d = 1.0 + c;
        if !(d > CHART_TOLERANCE) {
            return Err(Error::ChartSingular(d));
        }
        Ok(RotationAux {
            t: 1.0 - xi * xi / d,
            tau: 1.0 - chi * chi / d,
            q: xi * chi / d,
        })
    }
}

pub fn polar_to_nonsingular(pn: &PolarNodalState) -> NonsingularState {
    let chart = Chart::for_polar_momentum(pn.big_n);
    let s = pn.sin_incl();
    let (st, ct) = pn.theta.sin_cos();
    NonsingularState {
        psi: reduce_angle(pn.theta + chart.sign() * pn.nu),
        xi: s * st,
        chi: s * ct,
        r: pn.r,
        big_r: pn.big_r,
        big_theta: pn.big_theta,
        big_n: pn.big_n,
        chart,
    }
}

pub fn nonsingular_to_polar(ns: &NonsingularState, tolerance: f64) -> Result<PolarNodalState> {
    let s = ns.xi.hypot(ns.chi);
    if !(s > tolerance) {
        return Err(Error::Equatorial(s));
    }
    let theta = ns.xi.atan2(ns.chi);
    let nu = match ns.chart {
        Chart::Prograde => ns.psi - theta,
        Chart::Retrograde => theta - ns.psi,
    };
    Ok(PolarNodalState {
        r: ns.r,
        theta,
        nu: reduce_angle(nu),
        big_r: ns.big_r,
        big_theta: ns.big_theta,
        big_n: ns.big_n,
    })
}

pub fn nonsingular_to_cartesian(ns: &NonsingularState) -> Result<CartesianState> {
    ns.validate()?;
    let RotationAux { t, tau, q } = ns.rotation_aux()?;
    let (sp, cp) = trig::sin_cos(ns.psi);
    let (r, big_r) = (ns.r, ns.big_r);
    let vt = ns.big_theta / r;
    let a = t * cp + q * sp;
    let b = t * sp - q * cp;
    let cart = CartesianState {
        position: [r * a, r * b, r * ns.xi],
        velocity: [
            big_r * a - vt * (q * cp + tau * sp),
            big_r * b - vt * (q * sp - tau * cp),
            big_r * ns.xi + vt * ns.chi,
        ],
    };
    Ok(match ns.chart {
        Chart::Prograde => cart,
        Chart::Retrograde => cart.mirrored(),
    })
}

pub fn cartesian_to_nonsingular(cart: &CartesianState) -> Result<NonsingularState> {
    if !cart.is_finite() {
        return Err(Error::NonFinite("Cartesian state"));
    }
    let r = cart.radius();
    if r == 0.0 {
        return Err(Error::Degenerate("zero radius"));
    }
    let big_n = cart.polar_momentum();
    let big_theta = norm(cart.angular_momentum());
    if !(big_theta > 0.0) {
        return Err(Error::Degenerate("rectilinear orbit"));
    }
    let chart = Chart::for_polar_momentum(big_n);
    let frame = match chart {
        Chart::Prograde => *cart,
        Chart::Retrograde => cart.mirrored(),
    };
    let [x, y, z] = frame.position;
    let big_r = dot(frame.position, frame.velocity) / r;
    let chi = (r * frame.velocity[2] - z * big_r) / big_theta;
    let xi = z / r;
    let c = chart.sign() * big_n / big_theta;
    let RotationAux { t, q, .. } = RotationAux::new(xi, chi, c)?;
    let psi = trig::atan2(x * q + y * t, x * t - y * q);
    Ok(NonsingularState {
        psi,
        xi,
        chi,
        r,
        big_r,
        big_theta,
        big_n,
        chart,
    })
}

/// Circular orbits map to `ell = 0` with `g` taking the whole argument of latitude.
pub fn polar_to_delaunay(pn: &PolarNodalState, mu: f64) -> Result<DelaunayState> {
    pn.validate()?;
    let proj = anomaly::projections(pn.r, pn.big_r, pn.big_theta, mu)?;
    let (ell, f) = if proj.e < CIRCULAR_ECCENTRICITY {
        (0.0, 0.0)
    } else {
        let f = trig::atan2(proj.sigma, proj.kappa);
        let u = eccentric_from_true(f, proj.e);
        (reduce_angle(u - proj.e * trig::sin(u)), f)
    };
    Ok(DelaunayState {
        ell,
        g: reduce_angle(pn.theta - f),
        h: reduce_angle(pn.nu),
        big_l: pn.big_theta / proj.eta,
        big_g: pn.big_theta,
        big_h: pn.big_n,
    })
}

pub fn delaunay_to_polar(d: &DelaunayState, mu: f64) -> Result<PolarNodalState> {
    for (v, what) in [(d.ell, "ell"), (d.g, "g"), (d.h, "h"), (d.big_h, "H")] {
        finite(v, what)?;
    }
    let e = d.eccentricity()?;
    if !(e < 1.0) {
        return Err(Error::NotElliptic(e));
    }
    if d.big_h.abs() > d.big_g * (1.0 + 1e-14) {
        return Err(Error::Degenerate("|H| exceeds G"));
    }
    let p = d.big_g * d.big_g / mu;
    let (f, r, big_r) = if e < CIRCULAR_ECCENTRICITY {
        (reduce_angle(d.ell), p, 0.0)
    } else {
        let u = solve_kepler(d.ell, e)?;
        let f = true_from_eccentric(u, e);
        let (sf, cf) = trig::sin_cos(f);
        (f, p / (1.0 + e * cf), d.big_g / p * e * sf)
    };
    Ok(PolarNodalState {
        r,
        theta: reduce_angle(f + d.g),
        nu: reduce_angle(d.h),
        big_r,
        big_theta: d.big_g,
        big_n: d.big_h,
    })
}

/// Keplerian elements, angles in radians.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ClassicalElements {
    pub semi_major_axis: f64,
    pub eccentricity: f64,
    pub inclination: f64,
    pub node: f64,
    pub arg_perigee: f64,
    pub mean_anomaly: f64,
}

impl ClassicalElements {
    pub fn to_delaunay(&self, mu: f64) -> Result<DelaunayState> {
        let e = self.eccentricity;
        if !(0.0..1.0).contains(&e) {
            return Err(Error::NotElliptic(e));
        }
        if !(self.semi_major_axis > 0.0) {
            return Err(Error::Degenerate("semi-major axis must be positive"));
        }
        let big_l = (mu * self.semi_major_axis).sqrt();
        let big_g = big_l * ((1.0 - e) * (1.0 + e)).sqrt();
        Ok(DelaunayState {
            ell: self.mean_anomaly,
            g: self.arg_perigee,
            h: self.node,
            big_l,
            big_g,
            big_h: big_g * self.inclination.cos(),
        })
    }

    pub fn to_cartesian(&self, mu: f64) -> Result<CartesianState> {
        Ok(self.to_delaunay(mu)?.to_polar_nodal(mu)?.to_cartesian())
    }
}
