//! Physical constants, small parameters and inclination polynomials.

use crate::error::{finite, Error, Result};

/// Default tolerance on |1 - 5 cos^2 I| below which long-period terms are refused.
pub const DEFAULT_GUARD_TOLERANCE: f64 = 1e-3;

/// Zonal gravity field truncated at degree three.
///
/// `c20` and `c30` are the unnormalized zonal coefficients, so `c20 = -J2`
/// and `c30 = -J3`. Any consistent unit system works.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GravityField {
    pub mu: f64,
    pub alpha: f64,
    pub c20: f64,
    pub c30: f64,
}

impl GravityField {
    pub fn new(mu: f64, alpha: f64, c20: f64, c30: f64) -> Result<Self> {
        let field = GravityField {
            mu,
            alpha,
            c20,
            c30,
        };
        field.validate()?;
        Ok(field)
    }

    /// WGS-84 GM and equatorial radius with the EGM-96 J2 and J3, in km and s.
    pub fn earth() -> Self {
        GravityField {
            mu: 398_600.441_8,
            alpha: 6_378.137,
            c20: -1.082_626_68e-3,
            c30: 2.532_656_49e-6,
        }
    }

    pub fn two_body(mu: f64, alpha: f64) -> Self {
        GravityField {
            mu,
            alpha,
            c20: 0.0,
            c30: 0.0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        for (v, what) in [
            (self.mu, "mu"),
            (self.alpha, "alpha"),
            (self.c20, "c20"),
            (self.c30, "c30"),
        ] {
            finite(v, what)?;
        }
        if self.mu <= 0.0 {
            return Err(Error::InvalidField("mu must be positive"));
        }
        if self.alpha <= 0.0 {
            return Err(Error::InvalidField("alpha must be positive"));
        }
        if self.c20.abs() >= 1.0 || self.c30.abs() >= 1.0 {
            return Err(Error::InvalidField("zonal coefficients must be below one in magnitude"));
        }
        Ok(())
    }

    /// Same field with `c20` multiplied by `factor`.
    pub fn with_c20_scaled(self, factor: f64) -> Self {
        GravityField {
            c20: self.c20 * factor,
            ..self
        }
    }

    pub fn without_c30(self) -> Self {
        GravityField { c30: 0.0, ..self }
    }

    pub fn is_keplerian(&self) -> bool {
        self.c20 == 0.0 && self.c30 == 0.0
    }

    pub fn small_params(&self, big_theta: f64) -> Result<SmallParams> {
        small_params(big_theta, self)
    }
}

/// Semilatus rectum and the two dimensionless perturbation parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SmallParams {
    pub p: f64,
    pub eps2: f64,
    pub eps3: f64,
}

/// `eps2 = c20 (alpha/p)^2 / 4` and `eps3 = (alpha/p)(c30/c20) / 2` with `p = Theta^2/mu`.
pub fn small_params(big_theta: f64, field: &GravityField) -> Result<SmallParams> {
    finite(big_theta, "angular momentum")?;
    if big_theta <= 0.0 {
        return Err(Error::Degenerate("angular momentum must be positive"));
    }
    let p = big_theta * big_theta / field.mu;
    let ratio = field.alpha / p;
    let eps2 = 0.25 * field.c20 * ratio * ratio;
    let eps3 = if field.c30 == 0.0 {
        0.0
    } else if field.c20 == 0.0 {
        return Err(Error::ThirdHarmonicRatio);
    } else {
        0.5 * ratio * field.c30 / field.c20
    };
    Ok(SmallParams { p, eps2, eps3 })
}

/// Inclination polynomials in `c = cos I`. The numbering has no `q4`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct InclinationPolynomials {
    pub q0: f64,
    pub q1: f64,
    pub q2: f64,
    pub q3: f64,
    pub q5: f64,
    pub q6: f64,
    pub q7: f64,
    pub q8: f64,
    pub q9: f64,
    pub q10: f64,
    pub q11: f64,
    pub q12: f64,
    pub q13: f64,
    pub q14: f64,
    pub q15: f64,
}

impl InclinationPolynomials {
    pub fn new(c: f64) -> Self {
        let c2 = c * c;
        let c4 = c2 * c2;
        let c6 = c4 * c2;
        let s2 = 1.0 - c2;
        let q0 = (1.0 - 15.0 * c2) * (1.0 - 5.0 * c2);
        // q6 is kept in deflated form so that c = 0 is regular.
        let q6 = c * (11.0 - 30.0 * c2 + 75.0 * c4);
        InclinationPolynomials {
            q0,
            q1: 0.25 * (1.0 - 43.0 * c2 + 155.0 * c4 - 225.0 * c6),
            q2: s2 * q0,
            q3: 0.25 * (1.0 + c2 + 35.0 * c4 + 75.0 * c6),
            q5: c * q6,
            q6,
            q7: 0.25 * (1.0 + 3.0 * c2 - 5.0 * c4 + 225.0 * c6),
            q8: 0.25 * (1.0 - 45.0 * c2 + 195.0 * c4 - 375.0 * c6),
            q9: 0.25 * (1.0 + 75.0 * c4),
            q10: 0.25 * (1.0 - 40.0 * c2 + 75.0 * c4),
            q11: 2.0 * c2 * (6.0 - 25.0 * c2 + 75.0 * c4),
            q12: 10.0 * c2,
            q13: q0 * (1.0 + c),
            q14: 0.25 * (1.0 - c) * (1.0 - 20.0 * c - 40.0 * c2 + 75.0 * c4),
            q15: 0.25 * (1.0 + 23.0 * c - 20.0 * c2 - 80.0 * c2 * c + 75.0 * c4 + 225.0 * c4 * c),
        }
    }
}

pub fn q_polynomials(c: f64) -> InclinationPolynomials {
    InclinationPolynomials::new(c)
}

/// Eccentricity-dependent combinations used by the nonsingular long-period terms.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PCoefficients {
    pub p1: f64,
    pub p2: f64,
    pub p3: f64,
    pub p4: f64,
}

pub fn p_coefficients(kappa: f64, sigma: f64, q: &InclinationPolynomials) -> PCoefficients {
    let k2 = kappa * kappa;
    let s2 = sigma * sigma;
    PCoefficients {
        p1: q.q2 * kappa + q.q7 * k2 + q.q8 * s2,
        p2: q.q0 * kappa + q.q9 * k2 + q.q10 * s2,
        p3: q.q2 + q.q11 * kappa,
        p4: q.q0 + q.q12 * kappa,
    }
}

/// Refuses inclinations where `|1 - 5c^2| < tolerance`, for both the direct
/// and the retrograde critical value.
pub fn critical_inclination_guard(c: f64, tolerance: f64) -> Result<()> {
    let margin = (1.0 - 5.0 * c * c).abs();
    if margin < tolerance {
        return Err(Error::CriticalInclination {
            inclination_deg: c.clamp(-1.0, 1.0).acos().to_degrees(),
            margin,
            tolerance,
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_coefficients_give_zero_parameters() {
        let f = GravityField::two_body(1.0, 1.0);
        let sp = small_params(0.7, &f).unwrap();
        assert_eq!(sp.eps2, 0.0);
        assert_eq!(sp.eps3, 0.0);
    }

    #[test]
    fn earth_eps2_at_7000_km() {
        let f = GravityField::earth();
        let theta = (7000.0 * f.mu).sqrt();
        let sp = small_params(theta, &f).unwrap();
        // c20 (alpha/p)^2 / 4 evaluated by hand: -1.08262668e-3 * 0.830217... / 4
        let expected = -1.082_626_68e-3 * (6378.137f64 / 7000.0).powi(2) / 4.0;
        assert!((sp.eps2 - expected).abs() < 1e-18);
        assert!((sp.eps2 + 2.247e-4).abs() < 5e-7);
    }

    #[test]
    fn p_equal_alpha_gives_quarter_c20() {
        let f = GravityField::earth();
        let theta = (f.alpha * f.mu).sqrt();
        let sp = small_params(theta, &f).unwrap();
        assert!((sp.eps2 - f.c20 / 4.0).abs() < 1e-18);
    }

    #[test]
    fn eps3_requires_c20() {
        let f = GravityField {
            c20: 0.0,
            ..GravityField::earth()
        };
        assert_eq!(small_params(5e4, &f), Err(Error::ThirdHarmonicRatio));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(small_params(f64::NAN, &GravityField::earth()).is_err());
        assert!(small_params(0.0, &GravityField::earth()).is_err());
        assert!(GravityField::new(-1.0, 1.0, 0.0, 0.0).is_err());
        assert!(GravityField::new(1.0, 1.0, 1.5, 0.0).is_err());
    }

    #[test]
    fn table_values_at_special_cosines() {
        let q = q_polynomials(0.0);
        assert_eq!((q.q0, q.q1, q.q2, q.q3), (1.0, 0.25, 1.0, 0.25));
        assert_eq!((q.q5, q.q6, q.q13), (0.0, 0.0, 1.0));

        let q = q_polynomials(1.0);
        assert_eq!((q.q0, q.q5, q.q6, q.q2), (56.0, 56.0, 56.0, 0.0));
        assert_eq!((q.q13, q.q15), (112.0, 56.0));

        let q = q_polynomials(0.2f64.sqrt());
        assert!(q.q0.abs() < 1e-15 && q.q2.abs() < 1e-15 && q.q13.abs() < 1e-15);
    }

    #[test]
    fn p_coefficient_examples() {
        let q = q_polynomials(0.0);
        let p = p_coefficients(0.0, 0.0, &q);
        assert_eq!((p.p1, p.p2, p.p3, p.p4), (0.0, 0.0, q.q2, q.q0));
        let p = p_coefficients(1.0, 0.0, &q);
        assert_eq!(p.p1, 1.25);
        assert_eq!(p.p4, 1.0);

        let q = q_polynomials(0.4);
        let a = p_coefficients(0.3, 0.1, &q);
        let b = p_coefficients(0.3, 0.2, &q);
        assert!((b.p1 - a.p1 - 3.0 * q.q8 * 0.01).abs() < 1e-15);
        assert!((b.p2 - a.p2 - 3.0 * q.q10 * 0.01).abs() < 1e-15);
    }

    #[test]
    fn guard_band() {
        let crit = (0.2f64).sqrt().acos();
        assert!(critical_inclination_guard(crit.cos(), DEFAULT_GUARD_TOLERANCE).is_err());
        assert!(critical_inclination_guard(-crit.cos(), DEFAULT_GUARD_TOLERANCE).is_err());
        assert!(critical_inclination_guard(116.565f64.to_radians().cos(), 1e-3).is_err());
        assert!(critical_inclination_guard(30f64.to_radians().cos(), 1e-3).is_ok());
    }
}
