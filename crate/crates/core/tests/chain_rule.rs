mod common;

use brouwer::gravity::DEFAULT_GUARD_TOLERANCE;
use brouwer::long_period::long_corrections_nonsingular;
use brouwer::oracle::{long_chain_image, short_chain_image};
use brouwer::short_period::short_corrections_nonsingular;
use brouwer::{Chart, NonsingularDeltas, PolarNodalState};
use common::*;

fn states(seed: u64) -> Vec<PolarNodalState> {
    let mut rng = rng(seed);
    let bands = [(5.0, 60.0), (120.0, 175.0)];
    (0..100)
        .map(|_| {
            let incl = inclination_from(&mut rng, &bands);
            polar_state(&random_elements(&mut rng, 0.8, incl), &earth())
        })
        .collect()
}

fn worst(a: &NonsingularDeltas, b: &NonsingularDeltas, s: &Scales) -> f64 {
    [
        rel(a.psi, b.psi, s.angle),
        rel(a.xi, b.xi, s.angle),
        rel(a.chi, b.chi, s.angle),
        rel(a.r, b.r, s.r),
        rel(a.big_r, b.big_r, s.big_r),
        rel(a.big_theta, b.big_theta, s.big_theta),
        rel(a.big_n, b.big_n, s.big_theta),
    ]
    .into_iter()
    .fold(0.0, f64::max)
}

#[test]
fn short_period_nonsingular_is_chain_image() {
    let field = earth();
    let mut retrograde = 0;
    for pn in states(20) {
        let ns = pn.to_nonsingular();
        retrograde += (ns.chart == Chart::Retrograde) as usize;
        let direct = short_corrections_nonsingular(&ns, &field).unwrap();
        let image = short_chain_image(&pn, &field).unwrap();
        let eps = field.small_params(pn.big_theta).unwrap().eps2;
        let err = worst(&direct, &image, &Scales::new(&pn, eps));
        assert!(err < 1e-10, "{err:e}\n{direct:?}\n{image:?}");
    }
    assert!(retrograde > 20);
}

#[test]
fn long_period_nonsingular_is_chain_image() {
    let field = earth();
    for pn in states(21) {
        let ns = pn.to_nonsingular();
        let tol = DEFAULT_GUARD_TOLERANCE;
        let direct = long_corrections_nonsingular(&ns, &field, tol).unwrap();
        let image = long_chain_image(&pn, &field, tol).unwrap();
        let sp = field.small_params(pn.big_theta).unwrap();
        let eps = sp.eps2.abs().max(sp.eps3.abs()) * 1e-2;
        let err = worst(&direct, &image, &Scales::new(&pn, eps));
        assert!(err < 1e-10, "{err:e}\n{direct:?}\n{image:?}");
    }
}

/// Each factor the corrected long-period forms depend on, checked on its own
/// with the other harmonic switched off.
#[test]
fn long_period_terms_separately() {
    let full = earth();
    for field in [full.without_c30(), brouwer::GravityField { c30: full.c30 * 50.0, ..full }] {
        for pn in states(22).into_iter().take(30) {
            let ns = pn.to_nonsingular();
            let tol = DEFAULT_GUARD_TOLERANCE;
            let direct = long_corrections_nonsingular(&ns, &field, tol).unwrap();
            let image = long_chain_image(&pn, &field, tol).unwrap();
            let sp = field.small_params(pn.big_theta).unwrap();
            let eps = sp.eps2.abs().max(sp.eps3.abs()) * 1e-2;
            assert!(worst(&direct, &image, &Scales::new(&pn, eps)) < 1e-10);
        }
    }
}
