#![no_main]

use brouwer::{mean_to_osculating, osculating_to_mean, CartesianState, GravityField, PropagatorConfig};
use libfuzzer_sys::fuzz_target;

// Six little-endian doubles: position then velocity. Any input either
// errors or yields a finite state.
fuzz_target!(|data: &[u8]| {
    if data.len() < 48 {
        return;
    }
    let v: Vec<f64> = data[..48]
        .chunks_exact(8)
        .map(|c| f64::from_le_bytes(c.try_into().unwrap()))
        .collect();
    let cart = CartesianState::new([v[0], v[1], v[2]], [v[3], v[4], v[5]]);
    let config = PropagatorConfig::new(GravityField::earth());
    if let Ok(mean) = osculating_to_mean(&cart, 0.0, &config) {
        if let Ok(out) = mean_to_osculating(&mean.at(600.0), &config) {
            assert!(out.is_finite());
        }
    }
});
