#![no_main]

use brouwer_cli::Config;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(config) = Config::parse(text, &[]) {
        assert!(config.grid.step > 0.0);
        assert!(config.times().len() <= 10_000_001);
        config.propagator().expect("validated config builds a propagator");
    }
});
