#![no_main]

use brouwer_cli::{parse_override, Config};
use libfuzzer_sys::fuzz_target;

const BASE: &str = "[initial]\nposition = [7000.0, 0.0, 0.0]\nvelocity = [0.0, 5.2, 5.3]\n";

// One override per line, applied over a valid base file.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    let overrides: Vec<_> = text.lines().filter_map(|l| parse_override(l).ok()).collect();
    for o in &overrides {
        assert!(!o.path.is_empty());
    }
    let _ = Config::parse(BASE, &overrides);
});
