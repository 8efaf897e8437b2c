#![no_main]

use brouwer_cli::output::{read_ephemeris, write_ephemeris};
use libfuzzer_sys::fuzz_target;

// Anything the reader accepts must survive a write/read cycle bit for bit.
fuzz_target!(|data: &[u8]| {
    let Ok(rows) = read_ephemeris(data) else { return };
    let mut buf = Vec::new();
    write_ephemeris(&mut buf, &rows).expect("write to memory");
    let again = read_ephemeris(buf.as_slice()).expect("reread own output");
    assert_eq!(rows.len(), again.len());
    for (a, b) in rows.iter().zip(&again) {
        assert_eq!(a.t.to_bits(), b.t.to_bits());
        assert_eq!(a.state.position.map(f64::to_bits), b.state.position.map(f64::to_bits));
        assert_eq!(a.state.velocity.map(f64::to_bits), b.state.velocity.map(f64::to_bits));
    }
});
