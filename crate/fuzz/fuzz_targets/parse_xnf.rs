#![no_main]

use diffsat::io::{parse_xnf, write_xnf};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(sys) = parse_xnf(text) {
        assert_eq!(parse_xnf(&write_xnf(&sys)).unwrap(), sys);
    }
});
