#![no_main]

use diffsat::io::{parse_dimacs_cnf, write_dimacs_cnf};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(phi) = parse_dimacs_cnf(text) {
        assert_eq!(parse_dimacs_cnf(&write_dimacs_cnf(&phi)).unwrap(), phi);
    }
});
