#![no_main]

use diffsat::io::{parse_query, write_query};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(q) = parse_query(text) {
        assert_eq!(parse_query(&write_query(&q)).unwrap(), q);
    }
});
