#![no_main]

use diffsat::io::{parse_instance, write_instance};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(file) = parse_instance(text) {
        let again = parse_instance(&write_instance(&file.instance)).unwrap();
        assert_eq!(again.instance, file.instance);
        assert_eq!(again.format, file.format);
    }
});
