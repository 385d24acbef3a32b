#![no_main]

use coxlip::io::parse_sample_table;
use coxlip::spectral::classify_torus_map;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(table) = parse_sample_table(s) {
        let _ = classify_torus_map(&table);
    }
});
