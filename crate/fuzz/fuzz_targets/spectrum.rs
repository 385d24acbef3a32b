#![no_main]

use coxlip::io::parse_spectrum;
use coxlip::spectral::morton_select;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(spec) = parse_spectrum(s) {
        let x = morton_select(&spec).x;
        assert_eq!(x.len(), spec.n());
    }
});
