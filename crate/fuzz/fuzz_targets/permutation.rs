#![no_main]

use coxlip::io::parse_permutation;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    for n in [None, Some(6)] {
        if let Ok(p) = parse_permutation(s, n) {
            assert!(p.compose(&p.inverse()).is_identity());
            assert_eq!(parse_permutation(&p.to_string(), Some(p.n())).unwrap(), p);
        }
    }
});
