#![no_main]

use std::sync::OnceLock;

use coxlip::coxeter::{CoxeterMatrix, CoxeterSystem};
use coxlip::io::{parse_element, word_string};
use libfuzzer_sys::fuzz_target;

static A3: OnceLock<CoxeterSystem> = OnceLock::new();

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let sys = A3.get_or_init(|| CoxeterSystem::with_default_bound(CoxeterMatrix::type_a(3)).unwrap());
    if let Ok(e) = parse_element(sys, s) {
        assert_eq!(parse_element(sys, &word_string(sys, e)).unwrap(), e);
    }
});
