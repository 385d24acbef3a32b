#![no_main]

use std::sync::OnceLock;

use coxlip::coxeter::{CoxeterMatrix, CoxeterSystem};
use coxlip::io::parse_self_map;
use coxlip::lipschitz::{is_phi_lipschitz, LipschitzCondition};
use libfuzzer_sys::fuzz_target;

static A2: OnceLock<CoxeterSystem> = OnceLock::new();

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    let sys = A2.get_or_init(|| CoxeterSystem::with_default_bound(CoxeterMatrix::type_a(2)).unwrap());
    if let Ok(tau) = parse_self_map(sys, s) {
        is_phi_lipschitz(sys, &tau, &LipschitzCondition::FullReflectionSet).unwrap();
    }
});
