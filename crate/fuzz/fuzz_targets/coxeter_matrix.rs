#![no_main]

use coxlip::coxeter::CoxeterSystem;
use coxlip::io::parse_coxeter_matrix;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(m) = parse_coxeter_matrix(s) {
        // Small bound keeps each run short; infinite groups must be rejected.
        if let Ok(sys) = CoxeterSystem::build(m, 200) {
            let w0 = sys.longest_element();
            assert_eq!(sys.length(w0), sys.reflections().len());
        }
    }
});
