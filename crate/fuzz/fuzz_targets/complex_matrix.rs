#![no_main]

use coxlip::io::parse_complex_matrix;
use coxlip::spectral::{matrix_spectrum_ordered, Tolerances};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(s) = std::str::from_utf8(data) else { return };
    if let Ok(m) = parse_complex_matrix(s) {
        if m.is_square() && m.nrows() <= 8 {
            let _ = matrix_spectrum_ordered(&m, &Tolerances::default());
        }
    }
});
