//! Replays the checked-in fuzz corpus through the parsers on stable, with the
//! same follow-up checks as the fuzz targets.

use std::path::PathBuf;

use coxlip::coxeter::{CoxeterMatrix, CoxeterSystem};
use coxlip::io::{
    parse_complex_matrix, parse_coxeter_matrix, parse_element, parse_permutation, parse_sample_table, parse_self_map,
    parse_spectrum, word_string,
};
use coxlip::lipschitz::{is_phi_lipschitz, LipschitzCondition};
use coxlip::spectral::{classify_torus_map, matrix_spectrum_ordered, morton_select, Tolerances};

fn corpus(target: &str) -> Vec<String> {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus").join(target);
    let mut files: Vec<PathBuf> = std::fs::read_dir(&dir)
        .unwrap_or_else(|e| panic!("{}: {e}", dir.display()))
        .map(|e| e.unwrap().path())
        .collect();
    files.sort();
    assert!(!files.is_empty(), "empty corpus for {target}");
    files.iter().map(|f| String::from_utf8_lossy(&std::fs::read(f).unwrap()).into_owned()).collect()
}

#[test]
fn coxeter_matrix_seeds() {
    let mut built = 0;
    for s in corpus("coxeter_matrix") {
        if let Ok(m) = parse_coxeter_matrix(&s) {
            if let Ok(sys) = CoxeterSystem::build(m, 200) {
                assert_eq!(sys.length(sys.longest_element()), sys.reflections().len());
                built += 1;
            }
        }
    }
    assert!(built >= 2);
}

#[test]
fn element_seeds() {
    let sys = CoxeterSystem::with_default_bound(CoxeterMatrix::type_a(3)).unwrap();
    for s in corpus("element") {
        let e = parse_element(&sys, &s).unwrap_or_else(|err| panic!("{s:?}: {err}"));
        assert_eq!(parse_element(&sys, &word_string(&sys, e)).unwrap(), e);
    }
}

#[test]
fn self_map_seeds() {
    let sys = CoxeterSystem::with_default_bound(CoxeterMatrix::type_a(2)).unwrap();
    let mut parsed = 0;
    for s in corpus("self_map") {
        if let Ok(tau) = parse_self_map(&sys, &s) {
            is_phi_lipschitz(&sys, &tau, &LipschitzCondition::FullReflectionSet).unwrap();
            parsed += 1;
        }
    }
    assert!(parsed >= 3);
}

#[test]
fn permutation_seeds() {
    for s in corpus("permutation") {
        let p = parse_permutation(&s, Some(6)).unwrap_or_else(|err| panic!("{s:?}: {err}"));
        assert!(p.compose(&p.inverse()).is_identity());
        assert_eq!(parse_permutation(&p.to_string(), Some(p.n())).unwrap(), p);
    }
}

#[test]
fn spectrum_seeds() {
    for s in corpus("spectrum") {
        let spec = parse_spectrum(&s).unwrap_or_else(|err| panic!("{s:?}: {err}"));
        assert_eq!(morton_select(&spec).x.len(), spec.n());
    }
}

#[test]
fn complex_matrix_seeds() {
    let mut ordered = 0;
    for s in corpus("complex_matrix") {
        if let Ok(m) = parse_complex_matrix(&s) {
            if m.is_square() && m.nrows() <= 8 && matrix_spectrum_ordered(&m, &Tolerances::default()).is_ok() {
                ordered += 1;
            }
        }
    }
    assert!(ordered >= 2);
}

#[test]
fn sample_table_seeds() {
    for s in corpus("sample_table") {
        let table = parse_sample_table(&s).unwrap_or_else(|err| panic!("{s:?}: {err}"));
        classify_torus_map(&table).unwrap();
    }
}
