//! Text and JSON formats shared by the command line and the fuzz targets.
//!
//! Generator labels in words are 1-based: `"1 2 1"` is `s₀s₁s₀`, and `"e"`
//! (or the empty word) is the identity. Element ids in tables are 0-based
//! BFS indices.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::coxeter::{CoxeterError, CoxeterMatrix, CoxeterSystem, ElementId};
use crate::lipschitz::{LipschitzError, SelfMap, Violation};
use crate::spectral::{linalg, CMatrix, SpectralError, TorusMapSampleTable, UnitSpectrum};
use crate::symmetric::{Permutation, SymmetricError};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum IoError {
    #[error("malformed JSON: {0}")]
    Json(String),
    #[error("bad word {0:?}")]
    Word(String),
    #[error("bad map: {0}")]
    Map(String),
    #[error(transparent)]
    Coxeter(#[from] CoxeterError),
    #[error(transparent)]
    Lipschitz(#[from] LipschitzError),
    #[error(transparent)]
    Symmetric(#[from] SymmetricError),
    #[error(transparent)]
    Spectral(#[from] SpectralError),
}

fn json<T: for<'de> Deserialize<'de>>(s: &str) -> Result<T, IoError> {
    serde_json::from_str(s).map_err(|e| IoError::Json(e.to_string()))
}

pub fn parse_coxeter_matrix(s: &str) -> Result<CoxeterMatrix, IoError> {
    json(s)
}

/// Converts 1-based labels to 0-based generator indices.
pub fn word_from_labels(labels: &[u64], rank: usize) -> Result<Vec<usize>, IoError> {
    labels
        .iter()
        .map(|&l| match usize::try_from(l) {
            Ok(l) if (1..=rank).contains(&l) => Ok(l - 1),
            _ => Err(IoError::Word(format!("label {l} outside 1..={rank}"))),
        })
        .collect()
}

/// `"1 2 1"`, `"1,2,1"`, `"e"` or `""`.
pub fn parse_word(s: &str, rank: usize) -> Result<Vec<usize>, IoError> {
    let s = s.trim();
    if s == "e" || s.is_empty() {
        return Ok(Vec::new());
    }
    let labels = s
        .split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<u64>().map_err(|_| IoError::Word(s.to_string())))
        .collect::<Result<Vec<_>, _>>()?;
    word_from_labels(&labels, rank)
}

/// A word given either as a string or as an array of labels.
fn word_from_value(v: &Value, rank: usize) -> Result<Vec<usize>, IoError> {
    match v {
        Value::String(s) => parse_word(s, rank),
        Value::Array(items) => {
            let labels = items
                .iter()
                .map(|x| x.as_u64().ok_or_else(|| IoError::Word(v.to_string())))
                .collect::<Result<Vec<_>, _>>()?;
            word_from_labels(&labels, rank)
        }
        Value::Number(x) => word_from_labels(&[x.as_u64().ok_or_else(|| IoError::Word(v.to_string()))?], rank),
        _ => Err(IoError::Word(v.to_string())),
    }
}

/// `{"word": [1, 2]}`, `{"word": "1 2"}`, or a bare word string/array.
pub fn parse_element(sys: &CoxeterSystem, s: &str) -> Result<ElementId, IoError> {
    let v: Value = json(s).or_else(|_| Ok::<_, IoError>(Value::String(s.to_string())))?;
    let word = match &v {
        Value::Object(map) => {
            word_from_value(map.get("word").ok_or_else(|| IoError::Word(s.to_string()))?, sys.rank())?
        }
        other => word_from_value(other, sys.rank())?,
    };
    Ok(sys.eval_word(&word)?)
}

pub fn word_string(sys: &CoxeterSystem, e: ElementId) -> String {
    let w = sys.word(e);
    if w.is_empty() {
        "e".to_string()
    } else {
        w.iter().map(|s| (s + 1).to_string()).collect::<Vec<_>>().join(" ")
    }
}

#[derive(Deserialize)]
struct RawSelfMap {
    matrix: Option<CoxeterMatrix>,
    table: Option<Vec<u64>>,
    map: Option<BTreeMap<String, String>>,
}

/// Reads `{"matrix": …, "table": [ids]}` or `{"map": {"1 2": "2", …}}`. A
/// present `matrix` must equal the system's, and when both `table` and `map`
/// are given they must agree. Word keys may be any words; two keys naming the
/// same element must give the same value, and every element must be covered.
pub fn parse_self_map(sys: &CoxeterSystem, s: &str) -> Result<SelfMap, IoError> {
    let raw: RawSelfMap = json(s)?;
    if let Some(m) = &raw.matrix {
        if m != sys.matrix() {
            return Err(IoError::Map("matrix does not match the system".into()));
        }
    }
    let from_table = raw.table.map(|t| table_map(sys, &t)).transpose()?;
    let from_words = raw.map.map(|m| word_map(sys, &m)).transpose()?;
    match (from_table, from_words) {
        (Some(a), Some(b)) if a != b => Err(IoError::Map("\"table\" and \"map\" disagree".into())),
        (Some(a), _) | (None, Some(a)) => Ok(a),
        (None, None) => Err(IoError::Map("expected \"table\" or \"map\"".into())),
    }
}

fn table_map(sys: &CoxeterSystem, table: &[u64]) -> Result<SelfMap, IoError> {
    let ids = table
        .iter()
        .map(|&i| usize::try_from(i).map_err(|_| CoxeterError::ForeignElement(usize::MAX)).and_then(|i| sys.element(i)))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(SelfMap::from_table(sys, ids)?)
}

fn word_map(sys: &CoxeterSystem, map: &BTreeMap<String, String>) -> Result<SelfMap, IoError> {
    let mut table: Vec<Option<ElementId>> = vec![None; sys.order()];
    for (k, v) in map {
        let from = sys.eval_word(&parse_word(k, sys.rank())?)?;
        let to = sys.eval_word(&parse_word(v, sys.rank())?)?;
        match table[from.index()] {
            Some(prev) if prev != to => {
                return Err(IoError::Map(format!("conflicting values for {}", word_string(sys, from))))
            }
            _ => table[from.index()] = Some(to),
        }
    }
    let table = table
        .into_iter()
        .enumerate()
        .map(|(i, t)| {
            t.ok_or_else(|| IoError::Map(format!("no value for {}", word_string(sys, ElementId::from_index(i)))))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(SelfMap::from_table(sys, table)?)
}

#[derive(Serialize)]
pub struct SelfMapJson {
    pub matrix: CoxeterMatrix,
    pub table: Vec<ElementId>,
    pub map: BTreeMap<String, String>,
}

pub fn self_map_json(sys: &CoxeterSystem, tau: &SelfMap) -> SelfMapJson {
    SelfMapJson {
        matrix: sys.matrix().clone(),
        table: tau.table().to_vec(),
        map: sys.elements().map(|e| (word_string(sys, e), word_string(sys, tau.apply(e)))).collect(),
    }
}

#[derive(Serialize)]
pub struct ViolationJson {
    pub theta: String,
    pub sigma: String,
}

pub fn violations_json(sys: &CoxeterSystem, violations: &[Violation]) -> Vec<ViolationJson> {
    violations
        .iter()
        .map(|v| ViolationJson { theta: word_string(sys, v.theta), sigma: word_string(sys, v.sigma) })
        .collect()
}

/// `{"n": 3, "images": [2, 1, 3]}`, a bare image list, or cycle notation
/// (which needs `n`).
pub fn parse_permutation(s: &str, n: Option<usize>) -> Result<Permutation, IoError> {
    let t = s.trim();
    if t.starts_with('{') {
        return json(t);
    }
    if t.starts_with('[') {
        return Ok(t.parse::<Permutation>()?);
    }
    let t = t.trim_matches('"');
    let n = n.ok_or_else(|| IoError::Json("cycle notation needs the degree".into()))?;
    Ok(Permutation::parse_cycles(n, t)?)
}

pub fn parse_spectrum(s: &str) -> Result<UnitSpectrum, IoError> {
    json(s)
}

/// Row-major `[[[re, im], …], …]`.
pub fn parse_complex_matrix(s: &str) -> Result<CMatrix, IoError> {
    let rows: Vec<Vec<[f64; 2]>> = json(s)?;
    linalg::from_rows(&rows).ok_or_else(|| IoError::Json("matrix rows are empty or ragged".into()))
}

pub fn parse_sample_table(s: &str) -> Result<TorusMapSampleTable, IoError> {
    json(s)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lipschitz::folding_map;

    fn a2() -> CoxeterSystem {
        CoxeterSystem::with_default_bound(CoxeterMatrix::type_a(2)).unwrap()
    }

    #[test]
    fn words() {
        let sys = a2();
        assert_eq!(parse_word("1 2 1", 2).unwrap(), vec![0, 1, 0]);
        assert_eq!(parse_word("e", 2).unwrap(), Vec::<usize>::new());
        assert!(parse_word("0", 2).is_err());
        assert!(parse_word("3", 2).is_err());
        assert!(parse_word("x", 2).is_err());
        let w0 = sys.longest_element();
        assert_eq!(parse_element(&sys, r#"{"word": [2, 1, 2]}"#).unwrap(), w0);
        assert_eq!(parse_element(&sys, r#"{"word": "1 2 1"}"#).unwrap(), w0);
        assert_eq!(parse_element(&sys, "2 1 2").unwrap(), w0);
        assert_eq!(parse_element(&sys, "2").unwrap(), sys.generator(1));
        assert_eq!(word_string(&sys, w0), "1 2 1");
        assert_eq!(word_string(&sys, sys.identity()), "e");
    }

    #[test]
    fn self_map_round_trip() {
        let sys = a2();
        let fold = folding_map(&sys, 0).unwrap();
        let j = serde_json::to_string(&self_map_json(&sys, &fold)).unwrap();
        let v: Value = serde_json::from_str(&j).unwrap();
        let table_only = serde_json::json!({"matrix": v["matrix"], "table": v["table"]}).to_string();
        assert_eq!(parse_self_map(&sys, &table_only).unwrap(), fold);
        let map_only = serde_json::json!({"map": v["map"]}).to_string();
        assert_eq!(parse_self_map(&sys, &map_only).unwrap(), fold);
        assert_eq!(parse_self_map(&sys, &j).unwrap(), fold);
    }

    #[test]
    fn self_map_errors() {
        let sys = a2();
        assert!(parse_self_map(&sys, r#"{"table": [0, 1]}"#).is_err());
        assert!(parse_self_map(&sys, r#"{"table": [0, 0, 0, 0, 0, 9]}"#).is_err());
        assert!(parse_self_map(&sys, r#"{"map": {"e": "e"}}"#).is_err());
        assert!(parse_self_map(&sys, r#"{"map": {"1 1": "e", "e": "1"}}"#).is_err());
        let other = r#"{"matrix": {"rank": 1, "m": [[1]]}, "table": [0, 0, 0, 0, 0, 0]}"#;
        assert!(parse_self_map(&sys, other).is_err());
        assert!(parse_self_map(&sys, "{}").is_err());
        let both = r#"{"table": [0, 0, 0, 0, 0, 0], "map": {"e": "1", "1": "1", "2": "1", "1 2": "1", "2 1": "1", "1 2 1": "1"}}"#;
        assert!(parse_self_map(&sys, both).is_err());
    }

    #[test]
    fn permutations() {
        let p = parse_permutation(r#"{"n": 3, "images": [2, 3, 1]}"#, None).unwrap();
        assert_eq!(p.to_string(), "(1 2 3)");
        assert_eq!(parse_permutation("[2, 3, 1]", None).unwrap(), p);
        assert_eq!(parse_permutation("(1 2 3)", Some(3)).unwrap(), p);
        assert!(parse_permutation("(1 2 3)", None).is_err());
    }

    #[test]
    fn matrices() {
        let m = parse_complex_matrix("[[[1, 0], [0, 1]], [[0, -1], [1, 0]]]").unwrap();
        assert_eq!(m[(0, 1)].im, 1.0);
        assert_eq!(m[(1, 0)].im, -1.0);
        assert!(parse_complex_matrix("[[[1, 0]], []]").is_err());
        assert!(parse_complex_matrix("[]").is_err());
    }
}
