use std::path::Path;

use anyhow::{bail, Context, Result};
use coxlip::coxeter::CoxeterSystem;
use coxlip::io::{
    parse_complex_matrix, parse_coxeter_matrix, parse_element, parse_sample_table, parse_self_map, parse_spectrum,
    self_map_json, violations_json, word_string,
};
use coxlip::lipschitz::{canonical_family, enumerate_lipschitz, folding_map, is_phi_lipschitz, LipschitzCondition};
use coxlip::spectral::{classify_torus_map, matrix_spectrum_ordered, morton_select_ordered, Tolerances, Verdict};
use serde_json::{json, Value};

use crate::{Condition, ConfigArgs, MatrixArg, Report};

pub fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

pub fn load_system(m: &MatrixArg) -> Result<CoxeterSystem> {
    let matrix = parse_coxeter_matrix(&read(&m.matrix)?).with_context(|| format!("in {}", m.matrix.display()))?;
    Ok(CoxeterSystem::with_default_bound(matrix)?)
}

fn one_based(components: &[Vec<usize>]) -> Vec<Vec<usize>> {
    components.iter().map(|c| c.iter().map(|s| s + 1).collect()).collect()
}

pub fn system_info(m: &MatrixArg) -> Result<Report> {
    let sys = load_system(m)?;
    let w0 = sys.longest_element();
    let body = json!({
        "matrix": sys.matrix(),
        "rank": sys.rank(),
        "order": sys.order(),
        "reflections": sys.reflections().len(),
        "components": one_based(sys.components()),
        "connected": sys.is_connected(),
        "longest_element": {"word": word_string(&sys, w0), "length": sys.length(w0)},
    });
    let summary = format!(
        "order {}, {} reflections, {} components",
        sys.order(),
        sys.reflections().len(),
        sys.components().len()
    );
    Ok(Report { body, holds: true, summary })
}

pub fn enumerate(m: &MatrixArg, condition: Condition, cfg: &ConfigArgs) -> Result<Report> {
    let sys = load_system(m)?;
    let maps = enumerate_lipschitz(&sys, &condition.to_condition(), cfg.search_bound)?;
    let mut body = json!({
        "condition": condition.name(),
        "count": maps.len(),
        "maps": maps.iter().map(|t| self_map_json(&sys, t)).collect::<Vec<_>>(),
    });
    let mut holds = true;
    let mut summary = format!("{} maps satisfy the {} condition", maps.len(), condition.name());
    if let Condition::Full = condition {
        let family = canonical_family(&sys);
        holds = family == maps;
        body["canonical_family"] = json!(family.len());
        body["matches_canonical_family"] = json!(holds);
        summary += &format!(", canonical family has {}", family.len());
    }
    Ok(Report { body, holds, summary })
}

pub fn check_map(m: &MatrixArg, map: &Path, condition: Condition) -> Result<Report> {
    let sys = load_system(m)?;
    let tau = parse_self_map(&sys, &read(map)?).with_context(|| format!("in {}", map.display()))?;
    let r = is_phi_lipschitz(&sys, &tau, &condition.to_condition())?;
    let body = json!({
        "condition": condition.name(),
        "checked": r.checked,
        "passed": r.passed(),
        "violations": violations_json(&sys, &r.violations),
    });
    let summary =
        format!("{} of {} instances violate the {} condition", r.violations.len(), r.checked, condition.name());
    Ok(Report { body, holds: r.passed(), summary })
}

pub fn fold(m: &MatrixArg, generator: usize) -> Result<Report> {
    let sys = load_system(m)?;
    if generator == 0 || generator > sys.rank() {
        bail!("generator {generator} outside 1..={}", sys.rank());
    }
    let tau = folding_map(&sys, generator - 1)?;
    let s = is_phi_lipschitz(&sys, &tau, &LipschitzCondition::SimpleGenerators)?;
    let t = is_phi_lipschitz(&sys, &tau, &LipschitzCondition::FullReflectionSet)?;
    let body = json!({
        "generator": generator,
        "map": self_map_json(&sys, &tau),
        "idempotent": tau.is_idempotent(),
        "s_lipschitz": {"passed": s.passed(), "violations": violations_json(&sys, &s.violations)},
        "t_lipschitz": {"passed": t.passed(), "violations": violations_json(&sys, &t.violations)},
    });
    let summary = format!(
        "fold at {generator}: S-Lipschitz {}, idempotent {}, T-violations {}",
        s.passed(),
        tau.is_idempotent(),
        t.violations.len()
    );
    Ok(Report { body, holds: s.passed() && tau.is_idempotent(), summary })
}

pub fn bruhat(m: &MatrixArg, u: &str, w: &str) -> Result<Report> {
    let sys = load_system(m)?;
    let (u, w) = (parse_element(&sys, u)?, parse_element(&sys, w)?);
    let leq = sys.bruhat_leq(u, w);
    let body = json!({
        "u": {"word": word_string(&sys, u), "length": sys.length(u)},
        "w": {"word": word_string(&sys, w), "length": sys.length(w)},
        "leq": leq,
        "geq": sys.bruhat_leq(w, u),
    });
    let summary = format!("{} {} {}", word_string(&sys, u), if leq { "<=" } else { "is not <=" }, word_string(&sys, w));
    Ok(Report { body, holds: true, summary })
}

/// Accepts a spectrum object or a matrix (array of rows).
pub fn spectral_select(input: &Path, tol: &Tolerances) -> Result<Report> {
    let text = read(input)?;
    let value: Value = serde_json::from_str(&text).with_context(|| format!("in {}", input.display()))?;
    let body = match value {
        Value::Object(_) => {
            let spec = parse_spectrum(&text)?;
            let sel = morton_select_ordered(&spec);
            json!({"x": sel.coords.x, "order": sel.order})
        }
        Value::Array(_) => {
            let x = parse_complex_matrix(&text)?;
            let ordered = matrix_spectrum_ordered(&x, tol)?;
            json!({"x": ordered.coords.x})
        }
        _ => bail!("expected a spectrum object or a matrix"),
    };
    let summary = format!("Morton coordinates {}", body["x"]);
    Ok(Report { body, holds: true, summary })
}

pub fn spectral_classify(input: &Path) -> Result<Report> {
    let table = parse_sample_table(&read(input)?).with_context(|| format!("in {}", input.display()))?;
    let c = classify_torus_map(&table)?;
    let kind = match &c.verdict {
        Verdict::Conjugation { .. } => "conjugation",
        Verdict::Reordering { .. } => "reordering",
        Verdict::Neither { .. } => "neither",
    };
    let summary = format!("{kind}{}", if c.partial { " (partial table)" } else { "" });
    Ok(Report { body: serde_json::to_value(&c)?, holds: true, summary })
}
