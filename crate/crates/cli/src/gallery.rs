use anyhow::{bail, Result};
use coxlip::lipschitz::{
    canonical_family, enumerate_lipschitz, exhaustive_lipschitz, infinite_dihedral, LipschitzCondition,
};
use coxlip::spectral::{
    all_permutations, cs_check, herm_hybrid as hybrid_map, non_globality_witness, su2_counterexample, CMatrix,
    CsDomain, HermitianDiagonal3, Tolerances, C64,
};
use coxlip::symmetric::{enumerate_cyclic_lipschitz, just_n1_example, SymmetricGroup};
use serde_json::json;

use crate::commands::load_system;
use crate::{ConfigArgs, MatrixArg, Report};

fn pass_fail(b: bool) -> &'static str {
    if b {
        "pass"
    } else {
        "fail"
    }
}

pub fn just_n1() -> Result<Report> {
    let (group, _, report) = just_n1_example()?;
    let violations: Vec<_> = report
        .c_simple
        .violations
        .iter()
        .map(|v| json!({"theta": group.permutation(v.theta).to_string(), "sigma": group.permutation(v.sigma).to_string()}))
        .collect();
    let rows: Vec<_> =
        report.rows.iter().map(|(theta, tau)| json!({"theta": theta.to_string(), "tau": tau.to_string()})).collect();
    let body = json!({
        "anchor": "S3 map passing the generator-only condition but not the cyclic one",
        "generator_only": pass_fail(report.generator_only.passed()),
        "full_c_simple": pass_fail(report.c_simple.passed()),
        "constant_or_translation": report.constant || report.right_translation,
        "c_simple_violations": violations,
        "rows": rows,
    });
    let summary = format!(
        "generator-only {}, cyclic {} with {} violations",
        pass_fail(report.generator_only.passed()),
        pass_fail(report.c_simple.passed()),
        report.c_simple.violations.len()
    );
    Ok(Report { body, holds: report.passed(), summary })
}

fn hybrid(e: [f64; 3]) -> Option<[f64; 3]> {
    hybrid_map(HermitianDiagonal3::new(e[0], e[1], e[2])).ok().map(|d| d.entries)
}

/// Sweeps a grid containing every tie pattern, checks that the map is
/// defined and continuous at each tie, and exhibits the two witnesses.
pub fn herm_hybrid() -> Result<Report> {
    let grid: Vec<f64> = (-3..=3).map(f64::from).collect();
    let mut inconsistencies = Vec::new();
    let mut ties = Vec::new();
    for &u in &grid {
        for &v in &grid {
            for &w in &grid {
                let e = [u, v, w];
                if hybrid(e).is_none() {
                    inconsistencies.push(e);
                } else if u == v || v == w || u == w {
                    ties.push(e);
                }
            }
        }
    }
    let directions: Vec<[f64; 3]> =
        all_permutations(3).iter().map(|p| [0, 1, 2].map(|i| p.apply(i + 1) as f64 - 2.0)).collect();
    let eps = 1e-9;
    let mut worst: f64 = 0.0;
    for p in &ties {
        let at = hybrid(*p).expect("checked above");
        for d in &directions {
            let near = hybrid([p[0] + eps * d[0], p[1] + eps * d[1], p[2] + eps * d[2]]);
            let gap = near.map_or(f64::INFINITY, |q| (0..3).map(|i| (q[i] - at[i]).abs()).fold(0.0, f64::max));
            worst = worst.max(gap);
        }
    }
    let breaks_identity = ([2.0, 1.0, 3.0], hybrid([2.0, 1.0, 3.0]));
    let breaks_sorted = ([1.0, 3.0, 2.0], hybrid([1.0, 3.0, 2.0]));
    let witnesses_ok = breaks_identity.1 == Some([1.0, 2.0, 3.0]) && breaks_sorted.1 == Some([1.0, 3.0, 2.0]);
    let continuous = worst <= 1e-6;
    let body = json!({
        "anchor": "hybrid reordering of real diagonal 3x3 matrices",
        "grid_points": grid.len().pow(3),
        "tie_points": ties.len(),
        "inconsistencies": inconsistencies,
        "continuity_step": eps,
        "worst_continuity_gap": worst,
        "breaks_identity": {"input": breaks_identity.0, "output": breaks_identity.1},
        "breaks_sorted": {"input": breaks_sorted.0, "output": breaks_sorted.1},
    });
    let holds = inconsistencies.is_empty() && continuous && witnesses_ok;
    let summary = format!(
        "{} inconsistencies over {} points, worst continuity gap {worst:.1e}, witnesses {}",
        inconsistencies.len(),
        grid.len().pow(3),
        pass_fail(witnesses_ok)
    );
    Ok(Report { body, holds, summary })
}

pub fn su2(pairs: usize, seed: u64, tol: &Tolerances) -> Result<Report> {
    let f = |x: &CMatrix| {
        su2_counterexample(x, tol).unwrap_or_else(|_| CMatrix::from_element(2, 2, C64::new(f64::NAN, 0.0)))
    };
    let report = cs_check(&f, CsDomain::SpecialUnitary(2), pairs, seed, tol);
    let witness = non_globality_witness(tol)?;
    let holds = report.passed() && witness.holds(tol);
    let body = json!({
        "anchor": "SU(2) map preserving commuting spectra without a global form",
        "cs_check": report,
        "non_globality": witness,
        "non_globality_holds": witness.holds(tol),
    });
    let summary = format!(
        "cs_check {} on {pairs} pairs, non-globality witness {}",
        pass_fail(report.passed()),
        pass_fail(witness.holds(tol))
    );
    Ok(Report { body, holds, summary })
}

pub fn inf_dihedral(radius: usize) -> Result<Report> {
    if radius == 0 {
        bail!("radius must be positive");
    }
    let r = infinite_dihedral::verify_example(radius);
    let mut body = serde_json::to_value(&r)?;
    body["anchor"] = json!("candidate T-Lipschitz map on the infinite dihedral group");
    body["passed"] = json!(r.passed());
    let summary = format!("radius {radius}: {} violations over {} instances", r.violations.len(), r.instances);
    Ok(Report { body, holds: r.passed(), summary })
}

pub fn cyclic_maps(n: usize) -> Result<Report> {
    let (method, candidates, maps) = if n == 3 {
        let g = SymmetricGroup::new(3)?;
        let r = exhaustive_lipschitz(g.system(), &g.c_simple_phi(), 46_656)?;
        ("exhaustive", Some(r.candidates), r.passing)
    } else {
        ("backtracking", None, enumerate_cyclic_lipschitz(n)?)
    };
    let g = SymmetricGroup::new(n)?;
    let sys = g.system();
    let matches = maps.len() == 2 * sys.order()
        && maps.iter().all(|t| t.constant_value().is_some() || t.right_translator(sys).is_some());
    let body = json!({
        "anchor": "cyclic-condition maps of S_n are constants or right translations",
        "n": n,
        "method": method,
        "candidates": candidates,
        "passing": maps.len(),
        "matches_theorem": matches,
    });
    let summary = format!("S_{n}: {} maps pass ({method}), constants and translations: {matches}", maps.len());
    Ok(Report { body, holds: matches, summary })
}

pub fn canonical_family_check(m: &MatrixArg, cfg: &ConfigArgs) -> Result<Report> {
    let sys = load_system(m)?;
    let found = enumerate_lipschitz(&sys, &LipschitzCondition::FullReflectionSet, cfg.search_bound)?;
    let family = canonical_family(&sys);
    let matches = found == family;
    let body = json!({
        "anchor": "T-Lipschitz maps of a finite Coxeter group form the canonical family",
        "order": sys.order(),
        "components": sys.components().len(),
        "enumerated": found.len(),
        "canonical_family": family.len(),
        "matches_theorem": matches,
    });
    let summary = format!("{} enumerated, {} in the canonical family", found.len(), family.len());
    Ok(Report { body, holds: matches, summary })
}
