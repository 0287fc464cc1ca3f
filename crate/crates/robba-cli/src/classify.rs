use std::fmt::Write;

use reduction_classifier::{
    bm_crosscheck, bm_inertia_shape, classify, classify_inertia, gp_inertia_shape, nu_invariant, ClassificationRecord,
};
use serde_json::json;
use trianguline_limits::LValue;

use crate::config::RunConfig;
use crate::error::CliError;
use crate::report::Report;

pub struct ClassifyArgs {
    pub full: bool,
    pub table: bool,
}

/// Cross-checks for one weight: the even or odd weight encoding, and the
/// full description restricted to inertia.
fn checks(p: u64, k: u32, l: &LValue, full: bool) -> Result<Vec<(String, bool)>, CliError> {
    let inertia = classify_inertia(p, k, l)?;
    let mut out = Vec::new();
    if k % 2 == 0 {
        let bm = bm_crosscheck(p, k, l)?;
        out.push((format!("k={k}: v_p(a) = nu"), bm.equal));
        out.push((format!("k={k}: even weight encoding"), bm_inertia_shape(p, k, nu_invariant(p, k, l))? == inertia));
    } else {
        out.push((format!("k={k}: odd weight encoding"), gp_inertia_shape(p, k, l)? == inertia));
    }
    if full {
        out.push((format!("k={k}: full restricts to inertia"), classify(p, k, l, true)?.inertia(p) == inertia));
    }
    Ok(out)
}

pub fn cmd_classify(cfg: &RunConfig, args: &ClassifyArgs) -> Result<Report, CliError> {
    cfg.validate()?;
    let p = cfg.p;
    let weights: Vec<u32> = if args.table { (3..=cfg.k).collect() } else { vec![cfg.k] };
    let mut records = Vec::new();
    let mut all = Vec::new();
    let mut text = String::new();
    for &k in &weights {
        let shape = classify(p, k, &cfg.l, args.full)?;
        let rec = ClassificationRecord::new(p, k, &cfg.l, &shape);
        writeln!(text, "p={p} k={k} L={} nu={}: {shape}{}", rec.l, rec.nu, if rec.conditional { " (conditional)" } else { "" }).unwrap();
        records.push(rec);
        all.extend(checks(p, k, &cfg.l, args.full)?);
    }
    let pass = all.iter().all(|(_, ok)| *ok);
    for (name, ok) in &all {
        writeln!(text, "{name}: {}", if *ok { "ok" } else { "FAIL" }).unwrap();
    }
    let checks: Vec<_> = all.iter().map(|(name, ok)| json!({"name": name, "holds": ok})).collect();
    let json = json!({
        "command": "classify",
        "records": records,
        "checks": checks,
        "pass": pass,
    });
    Ok(Report { json, text, pass })
}
