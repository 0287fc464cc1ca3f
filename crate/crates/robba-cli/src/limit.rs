use std::fmt::Write;

use num_rational::Rational64;
use padic_core::QuadExtScalar;
use serde_json::json;
use trianguline_limits::{
    approximate_l, blowup_coords, fourth_limit, limit_point, limit_type, normalized_fourth, normalized_third, recover_semistable_parameter,
    sequence_term, third_limit, working_precision, LApprox, LimitType, SequenceParams,
};

use crate::config::RunConfig;
use crate::error::CliError;
use crate::report::Report;

fn gap(x: &QuadExtScalar, y: &QuadExtScalar) -> Rational64 {
    (x - y).valuation_lb()
}

fn weakly_increasing(v: &[Rational64]) -> bool {
    v.windows(2).all(|w| w[0] <= w[1])
}

pub fn cmd_limit(cfg: &RunConfig) -> Result<Report, CliError> {
    cfg.validate()?;
    let params = SequenceParams::new(cfg.p, cfg.k, cfg.l.clone())?;
    let p = cfg.p;
    let third = third_limit(&params);
    let mut text = String::new();
    writeln!(text, "p={p} k={} L={} n_max={}", cfg.k, cfg.l, cfg.n_max).unwrap();
    let mut terms = Vec::new();
    let (mut g3, mut g4) = (Vec::new(), Vec::new());
    for n in 1..=cfg.n_max {
        let (kn, an) = sequence_term(&params, n)?;
        let prec = working_precision(&params, n);
        let pt = blowup_coords(&params, n)?;
        let t3 = normalized_third(&params, n)?;
        let t4 = normalized_fourth(&params, n)?;
        let d3 = gap(&t3, &third.to_scalar(p, prec));
        let d4 = gap(&t4, &QuadExtScalar::from_base(fourth_limit(&params, prec)?));
        g3.push(d3);
        g4.push(d4);
        let approx = match approximate_l(&params, n)? {
            LApprox::Finite(x) => x.to_string(),
            LApprox::Infinity => "inf".into(),
        };
        writeln!(text, "n={n}: k_n={kn} a_n={an} gaps third={d3} fourth={d4}").unwrap();
        terms.push(json!({
            "n": n,
            "k_n": kn.to_string(),
            "a_n": an.to_string(),
            "s1": pt.s1.to_string(),
            "s2": pt.s2.to_string(),
            "xi1": pt.xi1.to_string(),
            "xi2": pt.xi2.to_string(),
            "third": t3.to_string(),
            "fourth": t4.to_string(),
            "third_gap": d3.to_string(),
            "fourth_gap": d4.to_string(),
            "approx_L": approx,
        }));
    }
    let lp = limit_point(&params);
    let kind = limit_type(&lp)?;
    let recovered = recover_semistable_parameter(&params)?;
    let round_trip = recovered == cfg.l;
    let monotone = weakly_increasing(&g3) && weakly_increasing(&g4);
    let pass = round_trip && monotone;
    let kind_name = match kind {
        LimitType::Crystalline => "Crystalline",
        LimitType::SemistableNoncrystalline => "SemistableNoncrystalline",
    };
    writeln!(text, "limit: ({}, {}, {} : {}*log(1+p)) {kind_name}", lp.s1, lp.s2, lp.dir.a, lp.dir.b).unwrap();
    writeln!(text, "recovered L = {recovered} ({})", if round_trip { "ok" } else { "FAIL" }).unwrap();
    writeln!(text, "gaps weakly increasing: {}", if monotone { "ok" } else { "FAIL" }).unwrap();
    let json = json!({
        "command": "limit",
        "p": p,
        "k": cfg.k,
        "L": cfg.l.to_string(),
        "n_max": cfg.n_max,
        "terms": terms,
        "limit": {
            "s1": lp.s1.to_string(),
            "s2": lp.s2.to_string(),
            "direction": [lp.dir.a.to_string(), lp.dir.b.to_string()],
            "type": kind_name,
        },
        "recovered_L": recovered.to_string(),
        "round_trip": round_trip,
        "gaps_monotone": monotone,
        "pass": pass,
    });
    Ok(Report { json, text, pass })
}
