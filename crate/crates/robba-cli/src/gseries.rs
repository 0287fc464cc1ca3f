use std::fmt::Write;

use colmez_g::{budget_cap, check_partial_congruence, residue_c1_gamma, residue_c1_phi, GTermSpec};
use num_rational::BigRational;
use serde_json::json;
use series_core::CharacterParams;

use crate::config::RunConfig;
use crate::error::CliError;
use crate::report::Report;

pub struct GseriesArgs {
    pub r: u32,
    pub check: bool,
    /// Also check the `γ` residues for `n ≤ 2`.
    pub gamma: bool,
}

pub fn cmd_gseries(cfg: &RunConfig, args: &GseriesArgs) -> Result<Report, CliError> {
    cfg.validate()?;
    let (p, r) = (cfg.p, args.r);
    if r == 0 {
        return Err(CliError::Usage("--r must be positive".into()));
    }
    let head = GTermSpec::new(p, r, 1, cfg.depth)?;
    GTermSpec::new(p, r, cfg.n_max, cfg.depth)?;
    let cap = budget_cap();
    let bound = head.degree_bound();
    if bound > cap {
        return Err(colmez_g::ColmezError::BudgetExceeded { needed: bound, cap }.into());
    }
    let mut pass = true;
    let mut text = String::new();
    writeln!(text, "G partial sum: p={p} r={r} n_max={} depth={}", cfg.n_max, cfg.depth).unwrap();
    writeln!(text, "degree bound {bound} (cap {cap})").unwrap();
    let mut congruences = Vec::new();
    let mut c1 = serde_json::Value::Null;
    let mut gamma = Vec::new();
    if args.check {
        for n in 1..=cfg.n_max {
            let c = check_partial_congruence(p, r, n, cfg.n_max, cfg.depth)?;
            pass &= c.holds;
            writeln!(text, "n={n}: G = p^-{n} mod phi_{n}^{}: {}", r + 1, if c.holds { "ok" } else { "FAIL" }).unwrap();
            congruences.push(json!({"n": n, "holds": c.holds, "remainder": c.remainder.to_string()}));
        }
        let rep = residue_c1_phi(p, r, cfg.depth, cfg.prec)?;
        let want = BigRational::new(1.into(), (p as i64).into()) - BigRational::from_integer(1.into());
        pass &= rep.exact == want;
        writeln!(text, "res(t^-1(phi/p - 1)G dt) = {} (exact {}, {} digits)", rep.value, rep.exact, rep.certified).unwrap();
        c1 = json!({"exact": rep.exact.to_string(), "value": rep.value.to_string(), "certified": rep.certified, "holds": rep.exact == want});
        if args.gamma {
            let params = CharacterParams::standard(p);
            for n in 1..=cfg.n_max.min(2) {
                let depth = cfg.depth.max(n + 2);
                let res = residue_c1_gamma(p, r + 1, n, depth, cfg.t_prec, cfg.prec + 20, &params)?;
                pass &= res.is_zero();
                writeln!(text, "n={n}: res(t^-1(gamma - 1)G dt) = {} ({} digits)", res.value, res.certified).unwrap();
                gamma.push(json!({"n": n, "value": res.value.to_string(), "certified": res.certified, "holds": res.is_zero()}));
            }
        }
    }
    let json = json!({
        "command": "gseries",
        "p": p,
        "r": r,
        "n_max": cfg.n_max,
        "depth": cfg.depth,
        "degree_bound": bound,
        "budget_cap": cap,
        "congruences": congruences,
        "c1_phi": c1,
        "c1_gamma": gamma,
        "pass": pass,
    });
    Ok(Report { json, text, pass })
}
