//! Command dispatch.

use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use crate::budget::{Budget, BUDGET_ENV};
use crate::cli::config::{Command, RunConfig};
use crate::cli::report::Report;
use crate::divisor::{enumerate_effective, mobius, mobius_inversion_check, brute_q, PlaceTable};
use crate::error::{Error, Result};
use crate::genus0::{brute_v, fast_v_genus0};
use crate::theorems::{density_report, lemma4_report, thm1_report, thm2_q_exact, thm2_report};
use crate::zeta::{place_counts, point_counts, truncation_for, validate_weil_to, SZeta, DEFAULT_TRUNCATION};

pub const EXIT_OK: i32 = 0;
pub const EXIT_CONFIG: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_INVALID_CURVE: i32 = 4;

/// Rows emitted by `zeta-series` when no truncation is given.
pub const SERIES_ROWS: usize = 20;
/// Largest degree checked by `verify-mobius` when no truncation is given.
pub const MOBIUS_DEGREE: usize = 8;

/// A finished run: the report and the status the process should exit with.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub report: Report,
    pub status: i32,
}

pub fn exit_code(e: &Error) -> i32 {
    match e {
        Error::BudgetExceeded { .. } => EXIT_BUDGET,
        Error::InvalidCurve(_) => EXIT_INVALID_CURVE,
        _ => EXIT_CONFIG,
    }
}

/// The machine-readable record written to stderr on failure.
#[derive(Debug, Clone, Serialize)]
pub struct ErrorRecord {
    pub status: i32,
    pub kind: &'static str,
    pub message: String,
}

impl ErrorRecord {
    pub fn new(status: i32, message: impl Into<String>) -> Self {
        let kind = match status {
            EXIT_BUDGET => "budget-exceeded",
            EXIT_INVALID_CURVE => "invalid-curve",
            _ => "config",
        };
        ErrorRecord { status, kind, message: message.into() }
    }

    pub fn from_error(e: &Error) -> Self {
        Self::new(exit_code(e), e.to_string())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("error record serializes")
    }
}

/// `WCOPRIME_BUDGET` when set, then the config value, then the default.
pub fn effective_budget(cfg: &RunConfig) -> Budget {
    if std::env::var(BUDGET_ENV).is_ok() {
        return Budget::from_env();
    }
    cfg.budget.map(Budget).unwrap_or_default()
}

fn range(cfg: &RunConfig) -> Result<(i64, i64)> {
    match (cfg.params.range_lo, cfg.params.range_hi) {
        (Some(lo), Some(hi)) => Ok((lo, hi)),
        _ => Err(Error::Config(format!("{} requires range_lo and range_hi", cfg.command))),
    }
}

fn need<T: Copy>(v: Option<T>, name: &str, cmd: Command) -> Result<T> {
    v.ok_or_else(|| Error::Config(format!("{cmd} requires params.{name}")))
}

fn zeta_for(cfg: &RunConfig, reach: i64) -> Result<SZeta> {
    let curve = cfg.curve_spec()?;
    let t = cfg
        .params
        .truncation
        .unwrap_or_else(|| truncation_for(reach.max(0) as usize, curve.genus));
    SZeta::new(&curve, &cfg.s_spec()?, t)
}

pub fn run(cfg: &RunConfig) -> Result<Outcome> {
    let budget = effective_budget(cfg);
    let p = &cfg.params;
    let cmd = cfg.command;
    let ok = |report| Ok(Outcome { report, status: EXIT_OK });
    match cmd {
        Command::CurveValidate => curve_validate(cfg),
        Command::ZetaSeries => {
            let t = p.truncation.unwrap_or(SERIES_ROWS);
            let curve = cfg.curve_spec()?;
            let z = SZeta::new(&curve, &cfg.s_spec()?, t)?;
            let rows = (0..=t)
                .map(|k| {
                    Ok(vec![
                        k.to_string(),
                        z.b(k)?.to_string(),
                        z.b_s(k)?.to_string(),
                        z.mu(k)?.to_string(),
                        z.j(k as i64)?.to_string(),
                    ])
                })
                .collect::<Result<Vec<_>>>()?;
            ok(Report::table(&["k", "b_k", "b_S_k", "mu_S_k", "j_S_k"], rows))
        }
        Command::ZetaValue => {
            let t = need(p.t, "t", cmd)?;
            let z = zeta_for(cfg, 0)?;
            ok(Report::table(
                &["curve", "q", "s", "t", "value"],
                vec![vec![
                    z.curve().label(),
                    z.q().to_string(),
                    z.s().to_string(),
                    t.to_string(),
                    z.value(t)?.to_string(),
                ]],
            ))
        }
        Command::CountElements => {
            let m = need(p.m, "m", cmd)?;
            let w = need(p.w, "w", cmd)?;
            let ring = cfg.ring()?;
            let spec = cfg.s_divisor()?;
            let n = spec.degree();
            let brute = brute_v(&ring, &spec, m, w, budget)?;
            let fast = if n > 0 {
                let z = zeta_for(cfg, n)?;
                Some(fast_v_genus0(&spec, m, w, &z)?)
            } else {
                None
            };
            let d: Vec<String> = spec.entries().iter().map(|(pl, k)| format!("{k}*{pl}")).collect();
            ok(Report::table(
                &["q", "D", "N", "m", "w", "brute", "fast", "agree"],
                vec![vec![
                    ring.q().to_string(),
                    d.join(" + "),
                    n.to_string(),
                    m.to_string(),
                    w.to_string(),
                    brute.to_string(),
                    fast.as_ref().map_or(String::new(), |f| f.to_string()),
                    fast.as_ref().map_or(String::new(), |f| (*f == brute).to_string()),
                ]],
            ))
        }
        Command::CountIdeals => {
            let m = need(p.m, "m", cmd)?;
            let w = need(p.w, "w", cmd)?;
            let n = need(p.n, "n", cmd)?;
            let z = zeta_for(cfg, n)?;
            let exact = thm2_q_exact(&z, n, m, w)?;
            let brute = if n >= 0 {
                let table = PlaceTable::from_zeta(&z, n as usize)?;
                brute_q(&table, n as usize, m, w, budget)?
            } else {
                BigInt::zero()
            };
            ok(Report::table(
                &["curve", "q", "genus", "s", "n", "m", "w", "brute", "exact", "agree"],
                vec![vec![
                    z.curve().label(),
                    z.q().to_string(),
                    z.curve().genus.to_string(),
                    z.s().to_string(),
                    n.to_string(),
                    m.to_string(),
                    w.to_string(),
                    brute.to_string(),
                    exact.to_string(),
                    (brute == exact).to_string(),
                ]],
            ))
        }
        Command::VerifyThm1 => {
            let (lo, hi) = range(cfg)?;
            let z = zeta_for(cfg, hi)?;
            ok(Report::Counts(thm1_report(&z, need(p.m, "m", cmd)?, need(p.w, "w", cmd)?, lo..=hi)?))
        }
        Command::VerifyThm2 => {
            let (lo, hi) = range(cfg)?;
            let z = zeta_for(cfg, hi)?;
            ok(Report::Counts(thm2_report(&z, need(p.m, "m", cmd)?, need(p.w, "w", cmd)?, lo..=hi)?))
        }
        Command::VerifyLemma4 => {
            let (lo, hi) = range(cfg)?;
            let z = zeta_for(cfg, hi)?;
            ok(Report::Lemma4(lemma4_report(&z, lo..=hi)?))
        }
        Command::Density => {
            let (lo, hi) = range(cfg)?;
            let z = zeta_for(cfg, hi)?;
            ok(Report::Density(density_report(&z, need(p.m, "m", cmd)?, need(p.w, "w", cmd)?, lo..=hi)?))
        }
        Command::VerifyMobius => verify_mobius(cfg, budget),
    }
}

fn curve_validate(cfg: &RunConfig) -> Result<Outcome> {
    let curve = cfg.curve_spec()?;
    let report = validate_weil_to(&curve, DEFAULT_TRUNCATION);
    let mut rows = vec![
        vec!["curve".into(), curve.label()],
        vec!["q".into(), curve.q.to_string()],
        vec!["genus".into(), curve.genus.to_string()],
        vec![
            "weil_coeffs".into(),
            curve.weil_coeffs.iter().map(|a| a.to_string()).collect::<Vec<_>>().join(" "),
        ],
        vec!["class_number".into(), report.class_number.to_string()],
    ];
    let valid = report.is_valid();
    if valid {
        let d = 4.max(2 * curve.genus as usize);
        let points = point_counts(&curve, d);
        let places = place_counts(&curve, d)?;
        for (i, (n, a)) in points.iter().zip(&places).enumerate() {
            rows.push(vec![format!("N_{}", i + 1), n.to_string()]);
            rows.push(vec![format!("places_{}", i + 1), a.to_string()]);
        }
        let s_ok = cfg.s_spec().and_then(|s| s.check_compatible(&curve));
        rows.push(vec!["s".into(), cfg.s_spec().map_or(String::new(), |s| s.to_string())]);
        rows.push(vec![
            "s_compatible".into(),
            match &s_ok {
                Ok(()) => "true".into(),
                Err(e) => e.to_string(),
            },
        ]);
    }
    rows.push(vec!["valid".into(), valid.to_string()]);
    for v in &report.violations {
        rows.push(vec!["violation".into(), v.to_string()]);
    }
    Ok(Outcome {
        report: Report::table(&["key", "value"], rows),
        status: if valid { EXIT_OK } else { EXIT_INVALID_CURVE },
    })
}

/// Series coefficients against direct enumeration of effective divisors, with
/// the Möbius inversion identity checked on every enumerated divisor.
fn verify_mobius(cfg: &RunConfig, budget: Budget) -> Result<Outcome> {
    let k_max = cfg.params.truncation.unwrap_or(MOBIUS_DEGREE);
    let curve = cfg.curve_spec()?;
    let z = SZeta::new(&curve, &cfg.s_spec()?, k_max.max(1))?;
    let table = PlaceTable::from_zeta(&z, k_max)?;
    let mut counts = vec![BigInt::zero(); k_max + 1];
    let mut mus = vec![BigInt::zero(); k_max + 1];
    let mut inversion_failures = vec![0u64; k_max + 1];
    for d in enumerate_effective(&table, k_max, budget)? {
        let k = d.degree() as usize;
        counts[k] += 1;
        mus[k] += mobius(&d);
        if !mobius_inversion_check(&d) {
            inversion_failures[k] += 1;
        }
    }
    let rows = (0..=k_max)
        .map(|k| {
            let b = z.b_s(k)?;
            let mu = z.mu(k)?;
            let agree = *b == counts[k] && *mu == mus[k] && inversion_failures[k] == 0;
            Ok(vec![
                k.to_string(),
                b.to_string(),
                counts[k].to_string(),
                mu.to_string(),
                mus[k].to_string(),
                inversion_failures[k].to_string(),
                agree.to_string(),
            ])
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Outcome {
        report: Report::table(
            &["k", "b_S_series", "b_S_enumerated", "mu_S_series", "mu_S_enumerated", "inversion_failures", "agree"],
            rows,
        ),
        status: EXIT_OK,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cli::config::{parse_config, Format};
    use crate::cli::report::emit_report;

    fn run_text(text: &str) -> String {
        let cfg = parse_config(text).unwrap();
        let out = run(&cfg).unwrap();
        String::from_utf8(emit_report(&out.report, Format::Csv)).unwrap()
    }

    #[test]
    fn zeta_value_e2() {
        let out = run_text(
            "command = \"zeta-value\"\ncurve = \"e2-supersingular\"\n[S]\ndegrees = [1]\n[params]\nt = 2\n",
        );
        assert_eq!(out.lines().nth(1).unwrap(), "e2-supersingular,2,{1},2,9/4");
    }

    #[test]
    fn count_elements_nine() {
        let out = run_text(
            "command = \"count-elements\"\ncurve = \"rational\"\nq = 2\n[S]\nplaces = [\"inf\"]\n[params]\nN = 1\nm = 2\nw = 1\n",
        );
        let row = out.lines().nth(1).unwrap();
        assert!(row.ends_with(",9,9,true"), "{row}");
    }

    #[test]
    fn mobius_rows_agree() {
        let out = run_text("command = \"verify-mobius\"\ncurve = \"e2-supersingular\"\n[S]\ndegrees = [1]\n");
        assert_eq!(out.lines().count(), 1 + MOBIUS_DEGREE + 1);
        assert!(out.lines().skip(1).all(|l| l.ends_with(",0,true")));
    }

    #[test]
    fn invalid_curve_exits_four() {
        let cfg = parse_config(
            "command = \"curve-validate\"\ncurve = { q = 2, genus = 1, weil_coeffs = [1, 0, 3] }\n[S]\ndegrees = [1]\n",
        )
        .unwrap();
        assert_eq!(run(&cfg).unwrap().status, EXIT_INVALID_CURVE);
    }

    #[test]
    fn budget_exhaustion_is_distinct() {
        let mut cfg = parse_config(
            "command = \"count-ideals\"\ncurve = \"rational\"\nq = 2\nbudget = 10\n[S]\ndegrees = [1]\n[params]\nm = 2\nw = 1\nn = 4\n",
        )
        .unwrap();
        if std::env::var(BUDGET_ENV).is_err() {
            let e = run(&cfg).unwrap_err();
            assert_eq!(exit_code(&e), EXIT_BUDGET);
        }
        cfg.budget = None;
        assert!(run(&cfg).is_ok());
    }
}
