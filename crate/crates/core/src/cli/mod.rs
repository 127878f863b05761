//! Command-line front end: `lieorbits <command> [form] [--max-rank N] [--format F]`.
//!
//! Exit codes: 0 on success, 1 when a verification fails, 2 on bad input.

mod dot;

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, ValueEnum};
use serde::Serialize;

pub use dot::emit_dot;

use crate::golden::{reference_row, representatives};
use crate::orbits::{orbit_report, OrbitReport};
use crate::restricted::restricted_root_system;
use crate::satake::{build_satake, catalog, RealFormDescriptor, SatakeDiagram};
use crate::verify::{verify_catalog, VerifySummary};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Command {
    /// Canonical names of every catalog entry up to the rank bound
    List,
    /// Full report for one real form
    Describe,
    /// Families where O_min,g differs from O_min, against the reference rows
    #[value(name = "table1")]
    ReferenceRows,
    /// Every invariant over the catalog; exit 1 on any failure
    Verify,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Debug, Clone, PartialEq, Eq, Parser)]
#[command(
    name = "lieorbits",
    version,
    about = "Minimal nilpotent orbits meeting real simple Lie algebras"
)]
pub struct CliConfig {
    #[arg(value_enum)]
    pub command: Command,
    /// Real form, e.g. `su(2,3)`, `so*(10)`, `e6(-26)`
    pub form_name: Option<String>,
    /// Largest complex rank enumerated by `list` and `verify`
    #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u16).range(2..))]
    pub max_rank: u16,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    pub format: Format,
}

struct Usage(String);

/// Parses `args` (program name first), runs the command, and returns the
/// exit code. Results go to `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let config = match CliConfig::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    match execute(&config, out) {
        Ok(code) => code,
        Err(Usage(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn execute(c: &CliConfig, out: &mut dyn Write) -> Result<i32, Usage> {
    match (c.command, &c.form_name) {
        (Command::Describe, None) => return Err(Usage("`describe` needs a real form".into())),
        (Command::Describe, Some(_)) => {}
        (cmd, Some(form)) => {
            return Err(Usage(format!(
                "unexpected argument `{form}` for `{}`",
                name(cmd)
            )))
        }
        (_, None) => {}
    }
    if c.format == Format::Dot && c.command != Command::Describe {
        return Err(Usage("`--format dot` applies only to `describe`".into()));
    }
    let max_rank = c.max_rank as usize;
    let text = match c.command {
        Command::List => list(max_rank, c.format),
        Command::Describe => describe(c.form_name.as_deref().unwrap_or_default(), c.format)?,
        Command::ReferenceRows => return Ok(emit(out, reference_rows(c.format))),
        Command::Verify => return Ok(emit(out, verify(max_rank, c.format))),
    };
    let _ = out.write_all(text.as_bytes());
    Ok(0)
}

fn name(cmd: Command) -> String {
    cmd.to_possible_value()
        .map(|v| v.get_name().to_string())
        .unwrap_or_default()
}

fn emit(out: &mut dyn Write, (text, ok): (String, bool)) -> i32 {
    let _ = out.write_all(text.as_bytes());
    if ok {
        0
    } else {
        1
    }
}

fn to_json<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("plain data serializes") + "\n"
}

fn list(max_rank: usize, format: Format) -> String {
    let names: Vec<String> = catalog(max_rank).iter().map(SatakeDiagram::name).collect();
    match format {
        Format::Json => to_json(&names),
        _ => names.iter().map(|n| format!("{n}\n")).collect(),
    }
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn describe(form: &str, format: Format) -> Result<String, Usage> {
    let bad = |e: crate::Error| Usage(format!("invalid real form `{form}`: {e}"));
    let d: RealFormDescriptor = form.parse().map_err(bad)?;
    let sd = build_satake(d).map_err(bad)?;
    let report = orbit_report(&sd).map_err(bad)?;
    Ok(match format {
        Format::Json => to_json(&report),
        Format::Dot => emit_dot(&report),
        Format::Text => describe_text(&sd, &report),
    })
}

fn describe_text(sd: &SatakeDiagram, r: &OrbitReport) -> String {
    let ints =
        |w: &crate::rootsys::WeightedDynkinDiagram| join(&w.integer_weights().unwrap_or_default());
    let black: Vec<usize> = sd.black().iter().map(|b| b + 1).collect();
    let arrows: Vec<String> = sd
        .arrows()
        .iter()
        .map(|(a, b)| format!("{}<->{}", a + 1, b + 1))
        .collect();
    let restricted = restricted_root_system(sd)
        .map(|rrs| rrs.type_label().to_string())
        .unwrap_or_else(|e| e.to_string());
    let c = r.conditions;
    let mut lines = vec![
        ("real form", r.descriptor.to_string()),
        ("complex type", sd.root_system().simple_type().to_string()),
        (
            "black nodes",
            if black.is_empty() {
                "none".into()
            } else {
                join(&black)
            },
        ),
        (
            "arrows",
            if arrows.is_empty() {
                "none".into()
            } else {
                arrows.join(" ")
            },
        ),
        ("restricted roots", restricted),
        ("O_min weights", ints(&r.min_wdd)),
        ("O_min meets g", yes_no(r.min_meets).into()),
        ("O_min,g weights", ints(&r.min_g_wdd)),
        ("dim O_min,g", r.min_g_dim.to_string()),
        ("dim g_lambda", r.g_lambda_dim.to_string()),
        ("hermitian", yes_no(r.hermitian).into()),
        (
            "minimal real orbits",
            r.minimal_real_orbit_count.to_string(),
        ),
        (
            "conditions",
            c.as_array()
                .iter()
                .map(|(k, v)| format!("{k}={}", if *v { 'T' } else { 'F' }))
                .collect::<Vec<_>>()
                .join(" "),
        ),
    ];
    if let Some(labels) = &r.paper_labels {
        lines.push(("drawing labels", join(labels)));
    }
    lines
        .iter()
        .map(|(k, v)| format!("{k:<20} {v}\n"))
        .collect()
}

#[derive(Serialize)]
struct RowCheck {
    form: String,
    expected_weights: Vec<i64>,
    expected_dim: usize,
    weights: Vec<i64>,
    dim: usize,
    ok: bool,
}

fn reference_rows(format: Format) -> (String, bool) {
    let rows: Vec<RowCheck> = representatives()
        .into_iter()
        .map(|d| {
            let row = reference_row(d).expect("representatives have reference rows");
            let report = build_satake(d).and_then(|sd| orbit_report(&sd));
            let (weights, dim) = match &report {
                Ok(r) => (
                    r.min_g_wdd.integer_weights().unwrap_or_default(),
                    r.min_g_dim,
                ),
                Err(_) => (vec![], 0),
            };
            RowCheck {
                form: d.to_string(),
                ok: weights == row.weights && dim == row.dim,
                expected_weights: row.weights,
                expected_dim: row.dim,
                weights,
                dim,
            }
        })
        .collect();
    let ok = rows.iter().all(|r| r.ok);
    let text = match format {
        Format::Json => to_json(&rows),
        _ => rows
            .iter()
            .map(|r| {
                format!(
                    "{:<4} {:<10} dim {:>3}  {}\n",
                    if r.ok { "OK" } else { "FAIL" },
                    r.form,
                    r.dim,
                    if r.ok {
                        join(&r.weights)
                    } else {
                        format!(
                            "{} (expected {}, dim {})",
                            join(&r.weights),
                            join(&r.expected_weights),
                            r.expected_dim
                        )
                    }
                )
            })
            .collect(),
    };
    (text, ok)
}

fn verify(max_rank: usize, format: Format) -> (String, bool) {
    let summary = verify_catalog(max_rank);
    let text = render_verification(&summary, format, &format!("up to rank {max_rank}"));
    (text, summary.passed())
}

/// Output of the `verify` command for `summary`; the command exits 1 unless
/// `summary.passed()`.
pub fn render_verification(summary: &VerifySummary, format: Format, scope: &str) -> String {
    match format {
        Format::Json => to_json(summary),
        _ => {
            let mut s: String = summary
                .failures
                .iter()
                .map(|f| format!("FAIL {f}\n"))
                .collect();
            s += &format!(
                "checked {} real forms and {} root systems {scope}: {}\n",
                summary.entries,
                summary.types,
                if summary.passed() {
                    "all invariants hold".to_string()
                } else {
                    format!("{} failures", summary.failures.len())
                }
            );
            s
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn call(args: &[&str]) -> (i32, String, String) {
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let argv = std::iter::once("lieorbits").chain(args.iter().copied());
        let code = run(argv, &mut out, &mut err);
        (
            code,
            String::from_utf8(out).unwrap(),
            String::from_utf8(err).unwrap(),
        )
    }

    #[test]
    fn describe_f4() {
        let (code, out, _) = call(&["describe", "f4(-20)", "--format", "text"]);
        assert_eq!(code, 0);
        assert!(out.contains("O_min,g weights      0 0 0 1"), "{out}");
        assert!(out.contains("dim O_min,g          22"), "{out}");
    }

    #[test]
    fn describe_beyond_rank_bound() {
        let (code, out, _) = call(&["describe", "su(9,9)"]);
        assert_eq!(code, 0);
        assert!(out.contains("minimal real orbits  2"), "{out}");
    }

    #[test]
    fn bad_input_exits_2() {
        let (code, _, err) = call(&["describe", "sl(1,R)"]);
        assert_eq!(code, 2);
        assert!(err.contains("sl(1,R)"), "{err}");
        let (code, _, err) = call(&["describe", "xx(3)"]);
        assert_eq!(code, 2);
        assert!(err.contains("xx(3)"), "{err}");
        let (code, _, err) = call(&["frobnicate"]);
        assert_eq!(code, 2);
        assert!(err.contains("frobnicate"), "{err}");
        let (code, _, err) = call(&["list", "--max-rank", "1"]);
        assert_eq!(code, 2);
        assert!(err.contains('1'), "{err}");
        assert_eq!(call(&["describe"]).0, 2);
        assert_eq!(call(&["list", "su(1,2)"]).0, 2);
        assert_eq!(call(&["list", "--format", "dot"]).0, 2);
    }

    #[test]
    fn list_respects_rank() {
        let (code, out, _) = call(&["list", "--max-rank", "2"]);
        assert_eq!(code, 0);
        assert_eq!(out.lines().count(), 10);
        let (_, json, _) = call(&["list", "--max-rank", "2", "--format", "json"]);
        let names: Vec<String> = serde_json::from_str(&json).unwrap();
        assert!(names.contains(&"g2(2)".to_string()));
    }

    #[test]
    fn reference_rows_all_ok() {
        let (code, out, _) = call(&["table1"]);
        assert_eq!(code, 0, "{out}");
        assert_eq!(out.lines().filter(|l| l.starts_with("OK")).count(), 30);
    }

    #[test]
    fn verify_small() {
        let (code, out, _) = call(&["verify", "--max-rank", "3"]);
        assert_eq!(code, 0, "{out}");
        assert!(out.contains("all invariants hold"));
    }

    #[test]
    fn json_round_trip() {
        let (code, json, _) = call(&["describe", "e6(-26)", "--format", "json"]);
        assert_eq!(code, 0);
        let back: OrbitReport = serde_json::from_str(&json).unwrap();
        let sd = build_satake("e6(-26)".parse().unwrap()).unwrap();
        assert_eq!(back, orbit_report(&sd).unwrap());
    }
}
