use std::process::{Command, Output};

use lieorbits::orbits::{orbit_report, OrbitReport};
use lieorbits::satake::build_satake;

fn lieorbits(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lieorbits"))
        .args(args)
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn describe_text() {
    let o = lieorbits(&["describe", "f4(-20)", "--format", "text"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("0 0 0 1") && out.contains("22"), "{out}");
}

#[test]
fn describe_is_not_rank_bounded() {
    let o = lieorbits(&["describe", "su(9,9)"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("minimal real orbits  2"));
}

#[test]
fn parse_errors_exit_2_and_name_the_token() {
    for (args, token) in [
        (vec!["describe", "sl(1,R)"], "sl(1,R)"),
        (vec!["describe", "so(3,x)"], "x"),
        (vec!["explain"], "explain"),
        (vec!["verify", "--max-rank", "zero"], "zero"),
        (vec!["list", "--format", "yaml"], "yaml"),
    ] {
        let o = lieorbits(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        let err = String::from_utf8_lossy(&o.stderr);
        assert!(err.contains(token), "{args:?}: {err}");
        assert!(o.stdout.is_empty());
    }
}

#[test]
fn json_round_trip_for_every_exceptional_form() {
    for name in [
        "g2(2)", "f4(4)", "f4(-20)", "e6(6)", "e6(2)", "e6(-14)", "e6(-26)", "e7(-25)", "e8(-24)",
    ] {
        let o = lieorbits(&["describe", name, "--format", "json"]);
        assert_eq!(o.status.code(), Some(0));
        let parsed: OrbitReport = serde_json::from_slice(&o.stdout).unwrap();
        let direct = orbit_report(&build_satake(name.parse().unwrap()).unwrap()).unwrap();
        assert_eq!(parsed, direct, "{name}");
        let raw: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
        assert!(raw["min_g_wdd"]["weights"]
            .as_array()
            .unwrap()
            .iter()
            .all(|w| w.is_i64()));
    }
}

#[test]
fn dot_output() {
    let o = lieorbits(&["describe", "e6(-26)", "--format", "dot"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.starts_with("graph ") && out.matches("style=filled").count() == 4);
}

#[test]
fn reference_rows_and_list() {
    let o = lieorbits(&["table1", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let rows: Vec<serde_json::Value> = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(rows.len(), 30);
    assert!(rows.iter().all(|r| r["ok"] == true));

    let o = lieorbits(&["list", "--max-rank", "3"]);
    let names = stdout(&o);
    assert!(names.lines().any(|l| l == "su*(4)") && !names.contains("f4"));
}
