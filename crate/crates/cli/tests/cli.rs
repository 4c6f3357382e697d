use std::process::Command;

use serde_json::Value;

fn qsix(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_qsix")).args(args).output().expect("run qsix");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn ok(args: &[&str]) -> String {
    let (code, out, err) = qsix(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    out
}

#[test]
fn expand_goldens() {
    assert_eq!(ok(&["expand", "--series", "pentagonal", "--order", "15"]).trim(), "1 - q - q^2 + q^5 + q^7 - q^12 - q^15");
    assert_eq!(ok(&["expand", "--series", "T", "--n", "5"]).trim(), "16x^5 - 20x^3 + 5x");
    assert_eq!(ok(&["expand", "--series", "U", "--n", "3"]).trim(), "8x^3 - 4x");
    let s = ok(&["expand", "--series", "S", "--order", "8"]);
    let lines: Vec<_> = s.lines().collect();
    assert_eq!(lines[3], "[x^3] -q");
    assert_eq!(lines[7], "[x^7] q^7");
    assert_eq!(lines.last().unwrap(), &"O(x^9)");
}

#[test]
fn expand_needs_index() {
    for series in ["T", "U", "f", "P_ell"] {
        let (code, _, err) = qsix(&["expand", "--series", series]);
        assert_eq!(code, 2, "{series}");
        assert!(err.contains("--n"), "{err}");
    }
    assert_eq!(qsix(&["expand", "--series", "nonsense"]).0, 2);
}

#[test]
fn expected_fail_keeps_exit_zero() {
    let out = ok(&["verify", "--id", "misprint-6.44", "--format", "json"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["suite"][0]["status"], "fail");
    assert_eq!(v["suite"][0]["expected"], "fail");
    assert_eq!(v["summary"]["pass"], 1);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(qsix(&["verify", "--id", "bogus"]).0, 2);
    assert_eq!(qsix(&["verify"]).0, 2);
    assert_eq!(qsix(&["verify", "--all", "--id", "classic-1.6"]).0, 2);
    assert_eq!(qsix(&["verify", "--all", "--jobs", "0"]).0, 2);
    assert_eq!(qsix(&["frobnicate"]).0, 2);
}

#[test]
fn list_text_and_json_agree() {
    let json: Value = serde_json::from_str(&ok(&["list", "--format", "json"])).unwrap();
    let rows = json.as_array().unwrap();
    let text = ok(&["list"]);
    assert_eq!(text.lines().count(), rows.len() + 1);
    for id in ["group-6.39a", "misprint-6.44", "errata-2.15-x5"] {
        assert!(rows.iter().any(|r| r["id"] == id), "{id}");
    }
    for id in ["misprint-6.44", "errata-2.15-x5"] {
        let row = rows.iter().find(|r| r["id"] == id).unwrap();
        assert_eq!(row["expected"], "fail");
    }
}

#[test]
fn json_round_trip_is_stable() {
    let out = ok(&["verify", "--id", "errata-2.15-x5", "--id", "cong-6.5", "--format", "json"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    let again: Value = serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
    assert_eq!(v, again);
    let d = &v["suite"][1]["first_discrepancy"];
    assert_eq!(d["degree"], 5);
    for key in ["id", "paper_ref", "order", "status", "expected", "first_discrepancy", "elapsed_ms", "notes"] {
        assert!(v["suite"][0].get(key).is_some(), "{key}");
    }
}

#[test]
fn text_and_json_make_same_decisions() {
    let ids = ["--id", "classic-1.6", "--id", "misprint-6.44", "--id", "gamma-6.9", "--id", "errata-2.23-q"];
    let mut json_args = vec!["verify", "--format", "json"];
    json_args.extend(ids);
    let mut text_args = vec!["verify"];
    text_args.extend(ids);
    let v: Value = serde_json::from_str(&ok(&json_args)).unwrap();
    let text = ok(&text_args);
    for e in v["suite"].as_array().unwrap() {
        let id = e["id"].as_str().unwrap();
        let line = text.lines().find(|l| l.split_whitespace().nth(1) == Some(id)).unwrap();
        assert!(line.contains(&format!("status={}", e["status"].as_str().unwrap())), "{line}");
        assert!(line.contains(&format!("expected={}", e["expected"].as_str().unwrap())), "{line}");
    }
    assert!(text.lines().last().unwrap().starts_with(&format!(
        "summary: pass {}, fail {}, error {}",
        v["summary"]["pass"], v["summary"]["fail"], v["summary"]["error"]
    )));
}

#[test]
fn order_override_is_reported() {
    let v: Value = serde_json::from_str(&ok(&["verify", "--id", "classic-1.6", "--order", "30", "--format", "json"])).unwrap();
    assert_eq!(v["suite"][0]["order"], 30);
}
