use std::process::{Command, Output};

use pbern_core::Rational;
use serde_json::Value;

fn pbern(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pbern"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

#[test]
fn value_examples() {
    for (args, want) in [
        (&["value", "--n", "1", "--p", "1", "--method", "explicit"][..], "-1/3\n"),
        (&["value", "--n", "0", "--p", "5", "--method", "recurrence"][..], "1\n"),
        (&["value", "--n", "2", "--p", "0", "--method", "stirling1"][..], "1/6\n"),
        (&["value", "--n", "2", "--p", "2", "--method", "egf"][..], "-1/20\n"),
        (&["value", "--n", "3", "--p", "-1"][..], "-1\n"),
    ] {
        let o = pbern(args);
        assert_eq!(code(&o), 0, "{args:?}");
        assert_eq!(stdout(&o), want, "{args:?}");
    }
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["value", "--n", "1", "--p", "-2"][..],
        &["value", "--n", "1", "--p", "-1", "--method", "recurrence"][..],
        &["value", "--n", "1", "--p", "1", "--method", "bogus"][..],
        &["series", "--p", "3", "--order", "4"][..],
        &["verify", "lemma7"][..],
        &["verify", "theorem1", "--pmax", "6", "--order", "8"][..],
        &["verify", "--corrupt-cell", "99,0"][..],
        &["verify", "--corrupt-cell", "nonsense"][..],
    ] {
        let o = pbern(args);
        assert_eq!(code(&o), 2, "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
}

#[test]
fn table_csv() {
    let o = pbern(&["table", "--nmax", "1", "--pmax", "1", "--format", "csv"]);
    assert_eq!(stdout(&o), "n,p,value\n0,0,1\n0,1,1\n1,0,-1/2\n1,1,-1/3\n");
    let o = pbern(&["table", "--nmax", "2", "--pmax", "0", "--format", "csv"]);
    assert_eq!(stdout(&o), "n,p,value\n0,0,1\n1,0,-1/2\n2,0,1/6\n");
}

#[test]
fn table_plain_first_row() {
    let o = pbern(&["table", "--nmax", "0", "--pmax", "3"]);
    let lines: Vec<_> = stdout(&o).lines().map(str::to_owned).collect();
    assert_eq!(lines.len(), 2);
    assert_eq!(lines[1], "0\t1\t1\t1\t1");
}

#[test]
fn table_routes_print_identical_values() {
    let outputs: Vec<String> = ["explicit", "recurrence", "stirling1", "egf"]
        .iter()
        .map(|m| stdout(&pbern(&["table", "--nmax", "12", "--pmax", "5", "--method", m, "--format", "csv"])))
        .collect();
    assert!(outputs.windows(2).all(|w| w[0] == w[1]));
}

#[test]
fn table_json_round_trips() {
    let o = pbern(&["table", "--nmax", "6", "--pmax", "3", "--format", "json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let cells = v.as_array().unwrap();
    assert_eq!(cells.len(), 7 * 4);
    for c in cells {
        let n = c["n"].as_u64().unwrap() as usize;
        let p = c["p"].as_i64().unwrap();
        let value: Rational = c["value"].as_str().unwrap().parse().unwrap();
        assert_eq!(value, pbern_core::pbernoulli_explicit(n, p).unwrap());
        assert_eq!(value.to_string(), c["value"].as_str().unwrap());
    }
}

#[test]
fn triangle_csv() {
    let o = pbern(&["table", "--triangle", "stirling2", "--nmax", "3", "--format", "csv"]);
    let text = stdout(&o);
    assert!(text.starts_with("n,k,value\n0,0,1\n"));
    assert!(text.contains("\n3,2,3\n"));
    let o = pbern(&["table", "--triangle", "stirling1", "--nmax", "4", "--format", "csv"]);
    assert!(stdout(&o).contains("\n4,2,11\n"));
}

#[test]
fn series_examples() {
    let o = pbern(&["series", "--p", "0", "--order", "6", "--format", "csv"]);
    assert_eq!(code(&o), 0);
    let egf: Vec<String> = stdout(&o)
        .lines()
        .skip(1)
        .map(|l| l.split(',').nth(1).unwrap().to_owned())
        .collect();
    assert_eq!(egf, ["1", "-1/2", "1/12", "0", "-1/720", "0"]);

    let o = pbern(&["series", "--p", "1", "--order", "4", "--format", "csv"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("n,egf,explicit,match\n0,1,1,true\n1,-1/3,-1/3,true\n2,0,0,true\n"));

    let o = pbern(&["series", "--p", "2", "--order", "4", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["all_match"], true);
    assert!(v["valuation"].as_i64().unwrap() >= 0);
}

#[test]
fn series_plain_rendering() {
    let o = pbern(&["series", "--p", "0", "--order", "6"]);
    let first = stdout(&o).lines().next().unwrap().to_owned();
    assert_eq!(first, "[(0,\"1\"),(1,\"-1/2\"),(2,\"1/12\"),(4,\"-1/720\")] (mod t^6)");
}

#[test]
fn verify_theorem2_small() {
    let o = pbern(&["verify", "theorem2", "--nmax", "3", "--pmax", "1", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let report = &v[0];
    assert_eq!(report["identity"], "theorem2");
    assert_eq!(report["all_pass"], true);
    let p1: Vec<(i64, &str, &str)> = report["cells"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["params"]["p"] == 1)
        .map(|c| {
            (
                c["params"]["n"].as_i64().unwrap(),
                c["lhs"].as_str().unwrap(),
                c["rhs"].as_str().unwrap(),
            )
        })
        .collect();
    assert_eq!(p1, [(2, "1", "1"), (3, "2", "2")]);
}

#[test]
fn verify_corollary2_plain() {
    let o = pbern(&["verify", "corollary2", "--pmax", "1"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("p=1: 0 = 0 ok"));
}

#[test]
fn verify_csv_has_one_row_per_cell() {
    let o = pbern(&["verify", "special-sums", "--nmax", "6", "--format", "csv"]);
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("identity,params,lhs,rhs,pass"));
    // sum 1 over 2..=6, sum 2 over 3..=6
    assert_eq!(lines.count(), 5 + 4);
}

#[test]
fn output_is_deterministic() {
    let args = ["verify", "eq12", "--pmax", "3", "--order", "10", "--format", "json"];
    assert_eq!(pbern(&args).stdout, pbern(&args).stdout);
}

#[test]
fn verify_json_values_reparse() {
    let o = pbern(&["verify", "theorem1", "--pmax", "2", "--order", "10", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    for report in v.as_array().unwrap() {
        for c in report["cells"].as_array().unwrap() {
            let lhs: Rational = c["lhs"].as_str().unwrap().parse().unwrap();
            let rhs: Rational = c["rhs"].as_str().unwrap().parse().unwrap();
            assert_eq!(lhs.to_string(), c["lhs"].as_str().unwrap());
            assert_eq!(c["pass"].as_bool().unwrap(), lhs == rhs);
        }
    }
}
