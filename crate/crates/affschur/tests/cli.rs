use std::process::{Command, Output};

use affschur::expr::{parse_expr, Context};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_affschur")).args(args).env_remove("AFFSCHUR_CAP").output().unwrap()
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{:?}: {}", args, String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap().trim().to_string()
}

#[test]
fn mult_examples() {
    assert_eq!(stdout(&["mult", "--n", "2", "--r", "2", "[diag(1,1)]", "[diag(1,1)]"]), "[diag(1,1)]");
    assert_eq!(stdout(&["mult", "E12(0,r)", "0(0,r)"]), "E12(0,r)");
}

#[test]
fn hecke_quadratic_relation() {
    let ctx = Context { n: 2, r: 2 };
    let got = parse_expr(&stdout(&["mult", "--n", "2", "--r", "2", "s1", "s1"]), &ctx).unwrap();
    let want = parse_expr("(v^2 - 1)*s1 + v^2", &ctx).unwrap();
    assert_eq!(got, want);
}

#[test]
fn hallpoly_unique_filtration() {
    assert_eq!(stdout(&["hallpoly", "--n", "2", "S1[2]", "S1", "S2"]), "1");
    // the other order has no filtration
    assert_eq!(stdout(&["hallpoly", "--n", "2", "S1[2]", "S2", "S1"]), "0");
}

#[test]
fn verify_exit_codes() {
    assert_eq!(run(&["verify", "polyidentity", "--n", "3", "--max", "2"]).status.code(), Some(0));
    assert_eq!(run(&["verify", "oracle-vs-blm", "--n", "2", "--r", "3"]).status.code(), Some(0));
    assert_eq!(run(&["verify", "no-such-suite"]).status.code(), Some(2));
    assert_eq!(run(&["mult", "[diag(1,1)", "s1"]).status.code(), Some(2));
    assert_eq!(run(&["mult", "--n", "1", "1", "1"]).status.code(), Some(2));
    assert_eq!(run(&["mult", "--cap", "7", "1", "1"]).status.code(), Some(2));
    assert_eq!(run(&["mult", "s1", "[diag(1,1)]"]).status.code(), Some(2));
}

#[test]
fn json_round_trips() {
    let ctx = Context { n: 2, r: 2 };
    for (x, y) in [("gen:E1", "gen:F1"), ("s1*rho", "s0"), ("E12[0,r]", "E21[(1,0),r]"), ("u[S1]", "u[S2]")] {
        let text = stdout(&["mult", "--format", "json", x, y]);
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        let direct = parse_expr(&format!("{}*{}", x, y), &ctx).unwrap();
        assert_eq!(parse_expr(v["expr"].as_str().unwrap(), &ctx).unwrap(), direct);
        let mut sum = String::new();
        for t in v["terms"].as_array().unwrap() {
            let (b, c) = (t["basis"].as_str().unwrap(), t["coeff"].as_str().unwrap());
            if !sum.is_empty() {
                sum.push_str(" + ");
            }
            sum.push_str(&if b.is_empty() { format!("({})", c) } else { format!("({})*{}", c, b) });
        }
        assert_eq!(parse_expr(&sum, &ctx).unwrap(), direct, "{}", sum);
    }
}

#[test]
fn verify_reports_are_machine_readable() {
    let text = stdout(&["verify", "gauss", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v["passed"], true);
    assert!(!v["items"].as_array().unwrap().is_empty());
    let csv = stdout(&["verify", "gauss", "--format", "csv"]);
    assert!(csv.starts_with("name,status\n"));
}
