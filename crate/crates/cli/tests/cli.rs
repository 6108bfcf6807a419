use std::process::{Command, Output};

fn asp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_asp")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> serde_json::Value {
    let o = asp(args);
    assert!(o.status.success(), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    serde_json::from_str(&stdout(&o)).unwrap()
}

#[test]
fn count_asp_by_rho() {
    let v = json(&["count", "asp", "--n", "3", "--l", "0", "--r", "2", "--by-rho"]);
    assert_eq!(v["genpoly"], serde_json::json!(["1", "2", "2"]));
    assert_eq!(v["count"], "5");
    assert_eq!(v["object"], "asp");
    for method in ["detsum", "pfaffian", "ct"] {
        let w = json(&["count", "asp", "--n", "3", "--l", "0", "--r", "2", "--by-rho", "--method", method]);
        assert_eq!(w["genpoly"], v["genpoly"], "{method}");
    }
}

#[test]
fn count_plain_and_other_objects() {
    let o = asp(&["count", "gog", "--n", "3", "--k", "2", "--l", "3", "--plain"]);
    assert_eq!(stdout(&o).trim(), "1");
    let v = json(&["count", "magog", "--n", "4", "--k", "2", "--lambda", "3"]);
    assert_eq!(v["count"], "28");
    assert_eq!(v["factorization"], "2^2*7");
    let v = json(&["count", "magog", "--n", "4", "--k", "2", "--lambda", "3", "--by-tau", "--method", "pfaffian"]);
    assert_eq!(v["count"], "28");
    let v = json(&["count", "ast", "--n", "3", "--by-rho"]);
    assert_eq!(v["genpoly"], serde_json::json!(["2", "3", "2"]));
    assert_eq!(stdout(&asp(&["count", "asm", "--n", "4", "--plain"])).trim(), "42");
    let o = asp(&["count", "tuples", "--n", "3", "--l", "1", "--r", "2", "--csv"]);
    assert_eq!(stdout(&o), "object,n,l,r,count,factorization\ntuples,3,1,2,3,3\n");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(asp(&["count", "asp", "--n", "1", "--l", "0", "--r", "0"]).status.code(), Some(2));
    let o = asp(&["count", "asp", "--n", "5", "--l", "1", "--r", "5", "--method", "ct"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("n <= 4"));
    assert_eq!(asp(&["count", "gog", "--n", "3", "--by-rho", "--k", "1", "--l", "0"]).status.code(), Some(2));
    assert_eq!(asp(&["verify", "everything"]).status.code(), Some(2));
    assert_eq!(asp(&["conjecture", "other"]).status.code(), Some(2));
    assert_eq!(asp(&["table", "--n", "3"]).status.code(), Some(2));
    assert_eq!(asp(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn tables_flag_errata() {
    let o = asp(&["table", "--n", "4", "--cross-check"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("ERRATUM n=4 r=5 l=1: computed 35 = 5·7, printed 5·73"), "{text}");
    let o = asp(&["table", "--n", "6", "--csv"]);
    let text = stdout(&o);
    assert!(text.contains("6,8,3,1375,5^3*11,5^6*11,true,"), "{text}");
    let v = json(&["table", "--n", "7", "--json"]);
    assert_eq!(v["summary"]["errata"], 0);
    assert_eq!(v["cells"][0]["count"], "429");
    assert_eq!(v["cells"][0]["factorization"], "3*11*13");
}

#[test]
fn verify_targets_pass() {
    for target in ["main-theorem", "pfaffian", "lgv", "bijection", "reflection", "asm-corollary"] {
        let o = asp(&["verify", target, "--max-n", "4", "--plain"]);
        assert!(o.status.success(), "{target}: {}", stdout(&o));
    }
    let v = json(&["verify", "catalan", "--max-n", "7"]);
    let counts: Vec<_> = v["cells"].as_array().unwrap().iter().map(|c| c["values"]["catalan"].clone()).collect();
    assert_eq!(counts, ["5", "14", "42", "132", "429"].map(serde_json::Value::from));
    assert_eq!(v["summary"]["failed"], 0);
}

#[test]
fn conjecture_reports_and_exits_zero() {
    let o = asp(&["conjecture", "behrend", "--max-n", "4", "--plain"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.contains("PASS n=4 l=2 r=4 gog=9 magog=9"), "{text}");
    assert!(text.contains("DIFFER"), "{text}");
}

#[test]
fn bijection_trace_of_the_order_ten_example() {
    let v = json(&["bijection-trace"]);
    assert_eq!(v["magog"]["shape"], serde_json::json!([0, 10, 4, 11]));
    assert_eq!(v["magog"]["tau"], 5);
    assert_eq!(v["tuple"]["weight"], 4);
    assert_eq!(v["gt"][9], serde_json::json!([1, 1, 1, 1, 1, 1, 3, 5, 7, 9]));
    let v = json(&["bijection-trace", "--n", "3", "--l", "0", "--r", "2", "--index", "0"]);
    assert_eq!(v["kissing"][1]["start"], serde_json::json!([0, -2]));
    assert_eq!(asp(&["bijection-trace", "--n", "3", "--l", "0", "--r", "2", "--index", "9"]).status.code(), Some(2));
}

#[test]
fn output_does_not_depend_on_jobs() {
    let a = asp(&["--jobs", "1", "verify", "main-theorem", "--max-n", "4"]);
    let b = asp(&["--jobs", "4", "verify", "main-theorem", "--max-n", "4"]);
    assert_eq!(a.stdout, b.stdout);
    let a = asp(&["--jobs", "1", "table", "--n", "6", "--json", "--cross-check"]);
    let b = asp(&["--jobs", "3", "table", "--n", "6", "--json", "--cross-check"]);
    assert_eq!(a.stdout, b.stdout);
}
