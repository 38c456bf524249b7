use std::io::Write;
use std::process::{Command, Output, Stdio};

use approxroot::expr::parse_curve;
use serde_json::Value;

const F_EX: &str = "Y^4-2X^3Y^2-4X^5Y+X^6-X^7";

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_approxroot")).args(args).output().unwrap()
}

fn ok_json(args: &[&str]) -> Value {
    let out = run(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).unwrap()
}

fn stdout(args: &[&str]) -> String {
    String::from_utf8(run(args).stdout).unwrap()
}

#[test]
fn char_data_of_the_quartic() {
    let v = ok_json(&["char-data", F_EX]);
    assert_eq!(v["B"], serde_json::json!([4, 6, 7]));
    assert_eq!(v["Bbar"], serde_json::json!([4, 6, 13]));
    assert_eq!(v["E"], serde_json::json!([4, 2, 1]));
    assert_eq!(v["Nseq"], serde_json::json!([2, 2]));
    assert_eq!(v["intersections"], serde_json::json!([6, 13, null]));
    assert_eq!(v["roots"][1], "Y^2 - X^3");
}

#[test]
fn key_order_is_fixed() {
    assert_eq!(
        stdout(&["char-data", "--param", "2; T^3"]),
        "{\"B\":[2,3],\"E\":[2,1],\"Nseq\":[2],\"Bbar\":[2,3],\"genus\":1}\n"
    );
    assert_eq!(stdout(&["epi-check", "--P", "T^2", "--Q", "T^3"]), "{\"epimorphism\":false}\n");
}

#[test]
fn approximate_roots() {
    assert_eq!(ok_json(&["approx-root", "--p", "4", F_EX])["root"], "Y");
    for method in ["direct", "iterated", "meromorphic"] {
        assert_eq!(ok_json(&["approx-root", "--p", "2", "--method", method, F_EX])["root"], "Y^2 - X^3");
    }
    let v = ok_json(&["approx-root", "--p", "2", "--method", "iterated", "--seed", "Y^2 + X*Y + X", F_EX]);
    assert_eq!(v["root"], "Y^2 - X^3");
}

#[test]
fn printed_polynomials_parse_back() {
    let v = ok_json(&["char-data", F_EX]);
    for root in v["roots"].as_array().unwrap() {
        let text = root.as_str().unwrap();
        assert_eq!(parse_curve(text).unwrap().to_string(), text);
    }
    assert_eq!(v["roots"][2].as_str().map(|s| parse_curve(s).unwrap()), Some(parse_curve(F_EX).unwrap()));
}

#[test]
fn implicitize_and_semiroots() {
    assert_eq!(ok_json(&["implicitize", "--param", "4; T^6 + T^7"])["curve"], "Y^4 - 2*X^3*Y^2 - 4*X^5*Y + X^6 - X^7");
    assert_eq!(ok_json(&["implicitize", "--P", "T", "--Q", "T^2"])["curve"], "Y - X^2");
    let v = ok_json(&["semiroot", "--k", "1", F_EX]);
    assert_eq!((v["semiroot"].as_str(), v["intersection"].as_u64()), (Some("Y^2 - X^3"), Some(13)));
    let v = ok_json(&["semiroot", "--k", "1", "--test", "Y^2 - X^3 - 2*X^4 - X^5", F_EX]);
    assert_eq!(v["semiroot"], true);
    let v = ok_json(&["semiroot", "--k", "1", "--test", "Y^2", F_EX]);
    assert_eq!((v["semiroot"].as_bool(), v["intersection"].as_u64()), (Some(false), Some(12)));
}

#[test]
fn expansions() {
    let v = ok_json(&["expand", "Y^3", "--curve", F_EX]);
    assert_eq!(v["intersection"], 18);
    assert_eq!(v["terms"], serde_json::json!([{"digits": [1, 0, 0], "coeff": "X^3"}, {"digits": [1, 1, 0], "coeff": "1"}]));
    let v = ok_json(&["expand", "X*Y", "--roots", "Y,Y^2-X^3"]);
    assert_eq!(v["terms"], serde_json::json!([{"digits": [1, 0], "coeff": "X"}]));
}

#[test]
fn resolution_output() {
    let v = ok_json(&["resolve", "--param", "4; T^6 + T^7", "--semiroots"]);
    let phis: Vec<u64> = v["vertices"].as_array().unwrap().iter().map(|x| x["phi"].as_u64().unwrap()).collect();
    assert_eq!(phis, vec![4, 6, 12, 13, 26]);
    assert_eq!(v["arrowheads"], serde_json::json!({"f": 5, "f_0": 2, "f_1": 4}));
    assert_eq!(v["vertical"], serde_json::json!([[2], [4]]));
    let dot = stdout(&["resolve", "--param", "2; T^3", "--dot"]);
    assert!(dot.starts_with("graph {") && dot.trim_end().ends_with('}'));
    assert_eq!(dot.matches(" -- E").count(), 2);
    assert_eq!(dot.matches("shape=rarrow").count(), 1);
}

#[test]
fn inversion() {
    for (b0, expected) in [("2", serde_json::json!([2, 7])), ("4", serde_json::json!([4, 2, 5])), ("7", serde_json::json!([7, 2]))] {
        assert_eq!(ok_json(&["invert", "--b0", b0, "--b", "2,7"])["B"], expected);
    }
    assert_eq!(ok_json(&["invert", "--b0", "7", "--param", "2; T^7"])["B"], serde_json::json!([7, 2]));
    assert_eq!(run(&["invert", "--b0", "5", "--b", "2,7"]).status.code(), Some(2));
}

#[test]
fn embedding_commands() {
    let v = ok_json(&["epi-check", "--P", "T", "--Q", "T^5 + 2*T"]);
    assert_eq!(v["epimorphism"], true);
    assert!(!v["chain"].as_array().unwrap().is_empty());
    let v = ok_json(&["merom-char", "--P", "T^2", "--Q", "T^3", "--prec", "4", "--expand", "-5,-4,-1"]);
    assert_eq!(v["N"], 2);
    assert_eq!(v["y"], "t^-3");
    assert_eq!(v["Bbar"], serde_json::json!([-2, -3]));
    assert_eq!(
        v["expansions"],
        serde_json::json!([{"gamma": -5, "digits": [1, 1]}, {"gamma": -4, "digits": [2, 0]}, {"gamma": -1, "digits": null}])
    );
    assert_eq!(run(&["merom-char", "--P", "2*T^2", "--Q", "T^3"]).status.code(), Some(2));
}

#[test]
fn curve_from_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_approxroot"))
        .arg("char-data")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"Y^2 - X^3\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["B"], serde_json::json!([2, 3]));
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["char-data", "Y^2 - X^2"]).status.code(), Some(2));
    assert_eq!(run(&["resolve", "--param", "1; T^2"]).status.code(), Some(2));
    assert_eq!(run(&["char-data", "--param", "4; T^6"]).status.code(), Some(2));
    assert_eq!(run(&["char-data", "Y^2 +* X"]).status.code(), Some(1));
    assert_eq!(run(&["char-data", "Y^2 - sqrt(2)*X"]).status.code(), Some(1));
    assert_eq!(run(&["approx-root", F_EX]).status.code(), Some(1));
    assert_eq!(run(&["no-such-command"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    assert_eq!(run(&["--version"]).status.code(), Some(0));
    let err = String::from_utf8(run(&["char-data", "Y^2 +* X"]).stderr).unwrap();
    assert!(err.contains("byte 5"), "{err}");
}
