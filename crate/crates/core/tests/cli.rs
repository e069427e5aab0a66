use lj_galois::cli::{parse_expression, run_with};
use lj_galois::exactalg::{rat, FieldElem, Poly, RatFunc};
use proptest::prelude::*;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut o = Vec::new();
    let mut e = Vec::new();
    let argv = std::iter::once("ljgalois").chain(args.iter().copied());
    let code = run_with(argv, &mut o, &mut e);
    (code, String::from_utf8(o).unwrap(), String::from_utf8(e).unwrap())
}

fn golden(name: &str, args: &[&str]) {
    let path = format!("{}/tests/golden/{name}", env!("CARGO_MANIFEST_DIR"));
    let want = std::fs::read_to_string(&path).unwrap();
    let (code, got, err) = run(args);
    assert_eq!(code, 0, "{err}");
    assert_eq!(got, want, "{name}");
}

#[test]
fn golden_outputs() {
    golden("kovacic_twelve_six.json", &["kovacic", "--r", "(-3*x^5-4*x^3+4)/(16*x^7)"]);
    golden(
        "lj_analyze_ten_six.json",
        &["lj", "analyze", "--nu", "6", "--delta", "10", "--A", "5", "--B", "1", "--C", "0", "--energy", "0"],
    );
    golden(
        "lj_parametric.json",
        &["lj", "parametric", "--nu", "6", "--B", "1", "--C", "0", "--m-min", "-1", "--m-max", "1"],
    );
    golden("kovacic_tetrahedral.json", &["kovacic", "--r", "-3/(16*x^2) - 2/(9*(x-1)^2) + 3/(16*x*(x-1))"]);
    golden("kovacic_case2.json", &["kovacic", "--r", "1/x - 3/(16*x^2)"]);
}

#[test]
fn verdict_schema() {
    let allowed = [
        "case", "n", "omega", "P", "solution", "second_solution", "witness", "theta", "m", "origin",
        "verified", "integrable", "r", "variable",
    ];
    for r in ["1", "0", "x", "1/x", "(-3*x^5-4*x^3+4)/(16*x^7)", "1/x - 3/(16*x^2)", "x^2+1"] {
        let (code, out, _) = run(&["kovacic", "--r", r]);
        assert_eq!(code, 0);
        let v: serde_json::Value = serde_json::from_str(&out).unwrap();
        let obj = v.as_object().unwrap();
        let case = obj["case"].as_u64().unwrap();
        assert!((1..=4).contains(&case));
        assert!(obj.keys().all(|k| allowed.contains(&k.as_str())), "{r}: {obj:?}");
        assert_eq!(obj.contains_key("witness"), case == 4);
        assert_eq!(obj.contains_key("n"), case != 4);
    }
}

#[test]
fn every_subcommand_is_deterministic() {
    let dir = std::env::temp_dir().join(format!("ljgalois-det-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let csv = dir.join("v.csv");
    let csv = csv.to_str().unwrap();
    let cmds: Vec<Vec<&str>> = vec![
        vec!["kovacic", "--r", "(-3*x^4-20*x^2+4)/(16*x^6)"],
        vec!["kovacic", "--r", "x", "--text"],
        vec!["lj", "analyze", "--nu", "6", "--delta", "12", "--A", "1", "--B", "1", "--C", "2", "--energy", "-1"],
        vec!["lj", "analyze", "--nu", "6", "--delta", "10", "--A", "-3", "--B", "1", "--formal"],
        vec!["lj", "parametric", "--nu", "6", "--B", "2", "--C", "0", "--m-min", "0", "--m-max", "2"],
        vec!["susy", "--nu", "6", "--A", "5", "--B", "1", "--grid", "0.5:3:5"],
        vec!["virial", "--tmin", "0.5", "--tmax", "5", "--steps", "4", "--log", "--jobs", "3"],
        vec!["virial", "--tmin", "0.5", "--tmax", "5", "--steps", "4", "--out", csv],
        vec!["curves", "potential", "--family", "10-6", "--grid", "0.9:3:7"],
        vec!["curves", "wavefunction", "--nu", "6", "--A", "5", "--B", "1", "--grid", "0.5:3:7"],
        vec!["whittaker", "--kappa", "5/8", "--mu", "1/8"],
        vec!["bessel", "--n", "1/2"],
    ];
    for c in cmds {
        let a = run(&c);
        let b = run(&c);
        assert_eq!(a.0, 0, "{c:?}: {}", a.2);
        assert_eq!(a, b, "{c:?}");
    }
    let text = std::fs::read_to_string(csv).unwrap();
    assert!(text.starts_with("T_reduced,B2_12_6,err_12_6,B2_10_6,err_10_6\n"));
    assert_eq!(text.lines().count(), 5);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn virial_jobs_do_not_change_output() {
    let base = ["virial", "--tmin", "0.3", "--tmax", "10", "--steps", "12", "--log"];
    let one = run(&[&base[..], &["--jobs", "1"]].concat());
    let many = run(&[&base[..], &["--jobs", "6"]].concat());
    assert_eq!(one, many);
}

#[test]
fn analyze_reports_verdicts() {
    let (_, out, _) = run(&["lj", "analyze", "--nu", "6", "--delta", "12", "--A", "1", "--B", "1"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["integrable"], false);
    assert_eq!(v["kovacic"]["case"], 4);
    let (_, out, _) = run(&["lj", "analyze", "--nu", "6", "--delta", "10", "--A", "3", "--B", "1"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["radial_solution"], "r*exp(-1/(4*r^4))");
    assert_eq!(v["ground_state"], serde_json::Value::Null);
    let (code, _, err) = run(&["lj", "analyze", "--nu", "5", "--delta", "9", "--A", "1", "--B", "1", "--energy", "1"]);
    assert_eq!(code, 1, "{err}");
    let (code, _, _) = run(&["lj", "analyze", "--nu", "6", "--delta", "10", "--A", "-3", "--B", "1"]);
    assert_eq!(code, 1);
}

#[test]
fn binary_runs() {
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_ljgalois"))
        .args(["bessel", "--n", "1"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).contains("\"integrable\": false"));
    let out = std::process::Command::new(env!("CARGO_BIN_EXE_ljgalois"))
        .args(["kovacic", "--r", "1/(x^2+1)"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}

const CORPUS: &[&str] = &[
    "0", "1", "-1", "x", "-x", "x^2", "-x^2", "x^-3", "2/3", "x/2",
    "x^2+1", "x^2-1", "1/x", "1/x^2", "3/(4*x)", "(x+1)/(x-1)", "(x-1)^3", "(2*x+3)^2/(x^4)",
    "1/(x*(x-1))", "x^7-3*x^2+5", "(4 - 20*x^2 - 3*x^4)/(16*x^6)", "(-3*x^5-4*x^3+4)/(16*x^7)",
    "1/4 - 5/(8*x) - 15/(256*x^2)", "-3/(16*x^2) - 2/(9*(x-1)^2) + 3/(16*x*(x-1))",
    "sqrt(2)", "sqrt(2)*x", "x/sqrt(3)", "1/(x - sqrt(5))", "(1+sqrt(2))*x^2 - sqrt(2)",
    "sqrt(8)/(x^2+sqrt(2)*x)", "x^2/(x^2+x+1)", "(x^3-x)/(x^2-1)", "6*x/(3*x)", "2^10",
    "(x+1)^-2", "x*x*x - x^3 + 1", "((x))", "-(x-1)", "- - x", "1/(1/x)",
    "(x^2+2)/(4*x^3)", "x^4/16 - 1/(x^2)", "(5*x-7)/(11*x^2+13)", "1000000007*x", "x^12 - x^6",
    "(x-2)*(x+2)/(x-2)", "3*sqrt(7)/7", "-sqrt(3)*x^3/(2*x+1)", "1/2/x", "x^0",
];

#[test]
fn parser_round_trip_corpus() {
    assert_eq!(CORPUS.len(), 50);
    for t in CORPUS {
        let r = parse_expression(t).unwrap_or_else(|e| panic!("{t}: {e}"));
        let again = parse_expression(&r.render("x")).unwrap_or_else(|e| panic!("{t} → {}: {e}", r.render("x")));
        assert_eq!(again, r, "{t}");
    }
}

fn arb_poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec((-9i64..10, 1i64..5), 1..5)
        .prop_map(|cs| Poly::new(cs.into_iter().map(|(p, q)| FieldElem::from_rat(rat(p, q))).collect()))
}

proptest! {
    #[test]
    fn render_parse_round_trip(n in arb_poly(), d in arb_poly(), k in 0u32..3) {
        prop_assume!(!d.is_zero());
        let r = RatFunc::new(n, d).unwrap();
        let r = &r * &RatFunc::power(FieldElem::one(), -(k as i64));
        prop_assert_eq!(parse_expression(&r.render("x")).unwrap(), r);
    }
}
