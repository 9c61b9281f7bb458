use std::path::PathBuf;

use koszul_cli::{run, Outcome, Report};
use koszul_core::binomial_edge::build_context;
use koszul_core::io::parse_graph;
use koszul_core::EdgeRing;
use serde_json::json;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../data")
        .join(name)
        .display()
        .to_string()
}

fn koszul(args: &[&str]) -> Outcome {
    let mut argv = vec!["koszul"];
    argv.extend_from_slice(args);
    run(argv)
}

fn round_trips(o: &Outcome) {
    let text = serde_json::to_string(&o.report).unwrap();
    let back: Report = serde_json::from_str(&text).unwrap();
    assert_eq!(back, o.report);
}

#[test]
fn example_graph_is_not_closed() {
    let o = koszul(&["closed", &data("example24.graph")]);
    assert_eq!(o.code, 1);
    assert_eq!(o.report.result["violation"], json!([3, 4, 6]));
    assert_eq!(o.report.result["closed_relabeling"], json!(null));
    assert_eq!(o.report.failures.len(), 1);
    round_trips(&o);
}

#[test]
fn path_filtration_certifies() {
    let path = data("path3.graph");
    let o = koszul(&["bei", &path, "--filtration", "--certify", "--json"]);
    assert_eq!(o.code, 0, "{}", o.render());
    assert!(o.report.failures.is_empty());
    assert!(o
        .report
        .certificates
        .iter()
        .all(|c| c.checked == Some(true)));

    let g = parse_graph(&std::fs::read_to_string(&path).unwrap()).unwrap();
    let e: EdgeRing = build_context(&g).unwrap();
    let f = e.build_koszul_filtration().unwrap();
    let expected: Vec<String> = f
        .members()
        .iter()
        .map(|m| {
            if m.is_zero() {
                "0".to_string()
            } else {
                let g: Vec<String> = m.generators().iter().map(|p| p.to_string()).collect();
                format!("({})", g.join(", "))
            }
        })
        .collect();
    assert_eq!(o.report.result["members"], json!(expected));
    round_trips(&o);
}

#[test]
fn empty_ideal_has_empty_basis() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("empty.ideal");
    std::fs::write(&p, "ring: x, y, z\n").unwrap();
    let o = koszul(&["gb", p.to_str().unwrap(), "--json"]);
    assert_eq!(o.code, 0);
    assert_eq!(o.report.result["basis"], json!([]));
    round_trips(&o);
}

#[test]
fn gb_and_colon_of_a_small_ideal() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("i.ideal");
    std::fs::write(&p, "ring: x1..x3\nx1*x3 - x2*x3\n").unwrap();
    let p = p.to_str().unwrap();
    let o = koszul(&["gb", p]);
    assert_eq!(o.code, 0);
    assert_eq!(o.report.result["basis"], json!(["x1*x3 - x2*x3"]));
    let o = koszul(&["colon", p, "x3", "--certify"]);
    assert_eq!(o.code, 0);
    assert_eq!(o.report.result["method"], json!("linear-form"));
    assert_eq!(o.report.result["basis"], json!(["x1 - x2"]));
    assert_eq!(o.report.certificates[0].checked, Some(true));
    let o = koszul(&["colon", p, "x3^2 + 1"]);
    assert_eq!(o.code, 0);
    assert_eq!(o.report.result["method"], json!("intersection"));
    assert_eq!(o.report.result["basis"], json!(["x1*x3 - x2*x3"]));
}

#[test]
fn mathematical_failures_never_exit_zero() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("bent.graph");
    // The path 1 - 3 - 2 is closed only after relabeling.
    std::fs::write(&p, "graph n=3\n1 3\n2 3\n").unwrap();
    let p = p.to_str().unwrap();
    for mode in ["--quadratic-gb", "--filtration", "--check-closed"] {
        let o = koszul(&["bei", p, mode]);
        assert_eq!(o.code, 1, "{mode}: {}", o.render());
        assert!(!o.report.failures.is_empty());
    }
    let o = koszul(&["closed", p]);
    assert_eq!(o.code, 1);
    assert_eq!(o.report.result["closed_relabeling"], json!([1, 3, 2]));
    let o = koszul(&["bei", &data("example24.graph"), "--c-universal"]);
    assert_eq!(o.code, 1);
    assert!(o.report.result["witness"]["binomial"].is_string());
    let o = koszul(&["bei", &data("example24.graph"), "--linear-quotients"]);
    assert_eq!(o.code, 1);
    let o = koszul(&["bei", &data("k3.graph"), "--c-universal", "--json"]);
    assert_eq!(o.code, 0);
    assert_eq!(o.report.result["full_check"], json!(true));
    round_trips(&o);
}

#[test]
fn colon_of_the_variable_sequence() {
    let o = koszul(&["bei", &data("path3.graph"), "--colon", "1", "--json"]);
    assert_eq!(o.code, 0);
    assert_eq!(o.report.result["certified"], json!(true));
    let o = koszul(&["bei", &data("path3.graph"), "--colon", "4"]);
    assert_eq!(o.code, 2);
}

#[test]
fn parse_errors_carry_positions() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("bad.graph");
    std::fs::write(&p, "graph n=3\n1 x\n").unwrap();
    let o = koszul(&["closed", p.to_str().unwrap()]);
    assert_eq!(o.code, 2);
    assert!(
        o.report.failures[0].reason.contains("line 2"),
        "{:?}",
        o.report.failures
    );
    let o = koszul(&["closed", "/nonexistent/graph"]);
    assert_eq!(o.code, 2);
    let o = koszul(&["bei", &data("path3.graph")]);
    assert_eq!(o.code, 2);
    assert!(o.usage.is_some());
}

#[test]
fn emitted_filtration_reloads() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("p3.filtration");
    let o = koszul(&[
        "bei",
        &data("path3.graph"),
        "--filtration",
        "--emit",
        out.to_str().unwrap(),
    ]);
    assert_eq!(o.code, 0);
    assert!(dir.path().join("p3.ideal").exists());
    let back = koszul(&["koszul-verify", out.to_str().unwrap(), "--certify"]);
    assert_eq!(back.code, 0, "{}", back.render());
    assert_eq!(back.report.result["members"], o.report.result["members"]);
}

#[test]
fn example_filtration_file_verifies() {
    let o = koszul(&["koszul-verify", &data("example24.filtration"), "--json"]);
    assert_eq!(o.code, 0, "{}", o.render());
    assert_eq!(o.report.result["members"].as_array().unwrap().len(), 20);
    assert_eq!(o.report.certificates.len(), 19);
    round_trips(&o);
}

#[test]
fn broken_filtration_reports_members() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::copy(data("example24.ideal"), dir.path().join("example24.ideal")).unwrap();
    let f = dir.path().join("broken.filtration");
    std::fs::write(
        &f,
        "quotient: example24.ideal\norder: revlex:y1>y2>y3>y4>y5>y6>x1>x2>x3>x4>x5>x6\n0\nx1, y2\nm\n",
    )
    .unwrap();
    let o = koszul(&["koszul-verify", f.to_str().unwrap()]);
    assert_eq!(o.code, 1);
    assert!(o
        .report
        .failures
        .iter()
        .any(|x| x.subject.as_deref() == Some("member 1")));
}

#[test]
fn hibi_subcommands() {
    let b3 = data("b3.poset");
    let o = koszul(&["hibi", &b3, "--ideals"]);
    assert_eq!(o.code, 0);
    assert_eq!(
        o.report.result["poset_ideals"].as_array().unwrap().len(),
        20
    );
    let o = koszul(&["hibi", &b3, "--joinmeet"]);
    assert_eq!(o.code, 0);
    assert_eq!(o.report.result["quadratic"], json!(true));
    let o = koszul(&["hibi", &b3, "--filtration", "--certify"]);
    assert_eq!(o.code, 0, "{}", o.render());
    assert!(o
        .report
        .certificates
        .iter()
        .all(|c| c.checked != Some(false)));
    let o = koszul(&["hibi", &b3, "--upsets"]);
    assert_eq!(o.code, 0);
    let o = koszul(&["hibi", &b3, "--reduced", &data("b3_reduced.family")]);
    assert_eq!(o.code, 0, "{}", o.render());
    let o = koszul(&[
        "hibi",
        &data("chain3.poset"),
        "--colon",
        "empty",
        "empty, p1",
        "--certify",
    ]);
    assert_eq!(o.code, 0, "{}", o.render());
    assert_eq!(o.report.result["equal"], json!(true));
    let o = koszul(&["hibi", &data("b2.lattice"), "--colon", "0", "a"]);
    assert_eq!(o.code, 2);
}

#[test]
fn reduced_family_missing_a_cogenerated_ideal() {
    let dir = tempfile::tempdir().unwrap();
    let fam = dir.path().join("small.family");
    std::fs::write(&fam, "0\nempty\n").unwrap();
    let o = koszul(&[
        "hibi",
        &data("b3.poset"),
        "--reduced",
        fam.to_str().unwrap(),
    ]);
    assert_eq!(o.code, 1);
    assert_eq!(o.report.result["holds"], json!(false));
}

#[test]
fn toric_r52() {
    let o = koszul(&["toric", &data("r52.monomials"), "--json"]);
    assert_eq!(o.code, 0);
    assert_eq!(o.report.result["max_degree"], json!(3));
    assert_eq!(o.report.result["quadratic"], json!(false));
    assert_eq!(o.report.result["linear_quotients"], json!(true));
    round_trips(&o);
}

#[test]
fn random_graphs_follow_the_seed() {
    let a = koszul(&["closed", "--random", "6", "--seed", "11", "--certify"]);
    let b = koszul(&["closed", "--random", "6", "--seed", "11", "--certify"]);
    assert_eq!(a, b);
    assert!(a.code == 0 || a.code == 1);
    assert!(a
        .report
        .certificates
        .iter()
        .all(|c| c.checked == Some(true)));
    assert_eq!(a.report.inputs["seed"], "11");
}

#[test]
fn text_output_lists_failures() {
    let o = koszul(&["closed", &data("example24.graph")]);
    let text = o.render();
    assert!(text.contains("violation: [3, 4, 6]"));
    assert!(text.contains("failures: 1"));
}
