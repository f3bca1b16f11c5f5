use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::{Command, Output, Stdio};
use std::sync::OnceLock;

use serde_json::Value;
use tperf_core::graph::formats::{from_dimacs, from_graph6, to_dimacs, to_graph6};
use tperf_core::graph::{are_isomorphic, gen_antiweb, gen_complete, gen_cycle, AntiwebSpec, NamedGraph};
use tperf_core::Graph;

fn repo() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn run_with(args: &[&str], env: &[(&str, &str)], stdin: Option<&str>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_tperf"));
    cmd.args(args).envs(env.iter().copied()).stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped());
    let mut child = cmd.spawn().expect("spawn tperf");
    child.stdin.take().unwrap().write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn validator() -> &'static jsonschema::Validator {
    static V: OnceLock<jsonschema::Validator> = OnceLock::new();
    V.get_or_init(|| {
        let text = std::fs::read_to_string(repo().join("schema/report.schema.json")).unwrap();
        jsonschema::validator_for(&serde_json::from_str(&text).unwrap()).unwrap()
    })
}

fn python() -> Option<&'static str> {
    Command::new("python3").arg("--version").output().ok().filter(|o| o.status.success()).map(|_| "python3")
}

/// Runs the bundled checker on a report; `None` when python3 is unavailable.
fn checker(report: &str) -> Option<(bool, String)> {
    let py = python()?;
    let mut child = Command::new(py)
        .arg(repo().join("tools/check_certificate.py"))
        .arg("-")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(report.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    Some((out.status.success(), String::from_utf8_lossy(&out.stdout).into_owned()))
}

/// Runs a report-producing command, validates the report against the schema and
/// re-checks its certificates. Returns the exit code and the report.
fn report(args: &[&str], env: &[(&str, &str)]) -> (i32, Value) {
    let out = run_with(args, env, None);
    let text = String::from_utf8(out.stdout).unwrap();
    let v: Value = serde_json::from_str(&text).unwrap_or_else(|e| panic!("{args:?}: bad JSON ({e}): {text}"));
    let errors: Vec<String> = validator().iter_errors(&v).map(|e| e.to_string()).collect();
    assert!(errors.is_empty(), "{args:?}: schema violations {errors:?}");
    if let Some((ok, log)) = checker(&text) {
        assert!(ok, "{args:?}: certificate check failed:\n{log}");
    }
    let code = out.status.code().unwrap();
    let expected = match v["status"].as_str().unwrap() {
        "holds" => 0,
        "fails" => 1,
        "input-error" => 2,
        _ => 3,
    };
    assert_eq!(code, expected, "{args:?}: exit code does not match status");
    (code, v)
}

fn verdict(v: &Value) -> &Value {
    &v["verdicts"][0]
}

fn aw(n: usize, k: usize) -> Graph {
    gen_antiweb(AntiwebSpec::new(n, k).unwrap())
}

#[test]
fn gen_round_trips_named_graphs() {
    for ng in NamedGraph::ALL {
        let out = run_with(&["gen", "named", ng.name()], &[], None);
        assert!(out.status.success());
        let g = from_graph6(String::from_utf8(out.stdout).unwrap().trim()).unwrap();
        assert!(are_isomorphic(&g, &ng.graph()), "{ng}");

        let out = run_with(&["gen", "named", ng.name(), "--format", "dimacs"], &[], None);
        let g = from_dimacs(&String::from_utf8(out.stdout).unwrap()).unwrap();
        assert!(are_isomorphic(&g, &ng.graph()), "{ng} via DIMACS");
    }
}

#[test]
fn gen_generators() {
    let line = |args: &[&str]| {
        let out = run_with(args, &[], None);
        assert!(out.status.success(), "{args:?}");
        from_graph6(String::from_utf8(out.stdout).unwrap().trim()).unwrap()
    };
    assert_eq!(line(&["gen", "antiweb", "13", "3"]), aw(13, 3));
    assert!(are_isomorphic(&line(&["gen", "wheel", "5"]), &NamedGraph::W5.graph()));
    assert_eq!(line(&["gen", "named", "K4figC"]), NamedGraph::K4FigC.graph());
    assert_eq!(line(&["gen", "moebius", "1"]), aw(8, 2));
    assert_eq!(line(&["gen", "cycle-power", "7", "2"]), NamedGraph::C7Sq.graph());

    assert_eq!(run_with(&["gen", "antiweb", "13"], &[], None).status.code(), Some(2));
    assert_eq!(run_with(&["gen", "petersen"], &[], None).status.code(), Some(2));
    assert_eq!(run_with(&["gen", "named", "K5"], &[], None).status.code(), Some(2));
}

#[test]
fn check_tperfect_examples() {
    let (code, v) = report(&["check", "--property", "tperfect", "cycle-power:7:2"], &[]);
    assert_eq!(code, 1);
    let c = &verdict(&v)["certificate"];
    assert_eq!(c["kind"], "induced_subgraph");
    assert_eq!(c["pattern"], "C7sq");
    assert_eq!(verdict(&v)["mode"], "recognizer-p5free");

    let (code, v) = report(&["check", "cycle:5", "--property", "tperfect"], &[]);
    assert_eq!(code, 0);
    assert_eq!(verdict(&v)["holds"], true);

    // near-bipartite, not P5-free
    let (code, v) = report(&["check", "antiweb:13:4", "--property", "tperfect"], &[]);
    assert_eq!(code, 1);
    assert_eq!(verdict(&v)["mode"], "recognizer-nearbip");
    assert_eq!(verdict(&v)["certificate"]["pattern"], "aweb(13,4)");
}

#[test]
fn check_other_properties() {
    let (code, v) = report(&["check", "--property", "oddpair", "0", "5", "cycle-power:10:2"], &[]);
    assert_eq!((code, &verdict(&v)["holds"]), (0, &Value::Bool(true)));
    let (code, v) = report(&["check", "cycle:6", "--property", "oddpair", "0", "2"], &[]);
    assert_eq!(code, 1);
    assert_eq!(verdict(&v)["certificate"]["path"], serde_json::json!([0, 1, 2]));

    let (code, v) = report(&["check", "antiweb:13:4", "--property", "oddgirth"], &[]);
    assert_eq!((code, &verdict(&v)["value"]), (0, &Value::from(5)));
    assert_eq!(report(&["check", "path:4", "--property", "oddgirth"], &[]).0, 1);

    let (code, v) = report(&["check", "cycle:7", "--property", "chif"], &[]);
    assert_eq!(code, 0);
    assert_eq!(verdict(&v)["value"]["chi_f"], "7/3");
    assert_eq!(report(&["check", "antiweb:8:2", "--property", "chif"], &[]).0, 1);

    assert_eq!(report(&["check", "named:MM_g", "--property", "colour", "4"], &[]).0, 0);
    let (code, v) = report(&["check", "named:MM_g", "--property", "colour", "3"], &[]);
    assert_eq!((code, &verdict(&v)["evidence"]), (1, &Value::from("oracle-exhaustive")));

    assert_eq!(report(&["check", "cycle:6", "--property", "harmonious"], &[]).0, 0);
    assert_eq!(report(&["check", "cycle:5", "--property", "harmonious"], &[]).0, 1);
    assert_eq!(report(&["check", "wheel:5", "--property", "nearbip"], &[]).0, 0);
    assert_eq!(report(&["check", "cycle:7", "--property", "p5free"], &[]).0, 1);
    assert_eq!(report(&["check", "named:C7sq", "--property", "p5free"], &[]).0, 0);
}

#[test]
fn check_oracle_routing_and_exit_codes() {
    let two_c7 = gen_cycle(7).unwrap().disjoint_union(&gen_cycle(7).unwrap()).unwrap();
    let g6 = to_graph6(&two_c7);

    let (code, v) = report(&["check", &g6, "--property", "tperfect"], &[]);
    assert_eq!(code, 2);
    assert!(v["error"].as_str().unwrap().contains("--oracle"));

    assert_eq!(report(&["check", &g6, "--property", "tperfect", "--oracle"], &[]).0, 3);
    let (code, v) = report(&["check", &g6, "--property", "tperfect", "--oracle", "--force-long"], &[]);
    assert_eq!(code, 0);
    assert_eq!(verdict(&v)["mode"], "oracle-exhaustive");

    let c7_c5 = gen_cycle(7).unwrap().disjoint_union(&gen_cycle(5).unwrap()).unwrap();
    assert_eq!(report(&["check", &to_graph6(&c7_c5), "--property", "tperfect", "--oracle"], &[]).0, 0);
    let k4_c7 = gen_complete(4).unwrap().disjoint_union(&gen_cycle(7).unwrap()).unwrap();
    let (code, v) = report(&["check", &to_graph6(&k4_c7), "--property", "tperfect", "--oracle"], &[]);
    assert_eq!(code, 1);
    assert_eq!(verdict(&v)["certificate"]["kind"], "fractional_point");

    // the cycle cap applies to the oracle's TSTAB
    let (code, _) = report(&["check", "named:W5", "--property", "tperfect", "--oracle"], &[("TPERF_CYCLE_CAP", "1")]);
    assert_eq!(code, 1, "the P5-free recogniser does not enumerate cycles");
    let (code, v) =
        report(&["check", &to_graph6(&c7_c5), "--property", "tperfect", "--oracle"], &[("TPERF_CYCLE_CAP", "1")]);
    assert_eq!(code, 3, "{v}");

    assert_eq!(report(&["check", "not-a-graph", "--property", "tperfect"], &[]).0, 2);
    assert_eq!(report(&["check", "cycle:5", "--property", "perfect"], &[]).0, 2);
    assert_eq!(report(&["check", "cycle:5", "--property", "oddpair", "0", "9"], &[]).0, 2);
    assert_eq!(report(&["check", "path:4", "--property", "chif"], &[]).0, 2);
    assert_eq!(report(&["check", "@/nonexistent/file.g6", "--property", "p5free"], &[]).0, 2);
    // usage errors come from the argument parser
    assert_eq!(run_with(&["check", "cycle:5"], &[], None).status.code(), Some(2));
}

#[test]
fn graph_inputs_from_files_and_stdin() {
    let dir = std::env::temp_dir().join(format!("tperf-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let g = NamedGraph::K4FigA.graph();
    let dimacs = dir.join("figa.dimacs");
    std::fs::write(&dimacs, to_dimacs(&g)).unwrap();
    let arg = format!("@{}", dimacs.display());
    let (code, v) = report(&["check", &arg, "--property", "tperfect"], &[]);
    assert_eq!(code, 1);
    assert_eq!(v["input"]["graph6"], to_graph6(&g));

    let out = run_with(&["check", "-", "--property", "p5free"], &[], Some(&format!("{}\n", to_graph6(&aw(10, 2)))));
    assert_eq!(out.status.code(), Some(0));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn output_is_deterministic_without_timings() {
    let args = ["check", "antiweb:13:3", "--property", "tperfect"];
    let a = run_with(&args, &[], None).stdout;
    let b = run_with(&args, &[], None).stdout;
    assert_eq!(a, b);
    let (_, v) = report(&["--timings", "check", "cycle:5", "--property", "oddgirth"], &[]);
    assert!(v["timings"]["total_ms"].is_u64());
}

#[test]
fn sweep_examples() {
    for args in [
        &["sweep", "--max-n", "6", "--assert", "tminor-closure"][..],
        &["sweep", "--max-n", "7", "--filter", "p5free", "--assert", "recognizer-matches-oracle"],
        &["sweep", "--max-n", "7", "--assert", "almost-bipartite-implies-tperfect"],
        &["sweep", "--max-n", "7", "--assert", "p5free-tminor-closure"],
        &["sweep", "--max-n", "7", "--assert", "p5free3-colourable"],
        &["sweep", "--max-n", "7", "--assert", "nearbip4-colourable"],
        &["sweep", "--max-n", "6", "--assert", "chif-formula"],
    ] {
        let (code, v) = report(args, &[]);
        assert_eq!(code, 0, "{args:?}");
        assert_eq!(v["sweep"]["counterexamples"], serde_json::json!([]));
        assert!(v["sweep"]["applicable"].as_u64().unwrap() > 0);
    }
    let (_, v) = report(&["sweep", "--max-n", "6", "--assert", "tminor-closure"], &[]);
    assert_eq!(v["sweep"]["graphs"], 1 + 2 + 4 + 11 + 34 + 156);
}

#[test]
fn sweep_counterexamples_and_resource_failures() {
    let dir = std::env::temp_dir().join(format!("tperf-sweep-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let graphs = [NamedGraph::W5.graph(), gen_cycle(5).unwrap(), gen_complete(4).unwrap(), NamedGraph::K4FigA.graph()];
    let write = |name: &str, gs: &[Graph]| {
        let p = dir.join(name);
        std::fs::write(&p, gs.iter().map(|g| to_graph6(g) + "\n").collect::<String>()).unwrap();
        p.display().to_string()
    };
    let fwd = write("fwd.g6", &graphs);
    let rev: Vec<Graph> = graphs.iter().rev().cloned().collect();
    let back = write("rev.g6", &rev);

    let (code, a) = report(&["sweep", "--input", &fwd, "--assert", "tperfect"], &[]);
    assert_eq!(code, 1);
    let (_, b) = report(&["sweep", "--input", &back, "--assert", "tperfect"], &[]);
    let g6s = |v: &Value| -> Vec<String> {
        v["sweep"]["counterexamples"].as_array().unwrap().iter().map(|c| c["graph6"].as_str().unwrap().into()).collect()
    };
    assert_eq!(g6s(&a).len(), 3);
    assert_eq!(g6s(&a), g6s(&b), "order follows canonical form, not input order");
    assert_eq!(g6s(&a)[0], to_graph6(&gen_complete(4).unwrap()));

    // the filter applies to file input too; K4figA is the one graph here that is
    // not near-bipartite
    let (_, v) = report(&["sweep", "--input", &fwd, "--filter", "nearbip", "--assert", "tperfect"], &[]);
    assert_eq!(v["sweep"]["graphs"], 3);

    let (code, v) = report(&["sweep", "--max-n", "5", "--assert", "tperfect"], &[("TPERF_CYCLE_CAP", "1")]);
    assert_eq!(code, 3);
    assert!(!v["sweep"]["resource_failures"].as_array().unwrap().is_empty());
    assert_eq!(v["sweep"]["graphs"], 1 + 2 + 4 + 11 + 34);

    let bad = dir.join("bad.g6");
    std::fs::write(&bad, "Bw\n!!!\n").unwrap();
    assert_eq!(report(&["sweep", "--input", &bad.display().to_string(), "--assert", "tperfect"], &[]).0, 2);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn verify_paper_suites() {
    for suite in ["minimality", "theorem1", "colouring", "conjecture2", "harmonious"] {
        let (code, v) = report(&["verify-paper", "--suite", suite], &[]);
        assert_eq!(code, 0, "{suite}: {v}");
        assert!(v["verdicts"].as_array().unwrap().len() >= 3);
    }
}

#[test]
fn checker_rejects_tampered_certificates() {
    let Some(_) = python() else { return };
    let out = run_with(&["check", "--property", "tperfect", "cycle-power:7:2"], &[], None);
    let mut v: Value = serde_json::from_slice(&out.stdout).unwrap();
    v["verdicts"][0]["certificate"]["map"][0] = Value::from(1);
    let (ok, log) = checker(&v.to_string()).unwrap();
    assert!(!ok, "{log}");

    let out = run_with(&["check", "named:MM_g", "--property", "colour", "4"], &[], None);
    let mut v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let c = &mut v["verdicts"][0]["certificate"]["colours"];
    c["1"] = c["0"].clone();
    c["5"] = c["0"].clone();
    c["6"] = c["0"].clone();
    assert!(!checker(&v.to_string()).unwrap().0);

    let out = run_with(&["check", "cycle:5", "--property", "chif"], &[], None);
    let mut v: Value = serde_json::from_slice(&out.stdout).unwrap();
    v["verdicts"][0]["certificate"]["value"] = Value::from("2");
    assert!(!checker(&v.to_string()).unwrap().0);
}
