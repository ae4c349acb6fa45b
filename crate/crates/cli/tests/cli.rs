use std::io::Write;
use std::process::{Command, Output, Stdio};

fn data(name: &str) -> String {
    format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_monideal"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn poly_vertices_prints_both_vertices() {
    let out = run(&["poly-vertices", &data("four_cycle.ideal")]);
    assert_eq!(code(&out), 0);
    assert_eq!(stdout(&out), "(0,1/2,0,1/2)\n(1,0,1,0)\n");
}

#[test]
fn graph_input_stands_for_its_edge_ideal() {
    let from_graph = run(&["poly-vertices", &data("four_cycle.graph")]);
    let from_ideal = run(&["poly-vertices", &data("four_cycle.ideal")]);
    assert_eq!(stdout(&from_graph), stdout(&from_ideal));
}

#[test]
fn compare_lists_the_witness() {
    let out = run(&["compare", "--n", "2", &data("nonsink_triangle.graph")]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("I^2 == I^(2): false\n"));
    assert!(text.contains("mingens(I^(2)/I^2) = | t1*t2^2*t3 |\n"));
}

#[test]
fn compare_reports_zero_quotient_when_equal() {
    let out = run(&["compare", "--n", "2", &data("four_cycle.graph")]);
    assert!(stdout(&out).contains("mingens(I^(2)/I^2) = 0\n"));
}

#[test]
fn symbolic_defaults_to_minimal_primes() {
    let default = run(&["symbolic", "--n", "2", &data("heavy_triangle.ideal")]);
    let min = run(&[
        "symbolic",
        "--min",
        "--n",
        "2",
        &data("heavy_triangle.ideal"),
    ]);
    let ass = run(&[
        "symbolic",
        "--ass",
        "--n",
        "2",
        &data("heavy_triangle.ideal"),
    ]);
    assert_eq!(stdout(&default), stdout(&min));
    assert!(stdout(&min).starts_with("I^(2) = "));
    assert_eq!(
        stdout(&ass),
        "I^<2> = (t1^4*t3^2, t1^3*t2^2*t3, t1^2*t2^4, t1^2*t2*t3^3, t1*t2^3*t3^2, t2^2*t3^4)\n"
    );
}

#[test]
fn decompose_and_ass() {
    let out = run(&["decompose", &data("star.graph")]);
    assert_eq!(
        stdout(&out),
        "I = (t2*t3, t1*t2^2)\n3 components\n(t2)\n(t1, t3)\n(t2^2, t3)\n"
    );
    let out = run(&["ass", &data("heavy_triangle.graph")]);
    assert!(stdout(&out).contains("embedded: (t1, t2, t3)\n"));
}

#[test]
fn wog_commands() {
    let out = run(&["wog-ideal", &data("star.graph")]);
    assert_eq!(stdout(&out), "(t2*t3, t1*t2^2)\n");
    let out = run(&["wog-covers", &data("four_cycle.graph")]);
    assert!(stdout(&out).starts_with("2 strong covers\n"));
    let out = run(&["wog-classify", &data("sink_triangle.graph")]);
    let text = stdout(&out);
    assert!(text.contains("all V+ vertices are sinks: true\n"));
    assert!(text.contains("triangle: true\n"));
    assert!(text.contains("I^2 == I^(2): false\n"));
    let out = run(&[
        "wog-dual",
        "--normality",
        "--max-n",
        "2",
        &data("four_cycle.graph"),
    ]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).starts_with("J(D) = (t1*t3, t2^2*t4^2)\n4 components\n"));
}

#[test]
fn closure_finds_the_missing_monomial() {
    let out = run(&["closure", "--n", "1", &data("four_cycle.graph")]);
    let text = stdout(&out);
    assert!(text.contains("closed: false\n"));
    assert!(text.contains("t1*t2*t4"));
}

#[test]
fn examples_all_pass() {
    let out = run(&["examples"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(!text.contains("[FAIL]"));
    assert!(text.ends_with(" checks, 0 failed\n"));
}

#[test]
fn stdin_input() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_monideal"))
        .args(["decompose", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"t1*t2, t2*t3\n")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(
        stdout(&out),
        "I = (t1*t2, t2*t3)\n2 components\n(t2)\n(t1, t3)\n"
    );
}

#[test]
fn json_mirror_has_sorted_keys() {
    let out = run(&["--json", "poly-vertices", &data("four_cycle.nmz")]);
    let value: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(
        value["vertices"],
        serde_json::json!(["(0,1/2,0,1/2)", "(1,0,1,0)"])
    );
    let text = stdout(&out);
    let columns = text.find("\"columns\"").unwrap();
    let nvars = text.find("\"nvars\"").unwrap();
    let vertices = text.find("\"vertices\"").unwrap();
    assert!(columns < nvars && nvars < vertices);
}

#[test]
fn parse_errors_exit_two() {
    let out = run(&["decompose", &data("malformed.ideal")]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 1"));
    assert_eq!(code(&run(&["decompose", &data("missing.ideal")])), 2);
    assert_eq!(code(&run(&["wog-covers", &data("four_cycle.ideal")])), 2);
    assert_eq!(code(&run(&["newton", &data("four_cycle.nmz")])), 2);
}

#[test]
fn zero_powers_are_rejected() {
    assert_eq!(code(&run(&["compare", "--n", "0", &data("star.graph")])), 2);
    assert_eq!(code(&run(&["ntf", "--max-n", "0", &data("star.graph")])), 2);
}

#[test]
fn resource_limits_exit_three() {
    let out = run(&[
        "--max-vars",
        "2",
        "poly-vertices",
        &data("four_cycle.ideal"),
    ]);
    assert_eq!(code(&out), 3);
    assert!(String::from_utf8_lossy(&out.stderr).contains("--max-vars"));
    let out = run(&[
        "--max-box",
        "10",
        "closure",
        "--n",
        "2",
        &data("four_cycle.graph"),
    ]);
    assert_eq!(code(&out), 3);
    let out = run(&["--max-covers", "2", "wog-covers", &data("four_cycle.graph")]);
    assert_eq!(code(&out), 3);
}

#[test]
fn output_is_identical_across_runs_and_thread_counts() {
    let args = [
        "closure-criteria",
        "--max-n",
        "2",
        &data("four_cycle.graph"),
    ];
    let with_threads = |n: &str| {
        Command::new(env!("CARGO_BIN_EXE_monideal"))
            .args(args)
            .env("RAYON_NUM_THREADS", n)
            .output()
            .unwrap()
            .stdout
    };
    let first = with_threads("1");
    assert_eq!(first, with_threads("4"));
    assert_eq!(first, with_threads("4"));
    assert!(!first.is_empty());
}
