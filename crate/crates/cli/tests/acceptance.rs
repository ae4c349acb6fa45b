//! One PASS/FAIL line per acceptance criterion; exits nonzero if any fails.

use std::process::{Command, ExitCode};

use monideal::fixtures::{fixture_checks, heptagon, FixtureCheck};
use monideal::oracles::{
    ass_matches_colon_scan, closure_disagreement, decomposition_reintersects, localization_commutes,
};
use monideal::wog::DEFAULT_MAX_COVER_VERTICES;
use monideal::{
    compare_powers, irreducible_decomposition, ExponentVector, MonomialIdeal, PolyLimits, Result,
    WeightedOrientedGraph,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const GRAPH_SEED: u64 = 0x5eed_0001;
const IDEAL_SEED: u64 = 0x5eed_0002;
const COVER_SEED: u64 = 0x5eed_0003;

/// Identifier, description and the check itself.
type Criterion<'a> = (&'static str, &'static str, Box<dyn Fn() -> Outcome + 'a>);

struct Outcome {
    passed: bool,
    detail: String,
}

impl Outcome {
    fn from_failures(total: usize, failures: Vec<String>) -> Self {
        let passed = failures.is_empty() && total > 0;
        let mut detail = format!("{total} checked, {} failed", failures.len());
        if let Some(first) = failures.first() {
            detail.push_str(&format!("; first: {first}"));
        }
        Outcome { passed, detail }
    }
}

fn random_graph(rng: &mut ChaCha8Rng) -> WeightedOrientedGraph {
    loop {
        let s = rng.random_range(2..=6);
        let mut edges = Vec::new();
        for i in 1..=s {
            for j in i + 1..=s {
                match rng.random_range(0..3) {
                    1 => edges.push((i, j)),
                    2 => edges.push((j, i)),
                    _ => {}
                }
            }
        }
        let weights = (0..s).map(|_| rng.random_range(1..=3)).collect();
        if !edges.is_empty() {
            return WeightedOrientedGraph::new(s, edges, weights).expect("random graph is valid");
        }
    }
}

fn random_graphs(seed: u64, count: usize) -> Vec<WeightedOrientedGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| random_graph(&mut rng)).collect()
}

fn random_ideals(seed: u64, count: usize) -> Vec<MonomialIdeal> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let s = rng.random_range(1..=4);
        let ngens = rng.random_range(1..=5);
        let gens = (0..ngens)
            .map(|_| ExponentVector::new((0..s).map(|_| rng.random_range(0..=3)).collect()));
        let i = MonomialIdeal::minimalize(gens, s).expect("random ideal is valid");
        if i.is_proper_nonzero() {
            out.push(i);
        }
    }
    out
}

fn fixture_outcome(checks: &[&FixtureCheck]) -> Outcome {
    let failures = checks
        .iter()
        .filter(|c| !c.passed)
        .map(|c| format!("{}: {}", c.fixture, c.assertion))
        .collect();
    Outcome::from_failures(checks.len(), failures)
}

fn is_closure_criteria(c: &FixtureCheck) -> bool {
    c.assertion.starts_with("closure criteria")
}

fn fixture(checks: &[FixtureCheck], name: &str) -> Outcome {
    let selected: Vec<&FixtureCheck> = checks
        .iter()
        .filter(|c| c.fixture == name && !is_closure_criteria(c))
        .collect();
    fixture_outcome(&selected)
}

fn square_criterion(graphs: &[WeightedOrientedGraph]) -> Outcome {
    let mut failures = Vec::new();
    for d in graphs {
        let check = || -> Result<bool> {
            let roles = d.normalize().vertex_roles();
            let props = d.underlying_props();
            let predicted = roles.all_vplus_sinks && !props.has_triangle;
            Ok(compare_powers(&d.edge_ideal(), 2)?.equal_min == predicted)
        };
        match check() {
            Ok(true) => {}
            Ok(false) => failures.push(format!("mismatch on\n{d}")),
            Err(e) => failures.push(format!("error {e} on\n{d}")),
        }
    }
    Outcome::from_failures(graphs.len(), failures)
}

/// `I^n = I^(n)` for `n = 1..=max_n`, stopping at the first failure.
fn first_unequal_power(d: &WeightedOrientedGraph, max_n: u32) -> Result<Option<u32>> {
    let i = d.edge_ideal();
    for n in 1..=max_n {
        if !compare_powers(&i, n)?.equal_min {
            return Ok(Some(n));
        }
    }
    Ok(None)
}

fn all_powers_criterion(graphs: &[WeightedOrientedGraph]) -> Outcome {
    let mut failures = Vec::new();
    let mut total = 0;
    for d in graphs {
        let props = d.underlying_props();
        if props.odd_girth.is_some_and(|g| g > 5) {
            continue;
        }
        total += 1;
        let predicted = d.normalize().vertex_roles().all_vplus_sinks && props.is_bipartite;
        match first_unequal_power(d, 3) {
            Ok(first) if first.is_none() == predicted => {}
            Ok(first) => failures.push(format!(
                "first failure {first:?}, predicted {predicted} on\n{d}"
            )),
            Err(e) => failures.push(format!("error {e} on\n{d}")),
        }
    }
    total += 1;
    match first_unequal_power(&heptagon(), 4) {
        Ok(Some(4)) => {}
        other => failures.push(format!(
            "directed 7-cycle: first failure {other:?}, expected Some(4)"
        )),
    }
    Outcome::from_failures(total, failures)
}

fn closure_criteria(checks: &[FixtureCheck]) -> Outcome {
    let selected: Vec<&FixtureCheck> = checks.iter().filter(|c| is_closure_criteria(c)).collect();
    fixture_outcome(&selected)
}

fn cross_oracles(ideals: &[MonomialIdeal], graphs: &[WeightedOrientedGraph]) -> Outcome {
    let limits = PolyLimits::default();
    let mut failures = Vec::new();
    for i in ideals {
        let check = || -> Result<Option<&'static str>> {
            if !decomposition_reintersects(i)? {
                return Ok(Some("decomposition does not reintersect"));
            }
            if !ass_matches_colon_scan(i)? {
                return Ok(Some("Ass differs from the colon scan"));
            }
            for n in 1..=3 {
                if !localization_commutes(i, n)? {
                    return Ok(Some("localization does not commute with powers"));
                }
            }
            for n in 1..=2 {
                if closure_disagreement(i, n, &limits)?.is_some() {
                    return Ok(Some("closure disagrees with the power oracle"));
                }
            }
            Ok(None)
        };
        match check() {
            Ok(None) => {}
            Ok(Some(what)) => failures.push(format!("{what}: {i}")),
            Err(e) => failures.push(format!("error {e}: {i}")),
        }
    }
    for d in graphs {
        let check = || -> Result<bool> {
            let via = d.decomposition_via_covers(DEFAULT_MAX_COVER_VERTICES)?;
            Ok(via.decomposition == irreducible_decomposition(&d.edge_ideal())?)
        };
        match check() {
            Ok(true) => {}
            Ok(false) => failures.push(format!("strong covers disagree on\n{d}")),
            Err(e) => failures.push(format!("error {e} on\n{d}")),
        }
    }
    Outcome::from_failures(ideals.len() + graphs.len(), failures)
}

fn cli(args: &[&str]) -> std::result::Result<String, String> {
    let out = Command::new(env!("CARGO_BIN_EXE_monideal"))
        .args(args)
        .output()
        .map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!(
            "exit {:?}: {}",
            out.status.code(),
            String::from_utf8_lossy(&out.stderr)
        ));
    }
    String::from_utf8(out.stdout).map_err(|e| e.to_string())
}

fn data(name: &str) -> String {
    format!("{}/tests/data/{name}", env!("CARGO_MANIFEST_DIR"))
}

fn external_tool_parity() -> Outcome {
    let mut failures = Vec::new();
    match cli(&[
        "poly-vertices",
        "--normaliz-format",
        &data("four_cycle.nmz"),
    ]) {
        Ok(text) => {
            let block = text
                .split_once("2 vertices of polyhedron:\n")
                .map(|(_, rest)| rest);
            if block != Some("0 1/2 0 1/2\n1 0 1 0\n") {
                failures.push(format!("unexpected Normaliz output:\n{text}"));
            }
        }
        Err(e) => failures.push(e),
    }
    match cli(&["compare", "--n", "2", &data("heavy_triangle.ideal")]) {
        Ok(text) => {
            let expected = [
                "I^2 == I^<2>: true",
                "I^2 == I^(2): false",
                "mingens(I^(2)/I^2) = | t1^2*t2^2*t3 t1^2*t2*t3^2 t1*t2^2*t3^2 |",
            ];
            for line in expected {
                if !text.lines().any(|l| l == line) {
                    failures.push(format!("missing line {line:?}"));
                }
            }
        }
        Err(e) => failures.push(e),
    }
    Outcome::from_failures(2, failures)
}

fn main() -> ExitCode {
    let checks = fixture_checks();
    let graphs = random_graphs(GRAPH_SEED, 200);
    let criteria: Vec<Criterion> = vec![
        (
            "AC-01",
            "four-cycle fixture",
            Box::new(|| fixture(&checks, "four-cycle")),
        ),
        (
            "AC-02",
            "heavy-triangle fixture",
            Box::new(|| fixture(&checks, "heavy-triangle")),
        ),
        (
            "AC-03",
            "non-sink triangle fixture",
            Box::new(|| fixture(&checks, "nonsink-triangle")),
        ),
        (
            "AC-04",
            "sink triangle fixture",
            Box::new(|| fixture(&checks, "sink-triangle")),
        ),
        (
            "AC-05",
            "directed path fixture",
            Box::new(|| fixture(&checks, "star")),
        ),
        (
            "AC-06",
            "square criterion on 200 random graphs",
            Box::new(|| square_criterion(&graphs)),
        ),
        (
            "AC-07",
            "all-powers criterion (odd girth <= 5) plus directed 7-cycle",
            Box::new(|| all_powers_criterion(&graphs)),
        ),
        (
            "AC-08",
            "closure criteria on the four-cycle I and J",
            Box::new(|| closure_criteria(&checks)),
        ),
        (
            "AC-09",
            "cross-oracles on 100 random ideals and 100 random graphs",
            Box::new(|| {
                cross_oracles(
                    &random_ideals(IDEAL_SEED, 100),
                    &random_graphs(COVER_SEED, 100),
                )
            }),
        ),
        (
            "AC-10",
            "CLI output matches Normaliz and Macaulay2 workflows",
            Box::new(external_tool_parity),
        ),
    ];
    let mut all = true;
    for (id, name, run) in &criteria {
        let outcome = run();
        let tag = if outcome.passed { "PASS" } else { "FAIL" };
        println!("[{tag}] {id} {name} ({})", outcome.detail);
        all &= outcome.passed;
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
