use std::fmt::Write as _;

use monideal::fixtures::fixture_checks;
use monideal::polyhedra::{
    alexander_normality_check, closure_criteria_check, covering_polyhedron, integral_closure_power,
    is_normal_up_to, newton_hrep, newton_vertices, to_normaliz,
};
use monideal::symbolic::is_ntf_up_to;
use monideal::wog::VertexSet;
use monideal::{
    associated_primes, compare_powers, embedded_primes, irreducible_decomposition, minimal_primes,
    symbolic_power_ass, symbolic_power_min, ExponentVector, IrreducibleDecomposition,
    MonomialIdeal, MonomialPrime, RationalVector,
};
use serde_json::{json, Value};

use crate::input::{load, Input};
use crate::{CliError, Command, Global};

pub struct Report {
    pub text: String,
    pub json: Value,
    /// False when a check the command performs has failed.
    pub ok: bool,
}

impl Report {
    fn new(text: String, json: Value) -> Self {
        Report {
            text,
            json,
            ok: true,
        }
    }
}

fn ideal_json(i: &MonomialIdeal) -> Value {
    json!({
        "nvars": i.nvars(),
        "gens": i.gens().iter().map(ToString::to_string).collect::<Vec<_>>(),
    })
}

fn strings<T: ToString>(items: &[T]) -> Vec<String> {
    items.iter().map(ToString::to_string).collect()
}

fn primes_text(primes: &[MonomialPrime]) -> String {
    if primes.is_empty() {
        "none".to_string()
    } else {
        strings(primes).join(" ")
    }
}

fn set_text(s: &VertexSet) -> String {
    let items: Vec<String> = s.iter().map(|v| format!("t{v}")).collect();
    format!("{{{}}}", items.join(", "))
}

fn set_json(s: &VertexSet) -> Value {
    json!(s.iter().collect::<Vec<_>>())
}

fn mingens_text(gens: &[ExponentVector]) -> String {
    if gens.is_empty() {
        "0".to_string()
    } else {
        format!("| {} |", strings(gens).join(" "))
    }
}

fn decomposition_lines(dec: &IrreducibleDecomposition) -> String {
    let mut out = String::new();
    for q in dec.components() {
        let _ = writeln!(out, "{q}");
    }
    out
}

pub fn run(command: &Command, g: &Global) -> Result<Report, CliError> {
    let limits = g.poly_limits();
    match command {
        Command::Decompose { file } => {
            let i = load(file)?.into_ideal()?;
            let dec = irreducible_decomposition(&i)?;
            let text = format!(
                "I = {i}\n{} components\n{}",
                dec.len(),
                decomposition_lines(&dec)
            );
            let json = json!({
                "ideal": ideal_json(&i),
                "components": strings(dec.components()),
            });
            Ok(Report::new(text, json))
        }
        Command::Ass { file } => {
            let i = load(file)?.into_ideal()?;
            let ass = associated_primes(&i)?;
            let min = minimal_primes(&i)?;
            let emb = embedded_primes(&i)?;
            let text = format!(
                "Ass: {}\nminimal: {}\nembedded: {}\n",
                primes_text(&ass),
                primes_text(&min),
                primes_text(&emb)
            );
            let json = json!({
                "associated": strings(&ass),
                "minimal": strings(&min),
                "embedded": strings(&emb),
            });
            Ok(Report::new(text, json))
        }
        Command::Symbolic {
            file,
            n,
            min: _,
            ass,
        } => {
            let i = load(file)?.into_ideal()?;
            let (label, sym) = if *ass {
                (format!("I^<{n}>"), symbolic_power_ass(&i, *n)?)
            } else {
                (format!("I^({n})"), symbolic_power_min(&i, *n)?)
            };
            let text = format!("{label} = {sym}\n");
            let json = json!({
                "n": n,
                "primes": if *ass { "max-associated" } else { "minimal" },
                "symbolic_power": ideal_json(&sym),
            });
            Ok(Report::new(text, json))
        }
        Command::Compare { file, n } => {
            let i = load(file)?.into_ideal()?;
            let r = compare_powers(&i, *n)?;
            let text = format!(
                "I = {i}\nI^{n} = {}\nI^<{n}> = {}\nI^({n}) = {}\nI^{n} == I^<{n}>: {}\nI^{n} == I^({n}): {}\nmingens(I^({n})/I^{n}) = {}\n",
                r.power,
                r.symbolic_ass,
                r.symbolic_min,
                r.equal_ass,
                r.equal_min,
                mingens_text(&r.witnesses)
            );
            let json = json!({
                "n": n,
                "power": ideal_json(&r.power),
                "symbolic_ass": ideal_json(&r.symbolic_ass),
                "symbolic_min": ideal_json(&r.symbolic_min),
                "equal_ass": r.equal_ass,
                "equal_min": r.equal_min,
                "witnesses": strings(&r.witnesses),
            });
            Ok(Report::new(text, json))
        }
        Command::Ntf { file, max_n } => {
            let i = load(file)?.into_ideal()?;
            let bound = max_n.unwrap_or(g.power_bound);
            let r = is_ntf_up_to(&i, bound)?;
            let mut text = format!("Ass(I): {}\n", primes_text(&r.ass));
            for (n, primes) in &r.ass_of_powers {
                let _ = writeln!(text, "Ass(I^{n}): {}", primes_text(primes));
            }
            let _ = writeln!(
                text,
                "normally torsion-free up to n = {bound}: {}",
                r.normally_torsion_free
            );
            if let Some(eq) = r.powers_equal_symbolic {
                let _ = writeln!(text, "I^n == I^(n) for n <= {bound}: {eq}");
            }
            let json = json!({
                "max_n": bound,
                "ass": strings(&r.ass),
                "ass_of_powers": r.ass_of_powers.iter().map(|(n, p)| json!({"n": n, "primes": strings(p)})).collect::<Vec<_>>(),
                "normally_torsion_free": r.normally_torsion_free,
                "powers_equal_symbolic": r.powers_equal_symbolic,
            });
            Ok(Report::new(text, json))
        }
        Command::WogClassify { file } => {
            let d = load(file)?.into_graph()?;
            let roles = d.normalize().vertex_roles();
            let props = d.underlying_props();
            let c = d.classify()?;
            let witness = d.non_sink_witness();
            let irrelevant = d.irrelevant_prime_report()?;
            let ntf = c
                .ntf
                .map_or("undetermined (embedded primes)".to_string(), |b| {
                    b.to_string()
                });
            let mut text = String::new();
            let _ = writeln!(text, "sources: {}", set_text(&roles.sources));
            let _ = writeln!(text, "sinks: {}", set_text(&roles.sinks));
            let _ = writeln!(text, "V+: {}", set_text(&roles.vplus));
            let _ = writeln!(text, "all V+ vertices are sinks: {}", roles.all_vplus_sinks);
            let _ = writeln!(text, "bipartite: {}", props.is_bipartite);
            let _ = writeln!(text, "triangle: {}", props.has_triangle);
            let odd = props
                .odd_girth
                .map_or("none".to_string(), |g| g.to_string());
            let _ = writeln!(text, "odd girth: {odd}");
            let _ = writeln!(text, "I^2 == I^(2): {}", c.square);
            let _ = writeln!(text, "I^n == I^(n) for all n: {}", c.all_powers);
            let _ = writeln!(text, "normally torsion-free: {ntf}");
            let _ = writeln!(text, "maximal ideal associated: {}", irrelevant.via_ass);
            if let Some(f) = &witness {
                let _ = writeln!(text, "non-sink witness: {f}");
            }
            let json = json!({
                "sources": set_json(&roles.sources),
                "sinks": set_json(&roles.sinks),
                "vplus": set_json(&roles.vplus),
                "all_vplus_sinks": roles.all_vplus_sinks,
                "is_bipartite": props.is_bipartite,
                "has_triangle": props.has_triangle,
                "odd_girth": props.odd_girth,
                "square": c.square,
                "all_powers": c.all_powers,
                "ntf": c.ntf,
                "maximal_ideal_associated": irrelevant.via_ass,
                "non_sink_witness": witness.map(|f| f.to_string()),
            });
            Ok(Report::new(text, json))
        }
        Command::WogCovers { file } => {
            let d = load(file)?.into_graph()?.normalize();
            let r = d.decomposition_via_covers(g.max_covers)?;
            let mut text = format!("{} strong covers\n", r.covers.len());
            let mut rows = Vec::new();
            for (c, q) in &r.covers {
                let part = d.cover_partition(c)?;
                let _ = writeln!(
                    text,
                    "{} L1={} L2={} L3={} I_C={q}",
                    set_text(c),
                    set_text(&part.l1),
                    set_text(&part.l2),
                    set_text(&part.l3)
                );
                rows.push(json!({
                    "cover": set_json(c),
                    "l1": set_json(&part.l1),
                    "l2": set_json(&part.l2),
                    "l3": set_json(&part.l3),
                    "ideal": q.to_string(),
                }));
            }
            let _ = write!(
                text,
                "irredundant:\n{}",
                decomposition_lines(&r.decomposition)
            );
            let json = json!({
                "covers": rows,
                "decomposition": strings(r.decomposition.components()),
            });
            Ok(Report::new(text, json))
        }
        Command::WogIdeal { file } => {
            let d = load(file)?.into_graph()?;
            let i = d.edge_ideal();
            Ok(Report::new(format!("{i}\n"), ideal_json(&i)))
        }
        Command::WogDual {
            file,
            normality,
            max_n,
        } => {
            let d = load(file)?.into_graph()?;
            let (dec, j) = d.alexander_dual()?;
            let mut text = format!(
                "J(D) = {j}\n{} components\n{}",
                dec.len(),
                decomposition_lines(&dec)
            );
            let mut json = json!({
                "dual": ideal_json(&j),
                "components": strings(dec.components()),
            });
            if *normality {
                let bound = max_n.unwrap_or(g.power_bound);
                let r = alexander_normality_check(&d, bound, &limits)?;
                let _ = writeln!(text, "J^n == J^(n) for n <= {bound}: {}", r.powers_equal);
                let _ = writeln!(text, "J normal up to n = {bound}: {}", r.normal);
                let _ = writeln!(text, "NP(J) == IP(J): {}", r.np_equals_ip);
                if let Some(c) = &r.caveat {
                    let _ = writeln!(text, "caveat: {c}");
                }
                json["normality"] = json!({
                    "max_n": bound,
                    "powers_equal": r.powers_equal,
                    "normal": r.normal,
                    "np_equals_ip": r.np_equals_ip,
                    "holds": r.holds,
                    "caveat": r.caveat,
                });
            }
            Ok(Report::new(text, json))
        }
        Command::PolyVertices {
            file,
            normaliz_format,
        } => {
            let p = match load(file)? {
                Input::Normaliz(p) => p,
                other => covering_polyhedron(&other.into_ideal()?)?,
            };
            let vs = p.vertex_points(&limits)?;
            let text = if *normaliz_format {
                to_normaliz(&p, Some(&vs))
            } else {
                strings(&vs).iter().map(|v| format!("{v}\n")).collect()
            };
            let json = json!({
                "nvars": p.nvars(),
                "columns": strings(p.columns()),
                "vertices": strings(&vs),
            });
            Ok(Report::new(text, json))
        }
        Command::Newton { file } => {
            let i = load(file)?.into_ideal()?;
            let np = newton_hrep(&i, &limits)?;
            let vs = newton_vertices(&i, &limits)?;
            let mut text = String::from("NP(I) = { x >= 0 :\n");
            for c in np.columns() {
                let _ = writeln!(text, "  x . {c} >= 1");
            }
            let _ = writeln!(text, "}}\nvertices: {}", strings(&vs).join(" "));
            let json = json!({
                "inequalities": strings(np.columns()),
                "vertices": strings(&vs),
            });
            Ok(Report::new(text, json))
        }
        Command::Closure { file, n } => {
            let i = load(file)?.into_ideal()?;
            let c = integral_closure_power(&i, *n, &limits)?;
            let pw = i.power(*n)?;
            let extra: Vec<ExponentVector> = c
                .gens()
                .iter()
                .filter(|a| !pw.contains_monomial(a).unwrap_or(false))
                .cloned()
                .collect();
            let text = format!(
                "closure(I^{n}) = {c}\nclosed: {}\nnot in I^{n}: {}\n",
                extra.is_empty(),
                mingens_text(&extra)
            );
            let json = json!({
                "n": n,
                "closure": ideal_json(&c),
                "integrally_closed": extra.is_empty(),
                "outside_power": strings(&extra),
            });
            Ok(Report::new(text, json))
        }
        Command::Normal { file, max_n } => {
            let i = load(file)?.into_ideal()?;
            let bound = max_n.unwrap_or(g.power_bound);
            let r = is_normal_up_to(&i, bound, &limits)?;
            let mut text = String::new();
            for (n, ok) in &r.checked {
                let _ = writeln!(text, "I^{n} integrally closed: {ok}");
            }
            let _ = writeln!(text, "normal up to n = {bound}: {}", r.normal);
            let json = json!({
                "max_n": bound,
                "checked": r.checked.iter().map(|(n, ok)| json!({"n": n, "closed": ok})).collect::<Vec<_>>(),
                "normal": r.normal,
            });
            Ok(Report::new(text, json))
        }
        Command::ClosureCriteria { file, max_n } => {
            let i = load(file)?.into_ideal()?;
            let bound = max_n.unwrap_or(g.power_bound);
            let mut powers_equal = true;
            for n in 1..=bound {
                if !compare_powers(&i, n)?.equal_min {
                    powers_equal = false;
                    break;
                }
            }
            let r = closure_criteria_check(&i, bound, powers_equal, &limits)?;
            let split = r
                .closure_intersection
                .map_or("skipped (decomposition not minimal)".to_string(), |b| {
                    b.to_string()
                });
            let inverses: Vec<RationalVector> = irreducible_decomposition(&i)?
                .components()
                .iter()
                .map(|q| RationalVector::inverse_of(q.alpha()))
                .collect();
            let text = format!(
                "I^n == I^(n) for n <= {bound}: {powers_equal}\n\
                 closure(I^n) == ∩ closure(q_i^n) for n <= {bound}: {split}\n\
                 NP(I) == IP(I): {}\n\
                 vertices of Q(I) are the inverted components: {}\n\
                 inverted components: {}\n",
                r.np_equals_ip,
                r.vertices_are_inverse_components,
                strings(&inverses).join(" ")
            );
            let json = json!({
                "max_n": bound,
                "powers_equal": powers_equal,
                "closure_intersection": r.closure_intersection,
                "np_equals_ip": r.np_equals_ip,
                "vertices_are_inverse_components": r.vertices_are_inverse_components,
            });
            Ok(Report::new(text, json))
        }
        Command::Examples => {
            let checks = fixture_checks();
            let mut text = String::new();
            for c in &checks {
                let tag = if c.passed { "PASS" } else { "FAIL" };
                let _ = write!(text, "[{tag}] {}: {}", c.fixture, c.assertion);
                if let Some(e) = &c.error {
                    let _ = write!(text, " ({e})");
                }
                text.push('\n');
            }
            let failed = checks.iter().filter(|c| !c.passed).count();
            let _ = writeln!(text, "{} checks, {failed} failed", checks.len());
            let json = json!({
                "checks": checks.iter().map(|c| json!({
                    "fixture": c.fixture,
                    "assertion": c.assertion,
                    "passed": c.passed,
                    "error": c.error,
                })).collect::<Vec<_>>(),
                "failed": failed,
            });
            Ok(Report {
                text,
                json,
                ok: failed == 0,
            })
        }
    }
}
