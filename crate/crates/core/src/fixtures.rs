//! Small weighted oriented graphs with known decompositions, symbolic-power
//! witnesses and polyhedra, plus a self-check that recomputes every fact.

use crate::decomposition::{embedded_primes, irreducible_decomposition, IrreducibleDecomposition};
use crate::error::Result;
use crate::ideal::{IrreducibleIdeal, MonomialIdeal, MonomialPrime};
use crate::monomial::ExponentVector;
use crate::polyhedra::{
    alexander_normality_check, closure_contains, closure_criteria_check, covering_polyhedron,
    irreducible_polyhedron, is_normal_up_to, newton_hrep, parse_normaliz, polyhedra_equal,
    PolyLimits,
};
use crate::symbolic::{
    compare_powers, localize, symbolic_power_ass, symbolic_power_min, SymbolicPowerReport,
};
use crate::wog::{VertexSet, WeightedOrientedGraph};

fn graph(n: usize, edges: &[(usize, usize)], weights: &[u32]) -> WeightedOrientedGraph {
    WeightedOrientedGraph::new(n, edges.to_vec(), weights.to_vec()).expect("fixture graph is valid")
}

/// Bipartite 4-cycle whose heavy vertices `t2, t4` are sinks.
pub fn four_cycle() -> WeightedOrientedGraph {
    graph(4, &[(1, 2), (3, 2), (3, 4), (1, 4)], &[1, 2, 1, 2])
}

/// Directed triangle with every weight 2; the maximal ideal is associated.
pub fn heavy_triangle() -> WeightedOrientedGraph {
    graph(3, &[(1, 2), (2, 3), (3, 1)], &[2, 2, 2])
}

/// Triangle whose only heavy vertex `t2` has an outgoing edge.
pub fn nonsink_triangle() -> WeightedOrientedGraph {
    graph(3, &[(1, 2), (2, 3), (1, 3)], &[1, 2, 1])
}

/// Triangle whose only heavy vertex `t1` is a sink.
pub fn sink_triangle() -> WeightedOrientedGraph {
    graph(3, &[(2, 1), (3, 1), (2, 3)], &[2, 1, 1])
}

/// Directed path `1 -> 2 -> 3` with `w2 = 2`.
pub fn star() -> WeightedOrientedGraph {
    graph(3, &[(1, 2), (2, 3)], &[1, 2, 1])
}

/// Directed 7-cycle with unit weights: triangle-free, odd girth 7.
pub fn heptagon() -> WeightedOrientedGraph {
    let edges: Vec<_> = (1..=7).map(|i| (i, i % 7 + 1)).collect();
    graph(7, &edges, &[1; 7])
}

/// Normaliz input describing `Q(I)` for the four-cycle edge ideal.
pub const FOUR_CYCLE_NORMALIZ: &str = "amb_space 4
constraints 8
0 1 0 0 >= 0
1 0 0 0 >= 0
0 0 1 0 >= 0
0 0 0 1 >= 0
1 2 0 0 >= 1
0 2 1 0 >= 1
0 0 1 2 >= 1
1 0 0 2 >= 1
SupportHyperplanes
ExtremeRays
VerticesOfPolyhedron
";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixtureCheck {
    pub fixture: &'static str,
    pub assertion: String,
    pub passed: bool,
    /// Error text when the computation itself failed.
    pub error: Option<String>,
}

struct Checks {
    fixture: &'static str,
    out: Vec<FixtureCheck>,
}

impl Checks {
    fn check(&mut self, assertion: impl Into<String>, f: impl FnOnce() -> Result<bool>) {
        let (passed, error) = match f() {
            Ok(p) => (p, None),
            Err(e) => (false, Some(e.to_string())),
        };
        self.out.push(FixtureCheck {
            fixture: self.fixture,
            assertion: assertion.into(),
            passed,
            error,
        });
    }
}

fn ideal(text: &str, n: usize) -> Result<MonomialIdeal> {
    MonomialIdeal::parse_with_vars(text, n)
}

fn decomposition(parts: &[&str], n: usize) -> Result<IrreducibleDecomposition> {
    let comps = parts
        .iter()
        .map(|p| IrreducibleIdeal::from_ideal(&ideal(p, n)?))
        .collect::<Result<Vec<_>>>()?;
    IrreducibleDecomposition::from_components(n, comps)
}

fn in_symbolic_not_power(i: &MonomialIdeal, f: &[u32]) -> Result<bool> {
    let f = ExponentVector::new(f.to_vec());
    Ok(symbolic_power_min(i, 2)?.contains_monomial(&f)? && !i.power(2)?.contains_monomial(&f)?)
}

fn shown_vertices(i: &MonomialIdeal, limits: &PolyLimits) -> Result<Vec<String>> {
    Ok(covering_polyhedron(i)?
        .vertex_points(limits)?
        .iter()
        .map(ToString::to_string)
        .collect())
}

fn set(v: &[usize]) -> VertexSet {
    v.iter().copied().collect()
}

fn all_equal(report: &SymbolicPowerReport) -> bool {
    report.equal_min && report.equal_ass
}

/// Recomputes every fixture fact; one entry per assertion.
pub fn fixture_checks() -> Vec<FixtureCheck> {
    let limits = PolyLimits::default();
    let mut all = Vec::new();

    let mut c = Checks {
        fixture: "four-cycle",
        out: Vec::new(),
    };
    let d = four_cycle();
    let i = d.edge_ideal();
    c.check("edge ideal is (t1*t2^2, t3*t2^2, t3*t4^2, t1*t4^2)", || {
        Ok(i == ideal("t1*t2^2, t3*t2^2, t3*t4^2, t1*t4^2", 4)?)
    });
    c.check("decomposition is (t1, t3) ∩ (t2^2, t4^2)", || {
        Ok(irreducible_decomposition(&i)? == decomposition(&["t1, t3", "t2^2, t4^2"], 4)?)
    });
    c.check("I^n = I^<n> = I^(n) for n = 1..4", || {
        for n in 1..=4 {
            if !all_equal(&compare_powers(&i, n)?) {
                return Ok(false);
            }
        }
        Ok(true)
    });
    c.check(
        "t1*t2*t4 is in the integral closure of I but not in I",
        || {
            let g = ExponentVector::from([1, 1, 0, 1]);
            Ok(closure_contains(&i, 1, &g, &limits)? && !i.contains_monomial(&g)?)
        },
    );
    c.check("Q(I) has vertices (0,1/2,0,1/2) and (1,0,1,0)", || {
        Ok(shown_vertices(&i, &limits)? == ["(0,1/2,0,1/2)", "(1,0,1,0)"])
    });
    c.check(
        "heavy vertices {2, 4} are sinks; bipartite without triangles",
        || {
            let roles = d.vertex_roles();
            let props = d.underlying_props();
            Ok(roles.vplus == set(&[2, 4])
                && roles.all_vplus_sinks
                && props.is_bipartite
                && !props.has_triangle)
        },
    );
    c.check(
        "classification: square, all powers and normally torsion-free",
        || {
            let k = d.classify()?;
            Ok(k.square && k.all_powers && k.ntf == Some(true))
        },
    );
    c.check("no heavy non-sink witness", || {
        Ok(d.non_sink_witness().is_none())
    });
    c.check("maximal ideal is not associated", || {
        Ok(!d.irrelevant_in_ass()?)
    });
    let dual = d.alexander_dual();
    c.check("J(D) = (t1*t3, t2^2*t4^2) with four components", || {
        let (dec, j) = dual.clone()?;
        let expected = decomposition(&["t1, t2^2", "t3, t2^2", "t3, t4^2", "t1, t4^2"], 4)?;
        Ok(j == ideal("t1*t3, t2^2*t4^2", 4)?
            && dec == expected
            && irreducible_decomposition(&j)? == expected)
    });
    c.check("J(D) is normal up to n = 3", || {
        Ok(is_normal_up_to(&dual.clone()?.1, 3, &limits)?.normal)
    });
    c.check("NP(J) = IP(J)", || {
        let (dec, j) = dual.clone()?;
        polyhedra_equal(
            &newton_hrep(&j, &limits)?,
            &irreducible_polyhedron(&dec)?,
            &limits,
        )
    });
    c.check(
        "Q(J) has vertices (1,1/2,0,0), (0,1/2,1,0), (0,0,1,1/2), (1,0,0,1/2)",
        || {
            let mut got = shown_vertices(&dual.clone()?.1, &limits)?;
            got.sort();
            let mut want = vec!["(1,1/2,0,0)", "(0,1/2,1,0)", "(0,0,1,1/2)", "(1,0,0,1/2)"];
            want.sort();
            Ok(got == want)
        },
    );
    c.check("closure criteria hold for I: closure splits (n <= 2), NP = IP, vertices are inverse components", || {
        let r = closure_criteria_check(&i, 2, true, &limits)?;
        Ok(r.closure_intersection == Some(true) && r.np_equals_ip && r.vertices_are_inverse_components)
    });
    c.check("closure criteria hold for J: closure splits (n <= 2), NP = IP, vertices are inverse components", || {
        let r = closure_criteria_check(&dual.clone()?.1, 2, true, &limits)?;
        Ok(r.closure_intersection == Some(true) && r.np_equals_ip && r.vertices_are_inverse_components)
    });
    c.check(
        "J^n = J^(n) agrees with normality and NP = IP up to n = 3",
        || Ok(alexander_normality_check(&d, 3, &limits)?.holds == Some(true)),
    );
    c.check("Normaliz block reproduces the vertices of Q(I)", || {
        let (p, _) = parse_normaliz(FOUR_CYCLE_NORMALIZ)?;
        Ok(p.vertex_points(&limits)? == covering_polyhedron(&i)?.vertex_points(&limits)?)
    });
    all.extend(c.out);

    let mut c = Checks {
        fixture: "heavy-triangle",
        out: Vec::new(),
    };
    let d = heavy_triangle();
    let i = d.edge_ideal();
    c.check("edge ideal is (t1*t2^2, t2*t3^2, t3*t1^2)", || {
        Ok(i == ideal("t1*t2^2, t2*t3^2, t3*t1^2", 3)?)
    });
    c.check(
        "decomposition is (t1^2, t2) ∩ (t1, t3^2) ∩ (t2^2, t3) ∩ (t1^2, t2^2, t3^2)",
        || {
            let want = decomposition(&["t1^2, t2", "t1, t3^2", "t2^2, t3", "t1^2, t2^2, t3^2"], 3)?;
            Ok(irreducible_decomposition(&i)? == want)
        },
    );
    c.check("maximal ideal is associated by all three criteria", || {
        let r = d.irrelevant_prime_report()?;
        Ok(r.via_ass && r.via_strong_cover && r.via_out_neighbourhood)
    });
    c.check(
        "V(D) is a strong cover with ideal (t1^2, t2^2, t3^2)",
        || {
            let all = set(&[1, 2, 3]);
            Ok(
                d.is_strong_cover(&all)?
                    && d.cover_ideal(&all)?.to_string() == "(t1^2, t2^2, t3^2)",
            )
        },
    );
    c.check("I^(1) != I", || Ok(symbolic_power_min(&i, 1)? != i));
    c.check("I^<n> = I^n for n = 1..3", || {
        for n in 1..=3 {
            if symbolic_power_ass(&i, n)? != i.power(n)? {
                return Ok(false);
            }
        }
        Ok(true)
    });
    c.check("I^(2)/I^2 has minimal generators", || {
        Ok(!compare_powers(&i, 2)?.witnesses.is_empty())
    });
    c.check("localizing at (t2, t3) commutes with squaring", || {
        let p = MonomialPrime::from_support(3, [2, 3]);
        Ok(localize(&i, &p)?.power(2)? == localize(&i.power(2)?, &p)?)
    });
    all.extend(c.out);

    let mut c = Checks {
        fixture: "nonsink-triangle",
        out: Vec::new(),
    };
    let d = nonsink_triangle();
    let i = d.edge_ideal();
    c.check(
        "decomposition is (t1, t2) ∩ (t1, t3) ∩ (t2^2, t3)",
        || {
            Ok(irreducible_decomposition(&i)?
                == decomposition(&["t1, t2", "t1, t3", "t2^2, t3"], 3)?)
        },
    );
    c.check("t1*t2^2*t3 is in I^(2) but not in I^2", || {
        in_symbolic_not_power(&i, &[1, 2, 1])
    });
    c.check("square fails because heavy vertex t2 is not a sink", || {
        let k = d.classify()?;
        Ok(!k.square && !k.all_vplus_sinks && d.vertex_roles().vplus == set(&[2]))
    });
    c.check("non-sink witness is t1*t2^2*t3", || {
        Ok(d.non_sink_witness() == Some(ExponentVector::from([1, 2, 1])))
    });
    c.check("cover {2, 3} has L2 = {2, 3} and ideal (t2^2, t3)", || {
        let c = set(&[2, 3]);
        let part = d.cover_partition(&c)?;
        Ok(part.l1.is_empty()
            && part.l3.is_empty()
            && part.l2 == c
            && d.cover_ideal(&c)?.to_string() == "(t2^2, t3)")
    });
    c.check("V(D) is not a strong cover", || {
        Ok(!d.is_strong_cover(&set(&[1, 2, 3]))?)
    });
    all.extend(c.out);

    let mut c = Checks {
        fixture: "sink-triangle",
        out: Vec::new(),
    };
    let d = sink_triangle();
    let i = d.edge_ideal();
    c.check("edge ideal is (t3*t1^2, t2*t1^2, t2*t3)", || {
        Ok(i == ideal("t3*t1^2, t2*t1^2, t2*t3", 3)?)
    });
    c.check(
        "decomposition is (t1^2, t2) ∩ (t1^2, t3) ∩ (t2, t3)",
        || {
            Ok(irreducible_decomposition(&i)?
                == decomposition(&["t1^2, t2", "t1^2, t3", "t2, t3"], 3)?)
        },
    );
    c.check("t1^2*t2*t3 is in I^(2) but not in I^2", || {
        in_symbolic_not_power(&i, &[2, 1, 1])
    });
    c.check(
        "heavy vertex t1 is a sink, yet the triangle breaks the square",
        || {
            let k = d.classify()?;
            Ok(d.vertex_roles().vplus == set(&[1])
                && k.all_vplus_sinks
                && k.has_triangle
                && !k.square)
        },
    );
    c.check("no embedded primes", || Ok(embedded_primes(&i)?.is_empty()));
    all.extend(c.out);

    let mut c = Checks {
        fixture: "star",
        out: Vec::new(),
    };
    let d = star();
    let i = d.edge_ideal();
    c.check("decomposition is (t2) ∩ (t2^2, t3) ∩ (t1, t3)", || {
        Ok(irreducible_decomposition(&i)? == decomposition(&["t2", "t2^2, t3", "t1, t3"], 3)?)
    });
    c.check("localization at (t2, t3) is (t2^2, t2*t3)", || {
        Ok(localize(&i, &MonomialPrime::from_support(3, [2, 3]))? == ideal("t2^2, t2*t3", 3)?)
    });
    c.check("localization at (t1, t3) is (t1, t3)", || {
        Ok(localize(&i, &MonomialPrime::from_support(3, [1, 3]))? == ideal("t1, t3", 3)?)
    });
    c.check("t1*t2^2*t3 is in I^(2) but not in I^2", || {
        in_symbolic_not_power(&i, &[1, 2, 1])
    });
    c.check(
        "I^<n> = (t2^2, t2*t3)^n ∩ (t1, t3)^n = I^n for n = 1..3",
        || {
            let a = ideal("t2^2, t2*t3", 3)?;
            let b = ideal("t1, t3", 3)?;
            for n in 1..=3 {
                let sym = symbolic_power_ass(&i, n)?;
                if sym != a.power(n)?.intersect(&b.power(n)?)? || sym != i.power(n)? {
                    return Ok(false);
                }
            }
            Ok(true)
        },
    );
    all.extend(c.out);

    let mut c = Checks {
        fixture: "heptagon",
        out: Vec::new(),
    };
    let d = heptagon();
    let i = d.edge_ideal();
    c.check("odd girth 7, no triangle, not bipartite", || {
        let p = d.underlying_props();
        Ok(p.odd_girth == Some(7) && !p.has_triangle && !p.is_bipartite)
    });
    c.check("I^n = I^(n) for n = 1..3 and first fails at n = 4", || {
        for n in 1..=3 {
            if !compare_powers(&i, n)?.equal_min {
                return Ok(false);
            }
        }
        Ok(!compare_powers(&i, 4)?.equal_min)
    });
    all.extend(c.out);

    all
}
