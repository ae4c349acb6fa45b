//! Integral closure of powers, normality, and the polyhedral criteria that
//! hold when ordinary and symbolic powers coincide.
//!
//! `t^a` lies in the closure of `I^n` exactly when `a/n ∈ NP(I)`, i.e. when
//! `a·u >= n` for every vertex `u` of `Q(I)`. Minimal generators of the
//! closure lie in the box `0 <= a_k <= n·max_i v_{i,k}`: a point above that
//! bound in some coordinate can drop one unit there and stay in `n·NP(I)`.

use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::decomposition::irreducible_decomposition;
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;
use crate::monomial::ExponentVector;
use crate::symbolic::symbolic_power_min;
use crate::wog::WeightedOrientedGraph;

use super::{
    covering_polyhedron, irreducible_polyhedron, newton_hrep, polyhedra_equal, PolyLimits,
    RationalVector,
};

pub const DEFAULT_MAX_BOX_POINTS: u64 = 20_000_000;

/// Vertices of `Q(I)` scaled to integers: `a·u >= n` iff `a·row >= n·scale`.
struct ScaledVertices {
    rows: Vec<(Vec<u64>, u64)>,
}

impl ScaledVertices {
    fn new(ideal: &MonomialIdeal, limits: &PolyLimits) -> Result<Self> {
        let vertices = covering_polyhedron(ideal)?.vertex_points(limits)?;
        let rows = vertices
            .iter()
            .map(|u| {
                let scale = u.denominator_lcm();
                let row = u
                    .coords()
                    .iter()
                    .map(|c| (c * &scale).to_integer().to_u64().ok_or(Error::Overflow))
                    .collect::<Result<Vec<_>>>()?;
                Ok((row, scale.to_u64().ok_or(Error::Overflow)?))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(ScaledVertices { rows })
    }

    fn contains(&self, a: &[u32], n: u32) -> bool {
        self.rows.iter().all(|(row, scale)| {
            let lhs: u128 = row
                .iter()
                .zip(a)
                .map(|(&r, &x)| r as u128 * x as u128)
                .sum();
            lhs >= n as u128 * *scale as u128
        })
    }
}

fn check_n(n: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::domain("the power must be at least 1"));
    }
    Ok(())
}

/// Minimal generators of the integral closure of `I^n`.
pub fn integral_closure_power(
    ideal: &MonomialIdeal,
    n: u32,
    limits: &PolyLimits,
) -> Result<MonomialIdeal> {
    check_n(n)?;
    let scaled = ScaledVertices::new(ideal, limits)?;
    let bounds = ideal
        .max_exponents()
        .iter()
        .map(|&m| m.checked_mul(n).ok_or(Error::Overflow))
        .collect::<Result<Vec<u32>>>()?;
    let size = bounds
        .iter()
        .try_fold(1u64, |acc, &b| acc.checked_mul(b as u64 + 1))
        .filter(|&size| size <= limits.max_box_points)
        .ok_or(Error::ResourceLimit {
            what: "closure scan box size",
            actual: bounds
                .iter()
                .fold(1usize, |acc, &b| acc.saturating_mul(b as usize + 1)),
            limit: limits.max_box_points as usize,
            flag: "--max-box",
        })?;
    let mut minimal: Vec<ExponentVector> = (0..size)
        .into_par_iter()
        .filter_map(|index| {
            let a = decode(index, &bounds);
            if !scaled.contains(&a, n) {
                return None;
            }
            let mut b = a.clone();
            for k in 0..a.len() {
                if a[k] > 0 {
                    b[k] -= 1;
                    let inside = scaled.contains(&b, n);
                    b[k] += 1;
                    if inside {
                        return None;
                    }
                }
            }
            Some(ExponentVector::new(a))
        })
        .collect();
    minimal.sort();
    MonomialIdeal::minimalize(minimal, ideal.nvars())
}

fn decode(mut index: u64, bounds: &[u32]) -> Vec<u32> {
    bounds
        .iter()
        .map(|&b| {
            let radix = b as u64 + 1;
            let digit = index % radix;
            index /= radix;
            digit as u32
        })
        .collect()
}

/// `t^a ∈ closure(I^n)`, decided by the vertex inequalities.
pub fn closure_contains(
    ideal: &MonomialIdeal,
    n: u32,
    a: &ExponentVector,
    limits: &PolyLimits,
) -> Result<bool> {
    check_n(n)?;
    if a.nvars() != ideal.nvars() {
        return Err(Error::Dimension {
            expected: ideal.nvars(),
            found: a.nvars(),
        });
    }
    Ok(ScaledVertices::new(ideal, limits)?.contains(a.coords(), n))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalityReport {
    /// `(n, I^n is integrally closed)` for each tested `n`.
    pub checked: Vec<(u32, bool)>,
    pub normal: bool,
}

/// Compares `I^n` with its integral closure for `n = 1..=max_n`.
pub fn is_normal_up_to(
    ideal: &MonomialIdeal,
    max_n: u32,
    limits: &PolyLimits,
) -> Result<NormalityReport> {
    check_n(max_n)?;
    let checked = (1..=max_n)
        .map(|n| {
            Ok((
                n,
                integral_closure_power(ideal, n, limits)? == ideal.power(n)?,
            ))
        })
        .collect::<Result<Vec<_>>>()?;
    let normal = checked.iter().all(|&(_, ok)| ok);
    Ok(NormalityReport { checked, normal })
}

/// Checks `closure(I^n) = ∩ closure(q_i^n)` for `n = 1..=max_n`. Requires the
/// irreducible components to have pairwise distinct radicals.
pub fn closure_intersection_check(
    ideal: &MonomialIdeal,
    max_n: u32,
    limits: &PolyLimits,
) -> Result<bool> {
    check_n(max_n)?;
    let dec = irreducible_decomposition(ideal)?;
    if !dec.is_minimal() {
        return Err(Error::NonMinimalDecomposition(dec.to_string()));
    }
    for n in 1..=max_n {
        let lhs = integral_closure_power(ideal, n, limits)?;
        let parts = dec
            .components()
            .iter()
            .map(|q| integral_closure_power(&q.to_ideal(), n, limits))
            .collect::<Result<Vec<_>>>()?;
        if lhs != MonomialIdeal::intersect_all(&parts)? {
            return Ok(false);
        }
    }
    Ok(true)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureCriteriaReport {
    /// Closure of powers splits over the components; `None` when the
    /// decomposition is not minimal.
    pub closure_intersection: Option<bool>,
    /// `NP(I) = IP(I)`.
    pub np_equals_ip: bool,
    /// The vertices of `Q(I)` are exactly the `α_i^{-1}`.
    pub vertices_are_inverse_components: bool,
    /// The caller's claim that `I^n = I^(n)` held up to the bound.
    pub powers_equal: bool,
}

impl ClosureCriteriaReport {
    pub fn all_hold(&self) -> bool {
        self.closure_intersection != Some(false)
            && self.np_equals_ip
            && self.vertices_are_inverse_components
    }
}

/// Evaluates the three consequences of `I^n = I^(n)` for all `n`. When the
/// caller reports that equality, any failed criterion is a consistency error.
pub fn closure_criteria_check(
    ideal: &MonomialIdeal,
    max_n: u32,
    powers_equal: bool,
    limits: &PolyLimits,
) -> Result<ClosureCriteriaReport> {
    let dec = irreducible_decomposition(ideal)?;
    let closure_intersection = match closure_intersection_check(ideal, max_n, limits) {
        Ok(v) => Some(v),
        Err(Error::NonMinimalDecomposition(_)) => None,
        Err(e) => return Err(e),
    };
    let ip = irreducible_polyhedron(&dec)?;
    let np = newton_hrep(ideal, limits)?;
    let np_equals_ip = polyhedra_equal(&np, &ip, limits)?;
    let mut inverses: Vec<RationalVector> = ip.columns().to_vec();
    inverses.sort();
    inverses.dedup();
    let vertices_are_inverse_components =
        covering_polyhedron(ideal)?.vertex_points(limits)? == inverses;
    let report = ClosureCriteriaReport {
        closure_intersection,
        np_equals_ip,
        vertices_are_inverse_components,
        powers_equal,
    };
    if powers_equal && !report.all_hold() {
        return Err(Error::Consistency(format!(
            "powers equal symbolic powers but a closure criterion failed: {report:?}"
        )));
    }
    Ok(report)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlexanderNormalityReport {
    /// `J^n = J^(n)` for `n = 1..=max_n`.
    pub powers_equal: bool,
    /// `J^n` integrally closed for `n = 1..=max_n`.
    pub normal: bool,
    pub np_equals_ip: bool,
    /// Both sides agree; `None` when they differ at the tested bound.
    pub holds: Option<bool>,
    pub caveat: Option<String>,
}

/// For the Alexander dual `J` of `I(D)`: `J^n = J^(n)` for all `n` iff `J` is
/// normal and `NP(J) = IP(J)`. Both sides are evaluated up to `max_n`; a
/// disagreement is reported as a finite-bound caveat.
pub fn alexander_normality_check(
    graph: &WeightedOrientedGraph,
    max_n: u32,
    limits: &PolyLimits,
) -> Result<AlexanderNormalityReport> {
    check_n(max_n)?;
    let (dec, j) = graph.alexander_dual()?;
    let mut powers_equal = true;
    for n in 1..=max_n {
        if symbolic_power_min(&j, n)? != j.power(n)? {
            powers_equal = false;
            break;
        }
    }
    let normal = is_normal_up_to(&j, max_n, limits)?.normal;
    let np_equals_ip = polyhedra_equal(
        &newton_hrep(&j, limits)?,
        &irreducible_polyhedron(&dec)?,
        limits,
    )?;
    let rhs = normal && np_equals_ip;
    let (holds, caveat) = if powers_equal == rhs {
        (Some(rhs), None)
    } else {
        (
            None,
            Some(format!(
                "sides differ up to n = {max_n}: powers equal is {powers_equal}, \
                 normal and NP = IP is {rhs}; normality is only checked to this bound"
            )),
        )
    };
    Ok(AlexanderNormalityReport {
        powers_equal,
        normal,
        np_equals_ip,
        holds,
        caveat,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ideal(text: &str) -> MonomialIdeal {
        text.parse().unwrap()
    }

    fn limits() -> PolyLimits {
        PolyLimits::default()
    }

    fn four_cycle() -> WeightedOrientedGraph {
        "vertices 4\nweights 1 2 1 2\nedge 1 2\nedge 3 2\nedge 3 4\nedge 1 4"
            .parse()
            .unwrap()
    }

    #[test]
    fn four_cycle_closure() {
        let i = four_cycle().edge_ideal();
        let c = integral_closure_power(&i, 1, &limits()).unwrap();
        let g = ExponentVector::from([1, 1, 0, 1]);
        assert!(c.contains_monomial(&g).unwrap());
        assert!(!i.contains_monomial(&g).unwrap());
        assert!(closure_contains(&i, 1, &g, &limits()).unwrap());
        assert!(!is_normal_up_to(&i, 1, &limits()).unwrap().normal);
    }

    #[test]
    fn normal_examples() {
        let i = ideal("t1, t2^2");
        for n in 1..=3 {
            assert_eq!(
                integral_closure_power(&i, n, &limits()).unwrap(),
                i.power(n).unwrap()
            );
        }
        assert!(is_normal_up_to(&i, 3, &limits()).unwrap().normal);
        let p = ideal("t1*t2^3*t3");
        assert_eq!(
            integral_closure_power(&p, 4, &limits()).unwrap(),
            p.power(4).unwrap()
        );
        let (_, j) = four_cycle().alexander_dual().unwrap();
        assert_eq!(j, ideal("t1*t3, t2^2*t4^2"));
        assert!(is_normal_up_to(&j, 3, &limits()).unwrap().normal);
    }

    #[test]
    fn closure_of_squares() {
        let c = integral_closure_power(&ideal("t1^2, t2^2"), 1, &limits()).unwrap();
        assert_eq!(c, ideal("t1^2, t1*t2, t2^2"));
    }

    #[test]
    fn intersection_checks() {
        let i = four_cycle().edge_ideal();
        assert!(closure_intersection_check(&i, 2, &limits()).unwrap());
        assert!(closure_intersection_check(&ideal("t1^2, t2"), 2, &limits()).unwrap());
        let m2 = ideal("t1^2, t1*t2, t2^2");
        assert!(matches!(
            closure_intersection_check(&m2, 1, &limits()),
            Err(Error::NonMinimalDecomposition(_))
        ));
    }

    #[test]
    fn criteria_on_four_cycle() {
        let i = four_cycle().edge_ideal();
        let r = closure_criteria_check(&i, 2, true, &limits()).unwrap();
        assert_eq!(r.closure_intersection, Some(true));
        assert!(r.np_equals_ip && r.vertices_are_inverse_components);

        let (_, j) = four_cycle().alexander_dual().unwrap();
        let r = closure_criteria_check(&j, 2, true, &limits()).unwrap();
        assert!(r.all_hold());
    }

    #[test]
    fn criteria_without_hypothesis() {
        let i = ideal("t1*t2^2, t2*t3, t1*t3");
        let r = closure_criteria_check(&i, 2, false, &limits()).unwrap();
        assert!(!r.powers_equal);
        assert!(r.closure_intersection.is_some());
    }

    #[test]
    fn alexander_duals() {
        let r = alexander_normality_check(&four_cycle(), 3, &limits()).unwrap();
        assert_eq!(r.holds, Some(true));
        let edge: WeightedOrientedGraph = "vertices 2\nweights 1 2\nedge 1 2".parse().unwrap();
        let r = alexander_normality_check(&edge, 3, &limits()).unwrap();
        assert_eq!(r.holds, Some(true));
    }

    #[test]
    fn box_limit() {
        let small = PolyLimits {
            max_box_points: 10,
            ..limits()
        };
        assert!(matches!(
            integral_closure_power(&ideal("t1^3, t2^3"), 2, &small),
            Err(Error::ResourceLimit {
                flag: "--max-box",
                ..
            })
        ));
    }
}
