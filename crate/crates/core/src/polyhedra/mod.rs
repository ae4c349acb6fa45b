//! Covering-form polyhedra `{x >= 0, x·c_j >= 1}` with exact rational data.
//!
//! The covering polyhedron `Q(I)` uses the minimal generators of `I` as the
//! columns `c_j`. The Newton polyhedron is `Q` of the vertices of `Q(I)`, and
//! the irreducible polyhedron is `Q` of the inverted component exponents.
//! All three share the recession cone `R_+^s`, so two of them are equal
//! exactly when their vertex sets are.

mod closure;
mod linalg;
mod normaliz;

use std::collections::BTreeMap;
use std::fmt;

use itertools::Itertools;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;

use crate::decomposition::IrreducibleDecomposition;
use crate::error::{Error, Result};
use crate::ideal::{IrreducibleIdeal, MonomialIdeal};
use crate::monomial::ExponentVector;

pub use closure::{
    alexander_normality_check, closure_contains, closure_criteria_check,
    closure_intersection_check, integral_closure_power, is_normal_up_to, AlexanderNormalityReport,
    ClosureCriteriaReport, NormalityReport, DEFAULT_MAX_BOX_POINTS,
};
pub use normaliz::{parse_normaliz, to_normaliz};

/// A point with reduced rational coordinates. Ordered lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RationalVector(Vec<BigRational>);

impl RationalVector {
    pub fn new(coords: Vec<BigRational>) -> Self {
        RationalVector(coords)
    }

    pub fn from_integers(coords: &[i64]) -> Self {
        RationalVector(
            coords
                .iter()
                .map(|&c| BigRational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn coords(&self) -> &[BigRational] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn dot(&self, other: &RationalVector) -> BigRational {
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|c| !c.is_negative())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    /// Least common multiple of the denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        self.0
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    /// `b^{-1}`: `1/b_i` where `b_i >= 1`, zero elsewhere.
    pub fn inverse_of(b: &ExponentVector) -> Self {
        RationalVector(
            b.coords()
                .iter()
                .map(|&e| {
                    if e == 0 {
                        BigRational::zero()
                    } else {
                        BigRational::new(BigInt::one(), e.into())
                    }
                })
                .collect(),
        )
    }

    /// Parses `(1,0,1/2)` or whitespace-separated entries.
    pub fn parse(text: &str) -> std::result::Result<Self, String> {
        let inner = text.trim();
        let inner = inner
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(inner);
        inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(parse_rational)
            .collect::<std::result::Result<Vec<_>, _>>()
            .map(RationalVector)
    }
}

pub(crate) fn parse_rational(text: &str) -> std::result::Result<BigRational, String> {
    let bad = || format!("bad rational number '{text}'");
    match text.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(format!("zero denominator in '{text}'"));
            }
            Ok(BigRational::new(p, q))
        }
        None => text
            .trim()
            .parse::<BigInt>()
            .map(BigRational::from_integer)
            .map_err(|_| bad()),
    }
}

impl From<&ExponentVector> for RationalVector {
    fn from(v: &ExponentVector) -> Self {
        RationalVector(
            v.coords()
                .iter()
                .map(|&e| BigRational::from_integer(e.into()))
                .collect(),
        )
    }
}

impl fmt::Display for RationalVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().join(","))
    }
}

/// Limits on the exhaustive basis search and the integral-closure box scan.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PolyLimits {
    pub max_dim: usize,
    /// Bound on `s + m`, the number of constraint rows.
    pub max_constraints: usize,
    pub max_box_points: u64,
}

impl Default for PolyLimits {
    fn default() -> Self {
        PolyLimits {
            max_dim: 8,
            max_constraints: 24,
            max_box_points: DEFAULT_MAX_BOX_POINTS,
        }
    }
}

/// A vertex with the indices of `s` linearly independent tight rows.
/// Rows `0..s` are `x_i >= 0`; row `s + j` is `x·c_j >= 1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vertex {
    pub point: RationalVector,
    pub basis: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoveringFormPolyhedron {
    nvars: usize,
    columns: Vec<RationalVector>,
}

impl CoveringFormPolyhedron {
    /// Columns must be nonnegative, nonzero and of length `nvars`.
    pub fn new(nvars: usize, columns: Vec<RationalVector>) -> Result<Self> {
        if nvars == 0 {
            return Err(Error::domain("a polyhedron needs at least one variable"));
        }
        if columns.is_empty() {
            return Err(Error::domain(
                "a covering polyhedron needs at least one column",
            ));
        }
        for c in &columns {
            if c.dim() != nvars {
                return Err(Error::Dimension {
                    expected: nvars,
                    found: c.dim(),
                });
            }
            if !c.is_nonnegative() {
                return Err(Error::domain(format!("column {c} has a negative entry")));
            }
            if c.is_zero() {
                return Err(Error::domain("a zero column makes the polyhedron empty"));
            }
        }
        Ok(CoveringFormPolyhedron { nvars, columns })
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn columns(&self) -> &[RationalVector] {
        &self.columns
    }

    pub fn contains(&self, x: &RationalVector) -> Result<bool> {
        self.check_dim(x.dim())?;
        let one = BigRational::one();
        Ok(x.is_nonnegative() && self.columns.iter().all(|c| x.dot(c) >= one))
    }

    fn check_dim(&self, found: usize) -> Result<()> {
        if found != self.nvars {
            return Err(Error::Dimension {
                expected: self.nvars,
                found,
            });
        }
        Ok(())
    }

    fn row(&self, r: usize) -> (RationalVector, BigRational) {
        if r < self.nvars {
            let mut e = vec![BigRational::zero(); self.nvars];
            e[r] = BigRational::one();
            (RationalVector(e), BigRational::zero())
        } else {
            (self.columns[r - self.nvars].clone(), BigRational::one())
        }
    }

    /// Checks feasibility, tightness of the basis rows, and their independence.
    pub fn verify_vertex(&self, v: &Vertex) -> Result<bool> {
        if !self.contains(&v.point)? || v.basis.len() != self.nvars {
            return Ok(false);
        }
        let mut rows = Vec::with_capacity(self.nvars);
        for &r in &v.basis {
            if r >= self.nvars + self.columns.len() {
                return Ok(false);
            }
            let (a, b) = self.row(r);
            if v.point.dot(&a) != b {
                return Ok(false);
            }
            rows.push(a.0);
        }
        Ok(linalg::rank(rows) == self.nvars)
    }

    /// Every basic feasible solution, sorted by point, each with the
    /// lexicographically least basis that produces it.
    pub fn vertices(&self, limits: &PolyLimits) -> Result<Vec<Vertex>> {
        let s = self.nvars;
        let m = self.columns.len();
        if s > limits.max_dim {
            return Err(Error::ResourceLimit {
                what: "polyhedron dimension",
                actual: s,
                limit: limits.max_dim,
                flag: "--max-vars",
            });
        }
        if s + m > limits.max_constraints {
            return Err(Error::ResourceLimit {
                what: "constraint count",
                actual: s + m,
                limit: limits.max_constraints,
                flag: "--max-constraints",
            });
        }
        // Choosing which coordinates are zero fixes the unit rows of the
        // basis; the remaining k = s - |Z| rows come from the columns.
        let found: Vec<(RationalVector, Vec<usize>)> = (0u64..(1u64 << s))
            .into_par_iter()
            .flat_map_iter(|zero_mask| {
                let free: Vec<usize> = (0..s).filter(|i| zero_mask & (1 << i) == 0).collect();
                let zeros: Vec<usize> = (0..s).filter(|i| zero_mask & (1 << i) != 0).collect();
                let k = free.len();
                let mut out = Vec::new();
                if k == 0 || k > m {
                    return out;
                }
                for cols in (0..m).combinations(k) {
                    let matrix: Vec<Vec<BigRational>> = cols
                        .iter()
                        .map(|&j| free.iter().map(|&i| self.columns[j].0[i].clone()).collect())
                        .collect();
                    let Some(sol) = linalg::solve(matrix, vec![BigRational::one(); k]) else {
                        continue;
                    };
                    let mut x = vec![BigRational::zero(); s];
                    for (&i, v) in free.iter().zip(sol) {
                        x[i] = v;
                    }
                    let x = RationalVector(x);
                    if self.contains(&x).unwrap_or(false) {
                        let mut basis = zeros.clone();
                        basis.extend(cols.iter().map(|j| s + j));
                        basis.sort_unstable();
                        out.push((x, basis));
                    }
                }
                out
            })
            .collect();
        let mut best: BTreeMap<RationalVector, Vec<usize>> = BTreeMap::new();
        for (x, basis) in found {
            best.entry(x)
                .and_modify(|b| {
                    if basis < *b {
                        *b = basis.clone();
                    }
                })
                .or_insert(basis);
        }
        Ok(best
            .into_iter()
            .map(|(point, basis)| Vertex { point, basis })
            .collect())
    }

    pub fn vertex_points(&self, limits: &PolyLimits) -> Result<Vec<RationalVector>> {
        Ok(self
            .vertices(limits)?
            .into_iter()
            .map(|v| v.point)
            .collect())
    }
}

/// Vertex points of a covering-form polyhedron, sorted lexicographically.
pub fn enumerate_vertices(
    p: &CoveringFormPolyhedron,
    limits: &PolyLimits,
) -> Result<Vec<RationalVector>> {
    p.vertex_points(limits)
}

/// `Q(I)`, with the minimal generators of `I` as columns.
pub fn covering_polyhedron(ideal: &MonomialIdeal) -> Result<CoveringFormPolyhedron> {
    ideal.require_proper_nonzero()?;
    CoveringFormPolyhedron::new(
        ideal.nvars(),
        ideal.gens().iter().map(RationalVector::from).collect(),
    )
}

/// `NP(I) = Q(B̄)` where the columns of `B̄` are the vertices of `Q(I)`.
pub fn newton_hrep(ideal: &MonomialIdeal, limits: &PolyLimits) -> Result<CoveringFormPolyhedron> {
    let q = covering_polyhedron(ideal)?;
    CoveringFormPolyhedron::new(ideal.nvars(), q.vertex_points(limits)?)
}

pub fn newton_contains(
    ideal: &MonomialIdeal,
    x: &RationalVector,
    limits: &PolyLimits,
) -> Result<bool> {
    newton_hrep(ideal, limits)?.contains(x)
}

/// Minimal generators that are vertices of `NP(I)`: those outside the
/// Newton polyhedron of the other generators.
pub fn newton_vertices(ideal: &MonomialIdeal, limits: &PolyLimits) -> Result<Vec<ExponentVector>> {
    ideal.require_proper_nonzero()?;
    let gens = ideal.gens();
    if gens.len() == 1 {
        return Ok(gens.to_vec());
    }
    let mut out = Vec::new();
    for (i, g) in gens.iter().enumerate() {
        let rest: Vec<ExponentVector> = gens
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, h)| h.clone())
            .collect();
        let rest = MonomialIdeal::minimalize(rest, ideal.nvars())?;
        if !newton_contains(&rest, &RationalVector::from(g), limits)? {
            out.push(g.clone());
        }
    }
    Ok(out)
}

/// `IP(I)`, with columns `α_i^{-1}` for the components `q_{α_i}`.
pub fn irreducible_polyhedron(dec: &IrreducibleDecomposition) -> Result<CoveringFormPolyhedron> {
    if dec.is_empty() {
        return Err(Error::domain("empty decomposition"));
    }
    CoveringFormPolyhedron::new(
        dec.nvars(),
        dec.components()
            .iter()
            .map(|q: &IrreducibleIdeal| RationalVector::inverse_of(q.alpha()))
            .collect(),
    )
}

pub fn polyhedra_equal(
    p: &CoveringFormPolyhedron,
    q: &CoveringFormPolyhedron,
    limits: &PolyLimits,
) -> Result<bool> {
    p.check_dim(q.nvars())?;
    Ok(p.vertex_points(limits)? == q.vertex_points(limits)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::irreducible_decomposition;

    fn ideal(text: &str) -> MonomialIdeal {
        text.parse().unwrap()
    }

    fn rv(text: &str) -> RationalVector {
        RationalVector::parse(text).unwrap()
    }

    fn cols(rows: &[&str]) -> Vec<RationalVector> {
        rows.iter().map(|r| rv(r)).collect()
    }

    fn shown(points: &[RationalVector]) -> Vec<String> {
        points.iter().map(ToString::to_string).collect()
    }

    const LIMITS: PolyLimits = PolyLimits {
        max_dim: 8,
        max_constraints: 24,
        max_box_points: DEFAULT_MAX_BOX_POINTS,
    };

    #[test]
    fn rational_vectors() {
        let v = rv("(0, 2/4, 3, -1/3)");
        assert_eq!(v.to_string(), "(0,1/2,3,-1/3)");
        assert_eq!(v.denominator_lcm(), BigInt::from(6));
        assert_eq!(rv("1 1/2"), rv("(1,1/2)"));
        assert!(RationalVector::parse("(1/0)").is_err());
        let inv = RationalVector::inverse_of(&ExponentVector::from([2, 0, 1]));
        assert_eq!(inv.to_string(), "(1/2,0,1)");
    }

    #[test]
    fn four_cycle_vertices() {
        let p = CoveringFormPolyhedron::new(
            4,
            cols(&["(1,2,0,0)", "(0,2,1,0)", "(0,0,1,2)", "(1,0,0,2)"]),
        )
        .unwrap();
        let vs = p.vertices(&LIMITS).unwrap();
        let points: Vec<_> = vs.iter().map(|v| v.point.clone()).collect();
        assert_eq!(shown(&points), ["(0,1/2,0,1/2)", "(1,0,1,0)"]);
        for v in &vs {
            assert!(p.verify_vertex(v).unwrap());
        }
    }

    #[test]
    fn four_cycle_dual_vertices() {
        let p = CoveringFormPolyhedron::new(4, cols(&["(1,0,1,0)", "(0,2,0,2)"])).unwrap();
        assert_eq!(
            shown(&enumerate_vertices(&p, &LIMITS).unwrap()),
            ["(0,0,1,1/2)", "(0,1/2,1,0)", "(1,0,0,1/2)", "(1,1/2,0,0)"]
        );
    }

    #[test]
    fn small_polyhedra() {
        let p = CoveringFormPolyhedron::new(1, cols(&["(1)"])).unwrap();
        assert_eq!(shown(&enumerate_vertices(&p, &LIMITS).unwrap()), ["(1)"]);
        let q = covering_polyhedron(&ideal("t1, t2^2")).unwrap();
        assert_eq!(
            shown(&enumerate_vertices(&q, &LIMITS).unwrap()),
            ["(1,1/2)"]
        );
        let q = covering_polyhedron(&ideal("t1")).unwrap();
        assert_eq!(shown(&enumerate_vertices(&q, &LIMITS).unwrap()), ["(1)"]);
    }

    #[test]
    fn rejects_non_covering_input() {
        assert!(CoveringFormPolyhedron::new(2, vec![]).is_err());
        assert!(CoveringFormPolyhedron::new(2, cols(&["(1,-1)"])).is_err());
        assert!(CoveringFormPolyhedron::new(2, cols(&["(0,0)"])).is_err());
        assert!(CoveringFormPolyhedron::new(2, cols(&["(1,0,0)"])).is_err());
        assert!(covering_polyhedron(&MonomialIdeal::unit(2)).is_err());
        assert!(covering_polyhedron(&MonomialIdeal::zero(2)).is_err());
    }

    #[test]
    fn limits_are_enforced() {
        let q = covering_polyhedron(&ideal("t1*t2, t2*t3, t3*t4")).unwrap();
        let tight = PolyLimits {
            max_dim: 3,
            ..LIMITS
        };
        assert!(matches!(
            q.vertices(&tight),
            Err(Error::ResourceLimit {
                flag: "--max-vars",
                ..
            })
        ));
        let tight = PolyLimits {
            max_constraints: 6,
            ..LIMITS
        };
        assert!(matches!(
            q.vertices(&tight),
            Err(Error::ResourceLimit {
                flag: "--max-constraints",
                ..
            })
        ));
    }

    #[test]
    fn newton_polyhedron() {
        let i = ideal("t1*t2^2, t3*t2^2, t3*t4^2, t1*t4^2");
        let np = newton_hrep(&i, &LIMITS).unwrap();
        assert_eq!(shown(np.columns()), ["(0,1/2,0,1/2)", "(1,0,1,0)"]);
        assert!(newton_contains(&i, &rv("(1,1,0,1)"), &LIMITS).unwrap());
        assert!(!newton_contains(&i, &rv("(1,1,0,0)"), &LIMITS).unwrap());
        let np = newton_hrep(&ideal("t1"), &LIMITS).unwrap();
        assert_eq!(shown(np.columns()), ["(1)"]);
    }

    #[test]
    fn newton_vertex_selection() {
        let i = ideal("t1^2, t1*t2, t2^2");
        assert_eq!(
            newton_vertices(&i, &LIMITS).unwrap(),
            vec![ExponentVector::from([2, 0]), ExponentVector::from([0, 2])]
        );
        let i = ideal("t1*t2^2, t3*t2^2, t3*t4^2, t1*t4^2");
        assert_eq!(newton_vertices(&i, &LIMITS).unwrap().len(), 4);
    }

    #[test]
    fn irreducible_polyhedra() {
        let i = ideal("t1*t2^2, t3*t2^2, t3*t4^2, t1*t4^2");
        let dec = irreducible_decomposition(&i).unwrap();
        let ip = irreducible_polyhedron(&dec).unwrap();
        assert_eq!(shown(ip.columns()), ["(1,0,1,0)", "(0,1/2,0,1/2)"]);
        let np = newton_hrep(&i, &LIMITS).unwrap();
        assert!(polyhedra_equal(&np, &ip, &LIMITS).unwrap());
        assert!(polyhedra_equal(&np, &np, &LIMITS).unwrap());

        let heavy = ideal("t1*t2^2, t2*t3^2, t3*t1^2");
        let ip = irreducible_polyhedron(&irreducible_decomposition(&heavy).unwrap()).unwrap();
        assert_eq!(ip.columns().len(), 4);
        assert!(ip.columns().contains(&rv("(1/2,1/2,1/2)")));

        let sq = ideal("t1*t2, t2*t3");
        let ip = irreducible_polyhedron(&irreducible_decomposition(&sq).unwrap()).unwrap();
        assert_eq!(shown(ip.columns()), ["(0,1,0)", "(1,0,1)"]);
    }

    #[test]
    fn equality_needs_matching_dimension() {
        let p = covering_polyhedron(&ideal("t1")).unwrap();
        let q = covering_polyhedron(&ideal("t1*t2")).unwrap();
        assert!(polyhedra_equal(&p, &q, &LIMITS).is_err());
    }
}
