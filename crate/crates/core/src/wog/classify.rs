//! Graph-level criteria for `I(D)^n = I(D)^(n)` and for the irrelevant
//! maximal ideal being associated to `I(D)`.
//!
//! Every predicate here works on the normalized graph, since source weights
//! change `V^+(D)` without changing the edge ideal.

use crate::decomposition::{associated_primes, embedded_primes};
use crate::error::{Error, Result};
use crate::ideal::MonomialPrime;
use crate::monomial::ExponentVector;

use super::{VertexSet, WeightedOrientedGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IrrelevantPrimeReport {
    /// The maximal ideal is an associated prime of `I(D)`.
    pub via_ass: bool,
    /// `V(D)` is a strong vertex cover.
    pub via_strong_cover: bool,
    /// Every vertex is an out-neighbour of some vertex of weight at least 2.
    pub via_out_neighbourhood: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Classification {
    /// `I^2 = I^(2)`: every vertex of `V^+` is a sink and there is no triangle.
    pub square: bool,
    /// `I^n = I^(n)` for all `n`: every vertex of `V^+` is a sink and the
    /// underlying graph is bipartite.
    pub all_powers: bool,
    /// Normally torsion-free, decided by `all_powers` when `I(D)` has no
    /// embedded primes and left open otherwise.
    pub ntf: Option<bool>,
    pub all_vplus_sinks: bool,
    pub has_triangle: bool,
    pub is_bipartite: bool,
}

impl WeightedOrientedGraph {
    pub fn irrelevant_prime_report(&self) -> Result<IrrelevantPrimeReport> {
        let d = self.normalize();
        let n = d.nvertices;
        let ideal = d.edge_ideal();
        let via_ass =
            !ideal.is_zero() && associated_primes(&ideal)?.contains(&MonomialPrime::maximal(n));
        let all: VertexSet = d.vertices().collect();
        let via_strong_cover = d.is_strong_cover(&all)?;
        let vplus = d.vertex_roles().vplus;
        let reached: VertexSet = vplus.iter().flat_map(|&x| d.out_neighbors(x)).collect();
        let via_out_neighbourhood = reached == all;
        let report = IrrelevantPrimeReport {
            via_ass,
            via_strong_cover,
            via_out_neighbourhood,
        };
        if via_ass != via_strong_cover || via_ass != via_out_neighbourhood {
            return Err(Error::Consistency(format!(
                "criteria for the maximal ideal disagree: {report:?}"
            )));
        }
        Ok(report)
    }

    pub fn irrelevant_in_ass(&self) -> Result<bool> {
        Ok(self.irrelevant_prime_report()?.via_ass)
    }

    pub fn classify(&self) -> Result<Classification> {
        let d = self.normalize();
        let roles = d.vertex_roles();
        let props = d.underlying_props();
        let all_vplus_sinks = roles.all_vplus_sinks;
        let square = all_vplus_sinks && !props.has_triangle;
        let all_powers = all_vplus_sinks && props.is_bipartite;
        let ideal = d.edge_ideal();
        let ntf = if ideal.is_zero() || embedded_primes(&ideal)?.is_empty() {
            Some(all_powers)
        } else {
            None
        };
        Ok(Classification {
            square,
            all_powers,
            ntf,
            all_vplus_sinks,
            has_triangle: props.has_triangle,
            is_bipartite: props.is_bipartite,
        })
    }

    /// `t_u t_v^{w_v} t_x^{w_x}` for the first vertex `v` of `V^+` with an
    /// in-edge `(u, v)` and an out-edge `(v, x)`. It lies in the square of
    /// every irreducible component but not in `I(D)^2`.
    pub fn non_sink_witness(&self) -> Option<ExponentVector> {
        let d = self.normalize();
        let v = d
            .vertex_roles()
            .vplus
            .into_iter()
            .find(|&v| !d.is_source(v) && !d.is_sink(v))?;
        let u = d.in_neighbors(v).min()?;
        let x = d.out_neighbors(v).min()?;
        let mut a = vec![0u32; d.nvertices];
        a[u - 1] += 1;
        a[v - 1] += d.weight(v);
        a[x - 1] += d.weight(x);
        Some(ExponentVector::new(a))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::decomposition::irreducible_decomposition;
    use crate::symbolic::{compare_powers, symbolic_power_min};

    fn graph(n: usize, edges: &[(usize, usize)], weights: &[u32]) -> WeightedOrientedGraph {
        WeightedOrientedGraph::new(n, edges.to_vec(), weights.to_vec()).unwrap()
    }

    fn four_cycle() -> WeightedOrientedGraph {
        graph(4, &[(1, 2), (3, 2), (3, 4), (1, 4)], &[1, 2, 1, 2])
    }

    fn heavy_triangle() -> WeightedOrientedGraph {
        graph(3, &[(1, 2), (2, 3), (3, 1)], &[2, 2, 2])
    }

    fn nonsink_triangle() -> WeightedOrientedGraph {
        graph(3, &[(1, 2), (2, 3), (1, 3)], &[1, 2, 1])
    }

    fn sink_triangle() -> WeightedOrientedGraph {
        graph(3, &[(2, 1), (3, 1), (2, 3)], &[2, 1, 1])
    }

    fn star() -> WeightedOrientedGraph {
        graph(3, &[(1, 2), (2, 3)], &[1, 2, 1])
    }

    fn cycle(n: usize) -> WeightedOrientedGraph {
        let edges: Vec<_> = (1..=n).map(|i| (i, i % n + 1)).collect();
        graph(n, &edges, &vec![1; n])
    }

    #[test]
    fn irrelevant_prime() {
        assert!(heavy_triangle().irrelevant_in_ass().unwrap());
        assert!(!four_cycle().irrelevant_in_ass().unwrap());
        assert!(!cycle(5).irrelevant_in_ass().unwrap());
        assert!(!graph(3, &[], &[1, 1, 1]).irrelevant_in_ass().unwrap());
    }

    #[test]
    fn classifications() {
        let c = four_cycle().classify().unwrap();
        assert!(c.square && c.all_powers);
        assert_eq!(c.ntf, Some(true));

        let c = sink_triangle().classify().unwrap();
        assert!(c.all_vplus_sinks && c.has_triangle && !c.square);

        let c = nonsink_triangle().classify().unwrap();
        assert!(!c.all_vplus_sinks && !c.square);

        let c = cycle(5).classify().unwrap();
        assert!(c.square && !c.all_powers);

        let c = graph(2, &[], &[3, 1]).classify().unwrap();
        assert!(c.square && c.all_powers && c.all_vplus_sinks);
        assert_eq!(c.ntf, Some(true));
    }

    #[test]
    fn five_cycle_fails_at_cube() {
        let i = cycle(5).edge_ideal();
        assert!(compare_powers(&i, 2).unwrap().equal_min);
        assert!(!compare_powers(&i, 3).unwrap().equal_min);
    }

    #[test]
    fn source_weights_are_ignored() {
        let heavy_source = graph(3, &[(1, 2), (2, 3)], &[5, 1, 1]);
        let c = heavy_source.classify().unwrap();
        assert!(c.all_vplus_sinks && c.all_powers);
        assert_eq!(heavy_source.non_sink_witness(), None);
    }

    #[test]
    fn witnesses() {
        let f = ExponentVector::from([1, 2, 1]);
        assert_eq!(nonsink_triangle().non_sink_witness(), Some(f.clone()));
        assert_eq!(star().non_sink_witness(), Some(f));
        assert_eq!(four_cycle().non_sink_witness(), None);

        for d in [nonsink_triangle(), star(), heavy_triangle()] {
            let f = d.non_sink_witness().unwrap();
            let i = d.edge_ideal();
            let dec = irreducible_decomposition(&i).unwrap();
            for q in dec.components() {
                assert!(q
                    .to_ideal()
                    .power(2)
                    .unwrap()
                    .contains_monomial(&f)
                    .unwrap());
            }
            assert!(!i.power(2).unwrap().contains_monomial(&f).unwrap());
        }
    }

    #[test]
    fn sinks_mean_no_embedded_primes() {
        for d in [four_cycle(), sink_triangle(), cycle(5)] {
            assert!(d.vertex_roles().all_vplus_sinks);
            assert!(embedded_primes(&d.edge_ideal()).unwrap().is_empty());
        }
        let i = sink_triangle().edge_ideal();
        assert!(symbolic_power_min(&i, 2)
            .unwrap()
            .contains_monomial(&ExponentVector::from([2, 1, 1]))
            .unwrap());
    }
}
