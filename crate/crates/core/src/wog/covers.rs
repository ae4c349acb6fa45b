//! Vertex covers, their `L1/L2/L3` partition, and the strong covers whose
//! ideals `I_C` give the irreducible decomposition of `I(D)`.

use crate::decomposition::IrreducibleDecomposition;
use crate::error::{Error, Result};
use crate::ideal::IrreducibleIdeal;
use crate::monomial::ExponentVector;

use super::{VertexSet, WeightedOrientedGraph};

/// Vertex count above which cover enumeration is refused unless the caller
/// raises the limit.
pub const DEFAULT_MAX_COVER_VERTICES: usize = 22;

const MASK_BITS: usize = 64;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverPartition {
    pub cover: VertexSet,
    /// Vertices with an out-edge leaving the cover.
    pub l1: VertexSet,
    pub l2: VertexSet,
    /// Vertices whose whole neighbourhood lies in the cover.
    pub l3: VertexSet,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverDecomposition {
    /// Every strong cover with its ideal `I_C`, in canonical cover order.
    pub covers: Vec<(VertexSet, IrreducibleIdeal)>,
    /// The irredundant subset of the `I_C`.
    pub decomposition: IrreducibleDecomposition,
}

impl WeightedOrientedGraph {
    fn check_vertex_set(&self, c: &VertexSet) -> Result<()> {
        match c.iter().find(|&&v| v == 0 || v > self.nvertices) {
            Some(v) => Err(Error::domain(format!(
                "vertex {v} outside 1..{}",
                self.nvertices
            ))),
            None => Ok(()),
        }
    }

    pub fn is_vertex_cover(&self, c: &VertexSet) -> bool {
        self.edges
            .iter()
            .all(|(i, j)| c.contains(i) || c.contains(j))
    }

    pub fn is_minimal_cover(&self, c: &VertexSet) -> bool {
        self.is_vertex_cover(c)
            && c.iter()
                .all(|&x| self.neighbors(x).iter().any(|y| !c.contains(y)))
    }

    pub fn cover_partition(&self, c: &VertexSet) -> Result<CoverPartition> {
        self.check_vertex_set(c)?;
        if !self.is_vertex_cover(c) {
            return Err(Error::domain(format!("{c:?} is not a vertex cover")));
        }
        let l1: VertexSet = c
            .iter()
            .copied()
            .filter(|&x| self.out_neighbors(x).any(|y| !c.contains(&y)))
            .collect();
        let l3: VertexSet = c
            .iter()
            .copied()
            .filter(|&x| self.neighbors(x).is_subset(c))
            .collect();
        let l2: VertexSet = c
            .iter()
            .copied()
            .filter(|x| !l1.contains(x) && !l3.contains(x))
            .collect();
        debug_assert!(l1.is_disjoint(&l3));
        Ok(CoverPartition {
            cover: c.clone(),
            l1,
            l2,
            l3,
        })
    }

    /// A minimal cover, or one where every `x` in `L3` has an in-neighbour
    /// `y` in `L2 ∪ L3` with weight at least 2.
    pub fn is_strong_cover(&self, c: &VertexSet) -> Result<bool> {
        let part = self.cover_partition(c)?;
        let heavy_in = |x: usize| {
            self.in_neighbors(x)
                .any(|y| (part.l2.contains(&y) || part.l3.contains(&y)) && self.weight(y) >= 2)
        };
        let second_clause = part.l3.iter().all(|&x| heavy_in(x));
        if self.is_minimal_cover(c) {
            // Minimal covers have empty L3, so the second clause holds vacuously.
            if !(part.l3.is_empty() && second_clause) {
                return Err(Error::Consistency(format!(
                    "minimal cover {c:?} has nonempty L3"
                )));
            }
            return Ok(true);
        }
        Ok(second_clause)
    }

    /// All vertex covers, by a subset scan that only excludes a vertex when
    /// its already-decided neighbours are all included.
    pub fn vertex_covers(&self, max_vertices: usize) -> Result<Vec<VertexSet>> {
        self.check_enumeration_limit(max_vertices)?;
        let n = self.nvertices;
        let earlier_nbrs: Vec<u64> = (0..n)
            .map(|v| {
                self.neighbors(v + 1)
                    .iter()
                    .filter(|&&u| u - 1 < v)
                    .fold(0u64, |m, &u| m | (1 << (u - 1)))
            })
            .collect();
        let mut out = Vec::new();
        let mut stack: Vec<(usize, u64)> = vec![(0, 0)];
        while let Some((v, mask)) = stack.pop() {
            if v == n {
                out.push(mask_to_set(mask));
                continue;
            }
            if earlier_nbrs[v] & !mask == 0 {
                stack.push((v + 1, mask));
            }
            stack.push((v + 1, mask | (1 << v)));
        }
        out.sort_by(canonical_cover_order);
        Ok(out)
    }

    pub fn strong_covers(&self, max_vertices: usize) -> Result<Vec<VertexSet>> {
        let mut strong = Vec::new();
        for c in self.vertex_covers(max_vertices)? {
            if self.is_strong_cover(&c)? {
                strong.push(c);
            }
        }
        Ok(strong)
    }

    fn check_enumeration_limit(&self, max_vertices: usize) -> Result<()> {
        let limit = max_vertices.min(MASK_BITS - 1);
        if self.nvertices > limit {
            return Err(Error::ResourceLimit {
                what: "vertex count for cover enumeration",
                actual: self.nvertices,
                limit,
                flag: "--max-covers",
            });
        }
        Ok(())
    }

    /// `I_C = (L1 ∪ {t_i^{w_i} : i in L2 ∪ L3})` for a strong cover `C`.
    pub fn cover_ideal(&self, c: &VertexSet) -> Result<IrreducibleIdeal> {
        if !self.is_strong_cover(c)? {
            return Err(Error::domain(format!("{c:?} is not a strong vertex cover")));
        }
        let part = self.cover_partition(c)?;
        let mut alpha = vec![0u32; self.nvertices];
        for &x in &part.l1 {
            alpha[x - 1] = 1;
        }
        for &x in part.l2.iter().chain(&part.l3) {
            alpha[x - 1] = self.weight(x);
        }
        IrreducibleIdeal::new(ExponentVector::new(alpha))
    }

    /// Intersects `I_C` over all strong covers; checks the result equals
    /// the edge ideal.
    pub fn decomposition_via_covers(&self, max_vertices: usize) -> Result<CoverDecomposition> {
        if self.edges.is_empty() {
            return Err(Error::domain("an edgeless graph has the zero edge ideal"));
        }
        let covers = self
            .strong_covers(max_vertices)?
            .into_iter()
            .map(|c| {
                let q = self.cover_ideal(&c)?;
                Ok((c, q))
            })
            .collect::<Result<Vec<_>>>()?;
        let all = IrreducibleDecomposition::from_components(
            self.nvertices,
            covers.iter().map(|(_, q)| q.clone()).collect(),
        )?;
        let intersection = all.intersection()?;
        if intersection != self.edge_ideal() {
            return Err(Error::Consistency(format!(
                "strong-cover intersection {intersection} differs from the edge ideal {}",
                self.edge_ideal()
            )));
        }
        Ok(CoverDecomposition {
            covers,
            decomposition: all.irredundant(),
        })
    }
}

fn mask_to_set(mask: u64) -> VertexSet {
    (0..MASK_BITS)
        .filter(|b| mask & (1 << b) != 0)
        .map(|b| b + 1)
        .collect()
}

fn canonical_cover_order(a: &VertexSet, b: &VertexSet) -> std::cmp::Ordering {
    a.len().cmp(&b.len()).then_with(|| a.cmp(b))
}
