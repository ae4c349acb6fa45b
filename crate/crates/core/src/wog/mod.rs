//! Weighted oriented graphs and their edge ideals.
//!
//! Vertices are numbered `1..=s` and correspond to the variables `t1..ts`.
//! The text format is line based:
//!
//! ```text
//! vertices 4
//! weights 1 2 1 2
//! edge 1 2
//! edge 3 2
//! ```
//!
//! `edge i j` is the directed edge `i -> j`; it contributes `t_i * t_j^{w_j}`
//! to the edge ideal. Blank lines and `#` comments are ignored.

mod classify;
mod covers;

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

pub use classify::{Classification, IrrelevantPrimeReport};
pub use covers::{CoverDecomposition, CoverPartition, DEFAULT_MAX_COVER_VERTICES};

use crate::decomposition::IrreducibleDecomposition;
use crate::error::{Error, Result};
use crate::ideal::{IrreducibleIdeal, MonomialIdeal};
use crate::monomial::ExponentVector;

/// A set of 1-indexed vertices.
pub type VertexSet = BTreeSet<usize>;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WeightedOrientedGraph {
    nvertices: usize,
    edges: Vec<(usize, usize)>,
    weights: Vec<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexRoles {
    pub sources: VertexSet,
    pub sinks: VertexSet,
    /// Vertices of weight at least 2.
    pub vplus: VertexSet,
    pub all_vplus_sinks: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct UnderlyingProps {
    pub is_bipartite: bool,
    pub has_triangle: bool,
    /// Length of a shortest odd cycle, if any.
    pub odd_girth: Option<usize>,
}

impl WeightedOrientedGraph {
    /// Validates the structure: vertices in range, no self-loops, at most one
    /// orientation per underlying edge, one positive weight per vertex.
    pub fn new(nvertices: usize, edges: Vec<(usize, usize)>, weights: Vec<u32>) -> Result<Self> {
        if weights.len() != nvertices {
            return Err(Error::Validation(format!(
                "{} weights given for {nvertices} vertices",
                weights.len()
            )));
        }
        if let Some(pos) = weights.iter().position(|&w| w == 0) {
            return Err(Error::Validation(format!(
                "vertex {} has weight 0",
                pos + 1
            )));
        }
        let mut seen = BTreeSet::new();
        for &(i, j) in &edges {
            check_edge(nvertices, i, j).map_err(Error::Validation)?;
            if !seen.insert((i.min(j), i.max(j))) {
                return Err(Error::Validation(format!(
                    "edge {{{i}, {j}}} appears more than once"
                )));
            }
        }
        let mut edges = edges;
        edges.sort_unstable();
        Ok(WeightedOrientedGraph {
            nvertices,
            edges,
            weights,
        })
    }

    pub fn nvertices(&self) -> usize {
        self.nvertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn weight(&self, v: usize) -> u32 {
        self.weights[v - 1]
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> {
        1..=self.nvertices
    }

    pub fn out_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges.iter().filter(move |e| e.0 == v).map(|e| e.1)
    }

    pub fn in_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.edges.iter().filter(move |e| e.1 == v).map(|e| e.0)
    }

    /// Neighbours in the underlying graph.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.out_neighbors(v).chain(self.in_neighbors(v)).collect()
    }

    pub fn has_edge_between(&self, u: usize, v: usize) -> bool {
        self.edges
            .iter()
            .any(|&(a, b)| (a, b) == (u, v) || (a, b) == (v, u))
    }

    /// No incoming edges. Isolated vertices count as sources and sinks.
    pub fn is_source(&self, v: usize) -> bool {
        self.in_neighbors(v).next().is_none()
    }

    /// No outgoing edges.
    pub fn is_sink(&self, v: usize) -> bool {
        self.out_neighbors(v).next().is_none()
    }

    /// Forces every source to weight 1. The edge ideal does not change.
    pub fn normalize(&self) -> WeightedOrientedGraph {
        let weights = self
            .vertices()
            .map(|v| if self.is_source(v) { 1 } else { self.weight(v) })
            .collect();
        WeightedOrientedGraph {
            nvertices: self.nvertices,
            edges: self.edges.clone(),
            weights,
        }
    }

    pub fn is_normalized(&self) -> bool {
        self.vertices()
            .all(|v| !self.is_source(v) || self.weight(v) == 1)
    }

    /// `I(D) = (t_i t_j^{w_j} : (i, j) in E(D))`. Edgeless graphs give the zero ideal.
    pub fn edge_ideal(&self) -> MonomialIdeal {
        let n = self.nvertices;
        let gens = self
            .edges
            .iter()
            .map(|&(i, j)| {
                let mut v = vec![0u32; n];
                v[i - 1] = 1;
                v[j - 1] = self.weight(j);
                ExponentVector::new(v)
            })
            .collect();
        MonomialIdeal::from_antichain_unchecked(n, gens)
    }

    /// `J(D) = ∩ (t_i, t_j^{w_j})` over the directed edges, returned both as
    /// its irreducible decomposition and as an ideal.
    pub fn alexander_dual(&self) -> Result<(IrreducibleDecomposition, MonomialIdeal)> {
        if self.edges.is_empty() {
            return Err(Error::domain("the Alexander dual needs at least one edge"));
        }
        let n = self.nvertices;
        let components = self
            .edges
            .iter()
            .map(|&(i, j)| {
                let mut v = vec![0u32; n];
                v[i - 1] = 1;
                v[j - 1] = self.weight(j);
                IrreducibleIdeal::new(ExponentVector::new(v))
            })
            .collect::<Result<Vec<_>>>()?;
        let dec = IrreducibleDecomposition::from_components(n, components)?;
        let ideal = dec.intersection()?;
        Ok((dec, ideal))
    }

    pub fn vertex_roles(&self) -> VertexRoles {
        let sources: VertexSet = self.vertices().filter(|&v| self.is_source(v)).collect();
        let sinks: VertexSet = self.vertices().filter(|&v| self.is_sink(v)).collect();
        let vplus: VertexSet = self.vertices().filter(|&v| self.weight(v) >= 2).collect();
        let all_vplus_sinks = vplus.is_subset(&sinks);
        VertexRoles {
            sources,
            sinks,
            vplus,
            all_vplus_sinks,
        }
    }

    pub fn underlying_props(&self) -> UnderlyingProps {
        let n = self.nvertices;
        let adj: Vec<VertexSet> = (0..=n)
            .map(|v| {
                if v == 0 {
                    VertexSet::new()
                } else {
                    self.neighbors(v)
                }
            })
            .collect();

        let has_triangle = self
            .edges
            .iter()
            .any(|&(a, b)| adj[a].intersection(&adj[b]).next().is_some());

        // BFS from every vertex: an edge joining two vertices at the same
        // depth closes an odd walk of length 2d+1, and the minimum over all
        // roots is the shortest odd cycle.
        let mut odd_girth: Option<usize> = None;
        for root in 1..=n {
            let mut dist = vec![usize::MAX; n + 1];
            dist[root] = 0;
            let mut queue = VecDeque::from([root]);
            while let Some(u) = queue.pop_front() {
                for &w in &adj[u] {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        queue.push_back(w);
                    }
                }
            }
            for &(a, b) in &self.edges {
                if dist[a] != usize::MAX && dist[a] == dist[b] {
                    let len = 2 * dist[a] + 1;
                    odd_girth = Some(odd_girth.map_or(len, |g| g.min(len)));
                }
            }
        }
        UnderlyingProps {
            is_bipartite: odd_girth.is_none(),
            has_triangle,
            odd_girth,
        }
    }
}

fn check_edge(n: usize, i: usize, j: usize) -> std::result::Result<(), String> {
    if i == 0 || j == 0 || i > n || j > n {
        return Err(format!("edge {i} -> {j} leaves the vertex range 1..{n}"));
    }
    if i == j {
        return Err(format!("self-loop at vertex {i}"));
    }
    Ok(())
}

impl FromStr for WeightedOrientedGraph {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut nvertices: Option<(usize, usize)> = None;
        let mut weights: Option<(usize, Vec<u32>)> = None;
        let mut edges: Vec<(usize, usize, usize)> = Vec::new();
        for (k, raw) in text.lines().enumerate() {
            let line = k + 1;
            let content = raw.split('#').next().unwrap_or("");
            let words: Vec<&str> = content.split_whitespace().collect();
            let Some((&keyword, args)) = words.split_first() else {
                continue;
            };
            let numbers = |args: &[&str]| -> Result<Vec<u64>> {
                args.iter()
                    .map(|a| {
                        a.parse::<u64>().map_err(|_| {
                            Error::parse(line, format!("expected a natural number, found {a:?}"))
                        })
                    })
                    .collect()
            };
            match keyword {
                "vertices" => {
                    if nvertices.is_some() {
                        return Err(Error::parse(line, "duplicate `vertices` line"));
                    }
                    let v = numbers(args)?;
                    if v.len() != 1 {
                        return Err(Error::parse(line, "expected `vertices <count>`"));
                    }
                    nvertices = Some((line, v[0] as usize));
                }
                "weights" => {
                    if weights.is_some() {
                        return Err(Error::parse(line, "duplicate `weights` line"));
                    }
                    let w = numbers(args)?;
                    let w = w
                        .into_iter()
                        .map(|x| {
                            u32::try_from(x).ok().filter(|&x| x >= 1).ok_or_else(|| {
                                Error::parse(line, "weights must be positive 32-bit integers")
                            })
                        })
                        .collect::<Result<Vec<_>>>()?;
                    weights = Some((line, w));
                }
                "edge" => {
                    let e = numbers(args)?;
                    if e.len() != 2 {
                        return Err(Error::parse(line, "expected `edge <from> <to>`"));
                    }
                    edges.push((line, e[0] as usize, e[1] as usize));
                }
                other => {
                    return Err(Error::parse(line, format!("unknown directive {other:?}")));
                }
            }
        }
        let (_, n) = nvertices.ok_or_else(|| Error::parse(1, "missing `vertices` line"))?;
        let weights = match weights {
            Some((wline, w)) => {
                if w.len() != n {
                    return Err(Error::parse(
                        wline,
                        format!("{} weights given for {n} vertices", w.len()),
                    ));
                }
                w
            }
            None => vec![1; n],
        };
        let mut seen = BTreeSet::new();
        let mut plain = Vec::with_capacity(edges.len());
        for (line, i, j) in edges {
            check_edge(n, i, j).map_err(|m| Error::parse(line, m))?;
            if !seen.insert((i.min(j), i.max(j))) {
                return Err(Error::parse(
                    line,
                    format!("edge {{{i}, {j}}} already present (in some orientation)"),
                ));
            }
            plain.push((i, j));
        }
        WeightedOrientedGraph::new(n, plain, weights)
    }
}

impl fmt::Display for WeightedOrientedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "vertices {}", self.nvertices)?;
        let w: Vec<String> = self.weights.iter().map(|w| w.to_string()).collect();
        writeln!(f, "weights {}", w.join(" "))?;
        for (i, j) in &self.edges {
            writeln!(f, "edge {i} {j}")?;
        }
        Ok(())
    }
}
