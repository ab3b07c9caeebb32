//! Simple undirected graphs on at most 64 vertices, eraser maps and list
//! assignments.

mod enumerate;
mod format;
mod generators;
mod invariants;

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

pub use enumerate::{canonical_form, graphs_up_to_isomorphism, random_graph};
pub use format::{export_dot, parse_graph, serialize_graph};
pub use generators::{
    gadget, gen_named, gen_series_parallel, triangulation, SpNode, SpNodeKind, SpRealization, SpTree,
};
pub use invariants::{
    chromatic_number, clique_number, components, degeneracy, independence_number, Degeneracy,
};

/// Simple undirected graph with vertex ids `0..n`.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Graph {
    adj: Vec<VertexSet>,
    name: Option<String>,
}

impl Graph {
    pub fn new(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::SizeLimit {
                n,
                limit: MAX_VERTICES,
            });
        }
        Ok(Graph {
            adj: vec![VertexSet::EMPTY; n],
            name: None,
        })
    }

    /// Builds a graph from an edge list. Panics on self-loops or out-of-range
    /// endpoints; meant for fixed constructions.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Graph::new(n).expect("vertex budget");
        for &(u, v) in edges {
            g.add_edge(u, v).expect("valid edge");
        }
        g
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn set_name(&mut self, name: Option<String>) {
        self.name = name;
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        if u == v {
            return Err(Error::InvalidParameter(format!("self-loop at {u}")));
        }
        if u >= n || v >= n {
            return Err(Error::InvalidParameter(format!(
                "edge {u}-{v} outside 0..{n}"
            )));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    #[inline]
    pub fn neighbours(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Degree of `v` counting only neighbours inside `within`.
    #[inline]
    pub fn degree_in(&self, v: usize, within: VertexSet) -> usize {
        self.adj[v].intersection(within).len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| {
            self.adj[u]
                .iter()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Union of the neighbourhoods of `s`.
    #[inline]
    pub fn neighbourhood(&self, s: VertexSet) -> VertexSet {
        s.iter()
            .fold(VertexSet::EMPTY, |acc, v| acc.union(self.adj[v]))
    }

    #[inline]
    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.adj[v].is_disjoint(s))
    }

    /// Whether `s` induces a connected subgraph. The empty set is not connected.
    pub fn is_connected_set(&self, s: VertexSet) -> bool {
        let Some(start) = s.first() else {
            return false;
        };
        self.reach(start, s) == s
    }

    /// Vertices reachable from `start` inside `within`.
    pub fn reach(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let next = self.neighbourhood(frontier).intersection(within);
            frontier = next.difference(seen);
            seen = seen.union(frontier);
        }
        seen
    }

    /// Connected components of `G[within]`, ordered by smallest vertex.
    pub fn components_within(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within;
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let c = self.reach(v, within);
            rest = rest.difference(c);
            out.push(c);
        }
        out
    }

    /// BFS distances from `start` inside `within`; `None` when unreachable.
    pub fn distances_within(&self, start: usize, within: VertexSet) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n()];
        dist[start] = Some(0);
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        let mut d = 0;
        while !frontier.is_empty() {
            d += 1;
            frontier = self
                .neighbourhood(frontier)
                .intersection(within)
                .difference(seen);
            for v in frontier {
                dist[v] = Some(d);
            }
            seen = seen.union(frontier);
        }
        dist
    }

    /// Induced subgraph on `s`, with vertices renumbered in increasing order.
    pub fn induced(&self, s: VertexSet) -> InducedSubgraph {
        let original: Vec<usize> = s.iter().collect();
        let mut index = [usize::MAX; MAX_VERTICES];
        for (i, &v) in original.iter().enumerate() {
            index[v] = i;
        }
        let mut g = Graph::new(original.len()).expect("subset of a valid graph");
        for (i, &v) in original.iter().enumerate() {
            g.adj[i] = self.adj[v].intersection(s).iter().map(|w| index[w]).collect();
        }
        g.name = self.name.as_ref().map(|n| format!("{n}[induced]"));
        InducedSubgraph { graph: g, original }
    }

    /// `G - v` keeping ids: `v` becomes isolated.
    pub fn isolate(&self, v: usize) -> Graph {
        let mut g = self.clone();
        for u in g.adj[v] {
            g.adj[u].remove(v);
        }
        g.adj[v] = VertexSet::EMPTY;
        g
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let mut g = Graph::new(self.n()).expect("same size");
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]).expect("permutation");
        }
        g.name = self.name.clone();
        g
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let off = self.n();
        let mut g = Graph::new(off + other.n())?;
        for (u, v) in self.edges() {
            g.add_edge(u, v)?;
        }
        for (u, v) in other.edges() {
            g.add_edge(u + off, v + off)?;
        }
        Ok(g)
    }
}

/// An induced subgraph together with the original id of each new vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InducedSubgraph {
    pub graph: Graph,
    pub original: Vec<usize>,
}

/// Number of erasers per vertex.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Serialize, Deserialize)]
pub struct EraserMap(pub Vec<u32>);

impl EraserMap {
    pub fn uniform(n: usize, k: u32) -> Self {
        EraserMap(vec![k; n])
    }

    pub fn zeros(n: usize) -> Self {
        Self::uniform(n, 0)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn get(&self, v: usize) -> u32 {
        self.0[v]
    }

    pub fn set(&mut self, v: usize, k: u32) {
        self.0[v] = k;
    }

    pub fn total(&self) -> u64 {
        self.0.iter().map(|&k| k as u64).sum()
    }

    pub fn max(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// Token view: a vertex with `k` erasers holds `k + 1` tokens, the
    /// convention under which every vertex needs at least one token.
    pub fn to_tokens(&self) -> Vec<u32> {
        self.0.iter().map(|&k| k + 1).collect()
    }

    /// Inverse of [`EraserMap::to_tokens`]; every entry must be at least 1.
    pub fn from_tokens(tokens: &[u32]) -> Result<Self> {
        tokens
            .iter()
            .map(|&t| {
                t.checked_sub(1)
                    .ok_or_else(|| Error::InvalidParameter("token count 0".into()))
            })
            .collect::<Result<Vec<_>>>()
            .map(EraserMap)
    }

    pub fn restricted(&self, original: &[usize]) -> EraserMap {
        EraserMap(original.iter().map(|&v| self.0[v]).collect())
    }

    pub fn check_for(&self, g: &Graph) -> Result<()> {
        if self.len() != g.n() {
            return Err(Error::EraserMismatch {
                expected: g.n(),
                got: self.len(),
            });
        }
        Ok(())
    }
}

/// Colour lists per vertex; colours are positive integers.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ListAssignment {
    lists: Vec<BTreeSet<u32>>,
}

impl ListAssignment {
    pub fn new(lists: Vec<BTreeSet<u32>>) -> Result<Self> {
        for (v, l) in lists.iter().enumerate() {
            if l.is_empty() {
                return Err(Error::InvalidParameter(format!("empty list at vertex {v}")));
            }
            if l.contains(&0) {
                return Err(Error::InvalidParameter(format!(
                    "colour 0 at vertex {v}; colours are positive"
                )));
            }
        }
        Ok(ListAssignment { lists })
    }

    pub fn from_slices(lists: &[&[u32]]) -> Result<Self> {
        Self::new(lists.iter().map(|l| l.iter().copied().collect()).collect())
    }

    pub fn uniform(n: usize, colours: &[u32]) -> Result<Self> {
        Self::new(vec![colours.iter().copied().collect(); n])
    }

    pub fn len(&self) -> usize {
        self.lists.len()
    }

    pub fn is_empty(&self) -> bool {
        self.lists.is_empty()
    }

    pub fn list(&self, v: usize) -> &BTreeSet<u32> {
        &self.lists[v]
    }

    pub fn lists(&self) -> &[BTreeSet<u32>] {
        &self.lists
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c4() -> Graph {
        Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (3, 0)])
    }

    #[test]
    fn induced_keeps_mapping() {
        let g = c4();
        let all = g.induced(g.vertices());
        assert_eq!(all.graph, g.induced(g.vertices()).graph);
        assert_eq!(all.graph.edge_count(), 4);
        let p3 = g.induced([0, 1, 2].into_iter().collect());
        assert_eq!(p3.graph.edge_count(), 2);
        assert_eq!(p3.original, vec![0, 1, 2]);
        let odd = g.induced([1, 3].into_iter().collect());
        assert_eq!(odd.graph.edge_count(), 0);
        assert_eq!(odd.original, vec![1, 3]);
    }

    #[test]
    fn connectivity_and_distances() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (3, 4)]);
        assert!(g.is_connected_set([0, 1, 2].into_iter().collect()));
        assert!(!g.is_connected_set([0, 2].into_iter().collect()));
        assert_eq!(g.components_within(g.vertices()).len(), 2);
        let d = g.distances_within(0, g.vertices());
        assert_eq!(d[2], Some(2));
        assert_eq!(d[3], None);
    }

    #[test]
    fn rejects_bad_edges() {
        let mut g = Graph::new(3).unwrap();
        assert!(g.add_edge(1, 1).is_err());
        assert!(g.add_edge(0, 3).is_err());
        assert!(Graph::new(65).is_err());
    }

    #[test]
    fn token_view_round_trips() {
        let e = EraserMap(vec![0, 1, 2]);
        assert_eq!(e.to_tokens(), vec![1, 2, 3]);
        assert_eq!(EraserMap::from_tokens(&e.to_tokens()).unwrap(), e);
        assert!(EraserMap::from_tokens(&[0]).is_err());
    }

    #[test]
    fn list_assignment_validation() {
        assert!(ListAssignment::from_slices(&[&[1], &[]]).is_err());
        assert!(ListAssignment::from_slices(&[&[0]]).is_err());
        assert_eq!(ListAssignment::uniform(3, &[1, 2]).unwrap().len(), 3);
    }
}
