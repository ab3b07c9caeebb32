//! Legal-move enumeration shared by the solvers, strategies and referees.

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Maximal independent sets of `G[within]` (Bron–Kerbosch on the complement,
/// with pivoting). `[{}]` when `within` is empty.
pub fn maximal_independent_sets(g: &Graph, within: VertexSet) -> Vec<VertexSet> {
    fn bk(
        g: &Graph,
        within: VertexSet,
        r: VertexSet,
        p: VertexSet,
        x: VertexSet,
        out: &mut Vec<VertexSet>,
    ) {
        if p.is_empty() && x.is_empty() {
            out.push(r);
            return;
        }
        // Non-neighbours inside `within` play the role of clique neighbours.
        let compat = |v: usize| within.difference(g.neighbours(v)).without(v);
        let pivot = p
            .union(x)
            .iter()
            .max_by_key(|&u| compat(u).intersection(p).len())
            .expect("p or x non-empty");
        let mut p = p;
        let mut x = x;
        for v in p.difference(compat(pivot)) {
            let c = compat(v);
            bk(g, within, r.with(v), p.intersection(c), x.intersection(c), out);
            p.remove(v);
            x.insert(v);
        }
    }
    let mut out = Vec::new();
    bk(g, within, VertexSet::EMPTY, within, VertexSet::EMPTY, &mut out);
    out
}

/// Kept sets Corrector may leave coloured after Painter paints `painted`.
///
/// Vertices without erasers must be kept, so they form a forced core; the
/// result is every independent `K` with `core ⊆ K ⊆ painted`, or only the
/// inclusion-maximal ones when `maximal_only`. Larger sets come first.
/// Empty when the forced core itself has an edge.
pub fn kept_sets(
    g: &Graph,
    painted: VertexSet,
    no_erasers: VertexSet,
    maximal_only: bool,
) -> Vec<VertexSet> {
    let core = painted.intersection(no_erasers);
    if !g.is_independent(core) {
        return Vec::new();
    }
    let free = painted.difference(core).difference(g.neighbourhood(core));
    let mut sets: Vec<VertexSet> = if maximal_only {
        maximal_independent_sets(g, free)
            .into_iter()
            .map(|k| k.union(core))
            .collect()
    } else {
        free.subsets()
            .filter(|&k| g.is_independent(k))
            .map(|k| k.union(core))
            .collect()
    };
    sets.sort_by_key(|k| std::cmp::Reverse(k.len()));
    sets
}

/// Candidate Painter moves inside `free`, largest first. With
/// `connected_only`, only sets inducing a connected subgraph.
pub fn painter_moves(g: &Graph, free: VertexSet, connected_only: bool) -> Vec<VertexSet> {
    let mut moves: Vec<VertexSet> = free
        .nonempty_subsets()
        .filter(|&p| !connected_only || g.is_connected_set(p))
        .collect();
    moves.sort_by_key(|p| std::cmp::Reverse(p.len()));
    moves
}
