use super::Graph;
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// Degeneracy together with the elimination order that witnesses it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Degeneracy {
    pub k: usize,
    /// Vertices in removal order.
    pub order: Vec<usize>,
    /// `back_degree[v]`: neighbours of `v` removed after `v`.
    pub back_degree: Vec<usize>,
}

/// Repeatedly removes a minimum-degree vertex (lowest id on ties).
pub fn degeneracy(g: &Graph) -> Degeneracy {
    let mut alive = g.vertices();
    let mut order = Vec::with_capacity(g.n());
    let mut back_degree = vec![0; g.n()];
    let mut k = 0;
    while !alive.is_empty() {
        let v = alive
            .iter()
            .min_by_key(|&v| (g.degree_in(v, alive), v))
            .expect("non-empty");
        let d = g.degree_in(v, alive);
        back_degree[v] = d;
        k = k.max(d);
        order.push(v);
        alive.remove(v);
    }
    Degeneracy {
        k,
        order,
        back_degree,
    }
}

pub fn components(g: &Graph) -> Vec<VertexSet> {
    g.components_within(g.vertices())
}

fn max_clique_in(g: &Graph, cand: VertexSet, size: usize, best: &mut usize) {
    if cand.is_empty() {
        *best = (*best).max(size);
        return;
    }
    if size + cand.len() <= *best {
        return;
    }
    let mut rest = cand;
    while let Some(v) = rest.first() {
        if size + rest.len() <= *best {
            return;
        }
        max_clique_in(g, rest.intersection(g.neighbours(v)), size + 1, best);
        rest.remove(v);
    }
}

pub fn clique_number(g: &Graph) -> usize {
    let mut best = 0;
    max_clique_in(g, g.vertices(), 0, &mut best);
    best
}

fn max_independent_in(g: &Graph, cand: VertexSet, size: usize, best: &mut usize) {
    if size + cand.len() <= *best {
        return;
    }
    let Some(v) = cand.iter().min_by_key(|&v| g.degree_in(v, cand)) else {
        *best = (*best).max(size);
        return;
    };
    // Either v is in the set, or one of its neighbours is (else v could be added).
    max_independent_in(g, cand.difference(g.neighbours(v)).without(v), size + 1, best);
    for w in g.neighbours(v).intersection(cand) {
        let c = cand.without(v);
        max_independent_in(g, c.difference(g.neighbours(w)).without(w), size + 1, best);
    }
}

/// Maximum independent set size; exact, for at most 32 vertices.
pub fn independence_number(g: &Graph) -> Result<usize> {
    if g.n() > 32 {
        return Err(Error::SizeLimit { n: g.n(), limit: 32 });
    }
    let mut best = 0;
    max_independent_in(g, g.vertices(), 0, &mut best);
    Ok(best)
}

fn greedy_colour_count(g: &Graph) -> usize {
    let order = {
        let mut o = degeneracy(g).order;
        o.reverse();
        o
    };
    let mut colour = vec![usize::MAX; g.n()];
    let mut used = 0;
    for v in order {
        let taken: Vec<usize> = g.neighbours(v).iter().map(|w| colour[w]).collect();
        let c = (0..).find(|c| !taken.contains(c)).expect("some colour free");
        colour[v] = c;
        used = used.max(c + 1);
    }
    used
}

/// DSATUR-order backtracking: can `g` be coloured with `k` colours?
fn colourable(g: &Graph, k: usize) -> bool {
    fn go(g: &Graph, k: usize, colour: &mut [usize], uncoloured: VertexSet, max_used: usize) -> bool {
        if uncoloured.is_empty() {
            return true;
        }
        let sat = |v: usize| {
            let mut seen = 0u64;
            for w in g.neighbours(v) {
                if colour[w] != usize::MAX {
                    seen |= 1 << colour[w];
                }
            }
            seen
        };
        let v = uncoloured
            .iter()
            .max_by_key(|&v| (sat(v).count_ones(), g.degree_in(v, uncoloured), usize::MAX - v))
            .expect("non-empty");
        let forbidden = sat(v);
        // New colours are interchangeable: try only one unused colour.
        for c in 0..k.min(max_used + 1) {
            if forbidden >> c & 1 == 1 {
                continue;
            }
            colour[v] = c;
            if go(g, k, colour, uncoloured.without(v), max_used.max(c + 1)) {
                return true;
            }
        }
        colour[v] = usize::MAX;
        false
    }
    let mut colour = vec![usize::MAX; g.n()];
    go(g, k, &mut colour, g.vertices(), 0)
}

/// Exact chromatic number for at most 16 vertices: clique lower bound,
/// greedy upper bound, backtracking in between.
pub fn chromatic_number(g: &Graph) -> Result<usize> {
    if g.n() > 16 {
        return Err(Error::SizeLimit { n: g.n(), limit: 16 });
    }
    if g.n() == 0 {
        return Ok(0);
    }
    let lower = clique_number(g).max(1);
    let upper = greedy_colour_count(g);
    for k in lower..upper {
        if colourable(g, k) {
            return Ok(k);
        }
    }
    Ok(upper)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::gen_named;

    fn named(name: &str, params: &[usize]) -> Graph {
        gen_named(name, params).unwrap().0
    }

    #[test]
    fn fig1_invariants() {
        let g = named("fig1_triangulation", &[]);
        assert_eq!(degeneracy(&g).k, 3);
        assert_eq!(chromatic_number(&g).unwrap(), 4);
        assert_eq!(independence_number(&g).unwrap(), 4);
        use crate::graph::triangulation::*;
        let witness: VertexSet = [A, C, E, U].into_iter().collect();
        assert!(g.is_independent(witness));
        let k4: VertexSet = [HUB, B, D, F].into_iter().collect();
        assert!(k4.iter().all(|v| g.neighbours(v).intersection(k4).len() == 3));
    }

    #[test]
    fn degeneracy_examples() {
        assert_eq!(degeneracy(&named("cycle", &[4])).k, 2);
        assert_eq!(degeneracy(&named("path", &[6])).k, 1);
        assert_eq!(degeneracy(&named("star", &[5])).k, 1);
        assert_eq!(degeneracy(&named("empty", &[3])).k, 0);
        let d = degeneracy(&named("complete", &[5]));
        assert_eq!(d.k, 4);
        assert_eq!(d.order.len(), 5);
    }

    #[test]
    fn chromatic_examples() {
        assert_eq!(chromatic_number(&named("complete_multipartite", &[2, 3])).unwrap(), 2);
        assert_eq!(chromatic_number(&named("cycle", &[5])).unwrap(), 3);
        assert_eq!(chromatic_number(&named("cycle", &[6])).unwrap(), 2);
        assert_eq!(chromatic_number(&named("complete", &[6])).unwrap(), 6);
        assert_eq!(chromatic_number(&named("empty", &[4])).unwrap(), 1);
        assert_eq!(chromatic_number(&Graph::new(0).unwrap()).unwrap(), 0);
        assert!(chromatic_number(&named("empty", &[17])).is_err());
    }

    #[test]
    fn independence_examples() {
        assert_eq!(independence_number(&named("complete", &[7])).unwrap(), 1);
        assert_eq!(independence_number(&named("cycle", &[5])).unwrap(), 2);
        assert_eq!(independence_number(&named("complete_multipartite", &[3, 5])).unwrap(), 5);
        assert!(independence_number(&named("empty", &[33])).is_err());
    }

    #[test]
    fn component_examples() {
        let p4 = named("path", &[4]);
        let two = p4.disjoint_union(&p4).unwrap();
        assert_eq!(components(&two).len(), 2);
        assert_eq!(components(&named("schauz_gadget", &[])).len(), 1);
        assert!(components(&Graph::new(0).unwrap()).is_empty());
    }
}
