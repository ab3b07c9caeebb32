use crate::graph::{EraserMap, Graph};

/// Result of deleting vertices that hold at least as many erasers as they
/// have neighbours. Such deletions never change who wins.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reduction {
    pub graph: Graph,
    pub erasers: EraserMap,
    /// Deleted vertices (original ids) in deletion order.
    pub removed: Vec<usize>,
    /// Original id of each remaining vertex.
    pub original: Vec<usize>,
}

pub fn reduce_instance(g: &Graph, e: &EraserMap) -> Reduction {
    let mut alive = g.vertices();
    let mut removed = Vec::new();
    while let Some(v) = alive
        .iter()
        .find(|&v| e.get(v) as usize >= g.degree_in(v, alive))
    {
        alive.remove(v);
        removed.push(v);
    }
    let sub = g.induced(alive);
    Reduction {
        erasers: e.restricted(&sub.original),
        graph: sub.graph,
        removed,
        original: sub.original,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::gen_named;

    #[test]
    fn tree_reduces_away() {
        let (g, _) = gen_named("path", &[6]).unwrap();
        let r = reduce_instance(&g, &EraserMap::uniform(6, 1));
        assert_eq!(r.graph.n(), 0);
        assert_eq!(r.removed.len(), 6);
        assert_eq!(r.removed[0], 0);
    }

    #[test]
    fn gadget_is_irreducible() {
        let (g, e) = gen_named("schauz_gadget", &[]).unwrap();
        let r = reduce_instance(&g, &e);
        assert!(r.removed.is_empty());
        assert_eq!(r.graph, g.induced(g.vertices()).graph);
    }

    #[test]
    fn triangulation_with_three_erasers_reduces_away() {
        let (g, _) = gen_named("fig1_triangulation", &[]).unwrap();
        assert_eq!(reduce_instance(&g, &EraserMap::uniform(8, 3)).graph.n(), 0);
        assert_eq!(reduce_instance(&g, &EraserMap::uniform(8, 2)).graph.n(), 8);
    }
}
