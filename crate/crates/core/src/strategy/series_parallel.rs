use super::{CorrectorStrategy, Reply, Turn};
use crate::error::{Error, Result};
use crate::graph::{gen_series_parallel, EraserMap, Graph, SpNodeKind, SpRealization, SpTree};
use crate::solver::GameState;
use crate::vertex_set::VertexSet;

/// Erasers the series-parallel corrector is built for: none on the source,
/// one on the sink, two everywhere else.
pub fn sp_erasers(r: &SpRealization) -> EraserMap {
    let mut e = EraserMap::uniform(r.graph.n(), 2);
    e.set(r.source, 0);
    e.set(r.sink, 1);
    e
}

/// Corrector for a series-parallel graph built from its decomposition.
///
/// At the root an `s t` edge is resolved by erasing `t`. Below, a series
/// node with middle terminal `m` erases `m` whenever `m` is painted next to
/// one of the node's own terminals that still keeps the colour; parallel
/// nodes just combine their children. Terminals are never erased inside the
/// node they bound, so `m` pays at most once per side.
#[derive(Clone, Debug)]
pub struct SpCorrector {
    real: SpRealization,
}

pub fn sp_corrector(tree: &SpTree) -> Result<SpCorrector> {
    Ok(SpCorrector {
        real: gen_series_parallel(tree)?,
    })
}

impl SpCorrector {
    pub fn graph(&self) -> &Graph {
        &self.real.graph
    }

    pub fn realization(&self) -> &SpRealization {
        &self.real
    }

    /// Rejects eraser maps that differ from [`sp_erasers`].
    pub fn check_erasers(&self, e: &EraserMap) -> Result<()> {
        if *e != sp_erasers(&self.real) {
            return Err(Error::Strategy(
                "series-parallel corrector needs 0 erasers on the source, 1 on the sink, 2 elsewhere".into(),
            ));
        }
        Ok(())
    }

    pub fn erase_set(&self, painted: VertexSet) -> VertexSet {
        let g = &self.real.graph;
        let (s, t) = (self.real.source, self.real.sink);
        let mut erased = VertexSet::EMPTY;
        if painted.contains(s) && painted.contains(t) && g.has_edge(s, t) {
            erased.insert(t);
        }
        self.node(self.real.root, painted.difference(erased), &mut erased);
        erased
    }

    /// `kept` is the part of the move still keeping its colour when this
    /// node is reached.
    fn node(&self, id: usize, kept: VertexSet, erased: &mut VertexSet) {
        let node = &self.real.nodes[id];
        let kept = kept.intersection(node.vertices);
        match node.kind {
            SpNodeKind::Leaf => {}
            SpNodeKind::Parallel { left, right } => {
                self.node(left, kept, erased);
                self.node(right, kept, erased);
            }
            SpNodeKind::Series { left, right, middle } => {
                let g = &self.real.graph;
                let mut kept = kept;
                let clash = |x: usize| kept.contains(x) && g.has_edge(x, middle);
                if kept.contains(middle) && (clash(node.source) || clash(node.sink)) {
                    kept.remove(middle);
                    erased.insert(middle);
                }
                self.node(left, kept, erased);
                self.node(right, kept, erased);
            }
        }
    }
}

impl CorrectorStrategy for SpCorrector {
    fn reply(&mut self, _state: &GameState, _turn: &Turn, painted: VertexSet) -> Result<Reply> {
        Ok(Reply::Erase(self.erase_set(painted)))
    }

    fn clone_box(&self) -> Box<dyn CorrectorStrategy> {
        Box::new(self.clone())
    }
}
