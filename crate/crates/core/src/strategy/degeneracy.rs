use super::{CorrectorStrategy, Reply, Turn};
use crate::error::{Error, Result};
use crate::graph::{degeneracy, EraserMap, Graph};
use crate::solver::GameState;
use crate::vertex_set::VertexSet;

/// Corrector for a degenerate graph: peel off a low-degree vertex, answer on
/// the rest, then erase the peeled vertex iff one of its neighbours kept
/// the colour. A vertex is erased at most once per later neighbour in the
/// elimination order.
#[derive(Clone, Debug)]
pub struct DegeneracyCorrector {
    graph: Graph,
    order: Vec<usize>,
    back_degree: Vec<usize>,
}

/// Builds the corrector and checks that `e` covers every back-degree.
pub fn degeneracy_corrector(g: &Graph, e: &EraserMap) -> Result<DegeneracyCorrector> {
    e.check_for(g)?;
    let d = degeneracy(g);
    if let Some(v) = (0..g.n()).find(|&v| (e.get(v) as usize) < d.back_degree[v]) {
        return Err(Error::Strategy(format!(
            "vertex {v} has {} erasers but back-degree {}",
            e.get(v),
            d.back_degree[v]
        )));
    }
    Ok(DegeneracyCorrector {
        graph: g.clone(),
        order: d.order,
        back_degree: d.back_degree,
    })
}

impl DegeneracyCorrector {
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn back_degree(&self, v: usize) -> usize {
        self.back_degree[v]
    }

    pub fn erase_set(&self, painted: VertexSet) -> VertexSet {
        let mut kept = VertexSet::EMPTY;
        let mut erased = VertexSet::EMPTY;
        for &v in self.order.iter().rev().filter(|&&v| painted.contains(v)) {
            if self.graph.neighbours(v).is_disjoint(kept) {
                kept.insert(v);
            } else {
                erased.insert(v);
            }
        }
        erased
    }
}

impl CorrectorStrategy for DegeneracyCorrector {
    fn reply(&mut self, _state: &GameState, _turn: &Turn, painted: VertexSet) -> Result<Reply> {
        Ok(Reply::Erase(self.erase_set(painted)))
    }

    fn clone_box(&self) -> Box<dyn CorrectorStrategy> {
        Box::new(self.clone())
    }
}
