use super::{CorrectorStrategy, Reply, Turn};
use crate::error::{Error, Result};
use crate::graph::{EraserMap, Graph, ListAssignment};
use crate::solver::{is_list_colorable, GameState};
use crate::vertex_set::VertexSet;

/// Lazy-game Corrector that defers for as long as she may, then lets every
/// vertex keep its colour only in the phase matching a fixed colouring from
/// the lists `{1, .., e(v) + 1}`. With enough deferrals each vertex `v`
/// spends exactly `C(v) - 1` erasers.
#[derive(Clone, Debug)]
pub struct LazyCorrector {
    colouring: Vec<u32>,
    phase: u32,
}

pub fn lazy_corrector(g: &Graph, e: &EraserMap) -> Result<LazyCorrector> {
    e.check_for(g)?;
    let lists: Vec<Vec<u32>> = (0..g.n()).map(|v| (1..=e.get(v) + 1).collect()).collect();
    let lists = ListAssignment::new(lists.into_iter().map(|l| l.into_iter().collect()).collect())?;
    let colouring = is_list_colorable(g, &lists).ok_or_else(|| {
        Error::Strategy("no colouring from the lists {1..e(v)+1}; the instance is not paintable".into())
    })?;
    Ok(LazyCorrector {
        colouring,
        phase: 1,
    })
}

impl LazyCorrector {
    /// The guiding colouring `C`.
    pub fn colouring(&self) -> &[u32] {
        &self.colouring
    }

    pub fn phase(&self) -> u32 {
        self.phase
    }

    fn erase_set(&self, painted: VertexSet) -> VertexSet {
        painted
            .iter()
            .filter(|&v| self.colouring[v] != self.phase)
            .collect()
    }
}

impl CorrectorStrategy for LazyCorrector {
    fn reply(&mut self, state: &GameState, turn: &Turn, painted: VertexSet) -> Result<Reply> {
        if turn.can_defer(state, painted) {
            return Ok(Reply::Defer);
        }
        let window = turn.pending.iter().copied().chain([painted]);
        let erased = window.map(|s| self.erase_set(s)).collect();
        self.phase += 1;
        Ok(Reply::Resolve(erased))
    }

    fn memo_key(&self) -> u64 {
        self.phase as u64
    }

    fn clone_box(&self) -> Box<dyn CorrectorStrategy> {
        Box::new(self.clone())
    }
}
