use std::hash::{Hash, Hasher};

use rustc_hash::FxHasher;

use super::{PainterStrategy, Reply, Turn};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solver::GameState;
use crate::vertex_set::VertexSet;

/// Wraps a classical Painter so that every move is connected: a
/// disconnected move is played one component at a time (largest first,
/// then by lowest vertex), and the inner strategy is told the union of the
/// erase sets as if it had been answered in one go.
#[derive(Clone)]
pub struct Connectify {
    graph: Graph,
    inner: Box<dyn PainterStrategy>,
    /// Position before the split move, the whole move, and erasures so far.
    split: Option<(GameState, VertexSet, VertexSet)>,
    queue: Vec<VertexSet>,
}

pub fn connectify(g: &Graph, inner: Box<dyn PainterStrategy>) -> Connectify {
    Connectify {
        graph: g.clone(),
        inner,
        split: None,
        queue: Vec::new(),
    }
}

impl PainterStrategy for Connectify {
    fn choose(&mut self, state: &GameState, turn: &Turn) -> Result<VertexSet> {
        if turn.forced.is_some() || turn.budget.is_some() {
            return Err(Error::Strategy("connectify only applies to the classical game".into()));
        }
        if let Some(next) = self.queue.pop() {
            return Ok(next);
        }
        let p = self.inner.choose(state, turn)?;
        let mut parts = self.graph.components_within(p);
        if parts.len() <= 1 {
            return Ok(p);
        }
        parts.sort_by_key(|c| (std::cmp::Reverse(c.len()), c.first()));
        parts.reverse();
        let first = parts.pop().expect("at least two components");
        self.queue = parts;
        self.split = Some((*state, p, VertexSet::EMPTY));
        Ok(first)
    }

    fn observe(&mut self, state: &GameState, turn: &Turn, painted: VertexSet, reply: &Reply) {
        let Some((before, whole, erased)) = self.split.as_mut() else {
            self.inner.observe(state, turn, painted, reply);
            return;
        };
        if let Reply::Erase(e) = reply {
            *erased = erased.union(*e);
        }
        if self.queue.is_empty() {
            let (before, whole, erased) = (*before, *whole, *erased);
            self.split = None;
            self.inner.observe(&before, turn, whole, &Reply::Erase(erased));
        }
    }

    fn memo_key(&self) -> u64 {
        let mut h = FxHasher::default();
        self.inner.memo_key().hash(&mut h);
        self.queue.hash(&mut h);
        if let Some((s, p, e)) = &self.split {
            (s, p, e).hash(&mut h);
        }
        h.finish()
    }

    fn clone_box(&self) -> Box<dyn PainterStrategy> {
        Box::new(self.clone())
    }

    fn take_note(&mut self) -> Option<String> {
        self.inner.take_note()
    }
}
