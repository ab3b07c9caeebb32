use rustc_hash::FxHashMap;

use super::moves::kept_sets;
use super::{reduce_good_degree, GameState, KeyPacker, SolveOptions, StateKey};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Memoized solver for the strong game: each round Corrector first names a
/// vertex that Painter's move must contain.
///
/// Only `prune_good_degree` and `maximal_replies` are honoured. Painter is
/// never restricted to connected moves and components are not split.
#[derive(Debug)]
pub struct StrongSolver {
    graph: Graph,
    opts: SolveOptions,
    packer: KeyPacker,
    memo: FxHashMap<StateKey, bool>,
}

impl StrongSolver {
    pub fn new(g: &Graph, max_erasers: u32, opts: SolveOptions) -> Result<Self> {
        Ok(StrongSolver {
            graph: g.clone(),
            opts,
            packer: KeyPacker::new(g.n(), max_erasers)?,
            memo: FxHashMap::default(),
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn corrector_wins(&mut self, state: &GameState) -> Result<bool> {
        self.packer.check(state)?;
        self.wins(*state)
    }

    fn wins(&mut self, mut state: GameState) -> Result<bool> {
        if self.opts.prune_good_degree {
            reduce_good_degree(&self.graph, &mut state);
        }
        if state.alive.is_empty() {
            return Ok(true);
        }
        let key = self.packer.key(state.alive.bits(), state.raw_erasers());
        if let Some(&v) = self.memo.get(&key) {
            return Ok(v);
        }
        let mut result = false;
        for u in self.force_order(&state) {
            if self.refutation(&state, u)?.is_none() {
                result = true;
                break;
            }
        }
        if self.memo.len() >= self.opts.memo_limit {
            return Err(Error::MemoLimit(self.opts.memo_limit));
        }
        self.memo.insert(key, result);
        Ok(result)
    }

    /// Forcing candidates, most-constrained first: vertices with few erasers
    /// and many uncoloured neighbours.
    fn force_order(&self, state: &GameState) -> Vec<usize> {
        let mut order: Vec<usize> = state.alive.iter().collect();
        order.sort_by_key(|&v| {
            (
                state.erasers(v),
                std::cmp::Reverse(self.graph.degree_in(v, state.alive)),
                v,
            )
        });
        order
    }

    /// A Painter move containing `forced` that beats every reply, if any.
    pub fn refutation(&mut self, state: &GameState, forced: usize) -> Result<Option<VertexSet>> {
        let others = state.alive.without(forced);
        let mut moves: Vec<VertexSet> = others.subsets().map(|s| s.with(forced)).collect();
        moves.sort_by_key(|p| std::cmp::Reverse(p.len()));
        let zero = state.without_erasers();
        'moves: for p in moves {
            for kept in kept_sets(&self.graph, p, zero, self.opts.maximal_replies) {
                if self.wins(state.after(p, p.difference(kept)))? {
                    continue 'moves;
                }
            }
            return Ok(Some(p));
        }
        Ok(None)
    }

    /// A vertex Corrector can force and still win, checked on `state`
    /// itself (no reduction), so any uncoloured vertex may be returned.
    pub fn winning_force(&mut self, state: &GameState) -> Result<Option<usize>> {
        self.packer.check(state)?;
        for u in self.force_order(state) {
            if self.refutation(state, u)?.is_none() {
                return Ok(Some(u));
            }
        }
        Ok(None)
    }

    pub fn winning_reply(
        &mut self,
        state: &GameState,
        painted: VertexSet,
    ) -> Result<Option<VertexSet>> {
        self.packer.check(state)?;
        let zero = state.without_erasers();
        for kept in kept_sets(&self.graph, painted, zero, self.opts.maximal_replies) {
            let erased = painted.difference(kept);
            if self.wins(state.after(painted, erased))? {
                return Ok(Some(erased));
            }
        }
        Ok(None)
    }
}
