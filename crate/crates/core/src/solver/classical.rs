use rustc_hash::FxHashMap;

use super::moves::{kept_sets, painter_moves};
use super::{reduce_good_degree, GameState, KeyPacker, SolveOptions, StateKey};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Memoized solver for the classical game on one graph. The memo is keyed
/// on exact positions, so one solver answers queries for any eraser map
/// whose entries stay within the bound given at construction.
#[derive(Debug)]
pub struct ClassicalSolver {
    graph: Graph,
    opts: SolveOptions,
    packer: KeyPacker,
    memo: FxHashMap<StateKey, bool>,
    nodes: u64,
}

impl ClassicalSolver {
    pub fn new(g: &Graph, max_erasers: u32, opts: SolveOptions) -> Result<Self> {
        Ok(ClassicalSolver {
            graph: g.clone(),
            opts,
            packer: KeyPacker::new(g.n(), max_erasers)?,
            memo: FxHashMap::default(),
            nodes: 0,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn options(&self) -> SolveOptions {
        self.opts
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    /// Positions expanded so far.
    pub fn nodes(&self) -> u64 {
        self.nodes
    }

    /// Whether Corrector wins from `state`.
    pub fn corrector_wins(&mut self, state: &GameState) -> Result<bool> {
        self.packer.check(state)?;
        self.wins(*state)
    }

    fn normalize(&self, mut state: GameState) -> GameState {
        if self.opts.prune_good_degree {
            reduce_good_degree(&self.graph, &mut state);
        }
        state
    }

    fn wins(&mut self, state: GameState) -> Result<bool> {
        let state = self.normalize(state);
        if state.alive.is_empty() {
            return Ok(true);
        }
        if self.opts.split_components {
            let comps = self.graph.components_within(state.alive);
            if comps.len() > 1 {
                for c in comps {
                    if !self.wins(state.restricted(c))? {
                        return Ok(false);
                    }
                }
                return Ok(true);
            }
        }
        let key = self.packer.key(state.alive.bits(), state.raw_erasers());
        if let Some(&v) = self.memo.get(&key) {
            return Ok(v);
        }
        self.nodes += 1;
        let mut result = true;
        for p in painter_moves(&self.graph, state.alive, self.opts.prune_connected) {
            if self.painter_move_wins(&state, p)? {
                result = false;
                break;
            }
        }
        if self.memo.len() >= self.opts.memo_limit {
            return Err(Error::MemoLimit(self.opts.memo_limit));
        }
        self.memo.insert(key, result);
        Ok(result)
    }

    /// Painter's move `p` wins iff no kept set leads to a Corrector win.
    fn painter_move_wins(&mut self, state: &GameState, p: VertexSet) -> Result<bool> {
        let zero = state.without_erasers();
        for kept in kept_sets(&self.graph, p, zero, self.opts.maximal_replies) {
            if self.wins(state.after(p, p.difference(kept)))? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// A move after which Painter wins against every reply, if one exists.
    /// The move is legal in `state` itself, not just in its reduction.
    pub fn winning_painter_move(&mut self, state: &GameState) -> Result<Option<VertexSet>> {
        self.packer.check(state)?;
        let state = self.normalize(*state);
        if state.alive.is_empty() {
            return Ok(None);
        }
        if self.opts.split_components {
            let comps = self.graph.components_within(state.alive);
            if comps.len() > 1 {
                for c in comps {
                    let sub = state.restricted(c);
                    if !self.wins(sub)? {
                        return self.winning_painter_move(&sub);
                    }
                }
                return Ok(None);
            }
        }
        for p in painter_moves(&self.graph, state.alive, self.opts.prune_connected) {
            if self.painter_move_wins(&state, p)? {
                return Ok(Some(p));
            }
        }
        Ok(None)
    }

    /// An erase set answering `painted` that leaves Corrector winning, if any.
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
