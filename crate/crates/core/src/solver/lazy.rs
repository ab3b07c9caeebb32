use rustc_hash::FxHashMap;

use super::moves::kept_sets;
use super::{GameState, KeyPacker, SolveOptions};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Corrector's answer in the lazy game.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LazyResponse {
    /// Leave the window open; Painter must paint another disjoint set.
    Defer,
    /// Close the window: one erase set per pending colour, in window order.
    Resolve(Vec<VertexSet>),
}

type LazyKey = (u64, u128, Vec<u64>, u32);

/// Memoized solver for the lazy game.
///
/// Painter paints sets of vertices that are neither coloured nor pending.
/// Corrector either defers (costs one unit of budget, allowed only while an
/// unpainted uncoloured vertex remains) or resolves the whole window at
/// once. Only `maximal_replies` is honoured among the options.
#[derive(Debug)]
pub struct LazySolver {
    graph: Graph,
    opts: SolveOptions,
    packer: KeyPacker,
    memo: FxHashMap<LazyKey, bool>,
}

fn union(sets: &[VertexSet]) -> VertexSet {
    sets.iter().fold(VertexSet::EMPTY, |a, &s| a.union(s))
}

impl LazySolver {
    pub fn new(g: &Graph, max_erasers: u32, opts: SolveOptions) -> Result<Self> {
        Ok(LazySolver {
            graph: g.clone(),
            opts,
            packer: KeyPacker::new(g.n(), max_erasers)?,
            memo: FxHashMap::default(),
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    fn check(&self, state: &GameState, pending: &[VertexSet]) -> Result<()> {
        self.packer.check(state)?;
        let mut seen = VertexSet::EMPTY;
        for &s in pending {
            if s.is_empty() || !s.is_subset(state.alive) || !s.is_disjoint(seen) {
                return Err(Error::InvalidParameter(format!(
                    "pending window {pending:?} is not a family of disjoint non-empty uncoloured sets"
                )));
            }
            seen = seen.union(s);
        }
        Ok(())
    }

    /// Budget beyond the number of paint events left is never usable: every
    /// deferral is followed by a Painter move, and a vertex can be painted at
    /// most one time more than its erasers.
    fn cap_budget(state: &GameState, budget: u32) -> u32 {
        let events: u32 = state.alive.iter().map(|v| state.erasers(v) + 1).sum();
        budget.min(events)
    }

    /// Whether Corrector wins with Painter to move, `pending` open, and
    /// `budget` deferrals left.
    pub fn corrector_wins(
        &mut self,
        state: &GameState,
        pending: &[VertexSet],
        budget: u32,
    ) -> Result<bool> {
        self.check(state, pending)?;
        if !pending.is_empty() && union(pending) == state.alive {
            return Err(Error::InvalidParameter(
                "window covers every uncoloured vertex; Corrector must resolve".into(),
            ));
        }
        self.painter_to_move(state, pending, budget)
    }

    fn painter_to_move(
        &mut self,
        state: &GameState,
        pending: &[VertexSet],
        budget: u32,
    ) -> Result<bool> {
        if state.alive.is_empty() {
            return Ok(true);
        }
        let budget = Self::cap_budget(state, budget);
        let mut sorted: Vec<u64> = pending.iter().map(|s| s.bits()).collect();
        sorted.sort_unstable();
        let (alive, er) = self.packer.key(state.alive.bits(), state.raw_erasers());
        let key = (alive, er, sorted, budget);
        if let Some(&v) = self.memo.get(&key) {
            return Ok(v);
        }
        let free = state.alive.difference(union(pending));
        let mut moves: Vec<VertexSet> = free.nonempty_subsets().collect();
        moves.sort_by_key(|p| std::cmp::Reverse(p.len()));
        let mut result = true;
        let mut window = pending.to_vec();
        for s in moves {
            window.push(s);
            let ok = self.responds(state, &window, budget)?;
            window.pop();
            if !ok {
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

    /// Whether Corrector has a winning answer to the window `window` (the
    /// last set being Painter's newest move).
    fn responds(&mut self, state: &GameState, window: &[VertexSet], budget: u32) -> Result<bool> {
        Ok(self.best_response(state, window, budget)?.is_some())
    }

    fn best_response(
        &mut self,
        state: &GameState,
        window: &[VertexSet],
        budget: u32,
    ) -> Result<Option<LazyResponse>> {
        let mut erased = Vec::with_capacity(window.len());
        if self.resolve(state, window, &mut erased, budget)? {
            return Ok(Some(LazyResponse::Resolve(erased)));
        }
        let can_defer = budget > 0 && !state.alive.difference(union(window)).is_empty();
        if can_defer && self.painter_to_move(state, window, budget - 1)? {
            return Ok(Some(LazyResponse::Defer));
        }
        Ok(None)
    }

    /// Tries kept sets for `window[erased.len()..]` depth-first; on success
    /// `erased` holds one erase set per window entry.
    fn resolve(
        &mut self,
        state: &GameState,
        window: &[VertexSet],
        erased: &mut Vec<VertexSet>,
        budget: u32,
    ) -> Result<bool> {
        let i = erased.len();
        if i == window.len() {
            let painted = union(window);
            let all_erased = union(erased);
            return self.painter_to_move(&state.after(painted, all_erased), &[], budget);
        }
        let zero = state.without_erasers();
        for kept in kept_sets(&self.graph, window[i], zero, self.opts.maximal_replies) {
            erased.push(window[i].difference(kept));
            if self.resolve(state, window, erased, budget)? {
                return Ok(true);
            }
            erased.pop();
        }
        Ok(false)
    }

    /// A Painter move that wins against every Corrector answer, if any.
    pub fn winning_painter_move(
        &mut self,
        state: &GameState,
        pending: &[VertexSet],
        budget: u32,
    ) -> Result<Option<VertexSet>> {
        self.check(state, pending)?;
        let free = state.alive.difference(union(pending));
        let mut moves: Vec<VertexSet> = free.nonempty_subsets().collect();
        moves.sort_by_key(|p| std::cmp::Reverse(p.len()));
        let mut window = pending.to_vec();
        for s in moves {
            window.push(s);
            let ok = self.responds(state, &window, budget)?;
            window.pop();
            if !ok {
                return Ok(Some(s));
            }
        }
        Ok(None)
    }

    /// A winning Corrector answer to `window`, preferring to resolve.
    pub fn winning_response(
        &mut self,
        state: &GameState,
        window: &[VertexSet],
        budget: u32,
    ) -> Result<Option<LazyResponse>> {
        self.check(state, window)?;
        self.best_response(state, window, budget)
    }
}
