//! Strategies for both players.
//!
//! One pair of traits serves all three models. A strategy learns which
//! model it is in from the [`Turn`] it is handed: a forced vertex means the
//! strong game, a deferral budget means the lazy game. Strategies written for
//! the classical game work unchanged in the lazy game (they simply never
//! defer) and, for Painter, in the strong game as long as they honour the
//! forced vertex.

mod connectify;
mod degeneracy;
mod lazy;
mod optimal;
mod scripts;
mod series_parallel;

pub use connectify::{connectify, Connectify};
pub use degeneracy::{degeneracy_corrector, DegeneracyCorrector};
pub use lazy::{lazy_corrector, LazyCorrector};
pub use optimal::{optimal_strategies, OptimalCorrector, OptimalPainter};
pub use scripts::{
    gadget_painter_script, lazy_gadget_painter_script, strong_gadget_corrector, GadgetScript,
    StrongGadgetCorrector,
};
pub use series_parallel::{sp_corrector, sp_erasers, SpCorrector};

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::Graph;
use crate::solver::moves::kept_sets;
use crate::solver::GameState;
use crate::vertex_set::VertexSet;

/// What a player is told besides the position.
#[derive(Clone, Copy, Debug, Default)]
pub struct Turn<'a> {
    /// Strong game: the vertex Painter's move has to contain.
    pub forced: Option<usize>,
    /// Lazy game: colour classes painted but not yet resolved, oldest first.
    pub pending: &'a [VertexSet],
    /// Lazy game: deferrals left. `None` outside the lazy game.
    pub budget: Option<u32>,
}

impl Turn<'_> {
    pub fn classical() -> Turn<'static> {
        Turn::default()
    }

    /// Vertices Painter may paint now.
    pub fn free(&self, state: &GameState) -> VertexSet {
        self.pending
            .iter()
            .fold(state.alive, |free, s| free.difference(*s))
    }

    /// Whether Corrector may defer after `painted` is added to the window.
    pub fn can_defer(&self, state: &GameState, painted: VertexSet) -> bool {
        self.budget.is_some_and(|b| b > 0) && !self.free(state).difference(painted).is_empty()
    }
}

/// Corrector's answer to one Painter move.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Reply {
    /// Erase these vertices of the move; the rest keep the colour.
    Erase(VertexSet),
    /// Lazy game: leave the colour pending.
    Defer,
    /// Lazy game: one erase set per pending colour, oldest first, the newest
    /// move last.
    Resolve(Vec<VertexSet>),
}

pub trait PainterStrategy: Send {
    /// Next move: a non-empty set of uncoloured, non-pending vertices that
    /// contains the forced vertex if there is one.
    fn choose(&mut self, state: &GameState, turn: &Turn) -> Result<VertexSet>;

    /// Called with Corrector's answer to the move just chosen.
    fn observe(&mut self, _state: &GameState, _turn: &Turn, _painted: VertexSet, _reply: &Reply) {}

    /// Summary of internal state; two clones with equal keys must behave
    /// identically from equal positions. Stateless strategies return 0.
    fn memo_key(&self) -> u64 {
        0
    }

    fn clone_box(&self) -> Box<dyn PainterStrategy>;

    /// Remark about the last decision (e.g. leaving a scripted line).
    fn take_note(&mut self) -> Option<String> {
        None
    }
}

pub trait CorrectorStrategy: Send {
    /// Strong game: the vertex Painter must include. Defaults to the
    /// lowest uncoloured vertex.
    fn force(&mut self, state: &GameState) -> Result<usize> {
        state
            .alive
            .first()
            .ok_or_else(|| crate::Error::Strategy("nothing left to force".into()))
    }

    fn reply(&mut self, state: &GameState, turn: &Turn, painted: VertexSet) -> Result<Reply>;

    fn memo_key(&self) -> u64 {
        0
    }

    fn clone_box(&self) -> Box<dyn CorrectorStrategy>;

    fn take_note(&mut self) -> Option<String> {
        None
    }
}

impl Clone for Box<dyn PainterStrategy> {
    fn clone(&self) -> Self {
        self.clone_box()
    }
}

impl Clone for Box<dyn CorrectorStrategy> {
    fn clone(&self) -> Self {
        self.clone_box()
    }
}

/// Some legal erase set for `painted` (keeping as much as possible), or
/// `None` when every reply is illegal.
pub fn any_legal_reply(g: &Graph, state: &GameState, painted: VertexSet) -> Option<VertexSet> {
    kept_sets(g, painted, state.without_erasers(), true)
        .into_iter()
        .next()
        .map(|kept| painted.difference(kept))
}

/// Some legal resolution of a lazy window, or `None`.
pub fn any_legal_resolution(g: &Graph, state: &GameState, window: &[VertexSet]) -> Option<Vec<VertexSet>> {
    window
        .iter()
        .map(|&s| any_legal_reply(g, state, s))
        .collect()
}

/// Painter's fallback when nothing clever is available: everything free.
fn paint_all(state: &GameState, turn: &Turn) -> VertexSet {
    turn.free(state)
}
