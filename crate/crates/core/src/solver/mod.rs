//! Exact decision procedures for the painting games and for off-line list
//! colouring.

mod classical;
mod lazy;
mod listcolor;
pub mod moves;
mod reduce;
mod strong;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EraserMap, Graph};
use crate::vertex_set::VertexSet;

pub use classical::ClassicalSolver;
pub use lazy::{LazyResponse, LazySolver};
pub use listcolor::{
    choice_number, is_choosable, is_list_colorable, ChoosabilityMode, ChoosabilityVerdict,
    Confidence,
};
pub use reduce::{reduce_instance, Reduction};
pub use strong::StrongSolver;

/// Position of a game: uncoloured vertices and their remaining erasers.
/// Erasers of coloured vertices are always zero, so equal positions compare
/// equal.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct GameState {
    pub alive: VertexSet,
    erasers: [u8; 64],
}

impl GameState {
    /// Start position; counts above 255 are clamped (no vertex can use more
    /// than 63).
    pub fn initial(g: &Graph, e: &EraserMap) -> Result<Self> {
        e.check_for(g)?;
        let mut erasers = [0u8; 64];
        for (v, slot) in erasers.iter_mut().enumerate().take(g.n()) {
            *slot = e.get(v).min(255) as u8;
        }
        Ok(GameState {
            alive: g.vertices(),
            erasers,
        })
    }

    pub fn new(alive: VertexSet, erasers: &[u32]) -> Self {
        let mut e = [0u8; 64];
        for v in alive {
            e[v] = erasers.get(v).copied().unwrap_or(0).min(255) as u8;
        }
        GameState { alive, erasers: e }
    }

    #[inline]
    pub fn erasers(&self, v: usize) -> u32 {
        self.erasers[v] as u32
    }

    #[inline]
    pub(crate) fn raw_erasers(&self) -> &[u8; 64] {
        &self.erasers
    }

    pub fn eraser_map(&self, n: usize) -> EraserMap {
        EraserMap((0..n).map(|v| self.erasers(v)).collect())
    }

    /// Uncoloured vertices that have no eraser left.
    #[inline]
    pub fn without_erasers(&self) -> VertexSet {
        self.alive
            .iter()
            .filter(|&v| self.erasers[v] == 0)
            .collect()
    }

    #[inline]
    pub fn is_finished(&self) -> bool {
        self.alive.is_empty()
    }

    /// Position after `painted` is painted and `erased` is erased; the rest
    /// of `painted` becomes coloured. Legality is the caller's business.
    #[inline]
    pub fn after(&self, painted: VertexSet, erased: VertexSet) -> GameState {
        let mut next = *self;
        for v in painted.difference(erased) {
            next.erasers[v] = 0;
        }
        next.alive = self.alive.difference(painted.difference(erased));
        for v in erased {
            next.erasers[v] -= 1;
        }
        next
    }

    /// Restriction to a subset of the uncoloured vertices.
    pub fn restricted(&self, keep: VertexSet) -> GameState {
        let mut next = *self;
        next.alive = self.alive.intersection(keep);
        for v in self.alive.difference(keep) {
            next.erasers[v] = 0;
        }
        next
    }

    /// Why `erased` is not a legal answer to `painted`, if it is not.
    pub fn reply_violation(
        &self,
        g: &Graph,
        painted: VertexSet,
        erased: VertexSet,
    ) -> Option<String> {
        if !erased.is_subset(painted) {
            return Some(format!("erase set {erased} not inside painted set {painted}"));
        }
        if let Some(v) = erased.iter().find(|&v| self.erasers[v] == 0) {
            return Some(format!("vertex {v} has no eraser left"));
        }
        let kept = painted.difference(erased);
        if !g.is_independent(kept) {
            return Some(format!("kept set {kept} is not independent"));
        }
        None
    }

    /// Why `painted` is not a legal Painter move, if it is not.
    pub fn move_violation(&self, painted: VertexSet, forced: Option<usize>) -> Option<String> {
        if painted.is_empty() {
            return Some("empty painter move".into());
        }
        if !painted.is_subset(self.alive) {
            return Some(format!("painted set {painted} includes coloured vertices"));
        }
        if let Some(u) = forced {
            if !painted.contains(u) {
                return Some(format!("painted set {painted} omits forced vertex {u}"));
            }
        }
        None
    }
}

impl fmt::Debug for GameState {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let er: Vec<String> = self
            .alive
            .iter()
            .map(|v| format!("{v}:{}", self.erasers[v]))
            .collect();
        write!(f, "GameState[{}]", er.join(" "))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Winner {
    CorrectorWins,
    PainterWins,
}

impl Winner {
    pub fn from_corrector(wins: bool) -> Self {
        if wins {
            Winner::CorrectorWins
        } else {
            Winner::PainterWins
        }
    }

    pub fn corrector_wins(self) -> bool {
        self == Winner::CorrectorWins
    }
}

impl fmt::Display for Winner {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Winner::CorrectorWins => "CorrectorWins",
            Winner::PainterWins => "PainterWins",
        })
    }
}

/// A first move of the winning side, legal in the root position.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Witness {
    PainterMove(VertexSet),
    ForcedVertex(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub winner: Winner,
    pub witness: Option<Witness>,
}

impl Verdict {
    pub fn corrector_wins(&self) -> bool {
        self.winner.corrector_wins()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SolveOptions {
    /// Painter only plays sets inducing connected subgraphs (classical only).
    pub prune_connected: bool,
    /// Delete vertices with at least as many erasers as uncoloured neighbours.
    pub prune_good_degree: bool,
    /// Solve connected components independently (classical only).
    pub split_components: bool,
    /// Corrector only keeps inclusion-maximal independent sets.
    pub maximal_replies: bool,
    /// Hard cap on memo entries; exceeding it is an error.
    pub memo_limit: usize,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions {
            prune_connected: true,
            prune_good_degree: true,
            split_components: true,
            maximal_replies: true,
            memo_limit: 50_000_000,
        }
    }
}

impl SolveOptions {
    /// The bare recursive definition with every reduction switched off.
    pub fn unpruned() -> Self {
        SolveOptions {
            prune_connected: false,
            prune_good_degree: false,
            split_components: false,
            maximal_replies: false,
            ..Default::default()
        }
    }
}

/// Packs a position into 192 bits: the uncoloured mask plus a fixed-width
/// eraser field per vertex.
#[derive(Clone, Copy, Debug)]
pub(crate) struct KeyPacker {
    n: usize,
    width: u32,
}

pub(crate) type StateKey = (u64, u128);

impl KeyPacker {
    pub(crate) fn new(n: usize, max_erasers: u32) -> Result<Self> {
        let max = max_erasers.min(255);
        let width = 32 - max.leading_zeros();
        let bits = n * width as usize;
        if bits > 128 {
            return Err(Error::StateEncoding { bits });
        }
        Ok(KeyPacker { n, width })
    }

    /// Largest eraser count representable.
    pub(crate) fn max_value(&self) -> u32 {
        (1u32 << self.width) - 1
    }

    /// Rejects positions with more erasers than the packer was sized for.
    pub(crate) fn check(&self, state: &GameState) -> Result<()> {
        match state.alive.iter().find(|&v| state.erasers(v) > self.max_value()) {
            Some(v) => Err(Error::InvalidParameter(format!(
                "vertex {v} has {} erasers, above this solver's bound {}",
                state.erasers(v),
                self.max_value()
            ))),
            None => Ok(()),
        }
    }

    #[inline]
    pub(crate) fn key(&self, alive: u64, er: &[u8; 64]) -> StateKey {
        let mut packed = 0u128;
        if self.width > 0 {
            let mut rest = alive;
            while rest != 0 {
                let v = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                packed |= (er[v] as u128) << (v as u32 * self.width);
            }
        }
        debug_assert!(self.n <= 64);
        (alive, packed)
    }
}

/// Deletes every vertex that has at least as many erasers as uncoloured
/// neighbours, until none is left; such vertices never decide the game.
pub(crate) fn reduce_good_degree(g: &Graph, state: &mut GameState) {
    loop {
        let removable: VertexSet = state
            .alive
            .iter()
            .filter(|&v| state.erasers[v] as usize >= g.degree_in(v, state.alive))
            .collect();
        if removable.is_empty() {
            return;
        }
        // Removing one at a time keeps each step covered by the one-vertex rule;
        // removing them all at once is equivalent because degrees only drop.
        *state = state.restricted(state.alive.difference(removable));
    }
}

/// Decides whether Corrector wins the classical game.
pub fn is_paintable(g: &Graph, e: &EraserMap, opts: SolveOptions) -> Result<Verdict> {
    let mut solver = ClassicalSolver::new(g, e.max(), opts)?;
    let root = GameState::initial(g, e)?;
    let wins = solver.corrector_wins(&root)?;
    let witness = if wins {
        None
    } else {
        solver.winning_painter_move(&root)?.map(Witness::PainterMove)
    };
    Ok(Verdict {
        winner: Winner::from_corrector(wins),
        witness,
    })
}

/// Least `k` such that `k - 1` erasers on every vertex let Corrector win.
pub fn paint_number(g: &Graph) -> Result<usize> {
    if g.n() == 0 {
        return Ok(0);
    }
    let upper = crate::graph::degeneracy(g).k as u32;
    let mut solver = ClassicalSolver::new(g, upper, SolveOptions::default())?;
    for erasers in 0..=upper {
        let root = GameState::initial(g, &EraserMap::uniform(g.n(), erasers))?;
        if solver.corrector_wins(&root)? {
            return Ok(erasers as usize + 1);
        }
    }
    unreachable!("degeneracy + 1 erasers per vertex always suffice")
}

/// Decides the strong game, where Corrector names a vertex every Painter
/// move must include.
pub fn is_strong_paintable(g: &Graph, e: &EraserMap) -> Result<Verdict> {
    let mut solver = StrongSolver::new(g, e.max(), SolveOptions::default())?;
    let root = GameState::initial(g, e)?;
    let wins = solver.corrector_wins(&root)?;
    let witness = if wins {
        solver.winning_force(&root)?.map(Witness::ForcedVertex)
    } else {
        None
    };
    Ok(Verdict {
        winner: Winner::from_corrector(wins),
        witness,
    })
}

/// Decides the lazy game with at most `budget` deferrals.
pub fn is_lazy_paintable(g: &Graph, e: &EraserMap, budget: u32) -> Result<Verdict> {
    let mut solver = LazySolver::new(g, e.max(), SolveOptions::default())?;
    let root = GameState::initial(g, e)?;
    let wins = solver.corrector_wins(&root, &[], budget)?;
    let witness = if wins {
        None
    } else {
        solver
            .winning_painter_move(&root, &[], budget)?
            .map(Witness::PainterMove)
    };
    Ok(Verdict {
        winner: Winner::from_corrector(wins),
        witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::gen_named;

    fn named(name: &str, params: &[usize]) -> (Graph, EraserMap) {
        gen_named(name, params).unwrap()
    }

    #[test]
    fn state_transitions() {
        let (g, _) = named("path", &[3]);
        let s = GameState::initial(&g, &EraserMap(vec![1, 0, 2])).unwrap();
        let next = s.after(g.vertices(), [0, 2].into_iter().collect());
        assert_eq!(next.alive, [0, 2].into_iter().collect());
        assert_eq!((next.erasers(0), next.erasers(1), next.erasers(2)), (0, 0, 1));
        assert!(s.reply_violation(&g, g.vertices(), VertexSet::singleton(1)).is_some());
        assert!(s.reply_violation(&g, g.vertices(), VertexSet::EMPTY).is_some());
        assert!(s.reply_violation(&g, g.vertices(), [0, 2].into_iter().collect()).is_none());
        assert!(s.move_violation(VertexSet::EMPTY, None).is_some());
        assert!(s.move_violation(VertexSet::singleton(0), Some(1)).is_some());
    }

    #[test]
    fn key_packing_is_injective_on_small_states() {
        let p = KeyPacker::new(3, 2).unwrap();
        let mut seen = std::collections::HashSet::new();
        for alive in 0u64..8 {
            for code in 0..27u32 {
                let mut er = [0u8; 64];
                let mut c = code;
                for (v, slot) in er.iter_mut().enumerate().take(3) {
                    if alive >> v & 1 == 1 {
                        *slot = (c % 3) as u8;
                    }
                    c /= 3;
                }
                seen.insert(p.key(alive, &er));
            }
        }
        // Each alive mask with k members has 3^k distinct eraser profiles.
        assert_eq!(seen.len(), 64);
        assert!(KeyPacker::new(64, 3).is_ok());
        assert!(KeyPacker::new(64, 4).is_err());
    }
}
