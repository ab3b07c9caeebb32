use rustc_hash::FxHashMap;

use super::{apply, check_reply, reply_exists, Effect, Model};
use crate::error::{Error, Result};
use crate::graph::{EraserMap, Graph};
use crate::solver::{GameState, Winner};
use crate::strategy::{CorrectorStrategy, PainterStrategy, Reply, Turn};
use crate::vertex_set::VertexSet;

/// The side whose strategy is held fixed while the other side is
/// enumerated.
pub enum Fixed {
    Painter(Box<dyn PainterStrategy>),
    Corrector(Box<dyn CorrectorStrategy>),
}

#[derive(Clone, Copy, Debug)]
pub struct ExhaustOptions {
    /// Largest graph accepted for the classical and strong games.
    pub max_vertices: usize,
    /// Largest graph accepted for the lazy game.
    pub max_vertices_lazy: usize,
    pub max_positions: usize,
}

impl Default for ExhaustOptions {
    fn default() -> Self {
        ExhaustOptions {
            max_vertices: 8,
            max_vertices_lazy: 10,
            max_positions: 20_000_000,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExhaustReport {
    /// Whether the fixed strategy beats every opponent.
    pub fixed_side_wins: bool,
    /// Winner under best opposition to the fixed strategy.
    pub winner: Winner,
    /// Distinct positions examined.
    pub positions: usize,
    /// A line of opponent choices that beats the fixed strategy, if any.
    /// It may stop early at a position already refuted elsewhere.
    pub refutation: Vec<String>,
}

type Visitor<'a> = dyn FnMut(&GameState, VertexSet, &Reply) + 'a;

/// Certifies a strategy by trying every legal opponent choice at every
/// position.
pub fn exhaust(g: &Graph, e: &EraserMap, model: Model, fixed: Fixed) -> Result<ExhaustReport> {
    exhaust_with(g, e, model, fixed, ExhaustOptions::default(), None)
}

/// [`exhaust`] with limits and a callback that sees every answer the fixed
/// Corrector gives, or every answer tried against the fixed Painter.
pub fn exhaust_with(
    g: &Graph,
    e: &EraserMap,
    model: Model,
    fixed: Fixed,
    opts: ExhaustOptions,
    visitor: Option<&mut Visitor<'_>>,
) -> Result<ExhaustReport> {
    let limit = match model {
        Model::Lazy { .. } => opts.max_vertices_lazy,
        _ => opts.max_vertices,
    };
    if g.n() > limit {
        return Err(Error::SizeLimit { n: g.n(), limit });
    }
    let state = GameState::initial(g, e)?;
    let budget = match model {
        Model::Lazy { budget } => Some(budget),
        _ => None,
    };
    let mut search = Search {
        g,
        model,
        opts,
        memo: FxHashMap::default(),
        visitor,
        line: Vec::new(),
    };
    let (fixed_side_wins, winner) = match fixed {
        Fixed::Painter(p) => {
            let w = search.painter(state, &[], budget, p)?;
            (w, Winner::from_corrector(!w))
        }
        Fixed::Corrector(c) => {
            let w = search.corrector(state, &[], budget, c)?;
            (w, Winner::from_corrector(w))
        }
    };
    search.line.reverse();
    Ok(ExhaustReport {
        fixed_side_wins,
        winner,
        positions: search.memo.len(),
        refutation: if fixed_side_wins { Vec::new() } else { search.line },
    })
}

type Key = (GameState, Vec<u64>, Option<u32>, u64);

struct Search<'a, 'v> {
    g: &'a Graph,
    model: Model,
    opts: ExhaustOptions,
    memo: FxHashMap<Key, bool>,
    visitor: Option<&'a mut Visitor<'v>>,
    /// Opponent choices on the refuting line, innermost first.
    line: Vec<String>,
}

impl Search<'_, '_> {
    fn remember(&mut self, key: Key, value: bool) -> Result<bool> {
        if self.memo.len() >= self.opts.max_positions {
            return Err(Error::MemoLimit(self.opts.max_positions));
        }
        self.memo.insert(key, value);
        Ok(value)
    }

    fn visit(&mut self, state: &GameState, painted: VertexSet, reply: &Reply) {
        if let Some(v) = self.visitor.as_mut() {
            v(state, painted, reply);
        }
    }

    fn refuted(&mut self, step: String) -> bool {
        self.line.push(step);
        false
    }

    /// Every legal answer to `painted`.
    fn replies(&self, state: &GameState, turn: &Turn, painted: VertexSet) -> Vec<Reply> {
        let mut out = Vec::new();
        if turn.can_defer(state, painted) {
            out.push(Reply::Defer);
        }
        let erase_sets = |s: VertexSet| -> Vec<VertexSet> {
            s.intersection(state.alive)
                .subsets()
                .filter(|&e| state.reply_violation(self.g, s, e).is_none())
                .collect()
        };
        if turn.budget.is_none() {
            out.extend(erase_sets(painted).into_iter().map(Reply::Erase));
            return out;
        }
        let mut combos: Vec<Vec<VertexSet>> = vec![Vec::new()];
        for &s in turn.pending.iter().chain([&painted]) {
            let options = erase_sets(s);
            combos = combos
                .into_iter()
                .flat_map(|c| {
                    options.iter().map(move |&e| {
                        let mut c = c.clone();
                        c.push(e);
                        c
                    })
                })
                .collect();
        }
        out.extend(combos.into_iter().map(Reply::Resolve));
        out
    }

    fn next(
        &self,
        state: &GameState,
        pending: &[VertexSet],
        budget: Option<u32>,
        painted: VertexSet,
        effect: &Effect,
    ) -> (GameState, Vec<VertexSet>, Option<u32>) {
        let mut window = pending.to_vec();
        window.push(painted);
        let next = apply(state, &window, effect);
        match effect {
            Effect::Defer => (next, window, budget.map(|b| b - 1)),
            _ => (next, Vec::new(), budget),
        }
    }

    fn key(state: GameState, pending: &[VertexSet], budget: Option<u32>, strategy: u64) -> Key {
        (state, pending.iter().map(|s| s.bits()).collect(), budget, strategy)
    }

    /// Whether the fixed Painter wins from here against everything.
    fn painter(
        &mut self,
        state: GameState,
        pending: &[VertexSet],
        budget: Option<u32>,
        painter: Box<dyn PainterStrategy>,
    ) -> Result<bool> {
        if state.is_finished() {
            return Ok(self.refuted("all vertices coloured".into()));
        }
        let key = Self::key(state, pending, budget, painter.memo_key());
        if let Some(&v) = self.memo.get(&key) {
            return Ok(v);
        }
        let forcings: Vec<Option<usize>> = match self.model {
            Model::Strong => state.alive.iter().map(Some).collect(),
            _ => vec![None],
        };
        for forced in forcings {
            let turn = Turn {
                forced,
                pending,
                budget,
            };
            let mut p = painter.clone_box();
            let painted = match p.choose(&state, &turn) {
                Ok(m) => m,
                Err(err) => return self.lose(key, forced, format!("painter failed: {err}")),
            };
            let illegal = state
                .move_violation(painted, forced)
                .or_else(|| (!painted.is_subset(turn.free(&state))).then(|| "pending vertex painted".into()));
            if let Some(why) = illegal {
                return self.lose(key, forced, format!("painter illegal: {why}"));
            }
            for reply in self.replies(&state, &turn, painted) {
                self.visit(&state, painted, &reply);
                let effect = match check_reply(self.g, &state, &turn, painted, &reply) {
                    Ok(e) => e,
                    Err(why) => unreachable!("enumerated reply is illegal: {why}"),
                };
                let mut child = p.clone_box();
                child.observe(&state, &turn, painted, &reply);
                let (next, window, b) = self.next(&state, pending, budget, painted, &effect);
                if !self.painter(next, &window, b, child)? {
                    let step = match forced {
                        Some(u) => format!("force {u}; painter {painted}; corrector {reply:?}"),
                        None => format!("painter {painted}; corrector {reply:?}"),
                    };
                    self.line.push(step);
                    return self.remember(key, false);
                }
            }
        }
        self.remember(key, true)
    }

    /// Records a loss of the fixed side at `key`.
    fn lose(&mut self, key: Key, forced: Option<usize>, why: String) -> Result<bool> {
        self.line.push(match forced {
            Some(u) => format!("force {u}; {why}"),
            None => why,
        });
        self.remember(key, false)
    }

    /// Whether the fixed Corrector wins from here against everything.
    fn corrector(
        &mut self,
        state: GameState,
        pending: &[VertexSet],
        budget: Option<u32>,
        corrector: Box<dyn CorrectorStrategy>,
    ) -> Result<bool> {
        if state.is_finished() {
            return Ok(true);
        }
        let key = Self::key(state, pending, budget, corrector.memo_key());
        if let Some(&v) = self.memo.get(&key) {
            return Ok(v);
        }
        let mut c = corrector;
        let forced = match self.model {
            Model::Strong => match c.force(&state) {
                Ok(u) if state.alive.contains(u) => Some(u),
                Ok(u) => return self.lose(key, None, format!("corrector forced coloured vertex {u}")),
                Err(err) => return self.lose(key, None, format!("corrector failed to force: {err}")),
            },
            _ => None,
        };
        let turn = Turn {
            forced,
            pending,
            budget,
        };
        let free = turn.free(&state);
        let moves: Vec<VertexSet> = match forced {
            Some(u) => free.without(u).subsets().map(|s| s.with(u)).collect(),
            None => free.nonempty_subsets().collect(),
        };
        for painted in moves {
            if !reply_exists(self.g, &state, &turn, painted) {
                return self.lose(key, None, format!("painter {painted}; no legal reply"));
            }
            let mut child = c.clone_box();
            let reply = match child.reply(&state, &turn, painted) {
                Ok(r) => r,
                Err(err) => return self.lose(key, None, format!("painter {painted}; corrector failed: {err}")),
            };
            self.visit(&state, painted, &reply);
            let effect = match check_reply(self.g, &state, &turn, painted, &reply) {
                Ok(e) => e,
                Err(why) => {
                    return self.lose(key, None, format!("painter {painted}; corrector illegal {reply:?}: {why}"))
                }
            };
            let (next, window, b) = self.next(&state, pending, budget, painted, &effect);
            if !self.corrector(next, &window, b, child)? {
                self.line.push(format!("painter {painted}; corrector {reply:?}"));
                return self.remember(key, false);
            }
        }
        self.remember(key, true)
    }
}
