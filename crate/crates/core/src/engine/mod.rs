//! Referees for the classical, strong and lazy games.

mod exhaust;
mod trace;

pub use exhaust::{exhaust, exhaust_with, ExhaustOptions, ExhaustReport, Fixed};
pub use trace::{read_trace, validate_trace, write_trace, TraceCheck};

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{EraserMap, Graph};
use crate::solver::{GameState, Winner};
use crate::strategy::{CorrectorStrategy, PainterStrategy, Reply, Turn};
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub enum Model {
    Classical,
    /// Corrector names a vertex Painter's next move must contain.
    Strong,
    /// Corrector may defer up to `budget` times in total.
    Lazy { budget: u32 },
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Model::Classical => write!(f, "classical"),
            Model::Strong => write!(f, "strong"),
            Model::Lazy { budget } => write!(f, "lazy:{budget}"),
        }
    }
}

impl FromStr for Model {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "classical" => Ok(Model::Classical),
            "strong" => Ok(Model::Strong),
            _ => s
                .strip_prefix("lazy:")
                .and_then(|b| b.parse().ok())
                .map(|budget| Model::Lazy { budget })
                .ok_or_else(|| {
                    Error::InvalidParameter(format!(
                        "unknown model {s:?}; expected classical, strong or lazy:<budget>"
                    ))
                }),
        }
    }
}

impl From<Model> for String {
    fn from(m: Model) -> String {
        m.to_string()
    }
}

impl TryFrom<String> for Model {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Painter,
    Corrector,
}

/// Erasures applied to one colour of a lazy window.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Resolution {
    pub colour: u32,
    pub erased: VertexSet,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "action", rename_all = "snake_case")]
pub enum Action {
    Erase { erased: VertexSet },
    Defer,
    /// Every pending colour resolved at once, oldest first.
    Resolve { resolved: Vec<Resolution> },
    /// Corrector had no legal answer.
    Stuck,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Round {
    pub round: usize,
    pub colour: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub forced: Option<usize>,
    pub painted: VertexSet,
    #[serde(flatten)]
    pub action: Action,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "end", rename_all = "snake_case")]
pub enum End {
    AllColoured,
    NoLegalReply,
    /// `side` produced an illegal move (or failed) in round `round`.
    Forfeit { side: Side, round: usize, reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Outcome {
    pub model: Model,
    pub winner: Winner,
    #[serde(flatten)]
    pub end: End,
    pub deferrals: u32,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Trace {
    pub rounds: Vec<Round>,
    pub outcome: Outcome,
}

impl Trace {
    pub fn winner(&self) -> Winner {
        self.outcome.winner
    }
}

pub fn play_classical(
    g: &Graph,
    e: &EraserMap,
    painter: &mut dyn PainterStrategy,
    corrector: &mut dyn CorrectorStrategy,
) -> Result<Trace> {
    play(g, e, Model::Classical, painter, corrector)
}

pub fn play_strong(
    g: &Graph,
    e: &EraserMap,
    painter: &mut dyn PainterStrategy,
    corrector: &mut dyn CorrectorStrategy,
) -> Result<Trace> {
    play(g, e, Model::Strong, painter, corrector)
}

pub fn play_lazy(
    g: &Graph,
    e: &EraserMap,
    painter: &mut dyn PainterStrategy,
    corrector: &mut dyn CorrectorStrategy,
    budget: u32,
) -> Result<Trace> {
    play(g, e, Model::Lazy { budget }, painter, corrector)
}

/// What a reply does to the position, once checked against the rules.
pub(crate) enum Effect {
    Erase(VertexSet),
    Defer,
    Resolve(Vec<VertexSet>),
}

/// Why `reply` is illegal, or what it does.
pub(crate) fn check_reply(
    g: &Graph,
    state: &GameState,
    turn: &Turn,
    painted: VertexSet,
    reply: &Reply,
) -> std::result::Result<Effect, String> {
    let lazy = turn.budget.is_some();
    match reply {
        Reply::Erase(e) if !lazy || turn.pending.is_empty() => {
            match state.reply_violation(g, painted, *e) {
                Some(why) => Err(why),
                None if lazy => Ok(Effect::Resolve(vec![*e])),
                None => Ok(Effect::Erase(*e)),
            }
        }
        Reply::Erase(_) => Err("plain erase set while colours are pending".into()),
        Reply::Defer if !lazy => Err("deferral outside the lazy game".into()),
        Reply::Defer if turn.can_defer(state, painted) => Ok(Effect::Defer),
        Reply::Defer => Err("deferral not allowed: budget spent or nothing left to paint".into()),
        Reply::Resolve(_) if !lazy => Err("resolution outside the lazy game".into()),
        Reply::Resolve(sets) => {
            let window: Vec<VertexSet> = turn.pending.iter().copied().chain([painted]).collect();
            if sets.len() != window.len() {
                return Err(format!(
                    "{} erase sets for {} pending colours",
                    sets.len(),
                    window.len()
                ));
            }
            for (s, e) in window.iter().zip(sets) {
                if let Some(why) = state.reply_violation(g, *s, *e) {
                    return Err(why);
                }
            }
            Ok(Effect::Resolve(sets.clone()))
        }
    }
}

/// Whether Corrector has any legal answer at all.
pub(crate) fn reply_exists(g: &Graph, state: &GameState, turn: &Turn, painted: VertexSet) -> bool {
    let zero = state.without_erasers();
    let resolvable = turn
        .pending
        .iter()
        .chain([&painted])
        .all(|s| g.is_independent(s.intersection(zero)));
    resolvable || turn.can_defer(state, painted)
}

/// Position after an answer; returns the new state and whether the window
/// closed.
pub(crate) fn apply(state: &GameState, window: &[VertexSet], effect: &Effect) -> GameState {
    match effect {
        Effect::Erase(e) => state.after(window[window.len() - 1], *e),
        Effect::Defer => *state,
        Effect::Resolve(sets) => {
            let painted = window.iter().fold(VertexSet::EMPTY, |a, s| a.union(*s));
            let erased = sets.iter().fold(VertexSet::EMPTY, |a, s| a.union(*s));
            state.after(painted, erased)
        }
    }
}

fn join_notes(a: Option<String>, b: Option<String>) -> Option<String> {
    match (a, b) {
        (Some(a), Some(b)) => Some(format!("{a}; {b}")),
        (a, b) => a.or(b),
    }
}

/// Referees one game. Illegal output (or an error) from a strategy forfeits
/// the game for that side.
pub fn play(
    g: &Graph,
    e: &EraserMap,
    model: Model,
    painter: &mut dyn PainterStrategy,
    corrector: &mut dyn CorrectorStrategy,
) -> Result<Trace> {
    let mut state = GameState::initial(g, e)?;
    let mut budget = match model {
        Model::Lazy { budget } => Some(budget),
        _ => None,
    };
    let mut pending: Vec<(u32, VertexSet)> = Vec::new();
    let mut rounds = Vec::new();
    let mut deferrals = 0;
    // Every paint event either colours a vertex or spends one of its erasers.
    let limit: u64 = e.total() + g.n() as u64;
    let finish = |rounds, winner, end, deferrals| {
        Ok(Trace {
            rounds,
            outcome: Outcome {
                model,
                winner,
                end,
                deferrals,
            },
        })
    };
    let forfeit = |side, round, reason: String| End::Forfeit { side, round, reason };
    for colour in 1u32.. {
        let round = colour as usize;
        if state.is_finished() {
            return finish(rounds, Winner::CorrectorWins, End::AllColoured, deferrals);
        }
        if round as u64 > limit {
            return Err(Error::Strategy(format!("game exceeded {limit} rounds")));
        }
        let forced = if model == Model::Strong {
            match corrector.force(&state) {
                Ok(u) if state.alive.contains(u) => Some(u),
                Ok(u) => {
                    let end = forfeit(Side::Corrector, round, format!("forced vertex {u} is not uncoloured"));
                    return finish(rounds, Winner::PainterWins, end, deferrals);
                }
                Err(err) => {
                    return finish(rounds, Winner::PainterWins, forfeit(Side::Corrector, round, err.to_string()), deferrals);
                }
            }
        } else {
            None
        };
        let window: Vec<VertexSet> = pending.iter().map(|&(_, s)| s).collect();
        let turn = Turn {
            forced,
            pending: &window,
            budget,
        };
        let painted = match painter.choose(&state, &turn) {
            Ok(p) => p,
            Err(err) => {
                return finish(rounds, Winner::CorrectorWins, forfeit(Side::Painter, round, err.to_string()), deferrals);
            }
        };
        let violation = state.move_violation(painted, forced).or_else(|| {
            (!painted.is_subset(turn.free(&state)))
                .then(|| format!("painted set {painted} includes pending vertices"))
        });
        if let Some(why) = violation {
            return finish(rounds, Winner::CorrectorWins, forfeit(Side::Painter, round, why), deferrals);
        }
        let mut note = painter.take_note();
        let record = |action, note| Round {
            round,
            colour,
            forced,
            painted,
            action,
            note,
        };
        if !reply_exists(g, &state, &turn, painted) {
            rounds.push(record(Action::Stuck, note));
            return finish(rounds, Winner::PainterWins, End::NoLegalReply, deferrals);
        }
        let reply = corrector.reply(&state, &turn, painted);
        note = join_notes(note, corrector.take_note());
        let effect = reply
            .as_ref()
            .map_err(|e| e.to_string())
            .and_then(|r| check_reply(g, &state, &turn, painted, r));
        let (reply, effect) = match (reply, effect) {
            (Ok(r), Ok(eff)) => (r, eff),
            (_, Err(why)) => {
                return finish(rounds, Winner::PainterWins, forfeit(Side::Corrector, round, why), deferrals);
            }
            (Err(_), Ok(_)) => unreachable!("effect derived from the reply"),
        };
        painter.observe(&state, &turn, painted, &reply);
        note = join_notes(note, painter.take_note());
        let mut full_window = window.clone();
        full_window.push(painted);
        let action = match &effect {
            Effect::Erase(e) => Action::Erase { erased: *e },
            Effect::Defer => Action::Defer,
            Effect::Resolve(sets) => Action::Resolve {
                resolved: pending
                    .iter()
                    .map(|&(c, _)| c)
                    .chain([colour])
                    .zip(sets)
                    .map(|(colour, &erased)| Resolution { colour, erased })
                    .collect(),
            },
        };
        state = apply(&state, &full_window, &effect);
        match effect {
            Effect::Defer => {
                pending.push((colour, painted));
                deferrals += 1;
                budget = budget.map(|b| b - 1);
            }
            _ => pending.clear(),
        }
        rounds.push(record(action, note));
    }
    unreachable!("colour counter overflow")
}
