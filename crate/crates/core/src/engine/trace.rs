use std::io::{BufRead, Write};

use super::{apply, check_reply, reply_exists, Action, Effect, End, Model, Outcome, Round, Trace};
use crate::error::{Error, Result};
use crate::graph::{EraserMap, Graph};
use crate::solver::{GameState, Winner};
use crate::strategy::{Reply, Turn};
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceCheck {
    /// First illegal round (1-based; 0 for the final record) and the reason.
    pub violation: Option<(usize, String)>,
    /// Winner implied by replaying the rounds, when the trace is legal.
    pub winner: Option<Winner>,
}

impl TraceCheck {
    pub fn is_valid(&self) -> bool {
        self.violation.is_none()
    }
}

/// Replays `trace` against the rules of its model.
pub fn validate_trace(g: &Graph, e: &EraserMap, trace: &Trace) -> TraceCheck {
    match replay(g, e, trace) {
        Ok(winner) => TraceCheck {
            violation: None,
            winner: Some(winner),
        },
        Err(v) => TraceCheck {
            violation: Some(v),
            winner: None,
        },
    }
}

fn replay(g: &Graph, e: &EraserMap, trace: &Trace) -> std::result::Result<Winner, (usize, String)> {
    let mut state = GameState::initial(g, e).map_err(|err| (0, err.to_string()))?;
    let model = trace.outcome.model;
    let mut budget = match model {
        Model::Lazy { budget } => Some(budget),
        _ => None,
    };
    let mut pending: Vec<(u32, VertexSet)> = Vec::new();
    let mut last_colour = 0;
    let mut deferrals = 0;
    let mut stuck = false;
    for r in &trace.rounds {
        let fail = |why: String| Err((r.round, why));
        if stuck {
            return fail("round after Corrector was stuck".into());
        }
        if state.is_finished() {
            return fail("round after every vertex was coloured".into());
        }
        if r.colour <= last_colour {
            return fail(format!("colour {} reused or out of order", r.colour));
        }
        last_colour = r.colour;
        match (model, r.forced) {
            (Model::Strong, Some(u)) if state.alive.contains(u) => {}
            (Model::Strong, Some(u)) => return fail(format!("forced vertex {u} is coloured")),
            (Model::Strong, None) => return fail("no forced vertex in the strong game".into()),
            (_, Some(_)) => return fail("forced vertex outside the strong game".into()),
            (_, None) => {}
        }
        let window: Vec<VertexSet> = pending.iter().map(|&(_, s)| s).collect();
        let turn = Turn {
            forced: r.forced,
            pending: &window,
            budget,
        };
        if let Some(why) = state.move_violation(r.painted, r.forced) {
            return fail(why);
        }
        if !r.painted.is_subset(turn.free(&state)) {
            return fail(format!("painted set {} includes pending vertices", r.painted));
        }
        let reply = match &r.action {
            Action::Stuck => {
                if reply_exists(g, &state, &turn, r.painted) {
                    return fail("marked stuck although a legal reply exists".into());
                }
                stuck = true;
                continue;
            }
            Action::Erase { erased } => Reply::Erase(*erased),
            Action::Defer => Reply::Defer,
            Action::Resolve { resolved } => {
                let expected = pending.iter().map(|&(c, _)| c).chain([r.colour]);
                if !resolved.iter().map(|x| x.colour).eq(expected) {
                    return fail("resolved colours do not match the pending window".into());
                }
                Reply::Resolve(resolved.iter().map(|x| x.erased).collect())
            }
        };
        let effect = match check_reply(g, &state, &turn, r.painted, &reply) {
            Ok(eff) => eff,
            Err(why) => return fail(why),
        };
        let mut full = window.clone();
        full.push(r.painted);
        state = apply(&state, &full, &effect);
        if let Effect::Defer = effect {
            pending.push((r.colour, r.painted));
            budget = budget.map(|b| b - 1);
            deferrals += 1;
        } else {
            pending.clear();
        }
    }
    let fail = |why: &str| Err((0, why.to_string()));
    if deferrals != trace.outcome.deferrals {
        return fail("deferral count does not match the rounds");
    }
    let winner = match &trace.outcome.end {
        End::AllColoured if state.is_finished() => Winner::CorrectorWins,
        End::AllColoured => return fail("game ended with uncoloured vertices"),
        End::NoLegalReply if stuck => Winner::PainterWins,
        End::NoLegalReply => return fail("no stuck round recorded"),
        End::Forfeit { side, .. } if !stuck && !state.is_finished() => match side {
            super::Side::Painter => Winner::CorrectorWins,
            super::Side::Corrector => Winner::PainterWins,
        },
        End::Forfeit { .. } => return fail("forfeit after the game was decided"),
    };
    if winner != trace.outcome.winner {
        return fail("recorded winner contradicts the rounds");
    }
    Ok(winner)
}

/// Writes one JSON object per round, then one for the outcome.
pub fn write_trace(trace: &Trace, mut out: impl Write) -> Result<()> {
    let io = |e: std::io::Error| Error::InvalidParameter(format!("writing trace: {e}"));
    for r in &trace.rounds {
        let line = serde_json::to_string(r).expect("rounds serialize");
        writeln!(out, "{line}").map_err(io)?;
    }
    let line = serde_json::to_string(&trace.outcome).expect("outcome serializes");
    writeln!(out, "{line}").map_err(io)
}

pub fn read_trace(input: impl BufRead) -> Result<Trace> {
    let mut rounds = Vec::new();
    let mut outcome = None;
    for (i, line) in input.lines().enumerate() {
        let parse = |message: String| Error::Parse {
            line: i + 1,
            message,
        };
        let line = line.map_err(|e| parse(e.to_string()))?;
        if line.trim().is_empty() {
            continue;
        }
        if outcome.is_some() {
            return Err(parse("record after the outcome".into()));
        }
        let value: serde_json::Value = serde_json::from_str(&line).map_err(|e| parse(e.to_string()))?;
        // A forfeit outcome carries a `round` field too; only the outcome has a winner.
        if value.get("winner").is_some() {
            outcome = Some(serde_json::from_value::<Outcome>(value).map_err(|e| parse(e.to_string()))?);
        } else {
            rounds.push(serde_json::from_value::<Round>(value).map_err(|e| parse(e.to_string()))?);
        }
    }
    let outcome = outcome.ok_or(Error::Parse {
        line: 0,
        message: "missing outcome record".into(),
    })?;
    Ok(Trace { rounds, outcome })
}
