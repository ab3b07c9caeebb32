use std::hash::{Hash, Hasher};

use rustc_hash::FxHasher;

use super::optimal::{OptimalCorrector, OptimalPainter};
use super::{any_legal_reply, CorrectorStrategy, PainterStrategy, Reply, Turn};
use crate::error::{Error, Result};
use crate::graph::gadget::{V1, V2, V3, V4, V5, V6, X1, X2, Y1};
use crate::graph::{gen_named, EraserMap, Graph};
use crate::solver::GameState;
use crate::vertex_set::VertexSet;

fn set(vs: &[usize]) -> VertexSet {
    vs.iter().copied().collect()
}

/// Checks that `g` is the gadget or one of its subdivisions.
fn check_gadget(g: &Graph) -> Result<()> {
    let expected = match g.n() {
        8 => gen_named("schauz_gadget", &[])?.0,
        n if n > 8 => gen_named("subdivided_gadget", &[n])?.0,
        _ => return Err(Error::Strategy("not the gadget instance".into())),
    };
    if (0..g.n()).any(|v| g.neighbours(v) != expected.neighbours(v)) {
        return Err(Error::Strategy("not the gadget instance".into()));
    }
    Ok(())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Stage {
    Opening,
    /// Both openers were erased; they are now adjacent with no erasers.
    Replay,
    /// `x1` was erased: walk the fixed line, step `i`.
    LineOne(usize),
    /// `x2` was erased: pair it with `v5`.
    LineTwoStart,
    LineTwoCycle,
    /// Some adjacent pair without erasers is left on the cycle.
    LineTwoFinish,
    OffScript,
}

const LINE_ONE: [(&[usize], &[usize]); 4] = [
    (&[X1, V1], &[V1]),
    (&[V1, V4, V2], &[V4, V2]),
    (&[V4, V3], &[V3]),
    (&[V2, V3], &[]),
];

/// Painter's scripted win on the gadget: open with `{x1, x2}` and punish
/// whichever opener Corrector erases. On a subdivided gadget the odd cycle
/// runs through the subdivision vertices. In the lazy game the script can
/// pad every deferral by painting one spare subdivision vertex. Any reply
/// the script does not cover hands control to the solver.
#[derive(Clone)]
pub struct GadgetScript {
    graph: Graph,
    erasers: EraserMap,
    cycle: VertexSet,
    spares: VertexSet,
    pad_deferrals: bool,
    stage: Stage,
    /// Scripted move still waiting for its answer.
    awaiting: Option<VertexSet>,
    fallback: Option<OptimalPainter>,
    note: Option<String>,
}

pub fn gadget_painter_script(g: &Graph, e: &EraserMap) -> Result<GadgetScript> {
    check_gadget(g)?;
    e.check_for(g)?;
    let spares: VertexSet = (Y1..g.n()).collect();
    Ok(GadgetScript {
        graph: g.clone(),
        erasers: e.clone(),
        cycle: set(&[V1, V4, V3, V6, V5]).union(spares),
        spares,
        pad_deferrals: false,
        stage: Stage::Opening,
        awaiting: None,
        fallback: None,
        note: None,
    })
}

/// The gadget script for the lazy game: each time Corrector defers, paint
/// the lowest uncoloured subdivision vertex that is not pending.
pub fn lazy_gadget_painter_script(g: &Graph, e: &EraserMap) -> Result<GadgetScript> {
    let mut s = gadget_painter_script(g, e)?;
    s.pad_deferrals = true;
    Ok(s)
}

impl GadgetScript {
    fn leave_script(&mut self, why: String) {
        if self.stage != Stage::OffScript {
            self.note = Some(format!("script abandoned: {why}; solver takes over"));
            self.stage = Stage::OffScript;
        }
    }

    fn scripted_move(&self, state: &GameState) -> Option<VertexSet> {
        let zero = state.without_erasers();
        match self.stage {
            Stage::Opening | Stage::Replay => Some(set(&[X1, X2])),
            Stage::LineOne(i) => Some(set(LINE_ONE[i].0)),
            Stage::LineTwoStart => Some(set(&[X2, V5])),
            Stage::LineTwoCycle => Some(self.cycle.intersection(state.alive)),
            Stage::LineTwoFinish => self.graph.edges().find_map(|(u, v)| {
                (zero.contains(u) && zero.contains(v)).then(|| set(&[u, v]))
            }),
            Stage::OffScript => None,
        }
    }

    fn advance(&mut self, erased: VertexSet) {
        self.stage = match self.stage {
            Stage::Opening if erased == set(&[X1, X2]) => Stage::Replay,
            Stage::Opening if erased == set(&[X1]) => Stage::LineOne(0),
            Stage::Opening if erased == set(&[X2]) => Stage::LineTwoStart,
            Stage::LineOne(i) if i + 1 < LINE_ONE.len() && erased == set(LINE_ONE[i].1) => {
                Stage::LineOne(i + 1)
            }
            Stage::LineTwoStart if erased == set(&[V5]) => Stage::LineTwoCycle,
            Stage::LineTwoCycle => Stage::LineTwoFinish,
            _ => {
                self.leave_script(format!("unexpected erase set {erased}"));
                Stage::OffScript
            }
        };
    }

    fn fallback(&mut self) -> Result<&mut OptimalPainter> {
        if self.fallback.is_none() {
            self.fallback = Some(OptimalPainter::new(&self.graph, &self.erasers)?);
        }
        Ok(self.fallback.as_mut().expect("just built"))
    }
}

impl PainterStrategy for GadgetScript {
    fn choose(&mut self, state: &GameState, turn: &Turn) -> Result<VertexSet> {
        let free = turn.free(state);
        if self.awaiting.is_some() && self.stage != Stage::OffScript {
            if self.pad_deferrals {
                if let Some(y) = self.spares.intersection(free).first() {
                    return Ok(VertexSet::singleton(y));
                }
            }
            self.leave_script("deferred with no spare vertex to paint".into());
        }
        if let Some(p) = self.scripted_move(state) {
            if !p.is_empty() && p.is_subset(free) {
                self.awaiting = Some(p);
                return Ok(p);
            }
            self.leave_script(format!("scripted move {p} is not playable"));
        } else {
            self.leave_script("no scripted move left".into());
        }
        self.awaiting = None;
        self.fallback()?.choose(state, turn)
    }

    fn observe(&mut self, _state: &GameState, turn: &Turn, painted: VertexSet, reply: &Reply) {
        let Some(scripted) = self.awaiting else {
            return;
        };
        let erased = match reply {
            Reply::Defer => return,
            Reply::Erase(e) => Some(*e),
            Reply::Resolve(sets) => {
                let window = turn.pending.iter().copied().chain([painted]);
                window.zip(sets).find(|(s, _)| *s == scripted).map(|(_, e)| *e)
            }
        };
        self.awaiting = None;
        match erased {
            Some(e) => self.advance(e),
            None => self.leave_script("scripted colour missing from the resolution".into()),
        }
    }

    fn memo_key(&self) -> u64 {
        let mut h = FxHasher::default();
        (self.stage, self.awaiting).hash(&mut h);
        h.finish()
    }

    fn clone_box(&self) -> Box<dyn PainterStrategy> {
        Box::new(self.clone())
    }

    fn take_note(&mut self) -> Option<String> {
        self.note
            .take()
            .or_else(|| self.fallback.as_mut().and_then(|f| f.take_note()))
    }
}

/// Strong-game Corrector for the gadget: force `v1` first, keep `v1` and
/// erase every painted vertex at odd distance from it inside the move. From
/// then on play the classical optimum while it still wins, and the strong
/// optimum otherwise. Whenever the odd-distance rule is not a legal reply
/// the solver answers instead.
#[derive(Clone)]
pub struct StrongGadgetCorrector {
    graph: Graph,
    opened: bool,
    solver: OptimalCorrector,
    note: Option<String>,
}

pub fn strong_gadget_corrector(g: &Graph, e: &EraserMap) -> Result<StrongGadgetCorrector> {
    check_gadget(g)?;
    if g.n() != 8 {
        return Err(Error::Strategy("strong gadget corrector needs the unsubdivided gadget".into()));
    }
    Ok(StrongGadgetCorrector {
        graph: g.clone(),
        opened: false,
        solver: OptimalCorrector::new(g, e)?,
        note: None,
    })
}

impl StrongGadgetCorrector {
    /// Erase set prescribed by the odd-distance rule, if every painted vertex
    /// is reachable from `v1` inside the move.
    pub fn odd_distance_rule(&self, painted: VertexSet) -> Option<VertexSet> {
        let dist = self.graph.distances_within(V1, painted);
        painted
            .iter()
            .map(|v| dist[v].map(|d| (v, d)))
            .collect::<Option<Vec<_>>>()
            .map(|ds| ds.into_iter().filter(|(_, d)| d % 2 == 1).map(|(v, _)| v).collect())
    }
}

impl CorrectorStrategy for StrongGadgetCorrector {
    fn force(&mut self, state: &GameState) -> Result<usize> {
        if !self.opened {
            return Ok(V1);
        }
        if self.solver.classical_corrector_wins(state)? {
            return Ok(state.alive.first().expect("game not over"));
        }
        self.solver.force(state)
    }

    fn reply(&mut self, state: &GameState, turn: &Turn, painted: VertexSet) -> Result<Reply> {
        if !self.opened {
            self.opened = true;
            match self.odd_distance_rule(painted) {
                Some(erased) => match state.reply_violation(&self.graph, painted, erased) {
                    None => return Ok(Reply::Erase(erased)),
                    Some(why) => self.note = Some(format!("odd-distance rule illegal ({why}); solver answers")),
                },
                None => self.note = Some("move not connected to v1; solver answers".into()),
            }
        }
        if self.solver.classical_corrector_wins(state)? {
            return self.solver.reply(state, &Turn::classical(), painted);
        }
        let reply = self.solver.reply(state, turn, painted)?;
        if let Some(n) = self.solver.take_note() {
            self.note = Some(match self.note.take() {
                Some(first) => format!("{first}; {n}"),
                None => n,
            });
        }
        Ok(match reply {
            Reply::Erase(e) if state.reply_violation(&self.graph, painted, e).is_some() => {
                Reply::Erase(any_legal_reply(&self.graph, state, painted).unwrap_or(e))
            }
            r => r,
        })
    }

    fn memo_key(&self) -> u64 {
        self.opened as u64
    }

    fn clone_box(&self) -> Box<dyn CorrectorStrategy> {
        Box::new(self.clone())
    }

    fn take_note(&mut self) -> Option<String> {
        self.note.take()
    }
}
