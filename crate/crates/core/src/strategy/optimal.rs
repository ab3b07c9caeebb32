use std::sync::{Arc, Mutex, MutexGuard};

use super::{any_legal_reply, any_legal_resolution, paint_all, CorrectorStrategy, PainterStrategy, Reply, Turn};
use crate::error::{Error, Result};
use crate::graph::{EraserMap, Graph};
use crate::solver::{ClassicalSolver, GameState, LazyResponse, LazySolver, SolveOptions, StrongSolver};
use crate::vertex_set::VertexSet;

/// Solvers for one instance, built on first use and shared by every clone
/// of the optimal strategies.
#[derive(Debug)]
struct Shared {
    graph: Graph,
    max_erasers: u32,
    classical: Mutex<ClassicalSolver>,
    strong: Mutex<Option<StrongSolver>>,
    lazy: Mutex<Option<LazySolver>>,
}

fn lock<T>(m: &Mutex<T>) -> MutexGuard<'_, T> {
    m.lock().unwrap_or_else(|e| e.into_inner())
}

impl Shared {
    fn new(g: &Graph, e: &EraserMap) -> Result<Arc<Self>> {
        e.check_for(g)?;
        Ok(Arc::new(Shared {
            graph: g.clone(),
            max_erasers: e.max(),
            classical: Mutex::new(ClassicalSolver::new(g, e.max(), SolveOptions::default())?),
            strong: Mutex::new(None),
            lazy: Mutex::new(None),
        }))
    }

    fn strong<R>(&self, f: impl FnOnce(&mut StrongSolver) -> Result<R>) -> Result<R> {
        let mut guard = lock(&self.strong);
        if guard.is_none() {
            *guard = Some(StrongSolver::new(&self.graph, self.max_erasers, SolveOptions::default())?);
        }
        f(guard.as_mut().expect("just built"))
    }

    fn lazy<R>(&self, f: impl FnOnce(&mut LazySolver) -> Result<R>) -> Result<R> {
        let mut guard = lock(&self.lazy);
        if guard.is_none() {
            *guard = Some(LazySolver::new(&self.graph, self.max_erasers, SolveOptions::default())?);
        }
        f(guard.as_mut().expect("just built"))
    }
}

/// Painter reading the solver: plays a winning move whenever one exists.
#[derive(Clone, Debug)]
pub struct OptimalPainter {
    shared: Arc<Shared>,
    note: Option<String>,
}

/// Corrector reading the solver: answers with a winning reply whenever one
/// exists, and forces a vertex she can still win with in the strong game.
#[derive(Clone, Debug)]
pub struct OptimalCorrector {
    shared: Arc<Shared>,
    note: Option<String>,
}

/// Both optimal strategies for one instance, after solving it.
pub fn optimal_strategies(g: &Graph, e: &EraserMap) -> Result<(OptimalPainter, OptimalCorrector)> {
    let shared = Shared::new(g, e)?;
    lock(&shared.classical).corrector_wins(&GameState::initial(g, e)?)?;
    Ok((
        OptimalPainter {
            shared: shared.clone(),
            note: None,
        },
        OptimalCorrector { shared, note: None },
    ))
}

impl OptimalPainter {
    pub fn new(g: &Graph, e: &EraserMap) -> Result<Self> {
        Ok(OptimalPainter {
            shared: Shared::new(g, e)?,
            note: None,
        })
    }
}

impl OptimalCorrector {
    pub fn new(g: &Graph, e: &EraserMap) -> Result<Self> {
        Ok(OptimalCorrector {
            shared: Shared::new(g, e)?,
            note: None,
        })
    }
}

impl OptimalCorrector {
    /// Whether the classical game from `state` is a Corrector win.
    pub(crate) fn classical_corrector_wins(&self, state: &GameState) -> Result<bool> {
        lock(&self.shared.classical).corrector_wins(state)
    }
}

impl PainterStrategy for OptimalPainter {
    fn choose(&mut self, state: &GameState, turn: &Turn) -> Result<VertexSet> {
        let winning = if let Some(u) = turn.forced {
            self.shared.strong(|s| s.refutation(state, u))?
        } else if let Some(budget) = turn.budget {
            self.shared
                .lazy(|s| s.winning_painter_move(state, turn.pending, budget))?
        } else {
            lock(&self.shared.classical).winning_painter_move(state)?
        };
        Ok(winning.unwrap_or_else(|| {
            self.note = Some("optimal painter: no winning move, painting everything".into());
            paint_all(state, turn)
        }))
    }

    fn clone_box(&self) -> Box<dyn PainterStrategy> {
        Box::new(self.clone())
    }

    fn take_note(&mut self) -> Option<String> {
        self.note.take()
    }
}

impl CorrectorStrategy for OptimalCorrector {
    fn force(&mut self, state: &GameState) -> Result<usize> {
        if let Some(u) = self.shared.strong(|s| s.winning_force(state))? {
            return Ok(u);
        }
        self.note = Some("optimal corrector: every forced vertex loses".into());
        state
            .alive
            .first()
            .ok_or_else(|| Error::Strategy("nothing left to force".into()))
    }

    fn reply(&mut self, state: &GameState, turn: &Turn, painted: VertexSet) -> Result<Reply> {
        let g = &self.shared.graph;
        if let Some(budget) = turn.budget {
            let mut window = turn.pending.to_vec();
            window.push(painted);
            return Ok(match self.shared.lazy(|s| s.winning_response(state, &window, budget))? {
                Some(LazyResponse::Defer) => Reply::Defer,
                Some(LazyResponse::Resolve(erased)) => Reply::Resolve(erased),
                None => {
                    self.note = Some("optimal corrector: no winning answer".into());
                    Reply::Resolve(any_legal_resolution(g, state, &window).unwrap_or(window))
                }
            });
        }
        let winning = if turn.forced.is_some() {
            self.shared.strong(|s| s.winning_reply(state, painted))?
        } else {
            lock(&self.shared.classical).winning_reply(state, painted)?
        };
        Ok(Reply::Erase(winning.unwrap_or_else(|| {
            self.note = Some("optimal corrector: no winning reply".into());
            any_legal_reply(g, state, painted).unwrap_or(painted)
        })))
    }

    fn clone_box(&self) -> Box<dyn CorrectorStrategy> {
        Box::new(self.clone())
    }

    fn take_note(&mut self) -> Option<String> {
        self.note.take()
    }
}
