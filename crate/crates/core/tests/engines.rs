mod common;

use common::{Bits, Game, GameOracle, LazyOracle};
use paintability::engine::{
    exhaust, play, play_classical, play_lazy, play_strong, read_trace, validate_trace, write_trace, Action, End,
    ExhaustOptions, Fixed, Model, Trace,
};
use paintability::graph::{gen_named, graphs_up_to_isomorphism, random_graph};
use paintability::solver::{is_lazy_paintable, is_paintable, is_strong_paintable, GameState, SolveOptions, Winner};
use paintability::strategy::{
    gadget_painter_script, lazy_corrector, lazy_gadget_painter_script, optimal_strategies, CorrectorStrategy,
    OptimalCorrector, OptimalPainter, PainterStrategy, Reply, Turn,
};
use paintability::{EraserMap, Error, Graph, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn set(vs: &[usize]) -> VertexSet {
    vs.iter().copied().collect()
}

/// Paints a fixed set each round (restricted to what is free).
#[derive(Clone)]
struct Always(VertexSet);

impl PainterStrategy for Always {
    fn choose(&mut self, state: &GameState, turn: &Turn) -> paintability::Result<VertexSet> {
        let free = turn.free(state);
        let p = self.0.intersection(free);
        Ok(if p.is_empty() { VertexSet::singleton(free.first().unwrap()) } else { p })
    }

    fn clone_box(&self) -> Box<dyn PainterStrategy> {
        Box::new(self.clone())
    }
}

/// Replies with a fixed answer regardless of the position.
#[derive(Clone)]
struct Stubborn(Reply);

impl CorrectorStrategy for Stubborn {
    fn reply(&mut self, _: &GameState, _: &Turn, _: VertexSet) -> paintability::Result<Reply> {
        Ok(self.0.clone())
    }

    fn clone_box(&self) -> Box<dyn CorrectorStrategy> {
        Box::new(self.clone())
    }
}

fn roundtrip(trace: &Trace) -> Trace {
    let mut buf = Vec::new();
    write_trace(trace, &mut buf).unwrap();
    read_trace(buf.as_slice()).unwrap()
}

#[test]
fn gadget_script_beats_the_optimal_corrector_quickly() {
    let (g, e) = gen_named("schauz_gadget", &[]).unwrap();
    let mut p = gadget_painter_script(&g, &e).unwrap();
    let mut c = OptimalCorrector::new(&g, &e).unwrap();
    let t = play_classical(&g, &e, &mut p, &mut c).unwrap();
    assert_eq!(t.winner(), Winner::PainterWins);
    assert!(t.rounds.len() <= 6);
    assert!(validate_trace(&g, &e, &t).is_valid());
    assert_eq!(roundtrip(&t), t);
}

#[test]
fn c4_optimal_play_is_a_corrector_win() {
    let (g, _) = gen_named("cycle", &[4]).unwrap();
    let e = EraserMap::uniform(4, 1);
    let (mut p, mut c) = optimal_strategies(&g, &e).unwrap();
    let t = play_classical(&g, &e, &mut p, &mut c).unwrap();
    assert_eq!(t.winner(), Winner::CorrectorWins);
    assert_eq!(t.outcome.end, End::AllColoured);
    assert!(validate_trace(&g, &e, &t).is_valid());
}

#[test]
fn empty_graph_ends_at_once() {
    let g = Graph::new(0).unwrap();
    let e = EraserMap::zeros(0);
    let (mut p, mut c) = optimal_strategies(&g, &e).unwrap();
    let t = play_classical(&g, &e, &mut p, &mut c).unwrap();
    assert!(t.rounds.is_empty());
    assert_eq!(t.winner(), Winner::CorrectorWins);
}

#[test]
fn strong_game_basics() {
    let (k2, _) = gen_named("complete", &[2]).unwrap();
    let e = EraserMap::zeros(2);
    let (mut p, mut c) = optimal_strategies(&k2, &e).unwrap();
    let t = play_strong(&k2, &e, &mut p, &mut c).unwrap();
    assert_eq!(t.winner(), Winner::PainterWins);
    assert!(t.rounds[0].forced.is_some());

    let one = Graph::new(1).unwrap();
    let e1 = EraserMap::zeros(1);
    let (mut p, mut c) = optimal_strategies(&one, &e1).unwrap();
    let t = play_strong(&one, &e1, &mut p, &mut c).unwrap();
    assert_eq!((t.winner(), t.rounds.len()), (Winner::CorrectorWins, 1));
    assert_eq!(t.rounds[0].forced, Some(0));
}

#[test]
fn painter_omitting_the_forced_vertex_forfeits() {
    let (g, _) = gen_named("path", &[3]).unwrap();
    let e = EraserMap::uniform(3, 1);
    // The default force is the lowest vertex; this painter never paints it.
    let mut p = Always(set(&[2]));
    let mut c = Stubborn(Reply::Erase(VertexSet::EMPTY));
    let t = play_strong(&g, &e, &mut p, &mut c).unwrap();
    assert!(matches!(t.outcome.end, End::Forfeit { round: 1, .. }));
    assert_eq!(t.winner(), Winner::CorrectorWins);
    assert!(validate_trace(&g, &e, &t).is_valid());
}

#[test]
fn illegal_corrector_output_forfeits() {
    let (g, _) = gen_named("path", &[2]).unwrap();
    let e = EraserMap::uniform(2, 1);
    let mut p = Always(set(&[0, 1]));
    // Keeps both ends of an edge.
    let mut c = Stubborn(Reply::Erase(VertexSet::EMPTY));
    let t = play_classical(&g, &e, &mut p, &mut c).unwrap();
    assert!(matches!(t.outcome.end, End::Forfeit { .. }));
    assert_eq!(t.winner(), Winner::PainterWins);

    // Defers outside the lazy game.
    let mut c = Stubborn(Reply::Defer);
    let t = play_classical(&g, &e, &mut p, &mut c).unwrap();
    assert!(matches!(t.outcome.end, End::Forfeit { .. }));
}

#[test]
fn deferring_without_budget_forfeits() {
    let (g, _) = gen_named("path", &[3]).unwrap();
    let e = EraserMap::uniform(3, 1);
    let mut p = Always(set(&[0]));
    let mut c = Stubborn(Reply::Defer);
    let t = play_lazy(&g, &e, &mut p, &mut c, 1).unwrap();
    assert_eq!(t.rounds[0].action, Action::Defer);
    assert!(matches!(t.outcome.end, End::Forfeit { round: 2, .. }));
    assert_eq!(t.outcome.deferrals, 1);
    assert!(validate_trace(&g, &e, &t).is_valid());
}

#[test]
fn deferring_when_painter_cannot_move_forfeits() {
    let (g, _) = gen_named("path", &[2]).unwrap();
    let e = EraserMap::uniform(2, 1);
    let mut p = Always(set(&[0, 1]));
    let mut c = Stubborn(Reply::Defer);
    let t = play_lazy(&g, &e, &mut p, &mut c, 5).unwrap();
    assert!(matches!(t.outcome.end, End::Forfeit { round: 1, .. }));
}

#[test]
fn lazy_budget_zero_matches_classical() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for _ in 0..40 {
        let n = rng.gen_range(1..=6);
        let g = random_graph(n, 0.5, &mut rng);
        let e = EraserMap((0..n).map(|_| rng.gen_range(0..=2)).collect());
        let (mut p1, mut c1) = optimal_strategies(&g, &e).unwrap();
        let (mut p2, mut c2) = optimal_strategies(&g, &e).unwrap();
        let a = play_classical(&g, &e, &mut p1, &mut c1).unwrap();
        let b = play_lazy(&g, &e, &mut p2, &mut c2, 0).unwrap();
        assert_eq!(a.winner(), b.winner());
        assert_eq!(b.outcome.deferrals, 0);
        assert!(b.rounds.iter().all(|r| !matches!(r.action, Action::Defer)));
        assert_eq!(
            is_lazy_paintable(&g, &e, 0).unwrap().winner,
            is_paintable(&g, &e, SolveOptions::default()).unwrap().winner
        );
    }
}

#[test]
fn scripted_painter_beats_lazy_corrector_with_budget_two() {
    let (g, e) = gen_named("subdivided_gadget", &[10]).unwrap();
    let mut p = lazy_gadget_painter_script(&g, &e).unwrap();
    let mut c = lazy_corrector(&g, &e).unwrap();
    let t = play_lazy(&g, &e, &mut p, &mut c, 2).unwrap();
    assert_eq!(t.winner(), Winner::PainterWins);
    assert!(validate_trace(&g, &e, &t).is_valid());
    assert_eq!(roundtrip(&t), t);
}

#[test]
fn lazy_corrector_on_c4_against_every_painter() {
    let (g, _) = gen_named("cycle", &[4]).unwrap();
    let e = EraserMap::uniform(4, 1);
    let c = lazy_corrector(&g, &e).unwrap();
    assert!(exhaust(&g, &e, Model::Lazy { budget: 8 }, Fixed::Corrector(Box::new(c))).unwrap().fixed_side_wins);
}

#[test]
fn exhaust_limits() {
    let (g, _) = gen_named("path", &[9]).unwrap();
    let e = EraserMap::uniform(9, 1);
    let (p, _) = optimal_strategies(&g, &e).unwrap();
    let err = exhaust(&g, &e, Model::Classical, Fixed::Painter(Box::new(p.clone()))).unwrap_err();
    assert!(matches!(err, Error::SizeLimit { .. }), "{err}");
    assert!(ExhaustOptions::default().max_vertices >= 8);
}

#[test]
fn exhaust_reports_a_refutation() {
    // Keeping everything loses as soon as two neighbours are painted.
    let (g, _) = gen_named("path", &[2]).unwrap();
    let e = EraserMap::uniform(2, 1);
    let r = exhaust(&g, &e, Model::Classical, Fixed::Corrector(Box::new(Stubborn(Reply::Erase(VertexSet::EMPTY))))).unwrap();
    assert!(!r.fixed_side_wins);
    assert_eq!(r.winner, Winner::PainterWins);
    assert!(!r.refutation.is_empty());
}

#[test]
fn validate_rejects_repeated_colour() {
    let (g, _) = gen_named("path", &[3]).unwrap();
    let e = EraserMap::uniform(3, 1);
    let (mut p, mut c) = optimal_strategies(&g, &e).unwrap();
    let mut t = play_classical(&g, &e, &mut p, &mut c).unwrap();
    assert!(t.rounds.len() >= 2, "{t:?}");
    t.rounds[1].colour = t.rounds[0].colour;
    let check = validate_trace(&g, &e, &t);
    assert_eq!(check.violation.map(|(r, _)| r), Some(2));
}

#[test]
fn validate_rejects_adjacent_kept_vertices() {
    let (g, _) = gen_named("path", &[2]).unwrap();
    let e = EraserMap::uniform(2, 1);
    let mut p = Always(set(&[0, 1]));
    let mut c = Stubborn(Reply::Erase(set(&[1])));
    let mut t = play_classical(&g, &e, &mut p, &mut c).unwrap();
    assert!(validate_trace(&g, &e, &t).is_valid());
    t.rounds[0].action = Action::Erase { erased: VertexSet::EMPTY };
    let check = validate_trace(&g, &e, &t);
    assert_eq!(check.violation.map(|(r, _)| r), Some(1));
}

#[test]
fn validate_rejects_a_wrong_verdict() {
    let (g, _) = gen_named("cycle", &[4]).unwrap();
    let e = EraserMap::uniform(4, 1);
    let (mut p, mut c) = optimal_strategies(&g, &e).unwrap();
    let mut t = play_classical(&g, &e, &mut p, &mut c).unwrap();
    t.outcome.winner = Winner::PainterWins;
    assert!(!validate_trace(&g, &e, &t).is_valid());
}

/// Solver, oracle and engine agree: the predicted winner's optimal strategy
/// survives full enumeration of the opponent, in every model.
#[test]
fn engine_confirms_solver_on_small_instances() {
    // Every eraser map up to 2 on graphs up to 5 vertices, and a sample at 6.
    let mut instances = Vec::new();
    for n in 1..=5 {
        for g in graphs_up_to_isomorphism(n) {
            for code in 0..3usize.pow(n as u32) {
                let er: Vec<u32> = (0..n).map(|v| (code / 3usize.pow(v as u32) % 3) as u32).collect();
                instances.push((g.clone(), er));
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(77);
    let six = graphs_up_to_isomorphism(6);
    for _ in 0..300 {
        let er = (0..6).map(|_| rng.gen_range(0..=2)).collect();
        instances.push((six[rng.gen_range(0..six.len())].clone(), er));
    }
    for (g, er) in instances {
        let n = g.n();
        let bits = Bits::from_graph(&g);
        let e = EraserMap(er.clone());
        for model in [Model::Classical, Model::Strong, Model::Lazy { budget: 1 }] {
            let (wins, oracle) = match model {
                Model::Classical => (
                    is_paintable(&g, &e, SolveOptions::default()).unwrap().corrector_wins(),
                    GameOracle::new(bits.clone(), Game::Classical).corrector_wins(&er),
                ),
                Model::Strong => (
                    is_strong_paintable(&g, &e).unwrap().corrector_wins(),
                    GameOracle::new(bits.clone(), Game::Strong).corrector_wins(&er),
                ),
                Model::Lazy { budget } => (
                    is_lazy_paintable(&g, &e, budget).unwrap().corrector_wins(),
                    LazyOracle::new(bits.clone()).corrector_wins(&er, budget),
                ),
            };
            assert_eq!(wins, oracle, "{model} {:?} {er:?}", g.edges().collect::<Vec<_>>());
            let fixed = if wins {
                Fixed::Corrector(Box::new(OptimalCorrector::new(&g, &e).unwrap()))
            } else {
                Fixed::Painter(Box::new(OptimalPainter::new(&g, &e).unwrap()))
            };
            let r = exhaust(&g, &e, model, fixed).unwrap();
            assert!(r.fixed_side_wins, "{model} {:?} {er:?}: {:?}", g.edges().collect::<Vec<_>>(), r.refutation);

            let (mut p, mut c) = optimal_strategies(&g, &e).unwrap();
            let t = play(&g, &e, model, &mut p, &mut c).unwrap();
            assert_eq!(t.winner().corrector_wins(), wins);
            assert!(validate_trace(&g, &e, &t).is_valid());
            if model != (Model::Lazy { budget: 1 }) {
                assert!(t.rounds.len() as u64 <= n as u64 + e.total());
            }
        }
    }
}

#[test]
fn model_strings() {
    for (text, model) in [("classical", Model::Classical), ("strong", Model::Strong), ("lazy:3", Model::Lazy { budget: 3 })] {
        assert_eq!(text.parse::<Model>().unwrap(), model);
        assert_eq!(model.to_string(), text);
    }
    assert!("lazy".parse::<Model>().is_err());
    assert!("weak".parse::<Model>().is_err());
}
