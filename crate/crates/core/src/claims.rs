//! Registry of checkable statements about the games, each with a fixed
//! expected observation. Checks are plain functions so the command line and
//! the test suites can share them.

use std::cell::RefCell;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::engine::{exhaust, exhaust_with, ExhaustOptions, Fixed, Model};
use crate::error::Result;
use crate::graph::{
    chromatic_number, degeneracy, gen_named, graphs_up_to_isomorphism, independence_number,
    random_graph, EraserMap, Graph, SpTree,
};
use crate::solver::{
    choice_number, is_choosable, is_lazy_paintable, is_paintable, is_strong_paintable,
    paint_number, ChoosabilityMode, ClassicalSolver, GameState, SolveOptions, Winner,
};
use crate::strategy::{
    degeneracy_corrector, gadget_painter_script, lazy_corrector, sp_corrector, sp_erasers,
    strong_gadget_corrector, Reply,
};
use crate::streaming::{competitive_table, ALGORITHMS};

/// Seed of the sampled gadget choosability claim; also part of its id.
pub const GADGET_SAMPLE_SEED: u64 = 20_240_917;
pub const GADGET_SAMPLE_TRIALS: u64 = 100_000;

pub struct Claim {
    pub id: String,
    pub statement: &'static str,
    pub expected: &'static str,
    /// Long-running; only run on request.
    pub extended: bool,
    check: fn() -> Result<Observation>,
}

/// What a check saw: a canonical string compared against the expectation,
/// plus free-form detail.
pub struct Observation {
    pub observed: String,
    pub detail: String,
}

fn obs(observed: impl Into<String>, detail: impl Into<String>) -> Result<Observation> {
    Ok(Observation {
        observed: observed.into(),
        detail: detail.into(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skipped => "skipped",
        })
    }
}

#[derive(Clone, Debug)]
pub struct ClaimResult {
    pub id: String,
    pub statement: String,
    pub expected: String,
    pub observed: String,
    pub detail: String,
    pub status: Status,
    pub runtime: Duration,
}

/// Every registered claim, sorted by id.
pub fn registry() -> Vec<Claim> {
    let claim = |id: &str, statement, expected, extended, check| Claim {
        id: id.to_string(),
        statement,
        expected,
        extended,
        check,
    };
    let mut claims = vec![
        claim(
            "gadget-separation",
            "Painter wins the classical game on the gadget (1 eraser each, 2 on v5)",
            "PainterWins",
            false,
            || obs(solve_named("schauz_gadget", &[])?.to_string(), ""),
        ),
        claim(
            "gadget-script",
            "the scripted gadget Painter beats every Corrector",
            "PainterWins",
            false,
            check_gadget_script,
        ),
        claim(
            &format!("gadget-gap-s{GADGET_SAMPLE_SEED}"),
            "the gadget is colourable from sampled lists of sizes 2 (3 on v5)",
            "no counterexample",
            false,
            check_gadget_gap,
        ),
        claim(
            "strong-gadget",
            "forcing a vertex each round lets Corrector win on the gadget",
            "CorrectorWins",
            false,
            || {
                let (g, e) = gen_named("schauz_gadget", &[])?;
                obs(is_strong_paintable(&g, &e)?.winner.to_string(), "")
            },
        ),
        claim(
            "strong-gadget-corrector",
            "the odd-distance strong-game Corrector survives every Painter",
            "CorrectorWins",
            false,
            check_strong_gadget_corrector,
        ),
        claim(
            "ohba-n6",
            "paint number equals chromatic number when |V| <= 2 chi, all graphs up to 6 vertices",
            "0 exceptions",
            false,
            || {
                let r = ohba_check(6)?;
                obs(format!("{} exceptions", r.exceptions.len()), format!("{} graphs checked; {:?}", r.checked, r.exceptions))
            },
        ),
        claim(
            "fig1-triangulation",
            "the 8-vertex triangulation: chi 4, degeneracy 3, independence 4, paint number 4",
            "chi=4 degeneracy=3 alpha=4 paint=4",
            false,
            || {
                let (g, _) = gen_named("fig1_triangulation", &[])?;
                obs(
                    format!(
                        "chi={} degeneracy={} alpha={} paint={}",
                        chromatic_number(&g)?,
                        degeneracy(&g).k,
                        independence_number(&g)?,
                        paint_number(&g)?
                    ),
                    "",
                )
            },
        ),
        claim(
            "k13-c4-one-eraser",
            "K_{1,3} and C4 with one eraser each are Corrector wins",
            "CorrectorWins CorrectorWins",
            false,
            || {
                let a = solve_named_with("complete_multipartite", &[1, 3], 1)?;
                let b = solve_named_with("cycle", &[4], 1)?;
                obs(format!("{a} {b}"), "")
            },
        ),
        claim(
            "k23-paint-number",
            "K_{2,3} is not chromatic-paintable: paint number 3",
            "3",
            false,
            || {
                let (g, _) = gen_named("complete_multipartite", &[2, 3])?;
                obs(paint_number(&g)?.to_string(), "")
            },
        ),
        claim(
            "k223-not-3-paintable",
            "K_{2,2,3} is not 3-paintable",
            "PainterWins",
            true,
            || obs(solve_named_with("complete_multipartite", &[2, 2, 3], 2)?.to_string(), ""),
        ),
        claim(
            "k69-not-3-paintable",
            "K_{6,9} is not 3-paintable",
            "PainterWins",
            true,
            || obs(solve_named_with("complete_multipartite", &[6, 9], 2)?.to_string(), ""),
        ),
        claim(
            "degeneracy-random",
            "the elimination-order Corrector never loses with degeneracy-many erasers (200 random graphs)",
            "0 losses",
            false,
            || {
                let r = degeneracy_check(200, 8, 7)?;
                obs(format!("{} losses", r.losses), format!("{} over-budget erasures", r.overspent))
            },
        ),
        claim(
            "sp-7-leaves",
            "the series-parallel Corrector never loses and the solver agrees, all decompositions with up to 7 edges",
            "0 losses 0 disagreements",
            false,
            || {
                let r = series_parallel_check(7, true)?;
                obs(format!("{} losses {} disagreements", r.losses, r.solver_disagreements), format!("{} trees", r.trees))
            },
        ),
        claim(
            "lazy-corrector-random",
            "deferring everything wins the lazy game on paintable instances (50 random, n <= 7)",
            "0 losses",
            false,
            || {
                let r = lazy_corrector_check(50, 7, 11)?;
                obs(format!("{} losses", r.losses), format!("{} instances", r.instances))
            },
        ),
        claim(
            "lazy-subdivided-budget0",
            "without deferrals Painter wins on the 10-vertex subdivided gadget",
            "PainterWins",
            false,
            || {
                let (g, e) = gen_named("subdivided_gadget", &[10])?;
                obs(is_lazy_paintable(&g, &e, 0)?.winner.to_string(), "")
            },
        ),
        claim(
            "lazy-min-budget-n10",
            "Corrector needs at least n - 7 = 3 deferrals on the 10-vertex subdivided gadget",
            "at least 3",
            false,
            || {
                let (g, e) = gen_named("subdivided_gadget", &[10])?;
                let min = minimal_lazy_budget(&g, &e, 6)?;
                let observed = match min {
                    Some(b) if b >= 3 => "at least 3",
                    _ => "below 3",
                };
                obs(observed, format!("minimal winning budget {min:?}"))
            },
        ),
        claim(
            "stream-lower-bound",
            "adversary cost >= 0.4 (n/2) log2 n with strictly rising ratio, n = 16..1024",
            "holds",
            false,
            || {
                let r = streaming_check(&[16, 64, 256, 1024])?;
                obs(if r.ok { "holds" } else { "violated" }, r.detail)
            },
        ),
        claim(
            "chain-chi-ch-paint",
            "chi <= choice number <= paint number on all graphs up to 5 vertices",
            "0 violations",
            false,
            || {
                let r = chain_check(5)?;
                obs(format!("{} violations", r.violations.len()), format!("{} graphs compared", r.compared))
            },
        ),
        claim(
            "pruning-n6",
            "pruned and unpruned solvers agree and monotonicity holds, graphs up to 6 vertices, erasers <= 2",
            "0 violations",
            false,
            || {
                let r = pruning_check(6, 2)?;
                obs(format!("{} violations", r.violations.len()), format!("{} instances", r.instances))
            },
        ),
    ];
    claims.sort_by(|a, b| a.id.cmp(&b.id));
    claims
}

/// Runs the claims whose id matches `filter` (a glob with `*`).
pub fn verify_claims(filter: Option<&str>, extended: bool) -> Vec<ClaimResult> {
    registry()
        .into_iter()
        .filter(|c| filter.is_none_or(|f| glob_match(f, &c.id)))
        .map(|c| {
            let start = Instant::now();
            let (observed, detail, status) = if c.extended && !extended {
                (String::new(), "long-running; use --extended".to_string(), Status::Skipped)
            } else {
                match (c.check)() {
                    Ok(o) => {
                        let status = if o.observed == c.expected { Status::Pass } else { Status::Fail };
                        (o.observed, o.detail, status)
                    }
                    Err(e) => (format!("error: {e}"), String::new(), Status::Fail),
                }
            };
            ClaimResult {
                id: c.id,
                statement: c.statement.to_string(),
                expected: c.expected.to_string(),
                observed,
                detail,
                status,
                runtime: start.elapsed(),
            }
        })
        .collect()
}

/// `*` matches any run of characters.
pub fn glob_match(pattern: &str, text: &str) -> bool {
    match pattern.split_once('*') {
        None => pattern == text,
        Some((head, rest)) => {
            let Some(tail) = text.strip_prefix(head) else {
                return false;
            };
            (0..=tail.len()).any(|i| tail.is_char_boundary(i) && glob_match(rest, &tail[i..]))
        }
    }
}

fn solve_named(name: &str, params: &[usize]) -> Result<Winner> {
    let (g, e) = gen_named(name, params)?;
    Ok(is_paintable(&g, &e, SolveOptions::default())?.winner)
}

fn solve_named_with(name: &str, params: &[usize], erasers: u32) -> Result<Winner> {
    let (g, _) = gen_named(name, params)?;
    Ok(is_paintable(&g, &EraserMap::uniform(g.n(), erasers), SolveOptions::default())?.winner)
}

fn check_gadget_script() -> Result<Observation> {
    let (g, e) = gen_named("schauz_gadget", &[])?;
    let r = exhaust(&g, &e, Model::Classical, Fixed::Painter(Box::new(gadget_painter_script(&g, &e)?)))?;
    obs(r.winner.to_string(), format!("{} positions", r.positions))
}

fn check_strong_gadget_corrector() -> Result<Observation> {
    let (g, e) = gen_named("schauz_gadget", &[])?;
    let r = exhaust(&g, &e, Model::Strong, Fixed::Corrector(Box::new(strong_gadget_corrector(&g, &e)?)))?;
    obs(r.winner.to_string(), r.refutation.join(" / "))
}

/// Sampled choosability of the gadget with list sizes erasers + 1.
pub fn gadget_gap(seed: u64, trials: u64) -> Result<crate::solver::ChoosabilityVerdict> {
    let (g, e) = gen_named("schauz_gadget", &[])?;
    let sizes: Vec<usize> = e.to_tokens().iter().map(|&t| t as usize).collect();
    is_choosable(&g, &sizes, ChoosabilityMode::Sampled { seed, trials })
}

fn check_gadget_gap() -> Result<Observation> {
    let v = gadget_gap(GADGET_SAMPLE_SEED, GADGET_SAMPLE_TRIALS)?;
    let observed = if v.choosable { "no counterexample" } else { "counterexample found" };
    obs(observed, format!("{} list systems sampled", v.checked))
}

pub struct OhbaReport {
    pub checked: usize,
    pub exceptions: Vec<String>,
}

/// Paint number against chromatic number on every graph with at most
/// `max_n` vertices and `|V| <= 2 chi`, up to isomorphism.
pub fn ohba_check(max_n: usize) -> Result<OhbaReport> {
    let mut report = OhbaReport {
        checked: 0,
        exceptions: Vec::new(),
    };
    for n in 1..=max_n {
        for g in graphs_up_to_isomorphism(n) {
            let chi = chromatic_number(&g)?;
            if n > 2 * chi {
                continue;
            }
            report.checked += 1;
            let p = paint_number(&g)?;
            if p != chi {
                report
                    .exceptions
                    .push(format!("{:?}: chi {chi}, paint number {p}", g.edges().collect::<Vec<_>>()));
            }
        }
    }
    Ok(report)
}

pub struct StrategyReport {
    pub instances: usize,
    pub losses: usize,
    /// Erasures beyond a vertex's back-degree (degeneracy check only).
    pub overspent: usize,
}

/// `count` random graphs on up to `max_n` vertices with uniform erasers
/// equal to the degeneracy; the elimination-order Corrector is certified
/// and every erasure is checked against the back-degree bound.
pub fn degeneracy_check(count: usize, max_n: usize, seed: u64) -> Result<StrategyReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = StrategyReport {
        instances: 0,
        losses: 0,
        overspent: 0,
    };
    for _ in 0..count {
        let n = rng.gen_range(1..=max_n);
        let p = rng.gen_range(0.15..0.75);
        let g = random_graph(n, p, &mut rng);
        let d = degeneracy(&g);
        let e = EraserMap::uniform(n, d.k as u32);
        let c = degeneracy_corrector(&g, &e)?;
        let overspent = RefCell::new(0);
        let mut visitor = |state: &GameState, _painted, reply: &Reply| {
            if let Reply::Erase(erased) = reply {
                for v in *erased {
                    let used = e.get(v) - state.erasers(v) + 1;
                    if used as usize > d.back_degree[v] {
                        *overspent.borrow_mut() += 1;
                    }
                }
            }
        };
        let r = exhaust_with(
            &g,
            &e,
            Model::Classical,
            Fixed::Corrector(Box::new(c)),
            ExhaustOptions::default(),
            Some(&mut visitor),
        )?;
        report.instances += 1;
        report.losses += usize::from(!r.fixed_side_wins);
        report.overspent += overspent.into_inner();
    }
    Ok(report)
}

pub struct SpReport {
    pub trees: usize,
    pub losses: usize,
    /// Instances where the solver disagreed (when cross-checked).
    pub solver_disagreements: usize,
}

/// Certifies the series-parallel Corrector on every decomposition tree with
/// up to `max_leaves` leaves, optionally cross-checking the solver.
pub fn series_parallel_check(max_leaves: usize, cross_check: bool) -> Result<SpReport> {
    let mut report = SpReport {
        trees: 0,
        losses: 0,
        solver_disagreements: 0,
    };
    for tree in SpTree::up_to_leaves(max_leaves) {
        let c = sp_corrector(&tree)?;
        let g = c.graph().clone();
        let e = sp_erasers(c.realization());
        let r = exhaust(&g, &e, Model::Classical, Fixed::Corrector(Box::new(c)))?;
        report.trees += 1;
        report.losses += usize::from(!r.fixed_side_wins);
        if cross_check && !is_paintable(&g, &e, SolveOptions::default())?.corrector_wins() {
            report.solver_disagreements += 1;
        }
    }
    Ok(report)
}

/// Random instances that are paintable with random erasers in 0..=2 and at
/// most `max_n` vertices; the deferring Corrector is certified on each with
/// a budget large enough to defer every time.
pub fn lazy_corrector_check(count: usize, max_n: usize, seed: u64) -> Result<StrategyReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut report = StrategyReport {
        instances: 0,
        losses: 0,
        overspent: 0,
    };
    while report.instances < count {
        let n = rng.gen_range(2..=max_n);
        let g = random_graph(n, rng.gen_range(0.2..0.7), &mut rng);
        let e = EraserMap((0..n).map(|_| rng.gen_range(0..=2)).collect());
        if !is_paintable(&g, &e, SolveOptions::default())?.corrector_wins() {
            continue;
        }
        let budget = (e.total() + n as u64) as u32;
        let r = exhaust(&g, &e, Model::Lazy { budget }, Fixed::Corrector(Box::new(lazy_corrector(&g, &e)?)))?;
        report.instances += 1;
        report.losses += usize::from(!r.fixed_side_wins);
    }
    Ok(report)
}

/// Least deferral budget (up to `max_budget`) with which Corrector wins.
pub fn minimal_lazy_budget(g: &Graph, e: &EraserMap, max_budget: u32) -> Result<Option<u32>> {
    for b in 0..=max_budget {
        if is_lazy_paintable(g, e, b)?.corrector_wins() {
            return Ok(Some(b));
        }
    }
    Ok(None)
}

pub struct StreamingReport {
    pub ok: bool,
    pub detail: String,
}

/// Lower-bound and ratio checks for both reference algorithms.
pub fn streaming_check(sizes: &[usize]) -> Result<StreamingReport> {
    let mut ok = true;
    let mut detail = Vec::new();
    for alg in ALGORITHMS {
        let rows = competitive_table(sizes, alg)?;
        for r in &rows {
            let bound = 0.4 * (r.n as f64 / 2.0) * (r.n as f64).log2();
            ok &= r.online_cost as f64 >= bound;
            detail.push(format!("{alg} n={} cost={} offline={} ratio={:.3}", r.n, r.online_cost, r.offline_cost, r.ratio));
        }
        ok &= rows.windows(2).all(|w| w[1].ratio > w[0].ratio);
    }
    Ok(StreamingReport {
        ok,
        detail: detail.join("; "),
    })
}

pub struct ChainReport {
    pub compared: usize,
    pub violations: Vec<String>,
}

/// `chi <= ch <= paint number` wherever the choice number is computable.
pub fn chain_check(max_n: usize) -> Result<ChainReport> {
    let mut report = ChainReport {
        compared: 0,
        violations: Vec::new(),
    };
    for n in 1..=max_n {
        for g in graphs_up_to_isomorphism(n) {
            let Ok(ch) = choice_number(&g) else {
                continue;
            };
            let chi = chromatic_number(&g)?;
            let p = paint_number(&g)?;
            report.compared += 1;
            if !(chi <= ch && ch <= p) {
                report
                    .violations
                    .push(format!("{:?}: chi {chi}, ch {ch}, paint {p}", g.edges().collect::<Vec<_>>()));
            }
        }
    }
    Ok(report)
}

pub struct PruningReport {
    pub instances: usize,
    pub violations: Vec<String>,
}

/// For every graph up to `max_n` vertices and every eraser map with entries
/// up to `max_erasers`: pruned and unpruned verdicts agree, adding erasers
/// never hurts Corrector, and deleting a vertex never hurts Corrector.
pub fn pruning_check(max_n: usize, max_erasers: u32) -> Result<PruningReport> {
    let mut report = PruningReport {
        instances: 0,
        violations: Vec::new(),
    };
    for n in 1..=max_n {
        for g in graphs_up_to_isomorphism(n) {
            let mut pruned = ClassicalSolver::new(&g, max_erasers, SolveOptions::default())?;
            let mut plain = ClassicalSolver::new(&g, max_erasers, SolveOptions::unpruned())?;
            let base = max_erasers + 1;
            let total = (base as usize).pow(n as u32);
            let mut verdict = vec![false; total];
            for code in 0..total {
                let e = decode(code, n, base);
                let s = GameState::initial(&g, &e)?;
                let a = pruned.corrector_wins(&s)?;
                let b = plain.corrector_wins(&s)?;
                report.instances += 1;
                if a != b {
                    report.violations.push(format!("{:?} {:?}: pruned {a}, unpruned {b}", g.edges().collect::<Vec<_>>(), e.0));
                }
                verdict[code] = b;
                for v in 0..n {
                    // One eraser fewer on v was decided earlier.
                    if e.get(v) > 0 && verdict[code - (base as usize).pow(v as u32)] && !b {
                        report.violations.push(format!("{:?} {:?}: extra eraser on {v} loses", g.edges().collect::<Vec<_>>(), e.0));
                    }
                    if b && !plain.corrector_wins(&s.restricted(g.vertices().without(v)))? {
                        report.violations.push(format!("{:?} {:?}: deleting {v} loses", g.edges().collect::<Vec<_>>(), e.0));
                    }
                }
            }
        }
    }
    Ok(report)
}

fn decode(mut code: usize, n: usize, base: u32) -> EraserMap {
    EraserMap(
        (0..n)
            .map(|_| {
                let d = (code % base as usize) as u32;
                code /= base as usize;
                d
            })
            .collect(),
    )
}
