//! The streaming model: vertices arrive one at a time with a list and edges
//! to earlier vertices, the colouring must stay proper after every arrival,
//! and every colour (re)assignment costs 1.

mod adversary;
mod algorithms;

pub use adversary::{adversary_paths, competitive_table, offline_path_cost, AdversaryRun, CompetitiveRow, Join};
pub use algorithms::{reference_algorithm, FirstFit, RecolourSmaller, ALGORITHMS};

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StreamEvent {
    pub id: usize,
    pub list: BTreeSet<u32>,
    /// Earlier vertices the new one is adjacent to.
    pub back_edges: BTreeSet<usize>,
}

impl StreamEvent {
    pub fn new(id: usize, list: &[u32], back_edges: &[usize]) -> Self {
        StreamEvent {
            id,
            list: list.iter().copied().collect(),
            back_edges: back_edges.iter().copied().collect(),
        }
    }
}

fn join<T: fmt::Display>(items: impl IntoIterator<Item = T>) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

impl fmt::Display for StreamEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "reveal {} list={} edges={}",
            self.id,
            join(&self.list),
            join(&self.back_edges)
        )
    }
}

impl FromStr for StreamEvent {
    type Err = String;

    fn from_str(line: &str) -> std::result::Result<Self, String> {
        let mut parts = line.split_whitespace();
        if parts.next() != Some("reveal") {
            return Err("expected `reveal <id> list=<c,...> edges=<id,...>`".into());
        }
        let id = parts
            .next()
            .and_then(|s| s.parse().ok())
            .ok_or("missing or invalid vertex id")?;
        let mut list = None;
        let mut edges = None;
        for part in parts {
            let (key, value) = part.split_once('=').ok_or(format!("unexpected token {part:?}"))?;
            let nums = |v: &str| -> std::result::Result<Vec<u64>, String> {
                v.split(',')
                    .filter(|s| !s.is_empty())
                    .map(|s| s.parse().map_err(|_| format!("bad number {s:?}")))
                    .collect()
            };
            match key {
                "list" => list = Some(nums(value)?.into_iter().map(|c| c as u32).collect()),
                "edges" => edges = Some(nums(value)?.into_iter().map(|u| u as usize).collect()),
                _ => return Err(format!("unknown field {key:?}")),
            }
        }
        Ok(StreamEvent {
            id,
            list: list.ok_or("missing list=")?,
            back_edges: edges.unwrap_or_default(),
        })
    }
}

/// Parses one event per line; blank lines and `#` comments are skipped.
pub fn parse_events(text: &str) -> Result<Vec<StreamEvent>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty() && !l.trim_start().starts_with('#'))
        .map(|(i, l)| {
            l.parse().map_err(|message| Error::Parse {
                line: i + 1,
                message,
            })
        })
        .collect()
}

pub fn write_events(events: &[StreamEvent]) -> String {
    events.iter().map(|e| format!("{e}\n")).collect()
}

/// The graph revealed so far.
#[derive(Clone, Debug, Default)]
pub struct StreamGraph {
    pub lists: Vec<BTreeSet<u32>>,
    pub adj: Vec<Vec<usize>>,
}

impl StreamGraph {
    pub fn len(&self) -> usize {
        self.adj.len()
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn neighbours(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    fn add(&mut self, e: &StreamEvent) -> Result<()> {
        if e.id != self.len() {
            return Err(Error::Stream(format!(
                "vertex {} revealed out of order (expected {})",
                e.id,
                self.len()
            )));
        }
        if e.list.is_empty() || e.list.contains(&0) {
            return Err(Error::Stream(format!("vertex {} needs a non-empty list of positive colours", e.id)));
        }
        if let Some(&u) = e.back_edges.iter().find(|&&u| u >= e.id) {
            return Err(Error::Stream(format!("vertex {} has an edge to unrevealed vertex {u}", e.id)));
        }
        self.lists.push(e.list.clone());
        self.adj.push(e.back_edges.iter().copied().collect());
        for &u in &e.back_edges {
            self.adj[u].push(e.id);
        }
        Ok(())
    }
}

/// Cost accounting for one run.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CostLedger {
    /// Colour assignments made so far, including recolourings.
    pub total: u64,
    pub per_vertex: Vec<u64>,
    pub colouring: Vec<Option<u32>>,
    /// Set once the algorithm left an improper or incomplete colouring; the
    /// cost is then infinite.
    pub violation: Option<String>,
}

impl CostLedger {
    /// Total cost, or `None` if it is infinite.
    pub fn cost(&self) -> Option<u64> {
        self.violation.is_none().then_some(self.total)
    }
}

impl fmt::Display for CostLedger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.cost() {
            Some(c) => write!(f, "{c}"),
            None => write!(f, "inf"),
        }
    }
}

/// A deterministic on-line colouring algorithm.
pub trait StreamAlgorithm {
    fn name(&self) -> &str;

    /// Assignments to make now that vertex `v` (already in `graph`) has
    /// arrived. They are applied in order and must colour `v`.
    fn respond(&mut self, graph: &StreamGraph, colouring: &[Option<u32>], v: usize) -> Vec<(usize, u32)>;
}

/// An algorithm fed one event at a time.
pub struct StreamRun<'a> {
    alg: &'a mut dyn StreamAlgorithm,
    graph: StreamGraph,
    ledger: CostLedger,
}

impl<'a> StreamRun<'a> {
    pub fn new(alg: &'a mut dyn StreamAlgorithm) -> Self {
        StreamRun {
            alg,
            graph: StreamGraph::default(),
            ledger: CostLedger::default(),
        }
    }

    pub fn graph(&self) -> &StreamGraph {
        &self.graph
    }

    pub fn ledger(&self) -> &CostLedger {
        &self.ledger
    }

    pub fn into_ledger(self) -> CostLedger {
        self.ledger
    }

    pub fn colour(&self, v: usize) -> Option<u32> {
        self.ledger.colouring.get(v).copied().flatten()
    }

    /// Feeds one event. After a violation further events are recorded in the
    /// graph but the algorithm is no longer consulted.
    pub fn feed(&mut self, event: &StreamEvent) -> Result<()> {
        self.graph.add(event)?;
        self.ledger.per_vertex.push(0);
        self.ledger.colouring.push(None);
        if self.ledger.violation.is_some() {
            return Ok(());
        }
        let v = event.id;
        let assignments = self.alg.respond(&self.graph, &self.ledger.colouring, v);
        let mut touched = vec![v];
        for (u, c) in assignments {
            if u > v {
                self.ledger.violation = Some(format!("assignment to unrevealed vertex {u}"));
                return Ok(());
            }
            self.ledger.total += 1;
            self.ledger.per_vertex[u] += 1;
            self.ledger.colouring[u] = Some(c);
            touched.push(u);
        }
        self.ledger.violation = self.check(&touched);
        Ok(())
    }

    fn check(&self, touched: &[usize]) -> Option<String> {
        let col = &self.ledger.colouring;
        for &u in touched {
            let Some(c) = col[u] else {
                return Some(format!("vertex {u} left uncoloured"));
            };
            if !self.graph.lists[u].contains(&c) {
                return Some(format!("vertex {u} coloured {c} outside its list"));
            }
            if let Some(&w) = self.graph.adj[u].iter().find(|&&w| col[w] == Some(c)) {
                return Some(format!("adjacent vertices {u} and {w} share colour {c}"));
            }
        }
        None
    }
}

/// Runs `alg` on a whole event sequence.
pub fn run_stream(alg: &mut dyn StreamAlgorithm, events: &[StreamEvent]) -> Result<CostLedger> {
    let mut run = StreamRun::new(alg);
    for e in events {
        run.feed(e)?;
    }
    Ok(run.into_ledger())
}
