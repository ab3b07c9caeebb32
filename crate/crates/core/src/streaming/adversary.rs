use serde::Serialize;

use super::{reference_algorithm, CostLedger, StreamAlgorithm, StreamEvent, StreamRun};
use crate::error::{Error, Result};

/// One doubling step of the adversary.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Join {
    /// Vertices in the two paths being joined.
    pub left: usize,
    pub right: usize,
    /// Connector vertices revealed (1 or 2).
    pub q: u8,
    /// Cost the algorithm paid during the join.
    pub cost: u64,
    /// Assignments beyond colouring the new vertices.
    pub recolourings: u64,
}

#[derive(Clone, Debug)]
pub struct AdversaryRun {
    pub events: Vec<StreamEvent>,
    pub ledger: CostLedger,
    pub joins: Vec<Join>,
}

#[derive(Clone, Copy, Debug)]
struct Path {
    ends: (usize, usize),
    size: usize,
}

impl Path {
    fn other_end(&self, x: usize) -> usize {
        if self.ends.0 == x {
            self.ends.1
        } else {
            self.ends.0
        }
    }

    fn ends_by_id(&self) -> Vec<usize> {
        let (a, b) = self.ends;
        if a == b {
            vec![a]
        } else {
            vec![a.min(b), a.max(b)]
        }
    }
}

struct Adversary<'a> {
    run: StreamRun<'a>,
    events: Vec<StreamEvent>,
    joins: Vec<Join>,
}

impl Adversary<'_> {
    fn reveal(&mut self, edges: &[usize]) -> Result<usize> {
        let id = self.events.len();
        let e = StreamEvent::new(id, &[1, 2], edges);
        self.run.feed(&e)?;
        self.events.push(e);
        Ok(id)
    }

    /// First end pair (by id) whose colours differ.
    fn differing(&self, xs: &[usize], ys: &[usize]) -> Option<(usize, usize)> {
        xs.iter()
            .flat_map(|&x| ys.iter().map(move |&y| (x, y)))
            .find(|&(x, y)| self.run.colour(x) != self.run.colour(y))
    }

    fn build(&mut self, level: u32) -> Result<Path> {
        if level == 0 {
            let v = self.reveal(&[])?;
            return Ok(Path { ends: (v, v), size: 1 });
        }
        let p1 = self.build(level - 1)?;
        let p2 = self.build(level - 1)?;
        let before = self.run.ledger().total;
        let (x, y, q) = match self.differing(&p1.ends_by_id(), &p2.ends_by_id()) {
            Some((x, y)) => (x, y, 1),
            None => {
                let x = p1.ends_by_id()[0];
                let z0 = self.reveal(&[x])?;
                let ys = p2.ends_by_id();
                let y = self.differing(&[z0], &ys).map_or(ys[0], |(_, y)| y);
                (z0, y, 2)
            }
        };
        // With q = 2 the left path now ends at z0 instead of x.
        let left_end = if q == 2 { p1.other_end(p1.ends_by_id()[0]) } else { p1.other_end(x) };
        self.reveal(&[x.min(y), x.max(y)])?;
        let cost = self.run.ledger().total - before;
        self.joins.push(Join {
            left: p1.size,
            right: p2.size,
            q,
            cost,
            recolourings: cost - q as u64,
        });
        Ok(Path {
            ends: (left_end, p2.other_end(y)),
            size: p1.size + p2.size + q as usize,
        })
    }
}

/// Builds a single path over lists `{1,2}` by recursive doubling from
/// `target_n` isolated vertices, joining two halves so that the algorithm
/// must recolour one of them: with one connector when some pair of ends
/// already differs in colour, otherwise by first hanging a vertex `z0` off
/// an end of the left path and connecting through it.
pub fn adversary_paths(target_n: usize, alg: &mut dyn StreamAlgorithm) -> Result<AdversaryRun> {
    if target_n < 2 || !target_n.is_power_of_two() {
        return Err(Error::InvalidParameter(format!(
            "adversary size must be a power of two >= 2, got {target_n}"
        )));
    }
    let mut adv = Adversary {
        run: StreamRun::new(alg),
        events: Vec::new(),
        joins: Vec::new(),
    };
    adv.build(target_n.trailing_zeros())?;
    Ok(AdversaryRun {
        events: adv.events,
        ledger: adv.run.into_ledger(),
        joins: adv.joins,
    })
}

/// Cost of the off-line optimum on a `{1,2}`-listed path: one assignment
/// per vertex.
pub fn offline_path_cost(events: &[StreamEvent]) -> Result<u64> {
    let n = events.len();
    let not_path = |why: &str| Error::InvalidParameter(format!("not a {{1,2}}-listed path: {why}"));
    if n == 0 {
        return Err(not_path("empty"));
    }
    let mut degree = vec![0usize; n];
    let mut edges = 0;
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for (i, e) in events.iter().enumerate() {
        if e.id != i {
            return Err(not_path("ids out of order"));
        }
        if e.list.iter().copied().ne([1, 2]) {
            return Err(not_path("list other than {1,2}"));
        }
        for &u in &e.back_edges {
            if u >= i {
                return Err(not_path("edge to a later vertex"));
            }
            degree[u] += 1;
            degree[i] += 1;
            edges += 1;
            let (a, b) = (find(&mut parent, u), find(&mut parent, i));
            parent[a] = b;
        }
    }
    if degree.iter().any(|&d| d > 2) {
        return Err(not_path("vertex of degree above 2"));
    }
    let root = find(&mut parent, 0);
    if edges != n - 1 || (0..n).any(|v| find(&mut parent, v) != root) {
        return Err(not_path("not connected or has a cycle"));
    }
    Ok(n as u64)
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CompetitiveRow {
    pub n: usize,
    pub online_cost: u64,
    pub offline_cost: u64,
    pub ratio: f64,
}

/// Runs the adversary against the named algorithm for every size.
pub fn competitive_table(sizes: &[usize], algorithm: &str) -> Result<Vec<CompetitiveRow>> {
    sizes
        .iter()
        .map(|&n| {
            let mut alg = reference_algorithm(algorithm)?;
            let run = adversary_paths(n, alg.as_mut())?;
            let online_cost = run.ledger.cost().ok_or_else(|| {
                Error::Stream(format!(
                    "{algorithm} broke the colouring at n = {n}: {}",
                    run.ledger.violation.clone().unwrap_or_default()
                ))
            })?;
            let offline_cost = offline_path_cost(&run.events)?;
            Ok(CompetitiveRow {
                n,
                online_cost,
                offline_cost,
                ratio: online_cost as f64 / offline_cost as f64,
            })
        })
        .collect()
}
