//! Brute-force oracles sharing no code with the library: plain adjacency
//! bitmasks, direct game recursion, naive colouring search.
#![allow(dead_code)]

use std::collections::HashMap;

#[derive(Clone, Debug)]
pub struct Bits {
    pub n: usize,
    pub adj: Vec<u64>,
}

impl Bits {
    pub fn new(n: usize, edges: &[(usize, usize)]) -> Self {
        let mut adj = vec![0u64; n];
        for &(u, v) in edges {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Bits { n, adj }
    }

    pub fn from_graph(g: &paintability::Graph) -> Self {
        let edges: Vec<_> = g.edges().collect();
        Bits::new(g.n(), &edges)
    }

    pub fn independent(&self, s: u64) -> bool {
        let mut rest = s;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if self.adj[v] & s != 0 {
                return false;
            }
        }
        true
    }

    pub fn full(&self) -> u64 {
        if self.n == 64 {
            u64::MAX
        } else {
            (1u64 << self.n) - 1
        }
    }
}

/// Iterates the non-empty subsets of `s`.
pub fn subsets(s: u64) -> impl Iterator<Item = u64> {
    let mut sub = s;
    let mut done = s == 0;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let out = sub;
        if sub == 0 {
            done = true;
            return None;
        }
        sub = (sub - 1) & s;
        Some(out)
    })
}

/// All subsets of `s`, the empty set included.
pub fn all_subsets(s: u64) -> impl Iterator<Item = u64> {
    subsets(s).chain(std::iter::once(0))
}

#[derive(Clone, Copy, PartialEq, Eq)]
pub enum Game {
    Classical,
    /// Corrector names a vertex the move must contain.
    Strong,
}

pub struct GameOracle {
    g: Bits,
    game: Game,
    memo: HashMap<(u64, Vec<u8>), bool>,
}

impl GameOracle {
    pub fn new(g: Bits, game: Game) -> Self {
        GameOracle {
            g,
            game,
            memo: HashMap::new(),
        }
    }

    pub fn corrector_wins(&mut self, erasers: &[u32]) -> bool {
        let er: Vec<u8> = erasers.iter().map(|&e| e as u8).collect();
        self.wins(self.g.full(), er)
    }

    /// Residual position: `alive` uncoloured vertices with the given erasers.
    pub fn wins_at(&mut self, alive: u64, erasers: &[u32]) -> bool {
        let er: Vec<u8> = erasers.iter().map(|&e| e as u8).collect();
        self.wins(alive, er)
    }

    fn wins(&mut self, alive: u64, mut er: Vec<u8>) -> bool {
        if alive == 0 {
            return true;
        }
        for (v, e) in er.iter_mut().enumerate().take(self.g.n) {
            if alive >> v & 1 == 0 {
                *e = 0;
            }
        }
        if let Some(&w) = self.memo.get(&(alive, er.clone())) {
            return w;
        }
        let w = match self.game {
            Game::Classical => subsets(alive).all(|p| self.answerable(alive, &er, p)),
            Game::Strong => (0..self.g.n).filter(|v| alive >> v & 1 == 1).any(|f| {
                subsets(alive)
                    .filter(|p| p >> f & 1 == 1)
                    .all(|p| self.answerable(alive, &er, p))
            }),
        };
        self.memo.insert((alive, er), w);
        w
    }

    fn answerable(&mut self, alive: u64, er: &[u8], painted: u64) -> bool {
        for keep in all_subsets(painted) {
            let erase = painted & !keep;
            if !self.g.independent(keep) {
                continue;
            }
            if (0..self.g.n).any(|v| erase >> v & 1 == 1 && er[v] == 0) {
                continue;
            }
            let mut next = er.to_vec();
            for (v, e) in next.iter_mut().enumerate() {
                if erase >> v & 1 == 1 {
                    *e -= 1;
                }
            }
            if self.wins(alive & !keep, next) {
                return true;
            }
        }
        false
    }
}

/// Least k with uniform k-1 erasers winning; 0 for the empty graph.
pub fn paint_number(g: &Bits) -> usize {
    if g.n == 0 {
        return 0;
    }
    let mut o = GameOracle::new(g.clone(), Game::Classical);
    (1..=g.n).find(|&k| o.corrector_wins(&vec![k as u32 - 1; g.n])).unwrap()
}

/// Lazy game by direct recursion. Painter paints a non-empty set of
/// uncoloured, unpainted vertices; Corrector defers (one unit of budget,
/// only while some such vertex would remain) or resolves every pending
/// colour at once, each with an independent kept part paid for by erasers.
pub struct LazyOracle {
    g: Bits,
    memo: HashMap<(u64, Vec<u8>, Vec<u64>, u32), bool>,
}

impl LazyOracle {
    pub fn new(g: Bits) -> Self {
        LazyOracle {
            g,
            memo: HashMap::new(),
        }
    }

    pub fn corrector_wins(&mut self, erasers: &[u32], budget: u32) -> bool {
        let er: Vec<u8> = erasers.iter().map(|&e| e as u8).collect();
        self.wins(self.g.full(), er, Vec::new(), budget)
    }

    fn wins(&mut self, alive: u64, mut er: Vec<u8>, pending: Vec<u64>, budget: u32) -> bool {
        if alive == 0 {
            return true;
        }
        for (v, e) in er.iter_mut().enumerate().take(self.g.n) {
            if alive >> v & 1 == 0 {
                *e = 0;
            }
        }
        let key = (alive, er.clone(), pending.clone(), budget);
        if let Some(&w) = self.memo.get(&key) {
            return w;
        }
        let busy = pending.iter().fold(0, |a, s| a | s);
        let free = alive & !busy;
        let w = subsets(free).all(|p| {
            let mut window = pending.clone();
            window.push(p);
            if budget > 0 && free & !p != 0 && self.wins(alive, er.clone(), window.clone(), budget - 1) {
                return true;
            }
            self.resolvable(alive, &er, &window, 0, budget)
        });
        self.memo.insert(key, w);
        w
    }

    fn resolvable(&mut self, alive: u64, er: &[u8], window: &[u64], i: usize, budget: u32) -> bool {
        if i == window.len() {
            return self.wins(alive, er.to_vec(), Vec::new(), budget);
        }
        let s = window[i];
        for keep in all_subsets(s) {
            let erase = s & !keep;
            if !self.g.independent(keep) || (0..self.g.n).any(|v| erase >> v & 1 == 1 && er[v] == 0) {
                continue;
            }
            let mut next = er.to_vec();
            for (v, e) in next.iter_mut().enumerate() {
                if erase >> v & 1 == 1 {
                    *e -= 1;
                }
            }
            if self.resolvable(alive & !keep, &next, window, i + 1, budget) {
                return true;
            }
        }
        false
    }
}

pub fn chromatic_number(g: &Bits) -> usize {
    fn extend(g: &Bits, colour: &mut Vec<usize>, k: usize) -> bool {
        let v = colour.len();
        if v == g.n {
            return true;
        }
        for c in 0..k {
            if (0..v).all(|u| g.adj[v] >> u & 1 == 0 || colour[u] != c) {
                colour.push(c);
                if extend(g, colour, k) {
                    return true;
                }
                colour.pop();
            }
        }
        false
    }
    (0..=g.n).find(|&k| extend(g, &mut Vec::new(), k)).unwrap()
}

pub fn independence_number(g: &Bits) -> usize {
    all_subsets(g.full())
        .filter(|&s| g.independent(s))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap()
}

/// Largest minimum degree met while peeling minimum-degree vertices.
pub fn degeneracy(g: &Bits) -> usize {
    let mut alive = g.full();
    let mut k = 0;
    while alive != 0 {
        let (v, d) = (0..g.n)
            .filter(|v| alive >> v & 1 == 1)
            .map(|v| (v, (g.adj[v] & alive).count_ones() as usize))
            .min_by_key(|&(_, d)| d)
            .unwrap();
        k = k.max(d);
        alive &= !(1 << v);
    }
    k
}

/// Whether `lists` admit a proper colouring.
pub fn list_colourable(g: &Bits, lists: &[Vec<u32>]) -> bool {
    fn go(g: &Bits, lists: &[Vec<u32>], colour: &mut Vec<u32>) -> bool {
        let v = colour.len();
        if v == g.n {
            return true;
        }
        for &c in &lists[v] {
            if (0..v).all(|u| g.adj[v] >> u & 1 == 0 || colour[u] != c) {
                colour.push(c);
                if go(g, lists, colour) {
                    return true;
                }
                colour.pop();
            }
        }
        false
    }
    go(g, lists, &mut Vec::new())
}

/// Canonical form by trying every permutation.
pub fn canonical(n: usize, edges: u64, pairs: &[(usize, usize)]) -> u64 {
    let mut index = vec![vec![0; n]; n];
    for (i, &(u, v)) in pairs.iter().enumerate() {
        index[u][v] = i;
        index[v][u] = i;
    }
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = u64::MAX;
    loop {
        let mut code = 0u64;
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if edges >> i & 1 == 1 {
                code |= 1 << index[perm[u]][perm[v]];
            }
        }
        best = best.min(code);
        // next permutation
        let Some(i) = (1..n).rev().find(|&i| perm[i - 1] < perm[i]) else {
            return best;
        };
        let j = (i..n).rev().find(|&j| perm[j] > perm[i - 1]).unwrap();
        perm.swap(i - 1, j);
        perm[i..].reverse();
    }
}

/// Number of graphs on `n` vertices up to isomorphism.
pub fn count_graphs(n: usize) -> usize {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut seen = std::collections::HashSet::new();
    for edges in 0..1u64 << pairs.len() {
        seen.insert(canonical(n, edges, &pairs));
    }
    seen.len()
}
