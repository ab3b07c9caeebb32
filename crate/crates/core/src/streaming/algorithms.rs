use std::collections::BTreeSet;

use super::{StreamAlgorithm, StreamGraph};
use crate::error::{Error, Result};

pub const ALGORITHMS: [&str; 2] = ["first_fit", "recolour_smaller"];

pub fn reference_algorithm(name: &str) -> Result<Box<dyn StreamAlgorithm>> {
    match name {
        "first_fit" => Ok(Box::new(FirstFit)),
        "recolour_smaller" => Ok(Box::new(RecolourSmaller)),
        _ => Err(Error::InvalidParameter(format!(
            "unknown algorithm {name:?}; expected one of {ALGORITHMS:?}"
        ))),
    }
}

/// Least list colour unused by the neighbours of `v`.
fn free_colour(g: &StreamGraph, col: &[Option<u32>], v: usize) -> Option<u32> {
    g.lists[v]
        .iter()
        .copied()
        .find(|&c| g.neighbours(v).iter().all(|&u| col[u] != Some(c)))
}

/// A way to free colour `c` at `v`: swap `c` and `d` on `chain`.
struct Flip {
    c: u32,
    d: u32,
    chain: BTreeSet<usize>,
    /// Lowest neighbour of `v` inside the chain.
    anchor: usize,
}

/// Every Kempe-chain flip that frees some colour of `v`'s list: the
/// `c`/`d` components through `v`'s `c`-coloured neighbours are swapped,
/// provided no `d`-coloured neighbour of `v` is dragged along and every
/// swapped vertex may take its new colour.
fn flips(g: &StreamGraph, col: &[Option<u32>], v: usize) -> Vec<Flip> {
    let palette: BTreeSet<u32> = g.lists.iter().flatten().copied().collect();
    let mut out = Vec::new();
    for &c in &g.lists[v] {
        for &d in palette.iter().filter(|&&d| d != c) {
            let mut chain = BTreeSet::new();
            let mut stack: Vec<usize> = g
                .neighbours(v)
                .iter()
                .copied()
                .filter(|&u| col[u] == Some(c))
                .collect();
            let Some(&anchor) = stack.iter().min() else {
                continue;
            };
            while let Some(u) = stack.pop() {
                if u == v || !chain.insert(u) {
                    continue;
                }
                stack.extend(
                    g.neighbours(u)
                        .iter()
                        .copied()
                        .filter(|&w| w != v && (col[w] == Some(c) || col[w] == Some(d))),
                );
            }
            let dragged = g.neighbours(v).iter().any(|&u| col[u] == Some(d) && chain.contains(&u));
            let listed = chain.iter().all(|&u| {
                let new = if col[u] == Some(c) { d } else { c };
                g.lists[u].contains(&new)
            });
            if !dragged && listed {
                out.push(Flip { c, d, chain, anchor });
            }
        }
    }
    out
}

fn apply(flip: &Flip, col: &[Option<u32>], v: usize) -> Vec<(usize, u32)> {
    let mut out: Vec<(usize, u32)> = flip
        .chain
        .iter()
        .map(|&u| (u, if col[u] == Some(flip.c) { flip.d } else { flip.c }))
        .collect();
    out.push((v, flip.c));
    out
}

/// Falls back to the least list colour, which leaves a conflict.
fn give_up(g: &StreamGraph, v: usize) -> Vec<(usize, u32)> {
    vec![(v, *g.lists[v].first().expect("non-empty list"))]
}

/// Least free colour; when none is free, the Kempe flip freeing the least
/// colour (then the least partner colour).
#[derive(Clone, Copy, Debug, Default)]
pub struct FirstFit;

impl StreamAlgorithm for FirstFit {
    fn name(&self) -> &str {
        "first_fit"
    }

    fn respond(&mut self, g: &StreamGraph, col: &[Option<u32>], v: usize) -> Vec<(usize, u32)> {
        if let Some(c) = free_colour(g, col, v) {
            return vec![(v, c)];
        }
        match flips(g, col, v).first() {
            Some(f) => apply(f, col, v),
            None => give_up(g, v),
        }
    }
}

/// Least free colour; when none is free, the Kempe flip recolouring the
/// fewest vertices, ties going to the chain through the lower-id neighbour.
#[derive(Clone, Copy, Debug, Default)]
pub struct RecolourSmaller;

impl StreamAlgorithm for RecolourSmaller {
    fn name(&self) -> &str {
        "recolour_smaller"
    }

    fn respond(&mut self, g: &StreamGraph, col: &[Option<u32>], v: usize) -> Vec<(usize, u32)> {
        if let Some(c) = free_colour(g, col, v) {
            return vec![(v, c)];
        }
        let options = flips(g, col, v);
        match options.iter().min_by_key(|f| (f.chain.len(), f.anchor, f.c, f.d)) {
            Some(f) => apply(f, col, v),
            None => give_up(g, v),
        }
    }
}
