//! Off-line list colouring and choosability.

use std::collections::BTreeSet;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::{Graph, ListAssignment};
use crate::vertex_set::VertexSet;

/// Finds a proper colouring with `c(v) ∈ L(v)` by backtracking on the vertex
/// with the fewest remaining options.
pub fn is_list_colorable(g: &Graph, l: &ListAssignment) -> Option<Vec<u32>> {
    assert_eq!(l.len(), g.n(), "one list per vertex");
    fn go(g: &Graph, l: &ListAssignment, colour: &mut [u32], todo: VertexSet) -> bool {
        let options = |v: usize| {
            l.list(v)
                .iter()
                .copied()
                .filter(|c| g.neighbours(v).iter().all(|w| colour[w] != *c))
                .collect::<Vec<u32>>()
        };
        let Some((v, opts)) = todo
            .iter()
            .map(|v| (v, options(v)))
            .min_by_key(|(v, o)| (o.len(), *v))
        else {
            return true;
        };
        for c in opts {
            colour[v] = c;
            if go(g, l, colour, todo.without(v)) {
                return true;
            }
        }
        colour[v] = 0;
        false
    }
    let mut colour = vec![0; g.n()];
    go(g, l, &mut colour, g.vertices()).then_some(colour)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChoosabilityMode {
    /// Every list system up to renaming colours; small instances only.
    Exhaustive,
    /// Random list systems; can refute but never prove.
    Sampled { seed: u64, trials: u64 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Confidence {
    /// The answer is a proof.
    Exhaustive,
    /// `choosable == true` only means no counterexample turned up.
    Sampled { seed: u64, trials: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChoosabilityVerdict {
    pub choosable: bool,
    pub confidence: Confidence,
    pub counterexample: Option<ListAssignment>,
    /// List systems examined.
    pub checked: u64,
}

pub const EXHAUSTIVE_MAX_VERTICES: usize = 6;
pub const EXHAUSTIVE_MAX_LIST: usize = 3;

/// Is `g` colourable from every list assignment with `|L(v)| = sizes[v]`?
/// Larger lists only help, so exact sizes cover "at least" as well.
pub fn is_choosable(g: &Graph, sizes: &[usize], mode: ChoosabilityMode) -> Result<ChoosabilityVerdict> {
    if sizes.len() != g.n() {
        return Err(Error::InvalidParameter(format!(
            "{} list sizes for {} vertices",
            sizes.len(),
            g.n()
        )));
    }
    if sizes.contains(&0) {
        return Err(Error::InvalidParameter("list sizes must be positive".into()));
    }
    match mode {
        ChoosabilityMode::Exhaustive => exhaustive(g, sizes),
        ChoosabilityMode::Sampled { seed, trials } => Ok(sampled(g, sizes, seed, trials)),
    }
}

/// Colour classes (vertex sets sharing a colour) are generated one at a
/// time; each new class contains the lowest vertex still short of colours,
/// and classes with the same such vertex come in non-increasing order, so
/// every multiset of classes appears exactly once.
fn exhaustive(g: &Graph, sizes: &[usize]) -> Result<ChoosabilityVerdict> {
    if g.n() > EXHAUSTIVE_MAX_VERTICES {
        return Err(Error::SizeLimit {
            n: g.n(),
            limit: EXHAUSTIVE_MAX_VERTICES,
        });
    }
    if sizes.iter().any(|&s| s > EXHAUSTIVE_MAX_LIST) {
        return Err(Error::InvalidParameter(format!(
            "exhaustive mode supports list sizes up to {EXHAUSTIVE_MAX_LIST}"
        )));
    }
    struct Search<'a> {
        g: &'a Graph,
        classes: Vec<VertexSet>,
        checked: u64,
        bad: Option<Vec<VertexSet>>,
    }
    impl Search<'_> {
        fn go(&mut self, demand: &mut [usize], prev: Option<(usize, VertexSet)>) {
            if self.bad.is_some() {
                return;
            }
            let Some(low) = (0..demand.len()).find(|&v| demand[v] > 0) else {
                self.checked += 1;
                if !classes_colourable(self.g, &self.classes) {
                    self.bad = Some(self.classes.clone());
                }
                return;
            };
            let open: VertexSet = (0..demand.len()).filter(|&v| demand[v] > 0).collect();
            for s in open.without(low).subsets().map(|s| s.with(low)) {
                if let Some((pl, ps)) = prev {
                    if pl == low && s > ps {
                        continue;
                    }
                }
                for v in s {
                    demand[v] -= 1;
                }
                self.classes.push(s);
                self.go(demand, Some((low, s)));
                self.classes.pop();
                for v in s {
                    demand[v] += 1;
                }
                if self.bad.is_some() {
                    return;
                }
            }
        }
    }
    let mut search = Search {
        g,
        classes: Vec::new(),
        checked: 0,
        bad: None,
    };
    search.go(&mut sizes.to_vec(), None);
    let counterexample = search.bad.map(|classes| lists_from_classes(g.n(), &classes));
    Ok(ChoosabilityVerdict {
        choosable: counterexample.is_none(),
        confidence: Confidence::Exhaustive,
        counterexample,
        checked: search.checked,
    })
}

fn lists_from_classes(n: usize, classes: &[VertexSet]) -> ListAssignment {
    let mut lists = vec![BTreeSet::new(); n];
    for (i, class) in classes.iter().enumerate() {
        for v in *class {
            lists[v].insert(i as u32 + 1);
        }
    }
    ListAssignment::new(lists).expect("every vertex has demand >= 1")
}

/// Can each vertex pick one of its classes so that every class's pickers
/// are independent?
fn classes_colourable(g: &Graph, classes: &[VertexSet]) -> bool {
    fn go(g: &Graph, classes: &[VertexSet], used: &mut [VertexSet], todo: VertexSet) -> bool {
        let choices = |used: &[VertexSet], v: usize| -> Vec<usize> {
            (0..classes.len())
                .filter(|&c| classes[c].contains(v) && g.neighbours(v).is_disjoint(used[c]))
                .collect()
        };
        let Some(v) = todo.iter().min_by_key(|&v| (choices(used, v).len(), v)) else {
            return true;
        };
        let opts = choices(used, v);
        for c in opts {
            used[c].insert(v);
            if go(g, classes, used, todo.without(v)) {
                return true;
            }
            used[c].remove(v);
        }
        false
    }
    let mut used = vec![VertexSet::EMPTY; classes.len()];
    go(g, classes, &mut used, g.vertices())
}

fn sampled(g: &Graph, sizes: &[usize], seed: u64, trials: u64) -> ChoosabilityVerdict {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let max = sizes.iter().copied().max().unwrap_or(1);
    let confidence = Confidence::Sampled { seed, trials };
    for t in 0..trials {
        // Small palettes make shared colours, and hence conflicts, likely.
        let universe = rng.gen_range(max..=2 * max + 1);
        let lists: Vec<BTreeSet<u32>> = sizes
            .iter()
            .map(|&k| {
                sample(&mut rng, universe, k)
                    .into_iter()
                    .map(|c| c as u32 + 1)
                    .collect()
            })
            .collect();
        let l = ListAssignment::new(lists).expect("non-empty lists");
        if is_list_colorable(g, &l).is_none() {
            return ChoosabilityVerdict {
                choosable: false,
                confidence,
                counterexample: Some(l),
                checked: t + 1,
            };
        }
    }
    ChoosabilityVerdict {
        choosable: true,
        confidence,
        counterexample: None,
        checked: trials,
    }
}

/// Least `k` such that every assignment of `k`-lists admits a colouring.
/// Exact, within the exhaustive limits.
pub fn choice_number(g: &Graph) -> Result<usize> {
    if g.n() == 0 {
        return Ok(0);
    }
    for k in 1..=EXHAUSTIVE_MAX_LIST {
        if is_choosable(g, &vec![k; g.n()], ChoosabilityMode::Exhaustive)?.choosable {
            return Ok(k);
        }
    }
    Err(Error::InvalidParameter(format!(
        "choice number exceeds {EXHAUSTIVE_MAX_LIST}, the exhaustive limit"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::gen_named;

    fn named(name: &str, params: &[usize]) -> Graph {
        gen_named(name, params).unwrap().0
    }

    #[test]
    fn list_colouring_examples() {
        let k2 = named("complete", &[2]);
        assert!(is_list_colorable(&k2, &ListAssignment::from_slices(&[&[1], &[1]]).unwrap()).is_none());
        let c = is_list_colorable(&k2, &ListAssignment::from_slices(&[&[1], &[2]]).unwrap()).unwrap();
        assert_eq!(c, vec![1, 2]);
        let c4 = named("cycle", &[4]);
        let c = is_list_colorable(&c4, &ListAssignment::uniform(4, &[1, 2]).unwrap()).unwrap();
        assert!(c4.edges().all(|(u, v)| c[u] != c[v]));
        let c5 = named("cycle", &[5]);
        assert!(is_list_colorable(&c5, &ListAssignment::uniform(5, &[1, 2]).unwrap()).is_none());
    }

    #[test]
    fn choosability_examples() {
        let c4 = named("cycle", &[4]);
        let v = is_choosable(&c4, &[2; 4], ChoosabilityMode::Exhaustive).unwrap();
        assert!(v.choosable);
        assert_eq!(v.confidence, Confidence::Exhaustive);

        let k2 = named("complete", &[2]);
        let v = is_choosable(&k2, &[1, 1], ChoosabilityMode::Exhaustive).unwrap();
        assert!(!v.choosable);
        let bad = v.counterexample.unwrap();
        assert_eq!(bad.list(0), bad.list(1));

        let k3 = named("complete", &[3]);
        let v = is_choosable(&k3, &[2; 3], ChoosabilityMode::Exhaustive).unwrap();
        let bad = v.counterexample.unwrap();
        assert!(is_list_colorable(&k3, &bad).is_none());
    }

    #[test]
    fn choice_numbers() {
        assert_eq!(choice_number(&named("cycle", &[3])).unwrap(), 3);
        assert_eq!(choice_number(&named("path", &[3])).unwrap(), 2);
        assert_eq!(choice_number(&named("empty", &[4])).unwrap(), 1);
        assert_eq!(choice_number(&named("cycle", &[5])).unwrap(), 3);
        assert!(choice_number(&named("complete", &[4])).is_err());
        assert!(choice_number(&named("empty", &[7])).is_err());
    }

    #[test]
    fn enumeration_counts_small_systems() {
        // Two vertices, one colour each: classes {0,1} or {0},{1}.
        let e2 = named("empty", &[2]);
        assert_eq!(exhaustive(&e2, &[1, 1]).unwrap().checked, 2);
        // One vertex with two colours: only {0},{0}.
        let e1 = named("empty", &[1]);
        assert_eq!(exhaustive(&e1, &[2]).unwrap().checked, 1);
        // Two vertices, two colours each, up to renaming: 5 systems
        // ({01,01}, {01,0,1}, {0,0,1,1} and the two mixed ones collapse).
        let v = exhaustive(&e2, &[2, 2]).unwrap();
        assert_eq!(v.checked, 3);
    }

    #[test]
    fn sampled_is_tagged_and_deterministic() {
        let c5 = named("cycle", &[5]);
        let mode = ChoosabilityMode::Sampled { seed: 7, trials: 200 };
        let a = is_choosable(&c5, &[2; 5], mode).unwrap();
        let b = is_choosable(&c5, &[2; 5], mode).unwrap();
        assert_eq!(a, b);
        assert!(!a.choosable, "odd cycles are not 2-choosable");
        assert!(matches!(a.confidence, Confidence::Sampled { seed: 7, trials: 200 }));
    }
}
