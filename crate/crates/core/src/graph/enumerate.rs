use std::collections::HashSet;

use rand::Rng;

use super::Graph;

/// Code of the upper-triangle adjacency bits under the given relabelling.
fn code(g: &Graph, perm: &[usize]) -> u64 {
    let n = g.n();
    let mut inv = vec![0; n];
    for (v, &p) in perm.iter().enumerate() {
        inv[p] = v;
    }
    let mut bits = 0u64;
    let mut idx = 0;
    for i in 0..n {
        for j in i + 1..n {
            if g.has_edge(inv[i], inv[j]) {
                bits |= 1 << idx;
            }
            idx += 1;
        }
    }
    bits
}

/// Isomorphism-invariant code: minimum adjacency code over all relabellings
/// that list vertices in non-increasing degree order. For at most 11 vertices.
pub fn canonical_form(g: &Graph) -> (usize, u64) {
    let n = g.n();
    assert!(n <= 11, "canonical_form supports at most 11 vertices");
    // Group vertices by degree; only permute within a group.
    let mut by_degree: Vec<usize> = (0..n).collect();
    by_degree.sort_by_key(|&v| std::cmp::Reverse(g.degree(v)));
    let mut groups: Vec<Vec<usize>> = Vec::new();
    for &v in &by_degree {
        match groups.last_mut() {
            Some(grp) if g.degree(grp[0]) == g.degree(v) => grp.push(v),
            _ => groups.push(vec![v]),
        }
    }
    let mut best = u64::MAX;
    let mut order = Vec::with_capacity(n);
    fn rec(g: &Graph, groups: &mut [Vec<usize>], gi: usize, order: &mut Vec<usize>, best: &mut u64) {
        if gi == groups.len() {
            let mut perm = vec![0; g.n()];
            for (pos, &v) in order.iter().enumerate() {
                perm[v] = pos;
            }
            *best = (*best).min(code(g, &perm));
            return;
        }
        let len = groups[gi].len();
        permute(g, groups, gi, 0, len, order, best);
    }
    fn permute(
        g: &Graph,
        groups: &mut [Vec<usize>],
        gi: usize,
        k: usize,
        len: usize,
        order: &mut Vec<usize>,
        best: &mut u64,
    ) {
        if k == len {
            let grp = groups[gi].clone();
            order.extend_from_slice(&grp);
            rec(g, groups, gi + 1, order, best);
            order.truncate(order.len() - len);
            return;
        }
        for i in k..len {
            groups[gi].swap(k, i);
            permute(g, groups, gi, k + 1, len, order, best);
            groups[gi].swap(k, i);
        }
    }
    rec(g, &mut groups, 0, &mut order, &mut best);
    (n, best)
}

/// One representative per isomorphism class of graphs on exactly `n`
/// vertices, built by vertex augmentation.
pub fn graphs_up_to_isomorphism(n: usize) -> Vec<Graph> {
    let mut level = vec![Graph::new(0).expect("empty graph")];
    for size in 1..=n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &level {
            for nbrs in 0u64..(1 << (size - 1)) {
                let mut h = Graph::new(size).expect("within budget");
                for (u, v) in g.edges() {
                    h.add_edge(u, v).expect("copied edge");
                }
                for u in 0..size - 1 {
                    if nbrs >> u & 1 == 1 {
                        h.add_edge(u, size - 1).expect("new edge");
                    }
                }
                if seen.insert(canonical_form(&h)) {
                    next.push(h);
                }
            }
        }
        level = next;
    }
    level
}

/// Erdős–Rényi graph: each edge present with probability `p`.
pub fn random_graph<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut g = Graph::new(n).expect("within budget");
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v).expect("valid pair");
            }
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_class_counts() {
        // OEIS A000088.
        let counts: Vec<usize> = (0..=6).map(|n| graphs_up_to_isomorphism(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34, 156]);
    }

    #[test]
    fn canonical_form_is_relabelling_invariant() {
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (1, 4)]);
        let h = g.permuted(&[4, 2, 0, 1, 3]);
        assert_eq!(canonical_form(&g), canonical_form(&h));
        let p5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]);
        assert_ne!(canonical_form(&g), canonical_form(&p5));
    }
}
