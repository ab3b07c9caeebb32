use super::{EraserMap, Graph};
use crate::error::{Error, Result};
use crate::vertex_set::VertexSet;

/// Vertex ids of the eight-vertex gadget on which Painter beats lists of
/// sizes (2, ..., 2, 3) although every such list assignment is colourable.
pub mod gadget {
    pub const X1: usize = 0;
    pub const X2: usize = 1;
    pub const V1: usize = 2;
    pub const V2: usize = 3;
    pub const V3: usize = 4;
    pub const V4: usize = 5;
    pub const V5: usize = 6;
    pub const V6: usize = 7;
    /// First subdivision vertex `y1` of `subdivided_gadget`.
    pub const Y1: usize = 8;

    pub const LABELS: [&str; 8] = ["x1", "x2", "v1", "v2", "v3", "v4", "v5", "v6"];

    pub const EDGES: [(usize, usize); 10] = [
        (X1, X2),
        (X1, V1),
        (X2, V5),
        (V1, V2),
        (V1, V4),
        (V1, V5),
        (V2, V3),
        (V3, V4),
        (V3, V6),
        (V5, V6),
    ];

    /// The induced odd cycle v1, v4, v3, v6, v5.
    pub const ODD_CYCLE: [usize; 5] = [V1, V4, V3, V6, V5];
}

/// Vertex ids of the eight-vertex planar triangulation with an independent
/// set of size four: rim `a..f`, hub `v`, and `u` inside triangle `b d f`.
pub mod triangulation {
    pub const A: usize = 0;
    pub const B: usize = 1;
    pub const C: usize = 2;
    pub const D: usize = 3;
    pub const E: usize = 4;
    pub const F: usize = 5;
    pub const HUB: usize = 6;
    pub const U: usize = 7;
}

fn param(params: &[usize], i: usize, family: &str) -> Result<usize> {
    params
        .get(i)
        .copied()
        .ok_or_else(|| Error::InvalidParameter(format!("{family} needs parameter #{}", i + 1)))
}

fn no_params(params: &[usize], family: &str) -> Result<()> {
    if params.is_empty() {
        Ok(())
    } else {
        Err(Error::InvalidParameter(format!("{family} takes no parameters")))
    }
}

fn schauz_gadget() -> (Graph, EraserMap) {
    let g = Graph::from_edges(8, &gadget::EDGES).with_name("schauz_gadget");
    let mut e = EraserMap::uniform(8, 1);
    e.set(gadget::V5, 2);
    (g, e)
}

fn subdivided_gadget(n: usize) -> Result<(Graph, EraserMap)> {
    if n < 9 {
        return Err(Error::InvalidParameter(format!(
            "subdivided_gadget needs n >= 9, got {n}"
        )));
    }
    let mut g = Graph::new(n)?;
    for &(u, v) in gadget::EDGES.iter() {
        if (u, v) != (gadget::V5, gadget::V6) {
            g.add_edge(u, v)?;
        }
    }
    let mut prev = gadget::V5;
    for y in gadget::Y1..n {
        g.add_edge(prev, y)?;
        prev = y;
    }
    g.add_edge(prev, gadget::V6)?;
    let mut e = EraserMap::uniform(n, 1);
    e.set(gadget::V5, 2);
    Ok((g.with_name(format!("subdivided_gadget_{n}")), e))
}

fn fig1_triangulation() -> Graph {
    use triangulation::*;
    let mut edges = Vec::new();
    for i in 0..6 {
        edges.push((i, (i + 1) % 6));
        edges.push((HUB, i));
    }
    edges.extend([(F, B), (B, D), (D, F), (U, B), (U, D), (U, F)]);
    Graph::from_edges(8, &edges).with_name("fig1_triangulation")
}

/// Builds a named graph family. Families other than the gadgets get zero
/// erasers everywhere.
///
/// Families: `empty n`, `path n`, `cycle n`, `complete n`,
/// `complete_multipartite a b ...`, `star n` (n leaves), `schauz_gadget`,
/// `subdivided_gadget n`, `fig1_triangulation`.
pub fn gen_named(name: &str, params: &[usize]) -> Result<(Graph, EraserMap)> {
    let g = match name {
        "schauz_gadget" => {
            no_params(params, name)?;
            return Ok(schauz_gadget());
        }
        "subdivided_gadget" => return subdivided_gadget(param(params, 0, name)?),
        "fig1_triangulation" => {
            no_params(params, name)?;
            fig1_triangulation()
        }
        "empty" => Graph::new(param(params, 0, name)?)?.with_name(format!("empty_{}", params[0])),
        "path" => {
            let n = param(params, 0, name)?;
            let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
            Graph::new(n)?;
            Graph::from_edges(n, &edges).with_name(format!("path_{n}"))
        }
        "cycle" => {
            let n = param(params, 0, name)?;
            if n < 3 {
                return Err(Error::InvalidParameter(format!("cycle needs n >= 3, got {n}")));
            }
            Graph::new(n)?;
            let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
            Graph::from_edges(n, &edges).with_name(format!("cycle_{n}"))
        }
        "complete" => {
            let n = param(params, 0, name)?;
            Graph::new(n)?;
            let edges: Vec<_> = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .collect();
            Graph::from_edges(n, &edges).with_name(format!("complete_{n}"))
        }
        "star" => {
            let leaves = param(params, 0, name)?;
            Graph::new(leaves + 1)?;
            let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
            Graph::from_edges(leaves + 1, &edges).with_name(format!("star_{leaves}"))
        }
        "complete_multipartite" => {
            if params.is_empty() || params.contains(&0) {
                return Err(Error::InvalidParameter(
                    "complete_multipartite needs positive part sizes".into(),
                ));
            }
            let n: usize = params.iter().sum();
            let mut g = Graph::new(n)?;
            let mut part = Vec::with_capacity(n);
            for (i, &size) in params.iter().enumerate() {
                part.extend(std::iter::repeat_n(i, size));
            }
            for u in 0..n {
                for v in u + 1..n {
                    if part[u] != part[v] {
                        g.add_edge(u, v)?;
                    }
                }
            }
            let label: Vec<String> = params.iter().map(|p| p.to_string()).collect();
            g.with_name(format!("complete_multipartite_{}", label.join("_")))
        }
        other => return Err(Error::UnknownFamily(other.to_string())),
    };
    let n = g.n();
    Ok((g, EraserMap::zeros(n)))
}

/// Series-parallel decomposition tree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SpTree {
    Leaf,
    /// Sink of the left part is identified with the source of the right part.
    Series(Box<SpTree>, Box<SpTree>),
    /// Sources identified, sinks identified.
    Parallel(Box<SpTree>, Box<SpTree>),
}

impl SpTree {
    pub fn series(a: SpTree, b: SpTree) -> SpTree {
        SpTree::Series(Box::new(a), Box::new(b))
    }

    pub fn parallel(a: SpTree, b: SpTree) -> SpTree {
        SpTree::Parallel(Box::new(a), Box::new(b))
    }

    pub fn leaves(&self) -> usize {
        match self {
            SpTree::Leaf => 1,
            SpTree::Series(a, b) | SpTree::Parallel(a, b) => a.leaves() + b.leaves(),
        }
    }

    /// Number of vertices of the realization.
    pub fn vertex_count(&self) -> usize {
        fn inner(t: &SpTree) -> usize {
            match t {
                SpTree::Leaf => 0,
                SpTree::Series(a, b) => inner(a) + inner(b) + 1,
                SpTree::Parallel(a, b) => inner(a) + inner(b),
            }
        }
        inner(self) + 2
    }

    /// Every tree with exactly `k` leaves.
    pub fn with_leaves(k: usize) -> Vec<SpTree> {
        let mut table: Vec<Vec<SpTree>> = vec![Vec::new(), vec![SpTree::Leaf]];
        for size in 2..=k {
            let mut out = Vec::new();
            for left in 1..size {
                for a in &table[left] {
                    for b in &table[size - left] {
                        out.push(SpTree::series(a.clone(), b.clone()));
                        out.push(SpTree::parallel(a.clone(), b.clone()));
                    }
                }
            }
            table.push(out);
        }
        table.get(k).cloned().unwrap_or_default()
    }

    /// Every tree with between 1 and `k` leaves.
    pub fn up_to_leaves(k: usize) -> Vec<SpTree> {
        (1..=k).flat_map(SpTree::with_leaves).collect()
    }

    /// Normal form under commutativity of parallel composition.
    pub fn canonical(&self) -> SpTree {
        match self {
            SpTree::Leaf => SpTree::Leaf,
            SpTree::Series(a, b) => SpTree::series(a.canonical(), b.canonical()),
            SpTree::Parallel(a, b) => {
                let (a, b) = (a.canonical(), b.canonical());
                let (ka, kb) = (format!("{a:?}"), format!("{b:?}"));
                if ka <= kb {
                    SpTree::parallel(a, b)
                } else {
                    SpTree::parallel(b, a)
                }
            }
        }
    }
}

/// One node of a realized decomposition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpNode {
    pub source: usize,
    pub sink: usize,
    pub vertices: VertexSet,
    pub kind: SpNodeKind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpNodeKind {
    Leaf,
    Series { left: usize, right: usize, middle: usize },
    Parallel { left: usize, right: usize },
}

/// A series-parallel graph with its decomposition nodes; `nodes[root]` spans
/// the whole graph.
#[derive(Clone, Debug)]
pub struct SpRealization {
    pub graph: Graph,
    pub source: usize,
    pub sink: usize,
    pub nodes: Vec<SpNode>,
    pub root: usize,
}

/// Realizes `tree` as a simple graph with source 0 and sink 1; parallel
/// copies of an edge collapse into one.
pub fn gen_series_parallel(tree: &SpTree) -> Result<SpRealization> {
    let n = tree.vertex_count();
    let mut graph = Graph::new(n)?;
    let mut nodes = Vec::new();
    let mut next = 2;
    let root = realize(tree, 0, 1, &mut next, &mut graph, &mut nodes);
    graph.set_name(Some("series_parallel".into()));
    Ok(SpRealization {
        graph,
        source: 0,
        sink: 1,
        nodes,
        root,
    })
}

fn realize(
    tree: &SpTree,
    s: usize,
    t: usize,
    next: &mut usize,
    g: &mut Graph,
    nodes: &mut Vec<SpNode>,
) -> usize {
    let (kind, vertices) = match tree {
        SpTree::Leaf => {
            g.add_edge(s, t).expect("distinct terminals");
            (SpNodeKind::Leaf, VertexSet::singleton(s).with(t))
        }
        SpTree::Series(a, b) => {
            let m = *next;
            *next += 1;
            let left = realize(a, s, m, next, g, nodes);
            let right = realize(b, m, t, next, g, nodes);
            let vs = nodes[left].vertices.union(nodes[right].vertices);
            (SpNodeKind::Series { left, right, middle: m }, vs)
        }
        SpTree::Parallel(a, b) => {
            let left = realize(a, s, t, next, g, nodes);
            let right = realize(b, s, t, next, g, nodes);
            let vs = nodes[left].vertices.union(nodes[right].vertices);
            (SpNodeKind::Parallel { left, right }, vs)
        }
    };
    nodes.push(SpNode {
        source: s,
        sink: t,
        vertices,
        kind,
    });
    nodes.len() - 1
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fig1_shape() {
        let (g, e) = gen_named("fig1_triangulation", &[]).unwrap();
        assert_eq!((g.n(), g.edge_count()), (8, 18));
        assert_eq!(e.total(), 0);
    }

    #[test]
    fn gadget_shape() {
        let (g, e) = gen_named("schauz_gadget", &[]).unwrap();
        assert_eq!((g.n(), g.edge_count()), (8, 10));
        let expected: Vec<u32> = (0..8).map(|v| if v == gadget::V5 { 2 } else { 1 }).collect();
        assert_eq!(e.0, expected);
        let cycle = g.induced(gadget::ODD_CYCLE.into_iter().collect());
        assert_eq!(cycle.graph.edge_count(), 5);
        assert!((0..5).all(|v| cycle.graph.degree(v) == 2));
    }

    #[test]
    fn subdivided_gadget_shape() {
        let (g, e) = gen_named("subdivided_gadget", &[10]).unwrap();
        assert_eq!((g.n(), g.edge_count()), (10, 12));
        assert!(!g.has_edge(gadget::V5, gadget::V6));
        assert!(g.has_edge(gadget::V5, 8) && g.has_edge(8, 9) && g.has_edge(9, gadget::V6));
        assert_eq!(e.get(8), 1);
        assert_eq!(e.get(gadget::V5), 2);
        assert!(gen_named("subdivided_gadget", &[8]).is_err());
        let (g9, _) = gen_named("subdivided_gadget", &[9]).unwrap();
        assert_eq!(g9.edge_count(), 11);
    }

    #[test]
    fn multipartite_and_errors() {
        let (g, _) = gen_named("complete_multipartite", &[2, 3]).unwrap();
        assert_eq!((g.n(), g.edge_count()), (5, 6));
        assert!(!g.has_edge(0, 1) && !g.has_edge(2, 4) && g.has_edge(0, 4));
        assert!(matches!(gen_named("petersen", &[]), Err(Error::UnknownFamily(_))));
        assert!(gen_named("cycle", &[2]).is_err());
        assert!(gen_named("complete", &[65]).is_err());
    }

    #[test]
    fn series_parallel_realizations() {
        let leaf = gen_series_parallel(&SpTree::Leaf).unwrap();
        assert_eq!((leaf.graph.n(), leaf.graph.edge_count()), (2, 1));
        assert_eq!((leaf.source, leaf.sink), (0, 1));

        let p3 = gen_series_parallel(&SpTree::series(SpTree::Leaf, SpTree::Leaf)).unwrap();
        assert_eq!((p3.graph.n(), p3.graph.edge_count()), (3, 2));
        assert_eq!(p3.graph.degree(p3.source), 1);
        assert_eq!(p3.graph.degree(p3.sink), 1);

        let tri = gen_series_parallel(&SpTree::parallel(
            SpTree::series(SpTree::Leaf, SpTree::Leaf),
            SpTree::Leaf,
        ))
        .unwrap();
        assert_eq!((tri.graph.n(), tri.graph.edge_count()), (3, 3));

        let doubled = gen_series_parallel(&SpTree::parallel(SpTree::Leaf, SpTree::Leaf)).unwrap();
        assert_eq!(doubled.graph.edge_count(), 1);
    }

    #[test]
    fn tree_enumeration_counts() {
        // Catalan(k - 1) shapes times 2^(k - 1) labellings.
        let counts: Vec<usize> = (1..=5).map(|k| SpTree::with_leaves(k).len()).collect();
        assert_eq!(counts, vec![1, 2, 8, 40, 224]);
    }
}
