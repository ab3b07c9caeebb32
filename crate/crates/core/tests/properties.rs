mod common;

use common::{Bits, Game, GameOracle};
use paintability::engine::{play, read_trace, validate_trace, write_trace, Model};
use paintability::graph::{
    chromatic_number, components, degeneracy, export_dot, gen_named, independence_number, parse_graph,
    serialize_graph, SpTree,
};
use paintability::solver::{is_paintable, paint_number, SolveOptions};
use paintability::strategy::optimal_strategies;
use paintability::{EraserMap, Error, Graph, VertexSet};
use proptest::prelude::*;

fn graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let edges: Vec<_> = pairs.zip(bits).filter(|(_, b)| *b).map(|(p, _)| p).collect();
            Graph::from_edges(n, &edges)
        })
    })
}

fn instance(max_n: usize, max_erasers: u32) -> impl Strategy<Value = (Graph, EraserMap)> {
    graph(max_n).prop_flat_map(move |g| {
        let n = g.n();
        proptest::collection::vec(0..=max_erasers, n).prop_map(move |e| (g.clone(), EraserMap(e)))
    })
}

proptest! {
    #[test]
    fn graph_files_roundtrip((g, e) in instance(12, 4)) {
        let text = serialize_graph(&g, &e);
        let (g2, e2) = parse_graph(&text).unwrap();
        prop_assert_eq!(&g2, &g);
        prop_assert_eq!(&e2, &e);
        prop_assert_eq!(serialize_graph(&g2, &e2), text);
    }

    #[test]
    fn degeneracy_order_and_colouring_bound(g in graph(10)) {
        let d = degeneracy(&g);
        let bits = Bits::from_graph(&g);
        prop_assert_eq!(d.k, common::degeneracy(&bits));
        for (i, &v) in d.order.iter().enumerate() {
            let later = d.order[i + 1..].iter().filter(|&&u| g.has_edge(u, v)).count();
            prop_assert!(later <= d.k);
            prop_assert_eq!(later, d.back_degree[v]);
        }
        let chi = chromatic_number(&g).unwrap();
        prop_assert_eq!(chi, common::chromatic_number(&bits));
        prop_assert!(chi <= d.k + 1);
        prop_assert_eq!(independence_number(&g).unwrap(), common::independence_number(&bits));
    }

    #[test]
    fn components_partition_the_vertices(g in graph(12)) {
        let parts = components(&g);
        let mut union = VertexSet::EMPTY;
        for p in &parts {
            prop_assert!(union.is_disjoint(*p));
            prop_assert!(g.is_connected_set(*p));
            prop_assert!(g.neighbourhood(*p).is_subset(*p));
            union = union.union(*p);
        }
        prop_assert_eq!(union, g.vertices());
    }

    #[test]
    fn solver_matches_the_oracle((g, e) in instance(6, 2)) {
        let pruned = is_paintable(&g, &e, SolveOptions::default()).unwrap().corrector_wins();
        let plain = is_paintable(&g, &e, SolveOptions::unpruned()).unwrap().corrector_wins();
        let oracle = GameOracle::new(Bits::from_graph(&g), Game::Classical).corrector_wins(&e.0);
        prop_assert_eq!(pruned, oracle);
        prop_assert_eq!(plain, oracle);
    }

    #[test]
    fn paint_number_is_bracketed(g in graph(7)) {
        let p = paint_number(&g).unwrap();
        prop_assert!(p >= chromatic_number(&g).unwrap());
        prop_assert!(p <= degeneracy(&g).k + 1);
    }

    #[test]
    fn emitted_traces_validate_and_roundtrip((g, e) in instance(6, 2), which in 0..3usize) {
        let model = [Model::Classical, Model::Strong, Model::Lazy { budget: 2 }][which];
        let (mut p, mut c) = optimal_strategies(&g, &e).unwrap();
        let t = play(&g, &e, model, &mut p, &mut c).unwrap();
        let check = validate_trace(&g, &e, &t);
        prop_assert!(check.is_valid(), "{:?}", check.violation);
        prop_assert_eq!(check.winner, Some(t.winner()));
        let mut buf = Vec::new();
        write_trace(&t, &mut buf).unwrap();
        prop_assert_eq!(read_trace(buf.as_slice()).unwrap(), t);
    }
}

#[test]
fn named_graphs_roundtrip() {
    let named: &[(&str, &[usize])] = &[
        ("schauz_gadget", &[]),
        ("subdivided_gadget", &[12]),
        ("fig1_triangulation", &[]),
        ("complete_multipartite", &[2, 2, 3]),
        ("cycle", &[7]),
        ("path", &[1]),
        ("empty", &[0]),
    ];
    for &(name, params) in named {
        let (g, e) = gen_named(name, params).unwrap();
        let (g2, e2) = parse_graph(&serialize_graph(&g, &e)).unwrap();
        assert_eq!((g2, e2), (g, e), "{name}");
    }
}

#[test]
fn graph_file_errors_are_located() {
    let (g, _) = parse_graph("v 0\nv 1\ne 0 1").unwrap();
    assert_eq!((g.n(), g.edge_count()), (2, 1));
    for (text, line) in [
        ("v 0\ne 0 0\n", 2),
        ("v 0\nv 0\n", 2),
        ("v 0\nv 1\n\ne 0 7\n", 4),
        ("# header\nv 0 erasers=x\n", 2),
        ("v 0\nbogus line\n", 2),
    ] {
        match parse_graph(text) {
            Err(Error::Parse { line: l, .. }) => assert_eq!(l, line, "{text:?}"),
            other => panic!("{text:?}: {other:?}"),
        }
    }
}

#[test]
fn corrupted_trace_line_is_located() {
    let (g, _) = gen_named("cycle", &[4]).unwrap();
    let e = EraserMap::uniform(4, 1);
    let (mut p, mut c) = optimal_strategies(&g, &e).unwrap();
    let t = play(&g, &e, Model::Classical, &mut p, &mut c).unwrap();
    let mut buf = Vec::new();
    write_trace(&t, &mut buf).unwrap();
    let text = String::from_utf8(buf).unwrap();
    let mut lines: Vec<&str> = text.lines().collect();
    lines[1] = "{\"round\":2,\"colour\":\"two\"}";
    match read_trace(lines.join("\n").as_bytes()) {
        Err(Error::Parse { line, .. }) => assert_eq!(line, 2),
        other => panic!("{other:?}"),
    }
    assert!(matches!(read_trace(&text.as_bytes()[..0]), Err(Error::Parse { .. })));
}

#[test]
fn dot_export_shape() {
    let (k2, _) = gen_named("complete", &[2]).unwrap();
    let dot = export_dot(&k2, &EraserMap::zeros(2));
    assert!(dot.starts_with("digraph"));
    assert_eq!(dot.lines().filter(|l| l.contains("label=")).count(), 2);
    assert_eq!(dot.lines().filter(|l| l.contains("->")).count(), 1);

    let (g, e) = gen_named("schauz_gadget", &[]).unwrap();
    let dot = export_dot(&g, &e);
    assert_eq!(dot.lines().filter(|l| l.contains("label=")).count(), 8);
    assert_eq!(dot.lines().filter(|l| l.contains("->")).count(), 10);
    assert_eq!(dot, export_dot(&g, &e));

    let empty = export_dot(&Graph::new(0).unwrap(), &EraserMap::zeros(0));
    assert!(!empty.contains("label=") && !empty.contains("->"));
}

#[test]
fn subdivision_keeps_cycle_parity_for_even_n() {
    let (gadget, _) = gen_named("schauz_gadget", &[]).unwrap();
    let odd_cycle_in_gadget = chromatic_number(&gadget).unwrap() == 3;
    for n in 9..=16 {
        let (g, _) = gen_named("subdivided_gadget", &[n]).unwrap();
        assert_eq!(g.n(), n);
        // The v5..v6 path replaces one edge; every cycle keeps its parity
        // exactly when the path has odd length.
        let path_len = n - 7;
        if n % 2 == 0 {
            assert_eq!(path_len % 2, 1);
            assert_eq!(chromatic_number(&g).unwrap() == 3, odd_cycle_in_gadget);
        }
    }
}

#[test]
fn sp_trees_realize_connected_graphs() {
    for tree in SpTree::up_to_leaves(6) {
        let r = paintability::graph::gen_series_parallel(&tree).unwrap();
        assert_ne!(r.source, r.sink);
        assert!(r.graph.is_connected_set(r.graph.vertices()));
        assert!(r.graph.edge_count() <= tree.leaves());
    }
}
