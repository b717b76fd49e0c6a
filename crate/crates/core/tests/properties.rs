use std::collections::BTreeSet;
use std::sync::OnceLock;

use dtopo::complex::validate_u2;
use dtopo::graph::{girth, GraphBuilder};
use dtopo::homotopy::{crosses_over, is_gradual_variation, xor_edges, xor_sum};
use dtopo::{default_u2, fixtures, CellComplex, ComplexDocument, ComplexError, SurfaceView, Vertex, VertexPath};
use proptest::prelude::*;

fn grid5() -> &'static CellComplex {
    static CX: OnceLock<CellComplex> = OnceLock::new();
    CX.get_or_init(|| fixtures::grid(5).unwrap().into_complex().unwrap())
}

/// Self-avoiding walk driven by `choices`; stops early when stuck.
fn walk(cx: &CellComplex, start: usize, choices: &[usize], closed: bool) -> Option<VertexPath> {
    let g = cx.graph();
    let mut vs = vec![Vertex::from_index(start % g.vertex_count())];
    for &c in choices {
        let last = *vs.last().unwrap();
        let free: Vec<Vertex> = g.neighbors(last).iter().copied().filter(|w| !vs.contains(w)).collect();
        if free.is_empty() {
            break;
        }
        vs.push(free[c % free.len()]);
    }
    if closed {
        // close at the last point adjacent to the start
        let end = (2..vs.len()).rev().find(|&i| g.adjacent(vs[i], vs[0]))?;
        vs.truncate(end + 1);
    }
    VertexPath::new(g, vs, closed).ok()
}

fn path_strategy() -> impl Strategy<Value = (usize, Vec<usize>, bool)> {
    (0usize..25, prop::collection::vec(0usize..4, 1..10), any::<bool>())
}

fn same(a: &VertexPath, b: &VertexPath) -> bool {
    match (a.to_cycle(), b.to_cycle()) {
        (Some(x), Some(y)) => x == y,
        _ => a == b,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn xor_sum_is_an_involution((start, choices, closed) in path_strategy()) {
        let cx = grid5();
        let Some(c) = walk(cx, start, &choices, closed) else { return Ok(()) };
        for id in cx.cell_ids() {
            let a = cx.cell(id);
            let Ok(moved) = xor_sum(&c, a) else { continue };
            let back = xor_sum(&moved, a).unwrap();
            prop_assert!(same(&back, &c));
            let moved_edges: BTreeSet<_> = moved.edges().into_iter().collect();
            prop_assert_eq!(&moved_edges, &xor_edges(&c.edges(), &a.edges()));
            let cell_edges: BTreeSet<_> = a.edges().into_iter().collect();
            prop_assert_eq!(xor_edges(&moved.edges(), &c.edges()), cell_edges);
        }
    }

    #[test]
    fn gradual_variation_is_symmetric(
        (s1, c1, k1) in path_strategy(),
        (s2, c2, k2) in path_strategy(),
        cell in 0usize..16,
    ) {
        let cx = grid5();
        let region = cx.whole();
        let (Some(a), Some(b)) = (walk(cx, s1, &c1, k1), walk(cx, s2, &c2, k2)) else { return Ok(()) };
        prop_assert_eq!(
            is_gradual_variation(&region, &a, &b).is_ok(),
            is_gradual_variation(&region, &b, &a).is_ok()
        );
        if let Ok(moved) = xor_sum(&a, cx.cell(dtopo::CellId(cell))) {
            prop_assert!(is_gradual_variation(&region, &a, &moved).is_ok());
            prop_assert!(is_gradual_variation(&region, &moved, &a).is_ok());
        }
    }

    #[test]
    fn crossing_is_symmetric_and_flip_invariant(
        (s1, c1, k1) in path_strategy(),
        (s2, c2, k2) in path_strategy(),
    ) {
        let cx = grid5();
        let view = SurfaceView::whole(cx).unwrap();
        let flipped = view.with_flipped_atlas();
        let (Some(a), Some(b)) = (walk(cx, s1, &c1, k1), walk(cx, s2, &c2, k2)) else { return Ok(()) };
        let ab = crosses_over(&view, &a, &b).unwrap().crosses();
        prop_assert_eq!(ab, crosses_over(&view, &b, &a).unwrap().crosses());
        prop_assert_eq!(ab, crosses_over(&flipped, &a, &b).unwrap().crosses());
        prop_assert_eq!(ab, crosses_over(&view, &a.reversed(), &b).unwrap().crosses());
    }

    #[test]
    fn default_cells_are_valid_or_conflict(
        extra in prop::collection::vec((0usize..8, 0usize..8), 0..14),
    ) {
        // a Hamiltonian path keeps the graph connected
        let mut gb = GraphBuilder::new();
        let vs: Vec<_> = (0..8).map(|i| gb.add_vertex(format!("v{i}")).unwrap()).collect();
        for i in 0..7 {
            gb.add_edge(vs[i], vs[i + 1]).unwrap();
        }
        for (a, b) in extra {
            let _ = gb.add_edge(vs[a], vs[b]);
        }
        let g = gb.build().unwrap();
        match default_u2(&g) {
            Ok(cells) => {
                prop_assert!(validate_u2(&g, &cells).unwrap().passed());
                let gi = girth(&g).unwrap();
                let covered: BTreeSet<Vertex> = cells
                    .iter()
                    .filter(|c| c.len() == gi)
                    .flat_map(|c| c.travel().iter().copied())
                    .collect();
                for c in cells.iter().filter(|c| c.len() != gi) {
                    prop_assert!(c.travel().iter().any(|v| !covered.contains(v)));
                }
            }
            Err(ComplexError::NoCycles) => prop_assert!(girth(&g).is_none()),
            Err(ComplexError::ConstructionConflict(..)) => {}
            Err(e) => prop_assert!(false, "unexpected error {e}"),
        }
    }

    #[test]
    fn documents_round_trip(
        n in 3usize..9,
        extra in prop::collection::vec((0usize..9, 0usize..9), 0..10),
        meta in "[a-z]{1,6}",
    ) {
        let mut doc = ComplexDocument {
            metadata: vec![("note".into(), meta)],
            ..ComplexDocument::default()
        };
        doc.vertices = (0..n).map(|i| format!("x{i}")).collect();
        doc.edges = (0..n).map(|i| (format!("x{i}"), format!("x{}", (i + 1) % n))).collect();
        for (a, b) in extra {
            if a < n && b < n && a != b {
                doc.edges.push((format!("x{a}"), format!("x{b}")));
            }
        }
        let text = doc.to_text();
        let parsed = ComplexDocument::parse(&text).unwrap();
        prop_assert_eq!(&parsed, &doc);
        prop_assert_eq!(parsed.to_text(), text);
    }
}
