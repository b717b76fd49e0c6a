mod common;

use std::collections::{BTreeMap, BTreeSet};

use common::{chordless_cycle_sets, default_cells_oracle, mask_of, simple_cycle_counts, union_find_separation};
use dtopo::graph::{enumerate_minimal_cycles, enumerate_simple_cycles, girth};
use dtopo::jordan::{separation_check, NodeKey, SeparationMode};
use dtopo::{default_u2, fixtures, Graph, SurfaceView, VertexCycle};

fn graphs() -> Vec<(String, Graph)> {
    let mut out: Vec<(String, Graph)> = vec![
        ("grid-3".into(), fixtures::grid(3).unwrap().graph().unwrap()),
        ("grid-4".into(), fixtures::grid(4).unwrap().graph().unwrap()),
        ("cube".into(), fixtures::cube().graph().unwrap()),
        ("octahedron".into(), fixtures::octahedron().graph().unwrap()),
        ("torus-3x3".into(), fixtures::torus_grid(3, 3).unwrap().graph().unwrap()),
        ("torus-3x4".into(), fixtures::torus_grid(3, 4).unwrap().graph().unwrap()),
        ("moebius-4".into(), fixtures::moebius_strip(4).unwrap().graph().unwrap()),
        ("bowtie".into(), fixtures::bowtie().graph().unwrap()),
    ];
    out.sort_by(|a, b| a.0.cmp(&b.0));
    out
}

#[test]
fn chordless_enumeration_matches_subset_oracle() {
    for (name, g) in graphs() {
        let ours: BTreeSet<u32> = enumerate_minimal_cycles(&g, g.vertex_count())
            .iter()
            .map(|c| mask_of(c.travel().iter().copied()))
            .collect();
        assert_eq!(ours, chordless_cycle_sets(&g), "{name}");
    }
}

#[test]
fn simple_cycle_enumeration_matches_counting_oracle() {
    for (name, g) in graphs() {
        let max_len = g.vertex_count().min(10);
        let mut ours: BTreeMap<u32, u64> = BTreeMap::new();
        let cycles = enumerate_simple_cycles(&g, None, max_len);
        let distinct: BTreeSet<&VertexCycle> = cycles.iter().collect();
        assert_eq!(distinct.len(), cycles.len(), "{name}: duplicates");
        for c in &cycles {
            *ours.entry(mask_of(c.travel().iter().copied())).or_insert(0) += 1;
        }
        assert_eq!(ours, simple_cycle_counts(&g, max_len), "{name}");
    }
}

#[test]
fn girth_matches_oracle() {
    for (name, g) in graphs() {
        let expected = chordless_cycle_sets(&g).iter().map(|m| m.count_ones() as usize).min();
        assert_eq!(girth(&g), expected, "{name}");
    }
}

#[test]
fn default_cells_match_oracle() {
    for (name, g) in graphs() {
        let oracle = default_cells_oracle(&g);
        let ours: BTreeSet<u32> = default_u2(&g)
            .unwrap()
            .iter()
            .map(|c| mask_of(c.travel().iter().copied()))
            .collect();
        assert_eq!(ours, oracle, "{name}");
    }
}

#[test]
fn separation_matches_union_find() {
    let docs = [
        fixtures::grid(5).unwrap(),
        fixtures::cube(),
        fixtures::octahedron(),
        fixtures::torus_grid(4, 4).unwrap(),
    ];
    let mut checked = 0;
    for doc in docs {
        let cx = doc.into_complex().unwrap();
        let view = SurfaceView::whole(&cx).unwrap();
        let inner: dtopo::VertexSet = cx
            .graph()
            .vertices()
            .filter(|v| !view.boundary().contains(v))
            .collect();
        for curve in dtopo::graph::enumerate_minimal_cycles_within(cx.graph(), &inner, 8) {
            let report = separation_check(&view, &curve, SeparationMode::PseudoPoints).unwrap();
            let ours: BTreeSet<BTreeSet<NodeKey>> = report
                .components
                .iter()
                .map(|c| c.nodes.iter().copied().collect())
                .collect();
            assert_eq!(ours, union_find_separation(&cx, &curve));
            checked += 1;
        }
    }
    assert!(checked > 50, "only {checked} curves");
}
