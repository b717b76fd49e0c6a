use std::collections::BTreeSet;

use dtopo::classify::{side_of, two_neighbor_cells, Side};
use dtopo::complex::SurfaceRegion;
use dtopo::fixtures::{self, FixtureKind};
use dtopo::graph::enumerate_minimal_cycles;
use dtopo::homotopy::{contract_to_point, ContractionOutcome, CycleSpace, SearchBudget};
use dtopo::{
    build_orientation_atlas, is_discrete_curve, is_regular_point, neighborhood, CellComplex, CellId,
    ComplexDocument, SurfaceView, VertexSet,
};

fn all_fixtures() -> Vec<(String, CellComplex)> {
    let mut out = Vec::new();
    for kind in FixtureKind::ALL {
        let doc = fixtures::generate(kind, None).unwrap();
        out.push((kind.name().to_string(), doc.into_complex().unwrap()));
    }
    out.push(("grid-5".into(), fixtures::grid(5).unwrap().into_complex().unwrap()));
    out.push(("torus-3x5".into(), fixtures::torus_grid(3, 5).unwrap().into_complex().unwrap()));
    out
}

#[test]
fn regular_inner_points_have_simple_links() {
    for (name, cx) in all_fixtures() {
        let whole = cx.whole();
        let boundary = whole.boundary().unwrap();
        for p in cx.graph().vertices() {
            if !is_regular_point(&whole, p) || boundary.contains(&p) {
                continue;
            }
            let disk = neighborhood(&whole, p, None).unwrap();
            let link = disk.link.unwrap_or_else(|| panic!("{name}: no link at {}", cx.graph().name(p)));
            let mut star: VertexSet = disk
                .cells
                .iter()
                .flat_map(|&id| cx.cell(id).travel().iter().copied())
                .collect();
            star.remove(&p);
            assert_eq!(link.vertex_set(), star, "{name}");
            assert_eq!(link.vertex_set().len(), link.len(), "{name}");
        }
    }
}

#[test]
fn closed_semi_curves_that_are_not_curves_are_cells() {
    for (name, cx) in all_fixtures() {
        for c in enumerate_minimal_cycles(cx.graph(), 10) {
            let verdict = is_discrete_curve(&cx, c.travel());
            assert!(verdict.semi_curve && verdict.closed, "{name}");
            if let Some(id) = verdict.contained_cell {
                assert_eq!(cx.cell(id).vertex_set(), c.vertex_set(), "{name}");
            }
        }
    }
}

#[test]
fn closed_orientable_atlas_uses_each_dart_once() {
    for doc in [fixtures::cube(), fixtures::octahedron(), fixtures::torus_grid(4, 4).unwrap()] {
        let cx = doc.into_complex().unwrap();
        let atlas = build_orientation_atlas(&cx.whole());
        assert!(atlas.is_consistent());
        let mut darts = BTreeSet::new();
        for id in cx.cell_ids() {
            for d in atlas.oriented(&cx, id).darts() {
                assert!(darts.insert(d));
            }
        }
        assert_eq!(darts.len(), 2 * cx.graph().edge_count());
    }
}

#[test]
fn exactly_two_consistent_atlases_on_the_cube() {
    // brute force over all 2^6 choices of cell direction
    let cx = fixtures::cube().into_complex().unwrap();
    let atlas = build_orientation_atlas(&cx.whole());
    let mut found = Vec::new();
    for mask in 0u32..64 {
        let forward = |id: CellId| mask >> id.0 & 1 == 0;
        let consistent = cx.graph().edges().all(|e| {
            let cells = cx.cells_on_edge(e);
            let dir = |id: CellId| cx.cell(id).traverses(e.lo(), e.hi()).unwrap() == forward(id);
            dir(cells[0]) != dir(cells[1])
        });
        if consistent {
            found.push(mask);
        }
    }
    assert_eq!(found.len(), 2);
    let ours: u32 = cx.cell_ids().filter(|&id| !atlas.is_forward(id)).map(|id| 1 << id.0).sum();
    let flipped = atlas.flipped();
    let theirs: u32 = cx.cell_ids().filter(|&id| !flipped.is_forward(id)).map(|id| 1 << id.0).sum();
    assert_eq!(BTreeSet::from([ours, theirs]), found.into_iter().collect());
}

#[test]
fn side_of_splits_the_link_in_two() {
    for (name, cx) in all_fixtures() {
        let whole = cx.whole();
        let g = cx.graph();
        for p in g.vertices() {
            let Ok(disk) = neighborhood(&whole, p, None) else { continue };
            let Some(link) = disk.link.clone() else { continue };
            if link.len() < 4 {
                continue;
            }
            let t = link.travel();
            for &u in t {
                for &v in t {
                    // u and v must not be neighbours on the link
                    if u == v || link.traverses(u, v).is_some() {
                        continue;
                    }
                    let mut sides = BTreeSet::new();
                    for &probe in t {
                        let s = side_of(g, &disk, (u, v), probe).unwrap();
                        assert_eq!(s == Side::On, probe == u || probe == v, "{name}");
                        sides.insert(s);
                    }
                    assert_eq!(sides.len(), 3, "{name}");
                }
            }
        }
    }
}

#[test]
fn two_neighbour_points_have_cell_witnesses() {
    for (name, cx) in all_fixtures() {
        let whole = cx.whole();
        for p in cx.graph().vertices() {
            if cx.graph().degree(p) == 2 {
                two_neighbor_cells(&whole, p).unwrap_or_else(|e| panic!("{name}: {e}"));
            }
        }
    }
}

fn subregions(cx: &CellComplex) -> Vec<SurfaceRegion<'_>> {
    let ids: Vec<CellId> = cx.cell_ids().collect();
    let mut out = vec![cx.whole()];
    for i in 0..ids.len() {
        let keep = ids.iter().copied().filter(|&x| x != ids[i]);
        out.push(SurfaceRegion::from_cells(cx, keep).unwrap());
        for j in i + 1..ids.len() {
            let keep = ids.iter().copied().filter(|&x| x != ids[i] && x != ids[j]);
            out.push(SurfaceRegion::from_cells(cx, keep).unwrap());
        }
    }
    out
}

#[test]
fn closed_iff_empty_boundary() {
    let mut checked = 0;
    for (name, cx) in all_fixtures() {
        for r in subregions(&cx) {
            if !r.is_semi_surface() {
                continue;
            }
            assert_eq!(r.is_closed_semi_surface(), r.boundary().unwrap().is_empty(), "{name}");
            checked += 1;
        }
    }
    assert!(checked > 100);
}

#[test]
fn removing_a_cell_opens_a_closed_surface() {
    for (name, cx) in all_fixtures() {
        if !cx.whole().is_closed_semi_surface() {
            continue;
        }
        for id in cx.cell_ids() {
            let r = SurfaceRegion::from_cells(&cx, cx.cell_ids().filter(|&x| x != id)).unwrap();
            assert!(!r.is_closed_semi_surface(), "{name}");
            assert!(r.cover_counts().values().any(|&n| n == 1), "{name}");
        }
    }
}

#[test]
fn contractions_revalidate() {
    for doc in [fixtures::grid(3).unwrap(), fixtures::cube()] {
        let cx = doc.into_complex().unwrap();
        let view = SurfaceView::whole(&cx).unwrap();
        let space = CycleSpace::new(view.region());
        let budget = SearchBudget { max_cycle_len: 6, ..SearchBudget::default() };
        for c in dtopo::graph::enumerate_simple_cycles(cx.graph(), None, 6) {
            for &p in c.travel() {
                match contract_to_point(&view, &space, &c, p, budget).unwrap() {
                    ContractionOutcome::Contracted(cert) => cert.verify(&view).unwrap(),
                    other => panic!("{other:?}"),
                }
            }
        }
    }
}

#[test]
fn fixtures_round_trip_byte_identical() {
    for kind in FixtureKind::ALL {
        let text = fixtures::generate(kind, None).unwrap().to_text();
        let again = ComplexDocument::parse(&text).unwrap().to_text();
        assert_eq!(text, again, "{kind}");
    }
}
