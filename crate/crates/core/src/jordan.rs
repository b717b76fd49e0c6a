//! Separation of a surface by a closed curve.
//!
//! In [`SeparationMode::PseudoPoints`] every surface-cell and every edge gets
//! a pseudo node inside it. Removing a curve removes its vertices and the
//! pseudo nodes of its edges but keeps the cell pseudo nodes, so the inside
//! of a single cell survives as its own component.
//! [`SeparationMode::VerticesOnly`] works on the original vertices alone.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::classify::{is_discrete_curve, is_semi_curve, SurfaceView};
use crate::complex::{CellId, SurfaceRegion};
use crate::graph::{enumerate_minimal_cycles_within, Edge, Graph, Vertex, VertexCycle, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum JordanError {
    #[error("curve is empty")]
    EmptyCurve,
    #[error("vertex {0} is outside the region")]
    OutsideRegion(String),
    #[error("curve touches the region boundary at {0}")]
    TouchesBoundary(String),
    #[error("curve is not a closed semi-curve")]
    NotSemiCurve,
    #[error("curve contains surface-cell {0}")]
    ContainsCell(CellId),
    #[error("edge {0} is not on the curve")]
    EdgeNotOnCurve(String),
    #[error("edge {0} lies in {1} surface-cells, not two")]
    NotInteriorEdge(String, usize),
    #[error("cells on edge {0} run the same way; the region is not orientable there")]
    InconsistentOrientation(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SeparationMode {
    /// Vertices plus cell and edge pseudo nodes; a separating curve leaves
    /// exactly two components.
    PseudoPoints,
    /// Original vertices only, for discrete curves; separation means at
    /// least two components.
    VerticesOnly,
}

impl fmt::Display for SeparationMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SeparationMode::PseudoPoints => "pseudo-points",
            SeparationMode::VerticesOnly => "vertices-only",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum NodeKey {
    Vertex(Vertex),
    Cell(CellId),
    Edge(Edge),
}

impl NodeKey {
    pub fn label(&self, g: &Graph) -> String {
        match *self {
            NodeKey::Vertex(v) => g.name(v).to_string(),
            NodeKey::Cell(id) => format!("cell:{}", id.0),
            NodeKey::Edge(e) => format!("edge:{}-{}", g.name(e.lo()), g.name(e.hi())),
        }
    }
}

/// The region's vertices and, in pseudo-point mode, cell and edge pseudo
/// nodes. Pseudo nodes link only to what they sit inside or on.
#[derive(Debug, Clone)]
pub struct AugmentedIncidence {
    nodes: Vec<NodeKey>,
    index: BTreeMap<NodeKey, usize>,
    adj: Vec<Vec<usize>>,
}

impl AugmentedIncidence {
    pub fn new(region: &SurfaceRegion<'_>, mode: SeparationMode) -> Self {
        let cx = region.complex();
        let mut nodes: Vec<NodeKey> = region.vertices().iter().map(|&v| NodeKey::Vertex(v)).collect();
        let edges = region.edges();
        if mode == SeparationMode::PseudoPoints {
            nodes.extend(region.cells().map(NodeKey::Cell));
            nodes.extend(edges.iter().map(|&e| NodeKey::Edge(e)));
        }
        let index: BTreeMap<NodeKey, usize> = nodes.iter().enumerate().map(|(i, &k)| (k, i)).collect();
        let mut adj = vec![Vec::new(); nodes.len()];
        let mut link = |a: NodeKey, b: NodeKey| {
            let (i, j) = (index[&a], index[&b]);
            adj[i].push(j);
            adj[j].push(i);
        };
        match mode {
            SeparationMode::VerticesOnly => {
                for &e in &edges {
                    link(NodeKey::Vertex(e.lo()), NodeKey::Vertex(e.hi()));
                }
            }
            SeparationMode::PseudoPoints => {
                for &e in &edges {
                    link(NodeKey::Edge(e), NodeKey::Vertex(e.lo()));
                    link(NodeKey::Edge(e), NodeKey::Vertex(e.hi()));
                }
                for id in region.cells() {
                    let cell = cx.cell(id);
                    for &v in cell.travel() {
                        link(NodeKey::Cell(id), NodeKey::Vertex(v));
                    }
                    for e in cell.edges() {
                        link(NodeKey::Cell(id), NodeKey::Edge(e));
                    }
                }
            }
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        AugmentedIncidence { nodes, index, adj }
    }

    pub fn node_count(&self) -> usize {
        self.nodes.len()
    }

    pub fn neighbors(&self, key: NodeKey) -> Vec<NodeKey> {
        self.index
            .get(&key)
            .map(|&i| self.adj[i].iter().map(|&j| self.nodes[j]).collect())
            .unwrap_or_default()
    }

    /// Connected components after deleting `removed`, each sorted, ordered
    /// by smallest vertex, then pseudo-only components by smallest key.
    pub fn components(&self, removed: &BTreeSet<NodeKey>) -> Vec<Vec<NodeKey>> {
        let mut seen: Vec<bool> = self.nodes.iter().map(|k| removed.contains(k)).collect();
        let mut out = Vec::new();
        for start in 0..self.nodes.len() {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut comp = vec![self.nodes[start]];
            let mut queue = VecDeque::from([start]);
            while let Some(i) = queue.pop_front() {
                for &j in &self.adj[i] {
                    if !seen[j] {
                        seen[j] = true;
                        comp.push(self.nodes[j]);
                        queue.push_back(j);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        // NodeKey orders vertices before cells before edges
        out.sort_by_key(|c| c[0]);
        out
    }
}

/// The two cells on a curve edge: `A` runs along it the way the curve
/// travels, `B` against.
pub fn flanking_cells(
    view: &SurfaceView<'_>,
    curve: &VertexCycle,
    edge: (Vertex, Vertex),
) -> Result<(CellId, CellId), JordanError> {
    let g = view.graph();
    let (p, r) = edge;
    let label = format!("{}-{}", g.name(p), g.name(r));
    let with_curve = curve
        .traverses(p, r)
        .ok_or_else(|| JordanError::EdgeNotOnCurve(label.clone()))?;
    let cells = view.region().cells_on_edge(Edge::new(p, r));
    if cells.len() != 2 {
        return Err(JordanError::NotInteriorEdge(label, cells.len()));
    }
    let cx = view.complex();
    let runs = |id: CellId| view.atlas().traverses(cx, id, p, r) == Some(with_curve);
    match (runs(cells[0]), runs(cells[1])) {
        (true, false) => Ok((cells[0], cells[1])),
        (false, true) => Ok((cells[1], cells[0])),
        _ => Err(JordanError::InconsistentOrientation(label)),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SideLabel {
    ASide,
    BSide,
    /// Holds flanks of both kinds; only on surfaces the curve does not
    /// separate.
    Mixed,
    Other,
}

impl fmt::Display for SideLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SideLabel::ASide => "A-side",
            SideLabel::BSide => "B-side",
            SideLabel::Mixed => "mixed",
            SideLabel::Other => "other",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub nodes: Vec<NodeKey>,
    pub label: SideLabel,
}

/// Flanking cells of one curve edge and the components they fall in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlankPair {
    pub edge: (Vertex, Vertex),
    pub a: CellId,
    pub b: CellId,
    pub a_component: Option<usize>,
    pub b_component: Option<usize>,
}

impl FlankPair {
    pub fn violates(&self) -> bool {
        self.a_component.is_some() && self.a_component == self.b_component
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparationReport {
    pub curve: VertexCycle,
    pub mode: SeparationMode,
    pub components: Vec<Component>,
    pub flanks: Vec<FlankPair>,
    pub notes: Vec<String>,
    pub oracle_agrees: bool,
}

impl SeparationReport {
    pub fn separates(&self) -> bool {
        match self.mode {
            SeparationMode::PseudoPoints => self.components.len() == 2,
            SeparationMode::VerticesOnly => self.components.len() >= 2,
        }
    }

    pub fn flank_violations(&self) -> usize {
        self.flanks.iter().filter(|f| f.violates()).count()
    }

    /// All A flanks share one component, all B flanks another.
    pub fn sides_consistent(&self) -> bool {
        let a: BTreeSet<_> = self.flanks.iter().map(|f| f.a_component).collect();
        let b: BTreeSet<_> = self.flanks.iter().map(|f| f.b_component).collect();
        a.len() == 1 && b.len() == 1 && a != b && !a.contains(&None)
    }
}

fn check_curve(
    view: &SurfaceView<'_>,
    curve: &VertexCycle,
    mode: SeparationMode,
) -> Result<(), JordanError> {
    let g = view.graph();
    if curve.is_empty() {
        return Err(JordanError::EmptyCurve);
    }
    for &v in curve.travel() {
        if !view.region().contains(v) {
            return Err(JordanError::OutsideRegion(g.name(v).to_string()));
        }
        if view.boundary().contains(&v) {
            return Err(JordanError::TouchesBoundary(g.name(v).to_string()));
        }
    }
    if !is_semi_curve(g, curve.travel()) {
        return Err(JordanError::NotSemiCurve);
    }
    if mode == SeparationMode::VerticesOnly {
        if let Some(id) = is_discrete_curve(view.complex(), curve.travel()).contained_cell {
            return Err(JordanError::ContainsCell(id));
        }
    }
    Ok(())
}

fn removed_nodes(curve: &VertexCycle, mode: SeparationMode) -> BTreeSet<NodeKey> {
    let mut removed: BTreeSet<NodeKey> = curve.travel().iter().map(|&v| NodeKey::Vertex(v)).collect();
    if mode == SeparationMode::PseudoPoints {
        removed.extend(curve.edges().into_iter().map(NodeKey::Edge));
    }
    removed
}

/// Removes `curve` from the region and labels the remaining components by
/// the flanking cells of the curve's edges.
pub fn separation_check(
    view: &SurfaceView<'_>,
    curve: &VertexCycle,
    mode: SeparationMode,
) -> Result<SeparationReport, JordanError> {
    check_curve(view, curve, mode)?;
    let cx = view.complex();
    let structure = AugmentedIncidence::new(view.region(), mode);
    let parts = structure.components(&removed_nodes(curve, mode));
    let where_is: BTreeMap<NodeKey, usize> = parts
        .iter()
        .enumerate()
        .flat_map(|(i, c)| c.iter().map(move |&k| (k, i)))
        .collect();
    let on_curve = curve.vertex_set();
    let locate = |id: CellId| -> Option<usize> {
        match mode {
            SeparationMode::PseudoPoints => where_is.get(&NodeKey::Cell(id)).copied(),
            SeparationMode::VerticesOnly => cx
                .cell(id)
                .travel()
                .iter()
                .filter(|v| !on_curve.contains(v))
                .min()
                .and_then(|&v| where_is.get(&NodeKey::Vertex(v)).copied()),
        }
    };

    let mut flanks = Vec::new();
    let mut notes = Vec::new();
    for dart in curve.darts() {
        match flanking_cells(view, curve, dart) {
            Ok((a, b)) => flanks.push(FlankPair {
                edge: dart,
                a,
                b,
                a_component: locate(a),
                b_component: locate(b),
            }),
            Err(e) => notes.push(e.to_string()),
        }
    }
    let a_parts: BTreeSet<usize> = flanks.iter().filter_map(|f| f.a_component).collect();
    let b_parts: BTreeSet<usize> = flanks.iter().filter_map(|f| f.b_component).collect();
    let components = parts
        .into_iter()
        .enumerate()
        .map(|(i, nodes)| {
            let label = match (a_parts.contains(&i), b_parts.contains(&i)) {
                (true, true) => SideLabel::Mixed,
                (true, false) => SideLabel::ASide,
                (false, true) => SideLabel::BSide,
                (false, false) => SideLabel::Other,
            };
            Component { nodes, label }
        })
        .collect::<Vec<_>>();

    let ours: Vec<BTreeSet<NodeKey>> = components
        .iter()
        .map(|c| c.nodes.iter().copied().collect())
        .collect();
    let mut ours_sorted = ours.clone();
    ours_sorted.sort();
    let oracle_agrees = oracle_separation(view.region(), curve.travel(), mode)
        .map(|theirs| theirs == ours_sorted)
        .unwrap_or(false);
    Ok(SeparationReport {
        curve: curve.clone(),
        mode,
        components,
        flanks,
        notes,
        oracle_agrees,
    })
}

/// Component partition after removing `curve`, computed by plain
/// breadth-first search over a hash-map adjacency built straight from the
/// cells and edges. Components are returned sorted.
pub fn oracle_separation(
    region: &SurfaceRegion<'_>,
    curve: &[Vertex],
    mode: SeparationMode,
) -> Result<Vec<BTreeSet<NodeKey>>, JordanError> {
    if curve.is_empty() {
        return Err(JordanError::EmptyCurve);
    }
    let cx = region.complex();
    let g = region.graph();
    let inside: VertexSet = region.vertices().clone();
    let mut adj: HashMap<NodeKey, Vec<NodeKey>> =
        inside.iter().map(|&v| (NodeKey::Vertex(v), Vec::new())).collect();
    let mut add = |a: NodeKey, b: NodeKey| {
        adj.entry(a).or_default().push(b);
        adj.entry(b).or_default().push(a);
    };
    for &v in &inside {
        for &w in g.neighbors(v) {
            if v < w && inside.contains(&w) {
                let e = Edge::new(v, w);
                match mode {
                    SeparationMode::VerticesOnly => add(NodeKey::Vertex(v), NodeKey::Vertex(w)),
                    SeparationMode::PseudoPoints => {
                        add(NodeKey::Edge(e), NodeKey::Vertex(v));
                        add(NodeKey::Edge(e), NodeKey::Vertex(w));
                    }
                }
            }
        }
    }
    if mode == SeparationMode::PseudoPoints {
        for id in region.cells() {
            let t = cx.cell(id).travel();
            for (i, &v) in t.iter().enumerate() {
                let w = t[(i + 1) % t.len()];
                add(NodeKey::Cell(id), NodeKey::Vertex(v));
                add(NodeKey::Cell(id), NodeKey::Edge(Edge::new(v, w)));
            }
        }
    }
    let mut gone: std::collections::HashSet<NodeKey> =
        curve.iter().map(|&v| NodeKey::Vertex(v)).collect();
    if mode == SeparationMode::PseudoPoints {
        for (i, &v) in curve.iter().enumerate() {
            gone.insert(NodeKey::Edge(Edge::new(v, curve[(i + 1) % curve.len()])));
        }
    }
    let mut keys: Vec<NodeKey> = adj.keys().copied().collect();
    keys.sort_unstable();
    let mut out = Vec::new();
    for k in keys {
        if gone.contains(&k) {
            continue;
        }
        let mut comp = BTreeSet::from([k]);
        let mut queue = VecDeque::from([k]);
        gone.insert(k);
        while let Some(x) = queue.pop_front() {
            for &y in &adj[&x] {
                if gone.insert(y) {
                    comp.insert(y);
                    queue.push_back(y);
                }
            }
        }
        out.push(comp);
    }
    out.sort();
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveOutcome {
    pub curve: VertexCycle,
    pub components: usize,
    pub separates: bool,
    pub oracle_agrees: bool,
    pub flank_violations: usize,
    pub sides_consistent: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SuiteReport {
    pub mode: SeparationMode,
    pub max_len: usize,
    pub curves: Vec<CurveOutcome>,
}

impl SuiteReport {
    pub fn all_separate(&self) -> bool {
        self.curves.iter().all(|c| c.separates)
    }

    pub fn non_separating(&self) -> impl Iterator<Item = &CurveOutcome> {
        self.curves.iter().filter(|c| !c.separates)
    }

    pub fn oracle_disagreements(&self) -> usize {
        self.curves.iter().filter(|c| !c.oracle_agrees).count()
    }

    pub fn flank_violations(&self) -> usize {
        self.curves.iter().map(|c| c.flank_violations).sum()
    }

    /// Observed component counts and how many curves produced each.
    pub fn component_histogram(&self) -> BTreeMap<usize, usize> {
        let mut h = BTreeMap::new();
        for c in &self.curves {
            *h.entry(c.components).or_default() += 1;
        }
        h
    }
}

/// Runs [`separation_check`] on every closed semi-curve of length at most
/// `max_len` that avoids the boundary (discrete curves only in
/// vertices-only mode).
pub fn exhaustive_jordan_suite(
    view: &SurfaceView<'_>,
    max_len: usize,
    mode: SeparationMode,
) -> Result<SuiteReport, JordanError> {
    let interior: VertexSet = view
        .region()
        .vertices()
        .difference(view.boundary())
        .copied()
        .collect();
    let mut curves = Vec::new();
    for curve in enumerate_minimal_cycles_within(view.graph(), &interior, max_len) {
        if mode == SeparationMode::VerticesOnly
            && is_discrete_curve(view.complex(), curve.travel())
                .contained_cell
                .is_some()
        {
            continue;
        }
        let report = separation_check(view, &curve, mode)?;
        curves.push(CurveOutcome {
            components: report.components.len(),
            separates: report.separates(),
            oracle_agrees: report.oracle_agrees,
            flank_violations: report.flank_violations(),
            sides_consistent: report.sides_consistent(),
            curve,
        });
    }
    Ok(SuiteReport {
        mode,
        max_len,
        curves,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::CellComplex;

    fn view_of(cx: &CellComplex) -> SurfaceView<'_> {
        SurfaceView::whole(cx).unwrap()
    }

    fn cycle(g: &Graph, names: &[&str]) -> VertexCycle {
        VertexCycle::from_names(g, names).unwrap()
    }

    #[test]
    fn interior_square_on_grid5() {
        let cx = fixtures::grid(5).unwrap().into_complex().unwrap();
        let view = view_of(&cx);
        let c = cycle(cx.graph(), &["r1c1", "r1c2", "r2c2", "r2c1"]);
        let report = separation_check(&view, &c, SeparationMode::PseudoPoints).unwrap();
        assert_eq!(report.components.len(), 2);
        let inner = cx.cell_with_vertices(&c.vertex_set()).unwrap();
        assert_eq!(report.components[1].nodes, vec![NodeKey::Cell(inner)]);
        assert!(report.oracle_agrees);
        assert_eq!(report.flank_violations(), 0);
        assert!(report.sides_consistent());
        let labels: BTreeSet<SideLabel> = report.components.iter().map(|c| c.label).collect();
        assert_eq!(labels, BTreeSet::from([SideLabel::ASide, SideLabel::BSide]));
        assert!(matches!(
            separation_check(&view, &c, SeparationMode::VerticesOnly),
            Err(JordanError::ContainsCell(_))
        ));
    }

    #[test]
    fn flanks_inner_and_outer() {
        let cx = fixtures::grid(5).unwrap().into_complex().unwrap();
        let view = view_of(&cx);
        let g = cx.graph();
        let c = cycle(g, &["r1c1", "r1c2", "r2c2", "r2c1"]);
        let (p, r) = (g.resolve("r1c1").unwrap(), g.resolve("r1c2").unwrap());
        let (a, b) = flanking_cells(&view, &c, (p, r)).unwrap();
        let inner = cx.cell_with_vertices(&c.vertex_set()).unwrap();
        assert!(a == inner || b == inner);
        let (a2, b2) = flanking_cells(&view, &c.reversed(), (p, r)).unwrap();
        assert_eq!((a2, b2), (b, a));
        let edge = cycle(g, &["r0c0", "r0c1", "r1c1", "r1c0"]);
        let (x, y) = (g.resolve("r0c0").unwrap(), g.resolve("r0c1").unwrap());
        assert!(matches!(
            flanking_cells(&view, &edge, (x, y)),
            Err(JordanError::NotInteriorEdge(_, 1))
        ));
        assert!(matches!(
            flanking_cells(&view, &c, (p, g.resolve("r2c2").unwrap())),
            Err(JordanError::EdgeNotOnCurve(_))
        ));
    }

    #[test]
    fn torus_meridian_does_not_separate() {
        let cx = fixtures::torus_grid(4, 4).unwrap().into_complex().unwrap();
        let view = view_of(&cx);
        let m = cycle(cx.graph(), &["r0c0", "r1c0", "r2c0", "r3c0"]);
        let report = separation_check(&view, &m, SeparationMode::PseudoPoints).unwrap();
        assert_eq!(report.components.len(), 1);
        assert_eq!(report.components[0].label, SideLabel::Mixed);
        assert!(!report.separates());
        assert!(report.oracle_agrees);
        assert_eq!(report.flank_violations(), m.len());
    }

    #[test]
    fn cube_petrie_hexagon() {
        let cx = fixtures::cube().into_complex().unwrap();
        let view = view_of(&cx);
        let hex = cycle(cx.graph(), &["001", "011", "010", "110", "100", "101"]);
        for mode in [SeparationMode::PseudoPoints, SeparationMode::VerticesOnly] {
            let report = separation_check(&view, &hex, mode).unwrap();
            assert_eq!(report.components.len(), 2, "{mode}");
            let g = cx.graph();
            let corners: BTreeSet<&str> = report
                .components
                .iter()
                .flat_map(|c| c.nodes.iter())
                .filter_map(|k| match k {
                    NodeKey::Vertex(v) => Some(g.name(*v)),
                    _ => None,
                })
                .collect();
            assert_eq!(corners, BTreeSet::from(["000", "111"]));
            assert!(report.oracle_agrees);
            assert!(report.sides_consistent());
        }
    }

    #[test]
    fn curve_preconditions() {
        let cx = fixtures::grid(3).unwrap().into_complex().unwrap();
        let view = view_of(&cx);
        let c = cx.cell(CellId(0)).clone();
        assert!(matches!(
            separation_check(&view, &c, SeparationMode::PseudoPoints),
            Err(JordanError::TouchesBoundary(_))
        ));
        let cx5 = fixtures::grid(5).unwrap().into_complex().unwrap();
        let view5 = view_of(&cx5);
        let chorded = cycle(cx5.graph(), &["r1c1", "r1c2", "r1c3", "r2c3", "r2c2", "r2c1"]);
        assert_eq!(
            separation_check(&view5, &chorded, SeparationMode::PseudoPoints),
            Err(JordanError::NotSemiCurve)
        );
        assert_eq!(
            oracle_separation(view.region(), &[], SeparationMode::PseudoPoints),
            Err(JordanError::EmptyCurve)
        );
    }

    #[test]
    fn nothing_removed_leaves_one_component() {
        for doc in [fixtures::grid(4).unwrap(), fixtures::cube(), fixtures::torus_grid(3, 4).unwrap()] {
            let cx = doc.into_complex().unwrap();
            for mode in [SeparationMode::PseudoPoints, SeparationMode::VerticesOnly] {
                let s = AugmentedIncidence::new(&cx.whole(), mode);
                assert_eq!(s.components(&BTreeSet::new()).len(), 1);
            }
        }
    }

    #[test]
    fn pseudo_nodes_link_only_to_their_carriers() {
        let cx = fixtures::grid(3).unwrap().into_complex().unwrap();
        let s = AugmentedIncidence::new(&cx.whole(), SeparationMode::PseudoPoints);
        assert_eq!(s.node_count(), 9 + 4 + 12);
        for n in s.neighbors(NodeKey::Cell(CellId(0))) {
            assert!(!matches!(n, NodeKey::Cell(_)));
        }
        let e = cx.cell(CellId(0)).edges()[0];
        let around = s.neighbors(NodeKey::Edge(e));
        assert_eq!(around.iter().filter(|k| matches!(k, NodeKey::Vertex(_))).count(), 2);
        assert!(around.iter().all(|k| !matches!(k, NodeKey::Edge(_))));
    }

    #[test]
    fn grid5_suite() {
        let cx = fixtures::grid(5).unwrap().into_complex().unwrap();
        let view = view_of(&cx);
        let suite = exhaustive_jordan_suite(&view, 10, SeparationMode::PseudoPoints).unwrap();
        assert_eq!(suite.curves.len(), 5);
        assert!(suite.all_separate());
        assert_eq!(suite.oracle_disagreements(), 0);
        assert_eq!(suite.flank_violations(), 0);
        let strict = exhaustive_jordan_suite(&view, 10, SeparationMode::VerticesOnly).unwrap();
        assert_eq!(strict.curves.len(), 1);
        assert_eq!(strict.component_histogram(), BTreeMap::from([(2, 1)]));
    }
}
