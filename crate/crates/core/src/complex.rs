//! Surface-cell sets, 3-cell sets, regions and their boundaries.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::graph::{
    enumerate_simple_cycles, girth, is_minimal_cycle, shortest_cycles_through, Edge, Graph,
    GraphError, Vertex, VertexCycle, VertexSet,
};

/// Index of a surface-cell within its complex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CellId(pub usize);

impl fmt::Display for CellId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ComplexError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("graph is acyclic: no surface-cells can be chosen")]
    NoCycles,
    #[error("default surface-cell set conflicts: intersection of {0} and {1} is disconnected")]
    ConstructionConflict(String, String),
    #[error("invalid surface-cell set: {0}")]
    InvalidU2(String),
    #[error("3-cell candidate {0} is not a closed semi-surface")]
    NotClosedSemiSurface(usize),
    #[error("3-cell candidate {0} is not minimal: a proper subset is a closed semi-surface")]
    NotMinimal(usize),
    #[error("3-cell candidate {0} has more than {MAX_MINIMALITY_VERTICES} vertices; minimality must be trusted explicitly")]
    MinimalityUnchecked(usize),
    #[error("invalid 3-cell set: {0}")]
    InvalidU3(String),
    #[error("region is not a semi-surface: edge {0} lies in {1} surface-cells")]
    NotSemiSurface(String, usize),
    #[error("unknown surface-cell {0}")]
    UnknownCell(CellId),
}

/// Largest 3-cell candidate whose minimality is checked by subset search.
pub const MAX_MINIMALITY_VERTICES: usize = 16;

/// A graph together with a surface-cell set and an optional 3-cell set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CellComplex {
    graph: Graph,
    cells: Vec<VertexCycle>,
    u3: Option<Vec<VertexSet>>,
    edge_cells: BTreeMap<Edge, Vec<CellId>>,
    vertex_cells: Vec<Vec<CellId>>,
}

impl CellComplex {
    /// Builds a complex from explicit surface-cells. The cells must form a
    /// valid surface-cell set; each cell's travel order is its orientation.
    pub fn new(graph: Graph, cells: Vec<VertexCycle>) -> Result<Self, ComplexError> {
        let report = validate_u2(&graph, &cells)?;
        if !report.passed() {
            return Err(ComplexError::InvalidU2(report.describe(&graph, &cells)));
        }
        Ok(Self::assemble(graph, cells))
    }

    /// Builds a complex whose surface-cells are the default choice for `graph`.
    pub fn with_default_cells(graph: Graph) -> Result<Self, ComplexError> {
        let cells = default_u2(&graph)?;
        Ok(Self::assemble(graph, cells))
    }

    /// Attaches a 3-cell set, validated with the given options.
    pub fn with_u3(
        mut self,
        u3: Vec<VertexSet>,
        options: U3Options,
    ) -> Result<Self, ComplexError> {
        let report = validate_u3(&self, &u3, options)?;
        if !report.passed() {
            return Err(ComplexError::InvalidU3(report.describe(&self.graph)));
        }
        self.u3 = Some(u3);
        Ok(self)
    }

    fn assemble(graph: Graph, cells: Vec<VertexCycle>) -> Self {
        let mut edge_cells: BTreeMap<Edge, Vec<CellId>> = BTreeMap::new();
        let mut vertex_cells = vec![Vec::new(); graph.vertex_count()];
        for (i, c) in cells.iter().enumerate() {
            for e in c.edges() {
                edge_cells.entry(e).or_default().push(CellId(i));
            }
            for &v in c.travel() {
                vertex_cells[v.index()].push(CellId(i));
            }
        }
        CellComplex {
            graph,
            cells,
            u3: None,
            edge_cells,
            vertex_cells,
        }
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn cells(&self) -> &[VertexCycle] {
        &self.cells
    }

    pub fn cell_ids(&self) -> impl Iterator<Item = CellId> {
        (0..self.cells.len()).map(CellId)
    }

    pub fn cell(&self, id: CellId) -> &VertexCycle {
        &self.cells[id.0]
    }

    pub fn u3(&self) -> Option<&[VertexSet]> {
        self.u3.as_deref()
    }

    /// Cells containing the edge, in id order.
    pub fn cells_on_edge(&self, e: Edge) -> &[CellId] {
        self.edge_cells.get(&e).map_or(&[], Vec::as_slice)
    }

    /// Cells containing the vertex, in id order.
    pub fn cells_at(&self, v: Vertex) -> &[CellId] {
        &self.vertex_cells[v.index()]
    }

    /// The cell whose vertex set equals `vs`, if any.
    pub fn cell_with_vertices(&self, vs: &VertexSet) -> Option<CellId> {
        let first = vs.iter().next()?;
        self.cells_at(*first)
            .iter()
            .copied()
            .find(|&id| self.cell(id).len() == vs.len() && self.cell(id).vertex_set() == *vs)
    }

    pub fn region(&self, vertices: VertexSet) -> Result<SurfaceRegion<'_>, ComplexError> {
        SurfaceRegion::from_vertices(self, vertices)
    }

    pub fn whole(&self) -> SurfaceRegion<'_> {
        SurfaceRegion::whole(self)
    }
}

/// A violation of the surface-cell set conditions.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum U2Violation {
    NotMinimal(usize),
    Duplicate(usize, usize),
    DisconnectedIntersection(usize, usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct U2Report {
    pub violations: Vec<U2Violation>,
}

impl U2Report {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn describe(&self, g: &Graph, cells: &[VertexCycle]) -> String {
        self.violations
            .iter()
            .map(|v| match *v {
                U2Violation::NotMinimal(i) => {
                    format!("cell #{i} ({}) has a chord", cells[i].display(g))
                }
                U2Violation::Duplicate(i, j) => format!("cells #{i},#{j} coincide"),
                U2Violation::DisconnectedIntersection(i, j) => {
                    format!("surface-cell intersection disconnected: cells #{i},#{j}")
                }
            })
            .collect::<Vec<_>>()
            .join("; ")
    }
}

/// Whether `set` induces a connected subgraph of `g` (empty counts as connected).
pub(crate) fn is_connected_set(g: &Graph, set: &VertexSet) -> bool {
    let Some(&start) = set.iter().next() else {
        return true;
    };
    let mut seen = BTreeSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        for &w in g.neighbors(v) {
            if set.contains(&w) && seen.insert(w) {
                queue.push_back(w);
            }
        }
    }
    seen.len() == set.len()
}

/// Checks that every cell is a minimal cycle and that any two distinct cells
/// meet in an empty or connected vertex set.
pub fn validate_u2(g: &Graph, cells: &[VertexCycle]) -> Result<U2Report, ComplexError> {
    let mut report = U2Report::default();
    let sets: Vec<VertexSet> = cells.iter().map(VertexCycle::vertex_set).collect();
    for (i, c) in cells.iter().enumerate() {
        if !is_minimal_cycle(g, c)? {
            report.violations.push(U2Violation::NotMinimal(i));
        }
    }
    for i in 0..cells.len() {
        for j in i + 1..cells.len() {
            if cells[i] == cells[j] {
                report.violations.push(U2Violation::Duplicate(i, j));
                continue;
            }
            let meet: VertexSet = sets[i].intersection(&sets[j]).copied().collect();
            if !is_connected_set(g, &meet) {
                report
                    .violations
                    .push(U2Violation::DisconnectedIntersection(i, j));
            }
        }
    }
    Ok(report)
}

/// The default surface-cell set: every cycle of girth length, plus every
/// shortest cycle through each vertex those miss. Fails if the union is not
/// a valid surface-cell set.
pub fn default_u2(g: &Graph) -> Result<Vec<VertexCycle>, ComplexError> {
    let m = girth(g).ok_or(ComplexError::NoCycles)?;
    let mut cells: BTreeSet<VertexCycle> = enumerate_simple_cycles(g, None, m)
        .into_iter()
        .filter(|c| c.len() == m)
        .collect();
    let covered: VertexSet = cells.iter().flat_map(|c| c.travel().to_vec()).collect();
    for p in g.vertices() {
        if !covered.contains(&p) {
            cells.extend(shortest_cycles_through(g, p));
        }
    }
    let cells: Vec<VertexCycle> = cells.into_iter().collect();
    let report = validate_u2(g, &cells)?;
    if let Some(v) = report.violations.first() {
        let (i, j) = match *v {
            U2Violation::DisconnectedIntersection(i, j) | U2Violation::Duplicate(i, j) => (i, j),
            U2Violation::NotMinimal(i) => (i, i),
        };
        return Err(ComplexError::ConstructionConflict(
            cells[i].display(g),
            cells[j].display(g),
        ));
    }
    Ok(cells)
}

/// A vertex set `S` of a complex with the surface-cells considered to lie in
/// it. Built from vertices, a cell is in `S` iff all its vertices are; built
/// from cells, exactly the given cells are in `S`.
#[derive(Debug, Clone)]
pub struct SurfaceRegion<'a> {
    complex: &'a CellComplex,
    vertices: VertexSet,
    cells: BTreeSet<CellId>,
}

impl<'a> SurfaceRegion<'a> {
    pub fn from_vertices(
        complex: &'a CellComplex,
        vertices: VertexSet,
    ) -> Result<Self, ComplexError> {
        if let Some(v) = vertices
            .iter()
            .find(|v| v.index() >= complex.graph.vertex_count())
        {
            return Err(GraphError::UnknownVertex(v.to_string()).into());
        }
        let cells = complex
            .cell_ids()
            .filter(|&id| complex.cell(id).travel().iter().all(|v| vertices.contains(v)))
            .collect();
        Ok(SurfaceRegion {
            complex,
            vertices,
            cells,
        })
    }

    pub fn from_cells(
        complex: &'a CellComplex,
        cells: impl IntoIterator<Item = CellId>,
    ) -> Result<Self, ComplexError> {
        let cells: BTreeSet<CellId> = cells.into_iter().collect();
        if let Some(&bad) = cells.iter().find(|id| id.0 >= complex.cells.len()) {
            return Err(ComplexError::UnknownCell(bad));
        }
        let vertices = cells
            .iter()
            .flat_map(|&id| complex.cell(id).travel().iter().copied())
            .collect();
        Ok(SurfaceRegion {
            complex,
            vertices,
            cells,
        })
    }

    pub fn whole(complex: &'a CellComplex) -> Self {
        SurfaceRegion {
            complex,
            vertices: complex.graph.all_vertices(),
            cells: complex.cell_ids().collect(),
        }
    }

    pub fn complex(&self) -> &'a CellComplex {
        self.complex
    }

    pub fn graph(&self) -> &'a Graph {
        &self.complex.graph
    }

    pub fn vertices(&self) -> &VertexSet {
        &self.vertices
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.vertices.contains(&v)
    }

    pub fn cells(&self) -> impl Iterator<Item = CellId> + '_ {
        self.cells.iter().copied()
    }

    pub fn cell_count(&self) -> usize {
        self.cells.len()
    }

    pub fn has_cell(&self, id: CellId) -> bool {
        self.cells.contains(&id)
    }

    /// In-region cells containing `v`.
    pub fn cells_at(&self, v: Vertex) -> Vec<CellId> {
        self.complex
            .cells_at(v)
            .iter()
            .copied()
            .filter(|id| self.cells.contains(id))
            .collect()
    }

    /// In-region cells containing `e`.
    pub fn cells_on_edge(&self, e: Edge) -> Vec<CellId> {
        self.complex
            .cells_on_edge(e)
            .iter()
            .copied()
            .filter(|id| self.cells.contains(id))
            .collect()
    }

    /// Line-cells of the region: edges of the induced subgraph.
    pub fn edges(&self) -> Vec<Edge> {
        self.complex.graph.induced_edges(&self.vertices)
    }

    /// For every line-cell, the number of in-region cells containing it.
    pub fn cover_counts(&self) -> BTreeMap<Edge, usize> {
        self.edges()
            .into_iter()
            .map(|e| (e, self.cells_on_edge(e).len()))
            .collect()
    }

    /// Every line-cell lies in one or two in-region cells.
    pub fn is_semi_surface(&self) -> bool {
        self.cover_counts().values().all(|&n| n == 1 || n == 2)
    }

    /// Every line-cell lies in exactly two in-region cells.
    pub fn is_closed_semi_surface(&self) -> bool {
        self.cover_counts().values().all(|&n| n == 2)
    }

    /// A semi-surface that contains no 3-cell of the complex.
    pub fn is_discrete_surface(&self) -> bool {
        self.is_semi_surface()
            && self
                .complex
                .u3()
                .unwrap_or(&[])
                .iter()
                .all(|solid| !solid.is_subset(&self.vertices))
    }

    /// Vertices incident to a line-cell covered by exactly one in-region cell.
    pub fn boundary(&self) -> Result<VertexSet, ComplexError> {
        let mut out = VertexSet::new();
        for (e, n) in self.cover_counts() {
            match n {
                1 => {
                    out.insert(e.lo());
                    out.insert(e.hi());
                }
                2 => {}
                _ => {
                    let g = &self.complex.graph;
                    return Err(ComplexError::NotSemiSurface(
                        format!("{}-{}", g.name(e.lo()), g.name(e.hi())),
                        n,
                    ));
                }
            }
        }
        Ok(out)
    }
}

/// Options for 3-cell validation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct U3Options {
    /// Require surface-cells inside an intersection to be line-connected.
    pub strict: bool,
    /// Skip the subset search for candidates too large to check.
    pub trust_minimal: bool,
}

impl Default for U3Options {
    fn default() -> Self {
        U3Options {
            strict: true,
            trust_minimal: false,
        }
    }
}

/// Shape of the intersection of two 3-cells.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IntersectionClass {
    Empty,
    Vertex,
    /// Contains line-cells but no surface-cell; connected.
    PointConnected,
    /// Contains surface-cells that are line-connected.
    LineConnected,
    /// Contains surface-cells that are only point-connected.
    CellsNotLineConnected,
    Disconnected,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct U3Pair {
    pub a: usize,
    pub b: usize,
    pub class: IntersectionClass,
    pub ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct U3Report {
    pub pairs: Vec<U3Pair>,
}

impl U3Report {
    pub fn passed(&self) -> bool {
        self.pairs.iter().all(|p| p.ok)
    }

    pub fn describe(&self, _g: &Graph) -> String {
        self.pairs
            .iter()
            .filter(|p| !p.ok)
            .map(|p| format!("3-cells #{},#{} meet as {:?}", p.a, p.b, p.class))
            .collect::<Vec<_>>()
            .join("; ")
    }
}

/// Cells among `cells` form one class under "shares a line-cell".
pub(crate) fn line_connected(cx: &CellComplex, cells: &[CellId]) -> bool {
    if cells.len() <= 1 {
        return true;
    }
    let edge_sets: Vec<BTreeSet<Edge>> = cells
        .iter()
        .map(|&id| cx.cell(id).edges().into_iter().collect())
        .collect();
    let mut seen = vec![false; cells.len()];
    seen[0] = true;
    let mut queue = VecDeque::from([0]);
    while let Some(i) = queue.pop_front() {
        for j in 0..cells.len() {
            if !seen[j] && !edge_sets[i].is_disjoint(&edge_sets[j]) {
                seen[j] = true;
                queue.push_back(j);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

fn classify_intersection(cx: &CellComplex, meet: &VertexSet, strict: bool) -> (IntersectionClass, bool) {
    if meet.is_empty() {
        return (IntersectionClass::Empty, true);
    }
    if meet.len() == 1 {
        return (IntersectionClass::Vertex, true);
    }
    let g = cx.graph();
    if !is_connected_set(g, meet) {
        return (IntersectionClass::Disconnected, false);
    }
    let inside: Vec<CellId> = cx
        .cell_ids()
        .filter(|&id| cx.cell(id).vertex_set().is_subset(meet))
        .collect();
    if inside.is_empty() {
        (IntersectionClass::PointConnected, true)
    } else if line_connected(cx, &inside) {
        (IntersectionClass::LineConnected, true)
    } else {
        (IntersectionClass::CellsNotLineConnected, !strict)
    }
}

/// Whether some non-empty proper subset of `candidate` containing a cell is a
/// closed semi-surface.
fn has_closed_proper_subset(cx: &CellComplex, candidate: &VertexSet) -> bool {
    let local: Vec<Vertex> = candidate.iter().copied().collect();
    let bit = |v: Vertex| 1u32 << local.binary_search(&v).expect("vertex in candidate");
    let cell_masks: Vec<(u32, Vec<Edge>)> = cx
        .cell_ids()
        .map(|id| cx.cell(id))
        .filter(|c| c.travel().iter().all(|v| candidate.contains(v)))
        .map(|c| (c.travel().iter().fold(0, |m, &v| m | bit(v)), c.edges()))
        .collect();
    let edges: Vec<(u32, Edge)> = cx
        .graph()
        .induced_edges(candidate)
        .into_iter()
        .map(|e| (bit(e.lo()) | bit(e.hi()), e))
        .collect();
    let full = if local.len() == 32 { u32::MAX } else { (1u32 << local.len()) - 1 };
    for subset in 1..full {
        let inside: Vec<&Vec<Edge>> = cell_masks
            .iter()
            .filter(|(m, _)| m & subset == *m)
            .map(|(_, es)| es)
            .collect();
        if inside.is_empty() {
            continue;
        }
        let closed = edges.iter().filter(|(m, _)| m & subset == *m).all(|(_, e)| {
            inside.iter().filter(|es| es.contains(e)).count() == 2
        });
        if closed {
            return true;
        }
    }
    false
}

/// Validates 3-cell candidates against a complex's surface-cells: each must
/// be a minimal closed semi-surface, and any two must meet in an empty set, a
/// vertex, a connected set of line-cells, or line-connected surface-cells.
pub fn validate_u3(
    cx: &CellComplex,
    candidates: &[VertexSet],
    options: U3Options,
) -> Result<U3Report, ComplexError> {
    for (i, cand) in candidates.iter().enumerate() {
        let region = SurfaceRegion::from_vertices(cx, cand.clone())?;
        if region.cell_count() == 0 || !region.is_closed_semi_surface() {
            return Err(ComplexError::NotClosedSemiSurface(i));
        }
        if cand.len() > MAX_MINIMALITY_VERTICES {
            if !options.trust_minimal {
                return Err(ComplexError::MinimalityUnchecked(i));
            }
        } else if has_closed_proper_subset(cx, cand) {
            return Err(ComplexError::NotMinimal(i));
        }
    }
    let mut report = U3Report::default();
    for a in 0..candidates.len() {
        for b in a + 1..candidates.len() {
            let meet: VertexSet = candidates[a].intersection(&candidates[b]).copied().collect();
            let (class, ok) = classify_intersection(cx, &meet, options.strict);
            report.pairs.push(U3Pair { a, b, class, ok });
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::graph::GraphBuilder;

    fn named(g: &Graph, names: &[&str]) -> VertexSet {
        names.iter().map(|n| g.resolve(n).unwrap()).collect()
    }

    #[test]
    fn cube_faces_pass() {
        let cx = fixtures::cube().into_complex().unwrap();
        assert!(validate_u2(cx.graph(), cx.cells()).unwrap().passed());
        assert!(validate_u2(cx.graph(), &cx.cells()[..1]).unwrap().passed());
    }

    #[test]
    fn cells_touching_at_two_opposite_corners_fail() {
        // two 4-cycles a-x-b-y and a-z-b-w share only a and b
        let mut gb = GraphBuilder::new();
        for n in ["a", "b", "x", "y", "z", "w"] {
            gb.add_vertex(n).unwrap();
        }
        for (u, v) in [("a", "x"), ("x", "b"), ("b", "y"), ("y", "a"), ("a", "z"), ("z", "b"), ("b", "w"), ("w", "a")] {
            gb.add_edge_by_name(u, v).unwrap();
        }
        let g = gb.build().unwrap();
        let c1 = VertexCycle::from_names(&g, &["a", "x", "b", "y"]).unwrap();
        let c2 = VertexCycle::from_names(&g, &["a", "z", "b", "w"]).unwrap();
        let report = validate_u2(&g, &[c1.clone(), c2.clone()]).unwrap();
        assert_eq!(report.violations, vec![U2Violation::DisconnectedIntersection(0, 1)]);
        assert!(matches!(
            CellComplex::new(g, vec![c1, c2]),
            Err(ComplexError::InvalidU2(_))
        ));
    }

    #[test]
    fn chorded_cell_is_rejected() {
        let cx = fixtures::grid(3).unwrap().into_complex().unwrap();
        let g = cx.graph();
        let six = VertexCycle::from_names(g, &["r0c0", "r0c1", "r0c2", "r1c2", "r1c1", "r1c0"]).unwrap();
        let report = validate_u2(g, &[six]).unwrap();
        assert_eq!(report.violations, vec![U2Violation::NotMinimal(0)]);
    }

    #[test]
    fn default_cells_of_grid_cube_triangle() {
        let grid = fixtures::grid(3).unwrap().into_complex().unwrap();
        let cells = default_u2(grid.graph()).unwrap();
        assert_eq!(cells.len(), 4);
        assert!(cells.iter().all(|c| c.len() == 4));
        let cube = fixtures::cube().into_complex().unwrap();
        assert_eq!(default_u2(cube.graph()).unwrap().len(), 6);

        let mut gb = GraphBuilder::new();
        for n in ["a", "b", "c"] {
            gb.add_vertex(n).unwrap();
        }
        gb.add_edge_by_name("a", "b").unwrap();
        gb.add_edge_by_name("b", "c").unwrap();
        gb.add_edge_by_name("c", "a").unwrap();
        assert_eq!(default_u2(&gb.build().unwrap()).unwrap().len(), 1);
    }

    #[test]
    fn default_cells_cover_stragglers() {
        // a triangle with a pendant square: the square's far vertices are not
        // on any triangle, so the square joins through the coverage rule
        let mut gb = GraphBuilder::new();
        for n in ["a", "b", "c", "d", "e"] {
            gb.add_vertex(n).unwrap();
        }
        for (u, v) in [("a", "b"), ("b", "c"), ("c", "a"), ("b", "d"), ("d", "e"), ("e", "c")] {
            gb.add_edge_by_name(u, v).unwrap();
        }
        let g = gb.build().unwrap();
        let cells = default_u2(&g).unwrap();
        assert_eq!(cells.len(), 2);
        assert_eq!(cells[0].len(), 3);
        assert_eq!(cells[1].vertex_set(), named(&g, &["b", "c", "d", "e"]));
    }

    #[test]
    fn default_cells_acyclic_graph_errors() {
        let mut gb = GraphBuilder::new();
        gb.add_vertex("a").unwrap();
        gb.add_vertex("b").unwrap();
        gb.add_edge_by_name("a", "b").unwrap();
        assert_eq!(default_u2(&gb.build().unwrap()), Err(ComplexError::NoCycles));
    }

    #[test]
    fn default_cells_conflict_is_reported() {
        // three parallel routes between a and b: every pair of 4-cycles
        // shares a route, so the default set is valid
        let mut gb = GraphBuilder::new();
        for n in ["a", "b", "x", "y", "z"] {
            gb.add_vertex(n).unwrap();
        }
        for (u, v) in [("a", "x"), ("x", "b"), ("a", "y"), ("y", "b"), ("a", "z"), ("z", "b")] {
            gb.add_edge_by_name(u, v).unwrap();
        }
        let g = gb.build().unwrap();
        assert_eq!(default_u2(&g).unwrap().len(), 3);
        // with a fourth route, a-x-b-y and a-z-b-w meet only in {a,b}
        let mut gb = GraphBuilder::new();
        for n in ["a", "b", "x", "y", "z", "w"] {
            gb.add_vertex(n).unwrap();
        }
        for (u, v) in [("a", "x"), ("x", "b"), ("a", "y"), ("y", "b"), ("a", "z"), ("z", "b"), ("a", "w"), ("w", "b")] {
            gb.add_edge_by_name(u, v).unwrap();
        }
        assert!(matches!(
            default_u2(&gb.build().unwrap()),
            Err(ComplexError::ConstructionConflict(..))
        ));
    }

    #[test]
    fn semi_surface_predicates() {
        let cube = fixtures::cube().into_complex().unwrap();
        let whole = cube.whole();
        assert!(whole.is_semi_surface());
        assert!(whole.is_closed_semi_surface());
        assert!(whole.boundary().unwrap().is_empty());

        let grid = fixtures::grid(3).unwrap().into_complex().unwrap();
        let g = grid.whole();
        assert!(g.is_semi_surface());
        assert!(!g.is_closed_semi_surface());
        let border: VertexSet = grid
            .graph()
            .vertices()
            .filter(|&v| grid.graph().name(v) != "r1c1")
            .collect();
        assert_eq!(g.boundary().unwrap(), border);

        let single = SurfaceRegion::from_cells(&grid, [CellId(0)]).unwrap();
        assert!(single.is_semi_surface());
        assert_eq!(single.boundary().unwrap().len(), 4);
    }

    #[test]
    fn region_with_uncovered_edge_is_not_semi_surface() {
        let grid = fixtures::grid(3).unwrap().into_complex().unwrap();
        let g = grid.graph();
        let path = grid.region(named(g, &["r0c0", "r0c1", "r0c2"])).unwrap();
        assert!(!path.is_semi_surface());
        assert!(matches!(path.boundary(), Err(ComplexError::NotSemiSurface(_, 0))));
    }

    #[test]
    fn removing_a_cell_opens_a_closed_surface() {
        let cube = fixtures::cube().into_complex().unwrap();
        for drop in cube.cell_ids() {
            let r = SurfaceRegion::from_cells(&cube, cube.cell_ids().filter(|&c| c != drop)).unwrap();
            assert!(!r.is_closed_semi_surface());
            assert_eq!(r.boundary().unwrap(), cube.cell(drop).vertex_set());
        }
    }

    #[test]
    fn discrete_surface_respects_three_cells() {
        let cube = fixtures::cube().into_complex().unwrap();
        assert!(cube.whole().is_discrete_surface());
        let all = cube.graph().all_vertices();
        let solid = cube.clone().with_u3(vec![all.clone()], U3Options::default()).unwrap();
        assert!(!solid.region(all).unwrap().is_discrete_surface());
        let grid = fixtures::grid(3).unwrap().into_complex().unwrap();
        assert!(grid.whole().is_discrete_surface());
    }

    fn two_cube_slab() -> CellComplex {
        // vertices x{0,1} y{0,1} z{0,1,2}; squares on every unit cube face
        let mut gb = GraphBuilder::new();
        let name = |x: u8, y: u8, z: u8| format!("p{x}{y}{z}");
        for x in 0..2 {
            for y in 0..2 {
                for z in 0..3 {
                    gb.add_vertex(name(x, y, z)).unwrap();
                }
            }
        }
        for x in 0..2u8 {
            for y in 0..2u8 {
                for z in 0..3u8 {
                    if x == 0 {
                        gb.add_edge_by_name(&name(x, y, z), &name(1, y, z)).unwrap();
                    }
                    if y == 0 {
                        gb.add_edge_by_name(&name(x, y, z), &name(x, 1, z)).unwrap();
                    }
                    if z < 2 {
                        gb.add_edge_by_name(&name(x, y, z), &name(x, y, z + 1)).unwrap();
                    }
                }
            }
        }
        let g = gb.build().unwrap();
        let mut cells = Vec::new();
        for z in 0..3u8 {
            cells.push([name(0, 0, z), name(1, 0, z), name(1, 1, z), name(0, 1, z)]);
        }
        for z in 0..2u8 {
            cells.push([name(0, 0, z), name(1, 0, z), name(1, 0, z + 1), name(0, 0, z + 1)]);
            cells.push([name(0, 1, z), name(1, 1, z), name(1, 1, z + 1), name(0, 1, z + 1)]);
            cells.push([name(0, 0, z), name(0, 1, z), name(0, 1, z + 1), name(0, 0, z + 1)]);
            cells.push([name(1, 0, z), name(1, 1, z), name(1, 1, z + 1), name(1, 0, z + 1)]);
        }
        let cells = cells
            .iter()
            .map(|c| {
                let refs: Vec<&str> = c.iter().map(String::as_str).collect();
                VertexCycle::from_names(&g, &refs).unwrap()
            })
            .collect();
        CellComplex::new(g, cells).unwrap()
    }

    fn unit_cube(cx: &CellComplex, z0: u8) -> VertexSet {
        let mut names = Vec::new();
        for x in 0..2 {
            for y in 0..2 {
                for z in z0..z0 + 2 {
                    names.push(format!("p{x}{y}{z}"));
                }
            }
        }
        let refs: Vec<&str> = names.iter().map(String::as_str).collect();
        named(cx.graph(), &refs)
    }

    #[test]
    fn cubes_sharing_a_face() {
        let cx = two_cube_slab();
        let lower = unit_cube(&cx, 0);
        let upper = unit_cube(&cx, 1);
        let report = validate_u3(&cx, &[lower.clone(), upper.clone()], U3Options::default()).unwrap();
        assert!(report.passed());
        assert_eq!(report.pairs[0].class, IntersectionClass::LineConnected);
        let single = validate_u3(&cx, std::slice::from_ref(&lower), U3Options::default()).unwrap();
        assert!(single.passed() && single.pairs.is_empty());

        let solid = cx.clone().with_u3(vec![lower, upper], U3Options::default()).unwrap();
        assert!(!solid.whole().is_discrete_surface());
    }

    #[test]
    fn whole_slab_is_not_a_three_cell() {
        let cx = two_cube_slab();
        let all = cx.graph().all_vertices();
        // the middle square lies in three cells, so the slab is not closed
        assert_eq!(
            validate_u3(&cx, &[all], U3Options::default()),
            Err(ComplexError::NotClosedSemiSurface(0))
        );
    }

    #[test]
    fn disjoint_cubes_pass() {
        let a = fixtures::cube().into_complex().unwrap();
        // two disjoint cubes joined by one bridge edge
        let mut gb = GraphBuilder::new();
        for side in ["a", "b"] {
            for v in a.graph().vertices() {
                gb.add_vertex(format!("{side}{}", a.graph().name(v))).unwrap();
            }
        }
        for side in ["a", "b"] {
            for e in a.graph().edges() {
                gb.add_edge_by_name(
                    &format!("{side}{}", a.graph().name(e.lo())),
                    &format!("{side}{}", a.graph().name(e.hi())),
                )
                .unwrap();
            }
        }
        gb.add_edge_by_name("a000", "b000").unwrap();
        let g = gb.build().unwrap();
        let mut cells = Vec::new();
        for side in ["a", "b"] {
            for c in a.cells() {
                let names: Vec<String> = c.travel().iter().map(|&v| format!("{side}{}", a.graph().name(v))).collect();
                let refs: Vec<&str> = names.iter().map(String::as_str).collect();
                cells.push(VertexCycle::from_names(&g, &refs).unwrap());
            }
        }
        let cx = CellComplex::new(g, cells).unwrap();
        let ga: VertexSet = cx.graph().vertices().filter(|&v| cx.graph().name(v).starts_with('a')).collect();
        let gb: VertexSet = cx.graph().vertices().filter(|&v| cx.graph().name(v).starts_with('b')).collect();
        let report = validate_u3(&cx, &[ga, gb], U3Options::default()).unwrap();
        assert_eq!(report.pairs[0].class, IntersectionClass::Empty);
        assert!(report.passed());
    }

    #[test]
    fn non_minimal_candidate_rejected() {
        // two cube shells glued at one vertex: closed, but each shell alone is
        // already a closed semi-surface
        let a = fixtures::cube().into_complex().unwrap();
        let ag = a.graph();
        let rename = |side: &str, v: Vertex| {
            let n = ag.name(v);
            if n == "000" { "hub".to_string() } else { format!("{side}{n}") }
        };
        let mut gb = GraphBuilder::new();
        gb.add_vertex("hub").unwrap();
        for side in ["a", "b"] {
            for v in ag.vertices().filter(|&v| ag.name(v) != "000") {
                gb.add_vertex(rename(side, v)).unwrap();
            }
        }
        for side in ["a", "b"] {
            for e in ag.edges() {
                gb.add_edge_by_name(&rename(side, e.lo()), &rename(side, e.hi())).unwrap();
            }
        }
        let g = gb.build().unwrap();
        let mut cells = Vec::new();
        for side in ["a", "b"] {
            for c in a.cells() {
                let names: Vec<String> = c.travel().iter().map(|&v| rename(side, v)).collect();
                let refs: Vec<&str> = names.iter().map(String::as_str).collect();
                cells.push(VertexCycle::from_names(&g, &refs).unwrap());
            }
        }
        let cx = CellComplex::new(g, cells).unwrap();
        let all = cx.graph().all_vertices();
        assert!(cx.whole().is_closed_semi_surface());
        assert_eq!(
            validate_u3(&cx, &[all], U3Options::default()),
            Err(ComplexError::NotMinimal(0))
        );
        let slab = two_cube_slab();
        assert!(!has_closed_proper_subset(&slab, &unit_cube(&slab, 0)));
    }
}
