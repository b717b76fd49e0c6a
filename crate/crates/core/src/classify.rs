//! Curves, neighbourhoods of points, regularity and orientation.
//!
//! "Clockwise" here is a convention fixed by an [`OrientationAtlas`]: a link
//! cycle is oriented so that it runs along each cell's edges in the cell's
//! atlas direction. Only agreement or disagreement of orientations is ever
//! compared, never an absolute sense of rotation.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use thiserror::Error;

use crate::complex::{CellComplex, CellId, ComplexError, SurfaceRegion};
use crate::graph::{Edge, Graph, Vertex, VertexCycle, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ClassifyError {
    #[error("vertex {0} is not in the region")]
    NotInRegion(String),
    #[error("vertex {0} lies in no surface-cell of the region")]
    NoDisk(String),
    #[error("vertex {0} must have exactly two neighbours in the region, found {1}")]
    Precondition(String, usize),
    #[error("no surface-cell witness around {0}: the complex is malformed")]
    InternalConsistency(String),
    #[error("vertex {0} is not on the neighbourhood of {1}")]
    NotOnLink(String, String),
    #[error("vertex {0} has no disk or fan: irregular or non-manifold point")]
    Unsupported(String),
    #[error("neighbourhoods of {0} and {1} do not merge: {2}")]
    MergeViolation(String, String, String),
    #[error("region is not orientable")]
    NonOrientable,
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

/// True iff `vs` is a simple path whose induced subgraph adds nothing beyond
/// the path edges and, when the ends are adjacent, the closing edge.
pub fn is_semi_curve(g: &Graph, vs: &[Vertex]) -> bool {
    if vs.is_empty() || vs.iter().any(|v| v.index() >= g.vertex_count()) {
        return false;
    }
    let set: VertexSet = vs.iter().copied().collect();
    if set.len() != vs.len() || vs.windows(2).any(|w| !g.adjacent(w[0], w[1])) {
        return false;
    }
    let n = vs.len();
    let closing = n >= 3 && g.adjacent(vs[0], vs[n - 1]);
    let expected = n - 1 + usize::from(closing);
    g.induced_edges(&set).len() == expected
}

/// Outcome of the discrete-curve test.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CurveVerdict {
    pub semi_curve: bool,
    pub closed: bool,
    /// A surface-cell whose vertices all lie on the sequence. For a
    /// semi-curve this cell is the whole sequence.
    pub contained_cell: Option<CellId>,
}

impl CurveVerdict {
    pub fn is_curve(&self) -> bool {
        self.semi_curve && self.contained_cell.is_none()
    }
}

/// A semi-curve that contains no surface-cell.
pub fn is_discrete_curve(cx: &CellComplex, vs: &[Vertex]) -> CurveVerdict {
    let g = cx.graph();
    let semi_curve = is_semi_curve(g, vs);
    let closed = semi_curve && vs.len() >= 3 && g.adjacent(vs[0], vs[vs.len() - 1]);
    let set: VertexSet = vs.iter().copied().collect();
    let contained_cell = cx
        .cell_ids()
        .find(|&id| cx.cell(id).travel().iter().all(|v| set.contains(v)));
    CurveVerdict {
        semi_curve,
        closed,
        contained_cell,
    }
}

/// A consistent choice of traversal direction for the cells of a region.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientationAtlas {
    /// `true` keeps the cell's stored travel order, `false` reverses it.
    forward: BTreeMap<CellId, bool>,
    consistent: bool,
    conflict: Option<(CellId, CellId)>,
}

impl OrientationAtlas {
    pub fn is_consistent(&self) -> bool {
        self.consistent
    }

    /// The first pair of cells found to disagree across a shared edge.
    pub fn conflict(&self) -> Option<(CellId, CellId)> {
        self.conflict
    }

    pub fn is_forward(&self, id: CellId) -> bool {
        self.forward.get(&id).copied().unwrap_or(true)
    }

    pub fn cells(&self) -> impl Iterator<Item = (CellId, bool)> + '_ {
        self.forward.iter().map(|(&id, &f)| (id, f))
    }

    /// The cell's cycle in its atlas direction.
    pub fn oriented(&self, cx: &CellComplex, id: CellId) -> VertexCycle {
        if self.is_forward(id) {
            cx.cell(id).clone()
        } else {
            cx.cell(id).reversed()
        }
    }

    /// Whether the cell, in atlas direction, runs `a -> b`.
    pub fn traverses(&self, cx: &CellComplex, id: CellId, a: Vertex, b: Vertex) -> Option<bool> {
        cx.cell(id)
            .traverses(a, b)
            .map(|dir| dir == self.is_forward(id))
    }

    /// The opposite atlas.
    pub fn flipped(&self) -> Self {
        OrientationAtlas {
            forward: self.forward.iter().map(|(&id, &f)| (id, !f)).collect(),
            consistent: self.consistent,
            conflict: self.conflict,
        }
    }
}

/// Propagates traversal directions across shared edges by breadth-first
/// search over in-region cells; each connected class is anchored at its
/// lowest cell id in stored direction.
pub fn build_orientation_atlas(region: &SurfaceRegion<'_>) -> OrientationAtlas {
    let cx = region.complex();
    let mut forward: BTreeMap<CellId, bool> = BTreeMap::new();
    let mut conflict = None;
    for root in region.cells() {
        if forward.contains_key(&root) {
            continue;
        }
        forward.insert(root, true);
        let mut queue = VecDeque::from([root]);
        while let Some(id) = queue.pop_front() {
            let dir = forward[&id];
            for (a, b) in cx.cell(id).darts() {
                // in atlas direction this cell runs a->b iff dir
                for other in region.cells_on_edge(Edge::new(a, b)) {
                    if other == id {
                        continue;
                    }
                    let other_runs_ab = cx.cell(other).traverses(a, b).expect("edge on cell");
                    // neighbour must run b->a in atlas direction
                    let want = other_runs_ab != dir;
                    match forward.get(&other) {
                        Some(&have) if have != want => {
                            conflict.get_or_insert((id.min(other), id.max(other)));
                        }
                        Some(_) => {}
                        None => {
                            forward.insert(other, want);
                            queue.push_back(other);
                        }
                    }
                }
            }
        }
    }
    OrientationAtlas {
        forward,
        consistent: conflict.is_none(),
        conflict,
    }
}

/// Cells around a point and the cycle (or open chain) they bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NeighborhoodDisk {
    pub center: Vertex,
    pub cells: Vec<CellId>,
    /// The link `S(p) - {p}` when `p` is an inner regular point.
    pub link: Option<VertexCycle>,
    /// For a boundary point with a single fan of cells: the vertices of
    /// `S(p) - {p}` from one boundary spoke to the other.
    pub chain: Option<Vec<Vertex>>,
}

impl NeighborhoodDisk {
    /// Vertices around the centre in link order, with `None` marking the gap
    /// of an open chain. `None` when the point has neither link nor chain.
    pub fn cyclic_order(&self) -> Option<Vec<Option<Vertex>>> {
        if let Some(link) = &self.link {
            return Some(link.travel().iter().copied().map(Some).collect());
        }
        let chain = self.chain.as_ref()?;
        let mut order: Vec<Option<Vertex>> = chain.iter().copied().map(Some).collect();
        order.push(None);
        Some(order)
    }

    pub fn reversed(&self) -> Self {
        NeighborhoodDisk {
            center: self.center,
            cells: self.cells.clone(),
            link: self.link.as_ref().map(VertexCycle::reversed),
            chain: self.chain.as_ref().map(|c| c.iter().rev().copied().collect()),
        }
    }
}

/// Arc of a cell around `p`: the cell's vertices from the one after `p` to
/// the one before it, in the given direction.
fn arc_around(cycle: &VertexCycle, p: Vertex, forward: bool) -> Vec<Vertex> {
    let t = cycle.travel();
    let n = t.len();
    let i = t.iter().position(|&v| v == p).expect("p on cell");
    let arc: Vec<Vertex> = (1..n).map(|k| t[(i + k) % n]).collect();
    if forward {
        arc
    } else {
        arc.into_iter().rev().collect()
    }
}

/// Builds the neighbourhood of `p` in `region`, orienting the link along the
/// atlas when one is supplied and along stored cell directions otherwise.
pub fn neighborhood(
    region: &SurfaceRegion<'_>,
    p: Vertex,
    atlas: Option<&OrientationAtlas>,
) -> Result<NeighborhoodDisk, ClassifyError> {
    let cx = region.complex();
    let g = cx.graph();
    if !region.contains(p) {
        return Err(ClassifyError::NotInRegion(g.name(p).to_string()));
    }
    let cells = region.cells_at(p);
    if cells.is_empty() {
        return Err(ClassifyError::NoDisk(g.name(p).to_string()));
    }
    let dir = |id: CellId| atlas.is_none_or(|a| a.is_forward(id));
    let mut disk = NeighborhoodDisk {
        center: p,
        cells: cells.clone(),
        link: None,
        chain: None,
    };

    // spoke vertex -> cells containing the edge (p, spoke)
    let mut spokes: BTreeMap<Vertex, Vec<CellId>> = BTreeMap::new();
    for &w in g.neighbors(p) {
        if region.contains(w) {
            spokes.insert(w, region.cells_on_edge(Edge::new(p, w)));
        }
    }
    if spokes.values().any(|cs| cs.is_empty() || cs.len() > 2) {
        return Ok(disk);
    }
    let open_ends: Vec<Vertex> = spokes
        .iter()
        .filter(|(_, cs)| cs.len() == 1)
        .map(|(&w, _)| w)
        .collect();

    let (start, first_arc) = match open_ends.len() {
        0 => {
            let c0 = cells[0];
            (c0, arc_around(cx.cell(c0), p, dir(c0)))
        }
        2 => {
            // start from the end whose cell's arc begins there in atlas
            // direction, falling back to the other end
            let mut pick = None;
            for &end in &open_ends {
                let c = spokes[&end][0];
                let arc = arc_around(cx.cell(c), p, dir(c));
                if arc[0] == end {
                    pick = Some((c, arc));
                    break;
                }
            }
            match pick {
                Some(found) => found,
                None => {
                    let end = open_ends[0];
                    let c = spokes[&end][0];
                    let arc = arc_around(cx.cell(c), p, dir(c));
                    let arc = if arc[0] == end { arc } else { arc.into_iter().rev().collect() };
                    (c, arc)
                }
            }
        }
        _ => return Ok(disk),
    };

    let mut order = first_arc;
    let mut used = BTreeSet::from([start]);
    let mut current = start;
    let closed = loop {
        let end = *order.last().expect("arc is non-empty");
        let next = spokes[&end].iter().copied().find(|&c| c != current);
        match next {
            None => break false,
            Some(c) if c == start => break true,
            Some(c) if used.contains(&c) => return Ok(disk),
            Some(c) => {
                let mut arc = arc_around(cx.cell(c), p, dir(c));
                if arc[0] != end {
                    arc.reverse();
                }
                order.extend_from_slice(&arc[1..]);
                used.insert(c);
                current = c;
            }
        }
    };
    if used.len() != cells.len() {
        return Ok(disk);
    }
    if closed {
        // the last arc ends where the first began
        order.pop();
    }
    let distinct: VertexSet = order.iter().copied().collect();
    if distinct.len() != order.len() {
        return Ok(disk);
    }
    if closed && open_ends.is_empty() && order.len() >= 3 {
        disk.link = Some(VertexCycle::from_raw(order));
    } else if !closed && open_ends.len() == 2 {
        disk.chain = Some(order);
    }
    Ok(disk)
}

/// All in-region cells containing `p` are connected through shared edges at `p`.
pub fn is_regular_point(region: &SurfaceRegion<'_>, p: Vertex) -> bool {
    let cx = region.complex();
    let cells = region.cells_at(p);
    if cells.is_empty() || !region.contains(p) {
        return false;
    }
    let spoke_sets: Vec<BTreeSet<Vertex>> = cells
        .iter()
        .map(|&id| {
            let (succ, pred) = cx.cell(id).around(p).expect("p on cell");
            BTreeSet::from([succ, pred])
        })
        .collect();
    let mut seen = vec![false; cells.len()];
    seen[0] = true;
    let mut queue = VecDeque::from([0]);
    while let Some(i) = queue.pop_front() {
        for j in 0..cells.len() {
            if !seen[j] && !spoke_sets[i].is_disjoint(&spoke_sets[j]) {
                seen[j] = true;
                queue.push_back(j);
            }
        }
    }
    seen.into_iter().all(|s| s)
}

/// The link of `p` exists and is a closed discrete curve.
pub fn is_simple_surface_point(region: &SurfaceRegion<'_>, p: Vertex) -> bool {
    match neighborhood(region, p, None) {
        Ok(NeighborhoodDisk { link: Some(link), .. }) => {
            let verdict = is_discrete_curve(region.complex(), link.travel());
            verdict.is_curve() && verdict.closed
        }
        _ => false,
    }
}

/// Cells witnessing that a point with two neighbours sits inside a cell
/// boundary.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwoCellWitness {
    /// A single cell holds both neighbours (the triangle they form with `p`,
    /// or the only cell through `p`).
    Single(CellId),
    /// Two distinct cells both containing `p` and its two neighbours.
    Pair(CellId, CellId),
}

/// For `p` with exactly two neighbours in the region, the surface-cells that
/// contain `p` together with both neighbours.
pub fn two_neighbor_cells(
    region: &SurfaceRegion<'_>,
    p: Vertex,
) -> Result<TwoCellWitness, ClassifyError> {
    let cx = region.complex();
    let g = cx.graph();
    if !region.contains(p) {
        return Err(ClassifyError::NotInRegion(g.name(p).to_string()));
    }
    let nbrs: Vec<Vertex> = g
        .neighbors(p)
        .iter()
        .copied()
        .filter(|&w| region.contains(w))
        .collect();
    if nbrs.len() != 2 {
        return Err(ClassifyError::Precondition(g.name(p).to_string(), nbrs.len()));
    }
    let triple: VertexSet = [nbrs[0], p, nbrs[1]].into();
    if g.adjacent(nbrs[0], nbrs[1]) {
        if let Some(id) = cx.cell_with_vertices(&triple) {
            if region.has_cell(id) {
                return Ok(TwoCellWitness::Single(id));
            }
        }
    }
    let holders: Vec<CellId> = region
        .cells_at(p)
        .into_iter()
        .filter(|&id| triple.iter().all(|&v| cx.cell(id).contains(v)))
        .collect();
    match holders.as_slice() {
        [a, b, ..] => Ok(TwoCellWitness::Pair(*a, *b)),
        [a] => Ok(TwoCellWitness::Single(*a)),
        [] => Err(ClassifyError::InternalConsistency(g.name(p).to_string())),
    }
}

/// Which side of a path `u -> x -> v` through a disk centre a vertex lies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Side {
    /// On the link arc running from `v` forward to `u`.
    Left,
    /// On the link arc running from `u` forward to `v`.
    Right,
    On,
}

impl Side {
    pub fn flip(self) -> Side {
        match self {
            Side::Left => Side::Right,
            Side::Right => Side::Left,
            Side::On => Side::On,
        }
    }
}

/// Classifies `probe` against the two arcs the link of `disk` splits into at
/// `u` and `v`. An open chain is treated as closed through its gap.
pub fn side_of(
    g: &Graph,
    disk: &NeighborhoodDisk,
    through: (Vertex, Vertex),
    probe: Vertex,
) -> Result<Side, ClassifyError> {
    let (u, v) = through;
    let center = g.name(disk.center).to_string();
    let order = disk
        .cyclic_order()
        .ok_or_else(|| ClassifyError::Unsupported(center.clone()))?;
    let pos = |w: Vertex| {
        order
            .iter()
            .position(|&x| x == Some(w))
            .ok_or_else(|| ClassifyError::NotOnLink(g.name(w).to_string(), center.clone()))
    };
    let (iu, iv, ip) = (pos(u)?, pos(v)?, pos(probe)?);
    if ip == iu || ip == iv {
        return Ok(Side::On);
    }
    let n = order.len();
    // distance going forward from v
    let from_v = |i: usize| (i + n - iv) % n;
    if from_v(ip) < from_v(iu) {
        Ok(Side::Left)
    } else {
        Ok(Side::Right)
    }
}

/// Union of the neighbourhoods of consecutive curve vertices `xs`, with its
/// boundary cycle. Each merge step requires the two neighbourhoods to share
/// exactly the two cells on the edge between consecutive points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnionDisk {
    pub centers: Vec<Vertex>,
    pub cells: Vec<CellId>,
    pub boundary: VertexCycle,
}

pub fn union_neighborhood(
    region: &SurfaceRegion<'_>,
    xs: &[Vertex],
    atlas: &OrientationAtlas,
) -> Result<UnionDisk, ClassifyError> {
    let cx = region.complex();
    let g = cx.graph();
    let Some(&first) = xs.first() else {
        return Err(ClassifyError::Unsupported("<empty>".into()));
    };
    let disk = neighborhood(region, first, Some(atlas))?;
    if disk.link.is_none() {
        return Err(ClassifyError::Unsupported(g.name(first).to_string()));
    }
    let mut cells: BTreeSet<CellId> = disk.cells.iter().copied().collect();
    for w in xs.windows(2) {
        let (a, b) = (w[0], w[1]);
        let e = Edge::new(a, b);
        if !g.adjacent(a, b) {
            return Err(ClassifyError::MergeViolation(
                g.name(a).into(),
                g.name(b).into(),
                "points are not adjacent".into(),
            ));
        }
        let next = neighborhood(region, b, Some(atlas))?;
        if next.link.is_none() {
            return Err(ClassifyError::Unsupported(g.name(b).to_string()));
        }
        let on_edge: BTreeSet<CellId> = region.cells_on_edge(e).into_iter().collect();
        let here: BTreeSet<CellId> = region.cells_at(a).into_iter().collect();
        let there: BTreeSet<CellId> = next.cells.iter().copied().collect();
        let shared: BTreeSet<CellId> = here.intersection(&there).copied().collect();
        if on_edge.len() != 2 || shared != on_edge {
            return Err(ClassifyError::MergeViolation(
                g.name(a).into(),
                g.name(b).into(),
                format!("{} shared cells, {} on the edge", shared.len(), on_edge.len()),
            ));
        }
        cells.extend(there);
    }
    // boundary: edges covered once within the union, walked into one cycle
    let mut count: BTreeMap<Edge, Vec<CellId>> = BTreeMap::new();
    for &id in &cells {
        for e in cx.cell(id).edges() {
            count.entry(e).or_default().push(id);
        }
    }
    let rim: Vec<(Edge, CellId)> = count
        .into_iter()
        .filter(|(_, cs)| cs.len() == 1)
        .map(|(e, cs)| (e, cs[0]))
        .collect();
    let mut next_of: BTreeMap<Vertex, Vertex> = BTreeMap::new();
    for &(e, id) in &rim {
        let (a, b) = if atlas.traverses(cx, id, e.lo(), e.hi()) == Some(true) {
            (e.lo(), e.hi())
        } else {
            (e.hi(), e.lo())
        };
        if next_of.insert(a, b).is_some() {
            return Err(ClassifyError::MergeViolation(
                g.name(first).into(),
                g.name(*xs.last().expect("non-empty")).into(),
                "union boundary is not a simple cycle".into(),
            ));
        }
    }
    let Some((&start, _)) = next_of.iter().next() else {
        return Err(ClassifyError::Unsupported(g.name(first).to_string()));
    };
    let mut cycle = vec![start];
    let mut at = next_of[&start];
    while at != start {
        cycle.push(at);
        at = *next_of.get(&at).ok_or_else(|| {
            ClassifyError::MergeViolation(
                g.name(first).into(),
                g.name(*xs.last().expect("non-empty")).into(),
                "union boundary is open".into(),
            )
        })?;
        if cycle.len() > next_of.len() {
            break;
        }
    }
    if cycle.len() != next_of.len() {
        return Err(ClassifyError::MergeViolation(
            g.name(first).into(),
            g.name(*xs.last().expect("non-empty")).into(),
            "union boundary splits into several cycles".into(),
        ));
    }
    Ok(UnionDisk {
        centers: xs.to_vec(),
        cells: cells.into_iter().collect(),
        boundary: VertexCycle::from_raw(cycle),
    })
}

/// A region together with its orientation atlas, boundary and the
/// neighbourhood of every vertex: the context the deformation and
/// separation checks run in.
#[derive(Debug, Clone)]
pub struct SurfaceView<'a> {
    region: SurfaceRegion<'a>,
    atlas: OrientationAtlas,
    boundary: VertexSet,
    disks: BTreeMap<Vertex, NeighborhoodDisk>,
}

impl<'a> SurfaceView<'a> {
    pub fn new(region: SurfaceRegion<'a>) -> Result<Self, ClassifyError> {
        let boundary = region.boundary()?;
        let atlas = build_orientation_atlas(&region);
        let mut disks = BTreeMap::new();
        for &v in region.vertices() {
            if let Ok(d) = neighborhood(&region, v, Some(&atlas)) {
                disks.insert(v, d);
            }
        }
        Ok(SurfaceView {
            region,
            atlas,
            boundary,
            disks,
        })
    }

    pub fn whole(cx: &'a CellComplex) -> Result<Self, ClassifyError> {
        Self::new(cx.whole())
    }

    pub fn region(&self) -> &SurfaceRegion<'a> {
        &self.region
    }

    pub fn complex(&self) -> &'a CellComplex {
        self.region.complex()
    }

    pub fn graph(&self) -> &'a Graph {
        self.region.graph()
    }

    pub fn atlas(&self) -> &OrientationAtlas {
        &self.atlas
    }

    pub fn boundary(&self) -> &VertexSet {
        &self.boundary
    }

    pub fn disk(&self, v: Vertex) -> Option<&NeighborhoodDisk> {
        self.disks.get(&v)
    }

    /// Same view with every cell's direction reversed.
    pub fn with_flipped_atlas(&self) -> Self {
        SurfaceView {
            region: self.region.clone(),
            atlas: self.atlas.flipped(),
            boundary: self.boundary.clone(),
            disks: self
                .disks
                .iter()
                .map(|(&v, d)| (v, d.reversed()))
                .collect(),
        }
    }
}
