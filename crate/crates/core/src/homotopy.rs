//! Deformation of paths and cycles by surface-cell moves.
//!
//! A move replaces the arc a path shares with a cell by the rest of that
//! cell ([`xor_sum`]). Searches only generate such moves; externally supplied
//! certificates may use any gradual variation step and are re-checked from
//! scratch.
//!
//! Search verdicts are budgeted. A search that runs out of budget reports
//! [`Verdict::Indeterminate`]. A refutation always comes with a witness: the
//! cycle's edge set is not a sum of cell boundaries over GF(2), and since
//! every move adds one cell boundary, no sequence of moves can contract it.

use std::collections::{BTreeMap, BTreeSet, HashSet, VecDeque};
use std::fmt;

use thiserror::Error;

use crate::classify::{side_of, ClassifyError, Side, SurfaceView};
use crate::complex::{CellId, SurfaceRegion};
use crate::graph::{enumerate_simple_cycles, Edge, Graph, Vertex, VertexCycle, VertexPath, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomotopyError {
    #[error("cell move not applicable: {0}")]
    StepInvalid(String),
    #[error("cannot decide sides at {0}: no disk or fan around it")]
    UnsupportedLocus(String),
    #[error("region is not orientable, sides are undefined")]
    NonOrientable,
    #[error("point {0} is not on the cycle")]
    PointNotOnCycle(String),
    #[error("vertex {0} is outside the region")]
    OutsideRegion(String),
    #[error(transparent)]
    Classify(#[from] ClassifyError),
}

/// Symmetric difference of two edge lists.
pub fn xor_edges(a: &[Edge], b: &[Edge]) -> BTreeSet<Edge> {
    let a: BTreeSet<Edge> = a.iter().copied().collect();
    let b: BTreeSet<Edge> = b.iter().copied().collect();
    a.symmetric_difference(&b).copied().collect()
}

/// Replaces the arc `path` shares with `cell` by the complementary arc of the
/// cell. The shared vertices must form one contiguous arc with at least one
/// edge. Open paths keep their endpoints; cycles keep their first vertex
/// when it survives.
pub fn xor_sum(path: &VertexPath, cell: &VertexCycle) -> Result<VertexPath, HomotopyError> {
    let vs = path.vertices();
    let n = vs.len();
    let hits: Vec<usize> = (0..n).filter(|&i| cell.contains(vs[i])).collect();
    let k = hits.len();
    if k < 2 {
        return Err(HomotopyError::StepInvalid("path shares no edge with the cell".into()));
    }
    let start = if path.is_closed() {
        if k == n {
            return Err(HomotopyError::StepInvalid("cycle coincides with the cell".into()));
        }
        let s = (0..n)
            .find(|&i| cell.contains(vs[i]) && !cell.contains(vs[(i + n - 1) % n]))
            .expect("some shared vertex follows an unshared one");
        if (0..k).any(|j| !cell.contains(vs[(s + j) % n])) {
            return Err(HomotopyError::StepInvalid("shared vertices are not contiguous".into()));
        }
        s
    } else {
        if hits[k - 1] - hits[0] != k - 1 {
            return Err(HomotopyError::StepInvalid("shared vertices are not contiguous".into()));
        }
        hits[0]
    };
    let arc: Vec<Vertex> = (0..k).map(|j| vs[(start + j) % n]).collect();
    if arc.windows(2).any(|w| cell.traverses(w[0], w[1]).is_none()) {
        return Err(HomotopyError::StepInvalid("shared arc does not run along the cell".into()));
    }
    let (a, b) = (arc[0], arc[k - 1]);
    let t = cell.travel();
    let m = t.len();
    let forward = cell.traverses(arc[0], arc[1]) == Some(true);
    let step = if forward { m - 1 } else { 1 };
    let mut i = (t.iter().position(|&v| v == a).expect("a on cell") + step) % m;
    let mut detour = Vec::new();
    while t[i] != b {
        detour.push(t[i]);
        i = (i + step) % m;
    }

    let mut out = Vec::with_capacity(n - k + detour.len() + 2);
    if path.is_closed() {
        out.push(a);
        out.extend_from_slice(&detour);
        out.push(b);
        out.extend((start + k..start + n).map(|j| vs[j % n]));
        if out.len() < 3 {
            return Err(HomotopyError::StepInvalid("result is too short to be a cycle".into()));
        }
        let anchor = if out.contains(&vs[0]) { vs[0] } else { a };
        let at = out.iter().position(|&v| v == anchor).expect("anchor kept");
        out.rotate_left(at);
    } else {
        out.extend_from_slice(&vs[..start]);
        out.push(a);
        out.extend_from_slice(&detour);
        out.push(b);
        out.extend_from_slice(&vs[start + k..]);
    }
    Ok(VertexPath::from_raw(out, path.is_closed()))
}

/// Why a vertex or edge of one path is accounted for by the other.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Witness {
    InTarget,
    Cell(CellId),
    EndEdge,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct DirectionWitness {
    pub vertices: Vec<(Vertex, Witness)>,
    pub edges: Vec<(Edge, Witness)>,
}

impl DirectionWitness {
    pub fn cells(&self) -> BTreeSet<CellId> {
        self.vertices
            .iter()
            .map(|&(_, w)| w)
            .chain(self.edges.iter().map(|&(_, w)| w))
            .filter_map(|w| match w {
                Witness::Cell(id) => Some(id),
                _ => None,
            })
            .collect()
    }
}

/// Witnesses for a gradual variation, in both directions.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct GradualStep {
    pub forward: DirectionWitness,
    pub backward: DirectionWitness,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GvFailure {
    /// Corresponding endpoints are more than one edge apart.
    Endpoints,
    OutsideRegion(Vertex),
    /// A vertex not on the other path has no cell carrying it over.
    Vertex { vertex: Vertex, backward: bool },
    /// An edge not on the other path has no cell carrying it over.
    Edge { edge: Edge, backward: bool },
}

impl GvFailure {
    pub fn describe(&self, g: &Graph) -> String {
        let dir = |b: bool| if b { "target" } else { "source" };
        match *self {
            GvFailure::Endpoints => "endpoints are more than one edge apart".into(),
            GvFailure::OutsideRegion(v) => format!("{} is outside the region", g.name(v)),
            GvFailure::Vertex { vertex, backward } => format!(
                "gradual variation fails: {} vertex {} has no cell meeting the other path",
                dir(backward),
                g.name(vertex)
            ),
            GvFailure::Edge { edge, backward } => format!(
                "gradual variation fails: {} edge {}-{} has no cell with a new edge",
                dir(backward),
                g.name(edge.lo()),
                g.name(edge.hi())
            ),
        }
    }
}

fn non_end_vertices(p: &VertexPath) -> &[Vertex] {
    let vs = p.vertices();
    if p.is_closed() {
        vs
    } else if vs.len() <= 2 {
        &[]
    } else {
        &vs[1..vs.len() - 1]
    }
}

fn one_direction(
    region: &SurfaceRegion<'_>,
    cells: &[CellId],
    c: &VertexPath,
    c2: &VertexPath,
    backward: bool,
) -> Result<DirectionWitness, GvFailure> {
    let cx = region.complex();
    let mut w = DirectionWitness::default();
    let target = c2.vertex_set();
    for &p in non_end_vertices(c) {
        let witness = if target.contains(&p) {
            Witness::InTarget
        } else {
            cells
                .iter()
                .copied()
                .find(|&id| {
                    let cell = cx.cell(id);
                    cell.contains(p) && cell.travel().iter().any(|v| target.contains(v))
                })
                .map(Witness::Cell)
                .ok_or(GvFailure::Vertex { vertex: p, backward })?
        };
        w.vertices.push((p, witness));
    }
    if c2.is_point() {
        return Ok(w);
    }
    let own: BTreeSet<Edge> = c.edges().into_iter().collect();
    let theirs: BTreeSet<Edge> = c2.edges().into_iter().collect();
    let fresh: BTreeSet<Edge> = theirs.difference(&own).copied().collect();
    let edges = c.edges();
    let last = edges.len().saturating_sub(1);
    for (i, &e) in edges.iter().enumerate() {
        let witness = if !c.is_closed() && (i == 0 || i == last) {
            Witness::EndEdge
        } else if theirs.contains(&e) {
            Witness::InTarget
        } else {
            cells
                .iter()
                .copied()
                .find(|&id| {
                    let cell = cx.cell(id);
                    cell.traverses(e.lo(), e.hi()).is_some()
                        && cell.edges().iter().any(|f| fresh.contains(f))
                })
                .map(Witness::Cell)
                .ok_or(GvFailure::Edge { edge: e, backward })?
        };
        w.edges.push((e, witness));
    }
    Ok(w)
}

/// Checks that `c` and `c2` are gradual variations of each other within
/// `region`. Closed paths have no ends; a single point has no edges.
pub fn is_gradual_variation(
    region: &SurfaceRegion<'_>,
    c: &VertexPath,
    c2: &VertexPath,
) -> Result<GradualStep, GvFailure> {
    if let Some(&v) = c
        .vertices()
        .iter()
        .chain(c2.vertices())
        .find(|&&v| !region.contains(v))
    {
        return Err(GvFailure::OutsideRegion(v));
    }
    let g = region.graph();
    let open = |p: &VertexPath| !p.is_closed() || p.is_point();
    if open(c)
        && open(c2)
        && !(g.within_one(c.first(), c2.first()) && g.within_one(c.last(), c2.last()))
    {
        return Err(GvFailure::Endpoints);
    }
    let union: VertexSet = c.vertex_set().union(&c2.vertex_set()).copied().collect();
    let cx = region.complex();
    let cells: Vec<CellId> = region
        .cells()
        .filter(|&id| cx.cell(id).travel().iter().all(|v| union.contains(v)))
        .collect();
    Ok(GradualStep {
        forward: one_direction(region, &cells, c, c2, false)?,
        backward: one_direction(region, &cells, c2, c, true)?,
    })
}

/// A maximal arc shared by two paths and the sides their flanks leave on.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossLocus {
    pub arc: Vec<Vertex>,
    /// Side of the second path's incoming flank relative to the first path;
    /// `None` when a flank is missing because the arc reaches an endpoint.
    pub entry: Option<Side>,
    pub exit: Option<Side>,
    pub crosses: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CrossReport {
    pub loci: Vec<CrossLocus>,
}

impl CrossReport {
    pub fn crosses(&self) -> bool {
        self.loci.iter().any(|l| l.crosses)
    }
}

/// Whether `p` crosses over `c`: at some maximal shared arc, `p` arrives on
/// one side of `c` and leaves on the other. Sides at each end of the arc
/// are read off that end's neighbourhood in the view's orientation.
pub fn crosses_over(
    view: &SurfaceView<'_>,
    c: &VertexPath,
    p: &VertexPath,
) -> Result<CrossReport, HomotopyError> {
    if !view.atlas().is_consistent() {
        return Err(HomotopyError::NonOrientable);
    }
    let g = view.graph();
    let cv = c.vertices();
    let cn = cv.len();
    let cpos: BTreeMap<Vertex, usize> = cv.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let c_step = |i: usize, forward: bool| -> Option<usize> {
        match (forward, c.is_closed() && cn >= 3) {
            (true, true) => Some((i + 1) % cn),
            (false, true) => Some((i + cn - 1) % cn),
            (true, false) => (i + 1 < cn).then_some(i + 1),
            (false, false) => i.checked_sub(1),
        }
    };
    let linked = |a: Vertex, b: Vertex, forward: bool| -> bool {
        match (cpos.get(&a), cpos.get(&b)) {
            (Some(&i), Some(&j)) => c_step(i, forward) == Some(j),
            _ => false,
        }
    };

    let mut pv: Vec<Vertex> = p.vertices().to_vec();
    let np = pv.len();
    let p_closed = p.is_closed() && np >= 3;
    if p_closed {
        let breaks = (0..np).find(|&i| {
            let prev = pv[(i + np - 1) % np];
            !(linked(prev, pv[i], true) || linked(prev, pv[i], false))
        });
        match breaks {
            Some(i) => pv.rotate_left(i),
            // p runs entirely along c
            None => return Ok(CrossReport::default()),
        }
    }

    let mut report = CrossReport::default();
    let mut i = 0;
    while i < np {
        if !cpos.contains_key(&pv[i]) {
            i += 1;
            continue;
        }
        let dir = if i + 1 < np && linked(pv[i], pv[i + 1], true) {
            Some(true)
        } else if i + 1 < np && linked(pv[i], pv[i + 1], false) {
            Some(false)
        } else {
            None
        };
        let mut j = i;
        if let Some(d) = dir {
            while j + 1 < np && linked(pv[j], pv[j + 1], d) {
                j += 1;
            }
        }
        let arc: Vec<Vertex> = pv[i..=j].to_vec();
        let forward = dir.unwrap_or(true);
        let u = if i > 0 { Some(pv[i - 1]) } else if p_closed { Some(pv[np - 1]) } else { None };
        let v = if j + 1 < np { Some(pv[j + 1]) } else if p_closed { Some(pv[0]) } else { None };
        let c_in = c_step(cpos[&arc[0]], !forward).map(|k| cv[k]);
        let c_out = c_step(cpos[&arc[arc.len() - 1]], forward).map(|k| cv[k]);
        let mut locus = CrossLocus {
            arc: arc.clone(),
            entry: None,
            exit: None,
            crosses: false,
        };
        if let (Some(u), Some(v), Some(c_in), Some(c_out)) = (u, v, c_in, c_out) {
            let x0 = arc[0];
            let xm = arc[arc.len() - 1];
            let after_x0 = if arc.len() > 1 { arc[1] } else { c_out };
            let before_xm = if arc.len() > 1 { arc[arc.len() - 2] } else { c_in };
            let side = |x: Vertex, through: (Vertex, Vertex), probe: Vertex| {
                let disk = view
                    .disk(x)
                    .ok_or_else(|| HomotopyError::UnsupportedLocus(g.name(x).to_string()))?;
                side_of(g, disk, through, probe)
                    .map_err(|_| HomotopyError::UnsupportedLocus(g.name(x).to_string()))
            };
            let entry = side(x0, (c_in, after_x0), u)?;
            let exit = side(xm, (before_xm, c_out), v)?;
            locus.crosses = entry != Side::On && exit != Side::On && entry != exit;
            locus.entry = Some(entry);
            locus.exit = Some(exit);
        }
        report.loci.push(locus);
        i = j + 1;
    }
    Ok(report)
}

/// Gradual variation without cross-over, with advisory notes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SideGradualVerdict {
    pub step: Result<GradualStep, GvFailure>,
    pub crossing: Option<CrossReport>,
    pub notes: Vec<String>,
}

impl SideGradualVerdict {
    pub fn holds(&self) -> bool {
        self.step.is_ok() && self.crossing.as_ref().is_some_and(|c| !c.crosses())
    }
}

pub fn is_side_gradual_variation(
    view: &SurfaceView<'_>,
    c: &VertexPath,
    c2: &VertexPath,
) -> Result<SideGradualVerdict, HomotopyError> {
    let step = is_gradual_variation(view.region(), c, c2);
    let mut verdict = SideGradualVerdict {
        step,
        crossing: None,
        notes: Vec::new(),
    };
    let Ok(step) = &verdict.step else {
        return Ok(verdict);
    };
    verdict.crossing = Some(crosses_over(view, c, c2)?);
    if c.is_closed() {
        let cx = view.complex();
        let darts: BTreeSet<(Vertex, Vertex)> = c.darts().into_iter().collect();
        let mut senses = BTreeSet::new();
        for id in step.forward.cells() {
            for (a, b) in view.atlas().oriented(cx, id).darts() {
                if darts.contains(&(a, b)) {
                    senses.insert(true);
                } else if darts.contains(&(b, a)) {
                    senses.insert(false);
                }
            }
        }
        if senses.len() > 1 {
            verdict
                .notes
                .push("witness cells meet the cycle with both orientations".into());
        }
    }
    Ok(verdict)
}

/// Search limits. Step counts include the final cell-to-point step.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_cycle_len: usize,
    pub max_steps: usize,
    pub max_states: usize,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_cycle_len: 8,
            max_steps: 12,
            max_states: 50_000,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Verdict {
    Verified,
    Indeterminate,
    Refuted,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Verified => "verified",
            Verdict::Indeterminate => "indeterminate",
            Verdict::Refuted => "refuted",
        })
    }
}

fn combine(vs: impl IntoIterator<Item = Verdict>) -> Verdict {
    vs.into_iter().max().unwrap_or(Verdict::Verified)
}

/// A sequence of paths, each a side-gradual variation of the previous one.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomotopyCertificate {
    pub sequence: Vec<VertexPath>,
    /// The cell moved across at each step, when the step is a cell move.
    pub moves: Vec<Option<CellId>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("step {index}: {reason}")]
pub struct CertificateError {
    pub index: usize,
    pub reason: String,
}

impl HomotopyCertificate {
    pub fn steps(&self) -> usize {
        self.sequence.len().saturating_sub(1)
    }

    /// Re-checks every step from scratch.
    pub fn verify(&self, view: &SurfaceView<'_>) -> Result<(), CertificateError> {
        let g = view.graph();
        if self.moves.len() != self.steps() {
            return Err(CertificateError {
                index: 0,
                reason: "move list does not match the sequence".into(),
            });
        }
        for (i, pair) in self.sequence.windows(2).enumerate() {
            let fail = |reason: String| CertificateError { index: i + 1, reason };
            if let Some(id) = self.moves[i] {
                let moved = xor_sum(&pair[0], view.complex().cell(id))
                    .map_err(|e| fail(e.to_string()))?;
                if !same_path(&moved, &pair[1]) {
                    return Err(fail(format!("cell {id} does not produce the next path")));
                }
            }
            let verdict = is_side_gradual_variation(view, &pair[0], &pair[1])
                .map_err(|e| fail(e.to_string()))?;
            if let Err(f) = &verdict.step {
                return Err(fail(f.describe(g)));
            }
            if !verdict.holds() {
                return Err(fail("the paths cross over".into()));
            }
        }
        Ok(())
    }
}

fn same_path(a: &VertexPath, b: &VertexPath) -> bool {
    match (a.to_cycle(), b.to_cycle()) {
        (Some(x), Some(y)) => x == y,
        _ => a == b,
    }
}

/// A contraction of a cycle onto one of its points.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContractionCertificate {
    pub point: Vertex,
    pub certificate: HomotopyCertificate,
}

impl ContractionCertificate {
    /// Re-checks the steps, that the point stays on every cycle, that the
    /// sequence ends at the point, and that abandoned vertices never return.
    pub fn verify(&self, view: &SurfaceView<'_>) -> Result<(), CertificateError> {
        self.certificate.verify(view)?;
        let seq = &self.certificate.sequence;
        let fail = |index: usize, reason: &str| CertificateError {
            index,
            reason: reason.to_string(),
        };
        match seq.last() {
            Some(last) if last.is_point() && last.first() == self.point => {}
            _ => return Err(fail(seq.len(), "sequence does not end at the point")),
        }
        let mut abandoned = VertexSet::new();
        for (i, path) in seq.iter().enumerate() {
            if !path.contains(self.point) {
                return Err(fail(i, "point left the cycle"));
            }
            if path.vertices().iter().any(|v| abandoned.contains(v)) {
                return Err(fail(i, "an abandoned vertex returned"));
            }
            if i + 1 < seq.len() {
                let next = seq[i + 1].vertex_set();
                abandoned.extend(path.vertices().iter().filter(|v| !next.contains(v)));
            }
        }
        Ok(())
    }
}

/// GF(2) span of the in-region cell boundaries.
#[derive(Debug, Clone)]
pub struct CycleSpace {
    index: BTreeMap<Edge, usize>,
    rows: Vec<(usize, Vec<u64>)>,
}

impl CycleSpace {
    pub fn new(region: &SurfaceRegion<'_>) -> Self {
        let index: BTreeMap<Edge, usize> = region
            .edges()
            .into_iter()
            .enumerate()
            .map(|(i, e)| (e, i))
            .collect();
        let mut space = CycleSpace {
            index,
            rows: Vec::new(),
        };
        let cx = region.complex();
        for id in region.cells() {
            if let Some(mut bits) = space.bits(cx.cell(id).edges()) {
                space.reduce(&mut bits);
                if let Some(pivot) = lowest_bit(&bits) {
                    space.rows.push((pivot, bits));
                }
            }
        }
        space
    }

    fn bits(&self, edges: impl IntoIterator<Item = Edge>) -> Option<Vec<u64>> {
        let mut bits = vec![0u64; self.index.len().div_ceil(64)];
        for e in edges {
            let i = *self.index.get(&e)?;
            bits[i / 64] ^= 1 << (i % 64);
        }
        Some(bits)
    }

    fn reduce(&self, bits: &mut [u64]) {
        for (pivot, row) in &self.rows {
            if bits[pivot / 64] >> (pivot % 64) & 1 == 1 {
                for (b, r) in bits.iter_mut().zip(row) {
                    *b ^= r;
                }
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Whether the edge set is a sum of cell boundaries.
    pub fn bounds(&self, edges: impl IntoIterator<Item = Edge>) -> bool {
        match self.bits(edges) {
            Some(mut bits) => {
                self.reduce(&mut bits);
                bits.iter().all(|&w| w == 0)
            }
            None => false,
        }
    }
}

fn lowest_bit(bits: &[u64]) -> Option<usize> {
    bits.iter()
        .enumerate()
        .find(|(_, &w)| w != 0)
        .map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

/// Result of a contraction search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ContractionOutcome {
    Contracted(ContractionCertificate),
    /// The cycle is not a sum of cell boundaries.
    Refuted,
    Indeterminate { states: usize },
}

impl ContractionOutcome {
    pub fn verdict(&self) -> Verdict {
        match self {
            ContractionOutcome::Contracted(_) => Verdict::Verified,
            ContractionOutcome::Refuted => Verdict::Refuted,
            ContractionOutcome::Indeterminate { .. } => Verdict::Indeterminate,
        }
    }
}

fn check_in_region(view: &SurfaceView<'_>, vs: &[Vertex]) -> Result<(), HomotopyError> {
    match vs.iter().find(|&&v| !view.region().contains(v)) {
        Some(&v) => Err(HomotopyError::OutsideRegion(view.graph().name(v).to_string())),
        None => Ok(()),
    }
}

fn path_key(p: &VertexPath) -> Vec<Vertex> {
    match p.to_cycle() {
        Some(c) => c.canonical(),
        None => p.vertices().to_vec(),
    }
}

struct SearchNode {
    path: VertexPath,
    abandoned: VertexSet,
    parent: usize,
    cell: Option<CellId>,
    depth: usize,
}

fn unwind(nodes: &[SearchNode], mut at: usize) -> HomotopyCertificate {
    let mut sequence = Vec::new();
    let mut moves = Vec::new();
    loop {
        sequence.push(nodes[at].path.clone());
        if nodes[at].parent == usize::MAX {
            break;
        }
        moves.push(nodes[at].cell);
        at = nodes[at].parent;
    }
    sequence.reverse();
    moves.reverse();
    HomotopyCertificate { sequence, moves }
}

/// Breadth-first search over single-cell moves. `keep` pins a vertex that
/// every path must contain and turns on the no-return rule for abandoned
/// vertices. Returns the index of the goal node, or the number of states
/// explored.
fn search(
    view: &SurfaceView<'_>,
    start: VertexPath,
    budget: SearchBudget,
    keep: Option<Vertex>,
    final_step: usize,
    goal: impl Fn(&VertexPath) -> bool,
) -> Result<(Vec<SearchNode>, Result<usize, usize>), HomotopyError> {
    let cx = view.complex();
    let cells: Vec<CellId> = view.region().cells().collect();
    let mut nodes = vec![SearchNode {
        path: start,
        abandoned: VertexSet::new(),
        parent: usize::MAX,
        cell: None,
        depth: 0,
    }];
    let mut seen: HashSet<(Vec<Vertex>, Vec<Vertex>)> = HashSet::new();
    seen.insert((path_key(&nodes[0].path), Vec::new()));
    let mut queue = VecDeque::from([0usize]);
    while let Some(at) = queue.pop_front() {
        if goal(&nodes[at].path) && nodes[at].depth + final_step <= budget.max_steps {
            return Ok((nodes, Ok(at)));
        }
        if nodes[at].depth + 1 + final_step > budget.max_steps {
            continue;
        }
        for &id in &cells {
            let cur = &nodes[at].path;
            let Ok(next) = xor_sum(cur, cx.cell(id)) else {
                continue;
            };
            if next.len() > budget.max_cycle_len
                || next.vertices().iter().any(|&v| !view.region().contains(v))
            {
                continue;
            }
            let mut abandoned = nodes[at].abandoned.clone();
            if let Some(p) = keep {
                if !next.contains(p) || next.vertices().iter().any(|v| abandoned.contains(v)) {
                    continue;
                }
                let kept = next.vertex_set();
                abandoned.extend(cur.vertices().iter().filter(|v| !kept.contains(v)));
            }
            let key = (path_key(&next), abandoned.iter().copied().collect());
            if seen.contains(&key) {
                continue;
            }
            if !is_side_gradual_variation(view, cur, &next)?.holds() {
                continue;
            }
            seen.insert(key);
            let depth = nodes[at].depth + 1;
            nodes.push(SearchNode {
                path: next,
                abandoned,
                parent: at,
                cell: Some(id),
                depth,
            });
            queue.push_back(nodes.len() - 1);
            if nodes.len() >= budget.max_states {
                let n = nodes.len();
                return Ok((nodes, Err(n)));
            }
        }
    }
    let n = nodes.len();
    Ok((nodes, Err(n)))
}

/// Searches for a contraction of `cycle` onto `point` by single-cell moves,
/// ending with a cell-to-point step.
pub fn contract_to_point(
    view: &SurfaceView<'_>,
    space: &CycleSpace,
    cycle: &VertexCycle,
    point: Vertex,
    budget: SearchBudget,
) -> Result<ContractionOutcome, HomotopyError> {
    let g = view.graph();
    check_in_region(view, cycle.travel())?;
    if !cycle.contains(point) {
        return Err(HomotopyError::PointNotOnCycle(g.name(point).to_string()));
    }
    if !space.bounds(cycle.edges()) {
        return Ok(ContractionOutcome::Refuted);
    }
    let start = cycle.as_path().rotated_to(point).expect("point on cycle");
    let cx = view.complex();
    let is_cell = |p: &VertexPath| {
        p.is_closed()
            && cx
                .cell_with_vertices(&p.vertex_set())
                .is_some_and(|id| view.region().has_cell(id))
    };
    let (nodes, found) = search(view, start, budget, Some(point), 1, is_cell)?;
    match found {
        Ok(at) => {
            let mut certificate = unwind(&nodes, at);
            let last = certificate.sequence.last().expect("non-empty").clone();
            let end = VertexPath::point(point);
            if !is_side_gradual_variation(view, &last, &end)?.holds() {
                return Ok(ContractionOutcome::Indeterminate { states: nodes.len() });
            }
            certificate.sequence.push(end);
            certificate.moves.push(None);
            Ok(ContractionOutcome::Contracted(ContractionCertificate {
                point,
                certificate,
            }))
        }
        Err(states) => Ok(ContractionOutcome::Indeterminate { states }),
    }
}

/// Result of a search between two paths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HomotopyOutcome {
    Found(HomotopyCertificate),
    /// The two paths do not differ by a sum of cell boundaries.
    Refuted,
    Indeterminate { states: usize },
}

impl HomotopyOutcome {
    pub fn verdict(&self) -> Verdict {
        match self {
            HomotopyOutcome::Found(_) => Verdict::Verified,
            HomotopyOutcome::Refuted => Verdict::Refuted,
            HomotopyOutcome::Indeterminate { .. } => Verdict::Indeterminate,
        }
    }
}

/// Searches for a side-gradual deformation from `from` to `to`. A direct
/// side-gradual variation is accepted as a one-step certificate; otherwise
/// single-cell moves are searched, which keeps endpoints fixed.
pub fn find_homotopy(
    view: &SurfaceView<'_>,
    space: &CycleSpace,
    from: &VertexPath,
    to: &VertexPath,
    budget: SearchBudget,
) -> Result<HomotopyOutcome, HomotopyError> {
    check_in_region(view, from.vertices())?;
    check_in_region(view, to.vertices())?;
    if same_path(from, to) {
        return Ok(HomotopyOutcome::Found(HomotopyCertificate {
            sequence: vec![from.clone()],
            moves: vec![],
        }));
    }
    if is_side_gradual_variation(view, from, to)?.holds() {
        return Ok(HomotopyOutcome::Found(HomotopyCertificate {
            sequence: vec![from.clone(), to.clone()],
            moves: vec![None],
        }));
    }
    let movable = from.is_closed() == to.is_closed()
        && (from.is_closed() || (from.first() == to.first() && from.last() == to.last()));
    if !movable {
        return Ok(HomotopyOutcome::Indeterminate { states: 0 });
    }
    if !space.bounds(xor_edges(&from.edges(), &to.edges())) {
        return Ok(HomotopyOutcome::Refuted);
    }
    let target = path_key(to);
    let (nodes, found) = search(view, from.clone(), budget, None, 0, |p| path_key(p) == target)?;
    Ok(match found {
        Ok(at) => HomotopyOutcome::Found(unwind(&nodes, at)),
        Err(states) => HomotopyOutcome::Indeterminate { states },
    })
}

/// The arc of `cycle` from `p` to `q` in travel order, and the arc from `p`
/// to `q` the other way round.
pub fn split_arcs(cycle: &VertexCycle, p: Vertex, q: Vertex) -> Option<(VertexPath, VertexPath)> {
    let t = cycle.travel();
    let n = t.len();
    let i = t.iter().position(|&v| v == p)?;
    let j = t.iter().position(|&v| v == q)?;
    if i == j {
        return None;
    }
    let forward: Vec<Vertex> = (0..=(j + n - i) % n).map(|k| t[(i + k) % n]).collect();
    let backward: Vec<Vertex> = (0..=(i + n - j) % n).map(|k| t[(i + n - k) % n]).collect();
    Some((
        VertexPath::from_raw(forward, false),
        VertexPath::from_raw(backward, false),
    ))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Variant {
    /// Every cycle contracts onto each of its points.
    B,
    /// For every pair of points the two arcs deform into each other.
    C,
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Variant::B => "b",
            Variant::C => "c",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InstanceOutcome {
    pub point: Vertex,
    /// Second point for arc instances.
    pub partner: Option<Vertex>,
    pub verdict: Verdict,
    pub steps: Option<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CycleVerdict {
    pub cycle: VertexCycle,
    /// The cycle is not a sum of cell boundaries.
    pub obstructed: bool,
    pub verdict: Verdict,
    pub instances: Vec<InstanceOutcome>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SimplyConnectedReport {
    pub variant: Variant,
    pub budget: SearchBudget,
    pub cycles: Vec<CycleVerdict>,
    pub verdict: Verdict,
}

impl SimplyConnectedReport {
    /// Cycles that were not verified.
    pub fn flagged(&self) -> impl Iterator<Item = &CycleVerdict> {
        self.cycles.iter().filter(|c| c.verdict != Verdict::Verified)
    }
}

fn region_cycles(view: &SurfaceView<'_>, budget: SearchBudget) -> Vec<VertexCycle> {
    enumerate_simple_cycles(view.graph(), Some(view.region().vertices()), budget.max_cycle_len)
}

/// Every simple cycle up to the budget's length, contracted onto each of its
/// points.
pub fn check_simply_connected_b(
    view: &SurfaceView<'_>,
    budget: SearchBudget,
) -> Result<SimplyConnectedReport, HomotopyError> {
    let space = CycleSpace::new(view.region());
    let mut cycles = Vec::new();
    for cycle in region_cycles(view, budget) {
        let obstructed = !space.bounds(cycle.edges());
        let mut instances = Vec::new();
        for &p in cycle.travel() {
            let outcome = if obstructed {
                ContractionOutcome::Refuted
            } else {
                contract_to_point(view, &space, &cycle, p, budget)?
            };
            let steps = match &outcome {
                ContractionOutcome::Contracted(c) => Some(c.certificate.steps()),
                _ => None,
            };
            instances.push(InstanceOutcome {
                point: p,
                partner: None,
                verdict: outcome.verdict(),
                steps,
            });
        }
        let verdict = combine(instances.iter().map(|i| i.verdict));
        cycles.push(CycleVerdict {
            cycle,
            obstructed,
            verdict,
            instances,
        });
    }
    let verdict = combine(cycles.iter().map(|c| c.verdict));
    Ok(SimplyConnectedReport {
        variant: Variant::B,
        budget,
        cycles,
        verdict,
    })
}

/// Every simple cycle up to the budget's length, with each pair of its
/// points: the arc one way round must deform into the arc the other way.
pub fn check_simply_connected_c(
    view: &SurfaceView<'_>,
    budget: SearchBudget,
) -> Result<SimplyConnectedReport, HomotopyError> {
    let space = CycleSpace::new(view.region());
    let mut cycles = Vec::new();
    for cycle in region_cycles(view, budget) {
        let obstructed = !space.bounds(cycle.edges());
        let mut instances = Vec::new();
        let t = cycle.travel().to_vec();
        for (i, &p) in t.iter().enumerate() {
            for &q in &t[i + 1..] {
                let (there, back) = split_arcs(&cycle, p, q).expect("distinct points on cycle");
                let outcome = if obstructed {
                    HomotopyOutcome::Refuted
                } else {
                    find_homotopy(view, &space, &there, &back, budget)?
                };
                let steps = match &outcome {
                    HomotopyOutcome::Found(c) => Some(c.steps()),
                    _ => None,
                };
                instances.push(InstanceOutcome {
                    point: p,
                    partner: Some(q),
                    verdict: outcome.verdict(),
                    steps,
                });
            }
        }
        let verdict = combine(instances.iter().map(|i| i.verdict));
        cycles.push(CycleVerdict {
            cycle,
            obstructed,
            verdict,
            instances,
        });
    }
    let verdict = combine(cycles.iter().map(|c| c.verdict));
    Ok(SimplyConnectedReport {
        variant: Variant::C,
        budget,
        cycles,
        verdict,
    })
}

/// Both checkers on the same cycles; only a verified cycle on one side
/// against a refuted cycle on the other counts as disagreement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrossCheckReport {
    pub b: SimplyConnectedReport,
    pub c: SimplyConnectedReport,
    pub disagreements: Vec<VertexCycle>,
}

pub fn crosscheck_b_c(
    view: &SurfaceView<'_>,
    budget: SearchBudget,
) -> Result<CrossCheckReport, HomotopyError> {
    let b = check_simply_connected_b(view, budget)?;
    let c = check_simply_connected_c(view, budget)?;
    let disagreements = b
        .cycles
        .iter()
        .zip(&c.cycles)
        .filter(|(x, y)| {
            matches!(
                (x.verdict, y.verdict),
                (Verdict::Verified, Verdict::Refuted) | (Verdict::Refuted, Verdict::Verified)
            )
        })
        .map(|(x, _)| x.cycle.clone())
        .collect();
    Ok(CrossCheckReport { b, c, disagreements })
}
