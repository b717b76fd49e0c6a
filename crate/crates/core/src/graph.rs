//! Simple undirected graphs, vertex paths and cycles.
//!
//! Vertex names are opaque strings; internally every vertex is a dense index
//! ([`Vertex`]) assigned in declaration order, and every report maps back to
//! the original names through [`Graph::name`].

use std::cmp::Ordering;
use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};

use thiserror::Error;

/// Dense vertex index into a [`Graph`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Vertex(pub(crate) u32);

impl Vertex {
    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn from_index(index: usize) -> Self {
        Vertex(index as u32)
    }
}

impl fmt::Display for Vertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

/// Undirected edge stored with the smaller endpoint first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge(Vertex, Vertex);

impl Edge {
    pub fn new(a: Vertex, b: Vertex) -> Self {
        if a <= b {
            Edge(a, b)
        } else {
            Edge(b, a)
        }
    }

    pub fn lo(self) -> Vertex {
        self.0
    }

    pub fn hi(self) -> Vertex {
        self.1
    }

    pub fn contains(self, v: Vertex) -> bool {
        self.0 == v || self.1 == v
    }

    /// The endpoint that is not `v`.
    pub fn other(self, v: Vertex) -> Vertex {
        if self.0 == v {
            self.1
        } else {
            self.0
        }
    }
}

pub type VertexSet = BTreeSet<Vertex>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has no vertices")]
    Empty,
    #[error("duplicate vertex `{0}`")]
    DuplicateVertex(String),
    #[error("invalid vertex name `{0}`")]
    InvalidName(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("self-loop at `{0}`: graph must be simple")]
    SelfLoop(String),
    #[error("duplicate edge `{0}`-`{1}`: graph must be simple")]
    DuplicateEdge(String, String),
    #[error("graph is disconnected ({0} components)")]
    Disconnected(usize),
    #[error("not a simple path: {0}")]
    NotAPath(String),
    #[error("not a simple cycle: {0}")]
    NotACycle(String),
}

/// Incremental construction of a [`Graph`].
#[derive(Debug, Default, Clone)]
pub struct GraphBuilder {
    names: Vec<String>,
    lookup: HashMap<String, Vertex>,
    adj: Vec<Vec<Vertex>>,
    edges: BTreeSet<Edge>,
}

impl GraphBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add_vertex(&mut self, name: impl Into<String>) -> Result<Vertex, GraphError> {
        let name = name.into();
        if name.is_empty() || name.contains(|c: char| c.is_whitespace() || c == ',') {
            return Err(GraphError::InvalidName(name));
        }
        if self.lookup.contains_key(&name) {
            return Err(GraphError::DuplicateVertex(name));
        }
        let v = Vertex::from_index(self.names.len());
        self.lookup.insert(name.clone(), v);
        self.names.push(name);
        self.adj.push(Vec::new());
        Ok(v)
    }

    pub fn vertex(&self, name: &str) -> Option<Vertex> {
        self.lookup.get(name).copied()
    }

    pub fn add_edge(&mut self, a: Vertex, b: Vertex) -> Result<(), GraphError> {
        if a == b {
            return Err(GraphError::SelfLoop(self.names[a.index()].clone()));
        }
        if !self.edges.insert(Edge::new(a, b)) {
            return Err(GraphError::DuplicateEdge(
                self.names[a.index()].clone(),
                self.names[b.index()].clone(),
            ));
        }
        self.adj[a.index()].push(b);
        self.adj[b.index()].push(a);
        Ok(())
    }

    pub fn add_edge_by_name(&mut self, a: &str, b: &str) -> Result<(), GraphError> {
        let va = self.vertex(a).ok_or_else(|| GraphError::UnknownVertex(a.to_string()))?;
        let vb = self.vertex(b).ok_or_else(|| GraphError::UnknownVertex(b.to_string()))?;
        self.add_edge(va, vb)
    }

    /// Finishes construction; the ambient graph must be non-empty and connected.
    pub fn build(self) -> Result<Graph, GraphError> {
        let g = self.build_any();
        if g.vertex_count() == 0 {
            return Err(GraphError::Empty);
        }
        let comps = connected_components(&g, &VertexSet::new()).len();
        if comps != 1 {
            return Err(GraphError::Disconnected(comps));
        }
        Ok(g)
    }

    fn build_any(mut self) -> Graph {
        for list in &mut self.adj {
            list.sort_unstable();
        }
        Graph {
            names: self.names,
            lookup: self.lookup,
            adj: self.adj,
            edges: self.edges,
        }
    }
}

/// A simple undirected graph. Immutable once built.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    names: Vec<String>,
    lookup: HashMap<String, Vertex>,
    adj: Vec<Vec<Vertex>>,
    edges: BTreeSet<Edge>,
}

impl Graph {
    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl Iterator<Item = Vertex> + '_ {
        (0..self.names.len()).map(Vertex::from_index)
    }

    pub fn all_vertices(&self) -> VertexSet {
        self.vertices().collect()
    }

    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().copied()
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v.index()]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v.index()].len()
    }

    pub fn adjacent(&self, a: Vertex, b: Vertex) -> bool {
        self.adj[a.index()].binary_search(&b).is_ok()
    }

    /// `d(x,y) <= 1`: equal or adjacent.
    pub fn within_one(&self, a: Vertex, b: Vertex) -> bool {
        a == b || self.adjacent(a, b)
    }

    pub fn has_edge(&self, e: Edge) -> bool {
        self.edges.contains(&e)
    }

    pub fn name(&self, v: Vertex) -> &str {
        &self.names[v.index()]
    }

    pub fn vertex(&self, name: &str) -> Option<Vertex> {
        self.lookup.get(name).copied()
    }

    pub fn resolve(&self, name: &str) -> Result<Vertex, GraphError> {
        self.vertex(name)
            .ok_or_else(|| GraphError::UnknownVertex(name.to_string()))
    }

    pub fn resolve_all<'a>(
        &self,
        names: impl IntoIterator<Item = &'a str>,
    ) -> Result<Vec<Vertex>, GraphError> {
        names.into_iter().map(|n| self.resolve(n)).collect()
    }

    pub fn names_of<'a>(&'a self, vs: impl IntoIterator<Item = &'a Vertex>) -> Vec<&'a str> {
        vs.into_iter().map(|&v| self.name(v)).collect()
    }

    fn check_members(&self, vs: &VertexSet) -> Result<(), GraphError> {
        match vs.iter().find(|v| v.index() >= self.vertex_count()) {
            Some(v) => Err(GraphError::UnknownVertex(v.to_string())),
            None => Ok(()),
        }
    }

    /// Edges of the subgraph induced by `vs`, in ascending order.
    pub fn induced_edges(&self, vs: &VertexSet) -> Vec<Edge> {
        let mut out = Vec::new();
        for &v in vs {
            for &w in self.neighbors(v) {
                if v < w && vs.contains(&w) {
                    out.push(Edge::new(v, w));
                }
            }
        }
        out
    }

    /// The unique subgraph `G(V')` on `vs`. Vertices keep their names and
    /// relative order; the result may be disconnected.
    pub fn induced_subgraph(&self, vs: &VertexSet) -> Result<Graph, GraphError> {
        self.check_members(vs)?;
        let mut b = GraphBuilder::new();
        let mut map = HashMap::new();
        for &v in vs {
            map.insert(v, b.add_vertex(self.name(v))?);
        }
        for e in self.induced_edges(vs) {
            b.add_edge(map[&e.lo()], map[&e.hi()])?;
        }
        Ok(b.build_any())
    }
}

/// Components of `g` after deleting `removed`, each sorted, ordered by their
/// smallest member.
pub fn connected_components(g: &Graph, removed: &VertexSet) -> Vec<Vec<Vertex>> {
    let n = g.vertex_count();
    let mut seen = vec![false; n];
    for v in removed {
        if v.index() < n {
            seen[v.index()] = true;
        }
    }
    let mut comps = Vec::new();
    for start in g.vertices() {
        if seen[start.index()] {
            continue;
        }
        seen[start.index()] = true;
        let mut comp = vec![start];
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if !seen[w.index()] {
                    seen[w.index()] = true;
                    comp.push(w);
                    queue.push_back(w);
                }
            }
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps
}

/// An ordered simple vertex sequence; `closed` adds the edge last→first.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexPath {
    vertices: Vec<Vertex>,
    closed: bool,
}

impl VertexPath {
    pub fn new(g: &Graph, vertices: Vec<Vertex>, closed: bool) -> Result<Self, GraphError> {
        let err = |msg: String| {
            if closed {
                GraphError::NotACycle(msg)
            } else {
                GraphError::NotAPath(msg)
            }
        };
        if vertices.is_empty() {
            return Err(err("empty vertex sequence".into()));
        }
        if let Some(v) = vertices.iter().find(|v| v.index() >= g.vertex_count()) {
            return Err(GraphError::UnknownVertex(v.to_string()));
        }
        let mut seen = VertexSet::new();
        for &v in &vertices {
            if !seen.insert(v) {
                return Err(err(format!("vertex `{}` repeats", g.name(v))));
            }
        }
        for w in vertices.windows(2) {
            if !g.adjacent(w[0], w[1]) {
                return Err(err(format!(
                    "`{}` and `{}` are not adjacent",
                    g.name(w[0]),
                    g.name(w[1])
                )));
            }
        }
        if closed {
            if vertices.len() < 3 {
                return Err(err("a cycle needs at least three vertices".into()));
            }
            let (first, last) = (vertices[0], vertices[vertices.len() - 1]);
            if !g.adjacent(first, last) {
                return Err(err(format!(
                    "closing pair `{}`,`{}` is not an edge",
                    g.name(last),
                    g.name(first)
                )));
            }
        }
        Ok(VertexPath { vertices, closed })
    }

    pub fn from_names(g: &Graph, names: &[&str], closed: bool) -> Result<Self, GraphError> {
        let vs = g.resolve_all(names.iter().copied())?;
        Self::new(g, vs, closed)
    }

    /// A path consisting of a single vertex.
    pub fn point(v: Vertex) -> Self {
        VertexPath {
            vertices: vec![v],
            closed: false,
        }
    }

    pub(crate) fn from_raw(vertices: Vec<Vertex>, closed: bool) -> Self {
        VertexPath { vertices, closed }
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn is_closed(&self) -> bool {
        self.closed
    }

    pub fn is_point(&self) -> bool {
        self.vertices.len() == 1
    }

    pub fn first(&self) -> Vertex {
        self.vertices[0]
    }

    pub fn last(&self) -> Vertex {
        self.vertices[self.vertices.len() - 1]
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.vertices.contains(&v)
    }

    pub fn position(&self, v: Vertex) -> Option<usize> {
        self.vertices.iter().position(|&w| w == v)
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices.iter().copied().collect()
    }

    /// Edges in travel order, including the closing edge of a closed path.
    pub fn edges(&self) -> Vec<Edge> {
        let mut out: Vec<Edge> = self
            .vertices
            .windows(2)
            .map(|w| Edge::new(w[0], w[1]))
            .collect();
        if self.closed {
            out.push(Edge::new(self.last(), self.first()));
        }
        out
    }

    /// Directed edges in travel order.
    pub fn darts(&self) -> Vec<(Vertex, Vertex)> {
        let mut out: Vec<_> = self.vertices.windows(2).map(|w| (w[0], w[1])).collect();
        if self.closed {
            out.push((self.last(), self.first()));
        }
        out
    }

    pub fn reversed(&self) -> Self {
        let mut vertices = self.vertices.clone();
        vertices.reverse();
        VertexPath {
            vertices,
            closed: self.closed,
        }
    }

    /// Rotates a closed path so that it starts at `v`.
    pub fn rotated_to(&self, v: Vertex) -> Option<Self> {
        let i = self.position(v)?;
        if !self.closed && i != 0 {
            return None;
        }
        let mut vertices = self.vertices.clone();
        vertices.rotate_left(i);
        Some(VertexPath {
            vertices,
            closed: self.closed,
        })
    }

    pub fn to_cycle(&self) -> Option<VertexCycle> {
        (self.closed && self.len() >= 3).then(|| VertexCycle {
            travel: self.vertices.clone(),
        })
    }

    pub fn display(&self, g: &Graph) -> String {
        g.names_of(&self.vertices).join(",")
    }
}

/// Orientation of a cycle's travel order relative to its canonical form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Orientation {
    Canonical,
    Reversed,
}

/// A simple cycle with a travel direction.
///
/// Equality, ordering and hashing use the canonical form (rotation starting
/// at the smallest vertex, direction chosen so the second element is the
/// smaller neighbour), so two cycles over the same vertices in the same
/// cyclic order compare equal regardless of start or direction.
#[derive(Debug, Clone)]
pub struct VertexCycle {
    travel: Vec<Vertex>,
}

impl VertexCycle {
    pub fn new(g: &Graph, travel: Vec<Vertex>) -> Result<Self, GraphError> {
        let p = VertexPath::new(g, travel, true)?;
        Ok(VertexCycle { travel: p.vertices })
    }

    pub fn from_names(g: &Graph, names: &[&str]) -> Result<Self, GraphError> {
        let vs = g.resolve_all(names.iter().copied())?;
        Self::new(g, vs)
    }

    pub(crate) fn from_raw(travel: Vec<Vertex>) -> Self {
        debug_assert!(travel.len() >= 3);
        VertexCycle { travel }
    }

    /// Vertices in travel order, starting where the cycle was given.
    pub fn travel(&self) -> &[Vertex] {
        &self.travel
    }

    pub fn len(&self) -> usize {
        self.travel.len()
    }

    pub fn is_empty(&self) -> bool {
        self.travel.is_empty()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.travel.contains(&v)
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.travel.iter().copied().collect()
    }

    pub fn canonical(&self) -> Vec<Vertex> {
        let n = self.travel.len();
        let (i, _) = self
            .travel
            .iter()
            .enumerate()
            .min_by_key(|(_, v)| **v)
            .expect("cycle is non-empty");
        let fwd = self.travel[(i + 1) % n];
        let back = self.travel[(i + n - 1) % n];
        if fwd <= back {
            (0..n).map(|k| self.travel[(i + k) % n]).collect()
        } else {
            (0..n).map(|k| self.travel[(i + n - k) % n]).collect()
        }
    }

    pub fn orientation(&self) -> Orientation {
        let n = self.travel.len();
        let (i, _) = self
            .travel
            .iter()
            .enumerate()
            .min_by_key(|(_, v)| **v)
            .expect("cycle is non-empty");
        if self.travel[(i + 1) % n] <= self.travel[(i + n - 1) % n] {
            Orientation::Canonical
        } else {
            Orientation::Reversed
        }
    }

    pub fn reversed(&self) -> Self {
        let mut travel = self.travel.clone();
        travel.reverse();
        VertexCycle { travel }
    }

    pub fn as_path(&self) -> VertexPath {
        VertexPath::from_raw(self.travel.clone(), true)
    }

    pub fn edges(&self) -> Vec<Edge> {
        self.as_path().edges()
    }

    pub fn darts(&self) -> Vec<(Vertex, Vertex)> {
        self.as_path().darts()
    }

    /// Whether travel order runs `a -> b` along an edge of the cycle.
    /// `None` when `{a,b}` is not an edge of the cycle.
    pub fn traverses(&self, a: Vertex, b: Vertex) -> Option<bool> {
        let n = self.travel.len();
        let i = self.travel.iter().position(|&v| v == a)?;
        if self.travel[(i + 1) % n] == b {
            Some(true)
        } else if self.travel[(i + n - 1) % n] == b {
            Some(false)
        } else {
            None
        }
    }

    /// Successor and predecessor of `v` in travel order.
    pub fn around(&self, v: Vertex) -> Option<(Vertex, Vertex)> {
        let n = self.travel.len();
        let i = self.travel.iter().position(|&w| w == v)?;
        Some((self.travel[(i + 1) % n], self.travel[(i + n - 1) % n]))
    }

    pub fn display(&self, g: &Graph) -> String {
        g.names_of(&self.travel).join(",")
    }
}

impl PartialEq for VertexCycle {
    fn eq(&self, other: &Self) -> bool {
        self.len() == other.len() && self.canonical() == other.canonical()
    }
}

impl Eq for VertexCycle {}

impl Hash for VertexCycle {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.canonical().hash(state);
    }
}

impl PartialOrd for VertexCycle {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for VertexCycle {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.canonical().cmp(&other.canonical()))
    }
}

/// True iff the induced subgraph on the cycle's vertices is the cycle itself.
pub fn is_minimal_cycle(g: &Graph, c: &VertexCycle) -> Result<bool, GraphError> {
    VertexPath::new(g, c.travel.clone(), true)?;
    Ok(g.induced_edges(&c.vertex_set()).len() == c.len())
}

/// Default length bound for cycle enumeration: `|V|` on graphs of at most
/// twenty vertices, otherwise the caller must choose one.
pub fn default_cycle_bound(g: &Graph) -> Option<usize> {
    (g.vertex_count() <= 20).then_some(g.vertex_count())
}

/// All chordless cycles of length `<= max_len`, sorted by length then
/// canonical vertex order.
pub fn enumerate_minimal_cycles(g: &Graph, max_len: usize) -> Vec<VertexCycle> {
    CycleSearch::new(g, None, max_len, true).run_all()
}

/// All simple cycles of length `<= max_len` using only vertices in `within`
/// (or all vertices), sorted like [`enumerate_minimal_cycles`].
pub fn enumerate_simple_cycles(
    g: &Graph,
    within: Option<&VertexSet>,
    max_len: usize,
) -> Vec<VertexCycle> {
    CycleSearch::new(g, within, max_len, false).run_all()
}

/// Chordless cycles confined to `within`.
pub fn enumerate_minimal_cycles_within(
    g: &Graph,
    within: &VertexSet,
    max_len: usize,
) -> Vec<VertexCycle> {
    CycleSearch::new(g, Some(within), max_len, true).run_all()
}

/// Length of the shortest cycle, if any.
pub fn girth(g: &Graph) -> Option<usize> {
    let n = g.vertex_count();
    let mut best: Option<usize> = None;
    for s in g.vertices() {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[s.index()] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if dist[w.index()] == usize::MAX {
                    dist[w.index()] = dist[v.index()] + 1;
                    parent[w.index()] = v.index();
                    queue.push_back(w);
                } else if parent[v.index()] != w.index() {
                    let len = dist[v.index()] + dist[w.index()] + 1;
                    best = Some(best.map_or(len, |b| b.min(len)));
                }
            }
        }
    }
    best
}

/// Every shortest simple cycle through `p`.
pub fn shortest_cycles_through(g: &Graph, p: Vertex) -> Vec<VertexCycle> {
    for len in 3..=g.vertex_count() {
        let mut search = CycleSearch::new(g, None, len, false);
        search.exact = true;
        let found = search.run_from(p, false);
        if !found.is_empty() {
            return found;
        }
    }
    Vec::new()
}

struct CycleSearch<'a> {
    g: &'a Graph,
    allowed: Vec<bool>,
    max_len: usize,
    chordless: bool,
    exact: bool,
}

impl<'a> CycleSearch<'a> {
    fn new(g: &'a Graph, within: Option<&VertexSet>, max_len: usize, chordless: bool) -> Self {
        let allowed = match within {
            Some(set) => g.vertices().map(|v| set.contains(&v)).collect(),
            None => vec![true; g.vertex_count()],
        };
        CycleSearch {
            g,
            allowed,
            max_len,
            chordless,
            exact: false,
        }
    }

    fn run_all(&self) -> Vec<VertexCycle> {
        let mut out = Vec::new();
        if self.max_len < 3 {
            return out;
        }
        for s in self.g.vertices() {
            if self.allowed[s.index()] {
                out.extend(self.run_from(s, true));
            }
        }
        out.sort();
        out.dedup();
        out
    }

    /// Cycles through `s`; when `smallest` is set, only cycles whose smallest
    /// vertex is `s`.
    fn run_from(&self, s: Vertex, smallest: bool) -> Vec<VertexCycle> {
        let mut out = Vec::new();
        if !self.allowed[s.index()] {
            return out;
        }
        let mut on_path = vec![false; self.g.vertex_count()];
        on_path[s.index()] = true;
        let mut path = vec![s];
        self.extend(&mut path, &mut on_path, smallest, &mut out);
        out.sort();
        out
    }

    fn extend(
        &self,
        path: &mut Vec<Vertex>,
        on_path: &mut [bool],
        smallest: bool,
        out: &mut Vec<VertexCycle>,
    ) {
        let s = path[0];
        let last = *path.last().expect("path is non-empty");
        for &w in self.g.neighbors(last) {
            if on_path[w.index()] || !self.allowed[w.index()] || (smallest && w < s) {
                continue;
            }
            let len = path.len() + 1;
            if len > self.max_len {
                continue;
            }
            if self.chordless
                && path.len() > 2
                && path[1..path.len() - 1]
                    .iter()
                    .any(|&x| self.g.adjacent(x, w))
            {
                continue;
            }
            let closes = len >= 3 && self.g.adjacent(w, s);
            if closes && path[1] < w && (!self.exact || len == self.max_len) {
                let mut cycle = path.clone();
                cycle.push(w);
                out.push(VertexCycle::from_raw(cycle));
            }
            // a chordless cycle cannot continue past a vertex adjacent to the start
            if closes && self.chordless {
                continue;
            }
            if len < self.max_len {
                on_path[w.index()] = true;
                path.push(w);
                self.extend(path, on_path, smallest, out);
                path.pop();
                on_path[w.index()] = false;
            }
        }
    }
}
