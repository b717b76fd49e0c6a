//! Generated complexes used in tests, the guide and the `generate` command.
//!
//! Every generator emits explicit cells. Where the complex is orientable the
//! cells are rewritten in a coherent orientation.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::classify::build_orientation_atlas;
use crate::format::ComplexDocument;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FixtureError {
    #[error("{kind} needs {requirement}, got {got}")]
    Parameter {
        kind: &'static str,
        requirement: &'static str,
        got: usize,
    },
    #[error("unknown fixture kind `{0}`")]
    UnknownKind(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FixtureKind {
    Grid,
    TorusGrid,
    Cube,
    Octahedron,
    MoebiusStrip,
    Bowtie,
}

impl FixtureKind {
    pub const ALL: [FixtureKind; 6] = [
        FixtureKind::Grid,
        FixtureKind::TorusGrid,
        FixtureKind::Cube,
        FixtureKind::Octahedron,
        FixtureKind::MoebiusStrip,
        FixtureKind::Bowtie,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FixtureKind::Grid => "grid",
            FixtureKind::TorusGrid => "torus-grid",
            FixtureKind::Cube => "cube",
            FixtureKind::Octahedron => "octahedron",
            FixtureKind::MoebiusStrip => "moebius-strip",
            FixtureKind::Bowtie => "bowtie",
        }
    }

    /// Size parameter used when none is given.
    pub fn default_size(self) -> Option<usize> {
        match self {
            FixtureKind::Grid => Some(3),
            FixtureKind::TorusGrid => Some(4),
            FixtureKind::MoebiusStrip => Some(5),
            _ => None,
        }
    }
}

impl fmt::Display for FixtureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FixtureKind {
    type Err = FixtureError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        FixtureKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| FixtureError::UnknownKind(s.to_string()))
    }
}

/// Generates a fixture; `size` is ignored by kinds without a parameter.
pub fn generate(kind: FixtureKind, size: Option<usize>) -> Result<ComplexDocument, FixtureError> {
    let n = size.or(kind.default_size());
    match kind {
        FixtureKind::Grid => grid(n.unwrap_or(3)),
        FixtureKind::TorusGrid => {
            let n = n.unwrap_or(4);
            torus_grid(n, n)
        }
        FixtureKind::Cube => Ok(cube()),
        FixtureKind::Octahedron => Ok(octahedron()),
        FixtureKind::MoebiusStrip => moebius_strip(n.unwrap_or(5)),
        FixtureKind::Bowtie => Ok(bowtie()),
    }
}

struct Draft {
    doc: ComplexDocument,
}

impl Draft {
    fn new(kind: FixtureKind, params: &[(&str, usize)]) -> Self {
        let mut metadata = vec![("generator".to_string(), kind.name().to_string())];
        metadata.extend(params.iter().map(|(k, v)| (k.to_string(), v.to_string())));
        Draft {
            doc: ComplexDocument {
                metadata,
                ..ComplexDocument::default()
            },
        }
    }

    fn vertex(&mut self, name: String) {
        self.doc.vertices.push(name);
    }

    fn edge(&mut self, a: String, b: String) {
        self.doc.edges.push((a, b));
    }

    fn cell(&mut self, names: Vec<String>) {
        self.doc.cells.push(names);
    }

    /// Rewrites cells in atlas direction when the complex is orientable.
    fn finish(mut self) -> ComplexDocument {
        let cx = self
            .doc
            .clone()
            .into_complex()
            .expect("generated fixture is a valid complex");
        let atlas = build_orientation_atlas(&cx.whole());
        if atlas.is_consistent() {
            let g = cx.graph();
            self.doc.cells = cx
                .cell_ids()
                .map(|id| {
                    g.names_of(atlas.oriented(&cx, id).travel())
                        .into_iter()
                        .map(String::from)
                        .collect()
                })
                .collect();
        }
        self.doc
    }
}

fn rc(r: usize, c: usize) -> String {
    format!("r{r}c{c}")
}

/// `n x n` vertices `r<row>c<col>` with the unit squares as cells.
pub fn grid(n: usize) -> Result<ComplexDocument, FixtureError> {
    if n < 2 {
        return Err(FixtureError::Parameter {
            kind: "grid",
            requirement: "n >= 2",
            got: n,
        });
    }
    let mut d = Draft::new(FixtureKind::Grid, &[("n", n)]);
    for r in 0..n {
        for c in 0..n {
            d.vertex(rc(r, c));
        }
    }
    for r in 0..n {
        for c in 0..n {
            if c + 1 < n {
                d.edge(rc(r, c), rc(r, c + 1));
            }
            if r + 1 < n {
                d.edge(rc(r, c), rc(r + 1, c));
            }
        }
    }
    for r in 0..n - 1 {
        for c in 0..n - 1 {
            d.cell(vec![rc(r, c), rc(r, c + 1), rc(r + 1, c + 1), rc(r + 1, c)]);
        }
    }
    Ok(d.finish())
}

/// `rows x cols` grid with both directions wrapped.
pub fn torus_grid(rows: usize, cols: usize) -> Result<ComplexDocument, FixtureError> {
    for n in [rows, cols] {
        if n < 3 {
            return Err(FixtureError::Parameter {
                kind: "torus-grid",
                requirement: "at least 3 per axis",
                got: n,
            });
        }
    }
    let mut d = Draft::new(FixtureKind::TorusGrid, &[("rows", rows), ("cols", cols)]);
    for r in 0..rows {
        for c in 0..cols {
            d.vertex(rc(r, c));
        }
    }
    for r in 0..rows {
        for c in 0..cols {
            d.edge(rc(r, c), rc(r, (c + 1) % cols));
            d.edge(rc(r, c), rc((r + 1) % rows, c));
        }
    }
    for r in 0..rows {
        for c in 0..cols {
            let (r1, c1) = ((r + 1) % rows, (c + 1) % cols);
            d.cell(vec![rc(r, c), rc(r, c1), rc(r1, c1), rc(r1, c)]);
        }
    }
    Ok(d.finish())
}

/// The 3-cube: vertices `000`..`111`, six square faces.
pub fn cube() -> ComplexDocument {
    let mut d = Draft::new(FixtureKind::Cube, &[]);
    let name = |bits: usize| format!("{}{}{}", bits >> 2 & 1, bits >> 1 & 1, bits & 1);
    for v in 0..8 {
        d.vertex(name(v));
    }
    for v in 0..8usize {
        for bit in [4, 2, 1] {
            if v & bit == 0 {
                d.edge(name(v), name(v | bit));
            }
        }
    }
    for axis in [4usize, 2, 1] {
        let others: Vec<usize> = [4usize, 2, 1].into_iter().filter(|&b| b != axis).collect();
        let (a, b) = (others[0], others[1]);
        for side in [0, axis] {
            d.cell(vec![name(side), name(side | a), name(side | a | b), name(side | b)]);
        }
    }
    d.finish()
}

/// Octahedron on `px nx py ny pz nz`: eight triangles.
pub fn octahedron() -> ComplexDocument {
    let mut d = Draft::new(FixtureKind::Octahedron, &[]);
    let poles = ["px", "nx", "py", "ny", "pz", "nz"];
    for p in poles {
        d.vertex(p.to_string());
    }
    for (i, a) in poles.iter().enumerate() {
        for b in &poles[i + 1..] {
            if a[1..] != b[1..] {
                d.edge(a.to_string(), b.to_string());
            }
        }
    }
    for x in ["px", "nx"] {
        for y in ["py", "ny"] {
            for z in ["pz", "nz"] {
                d.cell(vec![x.to_string(), y.to_string(), z.to_string()]);
            }
        }
    }
    d.finish()
}

/// A band of `k` squares closed with a half twist: rails `t0..` and `b0..`,
/// the last square joins `t(k-1)` to `b0` and `b(k-1)` to `t0`.
pub fn moebius_strip(k: usize) -> Result<ComplexDocument, FixtureError> {
    if k < 3 {
        return Err(FixtureError::Parameter {
            kind: "moebius-strip",
            requirement: "k >= 3",
            got: k,
        });
    }
    let mut d = Draft::new(FixtureKind::MoebiusStrip, &[("k", k)]);
    let t = |i: usize| format!("t{i}");
    let b = |i: usize| format!("b{i}");
    for i in 0..k {
        d.vertex(t(i));
    }
    for i in 0..k {
        d.vertex(b(i));
    }
    for i in 0..k {
        d.edge(t(i), b(i));
    }
    for i in 0..k - 1 {
        d.edge(t(i), t(i + 1));
        d.edge(b(i), b(i + 1));
    }
    d.edge(t(k - 1), b(0));
    d.edge(b(k - 1), t(0));
    for i in 0..k - 1 {
        d.cell(vec![t(i), t(i + 1), b(i + 1), b(i)]);
    }
    d.cell(vec![t(k - 1), b(0), t(0), b(k - 1)]);
    Ok(d.finish())
}

/// Two squares meeting only at `p`.
pub fn bowtie() -> ComplexDocument {
    let mut d = Draft::new(FixtureKind::Bowtie, &[]);
    let names = ["p", "a1", "a2", "a3", "b1", "b2", "b3"];
    for n in names {
        d.vertex(n.to_string());
    }
    for wing in ["a", "b"] {
        let ring: Vec<String> = std::iter::once("p".to_string())
            .chain((1..=3).map(|i| format!("{wing}{i}")))
            .collect();
        for i in 0..4 {
            d.edge(ring[i].clone(), ring[(i + 1) % 4].clone());
        }
        d.cell(ring);
    }
    d.finish()
}
