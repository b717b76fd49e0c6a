//! The line-oriented `.dcx` complex format.
//!
//! ```text
//! DCX 1
//! # comment
//! M generator grid
//! V a
//! E a b
//! C a,b,c
//! U3 a,b,c,d
//! ```
//!
//! `C` lines list a surface-cell in travel order. When a document has no `C`
//! lines the default cell set is derived from the graph. Serialization keeps
//! declaration order, so parse followed by serialize is the identity on
//! canonical text.

use thiserror::Error;

use crate::complex::{CellComplex, ComplexError, U3Options};
use crate::graph::{Graph, GraphBuilder, GraphError, VertexCycle, VertexSet};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("unsupported format version {0}")]
    Version(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax {
        line,
        message: message.into(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ComplexDocument {
    pub metadata: Vec<(String, String)>,
    pub vertices: Vec<String>,
    pub edges: Vec<(String, String)>,
    /// Explicit surface-cells; empty means "derive the default set".
    pub cells: Vec<Vec<String>>,
    pub u3: Vec<Vec<String>>,
}

/// Splits a comma-separated vertex list, as used by `C` lines and curve
/// arguments on the command line.
pub fn parse_id_list(s: &str) -> Result<Vec<String>, String> {
    let ids: Vec<String> = s.split(',').map(|t| t.trim().to_string()).collect();
    if ids.iter().any(String::is_empty) {
        return Err(format!("empty id in list `{s}`"));
    }
    Ok(ids)
}

impl ComplexDocument {
    pub fn parse(text: &str) -> Result<Self, FormatError> {
        let mut doc = ComplexDocument::default();
        let mut seen_header = false;
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (tag, rest) = match line.split_once(char::is_whitespace) {
                Some((t, r)) => (t, r.trim()),
                None => (line, ""),
            };
            if !seen_header {
                if tag != "DCX" {
                    return Err(syntax(line_no, "expected `DCX <version>` header"));
                }
                if rest != FORMAT_VERSION.to_string() {
                    return Err(FormatError::Version(rest.to_string()));
                }
                seen_header = true;
                continue;
            }
            match tag {
                "M" => {
                    let (k, v) = rest
                        .split_once(char::is_whitespace)
                        .map(|(k, v)| (k, v.trim()))
                        .unwrap_or((rest, ""));
                    if k.is_empty() {
                        return Err(syntax(line_no, "metadata line needs a key"));
                    }
                    doc.metadata.push((k.to_string(), v.to_string()));
                }
                "V" => {
                    if rest.is_empty() || rest.contains(char::is_whitespace) || rest.contains(',') {
                        return Err(syntax(line_no, "`V` takes exactly one vertex id"));
                    }
                    doc.vertices.push(rest.to_string());
                }
                "E" => {
                    let parts: Vec<&str> = rest.split_whitespace().collect();
                    if parts.len() != 2 {
                        return Err(syntax(line_no, "`E` takes exactly two vertex ids"));
                    }
                    doc.edges.push((parts[0].to_string(), parts[1].to_string()));
                }
                "C" => doc.cells.push(parse_id_list(rest).map_err(|m| syntax(line_no, m))?),
                "U3" => doc.u3.push(parse_id_list(rest).map_err(|m| syntax(line_no, m))?),
                "DCX" => return Err(syntax(line_no, "repeated header")),
                other => return Err(syntax(line_no, format!("unknown directive `{other}`"))),
            }
        }
        if !seen_header {
            return Err(syntax(0, "missing `DCX <version>` header"));
        }
        Ok(doc)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("DCX {FORMAT_VERSION}\n");
        for (k, v) in &self.metadata {
            if v.is_empty() {
                out.push_str(&format!("M {k}\n"));
            } else {
                out.push_str(&format!("M {k} {v}\n"));
            }
        }
        for v in &self.vertices {
            out.push_str(&format!("V {v}\n"));
        }
        for (a, b) in &self.edges {
            out.push_str(&format!("E {a} {b}\n"));
        }
        for c in &self.cells {
            out.push_str(&format!("C {}\n", c.join(",")));
        }
        for s in &self.u3 {
            out.push_str(&format!("U3 {}\n", s.join(",")));
        }
        out
    }

    pub fn meta(&self, key: &str) -> Option<&str> {
        self.metadata
            .iter()
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }

    pub fn graph(&self) -> Result<Graph, FormatError> {
        let mut gb = GraphBuilder::new();
        for v in &self.vertices {
            gb.add_vertex(v.as_str())?;
        }
        for (a, b) in &self.edges {
            gb.add_edge_by_name(a, b)?;
        }
        Ok(gb.build()?)
    }

    pub fn into_complex(self) -> Result<CellComplex, FormatError> {
        self.to_complex(U3Options::default())
    }

    pub fn to_complex(&self, u3_options: U3Options) -> Result<CellComplex, FormatError> {
        let g = self.graph()?;
        let cx = if self.cells.is_empty() {
            CellComplex::with_default_cells(g)?
        } else {
            let cells = self
                .cells
                .iter()
                .map(|c| VertexCycle::from_names(&g, &names(c)))
                .collect::<Result<Vec<_>, _>>()?;
            CellComplex::new(g, cells)?
        };
        if self.u3.is_empty() {
            return Ok(cx);
        }
        let solids = self
            .u3
            .iter()
            .map(|s| {
                cx.graph()
                    .resolve_all(s.iter().map(String::as_str))
                    .map(|vs| vs.into_iter().collect::<VertexSet>())
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(cx.with_u3(solids, u3_options)?)
    }

    /// Document describing `cx` with explicit cells.
    pub fn from_complex(cx: &CellComplex, metadata: Vec<(String, String)>) -> Self {
        let g = cx.graph();
        ComplexDocument {
            metadata,
            vertices: g.vertices().map(|v| g.name(v).to_string()).collect(),
            edges: g
                .edges()
                .map(|e| (g.name(e.lo()).to_string(), g.name(e.hi()).to_string()))
                .collect(),
            cells: cx
                .cells()
                .iter()
                .map(|c| g.names_of(c.travel()).into_iter().map(String::from).collect())
                .collect(),
            u3: cx
                .u3()
                .unwrap_or(&[])
                .iter()
                .map(|s| g.names_of(s).into_iter().map(String::from).collect())
                .collect(),
        }
    }
}

fn names(v: &[String]) -> Vec<&str> {
    v.iter().map(String::as_str).collect()
}
