//! Labelled multigraphs: parsing, orientation, deletion/contraction and the
//! incidence-vector construction that feeds the matroid layer.
//!
//! A labelled graph has loop-free edges split into regular and dotted kinds,
//! each carrying a positive integer label. Contraction of a regular edge
//! turns it into a dotted one; vertices are never merged, so edge and vertex
//! indices stay stable across the whole deletion/contraction recursion.

use std::fmt;

use num_bigint::BigInt;
use thiserror::Error;

use crate::exact_linalg::IntMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeKind {
    Regular,
    Dotted,
}

impl fmt::Display for EdgeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EdgeKind::Regular => write!(f, "R"),
            EdgeKind::Dotted => write!(f, "D"),
        }
    }
}

/// An edge between two distinct vertices, written order preserved.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub kind: EdgeKind,
    pub label: u64,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("loop-edge: line {line}: edge endpoints coincide ('{id}')")]
    LoopEdge { line: usize, id: String },
    #[error("unknown-vertex: line {line}: '{id}' is not declared")]
    UnknownVertex { line: usize, id: String },
    #[error("nonpositive-label: line {line}: label must be a positive integer")]
    NonpositiveLabel { line: usize },
    #[error("malformed-line: line {line}: {content:?}")]
    MalformedLine { line: usize, content: String },
    #[error("duplicate-vertex: line {line}: '{id}' already declared")]
    DuplicateVertex { line: usize, id: String },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("not-regular: edge {index} is dotted")]
    NotRegular { index: usize },
    #[error("edge-index: {index} out of range ({len} edges)")]
    EdgeIndexOutOfRange { index: usize, len: usize },
    #[error("vertex-index: {index} out of range ({len} vertices)")]
    VertexIndexOutOfRange { index: usize, len: usize },
    #[error("loop-edge: endpoints coincide (vertex {index})")]
    LoopEdge { index: usize },
    #[error("nonpositive-label: label must be a positive integer")]
    NonpositiveLabel,
}

/// A multigraph with named vertices and an ordered multiset of labelled
/// regular/dotted edges. Loops are forbidden; parallel edges are fine.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelledGraph {
    vertices: Vec<String>,
    edges: Vec<Edge>,
}

impl LabelledGraph {
    pub fn new(vertices: Vec<String>) -> Self {
        LabelledGraph {
            vertices,
            edges: Vec::new(),
        }
    }

    /// Graph on `n` anonymous vertices named `v1..vn`.
    pub fn with_vertex_count(n: usize) -> Self {
        Self::new((1..=n).map(|i| format!("v{}", i)).collect())
    }

    pub fn add_edge(
        &mut self,
        u: usize,
        v: usize,
        kind: EdgeKind,
        label: u64,
    ) -> Result<(), GraphError> {
        let n = self.vertices.len();
        for &idx in &[u, v] {
            if idx >= n {
                return Err(GraphError::VertexIndexOutOfRange { index: idx, len: n });
            }
        }
        if u == v {
            return Err(GraphError::LoopEdge { index: u });
        }
        if label == 0 {
            return Err(GraphError::NonpositiveLabel);
        }
        self.edges.push(Edge { u, v, kind, label });
        Ok(())
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    /// Indices (into the edge list) of the regular edges, in order.
    pub fn regular_edges(&self) -> Vec<usize> {
        self.edge_indices_of_kind(EdgeKind::Regular)
    }

    /// Indices (into the edge list) of the dotted edges, in order.
    pub fn dotted_edges(&self) -> Vec<usize> {
        self.edge_indices_of_kind(EdgeKind::Dotted)
    }

    fn edge_indices_of_kind(&self, kind: EdgeKind) -> Vec<usize> {
        self.edges
            .iter()
            .enumerate()
            .filter(|(_, e)| e.kind == kind)
            .map(|(i, _)| i)
            .collect()
    }

    fn check_regular(&self, e: usize) -> Result<(), GraphError> {
        let len = self.edges.len();
        match self.edges.get(e) {
            None => Err(GraphError::EdgeIndexOutOfRange { index: e, len }),
            Some(edge) if edge.kind != EdgeKind::Regular => {
                Err(GraphError::NotRegular { index: e })
            }
            Some(_) => Ok(()),
        }
    }

    /// Deletion of a regular edge: the edge is removed, all else unchanged.
    pub fn delete_edge(&self, e: usize) -> Result<LabelledGraph, GraphError> {
        self.check_regular(e)?;
        let mut g = self.clone();
        g.edges.remove(e);
        Ok(g)
    }

    /// Contraction of a regular edge: the edge becomes dotted in place.
    /// Endpoints, label and the vertex set are unchanged.
    pub fn contract_edge(&self, e: usize) -> Result<LabelledGraph, GraphError> {
        self.check_regular(e)?;
        let mut g = self.clone();
        g.edges[e].kind = EdgeKind::Dotted;
        Ok(g)
    }

    /// Connected components of the whole graph, and the vertex count of the
    /// quotient graph obtained by classically contracting every dotted edge.
    pub fn quotient_stats(&self) -> QuotientStats {
        let n = self.vertices.len();
        let mut all = UnionFind::new(n);
        let mut dotted = UnionFind::new(n);
        for e in &self.edges {
            all.union(e.u, e.v);
            if e.kind == EdgeKind::Dotted {
                dotted.union(e.u, e.v);
            }
        }
        QuotientStats {
            k: all.class_count(),
            n_bar: dotted.class_count(),
            r_count: self.regular_edges().len(),
            d_count: self.dotted_edges().len(),
            v_count: n,
        }
    }
}

/// Component and quotient counts used by the chromatic/flow specializations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuotientStats {
    /// Connected components of the graph (all edges).
    pub k: usize,
    /// Vertex classes after identifying the endpoints of every dotted edge.
    pub n_bar: usize,
    pub r_count: usize,
    pub d_count: usize,
    pub v_count: usize,
}

/// A labelled graph together with a head/tail choice per edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrientedGraph {
    base: LabelledGraph,
    /// (head, tail) per edge, aligned with the base edge order.
    directions: Vec<(usize, usize)>,
}

impl OrientedGraph {
    pub fn base(&self) -> &LabelledGraph {
        &self.base
    }

    /// (head, tail) of edge `e`.
    pub fn direction(&self, e: usize) -> (usize, usize) {
        self.directions[e]
    }

    /// The same graph with one edge's direction reversed.
    pub fn with_flipped(&self, e: usize) -> OrientedGraph {
        let mut og = self.clone();
        let (h, t) = og.directions[e];
        og.directions[e] = (t, h);
        og
    }

    /// Incidence columns: +label at the head row, -label at the tail row.
    pub fn incidence_system(&self) -> IncidenceSystem {
        let n = self.base.vertex_count();
        let column = |e: usize| -> Vec<BigInt> {
            let (head, tail) = self.directions[e];
            let label = BigInt::from(self.base.edges()[e].label);
            let mut col = vec![BigInt::from(0); n];
            col[head] = label.clone();
            col[tail] = -label;
            col
        };
        let reg: Vec<Vec<BigInt>> = self.base.regular_edges().into_iter().map(column).collect();
        let dot: Vec<Vec<BigInt>> = self.base.dotted_edges().into_iter().map(column).collect();
        IncidenceSystem {
            x_regular: IntMatrix::from_columns(n, &reg),
            x_dotted: IntMatrix::from_columns(n, &dot),
            n,
        }
    }
}

/// Default orientation: every edge is directed from its first-written
/// endpoint (the head) to its second.
pub fn orient_default(g: &LabelledGraph) -> OrientedGraph {
    let directions = g.edges().iter().map(|e| (e.u, e.v)).collect();
    OrientedGraph {
        base: g.clone(),
        directions,
    }
}

/// The integer incidence vectors of an oriented labelled graph, split into
/// the regular block and the dotted block. Every column has exactly two
/// nonzero entries of equal magnitude and opposite sign.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IncidenceSystem {
    pub x_regular: IntMatrix,
    pub x_dotted: IntMatrix,
    pub n: usize,
}

/// Parses the AGF text format:
///
/// ```text
/// # comment
/// V <id>
/// E <R|D> <u> <v> <label>
/// ```
///
/// Vertex declaration order defines the incidence row order; edge order is
/// file order. Any other non-blank line is rejected.
pub fn parse_graph(text: &str) -> Result<LabelledGraph, ParseError> {
    let mut g = LabelledGraph::new(Vec::new());
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let trimmed = raw.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let tokens: Vec<&str> = trimmed.split_whitespace().collect();
        match tokens.as_slice() {
            ["V", id] => {
                if g.vertex_index(id).is_some() {
                    return Err(ParseError::DuplicateVertex {
                        line,
                        id: id.to_string(),
                    });
                }
                g.vertices.push(id.to_string());
            }
            ["E", kind, u, v, label] => {
                let kind = match *kind {
                    "R" => EdgeKind::Regular,
                    "D" => EdgeKind::Dotted,
                    _ => {
                        return Err(ParseError::MalformedLine {
                            line,
                            content: trimmed.to_string(),
                        })
                    }
                };
                let ui = g.vertex_index(u).ok_or_else(|| ParseError::UnknownVertex {
                    line,
                    id: u.to_string(),
                })?;
                let vi = g.vertex_index(v).ok_or_else(|| ParseError::UnknownVertex {
                    line,
                    id: v.to_string(),
                })?;
                if ui == vi {
                    return Err(ParseError::LoopEdge {
                        line,
                        id: u.to_string(),
                    });
                }
                let label = parse_label(label, line, trimmed)?;
                g.edges.push(Edge {
                    u: ui,
                    v: vi,
                    kind,
                    label,
                });
            }
            _ => {
                return Err(ParseError::MalformedLine {
                    line,
                    content: trimmed.to_string(),
                })
            }
        }
    }
    Ok(g)
}

fn parse_label(token: &str, line: usize, content: &str) -> Result<u64, ParseError> {
    if token.starts_with('-') || token == "0" {
        return Err(ParseError::NonpositiveLabel { line });
    }
    match token.parse::<u64>() {
        Ok(0) => Err(ParseError::NonpositiveLabel { line }),
        Ok(l) => Ok(l),
        Err(_) => Err(ParseError::MalformedLine {
            line,
            content: content.to_string(),
        }),
    }
}

/// Canonical AGF serialization: `V` lines in order, then `E` lines in order,
/// single-space separated, trailing newline.
pub fn serialize_graph(g: &LabelledGraph) -> String {
    let mut out = String::new();
    for v in g.vertices() {
        out.push_str("V ");
        out.push_str(v);
        out.push('\n');
    }
    for e in g.edges() {
        out.push_str(&format!(
            "E {} {} {} {}\n",
            e.kind,
            g.vertices()[e.u],
            g.vertices()[e.v],
            e.label
        ));
    }
    out
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, x: usize) -> usize {
        if self.parent[x] != x {
            let root = self.find(self.parent[x]);
            self.parent[x] = root;
        }
        self.parent[x]
    }

    fn union(&mut self, a: usize, b: usize) {
        let ra = self.find(a);
        let rb = self.find(b);
        if ra != rb {
            self.parent[ra] = rb;
        }
    }

    fn class_count(&mut self) -> usize {
        let n = self.parent.len();
        (0..n).filter(|&x| self.find(x) == x).count()
    }
}
