//! Multigraphs with labeled edges and spanning-tree enumeration.
//!
//! Vertices are numbered from 1. Edge `k` (0-based position in the edge
//! list) carries the variable `x_{k+1}` in every polynomial built from the
//! graph.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub label: String,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }

    fn key(&self) -> (usize, usize) {
        (self.u.min(self.v), self.u.max(self.v))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    num_vertices: usize,
    edges: Vec<Edge>,
}

#[derive(Clone, Debug, PartialEq, Eq, serde::Serialize)]
pub struct SimplicityReport {
    pub simple: bool,
    /// Edge indices of loops.
    pub loops: Vec<usize>,
    /// Pairs of parallel edge indices, `(i, j)` with `i < j`.
    pub parallel_pairs: Vec<(usize, usize)>,
}

/// Spanning trees as sorted edge-index lists, the list itself sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpanningTreeSet {
    pub trees: Vec<Vec<usize>>,
    /// Set when the source graph is disconnected (and `trees` is empty).
    pub disconnected: bool,
}

impl SpanningTreeSet {
    pub fn len(&self) -> usize {
        self.trees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.trees.is_empty()
    }
}

fn default_label(num_vertices: usize, u: usize, v: usize) -> String {
    if num_vertices < 10 {
        format!("{u}{v}")
    } else {
        format!("{u}_{v}")
    }
}

impl Graph {
    /// Edges are `(u, v)` pairs of 1-based vertices.
    pub fn new(num_vertices: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let labeled = edges
            .iter()
            .map(|&(u, v)| (u, v, default_label(num_vertices, u, v)))
            .collect::<Vec<_>>();
        Self::with_labels(num_vertices, labeled)
    }

    pub fn with_labels(num_vertices: usize, edges: Vec<(usize, usize, String)>) -> Result<Graph> {
        if num_vertices == 0 {
            return Err(Error::OutOfRange("a graph needs at least one vertex".into()));
        }
        let mut out = Vec::with_capacity(edges.len());
        for (u, v, label) in edges {
            for w in [u, v] {
                if w == 0 || w > num_vertices {
                    return Err(Error::IndexOutOfRange { index: w, size: num_vertices });
                }
            }
            out.push(Edge { u, v, label });
        }
        Ok(Graph { num_vertices, edges: out })
    }

    /// `K_m` with edges `(i, j)`, `i < j`, in lexicographic order.
    pub fn complete(m: usize) -> Result<Graph> {
        if m < 2 {
            return Err(Error::OutOfRange(format!("complete graph K{m} needs m >= 2")));
        }
        let mut edges = Vec::new();
        for i in 1..=m {
            for j in i + 1..=m {
                edges.push((i, j));
            }
        }
        Graph::new(m, &edges)
    }

    /// Builtin name (`K<m>`) or the text format.
    pub fn build(spec: &str) -> Result<Graph> {
        let trimmed = spec.trim();
        if let Some(rest) = trimmed.strip_prefix('K') {
            if !rest.is_empty() && rest.bytes().all(|b| b.is_ascii_digit()) {
                let m = rest.parse().map_err(|_| Error::Parse(format!("bad builtin '{trimmed}'")))?;
                return Graph::complete(m);
            }
        }
        Graph::parse(spec)
    }

    /// Text format: `p <num_vertices> <num_edges>`, then `e <u> <v> [label]`
    /// per edge; `#` starts a comment.
    pub fn parse(text: &str) -> Result<Graph> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges = Vec::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let bad = |msg: &str| Error::Parse(format!("line {}: {msg}", lineno + 1));
            let fields: Vec<&str> = line.split_whitespace().collect();
            let num = |s: &str| s.parse::<usize>().map_err(|_| bad(&format!("expected integer, got '{s}'")));
            match fields[0] {
                "p" => {
                    if header.is_some() {
                        return Err(bad("duplicate 'p' line"));
                    }
                    if fields.len() != 3 {
                        return Err(bad("expected 'p <num_vertices> <num_edges>'"));
                    }
                    header = Some((num(fields[1])?, num(fields[2])?));
                }
                "e" => {
                    let (n, _) = header.ok_or_else(|| bad("edge before 'p' line"))?;
                    if fields.len() < 3 || fields.len() > 4 {
                        return Err(bad("expected 'e <u> <v> [label]'"));
                    }
                    let (u, v) = (num(fields[1])?, num(fields[2])?);
                    let label = fields
                        .get(3)
                        .map(|s| s.to_string())
                        .unwrap_or_else(|| default_label(n, u, v));
                    edges.push((u, v, label));
                }
                other => return Err(bad(&format!("unknown record '{other}'"))),
            }
        }
        let (n, m) = header.ok_or_else(|| Error::Parse("missing 'p' line".into()))?;
        if edges.len() != m {
            return Err(Error::Parse(format!("header announces {m} edges, found {}", edges.len())));
        }
        Graph::with_labels(n, edges)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("p {} {}\n", self.num_vertices, self.edges.len());
        for e in &self.edges {
            out.push_str(&format!("e {} {} {}\n", e.u, e.v, e.label));
        }
        out
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn labels(&self) -> Vec<String> {
        self.edges.iter().map(|e| format!("x{}", e.label)).collect()
    }

    /// The subgraph keeping only the listed edges (in their original order).
    pub fn edge_subgraph(&self, keep: &[usize]) -> Result<Graph> {
        let mut edges = Vec::with_capacity(keep.len());
        for &k in keep {
            let e = self
                .edges
                .get(k)
                .ok_or(Error::IndexOutOfRange { index: k, size: self.edges.len() })?;
            edges.push(e.clone());
        }
        Ok(Graph { num_vertices: self.num_vertices, edges })
    }

    pub fn is_connected(&self) -> bool {
        let mut uf = UnionFind::new(self.num_vertices);
        for e in &self.edges {
            uf.union(e.u - 1, e.v - 1);
        }
        uf.components == 1
    }

    pub fn simplicity(&self) -> SimplicityReport {
        let loops: Vec<usize> = (0..self.edges.len()).filter(|&k| self.edges[k].is_loop()).collect();
        let mut parallel_pairs = Vec::new();
        for i in 0..self.edges.len() {
            if self.edges[i].is_loop() {
                continue;
            }
            for j in i + 1..self.edges.len() {
                if self.edges[i].key() == self.edges[j].key() {
                    parallel_pairs.push((i, j));
                }
            }
        }
        SimplicityReport { simple: loops.is_empty() && parallel_pairs.is_empty(), loops, parallel_pairs }
    }

    /// All spanning trees, by deletion-contraction over the edge list with a
    /// connectivity cut on the deletion branch.
    pub fn spanning_trees(&self) -> SpanningTreeSet {
        if !self.is_connected() {
            return SpanningTreeSet { trees: Vec::new(), disconnected: true };
        }
        let mut trees = Vec::new();
        let mut chosen = Vec::with_capacity(self.num_vertices - 1);
        let uf = UnionFind::new(self.num_vertices);
        self.enumerate(0, &uf, &mut chosen, &mut trees);
        trees.sort();
        SpanningTreeSet { trees, disconnected: false }
    }

    fn enumerate(&self, next: usize, uf: &UnionFind, chosen: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if chosen.len() == self.num_vertices - 1 {
            out.push(chosen.clone());
            return;
        }
        if next == self.edges.len() {
            return;
        }
        let e = &self.edges[next];
        let (a, b) = (uf.find(e.u - 1), uf.find(e.v - 1));
        if a != b {
            // contract
            let mut merged = uf.clone();
            merged.union(a, b);
            chosen.push(next);
            self.enumerate(next + 1, &merged, chosen, out);
            chosen.pop();
        }
        // delete, if the remaining edges can still connect everything
        if self.spans_from(next + 1, uf) {
            self.enumerate(next + 1, uf, chosen, out);
        }
    }

    fn spans_from(&self, start: usize, uf: &UnionFind) -> bool {
        let mut probe = uf.clone();
        for e in &self.edges[start..] {
            probe.union(e.u - 1, e.v - 1);
            if probe.components == 1 {
                return true;
            }
        }
        probe.components == 1
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self.edges.iter().map(|e| format!("{}-{}", e.u, e.v)).collect();
        write!(f, "G(n={}, [{}])", self.num_vertices, edges.join(", "))
    }
}

#[derive(Clone, Debug)]
struct UnionFind {
    parent: Vec<usize>,
    components: usize,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect(), components: n }
    }

    fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
            self.components -= 1;
        }
    }
}
