//! Immutable simple undirected graphs with bitset adjacency rows.
//!
//! Vertices are dense 0-based ids. A graph is never mutated after
//! construction; vertex deletion is expressed as an induced subgraph on the
//! kept set. This makes graphs safe to share across worker threads.
//!
//! The text format is DIMACS-like: a problem line `p <n> <m>`, then edge
//! lines `e <u> <v>` with 1-based endpoints, comment lines starting with `c`.
//! Duplicate edges collapse silently; self-loops are errors.

use crate::bitset::VertexSet;
use thiserror::Error;

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    rows: Vec<VertexSet>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex {0} out of range for graph on {1} vertices")]
    OutOfRange(usize, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseError {
    #[error("missing problem line `p <n> <m>`")]
    MissingHeader,
    #[error("line {line}: malformed: {msg}")]
    Malformed { line: usize, msg: String },
    #[error("line {line}: vertex {v} out of declared range 1..={n}")]
    VertexOutOfRange { line: usize, v: usize, n: usize },
    #[error("line {line}: self-loop at vertex {v}")]
    SelfLoop { line: usize, v: usize },
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges collapse; a
    /// self-loop or an endpoint `>= n` is an error.
    pub fn from_edges(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, GraphError> {
        let mut rows = vec![VertexSet::empty(n); n];
        for (u, v) in edges {
            if u >= n {
                return Err(GraphError::OutOfRange(u, n));
            }
            if v >= n {
                return Err(GraphError::OutOfRange(v, n));
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            rows[u].insert(v);
            rows[v].insert(u);
        }
        Ok(Graph { n, rows })
    }

    /// Graph on `n` vertices with no edges.
    pub fn edgeless(n: usize) -> Self {
        Graph {
            n,
            rows: vec![VertexSet::empty(n); n],
        }
    }

    /// Complete graph K_n.
    pub fn complete(n: usize) -> Self {
        let mut rows = Vec::with_capacity(n);
        for v in 0..n {
            let mut row = VertexSet::full(n);
            row.remove(v);
            rows.push(row);
        }
        Graph { n, rows }
    }

    /// Path 0-1-...-(n-1).
    pub fn path(n: usize) -> Self {
        Graph::from_edges(n, (1..n).map(|v| (v - 1, v))).unwrap()
    }

    /// Cycle C_n (requires n >= 3).
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        Graph::from_edges(n, (0..n).map(|v| (v, (v + 1) % n))).unwrap()
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    /// Open neighborhood N(v).
    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.rows[v]
    }

    /// Closed neighborhood N[v] = N(v) ∪ {v}.
    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        let mut s = self.rows[v].clone();
        s.insert(v);
        s
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum::<usize>() / 2
    }

    /// Edges as (u, v) pairs with u < v, ascending lexicographically.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| self.rows[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    /// Induced subgraph on `s`, plus the mapping from new ids to old ids
    /// (ascending, so new id i corresponds to the i-th smallest member of s).
    pub fn induced_subgraph(&self, s: &VertexSet) -> (Graph, Vec<usize>) {
        assert_eq!(s.ground_size(), self.n, "subset over a different ground set");
        let map: Vec<usize> = s.iter().collect();
        let k = map.len();
        let mut inv = vec![usize::MAX; self.n];
        for (new, &old) in map.iter().enumerate() {
            inv[old] = new;
        }
        let mut rows = vec![VertexSet::empty(k); k];
        for (new_u, &old_u) in map.iter().enumerate() {
            for old_v in self.rows[old_u].intersection(s).iter() {
                rows[new_u].insert(inv[old_v]);
            }
        }
        (Graph { n: k, rows }, map)
    }

    /// Complement graph: edge (u, v) present iff absent here, u != v.
    pub fn complement(&self) -> Graph {
        let mut rows = Vec::with_capacity(self.n);
        for v in 0..self.n {
            let mut row = self.rows[v].complement();
            row.remove(v);
            rows.push(row);
        }
        Graph { n: self.n, rows }
    }

    /// Disjoint union; vertices of `other` are shifted up by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let n = self.n + other.n;
        let mut rows = vec![VertexSet::empty(n); n];
        for u in 0..self.n {
            for v in self.rows[u].iter() {
                rows[u].insert(v);
            }
        }
        for u in 0..other.n {
            for v in other.rows[u].iter() {
                rows[self.n + u].insert(self.n + v);
            }
        }
        Graph { n, rows }
    }

    /// True iff every pair in `s` is adjacent.
    pub fn is_clique(&self, s: &VertexSet) -> bool {
        assert_eq!(s.ground_size(), self.n, "subset over a different ground set");
        s.iter().all(|v| {
            let mut rest = s.clone();
            rest.remove(v);
            rest.is_subset_of(&self.rows[v])
        })
    }

    /// True iff no pair in `s` is adjacent.
    pub fn is_independent(&self, s: &VertexSet) -> bool {
        assert_eq!(s.ground_size(), self.n, "subset over a different ground set");
        s.iter().all(|v| s.is_disjoint_from(&self.rows[v]))
    }

    /// Parses the DIMACS-like edge-list format.
    pub fn parse(text: &str) -> Result<Graph, ParseError> {
        let mut header: Option<(usize, usize)> = None;
        let mut edges: Vec<(usize, usize)> = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let lineno = idx + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('c') {
                continue;
            }
            let mut tok = line.split_whitespace();
            match tok.next() {
                Some("p") => {
                    if header.is_some() {
                        return Err(ParseError::Malformed {
                            line: lineno,
                            msg: "duplicate problem line".into(),
                        });
                    }
                    let n = parse_num(tok.next(), lineno, "vertex count")?;
                    let m = parse_num(tok.next(), lineno, "edge count")?;
                    if tok.next().is_some() {
                        return Err(ParseError::Malformed {
                            line: lineno,
                            msg: "trailing tokens on problem line".into(),
                        });
                    }
                    header = Some((n, m));
                }
                Some("e") => {
                    let (n, _) = header.ok_or(ParseError::MissingHeader)?;
                    let u = parse_num(tok.next(), lineno, "edge endpoint")?;
                    let v = parse_num(tok.next(), lineno, "edge endpoint")?;
                    if tok.next().is_some() {
                        return Err(ParseError::Malformed {
                            line: lineno,
                            msg: "trailing tokens on edge line".into(),
                        });
                    }
                    for w in [u, v] {
                        if w == 0 || w > n {
                            return Err(ParseError::VertexOutOfRange { line: lineno, v: w, n });
                        }
                    }
                    if u == v {
                        return Err(ParseError::SelfLoop { line: lineno, v: u });
                    }
                    edges.push((u - 1, v - 1));
                }
                Some(other) => {
                    return Err(ParseError::Malformed {
                        line: lineno,
                        msg: format!("unknown line type {other:?}"),
                    });
                }
                None => unreachable!("non-empty line has a first token"),
            }
        }
        let (n, _) = header.ok_or(ParseError::MissingHeader)?;
        Ok(Graph::from_edges(n, edges).expect("endpoints validated during parsing"))
    }

    /// Writes the graph back in the edge-list format (1-based, u < v).
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("p {} {}\n", self.n, self.edge_count());
        for (u, v) in self.edges() {
            out.push_str(&format!("e {} {}\n", u + 1, v + 1));
        }
        out
    }

    /// Checks the structural invariants; used by tests after constructions.
    pub fn invariants_hold(&self) -> bool {
        if self.rows.len() != self.n {
            return false;
        }
        for v in 0..self.n {
            if self.rows[v].ground_size() != self.n || self.rows[v].contains(v) {
                return false;
            }
            for u in self.rows[v].iter() {
                if !self.rows[u].contains(v) {
                    return false;
                }
            }
        }
        true
    }
}

fn parse_num(tok: Option<&str>, line: usize, what: &str) -> Result<usize, ParseError> {
    let t = tok.ok_or_else(|| ParseError::Malformed {
        line,
        msg: format!("missing {what}"),
    })?;
    t.parse().map_err(|_| ParseError::Malformed {
        line,
        msg: format!("invalid {what} {t:?}"),
    })
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges().collect::<Vec<_>>())
    }
}
