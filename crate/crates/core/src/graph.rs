//! Directed graph with per-edge weight and integer delay, the text format it
//! is read from, and the source-splitting transform.
//!
//! Vertices are identified by `1..=n` throughout the public API, matching the
//! file format. Per-vertex arrays returned by the algorithms are indexed by
//! `id - 1`.

use std::collections::HashSet;
use std::fmt::{self, Write as _};
use std::path::Path;

use crate::error::{Error, ParseErrorKind, Result};

/// Vertex identifier in `1..=n`.
pub type VertexId = usize;

/// Edge weight. Always finite and non-negative inside a [`Graph`].
pub type Weight = f64;

/// Edge delay and delay budgets.
pub type Delay = u64;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Edge {
    pub to: VertexId,
    pub weight: Weight,
    pub delay: Delay,
}

/// Adjacency-list digraph without self-loops or parallel edges.
///
/// Out-edges are kept in insertion (file) order. In-neighbours are not
/// indexed; [`Graph::in_neighbors`] scans every edge.
#[derive(Debug, Clone, PartialEq)]
pub struct Graph {
    adjacency: Vec<Vec<Edge>>,
    m: usize,
}

impl Graph {
    /// Graph with `n` isolated vertices.
    pub fn with_vertices(n: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from `(u, v, weight, delay)` tuples, enforcing every
    /// structural invariant.
    pub fn from_edges(n: usize, edges: &[(VertexId, VertexId, Weight, Delay)]) -> Result<Self> {
        let mut g = Graph::with_vertices(n);
        let mut seen = HashSet::with_capacity(edges.len());
        for (i, &(u, v, w, d)) in edges.iter().enumerate() {
            g.check_edge(u, v, w, &mut seen)
                .map_err(|kind| Error::parse(i + 1, kind))?;
            g.push_edge(u, v, w, d);
        }
        Ok(g)
    }

    fn check_edge(
        &self,
        u: VertexId,
        v: VertexId,
        w: Weight,
        seen: &mut HashSet<(VertexId, VertexId)>,
    ) -> std::result::Result<(), ParseErrorKind> {
        let n = self.n();
        for vertex in [u, v] {
            if vertex == 0 || vertex > n {
                return Err(ParseErrorKind::VertexOutOfRange { vertex, n });
            }
        }
        if u == v {
            return Err(ParseErrorKind::SelfLoop(u));
        }
        if !w.is_finite() {
            return Err(ParseErrorKind::NonFiniteWeight(w));
        }
        if w < 0.0 {
            return Err(ParseErrorKind::NegativeWeight(w));
        }
        if !seen.insert((u, v)) {
            return Err(ParseErrorKind::DuplicateEdge(u, v));
        }
        Ok(())
    }

    fn push_edge(&mut self, u: VertexId, v: VertexId, weight: Weight, delay: Delay) {
        self.adjacency[u - 1].push(Edge {
            to: v,
            weight,
            delay,
        });
        self.m += 1;
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    #[inline]
    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn out_edges(&self, u: VertexId) -> &[Edge] {
        &self.adjacency[u - 1]
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> {
        1..=self.n()
    }

    /// Every edge as `(source, edge)` in vertex order, then file order.
    pub fn edges(&self) -> impl Iterator<Item = (VertexId, &Edge)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(i, out)| out.iter().map(move |e| (i + 1, e)))
    }

    /// In-neighbours of `v`, found by a full edge scan.
    pub fn in_neighbors(&self, v: VertexId) -> Vec<VertexId> {
        self.edges()
            .filter(|(_, e)| e.to == v)
            .map(|(u, _)| u)
            .collect()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        (1..=self.n()).contains(&v)
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<()> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            })
        }
    }

    pub fn edge_weight(&self, u: VertexId, v: VertexId) -> Option<Weight> {
        self.out_edges(u)
            .iter()
            .find(|e| e.to == v)
            .map(|e| e.weight)
    }

    pub fn edge(&self, u: VertexId, v: VertexId) -> Option<&Edge> {
        self.out_edges(u).iter().find(|e| e.to == v)
    }

    pub fn max_weight(&self) -> Weight {
        self.edges().map(|(_, e)| e.weight).fold(0.0, f64::max)
    }

    pub fn mean_weight(&self) -> Weight {
        if self.m == 0 {
            return 0.0;
        }
        self.edges().map(|(_, e)| e.weight).sum::<f64>() / self.m as f64
    }

    pub fn total_delay(&self) -> Delay {
        self.edges().map(|(_, e)| e.delay).sum()
    }

    /// Weight and delay sums along a vertex sequence, or `None` if some
    /// consecutive pair is not an edge.
    pub fn walk_cost(&self, walk: &[VertexId]) -> Option<(Weight, Delay)> {
        walk.windows(2).try_fold((0.0, 0), |(w, d), pair| {
            let e = self.edge(pair[0], pair[1])?;
            Some((w + e.weight, d + e.delay))
        })
    }

    /// Splits `s` into a pure source and a fresh sink `s' = n + 1`: every edge
    /// `(v, s)` becomes `(v, s')` with the same labels, out-edges of `s` are
    /// untouched. A shortest `s -> s'` path in the result is a shortest
    /// non-empty closed walk through `s` in `self`.
    pub fn augment_source(&self, s: VertexId) -> Result<(Graph, VertexId)> {
        self.check_vertex(s)?;
        let sink = self.n() + 1;
        let mut g = self.clone();
        g.adjacency.push(Vec::new());
        for v in self.in_neighbors(s) {
            for e in g.adjacency[v - 1].iter_mut().filter(|e| e.to == s) {
                e.to = sink;
            }
        }
        Ok((g, sink))
    }
}

/// A graph together with its delay budget.
#[derive(Debug, Clone, PartialEq)]
pub struct ProblemInstance {
    pub graph: Graph,
    pub bound: Delay,
}

impl ProblemInstance {
    pub fn new(graph: Graph, bound: Delay) -> Self {
        ProblemInstance { graph, bound }
    }

    /// Parses the whitespace-separated text format:
    ///
    /// ```text
    /// # comment
    /// n m [b]
    /// u v w [d]     (m times)
    /// ```
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

        let (header_line, header) = lines
            .next()
            .ok_or_else(|| Error::parse(1, ParseErrorKind::MissingHeader))?;
        let fields: Vec<&str> = header.split_whitespace().collect();
        if !(2..=3).contains(&fields.len()) {
            return Err(Error::parse(
                header_line,
                ParseErrorKind::MalformedHeader(format!(
                    "expected `n m [b]`, got {} fields",
                    fields.len()
                )),
            ));
        }
        let n = parse_count(fields[0]).map_err(|k| Error::parse(header_line, k))?;
        let m = parse_count(fields[1]).map_err(|k| Error::parse(header_line, k))?;
        let bound = match fields.get(2) {
            Some(tok) => parse_delay(tok).map_err(|k| Error::parse(header_line, k))?,
            None => 0,
        };

        let mut graph = Graph::with_vertices(n);
        let mut seen = HashSet::with_capacity(m);
        let mut last_line = header_line;
        for (line_no, line) in lines {
            last_line = line_no;
            if graph.m() == m {
                return Err(Error::parse(
                    line_no,
                    ParseErrorKind::EdgeCountMismatch {
                        expected: m,
                        found: m + 1,
                    },
                ));
            }
            let (u, v, w, d) = parse_edge(line).map_err(|k| Error::parse(line_no, k))?;
            graph
                .check_edge(u, v, w, &mut seen)
                .map_err(|k| Error::parse(line_no, k))?;
            graph.push_edge(u, v, w, d);
        }
        if graph.m() != m {
            return Err(Error::parse(
                last_line,
                ParseErrorKind::EdgeCountMismatch {
                    expected: m,
                    found: graph.m(),
                },
            ));
        }
        Ok(ProblemInstance { graph, bound })
    }

    pub fn from_path(path: impl AsRef<Path>) -> Result<Self> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path).map_err(|source| Error::File {
            path: path.to_path_buf(),
            source,
        })?;
        Self::parse(&text)
    }

    /// Serializes back to the text format; `parse(to_text())` is the identity.
    pub fn to_text(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for ProblemInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        writeln!(out, "{} {} {}", self.graph.n(), self.graph.m(), self.bound)?;
        for (u, e) in self.graph.edges() {
            writeln!(out, "{} {} {} {}", u, e.to, e.weight, e.delay)?;
        }
        f.write_str(&out)
    }
}

fn parse_count(tok: &str) -> std::result::Result<usize, ParseErrorKind> {
    tok.parse::<usize>().map_err(|_| {
        if tok.parse::<i64>().is_ok() {
            ParseErrorKind::MalformedHeader(format!("count `{tok}` must be non-negative"))
        } else {
            ParseErrorKind::NonNumeric(tok.to_string())
        }
    })
}

fn parse_delay(tok: &str) -> std::result::Result<Delay, ParseErrorKind> {
    match tok.parse::<i64>() {
        Ok(d) if d < 0 => Err(ParseErrorKind::NegativeDelay(d)),
        Ok(d) => Ok(d as Delay),
        Err(_) => tok
            .parse::<Delay>()
            .map_err(|_| ParseErrorKind::NonNumeric(tok.to_string())),
    }
}

fn parse_vertex(tok: &str) -> std::result::Result<VertexId, ParseErrorKind> {
    match tok.parse::<i64>() {
        // Out-of-range ids (including 0 and negatives) are reported by the
        // range check, which knows n.
        Ok(v) if v <= 0 => Ok(0),
        Ok(v) => Ok(v as VertexId),
        Err(_) => Err(ParseErrorKind::NonNumeric(tok.to_string())),
    }
}

fn parse_edge(
    line: &str,
) -> std::result::Result<(VertexId, VertexId, Weight, Delay), ParseErrorKind> {
    let fields: Vec<&str> = line.split_whitespace().collect();
    if !(3..=4).contains(&fields.len()) {
        return Err(ParseErrorKind::MalformedEdge(fields.len()));
    }
    let u = parse_vertex(fields[0])?;
    let v = parse_vertex(fields[1])?;
    let w: Weight = fields[2]
        .parse()
        .map_err(|_| ParseErrorKind::NonNumeric(fields[2].to_string()))?;
    let d = match fields.get(3) {
        Some(tok) => parse_delay(tok)?,
        None => 0,
    };
    Ok((u, v, w, d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{g2, k1};

    #[test]
    fn parses_g2() {
        let inst = ProblemInstance::parse("4 4 5\n1 2 2 1\n1 3 1 5\n2 3 1 1\n3 4 1 1\n").unwrap();
        assert_eq!(inst, g2());
        assert_eq!(inst.graph.m(), 4);
        assert_eq!(inst.bound, 5);
    }

    #[test]
    fn parses_k1() {
        let inst = ProblemInstance::parse("2 1 0\n1 2 7 2\n").unwrap();
        assert_eq!(inst, k1());
    }

    #[test]
    fn optional_fields_default_to_zero() {
        let inst = ProblemInstance::parse("# header comment\n\n2 1\n1 2 3.5\n").unwrap();
        assert_eq!(inst.bound, 0);
        assert_eq!(
            inst.graph.out_edges(1),
            &[Edge {
                to: 2,
                weight: 3.5,
                delay: 0
            }]
        );
    }

    fn parse_err(text: &str) -> (usize, ParseErrorKind) {
        match ProblemInstance::parse(text) {
            Err(Error::Parse { line, kind }) => (line, kind),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn negative_weight_reports_line() {
        assert_eq!(
            parse_err("2 1 0\n1 2 -3 0\n"),
            (2, ParseErrorKind::NegativeWeight(-3.0))
        );
    }

    #[test]
    fn rejects_bad_inputs_with_line_numbers() {
        assert_eq!(parse_err("").0, 1);
        assert!(matches!(
            parse_err("2\n").1,
            ParseErrorKind::MalformedHeader(_)
        ));
        assert_eq!(
            parse_err("2 1 0\n1 x 3 0\n"),
            (2, ParseErrorKind::NonNumeric("x".into()))
        );
        assert_eq!(
            parse_err("2 1 0\n1 3 3 0\n"),
            (2, ParseErrorKind::VertexOutOfRange { vertex: 3, n: 2 })
        );
        assert_eq!(
            parse_err("2 1 0\n\n# c\n1 2 3 -1\n"),
            (4, ParseErrorKind::NegativeDelay(-1))
        );
        assert_eq!(
            parse_err("2 2 0\n1 2 3 0\n1 2 4 0\n"),
            (3, ParseErrorKind::DuplicateEdge(1, 2))
        );
        assert_eq!(
            parse_err("2 1 0\n2 2 1 0\n"),
            (2, ParseErrorKind::SelfLoop(2))
        );
        assert_eq!(
            parse_err("3 2 0\n1 2 1 0\n"),
            (
                2,
                ParseErrorKind::EdgeCountMismatch {
                    expected: 2,
                    found: 1
                }
            )
        );
        assert!(matches!(
            parse_err("3 1 0\n1 2 1 0\n2 3 1 0\n"),
            (3, ParseErrorKind::EdgeCountMismatch { .. })
        ));
        assert!(matches!(
            parse_err("2 1 0\n1 2 nan 0\n").1,
            ParseErrorKind::NonFiniteWeight(_)
        ));
        assert!(matches!(
            parse_err("2 1 0\n1 2 1 1.5\n").1,
            ParseErrorKind::NonNumeric(_)
        ));
    }

    #[test]
    fn augment_redirects_in_edges_of_source() {
        let (g, sink) = g2().graph.augment_source(3).unwrap();
        assert_eq!(sink, 5);
        assert_eq!(g.n(), 5);
        assert_eq!(g.m(), 4);
        assert!(g.edge(1, 5).is_some() && g.edge(1, 3).is_none());
        assert!(g.edge(2, 5).is_some() && g.edge(2, 3).is_none());
        assert_eq!(
            g.edge(3, 4),
            Some(&Edge {
                to: 4,
                weight: 1.0,
                delay: 1
            })
        );
        assert_eq!(g.edge(1, 5).unwrap().delay, 5);
        assert!(g.in_neighbors(3).is_empty());
    }

    #[test]
    fn augment_without_in_edges_adds_isolated_sink() {
        let (g, sink) = k1().graph.augment_source(1).unwrap();
        assert_eq!(sink, 3);
        assert_eq!(g.out_edges(1), k1().graph.out_edges(1));
        assert!(g.out_edges(3).is_empty() && g.in_neighbors(3).is_empty());

        let (g, sink) = g2().graph.augment_source(1).unwrap();
        assert_eq!(sink, 5);
        for v in 1..=4 {
            assert_eq!(g.out_edges(v), g2().graph.out_edges(v));
        }
    }

    #[test]
    fn augment_rejects_out_of_range() {
        assert!(matches!(
            k1().graph.augment_source(3),
            Err(Error::VertexOutOfRange { vertex: 3, n: 2 })
        ));
    }

    #[test]
    fn text_round_trip() {
        let inst = g2();
        assert_eq!(ProblemInstance::parse(&inst.to_text()).unwrap(), inst);
    }
}
