//! Simple undirected graphs and vertex sets.
//!
//! A [`Graph`] is immutable after construction: vertices are dense ids
//! `0..n`, adjacency lists are sorted, and self-loops / parallel edges are
//! rejected at the door. All set-flavored operations take [`VertexSet`]s,
//! which are sorted, duplicate-free id lists.
//!
//! The module also owns the edge-list text format (a `"n m"` header followed
//! by one `"u v"` line per edge with `u < v`); parsing and serialization are
//! pure string transforms so they work without `std`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// An immutable simple undirected graph on vertices `0..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    m: usize,
}

impl Graph {
    /// The graph on `n` vertices with no edges.
    pub fn empty(n: usize) -> Graph {
        Graph {
            n,
            adj: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// The complete graph K_n.
    pub fn complete(n: usize) -> Graph {
        let adj = (0..n)
            .map(|v| (0..n).filter(|&w| w != v).collect())
            .collect();
        Graph {
            n,
            adj,
            m: n * n.saturating_sub(1) / 2,
        }
    }

    /// Builds a graph from an edge list. Edges may come in any order and
    /// either orientation; self-loops, duplicates and out-of-range ids are
    /// errors.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        let mut m = 0usize;
        for (u, v) in edges {
            if u >= n {
                return Err(Error::VertexOutOfRange { vertex: u, n });
            }
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            if u == v {
                return Err(Error::SelfLoop { vertex: u });
            }
            adj[u].push(v);
            adj[v].push(u);
            m += 1;
        }
        for (u, row) in adj.iter_mut().enumerate() {
            row.sort_unstable();
            if let Some(pair) = row.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateEdge { u, v: pair[0] });
            }
        }
        Ok(Graph { n, adj, m })
    }

    /// Number of vertices.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of edges; always half the degree sum.
    pub fn edge_count(&self) -> usize {
        self.m
    }

    /// Degree of `v`.
    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.adj[v].len())
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> Result<&[usize]> {
        self.check_vertex(v)?;
        Ok(&self.adj[v])
    }

    /// Whether `u` and `v` are adjacent. Out-of-range ids are simply not
    /// adjacent to anything.
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        if u >= self.n || v >= self.n || u == v {
            return false;
        }
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Iterates edges as `(u, v)` pairs with `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&&v| v > u).map(move |&v| (u, v)))
    }

    /// Largest degree; 0 for an edgeless or empty graph.
    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Smallest degree; 0 for an edgeless or empty graph.
    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// `Some(d)` if every vertex has degree exactly `d`; `None` otherwise
    /// (and for the empty vertex set).
    pub fn regular_degree(&self) -> Option<usize> {
        let d = self.adj.first()?.len();
        if self.adj.iter().all(|row| row.len() == d) {
            Some(d)
        } else {
            None
        }
    }

    /// Whether the graph has a single connected component. The empty graph
    /// and the one-vertex graph count as connected.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let mut seen = vec![false; self.n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut found = 1usize;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    found += 1;
                    stack.push(w);
                }
            }
        }
        found == self.n
    }

    /// The neighborhood N(X): every vertex with at least one neighbor in
    /// `x`. Note N(X) may intersect `x` itself.
    pub fn neighborhood_of_set(&self, x: &VertexSet) -> Result<VertexSet> {
        self.check_set(x)?;
        let mut hit = vec![false; self.n];
        for &v in x.iter() {
            for &w in &self.adj[v] {
                hit[w] = true;
            }
        }
        Ok(VertexSet {
            members: (0..self.n).filter(|&v| hit[v]).collect(),
        })
    }

    /// Number of edges with one endpoint in `a` and the other in `b`.
    /// The sets must be disjoint; each crossing edge is counted once.
    pub fn edges_between(&self, a: &VertexSet, b: &VertexSet) -> Result<usize> {
        self.check_set(a)?;
        self.check_set(b)?;
        if let Some(v) = a.intersection_witness(b) {
            return Err(Error::OverlappingSets { vertex: v });
        }
        let mut in_b = vec![false; self.n];
        for &v in b.iter() {
            in_b[v] = true;
        }
        let mut count = 0usize;
        for &v in a.iter() {
            count += self.adj[v].iter().filter(|&&w| in_b[w]).count();
        }
        Ok(count)
    }

    /// Number of edges with both endpoints in `x`.
    pub fn edges_within(&self, x: &VertexSet) -> Result<usize> {
        self.check_set(x)?;
        let mut in_x = vec![false; self.n];
        for &v in x.iter() {
            in_x[v] = true;
        }
        let mut twice = 0usize;
        for &v in x.iter() {
            twice += self.adj[v].iter().filter(|&&w| in_x[w]).count();
        }
        Ok(twice / 2)
    }

    /// The edges of the induced subgraph G[X], as pairs with `u < v`.
    pub fn induced_edges(&self, x: &VertexSet) -> Result<Vec<(usize, usize)>> {
        self.check_set(x)?;
        let mut in_x = vec![false; self.n];
        for &v in x.iter() {
            in_x[v] = true;
        }
        let mut out = Vec::new();
        for &v in x.iter() {
            for &w in &self.adj[v] {
                if w > v && in_x[w] {
                    out.push((v, w));
                }
            }
        }
        Ok(out)
    }

    /// The induced subgraph G[X] on fresh labels: local vertex `i` stands
    /// for `x.as_slice()[i]`.
    pub fn induced(&self, x: &VertexSet) -> Result<Graph> {
        let edges = self.induced_edges(x)?;
        let mut local = vec![usize::MAX; self.n];
        for (i, &v) in x.iter().enumerate() {
            local[v] = i;
        }
        Graph::from_edges(
            x.len(),
            edges.into_iter().map(|(u, v)| (local[u], local[v])),
        )
    }

    /// G - H: removes every edge of `h`. Errors unless `h` is a subgraph of
    /// `self` on the same vertex set; the error names one offending edge.
    pub fn subtract(&self, h: &Graph) -> Result<Graph> {
        self.check_same_size(h)?;
        for (u, v) in h.edges() {
            if !self.has_edge(u, v) {
                return Err(Error::NotSubgraph { u, v });
            }
        }
        let mut adj: Vec<Vec<usize>> = Vec::with_capacity(self.n);
        for v in 0..self.n {
            adj.push(
                self.adj[v]
                    .iter()
                    .copied()
                    .filter(|&w| !h.has_edge(v, w))
                    .collect(),
            );
        }
        let m = self.m - h.m;
        Ok(Graph { n: self.n, adj, m })
    }

    /// G ∪ H: the union of the edge sets. Shared edges are kept once.
    pub fn union(&self, h: &Graph) -> Result<Graph> {
        self.check_same_size(h)?;
        let mut adj: Vec<Vec<usize>> = Vec::with_capacity(self.n);
        let mut twice = 0usize;
        for v in 0..self.n {
            let mut row = merge_sorted_dedup(&self.adj[v], &h.adj[v]);
            row.shrink_to_fit();
            twice += row.len();
            adj.push(row);
        }
        Ok(Graph {
            n: self.n,
            adj,
            m: twice / 2,
        })
    }

    /// G △ H: edges in exactly one of the two graphs.
    pub fn symmetric_difference(&self, h: &Graph) -> Result<Graph> {
        self.check_same_size(h)?;
        let mut adj: Vec<Vec<usize>> = Vec::with_capacity(self.n);
        let mut twice = 0usize;
        for v in 0..self.n {
            let row = xor_sorted(&self.adj[v], &h.adj[v]);
            twice += row.len();
            adj.push(row);
        }
        Ok(Graph {
            n: self.n,
            adj,
            m: twice / 2,
        })
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    fn check_set(&self, x: &VertexSet) -> Result<()> {
        if let Some(&v) = x.members.last() {
            if v >= self.n {
                return Err(Error::VertexOutOfRange { vertex: v, n: self.n });
            }
        }
        Ok(())
    }

    fn check_same_size(&self, other: &Graph) -> Result<()> {
        if self.n != other.n {
            Err(Error::SizeMismatch {
                left: self.n,
                right: other.n,
            })
        } else {
            Ok(())
        }
    }
}

fn merge_sorted_dedup(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            core::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            core::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            core::cmp::Ordering::Equal => {
                out.push(a[i]);
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

fn xor_sorted(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = Vec::new();
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            core::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            core::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            core::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

/// A sorted, duplicate-free set of vertex ids.
///
/// Ids are validated against a host graph by the operations that take sets,
/// not at construction, so a set can be built before the graph it will be
/// used with.
#[derive(Debug, Clone, PartialEq, Eq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct VertexSet {
    members: Vec<usize>,
}

impl VertexSet {
    /// Builds a set from arbitrary ids; sorts and removes duplicates.
    pub fn new(mut members: Vec<usize>) -> VertexSet {
        members.sort_unstable();
        members.dedup();
        VertexSet { members }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> core::slice::Iter<'_, usize> {
        self.members.iter()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.members
    }

    /// The complement within `0..n`. Members at or above `n` are dropped.
    pub fn complement(&self, n: usize) -> VertexSet {
        VertexSet {
            members: (0..n).filter(|&v| !self.contains(v)).collect(),
        }
    }

    /// Some shared vertex if the sets intersect.
    fn intersection_witness(&self, other: &VertexSet) -> Option<usize> {
        let (mut i, mut j) = (0, 0);
        while i < self.members.len() && j < other.members.len() {
            match self.members[i].cmp(&other.members[j]) {
                core::cmp::Ordering::Less => i += 1,
                core::cmp::Ordering::Greater => j += 1,
                core::cmp::Ordering::Equal => return Some(self.members[i]),
            }
        }
        None
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::new(iter.into_iter().collect())
    }
}

// ===== edge-list text format =====

/// Parses the edge-list text format: a `"n m"` header, then `m` lines
/// `"u v"` with `u < v`. Blank lines are not allowed between records;
/// a single trailing newline is fine.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "missing header".to_string(),
    })?;
    let (n, m) = {
        let mut it = header.split_whitespace();
        let n = parse_usize(it.next(), 1, "vertex count")?;
        let m = parse_usize(it.next(), 1, "edge count")?;
        if it.next().is_some() {
            return Err(Error::Parse {
                line: 1,
                message: "header must be exactly \"n m\"".to_string(),
            });
        }
        (n, m)
    };
    let mut edges = Vec::with_capacity(m);
    for (idx, line) in lines {
        let lineno = idx + 1;
        if line.trim().is_empty() {
            return Err(Error::Parse {
                line: lineno,
                message: "blank line".to_string(),
            });
        }
        let mut it = line.split_whitespace();
        let u = parse_usize(it.next(), lineno, "first endpoint")?;
        let v = parse_usize(it.next(), lineno, "second endpoint")?;
        if it.next().is_some() {
            return Err(Error::Parse {
                line: lineno,
                message: "edge line must be exactly \"u v\"".to_string(),
            });
        }
        if u == v {
            return Err(Error::Parse {
                line: lineno,
                message: format!("self-loop at vertex {u}"),
            });
        }
        if u > v {
            return Err(Error::Parse {
                line: lineno,
                message: format!("endpoints must satisfy u < v, got {u} {v}"),
            });
        }
        edges.push((u, v, lineno));
    }
    if edges.len() != m {
        return Err(Error::Parse {
            line: edges.len() + 1,
            message: format!("header promised {m} edges, found {}", edges.len()),
        });
    }
    // Build with line-accurate duplicate/range reporting.
    let mut g_edges = Vec::with_capacity(m);
    let mut seen = alloc::collections::BTreeSet::new();
    for (u, v, lineno) in edges {
        if v >= n {
            return Err(Error::Parse {
                line: lineno,
                message: format!("vertex {v} out of range for n={n}"),
            });
        }
        if !seen.insert((u, v)) {
            return Err(Error::Parse {
                line: lineno,
                message: format!("duplicate edge {u} {v}"),
            });
        }
        g_edges.push((u, v));
    }
    Graph::from_edges(n, g_edges)
}

fn parse_usize(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let tok = tok.ok_or(Error::Parse {
        line,
        message: format!("missing {what}"),
    })?;
    tok.parse::<usize>().map_err(|_| Error::Parse {
        line,
        message: format!("{what} is not a non-negative integer: {tok:?}"),
    })
}

/// Serializes a graph in the edge-list text format, edges ascending.
/// `parse_edge_list(serialize_edge_list(g)) == g` for every graph.
pub fn serialize_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    out.push_str(&format!("{} {}\n", g.n(), g.edge_count()));
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c5() -> Graph {
        Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (0, 4)]).unwrap()
    }

    fn p4() -> Graph {
        Graph::from_edges(4, [(0, 1), (1, 2), (2, 3)]).unwrap()
    }

    #[test]
    fn construction_rejects_bad_edges() {
        assert!(matches!(
            Graph::from_edges(3, [(0, 0)]),
            Err(Error::SelfLoop { vertex: 0 })
        ));
        assert!(matches!(
            Graph::from_edges(3, [(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        ));
        assert!(matches!(
            Graph::from_edges(3, [(0, 1), (1, 0)]),
            Err(Error::DuplicateEdge { .. })
        ));
    }

    #[test]
    fn k4_basics() {
        let g = Graph::complete(4);
        assert_eq!(g.edge_count(), 6);
        assert_eq!(g.max_degree(), 3);
        assert_eq!(g.min_degree(), 3);
        assert_eq!(g.regular_degree(), Some(3));
        let a = VertexSet::new(vec![0, 1]);
        let b = VertexSet::new(vec![2, 3]);
        assert_eq!(g.edges_between(&a, &b).unwrap(), 4);
    }

    #[test]
    fn edgeless_degrees() {
        let g = Graph::empty(7);
        assert_eq!(g.max_degree(), 0);
        assert_eq!(g.min_degree(), 0);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn c5_set_counts() {
        let g = c5();
        let a = VertexSet::new(vec![0]);
        let b = VertexSet::new(vec![2, 3]);
        assert_eq!(g.edges_between(&a, &b).unwrap(), 0);
        let x = VertexSet::new(vec![0, 1, 2]);
        assert_eq!(g.edges_within(&x).unwrap(), 2);
    }

    #[test]
    fn edges_between_requires_disjoint_sets() {
        let g = c5();
        let a = VertexSet::new(vec![0, 1]);
        let b = VertexSet::new(vec![1, 2]);
        assert_eq!(
            g.edges_between(&a, &b),
            Err(Error::OverlappingSets { vertex: 1 })
        );
    }

    #[test]
    fn neighborhood_on_path() {
        let g = p4();
        let x = VertexSet::new(vec![1, 2]);
        let nx = g.neighborhood_of_set(&x).unwrap();
        assert_eq!(nx.as_slice(), &[0, 1, 2, 3]);
    }

    #[test]
    fn star_degrees() {
        let g = Graph::from_edges(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(g.max_degree(), 3);
        assert_eq!(g.min_degree(), 1);
        assert_eq!(g.regular_degree(), None);
    }

    #[test]
    fn subtract_requires_subgraph() {
        let g = p4();
        let h = Graph::from_edges(4, [(0, 2)]).unwrap();
        assert_eq!(g.subtract(&h), Err(Error::NotSubgraph { u: 0, v: 2 }));

        let h2 = Graph::from_edges(4, [(1, 2)]).unwrap();
        let diff = g.subtract(&h2).unwrap();
        assert_eq!(diff.edge_count(), 2);
        assert!(diff.has_edge(0, 1) && diff.has_edge(2, 3) && !diff.has_edge(1, 2));
    }

    #[test]
    fn symmetric_difference_small() {
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        let h = Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap();
        let d = g.symmetric_difference(&h).unwrap();
        assert_eq!(d.edge_count(), 1);
        assert!(d.has_edge(1, 2));

        let mismatch = Graph::empty(4);
        assert_eq!(
            g.symmetric_difference(&mismatch),
            Err(Error::SizeMismatch { left: 3, right: 4 })
        );
    }

    #[test]
    fn union_then_subtract_round_trip() {
        let g = c5();
        let h = Graph::from_edges(5, [(1, 2), (3, 4)]).unwrap();
        let diff = g.subtract(&h).unwrap();
        assert_eq!(diff.union(&h).unwrap(), g);
    }

    #[test]
    fn handshake_identity() {
        let g = c5();
        let degree_sum: usize = (0..5).map(|v| g.degree(v).unwrap()).sum();
        assert_eq!(degree_sum, 2 * g.edge_count());
    }

    #[test]
    fn edge_list_round_trip() {
        let g = c5();
        let text = serialize_edge_list(&g);
        assert_eq!(parse_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn parse_reports_line_numbers() {
        let text = "3 2\n0 1\n1 1\n";
        match parse_edge_list(text) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("expected parse error, got {other:?}"),
        }
        let text = "3 2\n0 1\n2 1\n";
        match parse_edge_list(text) {
            Err(Error::Parse { line, .. }) => assert_eq!(line, 3),
            other => panic!("expected parse error, got {other:?}"),
        }
        let text = "3 3\n0 1\n1 2\n";
        assert!(matches!(parse_edge_list(text), Err(Error::Parse { .. })));
    }

    #[test]
    fn complement_and_membership() {
        let s = VertexSet::new(vec![3, 1, 1]);
        assert_eq!(s.as_slice(), &[1, 3]);
        assert!(s.contains(3) && !s.contains(2));
        assert_eq!(s.complement(5).as_slice(), &[0, 2, 4]);
    }
}
