//! Immutable simple undirected graphs over `0..n`.

use std::collections::VecDeque;
use std::fmt::Write as _;
use std::str::FromStr;

use crate::bitset::VertexSet;
use crate::error::{Error, Result};

/// A simple undirected graph with bitset adjacency rows.
///
/// Values are immutable once built; every construction returns a new graph.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
    m: usize,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, m={})", self.n, self.m)
    }
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse to one.
    pub fn build(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut adj = vec![VertexSet::new(n); n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Self::from_rows(adj))
    }

    fn from_rows(adj: Vec<VertexSet>) -> Self {
        let n = adj.len();
        let m = adj.iter().map(VertexSet::len).sum::<usize>() / 2;
        Graph { n, adj, m }
    }

    /// Builds a graph from a symmetric predicate on vertex pairs `u < v`.
    pub fn from_fn<F: FnMut(usize, usize) -> bool>(n: usize, mut f: F) -> Self {
        let mut adj = vec![VertexSet::new(n); n];
        for u in 0..n {
            for v in u + 1..n {
                if f(u, v) {
                    adj[u].insert(v);
                    adj[v].insert(u);
                }
            }
        }
        Self::from_rows(adj)
    }

    pub fn empty(n: usize) -> Self {
        Self::from_rows(vec![VertexSet::new(n); n])
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(v)
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    pub fn min_degree(&self) -> usize {
        self.degrees().into_iter().min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
            .collect()
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    /// Checks adjacency symmetry, loop-freeness and index ranges.
    pub fn audit(&self) -> bool {
        self.adj.len() == self.n
            && (0..self.n).all(|u| {
                self.adj[u].universe() == self.n
                    && !self.adj[u].contains(u)
                    && self.adj[u].iter().all(|v| v < self.n && self.adj[v].contains(u))
            })
    }

    pub fn complement(&self) -> Self {
        let adj = (0..self.n)
            .map(|u| {
                let mut row = self.adj[u].complement();
                row.remove(u);
                row
            })
            .collect();
        Self::from_rows(adj)
    }

    /// Disjoint union; block `i` occupies the indices after blocks `0..i`.
    pub fn disjoint_union(gs: &[Graph]) -> Self {
        let n: usize = gs.iter().map(Graph::n).sum();
        let mut edges = Vec::new();
        let mut offset = 0;
        for g in gs {
            edges.extend(g.edges().into_iter().map(|(u, v)| (u + offset, v + offset)));
            offset += g.n;
        }
        Self::build(n, &edges).expect("shifted edges stay in range")
    }

    /// Disjoint union of `g` and `h` plus every edge between the two blocks.
    pub fn join(g: &Graph, h: &Graph) -> Self {
        let base = Self::disjoint_union(&[g.clone(), h.clone()]);
        let mut edges = base.edges();
        for u in 0..g.n {
            for v in 0..h.n {
                edges.push((u, g.n + v));
            }
        }
        Self::build(base.n, &edges).expect("join edges stay in range")
    }

    /// Line graph; vertex `i` is the `i`-th edge of [`Graph::edges`].
    pub fn line_graph(&self) -> Self {
        let edges = self.edges();
        Self::from_fn(edges.len(), |i, j| {
            let (a, b) = edges[i];
            let (c, d) = edges[j];
            a == c || a == d || b == c || b == d
        })
    }

    /// Subgraph induced on `keep`, relabelled in increasing order.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> Self {
        let verts = keep.to_vec();
        Self::from_fn(verts.len(), |i, j| self.has_edge(verts[i], verts[j]))
    }

    /// Connected components of `G - s`, each as a vertex set of the full
    /// universe, ordered by smallest member.
    pub fn components_after_removal(&self, s: &VertexSet) -> (usize, Vec<VertexSet>) {
        let mut rest = s.complement();
        let mut comps = Vec::new();
        while let Some(start) = rest.first() {
            let mut comp = VertexSet::new(self.n);
            let mut queue = VecDeque::from([start]);
            rest.remove(start);
            comp.insert(start);
            while let Some(u) = queue.pop_front() {
                for w in self.adj[u].iter() {
                    if rest.contains(w) {
                        rest.remove(w);
                        comp.insert(w);
                        queue.push_back(w);
                    }
                }
            }
            comps.push(comp);
        }
        (comps.len(), comps)
    }

    pub fn component_count(&self) -> usize {
        self.components_after_removal(&VertexSet::new(self.n)).0
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    pub fn is_complete(&self) -> bool {
        self.m == self.n * self.n.saturating_sub(1) / 2
    }

    /// `Some(k)` when every vertex has degree `k`.
    pub fn regularity(&self) -> Option<usize> {
        let mut degs = (0..self.n).map(|v| self.degree(v));
        let k = degs.next().unwrap_or(0);
        degs.all(|d| d == k).then_some(k)
    }

    pub fn is_independent(&self, s: &VertexSet) -> bool {
        s.iter().all(|v| self.adj[v].is_disjoint(s))
    }

    /// A proper 2-colouring, if one exists.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut color: Vec<Option<bool>> = vec![None; self.n];
        for s in 0..self.n {
            if color[s].is_some() {
                continue;
            }
            color[s] = Some(false);
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                let cu = color[u].unwrap();
                for w in self.adj[u].iter() {
                    match color[w] {
                        None => {
                            color[w] = Some(!cu);
                            queue.push_back(w);
                        }
                        Some(cw) if cw == cu => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(color.into_iter().map(Option::unwrap).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// True when no vertex has three pairwise non-adjacent neighbours.
    pub fn is_claw_free(&self) -> bool {
        (0..self.n).all(|c| {
            let nb = self.adj[c].to_vec();
            nb.iter().enumerate().all(|(i, &a)| {
                nb[i + 1..].iter().enumerate().all(|(j, &b)| {
                    self.has_edge(a, b)
                        || nb[i + j + 2..]
                            .iter()
                            .all(|&d| self.has_edge(a, d) || self.has_edge(b, d))
                })
            })
        })
    }

    /// Row-major dense adjacency matrix.
    pub fn adjacency_matrix(&self) -> Vec<f64> {
        let mut a = vec![0.0; self.n * self.n];
        for (u, v) in self.edges() {
            a[u * self.n + v] = 1.0;
            a[v * self.n + u] = 1.0;
        }
        a
    }

    /// Writes the interchange format: `n m` then one sorted `u v` line per edge.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n, self.m);
        for (u, v) in self.edges() {
            writeln!(out, "{u} {v}").unwrap();
        }
        out
    }
}

impl FromStr for Graph {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = lines.next().ok_or_else(|| Error::Parse("empty graph file".into()))?;
        let nums = parse_pair(header)?;
        let (n, m) = nums;
        let mut edges = Vec::with_capacity(m);
        for line in lines {
            edges.push(parse_pair(line)?);
        }
        if edges.len() != m {
            return Err(Error::Parse(format!("header declares {m} edges, found {}", edges.len())));
        }
        let g = Graph::build(n, &edges)?;
        if g.edge_count() != m {
            return Err(Error::Parse("duplicate edges in graph file".into()));
        }
        Ok(g)
    }
}

/// Brute-force isomorphism test with degree-compatible backtracking.
/// Only meant for graphs of a dozen or so vertices.
pub fn isomorphic_small(g: &Graph, h: &Graph) -> bool {
    fn extend(g: &Graph, h: &Graph, perm: &mut Vec<usize>, used: &mut [bool]) -> bool {
        let i = perm.len();
        if i == g.n() {
            return true;
        }
        for j in 0..h.n() {
            if used[j] || g.degree(i) != h.degree(j) {
                continue;
            }
            if (0..i).all(|p| g.has_edge(p, i) == h.has_edge(perm[p], j)) {
                used[j] = true;
                perm.push(j);
                if extend(g, h, perm, used) {
                    return true;
                }
                perm.pop();
                used[j] = false;
            }
        }
        false
    }
    let mut dg = g.degrees();
    let mut dh = h.degrees();
    dg.sort_unstable();
    dh.sort_unstable();
    dg == dh && extend(g, h, &mut Vec::new(), &mut vec![false; h.n()])
}

fn parse_pair(line: &str) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace().map(|t| {
        t.parse::<usize>()
            .map_err(|e| Error::Parse(format!("`{line}`: {e}")))
    });
    match (it.next(), it.next(), it.next()) {
        (Some(a), Some(b), None) => Ok((a?, b?)),
        _ => Err(Error::Parse(format!("expected two integers, got `{line}`"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k(n: usize) -> Graph {
        Graph::from_fn(n, |_, _| true)
    }

    #[test]
    fn build_small_graphs() {
        let k2 = Graph::build(2, &[(0, 1)]).unwrap();
        assert_eq!(k2.edge_count(), 1);
        let k3 = Graph::build(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(k3.regularity(), Some(2));
        let c4 = Graph::build(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(c4.regularity(), Some(2));
        assert!(c4.audit());
    }

    #[test]
    fn build_rejects_bad_edges() {
        assert_eq!(
            Graph::build(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        );
        assert_eq!(Graph::build(3, &[(1, 1)]), Err(Error::SelfLoop(1)));
    }

    #[test]
    fn build_dedups_multi_edges() {
        let g = Graph::build(3, &[(0, 1), (1, 0), (0, 1)]).unwrap();
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn complement_of_triangle_is_empty() {
        assert_eq!(k(3).complement(), Graph::empty(3));
    }

    #[test]
    fn union_cases() {
        assert_eq!(Graph::disjoint_union(&[]).n(), 0);
        let g = Graph::disjoint_union(&[k(3), k(2)]);
        assert_eq!((g.n(), g.edge_count(), g.component_count()), (5, 4, 2));
        let m4 = Graph::disjoint_union(&[k(2), k(2)]);
        assert_eq!((m4.n(), m4.edge_count()), (4, 2));
        assert_eq!(m4.complement().complement(), m4);
    }

    #[test]
    fn join_cases() {
        assert_eq!(Graph::join(&Graph::empty(1), &Graph::empty(1)), k(2));
        let x3 = Graph::join(&Graph::empty(2), &k(2));
        assert_eq!(x3.degrees(), vec![2, 2, 3, 3]);
        let x4 = Graph::join(&Graph::empty(2), &k(3));
        assert_eq!(x4.degrees().iter().filter(|&&d| d == 4).count(), 3);
    }

    #[test]
    fn line_graphs() {
        assert_eq!(k(3).line_graph().regularity(), Some(2));
        assert_eq!(k(3).line_graph().n(), 3);
        for v in 3..=8 {
            let l = k(v).line_graph();
            assert_eq!(l.n(), v * (v - 1) / 2);
            assert_eq!(l.edge_count(), v * (v - 1) * (v - 2) / 2);
        }
    }

    #[test]
    fn components_after_removal_cases() {
        let c4 = Graph::build(4, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let (c, comps) = c4.components_after_removal(&VertexSet::from_indices(4, [0, 2]));
        assert_eq!(c, 2);
        assert_eq!(comps[0].to_vec(), vec![1]);
        assert_eq!(c4.components_after_removal(&VertexSet::new(4)).0, 1);
        assert_eq!(c4.components_after_removal(&VertexSet::full(4)).0, 0);
    }

    #[test]
    fn regularity_cases() {
        assert_eq!(k(4).regularity(), Some(3));
        let x3 = Graph::join(&Graph::empty(2), &k(2));
        assert_eq!(x3.regularity(), None);
    }

    #[test]
    fn text_round_trip_and_errors() {
        let g = Graph::build(5, &[(3, 4), (0, 2), (1, 2)]).unwrap();
        let text = g.to_text();
        assert_eq!(text, "5 3\n0 2\n1 2\n3 4\n");
        assert_eq!(text.parse::<Graph>().unwrap(), g);
        assert!("3 2\n0 1\n".parse::<Graph>().is_err());
        assert!("3 1\n0 x\n".parse::<Graph>().is_err());
        assert!("".parse::<Graph>().is_err());
        assert!("2 2\n0 1\n1 0\n".parse::<Graph>().is_err());
    }

    #[test]
    fn claw_free_and_bipartite() {
        let star = Graph::build(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(!star.is_claw_free());
        assert!(star.is_bipartite());
        assert!(k(4).is_claw_free());
        assert!(!k(3).is_bipartite());
    }
}
