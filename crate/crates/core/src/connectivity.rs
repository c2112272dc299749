//! Vertex and edge connectivity by unit-capacity max-flow, and exact
//! independence numbers by branch and bound.

use std::collections::VecDeque;

use serde::Serialize;

use crate::bitset::{with_width, Bits};
use crate::error::{Error, Result};
use crate::families::combinations;
use crate::graph::Graph;
use crate::VertexSet;

/// Residual network with unit arc capacities, stored as paired arcs.
struct FlowNet {
    head: Vec<usize>,
    cap: Vec<i32>,
    out: Vec<Vec<usize>>,
}

impl FlowNet {
    fn new(nodes: usize) -> Self {
        FlowNet {
            head: Vec::new(),
            cap: Vec::new(),
            out: vec![Vec::new(); nodes],
        }
    }

    fn add_arc(&mut self, u: usize, v: usize, cap: i32) {
        self.out[u].push(self.head.len());
        self.head.push(v);
        self.cap.push(cap);
        self.out[v].push(self.head.len());
        self.head.push(u);
        self.cap.push(0);
    }

    /// Augments along BFS paths until `limit` units flow or none remain.
    fn max_flow(&mut self, s: usize, t: usize, limit: usize) -> usize {
        let mut flow = 0;
        while flow < limit {
            let mut pred = vec![usize::MAX; self.out.len()];
            pred[s] = usize::MAX - 1;
            let mut queue = VecDeque::from([s]);
            while let Some(u) = queue.pop_front() {
                if u == t {
                    break;
                }
                for &a in &self.out[u] {
                    let v = self.head[a];
                    if self.cap[a] > 0 && pred[v] == usize::MAX {
                        pred[v] = a;
                        queue.push_back(v);
                    }
                }
            }
            if pred[t] == usize::MAX {
                break;
            }
            let mut v = t;
            while v != s {
                let a = pred[v];
                self.cap[a] -= 1;
                self.cap[a ^ 1] += 1;
                v = self.head[a ^ 1];
            }
            flow += 1;
        }
        flow
    }

    fn reachable(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.out.len()];
        seen[s] = true;
        let mut stack = vec![s];
        while let Some(u) = stack.pop() {
            for &a in &self.out[u] {
                let v = self.head[a];
                if self.cap[a] > 0 && !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EdgeCut {
    pub value: usize,
    pub edges: Vec<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VertexCut {
    pub value: usize,
    /// `None` for complete graphs, which have no separating set.
    pub cut: Option<VertexSet>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConnectivityReport {
    pub vertex_connectivity: usize,
    pub edge_connectivity: usize,
    pub vertex_cut: Option<VertexSet>,
    pub edge_cut: Vec<(usize, usize)>,
}

/// Edge connectivity from source 0 to every other vertex; the cut is the arc
/// boundary of the residual reachable set of the best sink.
pub fn edge_connectivity(g: &Graph) -> EdgeCut {
    let n = g.n();
    if n < 2 || !g.is_connected() {
        return EdgeCut {
            value: 0,
            edges: Vec::new(),
        };
    }
    let mut best: Option<(usize, Vec<bool>)> = None;
    for t in 1..n {
        let mut net = FlowNet::new(n);
        for (u, v) in g.edges() {
            net.add_arc(u, v, 1);
            net.add_arc(v, u, 1);
        }
        let limit = best.as_ref().map_or(usize::MAX, |b| b.0);
        let f = net.max_flow(0, t, limit);
        if f < limit {
            best = Some((f, net.reachable(0)));
        }
    }
    let (value, side) = best.expect("n >= 2");
    let edges = g
        .edges()
        .into_iter()
        .filter(|&(u, v)| side[u] != side[v])
        .collect();
    EdgeCut { value, edges }
}

/// Minimum `s`-`t` vertex separator for non-adjacent `s`, `t`, using the split
/// network `v_in = 2v`, `v_out = 2v + 1`.
fn min_vertex_separator(g: &Graph, s: usize, t: usize, limit: usize) -> (usize, Option<VertexSet>) {
    let n = g.n();
    let mut net = FlowNet::new(2 * n);
    let big = n as i32 + 1;
    for v in 0..n {
        let c = if v == s || v == t { big } else { 1 };
        net.add_arc(2 * v, 2 * v + 1, c);
    }
    for (u, v) in g.edges() {
        net.add_arc(2 * u + 1, 2 * v, big);
        net.add_arc(2 * v + 1, 2 * u, big);
    }
    let f = net.max_flow(2 * s + 1, 2 * t, limit);
    if f >= limit {
        return (f, None);
    }
    let seen = net.reachable(2 * s + 1);
    let cut = VertexSet::from_indices(n, (0..n).filter(|&v| seen[2 * v] && !seen[2 * v + 1]));
    (f, Some(cut))
}

/// Vertex connectivity over all non-adjacent pairs; complete graphs report
/// `n - 1` with no cut.
pub fn vertex_connectivity(g: &Graph) -> VertexCut {
    let n = g.n();
    if g.is_complete() {
        return VertexCut {
            value: n.saturating_sub(1),
            cut: None,
        };
    }
    if !g.is_connected() {
        return VertexCut {
            value: 0,
            cut: Some(VertexSet::new(n)),
        };
    }
    let mut value = n - 1;
    let mut cut = None;
    for s in 0..n {
        for t in s + 1..n {
            if g.has_edge(s, t) {
                continue;
            }
            let (f, c) = min_vertex_separator(g, s, t, value);
            if f < value || cut.is_none() {
                if let Some(c) = c {
                    value = f;
                    cut = Some(c);
                }
            }
        }
    }
    VertexCut { value, cut }
}

pub fn connectivity_report(g: &Graph) -> ConnectivityReport {
    let v = vertex_connectivity(g);
    let e = edge_connectivity(g);
    ConnectivityReport {
        vertex_connectivity: v.value,
        edge_connectivity: e.value,
        vertex_cut: v.cut,
        edge_cut: e.edges,
    }
}

/// Every vertex set of size `kappa` whose removal disconnects `g`, found by
/// direct enumeration. Intended for small graphs.
pub fn all_minimum_vertex_cuts(g: &Graph) -> Vec<VertexSet> {
    let kappa = vertex_connectivity(g);
    if kappa.cut.is_none() {
        return Vec::new();
    }
    combinations(g.n(), kappa.value)
        .into_iter()
        .map(|c| VertexSet::from_indices(g.n(), c))
        .filter(|s| g.components_after_removal(s).0 >= 2)
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndependenceResult {
    pub alpha: usize,
    pub witness: VertexSet,
    /// All maximum independent sets in lexicographic order, when requested.
    pub all_maximum: Option<Vec<VertexSet>>,
}

struct Mis<'a, const W: usize> {
    adj: &'a [Bits<W>],
    best: usize,
    witness: Bits<W>,
    enumerate: bool,
    all: Vec<Bits<W>>,
}

impl<const W: usize> Mis<'_, W> {
    /// Greedy partition of `p` into cliques; the number of cliques bounds the
    /// independence number of `G[p]`.
    fn clique_cover(&self, mut p: Bits<W>) -> usize {
        let mut count = 0;
        while let Some(v) = p.first() {
            count += 1;
            p.remove(v);
            let mut cand = p.and(self.adj[v]);
            while let Some(u) = cand.first() {
                p.remove(u);
                cand = cand.and(self.adj[u]);
                cand.remove(u);
            }
        }
        count
    }

    fn search(&mut self, chosen: Bits<W>, size: usize, p: Bits<W>) {
        if p.is_empty() {
            if size > self.best {
                self.best = size;
                self.witness = chosen;
                self.all.clear();
            }
            if self.enumerate && size == self.best {
                self.all.push(chosen);
            }
            return;
        }
        let bound = size + self.clique_cover(p);
        if bound < self.best || (bound == self.best && !self.enumerate) {
            return;
        }
        // Branch on the lowest-index vertex of maximum degree inside `p`.
        let mut pick = None;
        let mut pick_deg = 0;
        for v in p.iter() {
            let d = self.adj[v].and(p).count();
            if pick.is_none() || d > pick_deg {
                pick = Some(v);
                pick_deg = d;
            }
        }
        let v = pick.expect("p non-empty");
        let mut with = chosen;
        with.insert(v);
        let rest = p.and_not(self.adj[v]);
        let mut rest = rest;
        rest.remove(v);
        self.search(with, size + 1, rest);
        if pick_deg > 0 {
            let mut without = p;
            without.remove(v);
            self.search(chosen, size, without);
        }
    }
}

fn mis_kernel<const W: usize>(g: &Graph, enumerate: bool) -> IndependenceResult {
    let n = g.n();
    let adj: Vec<Bits<W>> = (0..n).map(|v| Bits::from_set(g.neighbors(v))).collect();
    let mut full = Bits::<W>::EMPTY;
    for v in 0..n {
        full.insert(v);
    }
    let mut m = Mis {
        adj: &adj,
        best: 0,
        witness: Bits::EMPTY,
        enumerate,
        all: Vec::new(),
    };
    m.search(Bits::EMPTY, 0, full);
    let all_maximum = enumerate.then(|| {
        let mut sets: Vec<VertexSet> = m.all.iter().map(|b| b.to_set(n)).collect();
        sets.sort();
        sets.dedup();
        sets
    });
    let witness = match &all_maximum {
        Some(sets) if !sets.is_empty() => sets[0].clone(),
        _ => m.witness.to_set(n),
    };
    IndependenceResult {
        alpha: m.best,
        witness,
        all_maximum,
    }
}

/// Exact independence number. With `enumerate_all`, every maximum
/// independent set is listed and the witness is the lexicographically first.
pub fn max_independent_set(g: &Graph, enumerate_all: bool) -> Result<IndependenceResult> {
    with_width!(g.n(), W => Ok(mis_kernel::<W>(g, enumerate_all)), else Err(Error::TooLarge(g.n())))
}
