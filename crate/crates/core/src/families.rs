//! Constructors for the named graph families.

use crate::error::{Error, Result};
use crate::graph::Graph;

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

/// All `r`-subsets of `0..n` in lexicographic order.
pub fn combinations(n: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if r > n {
        return out;
    }
    let mut cur: Vec<usize> = (0..r).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (0..r).rev().find(|&i| cur[i] != i + n - r) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..r {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

pub fn complete(v: usize) -> Result<Graph> {
    if v == 0 {
        return Err(invalid("complete graph needs v >= 1"));
    }
    Ok(Graph::from_fn(v, |_, _| true))
}

/// `K_{a,b}`; the `a` side is `0..a`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
    if a == 0 || b == 0 {
        return Err(invalid("complete bipartite graph needs a, b >= 1"));
    }
    Ok(Graph::from_fn(a + b, |u, v| u < a && v >= a))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(invalid("cycle needs n >= 3"));
    }
    Ok(Graph::from_fn(n, |u, v| v == u + 1 || (u == 0 && v == n - 1)))
}

/// `Q_d`: bitstrings of length `d`, adjacent at Hamming distance one.
pub fn hypercube(d: usize) -> Result<Graph> {
    if d == 0 || d > 16 {
        return Err(invalid("hypercube needs 1 <= d <= 16"));
    }
    Ok(Graph::from_fn(1 << d, |u, v| (u ^ v).count_ones() == 1))
}

/// Cocktail-party graph: `K_t` minus the perfect matching `{2i, 2i+1}`.
pub fn matching_complement(t: usize) -> Result<Graph> {
    if t < 2 || t % 2 != 0 {
        return Err(invalid(format!("matching complement needs even t >= 2, got {t}")));
    }
    Ok(Graph::from_fn(t, |u, v| u / 2 != v / 2))
}

/// The perfect matching `M_t` itself.
pub fn perfect_matching(t: usize) -> Result<Graph> {
    Ok(matching_complement(t)?.complement())
}

/// The extremal graph on `k + 1` vertices: the cocktail-party block
/// (vertices of degree `k - 1`) comes first, then the clique block.
pub fn extremal_x(k: usize) -> Result<Graph> {
    if k < 3 {
        return Err(invalid(format!("extremal graph needs k >= 3, got {k}")));
    }
    Ok(if k % 2 == 1 {
        Graph::join(&matching_complement(k - 1)?, &complete(2)?)
    } else {
        Graph::join(&matching_complement(k - 2)?, &complete(3)?)
    })
}

/// Glues `copies` blocks of `extremal_x(k)` to a hub graph on `hub.n()`
/// vertices: hub vertex `i` gets one edge to vertex `i` of every block.
fn glue(hub: &Graph, k: usize, copies: usize) -> Result<Graph> {
    let block = extremal_x(k)?;
    let h = hub.n();
    let mut parts = vec![hub.clone()];
    parts.extend(std::iter::repeat_n(block.clone(), copies));
    let base = Graph::disjoint_union(&parts);
    let mut edges = base.edges();
    for c in 0..copies {
        let offset = h + c * block.n();
        edges.extend((0..h).map(|i| (i, offset + i)));
    }
    Graph::build(base.n(), &edges)
}

/// The odd-degree extremal gadget: `k - 1` hub vertices (indices `0..k-1`,
/// independent) each matched into every one of `k` copies of `extremal_x(k)`.
pub fn gadget_odd(k: usize) -> Result<Graph> {
    if k < 3 || k % 2 == 0 {
        return Err(invalid(format!("odd gadget needs odd k >= 3, got {k}")));
    }
    glue(&Graph::empty(k - 1), k, k)
}

/// The even-degree extremal gadget: a perfect matching on `k - 2` hub
/// vertices (indices `0..k-2`), each matched into `k - 1` copies of `extremal_x(k)`.
pub fn gadget_even(k: usize) -> Result<Graph> {
    if k < 4 || k % 2 == 1 {
        return Err(invalid(format!("even gadget needs even k >= 4, got {k}")));
    }
    glue(&perfect_matching(k - 2)?, k, k - 1)
}

/// `gadget_odd` or `gadget_even` by parity.
pub fn gadget(k: usize) -> Result<Graph> {
    if k % 2 == 1 {
        gadget_odd(k)
    } else {
        gadget_even(k)
    }
}

/// `k` copies of `K_{k,k}` minus an edge, with two extra vertices (0 and 1)
/// attached to the two degree-deficient endpoints of every copy.
pub fn bipartite_sparse_cut(k: usize) -> Result<Graph> {
    if k < 3 {
        return Err(invalid(format!("bipartite example needs k >= 3, got {k}")));
    }
    let n = 2 * k * k + 2;
    let mut edges = Vec::new();
    for c in 0..k {
        let a = 2 + c * 2 * k;
        let b = a + k;
        for i in 0..k {
            for j in 0..k {
                if i != 0 || j != 0 {
                    edges.push((a + i, b + j));
                }
            }
        }
        edges.push((0, a));
        edges.push((1, b));
    }
    Graph::build(n, &edges)
}

/// `L_2(v)`: cell `(i, j)` is vertex `i * v + j`; same row or column.
pub fn lattice(v: usize) -> Result<Graph> {
    if v < 2 {
        return Err(invalid(format!("lattice graph needs v >= 2, got {v}")));
    }
    Ok(Graph::from_fn(v * v, |a, b| a / v == b / v || a % v == b % v))
}

/// `T_v`: 2-subsets of `0..v` in lexicographic order, adjacent when they meet.
pub fn triangular(v: usize) -> Result<Graph> {
    if v < 4 {
        return Err(invalid(format!("triangular graph needs v >= 4, got {v}")));
    }
    Ok(complete(v)?.line_graph())
}

/// `K(v, r)`: `r`-subsets in lexicographic order, adjacent when disjoint.
pub fn kneser(v: usize, r: usize) -> Result<Graph> {
    if r == 0 || v < 2 * r || v > 64 {
        return Err(invalid(format!("kneser graph needs 1 <= r, 2r <= v <= 64, got ({v}, {r})")));
    }
    let masks: Vec<u64> = combinations(v, r)
        .iter()
        .map(|s| s.iter().fold(0u64, |m, &i| m | 1 << i))
        .collect();
    Ok(Graph::from_fn(masks.len(), |a, b| masks[a] & masks[b] == 0))
}

pub fn petersen() -> Graph {
    kneser(5, 2).expect("valid parameters")
}
