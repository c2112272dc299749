//! Generalized quadrangles as explicit point/line incidence structures.

use std::collections::{BTreeSet, HashMap};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::families::combinations;
use crate::graph::Graph;

/// A finite point/line geometry of order `(s, t)`. Lines are stored
/// explicitly as sorted point lists.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneralizedQuadrangle {
    num_points: usize,
    lines: Vec<Vec<usize>>,
    order: (usize, usize),
}

/// Outcome of checking every quantified axiom instance.
#[derive(Clone, Debug, Default, Serialize, PartialEq, Eq)]
pub struct GqAudit {
    pub counts_ok: bool,
    pub line_sizes_ok: bool,
    pub point_degrees_ok: bool,
    pub at_most_one_line_ok: bool,
    pub collinear_point_axiom_ok: bool,
    /// Number of (point, line) pairs with the point off the line that were checked.
    pub axiom_instances: usize,
    pub violations: Vec<String>,
}

impl GqAudit {
    pub fn is_valid(&self) -> bool {
        self.counts_ok
            && self.line_sizes_ok
            && self.point_degrees_ok
            && self.at_most_one_line_ok
            && self.collinear_point_axiom_ok
    }
}

impl GeneralizedQuadrangle {
    pub fn new(num_points: usize, mut lines: Vec<Vec<usize>>, order: (usize, usize)) -> Self {
        for l in lines.iter_mut() {
            l.sort_unstable();
        }
        lines.sort();
        GeneralizedQuadrangle {
            num_points,
            lines,
            order,
        }
    }

    pub fn num_points(&self) -> usize {
        self.num_points
    }

    pub fn lines(&self) -> &[Vec<usize>] {
        &self.lines
    }

    pub fn order(&self) -> (usize, usize) {
        self.order
    }

    /// Lines through each point.
    fn incidence(&self) -> Vec<Vec<usize>> {
        let mut through = vec![Vec::new(); self.num_points];
        for (i, l) in self.lines.iter().enumerate() {
            for &p in l {
                through[p].push(i);
            }
        }
        through
    }

    /// Checks every axiom instance: counts, line sizes, point degrees, at most
    /// one common line per pair, and the unique-collinear-point axiom for every
    /// anti-flag.
    pub fn audit(&self) -> GqAudit {
        let (s, t) = self.order;
        let mut a = GqAudit {
            counts_ok: self.num_points == (s + 1) * (s * t + 1)
                && self.lines.len() == (t + 1) * (s * t + 1),
            line_sizes_ok: true,
            point_degrees_ok: true,
            at_most_one_line_ok: true,
            collinear_point_axiom_ok: true,
            ..Default::default()
        };
        if !a.counts_ok {
            a.violations.push(format!(
                "{} points / {} lines, expected {} / {}",
                self.num_points,
                self.lines.len(),
                (s + 1) * (s * t + 1),
                (t + 1) * (s * t + 1)
            ));
        }
        if self.lines.iter().flatten().any(|&p| p >= self.num_points) {
            a.line_sizes_ok = false;
            a.violations.push("line references a missing point".into());
            return a;
        }
        for (i, l) in self.lines.iter().enumerate() {
            if l.len() != s + 1 || l.windows(2).any(|w| w[0] == w[1]) {
                a.line_sizes_ok = false;
                a.violations.push(format!("line {i} has {} points", l.len()));
            }
        }
        let through = self.incidence();
        for (p, ls) in through.iter().enumerate() {
            if ls.len() != t + 1 {
                a.point_degrees_ok = false;
                a.violations.push(format!("point {p} is on {} lines", ls.len()));
            }
        }
        let mut shared = vec![0u32; self.num_points * self.num_points];
        for l in &self.lines {
            for (i, &p) in l.iter().enumerate() {
                for &q in &l[i + 1..] {
                    shared[p * self.num_points + q] += 1;
                }
            }
        }
        for p in 0..self.num_points {
            for q in p + 1..self.num_points {
                if shared[p * self.num_points + q] > 1 {
                    a.at_most_one_line_ok = false;
                    a.violations.push(format!("points {p},{q} share several lines"));
                }
            }
        }
        let collinear = |p: usize, q: usize| {
            let (x, y) = if p < q { (p, q) } else { (q, p) };
            shared[x * self.num_points + y] > 0
        };
        for p in 0..self.num_points {
            for (li, l) in self.lines.iter().enumerate() {
                if l.binary_search(&p).is_ok() {
                    continue;
                }
                a.axiom_instances += 1;
                let hits = l.iter().filter(|&&q| collinear(p, q)).count();
                if hits != 1 {
                    a.collinear_point_axiom_ok = false;
                    a.violations
                        .push(format!("point {p} sees {hits} points of line {li}"));
                }
            }
        }
        a
    }

    /// Collinearity graph on the points.
    pub fn point_graph(&self) -> Graph {
        let mut edges = Vec::new();
        for l in &self.lines {
            for (i, &p) in l.iter().enumerate() {
                edges.extend(l[i + 1..].iter().map(|&q| (p, q)));
            }
        }
        Graph::build(self.num_points, &edges).expect("line points are in range")
    }

    /// Lines as vertex sets of the point graph.
    pub fn line_sets(&self) -> Vec<crate::VertexSet> {
        self.lines
            .iter()
            .map(|l| crate::VertexSet::from_indices(self.num_points, l.iter().copied()))
            .collect()
    }
}

/// The `(s+1) x (s+1)` grid of order `(s, 1)`: rows and columns are the lines.
/// Cell `(i, j)` is point `i * (s + 1) + j`.
pub fn gq_grid(s: usize) -> Result<GeneralizedQuadrangle> {
    if s < 1 {
        return Err(Error::InvalidParameter("grid quadrangle needs s >= 1".into()));
    }
    let w = s + 1;
    let rows = (0..w).map(|i| (0..w).map(|j| i * w + j).collect());
    let cols = (0..w).map(|j| (0..w).map(|i| i * w + j).collect());
    Ok(GeneralizedQuadrangle::new(w * w, rows.chain(cols).collect(), (s, 1)))
}

fn is_prime(q: usize) -> bool {
    q >= 2 && (2..).take_while(|d| d * d <= q).all(|d| q % d != 0)
}

fn inv_mod(a: usize, q: usize) -> usize {
    (1..q).find(|&x| a * x % q == 1).expect("nonzero element of a prime field")
}

/// Scales a nonzero vector so its first nonzero coordinate is 1.
fn normalize(v: [usize; 4], q: usize) -> [usize; 4] {
    let lead = *v.iter().find(|&&x| x != 0).expect("nonzero vector");
    let inv = inv_mod(lead, q);
    v.map(|x| x * inv % q)
}

/// The symplectic quadrangle `W(q)` for prime `q`: projective points of
/// `PG(3, q)` and the totally isotropic lines of
/// `x1 y2 - x2 y1 + x3 y4 - x4 y3`. Points are numbered in lexicographic
/// order of their normalized coordinates.
pub fn gq_symplectic(q: usize) -> Result<GeneralizedQuadrangle> {
    if !is_prime(q) {
        return Err(Error::InvalidParameter(format!("W(q) needs prime q, got {q}")));
    }
    let mut points = Vec::new();
    for code in 1..q.pow(4) {
        let v = [code / q.pow(3), code / q.pow(2) % q, code / q % q, code % q];
        if normalize(v, q) == v {
            points.push(v);
        }
    }
    let index: HashMap<[usize; 4], usize> =
        points.iter().enumerate().map(|(i, &p)| (p, i)).collect();
    let form = |x: &[usize; 4], y: &[usize; 4]| {
        let plus = (x[0] * y[1] + x[2] * y[3]) % q;
        let minus = (x[1] * y[0] + x[3] * y[2]) % q;
        (plus + q - minus) % q
    };
    let mut lines = BTreeSet::new();
    for (i, x) in points.iter().enumerate() {
        for y in &points[i + 1..] {
            if form(x, y) != 0 {
                continue;
            }
            let mut line: Vec<usize> = Vec::with_capacity(q + 1);
            for a in 0..q {
                for b in 0..q {
                    if a == 0 && b == 0 {
                        continue;
                    }
                    let v = std::array::from_fn(|c| (a * x[c] + b * y[c]) % q);
                    line.push(index[&normalize(v, q)]);
                }
            }
            line.sort_unstable();
            line.dedup();
            lines.insert(line);
        }
    }
    Ok(GeneralizedQuadrangle::new(points.len(), lines.into_iter().collect(), (q, q)))
}

/// Point labels of the order-(2,4) quadrangle: `a1..a6`, `b1..b6`, then
/// `c_ij` for `i < j` in lexicographic order.
pub fn gq_2_4_labels() -> Vec<String> {
    let mut out: Vec<String> = (1..=6).map(|i| format!("a{i}")).collect();
    out.extend((1..=6).map(|i| format!("b{i}")));
    out.extend(combinations(6, 2).iter().map(|p| format!("c{}{}", p[0] + 1, p[1] + 1)));
    out
}

/// The quadrangle of order (2, 4) on the 27 double-six labels. Lines are
/// the triangles of the collinearity relation, which are exactly its
/// maximal cliques.
pub fn gq_2_4() -> GeneralizedQuadrangle {
    #[derive(Clone, Copy)]
    enum Label {
        A(usize),
        B(usize),
        C(usize, usize),
    }
    let mut labels: Vec<Label> = (0..6).map(Label::A).collect();
    labels.extend((0..6).map(Label::B));
    labels.extend(combinations(6, 2).iter().map(|p| Label::C(p[0], p[1])));
    let collinear = |x: Label, y: Label| match (x, y) {
        (Label::A(i), Label::B(j)) | (Label::B(j), Label::A(i)) => i != j,
        (Label::A(i), Label::C(j, k))
        | (Label::C(j, k), Label::A(i))
        | (Label::B(i), Label::C(j, k))
        | (Label::C(j, k), Label::B(i)) => i == j || i == k,
        (Label::C(i, j), Label::C(k, l)) => i != k && i != l && j != k && j != l,
        _ => false,
    };
    let g = Graph::from_fn(labels.len(), |u, v| collinear(labels[u], labels[v]));
    let mut lines = Vec::new();
    for u in 0..g.n() {
        for v in g.neighbors(u).iter().filter(|&v| v > u) {
            for w in g.neighbors(u).intersection(g.neighbors(v)).iter().filter(|&w| w > v) {
                lines.push(vec![u, v, w]);
            }
        }
    }
    GeneralizedQuadrangle::new(labels.len(), lines, (2, 4))
}
