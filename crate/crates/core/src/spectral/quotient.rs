//! Quotient matrices of equitable partitions.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::VertexSet;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QuotientMatrix {
    pub size: usize,
    /// Row-major; entry `(i, j)` is the neighbour count in part `j` of any
    /// vertex in part `i`.
    pub entries: Vec<Vec<f64>>,
}

impl QuotientMatrix {
    pub fn new(entries: Vec<Vec<f64>>) -> Self {
        QuotientMatrix {
            size: entries.len(),
            entries,
        }
    }

    pub fn row_sums(&self) -> Vec<f64> {
        self.entries.iter().map(|r| r.iter().sum()).collect()
    }
}

/// Verifies that `parts` is an equitable partition of `g` and returns its
/// quotient matrix.
pub fn check_equitable(g: &Graph, parts: &[VertexSet]) -> Result<QuotientMatrix> {
    let mut seen = VertexSet::new(g.n());
    for p in parts {
        if p.universe() != g.n() || p.is_empty() || !p.is_disjoint(&seen) {
            return Err(Error::NotAPartition);
        }
        seen.union_with(p);
    }
    if seen.len() != g.n() {
        return Err(Error::NotAPartition);
    }
    let mut entries = vec![vec![0.0; parts.len()]; parts.len()];
    for (i, pi) in parts.iter().enumerate() {
        let rep = pi.first().expect("non-empty part");
        for (j, pj) in parts.iter().enumerate() {
            let want = g.neighbors(rep).intersection_len(pj);
            if let Some(bad) = pi.iter().find(|&v| g.neighbors(v).intersection_len(pj) != want) {
                return Err(Error::NotEquitable(rep, bad, i, j));
            }
            entries[i][j] = want as f64;
        }
    }
    Ok(QuotientMatrix::new(entries))
}

/// Real roots of the characteristic polynomial of a quotient of size at most
/// three, in descending order.
pub fn quotient_eigenvalues(q: &QuotientMatrix) -> Result<Vec<f64>> {
    let m = &q.entries;
    let mut roots = match q.size {
        1 => vec![m[0][0]],
        2 => {
            let tr = m[0][0] + m[1][1];
            let det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
            let disc = tr * tr - 4.0 * det;
            if disc < 0.0 {
                Vec::new()
            } else {
                let r = disc.sqrt();
                vec![(tr + r) / 2.0, (tr - r) / 2.0]
            }
        }
        3 => {
            let tr = m[0][0] + m[1][1] + m[2][2];
            let minors = m[0][0] * m[1][1] - m[0][1] * m[1][0] + m[0][0] * m[2][2]
                - m[0][2] * m[2][0]
                + m[1][1] * m[2][2]
                - m[1][2] * m[2][1];
            let det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
                - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
            cubic_roots(-tr, minors, -det)
        }
        r => return Err(Error::QuotientTooLarge(r)),
    };
    roots.sort_by(|x, y| y.total_cmp(x));
    Ok(roots)
}

/// Real roots of `x^3 + a x^2 + b x + c`.
fn cubic_roots(a: f64, b: f64, c: f64) -> Vec<f64> {
    let shift = a / 3.0;
    let p = b - a * a / 3.0;
    let q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
    let disc = (q / 2.0).powi(2) + (p / 3.0).powi(3);
    let scale = 1.0 + a.abs() + b.abs() + c.abs();
    if disc > 1e-12 * scale * scale {
        let s = disc.sqrt();
        return vec![(-q / 2.0 + s).cbrt() + (-q / 2.0 - s).cbrt() - shift];
    }
    if p.abs() < 1e-14 * scale {
        return vec![(-q).cbrt() - shift; 3];
    }
    let r = 2.0 * (-p / 3.0).sqrt();
    let arg = (3.0 * q / (p * r)).clamp(-1.0, 1.0);
    let phi = arg.acos() / 3.0;
    (0..3)
        .map(|k| r * (phi - 2.0 * std::f64::consts::PI * k as f64 / 3.0).cos() - shift)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;

    fn close(a: &[f64], b: &[f64]) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| (x - y).abs() < 1e-9)
    }

    #[test]
    fn two_by_two_roots() {
        let q = QuotientMatrix::new(vec![vec![1.0, 2.0], vec![2.0, 0.0]]);
        let s = 17f64.sqrt();
        assert!(close(&quotient_eigenvalues(&q).unwrap(), &[(1.0 + s) / 2.0, (1.0 - s) / 2.0]));
        let q = QuotientMatrix::new(vec![vec![0.0, 3.0], vec![1.0, 0.0]]);
        let s = 3f64.sqrt();
        assert!(close(&quotient_eigenvalues(&q).unwrap(), &[s, -s]));
    }

    #[test]
    fn three_by_three_roots() {
        let q = QuotientMatrix::new(vec![
            vec![0.0, 3.0, 0.0],
            vec![1.0, 0.0, 2.0],
            vec![0.0, 2.0, 1.0],
        ]);
        let r = 2f64.sqrt();
        assert!(close(&quotient_eigenvalues(&q).unwrap(), &[3.0, r - 1.0, -r - 1.0]));
        let diag = QuotientMatrix::new(vec![
            vec![2.0, 0.0, 0.0],
            vec![0.0, 2.0, 0.0],
            vec![0.0, 0.0, 2.0],
        ]);
        assert!(close(&quotient_eigenvalues(&diag).unwrap(), &[2.0, 2.0, 2.0]));
        let four = QuotientMatrix::new(vec![vec![0.0; 4]; 4]);
        assert!(quotient_eigenvalues(&four).is_err());
    }

    #[test]
    fn extremal_partition_is_equitable() {
        let g = extremal_x(3).unwrap();
        let low = VertexSet::from_indices(4, [0, 1]);
        let high = VertexSet::from_indices(4, [2, 3]);
        let q = check_equitable(&g, &[high.clone(), low.clone()]).unwrap();
        assert_eq!(q.entries, vec![vec![1.0, 2.0], vec![2.0, 0.0]]);
        let q = check_equitable(&petersen(), &[petersen().vertex_set()]).unwrap();
        assert_eq!(q.entries, vec![vec![3.0]]);
    }

    #[test]
    fn partition_errors() {
        let g = cycle(5).unwrap();
        let a = VertexSet::from_indices(5, [0, 1]);
        let b = VertexSet::from_indices(5, [2, 3, 4]);
        assert!(matches!(check_equitable(&g, &[a.clone(), b]), Err(Error::NotEquitable(..))));
        assert_eq!(check_equitable(&g, &[a.clone(), a]), Err(Error::NotAPartition));
    }
}
