//! Adjacency spectra, equitable partitions and strongly regular parameters.

mod jacobi;
mod quotient;

pub use jacobi::symmetric_eigenvalues;
pub use quotient::{check_equitable, quotient_eigenvalues, QuotientMatrix};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::Rational;

/// Default tolerance for merging numerically equal eigenvalues.
pub const DEFAULT_GROUP_TOL: f64 = 1e-6;
/// Distance to an integer below which an eigenvalue is treated as that integer.
pub const INTEGER_TOL: f64 = 1e-6;
/// Tolerance for the interlacing inequalities.
pub const INTERLACING_TOL: f64 = 1e-7;

/// One distinct eigenvalue after grouping.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct EigenGroup {
    pub value: f64,
    pub multiplicity: usize,
    /// Set when `value` lies within [`INTEGER_TOL`] of an integer.
    pub integer: Option<i64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    /// All eigenvalues, descending.
    pub eigenvalues: Vec<f64>,
    pub grouped: Vec<EigenGroup>,
    pub group_tol: f64,
}

fn integer_tag(x: f64) -> Option<i64> {
    let r = x.round();
    ((x - r).abs() < INTEGER_TOL).then_some(r as i64)
}

impl Spectrum {
    /// Groups a descending eigenvalue list: a value joins the current group
    /// while it is within `group_tol` of the group's first member.
    pub fn from_eigenvalues(eigenvalues: Vec<f64>, group_tol: f64) -> Self {
        let mut grouped: Vec<(f64, f64, usize)> = Vec::new();
        for &x in &eigenvalues {
            match grouped.last_mut() {
                Some((first, sum, m)) if (*first - x).abs() <= group_tol => {
                    *sum += x;
                    *m += 1;
                }
                _ => grouped.push((x, x, 1)),
            }
        }
        let grouped = grouped
            .into_iter()
            .map(|(_, sum, m)| {
                let value = sum / m as f64;
                EigenGroup {
                    value,
                    multiplicity: m,
                    integer: integer_tag(value),
                }
            })
            .collect();
        Spectrum {
            eigenvalues,
            grouped,
            group_tol,
        }
    }

    pub fn n(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn largest(&self) -> f64 {
        self.eigenvalues[0]
    }

    pub fn second(&self) -> Option<f64> {
        self.eigenvalues.get(1).copied()
    }

    pub fn smallest(&self) -> f64 {
        *self.eigenvalues.last().expect("non-empty spectrum")
    }

    pub fn trace(&self) -> f64 {
        self.eigenvalues.iter().sum()
    }

    pub fn sum_of_squares(&self) -> f64 {
        self.eigenvalues.iter().map(|x| x * x).sum()
    }

    /// `(value, multiplicity)` pairs.
    pub fn grouped_pairs(&self) -> Vec<(f64, usize)> {
        self.grouped.iter().map(|g| (g.value, g.multiplicity)).collect()
    }

    /// True when the grouped values match `expected` within `tol` and the
    /// multiplicities agree exactly.
    pub fn matches_grouped(&self, expected: &[(f64, usize)], tol: f64) -> bool {
        self.grouped.len() == expected.len()
            && self
                .grouped
                .iter()
                .zip(expected)
                .all(|(g, &(v, m))| (g.value - v).abs() <= tol && g.multiplicity == m)
    }
}

/// Full adjacency spectrum via Jacobi rotations.
pub fn spectrum(g: &Graph, group_tol: f64) -> Result<Spectrum> {
    if g.n() == 0 {
        return Err(Error::InvalidParameter("spectrum of the empty graph".into()));
    }
    let eig = symmetric_eigenvalues(g.adjacency_matrix(), g.n())?;
    Ok(Spectrum::from_eigenvalues(eig, group_tol))
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct LambdaSummary {
    pub lambda2: f64,
    pub lambda_min: f64,
    /// `max(|lambda2|, |lambda_min|)`.
    pub lambda_abs: f64,
}

/// Second-largest, smallest and largest non-trivial absolute eigenvalue of
/// a connected `k`-regular graph.
pub fn lambda_summary(sp: &Spectrum, k: usize) -> Result<LambdaSummary> {
    if (sp.largest() - k as f64).abs() > INTEGER_TOL || sp.n() < 2 {
        return Err(Error::DegreeMismatch {
            found: sp.largest(),
            degree: k,
        });
    }
    let lambda2 = sp.eigenvalues[1];
    let lambda_min = sp.smallest();
    Ok(LambdaSummary {
        lambda2,
        lambda_min,
        lambda_abs: lambda2.abs().max(lambda_min.abs()),
    })
}

/// The 1-toughness threshold for degree `k`:
/// `(k - 2 + sqrt(k^2 + 8)) / 2` for odd `k`, `(k - 2 + sqrt(k^2 + 12)) / 2`
/// for even `k`. Also evaluated at `k = 2` with the even formula.
pub fn theta(k: usize) -> Result<f64> {
    if k < 2 {
        return Err(Error::InvalidParameter(format!("theta needs k >= 2, got {k}")));
    }
    let k = k as f64;
    let extra = if k as usize % 2 == 1 { 8.0 } else { 12.0 };
    Ok((k - 2.0 + (k * k + extra).sqrt()) / 2.0)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct SrgParams {
    pub n: usize,
    pub k: usize,
    /// Common neighbours of adjacent pairs.
    pub lam: usize,
    /// Common neighbours of non-adjacent pairs.
    pub mu: usize,
}

impl SrgParams {
    pub fn new(n: usize, k: usize, lam: usize, mu: usize) -> Self {
        SrgParams { n, k, lam, mu }
    }

    /// `k (k - lam - 1) = (n - k - 1) mu`.
    pub fn is_feasible_count(&self) -> bool {
        self.k * (self.k - self.lam - 1) == (self.n - self.k - 1) * self.mu
    }
}

impl std::fmt::Display for SrgParams {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "srg({},{},{},{})", self.n, self.k, self.lam, self.mu)
    }
}

/// Parameters by direct common-neighbour counting, if `g` is a connected,
/// non-complete strongly regular graph.
pub fn srg_check(g: &Graph) -> Option<SrgParams> {
    let k = g.regularity()?;
    if !g.is_connected() || g.is_complete() || g.n() < 3 {
        return None;
    }
    let (mut lam, mut mu) = (None, None);
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            let common = g.neighbors(u).intersection_len(g.neighbors(v));
            let slot = if g.has_edge(u, v) { &mut lam } else { &mut mu };
            match *slot {
                None => *slot = Some(common),
                Some(c) if c != common => return None,
                _ => {}
            }
        }
    }
    Some(SrgParams::new(g.n(), k, lam.unwrap_or(0), mu?))
}

/// Grouped spectrum `{k: 1, r: f, s: g}` from the parameters.
pub fn srg_spectrum(p: SrgParams) -> Result<Vec<(f64, usize)>> {
    let infeasible = |why: &str| Error::InfeasibleSrg(format!("{p}: {why}"));
    if p.k >= p.n || p.mu == 0 {
        return Err(infeasible("needs 0 < mu and k < n"));
    }
    let (n, k, lam, mu) = (p.n as f64, p.k as f64, p.lam as f64, p.mu as f64);
    let disc = (lam - mu).powi(2) + 4.0 * (k - mu);
    if disc <= 0.0 {
        return Err(infeasible("degenerate discriminant"));
    }
    let root = disc.sqrt();
    let r = (lam - mu + root) / 2.0;
    let s = (lam - mu - root) / 2.0;
    let skew = (2.0 * k + (n - 1.0) * (lam - mu)) / root;
    let f = ((n - 1.0) - skew) / 2.0;
    let g = ((n - 1.0) + skew) / 2.0;
    let int = |x: f64| -> Result<usize> {
        let rx = x.round();
        if (x - rx).abs() > 1e-9 || rx < 0.0 {
            Err(infeasible(&format!("multiplicity {x} is not a non-negative integer")))
        } else {
            Ok(rx as usize)
        }
    };
    let (f, g) = (int(f)?, int(g)?);
    Ok([(k, 1), (r, f), (s, g)]
        .into_iter()
        .filter(|&(_, m)| m > 0)
        .collect())
}

/// Cauchy interlacing of an `m`-vertex induced subgraph spectrum inside an
/// `n`-vertex parent spectrum.
pub fn interlacing_holds(parent: &Spectrum, sub: &Spectrum) -> Result<bool> {
    let (n, m) = (parent.n(), sub.n());
    if m > n {
        return Err(Error::SizeMismatch { sub: m, parent: n });
    }
    let p = &parent.eigenvalues;
    Ok(sub.eigenvalues.iter().enumerate().all(|(i, &mu)| {
        p[i] + INTERLACING_TOL >= mu && mu + INTERLACING_TOL >= p[i + n - m]
    }))
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct HoffmanBound {
    pub value: f64,
    /// Present when the smallest eigenvalue is recognised as an integer.
    pub exact: Option<Rational>,
}

/// `n (-lambda_min) / (k - lambda_min)` for a regular graph.
pub fn hoffman_ratio_bound(g: &Graph) -> Result<HoffmanBound> {
    let k = g.regularity().ok_or(Error::NotRegular)?;
    let sp = spectrum(g, DEFAULT_GROUP_TOL)?;
    Ok(hoffman_from_spectrum(g.n(), k, &sp))
}

pub(crate) fn hoffman_from_spectrum(n: usize, k: usize, sp: &Spectrum) -> HoffmanBound {
    let lmin = sp.smallest();
    let value = n as f64 * (-lmin) / (k as f64 - lmin);
    let exact = integer_tag(lmin)
        .filter(|&l| l < 0)
        .map(|l| Rational::new(n as i64 * -l, k as i64 - l));
    HoffmanBound { value, exact }
}

/// The spectrum report emitted by the command-line tool.
#[derive(Clone, Debug, Serialize)]
pub struct SpectrumReport {
    pub eigenvalues: Vec<f64>,
    pub grouped: Vec<(f64, usize)>,
    pub grouped_integer: Vec<Option<i64>>,
    pub lambda2: Option<f64>,
    pub lambda_min: Option<f64>,
    pub lambda_abs: Option<f64>,
}

impl SpectrumReport {
    /// Lambda fields are filled in only for connected regular graphs.
    pub fn new(g: &Graph, sp: &Spectrum) -> Self {
        let summary = g
            .regularity()
            .filter(|_| g.is_connected())
            .and_then(|k| lambda_summary(sp, k).ok());
        SpectrumReport {
            eigenvalues: sp.eigenvalues.clone(),
            grouped: sp.grouped_pairs(),
            grouped_integer: sp.grouped.iter().map(|g| g.integer).collect(),
            lambda2: summary.map(|s| s.lambda2),
            lambda_min: summary.map(|s| s.lambda_min),
            lambda_abs: summary.map(|s| s.lambda_abs),
        }
    }
}
