//! Spectral lower bounds and structural upper bounds on toughness.

use serde::Serialize;

use crate::connectivity::edge_connectivity;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::Rational;
use crate::spectral::{lambda_summary, spectrum, theta, DEFAULT_GROUP_TOL};

use super::{hoffman_equality_upper, neighborhood_sets, toughness_of_set};

/// Margin by which a spectral hypothesis must hold before it is accepted.
pub const HYPOTHESIS_TOL: f64 = 1e-9;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TauBound {
    pub value: f64,
    /// Set when the edge-connectivity term `kappa' / k` is the minimum.
    pub exact: Option<Rational>,
    /// True when the eigenvalue term is the minimum: every smaller positive
    /// value satisfies the strict hypothesis, so `t >= value` by closure.
    pub supremum: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundsReport {
    pub k: usize,
    pub lambda2: f64,
    pub lambda_min: f64,
    pub lambda_abs: f64,
    pub alon_lower: f64,
    pub brouwer_lower: f64,
    pub liu_chen_threshold: f64,
    pub liu_chen_one_tough: bool,
    pub theta: f64,
    /// `theta` was evaluated at `k = 2`, outside the range `k >= 3` where the
    /// extremal analysis applies.
    pub theta_extrapolated: bool,
    pub thm5_one_tough: bool,
    pub kappa_prime: usize,
    pub thm4_tau: Option<TauBound>,
    pub hoffman_upper: Option<Rational>,
    pub neighborhood_upper: Option<Rational>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundViolation {
    pub bound: &'static str,
    pub detail: String,
}

/// Every bound for a connected `k`-regular graph with `k >= 2`.
pub fn bounds(g: &Graph) -> Result<BoundsReport> {
    let k = g.regularity().ok_or(Error::NotRegular)?;
    if !g.is_connected() {
        return Err(Error::NotConnected);
    }
    if k < 2 {
        return Err(Error::InvalidParameter(format!("bounds need k >= 2, got {k}")));
    }
    let sp = spectrum(g, DEFAULT_GROUP_TOL)?;
    let ls = lambda_summary(&sp, k)?;
    let kf = k as f64;
    let lam = ls.lambda_abs;
    let alon_lower = (kf * kf / (kf * lam + lam * lam) - 1.0) / 3.0;
    let brouwer_lower = kf / lam - 2.0;
    let liu_chen_threshold = if k % 2 == 0 {
        kf - 1.0 + 3.0 / (kf + 1.0)
    } else {
        kf - 1.0 + 2.0 / (kf + 1.0)
    };
    let th = theta(k)?;
    let kappa_prime = edge_connectivity(g).value;
    let thm4_tau = (k >= 3)
        .then(|| {
            let conn = kappa_prime as f64 / kf;
            let spec = (kf - ls.lambda2) * (kf + 1.0) / kf;
            let value = conn.min(spec);
            (value > 0.0).then(|| TauBound {
                value,
                exact: (conn <= spec).then(|| Rational::new(kappa_prime as i64, k as i64)),
                supremum: spec < conn,
            })
        })
        .flatten();
    let neighborhood_upper = neighborhood_sets(g)
        .iter()
        .filter_map(|s| toughness_of_set(g, s).ok())
        .min();
    Ok(BoundsReport {
        k,
        lambda2: ls.lambda2,
        lambda_min: ls.lambda_min,
        lambda_abs: lam,
        alon_lower,
        brouwer_lower,
        liu_chen_threshold,
        liu_chen_one_tough: ls.lambda2 < liu_chen_threshold - HYPOTHESIS_TOL,
        theta: th,
        theta_extrapolated: k == 2,
        thm5_one_tough: ls.lambda2 < th - HYPOTHESIS_TOL,
        kappa_prime,
        thm4_tau,
        hoffman_upper: hoffman_equality_upper(g)?.map(|h| h.value),
        neighborhood_upper,
    })
}

impl BoundsReport {
    /// Bounds contradicted by the exact toughness `t`.
    pub fn violations(&self, t: Rational) -> Vec<BoundViolation> {
        let tf = t.to_f64();
        let mut out = Vec::new();
        let mut flag = |bound: &'static str, bad: bool, detail: String| {
            if bad {
                out.push(BoundViolation { bound, detail });
            }
        };
        flag(
            "alon",
            tf <= self.alon_lower + HYPOTHESIS_TOL,
            format!("t = {t} not > {}", self.alon_lower),
        );
        flag(
            "brouwer",
            tf <= self.brouwer_lower + HYPOTHESIS_TOL,
            format!("t = {t} not > {}", self.brouwer_lower),
        );
        let one = Rational::from_int(1);
        flag(
            "liu-chen",
            self.liu_chen_one_tough && t < one,
            format!("hypothesis holds but t = {t} < 1"),
        );
        flag(
            "theta",
            self.thm5_one_tough && t < one,
            format!("lambda2 < theta but t = {t} < 1"),
        );
        if let Some(tau) = &self.thm4_tau {
            let bad = match tau.exact {
                Some(e) => t < e,
                None => tf < tau.value - HYPOTHESIS_TOL,
            };
            flag("tau", bad, format!("t = {t} < tau = {}", tau.value));
        }
        if let Some(h) = self.hoffman_upper {
            flag("hoffman", t > h, format!("t = {t} > {h}"));
        }
        if let Some(u) = self.neighborhood_upper {
            flag("neighborhood", t > u, format!("t = {t} > {u}"));
        }
        out
    }
}
