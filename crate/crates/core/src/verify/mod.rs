//! Theorem-by-theorem verification suite.
//!
//! Each check compares a claimed closed form against a computed value and
//! records a status. A failing or erroring check never stops the suite.

mod checks;

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::time::Instant;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::Rational;
use crate::toughness::{toughness_exact, ToughnessCertificate, ToughnessOptions, DEFAULT_BUDGET};

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Quantity {
    Rational { value: Rational },
    /// Upper bound: a computed rational matches when it is at most `value`.
    AtMost { value: Rational },
    Integer { value: i64 },
    Bool { value: bool },
    Real { value: f64, tol: f64 },
    /// Grouped spectrum, largest value first.
    Spectrum { groups: Vec<(f64, usize)>, tol: f64 },
}

impl Quantity {
    pub fn rational(value: Rational) -> Self {
        Quantity::Rational { value }
    }

    pub fn at_most(value: Rational) -> Self {
        Quantity::AtMost { value }
    }

    pub fn integer(value: usize) -> Self {
        Quantity::Integer { value: value as i64 }
    }

    pub fn boolean(value: bool) -> Self {
        Quantity::Bool { value }
    }

    pub fn real(value: f64, tol: f64) -> Self {
        Quantity::Real { value, tol }
    }

    /// Whether `computed` satisfies the claim `self`. Rationals compare
    /// exactly; reals and spectra use the claim's tolerance.
    pub fn accepts(&self, computed: &Quantity) -> bool {
        use Quantity::*;
        match (self, computed) {
            (Rational { value: a }, Rational { value: b }) => a == b,
            (AtMost { value: a }, Rational { value: b }) => b <= a,
            (Integer { value: a }, Integer { value: b }) => a == b,
            (Bool { value: a }, Bool { value: b }) => a == b,
            (Real { value: a, tol }, Real { value: b, .. }) => (a - b).abs() <= *tol,
            (Spectrum { groups: a, tol }, Spectrum { groups: b, .. }) => {
                a.len() == b.len()
                    && a.iter()
                        .zip(b)
                        .all(|(x, y)| x.1 == y.1 && (x.0 - y.0).abs() <= *tol)
            }
            _ => false,
        }
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Quantity::Rational { value } => write!(f, "{value}"),
            Quantity::AtMost { value } => write!(f, "<= {value}"),
            Quantity::Integer { value } => write!(f, "{value}"),
            Quantity::Bool { value } => write!(f, "{value}"),
            Quantity::Real { value, .. } => write!(f, "{value:.9}"),
            Quantity::Spectrum { groups, .. } => {
                let parts: Vec<String> = groups
                    .iter()
                    .map(|(v, m)| {
                        let v = if (v - v.round()).abs() < 1e-9 { v.round() + 0.0 } else { *v };
                        format!("{v}^{m}")
                    })
                    .collect();
                write!(f, "{}", parts.join(" "))
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "fail")]
    Fail,
    /// The instance exceeds the profile's `max_n`.
    #[serde(rename = "skipped(size)")]
    SkippedSize,
    /// The exact search ran out of budget.
    #[serde(rename = "skipped(budget)")]
    SkippedBudget,
}

impl Status {
    pub fn is_skipped(self) -> bool {
        matches!(self, Status::SkippedSize | Status::SkippedBudget)
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::SkippedSize => "skipped(size)",
            Status::SkippedBudget => "skipped(budget)",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TheoremCheck {
    pub id: String,
    pub instance: String,
    pub claimed: Quantity,
    pub computed: Option<Quantity>,
    pub status: Status,
    pub notes: String,
    pub wall_ms: f64,
}

impl TheoremCheck {
    fn new(id: &str, instance: impl Into<String>, claimed: Quantity) -> Self {
        TheoremCheck {
            id: id.to_string(),
            instance: instance.into(),
            claimed,
            computed: None,
            status: Status::Fail,
            notes: String::new(),
            wall_ms: 0.0,
        }
    }

    /// Records the computed value and derives the status from it.
    fn computed(mut self, q: Quantity) -> Self {
        self.status = if self.claimed.accepts(&q) { Status::Pass } else { Status::Fail };
        self.computed = Some(q);
        self
    }

    fn skipped(mut self, status: Status, why: impl Into<String>) -> Self {
        self.status = status;
        self.note(why)
    }

    /// Forces a failure, keeping any computed value.
    fn fail(mut self, why: impl Into<String>) -> Self {
        self.status = Status::Fail;
        self.note(why)
    }

    fn note(mut self, s: impl Into<String>) -> Self {
        let s = s.into();
        if !s.is_empty() {
            if !self.notes.is_empty() {
                self.notes.push_str("; ");
            }
            self.notes.push_str(&s);
        }
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Profile {
    pub name: String,
    /// Largest vertex count handed to the exact toughness solver.
    pub max_n: usize,
    pub budget: u64,
    /// Solver threads; 0 uses the ambient pool.
    pub threads: usize,
}

impl Default for Profile {
    fn default() -> Self {
        Profile::desk()
    }
}

impl Profile {
    pub fn desk() -> Self {
        Profile {
            name: "desk".into(),
            max_n: 40,
            budget: DEFAULT_BUDGET,
            threads: 0,
        }
    }

    pub fn quick() -> Self {
        Profile {
            name: "quick".into(),
            max_n: 16,
            budget: 10_000_000,
            threads: 0,
        }
    }

    pub fn by_name(name: &str) -> Result<Self> {
        match name {
            "desk" => Ok(Profile::desk()),
            "quick" => Ok(Profile::quick()),
            _ => Err(Error::Parse(format!("unknown profile `{name}` (desk, quick)"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub profile: Profile,
    pub checks: Vec<TheoremCheck>,
    pub wall_ms: f64,
}

impl VerificationReport {
    pub fn count(&self, status: Status) -> usize {
        self.checks.iter().filter(|c| c.status == status).count()
    }

    /// True when no check failed; skipped checks are allowed.
    pub fn all_pass(&self) -> bool {
        self.count(Status::Fail) == 0
    }

    pub fn ids(&self) -> Vec<&str> {
        let mut ids: Vec<&str> = self.checks.iter().map(|c| c.id.as_str()).collect();
        ids.dedup();
        ids
    }

    pub fn to_text(&self) -> String {
        let header = ["id", "instance", "claimed", "computed", "status", "ms"];
        let rows: Vec<[String; 6]> = self
            .checks
            .iter()
            .map(|c| {
                [
                    c.id.clone(),
                    c.instance.clone(),
                    c.claimed.to_string(),
                    c.computed.as_ref().map_or("-".into(), |q| q.to_string()),
                    c.status.to_string(),
                    format!("{:.1}", c.wall_ms),
                ]
            })
            .collect();
        let mut width = header.map(str::len);
        for r in &rows {
            for (w, cell) in width.iter_mut().zip(r) {
                *w = (*w).max(cell.chars().count()).min(48);
            }
        }
        let line = |cells: &[String]| {
            let mut s = String::new();
            for (i, (cell, w)) in cells.iter().zip(width).enumerate() {
                if i > 0 {
                    s.push_str("  ");
                }
                s.push_str(&format!("{cell:<w$}"));
            }
            s.trim_end().to_string() + "\n"
        };
        let mut out = line(&header.map(String::from));
        for (r, c) in rows.iter().zip(&self.checks) {
            out.push_str(&line(r));
            if c.status != Status::Pass && !c.notes.is_empty() {
                out.push_str(&format!("    {}\n", c.notes));
            }
        }
        out.push_str(&format!(
            "{} checks: {} pass, {} fail, {} skipped ({} profile, {:.0} ms)\n",
            self.checks.len(),
            self.count(Status::Pass),
            self.count(Status::Fail),
            self.count(Status::SkippedSize) + self.count(Status::SkippedBudget),
            self.profile.name,
            self.wall_ms,
        ));
        out
    }
}

pub(crate) enum Exact {
    Done(ToughnessCertificate),
    Partial(ToughnessCertificate),
    TooLarge(usize),
}

/// Per-run state: the profile and exact certificates keyed by instance.
pub(crate) struct Ctx<'a> {
    profile: &'a Profile,
    cache: HashMap<String, ToughnessCertificate>,
}

impl<'a> Ctx<'a> {
    fn new(profile: &'a Profile) -> Self {
        Ctx {
            profile,
            cache: HashMap::new(),
        }
    }

    pub(crate) fn exact(&mut self, key: &str, g: &Graph) -> Result<Exact> {
        if g.n() > self.profile.max_n {
            return Ok(Exact::TooLarge(g.n()));
        }
        let cert = match self.cache.get(key) {
            Some(c) => c.clone(),
            None => {
                let opts = ToughnessOptions {
                    budget: self.profile.budget,
                    want_minimizers: true,
                    threads: self.profile.threads,
                };
                let c = toughness_exact(g, &opts)?;
                self.cache.insert(key.to_string(), c.clone());
                c
            }
        };
        Ok(if cert.exhaustive { Exact::Done(cert) } else { Exact::Partial(cert) })
    }

    pub(crate) fn max_n(&self) -> usize {
        self.profile.max_n
    }
}

/// Parses `key=value` pairs separated by commas.
pub(crate) fn params(s: &str) -> Result<BTreeMap<String, usize>> {
    let mut out = BTreeMap::new();
    for item in s.split(',').map(str::trim).filter(|i| !i.is_empty()) {
        let (k, v) = item
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("`{item}` is not key=value")))?;
        let v = v
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("`{v}` is not a non-negative integer")))?;
        out.insert(k.trim().to_string(), v);
    }
    Ok(out)
}

/// The default checklist as `(id, params)` pairs.
pub fn plan() -> Vec<(&'static str, String)> {
    checks::plan()
}

/// Every check id the suite knows.
pub fn check_ids() -> Vec<&'static str> {
    let mut ids: Vec<&str> = plan().into_iter().map(|(id, _)| id).collect();
    ids.sort_unstable();
    ids.dedup();
    ids
}

fn timed(ctx: &mut Ctx<'_>, id: &str, params: &str) -> Result<TheoremCheck> {
    let start = Instant::now();
    let mut c = checks::run(ctx, id, params)?;
    c.wall_ms = start.elapsed().as_secs_f64() * 1e3;
    Ok(c)
}

/// A single check outside the suite.
pub fn check_one(id: &str, params: &str, profile: &Profile) -> Result<TheoremCheck> {
    timed(&mut Ctx::new(profile), id, params)
}

/// Runs the full checklist. Errors inside a check are reported as failures.
pub fn run_suite(profile: &Profile) -> VerificationReport {
    let start = Instant::now();
    let mut ctx = Ctx::new(profile);
    let mut out: Vec<TheoremCheck> = plan()
        .into_iter()
        .map(|(id, p)| {
            timed(&mut ctx, id, &p).unwrap_or_else(|e| {
                TheoremCheck::new(id, p.clone(), Quantity::boolean(true)).fail(format!("error: {e}"))
            })
        })
        .collect();
    out.sort_by(|a, b| a.id.cmp(&b.id));
    VerificationReport {
        profile: profile.clone(),
        checks: out,
        wall_ms: start.elapsed().as_secs_f64() * 1e3,
    }
}
