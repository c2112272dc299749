//! Exact toughness with certificates, minimizer classification and the
//! spectral toughness bounds.

mod bounds;
mod oracle;
mod search;

pub use bounds::{bounds, BoundViolation, BoundsReport, TauBound};
pub use oracle::{toughness_naive, NaiveToughness};

use serde::Serialize;

use crate::bitset::{with_width, Bits};
use crate::connectivity::{max_independent_set, vertex_connectivity};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::Rational;
use crate::spectral::{hoffman_ratio_bound, DEFAULT_GROUP_TOL};
use crate::VertexSet;
use search::{Budget, SharedBest};

pub const DEFAULT_BUDGET: u64 = 1_000_000_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ToughnessOptions {
    /// Upper limit on search nodes across all workers.
    pub budget: u64,
    pub want_minimizers: bool,
    /// Worker threads; 0 uses the ambient rayon pool.
    pub threads: usize,
}

impl Default for ToughnessOptions {
    fn default() -> Self {
        ToughnessOptions {
            budget: DEFAULT_BUDGET,
            want_minimizers: false,
            threads: 0,
        }
    }
}

impl ToughnessOptions {
    pub fn with_minimizers(mut self) -> Self {
        self.want_minimizers = true;
        self
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub work: u64,
    /// Best ratio after initialisation and after every improvement.
    pub improvements: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ToughnessCertificate {
    pub value: Rational,
    pub witness: VertexSet,
    pub components: usize,
    pub exhaustive: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub minimizers: Option<Vec<VertexSet>>,
    #[serde(skip)]
    pub stats: SearchStats,
}

impl ToughnessCertificate {
    /// Recomputes the component count of the witness and checks the ratio.
    pub fn verify(&self, g: &Graph) -> bool {
        let (c, _) = g.components_after_removal(&self.witness);
        c == self.components
            && c >= 2
            && Rational::ratio(self.witness.len(), c) == self.value
            && self
                .minimizers
                .iter()
                .flatten()
                .all(|s| toughness_of_set(g, s).ok() == Some(self.value))
    }
}

/// `|s| / c(G - s)` for a disconnecting set `s`.
pub fn toughness_of_set(g: &Graph, s: &VertexSet) -> Result<Rational> {
    let (c, _) = g.components_after_removal(s);
    if c < 2 {
        return Err(Error::NotDisconnecting(c));
    }
    Ok(Rational::ratio(s.len(), c))
}

/// Open neighbourhoods of all vertices, deduplicated and sorted.
pub fn neighborhood_sets(g: &Graph) -> Vec<VertexSet> {
    let mut v: Vec<VertexSet> = (0..g.n()).map(|v| g.neighbors(v).clone()).collect();
    v.sort();
    v.dedup();
    v
}

/// Complements of all maximum independent sets, sorted.
pub fn mis_complement_sets(g: &Graph) -> Result<Vec<VertexSet>> {
    let mis = max_independent_set(g, true)?;
    let mut v: Vec<VertexSet> = mis
        .all_maximum
        .expect("enumeration requested")
        .iter()
        .map(VertexSet::complement)
        .collect();
    v.sort();
    Ok(v)
}

/// Exact toughness of a non-complete graph. Disconnected graphs have
/// toughness 0, certified by the empty set.
pub fn toughness_exact(g: &Graph, opts: &ToughnessOptions) -> Result<ToughnessCertificate> {
    if g.is_complete() {
        return Err(Error::Complete);
    }
    if !g.is_connected() {
        let empty = VertexSet::new(g.n());
        return Ok(ToughnessCertificate {
            value: Rational::from_int(0),
            components: g.component_count(),
            witness: empty.clone(),
            exhaustive: true,
            minimizers: opts.want_minimizers.then(|| vec![empty]),
            stats: SearchStats {
                work: 0,
                improvements: vec![Rational::from_int(0)],
            },
        });
    }
    let run = || with_width!(g.n(), W => exact_kernel::<W>(g, opts), else Err(Error::TooLarge(g.n())));
    if opts.threads == 0 {
        run()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.threads)
            .build()
            .map_err(|e| Error::InvalidParameter(e.to_string()))?;
        pool.install(run)
    }
}

fn exact_kernel<const W: usize>(g: &Graph, opts: &ToughnessOptions) -> Result<ToughnessCertificate> {
    let n = g.n();
    let kappa = vertex_connectivity(g);
    let alpha = max_independent_set(g, false)?;

    // Seed the incumbent with a minimum vertex cut, the complement of a
    // maximum independent set, and every disconnecting neighbourhood.
    let mut initial: Vec<VertexSet> = Vec::new();
    initial.extend(kappa.cut.clone());
    initial.push(alpha.witness.complement());
    initial.extend(neighborhood_sets(g));
    let mut pool: Vec<(Rational, VertexSet)> = initial
        .into_iter()
        .filter_map(|s| toughness_of_set(g, &s).ok().map(|r| (r, s)))
        .collect();
    let start = pool.iter().map(|p| p.0).min().expect("non-complete graph");

    let best = SharedBest::new(start);
    let budget = Budget::new(opts.budget);
    let adj: Vec<Bits<W>> = (0..n).map(|v| Bits::from_set(g.neighbors(v))).collect();
    let found = search::search(&adj, n, 2..=alpha.alpha, kappa.value, &best, &budget);
    let value = best.get();
    pool.extend(found.into_iter().map(|(r, b)| (r, b.to_set(n))));

    let mut minimizers: Vec<VertexSet> = pool
        .into_iter()
        .filter(|(r, _)| *r == value)
        .map(|(_, s)| s)
        .collect();
    minimizers.sort();
    minimizers.dedup();
    let witness = minimizers[0].clone();
    let components = g.components_after_removal(&witness).0;
    let exhaustive = !budget.exhausted.load(std::sync::atomic::Ordering::Relaxed);
    Ok(ToughnessCertificate {
        value,
        witness,
        components,
        exhaustive,
        minimizers: opts.want_minimizers.then_some(minimizers),
        stats: SearchStats {
            work: budget.used.load(std::sync::atomic::Ordering::Relaxed),
            improvements: best.into_trace(),
        },
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HoffmanUpper {
    pub value: Rational,
    pub witness: VertexSet,
}

/// When the independence number meets the Hoffman ratio bound, the
/// complement of a maximum independent set certifies `t <= k / (-lambda_min)`.
/// Returns `None` for non-regular graphs and when equality fails.
pub fn hoffman_equality_upper(g: &Graph) -> Result<Option<HoffmanUpper>> {
    let Some(k) = g.regularity() else {
        return Ok(None);
    };
    if !g.is_connected() || g.is_complete() {
        return Ok(None);
    }
    let h = hoffman_ratio_bound(g)?;
    let alpha = max_independent_set(g, false)?;
    let Some(exact) = h.exact else {
        return Ok(None);
    };
    if exact != Rational::from_int(alpha.alpha as i64) {
        return Ok(None);
    }
    let witness = alpha.witness.complement();
    let (c, _) = g.components_after_removal(&witness);
    if c != alpha.alpha {
        return Ok(None);
    }
    let value = Rational::ratio(witness.len(), c);
    let sp = crate::spectral::spectrum(g, DEFAULT_GROUP_TOL)?;
    let lmin = sp.grouped.last().and_then(|e| e.integer).expect("integral lambda_min");
    debug_assert_eq!(value, Rational::new(k as i64, -lmin));
    Ok(Some(HoffmanUpper { value, witness }))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinimizerClass {
    pub set: VertexSet,
    pub is_neighborhood: bool,
    pub is_mis_complement: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub entries: Vec<MinimizerClass>,
    pub neighborhoods: usize,
    pub mis_complements: usize,
    pub other: usize,
}

impl Classification {
    pub fn other_empty(&self) -> bool {
        self.other == 0
    }
}

/// Labels each minimizer as a vertex neighbourhood and/or the complement of
/// a maximum independent set.
pub fn classify_minimizers(g: &Graph, cert: &ToughnessCertificate) -> Result<Classification> {
    let Some(mins) = cert.minimizers.as_ref().filter(|_| cert.exhaustive) else {
        return Err(Error::NotExhaustive);
    };
    let alpha = max_independent_set(g, false)?.alpha;
    let nbhds = neighborhood_sets(g);
    let entries: Vec<MinimizerClass> = mins
        .iter()
        .map(|s| {
            let rest = s.complement();
            MinimizerClass {
                set: s.clone(),
                is_neighborhood: nbhds.binary_search(s).is_ok(),
                is_mis_complement: rest.len() == alpha && g.is_independent(&rest),
            }
        })
        .collect();
    let count = |f: fn(&MinimizerClass) -> bool| entries.iter().filter(|e| f(e)).count();
    Ok(Classification {
        neighborhoods: count(|e| e.is_neighborhood),
        mis_complements: count(|e| e.is_mis_complement),
        other: count(|e| !e.is_neighborhood && !e.is_mis_complement),
        entries,
    })
}
