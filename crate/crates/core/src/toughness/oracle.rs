//! Brute-force toughness over every vertex subset. Shares no code with the
//! seeded search beyond the graph's own component counting.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rational::Rational;
use crate::VertexSet;

/// Largest graph the oracle accepts.
pub const ORACLE_MAX_N: usize = 24;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NaiveToughness {
    pub value: Rational,
    /// All optimal sets, sorted.
    pub minimizers: Vec<VertexSet>,
}

/// Minimum of `|S| / c(G - S)` over all `2^n` subsets with at least two
/// remaining components.
pub fn toughness_naive(g: &Graph) -> Result<NaiveToughness> {
    let n = g.n();
    if n > ORACLE_MAX_N {
        return Err(Error::TooLarge(n));
    }
    let mut best: Option<Rational> = None;
    let mut minimizers = Vec::new();
    for mask in 0u32..(1u32 << n) {
        let s = VertexSet::from_indices(n, (0..n).filter(|&v| mask >> v & 1 == 1));
        let (c, _) = g.components_after_removal(&s);
        if c < 2 {
            continue;
        }
        let r = Rational::ratio(s.len(), c);
        match best {
            Some(b) if r > b => {}
            Some(b) if r == b => minimizers.push(s),
            _ => {
                best = Some(r);
                minimizers = vec![s];
            }
        }
    }
    let value = best.ok_or(Error::Complete)?;
    minimizers.sort();
    Ok(NaiveToughness { value, minimizers })
}
