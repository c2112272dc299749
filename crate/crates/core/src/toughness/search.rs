//! Seeded growth search for exact toughness.
//!
//! For a target component count `c`, every separator `S` with exactly `c`
//! components is generated once: the seeds are the minimum vertices of the
//! components, and each component grows from its seed by deciding frontier
//! vertices one at a time (join the adjacent component, or go to `S`).
//! Vertices that can no longer join any component are forced into `S`, and a
//! branch dies as soon as `|S|` exceeds `floor(best * c)`.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::sync::Mutex;

use rayon::prelude::*;

use crate::bitset::Bits;
use crate::rational::Rational;

/// Shared best ratio, packed as `numerator << 32 | denominator`, together
/// with the ordered trace of improvements.
pub(crate) struct SharedBest {
    packed: AtomicU64,
    trace: Mutex<Vec<Rational>>,
}

fn pack(r: Rational) -> u64 {
    ((r.numer() as u64) << 32) | r.denom() as u64
}

fn unpack(p: u64) -> Rational {
    Rational::new((p >> 32) as i64, (p & 0xffff_ffff) as i64)
}

impl SharedBest {
    pub fn new(initial: Rational) -> Self {
        SharedBest {
            packed: AtomicU64::new(pack(initial)),
            trace: Mutex::new(vec![initial]),
        }
    }

    #[inline]
    pub fn get(&self) -> Rational {
        unpack(self.packed.load(Ordering::Acquire))
    }

    /// Lowers the shared value to `r` if `r` is smaller. Updates happen under
    /// the trace lock so the recorded trace is strictly decreasing.
    pub fn offer(&self, r: Rational) {
        if r >= self.get() {
            return;
        }
        let mut trace = self.trace.lock().expect("trace lock");
        if r < self.get() {
            self.packed.store(pack(r), Ordering::Release);
            trace.push(r);
        }
    }

    pub fn into_trace(self) -> Vec<Rational> {
        self.trace.into_inner().expect("trace lock")
    }
}

/// Global work accounting shared by all workers.
pub(crate) struct Budget {
    pub limit: u64,
    pub used: AtomicU64,
    pub exhausted: AtomicBool,
}

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget {
            limit,
            used: AtomicU64::new(0),
            exhausted: AtomicBool::new(false),
        }
    }

    fn charge(&self, units: u64) -> bool {
        let total = self.used.fetch_add(units, Ordering::Relaxed) + units;
        if total > self.limit {
            self.exhausted.store(true, Ordering::Relaxed);
        }
        !self.exhausted.load(Ordering::Relaxed)
    }
}

const FLUSH: u64 = 1024;

struct Worker<'a, const W: usize> {
    adj: &'a [Bits<W>],
    c: usize,
    below: Vec<Bits<W>>,
    best: &'a SharedBest,
    budget: &'a Budget,
    pending: u64,
    stopped: bool,
    found: Vec<(Rational, Bits<W>)>,
}

#[derive(Clone)]
struct State<const W: usize> {
    nb: Vec<Bits<W>>,
    sep: Bits<W>,
    undecided: Bits<W>,
}

impl<const W: usize> Worker<'_, W> {
    fn tick(&mut self) -> bool {
        self.pending += 1;
        if self.pending >= FLUSH {
            let units = std::mem::take(&mut self.pending);
            if !self.budget.charge(units) {
                self.stopped = true;
            }
        }
        !self.stopped
    }

    fn flush(&mut self) {
        let units = std::mem::take(&mut self.pending);
        self.budget.charge(units);
    }

    /// Vertices that can join no component: adjacent to two components,
    /// below every seed, or adjacent to a component whose seed exceeds them.
    fn forced(&self, st: &State<W>) -> (Bits<W>, Bits<W>) {
        let mut once = Bits::EMPTY;
        let mut twice = Bits::EMPTY;
        let mut low = self.below[0];
        for i in 0..self.c {
            twice = twice.or(once.and(st.nb[i]));
            once = once.or(st.nb[i]);
            low = low.or(st.nb[i].and(self.below[i]));
        }
        (st.undecided.and(twice.or(low)), once)
    }

    fn grow(&mut self, mut st: State<W>) {
        if !self.tick() {
            return;
        }
        let limit = self.best.get().floor_times(self.c);
        let (forced, once) = self.forced(&st);
        st.sep = st.sep.or(forced);
        st.undecided = st.undecided.and_not(forced);
        let size = st.sep.count() as i64;
        if size > limit {
            return;
        }
        let frontier = st.undecided.and(once);
        let Some(x) = frontier.first() else {
            if st.undecided.is_empty() {
                let r = Rational::ratio(size as usize, self.c);
                if r <= self.best.get() {
                    self.best.offer(r);
                    self.found.push((r, st.sep));
                }
            }
            return;
        };
        let i = (0..self.c)
            .find(|&i| st.nb[i].contains(x))
            .expect("frontier vertex touches a component");
        let mut into_sep = st.clone();
        st.undecided.remove(x);
        st.nb[i] = st.nb[i].or(self.adj[x]);
        self.grow(st);
        if size < limit {
            into_sep.undecided.remove(x);
            into_sep.sep.insert(x);
            self.grow(into_sep);
        }
    }
}

/// Independent, increasing seed tuples whose forced separator part already
/// fits within `limit`.
fn seed_sets<const W: usize>(adj: &[Bits<W>], n: usize, c: usize, limit: i64) -> Vec<Vec<usize>> {
    fn rec<const W: usize>(
        adj: &[Bits<W>],
        n: usize,
        c: usize,
        limit: i64,
        seeds: &mut Vec<usize>,
        nb: &mut Vec<Bits<W>>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if seeds.len() == c {
            out.push(seeds.clone());
            return;
        }
        let start = seeds.last().map_or(0, |&s| s + 1);
        // Each later seed adds a component, so c - len - 1 vertices must
        // still follow this one.
        let room = c - seeds.len() - 1;
        for v in start..n.saturating_sub(room) {
            if seeds.iter().any(|&s| adj[s].contains(v)) {
                continue;
            }
            seeds.push(v);
            nb.push(adj[v]);
            let mut once = Bits::<W>::EMPTY;
            let mut twice = Bits::<W>::EMPTY;
            for b in nb.iter() {
                twice = twice.or(once.and(*b));
                once = once.or(*b);
            }
            let mut forced = Bits::<W>::below(seeds[0]);
            if seeds.len() >= 2 {
                forced = forced.or(twice);
            }
            let lower = forced.count() as i64;
            if lower <= limit {
                rec(adj, n, c, limit, seeds, nb, out);
            }
            seeds.pop();
            nb.pop();
        }
    }
    let mut out = Vec::new();
    rec(adj, n, c, limit, &mut Vec::new(), &mut Vec::new(), &mut out);
    out
}

/// Runs the growth search for every component count in `counts` and returns
/// every separator found whose ratio was at most the running best.
pub(crate) fn search<const W: usize>(
    adj: &[Bits<W>],
    n: usize,
    counts: impl Iterator<Item = usize>,
    kappa: usize,
    best: &SharedBest,
    budget: &Budget,
) -> Vec<(Rational, Bits<W>)> {
    let mut found = Vec::new();
    for c in counts {
        if budget.exhausted.load(Ordering::Relaxed) {
            break;
        }
        let limit = best.get().floor_times(c).min((n - c) as i64);
        if limit < kappa as i64 {
            continue;
        }
        let seeds = seed_sets(adj, n, c, limit);
        let batch: Vec<Vec<(Rational, Bits<W>)>> = seeds
            .par_iter()
            .map(|seed| {
                let mut w = Worker {
                    adj,
                    c,
                    below: seed.iter().map(|&s| Bits::below(s)).collect(),
                    best,
                    budget,
                    pending: 0,
                    stopped: false,
                    found: Vec::new(),
                };
                let mut undecided = Bits::<W>::EMPTY;
                for v in 0..n {
                    undecided.insert(v);
                }
                for &s in seed {
                    undecided.remove(s);
                }
                let st = State {
                    nb: seed.iter().map(|&s| adj[s]).collect(),
                    sep: Bits::EMPTY,
                    undecided,
                };
                w.grow(st);
                w.flush();
                w.found
            })
            .collect();
        found.extend(batch.into_iter().flatten());
    }
    found
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn packing_round_trips() {
        for r in [Rational::new(4, 3), Rational::new(0, 1), Rational::new(36, 1)] {
            assert_eq!(unpack(pack(r)), r);
        }
    }

    #[test]
    fn shared_best_trace_decreases() {
        let b = SharedBest::new(Rational::from_int(5));
        b.offer(Rational::new(7, 2));
        b.offer(Rational::from_int(4));
        b.offer(Rational::from_int(3));
        assert_eq!(b.get(), Rational::from_int(3));
        assert_eq!(
            b.into_trace(),
            vec![Rational::from_int(5), Rational::new(7, 2), Rational::from_int(3)]
        );
    }
}
