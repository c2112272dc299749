//! The individual checks behind [`super::run_suite`].

use std::collections::BTreeMap;

use crate::connectivity::{all_minimum_vertex_cuts, max_independent_set, vertex_connectivity};
use crate::error::{Error, Result};
use crate::families::{self, combinations};
use crate::family_spec::{FamilySpec, GqSpec};
use crate::graph::{isomorphic_small, Graph};
use crate::rational::Rational;
use crate::spectral::{
    check_equitable, quotient_eigenvalues, spectrum, srg_check, theta, QuotientMatrix,
    DEFAULT_GROUP_TOL,
};
use crate::toughness::{
    bounds, hoffman_equality_upper, mis_complement_sets, neighborhood_sets, toughness_of_set,
};
use crate::VertexSet;

use super::{params, Ctx, Exact, Quantity, Status, TheoremCheck};

const SPECTRUM_TOL: f64 = 1e-6;
const TIGHT_TOL: f64 = 1e-7;
/// Largest number of candidate cuts enumerated by the minimum-cut check.
const MAX_CUT_CANDIDATES: usize = 200_000;

fn lattice(v: usize) -> FamilySpec {
    FamilySpec::Lattice { v }
}

fn triangular(v: usize) -> FamilySpec {
    FamilySpec::Triangular { v }
}

fn kneser2(v: usize) -> FamilySpec {
    FamilySpec::Kneser { v, r: 2 }
}

fn gq_complement(q: GqSpec) -> FamilySpec {
    FamilySpec::Complement(Box::new(FamilySpec::PointGraph(q)))
}

fn quadrangles() -> Vec<GqSpec> {
    vec![
        GqSpec::Grid { s: 2 },
        GqSpec::Grid { s: 3 },
        GqSpec::Symplectic { q: 2 },
        GqSpec::Gq24,
        GqSpec::Symplectic { q: 3 },
    ]
}

/// Strongly regular instances with their exact toughness in reach.
fn srg_instances() -> Vec<FamilySpec> {
    let mut v: Vec<FamilySpec> = (2..=5).map(lattice).collect();
    v.extend((4..=7).map(triangular));
    v.extend((5..=7).map(kneser2));
    v.extend(quadrangles().into_iter().map(gq_complement));
    v
}

pub(super) fn plan() -> Vec<(&'static str, String)> {
    let mut p: Vec<(&'static str, String)> = Vec::new();
    let mut add = |id: &'static str, params: String| p.push((id, params));
    for v in 2..=5 {
        add("Thm-L2v", format!("v={v}"));
        add("Min-L2v", format!("v={v}"));
    }
    for v in 4..=7 {
        add("Thm-Tv", format!("v={v}"));
        add("Min-Tv", format!("v={v}"));
    }
    for v in 6..=7 {
        add("Thm-cTv", format!("v={v}"));
        add("Min-cTv", format!("v={v}"));
    }
    add("Thm-Petersen", String::new());
    for q in quadrangles() {
        add("Thm-GQ", q.to_string());
        add("Min-GQ", q.to_string());
        add("GQ-case-analysis", q.to_string());
        add("GQ-axioms", q.to_string());
    }
    for k in 3..=4 {
        add("Thm-5-tightness", format!("k={k}"));
        add("Thm-5-cut", format!("k={k}"));
        add("Thm-5-exact", format!("k={k}"));
        add("Gadget-quotient", format!("k={k}"));
        add("Lemma-Xk", format!("k={k}"));
        add("Bipartite-cut", format!("k={k}"));
    }
    add("Bipartite-cut-exact", "k=3".into());
    for k in [3, 5, 7] {
        add("Quotient-G-prime", format!("k={k}"));
    }
    let bipartite = ["hypercube:d=3", "hypercube:d=4", "cycle:n=6", "cycle:n=8"];
    for s in bipartite {
        add("Cor-bipartite", s.into());
    }
    let mut soundness: Vec<String> = srg_instances().iter().map(|s| s.to_string()).collect();
    soundness.push("petersen".into());
    soundness.extend(["gadget:k=3", "gadget:k=4", "bipartite-cut:k=3"].map(String::from));
    soundness.extend(bipartite.map(String::from));
    for s in soundness {
        add("Bounds-soundness", s);
    }
    let mut hoffman: Vec<FamilySpec> = srg_instances();
    hoffman.push(FamilySpec::Petersen);
    for s in &hoffman {
        add("Hoffman-equality", s.to_string());
    }
    for s in srg_instances() {
        add("Brouwer-Mesner", s.to_string());
        if s.build().map(|g| g.n() <= 16).unwrap_or(false) {
            add("Brouwer-Mesner-cuts", s.to_string());
        }
    }
    for v in 2..=5 {
        add("Matthews-Sumner", lattice(v).to_string());
    }
    for v in 4..=7 {
        add("Matthews-Sumner", triangular(v).to_string());
    }
    let mut catalog: Vec<FamilySpec> = (2..=6).map(lattice).collect();
    catalog.extend((4..=8).map(triangular));
    catalog.extend((5..=8).map(kneser2));
    catalog.extend(quadrangles().into_iter().map(gq_complement));
    for s in &catalog {
        add("SRG-spectra", s.to_string());
        add("Independence", s.to_string());
    }
    p
}

pub(super) fn run(ctx: &mut Ctx<'_>, id: &str, raw: &str) -> Result<TheoremCheck> {
    match id {
        "Thm-L2v" => thm_l2v(ctx, param(raw, "v")?),
        "Min-L2v" => minimizers(ctx, id, &lattice(min(param(raw, "v")?, 2)?), true, true),
        "Thm-Tv" => thm_tv(ctx, param(raw, "v")?),
        "Min-Tv" => {
            let v = min(param(raw, "v")?, 4)?;
            minimizers(ctx, id, &triangular(v), true, v % 2 == 0)
        }
        "Thm-cTv" => thm_ctv(ctx, param(raw, "v")?),
        "Min-cTv" => minimizers(ctx, id, &kneser2(min(param(raw, "v")?, 6)?), false, true),
        "Thm-Petersen" => thm_petersen(ctx, ""),
        "Thm-GQ" => thm_gq(ctx, raw.parse()?),
        "Min-GQ" => {
            let q: GqSpec = raw.parse()?;
            let (s, _) = q.build()?.order();
            minimizers(ctx, id, &gq_complement(q), s == 2, true)
        }
        "GQ-case-analysis" => gq_case_analysis(raw.parse()?),
        "GQ-axioms" => gq_axioms(raw.parse()?),
        "Thm-5-tightness" => thm5_tightness(min(param(raw, "k")?, 3)?),
        "Thm-5-cut" => thm5_cut(min(param(raw, "k")?, 3)?),
        "Thm-5-exact" => thm5_exact(ctx, min(param(raw, "k")?, 3)?),
        "Gadget-quotient" => gadget_quotient(min(param(raw, "k")?, 3)?),
        "Quotient-G-prime" => quotient_g_prime(param(raw, "k")?),
        "Lemma-Xk" => lemma_xk(min(param(raw, "k")?, 3)?),
        "Cor-bipartite" => cor_bipartite(ctx, &raw.parse()?),
        "Bounds-soundness" => bounds_soundness(ctx, &raw.parse()?),
        "Hoffman-equality" => hoffman_equality(&raw.parse()?),
        "Brouwer-Mesner" => brouwer_mesner(&raw.parse()?),
        "Brouwer-Mesner-cuts" => brouwer_mesner_cuts(&raw.parse()?),
        "Matthews-Sumner" => matthews_sumner(ctx, &raw.parse()?),
        "Bipartite-cut" => bipartite_cut(min(param(raw, "k")?, 3)?),
        "Bipartite-cut-exact" => bipartite_cut_exact(ctx, min(param(raw, "k")?, 3)?),
        "SRG-spectra" => srg_spectra(&raw.parse()?),
        "Independence" => independence(&raw.parse()?),
        _ => Err(Error::UnknownCheck(id.to_string())),
    }
}

fn param(raw: &str, key: &str) -> Result<usize> {
    let p: BTreeMap<String, usize> = params(raw)?;
    if let Some(extra) = p.keys().find(|k| *k != key) {
        return Err(Error::Parse(format!("unexpected parameter `{extra}`")));
    }
    p.get(key)
        .copied()
        .ok_or_else(|| Error::Parse(format!("missing parameter `{key}`")))
}

fn min(v: usize, lo: usize) -> Result<usize> {
    if v < lo {
        return Err(Error::InvalidParameter(format!("parameter {v} is below {lo}")));
    }
    Ok(v)
}

/// Compares the exact toughness of `spec` against `claimed`, or records why
/// it was skipped.
fn value_check(ctx: &mut Ctx<'_>, id: &str, spec: &FamilySpec, claimed: Quantity) -> Result<TheoremCheck> {
    let g = spec.build()?;
    let check = TheoremCheck::new(id, spec.to_string(), claimed);
    Ok(match ctx.exact(&spec.to_string(), &g)? {
        Exact::Done(c) => check.computed(Quantity::rational(c.value)),
        Exact::Partial(c) => check.skipped(
            Status::SkippedBudget,
            format!("search budget exhausted; best set found gives {}", c.value),
        ),
        Exact::TooLarge(n) => check.skipped(
            Status::SkippedSize,
            format!("n = {n} exceeds max_n = {}", ctx.max_n()),
        ),
    })
}

fn thm_l2v(ctx: &mut Ctx<'_>, v: usize) -> Result<TheoremCheck> {
    let v = min(v, 2)?;
    value_check(ctx, "Thm-L2v", &lattice(v), Quantity::rational(Rational::from_int(v as i64 - 1)))
}

fn thm_tv(ctx: &mut Ctx<'_>, v: usize) -> Result<TheoremCheck> {
    let v = min(v, 4)?;
    value_check(ctx, "Thm-Tv", &triangular(v), Quantity::rational(Rational::from_int(v as i64 - 2)))
}

fn thm_ctv(ctx: &mut Ctx<'_>, v: usize) -> Result<TheoremCheck> {
    match v {
        5 => thm_petersen(ctx, "v = 5 lies outside v >= 6; ran the Petersen case instead"),
        v if v < 5 => Err(Error::InvalidParameter(format!("complement of T_v needs v >= 5, got {v}"))),
        v => value_check(ctx, "Thm-cTv", &kneser2(v), Quantity::rational(Rational::new(v as i64 - 2, 2))),
    }
}

fn thm_petersen(ctx: &mut Ctx<'_>, extra: &str) -> Result<TheoremCheck> {
    let spec = FamilySpec::Petersen;
    let check = value_check(ctx, "Thm-Petersen", &spec, Quantity::rational(Rational::new(4, 3)))?;
    let upper = hoffman_equality_upper(&spec.build()?)?.map(|h| h.value);
    let note = match upper {
        Some(h) => format!("k/(-lambda_min) = {h} is not attained"),
        None => String::new(),
    };
    Ok(check.note(extra).note(note))
}

fn thm_gq(ctx: &mut Ctx<'_>, q: GqSpec) -> Result<TheoremCheck> {
    let (s, t) = q.build()?.order();
    let spec = gq_complement(q);
    let check = value_check(ctx, "Thm-GQ", &spec, Quantity::rational(Rational::from_int((s * t) as i64)))?;
    if check.status.is_skipped() {
        let g = spec.build()?;
        let upper = hoffman_equality_upper(&g)?.map_or("-".to_string(), |h| h.value.to_string());
        let kappa = vertex_connectivity(&g).value;
        return Ok(check.note(format!(
            "upper bound {upper} from a maximum independent set, two-component ratio >= {}",
            Rational::ratio(kappa, 2)
        )));
    }
    Ok(check)
}

/// Minimizers must equal the union of the selected classes: disconnecting
/// vertex neighbourhoods and complements of maximum independent sets.
fn minimizers(
    ctx: &mut Ctx<'_>,
    id: &str,
    spec: &FamilySpec,
    with_nbhd: bool,
    with_mis: bool,
) -> Result<TheoremCheck> {
    let g = spec.build()?;
    let check = TheoremCheck::new(id, spec.to_string(), Quantity::boolean(true));
    let cert = match ctx.exact(&spec.to_string(), &g)? {
        Exact::Done(c) => c,
        Exact::Partial(_) => return Ok(check.skipped(Status::SkippedBudget, "search budget exhausted")),
        Exact::TooLarge(n) => {
            return Ok(check.skipped(Status::SkippedSize, format!("n = {n} exceeds max_n = {}", ctx.max_n())))
        }
    };
    let nbhd: Vec<VertexSet> = neighborhood_sets(&g)
        .into_iter()
        .filter(|s| toughness_of_set(&g, s).is_ok())
        .collect();
    let mis = mis_complement_sets(&g)?;
    let mut expected = Vec::new();
    if with_nbhd {
        expected.extend(nbhd.iter().cloned());
    }
    if with_mis {
        expected.extend(mis.iter().cloned());
    }
    expected.sort();
    expected.dedup();
    let found = cert.minimizers.unwrap_or_default();
    let in_nbhd = found.iter().filter(|s| nbhd.binary_search(s).is_ok()).count();
    let in_mis = found.iter().filter(|s| mis.binary_search(s).is_ok()).count();
    Ok(check.computed(Quantity::boolean(found == expected)).note(format!(
        "{} minimizers ({in_nbhd} neighbourhoods, {in_mis} MIS complements); expected {}",
        found.len(),
        expected.len()
    )))
}

/// Every edge's common non-neighbourhood is a clique, so a separator leaving
/// three or more components leaves only isolated vertices.
fn co_neighbourhoods_are_cliques(g: &Graph) -> bool {
    g.edges().into_iter().all(|(a, b)| {
        let rest: Vec<usize> = (0..g.n())
            .filter(|&x| x != a && x != b && !g.has_edge(a, x) && !g.has_edge(b, x))
            .collect();
        rest.iter()
            .enumerate()
            .all(|(i, &x)| rest[i + 1..].iter().all(|&y| g.has_edge(x, y)))
    })
}

/// Certifies `t = st` for a quadrangle complement from its ingredients: the
/// independence number and maximum sets, the vertex connectivity, the
/// isolated-components property and the Hoffman upper bound.
fn gq_case_analysis(q: GqSpec) -> Result<TheoremCheck> {
    let gq = q.build()?;
    let (s, t) = gq.order();
    let spec = gq_complement(q);
    let g = spec.build()?;
    let n = g.n();
    let check = TheoremCheck::new("GQ-case-analysis", spec.to_string(), Quantity::rational(Rational::from_int((s * t) as i64)));

    let mis = max_independent_set(&g, true)?;
    let mut lines = gq.line_sets();
    lines.sort();
    let alpha_ok = mis.alpha == s + 1;
    let lines_ok = mis.all_maximum.as_ref() == Some(&lines);
    let kappa = vertex_connectivity(&g).value;
    let kappa_ok = kappa == s * s * t;
    let isolated_ok = co_neighbourhoods_are_cliques(&g);
    let upper = hoffman_equality_upper(&g)?.map(|h| h.value);
    // Three or more components: S is the complement of an independent set
    // of size c <= alpha, so |S|/c >= (n - alpha)/alpha.
    let many = Rational::ratio(n - mis.alpha, mis.alpha);
    let two = Rational::ratio(kappa, 2);
    let lower = many.min(two);
    let notes = format!(
        "alpha = {} (lines {}), {} maximum sets, kappa = {kappa}, isolated components {}, \
         lower bound min({many}, {two}) = {lower}, upper bound {}",
        mis.alpha,
        if lines_ok { "match" } else { "differ" },
        mis.all_maximum.as_ref().map_or(0, Vec::len),
        if isolated_ok { "forced" } else { "not forced" },
        upper.map_or("-".into(), |u| u.to_string()),
    );
    let ingredients = alpha_ok && lines_ok && kappa_ok && isolated_ok;
    Ok(match upper {
        Some(u) if ingredients && u == lower => check.computed(Quantity::rational(u)).note(notes),
        _ => check.fail(notes),
    })
}

fn gq_axioms(q: GqSpec) -> Result<TheoremCheck> {
    let audit = q.build()?.audit();
    let check = TheoremCheck::new("GQ-axioms", q.to_string(), Quantity::boolean(true));
    let mut note = format!("{} axiom instances", audit.axiom_instances);
    if let Some(v) = audit.violations.first() {
        note.push_str(&format!(", first violation: {v}"));
    }
    Ok(check.computed(Quantity::boolean(audit.is_valid())).note(note))
}

/// Layout of the extremal gadget. Each block starts with a cocktail-party
/// part of `hub` vertices, matched to the hub, followed by its clique.
struct Layout {
    hub: usize,
    copies: usize,
    block: usize,
}

fn layout(k: usize) -> Layout {
    if k % 2 == 1 {
        Layout { hub: k - 1, copies: k, block: k + 1 }
    } else {
        Layout { hub: k - 2, copies: k - 1, block: k + 1 }
    }
}

fn gadget_spec(k: usize) -> FamilySpec {
    FamilySpec::Gadget { k }
}

fn thm5_tightness(k: usize) -> Result<TheoremCheck> {
    let spec = gadget_spec(k);
    let g = spec.build()?;
    let sp = spectrum(&g, DEFAULT_GROUP_TOL)?;
    let th = theta(k)?;
    let l2 = sp.second().expect("gadget has several vertices");
    Ok(TheoremCheck::new("Thm-5-tightness", spec.to_string(), Quantity::real(th, TIGHT_TOL))
        .computed(Quantity::real(l2, 0.0))
        .note(format!("lambda2 - theta = {:.3e}", l2 - th)))
}

fn hub_ratio(k: usize) -> Rational {
    let l = layout(k);
    Rational::ratio(l.hub, l.copies)
}

fn thm5_cut(k: usize) -> Result<TheoremCheck> {
    let spec = gadget_spec(k);
    let g = spec.build()?;
    let hub = VertexSet::from_indices(g.n(), 0..layout(k).hub);
    let r = toughness_of_set(&g, &hub)?;
    Ok(TheoremCheck::new("Thm-5-cut", spec.to_string(), Quantity::at_most(hub_ratio(k)))
        .computed(Quantity::rational(r))
        .note("removing the hub"))
}

fn thm5_exact(ctx: &mut Ctx<'_>, k: usize) -> Result<TheoremCheck> {
    let spec = gadget_spec(k);
    let check = value_check(ctx, "Thm-5-exact", &spec, Quantity::at_most(hub_ratio(k)))?;
    let below_one = matches!(check.computed, Some(Quantity::Rational { value }) if value < Rational::from_int(1));
    Ok(if check.status == Status::Pass && !below_one {
        check.fail("toughness is not below 1")
    } else {
        check
    })
}

fn gadget_quotient(k: usize) -> Result<TheoremCheck> {
    let spec = gadget_spec(k);
    let g = spec.build()?;
    let n = g.n();
    let l = layout(k);
    let mut parts = vec![VertexSet::from_indices(n, 0..l.hub), VertexSet::new(n), VertexSet::new(n)];
    for c in 0..l.copies {
        let off = l.hub + c * l.block;
        for v in off..off + l.hub {
            parts[1].insert(v);
        }
        for v in off + l.hub..off + l.block {
            parts[2].insert(v);
        }
    }
    let kk = k as f64;
    let expected = if k % 2 == 1 {
        vec![vec![0.0, kk, 0.0], vec![1.0, kk - 3.0, 2.0], vec![0.0, kk - 1.0, 1.0]]
    } else {
        vec![vec![1.0, kk - 1.0, 0.0], vec![1.0, kk - 4.0, 3.0], vec![0.0, kk - 2.0, 2.0]]
    };
    let check = TheoremCheck::new("Gadget-quotient", spec.to_string(), Quantity::boolean(true));
    let q = match check_equitable(&g, &parts) {
        Ok(q) => q,
        Err(e) => return Ok(check.computed(Quantity::boolean(false)).note(format!("{e}"))),
    };
    let matrix_ok = q == QuotientMatrix::new(expected);
    let roots = quotient_eigenvalues(&q)?;
    let sp = spectrum(&g, DEFAULT_GROUP_TOL)?;
    let roots_ok = roots
        .iter()
        .all(|r| sp.grouped.iter().any(|e| (e.value - r).abs() <= SPECTRUM_TOL));
    let th = theta(k)?;
    let mult = sp
        .grouped
        .iter()
        .find(|e| (e.value - th).abs() <= SPECTRUM_TOL)
        .map_or(0, |e| e.multiplicity);
    let mult_ok = mult + 1 >= l.copies;
    let shown: Vec<String> = roots.iter().map(|r| format!("{r:.6}")).collect();
    Ok(check
        .computed(Quantity::boolean(matrix_ok && roots_ok && mult_ok))
        .note(format!(
            "quotient {:?}, roots [{}] in spectrum: {roots_ok}, theta multiplicity {mult} (need >= {})",
            q.entries,
            shown.join(", "),
            l.copies - 1
        )))
}

/// Hub of `k - 1` independent vertices matched into `k` cocktail-party
/// blocks on `k - 1` vertices each.
pub(crate) fn g_prime(k: usize) -> Result<Graph> {
    if k < 3 || k % 2 == 0 {
        return Err(Error::InvalidParameter(format!("needs odd k >= 3, got {k}")));
    }
    let h = k - 1;
    let block = families::matching_complement(h)?;
    let mut parts = vec![Graph::empty(h)];
    parts.extend(std::iter::repeat_n(block, k));
    let base = Graph::disjoint_union(&parts);
    let mut edges = base.edges();
    for c in 0..k {
        let off = h + c * h;
        edges.extend((0..h).map(|i| (i, off + i)));
    }
    Graph::build(base.n(), &edges)
}

fn quotient_g_prime(k: usize) -> Result<TheoremCheck> {
    let g = g_prime(k)?;
    let kk = k as f64;
    let q = QuotientMatrix::new(vec![vec![0.0, kk], vec![1.0, kk - 3.0]]);
    let root = quotient_eigenvalues(&q)?
        .into_iter()
        .fold(f64::NEG_INFINITY, f64::max);
    let l1 = spectrum(&g, DEFAULT_GROUP_TOL)?.largest();
    let th = theta(k)?;
    let alt = (kk - 3.0 + (kk * kk - 6.0 * kk + 25.0).sqrt()) / 2.0;
    let check = TheoremCheck::new("Quotient-G-prime", format!("g-prime:k={k}"), Quantity::real(root, TIGHT_TOL))
        .computed(Quantity::real(l1, 0.0))
        .note(format!(
            "(k-3+sqrt(k^2-2k+9))/2 = {root:.9}; (k-3+sqrt(k^2-6k+25))/2 = {alt:.9}; theta = {th:.9}"
        ));
    Ok(if l1 >= th { check.fail("largest eigenvalue is not below theta") } else { check })
}

/// All labelled graphs on `n` vertices in the extremal class for `k`:
/// connected, irregular, maximum degree `k`, `2e >= kn - k + 1`, and at
/// least two (odd `k`) or three (even `k`) vertices of degree `k`.
pub(crate) fn extremal_class(k: usize, n: usize) -> Result<Vec<Graph>> {
    let pairs = combinations(n, 2);
    if pairs.len() > 24 {
        return Err(Error::TooLarge(n));
    }
    let need_top = if k % 2 == 1 { 2 } else { 3 };
    let mut out = Vec::new();
    for mask in 0u32..(1u32 << pairs.len()) {
        let mut deg = vec![0usize; n];
        let mut edges = Vec::new();
        for (i, p) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                deg[p[0]] += 1;
                deg[p[1]] += 1;
                edges.push((p[0], p[1]));
            }
        }
        let max = deg.iter().copied().max().unwrap_or(0);
        let top = deg.iter().filter(|&&d| d == k).count();
        let regular = deg.iter().all(|&d| d == deg[0]);
        if max != k || regular || top < need_top || 2 * edges.len() + k < k * n + 1 {
            continue;
        }
        let g = Graph::build(n, &edges)?;
        if g.is_connected() {
            out.push(g);
        }
    }
    Ok(out)
}

fn lemma_xk(k: usize) -> Result<TheoremCheck> {
    let th = theta(k)?;
    let xk = families::extremal_x(k)?;
    let mut members = 0;
    let mut at_theta = 0;
    let mut ok = true;
    for n in [k + 1, k + 2] {
        for g in extremal_class(k, n)? {
            members += 1;
            let l1 = spectrum(&g, DEFAULT_GROUP_TOL)?.largest();
            if l1 < th - TIGHT_TOL {
                ok = false;
            }
            if l1 <= th + TIGHT_TOL {
                at_theta += 1;
                ok &= isomorphic_small(&g, &xk);
            }
        }
    }
    ok &= at_theta > 0;
    Ok(TheoremCheck::new("Lemma-Xk", format!("k={k}, n in {{{}, {}}}", k + 1, k + 2), Quantity::boolean(true))
        .computed(Quantity::boolean(ok))
        .note(format!(
            "{members} labelled graphs in the class; {at_theta} reach theta = {th:.9}, all isomorphic to X_k: {ok}"
        )))
}

fn cor_bipartite(ctx: &mut Ctx<'_>, spec: &FamilySpec) -> Result<TheoremCheck> {
    let g = spec.build()?;
    let b = bounds(&g)?;
    let check = value_check(ctx, "Cor-bipartite", spec, Quantity::rational(Rational::from_int(1)))?;
    let mut check = check.note(format!("lambda2 = {:.6}, theta = {:.6}", b.lambda2, b.theta));
    if b.theta_extrapolated {
        check = check.note("theta evaluated at k = 2, outside k >= 3");
    }
    Ok(if !g.is_bipartite() {
        check.fail("graph is not bipartite")
    } else if !b.thm5_one_tough {
        check.fail("lambda2 < theta does not hold")
    } else {
        check
    })
}

fn bounds_soundness(ctx: &mut Ctx<'_>, spec: &FamilySpec) -> Result<TheoremCheck> {
    let g = spec.build()?;
    let b = bounds(&g)?;
    let check = TheoremCheck::new("Bounds-soundness", spec.to_string(), Quantity::integer(0));
    let t = match ctx.exact(&spec.to_string(), &g)? {
        Exact::Done(c) => c.value,
        Exact::Partial(_) => return Ok(check.skipped(Status::SkippedBudget, "search budget exhausted")),
        Exact::TooLarge(n) => {
            return Ok(check.skipped(Status::SkippedSize, format!("n = {n} exceeds max_n = {}", ctx.max_n())))
        }
    };
    let v = b.violations(t);
    let tau = b.thm4_tau.as_ref().map_or("-".into(), |x| format!("{:.6}", x.value));
    let mut note = format!(
        "t = {t}, alon {:.6}, brouwer {:.6}, tau {tau}, theta hypothesis {}",
        b.alon_lower, b.brouwer_lower, b.thm5_one_tough
    );
    for x in &v {
        note.push_str(&format!(", {}: {}", x.bound, x.detail));
    }
    Ok(check.computed(Quantity::integer(v.len())).note(note))
}

fn expected_hoffman(spec: &FamilySpec) -> Result<bool> {
    match spec {
        FamilySpec::Lattice { .. } | FamilySpec::Petersen => Ok(true),
        FamilySpec::Triangular { v } => Ok(v % 2 == 0),
        FamilySpec::Kneser { r: 2, .. } => Ok(true),
        FamilySpec::Complement(inner) if matches!(**inner, FamilySpec::PointGraph(_)) => Ok(true),
        _ => Err(Error::InvalidParameter(format!("no Hoffman expectation for {spec}"))),
    }
}

fn hoffman_equality(spec: &FamilySpec) -> Result<TheoremCheck> {
    let g = spec.build()?;
    let up = hoffman_equality_upper(&g)?;
    let check = TheoremCheck::new("Hoffman-equality", spec.to_string(), Quantity::boolean(expected_hoffman(spec)?))
        .computed(Quantity::boolean(up.is_some()));
    Ok(match up {
        Some(h) => check.note(format!("t <= {}", h.value)),
        None => check,
    })
}

fn srg_degree(spec: &FamilySpec, g: &Graph) -> Result<usize> {
    srg_check(g)
        .map(|p| p.k)
        .ok_or_else(|| Error::InvalidParameter(format!("{spec} is not strongly regular")))
}

fn brouwer_mesner(spec: &FamilySpec) -> Result<TheoremCheck> {
    let g = spec.build()?;
    let k = srg_degree(spec, &g)?;
    Ok(TheoremCheck::new("Brouwer-Mesner", spec.to_string(), Quantity::integer(k))
        .computed(Quantity::integer(vertex_connectivity(&g).value)))
}

fn binomial(n: usize, r: usize) -> usize {
    (0..r).fold(1usize, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

fn brouwer_mesner_cuts(spec: &FamilySpec) -> Result<TheoremCheck> {
    let g = spec.build()?;
    let k = srg_degree(spec, &g)?;
    let check = TheoremCheck::new("Brouwer-Mesner-cuts", spec.to_string(), Quantity::boolean(true));
    let candidates = binomial(g.n(), k);
    if candidates > MAX_CUT_CANDIDATES {
        return Ok(check.skipped(Status::SkippedSize, format!("{candidates} candidate cuts")));
    }
    let cuts = all_minimum_vertex_cuts(&g);
    let nbhd = neighborhood_sets(&g);
    let mut sorted = cuts.clone();
    sorted.sort();
    Ok(check
        .computed(Quantity::boolean(sorted == nbhd))
        .note(format!("{} minimum cuts, {} neighbourhoods", cuts.len(), nbhd.len())))
}

fn matthews_sumner(ctx: &mut Ctx<'_>, spec: &FamilySpec) -> Result<TheoremCheck> {
    let g = spec.build()?;
    let kappa = vertex_connectivity(&g).value;
    let check = value_check(ctx, "Matthews-Sumner", spec, Quantity::rational(Rational::ratio(kappa, 2)))?;
    Ok(if g.is_claw_free() { check } else { check.fail("graph contains an induced claw") })
}

fn bipartite_cut(k: usize) -> Result<TheoremCheck> {
    let spec = FamilySpec::BipartiteCut { k };
    let g = spec.build()?;
    let s = VertexSet::from_indices(g.n(), [0, 1]);
    let check = TheoremCheck::new("Bipartite-cut", spec.to_string(), Quantity::at_most(Rational::ratio(2, k)))
        .computed(Quantity::rational(toughness_of_set(&g, &s)?))
        .note("removing the two extra vertices");
    Ok(if !g.is_bipartite() || g.regularity() != Some(k) {
        check.fail(format!("expected a bipartite {k}-regular graph"))
    } else {
        check
    })
}

fn bipartite_cut_exact(ctx: &mut Ctx<'_>, k: usize) -> Result<TheoremCheck> {
    let spec = FamilySpec::BipartiteCut { k };
    value_check(ctx, "Bipartite-cut-exact", &spec, Quantity::at_most(Rational::ratio(2, k)))
}

/// Closed-form grouped spectrum of a catalogue family, largest first.
pub(crate) fn closed_form_spectrum(spec: &FamilySpec) -> Result<Vec<(f64, usize)>> {
    let raw: Vec<(i64, usize)> = match spec {
        FamilySpec::Lattice { v } => {
            let v = *v as i64;
            vec![(2 * v - 2, 1), (v - 2, 2 * (v as usize) - 2), (-2, ((v - 1) * (v - 1)) as usize)]
        }
        FamilySpec::Triangular { v } => {
            let w = *v as i64;
            vec![(2 * w - 4, 1), (w - 4, v - 1), (-2, v * (v - 3) / 2)]
        }
        FamilySpec::Kneser { v, r: 2 } => {
            let w = *v as i64;
            vec![((w - 2) * (w - 3) / 2, 1), (1, v * (v - 3) / 2), (3 - w, v - 1)]
        }
        FamilySpec::Petersen => vec![(3, 1), (1, 5), (-2, 4)],
        FamilySpec::Complement(inner) => match &**inner {
            FamilySpec::PointGraph(q) => {
                let (s, t) = q.build()?.order();
                let (si, ti) = (s as i64, t as i64);
                vec![
                    (si * si * ti, 1),
                    (ti, s * s * (s * t + 1) / (s + t)),
                    (-si, s * t * (s + 1) * (t + 1) / (s + t)),
                ]
            }
            _ => return Err(Error::InvalidParameter(format!("no closed form for {spec}"))),
        },
        _ => return Err(Error::InvalidParameter(format!("no closed form for {spec}"))),
    };
    let mut merged: BTreeMap<i64, usize> = BTreeMap::new();
    for (v, m) in raw.into_iter().filter(|&(_, m)| m > 0) {
        *merged.entry(v).or_default() += m;
    }
    Ok(merged.into_iter().rev().map(|(v, m)| (v as f64, m)).collect())
}

fn srg_spectra(spec: &FamilySpec) -> Result<TheoremCheck> {
    let g = spec.build()?;
    let expected = closed_form_spectrum(spec)?;
    let sp = spectrum(&g, DEFAULT_GROUP_TOL)?;
    let mut check = TheoremCheck::new(
        "SRG-spectra",
        spec.to_string(),
        Quantity::Spectrum { groups: expected.clone(), tol: SPECTRUM_TOL },
    )
    .computed(Quantity::Spectrum { groups: sp.grouped_pairs(), tol: 0.0 });
    if spec.quadrangle().is_some() && expected.len() == 3 {
        let swapped = expected[0].0 + expected[1].0 * expected[2].1 as f64 + expected[2].0 * expected[1].1 as f64;
        check = check.note(format!(
            "exchanging the multiplicities of the two non-trivial eigenvalues would give trace {swapped}"
        ));
    }
    Ok(check)
}

fn expected_alpha(spec: &FamilySpec) -> Result<usize> {
    match spec {
        FamilySpec::Lattice { v } => Ok(*v),
        FamilySpec::Triangular { v } => Ok(v / 2),
        FamilySpec::Kneser { v, r: 2 } => Ok(v - 1),
        FamilySpec::Petersen => Ok(4),
        FamilySpec::Complement(inner) => match &**inner {
            FamilySpec::PointGraph(q) => Ok(q.build()?.order().0 + 1),
            _ => Err(Error::InvalidParameter(format!("no independence claim for {spec}"))),
        },
        _ => Err(Error::InvalidParameter(format!("no independence claim for {spec}"))),
    }
}

fn independence(spec: &FamilySpec) -> Result<TheoremCheck> {
    let g = spec.build()?;
    let mis = max_independent_set(&g, false)?;
    Ok(TheoremCheck::new("Independence", spec.to_string(), Quantity::integer(expected_alpha(spec)?))
        .computed(Quantity::integer(mis.alpha)))
}
