//! Textual family specifiers such as `kneser:v=6,r=2` or
//! `complement(point-graph(gq-w:q=3))`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::families;
use crate::gq::{self, GeneralizedQuadrangle};
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GqSpec {
    Grid { s: usize },
    Symplectic { q: usize },
    Gq24,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilySpec {
    Lattice { v: usize },
    Triangular { v: usize },
    Kneser { v: usize, r: usize },
    Gadget { k: usize },
    Xk { k: usize },
    BipartiteCut { k: usize },
    Hypercube { d: usize },
    Cycle { n: usize },
    Complete { n: usize },
    CompleteBipartite { a: usize, b: usize },
    MatchingComplement { t: usize },
    Petersen,
    PointGraph(GqSpec),
    Complement(Box<FamilySpec>),
}

fn parse_params(name: &str, body: Option<&str>, keys: &[&str]) -> Result<Vec<usize>> {
    let mut map = BTreeMap::new();
    for item in body.into_iter().flat_map(|b| b.split(',')) {
        let (k, v) = item
            .split_once('=')
            .ok_or_else(|| Error::Parse(format!("`{item}` in `{name}` is not key=value")))?;
        let v: usize = v
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("`{v}` is not a non-negative integer")))?;
        if !keys.contains(&k.trim()) {
            return Err(Error::Parse(format!("`{name}` has no parameter `{}`", k.trim())));
        }
        if map.insert(k.trim().to_string(), v).is_some() {
            return Err(Error::Parse(format!("parameter `{k}` repeated")));
        }
    }
    keys.iter()
        .map(|k| {
            map.get(*k)
                .copied()
                .ok_or_else(|| Error::Parse(format!("`{name}` needs parameter `{k}`")))
        })
        .collect()
}

fn split_spec(s: &str) -> (&str, Option<&str>) {
    match s.split_once(':') {
        Some((n, b)) => (n.trim(), Some(b.trim())),
        None => (s.trim(), None),
    }
}

fn unwrap_call<'a>(s: &'a str, name: &str) -> Option<&'a str> {
    s.strip_prefix(name)?.trim_start().strip_prefix('(')?.strip_suffix(')')
}

impl FromStr for GqSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, body) = split_spec(s);
        match name {
            "gq-grid" => Ok(GqSpec::Grid {
                s: parse_params(name, body, &["s"])?[0],
            }),
            "gq-w" => Ok(GqSpec::Symplectic {
                q: parse_params(name, body, &["q"])?[0],
            }),
            "gq24" => {
                parse_params(name, body, &[])?;
                Ok(GqSpec::Gq24)
            }
            _ => Err(Error::Parse(format!("unknown quadrangle `{name}`"))),
        }
    }
}

impl fmt::Display for GqSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GqSpec::Grid { s } => write!(f, "gq-grid:s={s}"),
            GqSpec::Symplectic { q } => write!(f, "gq-w:q={q}"),
            GqSpec::Gq24 => write!(f, "gq24"),
        }
    }
}

impl GqSpec {
    pub fn build(&self) -> Result<GeneralizedQuadrangle> {
        match *self {
            GqSpec::Grid { s } => gq::gq_grid(s),
            GqSpec::Symplectic { q } => gq::gq_symplectic(q),
            GqSpec::Gq24 => Ok(gq::gq_2_4()),
        }
    }
}

impl FromStr for FamilySpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some(inner) = unwrap_call(s, "complement") {
            let inner: FamilySpec = inner.parse()?;
            if matches!(inner, FamilySpec::Complement(_)) {
                return Err(Error::Parse("complement(...) may be applied only once".into()));
            }
            return Ok(FamilySpec::Complement(Box::new(inner)));
        }
        if let Some(inner) = unwrap_call(s, "point-graph") {
            return Ok(FamilySpec::PointGraph(inner.parse()?));
        }
        let (name, body) = split_spec(s);
        let p = |keys: &[&str]| parse_params(name, body, keys);
        Ok(match name {
            "lattice" => FamilySpec::Lattice { v: p(&["v"])?[0] },
            "triangular" => FamilySpec::Triangular { v: p(&["v"])?[0] },
            "kneser" => {
                let x = p(&["v", "r"])?;
                FamilySpec::Kneser { v: x[0], r: x[1] }
            }
            "gadget" => FamilySpec::Gadget { k: p(&["k"])?[0] },
            "xk" => FamilySpec::Xk { k: p(&["k"])?[0] },
            "bipartite-cut" => FamilySpec::BipartiteCut { k: p(&["k"])?[0] },
            "hypercube" => FamilySpec::Hypercube { d: p(&["d"])?[0] },
            "cycle" => FamilySpec::Cycle { n: p(&["n"])?[0] },
            "complete" => FamilySpec::Complete { n: p(&["n"])?[0] },
            "complete-bipartite" => {
                let x = p(&["a", "b"])?;
                FamilySpec::CompleteBipartite { a: x[0], b: x[1] }
            }
            "matching-complement" => FamilySpec::MatchingComplement { t: p(&["t"])?[0] },
            "petersen" => {
                p(&[])?;
                FamilySpec::Petersen
            }
            "gq-grid" | "gq-w" | "gq24" => {
                return Err(Error::Parse(format!(
                    "`{s}` is a quadrangle; use point-graph({s})"
                )))
            }
            _ => return Err(Error::Parse(format!("unknown family `{name}`"))),
        })
    }
}

impl fmt::Display for FamilySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilySpec::Lattice { v } => write!(f, "lattice:v={v}"),
            FamilySpec::Triangular { v } => write!(f, "triangular:v={v}"),
            FamilySpec::Kneser { v, r } => write!(f, "kneser:v={v},r={r}"),
            FamilySpec::Gadget { k } => write!(f, "gadget:k={k}"),
            FamilySpec::Xk { k } => write!(f, "xk:k={k}"),
            FamilySpec::BipartiteCut { k } => write!(f, "bipartite-cut:k={k}"),
            FamilySpec::Hypercube { d } => write!(f, "hypercube:d={d}"),
            FamilySpec::Cycle { n } => write!(f, "cycle:n={n}"),
            FamilySpec::Complete { n } => write!(f, "complete:n={n}"),
            FamilySpec::CompleteBipartite { a, b } => write!(f, "complete-bipartite:a={a},b={b}"),
            FamilySpec::MatchingComplement { t } => write!(f, "matching-complement:t={t}"),
            FamilySpec::Petersen => write!(f, "petersen"),
            FamilySpec::PointGraph(q) => write!(f, "point-graph({q})"),
            FamilySpec::Complement(inner) => write!(f, "complement({inner})"),
        }
    }
}

impl FamilySpec {
    pub fn build(&self) -> Result<Graph> {
        match self {
            FamilySpec::Lattice { v } => families::lattice(*v),
            FamilySpec::Triangular { v } => families::triangular(*v),
            FamilySpec::Kneser { v, r } => families::kneser(*v, *r),
            FamilySpec::Gadget { k } => families::gadget(*k),
            FamilySpec::Xk { k } => families::extremal_x(*k),
            FamilySpec::BipartiteCut { k } => families::bipartite_sparse_cut(*k),
            FamilySpec::Hypercube { d } => families::hypercube(*d),
            FamilySpec::Cycle { n } => families::cycle(*n),
            FamilySpec::Complete { n } => families::complete(*n),
            FamilySpec::CompleteBipartite { a, b } => families::complete_bipartite(*a, *b),
            FamilySpec::MatchingComplement { t } => families::matching_complement(*t),
            FamilySpec::Petersen => Ok(families::petersen()),
            FamilySpec::PointGraph(q) => Ok(q.build()?.point_graph()),
            FamilySpec::Complement(inner) => Ok(inner.build()?.complement()),
        }
    }

    /// The quadrangle behind a `point-graph(...)` spec, possibly complemented.
    pub fn quadrangle(&self) -> Option<&GqSpec> {
        match self {
            FamilySpec::PointGraph(q) => Some(q),
            FamilySpec::Complement(inner) => inner.quadrangle(),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip_display() {
        for s in [
            "lattice:v=4",
            "triangular:v=6",
            "kneser:v=6,r=2",
            "gadget:k=3",
            "xk:k=4",
            "bipartite-cut:k=3",
            "hypercube:d=4",
            "cycle:n=6",
            "complete:n=5",
            "complete-bipartite:a=2,b=3",
            "matching-complement:t=6",
            "petersen",
            "point-graph(gq24)",
            "complement(point-graph(gq-w:q=2))",
            "complement(point-graph(gq-grid:s=2))",
        ] {
            let spec: FamilySpec = s.parse().unwrap();
            assert_eq!(spec.to_string(), s);
            assert!(spec.build().is_ok(), "{s}");
        }
    }

    #[test]
    fn whitespace_and_order() {
        let a: FamilySpec = " kneser: r=2 , v=7 ".parse().unwrap();
        assert_eq!(a, FamilySpec::Kneser { v: 7, r: 2 });
    }

    #[test]
    fn rejects_malformed() {
        for s in [
            "lattice",
            "lattice:v",
            "lattice:v=x",
            "lattice:w=3",
            "lattice:v=3,v=4",
            "nosuch:v=1",
            "gq24",
            "complement(complement(petersen))",
            "complement(petersen",
            "point-graph(lattice:v=3)",
            "petersen:v=3",
        ] {
            assert!(s.parse::<FamilySpec>().is_err(), "{s}");
        }
        assert!("lattice:v=1".parse::<FamilySpec>().unwrap().build().is_err());
    }

    #[test]
    fn quadrangle_lookup() {
        let s: FamilySpec = "complement(point-graph(gq-w:q=3))".parse().unwrap();
        assert_eq!(s.quadrangle(), Some(&GqSpec::Symplectic { q: 3 }));
        assert_eq!(s.build().unwrap().regularity(), Some(27));
    }
}
