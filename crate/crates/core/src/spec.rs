//! Textual ring and graph specifications.
//!
//! ```text
//! spec  := zn:<n> | gf:<p>:<coeffs> | polyq:<p>:<coeffs>
//!        | prod:(<spec>,<spec>) | sc:<path> | table:<path> | cat:<name>
//! coeffs := <int>(,<int>)*          highest degree first
//! ```
//!
//! Inside `prod:( … )` a path ends at the next `,` or `)`. Catalog names also
//! cover reference graphs (`k<n>`, `km:<m>:<n>`), so a [`Target`] is either a
//! ring or a graph.

use std::fmt;
use std::path::PathBuf;

use crate::error::{Error, Result};
use crate::graph::{complete_bipartite, complete_graph, SimpleGraph};
use crate::ring::{
    make_galois_field, make_poly_quotient, make_product, make_structure_constants, make_zn, FiniteRing,
    StructureConstants,
};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RingSpec {
    Zn(u64),
    Gf { p: u64, coeffs: Vec<u64> },
    PolyQ { p: u64, coeffs: Vec<u64> },
    Prod(Box<RingSpec>, Box<RingSpec>),
    Sc(PathBuf),
    Table(PathBuf),
    Cat(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphSpec {
    Complete(usize),
    CompleteBipartite(usize, usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Target {
    Ring(RingSpec),
    Graph(GraphSpec),
}

fn join(coeffs: &[u64]) -> String {
    coeffs.iter().map(u64::to_string).collect::<Vec<_>>().join(",")
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Zn(n) => write!(f, "zn:{n}"),
            RingSpec::Gf { p, coeffs } => write!(f, "gf:{p}:{}", join(coeffs)),
            RingSpec::PolyQ { p, coeffs } => write!(f, "polyq:{p}:{}", join(coeffs)),
            RingSpec::Prod(a, b) => write!(f, "prod:({a},{b})"),
            RingSpec::Sc(p) => write!(f, "sc:{}", p.display()),
            RingSpec::Table(p) => write!(f, "table:{}", p.display()),
            RingSpec::Cat(name) => write!(f, "cat:{name}"),
        }
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSpec::Complete(n) => write!(f, "cat:k{n}"),
            GraphSpec::CompleteBipartite(m, n) => write!(f, "cat:km:{m}:{n}"),
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Target::Ring(r) => r.fmt(f),
            Target::Graph(g) => g.fmt(f),
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
    depth: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T> {
        Err(Error::Parse {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn rest(&self) -> &'a str {
        &self.src[self.pos..]
    }

    fn peek(&self) -> Option<u8> {
        self.src.as_bytes().get(self.pos).copied()
    }

    fn expect(&mut self, s: &str) -> Result<()> {
        if self.rest().starts_with(s) {
            self.pos += s.len();
            Ok(())
        } else {
            self.err(format!("expected `{s}`"))
        }
    }

    fn number(&mut self) -> Result<u64> {
        let digits = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if digits == 0 {
            return self.err("expected a non-negative integer");
        }
        let text = &self.rest()[..digits];
        let value = text
            .parse::<u64>()
            .or_else(|_| self.err("integer out of range"))?;
        self.pos += digits;
        Ok(value)
    }

    /// A `,` followed by a digit continues the list; any other `,` belongs
    /// to an enclosing product.
    fn coeffs(&mut self) -> Result<Vec<u64>> {
        let mut out = vec![self.number()?];
        while self.rest().starts_with(',') && self.rest().as_bytes().get(1).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
            out.push(self.number()?);
        }
        Ok(out)
    }

    /// Path or catalog name: up to the end, or the next `,`/`)` inside a product.
    fn word(&mut self, what: &str) -> Result<&'a str> {
        let len = if self.depth == 0 {
            self.rest().len()
        } else {
            self.rest().find([',', ')']).unwrap_or(self.rest().len())
        };
        if len == 0 {
            return self.err(format!("expected {what}"));
        }
        let w = &self.rest()[..len];
        self.pos += len;
        Ok(w)
    }

    fn target(&mut self) -> Result<Target> {
        let tags = ["zn:", "gf:", "polyq:", "prod:", "sc:", "table:", "cat:"];
        let Some(tag) = tags.iter().find(|t| self.rest().starts_with(**t)) else {
            return self.err(format!("expected one of {}", tags.join(" ")));
        };
        self.pos += tag.len();
        let spec = match *tag {
            "zn:" => RingSpec::Zn(self.number()?),
            "gf:" | "polyq:" => {
                let p = self.number()?;
                self.expect(":")?;
                let coeffs = self.coeffs()?;
                if *tag == "gf:" {
                    RingSpec::Gf { p, coeffs }
                } else {
                    RingSpec::PolyQ { p, coeffs }
                }
            }
            "prod:" => {
                self.expect("(")?;
                self.depth += 1;
                let a = self.ring()?;
                self.expect(",")?;
                let b = self.ring()?;
                self.expect(")")?;
                self.depth -= 1;
                RingSpec::Prod(Box::new(a), Box::new(b))
            }
            "sc:" => RingSpec::Sc(PathBuf::from(self.word("a path")?)),
            "table:" => RingSpec::Table(PathBuf::from(self.word("a path")?)),
            _ => {
                let start = self.pos;
                let name = self.word("a catalog name")?;
                if let Some(g) = graph_catalog(name) {
                    return Ok(Target::Graph(g));
                }
                if ring_catalog(name).is_none() {
                    self.pos = start;
                    return Err(Error::UnknownCatalog {
                        name: name.to_string(),
                        available: catalog_names().join(", "),
                    });
                }
                RingSpec::Cat(name.to_string())
            }
        };
        Ok(Target::Ring(spec))
    }

    fn ring(&mut self) -> Result<RingSpec> {
        let start = self.pos;
        match self.target()? {
            Target::Ring(r) => Ok(r),
            Target::Graph(_) => {
                self.pos = start;
                self.err("a graph cannot be a factor of a ring product")
            }
        }
    }
}

impl Target {
    pub fn parse(s: &str) -> Result<Target> {
        let mut p = Parser {
            src: s,
            pos: 0,
            depth: 0,
        };
        if s.is_empty() {
            return p.err("empty specification");
        }
        let t = p.target()?;
        if p.peek().is_some() {
            return p.err("unexpected trailing input");
        }
        Ok(t)
    }
}

impl RingSpec {
    pub fn parse(s: &str) -> Result<RingSpec> {
        match Target::parse(s)? {
            Target::Ring(r) => Ok(r),
            Target::Graph(g) => Err(Error::InvalidArgument(format!("{g} names a graph, not a ring"))),
        }
    }

    pub fn build(&self) -> Result<FiniteRing> {
        match self {
            RingSpec::Zn(n) => make_zn(
                usize::try_from(*n)
                    .map_err(|_| Error::InvalidArgument(format!("modulus {n} out of range")))?,
            ),
            RingSpec::Gf { p, coeffs } => make_galois_field(*p, coeffs),
            RingSpec::PolyQ { p, coeffs } => make_poly_quotient(*p, coeffs),
            RingSpec::Prod(a, b) => make_product(&a.build()?, &b.build()?),
            RingSpec::Sc(path) => StructureConstants::load(path)?.build(),
            RingSpec::Table(path) => FiniteRing::load_table(path),
            RingSpec::Cat(name) => ring_catalog(name)
                .ok_or_else(|| Error::UnknownCatalog {
                    name: name.clone(),
                    available: catalog_names().join(", "),
                })?
                .build(),
        }
    }
}

impl GraphSpec {
    pub fn build(&self) -> SimpleGraph {
        match *self {
            GraphSpec::Complete(n) => complete_graph(n),
            GraphSpec::CompleteBipartite(m, n) => complete_bipartite(m, n),
        }
    }
}

fn basis(labels: &[&str]) -> Vec<String> {
    labels.iter().map(|s| s.to_string()).collect()
}

/// Product table from `(i, j, k)` triples meaning `e_i e_j = e_k`; all other
/// products of non-identity basis elements are zero.
fn monomial_table(p: u64, labels: &[&str], rules: &[(usize, usize, usize)]) -> StructureConstants {
    let k = labels.len();
    let unit = |l: usize| (0..k).map(|i| u64::from(i == l)).collect::<Vec<_>>();
    let mut mul = vec![vec![vec![0; k]; k]; k];
    for (i, row) in mul.iter_mut().enumerate() {
        row[0] = unit(i);
    }
    mul[0] = (0..k).map(unit).collect();
    for &(i, j, l) in rules {
        mul[i][j] = unit(l);
        mul[j][i] = unit(l);
    }
    StructureConstants {
        p,
        rank: k,
        basis: basis(labels),
        mul,
    }
}

/// Catalog rings defined by structure constants or short polynomial specs.
#[derive(Clone, Debug)]
pub enum CatalogRing {
    Algebra(StructureConstants),
    Spec(RingSpec),
}

impl CatalogRing {
    pub fn build(&self) -> Result<FiniteRing> {
        match self {
            CatalogRing::Algebra(sc) => make_structure_constants(sc.p, &sc.basis, &sc.mul),
            CatalogRing::Spec(s) => s.build(),
        }
    }
}

const RING_CATALOG: &[(&str, &str)] = &[
    ("f2xy_x2y2", "F_2[x,y]/(x^2,y^2)"),
    ("f2xy_x2xyy2", "F_2[x,y]/(x^2,xy,y^2)"),
    ("f3xy_x2y2", "F_3[x,y]/(x^2,y^2)"),
    ("f2xy_xy_y2x3", "F_2[x,y]/(xy,y^2-x^3)"),
    ("f4", "F_4"),
    ("f8", "F_8"),
    ("f9", "F_9"),
    ("f3x_x2", "F_3[x]/(x^2)"),
    ("f2x_x3", "F_2[x]/(x^3)"),
];

pub fn ring_catalog(name: &str) -> Option<CatalogRing> {
    let gf = |p, c: &[u64]| {
        CatalogRing::Spec(RingSpec::Gf {
            p,
            coeffs: c.to_vec(),
        })
    };
    let pq = |p, c: &[u64]| {
        CatalogRing::Spec(RingSpec::PolyQ {
            p,
            coeffs: c.to_vec(),
        })
    };
    Some(match name {
        "f2xy_x2y2" => CatalogRing::Algebra(monomial_table(2, &["1", "x", "y", "xy"], &[(1, 2, 3)])),
        "f3xy_x2y2" => CatalogRing::Algebra(monomial_table(3, &["1", "x", "y", "xy"], &[(1, 2, 3)])),
        "f2xy_x2xyy2" => CatalogRing::Algebra(monomial_table(2, &["1", "x", "y"], &[])),
        // basis 1, x, y, x^2, x^3 with xy = 0 and y^2 = x^3
        "f2xy_xy_y2x3" => CatalogRing::Algebra(monomial_table(
            2,
            &["1", "x", "y", "x^2", "x^3"],
            &[(1, 1, 3), (2, 2, 4), (1, 3, 4)],
        )),
        "f4" => gf(2, &[1, 1, 1]),
        "f8" => gf(2, &[1, 0, 1, 1]),
        "f9" => gf(3, &[1, 0, 1]),
        "f3x_x2" => pq(3, &[1, 0, 0]),
        "f2x_x3" => pq(2, &[1, 0, 0, 0]),
        _ => return None,
    })
}

/// `k<n>` for `K_n` and `km:<m>:<n>` for `K_{m,n}`.
pub fn graph_catalog(name: &str) -> Option<GraphSpec> {
    if let Some(rest) = name.strip_prefix("km:") {
        let (m, n) = rest.split_once(':')?;
        return Some(GraphSpec::CompleteBipartite(m.parse().ok()?, n.parse().ok()?));
    }
    let n = name.strip_prefix('k')?;
    if n.is_empty() || !n.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    Some(GraphSpec::Complete(n.parse().ok()?))
}

pub fn catalog_names() -> Vec<&'static str> {
    RING_CATALOG
        .iter()
        .map(|(n, _)| *n)
        .chain(["k<n>", "km:<m>:<n>"])
        .collect()
}

/// `(name, description)` for every catalog ring.
pub fn ring_catalog_entries() -> &'static [(&'static str, &'static str)] {
    RING_CATALOG
}

/// The frozen built-in verification corpus.
pub const BUILTIN_CORPUS: &[&str] = &[
    "zn:4",
    "zn:6",
    "zn:8",
    "zn:9",
    "zn:12",
    "zn:16",
    "zn:18",
    "zn:24",
    "zn:27",
    "zn:30",
    "zn:36",
    "zn:49",
    "zn:64",
    "prod:(zn:2,zn:2)",
    "prod:(zn:2,zn:4)",
    "prod:(zn:3,zn:3)",
    "gf:2:1,1,1",
    "gf:2:1,0,1,1",
    "polyq:3:1,0,0",
    "polyq:2:1,0,0,0",
    "cat:f2xy_x2y2",
    "cat:f2xy_x2xyy2",
    "cat:f3xy_x2y2",
];

pub fn builtin_corpus() -> Vec<RingSpec> {
    BUILTIN_CORPUS
        .iter()
        .map(|s| RingSpec::parse(s).expect("built-in corpus entries parse"))
        .collect()
}
