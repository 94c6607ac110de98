//! Simple undirected graphs: annihilating-ideal graphs, zero-divisor graphs
//! and the complete reference graphs, plus DOT/JSON output.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::{annihilates, annihilating_ideals, ideal_name, IdealLattice};
use crate::ring::FiniteRing;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimpleGraph {
    name: String,
    labels: Vec<String>,
    adj: Vec<BTreeSet<usize>>,
}

impl SimpleGraph {
    pub fn new(name: impl Into<String>, labels: Vec<String>) -> Self {
        let n = labels.len();
        SimpleGraph {
            name: name.into(),
            labels,
            adj: vec![BTreeSet::new(); n],
        }
    }

    /// Unlabeled graph on `n` vertices named `0..n`.
    pub fn with_vertices(n: usize) -> Self {
        Self::new("G", (0..n).map(|i| i.to_string()).collect())
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::with_vertices(n);
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn set_name(&mut self, name: impl Into<String>) {
        self.name = name.into();
    }

    /// Adds `{u, v}`; returns whether it was new. Loops are rejected.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool> {
        let n = self.vertex_count();
        if u >= n || v >= n {
            return Err(Error::InvalidArgument(format!("edge ({u},{v}) out of range")));
        }
        if u == v {
            return Err(Error::InvalidArgument(format!("self-loop at {u}")));
        }
        self.adj[v].insert(u);
        Ok(self.adj[u].insert(v))
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) -> bool {
        self.adj[v].remove(&u);
        self.adj.get_mut(u).is_some_and(|s| s.remove(&v))
    }

    pub fn vertex_count(&self) -> usize {
        self.labels.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().copied()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(&v)
    }

    /// Edges as `(i, j)` with `i < j`, sorted.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.range(u + 1..).map(move |&v| (u, v)))
            .collect()
    }

    /// Vertex sets of connected components, each sorted, ordered by least vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for v in self.neighbors(u) {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Induced subgraph on `vertices`, relabeled `0..k` in the given order.
    pub fn induced(&self, vertices: &[usize]) -> SimpleGraph {
        let mut pos = vec![usize::MAX; self.vertex_count()];
        for (i, &v) in vertices.iter().enumerate() {
            pos[v] = i;
        }
        let mut g = SimpleGraph::new(
            self.name.clone(),
            vertices.iter().map(|&v| self.labels[v].clone()).collect(),
        );
        for (i, &v) in vertices.iter().enumerate() {
            for w in self.neighbors(v) {
                if pos[w] != usize::MAX {
                    g.adj[i].insert(pos[w]);
                }
            }
        }
        g
    }

    /// Disjoint union; vertices of `other` are shifted past those of `self`.
    pub fn disjoint_union(&self, other: &SimpleGraph) -> SimpleGraph {
        let shift = self.vertex_count();
        let mut labels = self.labels.clone();
        labels.extend(other.labels.iter().map(|l| format!("{l}'")));
        let mut g = SimpleGraph::new(self.name.clone(), labels);
        for (u, v) in self.edges() {
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        for (u, v) in other.edges() {
            g.adj[u + shift].insert(v + shift);
            g.adj[v + shift].insert(u + shift);
        }
        g
    }

    /// Relabels vertex `i` as `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> SimpleGraph {
        let n = self.vertex_count();
        let mut labels = vec![String::new(); n];
        for (i, &p) in perm.iter().enumerate() {
            labels[p] = self.labels[i].clone();
        }
        let mut g = SimpleGraph::new(self.name.clone(), labels);
        for (u, v) in self.edges() {
            g.adj[perm[u]].insert(perm[v]);
            g.adj[perm[v]].insert(perm[u]);
        }
        g
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.vertex_count()).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    pub fn to_dot(&self) -> String {
        let quote = |s: &str| s.replace('\\', "\\\\").replace('"', "\\\"");
        let mut out = format!("graph {} {{\n", self.name);
        for l in &self.labels {
            let _ = writeln!(out, "  \"{}\";", quote(l));
        }
        for (u, v) in self.edges() {
            let _ = writeln!(
                out,
                "  \"{}\" -- \"{}\";",
                quote(&self.labels[u]),
                quote(&self.labels[v])
            );
        }
        out.push_str("}\n");
        out
    }

    pub fn to_json(&self) -> GraphJson {
        GraphJson {
            vertices: self.labels.clone(),
            edges: self.edges().into_iter().map(|(u, v)| [u, v]).collect(),
        }
    }

    pub fn from_json(json: &GraphJson) -> Result<Self> {
        let mut g = SimpleGraph::new("G", json.vertices.clone());
        for &[u, v] in &json.edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub vertices: Vec<String>,
    pub edges: Vec<[usize; 2]>,
}

/// `AG(R)`: vertices are the nonzero annihilating ideals (lattice order),
/// `I -- J` iff `I != J` and `IJ = (0)`.
pub fn build_ag(r: &FiniteRing, lattice: &IdealLattice) -> Result<SimpleGraph> {
    if !lattice.belongs_to(r) {
        return Err(Error::MixedRings);
    }
    let vertices = annihilating_ideals(r, lattice);
    let labels = vertices.iter().map(|i| ideal_name(r, lattice, i)).collect();
    let mut g = SimpleGraph::new("AG", labels);
    for (a, i) in vertices.iter().enumerate() {
        for (b, j) in vertices.iter().enumerate().skip(a + 1) {
            if annihilates(r, i, j) {
                g.add_edge(a, b)?;
            }
        }
    }
    Ok(g)
}

/// `Γ(R)`: vertices are the nonzero zero-divisors, `x -- y` iff `xy = 0`.
pub fn build_zero_divisor_graph(r: &FiniteRing) -> SimpleGraph {
    let zd: Vec<usize> = (1..r.size())
        .filter(|&x| (1..r.size()).any(|y| r.mul(x, y) == 0))
        .collect();
    let mut g = SimpleGraph::new("ZDG", zd.iter().map(|&x| r.label(x).to_string()).collect());
    for (a, &x) in zd.iter().enumerate() {
        for (b, &y) in zd.iter().enumerate().skip(a + 1) {
            if r.mul(x, y) == 0 {
                g.adj[a].insert(b);
                g.adj[b].insert(a);
            }
        }
    }
    g
}

pub fn complete_graph(n: usize) -> SimpleGraph {
    let mut g = SimpleGraph::new(format!("K{n}"), (0..n).map(|i| format!("v{i}")).collect());
    for u in 0..n {
        for v in u + 1..n {
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
    }
    g
}

/// `K_{m,n}`; vertices `a0..a(m-1)` form one part, `b0..b(n-1)` the other.
pub fn complete_bipartite(m: usize, n: usize) -> SimpleGraph {
    let labels = (0..m)
        .map(|i| format!("a{i}"))
        .chain((0..n).map(|j| format!("b{j}")))
        .collect();
    let mut g = SimpleGraph::new(format!("K{m}_{n}"), labels);
    for u in 0..m {
        for v in m..m + n {
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
    }
    g
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "result", rename_all = "snake_case")]
pub enum BipartiteSearch {
    Found {
        a: Vec<usize>,
        b: Vec<usize>,
    },
    NotFound,
    /// The node budget ran out before the search finished.
    Unknown,
}

/// Default node budget for [`find_complete_bipartite_subgraph`].
pub const DEFAULT_BICLIQUE_BUDGET: u64 = 10_000_000;

/// Looks for disjoint `A` (`|A| = m`) and `B` (`|B| = n`) with every `A`-`B`
/// pair adjacent (not necessarily induced).
///
/// Backtracks over `m`-subsets in index order, keeping the common
/// neighborhood of the chosen prefix; `B` is then the first `n` common
/// neighbors. Parts are reported in the order asked for even when the
/// search runs with the smaller side first.
pub fn find_complete_bipartite_subgraph(
    g: &SimpleGraph,
    m: usize,
    n: usize,
    budget: u64,
) -> Result<BipartiteSearch> {
    if m == 0 || n == 0 {
        return Err(Error::InvalidArgument("part sizes must be >= 1".into()));
    }
    let (small, large) = (m.min(n), m.max(n));
    let mut nodes = 0u64;
    let all: Vec<usize> = (0..g.vertex_count()).filter(|&v| g.degree(v) >= large).collect();
    let found = biclique_rec(g, small, large, &all, &mut Vec::new(), None, &mut nodes, budget);
    Ok(match found {
        Some(Some((a, b))) if m <= n => BipartiteSearch::Found { a, b },
        Some(Some((a, b))) => BipartiteSearch::Found { a: b, b: a },
        Some(None) => BipartiteSearch::NotFound,
        None => BipartiteSearch::Unknown,
    })
}

type Biclique = (Vec<usize>, Vec<usize>);

/// `None` = budget exhausted; `Some(None)` = no witness below this node.
#[allow(clippy::too_many_arguments)]
fn biclique_rec(
    g: &SimpleGraph,
    m: usize,
    n: usize,
    candidates: &[usize],
    chosen: &mut Vec<usize>,
    common: Option<&BTreeSet<usize>>,
    nodes: &mut u64,
    budget: u64,
) -> Option<Option<Biclique>> {
    *nodes += 1;
    if *nodes > budget {
        return None;
    }
    if chosen.len() == m {
        let common = common.expect("m >= 1");
        return Some(Some((chosen.clone(), common.iter().take(n).copied().collect())));
    }
    for (k, &v) in candidates.iter().enumerate() {
        if candidates.len() - k < m - chosen.len() {
            break;
        }
        let next: BTreeSet<usize> = match common {
            None => g.adj[v].clone(),
            Some(c) => c.intersection(&g.adj[v]).copied().collect(),
        };
        if next.len() < n {
            continue;
        }
        chosen.push(v);
        let res = biclique_rec(g, m, n, &candidates[k + 1..], chosen, Some(&next), nodes, budget);
        chosen.pop();
        match res {
            None => return None,
            Some(Some(w)) => return Some(Some(w)),
            Some(None) => {}
        }
    }
    Some(None)
}
