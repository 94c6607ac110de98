//! Orientable genus of finite simple graphs.
//!
//! [`genus_exact`] reduces the graph (components, leaves, degree-2 vertices)
//! and then runs an iterative-deepening branch and bound over rotation
//! systems, starting from an Euler-type lower bound. Closed forms for `K_n`
//! and `K_{m,n}` and an independent planarity test are provided for
//! cross-checking.

mod anneal;
mod planarity;
mod search;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

pub use planarity::is_planar;
use search::{search_faces, DartGraph, Meter, Outcome};

/// `γ(K_n) = ⌈(n−3)(n−4)/12⌉`.
pub fn genus_formula_complete(n: u64) -> Result<u64> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!(
            "K_n genus formula needs n >= 3, got {n}"
        )));
    }
    Ok(((n - 3) * n.saturating_sub(4)).div_ceil(12))
}

/// `γ(K_{m,n}) = ⌈(m−2)(n−2)/4⌉`.
pub fn genus_formula_bipartite(m: u64, n: u64) -> Result<u64> {
    if m < 2 || n < 2 {
        return Err(Error::InvalidArgument(format!(
            "K_{{m,n}} genus formula needs m, n >= 2, got ({m}, {n})"
        )));
    }
    Ok(((m - 2) * (n - 2)).div_ceil(4))
}

fn has_triangle(g: &SimpleGraph, comp: &[usize]) -> bool {
    comp.iter().any(|&u| {
        g.neighbors(u)
            .filter(|&v| v > u)
            .any(|v| g.neighbors(v).filter(|&w| w > v).any(|w| g.has_edge(u, w)))
    })
}

/// `max(0, ⌈(E − 3V + 6)/6⌉)` per component, or `max(0, ⌈(E − 2V + 4)/4⌉)`
/// for triangle-free components; components with fewer than 3 vertices or
/// edges contribute 0.
pub fn euler_lower_bound(g: &SimpleGraph) -> u64 {
    g.components()
        .iter()
        .map(|comp| {
            let v = comp.len() as i64;
            let e = comp.iter().map(|&u| g.degree(u)).sum::<usize>() as i64 / 2;
            if v < 3 || e < 3 {
                return 0;
            }
            let (num, den) = if has_triangle(g, comp) {
                (e - 3 * v + 6, 6)
            } else {
                (e - 2 * v + 4, 4)
            };
            if num <= 0 {
                0
            } else {
                (num as u64).div_ceil(den)
            }
        })
        .sum()
}

/// Cyclic order of neighbor vertices around each vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RotationSystem(pub Vec<Vec<usize>>);

/// Traces the faces of `rs` and returns the genus of the embedding it
/// defines, summed over components (`(2c − V + E − F) / 2`).
pub fn verify_embedding(g: &SimpleGraph, rs: &RotationSystem) -> Result<u64> {
    let n = g.vertex_count();
    if rs.0.len() != n {
        return Err(Error::InvalidEmbedding(format!(
            "rotation system covers {} vertices, graph has {n}",
            rs.0.len()
        )));
    }
    for (v, order) in rs.0.iter().enumerate() {
        let listed: BTreeSet<usize> = order.iter().copied().collect();
        let actual: BTreeSet<usize> = g.neighbors(v).collect();
        if listed.len() != order.len() || listed != actual {
            return Err(Error::InvalidEmbedding(format!(
                "rotation at vertex {v} is not a cyclic order of its neighbors"
            )));
        }
    }
    // dart (u, k) = u -> rs[u][k]
    let pos = |v: usize, w: usize| rs.0[v].iter().position(|&x| x == w).expect("checked above");
    let mut seen: Vec<Vec<bool>> = rs.0.iter().map(|o| vec![false; o.len()]).collect();
    let mut faces = 0i64;
    for u in 0..n {
        for k in 0..rs.0[u].len() {
            if seen[u][k] {
                continue;
            }
            faces += 1;
            let (mut a, mut i) = (u, k);
            while !seen[a][i] {
                seen[a][i] = true;
                let b = rs.0[a][i];
                let back = pos(b, a);
                let next = (back + 1) % rs.0[b].len();
                (a, i) = (b, next);
            }
        }
    }
    let isolated = (0..n).filter(|&v| g.degree(v) == 0).count() as i64;
    let c = g.components().len() as i64;
    let twice = 2 * c - n as i64 + g.edge_count() as i64 - (faces + isolated);
    if twice < 0 || twice % 2 != 0 {
        return Err(Error::InvalidEmbedding(format!(
            "Euler characteristic gives non-integral or negative genus ({twice}/2)"
        )));
    }
    Ok((twice / 2) as u64)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GenusStatus {
    Exact,
    /// Bounds only; no search was requested.
    Bounded,
    BudgetExhausted,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenusResult {
    pub lower: u64,
    pub upper: Option<u64>,
    pub status: GenusStatus,
    pub witness: Option<RotationSystem>,
    /// Search nodes spent.
    pub nodes: u64,
}

impl GenusResult {
    pub fn exact(&self) -> Option<u64> {
        (self.status == GenusStatus::Exact).then_some(self.lower)
    }

    /// One-line summary such as `exact 1` or `budget_exhausted 1..3`.
    pub fn summary(&self) -> String {
        let status = match self.status {
            GenusStatus::Exact => return format!("exact {}", self.lower),
            GenusStatus::Bounded => "bounded",
            GenusStatus::BudgetExhausted => "budget_exhausted",
        };
        match self.upper {
            Some(u) => format!("{status} {}..{u}", self.lower),
            None => format!("{status} {}..?", self.lower),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_nodes: u64,
    pub max_time: Option<Duration>,
}

pub const DEFAULT_BUDGET_NODES: u64 = 100_000_000;
pub const DEFAULT_BUDGET_TIME: Duration = Duration::from_secs(300);

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_nodes: DEFAULT_BUDGET_NODES,
            max_time: Some(DEFAULT_BUDGET_TIME),
        }
    }
}

impl Budget {
    pub fn nodes(max_nodes: u64) -> Self {
        Budget {
            max_nodes,
            max_time: None,
        }
    }
}

enum Reduction {
    /// Vertex removed with degree <= 1; its neighbor if it had one.
    Pruned(usize, Option<usize>),
    /// Degree-2 vertex `w` replaced by the edge `u -- v`.
    Suppressed { w: usize, u: usize, v: usize },
}

struct ComponentResult {
    lower: u64,
    upper: u64,
    exact: bool,
    rotation: Vec<(usize, Vec<usize>)>,
}

/// Deletes degree-0/1 vertices, then suppresses degree-2 vertices whose
/// neighbors are not already adjacent (so the result stays simple).
fn reduce(g: &SimpleGraph, comp: &[usize]) -> (Vec<BTreeSet<usize>>, Vec<bool>, Vec<Reduction>) {
    let n = g.vertex_count();
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    let mut alive = vec![false; n];
    for &v in comp {
        alive[v] = true;
        adj[v] = g.neighbors(v).collect();
    }
    let mut log = Vec::new();
    let mut stack: Vec<usize> = comp.iter().copied().filter(|&v| adj[v].len() <= 1).collect();
    while let Some(v) = stack.pop() {
        if !alive[v] || adj[v].len() > 1 {
            continue;
        }
        alive[v] = false;
        let parent = adj[v].pop_first();
        if let Some(p) = parent {
            adj[p].remove(&v);
            if adj[p].len() <= 1 {
                stack.push(p);
            }
        }
        log.push(Reduction::Pruned(v, parent));
    }
    let mut changed = true;
    while changed {
        changed = false;
        for &w in comp {
            if !alive[w] || adj[w].len() != 2 {
                continue;
            }
            let u = *adj[w].first().expect("degree 2");
            let v = *adj[w].last().expect("degree 2");
            if adj[u].contains(&v) {
                continue;
            }
            alive[w] = false;
            adj[w].clear();
            adj[u].remove(&w);
            adj[v].remove(&w);
            adj[u].insert(v);
            adj[v].insert(u);
            log.push(Reduction::Suppressed { w, u, v });
            changed = true;
        }
    }
    (adj, alive, log)
}

fn solve_component(g: &SimpleGraph, comp: &[usize], meter: &Meter, search: bool) -> ComponentResult {
    let (adj, alive, log) = reduce(g, comp);
    let core: Vec<usize> = comp.iter().copied().filter(|&v| alive[v]).collect();
    let mut rot: Vec<Vec<usize>> = vec![Vec::new(); g.vertex_count()];
    let (lower, upper, exact) = if core.is_empty() {
        (0, 0, true)
    } else {
        let mut index = vec![usize::MAX; g.vertex_count()];
        for (i, &v) in core.iter().enumerate() {
            index[v] = i;
        }
        let dart_adj: Vec<Vec<usize>> = core
            .iter()
            .map(|&v| adj[v].iter().map(|&w| index[w]).collect())
            .collect();
        let dg = DartGraph::new(dart_adj);
        let identity: Vec<Vec<usize>> = dg.adj.iter().map(|a| (0..a.len()).collect()).collect();
        let mut lower = dg.girth_lower_bound() as u64;
        let (mut best, faces) = if search {
            anneal::improve(&dg, identity, dg.faces_for_genus(lower as u32) as usize)
        } else {
            let f = dg.count_faces(&identity);
            (identity, f)
        };
        let mut upper = dg.genus_for_faces(faces) as u64;
        let mut out_of_budget = !search;
        while lower < upper && !out_of_budget {
            let need = dg.faces_for_genus(lower as u32) as u32;
            match search_faces(&dg, need, meter) {
                Outcome::Found(r) => {
                    upper = dg.genus_for_faces(dg.count_faces(&r)) as u64;
                    best = r;
                }
                Outcome::Exhausted => lower += 1,
                Outcome::OutOfBudget => out_of_budget = true,
            }
        }
        for (i, &v) in core.iter().enumerate() {
            rot[v] = best[i].iter().map(|&k| core[dg.adj[i][k]]).collect();
        }
        (lower, upper, lower == upper)
    };
    for step in log.iter().rev() {
        match *step {
            Reduction::Pruned(v, parent) => {
                if let Some(p) = parent {
                    rot[p].push(v);
                    rot[v] = vec![p];
                }
            }
            Reduction::Suppressed { w, u, v } => {
                for (a, b) in [(u, v), (v, u)] {
                    let slot = rot[a].iter().position(|&x| x == b).expect("lifted edge present");
                    rot[a][slot] = w;
                }
                rot[w] = vec![u, v];
            }
        }
    }
    ComponentResult {
        lower,
        upper,
        exact,
        rotation: comp.iter().map(|&v| (v, std::mem::take(&mut rot[v]))).collect(),
    }
}

/// Exact orientable genus within `budget`.
///
/// Genus is additive over connected components; each component is solved
/// separately and the node budget is shared. On exhaustion the result keeps
/// the proven lower bound and the best embedding found so far.
pub fn genus_exact(g: &SimpleGraph, budget: &Budget) -> GenusResult {
    run(g, budget, true)
}

/// Lower bound and an embedding-based upper bound, without search.
pub fn genus_bounds(g: &SimpleGraph) -> GenusResult {
    run(g, &Budget::nodes(0), false)
}

fn run(g: &SimpleGraph, budget: &Budget, search: bool) -> GenusResult {
    let deadline = budget.max_time.map(|t| Instant::now() + t);
    let meter = Meter::new(budget.max_nodes, deadline);
    let mut lower = 0;
    let mut upper = 0;
    let mut exact = true;
    let mut witness = vec![Vec::new(); g.vertex_count()];
    for comp in g.components() {
        let r = solve_component(g, &comp, &meter, search);
        lower += r.lower;
        upper += r.upper;
        exact &= r.exact;
        for (v, order) in r.rotation {
            witness[v] = order;
        }
    }
    let status = match (exact, search) {
        (true, _) => GenusStatus::Exact,
        (false, true) => GenusStatus::BudgetExhausted,
        (false, false) => GenusStatus::Bounded,
    };
    log::debug!("genus search: {} nodes, status {status:?}", meter.nodes());
    GenusResult {
        lower,
        upper: Some(upper),
        status,
        witness: Some(RotationSystem(witness)),
        nodes: meter.nodes(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_bipartite, complete_graph};

    #[test]
    fn formula_values() {
        assert_eq!(genus_formula_complete(4).unwrap(), 0);
        assert_eq!(genus_formula_complete(5).unwrap(), 1);
        assert_eq!(genus_formula_complete(8).unwrap(), 2);
        assert!(genus_formula_complete(2).is_err());
        assert_eq!(genus_formula_bipartite(3, 3).unwrap(), 1);
        assert_eq!(genus_formula_bipartite(2, 7).unwrap(), 0);
        assert_eq!(genus_formula_bipartite(4, 4).unwrap(), 1);
        assert_eq!(
            genus_formula_bipartite(3, 5).unwrap(),
            genus_formula_bipartite(5, 3).unwrap()
        );
        assert!(genus_formula_bipartite(1, 4).is_err());
    }

    #[test]
    fn euler_bounds() {
        assert_eq!(euler_lower_bound(&complete_graph(5)), 1);
        assert_eq!(euler_lower_bound(&complete_bipartite(3, 3)), 1);
        let tree = SimpleGraph::from_edges(5, &[(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        assert_eq!(euler_lower_bound(&tree), 0);
    }

    #[test]
    fn k5_exact_with_witness() {
        let g = complete_graph(5);
        let r = genus_exact(&g, &Budget::default());
        assert_eq!(r.exact(), Some(1));
        assert_eq!(verify_embedding(&g, r.witness.as_ref().unwrap()).unwrap(), 1);
    }

    #[test]
    fn k33_exact() {
        let r = genus_exact(&complete_bipartite(3, 3), &Budget::default());
        assert_eq!(r.exact(), Some(1));
    }

    #[test]
    fn union_is_additive() {
        let g = complete_graph(5).disjoint_union(&complete_bipartite(3, 3));
        let r = genus_exact(&g, &Budget::default());
        assert_eq!(r.exact(), Some(2));
        assert_eq!(verify_embedding(&g, r.witness.as_ref().unwrap()).unwrap(), 2);
    }

    #[test]
    fn trees_and_cycles_are_planar() {
        let tree = SimpleGraph::from_edges(6, &[(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)]).unwrap();
        let r = genus_exact(&tree, &Budget::default());
        assert_eq!(r.exact(), Some(0));
        assert_eq!(verify_embedding(&tree, r.witness.as_ref().unwrap()).unwrap(), 0);
        let cycle = SimpleGraph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        let r = genus_exact(&cycle, &Budget::default());
        assert_eq!(r.exact(), Some(0));
        assert_eq!(verify_embedding(&cycle, r.witness.as_ref().unwrap()).unwrap(), 0);
    }

    #[test]
    fn subdivided_k5_keeps_genus() {
        // K5 with edge 0-1 subdivided by vertex 5 and a pendant path 6-7 on 2
        let mut g = complete_graph(5);
        g = g.disjoint_union(&SimpleGraph::with_vertices(3));
        g.remove_edge(0, 1);
        for (u, v) in [(0, 5), (5, 1), (2, 6), (6, 7)] {
            g.add_edge(u, v).unwrap();
        }
        let r = genus_exact(&g, &Budget::default());
        assert_eq!(r.exact(), Some(1));
        assert_eq!(verify_embedding(&g, r.witness.as_ref().unwrap()).unwrap(), 1);
    }

    #[test]
    fn verify_rejects_bad_rotations() {
        let g = complete_graph(3);
        let bad = RotationSystem(vec![vec![1], vec![0, 2], vec![0, 1]]);
        assert!(verify_embedding(&g, &bad).is_err());
        let ok = RotationSystem(vec![vec![1, 2], vec![0, 2], vec![0, 1]]);
        assert_eq!(verify_embedding(&g, &ok).unwrap(), 0);
    }

    #[test]
    fn budget_exhaustion_keeps_bounds() {
        // genus 3; the local search stops at 4, leaving the gap to the search
        let g = complete_graph(9);
        let r = genus_exact(&g, &Budget::nodes(1));
        assert_eq!(r.status, GenusStatus::BudgetExhausted);
        assert!(r.lower <= 3);
        assert!(r.upper.unwrap() >= 3);
        let w = r.witness.as_ref().unwrap();
        assert_eq!(verify_embedding(&g, w).unwrap(), r.upper.unwrap());
    }

    #[test]
    fn bounds_only() {
        let r = genus_bounds(&complete_graph(6));
        assert!(r.lower <= 1 && r.upper.unwrap() >= 1);
        assert_eq!(r.nodes, 0);
    }

    #[test]
    fn deterministic_results() {
        let g = complete_bipartite(3, 4);
        assert_eq!(
            genus_exact(&g, &Budget::nodes(1_000_000)),
            genus_exact(&g, &Budget::nodes(1_000_000))
        );
    }
}
