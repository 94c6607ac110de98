//! Recognizers for star-like graph families.

use serde::Serialize;

use crate::graph::SimpleGraph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ShapeKind {
    /// Two non-isolated centers, possibly adjacent; every other vertex has
    /// degree 1 or 2 and is adjacent only to centers.
    DoubleStar,
    /// One center adjacent to all other vertices; the remaining edges form a
    /// partial matching on the leaves.
    StarWithMatching,
}

impl ShapeKind {
    pub const ALL: [ShapeKind; 2] = [ShapeKind::DoubleStar, ShapeKind::StarWithMatching];

    pub fn name(self) -> &'static str {
        match self {
            ShapeKind::DoubleStar => "double_star",
            ShapeKind::StarWithMatching => "star_with_matching",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ShapeMatch {
    pub kind: ShapeKind,
    pub centers: Vec<usize>,
    pub leaves: Vec<usize>,
    /// Leaf-leaf edges; always empty for a double star.
    pub matching: Vec<(usize, usize)>,
}

impl ShapeMatch {
    pub fn describe(&self, g: &SimpleGraph) -> String {
        let names = |vs: &[usize]| vs.iter().map(|&v| g.label(v)).collect::<Vec<_>>().join(" ");
        let mut s = format!(
            "{} centers [{}] leaves [{}]",
            self.kind.name(),
            names(&self.centers),
            names(&self.leaves)
        );
        if !self.matching.is_empty() {
            let pairs: Vec<String> = self
                .matching
                .iter()
                .map(|&(a, b)| format!("{}-{}", g.label(a), g.label(b)))
                .collect();
            s.push_str(&format!(" matching [{}]", pairs.join(" ")));
        }
        s
    }
}

fn star_with_matching(g: &SimpleGraph) -> Option<ShapeMatch> {
    let n = g.vertex_count();
    (0..n).filter(|&c| g.degree(c) == n - 1).find_map(|c| {
        let leaves: Vec<usize> = (0..n).filter(|&v| v != c).collect();
        if leaves.iter().any(|&v| g.degree(v) > 2) {
            return None;
        }
        let matching: Vec<(usize, usize)> =
            g.edges().into_iter().filter(|&(a, b)| a != c && b != c).collect();
        Some(ShapeMatch {
            kind: ShapeKind::StarWithMatching,
            centers: vec![c],
            leaves,
            matching,
        })
    })
}

fn double_star(g: &SimpleGraph) -> Option<ShapeMatch> {
    let n = g.vertex_count();
    for a in 0..n {
        for b in a + 1..n {
            if g.degree(a) == 0 || g.degree(b) == 0 {
                continue;
            }
            let fits = (0..n).filter(|&v| v != a && v != b).all(|v| {
                let d = g.degree(v);
                (1..=2).contains(&d) && g.neighbors(v).all(|w| w == a || w == b)
            });
            if fits {
                return Some(ShapeMatch {
                    kind: ShapeKind::DoubleStar,
                    centers: vec![a, b],
                    leaves: (0..n).filter(|&v| v != a && v != b).collect(),
                    matching: Vec::new(),
                });
            }
        }
    }
    None
}

/// First role assignment (by center index) of `kind` on `g`, if any.
pub fn match_shape(g: &SimpleGraph, kind: ShapeKind) -> Option<ShapeMatch> {
    match kind {
        ShapeKind::DoubleStar => double_star(g),
        ShapeKind::StarWithMatching => star_with_matching(g),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete_bipartite, complete_graph};

    #[test]
    fn star_is_a_star() {
        let m = match_shape(&complete_bipartite(1, 4), ShapeKind::StarWithMatching).unwrap();
        assert_eq!(m.centers, vec![0]);
        assert_eq!(m.leaves.len(), 4);
        assert!(m.matching.is_empty());
    }

    #[test]
    fn friendship_graph_is_a_star_with_matching() {
        let g = SimpleGraph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (3, 4)]).unwrap();
        let m = match_shape(&g, ShapeKind::StarWithMatching).unwrap();
        assert_eq!(m.matching, vec![(1, 2), (3, 4)]);
        assert!(match_shape(&g, ShapeKind::DoubleStar).is_none());
    }

    #[test]
    fn k5_matches_nothing() {
        for kind in ShapeKind::ALL {
            assert!(match_shape(&complete_graph(5), kind).is_none());
        }
    }

    #[test]
    fn double_star_with_shared_leaves() {
        // centers 0, 1 adjacent; leaves 2, 3 on both, 4 on 0 only
        let g = SimpleGraph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (0, 3), (1, 3), (0, 4)]).unwrap();
        let m = match_shape(&g, ShapeKind::DoubleStar).unwrap();
        assert_eq!(m.centers, vec![0, 1]);
        assert!(match_shape(&g, ShapeKind::StarWithMatching).is_none());
        // a path 2-3 between leaves breaks the pattern
        let mut h = g.clone();
        h.add_edge(2, 3).unwrap();
        assert!(match_shape(&h, ShapeKind::DoubleStar).is_none());
    }

    #[test]
    fn isolated_vertices_are_not_leaves() {
        let g = SimpleGraph::from_edges(4, &[(0, 1), (0, 2)]).unwrap();
        assert!(match_shape(&g, ShapeKind::DoubleStar).is_none());
        assert!(match_shape(&g, ShapeKind::StarWithMatching).is_none());
    }
}
