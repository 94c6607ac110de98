//! Seeded local search over rotation systems for a good initial embedding.
//! Only ever tightens the upper bound; exactness comes from the search.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::search::DartGraph;

const SEED: u64 = 0x67656e7573;

/// Work cap in dart visits, so large graphs get proportionally fewer moves.
const WORK: usize = 40_000_000;
const MAX_MOVES: usize = 200_000;

/// Simulated annealing on face count, starting from `start`. Swaps two
/// neighbors in one rotation per move. Stops early on reaching `target`
/// faces. Returns the best rotation seen and its face count.
pub(crate) fn improve(g: &DartGraph, start: Vec<Vec<usize>>, target: usize) -> (Vec<Vec<usize>>, usize) {
    let movable: Vec<usize> = (0..g.vertex_count()).filter(|&v| g.adj[v].len() >= 3).collect();
    let mut cur = start;
    let mut cur_faces = g.count_faces(&cur);
    let mut best = cur.clone();
    let mut best_faces = cur_faces;
    if movable.is_empty() || best_faces >= target {
        return (best, best_faces);
    }
    let moves = (WORK / g.dart_count().max(1)).min(MAX_MOVES);
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let (t_hot, t_cold) = (1.5f64, 0.05f64);
    for step in 0..moves {
        let temp = t_hot * (t_cold / t_hot).powf(step as f64 / moves as f64);
        let v = movable[rng.gen_range(0..movable.len())];
        let d = cur[v].len();
        let i = rng.gen_range(0..d);
        let j = (i + rng.gen_range(1..d)) % d;
        cur[v].swap(i, j);
        let faces = g.count_faces(&cur);
        let delta = faces as f64 - cur_faces as f64;
        if delta >= 0.0 || rng.gen_bool((delta / temp).exp()) {
            cur_faces = faces;
            if faces > best_faces {
                best_faces = faces;
                best = cur.clone();
                if best_faces >= target {
                    break;
                }
            }
        } else {
            cur[v].swap(i, j);
        }
    }
    (best, best_faces)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn finds_a_torus_embedding_of_k7() {
        let adj: Vec<Vec<usize>> = (0..7).map(|v| (0..7).filter(|&w| w != v).collect()).collect();
        let g = DartGraph::new(adj);
        let identity: Vec<Vec<usize>> = g.adj.iter().map(|a| (0..a.len()).collect()).collect();
        let target = g.faces_for_genus(1) as usize;
        let (rot, faces) = improve(&g, identity, target);
        assert_eq!(faces, target);
        assert_eq!(g.count_faces(&rot), target);
    }
}
