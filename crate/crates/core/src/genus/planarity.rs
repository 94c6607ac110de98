//! Planarity by path addition (Demoucron, Malgrange and Pertuiset) on each
//! biconnected block. Independent of the rotation-system search.

use std::collections::{BTreeSet, VecDeque};

use crate::graph::SimpleGraph;

/// Edge sets of the biconnected blocks, as vertex-pair lists.
fn blocks(g: &SimpleGraph) -> Vec<Vec<(usize, usize)>> {
    let n = g.vertex_count();
    let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).collect()).collect();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0; n];
    let mut time = 0;
    let mut edge_stack: Vec<(usize, usize)> = Vec::new();
    let mut out = Vec::new();
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        disc[root] = time;
        low[root] = time;
        time += 1;
        // (vertex, parent, next neighbor index)
        let mut stack = vec![(root, usize::MAX, 0usize)];
        while let Some(&mut (v, parent, ref mut next)) = stack.last_mut() {
            if *next < adj[v].len() {
                let w = adj[v][*next];
                *next += 1;
                if disc[w] == usize::MAX {
                    edge_stack.push((v, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    stack.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        let mut block = Vec::new();
                        while let Some(e) = edge_stack.pop() {
                            block.push(e);
                            if e == (p, v) {
                                break;
                            }
                        }
                        out.push(block);
                    }
                }
            }
        }
    }
    out
}

/// A bridge of the remaining graph relative to the embedded subgraph.
struct Fragment {
    attachments: BTreeSet<usize>,
    /// Interior vertices; empty for a single chord.
    interior: Vec<usize>,
}

fn block_is_planar(edges: &[(usize, usize)]) -> bool {
    let mut verts: Vec<usize> = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
    verts.sort_unstable();
    verts.dedup();
    let n = verts.len();
    if n < 5 || edges.len() < 9 {
        return true;
    }
    if edges.len() > 3 * n - 6 {
        return false;
    }
    let idx = |v: usize| verts.binary_search(&v).expect("vertex of block");
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); n];
    for &(a, b) in edges {
        adj[idx(a)].insert(idx(b));
        adj[idx(b)].insert(idx(a));
    }

    let cycle = find_cycle(&adj);
    let mut embedded_v = vec![false; n];
    let mut embedded_e: BTreeSet<(usize, usize)> = BTreeSet::new();
    for (i, &v) in cycle.iter().enumerate() {
        embedded_v[v] = true;
        let w = cycle[(i + 1) % cycle.len()];
        embedded_e.insert((v.min(w), v.max(w)));
    }
    let mut faces: Vec<Vec<usize>> = vec![cycle.clone(), cycle];
    let total_edges = edges.len();

    while embedded_e.len() < total_edges {
        let fragments = fragments(&adj, &embedded_v, &embedded_e);
        let mut choice: Option<(usize, usize, usize)> = None; // (fragment, face, admissible count)
        for (fi, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = faces
                .iter()
                .enumerate()
                .filter(|(_, f)| frag.attachments.iter().all(|a| f.contains(a)))
                .map(|(i, _)| i)
                .collect();
            match admissible.len() {
                0 => return false,
                k => {
                    if choice.is_none_or(|(_, _, c)| k < c) {
                        choice = Some((fi, admissible[0], k));
                    }
                }
            }
        }
        let (fi, face_i, _) = choice.expect("at least one fragment remains");
        let path = fragment_path(&adj, &embedded_v, &fragments[fi]);
        for w in path.windows(2) {
            embedded_e.insert((w[0].min(w[1]), w[0].max(w[1])));
        }
        for &v in &path {
            embedded_v[v] = true;
        }
        let face = faces.swap_remove(face_i);
        let (a, b) = (path[0], *path.last().expect("path has two ends"));
        let pa = face.iter().position(|&x| x == a).expect("attachment on face");
        let pb = face.iter().position(|&x| x == b).expect("attachment on face");
        let interior = &path[1..path.len() - 1];
        let arc = |from: usize, to: usize| {
            let mut out = Vec::new();
            let mut i = from;
            loop {
                out.push(face[i]);
                if i == to {
                    break;
                }
                i = (i + 1) % face.len();
            }
            out
        };
        // a..b along the face, then back to a through the path
        let mut f1 = arc(pa, pb);
        f1.extend(interior.iter().rev());
        let mut f2 = arc(pb, pa);
        f2.extend(interior.iter());
        faces.push(f1);
        faces.push(f2);
    }
    true
}

fn find_cycle(adj: &[BTreeSet<usize>]) -> Vec<usize> {
    // every edge of a block with >= 3 vertices lies on a cycle
    let u = 0;
    let v = *adj[u].first().expect("block vertex has a neighbor");
    let n = adj.len();
    let mut prev = vec![usize::MAX; n];
    prev[u] = u;
    let mut queue = VecDeque::from([u]);
    while let Some(x) = queue.pop_front() {
        for &w in &adj[x] {
            if (x, w) == (u, v) || prev[w] != usize::MAX {
                continue;
            }
            prev[w] = x;
            if w == v {
                let mut path = vec![v];
                let mut y = v;
                while y != u {
                    y = prev[y];
                    path.push(y);
                }
                return path;
            }
            queue.push_back(w);
        }
    }
    unreachable!("edge of a biconnected block lies on a cycle")
}

fn fragments(
    adj: &[BTreeSet<usize>],
    embedded_v: &[bool],
    embedded_e: &BTreeSet<(usize, usize)>,
) -> Vec<Fragment> {
    let n = adj.len();
    let mut out = Vec::new();
    for u in 0..n {
        if !embedded_v[u] {
            continue;
        }
        for &v in adj[u].range(u + 1..) {
            if embedded_v[v] && !embedded_e.contains(&(u, v)) {
                out.push(Fragment {
                    attachments: [u, v].into_iter().collect(),
                    interior: Vec::new(),
                });
            }
        }
    }
    let mut seen = vec![false; n];
    for s in 0..n {
        if embedded_v[s] || seen[s] {
            continue;
        }
        let mut interior = Vec::new();
        let mut attachments = BTreeSet::new();
        let mut queue = VecDeque::from([s]);
        seen[s] = true;
        while let Some(v) = queue.pop_front() {
            interior.push(v);
            for &w in &adj[v] {
                if embedded_v[w] {
                    attachments.insert(w);
                } else if !seen[w] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        out.push(Fragment {
            attachments,
            interior,
        });
    }
    out
}

/// A path through `frag` joining two distinct attachment vertices.
fn fragment_path(adj: &[BTreeSet<usize>], embedded_v: &[bool], frag: &Fragment) -> Vec<usize> {
    if frag.interior.is_empty() {
        return frag.attachments.iter().copied().collect();
    }
    let a = *frag.attachments.first().expect("fragment has attachments");
    let start = *adj[a]
        .iter()
        .find(|w| frag.interior.contains(w))
        .expect("attachment touches interior");
    let n = adj.len();
    let mut prev = vec![usize::MAX; n];
    prev[start] = start;
    let mut queue = VecDeque::from([start]);
    while let Some(v) = queue.pop_front() {
        if let Some(&b) = adj[v].iter().find(|&&b| b != a && embedded_v[b]) {
            let mut path = vec![b, v];
            let mut x = v;
            while prev[x] != x {
                x = prev[x];
                path.push(x);
            }
            path.push(a);
            path.reverse();
            return path;
        }
        for &w in &adj[v] {
            if !embedded_v[w] && prev[w] == usize::MAX {
                prev[w] = v;
                queue.push_back(w);
            }
        }
    }
    unreachable!("fragment in a biconnected block has two attachments")
}

/// True iff `g` embeds in the sphere.
pub fn is_planar(g: &SimpleGraph) -> bool {
    blocks(g).iter().all(|b| block_is_planar(b))
}
