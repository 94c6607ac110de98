//! Branch and bound over rotation systems of a connected simple graph.
//!
//! Faces are traced one at a time. Every untraced successor met while
//! walking a face is a branch point that fixes one link of a vertex
//! rotation. A face closes as soon as the walk returns to its first dart,
//! so the face count bound `closed + 1 + remaining darts / girth` cuts
//! branches whose faces run long.

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::Instant;

/// Shared node/time accounting for one genus computation.
pub(crate) struct Meter {
    nodes: AtomicU64,
    max_nodes: u64,
    deadline: Option<Instant>,
    expired: AtomicBool,
}

impl Meter {
    pub(crate) fn new(max_nodes: u64, deadline: Option<Instant>) -> Self {
        Meter {
            nodes: AtomicU64::new(0),
            max_nodes,
            deadline,
            expired: AtomicBool::new(false),
        }
    }

    /// Counts `batch` nodes; false once the budget is spent.
    fn charge(&self, batch: u64) -> bool {
        if self.expired.load(Ordering::Relaxed) {
            return false;
        }
        let total = self.nodes.fetch_add(batch, Ordering::Relaxed) + batch;
        let out_of_time = self.deadline.is_some_and(|d| Instant::now() >= d);
        if total > self.max_nodes || out_of_time {
            self.expired.store(true, Ordering::Relaxed);
            return false;
        }
        true
    }

    pub(crate) fn nodes(&self) -> u64 {
        self.nodes.load(Ordering::Relaxed)
    }
}

/// Connected simple graph with minimum degree >= 2, in dart form.
#[derive(Clone, Debug)]
pub(crate) struct DartGraph {
    pub adj: Vec<Vec<usize>>,
    offset: Vec<usize>,
    /// `rev[d]` is the dart opposite to `d`.
    rev: Vec<usize>,
    /// Tail vertex of each dart.
    tail: Vec<usize>,
    /// Head vertex of each dart.
    head: Vec<usize>,
    pub girth: usize,
}

impl DartGraph {
    pub(crate) fn new(adj: Vec<Vec<usize>>) -> Self {
        let n = adj.len();
        let mut offset = vec![0; n + 1];
        for v in 0..n {
            offset[v + 1] = offset[v] + adj[v].len();
        }
        let darts = offset[n];
        let mut tail = vec![0; darts];
        let mut head = vec![0; darts];
        let mut rev = vec![0; darts];
        for v in 0..n {
            for (k, &w) in adj[v].iter().enumerate() {
                let d = offset[v] + k;
                tail[d] = v;
                head[d] = w;
                let back = adj[w].iter().position(|&x| x == v).expect("symmetric adjacency");
                rev[d] = offset[w] + back;
            }
        }
        let girth = girth(&adj).unwrap_or(3);
        DartGraph {
            adj,
            offset,
            rev,
            tail,
            head,
            girth,
        }
    }

    pub(crate) fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub(crate) fn dart_count(&self) -> usize {
        self.tail.len()
    }

    pub(crate) fn edge_count(&self) -> usize {
        self.dart_count() / 2
    }

    fn out_dart(&self, v: usize, k: usize) -> usize {
        self.offset[v] + k
    }

    /// Index of `head(d)` among the neighbors of `tail(d)`.
    fn head_index(&self, d: usize) -> usize {
        d - self.offset[self.tail[d]]
    }

    fn in_dart(&self, v: usize, k: usize) -> usize {
        self.rev[self.offset[v] + k]
    }

    /// Number of faces of the embedding given by `rot` (neighbor indices).
    pub(crate) fn count_faces(&self, rot: &[Vec<usize>]) -> usize {
        let mut succ = vec![0usize; self.dart_count()];
        for (v, order) in rot.iter().enumerate() {
            let d = order.len();
            for i in 0..d {
                succ[self.in_dart(v, order[i])] = self.out_dart(v, order[(i + 1) % d]);
            }
        }
        let mut seen = vec![false; self.dart_count()];
        let mut faces = 0;
        for s in 0..self.dart_count() {
            if seen[s] {
                continue;
            }
            faces += 1;
            let mut d = s;
            while !seen[d] {
                seen[d] = true;
                d = succ[d];
            }
        }
        faces
    }

    /// Genus of a connected embedding with `faces` faces.
    pub(crate) fn genus_for_faces(&self, faces: usize) -> i64 {
        (2 - self.vertex_count() as i64 + self.edge_count() as i64 - faces as i64) / 2
    }

    /// Faces needed for an embedding of genus `g`.
    pub(crate) fn faces_for_genus(&self, g: u32) -> i64 {
        2 - 2 * g as i64 - self.vertex_count() as i64 + self.edge_count() as i64
    }

    /// Lower bound from `F <= 2E / girth`.
    pub(crate) fn girth_lower_bound(&self) -> u32 {
        let f_max = (self.dart_count() / self.girth) as i64;
        let twice = 2 - self.vertex_count() as i64 + self.edge_count() as i64 - f_max;
        (twice.max(0) as u32).div_ceil(2)
    }
}

fn girth(adj: &[Vec<usize>]) -> Option<usize> {
    let n = adj.len();
    let mut best = usize::MAX;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for s in 0..n {
        dist.iter_mut().for_each(|d| *d = usize::MAX);
        dist[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    queue.push_back(w);
                } else if parent[u] != w {
                    best = best.min(dist[u] + dist[w] + 1);
                }
            }
        }
    }
    (best != usize::MAX).then_some(best)
}

pub(crate) enum Outcome {
    /// Neighbor-index rotation per vertex.
    Found(Vec<Vec<usize>>),
    Exhausted,
    OutOfBudget,
}

const NONE: usize = usize::MAX;

const METER_BATCH: u64 = 4096;

/// Undo record for one rotation link `a -> b` at a vertex.
struct Link {
    v: usize,
    a: usize,
    b: usize,
    /// Path endpoints merged by the link; `NONE` when it closed the cycle.
    s: usize,
    e: usize,
    old_end_s: usize,
    old_end_e: usize,
    old_len_s: u32,
    old_len_e: u32,
}

/// Face-by-face search state for one target face count.
///
/// Each vertex carries a partial cyclic order as a set of disjoint paths
/// over its neighbor indices. The successor of dart `u→v` is `v→next_v(u)`,
/// so tracing a face either follows a fixed link or branches on a new one.
/// A face closes as soon as tracing returns to its first dart.
struct FaceSearch<'g> {
    g: &'g DartGraph,
    need: u32,
    next: Vec<Vec<usize>>,
    prev: Vec<Vec<usize>>,
    /// At a path endpoint: the opposite endpoint.
    end: Vec<Vec<usize>>,
    /// At a path endpoint: the path's vertex count.
    len: Vec<Vec<u32>>,
    /// `in_index[d]`: index of `tail(d)` among the neighbors of `head(d)`.
    in_index: Vec<usize>,
    used: Vec<bool>,
    closed: u32,
    closed_darts: u32,
    face_start: usize,
    face_len: u32,
    /// Candidate face starts, most constrained vertices first.
    starts: Vec<usize>,
    /// First vertex of degree >= 3; its rotation is taken up to reflection.
    mirror_vertex: usize,
    trail: Vec<Link>,
    pending: u64,
}

impl<'g> FaceSearch<'g> {
    fn new(g: &'g DartGraph, need: u32) -> Self {
        let order = search_order(g);
        let starts = order
            .iter()
            .flat_map(|&v| (0..g.adj[v].len()).map(move |k| g.out_dart(v, k)))
            .collect();
        let mirror_vertex = order
            .iter()
            .copied()
            .find(|&v| g.adj[v].len() >= 3)
            .unwrap_or(NONE);
        let in_index = (0..g.dart_count()).map(|d| g.head_index(g.rev[d])).collect();
        FaceSearch {
            g,
            need,
            next: g.adj.iter().map(|a| vec![NONE; a.len()]).collect(),
            prev: g.adj.iter().map(|a| vec![NONE; a.len()]).collect(),
            end: g.adj.iter().map(|a| (0..a.len()).collect()).collect(),
            len: g.adj.iter().map(|a| vec![1; a.len()]).collect(),
            in_index,
            used: vec![false; g.dart_count()],
            closed: 0,
            closed_darts: 0,
            face_start: NONE,
            face_len: 0,
            starts,
            mirror_vertex,
            trail: Vec::with_capacity(g.dart_count()),
            pending: 0,
        }
    }

    fn tick(&mut self, meter: &Meter) -> bool {
        self.pending += 1;
        if self.pending >= METER_BATCH {
            let batch = std::mem::take(&mut self.pending);
            return meter.charge(batch);
        }
        true
    }

    fn flush(&mut self, meter: &Meter) -> bool {
        let batch = std::mem::take(&mut self.pending);
        meter.charge(batch)
    }

    /// Whether `a -> b` may be added to the partial rotation at `v`.
    fn can_link(&self, v: usize, a: usize, b: usize) -> bool {
        if a == b || self.prev[v][b] != NONE {
            return false;
        }
        let d = self.g.adj[v].len();
        // b starts the path that a ends: only the full cycle may close
        if self.end[v][b] == a && self.len[v][b] as usize != d {
            return false;
        }
        if v == self.mirror_vertex {
            // rotation and reflection: keep next(0) < prev(0)
            if a == 0 && self.prev[v][0] != NONE && b > self.prev[v][0] {
                return false;
            }
            if b == 0 && self.next[v][0] != NONE && self.next[v][0] > a {
                return false;
            }
        }
        true
    }

    fn link(&mut self, v: usize, a: usize, b: usize) {
        self.next[v][a] = b;
        self.prev[v][b] = a;
        let s = self.end[v][a];
        let e = self.end[v][b];
        if s == b {
            self.trail.push(Link {
                v,
                a,
                b,
                s: NONE,
                e: NONE,
                old_end_s: 0,
                old_end_e: 0,
                old_len_s: 0,
                old_len_e: 0,
            });
            return;
        }
        let rec = Link {
            v,
            a,
            b,
            s,
            e,
            old_end_s: self.end[v][s],
            old_end_e: self.end[v][e],
            old_len_s: self.len[v][s],
            old_len_e: self.len[v][e],
        };
        let total = self.len[v][s] + self.len[v][e];
        self.end[v][s] = e;
        self.end[v][e] = s;
        self.len[v][s] = total;
        self.len[v][e] = total;
        self.trail.push(rec);
    }

    fn unlink(&mut self) {
        let r = self.trail.pop().expect("unlink without link");
        self.next[r.v][r.a] = NONE;
        self.prev[r.v][r.b] = NONE;
        if r.s != NONE {
            self.end[r.v][r.s] = r.old_end_s;
            self.end[r.v][r.e] = r.old_end_e;
            self.len[r.v][r.s] = r.old_len_s;
            self.len[r.v][r.e] = r.old_len_e;
        }
    }

    /// Faces still reachable with the current face open.
    fn open_bound(&self) -> u32 {
        let girth = self.g.girth as u32;
        let this_face = self.face_len.max(girth);
        let rest = (self.g.dart_count() as u32).saturating_sub(self.closed_darts + this_face);
        self.closed + 1 + rest / girth
    }

    /// Continues the open face after its last dart `d`.
    fn advance(&mut self, d: usize, meter: &Meter) -> Option<bool> {
        let v = self.g.head[d];
        let a = self.in_index[d];
        let fixed = self.next[v][a];
        if fixed != NONE {
            return self.step_to(self.g.out_dart(v, fixed), meter);
        }
        let deg = self.g.adj[v].len();
        // try closing the face first, then the remaining neighbors in order
        let closing = (self.g.tail[self.face_start] == v).then(|| self.g.head_index(self.face_start));
        let candidates = closing
            .into_iter()
            .chain((0..deg).filter(|&b| Some(b) != closing));
        for b in candidates {
            if !self.can_link(v, a, b) {
                continue;
            }
            if !self.tick(meter) {
                return None;
            }
            self.link(v, a, b);
            let r = self.step_to(self.g.out_dart(v, b), meter);
            if r == Some(true) {
                return r;
            }
            self.unlink();
            r?;
        }
        Some(false)
    }

    fn step_to(&mut self, nd: usize, meter: &Meter) -> Option<bool> {
        if nd == self.face_start {
            let (start, len) = (self.face_start, self.face_len);
            self.closed += 1;
            self.closed_darts += len;
            let r = self.open_face(meter);
            if r != Some(true) {
                self.closed -= 1;
                self.closed_darts -= len;
                self.face_start = start;
                self.face_len = len;
            }
            return r;
        }
        // partial successors are injective, so `nd` is not on any face yet
        self.used[nd] = true;
        self.face_len += 1;
        let r = if self.open_bound() >= self.need {
            self.advance(nd, meter)
        } else {
            Some(false)
        };
        if r != Some(true) {
            self.used[nd] = false;
            self.face_len -= 1;
        }
        r
    }

    /// Starts a new face at the first untraced dart, or finishes.
    fn open_face(&mut self, meter: &Meter) -> Option<bool> {
        let darts = self.g.dart_count() as u32;
        if self.closed_darts == darts {
            return Some(self.closed >= self.need);
        }
        let girth = self.g.girth as u32;
        if self.closed + (darts - self.closed_darts) / girth < self.need {
            return Some(false);
        }
        let s = *self
            .starts
            .iter()
            .find(|&&d| !self.used[d])
            .expect("an untraced dart remains");
        self.used[s] = true;
        self.face_start = s;
        self.face_len = 1;
        let r = self.advance(s, meter);
        if r != Some(true) {
            self.used[s] = false;
        }
        r
    }

    /// Neighbor-index rotation per vertex, read off complete cycles.
    fn rotation(&self) -> Vec<Vec<usize>> {
        self.next
            .iter()
            .map(|nx| {
                let mut order = vec![0];
                let mut x = nx[0];
                while x != 0 && x != NONE {
                    order.push(x);
                    x = nx[x];
                }
                order
            })
            .collect()
    }
}

/// Vertex order: descending degree, ties broken toward vertices with more
/// already-ordered neighbors, then by index.
pub(crate) fn search_order(g: &DartGraph) -> Vec<usize> {
    let n = g.vertex_count();
    let mut placed = vec![false; n];
    let mut attached = vec![0usize; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !placed[v])
            .max_by(|&a, &b| {
                g.adj[a]
                    .len()
                    .cmp(&g.adj[b].len())
                    .then(attached[a].cmp(&attached[b]))
                    .then(b.cmp(&a))
            })
            .expect("vertex left");
        placed[v] = true;
        order.push(v);
        for &w in &g.adj[v] {
            attached[w] += 1;
        }
    }
    order
}

/// Searches for a rotation system with at least `need` faces.
pub(crate) fn search_faces(g: &DartGraph, need: u32, meter: &Meter) -> Outcome {
    let mut state = FaceSearch::new(g, need);
    let result = state.open_face(meter);
    state.flush(meter);
    match result {
        Some(true) => Outcome::Found(state.rotation()),
        Some(false) => Outcome::Exhausted,
        None => Outcome::OutOfBudget,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> DartGraph {
        DartGraph::new((0..n).map(|v| (0..n).filter(|&w| w != v).collect()).collect())
    }

    #[test]
    fn girth_values() {
        assert_eq!(complete(4).girth, 3);
        let k33: Vec<Vec<usize>> = (0..6)
            .map(|v| if v < 3 { vec![3, 4, 5] } else { vec![0, 1, 2] })
            .collect();
        assert_eq!(DartGraph::new(k33).girth, 4);
    }

    #[test]
    fn k4_planar_k5_not() {
        let meter = Meter::new(u64::MAX, None);
        let k4 = complete(4);
        match search_faces(&k4, k4.faces_for_genus(0) as u32, &meter) {
            Outcome::Found(rot) => assert_eq!(k4.count_faces(&rot), 4),
            _ => panic!("K4 is planar"),
        }
        let k5 = complete(5);
        assert!(matches!(
            search_faces(&k5, k5.faces_for_genus(0) as u32, &meter),
            Outcome::Exhausted
        ));
        assert!(matches!(
            search_faces(&k5, k5.faces_for_genus(1) as u32, &meter),
            Outcome::Found(_)
        ));
    }

    #[test]
    fn k7_toroidal_k8_not() {
        let meter = Meter::new(u64::MAX, None);
        let k7 = complete(7);
        match search_faces(&k7, k7.faces_for_genus(1) as u32, &meter) {
            Outcome::Found(rot) => assert_eq!(k7.count_faces(&rot), 14),
            _ => panic!("K7 embeds in the torus"),
        }
        let k8 = complete(8);
        assert!(matches!(
            search_faces(&k8, k8.faces_for_genus(1) as u32, &meter),
            Outcome::Exhausted
        ));
    }

    #[test]
    fn tiny_budget_runs_out() {
        let meter = Meter::new(10, None);
        let k9 = complete(9);
        assert!(matches!(
            search_faces(&k9, k9.faces_for_genus(3) as u32, &meter),
            Outcome::OutOfBudget
        ));
    }
}
