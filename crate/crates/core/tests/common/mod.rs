//! Independent brute-force oracles. These use only the ring's `add` and
//! `mul` tables and plain graph edge lists, never the library's ideal or
//! genus machinery.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};

use annigraph::{FiniteRing, SimpleGraph};
use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;

/// Every subset of `R` that contains 0 and is closed under addition and
/// under multiplication by all of `R`; sorted by (size, members).
pub fn closed_subset_ideals(r: &FiniteRing) -> Vec<Vec<usize>> {
    let n = r.size();
    assert!(n <= 16, "closed-subset oracle is exponential in |R|");
    let mut out = Vec::new();
    // bit i of mask (i >= 1) selects element i; 0 is always present
    for mask in 0u32..(1 << (n - 1)) {
        let has = |x: usize| x == 0 || mask >> (x - 1) & 1 == 1;
        let members: Vec<usize> = (0..n).filter(|&x| has(x)).collect();
        let closed = members
            .iter()
            .all(|&a| members.iter().all(|&b| has(r.add(a, b))) && (0..n).all(|s| has(r.mul(s, a))));
        if closed {
            out.push(members);
        }
    }
    out.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    out
}

/// Ideals as the additive subgroups closed under multiplication by `R`.
/// Subgroups are grown from `(0)` one cyclic subgroup at a time, so the
/// cost is driven by the subgroup count rather than `2^|R|`.
pub fn subgroup_ideals(r: &FiniteRing) -> Vec<Vec<usize>> {
    let n = r.size();
    let cyclic = |x: usize| {
        let mut out = vec![0];
        let mut y = x;
        while y != 0 {
            out.push(y);
            y = r.add(y, x);
        }
        out
    };
    let cyclics: Vec<Vec<usize>> = (0..n).map(cyclic).collect();
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::from([vec![0]]);
    let mut queue = vec![vec![0]];
    while let Some(s) = queue.pop() {
        for (x, cx) in cyclics.iter().enumerate() {
            if s.binary_search(&x).is_ok() {
                continue;
            }
            let mut t: Vec<usize> = s
                .iter()
                .flat_map(|&a| cx.iter().map(move |&k| r.add(a, k)))
                .collect();
            t.sort_unstable();
            t.dedup();
            if seen.insert(t.clone()) {
                queue.push(t);
            }
        }
    }
    let mut out: Vec<Vec<usize>> = seen
        .into_iter()
        .filter(|i| {
            i.iter()
                .all(|&a| (0..n).all(|s| i.binary_search(&r.mul(s, a)).is_ok()))
        })
        .collect();
    out.sort_by(|a, b| (a.len(), a).cmp(&(b.len(), b)));
    out
}

/// `IJ = (0)` iff every pairwise product vanishes.
pub fn products_vanish(r: &FiniteRing, i: &[usize], j: &[usize]) -> bool {
    i.iter().all(|&a| j.iter().all(|&b| r.mul(a, b) == 0))
}

/// Annihilating-ideal graph from an ideal list by pairwise products:
/// vertex member lists and edges as pairs of member lists.
pub type IdealEdges = BTreeSet<(Vec<usize>, Vec<usize>)>;

pub fn pairwise_ag(r: &FiniteRing, ideals: &[Vec<usize>]) -> (BTreeSet<Vec<usize>>, IdealEdges) {
    let nonzero: Vec<&Vec<usize>> = ideals.iter().filter(|i| i.len() > 1).collect();
    let vertices: BTreeSet<Vec<usize>> = nonzero
        .iter()
        .filter(|i| nonzero.iter().any(|j| products_vanish(r, i, j)))
        .map(|i| (*i).clone())
        .collect();
    let mut edges = BTreeSet::new();
    for a in &vertices {
        for b in &vertices {
            if a < b && products_vanish(r, a, b) {
                edges.insert((a.clone(), b.clone()));
            }
        }
    }
    (vertices, edges)
}

/// Smallest ideal in `ideals` containing `gens`.
pub fn generated(ideals: &[Vec<usize>], gens: &[usize]) -> Vec<usize> {
    ideals
        .iter()
        .filter(|i| gens.iter().all(|g| i.binary_search(g).is_ok()))
        .min_by_key(|i| i.len())
        .expect("R contains every generator set")
        .clone()
}

/// Classification facts recomputed from a brute-force lattice.
#[derive(Debug, PartialEq)]
pub struct OracleClass {
    pub ideal_count: usize,
    pub is_local: bool,
    pub is_spir: bool,
    pub is_gorenstein: Option<bool>,
    pub socle_dim: Option<u32>,
    pub vdim_profile: Option<Vec<u32>>,
}

fn log_base(q: usize, mut v: usize) -> u32 {
    let mut d = 0;
    while v > 1 {
        assert_eq!(v % q, 0, "quotient size is a power of the residue size");
        v /= q;
        d += 1;
    }
    d
}

pub fn oracle_class(r: &FiniteRing, ideals: &[Vec<usize>]) -> OracleClass {
    let n = r.size();
    let proper: Vec<&Vec<usize>> = ideals.iter().filter(|i| i.len() < n).collect();
    let maximal: Vec<&Vec<usize>> = proper
        .iter()
        .filter(|i| {
            !proper
                .iter()
                .any(|j| j.len() > i.len() && i.iter().all(|x| j.binary_search(x).is_ok()))
        })
        .copied()
        .collect();
    let is_local = maximal.len() == 1;
    let principal = |x: usize| generated(ideals, &[x]);
    let all_principal = ideals.iter().all(|i| i.iter().any(|&x| principal(x) == *i));
    if !is_local {
        return OracleClass {
            ideal_count: ideals.len(),
            is_local,
            is_spir: false,
            is_gorenstein: None,
            socle_dim: None,
            vdim_profile: None,
        };
    }
    let m = maximal[0].clone();
    let q = n / m.len();
    let socle: Vec<usize> = (0..n).filter(|&s| m.iter().all(|&x| r.mul(s, x) == 0)).collect();
    let mut powers = vec![m.clone()];
    loop {
        let last = powers.last().expect("nonempty");
        if last.len() == 1 {
            break;
        }
        let gens: Vec<usize> = last
            .iter()
            .flat_map(|&a| m.iter().map(move |&b| (a, b)))
            .map(|(a, b)| r.mul(a, b))
            .collect();
        powers.push(generated(ideals, &gens));
    }
    let profile: Vec<u32> = powers
        .windows(2)
        .map(|w| log_base(q, w[0].len() / w[1].len()))
        .collect();
    let socle_dim = log_base(q, socle.len());
    OracleClass {
        ideal_count: ideals.len(),
        is_local,
        is_spir: all_principal,
        is_gorenstein: Some(socle_dim == 1),
        socle_dim: Some(socle_dim),
        vdim_profile: Some(profile),
    }
}

/// Face count of the embedding given by `rot` (cyclic neighbor orders).
fn faces(adj: &[Vec<usize>], rot: &[Vec<usize>]) -> usize {
    let pos: Vec<HashMap<usize, usize>> = rot
        .iter()
        .map(|r| r.iter().enumerate().map(|(i, &w)| (w, i)).collect())
        .collect();
    let mut seen: BTreeSet<(usize, usize)> = BTreeSet::new();
    let mut count = 0;
    for (u, vs) in adj.iter().enumerate() {
        for &v in vs {
            if seen.contains(&(u, v)) {
                continue;
            }
            count += 1;
            let (mut a, mut b) = (u, v);
            while seen.insert((a, b)) {
                // next dart leaves b after a in b's rotation
                let r = &rot[b];
                let c = r[(pos[b][&a] + 1) % r.len()];
                a = b;
                b = c;
            }
        }
    }
    count
}

fn permutations(items: &[usize]) -> Vec<Vec<usize>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..items.len() {
        let mut rest = items.to_vec();
        let x = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, x);
            out.push(p);
        }
    }
    out
}

/// Number of rotation systems up to per-vertex cyclic shift.
pub fn rotation_count(g: &SimpleGraph) -> u64 {
    (0..g.vertex_count())
        .map(|v| (1..g.degree(v).max(1) as u64).product::<u64>())
        .product()
}

/// Minimum genus over every rotation system, per connected component.
pub fn brute_force_genus(g: &SimpleGraph) -> u64 {
    let n = g.vertex_count();
    let adj: Vec<Vec<usize>> = (0..n).map(|v| g.neighbors(v).collect()).collect();
    // components by union-find
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut Vec<usize>, x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    for (u, vs) in adj.iter().enumerate() {
        for &v in vs {
            let (a, b) = (find(&mut parent, u), find(&mut parent, v));
            parent[a] = b;
        }
    }
    let mut comps: HashMap<usize, Vec<usize>> = HashMap::new();
    for v in 0..n {
        let root = find(&mut parent, v);
        comps.entry(root).or_default().push(v);
    }
    let mut total = 0;
    for comp in comps.values() {
        let e: usize = comp.iter().map(|&v| adj[v].len()).sum::<usize>() / 2;
        if e == 0 {
            continue;
        }
        // per vertex: first neighbor fixed, the rest permuted
        let choices: Vec<Vec<Vec<usize>>> = comp
            .iter()
            .map(|&v| {
                let (first, rest) = adj[v].split_first().expect("non-isolated");
                permutations(rest)
                    .into_iter()
                    .map(|mut p| {
                        p.insert(0, *first);
                        p
                    })
                    .collect()
            })
            .collect();
        let mut rot: Vec<Vec<usize>> = adj.clone();
        let mut idx = vec![0usize; comp.len()];
        let mut best_faces = 0;
        loop {
            for (k, &v) in comp.iter().enumerate() {
                rot[v] = choices[k][idx[k]].clone();
            }
            let sub: Vec<Vec<usize>> = (0..n)
                .map(|v| {
                    if comp.contains(&v) {
                        adj[v].clone()
                    } else {
                        Vec::new()
                    }
                })
                .collect();
            best_faces = best_faces.max(faces(&sub, &rot));
            // odometer
            let mut k = 0;
            while k < comp.len() {
                idx[k] += 1;
                if idx[k] < choices[k].len() {
                    break;
                }
                idx[k] = 0;
                k += 1;
            }
            if k == comp.len() {
                break;
            }
        }
        // V - E + F = 2 - 2g
        let g2 = 2 + e as i64 - comp.len() as i64 - best_faces as i64;
        total += (g2 / 2) as u64;
    }
    total
}

/// Erdos-Renyi graph on `n` vertices with edge probability `p`.
pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> SimpleGraph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    SimpleGraph::from_edges(n, &edges).expect("valid edges")
}

/// Uniform random permutation of `0..n`.
pub fn random_permutation(rng: &mut ChaCha8Rng, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}
