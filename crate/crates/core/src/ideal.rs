//! Ideals of a finite ring and the complete ideal lattice.

use std::collections::HashSet;

use serde::Serialize;

use crate::bitset::MemberSet;
use crate::error::{Error, Result};
use crate::ring::FiniteRing;

/// Default cap on the number of ideals `all_ideals` may produce.
pub const DEFAULT_LATTICE_CAP: usize = 100_000;

/// An ideal, stored as a membership mask tagged with its ring's id.
///
/// Two ideals are equal iff they belong to the same ring and have the same
/// members.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Ideal {
    ring_id: u64,
    members: MemberSet,
}

impl std::fmt::Debug for Ideal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Ideal{:?}", self.members)
    }
}

impl Ideal {
    pub fn members(&self) -> &MemberSet {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.count()
    }

    pub fn is_zero(&self) -> bool {
        self.len() == 1
    }

    /// Never true; an ideal contains at least zero.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, x: usize) -> bool {
        self.members.contains(x)
    }

    pub fn is_subset(&self, other: &Ideal) -> bool {
        self.members.is_subset(&other.members)
    }

    /// Sorted member indices; the serialized form of an ideal.
    pub fn to_vec(&self) -> Vec<usize> {
        self.members.to_vec()
    }

    pub fn belongs_to(&self, r: &FiniteRing) -> bool {
        self.ring_id == r.id()
    }

    fn same_ring(&self, other: &Ideal) -> Result<()> {
        if self.ring_id == other.ring_id {
            Ok(())
        } else {
            Err(Error::MixedRings)
        }
    }
}

impl Serialize for Ideal {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.members.iter())
    }
}

fn check_owner(r: &FiniteRing, i: &Ideal) -> Result<()> {
    if i.belongs_to(r) {
        Ok(())
    } else {
        Err(Error::MixedRings)
    }
}

pub fn zero_ideal(r: &FiniteRing) -> Ideal {
    Ideal {
        ring_id: r.id(),
        members: MemberSet::from_indices(r.size(), [0]),
    }
}

pub fn unit_ideal(r: &FiniteRing) -> Ideal {
    Ideal {
        ring_id: r.id(),
        members: MemberSet::full(r.size()),
    }
}

/// Checks the ideal axioms on an arbitrary element set.
pub fn ideal_from_members(r: &FiniteRing, members: &[usize]) -> Result<Ideal> {
    if let Some(&bad) = members.iter().find(|&&x| x >= r.size()) {
        return Err(Error::NotAnIdeal(format!("element {bad} is out of range")));
    }
    let set = MemberSet::from_indices(r.size(), members.iter().copied());
    if !set.contains(0) {
        return Err(Error::NotAnIdeal("does not contain zero".into()));
    }
    for a in set.iter() {
        if let Some(b) = set.iter().find(|&b| !set.contains(r.add(a, b))) {
            return Err(Error::NotAnIdeal(format!(
                "{} + {} escapes the set",
                r.label(a),
                r.label(b)
            )));
        }
        if let Some(s) = r.elements().find(|&s| !set.contains(r.mul(s, a))) {
            return Err(Error::NotAnIdeal(format!(
                "{} * {} escapes the set",
                r.label(s),
                r.label(a)
            )));
        }
    }
    Ok(Ideal {
        ring_id: r.id(),
        members: set,
    })
}

/// `Rx = {a·x : a ∈ R}`.
pub fn principal_ideal(r: &FiniteRing, x: usize) -> Ideal {
    Ideal {
        ring_id: r.id(),
        members: MemberSet::from_indices(r.size(), r.elements().map(|a| r.mul(a, x))),
    }
}

/// Additive subgroup generated by `generators`; an ideal whenever the
/// generator set is closed under multiplication by ring elements.
fn additive_closure(r: &FiniteRing, generators: &MemberSet) -> MemberSet {
    let gens: Vec<usize> = generators.iter().filter(|&g| g != 0).collect();
    let mut set = MemberSet::from_indices(r.size(), [0]);
    let mut frontier = vec![0usize];
    while let Some(x) = frontier.pop() {
        for &g in &gens {
            let y = r.add(x, g);
            if set.insert(y) {
                frontier.push(y);
            }
        }
    }
    set
}

/// `I + J = {a + b}`; already an ideal since both summands are.
pub fn ideal_sum(r: &FiniteRing, i: &Ideal, j: &Ideal) -> Result<Ideal> {
    i.same_ring(j)?;
    check_owner(r, i)?;
    let mut set = MemberSet::empty(r.size());
    for a in i.members.iter() {
        for b in j.members.iter() {
            set.insert(r.add(a, b));
        }
    }
    Ok(Ideal {
        ring_id: i.ring_id,
        members: set,
    })
}

pub fn ideal_intersection(i: &Ideal, j: &Ideal) -> Result<Ideal> {
    i.same_ring(j)?;
    Ok(Ideal {
        ring_id: i.ring_id,
        members: i.members.intersection(&j.members),
    })
}

/// `IJ`: the additive closure of all pairwise products. The product set is
/// already closed under scalars, so additive closure suffices.
pub fn ideal_product(r: &FiniteRing, i: &Ideal, j: &Ideal) -> Result<Ideal> {
    i.same_ring(j)?;
    check_owner(r, i)?;
    let mut products = MemberSet::empty(r.size());
    for a in i.members.iter() {
        for b in j.members.iter() {
            products.insert(r.mul(a, b));
        }
    }
    Ok(Ideal {
        ring_id: i.ring_id,
        members: additive_closure(r, &products),
    })
}

/// Whether `IJ = (0)`, without materializing the product.
pub fn annihilates(r: &FiniteRing, i: &Ideal, j: &Ideal) -> bool {
    i.members
        .iter()
        .all(|a| j.members.iter().all(|b| r.mul(a, b) == 0))
}

pub fn ideal_power(r: &FiniteRing, i: &Ideal, k: u32) -> Result<Ideal> {
    if k == 0 {
        return Err(Error::InvalidArgument("ideal power exponent must be >= 1".into()));
    }
    let mut acc = i.clone();
    for _ in 1..k {
        acc = ideal_product(r, &acc, i)?;
    }
    Ok(acc)
}

/// `Ann(I) = {a : a·x = 0 for all x ∈ I}`.
pub fn annihilator(r: &FiniteRing, i: &Ideal) -> Result<Ideal> {
    check_owner(r, i)?;
    let members: Vec<usize> = i.members.iter().filter(|&x| x != 0).collect();
    Ok(Ideal {
        ring_id: i.ring_id,
        members: MemberSet::from_indices(
            r.size(),
            r.elements()
                .filter(|&a| members.iter().all(|&x| r.mul(a, x) == 0)),
        ),
    })
}

/// Every ideal of a ring, sorted by (cardinality, member list).
#[derive(Clone, Debug)]
pub struct IdealLattice {
    ring_id: u64,
    fingerprint: String,
    ideals: Vec<Ideal>,
}

impl IdealLattice {
    pub fn ideals(&self) -> &[Ideal] {
        &self.ideals
    }

    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    pub fn fingerprint(&self) -> &str {
        &self.fingerprint
    }

    pub fn belongs_to(&self, r: &FiniteRing) -> bool {
        self.ring_id == r.id()
    }

    pub fn zero(&self) -> &Ideal {
        &self.ideals[0]
    }

    pub fn whole(&self) -> &Ideal {
        self.ideals.last().expect("lattice contains R")
    }

    pub fn index_of(&self, i: &Ideal) -> Option<usize> {
        self.ideals
            .binary_search_by(|probe| probe.members.canonical_cmp(&i.members))
            .ok()
            .filter(|_| i.ring_id == self.ring_id)
    }

    /// Whether ideal `a` is contained in ideal `b` (by lattice index).
    pub fn contains(&self, b: usize, a: usize) -> bool {
        self.ideals[a].is_subset(&self.ideals[b])
    }

    /// `𝕀(J)`: all ideals contained in `j`, including `(0)` and `j` itself.
    pub fn sub_ideals(&self, j: &Ideal) -> Vec<&Ideal> {
        self.ideals.iter().filter(|i| i.is_subset(j)).collect()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "fingerprint": self.fingerprint,
            "ideals": self.ideals,
        })
    }
}

pub fn all_ideals(r: &FiniteRing) -> Result<IdealLattice> {
    all_ideals_capped(r, DEFAULT_LATTICE_CAP)
}

/// Seeds with all principal ideals and closes under pairwise sums. Every
/// ideal of a finite unital ring is a finite sum of principal ideals, so the
/// fixpoint is the complete lattice.
pub fn all_ideals_capped(r: &FiniteRing, cap: usize) -> Result<IdealLattice> {
    let mut seen: HashSet<MemberSet> = HashSet::new();
    let mut ideals: Vec<Ideal> = Vec::new();
    for x in r.elements() {
        let p = principal_ideal(r, x);
        if seen.insert(p.members.clone()) {
            ideals.push(p);
        }
    }
    let principal_count = ideals.len();
    let mut next = 0;
    while next < ideals.len() {
        // sums of the new ideal with every principal ideal suffice: any sum
        // of principals is reached by adding one principal at a time
        for k in 0..principal_count {
            let s = ideal_sum(r, &ideals[next], &ideals[k])?;
            if seen.insert(s.members.clone()) {
                if ideals.len() >= cap {
                    return Err(Error::LatticeTooLarge { cap });
                }
                ideals.push(s);
            }
        }
        next += 1;
    }
    if ideals.len() > cap {
        return Err(Error::LatticeTooLarge { cap });
    }
    ideals.sort_by(|a, b| a.members.canonical_cmp(&b.members));
    Ok(IdealLattice {
        ring_id: r.id(),
        fingerprint: r.fingerprint().to_string(),
        ideals,
    })
}

/// `A(R)*`: the nonzero ideals with a nonzero annihilator, in lattice order.
pub fn annihilating_ideals<'a>(r: &FiniteRing, lattice: &'a IdealLattice) -> Vec<&'a Ideal> {
    lattice
        .ideals
        .iter()
        .filter(|i| !i.is_zero())
        .filter(|i| annihilator(r, i).map(|ann| !ann.is_zero()).unwrap_or(false))
        .collect()
}

/// Human-readable ideal name: `(g)` for the smallest generator of a
/// principal ideal, `(g,h)` for the lexicographically smallest generating
/// pair, otherwise `I#k` with `k` the lattice index.
pub fn ideal_name(r: &FiniteRing, lattice: &IdealLattice, i: &Ideal) -> String {
    let members = i.to_vec();
    for &x in &members {
        if principal_ideal(r, x) == *i {
            return format!("({})", r.label(x));
        }
    }
    let principals: Vec<(usize, Ideal)> = members.iter().map(|&x| (x, principal_ideal(r, x))).collect();
    for (a, (x, px)) in principals.iter().enumerate() {
        for (y, py) in &principals[a + 1..] {
            if let Ok(s) = ideal_sum(r, px, py) {
                if s == *i {
                    return format!("({},{})", r.label(*x), r.label(*y));
                }
            }
        }
    }
    match lattice.index_of(i) {
        Some(k) => format!("I#{k}"),
        None => format!("I{:?}", members),
    }
}
