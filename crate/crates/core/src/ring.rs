//! Finite commutative unital rings given by explicit operation tables.
//!
//! Element index 0 is always the additive identity. Every constructor
//! normalizes to that convention, so a zero test is a comparison with 0.

use std::path::Path;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::ideal::Ideal;

/// Default cap on the number of ring elements.
pub const DEFAULT_MAX_RING_SIZE: usize = 4096;

/// Default size above which the O(n^3) axiom checks are refused.
pub const DEFAULT_TRIPLE_CHECK_LIMIT: usize = 512;

/// The size cap, overridable through `ANNIGRAPH_MAX_RING_SIZE`.
pub fn max_ring_size() -> usize {
    std::env::var("ANNIGRAPH_MAX_RING_SIZE")
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_MAX_RING_SIZE)
}

#[derive(Clone, PartialEq, Eq)]
pub struct FiniteRing {
    size: usize,
    add: Vec<u32>,
    mul: Vec<u32>,
    one: usize,
    labels: Vec<String>,
    id: u64,
    fingerprint: String,
}

impl std::fmt::Debug for FiniteRing {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiniteRing")
            .field("size", &self.size)
            .field("one", &self.one)
            .field("fingerprint", &self.fingerprint)
            .finish()
    }
}

impl FiniteRing {
    /// Builds a ring from raw row-major tables.
    ///
    /// Checks totality and the size cap, then relabels so that `zero` sits at
    /// index 0. Ring axioms are *not* checked here; see [`validate_ring`].
    pub fn from_tables(
        size: usize,
        add: Vec<u32>,
        mul: Vec<u32>,
        zero: usize,
        one: usize,
        labels: Option<Vec<String>>,
    ) -> Result<Self> {
        let cap = max_ring_size();
        if size == 0 {
            return Err(Error::InvalidRing("ring has no elements".into()));
        }
        if size > cap {
            return Err(Error::RingTooLarge { size, cap });
        }
        if add.len() != size * size || mul.len() != size * size {
            return Err(Error::InvalidRing(format!(
                "tables must be {size}x{size}, got {} and {} entries",
                add.len(),
                mul.len()
            )));
        }
        if let Some(pos) = add.iter().chain(&mul).position(|&e| e as usize >= size) {
            let (table, pos) = if pos < add.len() {
                ("add", pos)
            } else {
                ("mul", pos - add.len())
            };
            return Err(Error::InvalidRing(format!(
                "{table}[{}][{}] is out of range",
                pos / size,
                pos % size
            )));
        }
        if zero >= size || one >= size {
            return Err(Error::InvalidRing("zero or one index out of range".into()));
        }
        let labels = match labels {
            Some(l) if l.len() != size => {
                return Err(Error::InvalidRing(format!(
                    "expected {size} labels, got {}",
                    l.len()
                )))
            }
            Some(l) => l,
            None => (0..size).map(|i| i.to_string()).collect(),
        };
        let ring = Self::assemble(size, add, mul, one, labels);
        if zero == 0 {
            return Ok(ring);
        }
        // swap indices 0 and `zero`
        let perm: Vec<usize> = (0..size)
            .map(|i| match i {
                0 => zero,
                i if i == zero => 0,
                i => i,
            })
            .collect();
        Ok(ring.relabel(&perm))
    }

    fn assemble(size: usize, add: Vec<u32>, mul: Vec<u32>, one: usize, labels: Vec<String>) -> Self {
        let mut hasher = Sha256::new();
        hasher.update((size as u64).to_le_bytes());
        hasher.update((one as u64).to_le_bytes());
        for e in add.iter().chain(&mul) {
            hasher.update(e.to_le_bytes());
        }
        let digest = hasher.finalize();
        let id = u64::from_le_bytes(digest[..8].try_into().expect("digest has 32 bytes"));
        FiniteRing {
            size,
            add,
            mul,
            one,
            labels,
            id,
            fingerprint: hex::encode(&digest[..8]),
        }
    }

    /// Applies an index permutation: new element `i` is old element `perm[i]`.
    fn relabel(&self, perm: &[usize]) -> Self {
        let n = self.size;
        let mut inverse = vec![0usize; n];
        for (new, &old) in perm.iter().enumerate() {
            inverse[old] = new;
        }
        let mut add = vec![0u32; n * n];
        let mut mul = vec![0u32; n * n];
        for a in 0..n {
            for b in 0..n {
                add[a * n + b] = inverse[self.add(perm[a], perm[b])] as u32;
                mul[a * n + b] = inverse[self.mul(perm[a], perm[b])] as u32;
            }
        }
        let labels = perm.iter().map(|&old| self.labels[old].clone()).collect();
        Self::assemble(n, add, mul, inverse[self.one], labels)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn zero(&self) -> usize {
        0
    }

    pub fn one(&self) -> usize {
        self.one
    }

    #[inline]
    pub fn add(&self, a: usize, b: usize) -> usize {
        self.add[a * self.size + b] as usize
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.size + b] as usize
    }

    pub fn label(&self, a: usize) -> &str {
        &self.labels[a]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// Hex digest of the operation tables (labels excluded).
    pub fn fingerprint(&self) -> &str {
        &self.fingerprint
    }

    pub(crate) fn id(&self) -> u64 {
        self.id
    }

    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.size
    }

    /// Additive inverse, found by scanning the addition row.
    pub fn neg(&self, a: usize) -> usize {
        (0..self.size)
            .find(|&b| self.add(a, b) == 0)
            .expect("additive inverse exists in a validated ring")
    }

    pub fn is_unit(&self, a: usize) -> bool {
        (0..self.size).any(|b| self.mul(a, b) == self.one)
    }

    pub fn to_table(&self) -> RingTable {
        let n = self.size;
        let rows = |t: &[u32]| -> Vec<Vec<u32>> { t.chunks(n).map(|r| r.to_vec()).collect() };
        RingTable {
            size: n,
            zero: 0,
            one: self.one,
            add: rows(&self.add),
            mul: rows(&self.mul),
            labels: Some(self.labels.clone()),
        }
    }

    pub fn from_table(table: RingTable) -> Result<Self> {
        let n = table.size;
        if table.add.len() != n || table.mul.len() != n {
            return Err(Error::InvalidRing(format!("tables must have {n} rows")));
        }
        let mut add = Vec::with_capacity(n * n);
        let mut mul = Vec::with_capacity(n * n);
        for (dst, rows) in [(&mut add, &table.add), (&mut mul, &table.mul)] {
            for (i, row) in rows.iter().enumerate() {
                if row.len() != n {
                    return Err(Error::InvalidRing(format!("row {i} has {} entries", row.len())));
                }
                dst.extend_from_slice(row);
            }
        }
        Self::from_tables(n, add, mul, table.zero, table.one, table.labels)
    }

    pub fn load_table(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::from_table(serde_json::from_str(&text)?)
    }
}

/// JSON exchange form of a ring.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct RingTable {
    pub size: usize,
    pub zero: usize,
    pub one: usize,
    pub add: Vec<Vec<u32>>,
    pub mul: Vec<Vec<u32>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

/// JSON exchange form of a structure-constant algebra over `F_p`.
#[derive(Clone, Debug, Serialize, Deserialize, PartialEq)]
pub struct StructureConstants {
    pub p: u64,
    pub rank: usize,
    pub basis: Vec<String>,
    pub mul: Vec<Vec<Vec<u64>>>,
}

impl StructureConstants {
    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Ok(serde_json::from_str(&text)?)
    }

    pub fn build(&self) -> Result<FiniteRing> {
        if self.rank != self.basis.len() {
            return Err(Error::InvalidRing(format!(
                "rank {} does not match {} basis labels",
                self.rank,
                self.basis.len()
            )));
        }
        make_structure_constants(self.p, &self.basis, &self.mul)
    }
}

pub fn is_prime(p: u64) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// `Z_n` with arithmetic mod `n`.
pub fn make_zn(n: usize) -> Result<FiniteRing> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "Z_{n} violates 1 != 0, need n >= 2"
        )));
    }
    let cap = max_ring_size();
    if n > cap {
        return Err(Error::RingTooLarge { size: n, cap });
    }
    let mut add = Vec::with_capacity(n * n);
    let mut mul = Vec::with_capacity(n * n);
    for a in 0..n {
        for b in 0..n {
            add.push(((a + b) % n) as u32);
            mul.push(((a * b) % n) as u32);
        }
    }
    let labels = (0..n).map(|i| i.to_string()).collect();
    FiniteRing::from_tables(n, add, mul, 0, 1 % n, Some(labels))
}

/// Componentwise product `a × b`; element `(x, y)` has index `x·|b| + y`.
pub fn make_product(a: &FiniteRing, b: &FiniteRing) -> Result<FiniteRing> {
    let (na, nb) = (a.size(), b.size());
    let n = na * nb;
    let cap = max_ring_size();
    if n > cap {
        return Err(Error::RingTooLarge { size: n, cap });
    }
    let mut add = Vec::with_capacity(n * n);
    let mut mul = Vec::with_capacity(n * n);
    for x in 0..n {
        let (x1, x2) = (x / nb, x % nb);
        for y in 0..n {
            let (y1, y2) = (y / nb, y % nb);
            add.push((a.add(x1, y1) * nb + b.add(x2, y2)) as u32);
            mul.push((a.mul(x1, y1) * nb + b.mul(x2, y2)) as u32);
        }
    }
    let labels = (0..n)
        .map(|x| format!("({},{})", a.label(x / nb), b.label(x % nb)))
        .collect();
    FiniteRing::from_tables(n, add, mul, 0, a.one() * nb + b.one(), Some(labels))
}

/// Coefficient-vector arithmetic for `F_p^k` with little-endian digit indices.
struct Digits {
    p: u64,
    k: usize,
}

impl Digits {
    fn decode(&self, mut x: usize) -> Vec<u64> {
        let mut v = vec![0; self.k];
        for d in v.iter_mut() {
            *d = x as u64 % self.p;
            x /= self.p as usize;
        }
        v
    }

    fn encode(&self, v: &[u64]) -> usize {
        v.iter()
            .rev()
            .fold(0usize, |acc, &d| acc * self.p as usize + (d % self.p) as usize)
    }

    /// Bilinear product of coefficient vectors under `table`.
    fn product(&self, table: &[Vec<Vec<u64>>], a: &[u64], b: &[u64]) -> Vec<u64> {
        let mut out = vec![0u64; self.k];
        for (i, &ai) in a.iter().enumerate().filter(|(_, &c)| c != 0) {
            for (j, &bj) in b.iter().enumerate().filter(|(_, &c)| c != 0) {
                let s = ai * bj % self.p;
                for (o, &t) in out.iter_mut().zip(&table[i][j]) {
                    *o = (*o + s * t) % self.p;
                }
            }
        }
        out
    }
}

fn sc_label(coeffs: &[u64], basis: &[String]) -> String {
    let terms: Vec<String> = coeffs
        .iter()
        .zip(basis)
        .filter(|(&c, _)| c != 0)
        .map(|(&c, b)| match (c, b.as_str()) {
            (c, "1") => c.to_string(),
            (1, b) => b.to_string(),
            (c, b) => format!("{c}{b}"),
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

/// Commutative `F_p`-algebra with basis `basis` and products
/// `basis[i]·basis[j] = Σ_l table[i][j][l]·basis[l]`. Basis element 0 must be
/// the identity.
///
/// Elements are the `p^k` coefficient vectors; the index of `Σ c_l e_l` is
/// `Σ c_l p^l`, so the zero vector is index 0 and `e_l` is index `p^l`.
/// Because the product is bilinear, commutativity, associativity and the
/// identity law are checked on basis elements only; failures carry a witness.
pub fn make_structure_constants(p: u64, basis: &[String], table: &[Vec<Vec<u64>>]) -> Result<FiniteRing> {
    if !is_prime(p) {
        return Err(Error::NonPrimeModulus(p));
    }
    let k = basis.len();
    if k == 0 {
        return Err(Error::InvalidArgument("rank must be at least 1".into()));
    }
    let shape_ok = table.len() == k
        && table
            .iter()
            .all(|row| row.len() == k && row.iter().all(|v| v.len() == k));
    if !shape_ok {
        return Err(Error::InvalidArgument(format!(
            "multiplication table must be {k}x{k} with length-{k} coefficient vectors"
        )));
    }
    let cap = max_ring_size();
    let size = (p as u128)
        .checked_pow(k as u32)
        .filter(|&s| s <= cap as u128)
        .ok_or(Error::RingTooLarge {
            size: usize::MAX,
            cap,
        })? as usize;
    let table: Vec<Vec<Vec<u64>>> = table
        .iter()
        .map(|row| row.iter().map(|v| v.iter().map(|c| c % p).collect()).collect())
        .collect();
    let digits = Digits { p, k };
    let unit = |i: usize| {
        let mut v = vec![0u64; k];
        v[i] = 1;
        v
    };
    let name = |v: &[u64]| sc_label(v, basis);

    for i in 0..k {
        for j in i + 1..k {
            if table[i][j] != table[j][i] {
                return Err(Error::NotCommutative {
                    a: basis[i].clone(),
                    b: basis[j].clone(),
                });
            }
        }
    }
    for (i, b) in basis.iter().enumerate() {
        let e = unit(i);
        if digits.product(&table, &unit(0), &e) != e {
            return Err(Error::NotUnital(b.clone()));
        }
    }
    for i in 0..k {
        for j in 0..k {
            let ij = &table[i][j];
            for l in 0..k {
                let left = digits.product(&table, ij, &unit(l));
                let right = digits.product(&table, &unit(i), &table[j][l]);
                if left != right {
                    return Err(Error::NotAssociative {
                        a: name(&unit(i)),
                        b: name(&unit(j)),
                        c: name(&unit(l)),
                    });
                }
            }
        }
    }

    let decoded: Vec<Vec<u64>> = (0..size).map(|x| digits.decode(x)).collect();
    let mut add = vec![0u32; size * size];
    for a in 0..size {
        for b in 0..size {
            let sum: Vec<u64> = decoded[a]
                .iter()
                .zip(&decoded[b])
                .map(|(x, y)| (x + y) % p)
                .collect();
            add[a * size + b] = digits.encode(&sum) as u32;
        }
    }
    // mul[a][b] = mul[rest][b] + c·(e_top·b) where a = c·p^top + rest.
    let mut mul = vec![0u32; size * size];
    let mut basis_rows: Vec<Vec<Vec<u64>>> = Vec::with_capacity(k);
    for i in 0..k {
        basis_rows.push(
            decoded
                .iter()
                .map(|b| digits.product(&table, &unit(i), b))
                .collect(),
        );
    }
    for a in 1..size {
        let top = (0..k).rev().find(|&i| decoded[a][i] != 0).expect("a is nonzero");
        let c = decoded[a][top];
        let rest = a - (c as usize) * (p as usize).pow(top as u32);
        for b in 0..size {
            let scaled: Vec<u64> = basis_rows[top][b].iter().map(|x| x * c % p).collect();
            let term = digits.encode(&scaled);
            let prev = mul[rest * size + b] as usize;
            mul[a * size + b] = add[prev * size + term];
        }
    }
    let labels = decoded.iter().map(|v| name(v)).collect();
    FiniteRing::from_tables(size, add, mul, 0, 1, Some(labels))
}

fn poly_string(coeffs_high_first: &[u64]) -> String {
    let deg = coeffs_high_first.len().saturating_sub(1);
    let terms: Vec<String> = coeffs_high_first
        .iter()
        .enumerate()
        .filter(|(_, &c)| c != 0)
        .map(|(i, &c)| {
            let e = deg - i;
            let var = match e {
                0 => String::new(),
                1 => "x".into(),
                e => format!("x^{e}"),
            };
            match (c, e) {
                (c, 0) => c.to_string(),
                (1, _) => var,
                (c, _) => format!("{c}{var}"),
            }
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join("+")
    }
}

/// `Z_p[x]/(f)` for a monic `f`, coefficients listed from the leading term
/// down to the constant term.
pub fn make_poly_quotient(p: u64, f_high_first: &[u64]) -> Result<FiniteRing> {
    if !is_prime(p) {
        return Err(Error::NonPrimeModulus(p));
    }
    let f: Vec<u64> = f_high_first.iter().map(|c| c % p).collect();
    if f.len() < 2 || f[0] != 1 {
        return Err(Error::NotMonic(poly_string(&f)));
    }
    let d = f.len() - 1;
    // low-first coefficients of x^d mod f, i.e. -(f_{d-1} x^{d-1} + ... + f_0)
    let reduction: Vec<u64> = (0..d).map(|i| (p - f[d - i]) % p).collect();
    let mut powers: Vec<Vec<u64>> = Vec::with_capacity(2 * d - 1);
    let mut cur = vec![0u64; d];
    cur[0] = 1;
    for _ in 0..(2 * d - 1) {
        powers.push(cur.clone());
        // multiply by x
        let carry = cur[d - 1];
        let mut next = vec![0u64; d];
        next[1..d].copy_from_slice(&cur[..(d - 1)]);
        for (n, r) in next.iter_mut().zip(&reduction) {
            *n = (*n + carry * r) % p;
        }
        cur = next;
    }
    let table: Vec<Vec<Vec<u64>>> = (0..d)
        .map(|i| (0..d).map(|j| powers[i + j].clone()).collect())
        .collect();
    let basis: Vec<String> = (0..d)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "x".to_string(),
            i => format!("x^{i}"),
        })
        .collect();
    make_structure_constants(p, &basis, &table)
}

/// `F_p[x]/(f)` where `f` must be irreducible, so that the result is a field.
pub fn make_galois_field(p: u64, f_high_first: &[u64]) -> Result<FiniteRing> {
    let ring = make_poly_quotient(p, f_high_first)?;
    if (1..ring.size()).all(|a| ring.is_unit(a)) {
        Ok(ring)
    } else {
        Err(Error::Reducible(poly_string(f_high_first)))
    }
}

/// `R/I` on cosets. Each coset is represented by its least element index and
/// cosets are numbered in order of their representatives.
pub fn quotient_ring(r: &FiniteRing, i: &Ideal) -> Result<FiniteRing> {
    if !i.belongs_to(r) {
        return Err(Error::MixedRings);
    }
    let members = i.to_vec();
    crate::ideal::ideal_from_members(r, &members)?;
    let n = r.size();
    let mut rep = vec![usize::MAX; n];
    let mut reps = Vec::new();
    for a in r.elements() {
        if rep[a] != usize::MAX {
            continue;
        }
        for &x in &members {
            rep[r.add(a, x)] = reps.len();
        }
        reps.push(a);
    }
    let q = reps.len();
    let mut add = Vec::with_capacity(q * q);
    let mut mul = Vec::with_capacity(q * q);
    for &a in &reps {
        for &b in &reps {
            add.push(rep[r.add(a, b)] as u32);
            mul.push(rep[r.mul(a, b)] as u32);
        }
    }
    let labels = reps.iter().map(|&a| r.label(a).to_string()).collect();
    FiniteRing::from_tables(q, add, mul, 0, rep[r.one()], Some(labels))
}

/// Ring axioms, in the order [`validate_ring`] checks them.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Axiom {
    OneIsNotZero,
    AdditiveIdentity,
    AdditiveCommutativity,
    AdditiveInverse,
    MultiplicativeCommutativity,
    MultiplicativeIdentity,
    AdditiveAssociativity,
    MultiplicativeAssociativity,
    Distributivity,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum ValidationReport {
    Pass,
    Fail { axiom: Axiom, witness: Vec<usize> },
    TooLarge { size: usize, limit: usize },
}

impl ValidationReport {
    pub fn is_pass(&self) -> bool {
        matches!(self, ValidationReport::Pass)
    }
}

/// Exhaustive axiom check with the default triple-loop size guard.
pub fn validate_ring(r: &FiniteRing) -> ValidationReport {
    validate_ring_with_limit(r, DEFAULT_TRIPLE_CHECK_LIMIT)
}

/// Checks every axiom over all pairs and triples. Returns the first failing
/// axiom with the lexicographically first witness tuple.
pub fn validate_ring_with_limit(r: &FiniteRing, triple_limit: usize) -> ValidationReport {
    let n = r.size();
    let fail = |axiom, witness: Vec<usize>| ValidationReport::Fail { axiom, witness };
    if r.one() == 0 {
        return fail(Axiom::OneIsNotZero, vec![r.one()]);
    }
    if let Some(a) = (0..n).find(|&a| r.add(0, a) != a || r.add(a, 0) != a) {
        return fail(Axiom::AdditiveIdentity, vec![a]);
    }
    let pairs = |pred: &(dyn Fn(usize, usize) -> bool + Sync)| {
        (0..n)
            .into_par_iter()
            .find_map_first(|a| (0..n).find(|&b| pred(a, b)).map(|b| vec![a, b]))
    };
    if let Some(w) = pairs(&|a, b| r.add(a, b) != r.add(b, a)) {
        return fail(Axiom::AdditiveCommutativity, w);
    }
    if let Some(a) = (0..n).find(|&a| (0..n).all(|b| r.add(a, b) != 0)) {
        return fail(Axiom::AdditiveInverse, vec![a]);
    }
    if let Some(w) = pairs(&|a, b| r.mul(a, b) != r.mul(b, a)) {
        return fail(Axiom::MultiplicativeCommutativity, w);
    }
    if let Some(a) = (0..n).find(|&a| r.mul(r.one(), a) != a) {
        return fail(Axiom::MultiplicativeIdentity, vec![a]);
    }
    if n > triple_limit {
        return ValidationReport::TooLarge {
            size: n,
            limit: triple_limit,
        };
    }
    let triples = |pred: &(dyn Fn(usize, usize, usize) -> bool + Sync)| {
        (0..n)
            .into_par_iter()
            .find_map_first(|a| (0..n).find_map(|b| (0..n).find(|&c| pred(a, b, c)).map(|c| vec![a, b, c])))
    };
    if let Some(w) = triples(&|a, b, c| r.add(r.add(a, b), c) != r.add(a, r.add(b, c))) {
        return fail(Axiom::AdditiveAssociativity, w);
    }
    if let Some(w) = triples(&|a, b, c| r.mul(r.mul(a, b), c) != r.mul(a, r.mul(b, c))) {
        return fail(Axiom::MultiplicativeAssociativity, w);
    }
    if let Some(w) = triples(&|a, b, c| r.mul(a, r.add(b, c)) != r.add(r.mul(a, b), r.mul(a, c))) {
        return fail(Axiom::Distributivity, w);
    }
    ValidationReport::Pass
}
