//! Ring-theoretic invariants of a finite ring: maximal ideals, locality,
//! nilpotency index, graded dimensions, socle, Gorenstein and SPIR flags.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::ideal::{annihilator, ideal_product, zero_ideal, Ideal, IdealLattice};
use crate::ring::FiniteRing;

#[derive(Clone, Debug, Serialize)]
pub struct RingClassification {
    pub fingerprint: String,
    pub size: usize,
    pub ideal_count: usize,
    pub maximal_ideals: Vec<Ideal>,
    pub is_local: bool,
    pub is_field: bool,
    /// Every finite commutative ring is Artinian.
    pub is_artinian: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub m: Option<Ideal>,
    /// Nilpotency index: `m^t != 0`, `m^(t+1) = 0`; 0 for fields.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub t: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residue_size: Option<usize>,
    /// `vdim(m^k / m^(k+1))` for `k = 1..=t`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub vdim_profile: Option<Vec<u32>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub socle: Option<Ideal>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub socle_dim: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub is_gorenstein: Option<bool>,
    pub is_spir: bool,
    /// `m^0 = R, m^1, ..., m^(t+1) = (0)`; empty for non-local rings.
    #[serde(skip)]
    pub m_powers: Vec<Ideal>,
}

impl RingClassification {
    /// Local ring that is not a field.
    pub fn is_local_nonfield(&self) -> bool {
        self.is_local && !self.is_field
    }

    pub fn m_power(&self, k: usize) -> Option<&Ideal> {
        let last = self.m_powers.len().checked_sub(1)?;
        Some(&self.m_powers[k.min(last)])
    }

    pub fn csv_header() -> &'static str {
        "fingerprint,size,ideal_count,maximal_ideals,is_local,is_field,t,residue_size,vdim_profile,socle_dim,is_gorenstein,is_spir"
    }

    pub fn csv_row(&self) -> String {
        let opt = |v: Option<String>| v.unwrap_or_default();
        format!(
            "{},{},{},{},{},{},{},{},{},{},{},{}",
            self.fingerprint,
            self.size,
            self.ideal_count,
            self.maximal_ideals.len(),
            self.is_local,
            self.is_field,
            opt(self.t.map(|t| t.to_string())),
            opt(self.residue_size.map(|q| q.to_string())),
            opt(self
                .vdim_profile
                .as_ref()
                .map(|p| { p.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(";") })),
            opt(self.socle_dim.map(|d| d.to_string())),
            opt(self.is_gorenstein.map(|g| g.to_string())),
            self.is_spir,
        )
    }
}

fn power_of(base: usize, value: usize) -> Option<u32> {
    if base < 2 {
        return None;
    }
    let mut v = value;
    let mut e = 0;
    while v > 1 {
        if !v.is_multiple_of(base) {
            return None;
        }
        v /= base;
        e += 1;
    }
    (v == 1).then_some(e)
}

fn is_prime_power(q: usize) -> bool {
    (2..=q)
        .find(|&d| q.is_multiple_of(d))
        .is_some_and(|p| power_of(p, q).is_some())
}

/// Dimension of `numerator / denominator` as an `R/m`-vector space.
pub fn vdim(r: &FiniteRing, numerator: &Ideal, denominator: &Ideal, m: &Ideal, q: usize) -> Result<u32> {
    if !denominator.is_subset(numerator) {
        return Err(Error::Vdim("denominator is not contained in numerator".into()));
    }
    if !ideal_product(r, m, numerator)?.is_subset(denominator) {
        return Err(Error::Vdim(
            "m * numerator is not contained in denominator".into(),
        ));
    }
    let ratio = numerator.len() / denominator.len();
    power_of(q, ratio)
        .ok_or_else(|| Error::Vdim(format!("quotient of size {ratio} is not a power of q = {q}")))
}

/// Maximal ideals: proper ideals with no proper ideal strictly above them.
pub fn maximal_ideals(lattice: &IdealLattice) -> Vec<Ideal> {
    let ideals = lattice.ideals();
    let proper = &ideals[..ideals.len() - 1];
    proper
        .iter()
        .filter(|i| !proper.iter().any(|j| j.len() > i.len() && i.is_subset(j)))
        .cloned()
        .collect()
}

pub fn classify(r: &FiniteRing, lattice: &IdealLattice) -> Result<RingClassification> {
    if !lattice.belongs_to(r) {
        return Err(Error::MixedRings);
    }
    let maximal = maximal_ideals(lattice);
    let mut c = RingClassification {
        fingerprint: r.fingerprint().to_string(),
        size: r.size(),
        ideal_count: lattice.len(),
        maximal_ideals: maximal.clone(),
        is_local: maximal.len() == 1,
        is_field: false,
        is_artinian: true,
        m: None,
        t: None,
        residue_size: None,
        vdim_profile: None,
        socle: None,
        socle_dim: None,
        is_gorenstein: None,
        is_spir: false,
        m_powers: Vec::new(),
    };
    if !c.is_local {
        return Ok(c);
    }
    let m = maximal[0].clone();
    let q = r.size() / m.len();
    if !is_prime_power(q) {
        return Err(Error::InvalidRing(format!(
            "residue field size {q} is not a prime power"
        )));
    }
    let mut powers = vec![lattice.whole().clone(), m.clone()];
    while !powers.last().expect("nonempty").is_zero() {
        let next = ideal_product(r, powers.last().expect("nonempty"), &m)?;
        if next == *powers.last().expect("nonempty") {
            return Err(Error::InvalidRing("maximal ideal is not nilpotent".into()));
        }
        powers.push(next);
    }
    // powers = [R, m, ..., m^(t+1) = 0]
    let t = (powers.len() - 2) as u32;
    let profile = (1..=t as usize)
        .map(|k| vdim(r, &powers[k], &powers[k + 1], &m, q))
        .collect::<Result<Vec<_>>>()?;
    let socle = annihilator(r, &m)?;
    let socle_dim = vdim(r, &socle, &zero_ideal(r), &m, q)?;
    c.is_field = m.is_zero();
    c.is_gorenstein = Some(socle_dim == 1);
    c.is_spir = lattice.ideals().iter().all(|i| powers.contains(i));
    c.m = Some(m);
    c.t = Some(t);
    c.residue_size = Some(q);
    c.vdim_profile = Some(profile);
    c.socle = Some(socle);
    c.socle_dim = Some(socle_dim);
    c.m_powers = powers;
    Ok(c)
}

/// The unique minimal nonzero proper ideal, if there is exactly one.
pub fn unique_minimal_ideal(lattice: &IdealLattice) -> Option<Ideal> {
    let ideals = lattice.ideals();
    let candidates = &ideals[1..ideals.len().saturating_sub(1).max(1)];
    let minimal: Vec<&Ideal> = candidates
        .iter()
        .filter(|i| !candidates.iter().any(|j| j.len() < i.len() && j.is_subset(i)))
        .collect();
    match minimal.as_slice() {
        [only] => Some((*only).clone()),
        _ => None,
    }
}
