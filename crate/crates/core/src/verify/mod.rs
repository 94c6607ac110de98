//! Executable checks of structural claims about finite local rings and
//! their annihilating-ideal graphs, run over a ring corpus.
//!
//! Every check is exhaustive over its applicability set within one ring.
//! Statements whose hypotheses need an infinite residue field, a
//! non-Artinian ring, or infinitely many ideals have no finite instance;
//! they are listed in every report as skipped by design, with the failing
//! hypothesis.

mod report;
mod shapes;

use rayon::prelude::*;
use serde::Serialize;

use crate::classify::{classify, unique_minimal_ideal, RingClassification};
use crate::genus::{euler_lower_bound, genus_exact, is_planar, verify_embedding, Budget, GenusStatus};
use crate::graph::{build_ag, build_zero_divisor_graph, SimpleGraph};
use crate::ideal::{
    all_ideals, ideal_intersection, ideal_name, ideal_product, principal_ideal, Ideal, IdealLattice,
};
use crate::ring::{validate_ring, FiniteRing, ValidationReport};
use crate::spec::RingSpec;

pub use report::{SuiteReport, Summary};
pub use shapes::{match_shape, ShapeKind, ShapeMatch};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckStatus {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub check: String,
    pub ring: String,
    pub fingerprint: String,
    pub status: CheckStatus,
    /// Why a check was skipped.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    /// Counterexample for a failure, or what was checked for a pass.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

impl CheckResult {
    fn new(check: &str, status: CheckStatus) -> Self {
        CheckResult {
            check: check.to_string(),
            ring: String::new(),
            fingerprint: String::new(),
            status,
            reason: None,
            witness: None,
        }
    }

    pub fn pass(check: &str, detail: impl Into<String>) -> Self {
        CheckResult {
            witness: Some(detail.into()),
            ..Self::new(check, CheckStatus::Pass)
        }
    }

    pub fn fail(check: &str, witness: impl Into<String>) -> Self {
        CheckResult {
            witness: Some(witness.into()),
            ..Self::new(check, CheckStatus::Fail)
        }
    }

    pub fn skipped(check: &str, reason: impl Into<String>) -> Self {
        CheckResult {
            reason: Some(reason.into()),
            ..Self::new(check, CheckStatus::Skipped)
        }
    }

    fn on(mut self, ring: &str, fingerprint: &str) -> Self {
        self.ring = ring.to_string();
        self.fingerprint = fingerprint.to_string();
        self
    }
}

/// Everything the checks need about one ring.
pub struct RingAnalysis {
    pub ring: FiniteRing,
    pub lattice: IdealLattice,
    pub class: RingClassification,
    principal: Vec<Ideal>,
}

impl RingAnalysis {
    pub fn new(ring: FiniteRing) -> crate::Result<Self> {
        let lattice = all_ideals(&ring)?;
        let class = classify(&ring, &lattice)?;
        let mut principal: Vec<Ideal> = ring.elements().map(|x| principal_ideal(&ring, x)).collect();
        principal.sort_by(|a, b| a.members().canonical_cmp(b.members()));
        principal.dedup();
        Ok(RingAnalysis {
            ring,
            lattice,
            class,
            principal,
        })
    }

    fn name(&self, i: &Ideal) -> String {
        ideal_name(&self.ring, &self.lattice, i)
    }

    fn sub_count(&self, i: &Ideal) -> usize {
        self.lattice.sub_ideals(i).len()
    }

    fn is_principal(&self, i: &Ideal) -> bool {
        self.principal
            .binary_search_by(|p| p.members().canonical_cmp(i.members()))
            .is_ok()
    }

    fn local_nonfield(&self) -> Option<(&Ideal, u32)> {
        let c = &self.class;
        if !c.is_local_nonfield() {
            return None;
        }
        Some((c.m.as_ref()?, c.t?))
    }
}

const NON_LOCAL: &str = "ring is not local";
const FIELD: &str = "ring is a field";
const NOT_GORENSTEIN: &str = "ring is not Gorenstein";

fn pass_count(check: &str, instances: usize) -> CheckResult {
    if instances == 0 {
        CheckResult::pass(check, "vacuous: no applicable instance")
    } else {
        CheckResult::pass(check, format!("instances: {instances}"))
    }
}

fn local_skip(a: &RingAnalysis, check: &str) -> Option<CheckResult> {
    if !a.class.is_local {
        Some(CheckResult::skipped(check, NON_LOCAL))
    } else if a.class.is_field {
        Some(CheckResult::skipped(check, FIELD))
    } else {
        None
    }
}

/// For each `n >= 1` and each nonzero principal `I ⊆ m^(n-1)` with
/// `I ⊄ m^n`: `|sub(I)| = |sub(I ∩ m^n)| + 1`.
pub fn check_subideal_count_lemma(a: &RingAnalysis) -> CheckResult {
    const NAME: &str = "principal_subideal_count";
    if let Some(s) = local_skip(a, NAME) {
        return s;
    }
    let (_, t) = a.local_nonfield().expect("local non-field");
    let mut instances = 0;
    for n in 1..=(t as usize + 1) {
        let above = a.class.m_power(n - 1).expect("local");
        let below = a.class.m_power(n).expect("local");
        for i in a.lattice.ideals() {
            if i.is_zero() || !a.is_principal(i) || !i.is_subset(above) || i.is_subset(below) {
                continue;
            }
            instances += 1;
            let meet = ideal_intersection(i, below).expect("same ring");
            let (lhs, rhs) = (a.sub_count(i), a.sub_count(&meet) + 1);
            if lhs != rhs {
                return CheckResult::fail(
                    NAME,
                    format!("n={n} I={} |sub(I)|={lhs} |sub(I ∩ m^n)|+1={rhs}", a.name(i)),
                );
            }
        }
    }
    pass_count(NAME, instances)
}

/// In a Gorenstein local ring, every principal `I` with `|sub(I)| = 3`
/// satisfies `m^2 I = 0`.
pub fn check_socle_containment_lemma(a: &RingAnalysis) -> CheckResult {
    const NAME: &str = "three_ideal_principal_killed_by_m2";
    if let Some(s) = local_skip(a, NAME) {
        return s;
    }
    if a.class.is_gorenstein != Some(true) {
        return CheckResult::skipped(NAME, NOT_GORENSTEIN);
    }
    let m2 = a.class.m_power(2).expect("local");
    let mut instances = 0;
    for i in a.lattice.ideals() {
        if !a.is_principal(i) || a.sub_count(i) != 3 {
            continue;
        }
        instances += 1;
        let prod = ideal_product(&a.ring, m2, i).expect("same ring");
        if !prod.is_zero() {
            return CheckResult::fail(NAME, format!("I={} m^2·I={}", a.name(i), a.name(&prod)));
        }
    }
    pass_count(NAME, instances)
}

/// For every `n` in `1..=t` with `vdim(m^n / m^(n+1)) = 1`, the nonzero ideals
/// inside `m^n` are exactly `m^n, …, m^t`; for `n = 1` the ring is a SPIR.
pub fn check_spir_chain_lemma(a: &RingAnalysis) -> CheckResult {
    const NAME: &str = "power_chain_below_one_dimensional_step";
    if let Some(s) = local_skip(a, NAME) {
        return s;
    }
    let (_, t) = a.local_nonfield().expect("local non-field");
    let profile = a.class.vdim_profile.as_ref().expect("local");
    let mut instances = 0;
    for n in 1..=t as usize {
        if profile[n - 1] != 1 {
            continue;
        }
        instances += 1;
        let mn = a.class.m_power(n).expect("local");
        let mut got: Vec<&Ideal> = a
            .lattice
            .sub_ideals(mn)
            .into_iter()
            .filter(|i| !i.is_zero())
            .collect();
        let mut want: Vec<&Ideal> = (n..=t as usize)
            .map(|i| a.class.m_power(i).expect("local"))
            .collect();
        got.sort_by(|x, y| x.members().canonical_cmp(y.members()));
        want.sort_by(|x, y| x.members().canonical_cmp(y.members()));
        if got != want {
            let names = |v: &[&Ideal]| v.iter().map(|i| a.name(i)).collect::<Vec<_>>().join(" ");
            return CheckResult::fail(
                NAME,
                format!(
                    "n={n} nonzero ideals in m^n: [{}], powers: [{}]",
                    names(&got),
                    names(&want)
                ),
            );
        }
        if n == 1 && !a.class.is_spir {
            return CheckResult::fail(NAME, "vdim(m/m^2)=1 but ring is not a SPIR");
        }
    }
    pass_count(NAME, instances)
}

/// In a Gorenstein local non-field: `Ann(m) = m^t` and `m^t` is the unique
/// minimal nonzero ideal.
pub fn check_unique_minimal_and_socle(a: &RingAnalysis) -> CheckResult {
    const NAME: &str = "socle_is_unique_minimal_power";
    if let Some(s) = local_skip(a, NAME) {
        return s;
    }
    if a.class.is_gorenstein != Some(true) {
        return CheckResult::skipped(NAME, NOT_GORENSTEIN);
    }
    let (_, t) = a.local_nonfield().expect("local non-field");
    let mt = a.class.m_power(t as usize).expect("local");
    let socle = a.class.socle.as_ref().expect("local");
    if socle != mt {
        return CheckResult::fail(NAME, format!("Ann(m)={} m^t={}", a.name(socle), a.name(mt)));
    }
    match unique_minimal_ideal(&a.lattice) {
        Some(min) if min == *mt => CheckResult::pass(NAME, format!("Ann(m) = m^{t} = {}", a.name(mt))),
        Some(min) => CheckResult::fail(
            NAME,
            format!("unique minimal {} != m^t={}", a.name(&min), a.name(mt)),
        ),
        None => CheckResult::fail(NAME, "no unique minimal ideal"),
    }
}

/// A Gorenstein local ring with `m^2 = 0` has exactly the ideals `0, m, R`.
pub fn check_square_zero_gorenstein(a: &RingAnalysis) -> CheckResult {
    const NAME: &str = "square_zero_gorenstein_has_one_proper_ideal";
    if let Some(s) = local_skip(a, NAME) {
        return s;
    }
    if a.class.is_gorenstein != Some(true) {
        return CheckResult::skipped(NAME, NOT_GORENSTEIN);
    }
    if a.class.t != Some(1) {
        return CheckResult::skipped(NAME, "m^2 != 0");
    }
    if a.lattice.len() == 3 && a.class.is_spir {
        CheckResult::pass(NAME, "ideals are 0, m, R")
    } else {
        CheckResult::fail(NAME, format!("{} ideals", a.lattice.len()))
    }
}

/// `|m| = q^(Σ profile)`; SPIR implies `t + 2` ideals and an all-ones
/// profile; Gorenstein implies the socle is the unique minimal ideal.
pub fn check_classification_consistency(a: &RingAnalysis) -> CheckResult {
    const NAME: &str = "classification_consistency";
    if !a.class.is_local {
        return CheckResult::skipped(NAME, NON_LOCAL);
    }
    let c = &a.class;
    let (m, t, q) = (
        c.m.as_ref().expect("local"),
        c.t.expect("local"),
        c.residue_size.expect("local"),
    );
    let profile = c.vdim_profile.as_ref().expect("local");
    let exponent: u32 = profile.iter().sum();
    if q.checked_pow(exponent) != Some(m.len()) {
        return CheckResult::fail(NAME, format!("|m|={} but q^(Σ profile)={q}^{exponent}", m.len()));
    }
    if c.is_spir && (c.ideal_count != t as usize + 2 || profile.iter().any(|&d| d != 1)) {
        return CheckResult::fail(
            NAME,
            format!("SPIR with {} ideals, t={t}, profile {profile:?}", c.ideal_count),
        );
    }
    if !c.is_field
        && c.is_gorenstein == Some(true)
        && unique_minimal_ideal(&a.lattice).as_ref() != c.socle.as_ref()
    {
        return CheckResult::fail(NAME, "Gorenstein but socle is not the unique minimal ideal");
    }
    CheckResult::pass(NAME, format!("t={t} q={q} profile {profile:?}"))
}

fn genus_detail(g: &SimpleGraph, budget: &Budget, check: &str) -> CheckResult {
    let r = genus_exact(g, budget);
    if r.status != GenusStatus::Exact {
        return CheckResult::skipped(check, format!("budget: {}", r.summary()));
    }
    let genus = r.lower;
    let witness = r.witness.as_ref().expect("exact results carry a witness");
    match verify_embedding(g, witness) {
        Ok(traced) if traced == genus => {}
        Ok(traced) => {
            return CheckResult::fail(
                check,
                format!("witness traces to genus {traced}, reported {genus}"),
            )
        }
        Err(e) => return CheckResult::fail(check, format!("invalid witness: {e}")),
    }
    if euler_lower_bound(g) > genus {
        return CheckResult::fail(
            check,
            format!("Euler bound {} exceeds genus {genus}", euler_lower_bound(g)),
        );
    }
    if is_planar(g) != (genus == 0) {
        return CheckResult::fail(check, format!("planarity test disagrees with genus {genus}"));
    }
    CheckResult::pass(
        check,
        format!(
            "exact {genus} on {} vertices, {} edges",
            g.vertex_count(),
            g.edge_count()
        ),
    )
}

/// Vertex cap for exact genus of zero-divisor graphs in the suite.
pub const ZDG_GENUS_VERTEX_LIMIT: usize = 16;

fn genus_checks(a: &RingAnalysis, ag: &SimpleGraph, budget: &Budget) -> Vec<CheckResult> {
    let mut out = vec![genus_detail(ag, budget, "ag_genus_certified")];
    let zdg = build_zero_divisor_graph(&a.ring);
    out.push(if zdg.vertex_count() > ZDG_GENUS_VERTEX_LIMIT {
        CheckResult::skipped(
            "zdg_genus_certified",
            format!(
                "{} vertices exceeds the limit {ZDG_GENUS_VERTEX_LIMIT}",
                zdg.vertex_count()
            ),
        )
    } else {
        genus_detail(&zdg, budget, "zdg_genus_certified")
    });
    out
}

fn has_profile(c: &RingClassification, t: u32, profile: &[u32]) -> bool {
    c.is_local_nonfield()
        && c.is_gorenstein == Some(true)
        && c.t == Some(t)
        && c.vdim_profile.as_deref() == Some(profile)
}

fn check_t3_degrees(a: &RingAnalysis, ag: &SimpleGraph, budget: &Budget) -> CheckResult {
    const NAME: &str = "finite_analog_t3_profile_2_1_1_degrees";
    if !has_profile(&a.class, 3, &[2, 1, 1]) {
        return CheckResult::skipped(NAME, "needs a Gorenstein local ring with t=3 and profile [2,1,1]");
    }
    let m2 = ag.index_of(&a.name(a.class.m_power(2).expect("local")));
    let m3 = ag.index_of(&a.name(a.class.m_power(3).expect("local")));
    let (Some(m2), Some(m3)) = (m2, m3) else {
        return CheckResult::fail(NAME, "m^2 or m^3 missing from AG");
    };
    let bad = (0..ag.vertex_count()).filter(|&v| v != m2 && v != m3).find(|&v| {
        let d = ag.degree(v);
        d > 3 || (d == 3 && !(ag.has_edge(v, m2) && ag.has_edge(v, m3)))
    });
    if let Some(v) = bad {
        return CheckResult::fail(NAME, format!("{} has degree {}", ag.label(v), ag.degree(v)));
    }
    let genus = genus_exact(ag, budget);
    match genus.exact() {
        Some(0) => CheckResult::pass(NAME, "degrees <= 3 off m^2 and m^3; genus 0"),
        Some(g) => CheckResult::fail(NAME, format!("genus {g}")),
        None => CheckResult::skipped(NAME, format!("budget: {}", genus.summary())),
    }
}

fn shape_checks(a: &RingAnalysis, ag: &SimpleGraph, budget: &Budget) -> Vec<CheckResult> {
    let mut out = Vec::new();

    const STAR: &str = "finite_analog_t2_profile_2_1_star";
    out.push(if has_profile(&a.class, 2, &[2, 1]) {
        let m2 = a.class.m_power(2).expect("local");
        match match_shape(ag, ShapeKind::StarWithMatching) {
            Some(found) if ag.label(found.centers[0]) == a.name(m2) => {
                let genus = genus_exact(ag, budget);
                match genus.exact() {
                    Some(0) => CheckResult::pass(STAR, format!("{}; genus 0", found.describe(ag))),
                    Some(g) => CheckResult::fail(STAR, format!("{}; genus {g}", found.describe(ag))),
                    None => CheckResult::skipped(STAR, format!("budget: {}", genus.summary())),
                }
            }
            Some(found) => CheckResult::fail(STAR, format!("center is not m^2: {}", found.describe(ag))),
            None => CheckResult::fail(
                STAR,
                format!("AG is not a star with matching; edges {:?}", ag.edges()),
            ),
        }
    } else {
        CheckResult::skipped(STAR, "needs a Gorenstein local ring with t=2 and profile [2,1]")
    });

    out.push(check_t3_degrees(a, ag, budget));

    const PLANAR: &str = "shape_match_implies_planar";
    let matches: Vec<ShapeMatch> = ShapeKind::ALL
        .iter()
        .filter_map(|&k| match_shape(ag, k))
        .collect();
    out.push(match matches.first() {
        None => CheckResult::pass(PLANAR, "vacuous: no shape matches"),
        Some(found) if !is_planar(ag) => {
            CheckResult::fail(PLANAR, format!("{} but not planar", found.describe(ag)))
        }
        Some(_) => CheckResult::pass(
            PLANAR,
            matches
                .iter()
                .map(|m| m.kind.name())
                .collect::<Vec<_>>()
                .join(", "),
        ),
    });
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Suite {
    Lemmas,
    Shapes,
    Genus,
    All,
}

impl std::str::FromStr for Suite {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        match s {
            "lemmas" => Ok(Suite::Lemmas),
            "shapes" => Ok(Suite::Shapes),
            "genus" => Ok(Suite::Genus),
            "all" => Ok(Suite::All),
            _ => Err(crate::Error::InvalidArgument(format!(
                "unknown suite {s:?}; expected lemmas, shapes, genus or all"
            ))),
        }
    }
}

impl Suite {
    fn includes(self, other: Suite) -> bool {
        self == Suite::All || self == other
    }
}

/// `(check, failing hypothesis)` for statements with no finite instance.
pub const SKIPPED_BY_DESIGN: &[(&str, &str)] = &[
    (
        "infinitely_many_ideals_t2_branch",
        "residue field R/m must be infinite; every finite ring has a finite residue field and finitely many ideals",
    ),
    (
        "infinitely_many_ideals_t3_branch",
        "residue field R/m must be infinite; every finite ring has a finite residue field and finitely many ideals",
    ),
    (
        "non_artinian_gorenstein_double_star_branch",
        "needs m^n != m^(n+1) for every n; in a finite ring m is nilpotent",
    ),
    (
        "high_nilpotency_one_dimensional_steps",
        "needs an Artinian Gorenstein ring with |R/m| infinite and t >= 5",
    ),
    (
        "vector_space_not_finite_union_of_subspaces",
        "needs a vector space over an infinite field",
    ),
    (
        "noetherian_positive_genus_implies_artinian",
        "needs a Noetherian non-Artinian ring; every finite ring is Artinian",
    ),
];

fn lemma_checks(a: &RingAnalysis) -> Vec<CheckResult> {
    vec![
        check_subideal_count_lemma(a),
        check_socle_containment_lemma(a),
        check_spir_chain_lemma(a),
        check_unique_minimal_and_socle(a),
        check_square_zero_gorenstein(a),
        check_classification_consistency(a),
    ]
}

fn ring_checks(spec: &RingSpec, suite: Suite, budget: &Budget) -> Vec<CheckResult> {
    let label = spec.to_string();
    let ring = match spec.build() {
        Ok(r) => r,
        Err(e) => return vec![CheckResult::fail("ring_construction", e.to_string()).on(&label, "")],
    };
    let fp = ring.fingerprint().to_string();
    match validate_ring(&ring) {
        ValidationReport::Pass => {}
        ValidationReport::Fail { axiom, witness } => {
            return vec![
                CheckResult::fail("ring_axioms", format!("{axiom:?} fails at {witness:?}")).on(&label, &fp),
            ]
        }
        ValidationReport::TooLarge { size, limit } => {
            return vec![CheckResult::skipped(
                "ring_axioms",
                format!("size {size} exceeds the triple-check limit {limit}"),
            )
            .on(&label, &fp)]
        }
    }
    let analysis = match RingAnalysis::new(ring) {
        Ok(a) => a,
        Err(e) => return vec![CheckResult::fail("ring_analysis", e.to_string()).on(&label, &fp)],
    };
    let mut out = vec![CheckResult::pass("ring_axioms", "all axioms hold")];
    if suite.includes(Suite::Lemmas) {
        out.extend(lemma_checks(&analysis));
    }
    if suite.includes(Suite::Shapes) || suite.includes(Suite::Genus) {
        let ag = build_ag(&analysis.ring, &analysis.lattice).expect("lattice of this ring");
        if suite.includes(Suite::Shapes) {
            out.extend(shape_checks(&analysis, &ag, budget));
        }
        if suite.includes(Suite::Genus) {
            out.extend(genus_checks(&analysis, &ag, budget));
        }
    }
    out.into_iter().map(|c| c.on(&label, &fp)).collect()
}

/// Runs the selected checks on every corpus ring (in parallel, reported in
/// corpus order), followed by the skipped-by-design entries.
pub fn run_suite(corpus: &[RingSpec], suite: Suite, budget: &Budget) -> SuiteReport {
    let per_ring: Vec<Vec<CheckResult>> = corpus.par_iter().map(|s| ring_checks(s, suite, budget)).collect();
    let mut results: Vec<CheckResult> = per_ring.into_iter().flatten().collect();
    if suite != Suite::Genus {
        results.extend(
            SKIPPED_BY_DESIGN
                .iter()
                .map(|(check, why)| CheckResult::skipped(check, format!("by design: {why}")).on("*", "")),
        );
    }
    SuiteReport { suite, results }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::make_zn;
    use crate::spec::builtin_corpus;

    fn analysis(spec: &str) -> RingAnalysis {
        RingAnalysis::new(RingSpec::parse(spec).unwrap().build().unwrap()).unwrap()
    }

    #[test]
    fn lemma_checks_on_small_rings() {
        let z16 = analysis("zn:16");
        let r = check_subideal_count_lemma(&z16);
        assert_eq!(r.status, CheckStatus::Pass);
        let f4 = analysis("gf:2:1,1,1");
        assert_eq!(check_subideal_count_lemma(&f4).status, CheckStatus::Skipped);
        let z12 = analysis("zn:12");
        assert_eq!(check_spir_chain_lemma(&z12).reason.as_deref(), Some(NON_LOCAL));
        let z8 = analysis("zn:8");
        assert_eq!(check_unique_minimal_and_socle(&z8).status, CheckStatus::Pass);
        // sub((2)) = {0, (4), (2)} and m^2·(2) = 0
        assert_eq!(
            check_socle_containment_lemma(&z8).witness.as_deref(),
            Some("instances: 1")
        );
    }

    #[test]
    fn socle_containment_on_two_variable_ring() {
        let a = analysis("cat:f2xy_x2y2");
        let r = check_socle_containment_lemma(&a);
        assert_eq!(r.status, CheckStatus::Pass);
        assert_eq!(r.witness.as_deref(), Some("instances: 3"));
        let b = analysis("cat:f2xy_x2xyy2");
        assert_eq!(
            check_unique_minimal_and_socle(&b).reason.as_deref(),
            Some(NOT_GORENSTEIN)
        );
    }

    #[test]
    fn builtin_corpus_passes() {
        let report = run_suite(&builtin_corpus(), Suite::All, &Budget::default());
        let failures: Vec<_> = report
            .results
            .iter()
            .filter(|r| r.status == CheckStatus::Fail)
            .collect();
        assert!(failures.is_empty(), "{failures:#?}");
        assert!(report.passed());
    }

    #[test]
    fn corrupted_ring_reports_witness() {
        let dir = tempfile::tempdir().unwrap();
        let mut table = make_zn(3).unwrap().to_table();
        table.mul[2][2] = 2;
        let path = dir.path().join("bad.json");
        std::fs::write(&path, serde_json::to_string(&table).unwrap()).unwrap();
        let spec = RingSpec::Table(path);
        let report = run_suite(&[spec], Suite::Lemmas, &Budget::default());
        let first = &report.results[0];
        assert_eq!(first.check, "ring_axioms");
        assert_eq!(first.status, CheckStatus::Fail);
        assert!(first.witness.as_deref().unwrap().contains("Distributivity"));
        assert!(!report.passed());
    }

    #[test]
    fn fields_only_corpus_passes() {
        let corpus: Vec<RingSpec> = ["gf:2:1,1,1", "zn:5", "cat:f9"]
            .iter()
            .map(|s| RingSpec::parse(s).unwrap())
            .collect();
        let report = run_suite(&corpus, Suite::All, &Budget::default());
        assert!(report.passed());
        assert!(report
            .results
            .iter()
            .filter(|r| r.ring != "*" && r.check != "ring_axioms")
            .all(|r| r.status != CheckStatus::Fail));
    }

    #[test]
    fn skipped_by_design_entries_are_listed() {
        let report = run_suite(&[], Suite::Lemmas, &Budget::default());
        assert_eq!(report.results.len(), SKIPPED_BY_DESIGN.len());
        assert!(report.results.iter().all(
            |r| r.status == CheckStatus::Skipped && r.reason.as_deref().unwrap().starts_with("by design")
        ));
    }
}
