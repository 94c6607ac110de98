//! Finite commutative rings given by Cayley tables, their ideal lattices,
//! annihilating-ideal graphs, and exact orientable genus of small graphs.
//!
//! ```
//! use annigraph::{all_ideals, build_ag, genus_exact, make_zn, Budget};
//!
//! let r = make_zn(12).unwrap();
//! let lattice = all_ideals(&r).unwrap();
//! let ag = build_ag(&r, &lattice).unwrap();
//! assert_eq!(ag.vertex_count(), 4);
//! assert_eq!(genus_exact(&ag, &Budget::default()).exact(), Some(0));
//! ```

pub mod bitset;
pub mod classify;
pub mod error;
pub mod genus;
pub mod graph;
pub mod ideal;
pub mod ring;
pub mod spec;
pub mod verify;

pub use bitset::MemberSet;
pub use classify::{classify, maximal_ideals, unique_minimal_ideal, vdim, RingClassification};
pub use error::{Error, Result};
pub use genus::{
    euler_lower_bound, genus_bounds, genus_exact, genus_formula_bipartite, genus_formula_complete, is_planar,
    verify_embedding, Budget, GenusResult, GenusStatus, RotationSystem,
};
pub use graph::{
    build_ag, build_zero_divisor_graph, complete_bipartite, complete_graph, find_complete_bipartite_subgraph,
    BipartiteSearch, SimpleGraph,
};
pub use ideal::{
    all_ideals, all_ideals_capped, annihilating_ideals, annihilator, ideal_from_members, ideal_intersection,
    ideal_name, ideal_power, ideal_product, ideal_sum, principal_ideal, unit_ideal, zero_ideal, Ideal,
    IdealLattice,
};
pub use ring::{
    make_galois_field, make_poly_quotient, make_product, make_structure_constants, make_zn, quotient_ring,
    validate_ring, validate_ring_with_limit, Axiom, FiniteRing, RingTable, StructureConstants,
    ValidationReport,
};
pub use spec::{builtin_corpus, GraphSpec, RingSpec, Target, BUILTIN_CORPUS};
pub use verify::{match_shape, run_suite, CheckResult, CheckStatus, ShapeKind, Suite, SuiteReport};
