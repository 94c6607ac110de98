mod common;

use std::collections::BTreeSet;

use annigraph::{
    all_ideals, annihilating_ideals, annihilator, build_ag, build_zero_divisor_graph, classify,
    euler_lower_bound, genus_bounds, genus_exact, ideal_intersection, ideal_product, ideal_sum, is_planar,
    quotient_ring, validate_ring, verify_embedding, Budget, FiniteRing, GenusStatus, RingSpec, SimpleGraph,
};
use proptest::prelude::*;

use common::{
    brute_force_genus, closed_subset_ideals, oracle_class, pairwise_ag, rotation_count, subgroup_ideals,
};

fn ring_spec() -> impl Strategy<Value = RingSpec> {
    let zn = (2u64..=40).prop_map(RingSpec::Zn);
    let poly = (
        prop_oneof![Just(2u64), Just(3u64)],
        prop::collection::vec(0u64..3, 1..=3),
    )
        .prop_map(|(p, tail)| {
            let mut coeffs = vec![1];
            coeffs.extend(tail.into_iter().map(|c| c % p));
            RingSpec::PolyQ { p, coeffs }
        });
    let prod = (2u64..=6, 2u64..=6)
        .prop_map(|(a, b)| RingSpec::Prod(Box::new(RingSpec::Zn(a)), Box::new(RingSpec::Zn(b))));
    let cat = prop::sample::select(vec!["f2xy_x2y2", "f2xy_x2xyy2", "f4", "f9", "f3x_x2", "f2x_x3"])
        .prop_map(|s| RingSpec::Cat(s.to_string()));
    prop_oneof![zn, poly, prod, cat]
}

fn build(spec: &RingSpec) -> FiniteRing {
    spec.build().expect("strategy yields buildable specs")
}

fn graph(max_n: usize) -> impl Strategy<Value = SimpleGraph> {
    (1..=max_n)
        .prop_flat_map(|n| (Just(n), prop::collection::vec(any::<bool>(), n * (n - 1) / 2)))
        .prop_map(|(n, bits)| {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let edges: Vec<(usize, usize)> = pairs.zip(bits).filter(|(_, b)| *b).map(|(e, _)| e).collect();
            SimpleGraph::from_edges(n, &edges).expect("valid edges")
        })
}

fn lattice_lists(r: &FiniteRing) -> Vec<Vec<usize>> {
    all_ideals(r)
        .unwrap()
        .ideals()
        .iter()
        .map(|i| i.to_vec())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn spec_display_round_trips(spec in ring_spec()) {
        prop_assert_eq!(RingSpec::parse(&spec.to_string()).unwrap(), spec);
    }

    #[test]
    fn ideals_match_subgroup_oracle(spec in ring_spec()) {
        let r = build(&spec);
        prop_assert_eq!(lattice_lists(&r), subgroup_ideals(&r));
    }

    #[test]
    fn ideals_match_closed_subset_oracle(n in 2u64..=16) {
        let r = build(&RingSpec::Zn(n));
        prop_assert_eq!(lattice_lists(&r), closed_subset_ideals(&r));
    }

    #[test]
    fn lattice_is_closed(spec in ring_spec()) {
        let r = build(&spec);
        let lattice = all_ideals(&r).unwrap();
        let ideals = lattice.ideals();
        prop_assert!(ideals[0].is_zero());
        prop_assert_eq!(ideals.last().unwrap().len(), r.size());
        for i in ideals {
            let ann = annihilator(&r, i).unwrap();
            prop_assert!(lattice.index_of(&ann).is_some());
            prop_assert!(ideal_product(&r, i, &ann).unwrap().is_zero());
            for j in ideals {
                let s = ideal_sum(&r, i, j).unwrap();
                let m = ideal_intersection(i, j).unwrap();
                let p = ideal_product(&r, i, j).unwrap();
                prop_assert!(lattice.index_of(&s).is_some());
                prop_assert!(lattice.index_of(&m).is_some());
                prop_assert!(p.is_subset(&m));
                prop_assert!(i.is_subset(&s) && m.is_subset(i));
            }
        }
    }

    #[test]
    fn ag_matches_pairwise_oracle(spec in ring_spec()) {
        let r = build(&spec);
        let lattice = all_ideals(&r).unwrap();
        let g = build_ag(&r, &lattice).unwrap();
        let members: Vec<Vec<usize>> = annihilating_ideals(&r, &lattice).iter().map(|i| i.to_vec()).collect();
        let edges: BTreeSet<(Vec<usize>, Vec<usize>)> = g
            .edges()
            .into_iter()
            .map(|(u, v)| {
                let (a, b) = (members[u].clone(), members[v].clone());
                if a < b { (a, b) } else { (b, a) }
            })
            .collect();
        let (ov, oe) = pairwise_ag(&r, &subgroup_ideals(&r));
        prop_assert_eq!(members.into_iter().collect::<BTreeSet<_>>(), ov);
        prop_assert_eq!(edges, oe);
    }

    #[test]
    fn classification_matches_oracle(spec in ring_spec()) {
        let r = build(&spec);
        let c = classify(&r, &all_ideals(&r).unwrap()).unwrap();
        let o = oracle_class(&r, &subgroup_ideals(&r));
        prop_assert_eq!(c.ideal_count, o.ideal_count);
        prop_assert_eq!(c.is_local, o.is_local);
        prop_assert_eq!(c.is_spir, o.is_local && o.is_spir);
        prop_assert_eq!(c.is_gorenstein, o.is_gorenstein);
        prop_assert_eq!(c.socle_dim, o.socle_dim);
        prop_assert_eq!(c.vdim_profile, o.vdim_profile);
    }

    #[test]
    fn quotients_are_rings(spec in ring_spec(), pick in any::<prop::sample::Index>()) {
        let r = build(&spec);
        let lattice = all_ideals(&r).unwrap();
        let proper: Vec<_> = lattice.ideals().iter().filter(|i| i.len() < r.size()).collect();
        let i = proper[pick.index(proper.len())];
        let q = quotient_ring(&r, i).unwrap();
        prop_assert_eq!(q.size() * i.len(), r.size());
        prop_assert!(validate_ring(&q).is_pass());
    }

    #[test]
    fn zero_divisor_graph_of_zn(n in 2usize..=60) {
        let r = build(&RingSpec::Zn(n as u64));
        let g = build_zero_divisor_graph(&r);
        // labels are the residues
        let vals: Vec<usize> = g.labels().iter().map(|l| l.parse().unwrap()).collect();
        let expected: Vec<usize> = (1..n).filter(|&x| (1..n).any(|y| x * y % n == 0)).collect();
        let mut sorted = vals.clone();
        sorted.sort_unstable();
        prop_assert_eq!(sorted, expected);
        for a in 0..vals.len() {
            for b in a + 1..vals.len() {
                prop_assert_eq!(g.has_edge(a, b), (vals[a] * vals[b]).is_multiple_of(n));
            }
        }
    }

    #[test]
    fn genus_matches_brute_force(g in graph(7)) {
        prop_assume!(rotation_count(&g) <= 20_000);
        let res = genus_exact(&g, &Budget::default());
        prop_assert_eq!(res.exact(), Some(brute_force_genus(&g)));
    }

    #[test]
    fn genus_is_relabeling_invariant(g in graph(9), seed in any::<u64>()) {
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        let perm = common::random_permutation(&mut rng, g.vertex_count());
        let a = genus_exact(&g, &Budget::default());
        let b = genus_exact(&g.permuted(&perm), &Budget::default());
        prop_assert_eq!(a.exact(), b.exact());
        prop_assert!(a.exact().is_some());
    }

    #[test]
    fn genus_bounds_bracket_exact(g in graph(9)) {
        let res = genus_exact(&g, &Budget::default());
        let gamma = res.exact().unwrap();
        let bounds = genus_bounds(&g);
        prop_assert_eq!(bounds.status == GenusStatus::Exact, bounds.lower == bounds.upper.unwrap());
        prop_assert!(euler_lower_bound(&g) <= gamma);
        prop_assert!(bounds.lower <= gamma && gamma <= bounds.upper.unwrap());
        let w = bounds.witness.as_ref().unwrap();
        prop_assert_eq!(verify_embedding(&g, w).unwrap(), bounds.upper.unwrap());
        prop_assert_eq!(verify_embedding(&g, res.witness.as_ref().unwrap()).unwrap(), gamma);
        prop_assert_eq!(is_planar(&g), gamma == 0);
    }
}
