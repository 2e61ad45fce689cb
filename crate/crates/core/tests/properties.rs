//! Property tests pinning the library against independent oracles.

mod common;

use common::*;
use coverdeal_core::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn spec_from_seed(seed: u64, n_max: usize, force_all_starred: bool) -> HFamilySpec {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_spec(&mut rng, n_max, force_all_starred)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn family_graphs_have_the_predicted_shape(seed in any::<u64>(), all_starred in any::<bool>()) {
        let spec = spec_from_seed(seed, 12, all_starred);
        let g = spec.build_graph().unwrap();
        let m = spec.m();
        let star_total: usize = spec.star_sizes().iter().sum();
        prop_assert_eq!(g.edge_count(), m * (m - 1) / 2 + star_total);
        let edge = edge_ideal(&g);
        prop_assert_eq!(edge.gens().len(), g.edge_count());
        prop_assert!(edge.degrees().into_iter().all(|d| d == 2));
        for (&a, i_j) in spec.clique.iter().zip(spec.star_sizes()) {
            prop_assert_eq!(g.degree(a).unwrap(), m - 1 + i_j);
            for leaf in spec.leaf_set(a).iter() {
                prop_assert_eq!(g.degree(leaf).unwrap(), 1);
            }
        }
    }

    #[test]
    fn chordality_matches_the_exhaustive_oracle(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_graph(&mut rng, 9);
        match chordality(&g) {
            Chordality::Chordal { elimination } => {
                prop_assert!(brute_is_chordal(&g));
                prop_assert_eq!(elimination.len(), g.n());
            }
            Chordality::NotChordal { cycle } => {
                prop_assert!(!brute_is_chordal(&g));
                prop_assert!(is_valid_hole(&g, &cycle));
            }
        }
    }

    #[test]
    fn family_complements_are_chordal(seed in any::<u64>(), all_starred in any::<bool>()) {
        let spec = spec_from_seed(seed, 10, all_starred);
        let complement = spec.build_graph().unwrap().complement();
        prop_assert!(chordality(&complement).is_chordal());
    }

    #[test]
    fn predicted_covers_equal_enumeration(seed in any::<u64>(), all_starred in any::<bool>()) {
        let spec = spec_from_seed(seed, 12, all_starred);
        let g = spec.build_graph().unwrap();
        let enumerated = minimal_covers(&g, DEFAULT_ANTICHAIN_CAP).unwrap();
        let predicted = predicted_covers_h(&spec).unwrap();
        prop_assert_eq!(&predicted, &enumerated);
        prop_assert_eq!(enumerated.covers, brute_minimal_covers(&g));
    }

    #[test]
    fn enumerated_covers_form_an_independent_complement_antichain(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_graph(&mut rng, 9);
        let cc = minimal_covers(&g, DEFAULT_ANTICHAIN_CAP).unwrap();
        for (i, a) in cc.covers.iter().enumerate() {
            for (j, b) in cc.covers.iter().enumerate() {
                prop_assert!(i == j || !a.is_subset_of(b));
            }
            let outside = VertexSet::full(g.n()).difference(a);
            for u in outside.iter() {
                for v in outside.iter() {
                    prop_assert!(!g.has_edge(u, v));
                }
            }
        }
        prop_assert_eq!(cc.covers, brute_minimal_covers(&g));
    }

    #[test]
    fn alpha0_is_m_with_every_star_present(seed in any::<u64>()) {
        let spec = spec_from_seed(seed, 12, true);
        let g = spec.build_graph().unwrap();
        let cc = minimal_covers(&g, DEFAULT_ANTICHAIN_CAP).unwrap();
        prop_assert_eq!(cc.alpha0, spec.m());
        prop_assert_eq!(cc.len(), spec.m() + 1);
    }

    #[test]
    fn the_three_cover_ideal_routes_agree(seed in any::<u64>(), all_starred in any::<bool>()) {
        let spec = spec_from_seed(seed, 12, all_starred);
        let g = spec.build_graph().unwrap();
        let closed = closed_form_cover_ideal_h(&spec).unwrap();
        let enumerated =
            cover_ideal_from_covers(&minimal_covers(&g, DEFAULT_ANTICHAIN_CAP).unwrap(), g.n())
                .unwrap();
        let intersected = cover_ideal_by_intersection(&g, DEFAULT_ANTICHAIN_CAP).unwrap();
        prop_assert!(closed.equal(&enumerated).unwrap());
        prop_assert!(closed.equal(&intersected).unwrap());
        let bytes = serde_json::to_string(&closed).unwrap();
        prop_assert_eq!(&bytes, &serde_json::to_string(&enumerated).unwrap());
        prop_assert_eq!(&bytes, &serde_json::to_string(&intersected).unwrap());
        // every generator is a minimal cover when read as a vertex set
        let expected_count = if spec.all_starred() { spec.m() + 1 } else { spec.m() };
        prop_assert_eq!(closed.gens().len(), expected_count);
    }

    #[test]
    fn family_order_certifies_with_every_colon_a_single_variable(
        seed in any::<u64>(),
        all_starred in any::<bool>(),
    ) {
        let spec = spec_from_seed(seed, 12, all_starred);
        let ideal = closed_form_cover_ideal_h(&spec).unwrap();
        let order = h_family_order(&spec, &ideal).unwrap();
        match verify_linear_quotients(&ideal, &order).unwrap() {
            QuotientCheck::Certified(cert) => {
                prop_assert!(cert.q_values.iter().all(|&q| q == 1));
                prop_assert_eq!(cert.q, 1);
                let shape = betti_from_certificate(&cert, &ideal.degrees());
                prop_assert_eq!(shape.length(), 2);
                prop_assert_eq!(shape.betti[0], 1);
                prop_assert_eq!(shape.betti[1], ideal.gens().len());
            }
            QuotientCheck::Failed { position, witness } => {
                prop_assert!(false, "family order failed at {} with {}", position, witness);
            }
        }
    }

    #[test]
    fn closed_form_invariants_are_consistent(seed in any::<u64>(), all_starred in any::<bool>()) {
        let spec = spec_from_seed(seed, 12, all_starred);
        let g = spec.build_graph().unwrap();
        let edge = edge_ideal_invariants(&spec).unwrap();
        let cover = cover_ideal_invariants(&spec).unwrap();
        let n = spec.n;

        prop_assert_eq!(edge.pd + edge.depth, n);
        prop_assert_eq!(cover.pd + cover.depth, n);
        prop_assert!(edge.dim >= edge.depth);

        let cc = minimal_covers(&g, DEFAULT_ANTICHAIN_CAP).unwrap();
        prop_assert_eq!(edge.dim, n - cc.alpha0);

        let all_single = spec.star_sizes().iter().all(|&s| s == 1);
        prop_assert_eq!(edge.cm, all_single);
        let ideal = closed_form_cover_ideal_h(&spec).unwrap();
        prop_assert_eq!(cover.linear_resolution, ideal.is_equigenerated());
        prop_assert_eq!(cover.linear_resolution, all_single);
        prop_assert!(cover.cm);
        prop_assert_eq!(cover.reg, ideal.max_degree() - 1);

        let h = height_check(&g, DEFAULT_ANTICHAIN_CAP).unwrap();
        prop_assert!(h.agree);
        prop_assert!(unmixedness_check(&cc, DEFAULT_ANTICHAIN_CAP).unwrap());
    }

    #[test]
    fn transversal_duality_gives_back_the_edge_set(seed in any::<u64>()) {
        let spec = spec_from_seed(seed, 12, false);
        let g = spec.build_graph().unwrap();
        let cc = minimal_covers(&g, DEFAULT_ANTICHAIN_CAP).unwrap();
        let transversals = minimal_transversals(&cc.covers, DEFAULT_ANTICHAIN_CAP).unwrap();
        let mut edges: Vec<VertexSet> = g
            .edges()
            .into_iter()
            .map(|(u, v)| VertexSet::from_labels([u, v]))
            .collect();
        edges.sort_unstable();
        prop_assert_eq!(transversals, edges);
    }

    #[test]
    fn colon_matches_the_membership_oracle(gen_bits in prop::collection::vec(1u64..64, 1..5), u_bits in 0u64..64) {
        let gens = gen_bits.iter().map(|&bits| {
            Monomial::from_labels((1..=6).filter(|v| bits >> (v - 1) & 1 == 1))
        });
        let ideal = MonomialIdeal::from_monomials(6, gens).unwrap();
        let u = Monomial::from_labels((1..=6).filter(|v| u_bits >> (v - 1) & 1 == 1));
        let colon = ideal.colon(&u);
        for w_bits in 0u64..64 {
            let w = Monomial::from_labels((1..=6).filter(|v| w_bits >> (v - 1) & 1 == 1));
            prop_assert_eq!(colon.contains(&w), ideal.contains(&w.lcm(&u)));
        }
    }

    #[test]
    fn planner_assignments_follow_real_edges(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_graph(&mut rng, 10);
        let plan = plan_placement(&g, DEFAULT_ANTICHAIN_CAP).unwrap();
        for (&sensor, &leader) in &plan.assignment {
            prop_assert!(g.has_edge(sensor, leader));
            prop_assert!(plan.leaders.contains(leader));
            prop_assert!(!plan.leaders.contains(sensor));
        }
        for alt in &plan.alternatives {
            prop_assert_eq!(alt.len(), plan.cardinality);
        }
        if !g.is_edgeless() {
            let covers = minimal_covers(&g, DEFAULT_ANTICHAIN_CAP).unwrap();
            prop_assert_eq!(plan.cardinality, covers.alpha0);
            prop_assert_eq!(1 + plan.alternatives.len(), covers.minimum_covers().len());
        }
    }
}
