mod common;

use cartfactor::graph::{parse_graph, DiGraph};
use cartfactor::oracle::{gen_product_instance, scramble, GenParams};
use cartfactor::product::cartesian_product;
use common::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn arbitrary_graph() -> impl Strategy<Value = DiGraph> {
    (1usize..7).prop_flat_map(|n| {
        let pairs = proptest::collection::vec((0..n, 0..n), 0..3 * n);
        let loops = proptest::collection::vec(0..n, 0..n);
        (Just(n), pairs, loops).prop_map(|(n, pairs, mut loops)| {
            let mut arcs: Vec<(usize, usize)> = pairs.into_iter().filter(|(a, b)| a != b).collect();
            arcs.sort_unstable();
            arcs.dedup();
            loops.sort_unstable();
            loops.dedup();
            DiGraph::new(n, arcs, loops).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn text_round_trip(g in arbitrary_graph()) {
        prop_assert_eq!(parse_graph(&g.to_string()).unwrap(), g);
    }

    #[test]
    fn loops_do_not_touch_the_shadow(g in arbitrary_graph()) {
        prop_assert_eq!(g.strip_loops().shadow(), g.shadow());
        let loops: Vec<usize> = g.loops().collect();
        prop_assert_eq!(g.shadow().to_digraph(loops).unwrap(), g);
    }

    #[test]
    fn shadow_identity(seed in any::<u64>()) {
        prop_assert_eq!(shadow_of_product(&small_factors(seed)), Ok(()));
    }

    #[test]
    fn distances_add(seed in any::<u64>()) {
        prop_assert_eq!(distance_formula(&small_factors(seed), seed), Ok(()));
    }

    #[test]
    fn grouping_and_order(seed in any::<u64>()) {
        let f = small_factors(seed);
        prop_assert_eq!(associativity(&f, seed), Ok(()));
        prop_assert_eq!(commutativity(&f, seed), Ok(()));
    }

    #[test]
    fn layers(seed in any::<u64>()) {
        let f = small_factors(seed);
        prop_assert_eq!(layer_convexity(&f, seed), Ok(()));
        prop_assert_eq!(unique_minimizer(&f, seed), Ok(()));
    }

    #[test]
    fn factorization_properties(seed in any::<u64>()) {
        let f = small_factors(seed);
        let (g, _) = cartesian_product(&f).unwrap();
        let g = scramble(&g, &mut ChaCha8Rng::seed_from_u64(seed)).unwrap();
        prop_assert_eq!(round_trip(&g, &f), Ok(()));
        prop_assert_eq!(factor_count_bound(&g), Ok(()));
        prop_assert_eq!(root_invariance(&g, seed), Ok(()));
        prop_assert_eq!(fixpoint_and_levels(&g), Ok(()));
    }

    #[test]
    fn generator_is_deterministic(seed in any::<u64>()) {
        let p = GenParams { factors: 2, seed, loop_probability: 0.3, ..GenParams::default() };
        prop_assert_eq!(gen_product_instance(&p, &bounds()).unwrap(), gen_product_instance(&p, &bounds()).unwrap());
    }
}
