use circumwidth::bounds::{compose_blockwise, thm1_decompose};
use circumwidth::corpus::{block_glued, random_graph, random_two_connected};
use circumwidth::decomp::{forest_closure_decomposition, normalise, validate};
use circumwidth::graph::io::{parse_graph6, to_graph6};
use circumwidth::oracles::{exact_pathwidth, OracleBudget};
use circumwidth::RootedForest;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn forest(parents: Vec<Option<usize>>) -> RootedForest {
    // Parent ids are pulled below the child id, which rules out cycles.
    let fixed = parents.iter().enumerate().map(|(v, p)| p.filter(|_| v > 0).map(|p| p % v)).collect();
    RootedForest::from_parents(fixed).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn graph6_round_trips(seed in any::<u64>(), n in 0usize..30) {
        let g = random_graph(&mut ChaCha8Rng::seed_from_u64(seed), n, 0.3);
        prop_assert_eq!(parse_graph6(&to_graph6(&g)).unwrap(), g);
    }

    #[test]
    fn closure_decomposition_width_is_height(parents in prop::collection::vec(prop::option::weighted(0.9, 0usize..50), 1..50)) {
        let f = forest(parents);
        let d = forest_closure_decomposition(&f);
        prop_assert!(validate(&f.closure(), &d).unwrap().valid);
        prop_assert_eq!(d.width().unwrap(), f.height());
    }

    #[test]
    fn normalise_keeps_width_and_separates_first_bags(seed in any::<u64>(), n in 3usize..12) {
        let g = random_two_connected(&mut ChaCha8Rng::seed_from_u64(seed), n, n / 2);
        let d = thm1_decompose(&g, None).unwrap().decomposition;
        let nd = normalise(&g, &d).unwrap();
        prop_assert!(validate(&g, &nd).unwrap().valid);
        prop_assert_eq!(nd.width().unwrap(), d.width().unwrap());
        let mut firsts: Vec<usize> = nd.first_bags(g.n()).into_iter().flatten().collect();
        let len = firsts.len();
        firsts.sort_unstable();
        firsts.dedup();
        prop_assert_eq!(firsts.len(), len);
    }

    #[test]
    fn constructions_are_never_below_pathwidth(seed in any::<u64>(), n in 3usize..13) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_two_connected(&mut rng, n, n / 3);
        let pw = exact_pathwidth(&g, &OracleBudget::PATHWIDTH).unwrap().width;
        prop_assert!(thm1_decompose(&g, None).unwrap().width() >= pw);
        let glued = block_glued(&mut rng, 14);
        let pw = exact_pathwidth(&glued, &OracleBudget::PATHWIDTH).unwrap().width;
        prop_assert!(compose_blockwise(&glued).unwrap().decomposition.width().unwrap() >= pw);
    }
}
