mod common;

use std::collections::HashSet;

use mapaut::cycle::{cycle_iso, cycle_rotation_generator, LabeledCycle};
use mapaut::degree::{min_rotation, rotate};
use mapaut::labels::LabelStore;
use mapaut::lattice::{brute_grid_subgroup, expand_subgroup, grid_subgroup, CyclicGrid, Snf};
use mapaut::maps::is_automorphism;
use mapaut::oracle::{oracle_aut_elements, oracle_iso_set};
use mapaut::perm::Perm;
use mapaut::pipeline::{aut_plus, iso_oriented};
use proptest::prelude::*;

use common::{oriented_corpus, random_relabeling, rng};

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn min_rotation_is_rotation_invariant(v in prop::collection::vec(0u8..3, 1..12), k in 0usize..12) {
        let k = k % v.len();
        prop_assert_eq!(min_rotation(&v), min_rotation(&rotate(&v, k)));
    }

    #[test]
    fn rotated_cycles_are_isomorphic(v in prop::collection::vec(0u32..3, 1..16), k in 0usize..16) {
        let n = v.len();
        let k = k % n;
        let a = LabeledCycle::new(v.clone());
        let b = LabeledCycle::new((0..n).map(|i| v[(i + n - k) % n]).collect());
        let o = cycle_iso(&a, &b).expect("rotation is an isomorphism");
        prop_assert!((0..n).all(|i| b.labels[(i + o) % n] == a.labels[i]));
        let p = cycle_rotation_generator(&a);
        prop_assert_eq!(n % p, 0);
        prop_assert!((0..n).all(|i| a.labels[(i + p) % n] == a.labels[i]));
    }

    #[test]
    fn grid_subgroup_matches_brute(r in 1usize..7, s in 1usize..7, seed in any::<u64>()) {
        use rand::Rng;
        let mut g = rng(seed);
        let labels: Vec<u32> = (0..r * s).map(|_| g.gen_range(0..2)).collect();
        let grid = CyclicGrid::new(r, s, labels);
        let mut ours = expand_subgroup(r, s, grid_subgroup(&grid));
        ours.sort_unstable();
        ours.dedup();
        prop_assert_eq!(ours, brute_grid_subgroup(&grid));
    }

    #[test]
    fn snf_coordinates_vanish_on_the_lattice(r in 1i64..9, s in 1i64..9, t in 0i64..9, a in -20i64..20, b in -20i64..20) {
        let t = t % r;
        let snf = Snf::of([[r, 0], [-t, s]]);
        prop_assert_eq!(snf.d1 * snf.d2, r * s);
        let p = (a * r - b * t, b * s);
        prop_assert_eq!(snf.coords(p), (0, 0));
    }

    #[test]
    fn aut_plus_is_semiregular_and_matches_oracle(seed in any::<u64>()) {
        let mut store = LabelStore::new();
        let fx = oriented_corpus(1, 8, 40, seed, &mut store).pop().unwrap();
        let m = &fx.map;
        let g = aut_plus(m, &mut store).group;
        let elems = g.element_set();
        for e in &elems {
            prop_assert!(is_automorphism(m, e));
            prop_assert!(e.is_identity() || !e.has_fixed_point());
        }
        let oracle: HashSet<Perm> = oracle_aut_elements(m).into_iter().collect();
        prop_assert_eq!(elems, oracle);
    }

    #[test]
    fn relabeled_copies_are_isomorphic(seed in any::<u64>()) {
        let mut store = LabelStore::new();
        let fx = oriented_corpus(1, 8, 40, seed, &mut store).pop().unwrap();
        let p = random_relabeling(fx.map.n(), &mut rng(seed ^ 1));
        let m2 = fx.map.relabel_darts(&p);
        let w = iso_oriented(&fx.map, &m2, &store).expect("isomorphic");
        prop_assert!(oracle_iso_set(&fx.map, &m2).contains(&w));
        // the witness differs from the relabeling by an automorphism
        let a = p.inverse().compose(&w);
        prop_assert!(is_automorphism(&fx.map, &a));
    }
}
