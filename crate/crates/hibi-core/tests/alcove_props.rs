//! Property tests: the descent count agrees with the triangulation oracle on
//! arbitrary alcoved polytopes, and the pipeline invariants hold on random
//! posets.

use proptest::prelude::*;

use hibi_core::alcove::{descent_scan, AlcovedForm};
use hibi_core::rat::rat;
use hibi_core::volume::volume;
use hibi_core::{fixtures, Setup};

/// Strategy for an alcoved form inside the band region: the unit consecutive
/// bands plus a few random difference constraints with small integer bounds.
fn alcoved_forms() -> impl Strategy<Value = AlcovedForm> {
    (2usize..=4)
        .prop_flat_map(|dim| {
            let extra = proptest::collection::vec(
                (0usize..=dim, 0usize..=dim, -2i64..=3, -2i64..=3),
                0..=3,
            );
            (Just(dim), extra)
        })
        .prop_filter_map("feasible form", |(dim, extra)| {
            let mut raw: Vec<(usize, usize, i64, i64)> =
                (1..=dim).map(|i| (i - 1, i, 0, 1)).collect();
            for (a, b, x, y) in extra {
                if a == b {
                    continue;
                }
                let (i, j) = (a.min(b), a.max(b));
                raw.push((i, j, x.min(y), x.max(y)));
            }
            AlcovedForm::new(dim, &raw)
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn descent_count_matches_triangulation_on_alcoved_forms(form in alcoved_forms()) {
        let by_descent = descent_scan(form.dim, &[form.clone()], 10, false)
            .unwrap()
            .value;
        let by_volume = volume(&form.to_hpolytope()).unwrap().value;
        prop_assert_eq!(by_descent, by_volume);
    }

    #[test]
    fn pipeline_invariants_on_random_posets(seed in 0u64..5000) {
        let poset = fixtures::random_poset(seed, 5);
        let setup = Setup::new(poset, None).unwrap();

        // Every cotree edge closes exactly one cycle through the tree.
        prop_assert_eq!(setup.cycles.len(), setup.tree.cotree_edges().len());

        // Region bounds have the sign pattern of a two-way circuit.
        for row in setup.region.constraints() {
            prop_assert!(row.lo <= 0 && row.hi >= 0);
            prop_assert!(row.coeffs.iter().all(|&a| (-1..=1).contains(&a)));
        }

        // The zero class is conic and the classes are sorted and distinct.
        let zero = hibi_core::ClassVector::zero(setup.region.dim());
        prop_assert!(setup.classes.contains(&zero));
        prop_assert!(setup.classes.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn grid_points_classify_into_their_half_open_cell(seed in 0u64..2000) {
        let poset = fixtures::random_poset(seed, 4);
        let setup = Setup::new(poset, None).unwrap();
        let d = setup.dim();
        let mut rng = fixtures::SplitMix64(seed.wrapping_add(7));
        for _ in 0..8 {
            let y: Vec<_> = (0..d).map(|_| rat(-(rng.below(53) as i64), 53)).collect();
            let class = hibi_core::reduce_to_class(&y, &setup.cycles, &setup.tree);
            let cell = setup.cell(&class);
            prop_assert!(hibi_core::cell::membership(&cell, &y, true));
            // And no other class's half-open cell takes it.
            for other in &setup.classes {
                if other != &class {
                    let other_cell = setup.cell(other);
                    prop_assert!(!hibi_core::cell::membership(&other_cell, &y, true));
                }
            }
        }
    }
}
