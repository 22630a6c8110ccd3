//! Cross-method suite: the descent count and the triangulated volume must
//! agree exactly on every class of every fixture, their totals must tile the
//! cube, and graded fixtures must show the negation symmetry.

mod common;

use std::collections::BTreeSet;

use hibi_core::alcove::fsig_descent_with_witnesses;
use hibi_core::fixtures;
use hibi_core::perm::complement;
use hibi_core::rat::{rat_int, rat_sum};
use hibi_core::{is_pure, Setup};

const VOL_LIMIT: usize = 8;
const DES_LIMIT: usize = 10;

#[test]
fn descent_equals_volume_on_named_fixtures() {
    for (name, setup, _) in common::named_fixtures() {
        for class in &setup.classes {
            let by_volume = setup.fsig_volume(class, VOL_LIMIT).unwrap();
            let by_descent = setup.fsig_descent(class, DES_LIMIT).unwrap();
            assert_eq!(by_volume, by_descent, "{name} class {class}");
        }
    }
}

#[test]
fn signatures_sum_to_one_on_named_fixtures() {
    for (name, setup, _) in common::named_fixtures() {
        let by_descent: Vec<_> = setup
            .classes
            .iter()
            .map(|c| setup.fsig_descent(c, DES_LIMIT).unwrap())
            .collect();
        assert_eq!(rat_sum(by_descent.iter()), rat_int(1), "{name} descent sum");
        let by_volume: Vec<_> = setup
            .classes
            .iter()
            .map(|c| setup.fsig_volume(c, VOL_LIMIT).unwrap())
            .collect();
        assert_eq!(rat_sum(by_volume.iter()), rat_int(1), "{name} volume sum");
    }
}

#[test]
fn descent_equals_volume_on_random_posets() {
    let mut ran = 0;
    for seed in 0..14u64 {
        let poset = fixtures::random_poset(seed, 6);
        if poset.size() + 1 > 7 {
            continue;
        }
        let setup = Setup::new(poset, None).unwrap();
        let mut total = rat_int(0);
        for class in &setup.classes {
            let by_volume = setup.fsig_volume(class, VOL_LIMIT).unwrap();
            let by_descent = setup.fsig_descent(class, DES_LIMIT).unwrap();
            assert_eq!(by_volume, by_descent, "seed {seed} class {class}");
            total += by_descent;
        }
        assert_eq!(total, rat_int(1), "seed {seed} partition");
        ran += 1;
    }
    assert!(ran >= 10, "only {ran} random posets exercised");
}

#[test]
fn graded_fixtures_have_negation_symmetry() {
    for (name, setup, pure) in common::named_fixtures() {
        if !pure {
            continue;
        }
        assert!(is_pure(&setup.poset), "{name} marked graded");
        for class in &setup.classes {
            let neg = class.negated();
            assert!(setup.classes.contains(&neg), "{name}: {class} vs {neg}");
            assert_eq!(
                setup.fsig_descent(class, DES_LIMIT).unwrap(),
                setup.fsig_descent(&neg, DES_LIMIT).unwrap(),
                "{name} class {class}"
            );
        }
    }
}

#[test]
fn complement_involution_swaps_witness_sets() {
    for (name, setup, pure) in common::named_fixtures() {
        if !pure || setup.dim() > 7 {
            continue;
        }
        for class in &setup.classes {
            let neg = class.negated();
            let w_pos = fsig_descent_with_witnesses(
                &setup.hat,
                &setup.tree,
                &setup.cell(class),
                &setup.path,
            )
            .unwrap()
            .witness_union();
            let w_neg = fsig_descent_with_witnesses(
                &setup.hat,
                &setup.tree,
                &setup.cell(&neg),
                &setup.path,
            )
            .unwrap()
            .witness_union();
            let mapped: BTreeSet<Vec<u8>> = w_pos.iter().map(|w| complement(w)).collect();
            assert_eq!(mapped, w_neg, "{name} class {class}");
        }
    }
}

#[test]
fn zigzag_volume_values_match_descent_values_and_diagnostics() {
    let setup = common::zigzag();
    let res = setup
        .fsig_volume_result(
            &hibi_core::ClassVector(vec![2, 1]),
            VOL_LIMIT,
        )
        .unwrap();
    assert_eq!(res.value, hibi_core::rat::rat(1, 120));
    assert!(res.vertex_count > 0);
    assert!(res.simplex_count > 0);
}
