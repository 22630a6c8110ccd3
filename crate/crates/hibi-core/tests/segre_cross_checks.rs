//! Chain-product closed forms against the general engine and the
//! triangulation oracle.

mod common;

use hibi_core::rat::{rat_int, Rat};
use hibi_core::segre::{
    fsig_segre_2var, fsig_segre_theorem, fsig_segre_two_rings, hypersimplex_polytope,
    hypersimplex_volume_descent, SegreSpec,
};
use hibi_core::volume::volume;
use hibi_core::ClassVector;

const VOL_LIMIT: usize = 8;
const DES_LIMIT: usize = 10;

#[test]
fn all_ones_products_match_closed_forms() {
    for t in 2..=4usize {
        let setup = common::segre(&vec![1u32; t]);
        assert_eq!(setup.dim(), t + 1);
        for class in &setup.classes {
            let closed = fsig_segre_2var(t, &class.0)
                .unwrap_or_else(|| panic!("class {class} outside closed-form region"));
            let engine = setup.fsig_descent(class, DES_LIMIT).unwrap();
            assert_eq!(closed, engine, "t = {t}, class {class}");
            let vol = setup.fsig_volume(class, VOL_LIMIT).unwrap();
            assert_eq!(closed, vol, "t = {t}, class {class} (volume)");
        }
        // The closed forms enumerate exactly the engine's class list.
        let spec = SegreSpec::new(&vec![1u32; t]).unwrap();
        for class in &setup.classes {
            assert!(fsig_segre_theorem(&spec, &class.0).is_some());
        }
    }
}

#[test]
fn two_chain_products_match_hypersimplex_values() {
    for (r, s) in [(1u32, 1u32), (1, 2), (2, 2)] {
        let setup = common::segre(&[r, s]);
        let expect_classes: Vec<ClassVector> = (-(s as i64)..=(r as i64))
            .map(|c| ClassVector(vec![c]))
            .collect();
        assert_eq!(setup.classes, expect_classes, "(r,s)=({r},{s})");
        for class in &setup.classes {
            let c = class.0[0];
            let closed = fsig_segre_two_rings(r, s, c).unwrap();
            let engine = setup.fsig_descent(class, DES_LIMIT).unwrap();
            let vol = setup.fsig_volume(class, VOL_LIMIT).unwrap();
            assert_eq!(closed, engine, "(r,s,c)=({r},{s},{c})");
            assert_eq!(closed, vol, "(r,s,c)=({r},{s},{c}) volume");
            // The slice itself triangulates to the same value.
            let d = (r + s + 1) as usize;
            let slice = hypersimplex_polytope(c + s as i64 + 1, d + 1);
            assert_eq!(volume(&slice).unwrap().value, closed);
        }
    }
}

#[test]
fn theorem_count_matches_engine_on_chain_products() {
    for sizes in [
        vec![1u32, 1],
        vec![1, 2],
        vec![2, 2],
        vec![1, 1, 1],
        vec![2, 1, 1],
        vec![1, 2, 1],
        vec![2, 2, 2],
        vec![1, 1, 1, 1],
        vec![3, 2],
        vec![1, 1, 2, 2],
    ] {
        let spec = SegreSpec::new(&sizes).unwrap();
        if spec.dim() > 8 {
            continue;
        }
        let setup = common::segre(&sizes);
        for class in &setup.classes {
            let theorem = fsig_segre_theorem(&spec, &class.0)
                .unwrap_or_else(|| panic!("engine class {class} rejected by the count"));
            let engine = setup.fsig_descent(class, DES_LIMIT).unwrap();
            assert_eq!(theorem, engine, "sizes {sizes:?} class {class}");
        }
        // And the count rejects non-classes.
        let t = sizes.len();
        let outside = vec![sizes[0] as i64 + 1; t - 1];
        assert_eq!(fsig_segre_theorem(&spec, &outside), None);
    }
}

#[test]
fn hypersimplex_suite_descent_vs_triangulation() {
    for d in 2..=6usize {
        let mut total = rat_int(0);
        for k in 0..=d as i64 {
            let by_descent = hypersimplex_volume_descent(k, d);
            let by_triangulation = volume(&hypersimplex_polytope(k, d)).unwrap().value;
            assert_eq!(by_descent, by_triangulation, "d = {d}, k = {k}");
            total += by_descent;
        }
        assert_eq!(total, rat_int(1), "slices tile the band region, d = {d}");
    }
}

#[test]
fn proof_functional_bounds_on_the_shifted_cell() {
    // The shifted two-chain cell in coordinates (X11, X12, X21, X22, X1),
    // bottom vertex pinned at zero, for sizes (2, 2) and class 0; the
    // cross-chain functional X11 - X22 ranges over [-2, 1].
    use hibi_core::rat::rat_int as ri;
    use hibi_core::volume::{coordinate_bounds, HPolytope};
    let rows: Vec<(Vec<i64>, i64)> = vec![
        // 0 <= X21 <= 1
        (vec![0, 0, 1, 0, 0], 1),
        (vec![0, 0, -1, 0, 0], 0),
        // 0 <= X12 - X11 <= 1, 0 <= X1 - X12 <= 1
        (vec![-1, 1, 0, 0, 0], 1),
        (vec![1, -1, 0, 0, 0], 0),
        (vec![0, -1, 0, 0, 1], 1),
        (vec![0, 1, 0, 0, -1], 0),
        // 0 <= X22 - X21 <= 1, 0 <= X1 - X22 <= 1
        (vec![0, 0, -1, 1, 0], 1),
        (vec![0, 0, 1, -1, 0], 0),
        (vec![0, 0, 0, -1, 1], 1),
        (vec![0, 0, 0, 1, -1], 0),
        // band: s - r + c <= X11 <= s - r + c + 1 with r = s = 2, c = 0
        (vec![1, 0, 0, 0, 0], 1),
        (vec![-1, 0, 0, 0, 0], 0),
    ];
    let p = HPolytope::from_int_rows(5, &rows);
    let f = vec![ri(1), ri(0), ri(0), ri(-1), ri(0)];
    let (lo, hi) = coordinate_bounds(&p, &f).unwrap();
    assert_eq!((lo, hi), (ri(-2), ri(1)));
}

#[test]
fn engine_region_matches_printed_inequalities() {
    // Chain product with sizes (2, 1, 3): the region is cut by
    // -r_t <= z_i <= r_i and -r_j <= z_i - z_j <= r_i.
    let sizes = [2u32, 1, 3];
    let setup = common::segre(&sizes);
    let r = [2i64, 1, 3];
    let t = sizes.len();
    let inside = |z: &[i64]| -> bool {
        for i in 0..t - 1 {
            if z[i] < -r[t - 1] || z[i] > r[i] {
                return false;
            }
            for j in i + 1..t - 1 {
                if z[i] - z[j] < -r[j] || z[i] - z[j] > r[i] {
                    return false;
                }
            }
        }
        true
    };
    let mut expect = Vec::new();
    for z1 in -4i64..=4 {
        for z2 in -4i64..=4 {
            if inside(&[z1, z2]) {
                expect.push(ClassVector(vec![z1, z2]));
            }
        }
    }
    expect.sort();
    assert_eq!(setup.classes, expect);
}

#[test]
fn two_rings_degenerate_case_is_regular() {
    // Both chains empty is the one-variable ring; the engine sees it as the
    // empty poset and the closed form must agree.
    assert_eq!(fsig_segre_two_rings(0, 0, 0), Some(rat_int(1)));
    let poset = hibi_core::Poset::new::<&str>(&[], &[]).unwrap();
    let setup = hibi_core::Setup::new(poset, None).unwrap();
    let only = &setup.classes[0];
    assert_eq!(setup.fsig_descent(only, DES_LIMIT).unwrap(), rat_int(1));
}

#[test]
fn paper_index_note_mentions_both_conventions() {
    let note = hibi_core::segre::two_rings_index_note(1, 1, 0);
    assert!(note.contains("A(1,3)"));
    assert!(note.contains("A(2,3)"));
}

#[allow(dead_code)]
fn rat_helper(_: Rat) {}
