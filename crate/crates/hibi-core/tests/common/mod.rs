//! Shared fixture setups for the integration suites.

use hibi_core::fixtures;
use hibi_core::poset::Poset;
use hibi_core::segre::{build_segre_poset, SegreSpec};
use hibi_core::Setup;

/// Builds the pipeline with a tree requested by endpoint-name pairs.
pub fn setup_with_tree(poset: Poset, tree: &[(String, String)]) -> Setup {
    let hat = hibi_core::build_hat(&poset);
    let req: Vec<_> = tree
        .iter()
        .map(|(a, b)| {
            hat.edge_by_names(a, b)
                .unwrap_or_else(|| panic!("edge {a}:{b} not found"))
        })
        .collect();
    Setup::new(poset, Some(&req)).expect("valid fixture tree")
}

/// The zigzag fixture with the distinguished two-chain spanning tree.
pub fn zigzag() -> Setup {
    let tree: Vec<(String, String)> = [
        ("bot", "p1"),
        ("p1", "p2"),
        ("p2", "top"),
        ("bot", "p3"),
        ("p3", "p4"),
    ]
    .iter()
    .map(|&(a, b)| (a.to_string(), b.to_string()))
    .collect();
    setup_with_tree(fixtures::n_shaped(), &tree)
}

/// Chain-product fixture with its distinguished tree.
pub fn segre(sizes: &[u32]) -> Setup {
    let spec = SegreSpec::new(sizes).expect("valid sizes");
    let (poset, tree) = build_segre_poset(&spec);
    setup_with_tree(poset, &tree)
}

/// The named fixtures every cross-method suite runs over, with purity.
pub fn named_fixtures() -> Vec<(&'static str, Setup, bool)> {
    let mut out: Vec<(&'static str, Setup, bool)> = Vec::new();
    out.push(("zigzag", zigzag(), true));
    out.push((
        "zigzag-default-tree",
        Setup::new(fixtures::n_shaped(), None).unwrap(),
        true,
    ));
    out.push(("empty", Setup::new(Poset::new::<&str>(&[], &[]).unwrap(), None).unwrap(), true));
    out.push(("chain-2", Setup::new(fixtures::chain(2), None).unwrap(), true));
    out.push(("chain-3", Setup::new(fixtures::chain(3), None).unwrap(), true));
    out.push(("antichain-2", Setup::new(fixtures::antichain(2), None).unwrap(), true));
    out.push(("antichain-3", Setup::new(fixtures::antichain(3), None).unwrap(), true));
    out.push(("diamond", Setup::new(fixtures::diamond(), None).unwrap(), true));
    out.push(("broken-fence", Setup::new(fixtures::broken_fence(), None).unwrap(), false));
    out.push(("segre-1-2", segre(&[1, 2]), false));
    out.push(("segre-2-2", segre(&[2, 2]), true));
    out.push(("segre-1-1-1", segre(&[1, 1, 1]), true));
    out.push(("segre-2-1-1", segre(&[2, 1, 1]), false));
    out
}
