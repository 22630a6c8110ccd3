//! Finite-grid sampling: classify every point of the `1/q`-grid of the
//! half-open cube into its class and tally multiplicities.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use num_traits::{Signed, Zero};

use crate::conic::{reduce_grid_point, ClassVector};
use crate::cycles::{FundamentalCycle, SpanningTree};
use crate::error::FrobeniusError;
use crate::poset::HasseHat;
use crate::rat::{Int, Rat};

/// Class multiplicities over the `q^d` grid points.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FrobeniusTally {
    pub q: u32,
    pub dim: usize,
    pub counts: BTreeMap<ClassVector, u64>,
}

impl FrobeniusTally {
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn grid_size(&self) -> u64 {
        (self.q as u64).pow(self.dim as u32)
    }

    /// Normalized frequency of one class.
    pub fn frequency(&self, class: &ClassVector) -> Rat {
        let count = self.counts.get(class).copied().unwrap_or(0);
        Rat::new(Int::from(count), Int::from(self.grid_size()))
    }
}

/// Scans the grid `{0, -1/q, .., -(q-1)/q}^d` and classifies each point by
/// the ceilings of its band expressions. The half-open grid matches the
/// half-open cells, so no point is ever double counted.
pub fn frobenius_tally(
    hat: &HasseHat,
    tree: &SpanningTree,
    cycles: &[FundamentalCycle],
    q: u32,
    budget: u64,
) -> Result<FrobeniusTally, FrobeniusError> {
    assert!(q >= 1);
    let d = hat.dim();
    let needed = (q as u128).pow(d as u32);
    if needed > budget as u128 {
        return Err(FrobeniusError::BudgetExceeded { needed, budget });
    }
    let mut counts: BTreeMap<ClassVector, u64> = BTreeMap::new();
    let mut k = alloc::vec![0u32; d];
    loop {
        let class = reduce_grid_point(&k, q, cycles, tree);
        *counts.entry(class).or_insert(0) += 1;
        // Mixed-radix increment.
        let mut pos = 0;
        loop {
            if pos == d {
                return Ok(FrobeniusTally {
                    q,
                    dim: d,
                    counts,
                });
            }
            k[pos] += 1;
            if k[pos] < q {
                break;
            }
            k[pos] = 0;
            pos += 1;
        }
    }
}

/// Convergence diagnostics of a tally sequence against exact values.
#[derive(Clone, Debug)]
pub struct ConvergenceReport {
    pub qs: Vec<u32>,
    /// Per class (sorted): deviation `|count/q^d - s|` for each tally.
    pub per_class: Vec<(ClassVector, Vec<Rat>)>,
    /// Largest deviation over classes, per tally.
    pub max_deviation: Vec<Rat>,
    /// Classes with no sample yet, per tally.
    pub missing: Vec<Vec<ClassVector>>,
}

/// Compares tallies at several grids against exact per-class values.
pub fn convergence_report(
    tallies: &[FrobeniusTally],
    exact: &BTreeMap<ClassVector, Rat>,
) -> ConvergenceReport {
    let qs: Vec<u32> = tallies.iter().map(|t| t.q).collect();
    let mut per_class = Vec::new();
    for (class, s) in exact {
        let devs: Vec<Rat> = tallies
            .iter()
            .map(|t| (t.frequency(class) - s).abs())
            .collect();
        per_class.push((class.clone(), devs));
    }
    let max_deviation: Vec<Rat> = (0..tallies.len())
        .map(|i| {
            per_class
                .iter()
                .map(|(_, devs)| devs[i].clone())
                .max()
                .unwrap_or_else(Rat::zero)
        })
        .collect();
    let missing: Vec<Vec<ClassVector>> = tallies
        .iter()
        .map(|t| {
            exact
                .keys()
                .filter(|c| !t.counts.contains_key(*c))
                .cloned()
                .collect()
        })
        .collect();
    ConvergenceReport {
        qs,
        per_class,
        max_deviation,
        missing,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cycles::{choose_spanning_tree, fundamental_cycles};
    use crate::fixtures;
    use crate::poset::build_hat;
    use crate::rat::rat_int;

    #[test]
    fn single_point_grid_sees_only_the_ring_class() {
        let hat = build_hat(&fixtures::n_shaped());
        let tree = choose_spanning_tree(&hat, None).unwrap();
        let cycles = fundamental_cycles(&hat, &tree);
        let tally = frobenius_tally(&hat, &tree, &cycles, 1, 1_000).unwrap();
        assert_eq!(tally.counts.len(), 1);
        assert_eq!(
            tally.counts.get(&ClassVector(alloc::vec![0, 0])),
            Some(&1u64)
        );
    }

    #[test]
    fn tallies_partition_the_grid() {
        for seed in 0..10u64 {
            let p = fixtures::random_poset(seed, 5);
            let hat = build_hat(&p);
            let tree = choose_spanning_tree(&hat, None).unwrap();
            let cycles = fundamental_cycles(&hat, &tree);
            for q in [1u32, 2, 3] {
                let tally = frobenius_tally(&hat, &tree, &cycles, q, 1_000_000).unwrap();
                assert_eq!(tally.total(), tally.grid_size(), "seed {seed} q {q}");
            }
        }
    }

    #[test]
    fn budget_is_enforced() {
        let hat = build_hat(&fixtures::n_shaped());
        let tree = choose_spanning_tree(&hat, None).unwrap();
        let cycles = fundamental_cycles(&hat, &tree);
        assert!(matches!(
            frobenius_tally(&hat, &tree, &cycles, 100, 1_000),
            Err(FrobeniusError::BudgetExceeded { .. })
        ));
    }

    #[test]
    fn chain_grid_is_a_single_class() {
        let hat = build_hat(&fixtures::chain(2));
        let tree = choose_spanning_tree(&hat, None).unwrap();
        let cycles = fundamental_cycles(&hat, &tree);
        let tally = frobenius_tally(&hat, &tree, &cycles, 5, 1_000_000).unwrap();
        assert_eq!(tally.counts.len(), 1);
        let mut exact = BTreeMap::new();
        exact.insert(ClassVector(alloc::vec![]), rat_int(1));
        let report = convergence_report(&[tally], &exact);
        assert_eq!(report.max_deviation, alloc::vec![rat_int(0)]);
        assert!(report.missing[0].is_empty());
    }
}
