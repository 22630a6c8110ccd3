//! Named example posets and a deterministic random generator, shared by the
//! self-test command and the test suites.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::poset::Poset;

/// The 4-element zigzag `p1 < p2 > p3 < p4` (the cover graph sketches the
/// letter N). Dimension 5, seven edges, two circuits, nine conic classes.
pub fn n_shaped() -> Poset {
    Poset::new(
        &["p1", "p2", "p3", "p4"],
        &[("p1", "p2"), ("p3", "p2"), ("p3", "p4")],
    )
    .expect("valid fixture")
}

/// A chain of `len` elements (the empty chain gives the one-dimensional ring).
pub fn chain(len: usize) -> Poset {
    let names: Vec<String> = (1..=len).map(|i| format!("c{i}")).collect();
    let covers: Vec<(String, String)> = (1..len)
        .map(|i| (format!("c{i}"), format!("c{}", i + 1)))
        .collect();
    Poset::new(&names, &covers).expect("valid fixture")
}

/// An antichain of `len` pairwise incomparable elements.
pub fn antichain(len: usize) -> Poset {
    let names: Vec<String> = (1..=len).map(|i| format!("a{i}")).collect();
    Poset::new(&names, &[]).expect("valid fixture")
}

/// The diamond `a < b < d`, `a < c < d`.
pub fn diamond() -> Poset {
    Poset::new(
        &["a", "b", "c", "d"],
        &[("a", "b"), ("a", "c"), ("b", "d"), ("c", "d")],
    )
    .expect("valid fixture")
}

/// A chain with one incomparable extra element; the smallest non-pure poset
/// used in the tests.
pub fn broken_fence() -> Poset {
    Poset::new(&["p1", "p2", "p3"], &[("p1", "p2")]).expect("valid fixture")
}

/// SplitMix64, the usual 64-bit mixing sequence; enough randomness for
/// fixture generation and fully deterministic across platforms.
#[derive(Clone, Debug)]
pub struct SplitMix64(pub u64);

impl SplitMix64 {
    pub fn next_u64(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E3779B97F4A7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58476D1CE4E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D049BB133111EB);
        z ^ (z >> 31)
    }

    /// Uniform value in `0..bound` (`bound > 0`).
    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }

    pub fn chance(&mut self, num: u64, den: u64) -> bool {
        self.below(den) < num
    }
}

/// Generates a random poset with at most `max_elements` elements.
///
/// Relations are drawn on an index-ordered DAG and then transitively reduced,
/// so the result always validates. The edge count of the augmented graph is
/// kept moderate (at most `dim + 5`) to keep exact volume work at desk scale.
pub fn random_poset(seed: u64, max_elements: usize) -> Poset {
    let mut rng = SplitMix64(seed.wrapping_mul(0x9E3779B97F4A7C15).wrapping_add(1));
    loop {
        let n = 2 + (rng.below(max_elements.max(3) as u64 - 1) as usize);
        let names: Vec<String> = (1..=n).map(|i| format!("v{i}")).collect();
        let mut rel = alloc::vec![alloc::vec![false; n]; n];
        for j in 1..n {
            for i in 0..j {
                if rng.chance(2, 5) {
                    rel[i][j] = true;
                }
            }
        }
        // Transitive closure (indices already topologically ordered).
        for k in 0..n {
            for i in 0..k {
                if rel[i][k] {
                    for j in k + 1..n {
                        if rel[k][j] {
                            rel[i][j] = true;
                        }
                    }
                }
            }
        }
        // Covers of the closure: related pairs with no element in between.
        let mut covers: Vec<(String, String)> = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                if rel[i][j] && !(0..n).any(|k| rel[i][k] && rel[k][j]) {
                    covers.push((names[i].clone(), names[j].clone()));
                }
            }
        }
        if let Ok(p) = Poset::new(&names, &covers) {
            let hat = crate::poset::build_hat(&p);
            if hat.num_edges() <= hat.dim() + 5 {
                return p;
            }
        }
    }
}
