//! Exact combinatorics of poset cones.
//!
//! Given a finite poset, this crate builds the augmented cover graph of the
//! poset with a global bottom and top, enumerates the lattice points of the
//! circuit-cut region (the "conic classes"), and computes the normalized
//! volume of the cell attached to each class by three independent routes:
//!
//! * exact rational volume via vertex enumeration and triangulation,
//! * a descent-statistic count over the symmetric group after transforming
//!   the cell to an alcoved polytope along a Hamiltonian path,
//! * finite-grid sampling that classifies every point of a `1/q`-grid.
//!
//! All arithmetic is exact (arbitrary-precision rationals); the three routes
//! agree identically on every input, which the test suite checks at scale.
//!
//! The crate is `no_std` + `alloc`; parsing, file formats and the CLI live in
//! the companion `hibi-cli` crate.

#![no_std]
#![forbid(unsafe_code)]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod alcove;
pub mod cell;
pub mod conic;
pub mod cycles;
pub mod error;
pub mod fixtures;
pub mod frobenius;
pub mod matrix;
pub mod perm;
pub mod poset;
pub mod rat;
pub mod segre;
pub mod setup;
pub mod volume;

pub use alcove::{
    fsig_descent, fsig_descent_with_witnesses, find_hamiltonian_path, transform_to_alcoved,
    AlcovedForm, HamiltonianPath, PathStep,
};
pub use cell::{build_cell, CellPolytope};
pub use conic::{
    build_conic_region, enumerate_conic_classes, reduce_to_class, ClassVector, ConicRegion,
};
pub use cycles::{
    choose_spanning_tree, enumerate_circuits, fundamental_cycle, Circuit, FundamentalCycle,
    SpanningTree,
};
pub use error::{
    AlcoveError, ConicError, FrobeniusError, PosetError, TreeError, VolumeError,
};
pub use frobenius::{convergence_report, frobenius_tally, ConvergenceReport, FrobeniusTally};
pub use poset::{build_hat, is_pure, EdgeId, HasseHat, Poset, VertexId, BOT, TOP};
pub use rat::{Int, Rat};
pub use segre::{
    build_segre_poset, eulerian, fsig_segre_2var, fsig_segre_theorem, fsig_segre_two_rings,
    hypersimplex_form, hypersimplex_polytope, EulerianTable, SegreSpec,
};
pub use setup::{Setup, SetupError};
pub use volume::{coordinate_bounds, enumerate_vertices, volume, HPolytope, VolumeResult};

/// Default cap on the ambient dimension for vertex enumeration.
pub const DEFAULT_VOLUME_DIM_LIMIT: usize = 8;

/// Default cap on the poset dimension for the permutation scan.
pub const DEFAULT_DESCENT_DIM_LIMIT: usize = 10;

/// Default budget on the number of grid points a tally may visit.
pub const DEFAULT_FROBENIUS_BUDGET: u64 = 100_000_000;
