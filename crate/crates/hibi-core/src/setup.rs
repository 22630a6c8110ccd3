//! One-stop pipeline from a poset to everything the signature computations
//! need: graph, tree, cycles, circuits, region, classes, and path.

use alloc::vec::Vec;
use core::fmt;

use crate::alcove::{find_hamiltonian_path, fsig_descent_with_limit, HamiltonianPath};
use crate::cell::{build_cell, CellPolytope};
use crate::conic::{build_conic_region, enumerate_conic_classes, ClassVector, ConicRegion};
use crate::cycles::{
    choose_spanning_tree, enumerate_circuits, fundamental_cycles, Circuit, FundamentalCycle,
    SpanningTree,
};
use crate::error::{AlcoveError, ConicError, TreeError, VolumeError};
use crate::poset::{build_hat, EdgeId, HasseHat, Poset};
use crate::rat::Rat;
use crate::volume::{volume_with_limit, VolumeResult};

/// Failures while assembling the pipeline.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SetupError {
    Tree(TreeError),
    Conic(ConicError),
}

impl fmt::Display for SetupError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SetupError::Tree(e) => write!(f, "{e}"),
            SetupError::Conic(e) => write!(f, "{e}"),
        }
    }
}

impl From<TreeError> for SetupError {
    fn from(e: TreeError) -> Self {
        SetupError::Tree(e)
    }
}

impl From<ConicError> for SetupError {
    fn from(e: ConicError) -> Self {
        SetupError::Conic(e)
    }
}

/// Everything derived from one poset and one spanning tree.
#[derive(Clone, Debug)]
pub struct Setup {
    pub poset: Poset,
    pub hat: HasseHat,
    pub tree: SpanningTree,
    pub cycles: Vec<FundamentalCycle>,
    pub circuits: Vec<Circuit>,
    pub region: ConicRegion,
    pub classes: Vec<ClassVector>,
    pub path: HamiltonianPath,
}

impl Setup {
    /// Builds the pipeline, using the requested tree edges when given and the
    /// canonical breadth-first tree otherwise.
    pub fn new(poset: Poset, requested_tree: Option<&[EdgeId]>) -> Result<Setup, SetupError> {
        let hat = build_hat(&poset);
        let tree = choose_spanning_tree(&hat, requested_tree)?;
        let cycles = fundamental_cycles(&hat, &tree);
        let circuits = enumerate_circuits(&hat);
        let region = build_conic_region(&hat, &tree, &circuits);
        let classes = enumerate_conic_classes(&region)?;
        let path = find_hamiltonian_path(&hat);
        Ok(Setup {
            poset,
            hat,
            tree,
            cycles,
            circuits,
            region,
            classes,
            path,
        })
    }

    pub fn dim(&self) -> usize {
        self.hat.dim()
    }

    pub fn cell(&self, class: &ClassVector) -> CellPolytope {
        build_cell(&self.tree, &self.cycles, class)
    }

    /// Signature of one class by exact triangulated volume.
    pub fn fsig_volume(&self, class: &ClassVector, limit: usize) -> Result<Rat, VolumeError> {
        self.fsig_volume_result(class, limit).map(|r| r.value)
    }

    pub fn fsig_volume_result(
        &self,
        class: &ClassVector,
        limit: usize,
    ) -> Result<VolumeResult, VolumeError> {
        volume_with_limit(&self.cell(class).to_hpolytope(), limit)
    }

    /// Signature of one class by descent counting.
    pub fn fsig_descent(&self, class: &ClassVector, limit: usize) -> Result<Rat, AlcoveError> {
        fsig_descent_with_limit(&self.hat, &self.tree, &self.cell(class), &self.path, limit)
    }
}
