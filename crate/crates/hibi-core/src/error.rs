//! Error types for the library.

use alloc::string::String;
use core::fmt;

/// Rejections raised while validating a poset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PosetError {
    /// An element name occurs more than once.
    DuplicateElement(String),
    /// An element uses one of the reserved names `bot`/`top`, or is empty.
    ReservedName(String),
    /// A cover relation mentions a name that is not an element.
    UnknownElement(String),
    /// A cover relates an element to itself.
    SelfCover(String),
    /// The cover relation contains a directed cycle through the named element.
    CycleDetected(String),
    /// A cover `(lower, upper)` is implied by a longer chain and is therefore
    /// not a cover relation.
    TransitiveCover { lower: String, upper: String },
    /// The same cover pair is listed twice.
    DuplicateCover { lower: String, upper: String },
}

impl fmt::Display for PosetError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PosetError::DuplicateElement(name) => write!(f, "duplicate element {name:?}"),
            PosetError::ReservedName(name) => {
                write!(f, "element name {name:?} is reserved or empty")
            }
            PosetError::UnknownElement(name) => write!(f, "unknown element {name:?} in cover"),
            PosetError::SelfCover(name) => write!(f, "element {name:?} covers itself"),
            PosetError::CycleDetected(name) => {
                write!(f, "cover relations form a cycle through {name:?}")
            }
            PosetError::TransitiveCover { lower, upper } => write!(
                f,
                "cover ({lower:?}, {upper:?}) is transitively redundant"
            ),
            PosetError::DuplicateCover { lower, upper } => {
                write!(f, "cover ({lower:?}, {upper:?}) is listed twice")
            }
        }
    }
}

/// Rejections raised while validating a requested spanning tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TreeError {
    /// The requested edge set does not have exactly `dim` edges.
    WrongSize { expected: usize, got: usize },
    /// The requested edges contain an undirected cycle.
    HasCycle,
    /// The requested edges do not reach every vertex.
    NotSpanning,
    /// A requested edge is not an edge of the graph.
    UnknownEdge(String),
}

impl fmt::Display for TreeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TreeError::WrongSize { expected, got } => {
                write!(f, "spanning tree needs {expected} edges, got {got}")
            }
            TreeError::HasCycle => write!(f, "requested edge set contains a cycle"),
            TreeError::NotSpanning => write!(f, "requested edge set does not span all vertices"),
            TreeError::UnknownEdge(e) => write!(f, "requested edge {e} is not in the graph"),
        }
    }
}

/// Failure modes of conic class enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ConicError {
    /// The circuit-cut region is unbounded as a real polyhedron, which would
    /// contradict finiteness of the class list; treated as a hard error.
    Unbounded,
}

impl fmt::Display for ConicError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ConicError::Unbounded => write!(f, "circuit-cut region is unbounded"),
        }
    }
}

/// Failure modes of exact vertex enumeration and volume computation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VolumeError {
    /// The polyhedron is unbounded (a recession direction exists).
    Unbounded,
    /// The ambient dimension exceeds the configured enumeration limit.
    DimLimit { dim: usize, limit: usize },
    /// The polytope is empty where a nonempty one is required.
    Empty,
}

impl fmt::Display for VolumeError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VolumeError::Unbounded => write!(f, "polyhedron is unbounded"),
            VolumeError::DimLimit { dim, limit } => {
                write!(f, "dimension {dim} exceeds vertex enumeration limit {limit}")
            }
            VolumeError::Empty => write!(f, "polytope is empty"),
        }
    }
}

/// Failure modes of the alcove transform and descent scan.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AlcoveError {
    /// The substitution from cell coordinates to path coordinates was not
    /// unimodular; indicates an internal invariant violation.
    NonUnimodular,
    /// A band expression did not reduce to a difference of two path
    /// coordinates; indicates an internal invariant violation.
    MalformedBand,
    /// The poset dimension exceeds the permutation-scan limit.
    DimLimit { dim: usize, limit: usize },
}

impl fmt::Display for AlcoveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AlcoveError::NonUnimodular => write!(f, "substitution matrix is not unimodular"),
            AlcoveError::MalformedBand => {
                write!(f, "band expression is not a difference of path coordinates")
            }
            AlcoveError::DimLimit { dim, limit } => {
                write!(f, "dimension {dim} exceeds permutation scan limit {limit}")
            }
        }
    }
}

/// Failure modes of the grid tally.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FrobeniusError {
    /// `q^d` exceeds the configured point budget.
    BudgetExceeded { needed: u128, budget: u64 },
}

impl fmt::Display for FrobeniusError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FrobeniusError::BudgetExceeded { needed, budget } => {
                write!(f, "grid scan needs {needed} points, budget is {budget}")
            }
        }
    }
}
