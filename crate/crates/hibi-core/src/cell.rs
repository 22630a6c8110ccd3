//! The closed cell attached to a conic class: the ambient cube cut by one
//! unit band per cotree edge.

use alloc::vec::Vec;

use num_traits::Zero;

use crate::conic::{band_value, ClassVector};
use crate::cycles::{FundamentalCycle, SpanningTree};
use crate::rat::{Int, Rat};
use crate::volume::{enumerate_vertices_with_limit, HPolytope};

/// One two-sided constraint `lo <= coeffs . y <= hi` with sign coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellBand {
    pub coeffs: Vec<i64>,
    pub lo: i64,
    pub hi: i64,
}

/// The closed cell of a class in the tree coordinates: cube rows `-1 <= y_i
/// <= 0` first, then one unit-width band per cotree edge.
///
/// Closed and half-open readings share this data; the half-open cell uses
/// strict lower bounds, the closure is what volumes are taken over.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CellPolytope {
    dim: usize,
    class: ClassVector,
    bands: Vec<CellBand>,
}

/// Builds the cell of `class`: cube constraints plus, per cotree edge `j`,
/// `c_j - 1 <= (sum over Y-) - (sum over Y+) <= c_j`.
pub fn build_cell(
    tree: &SpanningTree,
    cycles: &[FundamentalCycle],
    class: &ClassVector,
) -> CellPolytope {
    let dim = tree.tree_edges().len();
    debug_assert_eq!(class.len(), cycles.len());
    let mut bands = Vec::with_capacity(dim + cycles.len());
    for i in 0..dim {
        let mut coeffs = alloc::vec![0i64; dim];
        coeffs[i] = 1;
        bands.push(CellBand {
            coeffs,
            lo: -1,
            hi: 0,
        });
    }
    for (cy, &c) in cycles.iter().zip(class.0.iter()) {
        let mut coeffs = alloc::vec![0i64; dim];
        for &e in &cy.y_minus {
            coeffs[tree.slot(e).expect("tree edge")] += 1;
        }
        for &e in &cy.y_plus {
            coeffs[tree.slot(e).expect("tree edge")] -= 1;
        }
        bands.push(CellBand {
            coeffs,
            lo: c - 1,
            hi: c,
        });
    }
    CellPolytope {
        dim,
        class: class.clone(),
        bands,
    }
}

impl CellPolytope {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn class(&self) -> &ClassVector {
        &self.class
    }

    pub fn bands(&self) -> &[CellBand] {
        &self.bands
    }

    /// Band rows beyond the cube, one per cotree edge, in cotree order.
    pub fn cotree_bands(&self) -> &[CellBand] {
        &self.bands[self.dim..]
    }

    /// The closed cell as a halfspace system.
    pub fn to_hpolytope(&self) -> HPolytope {
        let mut p = HPolytope::from_int_rows(self.dim, &[]);
        for band in &self.bands {
            let coeffs: Vec<Rat> = band
                .coeffs
                .iter()
                .map(|&a| Rat::from_integer(Int::from(a)))
                .collect();
            p.push_band(
                &coeffs,
                &Rat::from_integer(Int::from(band.lo)),
                &Rat::from_integer(Int::from(band.hi)),
            );
        }
        p
    }

    /// A rational point strictly inside the cell: the average of its
    /// vertices. `None` when the cell is empty or not full-dimensional.
    pub fn interior_point(&self, limit: usize) -> Option<Vec<Rat>> {
        let verts = enumerate_vertices_with_limit(&self.to_hpolytope(), limit).ok()?;
        if verts.is_empty() {
            return None;
        }
        let n = Rat::from_integer(Int::from(verts.len() as u64));
        let centroid: Vec<Rat> = (0..self.dim)
            .map(|k| {
                verts
                    .iter()
                    .fold(Rat::zero(), |acc, v| acc + &v[k])
                    / &n
            })
            .collect();
        if self.strictly_inside(&centroid) {
            Some(centroid)
        } else {
            None
        }
    }

    fn strictly_inside(&self, y: &[Rat]) -> bool {
        self.bands.iter().all(|band| {
            let v = band_dot(band, y);
            Rat::from_integer(Int::from(band.lo)) < v && v < Rat::from_integer(Int::from(band.hi))
        })
    }
}

fn band_dot(band: &CellBand, y: &[Rat]) -> Rat {
    band.coeffs
        .iter()
        .zip(y.iter())
        .fold(Rat::zero(), |acc, (&a, v)| {
            acc + Rat::from_integer(Int::from(a)) * v
        })
}

/// Membership in a cell. The closed test uses `<=` on both sides; the
/// half-open test uses strict lower bounds and inclusive upper bounds.
pub fn membership(cell: &CellPolytope, y: &[Rat], semiopen: bool) -> bool {
    cell.bands.iter().all(|band| {
        let v = band_dot(band, y);
        let lo = Rat::from_integer(Int::from(band.lo));
        let hi = Rat::from_integer(Int::from(band.hi));
        if semiopen {
            lo < v && v <= hi
        } else {
            lo <= v && v <= hi
        }
    })
}

/// Consistency helper for tests and reports: the band expressions of a cycle
/// list evaluated at `y`.
pub fn band_values(
    cycles: &[FundamentalCycle],
    tree: &SpanningTree,
    y: &[Rat],
) -> Vec<Rat> {
    cycles.iter().map(|cy| band_value(cy, tree, y)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conic::{build_conic_region, enumerate_conic_classes, reduce_to_class};
    use crate::cycles::{choose_spanning_tree, enumerate_circuits, fundamental_cycles};
    use crate::fixtures;
    use crate::poset::build_hat;
    use crate::rat::{rat, rat_int};
    use crate::volume::volume;

    #[test]
    fn chain_cell_is_the_cube() {
        let hat = build_hat(&fixtures::chain(2));
        let tree = choose_spanning_tree(&hat, None).unwrap();
        let cycles = fundamental_cycles(&hat, &tree);
        assert!(cycles.is_empty());
        let cell = build_cell(&tree, &cycles, &ClassVector(alloc::vec![]));
        assert_eq!(cell.bands().len(), 3);
        assert_eq!(volume(&cell.to_hpolytope()).unwrap().value, rat_int(1));
    }

    #[test]
    fn origin_lies_in_the_zero_cell_only() {
        let hat = build_hat(&fixtures::n_shaped());
        let tree = choose_spanning_tree(&hat, None).unwrap();
        let cycles = fundamental_cycles(&hat, &tree);
        let zero_cell = build_cell(&tree, &cycles, &ClassVector(alloc::vec![0, 0]));
        let one_cell = build_cell(&tree, &cycles, &ClassVector(alloc::vec![1, 0]));
        let origin: Vec<Rat> = (0..5).map(|_| rat_int(0)).collect();
        assert!(membership(&zero_cell, &origin, true));
        assert!(!membership(&one_cell, &origin, true));
    }

    #[test]
    fn semiopen_cells_partition_grid_points() {
        // Every point of the 1/2-grid lies in exactly one half-open cell,
        // and that cell is the one the ceiling formula names.
        for p in [fixtures::n_shaped(), fixtures::diamond(), fixtures::broken_fence()] {
            let hat = build_hat(&p);
            let tree = choose_spanning_tree(&hat, None).unwrap();
            let cycles = fundamental_cycles(&hat, &tree);
            let region = build_conic_region(&hat, &tree, &enumerate_circuits(&hat));
            let classes = enumerate_conic_classes(&region).unwrap();
            let cells: Vec<CellPolytope> = classes
                .iter()
                .map(|c| build_cell(&tree, &cycles, c))
                .collect();
            let d = hat.dim();
            let q = 2u32;
            let total = (q as u64).pow(d as u32);
            for idx in 0..total {
                let mut rem = idx;
                let y: Vec<Rat> = (0..d)
                    .map(|_| {
                        let k = (rem % q as u64) as i64;
                        rem /= q as u64;
                        rat(-k, q as i64)
                    })
                    .collect();
                let hits: Vec<usize> = (0..cells.len())
                    .filter(|&i| membership(&cells[i], &y, true))
                    .collect();
                assert_eq!(hits.len(), 1, "grid point in {} cells", hits.len());
                let expect = reduce_to_class(&y, &cycles, &tree);
                assert_eq!(classes[hits[0]], expect);
            }
        }
    }

    #[test]
    fn cells_are_full_dimensional_with_interior_witness() {
        let hat = build_hat(&fixtures::n_shaped());
        let tree = choose_spanning_tree(&hat, None).unwrap();
        let cycles = fundamental_cycles(&hat, &tree);
        let region = build_conic_region(&hat, &tree, &enumerate_circuits(&hat));
        let classes = enumerate_conic_classes(&region).unwrap();
        for c in &classes {
            let cell = build_cell(&tree, &cycles, c);
            let w = cell
                .interior_point(8)
                .unwrap_or_else(|| panic!("no interior witness for {c}"));
            // The witness classifies back to its own class.
            assert_eq!(reduce_to_class(&w, &cycles, &tree), *c);
        }
    }

    #[test]
    fn distinct_cells_have_disjoint_interiors() {
        let hat = build_hat(&fixtures::n_shaped());
        let tree = choose_spanning_tree(&hat, None).unwrap();
        let cycles = fundamental_cycles(&hat, &tree);
        let region = build_conic_region(&hat, &tree, &enumerate_circuits(&hat));
        let classes = enumerate_conic_classes(&region).unwrap();
        let cells: Vec<CellPolytope> = classes
            .iter()
            .map(|c| build_cell(&tree, &cycles, c))
            .collect();
        for (i, cell) in cells.iter().enumerate() {
            let w = cell.interior_point(8).unwrap();
            for (j, other) in cells.iter().enumerate() {
                if i != j {
                    assert!(!other.strictly_inside(&w));
                }
            }
        }
    }
}
