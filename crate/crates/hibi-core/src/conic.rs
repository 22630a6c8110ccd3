//! The circuit-cut region in class-group coordinates and its lattice points,
//! which enumerate the conic classes.

use alloc::string::String;
use alloc::vec::Vec;

use num_traits::ToPrimitive;

use crate::cycles::{Circuit, FundamentalCycle, SpanningTree};
use crate::error::ConicError;
use crate::poset::HasseHat;
use crate::rat::{ceil_int, Int, Rat};
use crate::volume::{enumerate_vertices_with_limit, HPolytope};

/// A divisor class in coordinates relative to a spanning tree: one integer
/// per cotree edge, in cotree order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ClassVector(pub Vec<i64>);

impl ClassVector {
    pub fn zero(len: usize) -> Self {
        ClassVector(alloc::vec![0; len])
    }

    pub fn negated(&self) -> Self {
        ClassVector(self.0.iter().map(|&c| -c).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl core::fmt::Display for ClassVector {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// One two-sided inequality of the region, `lo <= coeffs . z <= hi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConicConstraint {
    pub coeffs: Vec<i64>,
    pub lo: i64,
    pub hi: i64,
}

/// The region whose lattice points are the conic classes: one two-sided
/// inequality per circuit, with coefficient `+1`/`-1` on the cotree edges the
/// circuit traverses with/against the order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConicRegion {
    dim: usize,
    constraints: Vec<ConicConstraint>,
}

impl ConicRegion {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn constraints(&self) -> &[ConicConstraint] {
        &self.constraints
    }

    pub fn contains(&self, c: &ClassVector) -> bool {
        self.constraints.iter().all(|row| {
            let v: i64 = row
                .coeffs
                .iter()
                .zip(c.0.iter())
                .map(|(a, z)| a * z)
                .sum();
            row.lo <= v && v <= row.hi
        })
    }

    /// Human-readable rendering of one constraint, e.g. `-1 <= z2 - z1 <= 1`.
    pub fn constraint_label(&self, idx: usize) -> String {
        use core::fmt::Write;
        let row = &self.constraints[idx];
        let mut expr = String::new();
        for (j, &a) in row.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            if a > 0 && !expr.is_empty() {
                let _ = write!(expr, " + ");
            } else if a < 0 {
                let _ = write!(expr, "{}", if expr.is_empty() { "-" } else { " - " });
            }
            let _ = write!(expr, "z{}", j + 1);
        }
        let mut s = String::new();
        let _ = write!(s, "{} <= {} <= {}", row.lo, expr, row.hi);
        s
    }
}

/// Builds the region from the circuit list.
pub fn build_conic_region(
    _hat: &HasseHat,
    tree: &SpanningTree,
    circuits: &[Circuit],
) -> ConicRegion {
    let cotree = tree.cotree_edges();
    let dim = cotree.len();
    let constraints = circuits
        .iter()
        .map(|c| {
            let (zp, zm) = c.z_partition(tree);
            let mut coeffs = alloc::vec![0i64; dim];
            for e in zp {
                let j = cotree.binary_search(&e).expect("cotree edge");
                coeffs[j] = 1;
            }
            for e in zm {
                let j = cotree.binary_search(&e).expect("cotree edge");
                coeffs[j] = -1;
            }
            ConicConstraint {
                coeffs,
                lo: 1 - c.x_minus.len() as i64,
                hi: c.x_plus.len() as i64 - 1,
            }
        })
        .collect();
    ConicRegion { dim, constraints }
}

/// All lattice points of the region, sorted lexicographically.
///
/// Enumerates vertices of the real region to get exact per-coordinate
/// bounds, then scans the integer box and filters. The zero class is always
/// present; an unbounded region is a hard error.
pub fn enumerate_conic_classes(region: &ConicRegion) -> Result<Vec<ClassVector>, ConicError> {
    if region.dim == 0 {
        return Ok(alloc::vec![ClassVector(Vec::new())]);
    }
    let mut p = HPolytope::from_int_rows(region.dim, &[]);
    for row in &region.constraints {
        let coeffs: Vec<Rat> = row
            .coeffs
            .iter()
            .map(|&a| Rat::from_integer(Int::from(a)))
            .collect();
        p.push_band(
            &coeffs,
            &Rat::from_integer(Int::from(row.lo)),
            &Rat::from_integer(Int::from(row.hi)),
        );
    }
    // Region dimension is the class-group rank, far below the cell dimension,
    // so a generous enumeration cap is safe here.
    let verts = enumerate_vertices_with_limit(&p, 12).map_err(|_| ConicError::Unbounded)?;
    if verts.is_empty() {
        // Cannot happen: zero satisfies every constraint.
        return Ok(alloc::vec![ClassVector::zero(region.dim)]);
    }
    let mut lo = alloc::vec![i64::MAX; region.dim];
    let mut hi = alloc::vec![i64::MIN; region.dim];
    for v in &verts {
        for (k, c) in v.iter().enumerate() {
            let f = c.floor().to_integer().to_i64().expect("desk-scale bounds");
            let g = ceil_int(c).to_i64().expect("desk-scale bounds");
            lo[k] = lo[k].min(f);
            hi[k] = hi[k].max(g);
        }
    }
    let mut out = Vec::new();
    let mut cursor: Vec<i64> = lo.clone();
    'scan: loop {
        let cand = ClassVector(cursor.clone());
        if region.contains(&cand) {
            out.push(cand);
        }
        for k in (0..region.dim).rev() {
            if cursor[k] < hi[k] {
                cursor[k] += 1;
                for (k2, c) in cursor.iter_mut().enumerate().skip(k + 1) {
                    *c = lo[k2];
                }
                continue 'scan;
            }
        }
        break;
    }
    out.sort();
    Ok(out)
}

/// The band expression of one fundamental cycle at a point in tree-slot
/// coordinates: the sum over tree edges traversed against the order minus
/// the sum over those traversed with it.
pub fn band_value(cycle: &FundamentalCycle, tree: &SpanningTree, y: &[Rat]) -> Rat {
    let mut acc = Rat::from_integer(Int::from(0));
    for &e in &cycle.y_minus {
        acc += &y[tree.slot(e).expect("tree edge")];
    }
    for &e in &cycle.y_plus {
        acc -= &y[tree.slot(e).expect("tree edge")];
    }
    acc
}

/// Classifies a point of the half-open cube into its class: the ceiling of
/// each band expression.
pub fn reduce_to_class(
    y: &[Rat],
    cycles: &[FundamentalCycle],
    tree: &SpanningTree,
) -> ClassVector {
    debug_assert!(y.iter().all(|v| {
        let lo = Rat::from_integer(Int::from(-1));
        let hi = Rat::from_integer(Int::from(0));
        v > &lo && v <= &hi
    }));
    ClassVector(
        cycles
            .iter()
            .map(|cy| {
                ceil_int(&band_value(cy, tree, y))
                    .to_i64()
                    .expect("desk-scale class")
            })
            .collect(),
    )
}

/// The class of an integer grid point `y_i = -k_i / q`, in pure integer
/// arithmetic; `k` is indexed by tree slots.
pub fn reduce_grid_point(
    k: &[u32],
    q: u32,
    cycles: &[FundamentalCycle],
    tree: &SpanningTree,
) -> ClassVector {
    ClassVector(
        cycles
            .iter()
            .map(|cy| {
                let mut num: i64 = 0;
                for &e in &cy.y_plus {
                    num += k[tree.slot(e).expect("tree edge")] as i64;
                }
                for &e in &cy.y_minus {
                    num -= k[tree.slot(e).expect("tree edge")] as i64;
                }
                crate::rat::ceil_div_i64(num, q as i64)
            })
            .collect(),
    )
}
