//! Exact rational polytopes in halfspace form: vertex enumeration,
//! triangulated volume, and coordinate bounds.
//!
//! Vertices are found by scanning independent `dim`-subsets of constraints
//! with an incremental fraction-free elimination, solving each subsystem
//! exactly and keeping the feasible solutions. Boundedness is certified by
//! intersecting with a box strictly larger than any basic solution can be: a
//! feasible basic point on the box means a recession direction escapes it.
//! Volume cones each facet's recursive triangulation to a fixed base vertex
//! and sums exact simplex determinants. No floating point anywhere.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::VolumeError;
use crate::matrix::{affine_dim, rat_det, Coeff, Echelon, Overflow};
use crate::rat::{Int, Rat};
use crate::DEFAULT_VOLUME_DIM_LIMIT;

/// A polyhedron `{ x : a.x <= b for each row }` with exact rational data.
#[derive(Clone, Debug, PartialEq)]
pub struct HPolytope {
    dim: usize,
    rows: Vec<(Vec<Rat>, Rat)>,
}

/// Exact volume plus enumeration diagnostics.
#[derive(Clone, Debug, PartialEq)]
pub struct VolumeResult {
    pub value: Rat,
    pub vertex_count: usize,
    pub simplex_count: usize,
}

impl HPolytope {
    pub fn new(dim: usize, rows: Vec<(Vec<Rat>, Rat)>) -> Self {
        debug_assert!(rows.iter().all(|(a, _)| a.len() == dim));
        HPolytope { dim, rows }
    }

    pub fn from_int_rows(dim: usize, rows: &[(Vec<i64>, i64)]) -> Self {
        let rows = rows
            .iter()
            .map(|(a, b)| {
                (
                    a.iter().map(|&v| Rat::from_integer(Int::from(v))).collect(),
                    Rat::from_integer(Int::from(*b)),
                )
            })
            .collect();
        HPolytope { dim, rows }
    }

    /// Adds `lo <= a.x <= hi` as two halfspace rows.
    pub fn push_band(&mut self, a: &[Rat], lo: &Rat, hi: &Rat) {
        self.rows.push((a.to_vec(), hi.clone()));
        self.rows
            .push((a.iter().map(|v| -v).collect(), -lo.clone()));
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rows(&self) -> &[(Vec<Rat>, Rat)] {
        &self.rows
    }

    /// Exact membership test.
    pub fn contains(&self, x: &[Rat]) -> bool {
        self.rows.iter().all(|(a, b)| &dot(a, x) <= b)
    }
}

fn dot(a: &[Rat], x: &[Rat]) -> Rat {
    a.iter()
        .zip(x.iter())
        .fold(Rat::zero(), |acc, (p, q)| acc + p * q)
}

/// Integer-scaled halfspace rows.
struct IntRows {
    dim: usize,
    /// `(a, b)` meaning `a.x <= b`, gcd-normalized.
    rows: Vec<(Vec<Int>, Int)>,
    /// Number of leading rows that came from the input (the rest are the
    /// synthetic bounding box).
    genuine: usize,
    /// Box radius, when a box was added.
    box_radius: Option<Int>,
}

fn scale_rows(p: &HPolytope) -> Vec<(Vec<Int>, Int)> {
    p.rows()
        .iter()
        .map(|(a, b)| {
            let mut den = b.denom().clone();
            for c in a {
                den = den.lcm(c.denom());
            }
            let mut row: Vec<Int> = a.iter().map(|c| c.numer() * (&den / c.denom())).collect();
            let mut rhs = b.numer() * (&den / b.denom());
            let mut g = rhs.clone();
            for v in &row {
                g = Integer::gcd(&g, v);
            }
            if !g.is_zero() {
                for v in &mut row {
                    *v = &*v / &g;
                }
                rhs = &rhs / &g;
            }
            (row, rhs)
        })
        .collect()
}

/// Scales to integers and, unless every coordinate is already boxed by
/// syntactic `±x_k` rows, augments with a box no genuine vertex can reach.
fn prepare(p: &HPolytope) -> IntRows {
    let dim = p.dim();
    let mut rows = scale_rows(p);
    let genuine = rows.len();

    let axis_of = |a: &[Int]| -> Option<(usize, bool)> {
        let mut axis = None;
        for (k, v) in a.iter().enumerate() {
            if !v.is_zero() {
                if axis.is_some() {
                    return None;
                }
                axis = Some((k, v.is_positive()));
            }
        }
        axis
    };
    let mut boxed_hi = alloc::vec![false; dim];
    let mut boxed_lo = alloc::vec![false; dim];
    for (a, _) in &rows {
        if let Some((k, positive)) = axis_of(a) {
            if positive {
                boxed_hi[k] = true;
            } else {
                boxed_lo[k] = true;
            }
        }
    }
    let fully_boxed = dim == 0 || (0..dim).all(|k| boxed_hi[k] && boxed_lo[k]);
    let box_radius = if fully_boxed {
        None
    } else {
        // Any basic solution of a d-subset has |x_i| <= d! * beta^d by
        // Cramer with Hadamard-type bounds; one more is unreachable.
        let mut beta = Int::one();
        for (a, b) in &rows {
            for v in a.iter().chain(core::iter::once(b)) {
                if v.abs() > beta {
                    beta = v.abs();
                }
            }
        }
        let mut m = Int::one();
        for _ in 0..dim {
            m *= Int::from(dim as u64) * &beta;
        }
        m += 1;
        for k in 0..dim {
            let mut pos = alloc::vec![Int::zero(); dim];
            pos[k] = Int::one();
            rows.push((pos, m.clone()));
            let mut neg = alloc::vec![Int::zero(); dim];
            neg[k] = -Int::one();
            rows.push((neg, m.clone()));
        }
        Some(m)
    };
    IntRows {
        dim,
        rows,
        genuine,
        box_radius,
    }
}

fn scan<T: Coeff>(ir: &IntRows) -> Result<BTreeSet<Vec<Rat>>, Overflow> {
    let dim = ir.dim;
    let mut rows_t: Vec<Vec<T>> = Vec::with_capacity(ir.rows.len());
    for (a, b) in &ir.rows {
        let mut row: Vec<T> = Vec::with_capacity(dim + 1);
        for v in a {
            row.push(T::from_int(v).ok_or(Overflow)?);
        }
        row.push(T::from_int(b).ok_or(Overflow)?);
        rows_t.push(row);
    }
    let mut found: BTreeSet<Vec<Rat>> = BTreeSet::new();
    let ech = Echelon::<T>::new(dim);
    rec(&rows_t, ir, 0, &ech, &mut found)?;
    return Ok(found);

    fn rec<T: Coeff>(
        rows_t: &[Vec<T>],
        ir: &IntRows,
        next: usize,
        ech: &Echelon<T>,
        found: &mut BTreeSet<Vec<Rat>>,
    ) -> Result<(), Overflow> {
        if ech.rank() == ir.dim {
            let x = ech.solve()?;
            if feasible(ir, &x) {
                found.insert(x);
            }
            return Ok(());
        }
        let need = ir.dim - ech.rank();
        for r in next..rows_t.len() {
            if rows_t.len() - r < need {
                break;
            }
            if let Some(extended) = ech.try_add(&rows_t[r])? {
                rec(rows_t, ir, r + 1, &extended, found)?;
            }
        }
        Ok(())
    }
}

fn feasible(ir: &IntRows, x: &[Rat]) -> bool {
    let mut den = Int::one();
    for v in x {
        den = den.lcm(v.denom());
    }
    let nums: Vec<Int> = x.iter().map(|v| v.numer() * (&den / v.denom())).collect();
    ir.rows.iter().all(|(a, b)| {
        let lhs: Int = a
            .iter()
            .zip(nums.iter())
            .map(|(c, n)| c * n)
            .fold(Int::zero(), |acc, t| acc + t);
        lhs <= b * &den
    })
}

fn vertices_inner(p: &HPolytope, limit: usize) -> Result<Vec<Vec<Rat>>, VolumeError> {
    if p.dim() > limit {
        return Err(VolumeError::DimLimit {
            dim: p.dim(),
            limit,
        });
    }
    if p.dim() == 0 {
        // R^0 holds one point; it is a vertex when every row allows it.
        let ok = p.rows().iter().all(|(_, b)| !b.is_negative());
        return Ok(if ok {
            alloc::vec![Vec::new()]
        } else {
            Vec::new()
        });
    }
    let ir = prepare(p);
    let found = match scan::<i128>(&ir) {
        Ok(found) => found,
        Err(Overflow) => scan::<Int>(&ir).expect("bigint scan cannot overflow"),
    };
    if let Some(m) = &ir.box_radius {
        let m_rat = Rat::from_integer(m.clone());
        if found
            .iter()
            .any(|x| x.iter().any(|c| c.abs() >= m_rat))
        {
            return Err(VolumeError::Unbounded);
        }
    }
    let _ = ir.genuine;
    Ok(found.into_iter().collect())
}

/// All vertices of the polytope, deduplicated and sorted coordinatewise.
///
/// Returns an empty list for an empty polytope; unbounded polyhedra are an
/// error.
pub fn enumerate_vertices(p: &HPolytope) -> Result<Vec<Vec<Rat>>, VolumeError> {
    vertices_inner(p, DEFAULT_VOLUME_DIM_LIMIT)
}

/// [`enumerate_vertices`] with an explicit dimension cap.
pub fn enumerate_vertices_with_limit(
    p: &HPolytope,
    limit: usize,
) -> Result<Vec<Vec<Rat>>, VolumeError> {
    vertices_inner(p, limit)
}

/// Exact Euclidean volume by coning facet triangulations to a base vertex.
pub fn volume(p: &HPolytope) -> Result<VolumeResult, VolumeError> {
    volume_with_limit(p, DEFAULT_VOLUME_DIM_LIMIT)
}

/// [`volume`] with an explicit dimension cap.
pub fn volume_with_limit(p: &HPolytope, limit: usize) -> Result<VolumeResult, VolumeError> {
    let verts = vertices_inner(p, limit)?;
    let d = p.dim();
    if verts.is_empty() || d == 0 {
        return Ok(VolumeResult {
            value: if verts.is_empty() {
                Rat::zero()
            } else {
                Rat::one()
            },
            vertex_count: verts.len(),
            simplex_count: 0,
        });
    }
    if affine_dim(&verts) != Some(d) {
        // Lower-dimensional sets have measure zero.
        return Ok(VolumeResult {
            value: Rat::zero(),
            vertex_count: verts.len(),
            simplex_count: 0,
        });
    }

    // Incidence of vertices on scaled rows.
    let rows = scale_rows(p);
    let incidence: Vec<Vec<usize>> = rows
        .iter()
        .map(|(a, b)| {
            verts
                .iter()
                .enumerate()
                .filter(|(_, v)| {
                    let lhs = a
                        .iter()
                        .zip(v.iter())
                        .fold(Rat::zero(), |acc, (c, x)| acc + Rat::from_integer(c.clone()) * x);
                    lhs == Rat::from_integer(b.clone())
                })
                .map(|(i, _)| i)
                .collect()
        })
        .collect();

    let all: Vec<usize> = (0..verts.len()).collect();
    let simplices = triangulate(&verts, &incidence, &all, d);
    let mut total = Rat::zero();
    for s in &simplices {
        let base = &verts[s[0]];
        let mat: Vec<Vec<Rat>> = s[1..]
            .iter()
            .map(|&vi| {
                verts[vi]
                    .iter()
                    .zip(base.iter())
                    .map(|(a, b)| a - b)
                    .collect()
            })
            .collect();
        total += rat_det(&mat).abs();
    }
    let mut dfact = Rat::one();
    for k in 1..=d {
        dfact *= Rat::from_integer(Int::from(k as u64));
    }
    Ok(VolumeResult {
        value: total / dfact,
        vertex_count: verts.len(),
        simplex_count: simplices.len(),
    })
}

/// Triangulates the face spanned by `face` (vertex indices, ascending) of
/// affine dimension `k`, returning simplices as index lists of length `k+1`.
fn triangulate(
    verts: &[Vec<Rat>],
    incidence: &[Vec<usize>],
    face: &[usize],
    k: usize,
) -> Vec<Vec<usize>> {
    if face.len() == k + 1 {
        return alloc::vec![face.to_vec()];
    }
    // Vertices are stored sorted, so the smallest index is the
    // coordinatewise-smallest point of the face.
    let apex = face[0];
    let mut seen: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut out = Vec::new();
    for inc in incidence {
        let sub: Vec<usize> = face.iter().copied().filter(|v| inc.contains(v)).collect();
        if sub.len() < k || sub.contains(&apex) || sub.len() == face.len() {
            continue;
        }
        let pts: Vec<Vec<Rat>> = sub.iter().map(|&i| verts[i].clone()).collect();
        if affine_dim(&pts) != Some(k - 1) {
            continue;
        }
        if !seen.insert(sub.clone()) {
            continue;
        }
        for facet_simplex in triangulate(verts, incidence, &sub, k - 1) {
            let mut s = Vec::with_capacity(k + 1);
            s.push(apex);
            s.extend(facet_simplex);
            out.push(s);
        }
    }
    out
}

/// Exact minimum and maximum of the linear functional `f` over the vertices.
pub fn coordinate_bounds(p: &HPolytope, f: &[Rat]) -> Result<(Rat, Rat), VolumeError> {
    coordinate_bounds_with_limit(p, f, DEFAULT_VOLUME_DIM_LIMIT)
}

/// [`coordinate_bounds`] with an explicit dimension cap.
pub fn coordinate_bounds_with_limit(
    p: &HPolytope,
    f: &[Rat],
    limit: usize,
) -> Result<(Rat, Rat), VolumeError> {
    let verts = vertices_inner(p, limit)?;
    if verts.is_empty() {
        return Err(VolumeError::Empty);
    }
    let mut lo: Option<Rat> = None;
    let mut hi: Option<Rat> = None;
    for v in &verts {
        let val = dot(f, v);
        if lo.as_ref().map_or(true, |cur| &val < cur) {
            lo = Some(val.clone());
        }
        if hi.as_ref().map_or(true, |cur| &val > cur) {
            hi = Some(val);
        }
    }
    Ok((lo.unwrap(), hi.unwrap()))
}
