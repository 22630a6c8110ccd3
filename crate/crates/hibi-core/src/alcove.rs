//! Descent-counting route to cell volumes.
//!
//! The cell of a class is carried to an alcoved polytope in three moves:
//! order the vertices along a Hamiltonian path (adding virtual steps when the
//! graph has none), substitute each tree coordinate by a difference of path
//! coordinates, and slice whatever consecutive differences are not yet unit
//! bands, translating every slice back to the fundamental band region. The
//! volume of an alcoved polytope is then a permutation count: an alcove
//! indexed by `w` lies inside `lo <= z_j - z_i <= hi` exactly when the
//! descent count of the window `w_i .. w_j` lands in `[lo, hi]`, with ties
//! broken by comparing `w_i` and `w_j`.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec::Vec;

use num_traits::One;

use crate::cell::CellPolytope;
use crate::cycles::SpanningTree;
use crate::error::AlcoveError;
use crate::matrix::int_det;
use crate::perm::{descent_prefix, des_window, permutations, value_at};
use crate::poset::{EdgeId, HasseHat, VertexId};
use crate::rat::{Int, Rat};
use crate::DEFAULT_DESCENT_DIM_LIMIT;

/// One step of a Hamiltonian path: an edge of the graph or a virtual link
/// inserted to make the path exist.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PathStep {
    Real(EdgeId),
    Virtual,
}

/// A vertex order visiting every vertex once; step `k` joins positions
/// `k - 1` and `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HamiltonianPath {
    pub order: Vec<VertexId>,
    pub steps: Vec<PathStep>,
}

impl HamiltonianPath {
    /// Builds the step list for a given vertex order.
    pub fn from_order(hat: &HasseHat, order: Vec<VertexId>) -> Self {
        let steps = order
            .windows(2)
            .map(|w| match hat.edge_between(w[0], w[1]) {
                Some(e) => PathStep::Real(e),
                None => PathStep::Virtual,
            })
            .collect();
        HamiltonianPath { order, steps }
    }

    pub fn position_of(&self, v: VertexId) -> usize {
        self.order.iter().position(|&u| u == v).expect("vertex on path")
    }

    pub fn virtual_count(&self) -> usize {
        self.steps
            .iter()
            .filter(|s| matches!(s, PathStep::Virtual))
            .count()
    }
}

/// Finds a Hamiltonian path of the graph by depth-first backtracking with
/// canonical tie-breaking (start vertices in canonical order, neighbors in
/// canonical edge order). When the graph has none, falls back to a fixed
/// linear extension of the order, joining consecutive vertices by virtual
/// steps where needed.
pub fn find_hamiltonian_path(hat: &HasseHat) -> HamiltonianPath {
    let nv = hat.num_vertices();
    let mut path: Vec<VertexId> = Vec::with_capacity(nv);
    let mut on_path = alloc::vec![false; nv];
    for start in 0..nv {
        path.clear();
        on_path.fill(false);
        path.push(start);
        on_path[start] = true;
        if dfs(hat, &mut path, &mut on_path) {
            return HamiltonianPath::from_order(hat, path);
        }
    }

    // Linear extension by repeatedly taking the smallest vertex whose lower
    // covers are all placed.
    let mut placed = alloc::vec![false; nv];
    let mut order = Vec::with_capacity(nv);
    while order.len() < nv {
        let next = (0..nv)
            .find(|&v| {
                !placed[v]
                    && hat
                        .neighbors(v)
                        .iter()
                        .all(|&(u, e)| hat.edges()[e].upper != v || placed[u])
            })
            .expect("acyclic order always has an available vertex");
        placed[next] = true;
        order.push(next);
    }
    HamiltonianPath::from_order(hat, order)
}

fn dfs(hat: &HasseHat, path: &mut Vec<VertexId>, on_path: &mut [bool]) -> bool {
    if path.len() == hat.num_vertices() {
        return true;
    }
    let last = *path.last().unwrap();
    for &(u, _) in hat.neighbors(last) {
        if !on_path[u] {
            path.push(u);
            on_path[u] = true;
            if dfs(hat, path, on_path) {
                return true;
            }
            path.pop();
            on_path[u] = false;
        }
    }
    false
}

/// A two-sided bound `lo <= z_j - z_i <= hi` with `i < j`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct AlcoveConstraint {
    pub i: usize,
    pub j: usize,
    pub lo: i64,
    pub hi: i64,
}

/// An alcoved polytope in the band region: `z_0 = 0`, every consecutive
/// difference confined to `[0, 1]`, plus integer bounds on arbitrary
/// differences. `translation` records the integer offsets that carried the
/// original slice here.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlcovedForm {
    pub dim: usize,
    pub constraints: Vec<AlcoveConstraint>,
    pub translation: Vec<i64>,
}

impl AlcovedForm {
    /// Builds a form from raw constraints, merging duplicate pairs. Returns
    /// `None` when some pair becomes infeasible.
    pub fn new(dim: usize, raw: &[(usize, usize, i64, i64)]) -> Option<AlcovedForm> {
        let mut map: BTreeMap<(usize, usize), (i64, i64)> = BTreeMap::new();
        for &(i, j, lo, hi) in raw {
            debug_assert!(i < j && j <= dim);
            let entry = map.entry((i, j)).or_insert((lo, hi));
            entry.0 = entry.0.max(lo);
            entry.1 = entry.1.min(hi);
        }
        let constraints: Vec<AlcoveConstraint> = map
            .into_iter()
            .map(|((i, j), (lo, hi))| AlcoveConstraint { i, j, lo, hi })
            .collect();
        if constraints.iter().any(|c| c.lo > c.hi) {
            return None;
        }
        Some(AlcovedForm {
            dim,
            constraints,
            translation: alloc::vec![0; dim + 1],
        })
    }

    pub fn constraint_on(&self, i: usize, j: usize) -> Option<&AlcoveConstraint> {
        self.constraints.iter().find(|c| c.i == i && c.j == j)
    }

    /// The same region as a halfspace system over `(z_1, .., z_dim)` with
    /// `z_0` eliminated.
    pub fn to_hpolytope(&self) -> crate::volume::HPolytope {
        let mut rows: Vec<(Vec<i64>, i64)> = Vec::new();
        for c in &self.constraints {
            let mut a = alloc::vec![0i64; self.dim];
            if c.j > 0 {
                a[c.j - 1] = 1;
            }
            if c.i > 0 {
                a[c.i - 1] = -1;
            }
            rows.push((a.clone(), c.hi));
            rows.push((a.iter().map(|&v| -v).collect(), -c.lo));
        }
        crate::volume::HPolytope::from_int_rows(self.dim, &rows)
    }
}

/// Affine form `z_plus - z_minus + constant` over the path coordinates.
#[derive(Clone, Copy, Debug)]
struct DiffForm {
    plus: usize,
    minus: usize,
    constant: i64,
}

/// The integer substitution matrix from path coordinates `z_1..z_d` to tree
/// coordinates, one row per tree slot.
pub fn substitution_matrix(
    hat: &HasseHat,
    tree: &SpanningTree,
    path: &HamiltonianPath,
) -> Vec<Vec<Int>> {
    let d = tree.tree_edges().len();
    let forms = slot_forms(hat, tree, path);
    let mut m = alloc::vec![alloc::vec![Int::from(0); d]; d];
    for (slot, f) in forms.iter().enumerate() {
        if f.plus > 0 {
            m[slot][f.plus - 1] += 1;
        }
        if f.minus > 0 {
            m[slot][f.minus - 1] -= 1;
        }
    }
    m
}

fn slot_forms(hat: &HasseHat, tree: &SpanningTree, path: &HamiltonianPath) -> Vec<DiffForm> {
    tree.tree_edges()
        .iter()
        .map(|&e| {
            let edge = hat.edges()[e];
            let i = path.position_of(edge.lower);
            let j = path.position_of(edge.upper);
            DiffForm {
                plus: j,
                minus: i,
                constant: if i < j { -1 } else { 0 },
            }
        })
        .collect()
}

/// Exact bounds of `z_to - z_from` implied by a difference-constraint map,
/// by shortest paths (Bellman-Ford). `Ok(None)` means the system is
/// infeasible (a negative cycle); an unreachable pair means the difference is
/// unbounded, which violates boundedness of the cell.
fn implied_bounds(
    dim: usize,
    map: &BTreeMap<(usize, usize), (i64, i64)>,
    from: usize,
    to: usize,
) -> Result<Option<(i64, i64)>, AlcoveError> {
    // Edges u -> v with weight w meaning z_v - z_u <= w.
    let mut edges: Vec<(usize, usize, i64)> = Vec::with_capacity(map.len() * 2);
    for (&(i, j), &(lo, hi)) in map {
        edges.push((i, j, hi));
        edges.push((j, i, -lo));
    }
    // None distances are +infinity; a negative cycle shows up as relaxation
    // still succeeding after |V| full rounds.
    let dist = |src: usize| -> Option<Vec<Option<i64>>> {
        let mut d: Vec<Option<i64>> = alloc::vec![None; dim + 1];
        d[src] = Some(0);
        for round in 0..=dim + 1 {
            let mut changed = false;
            for &(u, v, w) in &edges {
                if let Some(du) = d[u] {
                    let cand = du + w;
                    if d[v].map_or(true, |dv| cand < dv) {
                        d[v] = Some(cand);
                        changed = true;
                    }
                }
            }
            if !changed {
                return Some(d);
            }
            if round == dim + 1 {
                return None;
            }
        }
        Some(d)
    };
    let fwd = match dist(from) {
        Some(d) => d,
        None => return Ok(None),
    };
    let bwd = match dist(to) {
        Some(d) => d,
        None => return Ok(None),
    };
    match (fwd[to], bwd[from]) {
        (Some(hi), Some(neg_lo)) => Ok(Some((-neg_lo, hi))),
        _ => Err(AlcoveError::MalformedBand),
    }
}

/// Carries the cell to a list of alcoved slices.
///
/// Every cell constraint reduces under the path substitution to a bound on a
/// difference of two path coordinates; consecutive pairs not yet confined to
/// a unit band are split along integer offsets over their exact implied
/// range, and each slice is translated so all bands become `[0, 1]`.
pub fn transform_to_alcoved(
    hat: &HasseHat,
    tree: &SpanningTree,
    cell: &CellPolytope,
    path: &HamiltonianPath,
) -> Result<Vec<AlcovedForm>, AlcoveError> {
    let d = cell.dim();
    let forms = slot_forms(hat, tree, path);

    let sub = substitution_matrix(hat, tree, path);
    let det = int_det(&sub);
    if det != Int::from(1) && det != Int::from(-1) {
        return Err(AlcoveError::NonUnimodular);
    }

    // Accumulate each cell band as a difference form in the z coordinates.
    let mut map: BTreeMap<(usize, usize), (i64, i64)> = BTreeMap::new();
    for band in cell.bands() {
        let mut coeff = alloc::vec![0i64; d + 1];
        let mut constant = 0i64;
        for (slot, &a) in band.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            let f = forms[slot];
            coeff[f.plus] += a;
            coeff[f.minus] -= a;
            constant += a * f.constant;
        }
        let plus = coeff.iter().position(|&v| v == 1);
        let minus = coeff.iter().position(|&v| v == -1);
        let others = coeff.iter().filter(|&&v| v != 0).count();
        let (a, b) = match (plus, minus) {
            (Some(a), Some(b)) if others == 2 => (a, b),
            _ => return Err(AlcoveError::MalformedBand),
        };
        // lo <= z_a - z_b + constant <= hi, normalized to the pair (min, max).
        let (i, j, lo, hi) = if b < a {
            (b, a, band.lo - constant, band.hi - constant)
        } else {
            (a, b, constant - band.hi, constant - band.lo)
        };
        let entry = map.entry((i, j)).or_insert((lo, hi));
        entry.0 = entry.0.max(lo);
        entry.1 = entry.1.min(hi);
    }
    if map.values().any(|&(lo, hi)| lo > hi) {
        return Ok(Vec::new());
    }

    // Slice consecutive pairs into unit bands, depth-first over positions.
    let mut out = Vec::new();
    slice_bands(d, 1, map, &mut alloc::vec![0i64; d + 1], &mut out)?;
    Ok(out)
}

fn slice_bands(
    dim: usize,
    pair: usize,
    map: BTreeMap<(usize, usize), (i64, i64)>,
    offsets: &mut Vec<i64>,
    out: &mut Vec<AlcovedForm>,
) -> Result<(), AlcoveError> {
    if pair > dim {
        // Translate: z_k -> z_k - offsets[k].
        let constraints: Vec<AlcoveConstraint> = map
            .iter()
            .map(|(&(i, j), &(lo, hi))| {
                let shift = offsets[j] - offsets[i];
                AlcoveConstraint {
                    i,
                    j,
                    lo: lo - shift,
                    hi: hi - shift,
                }
            })
            .collect();
        if constraints.iter().any(|c| c.lo > c.hi) {
            return Ok(());
        }
        debug_assert!((1..=dim).all(|k| {
            constraints
                .iter()
                .any(|c| c.i == k - 1 && c.j == k && c.lo == 0 && c.hi == 1)
        }));
        out.push(AlcovedForm {
            dim,
            constraints,
            translation: offsets.clone(),
        });
        return Ok(());
    }
    let (lo, hi) = match implied_bounds(dim, &map, pair - 1, pair)? {
        Some(b) => b,
        None => return Ok(()), // infeasible branch
    };
    for m in lo..hi {
        let mut next = map.clone();
        let entry = next.entry((pair - 1, pair)).or_insert((m, m + 1));
        entry.0 = entry.0.max(m);
        entry.1 = entry.1.min(m + 1);
        offsets[pair] = offsets[pair - 1] + m;
        slice_bands(dim, pair + 1, next, offsets, out)?;
    }
    Ok(())
}

/// The alcove test of one permutation against one form, with the sentinel
/// `w_0 = 0`: every constraint window must carry a descent count inside the
/// bounds, hitting the lower bound only on an ascent between the endpoints
/// and the upper bound only on a descent.
pub fn alcove_inclusion(w: &[u8], form: &AlcovedForm) -> bool {
    let prefix = descent_prefix(w);
    alcove_inclusion_prefixed(w, &prefix, form)
}

fn alcove_inclusion_prefixed(w: &[u8], prefix: &[u32], form: &AlcovedForm) -> bool {
    for c in &form.constraints {
        let des = des_window(prefix, c.i, c.j) as i64;
        if des < c.lo || des > c.hi {
            return false;
        }
        if des == c.lo && value_at(w, c.i) >= value_at(w, c.j) {
            return false;
        }
        if des == c.hi && value_at(w, c.i) <= value_at(w, c.j) {
            return false;
        }
    }
    true
}

/// Result of a descent scan over a list of slices.
#[derive(Clone, Debug)]
pub struct DescentOutcome {
    /// Total count over all slices divided by `dim!`.
    pub value: Rat,
    pub slice_counts: Vec<u64>,
    /// Passing permutations per slice, in one-line notation.
    pub witnesses: Vec<BTreeSet<Vec<u8>>>,
}

impl DescentOutcome {
    /// Union of the witness sets over all slices.
    pub fn witness_union(&self) -> BTreeSet<Vec<u8>> {
        let mut all = BTreeSet::new();
        for set in &self.witnesses {
            all.extend(set.iter().cloned());
        }
        all
    }
}

/// Scans all of `S_dim` once against every slice, collecting witnesses.
pub fn descent_scan(
    dim: usize,
    slices: &[AlcovedForm],
    limit: usize,
    keep_witnesses: bool,
) -> Result<DescentOutcome, AlcoveError> {
    if dim > limit {
        return Err(AlcoveError::DimLimit { dim, limit });
    }
    let mut counts = alloc::vec![0u64; slices.len()];
    let mut witnesses: Vec<BTreeSet<Vec<u8>>> = alloc::vec![BTreeSet::new(); slices.len()];
    for w in permutations(dim) {
        let prefix = descent_prefix(&w);
        for (s, form) in slices.iter().enumerate() {
            if alcove_inclusion_prefixed(&w, &prefix, form) {
                counts[s] += 1;
                if keep_witnesses {
                    witnesses[s].insert(w.clone());
                }
            }
        }
    }
    let total: u64 = counts.iter().sum();
    let mut dfact = Int::one();
    for k in 1..=dim {
        dfact *= Int::from(k as u64);
    }
    Ok(DescentOutcome {
        value: Rat::new(Int::from(total), dfact),
        slice_counts: counts,
        witnesses,
    })
}

/// Cell volume by descent counting.
pub fn fsig_descent(
    hat: &HasseHat,
    tree: &SpanningTree,
    cell: &CellPolytope,
    path: &HamiltonianPath,
) -> Result<Rat, AlcoveError> {
    fsig_descent_with_limit(hat, tree, cell, path, DEFAULT_DESCENT_DIM_LIMIT)
}

/// [`fsig_descent`] with an explicit dimension cap.
pub fn fsig_descent_with_limit(
    hat: &HasseHat,
    tree: &SpanningTree,
    cell: &CellPolytope,
    path: &HamiltonianPath,
    limit: usize,
) -> Result<Rat, AlcoveError> {
    let slices = transform_to_alcoved(hat, tree, cell, path)?;
    Ok(descent_scan(cell.dim(), &slices, limit, false)?.value)
}

/// Cell volume by descent counting, with the witness permutations kept.
pub fn fsig_descent_with_witnesses(
    hat: &HasseHat,
    tree: &SpanningTree,
    cell: &CellPolytope,
    path: &HamiltonianPath,
) -> Result<DescentOutcome, AlcoveError> {
    let slices = transform_to_alcoved(hat, tree, cell, path)?;
    descent_scan(cell.dim(), &slices, DEFAULT_DESCENT_DIM_LIMIT, true)
}
