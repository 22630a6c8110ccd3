//! Exact linear algebra on small dense systems.
//!
//! Vertex enumeration spends nearly all its time reducing candidate rows, so
//! the elimination state is generic over a coefficient type: `i128` with
//! checked arithmetic for speed, falling back to `BigInt` when anything
//! overflows. All reductions are fraction-free with gcd normalization, which
//! keeps entries small without leaving exact arithmetic.

use alloc::vec::Vec;
use core::cmp::Ordering;

use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::rat::{Int, Rat};

/// Signals that the `i128` path overflowed and the caller should retry with
/// arbitrary precision.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Overflow;

/// Integer coefficient arithmetic for the elimination kernel.
pub trait Coeff: Clone + Ord + core::fmt::Debug + Zero {
    fn from_int(v: &Int) -> Option<Self>;
    fn to_int(&self) -> Int;
    fn checked_add(&self, o: &Self) -> Option<Self>;
    fn checked_sub(&self, o: &Self) -> Option<Self>;
    fn checked_mul(&self, o: &Self) -> Option<Self>;
    fn gcd(&self, o: &Self) -> Self;
    /// Division known to be exact.
    fn exact_div(&self, o: &Self) -> Self;
    fn negate(&self) -> Self;
}

impl Coeff for i128 {
    fn from_int(v: &Int) -> Option<Self> {
        // to_i128 is not on BigInt directly without ToPrimitive.
        use num_traits::ToPrimitive;
        v.to_i128()
    }
    fn to_int(&self) -> Int {
        Int::from(*self)
    }
    fn checked_add(&self, o: &Self) -> Option<Self> {
        i128::checked_add(*self, *o)
    }
    fn checked_sub(&self, o: &Self) -> Option<Self> {
        i128::checked_sub(*self, *o)
    }
    fn checked_mul(&self, o: &Self) -> Option<Self> {
        i128::checked_mul(*self, *o)
    }
    fn gcd(&self, o: &Self) -> Self {
        Integer::gcd(self, o)
    }
    fn exact_div(&self, o: &Self) -> Self {
        debug_assert!(*o != 0 && self % o == 0);
        self / o
    }
    fn negate(&self) -> Self {
        -self
    }
}

impl Coeff for Int {
    fn from_int(v: &Int) -> Option<Self> {
        Some(v.clone())
    }
    fn to_int(&self) -> Int {
        self.clone()
    }
    fn checked_add(&self, o: &Self) -> Option<Self> {
        Some(self + o)
    }
    fn checked_sub(&self, o: &Self) -> Option<Self> {
        Some(self - o)
    }
    fn checked_mul(&self, o: &Self) -> Option<Self> {
        Some(self * o)
    }
    fn gcd(&self, o: &Self) -> Self {
        Integer::gcd(self, o)
    }
    fn exact_div(&self, o: &Self) -> Self {
        self / o
    }
    fn negate(&self) -> Self {
        -self
    }
}

/// Incremental row-echelon state over augmented rows `[a_1 .. a_n | b]`.
///
/// Rows are reduced against the pivots already present; a row whose
/// coefficient part vanishes is rejected (it cannot join an independent
/// subset with the current prefix).
#[derive(Clone, Debug)]
pub struct Echelon<T: Coeff> {
    cols: usize,
    rows: Vec<Vec<T>>,
    pivots: Vec<usize>,
}

impl<T: Coeff> Echelon<T> {
    pub fn new(cols: usize) -> Self {
        Echelon {
            cols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `row` (length `cols + 1`, augmented) against the pivots and,
    /// if its coefficient part stays nonzero, returns the extended state.
    pub fn try_add(&self, row: &[T]) -> Result<Option<Self>, Overflow> {
        debug_assert_eq!(row.len(), self.cols + 1);
        let mut work: Vec<T> = row.to_vec();
        for (prow, &pcol) in self.rows.iter().zip(self.pivots.iter()) {
            let factor = work[pcol].clone();
            if factor.is_zero() {
                continue;
            }
            let lead = prow[pcol].clone();
            // work := lead * work - factor * prow
            for k in 0..work.len() {
                let a = lead.checked_mul(&work[k]).ok_or(Overflow)?;
                let b = factor.checked_mul(&prow[k]).ok_or(Overflow)?;
                work[k] = a.checked_sub(&b).ok_or(Overflow)?;
            }
            normalize_row(&mut work);
        }
        let pivot = match work[..self.cols].iter().position(|v| !v.is_zero()) {
            Some(p) => p,
            None => return Ok(None),
        };
        let mut next = self.clone();
        next.rows.push(work);
        next.pivots.push(pivot);
        Ok(Some(next))
    }

    /// Solves the square system once `rank == cols`, returning coordinates as
    /// exact rationals.
    pub fn solve(&self) -> Result<Vec<Rat>, Overflow> {
        debug_assert_eq!(self.rank(), self.cols);
        let mut x: Vec<Option<Rat>> = alloc::vec![None; self.cols];
        for i in (0..self.rows.len()).rev() {
            let row = &self.rows[i];
            let pcol = self.pivots[i];
            let mut rhs = Rat::from_integer(row[self.cols].to_int());
            for (c, coeff) in row[..self.cols].iter().enumerate() {
                if c == pcol || coeff.is_zero() {
                    continue;
                }
                let xv = x[c]
                    .as_ref()
                    .expect("later pivots solved before earlier rows");
                rhs -= Rat::from_integer(coeff.to_int()) * xv;
            }
            x[pcol] = Some(rhs / Rat::from_integer(row[pcol].to_int()));
        }
        Ok(x.into_iter().map(|v| v.expect("full rank")).collect())
    }
}

/// Divides an integer row by the gcd of its entries and fixes the sign of the
/// leading nonzero entry, so equal subspaces compare equal.
pub fn normalize_row<T: Coeff>(row: &mut [T]) {
    let mut g = T::zero();
    for v in row.iter() {
        g = g.gcd(v);
    }
    if g.is_zero() {
        return;
    }
    for v in row.iter_mut() {
        *v = v.exact_div(&g);
    }
    if let Some(first) = row.iter().find(|v| !v.is_zero()) {
        if first.to_int().is_negative() {
            for v in row.iter_mut() {
                *v = v.negate();
            }
        }
    }
}

/// Rank of an integer matrix.
pub fn int_rank(rows: &[Vec<Int>], cols: usize) -> usize {
    let mut ech: Echelon<Int> = Echelon::new(cols);
    for r in rows {
        let mut aug = r.clone();
        aug.push(Int::zero());
        if let Ok(Some(next)) = ech.try_add(&aug) {
            ech = next;
        }
        if ech.rank() == cols {
            break;
        }
    }
    ech.rank()
}

/// Determinant of a square rational matrix by Gaussian elimination.
pub fn rat_det(mat: &[Vec<Rat>]) -> Rat {
    let n = mat.len();
    if n == 0 {
        return Rat::from_integer(Int::from(1));
    }
    let mut m: Vec<Vec<Rat>> = mat.to_vec();
    let mut det = Rat::from_integer(Int::from(1));
    for col in 0..n {
        let pivot = match (col..n).find(|&r| !m[r][col].is_zero()) {
            Some(p) => p,
            None => return Rat::zero(),
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let pv = m[col][col].clone();
        det *= &pv;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let f = &m[r][col] / &pv;
            for c in col..n {
                let sub = &f * &m[col][c];
                m[r][c] -= sub;
            }
        }
    }
    det
}

/// Determinant of a square integer matrix (via rationals; sizes here are tiny).
pub fn int_det(mat: &[Vec<Int>]) -> Int {
    let as_rat: Vec<Vec<Rat>> = mat
        .iter()
        .map(|row| row.iter().map(|v| Rat::from_integer(v.clone())).collect())
        .collect();
    let d = rat_det(&as_rat);
    debug_assert!(d.denom() == &Int::from(1));
    d.to_integer()
}

/// Affine dimension of a point set (dimension of the span of differences).
pub fn affine_dim(points: &[Vec<Rat>]) -> Option<usize> {
    let first = points.first()?;
    let cols = first.len();
    let mut ech: Echelon<Int> = Echelon::new(cols);
    for p in &points[1..] {
        // Scale the difference to an integer row.
        let mut den = Int::from(1);
        for (a, b) in p.iter().zip(first.iter()) {
            den = den.lcm(&(a - b).denom().clone());
        }
        let mut row: Vec<Int> = p
            .iter()
            .zip(first.iter())
            .map(|(a, b)| {
                let d = a - b;
                d.numer() * (&den / d.denom())
            })
            .collect();
        row.push(Int::zero());
        if let Ok(Some(next)) = ech.try_add(&row) {
            ech = next;
        }
        if ech.rank() == cols {
            break;
        }
    }
    Some(ech.rank())
}

/// Total order on rational points, coordinate by coordinate.
pub fn cmp_points(a: &[Rat], b: &[Rat]) -> Ordering {
    for (x, y) in a.iter().zip(b.iter()) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            other => return other,
        }
    }
    a.len().cmp(&b.len())
}
