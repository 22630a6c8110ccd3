//! Closed forms for products of incomparable chains: Eulerian numbers,
//! hypersimplex slices, and the explicit signature formulas used to
//! cross-check the general engine.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_traits::One;

use crate::alcove::{descent_scan, AlcovedForm};
use crate::perm::{descent_prefix, des_window, permutations};
use crate::poset::Poset;
use crate::rat::{Int, Rat};
use crate::volume::HPolytope;

/// Eulerian numbers under the descent convention: entry `(k, d)` counts the
/// permutations of `S_d` with exactly `k` descents.
#[derive(Clone, Debug)]
pub struct EulerianTable {
    /// `rows[d][k]` for `d >= 1`, `0 <= k <= d - 1`.
    rows: Vec<Vec<u128>>,
}

impl EulerianTable {
    /// Table for all `1 <= d <= max_d`, by the two-term recurrence.
    pub fn new(max_d: usize) -> Self {
        let mut rows: Vec<Vec<u128>> = Vec::with_capacity(max_d + 1);
        rows.push(Vec::new()); // d = 0 placeholder
        for d in 1..=max_d {
            if d == 1 {
                rows.push(alloc::vec![1]);
                continue;
            }
            let prev = &rows[d - 1];
            let mut row = alloc::vec![0u128; d];
            for (k, slot) in row.iter_mut().enumerate() {
                let stay = if k < prev.len() {
                    (k as u128 + 1) * prev[k]
                } else {
                    0
                };
                let rise = if k >= 1 && k - 1 < prev.len() {
                    (d as u128 - k as u128) * prev[k - 1]
                } else {
                    0
                };
                *slot = stay + rise;
            }
            rows.push(row);
        }
        EulerianTable { rows }
    }

    pub fn get(&self, k: i64, d: usize) -> u128 {
        if d == 0 || d >= self.rows.len() || k < 0 || k as usize >= d {
            return 0;
        }
        self.rows[d][k as usize]
    }

    pub fn row(&self, d: usize) -> &[u128] {
        &self.rows[d]
    }
}

/// `A_{k,d}`: permutations of `S_d` with `k` descents. Zero out of range.
pub fn eulerian(k: i64, d: usize) -> u128 {
    EulerianTable::new(d.max(1)).get(k, d)
}

/// Sizes of the incomparable chains of a chain-product poset.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SegreSpec {
    sizes: Vec<u32>,
}

impl SegreSpec {
    /// `t >= 1` chains, every chain nonempty.
    pub fn new(sizes: &[u32]) -> Option<Self> {
        if sizes.is_empty() || sizes.iter().any(|&r| r == 0) || sizes.len() > 9 {
            return None;
        }
        Some(SegreSpec {
            sizes: sizes.to_vec(),
        })
    }

    pub fn sizes(&self) -> &[u32] {
        &self.sizes
    }

    pub fn chains(&self) -> usize {
        self.sizes.len()
    }

    /// `d = sum of sizes + 1`.
    pub fn dim(&self) -> usize {
        self.sizes.iter().map(|&r| r as usize).sum::<usize>() + 1
    }
}

/// Builds the chain-product poset (chains side by side between bot and top)
/// together with the distinguished spanning tree: all in-chain and top edges
/// plus the bottom edge of the last chain. The left-out bottom edges of
/// chains `1 .. t-1` carry the class coordinates, in chain order.
pub fn build_segre_poset(spec: &SegreSpec) -> (Poset, Vec<(String, String)>) {
    let t = spec.chains();
    let mut elements: Vec<String> = Vec::new();
    let mut covers: Vec<(String, String)> = Vec::new();
    for (i, &r) in spec.sizes.iter().enumerate() {
        let chain = i + 1;
        for j in 1..=r {
            elements.push(format!("p{chain}_{j}"));
        }
        for j in 1..r {
            covers.push((format!("p{chain}_{j}"), format!("p{chain}_{}", j + 1)));
        }
    }
    let poset = Poset::new(&elements, &covers).expect("valid chain product");
    let mut tree: Vec<(String, String)> = Vec::new();
    for (i, &r) in spec.sizes.iter().enumerate() {
        let chain = i + 1;
        for j in 1..r {
            tree.push((format!("p{chain}_{j}"), format!("p{chain}_{}", j + 1)));
        }
        tree.push((format!("p{chain}_{r}"), String::from("top")));
    }
    tree.push((String::from("bot"), format!("p{t}_1")));
    (poset, tree)
}

/// Membership in the class region of the all-ones chain product: entries in
/// `{-1, 0, 1}` with pairwise differences at most one, so no mixed signs.
fn in_two_var_region(c: &[i64]) -> bool {
    c.iter().all(|&v| (-1..=1).contains(&v))
        && !(c.contains(&1) && c.contains(&-1))
}

/// Closed form for the product of `t` two-element chains: the zero class
/// gets `2/(t+1)`; a class with `q > 0` entries of one sign gets
/// `1/(binom(t,q) (t+1))`, independent of the arrangement.
pub fn fsig_segre_2var(t: usize, c: &[i64]) -> Option<Rat> {
    if t < 1 || c.len() != t - 1 || !in_two_var_region(c) {
        return None;
    }
    let q = c.iter().filter(|&&v| v != 0).count();
    let t_plus_1 = Int::from(t as u64 + 1);
    if q == 0 {
        return Some(Rat::new(Int::from(2), t_plus_1));
    }
    let binom = binomial(t as u64, q as u64);
    Some(Rat::new(Int::one(), Int::from(binom) * t_plus_1))
}

fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// The hypersimplex slice `k-1 <= z_{d-1} - z_0 <= k` of the band region in
/// `R^{d-1}`, as an alcoved form.
pub fn hypersimplex_form(k: i64, d: usize) -> Option<AlcovedForm> {
    if d < 2 {
        return None;
    }
    let dim = d - 1;
    let mut raw: Vec<(usize, usize, i64, i64)> = (1..=dim).map(|i| (i - 1, i, 0, 1)).collect();
    raw.push((0, dim, k - 1, k));
    AlcovedForm::new(dim, &raw)
}

/// The same slice as a halfspace system.
pub fn hypersimplex_polytope(k: i64, d: usize) -> HPolytope {
    assert!(d >= 2);
    let dim = d - 1;
    let mut rows: Vec<(Vec<i64>, i64)> = Vec::new();
    for i in 1..=dim {
        // 0 <= z_i - z_{i-1} <= 1 with z_0 = 0.
        let mut up = alloc::vec![0i64; dim];
        up[i - 1] = 1;
        if i >= 2 {
            up[i - 2] = -1;
        }
        rows.push((up.clone(), 1));
        rows.push((up.iter().map(|&v| -v).collect(), 0));
    }
    let mut band = alloc::vec![0i64; dim];
    band[dim - 1] = 1;
    rows.push((band.clone(), k));
    rows.push((band.iter().map(|&v| -v).collect(), 1 - k));
    HPolytope::from_int_rows(dim, &rows)
}

/// Volume of the hypersimplex slice by the descent engine: permutations of
/// `S_{d-1}` with `k - 1` descents over `(d-1)!`.
pub fn hypersimplex_volume_descent(k: i64, d: usize) -> Rat {
    match hypersimplex_form(k, d) {
        Some(form) => descent_scan(d - 1, &[form], crate::DEFAULT_DESCENT_DIM_LIMIT, false)
            .expect("within scan limit")
            .value,
        None => Rat::new(Int::from(0), Int::one()),
    }
}

/// Signature of a class of the two-chain product with sizes `(r, s)`:
/// the volume of the hypersimplex slice `c + s + 1` in dimension `d + 1`,
/// `d = r + s + 1`. The descent engine value is authoritative.
pub fn fsig_segre_two_rings(r: u32, s: u32, c: i64) -> Option<Rat> {
    if c < -(s as i64) || c > r as i64 {
        return None;
    }
    let d = (r + s + 1) as usize;
    Some(hypersimplex_volume_descent(c + s as i64 + 1, d + 1))
}

/// The literally printed index form for the two-chain closed formula,
/// rendered for display next to the engine value: the descent-convention
/// identity is `A_{c+s, d} / d!`, one below the printed subscript.
pub fn two_rings_index_note(r: u32, s: u32, c: i64) -> String {
    let d = (r + s + 1) as usize;
    format!(
        "A({},{})/{}! (printed form A({},{}); descent convention shifts the index by one)",
        c + s as i64,
        d,
        d,
        c + s as i64 + 1,
        d
    )
}

/// Literal implementation of the two-condition permutation count for a
/// chain-product class: sum over offset tuples `alpha` of the number of
/// `w` in `S_d` with prescribed prefix descent counts and constrained
/// suffix descent counts.
pub fn fsig_segre_theorem(spec: &SegreSpec, c: &[i64]) -> Option<Rat> {
    let t = spec.chains();
    if c.len() != t - 1 {
        return None;
    }
    let sizes: Vec<i64> = spec.sizes.iter().map(|&r| r as i64).collect();
    let r_t = sizes[t - 1];
    // Region check: -r_t <= c_i <= r_i and -r_j <= c_i - c_j <= r_i.
    for (i, &ci) in c.iter().enumerate() {
        if ci < -r_t || ci > sizes[i] {
            return None;
        }
        for (j, &cj) in c.iter().enumerate().skip(i + 1) {
            if ci - cj < -sizes[j] || ci - cj > sizes[i] {
                return None;
            }
        }
    }
    let d = spec.dim();

    // Sentinel-free window positions: prefix condition (i) looks at
    // w_1 .. w_{E_i}, suffix condition (ii) at w_{P_i} .. w_d.
    let suffix_sum = |i: usize| -> i64 { sizes[i..t].iter().sum() };
    let prefix_end: Vec<usize> = (1..t).map(|i| (suffix_sum(i) + 1) as usize).collect();
    let suffix_start: Vec<usize> = (2..=t).map(|i| suffix_sum(i - 1) as usize).collect();

    let mut alphas: Vec<Vec<i64>> = alloc::vec![Vec::new()];
    for &r in &sizes[..t - 1] {
        let mut next = Vec::new();
        for a in alphas {
            for v in 0..=r {
                let mut b = a.clone();
                b.push(v);
                next.push(b);
            }
        }
        alphas = next;
    }

    let mut total: u64 = 0;
    for w in permutations(d) {
        let prefix = descent_prefix(&w);
        let w_d = w[d - 1];
        for alpha in &alphas {
            let tail: Vec<i64> = {
                // partial sums of alpha from each index to the end
                let mut acc = alloc::vec![0i64; t];
                for i in (0..t - 1).rev() {
                    acc[i] = acc[i + 1] + alpha[i];
                }
                acc
            };
            let mut ok = true;
            // (i): prescribed descent count of each prefix window.
            for i in 1..t {
                let want = r_t - sizes[i - 1] + c[i - 1] + tail[i - 1];
                let have = des_window(&prefix, 1, prefix_end[i - 1]) as i64;
                if have != want {
                    ok = false;
                    break;
                }
            }
            if !ok {
                continue;
            }
            // (ii): suffix window descent count within an offset pair, with
            // the tie broken against the last value.
            for i in 2..=t {
                let head: i64 = alpha[..i - 1].iter().sum();
                let start = suffix_start[i - 2];
                let have = des_window(&prefix, start, d) as i64;
                let w_start = w[start - 1];
                let lower_ok = have == head && w_start < w_d;
                let upper_ok = have == head + 1 && w_start > w_d;
                if !(lower_ok || upper_ok) {
                    ok = false;
                    break;
                }
            }
            if ok {
                total += 1;
            }
        }
    }
    let mut dfact = Int::one();
    for k in 1..=d {
        dfact *= Int::from(k as u64);
    }
    Some(Rat::new(Int::from(total), dfact))
}
