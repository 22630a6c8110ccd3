//! Permutations in one-line notation and descent statistics.

use alloc::string::String;
use alloc::vec::Vec;

/// Iterates over all of `S_d` in lexicographic order. Values are `1..=d`.
pub struct Permutations {
    current: Vec<u8>,
    exhausted: bool,
}

/// All permutations of `{1, .., d}` in lexicographic one-line order.
pub fn permutations(d: usize) -> Permutations {
    Permutations {
        current: (1..=d as u8).collect(),
        exhausted: false,
    }
}

impl Iterator for Permutations {
    type Item = Vec<u8>;

    fn next(&mut self) -> Option<Vec<u8>> {
        if self.exhausted {
            return None;
        }
        let out = self.current.clone();
        if !next_permutation(&mut self.current) {
            self.exhausted = true;
        }
        Some(out)
    }
}

fn next_permutation(w: &mut [u8]) -> bool {
    if w.len() < 2 {
        return false;
    }
    let mut i = w.len() - 1;
    while i > 0 && w[i - 1] >= w[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = w.len() - 1;
    while w[j] <= w[i - 1] {
        j -= 1;
    }
    w.swap(i - 1, j);
    w[i..].reverse();
    true
}

/// Descent prefix counts with the sentinel `w_0 = 0`: entry `k` is the number
/// of descents among positions `0..k` of `(0, w_1, .., w_d)`, so the descents
/// of the window `w_i .. w_j` number `prefix[j] - prefix[i]`.
pub fn descent_prefix(w: &[u8]) -> Vec<u32> {
    let mut prefix = Vec::with_capacity(w.len() + 1);
    prefix.push(0u32);
    let mut last = 0u8; // sentinel
    let mut acc = 0u32;
    for &v in w {
        if last > v {
            acc += 1;
        }
        prefix.push(acc);
        last = v;
    }
    prefix
}

/// Number of descents of the window `w_i .. w_j` (sentinel-indexed).
#[inline]
pub fn des_window(prefix: &[u32], i: usize, j: usize) -> u32 {
    prefix[j] - prefix[i]
}

/// Value at sentinel-indexed position `i` (`w_0 = 0`).
#[inline]
pub fn value_at(w: &[u8], i: usize) -> u8 {
    if i == 0 {
        0
    } else {
        w[i - 1]
    }
}

/// The complement involution `w_i -> d + 1 - w_i`.
pub fn complement(w: &[u8]) -> Vec<u8> {
    let d = w.len() as u8;
    w.iter().map(|&v| d + 1 - v).collect()
}

/// One-line rendering, digits for `d <= 9`, comma-separated beyond.
pub fn one_line(w: &[u8]) -> String {
    use core::fmt::Write;
    let mut s = String::new();
    if w.len() <= 9 {
        for &v in w {
            let _ = write!(s, "{v}");
        }
    } else {
        for (i, &v) in w.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            let _ = write!(s, "{v}");
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lexicographic_order_and_count() {
        let all: Vec<Vec<u8>> = permutations(3).collect();
        assert_eq!(all.len(), 6);
        assert_eq!(all[0], alloc::vec![1, 2, 3]);
        assert_eq!(all[5], alloc::vec![3, 2, 1]);
        assert!(all.windows(2).all(|p| p[0] < p[1]));
        assert_eq!(permutations(8).count(), 40320);
    }

    #[test]
    fn descent_windows() {
        // w = 3 1 4 2, sentinel 0: descents at positions 1 (3>1) and 3 (4>2).
        let w = [3u8, 1, 4, 2];
        let prefix = descent_prefix(&w);
        assert_eq!(des_window(&prefix, 0, 4), 2);
        assert_eq!(des_window(&prefix, 1, 3), 1);
        assert_eq!(des_window(&prefix, 2, 3), 0);
        assert_eq!(value_at(&w, 0), 0);
        assert_eq!(value_at(&w, 2), 1);
    }

    #[test]
    fn complement_is_involution() {
        for w in permutations(5) {
            assert_eq!(complement(&complement(&w)), w);
        }
    }

    #[test]
    fn rendering() {
        assert_eq!(one_line(&[1, 4, 5, 2, 3]), "14523");
    }
}
