//! Exact arithmetic aliases and small helpers.

use alloc::string::String;
use alloc::format;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision integer.
pub type Int = BigInt;

/// Arbitrary-precision rational.
pub type Rat = BigRational;

/// Rational from an integer.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

/// Rational `n / d`.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(Int::from(n), Int::from(d))
}

/// Ceiling of a rational as a big integer.
pub fn ceil_int(r: &Rat) -> Int {
    r.ceil().to_integer()
}

/// Ceiling division of integers, `ceil(a / b)` with `b > 0`.
pub fn ceil_div_i64(a: i64, b: i64) -> i64 {
    debug_assert!(b > 0);
    a.div_euclid(b) + if a.rem_euclid(b) != 0 { 1 } else { 0 }
}

/// Formats a rational as `num/den`, keeping an explicit denominator even for
/// integers so output stays uniform.
pub fn format_ratio(r: &Rat) -> String {
    if r.denom().is_one() {
        format!("{}", r.numer())
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Best-effort decimal rendering with eight fractional digits.
pub fn format_decimal(r: &Rat) -> String {
    let num = r.numer().to_f64();
    let den = r.denom().to_f64();
    match (num, den) {
        (Some(n), Some(d)) if d != 0.0 => format!("{:.8}", n / d),
        _ => {
            // Magnitudes beyond f64: do scaled integer division instead.
            let scale = Int::from(100_000_000u64);
            let scaled = (r.numer() * &scale) / r.denom();
            let whole = &scaled / &scale;
            let frac = (&scaled % &scale).abs();
            format!("{whole}.{:08}", frac)
        }
    }
}

/// True when the rational is an integer.
pub fn is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

/// Sum of a slice of rationals.
pub fn rat_sum<'a, I: IntoIterator<Item = &'a Rat>>(items: I) -> Rat {
    items.into_iter().fold(Rat::zero(), |acc, r| acc + r)
}

/// Absolute value.
pub fn rat_abs(r: &Rat) -> Rat {
    r.abs()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ceil_div_matches_rational_ceiling() {
        for a in -9i64..=9 {
            for b in 1i64..=4 {
                let expect = ceil_int(&rat(a, b));
                assert_eq!(Int::from(ceil_div_i64(a, b)), expect, "a={a} b={b}");
            }
        }
    }

    #[test]
    fn ratio_formatting() {
        assert_eq!(format_ratio(&rat(54, 120)), "9/20");
        assert_eq!(format_ratio(&rat_int(3)), "3");
        assert_eq!(format_decimal(&rat(9, 20)), "0.45000000");
    }
}
