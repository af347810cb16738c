//! Exact rational arithmetic helpers.
//!
//! Every probability and exact bound in this crate is a `Rat`
//! (arbitrary-precision rational, always in lowest terms, denominator > 0).
//! Floating point appears only in the explicitly float-valued bounds and in
//! display code.

use num::bigint::BigInt;
use num::rational::Ratio;
use num::{BigUint, One, ToPrimitive, Zero};

pub type Rat = Ratio<BigInt>;

pub fn rat(num: i64, den: i64) -> Rat {
    Ratio::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_int(n: i64) -> Rat {
    Ratio::from_integer(BigInt::from(n))
}

pub fn rat_big(num: BigUint, den: BigUint) -> Rat {
    Ratio::new(BigInt::from(num), BigInt::from(den))
}

pub fn rat_u128(num: u128, den: u128) -> Rat {
    Ratio::new(BigInt::from(num), BigInt::from(den))
}

/// 2^j as an unsigned big integer.
pub fn pow2(j: u64) -> BigUint {
    BigUint::one() << j
}

/// 1 / 2^j.
pub fn inv_pow2(j: u64) -> Rat {
    Ratio::new(BigInt::one(), BigInt::from(pow2(j)))
}

pub fn to_f64(r: &Rat) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Render a rational as `num/den`, or just `num` for integers.
pub fn fmt_rat(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Fixed 10-decimal rendering used for all float table output.
pub fn fmt_f64(x: f64) -> String {
    format!("{:.10}", x)
}

/// Product of a slice of big integers via a balanced tree. Keeps the
/// intermediate operands of comparable size, which is what makes exact
/// evaluation of long products (factorials, partial Euler products) cheap.
pub fn product_tree(terms: &[BigUint]) -> BigUint {
    match terms.len() {
        0 => BigUint::one(),
        1 => terms[0].clone(),
        n => {
            let (a, b) = terms.split_at(n / 2);
            product_tree(a) * product_tree(b)
        }
    }
}

pub fn factorial(n: u64) -> BigUint {
    let terms: Vec<BigUint> = (1..=n).map(BigUint::from).collect();
    product_tree(&terms)
}

/// Balanced summation of many rationals. Linear accumulation re-reduces a
/// huge running denominator on every step; the tree pays the big reductions
/// only near the root.
pub fn sum_tree(mut terms: Vec<Rat>) -> Rat {
    if terms.is_empty() {
        return Rat::zero();
    }
    while terms.len() > 1 {
        let mut next = Vec::with_capacity(terms.len() / 2 + 1);
        let mut it = terms.into_iter();
        while let Some(a) = it.next() {
            match it.next() {
                Some(b) => next.push(a + b),
                None => next.push(a),
            }
        }
        terms = next;
    }
    terms.pop().unwrap()
}

/// Largest power of two dividing `x` (as the power itself).
pub fn two_part_u128(x: u128) -> u128 {
    assert!(x > 0, "two_part_u128 of zero");
    1u128 << x.trailing_zeros()
}

pub fn is_zero(r: &Rat) -> bool {
    r.numer().is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_tree_matches_factorial() {
        assert_eq!(factorial(0), BigUint::one());
        assert_eq!(factorial(10), BigUint::from(3_628_800u64));
    }

    #[test]
    fn rational_display() {
        assert_eq!(fmt_rat(&rat(5, 32)), "5/32");
        assert_eq!(fmt_rat(&rat(4, 2)), "2");
        assert_eq!(fmt_rat(&rat(-3, 9)), "-1/3");
    }

    #[test]
    fn two_parts() {
        assert_eq!(two_part_u128(24), 8);
        assert_eq!(two_part_u128(7), 1);
        assert_eq!(two_part_u128(64), 64);
    }
}
