//! Closed forms for the weighted Stirling-number sums
//! sum_k c(l,k) x^k and sum_k s(l,k) x^k at x = 1/2 and x = 1/4,
//! their even-k / odd-k splits, and numeric verification of the simplified
//! inequality floors used by the bound modules.
//!
//! Everything here is exact rational except `check_simplified_bounds`, whose
//! comparisons involve sqrt(pi) and fractional powers and are evaluated in
//! binary floating point with a documented 1e-12 relative margin.

use num::{BigInt, BigUint};

use crate::error::{domain, Result};
use crate::rat::{factorial, pow2, rat_big, Rat};

fn require_positive(l: u64) -> Result<()> {
    if l == 0 {
        return domain("summation index l must be >= 1");
    }
    Ok(())
}

/// sum_{k=1}^{l} c(l,k) / 2^k  =  (2l)! / (2^(2l) l!).
pub fn sum_a(l: u64) -> Result<Rat> {
    require_positive(l)?;
    Ok(rat_big(factorial(2 * l), pow2(2 * l) * factorial(l)))
}

/// sum_{k=1}^{l} s(l,k) / 2^k  =  (-1)^(l-1) (2l-2)! / (2^(2l-1) (l-1)!).
pub fn sum_b(l: u64) -> Result<Rat> {
    require_positive(l)?;
    let mag = rat_big(factorial(2 * l - 2), pow2(2 * l - 1) * factorial(l - 1));
    Ok(if l % 2 == 1 { mag } else { -mag })
}

/// sum_{k=1}^{l} c(l,k) / 4^k  =  prod_{i=1}^{l} (4i-3) / 4^l.
pub fn sum_c(l: u64) -> Result<Rat> {
    require_positive(l)?;
    let terms: Vec<BigUint> = (1..=l).map(|i| BigUint::from(4 * i - 3)).collect();
    Ok(rat_big(crate::rat::product_tree(&terms), pow2(2 * l)))
}

/// |sum_d|: prod_{i=1}^{l-1} (4i-1) / 4^l. Exposed because the even/odd
/// quarter-sum splits are (sum_c -/+ this)/2.
pub fn gamma_quarter_product(l: u64) -> Result<Rat> {
    require_positive(l)?;
    let terms: Vec<BigUint> = (1..l).map(|i| BigUint::from(4 * i - 1)).collect();
    Ok(rat_big(crate::rat::product_tree(&terms), pow2(2 * l)))
}

/// sum_{k=1}^{l} s(l,k) / 4^k  =  (-1)^(l-1) prod_{i=1}^{l-1} (4i-1) / 4^l.
pub fn sum_d(l: u64) -> Result<Rat> {
    let mag = gamma_quarter_product(l)?;
    Ok(if l % 2 == 1 { mag } else { -mag })
}

/// sum over even k of c(l,k)/2^k  =  (2l)!/(2^(2l+1) l!) * (2l-2)/(2l-1).
pub fn half_sum_even_2(l: u64) -> Result<Rat> {
    require_positive(l)?;
    let base = rat_big(factorial(2 * l), pow2(2 * l + 1) * factorial(l));
    Ok(base * rat_big(BigUint::from(2 * l - 2), BigUint::from(2 * l - 1)))
}

/// sum over odd k of c(l,k)/2^k  =  (2l)!/(2^(2l+1) l!) * (2l)/(2l-1).
pub fn half_sum_odd_2(l: u64) -> Result<Rat> {
    require_positive(l)?;
    let base = rat_big(factorial(2 * l), pow2(2 * l + 1) * factorial(l));
    Ok(base * rat_big(BigUint::from(2 * l), BigUint::from(2 * l - 1)))
}

/// sum over even k of c(l,k)/4^k  =  (sum_c - gamma_quarter_product)/2.
pub fn half_sum_even_4(l: u64) -> Result<Rat> {
    let two = Rat::from_integer(BigInt::from(2));
    Ok((sum_c(l)? - gamma_quarter_product(l)?) / two)
}

/// sum over odd k of c(l,k)/4^k  =  (sum_c + gamma_quarter_product)/2.
pub fn half_sum_odd_4(l: u64) -> Result<Rat> {
    let two = Rat::from_integer(BigInt::from(2));
    Ok((sum_c(l)? + gamma_quarter_product(l)?) / two)
}

/// One failed comparison in the simplified-bound sweep.
#[derive(Debug, Clone)]
pub struct BoundViolation {
    pub l: u64,
    pub check: &'static str,
    pub lhs: f64,
    pub rhs: f64,
}

const REL_MARGIN: f64 = 1e-12;

fn ok_lt(lhs: f64, rhs: f64) -> bool {
    lhs < rhs * (1.0 + REL_MARGIN)
}

fn ok_ge(lhs: f64, rhs: f64) -> bool {
    lhs >= rhs * (1.0 - REL_MARGIN)
}

/// Sweep l = 2..=l_max and check the proved floating-point floors:
///  - central binomial ratio (2l)!/((l!)^2 4^l) >= 25/(29 sqrt(pi l));
///  - 1/(4(l+1)^(3/4)) < sum_c(l)/l! < 3/(5(l+1)^(3/4));
///  - 1/(5(l+1)^(5/4)) < gamma_quarter_product(l)/l! < 18/(25(l+1)^(5/4));
///  - the bracket bounds on the even and odd quarter-sums divided by l!.
///
/// Returns the list of violations (expected empty; the inequalities hold
/// for every l >= 2).
pub fn check_simplified_bounds(l_max: u64) -> Result<Vec<BoundViolation>> {
    if l_max < 2 {
        return domain("check_simplified_bounds requires l_max >= 2");
    }
    let mut violations = Vec::new();
    // Running products, all well-conditioned (every factor is in (0,1)).
    let mut binom = 0.5; // l = 1: (2l)!/((l!)^2 4^l)
    let mut cf = 0.25; // l = 1: sum_c(l)/l!
    let mut gprod = 1.0; // prod_{i=1}^{l-1} (4i-1)/(4i)
    for l in 2..=l_max {
        let lf = l as f64;
        binom *= (2.0 * lf - 1.0) / (2.0 * lf);
        cf *= (4.0 * lf - 3.0) / (4.0 * lf);
        gprod *= (4.0 * (lf - 1.0) - 1.0) / (4.0 * (lf - 1.0));
        let gf = gprod / (4.0 * lf); // gamma_quarter_product(l)/l!
        let even = (cf - gf) / 2.0;
        let odd = (cf + gf) / 2.0;

        let x34 = (lf + 1.0).powf(0.75);
        let x54 = (lf + 1.0).powf(1.25);
        let mut check = |name: &'static str, ok: bool, lhs: f64, rhs: f64| {
            if !ok {
                violations.push(BoundViolation {
                    l,
                    check: name,
                    lhs,
                    rhs,
                });
            }
        };

        let floor = 25.0 / (29.0 * (std::f64::consts::PI * lf).sqrt());
        check("central-binomial-floor", ok_ge(binom, floor), binom, floor);

        check("quarter-sum-lower", ok_lt(1.0 / (4.0 * x34), cf), 1.0 / (4.0 * x34), cf);
        check("quarter-sum-upper", ok_lt(cf, 3.0 / (5.0 * x34)), cf, 3.0 / (5.0 * x34));

        check("gamma-term-lower", ok_lt(1.0 / (5.0 * x54), gf), 1.0 / (5.0 * x54), gf);
        check(
            "gamma-term-upper",
            ok_lt(gf, 18.0 / (25.0 * x54)),
            gf,
            18.0 / (25.0 * x54),
        );

        let even_lo = 1.0 / (8.0 * x34) - 9.0 / (25.0 * x54);
        let even_hi = 3.0 / (10.0 * x34) - 1.0 / (10.0 * x54);
        check("even-quarter-lower", ok_lt(even_lo, even), even_lo, even);
        check("even-quarter-upper", ok_lt(even, even_hi), even, even_hi);

        let odd_lo = 1.0 / (8.0 * x34) + 1.0 / (10.0 * x54);
        let odd_hi = 3.0 / (10.0 * x34) + 9.0 / (25.0 * x54);
        check("odd-quarter-lower", ok_lt(odd_lo, odd), odd_lo, odd);
        check("odd-quarter-upper", ok_lt(odd, odd_hi), odd, odd_hi);
    }
    Ok(violations)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::{inv_pow2, rat, to_f64};
    use crate::symmetric::StirlingTable;
    use num::Zero;

    /// Direct sums straight from the Stirling table; the oracle the closed
    /// forms are checked against.
    fn direct_sums(table: &StirlingTable, l: u64) -> (Rat, Rat, Rat, Rat) {
        let mut a = Rat::zero();
        let mut b = Rat::zero();
        let mut c = Rat::zero();
        let mut d = Rat::zero();
        for k in 1..=l {
            let ck = Rat::from_integer(BigInt::from(table.c(l, k)));
            let sign = if (l - k).is_multiple_of(2) { Rat::one() } else { -Rat::one() };
            a += ck.clone() * inv_pow2(k);
            b += ck.clone() * sign.clone() * inv_pow2(k);
            c += ck.clone() * inv_pow2(2 * k);
            d += ck * sign * inv_pow2(2 * k);
        }
        (a, b, c, d)
    }

    use num::{BigInt, One};

    #[test]
    fn closed_forms_match_direct_sums() {
        let table = StirlingTable::up_to(60);
        for l in 1..=60 {
            let (a, b, c, d) = direct_sums(&table, l);
            assert_eq!(sum_a(l).unwrap(), a, "A at {l}");
            assert_eq!(sum_b(l).unwrap(), b, "B at {l}");
            assert_eq!(sum_c(l).unwrap(), c, "C at {l}");
            assert_eq!(sum_d(l).unwrap(), d, "D at {l}");
        }
    }

    #[test]
    fn half_sums_match_direct_splits() {
        let table = StirlingTable::up_to(60);
        for l in 1..=60 {
            let mut even2 = Rat::zero();
            let mut odd2 = Rat::zero();
            let mut even4 = Rat::zero();
            let mut odd4 = Rat::zero();
            for k in 1..=l {
                let ck = Rat::from_integer(BigInt::from(table.c(l, k)));
                if k % 2 == 0 {
                    even2 += ck.clone() * inv_pow2(k);
                    even4 += ck * inv_pow2(2 * k);
                } else {
                    odd2 += ck.clone() * inv_pow2(k);
                    odd4 += ck * inv_pow2(2 * k);
                }
            }
            assert_eq!(half_sum_even_2(l).unwrap(), even2, "even2 at {l}");
            assert_eq!(half_sum_odd_2(l).unwrap(), odd2, "odd2 at {l}");
            assert_eq!(half_sum_even_4(l).unwrap(), even4, "even4 at {l}");
            assert_eq!(half_sum_odd_4(l).unwrap(), odd4, "odd4 at {l}");
        }
    }

    #[test]
    fn pinned_small_values() {
        // Direct sums at l=2: c(2,1)=1, c(2,2)=1.
        assert_eq!(sum_a(2).unwrap(), rat(3, 4));
        assert_eq!(sum_c(2).unwrap(), rat(5, 16));
        assert_eq!(sum_b(1).unwrap(), rat(1, 2));
        assert_eq!(half_sum_even_2(2).unwrap(), rat(1, 4));
        assert_eq!(half_sum_odd_2(2).unwrap(), rat(1, 2));
        assert_eq!(half_sum_even_4(2).unwrap(), rat(1, 16));
        assert_eq!(half_sum_odd_4(2).unwrap(), rat(1, 4));
        assert!(sum_a(0).is_err());
    }

    #[test]
    fn half_sums_partition_the_full_sums() {
        for l in 1..=100 {
            assert_eq!(
                half_sum_even_2(l).unwrap() + half_sum_odd_2(l).unwrap(),
                sum_a(l).unwrap()
            );
            assert_eq!(
                half_sum_even_4(l).unwrap() + half_sum_odd_4(l).unwrap(),
                sum_c(l).unwrap()
            );
        }
    }

    #[test]
    fn half_sums_positive_from_two() {
        for l in 2..=64 {
            assert!(half_sum_even_2(l).unwrap() > Rat::zero());
            assert!(half_sum_odd_2(l).unwrap() > Rat::zero());
            assert!(half_sum_even_4(l).unwrap() > Rat::zero());
            assert!(half_sum_odd_4(l).unwrap() > Rat::zero());
        }
    }

    #[test]
    fn simplified_bounds_hold_on_a_sweep() {
        let violations = check_simplified_bounds(1000).unwrap();
        assert!(violations.is_empty(), "{violations:?}");
        assert!(check_simplified_bounds(1).is_err());
    }

    #[test]
    fn quarter_sum_bracket_at_two() {
        // sum_c(2)/2! = 5/32 lies strictly inside the (l+1)^(3/4) bracket.
        let mid = to_f64(&(sum_c(2).unwrap() / rat(2, 1)));
        assert!((mid - 0.15625).abs() < 1e-15);
        let lo = 1.0 / (4.0 * 3f64.powf(0.75));
        let hi = 3.0 / (5.0 * 3f64.powf(0.75));
        assert!(lo < mid && mid < hi);
        assert!((lo - 0.1097).abs() < 5e-4);
        assert!((hi - 0.2633).abs() < 5e-4);
    }
}
