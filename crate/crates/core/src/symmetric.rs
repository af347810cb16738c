//! Element-order statistics in symmetric groups.
//!
//! Exact machinery: partitions as cycle types, unsigned/signed Stirling
//! numbers of the first kind, the Euler-product proportion `s_not` of
//! permutations of order coprime to a prime power, the derived proportion
//! `p_two_part` of permutations with a given 2-part order, and a brute-force
//! census oracle over partitions for small `n`.

use std::collections::BTreeMap;

use num::{BigInt, BigUint, One, Zero};

use crate::error::{domain, Result};
use crate::rat::{factorial, product_tree, rat_big, Rat};

/// Cycle type of a permutation: weakly decreasing positive parts.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.is_empty() {
            return domain("partition must have at least one part");
        }
        if parts.contains(&0) {
            return domain("partition parts must be positive");
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn n(&self) -> u64 {
        self.parts.iter().map(|&p| p as u64).sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Distinct part -> multiplicity.
    pub fn multiplicities(&self) -> BTreeMap<u32, u32> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// Proportion of the symmetric group carried by this cycle type:
    /// the reciprocal of the centralizer order prod(a^(m_a) * m_a!).
    pub fn class_weight(&self) -> Rat {
        let mut den = BigUint::one();
        for (a, m) in self.multiplicities() {
            den *= BigUint::from(a as u64).pow(m) * factorial(m as u64);
        }
        rat_big(BigUint::one(), den)
    }

    /// Order of a permutation of this cycle type (lcm of the parts).
    pub fn order(&self) -> u128 {
        self.parts
            .iter()
            .fold(1u128, |acc, &p| lcm_u128(acc, p as u128))
    }

    /// 2-part of the order: 2^(max 2-adic valuation over the parts).
    pub fn two_part_of_order(&self) -> u128 {
        let v = self
            .parts
            .iter()
            .map(|&p| p.trailing_zeros())
            .max()
            .unwrap_or(0);
        1u128 << v
    }
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        let t = a % b;
        a = b;
        b = t;
    }
    a
}

fn lcm_u128(a: u128, b: u128) -> u128 {
    a / gcd_u128(a, b) * b
}

/// Iterator over all partitions of `n` in reverse lexicographic order:
/// (n), (n-1,1), ..., (1,...,1). The order is fixed so table output and
/// class streams are reproducible.
pub struct Partitions {
    next: Option<Vec<u32>>,
}

impl Partitions {
    pub fn of(n: u32) -> Self {
        let next = if n == 0 { None } else { Some(vec![n]) };
        Partitions { next }
    }
}

impl Iterator for Partitions {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let cur = self.next.take()?;
        let item = Partition {
            parts: cur.clone(),
        };
        // Find the rightmost part > 1; everything after it is a tail of 1s.
        if let Some(i) = cur.iter().rposition(|&p| p > 1) {
            let ones = (cur.len() - i - 1) as u32;
            let m = cur[i] - 1;
            let mut total = cur[i] + ones;
            let mut succ = cur[..i].to_vec();
            while total > 0 {
                let part = m.min(total);
                succ.push(part);
                total -= part;
            }
            self.next = Some(succ);
        }
        Some(item)
    }
}

/// Unsigned Stirling numbers of the first kind: c(l, k) counts permutations
/// of l points with exactly k cycles. Rows are built from the recurrence
/// c(l,k) = c(l-1,k-1) + (l-1) c(l-1,k).
pub struct StirlingTable {
    rows: Vec<Vec<BigUint>>,
}

impl StirlingTable {
    pub fn up_to(max: u64) -> Self {
        let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(max as usize + 1);
        rows.push(vec![BigUint::one()]); // c(0,0) = 1
        for l in 1..=max {
            let prev = &rows[(l - 1) as usize];
            let mut row = vec![BigUint::zero(); l as usize + 1];
            for k in 1..=l as usize {
                let mut v = if k < prev.len() {
                    prev[k].clone() * BigUint::from(l - 1)
                } else {
                    BigUint::zero()
                };
                v += &prev[k - 1];
                row[k] = v;
            }
            rows.push(row);
        }
        StirlingTable { rows }
    }

    pub fn max(&self) -> u64 {
        self.rows.len() as u64 - 1
    }

    /// c(l, k); zero outside the triangle.
    pub fn c(&self, l: u64, k: u64) -> BigUint {
        if l > self.max() || k > l {
            return BigUint::zero();
        }
        self.rows[l as usize][k as usize].clone()
    }
}

/// c(l, k) for a single pair, 1 <= k <= l.
pub fn stirling_c(l: u64, k: u64) -> Result<BigUint> {
    if l == 0 || k == 0 || k > l {
        return domain(format!("stirling_c requires 1 <= k <= l, got l={l}, k={k}"));
    }
    let mut prev = vec![BigUint::zero(); l as usize + 1];
    prev[1] = BigUint::one(); // row l = 1
    for row in 2..=l {
        let mut cur = vec![BigUint::zero(); l as usize + 1];
        for kk in 1..=row as usize {
            let mut v = prev[kk].clone() * BigUint::from(row - 1);
            v += &prev[kk - 1];
            cur[kk] = v;
        }
        prev = cur;
    }
    Ok(prev[k as usize].clone())
}

/// Signed Stirling number of the first kind: s(l,k) = (-1)^(l-k) c(l,k).
pub fn stirling_s(l: u64, k: u64) -> Result<BigInt> {
    let c = BigInt::from(stirling_c(l, k)?);
    if (l - k).is_multiple_of(2) {
        Ok(c)
    } else {
        Ok(-c)
    }
}

/// Split of c(l,k) by the parity of the number of even-length cycles:
/// returns (count with an even number of even cycles, count with an odd
/// number). A cycle type with k parts summing to l has l = k - m (mod 2)
/// where m is the number of even parts, so one of the two is all of c(l,k).
pub fn c1_c2(l: u64, k: u64) -> Result<(BigUint, BigUint)> {
    let c = stirling_c(l, k)?;
    if (l % 2) == (k % 2) {
        Ok((c, BigUint::zero()))
    } else {
        Ok((BigUint::zero(), c))
    }
}

pub fn is_prime_power(m: u64) -> bool {
    if m < 2 {
        return false;
    }
    let mut p = 0u64;
    let mut x = m;
    let mut d = 2u64;
    while d.saturating_mul(d) <= x {
        if x.is_multiple_of(d) {
            p = d;
            break;
        }
        d += 1;
    }
    if p == 0 {
        return true; // m itself is prime
    }
    while x.is_multiple_of(p) {
        x /= p;
    }
    x == 1
}

/// Proportion of permutations in S_n whose order is not divisible by the
/// prime power p0: the partial Euler product prod_{u=1}^{floor(n/p0)}
/// (1 - 1/(u p0)). Empty product (p0 > n) gives 1.
pub fn s_not(n: u64, p0: u64) -> Result<Rat> {
    if n == 0 {
        return domain("s_not requires n >= 1");
    }
    if !is_prime_power(p0) {
        return domain(format!("s_not requires p0 to be a prime power, got {p0}"));
    }
    let m = n / p0;
    // prod (u p0 - 1) / (u p0) = prod(u p0 - 1) / (p0^m * m!)
    let numer_terms: Vec<BigUint> = (1..=m).map(|u| BigUint::from(u * p0 - 1)).collect();
    let numer = product_tree(&numer_terms);
    let denom = BigUint::from(p0).pow(m as u32) * factorial(m);
    Ok(rat_big(numer, denom))
}

/// Proportion of permutations in S_n with 2-part order exactly 2^j.
/// Zero when 2^j > n; for j = 0 this is the odd-order proportion s_not(n, 2).
pub fn p_two_part(n: u64, j: u32) -> Result<Rat> {
    if n == 0 {
        return domain("p_two_part requires n >= 1");
    }
    if j >= 64 || (1u64 << j) > n {
        return Ok(Rat::zero());
    }
    if j == 0 {
        return s_not(n, 2);
    }
    Ok(s_not(n, 1u64 << (j + 1))? - s_not(n, 1u64 << j)?)
}

/// Brute-force census of S_n by 2-part order, aggregated over cycle types.
/// The result maps each achieved 2-part order to its exact proportion;
/// values sum to 1. Capped at n <= 16: beyond that `p_two_part` is the
/// authoritative (and already cross-validated) route.
pub fn sn_census(n: u32) -> Result<BTreeMap<u128, Rat>> {
    if n == 0 || n > 16 {
        return domain(format!("sn_census requires 1 <= n <= 16, got {n}"));
    }
    let mut out: BTreeMap<u128, Rat> = BTreeMap::new();
    for part in Partitions::of(n) {
        let key = part.two_part_of_order();
        let w = part.class_weight();
        *out.entry(key).or_insert_with(Rat::zero) += w;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    /// Independent oracle: all permutations of {0..n-1} as index vectors.
    fn all_perms(n: usize) -> Vec<Vec<usize>> {
        fn rec(remaining: &mut Vec<usize>, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if remaining.is_empty() {
                out.push(cur.clone());
                return;
            }
            for i in 0..remaining.len() {
                let v = remaining.remove(i);
                cur.push(v);
                rec(remaining, cur, out);
                cur.pop();
                remaining.insert(i, v);
            }
        }
        let mut out = Vec::new();
        rec(&mut (0..n).collect(), &mut Vec::new(), &mut out);
        out
    }

    fn cycle_lengths(p: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; p.len()];
        let mut lens = Vec::new();
        for start in 0..p.len() {
            if seen[start] {
                continue;
            }
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = p[i];
                len += 1;
            }
            lens.push(len);
        }
        lens
    }

    fn perm_order(p: &[usize]) -> u64 {
        cycle_lengths(p)
            .iter()
            .fold(1u64, |acc, &l| num::integer::lcm(acc, l as u64))
    }

    #[test]
    fn stirling_small_values() {
        // Three transpositions of S_3 have 2 cycles.
        assert_eq!(stirling_c(3, 2).unwrap(), BigUint::from(3u32));
        assert_eq!(stirling_c(1, 1).unwrap(), BigUint::one());
        for l in 1..=8 {
            assert_eq!(stirling_c(l, l).unwrap(), BigUint::one());
        }
    }

    #[test]
    fn stirling_counts_cycles_of_s4() {
        // Oracle: enumerate all 24 permutations of S_4, count by cycle number.
        let mut by_cycles = [0u32; 5];
        for p in all_perms(4) {
            by_cycles[cycle_lengths(&p).len()] += 1;
        }
        assert_eq!(by_cycles[2], 11);
        assert_eq!(stirling_c(4, 2).unwrap(), BigUint::from(11u32));
        assert_eq!(stirling_c(4, 1).unwrap(), BigUint::from(by_cycles[1]));
        assert_eq!(stirling_c(4, 3).unwrap(), BigUint::from(by_cycles[3]));
    }

    #[test]
    fn stirling_rows_sum_to_factorial() {
        let table = StirlingTable::up_to(200);
        for l in 1..=200u64 {
            let sum: BigUint = (1..=l).map(|k| table.c(l, k)).sum();
            assert_eq!(sum, factorial(l), "row {l}");
        }
    }

    #[test]
    fn stirling_signed() {
        assert_eq!(stirling_s(3, 2).unwrap(), BigInt::from(-3));
        // (-1)^2 * c(4,2), c(4,2) frozen from the S_4 enumeration above.
        assert_eq!(stirling_s(4, 2).unwrap(), BigInt::from(11));
        for l in 1..=10 {
            assert_eq!(stirling_s(l, l).unwrap(), BigInt::one());
        }
        assert!(stirling_c(4, 5).is_err());
        assert!(stirling_c(4, 0).is_err());
    }

    #[test]
    fn c1_c2_matches_partition_classification() {
        // Oracle: classify every cycle type of S_l directly by the parity of
        // its number of even parts, weighting by class size l!/centralizer.
        let table = StirlingTable::up_to(12);
        for l in 1..=12u32 {
            let fact = factorial(l as u64);
            for k in 1..=l as u64 {
                let mut even = BigUint::zero();
                let mut odd = BigUint::zero();
                for part in Partitions::of(l) {
                    if part.len() as u64 != k {
                        continue;
                    }
                    let size_rat = part.class_weight() * Rat::from_integer(BigInt::from(fact.clone()));
                    assert!(size_rat.denom().is_one());
                    let size: BigUint = size_rat.numer().to_biguint().unwrap();
                    let evens = part.parts().iter().filter(|&&a| a % 2 == 0).count();
                    if evens % 2 == 0 {
                        even += size;
                    } else {
                        odd += size;
                    }
                }
                let (c1, c2) = c1_c2(l as u64, k).unwrap();
                assert_eq!(c1, even, "c1 at l={l}, k={k}");
                assert_eq!(c2, odd, "c2 at l={l}, k={k}");
                assert_eq!(c1.clone() + c2.clone(), table.c(l as u64, k));
            }
        }
    }

    #[test]
    fn c1_c2_examples() {
        assert_eq!(
            c1_c2(4, 2).unwrap(),
            (BigUint::from(11u32), BigUint::zero())
        );
        assert_eq!(c1_c2(3, 2).unwrap(), (BigUint::zero(), BigUint::from(3u32)));
        for l in 1..=10 {
            assert_eq!(c1_c2(l, l).unwrap(), (BigUint::one(), BigUint::zero()));
        }
    }

    #[test]
    fn s_not_small_cases_against_enumeration() {
        // S_2: one odd-order element of two.
        assert_eq!(s_not(2, 2).unwrap(), rat(1, 2));

        // S_4: count elements of odd order directly.
        let odd4 = all_perms(4)
            .iter()
            .filter(|p| perm_order(p) % 2 == 1)
            .count();
        assert_eq!(odd4, 9);
        assert_eq!(s_not(4, 2).unwrap(), rat(3, 8));

        // S_5: elements of order not divisible by 3.
        let no3 = all_perms(5)
            .iter()
            .filter(|p| !perm_order(p).is_multiple_of(3))
            .count();
        assert_eq!(no3, 80);
        assert_eq!(s_not(5, 3).unwrap(), rat(2, 3));
    }

    #[test]
    fn s_not_rejects_non_prime_powers() {
        assert!(s_not(10, 6).is_err());
        assert!(s_not(10, 1).is_err());
        assert!(s_not(0, 2).is_err());
        // Empty product above n.
        assert_eq!(s_not(3, 8).unwrap(), Rat::one());
    }

    #[test]
    fn p_two_part_examples() {
        // The six 4-cycles of S_4.
        assert_eq!(p_two_part(4, 2).unwrap(), rat(1, 4));
        // 6 transpositions + 3 double transpositions of S_4.
        assert_eq!(p_two_part(4, 1).unwrap(), rat(3, 8));
        assert_eq!(p_two_part(4, 3).unwrap(), Rat::zero());
        for n in 1..=12u64 {
            assert_eq!(p_two_part(n, 0).unwrap(), s_not(n, 2).unwrap());
        }
    }

    #[test]
    fn p_two_part_sums_to_one() {
        for n in 1..=200u64 {
            let mut sum = Rat::zero();
            let mut j = 0u32;
            while (1u64 << j) <= n {
                sum += p_two_part(n, j).unwrap();
                j += 1;
            }
            assert_eq!(sum, Rat::one(), "n={n}");
        }
    }

    #[test]
    fn s_not_monotone_in_n() {
        for &p0 in &[2u64, 3, 4, 5, 8] {
            let mut prev = Rat::one();
            for n in 1..=60 {
                let v = s_not(n, p0).unwrap();
                assert!(v <= prev, "s_not({n},{p0}) increased");
                assert!(v > Rat::zero() && v <= Rat::one());
                prev = v;
            }
        }
    }

    #[test]
    fn census_small_examples() {
        let c4 = sn_census(4).unwrap();
        assert_eq!(c4.get(&1), Some(&rat(3, 8)));
        assert_eq!(c4.get(&2), Some(&rat(3, 8)));
        assert_eq!(c4.get(&4), Some(&rat(1, 4)));
        assert_eq!(c4.len(), 3);

        let c1 = sn_census(1).unwrap();
        assert_eq!(c1.get(&1), Some(&Rat::one()));
        assert_eq!(c1.len(), 1);

        assert!(sn_census(0).is_err());
        assert!(sn_census(17).is_err());
    }

    #[test]
    fn census_agrees_with_formula_at_n12() {
        let census = sn_census(12).unwrap();
        let mut j = 0u32;
        while (1u64 << j) <= 12 {
            let formula = p_two_part(12, j).unwrap();
            let counted = census.get(&(1u128 << j)).cloned().unwrap_or_else(Rat::zero);
            assert_eq!(counted, formula, "j={j}");
            j += 1;
        }
    }

    #[test]
    fn partitions_reverse_lex_order() {
        let got: Vec<Vec<u32>> = Partitions::of(4).map(|p| p.parts().to_vec()).collect();
        assert_eq!(
            got,
            vec![
                vec![4],
                vec![3, 1],
                vec![2, 2],
                vec![2, 1, 1],
                vec![1, 1, 1, 1]
            ]
        );
        assert_eq!(Partitions::of(10).count(), 42);
    }

    #[test]
    fn partition_weights_sum_to_one() {
        for n in 1..=20u32 {
            let total: Rat = Partitions::of(n).map(|p| p.class_weight()).sum();
            assert_eq!(total, Rat::one(), "n={n}");
        }
    }

    #[test]
    fn partition_order_and_weight_match_enumeration() {
        // Class sizes of S_5 derived from weights must add up by order.
        let mut by_order_enum: BTreeMap<u64, usize> = BTreeMap::new();
        for p in all_perms(5) {
            *by_order_enum.entry(perm_order(&p)).or_insert(0) += 1;
        }
        let mut by_order_parts: BTreeMap<u64, Rat> = BTreeMap::new();
        for part in Partitions::of(5) {
            *by_order_parts
                .entry(part.order() as u64)
                .or_insert_with(Rat::zero) += part.class_weight();
        }
        for (order, count) in by_order_enum {
            let expected = Rat::new(BigInt::from(count), BigInt::from(120));
            assert_eq!(by_order_parts.get(&order), Some(&expected), "order {order}");
        }
    }
}
