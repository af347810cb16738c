//! Property tests for the structural invariants.

use num::{One, Zero};
use proptest::prelude::*;

use twopart::bounds::{torus_fraction, BoundMode};
use twopart::census::CensusTable;
use twopart::rat::{rat_u128, Rat};
use twopart::symmetric::s_not;
use twopart::weyl::{FactorKind, TorusShape};

fn shape_strategy() -> impl Strategy<Value = TorusShape> {
    // Exponent/kind pairs over a few odd q; every such order is even, with
    // 2-adic valuation varying with the residue of q and parity of a.
    let factor = (1u32..6, prop::bool::ANY);
    (prop::sample::select(vec![3u64, 5, 7, 9, 11]), prop::collection::vec(factor, 1..5)).prop_map(
        |(q, parts)| {
            let parts: Vec<(u32, FactorKind)> = parts
                .into_iter()
                .map(|(a, minus)| {
                    (
                        a,
                        if minus {
                            FactorKind::MinusOne
                        } else {
                            FactorKind::PlusOne
                        },
                    )
                })
                .collect();
            TorusShape::build(q, &parts).unwrap()
        },
    )
}

proptest! {
    /// The exact per-torus distribution is a probability distribution over
    /// the achievable 2-part orders, and the portable constants never exceed
    /// the exact mass at any target.
    #[test]
    fn torus_fraction_is_a_distribution(shape in shape_strategy()) {
        let mut total = Rat::zero();
        let mut target = 1u128;
        while target <= shape.two_exp() {
            let exact = torus_fraction(&shape, target, BoundMode::ExactTori).unwrap();
            let paper = torus_fraction(&shape, target, BoundMode::Paper).unwrap();
            prop_assert!(exact >= Rat::zero());
            prop_assert!(paper <= exact);
            total += exact;
            target <<= 1;
        }
        prop_assert_eq!(total, Rat::one());
    }

    /// s_not is a probability, non-increasing in n for a fixed prime power.
    #[test]
    fn s_not_monotone(n in 1u64..400, p0 in prop::sample::select(vec![2u64, 3, 4, 5, 7, 8, 9, 16])) {
        let v = s_not(n, p0).unwrap();
        prop_assert!(v > Rat::zero() && v <= Rat::one());
        let w = s_not(n + 1, p0).unwrap();
        prop_assert!(w <= v);
    }

    /// Trichotomy of the pair event for arbitrary censuses.
    #[test]
    fn pm_trichotomy(a in prop::collection::btree_map(0u32..8, 1u128..50, 1..5),
                     b in prop::collection::btree_map(0u32..8, 1u128..50, 1..5)) {
        let mk = |m: std::collections::BTreeMap<u32, u128>| {
            let by_two_part: std::collections::BTreeMap<u128, u128> =
                m.into_iter().map(|(j, c)| (1u128 << j, c)).collect();
            let total = by_two_part.values().sum();
            CensusTable { total, by_two_part, approximate: false }
        };
        let (ca, cb) = (mk(a), mk(b));
        let gt = twopart::census::pm_exact(&ca, &cb);
        let lt = twopart::census::pm_exact(&cb, &ca);
        let ties: Rat = ca
            .by_two_part
            .iter()
            .map(|(&k, &n)| {
                let m = cb.by_two_part.get(&k).copied().unwrap_or(0);
                rat_u128(n * m, 1)
            })
            .sum::<Rat>()
            / rat_u128(ca.total * cb.total, 1);
        prop_assert_eq!(gt + lt + ties, Rat::one());
    }

    /// The wide-rank coefficient row maps any monotone s-values in (0,1]
    /// into (0, 57/500].
    #[test]
    fn wide_rank_coefficients_bounded(s in prop::collection::vec(0.0001f64..=1.0, 4)) {
        let v = (2.0 * s[0] + 7.0 * s[1] + 19.0 * s[2] + 29.0 * s[3]) / 500.0;
        prop_assert!(v > 0.0 && v <= 57.0 / 500.0 + 1e-15);
    }
}
