//! Cross-module checks: exhaustive censuses against the closed-form and
//! torus-sum machinery, and product censuses against the pair bounds.

use num::Zero;
use twopart::bounds::{named_bound, odd_twice_odd, quokka_lower_bound, BoundMode};
use twopart::census::{builtin_generators, census, pm_exact, BuiltinFamily, DEFAULT_BUDGET};
use twopart::involutions::{pm_balanced_bound, pm_general_bound, CentralizerKind, CentralizerSpec};
use twopart::rat::{to_f64, Rat};
use twopart::weyl::{Family, GroupSpec};

#[test]
fn gl2_3_minimal_exponent_row_vs_census() {
    // GL_2(3) at target (q-1)_2 = 2: the named row gives p_2(1)/2 = 1/4 with
    // float floor 1/(2 sqrt(4 pi)); the census proportion is 21/48.
    let input = builtin_generators(BuiltinFamily::Gl, 2, 3).unwrap();
    let table = census(&input, DEFAULT_BUDGET).unwrap();
    let spec = GroupSpec::new(Family::Gl, 2, 3).unwrap();
    let row = named_bound(&spec, 2).unwrap();
    let float = row.simplified.unwrap();
    assert!((float - 1.0 / (2.0 * (4.0 * std::f64::consts::PI).sqrt())).abs() < 1e-15);
    assert!((float - 0.1410).abs() < 5e-4);
    assert!(table.proportion(2) >= row.value.exact().unwrap().clone());
}

#[test]
fn sp4_3_odd_and_twice_odd_vs_census() {
    let input = builtin_generators(BuiltinFamily::Sp, 4, 3).unwrap();
    let table = census(&input, DEFAULT_BUDGET).unwrap();
    let spec = GroupSpec::new(Family::Sp, 2, 3).unwrap();
    let report = odd_twice_odd(&spec).unwrap();
    assert!(table.proportion(1) >= report.odd.value.exact().unwrap().clone());
    assert!(table.proportion(2) >= report.twice_odd.value.exact().unwrap().clone());
    // The dimension-scaled constants stay positive.
    assert!(report.odd_dim_scaled > 0.0);
    assert!(report.twice_odd_dim_scaled > 0.0);
}

#[test]
fn sl2_5_exact_mode_vs_census() {
    let input = builtin_generators(BuiltinFamily::Sl, 2, 5).unwrap();
    let table = census(&input, DEFAULT_BUDGET).unwrap();
    let spec = GroupSpec::new(Family::Sl, 2, 5).unwrap();
    for &target in &[1u128, 2, 4, 8, 16] {
        for mode in [BoundMode::Paper, BoundMode::ExactTori] {
            let bound = quokka_lower_bound(&spec, target, mode).unwrap();
            let v = bound.value.exact().unwrap().clone();
            assert!(v >= Rat::zero());
            assert!(table.proportion(target) >= v, "target {target}");
        }
    }
}

#[test]
fn pair_bounds_dominated_by_product_censuses() {
    // GL_2(3) x GL_2(3) inside a 4-dimensional linear group.
    let gl23 = census(
        &builtin_generators(BuiltinFamily::Gl, 2, 3).unwrap(),
        DEFAULT_BUDGET,
    )
    .unwrap();
    let exact = pm_exact(&gl23, &gl23);
    let cs = CentralizerSpec::new(CentralizerKind::LinearUnitary, 4, 2, 3).unwrap();
    let balanced = pm_balanced_bound(&cs).unwrap();
    assert!(to_f64(&exact) >= balanced.value - 1e-12);
    let general = pm_general_bound(&cs).unwrap();
    assert!(to_f64(&exact) >= general.value - 1e-12);
    let corollary = twopart::involutions::corollary_bound(4).unwrap();
    assert!(to_f64(&exact) >= corollary.value);

    // Sp_2(3) x Sp_2(3) inside Sp_4(3): factors are SL_2(3).
    let sl23 = census(
        &builtin_generators(BuiltinFamily::Sl, 2, 3).unwrap(),
        DEFAULT_BUDGET,
    )
    .unwrap();
    let exact = pm_exact(&sl23, &sl23);
    let cs = CentralizerSpec::new(CentralizerKind::Symplectic, 4, 2, 3).unwrap();
    let balanced = pm_balanced_bound(&cs).unwrap();
    assert!(to_f64(&exact) >= balanced.value - 1e-12);
    let general = pm_general_bound(&cs).unwrap();
    assert!(to_f64(&exact) >= general.value - 1e-12);

    // Mixed dimensions: SL_2(3) x SL_2(5) is not one of the covered
    // centralizers, but the exact pair probability is still a probability.
    let sl25 = census(
        &builtin_generators(BuiltinFamily::Sl, 2, 5).unwrap(),
        DEFAULT_BUDGET,
    )
    .unwrap();
    let p = pm_exact(&sl23, &sl25);
    assert!(p > Rat::zero() && p < num::One::one());
}

#[test]
fn wider_census_dominance_sweep() {
    // Two more desk-sized groups beyond the gate's six: every achievable
    // target, both torus-sum modes and the named rows where they apply.
    for (family, dim, p, spec) in [
        (
            BuiltinFamily::Gl,
            2,
            7u64,
            GroupSpec::new(Family::Gl, 2, 7).unwrap(),
        ),
        (
            BuiltinFamily::Sl,
            3,
            3u64,
            GroupSpec::new(Family::Sl, 3, 3).unwrap(),
        ),
        (
            BuiltinFamily::Sl,
            3,
            5u64,
            GroupSpec::new(Family::Sl, 3, 5).unwrap(),
        ),
    ] {
        let input = builtin_generators(family, dim, p).unwrap();
        let table = census(&input, DEFAULT_BUDGET).unwrap();
        let mut targets = twopart::bounds::achievable_targets(&spec).unwrap();
        targets.extend(table.by_two_part.keys().copied());
        for &target in &targets {
            let actual = table.proportion(target);
            for mode in [BoundMode::Paper, BoundMode::ExactTori] {
                let bound = quokka_lower_bound(&spec, target, mode).unwrap();
                let v = bound.value.exact().unwrap().clone();
                assert!(
                    actual >= v,
                    "{} target {target} {mode:?}: {actual} < {v}",
                    spec.label()
                );
            }
            if let Ok(named) = named_bound(&spec, target) {
                let v = named.value.exact().unwrap().clone();
                assert!(actual >= v, "{} target {target} named", spec.label());
            }
        }
    }
}

#[test]
fn gu2_3_bounds_vs_extension_field_census() {
    // The unitary census over GF(9) (generators verified by full closure)
    // must dominate the unitary torus-sum and named bounds at every target.
    let text = "3 2 96\npoly 1 0 1\n7 8 8 7\n4 5 4 7\n";
    let input = twopart::census::parse_group_file(text).unwrap();
    let table = census(&input, 1 << 10).unwrap();
    let spec = GroupSpec::new(Family::Gu, 2, 3).unwrap();
    for &target in &[1u128, 2, 4, 8] {
        for mode in [BoundMode::Paper, BoundMode::ExactTori] {
            let bound = quokka_lower_bound(&spec, target, mode).unwrap();
            assert!(
                table.proportion(target) >= bound.value.exact().unwrap().clone(),
                "target {target} {mode:?}"
            );
        }
        if let Ok(named) = named_bound(&spec, target) {
            assert!(
                table.proportion(target) >= named.value.exact().unwrap().clone(),
                "target {target} named"
            );
        }
    }
    // (q+1)_2 = 4 = t here, so the minimal-exponent row applies at 4.
    let row = named_bound(&spec, 4).unwrap();
    assert_eq!(row.provenance, "minimal-exponent-row");
    assert_eq!(table.proportion(4), twopart::rat::rat(1, 2));
}

#[test]
fn quokka_example_gl3_3_vs_census() {
    // GL_3(3): the torus-sum bound at target 8 = 2t is exactly 1/4 in both
    // modes, and the census value matches it exactly (all 2-part-8 elements
    // are regular semisimple).
    let spec = GroupSpec::new(Family::Gl, 3, 3).unwrap();
    let paper = quokka_lower_bound(&spec, 8, BoundMode::Paper).unwrap();
    let exact = quokka_lower_bound(&spec, 8, BoundMode::ExactTori).unwrap();
    let input = builtin_generators(BuiltinFamily::Gl, 3, 3).unwrap();
    let table = census(&input, DEFAULT_BUDGET).unwrap();
    assert_eq!(paper.value.exact().unwrap(), &twopart::rat::rat(1, 4));
    assert_eq!(exact.value.exact().unwrap(), &twopart::rat::rat(1, 4));
    assert_eq!(table.proportion(8), twopart::rat::rat(1, 4));
}
