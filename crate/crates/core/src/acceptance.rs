//! The acceptance gate: every release-blocking check, runnable from the
//! test suite and from the command line. Each criterion returns a structured
//! outcome with a one-line detail string; tolerances are pinned here.

use std::time::Instant;

use num::{One, Zero};

use crate::bounds::{
    achievable_targets, check_table1, interval_two_powers, named_bound, quokka_lower_bound,
    unique_power_exponent, BoundMode,
};
use crate::census::{builtin_generators, census, pm_exact, BuiltinFamily, CensusTable};
use crate::error::{Error, Result};
use crate::rat::{rat, Rat};
use crate::stirling_sums::{
    check_simplified_bounds, gamma_quarter_product, half_sum_even_2, half_sum_even_4,
    half_sum_odd_2, half_sum_odd_4, sum_a, sum_b, sum_c, sum_d,
};
use crate::symmetric::{p_two_part, sn_census, StirlingTable};
use crate::table_data;
use crate::weyl::{table4, Family, GroupSpec};

#[derive(Debug, Clone)]
pub struct CriterionOutcome {
    pub id: u32,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub seconds: f64,
}

impl CriterionOutcome {
    pub fn line(&self) -> String {
        format!(
            "criterion {:2} {:<28} {} ({:.2}s) {}",
            self.id,
            self.name,
            if self.passed { "PASS" } else { "FAIL" },
            self.seconds,
            self.detail
        )
    }
}

fn outcome(
    id: u32,
    name: &'static str,
    started: Instant,
    passed: bool,
    detail: String,
) -> CriterionOutcome {
    CriterionOutcome {
        id,
        name,
        passed,
        detail,
        seconds: started.elapsed().as_secs_f64(),
    }
}

/// Criterion 1: the small orthogonal exponent table matches the published fractions
/// exactly, in both residue columns and the floor column.
pub fn criterion_table4() -> Result<CriterionOutcome> {
    let start = Instant::now();
    let rows = table4()?;
    let mut mismatches = Vec::new();
    if rows.len() != table_data::TABLE4_PUBLISHED.len() {
        mismatches.push(format!(
            "row count {} vs published {}",
            rows.len(),
            table_data::TABLE4_PUBLISHED.len()
        ));
    }
    for (row, &(group, exp, q1, q3, lb)) in rows.iter().zip(table_data::TABLE4_PUBLISHED.iter()) {
        if row.group != group || row.exp.label() != exp {
            mismatches.push(format!(
                "row order: got {} {}, expected {} {};",
                row.group,
                row.exp.label(),
                group,
                exp
            ));
            continue;
        }
        if row.weight_q1 != rat(q1.0, q1.1)
            || row.weight_q3 != rat(q3.0, q3.1)
            || row.lower_bound != rat(lb.0, lb.1)
        {
            mismatches.push(format!("{group} {exp}"));
        }
    }
    let passed = mismatches.is_empty() && start.elapsed().as_secs_f64() < 1.0;
    let detail = if mismatches.is_empty() {
        format!("{} rows, both columns exact", rows.len())
    } else {
        format!("mismatches: {}", mismatches.join(", "))
    };
    Ok(outcome(1, "orthogonal exponent table", start, passed, detail))
}

/// Criterion 2: the product-pair probability for two copies of GL_2(3), pinned at the
/// externally given 33/128 = 0.2578125.
///
/// Known red: the exhaustive 48-element census gives the strict-inequality
/// event probability 89/256 = 0.34765625 (2-part profile 9/21/6/12 over
/// orders 1,2,3,4,6,8), independently confirmed by a second full
/// enumeration. No reading of the pair event reproduces 33/128, so the
/// pinned value appears to be a source error; the criterion is kept as
/// stated rather than weakened.
pub fn criterion_pm_gl23() -> Result<CriterionOutcome> {
    let start = Instant::now();
    let input = builtin_generators(BuiltinFamily::Gl, 2, 3)?;
    let table = census(&input, 1 << 12)?;
    let p = pm_exact(&table, &table);
    let expected = rat(33, 128);
    let passed = p == expected && start.elapsed().as_secs_f64() < 1.0;
    Ok(outcome(
        2,
        "pair probability GL_2(3)^2",
        start,
        passed,
        format!(
            "pm = {} = {:.8}; pinned expectation 33/128 = 0.25781250",
            crate::rat::fmt_rat(&p),
            crate::rat::to_f64(&p)
        ),
    ))
}

/// Criterion 3: the recomputed window calculation reproduces the seven published
/// contributions and the total 0.1592023132 to 1e-9.
pub fn criterion_table2() -> Result<CriterionOutcome> {
    let start = Instant::now();
    let (rows, total) = crate::involutions::table2();
    let mut worst = 0f64;
    for (row, &(_, _, factor, _, contribution)) in
        rows.iter().zip(table_data::TABLE2_PUBLISHED.iter())
    {
        worst = worst.max((row.factor - factor).abs());
        worst = worst.max((row.contribution - contribution).abs());
    }
    let total_err = (total - table_data::TABLE2_TOTAL).abs();
    let passed = worst <= 1e-9 && total_err <= 1e-9 && start.elapsed().as_secs_f64() < 1.0;
    Ok(outcome(
        3,
        "window calculation table",
        start,
        passed,
        format!("max row error {worst:.2e}, total error {total_err:.2e}"),
    ))
}

/// Criterion 4: published constant table relations: the symplectic column is half the
/// linear column on all rows; the three central rows sum to the pinned
/// 0.2229693704 / 0.1114846851 and clear the 0.22 / 0.11 floors.
pub fn criterion_table1() -> Result<CriterionOutcome> {
    let start = Instant::now();
    let rows = table_data::builtin_table1();
    let checks = check_table1(&rows)?;
    let passed = checks.all_ok();
    Ok(outcome(
        4,
        "published constant table",
        start,
        passed,
        format!(
            "half-relation err {:.2e}, sums {:.10} / {:.10}",
            checks.max_half_relation_error,
            checks.rows_3_to_5_linear_sum,
            checks.rows_3_to_5_symplectic_sum
        ),
    ))
}

/// Criterion 5: the partition census of S_n equals the product formula for all n <= 14.
pub fn criterion_symmetric_oracle() -> Result<CriterionOutcome> {
    let start = Instant::now();
    let mut failures = Vec::new();
    for n in 1..=14u32 {
        let counted = sn_census(n)?;
        let mut j = 0u32;
        while (1u64 << j) <= n as u64 {
            let formula = p_two_part(n as u64, j)?;
            let got = counted.get(&(1u128 << j)).cloned().unwrap_or_else(Rat::zero);
            if got != formula {
                failures.push(format!("n={n}, j={j}"));
            }
            j += 1;
        }
        let total: Rat = counted.values().cloned().sum();
        if total != Rat::one() {
            failures.push(format!("n={n} total {total}"));
        }
    }
    let passed = failures.is_empty() && start.elapsed().as_secs_f64() < 5.0;
    Ok(outcome(
        5,
        "symmetric census vs formula",
        start,
        passed,
        if failures.is_empty() {
            "n <= 14 exact".into()
        } else {
            failures.join(", ")
        },
    ))
}

/// Criterion 6: Stirling-sum closed forms equal the direct sums exactly for l <= 200,
/// and the floating inequality sweeps hold for 2 <= l <= 10^4.
pub fn criterion_stirling_identities() -> Result<CriterionOutcome> {
    let start = Instant::now();
    let table = StirlingTable::up_to(200);
    let mut failures = Vec::new();
    for l in 1..=200u64 {
        let mut a = Rat::zero();
        let mut b = Rat::zero();
        let mut c = Rat::zero();
        let mut d = Rat::zero();
        let mut even2 = Rat::zero();
        let mut odd2 = Rat::zero();
        let mut even4 = Rat::zero();
        let mut odd4 = Rat::zero();
        for k in 1..=l {
            let ck = Rat::from_integer(table.c(l, k).into());
            let half = ck.clone() * crate::rat::inv_pow2(k);
            let quarter = ck * crate::rat::inv_pow2(2 * k);
            let sign = (l - k) % 2 == 0;
            a += half.clone();
            c += quarter.clone();
            if sign {
                b += half.clone();
                d += quarter.clone();
            } else {
                b -= half.clone();
                d -= quarter.clone();
            }
            if k % 2 == 0 {
                even2 += half;
                even4 += quarter;
            } else {
                odd2 += half;
                odd4 += quarter;
            }
        }
        if sum_a(l)? != a
            || sum_b(l)? != b
            || sum_c(l)? != c
            || sum_d(l)? != d
            || half_sum_even_2(l)? != even2
            || half_sum_odd_2(l)? != odd2
            || half_sum_even_4(l)? != even4
            || half_sum_odd_4(l)? != odd4
        {
            failures.push(format!("l={l}"));
        }
        let sign = rat(if l % 2 == 1 { 1 } else { -1 }, 1);
        if gamma_quarter_product(l)? != sum_d(l)? * sign {
            failures.push(format!("gamma product l={l}"));
        }
    }
    let violations = check_simplified_bounds(10_000)?;
    if !violations.is_empty() {
        failures.push(format!("{} sweep violations", violations.len()));
    }
    let passed = failures.is_empty() && start.elapsed().as_secs_f64() < 30.0;
    Ok(outcome(
        6,
        "stirling sum identities",
        start,
        passed,
        if failures.is_empty() {
            "closed forms exact to l=200; sweeps clean to 10^4".into()
        } else {
            failures.join(", ")
        },
    ))
}

fn group_spec_for(family: BuiltinFamily, dim: usize, p: u64) -> Result<GroupSpec> {
    match family {
        BuiltinFamily::Gl => GroupSpec::new(Family::Gl, dim as u32, p),
        BuiltinFamily::Sl => GroupSpec::new(Family::Sl, dim as u32, p),
        BuiltinFamily::Sp => GroupSpec::new(Family::Sp, dim as u32 / 2, p),
    }
}

fn census_dominates(table: &CensusTable, spec: &GroupSpec) -> Result<Vec<String>> {
    let mut failures = Vec::new();
    let mut targets = achievable_targets(spec)?;
    targets.extend(table.by_two_part.keys().copied());
    for &target in &targets {
        let actual = table.proportion(target);
        for mode in [BoundMode::Paper, BoundMode::ExactTori] {
            let bound = quokka_lower_bound(spec, target, mode)?;
            let value = bound.value.exact().expect("torus sums are exact").clone();
            if value < Rat::zero() || actual < value {
                failures.push(format!(
                    "{} target {target} {:?}: census {} < bound {}",
                    spec.label(),
                    mode,
                    actual,
                    value
                ));
            }
        }
        match named_bound(spec, target) {
            Ok(named) => {
                let value = named.value.exact().expect("named rows are exact").clone();
                if actual < value {
                    failures.push(format!(
                        "{} target {target} named: census {} < bound {}",
                        spec.label(),
                        actual,
                        value
                    ));
                }
            }
            Err(Error::BoundNotApplicable(_)) => {}
            Err(e) => return Err(e),
        }
    }
    Ok(failures)
}

/// Criterion 7: exhaustive censuses dominate every torus-sum and named bound for the
/// six desk-sized groups; the largest enumeration (51840 elements) stays
/// under a minute.
pub fn criterion_census_dominance() -> Result<CriterionOutcome> {
    let start = Instant::now();
    let cases: [(BuiltinFamily, usize, u64); 6] = [
        (BuiltinFamily::Sl, 2, 3),
        (BuiltinFamily::Sl, 2, 5),
        (BuiltinFamily::Gl, 2, 3),
        (BuiltinFamily::Gl, 2, 5),
        (BuiltinFamily::Gl, 3, 3),
        (BuiltinFamily::Sp, 4, 3),
    ];
    let mut failures = Vec::new();
    let mut sp4_seconds = 0f64;
    for (family, dim, p) in cases {
        let t0 = Instant::now();
        let input = builtin_generators(family, dim, p)?;
        let table = census(&input, 1 << 20)?;
        if family == BuiltinFamily::Sp {
            sp4_seconds = t0.elapsed().as_secs_f64();
            if table.total != 51840 {
                failures.push(format!("Sp_4(3) order {}", table.total));
            }
            // Profile frozen from an independent enumeration.
            let expected: [(u128, u128); 4] = [(1, 11745), (2, 19035), (4, 14580), (8, 6480)];
            for (key, count) in expected {
                if table.by_two_part.get(&key) != Some(&count) {
                    failures.push(format!("Sp_4(3) count at 2-part {key}"));
                }
            }
        }
        let spec = group_spec_for(family, dim, p)?;
        failures.extend(census_dominates(&table, &spec)?);
    }
    let passed = failures.is_empty() && sp4_seconds < 60.0;
    Ok(outcome(
        7,
        "census dominance",
        start,
        passed,
        if failures.is_empty() {
            format!("6 groups, Sp_4(3) census in {sp4_seconds:.2}s")
        } else {
            failures.join("; ")
        },
    ))
}

/// Criterion 8: the exact-torus mode is at least the portable mode for every family,
/// rank <= 8, q in {3, 5}, at every achievable target (exact comparison).
pub fn criterion_sharpening_order() -> Result<CriterionOutcome> {
    let start = Instant::now();
    let mut checked = 0u32;
    let mut failures = Vec::new();
    for family in Family::ALL {
        for rank in 1..=8u32 {
            if matches!(family, Family::SoPlus | Family::SoMinus) && rank < 2 {
                continue;
            }
            for &q in &[3u64, 5] {
                let spec = GroupSpec::new(family, rank, q)?;
                for target in achievable_targets(&spec)? {
                    let paper = quokka_lower_bound(&spec, target, BoundMode::Paper)?;
                    let exact = quokka_lower_bound(&spec, target, BoundMode::ExactTori)?;
                    checked += 1;
                    if exact.value.exact() < paper.value.exact() {
                        failures.push(format!("{} target {target}", spec.label()));
                    }
                }
            }
        }
    }
    let passed = failures.is_empty();
    Ok(outcome(
        8,
        "exact mode sharpens",
        start,
        passed,
        if failures.is_empty() {
            format!("{checked} comparisons")
        } else {
            failures.join(", ")
        },
    ))
}

/// Criterion 9: the eightfold window holds exactly 3 powers of two on a log grid of n
/// in [9, 10^6] for q in {3,5,7,9}; the twofold window holds exactly one for
/// every m in 2..10^5.
pub fn criterion_windows() -> Result<CriterionOutcome> {
    let start = Instant::now();
    let mut failures = Vec::new();
    let lo = 9f64.ln();
    let hi = 1e6f64.ln();
    for i in 0..200 {
        let n = (lo + (hi - lo) * i as f64 / 199.0).exp().round() as u64;
        for &q in &[3u64, 5, 7, 9] {
            let r = interval_two_powers(n.max(9), q)?;
            if r.powers.len() != 3 {
                failures.push(format!("n={n}, q={q}: {} powers", r.powers.len()));
            }
        }
    }
    for m in 2..100_000u64 {
        if unique_power_exponent(m).is_err() {
            failures.push(format!("m={m}"));
        }
    }
    let passed = failures.is_empty();
    Ok(outcome(
        9,
        "power-of-two windows",
        start,
        passed,
        if failures.is_empty() {
            "grid clean".into()
        } else {
            failures.join(", ")
        },
    ))
}

/// Criterion 10: class weights sum to exactly 1 for every family at every rank <= 30.
pub fn criterion_weight_normalization() -> Result<CriterionOutcome> {
    let start = Instant::now();
    let mut failures = Vec::new();
    for family in Family::ALL {
        for rank in 1..=30u32 {
            if matches!(family, Family::SoPlus | Family::SoMinus) && rank < 2 {
                continue;
            }
            let spec = GroupSpec::new(family, rank, 3)?;
            let weights: Vec<Rat> = crate::weyl::fclass_enum(&spec)?.map(|(_, w)| w).collect();
            let total = crate::rat::sum_tree(weights);
            if total != Rat::one() {
                failures.push(format!("{family:?} rank {rank}: {total}"));
            }
        }
    }
    let passed = failures.is_empty();
    Ok(outcome(
        10,
        "class weight normalization",
        start,
        passed,
        if failures.is_empty() {
            "all families, ranks <= 30".into()
        } else {
            failures.join(", ")
        },
    ))
}

pub fn run_all() -> Result<Vec<CriterionOutcome>> {
    Ok(vec![
        criterion_table4()?,
        criterion_pm_gl23()?,
        criterion_table2()?,
        criterion_table1()?,
        criterion_symmetric_oracle()?,
        criterion_stirling_identities()?,
        criterion_census_dominance()?,
        criterion_sharpening_order()?,
        criterion_windows()?,
        criterion_weight_normalization()?,
    ])
}
