//! Lower bounds on the probability that a random pair (x, y) drawn from a
//! product of two classical groups of dimensions m and d-m powers up to
//! (involution, identity) — equivalently that the 2-part order of x strictly
//! exceeds that of y.
//!
//! Three routes are provided: the balanced-dimension constant floors (with
//! the underlying window calculation exposed as `table2`), the per-rank
//! closed-form rows of `pm_general_bound`, and the dimension-only corollary
//! floor K/sqrt(d).

use num::{BigInt, Zero};

use crate::bounds::{a_const, unique_power_exponent};
use crate::error::{domain, Error, Result};
use crate::rat::{rat_u128, to_f64, Rat};
use crate::stirling_sums::sum_a;
use crate::symmetric::{p_two_part, s_not};
use crate::weyl::{Family, GroupSpec};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CentralizerKind {
    LinearUnitary,
    Symplectic,
    Orthogonal,
}

impl CentralizerKind {
    pub fn label(self) -> &'static str {
        match self {
            CentralizerKind::LinearUnitary => "linear-unitary",
            CentralizerKind::Symplectic => "symplectic",
            CentralizerKind::Orthogonal => "orthogonal",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "GL" | "GU" => Ok(CentralizerKind::LinearUnitary),
            "SP" => Ok(CentralizerKind::Symplectic),
            "SO" => Ok(CentralizerKind::Orthogonal),
            other => domain(format!("unknown centralizer family {other:?} (use GL, GU, Sp or SO)")),
        }
    }
}

/// An involution centralizer Cl_m x Cl_(d-m) inside a classical group of
/// dimension d over F_q.
#[derive(Debug, Clone)]
pub struct CentralizerSpec {
    pub kind: CentralizerKind,
    pub d: u64,
    pub m: u64,
    pub q: u64,
}

impl CentralizerSpec {
    pub fn new(kind: CentralizerKind, d: u64, m: u64, q: u64) -> Result<Self> {
        if q.is_multiple_of(2) || q < 3 || !crate::symmetric::is_prime_power(q) {
            return domain(format!("q must be an odd prime power >= 3, got {q}"));
        }
        if m < 2 || m + 2 > d {
            return domain(format!("need 2 <= m <= d-2, got m={m}, d={d}"));
        }
        if kind == CentralizerKind::Symplectic && (!d.is_multiple_of(2) || !m.is_multiple_of(2)) {
            return domain("symplectic factors require even d and even m");
        }
        if kind == CentralizerKind::Orthogonal && (m < 3 || d - m < 3) {
            return domain("orthogonal factors of dimension 2 are not covered; need m, d-m >= 3");
        }
        Ok(CentralizerSpec { kind, d, m, q })
    }

    pub fn from_group(ambient: &GroupSpec, m: u64) -> Result<Self> {
        let kind = match ambient.family {
            Family::Gl | Family::Gu => CentralizerKind::LinearUnitary,
            Family::Sp => CentralizerKind::Symplectic,
            Family::SoOdd | Family::SoPlus | Family::SoMinus => CentralizerKind::Orthogonal,
            _ => {
                return domain(
                    "involution-pair bounds cover GL, GU, Sp and SO ambient groups",
                )
            }
        };
        CentralizerSpec::new(kind, ambient.dimension(), m, ambient.q)
    }

    /// Half-rank of the first factor.
    pub fn k(&self) -> u64 {
        self.m / 2
    }

    /// Half-rank of the ambient group.
    pub fn ell(&self) -> u64 {
        self.d / 2
    }
}

/// Published constant floors for balanced m (table rows: kind, range).
const FLOOR_LINEAR_LOW: f64 = 0.078125;
const FLOOR_LINEAR_HIGH: f64 = 0.087683;
const FLOOR_SP_SO_LOW: f64 = 0.039062;
const FLOOR_SP_SO_HIGH: f64 = 0.043216;

#[derive(Debug, Clone)]
pub struct BalancedReport {
    pub value: f64,
    pub floor: f64,
    pub computed: f64,
    pub computed_exact: Option<Rat>,
    pub range: &'static str,
}

/// (2 lam)!/(4^lam (lam!)^2) * (2 lam - 2)/(2 lam - 1): the exact probability
/// floor for 2-part order at most 2 in the second orthogonal factor.
fn orthogonal_tail_term(lam: u64) -> Result<Rat> {
    if lam == 0 {
        return Ok(Rat::zero());
    }
    let binom = sum_a(lam)? / Rat::from_integer(BigInt::from(crate::rat::factorial(lam)));
    Ok(binom * rat_u128(2 * lam as u128 - 2, 2 * lam as u128 - 1))
}

fn exact_sum_linear(m: u64, rest: u64) -> Result<Rat> {
    let mut total = Rat::zero();
    let mut j = 1u32;
    while (1u64 << j) <= m {
        total += p_two_part(m, j)? / rat_u128(2, 1) * s_not(rest, 1u64 << j)?;
        j += 1;
    }
    Ok(total)
}

fn exact_sum_symplectic(k: u64, lam: u64) -> Result<Rat> {
    let mut total = Rat::zero();
    let mut j = 1u32;
    while (1u64 << j) <= k {
        total += p_two_part(k, j)? / rat_u128(4, 1) * s_not(lam, 1u64 << j)?;
        j += 1;
    }
    Ok(total)
}

fn exact_sum_orthogonal(k: u64, lam: u64) -> Result<Rat> {
    let four = rat_u128(4, 1);
    let mut total = Rat::zero();
    if k.is_multiple_of(2) {
        let k2_bits = k.trailing_zeros();
        let k2 = 1u64 << k2_bits;
        let mut j = 1u32;
        while (1u64 << j) <= k {
            if (1u64 << j) != k2 {
                total += p_two_part(k, j)? / four.clone() * s_not(lam, 1u64 << j)?;
            }
            j += 1;
        }
        let penalized = p_two_part(k, k2_bits)? / four.clone() - rat_u128(1, 4 * k as u128);
        total += penalized.max(Rat::zero()) * s_not(lam, k2)?;
        total += p_two_part(k, 0)? / four * orthogonal_tail_term(lam)?;
    } else {
        let mut j = 1u32;
        while (1u64 << j) <= k {
            total += p_two_part(k, j)? / four.clone() * s_not(lam, 1u64 << j)?;
            j += 1;
        }
        let penalized = (p_two_part(k, 0)? - rat_u128(1, k as u128)).max(Rat::zero());
        total += penalized / four * orthogonal_tail_term(lam)?;
    }
    Ok(total.max(Rat::zero()))
}

/// Window sum over the seven published intervals. `strong` selects the
/// [d/3, d/2] normalization (399/400 and the log(400) exponent tilt);
/// otherwise the [d/2, 2d/3] one (398/400, plain exponent).
fn window_sum(divisor: f64, strong: bool, orthogonal_penalty: bool) -> f64 {
    let a = a_const();
    let mut total = 0.0;
    for (i, &(_, (num, den), _, sn, _)) in crate::table_data::TABLE2_PUBLISHED.iter().enumerate() {
        let alpha = a * num as f64 / den as f64;
        let factor = if strong {
            (399.0 / 400.0) * (-(1.0 / alpha) * (1.0 + 2f64.ln() / 400f64.ln())).exp()
        } else {
            (398.0 / 400.0) * (-1.0 / alpha).exp()
        };
        total += factor * sn * window_constant(i);
    }
    let mut value = total / divisor;
    if orthogonal_penalty {
        value -= 1.0 / (4.0 * 400.0);
    }
    value.max(0.0)
}

/// Constant lower bound for the pair probability when the involution is
/// balanced: d/3 <= m <= 2d/3 (with the small-dimension guards per family).
/// Returns the max of the published floor for the applicable range and the
/// recomputed sum (exact below the window threshold of 400, window-based
/// above it).
pub fn pm_balanced_bound(cs: &CentralizerSpec) -> Result<BalancedReport> {
    let (d, m) = (cs.d, cs.m);
    let low_range = 3 * m >= d && 2 * m <= d;
    let high_range = 2 * m >= d && 3 * m <= 2 * d;
    if !low_range && !high_range {
        return domain(format!(
            "balanced bound requires d/3 <= m <= 2d/3, got m={m}, d={d}"
        ));
    }
    let (floor_low, floor_high) = match cs.kind {
        CentralizerKind::LinearUnitary => (FLOOR_LINEAR_LOW, FLOOR_LINEAR_HIGH),
        _ => (FLOOR_SP_SO_LOW, FLOOR_SP_SO_HIGH),
    };
    let mut floor = f64::MIN;
    if low_range {
        floor = floor.max(floor_low);
    }
    if high_range {
        floor = floor.max(floor_high);
    }
    let range = if low_range && high_range {
        "both"
    } else if low_range {
        "low"
    } else {
        "high"
    };

    let (computed, computed_exact) = match cs.kind {
        CentralizerKind::LinearUnitary => {
            if m <= 399 {
                let exact = exact_sum_linear(m, d - m)?;
                (to_f64(&exact), Some(exact))
            } else {
                (window_sum(2.0, low_range, false), None)
            }
        }
        CentralizerKind::Symplectic => {
            let k = cs.k();
            if k <= 399 {
                let exact = exact_sum_symplectic(k, cs.ell() - k)?;
                (to_f64(&exact), Some(exact))
            } else {
                (window_sum(4.0, low_range, false), None)
            }
        }
        CentralizerKind::Orthogonal => {
            let k = cs.k();
            if k <= 399 {
                let exact = exact_sum_orthogonal(k, cs.ell() - k)?;
                (to_f64(&exact), Some(exact))
            } else {
                (window_sum(4.0, low_range, true), None)
            }
        }
    };

    Ok(BalancedReport {
        value: floor.max(computed),
        floor,
        computed,
        computed_exact,
        range,
    })
}

#[derive(Debug, Clone)]
pub struct Table2Row {
    pub interval: &'static str,
    pub alpha_num: u32,
    pub alpha_den: u32,
    pub factor: f64,
    pub sn_constant: f64,
    pub contribution: f64,
}

/// Constant in the floor for the proportion of elements of order coprime to
/// a small prime power: the first window's surviving prime power is 2, whose
/// odd-order proportion decays like sqrt(2/pi) / sqrt(n), so that row keeps
/// the constant while the later windows (prime power >= 4) use 1.
fn window_constant(row: usize) -> f64 {
    if row == 0 {
        (2.0 / std::f64::consts::PI).sqrt()
    } else {
        1.0
    }
}

/// The window calculation behind the strong-involution floor: per interval,
/// the exponential factor at the left endpoint, times the published constant,
/// times 399/400 (and the first-row odd-order constant). Returns the rows
/// and their total.
pub fn table2() -> (Vec<Table2Row>, f64) {
    let a = a_const();
    let tilt = 1.0 + 2f64.ln() / 400f64.ln();
    let mut rows = Vec::new();
    let mut total = 0.0;
    for (i, &(interval, (num, den), _, sn, _)) in
        crate::table_data::TABLE2_PUBLISHED.iter().enumerate()
    {
        let alpha = a * num as f64 / den as f64;
        let factor = (-(1.0 / alpha) * tilt).exp();
        let contribution = 399.0 / 400.0 * factor * sn * window_constant(i);
        total += contribution;
        rows.push(Table2Row {
            interval,
            alpha_num: num,
            alpha_den: den,
            factor,
            sn_constant: sn,
            contribution,
        });
    }
    (rows, total)
}

#[derive(Debug, Clone)]
pub struct GeneralReport {
    pub value: f64,
    /// Exact rational part, when the whole row is rational.
    pub exact: Option<Rat>,
    pub formula: &'static str,
}

fn p0_value(m: u64) -> Result<u64> {
    let j = unique_power_exponent(m)?;
    if j < 1 {
        return Err(Error::Internal(format!(
            "window power for m={m} is below 2; the wide-rank row needs m >= 16"
        )));
    }
    Ok(1u64 << j)
}

fn rational_row(coeffs: &[(u64, u64, u64)], rest: u64) -> Result<Rat> {
    // coeffs: (numerator, denominator, prime-power argument)
    let mut total = Rat::zero();
    for &(num, den, p0) in coeffs {
        total += rat_u128(num as u128, den as u128) * s_not(rest, p0)?;
    }
    Ok(total)
}

fn sqrt_term(num: f64, den: f64, lam: u64) -> f64 {
    num / (den * (std::f64::consts::PI * lam as f64).sqrt())
}

/// One tabulated per-rank row: coefficients of coprime-order proportions at
/// fixed prime powers, plus a square-root floor coefficient.
#[derive(Debug, Clone, Copy)]
pub struct PmRow {
    pub k_lo: u64,
    pub k_hi: u64,
    /// (numerator, denominator, prime power) per term.
    pub s_terms: &'static [(u64, u64, u64)],
    /// Coefficient (num, den) of 1/sqrt(pi * (l - k)).
    pub sqrt_coeff: (u64, u64),
    /// Whether the square-root term is scaled by the parity factor chi.
    pub uses_chi: bool,
}

/// Symplectic per-rank rows for 2 <= k <= 16 (the k = 1 row is the pure
/// square-root 25/116 floor handled separately).
pub const SYMPLECTIC_PM_ROWS: [PmRow; 5] = [
    PmRow { k_lo: 2, k_hi: 3, s_terms: &[(1, 8, 2)], sqrt_coeff: (25, 232), uses_chi: false },
    PmRow { k_lo: 4, k_hi: 5, s_terms: &[(1, 16, 4), (3, 32, 2)], sqrt_coeff: (75, 928), uses_chi: false },
    PmRow { k_lo: 6, k_hi: 7, s_terms: &[(1, 16, 4), (7, 64, 2)], sqrt_coeff: (125, 1856), uses_chi: false },
    PmRow { k_lo: 8, k_hi: 11, s_terms: &[(1, 32, 8), (7, 128, 4), (49, 512, 2)], sqrt_coeff: (1575, 29696), uses_chi: false },
    PmRow { k_lo: 12, k_hi: 16, s_terms: &[(1, 32, 8), (35, 512, 4), (385, 4096, 2)], sqrt_coeff: (10725, 237568), uses_chi: false },
];

/// Orthogonal per-rank rows for 2 <= k <= 16 (the k = 1 row requires m = 3
/// and is the pure square-root 25/116 floor at argument l - 2).
pub const ORTHOGONAL_PM_ROWS: [PmRow; 8] = [
    PmRow { k_lo: 2, k_hi: 2, s_terms: &[], sqrt_coeff: (25, 232), uses_chi: true },
    PmRow { k_lo: 3, k_hi: 3, s_terms: &[(1, 8, 2)], sqrt_coeff: (25, 232), uses_chi: true },
    PmRow { k_lo: 4, k_hi: 4, s_terms: &[(3, 32, 2)], sqrt_coeff: (75, 928), uses_chi: true },
    PmRow { k_lo: 5, k_hi: 5, s_terms: &[(1, 16, 4), (3, 32, 2)], sqrt_coeff: (75, 928), uses_chi: true },
    PmRow { k_lo: 6, k_hi: 7, s_terms: &[(1, 16, 4), (13, 192, 2)], sqrt_coeff: (125, 1856), uses_chi: true },
    PmRow { k_lo: 8, k_hi: 8, s_terms: &[(7, 128, 4), (49, 512, 2)], sqrt_coeff: (1575, 29696), uses_chi: true },
    PmRow { k_lo: 9, k_hi: 11, s_terms: &[(1, 32, 8), (7, 128, 4), (397, 5120, 2)], sqrt_coeff: (1575, 29696), uses_chi: true },
    PmRow { k_lo: 12, k_hi: 16, s_terms: &[(1, 32, 8), (35, 512, 4), (385, 4096, 2)], sqrt_coeff: (10725, 237568), uses_chi: true },
];

/// Linear per-rank coefficient rows for 2 <= m <= 15 (no square-root term).
pub const LINEAR_PM_ROWS: [PmRow; 5] = [
    PmRow { k_lo: 2, k_hi: 3, s_terms: &[(1, 4, 2)], sqrt_coeff: (0, 1), uses_chi: false },
    PmRow { k_lo: 4, k_hi: 5, s_terms: &[(1, 8, 4), (3, 16, 2)], sqrt_coeff: (0, 1), uses_chi: false },
    PmRow { k_lo: 6, k_hi: 7, s_terms: &[(1, 8, 4), (7, 32, 2)], sqrt_coeff: (0, 1), uses_chi: false },
    PmRow { k_lo: 8, k_hi: 11, s_terms: &[(1, 16, 8), (7, 64, 4), (49, 256, 2)], sqrt_coeff: (0, 1), uses_chi: false },
    PmRow { k_lo: 12, k_hi: 15, s_terms: &[(1, 16, 8), (35, 256, 4), (385, 2048, 2)], sqrt_coeff: (0, 1), uses_chi: false },
];

fn find_row(rows: &'static [PmRow], k: u64) -> Option<&'static PmRow> {
    rows.iter().find(|r| r.k_lo <= k && k <= r.k_hi)
}

/// Per-rank lower bound for the pair probability, selected from the
/// closed-form row matching the first factor's (half-)rank. Rational parts
/// are evaluated exactly; square-root terms in floating point. Where both a
/// wide-rank formula and a tabulated row apply, the larger value wins.
pub fn pm_general_bound(cs: &CentralizerSpec) -> Result<GeneralReport> {
    match cs.kind {
        CentralizerKind::LinearUnitary => {
            let (m, rest) = (cs.m, cs.d - cs.m);
            if m >= 16 {
                let p0 = p0_value(m)?;
                let exact = rational_row(
                    &[
                        (15, 1000, 8 * p0),
                        (30, 1000, 4 * p0),
                        (76, 1000, 2 * p0),
                        (117, 1000, p0),
                    ],
                    rest,
                )?;
                return Ok(GeneralReport {
                    value: to_f64(&exact),
                    exact: Some(exact),
                    formula: "linear wide-rank window row",
                });
            }
            let row = find_row(&LINEAR_PM_ROWS, m)
                .ok_or_else(|| Error::Domain("linear rows require m >= 2".into()))?;
            let exact = rational_row(row.s_terms, rest)?;
            Ok(GeneralReport {
                value: to_f64(&exact),
                exact: Some(exact),
                formula: "linear small-rank row",
            })
        }
        CentralizerKind::Symplectic => {
            let k = cs.k();
            let lam = cs.ell() - k;
            if k >= 17 {
                let p0 = p0_value(k)?;
                let exact = rational_row(
                    &[
                        (2, 500, 8 * p0),
                        (7, 500, 4 * p0),
                        (19, 500, 2 * p0),
                        (29, 500, p0),
                    ],
                    lam,
                )?;
                return Ok(GeneralReport {
                    value: to_f64(&exact),
                    exact: Some(exact),
                    formula: "symplectic-orthogonal wide-rank window row",
                });
            }
            if k == 1 {
                if cs.ell() < 2 {
                    return domain("the k=1 symplectic row requires ambient half-rank >= 2");
                }
                let sqrt_part = sqrt_term(25.0, 116.0, cs.ell() - 1);
                // Alternative route through order-4 elements of the small
                // factor paired with odd-order elements of the big one.
                let lfact = Rat::from_integer(BigInt::from(crate::rat::factorial(cs.ell() - 1)));
                let alt = to_f64(
                    &(crate::stirling_sums::sum_c(cs.ell() - 1)? / lfact / rat_u128(4, 1)),
                );
                return Ok(GeneralReport {
                    value: sqrt_part.max(alt),
                    exact: None,
                    formula: "symplectic k=1 row",
                });
            }
            let row = find_row(&SYMPLECTIC_PM_ROWS, k).expect("k in 2..=16 here");
            let exact = rational_row(row.s_terms, lam)?;
            Ok(GeneralReport {
                value: to_f64(&exact)
                    + sqrt_term(row.sqrt_coeff.0 as f64, row.sqrt_coeff.1 as f64, lam),
                exact: None,
                formula: "symplectic small-rank row",
            })
        }
        CentralizerKind::Orthogonal => {
            let k = cs.k();
            let lam = cs.ell() - k;
            if k >= 17 {
                let p0 = p0_value(k)?;
                let exact = rational_row(
                    &[
                        (2, 500, 8 * p0),
                        (7, 500, 4 * p0),
                        (19, 500, 2 * p0),
                        (29, 500, p0),
                    ],
                    lam,
                )?;
                return Ok(GeneralReport {
                    value: to_f64(&exact),
                    exact: Some(exact),
                    formula: "symplectic-orthogonal wide-rank window row",
                });
            }
            let chi = if (cs.d - cs.m) % 2 == 1 {
                1.0
            } else if lam >= 1 {
                (2.0 * lam as f64 - 2.0) / (2.0 * lam as f64 - 1.0)
            } else {
                0.0
            };
            if k == 1 {
                if cs.m != 3 {
                    return Err(Error::BoundNotApplicable(
                        "orthogonal factors of dimension 2 have no covered row".into(),
                    ));
                }
                if cs.ell() < 3 {
                    return domain("the k=1, m=3 orthogonal row requires ambient half-rank >= 3");
                }
                return Ok(GeneralReport {
                    value: sqrt_term(25.0, 116.0, cs.ell() - 2),
                    exact: None,
                    formula: "orthogonal k=1 row",
                });
            }
            let row = find_row(&ORTHOGONAL_PM_ROWS, k).expect("k in 2..=16 here");
            let exact = rational_row(row.s_terms, lam)?;
            Ok(GeneralReport {
                value: to_f64(&exact)
                    + chi * sqrt_term(row.sqrt_coeff.0 as f64, row.sqrt_coeff.1 as f64, lam),
                exact: None,
                formula: "orthogonal small-rank row",
            })
        }
    }
}

#[derive(Debug, Clone)]
pub struct CorollaryReport {
    pub value: f64,
    pub k_constant: f64,
    /// Per-case floors K_row with P >= K_row / sqrt(d); the constant is
    /// their minimum.
    pub trace: Vec<(String, f64)>,
}

/// Dimension-only floor K/sqrt(d) for the pair probability, valid for
/// 2 <= m <= d/2 over every covered family. K is derived here, not quoted:
/// each closed-form row is reduced to (sum of its rational coefficients)
/// times the odd-order floor s_not(x, 2) >= 1/sqrt(2 pi x), with x <= d for
/// the linear rows and x <= d/2 for the symplectic/orthogonal ones; rows
/// made of a single square-root term are rescaled directly.
pub fn corollary_bound(d: u64) -> Result<CorollaryReport> {
    if d < 4 {
        return domain(format!("the corollary floor requires d >= 4, got {d}"));
    }
    let inv_sqrt_2pi = 1.0 / (2.0 * std::f64::consts::PI).sqrt();
    let inv_sqrt_pi = 1.0 / std::f64::consts::PI.sqrt();
    let sqrt2_over_sqrt_pi = 2f64.sqrt() / std::f64::consts::PI.sqrt();
    let mut trace: Vec<(String, f64)> = Vec::new();
    let mut push = |label: &str, k: f64| {
        trace.push((label.to_string(), k));
    };

    // Linear rows: coefficient sums scaled by 1/sqrt(2 pi).
    push("linear m=2,3", 0.25 * inv_sqrt_2pi);
    push("linear m=4,5", (1.0 / 8.0 + 3.0 / 16.0) * inv_sqrt_2pi);
    push("linear m=6,7", (1.0 / 8.0 + 7.0 / 32.0) * inv_sqrt_2pi);
    push(
        "linear m=8..11",
        (1.0 / 16.0 + 7.0 / 64.0 + 49.0 / 256.0) * inv_sqrt_2pi,
    );
    push(
        "linear m=12..15",
        (1.0 / 16.0 + 35.0 / 256.0 + 385.0 / 2048.0) * inv_sqrt_2pi,
    );
    push("linear m>=16", 0.238 * inv_sqrt_2pi);

    // Symplectic/orthogonal rows: x <= d/2 gives the 1/sqrt(pi) scale.
    push("symplectic k=1", 25.0 / 116.0 * sqrt2_over_sqrt_pi);
    push("symplectic k=2,3", (1.0 / 8.0) * inv_sqrt_pi);
    push("symplectic k=4,5", (1.0 / 16.0 + 3.0 / 32.0) * inv_sqrt_pi);
    push("symplectic k=6,7", (1.0 / 16.0 + 7.0 / 64.0) * inv_sqrt_pi);
    push(
        "symplectic k=8..11",
        (1.0 / 32.0 + 7.0 / 128.0 + 49.0 / 512.0) * inv_sqrt_pi,
    );
    push(
        "symplectic k=12..16",
        (1.0 / 32.0 + 35.0 / 512.0 + 385.0 / 4096.0) * inv_sqrt_pi,
    );
    push("orthogonal k=1 (m=3)", 25.0 / 116.0 * sqrt2_over_sqrt_pi);
    // chi >= 2/3 once the second factor has half-rank >= 2.
    push(
        "orthogonal k=2",
        25.0 / 232.0 * (2.0 / 3.0) * sqrt2_over_sqrt_pi,
    );
    push("orthogonal k=3", (1.0 / 8.0) * inv_sqrt_pi);
    push("orthogonal k=4", (3.0 / 32.0) * inv_sqrt_pi);
    push("orthogonal k=5", (1.0 / 16.0 + 3.0 / 32.0) * inv_sqrt_pi);
    push(
        "orthogonal k=6,7",
        (1.0 / 16.0 + 13.0 / 192.0) * inv_sqrt_pi,
    );
    push(
        "orthogonal k=8",
        (7.0 / 128.0 + 49.0 / 512.0) * inv_sqrt_pi,
    );
    push(
        "orthogonal k=9..11",
        (1.0 / 32.0 + 7.0 / 128.0 + 397.0 / 5120.0) * inv_sqrt_pi,
    );
    push(
        "orthogonal k=12..16",
        (1.0 / 32.0 + 35.0 / 512.0 + 385.0 / 4096.0) * inv_sqrt_pi,
    );
    push("symplectic-orthogonal k>=17", (57.0 / 500.0) * inv_sqrt_pi);

    let k_constant = trace
        .iter()
        .map(|(_, k)| *k)
        .fold(f64::INFINITY, f64::min);
    Ok(CorollaryReport {
        value: k_constant / (d as f64).sqrt(),
        k_constant,
        trace,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::rat;

    #[test]
    fn window_power_examples() {
        assert_eq!(p0_value(16).unwrap(), 2);
        assert_eq!(p0_value(400).unwrap(), 4);
    }

    #[test]
    fn table2_matches_published() {
        let (rows, total) = table2();
        assert_eq!(rows.len(), 7);
        for (row, &(_, _, factor, _, contribution)) in
            rows.iter().zip(crate::table_data::TABLE2_PUBLISHED.iter())
        {
            assert!(
                (row.factor - factor).abs() <= 1e-9,
                "{}: factor {} vs {}",
                row.interval,
                row.factor,
                factor
            );
            assert!(
                (row.contribution - contribution).abs() <= 1e-9,
                "{}: contribution {} vs {}",
                row.interval,
                row.contribution,
                contribution
            );
        }
        assert!((total - crate::table_data::TABLE2_TOTAL).abs() <= 1e-9);
    }

    #[test]
    fn balanced_floor_examples() {
        let cs = CentralizerSpec::new(CentralizerKind::LinearUnitary, 12, 4, 3).unwrap();
        let r = pm_balanced_bound(&cs).unwrap();
        assert!(r.value >= 0.078125);

        let cs = CentralizerSpec::new(CentralizerKind::Symplectic, 12, 4, 3).unwrap();
        let r = pm_balanced_bound(&cs).unwrap();
        assert!(r.value >= 0.039062);

        // GL_2(3) x GL_2(3): the exact small-rank sum is 1/8.
        let cs = CentralizerSpec::new(CentralizerKind::LinearUnitary, 4, 2, 3).unwrap();
        let r = pm_balanced_bound(&cs).unwrap();
        assert_eq!(r.computed_exact.unwrap(), rat(1, 8));
        assert_eq!(r.value, 0.125);

        // Out of range.
        let cs = CentralizerSpec::new(CentralizerKind::LinearUnitary, 40, 3, 3).unwrap();
        assert!(pm_balanced_bound(&cs).is_err());
    }

    #[test]
    fn general_rows_examples() {
        // Linear m=2: s_not(n-m, 2)/4.
        let cs = CentralizerSpec::new(CentralizerKind::LinearUnitary, 10, 2, 3).unwrap();
        let r = pm_general_bound(&cs).unwrap();
        assert_eq!(
            r.exact.unwrap(),
            s_not(8, 2).unwrap() / rat(4, 1)
        );

        // Symplectic k=2 row carries the 25/232 square-root term.
        let cs = CentralizerSpec::new(CentralizerKind::Symplectic, 20, 4, 3).unwrap();
        let r = pm_general_bound(&cs).unwrap();
        let expected = to_f64(&(s_not(8, 2).unwrap() / rat(8, 1)))
            + 25.0 / (232.0 * (std::f64::consts::PI * 8.0).sqrt());
        assert!((r.value - expected).abs() < 1e-12);

        // Orthogonal k=1 needs m=3.
        let cs = CentralizerSpec::new(CentralizerKind::Orthogonal, 13, 3, 3).unwrap();
        let r = pm_general_bound(&cs).unwrap();
        let expected = 25.0 / (116.0 * (std::f64::consts::PI * 4.0).sqrt());
        assert!((r.value - expected).abs() < 1e-12);

        // Wide-rank linear coefficients sum to 0.238 at most.
        let cs = CentralizerSpec::new(CentralizerKind::LinearUnitary, 200, 40, 3).unwrap();
        let r = pm_general_bound(&cs).unwrap();
        assert!(r.value > 0.0 && r.value <= 0.238);
    }

    #[test]
    fn wide_rank_row_range() {
        // Sp/SO wide-rank coefficients applied to values in (0,1] always
        // land in (0, 57/500].
        let cs = CentralizerSpec::new(CentralizerKind::Symplectic, 200, 40, 3).unwrap();
        let r = pm_general_bound(&cs).unwrap();
        assert!(r.value > 0.0 && r.value <= 57.0 / 500.0);
    }

    #[test]
    fn corollary_basics() {
        let r4 = corollary_bound(4).unwrap();
        let r100 = corollary_bound(100).unwrap();
        assert!(r4.value > r100.value);
        assert!(r4.k_constant > 0.0 && r4.k_constant < 1.0);
        assert!((r4.value - r4.k_constant / 2.0).abs() < 1e-15);
        assert!(corollary_bound(3).is_err());
        // The floor must sit below the one exactly-known product value.
        assert!(r4.value <= 33.0 / 128.0);
    }

    #[test]
    fn centralizer_guards() {
        assert!(CentralizerSpec::new(CentralizerKind::Symplectic, 10, 3, 3).is_err());
        assert!(CentralizerSpec::new(CentralizerKind::Orthogonal, 10, 2, 3).is_err());
        assert!(CentralizerSpec::new(CentralizerKind::LinearUnitary, 4, 3, 3).is_err());
        assert!(CentralizerSpec::new(CentralizerKind::LinearUnitary, 10, 2, 4).is_err());
    }
}
