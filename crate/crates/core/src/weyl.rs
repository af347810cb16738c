//! Weyl-group class enumeration for the classical families, the maximal-torus
//! shapes attached to each class, and 2-part exponent classification.
//!
//! For the linear and unitary families the classes are cycle types of S_n.
//! For the symplectic and orthogonal families they are signed cycle types:
//! a positive part b contributes a cyclic torus factor of order q^b - 1 and a
//! negative part one of order q^b + 1. The even-dimensional orthogonal
//! families keep only classes whose number of negative parts has the right
//! parity (even for plus type, odd for minus type) and carry doubled weights
//! because their Weyl group has index 2 in the full signed-permutation group.

use std::collections::BTreeMap;

use num::{BigUint, One, Zero};

use crate::error::{domain, Error, Result};
use crate::rat::{factorial, rat_big, rat_u128, Rat};
use crate::symmetric::{is_prime_power, Partition, Partitions};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Gl,
    Sl,
    Gu,
    Su,
    Sp,
    SoOdd,
    SoPlus,
    SoMinus,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::Gl,
        Family::Sl,
        Family::Gu,
        Family::Su,
        Family::Sp,
        Family::SoOdd,
        Family::SoPlus,
        Family::SoMinus,
    ];

    /// Families whose Weyl group is a symmetric group.
    pub fn is_linear_kind(self) -> bool {
        matches!(self, Family::Gl | Family::Sl | Family::Gu | Family::Su)
    }

    /// Families whose Weyl group lives in the signed-permutation group.
    pub fn is_signed_kind(self) -> bool {
        !self.is_linear_kind()
    }

    /// Sign in the torus factor orders q^a - epsilon^a for linear kinds:
    /// +1 for GL/SL, -1 for GU/SU.
    pub fn epsilon(self) -> i8 {
        match self {
            Family::Gl | Family::Sl => 1,
            Family::Gu | Family::Su => -1,
            Family::SoPlus => 1,
            Family::SoMinus => -1,
            _ => 0,
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Family::Gl => "GL",
            Family::Sl => "SL",
            Family::Gu => "GU",
            Family::Su => "SU",
            Family::Sp => "Sp",
            Family::SoOdd => "SO_odd",
            Family::SoPlus => "SO+",
            Family::SoMinus => "SO-",
        }
    }

    pub fn parse(s: &str) -> Result<Family> {
        match s.to_ascii_uppercase().replace('_', "").as_str() {
            "GL" => Ok(Family::Gl),
            "SL" => Ok(Family::Sl),
            "GU" => Ok(Family::Gu),
            "SU" => Ok(Family::Su),
            "SP" => Ok(Family::Sp),
            "SOODD" | "SOO" | "SO1" => Ok(Family::SoOdd),
            "SO+" | "SOPLUS" | "SOP" => Ok(Family::SoPlus),
            "SO-" | "SOMINUS" | "SOM" => Ok(Family::SoMinus),
            other => domain(format!(
                "unknown family {other:?} (expected GL, SL, GU, SU, Sp, SO_odd, SO+ or SO-)"
            )),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    Plain,
    Omega,
    Projective,
    ProjectiveOmega,
}

impl Variant {
    pub fn parse(s: &str) -> Result<Variant> {
        match s.to_ascii_lowercase().as_str() {
            "plain" => Ok(Variant::Plain),
            "omega" => Ok(Variant::Omega),
            "projective" => Ok(Variant::Projective),
            "projective-omega" | "projectiveomega" => Ok(Variant::ProjectiveOmega),
            other => domain(format!("unknown variant {other:?}")),
        }
    }
}

/// A classical group: family tag, rank parameter (n for linear kinds, l for
/// symplectic/orthogonal kinds), odd field size q, and a central/derived
/// variant flag.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupSpec {
    pub family: Family,
    pub rank: u32,
    pub q: u64,
    pub variant: Variant,
}

impl GroupSpec {
    pub fn new(family: Family, rank: u32, q: u64) -> Result<GroupSpec> {
        GroupSpec::with_variant(family, rank, q, Variant::Plain)
    }

    pub fn with_variant(family: Family, rank: u32, q: u64, variant: Variant) -> Result<GroupSpec> {
        if rank == 0 {
            return domain("rank parameter must be >= 1");
        }
        if q < 3 || q.is_multiple_of(2) || !is_prime_power(q) {
            return domain(format!("q must be an odd prime power >= 3, got {q}"));
        }
        if matches!(variant, Variant::Omega | Variant::ProjectiveOmega)
            && !matches!(family, Family::SoOdd | Family::SoPlus | Family::SoMinus)
        {
            return domain("Omega variants exist only for orthogonal families");
        }
        Ok(GroupSpec {
            family,
            rank,
            q,
            variant,
        })
    }

    /// Dimension of the natural module.
    pub fn dimension(&self) -> u64 {
        match self.family {
            Family::Gl | Family::Sl | Family::Gu | Family::Su => self.rank as u64,
            Family::Sp | Family::SoPlus | Family::SoMinus => 2 * self.rank as u64,
            Family::SoOdd => 2 * self.rank as u64 + 1,
        }
    }

    pub fn label(&self) -> String {
        let base = match self.family {
            Family::Gl => format!("GL_{}({})", self.rank, self.q),
            Family::Sl => format!("SL_{}({})", self.rank, self.q),
            Family::Gu => format!("GU_{}({})", self.rank, self.q),
            Family::Su => format!("SU_{}({})", self.rank, self.q),
            Family::Sp => format!("Sp_{}({})", 2 * self.rank, self.q),
            Family::SoOdd => format!("SO_{}({})", 2 * self.rank + 1, self.q),
            Family::SoPlus => format!("SO+_{}({})", 2 * self.rank, self.q),
            Family::SoMinus => format!("SO-_{}({})", 2 * self.rank, self.q),
        };
        match self.variant {
            Variant::Plain => base,
            Variant::Omega => format!("Omega[{base}]"),
            Variant::Projective => format!("P[{base}]"),
            Variant::ProjectiveOmega => format!("POmega[{base}]"),
        }
    }
}

/// t(q): the 2-part of q-1 when q = 1 mod 4, of q+1 when q = 3 mod 4.
/// This is the largest 2-part among the orders q^a -/+ 1 with a odd, and the
/// unit in which all torus 2-part exponents are expressed.
pub fn t_of_q(q: u64) -> Result<u128> {
    if q.is_multiple_of(2) || q < 3 {
        return domain(format!("t(q) requires odd q >= 3, got {q}"));
    }
    let x = if q % 4 == 1 { q - 1 } else { q + 1 };
    Ok(crate::rat::two_part_u128(x as u128))
}

/// Kind of a cyclic torus factor: order q^a - 1 or q^a + 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FactorKind {
    MinusOne,
    PlusOne,
}

/// Closed-form 2-part of q^i -/+ 1 for odd q:
///   (q^i + 1)_2 = 2 for even i, (q+1)_2 for odd i;
///   (q^i - 1)_2 = (q-1)_2 for odd i, i_2 * t(q) for even i.
pub fn two_part_qpm(q: u64, i: u32, kind: FactorKind) -> Result<u128> {
    if q.is_multiple_of(2) || q < 3 {
        return domain(format!("two_part_qpm requires odd q >= 3, got {q}"));
    }
    if i == 0 {
        return domain("exponent i must be >= 1");
    }
    Ok(match kind {
        FactorKind::PlusOne => {
            if i.is_multiple_of(2) {
                2
            } else {
                crate::rat::two_part_u128((q + 1) as u128)
            }
        }
        FactorKind::MinusOne => {
            if i % 2 == 1 {
                crate::rat::two_part_u128((q - 1) as u128)
            } else {
                let i2 = 1u128 << i.trailing_zeros();
                i2 * t_of_q(q)?
            }
        }
    })
}

#[derive(Debug, Clone)]
pub struct TorusFactor {
    pub exponent: u32,
    pub kind: FactorKind,
    pub order: BigUint,
    /// 2-adic valuation of the factor order.
    pub two_adic: u32,
}

/// Multiset of cyclic factor orders q^a -/+ 1 describing a maximal torus.
#[derive(Debug, Clone)]
pub struct TorusShape {
    factors: Vec<TorusFactor>,
}

impl TorusShape {
    pub fn build(q: u64, parts: &[(u32, FactorKind)]) -> Result<TorusShape> {
        if q.is_multiple_of(2) || q < 3 {
            return domain("torus shapes require odd q >= 3");
        }
        let mut factors = Vec::with_capacity(parts.len());
        for &(a, kind) in parts {
            if a == 0 {
                return domain("torus factor exponent must be >= 1");
            }
            let qa = BigUint::from(q).pow(a);
            let order = match kind {
                FactorKind::MinusOne => qa - BigUint::one(),
                FactorKind::PlusOne => qa + BigUint::one(),
            };
            let two_adic = order.trailing_zeros().unwrap_or(0) as u32;
            // The closed form and the direct valuation must agree.
            let closed = two_part_qpm(q, a, kind)?;
            if closed != 1u128 << two_adic {
                return Err(Error::Internal(format!(
                    "factor 2-part mismatch for q={q}, a={a}, kind={kind:?}: \
                     direct 2^{two_adic} vs closed {closed}"
                )));
            }
            factors.push(TorusFactor {
                exponent: a,
                kind,
                order,
                two_adic,
            });
        }
        Ok(TorusShape { factors })
    }

    pub fn factors(&self) -> &[TorusFactor] {
        &self.factors
    }

    pub fn is_cyclic(&self) -> bool {
        self.factors.len() == 1
    }

    /// 2-adic valuation of the torus exponent: max over the factors.
    pub fn two_exp_bits(&self) -> u32 {
        self.factors.iter().map(|f| f.two_adic).max().unwrap_or(0)
    }

    /// 2-part exponent of the torus as a power of two.
    pub fn two_exp(&self) -> u128 {
        1u128 << self.two_exp_bits()
    }

    pub fn orders(&self) -> Vec<BigUint> {
        self.factors.iter().map(|f| f.order.clone()).collect()
    }
}

/// Signed cycle type: positive parts map to factors q^b - 1, negative parts
/// to factors q^b + 1. Parts are kept weakly decreasing within each sign.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SignedPartition {
    pos: Vec<u32>,
    neg: Vec<u32>,
}

impl SignedPartition {
    pub fn new(mut pos: Vec<u32>, mut neg: Vec<u32>) -> Result<SignedPartition> {
        if pos.iter().chain(neg.iter()).any(|&p| p == 0) {
            return domain("signed partition parts must be positive");
        }
        if pos.is_empty() && neg.is_empty() {
            return domain("signed partition must have at least one part");
        }
        pos.sort_unstable_by(|a, b| b.cmp(a));
        neg.sort_unstable_by(|a, b| b.cmp(a));
        Ok(SignedPartition { pos, neg })
    }

    pub fn pos_parts(&self) -> &[u32] {
        &self.pos
    }

    pub fn neg_parts(&self) -> &[u32] {
        &self.neg
    }

    pub fn ell(&self) -> u64 {
        self.pos.iter().chain(self.neg.iter()).map(|&p| p as u64).sum()
    }

    pub fn neg_count(&self) -> usize {
        self.neg.len()
    }

    pub fn total_parts(&self) -> usize {
        self.pos.len() + self.neg.len()
    }

    /// Class proportion inside the full signed-permutation group of degree l:
    /// the reciprocal of the centralizer order prod over distinct
    /// (part, sign) pairs of (2a)^m * m!.
    pub fn hyperoct_weight(&self) -> Rat {
        let mut den = BigUint::one();
        for parts in [&self.pos, &self.neg] {
            let mut mult: BTreeMap<u32, u32> = BTreeMap::new();
            for &a in parts.iter() {
                *mult.entry(a).or_insert(0) += 1;
            }
            for (a, m) in mult {
                den *= BigUint::from(2 * a as u64).pow(m) * factorial(m as u64);
            }
        }
        rat_big(BigUint::one(), den)
    }

    pub fn label(&self) -> String {
        let mut pieces: Vec<String> = self.pos.iter().map(|a| format!("{a}+")).collect();
        pieces.extend(self.neg.iter().map(|a| format!("{a}-")));
        format!("[{}]", pieces.join(","))
    }
}

/// A Weyl-group class descriptor for any family.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ClassDescriptor {
    Linear(Partition),
    Signed(SignedPartition),
}

impl ClassDescriptor {
    pub fn label(&self) -> String {
        match self {
            ClassDescriptor::Linear(p) => format!(
                "({})",
                p.parts()
                    .iter()
                    .map(|a| a.to_string())
                    .collect::<Vec<_>>()
                    .join(",")
            ),
            ClassDescriptor::Signed(sp) => sp.label(),
        }
    }
}

/// Iterator over signed partitions of `l`. For each plain partition
/// (reverse-lexicographic) the sign splits run from all-positive downward,
/// one distinct part at a time, so positives come first deterministically.
struct SignedPartitions {
    parts_iter: Partitions,
    // (part value, multiplicity, current positive count) per distinct part
    current: Option<Vec<(u32, u32, u32)>>,
}

impl SignedPartitions {
    fn of(l: u32) -> SignedPartitions {
        let mut parts_iter = Partitions::of(l);
        let current = parts_iter.next().map(|p| {
            p.multiplicities()
                .into_iter()
                .rev()
                .map(|(a, m)| (a, m, m))
                .collect()
        });
        SignedPartitions {
            parts_iter,
            current,
        }
    }

    fn emit(state: &[(u32, u32, u32)]) -> SignedPartition {
        let mut pos = Vec::new();
        let mut neg = Vec::new();
        for &(a, m, c) in state {
            pos.extend(std::iter::repeat_n(a, c as usize));
            neg.extend(std::iter::repeat_n(a, (m - c) as usize));
        }
        SignedPartition::new(pos, neg).expect("generated split is valid")
    }
}

impl Iterator for SignedPartitions {
    type Item = SignedPartition;

    fn next(&mut self) -> Option<SignedPartition> {
        let state = self.current.as_mut()?;
        let item = Self::emit(state);
        // Mixed-radix decrement of the positive counts.
        let mut i = state.len();
        loop {
            if i == 0 {
                self.current = self.parts_iter.next().map(|p| {
                    p.multiplicities()
                        .into_iter()
                        .rev()
                        .map(|(a, m)| (a, m, m))
                        .collect()
                });
                break;
            }
            i -= 1;
            if state[i].2 > 0 {
                state[i].2 -= 1;
                for entry in state.iter_mut().skip(i + 1) {
                    entry.2 = entry.1;
                }
                break;
            }
        }
        Some(item)
    }
}

/// Stream of (class descriptor, weight) pairs for the Weyl group of `spec`.
/// Weights are exact class proportions and sum to 1 over the stream.
pub fn fclass_enum(spec: &GroupSpec) -> Result<Box<dyn Iterator<Item = (ClassDescriptor, Rat)>>> {
    let rank = spec.rank;
    match spec.family {
        Family::Gl | Family::Sl | Family::Gu | Family::Su => Ok(Box::new(
            Partitions::of(rank).map(|p| {
                let w = p.class_weight();
                (ClassDescriptor::Linear(p), w)
            }),
        )),
        Family::Sp | Family::SoOdd => Ok(Box::new(SignedPartitions::of(rank).map(|sp| {
            let w = sp.hyperoct_weight();
            (ClassDescriptor::Signed(sp), w)
        }))),
        Family::SoPlus | Family::SoMinus => {
            let want_odd = spec.family == Family::SoMinus;
            let two = rat_u128(2, 1);
            Ok(Box::new(
                SignedPartitions::of(rank)
                    .filter(move |sp| (sp.neg_count() % 2 == 1) == want_odd)
                    .map(move |sp| {
                        let w = sp.hyperoct_weight() * two.clone();
                        (ClassDescriptor::Signed(sp), w)
                    }),
            ))
        }
    }
}

/// Maximal-torus shape attached to a class. For SL/SU this is the shape of
/// the ambient GL/GU torus; only its 2-part exponent is consumed for those
/// families (the norm-one subtorus itself has a different cyclic structure).
pub fn torus_shape(spec: &GroupSpec, class: &ClassDescriptor) -> Result<TorusShape> {
    match (class, spec.family.is_linear_kind()) {
        (ClassDescriptor::Linear(p), true) => {
            if p.n() != spec.rank as u64 {
                return domain("class degree does not match the group rank");
            }
            let eps = spec.family.epsilon();
            let parts: Vec<(u32, FactorKind)> = p
                .parts()
                .iter()
                .map(|&a| {
                    let kind = if eps == 1 {
                        FactorKind::MinusOne
                    } else if a % 2 == 1 {
                        // q^a - (-1)^a with a odd
                        FactorKind::PlusOne
                    } else {
                        FactorKind::MinusOne
                    };
                    (a, kind)
                })
                .collect();
            TorusShape::build(spec.q, &parts)
        }
        (ClassDescriptor::Signed(sp), false) => {
            if sp.ell() != spec.rank as u64 {
                return domain("class degree does not match the group rank");
            }
            let mut parts: Vec<(u32, FactorKind)> = Vec::with_capacity(sp.total_parts());
            parts.extend(sp.pos_parts().iter().map(|&a| (a, FactorKind::MinusOne)));
            parts.extend(sp.neg_parts().iter().map(|&a| (a, FactorKind::PlusOne)));
            TorusShape::build(spec.q, &parts)
        }
        _ => domain("class descriptor kind does not match the family"),
    }
}

/// Symbolic 2-part exponent class: 2, or t(q) times a power of two.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExpClass {
    Two,
    /// t(q) * 2^j
    TTimes(u32),
}

impl ExpClass {
    pub fn label(self) -> String {
        match self {
            ExpClass::Two => "2".to_string(),
            ExpClass::TTimes(0) => "t".to_string(),
            ExpClass::TTimes(j) => format!("{}t", 1u128 << j),
        }
    }

    pub fn concrete(self, q: u64) -> Result<u128> {
        Ok(match self {
            ExpClass::Two => 2,
            ExpClass::TTimes(j) => t_of_q(q)? << j,
        })
    }
}

/// Classify a signed class symbolically from q mod 4 alone.
///
/// q = 1 mod 4: t * (largest 2-part among positive parts) when a positive
/// part exists, else 2. q = 3 mod 4: t * (largest 2-part among positive
/// parts) when some positive part is even; t when all positive parts are odd
/// but some negative part is odd; else 2. The direct valuation of the factor
/// orders is authoritative; this closed form is asserted against it wherever
/// a concrete q is available.
pub fn classify_signed(q_mod4: u8, sp: &SignedPartition) -> Result<ExpClass> {
    if q_mod4 != 1 && q_mod4 != 3 {
        return domain("q_mod4 must be 1 or 3");
    }
    let max_pos_v2 = sp.pos_parts().iter().map(|a| a.trailing_zeros()).max();
    Ok(if q_mod4 == 1 {
        match max_pos_v2 {
            Some(v) => ExpClass::TTimes(v),
            None => ExpClass::Two,
        }
    } else {
        match max_pos_v2 {
            Some(v) if v >= 1 => ExpClass::TTimes(v),
            _ => {
                if sp.neg_parts().iter().any(|a| a % 2 == 1) {
                    ExpClass::TTimes(0)
                } else {
                    ExpClass::Two
                }
            }
        }
    })
}

/// Classify a linear/unitary class symbolically: t * 2^j with j >= 1 when the
/// underlying permutation has even 2-part order 2^j, otherwise the class of
/// (q - epsilon)_2, which is t when epsilon matches the congruence of q and 2
/// otherwise.
pub fn classify_linear(q_mod4: u8, epsilon: i8, p: &Partition) -> Result<ExpClass> {
    if q_mod4 != 1 && q_mod4 != 3 {
        return domain("q_mod4 must be 1 or 3");
    }
    let j = p.parts().iter().map(|a| a.trailing_zeros()).max().unwrap();
    Ok(if j >= 1 {
        ExpClass::TTimes(j)
    } else {
        let matches_t = (q_mod4 == 1 && epsilon == 1) || (q_mod4 == 3 && epsilon == -1);
        if matches_t {
            ExpClass::TTimes(0)
        } else {
            ExpClass::Two
        }
    })
}

/// 2-part exponent of the torus attached to a class: the direct maximum of
/// the factor 2-parts, asserted equal to the closed-form classification.
pub fn torus_two_exp(spec: &GroupSpec, class: &ClassDescriptor) -> Result<u128> {
    let shape = torus_shape(spec, class)?;
    let direct = shape.two_exp();
    let q_mod4 = (spec.q % 4) as u8;
    let closed = match class {
        ClassDescriptor::Linear(p) => {
            classify_linear(q_mod4, spec.family.epsilon(), p)?.concrete(spec.q)?
        }
        ClassDescriptor::Signed(sp) => classify_signed(q_mod4, sp)?.concrete(spec.q)?,
    };
    if direct != closed {
        return Err(Error::Internal(format!(
            "torus exponent mismatch for {} class {}: direct {} vs closed form {}",
            spec.label(),
            class.label(),
            direct,
            closed
        )));
    }
    Ok(direct)
}

#[derive(Debug, Clone)]
pub struct Table4Row {
    pub group: &'static str,
    pub exp: ExpClass,
    /// Weight column for q = 1 mod 4.
    pub weight_q1: Rat,
    /// Weight column for q = 3 mod 4.
    pub weight_q3: Rat,
    /// min(columns)/2, the portable torus-count floor for the group.
    pub lower_bound: Rat,
}

const TABLE4_GROUPS: [(&str, Family, u32); 9] = [
    ("SO_3", Family::SoOdd, 1),
    ("SO_4+", Family::SoPlus, 2),
    ("SO_4-", Family::SoMinus, 2),
    ("SO_5", Family::SoOdd, 2),
    ("SO_6+", Family::SoPlus, 3),
    ("SO_6-", Family::SoMinus, 3),
    ("SO_7", Family::SoOdd, 3),
    ("SO_8+", Family::SoPlus, 4),
    ("SO_8-", Family::SoMinus, 4),
];

fn signed_class_stream(
    family: Family,
    rank: u32,
) -> Box<dyn Iterator<Item = (SignedPartition, Rat)>> {
    match family {
        Family::Sp | Family::SoOdd => Box::new(SignedPartitions::of(rank).map(|sp| {
            let w = sp.hyperoct_weight();
            (sp, w)
        })),
        Family::SoPlus | Family::SoMinus => {
            let want_odd = family == Family::SoMinus;
            Box::new(
                SignedPartitions::of(rank)
                    .filter(move |sp| (sp.neg_count() % 2 == 1) == want_odd)
                    .map(|sp| {
                        let w = sp.hyperoct_weight() * rat_u128(2, 1);
                        (sp, w)
                    }),
            )
        }
        _ => unreachable!("table4 groups are orthogonal"),
    }
}

/// Exact class weight of every 2-part exponent bucket for the small
/// orthogonal groups SO_3 .. SO_8^-, in both residue columns. Buckets run
/// from the largest exponent achievable at the rank down through t to 2, so
/// structurally-empty buckets of the minus types appear as explicit zeros.
pub fn table4() -> Result<Vec<Table4Row>> {
    let mut rows = Vec::new();
    for (label, family, rank) in TABLE4_GROUPS {
        let mut buckets_q1: BTreeMap<ExpClass, Rat> = BTreeMap::new();
        let mut buckets_q3: BTreeMap<ExpClass, Rat> = BTreeMap::new();
        for (sp, w) in signed_class_stream(family, rank) {
            let c1 = classify_signed(1, &sp)?;
            let c3 = classify_signed(3, &sp)?;
            *buckets_q1.entry(c1).or_insert_with(Rat::zero) += w.clone();
            *buckets_q3.entry(c3).or_insert_with(Rat::zero) += w;
        }
        let jmax = 31 - rank.leading_zeros();
        let mut exp_list: Vec<ExpClass> = (0..=jmax).rev().map(ExpClass::TTimes).collect();
        exp_list.push(ExpClass::Two);
        for exp in exp_list {
            let w1 = buckets_q1.get(&exp).cloned().unwrap_or_else(Rat::zero);
            let w3 = buckets_q3.get(&exp).cloned().unwrap_or_else(Rat::zero);
            let lower = w1.clone().min(w3.clone()) / rat_u128(2, 1);
            rows.push(Table4Row {
                group: label,
                exp,
                weight_q1: w1,
                weight_q3: w3,
                lower_bound: lower,
            });
        }
    }
    Ok(rows)
}
