//! Brute-force matrix-group censuses over small finite fields.
//!
//! Groups are given by generators (built-in families or a line-oriented
//! input file), closed under multiplication by breadth-first search, and
//! counted by 2-part order. Extension fields are supported through a
//! user-supplied irreducible polynomial; elements of GF(p^k) are packed as
//! integers c0 + c1 p + ... + c_{k-1} p^(k-1).

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use num::{BigInt, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{domain, Error, Result};
use crate::rat::{rat_u128, Rat};

pub const DEFAULT_BUDGET: usize = 1 << 20;

/// Field description: prime field when degree = 1, otherwise GF(p^degree)
/// with a monic irreducible reduction polynomial (coefficients c0..c_deg,
/// constant first).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FieldSpec {
    pub p: u64,
    pub degree: u32,
    pub poly: Vec<u64>,
}

impl FieldSpec {
    pub fn prime(p: u64) -> Result<FieldSpec> {
        if p < 2 || !is_prime(p) {
            return domain(format!("field characteristic must be prime, got {p}"));
        }
        Ok(FieldSpec {
            p,
            degree: 1,
            poly: Vec::new(),
        })
    }

    pub fn extension(p: u64, poly: Vec<u64>) -> Result<FieldSpec> {
        if p < 2 || !is_prime(p) {
            return domain(format!("field characteristic must be prime, got {p}"));
        }
        if poly.len() < 3 {
            return domain("extension polynomial needs degree >= 2 (constant coefficient first)");
        }
        let degree = (poly.len() - 1) as u32;
        if poly[degree as usize] != 1 {
            return domain("reduction polynomial must be monic");
        }
        if poly.iter().any(|&c| c >= p) {
            return domain("polynomial coefficients must be reduced mod p");
        }
        let spec = FieldSpec { p, degree, poly };
        spec.check_irreducible()?;
        Ok(spec)
    }

    pub fn size(&self) -> u64 {
        self.p.pow(self.degree)
    }

    /// Trial division by all monic polynomials of degree up to degree/2.
    /// Skipped when the search space is large; in that case a reducible
    /// polynomial surfaces later as a failed inversion.
    fn check_irreducible(&self) -> Result<()> {
        let half = self.degree / 2;
        if (self.p as f64).powi(half as i32 + 1) > 2e6 {
            return Ok(());
        }
        for deg in 1..=half {
            // Candidate divisor: x^deg + sum c_i x^i over all coefficient
            // choices.
            let count = self.p.pow(deg);
            for idx in 0..count {
                let mut divisor = vec![0u64; deg as usize + 1];
                let mut v = idx;
                for c in divisor.iter_mut().take(deg as usize) {
                    *c = v % self.p;
                    v /= self.p;
                }
                divisor[deg as usize] = 1;
                if poly_divides(&divisor, &self.poly, self.p) {
                    return domain(format!(
                        "reduction polynomial is not irreducible (divisible by a degree-{deg} factor)"
                    ));
                }
            }
        }
        Ok(())
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn poly_divides(divisor: &[u64], target: &[u64], p: u64) -> bool {
    // Remainder of target by monic divisor over F_p; true when zero.
    let mut rem: Vec<u64> = target.to_vec();
    let dd = divisor.len() - 1;
    while rem.len() > dd {
        let lead = *rem.last().unwrap() % p;
        let shift = rem.len() - 1 - dd;
        if lead != 0 {
            for (i, &dcoef) in divisor.iter().enumerate() {
                let idx = shift + i;
                let sub = (dcoef as u128 * lead as u128) % p as u128;
                rem[idx] = ((rem[idx] as u128 + p as u128 * p as u128 - sub) % p as u128) as u64;
            }
        }
        rem.pop();
    }
    rem.iter().all(|&c| c % p == 0)
}

/// Arithmetic over the (possibly extended) field, on packed elements.
#[derive(Debug, Clone)]
pub struct Field {
    pub spec: FieldSpec,
}

impl Field {
    pub fn new(spec: &FieldSpec) -> Field {
        Field { spec: spec.clone() }
    }

    pub fn size(&self) -> u64 {
        self.spec.size()
    }

    fn decode(&self, x: u64) -> Vec<u64> {
        let mut out = vec![0u64; self.spec.degree as usize];
        let mut v = x;
        for c in out.iter_mut() {
            *c = v % self.spec.p;
            v /= self.spec.p;
        }
        out
    }

    fn encode(&self, coeffs: &[u64]) -> u64 {
        let mut out = 0u64;
        for &c in coeffs.iter().rev() {
            out = out * self.spec.p + c % self.spec.p;
        }
        out
    }

    pub fn add(&self, a: u64, b: u64) -> u64 {
        if self.spec.degree == 1 {
            return (a + b) % self.spec.p;
        }
        let (ca, cb) = (self.decode(a), self.decode(b));
        let sum: Vec<u64> = ca.iter().zip(&cb).map(|(x, y)| (x + y) % self.spec.p).collect();
        self.encode(&sum)
    }

    pub fn neg(&self, a: u64) -> u64 {
        if self.spec.degree == 1 {
            return (self.spec.p - a % self.spec.p) % self.spec.p;
        }
        let ca = self.decode(a);
        let neg: Vec<u64> = ca.iter().map(|&x| (self.spec.p - x) % self.spec.p).collect();
        self.encode(&neg)
    }

    pub fn mul(&self, a: u64, b: u64) -> u64 {
        let p = self.spec.p as u128;
        if self.spec.degree == 1 {
            return ((a as u128 * b as u128) % p) as u64;
        }
        let (ca, cb) = (self.decode(a), self.decode(b));
        let deg = self.spec.degree as usize;
        let mut prod = vec![0u128; 2 * deg - 1];
        for (i, &x) in ca.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in cb.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x as u128 * y as u128) % p;
            }
        }
        // Reduce by the monic polynomial.
        for i in (deg..prod.len()).rev() {
            let lead = prod[i];
            if lead == 0 {
                continue;
            }
            prod[i] = 0;
            for (k, &c) in self.spec.poly.iter().take(deg).enumerate() {
                let idx = i - deg + k;
                prod[idx] = (prod[idx] + p * p - (lead * c as u128) % p) % p;
            }
        }
        let coeffs: Vec<u64> = prod[..deg].iter().map(|&c| c as u64).collect();
        self.encode(&coeffs)
    }

    pub fn pow(&self, mut base: u64, mut e: u64) -> u64 {
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u64) -> Result<u64> {
        if a == 0 {
            return domain("zero is not invertible");
        }
        let out = self.pow(a, self.size() - 2);
        if self.mul(out, a) != 1 {
            return Err(Error::Domain(
                "inversion failed; the reduction polynomial is not irreducible".into(),
            ));
        }
        Ok(out)
    }
}

/// Square matrix over the field, entries packed row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    pub n: usize,
    pub e: Vec<u64>,
}

impl Mat {
    pub fn identity(n: usize) -> Mat {
        let mut e = vec![0u64; n * n];
        for i in 0..n {
            e[i * n + i] = 1;
        }
        Mat { n, e }
    }

    pub fn from_rows(n: usize, entries: Vec<u64>) -> Result<Mat> {
        if entries.len() != n * n {
            return domain(format!("expected {} entries, got {}", n * n, entries.len()));
        }
        Ok(Mat { n, e: entries })
    }

    pub fn at(&self, i: usize, j: usize) -> u64 {
        self.e[i * self.n + j]
    }

    pub fn mul(&self, other: &Mat, f: &Field) -> Mat {
        let n = self.n;
        let mut out = vec![0u64; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = self.e[i * n + k];
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    let b = other.e[k * n + j];
                    if b == 0 {
                        continue;
                    }
                    out[i * n + j] = f.add(out[i * n + j], f.mul(a, b));
                }
            }
        }
        Mat { n, e: out }
    }

    pub fn pow(&self, mut e: u128, f: &Field) -> Mat {
        let mut acc = Mat::identity(self.n);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base, f);
            }
            base = base.mul(&base, f);
            e >>= 1;
        }
        acc
    }

    pub fn is_identity(&self) -> bool {
        let n = self.n;
        self.e
            .iter()
            .enumerate()
            .all(|(idx, &v)| v == if idx / n == idx % n { 1 } else { 0 })
    }

    /// Inverse by Gauss-Jordan elimination; errors when singular.
    pub fn inverse(&self, f: &Field) -> Result<Mat> {
        let n = self.n;
        let mut a: Vec<u64> = self.e.clone();
        let mut b = Mat::identity(n).e;
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| a[r * n + col] != 0)
                .ok_or_else(|| Error::Domain("matrix is singular".into()))?;
            if pivot != col {
                for j in 0..n {
                    a.swap(col * n + j, pivot * n + j);
                    b.swap(col * n + j, pivot * n + j);
                }
            }
            let inv = f.inv(a[col * n + col])?;
            for j in 0..n {
                a[col * n + j] = f.mul(a[col * n + j], inv);
                b[col * n + j] = f.mul(b[col * n + j], inv);
            }
            for r in 0..n {
                if r == col {
                    continue;
                }
                let factor = a[r * n + col];
                if factor == 0 {
                    continue;
                }
                for j in 0..n {
                    let sa = f.mul(factor, a[col * n + j]);
                    a[r * n + j] = f.add(a[r * n + j], f.neg(sa));
                    let sb = f.mul(factor, b[col * n + j]);
                    b[r * n + j] = f.add(b[r * n + j], f.neg(sb));
                }
            }
        }
        Ok(Mat { n, e: b })
    }
}

/// A matrix group given by generators.
#[derive(Debug, Clone)]
pub struct MatrixGroupInput {
    pub field: FieldSpec,
    pub dim: usize,
    pub generators: Vec<Mat>,
    pub declared_order: Option<u128>,
    pub label: String,
}

/// Parse the line-oriented group format:
///
/// ```text
/// p dim [order]
/// poly c0 c1 ... ck        (optional; monic, for GF(p^k))
/// a11 a12 ... ann          (one generator per line, row-major)
/// ```
///
/// Blank lines and lines starting with '#' are ignored.
pub fn parse_group_file(text: &str) -> Result<MatrixGroupInput> {
    let mut header: Option<(u64, usize, Option<u128>)> = None;
    let mut poly: Option<Vec<u64>> = None;
    let mut gens: Vec<(usize, Vec<u64>)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let toks: Vec<&str> = line.split_whitespace().collect();
        if header.is_none() {
            if toks.len() != 2 && toks.len() != 3 {
                return Err(Error::Parse {
                    line: lineno,
                    msg: "header must be `p dim [order]`".into(),
                });
            }
            let p: u64 = toks[0].parse().map_err(|_| Error::Parse {
                line: lineno,
                msg: format!("bad characteristic {:?}", toks[0]),
            })?;
            let dim: usize = toks[1].parse().map_err(|_| Error::Parse {
                line: lineno,
                msg: format!("bad dimension {:?}", toks[1]),
            })?;
            let order = if toks.len() == 3 {
                Some(toks[2].parse().map_err(|_| Error::Parse {
                    line: lineno,
                    msg: format!("bad order {:?}", toks[2]),
                })?)
            } else {
                None
            };
            if dim == 0 {
                return Err(Error::Parse {
                    line: lineno,
                    msg: "dimension must be positive".into(),
                });
            }
            header = Some((p, dim, order));
            continue;
        }
        if toks[0] == "poly" {
            if poly.is_some() || !gens.is_empty() {
                return Err(Error::Parse {
                    line: lineno,
                    msg: "poly line must appear once, directly after the header".into(),
                });
            }
            let coeffs: std::result::Result<Vec<u64>, _> =
                toks[1..].iter().map(|t| t.parse()).collect();
            poly = Some(coeffs.map_err(|_| Error::Parse {
                line: lineno,
                msg: "bad polynomial coefficient".into(),
            })?);
            continue;
        }
        let (_, dim, _) = header.unwrap();
        let entries: std::result::Result<Vec<u64>, _> =
            toks.iter().map(|t| t.parse()).collect();
        let entries = entries.map_err(|_| Error::Parse {
            line: lineno,
            msg: "bad matrix entry".into(),
        })?;
        if entries.len() != dim * dim {
            return Err(Error::Parse {
                line: lineno,
                msg: format!(
                    "generator needs {} entries for dimension {dim}, found {}",
                    dim * dim,
                    entries.len()
                ),
            });
        }
        gens.push((lineno, entries));
    }

    let (p, dim, declared_order) = header.ok_or(Error::Parse {
        line: 0,
        msg: "missing header line".into(),
    })?;
    let field = match poly {
        Some(coeffs) => FieldSpec::extension(p, coeffs)?,
        None => FieldSpec::prime(p)?,
    };
    if gens.is_empty() {
        return Err(Error::Parse {
            line: 0,
            msg: "no generators given".into(),
        });
    }
    let size = field.size();
    let mut generators = Vec::new();
    for (lineno, entries) in gens {
        if entries.iter().any(|&x| x >= size) {
            return Err(Error::Parse {
                line: lineno,
                msg: format!("entry out of range for field of size {size}"),
            });
        }
        generators.push(Mat::from_rows(dim, entries).map_err(|e| Error::Parse {
            line: lineno,
            msg: e.to_string(),
        })?);
    }
    Ok(MatrixGroupInput {
        field,
        dim,
        generators,
        declared_order,
        label: format!("file group (p={p}, dim={dim})"),
    })
}

/// Closure of the generators under multiplication, breadth-first. The result
/// is returned sorted by entry vector, so it does not depend on generator
/// order. Errors when the budget is exceeded or a generator is singular.
pub fn enumerate(input: &MatrixGroupInput, budget: usize) -> Result<Vec<Mat>> {
    let f = Field::new(&input.field);
    for g in &input.generators {
        if g.n != input.dim {
            return domain("generator dimension mismatch");
        }
        g.inverse(&f)
            .map_err(|_| Error::Domain("generator is not invertible".into()))?;
    }
    let mut seen: HashSet<Vec<u64>> = HashSet::new();
    let mut queue: VecDeque<Mat> = VecDeque::new();
    let id = Mat::identity(input.dim);
    seen.insert(id.e.clone());
    queue.push_back(id);
    while let Some(x) = queue.pop_front() {
        for g in &input.generators {
            let y = x.mul(g, &f);
            if !seen.contains(&y.e) {
                if seen.len() >= budget {
                    return Err(Error::BudgetExceeded { budget });
                }
                seen.insert(y.e.clone());
                queue.push_back(y);
            }
        }
    }
    if let Some(order) = input.declared_order {
        if seen.len() as u128 != order {
            return Err(Error::Internal(format!(
                "enumerated {} elements but the declared order is {order}",
                seen.len()
            )));
        }
    }
    let mut out: Vec<Mat> = seen
        .into_iter()
        .map(|e| Mat { n: input.dim, e })
        .collect();
    out.sort_unstable_by(|a, b| a.e.cmp(&b.e));
    Ok(out)
}

/// 2-part order of g in a group of the given order: strip the odd part of
/// the group order by powering, then square until the identity appears.
pub fn two_part_order(f: &Field, g: &Mat, group_order: u128) -> u128 {
    let s = group_order.trailing_zeros();
    let odd_part = group_order >> s;
    let mut h = g.pow(odd_part, f);
    let mut r = 0u32;
    while !h.is_identity() {
        h = h.mul(&h, f);
        r += 1;
        assert!(r <= s, "element order does not divide the group order");
    }
    1u128 << r
}

/// Exact element counts keyed by 2-part order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusTable {
    pub total: u128,
    pub by_two_part: BTreeMap<u128, u128>,
    pub approximate: bool,
}

impl CensusTable {
    pub fn proportion(&self, key: u128) -> Rat {
        let count = self.by_two_part.get(&key).copied().unwrap_or(0);
        rat_u128(count, self.total)
    }

    pub fn proportions(&self) -> BTreeMap<u128, Rat> {
        self.by_two_part
            .keys()
            .map(|&k| (k, self.proportion(k)))
            .collect()
    }
}

pub fn census(input: &MatrixGroupInput, budget: usize) -> Result<CensusTable> {
    let elements = enumerate(input, budget)?;
    let f = Field::new(&input.field);
    let order = elements.len() as u128;
    let mut by_two_part: BTreeMap<u128, u128> = BTreeMap::new();
    for g in &elements {
        *by_two_part.entry(two_part_order(&f, g, order)).or_insert(0) += 1;
    }
    Ok(CensusTable {
        total: order,
        by_two_part,
        approximate: false,
    })
}

/// Exact probability that |x|_2 > |y|_2 for independent uniform draws from
/// the two censused groups.
pub fn pm_exact(cx: &CensusTable, cy: &CensusTable) -> Rat {
    let mut favorable = BigInt::zero();
    for (&kx, &nx) in &cx.by_two_part {
        for (&ky, &ny) in &cy.by_two_part {
            if kx > ky {
                favorable += BigInt::from(nx) * BigInt::from(ny);
            }
        }
    }
    Rat::new(
        favorable,
        BigInt::from(cx.total) * BigInt::from(cy.total),
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BuiltinFamily {
    Gl,
    Sl,
    Sp,
}

impl BuiltinFamily {
    pub fn parse(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "GL" => Ok(BuiltinFamily::Gl),
            "SL" => Ok(BuiltinFamily::Sl),
            "SP" => Ok(BuiltinFamily::Sp),
            other => Err(Error::Unsupported(format!(
                "no builtin generators for {other:?}; supply a group file (builtins: GL, SL, Sp)"
            ))),
        }
    }
}

fn checked_order_product(terms: impl Iterator<Item = u128>) -> Result<u128> {
    let mut acc: u128 = 1;
    for t in terms {
        acc = acc
            .checked_mul(t)
            .ok_or_else(|| Error::Domain("group order overflows 128 bits".into()))?;
    }
    Ok(acc)
}

fn gl_order(n: u32, q: u64) -> Result<u128> {
    let qn = checked_order_product((0..n).map(|_| q as u128))?;
    checked_order_product((0..n).map(|i| {
        let qi = (0..i).fold(1u128, |acc, _| acc * q as u128);
        qn - qi
    }))
}

fn sp_order(l: u32, q: u64) -> Result<u128> {
    let q = q as u128;
    let mut acc = checked_order_product((0..l * l).map(|_| q))?;
    for i in 1..=l {
        let q2i = (0..2 * i).fold(1u128, |acc, _| acc * q);
        acc = acc
            .checked_mul(q2i - 1)
            .ok_or_else(|| Error::Domain("group order overflows 128 bits".into()))?;
    }
    Ok(acc)
}

fn primitive_root(p: u64) -> u64 {
    let mut factors = Vec::new();
    let mut m = p - 1;
    let mut d = 2u64;
    while d * d <= m {
        if m.is_multiple_of(d) {
            factors.push(d);
            while m.is_multiple_of(d) {
                m /= d;
            }
        }
        d += 1;
    }
    if m > 1 {
        factors.push(m);
    }
    let f = Field::new(&FieldSpec::prime(p).unwrap());
    'outer: for g in 2..p {
        for &q in &factors {
            if f.pow(g, (p - 1) / q) == 1 {
                continue 'outer;
            }
        }
        return g;
    }
    unreachable!("every prime field has a primitive root")
}

/// Elementary matrix I + unit in position (i, j).
fn transvection(n: usize, i: usize, j: usize) -> Mat {
    let mut m = Mat::identity(n);
    m.e[i * n + j] = 1;
    m
}

/// Standard generating sets over prime fields.
///
/// SL_n: the elementary transvections along the superdiagonal and
/// subdiagonal. GL_n: those plus diag(z, 1, .., 1) for a primitive root z.
/// Sp_2l: the symplectic transvections x -> x + B(x,v) v along one vector
/// per projective line (all transvections generate the symplectic group,
/// and the chosen set generates all of them by scaling and addition).
pub fn builtin_generators(family: BuiltinFamily, dim: usize, p: u64) -> Result<MatrixGroupInput> {
    if dim < 2 {
        return domain("builtin generators need dimension >= 2");
    }
    if p < 3 || !is_prime(p) {
        return domain(format!("builtin generators need an odd prime, got {p}"));
    }
    let field = FieldSpec::prime(p)?;
    match family {
        BuiltinFamily::Gl | BuiltinFamily::Sl => {
            let mut generators = Vec::new();
            for i in 0..dim - 1 {
                generators.push(transvection(dim, i, i + 1));
                generators.push(transvection(dim, i + 1, i));
            }
            let (label, declared) = if family == BuiltinFamily::Gl {
                let mut d = Mat::identity(dim);
                d.e[0] = primitive_root(p);
                generators.push(d);
                (
                    format!("GL_{dim}({p})"),
                    gl_order(dim as u32, p)?,
                )
            } else {
                (
                    format!("SL_{dim}({p})"),
                    gl_order(dim as u32, p)? / (p as u128 - 1),
                )
            };
            Ok(MatrixGroupInput {
                field,
                dim,
                generators,
                declared_order: Some(declared),
                label,
            })
        }
        BuiltinFamily::Sp => {
            if !dim.is_multiple_of(2) {
                return domain("symplectic groups need even dimension");
            }
            let l = dim / 2;
            let f = Field::new(&field);
            // Form B(x, y) = x^T J y with J = [[0, I], [-I, 0]].
            let bform = |x: &[u64], y: &[u64]| -> u64 {
                let mut s = 0u64;
                for i in 0..l {
                    s = f.add(s, f.mul(x[i], y[l + i]));
                    s = f.add(s, f.neg(f.mul(x[l + i], y[i])));
                }
                s
            };
            // One representative per projective line: first nonzero = 1.
            let mut generators = Vec::new();
            let mut v = vec![0u64; dim];
            loop {
                // Increment v in base p.
                let mut i = 0;
                while i < dim {
                    v[i] += 1;
                    if v[i] < p {
                        break;
                    }
                    v[i] = 0;
                    i += 1;
                }
                if i == dim {
                    break;
                }
                if v.iter().find(|&&c| c != 0) != Some(&1) {
                    continue;
                }
                // T(x) = x + B(x, v) v.
                let mut m = Mat::identity(dim);
                for col in 0..dim {
                    let mut e = vec![0u64; dim];
                    e[col] = 1;
                    let c = bform(&e, &v);
                    if c == 0 {
                        continue;
                    }
                    for (row, &vr) in v.iter().enumerate() {
                        m.e[row * dim + col] = f.add(m.e[row * dim + col], f.mul(c, vr));
                    }
                }
                generators.push(m);
            }
            Ok(MatrixGroupInput {
                field,
                dim,
                generators,
                declared_order: Some(sp_order(l as u32, p)?),
                label: format!("Sp_{dim}({p})"),
            })
        }
    }
}

/// Order of a single matrix by iterated multiplication, capped.
fn element_order(f: &Field, g: &Mat, cap: u64) -> Result<u64> {
    let mut cur = g.clone();
    let mut k = 1u64;
    while !cur.is_identity() {
        cur = cur.mul(g, f);
        k += 1;
        if k > cap {
            return domain(format!("element order exceeds the cap of {cap}"));
        }
    }
    Ok(k)
}

/// Random-word sampler: `count` products of `walk` uniformly chosen
/// generators or inverse generators. The distribution over the group is NOT
/// uniform; the output is flagged approximate and is meant for exploration
/// only. A fixed seed gives a byte-identical table.
pub fn random_word_sample(
    input: &MatrixGroupInput,
    walk: usize,
    count: usize,
    seed: u64,
) -> Result<CensusTable> {
    if walk == 0 || count == 0 {
        return domain("walk length and sample count must be positive");
    }
    let f = Field::new(&input.field);
    let mut steps: Vec<Mat> = input.generators.clone();
    for g in &input.generators {
        steps.push(g.inverse(&f)?);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut by_two_part: BTreeMap<u128, u128> = BTreeMap::new();
    let mut order_cache: HashMap<Vec<u64>, u128> = HashMap::new();
    for _ in 0..count {
        let mut x = Mat::identity(input.dim);
        for _ in 0..walk {
            let i = rng.gen_range(0..steps.len());
            x = x.mul(&steps[i], &f);
        }
        let two_part = if let Some(&v) = order_cache.get(&x.e) {
            v
        } else {
            let v = match input.declared_order {
                Some(order) => two_part_order(&f, &x, order),
                None => {
                    let order = element_order(&f, &x, 1_000_000)?;
                    crate::rat::two_part_u128(order as u128)
                }
            };
            order_cache.insert(x.e.clone(), v);
            v
        };
        *by_two_part.entry(two_part).or_insert(0) += 1;
    }
    Ok(CensusTable {
        total: count as u128,
        by_two_part,
        approximate: true,
    })
}
