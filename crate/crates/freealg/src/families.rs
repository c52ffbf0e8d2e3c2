//! The concrete generator families and reference bases.
//!
//! Two ideals are covered. The first is generated by the length-three
//! commutators; its quotient is the enveloping algebra of the free
//! nilpotent-of-class-2 Lie algebra, with the PBW reference basis. The
//! second is the T-ideal of the Grassmann algebra, with the interlacing
//! commutator-product reference basis. Families are generated from index
//! iterators, never hand-listed, so the infinite exponent-indexed families
//! are produced uniformly under a degree bound.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::poly::Polynomial;
use crate::rewrite::GeneratorSet;
use crate::word::{Multidegree, Word};
use crate::Scalar;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("the family needs at least {min} variables, got {n}")]
    TooFewVariables { n: u8, min: u8 },
    #[error("word {word} is not normal for the length-three commutator ideal")]
    NotGammaNormal { word: String },
    #[error("cannot parse family id {text:?}")]
    BadFamilyId { text: String },
}

// ---------------------------------------------------------------------------
// Generator families
// ---------------------------------------------------------------------------

/// The twelve generator families, named by their conventional symbols.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Family {
    FPrime,
    FDouble,
    GPrime,
    GDouble,
    H,
    T,
    UPrime,
    UDouble,
    VPrime,
    VDouble,
    WPrime,
    WDouble,
}

impl Family {
    pub fn symbol(&self) -> &'static str {
        match self {
            Family::FPrime => "f'",
            Family::FDouble => "f''",
            Family::GPrime => "g'",
            Family::GDouble => "g''",
            Family::H => "h",
            Family::T => "t",
            Family::UPrime => "u'",
            Family::UDouble => "u''",
            Family::VPrime => "v'",
            Family::VDouble => "v''",
            Family::WPrime => "w'",
            Family::WDouble => "w''",
        }
    }

    fn index_names(&self) -> &'static [&'static str] {
        match self {
            Family::FPrime | Family::FDouble | Family::T => &["i", "j"],
            Family::GPrime
            | Family::GDouble
            | Family::H
            | Family::UPrime
            | Family::UDouble
            | Family::VPrime
            | Family::VDouble => &["i", "j", "k"],
            Family::WPrime | Family::WDouble => &["i", "j", "k", "l"],
        }
    }

    fn all() -> &'static [Family] {
        &[
            Family::FPrime,
            Family::FDouble,
            Family::GPrime,
            Family::GDouble,
            Family::H,
            Family::T,
            Family::UPrime,
            Family::UDouble,
            Family::VPrime,
            Family::VDouble,
            Family::WPrime,
            Family::WDouble,
        ]
    }
}

/// Identity of one family member: family symbol, index tuple, and (for the
/// exponent-indexed families) the exponent vector of the middle block.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct FamilyId {
    pub family: Family,
    pub indices: Vec<u8>,
    pub exponents: Vec<u32>,
}

impl FamilyId {
    fn new(family: Family, indices: Vec<u8>) -> Self {
        FamilyId { family, indices, exponents: Vec::new() }
    }

    fn with_exponents(family: Family, indices: Vec<u8>, exponents: Vec<u32>) -> Self {
        FamilyId { family, indices, exponents }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut items: Vec<String> = self
            .family
            .index_names()
            .iter()
            .zip(&self.indices)
            .map(|(name, value)| format!("{name}={value}"))
            .collect();
        if !self.exponents.is_empty() {
            let exps: Vec<String> = self.exponents.iter().map(u32::to_string).collect();
            items.push(format!("a=({})", exps.join(",")));
        }
        write!(f, "{}[{}]", self.family.symbol(), items.join(","))
    }
}

/// Selector for dropping family members, parsed from strings like `h`,
/// `t[2,1]`, or `v'[i=3,j=2,k=1,a=(0,1)]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DropSpec {
    pub family: Family,
    pub indices: Option<Vec<u8>>,
    pub exponents: Option<Vec<u32>>,
}

impl DropSpec {
    pub fn matches(&self, id: &FamilyId) -> bool {
        if self.family != id.family {
            return false;
        }
        if let Some(indices) = &self.indices {
            if indices != &id.indices {
                return false;
            }
        }
        if let Some(exponents) = &self.exponents {
            if exponents != &id.exponents {
                return false;
            }
        }
        true
    }
}

impl FromStr for DropSpec {
    type Err = FamilyError;

    fn from_str(text: &str) -> Result<Self, Self::Err> {
        let text = text.trim();
        let bad = || FamilyError::BadFamilyId { text: text.to_string() };
        // longest symbol first so f'' is not read as f'
        let mut families: Vec<&Family> = Family::all().iter().collect();
        families.sort_by_key(|f| std::cmp::Reverse(f.symbol().len()));
        let family = *families
            .iter()
            .find(|f| text.starts_with(f.symbol()))
            .ok_or_else(bad)?;
        let rest = &text[family.symbol().len()..];
        if rest.is_empty() {
            return Ok(DropSpec { family: *family, indices: None, exponents: None });
        }
        let inner = rest
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(bad)?;
        let mut indices = Vec::new();
        let mut exponents = None;
        for item in split_top_level(inner) {
            let item = item.trim();
            if item.is_empty() {
                continue;
            }
            if let Some(exp_text) = item.strip_prefix("a=") {
                let exp_text = exp_text
                    .strip_prefix('(')
                    .and_then(|t| t.strip_suffix(')'))
                    .ok_or_else(bad)?;
                let mut exps = Vec::new();
                for e in exp_text.split(',') {
                    let e = e.trim();
                    if e.is_empty() {
                        continue;
                    }
                    exps.push(e.parse::<u32>().map_err(|_| bad())?);
                }
                exponents = Some(exps);
            } else {
                let value = match item.split_once('=') {
                    Some((_, v)) => v.trim(),
                    None => item,
                };
                indices.push(value.parse::<u8>().map_err(|_| bad())?);
            }
        }
        Ok(DropSpec {
            family: *family,
            indices: if indices.is_empty() { None } else { Some(indices) },
            exponents,
        })
    }
}

fn split_top_level(text: &str) -> Vec<&str> {
    let mut parts = Vec::new();
    let mut depth = 0usize;
    let mut start = 0usize;
    for (i, ch) in text.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth = depth.saturating_sub(1),
            ',' if depth == 0 => {
                parts.push(&text[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    parts.push(&text[start..]);
    parts
}

fn x<C: Scalar>(i: u8) -> Polynomial<C> {
    Polynomial::var(i)
}

/// `[[x_i, x_j], x_j]`, leading word `x_i x_j x_j` (i > j).
pub fn f_prime<C: Scalar>(i: u8, j: u8) -> Polynomial<C> {
    x(i).commutator(&x(j)).commutator(&x(j))
}

/// `[x_i, [x_i, x_j]]`, leading word `x_i x_i x_j` (i > j).
pub fn f_double<C: Scalar>(i: u8, j: u8) -> Polynomial<C> {
    x(i).commutator(&x(i).commutator(&x(j)))
}

/// `[x_i, [x_j, x_k]]`, leading word `x_i x_j x_k` (i > j > k).
pub fn g_prime<C: Scalar>(i: u8, j: u8, k: u8) -> Polynomial<C> {
    x(i).commutator(&x(j).commutator(&x(k)))
}

/// `[[x_i, x_k], x_j]`, leading word `x_i x_k x_j` (i > j > k).
pub fn g_double<C: Scalar>(i: u8, j: u8, k: u8) -> Polynomial<C> {
    x(i).commutator(&x(k)).commutator(&x(j))
}

/// `[[x_i, x_j], [x_i, x_k]]`, leading word `x_i x_j x_i x_k` (i > j > k).
pub fn h_family<C: Scalar>(i: u8, j: u8, k: u8) -> Polynomial<C> {
    x(i).commutator(&x(j)).commutator(&x(i).commutator(&x(k)))
}

/// `[x_i, x_j] [x_i, x_j]`, leading word `x_i x_j x_i x_j` (i > j).
pub fn t_family<C: Scalar>(i: u8, j: u8) -> Polynomial<C> {
    let c = x(i).commutator(&x(j));
    c.mul_poly(&c)
}

/// `[x_i, x_j] [x_i, x_k]`, leading word `x_i x_j x_i x_k` (i > j > k).
pub fn u_prime<C: Scalar>(i: u8, j: u8, k: u8) -> Polynomial<C> {
    x(i).commutator(&x(j)).mul_poly(&x(i).commutator(&x(k)))
}

/// `[x_i, x_k] [x_i, x_j]`, leading word `x_i x_k x_i x_j` (i > j > k).
pub fn u_double<C: Scalar>(i: u8, j: u8, k: u8) -> Polynomial<C> {
    x(i).commutator(&x(k)).mul_poly(&x(i).commutator(&x(j)))
}

/// Ascending middle block `x_j^{a_j} * ... * x_{i-1}^{a_{i-1}}`; the
/// exponent slice covers the slots `j ..= i-1`.
fn middle_block(j: u8, i: u8, exponents: &[u32]) -> Word {
    debug_assert_eq!(exponents.len(), (i - j) as usize);
    let mut letters = Vec::new();
    for (offset, &e) in exponents.iter().enumerate() {
        for _ in 0..e {
            letters.push(j + offset as u8);
        }
    }
    Word::from_letters(letters).expect("valid letters")
}

/// `[x_j, x_k] * middle * [x_i, x_k]` (i > j > k).
pub fn v_prime<C: Scalar>(i: u8, j: u8, k: u8, exponents: &[u32]) -> Polynomial<C> {
    let mid = Polynomial::monomial(middle_block(j, i, exponents), C::one());
    x(j).commutator(&x(k)).mul_poly(&mid).mul_poly(&x(i).commutator(&x(k)))
}

/// `[x_j, x_k] * middle * [x_i, x_j]` (i > j > k).
pub fn v_double<C: Scalar>(i: u8, j: u8, k: u8, exponents: &[u32]) -> Polynomial<C> {
    let mid = Polynomial::monomial(middle_block(j, i, exponents), C::one());
    x(j).commutator(&x(k)).mul_poly(&mid).mul_poly(&x(i).commutator(&x(j)))
}

/// `[x_j,x_k] * middle * [x_i,x_l] + [x_j,x_l] * middle * [x_i,x_k]`
/// (i > j > k > l).
pub fn w_prime<C: Scalar>(i: u8, j: u8, k: u8, l: u8, exponents: &[u32]) -> Polynomial<C> {
    let mid = Polynomial::monomial(middle_block(j, i, exponents), C::one());
    x(j).commutator(&x(k)).mul_poly(&mid).mul_poly(&x(i).commutator(&x(l)))
        + x(j).commutator(&x(l)).mul_poly(&mid).mul_poly(&x(i).commutator(&x(k)))
}

/// `[x_j,x_l] * middle * [x_i,x_k] + [x_k,x_l] * middle * [x_i,x_j]`
/// (i > j > k > l).
pub fn w_double<C: Scalar>(i: u8, j: u8, k: u8, l: u8, exponents: &[u32]) -> Polynomial<C> {
    let mid = Polynomial::monomial(middle_block(j, i, exponents), C::one());
    x(j).commutator(&x(l)).mul_poly(&mid).mul_poly(&x(i).commutator(&x(k)))
        + x(k).commutator(&x(l)).mul_poly(&mid).mul_poly(&x(i).commutator(&x(j)))
}

/// The expected leading word of a family member, built directly from the
/// index data (independently of polynomial expansion).
pub fn expected_leading_word(id: &FamilyId) -> Word {
    let ix = &id.indices;
    let letters: Vec<u8> = match id.family {
        Family::FPrime => vec![ix[0], ix[1], ix[1]],
        Family::FDouble => vec![ix[0], ix[0], ix[1]],
        Family::GPrime => vec![ix[0], ix[1], ix[2]],
        Family::GDouble => vec![ix[0], ix[2], ix[1]],
        Family::H => vec![ix[0], ix[1], ix[0], ix[2]],
        Family::T => vec![ix[0], ix[1], ix[0], ix[1]],
        Family::UPrime => vec![ix[0], ix[1], ix[0], ix[2]],
        Family::UDouble => vec![ix[0], ix[2], ix[0], ix[1]],
        Family::VPrime | Family::VDouble | Family::WPrime | Family::WDouble => {
            let (i, j) = (ix[0], ix[1]);
            let mid = middle_block(j, i, &id.exponents);
            let (first, last) = match id.family {
                Family::VPrime => ((j, ix[2]), (i, ix[2])),
                Family::VDouble => ((j, ix[2]), (i, j)),
                Family::WPrime => ((j, ix[2]), (i, ix[3])),
                Family::WDouble => ((j, ix[3]), (i, ix[2])),
                _ => unreachable!(),
            };
            let mut letters = vec![first.0, first.1];
            letters.extend_from_slice(mid.letters());
            letters.push(last.0);
            letters.push(last.1);
            letters
        }
    };
    Word::from_letters(letters).expect("valid letters")
}

fn polynomial_for<C: Scalar>(id: &FamilyId) -> Polynomial<C> {
    let ix = &id.indices;
    match id.family {
        Family::FPrime => f_prime(ix[0], ix[1]),
        Family::FDouble => f_double(ix[0], ix[1]),
        Family::GPrime => g_prime(ix[0], ix[1], ix[2]),
        Family::GDouble => g_double(ix[0], ix[1], ix[2]),
        Family::H => h_family(ix[0], ix[1], ix[2]),
        Family::T => t_family(ix[0], ix[1]),
        Family::UPrime => u_prime(ix[0], ix[1], ix[2]),
        Family::UDouble => u_double(ix[0], ix[1], ix[2]),
        Family::VPrime => v_prime(ix[0], ix[1], ix[2], &id.exponents),
        Family::VDouble => v_double(ix[0], ix[1], ix[2], &id.exponents),
        Family::WPrime => w_prime(ix[0], ix[1], ix[2], ix[3], &id.exponents),
        Family::WDouble => w_double(ix[0], ix[1], ix[2], ix[3], &id.exponents),
    }
}

fn pairs_desc(n: u8) -> Vec<(u8, u8)> {
    let mut out = Vec::new();
    for i in 2..=n {
        for j in 1..i {
            out.push((i, j));
        }
    }
    out
}

fn triples_desc(n: u8) -> Vec<(u8, u8, u8)> {
    let mut out = Vec::new();
    for i in 3..=n {
        for j in 2..i {
            for k in 1..j {
                out.push((i, j, k));
            }
        }
    }
    out
}

fn quadruples_desc(n: u8) -> Vec<(u8, u8, u8, u8)> {
    let mut out = Vec::new();
    for i in 4..=n {
        for j in 3..i {
            for k in 2..j {
                for l in 1..k {
                    out.push((i, j, k, l));
                }
            }
        }
    }
    out
}

/// Vectors of `parts` nonnegative integers with the given total, in
/// lexicographic order.
fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut current = vec![0u32; parts];
    fill(total, 0, &mut current, &mut out);
    return out;

    fn fill(remaining: u32, pos: usize, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if pos + 1 == current.len() {
            current[pos] = remaining;
            out.push(current.clone());
            current[pos] = 0;
            return;
        }
        for value in 0..=remaining {
            current[pos] = value;
            fill(remaining - value, pos + 1, current, out);
        }
        current[pos] = 0;
    }
}

/// The labelled members of the generating set for the ideal of the
/// length-three commutators on `n` variables.
pub fn gamma3_members<C: Scalar>(
    n: u8,
) -> Result<Vec<(FamilyId, Polynomial<C>)>, FamilyError> {
    if n < 2 {
        return Err(FamilyError::TooFewVariables { n, min: 2 });
    }
    let mut out = Vec::new();
    for (i, j) in pairs_desc(n) {
        out.push((FamilyId::new(Family::FPrime, vec![i, j]), f_prime(i, j)));
    }
    for (i, j) in pairs_desc(n) {
        out.push((FamilyId::new(Family::FDouble, vec![i, j]), f_double(i, j)));
    }
    for (i, j, k) in triples_desc(n) {
        out.push((FamilyId::new(Family::GPrime, vec![i, j, k]), g_prime(i, j, k)));
    }
    for (i, j, k) in triples_desc(n) {
        out.push((FamilyId::new(Family::GDouble, vec![i, j, k]), g_double(i, j, k)));
    }
    for (i, j, k) in triples_desc(n) {
        out.push((FamilyId::new(Family::H, vec![i, j, k]), h_family(i, j, k)));
    }
    Ok(out)
}

/// Generating set for the length-three commutator ideal, labelled by
/// family ids.
pub fn gamma3_basis<C: Scalar>(n: u8) -> Result<GeneratorSet<C>, FamilyError> {
    let members = gamma3_members(n)?;
    Ok(GeneratorSet::with_labels(
        members.into_iter().map(|(id, p)| (Some(id.to_string()), p)).collect(),
    )
    .expect("family members are nonzero"))
}

/// The labelled members of degree at most `bound` of the generating set
/// for the T-ideal of the Grassmann algebra on `n` variables.
pub fn tideal_members<C: Scalar>(
    n: u8,
    bound: u32,
) -> Result<Vec<(FamilyId, Polynomial<C>)>, FamilyError> {
    if n < 2 {
        return Err(FamilyError::TooFewVariables { n, min: 2 });
    }
    let mut out: Vec<(FamilyId, Polynomial<C>)> = Vec::new();
    if bound >= 3 {
        for (i, j) in pairs_desc(n) {
            out.push((FamilyId::new(Family::FPrime, vec![i, j]), f_prime(i, j)));
        }
        for (i, j) in pairs_desc(n) {
            out.push((FamilyId::new(Family::FDouble, vec![i, j]), f_double(i, j)));
        }
        for (i, j, k) in triples_desc(n) {
            out.push((FamilyId::new(Family::GPrime, vec![i, j, k]), g_prime(i, j, k)));
        }
        for (i, j, k) in triples_desc(n) {
            out.push((FamilyId::new(Family::GDouble, vec![i, j, k]), g_double(i, j, k)));
        }
    }
    if bound >= 4 {
        for (i, j) in pairs_desc(n) {
            out.push((FamilyId::new(Family::T, vec![i, j]), t_family(i, j)));
        }
        for (i, j, k) in triples_desc(n) {
            out.push((FamilyId::new(Family::UPrime, vec![i, j, k]), u_prime(i, j, k)));
        }
        for (i, j, k) in triples_desc(n) {
            out.push((FamilyId::new(Family::UDouble, vec![i, j, k]), u_double(i, j, k)));
        }
        for (i, j, k) in triples_desc(n) {
            let slots = (i - j) as usize;
            for total in 0..=(bound - 4) {
                for a in compositions(total, slots) {
                    out.push((
                        FamilyId::with_exponents(Family::VPrime, vec![i, j, k], a.clone()),
                        v_prime(i, j, k, &a),
                    ));
                }
            }
        }
        for (i, j, k) in triples_desc(n) {
            let slots = (i - j) as usize;
            for total in 0..=(bound - 4) {
                for a in compositions(total, slots) {
                    out.push((
                        FamilyId::with_exponents(Family::VDouble, vec![i, j, k], a.clone()),
                        v_double(i, j, k, &a),
                    ));
                }
            }
        }
        for (i, j, k, l) in quadruples_desc(n) {
            let slots = (i - j) as usize;
            for total in 0..=(bound - 4) {
                for a in compositions(total, slots) {
                    out.push((
                        FamilyId::with_exponents(Family::WPrime, vec![i, j, k, l], a.clone()),
                        w_prime(i, j, k, l, &a),
                    ));
                }
            }
        }
        for (i, j, k, l) in quadruples_desc(n) {
            let slots = (i - j) as usize;
            for total in 0..=(bound - 4) {
                for a in compositions(total, slots) {
                    out.push((
                        FamilyId::with_exponents(Family::WDouble, vec![i, j, k, l], a.clone()),
                        w_double(i, j, k, l, &a),
                    ));
                }
            }
        }
    }
    Ok(out)
}

/// Truncated generating set for the Grassmann T-ideal, labelled by family
/// ids.
pub fn tideal_basis<C: Scalar>(n: u8, bound: u32) -> Result<GeneratorSet<C>, FamilyError> {
    let members = tideal_members(n, bound)?;
    Ok(GeneratorSet::with_labels(
        members.into_iter().map(|(id, p)| (Some(id.to_string()), p)).collect(),
    )
    .expect("family members are nonzero"))
}

/// The five-polynomial generating set whose orbit under order-preserving
/// variable maps yields the full commutator-ideal basis.
pub fn sbasis_gamma3<C: Scalar>() -> Vec<Polynomial<C>> {
    vec![
        f_prime(2, 1),
        f_double(2, 1),
        g_prime(3, 2, 1),
        g_double(3, 2, 1),
        h_family(3, 2, 1),
    ]
}

/// The two-polynomial generating set whose orbit under the variable/middle
/// substitution maps yields the full T-ideal basis.
pub fn sbasis_tideal<C: Scalar>() -> Vec<Polynomial<C>> {
    let b1 = x(1).commutator(&x(2)).commutator(&x(3));
    let b2 = x(1).commutator(&x(2)).mul_poly(&x(5)).mul_poly(&x(3).commutator(&x(4)))
        + x(1).commutator(&x(3)).mul_poly(&x(5)).mul_poly(&x(2).commutator(&x(4)));
    vec![b1, b2]
}

/// The defining identities of the Grassmann T-ideal, instantiated over all
/// variable assignments with indices at most `n`: centrality of
/// commutators, the vanishing products, and the two alternating sums.
/// Zero instances are dropped; the rest are deduplicated up to scalar.
pub fn grassmann_identities<C: Scalar>(n: u8) -> Vec<Polynomial<C>> {
    let comm = |a: u8, b: u8| x::<C>(a).commutator(&x(b));
    let mut out: Vec<Polynomial<C>> = Vec::new();
    let mut push = |p: Polynomial<C>| {
        if let Some(m) = p.monic() {
            if !out.contains(&m) {
                out.push(m);
            }
        }
    };
    for a in 1..=n {
        for b in 1..=n {
            for c in 1..=n {
                // [xa,xb]*xc - xc*[xa,xb]
                push(comm(a, b).mul_poly(&x(c)) - x(c).mul_poly(&comm(a, b)));
                // [xa,xb][xa,xc]
                push(comm(a, b).mul_poly(&comm(a, c)));
                for d in 1..=n {
                    // [xa,xb]*xd*[xa,xc]
                    push(comm(a, b).mul_poly(&x(d)).mul_poly(&comm(a, c)));
                    // [xa,xb][xc,xd] + [xa,xc][xb,xd]
                    push(
                        comm(a, b).mul_poly(&comm(c, d)) + comm(a, c).mul_poly(&comm(b, d)),
                    );
                    for e in 1..=n {
                        // [xa,xb]*xe*[xc,xd] + [xa,xc]*xe*[xb,xd]
                        push(
                            comm(a, b).mul_poly(&x(e)).mul_poly(&comm(c, d))
                                + comm(a, c).mul_poly(&x(e)).mul_poly(&comm(b, d)),
                        );
                    }
                }
            }
        }
    }
    out
}

// ---------------------------------------------------------------------------
// Reference bases
// ---------------------------------------------------------------------------

/// Index data of a PBW monomial: ascending letters times a lex-nondecreasing
/// product of commutators `[x_j, x_k]` with `j > k`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct PbwIndex {
    pub letters: Vec<u8>,
    pub pairs: Vec<(u8, u8)>,
}

impl PbwIndex {
    pub fn is_admissible(&self) -> bool {
        self.letters.windows(2).all(|w| w[0] <= w[1])
            && self.pairs.iter().all(|&(j, k)| j > k)
            && self.pairs.windows(2).all(|w| w[0] <= w[1])
    }

    pub fn multidegree(&self, n: u8) -> Multidegree {
        let mut exponents = vec![0u32; n as usize];
        for &l in &self.letters {
            exponents[l as usize - 1] += 1;
        }
        for &(j, k) in &self.pairs {
            exponents[j as usize - 1] += 1;
            exponents[k as usize - 1] += 1;
        }
        Multidegree::new(exponents)
    }

    pub fn total_degree(&self) -> u32 {
        (self.letters.len() + 2 * self.pairs.len()) as u32
    }

    /// The product `x_{i_1} ... x_{i_l} [x_{j_1},x_{k_1}] ...` as a
    /// polynomial.
    pub fn expand<C: Scalar>(&self) -> Polynomial<C> {
        let mut p = Polynomial::monomial(
            Word::from_letters(self.letters.iter().copied()).expect("valid"),
            C::one(),
        );
        for &(j, k) in &self.pairs {
            p = p.mul_poly(&x(j).commutator(&x(k)));
        }
        p
    }
}

impl fmt::Display for PbwIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() && self.pairs.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for &l in &self.letters {
            if !first {
                write!(f, "*")?;
            }
            write!(f, "x{l}")?;
            first = false;
        }
        for &(j, k) in &self.pairs {
            if !first {
                write!(f, "*")?;
            }
            write!(f, "[x{j},x{k}]")?;
            first = false;
        }
        Ok(())
    }
}

/// All admissible PBW index data with the given multidegree.
pub fn pbw_basis(md: &Multidegree) -> Vec<PbwIndex> {
    let n = md.n();
    let pair_types: Vec<(u8, u8)> = {
        let mut v = Vec::new();
        for j in 2..=n {
            for k in 1..j {
                v.push((j, k));
            }
        }
        v.sort();
        v
    };
    let mut out = Vec::new();
    let mut pairs: Vec<(u8, u8)> = Vec::new();
    recurse(md, &pair_types, 0, &mut pairs, &mut out);
    return out;

    fn recurse(
        residual: &Multidegree,
        types: &[(u8, u8)],
        from: usize,
        pairs: &mut Vec<(u8, u8)>,
        out: &mut Vec<PbwIndex>,
    ) {
        // letters absorb the residual, ascending
        let mut letters = Vec::new();
        for (i, &e) in residual.exponents().iter().enumerate() {
            for _ in 0..e {
                letters.push((i + 1) as u8);
            }
        }
        out.push(PbwIndex { letters, pairs: pairs.clone() });
        for t in from..types.len() {
            let (j, k) = types[t];
            let mut exps = residual.exponents().to_vec();
            if exps[j as usize - 1] >= 1 && exps[k as usize - 1] >= 1 {
                exps[j as usize - 1] -= 1;
                exps[k as usize - 1] -= 1;
                pairs.push((j, k));
                recurse(&Multidegree::new(exps), types, t, pairs, out);
                pairs.pop();
            }
        }
    }
}

/// Number of PBW basis elements of the given multidegree.
pub fn pbw_count(md: &Multidegree) -> usize {
    pbw_basis(md).len()
}

/// Index data of a Grassmann-quotient basis element: ascending letters
/// times commutators whose indices interlace as
/// `k_1 < j_1 < k_2 < j_2 < ...`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct GrassmannIndex {
    pub letters: Vec<u8>,
    pub pairs: Vec<(u8, u8)>,
}

impl GrassmannIndex {
    pub fn is_admissible(&self) -> bool {
        if !self.letters.windows(2).all(|w| w[0] <= w[1]) {
            return false;
        }
        let mut chain: Vec<u8> = Vec::new();
        for &(j, k) in &self.pairs {
            chain.push(k);
            chain.push(j);
        }
        chain.windows(2).all(|w| w[0] < w[1])
    }

    pub fn multidegree(&self, n: u8) -> Multidegree {
        let mut exponents = vec![0u32; n as usize];
        for &l in &self.letters {
            exponents[l as usize - 1] += 1;
        }
        for &(j, k) in &self.pairs {
            exponents[j as usize - 1] += 1;
            exponents[k as usize - 1] += 1;
        }
        Multidegree::new(exponents)
    }

    pub fn expand<C: Scalar>(&self) -> Polynomial<C> {
        let mut p = Polynomial::monomial(
            Word::from_letters(self.letters.iter().copied()).expect("valid"),
            C::one(),
        );
        for &(j, k) in &self.pairs {
            p = p.mul_poly(&x(j).commutator(&x(k)));
        }
        p
    }
}

/// All admissible Grassmann-quotient index data with the given multidegree.
///
/// The interlacing chain forces the paired variables to be distinct, so the
/// elements correspond to the even-size subsets of the support paired off
/// consecutively.
pub fn grassmann_basis(md: &Multidegree) -> Vec<GrassmannIndex> {
    let support = md.support();
    let mut out = Vec::new();
    for mask in 0..(1u32 << support.len()) {
        let chosen: Vec<u8> = support
            .iter()
            .enumerate()
            .filter(|(b, _)| mask & (1 << b) != 0)
            .map(|(_, &v)| v)
            .collect();
        if chosen.len() % 2 != 0 {
            continue;
        }
        let pairs: Vec<(u8, u8)> =
            chosen.chunks(2).map(|c| (c[1], c[0])).collect();
        let mut exponents = md.exponents().to_vec();
        for &v in &chosen {
            exponents[v as usize - 1] -= 1;
        }
        let mut letters = Vec::new();
        for (i, &e) in exponents.iter().enumerate() {
            for _ in 0..e {
                letters.push((i + 1) as u8);
            }
        }
        out.push(GrassmannIndex { letters, pairs });
    }
    out.sort();
    out
}

/// Number of Grassmann-quotient basis elements of the given multidegree.
pub fn grassmann_count(md: &Multidegree) -> usize {
    grassmann_basis(md).len()
}

// ---------------------------------------------------------------------------
// Normal words for the commutator ideal and the PBW bijection
// ---------------------------------------------------------------------------

/// Direct combinatorial characterization of the normal words for the
/// length-three commutator ideal: every descent `i_k > i_{k+1}` must
/// satisfy `i_k <= i_{k+2}` (when present) and `i_{k-1} < i_k` (when
/// present), and the pattern `i_k = i_{k+2} > i_{k+1}, i_{k+3}` forces
/// `i_{k+1} <= i_{k+3}`.
pub fn gamma3_normal_predicate(w: &Word) -> bool {
    let l = w.letters();
    let n = l.len();
    for k in 0..n.saturating_sub(1) {
        if l[k] > l[k + 1] {
            if k + 2 < n && l[k] > l[k + 2] {
                return false;
            }
            if k > 0 && l[k - 1] >= l[k] {
                return false;
            }
        }
    }
    for k in 0..n.saturating_sub(3) {
        if l[k] == l[k + 2] && l[k] > l[k + 1] && l[k] > l[k + 3] && l[k + 1] > l[k + 3] {
            return false;
        }
    }
    true
}

/// Interleaves PBW index data into its normal word: each pair `(j, k)` is
/// emitted in front of the first remaining letter that is at least `j`.
pub fn psi(u: &PbwIndex) -> Word {
    let mut out: Vec<u8> = Vec::new();
    let mut li = 0usize;
    for &(j, k) in &u.pairs {
        while li < u.letters.len() && u.letters[li] < j {
            out.push(u.letters[li]);
            li += 1;
        }
        out.push(j);
        out.push(k);
    }
    out.extend_from_slice(&u.letters[li..]);
    Word::from_letters(out).expect("valid letters")
}

/// Cuts a normal word back into PBW index data: at each first descent
/// `i_k > i_{k+1}` the preceding letters join the letter part, the
/// descending pair becomes a commutator index, and the scan resumes after
/// it. Inverse of [`psi`] on admissible data.
pub fn theta(w: &Word) -> Result<PbwIndex, FamilyError> {
    if !gamma3_normal_predicate(w) {
        return Err(FamilyError::NotGammaNormal { word: w.to_string() });
    }
    let l = w.letters();
    let mut letters = Vec::new();
    let mut pairs = Vec::new();
    let mut i = 0usize;
    while i < l.len() {
        if i + 1 < l.len() && l[i] > l[i + 1] {
            pairs.push((l[i], l[i + 1]));
            i += 2;
        } else {
            letters.push(l[i]);
            i += 1;
        }
    }
    Ok(PbwIndex { letters, pairs })
}

/// Exponent data of the grouped form
/// `x_1^{a_1} (x_2 x_1)^{b_21} x_2^{a_2} (x_3 x_1)^{b_31} (x_3 x_2)^{b_32}
/// x_3^{a_3} ...` of a normal word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalFactorization {
    pub letter_exponents: BTreeMap<u8, u32>,
    pub pair_exponents: BTreeMap<(u8, u8), u32>,
}

impl CanonicalFactorization {
    /// Expands the exponent data back into the word.
    pub fn expand(&self) -> Word {
        let max = self
            .letter_exponents
            .keys()
            .copied()
            .chain(self.pair_exponents.keys().map(|&(m, _)| m))
            .max()
            .unwrap_or(0);
        let mut letters = Vec::new();
        for m in 1..=max {
            for p in 1..m {
                if let Some(&b) = self.pair_exponents.get(&(m, p)) {
                    for _ in 0..b {
                        letters.push(m);
                        letters.push(p);
                    }
                }
            }
            if let Some(&a) = self.letter_exponents.get(&m) {
                for _ in 0..a {
                    letters.push(m);
                }
            }
        }
        Word::from_letters(letters).expect("valid letters")
    }
}

impl fmt::Display for CanonicalFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let max = self
            .letter_exponents
            .keys()
            .copied()
            .chain(self.pair_exponents.keys().map(|&(m, _)| m))
            .max()
            .unwrap_or(0);
        let mut factors: Vec<String> = Vec::new();
        for m in 1..=max {
            for p in 1..m {
                if let Some(&b) = self.pair_exponents.get(&(m, p)) {
                    if b == 1 {
                        factors.push(format!("(x{m}*x{p})"));
                    } else if b > 1 {
                        factors.push(format!("(x{m}*x{p})^{b}"));
                    }
                }
            }
            if let Some(&a) = self.letter_exponents.get(&m) {
                if a == 1 {
                    factors.push(format!("x{m}"));
                } else if a > 1 {
                    factors.push(format!("x{m}^{a}"));
                }
            }
        }
        if factors.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", factors.join("*"))
        }
    }
}

/// The unique grouped-exponent factorization of a normal word.
pub fn canonical_factorization(w: &Word) -> Result<CanonicalFactorization, FamilyError> {
    let index = theta(w)?;
    let mut letter_exponents: BTreeMap<u8, u32> = BTreeMap::new();
    for &l in &index.letters {
        *letter_exponents.entry(l).or_insert(0) += 1;
    }
    let mut pair_exponents: BTreeMap<(u8, u8), u32> = BTreeMap::new();
    for &p in &index.pairs {
        *pair_exponents.entry(p).or_insert(0) += 1;
    }
    Ok(CanonicalFactorization { letter_exponents, pair_exponents })
}

// ---------------------------------------------------------------------------
// Lyndon-Shirshov words
// ---------------------------------------------------------------------------

/// A bracketing of a word into nested commutators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LyndonBracketing {
    Letter(u8),
    Bracket(Box<LyndonBracketing>, Box<LyndonBracketing>),
}

impl LyndonBracketing {
    pub fn expand<C: Scalar>(&self) -> Polynomial<C> {
        match self {
            LyndonBracketing::Letter(i) => Polynomial::var(*i),
            LyndonBracketing::Bracket(a, b) => a.expand::<C>().commutator(&b.expand()),
        }
    }

    pub fn word(&self) -> Word {
        match self {
            LyndonBracketing::Letter(i) => Word::var(*i),
            LyndonBracketing::Bracket(a, b) => a.word().concat(&b.word()),
        }
    }
}

impl fmt::Display for LyndonBracketing {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LyndonBracketing::Letter(i) => write!(f, "x{i}"),
            LyndonBracketing::Bracket(a, b) => write!(f, "[{a},{b}]"),
        }
    }
}

/// Whether the word is strictly greater than all its proper cyclic
/// rearrangements.
pub fn is_lyndon_shirshov(w: &Word) -> bool {
    let l = w.letters();
    if l.is_empty() {
        return false;
    }
    for split in 1..l.len() {
        let rotation: Vec<u8> =
            l[split..].iter().chain(&l[..split]).copied().collect();
        if l <= rotation.as_slice() {
            return false;
        }
    }
    true
}

/// The recursive bracketing of a Lyndon-Shirshov word: split off the
/// longest proper suffix that is itself Lyndon-Shirshov and bracket the two
/// halves.
pub fn lyndon_bracketing(w: &Word) -> LyndonBracketing {
    let l = w.letters();
    debug_assert!(is_lyndon_shirshov(w), "bracketing needs a Lyndon-Shirshov word");
    if l.len() == 1 {
        return LyndonBracketing::Letter(l[0]);
    }
    for start in 1..l.len() {
        let suffix = w.suffix(start);
        if is_lyndon_shirshov(&suffix) {
            let prefix = w.prefix(start);
            return LyndonBracketing::Bracket(
                Box::new(lyndon_bracketing(&prefix)),
                Box::new(lyndon_bracketing(&suffix)),
            );
        }
    }
    unreachable!("a Lyndon-Shirshov word of length >= 2 has a Lyndon-Shirshov proper suffix")
}

/// All Lyndon-Shirshov words of exactly the given degree on `n` variables,
/// with their recursive bracketings, in ascending deg-lex order.
pub fn lyndon_shirshov_words(n: u8, degree: u32) -> Vec<(Word, LyndonBracketing)> {
    let mut out = Vec::new();
    let mut letters: Vec<u8> = Vec::new();
    gather(n, degree, &mut letters, &mut out);
    out.sort_by(|a, b| a.0.cmp(&b.0));
    return out;

    fn gather(n: u8, degree: u32, letters: &mut Vec<u8>, out: &mut Vec<(Word, LyndonBracketing)>) {
        if letters.len() as u32 == degree {
            let w = Word::from_letters(letters.iter().copied()).expect("valid");
            if is_lyndon_shirshov(&w) {
                let b = lyndon_bracketing(&w);
                out.push((w, b));
            }
            return;
        }
        for letter in 1..=n {
            letters.push(letter);
            gather(n, degree, letters, out);
            letters.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Rat, RatPoly};

    fn word(letters: &[u8]) -> Word {
        Word::from_letters(letters.iter().copied()).unwrap()
    }

    #[test]
    fn gamma3_family_counts() {
        assert_eq!(gamma3_members::<Rat>(2).unwrap().len(), 2);
        assert_eq!(gamma3_members::<Rat>(3).unwrap().len(), 9);
        assert_eq!(gamma3_members::<Rat>(4).unwrap().len(), 24);
        assert_eq!(
            gamma3_members::<Rat>(1).unwrap_err(),
            FamilyError::TooFewVariables { n: 1, min: 2 }
        );
    }

    #[test]
    fn tideal_family_counts() {
        // two variables: f', f'', t only, at any bound >= 4
        for bound in [4, 6, 8, 10] {
            assert_eq!(tideal_members::<Rat>(2, bound).unwrap().len(), 3);
        }
        assert_eq!(tideal_members::<Rat>(3, 4).unwrap().len(), 15);
        assert_eq!(tideal_members::<Rat>(3, 5).unwrap().len(), 17);
    }

    #[test]
    fn family_leading_words_match_the_index_formulas() {
        for (id, poly) in tideal_members::<Rat>(4, 7).unwrap() {
            assert_eq!(
                poly.leading_word().unwrap(),
                &expected_leading_word(&id),
                "leading word of {id}"
            );
            // leading coefficient is already 1
            let (_, c) = poly.leading_term().unwrap();
            assert_eq!(c, &crate::integer(1), "leading coefficient of {id}");
        }
        for (id, poly) in gamma3_members::<Rat>(4).unwrap() {
            assert_eq!(poly.leading_word().unwrap(), &expected_leading_word(&id));
        }
    }

    #[test]
    fn family_leading_words_are_pairwise_distinct() {
        let members = tideal_members::<Rat>(4, 8).unwrap();
        let mut lts: Vec<Word> =
            members.iter().map(|(_, p)| p.leading_word().unwrap().clone()).collect();
        let before = lts.len();
        lts.sort();
        lts.dedup();
        assert_eq!(before, lts.len());
    }

    #[test]
    fn sbasis_gamma3_leading_words() {
        let lts: Vec<Word> = sbasis_gamma3::<Rat>()
            .iter()
            .map(|p| p.leading_word().unwrap().clone())
            .collect();
        assert_eq!(
            lts,
            vec![
                word(&[2, 1, 1]),
                word(&[2, 2, 1]),
                word(&[3, 2, 1]),
                word(&[3, 1, 2]),
                word(&[3, 2, 3, 1]),
            ]
        );
        // identity map fixes the list
        let id = crate::endo::Endomorphism::identity(3);
        for p in sbasis_gamma3::<Rat>() {
            assert_eq!(id.apply(&p).unwrap(), p);
        }
    }

    #[test]
    fn sbasis_tideal_leading_word() {
        let basis = sbasis_tideal::<Rat>();
        assert_eq!(basis[0].leading_word().unwrap(), &word(&[3, 2, 1]));
        // eight words; the greatest is x3*x1*x5*x4*x2
        assert_eq!(basis[1].num_terms(), 8);
        assert_eq!(basis[1].leading_word().unwrap(), &word(&[3, 1, 5, 4, 2]));
        // both members lie in the T-ideal: they reduce to zero
        let gens = tideal_basis::<Rat>(5, 7).unwrap();
        for b in &basis {
            assert!(gens.reduces_to_zero(b), "{b}");
        }
    }

    #[test]
    fn grassmann_identities_examples() {
        // centrality instance [x1,x2]*x1 - x1*[x1,x2] is present
        let instances = grassmann_identities::<Rat>(2);
        let c = RatPoly::var(1).commutator(&RatPoly::var(2));
        let target = (c.mul_poly(&RatPoly::var(1)) - RatPoly::var(1).mul_poly(&c))
            .monic()
            .unwrap();
        assert!(instances.contains(&target));
        assert!(grassmann_identities::<Rat>(1).is_empty());
    }

    #[test]
    fn pbw_basis_examples() {
        let md = Multidegree::new(vec![2, 1]);
        let basis = pbw_basis(&md);
        assert_eq!(basis.len(), 2);
        assert!(basis.iter().all(|b| b.is_admissible()));
        assert!(basis.contains(&PbwIndex { letters: vec![1, 1, 2], pairs: vec![] }));
        assert!(basis.contains(&PbwIndex { letters: vec![1], pairs: vec![(2, 1)] }));

        assert_eq!(pbw_count(&Multidegree::new(vec![0, 0])), 1);
        assert_eq!(pbw_count(&Multidegree::new(vec![1, 1, 1])), 4);
        // repeated pairs are admissible
        let md = Multidegree::new(vec![2, 2]);
        assert!(pbw_basis(&md)
            .contains(&PbwIndex { letters: vec![], pairs: vec![(2, 1), (2, 1)] }));
    }

    #[test]
    fn grassmann_basis_examples() {
        assert_eq!(grassmann_count(&Multidegree::new(vec![1, 1, 1])), 4);
        assert_eq!(grassmann_count(&Multidegree::new(vec![1, 1, 1, 1])), 8);
        assert_eq!(grassmann_count(&Multidegree::new(vec![2, 0])), 1);
        // multilinear counts double with each variable
        for n in 2..=5u8 {
            let md = Multidegree::new(vec![1; n as usize]);
            assert_eq!(grassmann_count(&md), 1 << (n - 1));
        }
        for b in grassmann_basis(&Multidegree::new(vec![1, 2, 1, 1])) {
            assert!(b.is_admissible());
        }
        // closed form: even subsets of the support
        for md in Multidegree::all_up_to(3, 6) {
            let support = md.support().len();
            let expected = if support == 0 { 1 } else { 1usize << (support - 1) };
            assert_eq!(grassmann_count(&md), expected, "md {md}");
        }
    }

    #[test]
    fn gamma3_normal_predicate_examples() {
        assert!(gamma3_normal_predicate(&word(&[1, 2, 1, 3])));
        assert!(!gamma3_normal_predicate(&word(&[3, 2, 3, 1])));
        assert!(!gamma3_normal_predicate(&word(&[2, 1, 1])));
        assert!(gamma3_normal_predicate(&word(&[2, 1, 2, 1])));
        assert!(gamma3_normal_predicate(&Word::one()));
    }

    #[test]
    fn psi_worked_example() {
        let u = PbwIndex {
            letters: vec![1, 2, 2, 2, 3, 4, 5, 6],
            pairs: vec![(2, 1), (2, 1), (3, 1), (3, 2), (5, 2), (5, 3), (6, 4)],
        };
        assert!(u.is_admissible());
        let image = psi(&u);
        assert_eq!(
            image,
            word(&[1, 2, 1, 2, 1, 2, 2, 2, 3, 1, 3, 2, 3, 4, 5, 2, 5, 3, 5, 6, 4, 6])
        );
        assert!(gamma3_normal_predicate(&image));
        assert_eq!(theta(&image).unwrap(), u);

        let factorization = canonical_factorization(&image).unwrap();
        assert_eq!(
            factorization.to_string(),
            "x1*(x2*x1)^2*x2^3*(x3*x1)*(x3*x2)*x3*x4*(x5*x2)*(x5*x3)*x5*(x6*x4)*x6"
        );
        assert_eq!(factorization.expand(), image);
    }

    #[test]
    fn psi_theta_small_cases() {
        // pair-free input: identity
        let u = PbwIndex { letters: vec![1, 1, 2], pairs: vec![] };
        assert_eq!(psi(&u), word(&[1, 1, 2]));
        // single pair
        let u = PbwIndex { letters: vec![], pairs: vec![(2, 1)] };
        assert_eq!(psi(&u), word(&[2, 1]));
        assert_eq!(theta(&word(&[2, 1])).unwrap(), u);
        // ascending word has no pairs
        let t = theta(&word(&[1, 2, 3])).unwrap();
        assert_eq!(t, PbwIndex { letters: vec![1, 2, 3], pairs: vec![] });
        // empty input
        let t = theta(&Word::one()).unwrap();
        assert_eq!(t, PbwIndex { letters: vec![], pairs: vec![] });
        assert_eq!(psi(&t), Word::one());
    }

    #[test]
    fn canonical_factorization_examples() {
        let f = canonical_factorization(&word(&[1, 1])).unwrap();
        assert_eq!(f.to_string(), "x1^2");
        let f = canonical_factorization(&word(&[2, 1, 2, 1])).unwrap();
        assert_eq!(f.to_string(), "(x2*x1)^2");
        assert_eq!(
            canonical_factorization(&word(&[2, 2, 1])).unwrap_err(),
            FamilyError::NotGammaNormal { word: "x2*x2*x1".into() }
        );
    }

    #[test]
    fn lyndon_shirshov_degree_three() {
        let words: Vec<Word> =
            lyndon_shirshov_words(2, 3).into_iter().map(|(w, _)| w).collect();
        assert_eq!(words, vec![word(&[2, 1, 1]), word(&[2, 2, 1])]);
        let brackets: BTreeMap<Word, String> = lyndon_shirshov_words(3, 3)
            .into_iter()
            .map(|(w, b)| (w, b.to_string()))
            .collect();
        assert_eq!(brackets.len(), 8);
        assert_eq!(brackets[&word(&[2, 1, 1])], "[[x2,x1],x1]");
        assert_eq!(brackets[&word(&[2, 2, 1])], "[x2,[x2,x1]]");
        assert_eq!(brackets[&word(&[3, 2, 1])], "[x3,[x2,x1]]");
        assert_eq!(brackets[&word(&[3, 1, 2])], "[[x3,x1],x2]");
        // the bracketing expands to a polynomial with the word as leading
        for (w, b) in lyndon_shirshov_words(3, 3) {
            assert_eq!(b.expand::<Rat>().leading_word().unwrap(), &w);
            assert_eq!(b.word(), w);
        }
    }

    #[test]
    fn lyndon_shirshov_degree_four() {
        // two variables: exactly the three power patterns
        let words: Vec<Word> =
            lyndon_shirshov_words(2, 4).into_iter().map(|(w, _)| w).collect();
        assert_eq!(
            words,
            vec![word(&[2, 1, 1, 1]), word(&[2, 2, 1, 1]), word(&[2, 2, 2, 1])]
        );
        // the mixed-letter word x3x2x3x1 brackets into the commutator of
        // commutators
        let table: BTreeMap<Word, String> = lyndon_shirshov_words(3, 4)
            .into_iter()
            .map(|(w, b)| (w, b.to_string()))
            .collect();
        assert_eq!(table[&word(&[3, 2, 3, 1])], "[[x3,x2],[x3,x1]]");
        // every degree-4 word other than the x_i x_j x_i x_k pattern
        // (i > j > k) contains a degree-3 leading word as a subword, so only
        // that pattern contributes a new generator
        let deg3: Vec<Word> = lyndon_shirshov_words(3, 3).into_iter().map(|(w, _)| w).collect();
        for (w, _) in lyndon_shirshov_words(3, 4) {
            let l = w.letters();
            let is_hijk = l[0] == l[2] && l[0] > l[1] && l[1] > l[3];
            let has_deg3_subword = deg3.iter().any(|p| w.contains_subword(p));
            assert_ne!(is_hijk, has_deg3_subword, "word {w}");
        }
    }

    #[test]
    fn lyndon_shirshov_needs_two_letters() {
        assert!(lyndon_shirshov_words(1, 3).is_empty());
        assert!(!is_lyndon_shirshov(&Word::one()));
        assert!(is_lyndon_shirshov(&Word::var(1)));
    }

    #[test]
    fn family_id_display_and_drop_parsing() {
        let id = FamilyId::with_exponents(Family::VPrime, vec![3, 2, 1], vec![2]);
        assert_eq!(id.to_string(), "v'[i=3,j=2,k=1,a=(2)]");

        let spec: DropSpec = "h".parse().unwrap();
        assert!(spec.matches(&FamilyId::new(Family::H, vec![3, 2, 1])));
        assert!(!spec.matches(&FamilyId::new(Family::T, vec![2, 1])));

        let spec: DropSpec = "t[2,1]".parse().unwrap();
        assert!(spec.matches(&FamilyId::new(Family::T, vec![2, 1])));
        assert!(!spec.matches(&FamilyId::new(Family::T, vec![3, 1])));

        let spec: DropSpec = "f''[i=3,j=1]".parse().unwrap();
        assert!(spec.matches(&FamilyId::new(Family::FDouble, vec![3, 1])));

        assert!("q[1]".parse::<DropSpec>().is_err());
    }
}
