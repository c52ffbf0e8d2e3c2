//! Composition checking, degree-truncated completion, the brute-force
//! ideal-dimension oracle, and dimension-based verification.
//!
//! All statements here are truncated by total degree: "Gröbner up to degree
//! d" quantifies every claim over words of degree at most d, and reports
//! carry the bound.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::poly::Polynomial;
use crate::rewrite::{GeneratorSet, RewriteError};
use crate::word::{Multidegree, Word};
use crate::Scalar;

#[derive(Debug, Error)]
pub enum GroebnerError {
    #[error("multidegree {multidegree} spans {size} words, above the configured limit {limit}")]
    ComponentTooLarge { multidegree: Multidegree, size: u64, limit: u64 },
    #[error("oracle seed polynomial {poly} is not multihomogeneous")]
    NonMultihomogeneousSeed { poly: String },
    #[error(
        "normal-word count {normal} below reference count {reference} at multidegree \
         {multidegree}: reference basis and generator set are inconsistent"
    )]
    InconsistentReference { multidegree: Multidegree, normal: usize, reference: usize },
    #[error(transparent)]
    Rewrite(#[from] RewriteError),
}

/// How two leading words superpose.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ObstructionKind {
    /// A proper suffix of `lt(g_left)` equals a proper prefix of
    /// `lt(g_right)`.
    Overlap,
    /// `lt(g_right)` occurs inside `lt(g_left)`.
    Inclusion,
}

/// A superposition of two generators' leading words. The two sandwiched
/// multiples `u1 * g_left * v1` and `u2 * g_right * v2` share the
/// superposition as their common leading word.
#[derive(Debug, Clone)]
pub struct Obstruction {
    pub left: usize,
    pub right: usize,
    pub kind: ObstructionKind,
    pub superposition: Word,
    /// `(u1, v1)` with `superposition = u1 * lt(g_left) * v1`.
    pub left_cofactors: (Word, Word),
    /// `(u2, v2)` with `superposition = u2 * lt(g_right) * v2`.
    pub right_cofactors: (Word, Word),
}

impl Obstruction {
    /// The composition (S-polynomial): difference of the two matched
    /// monic multiples; the shared leading word cancels.
    pub fn s_polynomial<C: Scalar>(&self, gens: &GeneratorSet<C>) -> Polynomial<C> {
        let left = gens
            .member(self.left)
            .poly
            .sandwich(&self.left_cofactors.0, &self.left_cofactors.1);
        let right = gens
            .member(self.right)
            .poly
            .sandwich(&self.right_cofactors.0, &self.right_cofactors.1);
        left - right
    }
}

/// All overlap and inclusion superpositions of degree at most `bound`
/// between ordered pairs of members, self-overlaps included.
pub fn find_obstructions<C: Scalar>(gens: &GeneratorSet<C>, bound: u32) -> Vec<Obstruction> {
    let mut out = Vec::new();
    let members = gens.members();
    for gi in members {
        let lt_i = gi.leading.letters();
        for gj in members {
            let lt_j = gj.leading.letters();
            // Overlaps: proper suffix of lt_i = proper prefix of lt_j.
            let max_o = lt_i.len().min(lt_j.len()).saturating_sub(1);
            for o in 1..=max_o {
                if lt_i[lt_i.len() - o..] != lt_j[..o] {
                    continue;
                }
                let degree = (lt_i.len() + lt_j.len() - o) as u32;
                if degree > bound {
                    continue;
                }
                let tail = gj.leading.suffix(o);
                let head = gi.leading.prefix(lt_i.len() - o);
                out.push(Obstruction {
                    left: gi.id,
                    right: gj.id,
                    kind: ObstructionKind::Overlap,
                    superposition: gi.leading.concat(&tail),
                    left_cofactors: (Word::one(), tail),
                    right_cofactors: (head, Word::one()),
                });
            }
            // Inclusions: lt_j occurs inside lt_i (distinct members).
            if gi.id != gj.id && lt_j.len() <= lt_i.len() && gi.leading.degree() <= bound {
                for p in 0..=(lt_i.len() - lt_j.len()) {
                    if &lt_i[p..p + lt_j.len()] == lt_j {
                        out.push(Obstruction {
                            left: gi.id,
                            right: gj.id,
                            kind: ObstructionKind::Inclusion,
                            superposition: gi.leading.clone(),
                            left_cofactors: (Word::one(), Word::one()),
                            right_cofactors: (
                                gi.leading.prefix(p),
                                gi.leading.suffix(p + lt_j.len()),
                            ),
                        });
                    }
                }
            }
        }
    }
    out.sort_by(|a, b| {
        (&a.superposition, a.left, a.right, &a.right_cofactors.0, a.kind).cmp(&(
            &b.superposition,
            b.left,
            b.right,
            &b.right_cofactors.0,
            b.kind,
        ))
    });
    out
}

/// Outcome of reducing every composition of degree at most the bound.
pub struct CompositionCheck<C> {
    pub checked: usize,
    pub failures: Vec<(Obstruction, Polynomial<C>)>,
}

impl<C: Scalar> CompositionCheck<C> {
    pub fn all_reduce_to_zero(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn summary(&self, gens: &GeneratorSet<C>) -> CompositionSummary {
        CompositionSummary {
            checked: self.checked,
            failed: self
                .failures
                .iter()
                .map(|(ob, rem)| FailedComposition {
                    left: gens.member(ob.left).name(),
                    right: gens.member(ob.right).name(),
                    kind: ob.kind,
                    superposition: ob.superposition.to_string(),
                    remainder: rem.to_string(),
                })
                .collect(),
        }
    }
}

/// Forms and reduces every composition of degree at most `bound`,
/// recording the ones that do not reduce to zero.
pub fn check_compositions<C: Scalar>(gens: &GeneratorSet<C>, bound: u32) -> CompositionCheck<C> {
    let obstructions = find_obstructions(gens, bound);
    let checked = obstructions.len();
    let failures: Vec<(Obstruction, Polynomial<C>)> = obstructions
        .into_par_iter()
        .filter_map(|ob| {
            let remainder = gens.reduce(&ob.s_polynomial(gens));
            if remainder.is_zero() {
                None
            } else {
                Some((ob, remainder))
            }
        })
        .collect();
    CompositionCheck { checked, failures }
}

/// Monic, pairwise fully reduced form of a list of polynomials: no member's
/// monomial contains another member's leading word. Zero reductions drop
/// the member. Preserves the generated ideal.
pub fn inter_reduce<C: Scalar>(polys: Vec<Polynomial<C>>) -> Vec<Polynomial<C>> {
    let mut set: Vec<Polynomial<C>> = Vec::new();
    for p in polys {
        if let Some(m) = p.monic() {
            if !set.contains(&m) {
                set.push(m);
            }
        }
    }
    loop {
        let mut changed = false;
        for i in 0..set.len() {
            let others: Vec<Polynomial<C>> = set
                .iter()
                .enumerate()
                .filter(|(j, _)| *j != i)
                .map(|(_, p)| p.clone())
                .collect();
            let others = GeneratorSet::new(others).expect("members are monic");
            let reduced = others.reduce(&set[i]);
            if reduced.is_zero() {
                set.remove(i);
                changed = true;
                break;
            }
            let monic = reduced.monic().expect("nonzero");
            if monic != set[i] {
                set[i] = monic;
                changed = true;
                break;
            }
        }
        if !changed {
            return set;
        }
    }
}

/// Degree-truncated completion: extends the seed until every composition of
/// degree at most `bound` reduces to zero. The result is monic and
/// inter-reduced, sorted by leading word, and generates the same ideal as
/// the seed; its leading words of degree at most `bound` generate the same
/// initial ideal as a full basis of the ideal does in those degrees.
pub fn complete_up_to_degree<C: Scalar>(
    seed: &[Polynomial<C>],
    bound: u32,
) -> Result<GeneratorSet<C>, GroebnerError> {
    let mut basis = inter_reduce(seed.to_vec());
    loop {
        basis.sort_by(|a, b| a.leading_word().cmp(&b.leading_word()));
        let gens = GeneratorSet::new(basis.clone())?;
        let obstructions = find_obstructions(&gens, bound);
        let mut extended = false;
        for ob in obstructions {
            let remainder = gens.reduce(&ob.s_polynomial(&gens));
            if !remainder.is_zero() {
                basis.push(remainder.monic().expect("nonzero"));
                basis = inter_reduce(basis);
                extended = true;
                break;
            }
        }
        if !extended {
            return Ok(gens);
        }
    }
}

/// Substitution family under which an oracle seed is closed before
/// spanning.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SubstitutionClosure {
    /// Span the seed as given.
    None,
    /// Close under every map sending each occurring variable to a variable
    /// of the ambient set (repetitions allowed).
    Variables,
}

impl SubstitutionClosure {
    pub fn apply<C: Scalar>(&self, seed: &[Polynomial<C>], n: u8) -> Vec<Polynomial<C>> {
        match self {
            SubstitutionClosure::None => {
                let mut out: Vec<Polynomial<C>> = Vec::new();
                for p in seed {
                    if let Some(m) = p.monic() {
                        if !out.contains(&m) {
                            out.push(m);
                        }
                    }
                }
                out
            }
            SubstitutionClosure::Variables => {
                let mut out: Vec<Polynomial<C>> = Vec::new();
                for p in seed {
                    let support = p.support();
                    let mut assignment = vec![1u8; support.len()];
                    loop {
                        let images: BTreeMap<u8, Word> = support
                            .iter()
                            .zip(&assignment)
                            .map(|(&v, &img)| (v, Word::var(img)))
                            .collect();
                        let image = p.substitute(&images).expect("support covered");
                        if let Some(m) = image.monic() {
                            if !out.contains(&m) {
                                out.push(m);
                            }
                        }
                        // next assignment in the n^k product
                        let mut pos = 0;
                        loop {
                            if pos == assignment.len() {
                                break;
                            }
                            if assignment[pos] < n {
                                assignment[pos] += 1;
                                break;
                            }
                            assignment[pos] = 1;
                            pos += 1;
                        }
                        if pos == assignment.len() {
                            break;
                        }
                    }
                }
                out
            }
        }
    }
}

/// Resource guard for the dense linear algebra in the oracle.
#[derive(Debug, Clone)]
pub struct OracleLimits {
    pub max_component_words: u64,
}

impl Default for OracleLimits {
    fn default() -> Self {
        OracleLimits { max_component_words: 50_000 }
    }
}

/// Dimension of the multihomogeneous component of the two-sided ideal
/// generated by the (closed) seed, computed by spanning the sandwiched
/// multiples `u * g * v` of the right multidegree and row-reducing.
pub fn ideal_dimension_oracle<C: Scalar>(
    seed: &[Polynomial<C>],
    md: &Multidegree,
    closure: &SubstitutionClosure,
    limits: &OracleLimits,
) -> Result<usize, GroebnerError> {
    let n = md.n();
    let closed = closure.apply(seed, n);

    let size = md.word_count();
    if size > limits.max_component_words {
        return Err(GroebnerError::ComponentTooLarge {
            multidegree: md.clone(),
            size,
            limit: limits.max_component_words,
        });
    }

    let words = md.words();
    let index: BTreeMap<Word, usize> =
        words.iter().cloned().enumerate().map(|(i, w)| (w, i)).collect();
    let dim = words.len();

    let mut elimination = Elimination::<C>::new(dim);
    for g in &closed {
        let md_g = g.homogeneous_multidegree(n).ok_or_else(|| {
            GroebnerError::NonMultihomogeneousSeed { poly: g.to_string() }
        })?;
        let Some(residual) = md.checked_sub(&md_g) else { continue };
        for md_u in residual.sub_multidegrees() {
            let md_v = residual.checked_sub(&md_u).expect("sub-multidegree fits");
            for u in md_u.words() {
                for v in md_v.words() {
                    let product = g.sandwich(&u, &v);
                    let mut row = vec![C::zero(); dim];
                    for (w, c) in product.terms() {
                        row[index[w]] = c.clone();
                    }
                    elimination.insert(row);
                }
            }
        }
    }
    Ok(elimination.rank())
}

/// Incremental exact Gaussian elimination over the scalar field.
struct Elimination<C> {
    pivots: Vec<(usize, Vec<C>)>,
}

impl<C: Scalar> Elimination<C> {
    fn new(_dim: usize) -> Self {
        Elimination { pivots: Vec::new() }
    }

    fn insert(&mut self, mut row: Vec<C>) {
        for (col, pivot_row) in &self.pivots {
            let factor = row[*col].clone();
            if factor.is_zero() {
                continue;
            }
            for (r, p) in row.iter_mut().zip(pivot_row) {
                *r = r.clone() - factor.clone() * p.clone();
            }
        }
        if let Some(col) = row.iter().position(|c| !c.is_zero()) {
            let lead = row[col].clone();
            for r in row.iter_mut() {
                *r = r.clone() / lead.clone();
            }
            self.pivots.push((col, row));
        }
    }

    fn rank(&self) -> usize {
        self.pivots.len()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Pass,
    Fail,
}

/// One multihomogeneous component in a verification report.
#[derive(Debug, Clone, Serialize)]
pub struct DimensionRow {
    pub multidegree: Multidegree,
    pub normal: usize,
    pub reference: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<usize>,
}

impl DimensionRow {
    pub fn matches(&self) -> bool {
        self.normal == self.reference
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct FailedComposition {
    pub left: String,
    pub right: String,
    pub kind: ObstructionKind,
    pub superposition: String,
    pub remainder: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct CompositionSummary {
    pub checked: usize,
    pub failed: Vec<FailedComposition>,
}

#[derive(Debug, Clone, Serialize)]
pub struct MinimalitySummary {
    pub checked: usize,
    pub redundant: Vec<String>,
}

/// Comparison of two leading-word collections, either as exact sets or as
/// generators of the same initial ideal up to the bound.
#[derive(Debug, Clone, Serialize)]
pub struct OrbitSummary {
    pub comparison: String,
    pub expected_only: Vec<String>,
    pub images_only: Vec<String>,
    pub equal: bool,
}

/// Verification report: per-multidegree dimension rows plus the optional
/// composition, minimality, and orbit sections.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub schema_version: u32,
    pub n: u8,
    pub bound: u32,
    pub rows: Vec<DimensionRow>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub compositions: Option<CompositionSummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub minimality: Option<MinimalitySummary>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub orbit: Option<OrbitSummary>,
    pub generators_self_reduce: bool,
    pub verdict: Verdict,
}

impl VerificationReport {
    pub fn recompute_verdict(&mut self) {
        let rows_ok = self.rows.iter().all(DimensionRow::matches);
        let compositions_ok = self.compositions.as_ref().map_or(true, |c| c.failed.is_empty());
        let minimality_ok = self.minimality.as_ref().map_or(true, |m| m.redundant.is_empty());
        let orbit_ok = self.orbit.as_ref().map_or(true, |o| o.equal);
        let ok = rows_ok
            && compositions_ok
            && minimality_ok
            && orbit_ok
            && self.generators_self_reduce;
        self.verdict = if ok { Verdict::Pass } else { Verdict::Fail };
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn failing_rows(&self) -> Vec<&DimensionRow> {
        self.rows.iter().filter(|r| !r.matches()).collect()
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

/// Oracle configuration for [`verify_by_dimension`] rows.
pub struct OracleSpec<'a, C> {
    pub seed: &'a [Polynomial<C>],
    pub closure: SubstitutionClosure,
    pub limits: OracleLimits,
}

/// Compares the normal-word count against a reference quotient-basis count
/// for every multidegree of total degree at most `bound`. A normal count
/// strictly below the reference count is impossible for a correct
/// reference and reported as an error; equality everywhere certifies the
/// generator set up to the bound.
pub fn verify_by_dimension<C: Scalar>(
    gens: &GeneratorSet<C>,
    reference: &(dyn Fn(&Multidegree) -> usize + Sync),
    n: u8,
    bound: u32,
    oracle: Option<OracleSpec<'_, C>>,
) -> Result<VerificationReport, GroebnerError> {
    let normal = gens.enumerate_normal_words(n, bound);
    let multidegrees = Multidegree::all_up_to(n, bound);
    let oracle = oracle.as_ref();
    let rows: Result<Vec<DimensionRow>, GroebnerError> = multidegrees
        .par_iter()
        .map(|md| {
            let normal_count = normal.count_of(md);
            let reference_count = reference(md);
            let oracle_dim = match oracle {
                Some(spec) => {
                    Some(ideal_dimension_oracle(spec.seed, md, &spec.closure, &spec.limits)?)
                }
                None => None,
            };
            Ok(DimensionRow {
                multidegree: md.clone(),
                normal: normal_count,
                reference: reference_count,
                oracle: oracle_dim,
            })
        })
        .collect();
    let rows = rows?;

    for row in &rows {
        if row.normal < row.reference {
            return Err(GroebnerError::InconsistentReference {
                multidegree: row.multidegree.clone(),
                normal: row.normal,
                reference: row.reference,
            });
        }
    }

    let generators_self_reduce =
        gens.members().iter().all(|g| gens.reduces_to_zero(&g.poly));

    let mut report = VerificationReport {
        schema_version: 1,
        n,
        bound,
        rows,
        compositions: None,
        minimality: None,
        orbit: None,
        generators_self_reduce,
        verdict: Verdict::Fail,
    };
    report.recompute_verdict();
    Ok(report)
}

/// For each member of degree at most `bound`, whether its leading word is
/// reducible by the rest of the set (`true` marks a redundant member).
pub fn check_minimality<C: Scalar>(gens: &GeneratorSet<C>, bound: u32) -> Vec<(usize, bool)> {
    gens.members()
        .iter()
        .filter(|g| g.leading.degree() <= bound)
        .map(|g| {
            let others = gens.without(g.id);
            (g.id, !others.is_normal_word(&g.leading))
        })
        .collect()
}

/// Monomials of members that are reducible by the other members; empty
/// exactly when the set is reduced.
pub fn check_reduced<C: Scalar>(gens: &GeneratorSet<C>) -> Vec<(usize, Word)> {
    let mut offenders = Vec::new();
    for g in gens.members() {
        let others = gens.without(g.id);
        for word in g.poly.words_desc() {
            if !others.is_normal_word(word) {
                offenders.push((g.id, word.clone()));
            }
        }
    }
    offenders
}

/// Whether two leading-word collections generate the same initial ideal in
/// degrees at most `bound`: every word of one collection must contain a
/// word of the other as a subword. Returns the mutual uncovered leftovers.
pub fn initial_ideal_difference(
    reference: &[Word],
    images: &[Word],
    bound: u32,
) -> (Vec<Word>, Vec<Word>) {
    let covered = |w: &Word, by: &[Word]| by.iter().any(|p| w.contains_subword(p));
    let missing: Vec<Word> = reference
        .iter()
        .filter(|w| w.degree() <= bound && !covered(w, images))
        .cloned()
        .collect();
    let spurious: Vec<Word> = images
        .iter()
        .filter(|w| w.degree() <= bound && !covered(w, reference))
        .cloned()
        .collect();
    (missing, spurious)
}
