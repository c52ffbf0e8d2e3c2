//! Subword rewriting modulo a set of monic generators.
//!
//! A [`GeneratorSet`] caches the leading word of each member and compiles
//! them into a multi-pattern subword automaton (Aho–Corasick style: trie
//! plus failure links). Reduction replaces an occurrence of a leading word
//! inside a monomial by the lower terms of the matching generator; normal
//! words are the words containing no leading word as a contiguous subword.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

use crate::poly::Polynomial;
use crate::word::{Multidegree, Word};
use crate::Scalar;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RewriteError {
    #[error("generator {index} is zero")]
    ZeroGenerator { index: usize },
}

/// One member of a generator set: a monic polynomial with its cached
/// leading word and a stable id (its position in the set).
#[derive(Clone)]
pub struct Generator<C> {
    pub id: usize,
    pub label: Option<String>,
    pub poly: Polynomial<C>,
    pub leading: Word,
}

impl<C: Scalar> Generator<C> {
    pub fn name(&self) -> String {
        match &self.label {
            Some(label) => label.clone(),
            None => format!("g{}", self.id),
        }
    }
}

/// An indexed family of monic polynomials used as a rewriting system.
pub struct GeneratorSet<C> {
    members: Vec<Generator<C>>,
    automaton: SubwordAutomaton,
}

impl<C: Scalar> GeneratorSet<C> {
    /// Builds a set from polynomials, normalizing each to leading
    /// coefficient 1. Zero members are rejected.
    pub fn new(polys: Vec<Polynomial<C>>) -> Result<Self, RewriteError> {
        Self::with_labels(polys.into_iter().map(|p| (None, p)).collect())
    }

    pub fn with_labels(
        polys: Vec<(Option<String>, Polynomial<C>)>,
    ) -> Result<Self, RewriteError> {
        let mut members = Vec::with_capacity(polys.len());
        for (id, (label, poly)) in polys.into_iter().enumerate() {
            let monic = poly.monic().ok_or(RewriteError::ZeroGenerator { index: id })?;
            let leading = monic.leading_word().expect("monic is nonzero").clone();
            members.push(Generator { id, label, poly: monic, leading });
        }
        let automaton = SubwordAutomaton::new(members.iter().map(|g| g.leading.clone()));
        Ok(GeneratorSet { members, automaton })
    }

    pub fn empty() -> Self {
        GeneratorSet { members: Vec::new(), automaton: SubwordAutomaton::new(std::iter::empty()) }
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn members(&self) -> &[Generator<C>] {
        &self.members
    }

    pub fn member(&self, id: usize) -> &Generator<C> {
        &self.members[id]
    }

    pub fn leading_words(&self) -> Vec<Word> {
        self.members.iter().map(|g| g.leading.clone()).collect()
    }

    pub fn polynomials(&self) -> Vec<Polynomial<C>> {
        self.members.iter().map(|g| g.poly.clone()).collect()
    }

    /// The set with member `id` removed (ids are renumbered; labels kept).
    pub fn without(&self, id: usize) -> Self {
        let polys = self
            .members
            .iter()
            .filter(|g| g.id != id)
            .map(|g| (g.label.clone(), g.poly.clone()))
            .collect();
        GeneratorSet::with_labels(polys).expect("members stay nonzero")
    }

    pub fn automaton(&self) -> &SubwordAutomaton {
        &self.automaton
    }

    /// Leftmost occurrence of any leading word inside `w`, as
    /// `(start position, generator id)`. Ties at the same position are
    /// broken by the smallest id. `None` means `w` is a normal word.
    pub fn find_lt_subword(&self, w: &Word) -> Option<(usize, usize)> {
        self.automaton.find_leftmost(w)
    }

    /// Whether no leading word occurs in `w` as a contiguous subword.
    pub fn is_normal_word(&self, w: &Word) -> bool {
        self.find_lt_subword(w).is_none()
    }

    /// Fully reduces `f`: the result contains no leading word of the set as
    /// a subword of any of its monomials, and differs from `f` by a member
    /// of the two-sided ideal generated by the set. The trace records each
    /// rewriting step so the difference can be replayed.
    ///
    /// Strategy: always rewrite the deg-lex-greatest reducible monomial, at
    /// its leftmost reducible position, by the smallest-id matching
    /// generator.
    pub fn normal_form(&self, f: &Polynomial<C>) -> (Polynomial<C>, ReductionTrace<C>) {
        let mut p = f.clone();
        let mut steps = Vec::new();
        loop {
            let hit = p.terms().rev().find_map(|(w, c)| {
                self.find_lt_subword(w).map(|(pos, id)| (w.clone(), c.clone(), pos, id))
            });
            let Some((word, coeff, pos, id)) = hit else { break };
            let generator = &self.members[id];
            let left = word.prefix(pos);
            let right = word.suffix(pos + generator.leading.letters().len());
            p = p - generator.poly.sandwich(&left, &right).scale(&coeff);
            steps.push(ReductionStep { monomial: word, coeff, generator: id, left, right });
        }
        (p, ReductionTrace { steps })
    }

    /// Normal form without the trace.
    pub fn reduce(&self, f: &Polynomial<C>) -> Polynomial<C> {
        self.normal_form(f).0
    }

    /// Whether `f` reduces to zero.
    pub fn reduces_to_zero(&self, f: &Polynomial<C>) -> bool {
        self.reduce(f).is_zero()
    }

    /// All normal words on `n` variables of total degree at most `bound`,
    /// with counts grouped by multidegree.
    ///
    /// Depth-first search with prefix pruning on the automaton: a prefix
    /// that already contains a forbidden subword is abandoned, so the walk
    /// visits exactly the normal words.
    pub fn enumerate_normal_words(&self, n: u8, bound: u32) -> NormalWordEnumeration {
        let mut words = Vec::new();
        let mut prefix: Vec<u8> = Vec::new();
        self.walk(n, bound, self.automaton.start(), &mut prefix, &mut words);
        let mut counts: BTreeMap<Multidegree, usize> = BTreeMap::new();
        for w in &words {
            *counts.entry(w.multidegree(n).expect("letters within ambient")).or_insert(0) += 1;
        }
        NormalWordEnumeration { words, counts }
    }

    fn walk(
        &self,
        n: u8,
        bound: u32,
        state: u32,
        prefix: &mut Vec<u8>,
        out: &mut Vec<Word>,
    ) {
        out.push(Word::from_letters(prefix.iter().copied()).expect("valid letters"));
        if prefix.len() as u32 == bound {
            return;
        }
        for letter in 1..=n {
            let next = self.automaton.step(state, letter);
            if self.automaton.is_dead(next) {
                continue;
            }
            prefix.push(letter);
            self.walk(n, bound, next, prefix, out);
            prefix.pop();
        }
    }
}

impl<C: Scalar> fmt::Debug for GeneratorSet<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut list = f.debug_list();
        for g in &self.members {
            list.entry(&format_args!("{}: {}", g.name(), g.poly));
        }
        list.finish()
    }
}

/// Result of enumerating normal words up to a degree bound.
pub struct NormalWordEnumeration {
    pub words: Vec<Word>,
    pub counts: BTreeMap<Multidegree, usize>,
}

impl NormalWordEnumeration {
    pub fn count_of(&self, md: &Multidegree) -> usize {
        self.counts.get(md).copied().unwrap_or(0)
    }

    pub fn total(&self) -> usize {
        self.words.len()
    }
}

/// One rewriting step: the reduced monomial occurred as
/// `left * lt(generator) * right` with the given coefficient.
#[derive(Clone)]
pub struct ReductionStep<C> {
    pub monomial: Word,
    pub coeff: C,
    pub generator: usize,
    pub left: Word,
    pub right: Word,
}

/// A reduction trace: replaying it reproduces the reduced part of the
/// input as a sum of sandwiched generators.
#[derive(Clone)]
pub struct ReductionTrace<C> {
    pub steps: Vec<ReductionStep<C>>,
}

impl<C: Scalar> ReductionTrace<C> {
    /// The polynomial `sum coeff * left * generator * right` over all steps;
    /// equals `f - normal_form(f)` for the traced reduction.
    pub fn replay(&self, gens: &GeneratorSet<C>) -> Polynomial<C> {
        let mut sum = Polynomial::zero();
        for step in &self.steps {
            sum = sum
                + gens
                    .member(step.generator)
                    .poly
                    .sandwich(&step.left, &step.right)
                    .scale(&step.coeff);
        }
        sum
    }

    pub fn render(&self, gens: &GeneratorSet<C>) -> String {
        let mut out = String::new();
        for (i, step) in self.steps.iter().enumerate() {
            out.push_str(&format!(
                "step {}: {} -> {} at ({}, {}) with coefficient {}\n",
                i + 1,
                step.monomial,
                gens.member(step.generator).name(),
                step.left,
                step.right,
                step.coeff,
            ));
        }
        out
    }
}

/// Multi-pattern subword automaton: a trie over the patterns with failure
/// links. A state is "dead" when some pattern is a suffix of the path read
/// so far.
pub struct SubwordAutomaton {
    next: Vec<BTreeMap<u8, u32>>,
    fail: Vec<u32>,
    /// Patterns ending exactly at this state, as `(length, pattern id)`.
    out: Vec<Vec<(usize, usize)>>,
    dead: Vec<bool>,
    has_empty_pattern: bool,
    empty_pattern_id: usize,
}

impl SubwordAutomaton {
    pub fn new(patterns: impl IntoIterator<Item = Word>) -> Self {
        let mut next: Vec<BTreeMap<u8, u32>> = vec![BTreeMap::new()];
        let mut out: Vec<Vec<(usize, usize)>> = vec![Vec::new()];
        let mut has_empty_pattern = false;
        let mut empty_pattern_id = usize::MAX;

        for (id, pattern) in patterns.into_iter().enumerate() {
            if pattern.is_one() {
                if !has_empty_pattern {
                    has_empty_pattern = true;
                    empty_pattern_id = id;
                }
                continue;
            }
            let mut state = 0u32;
            for &letter in pattern.letters() {
                let entry = next[state as usize].get(&letter).copied();
                state = match entry {
                    Some(s) => s,
                    None => {
                        let s = next.len() as u32;
                        next.push(BTreeMap::new());
                        out.push(Vec::new());
                        next[state as usize].insert(letter, s);
                        s
                    }
                };
            }
            out[state as usize].push((pattern.letters().len(), id));
        }

        // Failure links by breadth-first traversal.
        let mut fail = vec![0u32; next.len()];
        let mut queue: std::collections::VecDeque<u32> = std::collections::VecDeque::new();
        let roots: Vec<(u8, u32)> = next[0].iter().map(|(&c, &s)| (c, s)).collect();
        for (_, s) in &roots {
            queue.push_back(*s);
        }
        while let Some(state) = queue.pop_front() {
            let transitions: Vec<(u8, u32)> =
                next[state as usize].iter().map(|(&c, &s)| (c, s)).collect();
            for (letter, child) in transitions {
                let mut f = fail[state as usize];
                let target = loop {
                    if let Some(&t) = next[f as usize].get(&letter) {
                        if t != child {
                            break t;
                        }
                    }
                    if f == 0 {
                        break 0;
                    }
                    f = fail[f as usize];
                };
                fail[child as usize] = target;
                let inherited: Vec<(usize, usize)> = out[target as usize].clone();
                out[child as usize].extend(inherited);
                queue.push_back(child);
            }
        }

        let dead: Vec<bool> = out.iter().map(|o| !o.is_empty()).collect();
        let mut automaton =
            SubwordAutomaton { next, fail, out, dead, has_empty_pattern, empty_pattern_id };
        if automaton.has_empty_pattern {
            for d in automaton.dead.iter_mut() {
                *d = true;
            }
        }
        automaton
    }

    pub fn start(&self) -> u32 {
        0
    }

    /// Transition on one letter, following failure links.
    pub fn step(&self, mut state: u32, letter: u8) -> u32 {
        loop {
            if let Some(&t) = self.next[state as usize].get(&letter) {
                return t;
            }
            if state == 0 {
                return 0;
            }
            state = self.fail[state as usize];
        }
    }

    /// Whether some pattern is a suffix of the path leading to `state`.
    pub fn is_dead(&self, state: u32) -> bool {
        self.has_empty_pattern || self.dead[state as usize]
    }

    /// Leftmost match by start position, ties broken by smallest pattern id.
    pub fn find_leftmost(&self, w: &Word) -> Option<(usize, usize)> {
        if self.has_empty_pattern {
            return Some((0, self.empty_pattern_id));
        }
        let mut best: Option<(usize, usize)> = None;
        let mut state = 0u32;
        for (end, &letter) in w.letters().iter().enumerate() {
            state = self.step(state, letter);
            for &(len, id) in &self.out[state as usize] {
                let start = end + 1 - len;
                let candidate = (start, id);
                if best.map_or(true, |b| candidate < b) {
                    best = candidate.into();
                }
            }
        }
        best
    }

    pub fn contains_match(&self, w: &Word) -> bool {
        if self.has_empty_pattern {
            return true;
        }
        let mut state = 0u32;
        for &letter in w.letters() {
            state = self.step(state, letter);
            if self.dead[state as usize] {
                return true;
            }
        }
        false
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{integer, RatPoly};

    fn word(letters: &[u8]) -> Word {
        Word::from_letters(letters.iter().copied()).unwrap()
    }

    fn f_prime_21() -> RatPoly {
        // [[x2,x1],x1] = x2x1x1 - 2x1x2x1 + x1x1x2
        RatPoly::var(2).commutator(&RatPoly::var(1)).commutator(&RatPoly::var(1))
    }

    #[test]
    fn find_lt_subword_examples() {
        let gens = GeneratorSet::new(vec![f_prime_21()]).unwrap();
        assert_eq!(gens.find_lt_subword(&word(&[2, 1, 1])), Some((0, 0)));
        assert_eq!(gens.find_lt_subword(&word(&[1, 2, 1])), None);
        assert_eq!(gens.find_lt_subword(&word(&[1, 2, 1, 1, 3])), Some((1, 0)));
    }

    #[test]
    fn ties_at_same_position_take_smallest_id() {
        // Patterns x2*x1*x2*x1 (id 0) and x2*x1 (id 1) both start at 0.
        let long = RatPoly::monomial(word(&[2, 1, 2, 1]), integer(1));
        let short = RatPoly::monomial(word(&[2, 1]), integer(1));
        let gens = GeneratorSet::new(vec![long, short]).unwrap();
        assert_eq!(gens.find_lt_subword(&word(&[2, 1, 2, 1])), Some((0, 0)));
        // A later long match must not beat an earlier short one.
        assert_eq!(gens.find_lt_subword(&word(&[3, 2, 1, 2, 1])), Some((1, 1)));
    }

    #[test]
    fn normal_form_examples() {
        let gens = GeneratorSet::new(vec![f_prime_21()]).unwrap();

        let (nf, trace) = gens.normal_form(&f_prime_21());
        assert!(nf.is_zero());
        assert_eq!(trace.steps.len(), 1);

        // x2x1x1 reduces in one step to 2x1x2x1 - x1x1x2
        let f = RatPoly::monomial(word(&[2, 1, 1]), integer(1));
        let (nf, trace) = gens.normal_form(&f);
        let expected = RatPoly::from_terms([
            (word(&[1, 2, 1]), integer(2)),
            (word(&[1, 1, 2]), integer(-1)),
        ]);
        assert_eq!(nf, expected);
        assert_eq!(trace.steps.len(), 1);
        // replay reconstructs the reduced part
        assert_eq!(trace.replay(&gens), f - nf);
    }

    #[test]
    fn normal_form_is_idempotent_and_respects_degrees() {
        let gens = GeneratorSet::new(vec![
            f_prime_21(),
            RatPoly::var(2).commutator(&RatPoly::var(2).commutator(&RatPoly::var(1))),
        ])
        .unwrap();
        let f = RatPoly::monomial(word(&[2, 2, 1, 1]), integer(3))
            + RatPoly::monomial(word(&[2, 1]), integer(1));
        let (nf, trace) = gens.normal_form(&f);
        let (nf2, trace2) = gens.normal_form(&nf);
        assert_eq!(nf, nf2);
        assert!(trace2.steps.is_empty());
        // every step stays below the leading word of the input
        let lt = f.leading_word().unwrap().clone();
        for step in &trace.steps {
            assert!(step.monomial <= lt);
        }
    }

    #[test]
    fn is_normal_word_on_empty_word() {
        let gens = GeneratorSet::new(vec![f_prime_21()]).unwrap();
        assert!(gens.is_normal_word(&Word::one()));
    }

    #[test]
    fn enumeration_matches_naive_filter() {
        // dual route: DFS with pruning vs brute-force subword scan
        let gens = GeneratorSet::new(vec![
            f_prime_21(),
            RatPoly::var(2).commutator(&RatPoly::var(2).commutator(&RatPoly::var(1))),
        ])
        .unwrap();
        let enumerated = gens.enumerate_normal_words(2, 5);
        let patterns = gens.leading_words();
        let mut naive = Vec::new();
        for md in Multidegree::all_up_to(2, 5) {
            for w in md.words() {
                if !patterns.iter().any(|p| w.contains_subword(p)) {
                    naive.push(w);
                }
            }
        }
        let mut enumerated_words = enumerated.words.clone();
        enumerated_words.sort();
        naive.sort();
        assert_eq!(enumerated_words, naive);
    }

    #[test]
    fn enumeration_counts() {
        // two generators of the two-variable commutator ideal: counts 1,2,4,6
        let gens = GeneratorSet::new(vec![
            f_prime_21(),
            RatPoly::var(2).commutator(&RatPoly::var(2).commutator(&RatPoly::var(1))),
        ])
        .unwrap();
        let e = gens.enumerate_normal_words(2, 3);
        let per_degree: Vec<usize> = (0..=3)
            .map(|d| e.words.iter().filter(|w| w.degree() == d).count())
            .collect();
        assert_eq!(per_degree, vec![1, 2, 4, 6]);

        // empty set excludes nothing
        let empty = GeneratorSet::<crate::Rat>::empty();
        let e = empty.enumerate_normal_words(2, 2);
        let per_degree: Vec<usize> = (0..=2)
            .map(|d| e.words.iter().filter(|w| w.degree() == d).count())
            .collect();
        assert_eq!(per_degree, vec![1, 2, 4]);

        // multidegree (2,1): x1x1x2 and x1x2x1 survive
        let gens = GeneratorSet::new(vec![
            f_prime_21(),
            RatPoly::var(2).commutator(&RatPoly::var(2).commutator(&RatPoly::var(1))),
        ])
        .unwrap();
        let e = gens.enumerate_normal_words(2, 3);
        assert_eq!(e.count_of(&Multidegree::new(vec![2, 1])), 2);
    }

    #[test]
    fn enlarging_the_set_never_enlarges_normal_words() {
        let small = GeneratorSet::new(vec![f_prime_21()]).unwrap();
        let large = GeneratorSet::new(vec![
            f_prime_21(),
            RatPoly::var(2).commutator(&RatPoly::var(2).commutator(&RatPoly::var(1))),
        ])
        .unwrap();
        let small_words = small.enumerate_normal_words(2, 5).words;
        let large_words = large.enumerate_normal_words(2, 5).words;
        assert!(large_words.iter().all(|w| small_words.contains(w)));
    }
}
