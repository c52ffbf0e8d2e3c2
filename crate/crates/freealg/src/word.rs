//! Words (monomials of the free algebra) and multidegrees.
//!
//! A [`Word`] is a finite sequence of 1-based variable indices; the empty
//! word is the unit monomial. Words are compared by the deg-lex ordering:
//! first by total degree, ties broken lexicographically from the left with
//! `x1 < x2 < ...`. This ordering is total, is a well-ordering on any
//! degree-bounded set, and is compatible with concatenation on both sides.

use std::cmp::Ordering;
use std::fmt;

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WordError {
    #[error("variable index {index} exceeds the ambient variable count {n}")]
    IndexOutOfRange { index: u8, n: u8 },
    #[error("variable indices are 1-based; 0 is not a variable")]
    ZeroIndex,
}

/// A monomial of the free algebra: a word in the variables `x1, x2, ...`.
///
/// Letters are stored as 1-based variable indices. The empty word is the
/// unit monomial `1`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    letters: Vec<u8>,
}

impl Word {
    /// The unit monomial (empty word).
    pub fn one() -> Self {
        Word { letters: Vec::new() }
    }

    /// The single-letter word `x_index`.
    pub fn var(index: u8) -> Self {
        assert!(index >= 1, "variable indices are 1-based");
        Word { letters: vec![index] }
    }

    /// Builds a word from a sequence of 1-based variable indices.
    pub fn from_letters(letters: impl IntoIterator<Item = u8>) -> Result<Self, WordError> {
        let letters: Vec<u8> = letters.into_iter().collect();
        if letters.iter().any(|&l| l == 0) {
            return Err(WordError::ZeroIndex);
        }
        Ok(Word { letters })
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    /// Total degree (length) of the word.
    pub fn degree(&self) -> u32 {
        self.letters.len() as u32
    }

    pub fn is_one(&self) -> bool {
        self.letters.is_empty()
    }

    /// Largest variable index occurring in the word, or 0 for the unit.
    pub fn max_variable(&self) -> u8 {
        self.letters.iter().copied().max().unwrap_or(0)
    }

    /// Concatenation `self * other`.
    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.letters.len() + other.letters.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    /// The prefix of the first `len` letters.
    pub fn prefix(&self, len: usize) -> Word {
        Word { letters: self.letters[..len].to_vec() }
    }

    /// The suffix starting at letter `start`.
    pub fn suffix(&self, start: usize) -> Word {
        Word { letters: self.letters[start..].to_vec() }
    }

    /// Whether `pattern` occurs as a contiguous subword.
    pub fn contains_subword(&self, pattern: &Word) -> bool {
        let p = &pattern.letters;
        if p.is_empty() {
            return true;
        }
        self.letters.windows(p.len()).any(|w| w == p.as_slice())
    }

    /// Per-variable occurrence counts within an ambient set of `n` variables.
    pub fn multidegree(&self, n: u8) -> Result<Multidegree, WordError> {
        let mut exponents = vec![0u32; n as usize];
        for &letter in &self.letters {
            if letter > n {
                return Err(WordError::IndexOutOfRange { index: letter, n });
            }
            exponents[letter as usize - 1] += 1;
        }
        Ok(Multidegree { exponents })
    }
}

/// Deg-lex: shorter words first, ties lexicographic from the left.
impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.letters
            .len()
            .cmp(&other.letters.len())
            .then_with(|| self.letters.cmp(&other.letters))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        let mut first = true;
        for &letter in &self.letters {
            if !first {
                write!(f, "*")?;
            }
            write!(f, "x{letter}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for Word {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Per-variable exponent vector of a word or multihomogeneous polynomial.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Multidegree {
    exponents: Vec<u32>,
}

impl Multidegree {
    pub fn new(exponents: Vec<u32>) -> Self {
        Multidegree { exponents }
    }

    pub fn zero(n: u8) -> Self {
        Multidegree { exponents: vec![0; n as usize] }
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    /// Number of ambient variables.
    pub fn n(&self) -> u8 {
        self.exponents.len() as u8
    }

    /// Exponent of `x_index` (1-based); 0 beyond the ambient range.
    pub fn exponent(&self, index: u8) -> u32 {
        self.exponents.get(index as usize - 1).copied().unwrap_or(0)
    }

    /// Total degree.
    pub fn total(&self) -> u32 {
        self.exponents.iter().sum()
    }

    /// Variables with nonzero exponent.
    pub fn support(&self) -> Vec<u8> {
        self.exponents
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| (i + 1) as u8)
            .collect()
    }

    pub fn add(&self, other: &Multidegree) -> Multidegree {
        assert_eq!(self.exponents.len(), other.exponents.len());
        Multidegree {
            exponents: self
                .exponents
                .iter()
                .zip(&other.exponents)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    /// Componentwise difference, or `None` if any entry would go negative.
    pub fn checked_sub(&self, other: &Multidegree) -> Option<Multidegree> {
        assert_eq!(self.exponents.len(), other.exponents.len());
        let mut exponents = Vec::with_capacity(self.exponents.len());
        for (a, b) in self.exponents.iter().zip(&other.exponents) {
            exponents.push(a.checked_sub(*b)?);
        }
        Some(Multidegree { exponents })
    }

    /// All multidegrees on `n` variables of total degree at most `bound`,
    /// in deg-lex order (ascending total degree, then lexicographic).
    pub fn all_up_to(n: u8, bound: u32) -> Vec<Multidegree> {
        let mut out = Vec::new();
        for total in 0..=bound {
            let mut current = vec![0u32; n as usize];
            fill(&mut out, &mut current, 0, total);
        }
        return out;

        fn fill(out: &mut Vec<Multidegree>, current: &mut Vec<u32>, pos: usize, remaining: u32) {
            if pos + 1 == current.len() {
                current[pos] = remaining;
                out.push(Multidegree { exponents: current.clone() });
                current[pos] = 0;
                return;
            }
            for e in 0..=remaining {
                current[pos] = e;
                fill(out, current, pos + 1, remaining - e);
            }
            current[pos] = 0;
        }
    }

    /// All multidegrees componentwise between zero and `self`.
    pub fn sub_multidegrees(&self) -> Vec<Multidegree> {
        let mut out = vec![Multidegree::zero(self.n())];
        for (i, &e) in self.exponents.iter().enumerate() {
            let mut extended = Vec::with_capacity(out.len() * (e as usize + 1));
            for base in &out {
                for value in 0..=e {
                    let mut exps = base.exponents.clone();
                    exps[i] = value;
                    extended.push(Multidegree { exponents: exps });
                }
            }
            out = extended;
        }
        out
    }

    /// All words with exactly this multidegree.
    pub fn words(&self) -> Vec<Word> {
        let mut remaining = self.exponents.clone();
        let mut current = Vec::with_capacity(self.total() as usize);
        let mut out = Vec::new();
        build(&mut remaining, &mut current, &mut out);
        return out;

        fn build(remaining: &mut Vec<u32>, current: &mut Vec<u8>, out: &mut Vec<Word>) {
            if remaining.iter().all(|&r| r == 0) {
                out.push(Word { letters: current.clone() });
                return;
            }
            for i in 0..remaining.len() {
                if remaining[i] > 0 {
                    remaining[i] -= 1;
                    current.push((i + 1) as u8);
                    build(remaining, current, out);
                    current.pop();
                    remaining[i] += 1;
                }
            }
        }
    }

    /// Number of words with this multidegree (multinomial coefficient),
    /// saturating at `u64::MAX`.
    pub fn word_count(&self) -> u64 {
        let mut count: u64 = 1;
        let mut placed: u64 = 0;
        for &e in &self.exponents {
            for k in 1..=u64::from(e) {
                placed += 1;
                count = count.saturating_mul(placed);
                count /= k;
            }
        }
        count
    }
}

/// Deg-lex on exponent vectors: total degree first, then lexicographic.
impl Ord for Multidegree {
    fn cmp(&self, other: &Self) -> Ordering {
        self.total()
            .cmp(&other.total())
            .then_with(|| self.exponents.cmp(&other.exponents))
    }
}

impl PartialOrd for Multidegree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Multidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.exponents.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for Multidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(letters: &[u8]) -> Word {
        Word::from_letters(letters.iter().copied()).unwrap()
    }

    #[test]
    fn deglex_compares_degree_first() {
        // x1*x2 < x2*x1 lexicographically at equal degree
        assert!(w(&[1, 2]) < w(&[2, 1]));
        // equal words compare equal
        assert_eq!(w(&[]).cmp(&w(&[])), Ordering::Equal);
        // degree dominates: x3 < x1*x1
        assert!(w(&[3]) < w(&[1, 1]));
    }

    #[test]
    fn multidegree_counts_occurrences() {
        assert_eq!(w(&[2, 1, 2]).multidegree(3).unwrap().exponents(), &[1, 2, 0]);
        assert_eq!(w(&[]).multidegree(2).unwrap().exponents(), &[0, 0]);
        assert_eq!(w(&[1, 2, 3]).multidegree(3).unwrap().exponents(), &[1, 1, 1]);
        assert_eq!(
            w(&[1, 4]).multidegree(3),
            Err(WordError::IndexOutOfRange { index: 4, n: 3 })
        );
    }

    #[test]
    fn multidegree_of_concatenation_adds() {
        let u = w(&[1, 3, 1]);
        let v = w(&[2, 3]);
        assert_eq!(
            u.concat(&v).multidegree(3).unwrap(),
            u.multidegree(3).unwrap().add(&v.multidegree(3).unwrap())
        );
    }

    #[test]
    fn word_display_round() {
        assert_eq!(w(&[2, 1, 1]).to_string(), "x2*x1*x1");
        assert_eq!(Word::one().to_string(), "1");
    }

    #[test]
    fn word_counts_match_enumeration() {
        for md in Multidegree::all_up_to(3, 5) {
            assert_eq!(md.words().len() as u64, md.word_count(), "md {md}");
        }
    }

    #[test]
    fn all_up_to_is_sorted_and_complete() {
        let mds = Multidegree::all_up_to(3, 4);
        assert!(mds.windows(2).all(|p| p[0] < p[1]));
        let per_degree: Vec<usize> = (0..=4)
            .map(|d| mds.iter().filter(|m| m.total() == d).count())
            .collect();
        // compositions of d into 3 parts: C(d+2,2)
        assert_eq!(per_degree, vec![1, 3, 6, 10, 15]);
    }
}
