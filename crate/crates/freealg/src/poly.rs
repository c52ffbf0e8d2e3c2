//! Sparse noncommutative polynomials with exact coefficients.
//!
//! A [`Polynomial`] is a finite map from words to nonzero coefficients; the
//! zero polynomial is the empty map. Multiplication is the bilinear
//! extension of word concatenation and is noncommutative.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::word::{Multidegree, Word};
use crate::Scalar;

/// Noncommutative polynomial: finite map word -> nonzero coefficient.
///
/// Terms are kept in a `BTreeMap` ordered by deg-lex, so the leading term is
/// the last entry and iteration in either direction is ordered.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Polynomial<C> {
    terms: BTreeMap<Word, C>,
}

impl<C: Scalar> Polynomial<C> {
    pub fn zero() -> Self {
        Polynomial { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Polynomial::monomial(Word::one(), C::one())
    }

    /// The variable `x_index` as a polynomial.
    pub fn var(index: u8) -> Self {
        Polynomial::monomial(Word::var(index), C::one())
    }

    pub fn monomial(word: Word, coeff: C) -> Self {
        let mut terms = BTreeMap::new();
        if !coeff.is_zero() {
            terms.insert(word, coeff);
        }
        Polynomial { terms }
    }

    pub fn constant(coeff: C) -> Self {
        Polynomial::monomial(Word::one(), coeff)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, C)>) -> Self {
        let mut poly = Polynomial::zero();
        for (word, coeff) in terms {
            poly.add_term(word, coeff);
        }
        poly
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending deg-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &C)> {
        self.terms.iter()
    }

    /// Words of the polynomial in descending deg-lex order, leading first.
    pub fn words_desc(&self) -> impl Iterator<Item = &Word> {
        self.terms.keys().rev()
    }

    pub fn coefficient(&self, word: &Word) -> Option<&C> {
        self.terms.get(word)
    }

    /// The deg-lex-greatest term, or `None` for the zero polynomial.
    pub fn leading_term(&self) -> Option<(&Word, &C)> {
        self.terms.iter().next_back()
    }

    pub fn leading_word(&self) -> Option<&Word> {
        self.leading_term().map(|(w, _)| w)
    }

    /// Total degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.leading_word().map(Word::degree)
    }

    /// Adds `coeff * word` in place, removing the entry if it cancels.
    pub fn add_term(&mut self, word: Word, coeff: C) {
        if coeff.is_zero() {
            return;
        }
        match self.terms.entry(word) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(coeff);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + coeff;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, coeff: &C) -> Self {
        if coeff.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), c.clone() * coeff.clone()))
                .collect(),
        }
    }

    /// Divides by the leading coefficient; `None` for the zero polynomial.
    pub fn monic(&self) -> Option<Self> {
        let (_, lc) = self.leading_term()?;
        let lc = lc.clone();
        Some(Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (w.clone(), c.clone() / lc.clone()))
                .collect(),
        })
    }

    /// `self * other` by bilinear extension of concatenation.
    pub fn mul_poly(&self, other: &Self) -> Self {
        let mut out = Polynomial::zero();
        for (w1, c1) in &self.terms {
            for (w2, c2) in &other.terms {
                out.add_term(w1.concat(w2), c1.clone() * c2.clone());
            }
        }
        out
    }

    /// `left * self * right` for monomial cofactors.
    pub fn sandwich(&self, left: &Word, right: &Word) -> Self {
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(w, c)| (left.concat(w).concat(right), c.clone()))
                .collect(),
        }
    }

    /// `self^exp` (noncommutative power; `exp = 0` gives `1`).
    pub fn pow(&self, exp: u32) -> Self {
        let mut out = Polynomial::one();
        for _ in 0..exp {
            out = out.mul_poly(self);
        }
        out
    }

    /// The commutator `self * other - other * self`.
    pub fn commutator(&self, other: &Self) -> Self {
        self.mul_poly(other) - other.mul_poly(self)
    }

    /// Substitutes `images[i]` for each letter `x_i`, extending
    /// multiplicatively over words and linearly over terms. Returns `None`
    /// when some occurring variable has no image.
    pub fn substitute(&self, images: &BTreeMap<u8, Word>) -> Option<Self> {
        let mut out = Polynomial::zero();
        for (word, coeff) in &self.terms {
            let mut image = Word::one();
            for &letter in word.letters() {
                image = image.concat(images.get(&letter)?);
            }
            out.add_term(image, coeff.clone());
        }
        Some(out)
    }

    /// Largest variable index occurring in any term, or 0 for constants.
    pub fn max_variable(&self) -> u8 {
        self.terms.keys().map(Word::max_variable).max().unwrap_or(0)
    }

    /// Sorted list of variable indices that actually occur.
    pub fn support(&self) -> Vec<u8> {
        let mut vars: Vec<u8> = Vec::new();
        for word in self.terms.keys() {
            for &l in word.letters() {
                if !vars.contains(&l) {
                    vars.push(l);
                }
            }
        }
        vars.sort_unstable();
        vars
    }

    /// The common multidegree of all terms, if the polynomial is
    /// multihomogeneous (and nonzero).
    pub fn homogeneous_multidegree(&self, n: u8) -> Option<Multidegree> {
        let mut words = self.terms.keys();
        let first = words.next()?.multidegree(n).ok()?;
        for word in words {
            if word.multidegree(n).ok()? != first {
                return None;
            }
        }
        Some(first)
    }
}

impl<C: Scalar> Add for Polynomial<C> {
    type Output = Polynomial<C>;
    fn add(mut self, rhs: Self) -> Self {
        for (w, c) in rhs.terms {
            self.add_term(w, c);
        }
        self
    }
}

impl<C: Scalar> Add for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn add(self, rhs: Self) -> Polynomial<C> {
        self.clone() + rhs.clone()
    }
}

impl<C: Scalar> Sub for Polynomial<C> {
    type Output = Polynomial<C>;
    fn sub(mut self, rhs: Self) -> Self {
        for (w, c) in rhs.terms {
            self.add_term(w, -c);
        }
        self
    }
}

impl<C: Scalar> Sub for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn sub(self, rhs: Self) -> Polynomial<C> {
        self.clone() - rhs.clone()
    }
}

impl<C: Scalar> Neg for Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(self) -> Self {
        Polynomial {
            terms: self.terms.into_iter().map(|(w, c)| (w, -c)).collect(),
        }
    }
}

impl<C: Scalar> Mul for Polynomial<C> {
    type Output = Polynomial<C>;
    fn mul(self, rhs: Self) -> Self {
        self.mul_poly(&rhs)
    }
}

impl<C: Scalar> Mul for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn mul(self, rhs: Self) -> Polynomial<C> {
        self.mul_poly(rhs)
    }
}

impl<C: Scalar> fmt::Display for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (word, coeff)) in self.terms.iter().rev().enumerate() {
            let text = coeff.to_string();
            let (negative, magnitude) = match text.strip_prefix('-') {
                Some(rest) => (true, rest.to_string()),
                None => (false, text),
            };
            if i == 0 {
                if negative {
                    write!(f, "-")?;
                }
            } else if negative {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if word.is_one() {
                write!(f, "{magnitude}")?;
            } else if magnitude == "1" {
                write!(f, "{word}")?;
            } else {
                write!(f, "{magnitude}*{word}")?;
            }
        }
        Ok(())
    }
}

impl<C: Scalar> fmt::Debug for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{integer, RatPoly};

    fn x(i: u8) -> RatPoly {
        RatPoly::var(i)
    }

    fn word(letters: &[u8]) -> Word {
        Word::from_letters(letters.iter().copied()).unwrap()
    }

    #[test]
    fn addition_cancels_terms() {
        let f = x(1).mul_poly(&x(2)) - x(2).mul_poly(&x(1));
        let g = x(2).mul_poly(&x(1));
        assert_eq!(f + g, x(1).mul_poly(&x(2)));
        let h = x(1).scale(&integer(2)) + x(1).scale(&integer(3));
        assert_eq!(h, x(1).scale(&integer(5)));
        let f = x(1).commutator(&x(2));
        assert_eq!(f.clone() + RatPoly::zero(), f);
    }

    #[test]
    fn multiplication_is_noncommutative_concatenation() {
        assert_eq!(x(1) * x(2), RatPoly::monomial(word(&[1, 2]), integer(1)));
        assert_eq!(x(2) * x(1), RatPoly::monomial(word(&[2, 1]), integer(1)));
        assert_ne!(x(1) * x(2), x(2) * x(1));
        let f = x(1).commutator(&x(2));
        assert_eq!(f.mul_poly(&RatPoly::one()), f);
    }

    #[test]
    fn product_of_sums_expands() {
        // (x1+x2)(x1-x2) = x1x1 - x1x2 + x2x1 - x2x2
        let product = (x(1) + x(2)) * (x(1) - x(2));
        let expected = RatPoly::from_terms([
            (word(&[1, 1]), integer(1)),
            (word(&[1, 2]), integer(-1)),
            (word(&[2, 1]), integer(1)),
            (word(&[2, 2]), integer(-1)),
        ]);
        assert_eq!(product, expected);
    }

    #[test]
    fn commutator_examples() {
        let f = x(1).commutator(&x(2));
        let expected = RatPoly::from_terms([
            (word(&[1, 2]), integer(1)),
            (word(&[2, 1]), integer(-1)),
        ]);
        assert_eq!(f, expected);

        let g = x(3) + x(1).scale(&integer(5));
        assert!(g.commutator(&g).is_zero());

        // [x3,[x2,x1]] = x3x2x1 - x3x1x2 - x2x1x3 + x1x2x3
        let inner = x(2).commutator(&x(1));
        let outer = x(3).commutator(&inner);
        let expected = RatPoly::from_terms([
            (word(&[3, 2, 1]), integer(1)),
            (word(&[3, 1, 2]), integer(-1)),
            (word(&[2, 1, 3]), integer(-1)),
            (word(&[1, 2, 3]), integer(1)),
        ]);
        assert_eq!(outer, expected);
    }

    #[test]
    fn leading_terms() {
        let f = x(2).commutator(&x(1));
        assert_eq!(f.leading_term().unwrap(), (&word(&[2, 1]), &integer(1)));

        let inner = x(2).commutator(&x(1));
        let g = x(3).commutator(&inner);
        assert_eq!(g.leading_word().unwrap(), &word(&[3, 2, 1]));

        let h = inner.commutator(&x(1)); // [[x2,x1],x1]
        assert_eq!(h.leading_word().unwrap(), &word(&[2, 1, 1]));

        assert!(RatPoly::zero().leading_term().is_none());
    }

    #[test]
    fn display_round() {
        let f = x(2).commutator(&x(1));
        assert_eq!(f.to_string(), "x2*x1 - x1*x2");
        let g = RatPoly::from_terms([
            (word(&[2, 1, 1]), integer(1)),
            (word(&[1, 2, 1]), integer(-2)),
            (word(&[1, 1, 2]), integer(1)),
        ]);
        assert_eq!(g.to_string(), "x2*x1*x1 - 2*x1*x2*x1 + x1*x1*x2");
        assert_eq!(RatPoly::zero().to_string(), "0");
    }

    #[test]
    fn substitution_is_multiplicative() {
        let f = x(1).commutator(&x(2)) * x(1);
        let images: BTreeMap<u8, Word> =
            [(1, word(&[3])), (2, word(&[1, 2]))].into_iter().collect();
        let g = f.substitute(&images).unwrap();
        let expected = x(3).commutator(&(x(1) * x(2))) * x(3);
        assert_eq!(g, expected);
        // missing image
        let partial: BTreeMap<u8, Word> = [(1, word(&[3]))].into_iter().collect();
        assert!(f.substitute(&partial).is_none());
    }

    #[test]
    fn homogeneous_multidegree_detection() {
        let f = x(1) * x(2) - x(2) * x(1);
        assert_eq!(
            f.homogeneous_multidegree(2),
            Some(Multidegree::new(vec![1, 1]))
        );
        let g = x(1) + x(1) * x(2);
        assert_eq!(g.homogeneous_multidegree(2), None);
    }
}
