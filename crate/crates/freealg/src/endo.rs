//! Monomial endomorphisms of the free algebra and semigroup orbits.
//!
//! An [`Endomorphism`] maps each variable to a word and extends
//! multiplicatively and linearly. A [`SemigroupSpec`] describes a finitely
//! enumerable family of such maps; applying every map of the family to a
//! generating set produces the orbit used to compare initial ideals.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::groebner::{complete_up_to_degree, GroebnerError};
use crate::poly::Polynomial;
use crate::rewrite::GeneratorSet;
use crate::word::Word;
use crate::Scalar;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EndoError {
    #[error("variable x{var} has no image under the endomorphism")]
    MissingImage { var: u8 },
    #[error("variable x{var} is outside the domain handled by the semigroup ({spec})")]
    OutsideDomain { var: u8, spec: String },
}

/// A monomial endomorphism: a total map from variable indices to words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Endomorphism {
    images: BTreeMap<u8, Word>,
}

impl Endomorphism {
    pub fn new(images: BTreeMap<u8, Word>) -> Self {
        Endomorphism { images }
    }

    /// The identity on `x1..xn`.
    pub fn identity(n: u8) -> Self {
        Endomorphism { images: (1..=n).map(|i| (i, Word::var(i))).collect() }
    }

    pub fn images(&self) -> &BTreeMap<u8, Word> {
        &self.images
    }

    /// Applies the endomorphism to a polynomial: substitutes images and
    /// expands. Every occurring variable must have an image.
    pub fn apply<C: Scalar>(&self, f: &Polynomial<C>) -> Result<Polynomial<C>, EndoError> {
        for var in f.support() {
            if !self.images.contains_key(&var) {
                return Err(EndoError::MissingImage { var });
            }
        }
        Ok(f.substitute(&self.images).expect("support covered"))
    }
}

/// A finitely enumerable semigroup of monomial endomorphisms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SemigroupSpec {
    /// Maps defined on the initial segment `x1..xk`, strictly increasing
    /// into the ambient variables `x1..xn`. A generator touching only
    /// `x1..xm` (`m <= k`) is moved by every strictly increasing map on its
    /// own initial segment, matching the restriction of the infinite
    /// order-preserving maps to finitely many variables.
    OrderPreserving { k: u8, n: u8 },
    /// Maps sending `x1..x4` to arbitrary ambient variables (repetitions
    /// allowed) and `x5` to an ascending monomial `x1^a1 * ... * xn^an` of
    /// total degree at most `x5_bound` (the empty product included).
    #[serde(rename = "tideal")]
    TIdeal { n: u8, x5_bound: u32 },
}

impl SemigroupSpec {
    pub fn ambient(&self) -> u8 {
        match self {
            SemigroupSpec::OrderPreserving { n, .. } => *n,
            SemigroupSpec::TIdeal { n, .. } => *n,
        }
    }

    fn describe(&self) -> String {
        match self {
            SemigroupSpec::OrderPreserving { k, n } => format!("order_preserving(k={k}, n={n})"),
            SemigroupSpec::TIdeal { n, x5_bound } => format!("tideal(n={n}, x5_bound={x5_bound})"),
        }
    }

    /// Enumerates the maps that move a generator whose variables lie in
    /// `x1..x_max_var`. The identity is always among them when any map is.
    pub fn maps_for(&self, max_var: u8) -> Result<Vec<Endomorphism>, EndoError> {
        match self {
            SemigroupSpec::OrderPreserving { k, n } => {
                if max_var > *k {
                    return Err(EndoError::OutsideDomain { var: max_var, spec: self.describe() });
                }
                Ok(increasing_maps(max_var, *n))
            }
            SemigroupSpec::TIdeal { n, x5_bound } => {
                if max_var > 5 {
                    return Err(EndoError::OutsideDomain { var: max_var, spec: self.describe() });
                }
                let variable_slots = max_var.min(4);
                let mut maps: Vec<BTreeMap<u8, Word>> = vec![BTreeMap::new()];
                for slot in 1..=variable_slots {
                    let mut extended = Vec::with_capacity(maps.len() * *n as usize);
                    for map in &maps {
                        for image in 1..=*n {
                            let mut next = map.clone();
                            next.insert(slot, Word::var(image));
                            extended.push(next);
                        }
                    }
                    maps = extended;
                }
                if max_var == 5 {
                    let monomials = ascending_monomials(*n, *x5_bound);
                    let mut extended = Vec::with_capacity(maps.len() * monomials.len());
                    for map in &maps {
                        for monomial in &monomials {
                            let mut next = map.clone();
                            next.insert(5, monomial.clone());
                            extended.push(next);
                        }
                    }
                    maps = extended;
                }
                Ok(maps.into_iter().map(Endomorphism::new).collect())
            }
        }
    }
}

/// Strictly increasing maps `{1..m} -> {1..n}` as endomorphisms.
fn increasing_maps(m: u8, n: u8) -> Vec<Endomorphism> {
    let mut out = Vec::new();
    let mut choice: Vec<u8> = Vec::with_capacity(m as usize);
    pick(m, n, 1, &mut choice, &mut out);
    return out;

    fn pick(m: u8, n: u8, from: u8, choice: &mut Vec<u8>, out: &mut Vec<Endomorphism>) {
        if choice.len() == m as usize {
            let images: BTreeMap<u8, Word> = choice
                .iter()
                .enumerate()
                .map(|(i, &target)| ((i + 1) as u8, Word::var(target)))
                .collect();
            out.push(Endomorphism::new(images));
            return;
        }
        for value in from..=n {
            choice.push(value);
            pick(m, n, value + 1, choice, out);
            choice.pop();
        }
    }
}

/// Ascending monomials `x1^a1 * ... * xn^an` of total degree at most
/// `bound`, the empty product included.
fn ascending_monomials(n: u8, bound: u32) -> Vec<Word> {
    let mut out = Vec::new();
    let mut letters: Vec<u8> = Vec::new();
    extend(n, bound, 1, &mut letters, &mut out);
    return out;

    fn extend(n: u8, bound: u32, from: u8, letters: &mut Vec<u8>, out: &mut Vec<Word>) {
        out.push(Word::from_letters(letters.iter().copied()).expect("valid letters"));
        if letters.len() as u32 == bound {
            return;
        }
        for letter in from..=n {
            letters.push(letter);
            extend(n, bound, letter, letters, out);
            letters.pop();
        }
    }
}

/// All pairwise-distinct monic images of the generating set under the maps
/// of the semigroup, of total degree at most `bound`.
pub fn enumerate_semigroup_images<C: Scalar>(
    spec: &SemigroupSpec,
    generators: &[Polynomial<C>],
    bound: u32,
) -> Result<GeneratorSet<C>, EndoError> {
    let mut images: Vec<Polynomial<C>> = Vec::new();
    for generator in generators {
        let max_var = generator.max_variable();
        for map in spec.maps_for(max_var)? {
            let image = map.apply(generator)?;
            let Some(monic) = image.monic() else { continue };
            if monic.degree().unwrap_or(0) > bound {
                continue;
            }
            if !images.contains(&monic) {
                images.push(monic);
            }
        }
    }
    images.sort_by(|a, b| {
        a.leading_word()
            .cmp(&b.leading_word())
            .then_with(|| a.partial_cmp(b).unwrap_or(std::cmp::Ordering::Equal))
    });
    Ok(GeneratorSet::new(images).expect("images are monic"))
}

/// Checks that the ideal generated by the given set is invariant under the
/// semigroup up to the bound: every image of every generator of degree at
/// most `bound` reduces to zero modulo the completed set.
pub fn check_s_invariance<C: Scalar>(
    generators: &GeneratorSet<C>,
    spec: &SemigroupSpec,
    bound: u32,
) -> Result<bool, SInvarianceError> {
    let completed = complete_up_to_degree(&generators.polynomials(), bound)
        .map_err(SInvarianceError::Groebner)?;
    for generator in generators.members() {
        let max_var = generator.poly.max_variable();
        for map in spec.maps_for(max_var).map_err(SInvarianceError::Endo)? {
            let image = map.apply(&generator.poly).map_err(SInvarianceError::Endo)?;
            if image.degree().unwrap_or(0) > bound {
                continue;
            }
            if !completed.reduces_to_zero(&image) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[derive(Debug, Error)]
pub enum SInvarianceError {
    #[error(transparent)]
    Endo(EndoError),
    #[error(transparent)]
    Groebner(GroebnerError),
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::RatPoly;

    fn x(i: u8) -> RatPoly {
        RatPoly::var(i)
    }

    fn word(letters: &[u8]) -> Word {
        Word::from_letters(letters.iter().copied()).unwrap()
    }

    #[test]
    fn identity_fixes_everything() {
        let f = x(1).commutator(&x(2)) * x(3);
        let id = Endomorphism::identity(3);
        assert_eq!(id.apply(&f).unwrap(), f);
    }

    #[test]
    fn renaming_a_double_commutator() {
        // x1 -> x3, x2 -> x5 sends [[x2,x1],x1] to [[x5,x3],x3]
        let f = x(2).commutator(&x(1)).commutator(&x(1));
        let map = Endomorphism::new(
            [(1, Word::var(3)), (2, Word::var(5))].into_iter().collect(),
        );
        let expected = x(5).commutator(&x(3)).commutator(&x(3));
        assert_eq!(map.apply(&f).unwrap(), expected);
    }

    #[test]
    fn monomial_image_for_middle_variable() {
        // x5 -> x1*x2 inside [x1,x2]*x5*[x3,x4]
        let f = x(1).commutator(&x(2)) * x(5) * x(3).commutator(&x(4));
        let map = Endomorphism::new(
            [
                (1, Word::var(1)),
                (2, Word::var(2)),
                (3, Word::var(3)),
                (4, Word::var(4)),
                (5, word(&[1, 2])),
            ]
            .into_iter()
            .collect(),
        );
        let expected = x(1).commutator(&x(2)) * (x(1) * x(2)) * x(3).commutator(&x(4));
        assert_eq!(map.apply(&f).unwrap(), expected);
    }

    #[test]
    fn missing_image_is_an_error() {
        let f = x(1) * x(7);
        let id = Endomorphism::identity(3);
        assert_eq!(id.apply(&f).unwrap_err(), EndoError::MissingImage { var: 7 });
    }

    #[test]
    fn order_preserving_maps_enumerate_combinations() {
        let spec = SemigroupSpec::OrderPreserving { k: 3, n: 4 };
        assert_eq!(spec.maps_for(2).unwrap().len(), 6); // C(4,2)
        assert_eq!(spec.maps_for(3).unwrap().len(), 4); // C(4,3)
        // no strictly increasing pair exists into a single variable
        let tiny = SemigroupSpec::OrderPreserving { k: 2, n: 1 };
        assert!(tiny.maps_for(2).unwrap().is_empty());
    }

    #[test]
    fn order_preserving_maps_compose_within_the_family() {
        // spot-check closure: composing increasing maps stays increasing
        let spec = SemigroupSpec::OrderPreserving { k: 2, n: 4 };
        let inner = spec.maps_for(2).unwrap();
        let outer = SemigroupSpec::OrderPreserving { k: 4, n: 6 }.maps_for(4).unwrap();
        for f in &inner {
            for g in &outer {
                let mut composed: Vec<u8> = Vec::new();
                for v in 1..=2u8 {
                    let mid = f.images()[&v].letters()[0];
                    composed.push(g.images()[&mid].letters()[0]);
                }
                assert!(composed[0] < composed[1]);
            }
        }
    }

    #[test]
    fn tideal_maps_cover_variables_and_monomials() {
        let spec = SemigroupSpec::TIdeal { n: 3, x5_bound: 2 };
        // three-variable generator: 3^3 variable assignments
        assert_eq!(spec.maps_for(3).unwrap().len(), 27);
        // with x5: ascending monomials of degree <= 2 over 3 variables:
        // 1 empty + 3 single + 6 double
        assert_eq!(spec.maps_for(5).unwrap().len(), 81 * 10);
    }

    #[test]
    fn empty_input_gives_empty_orbit() {
        let spec = SemigroupSpec::OrderPreserving { k: 2, n: 1 };
        let f = x(2).commutator(&x(1)).commutator(&x(1));
        let images = enumerate_semigroup_images(&spec, &[f], 3).unwrap();
        assert!(images.is_empty());
    }

    #[test]
    fn semigroup_spec_json_round_trip() {
        let spec: SemigroupSpec =
            serde_json::from_str(r#"{"kind":"order_preserving","k":3,"n":5}"#).unwrap();
        assert_eq!(spec, SemigroupSpec::OrderPreserving { k: 3, n: 5 });
        let spec: SemigroupSpec =
            serde_json::from_str(r#"{"kind":"tideal","n":4,"x5_bound":3}"#).unwrap();
        assert_eq!(spec, SemigroupSpec::TIdeal { n: 4, x5_bound: 3 });
    }
}
