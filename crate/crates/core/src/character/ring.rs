use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::ser::{SerializeSeq, Serializer};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::root_core::Weight;

/// A virtual character of the maximal torus: a finitely supported integer
/// combination of weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CharacterElement {
    rank: usize,
    terms: BTreeMap<Weight, i128>,
}

impl CharacterElement {
    pub fn zero(rank: usize) -> Self {
        CharacterElement {
            rank,
            terms: BTreeMap::new(),
        }
    }

    /// The trivial character.
    pub fn one(rank: usize) -> Self {
        Self::monomial(Weight::zero(rank), 1)
    }

    pub fn monomial(weight: Weight, coefficient: i128) -> Self {
        let mut out = Self::zero(weight.rank());
        out.add_term(weight, coefficient);
        out
    }

    pub fn from_terms(rank: usize, terms: impl IntoIterator<Item = (Weight, i128)>) -> Result<Self> {
        let mut out = Self::zero(rank);
        for (w, c) in terms {
            w.require_rank(rank)?;
            out.add_term(w, c);
        }
        Ok(out)
    }

    pub fn from_multiplicities(rank: usize, mults: &BTreeMap<Weight, u128>) -> Self {
        let mut out = Self::zero(rank);
        for (w, &m) in mults {
            out.add_term(w.clone(), m as i128);
        }
        out
    }

    pub fn add_term(&mut self, weight: Weight, coefficient: i128) {
        debug_assert_eq!(weight.rank(), self.rank);
        match self.terms.entry(weight) {
            Entry::Occupied(mut e) => {
                *e.get_mut() += coefficient;
                if *e.get() == 0 {
                    e.remove();
                }
            }
            Entry::Vacant(e) => {
                if coefficient != 0 {
                    e.insert(coefficient);
                }
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn terms(&self) -> &BTreeMap<Weight, i128> {
        &self.terms
    }

    pub fn coefficient(&self, weight: &Weight) -> i128 {
        self.terms.get(weight).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Value at the identity of the torus, the (virtual) dimension.
    pub fn dimension(&self) -> i128 {
        self.terms.values().sum()
    }

    pub fn scale(&self, c: i128) -> Self {
        if c == 0 {
            return Self::zero(self.rank);
        }
        CharacterElement {
            rank: self.rank,
            terms: self.terms.iter().map(|(w, x)| (w.clone(), x * c)).collect(),
        }
    }

    /// Transport of every term along a map of weights.
    pub fn map_weights(&self, f: impl Fn(&Weight) -> Weight) -> Self {
        let mut out = Self::zero(self.rank);
        for (w, &c) in &self.terms {
            out.add_term(f(w), c);
        }
        out
    }

    /// The contragredient: `lambda -> -lambda` on every term.
    pub fn dual(&self) -> Self {
        self.map_weights(|w| -w)
    }

    fn check_rank(&self, other: &Self) {
        assert_eq!(self.rank, other.rank, "characters of different ranks");
    }
}

impl Add for &CharacterElement {
    type Output = CharacterElement;
    fn add(self, rhs: &CharacterElement) -> CharacterElement {
        self.check_rank(rhs);
        let mut out = self.clone();
        for (w, &c) in &rhs.terms {
            out.add_term(w.clone(), c);
        }
        out
    }
}

impl Sub for &CharacterElement {
    type Output = CharacterElement;
    fn sub(self, rhs: &CharacterElement) -> CharacterElement {
        self + &-rhs
    }
}

impl Neg for &CharacterElement {
    type Output = CharacterElement;
    fn neg(self) -> CharacterElement {
        self.scale(-1)
    }
}

impl Mul for &CharacterElement {
    type Output = CharacterElement;
    fn mul(self, rhs: &CharacterElement) -> CharacterElement {
        self.check_rank(rhs);
        let mut terms: BTreeMap<Weight, i128> = BTreeMap::new();
        for (a, &x) in &self.terms {
            for (b, &y) in &rhs.terms {
                *terms.entry(a + b).or_insert(0) += x * y;
            }
        }
        terms.retain(|_, c| *c != 0);
        CharacterElement {
            rank: self.rank,
            terms,
        }
    }
}

impl fmt::Display for CharacterElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(w, c)| format!("{c}[{w}]")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[derive(Serialize)]
struct TermRecord<'a> {
    weight: &'a Weight,
    coefficient: i128,
}

/// A list of `{weight, coefficient}` records in weight order.
impl Serialize for CharacterElement {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (weight, &coefficient) in &self.terms {
            seq.serialize_element(&TermRecord {
                weight,
                coefficient,
            })?;
        }
        seq.end()
    }
}

/// A fraction of characters with nonzero denominator. Equality is decided by
/// cross-multiplication, the character ring being an integral domain.
#[derive(Clone, Debug, Serialize)]
pub struct LocalizedCharacter {
    numerator: CharacterElement,
    denominator: CharacterElement,
}

impl LocalizedCharacter {
    pub fn new(numerator: CharacterElement, denominator: CharacterElement) -> Result<Self> {
        if denominator.is_zero() {
            return Err(Error::InvalidDescriptor("zero denominator".into()));
        }
        if numerator.rank() != denominator.rank() {
            return Err(Error::DimensionMismatch {
                expected: denominator.rank(),
                got: numerator.rank(),
            });
        }
        Ok(LocalizedCharacter {
            numerator,
            denominator,
        })
    }

    pub fn one(rank: usize) -> Self {
        LocalizedCharacter {
            numerator: CharacterElement::one(rank),
            denominator: CharacterElement::one(rank),
        }
    }

    pub fn numerator(&self) -> &CharacterElement {
        &self.numerator
    }

    pub fn denominator(&self) -> &CharacterElement {
        &self.denominator
    }

    pub fn dual(&self) -> Self {
        LocalizedCharacter {
            numerator: self.numerator.dual(),
            denominator: self.denominator.dual(),
        }
    }

    pub fn map_weights(&self, f: impl Fn(&Weight) -> Weight) -> Self {
        LocalizedCharacter {
            numerator: self.numerator.map_weights(&f),
            denominator: self.denominator.map_weights(&f),
        }
    }
}

impl PartialEq for LocalizedCharacter {
    fn eq(&self, other: &Self) -> bool {
        &self.numerator * &other.denominator == &other.numerator * &self.denominator
    }
}

impl Eq for LocalizedCharacter {}

impl Add for &LocalizedCharacter {
    type Output = LocalizedCharacter;
    fn add(self, rhs: &LocalizedCharacter) -> LocalizedCharacter {
        if self.denominator == rhs.denominator {
            return LocalizedCharacter {
                numerator: &self.numerator + &rhs.numerator,
                denominator: self.denominator.clone(),
            };
        }
        LocalizedCharacter {
            numerator: &(&self.numerator * &rhs.denominator) + &(&rhs.numerator * &self.denominator),
            denominator: &self.denominator * &rhs.denominator,
        }
    }
}

impl Mul for &LocalizedCharacter {
    type Output = LocalizedCharacter;
    fn mul(self, rhs: &LocalizedCharacter) -> LocalizedCharacter {
        LocalizedCharacter {
            numerator: &self.numerator * &rhs.numerator,
            denominator: &self.denominator * &rhs.denominator,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(c: &[i64]) -> Weight {
        Weight::from_ints(c)
    }

    #[test]
    fn ring_operations() {
        // (e^1 + e^-1)^2 = e^2 + 2 + e^-2
        let x = CharacterElement::from_terms(1, [(w(&[1]), 1), (w(&[-1]), 1)]).unwrap();
        let sq = &x * &x;
        assert_eq!(sq.coefficient(&w(&[0])), 2);
        assert_eq!(sq.dimension(), 4);
        assert!((&x - &x).is_zero());
        assert_eq!(x.dual(), x);
    }

    #[test]
    fn cancellation_removes_terms() {
        let mut x = CharacterElement::monomial(w(&[1, 0]), 3);
        x.add_term(w(&[1, 0]), -3);
        assert!(x.is_zero());
    }

    #[test]
    fn fractions_compare_by_cross_multiplication() {
        let one = CharacterElement::one(1);
        let d = CharacterElement::from_terms(1, [(w(&[0]), 1), (w(&[-2]), -1)]).unwrap();
        let a = LocalizedCharacter::new(d.clone(), d.clone()).unwrap();
        assert_eq!(a, LocalizedCharacter::one(1));
        assert!(LocalizedCharacter::new(one, CharacterElement::zero(1)).is_err());
    }
}
