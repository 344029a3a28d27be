use std::collections::{HashMap, HashSet, VecDeque};

use num_traits::{Signed, Zero};

use super::system::RootSystem;
use super::weight::Weight;
use crate::error::{Error, Result};

/// Default bound on orbit enumerations.
pub const DEFAULT_ORBIT_CAP: usize = 1_000_000;

/// A word in the simple reflections. `letters = [i1, ..., ik]` denotes
/// `s_{i1} s_{i2} ... s_{ik}`, so `s_{ik}` acts first.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct WeylWord {
    letters: Vec<usize>,
}

impl WeylWord {
    pub fn new(letters: Vec<usize>) -> Self {
        WeylWord { letters }
    }

    pub fn identity() -> Self {
        WeylWord::default()
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn inverse(&self) -> WeylWord {
        WeylWord::new(self.letters.iter().rev().copied().collect())
    }

    /// The product `self * other` (other acts first).
    pub fn compose(&self, other: &WeylWord) -> WeylWord {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        WeylWord::new(letters)
    }
}

impl RootSystem {
    pub fn weyl_act(&self, w: &WeylWord, lambda: &Weight) -> Result<Weight> {
        lambda.require_rank(self.rank())?;
        if let Some(&bad) = w.letters().iter().find(|&&i| i >= self.rank()) {
            return Err(Error::LetterOutOfRange {
                index: bad,
                rank: self.rank(),
            });
        }
        Ok(self.act_unchecked(w, lambda))
    }

    pub(crate) fn act_unchecked(&self, w: &WeylWord, lambda: &Weight) -> Weight {
        let mut out = lambda.clone();
        for &i in w.letters().iter().rev() {
            self.reflect_in_place(&mut out, i);
        }
        out
    }

    /// Returns the dominant representative `mu` of the orbit of `lambda` and a
    /// reduced word `w` with `w . lambda = mu`.
    pub fn make_dominant(&self, lambda: &Weight) -> (Weight, WeylWord) {
        let mut mu = lambda.clone();
        let mut applied = Vec::new();
        while let Some(i) = (0..mu.rank()).find(|&i| mu.coord(i).is_negative()) {
            self.reflect_in_place(&mut mu, i);
            applied.push(i);
        }
        applied.reverse();
        (mu, WeylWord::new(applied))
    }

    /// Number of positive roots sent to negative roots by `w`.
    pub fn length(&self, w: &WeylWord) -> usize {
        // w(alpha) < 0 iff (alpha, w^{-1} rho) < 0
        let image = self.act_unchecked(&w.inverse(), self.rho());
        self.positive_roots()
            .iter()
            .filter(|r| self.coroot_pairing(&image, r).is_negative())
            .count()
    }

    pub fn weyl_orbit(&self, lambda: &Weight, cap: usize) -> Result<HashSet<Weight>> {
        lambda.require_rank(self.rank())?;
        let mut seen = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(lambda.clone());
        queue.push_back(lambda.clone());
        while let Some(mu) = queue.pop_front() {
            for i in 0..self.rank() {
                if mu.coord(i).is_zero() {
                    continue;
                }
                let mut nu = mu.clone();
                self.reflect_in_place(&mut nu, i);
                if !seen.contains(&nu) {
                    if seen.len() >= cap {
                        return Err(Error::OrbitCapExceeded { cap });
                    }
                    seen.insert(nu.clone());
                    queue.push_back(nu);
                }
            }
        }
        Ok(seen)
    }

    /// Orbit of `lambda` together with, for each point `mu`, a reduced word `w`
    /// with `w . lambda = mu` (when `lambda` is dominant).
    pub fn weyl_orbit_with_words(
        &self,
        lambda: &Weight,
        cap: usize,
    ) -> Result<HashMap<Weight, WeylWord>> {
        lambda.require_rank(self.rank())?;
        let mut seen: HashMap<Weight, WeylWord> = HashMap::new();
        let mut queue = VecDeque::new();
        seen.insert(lambda.clone(), WeylWord::identity());
        queue.push_back(lambda.clone());
        while let Some(mu) = queue.pop_front() {
            let word = seen[&mu].clone();
            for i in 0..self.rank() {
                if mu.coord(i).is_zero() {
                    continue;
                }
                let mut nu = mu.clone();
                self.reflect_in_place(&mut nu, i);
                if !seen.contains_key(&nu) {
                    if seen.len() >= cap {
                        return Err(Error::OrbitCapExceeded { cap });
                    }
                    seen.insert(nu.clone(), WeylWord::new([vec![i], word.letters.clone()].concat()));
                    queue.push_back(nu);
                }
            }
        }
        Ok(seen)
    }

    /// All of `W` as the regular orbit of `rho`: pairs `(w rho, length(w))`.
    pub fn weyl_group_elements(&self, cap: usize) -> Result<Vec<(Weight, usize)>> {
        let order = self.weyl_group_order();
        if order > cap as u128 {
            return Err(Error::OrbitCapExceeded { cap });
        }
        let words = self.weyl_orbit_with_words(self.rho(), cap)?;
        let mut out: Vec<(Weight, usize)> = words.into_iter().map(|(w, word)| (w, word.len())).collect();
        out.sort();
        Ok(out)
    }
}
