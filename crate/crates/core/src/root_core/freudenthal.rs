//! Weight multiplicities by Freudenthal's recursion, run over dominant weights
//! only and then spread over Weyl orbits when a full character is wanted.
//!
//! Everything is parametrised by a subset `levi` of simple indices: the
//! computation is then for the irreducible module of the Levi subalgebra with
//! those simple roots (and the full Cartan). Passing all indices gives the
//! usual irreducible of `g`.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};

use super::system::RootSystem;
use super::weight::Weight;
use crate::error::{Error, Result};

impl RootSystem {
    fn check_highest(&self, levi: &[usize], lambda: &Weight) -> Result<Vec<i64>> {
        lambda.require_rank(self.rank())?;
        let ints = lambda
            .to_ints()
            .ok_or_else(|| Error::NotIntegral(lambda.to_string()))?;
        if levi.iter().any(|&j| ints[j] < 0) {
            return Err(Error::NotDominant(lambda.to_string()));
        }
        if let Some(&bad) = levi.iter().find(|&&j| j >= self.rank()) {
            return Err(Error::LetterOutOfRange {
                index: bad,
                rank: self.rank(),
            });
        }
        Ok(ints)
    }

    fn all_indices(&self) -> Vec<usize> {
        (0..self.rank()).collect()
    }

    /// Multiplicities of the dominant weights of the irreducible with highest
    /// weight `lambda`.
    pub fn dominant_multiplicities(&self, lambda: &Weight) -> Result<BTreeMap<Weight, u128>> {
        self.levi_dominant_multiplicities(&self.all_indices(), lambda)
    }

    /// As `dominant_multiplicities`, for the Levi subalgebra on `levi`.
    /// Keys are the `levi`-dominant weights.
    pub fn levi_dominant_multiplicities(
        &self,
        levi: &[usize],
        lambda: &Weight,
    ) -> Result<BTreeMap<Weight, u128>> {
        let top = self.check_highest(levi, lambda)?;
        let table = self.freudenthal_dominant(levi, &top)?;
        Ok(table
            .into_iter()
            .map(|(w, m)| (Weight::from_ints(&w), m))
            .collect())
    }

    fn freudenthal_dominant(&self, levi: &[usize], top: &[i64]) -> Result<HashMap<Vec<i64>, u128>> {
        let n = self.rank();
        let roots: Vec<(Vec<i64>, Vec<i64>)> = self
            .levi_roots(levi)
            .into_iter()
            .map(|r| {
                (
                    r.weight().to_ints().expect("roots are integral"),
                    r.root_coords().to_vec(),
                )
            })
            .collect();

        // BFS over levi-dominant weights below `top`, tracking depth in root coordinates.
        let mut depth_of: HashMap<Vec<i64>, Vec<i64>> = HashMap::new();
        let mut order: Vec<Vec<i64>> = Vec::new();
        let mut queue = VecDeque::new();
        depth_of.insert(top.to_vec(), vec![0; n]);
        queue.push_back(top.to_vec());
        while let Some(mu) = queue.pop_front() {
            let depth = depth_of[&mu].clone();
            for (alpha, coords) in &roots {
                let nu: Vec<i64> = mu.iter().zip(alpha).map(|(a, b)| a - b).collect();
                if levi.iter().any(|&j| nu[j] < 0) || depth_of.contains_key(&nu) {
                    continue;
                }
                let d: Vec<i64> = depth.iter().zip(coords).map(|(a, b)| a + b).collect();
                depth_of.insert(nu.clone(), d);
                queue.push_back(nu);
            }
            order.push(mu);
        }
        order.sort_by_key(|mu| depth_of[mu].iter().sum::<i64>());

        let rho = vec![1i64; n];
        let shift = |v: &[i64]| -> Vec<i64> { v.iter().zip(&rho).map(|(a, b)| a + b).collect() };
        let top_rho = shift(top);
        let top_norm = self.inner_int(&top_rho, &top_rho);

        let mut mult: HashMap<Vec<i64>, u128> = HashMap::new();
        mult.insert(top.to_vec(), 1);
        for mu in order.iter().skip(1) {
            let depth = &depth_of[mu];
            let mut sum: i128 = 0;
            for (alpha, coords) in &roots {
                let mut nu = mu.clone();
                let mut k = 1i64;
                loop {
                    if depth.iter().zip(coords).any(|(d, c)| d - k * c < 0) {
                        break;
                    }
                    for (x, a) in nu.iter_mut().zip(alpha) {
                        *x += a;
                    }
                    let rep = self.levi_dominant_int(levi, &nu);
                    if let Some(&m) = mult.get(&rep) {
                        let term = self
                            .inner_int(&nu, alpha)
                            .checked_mul(m as i128)
                            .ok_or(Error::Overflow("freudenthal"))?;
                        sum = sum.checked_add(term).ok_or(Error::Overflow("freudenthal"))?;
                    }
                    k += 1;
                }
            }
            let mu_rho = shift(mu);
            let denom = top_norm - self.inner_int(&mu_rho, &mu_rho);
            let num = sum.checked_mul(2).ok_or(Error::Overflow("freudenthal"))?;
            if denom <= 0 || num % denom != 0 {
                return Err(Error::Overflow("freudenthal: non-integral multiplicity"));
            }
            let m = u128::try_from(num / denom).map_err(|_| Error::Overflow("freudenthal"))?;
            mult.insert(mu.clone(), m);
        }
        Ok(mult)
    }

    /// `levi`-dominant representative of an integral weight.
    pub(crate) fn levi_dominant_int(&self, levi: &[usize], lambda: &[i64]) -> Vec<i64> {
        let mut mu = lambda.to_vec();
        while let Some(&j) = levi.iter().find(|&&j| mu[j] < 0) {
            self.reflect_int(&mut mu, j);
        }
        mu
    }

    /// Size of the `W_levi`-orbit of a `levi`-dominant weight.
    pub fn levi_orbit_size(&self, levi: &[usize], mu: &Weight) -> u128 {
        let stab: Vec<usize> = levi
            .iter()
            .copied()
            .filter(|&j| mu.coord(j) == 0.into())
            .collect();
        self.parabolic_order(levi) / self.parabolic_order(&stab)
    }

    /// Every weight of the irreducible with highest weight `lambda`, with multiplicity.
    pub fn freudenthal_multiplicities(
        &self,
        lambda: &Weight,
        cap: usize,
    ) -> Result<BTreeMap<Weight, u128>> {
        self.levi_character(&self.all_indices(), lambda, cap)
    }

    /// Full torus character of the Levi irreducible with highest weight `lambda`.
    pub fn levi_character(
        &self,
        levi: &[usize],
        lambda: &Weight,
        cap: usize,
    ) -> Result<BTreeMap<Weight, u128>> {
        let top = self.check_highest(levi, lambda)?;
        let dominant = self.freudenthal_dominant(levi, &top)?;
        let mut out = BTreeMap::new();
        for (mu, m) in dominant {
            for nu in self.levi_orbit_int(levi, &mu, cap)? {
                out.insert(Weight::from_ints(&nu), m);
                if out.len() > cap {
                    return Err(Error::OrbitCapExceeded { cap });
                }
            }
        }
        Ok(out)
    }

    fn levi_orbit_int(&self, levi: &[usize], mu: &[i64], cap: usize) -> Result<Vec<Vec<i64>>> {
        let mut seen: HashSet<Vec<i64>> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(mu.to_vec());
        queue.push_back(mu.to_vec());
        while let Some(x) = queue.pop_front() {
            for &j in levi {
                if x[j] == 0 {
                    continue;
                }
                let mut y = x.clone();
                self.reflect_int(&mut y, j);
                if seen.insert(y.clone()) {
                    if seen.len() > cap {
                        return Err(Error::OrbitCapExceeded { cap });
                    }
                    queue.push_back(y);
                }
            }
        }
        Ok(seen.into_iter().collect())
    }

    /// Dimension by the Weyl product formula.
    pub fn weyl_dimension(&self, lambda: &Weight) -> Result<BigUint> {
        self.levi_weyl_dimension(&self.all_indices(), lambda)
    }

    pub fn levi_weyl_dimension(&self, levi: &[usize], lambda: &Weight) -> Result<BigUint> {
        let top = self.check_highest(levi, lambda)?;
        let mut num = BigUint::one();
        let mut den = BigUint::one();
        for r in self.levi_roots(levi) {
            let s = r.coroot_coords();
            let a: i64 = s.iter().zip(&top).map(|(x, c)| x * (c + 1)).sum();
            let b: i64 = s.iter().sum();
            num *= BigUint::from(a as u64);
            den *= BigUint::from(b as u64);
        }
        Ok(num / den)
    }

    /// Dimension as `sum m(mu) |W mu|` over dominant weights; an independent
    /// count to compare with `weyl_dimension`.
    pub fn dimension_from_multiplicities(&self, lambda: &Weight) -> Result<BigUint> {
        let all = self.all_indices();
        let dom = self.dominant_multiplicities(lambda)?;
        let mut total = BigUint::from(0u32);
        for (mu, m) in dom {
            total += BigUint::from(m) * BigUint::from(self.levi_orbit_size(&all, &mu));
        }
        Ok(total)
    }

    /// Weyl dimension as a `u64`, or `None` when it does not fit.
    pub fn weyl_dimension_u64(&self, lambda: &Weight) -> Result<Option<u64>> {
        Ok(self.weyl_dimension(lambda)?.to_u64())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_core::weyl::DEFAULT_ORBIT_CAP;

    fn rs(s: &str) -> RootSystem {
        RootSystem::new(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn trivial_and_rank_one() {
        let a1 = rs("A1");
        let m = a1
            .freudenthal_multiplicities(&Weight::zero(1), DEFAULT_ORBIT_CAP)
            .unwrap();
        assert_eq!(m.len(), 1);
        let m = a1
            .freudenthal_multiplicities(&Weight::from_ints(&[2]), DEFAULT_ORBIT_CAP)
            .unwrap();
        assert_eq!(m.len(), 3);
        assert!(m.values().all(|&v| v == 1));
        assert_eq!(a1.weyl_dimension(&Weight::from_ints(&[7])).unwrap(), 8u32.into());
    }

    #[test]
    fn a2_adjoint() {
        let a2 = rs("A2");
        let m = a2
            .freudenthal_multiplicities(a2.rho(), DEFAULT_ORBIT_CAP)
            .unwrap();
        assert_eq!(m[&Weight::zero(2)], 2);
        assert_eq!(m.values().sum::<u128>(), 8);
        assert_eq!(a2.weyl_dimension(a2.rho()).unwrap(), 8u32.into());
    }

    #[test]
    fn g2_seven_dimensional() {
        let g2 = rs("G2");
        let w1 = Weight::fundamental(2, 0);
        assert_eq!(g2.weyl_dimension(&w1).unwrap(), 7u32.into());
        let m = g2.freudenthal_multiplicities(&w1, DEFAULT_ORBIT_CAP).unwrap();
        assert_eq!(m.values().sum::<u128>(), 7);
        // 14-dimensional adjoint: zero weight has multiplicity 2
        let w2 = Weight::fundamental(2, 1);
        let m = g2.freudenthal_multiplicities(&w2, DEFAULT_ORBIT_CAP).unwrap();
        assert_eq!(m[&Weight::zero(2)], 2);
        assert_eq!(m.values().sum::<u128>(), 14);
    }

    #[test]
    fn rejects_bad_input() {
        let a2 = rs("A2");
        assert!(matches!(
            a2.weyl_dimension(&Weight::from_ints(&[-1, 0])),
            Err(Error::NotDominant(_))
        ));
        let half = Weight::new(vec![super::super::weight::Q::new(1, 2), 0.into()]);
        assert!(matches!(
            a2.dominant_multiplicities(&half),
            Err(Error::NotIntegral(_))
        ));
    }

    #[test]
    fn levi_module_of_a2() {
        let a2 = rs("A2");
        // Levi {alpha1}: weight (1, 0) gives a 2-dim sl2 module
        let lam = Weight::from_ints(&[1, 0]);
        let ch = a2.levi_character(&[0], &lam, 100).unwrap();
        assert_eq!(ch.len(), 2);
        assert!(ch.contains_key(&Weight::from_ints(&[-1, 1])));
        assert_eq!(a2.levi_weyl_dimension(&[0], &lam).unwrap(), 2u32.into());
        // torus character: empty Levi is one weight
        let ch = a2.levi_character(&[], &Weight::from_ints(&[-3, 2]), 100).unwrap();
        assert_eq!(ch.len(), 1);
    }

    #[test]
    fn e8_adjoint_dimension() {
        let e8 = rs("E8");
        let w8 = Weight::fundamental(8, 7);
        assert_eq!(e8.weyl_dimension(&w8).unwrap(), 248u32.into());
        assert_eq!(e8.dimension_from_multiplicities(&w8).unwrap(), 248u32.into());
    }
}
