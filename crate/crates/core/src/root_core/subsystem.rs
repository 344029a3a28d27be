use std::collections::{HashSet, VecDeque};

use num_traits::Signed;

use super::system::{Root, RootSystem};
use super::weight::{Weight, Q};
use crate::error::{Error, Result};

/// The Weyl group of a closed subsystem spanned by some positive roots,
/// stored as the data needed for Weyl alternation: for every element `w`,
/// the integral weight `rho_S - w rho_S` and the sign of `w`.
#[derive(Clone, Debug)]
pub struct ReflectionSubgroup {
    roots: Vec<Root>,
    shifts: Vec<(Vec<i64>, i64)>,
}

impl ReflectionSubgroup {
    /// `positive` must be the positive roots of a closed subsystem.
    pub fn new(rs: &RootSystem, positive: Vec<Root>, cap: usize) -> Result<Self> {
        let n = rs.rank();
        let mut rho_s = Weight::zero(n);
        for r in &positive {
            rho_s = &rho_s + r.weight();
        }
        let rho_s = rho_s.scale(Q::new(1, 2));

        let mut seen: HashSet<Weight> = HashSet::new();
        let mut queue = VecDeque::new();
        seen.insert(rho_s.clone());
        queue.push_back(rho_s.clone());
        while let Some(mu) = queue.pop_front() {
            for r in &positive {
                let nu = rs.reflect_root(&mu, r);
                if seen.insert(nu.clone()) {
                    if seen.len() > cap {
                        return Err(Error::OrbitCapExceeded { cap });
                    }
                    queue.push_back(nu);
                }
            }
        }
        let shifts = seen
            .into_iter()
            .map(|w_rho| {
                let inversions = positive
                    .iter()
                    .filter(|r| rs.coroot_pairing(&w_rho, r).is_negative())
                    .count();
                let sign = if inversions % 2 == 0 { 1 } else { -1 };
                let shift = (&rho_s - &w_rho)
                    .to_ints()
                    .expect("rho - w rho is a sum of roots");
                (shift, sign)
            })
            .collect();
        Ok(ReflectionSubgroup {
            roots: positive,
            shifts,
        })
    }

    /// The parabolic subgroup on a set of simple indices.
    pub fn levi(rs: &RootSystem, levi: &[usize], cap: usize) -> Result<Self> {
        let roots = rs.levi_roots(levi).into_iter().cloned().collect();
        Self::new(rs, roots, cap)
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn order(&self) -> usize {
        self.shifts.len()
    }

    /// Multiplicity of the trivial representation in a virtual character
    /// invariant under this group, given as a coefficient lookup.
    pub fn trivial_multiplicity<F>(&self, coefficient: F) -> i128
    where
        F: Fn(&[i64]) -> i128,
    {
        self.shifts
            .iter()
            .map(|(shift, sign)| *sign as i128 * coefficient(shift))
            .sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::root_core::DEFAULT_ORBIT_CAP;

    #[test]
    fn group_orders() {
        let b3 = RootSystem::new("B3".parse().unwrap()).unwrap();
        let full = ReflectionSubgroup::levi(&b3, &[0, 1, 2], DEFAULT_ORBIT_CAP).unwrap();
        assert_eq!(full.order(), 48);
        let a1 = ReflectionSubgroup::levi(&b3, &[2], DEFAULT_ORBIT_CAP).unwrap();
        assert_eq!(a1.order(), 2);
        // long roots of B3 form a D3 subsystem
        let long: Vec<Root> = b3
            .positive_roots()
            .iter()
            .filter(|r| b3.inner(r.weight(), r.weight()) == Q::from_integer(4))
            .cloned()
            .collect();
        assert_eq!(long.len(), 6);
        assert_eq!(ReflectionSubgroup::new(&b3, long, 1000).unwrap().order(), 24);
    }

    #[test]
    fn adjoint_of_a2_contains_no_trivial() {
        let a2 = RootSystem::new("A2".parse().unwrap()).unwrap();
        let ch = a2.freudenthal_multiplicities(a2.rho(), DEFAULT_ORBIT_CAP).unwrap();
        let g = ReflectionSubgroup::levi(&a2, &[0, 1], DEFAULT_ORBIT_CAP).unwrap();
        let m = g.trivial_multiplicity(|w| {
            ch.get(&Weight::from_ints(w)).copied().unwrap_or(0) as i128
        });
        assert_eq!(m, 0);
        let m = g.trivial_multiplicity(|w| i128::from(w.iter().all(|&x| x == 0)));
        assert_eq!(m, 1);
    }
}
