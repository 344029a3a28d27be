use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::galois::is_selfdual;
use crate::lattice::IsogenyForm;
use crate::root_core::{ReflectionSubgroup, RootSystem, Weight, DEFAULT_ORBIT_CAP};

/// Frobenius-Schur indicator: +1 real, 0 complex, -1 quaternionic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FsIndicator {
    Real,
    Complex,
    Quaternionic,
}

impl FsIndicator {
    pub fn value(self) -> i8 {
        match self {
            FsIndicator::Real => 1,
            FsIndicator::Complex => 0,
            FsIndicator::Quaternionic => -1,
        }
    }

    pub fn from_value(v: i64) -> Option<Self> {
        match v {
            1 => Some(FsIndicator::Real),
            0 => Some(FsIndicator::Complex),
            -1 => Some(FsIndicator::Quaternionic),
            _ => None,
        }
    }

    /// Indicator of an outer tensor product.
    pub fn product(self, other: FsIndicator) -> FsIndicator {
        FsIndicator::from_value((self.value() * other.value()) as i64).expect("product of signs")
    }
}

impl fmt::Display for FsIndicator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:+}", self.value())
    }
}

/// Parity of `<lambda, 2 rho^vee>` as a sign, for integral `lambda`.
pub fn central_sign(rs: &RootSystem, lambda: &Weight) -> i8 {
    let p = rs.two_rho_check_pairing(lambda);
    debug_assert!(p.is_integer());
    if p.to_integer().rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

fn check_input(form: &IsogenyForm, lambda: &Weight) -> Result<()> {
    let rs = form.root_system();
    lambda.require_rank(rs.rank())?;
    if !lambda.is_integral() {
        return Err(Error::NotIntegral(lambda.to_string()));
    }
    if !lambda.is_dominant() {
        return Err(Error::NotDominant(lambda.to_string()));
    }
    form.require_character(lambda)
}

/// Indicator from self-duality and the value of `lambda` on the central
/// element `exp(2 pi i rho^vee)`.
pub fn fs_indicator_compact(form: &IsogenyForm, lambda: &Weight) -> Result<FsIndicator> {
    check_input(form, lambda)?;
    let rs = form.root_system();
    if !is_selfdual(rs, lambda)? {
        return Ok(FsIndicator::Complex);
    }
    Ok(match central_sign(rs, lambda) {
        1 => FsIndicator::Real,
        _ => FsIndicator::Quaternionic,
    })
}

/// Default dimension bound for the brute-force oracle.
pub const ORACLE_DIMENSION_BOUND: u64 = 2000;

/// Independent indicator: counts invariants in `Sym^2 V` and `Lambda^2 V`
/// from the weight multiplicities, by Weyl alternation.
pub fn fs_indicator_oracle(
    form: &IsogenyForm,
    lambda: &Weight,
    dimension_bound: u64,
) -> Result<FsIndicator> {
    check_input(form, lambda)?;
    let rs = form.root_system();
    let dim = rs.weyl_dimension(lambda)?;
    if dim > dimension_bound.into() {
        return Err(Error::DimensionBoundExceeded {
            dim: dim.to_string(),
            bound: dimension_bound,
        });
    }
    let weights: Vec<(Vec<i64>, i128)> = rs
        .freudenthal_multiplicities(lambda, DEFAULT_ORBIT_CAP)?
        .into_iter()
        .map(|(w, m)| (w.to_ints().expect("integral"), m as i128))
        .collect();

    let mut sym: HashMap<Vec<i64>, i128> = HashMap::new();
    let mut alt: HashMap<Vec<i64>, i128> = HashMap::new();
    for (i, (mu, m)) in weights.iter().enumerate() {
        let twice: Vec<i64> = mu.iter().map(|x| 2 * x).collect();
        *sym.entry(twice.clone()).or_default() += m * (m + 1) / 2;
        *alt.entry(twice).or_default() += m * (m - 1) / 2;
        for (nu, k) in &weights[i + 1..] {
            let s: Vec<i64> = mu.iter().zip(nu).map(|(a, b)| a + b).collect();
            *sym.entry(s.clone()).or_default() += m * k;
            *alt.entry(s).or_default() += m * k;
        }
    }

    let all: Vec<usize> = (0..rs.rank()).collect();
    let w = ReflectionSubgroup::levi(rs, &all, DEFAULT_ORBIT_CAP)?;
    let sym_inv = w.trivial_multiplicity(|x| sym.get(x).copied().unwrap_or(0));
    let alt_inv = w.trivial_multiplicity(|x| alt.get(x).copied().unwrap_or(0));
    match (sym_inv, alt_inv) {
        (1, 0) => Ok(FsIndicator::Real),
        (0, 1) => Ok(FsIndicator::Quaternionic),
        (0, 0) => Ok(FsIndicator::Complex),
        (s, a) => Err(Error::InconsistentMultiplicity(format!(
            "invariant counts Sym^2 = {s}, Lambda^2 = {a} for {lambda}"
        ))),
    }
}

/// Dominant integral weights of `rs` with coordinate sum at most `max_sum`.
pub fn dominant_weights_up_to(rank: usize, max_sum: i64) -> Vec<Weight> {
    let mut out: Vec<Vec<i64>> = vec![Vec::new()];
    for _ in 0..rank {
        out = out
            .into_iter()
            .flat_map(|w| {
                let used: i64 = w.iter().sum();
                (0..=max_sum - used).map(move |c| {
                    let mut v = w.clone();
                    v.push(c);
                    v
                })
            })
            .collect();
    }
    out.sort_by_key(|w| (w.iter().sum::<i64>(), w.clone()));
    out.iter().map(|w| Weight::from_ints(w)).collect()
}

/// All dominant weights with Weyl dimension at most `bound`.
pub fn dominant_weights_with_dimension_at_most(rs: &RootSystem, bound: u64) -> Result<Vec<Weight>> {
    // Dimension is strictly increasing in each coordinate, so walk outwards
    // from zero and stop at the first weight that is too big in each direction.
    let n = rs.rank();
    let mut found = Vec::new();
    let mut frontier = vec![vec![0i64; n]];
    let mut seen = std::collections::HashSet::new();
    seen.insert(vec![0i64; n]);
    while let Some(w) = frontier.pop() {
        let lambda = Weight::from_ints(&w);
        let dim = rs.weyl_dimension(&lambda)?;
        if dim > bound.into() {
            continue;
        }
        found.push(lambda);
        for i in 0..n {
            let mut v = w.clone();
            v[i] += 1;
            if seen.insert(v.clone()) {
                frontier.push(v);
            }
        }
    }
    found.sort_by(|a, b| {
        (a.coordinate_sum(), a.clone()).cmp(&(b.coordinate_sum(), b.clone()))
    });
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sc(s: &str) -> IsogenyForm {
        IsogenyForm::simply_connected(&RootSystem::new(s.parse().unwrap()).unwrap())
    }

    #[test]
    fn examples() {
        let a1 = sc("A1");
        assert_eq!(fs_indicator_compact(&a1, &Weight::zero(1)).unwrap(), FsIndicator::Real);
        assert_eq!(
            fs_indicator_compact(&a1, &Weight::from_ints(&[1])).unwrap(),
            FsIndicator::Quaternionic
        );
        let b2 = sc("B2");
        assert_eq!(
            fs_indicator_compact(&b2, &Weight::from_ints(&[0, 1])).unwrap(),
            FsIndicator::Quaternionic
        );
    }

    #[test]
    fn oracle_examples() {
        let a1 = sc("A1");
        assert_eq!(fs_indicator_oracle(&a1, &Weight::zero(1), 100).unwrap(), FsIndicator::Real);
        assert_eq!(
            fs_indicator_oracle(&a1, &Weight::from_ints(&[1]), 100).unwrap(),
            FsIndicator::Quaternionic
        );
        let a2 = sc("A2");
        assert_eq!(
            fs_indicator_oracle(&a2, &Weight::from_ints(&[1, 0]), 100).unwrap(),
            FsIndicator::Complex
        );
        assert!(matches!(
            fs_indicator_oracle(&a2, &Weight::from_ints(&[5, 5]), 100),
            Err(Error::DimensionBoundExceeded { .. })
        ));
    }

    #[test]
    fn spin7_spin_representation_is_real() {
        let b3 = sc("B3");
        let spin = Weight::from_ints(&[0, 0, 1]);
        assert_eq!(fs_indicator_oracle(&b3, &spin, 100).unwrap(), FsIndicator::Real);
        assert_eq!(fs_indicator_compact(&b3, &spin).unwrap(), FsIndicator::Real);
    }

    #[test]
    fn adjoint_form_rejects_non_characters() {
        let ad = IsogenyForm::adjoint(&RootSystem::new("A1".parse().unwrap()).unwrap());
        assert!(matches!(
            fs_indicator_compact(&ad, &Weight::from_ints(&[1])),
            Err(Error::NotACharacter { .. })
        ));
    }

    #[test]
    fn dimension_enumeration() {
        let a1 = RootSystem::new("A1".parse().unwrap()).unwrap();
        assert_eq!(dominant_weights_with_dimension_at_most(&a1, 5).unwrap().len(), 5);
    }
}
