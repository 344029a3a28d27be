//! `(g, K)`-cohomology of `A_q(lambda)` and the multiplicity arithmetic of
//! cuspidal cohomology.

use std::collections::HashMap;

use serde::Serialize;

use super::form::{AqDescriptor, FormKind};
use super::invariants::s_q;
use crate::error::{Error, Result};
use crate::root_core::{ReflectionSubgroup, Root, DEFAULT_ORBIT_CAP};

/// Upper bound on the number of nonzero torus weights of `l ∩ p` fed to the
/// exterior-power expansion.
pub const MAX_EXTERIOR_WEIGHTS: usize = 64;

/// A polynomial in `t` with nonnegative integer coefficients; `coefficients[q]`
/// is the coefficient of `t^q`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Poincare {
    coefficients: Vec<u128>,
}

impl Poincare {
    pub fn new(mut coefficients: Vec<u128>) -> Self {
        while coefficients.last() == Some(&0) {
            coefficients.pop();
        }
        Poincare { coefficients }
    }

    pub fn coefficients(&self) -> &[u128] {
        &self.coefficients
    }

    pub fn coefficient(&self, q: usize) -> u128 {
        self.coefficients.get(q).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// Lowest degree with a nonzero coefficient.
    pub fn q_min(&self) -> Option<usize> {
        self.coefficients.iter().position(|&c| c != 0)
    }

    /// Highest degree with a nonzero coefficient.
    pub fn q_max(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    pub fn value_at_one(&self) -> u128 {
        self.coefficients.iter().sum()
    }

    /// Symmetric about the midpoint of `[q_min, q_max]`.
    pub fn is_palindromic(&self) -> bool {
        match self.q_min() {
            None => true,
            Some(lo) => {
                let c = &self.coefficients[lo..];
                c.iter().eq(c.iter().rev())
            }
        }
    }

    /// Whether the coefficients are `C(q_max - q_min, q - q_min)`.
    pub fn is_exterior_pattern(&self) -> bool {
        match (self.q_min(), self.q_max()) {
            (Some(lo), Some(hi)) => (lo..=hi)
                .all(|q| binomial_multiplicity(lo as i64, hi as i64, q as i64) == self.coefficient(q)),
            _ => false,
        }
    }

    pub fn render(&self) -> String {
        let terms: Vec<String> = self
            .coefficients
            .iter()
            .enumerate()
            .filter(|(_, &c)| c != 0)
            .map(|(q, &c)| match (q, c) {
                (0, c) => c.to_string(),
                (q, 1) => format!("t^{q}"),
                (q, c) => format!("{c}*t^{q}"),
            })
            .collect();
        if terms.is_empty() {
            "0".into()
        } else {
            terms.join(" + ")
        }
    }
}

/// Torus weights of `l ∩ p` together with the reflection group of `L ∩ K`.
struct LeviPData {
    zero_weights: usize,
    weights: Vec<Vec<i64>>,
    group: Option<ReflectionSubgroup>,
}

fn root_pair(r: &Root) -> [Vec<i64>; 2] {
    let w = r.weight().to_ints().expect("roots are integral");
    let neg = w.iter().map(|x| -x).collect();
    [w, neg]
}

fn levi_p_data(desc: &AqDescriptor, include_center: bool, cap: usize) -> Result<LeviPData> {
    let rs = desc.root_system();
    let levi_roots = desc.parabolic().levi_positive_roots(rs);
    let central = if include_center {
        0
    } else {
        desc.form().central_p_dimension()
    };
    match desc.form().kind() {
        FormKind::Compact => Ok(LeviPData {
            zero_weights: 0,
            weights: Vec::new(),
            group: None,
        }),
        FormKind::EqualRankInner { .. } => {
            let (noncompact, compact): (Vec<&Root>, Vec<&Root>) = levi_roots
                .into_iter()
                .partition(|r| desc.form().is_noncompact(r) == Some(true));
            let group = ReflectionSubgroup::new(rs, compact.into_iter().cloned().collect(), cap)?;
            Ok(LeviPData {
                zero_weights: 0,
                weights: noncompact.iter().flat_map(|r| root_pair(r)).collect(),
                group: Some(group),
            })
        }
        FormKind::Complex => {
            // l ∩ p is a copy of l for the compact form of L. Only the center
            // of l is fixed by the Levi Weyl group; the rest of the Cartan
            // stays with the root vectors.
            let levi = desc.parabolic().levi();
            let group = ReflectionSubgroup::levi(rs, levi, cap)?;
            let mut weights: Vec<Vec<i64>> = levi_roots.iter().flat_map(|r| root_pair(r)).collect();
            weights.extend(std::iter::repeat(vec![0; rs.rank()]).take(levi.len()));
            Ok(LeviPData {
                zero_weights: rs.rank() - levi.len(),
                weights,
                group: Some(group),
            })
        }
        FormKind::GlNReal { n } | FormKind::GlNComplex { n } => {
            if !desc.parabolic().is_borel() {
                return Err(Error::Unsupported(
                    "cohomology of gl_n forms is implemented for the Borel only".into(),
                ));
            }
            let dim = match desc.form().kind() {
                FormKind::GlNReal { .. } => n.div_ceil(2),
                _ => *n,
            };
            Ok(LeviPData {
                zero_weights: dim - central,
                weights: Vec::new(),
                group: None,
            })
        }
    }
}

/// Character of `∧^k` of a representation with the given weights, for each `k`.
fn exterior_powers(weights: &[Vec<i64>], rank: usize) -> Vec<HashMap<Vec<i64>, i128>> {
    let mut powers: Vec<HashMap<Vec<i64>, i128>> = vec![HashMap::from([(vec![0; rank], 1)])];
    for w in weights {
        let mut next = powers.clone();
        next.push(HashMap::new());
        for (k, layer) in powers.iter().enumerate() {
            for (mu, c) in layer {
                let sum: Vec<i64> = mu.iter().zip(w).map(|(a, b)| a + b).collect();
                *next[k + 1].entry(sum).or_insert(0) += c;
            }
        }
        powers = next;
    }
    powers
}

fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Poincaré polynomial `sum_q dim H^q(g, K; A_q(lambda) ⊗ M^*) t^q`, from the
/// `L ∩ K`-invariants in `∧(l ∩ p)` shifted by the middle degree. With
/// `include_center = false` the part of the center of `g` lying in `p` is
/// divided out.
pub fn vz_cohomology_poincare(desc: &AqDescriptor, include_center: bool) -> Result<Poincare> {
    vz_cohomology_poincare_with_cap(desc, include_center, DEFAULT_ORBIT_CAP)
}

pub fn vz_cohomology_poincare_with_cap(
    desc: &AqDescriptor,
    include_center: bool,
    cap: usize,
) -> Result<Poincare> {
    if matches!(
        desc.form().kind(),
        FormKind::GlNReal { .. } | FormKind::GlNComplex { .. }
    ) && desc.parabolic().is_full(desc.root_system())
    {
        return Err(Error::Unsupported(
            "cohomology of gl_n forms with q = g".into(),
        ));
    }
    let shift = s_q(desc)?;
    let data = levi_p_data(desc, include_center, cap)?;
    if data.weights.len() > MAX_EXTERIOR_WEIGHTS {
        return Err(Error::DimensionBoundExceeded {
            dim: data.weights.len().to_string(),
            bound: MAX_EXTERIOR_WEIGHTS as u64,
        });
    }
    let rank = desc.root_system().rank();
    let invariants: Vec<u128> = match &data.group {
        None => vec![1],
        Some(group) => exterior_powers(&data.weights, rank)
            .iter()
            .map(|layer| {
                let m = group.trivial_multiplicity(|w| layer.get(w).copied().unwrap_or(0));
                u128::try_from(m).expect("invariant dimensions are nonnegative")
            })
            .collect(),
    };
    // tensor with the exterior algebra of the zero weights
    let z = data.zero_weights as u64;
    let mut coefficients = vec![0u128; shift + invariants.len() + data.zero_weights];
    for (k, &a) in invariants.iter().enumerate() {
        for j in 0..=z {
            coefficients[shift + k + j as usize] += a * binomial(z, j);
        }
    }
    Ok(Poincare::new(coefficients))
}

/// `C(q_max - q_min, q - q_min)`, and `0` outside `[q_min, q_max]`.
pub fn binomial_multiplicity(q_min: i64, q_max: i64, q: i64) -> u128 {
    if q_min > q_max || q < q_min || q > q_max {
        return 0;
    }
    binomial((q_max - q_min) as u64, (q - q_min) as u64)
}

/// Cohomological multiplicities of one infinity type and the multiplicity of
/// the representation in the discrete spectrum.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InfinityTypeRecord {
    pub m_coh: Vec<u64>,
    pub m_l2: u64,
}

/// Pointwise `sum m_coh(q) * m_L2` over the infinity types.
pub fn cuspidal_multiplicity(records: &[InfinityTypeRecord]) -> Vec<u128> {
    let len = records.iter().map(|r| r.m_coh.len()).max().unwrap_or(0);
    let mut out = vec![0u128; len];
    for r in records {
        for (q, &m) in r.m_coh.iter().enumerate() {
            out[q] += m as u128 * r.m_l2 as u128;
        }
    }
    out
}
