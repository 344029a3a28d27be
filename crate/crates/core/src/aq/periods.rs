//! Period matrices over a quadratic field and their `GL_m(Q)` double cosets.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::descent::{rat, Matrix, QuadElem, QuadraticField, Rat, Scalar};
use crate::error::{Error, Result};

/// Largest size handled by [`same_double_coset`].
pub const MAX_PERIOD_SIZE: usize = 4;

/// Random combinations of the solution space tried before concluding that
/// no invertible pair exists.
const COSET_TRIALS: usize = 24;
const COSET_SEED: u64 = 0x5eed_c05e;

/// An invertible `m x m` period matrix with entries in a quadratic field.
#[derive(Clone, Debug, PartialEq)]
pub struct PeriodStructure {
    field: QuadraticField,
    omega: Matrix<QuadElem>,
}

impl PeriodStructure {
    pub fn new(field: QuadraticField, omega: Matrix<QuadElem>) -> Result<Self> {
        if !omega.is_square() {
            return Err(Error::DimensionMismatch {
                expected: omega.rows(),
                got: omega.cols(),
            });
        }
        if omega.entries().iter().any(|x| x.field() != field) {
            return Err(Error::InvalidDescriptor(format!(
                "period entries outside {field}"
            )));
        }
        if !omega.is_invertible() {
            return Err(Error::SingularMatrix);
        }
        Ok(PeriodStructure { field, omega })
    }

    pub fn size(&self) -> usize {
        self.omega.rows()
    }

    pub fn field(&self) -> &QuadraticField {
        &self.field
    }

    pub fn omega(&self) -> &Matrix<QuadElem> {
        &self.omega
    }

    /// The periods for the embedding rescaled by `c`.
    pub fn scale(&self, c: &QuadElem) -> Result<Self> {
        if c.is_zero_elem() {
            return Err(Error::SingularMatrix);
        }
        PeriodStructure::new(self.field.clone(), self.omega.scale(c))
    }
}

/// `P_t0^{-1} P_q`.
pub fn ratio(p_q: &PeriodStructure, p_t0: &PeriodStructure) -> Result<Matrix<QuadElem>> {
    if p_q.size() != p_t0.size() {
        return Err(Error::DimensionMismatch {
            expected: p_t0.size(),
            got: p_q.size(),
        });
    }
    let inv = p_t0.omega.inverse().ok_or(Error::SingularMatrix)?;
    Ok(&inv * &p_q.omega)
}

fn lift(field: &QuadraticField, m: &Matrix<Rat>) -> Matrix<QuadElem> {
    m.map(&field.zero(), |x| field.from_rational(x.clone()))
}

/// Whether `q = A p C^{-1}` for some `A, C` in `GL_m(Q)`.
///
/// The pairs `(A, C)` with `A p = q C` form a rational vector space, found by
/// splitting each entry of `A p - q C` into rational and irrational parts.
/// Invertible pairs are then searched by seeded random combinations of a
/// basis: `det A det C` is a polynomial on that space, so a nonzero one is
/// detected with overwhelming probability.
pub fn same_double_coset(p: &PeriodStructure, q: &PeriodStructure) -> Result<bool> {
    let m = p.size();
    if q.size() != m {
        return Err(Error::DimensionMismatch {
            expected: m,
            got: q.size(),
        });
    }
    if m > MAX_PERIOD_SIZE {
        return Err(Error::DimensionBoundExceeded {
            dim: m.to_string(),
            bound: MAX_PERIOD_SIZE as u64,
        });
    }
    if p.field != q.field {
        return Err(Error::InvalidDescriptor("period matrices over different fields".into()));
    }
    // unknowns: A (row-major, m^2 entries) then C (row-major, m^2 entries)
    let unknowns = 2 * m * m;
    let mut rows: Vec<Vec<Rat>> = Vec::new();
    for i in 0..m {
        for j in 0..m {
            // (A p)_{ij} - (q C)_{ij} = sum_k A_{ik} p_{kj} - q_{ik} C_{kj}
            let mut re = vec![rat(0); unknowns];
            let mut im = vec![rat(0); unknowns];
            for k in 0..m {
                let pk = p.omega.get(k, j);
                re[i * m + k] += pk.rational_part();
                im[i * m + k] += pk.irrational_part();
                let qk = q.omega.get(i, k);
                re[m * m + k * m + j] -= qk.rational_part();
                im[m * m + k * m + j] -= qk.irrational_part();
            }
            rows.push(re);
            rows.push(im);
        }
    }
    let system = Matrix::from_rows(rows, &rat(0))?;
    let basis = system.nullspace();
    if basis.is_empty() {
        return Ok(false);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(COSET_SEED);
    for _ in 0..COSET_TRIALS {
        let mut v = vec![rat(0); unknowns];
        for b in &basis {
            let c = rat(rng.gen_range(-20..=20));
            for (x, y) in v.iter_mut().zip(b) {
                *x += &c * y;
            }
        }
        let a = Matrix::from_rows(v[..m * m].chunks(m).map(<[Rat]>::to_vec).collect(), &rat(0))?;
        let c = Matrix::from_rows(v[m * m..].chunks(m).map(<[Rat]>::to_vec).collect(), &rat(0))?;
        if a.is_invertible() && c.is_invertible() {
            debug_assert!({
                let f = &p.field;
                &lift(f, &a) * &p.omega == &q.omega * &lift(f, &c)
            });
            return Ok(true);
        }
    }
    Ok(false)
}

/// `A p B` for rational `A`, `B`.
pub fn translate(p: &PeriodStructure, a: &Matrix<Rat>, b: &Matrix<Rat>) -> Result<PeriodStructure> {
    let f = &p.field;
    PeriodStructure::new(f.clone(), &(&lift(f, a) * &p.omega) * &lift(f, b))
}

/// The unit of the period calculus: the identity matrix.
pub fn identity_periods(field: &QuadraticField, m: usize) -> PeriodStructure {
    PeriodStructure {
        field: field.clone(),
        omega: Matrix::identity(m, &field.one()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gaussian() -> QuadraticField {
        QuadraticField::new(-1).unwrap()
    }

    fn periods(entries: &[[(i64, i64); 2]; 2]) -> PeriodStructure {
        let k = gaussian();
        let rows = entries
            .iter()
            .map(|r| r.iter().map(|&(a, b)| k.from_ints(a, b)).collect())
            .collect();
        PeriodStructure::new(k.clone(), Matrix::from_rows(rows, &k.zero()).unwrap()).unwrap()
    }

    fn rational(rows: &[[i64; 2]; 2]) -> Matrix<Rat> {
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect(), &rat(0))
            .unwrap()
    }

    #[test]
    fn scaling_identity() {
        let k = gaussian();
        let c = k.from_ints(2, 3);
        let id = identity_periods(&k, 3);
        assert_eq!(id.scale(&c).unwrap().omega(), &Matrix::scalar(3, c));
    }

    #[test]
    fn double_cosets() {
        let p = periods(&[[(1, 1), (0, 2)], [(3, 0), (1, -1)]]);
        let q = translate(&p, &rational(&[[1, 2], [0, 1]]), &rational(&[[2, 0], [1, 1]])).unwrap();
        assert!(same_double_coset(&p, &q).unwrap());
        // i * identity is not a rational multiple of a rational matrix
        let k = gaussian();
        let id = identity_periods(&k, 2);
        let i_id = id.scale(&k.sqrt_d()).unwrap();
        assert!(!same_double_coset(&id, &i_id).unwrap());
        assert!(same_double_coset(&id, &id.scale(&k.from_ints(5, 0)).unwrap()).unwrap());
    }

    #[test]
    fn ratio_is_scale_invariant() {
        let k = gaussian();
        let p = periods(&[[(1, 1), (0, 2)], [(3, 0), (1, -1)]]);
        let t = periods(&[[(2, 0), (1, 1)], [(0, 1), (1, 0)]]);
        let c = k.from_ints(-1, 4);
        assert_eq!(
            ratio(&p.scale(&c).unwrap(), &t.scale(&c).unwrap()).unwrap(),
            ratio(&p, &t).unwrap()
        );
    }

    #[test]
    fn singular_periods_rejected() {
        let k = gaussian();
        let m = Matrix::from_rows(vec![vec![k.one(), k.one()], vec![k.one(), k.one()]], &k.zero()).unwrap();
        assert!(matches!(PeriodStructure::new(k, m), Err(Error::SingularMatrix)));
    }
}
