//! Recognizing the commutant of a restricted module as `Q`, a quadratic
//! algebra, or a quaternion algebra.

use num_traits::{One, Zero};
use serde::Serialize;

use super::arith::{rational_is_square, square_class};
use super::field::{rat, Rat};
use super::hilbert::{local_global_check, QuaternionClass};
use super::matrix::{combine, flatten_columns, Matrix};
use crate::error::{Error, Result};
use crate::fs::FsIndicator;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum EndomorphismAlgebra {
    Rational,
    /// `Q x Q`.
    SplitQuadratic,
    QuadraticField { d: i64 },
    /// `(a, b)_Q` isomorphic to the 2x2 matrices.
    SplitMatrixAlgebra { a: i64, b: i64 },
    /// `(a, b)_Q` a division algebra.
    Quaternion { a: i64, b: i64 },
    /// Dimension outside 1, 2, 4.
    Other { dimension: usize },
}

impl EndomorphismAlgebra {
    /// The indicator read off from the commutant of a restriction of scalars.
    pub fn indicator(&self) -> Option<FsIndicator> {
        match self {
            EndomorphismAlgebra::SplitMatrixAlgebra { .. } => Some(FsIndicator::Real),
            EndomorphismAlgebra::QuadraticField { .. } => Some(FsIndicator::Complex),
            EndomorphismAlgebra::Quaternion { .. } => Some(FsIndicator::Quaternionic),
            _ => None,
        }
    }
}

fn scalar_of(m: &Matrix<Rat>, what: &str) -> Result<Rat> {
    m.scalar_value()
        .ok_or_else(|| Error::MalformedAlgebra(format!("{what} is not a scalar")))
}

/// Drops linearly dependent elements.
fn independent(mats: Vec<Matrix<Rat>>) -> Vec<Matrix<Rat>> {
    if mats.is_empty() {
        return mats;
    }
    let (_, pivots) = flatten_columns(&mats).rref();
    pivots.into_iter().map(|p| mats[p].clone()).collect()
}

/// Elements of the span commuting with the whole span.
fn center_dimension(basis: &[Matrix<Rat>]) -> usize {
    let n = basis.len();
    let size = basis[0].rows() * basis[0].cols();
    let mut system = Matrix::zeros(n * size, n, &rat(0));
    for (l, el) in basis.iter().enumerate() {
        for (k, ek) in basis.iter().enumerate() {
            let comm = &(ek * el) - &(el * ek);
            for (idx, x) in comm.entries().iter().enumerate() {
                system.set(l * size + idx, k, x.clone());
            }
        }
    }
    system.nullspace().len()
}

pub fn classify_endomorphism_algebra(basis: &[Matrix<Rat>]) -> Result<EndomorphismAlgebra> {
    let basis = independent(basis.to_vec());
    match basis.len() {
        0 => Err(Error::MalformedAlgebra("empty basis".into())),
        1 => {
            scalar_of(&basis[0], "one-dimensional commutant")?;
            Ok(EndomorphismAlgebra::Rational)
        }
        2 => classify_quadratic(&basis),
        4 => classify_quaternion(&basis),
        n => Ok(EndomorphismAlgebra::Other { dimension: n }),
    }
}

fn traceless(x: &Matrix<Rat>) -> Matrix<Rat> {
    let m = rat(x.rows() as i64);
    x - &Matrix::scalar(x.rows(), x.trace() / m)
}

fn classify_quadratic(basis: &[Matrix<Rat>]) -> Result<EndomorphismAlgebra> {
    let x = basis
        .iter()
        .find(|b| b.scalar_value().is_none())
        .ok_or_else(|| Error::MalformedAlgebra("two independent scalars".into()))?;
    let n = x.rows();
    let y = traceless(x);
    // y^2 = s y + t
    let lhs = flatten_columns(&[y.clone(), Matrix::identity(n, &rat(0))]);
    let y2 = &y * &y;
    let rhs = flatten_columns(&[y2]);
    let coeffs = lhs
        .solve(&rhs)
        .ok_or_else(|| Error::MalformedAlgebra("span is not closed under multiplication".into()))?;
    let (s, t) = (coeffs.get(0, 0).clone(), coeffs.get(1, 0).clone());
    let disc = &s * &s + rat(4) * t;
    if disc.is_zero() {
        return Err(Error::MalformedAlgebra("nilpotent element in a quadratic algebra".into()));
    }
    if rational_is_square(&disc) {
        Ok(EndomorphismAlgebra::SplitQuadratic)
    } else {
        Ok(EndomorphismAlgebra::QuadraticField {
            d: square_class(&disc)?,
        })
    }
}

/// An orthogonal basis `i, j, k` of the pure part with `i^2 = a`, `j^2 = b`,
/// together with `(a, b)`.
pub(crate) fn quaternion_basis(
    basis: &[Matrix<Rat>],
) -> Result<(Matrix<Rat>, Matrix<Rat>, Rat, Rat)> {
    if center_dimension(basis) != 1 {
        return Err(Error::MalformedAlgebra("center larger than Q".into()));
    }
    let mut pure = independent(basis.iter().map(traceless).filter(|m| !m.is_zero()).collect());
    if pure.len() != 3 {
        return Err(Error::MalformedAlgebra(format!(
            "pure part has dimension {}",
            pure.len()
        )));
    }
    let square = |x: &Matrix<Rat>| scalar_of(&(x * x), "square of a pure element");
    let form = |x: &Matrix<Rat>, y: &Matrix<Rat>| -> Result<Rat> {
        Ok(scalar_of(&(&(x * y) + &(y * x)), "anticommutator")? / rat(2))
    };

    let mut orthogonal: Vec<(Matrix<Rat>, Rat)> = Vec::new();
    while !pure.is_empty() {
        // the anisotropic element with the smallest square keeps (a, b) short
        let mut pivot = None;
        let mut best = u64::MAX;
        for (i, v) in pure.iter().enumerate() {
            let q = square(v)?;
            let height = q.numer().bits() + q.denom().bits();
            if !q.is_zero() && height < best {
                pivot = Some(i);
                best = height;
            }
        }
        if pivot.is_none() {
            'pairs: for i in 0..pure.len() {
                for j in i + 1..pure.len() {
                    let s = &pure[i] + &pure[j];
                    if !square(&s)?.is_zero() {
                        pure[i] = s;
                        pivot = Some(i);
                        break 'pairs;
                    }
                }
            }
        }
        let p = pivot.ok_or_else(|| Error::MalformedAlgebra("degenerate trace form".into()))?;
        let v = pure.remove(p);
        let q = square(&v)?;
        for w in pure.iter_mut() {
            let c = form(w, &v)? / &q;
            *w = &*w - &v.scale(&c);
        }
        orthogonal.push((v, q));
    }
    let (i, a) = orthogonal[0].clone();
    let (j, b) = orthogonal[1].clone();
    let ij = &i * &j;
    if ij != (&j * &i).scale(&-Rat::one()) {
        return Err(Error::MalformedAlgebra("orthogonal elements do not anticommute".into()));
    }
    Ok((i, j, a, b))
}

fn classify_quaternion(basis: &[Matrix<Rat>]) -> Result<EndomorphismAlgebra> {
    let (_, _, a, b) = quaternion_basis(basis)?;
    let q = QuaternionClass::new(&a, &b)?;
    if local_global_check(&q).is_split_global {
        Ok(EndomorphismAlgebra::SplitMatrixAlgebra { a: q.a(), b: q.b() })
    } else {
        Ok(EndomorphismAlgebra::Quaternion { a: q.a(), b: q.b() })
    }
}

/// Coefficients `c` with `sum c_k B_k = x`, if `x` lies in the span.
pub fn coordinates_in(basis: &[Matrix<Rat>], x: &Matrix<Rat>) -> Option<Vec<Rat>> {
    let sol = flatten_columns(basis).solve(&flatten_columns(std::slice::from_ref(x)))?;
    let coeffs = sol.column(0);
    (combine(&coeffs, basis) == *x).then_some(coeffs)
}
