//! Rational models of modules over a quadratic field.

use num_traits::{One, Signed};
use serde::Serialize;

use super::conic::solve_conic;
use super::hilbert::{local_global_check, QuaternionClass};
use super::field::{rat, QuadElem, Rat, Scalar};
use super::matrix::{combine, flatten_columns, Matrix};
use super::module::{
    commutant, commutant_dimension_over_field, restrict_matrix, restrict_scalars, ExplicitModule,
    RationalModule,
};
use crate::error::{Error, Result};

/// Why no rational model exists.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum NoModelCertificate {
    /// The commutant of the restriction is the division algebra `(a, b)_Q`.
    Quaternion { a: i64, b: i64 },
    /// The module is not isomorphic to its Galois conjugate; the commutant is
    /// the field `Q(sqrt d)`.
    IndicatorZero { d: i64 },
}

#[derive(Clone, Debug)]
pub struct RationalModel {
    pub module: RationalModule,
    /// `P` with `g P = P g0` for every generator `g` and its rational model `g0`.
    pub change_of_basis: Matrix<QuadElem>,
}

#[derive(Clone, Debug)]
pub enum DescentOutcome {
    Model(RationalModel),
    NoModel(NoModelCertificate),
}

fn rational_sqrt(x: &Rat) -> Option<Rat> {
    if x.is_negative() {
        return None;
    }
    let (n, d) = (x.numer().sqrt(), x.denom().sqrt());
    let r = Rat::new(n, d);
    (&r * &r == *x).then_some(r)
}

pub fn descend_if_possible(m: &ExplicitModule) -> Result<DescentOutcome> {
    let k_dim = commutant_dimension_over_field(m);
    if k_dim != 1 {
        return Err(Error::MalformedModule(format!(
            "not absolutely irreducible: commutant over {} has dimension {k_dim}",
            m.field()
        )));
    }
    let y = restrict_scalars(m);
    let algebra = commutant(&y);
    let field = m.field();
    let d = field.d();
    let n = m.dimension();
    let s = restrict_matrix(&Matrix::scalar(n, field.sqrt_d()));
    let basis = &algebra.basis;
    match basis.len() {
        // only the scalars K: X is not isomorphic to its conjugate
        2 => return Ok(DescentOutcome::NoModel(NoModelCertificate::IndicatorZero { d })),
        4 => {}
        other => {
            return Err(Error::MalformedAlgebra(format!(
                "commutant of dimension {other} for an absolutely irreducible module"
            )))
        }
    }

    // conjugate-linear intertwiners: elements anticommuting with sqrt(d).
    // With i = sqrt(d) and j = j0 the commutant is the quaternion algebra (d, j0^2).
    let anti: Vec<Matrix<Rat>> = basis.iter().map(|b| &(b * &s) + &(&s * b)).collect();
    let coeffs = flatten_columns(&anti).nullspace();
    let first = coeffs
        .first()
        .ok_or_else(|| Error::MalformedAlgebra("no conjugate-linear intertwiner".into()))?;
    let j0 = combine(first, basis);
    let beta = (&j0 * &j0)
        .scalar_value()
        .filter(|b| !b.is_zero_elem())
        .ok_or_else(|| Error::MalformedAlgebra("intertwiner square is not a nonzero scalar".into()))?;
    let class = QuaternionClass::new(&rat(d), &beta)?;
    if !local_global_check(&class).is_split_global {
        return Ok(DescentOutcome::NoModel(NoModelCertificate::Quaternion {
            a: class.a(),
            b: class.b(),
        }));
    }

    // ((u + v sqrt d) j0)^2 = (u^2 - d v^2) beta, which must equal 1
    let beta_class = class.b();
    let r = rational_sqrt(&(&beta / rat(beta_class)))
        .ok_or_else(|| Error::MalformedAlgebra("square class computation".into()))?;
    let (x, yy, z) = solve_conic(d, beta_class)?
        .ok_or_else(|| Error::MalformedAlgebra("split algebra without a conic point".into()))?;
    let y_scaled = Rat::from_integer(yy) / &r;
    let denom = &beta * &y_scaled;
    let u = Rat::from_integer(z) / &denom;
    let v = Rat::from_integer(x) / &denom;
    let one = Matrix::identity(2 * n, &rat(0));
    let j = &(&one.scale(&u) + &s.scale(&v)) * &j0;
    if &j * &j != one || &j * &s != (&s * &j).scale(&-Rat::one()) {
        return Err(Error::MalformedAlgebra("conjugate-linear involution check failed".into()));
    }

    let fixed = (&j - &one).nullspace();
    if fixed.len() != n {
        return Err(Error::MalformedAlgebra(format!(
            "fixed space has dimension {}, expected {n}",
            fixed.len()
        )));
    }
    let b = Matrix::from_columns(&fixed, 2 * n, &rat(0));
    let mut generators = Vec::new();
    for g in y.generators() {
        let image = g * &b;
        let g0 = b
            .solve(&image)
            .filter(|g0| &b * g0 == image)
            .ok_or_else(|| Error::MalformedAlgebra("fixed space is not stable".into()))?;
        generators.push(g0);
    }

    let zero = field.zero();
    let mut p = Matrix::zeros(n, n, &zero);
    for i in 0..n {
        for col in 0..n {
            p.set(i, col, field.element(b.get(2 * i, col).clone(), b.get(2 * i + 1, col).clone()));
        }
    }
    if !p.is_invertible() {
        return Err(Error::MalformedAlgebra("model does not span".into()));
    }
    for (g, g0) in m.generators().iter().zip(&generators) {
        let lifted = g0.map(&zero, |x| field.from_rational(x.clone()));
        if g * &p != &p * &lifted {
            return Err(Error::MalformedAlgebra("model verification failed".into()));
        }
    }
    Ok(DescentOutcome::Model(RationalModel {
        module: RationalModule::new(n, generators)?,
        change_of_basis: p,
    }))
}
