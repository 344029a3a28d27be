//! Matrix modules over `Q` and over a quadratic field, restriction of
//! scalars, commutants and invariant bilinear forms.

use serde::Serialize;

use super::field::{rat, QuadElem, QuadraticField, Rat, Scalar};
use super::matrix::{combine, Matrix};
use crate::error::{Error, Result};

/// A module over `Q(sqrt d)` given by generator matrices.
#[derive(Clone, Debug, PartialEq)]
pub struct ExplicitModule {
    field: QuadraticField,
    dimension: usize,
    generators: Vec<Matrix<QuadElem>>,
    labels: Vec<String>,
}

/// A module over `Q` given by generator matrices.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalModule {
    dimension: usize,
    generators: Vec<Matrix<Rat>>,
}

fn validate<F: Scalar>(dimension: usize, generators: &[Matrix<F>]) -> Result<()> {
    if generators.is_empty() {
        return Err(Error::MalformedModule("no generators".into()));
    }
    for g in generators {
        if g.rows() != dimension || g.cols() != dimension {
            return Err(Error::DimensionMismatch {
                expected: dimension,
                got: g.rows().max(g.cols()),
            });
        }
        if !g.is_invertible() {
            return Err(Error::MalformedModule("generator is not invertible".into()));
        }
    }
    Ok(())
}

impl ExplicitModule {
    pub fn new(
        field: QuadraticField,
        dimension: usize,
        generators: Vec<Matrix<QuadElem>>,
        labels: Vec<String>,
    ) -> Result<Self> {
        validate(dimension, &generators)?;
        if generators.iter().flat_map(|g| g.entries()).any(|x| x.field() != field) {
            return Err(Error::MalformedModule("entries outside the base field".into()));
        }
        let labels = if labels.is_empty() {
            (1..=generators.len()).map(|i| format!("g{i}")).collect()
        } else if labels.len() == generators.len() {
            labels
        } else {
            return Err(Error::MalformedModule("one label per generator required".into()));
        };
        Ok(ExplicitModule {
            field,
            dimension,
            generators,
            labels,
        })
    }

    /// Extension of scalars of a rational module.
    pub fn base_change(m: &RationalModule, field: QuadraticField) -> Self {
        let zero = field.zero();
        let generators = m
            .generators
            .iter()
            .map(|g| g.map(&zero, |x| field.from_rational(x.clone())))
            .collect();
        ExplicitModule::new(field, m.dimension, generators, Vec::new()).expect("base change of a valid module")
    }

    pub fn field(&self) -> QuadraticField {
        self.field
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn generators(&self) -> &[Matrix<QuadElem>] {
        &self.generators
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// The isomorphic module `P^{-1} g P`.
    pub fn conjugate_by(&self, p: &Matrix<QuadElem>) -> Result<Self> {
        let inv = p.inverse().ok_or(Error::SingularMatrix)?;
        let generators = self.generators.iter().map(|g| &(&inv * g) * p).collect();
        ExplicitModule::new(self.field, self.dimension, generators, self.labels.clone())
    }

    /// The Galois conjugate module: every entry conjugated.
    pub fn galois_conjugate(&self) -> Self {
        let zero = self.field.zero();
        ExplicitModule {
            generators: self.generators.iter().map(|g| g.map(&zero, QuadElem::conj)).collect(),
            ..self.clone()
        }
    }
}

impl RationalModule {
    pub fn new(dimension: usize, generators: Vec<Matrix<Rat>>) -> Result<Self> {
        validate(dimension, &generators)?;
        Ok(RationalModule {
            dimension,
            generators,
        })
    }

    pub fn from_int_rows(generators: &[Vec<Vec<i64>>]) -> Result<Self> {
        let mats = generators
            .iter()
            .map(|g| Matrix::from_rows(g.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect(), &rat(0)))
            .collect::<Result<Vec<_>>>()?;
        let n = mats[0].rows();
        Self::new(n, mats)
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn generators(&self) -> &[Matrix<Rat>] {
        &self.generators
    }
}

/// The regular representation of `a + b sqrt d` on the basis `(1, sqrt d)`.
pub fn regular_block(x: &QuadElem) -> [[Rat; 2]; 2] {
    let (a, b) = (x.rational_part().clone(), x.irrational_part().clone());
    let bd = &b * rat(x.field().d());
    [[a.clone(), bd], [b, a]]
}

/// Each entry becomes a 2x2 block; coordinate `i` maps to `(2i, 2i+1)`.
pub fn restrict_matrix(g: &Matrix<QuadElem>) -> Matrix<Rat> {
    let mut out = Matrix::zeros(2 * g.rows(), 2 * g.cols(), &rat(0));
    for i in 0..g.rows() {
        for j in 0..g.cols() {
            let block = regular_block(g.get(i, j));
            for (r, row) in block.iter().enumerate() {
                for (c, x) in row.iter().enumerate() {
                    out.set(2 * i + r, 2 * j + c, x.clone());
                }
            }
        }
    }
    out
}

pub fn restrict_scalars(m: &ExplicitModule) -> RationalModule {
    RationalModule {
        dimension: 2 * m.dimension,
        generators: m.generators.iter().map(restrict_matrix).collect(),
    }
}

/// Basis of `{X : X g = g X for every generator}`.
pub fn commutant_of<F: Scalar>(generators: &[Matrix<F>], n: usize) -> Vec<Matrix<F>> {
    let zero = generators[0].zero_elem().clone();
    let unknowns = n * n;
    let mut system = Matrix::zeros(generators.len() * unknowns, unknowns, &zero);
    for (gi, g) in generators.iter().enumerate() {
        for i in 0..n {
            for j in 0..n {
                let row = gi * unknowns + i * n + j;
                // (X g - g X)_{ij} = sum_k X_{ik} g_{kj} - g_{ik} X_{kj}
                for k in 0..n {
                    let c = system.get(row, i * n + k).clone() + g.get(k, j).clone();
                    system.set(row, i * n + k, c);
                    let c = system.get(row, k * n + j).clone() - g.get(i, k).clone();
                    system.set(row, k * n + j, c);
                }
            }
        }
    }
    system
        .nullspace()
        .into_iter()
        .map(|v| Matrix::from_rows(v.chunks(n).map(<[F]>::to_vec).collect(), &zero).expect("square"))
        .collect()
}

#[derive(Clone, Debug)]
pub struct Commutant {
    pub basis: Vec<Matrix<Rat>>,
}

impl Commutant {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }
}

pub fn commutant(m: &RationalModule) -> Commutant {
    Commutant {
        basis: commutant_of(&m.generators, m.dimension),
    }
}

/// Dimension of the `Q(sqrt d)`-linear commutant; 1 certifies absolute irreducibility.
pub fn commutant_dimension_over_field(m: &ExplicitModule) -> usize {
    commutant_of(&m.generators, m.dimension).len()
}

/// Basis of `{B : g^T B g = B for every generator}`.
pub fn invariant_bilinear_forms<F: Scalar>(generators: &[Matrix<F>], n: usize) -> Vec<Matrix<F>> {
    let zero = generators[0].zero_elem().clone();
    let unknowns = n * n;
    let mut system = Matrix::zeros(generators.len() * unknowns, unknowns, &zero);
    for (gi, g) in generators.iter().enumerate() {
        for i in 0..n {
            for j in 0..n {
                let row = gi * unknowns + i * n + j;
                for k in 0..n {
                    for l in 0..n {
                        let mut c = g.get(k, i).clone() * g.get(l, j).clone();
                        if k == i && l == j {
                            c = c - zero.one_like();
                        }
                        system.set(row, k * n + l, c);
                    }
                }
            }
        }
    }
    system
        .nullspace()
        .into_iter()
        .map(|v| Matrix::from_rows(v.chunks(n).map(<[F]>::to_vec).collect(), &zero).expect("square"))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FormSymmetry {
    Symmetric,
    Antisymmetric,
    /// No nonzero invariant form.
    None,
    /// Several independent forms; the module is not absolutely irreducible.
    Ambiguous,
}

pub fn invariant_form_symmetry(m: &ExplicitModule) -> FormSymmetry {
    let forms = invariant_bilinear_forms(&m.generators, m.dimension);
    match forms.as_slice() {
        [] => FormSymmetry::None,
        [b] => {
            let t = b.transpose();
            if &t == b {
                FormSymmetry::Symmetric
            } else if t == b.scale(&-b.zero_elem().one_like()) {
                FormSymmetry::Antisymmetric
            } else {
                FormSymmetry::Ambiguous
            }
        }
        _ => FormSymmetry::Ambiguous,
    }
}

/// Evaluates a word in the generators (indices into the generator list).
pub fn word_matrix<F: Scalar>(generators: &[Matrix<F>], word: &[usize]) -> Matrix<F> {
    let g0 = &generators[0];
    word.iter()
        .fold(Matrix::identity(g0.rows(), g0.zero_elem()), |acc, &i| &acc * &generators[i])
}

/// Combination `sum c_k B_k` of a commutant basis.
pub fn commutant_element(c: &Commutant, coeffs: &[Rat]) -> Matrix<Rat> {
    combine(coeffs, &c.basis)
}
