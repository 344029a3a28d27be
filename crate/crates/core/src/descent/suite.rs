//! Curated modules of each indicator kind, built from finite matrix groups
//! by base change, twisting by a non-real character, and quaternionic shapes.

use super::field::{rat_frac, QuadElem, QuadraticField};
use super::matrix::Matrix;
use super::module::{ExplicitModule, RationalModule};
use crate::error::Result;
use crate::fs::FsIndicator;

#[derive(Clone, Debug)]
pub struct CuratedModule {
    pub name: String,
    pub kind: FsIndicator,
    /// Generated by a finite group, so that `X*` is the Galois conjugate of `X`.
    pub unitary_shape: bool,
    pub module: ExplicitModule,
}

fn int_module(gens: &[&[&[i64]]]) -> RationalModule {
    let owned: Vec<Vec<Vec<i64>>> = gens
        .iter()
        .map(|g| g.iter().map(|r| r.to_vec()).collect())
        .collect();
    RationalModule::from_int_rows(&owned).expect("valid integer generators")
}

fn symmetric_group_standard(n: usize) -> RationalModule {
    // basis e_j - e_{j+1}; generators are the adjacent transpositions
    let m = n - 1;
    let gens: Vec<Vec<Vec<i64>>> = (0..m)
        .map(|k| {
            let swap = |x: usize| match x {
                x if x == k => k + 1,
                x if x == k + 1 => k,
                x => x,
            };
            let mut g = vec![vec![0i64; m]; m];
            for j in 0..m {
                let mut v = vec![0i64; n];
                v[swap(j)] += 1;
                v[swap(j + 1)] -= 1;
                // coordinates are the prefix sums of v
                let mut acc = 0;
                for (i, row) in g.iter_mut().enumerate() {
                    acc += v[i];
                    row[j] = acc;
                }
            }
            g
        })
        .collect();
    RationalModule::from_int_rows(&gens).expect("valid")
}

fn lift(m: &RationalModule, k: QuadraticField) -> Vec<Matrix<QuadElem>> {
    ExplicitModule::base_change(m, k).generators().to_vec()
}

/// A fixed invertible matrix with irrational entries, used to hide the
/// rational structure.
fn scrambler(n: usize, k: QuadraticField) -> Matrix<QuadElem> {
    let zero = k.zero();
    let mut lower = Matrix::identity(n, &zero);
    let mut upper = Matrix::identity(n, &zero);
    for i in 0..n {
        for j in 0..i {
            lower.set(i, j, k.from_ints((i as i64) - (j as i64), 1));
        }
        for j in i + 1..n {
            upper.set(i, j, k.from_ints(1 + j as i64, (i as i64) % 2));
        }
    }
    &lower * &upper
}

fn finish(
    name: &str,
    kind: FsIndicator,
    unitary_shape: bool,
    k: QuadraticField,
    gens: Vec<Matrix<QuadElem>>,
) -> Result<CuratedModule> {
    let n = gens[0].rows();
    let module = ExplicitModule::new(k, n, gens, Vec::new())?.conjugate_by(&scrambler(n, k))?;
    Ok(CuratedModule {
        name: name.to_string(),
        kind,
        unitary_shape,
        module,
    })
}

fn field(d: i64) -> QuadraticField {
    QuadraticField::new(d).expect("squarefree")
}

fn scalar_twist(gens: &mut Vec<Matrix<QuadElem>>, c: QuadElem) {
    let n = gens[0].rows();
    gens.push(Matrix::scalar(n, c));
}

/// The quaternion group in `GL_2(Q(sqrt d))` through `x^2 + y^2 = -1`.
fn quaternion_group(k: QuadraticField, x: QuadElem, y: QuadElem) -> Vec<Matrix<QuadElem>> {
    let z = k.zero();
    let i = Matrix::from_rows(vec![vec![z.clone(), -k.one()], vec![k.one(), z.clone()]], &z).unwrap();
    let j = Matrix::from_rows(vec![vec![x.clone(), y.clone()], vec![y, -x]], &z).unwrap();
    vec![i, j]
}

fn s3() -> RationalModule {
    int_module(&[&[&[0, -1], &[1, -1]], &[&[0, 1], &[1, 0]]])
}

fn d4() -> RationalModule {
    int_module(&[&[&[0, -1], &[1, 0]], &[&[1, 0], &[0, -1]]])
}

fn d6() -> RationalModule {
    int_module(&[&[&[1, -1], &[1, 0]], &[&[0, 1], &[1, 0]]])
}

fn cube_rotations() -> RationalModule {
    int_module(&[
        &[&[0, 0, 1], &[1, 0, 0], &[0, 1, 0]],
        &[&[0, -1, 0], &[1, 0, 0], &[0, 0, 1]],
    ])
}

fn hyperoctahedral() -> RationalModule {
    int_module(&[
        &[&[0, 0, 1], &[1, 0, 0], &[0, 1, 0]],
        &[&[0, 1, 0], &[1, 0, 0], &[0, 0, 1]],
        &[&[-1, 0, 0], &[0, 1, 0], &[0, 0, 1]],
    ])
}

pub fn real_modules() -> Result<Vec<CuratedModule>> {
    use FsIndicator::Real;
    let cases: Vec<(&str, RationalModule, i64)> = vec![
        ("S3 standard over Q(i)", s3(), -1),
        ("S3 standard over Q(sqrt -3)", s3(), -3),
        ("S3 standard over Q(sqrt 2)", s3(), 2),
        ("D4 over Q(sqrt 5)", d4(), 5),
        ("cube rotations over Q(i)", cube_rotations(), -1),
        ("S4 standard over Q(sqrt -2)", symmetric_group_standard(4), -2),
        ("hyperoctahedral B3 over Q(sqrt 3)", hyperoctahedral(), 3),
        ("S5 standard over Q(i)", symmetric_group_standard(5), -1),
        ("D6 over Q(sqrt 7)", d6(), 7),
        ("S4 standard over Q(sqrt -7)", symmetric_group_standard(4), -7),
    ];
    cases
        .into_iter()
        .map(|(name, m, d)| finish(name, Real, true, field(d), lift(&m, field(d))))
        .collect()
}

pub fn complex_modules() -> Result<Vec<CuratedModule>> {
    use FsIndicator::Complex;
    let gauss = field(-1);
    let eis = field(-3);
    let zeta3 = eis.element(rat_frac(-1, 2), rat_frac(1, 2));
    let zeta6 = eis.element(rat_frac(1, 2), rat_frac(1, 2));
    let mut out = Vec::new();
    out.push(finish("C4 character over Q(i)", Complex, true, gauss, vec![Matrix::scalar(1, gauss.sqrt_d())])?);
    out.push(finish("C3 character over Q(sqrt -3)", Complex, true, eis, vec![Matrix::scalar(1, zeta3.clone())])?);
    out.push(finish("C6 character over Q(sqrt -3)", Complex, true, eis, vec![Matrix::scalar(1, zeta6)])?);
    let twisted = |name: &str, m: RationalModule, k: QuadraticField, c: QuadElem| {
        let mut gens = lift(&m, k);
        scalar_twist(&mut gens, c);
        finish(name, Complex, true, k, gens)
    };
    out.push(twisted("S3 standard twisted by i", s3(), gauss, gauss.sqrt_d())?);
    out.push(twisted("D4 twisted by a cube root of unity", d4(), eis, zeta3.clone())?);
    out.push(twisted("cube rotations twisted by i", cube_rotations(), gauss, gauss.sqrt_d())?);
    out.push(twisted("S5 standard twisted by a cube root of unity", symmetric_group_standard(5), eis, zeta3)?);
    out.push(finish(
        "infinite-order Gaussian character",
        Complex,
        false,
        gauss,
        vec![Matrix::scalar(1, gauss.from_ints(2, 1))],
    )?);
    let r2 = field(2);
    out.push(finish(
        "fundamental unit of Q(sqrt 2)",
        Complex,
        false,
        r2,
        vec![Matrix::scalar(1, r2.from_ints(1, 1))],
    )?);
    let mut q8 = quaternion_group(gauss, gauss.sqrt_d(), gauss.zero());
    scalar_twist(&mut q8, gauss.sqrt_d());
    out.push(finish("quaternion group twisted by i", Complex, true, gauss, q8)?);
    Ok(out)
}

pub fn quaternionic_modules() -> Result<Vec<CuratedModule>> {
    use FsIndicator::Quaternionic;
    let mut out = Vec::new();
    let gauss = field(-1);
    out.push(finish(
        "quaternion group over Q(i)",
        Quaternionic,
        true,
        gauss,
        quaternion_group(gauss, gauss.sqrt_d(), gauss.zero()),
    )?);
    // x = c, y = r sqrt(d) with c^2 + r^2 d = -1
    for (c, r, d) in [(1, 1, -2), (2, 1, -5), (3, 1, -10), (4, 1, -17), (5, 1, -26), (6, 1, -37), (8, 1, -65), (7, 5, -2)] {
        let k = field(d);
        let name = format!("quaternion group over Q(sqrt {d}) via {c}^2 + ({r} sqrt {d})^2 = -1");
        out.push(finish(&name, Quaternionic, true, k, quaternion_group(k, k.from_ints(c, 0), k.from_ints(0, r)))?);
    }
    let eis = field(-3);
    let zeta6 = eis.element(rat_frac(1, 2), rat_frac(1, 2));
    let z = eis.zero();
    let a = Matrix::from_rows(vec![vec![zeta6.clone(), z.clone()], vec![z.clone(), zeta6.conj()]], &z)?;
    let b = Matrix::from_rows(vec![vec![z.clone(), -eis.one()], vec![eis.one(), z.clone()]], &z)?;
    out.push(finish("binary dihedral group of order 12", Quaternionic, true, eis, vec![a, b])?);
    Ok(out)
}

/// Modules of real kind that are not base changes: `(d, b)` quaternion
/// shapes with a split algebra.
pub fn split_twist_modules() -> Result<Vec<CuratedModule>> {
    let mut out = Vec::new();
    for (d, b) in [(-1i64, 2i64), (-1, 5), (2, 7), (-3, 7)] {
        let k = field(d);
        let z = k.zero();
        let s = Matrix::from_rows(vec![vec![k.sqrt_d(), z.clone()], vec![z.clone(), -k.sqrt_d()]], &z)?;
        let j = Matrix::from_rows(vec![vec![z.clone(), k.from_ints(b, 0)], vec![k.one(), z.clone()]], &z)?;
        out.push(finish(
            &format!("split ({d}, {b}) shape"),
            FsIndicator::Real,
            false,
            k,
            vec![s, j],
        )?);
    }
    Ok(out)
}

pub fn curated_modules() -> Result<Vec<CuratedModule>> {
    let mut all = real_modules()?;
    all.extend(complex_modules()?);
    all.extend(quaternionic_modules()?);
    Ok(all)
}
