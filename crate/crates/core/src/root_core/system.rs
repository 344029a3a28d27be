use std::collections::HashSet;

use num_integer::Integer;
use num_traits::{One, Zero};

use super::cartan::CartanType;
use super::weight::{Weight, Q};
use super::weyl::WeylWord;
use crate::error::{Error, Result};

/// A positive root with its coordinates in the three bases we use.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Root {
    root_coords: Vec<i64>,
    weight: Weight,
    coroot_coords: Vec<i64>,
}

impl Root {
    /// Coordinates in the simple-root basis.
    pub fn root_coords(&self) -> &[i64] {
        &self.root_coords
    }

    /// The root as a weight (fundamental-weight coordinates).
    pub fn weight(&self) -> &Weight {
        &self.weight
    }

    /// The coroot in the simple-coroot basis.
    pub fn coroot_coords(&self) -> &[i64] {
        &self.coroot_coords
    }

    pub fn height(&self) -> i64 {
        self.root_coords.iter().sum()
    }

    /// Whether all simple roots occurring in this root lie in `subset`.
    pub fn supported_on(&self, subset: &[usize]) -> bool {
        self.root_coords
            .iter()
            .enumerate()
            .all(|(i, &r)| r == 0 || subset.contains(&i))
    }
}

/// What `pairing` pairs a weight against.
#[derive(Clone, Debug)]
pub enum Coweight {
    /// The simple coroot `alpha_i^vee`.
    SimpleCoroot(usize),
    /// A coweight in the simple-coroot basis.
    Coords(Vec<Q>),
}

#[derive(Clone, Debug)]
pub struct RootSystem {
    cartan_type: CartanType,
    cartan: Vec<Vec<i64>>,
    symmetrizer: Vec<i64>,
    positive_roots: Vec<Root>,
    rho: Weight,
    rho_check: Vec<Q>,
    longest_word: WeylWord,
    // (C^T)^{-1}: fundamental coordinates -> simple-root coordinates
    to_root_basis: Vec<Vec<Q>>,
    // (lambda, mu) = c(lambda)^T gram c(mu), then scaled to integers
    gram: Vec<Vec<Q>>,
    gram_int: Vec<Vec<i64>>,
    diagram_involution: Vec<usize>,
}

impl RootSystem {
    pub fn new(cartan_type: CartanType) -> Result<Self> {
        let cartan = cartan_type.cartan_matrix();
        let n = cartan.len();
        let symmetrizer = symmetrizer(&cartan)?;
        let cartan_t: Vec<Vec<Q>> = (0..n)
            .map(|i| (0..n).map(|j| Q::from_integer(cartan[j][i])).collect())
            .collect();
        let to_root_basis = invert(&cartan_t).ok_or(Error::SingularMatrix)?;

        let mut gram = vec![vec![Q::zero(); n]; n];
        for (k, row) in gram.iter_mut().enumerate() {
            for (i, g) in row.iter_mut().enumerate() {
                *g = to_root_basis[i][k] * Q::from_integer(symmetrizer[i]);
            }
        }
        let denom = gram
            .iter()
            .flatten()
            .fold(1i64, |acc, q| acc.lcm(q.denom()));
        let gram_int = gram
            .iter()
            .map(|row| {
                row.iter()
                    .map(|q| (q * Q::from_integer(denom)).to_integer())
                    .collect()
            })
            .collect();

        let positive_roots = generate_positive_roots(&cartan, &symmetrizer);
        if positive_roots.len() != cartan_type.positive_root_count() {
            return Err(Error::InvalidCartanType(format!(
                "{}: generated {} positive roots",
                cartan_type,
                positive_roots.len()
            )));
        }

        let rho = Weight::from_ints(&vec![1; n]);
        let mut two_rho_check = vec![0i64; n];
        for r in &positive_roots {
            for (acc, s) in two_rho_check.iter_mut().zip(&r.coroot_coords) {
                *acc += s;
            }
        }
        let rho_check = two_rho_check.iter().map(|&x| Q::new(x, 2)).collect();

        let mut rs = RootSystem {
            cartan_type,
            cartan,
            symmetrizer,
            positive_roots,
            rho,
            rho_check,
            longest_word: WeylWord::identity(),
            to_root_basis,
            gram,
            gram_int,
            diagram_involution: Vec::new(),
        };
        let (_, w0) = rs.make_dominant(&-&rs.rho);
        rs.longest_word = w0;
        let mut sigma = Vec::with_capacity(n);
        for i in 0..n {
            let image = -rs.act_unchecked(&rs.longest_word, &Weight::fundamental(n, i));
            let j = (0..n)
                .find(|&j| image == Weight::fundamental(n, j))
                .ok_or_else(|| Error::InvalidCartanType("-w0 is not a diagram automorphism".into()))?;
            sigma.push(j);
        }
        rs.diagram_involution = sigma;
        Ok(rs)
    }

    pub fn cartan_type(&self) -> &CartanType {
        &self.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.cartan.len()
    }

    /// `cartan_matrix()[i][j] = <alpha_i, alpha_j^vee>`; row `i` is `alpha_i` in
    /// fundamental coordinates.
    pub fn cartan_matrix(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    /// Half squared lengths of the simple roots, normalised so the shortest is 1.
    pub fn symmetrizer(&self) -> &[i64] {
        &self.symmetrizer
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    /// Half the sum of the positive coroots, in the simple-coroot basis.
    pub fn rho_check(&self) -> &[Q] {
        &self.rho_check
    }

    pub fn longest_word(&self) -> &WeylWord {
        &self.longest_word
    }

    /// The permutation `sigma` of simple indices with `-w0(omega_i) = omega_{sigma(i)}`.
    pub fn diagram_involution(&self) -> &[usize] {
        &self.diagram_involution
    }

    pub fn simple_root(&self, i: usize) -> Weight {
        Weight::from_ints(&self.cartan[i])
    }

    pub fn pairing(&self, lambda: &Weight, coweight: &Coweight) -> Result<Q> {
        lambda.require_rank(self.rank())?;
        match coweight {
            Coweight::SimpleCoroot(i) => {
                if *i >= self.rank() {
                    return Err(Error::LetterOutOfRange {
                        index: *i,
                        rank: self.rank(),
                    });
                }
                Ok(lambda.coord(*i))
            }
            Coweight::Coords(c) => {
                if c.len() != self.rank() {
                    return Err(Error::DimensionMismatch {
                        expected: self.rank(),
                        got: c.len(),
                    });
                }
                Ok(lambda.coords().iter().zip(c).map(|(a, b)| a * b).sum())
            }
        }
    }

    /// `<lambda, alpha^vee>` for a positive root.
    pub fn coroot_pairing(&self, lambda: &Weight, root: &Root) -> Q {
        lambda
            .coords()
            .iter()
            .zip(&root.coroot_coords)
            .map(|(c, &s)| c * Q::from_integer(s))
            .sum()
    }

    /// `<lambda, 2 rho^vee>`, the sum of pairings with all positive coroots.
    pub fn two_rho_check_pairing(&self, lambda: &Weight) -> Q {
        lambda
            .coords()
            .iter()
            .zip(&self.rho_check)
            .map(|(c, r)| c * r * Q::from_integer(2))
            .sum()
    }

    /// Simple-root coordinates of a weight.
    pub fn root_coords(&self, lambda: &Weight) -> Vec<Q> {
        self.to_root_basis
            .iter()
            .map(|row| row.iter().zip(lambda.coords()).map(|(m, c)| m * c).sum())
            .collect()
    }

    /// The invariant form, normalised so that short simple roots have `(a, a) = 2`.
    pub fn inner(&self, lambda: &Weight, mu: &Weight) -> Q {
        let mut acc = Q::zero();
        for (k, row) in self.gram.iter().enumerate() {
            let lk = lambda.coord(k);
            if lk.is_zero() {
                continue;
            }
            for (i, g) in row.iter().enumerate() {
                acc += lk * g * mu.coord(i);
            }
        }
        acc
    }

    /// Integer multiple of the invariant form on integral weights.
    pub(crate) fn inner_int(&self, lambda: &[i64], mu: &[i64]) -> i128 {
        let mut acc = 0i128;
        for (k, row) in self.gram_int.iter().enumerate() {
            if lambda[k] == 0 {
                continue;
            }
            let mut s = 0i128;
            for (i, g) in row.iter().enumerate() {
                s += (*g as i128) * (mu[i] as i128);
            }
            acc += lambda[k] as i128 * s;
        }
        acc
    }

    /// The simple reflection `s_i` in place.
    pub fn reflect_in_place(&self, lambda: &mut Weight, i: usize) {
        let ci = lambda.coord(i);
        if ci.is_zero() {
            return;
        }
        for (x, a) in lambda.coords_mut().iter_mut().zip(&self.cartan[i]) {
            *x -= ci * Q::from_integer(*a);
        }
    }

    pub(crate) fn reflect_int(&self, lambda: &mut [i64], i: usize) {
        let ci = lambda[i];
        if ci == 0 {
            return;
        }
        for (x, a) in lambda.iter_mut().zip(&self.cartan[i]) {
            *x -= ci * a;
        }
    }

    /// Reflection in an arbitrary positive root.
    pub fn reflect_root(&self, lambda: &Weight, root: &Root) -> Weight {
        let p = self.coroot_pairing(lambda, root);
        lambda - &root.weight.scale(p)
    }

    /// Positive roots whose support lies in `subset`.
    pub fn levi_roots(&self, subset: &[usize]) -> Vec<&Root> {
        self.positive_roots
            .iter()
            .filter(|r| r.supported_on(subset))
            .collect()
    }

    /// Order of the parabolic subgroup `W_J`, via the height product
    /// `|W_J| = prod (ht(a) + 1) / ht(a)` over positive roots of `J`.
    pub fn parabolic_order(&self, subset: &[usize]) -> u128 {
        let mut num: u128 = 1;
        let mut den: u128 = 1;
        for r in self.levi_roots(subset) {
            let h = r.height() as u128;
            num *= h + 1;
            den *= h;
            let g = num.gcd(&den);
            num /= g;
            den /= g;
        }
        debug_assert_eq!(den, 1);
        num / den
    }

    pub fn weyl_group_order(&self) -> u128 {
        let all: Vec<usize> = (0..self.rank()).collect();
        self.parabolic_order(&all)
    }

    /// Simple indices orthogonal to a weight.
    pub fn stabilizer_subset(&self, lambda: &Weight) -> Vec<usize> {
        (0..self.rank())
            .filter(|&i| lambda.coord(i).is_zero())
            .collect()
    }
}

fn symmetrizer(cartan: &[Vec<i64>]) -> Result<Vec<i64>> {
    let n = cartan.len();
    let mut d: Vec<Option<Q>> = vec![None; n];
    for start in 0..n {
        if d[start].is_some() {
            continue;
        }
        d[start] = Some(Q::one());
        let mut stack = vec![start];
        let mut component = vec![start];
        while let Some(i) = stack.pop() {
            for j in 0..n {
                if i == j || cartan[i][j] == 0 {
                    continue;
                }
                let di = d[i].unwrap();
                let dj = Q::from_integer(cartan[j][i]) * di / Q::from_integer(cartan[i][j]);
                match d[j] {
                    None => {
                        d[j] = Some(dj);
                        stack.push(j);
                        component.push(j);
                    }
                    Some(x) if x != dj => {
                        return Err(Error::InvalidCartanType("not symmetrizable".into()))
                    }
                    _ => {}
                }
            }
        }
        let den = component
            .iter()
            .fold(1i64, |acc, &i| acc.lcm(d[i].unwrap().denom()));
        for &i in &component {
            d[i] = Some(d[i].unwrap() * Q::from_integer(den));
        }
    }
    Ok(d.into_iter().map(|x| x.unwrap().to_integer()).collect())
}

fn generate_positive_roots(cartan: &[Vec<i64>], d: &[i64]) -> Vec<Root> {
    let n = cartan.len();
    let mut all: Vec<Vec<i64>> = Vec::new();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut layer: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            let mut r = vec![0; n];
            r[i] = 1;
            r
        })
        .collect();
    for r in &layer {
        seen.insert(r.clone());
    }
    while !layer.is_empty() {
        let mut next = Vec::new();
        for beta in &layer {
            for i in 0..n {
                // alpha_i-string through beta: p = max k with beta - k alpha_i a root
                let mut p = 0;
                loop {
                    let mut down = beta.clone();
                    down[i] -= p + 1;
                    if down[i] >= 0 && seen.contains(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = (0..n).map(|j| beta[j] * cartan[j][i]).sum();
                if p - pairing > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if seen.insert(up.clone()) {
                        next.push(up);
                    }
                }
            }
        }
        all.append(&mut layer);
        layer = next;
    }
    all.into_iter()
        .map(|r| {
            let weight: Vec<i64> = (0..n)
                .map(|j| (0..n).map(|i| r[i] * cartan[i][j]).sum())
                .collect();
            let norm2: i64 = (0..n)
                .map(|i| (0..n).map(|j| r[i] * r[j] * cartan[i][j] * d[j]).sum::<i64>())
                .sum();
            let d_alpha = norm2 / 2;
            let coroot = (0..n).map(|i| r[i] * d[i] / d_alpha).collect();
            Root {
                root_coords: r,
                weight: Weight::from_ints(&weight),
                coroot_coords: coroot,
            }
        })
        .collect()
}

/// Gauss-Jordan inverse of a small rational matrix.
pub(crate) fn invert(m: &[Vec<Q>]) -> Option<Vec<Vec<Q>>> {
    let n = m.len();
    let mut a: Vec<Vec<Q>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| if i == j { Q::one() } else { Q::zero() }));
            r
        })
        .collect();
    for col in 0..n {
        let piv = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, piv);
        let inv = a[col][col].recip();
        for x in a[col].iter_mut() {
            *x *= inv;
        }
        for r in 0..n {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col];
                let pivot_row = a[col].clone();
                for (x, p) in a[r].iter_mut().zip(pivot_row) {
                    *x -= f * p;
                }
            }
        }
    }
    Some(a.into_iter().map(|row| row[n..].to_vec()).collect())
}
