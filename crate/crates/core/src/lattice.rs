//! The quotient of the weight lattice by the root lattice, and isogeny forms
//! described as subgroups of it.

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::root_core::{RootSystem, Series, Weight};

/// Smith normal form `U M V = D` of a square integer matrix.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub diagonal: Vec<i64>,
    pub left: Vec<Vec<i64>>,
    pub right: Vec<Vec<i64>>,
}

pub fn smith_normal_form(m: &[Vec<i64>]) -> SmithForm {
    let rows = m.len();
    let cols = if rows == 0 { 0 } else { m[0].len() };
    let mut a: Vec<Vec<i64>> = m.to_vec();
    let mut u = identity(rows);
    let mut v = identity(cols);

    for t in 0..rows.min(cols) {
        loop {
            // pivot: smallest nonzero absolute value in the remaining block
            let mut best: Option<(usize, usize)> = None;
            for i in t..rows {
                for j in t..cols {
                    if a[i][j] != 0 && best.map_or(true, |(bi, bj)| a[i][j].abs() < a[bi][bj].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                break;
            };
            a.swap(t, pi);
            u.swap(t, pi);
            for row in a.iter_mut() {
                row.swap(t, pj);
            }
            for row in v.iter_mut() {
                row.swap(t, pj);
            }

            let mut clean = true;
            for i in t + 1..rows {
                let q = a[i][t].div_euclid(a[t][t]);
                if q != 0 {
                    row_sub(&mut a, i, t, q);
                    row_sub(&mut u, i, t, q);
                }
                clean &= a[i][t] == 0;
            }
            for j in t + 1..cols {
                let q = a[t][j].div_euclid(a[t][t]);
                if q != 0 {
                    col_sub(&mut a, j, t, q);
                    col_sub(&mut v, j, t, q);
                }
                clean &= a[t][j] == 0;
            }
            if !clean {
                continue;
            }
            // divisibility: fold any entry not divisible by the pivot into row t
            let p = a[t][t];
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| a[i][j] % p != 0));
            match bad {
                Some(i) => {
                    row_sub(&mut a, t, i, -1);
                    row_sub(&mut u, t, i, -1);
                }
                None => break,
            }
        }
        if a[t][t] < 0 {
            for x in a[t].iter_mut() {
                *x = -*x;
            }
            for x in u[t].iter_mut() {
                *x = -*x;
            }
        }
    }
    let diagonal = (0..rows.min(cols)).map(|i| a[i][i]).collect();
    SmithForm {
        diagonal,
        left: u,
        right: v,
    }
}

fn identity(n: usize) -> Vec<Vec<i64>> {
    (0..n)
        .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
        .collect()
}

// row[i] -= q * row[k]
fn row_sub(a: &mut [Vec<i64>], i: usize, k: usize, q: i64) {
    let src = a[k].clone();
    for (x, s) in a[i].iter_mut().zip(src) {
        *x -= q * s;
    }
}

// col[j] -= q * col[k]
fn col_sub(a: &mut [Vec<i64>], j: usize, k: usize, q: i64) {
    for row in a.iter_mut() {
        row[j] -= q * row[k];
    }
}

/// An element of a finite abelian group in invariant-factor coordinates.
pub type GroupElement = Vec<i64>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteAbelianGroup {
    invariant_factors: Vec<i64>,
    generators: Vec<Weight>,
}

impl FiniteAbelianGroup {
    /// Invariant factors `d1 | d2 | ...`, all greater than one.
    pub fn invariant_factors(&self) -> &[i64] {
        &self.invariant_factors
    }

    /// Weights whose classes are the standard generators.
    pub fn generators(&self) -> &[Weight] {
        &self.generators
    }

    pub fn order(&self) -> u64 {
        self.invariant_factors.iter().map(|&d| d as u64).product()
    }

    pub fn identity(&self) -> GroupElement {
        vec![0; self.invariant_factors.len()]
    }

    pub fn add(&self, x: &[i64], y: &[i64]) -> GroupElement {
        x.iter()
            .zip(y)
            .zip(&self.invariant_factors)
            .map(|((a, b), d)| (a + b).rem_euclid(*d))
            .collect()
    }

    pub fn neg(&self, x: &[i64]) -> GroupElement {
        x.iter()
            .zip(&self.invariant_factors)
            .map(|(a, d)| (-a).rem_euclid(*d))
            .collect()
    }

    pub fn multiple(&self, x: &[i64], k: i64) -> GroupElement {
        x.iter()
            .zip(&self.invariant_factors)
            .map(|(a, d)| (a * k).rem_euclid(*d))
            .collect()
    }

    pub fn element_order(&self, x: &[i64]) -> u64 {
        let id = self.identity();
        let mut k = 1;
        let mut y = x.to_vec();
        while y != id {
            y = self.add(&y, x);
            k += 1;
        }
        k
    }

    pub fn elements(&self) -> Vec<GroupElement> {
        let mut out = vec![Vec::new()];
        for &d in &self.invariant_factors {
            out = out
                .into_iter()
                .flat_map(|e| {
                    (0..d).map(move |r| {
                        let mut e = e.clone();
                        e.push(r);
                        e
                    })
                })
                .collect();
        }
        out
    }

    /// The subgroup generated by `gens`.
    pub fn span(&self, gens: &[GroupElement]) -> BTreeSet<GroupElement> {
        let mut set = BTreeSet::new();
        set.insert(self.identity());
        let mut frontier = vec![self.identity()];
        while let Some(x) = frontier.pop() {
            for g in gens {
                let y = self.add(&x, g);
                if set.insert(y.clone()) {
                    frontier.push(y);
                }
            }
        }
        set
    }

    pub fn is_subgroup(&self, set: &BTreeSet<GroupElement>) -> bool {
        set.contains(&self.identity())
            && set
                .iter()
                .all(|x| set.iter().all(|y| set.contains(&self.add(x, y))))
    }

    /// Every subgroup, in order of increasing size.
    pub fn subgroups(&self) -> Vec<BTreeSet<GroupElement>> {
        let elements = self.elements();
        let mut found: BTreeSet<BTreeSet<GroupElement>> = BTreeSet::new();
        let mut frontier = vec![self.span(&[])];
        found.insert(frontier[0].clone());
        while let Some(h) = frontier.pop() {
            for g in &elements {
                if h.contains(g) {
                    continue;
                }
                let mut gens: Vec<GroupElement> = h.iter().cloned().collect();
                gens.push(g.clone());
                let bigger = self.span(&gens);
                if found.insert(bigger.clone()) {
                    frontier.push(bigger);
                }
            }
        }
        let mut out: Vec<_> = found.into_iter().collect();
        out.sort_by_key(|h| h.len());
        out
    }
}

/// `Lambda / Lambda_0` for a root system, with the projection from weights.
#[derive(Clone, Debug)]
pub struct LatticeQuotient {
    group: FiniteAbelianGroup,
    // rows of U for the nontrivial invariant factors
    projection: Vec<Vec<i64>>,
}

impl LatticeQuotient {
    pub fn group(&self) -> &FiniteAbelianGroup {
        &self.group
    }

    pub fn class_of(&self, lambda: &Weight) -> Result<GroupElement> {
        let ints = lambda
            .to_ints()
            .ok_or_else(|| Error::NotIntegral(lambda.to_string()))?;
        Ok(self.class_of_ints(&ints))
    }

    pub(crate) fn class_of_ints(&self, lambda: &[i64]) -> GroupElement {
        self.projection
            .iter()
            .zip(self.group.invariant_factors())
            .map(|(row, d)| {
                row.iter()
                    .zip(lambda)
                    .map(|(a, b)| a * b)
                    .sum::<i64>()
                    .rem_euclid(*d)
            })
            .collect()
    }
}

/// Presentation of `Lambda / Lambda_0` from the Smith form of the transposed
/// Cartan matrix (whose columns are the simple roots in fundamental coordinates).
pub fn weight_mod_root_lattice(rs: &RootSystem) -> LatticeQuotient {
    let c = rs.cartan_matrix();
    let n = c.len();
    let ct: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| c[j][i]).collect()).collect();
    let snf = smith_normal_form(&ct);
    let mut factors = Vec::new();
    let mut projection = Vec::new();
    let mut generator_rows = Vec::new();
    for (i, &d) in snf.diagonal.iter().enumerate() {
        if d > 1 {
            factors.push(d);
            projection.push(snf.left[i].clone());
            generator_rows.push(i);
        }
    }
    let mut quotient = LatticeQuotient {
        group: FiniteAbelianGroup {
            invariant_factors: factors,
            generators: Vec::new(),
        },
        projection,
    };
    let gens = (0..generator_rows.len())
        .map(|k| {
            let mut target = quotient.group.identity();
            target[k] = 1;
            minimal_representative(rs, &quotient, &target)
        })
        .collect();
    quotient.group.generators = gens;
    quotient
}

/// Smallest dominant weight (by coordinate sum, then lexicographically) in a class:
/// zero or a minuscule fundamental weight for simple types.
pub fn minimal_representative(rs: &RootSystem, q: &LatticeQuotient, class: &[i64]) -> Weight {
    let n = rs.rank();
    let mut level: Vec<Vec<i64>> = vec![vec![0; n]];
    loop {
        let mut hits: Vec<&Vec<i64>> = level
            .iter()
            .filter(|w| q.class_of_ints(w) == class)
            .collect();
        if !hits.is_empty() {
            hits.sort();
            return Weight::from_ints(hits[hits.len() - 1]);
        }
        let mut next = BTreeSet::new();
        for w in &level {
            for i in 0..n {
                let mut v = w.clone();
                v[i] += 1;
                next.insert(v);
            }
        }
        level = next.into_iter().collect();
    }
}

/// A compact form up to isogeny: the subgroup of `Lambda / Lambda_0` cut out
/// by its character lattice.
#[derive(Clone, Debug)]
pub struct IsogenyForm {
    rs: RootSystem,
    quotient: LatticeQuotient,
    subgroup: BTreeSet<GroupElement>,
    label: String,
}

impl IsogenyForm {
    pub fn simply_connected(rs: &RootSystem) -> Self {
        let quotient = weight_mod_root_lattice(rs);
        let subgroup = quotient.group.elements().into_iter().collect();
        let mut f = IsogenyForm {
            rs: rs.clone(),
            quotient,
            subgroup,
            label: String::new(),
        };
        f.label = f.default_label();
        f
    }

    pub fn adjoint(rs: &RootSystem) -> Self {
        let quotient = weight_mod_root_lattice(rs);
        let subgroup = quotient.group.span(&[]);
        let mut f = IsogenyForm {
            rs: rs.clone(),
            quotient,
            subgroup,
            label: String::new(),
        };
        f.label = f.default_label();
        f
    }

    /// The form whose character lattice is generated by the root lattice and `weights`.
    pub fn from_generators(rs: &RootSystem, weights: &[Weight]) -> Result<Self> {
        let quotient = weight_mod_root_lattice(rs);
        let gens = weights
            .iter()
            .map(|w| {
                w.require_rank(rs.rank())?;
                quotient.class_of(w)
            })
            .collect::<Result<Vec<_>>>()?;
        let subgroup = quotient.group.span(&gens);
        let mut f = IsogenyForm {
            rs: rs.clone(),
            quotient,
            subgroup,
            label: String::new(),
        };
        f.label = f.default_label();
        Ok(f)
    }

    pub fn from_subgroup(rs: &RootSystem, subgroup: BTreeSet<GroupElement>) -> Result<Self> {
        let quotient = weight_mod_root_lattice(rs);
        if !quotient.group.is_subgroup(&subgroup) {
            return Err(Error::InvalidSubgroup(format!("{subgroup:?}")));
        }
        let mut f = IsogenyForm {
            rs: rs.clone(),
            quotient,
            subgroup,
            label: String::new(),
        };
        f.label = f.default_label();
        Ok(f)
    }

    /// Parses `sc`, `ad`, `SO(2n)`, `half-spin`, `half-spin'`, `SU(n+1)/mu_m`,
    /// `unique`, or a `;`-separated list of weights such as `0,1;1,0`.
    pub fn from_label(rs: &RootSystem, label: &str) -> Result<Self> {
        let label = label.trim();
        let n = rs.rank();
        let simple = rs.cartan_type().is_simple().then(|| rs.cartan_type().factors()[0]);
        let fw = |i: usize| Weight::fundamental(n, i);
        match label {
            "sc" | "simply-connected" => return Ok(Self::simply_connected(rs)),
            "ad" | "adjoint" => return Ok(Self::adjoint(rs)),
            "unique" => {
                if weight_mod_root_lattice(rs).group.order() == 1 {
                    return Ok(Self::adjoint(rs));
                }
                return Err(Error::InvalidDescriptor(format!(
                    "{} has more than one compact form",
                    rs.cartan_type()
                )));
            }
            _ => {}
        }
        if let Some(t) = simple {
            if t.series == Series::D {
                match label {
                    "SO(2n)" | "SO" => return Self::from_generators(rs, &[fw(0)]),
                    "half-spin" if n % 2 == 0 => return Self::from_generators(rs, &[fw(n - 1)]),
                    "half-spin'" if n % 2 == 0 => return Self::from_generators(rs, &[fw(n - 2)]),
                    _ => {}
                }
                if label == format!("SO({})", 2 * n) {
                    return Self::from_generators(rs, &[fw(0)]);
                }
            }
            if t.series == Series::A {
                if let Some(m) = label
                    .strip_prefix(&format!("SU({})/mu_", n + 1))
                    .and_then(|m| m.parse::<usize>().ok())
                {
                    if m == 0 || (n + 1) % m != 0 {
                        return Err(Error::InvalidDescriptor(label.to_string()));
                    }
                    // character lattice: classes divisible by m
                    return Self::from_generators(rs, &[fw(0).scale(crate::Q::from_integer(m as i64))]);
                }
            }
        }
        if label.chars().all(|c| c.is_ascii_digit() || ",;- ".contains(c)) && !label.is_empty() {
            let weights = label
                .split(';')
                .map(|part| {
                    let coords = part
                        .split(',')
                        .map(|c| c.trim().parse::<i64>())
                        .collect::<std::result::Result<Vec<_>, _>>()
                        .map_err(|_| Error::InvalidDescriptor(label.to_string()))?;
                    Ok(Weight::from_ints(&coords))
                })
                .collect::<Result<Vec<_>>>()?;
            return Self::from_generators(rs, &weights);
        }
        Err(Error::InvalidDescriptor(format!(
            "unknown isogeny form label {label:?} for {}",
            rs.cartan_type()
        )))
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn quotient(&self) -> &LatticeQuotient {
        &self.quotient
    }

    pub fn subgroup(&self) -> &BTreeSet<GroupElement> {
        &self.subgroup
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Order of the center of the group (the size of the character subgroup).
    pub fn center_order(&self) -> usize {
        self.subgroup.len()
    }

    /// Whether `lambda` is a character of this form.
    pub fn is_character(&self, lambda: &Weight) -> Result<bool> {
        lambda.require_rank(self.rs.rank())?;
        Ok(self.subgroup.contains(&self.quotient.class_of(lambda)?))
    }

    pub fn require_character(&self, lambda: &Weight) -> Result<()> {
        if self.is_character(lambda)? {
            Ok(())
        } else {
            Err(Error::NotACharacter {
                weight: lambda.to_string(),
                form: self.label.clone(),
            })
        }
    }

    fn default_label(&self) -> String {
        let order = self.quotient.group.order() as usize;
        let h = self.subgroup.len();
        if order == 1 {
            return "unique".into();
        }
        if h == order {
            return "sc".into();
        }
        if h == 1 {
            return "ad".into();
        }
        let n = self.rs.rank();
        if let Some(t) = self.rs.cartan_type().is_simple().then(|| self.rs.cartan_type().factors()[0]) {
            match t.series {
                Series::A => return format!("SU({})/mu_{}", n + 1, (n + 1) / h),
                Series::D => {
                    let class = |i| self.quotient.class_of(&Weight::fundamental(n, i)).unwrap();
                    let only = |i| self.subgroup == self.quotient.group.span(&[class(i)]);
                    if only(0) {
                        return "SO(2n)".into();
                    }
                    if only(n - 1) {
                        return "half-spin".into();
                    }
                    if only(n - 2) {
                        return "half-spin'".into();
                    }
                }
                _ => {}
            }
        }
        let gens: Vec<String> = self
            .subgroup
            .iter()
            .map(|c| minimal_representative(&self.rs, &self.quotient, c).to_string())
            .collect();
        format!("<{}>", gens.join(","))
    }
}

impl fmt::Display for IsogenyForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {}", self.rs.cartan_type(), self.label)
    }
}

/// All isogeny forms of a root system, from adjoint upwards.
pub fn isogeny_forms(rs: &RootSystem) -> Vec<IsogenyForm> {
    let quotient = weight_mod_root_lattice(rs);
    quotient
        .group
        .subgroups()
        .into_iter()
        .map(|h| IsogenyForm::from_subgroup(rs, h).expect("enumerated subgroups are subgroups"))
        .collect()
}
