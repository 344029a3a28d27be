use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Dynkin series of a simple factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Series {
    pub fn letter(self) -> char {
        match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        }
    }

    fn from_letter(c: char) -> Option<Series> {
        Some(match c.to_ascii_uppercase() {
            'A' => Series::A,
            'B' => Series::B,
            'C' => Series::C,
            'D' => Series::D,
            'E' => Series::E,
            'F' => Series::F,
            'G' => Series::G,
            _ => return None,
        })
    }

    /// Whether `rank` is admissible for this series.
    pub fn admits_rank(self, rank: usize) -> bool {
        match self {
            Series::A => rank >= 1,
            Series::B | Series::C => rank >= 2,
            Series::D => rank >= 3,
            Series::E => (6..=8).contains(&rank),
            Series::F => rank == 4,
            Series::G => rank == 2,
        }
    }

    /// Number of positive roots of the simple system of this series and rank.
    pub fn positive_root_count(self, n: usize) -> usize {
        match self {
            Series::A => n * (n + 1) / 2,
            Series::B | Series::C => n * n,
            Series::D => n * (n - 1),
            Series::E => match n {
                6 => 36,
                7 => 63,
                _ => 120,
            },
            Series::F => 24,
            Series::G => 6,
        }
    }
}

/// A simple factor `X_n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SimpleType {
    pub series: Series,
    pub rank: usize,
}

impl SimpleType {
    pub fn new(series: Series, rank: usize) -> Result<Self> {
        if !series.admits_rank(rank) {
            return Err(Error::InvalidCartanType(format!(
                "{}{} (rank not allowed for series)",
                series.letter(),
                rank
            )));
        }
        Ok(SimpleType { series, rank })
    }

    /// Cartan matrix in Bourbaki numbering, `c[i][j] = <alpha_i, alpha_j^vee>`.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank;
        let mut c = vec![vec![0i64; n]; n];
        for (i, row) in c.iter_mut().enumerate() {
            row[i] = 2;
        }
        let mut link = |i: usize, j: usize, cij: i64, cji: i64| {
            c[i][j] = cij;
            c[j][i] = cji;
        };
        match self.series {
            Series::A => {
                for i in 0..n - 1 {
                    link(i, i + 1, -1, -1);
                }
            }
            Series::B => {
                for i in 0..n - 2 {
                    link(i, i + 1, -1, -1);
                }
                // alpha_{n-1} long, alpha_n short
                link(n - 2, n - 1, -2, -1);
            }
            Series::C => {
                for i in 0..n - 2 {
                    link(i, i + 1, -1, -1);
                }
                link(n - 2, n - 1, -1, -2);
            }
            Series::D => {
                for i in 0..n - 2 {
                    link(i, i + 1, -1, -1);
                }
                link(n - 3, n - 1, -1, -1);
            }
            Series::E => {
                link(0, 2, -1, -1);
                link(1, 3, -1, -1);
                for i in 2..n - 1 {
                    link(i, i + 1, -1, -1);
                }
            }
            Series::F => {
                link(0, 1, -1, -1);
                link(1, 2, -2, -1);
                link(2, 3, -1, -1);
            }
            Series::G => {
                // alpha_1 short, alpha_2 long
                link(0, 1, -1, -3);
            }
        }
        c
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series.letter(), self.rank)
    }
}

/// A (possibly reducible) Cartan type: an ordered product of simple factors.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CartanType {
    factors: Vec<SimpleType>,
}

impl CartanType {
    pub fn new(factors: Vec<(Series, usize)>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidCartanType("empty product".into()));
        }
        let factors = factors
            .into_iter()
            .map(|(s, n)| SimpleType::new(s, n))
            .collect::<Result<Vec<_>>>()?;
        Ok(CartanType { factors })
    }

    pub fn simple(series: Series, rank: usize) -> Result<Self> {
        CartanType::new(vec![(series, rank)])
    }

    pub fn factors(&self) -> &[SimpleType] {
        &self.factors
    }

    pub fn is_simple(&self) -> bool {
        self.factors.len() == 1
    }

    pub fn rank(&self) -> usize {
        self.factors.iter().map(|f| f.rank).sum()
    }

    /// Offsets of each factor's simple roots within the global numbering.
    pub fn offsets(&self) -> Vec<usize> {
        self.factors
            .iter()
            .scan(0, |acc, f| {
                let o = *acc;
                *acc += f.rank;
                Some(o)
            })
            .collect()
    }

    /// Block-diagonal Cartan matrix of the product.
    pub fn cartan_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.rank();
        let mut c = vec![vec![0i64; n]; n];
        for (f, off) in self.factors.iter().zip(self.offsets()) {
            let block = f.cartan_matrix();
            for (i, row) in block.iter().enumerate() {
                for (j, v) in row.iter().enumerate() {
                    c[off + i][off + j] = *v;
                }
            }
        }
        c
    }

    pub fn positive_root_count(&self) -> usize {
        self.factors
            .iter()
            .map(|f| f.series.positive_root_count(f.rank))
            .sum()
    }

    /// Every simple type of total rank at most `max_rank`, in the order
    /// A, B, C, D, E, F, G and increasing rank. D starts at rank 3.
    pub fn simple_types_up_to(max_rank: usize) -> Vec<SimpleType> {
        let mut out = Vec::new();
        for series in [
            Series::A,
            Series::B,
            Series::C,
            Series::D,
            Series::E,
            Series::F,
            Series::G,
        ] {
            for rank in 1..=max_rank {
                if series.admits_rank(rank) {
                    out.push(SimpleType { series, rank });
                }
            }
        }
        out
    }
}

impl From<SimpleType> for CartanType {
    fn from(t: SimpleType) -> Self {
        CartanType { factors: vec![t] }
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(|t| t.to_string()).collect();
        write!(f, "{}", parts.join("x"))
    }
}

impl FromStr for CartanType {
    type Err = Error;

    /// Parses `A2`, `B3xA1`, `A2*A1` or `A2×A1`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let mut factors = Vec::new();
        for part in s.split(['x', 'X', '*', '×']) {
            let part = part.trim();
            let mut chars = part.chars();
            let series = chars
                .next()
                .and_then(Series::from_letter)
                .ok_or_else(|| Error::InvalidCartanType(s.to_string()))?;
            let rank: usize = chars
                .as_str()
                .parse()
                .map_err(|_| Error::InvalidCartanType(s.to_string()))?;
            factors.push((series, rank));
        }
        CartanType::new(factors)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_bounds() {
        assert!(CartanType::simple(Series::A, 1).is_ok());
        assert!(CartanType::simple(Series::B, 1).is_err());
        assert!(CartanType::simple(Series::C, 1).is_err());
        assert!(CartanType::simple(Series::D, 2).is_err());
        assert!(CartanType::simple(Series::E, 5).is_err());
        assert!(CartanType::simple(Series::E, 9).is_err());
        assert!(CartanType::simple(Series::F, 3).is_err());
        assert!(CartanType::simple(Series::G, 3).is_err());
    }

    #[test]
    fn parse_and_display() {
        let t: CartanType = "A2xA1".parse().unwrap();
        assert_eq!(t.rank(), 3);
        assert_eq!(t.to_string(), "A2xA1");
        assert!("Q3".parse::<CartanType>().is_err());
        assert!("B1".parse::<CartanType>().is_err());
        assert_eq!("E8".parse::<CartanType>().unwrap().rank(), 8);
    }

    #[test]
    fn cartan_matrix_is_symmetrizable_with_standard_bonds() {
        let g2 = SimpleType::new(Series::G, 2).unwrap().cartan_matrix();
        assert_eq!(g2, vec![vec![2, -1], vec![-3, 2]]);
        let b2 = SimpleType::new(Series::B, 2).unwrap().cartan_matrix();
        assert_eq!(b2, vec![vec![2, -2], vec![-1, 2]]);
        let d4 = SimpleType::new(Series::D, 4).unwrap().cartan_matrix();
        assert_eq!(d4[1], vec![-1, 2, -1, -1]);
    }
}
