//! Hilbert symbols over `Q` and the local-global description of quaternion algebras.

use std::collections::{BTreeSet, HashMap};
use std::fmt;
use std::sync::Mutex;

use serde::{Serialize, Serializer};

use super::arith::{prime_factors, square_class, squarefree_part};
use super::field::Rat;
use crate::error::{Error, Result};
use num_traits::Zero;

/// A place of `Q`: a prime, or the real place.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Place {
    Prime(u64),
    Infinity,
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Prime(p) => write!(f, "{p}"),
            Place::Infinity => write!(f, "inf"),
        }
    }
}

impl Serialize for Place {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Place::Prime(p) => s.serialize_u64(*p),
            Place::Infinity => s.serialize_str("inf"),
        }
    }
}

fn valuation(n: i128, p: i128) -> (u32, i128) {
    let mut v = 0;
    let mut m = n;
    while m % p == 0 {
        m /= p;
        v += 1;
    }
    (v, m)
}

fn pow_mod(base: i128, mut e: i128, m: i128) -> i128 {
    let mut result = 1i128;
    let mut b = base.rem_euclid(m);
    while e > 0 {
        if e & 1 == 1 {
            result = result * b % m;
        }
        b = b * b % m;
        e >>= 1;
    }
    result
}

fn legendre(u: i128, p: i128) -> i8 {
    match pow_mod(u, (p - 1) / 2, p) {
        1 => 1,
        0 => 0,
        _ => -1,
    }
}

/// `(a, b)_v` for nonzero integers, by the closed formulas.
pub fn hilbert_symbol(a: i64, b: i64, place: Place) -> i8 {
    assert!(a != 0 && b != 0, "Hilbert symbol of zero");
    let (a, b) = (a as i128, b as i128);
    match place {
        Place::Infinity => {
            if a < 0 && b < 0 {
                -1
            } else {
                1
            }
        }
        Place::Prime(2) => {
            let (alpha, u) = valuation(a, 2);
            let (beta, v) = valuation(b, 2);
            let eps = |x: i128| ((x - 1) / 2).rem_euclid(2);
            let omega = |x: i128| ((x * x - 1) / 8).rem_euclid(2);
            let e = eps(u) * eps(v) + alpha as i128 * omega(v) + beta as i128 * omega(u);
            if e % 2 == 0 {
                1
            } else {
                -1
            }
        }
        Place::Prime(p) => {
            let p = p as i128;
            let (alpha, u) = valuation(a, p);
            let (beta, v) = valuation(b, p);
            let mut s: i8 = if (alpha * beta) % 2 == 1 && ((p - 1) / 2) % 2 == 1 {
                -1
            } else {
                1
            };
            if beta % 2 == 1 {
                s *= legendre(u, p);
            }
            if alpha % 2 == 1 {
                s *= legendre(v, p);
            }
            s
        }
    }
}

/// `(a, b)_v` for nonzero rationals, through their squarefree classes.
pub fn hilbert_symbol_rational(a: &Rat, b: &Rat, place: Place) -> Result<i8> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::InvalidDiscriminant(0));
    }
    Ok(hilbert_symbol(square_class(a)?, square_class(b)?, place))
}

type OracleKey = (i64, i64, u64, u32);
static ORACLE_CACHE: Mutex<Option<HashMap<OracleKey, i8>>> = Mutex::new(None);

/// `(a, b)_p` decided by searching for a primitive solution of
/// `z^2 = a x^2 + b y^2` modulo `p^k`, after removing square factors from
/// `a` and `b`. At the real place, a sign analysis of the same equation.
pub fn hilbert_symbol_oracle(a: i64, b: i64, place: Place, k: u32) -> i8 {
    assert!(a != 0 && b != 0, "Hilbert symbol of zero");
    let strip = |x: i64| squarefree_part(x as i128).expect("nonzero").0 as i64;
    let (a, b) = (strip(a), strip(b));
    let p = match place {
        // z^2 - a x^2 - b y^2 is definite only when a and b are both negative
        Place::Infinity => return if a < 0 && b < 0 { -1 } else { 1 },
        Place::Prime(p) => p,
    };
    let modulus = (p as i64).pow(k);
    let key = (a.rem_euclid(modulus), b.rem_euclid(modulus), p, k);
    if let Some(v) = ORACLE_CACHE
        .lock()
        .unwrap()
        .get_or_insert_with(HashMap::new)
        .get(&key)
    {
        return *v;
    }
    let v = if primitive_solution_exists(key.0, key.1, p as i64, modulus) {
        1
    } else {
        -1
    };
    ORACLE_CACHE
        .lock()
        .unwrap()
        .get_or_insert_with(HashMap::new)
        .insert(key, v);
    v
}

fn primitive_solution_exists(a: i64, b: i64, p: i64, m: i64) -> bool {
    let size = m as usize;
    let mut any_root = vec![false; size];
    let mut unit_root = vec![false; size];
    for z in 0..m {
        let t = (z * z % m) as usize;
        any_root[t] = true;
        if z % p != 0 {
            unit_root[t] = true;
        }
    }
    let squares: Vec<i64> = (0..m).map(|x| x * x % m).collect();
    for x in 0..m {
        let ax = a * squares[x as usize] % m;
        for y in 0..m {
            let t = ((ax + b * squares[y as usize]) % m) as usize;
            let primitive_xy = x % p != 0 || y % p != 0;
            if (primitive_xy && any_root[t]) || unit_root[t] {
                return true;
            }
        }
    }
    false
}

/// The quaternion algebra `(a, b)_Q`, stored by squarefree classes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct QuaternionClass {
    a: i64,
    b: i64,
}

impl QuaternionClass {
    pub fn new(a: &Rat, b: &Rat) -> Result<Self> {
        if a.is_zero() || b.is_zero() {
            return Err(Error::InvalidDiscriminant(0));
        }
        Ok(QuaternionClass {
            a: square_class(a)?,
            b: square_class(b)?,
        })
    }

    pub fn from_ints(a: i64, b: i64) -> Result<Self> {
        Self::new(&Rat::from_integer(a.into()), &Rat::from_integer(b.into()))
    }

    pub fn a(&self) -> i64 {
        self.a
    }

    pub fn b(&self) -> i64 {
        self.b
    }

    /// The places where a symbol can be nontrivial: the real place and the
    /// primes dividing `2ab`.
    pub fn candidate_places(&self) -> Vec<Place> {
        let mut primes: BTreeSet<u64> = BTreeSet::from([2]);
        primes.extend(prime_factors(self.a.unsigned_abs()));
        primes.extend(prime_factors(self.b.unsigned_abs()));
        let mut out: Vec<Place> = primes.into_iter().map(Place::Prime).collect();
        out.push(Place::Infinity);
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LocalGlobal {
    pub ramified: Vec<Place>,
    pub is_split_global: bool,
    pub parity_ok: bool,
}

pub fn local_global_check(q: &QuaternionClass) -> LocalGlobal {
    let ramified: Vec<Place> = q
        .candidate_places()
        .into_iter()
        .filter(|&v| hilbert_symbol(q.a, q.b, v) == -1)
        .collect();
    LocalGlobal {
        is_split_global: ramified.is_empty(),
        parity_ok: ramified.len() % 2 == 0,
        ramified,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hamilton_quaternions() {
        assert_eq!(hilbert_symbol(-1, -1, Place::Prime(2)), -1);
        assert_eq!(hilbert_symbol(-1, -1, Place::Infinity), -1);
        assert_eq!(hilbert_symbol(-1, -1, Place::Prime(3)), 1);
        let lg = local_global_check(&QuaternionClass::from_ints(-1, -1).unwrap());
        assert_eq!(lg.ramified, vec![Place::Prime(2), Place::Infinity]);
        assert!(!lg.is_split_global);
        assert!(lg.parity_ok);
    }

    #[test]
    fn formula_matches_oracle_small() {
        assert_eq!(hilbert_symbol(2, 3, Place::Prime(3)), hilbert_symbol_oracle(2, 3, Place::Prime(3), 6));
        assert_eq!(hilbert_symbol_oracle(-1, -1, Place::Prime(2), 8), -1);
        for a in [-6, -3, -2, -1, 1, 2, 3, 5, 6, 7, 10] {
            for b in [-7, -5, -2, -1, 1, 2, 3, 6, 14] {
                assert_eq!(
                    hilbert_symbol(a, b, Place::Prime(2)),
                    hilbert_symbol_oracle(a, b, Place::Prime(2), 6),
                    "({a},{b})_2"
                );
                for p in [3, 5, 7] {
                    assert_eq!(
                        hilbert_symbol(a, b, Place::Prime(p)),
                        hilbert_symbol_oracle(a, b, Place::Prime(p), 2),
                        "({a},{b})_{p}"
                    );
                }
            }
        }
    }

    #[test]
    fn split_algebras() {
        let lg = local_global_check(&QuaternionClass::from_ints(1, 1).unwrap());
        assert!(lg.ramified.is_empty() && lg.is_split_global && lg.parity_ok);
        // (2, -1): 2 = 1 + 1 is a sum of two squares
        assert!(local_global_check(&QuaternionClass::from_ints(2, -1).unwrap()).is_split_global);
        let lg = local_global_check(&QuaternionClass::from_ints(-1, 3).unwrap());
        assert_eq!(lg.ramified, vec![Place::Prime(2), Place::Prime(3)]);
    }
}
