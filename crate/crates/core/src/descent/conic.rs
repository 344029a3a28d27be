//! Rational points on `z^2 = a x^2 + b y^2` by Lagrange's descent.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::arith::{factorize, sqrt_mod_prime, squarefree_part};
use crate::error::{Error, Result};

pub type ConicPoint = (BigInt, BigInt, BigInt);

/// A nontrivial integer solution `(x, y, z)` of `z^2 = a x^2 + b y^2`, or
/// `None` if there is none.
pub fn solve_conic(a: i64, b: i64) -> Result<Option<ConicPoint>> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidDiscriminant(0));
    }
    let (a0, ra) = squarefree_part(a as i128)?;
    let (b0, rb) = squarefree_part(b as i128)?;
    let Some((x, y, z)) = solve_squarefree(a0, b0, 0)? else {
        return Ok(None);
    };
    let (ra, rb) = (BigInt::from(ra), BigInt::from(rb));
    let point = (x * &rb, y * &ra, z * &ra * &rb);
    let (x, y, z) = &point;
    debug_assert!(z * z == BigInt::from(a) * x * x + BigInt::from(b) * y * y);
    debug_assert!(!(x.is_zero() && y.is_zero() && z.is_zero()));
    Ok(Some(point))
}

fn solve_squarefree(a: i128, b: i128, depth: usize) -> Result<Option<ConicPoint>> {
    if depth > 200 {
        return Err(Error::Overflow("conic descent depth"));
    }
    let (zero, one) = (BigInt::zero(), BigInt::one());
    if a == 1 {
        return Ok(Some((one.clone(), zero, one)));
    }
    if b == 1 {
        return Ok(Some((zero, one.clone(), one)));
    }
    if a < 0 && b < 0 {
        return Ok(None);
    }
    if a.abs() > b.abs() {
        return Ok(solve_squarefree(b, a, depth + 1)?.map(|(x, y, z)| (y, x, z)));
    }
    if a == -b {
        return Ok(Some((one.clone(), one, zero)));
    }
    let m = b.abs();
    let Some(t) = sqrt_mod_squarefree(a, m)? else {
        return Ok(None);
    };
    let k = (t * t - a) / b;
    let (k0, s) = squarefree_part(k)?;
    let Some((x1, y1, z1)) = solve_squarefree(a, k0, depth + 1)? else {
        return Ok(None);
    };
    let t = BigInt::from(t);
    let x = &t * &x1 + &z1;
    let z = &t * &z1 + BigInt::from(a) * &x1;
    let y = BigInt::from(k0) * BigInt::from(s) * y1;
    Ok(Some((x, y, z)))
}

/// `t` with `t^2 = a (mod m)` and `0 <= t <= m / 2`, for squarefree `m`.
fn sqrt_mod_squarefree(a: i128, m: i128) -> Result<Option<i128>> {
    let modulus = u64::try_from(m).map_err(|_| Error::Overflow("conic coefficient"))?;
    // Chinese remaindering prime by prime
    let (mut t, mut n) = (0i128, 1i128);
    for (p, _) in factorize(modulus) {
        let Some(r) = sqrt_mod_prime(a, p) else {
            return Ok(None);
        };
        let p = p as i128;
        // t + n k = r (mod p)
        let inv = inverse_mod(n.rem_euclid(p), p);
        let k = mul_mod((r as i128 - t).rem_euclid(p), inv, p);
        t += n * k;
        n *= p;
    }
    Ok(Some(if t > m / 2 { m - t } else { t }))
}

fn mul_mod(a: i128, b: i128, m: i128) -> i128 {
    (BigInt::from(a) * BigInt::from(b) % BigInt::from(m))
        .try_into()
        .expect("reduced below the modulus")
}

fn inverse_mod(a: i128, p: i128) -> i128 {
    let (mut r0, mut r1) = (p, a);
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    s0.rem_euclid(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::descent::hilbert::{local_global_check, QuaternionClass};

    #[test]
    fn solvable_iff_split() {
        for a in -30i64..=30 {
            for b in -30i64..=30 {
                if a == 0 || b == 0 {
                    continue;
                }
                let split = local_global_check(&QuaternionClass::from_ints(a, b).unwrap()).is_split_global;
                let sol = solve_conic(a, b).unwrap();
                assert_eq!(sol.is_some(), split, "({a},{b})");
                if let Some((x, y, z)) = sol {
                    assert_eq!(&z * &z, BigInt::from(a) * &x * &x + BigInt::from(b) * &y * &y);
                    assert!(!(x.is_zero() && y.is_zero() && z.is_zero()));
                }
            }
        }
    }

    #[test]
    fn large_coefficients() {
        for p in [1_000_000_009i64, 998_244_353, 127_054_037_816_813, 2 * 1_000_000_007 * 5] {
            let q = QuaternionClass::from_ints(-1, p).unwrap();
            let sol = solve_conic(-1, p).unwrap();
            assert_eq!(sol.is_some(), local_global_check(&q).is_split_global, "{p}");
            if let Some((x, y, z)) = sol {
                assert_eq!(&z * &z, -&x * &x + BigInt::from(p) * &y * &y);
            }
        }
    }
}
