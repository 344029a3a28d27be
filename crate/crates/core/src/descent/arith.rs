//! Integer helpers: squarefree parts and small factorizations.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};

use super::field::Rat;
use crate::error::{Error, Result};

const SMALL_PRIMES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

pub fn is_squarefree(n: i64) -> bool {
    n != 0 && squarefree_part(n as i128).map_or(false, |(s, r)| r == 1 && s == n as i128)
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn pow_mod_u64(base: u64, mut e: u64, m: u64) -> u64 {
    let mut result = 1 % m;
    let mut b = base % m;
    while e > 0 {
        if e & 1 == 1 {
            result = mul_mod(result, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    result
}

/// Miller-Rabin with the first twelve prime bases, deterministic below `2^64`.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in SMALL_PRIMES {
        if n % p == 0 {
            return n == p;
        }
    }
    let (mut d, mut s) = (n - 1, 0);
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'bases: for a in SMALL_PRIMES {
        let mut x = pow_mod_u64(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'bases;
            }
        }
        return false;
    }
    true
}

/// A nontrivial factor of an odd composite `n`, by Brent's variant of Pollard rho.
fn rho_factor(n: u64) -> u64 {
    for c in 1.. {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let (mut x, mut y, mut g) = (2u64, 2u64, 1u64);
        let mut q = 1u64;
        let mut ys = y;
        let mut r = 1u64;
        while g == 1 {
            x = y;
            for _ in 0..r {
                y = f(y);
            }
            let mut k = 0;
            while k < r && g == 1 {
                ys = y;
                for _ in 0..r.min(128).min(r - k) {
                    y = f(y);
                    q = mul_mod(q, x.abs_diff(y), n);
                }
                g = q.gcd(&n);
                k += 128;
            }
            r *= 2;
        }
        if g == n {
            // the batched product collapsed; retrace one step at a time
            loop {
                ys = f(ys);
                g = x.abs_diff(ys).gcd(&n);
                if g > 1 {
                    break;
                }
            }
        }
        if g != n {
            return g;
        }
    }
    unreachable!("rho finds a factor of every odd composite")
}

fn push_factors(n: u64, out: &mut Vec<u64>) {
    if n == 1 {
        return;
    }
    if is_prime(n) {
        out.push(n);
        return;
    }
    let d = rho_factor(n);
    push_factors(d, out);
    push_factors(n / d, out);
}

/// Prime factorization of `n > 0` as sorted `(prime, exponent)` pairs.
pub fn factorize(n: u64) -> Vec<(u64, u32)> {
    let mut m = n;
    let mut primes = Vec::new();
    for p in SMALL_PRIMES {
        while m % p == 0 {
            primes.push(p);
            m /= p;
        }
    }
    push_factors(m, &mut primes);
    primes.sort_unstable();
    let mut out: Vec<(u64, u32)> = Vec::new();
    for p in primes {
        match out.last_mut() {
            Some((q, e)) if *q == p => *e += 1,
            _ => out.push((p, 1)),
        }
    }
    out
}

/// `n = s * r^2` with `s` squarefree; returns `(s, r)`.
pub fn squarefree_part(n: i128) -> Result<(i128, i128)> {
    if n == 0 {
        return Err(Error::InvalidDiscriminant(0));
    }
    let m = u64::try_from(n.unsigned_abs()).map_err(|_| Error::Overflow("squarefree part"))?;
    let (mut s, mut r) = (1i128, 1i128);
    for (p, e) in factorize(m) {
        let p = p as i128;
        r *= p.pow(e / 2);
        if e % 2 == 1 {
            s *= p;
        }
    }
    Ok((n.signum() * s, r))
}

fn squarefree_big(n: &BigInt) -> Result<i128> {
    let n = n.to_i128().ok_or(Error::Overflow("square class"))?;
    Ok(squarefree_part(n)?.0)
}

/// The squarefree integer in the square class of a nonzero rational.
pub fn square_class(q: &Rat) -> Result<i64> {
    // numerator and denominator separately, so only their sizes matter
    let s = squarefree_big(q.numer())?;
    let t = squarefree_big(q.denom())?;
    let g = s.gcd(&t);
    ((s / g) * (t / g)).to_i64().ok_or(Error::Overflow("square class"))
}

pub fn prime_factors(n: u64) -> Vec<u64> {
    if n == 0 {
        return Vec::new();
    }
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

/// A square root of `a` modulo the odd prime `p`, or modulo 2, if one exists.
pub fn sqrt_mod_prime(a: i128, p: u64) -> Option<u64> {
    let a = a.rem_euclid(p as i128) as u64;
    if a == 0 || p == 2 {
        return Some(a);
    }
    if pow_mod_u64(a, (p - 1) / 2, p) != 1 {
        return None;
    }
    // Tonelli-Shanks
    let (mut q, mut s) = (p - 1, 0u32);
    while q % 2 == 0 {
        q /= 2;
        s += 1;
    }
    let z = (2..p).find(|&z| pow_mod_u64(z, (p - 1) / 2, p) == p - 1)?;
    let mut c = pow_mod_u64(z, q, p);
    let mut x = pow_mod_u64(a, (q + 1) / 2, p);
    let mut t = pow_mod_u64(a, q, p);
    let mut m = s;
    while t != 1 {
        let mut i = 0;
        let mut t2 = t;
        while t2 != 1 {
            t2 = mul_mod(t2, t2, p);
            i += 1;
        }
        let b = pow_mod_u64(c, 1 << (m - i - 1), p);
        x = mul_mod(x, b, p);
        c = mul_mod(b, b, p);
        t = mul_mod(t, c, p);
        m = i;
    }
    Some(x)
}

pub fn rational_is_square(q: &Rat) -> bool {
    !q.is_negative() && {
        let (n, d) = (q.numer(), q.denom());
        let (rn, rd) = (n.sqrt(), d.sqrt());
        &(&rn * &rn) == n && &(&rd * &rd) == d
    }
}
