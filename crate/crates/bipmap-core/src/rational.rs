//! Exact rationals and a few integer sequences used throughout.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub use num_rational::BigRational as Q;

pub fn qi(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

pub fn qf(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

pub fn qb(n: BigInt) -> Q {
    Q::from_integer(n)
}

pub fn binom(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |a, i| a * BigInt::from(i))
}

/// Falling factorial `x (x-1) ... (x-a+1)`.
pub fn falling(x: i64, a: u32) -> BigInt {
    (0..a as i64).fold(BigInt::one(), |acc, i| acc * BigInt::from(x - i))
}

pub fn qpow(q: &Q, e: i32) -> Q {
    if e >= 0 {
        num_traits::pow::pow(q.clone(), e as usize)
    } else {
        num_traits::pow::pow(q.recip(), (-e) as usize)
    }
}

/// Renders `q` as `num/den` (or `num` when the denominator is one).
pub fn fmt_q(q: &Q) -> alloc::string::String {
    use alloc::format;
    if q.denom().is_one() {
        format!("{}", q.numer())
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Parses `num/den` or `num`.
pub fn parse_q(s: &str) -> Option<Q> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Q::new(n, d))
            }
        }
        None => s.parse::<BigInt>().ok().map(Q::from_integer),
    }
}

/// Integer lcm of the denominators.
pub fn lcm_denoms<'a>(it: impl Iterator<Item = &'a Q>) -> BigInt {
    it.fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}

pub fn is_neg(q: &Q) -> bool {
    q.is_negative()
}
