//! Arithmetic modulo the Mersenne prime 2^61 − 1 and rational reconstruction.

use alloc::vec;
use alloc::vec::Vec;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::rational::Q;

pub const P: u64 = (1 << 61) - 1;

#[inline]
pub fn add(a: u64, b: u64) -> u64 {
    let s = a + b;
    if s >= P {
        s - P
    } else {
        s
    }
}

#[inline]
pub fn sub(a: u64, b: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + P - b
    }
}

#[inline]
pub fn mul(a: u64, b: u64) -> u64 {
    let p = a as u128 * b as u128;
    let lo = (p as u64) & P;
    let hi = (p >> 61) as u64;
    add(lo, hi)
}

pub fn pow(mut a: u64, mut e: u64) -> u64 {
    let mut r = 1;
    while e > 0 {
        if e & 1 == 1 {
            r = mul(r, a);
        }
        a = mul(a, a);
        e >>= 1;
    }
    r
}

pub fn inv(a: u64) -> u64 {
    debug_assert!(a != 0);
    pow(a, P - 2)
}

fn big_mod(n: &BigInt) -> u64 {
    let r = n.mod_floor(&BigInt::from(P));
    r.to_u64().unwrap()
}

/// Image of a rational whose denominator is prime to P.
pub fn from_q(q: &Q) -> u64 {
    mul(big_mod(q.numer()), inv(big_mod(q.denom())))
}

/// The unique r/s with |r|, s < √(P/2) congruent to `a`, if any.
pub fn reconstruct(a: u64) -> Option<Q> {
    let bound: i128 = 1 << 30;
    let (mut r0, mut r1) = (P as i128, a as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 >= bound {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if t1 == 0 || t1.abs() >= bound {
        return None;
    }
    let q = Q::new(BigInt::from(r1), BigInt::from(t1));
    (from_q(&q) == a).then_some(q)
}

/// Dense row echelon form mod P, pivoting on the lowest column.
#[derive(Clone, Debug)]
pub struct ModEchelon {
    ncols: usize,
    rows: Vec<(usize, Vec<u64>, u64)>,
    pivot_of: Vec<Option<usize>>,
}

pub enum Push {
    Pivot,
    Dependent,
    Inconsistent,
}

impl ModEchelon {
    pub fn new(ncols: usize) -> Self {
        ModEchelon { ncols, rows: Vec::new(), pivot_of: vec![None; ncols] }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn push(&mut self, mut row: Vec<u64>, mut rhs: u64) -> Push {
        debug_assert_eq!(row.len(), self.ncols);
        for c in 0..self.ncols {
            if row[c] == 0 {
                continue;
            }
            let Some(r) = self.pivot_of[c] else {
                let f = inv(row[c]);
                for v in row[c..].iter_mut() {
                    *v = mul(*v, f);
                }
                rhs = mul(rhs, f);
                self.pivot_of[c] = Some(self.rows.len());
                self.rows.push((c, row, rhs));
                return Push::Pivot;
            };
            let f = row[c];
            let (_, prow, prhs) = &self.rows[r];
            for j in c..self.ncols {
                if prow[j] != 0 {
                    row[j] = sub(row[j], mul(f, prow[j]));
                }
            }
            rhs = sub(rhs, mul(f, *prhs));
        }
        if rhs == 0 {
            Push::Dependent
        } else {
            Push::Inconsistent
        }
    }

    /// Back substitution with free columns set to zero.
    pub fn solve(&self) -> Vec<u64> {
        let mut x = vec![0u64; self.ncols];
        for c in (0..self.ncols).rev() {
            let Some(r) = self.pivot_of[c] else { continue };
            let (_, row, rhs) = &self.rows[r];
            let mut v = *rhs;
            for j in c + 1..self.ncols {
                if row[j] != 0 && x[j] != 0 {
                    v = sub(v, mul(row[j], x[j]));
                }
            }
            x[c] = v;
        }
        x
    }

    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ncols).filter(|c| self.pivot_of[*c].is_none()).collect()
    }
}

pub fn is_negative(q: &Q) -> bool {
    q.numer().is_negative()
}

pub fn is_zero_mod(q: &Q) -> bool {
    q.numer().is_zero() || from_q(q) == 0
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::qf;

    #[test]
    fn reconstruction() {
        for (n, d) in [(1, 2), (-41749, 3840), (7, 2880), (0, 1), (-3, 1)] {
            let q = qf(n, d);
            assert_eq!(reconstruct(from_q(&q)), Some(q));
        }
        assert_eq!(mul(P - 1, P - 1), 1);
    }

    #[test]
    fn echelon() {
        let mut e = ModEchelon::new(2);
        assert!(matches!(e.push(vec![1, 1], 3), Push::Pivot));
        assert!(matches!(e.push(vec![1, P - 1], 1), Push::Pivot));
        assert!(matches!(e.push(vec![2, 2], 6), Push::Dependent));
        assert!(matches!(e.push(vec![2, 2], 7), Push::Inconsistent));
        assert_eq!(e.solve(), vec![2, 1]);
    }
}
