//! Laurent polynomials in s = (1-uz)/(1+uz) with rational coefficients.

use alloc::collections::BTreeMap;
use core::fmt;
use num_traits::{One, Zero};

use crate::partition::Partition;
use crate::rational::{binom, qb, qi, Q};
use crate::series::{Chart, Key, Series};

/// Coefficients that can be added and scaled by rationals.
pub trait Coeff: Clone + PartialEq + fmt::Debug {
    fn nil() -> Self;
    fn is_nil(&self) -> bool;
    fn add_assign(&mut self, other: &Self);
    fn scaled(&self, q: &Q) -> Self;
}

impl Coeff for Q {
    fn nil() -> Self {
        Q::zero()
    }
    fn is_nil(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add_assign(&mut self, other: &Self) {
        *self += other;
    }
    fn scaled(&self, q: &Q) -> Self {
        self * q
    }
}

#[derive(Clone, PartialEq, Eq, Default)]
pub struct LaurentS(pub BTreeMap<i32, Q>);

impl fmt::Debug for LaurentS {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, q) in &self.0 {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({})s^{}", q, e)?;
        }
        Ok(())
    }
}

impl LaurentS {
    pub fn zero() -> Self {
        LaurentS(BTreeMap::new())
    }

    pub fn mono(e: i32, q: Q) -> Self {
        let mut m = BTreeMap::new();
        if !q.is_zero() {
            m.insert(e, q);
        }
        LaurentS(m)
    }

    pub fn from_pairs(pairs: &[(i32, Q)]) -> Self {
        let mut out = LaurentS::zero();
        for (e, q) in pairs {
            out.add_term(*e, q.clone());
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add_term(&mut self, e: i32, q: Q) {
        let c = self.0.entry(e).or_insert_with(Q::zero);
        *c += q;
        if c.is_zero() {
            self.0.remove(&e);
        }
    }

    pub fn coeff(&self, e: i32) -> Q {
        self.0.get(&e).cloned().unwrap_or_else(Q::zero)
    }

    pub fn add(&self, o: &LaurentS) -> LaurentS {
        let mut out = self.clone();
        for (e, q) in &o.0 {
            out.add_term(*e, q.clone());
        }
        out
    }

    pub fn sub(&self, o: &LaurentS) -> LaurentS {
        self.add(&o.scale(&-Q::one()))
    }

    pub fn scale(&self, c: &Q) -> LaurentS {
        if c.is_zero() {
            return LaurentS::zero();
        }
        LaurentS(self.0.iter().map(|(e, q)| (*e, q * c)).collect())
    }

    pub fn mul(&self, o: &LaurentS) -> LaurentS {
        let mut out = LaurentS::zero();
        for (e1, q1) in &self.0 {
            for (e2, q2) in &o.0 {
                out.add_term(e1 + e2, q1 * q2);
            }
        }
        out
    }

    pub fn pow(&self, n: u32) -> LaurentS {
        (0..n).fold(LaurentS::mono(0, Q::one()), |acc, _| acc.mul(self))
    }

    pub fn d_ds(&self) -> LaurentS {
        let mut out = LaurentS::zero();
        for (e, q) in &self.0 {
            out.add_term(e - 1, q * qi(*e as i64));
        }
        out
    }

    /// (s - 1/s) d/ds, which is 2x d/dx under s^2 = 1 - 4xz.
    pub fn s_op(&self) -> LaurentS {
        LaurentS::from_pairs(&[(1, qi(1)), (-1, qi(-1))]).mul(&self.d_ds())
    }

    /// s ↦ -s.
    pub fn reflect(&self) -> LaurentS {
        LaurentS(self.0.iter().map(|(e, q)| (*e, if e % 2 == 0 { q.clone() } else { -q })).collect())
    }

    pub fn is_odd(&self) -> bool {
        self.0.keys().all(|e| e % 2 != 0)
    }

    pub fn at_one(&self) -> Q {
        self.0.values().fold(Q::zero(), |a, q| a + q)
    }

    pub fn min_exp(&self) -> Option<i32> {
        self.0.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i32> {
        self.0.keys().next_back().copied()
    }

    /// Expansion in (z; u) with w = uz: s^e = (1-w)^e (1+w)^{-e}.
    pub fn eval_series(&self, trunc: u32) -> Series {
        let mut out = Series::zero(Chart::Zup, trunc);
        for (e, q) in &self.0 {
            for (m, c) in s_power_coeffs(*e, trunc).into_iter().enumerate() {
                out.add_term(Key::new(m as u32, m as u32, Partition::empty()), q * c);
            }
        }
        out
    }
}

/// Coefficients of w^0..w^trunc in (1-w)^e (1+w)^{-e}.
pub fn s_power_coeffs(e: i32, trunc: u32) -> alloc::vec::Vec<Q> {
    // (1-w)^e (1+w)^{-e}; both factors as binomial series
    let n = trunc as usize + 1;
    let bin_series = |a: i64, sign: i64| -> alloc::vec::Vec<Q> {
        // (1 + sign*w)^a
        (0..n)
            .map(|j| {
                let c = gen_binom(a, j as i64);
                let s = if sign < 0 && j % 2 == 1 { -Q::one() } else { Q::one() };
                c * s
            })
            .collect()
    };
    let a = bin_series(e as i64, -1);
    let b = bin_series(-(e as i64), 1);
    (0..n).map(|m| (0..=m).fold(Q::zero(), |acc, j| acc + &a[j] * &b[m - j])).collect()
}

/// Generalised binomial coefficient C(a, j) for integer a.
pub fn gen_binom(a: i64, j: i64) -> Q {
    if a >= 0 {
        qb(binom(a, j))
    } else {
        // C(-m, j) = (-1)^j C(m+j-1, j)
        let c = qb(binom(-a + j - 1, j));
        if j % 2 == 0 {
            c
        } else {
            -c
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s_expansion() {
        let s = LaurentS::mono(1, qi(1)).eval_series(3);
        let w = |m: u32| s.get(m, m, &[]).unwrap();
        assert_eq!((w(0), w(1), w(2), w(3)), (qi(1), qi(-2), qi(2), qi(-2)));
        let inv = LaurentS::mono(-1, qi(1)).eval_series(6);
        assert_eq!(inv.mul(&s.truncate(6)).unwrap().truncate(3), Series::one(Chart::Zup, 3));
    }

    #[test]
    fn reflect_and_oddness() {
        let q = LaurentS::from_pairs(&[(-1, qi(1)), (1, qi(-1))]);
        assert!(q.is_odd());
        assert_eq!(q.reflect(), q.scale(&qi(-1)));
        assert_eq!(q.at_one(), qi(0));
    }
}
