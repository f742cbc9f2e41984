//! The change of variables z = t(1+γ), u = x(1+zu)^2 and its inverse
//! t = z/(1+γ), x = u/(1+zu)^2.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use num_traits::One;

use crate::error::Result;
use crate::greek::Greek;
use crate::partition::{partitions_of, Partition};
use crate::rational::{binom, factorial, qb, qi, Q};
use crate::series::{Chart, Key, Series};

#[derive(Clone, Debug)]
pub struct CoordData {
    pub trunc: u32,
    /// z as a series in (t; p)
    pub z_of_t: Series,
    /// t as a u-free series in (z; p)
    pub t_of_z: Series,
    /// u as a series in (z; x)
    pub u_of_xz: Series,
    /// u as a series in (t; x; p)
    pub u_of_tx: Series,
    /// x = u / (1+zu)^2 in (z; u)
    pub x_of_zu: Series,
    greek: BTreeMap<Greek, Series>,
}

/// z(t) by Lagrange inversion of z = t φ(z), φ(w) = 1 + Σ C(2k-1,k) p_k w^k:
/// [t^n p_μ] z = (n-1)! / ((n-ℓ(μ))! Π m_i!) Π C(2μ_j-1, μ_j) for |μ| = n-1.
fn z_lagrange(trunc: u32, keep: impl Fn(u32) -> bool) -> Series {
    let mut terms = Vec::new();
    for n in 1..=trunc {
        for mu in partitions_of(n - 1) {
            if !mu.parts().iter().all(|&k| keep(k)) {
                continue;
            }
            let l = mu.len() as u64;
            if l > n as u64 {
                continue;
            }
            let mut c = qb(factorial(n as u64 - 1)) / qb(factorial(n as u64 - l));
            for (part, m) in mu.distinct() {
                c /= qb(factorial(m as u64));
                for _ in 0..m {
                    c *= qb(binom(2 * part as i64 - 1, part as i64));
                }
            }
            terms.push((Key::new(n, 0, mu), c));
        }
    }
    Series::from_terms(Chart::Txp, trunc, terms)
}

pub fn gamma_series(trunc: u32) -> Series {
    Greek::Gamma.series(trunc)
}

impl CoordData {
    pub fn new(trunc: u32) -> Result<CoordData> {
        CoordData::restricted(trunc, |_| true)
    }

    /// The same data with p_k := 0 for every k outside `keep`. The cached
    /// Greek series stay unrestricted.
    pub fn restricted(trunc: u32, keep: impl Fn(u32) -> bool + Copy) -> Result<CoordData> {
        let z_of_t = z_lagrange(trunc, keep);
        let one_plus_gamma = Series::one(Chart::Zup, trunc).add(&gamma_series(trunc).restrict_p(keep))?;
        let t_of_z = Series::var_order(Chart::Zup, trunc).mul(&one_plus_gamma.inverse()?)?;
        // u = x φ(u), φ(w) = (1+zw)^2: [x^n] u = C(2n, n-1)/n z^{n-1}
        let u_of_xz = Series::from_terms(
            Chart::Zxp,
            trunc,
            (1..=trunc + 1).map(|n| (Key::new(n - 1, n, Partition::empty()), qb(binom(2 * n as i64, n as i64 - 1)) / qi(n as i64))),
        );
        let u_of_tx = u_of_xz.compose(&z_of_t, &Series::var_cat(Chart::Txp, trunc))?;
        // (1+zu)^{-2} = Σ (j+1)(-zu)^j
        let x_of_zu = Series::from_terms(
            Chart::Zup,
            trunc,
            (0..=trunc).map(|j| (Key::new(j, j + 1, Partition::empty()), qi(if j % 2 == 0 { 1 } else { -1 } * (j as i64 + 1)))),
        );
        Ok(CoordData { trunc, z_of_t, t_of_z, u_of_xz, u_of_tx, x_of_zu, greek: BTreeMap::new() })
    }

    pub fn greek(&mut self, g: Greek) -> &Series {
        let trunc = self.trunc;
        self.greek.entry(g).or_insert_with(|| g.series(trunc))
    }

    /// (t; x; p) → (z; u; p).
    pub fn to_zu(&self, f: &Series) -> Result<Series> {
        f.compose(&self.t_of_z, &self.x_of_zu)
    }

    /// (z; u; p) → (t; x; p).
    pub fn to_tx(&self, f: &Series) -> Result<Series> {
        f.compose(&self.z_of_t, &self.u_of_tx)
    }

    /// s = (1-uz)/(1+uz) in (z; u).
    pub fn s(&self) -> Series {
        crate::laurent::LaurentS::mono(1, Q::one()).eval_series(self.trunc)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::qi;

    #[test]
    fn first_terms() {
        let cd = CoordData::new(4).unwrap();
        let p1 = |s: &Series, e: u32, n: usize| s.get(e, 0, &alloc::vec![1; n]).unwrap();
        assert_eq!((p1(&cd.z_of_t, 1, 0), p1(&cd.z_of_t, 2, 1), p1(&cd.z_of_t, 3, 2)), (qi(1), qi(1), qi(1)));
        let u = &cd.u_of_xz;
        assert_eq!((u.get(0, 1, &[]).unwrap(), u.get(1, 2, &[]).unwrap(), u.get(2, 3, &[]).unwrap()), (qi(1), qi(2), qi(5)));
        assert_eq!(cd.z_of_t.p_zero(), Series::var_order(Chart::Txp, 4));
    }

    #[test]
    fn fixed_point_and_round_trip() {
        let n = 8;
        let cd = CoordData::new(n).unwrap();
        // z = t(1 + γ(z))
        let g_of_t = gamma_series(n).relabel(Chart::Zup).compose(&cd.z_of_t, &Series::var_cat(Chart::Txp, n)).unwrap();
        let rhs = Series::var_order(Chart::Txp, n).mul(&Series::one(Chart::Txp, n).add(&g_of_t).unwrap()).unwrap();
        assert_eq!(rhs, cd.z_of_t);
        // u = x(1+zu)^2 in (t; x)
        let zu = cd.z_of_t.mul(&cd.u_of_tx).unwrap();
        let one_zu = Series::one(Chart::Txp, n).add(&zu).unwrap();
        let rhs = Series::var_cat(Chart::Txp, n).mul(&one_zu.mul(&one_zu).unwrap()).unwrap();
        assert_eq!(rhs, cd.u_of_tx);
        let t = cd.to_tx(&Series::var_order(Chart::Zup, n)).unwrap();
        assert_eq!(t, cd.z_of_t);
        assert_eq!(cd.to_tx(&cd.t_of_z).unwrap(), Series::var_order(Chart::Txp, n));
        let x = Series::var_cat(Chart::Txp, n);
        assert_eq!(cd.to_tx(&cd.to_zu(&x).unwrap()).unwrap(), x);
    }
}
