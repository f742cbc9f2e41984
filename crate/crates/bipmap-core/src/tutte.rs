//! Order-by-order solution of the Tutte equation
//! F_g = [g=0] + xtΩF_g + xtΓF_{g-1} + xt Σ_{g1+g2=g} F_{g1}F_{g2},
//! plus the series operators Δ, Ω, Γ, Ξ, Π and coefficientwise unrooting.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::rational::{binom, qb, qi, Q};
use num_bigint::BigInt;
use crate::series::{Chart, Key, Series};

/// Which power sums are kept. With `Only(s)`, a monomial of F_g survives when
/// it has at most `top - g` parts outside `s`; the kept set is closed under
/// every operation of the equation, so the surviving coefficients are exact.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Support {
    All,
    Only { parts: Vec<u32>, top: u32 },
}

impl Support {
    pub fn only(parts: &[u32], top: u32) -> Self {
        Support::Only { parts: parts.to_vec(), top }
    }

    fn keeps(&self, g: u32, mu: &Partition) -> bool {
        match self {
            Support::All => true,
            Support::Only { parts, top } => {
                let bad = mu.parts().iter().filter(|p| !parts.contains(p)).count() as u32;
                g <= *top && bad <= top - g
            }
        }
    }

    /// Whether `mu` uses allowed parts only.
    pub fn pure(&self, mu: &Partition) -> bool {
        match self {
            Support::All => true,
            Support::Only { parts, .. } => mu.parts().iter().all(|p| parts.contains(p)),
        }
    }
}

pub fn apply_delta(f: &Series) -> Series {
    f.map_terms(|k, q| (k.c > 0).then(|| (Key::new(k.e, k.c - 1, k.mu.clone()), q.clone())))
}

/// Ω f = Σ_{k≥1} p_k Δ^k f.
pub fn apply_omega(f: &Series) -> Series {
    let mut out = Series::zero(f.chart(), f.trunc());
    for (key, q) in f.iter() {
        for j in 1..=key.c {
            out.add_term(Key::new(key.e, key.c - j, key.mu.with(j)), q.clone());
        }
    }
    out
}

/// Γ f = Σ_k k x^k ∂f/∂p_k, the new power of x merged into the existing one.
pub fn apply_gamma_series(f: &Series) -> Series {
    let mut out = Series::zero(f.chart(), f.trunc());
    for (key, q) in f.iter() {
        for (j, m) in key.mu.distinct() {
            let c = q * qi(j as i64 * m as i64);
            out.add_term(Key::new(key.e, key.c + j, key.mu.without(j).unwrap()), c);
        }
    }
    out
}

/// Ξ: x^k ↦ p_k / k.
pub fn apply_xi(f: &Series) -> Series {
    f.map_terms(|k, q| {
        Some(if k.c == 0 {
            (k.clone(), q.clone())
        } else {
            (Key::new(k.e, 0, k.mu.with(k.c)), q / qi(k.c as i64))
        })
    })
}

/// Π: x^k ↦ p_k.
pub fn apply_pi(f: &Series) -> Series {
    f.map_terms(|k, q| Some(if k.c == 0 { (k.clone(), q.clone()) } else { (Key::new(k.e, 0, k.mu.with(k.c)), q.clone()) }))
}

/// F_0..F_G in (t; x; p) truncated at t^N.
#[derive(Clone, Debug)]
pub struct GenusFamily {
    pub trunc: u32,
    pub support: Support,
    pub f: Vec<Series>,
}

/// Rooted map counts are integers, so the recursion runs over ℤ.
type Slice = BTreeMap<(u32, Partition), BigInt>;

fn add_into(acc: &mut Slice, k: (u32, Partition), q: BigInt) {
    let e = acc.entry(k).or_insert_with(BigInt::zero);
    *e += q;
}

pub fn compute_f(max_genus: u32, trunc: u32) -> GenusFamily {
    compute_f_with(max_genus, trunc, Support::All)
}

pub fn compute_f_with(max_genus: u32, trunc: u32, support: Support) -> GenusFamily {
    let gn = max_genus as usize + 1;
    let n_ord = trunc as usize + 1;
    // slices[g][n] = terms of F_g at t^n, keyed by (x-power, partition)
    let mut slices: Vec<Vec<Slice>> = (0..gn).map(|_| (0..n_ord).map(|_| Slice::new()).collect()).collect();
    slices[0][0].insert((0, Partition::empty()), BigInt::one());
    for n in 1..n_ord {
        for g in 0..gn {
            let mut acc = Slice::new();
            // xtΩF_g
            for ((c, mu), q) in &slices[g][n - 1] {
                for j in 1..=*c {
                    add_into(&mut acc, (c - j + 1, mu.with(j)), q.clone());
                }
            }
            // xtΓF_{g-1}
            if g > 0 {
                for ((c, mu), q) in &slices[g - 1][n - 1] {
                    for (j, m) in mu.distinct() {
                        add_into(&mut acc, (c + j + 1, mu.without(j).unwrap()), q * BigInt::from(j as u64 * m as u64));
                    }
                }
            }
            // xt Σ F_{g1} F_{g2}; the pairs (g1, j) and (g2, n−1−j) give the
            // same products, so each unordered pair is visited once
            for g1 in 0..=g {
                let g2 = g - g1;
                for j in 0..n {
                    let mirror = (g2, n - 1 - j);
                    if (g1, j) > mirror {
                        continue;
                    }
                    let twice = (g1, j) != mirror;
                    let (a, b) = (&slices[g1][j], &slices[g2][n - 1 - j]);
                    if a.is_empty() || b.is_empty() {
                        continue;
                    }
                    for ((ca, ma), qa) in a {
                        for ((cb, mb), qb) in b {
                            let mu = ma.union(mb);
                            if !support.keeps(g as u32, &mu) {
                                continue;
                            }
                            let v = qa * qb;
                            add_into(&mut acc, (ca + cb + 1, mu), if twice { v << 1 } else { v });
                        }
                    }
                }
            }
            acc.retain(|(_, mu), q| !q.is_zero() && support.keeps(g as u32, mu));
            slices[g][n] = acc;
        }
    }
    let f = slices
        .into_iter()
        .map(|sl| {
            let terms = sl.into_iter().enumerate().flat_map(|(n, s)| s.into_iter().map(move |((c, mu), q)| (Key::new(n as u32, c, mu), Q::from_integer(q))));
            Series::from_terms(Chart::Txp, trunc, terms)
        })
        .collect();
    GenusFamily { trunc, support, f }
}

impl GenusFamily {
    pub fn genus(&self, g: u32) -> &Series {
        &self.f[g as usize]
    }

    /// F_g^{(2)} = ΓF_g.
    pub fn f2(&self, g: u32) -> Series {
        apply_gamma_series(self.genus(g))
    }

    /// L_g from F_g, with every admissible part choice cross-checked.
    pub fn unroot(&self, g: u32) -> Result<Series> {
        unroot_series(self.genus(g), g)
    }
}

/// [p_ν t^n] L = [x^j p_{ν∖j} t^n] F / (j m_j(ν)) for any part j of ν; all
/// part choices present in `f` must agree. Under a restricted support some
/// choices are absent, which is harmless.
pub fn unroot_series(f: &Series, g: u32) -> Result<Series> {
    if !f.graded() {
        return Err(Error::Invalid("unrooting needs a map-graded series".into()));
    }
    let mut out: BTreeMap<Key, Q> = BTreeMap::new();
    for (k, q) in f.iter() {
        if k.c == 0 {
            continue;
        }
        let nu = k.mu.with(k.c);
        let val = q / qi(k.c as i64 * nu.multiplicity(k.c) as i64);
        let key = Key::new(k.e, 0, nu);
        match out.get(&key) {
            Some(prev) if *prev != val => {
                return Err(Error::Structural(alloc::format!("unrooting gives two values at {:?}", key)));
            }
            Some(_) => {}
            None => {
                out.insert(key, val);
            }
        }
    }
    let mut s = Series::from_terms(Chart::Txp, f.trunc(), out);
    if g == 0 {
        s.add_term(Key::constant(), Q::one());
    }
    Ok(s)
}

/// Genus-0 closed forms in (z; u; p): F_0 and F_0^{(2)} = u^2 z^2 / (1-uz)^4.
pub fn closed_f0_f02(trunc: u32) -> (Series, Series) {
    let mut f0 = Series::zero(Chart::Zup, trunc);
    // (1+uz)(1 - Σ_k p_k z^k Σ_{l=1}^{k-1} u^l z^l C(2k-1, k+l))
    let mut inner = Series::one(Chart::Zup, trunc);
    for k in 2..=trunc {
        for l in 1..k {
            let c = binom(2 * k as i64 - 1, (k + l) as i64);
            inner.add_term(Key::new(k + l, l, Partition::single(k)), -qb(c));
        }
    }
    let lead = Series::from_terms(Chart::Zup, trunc, [(Key::constant(), Q::one()), (Key::new(1, 1, Partition::empty()), Q::one())]);
    f0 = f0.add(&lead.mul(&inner).unwrap()).unwrap();
    let mut f02 = Series::zero(Chart::Zup, trunc);
    for m in 2..=trunc {
        // [w^j] (1-w)^{-4} = C(j+3, 3)
        f02.add_term(Key::new(m, m, Partition::empty()), qb(binom(m as i64 + 1, 3)));
    }
    (f0, f02)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::qf;
    use alloc::vec;

    fn tx(e: u32, c: u32, mu: &[u32]) -> Series {
        Series::monomial(Chart::Txp, 10, e, c, Partition::new(mu.to_vec()), Q::one())
    }

    #[test]
    fn delta_omega_gamma() {
        assert_eq!(apply_delta(&tx(0, 2, &[])), tx(0, 1, &[]));
        let one_plus_x = tx(0, 0, &[]).add(&tx(0, 1, &[])).unwrap();
        assert_eq!(apply_delta(&one_plus_x), tx(0, 0, &[]));
        let d3 = apply_delta(&apply_delta(&apply_delta(&tx(0, 2, &[]))));
        assert!(d3.is_zero());
        let om = apply_omega(&tx(0, 2, &[]));
        assert_eq!(om, tx(0, 1, &[1]).add(&tx(0, 0, &[2])).unwrap());
        assert_eq!(apply_omega(&tx(0, 1, &[])), tx(0, 0, &[1]));
        assert!(apply_omega(&tx(0, 0, &[])).is_zero());
        assert_eq!(apply_gamma_series(&tx(0, 0, &[2])), tx(0, 2, &[]).scale(&qi(2)));
        assert_eq!(apply_gamma_series(&tx(2, 0, &[1, 1])), tx(2, 1, &[1]).scale(&qi(2)));
        let g = apply_gamma_series(&tx(0, 0, &[3, 1]));
        assert_eq!(g, tx(0, 1, &[3]).add(&tx(0, 3, &[1]).scale(&qi(3))).unwrap());
    }

    #[test]
    fn xi_pi() {
        let f = tx(2, 2, &[]).scale(&qi(2));
        assert_eq!(apply_xi(&f), tx(2, 0, &[2]));
        assert_eq!(apply_pi(&f), tx(2, 0, &[2]).scale(&qi(2)));
    }

    #[test]
    fn first_coefficients() {
        let fam = compute_f(2, 7);
        let f0 = fam.genus(0);
        assert_eq!(f0.get(0, 0, &[]).unwrap(), qi(1));
        assert_eq!(f0.get(1, 1, &[]).unwrap(), qi(1));
        assert_eq!(f0.get(2, 2, &[]).unwrap(), qi(2));
        assert_eq!(f0.get(2, 1, &[1]).unwrap(), qi(1));
        assert_eq!(fam.genus(1).get(3, 3, &[]).unwrap(), qi(1));
        for g in 1..=2u32 {
            assert!(fam.genus(g).iter().all(|(k, _)| k.e > 2 * g));
            assert!(fam.genus(g).graded());
        }
        assert!(fam.genus(0).get(8, 0, &[]).is_err());
    }

    #[test]
    fn unroot_values() {
        let fam = compute_f(1, 6);
        let l1 = fam.unroot(1).unwrap();
        assert_eq!(l1.get(3, 0, &[3]).unwrap(), qf(1, 3));
        let l0 = fam.unroot(0).unwrap();
        assert_eq!(l0.get(1, 0, &[1]).unwrap(), qi(1));
        for n in 1..=6 {
            assert!(l1.get(n, 0, &vec![1; n as usize]).unwrap().is_zero());
        }
    }

    #[test]
    fn closed_genus0_shapes() {
        let (f0, f02) = closed_f0_f02(8);
        assert_eq!(f0.get(1, 1, &[]).unwrap(), qi(1));
        assert_eq!(f0.p_zero(), Series::from_terms(Chart::Zup, 8, [(Key::constant(), qi(1)), (Key::new(1, 1, Partition::empty()), qi(1))]));
        assert_eq!(f02.get(2, 2, &[]).unwrap(), qi(1));
        assert_eq!(f02.get(3, 3, &[]).unwrap(), qi(4));
    }

    #[test]
    fn filtered_matches_full() {
        let full = compute_f(2, 9);
        let filt = compute_f_with(2, 9, Support::only(&[2], 2));
        for g in 0..=2u32 {
            let pure = |k: &Key| k.mu.parts().iter().all(|&p| p == 2);
            assert_eq!(full.genus(g).retain(pure), filt.genus(g).retain(pure));
        }
    }
}
