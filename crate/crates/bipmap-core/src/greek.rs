//! Greek variables: linear combinations Σ_k c(k) p_k z^k, their images under
//! Θ: p_k z^k ↦ x^k z^k (a Laurent polynomial in s) and under D: p_k z^k ↦ k p_k z^k.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use num_traits::One;

use crate::error::{Error, Result};
use crate::laurent::{Coeff, LaurentS};
use crate::partition::Partition;
use crate::rational::{binom, qb, qf, qi, qpow, Q};
use crate::series::{Chart, Key, Series};

/// `Eta(0)` is η and `Zeta(0)` is ζ.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Greek {
    Gamma,
    Eta(u32),
    Zeta(u32),
}

impl fmt::Debug for Greek {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Greek::Gamma => write!(f, "gamma"),
            Greek::Eta(0) => write!(f, "eta"),
            Greek::Zeta(0) => write!(f, "zeta"),
            Greek::Eta(i) => write!(f, "eta{}", i),
            Greek::Zeta(i) => write!(f, "zeta{}", i),
        }
    }
}

impl fmt::Display for Greek {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Greek {
    /// Accepts `gamma`, `eta`, `zeta`, `eta3`, `zeta_2`, and the Greek letters.
    pub fn parse(name: &str) -> Result<Greek> {
        let n = name.trim();
        let (head, tail) = n.split_at(n.find(|c: char| c.is_ascii_digit() || c == '_').unwrap_or(n.len()));
        let idx = tail.trim_start_matches('_');
        let i: u32 = if idx.is_empty() { 0 } else { idx.parse().map_err(|_| Error::UnknownGreek(String::from(n)))? };
        match head {
            "gamma" | "γ" if i == 0 => Ok(Greek::Gamma),
            "eta" | "η" => Ok(Greek::Eta(i)),
            "zeta" | "ζ" => Ok(Greek::Zeta(i)),
            _ => Err(Error::UnknownGreek(String::from(n))),
        }
    }

    /// [p_k z^k] of the variable.
    pub fn coeff(self, k: u32) -> Q {
        let k = k as i64;
        let c = qb(binom(2 * k - 1, k));
        match self {
            Greek::Gamma => c,
            Greek::Eta(i) => c * qi(k - 1) * qpow(&qi(k), i as i32),
            Greek::Zeta(0) => c * qf(k - 1, 2 * k - 1),
            Greek::Zeta(i) => {
                let i = i as i64;
                let num = (0..=i).fold(Q::one(), |a, j| a * qi(k - j));
                let den = (0..=i).fold(Q::one(), |a, j| a * qi(2 * k - 2 * j - 1));
                c * qpow(&qi(-2), (i + 1) as i32) * num / den
            }
        }
    }

    /// The variable as a u-free series in (z; u; p) through z^trunc.
    pub fn series(self, trunc: u32) -> Series {
        Series::from_terms(Chart::Zup, trunc, (1..=trunc).map(|k| (Key::new(k, 0, Partition::single(k)), self.coeff(k))))
    }

    /// Θ image, with ζ_i normalised by its defining series.
    pub fn theta(self) -> LaurentS {
        let base = LaurentS::from_pairs(&[(-3, qi(1)), (-1, qi(-3)), (0, qi(2))]);
        match self {
            Greek::Gamma => LaurentS::from_pairs(&[(-1, qf(1, 2)), (0, qf(-1, 2))]),
            Greek::Eta(i) => {
                let mut q = base;
                for _ in 0..i {
                    q = q.s_op();
                }
                q.scale(&qpow(&qi(2), -(i as i32 + 2)))
            }
            Greek::Zeta(0) => LaurentS::from_pairs(&[(1, qf(1, 4)), (-1, qf(1, 4)), (0, qf(-1, 2))]),
            Greek::Zeta(i) => {
                let s2m1 = LaurentS::from_pairs(&[(2, qi(1)), (0, qi(-1))]);
                LaurentS::from_pairs(&[(1, qf(1, 2)), (-1, qf(-1, 2))]).mul(&s2m1.pow(i))
            }
        }
    }
}

/// Formal linear combination of Greek variables.
pub type Lin<C> = BTreeMap<Greek, C>;

pub fn lin_add<C: Coeff>(acc: &mut Lin<C>, g: Greek, c: &C) {
    if c.is_nil() {
        return;
    }
    let e = acc.entry(g).or_insert_with(C::nil);
    e.add_assign(c);
    if e.is_nil() {
        acc.remove(&g);
    }
}

pub fn lin_q(pairs: &[(Greek, Q)]) -> Lin<Q> {
    let mut out = Lin::new();
    for (g, q) in pairs {
        lin_add(&mut out, *g, q);
    }
    out
}

pub fn lin_theta(l: &Lin<Q>) -> LaurentS {
    l.iter().fold(LaurentS::zero(), |acc, (g, q)| acc.add(&g.theta().scale(q)))
}

pub fn lin_series(l: &Lin<Q>, trunc: u32) -> Series {
    l.iter().fold(Series::zero(Chart::Zup, trunc), |acc, (g, q)| acc.add(&g.series(trunc).scale(q)).unwrap())
}

/// Inverts Θ on the odd Laurent polynomials vanishing at s = 1, over the
/// triangular basis Θ(η+γ), Θ(ζ−γ), Θη_i, Θζ_i. Input maps s-exponents to
/// coefficients of any rational module.
pub fn theta_inverse<C: Coeff>(q: &BTreeMap<i32, C>) -> Result<Lin<C>> {
    let mut rest: BTreeMap<i32, C> = q.iter().filter(|(_, c)| !c.is_nil()).map(|(e, c)| (*e, c.clone())).collect();
    if rest.keys().any(|e| e % 2 == 0) {
        return Err(Error::NotOdd);
    }
    let mut out: Lin<C> = Lin::new();
    let subtract = |rest: &mut BTreeMap<i32, C>, out: &mut Lin<C>, atoms: &[(Greek, Q)], image: &LaurentS, e: i32| {
        let lead = image.coeff(e);
        let c = rest[&e].scaled(&lead.recip());
        for (g, w) in atoms {
            lin_add(out, *g, &c.scaled(w));
        }
        for (f, w) in &image.0 {
            let entry = rest.entry(*f).or_insert_with(C::nil);
            entry.add_assign(&c.scaled(&-w));
            if entry.is_nil() {
                rest.remove(f);
            }
        }
    };
    while let Some((&e, _)) = rest.iter().next_back() {
        if e < 3 {
            break;
        }
        let i = ((e - 1) / 2) as u32;
        subtract(&mut rest, &mut out, &[(Greek::Zeta(i), Q::one())], &Greek::Zeta(i).theta(), e);
    }
    if rest.contains_key(&1) {
        let img = lin_theta(&lin_q(&[(Greek::Zeta(0), qi(1)), (Greek::Gamma, qi(-1))]));
        subtract(&mut rest, &mut out, &[(Greek::Zeta(0), qi(1)), (Greek::Gamma, qi(-1))], &img, 1);
    }
    while let Some((&e, _)) = rest.iter().next() {
        if e > -5 {
            break;
        }
        let i = ((-e - 3) / 2) as u32;
        subtract(&mut rest, &mut out, &[(Greek::Eta(i), Q::one())], &Greek::Eta(i).theta(), e);
    }
    if rest.contains_key(&-3) {
        let img = lin_theta(&lin_q(&[(Greek::Eta(0), qi(1)), (Greek::Gamma, qi(1))]));
        subtract(&mut rest, &mut out, &[(Greek::Eta(0), qi(1)), (Greek::Gamma, qi(1))], &img, -3);
    }
    if !rest.is_empty() {
        return Err(Error::NotOdd);
    }
    Ok(out)
}

pub fn theta_inverse_q(q: &LaurentS) -> Result<Lin<Q>> {
    theta_inverse(&q.0)
}

/// D on Greek linear combinations, through ΘD = ½(s − 1/s)∂_s Θ.
pub fn d_op(l: &Lin<Q>) -> Lin<Q> {
    let img = lin_theta(l).s_op().scale(&qf(1, 2));
    theta_inverse_q(&img).expect("D maps Greek combinations into the Θ-basis span")
}

/// Series-level D: p_k z^k ↦ k p_k z^k.
pub fn d_series(f: &Series) -> Series {
    f.map_terms(|k, q| Some((k.clone(), q * qi(k.mu.weight() as i64))))
}

/// Series-level Θ: p_k z^k ↦ x^k z^k = (uz)^k (1+uz)^{-2k}, on linear u-free input.
pub fn theta_series(f: &Series) -> Result<Series> {
    let trunc = f.trunc();
    let mut out = Series::zero(Chart::Zup, trunc);
    for (key, q) in f.iter() {
        if key.c != 0 || key.mu.len() != 1 || key.e != key.mu.weight() {
            return Err(Error::Invalid(format!("Θ needs a linear combination of p_k z^k, got {:?}", key)));
        }
        let k = key.e as i64;
        // w^k (1+w)^{-2k}
        for j in 0..=(trunc as i64 - k) {
            let c = crate::laurent::gen_binom(-2 * k, j);
            let m = (k + j) as u32;
            out.add_term(Key::new(m, m, Partition::empty()), q * c);
        }
    }
    Ok(out)
}

/// The Greek variables up to index `max_i` in a fixed order.
pub fn atoms(max_i: u32) -> Vec<Greek> {
    let mut v = alloc::vec![Greek::Gamma, Greek::Eta(0), Greek::Zeta(0)];
    for i in 1..=max_i {
        v.push(Greek::Eta(i));
        v.push(Greek::Zeta(i));
    }
    v
}
