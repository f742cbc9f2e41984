//! Exact arithmetic in ℚ[s^±, A^±, B^±, C^±, η_i, ζ_i] where
//! A = 1/(1-η), B = 1/(1+ζ), C = 1/(1+γ). Every element of the Greek field
//! used here lives in this Laurent ring, so the representation is canonical.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use num_traits::{One, Zero};

use crate::coords::CoordData;
use crate::error::{Error, Result};
use crate::greek::{Greek, Lin};
use crate::laurent::{Coeff, LaurentS};
use crate::rational::{fmt_q, qi, Q};
use crate::series::{Chart, Series};

/// Largest η_i / ζ_i index representable.
pub const MAX_INDEX: usize = 14;
pub const SLOTS: usize = 4 + 2 * MAX_INDEX;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Atom {
    S,
    A,
    B,
    C,
    Eta(u32),
    Zeta(u32),
}

impl Atom {
    pub fn slot(self) -> usize {
        match self {
            Atom::S => 0,
            Atom::A => 1,
            Atom::B => 2,
            Atom::C => 3,
            Atom::Eta(i) => 4 + 2 * (i as usize - 1),
            Atom::Zeta(i) => 5 + 2 * (i as usize - 1),
        }
    }

    pub fn from_slot(k: usize) -> Atom {
        match k {
            0 => Atom::S,
            1 => Atom::A,
            2 => Atom::B,
            3 => Atom::C,
            _ if k.is_multiple_of(2) => Atom::Eta(((k - 4) / 2 + 1) as u32),
            _ => Atom::Zeta(((k - 5) / 2 + 1) as u32),
        }
    }

    fn name(self) -> String {
        match self {
            Atom::S => "s".into(),
            Atom::A => "A".into(),
            Atom::B => "B".into(),
            Atom::C => "C".into(),
            Atom::Eta(i) => format!("eta{}", i),
            Atom::Zeta(i) => format!("zeta{}", i),
        }
    }

    pub fn greek_index(self) -> u32 {
        match self {
            Atom::Eta(i) | Atom::Zeta(i) => i,
            _ => 0,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mono(pub [i8; SLOTS]);

impl Mono {
    pub const ONE: Mono = Mono([0; SLOTS]);

    pub fn of(a: Atom, e: i32) -> Mono {
        let mut m = Mono::ONE;
        m.0[a.slot()] = e as i8;
        m
    }

    pub fn exp(&self, a: Atom) -> i32 {
        self.0[a.slot()] as i32
    }

    pub fn mul(&self, o: &Mono) -> Mono {
        let mut m = *self;
        for i in 0..SLOTS {
            m.0[i] += o.0[i];
        }
        m
    }

    pub fn with(&self, a: Atom, e: i32) -> Mono {
        let mut m = *self;
        m.0[a.slot()] = e as i8;
        m
    }

    pub fn atoms(&self) -> impl Iterator<Item = (Atom, i32)> + '_ {
        self.0.iter().enumerate().filter(|(_, &e)| e != 0).map(|(k, &e)| (Atom::from_slot(k), e as i32))
    }

    /// Greek factors η_i, ζ_i (with multiplicity).
    pub fn greek_factors(&self) -> u32 {
        (4..SLOTS).map(|k| self.0[k].max(0) as u32).sum()
    }

    pub fn greek_weight(&self) -> u32 {
        (4..SLOTS).map(|k| self.0[k].max(0) as u32 * Atom::from_slot(k).greek_index()).sum()
    }

    pub fn max_index(&self) -> u32 {
        (4..SLOTS).filter(|&k| self.0[k] != 0).map(|k| Atom::from_slot(k).greek_index()).max().unwrap_or(0)
    }
}

impl fmt::Debug for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (a, e) in self.atoms() {
            if !first {
                write!(f, "*")?;
            }
            first = false;
            if e == 1 {
                write!(f, "{}", a.name())?;
            } else {
                write!(f, "{}^{}", a.name(), e)?;
            }
        }
        if first {
            write!(f, "1")?;
        }
        Ok(())
    }
}

#[derive(Clone, PartialEq, Eq, Default)]
pub struct GPoly(pub BTreeMap<Mono, Q>);

impl fmt::Debug for GPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, q) in &self.0 {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            write!(f, "({})*{:?}", fmt_q(q), m)?;
        }
        Ok(())
    }
}

impl Coeff for GPoly {
    fn nil() -> Self {
        GPoly::zero()
    }
    fn is_nil(&self) -> bool {
        self.0.is_empty()
    }
    fn add_assign(&mut self, other: &Self) {
        for (m, q) in &other.0 {
            self.add_term(*m, q.clone());
        }
    }
    fn scaled(&self, q: &Q) -> Self {
        self.scale(q)
    }
}

impl GPoly {
    pub fn zero() -> Self {
        GPoly(BTreeMap::new())
    }

    pub fn constant(q: Q) -> Self {
        let mut p = GPoly::zero();
        p.add_term(Mono::ONE, q);
        p
    }

    pub fn one() -> Self {
        GPoly::constant(Q::one())
    }

    pub fn int(n: i64) -> Self {
        GPoly::constant(qi(n))
    }

    pub fn atom(a: Atom) -> Self {
        GPoly::atom_pow(a, 1)
    }

    pub fn atom_pow(a: Atom, e: i32) -> Self {
        GPoly::term(Mono::of(a, e), Q::one())
    }

    pub fn term(m: Mono, q: Q) -> Self {
        let mut p = GPoly::zero();
        p.add_term(m, q);
        p
    }

    pub fn s() -> Self {
        GPoly::atom(Atom::S)
    }

    pub fn s_pow(e: i32) -> Self {
        GPoly::atom_pow(Atom::S, e)
    }

    /// η (i = 0) or η_i as an element of the ring.
    pub fn eta(i: u32) -> Self {
        if i == 0 {
            GPoly::one().sub(&GPoly::atom_pow(Atom::A, -1))
        } else {
            GPoly::atom(Atom::Eta(i))
        }
    }

    pub fn zeta(i: u32) -> Self {
        if i == 0 {
            GPoly::atom_pow(Atom::B, -1).sub(&GPoly::one())
        } else {
            GPoly::atom(Atom::Zeta(i))
        }
    }

    pub fn gamma() -> Self {
        GPoly::atom_pow(Atom::C, -1).sub(&GPoly::one())
    }

    pub fn greek(g: Greek) -> Self {
        match g {
            Greek::Gamma => GPoly::gamma(),
            Greek::Eta(i) => GPoly::eta(i),
            Greek::Zeta(i) => GPoly::zeta(i),
        }
    }

    pub fn from_lin(l: &Lin<Q>) -> Self {
        l.iter().fold(GPoly::zero(), |acc, (g, q)| acc.add(&GPoly::greek(*g).scale(q)))
    }

    pub fn from_lin_g(l: &Lin<GPoly>) -> Self {
        l.iter().fold(GPoly::zero(), |acc, (g, c)| acc.add(&GPoly::greek(*g).mul(c)))
    }

    pub fn from_laurent(q: &LaurentS) -> Self {
        let mut p = GPoly::zero();
        for (e, c) in &q.0 {
            p.add_term(Mono::of(Atom::S, *e), c.clone());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Mono, &Q)> {
        self.0.iter()
    }

    pub fn add_term(&mut self, m: Mono, q: Q) {
        if q.is_zero() {
            return;
        }
        match self.0.entry(m) {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                v.insert(q);
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += q;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, o: &GPoly) -> GPoly {
        let mut out = self.clone();
        for (m, q) in &o.0 {
            out.add_term(*m, q.clone());
        }
        out
    }

    pub fn sub(&self, o: &GPoly) -> GPoly {
        let mut out = self.clone();
        for (m, q) in &o.0 {
            out.add_term(*m, -q.clone());
        }
        out
    }

    pub fn neg(&self) -> GPoly {
        self.scale(&-Q::one())
    }

    pub fn scale(&self, c: &Q) -> GPoly {
        if c.is_zero() {
            return GPoly::zero();
        }
        GPoly(self.0.iter().map(|(m, q)| (*m, q * c)).collect())
    }

    pub fn mul(&self, o: &GPoly) -> GPoly {
        let mut acc: BTreeMap<Mono, Q> = BTreeMap::new();
        for (m1, q1) in &self.0 {
            for (m2, q2) in &o.0 {
                *acc.entry(m1.mul(m2)).or_insert_with(Q::zero) += q1 * q2;
            }
        }
        acc.retain(|_, q| !q.is_zero());
        GPoly(acc)
    }

    pub fn mul_mono(&self, m: &Mono, c: &Q) -> GPoly {
        GPoly(self.0.iter().map(|(m1, q)| (m1.mul(m), q * c)).collect())
    }

    pub fn pow(&self, n: u32) -> GPoly {
        (0..n).fold(GPoly::one(), |acc, _| acc.mul(self))
    }

    /// Partial derivative with respect to one generator.
    pub fn deriv(&self, a: Atom) -> GPoly {
        let k = a.slot();
        let mut out = GPoly::zero();
        for (m, q) in &self.0 {
            let e = m.0[k];
            if e != 0 {
                let mut m2 = *m;
                m2.0[k] -= 1;
                out.add_term(m2, q * qi(e as i64));
            }
        }
        out
    }

    /// Generators that occur.
    pub fn atoms(&self) -> Vec<Atom> {
        let mut used = [false; SLOTS];
        for m in self.0.keys() {
            for (u, e) in used.iter_mut().zip(m.0.iter()) {
                *u |= *e != 0;
            }
        }
        (0..SLOTS).filter(|&k| used[k]).map(Atom::from_slot).collect()
    }

    /// s ↦ -s.
    pub fn reflect(&self) -> GPoly {
        GPoly(self.0.iter().map(|(m, q)| (*m, if m.0[0] % 2 == 0 { q.clone() } else { -q })).collect())
    }

    pub fn is_odd(&self) -> bool {
        self.0.keys().all(|m| m.0[0] % 2 != 0)
    }

    /// Coefficients of the powers of s.
    pub fn split_s(&self) -> BTreeMap<i32, GPoly> {
        let mut out: BTreeMap<i32, GPoly> = BTreeMap::new();
        for (m, q) in &self.0 {
            out.entry(m.0[0] as i32).or_default().add_term(m.with(Atom::S, 0), q.clone());
        }
        out
    }

    pub fn s_range(&self) -> Option<(i32, i32)> {
        let mut it = self.0.keys().map(|m| m.0[0] as i32);
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), e| (lo.min(e), hi.max(e))))
    }

    pub fn max_index(&self) -> u32 {
        self.0.keys().map(|m| m.max_index()).max().unwrap_or(0)
    }

    /// Substitutes A = B = C = 1 and η_i = ζ_i = 0 (the Greek origin).
    pub fn at_origin(&self) -> GPoly {
        let mut out = GPoly::zero();
        for (m, q) in &self.0 {
            if (4..SLOTS).all(|k| m.0[k] == 0) {
                out.add_term(Mono::of(Atom::S, m.0[0] as i32), q.clone());
            }
        }
        out
    }

    pub fn constant_value(&self) -> Option<Q> {
        match self.0.len() {
            0 => Some(Q::zero()),
            1 => self.0.get(&Mono::ONE).cloned(),
            _ => None,
        }
    }

    /// Denominator exponents of the fraction form: max positive A, B, C powers.
    pub fn denominators(&self) -> (i32, i32, i32) {
        let mut d = (0, 0, 0);
        for m in self.0.keys() {
            d.0 = d.0.max(m.0[1] as i32);
            d.1 = d.1.max(m.0[2] as i32);
            d.2 = d.2.max(m.0[3] as i32);
        }
        d
    }

    /// Numerator over (1-η)^a (1+ζ)^b (1+γ)^c, written with η, ζ, γ as
    /// explicit (non-canonical) variables in the returned string.
    pub fn to_fraction_string(&self) -> String {
        let (a, b, c) = self.denominators();
        let num = self.mul_mono(&Mono::ONE.with(Atom::A, -a).with(Atom::B, -b).with(Atom::C, -c), &Q::one());
        let mut s = format!("({:?})", num);
        if a > 0 {
            s += &format!(" / (1-eta)^{}", a);
        }
        if b > 0 {
            s += &format!(" / (1+zeta)^{}", b);
        }
        if c > 0 {
            s += &format!(" / (1+gamma)^{}", c);
        }
        s
    }

    /// Series expansion in (z; u; p) through z^trunc.
    pub fn eval(&self, cd: &CoordData) -> Result<Series> {
        Evaluator::new(cd).eval(self)
    }
}

/// Caches series powers of the generators for repeated evaluation.
pub struct Evaluator<'a> {
    cd: &'a CoordData,
    pows: BTreeMap<(Atom, i32), Series>,
}

impl<'a> Evaluator<'a> {
    pub fn new(cd: &'a CoordData) -> Self {
        Evaluator { cd, pows: BTreeMap::new() }
    }

    fn base(&self, a: Atom, inverse: bool) -> Result<Series> {
        let n = self.cd.trunc;
        let one = Series::one(Chart::Zup, n);
        let s = match a {
            Atom::S => LaurentS::mono(if inverse { -1 } else { 1 }, Q::one()).eval_series(n),
            Atom::A => {
                let d = one.sub(&Greek::Eta(0).series(n))?;
                if inverse {
                    d
                } else {
                    d.inverse()?
                }
            }
            Atom::B => {
                let d = one.add(&Greek::Zeta(0).series(n))?;
                if inverse {
                    d
                } else {
                    d.inverse()?
                }
            }
            Atom::C => {
                let d = one.add(&Greek::Gamma.series(n))?;
                if inverse {
                    d
                } else {
                    d.inverse()?
                }
            }
            Atom::Eta(i) => {
                if inverse {
                    return Err(Error::NotUnit);
                }
                Greek::Eta(i).series(n)
            }
            Atom::Zeta(i) => {
                if inverse {
                    return Err(Error::NotUnit);
                }
                Greek::Zeta(i).series(n)
            }
        };
        Ok(s)
    }

    pub fn power(&mut self, a: Atom, e: i32) -> Result<Series> {
        if e == 0 {
            return Ok(Series::one(Chart::Zup, self.cd.trunc));
        }
        if let Some(s) = self.pows.get(&(a, e)) {
            return Ok(s.clone());
        }
        let step = if e > 0 { 1 } else { -1 };
        let prev = self.power(a, e - step)?;
        let b = self.base(a, e < 0)?;
        let s = prev.mul(&b)?;
        self.pows.insert((a, e), s.clone());
        Ok(s)
    }

    /// Groups monomials by their (s, A, B, C) part so each Greek polynomial
    /// is expanded once.
    pub fn eval(&mut self, p: &GPoly) -> Result<Series> {
        let n = self.cd.trunc;
        let mut groups: BTreeMap<[i8; 4], Vec<(Mono, &Q)>> = BTreeMap::new();
        for (m, q) in &p.0 {
            let mut key = [0i8; 4];
            key.copy_from_slice(&m.0[..4]);
            let mut rest = *m;
            for k in 0..4 {
                rest.0[k] = 0;
            }
            groups.entry(key).or_default().push((rest, q));
        }
        let mut out = Series::zero(Chart::Zup, n);
        for (key, terms) in groups {
            let mut inner = Series::zero(Chart::Zup, n);
            for (m, q) in terms {
                let mut t = Series::constant(Chart::Zup, n, q.clone());
                for (a, e) in m.atoms() {
                    t = t.mul(&self.power(a, e)?)?;
                }
                inner = inner.add(&t)?;
            }
            for (k, &e) in key.iter().enumerate() {
                if e != 0 {
                    inner = inner.mul(&self.power(Atom::from_slot(k), e as i32)?)?;
                }
            }
            out = out.add(&inner)?;
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::qf;

    #[test]
    fn ring_basics() {
        let eta = GPoly::eta(0);
        let a = GPoly::atom(Atom::A);
        // (1-η) A = 1
        assert_eq!(GPoly::one().sub(&eta).mul(&a), GPoly::one());
        // (1-η)η / (1-η)^2 = η/(1-η)
        let lhs = GPoly::one().sub(&eta).mul(&eta).mul(&a.pow(2));
        assert_eq!(lhs, eta.mul(&a));
        assert_eq!(GPoly::s().mul(&GPoly::s_pow(-1)), GPoly::one());
        assert_eq!(Atom::from_slot(Atom::Zeta(3).slot()), Atom::Zeta(3));
        assert_eq!(Atom::from_slot(Atom::Eta(14).slot()), Atom::Eta(14));
    }

    #[test]
    fn evaluation() {
        let cd = CoordData::new(6).unwrap();
        let a = GPoly::atom(Atom::A).eval(&cd).unwrap();
        let one_minus_eta = Series::one(Chart::Zup, 6).sub(&Greek::Eta(0).series(6)).unwrap();
        assert_eq!(a.mul(&one_minus_eta).unwrap(), Series::one(Chart::Zup, 6));
        let s = GPoly::s().eval(&cd).unwrap();
        assert_eq!(s.get(2, 2, &[]).unwrap(), qi(2));
        assert_eq!(s.get(1, 1, &[]).unwrap(), qi(-2));
        let mixed = GPoly::s_pow(-2).mul(&GPoly::atom(Atom::Zeta(1))).scale(&qf(3, 7));
        let direct = LaurentS::mono(-2, qf(3, 7)).eval_series(6).mul(&Greek::Zeta(1).series(6)).unwrap();
        assert_eq!(mixed.eval(&cd).unwrap(), direct);
    }
}
