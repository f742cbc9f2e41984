//! Sparse truncated power series in one "order" variable (t or z), one
//! catalytic variable (x or u) and the power sums p_1, p_2, ...

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::rational::{qi, Q};

/// Coordinate system of a series: order variable, catalytic variable.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Chart {
    /// (t; x; p)
    Txp,
    /// (z; u; p)
    Zup,
    /// (z; x; p), only used while inverting u = x(1+zu)^2.
    Zxp,
}

/// Exponent of the order variable, exponent of the catalytic variable, and
/// the p-monomial.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Key {
    pub e: u32,
    pub c: u32,
    pub mu: Partition,
}

impl Key {
    pub fn new(e: u32, c: u32, mu: Partition) -> Self {
        Key { e, c, mu }
    }

    pub fn constant() -> Self {
        Key::new(0, 0, Partition::empty())
    }

    fn first_of_order(e: u32) -> Self {
        Key::new(e, 0, Partition::empty())
    }
}

impl fmt::Debug for Key {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {:?})", self.e, self.c, self.mu)
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Series {
    chart: Chart,
    trunc: u32,
    graded: bool,
    terms: BTreeMap<Key, Q>,
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Series[{:?}, O({})]{{", self.chart, self.trunc + 1)?;
        for (k, q) in &self.terms {
            write!(f, " {:?}: {},", k, q)?;
        }
        write!(f, " }}")
    }
}

impl Series {
    pub fn zero(chart: Chart, trunc: u32) -> Self {
        Series { chart, trunc, graded: true, terms: BTreeMap::new() }
    }

    pub fn constant(chart: Chart, trunc: u32, q: Q) -> Self {
        let mut s = Series::zero(chart, trunc);
        s.add_term(Key::constant(), q);
        s
    }

    pub fn one(chart: Chart, trunc: u32) -> Self {
        Series::constant(chart, trunc, Q::one())
    }

    pub fn monomial(chart: Chart, trunc: u32, e: u32, c: u32, mu: Partition, q: Q) -> Self {
        let mut s = Series::zero(chart, trunc);
        s.graded = false;
        s.add_term(Key::new(e, c, mu), q);
        s.graded = s.check_graded();
        s
    }

    /// The order variable itself (t or z).
    pub fn var_order(chart: Chart, trunc: u32) -> Self {
        Series::monomial(chart, trunc, 1, 0, Partition::empty(), Q::one())
    }

    /// The catalytic variable itself (x or u).
    pub fn var_cat(chart: Chart, trunc: u32) -> Self {
        Series::monomial(chart, trunc, 0, 1, Partition::empty(), Q::one())
    }

    pub fn from_terms(chart: Chart, trunc: u32, terms: impl IntoIterator<Item = (Key, Q)>) -> Self {
        let mut s = Series::zero(chart, trunc);
        for (k, q) in terms {
            s.add_term(k, q);
        }
        s.graded = s.check_graded();
        s
    }

    pub fn chart(&self) -> Chart {
        self.chart
    }

    pub fn trunc(&self) -> u32 {
        self.trunc
    }

    /// Whether every key is asserted to satisfy the map grading.
    pub fn graded(&self) -> bool {
        self.graded
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Key, &Q)> {
        self.terms.iter()
    }

    pub fn terms(&self) -> &BTreeMap<Key, Q> {
        &self.terms
    }

    /// Terms whose order exponent equals `e`.
    pub fn order(&self, e: u32) -> impl Iterator<Item = (&Key, &Q)> {
        self.terms.range(Key::first_of_order(e)..Key::first_of_order(e + 1))
    }

    pub fn valuation(&self) -> Option<u32> {
        self.terms.keys().next().map(|k| k.e)
    }

    pub fn max_cat(&self) -> u32 {
        self.terms.keys().map(|k| k.c).max().unwrap_or(0)
    }

    /// Map grading: n = k + |mu| in (t; x), m = j + |mu| in (z; u).
    pub fn key_graded(chart: Chart, k: &Key) -> bool {
        match chart {
            Chart::Txp | Chart::Zup => k.e == k.c + k.mu.weight(),
            Chart::Zxp => false,
        }
    }

    pub fn check_graded(&self) -> bool {
        self.terms.keys().all(|k| Series::key_graded(self.chart, k))
    }

    /// Marks the series as map-graded after checking every key.
    pub fn assert_graded(mut self) -> Result<Self> {
        if self.check_graded() {
            self.graded = true;
            Ok(self)
        } else {
            Err(Error::Structural("series is not map-graded".into()))
        }
    }

    /// Adds `q` to the coefficient at `k`, silently dropping keys above the
    /// truncation.
    pub fn add_term(&mut self, k: Key, q: Q) {
        if k.e > self.trunc || q.is_zero() {
            return;
        }
        if self.graded && !Series::key_graded(self.chart, &k) {
            self.graded = false;
        }
        match self.terms.entry(k) {
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

    pub fn coeff(&self, k: &Key) -> Result<Q> {
        if k.e > self.trunc {
            return Err(Error::BeyondTruncation { order: k.e, trunc: self.trunc });
        }
        Ok(self.terms.get(k).cloned().unwrap_or_else(Q::zero))
    }

    pub fn get(&self, e: u32, c: u32, mu: &[u32]) -> Result<Q> {
        self.coeff(&Key::new(e, c, Partition::new(mu.to_vec())))
    }

    pub fn truncate(&self, trunc: u32) -> Series {
        let trunc = trunc.min(self.trunc);
        let mut out = Series::zero(self.chart, trunc);
        out.graded = self.graded;
        out.terms = self.terms.range(..Key::first_of_order(trunc + 1)).map(|(k, q)| (k.clone(), q.clone())).collect();
        out
    }

    fn same_chart(&self, other: &Series) -> Result<()> {
        if self.chart == other.chart {
            Ok(())
        } else {
            Err(Error::ChartMismatch)
        }
    }

    pub fn add(&self, other: &Series) -> Result<Series> {
        self.same_chart(other)?;
        let mut out = self.truncate(self.trunc.min(other.trunc));
        out.graded = self.graded && other.graded;
        for (k, q) in other.terms.iter() {
            out.add_term(k.clone(), q.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Series) -> Result<Series> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Series {
        self.scale(&-Q::one())
    }

    pub fn scale(&self, c: &Q) -> Series {
        let mut out = Series::zero(self.chart, self.trunc);
        out.graded = self.graded;
        if !c.is_zero() {
            out.terms = self.terms.iter().map(|(k, q)| (k.clone(), q * c)).collect();
        }
        out
    }

    pub fn mul(&self, other: &Series) -> Result<Series> {
        self.mul_filtered(other, |_| true)
    }

    /// Product keeping only keys accepted by `keep`. Used to stay inside a
    /// monomial ideal complement without materialising the full product.
    pub fn mul_filtered(&self, other: &Series, keep: impl Fn(&Key) -> bool) -> Result<Series> {
        self.same_chart(other)?;
        let trunc = self.trunc.min(other.trunc);
        let by_order = other.by_order(trunc);
        let mut acc: BTreeMap<Key, Q> = BTreeMap::new();
        for (ka, qa) in self.terms.range(..Key::first_of_order(trunc + 1)) {
            for slice in by_order.iter().take((trunc - ka.e + 1) as usize) {
                for (kb, qb) in slice {
                    let k = Key::new(ka.e + kb.e, ka.c + kb.c, ka.mu.union(&kb.mu));
                    if !keep(&k) {
                        continue;
                    }
                    let prod = qa * *qb;
                    match acc.entry(k) {
                        alloc::collections::btree_map::Entry::Vacant(v) => {
                            v.insert(prod);
                        }
                        alloc::collections::btree_map::Entry::Occupied(mut o) => {
                            *o.get_mut() += prod;
                        }
                    }
                }
            }
        }
        acc.retain(|_, q| !q.is_zero());
        let mut out = Series::zero(self.chart, trunc);
        out.terms = acc;
        out.graded = if self.graded && other.graded { true } else { out.check_graded() };
        Ok(out)
    }

    fn by_order(&self, trunc: u32) -> Vec<Vec<(&Key, &Q)>> {
        let mut v: Vec<Vec<(&Key, &Q)>> = (0..=trunc).map(|_| Vec::new()).collect();
        for (k, q) in self.terms.range(..Key::first_of_order(trunc + 1)) {
            v[k.e as usize].push((k, q));
        }
        v
    }

    pub fn pow(&self, n: u32) -> Result<Series> {
        let mut out = Series::one(self.chart, self.trunc);
        for _ in 0..n {
            out = out.mul(self)?;
        }
        Ok(out)
    }

    /// Multiplicative inverse; the order-zero part must be a nonzero scalar.
    pub fn inverse(&self) -> Result<Series> {
        let mut c0 = Q::zero();
        for (k, q) in self.order(0) {
            if k.c != 0 || !k.mu.is_empty() {
                return Err(Error::NotUnit);
            }
            c0 = q.clone();
        }
        if c0.is_zero() {
            return Err(Error::NotUnit);
        }
        let inv0 = c0.recip();
        let f = self.by_order(self.trunc);
        // g_n = -inv0 * sum_{j>=1} f_j g_{n-j}, solved one order at a time
        let mut g: Vec<BTreeMap<Key, Q>> = Vec::new();
        let mut g0 = BTreeMap::new();
        g0.insert(Key::constant(), inv0.clone());
        g.push(g0);
        for n in 1..=self.trunc {
            let mut acc: BTreeMap<Key, Q> = BTreeMap::new();
            for j in 1..=n {
                for (kf, qf) in &f[j as usize] {
                    for (kg, qg) in &g[(n - j) as usize] {
                        let k = Key::new(n, kf.c + kg.c, kf.mu.union(&kg.mu));
                        *acc.entry(k).or_insert_with(Q::zero) += *qf * qg;
                    }
                }
            }
            acc.retain(|_, q| !q.is_zero());
            for q in acc.values_mut() {
                *q = -(&*q * &inv0);
            }
            g.push(acc);
        }
        let mut out = Series::zero(self.chart, self.trunc);
        out.graded = false;
        for slice in g {
            out.terms.extend(slice);
        }
        out.graded = out.check_graded();
        Ok(out)
    }

    /// Applies `f` to every term; `f` returns the new key (or `None` to drop).
    pub fn map_terms(&self, f: impl Fn(&Key, &Q) -> Option<(Key, Q)>) -> Series {
        let mut out = Series::zero(self.chart, self.trunc);
        out.graded = false;
        for (k, q) in &self.terms {
            if let Some((k2, q2)) = f(k, q) {
                out.add_term(k2, q2);
            }
        }
        out.graded = out.check_graded();
        out
    }

    pub fn retain(&self, keep: impl Fn(&Key) -> bool) -> Series {
        let mut out = self.clone();
        out.terms.retain(|k, _| keep(k));
        out
    }

    /// Reinterprets the series in another chart without changing keys.
    pub fn relabel(&self, chart: Chart) -> Series {
        let mut out = self.clone();
        out.chart = chart;
        out.graded = out.check_graded();
        out
    }

    /// d/d(order variable). The truncation drops by one.
    pub fn d_order(&self) -> Series {
        let mut out = Series::zero(self.chart, self.trunc.saturating_sub(1));
        out.graded = false;
        for (k, q) in &self.terms {
            if k.e > 0 {
                out.add_term(Key::new(k.e - 1, k.c, k.mu.clone()), q * qi(k.e as i64));
            }
        }
        out
    }

    /// d/d(catalytic variable).
    pub fn d_cat(&self) -> Series {
        self.map_terms(|k, q| (k.c > 0).then(|| (Key::new(k.e, k.c - 1, k.mu.clone()), q * qi(k.c as i64))))
    }

    /// d/dp_j.
    pub fn d_p(&self, j: u32) -> Series {
        self.map_terms(|key, q| {
            let m = key.mu.multiplicity(j);
            (m > 0).then(|| (Key::new(key.e, key.c, key.mu.without(j).unwrap()), q * qi(m as i64)))
        })
    }

    /// Multiplies by p_mu.
    pub fn times_p(&self, mu: &Partition) -> Series {
        self.map_terms(|k, q| Some((Key::new(k.e, k.c, k.mu.union(mu)), q.clone())))
    }

    /// Substitutes p_i := 0 for every i outside `keep`.
    pub fn restrict_p(&self, keep: impl Fn(u32) -> bool) -> Series {
        self.retain(|k| k.mu.parts().iter().all(|&p| keep(p)))
    }

    /// Substitutes the catalytic variable by zero.
    pub fn cat_zero(&self) -> Series {
        self.retain(|k| k.c == 0)
    }

    /// Substitutes every p_i := 0.
    pub fn p_zero(&self) -> Series {
        self.retain(|k| k.mu.is_empty())
    }

    /// `f(first, second)`: the order variable of `self` becomes `first` and the
    /// catalytic variable becomes `second`; both live in the target chart.
    /// `first` must have positive valuation unless `self` has no order
    /// dependence.
    pub fn compose(&self, first: &Series, second: &Series) -> Result<Series> {
        first.same_chart(second)?;
        let max_e = self.terms.keys().map(|k| k.e).max().unwrap_or(0);
        if max_e > 0 && first.order(0).next().is_some() {
            return Err(Error::DivergentSubstitution);
        }
        // terms of self beyond its truncation land at order >= (trunc+1)*v
        let v = first.valuation().unwrap_or(u32::MAX).max(1);
        let exact = (self.trunc as u64 + 1).saturating_mul(v as u64) - 1;
        let trunc = first.trunc.min(second.trunc).min(exact.min(u32::MAX as u64) as u32);
        let max_c = self.max_cat();
        let mut second_pows = Vec::with_capacity(max_c as usize + 1);
        second_pows.push(Series::one(first.chart, trunc));
        for i in 1..=max_c as usize {
            let next = second_pows[i - 1].mul(second)?;
            second_pows.push(next);
        }
        let mut out = Series::zero(first.chart, trunc);
        let mut first_pow = Series::one(first.chart, trunc);
        for e in 0..=max_e {
            if e > 0 {
                first_pow = first_pow.mul(first)?;
                if first_pow.is_zero() {
                    break;
                }
            }
            let mut inner: BTreeMap<Key, Q> = BTreeMap::new();
            for (k, q) in self.order(e) {
                for (ks, qs) in second_pows[k.c as usize].iter() {
                    let key = Key::new(ks.e, ks.c, ks.mu.union(&k.mu));
                    *inner.entry(key).or_insert_with(Q::zero) += q * qs;
                }
            }
            inner.retain(|_, q| !q.is_zero());
            if inner.is_empty() {
                continue;
            }
            let mut inner_s = Series::zero(first.chart, trunc);
            inner_s.terms = inner;
            out = out.add(&first_pow.mul(&inner_s)?)?;
        }
        out.graded = out.check_graded();
        Ok(out)
    }

    /// Equality of coefficients up to the smaller truncation.
    pub fn agrees_with(&self, other: &Series) -> bool {
        if self.chart != other.chart {
            return false;
        }
        let n = self.trunc.min(other.trunc);
        self.truncate(n).terms == other.truncate(n).terms
    }

    /// First key (in key order) where the two series differ.
    pub fn first_difference(&self, other: &Series) -> Option<(Key, Q, Q)> {
        let n = self.trunc.min(other.trunc);
        let a = self.truncate(n);
        let b = other.truncate(n);
        let mut keys: Vec<&Key> = a.terms.keys().chain(b.terms.keys()).collect();
        keys.sort();
        keys.dedup();
        for k in keys {
            let x = a.terms.get(k).cloned().unwrap_or_else(Q::zero);
            let y = b.terms.get(k).cloned().unwrap_or_else(Q::zero);
            if x != y {
                return Some((k.clone(), x, y));
            }
        }
        None
    }
}
