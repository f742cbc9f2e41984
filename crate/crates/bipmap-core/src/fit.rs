//! Fitting closed forms to series data. The unknowns are the coefficients of
//! a finite basis of Greek monomials (times pole factors for rooted series);
//! the equations are coefficients of the target in (z; u; p), where only the
//! parts 2..=K occur. Elimination runs modulo a large prime, the solution is
//! lifted back by rational reconstruction and then checked exactly on every
//! available coefficient.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use num_traits::{One, Zero};

use crate::closed::{ClosedFormF, ClosedFormL, FTerm, GreekPart, LTerm};
use crate::error::{Error, Result};
use crate::greek::Greek;
use crate::kernel::Pole;
use crate::modp::{self, ModEchelon, Push};
use crate::partition::{partitions_up_to, Partition};
use crate::rational::{binom, qb, Q};
use crate::series::{Chart, Series};
use crate::coords::CoordData;
use crate::toprec::{one_minus_w_pow, one_plus_w_pow};
use crate::tutte::{compute_f_with, Support};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    /// Rooted series F_g, with pole factors (1 ∓ uz)^{−c}.
    F,
    /// Unrooted series L_g, u-free.
    L,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Bounds {
    /// a + b equal to its upper bound (plus the constant for L).
    Homogeneous,
    /// a + b anywhere up to its upper bound.
    Relaxed,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct BasisTerm {
    pub greek: GreekPart,
    pub pole: Option<(Pole, u32)>,
}

impl BasisTerm {
    fn weight(&self) -> u32 {
        self.greek.alpha.weight() + self.greek.beta.weight()
    }

    fn sort_key(&self) -> (u32, u32, u32, u32, Option<(Pole, u32)>, Partition, Partition) {
        let c = self.pole.map_or(0, |p| p.1);
        (self.weight(), c, self.greek.a + self.greek.b, self.greek.a, self.pole, self.greek.alpha.clone(), self.greek.beta.clone())
    }
}

/// Partitions with parts ≥ 1 split into an η part and a ζ part, of total
/// weight at most `w`.
fn greek_splits(w: u32) -> Vec<(Partition, Partition)> {
    let all = partitions_up_to(w, w.max(1));
    let mut out = Vec::new();
    for a in &all {
        for b in &all {
            if a.weight() + b.weight() <= w {
                out.push((a.clone(), b.clone()));
            }
        }
    }
    out
}

fn push_ab(out: &mut Vec<BasisTerm>, alpha: &Partition, beta: &Partition, top: u32, bounds: Bounds, pole: Option<(Pole, u32)>) {
    let lo = if bounds == Bounds::Homogeneous { top } else { 0 };
    for s in lo..=top {
        for a in 0..=s {
            let greek = GreekPart { alpha: alpha.clone(), beta: beta.clone(), a, b: s - a };
            out.push(BasisTerm { greek, pole });
        }
    }
}

fn sorted(mut v: Vec<BasisTerm>) -> Vec<BasisTerm> {
    v.sort_by_key(|t| t.sort_key());
    v.dedup();
    v
}

/// The admissible basis for F_g or L_g, lowest Greek weight first.
pub fn enumerate_basis(g: u32, target: Target, bounds: Bounds) -> Result<Vec<BasisTerm>> {
    let mut out = Vec::new();
    match target {
        Target::F => {
            if g == 0 {
                return Err(Error::Invalid("genus 0 has no finite closed form in this basis".into()));
            }
            for sign in [Pole::Plus, Pole::Minus] {
                let k = if sign == Pole::Plus { 3 * g } else { g };
                for c in 1..6 * g {
                    let Some(wmax) = k.checked_sub((c + 1).div_ceil(2)) else { continue };
                    for (alpha, beta) in greek_splits(wmax) {
                        let ell = (alpha.len() + beta.len()) as u32;
                        push_ab(&mut out, &alpha, &beta, ell + 2 * g - 1, bounds, Some((sign, c)));
                    }
                }
            }
        }
        Target::L => {
            if g == 0 {
                return Err(Error::Invalid("genus 0 has no finite closed form in this basis".into()));
            }
            if g == 1 {
                return Err(Error::LogObstruction("L_1 contains ln(1/(1-eta)) and ln(1/(1+zeta))".into()));
            }
            out.push(BasisTerm { greek: GreekPart { alpha: Partition::empty(), beta: Partition::empty(), a: 0, b: 0 }, pole: None });
            for (alpha, beta) in greek_splits(3 * (g - 1)) {
                let ell = (alpha.len() + beta.len()) as u32;
                push_ab(&mut out, &alpha, &beta, ell + 2 * g - 2, bounds, None);
            }
        }
    }
    Ok(sorted(out))
}

/// Every u-free Greek monomial of weight ≤ `max_weight` with a + b ≤ `max_ab`.
pub fn rational_basis(max_weight: u32, max_ab: u32) -> Vec<BasisTerm> {
    let mut out = Vec::new();
    for (alpha, beta) in greek_splits(max_weight) {
        push_ab(&mut out, &alpha, &beta, max_ab, Bounds::Relaxed, None);
    }
    sorted(out)
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FitOptions {
    /// Largest part K present in the target; `None` means every part.
    pub max_part: Option<u32>,
    /// Coefficients of total z-order up to this are fitted, the rest only
    /// validated. `None` means truncation − 3.
    pub fit_order: Option<u32>,
    /// Adds the equations making the rooted form odd in s.
    pub odd: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FitReport {
    pub ncols: usize,
    pub rank: usize,
    pub nullity: usize,
    /// Coefficients with total order ≤ the fit order; all of them are
    /// consistent with the solution.
    pub fit_rows: usize,
    /// Rows eliminated before the solution became unique.
    pub used_rows: usize,
    /// Higher-order coefficients, only checked.
    pub validation_rows: usize,
    /// Basis columns eliminated by structural equations.
    pub constraints: usize,
    pub nonzero: usize,
}

#[derive(Clone, Debug)]
pub struct Fit {
    pub coeffs: Vec<(BasisTerm, Q)>,
    pub report: FitReport,
}

impl Fit {
    pub fn closed_f(&self, g: u32) -> Result<ClosedFormF> {
        let mut terms = Vec::new();
        for (t, q) in &self.coeffs {
            let Some((sign, c)) = t.pole else {
                return Err(Error::Invalid("basis term without a pole in a rooted fit".into()));
            };
            terms.push(FTerm { greek: t.greek.clone(), c, sign, coeff: q.clone() });
        }
        terms.sort_by(|x, y| (&x.greek, x.sign, x.c).cmp(&(&y.greek, y.sign, y.c)));
        Ok(ClosedFormF { g, terms })
    }

    pub fn closed_l(&self, g: u32) -> Result<ClosedFormL> {
        let mut terms = Vec::new();
        for (t, q) in &self.coeffs {
            if t.pole.is_some() {
                return Err(Error::Invalid("basis term with a pole in an unrooted fit".into()));
            }
            terms.push(LTerm { greek: t.greek.clone(), coeff: q.clone() });
        }
        terms.sort_by(|x, y| x.greek.cmp(&y.greek));
        Ok(ClosedFormL { g, terms, log_eta: Q::zero(), log_zeta: Q::zero() })
    }
}

/// Coefficients are computed twice, once modulo P and once exactly.
trait Coef: Clone {
    fn nil() -> Self;
    fn unit() -> Self;
    fn vanishes(&self) -> bool;
    fn plus(&self, o: &Self) -> Self;
    fn times(&self, o: &Self) -> Self;
    fn of_q(q: &Q) -> Self;
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct M(u64);

impl Coef for M {
    fn nil() -> Self {
        M(0)
    }
    fn unit() -> Self {
        M(1)
    }
    fn vanishes(&self) -> bool {
        self.0 == 0
    }
    fn plus(&self, o: &Self) -> Self {
        M(modp::add(self.0, o.0))
    }
    fn times(&self, o: &Self) -> Self {
        M(modp::mul(self.0, o.0))
    }
    fn of_q(q: &Q) -> Self {
        M(modp::from_q(q))
    }
}

impl Coef for Q {
    fn nil() -> Self {
        Q::zero()
    }
    fn unit() -> Self {
        Q::one()
    }
    fn vanishes(&self) -> bool {
        Zero::is_zero(self)
    }
    fn plus(&self, o: &Self) -> Self {
        self + o
    }
    fn times(&self, o: &Self) -> Self {
        self * o
    }
    fn of_q(q: &Q) -> Self {
        q.clone()
    }
}

/// Partitions with parts in 2..=K and weight ≤ N, with their products.
struct PartTable {
    parts: Vec<Partition>,
    index: BTreeMap<Partition, usize>,
    /// mul[i] = [(j, index of parts[i] ∪ parts[j])] over j that fit.
    mul: Vec<Vec<(u32, u32)>>,
    trunc: u32,
    max_part: u32,
}

impl PartTable {
    fn new(trunc: u32, max_part: u32) -> Self {
        let parts: Vec<Partition> = partitions_up_to(trunc, max_part).into_iter().filter(|p| p.multiplicity(1) == 0).collect();
        let index: BTreeMap<Partition, usize> = parts.iter().cloned().enumerate().map(|(i, p)| (p, i)).collect();
        let mul = parts
            .iter()
            .map(|a| {
                parts
                    .iter()
                    .enumerate()
                    .take_while(|(_, b)| a.weight() + b.weight() <= trunc)
                    .map(|(j, b)| (j as u32, index[&a.union(b)] as u32))
                    .collect()
            })
            .collect();
        PartTable { parts, index, mul, trunc, max_part }
    }

    fn len(&self) -> usize {
        self.parts.len()
    }
}

struct GreekVecs<'a, R: Coef> {
    table: &'a PartTable,
    products: BTreeMap<(Partition, Partition), Vec<R>>,
    ab: BTreeMap<(u32, u32), Vec<R>>,
}

impl<'a, R: Coef> GreekVecs<'a, R> {
    fn new(table: &'a PartTable) -> Self {
        GreekVecs { table, products: BTreeMap::new(), ab: BTreeMap::new() }
    }

    fn one(&self) -> Vec<R> {
        let mut v = vec![R::nil(); self.table.len()];
        v[0] = R::unit();
        v
    }

    fn mul(&self, a: &[R], b: &[R]) -> Vec<R> {
        let mut out = vec![R::nil(); self.table.len()];
        for (i, x) in a.iter().enumerate() {
            if x.vanishes() {
                continue;
            }
            for &(j, k) in &self.table.mul[i] {
                let y = &b[j as usize];
                if !y.vanishes() {
                    out[k as usize] = out[k as usize].plus(&x.times(y));
                }
            }
        }
        out
    }

    fn atom(&self, g: Greek, negate: bool) -> Vec<R> {
        let mut v = vec![R::nil(); self.table.len()];
        for k in 2..=self.table.max_part.min(self.table.trunc) {
            let q = g.coeff(k);
            v[self.table.index[&Partition::single(k)]] = R::of_q(&if negate { -q } else { q });
        }
        v
    }

    /// 1/(1 − x) for x without constant term.
    fn geometric(&self, x: &[R]) -> Vec<R> {
        let mut acc = self.one();
        for _ in 0..self.table.trunc / 2 {
            let mut next = self.mul(x, &acc);
            next[0] = next[0].plus(&R::unit());
            acc = next;
        }
        acc
    }

    fn ab(&mut self, a: u32, b: u32) -> Vec<R> {
        if let Some(v) = self.ab.get(&(a, b)) {
            return v.clone();
        }
        let v = if a == 0 && b == 0 {
            self.one()
        } else if a == 0 && b == 1 {
            self.geometric(&self.atom(Greek::Zeta(0), true))
        } else if b > 0 {
            let base = self.ab(0, 1);
            let prev = self.ab(a, b - 1);
            self.mul(&prev, &base)
        } else if a == 1 {
            self.geometric(&self.atom(Greek::Eta(0), false))
        } else {
            let base = self.ab(1, 0);
            let prev = self.ab(a - 1, 0);
            self.mul(&prev, &base)
        };
        self.ab.insert((a, b), v.clone());
        v
    }

    fn product(&mut self, alpha: &Partition, beta: &Partition) -> Vec<R> {
        let key = (alpha.clone(), beta.clone());
        if let Some(v) = self.products.get(&key) {
            return v.clone();
        }
        let v = if let Some(&i) = beta.parts().last() {
            let rest = self.product(alpha, &beta.without(i).unwrap());
            self.mul(&rest, &self.atom(Greek::Zeta(i), false))
        } else if let Some(&i) = alpha.parts().last() {
            let rest = self.product(&alpha.without(i).unwrap(), beta);
            self.mul(&rest, &self.atom(Greek::Eta(i), false))
        } else {
            self.one()
        };
        self.products.insert(key, v.clone());
        v
    }

    fn column(&mut self, t: &GreekPart) -> Vec<R> {
        let p = self.product(&t.alpha, &t.beta);
        let ab = self.ab(t.a, t.b);
        self.mul(&p, &ab)
    }
}

/// [u^j z^j] of (1 ∓ uz)^{−c}.
fn pole_coeff(pole: Option<(Pole, u32)>, j: u32) -> Q {
    match pole {
        None => Q::from_integer((j == 0).into()),
        Some((sign, c)) => {
            let v = qb(binom((j + c - 1) as i64, (c - 1) as i64));
            if sign == Pole::Minus && j % 2 == 1 {
                -v
            } else {
                v
            }
        }
    }
}

/// An unknown of the linear system: a combination of basis columns that
/// share one Greek part.
struct Unknown {
    lead: usize,
    combo: Vec<(usize, Q)>,
}

/// Null space of a small matrix over ℚ, one vector per free column; pivots
/// are taken lowest first.
fn null_vectors(mut m: Vec<Vec<Q>>, n: usize) -> Vec<(usize, Vec<Q>)> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..m.len()).find(|&i| !Zero::is_zero(&m[i][c])) else { continue };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for v in m[r].iter_mut() {
            *v *= &inv;
        }
        for i in 0..m.len() {
            if i != r && !Zero::is_zero(&m[i][c]) {
                let f = m[i][c].clone();
                for j in 0..n {
                    let d = &f * &m[r][j];
                    m[i][j] -= d;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (0..n)
        .filter(|c| !pivots.contains(c))
        .map(|f| {
            let mut v = vec![Q::zero(); n];
            v[f] = Q::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -m[row][f].clone();
            }
            (f, v)
        })
        .collect()
}

/// With `odd`, each Greek part's pole polynomial is constrained to be odd in
/// s = (1−uz)/(1+uz) and to vanish at u = 0.
fn unknowns(basis: &[BasisTerm], odd: bool) -> Vec<Unknown> {
    if !odd {
        return (0..basis.len()).map(|c| Unknown { lead: c, combo: vec![(c, Q::one())] }).collect();
    }
    let mut groups: BTreeMap<&GreekPart, Vec<usize>> = BTreeMap::new();
    for (c, t) in basis.iter().enumerate() {
        groups.entry(&t.greek).or_default().push(c);
    }
    let mut out = Vec::new();
    for cols in groups.into_values() {
        let mut eqs: BTreeMap<Option<i32>, Vec<Q>> = BTreeMap::new();
        for (local, &c) in cols.iter().enumerate() {
            let (sign, cc) = basis[c].pole.expect("rooted basis");
            let p = if sign == Pole::Plus { one_minus_w_pow(cc) } else { one_plus_w_pow(cc) };
            for (e, q) in p.split_s() {
                if e % 2 == 0 {
                    let q = q.constant_value().expect("pole factors are pure in s");
                    eqs.entry(Some(e)).or_insert_with(|| vec![Q::zero(); cols.len()])[local] += q;
                }
            }
            eqs.entry(None).or_insert_with(|| vec![Q::zero(); cols.len()])[local] += Q::one();
        }
        for (f, v) in null_vectors(eqs.into_values().collect(), cols.len()) {
            let combo = v.into_iter().enumerate().filter(|(_, q)| !Zero::is_zero(q)).map(|(l, q)| (cols[l], q)).collect();
            out.push(Unknown { lead: cols[f], combo });
        }
    }
    out.sort_by_key(|u| u.lead);
    out
}

/// Fits `target` (in (z; u; p), truncated at its own order) in the span of
/// `basis`. Free directions of an underdetermined system are set to zero,
/// which favours low-weight terms. A result is returned only if it
/// reproduces every coefficient of the target exactly; a contradiction is
/// reported as `LogObstruction` for unrooted targets.
pub fn fit(target: &Series, basis: &[BasisTerm], opts: &FitOptions) -> Result<Fit> {
    if target.chart() != Chart::Zup {
        return Err(Error::ChartMismatch);
    }
    let rooted = match (basis.iter().all(|t| t.pole.is_some()), basis.iter().all(|t| t.pole.is_none())) {
        (true, false) => true,
        (false, true) => false,
        (true, true) => return Err(Error::Invalid("empty basis".into())),
        (false, false) => return Err(Error::Invalid("basis mixes rooted and unrooted terms".into())),
    };
    let n = target.trunc();
    let k = opts.max_part.unwrap_or(n).max(2);
    let fit_order = opts.fit_order.unwrap_or(n.saturating_sub(3)).min(n);
    for (key, q) in target.iter() {
        if q.is_zero() {
            continue;
        }
        if key.mu.multiplicity(1) > 0 {
            return Err(Error::Structural(format!("target depends on p_1 at {:?}", key)));
        }
        if !key.mu.max_part_at_most(k) {
            return Err(Error::Invalid(format!("target has parts above {} at {:?}", k, key)));
        }
        if key.e != key.c + key.mu.weight() || (!rooted && key.c != 0) {
            return Err(Error::Structural(format!("target is not of closed-form shape at {:?}", key)));
        }
    }
    let table = PartTable::new(n, k);
    let unknowns = unknowns(basis, rooted && opts.odd);
    let ncols = unknowns.len();
    let mut gm: GreekVecs<M> = GreekVecs::new(&table);
    let cols: Vec<Vec<M>> = unknowns.iter().map(|u| gm.column(&basis[u.lead].greek)).collect();
    drop(gm);
    let pole_m: Vec<Vec<u64>> = unknowns
        .iter()
        .map(|u| {
            (0..=n)
                .map(|j| {
                    let v: Q = u.combo.iter().map(|(c, q)| q * pole_coeff(basis[*c].pole, j)).sum();
                    modp::from_q(&v)
                })
                .collect()
        })
        .collect();

    // rows (μ, j) ordered by total order
    let mut rows: Vec<(u32, usize, u32)> = Vec::new();
    for (i, mu) in table.parts.iter().enumerate() {
        let jmax = if rooted { n - mu.weight() } else { 0 };
        for j in 0..=jmax {
            rows.push((mu.weight() + j, i, j));
        }
    }
    rows.sort();
    let fit_rows = rows.iter().filter(|r| r.0 <= fit_order).count();

    let fail = |msg: alloc::string::String| if rooted { Error::Inconsistent(msg) } else { Error::LogObstruction(msg) };
    let row_at = |i: usize, j: u32| -> Vec<u64> { (0..ncols).map(|c| modp::mul(cols[c][i].0, pole_m[c][j as usize])).collect() };
    let rhs_at = |i: usize, j: u32| target.get(table.parts[i].weight() + j, j, table.parts[i].parts());
    let mut ech = ModEchelon::new(ncols);
    let mut used_rows = 0;
    let mut determined: Option<Vec<u64>> = None;
    for &(e, i, j) in &rows[..fit_rows] {
        let rhs = modp::from_q(&rhs_at(i, j)?);
        if let Some(x) = &determined {
            // once the solution is unique, a row only needs a dot product
            let lhs = row_at(i, j).iter().zip(x).fold(0, |acc, (a, b)| modp::add(acc, modp::mul(*a, *b)));
            if lhs != rhs {
                return Err(fail(format!("no combination of {} basis terms matches through order {}", basis.len(), e)));
            }
            continue;
        }
        used_rows += 1;
        if let Push::Inconsistent = ech.push(row_at(i, j), rhs) {
            return Err(fail(format!("no combination of {} basis terms matches through order {}", basis.len(), e)));
        }
        if ech.rank() == ncols {
            determined = Some(ech.solve());
        }
    }
    let mut x = vec![Q::zero(); basis.len()];
    for (u, v) in unknowns.iter().zip(ech.solve()) {
        if v == 0 {
            continue;
        }
        let y = modp::reconstruct(v).ok_or_else(|| {
            Error::InsufficientTruncation(format!("coefficient of {:?} does not lift to a small rational (rank {} of {})", basis[u.lead], ech.rank(), ncols))
        })?;
        for (c, q) in &u.combo {
            x[*c] += &y * q;
        }
    }
    let coeffs: Vec<(BasisTerm, Q)> = x.into_iter().enumerate().filter(|(_, q)| !Zero::is_zero(q)).map(|(c, q)| (basis[c].clone(), q)).collect();

    // exact check on every row, one Greek part at a time
    let mut parts: BTreeMap<&GreekPart, Vec<Q>> = BTreeMap::new();
    for (t, q) in &coeffs {
        let p = parts.entry(&t.greek).or_insert_with(|| vec![Q::zero(); n as usize + 1]);
        for (j, v) in p.iter_mut().enumerate() {
            *v += q * pole_coeff(t.pole, j as u32);
        }
    }
    let mut gq: GreekVecs<Q> = GreekVecs::new(&table);
    let exact: Vec<(Vec<Q>, &Vec<Q>)> = parts.iter().map(|(g, p)| (gq.column(g), p)).collect();
    for &(_, i, j) in &rows {
        let mut v = Q::zero();
        for (g, p) in &exact {
            if !Zero::is_zero(&g[i]) && !Zero::is_zero(&p[j as usize]) {
                v += &g[i] * &p[j as usize];
            }
        }
        if v != rhs_at(i, j)? {
            let at = format!("{:?} u^{}", table.parts[i], j);
            return Err(if ech.rank() < ncols {
                Error::InsufficientTruncation(format!("fit is underdetermined (nullity {}) and misses the data at {}", ncols - ech.rank(), at))
            } else {
                fail(format!("the unique fit misses the data at {}", at))
            });
        }
    }
    let rank = ech.rank();
    let report = FitReport {
        ncols,
        rank,
        nullity: ncols - rank,
        fit_rows,
        used_rows,
        validation_rows: rows.len() - fit_rows,
        constraints: basis.len() - ncols,
        nonzero: coeffs.len(),
    };
    Ok(Fit { coeffs, report })
}

fn data_support(trunc: u32, max_part: Option<u32>) -> (Vec<u32>, u32) {
    let k = max_part.unwrap_or(trunc).max(2);
    ((2..=k).collect(), k)
}

/// F_g in (z; u; p) through z^trunc with p_1 := 0 and p_k := 0 for k > K.
/// In this chart F_g does not involve p_1, so nothing is lost by dropping it.
pub fn rooted_target(g: u32, trunc: u32, max_part: Option<u32>) -> Result<Series> {
    let (parts, k) = data_support(trunc, max_part);
    let fam = compute_f_with(g, trunc, Support::only(&parts, g));
    CoordData::restricted(trunc, |j| (2..=k).contains(&j))?.to_zu(fam.genus(g))
}

/// L_g in (z; p) through z^trunc under the same restriction.
pub fn unrooted_target(g: u32, trunc: u32, max_part: Option<u32>) -> Result<Series> {
    let (parts, k) = data_support(trunc, max_part);
    let fam = compute_f_with(g, trunc, Support::only(&parts, g));
    let l = fam.unroot(g)?.retain(|key| key.mu.multiplicity(1) == 0);
    CoordData::restricted(trunc, |j| (2..=k).contains(&j))?.to_zu(&l)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_sizes() {
        assert_eq!(enumerate_basis(1, Target::F, Bounds::Homogeneous).unwrap().len(), 48);
        assert_eq!(enumerate_basis(1, Target::F, Bounds::Relaxed).unwrap().len(), 96);
        assert_eq!(enumerate_basis(2, Target::L, Bounds::Homogeneous).unwrap().len(), 87);
        assert_eq!(enumerate_basis(2, Target::L, Bounds::Relaxed).unwrap().len(), 255);
        assert!(matches!(enumerate_basis(1, Target::L, Bounds::Homogeneous), Err(Error::LogObstruction(_))));
    }

    #[test]
    fn greek_vectors_match_series() {
        let n = 8;
        let table = PartTable::new(n, n);
        let mut gv: GreekVecs<Q> = GreekVecs::new(&table);
        let t = GreekPart { alpha: Partition::single(1), beta: Partition::empty(), a: 2, b: 1 };
        let v = gv.column(&t);
        let cd = crate::coords::CoordData::new(n).unwrap();
        let s = crate::gfield::GPoly::term(t.mono(), Q::one()).eval(&cd).unwrap();
        for (i, mu) in table.parts.iter().enumerate() {
            assert_eq!(v[i], s.get(mu.weight(), 0, mu.parts()).unwrap(), "{:?}", mu);
        }
    }
}
