//! The kernel Y = 1 − xt(2F₀ + θ) under p_i = 0 for i > K: exact polynomial
//! structure, antisymmetry, Newton polygon of N(u), Taylor data of 2F₀ + θ
//! at u = ±1/z and the local expansions of xtP/Y.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::gfield::{GPoly, Mono};
use crate::greek::{lin_q, theta_inverse_q, Greek, Lin};
use crate::laurent::{gen_binom, LaurentS};
use crate::partition::Partition;
use crate::rational::{binom, factorial, falling, qb, qf, qi, qpow, Q};
use crate::series::{Chart, Key, Series};

/// Laurent polynomial in u and z with polynomial coefficients in p.
#[derive(Clone, PartialEq, Eq, Default, Debug)]
pub struct KPoly(pub BTreeMap<(i32, i32, Partition), Q>);

impl KPoly {
    pub fn zero() -> Self {
        KPoly(BTreeMap::new())
    }

    pub fn mono(u: i32, z: i32, mu: Partition, q: Q) -> Self {
        let mut p = KPoly::zero();
        p.add_term(u, z, mu, q);
        p
    }

    pub fn one() -> Self {
        KPoly::mono(0, 0, Partition::empty(), Q::one())
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add_term(&mut self, u: i32, z: i32, mu: Partition, q: Q) {
        if q.is_zero() {
            return;
        }
        let key = (u, z, mu);
        let e = self.0.entry(key.clone()).or_insert_with(Q::zero);
        *e += q;
        if e.is_zero() {
            self.0.remove(&key);
        }
    }

    pub fn add(&self, o: &KPoly) -> KPoly {
        let mut out = self.clone();
        for ((u, z, mu), q) in &o.0 {
            out.add_term(*u, *z, mu.clone(), q.clone());
        }
        out
    }

    pub fn sub(&self, o: &KPoly) -> KPoly {
        self.add(&o.scale(&-Q::one()))
    }

    pub fn scale(&self, c: &Q) -> KPoly {
        let mut out = KPoly::zero();
        for ((u, z, mu), q) in &self.0 {
            out.add_term(*u, *z, mu.clone(), q * c);
        }
        out
    }

    pub fn mul(&self, o: &KPoly) -> KPoly {
        let mut out = KPoly::zero();
        for ((u1, z1, m1), q1) in &self.0 {
            for ((u2, z2, m2), q2) in &o.0 {
                out.add_term(u1 + u2, z1 + z2, m1.union(m2), q1 * q2);
            }
        }
        out
    }

    pub fn shift(&self, du: i32, dz: i32) -> KPoly {
        KPoly(self.0.iter().map(|((u, z, mu), q)| ((u + du, z + dz, mu.clone()), q.clone())).collect())
    }

    pub fn u_range(&self) -> Option<(i32, i32)> {
        let lo = self.0.keys().map(|k| k.0).min()?;
        let hi = self.0.keys().map(|k| k.0).max()?;
        Some((lo, hi))
    }

    fn u_slice(&self, j: i32) -> KPoly {
        KPoly(self.0.iter().filter(|(k, _)| k.0 == j).map(|(k, q)| (k.clone(), q.clone())).collect())
    }

    /// u ↦ 1/(z²u).
    pub fn invert_u(&self) -> KPoly {
        KPoly(self.0.iter().map(|((u, z, mu), q)| ((-u, z - 2 * u, mu.clone()), q.clone())).collect())
    }

    /// Exact division by (1 + sign·zu).
    pub fn div_linear(&self, sign: i32) -> Result<KPoly> {
        let (_, hi) = match self.u_range() {
            Some(r) => r,
            None => return Ok(KPoly::zero()),
        };
        let mut rest = self.clone();
        let mut quo = KPoly::zero();
        let factor = KPoly::one().add(&KPoly::mono(1, 1, Partition::empty(), qi(sign as i64)));
        while let Some((lo, _)) = rest.u_range() {
            if lo >= hi {
                return Err(Error::Structural(format!("division by (1{}zu) is not exact", if sign > 0 { "+" } else { "-" })));
            }
            let c = rest.u_slice(lo);
            quo = quo.add(&c);
            rest = rest.sub(&c.mul(&factor));
        }
        Ok(quo)
    }

    /// Keeps p_i for i ≤ k only.
    pub fn restrict(&self, k: u32) -> KPoly {
        KPoly(self.0.iter().filter(|(key, _)| key.2.largest().unwrap_or(0) <= k).map(|(a, b)| (a.clone(), b.clone())).collect())
    }

    /// As a (z; u; p) series; all exponents must be nonnegative.
    pub fn to_series(&self, trunc: u32) -> Result<Series> {
        let mut out = Series::zero(Chart::Zup, trunc);
        for ((u, z, mu), q) in &self.0 {
            if *u < 0 || *z < 0 {
                return Err(Error::Invalid("negative exponent in polynomial to series".into()));
            }
            out.add_term(Key::new(*z as u32, *u as u32, mu.clone()), q.clone());
        }
        Ok(out)
    }

    /// Substitutes numbers for p_1..p_K; result keyed by (u, z).
    pub fn specialize(&self, values: &[Q]) -> BTreeMap<(i32, i32), Q> {
        let mut out: BTreeMap<(i32, i32), Q> = BTreeMap::new();
        for ((u, z, mu), q) in &self.0 {
            let v = mu.parts().iter().fold(q.clone(), |acc, &k| acc * &values[k as usize - 1]);
            *out.entry((*u, *z)).or_insert_with(Q::zero) += v;
        }
        out.retain(|_, q| !q.is_zero());
        out
    }
}

/// (1 + zu)^n for n ≥ 0.
fn one_plus_w(n: u32) -> KPoly {
    let mut p = KPoly::zero();
    for j in 0..=n {
        p.add_term(j as i32, j as i32, Partition::empty(), qb(binom(n as i64, j as i64)));
    }
    p
}

pub struct KernelData {
    pub k: u32,
    /// 1 + γ restricted to p_1..p_K.
    pub one_plus_gamma: KPoly,
    /// 2F₀ + θ.
    pub g: KPoly,
    /// u^K (2F₀ + θ) = (1 + zu) Q(u).
    pub q: KPoly,
    /// (1+zu)(1+γ)u^{K−1} − zQ(u) = (1 − zu) N(u).
    pub n: KPoly,
}

pub fn kernel_build(k: u32) -> Result<KernelData> {
    if k < 1 {
        return Err(Error::Invalid("K must be at least 1".into()));
    }
    let mut one_plus_gamma = KPoly::one();
    let mut f0_inner = KPoly::one();
    let mut theta = KPoly::zero();
    for kk in 1..=k {
        let p = Partition::single(kk);
        let ki = kk as i64;
        one_plus_gamma.add_term(0, kk as i32, p.clone(), qb(binom(2 * ki - 1, ki)));
        for l in 1..ki {
            f0_inner.add_term(l as i32, (ki + l) as i32, p.clone(), -qb(binom(2 * ki - 1, ki + l)));
        }
        // p_k x^{-k} = p_k u^{-k} (1+zu)^{2k}
        theta = theta.add(&one_plus_w(2 * kk).shift(-(kk as i32), 0).mul(&KPoly::mono(0, 0, p, Q::one())));
    }
    let f0 = one_plus_w(1).mul(&f0_inner);
    let g = f0.scale(&qi(2)).add(&theta);
    let q = g.shift(k as i32, 0).div_linear(1)?;
    let r = one_plus_w(1).mul(&one_plus_gamma).shift(k as i32 - 1, 0).sub(&q.shift(0, 1));
    let n = r.div_linear(-1)?;
    Ok(KernelData { k, one_plus_gamma, g, q, n })
}

impl KernelData {
    pub fn n_degree(&self) -> i32 {
        self.n.u_range().map(|r| r.1).unwrap_or(-1)
    }

    /// Checks u^{K−1}(1+γ)(1+zu)·Y = N(u)(1−zu) through z^trunc, with Y expanded
    /// from its definition and F₀ given as a series.
    pub fn check_factorization(&self, f0: &Series, trunc: u32) -> Result<bool> {
        let k = self.k;
        let f0k = f0.restrict_p(|i| i <= k).truncate(trunc);
        let mut theta_uk = KPoly::zero();
        for kk in 1..=k {
            theta_uk = theta_uk.add(&one_plus_w(2 * kk).shift((k - kk) as i32, 0).mul(&KPoly::mono(0, 0, Partition::single(kk), Q::one())));
        }
        // u^K (2F₀ + θ)
        let uk = Series::monomial(Chart::Zup, trunc, 0, k, Partition::empty(), Q::one());
        let g_uk = f0k.scale(&qi(2)).mul(&uk)?.add(&theta_uk.to_series(trunc)?)?;
        let inv = one_plus_w(1).to_series(trunc)?.inverse()?;
        let z = Series::var_order(Chart::Zup, trunc);
        let s1 = one_plus_w(1).mul(&self.one_plus_gamma).shift(k as i32 - 1, 0).to_series(trunc)?;
        let lhs = s1.sub(&z.mul(&g_uk)?.mul(&inv)?)?;
        let rhs = self.n.mul(&KPoly::one().sub(&KPoly::mono(1, 1, Partition::empty(), Q::one()))).to_series(trunc)?;
        Ok(lhs.agrees_with(&rhs))
    }

    /// Y(u) + Y(1/(z²u)) = 0, as 2(1+zu)²(1+γ) = zu (G(u) + G(1/(z²u))) exactly.
    pub fn is_antisymmetric(&self) -> bool {
        let lhs = one_plus_w(2).mul(&self.one_plus_gamma).scale(&qi(2));
        let rhs = self.g.add(&self.g.invert_u()).shift(1, 1);
        lhs == rhs
    }

    /// N(u) = (zu)^{2(K−1)} N(1/(z²u)).
    pub fn n_is_palindromic(&self) -> bool {
        let d = 2 * (self.k as i32 - 1);
        self.n.invert_u().shift(d, d) == self.n
    }

    /// Root valuations (in z) of N(u) with p specialised, with multiplicities,
    /// read off the lower Newton polygon.
    pub fn newton_valuations(&self, values: &[Q]) -> Vec<(Q, u32)> {
        let spec = self.n.specialize(values);
        let mut val: BTreeMap<i32, i32> = BTreeMap::new();
        for (u, z) in spec.keys() {
            let e = val.entry(*u).or_insert(*z);
            *e = (*e).min(*z);
        }
        let pts: Vec<(i32, i32)> = val.into_iter().collect();
        let mut hull: Vec<(i32, i32)> = Vec::new();
        for p in pts {
            while hull.len() >= 2 {
                let (a, b) = (hull[hull.len() - 2], hull[hull.len() - 1]);
                // drop b if it lies on or above segment a–p
                let cross = (b.0 - a.0) as i64 * (p.1 - a.1) as i64 - (b.1 - a.1) as i64 * (p.0 - a.0) as i64;
                if cross <= 0 {
                    hull.pop();
                } else {
                    break;
                }
            }
            hull.push(p);
        }
        let mut out: Vec<(Q, u32)> = Vec::new();
        for w in hull.windows(2) {
            let (a, b) = (w[0], w[1]);
            let v = qf(-(b.1 - a.1) as i64, (b.0 - a.0) as i64);
            match out.last_mut() {
                Some(last) if last.0 == v => last.1 += (b.0 - a.0) as u32,
                _ => out.push((v, (b.0 - a.0) as u32)),
            }
        }
        out
    }

    /// [v^a] of 2F₀ + θ at w = uz = 1 − v (plus) or w = v − 1 (minus),
    /// as a constant and the coefficients of p_k z^k, k = 1..K.
    pub fn taylor_direct(&self, pole: Pole, a: u32) -> (Q, Vec<Q>) {
        let mut cst = Q::zero();
        let mut lin = vec![Q::zero(); self.k as usize];
        for ((j, _, mu), q) in &self.g.0 {
            // plus: w^j = (1−v)^j; minus: w^j = (−1)^j (1−v)^j
            let mut c = gen_binom(*j as i64, a as i64) * q;
            if !a.is_multiple_of(2) {
                c = -c;
            }
            if pole == Pole::Minus && j.rem_euclid(2) == 1 {
                c = -c;
            }
            match mu.len() {
                0 => cst += c,
                1 => lin[mu.parts()[0] as usize - 1] += c,
                _ => unreachable!("2F₀ + θ is linear in p"),
            }
        }
        (cst, lin)
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, PartialOrd, Ord, Hash)]
pub enum Pole {
    /// u = 1/z, local variable 1 − uz.
    Plus,
    /// u = −1/z, local variable 1 + uz.
    Minus,
}

/// Taylor coefficient of 2F₀ + θ at the pole, in powers of (1 ∓ uz), as a
/// constant plus a Greek linear combination (independent of K).
pub fn taylor_closed(pole: Pole, a: u32) -> (Q, Lin<Q>) {
    match (pole, a) {
        (Pole::Plus, 0) => (qi(4), lin_q(&[(Greek::Gamma, qi(4))])),
        (Pole::Plus, 1) => (qi(-2), lin_q(&[(Greek::Eta(0), qi(2))])),
        (Pole::Minus, 0) => (Q::zero(), Lin::new()),
        (Pole::Minus, 1) => (qi(2), lin_q(&[(Greek::Zeta(0), qi(2))])),
        _ => {
            let mut sum = LaurentS::zero();
            for i in 0..=((a - 1) / 2) {
                let e = if pole == Pole::Plus { -2 * i as i32 } else { 2 * i as i32 };
                sum.add_term(e, qb(binom(a as i64 - 1, 2 * i as i64)));
            }
            let pre = match pole {
                Pole::Plus => LaurentS::from_pairs(&[(-3, qi(1)), (-1, qi(-1))]),
                Pole::Minus => LaurentS::from_pairs(&[(1, qi(1)), (-1, qi(-1))]),
            };
            let img = pre.mul(&sum).scale(&qpow(&qi(2), -(a as i32)));
            (Q::zero(), theta_inverse_q(&img).expect("odd by construction"))
        }
    }
}

pub fn taylor_gpoly(pole: Pole, a: u32) -> GPoly {
    let (c, l) = taylor_closed(pole, a);
    GPoly::constant(c).add(&GPoly::from_lin(&l))
}

/// [p_k z^k] of a constant-plus-linear Taylor coefficient.
pub fn lin_coeff(l: &Lin<Q>, k: u32) -> Q {
    l.iter().fold(Q::zero(), |acc, (g, q)| acc + q * g.coeff(k))
}

/// Power series with ring coefficients: Σ_j coeffs[j] v^{min_exp + j}.
#[derive(Clone, Debug, PartialEq)]
pub struct LocalExp {
    pub pole: Pole,
    pub min_exp: i32,
    pub coeffs: Vec<GPoly>,
}

impl LocalExp {
    /// Exponent of the last known coefficient.
    pub fn max_exp(&self) -> i32 {
        self.min_exp + self.coeffs.len() as i32 - 1
    }

    pub fn coeff(&self, e: i32) -> GPoly {
        if e < self.min_exp || e > self.max_exp() {
            return GPoly::zero();
        }
        self.coeffs[(e - self.min_exp) as usize].clone()
    }
}

/// Inverse of a power series whose constant term is a single monomial.
pub fn series_inverse(e: &[GPoly], order: usize) -> Result<Vec<GPoly>> {
    let lead = e.first().ok_or(Error::NotUnit)?;
    if lead.len() != 1 {
        return Err(Error::NotUnit);
    }
    let (m, q) = lead.terms().next().unwrap();
    let mut inv_m = Mono::ONE;
    for (a, x) in m.atoms() {
        if matches!(a, crate::gfield::Atom::Eta(_) | crate::gfield::Atom::Zeta(_)) {
            return Err(Error::NotUnit);
        }
        inv_m = inv_m.with(a, -x);
    }
    let inv0 = GPoly::term(inv_m, q.recip());
    let mut out = vec![inv0.clone()];
    for n in 1..=order {
        let mut acc = GPoly::zero();
        for j in 1..=n.min(e.len() - 1) {
            acc = acc.add(&e[j].mul(&out[n - j]));
        }
        out.push(acc.mul(&inv0).neg());
    }
    Ok(out)
}

/// Expansion of xtP/Y at the pole in v = 1 ∓ uz, through v^order.
/// xtP/Y = s / ((1+γ)(1+w)²/w − (2F₀+θ)).
pub fn expand_xtpy(pole: Pole, order: u32) -> Result<LocalExp> {
    let c_inv = GPoly::gamma().add(&GPoly::one());
    let order = order as usize;
    match pole {
        Pole::Plus => {
            // s = v/(2−v); (1+w)²/w = (2−v)²/(1−v) = 4 + v² + v³ + …
            let h = |j: usize| match j {
                0 => qi(4),
                1 => Q::zero(),
                _ => Q::one(),
            };
            let dn: Vec<GPoly> = (0..=order + 1).map(|j| c_inv.scale(&h(j)).sub(&taylor_gpoly(pole, j as u32))).collect();
            if !dn[0].is_zero() {
                return Err(Error::Structural("kernel does not vanish at u = 1/z".into()));
            }
            // xtP/Y = 1/((2−v)·Dn/v)
            let e: Vec<GPoly> = (0..=order).map(|j| dn[j + 1].scale(&qi(2)).sub(&dn[j])).collect();
            Ok(LocalExp { pole, min_exp: 0, coeffs: series_inverse(&e, order)? })
        }
        Pole::Minus => {
            // s = (2−v)/v; (1+w)²/w = −v²/(1−v)
            let h = |j: usize| if j >= 2 { qi(-1) } else { Q::zero() };
            let dn: Vec<GPoly> = (0..=order + 3).map(|j| c_inv.scale(&h(j)).sub(&taylor_gpoly(pole, j as u32))).collect();
            if !dn[0].is_zero() {
                return Err(Error::Structural("kernel does not vanish at u = −1/z".into()));
            }
            // xtP/Y = v^{-2} (2 − v) / (Dn/v)
            let e: Vec<GPoly> = (0..=order + 2).map(|j| dn[j + 1].clone()).collect();
            let inv = series_inverse(&e, order + 2)?;
            let coeffs: Vec<GPoly> = (0..=order + 2)
                .map(|j| {
                    let mut c = inv[j].scale(&qi(2));
                    if j > 0 {
                        c = c.sub(&inv[j - 1]);
                    }
                    c
                })
                .collect();
            Ok(LocalExp { pole, min_exp: -2, coeffs })
        }
    }
}

/// Univariate rational power series through y^order.
type Ps = Vec<Q>;

fn ps_mul(a: &Ps, b: &Ps) -> Ps {
    let n = a.len().min(b.len());
    (0..n).map(|m| (0..=m).fold(Q::zero(), |acc, j| acc + &a[j] * &b[m - j])).collect()
}

fn ps_pow(a: &Ps, e: u32) -> Ps {
    let mut out = vec![Q::zero(); a.len()];
    out[0] = Q::one();
    (0..e).fold(out, |acc, _| ps_mul(&acc, a))
}

fn ps_add(a: &Ps, b: &Ps, sb: i64) -> Ps {
    a.iter().zip(b).map(|(x, y)| x + y * qi(sb)).collect()
}

/// The four lattice-path series D_a, T_a, D̃_a, T̃_a: (closed form, direct double sum).
pub fn lattice_oracles(a: u32, order: usize) -> [(Ps, Ps); 4] {
    let n = order + 1;
    let e: Ps = (0..n).map(|k| qb(binom(2 * k as i64, k as i64))).collect();
    let one: Ps = (0..n).map(|k| if k == 0 { Q::one() } else { Q::zero() }).collect();
    let inv_1m4y: Ps = (0..n).map(|k| qpow(&qi(4), k as i32)).collect();
    let one_m4y: Ps = (0..n).map(|k| if k == 0 { Q::one() } else if k == 1 { qi(-4) } else { Q::zero() }).collect();
    let root = ps_mul(&one_m4y, &e);
    let m4y: Ps = (0..n).map(|k| if k == 1 { qi(-4) } else { Q::zero() }).collect();
    let pre = qb(factorial(a as u64)) / qpow(&qi(2), a as i32 + 1);
    let scale = |p: Ps| -> Ps { p.into_iter().map(|x| x * &pre).collect() };
    let base = ps_mul(&e, &ps_add(&inv_1m4y, &one, -1));
    let d_closed = scale(ps_mul(&base, &ps_pow(&ps_add(&e, &one, -1), a - 1)));
    let t_closed = scale(ps_mul(&base, &ps_pow(&ps_add(&e, &one, 1), a - 1)));
    let tbase = ps_mul(&m4y, &e);
    let dt_closed = scale(ps_mul(&tbase, &ps_pow(&ps_add(&root, &one, -1), a - 1)));
    let tt_closed = scale(ps_mul(&tbase, &ps_pow(&ps_add(&root, &one, 1), a - 1)));
    let direct = |shift: i64, alternating: bool| -> Ps {
        (0..n as i64)
            .map(|k| {
                (1..=k).fold(Q::zero(), |acc, l| {
                    let mut term = qb(falling(l + shift, a)) * qb(binom(2 * k, k + l));
                    if alternating && l % 2 == 1 {
                        term = -term;
                    }
                    acc + term
                })
            })
            .collect()
    };
    [
        (d_closed, direct(0, false)),
        (t_closed, direct(a as i64 - 1, false)),
        (dt_closed, direct(0, true)),
        (tt_closed, direct(a as i64 - 1, true)),
    ]
}
