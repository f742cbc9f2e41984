//! Topological recursion in the s coordinate. With u = (1−s)/(z(1+s)),
//!   du/(u₀ − u) = −(1+s₀) ds / ((1+s)(s − s₀)),
//! so F_g(s₀) = s₀⁻¹ Σ_{s=0,∞} Res −(1+s₀)/((1+s)(s−s₀)) · (xtP/Y) · H_g ds,
//! where the explicit powers of z cancel. Near s = 0 the local variable is s,
//! near s = ∞ it is r = 1/s; in both cases 1 ∓ uz = 2λ/(1+λ).

use alloc::vec;
use alloc::vec::Vec;

use crate::calculus::GammaCalc;
use crate::error::{Error, Result};
use crate::gfield::GPoly;
use crate::kernel::{expand_xtpy, Pole};
use crate::laurent::gen_binom;
use crate::rational::{qf, qi, qpow, Q};
use num_traits::One;

/// Truncated Laurent series in a local variable: Σ c[j] λ^{min + j}, known
/// through λ^{min + len − 1}.
#[derive(Clone, Debug)]
struct LSer {
    min: i32,
    c: Vec<GPoly>,
}

impl LSer {
    fn max(&self) -> i32 {
        self.min + self.c.len() as i32 - 1
    }

    fn get(&self, e: i32) -> GPoly {
        if e < self.min || e > self.max() {
            GPoly::zero()
        } else {
            self.c[(e - self.min) as usize].clone()
        }
    }

    fn mul(&self, o: &LSer) -> LSer {
        let min = self.min + o.min;
        let max = (self.min + o.max()).min(self.max() + o.min);
        let c = (min..=max)
            .map(|e| {
                let mut acc = GPoly::zero();
                for i in self.min..=self.max() {
                    let j = e - i;
                    if j >= o.min && j <= o.max() {
                        acc = acc.add(&self.get(i).mul(&o.get(j)));
                    }
                }
                acc
            })
            .collect();
        LSer { min, c }
    }
}

fn s0_pow(e: i32) -> GPoly {
    GPoly::s_pow(e)
}

/// −(1+s₀)/((1+λ)(λ−s₀)) at s = 0 (λ = s) or (1+s₀)/((1+r)(1−s₀r)) at s = ∞,
/// through λ^upto.
fn kernel_factor(pole: Pole, upto: i32) -> LSer {
    let one_plus_s0 = GPoly::one().add(&GPoly::s());
    let c = (0..=upto.max(0))
        .map(|n| {
            let mut acc = GPoly::zero();
            for j in 0..=n {
                let i = n - j;
                let sign = if i % 2 == 0 { Q::one() } else { -Q::one() };
                let p = match pole {
                    Pole::Plus => s0_pow(-j - 1),
                    Pole::Minus => s0_pow(j),
                };
                acc = acc.add(&p.scale(&sign));
            }
            acc.mul(&one_plus_s0)
        })
        .collect();
    LSer { min: 0, c }
}

/// xtP/Y in the local variable λ, through λ^upto.
fn xtpy_local(pole: Pole, upto: i32) -> Result<LSer> {
    let exp = expand_xtpy(pole, upto.max(0) as u32)?;
    let min = exp.min_exp;
    let upto = upto.max(min);
    let mut c = vec![GPoly::zero(); (upto - min + 1) as usize];
    // v^j = 2^j λ^j (1+λ)^{-j}
    for j in min..=exp.max_exp().min(upto) {
        let mj = exp.coeff(j);
        if mj.is_zero() {
            continue;
        }
        let pre = qpow(&qi(2), j);
        for i in 0..=(upto - j) {
            let w = gen_binom(-(j as i64), i as i64) * &pre;
            let slot = (j + i - min) as usize;
            c[slot] = c[slot].add(&mj.scale(&w));
        }
    }
    Ok(LSer { min, c })
}

/// Res at one pole of the integrand, as an element with S standing for s₀.
pub fn residue(pole: Pole, h: &GPoly) -> Result<GPoly> {
    let parts = h.split_s();
    if parts.is_empty() {
        return Ok(GPoly::zero());
    }
    // H in the local variable: s^e = λ^e at s = 0, r^{-e} at s = ∞
    let local: Vec<(i32, &GPoly)> = parts.iter().map(|(e, c)| (if pole == Pole::Plus { *e } else { -*e }, c)).collect();
    let lowest = local.iter().map(|x| x.0).min().unwrap();
    let need = -1 - lowest;
    let m_min = if pole == Pole::Plus { 0 } else { -2 };
    if need < m_min {
        return Ok(GPoly::zero());
    }
    let km = kernel_factor(pole, need - m_min).mul(&xtpy_local(pole, need)?);
    if km.max() < need {
        return Err(Error::InsufficientTruncation("local expansion too short for residue".into()));
    }
    let mut acc = GPoly::zero();
    for (e, c) in local {
        let k = -1 - e;
        if k >= km.min {
            acc = acc.add(&c.mul(&km.get(k)));
        }
    }
    Ok(acc)
}

/// H₁ = F₀⁽²⁾ = u²z²/(1−uz)⁴ = (1−s²)²/(16 s⁴).
pub fn h1() -> GPoly {
    GPoly::s_pow(-4).add(&GPoly::s_pow(-2).scale(&qi(-2))).add(&GPoly::one()).scale(&qf(1, 16))
}

/// One step of the recursion from F_1..F_{g−1} (`lower[h−1]` = F_h).
pub fn toprec_step(g: u32, lower: &[GPoly], calc: &mut GammaCalc) -> Result<GPoly> {
    if g == 0 || lower.len() + 1 < g as usize {
        return Err(Error::Invalid("toprec needs g ≥ 1 and all lower genera".into()));
    }
    let h = if g == 1 {
        h1()
    } else {
        let mut h = calc.apply(&lower[g as usize - 2])?;
        for g1 in 1..g {
            h = h.add(&lower[g1 as usize - 1].mul(&lower[(g - g1) as usize - 1]));
        }
        h
    };
    let total = residue(Pole::Plus, &h)?.add(&residue(Pole::Minus, &h)?);
    let f = total.mul(&GPoly::s_pow(-1));
    if !f.is_odd() {
        return Err(Error::NotOdd);
    }
    Ok(f)
}

/// F_1..F_gmax as elements of the Greek ring (S is s = (1−uz)/(1+uz)).
pub fn toprec_family(gmax: u32) -> Result<Vec<GPoly>> {
    let mut calc = GammaCalc::new();
    let mut out: Vec<GPoly> = Vec::new();
    for g in 1..=gmax {
        let f = toprec_step(g, &out, &mut calc)?;
        out.push(f);
    }
    Ok(out)
}

pub fn toprec_f(g: u32) -> Result<GPoly> {
    Ok(toprec_family(g)?.pop().unwrap())
}

/// Orders of the poles at u = 1/z and u = −1/z (s = 0 and s = ∞).
pub fn pole_orders(f: &GPoly) -> (i32, i32) {
    match f.s_range() {
        Some((lo, hi)) => ((-lo).max(0), hi.max(0)),
        None => (0, 0),
    }
}

/// (1 − uz)^{−c} = ((1+s)/(2s))^c.
pub fn one_minus_w_pow(c: u32) -> GPoly {
    GPoly::one().add(&GPoly::s()).mul(&GPoly::s_pow(-1)).scale(&qf(1, 2)).pow(c)
}

/// (1 + uz)^{−c} = ((1+s)/2)^c.
pub fn one_plus_w_pow(c: u32) -> GPoly {
    GPoly::one().add(&GPoly::s()).scale(&qf(1, 2)).pow(c)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn h1_is_the_planar_two_face_series() {
        // w = (1−s)/(1+s), 1 − w = 2s/(1+s)
        let expect = GPoly::one().sub(&GPoly::s_pow(2)).pow(2).mul(&GPoly::s_pow(-4)).scale(&qf(1, 16));
        assert_eq!(h1(), expect);
    }

    #[test]
    fn genus_one_is_odd_with_bounded_poles() {
        let f1 = toprec_f(1).unwrap();
        assert!(f1.is_odd());
        let (p, m) = pole_orders(&f1);
        assert!(p <= 5 && m <= 1, "{} {}", p, m);
    }
}
