//! Closed forms in the basis η_α ζ_β (1−η)^{−a} (1+ζ)^{−b} (1∓uz)^{−c}.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::gfield::{Atom, GPoly, Mono};
use crate::kernel::Pole;
use crate::partition::Partition;
use crate::rational::{binom, fmt_q, is_neg, qb, qi, qpow, Q};
use crate::toprec::{one_minus_w_pow, one_plus_w_pow};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GreekPart {
    pub alpha: Partition,
    pub beta: Partition,
    pub a: u32,
    pub b: u32,
}

impl GreekPart {
    pub fn from_mono(m: &Mono) -> Result<GreekPart> {
        if m.exp(Atom::S) != 0 || m.exp(Atom::C) != 0 {
            return Err(Error::Invalid(format!("{:?} is not a basis monomial", m)));
        }
        let (a, b) = (m.exp(Atom::A), m.exp(Atom::B));
        if a < 0 || b < 0 {
            return Err(Error::Invalid(format!("{:?} has (1−η) or (1+ζ) in the numerator", m)));
        }
        let mut alpha = Vec::new();
        let mut beta = Vec::new();
        for (at, e) in m.atoms() {
            match at {
                Atom::Eta(i) => alpha.extend(core::iter::repeat_n(i, e as usize)),
                Atom::Zeta(i) => beta.extend(core::iter::repeat_n(i, e as usize)),
                _ => {}
            }
        }
        Ok(GreekPart { alpha: Partition::new(alpha), beta: Partition::new(beta), a: a as u32, b: b as u32 })
    }

    pub fn mono(&self) -> Mono {
        let mut m = Mono::ONE.with(Atom::A, self.a as i32).with(Atom::B, self.b as i32);
        for &i in self.alpha.parts() {
            m = m.with(Atom::Eta(i), m.exp(Atom::Eta(i)) + 1);
        }
        for &i in self.beta.parts() {
            m = m.with(Atom::Zeta(i), m.exp(Atom::Zeta(i)) + 1);
        }
        m
    }

    fn factors(&self, latex: bool) -> (String, String) {
        let mut num = String::new();
        let mut push = |name: &str, i: u32, m: usize| {
            if !num.is_empty() {
                num += if latex { " " } else { "*" };
            }
            if latex {
                num += &format!("\\{}_{{{}}}", name, i);
            } else {
                num += &format!("{}{}", name, i);
            }
            if m > 1 {
                num += &if latex { format!("^{{{}}}", m) } else { format!("^{}", m) };
            }
        };
        for (i, m) in self.alpha.distinct() {
            push("eta", i, m);
        }
        for (i, m) in self.beta.distinct() {
            push("zeta", i, m);
        }
        let mut den = String::new();
        let pw = |base: &str, e: u32| {
            if e == 1 {
                format!("({})", base)
            } else if latex {
                format!("({})^{{{}}}", base, e)
            } else {
                format!("({})^{}", base, e)
            }
        };
        if self.a > 0 {
            den += &pw(if latex { "1-\\eta" } else { "1-eta" }, self.a);
        }
        if self.b > 0 {
            den += &pw(if latex { "1+\\zeta" } else { "1+zeta" }, self.b);
        }
        (num, den)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FTerm {
    pub greek: GreekPart,
    pub c: u32,
    pub sign: Pole,
    pub coeff: Q,
}

impl FTerm {
    /// Bounds of the rooted structure theorem, with a + b only bounded above.
    pub fn admissible(&self, g: u32) -> bool {
        let k = if self.sign == Pole::Plus { 3 * g } else { g };
        let w = self.greek.alpha.weight() + self.greek.beta.weight();
        let ell = (self.greek.alpha.len() + self.greek.beta.len()) as u32;
        self.c >= 1 && self.c < 6 * g && k >= (self.c + 1).div_ceil(2) + w && self.greek.a + self.greek.b < ell + 2 * g
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedFormF {
    pub g: u32,
    pub terms: Vec<FTerm>,
}

/// Partial fractions of s^e in 1 − w and 1 + w (s = (1−w)/(1+w)):
/// returns (constant, [(c, coeff)]).
fn s_power_fractions(e: i32) -> (Q, Vec<(u32, Q)>) {
    if e == 0 {
        return (Q::one(), Vec::new());
    }
    let m = e.unsigned_abs() as i64;
    // s^{∓m} = (2 − (1∓w))^m (1∓w)^{−m}
    let mut out = Vec::new();
    let mut cst = Q::zero();
    for j in 0..=m {
        let mut c = qb(binom(m, j)) * qpow(&qi(2), (m - j) as i32);
        if j % 2 == 1 {
            c = -c;
        }
        if j == m {
            cst += c;
        } else {
            out.push(((m - j) as u32, c));
        }
    }
    (cst, out)
}

impl ClosedFormF {
    pub fn from_gpoly(g: u32, f: &GPoly) -> Result<ClosedFormF> {
        let mut acc: BTreeMap<(GreekPart, Pole, u32), Q> = BTreeMap::new();
        let mut constants: BTreeMap<GreekPart, Q> = BTreeMap::new();
        for (m, q) in f.terms() {
            let gp = GreekPart::from_mono(&m.with(Atom::S, 0))?;
            let e = m.exp(Atom::S);
            let (cst, fr) = s_power_fractions(e);
            *constants.entry(gp.clone()).or_insert_with(Q::zero) += &cst * q;
            let sign = if e < 0 { Pole::Plus } else { Pole::Minus };
            for (c, w) in fr {
                *acc.entry((gp.clone(), sign, c)).or_insert_with(Q::zero) += w * q;
            }
        }
        if constants.values().any(|q| !q.is_zero()) {
            return Err(Error::Structural("rooted series has a part without poles at u = ±1/z".into()));
        }
        let terms = acc
            .into_iter()
            .filter(|(_, q)| !q.is_zero())
            .map(|((greek, sign, c), coeff)| FTerm { greek, c, sign, coeff })
            .collect();
        Ok(ClosedFormF { g, terms })
    }

    pub fn to_gpoly(&self) -> GPoly {
        let mut out = GPoly::zero();
        for t in &self.terms {
            let pole = match t.sign {
                Pole::Plus => one_minus_w_pow(t.c),
                Pole::Minus => one_plus_w_pow(t.c),
            };
            out = out.add(&pole.mul_mono(&t.greek.mono(), &t.coeff));
        }
        out
    }

    pub fn coeff_of(&self, greek: &GreekPart, sign: Pole, c: u32) -> Q {
        self.terms.iter().find(|t| &t.greek == greek && t.sign == sign && t.c == c).map(|t| t.coeff.clone()).unwrap_or_else(Q::zero)
    }

    pub fn max_c(&self, sign: Pole) -> u32 {
        self.terms.iter().filter(|t| t.sign == sign).map(|t| t.c).max().unwrap_or(0)
    }

    pub fn to_text(&self) -> String {
        render(self.terms.iter().map(|t| {
            let (num, mut den) = t.greek.factors(false);
            let base = if t.sign == Pole::Plus { "1-u*z" } else { "1+u*z" };
            den += &if t.c == 1 { format!("({})", base) } else { format!("({})^{}", base, t.c) };
            (t.coeff.clone(), num, den)
        }), false)
    }

    pub fn to_latex(&self) -> String {
        render(self.terms.iter().map(|t| {
            let (num, mut den) = t.greek.factors(true);
            let base = if t.sign == Pole::Plus { "1-uz" } else { "1+uz" };
            den += &if t.c == 1 { format!("({})", base) } else { format!("({})^{{{}}}", base, t.c) };
            (t.coeff.clone(), num, den)
        }), true)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LTerm {
    pub greek: GreekPart,
    pub coeff: Q,
}

impl LTerm {
    pub fn admissible(&self, g: u32) -> bool {
        let w = self.greek.alpha.weight() + self.greek.beta.weight();
        let ell = (self.greek.alpha.len() + self.greek.beta.len()) as u32;
        g >= 2 && w <= 3 * (g - 1) && self.greek.a + self.greek.b <= ell + 2 * g - 2
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedFormL {
    pub g: u32,
    pub terms: Vec<LTerm>,
    /// Coefficients of ln 1/(1−η) and ln 1/(1+ζ).
    pub log_eta: Q,
    pub log_zeta: Q,
}

impl ClosedFormL {
    pub fn from_gpoly(g: u32, l: &GPoly, log_eta: Q, log_zeta: Q) -> Result<ClosedFormL> {
        let mut terms = Vec::new();
        for (m, q) in l.terms() {
            terms.push(LTerm { greek: GreekPart::from_mono(m)?, coeff: q.clone() });
        }
        terms.sort_by(|x, y| x.greek.cmp(&y.greek));
        Ok(ClosedFormL { g, terms, log_eta, log_zeta })
    }

    pub fn to_gpoly(&self) -> GPoly {
        let mut out = GPoly::zero();
        for t in &self.terms {
            out.add_term(t.greek.mono(), t.coeff.clone());
        }
        out
    }

    pub fn has_logs(&self) -> bool {
        !self.log_eta.is_zero() || !self.log_zeta.is_zero()
    }

    pub fn coeff_of(&self, greek: &GreekPart) -> Q {
        self.terms.iter().find(|t| &t.greek == greek).map(|t| t.coeff.clone()).unwrap_or_else(Q::zero)
    }

    fn log_parts(&self, latex: bool) -> Vec<(Q, String, String)> {
        let mut v = Vec::new();
        if !self.log_eta.is_zero() {
            v.push((self.log_eta.clone(), String::from(if latex { "\\ln\\frac{1}{1-\\eta}" } else { "ln(1/(1-eta))" }), String::new()));
        }
        if !self.log_zeta.is_zero() {
            v.push((self.log_zeta.clone(), String::from(if latex { "\\ln\\frac{1}{1+\\zeta}" } else { "ln(1/(1+zeta))" }), String::new()));
        }
        v
    }

    pub fn to_text(&self) -> String {
        let mut parts = self.log_parts(false);
        parts.extend(self.terms.iter().map(|t| {
            let (n, d) = t.greek.factors(false);
            (t.coeff.clone(), n, d)
        }));
        render(parts.into_iter(), false)
    }

    pub fn to_latex(&self) -> String {
        let mut parts = self.log_parts(true);
        parts.extend(self.terms.iter().map(|t| {
            let (n, d) = t.greek.factors(true);
            (t.coeff.clone(), n, d)
        }));
        render(parts.into_iter(), true)
    }
}

fn render(terms: impl Iterator<Item = (Q, String, String)>, latex: bool) -> String {
    let mut out = String::new();
    for (q, num, den) in terms {
        let neg = is_neg(&q);
        let a = if neg { -q } else { q };
        if out.is_empty() {
            if neg {
                out += "-";
            }
        } else {
            out += if neg { " - " } else { " + " };
        }
        let coeff = if latex && !a.denom().is_one() { format!("\\frac{{{}}}{{{}}}", a.numer(), a.denom()) } else { fmt_q(&a) };
        let body = match (num.is_empty(), den.is_empty()) {
            (true, true) => coeff,
            (false, true) => {
                if a.is_one() {
                    num
                } else if latex {
                    format!("{} {}", coeff, num)
                } else {
                    format!("{}*{}", coeff, num)
                }
            }
            (n_empty, false) => {
                let n = if n_empty { String::from("1") } else { num };
                if latex {
                    let lead = if a.is_one() { String::new() } else { format!("{} ", coeff) };
                    format!("{}\\frac{{{}}}{{{}}}", lead, n, den)
                } else if a.is_one() {
                    format!("{}/({})", n, den)
                } else {
                    format!("{}*{}/({})", coeff, n, den)
                }
            }
        };
        out += &body;
    }
    if out.is_empty() {
        out += "0";
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::qf;

    #[test]
    fn partial_fractions_round_trip() {
        for e in -6..=6 {
            let s = GPoly::s_pow(e);
            let (cst, fr) = s_power_fractions(e);
            let mut back = GPoly::constant(cst);
            for (c, q) in fr {
                let p = if e < 0 { one_minus_w_pow(c) } else { one_plus_w_pow(c) };
                back = back.add(&p.scale(&q));
            }
            assert_eq!(back, s, "e = {}", e);
        }
    }

    #[test]
    fn render_text() {
        let gp = GreekPart { alpha: Partition::new(alloc::vec![1]), beta: Partition::empty(), a: 2, b: 0 };
        let cf = ClosedFormF { g: 1, terms: alloc::vec![FTerm { greek: gp, c: 3, sign: Pole::Plus, coeff: qf(-1, 12) }] };
        assert_eq!(cf.to_text(), "-1/12*eta1/((1-eta)^2(1-u*z)^3)");
        assert!(cf.to_latex().contains("\\frac{1}{12}"));
    }
}
