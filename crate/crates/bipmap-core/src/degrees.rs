//! Greek and pole degrees of monomials in 1/(1−η), 1/(1+ζ), η_i, ζ_i,
//! 1/(1−uz), 1/(1+uz) (and uz), and Γ acting termwise on such monomials.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use num_traits::{One, Zero};

use crate::calculus::GammaCalc;
use crate::error::{Error, Result};
use crate::gfield::{Atom, GPoly, Mono};
use crate::rational::{qi, Q};

/// coef · mono · w^w · (1−w)^{−cp} · (1+w)^{−cm}, w = uz; `mono` has no s or C.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct GTerm {
    pub coef: Q,
    pub mono: Mono,
    pub w: i32,
    pub cp: i32,
    pub cm: i32,
}

type Shape = (Mono, i32, i32, i32);

impl GTerm {
    pub fn new(coef: Q, mono: Mono, w: i32, cp: i32, cm: i32) -> Self {
        GTerm { coef, mono, w, cp, cm }
    }

    fn shape(&self) -> Shape {
        (self.mono, self.w, self.cp, self.cm)
    }

    fn times(&self, o: &GTerm) -> GTerm {
        GTerm::new(&self.coef * &o.coef, self.mono.mul(&o.mono), self.w + o.w, self.cp + o.cp, self.cm + o.cm)
    }

    /// (deg_γ, deg_+, deg_−), counting exponents with sign.
    pub fn degrees(&self) -> (i32, i32, i32) {
        let mut g = -self.mono.exp(Atom::A) - self.mono.exp(Atom::B);
        let mut w2 = 0;
        for (a, e) in self.mono.atoms() {
            if let Atom::Eta(i) | Atom::Zeta(i) = a {
                g += e;
                w2 += 2 * i as i32 * e;
            }
        }
        (g, self.cp + w2, self.cm + w2)
    }
}

/// Writes a ring element with s = (1−w)/(1+w) as terms; C must not occur.
pub fn terms_of(p: &GPoly) -> Result<Vec<GTerm>> {
    let mut out = Vec::new();
    for (m, q) in p.terms() {
        if m.exp(Atom::C) != 0 {
            return Err(Error::Invalid("γ is not part of the degree ring".into()));
        }
        let e = m.exp(Atom::S);
        out.push(GTerm::new(q.clone(), m.with(Atom::S, 0), 0, -e, e));
    }
    Ok(out)
}

fn collect(acc: &mut BTreeMap<Shape, Q>, t: GTerm) {
    let e = acc.entry(t.shape()).or_insert_with(Q::zero);
    *e += t.coef;
}

/// Γ(w) = (1−η)⁻¹ w² (1+w)² (1−w)⁻⁴.
pub fn gamma_w() -> GTerm {
    GTerm::new(Q::one(), Mono::of(Atom::A, 1), 2, 4, -2)
}

pub struct TermGamma {
    calc: GammaCalc,
    images: BTreeMap<Atom, Vec<GTerm>>,
}

impl Default for TermGamma {
    fn default() -> Self {
        Self::new()
    }
}

impl TermGamma {
    pub fn new() -> Self {
        TermGamma { calc: GammaCalc::new(), images: BTreeMap::new() }
    }

    fn image(&mut self, a: Atom) -> Result<Vec<GTerm>> {
        if let Some(v) = self.images.get(&a) {
            return Ok(v.clone());
        }
        let v = terms_of(self.calc.atom(a))?;
        self.images.insert(a, v.clone());
        Ok(v)
    }

    /// Γ of one term, combined by shape, zero terms dropped.
    pub fn apply(&mut self, t: &GTerm) -> Result<Vec<GTerm>> {
        let mut acc: BTreeMap<Shape, Q> = BTreeMap::new();
        let gw = gamma_w();
        let push_w = |acc: &mut BTreeMap<Shape, Q>, factor: Q, dw: i32, dcp: i32, dcm: i32| {
            if factor.is_zero() {
                return;
            }
            let base = GTerm::new(&t.coef * factor, t.mono, t.w + dw, t.cp + dcp, t.cm + dcm);
            collect(acc, base.times(&gw));
        };
        push_w(&mut acc, qi(t.w as i64), -1, 0, 0);
        push_w(&mut acc, qi(t.cp as i64), 0, 1, 0);
        push_w(&mut acc, qi(-t.cm as i64), 0, 0, 1);
        for (a, e) in t.mono.atoms() {
            let rest = GTerm::new(&t.coef * qi(e as i64), t.mono.with(a, e - 1), t.w, t.cp, t.cm);
            for img in self.image(a)? {
                collect(&mut acc, rest.times(&img));
            }
        }
        Ok(acc
            .into_iter()
            .filter(|(_, q)| !q.is_zero())
            .map(|((mono, w, cp, cm), coef)| GTerm::new(coef, mono, w, cp, cm))
            .collect())
    }
}

/// Checks deg_γ(ΓT) = deg_γ(T) − 1, deg_+(ΓT) ≤ deg_+(T) + 5, deg_−(ΓT) ≤ deg_−(T) + 1 termwise.
pub fn check_gamma_degrees(tg: &mut TermGamma, t: &GTerm) -> Result<bool> {
    let (g, p, m) = t.degrees();
    Ok(tg.apply(t)?.iter().all(|r| {
        let (g2, p2, m2) = r.degrees();
        g2 == g - 1 && p2 <= p + 5 && m2 <= m + 1
    }))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let eta2 = GTerm::new(Q::one(), Mono::of(Atom::Eta(2), 1), 0, 0, 0);
        assert_eq!(eta2.degrees().1, 4);
        let m3 = GTerm::new(Q::one(), Mono::ONE, 0, 0, 3);
        assert_eq!(m3.degrees().2, 3);
        let t = GTerm::new(Q::one(), Mono::of(Atom::Eta(1), 1).mul(&Mono::of(Atom::Zeta(1), 1)).mul(&Mono::of(Atom::A, 3)), 0, 0, 0);
        assert_eq!(t.degrees().0, -1);
    }

    #[test]
    fn gamma_images_are_homogeneous() {
        let mut tg = TermGamma::new();
        for a in [Atom::A, Atom::B, Atom::Eta(1), Atom::Zeta(1), Atom::Eta(3), Atom::Zeta(3)] {
            let t = GTerm::new(Q::one(), Mono::of(a, 1), 0, 0, 0);
            assert!(check_gamma_degrees(&mut tg, &t).unwrap(), "{:?}", a);
        }
    }
}
