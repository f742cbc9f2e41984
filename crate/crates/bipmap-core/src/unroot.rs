//! Unrooting. With ◇ = Σ p_k ∂/∂p_k and □: x^k ↦ (1/k − γ/(1+γ)) p_k we have
//! ◇L_g = □F_g. On the Θ-basis □Θ = ΞΘ − (1 − C)ΠΘ where ΞΘ = D⁻¹ and ΠΘ is
//! the identity, so □F_g is a rational function R of the Greek variables.
//! ◇ acts on every Greek variable as the identity, hence as the Euler operator;
//! L_g is recovered by inverting it on the Laurent ring in A, B, C, with
//! ln A, ln B, ln C as the only possible transcendental parts.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;
use num_traits::{One, Zero};

use crate::closed::ClosedFormL;
use crate::error::{Error, Result};
use crate::gfield::{Atom, GPoly, Mono};
use crate::greek::{atoms, lin_add, theta_inverse, Greek, Lin};
use crate::linalg::{Echelon, Row};
use crate::rational::{qi, Q};

/// D⁻¹ (equivalently ΞΘ) of a Greek linear combination, found by matching
/// coefficient sequences k ↦ [p_k z^k]; fails if the result is not Greek.
pub fn d_inverse(l: &Lin<Q>) -> Result<Lin<Q>> {
    if l.is_empty() {
        return Ok(Lin::new());
    }
    let top = l.keys().map(|g| match g {
        Greek::Eta(i) | Greek::Zeta(i) => *i,
        Greek::Gamma => 0,
    });
    let cand = atoms(top.max().unwrap_or(0));
    let rows = cand.len() + 6;
    let mut ech = Echelon::new(cand.len());
    for k in 1..=rows as u32 {
        let row: Row = cand.iter().enumerate().map(|(j, g)| (j, g.coeff(k))).filter(|(_, q)| !q.is_zero()).collect();
        let target: Q = l.iter().map(|(g, q)| g.coeff(k) * q).sum::<Q>() / qi(k as i64);
        ech.push(row, target).map_err(|_| Error::Structural(format!("D⁻¹ of {:?} leaves the Greek span", l)))?;
    }
    let sol = ech.solve();
    let mut out = Lin::new();
    for (g, q) in cand.iter().zip(sol.x.iter()) {
        lin_add(&mut out, *g, q);
    }
    Ok(out)
}

/// □ applied to an odd element of the ring (S is s = (1−uz)/(1+uz)).
pub fn box_op(f: &GPoly) -> Result<GPoly> {
    let lin = theta_inverse(&f.split_s())?;
    // regroup by ring monomial so D⁻¹ acts on rational combinations
    let mut by_mono: BTreeMap<Mono, Lin<Q>> = BTreeMap::new();
    for (g, c) in &lin {
        for (m, q) in c.terms() {
            lin_add(by_mono.entry(*m).or_default(), *g, q);
        }
    }
    let mut xi = GPoly::zero();
    for (m, l) in &by_mono {
        xi = xi.add(&GPoly::from_lin(&d_inverse(l)?).mul_mono(m, &Q::one()));
    }
    let one_minus_c = GPoly::one().sub(&GPoly::atom(Atom::C));
    Ok(xi.sub(&one_minus_c.mul(&GPoly::from_lin_g(&lin))))
}

/// ◇ on the ring: Euler operator for the grading where every Greek variable
/// has degree one (◇A = A² − A and likewise for B, C).
pub fn diamond(p: &GPoly) -> GPoly {
    let mut out = GPoly::zero();
    for (m, q) in p.terms() {
        let n = m.greek_factors() as i64;
        let (a, b, c) = (m.exp(Atom::A), m.exp(Atom::B), m.exp(Atom::C));
        out.add_term(*m, q * qi(n - (a + b + c) as i64));
        for (at, e) in [(Atom::A, a), (Atom::B, b), (Atom::C, c)] {
            if e != 0 {
                out.add_term(m.with(at, e + 1), q * qi(e as i64));
            }
        }
    }
    out
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Unrooted {
    pub rational: GPoly,
    /// coefficients of ln A = ln 1/(1−η), ln B = ln 1/(1+ζ), ln C = ln 1/(1+γ)
    pub logs: [Q; 3],
}

fn abc(m: &Mono) -> [i32; 3] {
    [m.exp(Atom::A), m.exp(Atom::B), m.exp(Atom::C)]
}

fn greek_part(m: &Mono) -> Mono {
    m.with(Atom::A, 0).with(Atom::B, 0).with(Atom::C, 0)
}

/// Solves ◇L = R with L = 0 at the Greek origin.
pub fn diamond_inverse(r: &GPoly) -> Result<Unrooted> {
    if r.terms().any(|(m, _)| m.exp(Atom::S) != 0) {
        return Err(Error::Invalid("◇ is inverted on s-free elements only".into()));
    }
    let mut groups: BTreeMap<Mono, Vec<(Mono, Q)>> = BTreeMap::new();
    for (m, q) in r.terms() {
        groups.entry(greek_part(m)).or_default().push((*m, q.clone()));
    }
    groups.entry(Mono::ONE).or_default();
    let mut rational = GPoly::zero();
    let mut logs = [Q::zero(), Q::zero(), Q::zero()];
    for (p, terms) in &groups {
        let mut lo = [0i32; 3];
        let mut hi = [1i32; 3];
        for (m, _) in terms {
            let e = abc(m);
            for i in 0..3 {
                lo[i] = lo[i].min(e[i] - 1);
                hi[i] = hi[i].max(e[i]);
            }
        }
        let mut cols: Vec<Mono> = Vec::new();
        for a in lo[0]..=hi[0] {
            for b in lo[1]..=hi[1] {
                for c in lo[2]..=hi[2] {
                    cols.push(p.with(Atom::A, a).with(Atom::B, b).with(Atom::C, c));
                }
            }
        }
        let with_logs = *p == Mono::ONE;
        let ncols = cols.len() + if with_logs { 3 } else { 0 };
        // images of the columns, keyed by monomial
        let mut rows: BTreeMap<Mono, Row> = BTreeMap::new();
        for (j, m) in cols.iter().enumerate() {
            for (im, q) in diamond(&GPoly::term(*m, Q::one())).terms() {
                rows.entry(*im).or_default().insert(j, q.clone());
            }
        }
        if with_logs {
            for (i, at) in [Atom::A, Atom::B, Atom::C].into_iter().enumerate() {
                let j = cols.len() + i;
                rows.entry(Mono::of(at, 1)).or_default().insert(j, Q::one());
                let e = rows.entry(Mono::ONE).or_default().entry(j).or_insert_with(Q::zero);
                *e -= Q::one();
            }
        }
        let rhs: BTreeMap<Mono, Q> = terms.iter().cloned().collect();
        let mut ech = Echelon::new(ncols);
        for m in rhs.keys() {
            if !rows.contains_key(m) {
                return Err(Error::Structural(format!("◇⁻¹: {:?} outside the ansatz", m)));
            }
        }
        for (m, row) in rows {
            let target = rhs.get(&m).cloned().unwrap_or_else(Q::zero);
            ech.push(row, target).map_err(|e| match e {
                Error::Inconsistent(s) => Error::LogObstruction(format!("no primitive in the ring at {:?}: {}", p, s)),
                e => e,
            })?;
        }
        if with_logs {
            // L vanishes when A = B = C = 1
            let row: Row = (0..cols.len()).map(|j| (j, Q::one())).collect();
            ech.push(row, Q::zero())?;
        }
        let sol = ech.solve();
        if sol.free.iter().any(|&j| j < cols.len() && terms.iter().any(|(m, _)| *m == cols[j])) {
            return Err(Error::Structural("◇⁻¹ is not unique".into()));
        }
        if ech.rank() != ncols {
            return Err(Error::Structural(format!("◇⁻¹ underdetermined at {:?}", p)));
        }
        for (m, q) in cols.iter().zip(sol.x.iter()) {
            rational.add_term(*m, q.clone());
        }
        if with_logs {
            for i in 0..3 {
                logs[i] = sol.x[cols.len() + i].clone();
            }
        }
    }
    Ok(Unrooted { rational, logs })
}

/// L_g from the symbolic F_g. For g ≥ 2 every logarithm must cancel.
pub fn unroot_l(g: u32, f: &GPoly) -> Result<ClosedFormL> {
    if g == 0 {
        return Err(Error::Invalid("unrooting needs g ≥ 1".into()));
    }
    if !f.is_odd() {
        return Err(Error::NotOdd);
    }
    let r = box_op(f)?;
    let u = diamond_inverse(&r)?;
    if diamond(&u.rational).add(&GPoly::atom(Atom::A).sub(&GPoly::one()).scale(&u.logs[0])).add(&GPoly::atom(Atom::B).sub(&GPoly::one()).scale(&u.logs[1])).add(&GPoly::atom(Atom::C).sub(&GPoly::one()).scale(&u.logs[2])) != r {
        return Err(Error::Structural("◇L ≠ □F".into()));
    }
    if !u.logs[2].is_zero() {
        return Err(Error::Structural(format!("ln(1+γ) appears with coefficient {}", u.logs[2])));
    }
    if g >= 2 && (!u.logs[0].is_zero() || !u.logs[1].is_zero()) {
        return Err(Error::LogObstruction(format!("genus {}: ln A, ln B coefficients {}, {}", g, u.logs[0], u.logs[1])));
    }
    if !u.rational.at_origin().is_zero() {
        return Err(Error::Structural("L_g does not vanish at the Greek origin".into()));
    }
    ClosedFormL::from_gpoly(g, &u.rational, u.logs[0].clone(), u.logs[1].clone())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::greek::{d_op, lin_q};
    use crate::rational::qf;

    #[test]
    fn xi_theta_values() {
        let e = |l: &[(Greek, i64)]| lin_q(&l.iter().map(|(g, q)| (*g, qi(*q))).collect::<Vec<_>>());
        assert_eq!(d_inverse(&e(&[(Greek::Eta(0), 1), (Greek::Gamma, 1)])).unwrap(), e(&[(Greek::Gamma, 1)]));
        assert_eq!(d_inverse(&e(&[(Greek::Zeta(0), 1), (Greek::Gamma, -1)])).unwrap(), e(&[(Greek::Zeta(0), 2), (Greek::Gamma, -1)]));
        assert_eq!(d_inverse(&e(&[(Greek::Eta(2), 1)])).unwrap(), e(&[(Greek::Eta(1), 1)]));
        // no γ: every variable but γ vanishes at k = 1, and so does D⁻¹ζ₁
        let x1 = d_inverse(&e(&[(Greek::Zeta(1), 1)])).unwrap();
        assert_eq!(x1, lin_q(&[(Greek::Zeta(1), qf(2, 3)), (Greek::Zeta(0), qf(-4, 3))]));
        for i in 1..=4 {
            let l = e(&[(Greek::Zeta(i), 1)]);
            assert_eq!(d_op(&d_inverse(&l).unwrap()), l);
        }
        assert!(d_inverse(&e(&[(Greek::Gamma, 1)])).is_err());
    }

    #[test]
    fn box_on_basis() {
        // □Θ(η+γ) = γ(1−η)/(1+γ)
        let q = Greek::Eta(0).theta().add(&Greek::Gamma.theta());
        let got = box_op(&GPoly::from_laurent(&q)).unwrap();
        let want = GPoly::gamma().mul(&GPoly::atom_pow(Atom::A, -1)).mul(&GPoly::atom(Atom::C));
        assert_eq!(got, want);
    }

    #[test]
    fn diamond_inverse_round_trip() {
        let a = GPoly::atom(Atom::A);
        let b = GPoly::atom(Atom::B);
        let l = a.pow(3).mul(&GPoly::eta(1)).scale(&qf(3, 7)).add(&b.pow(2).sub(&GPoly::one())).add(&a.mul(&b).sub(&GPoly::one()).scale(&qi(5)));
        let r = diamond(&l);
        let u = diamond_inverse(&r).unwrap();
        assert_eq!(u.rational, l);
        assert!(u.logs.iter().all(|q| q.is_zero()));
        let lg = diamond_inverse(&a.sub(&GPoly::one())).unwrap();
        assert!(lg.rational.is_zero());
        assert_eq!(lg.logs, [qi(1), qi(0), qi(0)]);
    }
}
