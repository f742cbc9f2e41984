//! Closed forms for F₁ and L₂ and Γ rows in their commonly tabulated shape,
//! kept only so the computed forms can be compared against them. The closed
//! forms disagree with the map counts; see the tests for the discrepancies.

use alloc::vec::Vec;

use crate::gfield::{Atom, GPoly, Mono};
use crate::greek::Greek;
use crate::laurent::LaurentS;
use num_traits::One;
use crate::rational::{qf, qi, Q};
use crate::toprec::{one_minus_w_pow, one_plus_w_pow};

pub fn f1() -> GPoly {
    let eta = GPoly::eta(0);
    let eta1 = GPoly::eta(1);
    let zeta = GPoly::zeta(0);
    let a = GPoly::atom(Atom::A);
    let b = GPoly::atom(Atom::B);
    let one = GPoly::one();
    let t1 = eta.sub(&eta1.scale(&qi(2))).sub(&one).scale(&qf(1, 16)).mul(&one_minus_w_pow(2)).mul(&a.pow(2));
    let num2 = one
        .add(&zeta)
        .mul(&eta1)
        .scale(&qi(4))
        .add(&eta.pow(2).scale(&qi(3)))
        .sub(&zeta.mul(&one.sub(&eta)).scale(&qi(6)))
        .add(&GPoly::int(3));
    let t2 = num2.scale(&qf(1, 96)).mul(&one_minus_w_pow(1)).mul(&b).mul(&a.pow(2));
    let t3 = one_minus_w_pow(5).mul(&a).scale(&qf(-1, 2));
    let t4 = one_minus_w_pow(4).mul(&a).scale(&qf(-5, 4));
    let t5 = one_plus_w_pow(1).mul(&b).scale(&qf(-1, 32));
    let t6 = eta.scale(&qi(21)).sub(&eta1.scale(&qi(2))).sub(&GPoly::int(21)).scale(&qf(-1, 24)).mul(&one_minus_w_pow(3)).mul(&a.pow(2));
    t1.add(&t2).add(&t3).add(&t4).add(&t5).add(&t6)
}

/// In this form ζ_i stands for −ζ_i/2 of ours; see [`rescale_zeta`].
pub fn l2() -> GPoly {
    let a = |e: i32| GPoly::atom_pow(Atom::A, e);
    let b = |e: i32| GPoly::atom_pow(Atom::B, e);
    let (e1, e2, e3) = (GPoly::eta(1), GPoly::eta(2), GPoly::eta(3));
    let z1 = GPoly::zeta(1);
    GPoly::constant(qf(1, 120))
        .sub(&e1.mul(&e1.scale(&qi(185)).sub(&e2.scale(&qi(58)))).mul(&a(4)).scale(&qf(1, 23040)))
        .sub(&e3.scale(&qi(20)).sub(&e2.scale(&qi(168))).add(&e1.scale(&qi(415))).mul(&a(3)).scale(&qf(1, 46080)))
        .sub(&a(2).scale(&qf(53, 15360)))
        .sub(&e1.pow(3).mul(&a(5)).scale(&qf(7, 2880)))
        .sub(&a(1).mul(&b(1)).scale(&qf(1, 512)))
        .add(&e1.mul(&a(2)).mul(&b(1)).scale(&qf(1, 1536)))
        .sub(&b(2).scale(&qf(3, 1024)))
        .add(&z1.mul(&b(3)).scale(&qf(3, 8192)))
}

/// Substitutes ζ_i → −2ζ_i for i ≥ 1.
pub fn rescale_zeta(p: &GPoly) -> GPoly {
    let mut out = GPoly::zero();
    for (m, q) in p.terms() {
        let mut c = q.clone();
        for (at, e) in m.atoms() {
            if let Atom::Zeta(_) = at {
                c *= qi(-2).pow(e);
            }
        }
        out.add_term(*m, c);
    }
    out
}

/// Monomials whose coefficients differ, with (left, right) coefficients.
pub fn differing_terms(x: &GPoly, y: &GPoly) -> Vec<(Mono, Q, Q)> {
    let mut keys: Vec<&Mono> = x.0.keys().chain(y.0.keys()).collect();
    keys.sort();
    keys.dedup();
    keys.into_iter()
        .filter_map(|m| {
            let (a, b) = (x.0.get(m).cloned().unwrap_or_default(), y.0.get(m).cloned().unwrap_or_default());
            (a != b).then_some((*m, a, b))
        })
        .collect()
}

/// Tabulated Γ images of γ, ζ, η_i and ζ_i, built from their formulas.
pub fn gamma_row(g: Greek) -> Option<GPoly> {
    let pre = |k: i64| GPoly::from_laurent(&LaurentS::from_pairs(&[(-3, qf(1, k)), (-1, qf(-1, k))])).mul(&GPoly::atom(Atom::A));
    match g {
        Greek::Gamma => {
            let tail = LaurentS::from_pairs(&[(-3, qf(1, 4)), (-1, qf(-1, 4))]);
            Some(pre(4).mul(&GPoly::eta(0).add(&GPoly::gamma())).add(&GPoly::from_laurent(&tail)))
        }
        Greek::Zeta(0) => {
            let tail = LaurentS::from_pairs(&[(-3, qf(1, 8)), (-1, qf(-1, 8)), (0, qf(-1, 4)), (1, qf(1, 4))]);
            Some(pre(8).mul(&GPoly::eta(0).add(&GPoly::zeta(0))).add(&GPoly::from_laurent(&tail)))
        }
        Greek::Eta(i) => {
            let mut q = LaurentS::from_pairs(&[(-3, qi(1)), (-1, qi(-3)), (0, qi(2))]);
            for _ in 0..=i {
                q = q.s_op();
            }
            let q = q.scale(&(num_rational::BigRational::one() / qi(1i64 << (i + 3))));
            Some(pre(4).mul(&GPoly::eta(i + 1)).add(&GPoly::from_laurent(&q)))
        }
        Greek::Zeta(i) => {
            // The table uses ζ_i scaled by -2; convert back to the defining series.
            let i = i as i64;
            let tab = |k: i64| if k == 0 { GPoly::zeta(0) } else { GPoly::zeta(k as u32).scale(&qi(-2)) };
            let sign = if i % 2 == 0 { 1 } else { -1 };
            let mut lin = tab(i).scale(&qi(2 * i + 1));
            for j in 1..i {
                lin = lin.add(&tab(i - j).scale(&qi(if j % 2 == 1 { 1 } else { -1 })));
            }
            lin = lin.add(&GPoly::one().add(&GPoly::zeta(0)).scale(&qi(4 * sign)));
            let s2m1 = LaurentS::from_pairs(&[(2, qi(1)), (0, qi(-1))]);
            let mut poly = s2m1.pow(i as u32).scale(&qi(2 * i + 1));
            for j in 1..i {
                poly = poly.add(&s2m1.pow((i - j) as u32).scale(&qi(if j % 2 == 1 { 1 } else { -1 })));
            }
            poly = poly.add(&LaurentS::mono(0, qi(sign)));
            let poly = LaurentS::from_pairs(&[(-1, qf(1, 2)), (1, qf(-1, 2))]).mul(&poly);
            let row = pre(8).mul(&lin).add(&GPoly::from_laurent(&poly));
            Some(row.scale(&qf(-1, 2)))
        }
    }
}
