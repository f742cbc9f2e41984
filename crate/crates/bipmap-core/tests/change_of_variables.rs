//! Partial derivatives of z, u with respect to t, x, p_k, computed in
//! (t; x; p) and compared in (z; u; p) with their closed forms.

use bipmap_core::coords::CoordData;
use bipmap_core::gfield::{Atom, GPoly};
use bipmap_core::rational::{binom, qb, qi};
use bipmap_core::{Chart, Partition, Series};

const N: u32 = 12;

fn zu(cd: &CoordData, f: &Series) -> Series {
    cd.to_zu(f).unwrap().truncate(N - 1)
}

fn mono(e: u32, c: u32) -> Series {
    Series::monomial(Chart::Zup, N, e, c, Partition::empty(), qi(1))
}

fn one_minus_uz() -> Series {
    mono(0, 0).sub(&mono(1, 1)).unwrap()
}

fn one_plus_uz() -> Series {
    mono(0, 0).add(&mono(1, 1)).unwrap()
}

fn check(lhs: &Series, rhs: &Series, what: &str) {
    let rhs = rhs.truncate(N - 1);
    assert!(lhs.agrees_with(&rhs), "{what}: {:?}", lhs.first_difference(&rhs));
}

#[test]
fn derivatives_in_x() {
    let cd = CoordData::new(N).unwrap();
    let du = zu(&cd, &cd.u_of_tx.d_cat());
    let rhs = one_plus_uz().pow(3).unwrap().mul(&one_minus_uz().inverse().unwrap()).unwrap();
    check(&du, &rhs, "du/dx");
    assert!(cd.z_of_t.d_cat().is_zero());
}

#[test]
fn derivatives_in_t() {
    let cd = CoordData::new(N).unwrap();
    // (1+γ)²/(1−η)
    let k = GPoly::atom_pow(Atom::C, -2).mul(&GPoly::atom(Atom::A)).eval(&cd).unwrap();
    check(&zu(&cd, &cd.z_of_t.d_order()), &k, "dz/dt");
    let rhs = k.mul(&mono(0, 2)).unwrap().mul(&one_minus_uz().inverse().unwrap()).unwrap().scale(&qi(2));
    check(&zu(&cd, &cd.u_of_tx.d_order()), &rhs, "du/dt");
}

#[test]
fn derivatives_in_pk() {
    let cd = CoordData::new(N).unwrap();
    let a = GPoly::atom(Atom::A).eval(&cd).unwrap();
    for k in 1..=5u32 {
        let c = qb(binom(2 * k as i64 - 1, k as i64));
        let dz = a.mul(&mono(k + 1, 0)).unwrap().scale(&c);
        check(&zu(&cd, &cd.z_of_t.d_p(k)), &dz, "dz/dp_k");
        let du = dz.mul(&mono(0, 2)).unwrap().mul(&one_minus_uz().inverse().unwrap()).unwrap().scale(&qi(2));
        check(&zu(&cd, &cd.u_of_tx.d_p(k)), &du, "du/dp_k");
    }
}
