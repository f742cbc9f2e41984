use bipmap_core::calculus::{gamma_atom, gamma_calc};
use bipmap_core::tabulated::gamma_row;
use bipmap_core::coords::CoordData;
use bipmap_core::gfield::{Atom, Evaluator, GPoly};
use bipmap_core::greek::Greek;
use bipmap_core::tutte::apply_gamma_series;
use bipmap_core::rational::{qf, qi};
use bipmap_core::{Chart, Partition, Series};

const N: u32 = 12;

fn series_gamma(cd: &CoordData, f: &Series) -> Series {
    cd.to_zu(&apply_gamma_series(&cd.to_tx(f).unwrap())).unwrap()
}

#[test]
fn gamma_on_generators_matches_series() {
    let cd = CoordData::new(N).unwrap();
    let mut ev = Evaluator::new(&cd);
    let mut atoms = vec![Atom::S, Atom::A, Atom::B, Atom::C];
    for i in 1..=4 {
        atoms.push(Atom::Eta(i));
        atoms.push(Atom::Zeta(i));
    }
    for a in atoms {
        let lhs = ev.eval(&gamma_atom(a)).unwrap();
        let rhs = series_gamma(&cd, &ev.eval(&GPoly::atom(a)).unwrap());
        assert!(lhs.agrees_with(&rhs), "{:?}: {:?}", a, lhs.first_difference(&rhs));
    }
}

#[test]
fn tabulated_zeta_row_is_not_odd() {
    let cd = CoordData::new(N).unwrap();
    let tab = gamma_row(Greek::Zeta(0)).unwrap();
    assert!(!tab.is_odd());
    let mut ev = Evaluator::new(&cd);
    let computed = gamma_calc(&GPoly::zeta(0)).unwrap();
    assert!(computed.is_odd());
    let target = series_gamma(&cd, &Greek::Zeta(0).series(N));
    assert!(ev.eval(&computed).unwrap().agrees_with(&target));
    assert!(!ev.eval(&tab).unwrap().agrees_with(&target));
}

#[test]
fn gamma_on_products_matches_series() {
    let cd = CoordData::new(10).unwrap();
    let mut ev = Evaluator::new(&cd);
    let p = GPoly::atom(Atom::Eta(1))
        .mul(&GPoly::atom_pow(Atom::A, 2))
        .mul(&GPoly::s_pow(-3))
        .add(&GPoly::atom(Atom::Zeta(2)).mul(&GPoly::atom(Atom::B)).mul(&GPoly::s()));
    let lhs = ev.eval(&gamma_calc(&p).unwrap()).unwrap();
    let rhs = series_gamma(&cd, &ev.eval(&p).unwrap());
    assert!(lhs.agrees_with(&rhs));
}

#[test]
fn gamma_on_z_and_u() {
    let cd = CoordData::new(N).unwrap();
    let mut ev = Evaluator::new(&cd);
    // Γz = z s⁻²(s⁻¹ − s)/(4(1−η)), Γu = u s⁻²(s⁻¹ − 1)(s⁻¹ − s)/(4(1−η))
    let common = GPoly::s_pow(-2).mul(&GPoly::s_pow(-1).sub(&GPoly::s())).mul(&GPoly::atom(Atom::A)).scale(&qf(1, 4));
    let z = Series::monomial(Chart::Zup, N, 1, 0, Partition::empty(), qi(1));
    let u = Series::monomial(Chart::Zup, N, 0, 1, Partition::empty(), qi(1));
    let gz = cd.to_zu(&apply_gamma_series(&cd.z_of_t)).unwrap();
    assert!(gz.agrees_with(&ev.eval(&common).unwrap().mul(&z).unwrap()));
    let gu = cd.to_zu(&apply_gamma_series(&cd.u_of_tx)).unwrap();
    let rhs = ev.eval(&common.mul(&GPoly::s_pow(-1).sub(&GPoly::one()))).unwrap().mul(&u).unwrap();
    assert!(gu.agrees_with(&rhs), "{:?}", gu.first_difference(&rhs));
}
