use bipmap_core::coords::CoordData;
use bipmap_core::gfield::Evaluator;
use bipmap_core::toprec::{pole_orders, toprec_family};
use bipmap_core::tutte::compute_f;

#[test]
fn genus_two_matches_engine() {
    let n = 12;
    let fam = toprec_family(2).unwrap();
    let f2 = &fam[1];
    assert!(f2.is_odd());
    let (p, m) = pole_orders(f2);
    assert!(p <= 11 && m <= 3, "{} {}", p, m);
    println!("poles {} {} terms {}", p, m, f2.len());
    let cd = CoordData::new(n).unwrap();
    let eng = compute_f(2, n);
    let target = cd.to_zu(eng.genus(2)).unwrap();
    let got = Evaluator::new(&cd).eval(f2).unwrap();
    assert!(got.agrees_with(&target), "{:?}", got.first_difference(&target));
}
