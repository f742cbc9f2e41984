use bipmap_core::coords::CoordData;
use bipmap_core::gfield::Evaluator;
use bipmap_core::toprec::toprec_f;
use bipmap_core::tutte::compute_f;

#[test]
fn genus_one_matches_engine() {
    let n = 12;
    let f1 = toprec_f(1).unwrap();
    let cd = CoordData::new(n).unwrap();
    let fam = compute_f(1, n);
    let target = cd.to_zu(fam.genus(1)).unwrap();
    let got = Evaluator::new(&cd).eval(&f1).unwrap();
    assert!(got.agrees_with(&target), "{:?}", got.first_difference(&target));
}
