use bipmap_core::closed::{ClosedFormF, GreekPart};
use bipmap_core::gfield::GPoly;
use bipmap_core::tabulated;
use bipmap_core::kernel::Pole;
use bipmap_core::partition::Partition;
use bipmap_core::rational::qf;
use bipmap_core::coords::CoordData;
use bipmap_core::gfield::Evaluator;
use bipmap_core::tutte::compute_f;
use bipmap_core::toprec::toprec_f;

fn engine_mismatch(f: &GPoly) -> Option<String> {
    let n = 12;
    let cd = CoordData::new(n).unwrap();
    let fam = compute_f(1, n);
    let target = cd.to_zu(fam.genus(1)).unwrap();
    let got = Evaluator::new(&cd).eval(f).unwrap();
    got.first_difference(&target).map(|d| format!("{:?}", d))
}

fn basis(alpha: &[u32], a: u32, b: u32) -> GreekPart {
    GreekPart { alpha: Partition::new(alpha.to_vec()), beta: Partition::empty(), a, b }
}

#[test]
fn display_differs_in_two_terms() {
    let ours = ClosedFormF::from_gpoly(1, &toprec_f(1).unwrap()).unwrap();
    let tab = ClosedFormF::from_gpoly(1, &tabulated::f1()).unwrap();
    assert_ne!(ours, tab);
    assert_eq!(ours.coeff_of(&basis(&[], 1, 0), Pole::Plus, 5), qf(1, 2));
    assert_eq!(tab.coeff_of(&basis(&[], 1, 0), Pole::Plus, 5), qf(-1, 2));
    assert_eq!(ours.coeff_of(&basis(&[], 2, 1), Pole::Plus, 1), qf(0, 1));
    assert_eq!(tab.coeff_of(&basis(&[], 2, 1), Pole::Plus, 1), qf(1, 16));
    let mut fixed = tab.clone();
    fixed.terms.retain(|t| !(t.greek == basis(&[], 2, 1)));
    for t in fixed.terms.iter_mut() {
        if t.greek == basis(&[], 1, 0) && t.c == 5 {
            t.coeff = -t.coeff.clone();
        }
    }
    assert_eq!(fixed, ours);
    for t in &ours.terms {
        assert!(t.admissible(1), "{:?}", t);
    }
}

#[test]
fn display_fails_against_engine() {
    assert!(engine_mismatch(&tabulated::f1()).is_some());
    assert!(engine_mismatch(&toprec_f(1).unwrap()).is_none());
}
