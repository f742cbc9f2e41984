use bipmap_core::closed::{ClosedFormF, ClosedFormL};
use bipmap_core::coords::CoordData;
use bipmap_core::fit::*;
use bipmap_core::tabulated;
use bipmap_core::toprec::toprec_family;
use bipmap_core::tutte::compute_f;
use bipmap_core::unroot::unroot_l;
use bipmap_core::Error;

#[test]
fn rooted_series_do_not_involve_p1() {
    let n = 10;
    let cd = CoordData::new(n).unwrap();
    let fam = compute_f(2, n);
    for g in 1..=2 {
        let zu = cd.to_zu(fam.genus(g)).unwrap();
        assert!(zu.iter().all(|(k, _)| k.mu.multiplicity(1) == 0));
        assert_eq!(rooted_target(g, n, None).unwrap(), zu);
        let l = cd.to_zu(&fam.unroot(g).unwrap()).unwrap();
        assert!(l.iter().all(|(k, _)| k.mu.multiplicity(1) == 0));
        assert_eq!(unrooted_target(g, n, None).unwrap(), l);
    }
}

#[test]
fn genus_one_fit_is_stable_in_k() {
    let exact = ClosedFormF::from_gpoly(1, &toprec_family(1).unwrap()[0]).unwrap();
    let basis = enumerate_basis(1, Target::F, Bounds::Homogeneous).unwrap();
    for k in [None, Some(3), Some(4), Some(5)] {
        let target = rooted_target(1, 12, k).unwrap();
        let f = fit(&target, &basis, &FitOptions { max_part: k, ..FitOptions::default() }).unwrap();
        assert!(f.report.validation_rows > 0);
        assert_eq!(f.closed_f(1).unwrap(), exact, "K = {:?}", k);
    }
}

#[test]
fn genus_two_restricted_fits_are_not_unique() {
    let basis = enumerate_basis(2, Target::F, Bounds::Homogeneous).unwrap();
    for k in [3, 4, 5] {
        let target = rooted_target(2, 20, Some(k)).unwrap();
        let opts = FitOptions { max_part: Some(k), fit_order: Some(20), odd: true };
        let f = fit(&target, &basis, &opts).unwrap();
        assert!(f.report.nullity > 0, "K = {}", k);
    }
}

#[test]
fn unrooted_genus_one_has_no_rational_form() {
    assert!(matches!(enumerate_basis(1, Target::L, Bounds::Homogeneous), Err(Error::LogObstruction(_))));
    let target = unrooted_target(1, 16, None).unwrap();
    for (w, ab) in [(0, 2), (1, 3)] {
        let r = fit(&target, &rational_basis(w, ab), &FitOptions::default());
        assert!(matches!(r, Err(Error::LogObstruction(_))), "{:?}", r.map(|f| f.report));
    }
}

#[test]
fn unrooted_genus_two_fit() {
    let fam = toprec_family(2).unwrap();
    let exact = unroot_l(2, &fam[1]).unwrap();
    let basis = enumerate_basis(2, Target::L, Bounds::Homogeneous).unwrap();
    let f = fit(&unrooted_target(2, 22, None).unwrap(), &basis, &FitOptions::default()).unwrap();
    assert_eq!(f.report.nullity, 0);
    let l2 = f.closed_l(2).unwrap();
    assert_eq!(l2, exact);
    let tab = ClosedFormL::from_gpoly(2, &tabulated::l2(), Default::default(), Default::default()).unwrap();
    assert_ne!(l2, tab);
    assert_eq!(tabulated::differing_terms(&l2.to_gpoly(), &tabulated::rescale_zeta(&tabulated::l2())).len(), 4);
}
