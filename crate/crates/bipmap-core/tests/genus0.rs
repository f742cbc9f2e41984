use bipmap_core::coords::CoordData;
use bipmap_core::tutte::{apply_gamma_series, closed_f0_f02, compute_f};

#[test]
fn genus0_closed_forms_through_z12() {
    let n = 12;
    let fam = compute_f(0, n);
    let cd = CoordData::new(n).unwrap();
    let (f0, f02) = closed_f0_f02(n);
    assert_eq!(cd.to_zu(fam.genus(0)).unwrap(), f0);
    assert_eq!(cd.to_zu(&apply_gamma_series(fam.genus(0))).unwrap(), f02);
}
