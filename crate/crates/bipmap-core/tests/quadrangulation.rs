use bipmap_core::quad::{engine_counts, q0_oracle, q1_oracle};
use bipmap_core::rational::qi;

#[test]
fn planar_quadrangulations() {
    let q0 = q0_oracle(10);
    assert_eq!(&q0[..5], &[qi(1), qi(2), qi(9), qi(54), qi(378)][..]);
    assert_eq!(q0, engine_counts(0, 10));
}

#[test]
fn toroidal_quadrangulations() {
    let q1 = q1_oracle(10);
    assert_eq!(&q1[..5], &[qi(0), qi(0), qi(1), qi(20), qi(307)][..]);
    assert_eq!(q1, engine_counts(1, 10));
}

#[test]
fn genus_two_quadrangulations() {
    // rooted maps on the double torus by edges
    let q2 = engine_counts(2, 6);
    assert_eq!(q2, [0, 0, 0, 0, 21, 966, 27954].map(qi).to_vec());
}
