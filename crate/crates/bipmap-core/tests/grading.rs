use bipmap_core::tutte::compute_f;
use num_traits::Zero;

#[test]
fn rooted_series_are_graded() {
    let fam = compute_f(3, 10);
    for g in 0..=3 {
        let f = fam.genus(g);
        assert!(f.check_graded());
        for (k, _) in f.iter() {
            assert_eq!(k.e, k.c + k.mu.weight(), "g={g} {k:?}");
        }
        assert!(f.iter().all(|(k, _)| k.e == 0 || k.e > 2 * g));
    }
}

#[test]
fn unrooted_series_are_graded() {
    let fam = compute_f(3, 10);
    for g in 0..=3 {
        let l = fam.unroot(g).unwrap();
        for (k, _) in l.iter() {
            assert_eq!((k.c, k.e), (0, k.mu.weight()), "g={g} {k:?}");
        }
    }
}

#[test]
fn higher_genus_has_no_pure_p1_terms() {
    // n edges and n faces of degree 2 leave V = 2 − 2g, and V ≥ 2
    let fam = compute_f(3, 10);
    for g in 1..=3 {
        let l = fam.unroot(g).unwrap();
        for (k, q) in l.iter() {
            if k.mu.parts().iter().all(|&p| p == 1) {
                assert!(q.is_zero(), "g={g} {k:?}");
            }
        }
        assert!(l.iter().all(|(k, _)| k.mu.parts().iter().any(|&p| p > 1)));
    }
}
