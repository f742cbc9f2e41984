use bipmap_core::census::census;
use bipmap_core::rational::{factorial, qb, qi};
use bipmap_core::tutte::{apply_pi, apply_xi, compute_f};
use bipmap_core::Key;

#[test]
fn engine_matches_census_up_to_six_edges() {
    let fam = compute_f(3, 6);
    let ls: Vec<_> = (0..=3).map(|g| fam.unroot(g).unwrap()).collect();
    for n in 1..=6usize {
        let data = census(n, false).unwrap();
        let nf = qb(factorial(n as u64));
        let mut seen = 0;
        for ((g, mu), &count) in &data.labelled {
            let coeff = ls[*g as usize].coeff(&Key::new(n as u32, 0, mu.clone())).unwrap();
            assert_eq!(coeff * &nf, qi(count as i64), "n={n} g={g} mu={mu:?}");
            seen += 1;
        }
        // and nothing the census did not see
        let engine_total: usize = ls.iter().map(|l| l.order(n as u32).count()).sum();
        assert_eq!(engine_total, seen);
        for ((g, k, mu), &b) in &data.rooted().unwrap() {
            assert_eq!(fam.genus(*g).coeff(&Key::new(n as u32, *k, mu.clone())).unwrap(), qi(b as i64));
        }
        let rooted_total: usize = (0..=3).map(|g| fam.genus(g).order(n as u32).count()).sum();
        assert_eq!(rooted_total, data.rooted().unwrap().len());
    }
}

#[test]
fn genus_two_five_cycle() {
    let data = census(5, false).unwrap();
    assert_eq!(data.labelled_count(2, &[5]), 192);
}

#[test]
fn marked_series_match_census() {
    let fam = compute_f(2, 6);
    for n in 1..=6usize {
        let data = census(n, false).unwrap();
        let nf = qb(factorial(n as u64));
        for ((g, mu), m) in &data.marked {
            let key = Key::new(n as u32, 0, mu.clone());
            let face = apply_xi(fam.genus(*g)).coeff(&key).unwrap();
            let edge = apply_pi(fam.genus(*g)).coeff(&key).unwrap();
            assert_eq!(face * &nf, qi(m.face as i64));
            assert_eq!(edge * &nf, qi(m.edge as i64));
            assert_eq!(m.edge, n as u64 * data.labelled[&(*g, mu.clone())]);
        }
    }
}

#[test]
fn disymmetry() {
    // V + F − E = 2 − 2g map by map; the face- and edge-marked totals come
    // from the engine
    let fam = compute_f(2, 6);
    for n in 1..=6usize {
        let data = census(n, false).unwrap();
        let nf = qb(factorial(n as u64));
        for ((g, mu), m) in &data.marked {
            let key = Key::new(n as u32, 0, mu.clone());
            let l = fam.unroot(*g).unwrap().coeff(&key).unwrap() * &nf;
            let face = apply_xi(fam.genus(*g)).coeff(&key).unwrap() * &nf;
            let edge = apply_pi(fam.genus(*g)).coeff(&key).unwrap() * &nf;
            let rhs = qi(m.vertex as i64) + face - edge;
            assert_eq!(qi(2 - 2 * *g as i64) * l, rhs, "n={n} g={g} mu={mu:?}");
            if *g == 1 {
                assert_eq!(m.vertex + m.face, m.edge);
            }
        }
    }
}
