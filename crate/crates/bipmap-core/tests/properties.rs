use bipmap_core::calculus::gamma_calc;
use bipmap_core::coords::CoordData;
use bipmap_core::gfield::{Atom, GPoly, Mono};
use bipmap_core::greek::{lin_q, lin_theta, theta_inverse_q, Greek};
use bipmap_core::rational::{qf, qi};
use bipmap_core::tutte::apply_gamma_series;
use bipmap_core::{Chart, Key, Partition, Series};
use proptest::prelude::*;

const T: u32 = 6;

fn term() -> impl Strategy<Value = (Key, (i64, i64))> {
    (0..=T, 0u32..3, prop::collection::vec(1u32..4, 0..3), -5i64..6, 1i64..4)
        .prop_map(|(e, c, mu, n, d)| (Key::new(e, c, Partition::new(mu)), (n, d)))
}

fn series() -> impl Strategy<Value = Series> {
    prop::collection::vec(term(), 0..6)
        .prop_map(|ts| Series::from_terms(Chart::Txp, T, ts.into_iter().map(|(k, (n, d))| (k, qf(n, d)))))
}

/// Random series of positive order, so that composition converges.
fn graded_series() -> impl Strategy<Value = Series> {
    prop::collection::vec((1..=T, 0u32..3, -4i64..5), 0..5).prop_map(|ts| {
        Series::from_terms(
            Chart::Txp,
            T,
            ts.into_iter().filter(|(e, c, _)| c <= e).map(|(e, c, q)| {
                // fill the remaining degree with p_2's and a p_1
                let rest = e - c;
                let mut mu = vec![2; (rest / 2) as usize];
                if rest % 2 == 1 {
                    mu.push(1);
                }
                (Key::new(e, c, Partition::new(mu)), qi(q))
            }),
        )
    })
}

fn atom() -> impl Strategy<Value = Atom> {
    prop_oneof![
        Just(Atom::S),
        Just(Atom::A),
        Just(Atom::B),
        Just(Atom::C),
        (1u32..4).prop_map(Atom::Eta),
        (1u32..4).prop_map(Atom::Zeta),
    ]
}

fn gpoly() -> impl Strategy<Value = GPoly> {
    prop::collection::vec((prop::collection::vec((atom(), 1i32..3), 0..3), -3i64..4, -2i32..3), 1..4).prop_map(|ts| {
        let mut p = GPoly::zero();
        for (atoms, q, sexp) in ts {
            let mut m = Mono::of(Atom::S, sexp);
            for (a, e) in atoms {
                m = m.mul(&Mono::of(a, e));
            }
            p.add_term(m, qi(q));
        }
        p
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn series_ring_laws(a in series(), b in series(), c in series()) {
        let ab = a.mul(&b).unwrap();
        prop_assert_eq!(&ab, &b.mul(&a).unwrap());
        prop_assert_eq!(ab.mul(&c).unwrap(), a.mul(&b.mul(&c).unwrap()).unwrap());
        let lhs = a.mul(&b.add(&c).unwrap()).unwrap();
        prop_assert_eq!(lhs, ab.add(&a.mul(&c).unwrap()).unwrap());
        prop_assert!(a.sub(&a).unwrap().is_zero());
    }

    #[test]
    fn series_inverse(a in series(), k in 1i64..5) {
        let u = a.retain(|key| key.e > 0).add(&Series::constant(Chart::Txp, T, qi(k))).unwrap();
        prop_assert_eq!(u.mul(&u.inverse().unwrap()).unwrap(), Series::one(Chart::Txp, T));
    }

    #[test]
    fn gamma_is_a_derivation_on_series(a in series(), b in series()) {
        let lhs = apply_gamma_series(&a.mul(&b).unwrap());
        let rhs = apply_gamma_series(&a).mul(&b).unwrap().add(&a.mul(&apply_gamma_series(&b)).unwrap()).unwrap();
        prop_assert_eq!(lhs.truncate(T), rhs.truncate(T));
    }

    #[test]
    fn gamma_is_a_derivation_on_greek_field(p in gpoly(), q in gpoly()) {
        let lhs = gamma_calc(&p.mul(&q)).unwrap();
        let rhs = gamma_calc(&p).unwrap().mul(&q).add(&p.mul(&gamma_calc(&q).unwrap()));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn change_of_variables_round_trips(f in graded_series()) {
        let cd = CoordData::new(T).unwrap();
        let back = cd.to_tx(&cd.to_zu(&f).unwrap()).unwrap();
        prop_assert!(back.agrees_with(&f));
    }

    #[test]
    fn theta_inverse_recovers_combinations(mut cs in prop::collection::vec(-4i64..5, 11)) {
        // Θ of a combination is odd exactly when [γ] = [η] − [ζ]
        cs[0] = cs[1] - cs[2];
        let mut gs = vec![Greek::Gamma, Greek::Eta(0), Greek::Zeta(0)];
        for i in 1..=4 {
            gs.push(Greek::Eta(i));
            gs.push(Greek::Zeta(i));
        }
        let pairs: Vec<_> = gs.into_iter().zip(cs.iter().map(|&c| qi(c))).collect();
        let l = lin_q(&pairs);
        prop_assert_eq!(theta_inverse_q(&lin_theta(&l)).unwrap(), l);
    }

    #[test]
    fn partition_union_adds_weights(a in prop::collection::vec(1u32..6, 0..5), b in prop::collection::vec(1u32..6, 0..5)) {
        let (pa, pb) = (Partition::new(a), Partition::new(b));
        let u = pa.union(&pb);
        prop_assert_eq!(u.weight(), pa.weight() + pb.weight());
        prop_assert_eq!(u.len(), pa.len() + pb.len());
        prop_assert!(u.parts().windows(2).all(|w| w[0] >= w[1]));
    }
}
