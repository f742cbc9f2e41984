use bipmap_core::degrees::{check_gamma_degrees, GTerm, TermGamma};
use bipmap_core::gfield::{Atom, Mono};
use bipmap_core::rational::qi;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_monomial(rng: &mut ChaCha8Rng) -> GTerm {
    let mut m = Mono::ONE.with(Atom::A, rng.gen_range(0..4)).with(Atom::B, rng.gen_range(0..4));
    for _ in 0..rng.gen_range(0..4) {
        let i = rng.gen_range(1..=4);
        let a = if rng.gen_bool(0.5) { Atom::Eta(i) } else { Atom::Zeta(i) };
        m = m.with(a, m.exp(a) + 1);
    }
    GTerm::new(qi(rng.gen_range(1..10)), m, 0, rng.gen_range(0..7), rng.gen_range(0..4))
}

#[test]
fn gamma_degree_bounds_on_random_monomials() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let mut tg = TermGamma::new();
    for _ in 0..1000 {
        let t = random_monomial(&mut rng);
        assert!(check_gamma_degrees(&mut tg, &t).unwrap(), "{:?}", t);
    }
}
