use bipmap_core::kernel::kernel_build;
use bipmap_core::rational::qf;
use bipmap_core::tutte::closed_f0_f02;
use bipmap_core::Q;
use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[test]
fn kernel_factorization_antisymmetry_newton() {
    let (f0, _) = closed_f0_f02(15);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for k in 2..=5u32 {
        let kd = kernel_build(k).unwrap();
        assert_eq!(kd.n_degree(), 2 * (k as i32 - 1), "K = {}", k);
        assert!(kd.check_factorization(&f0, 15).unwrap(), "K = {}", k);
        assert!(kd.is_antisymmetric(), "K = {}", k);
        assert!(kd.n_is_palindromic(), "K = {}", k);
        for _ in 0..3 {
            let values: Vec<Q> = (0..k)
                .map(|_| {
                    let n: i64 = rng.gen_range(1..20) * if rng.gen_bool(0.5) { 1 } else { -1 };
                    qf(n, rng.gen_range(1..10))
                })
                .collect();
            let vals = kd.newton_valuations(&values);
            let small: u32 = vals.iter().filter(|(v, _)| *v > Q::zero()).map(|x| x.1).sum();
            let large: u32 = vals.iter().filter(|(v, _)| *v < Q::zero()).map(|x| x.1).sum();
            assert_eq!((small, large), (k - 1, k - 1), "K = {} valuations {:?}", k, vals);
        }
    }
}
