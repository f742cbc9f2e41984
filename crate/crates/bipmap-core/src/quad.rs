//! Rooted maps counted by edges, through the quadrangulation specialization
//! p_i = [i = 2] with a root face of degree 4, and the algebraic oracles
//! for genus 0 and 1 in Tutte's parametrization s = 1 + 3ts².

use alloc::vec;
use alloc::vec::Vec;
use num_traits::{One, Zero};

use crate::rational::{qi, Q};
use crate::tutte::{compute_f_with, Support};

/// Truncated univariate power series in t, coefficients 0..=n.
fn mul(a: &[Q], b: &[Q]) -> Vec<Q> {
    let n = a.len() - 1;
    let mut c = vec![Q::zero(); n + 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate().take(n + 1 - i) {
            c[i + j] += x * y;
        }
    }
    c
}

fn inv(a: &[Q]) -> Vec<Q> {
    let n = a.len() - 1;
    let mut b = vec![Q::zero(); n + 1];
    b[0] = a[0].recip();
    for m in 1..=n {
        let s: Q = (1..=m).map(|k| &a[k] * &b[m - k]).sum();
        b[m] = -s * &b[0];
    }
    b
}

fn plus(a: &[Q], c: i64) -> Vec<Q> {
    let mut b = a.to_vec();
    b[0] += qi(c);
    b
}

fn scale(a: &[Q], c: &Q) -> Vec<Q> {
    a.iter().map(|x| x * c).collect()
}

/// s = 1 + 3ts², by fixed-point iteration.
pub fn sigma(n: usize) -> Vec<Q> {
    let mut s = vec![Q::zero(); n + 1];
    s[0] = Q::one();
    for _ in 0..=n {
        let sq = mul(&s, &s);
        let mut next = vec![Q::zero(); n + 1];
        next[0] = Q::one();
        for m in 1..=n {
            next[m] = qi(3) * &sq[m - 1];
        }
        s = next;
    }
    s
}

/// Q₀ = s(4 − s)/3.
pub fn q0_oracle(n: usize) -> Vec<Q> {
    let s = sigma(n);
    let four_minus = plus(&scale(&s, &qi(-1)), 4);
    scale(&mul(&s, &four_minus), &Q::new(1.into(), 3.into()))
}

/// Q₁ = s(s − 1)² / (3(s + 2)(s − 2)²).
pub fn q1_oracle(n: usize) -> Vec<Q> {
    let s = sigma(n);
    let (m1, m2) = (plus(&s, -1), plus(&s, -2));
    let num = mul(&s, &mul(&m1, &m1));
    let den = mul(&plus(&s, 2), &mul(&m2, &m2));
    scale(&mul(&num, &inv(&den)), &Q::new(1.into(), 3.into()))
}

/// [t^m] = [t^{2m} x² p₂^{m−1}] F_g for m ≥ 1, plus the vertex map in genus 0.
pub fn engine_counts(g: u32, n: usize) -> Vec<Q> {
    let fam = compute_f_with(g, 2 * n as u32, Support::only(&[2], g));
    let mut out = vec![Q::zero(); n + 1];
    if g == 0 {
        out[0] = Q::one();
    }
    for (k, q) in fam.genus(g).iter() {
        if k.c == 2 && k.e % 2 == 0 && k.mu.parts().iter().all(|&p| p == 2) {
            out[k.e as usize / 2] = q.clone();
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sigma_head() {
        let s = sigma(3);
        assert_eq!(s, vec![qi(1), qi(3), qi(18), qi(135)]);
    }
}
