//! The rooting operator Γ = Σ k x^k ∂/∂p_k acting on the Greek ring as a
//! derivation, from ΓG = ((s⁻¹−s)/(4(1−η)s²) + Θ) DG on Greek variables.

use alloc::collections::BTreeMap;

use crate::error::Result;
use crate::gfield::{Atom, GPoly, MAX_INDEX};
use crate::greek::{d_op, lin_q, lin_theta, Greek};
use crate::laurent::LaurentS;
use crate::rational::{qf, qi};

/// (s⁻¹ − s) s⁻² / (4(1−η)).
fn gz_factor() -> GPoly {
    GPoly::from_laurent(&LaurentS::from_pairs(&[(-3, qf(1, 4)), (-1, qf(-1, 4))])).mul(&GPoly::atom(Atom::A))
}

/// Γ of a Greek variable (γ, η, ζ, η_i or ζ_i).
pub fn gamma_greek(g: Greek) -> GPoly {
    let dg = d_op(&lin_q(&[(g, qi(1))]));
    gz_factor().mul(&GPoly::from_lin(&dg)).add(&GPoly::from_laurent(&lin_theta(&dg)))
}

/// Γ of a generator of the ring.
pub fn gamma_atom(a: Atom) -> GPoly {
    match a {
        Atom::S => {
            let d = LaurentS::from_pairs(&[(-1, qi(1)), (1, qi(-1))]);
            GPoly::from_laurent(&d.pow(2).mul(&LaurentS::mono(-2, qf(-1, 8)))).mul(&GPoly::atom(Atom::A))
        }
        Atom::A => GPoly::atom_pow(Atom::A, 2).mul(&gamma_greek(Greek::Eta(0))),
        Atom::B => GPoly::atom_pow(Atom::B, 2).mul(&gamma_greek(Greek::Zeta(0))).neg(),
        Atom::C => GPoly::atom_pow(Atom::C, 2).mul(&gamma_greek(Greek::Gamma)).neg(),
        Atom::Eta(i) => gamma_greek(Greek::Eta(i)),
        Atom::Zeta(i) => gamma_greek(Greek::Zeta(i)),
    }
}

/// Γ images of generators, computed once per calculator.
#[derive(Default)]
pub struct GammaCalc {
    cache: BTreeMap<Atom, GPoly>,
}

impl GammaCalc {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn atom(&mut self, a: Atom) -> &GPoly {
        self.cache.entry(a).or_insert_with(|| gamma_atom(a))
    }

    /// Γ of any ring element. Γη_i involves η_{i+1}, so the index bound
    /// of the ring must leave room for it.
    pub fn apply(&mut self, p: &GPoly) -> Result<GPoly> {
        if p.max_index() as usize >= MAX_INDEX {
            return Err(crate::Error::Invalid(alloc::format!("Greek index {} too large for Γ", p.max_index())));
        }
        let mut out = GPoly::zero();
        for a in p.atoms() {
            let d = p.deriv(a);
            out = out.add(&d.mul(self.atom(a)));
        }
        Ok(out)
    }
}

pub fn gamma_calc(p: &GPoly) -> Result<GPoly> {
    GammaCalc::new().apply(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tabulated_rows_agree() {
        for g in [Greek::Gamma, Greek::Eta(0), Greek::Eta(1), Greek::Eta(2), Greek::Eta(3), Greek::Eta(4)] {
            assert_eq!(gamma_greek(g), crate::tabulated::gamma_row(g).unwrap(), "{:?}", g);
        }
    }

    #[test]
    fn zeta_i_rows_differ_by_constant_sign() {
        // The tabulated ζ_i row carries (-1)^i where (-1)^(i+1) is needed.
        for i in 1..=4u32 {
            let diff = gamma_greek(Greek::Zeta(i)).sub(&crate::tabulated::gamma_row(Greek::Zeta(i)).unwrap());
            let sign = if i % 2 == 1 { qf(1, 2) } else { qf(-1, 2) };
            let expect = GPoly::from_laurent(&LaurentS::from_pairs(&[(1, sign.clone()), (-1, -sign)]));
            assert_eq!(diff, expect, "i = {}", i);
        }
    }

    #[test]
    fn zeta_row_is_not_odd() {
        assert!(!crate::tabulated::gamma_row(Greek::Zeta(0)).unwrap().is_odd());
        assert!(gamma_greek(Greek::Zeta(0)).is_odd());
    }

    #[test]
    fn derivation_on_units() {
        // Γ(A·(1−η)) = Γ1 = 0
        let one = GPoly::atom(Atom::A).mul(&GPoly::eta(0).neg().add(&GPoly::one()));
        assert_eq!(one, GPoly::one());
        let p = GPoly::atom(Atom::A).mul(&GPoly::atom_pow(Atom::A, -1));
        assert!(gamma_calc(&p).unwrap().is_zero());
        assert!(gamma_calc(&GPoly::int(7)).unwrap().is_zero());
    }
}

