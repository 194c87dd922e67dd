//! Named examples, generators, exhaustive searches and refuters.

pub mod group;
pub mod hypergroups;
pub mod lattice;
pub mod multiring;
pub mod refute;
pub mod search;

use std::sync::Arc;

use crate::hom::Morphism;
use crate::magma::Hypermagma;
use crate::univ;
use crate::CategoryTag;
use group::{make_gf9, FiniteGroup};
use multiring::{krasner_quotient, Multiring};

/// The Krasner hyperfield's additive hypergroup `𝐊 = {0, 1}`.
pub fn krasner() -> Hypermagma {
    multiring::krasner_hyperfield().additive.as_ref().clone()
}

/// `ℤ/2` as a hypermagma with labels `0, 1`.
pub fn z2() -> Hypermagma {
    FiniteGroup::cyclic(2).unwrap().to_hypermagma()
}

/// `𝐅 = {0, 1, −1}`, the free commutative mosaic on one generator.
pub fn sign_mosaic() -> Hypermagma {
    univ::free(CategoryTag::CMsc, &["1"]).unwrap()
}

/// The Klein four-group `V = {0, a, b, c}`.
pub fn klein() -> Hypermagma {
    FiniteGroup::klein_four().to_hypermagma()
}

/// The hyperfield `𝔽₉/𝔽₃ˣ`.
pub fn f9_over_f3() -> Multiring {
    let f = make_gf9();
    krasner_quotient(&f, f.prime_subfield_units()).expect("F3 units form a subgroup")
}

/// Additive hypergroup of [`f9_over_f3`].
pub fn f9_hypergroup() -> Hypermagma {
    f9_over_f3().additive.as_ref().clone()
}

/// Index of the class of `x ∈ 𝔽₉` inside [`f9_hypergroup`].
pub fn f9_class(x: usize) -> usize {
    let f = make_gf9();
    let h = f9_over_f3();
    let rep = x.min(f.mul(x, f.neg(f.one())));
    h.additive.index_of(f.label(rep)).expect("least representative label")
}

/// Class index of `αᵏ` for the designated generator `α` of `𝔽₉ˣ`.
pub fn f9_alpha_pow(k: usize) -> usize {
    let f = make_gf9();
    f9_class(f.pow(f.multiplicative_generator().unwrap(), k))
}

/// The Frobenius `[x] ↦ [x³]` as an endomorphism of `𝔽₉/𝔽₃ˣ`.
pub fn f9_frobenius() -> Morphism {
    let f = make_gf9();
    let h = Arc::new(f9_hypergroup());
    let map = (0..h.size())
        .map(|c| {
            let x = f.carrier().index_of(h.label(c)).unwrap();
            f9_class(f.pow(x, 3))
        })
        .collect();
    Morphism::new(h.clone(), h, map).expect("Frobenius is a morphism")
}

/// The default test battery `𝐊, ℤ₂, 𝐅, V, 𝔽₉/𝔽₃ˣ` with display names.
pub fn battery() -> Vec<(&'static str, Arc<Hypermagma>)> {
    vec![
        ("K", Arc::new(krasner())),
        ("Z2", Arc::new(z2())),
        ("F", Arc::new(sign_mosaic())),
        ("V", Arc::new(klein())),
        ("F9/F3x", Arc::new(f9_hypergroup())),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::axioms::analyze;
    use crate::Classification;

    #[test]
    fn battery_classifications() {
        let expect = [
            Classification::CanonicalHypergroup,
            Classification::AbelianGroup,
            Classification::CommutativeMosaic,
            Classification::AbelianGroup,
            Classification::CanonicalHypergroup,
        ];
        for ((name, m), c) in battery().iter().zip(expect) {
            assert_eq!(analyze(m).classification, c, "{name}");
        }
    }

    #[test]
    fn frobenius_is_strict_automorphism() {
        let fr = f9_frobenius();
        assert!(fr.is_strict());
        let k = fr.kind();
        assert!(k.injective && k.surjective);
        assert_ne!(fr.map(), (0..5).collect::<Vec<_>>().as_slice());
    }

    #[test]
    fn alpha_powers() {
        let h = f9_hypergroup();
        let sum = h.op(f9_alpha_pow(0), f9_alpha_pow(2));
        assert_eq!(sum, crate::Subset::from_indices([f9_alpha_pow(1), f9_alpha_pow(3)]));
    }
}
