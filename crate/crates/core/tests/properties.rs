//! Property tests over random hypermagmas, zoo samples and graphic matroids.

use std::sync::Arc;

use proptest::prelude::*;

use hyperkit::axioms::{analyze, Axiom};
use hyperkit::format::ObjectFile;
use hyperkit::hom::{check_kind, enumerate_maps, CategoryTag, Morphism};
use hyperkit::matroid::{self, Matroid};
use hyperkit::zoo::{lattice, search};
use hyperkit::{find_isomorphism, Carrier, Hypermagma, Subset};

fn arb_magma(max: usize) -> impl Strategy<Value = Hypermagma> {
    (1..=max).prop_flat_map(|n| {
        prop::collection::vec(0u64..(1 << n), n * n).prop_map(move |bits| {
            let table = bits.into_iter().map(Subset::from_bits).collect();
            Hypermagma::new(Carrier::numbered(n).unwrap(), table, None).unwrap()
        })
    })
}

/// Random magma with element 0 forced to be the identity.
fn arb_unital(max: usize) -> impl Strategy<Value = Hypermagma> {
    (1..=max).prop_flat_map(|n| {
        prop::collection::vec(0u64..(1 << n), n * n).prop_map(move |bits| {
            let table = bits
                .into_iter()
                .enumerate()
                .map(|(k, b)| match (k / n, k % n) {
                    (0, y) => Subset::singleton(y),
                    (x, 0) => Subset::singleton(x),
                    _ => Subset::from_bits(b),
                })
                .collect();
            Hypermagma::new(Carrier::numbered(n).unwrap(), table, Some(0)).unwrap()
        })
    })
}

fn arb_perm(n: usize) -> impl Strategy<Value = Vec<usize>> {
    Just((0..n).collect::<Vec<_>>()).prop_shuffle()
}

fn canonical4() -> &'static [Hypermagma] {
    static ALL: std::sync::OnceLock<Vec<Hypermagma>> = std::sync::OnceLock::new();
    ALL.get_or_init(|| search::canonical_hypergroups_up_to(4).unwrap())
}

fn lattices5() -> &'static [lattice::Lattice] {
    static ALL: std::sync::OnceLock<Vec<lattice::Lattice>> = std::sync::OnceLock::new();
    ALL.get_or_init(|| (1..=5).flat_map(|n| lattice::all_lattices(n).unwrap()).collect())
}

fn arb_graphic() -> impl Strategy<Value = Matroid> {
    (1usize..=4).prop_flat_map(|v| {
        prop::collection::vec((0..v, 0..v), 0..=6)
            .prop_map(move |edges| Matroid::graphic(v, &edges).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn witnesses_recheck(m in arb_magma(4)) {
        let r = analyze(&m);
        for axiom in [Axiom::Total, Axiom::Commutative, Axiom::Associative, Axiom::SingleValued, Axiom::UniqueInverses, Axiom::Reversible] {
            if let Some(w) = r.witness(axiom) {
                prop_assert!(w.rechecks(&m), "{} witness {:?}", axiom.name(), w);
            }
        }
    }

    #[test]
    fn classification_is_invariant_under_relabelling(
        (m, p) in arb_magma(4).prop_flat_map(|m| { let n = m.size(); (Just(m), arb_perm(n)) })
    ) {
        let q = m.permute(&p).unwrap();
        prop_assert_eq!(analyze(&m).classification, analyze(&q).classification);
        let iso = find_isomorphism(&m, &q).expect("a permuted copy is isomorphic");
        for x in 0..m.size() {
            for y in 0..m.size() {
                prop_assert_eq!(m.op(x, y).map(&iso), q.op(iso[x], iso[y]));
            }
        }
    }

    #[test]
    fn opposite_is_an_involution(m in arb_magma(4)) {
        prop_assert_eq!(m.opposite().opposite(), m);
    }

    #[test]
    fn object_file_round_trips(m in arb_magma(4)) {
        let text = ObjectFile::from_hypermagma(&m).to_canonical();
        let back = ObjectFile::parse(&text).unwrap();
        prop_assert_eq!(back.to_canonical(), text);
        prop_assert_eq!(back.to_hypermagma().unwrap(), m);
    }

    #[test]
    fn colax_maps_compose(a in arb_unital(3), b in arb_unital(3), c in arb_unital(2)) {
        let (a, b, c) = (Arc::new(a), Arc::new(b), Arc::new(c));
        let ab = enumerate_maps(&a, &b, CategoryTag::UHMag, false).unwrap();
        let bc = enumerate_maps(&b, &c, CategoryTag::UHMag, false).unwrap();
        for f in &ab {
            let f = Morphism::new(a.clone(), b.clone(), f.clone()).unwrap();
            prop_assert!(check_kind(&f).colax && check_kind(&f).unital);
            for g in &bc {
                let g = Morphism::new(b.clone(), c.clone(), g.clone()).unwrap();
                prop_assert!(f.then(&g).unwrap().is_morphism_in(CategoryTag::UHMag));
            }
        }
    }

    #[test]
    fn closures_are_closure_operators(m in arb_unital(4), bits in 0u64..16) {
        let s = Subset::from_bits(bits) & m.full();
        let k = m.strict_sub_closure(s);
        prop_assert!(s.is_subset(&k) && m.is_strict_sub(k));
        prop_assert_eq!(m.strict_sub_closure(k), k);
        let a = m.absorptive_closure(s);
        prop_assert!(s.is_subset(&a) && m.is_absorptive(a));
        prop_assert_eq!(m.absorptive_closure(a), a);
    }

    #[test]
    fn canonical_hypergroups_satisfy_the_inverse_laws(i in 0usize..110) {
        let h = &canonical4()[i];
        let inv = h.inverse_map().unwrap();
        for x in 0..h.size() {
            for y in 0..h.size() {
                prop_assert_eq!(h.op(x, y).map(inv), h.op(inv[y], inv[x]));
                for z in h.op(x, y).iter() {
                    prop_assert!(h.op(z, inv[y]).contains(x));
                }
            }
        }
    }

    #[test]
    fn lattice_mosaics_realise_modularity(i in 0usize..1000) {
        let l = &lattices5()[i % lattices5().len()];
        let m = lattice::lattice_mosaic(l).unwrap();
        let c = analyze(&m).classification;
        prop_assert!(c.is_commutative_mosaic());
        prop_assert_eq!(c.is_hypergroup(), l.is_modular());
    }

    #[test]
    fn matroid_closure_is_a_closure_operator(m in arb_graphic(), a in 0u64..64, b in 0u64..64) {
        let full = Subset::full(m.size());
        let (a, b) = (Subset::from_bits(a) & full, Subset::from_bits(b) & full);
        let ca = m.closure(a);
        prop_assert!(a.is_subset(&ca));
        prop_assert_eq!(m.closure(ca), ca);
        prop_assert!(m.closure(a & b).is_subset(&ca));
        prop_assert!(m.is_flat(ca));
        for f in &m.flats {
            for g in &m.flats {
                prop_assert!(m.is_flat(*f & *g));
            }
        }
        prop_assert!(m.exchange_witness().is_none());
    }

    #[test]
    fn pointed_simplification_gives_a_mosaic(m in arb_graphic()) {
        let s = matroid::simplify(&m, true).unwrap();
        prop_assert!(s.matroid.is_simple_pointed());
        let mosaic = matroid::matroid_to_mosaic(&s.matroid).unwrap();
        prop_assert!(analyze(&mosaic).classification.is_commutative_mosaic());
        prop_assert!(matroid::mosaic_invariants_hold(&s.matroid, &mosaic));
        // Non-loops land on points; loops are sent nowhere or to the base point.
        for x in 0..m.size() {
            if !m.loops().contains(x) {
                prop_assert!(s.unit[x].is_some());
            }
        }
    }

    #[test]
    fn subset_algebra(a in 0u64..256, b in 0u64..256) {
        let (x, y) = (Subset::from_bits(a), Subset::from_bits(b));
        prop_assert_eq!(Subset::from_indices(x.iter()), x);
        prop_assert_eq!((x | y).len() + (x & y).len(), x.len() + y.len());
        prop_assert!((x & y).is_subset(&x) && x.is_subset(&(x | y)));
        prop_assert_eq!(x.intersects(&y), !(x & y).is_empty());
    }
}
