//! Randomized invariants: orders, ring axioms and ring maps.

use std::cmp::Ordering;

use proptest::prelude::*;

use pqsym::oracle::{realize_qsym_with, TruncatedPolynomial};
use pqsym::pqsym::theta_map;
use pqsym::structure::{decompose_inductive, decompose_zb};
use pqsym::{ratio, Algebra, Composition, LinComb, PQSymBasis, PQSymElement, QSymBasis, QSymElement};

fn composition(max_len: usize, max_part: u32) -> impl Strategy<Value = Composition> {
    prop::collection::vec(1..=max_part, 0..=max_len).prop_map(|v| Composition::new(v).unwrap())
}

fn odd_composition(max_len: usize, max_part: u32) -> impl Strategy<Value = Composition> {
    prop::collection::vec(0..max_part.div_ceil(2), 0..=max_len)
        .prop_map(|v| Composition::new(v.into_iter().map(|p| 2 * p + 1).collect()).unwrap())
}

fn combination(index: impl Strategy<Value = Composition>) -> impl Strategy<Value = LinComb<Composition>> {
    prop::collection::vec((index, -4i64..=4, 1i64..=3), 0..4)
        .prop_map(|terms| terms.into_iter().map(|(a, n, d)| (a, ratio(n, d))).collect())
}

fn qsym() -> impl Strategy<Value = QSymElement> {
    (any::<bool>(), combination(composition(3, 2))).prop_map(|(fund, t)| {
        QSymElement::new(if fund { QSymBasis::Fundamental } else { QSymBasis::Monomial }, t)
    })
}

fn pqsym() -> impl Strategy<Value = PQSymElement> {
    (any::<bool>(), combination(odd_composition(3, 3))).prop_map(|(peak, t)| {
        PQSymElement::new(if peak { PQSymBasis::Peak } else { PQSymBasis::Monomial }, t).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn wll_is_a_total_order_refining_weight(a in composition(4, 4), b in composition(4, 4), c in composition(4, 4)) {
        prop_assert_eq!(a.wll_cmp(&b), b.wll_cmp(&a).reverse());
        prop_assert_eq!(a.wll_cmp(&b) == Ordering::Equal, a == b);
        if a.wll_cmp(&b) != Ordering::Greater && b.wll_cmp(&c) != Ordering::Greater {
            prop_assert_ne!(a.wll_cmp(&c), Ordering::Greater);
        }
        if a.weight() != b.weight() {
            prop_assert_eq!(a.wll_cmp(&b), a.weight().cmp(&b.weight()));
        } else if a.len() != b.len() {
            prop_assert_eq!(a.wll_cmp(&b), a.len().cmp(&b.len()));
        }
        prop_assert_eq!(a.cmp(&b), a.wll_cmp(&b));
    }

    #[test]
    fn composition_text_round_trips(a in composition(6, 9)) {
        prop_assert_eq!(a.to_string().parse::<Composition>().unwrap(), a);
    }

    #[test]
    fn cfl_factorization_is_a_decreasing_lyndon_product(a in composition(7, 3)) {
        let f = a.cfl_factorize();
        prop_assert_eq!(f.concat(), a);
        for (w, r) in &f.factors {
            prop_assert!(w.is_lyndon());
            prop_assert!(*r >= 1);
        }
        for pair in f.factors.windows(2) {
            prop_assert_eq!(pair[0].0.lex_cmp(&pair[1].0), Ordering::Greater);
        }
    }

    #[test]
    fn qsym_is_a_commutative_ring(f in qsym(), g in qsym(), h in qsym()) {
        prop_assert_eq!(f.multiply(&g), g.multiply(&f));
        prop_assert_eq!(f.multiply(&g).multiply(&h), f.multiply(&g.multiply(&h)));
        prop_assert_eq!(f.multiply(&g.add(&h)), f.multiply(&g).add(&f.multiply(&h)));
        prop_assert_eq!(QSymElement::one().multiply(&f), f.clone());
        prop_assert_eq!(f.to_fundamental().to_monomial(), f.to_monomial());
    }

    #[test]
    fn adams_psi_is_a_ring_map(f in qsym(), g in qsym(), n in 1u32..=3) {
        prop_assert_eq!(f.multiply(&g).adams_psi(n), f.adams_psi(n).multiply(&g.adams_psi(n)));
        prop_assert_eq!(f.add(&g).adams_psi(n), f.adams_psi(n).add(&g.adams_psi(n)));
    }

    #[test]
    fn theta_is_a_ring_map(f in qsym(), g in qsym()) {
        prop_assert_eq!(theta_map(&f.multiply(&g)), theta_map(&f).multiply(&theta_map(&g)));
        prop_assert_eq!(theta_map(&f.add(&g)), theta_map(&f).add(&theta_map(&g)));
    }

    #[test]
    fn pqsym_is_a_subring_of_qsym(f in pqsym(), g in pqsym()) {
        prop_assert_eq!(f.multiply(&g), g.multiply(&f));
        prop_assert_eq!(f.multiply(&g).embed_to_qsym(), f.embed_to_qsym().multiply(&g.embed_to_qsym()));
        prop_assert_eq!(f.to_peak().to_monomial().terms().clone(), f.to_monomial().terms().clone());
    }

    #[test]
    fn phi_is_a_ring_map_killing_even_degrees(f in pqsym(), g in pqsym(), n in 1u32..=3) {
        prop_assert_eq!(f.multiply(&g).adams_phi(n), f.adams_phi(n).multiply(&g.adams_phi(n)));
        let constant = f.to_monomial().coefficient(&Composition::empty());
        prop_assert_eq!(f.adams_phi(2), PQSymElement::scalar(constant));
    }

    #[test]
    fn products_realize_faithfully(f in qsym(), g in qsym()) {
        let d = f.max_weight() + g.max_weight();
        let k = d.max(1) as usize;
        let r = |x: &QSymElement| -> TruncatedPolynomial { realize_qsym_with(x, k, Some(d)).unwrap() };
        prop_assert_eq!(r(&f.multiply(&g)), r(&f).mul(&r(&g)));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn decompositions_round_trip(f in pqsym()) {
        let inductive = decompose_inductive(&f).unwrap();
        prop_assert_eq!(inductive.expand(), f.clone());
        prop_assert!(inductive.is_strict());
        prop_assert_eq!(decompose_zb(&f).unwrap(), inductive.clone());
        prop_assert_eq!(inductive.to_odd_generators().unwrap().expand(), f);
    }
}
