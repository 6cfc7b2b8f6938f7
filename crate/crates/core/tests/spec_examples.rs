//! Worked examples for every module, exercised through the public API.

use pqsym::composition::{compositions, fibonacci, odd_compositions};
use pqsym::oracle::{adams_substitute, check_identity, extract_qsym, realize_qsym, Element, TruncatedPolynomial};
use pqsym::pqsym::{generator, theta_map};
use pqsym::qsym::{e_alpha, symmetric_injection, SymmetricFamily};
use pqsym::quasishuffle::{qshuffle, qshuffle_power};
use pqsym::structure::{
    decompose_inductive, decompose_zb, enumerate_zb_basis, expansion_matrix, verify_euler_relations, GeneratorMonomial,
};
use pqsym::symfun::{euler_relation, lambda_from_adams, p_in_q, plethysm_pg, q_in_p, straighten_strict};
use pqsym::{
    rat, ratio, Algebra, Composition, GeneratorPolynomial, PQSymBasis, PQSymElement, Partition, PeakSet,
    PowerSumPoly, QPoly, QSymBasis, QSymElement,
};

fn c(parts: &[u32]) -> Composition {
    Composition::new(parts.to_vec()).unwrap()
}

fn m(terms: &[(&[u32], i64)]) -> QSymElement {
    QSymElement::new(QSymBasis::Monomial, terms.iter().map(|(a, x)| (c(a), rat(*x))).collect())
}

fn l(terms: &[(&[u32], i64)]) -> PQSymElement {
    PQSymElement::new(PQSymBasis::Monomial, terms.iter().map(|(a, x)| (c(a), rat(*x))).collect()).unwrap()
}

fn k(alpha: &[u32]) -> PQSymElement {
    PQSymElement::peak(c(alpha)).unwrap()
}

fn p(n: u32) -> PowerSumPoly {
    PowerSumPoly::var(n)
}

fn q(n: u32) -> QPoly {
    QPoly::var(n)
}

#[test]
fn compositions_module() {
    let d = c(&[2, 1]).descent_set();
    assert_eq!((d.n, d.elements), (3, vec![2]));
    let d = c(&[1, 4, 2, 3]).descent_set();
    assert_eq!((d.n, d.elements), (10, vec![1, 5, 7]));
    assert!(c(&[6]).descent_set().elements.is_empty());

    assert_eq!(c(&[1, 4, 2, 3]).peak_set().elements(), &[5, 7]);
    assert!(Composition::ones(5).peak_set().is_empty());
    assert_eq!(c(&[2, 1]).peak_set().elements(), &[2]);
    assert_eq!(c(&[3]).odd_to_peak().unwrap(), c(&[2, 1]).peak_set());

    assert_eq!(c(&[1, 4, 2, 3]).peak_representative(), c(&[1, 1, 1, 5, 1, 1]));
    assert_eq!(c(&[3]).hat().unwrap(), c(&[2, 1]));
    assert_eq!(c(&[1, 5]).hat().unwrap(), c(&[1, 2, 2, 1]));
    assert_eq!(c(&[1, 1, 1, 5, 1, 1]).hat().unwrap(), c(&[1, 1, 1, 2, 2, 1, 1, 1]));

    assert!(c(&[1, 2, 1, 3]).is_lyndon());
    assert!(c(&[3]).is_lyndon());
    assert!(!c(&[2, 1, 3]).is_lyndon());
    assert!(!c(&[1, 1]).is_lyndon());

    assert_eq!(c(&[3, 1]).cfl_factorize().factors, vec![(c(&[3]), 1), (c(&[1]), 1)]);
    assert_eq!(c(&[1, 3, 1, 3]).cfl_factorize().factors, vec![(c(&[1, 3]), 2)]);
    assert_eq!(c(&[5]).cfl_factorize().factors, vec![(c(&[5]), 1)]);

    use std::cmp::Ordering::Greater;
    assert_eq!(c(&[5]).wll_cmp(&c(&[1, 1, 2])), Greater);
    assert_eq!(c(&[1, 1, 2]).wll_cmp(&c(&[2, 2])), Greater);
    assert_eq!(c(&[2, 2]).wll_cmp(&c(&[1, 3])), Greater);

    assert_eq!(c(&[3, 9]).reduce_elementary(), (3, c(&[1, 3])));
    assert_eq!(c(&[1, 3]).reduce_elementary(), (1, c(&[1, 3])));
    assert_eq!(c(&[5]).reduce_elementary(), (5, c(&[1])));

    let mut four = odd_compositions(4);
    four.sort();
    let mut expected = vec![c(&[3, 1]), c(&[1, 3]), c(&[1, 1, 1, 1])];
    expected.sort();
    assert_eq!(four, expected);
    assert_eq!(odd_compositions(1), vec![c(&[1])]);
    assert_eq!(odd_compositions(10).len(), 55);
    assert_eq!(fibonacci(9), 55);
}

#[test]
fn quasishuffle_module() {
    let s = qshuffle(&c(&[1]), &Composition::empty());
    assert_eq!(s.iter().collect::<Vec<_>>(), vec![(&c(&[1]), 1)]);
    let s = qshuffle(&c(&[1]), &c(&[1]));
    assert_eq!((s.multiplicity(&c(&[1, 1])), s.multiplicity(&c(&[2])), s.len()), (2, 1, 2));
    let s = qshuffle(&c(&[1]), &c(&[1, 1]));
    assert_eq!(s.multiplicity(&c(&[1, 1, 1])), 3);
    assert_eq!(s.multiplicity(&c(&[1, 2])), 1);
    assert_eq!(s.multiplicity(&c(&[2, 1])), 1);
    assert_eq!(s.len(), 3);

    let s = qshuffle_power(&c(&[1]), 2);
    assert_eq!(s.leading(), Some((&c(&[1, 1]), 2)));
    assert_eq!(s.multiplicity(&c(&[2])), 1);
    let s = qshuffle_power(&c(&[1, 3]), 1);
    assert_eq!(s.iter().collect::<Vec<_>>(), vec![(&c(&[1, 3]), 1)]);
    let s = qshuffle_power(&c(&[3]), 2);
    assert_eq!(s.leading(), Some((&c(&[3, 3]), 2)));
    assert_eq!(s.multiplicity(&c(&[6])), 1);
}

#[test]
fn symfun_module() {
    assert_eq!(q_in_p(1), p(1).scale(&rat(2)));
    assert_eq!(q_in_p(2), p(1).pow(2).scale(&rat(2)));
    assert_eq!(q_in_p(3), p(1).pow(3).scale(&ratio(4, 3)).add(&p(3).scale(&ratio(2, 3))));

    assert_eq!(p_in_q(1).unwrap(), q(1).scale(&ratio(1, 2)));
    assert_eq!(p_in_q(3).unwrap(), q(3).scale(&ratio(3, 2)).sub(&q(1).pow(3).scale(&ratio(1, 4))));
    assert!(p_in_q(2).is_err());
    assert_eq!(p_in_q(5).unwrap().to_power_sums(), p(5));

    assert!(euler_relation(1).is_zero());
    assert_eq!(euler_relation(2), q(2).scale(&rat(2)).sub(&q(1).pow(2)));
    let e4 = q(4).scale(&rat(2)).sub(&q(1).mul(&q(3)).scale(&rat(2))).add(&q(2).pow(2));
    assert_eq!(euler_relation(4), e4);
    for n in 1..=6 {
        assert!(euler_relation(n).to_power_sums().is_zero());
    }

    assert_eq!(straighten_strict(&q(1).pow(2)).unwrap(), q(2).scale(&rat(2)));
    assert_eq!(straighten_strict(&q(1).pow(3)).unwrap(), q(2).mul(&q(1)).scale(&rat(2)));
    assert_eq!(straighten_strict(&q(3)).unwrap(), q(3));

    assert_eq!(plethysm_pg(&p(1).scale(&rat(2)), 3).unwrap(), p(3).scale(&rat(2)));
    assert_eq!(plethysm_pg(&q_in_p(2), 3).unwrap(), p(3).pow(2).scale(&rat(2)));
    assert_eq!(plethysm_pg(&q_in_p(3), 1).unwrap(), q_in_p(3));

    let adams: Vec<PowerSumPoly> = (1..=6).map(p).collect();
    let lambdas = lambda_from_adams(&adams);
    assert_eq!(lambdas[0], p(1));
    assert_eq!(lambdas[1], p(1).pow(2).sub(&p(2)).scale(&ratio(1, 2)));
    let odd: Vec<PowerSumPoly> =
        (1..=6).map(|n| if n % 2 == 1 { p(n).scale(&rat(2)) } else { PowerSumPoly::zero() }).collect();
    for (n, lam) in lambda_from_adams(&odd).iter().enumerate() {
        assert_eq!(*lam, q_in_p(n as u32 + 1));
    }
}

#[test]
fn qsym_module() {
    let m1 = QSymElement::monomial(c(&[1]));
    assert_eq!(m1.multiply(&m1), m(&[(&[1, 1], 2), (&[2], 1)]));
    assert_eq!(QSymElement::one().multiply(&m1), m1);
    assert_eq!(m1.multiply(&QSymElement::monomial(c(&[1, 1]))), m(&[(&[1, 1, 1], 3), (&[1, 2], 1), (&[2, 1], 1)]));

    assert_eq!(QSymElement::fundamental(c(&[2])).to_monomial(), m(&[(&[2], 1), (&[1, 1], 1)]));
    for n in 1..=5 {
        assert_eq!(QSymElement::fundamental(c(&[n])), symmetric_injection(SymmetricFamily::Complete, n));
    }
    let f21 = QSymElement::fundamental(c(&[2, 1]));
    assert_eq!(f21.to_monomial().to_fundamental().terms(), f21.terms());

    assert_eq!(QSymElement::monomial(c(&[1, 2])).adams_psi(3), m(&[(&[3, 6], 1)]));
    assert_eq!(m1.lambda(2), m(&[(&[1, 1], 1)]));
    for n in 1..=6u32 {
        assert_eq!(e_alpha(n, &c(&[1])), symmetric_injection(SymmetricFamily::Elementary, n));
    }
    assert_eq!(symmetric_injection(SymmetricFamily::SchurQ, 1), m(&[(&[1], 2)]));
    assert_eq!(symmetric_injection(SymmetricFamily::Complete, 2), m(&[(&[2], 1), (&[1, 1], 1)]));
    assert_eq!(symmetric_injection(SymmetricFamily::SchurQ, 2), m(&[(&[2], 2), (&[1, 1], 4)]));
}

#[test]
fn pqsym_module() {
    assert_eq!(theta_map(&QSymElement::fundamental(c(&[2, 1]))), k(&[3]));
    assert!(theta_map(&QSymElement::monomial(c(&[2]))).is_zero());
    assert_eq!(theta_map(&QSymElement::monomial(c(&[2, 1]))), l(&[(&[3], -1)]));

    for n in 1..=6 {
        let ones = Composition::ones(n);
        assert_eq!(PQSymElement::peak(ones.clone()).unwrap().to_monomial(), l(&[(ones.parts(), 1)]));
        assert_eq!(PQSymElement::schur_q(n as u32).embed_to_qsym(), symmetric_injection(SymmetricFamily::SchurQ, n as u32));
    }
    assert_eq!(k(&[3]).to_monomial(), l(&[(&[1, 1, 1], 1), (&[3], -1)]));
    assert_eq!(k(&[1, 3]).to_monomial().to_peak().terms(), k(&[1, 3]).terms());

    let l1 = l(&[(&[1], 1)]);
    assert_eq!(l1.multiply(&l1), l(&[(&[1, 1], 2)]));
    assert_eq!(l(&[(&[3], 1)]).multiply(&l1), l(&[(&[3, 1], 1), (&[1, 3], 1)]));
    assert_eq!(PQSymElement::one().multiply(&l1), l1);

    assert_eq!(l1.embed_to_qsym(), m(&[(&[1], 2)]));
    assert_eq!(l(&[(&[3], 1)]).embed_to_qsym(), m(&[(&[3], 2)]));

    assert_eq!(l(&[(&[1, 1], 1)]).adams_phi(3), l(&[(&[3, 3], 1)]));
    for alpha in [c(&[1]), c(&[1, 3]), c(&[5, 1, 1])] {
        assert!(PQSymElement::monomial(alpha).unwrap().adams_phi(2).is_zero());
    }

    for n in 1..=6 {
        assert_eq!(l1.lambda_tilde(n), PQSymElement::schur_q(n));
    }
    assert_eq!(l(&[(&[3], 1)]).lambda_tilde(2), l(&[(&[3, 3], 1)]));
}

#[test]
fn structure_module() {
    let one = |alpha: &[u32], lambda: &[u32]| GeneratorMonomial::new([(c(alpha), Partition::new(lambda.to_vec()).unwrap())]).unwrap();
    assert_eq!(enumerate_zb_basis(1), vec![one(&[1], &[1])]);
    let mut three = enumerate_zb_basis(3);
    three.sort();
    let mut expected = vec![one(&[1], &[3]), one(&[1], &[2, 1])];
    expected.sort();
    assert_eq!(three, expected);
    assert_eq!(enumerate_zb_basis(4).len(), 3);

    let sym = |n, alpha: &[u32]| GeneratorPolynomial::symbol(n, &c(alpha)).unwrap();
    assert_eq!(sym(1, &[1]).expand(), l(&[(&[1], 1)]));
    assert!(GeneratorPolynomial::symbol(2, &c(&[3])).is_err());
    assert_eq!(*generator(2, &c(&[3])).unwrap(), l(&[(&[3, 3], 1)]));
    let three_q3 = sym(3, &[1]).scale(&rat(3)).sub(&sym(2, &[1]).mul(&sym(1, &[1])));
    assert_eq!(three_q3.expand(), l(&[(&[3], 1)]));

    for n in 1..=6 {
        let ones = l(&[(Composition::ones(n).parts(), 1)]);
        assert_eq!(decompose_inductive(&ones).unwrap(), sym(n as u32, &[1]));
    }
    let l3 = l(&[(&[3], 1)]);
    assert_eq!(decompose_inductive(&l3).unwrap(), three_q3);
    let odd_form = sym(3, &[1]).scale(&rat(3)).sub(&sym(1, &[1]).pow(3).scale(&ratio(1, 2)));
    assert_eq!(decompose_inductive(&l3).unwrap().to_odd_generators().unwrap(), odd_form);
    let l31 = l(&[(&[3, 1], 1)]);
    let expected = three_q3.mul(&sym(1, &[1])).sub(&sym(1, &[1, 3]));
    assert_eq!(decompose_inductive(&l31).unwrap(), expected.straighten().unwrap());
    assert_eq!(expected.expand(), l31);

    assert_eq!(decompose_zb(&l3).unwrap(), three_q3);
    assert_eq!(decompose_zb(&PQSymElement::schur_q(4)).unwrap(), sym(4, &[1]));

    assert!(verify_euler_relations(&c(&[1]), 2).unwrap());
    assert!(verify_euler_relations(&c(&[1, 3]), 2).unwrap());
    assert!(verify_euler_relations(&c(&[1]), 1).unwrap());

    for (n, rank) in [(2, 1), (5, 5), (9, 34)] {
        let basis = enumerate_zb_basis(n);
        assert_eq!(expansion_matrix(n, &basis).rank(), rank);
    }
}

fn x(kvars: usize, terms: &[(&[u32], i64)]) -> TruncatedPolynomial {
    let deg = terms.iter().map(|(e, _)| e.iter().sum::<u32>()).max().unwrap_or(0);
    TruncatedPolynomial::from_terms(kvars, deg, terms.iter().map(|(e, v)| (e.to_vec(), rat(*v))))
}

#[test]
fn oracle_module() {
    assert_eq!(realize_qsym(&m(&[(&[1], 1)]), 2).unwrap(), x(2, &[(&[1, 0], 1), (&[0, 1], 1)]));
    assert_eq!(realize_qsym(&m(&[(&[1, 1], 1)]), 2).unwrap(), x(2, &[(&[1, 1], 1)]));
    assert_eq!(
        realize_qsym(&m(&[(&[2, 1], 1)]), 3).unwrap(),
        x(3, &[(&[2, 1, 0], 1), (&[2, 0, 1], 1), (&[0, 2, 1], 1)])
    );

    let poly = x(2, &[(&[1, 0], 1), (&[0, 1], 1), (&[1, 1], 1)]);
    assert_eq!(extract_qsym(&poly).unwrap(), m(&[(&[1], 1), (&[1, 1], 1)]));
    assert!(extract_qsym(&x(2, &[(&[2, 1], 1), (&[1, 2], -1)])).is_err());
    assert!(extract_qsym(&x(3, &[(&[2, 1, 0], 1), (&[1, 2, 0], -1)])).is_err());

    let lin = x(2, &[(&[1, 0], 1), (&[0, 1], 1)]);
    assert_eq!(adams_substitute(&lin, 2), x(2, &[(&[2, 0], 1), (&[0, 2], 1)]));
    assert_eq!(adams_substitute(&lin, 1), lin);

    let l1 = l(&[(&[1], 1)]);
    assert!(check_identity(&Element::PQSym(l1.multiply(&l1)), &Element::PQSym(l(&[(&[1, 1], 2)])), Some(4)).unwrap());
    let q2 = Element::QSym(symmetric_injection(SymmetricFamily::SchurQ, 2));
    assert!(check_identity(&q2, &Element::PQSym(PQSymElement::peak_of_set(&PeakSet::new(2, vec![]).unwrap())), Some(3)).unwrap());
    assert!(!check_identity(&Element::QSym(m(&[(&[2], 1)])), &Element::QSym(m(&[(&[1, 1], 1)])), Some(3)).unwrap());
}

#[test]
fn compositions_cover_every_weight() {
    for n in 1..=8u32 {
        let all = compositions(n);
        assert_eq!(all.len(), 1 << (n - 1));
        assert!(all.iter().all(|a| a.weight() == n));
    }
}
