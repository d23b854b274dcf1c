use num_traits::One;
use qkoszul::resolution::{augment_map, compose, differential};
use qkoszul::{
    ring_report, Algebra, AlgebraElement, BasisMonomial, BimoduleMap, Cochain, Error, Generator, GradedRing,
    RegimePolicy, Scalar, Term,
};

fn alg(q: &[i64]) -> Algebra {
    Algebra::from_integers(q).unwrap()
}

fn mono(b: BasisMonomial) -> AlgebraElement {
    AlgebraElement::monomial(b)
}

fn map(a: &Algebra, source: usize, target: usize, entries: Vec<(Generator, Term)>) -> BimoduleMap {
    let m = a.m();
    let mut images: Vec<Vec<Term>> = vec![Vec::new(); m * (source + 1)];
    for (g, t) in entries {
        images[g.index()].push(t);
    }
    BimoduleMap::new(a, source, target, images).unwrap()
}

/// Hand-written chain map lifting `u_2` through degrees 0 and 1.
fn explicit_u2_lifts(a: &Algebra) -> (BimoduleMap, BimoduleMap) {
    let m = a.m();
    let last = m - 1;
    let e = |i: usize| mono(BasisMonomial::vertex(i));
    let fwd = mono(BasisMonomial::arrow(last));
    let back = mono(BasisMonomial::bar_arrow(last));
    let l0 = map(
        a,
        1,
        0,
        vec![
            (Generator::new(1, 0, last), Term::new(fwd.clone(), Generator::new(0, 0, 0), e(0))),
            (Generator::new(1, 1, 0), Term::new(back.clone(), Generator::new(0, 0, last), e(last))),
        ],
    );
    let l1 = map(
        a,
        2,
        1,
        vec![
            (Generator::new(2, 0, last), Term::new(fwd.clone(), Generator::new(1, 0, 0), e(1 % m))),
            (Generator::new(2, 1, 0), Term::new(back.clone(), Generator::new(1, 0, last), e(0))),
            (
                Generator::new(2, 1, last),
                Term::new(fwd.scale(&-a.q(last as i64).clone()), Generator::new(1, 1, 0), e(last)),
            ),
            (
                Generator::new(2, 2, 0),
                Term::new(back.scale(&-Scalar::one()), Generator::new(1, 1, last), e((m + last - 1) % m)),
            ),
        ],
    );
    (l0, l1)
}

fn u1u2_representative(a: &Algebra) -> Cochain {
    let last = a.m() - 1;
    let value = a.multiply(&mono(BasisMonomial::bar_arrow(last)), &mono(BasisMonomial::arrow(last)));
    Cochain::from_values(a, 2, &[(Generator::new(2, 1, 0), value)])
}

#[test]
fn explicit_lifts_form_a_chain_map() {
    for q in [&[2, 1][..], &[2, 1, 1], &[2, 3, 5], &[3, 1, 1, 1]] {
        let a = alg(q);
        let ring = GradedRing::new(&a, 2, RegimePolicy::Strict).unwrap();
        let u2 = ring.canonical_generators().unwrap().u2;
        let (l0, l1) = explicit_u2_lifts(&a);
        assert_eq!(augment_map(&a, &l0), u2.representative.values());
        let lhs = compose(&a, &differential(&a, 1), &l1).unwrap();
        let rhs = compose(&a, &l0, &differential(&a, 2)).unwrap();
        assert!(lhs.same_map(&rhs, &a), "q={q:?}");
    }
}

#[test]
fn computed_and_explicit_lifts_give_the_same_product() {
    for q in [&[2, 1][..], &[2, 1, 1], &[2, 3, 5]] {
        let a = alg(q);
        let ring = GradedRing::new(&a, 2, RegimePolicy::Strict).unwrap();
        let gens = ring.canonical_generators().unwrap();
        let (_, l1) = explicit_u2_lifts(&a);
        let by_hand = ring.class_of(&gens.u1.representative.compose(&a, &l1)).unwrap();
        let computed = ring.cup_product(&gens.u1, &gens.u2).unwrap();
        let expected = ring.class_of(&u1u2_representative(&a)).unwrap();
        assert_eq!(by_hand.coordinates, computed.coordinates);
        assert_eq!(computed.coordinates, expected.coordinates);
        assert!(!computed.is_zero());
    }
}

#[test]
fn computed_lift_commutes() {
    let a = alg(&[2, 3, 5]);
    let ring = GradedRing::new(&a, 3, RegimePolicy::Strict).unwrap();
    let u1 = ring.canonical_generators().unwrap().u1;
    let lifts = ring.lift_cocycle(&u1.representative, 3).unwrap();
    assert_eq!(augment_map(&a, &lifts[0]), u1.representative.values());
    for j in 1..=3 {
        let lhs = compose(&a, &differential(&a, j), &lifts[j]).unwrap();
        let rhs = compose(&a, &lifts[j - 1], &differential(&a, j + 1)).unwrap();
        assert!(lhs.same_map(&rhs, &a), "level {j}");
    }
}

#[test]
fn product_is_well_defined_on_classes() {
    let a = alg(&[2, 1, 1]);
    let ring = GradedRing::new(&a, 2, RegimePolicy::Strict).unwrap();
    let gens = ring.canonical_generators().unwrap();
    let h = Cochain::from_values(&a, 0, &[(Generator::new(0, 0, 1), mono(BasisMonomial::vertex(1)))]);
    let shifted = gens.u2.representative.add(&ring.hom().coboundary(&h));
    assert_ne!(shifted, gens.u2.representative);
    let u2b = ring.class_of(&shifted).unwrap();
    assert_eq!(u2b.coordinates, gens.u2.coordinates);
    let p = ring.cup_product(&gens.u1, &gens.u2).unwrap();
    assert_eq!(ring.cup_product(&gens.u1, &u2b).unwrap().coordinates, p.coordinates);
    assert_eq!(
        ring.cup_product(&u2b, &gens.u1).unwrap().coordinates,
        ring.cup_product(&gens.u2, &gens.u1).unwrap().coordinates
    );
}

#[test]
fn degree_zero_products_match_general_lifting() {
    for q in [&[2][..], &[3, 1], &[2, 5]] {
        let a = alg(q);
        let ring = GradedRing::new(&a, 2, RegimePolicy::Strict).unwrap();
        let gens = ring.canonical_generators().unwrap();
        let mut classes = vec![gens.one.clone(), gens.u1.clone(), gens.u2.clone()];
        classes.extend(gens.x.iter().cloned());
        for f in &classes {
            for g in &classes {
                if f.degree == 0 || g.degree == 0 {
                    let fast = ring.cup_product(f, g).unwrap();
                    let slow = ring.cup_product_via_lifting(f, g).unwrap();
                    assert_eq!(fast.coordinates, slow.coordinates, "q={q:?}");
                }
            }
        }
    }
}

#[test]
fn presentation_holds() {
    for q in [&[2][..], &[2, 1], &[2, 1, 1], &[-2, 3, 1, 1]] {
        let report = ring_report(&alg(q), 5, RegimePolicy::Strict).unwrap();
        assert!(report.passed());
        assert_eq!(report.total_dim, q.len() + 4);
        assert_eq!(report.generators.len(), q.len() + 3);
    }
}

#[test]
fn presentation_fails_at_a_root_of_unity() {
    let a = alg(&[1, 1]);
    assert!(matches!(ring_report(&a, 4, RegimePolicy::Strict), Err(Error::NonGeneric { .. })));
    let report = GradedRing::new(&a, 4, RegimePolicy::AllowNonGeneric)
        .unwrap()
        .check_presentation()
        .unwrap();
    assert!(!report.passed());
    assert!(report.total_dim > a.m() + 4);
}
