use qkoszul::{formulas, Algebra, AlgebraSpec, HomComplex, RegimePolicy, Scalar};

fn spec(m: usize, zeta: i64) -> Algebra {
    Algebra::new(AlgebraSpec::with_zeta(m, Scalar::from_integer(zeta.into()))).unwrap()
}

#[test]
fn hom_dimensions_follow_the_closed_form() {
    for m in 1..=5 {
        let hom = HomComplex::new(&spec(m, 2));
        for n in 0..=2 * m + 6 {
            assert_eq!(hom.hom_dimension(n), formulas::hom_dimension(m, n), "m={m} n={n}");
            assert_eq!(hom.basis(n).len(), hom.hom_dimension(n));
        }
    }
}

#[test]
fn kernel_and_image_tables() {
    for m in 2..=4 {
        let hom = HomComplex::new(&spec(m, 3));
        for n in 0..=2 * m + 2 {
            let (ker, im) = hom.kernel_image_dims(n, RegimePolicy::Strict).unwrap();
            assert_eq!(Some(ker), formulas::kernel_dimension(m, n), "ker m={m} n={n}");
            assert_eq!(Some(im), formulas::image_dimension(m, n), "im m={m} n={n}");
        }
    }
}

#[test]
fn one_vertex_cohomology() {
    let hom = HomComplex::new(&spec(1, -3));
    let dims: Vec<usize> = (0..7).map(|n| hom.cohomology_dimension(n, RegimePolicy::Strict).unwrap()).collect();
    assert_eq!(dims, vec![2, 2, 1, 0, 0, 0, 0]);
}

#[test]
fn degree_table_is_consistent() {
    let hom = HomComplex::new(&spec(3, 2));
    for row in hom.degree_table(8) {
        assert_eq!(row.hh, row.ker - row.im);
        assert_eq!(row.hh, formulas::cohomology_dimension(3, row.n));
    }
}

#[test]
fn cocycle_basis_spans_the_kernel() {
    let hom = HomComplex::new(&spec(2, 5));
    for n in 0..5 {
        let basis = hom.cocycle_basis(n);
        assert_eq!(basis.len(), hom.raw_kernel_image_dims(n).0);
        assert!(basis.iter().all(|f| hom.is_cocycle(f)));
    }
}

#[test]
fn table_depends_only_on_zeta() {
    let r = |n: i64, d: i64| Scalar::new(n.into(), d.into());
    let tables: Vec<_> = [
        vec![r(2, 1), r(1, 1), r(1, 1)],
        vec![r(1, 1), r(2, 1), r(1, 1)],
        vec![r(1, 2), r(4, 1), r(1, 1)],
    ]
    .into_iter()
    .map(|q| HomComplex::new(&Algebra::new(AlgebraSpec::new(q)).unwrap()).degree_table(8))
    .collect();
    assert_eq!(tables[0], tables[1]);
    assert_eq!(tables[0], tables[2]);
}
