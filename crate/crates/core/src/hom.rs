//! The cochain complex `Hom_{Λ^e}(P^n, Λ_q)` and its cohomology.
//!
//! A cochain is determined by its values on the summand generators; the
//! value on `e_i ⊗_g e_j` lies in the corner `e_i Λ e_j`. So
//! `Hom(P^n, Λ) ≅ ⊕_g e_{origin(g)} Λ e_{terminus(g)}`, and the coboundary
//! `d^n f = f ∘ ∂^{n+1}` is computed generically from the terms of `∂^{n+1}`.

use std::fmt;

use num_traits::Zero;

use crate::algebra::{Algebra, AlgebraElement, BasisMonomial, RegimePolicy};
use crate::error::Result;
use crate::linalg::{self, Matrix};
use crate::resolution::{differential, generators, BimoduleMap, Generator};
use crate::Scalar;

/// A bimodule map `P^n → Λ_q`, stored as its values on generators in
/// canonical order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cochain {
    pub degree: usize,
    values: Vec<AlgebraElement>,
}

impl Cochain {
    pub fn zero(m: usize, degree: usize) -> Self {
        Cochain {
            degree,
            values: vec![AlgebraElement::zero(); m * (degree + 1)],
        }
    }

    /// Builds a cochain from explicit `(generator, value)` pairs; every other
    /// generator maps to zero. Panics if a value leaves its corner.
    pub fn from_values(alg: &Algebra, degree: usize, values: &[(Generator, AlgebraElement)]) -> Self {
        let m = alg.m();
        let mut c = Cochain::zero(m, degree);
        for (g, v) in values {
            assert_eq!(g.n, degree);
            c.set(alg, g, v.clone());
        }
        c
    }

    pub fn value(&self, g: &Generator) -> &AlgebraElement {
        &self.values[g.index()]
    }

    pub fn set(&mut self, alg: &Algebra, g: &Generator, v: AlgebraElement) {
        let m = alg.m();
        for (b, _) in v.iter() {
            assert!(
                b.origin(m) == g.i && b.terminus(m) == g.terminus(m),
                "value {v} of {g} leaves its corner"
            );
        }
        self.values[g.index()] = v;
    }

    pub fn values(&self) -> &[AlgebraElement] {
        &self.values
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(AlgebraElement::is_zero)
    }

    pub fn add(&self, other: &Cochain) -> Cochain {
        assert_eq!(self.degree, other.degree);
        Cochain {
            degree: self.degree,
            values: self.values.iter().zip(&other.values).map(|(a, b)| a.add(b)).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Cochain {
        Cochain {
            degree: self.degree,
            values: self.values.iter().map(|v| v.scale(c)).collect(),
        }
    }

    /// `x · f`, valuewise. For central `x` this is again a cochain.
    pub fn left_multiply(&self, alg: &Algebra, x: &AlgebraElement) -> Cochain {
        Cochain {
            degree: self.degree,
            values: self.values.iter().map(|v| alg.multiply(x, v)).collect(),
        }
    }

    /// `f ∘ L` for a bimodule map `L: P^k → P^degree`.
    pub fn compose(&self, alg: &Algebra, map: &BimoduleMap) -> Cochain {
        assert_eq!(map.target_degree(), self.degree, "degree mismatch in f ∘ L");
        let m = alg.m();
        let k = map.source_degree();
        let values = generators(m, k)
            .iter()
            .map(|g| {
                map.terms(g).iter().fold(AlgebraElement::zero(), |acc, t| {
                    acc.add(&alg.multiply3(&t.left, self.value(&t.target), &t.right))
                })
            })
            .collect();
        Cochain { degree: k, values }
    }
}

impl fmt::Display for Cochain {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree;
        let gens_per_vertex = n + 1;
        let parts: Vec<String> = self
            .values
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(k, v)| {
                let g = Generator::new(n, k % gens_per_vertex, k / gens_per_vertex);
                format!("{g} ↦ {v}")
            })
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(", "))
        }
    }
}

/// Ordered basis of `Hom(P^n, Λ)`: generators in canonical order, corner
/// monomials in canonical order within each generator.
#[derive(Clone, Debug)]
pub struct HomBasis {
    pub degree: usize,
    pub elements: Vec<(Generator, BasisMonomial)>,
    offsets: Vec<usize>,
    corners: Vec<Vec<BasisMonomial>>,
}

impl HomBasis {
    pub fn new(alg: &Algebra, n: usize) -> Self {
        let m = alg.m();
        let mut elements = Vec::new();
        let mut offsets = Vec::new();
        let mut corners = Vec::new();
        for g in generators(m, n) {
            offsets.push(elements.len());
            let corner = alg.corner_basis(g.i, g.terminus(m));
            elements.extend(corner.iter().map(|b| (g, *b)));
            corners.push(corner);
        }
        HomBasis {
            degree: n,
            elements,
            offsets,
            corners,
        }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn corner(&self, g: &Generator) -> &[BasisMonomial] {
        &self.corners[g.index()]
    }

    /// Coordinate of `(g, b)`; panics if `b` is not in the corner of `g`.
    pub fn position(&self, g: &Generator, b: &BasisMonomial) -> usize {
        let k = self.corners[g.index()]
            .iter()
            .position(|x| x == b)
            .unwrap_or_else(|| panic!("{b} is not in the corner of {g}"));
        self.offsets[g.index()] + k
    }

    pub fn to_vector(&self, f: &Cochain) -> Vec<Scalar> {
        assert_eq!(f.degree, self.degree);
        let mut v = vec![Scalar::zero(); self.len()];
        for (k, value) in f.values.iter().enumerate() {
            for (b, c) in value.iter() {
                let pos = self.corners[k]
                    .iter()
                    .position(|x| x == b)
                    .expect("cochain value inside its corner");
                v[self.offsets[k] + pos] = c.clone();
            }
        }
        v
    }

    pub fn to_cochain(&self, alg: &Algebra, v: &[Scalar]) -> Cochain {
        assert_eq!(v.len(), self.len());
        let mut f = Cochain::zero(alg.m(), self.degree);
        for ((g, b), c) in self.elements.iter().zip(v) {
            f.values[g.index()].add_term(c.clone(), *b);
        }
        f
    }
}

/// Cochain complex of one algebra. Matrices are rebuilt on demand; all of
/// them are small (dimension linear in `m·n`).
#[derive(Clone, Debug)]
pub struct HomComplex {
    alg: Algebra,
}

impl HomComplex {
    pub fn new(alg: &Algebra) -> Self {
        HomComplex { alg: alg.clone() }
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn basis(&self, n: usize) -> HomBasis {
        HomBasis::new(&self.alg, n)
    }

    pub fn hom_space_basis(&self, n: usize) -> Vec<(Generator, BasisMonomial)> {
        self.basis(n).elements
    }

    pub fn hom_dimension(&self, n: usize) -> usize {
        let m = self.alg.m();
        generators(m, n)
            .iter()
            .map(|g| self.alg.corner_basis(g.i, g.terminus(m)).len())
            .sum()
    }

    /// `d^n f = f ∘ ∂^{n+1}`.
    pub fn coboundary(&self, f: &Cochain) -> Cochain {
        f.compose(&self.alg, &differential(&self.alg, f.degree + 1))
    }

    pub fn is_cocycle(&self, f: &Cochain) -> bool {
        self.coboundary(f).is_zero()
    }

    /// Matrix of `d^n` in the hom-space bases: one column per basis cochain
    /// of degree `n`, one row per basis cochain of degree `n+1`.
    pub fn coboundary_matrix(&self, n: usize) -> Matrix {
        let alg = &self.alg;
        let m = alg.m();
        let src = self.basis(n);
        let dst = self.basis(n + 1);
        let d = differential(alg, n + 1);
        let mut mat = Matrix::zeros(dst.len(), src.len());
        for h in generators(m, n + 1) {
            for t in d.terms(&h) {
                for b in src.corner(&t.target) {
                    let col = src.position(&t.target, b);
                    let value = alg.multiply3(&t.left, &AlgebraElement::monomial(*b), &t.right);
                    for (b2, c) in value.iter() {
                        mat.add_to(dst.position(&h, b2), col, c);
                    }
                }
            }
        }
        mat
    }

    /// `(dim ker d^n, dim im d^{n-1})` from exact ranks, with no regime check.
    pub fn raw_kernel_image_dims(&self, n: usize) -> (usize, usize) {
        let dn = self.coboundary_matrix(n);
        let ker = dn.cols() - linalg::rank(&dn);
        let im = if n == 0 {
            0
        } else {
            linalg::rank(&self.coboundary_matrix(n - 1))
        };
        (ker, im)
    }

    pub fn kernel_image_dims(&self, n: usize, policy: RegimePolicy) -> Result<(usize, usize)> {
        self.alg.check_regime(policy)?;
        Ok(self.raw_kernel_image_dims(n))
    }

    /// `dim HH^n = dim ker d^n - dim im d^{n-1}`.
    pub fn cohomology_dimension(&self, n: usize, policy: RegimePolicy) -> Result<usize> {
        let (ker, im) = self.kernel_image_dims(n, policy)?;
        Ok(ker - im)
    }

    /// Per-degree rows `(n, dim Hom, dim ker d^n, dim im d^{n-1}, dim HH^n)`
    /// for `0 ≤ n ≤ max_degree`, sharing one rank computation per degree.
    pub fn degree_table(&self, max_degree: usize) -> Vec<DegreeRow> {
        let mut rows = Vec::with_capacity(max_degree + 1);
        let mut prev_rank = 0;
        for n in 0..=max_degree {
            let dn = self.coboundary_matrix(n);
            let rank = linalg::rank(&dn);
            let ker = dn.cols() - rank;
            rows.push(DegreeRow {
                n,
                hom_dim: dn.cols(),
                ker,
                im: prev_rank,
                hh: ker - prev_rank,
            });
            prev_rank = rank;
        }
        rows
    }

    /// Basis of `ker d^n` as cochains, in reduced-echelon order.
    pub fn cocycle_basis(&self, n: usize) -> Vec<Cochain> {
        let basis = self.basis(n);
        linalg::kernel_basis(&self.coboundary_matrix(n))
            .iter()
            .map(|v| basis.to_cochain(&self.alg, v))
            .collect()
    }
}

/// Dimensions at a single degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegreeRow {
    pub n: usize,
    pub hom_dim: usize,
    pub ker: usize,
    pub im: usize,
    pub hh: usize,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Error;

    fn hom(q: &[i64]) -> HomComplex {
        HomComplex::new(&Algebra::from_integers(q).unwrap())
    }

    #[test]
    fn basis_sizes() {
        assert_eq!(hom(&[2, 1, 1]).hom_space_basis(0).len(), 6);
        assert_eq!(hom(&[3, 1]).hom_space_basis(1).len(), 8);
        assert_eq!(hom(&[2]).hom_space_basis(2).len(), 12);
        assert_eq!(hom(&[2, 1, 1]).hom_dimension(4), 18);
        assert_eq!(hom(&[2, 1, 1]).hom_dimension(2), 12);
        assert_eq!(hom(&[3, 1]).hom_dimension(5), 24);
    }

    #[test]
    fn coboundary_ranks() {
        let h = hom(&[2, 1, 1]);
        assert_eq!(linalg::rank(&h.coboundary_matrix(0)), 2);
        assert_eq!(linalg::kernel_basis(&h.coboundary_matrix(0)).len(), 4);
        assert_eq!(linalg::rank(&hom(&[3, 1]).coboundary_matrix(1)), 5);
    }

    #[test]
    fn coboundary_squares_to_zero() {
        for q in [&[2][..], &[3, 1], &[2, 1, 1], &[1, 1]] {
            let h = hom(q);
            for n in 0..6 {
                assert!(h.coboundary_matrix(n + 1).mul(&h.coboundary_matrix(n)).is_zero());
            }
        }
    }

    #[test]
    fn kernel_image_examples() {
        assert_eq!(hom(&[2, 1, 1]).kernel_image_dims(2, RegimePolicy::Strict).unwrap(), (3, 2));
        assert_eq!(hom(&[3, 1]).kernel_image_dims(3, RegimePolicy::Strict).unwrap(), (6, 6));
        assert_eq!(hom(&[2, 1, 1, 1]).kernel_image_dims(0, RegimePolicy::Strict).unwrap(), (5, 0));
        assert!(matches!(
            hom(&[1, 1]).kernel_image_dims(0, RegimePolicy::Strict),
            Err(Error::NonGeneric { .. })
        ));
    }

    #[test]
    fn cohomology_examples() {
        let h = hom(&[2, 1, 1]);
        let dims: Vec<usize> = (0..5).map(|n| h.cohomology_dimension(n, RegimePolicy::Strict).unwrap()).collect();
        assert_eq!(dims, vec![4, 2, 1, 0, 0]);
        assert_eq!(hom(&[3, 1]).cohomology_dimension(0, RegimePolicy::Strict).unwrap(), 3);
        let h1 = hom(&[2]);
        let total: usize = (0..3).map(|n| h1.cohomology_dimension(n, RegimePolicy::Strict).unwrap()).sum();
        assert_eq!(total, 5);
    }

    #[test]
    fn generic_and_matrix_coboundaries_agree() {
        let h = hom(&[2, 3, 5]);
        for n in 0..4 {
            let basis = h.basis(n);
            let next = h.basis(n + 1);
            let mat = h.coboundary_matrix(n);
            for (k, _) in basis.elements.iter().enumerate() {
                let mut v = vec![Scalar::zero(); basis.len()];
                v[k] = Scalar::from_integer(1.into());
                let f = basis.to_cochain(h.algebra(), &v);
                assert_eq!(next.to_vector(&h.coboundary(&f)), mat.apply(&v));
            }
        }
    }
}
