//! The minimal projective bimodule resolution `(P^•, ∂^•)` of `Λ_q`.
//!
//! `P^n = ⊕_{i} ⊕_{r=0}^{n} Λ e_i ⊗ e_{i+n-2r} Λ`. Summands are indexed by
//! [`Generator`]s, ordered with `i` outer and `r` inner. As a vector space
//! each summand has dimension 16 with basis `l ⊗ r` for `l` ending at `i`
//! and `r` starting at the summand's terminus, so `dim P^n = 16 m (n+1)`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::algebra::{Algebra, AlgebraElement, BasisMonomial};
use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::{wrap, Scalar};

/// Summand `Λ e_i ⊗ e_{i+n-2r} Λ` of `P^n`. The offset `n - 2r` is kept
/// unreduced; only the terminus vertex is reduced modulo `m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator {
    pub n: usize,
    pub r: usize,
    pub i: usize,
}

impl Generator {
    pub fn new(n: usize, r: usize, i: usize) -> Self {
        assert!(r <= n, "summand index r = {r} exceeds degree {n}");
        Generator { n, r, i }
    }

    pub fn offset(&self) -> i64 {
        self.n as i64 - 2 * self.r as i64
    }

    pub fn origin(&self) -> usize {
        self.i
    }

    pub fn terminus(&self, m: usize) -> usize {
        wrap(self.i as i64 + self.offset(), m)
    }

    /// Position within the canonical ordering of the generators of `P^n`.
    pub fn index(&self) -> usize {
        self.i * (self.n + 1) + self.r
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "g^{}_({},{})", self.n, self.r, self.i)
    }
}

/// Generators of `P^n` in canonical order (`i` outer, `r` inner).
pub fn generators(m: usize, n: usize) -> Vec<Generator> {
    (0..m).flat_map(|i| (0..=n).map(move |r| Generator::new(n, r, i))).collect()
}

/// `dim_K P^n`.
pub fn underlying_dim(m: usize, n: usize) -> usize {
    16 * m * (n + 1)
}

/// Coordinate of `l ⊗_g r` in the underlying vector space of `P^n`.
pub fn underlying_index(alg: &Algebra, g: &Generator, l: &BasisMonomial, r: &BasisMonomial) -> usize {
    16 * g.index() + 4 * alg.left_position(l) + alg.right_position(r)
}

/// `left ⊗_target right`, one summand of an image under a bimodule map.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Term {
    pub left: AlgebraElement,
    pub target: Generator,
    pub right: AlgebraElement,
}

impl Term {
    pub fn new(left: AlgebraElement, target: Generator, right: AlgebraElement) -> Self {
        Term { left, target, right }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) ⊗[{}] ({})", self.left, self.target, self.right)
    }
}

/// An element of `P^n`, expanded in the basis `l ⊗_g r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProjectiveElement {
    pub degree: usize,
    coeffs: BTreeMap<(Generator, BasisMonomial, BasisMonomial), Scalar>,
}

impl ProjectiveElement {
    pub fn zero(degree: usize) -> Self {
        ProjectiveElement {
            degree,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn add_term(&mut self, c: Scalar, g: Generator, l: BasisMonomial, r: BasisMonomial) {
        if c.is_zero() {
            return;
        }
        debug_assert_eq!(g.n, self.degree);
        let key = (g, l, r);
        let entry = self.coeffs.entry(key).or_insert_with(Scalar::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&key);
        }
    }

    /// Adds `c · (x ⊗_g y)`.
    pub fn add_tensor(&mut self, c: &Scalar, x: &AlgebraElement, g: Generator, y: &AlgebraElement) {
        for (l, cl) in x.iter() {
            for (r, cr) in y.iter() {
                self.add_term(c * cl * cr, g, *l, *r);
            }
        }
    }

    /// The generator `e_i ⊗_g e_{terminus}` itself.
    pub fn generator(m: usize, g: Generator) -> Self {
        let mut x = ProjectiveElement::zero(g.n);
        x.add_term(
            Scalar::one(),
            g,
            BasisMonomial::vertex(g.i),
            BasisMonomial::vertex(g.terminus(m)),
        );
        x
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(Generator, BasisMonomial, BasisMonomial), &Scalar)> {
        self.coeffs.iter()
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for ((g, l, r), c) in other.iter() {
            out.add_term(c.clone(), *g, *l, *r);
        }
        out
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = ProjectiveElement::zero(self.degree);
        for ((g, l, r), x) in self.iter() {
            out.add_term(x * c, *g, *l, *r);
        }
        out
    }

    /// Coordinates in the underlying vector space of `P^degree`.
    pub fn coordinates(&self, alg: &Algebra) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); underlying_dim(alg.m(), self.degree)];
        for ((g, l, r), c) in self.iter() {
            v[underlying_index(alg, g, l, r)] = c.clone();
        }
        v
    }
}

/// A `Λ_q`-bimodule map `P^source → P^target`, given by the images of the
/// summand generators `e_i ⊗_g e_{terminus}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BimoduleMap {
    source: usize,
    target: usize,
    images: Vec<Vec<Term>>,
}

impl BimoduleMap {
    /// Builds a map from per-generator images (in canonical generator order)
    /// and checks that every term is vertex compatible.
    pub fn new(alg: &Algebra, source: usize, target: usize, images: Vec<Vec<Term>>) -> Result<Self> {
        let m = alg.m();
        let gens = generators(m, source);
        assert_eq!(images.len(), gens.len(), "one image per generator of P^{source}");
        for (g, terms) in gens.iter().zip(&images) {
            for t in terms {
                check_term(m, g, target, t)?;
            }
        }
        Ok(BimoduleMap { source, target, images })
    }

    pub fn zero(alg: &Algebra, source: usize, target: usize) -> Self {
        BimoduleMap {
            source,
            target,
            images: vec![Vec::new(); alg.m() * (source + 1)],
        }
    }

    pub fn identity(alg: &Algebra, n: usize) -> Self {
        let m = alg.m();
        let images = generators(m, n)
            .into_iter()
            .map(|g| {
                vec![Term::new(
                    AlgebraElement::monomial(BasisMonomial::vertex(g.i)),
                    g,
                    AlgebraElement::monomial(BasisMonomial::vertex(g.terminus(m))),
                )]
            })
            .collect();
        BimoduleMap { source: n, target: n, images }
    }

    pub fn source_degree(&self) -> usize {
        self.source
    }

    pub fn target_degree(&self) -> usize {
        self.target
    }

    pub fn terms(&self, g: &Generator) -> &[Term] {
        &self.images[g.index()]
    }

    /// Mutable access to the image of one generator. Vertex compatibility is
    /// not rechecked.
    pub fn terms_mut(&mut self, g: &Generator) -> &mut Vec<Term> {
        &mut self.images[g.index()]
    }

    pub fn all_terms(&self) -> impl Iterator<Item = &Term> {
        self.images.iter().flatten()
    }

    /// Image of the generator `e_i ⊗_g e_{terminus}`, expanded.
    pub fn image(&self, g: &Generator) -> ProjectiveElement {
        let mut out = ProjectiveElement::zero(self.target);
        for t in self.terms(g) {
            out.add_tensor(&Scalar::one(), &t.left, t.target, &t.right);
        }
        out
    }

    /// Image of an arbitrary element of `P^source`.
    pub fn apply(&self, alg: &Algebra, x: &ProjectiveElement) -> ProjectiveElement {
        assert_eq!(x.degree, self.source, "element lives in the wrong degree");
        let mut out = ProjectiveElement::zero(self.target);
        for ((g, l, r), c) in x.iter() {
            let lm = AlgebraElement::monomial(*l);
            let rm = AlgebraElement::monomial(*r);
            for t in self.terms(g) {
                let left = alg.multiply(&lm, &t.left);
                let right = alg.multiply(&t.right, &rm);
                if !left.is_zero() && !right.is_zero() {
                    out.add_tensor(c, &left, t.target, &right);
                }
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        let m_gens = self.images.len();
        (0..m_gens).all(|k| {
            let mut out = ProjectiveElement::zero(self.target);
            for t in &self.images[k] {
                out.add_tensor(&Scalar::one(), &t.left, t.target, &t.right);
            }
            out.is_zero()
        })
    }

    /// Equality as bimodule maps (after expanding every image).
    pub fn same_map(&self, other: &BimoduleMap, alg: &Algebra) -> bool {
        self.source == other.source
            && self.target == other.target
            && generators(alg.m(), self.source).iter().all(|g| self.image(g) == other.image(g))
    }

    /// Every term has its left or right factor in the radical.
    pub fn is_minimal(&self) -> bool {
        self.all_terms().all(|t| t.left.is_radical() || t.right.is_radical())
    }

    /// The matrix of the underlying `K`-linear map, with rows and columns in
    /// the order given by [`underlying_index`].
    pub fn underlying_matrix(&self, alg: &Algebra) -> Matrix {
        let m = alg.m();
        let mut mat = Matrix::zeros(underlying_dim(m, self.target), underlying_dim(m, self.source));
        for g in generators(m, self.source) {
            for l in alg.left_monomials(g.i) {
                for r in alg.right_monomials(g.terminus(m)) {
                    let col = underlying_index(alg, &g, &l, &r);
                    let mut x = ProjectiveElement::zero(self.source);
                    x.add_term(Scalar::one(), g, l, r);
                    for ((h, l2, r2), c) in self.apply(alg, &x).iter() {
                        mat.set(underlying_index(alg, h, l2, r2), col, c.clone());
                    }
                }
            }
        }
        mat
    }
}

fn check_term(m: usize, g: &Generator, target: usize, t: &Term) -> Result<()> {
    let fail = |detail: String| Error::VertexMismatch {
        generator: g.to_string(),
        detail,
    };
    if t.target.n != target {
        return Err(fail(format!("term {t} does not land in P^{target}")));
    }
    for (b, _) in t.left.iter() {
        if b.origin(m) != g.i || b.terminus(m) != t.target.i {
            return Err(fail(format!("left factor {} of {t}", b)));
        }
    }
    for (b, _) in t.right.iter() {
        if b.origin(m) != t.target.terminus(m) || b.terminus(m) != g.terminus(m) {
            return Err(fail(format!("right factor {} of {t}", b)));
        }
    }
    Ok(())
}

/// `f ∘ g`, where `g: P^a → P^b` and `f: P^b → P^c`.
pub fn compose(alg: &Algebra, f: &BimoduleMap, g: &BimoduleMap) -> Result<BimoduleMap> {
    if f.source != g.target {
        return Err(Error::DegreeMismatch {
            left: f.source,
            right: g.target,
        });
    }
    let images = g
        .images
        .iter()
        .map(|terms| {
            let mut out = Vec::new();
            for t in terms {
                for u in f.terms(&t.target) {
                    let left = alg.multiply(&t.left, &u.left);
                    let right = alg.multiply(&u.right, &t.right);
                    if !left.is_zero() && !right.is_zero() {
                        out.push(Term::new(left, u.target, right));
                    }
                }
            }
            out
        })
        .collect();
    Ok(BimoduleMap {
        source: g.source,
        target: f.target,
        images,
    })
}

fn sign(k: i64) -> Scalar {
    if k.rem_euclid(2) == 0 {
        Scalar::one()
    } else {
        -Scalar::one()
    }
}

fn vertex(i: i64, m: usize) -> AlgebraElement {
    AlgebraElement::monomial(BasisMonomial::vertex(wrap(i, m)))
}

fn arrow(i: i64, m: usize) -> AlgebraElement {
    AlgebraElement::monomial(BasisMonomial::arrow(wrap(i, m)))
}

fn bar_arrow(i: i64, m: usize) -> AlgebraElement {
    AlgebraElement::monomial(BasisMonomial::bar_arrow(wrap(i, m)))
}

/// The differential `∂^n: P^n → P^{n-1}` for `n ≥ 1`.
///
/// For `0 < r < n` the generator `e_i ⊗_r e_{i+n-2r}` maps to
///
/// ```text
///   e_i ⊗_r a_{i+n-2r-1}
/// + (-1)^n q_{i-r+1}⋯q_{i+n-2r} e_i ⊗_{r-1} ā_{i+n-2r}        (n-r factors)
/// + (-1)^{n+r} q_{i-r+1}⋯q_i a_i ⊗_r e_{i+n-2r}                (r factors)
/// + (-1)^{n+r} ā_{i-1} ⊗_{r-1} e_{i+n-2r}
/// ```
///
/// and the boundary summands `r = 0`, `r = n` keep two terms each.
pub fn differential(alg: &Algebra, n: usize) -> BimoduleMap {
    assert!(n >= 1, "∂^0 is the augmentation, see `augment`");
    let m = alg.m();
    let ni = n as i64;
    let images = generators(m, n)
        .into_iter()
        .map(|g| {
            let (r, i) = (g.r as i64, g.i as i64);
            let gen = |rr: i64, ii: i64| Generator::new(n - 1, rr as usize, wrap(ii, m));
            if r == 0 {
                vec![
                    Term::new(vertex(i, m), gen(0, i), arrow(i + ni - 1, m)),
                    Term::new(arrow(i, m).scale(&sign(ni)), gen(0, i + 1), vertex(i + ni, m)),
                ]
            } else if r == ni {
                vec![
                    Term::new(vertex(i, m).scale(&sign(ni)), gen(ni - 1, i), bar_arrow(i - ni, m)),
                    Term::new(bar_arrow(i - 1, m), gen(ni - 1, i - 1), vertex(i - ni, m)),
                ]
            } else {
                let k = ni - 2 * r;
                let outer = sign(ni) * alg.q_product(i - r + 1, (ni - r) as usize);
                let inner = sign(ni + r) * alg.q_product(i - r + 1, r as usize);
                vec![
                    Term::new(vertex(i, m), gen(r, i), arrow(i + k - 1, m)),
                    Term::new(vertex(i, m).scale(&outer), gen(r - 1, i), bar_arrow(i + k, m)),
                    Term::new(arrow(i, m).scale(&inner), gen(r, i + 1), vertex(i + k, m)),
                    Term::new(bar_arrow(i - 1, m).scale(&sign(ni + r)), gen(r - 1, i - 1), vertex(i + k, m)),
                ]
            }
        })
        .collect();
    BimoduleMap::new(alg, n, n - 1, images).expect("differential terms are vertex compatible")
}

/// The multiplication map `P^0 → Λ_q`.
pub fn augment(alg: &Algebra, x: &ProjectiveElement) -> AlgebraElement {
    assert_eq!(x.degree, 0, "augmentation is defined on P^0");
    let mut out = AlgebraElement::zero();
    for ((_, l, r), c) in x.iter() {
        if let Some((k, b)) = alg.mul_monomials(l, r) {
            out.add_term(k * c, b);
        }
    }
    out
}

/// Matrix of the augmentation, rows indexed by the basis of `Λ_q`.
pub fn augmentation_matrix(alg: &Algebra) -> Matrix {
    let m = alg.m();
    let mut mat = Matrix::zeros(alg.dim(), underlying_dim(m, 0));
    for g in generators(m, 0) {
        for l in alg.left_monomials(g.i) {
            for r in alg.right_monomials(g.i) {
                if let Some((k, b)) = alg.mul_monomials(&l, &r) {
                    mat.set(alg.basis_index(&b), underlying_index(alg, &g, &l, &r), k);
                }
            }
        }
    }
    mat
}

/// The image of a bimodule map out of `P^0` composed with the augmentation,
/// as a map `P^source → Λ` evaluated on generators.
pub fn augment_map(alg: &Algebra, f: &BimoduleMap) -> Vec<AlgebraElement> {
    assert_eq!(f.target_degree(), 0);
    generators(alg.m(), f.source_degree())
        .iter()
        .map(|g| {
            f.terms(g).iter().fold(AlgebraElement::zero(), |acc, t| {
                acc.add(&alg.multiply(&t.left, &t.right))
            })
        })
        .collect()
}

/// Result of checking `∂ ∘ ∂ = 0` up to some degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexCheck {
    pub max_degree: usize,
    /// The first `n` with `∂^n ∘ ∂^{n+1} ≠ 0` (0 for the augmentation).
    pub first_failure: Option<usize>,
}

impl ComplexCheck {
    pub fn passed(&self) -> bool {
        self.first_failure.is_none()
    }
}

/// One row of an exactness report: at degree `n`, `dim ker ∂^n` against
/// `rank ∂^{n+1}` (degree 0 uses the augmentation).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactnessRow {
    pub n: usize,
    pub kernel_dim: usize,
    pub image_dim: usize,
}

impl ExactnessRow {
    pub fn passed(&self) -> bool {
        self.kernel_dim == self.image_dim
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactnessReport {
    pub rows: Vec<ExactnessRow>,
    /// Rank of the augmentation; equals `dim Λ_q` when it is onto.
    pub augmentation_rank: usize,
}

impl ExactnessReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(ExactnessRow::passed)
    }
}

/// The differentials `∂^1, …, ∂^N` of one algebra. Kept mutable so that
/// individual terms can be altered in tests.
#[derive(Clone, Debug)]
pub struct Resolution {
    alg: Algebra,
    differentials: Vec<BimoduleMap>,
}

impl Resolution {
    pub fn new(alg: &Algebra, max_degree: usize) -> Self {
        Resolution {
            alg: alg.clone(),
            differentials: (1..=max_degree).map(|n| differential(alg, n)).collect(),
        }
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn max_degree(&self) -> usize {
        self.differentials.len()
    }

    /// `∂^n` for `1 ≤ n ≤ max_degree`.
    pub fn differential(&self, n: usize) -> &BimoduleMap {
        &self.differentials[n - 1]
    }

    pub fn differential_mut(&mut self, n: usize) -> &mut BimoduleMap {
        &mut self.differentials[n - 1]
    }

    /// Checks `∂^0 ∘ ∂^1 = 0` and `∂^n ∘ ∂^{n+1} = 0` for `1 ≤ n < N`.
    pub fn check_complex(&self) -> ComplexCheck {
        let alg = &self.alg;
        let max_degree = self.max_degree();
        let mut first_failure = None;
        if max_degree >= 1 {
            let d1 = self.differential(1);
            if augment_map(alg, d1).iter().any(|x| !x.is_zero()) {
                first_failure = Some(0);
            }
        }
        if first_failure.is_none() {
            first_failure = (1..max_degree).find(|&n| {
                let comp = compose(alg, self.differential(n), self.differential(n + 1)).expect("degrees line up");
                !comp.is_zero()
            });
        }
        ComplexCheck {
            max_degree,
            first_failure,
        }
    }

    /// The same check through underlying matrices: `M(∂^n) · M(∂^{n+1}) = 0`.
    pub fn check_complex_by_matrices(&self) -> ComplexCheck {
        let alg = &self.alg;
        let max_degree = self.max_degree();
        let mut mats: Vec<Matrix> = Vec::with_capacity(max_degree + 1);
        mats.push(augmentation_matrix(alg));
        for n in 1..=max_degree {
            mats.push(self.differential(n).underlying_matrix(alg));
        }
        let first_failure = (0..max_degree).find(|&n| !mats[n].mul(&mats[n + 1]).is_zero());
        ComplexCheck {
            max_degree,
            first_failure,
        }
    }

    /// Compares `dim ker ∂^n` with `rank ∂^{n+1}` for `0 ≤ n < N`.
    pub fn verify_exactness(&self) -> ExactnessReport {
        let alg = &self.alg;
        let max_degree = self.max_degree();
        let aug = augmentation_matrix(alg);
        let augmentation_rank = linalg::rank(&aug);
        let mut kernel_dim = aug.cols() - augmentation_rank;
        let mut rows = Vec::new();
        for n in 0..max_degree {
            let next = self.differential(n + 1).underlying_matrix(alg);
            let image_dim = linalg::rank(&next);
            rows.push(ExactnessRow { n, kernel_dim, image_dim });
            kernel_dim = next.cols() - image_dim;
        }
        ExactnessReport {
            rows,
            augmentation_rank,
        }
    }
}

pub fn check_complex(alg: &Algebra, max_degree: usize) -> bool {
    Resolution::new(alg, max_degree).check_complex().passed()
}

/// Exactness ranks of the resolution up to degree `max_degree`.
pub fn verify_exactness(alg: &Algebra, max_degree: usize) -> ExactnessReport {
    Resolution::new(alg, max_degree).verify_exactness()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg(q: &[i64]) -> Algebra {
        Algebra::from_integers(q).unwrap()
    }

    fn s(x: i64) -> Scalar {
        Scalar::from_integer(x.into())
    }

    #[test]
    fn generator_counts() {
        for m in 1..=4 {
            for n in 0..6 {
                let gens = generators(m, n);
                assert_eq!(gens.len(), m * (n + 1));
                for (k, g) in gens.iter().enumerate() {
                    assert_eq!(g.index(), k);
                }
            }
        }
        let g = Generator::new(5, 4, 0);
        assert_eq!(g.offset(), -3);
        assert_eq!(g.terminus(3), 0);
        assert_eq!(g.terminus(2), 1);
    }

    #[test]
    fn first_differential() {
        let a = alg(&[2, 1, 1]);
        let d1 = differential(&a, 1);
        let g = Generator::new(1, 0, 2);
        assert_eq!(
            d1.terms(&g),
            &[
                Term::new(vertex(2, 3), Generator::new(0, 0, 2), arrow(2, 3)),
                Term::new(arrow(2, 3).scale(&s(-1)), Generator::new(0, 0, 0), vertex(0, 3)),
            ]
        );
        let g = Generator::new(1, 1, 0);
        assert_eq!(
            d1.terms(&g),
            &[
                Term::new(vertex(0, 3).scale(&s(-1)), Generator::new(0, 0, 0), bar_arrow(2, 3)),
                Term::new(bar_arrow(2, 3), Generator::new(0, 0, 2), vertex(2, 3)),
            ]
        );
    }

    #[test]
    fn four_term_image() {
        // n = 2, r = 1, i = 1, q = (2, 3, 5): both q-products are the single factor q_1 = 3.
        let a = alg(&[2, 3, 5]);
        let d2 = differential(&a, 2);
        let terms = d2.terms(&Generator::new(2, 1, 1));
        assert_eq!(terms.len(), 4);
        assert_eq!(terms[0], Term::new(vertex(1, 3), Generator::new(1, 1, 1), arrow(0, 3)));
        assert_eq!(terms[1], Term::new(vertex(1, 3).scale(&s(3)), Generator::new(1, 0, 1), bar_arrow(1, 3)));
        assert_eq!(terms[2], Term::new(arrow(1, 3).scale(&s(-3)), Generator::new(1, 1, 2), vertex(1, 3)));
        assert_eq!(terms[3], Term::new(bar_arrow(0, 3).scale(&s(-1)), Generator::new(1, 0, 0), vertex(1, 3)));
    }

    #[test]
    fn composition_rules() {
        let a = alg(&[2, 1, 1]);
        let d1 = differential(&a, 1);
        let d2 = differential(&a, 2);
        assert!(compose(&a, &d1, &d2).unwrap().is_zero());
        let id = BimoduleMap::identity(&a, 1);
        assert!(compose(&a, &d1, &id).unwrap().same_map(&d1, &a));
        assert!(compose(&a, &id, &d2).unwrap().same_map(&d2, &a));
        assert_eq!(
            compose(&a, &d2, &d2).unwrap_err(),
            Error::DegreeMismatch { left: 2, right: 1 }
        );
        let b = alg(&[3, 1]);
        assert!(compose(&b, &differential(&b, 2), &differential(&b, 3)).unwrap().is_zero());
    }

    #[test]
    fn rejects_incompatible_terms() {
        let a = alg(&[2, 1, 1]);
        let mut images = vec![Vec::new(); 6];
        images[0] = vec![Term::new(arrow(1, 3), Generator::new(0, 0, 0), vertex(1, 3))];
        assert!(matches!(
            BimoduleMap::new(&a, 1, 0, images),
            Err(Error::VertexMismatch { .. })
        ));
    }

    #[test]
    fn complexes() {
        assert!(check_complex(&alg(&[2, 1, 1]), 10));
        assert!(check_complex(&alg(&[2]), 10));
        assert!(check_complex(&alg(&[1, 1]), 6));
    }

    #[test]
    fn sign_flip_breaks_complex() {
        let a = alg(&[2, 1, 1]);
        let mut res = Resolution::new(&a, 4);
        let g = Generator::new(2, 1, 0);
        let t = &mut res.differential_mut(2).terms_mut(&g)[1];
        t.left = t.left.scale(&s(-1));
        let check = res.check_complex();
        assert!(!check.passed());
        assert!(!res.check_complex_by_matrices().passed());
    }

    #[test]
    fn underlying_shapes() {
        let a = alg(&[2]);
        let d1 = differential(&a, 1).underlying_matrix(&a);
        assert_eq!((d1.rows(), d1.cols()), (16, 32));
        let z = BimoduleMap::zero(&a, 2, 1).underlying_matrix(&a);
        assert!(z.is_zero());
        assert_eq!((z.rows(), z.cols()), (32, 48));
    }

    #[test]
    fn minimality() {
        for q in [&[2][..], &[3, 1], &[2, 1, 1]] {
            let a = alg(q);
            for n in 1..6 {
                assert!(differential(&a, n).is_minimal());
            }
        }
    }

    #[test]
    fn exactness_small() {
        for q in [&[2][..], &[1], &[3, 1], &[2, 1, 1]] {
            let a = alg(q);
            let report = verify_exactness(&a, 4);
            assert!(report.passed(), "{q:?}: {report:?}");
            assert_eq!(report.augmentation_rank, a.dim());
        }
    }
}
