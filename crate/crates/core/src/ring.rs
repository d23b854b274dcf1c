//! Ring structure of `HH^*(Λ_q)`: cohomology classes, chain-map liftings of
//! cocycles, cup products, and a check of the presentation
//! `K[x_0, …, x_{m-1}]/(x_i x_j) ×_K Λ(u_1, u_2)`.
//!
//! Products are computed as `f ⌣ g = f ∘ L^a(g)` where `a = deg f` and
//! `L^•(g)` is a lifting of `g` to a chain map `P^{b+•} → P^•`. Liftings are
//! found level by level with a linear solve for each generator.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::algebra::{Algebra, AlgebraElement, BasisMonomial, RegimePolicy};
use crate::error::{Error, Result};
use crate::formulas;
use crate::hom::{Cochain, HomBasis, HomComplex};
use crate::linalg::{self, Matrix};
use crate::resolution::{differential, generators, underlying_index, BimoduleMap, Generator, ProjectiveElement, Term};
use crate::Scalar;

/// `HH^n` presented as a complement of `im d^{n-1}` inside `ker d^n`.
///
/// The complement is chosen greedily: starting from the echelon basis of
/// the image, kernel basis vectors are appended in order whenever they
/// raise the rank.
#[derive(Clone, Debug)]
pub struct CohomologySpace {
    pub degree: usize,
    basis: HomBasis,
    coboundary: Matrix,
    image_dim: usize,
    /// Columns: image basis followed by the complement.
    frame: Matrix,
    complement: Vec<Vec<Scalar>>,
}

impl CohomologySpace {
    pub fn new(hom: &HomComplex, n: usize) -> Self {
        let basis = hom.basis(n);
        let coboundary = hom.coboundary_matrix(n);
        let image: Vec<Vec<Scalar>> = if n == 0 {
            Vec::new()
        } else {
            hom.coboundary_matrix(n - 1).transpose().row_reduce().rows
        };
        let kernel = linalg::kernel_basis(&coboundary);
        let mut spanning = image.clone();
        let mut rank = spanning.len();
        let mut complement = Vec::new();
        for v in kernel {
            spanning.push(v.clone());
            let r = linalg::rank(&Matrix::from_rows(spanning.clone()));
            if r > rank {
                rank = r;
                complement.push(v);
            } else {
                spanning.pop();
            }
        }
        let columns: Vec<Vec<Scalar>> = image.iter().chain(&complement).cloned().collect();
        let frame = Matrix::from_columns(basis.len(), &columns);
        CohomologySpace {
            degree: n,
            basis,
            coboundary,
            image_dim: image.len(),
            frame,
            complement,
        }
    }

    pub fn dimension(&self) -> usize {
        self.complement.len()
    }

    pub fn basis(&self) -> &HomBasis {
        &self.basis
    }

    /// Representative cocycles of the chosen basis of `HH^n`.
    pub fn basis_representatives(&self, alg: &Algebra) -> Vec<Cochain> {
        self.complement.iter().map(|v| self.basis.to_cochain(alg, v)).collect()
    }

    /// Coordinates of the class of a cocycle, or `NotCocycle`.
    pub fn coordinates(&self, f: &Cochain) -> Result<Vec<Scalar>> {
        let v = self.basis.to_vector(f);
        if self.coboundary.apply(&v).iter().any(|x| !x.is_zero()) {
            return Err(Error::NotCocycle { degree: self.degree });
        }
        let x = linalg::solve(&self.frame, &v).ok_or(Error::NotCocycle { degree: self.degree })?;
        Ok(x[self.image_dim..].to_vec())
    }
}

/// A cohomology class with a chosen cocycle representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyClass {
    pub degree: usize,
    pub representative: Cochain,
    /// Coordinates relative to the complement basis of the degree's
    /// [`CohomologySpace`].
    pub coordinates: Vec<Scalar>,
}

impl CohomologyClass {
    pub fn is_zero(&self) -> bool {
        self.coordinates.iter().all(Zero::is_zero)
    }
}

/// The classes `1`, `x_0, …, x_{m-1}` in degree 0 and `u_1`, `u_2` in degree 1.
#[derive(Clone, Debug)]
pub struct CanonicalGenerators {
    pub one: CohomologyClass,
    pub x: Vec<CohomologyClass>,
    pub u1: CohomologyClass,
    pub u2: CohomologyClass,
}

/// Outcome of the presentation check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RingReport {
    pub m: usize,
    pub hh_dims: Vec<usize>,
    pub total_dim: usize,
    pub generators: Vec<String>,
    /// `(relation, holds)`, in the order checked.
    pub relations: Vec<(String, bool)>,
}

impl RingReport {
    pub fn passed(&self) -> bool {
        self.relations.iter().all(|(_, ok)| *ok)
    }

    pub fn failures(&self) -> Vec<String> {
        self.relations.iter().filter(|(_, ok)| !ok).map(|(r, _)| r.clone()).collect()
    }
}

/// Cohomology spaces of one algebra up to a fixed degree, plus the product.
#[derive(Clone, Debug)]
pub struct GradedRing {
    hom: HomComplex,
    spaces: Vec<CohomologySpace>,
}

impl GradedRing {
    /// Prepares `HH^0, …, HH^max_degree`. Refuses non-generic instances
    /// under [`RegimePolicy::Strict`].
    pub fn new(alg: &Algebra, max_degree: usize, policy: RegimePolicy) -> Result<Self> {
        alg.check_regime(policy)?;
        let hom = HomComplex::new(alg);
        let spaces = (0..=max_degree).map(|n| CohomologySpace::new(&hom, n)).collect();
        Ok(GradedRing { hom, spaces })
    }

    pub fn algebra(&self) -> &Algebra {
        self.hom.algebra()
    }

    pub fn hom(&self) -> &HomComplex {
        &self.hom
    }

    pub fn max_degree(&self) -> usize {
        self.spaces.len() - 1
    }

    pub fn space(&self, n: usize) -> Result<&CohomologySpace> {
        self.spaces.get(n).ok_or_else(|| Error::DegreeCapExceeded {
            detail: format!("HH^{n} requested but only degrees ≤ {} were prepared", self.max_degree()),
        })
    }

    pub fn class_of(&self, f: &Cochain) -> Result<CohomologyClass> {
        let coordinates = self.space(f.degree)?.coordinates(f)?;
        Ok(CohomologyClass {
            degree: f.degree,
            representative: f.clone(),
            coordinates,
        })
    }

    /// The representatives named in the presentation:
    /// `x_i = z_i` at `e_i ⊗ e_i`; `u_1: e_i ⊗_0 e_{i+1} ↦ a_i` for all `i`;
    /// `u_2: e_{m-1} ⊗_0 e_m ↦ a_{m-1}` and `e_0 ⊗_1 e_{-1} ↦ ā_{m-1}`.
    pub fn canonical_generators(&self) -> Result<CanonicalGenerators> {
        let alg = self.algebra();
        let m = alg.m();
        let deg0 = |value: &dyn Fn(usize) -> AlgebraElement| {
            let pairs: Vec<(Generator, AlgebraElement)> =
                (0..m).map(|i| (Generator::new(0, 0, i), value(i))).collect();
            Cochain::from_values(alg, 0, &pairs)
        };
        let one = self.class_of(&deg0(&|i| AlgebraElement::monomial(BasisMonomial::vertex(i))))?;
        let x = (0..m)
            .map(|k| {
                self.class_of(&deg0(&|i| {
                    if i == k {
                        AlgebraElement::monomial(BasisMonomial::socle(i))
                    } else {
                        AlgebraElement::zero()
                    }
                }))
            })
            .collect::<Result<Vec<_>>>()?;
        let u1_values: Vec<(Generator, AlgebraElement)> = (0..m)
            .map(|i| (Generator::new(1, 0, i), AlgebraElement::monomial(BasisMonomial::arrow(i))))
            .collect();
        let u1 = self.class_of(&Cochain::from_values(alg, 1, &u1_values))?;
        let u2 = self.class_of(&Cochain::from_values(
            alg,
            1,
            &[
                (Generator::new(1, 0, m - 1), AlgebraElement::monomial(BasisMonomial::arrow(m - 1))),
                (Generator::new(1, 1, 0), AlgebraElement::monomial(BasisMonomial::bar_arrow(m - 1))),
            ],
        ))?;
        Ok(CanonicalGenerators { one, x, u1, u2 })
    }

    /// Lifts a cocycle `f: P^a → Λ` to maps `L^j: P^{a+j} → P^j`,
    /// `0 ≤ j ≤ k`, with `μ ∘ L^0 = f` and `∂^j ∘ L^j = L^{j-1} ∘ ∂^{a+j}`.
    pub fn lift_cocycle(&self, f: &Cochain, k: usize) -> Result<Vec<BimoduleMap>> {
        lift_cocycle(self.algebra(), f, k)
    }

    /// `f ⌣ g`. Degree-0 factors act by multiplying values with their
    /// central element.
    pub fn cup_product(&self, f: &CohomologyClass, g: &CohomologyClass) -> Result<CohomologyClass> {
        let alg = self.algebra();
        let rep = if f.degree == 0 {
            g.representative.left_multiply(alg, &central_value(alg, &f.representative))
        } else if g.degree == 0 {
            f.representative.left_multiply(alg, &central_value(alg, &g.representative))
        } else {
            return self.cup_product_via_lifting(f, g);
        };
        self.class_of(&rep)
    }

    /// `f ⌣ g = f ∘ L^{deg f}(g)` through an explicit lifting, for any degrees.
    pub fn cup_product_via_lifting(&self, f: &CohomologyClass, g: &CohomologyClass) -> Result<CohomologyClass> {
        let alg = self.algebra();
        let lifts = self.lift_cocycle(&g.representative, f.degree)?;
        let rep = f.representative.compose(alg, &lifts[f.degree]);
        self.class_of(&rep)
    }

    /// Checks the presentation and returns the full report, whether or not
    /// every relation holds.
    pub fn check_presentation(&self) -> Result<RingReport> {
        let alg = self.algebra();
        let m = alg.m();
        if self.max_degree() < 2 {
            return Err(Error::DegreeCapExceeded {
                detail: "the ring report needs HH^0, HH^1 and HH^2".into(),
            });
        }
        let hh_dims: Vec<usize> = self.spaces.iter().map(CohomologySpace::dimension).collect();
        let total_dim = hh_dims.iter().sum();
        let gens = self.canonical_generators()?;
        let mut relations = Vec::new();
        let mut check = |name: String, ok: bool| relations.push((name, ok));

        let mut deg0: Vec<&CohomologyClass> = vec![&gens.one];
        deg0.extend(gens.x.iter());
        check(
            format!("HH^0 has basis {{1, x_0..x_{}}}", m - 1),
            hh_dims[0] == m + 1 && independent(&deg0),
        );
        let mut xx = true;
        for xi in &gens.x {
            for xj in &gens.x {
                xx &= self.cup_product(xi, xj)?.is_zero();
            }
        }
        check("x_i x_j = 0".into(), xx);
        check(
            "HH^1 has basis {u_1, u_2}".into(),
            hh_dims[1] == 2 && independent(&[&gens.u1, &gens.u2]),
        );
        let u1u1 = self.cup_product(&gens.u1, &gens.u1)?;
        let u2u2 = self.cup_product(&gens.u2, &gens.u2)?;
        let u1u2 = self.cup_product(&gens.u1, &gens.u2)?;
        let u2u1 = self.cup_product(&gens.u2, &gens.u1)?;
        check("u_1^2 = 0".into(), u1u1.is_zero());
        check("u_2^2 = 0".into(), u2u2.is_zero());
        check("u_1 u_2 != 0".into(), !u1u2.is_zero());
        let anti = u1u2.coordinates.iter().zip(&u2u1.coordinates).all(|(a, b)| (a + b).is_zero());
        check("u_1 u_2 + u_2 u_1 = 0".into(), anti);
        let mut xu = true;
        for xi in &gens.x {
            for u in [&gens.u1, &gens.u2, &u1u2] {
                xu &= self.cup_product(xi, u)?.is_zero() && self.cup_product(u, xi)?.is_zero();
            }
        }
        check("x_i u_j = 0 and x_i u_1 u_2 = 0".into(), xu);
        let one_acts = self.cup_product(&gens.one, &gens.u1)?.coordinates == gens.u1.coordinates
            && self.cup_product(&gens.u2, &gens.one)?.coordinates == gens.u2.coordinates;
        check("1 is the identity".into(), one_acts);
        check("HH^2 = span{u_1 u_2}".into(), hh_dims[2] == 1 && !u1u2.is_zero());
        let top = self.max_degree();
        if top >= 3 {
            check(
                format!("HH^n = 0 for 3 <= n <= {top}"),
                hh_dims[3..].iter().all(|&d| d == 0),
            );
        }
        check(format!("total dimension = m + 4 = {}", m + 4), total_dim == formulas::total_dimension(m));

        let mut generators = vec!["1".to_string()];
        generators.extend((0..m).map(|i| format!("x_{i}")));
        generators.extend(["u_1".to_string(), "u_2".to_string()]);
        Ok(RingReport {
            m,
            hh_dims,
            total_dim,
            generators,
            relations,
        })
    }

    /// As [`check_presentation`](Self::check_presentation), but any violated
    /// relation is an error.
    pub fn ring_report(&self) -> Result<RingReport> {
        let report = self.check_presentation()?;
        if report.passed() {
            Ok(report)
        } else {
            Err(Error::PresentationCheckFailed(report.failures()))
        }
    }
}

/// Verifies the ring presentation through degree `max_degree`.
pub fn ring_report(alg: &Algebra, max_degree: usize, policy: RegimePolicy) -> Result<RingReport> {
    GradedRing::new(alg, max_degree, policy)?.ring_report()
}

fn independent(classes: &[&CohomologyClass]) -> bool {
    let rows: Vec<Vec<Scalar>> = classes.iter().map(|c| c.coordinates.clone()).collect();
    rows.first().is_none_or(|r| !r.is_empty()) && linalg::rank(&Matrix::from_rows(rows)) == classes.len()
}

/// `Σ_i f(e_i ⊗ e_i)` for a degree-0 cochain.
fn central_value(alg: &Algebra, f: &Cochain) -> AlgebraElement {
    assert_eq!(f.degree, 0);
    (0..alg.m()).fold(AlgebraElement::zero(), |acc, i| acc.add(f.value(&Generator::new(0, 0, i))))
}

/// Sparse column builder over an index space keyed by `K`.
struct SparseSystem<K: Ord> {
    rows: BTreeMap<K, usize>,
    columns: Vec<Vec<(usize, Scalar)>>,
}

impl<K: Ord + Clone> SparseSystem<K> {
    fn new() -> Self {
        SparseSystem {
            rows: BTreeMap::new(),
            columns: Vec::new(),
        }
    }

    fn row(&mut self, key: &K) -> usize {
        let next = self.rows.len();
        *self.rows.entry(key.clone()).or_insert(next)
    }

    fn push_column(&mut self, entries: Vec<(K, Scalar)>) {
        let col = entries.into_iter().map(|(k, c)| (self.row(&k), c)).collect();
        self.columns.push(col);
    }

    /// Solves against a right-hand side given in the same keys.
    fn solve(mut self, rhs: Vec<(K, Scalar)>) -> Option<Vec<Scalar>> {
        let rhs: Vec<(usize, Scalar)> = rhs.into_iter().map(|(k, c)| (self.row(&k), c)).collect();
        let mut a = Matrix::zeros(self.rows.len(), self.columns.len());
        for (j, col) in self.columns.iter().enumerate() {
            for (i, c) in col {
                a.add_to(*i, j, c);
            }
        }
        let mut b = vec![Scalar::zero(); self.rows.len()];
        for (i, c) in rhs {
            b[i] += c;
        }
        linalg::solve(&a, &b)
    }
}

/// Unknowns for the image of `g` under a map into `P^j`: the basis
/// `l ⊗_h r` of `e_{origin(g)} P^j e_{terminus(g)}`.
fn lifting_unknowns(alg: &Algebra, g: &Generator, j: usize) -> Vec<(Generator, BasisMonomial, BasisMonomial)> {
    let m = alg.m();
    let mut out = Vec::new();
    for h in generators(m, j) {
        for l in alg.corner_basis(g.i, h.i) {
            for r in alg.corner_basis(h.terminus(m), g.terminus(m)) {
                out.push((h, l, r));
            }
        }
    }
    out
}

fn assemble(alg: &Algebra, source: usize, target: usize, images: Vec<Vec<Term>>) -> BimoduleMap {
    BimoduleMap::new(alg, source, target, images).expect("lifting unknowns are vertex compatible")
}

/// Lifts a cocycle `f: P^a → Λ` to `L^0, …, L^k` with `L^j: P^{a+j} → P^j`.
pub fn lift_cocycle(alg: &Algebra, f: &Cochain, k: usize) -> Result<Vec<BimoduleMap>> {
    let m = alg.m();
    let a = f.degree;
    let mut lifts: Vec<BimoduleMap> = Vec::with_capacity(k + 1);

    // Level 0: μ ∘ L^0 = f.
    let mut images = Vec::new();
    for g in generators(m, a) {
        let unknowns = lifting_unknowns(alg, &g, 0);
        let mut system = SparseSystem::<BasisMonomial>::new();
        for (_, l, r) in &unknowns {
            let entries = alg.mul_monomials(l, r).map(|(c, b)| vec![(b, c)]).unwrap_or_default();
            system.push_column(entries);
        }
        let rhs = f.value(&g).iter().map(|(b, c)| (*b, c.clone())).collect();
        let x = system.solve(rhs).ok_or_else(|| Error::InconsistentLifting {
            level: 0,
            generator: g.to_string(),
        })?;
        images.push(terms_from_solution(&unknowns, &x));
    }
    lifts.push(assemble(alg, a, 0, images));

    for j in 1..=k {
        let dj = differential(alg, j);
        let outer = differential(alg, a + j);
        let prev = &lifts[j - 1];
        let mut images = Vec::new();
        for g in generators(m, a + j) {
            let unknowns = lifting_unknowns(alg, &g, j);
            let mut system = SparseSystem::<usize>::new();
            for (h, l, r) in &unknowns {
                let mut x = ProjectiveElement::zero(j);
                x.add_term(Scalar::one(), *h, *l, *r);
                let entries = dj
                    .apply(alg, &x)
                    .iter()
                    .map(|((h2, l2, r2), c)| (underlying_index(alg, h2, l2, r2), c.clone()))
                    .collect();
                system.push_column(entries);
            }
            let target = prev.apply(alg, &outer.image(&g));
            let rhs = target
                .iter()
                .map(|((h2, l2, r2), c)| (underlying_index(alg, h2, l2, r2), c.clone()))
                .collect();
            let x = system.solve(rhs).ok_or_else(|| Error::InconsistentLifting {
                level: j,
                generator: g.to_string(),
            })?;
            images.push(terms_from_solution(&unknowns, &x));
        }
        lifts.push(assemble(alg, a + j, j, images));
    }
    Ok(lifts)
}

fn terms_from_solution(unknowns: &[(Generator, BasisMonomial, BasisMonomial)], x: &[Scalar]) -> Vec<Term> {
    unknowns
        .iter()
        .zip(x)
        .filter(|(_, c)| !c.is_zero())
        .map(|((h, l, r), c)| Term::new(AlgebraElement::term(c.clone(), *l), *h, AlgebraElement::monomial(*r)))
        .collect()
}
