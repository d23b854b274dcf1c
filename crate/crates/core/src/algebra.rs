//! The quotient algebra `Λ_q` with its monomial basis `{e_i, a_i, ā_i, z_i}`,
//! where `z_i = a_i ā_i` spans the socle at vertex `i`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::{wrap, Scalar};

/// Number of vertices and the deformation parameters `q_0, …, q_{m-1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraSpec {
    pub m: usize,
    pub q: Vec<Scalar>,
}

impl AlgebraSpec {
    pub fn new(q: Vec<Scalar>) -> Self {
        AlgebraSpec { m: q.len(), q }
    }

    /// `q = (zeta, 1, …, 1)` with `m` entries.
    pub fn with_zeta(m: usize, zeta: Scalar) -> Self {
        let mut q = vec![Scalar::one(); m];
        if let Some(first) = q.first_mut() {
            *first = zeta;
        }
        AlgebraSpec { m, q }
    }
}

/// Whether a theorem-dependent computation may run on a non-generic
/// instance (`ζ = ±1`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum RegimePolicy {
    #[default]
    Strict,
    AllowNonGeneric,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MonomialKind {
    Vertex,
    Arrow,
    BarArrow,
    Loop,
}

/// One of the `4m` basis monomials. Ordered by vertex index, then kind.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisMonomial {
    pub index: usize,
    pub kind: MonomialKind,
}

impl BasisMonomial {
    pub fn vertex(i: usize) -> Self {
        BasisMonomial { index: i, kind: MonomialKind::Vertex }
    }

    pub fn arrow(i: usize) -> Self {
        BasisMonomial { index: i, kind: MonomialKind::Arrow }
    }

    pub fn bar_arrow(i: usize) -> Self {
        BasisMonomial { index: i, kind: MonomialKind::BarArrow }
    }

    /// The socle loop `z_i = a_i ā_i`.
    pub fn socle(i: usize) -> Self {
        BasisMonomial { index: i, kind: MonomialKind::Loop }
    }

    pub fn origin(&self, m: usize) -> usize {
        match self.kind {
            MonomialKind::BarArrow => (self.index + 1) % m,
            _ => self.index,
        }
    }

    pub fn terminus(&self, m: usize) -> usize {
        match self.kind {
            MonomialKind::Arrow => (self.index + 1) % m,
            _ => self.index,
        }
    }

    pub fn is_radical(&self) -> bool {
        self.kind != MonomialKind::Vertex
    }

    /// Path length: 0 for vertices, 1 for arrows, 2 for socle loops.
    pub fn length(&self) -> usize {
        match self.kind {
            MonomialKind::Vertex => 0,
            MonomialKind::Arrow | MonomialKind::BarArrow => 1,
            MonomialKind::Loop => 2,
        }
    }
}

impl fmt::Display for BasisMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let i = self.index;
        match self.kind {
            MonomialKind::Vertex => write!(f, "e{i}"),
            MonomialKind::Arrow => write!(f, "a{i}"),
            MonomialKind::BarArrow => write!(f, "ā{i}"),
            MonomialKind::Loop => write!(f, "z{i}"),
        }
    }
}

/// A finitely supported linear combination of basis monomials. Zero
/// coefficients are never stored.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AlgebraElement {
    coeffs: BTreeMap<BasisMonomial, Scalar>,
}

impl AlgebraElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn monomial(b: BasisMonomial) -> Self {
        Self::term(Scalar::one(), b)
    }

    pub fn term(c: Scalar, b: BasisMonomial) -> Self {
        let mut x = Self::zero();
        x.add_term(c, b);
        x
    }

    pub fn add_term(&mut self, c: Scalar, b: BasisMonomial) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(b).or_insert_with(Scalar::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&b);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, b: &BasisMonomial) -> Scalar {
        self.coeffs.get(b).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&BasisMonomial, &Scalar)> {
        self.coeffs.iter()
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        AlgebraElement {
            coeffs: self.coeffs.iter().map(|(b, x)| (*b, x * c)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (b, c) in &other.coeffs {
            out.add_term(c.clone(), *b);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-Scalar::one()))
    }

    /// True when every monomial in the support is in the radical.
    pub fn is_radical(&self) -> bool {
        self.coeffs.keys().all(BasisMonomial::is_radical)
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (b, c)) in self.coeffs.iter().enumerate() {
            let sign = if c.is_negative() { "-" } else if k > 0 { "+" } else { "" };
            let mag = c.abs();
            if k > 0 {
                write!(f, " {sign} ")?;
            } else {
                write!(f, "{sign}")?;
            }
            if mag.is_one() {
                write!(f, "{b}")?;
            } else {
                write!(f, "{mag}·{b}")?;
            }
        }
        Ok(())
    }
}

/// The algebra `Λ_q` for a validated parameter vector.
#[derive(Clone, Debug)]
pub struct Algebra {
    spec: AlgebraSpec,
    zeta: Scalar,
    basis: Vec<BasisMonomial>,
    /// Position of each basis monomial inside `Λ e_{terminus}`.
    left_pos: Vec<usize>,
    /// Position of each basis monomial inside `e_{origin} Λ`.
    right_pos: Vec<usize>,
}

impl Algebra {
    /// Builds `Λ_q`. Instances with `ζ = ±1` are accepted but flagged as
    /// non-generic.
    pub fn new(spec: AlgebraSpec) -> Result<Self> {
        if spec.m == 0 {
            return Err(Error::NoVertices);
        }
        if spec.q.len() != spec.m {
            return Err(Error::ParameterCount {
                expected: spec.m,
                found: spec.q.len(),
            });
        }
        if let Some(index) = spec.q.iter().position(Zero::is_zero) {
            return Err(Error::ZeroParameter { index });
        }
        let m = spec.m;
        let zeta = spec.q.iter().fold(Scalar::one(), |acc, q| acc * q);
        let basis: Vec<BasisMonomial> = (0..m)
            .flat_map(|i| {
                [
                    BasisMonomial::vertex(i),
                    BasisMonomial::arrow(i),
                    BasisMonomial::bar_arrow(i),
                    BasisMonomial::socle(i),
                ]
            })
            .collect();
        let mut left_pos = vec![0; basis.len()];
        let mut right_pos = vec![0; basis.len()];
        for v in 0..m {
            let into: Vec<usize> = (0..basis.len()).filter(|&k| basis[k].terminus(m) == v).collect();
            for (p, &k) in into.iter().enumerate() {
                left_pos[k] = p;
            }
            let out: Vec<usize> = (0..basis.len()).filter(|&k| basis[k].origin(m) == v).collect();
            for (p, &k) in out.iter().enumerate() {
                right_pos[k] = p;
            }
        }
        Ok(Algebra {
            spec,
            zeta,
            basis,
            left_pos,
            right_pos,
        })
    }

    pub fn from_integers(q: &[i64]) -> Result<Self> {
        Algebra::new(AlgebraSpec::new(
            q.iter().map(|&x| Scalar::from_integer(x.into())).collect(),
        ))
    }

    pub fn spec(&self) -> &AlgebraSpec {
        &self.spec
    }

    pub fn m(&self) -> usize {
        self.spec.m
    }

    /// `q_i` with the index reduced modulo `m`.
    pub fn q(&self, i: i64) -> &Scalar {
        &self.spec.q[wrap(i, self.spec.m)]
    }

    /// `q_start q_{start+1} ⋯` with `count` factors, indices reduced modulo
    /// `m`; the empty product is 1.
    pub fn q_product(&self, start: i64, count: usize) -> Scalar {
        (0..count as i64).fold(Scalar::one(), |acc, t| acc * self.q(start + t))
    }

    pub fn zeta(&self) -> &Scalar {
        &self.zeta
    }

    /// Over the rationals the only roots of unity are `±1`.
    pub fn is_generic(&self) -> bool {
        !self.zeta.abs().is_one()
    }

    pub fn check_regime(&self, policy: RegimePolicy) -> Result<()> {
        if policy == RegimePolicy::Strict && !self.is_generic() {
            return Err(Error::NonGeneric { zeta: self.zeta.clone() });
        }
        Ok(())
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// The basis in canonical order: for each vertex `i`, `e_i, a_i, ā_i, z_i`.
    pub fn basis(&self) -> &[BasisMonomial] {
        &self.basis
    }

    pub fn basis_index(&self, b: &BasisMonomial) -> usize {
        4 * b.index + b.kind as usize
    }

    /// Basis of `e_i Λ e_j` in canonical order.
    pub fn corner_basis(&self, i: usize, j: usize) -> Vec<BasisMonomial> {
        let m = self.m();
        self.basis
            .iter()
            .copied()
            .filter(|b| b.origin(m) == i % m && b.terminus(m) == j % m)
            .collect()
    }

    /// Basis of `Λ e_i` (monomials ending at `i`).
    pub fn left_monomials(&self, i: usize) -> Vec<BasisMonomial> {
        let m = self.m();
        self.basis.iter().copied().filter(|b| b.terminus(m) == i % m).collect()
    }

    /// Basis of `e_i Λ` (monomials starting at `i`).
    pub fn right_monomials(&self, i: usize) -> Vec<BasisMonomial> {
        let m = self.m();
        self.basis.iter().copied().filter(|b| b.origin(m) == i % m).collect()
    }

    pub fn left_position(&self, b: &BasisMonomial) -> usize {
        self.left_pos[self.basis_index(b)]
    }

    pub fn right_position(&self, b: &BasisMonomial) -> usize {
        self.right_pos[self.basis_index(b)]
    }

    /// Radical basis monomials `a_i, ā_i, z_i` in canonical order.
    pub fn radical_basis(&self) -> Vec<BasisMonomial> {
        self.basis.iter().copied().filter(BasisMonomial::is_radical).collect()
    }

    /// Structure constants: `x · y = c · b`, or `None` for zero.
    pub fn mul_monomials(&self, x: &BasisMonomial, y: &BasisMonomial) -> Option<(Scalar, BasisMonomial)> {
        use MonomialKind::*;
        let m = self.m();
        if x.terminus(m) != y.origin(m) {
            return None;
        }
        match (x.kind, y.kind) {
            (Vertex, _) => Some((Scalar::one(), *y)),
            (_, Vertex) => Some((Scalar::one(), *x)),
            (Arrow, BarArrow) if x.index == y.index => Some((Scalar::one(), BasisMonomial::socle(x.index))),
            // ā_i a_i = q_{i+1} a_{i+1} ā_{i+1}
            (BarArrow, Arrow) if x.index == y.index => {
                let next = (x.index + 1) % m;
                Some((self.q(next as i64).clone(), BasisMonomial::socle(next)))
            }
            _ => None,
        }
    }

    pub fn multiply(&self, x: &AlgebraElement, y: &AlgebraElement) -> AlgebraElement {
        let mut out = AlgebraElement::zero();
        for (bx, cx) in x.iter() {
            for (by, cy) in y.iter() {
                if let Some((c, b)) = self.mul_monomials(bx, by) {
                    out.add_term(c * cx * cy, b);
                }
            }
        }
        out
    }

    /// `x · y · z`.
    pub fn multiply3(&self, x: &AlgebraElement, y: &AlgebraElement, z: &AlgebraElement) -> AlgebraElement {
        self.multiply(&self.multiply(x, y), z)
    }

    pub fn one(&self) -> AlgebraElement {
        let mut x = AlgebraElement::zero();
        for i in 0..self.m() {
            x.add_term(Scalar::one(), BasisMonomial::vertex(i));
        }
        x
    }

    /// Coordinates of `x` in the given ordered list of monomials. Panics if
    /// `x` has support outside that list.
    pub fn coordinates(&self, x: &AlgebraElement, basis: &[BasisMonomial]) -> Vec<Scalar> {
        for (b, _) in x.iter() {
            assert!(basis.contains(b), "{x} leaves the subspace spanned by the given monomials");
        }
        basis.iter().map(|b| x.coeff(b)).collect()
    }
}
