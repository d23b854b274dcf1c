//! Hochschild cohomology from the reduced bar complex relative to the
//! vertex subalgebra `E = K^m`.
//!
//! `C^n = Hom_{E-E}(r^{⊗_E n}, Λ)` where `r` is the radical, spanned by
//! `a_i`, `ā_i`, `z_i`. This is independent of the minimal resolution and
//! serves as a cross-check on small instances only; the cochain spaces grow
//! like `3^n`.

use std::collections::HashMap;

use num_traits::One;

use crate::algebra::{Algebra, BasisMonomial};
use crate::error::{Error, Result};
use crate::linalg::{self, Matrix};
use crate::Scalar;

/// `r_1 ⊗ … ⊗ r_n` with `terminus(r_j) = origin(r_{j+1})`. The empty
/// tensor sits at a vertex, so `origin` is kept explicitly.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RadicalTensor {
    pub origin: usize,
    pub factors: Vec<BasisMonomial>,
}

impl RadicalTensor {
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn terminus(&self, m: usize) -> usize {
        self.factors.last().map_or(self.origin, |r| r.terminus(m))
    }

    fn slice(&self, m: usize, from: usize, to: usize) -> RadicalTensor {
        let origin = if from == 0 { self.origin } else { self.factors[from - 1].terminus(m) };
        RadicalTensor {
            origin,
            factors: self.factors[from..to].to_vec(),
        }
    }
}

/// All endpoint-compatible radical tensors of length `n`.
pub fn radical_tensors(alg: &Algebra, n: usize) -> Vec<RadicalTensor> {
    let m = alg.m();
    let mut current: Vec<RadicalTensor> = (0..m)
        .map(|origin| RadicalTensor {
            origin,
            factors: Vec::new(),
        })
        .collect();
    let radical = alg.radical_basis();
    for _ in 0..n {
        let mut next = Vec::new();
        for t in &current {
            let end = t.terminus(m);
            for r in radical.iter().filter(|r| r.origin(m) == end) {
                let mut factors = t.factors.clone();
                factors.push(*r);
                next.push(RadicalTensor {
                    origin: t.origin,
                    factors,
                });
            }
        }
        current = next;
    }
    current
}

/// Basis of `C^n`: pairs `(tensor, b)` with `b` in the corner between the
/// tensor's endpoints.
pub fn cochain_basis(alg: &Algebra, n: usize) -> Vec<(RadicalTensor, BasisMonomial)> {
    let m = alg.m();
    radical_tensors(alg, n)
        .into_iter()
        .flat_map(|t| {
            let corner = alg.corner_basis(t.origin, t.terminus(m));
            corner.into_iter().map(move |b| (t.clone(), b))
        })
        .collect()
}

pub fn bar_cochain_dimension(alg: &Algebra, n: usize) -> usize {
    cochain_basis(alg, n).len()
}

/// Matrix of `d^n: C^n → C^{n+1}`; rows index `C^{n+1}`, columns `C^n`.
pub fn bar_coboundary_matrix(alg: &Algebra, n: usize) -> Matrix {
    let m = alg.m();
    let cols = cochain_basis(alg, n);
    let rows = cochain_basis(alg, n + 1);
    let col_index: HashMap<&(RadicalTensor, BasisMonomial), usize> =
        cols.iter().enumerate().map(|(k, x)| (x, k)).collect();
    let row_index: HashMap<&(RadicalTensor, BasisMonomial), usize> =
        rows.iter().enumerate().map(|(k, x)| (x, k)).collect();
    let mut d = Matrix::zeros(rows.len(), cols.len());

    // Each term of dφ(s) is c · left · φ(t) · right for a sub-tensor t.
    let mut add = |s: &RadicalTensor, t: &RadicalTensor, c: Scalar, left: Option<BasisMonomial>, right: Option<BasisMonomial>| {
        for b in alg.corner_basis(t.origin, t.terminus(m)) {
            let Some(col) = col_index.get(&(t.clone(), b)) else { continue };
            let mut value = Some((c.clone(), b));
            if let Some(l) = left {
                value = value.and_then(|(c, x)| alg.mul_monomials(&l, &x).map(|(k, y)| (c * k, y)));
            }
            if let Some(r) = right {
                value = value.and_then(|(c, x)| alg.mul_monomials(&x, &r).map(|(k, y)| (c * k, y)));
            }
            if let Some((c, y)) = value {
                let row = row_index[&(s.clone(), y)];
                d.add_to(row, *col, &c);
            }
        }
    };

    for s in radical_tensors(alg, n + 1) {
        let len = s.len();
        add(&s, &s.slice(m, 1, len), Scalar::one(), Some(s.factors[0]), None);
        for j in 1..len {
            let (x, y) = (s.factors[j - 1], s.factors[j]);
            if let Some((c, xy)) = alg.mul_monomials(&x, &y) {
                let mut factors = s.factors[..j - 1].to_vec();
                factors.push(xy);
                factors.extend_from_slice(&s.factors[j + 1..]);
                let t = RadicalTensor {
                    origin: s.origin,
                    factors,
                };
                let sign = if j % 2 == 0 { c } else { -c };
                add(&s, &t, sign, None, None);
            }
        }
        let sign = if n % 2 == 1 { Scalar::one() } else { -Scalar::one() };
        add(&s, &s.slice(m, 0, len - 1), sign, None, Some(s.factors[len - 1]));
    }
    d
}

/// Size limits for the oracle. Exceeding them is an error.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BarCap {
    pub max_degree: usize,
    pub max_vertices: usize,
}

impl Default for BarCap {
    fn default() -> Self {
        BarCap {
            max_degree: 3,
            max_vertices: 3,
        }
    }
}

/// `dim HH^n` from the bar complex, within the default cap.
pub fn bar_cohomology_dimension(alg: &Algebra, n: usize) -> Result<usize> {
    bar_cohomology_dimension_capped(alg, n, BarCap::default())
}

pub fn bar_cohomology_dimension_capped(alg: &Algebra, n: usize, cap: BarCap) -> Result<usize> {
    if n > cap.max_degree || alg.m() > cap.max_vertices {
        return Err(Error::DegreeCapExceeded {
            detail: format!(
                "bar complex limited to n <= {} and m <= {}, got n = {n}, m = {}",
                cap.max_degree,
                cap.max_vertices,
                alg.m()
            ),
        });
    }
    let dim = bar_cochain_dimension(alg, n);
    let kernel = dim - linalg::rank(&bar_coboundary_matrix(alg, n));
    let image = if n == 0 { 0 } else { linalg::rank(&bar_coboundary_matrix(alg, n - 1)) };
    Ok(kernel - image)
}

/// Whether `d^{n+1} ∘ d^n = 0` for every `n ≤ max`.
pub fn check_bar_complex(alg: &Algebra, max: usize) -> bool {
    let mut prev = bar_coboundary_matrix(alg, 0);
    for n in 1..=max {
        let next = bar_coboundary_matrix(alg, n);
        if !next.mul(&prev).is_zero() {
            return false;
        }
        prev = next;
    }
    true
}
