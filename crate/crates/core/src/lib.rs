//! Hochschild cohomology of the q-deformed Koszul self-injective algebras
//! `Λ_q = KQ/I_q` over the rationals.
//!
//! `Q` is the cyclic quiver on `m` vertices with arrows `a_i: i → i+1` and
//! `ā_i: i+1 → i`; `I_q` is generated by `a_i a_{i+1}`, `ā_{i-1} ā_{i-2}` and
//! `q_i a_i ā_i - ā_{i-1} a_{i-1}`. The crate builds the explicit minimal
//! projective bimodule resolution of `Λ_q`, the cochain complex
//! `Hom(P^n, Λ_q)`, its cohomology and cup products, and an independent
//! bar-complex computation to cross-check the dimensions.
//!
//! ```
//! use qkoszul::{Algebra, HomComplex, RegimePolicy};
//!
//! let alg = Algebra::from_integers(&[2, 1, 1]).unwrap();
//! let hom = HomComplex::new(&alg);
//! let dims: Vec<usize> = (0..5)
//!     .map(|n| hom.cohomology_dimension(n, RegimePolicy::Strict).unwrap())
//!     .collect();
//! assert_eq!(dims, vec![4, 2, 1, 0, 0]);
//! ```

pub mod algebra;
pub mod bar;
mod error;
pub mod formulas;
pub mod hom;
pub mod linalg;
pub mod paths;
pub mod resolution;
pub mod ring;

pub use bar::{bar_cochain_dimension, bar_cohomology_dimension, BarCap};
pub use algebra::{Algebra, AlgebraElement, AlgebraSpec, BasisMonomial, MonomialKind, RegimePolicy};
pub use error::{Error, Result};
pub use hom::{Cochain, HomComplex};
pub use linalg::Matrix;
pub use paths::{FreeElement, FreePath, Step};
pub use resolution::{BimoduleMap, Generator, ProjectiveElement, Resolution, Term};
pub use ring::{ring_report, CanonicalGenerators, CohomologyClass, GradedRing, RingReport};

/// Exact rational scalar; always stored in lowest terms with a positive
/// denominator.
pub type Scalar = num_rational::BigRational;

/// Parses a rational in the form `a/b` or `a`, with an optional sign.
/// Decimals are rejected.
pub fn parse_scalar(text: &str) -> std::result::Result<Scalar, String> {
    let t = text.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let parse = |s: &str| {
        let digits = s.strip_prefix(['+', '-']).unwrap_or(s);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(format!("invalid rational {text:?}"));
        }
        s.trim_start_matches('+')
            .parse::<num_bigint::BigInt>()
            .map_err(|e| format!("invalid rational {text:?}: {e}"))
    };
    let (n, d) = (parse(num)?, parse(den)?);
    if num_traits::Zero::is_zero(&d) {
        return Err(format!("zero denominator in {text:?}"));
    }
    Ok(Scalar::new(n, d))
}

/// Reduces a possibly negative vertex index modulo `m`.
pub(crate) fn wrap(i: i64, m: usize) -> usize {
    i.rem_euclid(m as i64) as usize
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_rationals() {
        assert_eq!(parse_scalar("2").unwrap(), Scalar::from_integer(2.into()));
        assert_eq!(
            parse_scalar("-6/4").unwrap(),
            Scalar::new((-3).into(), 2.into())
        );
        assert_eq!(parse_scalar("+5/7").unwrap(), Scalar::new(5.into(), 7.into()));
        assert_eq!(parse_scalar("3/-4").unwrap(), Scalar::new((-3).into(), 4.into()));
        assert!(parse_scalar("0.5").is_err());
        assert!(parse_scalar("1/0").is_err());
        assert!(parse_scalar("").is_err());
        assert!(parse_scalar("x").is_err());
    }

    #[test]
    fn wraps_indices() {
        assert_eq!(wrap(-1, 3), 2);
        assert_eq!(wrap(7, 3), 1);
        assert_eq!(wrap(-4, 1), 0);
    }
}
