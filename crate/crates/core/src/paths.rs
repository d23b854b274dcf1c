//! The free path algebra `KQ`, the recursive generators `g^n_{r,i}` that
//! label the summands of the resolution, and rewriting from `KQ` onto the
//! normal forms of `Λ_q`.
//!
//! Paths are written left to right: `a_0 a_1` first follows `a_0`.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

use crate::algebra::{Algebra, AlgebraElement, BasisMonomial, MonomialKind};
use crate::{wrap, Scalar};

/// One arrow: `a_index` (forward, `index → index+1`) or `ā_index`
/// (backward, `index+1 → index`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Step {
    pub bar: bool,
    pub index: usize,
}

impl Step {
    pub fn forward(i: usize) -> Self {
        Step { bar: false, index: i }
    }

    pub fn backward(i: usize) -> Self {
        Step { bar: true, index: i }
    }

    pub fn origin(&self, m: usize) -> usize {
        if self.bar {
            (self.index + 1) % m
        } else {
            self.index
        }
    }

    pub fn terminus(&self, m: usize) -> usize {
        if self.bar {
            self.index
        } else {
            (self.index + 1) % m
        }
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.bar {
            write!(f, "ā{}", self.index)
        } else {
            write!(f, "a{}", self.index)
        }
    }
}

/// A path in `Q`; the empty step list is the trivial path at `origin`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct FreePath {
    pub origin: usize,
    pub steps: Vec<Step>,
}

impl FreePath {
    pub fn trivial(i: usize) -> Self {
        FreePath { origin: i, steps: Vec::new() }
    }

    pub fn arrow(step: Step, m: usize) -> Self {
        FreePath {
            origin: step.origin(m),
            steps: vec![step],
        }
    }

    /// Builds a path from consecutive steps; `None` if they do not compose.
    pub fn from_steps(steps: Vec<Step>, m: usize) -> Option<Self> {
        let origin = steps.first()?.origin(m);
        let p = FreePath { origin, steps };
        p.is_valid(m).then_some(p)
    }

    pub fn is_valid(&self, m: usize) -> bool {
        let mut at = self.origin % m;
        for s in &self.steps {
            if s.origin(m) != at {
                return false;
            }
            at = s.terminus(m);
        }
        true
    }

    pub fn terminus(&self, m: usize) -> usize {
        self.steps.last().map_or(self.origin % m, |s| s.terminus(m))
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Concatenation, or `None` on an endpoint mismatch.
    pub fn concat(&self, other: &FreePath, m: usize) -> Option<FreePath> {
        if self.terminus(m) != other.origin % m {
            return None;
        }
        let mut steps = self.steps.clone();
        steps.extend_from_slice(&other.steps);
        Some(FreePath { origin: self.origin % m, steps })
    }

    /// The path representing a basis monomial of `Λ_q` (`z_i ↦ a_i ā_i`).
    pub fn from_monomial(b: &BasisMonomial, m: usize) -> Self {
        let i = b.index;
        match b.kind {
            MonomialKind::Vertex => FreePath::trivial(i),
            MonomialKind::Arrow => FreePath::arrow(Step::forward(i), m),
            MonomialKind::BarArrow => FreePath::arrow(Step::backward(i), m),
            MonomialKind::Loop => FreePath {
                origin: i,
                steps: vec![Step::forward(i), Step::backward(i)],
            },
        }
    }

    /// Every path of exactly `len` arrows in the quiver with `m` vertices.
    pub fn all_of_length(m: usize, len: usize) -> Vec<FreePath> {
        let mut paths: Vec<FreePath> = (0..m).map(FreePath::trivial).collect();
        for _ in 0..len {
            paths = paths
                .into_iter()
                .flat_map(|p| {
                    let at = p.terminus(m);
                    [Step::forward(at), Step::backward(wrap(at as i64 - 1, m))]
                        .into_iter()
                        .map(move |s| {
                            let mut q = p.clone();
                            q.steps.push(s);
                            q
                        })
                })
                .collect();
        }
        paths
    }
}

impl fmt::Display for FreePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.steps.is_empty() {
            return write!(f, "e{}", self.origin);
        }
        for s in &self.steps {
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

/// A linear combination of paths.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct FreeElement {
    coeffs: BTreeMap<FreePath, Scalar>,
}

impl FreeElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn path(p: FreePath) -> Self {
        Self::term(Scalar::one(), p)
    }

    pub fn term(c: Scalar, p: FreePath) -> Self {
        let mut x = Self::zero();
        x.add_term(c, p);
        x
    }

    pub fn add_term(&mut self, c: Scalar, p: FreePath) {
        if c.is_zero() {
            return;
        }
        let entry = self.coeffs.entry(p.clone()).or_insert_with(Scalar::zero);
        *entry += c;
        if entry.is_zero() {
            self.coeffs.remove(&p);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&FreePath, &Scalar)> {
        self.coeffs.iter()
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, p: &FreePath) -> Scalar {
        self.coeffs.get(p).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        FreeElement {
            coeffs: self.coeffs.iter().map(|(p, x)| (p.clone(), x * c)).collect(),
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (p, c) in &other.coeffs {
            out.add_term(c.clone(), p.clone());
        }
        out
    }

    /// Concatenation product extended bilinearly.
    pub fn multiply(&self, other: &Self, m: usize) -> Self {
        let mut out = Self::zero();
        for (p, c) in &self.coeffs {
            for (p2, c2) in &other.coeffs {
                if let Some(pq) = p.concat(p2, m) {
                    out.add_term(c * c2, pq);
                }
            }
        }
        out
    }

    /// The common origin and terminus, if every path shares them.
    pub fn uniform_endpoints(&self, m: usize) -> Option<(usize, usize)> {
        let mut it = self.coeffs.keys();
        let first = it.next()?;
        let ends = (first.origin % m, first.terminus(m));
        it.all(|p| (p.origin % m, p.terminus(m)) == ends).then_some(ends)
    }

    /// The common path length, if every path has the same length.
    pub fn homogeneous_length(&self) -> Option<usize> {
        let mut it = self.coeffs.keys();
        let len = it.next()?.len();
        it.all(|p| p.len() == len).then_some(len)
    }
}

impl fmt::Display for FreeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.coeffs.iter().map(|(p, c)| format!("({c})·{p}")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Which redex the rewriting engine contracts first.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RewriteStrategy {
    Leftmost,
    Rightmost,
}

/// Rewrites a single path to `c · (normal word)` or zero.
///
/// Rules: `a_i a_{i+1} → 0`, `ā_i ā_{i-1} → 0`, `ā_{i-1} a_{i-1} → q_i a_i ā_i`.
/// The surviving normal words are `e_i`, `a_i`, `ā_i` and `a_i ā_i`.
pub fn reduce_path(alg: &Algebra, path: &FreePath, strategy: RewriteStrategy) -> Option<(Scalar, BasisMonomial)> {
    let m = alg.m();
    let mut coeff = Scalar::one();
    let mut word = path.steps.clone();
    loop {
        let redexes = (0..word.len().saturating_sub(1)).filter(|&k| {
            let (s, t) = (word[k], word[k + 1]);
            s.bar || !t.bar
        });
        let at = match strategy {
            RewriteStrategy::Leftmost => redexes.min(),
            RewriteStrategy::Rightmost => redexes.max(),
        };
        let Some(k) = at else { break };
        let (s, t) = (word[k], word[k + 1]);
        match (s.bar, t.bar) {
            (false, false) | (true, true) => return None,
            (true, false) => {
                // ā_j a_j → q_{j+1} a_{j+1} ā_{j+1}
                let next = (s.index + 1) % m;
                coeff *= alg.q(next as i64);
                word[k] = Step::forward(next);
                word[k + 1] = Step::backward(next);
            }
            (false, true) => unreachable!(),
        }
    }
    let origin = path.origin % m;
    let mono = match word.as_slice() {
        [] => BasisMonomial::vertex(origin),
        [s] if s.bar => BasisMonomial::bar_arrow(s.index),
        [s] => BasisMonomial::arrow(s.index),
        [s, t] if !s.bar && t.bar && s.index == t.index => BasisMonomial::socle(s.index),
        other => unreachable!("irreducible word of length {}", other.len()),
    };
    Some((coeff, mono))
}

/// Normal form of `x` in `Λ_q` (leftmost-first rewriting).
pub fn reduce_to_algebra(alg: &Algebra, x: &FreeElement) -> AlgebraElement {
    reduce_with(alg, x, RewriteStrategy::Leftmost)
}

pub fn reduce_with(alg: &Algebra, x: &FreeElement, strategy: RewriteStrategy) -> AlgebraElement {
    let mut out = AlgebraElement::zero();
    for (p, c) in x.iter() {
        if let Some((k, b)) = reduce_path(alg, p, strategy) {
            out.add_term(k * c, b);
        }
    }
    out
}

/// The table `{g^n_{r,i} : 0 ≤ r ≤ n, 0 ≤ i < m}` for one degree.
#[derive(Clone, Debug)]
pub struct GeneratorTable {
    pub n: usize,
    m: usize,
    entries: Vec<FreeElement>,
}

impl GeneratorTable {
    /// `g^n_{r,i}`; zero for `r < 0` or `r > n`.
    pub fn get(&self, r: i64, i: i64) -> FreeElement {
        if r < 0 || r > self.n as i64 {
            return FreeElement::zero();
        }
        self.entries[wrap(i, self.m) * (self.n + 1) + r as usize].clone()
    }

    fn get_ref(&self, r: i64, i: i64) -> Option<&FreeElement> {
        if r < 0 || r > self.n as i64 {
            return None;
        }
        Some(&self.entries[wrap(i, self.m) * (self.n + 1) + r as usize])
    }

    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), &FreeElement)> {
        let n = self.n;
        self.entries.iter().enumerate().map(move |(k, g)| ((k % (n + 1), k / (n + 1)), g))
    }
}

fn step_element(step: Step, m: usize) -> FreeElement {
    FreeElement::path(FreePath::arrow(step, m))
}

fn sign(k: i64) -> Scalar {
    if k.rem_euclid(2) == 0 {
        Scalar::one()
    } else {
        -Scalar::one()
    }
}

/// `g^n` from `g^{n-1}` by right multiplication:
/// `g^n_{r,i} = g^{n-1}_{r,i} a_{i+n-2r-1} + (-1)^n q_{i-r+1}⋯q_{i+n-2r} g^{n-1}_{r-1,i} ā_{i+n-2r}`
/// where the q-product has `n - r` factors.
fn next_table(alg: &Algebra, prev: &GeneratorTable) -> GeneratorTable {
    let m = alg.m();
    let n = prev.n + 1;
    let ni = n as i64;
    let mut entries = Vec::with_capacity(m * (n + 1));
    for i in 0..m as i64 {
        for r in 0..=ni {
            let mut g = FreeElement::zero();
            if let Some(prev_r) = prev.get_ref(r, i) {
                g = prev_r.multiply(&step_element(Step::forward(wrap(i + ni - 2 * r - 1, m)), m), m);
            }
            if let Some(prev_r1) = prev.get_ref(r - 1, i) {
                let c = sign(ni) * alg.q_product(i - r + 1, (ni - r) as usize);
                let tail = prev_r1.multiply(&step_element(Step::backward(wrap(i + ni - 2 * r, m)), m), m);
                g = g.add(&tail.scale(&c));
            }
            entries.push(g);
        }
    }
    GeneratorTable { n, m, entries }
}

/// The tables `g^0, …, g^max_n`.
pub fn g_tables(alg: &Algebra, max_n: usize) -> Vec<GeneratorTable> {
    let m = alg.m();
    let mut tables = vec![GeneratorTable {
        n: 0,
        m,
        entries: (0..m).map(|i| FreeElement::path(FreePath::trivial(i))).collect(),
    }];
    for _ in 0..max_n {
        let next = next_table(alg, tables.last().unwrap());
        tables.push(next);
    }
    tables
}

pub fn g_generators(alg: &Algebra, n: usize) -> GeneratorTable {
    g_tables(alg, n).pop().unwrap()
}

/// The left-multiplication form
/// `(-1)^r q_{i-r+1}⋯q_i a_i g^{n-1}_{r,i+1} + (-1)^r ā_{i-1} g^{n-1}_{r-1,i-1}`.
pub fn left_form(alg: &Algebra, prev: &GeneratorTable, r: usize, i: usize) -> FreeElement {
    let m = alg.m();
    let (r, i) = (r as i64, i as i64);
    let c = sign(r) * alg.q_product(i - r + 1, r as usize);
    let first = step_element(Step::forward(i as usize), m).multiply(&prev.get(r, i + 1), m).scale(&c);
    let second = step_element(Step::backward(wrap(i - 1, m)), m)
        .multiply(&prev.get(r - 1, i - 1), m)
        .scale(&sign(r));
    first.add(&second)
}

/// Result of comparing both recursions for `g^n` at one degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecursionCheck {
    pub n: usize,
    /// Equality as elements of `KQ`.
    pub literal: bool,
    /// Equality after reduction to `Λ_q`.
    pub reduced: bool,
    /// First `(r, i)` where literal equality fails.
    pub first_failure: Option<(usize, usize)>,
}

impl RecursionCheck {
    pub fn passed(&self) -> bool {
        self.literal
    }
}

pub fn check_recursions_in(alg: &Algebra, tables: &[GeneratorTable], n: usize) -> RecursionCheck {
    assert!(n >= 1 && n < tables.len());
    let (prev, cur) = (&tables[n - 1], &tables[n]);
    let mut literal = true;
    let mut reduced = true;
    let mut first_failure = None;
    for ((r, i), g) in cur.iter() {
        let left = left_form(alg, prev, r, i);
        if &left != g {
            literal = false;
            first_failure.get_or_insert((r, i));
        }
        if reduce_to_algebra(alg, &left) != reduce_to_algebra(alg, g) {
            reduced = false;
        }
    }
    RecursionCheck {
        n,
        literal,
        reduced,
        first_failure,
    }
}

/// Checks that the left-multiplication form reproduces `g^n_{r,i}` for every
/// `(r, i)`. Literal equality in `KQ` is the pass criterion; equality modulo
/// `I_q` is reported alongside.
pub fn verify_g_recursions(alg: &Algebra, n: usize) -> RecursionCheck {
    check_recursions_in(alg, &g_tables(alg, n), n)
}
