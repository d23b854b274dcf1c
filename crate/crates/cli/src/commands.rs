use std::collections::BTreeMap;

use qkoszul::bar::bar_cohomology_dimension;
use qkoszul::formulas;
use qkoszul::paths::{check_recursions_in, g_tables};
use qkoszul::resolution::Resolution;
use qkoszul::{Algebra, AlgebraSpec, GradedRing, HomComplex, RegimePolicy, Scalar};
use rayon::prelude::*;

use crate::config::{Check, RunConfig, SweepArgs};
use crate::report::{CheckResult, DegreeInfo, Report, RingInfo, SpecInfo, SweepReport, SweepRow};

/// Exactness is checked through this degree at most; the underlying
/// matrices grow like `16m(n+1)` square.
pub const EXACTNESS_CAP: usize = 6;
/// Degrees compared against the bar complex.
pub const ORACLE_DEGREE: usize = 3;
pub const ORACLE_MAX_M: usize = 3;

/// A run that was refused before any computation, e.g. at a root of unity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Refusal(pub String);

impl std::fmt::Display for Refusal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Refusal {}

pub fn spec_info(alg: &Algebra) -> SpecInfo {
    SpecInfo {
        m: alg.m(),
        q: alg.spec().q.iter().map(Scalar::to_string).collect(),
        zeta: alg.zeta().to_string(),
        generic: alg.is_generic(),
    }
}

fn regime_refusal(alg: &Algebra) -> Refusal {
    Refusal(format!(
        "ζ = {} is a root of unity; rerun with --allow-non-generic to compute without theorem comparison",
        alg.zeta()
    ))
}

fn maybe_par<T: Send, F>(parallel: bool, range: std::ops::RangeInclusive<usize>, f: F) -> Vec<T>
where
    F: Fn(usize) -> T + Sync + Send,
{
    if parallel {
        range.into_par_iter().map(f).collect()
    } else {
        range.map(f).collect()
    }
}

/// Dimensions of `Hom(P^n, Λ)`, `ker d^n`, `im d^{n-1}` and `HH^n` for
/// `n ≤ max_degree`, from exact ranks.
pub fn degree_rows(alg: &Algebra, max_degree: usize, parallel: bool) -> Vec<DegreeInfo> {
    let hom = HomComplex::new(alg);
    let ranks: Vec<(usize, usize)> = maybe_par(parallel, 0..=max_degree, |n| {
        let d = hom.coboundary_matrix(n);
        (d.cols(), qkoszul::linalg::rank(&d))
    });
    (0..=max_degree)
        .map(|n| {
            let (hom_dim, rank) = ranks[n];
            let ker = hom_dim - rank;
            let im = if n == 0 { 0 } else { ranks[n - 1].1 };
            DegreeInfo {
                n,
                hom_dim,
                ker,
                im,
                hh: ker - im,
            }
        })
        .collect()
}

fn hom_dims_check(m: usize, rows: &[DegreeInfo]) -> CheckResult {
    let bad: Vec<String> = rows
        .iter()
        .filter(|r| r.hom_dim != formulas::hom_dimension(m, r.n))
        .map(|r| format!("n={}: dim Hom {} expected {}", r.n, r.hom_dim, formulas::hom_dimension(m, r.n)))
        .collect();
    let max = rows.last().map_or(0, |r| r.n);
    match bad.first() {
        None => CheckResult::new("hom-dims", true, format!("dim Hom(P^n, Λ) matches the closed form for n <= {max}")),
        Some(first) => CheckResult::new("hom-dims", false, first.clone()),
    }
}

fn cohomology_check(m: usize, rows: &[DegreeInfo], expected_hh: &BTreeMap<usize, usize>) -> CheckResult {
    let mut bad = Vec::new();
    for r in rows {
        if let Some(k) = formulas::kernel_dimension(m, r.n) {
            if k != r.ker {
                bad.push(format!("n={}: ker {} expected {k}", r.n, r.ker));
            }
        }
        if let Some(i) = formulas::image_dimension(m, r.n) {
            if i != r.im {
                bad.push(format!("n={}: im {} expected {i}", r.n, r.im));
            }
        }
        let hh = expected_hh.get(&r.n).copied().unwrap_or_else(|| formulas::cohomology_dimension(m, r.n));
        if hh != r.hh {
            bad.push(format!("n={}: HH {} expected {hh}", r.n, r.hh));
        }
    }
    let max = rows.last().map_or(0, |r| r.n);
    match bad.first() {
        None => CheckResult::new(
            "cohomology",
            true,
            format!("ker, im and HH match the closed forms for n <= {max}"),
        ),
        Some(first) => CheckResult::new("cohomology", false, format!("{first} ({} mismatches)", bad.len())),
    }
}

/// `compute`: the degree table, compared with the closed forms when ζ is
/// generic. Exit code 1 on any mismatch.
pub fn compute(cfg: &RunConfig) -> Result<(Report, u8), Refusal> {
    let alg = &cfg.algebra;
    if !alg.is_generic() && !cfg.allow_non_generic {
        return Err(regime_refusal(alg));
    }
    let degrees = degree_rows(alg, cfg.max_degree, cfg.parallel);
    let checks = if alg.is_generic() {
        vec![hom_dims_check(alg.m(), &degrees), cohomology_check(alg.m(), &degrees, &cfg.expected_hh)]
    } else {
        Vec::new()
    };
    let report = Report {
        spec: spec_info(alg),
        degrees,
        ring: None,
        checks,
    };
    let code = if report.passed() { 0 } else { 1 };
    Ok((report, code))
}

/// `verify`: runs the selected checks. Exit code 1 if any fails.
pub fn verify(cfg: &RunConfig) -> Result<(Report, u8), Refusal> {
    let alg = &cfg.algebra;
    if !alg.is_generic() && !cfg.allow_non_generic && cfg.checks.iter().any(|c| c.needs_generic()) {
        return Err(regime_refusal(alg));
    }
    let degrees = degree_rows(alg, cfg.max_degree, cfg.parallel);
    let run = |check: &Check| run_check(*check, cfg, &degrees);
    let results: Vec<(CheckResult, Option<RingInfo>)> = if cfg.parallel {
        cfg.checks.par_iter().map(run).collect()
    } else {
        cfg.checks.iter().map(run).collect()
    };
    let mut ring = None;
    let mut checks = Vec::new();
    for (c, r) in results {
        checks.push(c);
        ring = ring.or(r);
    }
    let report = Report {
        spec: spec_info(alg),
        degrees,
        ring,
        checks,
    };
    let code = if report.passed() { 0 } else { 1 };
    Ok((report, code))
}

fn run_check(check: Check, cfg: &RunConfig, degrees: &[DegreeInfo]) -> (CheckResult, Option<RingInfo>) {
    let alg = &cfg.algebra;
    let max = cfg.max_degree;
    let name = check.name();
    let result = match check {
        Check::Recursions => {
            let tables = g_tables(alg, max.max(1));
            let failure = (1..tables.len()).map(|n| check_recursions_in(alg, &tables, n)).find(|c| !c.passed());
            match failure {
                None => CheckResult::new(
                    name,
                    true,
                    format!("left and right recursions agree in KQ for 1 <= n <= {}", max.max(1)),
                ),
                Some(c) => {
                    let (r, i) = c.first_failure.unwrap_or_default();
                    CheckResult::new(
                        name,
                        false,
                        format!("n={}: left form differs from g^{}_({r},{i}); equal modulo relations: {}", c.n, c.n, c.reduced),
                    )
                }
            }
        }
        Check::Complex => {
            let res = Resolution::new(alg, max + 1);
            let maps = res.check_complex();
            let mats = res.check_complex_by_matrices();
            match maps.first_failure.or(mats.first_failure) {
                None => CheckResult::new(
                    name,
                    true,
                    format!("∂^n ∘ ∂^(n+1) = 0 for n <= {max} (maps and matrices)"),
                ),
                Some(n) => CheckResult::new(name, false, format!("∂^{n} ∘ ∂^{} != 0", n + 1)),
            }
        }
        Check::Exactness => {
            let top = max.min(EXACTNESS_CAP);
            let report = Resolution::new(alg, top + 1).verify_exactness();
            let onto = report.augmentation_rank == alg.dim();
            match report.rows.iter().find(|r| !r.passed()) {
                None if onto => CheckResult::new(
                    name,
                    true,
                    format!("ker ∂^n = im ∂^(n+1) for n <= {top}, augmentation onto"),
                ),
                None => CheckResult::new(name, false, "augmentation is not onto"),
                Some(r) => CheckResult::new(
                    name,
                    false,
                    format!("n={}: dim ker {} but rank of next map {}", r.n, r.kernel_dim, r.image_dim),
                ),
            }
        }
        Check::HomDims => hom_dims_check(alg.m(), degrees),
        Check::Cohomology if alg.is_generic() => cohomology_check(alg.m(), degrees, &cfg.expected_hh),
        Check::Cohomology => CheckResult::new(
            name,
            true,
            "ζ is a root of unity: dimensions reported without comparison",
        ),
        Check::Ring => return ring_check(cfg),
        Check::Oracle => oracle_check(alg, degrees),
    };
    (result, None)
}

fn ring_check(cfg: &RunConfig) -> (CheckResult, Option<RingInfo>) {
    let policy = if cfg.allow_non_generic {
        RegimePolicy::AllowNonGeneric
    } else {
        RegimePolicy::Strict
    };
    let report = GradedRing::new(&cfg.algebra, cfg.max_degree.max(2), policy).and_then(|r| r.check_presentation());
    match report {
        Ok(report) => {
            let info = RingInfo {
                generators: report.generators.clone(),
                relations_verified: report.passed(),
                total_dim: report.total_dim,
            };
            let detail = if report.passed() {
                format!(
                    "total dim {}; {} relations verified",
                    report.total_dim,
                    report.relations.len()
                )
            } else {
                format!("total dim {}; violated: {}", report.total_dim, report.failures().join("; "))
            };
            (CheckResult::new("ring", report.passed(), detail), Some(info))
        }
        Err(e) => (CheckResult::new("ring", false, e.to_string()), None),
    }
}

fn oracle_check(alg: &Algebra, degrees: &[DegreeInfo]) -> CheckResult {
    if alg.m() > ORACLE_MAX_M {
        return CheckResult::new(
            "oracle",
            true,
            format!("skipped: the bar complex oracle is limited to m <= {ORACLE_MAX_M}"),
        );
    }
    let top = ORACLE_DEGREE.min(degrees.len().saturating_sub(1));
    let mut bar = Vec::new();
    for n in 0..=top {
        match bar_cohomology_dimension(alg, n) {
            Ok(d) => bar.push(d),
            Err(e) => return CheckResult::new("oracle", false, e.to_string()),
        }
    }
    let resolution: Vec<usize> = degrees[..=top].iter().map(|d| d.hh).collect();
    let fmt = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
    if bar == resolution {
        CheckResult::new(
            "oracle",
            true,
            format!("bar complex agrees through degree {top}: {}", fmt(&bar)),
        )
    } else {
        CheckResult::new(
            "oracle",
            false,
            format!("bar complex {} vs resolution {}", fmt(&bar), fmt(&resolution)),
        )
    }
}

/// `sweep`: total dimension of `HH^*` for `q = (ζ, 1, …, 1)`.
pub fn sweep(args: &SweepArgs) -> (SweepReport, u8) {
    let (lo, hi) = args.m;
    let cases: Vec<(usize, Scalar)> = (lo..=hi)
        .flat_map(|m| args.zeta.iter().map(move |z| (m, z.clone())))
        .collect();
    let run = |(m, zeta): &(usize, Scalar)| sweep_row(*m, zeta, args.max_degree);
    let rows: Vec<SweepRow> = if args.parallel {
        cases.par_iter().map(run).collect()
    } else {
        cases.iter().map(run).collect()
    };
    let report = SweepReport {
        max_degree: args.max_degree,
        rows,
    };
    let code = if report.passed() { 0 } else { 1 };
    (report, code)
}

fn sweep_row(m: usize, zeta: &Scalar, max_degree: Option<usize>) -> SweepRow {
    let expected = formulas::total_dimension(m);
    let row = |total, status: &str, detail: String| SweepRow {
        m,
        zeta: zeta.to_string(),
        total,
        expected,
        status: status.into(),
        detail,
    };
    let alg = match Algebra::new(AlgebraSpec::with_zeta(m, zeta.clone())) {
        Ok(a) => a,
        Err(e) => return row(None, "fail", e.to_string()),
    };
    if !alg.is_generic() {
        return row(None, "skipped", format!("ζ = {zeta} is a root of unity"));
    }
    let top = max_degree.unwrap_or(2 * m + 6);
    let total: usize = degree_rows(&alg, top, false).iter().map(|d| d.hh).sum();
    if total == expected {
        row(Some(total), "pass", String::new())
    } else {
        row(Some(total), "fail", format!("total {total} differs from m + 4 = {expected}"))
    }
}
