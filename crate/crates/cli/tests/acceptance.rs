//! End-to-end acceptance checks. Each check prints one PASS/FAIL line; the
//! process exits non-zero if any fails. All comparisons are exact.

use std::panic::{self, AssertUnwindSafe};
use std::process::{Command, ExitCode};
use std::time::Instant;

use qkoszul::bar::bar_cohomology_dimension;
use qkoszul::paths::{check_recursions_in, g_tables};
use qkoszul::resolution::{generators, Resolution};
use qkoszul::{ring_report, Algebra, AlgebraSpec, HomComplex, RegimePolicy, Scalar};

fn rat(n: i64, d: i64) -> Scalar {
    Scalar::new(n.into(), d.into())
}

fn algebra(q: Vec<Scalar>) -> Algebra {
    Algebra::new(AlgebraSpec::new(q)).unwrap()
}

/// `q = (2, 1, …, 1)` on `m` vertices.
fn standard(m: usize) -> Algebra {
    algebra((0..m).map(|i| rat(if i == 0 { 2 } else { 1 }, 1)).collect())
}

fn ints(q: &[i64]) -> Algebra {
    Algebra::from_integers(q).unwrap()
}

fn hh_dims(alg: &Algebra, max: usize) -> Vec<usize> {
    let hom = HomComplex::new(alg);
    (0..=max)
        .map(|n| {
            let (k, i) = hom.raw_kernel_image_dims(n);
            k - i
        })
        .collect()
}

// Closed forms, written out independently of the library.

fn expected_hom(m: usize, n: usize) -> usize {
    if m <= 2 {
        4 * (n + 1)
    } else if n % m == m - 1 {
        (4 * (n / m) + 4) * m
    } else {
        (4 * (n / m) + 2) * m
    }
}

/// `(dim ker d^n, dim im d^n)` for `m ≥ 3`.
fn expected_ker_im(m: usize, n: usize) -> (usize, usize) {
    let p = n / m;
    let ker = if n <= 1 { m + 1 } else { (2 * p + 1) * m };
    let im = match n {
        0 | 1 => m - 1,
        _ if n % m == m - 1 => (2 * p + 3) * m,
        _ => (2 * p + 1) * m,
    };
    (ker, im)
}

/// `(dim ker d^n, dim im d^n)` for `m = 2`.
fn expected_ker_im_two(n: usize) -> (usize, usize) {
    let p = n / 2;
    match n {
        0 => (3, 1),
        1 => (3, 5),
        _ if n % 2 == 1 => (2 * (2 * p + 1), 2 * (2 * p + 3)),
        _ => (2 * (2 * p + 1), 2 * (2 * p + 1)),
    }
}

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn headline_dimensions() -> Outcome {
    let start = Instant::now();
    for m in 1..=6 {
        let dims = hh_dims(&standard(m), 8);
        let mut expected = vec![m + 1, 2, 1];
        expected.resize(9, 0);
        if dims != expected {
            return outcome(false, format!("m={m}: HH = {dims:?}, expected {expected:?}"));
        }
        if dims.iter().sum::<usize>() != m + 4 {
            return outcome(false, format!("m={m}: total {}", dims.iter().sum::<usize>()));
        }
    }
    let secs = start.elapsed().as_secs_f64();
    outcome(secs < 60.0, format!("m = 1..6, n = 0..8, totals m+4, {secs:.2}s"))
}

fn hom_dimensions() -> Outcome {
    for m in 1..=6 {
        let hom = HomComplex::new(&standard(m));
        for n in 0..=2 * m + 6 {
            if hom.hom_dimension(n) != expected_hom(m, n) {
                return outcome(false, format!("m={m} n={n}: {} vs {}", hom.hom_dimension(n), expected_hom(m, n)));
            }
        }
    }
    outcome(true, "m = 1..6, n <= 2m+6")
}

fn complex_property() -> Outcome {
    let primes = [2, 3, 5, 7, 11];
    for m in 1..=5 {
        let res = Resolution::new(&ints(&primes[..m]), 11);
        let maps = res.check_complex();
        let mats = res.check_complex_by_matrices();
        if !maps.passed() || !mats.passed() {
            return outcome(false, format!("m={m}: maps {:?}, matrices {:?}", maps.first_failure, mats.first_failure));
        }
    }
    outcome(true, "m <= 5, n <= 10, by composition and by matrices")
}

fn recursion_identity() -> Outcome {
    let vectors: [fn(usize) -> Scalar; 3] = [
        |i| rat([2, 3, 5, 7][i], 1),
        |i| rat([-1, 4, 1, 9][i], [3, 1, 2, 1][i]),
        |i| rat([5, -2, 7, 1][i], [1, 1, 4, 6][i]),
    ];
    for m in 1..=4 {
        for (k, v) in vectors.iter().enumerate() {
            let alg = algebra((0..m).map(v).collect());
            let tables = g_tables(&alg, 8);
            for n in 1..=8 {
                let c = check_recursions_in(&alg, &tables, n);
                if !c.passed() {
                    return outcome(false, format!("m={m} vector {k} n={n}: {:?}", c.first_failure));
                }
            }
        }
    }
    outcome(true, "m <= 4, n <= 8, three parameter vectors, literal equality in KQ")
}

fn exactness() -> Outcome {
    for m in 1..=4 {
        let report = Resolution::new(&standard(m), 5).verify_exactness();
        if !report.passed() || report.augmentation_rank != 4 * m {
            return outcome(false, format!("m={m}: {report:?}"));
        }
    }
    outcome(true, "m <= 4, N = 5")
}

fn kernel_image_tables() -> Outcome {
    for m in 3..=5 {
        let hom = HomComplex::new(&standard(m));
        for n in 0..=2 * m + 4 {
            let (ker, _) = hom.kernel_image_dims(n, RegimePolicy::Strict).unwrap();
            let (_, im_n) = hom.kernel_image_dims(n + 1, RegimePolicy::Strict).unwrap();
            if (ker, im_n) != expected_ker_im(m, n) {
                return outcome(false, format!("m={m} n={n}: {:?} vs {:?}", (ker, im_n), expected_ker_im(m, n)));
            }
        }
    }
    let hom = HomComplex::new(&ints(&[3, 1]));
    for n in 0..=9 {
        let (ker, _) = hom.kernel_image_dims(n, RegimePolicy::Strict).unwrap();
        let (_, im_n) = hom.kernel_image_dims(n + 1, RegimePolicy::Strict).unwrap();
        if (ker, im_n) != expected_ker_im_two(n) {
            return outcome(false, format!("m=2 n={n}: {:?} vs {:?}", (ker, im_n), expected_ker_im_two(n)));
        }
    }
    outcome(true, "m = 3..5 for n <= 2m+4; m = 2 for n <= 9")
}

fn ring_structure() -> Outcome {
    for m in 2..=5 {
        match ring_report(&standard(m), 2 * m + 2, RegimePolicy::Strict) {
            Ok(r) if r.total_dim == m + 4 => {}
            Ok(r) => return outcome(false, format!("m={m}: total {}", r.total_dim)),
            Err(e) => return outcome(false, format!("m={m}: {e}")),
        }
    }
    outcome(true, "m = 2..5, all relations hold")
}

fn oracle_equivalence() -> Outcome {
    let vectors: [&[&[i64]]; 3] = [&[&[2], &[-3], &[7]], &[&[3, 1], &[2, 5], &[-4, 1]], &[&[2, 1, 1], &[2, 3, 5], &[1, -1, 3]]];
    for qs in vectors {
        for q in qs {
            let alg = ints(q);
            let bar: Vec<usize> = (0..=3).map(|n| bar_cohomology_dimension(&alg, n).unwrap()).collect();
            let res = hh_dims(&alg, 3);
            if bar != res {
                return outcome(false, format!("q={q:?}: bar {bar:?} vs resolution {res:?}"));
            }
        }
    }
    let alg = ints(&[1, 1]);
    let bar: Vec<usize> = (0..=3).map(|n| bar_cohomology_dimension(&alg, n).unwrap()).collect();
    let res = hh_dims(&alg, 3);
    let pass = bar == res && bar[3] > 0;
    outcome(
        pass,
        format!("m <= 3, n <= 3, nine generic vectors; q = (1,1): both engines give HH = {bar:?}"),
    )
}

fn zeta_invariance() -> Outcome {
    let tables: Vec<_> = [
        vec![rat(2, 1), rat(1, 1), rat(1, 1)],
        vec![rat(1, 1), rat(2, 1), rat(1, 1)],
        vec![rat(1, 2), rat(4, 1), rat(1, 1)],
    ]
    .into_iter()
    .map(|q| HomComplex::new(&algebra(q)).degree_table(12))
    .collect();
    outcome(tables[0] == tables[1] && tables[0] == tables[2], "m = 3, three vectors with ζ = 2, n <= 12")
}

fn fault_injection() -> Outcome {
    let mut res = Resolution::new(&standard(3), 4);
    let g = generators(3, 2)[1];
    let term = &mut res.differential_mut(2).terms_mut(&g)[0];
    term.left = term.left.scale(&rat(-1, 1));
    let flipped = res.check_complex();
    if flipped.passed() {
        return outcome(false, "sign flip in ∂^2 went unnoticed");
    }
    let run = |extra: &[&str]| {
        Command::new(env!("CARGO_BIN_EXE_qkoszul"))
            .args(["compute", "--m", "3", "--q", "2,1,1", "--max-degree", "6"])
            .args(extra)
            .output()
            .expect("binary runs")
            .status
            .code()
    };
    let (clean, corrupted) = (run(&[]), run(&["--expect-hh", "3=1"]));
    let code = |c: Option<i32>| c.map_or("none".to_string(), |c| c.to_string());
    outcome(
        clean == Some(0) && corrupted == Some(1),
        format!(
            "sign flip caught at ∂^{} ∘ ∂^{}; compute exits {} as is, {} with a wrong expected dimension",
            flipped.first_failure.unwrap(),
            flipped.first_failure.unwrap() + 1,
            code(clean),
            code(corrupted)
        ),
    )
}

fn main() -> ExitCode {
    type Check = (&'static str, fn() -> Outcome);
    let checks: [Check; 10] = [
        ("headline dimensions", headline_dimensions),
        ("hom dimensions", hom_dimensions),
        ("complex property", complex_property),
        ("recursion identity", recursion_identity),
        ("exactness", exactness),
        ("kernel and image tables", kernel_image_tables),
        ("ring structure", ring_structure),
        ("oracle equivalence", oracle_equivalence),
        ("zeta invariance", zeta_invariance),
        ("fault injection", fault_injection),
    ];
    let mut failed = 0;
    for (k, (name, check)) in checks.iter().enumerate() {
        let start = Instant::now();
        let result = panic::catch_unwind(AssertUnwindSafe(check)).unwrap_or_else(|_| outcome(false, "panicked"));
        let status = if result.pass { "PASS" } else { "FAIL" };
        println!(
            "{status} {:>2} {name}: {} [{:.2}s]",
            k + 1,
            result.detail,
            start.elapsed().as_secs_f64()
        );
        failed += usize::from(!result.pass);
    }
    println!("acceptance: {} passed, {failed} failed", checks.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
