//! Closed-form dimension formulas for the generic regime (`ζ` not a root of
//! unity). These are reference values; every computation in the crate
//! derives its dimensions from exact ranks and compares against these.

/// `dim Hom(P^n, Λ_q)`. For `m ≥ 3` write `n = pm + t`; the answer is
/// `(4p+2)m` unless `t = m-1`, where it is `(4p+4)m`. For `m ≤ 2` it is
/// `4(n+1)`.
pub fn hom_dimension(m: usize, n: usize) -> usize {
    if m <= 2 {
        return 4 * (n + 1);
    }
    let (p, t) = (n / m, n % m);
    if t == m - 1 {
        (4 * p + 4) * m
    } else {
        (4 * p + 2) * m
    }
}

/// `dim ker d^n`, known for `m ≥ 2`.
pub fn kernel_dimension(m: usize, n: usize) -> Option<usize> {
    match m {
        0 | 1 => None,
        2 => Some(if n <= 1 { 3 } else { 2 * (2 * (n / 2) + 1) }),
        _ => Some(if n <= 1 { m + 1 } else { (2 * (n / m) + 1) * m }),
    }
}

/// `dim im d^{n-1}` (zero at `n = 0`), known for `m ≥ 2`.
pub fn image_dimension(m: usize, n: usize) -> Option<usize> {
    match m {
        0 | 1 => None,
        2 => Some(match n {
            0 => 0,
            1 => 1,
            2 => 5,
            _ => {
                let k = n - 1;
                let p = k / 2;
                if k % 2 == 1 {
                    2 * (2 * p + 3)
                } else {
                    2 * (2 * p + 1)
                }
            }
        }),
        _ => Some(match n {
            0 => 0,
            1 | 2 => m - 1,
            _ => (2 * (n / m) + 1) * m,
        }),
    }
}

/// `dim HH^n(Λ_q)`: `m+1, 2, 1, 0, 0, …`.
pub fn cohomology_dimension(m: usize, n: usize) -> usize {
    match n {
        0 => m + 1,
        1 => 2,
        2 => 1,
        _ => 0,
    }
}

/// `dim HH^*(Λ_q) = m + 4`.
pub fn total_dimension(m: usize) -> usize {
    m + 4
}
