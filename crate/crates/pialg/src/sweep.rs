//! Exhaustive brute-force verification of the Smith normal form over boxes
//! of small integer matrices: every decomposition is checked against
//! determinantal-divisor and quotient-enumeration oracles that share no code
//! with the reduction. Data-parallel with the `parallel` feature.
//!
//! The oracle side works on fixed-size stack buffers; the per-matrix cost
//! is dominated by the reduction itself.

use crate::snf::{reduce, Grid, SnfOutput};

/// Largest dimension the allocation-free oracle buffers support.
pub const MAX_SWEEP_DIM: usize = 4;

#[derive(Clone, Copy, Debug)]
pub struct SweepConfig {
    /// Check all shapes `r x c` with `1 <= r, c <= max_dim`.
    pub max_dim: usize,
    /// Entries range over `[-max_entry, max_entry]`.
    pub max_entry: i64,
}

#[derive(Clone, Debug)]
pub struct SweepFailure {
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<i64>,
    pub detail: String,
}

#[derive(Clone, Debug, Default)]
pub struct SweepReport {
    pub checked: u64,
    pub failures: Vec<SweepFailure>,
}

const FAILURE_CAP: usize = 16;

impl SweepReport {
    pub fn all_passed(&self) -> bool {
        self.failures.is_empty()
    }

    fn merge(mut self, mut other: SweepReport) -> SweepReport {
        self.checked += other.checked;
        self.failures.append(&mut other.failures);
        self.failures.truncate(FAILURE_CAP);
        self
    }
}

/// Run the sweep with the best available execution: the rayon pool when the
/// feature is enabled and more than one worker exists, sequentially
/// otherwise (a single-threaded pool would only pay scheduling overhead).
pub fn verify_smith_exhaustive(config: SweepConfig) -> SweepReport {
    #[cfg(feature = "parallel")]
    {
        if rayon::current_num_threads() > 1 {
            return verify_smith_exhaustive_parallel(config);
        }
    }
    verify_smith_exhaustive_sequential(config)
}

pub fn verify_smith_exhaustive_sequential(config: SweepConfig) -> SweepReport {
    assert!(config.max_dim <= MAX_SWEEP_DIM);
    let mut report = SweepReport::default();
    for (rows, cols, count) in shapes(&config) {
        let base = 2 * config.max_entry + 1;
        let mut block = SweepReport::default();
        for index in 0..count {
            check_one(rows, cols, index, base, config.max_entry, &mut block);
        }
        report = report.merge(block);
    }
    report
}

#[cfg(feature = "parallel")]
pub fn verify_smith_exhaustive_parallel(config: SweepConfig) -> SweepReport {
    use rayon::prelude::*;
    assert!(config.max_dim <= MAX_SWEEP_DIM);
    let mut report = SweepReport::default();
    for (rows, cols, count) in shapes(&config) {
        let base = 2 * config.max_entry + 1;
        let chunk: u64 = 1 << 16;
        let starts: Vec<u64> = (0..count).step_by(chunk as usize).collect();
        let block = starts
            .par_iter()
            .map(|&start| {
                let mut local = SweepReport::default();
                for index in start..(start + chunk).min(count) {
                    check_one(rows, cols, index, base, config.max_entry, &mut local);
                }
                local
            })
            .reduce(SweepReport::default, SweepReport::merge);
        report = report.merge(block);
    }
    // deterministic failure listing regardless of scheduling
    report
        .failures
        .sort_by(|a, b| (a.rows, a.cols, &a.entries).cmp(&(b.rows, b.cols, &b.entries)));
    report
}

fn shapes(config: &SweepConfig) -> Vec<(usize, usize, u64)> {
    let base = (2 * config.max_entry + 1) as u64;
    let mut out = Vec::new();
    for rows in 1..=config.max_dim {
        for cols in 1..=config.max_dim {
            out.push((rows, cols, base.pow((rows * cols) as u32)));
        }
    }
    out
}

fn check_one(
    rows: usize,
    cols: usize,
    index: u64,
    base: i64,
    max_entry: i64,
    report: &mut SweepReport,
) {
    let mut entries = [0i64; MAX_SWEEP_DIM * MAX_SWEEP_DIM];
    let mut rem = index;
    for e in entries.iter_mut().take(rows * cols) {
        *e = (rem % base as u64) as i64 - max_entry;
        rem /= base as u64;
    }
    report.checked += 1;
    if let Err(detail) = check_matrix(rows, cols, &entries[..rows * cols]) {
        if report.failures.len() < FAILURE_CAP {
            report.failures.push(SweepFailure {
                rows,
                cols,
                entries: entries[..rows * cols].to_vec(),
                detail,
            });
        }
    }
}

type Buf = [i128; MAX_SWEEP_DIM * MAX_SWEEP_DIM];

fn check_matrix(rows: usize, cols: usize, entries: &[i64]) -> Result<(), String> {
    let grid = Grid::from_data(rows, cols, entries.to_vec());
    let out: SnfOutput<i64> =
        reduce(grid, false).ok_or_else(|| "i64 reduction overflowed".to_string())?;

    // U A V = D, exactly, and D diagonal.
    let mut ua: Buf = [0; MAX_SWEEP_DIM * MAX_SWEEP_DIM];
    for i in 0..rows {
        for k in 0..rows {
            let x = *out.u.entry(i, k) as i128;
            if x == 0 {
                continue;
            }
            for j in 0..cols {
                ua[i * cols + j] += x * entries[k * cols + j] as i128;
            }
        }
    }
    for i in 0..rows {
        for j in 0..cols {
            let mut acc = 0i128;
            for k in 0..cols {
                acc += ua[i * cols + k] * *out.v.entry(k, j) as i128;
            }
            let d = *out.work.entry(i, j) as i128;
            if acc != d {
                return Err("U*A*V != D".into());
            }
            if i != j && d != 0 {
                return Err("D is not diagonal".into());
            }
        }
    }

    // unimodular transforms
    let mut buf: Buf = [0; MAX_SWEEP_DIM * MAX_SWEEP_DIM];
    for i in 0..rows {
        for j in 0..rows {
            buf[i * rows + j] = *out.u.entry(i, j) as i128;
        }
    }
    if det_fixed(&buf, rows).abs() != 1 {
        return Err("U is not unimodular".into());
    }
    for i in 0..cols {
        for j in 0..cols {
            buf[i * cols + j] = *out.v.entry(i, j) as i128;
        }
    }
    if det_fixed(&buf, cols).abs() != 1 {
        return Err("V is not unimodular".into());
    }

    // nonnegative divisibility chain
    let n = rows.min(cols);
    let mut diag = [0i64; MAX_SWEEP_DIM];
    for (i, d) in diag.iter_mut().enumerate().take(n) {
        *d = *out.work.entry(i, i);
    }
    let mut seen_zero = false;
    for i in 0..n {
        let d = diag[i];
        if d < 0 {
            return Err("negative invariant factor".into());
        }
        if d == 0 {
            seen_zero = true;
        } else {
            if seen_zero {
                return Err("zero before nonzero on the diagonal".into());
            }
            if i > 0 && diag[i - 1] != 0 && d % diag[i - 1] != 0 {
                return Err("no divisibility chain".into());
            }
        }
    }
    let rank = (0..n).take_while(|&i| diag[i] != 0).count();

    // determinantal-divisor oracle: d1*...*dk = gcd of all k x k minors,
    // and the rank is the largest k with a nonzero minor
    let mut product: i128 = 1;
    for k in 1..=n {
        let expected = if k <= rank {
            product *= diag[k - 1] as i128;
            product
        } else {
            0
        };
        let g = minor_gcd_fixed(entries, rows, cols, k, expected);
        if g != expected {
            return Err(format!("determinantal divisor mismatch at k={k}: {g} vs {expected}"));
        }
    }

    // quotient-enumeration oracle on the cokernel of the column span
    let mut pivots = [0i64; MAX_SWEEP_DIM];
    let npiv = column_hnf_pivots(entries, rows, cols, &mut pivots);
    if npiv < rows {
        if rank == rows {
            return Err("SNF claims full rank but the quotient is infinite".into());
        }
    } else {
        if rank < rows {
            return Err("SNF claims a free summand but the quotient is finite".into());
        }
        let claimed: i128 = diag[..rank].iter().map(|&d| d as i128).product();
        // count the canonical box cell by cell
        let mut cells: i128 = 0;
        let mut odometer = [0i64; MAX_SWEEP_DIM];
        loop {
            cells += 1;
            let mut i = 0;
            loop {
                if i == rows {
                    break;
                }
                odometer[i] += 1;
                if odometer[i] < pivots[i] {
                    break;
                }
                odometer[i] = 0;
                i += 1;
            }
            if i == rows {
                break;
            }
        }
        if cells != claimed {
            return Err(format!("cokernel order {claimed} != enumerated {cells}"));
        }
    }
    Ok(())
}

/// Determinant of an `n x n` slice (row stride = n), cofactor expansion on
/// fixed buffers.
fn det_fixed(m: &Buf, n: usize) -> i128 {
    match n {
        0 => 1,
        1 => m[0],
        2 => m[0] * m[n + 1] - m[1] * m[n],
        _ => {
            let mut acc = 0i128;
            let mut minor: Buf = [0; MAX_SWEEP_DIM * MAX_SWEEP_DIM];
            for j in 0..n {
                if m[j] == 0 {
                    continue;
                }
                for r in 1..n {
                    let mut cc = 0;
                    for c in 0..n {
                        if c == j {
                            continue;
                        }
                        minor[(r - 1) * (n - 1) + cc] = m[r * n + c];
                        cc += 1;
                    }
                }
                let term = m[j] * det_fixed(&minor, n - 1);
                if j % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            acc
        }
    }
}

/// gcd of all `k x k` minors; the scan stops early once the running gcd
/// hits `expected` exactly when `expected` is 1 (a gcd can only shrink).
fn minor_gcd_fixed(entries: &[i64], rows: usize, cols: usize, k: usize, expected: i128) -> i128 {
    let mut g: i128 = 0;
    let mut rs = [0usize; MAX_SWEEP_DIM];
    let mut cs = [0usize; MAX_SWEEP_DIM];
    for i in 0..k {
        rs[i] = i;
    }
    'rows: loop {
        for i in 0..k {
            cs[i] = i;
        }
        'cols: loop {
            let mut sub: Buf = [0; MAX_SWEEP_DIM * MAX_SWEEP_DIM];
            for (i, &r) in rs.iter().enumerate().take(k) {
                for (j, &c) in cs.iter().enumerate().take(k) {
                    sub[i * k + j] = entries[r * cols + c] as i128;
                }
            }
            g = gcd_i128(g, det_fixed(&sub, k));
            if g == 1 && expected == 1 {
                return 1;
            }
            // next column combination
            let mut i = k;
            loop {
                if i == 0 {
                    break 'cols;
                }
                i -= 1;
                if cs[i] + (k - i) <= cols - 1 {
                    cs[i] += 1;
                    for j in i + 1..k {
                        cs[j] = cs[j - 1] + 1;
                    }
                    continue 'cols;
                }
            }
        }
        // next row combination
        let mut i = k;
        loop {
            if i == 0 {
                break 'rows;
            }
            i -= 1;
            if rs[i] + (k - i) <= rows - 1 {
                rs[i] += 1;
                for j in i + 1..k {
                    rs[j] = rs[j - 1] + 1;
                }
                continue 'rows;
            }
        }
    }
    g
}

fn gcd_i128(a: i128, b: i128) -> i128 {
    let (mut a, mut b) = (a.abs(), b.abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// Pivots of the column Hermite form of the column span inside `Z^rows`,
/// by plain integer column elimination (independent of the SNF driver).
/// Fills `pivots` in row order and returns how many rows have one; a full
/// count means the quotient is finite with order the product of the pivots.
fn column_hnf_pivots(
    entries: &[i64],
    rows: usize,
    cols: usize,
    pivots: &mut [i64; MAX_SWEEP_DIM],
) -> usize {
    let mut work = [0i64; MAX_SWEEP_DIM * MAX_SWEEP_DIM];
    let mut live = [false; MAX_SWEEP_DIM];
    for j in 0..cols {
        for i in 0..rows {
            work[j * rows + i] = entries[i * cols + j];
        }
        live[j] = (0..rows).any(|i| work[j * rows + i] != 0);
    }
    let mut npiv = 0;
    for row in 0..rows {
        loop {
            // columns still alive with a nonzero entry at this row
            let mut first: Option<usize> = None;
            let mut second: Option<usize> = None;
            for j in 0..cols {
                if !live[j] || work[j * rows + row] == 0 {
                    continue;
                }
                match first {
                    None => first = Some(j),
                    Some(f) => {
                        if work[j * rows + row].unsigned_abs()
                            < work[f * rows + row].unsigned_abs()
                        {
                            second = Some(f);
                            first = Some(j);
                        } else if second.is_none()
                            || work[j * rows + row].unsigned_abs()
                                < work[second.unwrap() * rows + row].unsigned_abs()
                        {
                            second = Some(j);
                        }
                    }
                }
            }
            match (first, second) {
                (None, _) => break,
                (Some(a), None) => {
                    let p = work[a * rows + row];
                    pivots[row] = p.abs();
                    if p < 0 {
                        for i in 0..rows {
                            work[a * rows + i] = -work[a * rows + i];
                        }
                    }
                    live[a] = false;
                    npiv += 1;
                    break;
                }
                (Some(a), Some(b)) => {
                    let q = work[b * rows + row].div_euclid(work[a * rows + row]);
                    for i in 0..rows {
                        work[b * rows + i] -= q * work[a * rows + i];
                    }
                    if (0..rows).all(|i| work[b * rows + i] == 0) {
                        live[b] = false;
                    }
                }
            }
        }
        if npiv != row + 1 {
            return npiv; // a free direction survives
        }
    }
    npiv
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_by_two_box_passes() {
        let report =
            verify_smith_exhaustive_sequential(SweepConfig { max_dim: 2, max_entry: 2 });
        assert!(report.all_passed(), "{:?}", report.failures);
        assert_eq!(report.checked, 5 + 25 + 25 + 625);
    }

    #[cfg(feature = "parallel")]
    #[test]
    fn parallel_and_sequential_agree() {
        let config = SweepConfig { max_dim: 2, max_entry: 2 };
        let a = verify_smith_exhaustive_sequential(config);
        let b = verify_smith_exhaustive_parallel(config);
        assert_eq!(a.checked, b.checked);
        assert!(a.all_passed() && b.all_passed());
    }

    #[test]
    fn three_by_three_spot_checks() {
        assert!(check_matrix(2, 2, &[2, 0, 0, 3]).is_ok());
        assert!(check_matrix(3, 3, &[2, 4, 4, -6, 6, 12, 10, 4, 16]).is_ok());
        assert!(check_matrix(3, 2, &[1, 2, 3, 4, 5, 6]).is_ok());
    }

    #[test]
    fn oracle_pieces() {
        assert_eq!(minor_gcd_fixed(&[2, 0, 0, 3], 2, 2, 1, 1), 1);
        assert_eq!(minor_gcd_fixed(&[2, 0, 0, 3], 2, 2, 2, 6), 6);
        assert_eq!(minor_gcd_fixed(&[2, 4, 6, 8], 2, 2, 1, 2), 2);
        let mut pivots = [0i64; MAX_SWEEP_DIM];
        assert_eq!(column_hnf_pivots(&[2, 0, 0, 3], 2, 2, &mut pivots), 2);
        assert_eq!(&pivots[..2], &[2, 3]);
        assert_eq!(column_hnf_pivots(&[1, 2, 2, 4], 2, 2, &mut pivots), 1);
    }
}
