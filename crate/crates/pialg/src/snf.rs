//! Smith normal form over the integers with unimodular transforms,
//! plus the lattice solvers built on it.
//!
//! The reduction driver is generic over the scalar so the same algorithm
//! runs on `i64` (bailing out on overflow) and on `Int`. `smith_normal_form`
//! tries the machine-word instantiation first and widens only when needed,
//! so the two paths can never disagree.

use std::cmp::Ordering;

use crate::int::Int;
use crate::matrix::IntMatrix;

/// `U * A * V = D` with `U`, `V` unimodular and `D` diagonal with
/// `d1 | d2 | ... | dr`, all `di >= 0`.
#[derive(Clone, Debug)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub d: IntMatrix,
    pub v: IntMatrix,
}

impl SmithDecomposition {
    pub fn rank(&self) -> usize {
        let n = self.d.rows().min(self.d.cols());
        (0..n).take_while(|&i| !self.d[(i, i)].is_zero()).count()
    }

    /// Nonzero diagonal entries, in divisibility order (including 1s).
    pub fn diagonal_factors(&self) -> Vec<Int> {
        let n = self.d.rows().min(self.d.cols());
        (0..n)
            .map(|i| self.d[(i, i)].clone())
            .take_while(|d| !d.is_zero())
            .collect()
    }
}

/// Smith decomposition together with the inverse of the row transform,
/// which is what canonical-basis bookkeeping needs.
#[derive(Clone, Debug)]
pub(crate) struct SmithFull {
    pub snf: SmithDecomposition,
    pub u_inv: IntMatrix,
}

pub fn smith_normal_form(a: &IntMatrix) -> SmithDecomposition {
    run(a, false).snf
}

pub(crate) fn smith_with_inverses(a: &IntMatrix) -> SmithFull {
    run(a, true)
}

fn run(a: &IntMatrix, want_inverses: bool) -> SmithFull {
    if let Some(grid) = Grid::<i64>::try_from_matrix(a) {
        if let Some(out) = reduce(grid, want_inverses) {
            return out.into_full();
        }
    }
    let grid = Grid::<Int>::from_matrix(a);
    reduce(grid, want_inverses).expect("Int reduction is total").into_full()
}

/// Scalar requirements of the reduction; checked ops signal overflow with
/// `None` so the `i64` instantiation can defer to big integers.
pub(crate) trait Scalar: Clone + Eq + Sized {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn is_negative(&self) -> bool;
    fn abs_cmp(&self, other: &Self) -> Ordering;
    fn checked_neg(&self) -> Option<Self>;
    fn checked_add(&self, other: &Self) -> Option<Self>;
    fn checked_sub(&self, other: &Self) -> Option<Self>;
    fn checked_mul(&self, other: &Self) -> Option<Self>;
    /// Euclidean quotient and remainder for `rhs > 0`: `0 <= r < rhs`.
    fn div_rem_euclid(&self, rhs: &Self) -> Option<(Self, Self)>;
    fn divides(&self, other: &Self) -> bool;
    fn to_int(&self) -> Int;
}

impl Scalar for i64 {
    fn zero() -> i64 {
        0
    }
    fn one() -> i64 {
        1
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn is_negative(&self) -> bool {
        *self < 0
    }
    fn abs_cmp(&self, other: &i64) -> Ordering {
        self.unsigned_abs().cmp(&other.unsigned_abs())
    }
    fn checked_neg(&self) -> Option<i64> {
        i64::checked_neg(*self)
    }
    fn checked_add(&self, other: &i64) -> Option<i64> {
        i64::checked_add(*self, *other)
    }
    fn checked_sub(&self, other: &i64) -> Option<i64> {
        i64::checked_sub(*self, *other)
    }
    fn checked_mul(&self, other: &i64) -> Option<i64> {
        i64::checked_mul(*self, *other)
    }
    fn div_rem_euclid(&self, rhs: &i64) -> Option<(i64, i64)> {
        debug_assert!(*rhs > 0);
        Some((self.checked_div_euclid(*rhs)?, self.rem_euclid(*rhs)))
    }
    fn divides(&self, other: &i64) -> bool {
        *self != 0 && other % self == 0
    }
    fn to_int(&self) -> Int {
        Int::from(*self)
    }
}

impl Scalar for Int {
    fn zero() -> Int {
        Int::ZERO
    }
    fn one() -> Int {
        Int::ONE
    }
    fn is_zero(&self) -> bool {
        Int::is_zero(self)
    }
    fn is_negative(&self) -> bool {
        Int::is_negative(self)
    }
    fn abs_cmp(&self, other: &Int) -> Ordering {
        self.abs().cmp(&other.abs())
    }
    fn checked_neg(&self) -> Option<Int> {
        Some(-self)
    }
    fn checked_add(&self, other: &Int) -> Option<Int> {
        Some(self + other)
    }
    fn checked_sub(&self, other: &Int) -> Option<Int> {
        Some(self - other)
    }
    fn checked_mul(&self, other: &Int) -> Option<Int> {
        Some(self * other)
    }
    fn div_rem_euclid(&self, rhs: &Int) -> Option<(Int, Int)> {
        let r = self.rem_euclid(rhs);
        let q = (self - &r).div_exact(rhs);
        Some((q, r))
    }
    fn divides(&self, other: &Int) -> bool {
        !self.is_zero() && Int::divides(self, other)
    }
    fn to_int(&self) -> Int {
        self.clone()
    }
}

#[derive(Clone)]
pub(crate) struct Grid<T> {
    pub(crate) rows: usize,
    pub(crate) cols: usize,
    pub(crate) data: Vec<T>,
}

impl<T: Scalar> Grid<T> {
    fn identity(n: usize) -> Grid<T> {
        let mut data = vec![T::zero(); n * n];
        for i in 0..n {
            data[i * n + i] = T::one();
        }
        Grid { rows: n, cols: n, data }
    }

    #[inline]
    fn at(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    #[inline]
    fn set(&mut self, i: usize, j: usize, v: T) {
        self.data[i * self.cols + j] = v;
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        for i in 0..self.rows {
            self.data.swap(i * self.cols + a, i * self.cols + b);
        }
    }

    fn negate_row(&mut self, a: usize) -> Option<()> {
        for j in 0..self.cols {
            let v = self.at(a, j).checked_neg()?;
            self.set(a, j, v);
        }
        Some(())
    }

    fn negate_col(&mut self, a: usize) -> Option<()> {
        for i in 0..self.rows {
            let v = self.at(i, a).checked_neg()?;
            self.set(i, a, v);
        }
        Some(())
    }

    /// row(a) -= q * row(b)
    fn sub_row_multiple(&mut self, a: usize, b: usize, q: &T) -> Option<()> {
        for j in 0..self.cols {
            let v = self.at(a, j).checked_sub(&q.checked_mul(self.at(b, j))?)?;
            self.set(a, j, v);
        }
        Some(())
    }

    /// col(a) -= q * col(b)
    fn sub_col_multiple(&mut self, a: usize, b: usize, q: &T) -> Option<()> {
        for i in 0..self.rows {
            let v = self.at(i, a).checked_sub(&q.checked_mul(self.at(i, b))?)?;
            self.set(i, a, v);
        }
        Some(())
    }

    /// row(a) += row(b)
    fn add_row(&mut self, a: usize, b: usize) -> Option<()> {
        for j in 0..self.cols {
            let v = self.at(a, j).checked_add(self.at(b, j))?;
            self.set(a, j, v);
        }
        Some(())
    }

    /// col(a) += q * col(b)
    fn add_col_multiple(&mut self, a: usize, b: usize, q: &T) -> Option<()> {
        for i in 0..self.rows {
            let v = self.at(i, a).checked_add(&q.checked_mul(self.at(i, b))?)?;
            self.set(i, a, v);
        }
        Some(())
    }

    /// row(a) += q * row(b)
    fn add_row_multiple(&mut self, a: usize, b: usize, q: &T) -> Option<()> {
        for j in 0..self.cols {
            let v = self.at(a, j).checked_add(&q.checked_mul(self.at(b, j))?)?;
            self.set(a, j, v);
        }
        Some(())
    }

    fn to_matrix(&self) -> IntMatrix {
        IntMatrix::from_fn(self.rows, self.cols, |i, j| self.at(i, j).to_int())
    }
}

impl Grid<i64> {
    fn try_from_matrix(a: &IntMatrix) -> Option<Grid<i64>> {
        let data: Option<Vec<i64>> = a.entries().iter().map(Int::to_i64).collect();
        Some(Grid { rows: a.rows(), cols: a.cols(), data: data? })
    }
}

impl Grid<Int> {
    fn from_matrix(a: &IntMatrix) -> Grid<Int> {
        Grid { rows: a.rows(), cols: a.cols(), data: a.entries().to_vec() }
    }
}

pub(crate) struct SnfOutput<T> {
    pub(crate) work: Grid<T>,
    pub(crate) u: Grid<T>,
    pub(crate) v: Grid<T>,
    pub(crate) u_inv: Option<Grid<T>>,
    /// Tracked symmetrically with `u_inv`; production consumers only need
    /// the row-side inverse, tests check both.
    #[cfg_attr(not(test), allow(dead_code))]
    pub(crate) v_inv: Option<Grid<T>>,
}

impl<T: Scalar> Grid<T> {
    pub(crate) fn from_data(rows: usize, cols: usize, data: Vec<T>) -> Grid<T> {
        assert_eq!(data.len(), rows * cols);
        Grid { rows, cols, data }
    }

    pub(crate) fn entry(&self, i: usize, j: usize) -> &T {
        self.at(i, j)
    }
}

impl<T: Scalar> SnfOutput<T> {
    fn into_full(self) -> SmithFull {
        SmithFull {
            snf: SmithDecomposition {
                u: self.u.to_matrix(),
                d: self.work.to_matrix(),
                v: self.v.to_matrix(),
            },
            u_inv: self
                .u_inv
                .map(|g| g.to_matrix())
                .unwrap_or_else(|| IntMatrix::zeros(0, 0)),
        }
    }
}

/// The reduction proper. Pivot rule: smallest nonzero absolute value in the
/// remaining submatrix, ties broken by row index then column index.
pub(crate) fn reduce<T: Scalar>(a: Grid<T>, want_inverses: bool) -> Option<SnfOutput<T>> {
    let (rows, cols) = (a.rows, a.cols);
    let mut s = State {
        u: Grid::identity(rows),
        v: Grid::identity(cols),
        u_inv: want_inverses.then(|| Grid::identity(rows)),
        v_inv: want_inverses.then(|| Grid::identity(cols)),
        work: a,
    };
    let n = rows.min(cols);
    let mut t = 0;
    while t < n {
        let Some((pi, pj)) = s.select_pivot(t) else { break };
        s.swap_rows(t, pi)?;
        s.swap_cols(t, pj)?;
        if s.work.at(t, t).is_negative() {
            s.negate_row(t)?;
        }
        loop {
            s.clear_around_pivot(t)?;
            // The pivot must divide everything that comes after it, or the
            // invariant-factor chain breaks. Fold an offending row in and
            // keep reducing; the pivot shrinks each time, so this ends.
            match s.find_nondivisible(t) {
                Some(i) => s.add_row(t, i)?,
                None => break,
            }
        }
        t += 1;
    }
    Some(SnfOutput { work: s.work, u: s.u, v: s.v, u_inv: s.u_inv, v_inv: s.v_inv })
}

struct State<T> {
    work: Grid<T>,
    u: Grid<T>,
    v: Grid<T>,
    u_inv: Option<Grid<T>>,
    v_inv: Option<Grid<T>>,
}

impl<T: Scalar> State<T> {
    fn select_pivot(&self, t: usize) -> Option<(usize, usize)> {
        let mut best: Option<(usize, usize)> = None;
        for i in t..self.work.rows {
            for j in t..self.work.cols {
                let e = self.work.at(i, j);
                if e.is_zero() {
                    continue;
                }
                match best {
                    None => best = Some((i, j)),
                    Some((bi, bj)) => {
                        if e.abs_cmp(self.work.at(bi, bj)) == Ordering::Less {
                            best = Some((i, j));
                        }
                    }
                }
            }
        }
        best
    }

    fn swap_rows(&mut self, a: usize, b: usize) -> Option<()> {
        if a == b {
            return Some(());
        }
        self.work.swap_rows(a, b);
        self.u.swap_rows(a, b);
        if let Some(ui) = &mut self.u_inv {
            ui.swap_cols(a, b);
        }
        Some(())
    }

    fn swap_cols(&mut self, a: usize, b: usize) -> Option<()> {
        if a == b {
            return Some(());
        }
        self.work.swap_cols(a, b);
        self.v.swap_cols(a, b);
        if let Some(vi) = &mut self.v_inv {
            vi.swap_rows(a, b);
        }
        Some(())
    }

    fn negate_row(&mut self, a: usize) -> Option<()> {
        self.work.negate_row(a)?;
        self.u.negate_row(a)?;
        if let Some(ui) = &mut self.u_inv {
            ui.negate_col(a)?;
        }
        Some(())
    }

    /// row(a) -= q * row(b)
    fn sub_row_multiple(&mut self, a: usize, b: usize, q: &T) -> Option<()> {
        self.work.sub_row_multiple(a, b, q)?;
        self.u.sub_row_multiple(a, b, q)?;
        if let Some(ui) = &mut self.u_inv {
            ui.add_col_multiple(b, a, q)?;
        }
        Some(())
    }

    /// col(a) -= q * col(b)
    fn sub_col_multiple(&mut self, a: usize, b: usize, q: &T) -> Option<()> {
        self.work.sub_col_multiple(a, b, q)?;
        self.v.sub_col_multiple(a, b, q)?;
        if let Some(vi) = &mut self.v_inv {
            vi.add_row_multiple(b, a, q)?;
        }
        Some(())
    }

    /// row(a) += row(b)
    fn add_row(&mut self, a: usize, b: usize) -> Option<()> {
        self.work.add_row(a, b)?;
        self.u.add_row(a, b)?;
        if let Some(ui) = &mut self.u_inv {
            let one = T::one();
            ui.sub_col_multiple(b, a, &one)?;
        }
        Some(())
    }

    /// Zero out column `t` and row `t` away from the pivot, keeping the
    /// pivot positive. Standard gcd descent: a nonzero euclidean remainder
    /// becomes the new, strictly smaller pivot.
    fn clear_around_pivot(&mut self, t: usize) -> Option<()> {
        'restart: loop {
            debug_assert!(!self.work.at(t, t).is_zero());
            for i in (t + 1)..self.work.rows {
                if self.work.at(i, t).is_zero() {
                    continue;
                }
                let p = self.work.at(t, t).clone();
                let (q, r) = self.work.at(i, t).div_rem_euclid(&p)?;
                self.sub_row_multiple(i, t, &q)?;
                if !r.is_zero() {
                    self.swap_rows(t, i)?;
                    continue 'restart;
                }
            }
            for j in (t + 1)..self.work.cols {
                if self.work.at(t, j).is_zero() {
                    continue;
                }
                let p = self.work.at(t, t).clone();
                let (q, r) = self.work.at(t, j).div_rem_euclid(&p)?;
                self.sub_col_multiple(j, t, &q)?;
                if !r.is_zero() {
                    self.swap_cols(t, j)?;
                    continue 'restart;
                }
            }
            return Some(());
        }
    }

    fn find_nondivisible(&self, t: usize) -> Option<usize> {
        let p = self.work.at(t, t);
        for i in (t + 1)..self.work.rows {
            for j in (t + 1)..self.work.cols {
                if !self.work.at(i, j).is_zero() && !p.divides(self.work.at(i, j)) {
                    return Some(i);
                }
            }
        }
        None
    }
}

/// One integer solution of `A x = b`, if any.
pub fn solve(a: &IntMatrix, b: &[Int]) -> Option<Vec<Int>> {
    assert_eq!(b.len(), a.rows());
    let s = smith_normal_form(a);
    let ub = s.u.mul_vec(b);
    let n = a.rows().min(a.cols());
    let mut y = vec![Int::ZERO; a.cols()];
    for (i, ubi) in ub.iter().enumerate() {
        let d = if i < n { s.d[(i, i)].clone() } else { Int::ZERO };
        if d.is_zero() {
            if !ubi.is_zero() {
                return None;
            }
        } else {
            if !d.divides(ubi) {
                return None;
            }
            y[i] = ubi.div_exact(&d);
        }
    }
    Some(s.v.mul_vec(&y))
}

/// Basis of the integer kernel `{x : A x = 0}`, as matrix columns.
pub fn kernel_basis(a: &IntMatrix) -> IntMatrix {
    let s = smith_normal_form(a);
    let r = s.rank();
    IntMatrix::from_fn(a.cols(), a.cols() - r, |i, j| s.v[(i, r + j)].clone())
}

/// Column-echelon basis of the lattice spanned by `gens` in `Z^dim`:
/// `(pivot_row, column)` pairs with strictly increasing pivot rows,
/// positive pivots, and zeros above each pivot.
pub fn triangular_basis(dim: usize, gens: &[Vec<Int>]) -> Vec<(usize, Vec<Int>)> {
    let mut cols: Vec<Vec<Int>> = gens
        .iter()
        .filter(|c| c.iter().any(|v| !v.is_zero()))
        .cloned()
        .collect();
    for c in &cols {
        assert_eq!(c.len(), dim);
    }
    let mut basis = Vec::new();
    for row in 0..dim {
        loop {
            let mut live: Vec<usize> = (0..cols.len()).filter(|&j| !cols[j][row].is_zero()).collect();
            if live.is_empty() {
                break;
            }
            if live.len() == 1 {
                let mut piv = cols.remove(live[0]);
                if piv[row].is_negative() {
                    for v in piv.iter_mut() {
                        *v = -&*v;
                    }
                }
                basis.push((row, piv));
                break;
            }
            live.sort_by(|&a, &b| cols[a][row].abs().cmp(&cols[b][row].abs()));
            let (a, b) = (live[0], live[1]);
            let r = cols[b][row].rem_euclid(&cols[a][row].abs());
            let q = (&cols[b][row] - &r).div_exact(&cols[a][row]);
            for i in 0..dim {
                let v = &cols[b][i] - &(&q * &cols[a][i]);
                cols[b][i] = v;
            }
        }
    }
    basis
}

/// Reduce `v` to the canonical representative modulo the lattice with the
/// given triangular basis.
pub fn reduce_by_basis(basis: &[(usize, Vec<Int>)], v: &mut [Int]) {
    for (row, col) in basis {
        let r = v[*row].rem_euclid(&col[*row]);
        let q = (&v[*row] - &r).div_exact(&col[*row]);
        if !q.is_zero() {
            for i in *row..v.len() {
                let w = &v[i] - &(&q * &col[i]);
                v[i] = w;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn check_decomposition(a: &IntMatrix, s: &SmithDecomposition) {
        assert_eq!(&(&s.u * a) * &s.v, s.d, "U*A*V != D for {a:?}");
        assert_eq!(s.u.det().abs(), Int::ONE, "U not unimodular");
        assert_eq!(s.v.det().abs(), Int::ONE, "V not unimodular");
        let n = s.d.rows().min(s.d.cols());
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                if i != j {
                    assert!(s.d[(i, j)].is_zero(), "D not diagonal");
                }
            }
        }
        let mut seen_zero = false;
        for i in 0..n {
            let di = &s.d[(i, i)];
            assert!(!di.is_negative(), "negative diagonal entry");
            if di.is_zero() {
                seen_zero = true;
            } else {
                assert!(!seen_zero, "zero before nonzero on diagonal");
                if i + 1 < n && !s.d[(i + 1, i + 1)].is_zero() {
                    assert!(di.divides(&s.d[(i + 1, i + 1)]), "no divisibility chain");
                }
            }
        }
    }

    #[test]
    fn two_by_two_coprime_diagonal() {
        // diag(2,3) has gcd 1 and determinant 6: by inspection of the four
        // 1x1 minors and the single 2x2 minor the invariant factors are 1, 6.
        let a = IntMatrix::from_i64(2, 2, &[2, 0, 0, 3]);
        let s = smith_normal_form(&a);
        check_decomposition(&a, &s);
        assert_eq!(s.diagonal_factors(), vec![Int::from(1), Int::from(6)]);
    }

    #[test]
    fn identity_and_zero() {
        for n in 0..4 {
            let id = IntMatrix::identity(n);
            let s = smith_normal_form(&id);
            check_decomposition(&id, &s);
            assert_eq!(s.d, id);

            let z = IntMatrix::zeros(n, n);
            let s = smith_normal_form(&z);
            check_decomposition(&z, &s);
            assert!(s.d.is_zero());
        }
    }

    #[test]
    fn inverse_transforms() {
        let a = IntMatrix::from_i64(3, 2, &[2, 4, -3, 1, 0, 5]);
        let f = smith_with_inverses(&a);
        assert!((&f.snf.u * &f.u_inv).is_identity());
        check_decomposition(&a, &f.snf);
        // the driver's symmetric bookkeeping keeps both inverses honest
        let g = Grid::<Int>::from_matrix(&a);
        let out = reduce(g, true).unwrap();
        assert!((&out.v.to_matrix() * &out.v_inv.unwrap().to_matrix()).is_identity());
    }

    #[test]
    fn small_and_wide_paths_agree() {
        // Exhaustive 2x2 over small entries: the i64 instantiation and the
        // Int instantiation must produce identical transforms.
        for e in 0..625 {
            let mut rem = e;
            let mut entries = [0i64; 4];
            for v in entries.iter_mut() {
                *v = (rem % 5) as i64 - 2;
                rem /= 5;
            }
            let a = IntMatrix::from_i64(2, 2, &entries);
            let small = reduce(Grid::<i64>::try_from_matrix(&a).unwrap(), true).unwrap();
            let wide = reduce(Grid::<Int>::from_matrix(&a), true).unwrap();
            assert_eq!(small.work.to_matrix(), wide.work.to_matrix());
            assert_eq!(small.u.to_matrix(), wide.u.to_matrix());
            assert_eq!(small.v.to_matrix(), wide.v.to_matrix());
            assert_eq!(
                small.u_inv.as_ref().unwrap().to_matrix(),
                wide.u_inv.as_ref().unwrap().to_matrix()
            );
            assert_eq!(
                small.v_inv.as_ref().unwrap().to_matrix(),
                wide.v_inv.as_ref().unwrap().to_matrix()
            );
            check_decomposition(&a, &smith_normal_form(&a));
        }
    }

    #[test]
    fn overflow_falls_back_to_big() {
        let big = i64::MAX / 2;
        let a = IntMatrix::from_i64(2, 2, &[big, big - 1, big - 3, big - 7]);
        let s = smith_normal_form(&a);
        check_decomposition(&a, &s);
    }

    #[test]
    fn solve_and_kernel() {
        let a = IntMatrix::from_i64(2, 3, &[1, 2, 3, 0, 2, 4]);
        let b = [Int::from(6), Int::from(4)];
        let x = solve(&a, &b).unwrap();
        assert_eq!(a.mul_vec(&x), b.to_vec());
        assert!(solve(&a, &[Int::from(1), Int::from(1)]).is_none());

        let k = kernel_basis(&a);
        assert_eq!(k.cols(), 1);
        assert!(a.mul_vec(&k.column(0)).iter().all(Int::is_zero));
    }

    proptest! {
        #[test]
        fn random_decompositions(
            rows in 1usize..=6,
            cols in 1usize..=6,
            seed in proptest::collection::vec(-5i64..=5, 36),
        ) {
            let a = IntMatrix::from_fn(rows, cols, |i, j| Int::from(seed[i * 6 + j]));
            let s = smith_normal_form(&a);
            check_decomposition(&a, &s);
        }

        #[test]
        fn random_solves(
            rows in 1usize..=5,
            cols in 1usize..=5,
            seed in proptest::collection::vec(-4i64..=4, 25),
            xs in proptest::collection::vec(-5i64..=5, 5),
        ) {
            let a = IntMatrix::from_fn(rows, cols, |i, j| Int::from(seed[i * 5 + j]));
            let x: Vec<Int> = xs[..cols].iter().map(|&v| Int::from(v)).collect();
            let b = a.mul_vec(&x);
            let got = solve(&a, &b).expect("constructed system must be solvable");
            prop_assert_eq!(a.mul_vec(&got), b);
        }
    }
}
