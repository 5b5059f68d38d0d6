//! Exact integer matrices: Smith normal form and fraction-free
//! determinants.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// A dense integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntegerMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntegerMatrix {
    pub fn zeros(rows: usize, cols: usize) -> IntegerMatrix {
        IntegerMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> IntegerMatrix {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged rows");
        IntegerMatrix {
            rows: nrows,
            cols: ncols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_i64_rows(rows: &[&[i64]]) -> IntegerMatrix {
        IntegerMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| BigInt::from(v)).collect())
                .collect(),
        )
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &BigInt {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        self.data[i * self.cols + j] = v;
    }
}

/// Invariant factors of an integer matrix: the nonzero diagonal of the
/// Smith form (each dividing the next) plus the number of zero diagonal
/// entries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SmithNormalForm {
    pub factors: Vec<BigInt>,
    pub rank_deficiency: usize,
}

impl SmithNormalForm {
    pub fn rank(&self) -> usize {
        self.factors.len()
    }
}

/// Smith normal form by unimodular row and column operations.
pub fn smith_normal_form(m: &IntegerMatrix) -> SmithNormalForm {
    let rows = m.nrows();
    let cols = m.ncols();
    let mut a: Vec<Vec<BigInt>> = (0..rows)
        .map(|i| (0..cols).map(|j| m.get(i, j).clone()).collect())
        .collect();
    let lim = rows.min(cols);
    let mut k = 0;
    while k < lim {
        let Some((pi, pj)) = min_nonzero(&a, k) else {
            break;
        };
        a.swap(k, pi);
        swap_cols(&mut a, k, pj);
        loop {
            // clear column k with euclidean steps; a smaller remainder
            // becomes the new pivot
            let mut clean = true;
            for i in k + 1..rows {
                if a[i][k].is_zero() {
                    continue;
                }
                let q = div_nearest(&a[i][k], &a[k][k]);
                row_sub(&mut a, i, k, &q);
                if !a[i][k].is_zero() {
                    a.swap(k, i);
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            for j in k + 1..cols {
                if a[k][j].is_zero() {
                    continue;
                }
                let q = div_nearest(&a[k][j], &a[k][k]);
                col_sub(&mut a, j, k, &q);
                if !a[k][j].is_zero() {
                    swap_cols(&mut a, k, j);
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // divisibility: the pivot must divide every remaining entry
            let pivot = a[k][k].clone();
            let mut fixed = true;
            'scan: for i in k + 1..rows {
                for j in k + 1..cols {
                    if !(&a[i][j] % &pivot).is_zero() {
                        for jj in 0..cols {
                            let add = a[i][jj].clone();
                            a[k][jj] += add;
                        }
                        fixed = false;
                        break 'scan;
                    }
                }
            }
            if fixed {
                break;
            }
        }
        if a[k][k].is_negative() {
            let neg = -a[k][k].clone();
            a[k][k] = neg;
        }
        k += 1;
    }
    let factors: Vec<BigInt> = (0..k).map(|i| a[i][i].clone()).collect();
    debug_assert!(factors.windows(2).all(|w| (&w[1] % &w[0]).is_zero()));
    SmithNormalForm {
        factors,
        rank_deficiency: lim - k,
    }
}

fn min_nonzero(a: &[Vec<BigInt>], k: usize) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize)> = None;
    for (i, row) in a.iter().enumerate().skip(k) {
        for (j, v) in row.iter().enumerate().skip(k) {
            if v.is_zero() {
                continue;
            }
            match best {
                Some((bi, bj)) if a[bi][bj].abs() <= v.abs() => {}
                _ => best = Some((i, j)),
            }
        }
    }
    best
}

fn swap_cols(a: &mut [Vec<BigInt>], j1: usize, j2: usize) {
    if j1 == j2 {
        return;
    }
    for row in a.iter_mut() {
        row.swap(j1, j2);
    }
}

fn row_sub(a: &mut [Vec<BigInt>], target: usize, source: usize, q: &BigInt) {
    if q.is_zero() {
        return;
    }
    let cols = a[source].len();
    for j in 0..cols {
        let delta = q * &a[source][j];
        a[target][j] -= delta;
    }
}

fn col_sub(a: &mut [Vec<BigInt>], target: usize, source: usize, q: &BigInt) {
    if q.is_zero() {
        return;
    }
    for row in a.iter_mut() {
        let delta = q * &row[source];
        row[target] -= delta;
    }
}

/// Quotient rounding to nearest, so the remainder has at most half the
/// pivot's magnitude; keeps euclidean steps short.
fn div_nearest(n: &BigInt, d: &BigInt) -> BigInt {
    let (mut q, r) = num_integer::Integer::div_rem(n, d);
    let doubled: BigInt = &r * 2;
    if doubled.abs() > d.abs() {
        if r.sign() == d.sign() {
            q += 1;
        } else {
            q -= 1;
        }
    }
    q
}

/// Fraction-free determinant (Bareiss); exact over the integers.
pub fn bareiss_determinant(m: &IntegerMatrix) -> BigInt {
    assert_eq!(m.nrows(), m.ncols(), "determinant of a non-square matrix");
    let n = m.nrows();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| m.get(i, j).clone()).collect())
        .collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            a.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                let (q, r) = num_integer::Integer::div_rem(&num, &prev);
                debug_assert!(r.is_zero(), "Bareiss division must be exact");
                a[i][j] = q;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn snf(rows: &[&[i64]]) -> (Vec<i64>, usize) {
        let s = smith_normal_form(&IntegerMatrix::from_i64_rows(rows));
        (
            s.factors.iter().map(|f| i64::try_from(f).unwrap()).collect(),
            s.rank_deficiency,
        )
    }

    #[test]
    fn snf_examples() {
        assert_eq!(snf(&[&[1, 0], &[0, 1]]), (vec![1, 1], 0));
        assert_eq!(snf(&[&[2, 0], &[0, 4]]), (vec![2, 4], 0));
        // gcd of entries 2, |det| = 8
        assert_eq!(snf(&[&[2, 4], &[6, 8]]), (vec![2, 4], 0));
    }

    #[test]
    fn snf_rank_deficiency() {
        assert_eq!(snf(&[&[1, 2], &[2, 4]]), (vec![1], 1));
        assert_eq!(snf(&[&[0, 0], &[0, 0]]), (vec![], 2));
        assert_eq!(snf(&[&[6, 4], &[4, 6]]), (vec![2, 10], 0));
    }

    #[test]
    fn snf_rectangular() {
        assert_eq!(snf(&[&[2, 4, 6]]), (vec![2], 0));
        assert_eq!(snf(&[&[3], &[6], &[9]]), (vec![3], 0));
    }

    #[test]
    fn snf_divisibility_vs_minors() {
        // d_1 * ... * d_i equals the gcd of all i x i minors
        let m = IntegerMatrix::from_i64_rows(&[&[-6, 111, -36, 6], &[5, -672, 210, 74], &[0, -255, 81, 24], &[-7, 255, -81, -10]]);
        let s = smith_normal_form(&m);
        let factors: Vec<i64> = s.factors.iter().map(|f| i64::try_from(f).unwrap()).collect();
        assert_eq!(factors, vec![1, 3, 21]);
        assert_eq!(s.rank_deficiency, 1);
    }

    #[test]
    fn bareiss_matches_small_determinants() {
        let m = IntegerMatrix::from_i64_rows(&[&[1, 2], &[3, 4]]);
        assert_eq!(bareiss_determinant(&m), BigInt::from(-2));
        let m = IntegerMatrix::from_i64_rows(&[&[2, 0, 1], &[1, 1, 0], &[0, 3, 1]]);
        assert_eq!(bareiss_determinant(&m), BigInt::from(5));
        let m = IntegerMatrix::from_i64_rows(&[&[0, 1], &[1, 0]]);
        assert_eq!(bareiss_determinant(&m), BigInt::from(-1));
        let m = IntegerMatrix::from_i64_rows(&[&[0, 1], &[0, 2]]);
        assert_eq!(bareiss_determinant(&m), BigInt::zero());
    }
}
