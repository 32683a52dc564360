//! Exact integer linear algebra helpers (fraction-free elimination).

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// Determinant by the Bareiss fraction-free algorithm. Exact, no rationals.
pub fn determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&r| !m[r][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, swap);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = num / &prev;
            }
            m[i][k] = BigInt::zero();
        }
        prev = m[k][k].clone();
    }
    sign * m[n - 1][n - 1].clone()
}

/// Solves `M·x = b` over the rationals by Cramer's rule and returns the
/// solution only when it is integral. `None` means either `det M = 0` or a
/// non-integer coordinate.
pub fn solve_exact_integer(m: &[Vec<BigInt>], b: &[BigInt]) -> Option<Vec<BigInt>> {
    let n = m.len();
    debug_assert!(m.iter().all(|row| row.len() == n) && b.len() == n);
    let det = determinant(m.to_vec());
    if det.is_zero() {
        return None;
    }
    let mut solution = Vec::with_capacity(n);
    for col in 0..n {
        let mut replaced = m.to_vec();
        for (row, bv) in replaced.iter_mut().zip(b) {
            row[col] = bv.clone();
        }
        let det_col = determinant(replaced);
        let (q, r) = num_integer::Integer::div_rem(&det_col, &det);
        if !r.is_zero() {
            return None;
        }
        solution.push(q);
    }
    Some(solution)
}

/// Rank of an integer matrix, computed by fraction-free elimination.
pub fn rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let rows = m.len();
    if rows == 0 {
        return 0;
    }
    let cols = m[0].len();
    let mut rank = 0;
    let mut prev = BigInt::one();
    let mut pivot_row = 0;
    for col in 0..cols {
        let Some(swap) = (pivot_row..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(pivot_row, swap);
        for i in pivot_row + 1..rows {
            for j in col + 1..cols {
                let num = &m[i][j] * &m[pivot_row][col] - &m[i][col] * &m[pivot_row][j];
                m[i][j] = num / &prev;
            }
            m[i][col] = BigInt::zero();
        }
        prev = m[pivot_row][col].clone();
        pivot_row += 1;
        rank += 1;
        if pivot_row == rows {
            break;
        }
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect()
    }

    #[test]
    fn determinant_small() {
        assert_eq!(determinant(m(&[&[2]])), BigInt::from(2));
        assert_eq!(determinant(m(&[&[1, 2], &[3, 4]])), BigInt::from(-2));
        assert_eq!(determinant(m(&[&[0, 1], &[1, 0]])), BigInt::from(-1));
        assert_eq!(
            determinant(m(&[&[2, 0, 1], &[1, 1, 0], &[0, 3, 1]])),
            BigInt::from(5)
        );
        assert_eq!(determinant(m(&[&[1, 2], &[2, 4]])), BigInt::zero());
    }

    #[test]
    fn solve_integral_and_nonintegral() {
        // x + 2y = 5, 3x + 4y = 11  =>  (1, 2)
        let sol = solve_exact_integer(&m(&[&[1, 2], &[3, 4]]), &[BigInt::from(5), BigInt::from(11)]);
        assert_eq!(sol, Some(vec![BigInt::from(1), BigInt::from(2)]));
        // 2x = 3 has no integer solution
        let sol = solve_exact_integer(&m(&[&[2]]), &[BigInt::from(3)]);
        assert_eq!(sol, None);
        // singular
        let sol = solve_exact_integer(&m(&[&[1, 2], &[2, 4]]), &[BigInt::from(1), BigInt::from(2)]);
        assert_eq!(sol, None);
    }

    #[test]
    fn rank_detects_dependencies() {
        assert_eq!(rank(m(&[&[1, 0], &[0, 1]])), 2);
        assert_eq!(rank(m(&[&[1, 2], &[2, 4]])), 1);
        assert_eq!(rank(m(&[&[0, 0], &[0, 0]])), 0);
        assert_eq!(rank(m(&[&[1, 0, 0], &[0, 1, 0]])), 2);
        assert_eq!(rank(m(&[&[1, 1], &[1, -1], &[2, 0]])), 2);
    }
}
