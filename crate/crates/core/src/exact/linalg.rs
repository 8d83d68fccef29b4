//! Exact Gaussian elimination over `BigRat`.

use num_traits::Zero;

use super::rational::BigRat;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Solution {
    Unique(Vec<BigRat>),
    Inconsistent,
    Underdetermined { rank: usize },
}

/// Solve `rows * x = rhs` where each row has `unknowns` entries. The system
/// may be overdetermined.
pub fn solve(mut rows: Vec<Vec<BigRat>>, mut rhs: Vec<BigRat>, unknowns: usize) -> Solution {
    let m = rows.len();
    let mut pivot_row = 0;
    let mut pivots = Vec::new();
    for col in 0..unknowns {
        let Some(p) = (pivot_row..m).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(pivot_row, p);
        rhs.swap(pivot_row, p);
        let inv = rows[pivot_row][col].recip();
        for x in &mut rows[pivot_row][col..unknowns] {
            *x *= &inv;
        }
        rhs[pivot_row] *= &inv;
        for r in 0..m {
            if r == pivot_row || rows[r][col].is_zero() {
                continue;
            }
            let factor = rows[r][col].clone();
            let pivot = rows[pivot_row][col..unknowns].to_vec();
            for (x, p) in rows[r][col..unknowns].iter_mut().zip(&pivot) {
                *x -= &factor * p;
            }
            let delta = &factor * &rhs[pivot_row];
            rhs[r] -= delta;
        }
        pivots.push(col);
        pivot_row += 1;
        if pivot_row == m {
            break;
        }
    }
    if rhs[pivot_row..].iter().any(|v| !v.is_zero()) {
        return Solution::Inconsistent;
    }
    if pivots.len() < unknowns {
        return Solution::Underdetermined { rank: pivots.len() };
    }
    Solution::Unique(rhs[..unknowns].to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{rat, ratio};

    #[test]
    fn overdetermined_consistent() {
        // x + y = 3, x - y = 1, 2x = 4
        let rows = vec![
            vec![rat(1), rat(1)],
            vec![rat(1), rat(-1)],
            vec![rat(2), rat(0)],
        ];
        let sol = solve(rows, vec![rat(3), rat(1), rat(4)], 2);
        assert_eq!(sol, Solution::Unique(vec![rat(2), rat(1)]));
    }

    #[test]
    fn inconsistent_and_rank_deficient() {
        let rows = vec![vec![rat(1), rat(1)], vec![rat(2), rat(2)]];
        assert_eq!(
            solve(rows.clone(), vec![rat(1), rat(3)], 2),
            Solution::Inconsistent
        );
        assert_eq!(
            solve(rows, vec![rat(1), rat(2)], 2),
            Solution::Underdetermined { rank: 1 }
        );
    }

    #[test]
    fn fractional_solution() {
        let rows = vec![vec![rat(2), rat(1)], vec![rat(1), rat(3)]];
        let sol = solve(rows, vec![rat(1), rat(0)], 2);
        assert_eq!(sol, Solution::Unique(vec![ratio(3, 5), ratio(-1, 5)]));
    }
}
