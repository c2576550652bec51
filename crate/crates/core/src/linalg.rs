//! Exact rational elimination for the small dense systems that show up in
//! root bookkeeping (at most 8 x 8).

use num_rational::Ratio;
use num_traits::Zero;

pub type Q = Ratio<i64>;

/// Solves `columns * x = rhs` exactly, where `columns[j]` is the j-th column.
///
/// The system may be overdetermined; `None` is returned when it is
/// inconsistent or when the columns are linearly dependent.
pub fn solve_columns(columns: &[Vec<i64>], rhs: &[i64]) -> Option<Vec<Q>> {
    let n = columns.len();
    let m = rhs.len();
    if columns.iter().any(|c| c.len() != m) {
        return None;
    }
    // augmented m x (n + 1)
    let mut a: Vec<Vec<Q>> = (0..m)
        .map(|i| {
            let mut row: Vec<Q> = columns.iter().map(|c| Q::from_integer(c[i])).collect();
            row.push(Q::from_integer(rhs[i]));
            row
        })
        .collect();

    let mut pivot_row = 0;
    let mut pivots = Vec::with_capacity(n);
    for col in 0..n {
        let p = (pivot_row..m).find(|&r| !a[r][col].is_zero())?;
        a.swap(pivot_row, p);
        let inv = a[pivot_row][col].recip();
        for v in a[pivot_row].iter_mut() {
            *v *= inv;
        }
        for r in 0..m {
            if r != pivot_row && !a[r][col].is_zero() {
                let f = a[r][col];
                #[allow(clippy::needless_range_loop)]
                for c in col..=n {
                    let t = a[pivot_row][c] * f;
                    a[r][c] -= t;
                }
            }
        }
        pivots.push(pivot_row);
        pivot_row += 1;
    }
    // remaining rows must be 0 = 0
    if a[pivot_row..].iter().any(|row| !row[n].is_zero()) {
        return None;
    }
    Some(pivots.iter().map(|&r| a[r][n]).collect())
}

/// Rank of an integer matrix given as rows.
pub fn rank(rows: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<Q>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| Q::from_integer(x)).collect())
        .collect();
    let Some(width) = a.first().map(Vec::len) else {
        return 0;
    };
    let mut r = 0;
    for col in 0..width {
        let Some(p) = (r..a.len()).find(|&i| !a[i][col].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        for i in (r + 1)..a.len() {
            if !a[i][col].is_zero() {
                let f = a[i][col] / a[r][col];
                #[allow(clippy::needless_range_loop)]
                for c in col..width {
                    let t = a[r][c] * f;
                    a[i][c] -= t;
                }
            }
        }
        r += 1;
        if r == a.len() {
            break;
        }
    }
    r
}

/// Returns the integer value of `q` when it is integral.
pub fn as_integer(q: &Q) -> Option<i64> {
    q.is_integer().then(|| q.to_integer())
}

/// Formats a rational coefficient the way root listings are written:
/// `1`, `-1`, `2`, `1/2`.
pub fn format_q(q: &Q) -> String {
    if q.is_integer() {
        q.to_integer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn solves_square_system() {
        // columns (1,0) and (1,1): x0*(1,0) + x1*(1,1) = (3,2)
        let x = solve_columns(&[vec![1, 0], vec![1, 1]], &[3, 2]).unwrap();
        assert_eq!(x, vec![Q::from_integer(1), Q::from_integer(2)]);
    }

    #[test]
    fn detects_inconsistent_overdetermined_system() {
        assert!(solve_columns(&[vec![1, 0, 0]], &[1, 1, 0]).is_none());
        let x = solve_columns(&[vec![2, 0, 0]], &[1, 0, 0]).unwrap();
        assert_eq!(x, vec![Q::new(1, 2)]);
    }

    #[test]
    fn rank_of_dependent_rows() {
        assert_eq!(rank(&[vec![1, 2], vec![2, 4], vec![0, 0]]), 1);
        assert_eq!(rank(&[vec![1, 0, 1], vec![0, 1, 1], vec![1, 1, 2]]), 2);
        assert_eq!(rank(&[]), 0);
    }
}
