//! Dense exact Gaussian elimination.

use num_traits::Zero;

use crate::rational::Rational;

/// Reduced row echelon form in place; returns the pivot columns.
fn rref(m: &mut [Vec<Rational>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row == m.len() {
            break;
        }
        let Some(p) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for x in m[row].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = m[row].clone();
        for (r, other) in m.iter_mut().enumerate() {
            if r != row && !other[col].is_zero() {
                let f = other[col].clone();
                for (x, p) in other.iter_mut().zip(&pivot_row) {
                    *x -= &f * p;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    pivots
}

pub fn rank(rows: &[Vec<Rational>]) -> usize {
    let Some(first) = rows.first() else {
        return 0;
    };
    let ncols = first.len();
    let mut m = rows.to_vec();
    rref(&mut m, ncols).len()
}

/// Basis of `{x : r·x = 0 for every row r}`.
pub fn nullspace(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let mut m = rows.to_vec();
    let pivots = rref(&mut m, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&fc| {
            let mut v = vec![Rational::zero(); ncols];
            v[fc] = Rational::from_integer(1.into());
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = -m[i][fc].clone();
            }
            v
        })
        .collect()
}

/// Solves the square or overdetermined system `A x = b` (A given by rows);
/// `None` when inconsistent. Free variables are set to zero.
pub fn solve(a: &[Vec<Rational>], b: &[Rational]) -> Option<Vec<Rational>> {
    let ncols = a.first().map_or(0, Vec::len);
    let mut m: Vec<Vec<Rational>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = rref(&mut m, ncols + 1);
    if pivots.contains(&ncols) {
        return None;
    }
    let mut x = vec![Rational::zero(); ncols];
    for (i, &pc) in pivots.iter().enumerate() {
        x[pc] = m[i][ncols].clone();
    }
    Some(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn rows(v: &[&[i64]]) -> Vec<Vec<Rational>> {
        v.iter()
            .map(|r| r.iter().map(|&x| int(x)).collect())
            .collect()
    }

    #[test]
    fn rank_and_kernel() {
        let m = rows(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(rank(&m), 2);
        let k = nullspace(&m, 3);
        assert_eq!(k.len(), 1);
        for r in &m {
            assert!(crate::rational::dot(r, &k[0]).is_zero());
        }
        assert_eq!(rank(&[]), 0);
    }

    #[test]
    fn solve_detects_inconsistency() {
        let a = rows(&[&[1, 0], &[0, 1], &[1, 1]]);
        assert_eq!(
            solve(&a, &[int(1), int(2), int(3)]),
            Some(vec![int(1), int(2)])
        );
        assert_eq!(solve(&a, &[int(1), int(2), int(4)]), None);
    }
}
