//! Phase-one simplex over the rationals, Bland's rule throughout.
//!
//! Decides whether `x = Σ λ_i g_i` has a solution with every `λ_i ≥ 0`.

use num_traits::{Signed, Zero};

use crate::rational::Rational;

struct Tableau {
    /// `rows × (vars + 1)`; the last column is the right-hand side.
    cells: Vec<Vec<Rational>>,
    basis: Vec<usize>,
    num_structural: usize,
}

impl Tableau {
    fn num_vars(&self) -> usize {
        self.cells.first().map_or(0, |r| r.len() - 1)
    }

    fn cost(&self, var: usize) -> Rational {
        if var >= self.num_structural {
            Rational::from_integer(1.into())
        } else {
            Rational::zero()
        }
    }

    fn reduced_cost(&self, var: usize) -> Rational {
        let mut rc = self.cost(var);
        for (r, &b) in self.basis.iter().enumerate() {
            rc -= self.cost(b) * &self.cells[r][var];
        }
        rc
    }

    fn objective(&self) -> Rational {
        let rhs = self.num_vars();
        self.basis
            .iter()
            .enumerate()
            .fold(Rational::zero(), |acc, (r, &b)| {
                acc + self.cost(b) * &self.cells[r][rhs]
            })
    }

    fn pivot(&mut self, row: usize, col: usize) {
        let inv = self.cells[row][col].recip();
        for x in self.cells[row].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = self.cells[row].clone();
        for (r, cells) in self.cells.iter_mut().enumerate() {
            if r == row || cells[col].is_zero() {
                continue;
            }
            let f = cells[col].clone();
            for (c, p) in pivot_row.iter().enumerate() {
                if !p.is_zero() {
                    cells[c] -= &f * p;
                }
            }
        }
        self.basis[row] = col;
    }

    /// Runs to optimality. Artificial columns never re-enter the basis.
    fn run(&mut self) {
        let rhs = self.num_vars();
        loop {
            let entering = (0..self.num_structural).find(|&j| self.reduced_cost(j).is_negative());
            let Some(col) = entering else { return };
            let mut best: Option<(usize, Rational)> = None;
            for r in 0..self.cells.len() {
                let a = &self.cells[r][col];
                if !a.is_positive() {
                    continue;
                }
                let ratio = &self.cells[r][rhs] / a;
                best = match best {
                    None => Some((r, ratio)),
                    Some((br, bq)) => {
                        if ratio < bq || (ratio == bq && self.basis[r] < self.basis[br]) {
                            Some((r, ratio))
                        } else {
                            Some((br, bq))
                        }
                    }
                };
            }
            // Phase one is bounded below by zero, so an entering column
            // always has a positive entry.
            let (row, _) = best.expect("phase one objective is bounded");
            self.pivot(row, col);
        }
    }
}

/// `true` iff `target` lies in the cone spanned by `generators`.
pub fn in_conic_hull(generators: &[Vec<Rational>], target: &[Rational]) -> bool {
    let k = target.len();
    if target.iter().all(Zero::is_zero) {
        return true;
    }
    let m = generators.len();
    if m == 0 {
        return false;
    }
    let mut cells = Vec::with_capacity(k);
    for r in 0..k {
        let flip = target[r].is_negative();
        let sign = |q: &Rational| if flip { -q.clone() } else { q.clone() };
        let mut row: Vec<Rational> = generators.iter().map(|g| sign(&g[r])).collect();
        row.extend((0..k).map(|a| {
            if a == r {
                Rational::from_integer(1.into())
            } else {
                Rational::zero()
            }
        }));
        row.push(sign(&target[r]));
        cells.push(row);
    }
    let mut t = Tableau {
        cells,
        basis: (m..m + k).collect(),
        num_structural: m,
    };
    t.run();
    t.objective().is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn orthant_membership() {
        let g = vec![v(&[1, 0]), v(&[0, 1])];
        assert!(in_conic_hull(&g, &v(&[2, 3])));
        assert!(!in_conic_hull(&g, &v(&[-1, 0])));
        assert!(in_conic_hull(&g, &v(&[0, 0])));
    }

    #[test]
    fn degenerate_systems() {
        // repeated and parallel generators force degenerate pivots
        let g = vec![v(&[1, 1, 0]), v(&[2, 2, 0]), v(&[1, 1, 0]), v(&[0, 0, 1])];
        assert!(in_conic_hull(&g, &v(&[3, 3, 5])));
        assert!(!in_conic_hull(&g, &v(&[3, 2, 5])));
        assert!(!in_conic_hull(&[], &v(&[1])));
        let g = vec![vec![frac(1, 3), frac(1, 2)]];
        assert!(in_conic_hull(&g, &v(&[2, 3])));
    }
}
