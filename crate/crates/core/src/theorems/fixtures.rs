//! Reference cones transcribed as generator lists, in `(d_n, …, d_0)` order.
//!
//! Some lists are not minimal; compare them with `cone_equal`.

use crate::cone::ConeV;
use crate::rational::{frac, int, Rational};

fn tuple_cone(n: usize, rays: Vec<Vec<i64>>) -> ConeV {
    ConeV::from_ints(n + 1, &rays).expect("fixture rays have length n + 1")
}

/// `c·e_j + c'·e_{j−1}` with `e_{−1} = 0`.
fn pair_ray(n: usize, j: usize, c: i64, c_prev: i64) -> Vec<i64> {
    let mut v = vec![0; n + 1];
    v[n - j] = c;
    if j >= 1 {
        v[n - j + 1] = c_prev;
    }
    v
}

fn unit(n: usize, j: usize) -> Vec<i64> {
    pair_ray(n, j, 1, 0)
}

/// `Eff_i(X_{2,2})` for `0 ≤ i ≤ 6`.
pub fn conic_cone(i: usize) -> Option<ConeV> {
    let rays: Vec<Vec<i64>> = match i {
        0 => vec![vec![0, 0, 1]],
        1 => vec![vec![0, 1, 0], vec![0, 0, 1]],
        2 | 3 => vec![vec![1, 1, 0], vec![0, 1, 0], vec![0, 0, 1]],
        4 => vec![vec![2, 3, 0], vec![1, 3, 0], vec![0, 1, 1], vec![0, 0, 1]],
        5 => vec![vec![1, 2, 0], vec![0, 1, 2]],
        6 => vec![vec![1, 2, 0]],
        _ => return None,
    };
    Some(tuple_cone(2, rays))
}

/// `Eff_i(X_{n,2})` for `n ≤ i ≤ 2n`.
pub fn quadric_cone(n: usize, i: usize) -> Option<ConeV> {
    if n < 2 || i < n || i > 2 * n {
        return None;
    }
    let nn = n as i64;
    let mut rays: Vec<Vec<i64>>;
    if i < 2 * n {
        rays = (0..n).map(|j| unit(n, j)).collect();
        rays.push(pair_ray(n, n, 1, 1));
    } else {
        rays = (0..n - 1).map(|j| unit(n, j)).collect();
        rays.push(pair_ray(n, n, nn, nn + 1));
        rays.push(pair_ray(n, n - 1, 1, 1));
        rays.push(pair_ray(n, n, 1, nn + 1));
    }
    Some(tuple_cone(n, rays))
}

/// Slopes `δ(i)` with `Eff_i(X_{2,d}) = ⟨(1,δ,0),(0,1,0),(0,0,1)⟩`.
pub fn delta(i: usize) -> Option<Rational> {
    Some(match i {
        2 | 3 => int(1),
        4 => frac(3, 2),
        5 | 6 => int(2),
        7 => frac(12, 5),
        10 => int(3),
        _ => return None,
    })
}

/// The `(i, d)` pairs covered by the `δ` table.
pub fn delta_cases() -> Vec<(usize, u64)> {
    let mut out = Vec::new();
    for i in 2..=6 {
        for d in 3..=6 {
            out.push((i, d));
        }
    }
    for i in [7, 10] {
        for d in 4..=6 {
            out.push((i, d));
        }
    }
    out
}

pub fn delta_cone(i: usize) -> Option<ConeV> {
    let q = delta(i)?;
    let rows = vec![
        vec![int(1), q, int(0)],
        vec![int(0), int(1), int(0)],
        vec![int(0), int(0), int(1)],
    ];
    Some(ConeV::new(3, &rows).expect("three coordinates"))
}

/// Known `(lower, upper)` bounds for `Eff_i(X_{2,3})`, `i ∈ {7, 8}`.
pub fn x23_bounds(i: usize) -> Option<(ConeV, ConeV)> {
    let (lo, up): (Vec<Vec<i64>>, Vec<Vec<i64>>) = match i {
        7 => (
            vec![vec![5, 12, 0], vec![1, 6, 0], vec![0, 1, 1], vec![0, 0, 1]],
            vec![vec![5, 12, 0], vec![0, 1, 0], vec![0, 0, 1]],
        ),
        8 => (
            vec![vec![2, 7, 0], vec![5, 14, 0], vec![0, 1, 2], vec![0, 0, 1]],
            vec![vec![2, 5, 0], vec![0, 1, 0], vec![0, 0, 1]],
        ),
        _ => return None,
    };
    Some((tuple_cone(2, lo), tuple_cone(2, up)))
}

/// Every regime formula for `μ_* Eff_i(X_{n,1} × Y_{n,d₂})` that applies at
/// `i`; the regimes overlap at `i = 2n − 1`.
pub fn hyperplane_product(n: usize, d2: u64, i: usize) -> Vec<ConeV> {
    let big_m = crate::rational::binomial_usize((n as u64 + d2) as i64, n as i64) - 1;
    let nn = n as i64;
    let mut out = Vec::new();
    if i < n {
        out.push(tuple_cone(n, (0..=i).map(|j| unit(n, j)).collect()));
    }
    if n <= i && i < 2 * n {
        let mut rays: Vec<Vec<i64>> = (0..n).map(|j| unit(n, j)).collect();
        rays.push(pair_ray(n, n, 1, 1));
        out.push(tuple_cone(n, rays));
    }
    if 2 * n - 1 <= i && i < big_m + n {
        let mut rays: Vec<Vec<i64>> = (0..n).map(|j| unit(n, j)).collect();
        rays.push(pair_ray(n, n, nn, i as i64 - nn + 1));
        out.push(tuple_cone(n, rays));
    }
    if big_m + n <= i && i < big_m + 2 * n {
        let ii = i as i64;
        let mm = big_m as i64;
        let mut rays = Vec::new();
        for j in (i + 1 - big_m - n)..=n {
            let jj = j as i64;
            rays.push(pair_ray(n, j, ii - jj - mm + 1, ii - jj + 1));
            rays.push(pair_ray(n, j, nn, ii - jj + 1));
        }
        out.push(tuple_cone(n, rays));
    }
    out
}

/// `μ_* Eff_i(X_{2,2} × Y_{2,d₂})` where a row is listed.
pub fn conic_product(d2: u64, i: usize) -> Option<ConeV> {
    let big_m = crate::rational::binomial_usize(d2 as i64 + 2, 2) - 1;
    let m = big_m as i64;
    let ii = i as i64;
    let rays: Vec<Vec<i64>> = if (6..=big_m + 3).contains(&i) {
        vec![vec![5, 2 * (ii - 1), 0], vec![0, 1, 0], vec![0, 0, 1]]
    } else if i == big_m + 4 {
        vec![
            vec![5, 2 * m + 6, 0],
            vec![1, m + 3, 0],
            vec![0, 4, m + 4],
            vec![0, 0, 1],
        ]
    } else if i == big_m + 5 {
        vec![
            vec![4, 2 * m + 8, 0],
            vec![5, 2 * m + 8, 0],
            vec![0, 5, 2 * m + 10],
        ]
    } else if i == big_m + 6 {
        vec![vec![5, 2 * m + 10, 0]]
    } else {
        match i {
            1 => vec![vec![0, 1, 0], vec![0, 0, 1]],
            2 | 3 => vec![vec![1, 1, 0], vec![0, 1, 0], vec![0, 0, 1]],
            4 => vec![vec![2, 3, 0], vec![0, 1, 0], vec![0, 0, 1]],
            5 => vec![vec![1, 2, 0], vec![0, 1, 0], vec![0, 0, 1]],
            _ => return None,
        }
    };
    Some(tuple_cone(2, rays))
}
