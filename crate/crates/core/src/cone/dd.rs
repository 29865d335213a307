//! Incremental double description for `{y : a·y ≥ 0 for every constraint a}`.
//!
//! The cone is tracked as a lineality basis plus rays outside it. Each
//! constraint either cuts the lineality space (one direction becomes a ray)
//! or splits the rays into positive, zero and negative sides; new rays are
//! all positive/negative combinations, pruned by the rank test on tight
//! constraints.

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use super::linalg::rank;
use crate::rational::{dot, primitive_integer_vector, to_rationals, Rational};

#[derive(Debug, Clone, Default)]
pub struct Generators {
    pub rays: Vec<Vec<BigInt>>,
    pub lineality: Vec<Vec<BigInt>>,
}

pub fn h_to_v(dim: usize, constraints: &[Vec<Rational>]) -> Generators {
    let one = Rational::from_integer(1.into());
    let mut lineality: Vec<Vec<Rational>> = (0..dim)
        .map(|i| {
            (0..dim)
                .map(|j| {
                    if i == j {
                        one.clone()
                    } else {
                        Rational::zero()
                    }
                })
                .collect()
        })
        .collect();
    let mut rays: Vec<Vec<Rational>> = Vec::new();
    let mut seen: Vec<Vec<Rational>> = Vec::new();

    for a in constraints {
        if a.iter().all(Zero::is_zero) {
            continue;
        }
        seen.push(a.clone());
        if let Some(pos) = lineality.iter().position(|l| !dot(a, l).is_zero()) {
            let mut l0 = lineality.remove(pos);
            if dot(a, &l0).is_negative() {
                l0.iter_mut().for_each(|x| *x = -x.clone());
            }
            let s = dot(a, &l0);
            let project = |v: &Vec<Rational>| -> Vec<Rational> {
                let f = dot(a, v) / &s;
                v.iter().zip(&l0).map(|(x, y)| x - &f * y).collect()
            };
            lineality = lineality.iter().map(project).collect();
            rays = rays.iter().map(project).collect();
            rays.push(l0);
            continue;
        }

        let mut next = Vec::new();
        let mut positive = Vec::new();
        let mut negative = Vec::new();
        for r in rays.drain(..) {
            let v = dot(a, &r);
            if v.is_negative() {
                negative.push((r, v));
            } else {
                if v.is_positive() {
                    positive.push((r.clone(), v));
                }
                next.push(r);
            }
        }
        for (p, pv) in &positive {
            for (q, qv) in &negative {
                let comb: Vec<Rational> = p.iter().zip(q).map(|(x, y)| pv * y - qv * x).collect();
                next.push(comb);
            }
        }
        rays = prune(dim, lineality.len(), &seen, next);
    }

    let canon = |v: &Vec<Rational>| primitive_integer_vector(v);
    Generators {
        rays: rays.iter().filter_map(canon).collect(),
        lineality: lineality.iter().filter_map(canon).collect(),
    }
}

/// Keeps one representative per direction among the extreme rays: a ray is
/// extreme iff its tight constraints have rank `dim − lineality − 1`.
fn prune(
    dim: usize,
    lineality_dim: usize,
    constraints: &[Vec<Rational>],
    candidates: Vec<Vec<Rational>>,
) -> Vec<Vec<Rational>> {
    let mut out = Vec::new();
    let mut keys: BTreeSet<Vec<BigInt>> = BTreeSet::new();
    for r in candidates {
        let Some(key) = primitive_integer_vector(&r) else {
            continue;
        };
        if keys.contains(&key) {
            continue;
        }
        let tight: Vec<Vec<Rational>> = constraints
            .iter()
            .filter(|c| dot(c, &r).is_zero())
            .cloned()
            .collect();
        if rank(&tight) + lineality_dim + 1 == dim {
            keys.insert(key.clone());
            out.push(to_rationals(&key));
        }
    }
    out
}
