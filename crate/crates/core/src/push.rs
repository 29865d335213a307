//! Pushforward along the addition map `X_{n,d₁} × Y_{n,d₂} → X_{n,d₁+d₂}`
//! in covariant coordinates.
//!
//! An `s`-cycle `η` times a `t`-dimensional linear series of degree `q`
//! pushes forward to the `(s+t)`-cycle with `d_j = q·C(s+t−j, t)·η_j`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

use crate::cone::{ConeError, ConeV};
use crate::rational::{binomial, binomial_usize, to_rationals, Rational};
use crate::ring::{CovClass, RingError, RingPresentation};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PushError {
    #[error("no source cone for dimension {j}")]
    MissingSourceDimension { j: usize },
    #[error("cycle has dimension {found} but the push specification expects {expected}")]
    SourceDimension { expected: usize, found: usize },
    #[error("linear series degree must be positive")]
    NonPositiveDegree,
    #[error("dimension {i} out of range 0..={max}")]
    OutOfRange { i: usize, max: usize },
    #[error(transparent)]
    Ring(#[from] RingError),
    #[error(transparent)]
    Cone(#[from] ConeError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PushSpec {
    pub n: usize,
    pub s: usize,
    pub t: usize,
    pub delta_deg: Rational,
}

impl PushSpec {
    pub fn new(n: usize, s: usize, t: usize, delta_deg: Rational) -> Result<Self, PushError> {
        if !delta_deg.is_positive() {
            return Err(PushError::NonPositiveDegree);
        }
        Ok(Self { n, s, t, delta_deg })
    }

    pub fn unit(n: usize, s: usize, t: usize) -> Self {
        Self {
            n,
            s,
            t,
            delta_deg: Rational::from_integer(1.into()),
        }
    }
}

/// The product formula on a raw `(d_n, …, d_0)` tuple.
pub fn push_tuple(eta: &[Rational], spec: &PushSpec) -> Vec<Rational> {
    let n = spec.n;
    let st = (spec.s + spec.t) as i64;
    (0..=n)
        .rev()
        .map(|j| {
            let c = binomial(st - j as i64, spec.t as i64);
            &eta[n - j] * &spec.delta_deg * Rational::from_integer(c)
        })
        .collect()
}

pub fn product_pushforward(
    eta: &CovClass,
    spec: &PushSpec,
    target: RingPresentation,
) -> Result<CovClass, PushError> {
    if eta.dim() != spec.s {
        return Err(PushError::SourceDimension {
            expected: spec.s,
            found: eta.dim(),
        });
    }
    Ok(CovClass::new(
        target,
        spec.s + spec.t,
        push_tuple(eta.coords(), spec),
    )?)
}

/// Cones `Eff_j` of the first factor, with the dimensions of both factors.
#[derive(Debug, Clone)]
pub struct ProductSource {
    pub n: usize,
    /// `dim X_{n,d₁}`.
    pub source_dim: usize,
    /// `dim Y_{n,d₂}`.
    pub m: usize,
    pub cones: BTreeMap<usize, ConeV>,
}

impl ProductSource {
    pub fn new(n: usize, d1: u64, d2: u64) -> Result<Self, PushError> {
        let p1 = RingPresentation::new(n, d1)?;
        Ok(Self {
            n,
            source_dim: p1.dim_total,
            m: binomial_usize((n as u64 + d2) as i64, n as i64) - 1,
            cones: BTreeMap::new(),
        })
    }

    /// The source cone dimensions needed for target dimension `i`.
    pub fn range(&self, i: usize) -> std::ops::RangeInclusive<usize> {
        i.saturating_sub(self.m)..=i.min(self.source_dim)
    }

    /// Fills every needed cone from `f`.
    pub fn with_cones(
        mut self,
        i: usize,
        mut f: impl FnMut(usize) -> Result<ConeV, PushError>,
    ) -> Result<Self, PushError> {
        for j in self.range(i) {
            if let std::collections::btree_map::Entry::Vacant(e) = self.cones.entry(j) {
                e.insert(f(j)?);
            }
        }
        Ok(self)
    }
}

/// Generators `μ_*(g × Λ_{i−j})` for every ray `g` of `Eff_j`, canonicalized.
pub fn product_cone_pushforward(src: &ProductSource, i: usize) -> Result<ConeV, PushError> {
    let mut gens = Vec::new();
    for j in src.range(i) {
        let cone = src
            .cones
            .get(&j)
            .ok_or(PushError::MissingSourceDimension { j })?;
        let spec = PushSpec::unit(src.n, j, i - j);
        for g in cone.rays() {
            gens.push(push_tuple(&to_rationals(g), &spec));
        }
    }
    Ok(ConeV::new(src.n + 1, &gens)?)
}

/// `Eff_i = Nef_i` of the universal hyperplane `X_{n,1}`.
pub fn hyperplane_cone(n: usize, i: usize) -> Result<ConeV, PushError> {
    let max = 2 * n - 1;
    if i > max {
        return Err(PushError::OutOfRange { i, max });
    }
    let e = |j: usize| -> Vec<BigInt> {
        (0..=n)
            .rev()
            .map(|t| BigInt::from((t == j) as i64))
            .collect()
    };
    let rays: Vec<Vec<Rational>> = if i < n {
        (0..=i).map(|j| to_rationals(&e(j))).collect()
    } else {
        (i + 1 - n..=n)
            .map(|j| {
                let v: Vec<BigInt> = e(j).iter().zip(e(j - 1)).map(|(a, b)| a + b).collect();
                to_rationals(&v)
            })
            .collect()
    };
    Ok(ConeV::new(n + 1, &rays)?)
}

/// `true` iff `a = λ·b` for some `λ > 0`.
pub fn is_positive_multiple(a: &[Rational], b: &[Rational]) -> bool {
    let Some(k) = b.iter().position(|x| !x.is_zero()) else {
        return a.iter().all(Zero::is_zero);
    };
    let ratio = &a[k] / &b[k];
    ratio.is_positive() && a.iter().zip(b).all(|(x, y)| *x == &ratio * y)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cone::cone_equal;
    use crate::rational::{frac, int};

    fn ints(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    fn cone(rays: &[&[i64]]) -> ConeV {
        ConeV::from_ints(3, rays).unwrap()
    }

    #[test]
    fn trivial_push_is_identity() {
        let eta = ints(&[3, -1, 7]);
        assert_eq!(push_tuple(&eta, &PushSpec::unit(2, 4, 0)), eta);
        let spec = PushSpec::new(2, 4, 0, frac(5, 2)).unwrap();
        assert_eq!(
            push_tuple(&eta, &spec),
            ints(&[3, -1, 7])
                .iter()
                .map(|x| x * frac(5, 2))
                .collect::<Vec<_>>()
        );
        assert!(PushSpec::new(2, 1, 1, int(0)).is_err());
    }

    #[test]
    fn fundamental_class_push() {
        for m in 2..6i64 {
            let big_m = (m + 2) * (m + 1) / 2 - 1;
            let i = big_m + 3;
            let spec = PushSpec::unit(2, big_m as usize, (i - big_m) as usize);
            let got = push_tuple(&ints(&[1, m, 0]), &spec);
            let want = vec![
                Rational::from_integer(binomial(i - 2, i - big_m)),
                Rational::from_integer(binomial(i - 1, i - big_m) * m),
                int(0),
            ];
            assert_eq!(got, want);
        }
    }

    #[test]
    fn typed_push_checks_dimension() {
        let p = RingPresentation::new(2, 1).unwrap();
        let q = RingPresentation::new(2, 3).unwrap();
        let eta = CovClass::new(p, 3, ints(&[1, 1, 0])).unwrap();
        let out = product_pushforward(&eta, &PushSpec::unit(2, 3, 2), q).unwrap();
        assert_eq!(out.dim(), 5);
        assert_eq!(out.coords(), &ints(&[3, 6, 0])[..]);
        assert!(product_pushforward(&eta, &PushSpec::unit(2, 2, 2), q).is_err());
    }

    #[test]
    fn hyperplane_cones() {
        assert_eq!(
            hyperplane_cone(2, 1).unwrap(),
            cone(&[&[0, 0, 1], &[0, 1, 0]])
        );
        assert_eq!(
            hyperplane_cone(2, 2).unwrap(),
            cone(&[&[1, 1, 0], &[0, 1, 1]])
        );
        assert_eq!(hyperplane_cone(2, 3).unwrap(), cone(&[&[1, 1, 0]]));
        assert!(hyperplane_cone(2, 4).is_err());
    }

    #[test]
    fn hyperplane_times_conic_space() {
        let src = ProductSource::new(2, 1, 2)
            .unwrap()
            .with_cones(4, |j| hyperplane_cone(2, j))
            .unwrap();
        let got = product_cone_pushforward(&src, 4).unwrap();
        assert!(cone_equal(&got, &cone(&[&[0, 0, 1], &[0, 1, 0], &[2, 3, 0]])).unwrap());
    }

    #[test]
    fn missing_source_is_named() {
        let src = ProductSource::new(2, 1, 2).unwrap();
        assert_eq!(
            product_cone_pushforward(&src, 4),
            Err(PushError::MissingSourceDimension { j: 0 })
        );
    }

    #[test]
    fn multiples() {
        assert!(is_positive_multiple(&ints(&[2, 4, 0]), &ints(&[1, 2, 0])));
        assert!(!is_positive_multiple(
            &ints(&[-2, -4, 0]),
            &ints(&[1, 2, 0])
        ));
        assert!(!is_positive_multiple(&ints(&[2, 5, 0]), &ints(&[1, 2, 0])));
    }
}
