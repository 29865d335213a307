//! Arithmetic of the stable range for conic-bundle curves on `X_{2,d}`:
//! the exponents `m`, `d₀` and the slopes `δ_min ≤ δ ≤ δ_max`.

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use super::{Case, TheoremError};
use crate::cone::{self, ConeV};
use crate::push::{is_positive_multiple, push_tuple, PushSpec};
use crate::rational::{binomial, int, serde_rational, Rational};
use crate::ring::{
    from_covariant, multiply_monomial, to_covariant, unit_tuple, CovClass, RingPresentation,
};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StableBounds {
    pub i: usize,
    pub m: usize,
    #[serde(rename = "M")]
    pub big_m: usize,
    pub d0: usize,
    #[serde(with = "serde_rational")]
    pub delta_min: Rational,
    #[serde(with = "serde_rational")]
    pub delta_max: Rational,
}

fn c2(p: usize) -> usize {
    binomial(p as i64, 2).to_usize().expect("small binomial")
}

fn invalid(i: usize, reason: &str) -> TheoremError {
    TheoremError::InvalidCase {
        case: Case { n: 2, d: 0, i },
        reason: reason.into(),
    }
}

pub fn stable_delta_bounds(i: usize) -> Result<StableBounds, TheoremError> {
    if i < 2 {
        return Err(invalid(i, "stable bounds need i >= 2"));
    }
    let mut m = 0;
    while c2(m + 3) <= i {
        m += 1;
    }
    let d0 = (1..)
        .find(|&d0: &usize| d0 + 2 > m && m + 2 <= c2(d0 + 2 - m))
        .expect("unbounded search");
    let (ii, mm) = (i as i64, m as i64);
    let delta_max = if i == 2 {
        Rational::one()
    } else {
        Rational::new(BigInt::from(2 * ii - 2), BigInt::from(mm + 3)).min(int(mm + 1))
    };
    let delta_min = Rational::new(BigInt::from(mm + 3), BigInt::from(2))
        .max(Rational::new(BigInt::from(ii - 1), BigInt::from(mm + 1)));
    Ok(StableBounds {
        i,
        m,
        big_m: c2(m + 2),
        d0,
        delta_min,
        delta_max,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MonotonicityReport {
    pub i_max: usize,
    pub ok: bool,
    /// First `i` where a check fails, with the failing statement.
    pub counterexample: Option<(usize, String)>,
}

/// `δ_max(i)/(i−1)` and `δ_min(i)/(i−1)` non-increasing on `2..=i_max`, and
/// `δ_max ≥ δ_min` from `i = 8` on.
pub fn check_650(i_max: usize) -> Result<MonotonicityReport, TheoremError> {
    let mut prev: Option<(Rational, Rational)> = None;
    for i in 2..=i_max {
        let b = stable_delta_bounds(i)?;
        let den = int(i as i64 - 1);
        let ratios = (&b.delta_max / &den, &b.delta_min / &den);
        let fail = |what: &str| {
            Ok(MonotonicityReport {
                i_max,
                ok: false,
                counterexample: Some((i, what.to_string())),
            })
        };
        if let Some((pmax, pmin)) = &prev {
            if ratios.0 > *pmax {
                return fail("delta_max/(i-1) increases");
            }
            if ratios.1 > *pmin {
                return fail("delta_min/(i-1) increases");
            }
        }
        if i >= 8 && b.delta_max < b.delta_min {
            return fail("delta_max < delta_min");
        }
        prev = Some(ratios);
    }
    Ok(MonotonicityReport {
        i_max,
        ok: true,
        counterexample: None,
    })
}

/// `(0,1,0)` is effective in codimension `c` on `X_{2,d}` iff `c ≥ d + 1`.
pub fn class_010_effective(c: u64, d: u64) -> bool {
    c > d
}

/// `⟨e_0, …, e_i⟩` in dimension `n + 1`.
pub fn stable_lowdim_cone(i: usize, n: usize) -> Result<ConeV, TheoremError> {
    if i >= n {
        return Err(invalid(i, "low-dimensional stable cone needs i < n"));
    }
    let rays: Vec<Vec<Rational>> = (0..=i).map(|j| unit_tuple(n, j)).collect();
    Ok(ConeV::new(n + 1, &rays)?)
}

/// The two effective classes on `X_{2,d₀}` whose span contains
/// `(1, δ_max, 0)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StableContainment {
    pub bounds: StableBounds,
    /// `[X_{2,m}]` times a linear series of dimension `i − M`.
    pub z: Vec<Rational>,
    /// `[X_{2,m+1}]` cut down by powers of `ξ`.
    pub z_prime: Vec<Rational>,
    pub proportional: bool,
    pub contains_delta_max: bool,
}

pub fn fundamental_push(i: usize) -> Result<(StableBounds, Vec<Rational>), TheoremError> {
    let b = stable_delta_bounds(i)?;
    let spec = PushSpec::unit(2, b.big_m, i - b.big_m);
    let z = push_tuple(&[int(1), int(b.m as i64), int(0)], &spec);
    Ok((b, z))
}

pub fn stable_containment(i: usize) -> Result<StableContainment, TheoremError> {
    if i < 8 {
        return Err(invalid(i, "the two-generator construction needs i >= 8"));
    }
    let (bounds, z) = fundamental_push(i)?;
    let m = bounds.m;
    let target = RingPresentation::new(2, bounds.d0 as u64)?;
    let series = RingPresentation::new(2, (bounds.d0 - m) as u64)?.r;
    if i - bounds.big_m > series {
        return Err(invalid(i, "linear series does not fit in Y_{2,d0-m}"));
    }
    let top = c2(m + 3);
    let fundamental = CovClass::new(target, top, vec![int(1), int(m as i64 + 1), int(0)])?;
    let cut = multiply_monomial(&from_covariant(&fundamental)?, 0, top - i);
    let z_prime = to_covariant(&cut)?.coords().to_vec();
    let proportional =
        is_positive_multiple(&z, &[int(m as i64 + 3), int(2 * i as i64 - 2), int(0)]);
    let span = ConeV::new(3, &[z.clone(), z_prime.clone()])?;
    let contains_delta_max = cone::member(&span, &[int(1), bounds.delta_max.clone(), int(0)])?;
    Ok(StableContainment {
        bounds,
        z,
        z_prime,
        proportional,
        contains_delta_max,
    })
}
