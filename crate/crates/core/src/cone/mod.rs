//! Rational polyhedral cones: duality, extremal rays, membership, sums.
//!
//! Rays are stored as primitive integer vectors, deduplicated and sorted in
//! descending lexicographic order.

mod dd;
pub mod linalg;
mod simplex;

use std::fmt;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::rational::{primitive_integer_vector, to_rationals, Rational};

pub type Ray = Vec<BigInt>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConeError {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("cone is not pointed; lineality space has dimension {}", lineality.len())]
    NotPointed { lineality: Vec<Ray> },
}

/// A cone given by generators.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ConeV {
    ambient_dim: usize,
    rays: Vec<Ray>,
}

/// A cone given by inequalities `v·x ≥ 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ConeH {
    ambient_dim: usize,
    inequalities: Vec<Ray>,
}

/// Result of extremal ray extraction; lines are never dropped silently.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Extremal {
    Pointed(ConeV),
    NonPointed { rays: ConeV, lineality: Vec<Ray> },
}

fn canonical_set(rays: impl IntoIterator<Item = Ray>) -> Vec<Ray> {
    let mut out: Vec<Ray> = rays.into_iter().collect();
    out.sort_by(|a, b| b.cmp(a));
    out.dedup();
    out
}

fn canonical_ray(v: &[Rational]) -> Option<Ray> {
    primitive_integer_vector(v)
}

fn check_dim(expected: usize, found: usize) -> Result<(), ConeError> {
    if expected == found {
        Ok(())
    } else {
        Err(ConeError::DimensionMismatch { expected, found })
    }
}

impl ConeV {
    /// Canonicalizes and drops zero vectors.
    pub fn new<V: AsRef<[Rational]>>(ambient_dim: usize, rays: &[V]) -> Result<Self, ConeError> {
        let mut canon = Vec::with_capacity(rays.len());
        for r in rays {
            let r = r.as_ref();
            check_dim(ambient_dim, r.len())?;
            canon.extend(canonical_ray(r));
        }
        Ok(Self {
            ambient_dim,
            rays: canonical_set(canon),
        })
    }

    pub fn from_ints<V: AsRef<[i64]>>(ambient_dim: usize, rays: &[V]) -> Result<Self, ConeError> {
        let rows: Vec<Vec<Rational>> = rays
            .iter()
            .map(|r| {
                r.as_ref()
                    .iter()
                    .map(|&x| crate::rational::int(x))
                    .collect()
            })
            .collect();
        Self::new(ambient_dim, &rows)
    }

    pub fn zero(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            rays: Vec::new(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn rays(&self) -> &[Ray] {
        &self.rays
    }

    pub fn rational_rays(&self) -> Vec<Vec<Rational>> {
        self.rays.iter().map(|r| to_rationals(r)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.rays.is_empty()
    }

    /// Rank of the ray matrix, i.e. the dimension of the linear span.
    pub fn rank(&self) -> usize {
        linalg::rank(&self.rational_rays())
    }
}

impl ConeH {
    pub fn new<V: AsRef<[Rational]>>(
        ambient_dim: usize,
        inequalities: &[V],
    ) -> Result<Self, ConeError> {
        let ConeV { rays, .. } = ConeV::new(ambient_dim, inequalities)?;
        Ok(Self {
            ambient_dim,
            inequalities: rays,
        })
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn inequalities(&self) -> &[Ray] {
        &self.inequalities
    }

    pub fn contains(&self, x: &[Rational]) -> Result<bool, ConeError> {
        check_dim(self.ambient_dim, x.len())?;
        Ok(self
            .inequalities
            .iter()
            .all(|v| !crate::rational::dot(&to_rationals(v), x).is_negative()))
    }

    /// Generators of the cone cut out by the inequalities.
    pub fn to_v(&self) -> ConeV {
        let rows: Vec<Vec<Rational>> = self.inequalities.iter().map(|v| to_rationals(v)).collect();
        generators_to_cone(self.ambient_dim, dd::h_to_v(self.ambient_dim, &rows))
    }
}

fn generators_to_cone(ambient_dim: usize, g: dd::Generators) -> ConeV {
    let neg: Vec<Ray> = g
        .lineality
        .iter()
        .map(|l| l.iter().map(|x| -x).collect())
        .collect();
    ConeV {
        ambient_dim,
        rays: canonical_set(g.rays.into_iter().chain(g.lineality).chain(neg)),
    }
}

/// `{y : y·g ≥ 0 for every generator g}`; the dual of `{0}` is the whole
/// space, returned as `±` unit vectors.
pub fn dual_cone(c: &ConeV) -> ConeV {
    generators_to_cone(c.ambient_dim, dd::h_to_v(c.ambient_dim, &c.rational_rays()))
}

/// Facet inequalities (plus `±` equations) of the cone.
pub fn h_representation(c: &ConeV) -> ConeH {
    let d = dual_cone(c);
    ConeH {
        ambient_dim: d.ambient_dim,
        inequalities: d.rays,
    }
}

/// Dual of the functionals restricted to the span of `basis`, tested
/// through plain dot products and mapped back to ambient coordinates.
pub fn dual_in_span(
    ambient_dim: usize,
    basis: &[Vec<Rational>],
    functionals: &[Vec<Rational>],
) -> Result<ConeV, ConeError> {
    for b in basis {
        check_dim(ambient_dim, b.len())?;
    }
    for f in functionals {
        check_dim(ambient_dim, f.len())?;
    }
    let m = basis.len();
    if m == 0 {
        return Ok(ConeV::zero(ambient_dim));
    }
    let restricted: Vec<Vec<Rational>> = functionals
        .iter()
        .map(|f| basis.iter().map(|b| crate::rational::dot(f, b)).collect())
        .collect();
    let local = generators_to_cone(m, dd::h_to_v(m, &restricted));
    let back: Vec<Vec<Rational>> = local
        .rays
        .iter()
        .map(|lam| {
            (0..ambient_dim)
                .map(|t| {
                    lam.iter().zip(basis).fold(Rational::zero(), |acc, (l, b)| {
                        acc + Rational::from_integer(l.clone()) * &b[t]
                    })
                })
                .collect()
        })
        .collect();
    ConeV::new(ambient_dim, &back)
}

pub fn member(c: &ConeV, x: &[Rational]) -> Result<bool, ConeError> {
    check_dim(c.ambient_dim, x.len())?;
    Ok(simplex::in_conic_hull(&c.rational_rays(), x))
}

pub fn contains_cone(outer: &ConeV, inner: &ConeV) -> Result<bool, ConeError> {
    check_dim(outer.ambient_dim, inner.ambient_dim)?;
    let gens = outer.rational_rays();
    Ok(inner
        .rays
        .iter()
        .all(|r| simplex::in_conic_hull(&gens, &to_rationals(r))))
}

pub fn cone_equal(a: &ConeV, b: &ConeV) -> Result<bool, ConeError> {
    Ok(contains_cone(a, b)? && contains_cone(b, a)?)
}

/// Basis of the largest linear subspace contained in the cone.
pub fn lineality(c: &ConeV) -> Vec<Ray> {
    let d = dual_cone(c);
    linalg::nullspace(&d.rational_rays(), c.ambient_dim)
        .iter()
        .filter_map(|v| canonical_ray(v))
        .collect()
}

/// Drops every ray lying in the cone of the remaining ones.
pub fn extremal_rays(c: &ConeV) -> Extremal {
    let mut kept: Vec<Ray> = c.rays.clone();
    let mut idx = 0;
    while idx < kept.len() {
        let rest: Vec<Vec<Rational>> = kept
            .iter()
            .enumerate()
            .filter(|&(k, _)| k != idx)
            .map(|(_, r)| to_rationals(r))
            .collect();
        if simplex::in_conic_hull(&rest, &to_rationals(&kept[idx])) {
            kept.remove(idx);
        } else {
            idx += 1;
        }
    }
    let reduced = ConeV {
        ambient_dim: c.ambient_dim,
        rays: kept,
    };
    let lin = lineality(&reduced);
    if lin.is_empty() {
        Extremal::Pointed(reduced)
    } else {
        Extremal::NonPointed {
            rays: reduced,
            lineality: lin,
        }
    }
}

/// Minimal generators of a pointed cone.
pub fn pointed_extremal_rays(c: &ConeV) -> Result<ConeV, ConeError> {
    match extremal_rays(c) {
        Extremal::Pointed(r) => Ok(r),
        Extremal::NonPointed { lineality, .. } => Err(ConeError::NotPointed { lineality }),
    }
}

pub fn is_simplicial(c: &ConeV) -> Result<bool, ConeError> {
    let ext = pointed_extremal_rays(c)?;
    Ok(ext.rays.len() == ext.rank())
}

pub fn minkowski_sum(a: &ConeV, b: &ConeV) -> Result<ConeV, ConeError> {
    check_dim(a.ambient_dim, b.ambient_dim)?;
    Ok(ConeV {
        ambient_dim: a.ambient_dim,
        rays: canonical_set(a.rays.iter().chain(&b.rays).cloned()),
    })
}

fn fmt_ray(r: &Ray) -> String {
    let parts: Vec<String> = r.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

impl fmt::Display for ConeV {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.rays.iter().map(fmt_ray).collect();
        write!(f, "⟨{}⟩", parts.join(","))
    }
}

pub mod serde_rays {
    use super::*;
    use serde::de::Error;
    use serde_json::Number;
    use std::str::FromStr;

    pub fn serialize<S: Serializer>(rays: &[Ray], s: S) -> Result<S::Ok, S::Error> {
        let rows: Vec<Vec<Number>> = rays
            .iter()
            .map(|r| {
                r.iter()
                    .map(|x| Number::from_str(&x.to_string()).expect("integer literal"))
                    .collect()
            })
            .collect();
        rows.serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Ray>, D::Error> {
        let rows: Vec<Vec<Number>> = Vec::deserialize(d)?;
        rows.iter()
            .map(|r| {
                r.iter()
                    .map(|x| {
                        BigInt::from_str(&x.to_string())
                            .map_err(|_| D::Error::custom(format!("expected an integer, got {x}")))
                    })
                    .collect()
            })
            .collect()
    }
}

#[derive(Serialize, Deserialize)]
struct ConeVJson {
    ambient_dim: usize,
    #[serde(with = "serde_rays")]
    rays: Vec<Ray>,
}

#[derive(Serialize, Deserialize)]
struct ConeHJson {
    ambient_dim: usize,
    #[serde(with = "serde_rays")]
    inequalities: Vec<Ray>,
}

fn rows_to_rationals(rows: &[Ray]) -> Vec<Vec<Rational>> {
    rows.iter().map(|r| to_rationals(r)).collect()
}

impl Serialize for ConeV {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ConeVJson {
            ambient_dim: self.ambient_dim,
            rays: self.rays.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ConeV {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = ConeVJson::deserialize(d)?;
        ConeV::new(raw.ambient_dim, &rows_to_rationals(&raw.rays)).map_err(serde::de::Error::custom)
    }
}

impl Serialize for ConeH {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        ConeHJson {
            ambient_dim: self.ambient_dim,
            inequalities: self.inequalities.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ConeH {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = ConeHJson::deserialize(d)?;
        ConeH::new(raw.ambient_dim, &rows_to_rationals(&raw.inequalities))
            .map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn cone(dim: usize, rays: &[&[i64]]) -> ConeV {
        ConeV::from_ints(dim, rays).unwrap()
    }

    fn v(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn orthant_is_self_dual() {
        let c = cone(2, &[&[1, 0], &[0, 1]]);
        assert_eq!(dual_cone(&c), c);
    }

    #[test]
    fn planar_dual() {
        let c = cone(2, &[&[1, 0], &[1, 1]]);
        assert_eq!(dual_cone(&c), cone(2, &[&[0, 1], &[1, -1]]));
    }

    #[test]
    fn quadric_delta_star() {
        // functionals in (c_2, c_1, c_0) order
        let f = cone(
            3,
            &[&[1, -1, 1], &[-3, 2, 0], &[1, 0, 0], &[0, 1, 0], &[0, 0, 1]],
        );
        let d = dual_cone(&f);
        assert_eq!(d, cone(3, &[&[2, 3, 1], &[0, 1, 1], &[0, 0, 1]]));
        assert!(!member(&d, &v(&[1, 0, 0])).unwrap());
    }

    #[test]
    fn dual_of_zero_cone_is_space() {
        let d = dual_cone(&ConeV::zero(2));
        assert_eq!(d.rays().len(), 4);
        assert!(member(&d, &v(&[-3, 7])).unwrap());
    }

    #[test]
    fn extremal_examples() {
        let c = cone(2, &[&[1, 0], &[0, 1], &[1, 1]]);
        assert_eq!(
            extremal_rays(&c),
            Extremal::Pointed(cone(2, &[&[1, 0], &[0, 1]]))
        );

        let c = cone(3, &[&[2, 3, 0], &[1, 3, 0], &[0, 1, 1], &[0, 0, 1]]);
        assert_eq!(pointed_extremal_rays(&c).unwrap().rays().len(), 4);
        assert!(!is_simplicial(&c).unwrap());

        let c = cone(2, &[&[1, 1], &[-1, -1], &[1, 0]]);
        match extremal_rays(&c) {
            Extremal::NonPointed { lineality, .. } => {
                assert_eq!(lineality, vec![vec![BigInt::from(1), BigInt::from(1)]]);
            }
            other => panic!("expected a line, got {other:?}"),
        }
        assert!(is_simplicial(&c).is_err());
    }

    #[test]
    fn simpliciality() {
        assert!(is_simplicial(&cone(3, &[&[1, 1, 0], &[0, 1, 0], &[0, 0, 1]])).unwrap());
        assert!(is_simplicial(&cone(2, &[&[1, 0]])).unwrap());
    }

    #[test]
    fn equality_and_sums() {
        let a = cone(2, &[&[1, 0], &[0, 1]]);
        let b = cone(2, &[&[0, 1], &[1, 0], &[1, 1]]);
        assert!(cone_equal(&a, &b).unwrap());
        assert!(!cone_equal(&cone(2, &[&[1, 0]]), &a).unwrap());
        let s = minkowski_sum(&cone(2, &[&[1, 0]]), &cone(2, &[&[0, 1]])).unwrap();
        assert_eq!(s, a);
        assert_eq!(minkowski_sum(&a, &ConeV::zero(2)).unwrap(), a);
        assert!(minkowski_sum(&a, &ConeV::zero(3)).is_err());
    }

    #[test]
    fn dimension_errors() {
        assert!(ConeV::from_ints(2, &[&[1, 0, 0][..]]).is_err());
        assert!(member(&cone(2, &[&[1, 0]]), &v(&[1])).is_err());
    }

    #[test]
    fn canonical_form_ignores_order_and_scale() {
        let a = cone(3, &[&[0, 2, 4], &[3, 0, 0], &[0, 1, 2]]);
        let b = cone(3, &[&[1, 0, 0], &[0, 1, 2]]);
        assert_eq!(a, b);
        assert_eq!(a.to_string(), "⟨(1,0,0),(0,1,2)⟩");
    }

    #[test]
    fn span_dual() {
        // plane x_0 = 0 in ℚ³, cut by x_1 ≥ x_2 and x_2 ≥ 0
        let basis = vec![v(&[0, 1, 0]), v(&[0, 0, 1])];
        let f = vec![v(&[0, 1, -1]), v(&[0, 0, 1])];
        let c = dual_in_span(3, &basis, &f).unwrap();
        assert_eq!(c, cone(3, &[&[0, 1, 1], &[0, 1, 0]]));
    }

    #[test]
    fn json_round_trip() {
        let c = cone(3, &[&[2, 3, 0], &[0, 0, 1]]);
        let s = serde_json::to_string(&c).unwrap();
        assert_eq!(s, r#"{"ambient_dim":3,"rays":[[2,3,0],[0,0,1]]}"#);
        let back: ConeV = serde_json::from_str(&s).unwrap();
        assert_eq!(back, c);
        let h = h_representation(&cone(2, &[&[1, 0], &[0, 1]]));
        let s = serde_json::to_string(&h).unwrap();
        assert!(s.contains("inequalities"));
        assert!(h.contains(&v(&[1, 2])).unwrap());
        assert_eq!(h.to_v(), cone(2, &[&[1, 0], &[0, 1]]));
    }
}
