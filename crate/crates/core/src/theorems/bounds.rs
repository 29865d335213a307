//! Lower bounds from effective witnesses, upper bounds from nef
//! certificates, and their comparison.
//!
//! Pushforwards from products `X_{n,d₁} × Y_{n,d₂}` decompose the product's
//! effective cone as `Σ_j Eff_j(X_{n,d₁}) × [Λ_{i−j}]`; every bound that
//! uses one records this in its assumptions.

use std::cell::RefCell;
use std::collections::{BTreeMap, BTreeSet};

use num_traits::{One, Zero};
use serde::Serialize;

use super::certificates::{nef_certificates, CertKind};
use super::{presentation, Case, TheoremError};
use crate::cone::{self, ConeV, Extremal};
use crate::push::{hyperplane_cone, product_cone_pushforward, ProductSource};
use crate::rational::{binomial_usize, int, to_rationals, Rational};
use crate::ring::{covariant_basis, to_covariant, unit_tuple, NumClass, RingPresentation};

pub const KUNNETH_ASSUMPTION: &str =
    "product cones decompose as sums of Eff_j(X) x [linear series of dimension i-j]";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Equal,
    StrictBounds,
    Unknown,
}

impl std::fmt::Display for Status {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Status::Equal => "EQUAL",
            Status::StrictBounds => "STRICT_BOUNDS",
            Status::Unknown => "UNKNOWN",
        })
    }
}

/// A cone together with the sources that contributed generators.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bound {
    pub cone: ConeV,
    pub provenance: BTreeSet<String>,
    pub uses_products: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct BoundPair {
    pub case: Case,
    pub status: Status,
    pub lower: ConeV,
    pub upper: ConeV,
    pub simplicial: Option<bool>,
    pub certificates: Vec<String>,
    pub provenance: Vec<String>,
    pub assumptions: Vec<String>,
}

/// Memoizing evaluator; bounds at smaller degrees feed the pushforwards.
#[derive(Default)]
pub struct BoundEngine {
    lower: RefCell<BTreeMap<Case, Bound>>,
    upper: RefCell<BTreeMap<Case, Bound>>,
}

fn minimal(c: &ConeV) -> ConeV {
    match cone::extremal_rays(c) {
        Extremal::Pointed(r) => r,
        Extremal::NonPointed { rays, .. } => rays,
    }
}

impl BoundEngine {
    pub fn new() -> Self {
        Self::default()
    }

    fn product_cone(
        &self,
        n: usize,
        d1: u64,
        d2: u64,
        i: usize,
        source: &dyn Fn(usize) -> Result<ConeV, TheoremError>,
    ) -> Result<ConeV, TheoremError> {
        let mut src = ProductSource::new(n, d1, d2)?;
        for j in src.range(i) {
            src.cones.insert(j, source(j)?);
        }
        Ok(product_cone_pushforward(&src, i)?)
    }

    pub fn lower_bound(&self, n: usize, d: u64, i: usize) -> Result<Bound, TheoremError> {
        let case = Case { n, d, i };
        if let Some(b) = self.lower.borrow().get(&case) {
            return Ok(b.clone());
        }
        let b = self.compute_lower(case)?;
        self.lower.borrow_mut().insert(case, b.clone());
        Ok(b)
    }

    pub fn lower_bound_eff(&self, n: usize, d: u64, i: usize) -> Result<ConeV, TheoremError> {
        Ok(self.lower_bound(n, d, i)?.cone)
    }

    fn compute_lower(&self, case: Case) -> Result<Bound, TheoremError> {
        let Case { n, d, i } = case;
        let pres = presentation(n, d, i)?;
        let k = pres.dim_total - i;
        let mut gens: Vec<Vec<Rational>> = Vec::new();
        let mut provenance = BTreeSet::new();
        let mut uses_products = false;

        // effective cocycles of codimension c times h^a ξ^{k−c−a}
        let mut cocycle =
            |terms: &[(usize, Rational)], c: usize, label: &str| -> Result<(), TheoremError> {
                if c > k {
                    return Ok(());
                }
                for a in 0..=n.min(k - c) {
                    let shifted = terms.iter().map(|(x, q)| (x + a, q.clone()));
                    let cls = NumClass::from_h_coeffs(pres, k, shifted)?;
                    gens.push(to_covariant(&cls)?.coords().to_vec());
                }
                provenance.insert(label.to_string());
                Ok(())
            };
        cocycle(&[(0, Rational::one())], 0, "monomials h^a xi^b")?;
        if d >= 2 {
            cocycle(
                &[(n - 1, int(1)), (n, int(-1))],
                n,
                "point-on-line class h^(n-1)xi - h^n times monomials",
            )?;
        }
        if n == 2 {
            for e in 1..d {
                for c in 1..=binomial_usize(e as i64 + 2, 2) {
                    cocycle(
                        &[(1, int(e as i64)), (2, int(-(c as i64 - 1)))],
                        c,
                        &format!("eta_{{{e},{c}}} times monomials"),
                    )?;
                }
            }
            if i >= 1 && super::class_010_effective(k as u64, d) {
                gens.push(unit_tuple(2, 1));
                provenance.insert("(0,1,0) in codimension >= d+1".into());
            }
        }
        // e_j swept out by hypersurfaces through a fixed point set
        for j in 0..n {
            let room = j + pres.r >= binomial_usize((j as u64 + d) as i64, d as i64) + i;
            if j <= i && (i < n || room) {
                gens.push(unit_tuple(n, j));
                provenance.insert(format!("e_{j}"));
            }
        }
        if d == 1 && i < 2 * n {
            gens.extend(hyperplane_cone(n, i)?.rational_rays());
            provenance.insert("universal hyperplane cone".into());
        }
        if d == 2 && i == 2 * n && n >= 3 {
            let mut v = unit_tuple(n, n - 1);
            v[2] = int(1);
            gens.push(v);
            provenance.insert("e_(n-1) + e_(n-2) quadric witness".into());
        }
        for d1 in 1..d {
            let d2 = d - d1;
            let source = |j: usize| -> Result<ConeV, TheoremError> {
                if d1 == 1 {
                    Ok(hyperplane_cone(n, j)?)
                } else {
                    self.lower_bound_eff(n, d1, j)
                }
            };
            let pushed = self.product_cone(n, d1, d2, i, &source)?;
            if !pushed.is_zero() {
                gens.extend(pushed.rational_rays());
                provenance.insert(format!("pushforward from X_{{{n},{d1}}} x Y_{{{n},{d2}}}"));
                uses_products = true;
            }
        }

        for g in &gens {
            for j in (i + 1)..=n {
                if !g[n - j].is_zero() {
                    return Err(TheoremError::Internal {
                        case,
                        reason: format!("witness has d_{j} != 0"),
                    });
                }
            }
        }
        let cone = minimal(&ConeV::new(n + 1, &gens)?);
        Ok(Bound {
            cone,
            provenance,
            uses_products,
        })
    }

    fn certificate_dual(
        pres: RingPresentation,
        i: usize,
        functionals: &[Vec<Rational>],
    ) -> Result<ConeV, TheoremError> {
        let basis = covariant_basis(pres, i);
        Ok(cone::dual_in_span(pres.n + 1, &basis, functionals)?)
    }

    pub fn upper_bound(&self, n: usize, d: u64, i: usize) -> Result<Bound, TheoremError> {
        let case = Case { n, d, i };
        if let Some(b) = self.upper.borrow().get(&case) {
            return Ok(b.clone());
        }
        let b = self.compute_upper(case)?;
        self.upper.borrow_mut().insert(case, b.clone());
        Ok(b)
    }

    pub fn upper_bound_eff(&self, n: usize, d: u64, i: usize) -> Result<ConeV, TheoremError> {
        Ok(self.upper_bound(n, d, i)?.cone)
    }

    fn compute_upper(&self, case: Case) -> Result<Bound, TheoremError> {
        let Case { n, d, i } = case;
        let pres = presentation(n, d, i)?;
        let certs = nef_certificates(n, d, i)?;
        let functionals: Vec<Vec<Rational>> = certs
            .iter()
            .map(|c| c.functional.functional_vector())
            .collect();
        let mut gens = Self::certificate_dual(pres, i, &functionals)?.rational_rays();
        let mut provenance: BTreeSet<String> = certs.iter().map(|c| c.source.clone()).collect();
        let mut uses_products = false;

        let loci: BTreeSet<u64> = certs
            .iter()
            .filter_map(|c| match c.kind {
                CertKind::NefOffLocus { e } => Some(e),
                CertKind::Nef => None,
            })
            .collect();
        for e in loci {
            let source = |j: usize| -> Result<ConeV, TheoremError> {
                if e == 1 {
                    Ok(hyperplane_cone(n, j)?)
                } else {
                    self.upper_bound_eff(n, e, j)
                }
            };
            let pushed = self.product_cone(n, e, d - e, i, &source)?;
            gens.extend(pushed.rational_rays());
            provenance.insert(format!("locus X_{{{n},{e}}} x Y_{{{n},{}}}", d - e));
            uses_products = true;
        }
        let cone = minimal(&ConeV::new(n + 1, &gens)?);
        Ok(Bound {
            cone,
            provenance,
            uses_products,
        })
    }

    /// Dual of the monomial certificates alone: the bound with no further input.
    pub fn monomial_upper(&self, n: usize, d: u64, i: usize) -> Result<ConeV, TheoremError> {
        let pres = presentation(n, d, i)?;
        let functionals: Vec<Vec<Rational>> = (0..=n.min(i)).map(|a| unit_tuple(n, a)).collect();
        Ok(minimal(&Self::certificate_dual(pres, i, &functionals)?))
    }

    pub fn verify(&self, n: usize, d: u64, i: usize) -> Result<BoundPair, TheoremError> {
        let case = Case { n, d, i };
        let lower = self.lower_bound(n, d, i)?;
        let upper = self.upper_bound(n, d, i)?;
        for g in lower.cone.rays() {
            if !cone::member(&upper.cone, &to_rationals(g))? {
                return Err(TheoremError::Containment {
                    case,
                    ray: format!("{g:?}"),
                });
            }
        }
        let status = if cone::contains_cone(&lower.cone, &upper.cone)? {
            Status::Equal
        } else if cone::cone_equal(&upper.cone, &self.monomial_upper(n, d, i)?)? {
            Status::Unknown
        } else {
            Status::StrictBounds
        };
        let simplicial = cone::is_simplicial(&lower.cone).ok();
        let certificates = nef_certificates(n, d, i)?
            .iter()
            .map(|c| c.describe())
            .collect();
        let mut provenance: Vec<String> = lower
            .provenance
            .iter()
            .map(|p| format!("lower: {p}"))
            .collect();
        provenance.extend(upper.provenance.iter().map(|p| format!("upper: {p}")));
        let assumptions = if lower.uses_products || upper.uses_products {
            vec![KUNNETH_ASSUMPTION.to_string()]
        } else {
            Vec::new()
        };
        Ok(BoundPair {
            case,
            status,
            simplicial,
            lower: lower.cone,
            upper: upper.cone,
            certificates,
            provenance,
            assumptions,
        })
    }
}
