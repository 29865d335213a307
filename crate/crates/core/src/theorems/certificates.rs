//! Catalog of nef functionals on cycles of dimension `i`.
//!
//! A functional certifying dimension `i` has codimension `i`. Off-locus
//! certificates are nef only on cycles not supported on the image of
//! `X_{n,e} × Y_{n,d−e}`; they never count as globally nef.

use num_traits::One;
use serde::Serialize;

use super::TheoremError;
use crate::rational::{binomial_usize, int, Rational};
use crate::ring::{NumClass, RingPresentation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CertKind {
    Nef,
    NefOffLocus { e: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub functional: NumClass,
    pub kind: CertKind,
    pub source: String,
}

impl Certificate {
    pub fn is_global(&self) -> bool {
        self.kind == CertKind::Nef
    }

    pub fn describe(&self) -> String {
        match self.kind {
            CertKind::Nef => format!("{}: {} [nef]", self.source, self.functional),
            CertKind::NefOffLocus { e } => {
                format!(
                    "{}: {} [nef off X_{{n,{e}}} x Y]",
                    self.source, self.functional
                )
            }
        }
    }
}

/// `Σ c_a h^a ξ^{codim−a}` times `ξ^{i−codim}`, reduced.
fn times_xi(
    pres: RingPresentation,
    i: usize,
    terms: &[(usize, Rational)],
) -> Result<NumClass, TheoremError> {
    Ok(NumClass::from_h_coeffs(pres, i, terms.iter().cloned())?)
}

pub fn nef_certificates(n: usize, d: u64, i: usize) -> Result<Vec<Certificate>, TheoremError> {
    let pres = super::presentation(n, d, i)?;
    let mut out = Vec::new();
    let mut push = |terms: &[(usize, Rational)], kind: CertKind, source: String| {
        times_xi(pres, i, terms).map(|functional| {
            out.push(Certificate {
                functional,
                kind,
                source,
            })
        })
    };

    for a in 0..=n.min(i) {
        push(
            &[(a, Rational::one())],
            CertKind::Nef,
            format!("monomial h^{a}"),
        )?;
    }
    if d >= 2 && i >= n {
        push(
            &[(n - 1, int(1)), (n, int(-1))],
            CertKind::Nef,
            "point-on-line class h^(n-1)xi - h^n".into(),
        )?;
    }
    if d >= 2 && i >= 2 * n {
        let nn = n as i64;
        push(
            &[(n - 1, int(nn)), (n, int(-(nn + 1)))],
            CertKind::Nef,
            "rational normal curve class n h^(n-1)xi^(n+1) - (n+1)h^n xi^n".into(),
        )?;
    }
    if n == 2 {
        for e in 1..d {
            let top = binomial_usize(e as i64 + 2, 2);
            for c in 1..=i.min(top) {
                let kind = if c < top {
                    CertKind::Nef
                } else {
                    CertKind::NefOffLocus { e }
                };
                push(
                    &[(1, int(e as i64)), (2, int(-(c as i64 - 1)))],
                    kind,
                    format!(
                        "eta_{{{e},{c}}} = {e}h xi^{} - {}h^2 xi^{}",
                        c - 1,
                        c - 1,
                        c.saturating_sub(2)
                    ),
                )?;
            }
        }
    }
    if d == 2 && i == 2 * n && n >= 2 {
        push(
            &[(n - 2, int(1)), (n - 1, int(-1)), (n, int(1))],
            CertKind::NefOffLocus { e: 1 },
            "quadric facet h^(n-2)xi^3 - h^(n-1)xi^2 + h^n xi".into(),
        )?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{reduce, Polynomial};

    fn cls(n: usize, d: u64, s: &str) -> NumClass {
        reduce(
            &Polynomial::parse(s).unwrap(),
            RingPresentation::new(n, d).unwrap(),
        )
        .unwrap()
    }

    fn find<'a>(cs: &'a [Certificate], f: &NumClass) -> Option<&'a Certificate> {
        cs.iter().find(|c| &c.functional == f)
    }

    #[test]
    fn x23_dimension_four() {
        let cs = nef_certificates(2, 3, 4).unwrap();
        assert!(find(&cs, &cls(2, 3, "xi^4")).is_some());
        assert!(find(&cs, &cls(2, 3, "h^2*xi^2")).is_some());
        let c = find(&cs, &cls(2, 3, "h*xi^3 - 2*h^2*xi^2")).unwrap();
        assert_eq!(c.kind, CertKind::NefOffLocus { e: 1 });
        for c in &cs {
            assert_eq!(c.functional.codim(), 4);
        }
    }

    #[test]
    fn x23_dimension_five() {
        let cs = nef_certificates(2, 3, 5).unwrap();
        let c = find(&cs, &cls(2, 3, "2*h*xi^4 - 4*h^2*xi^3")).unwrap();
        assert_eq!(c.kind, CertKind::Nef);
    }

    #[test]
    fn conic_curves_use_monomials_only() {
        let cs = nef_certificates(2, 2, 1).unwrap();
        assert_eq!(cs.len(), 3);
        assert!(cs
            .iter()
            .all(|c| c.source.starts_with("monomial") || c.source.starts_with("eta")));
        let distinct: std::collections::BTreeSet<_> = cs
            .iter()
            .map(|c| c.functional.functional_vector())
            .collect();
        assert_eq!(distinct.len(), 2);
    }

    #[test]
    fn quadric_facet_only_in_middle_dimension() {
        let cs = nef_certificates(3, 2, 6).unwrap();
        assert!(cs.iter().any(|c| c.source.starts_with("quadric facet")));
        let cs = nef_certificates(3, 2, 5).unwrap();
        assert!(!cs.iter().any(|c| c.source.starts_with("quadric facet")));
    }
}
