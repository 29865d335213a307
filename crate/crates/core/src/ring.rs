//! The numerical ring `ℚ[h,ξ]/(h^{n+1}, Σ_i (−1)^i d^i h^i ξ^{r−i})` of the
//! universal degree-`d` hypersurface in `ℙⁿ × ℙʳ`, with `r = C(n+d,d) − 1`.
//!
//! A class of codimension `k` is stored over the reduced basis
//! `h^a ξ^{k−a}` with `a ≤ n` and `k − a ≤ r − 1`. Covariant coordinates of a
//! cycle of dimension `i` are `(d_n, …, d_0)` with `d_j = ∫ α·h^j ξ^{i−j}`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::rational::{binomial, format_rational, parse_rational, Rational};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RingError {
    #[error("invalid presentation: n = {n}, d = {d} (both must be at least 1)")]
    InvalidPresentation { n: usize, d: u64 },
    #[error("polynomial is not homogeneous (found codimensions {0} and {1})")]
    NonHomogeneous(usize, usize),
    #[error("classes live on different presentations")]
    PresentationMismatch,
    #[error("expected codimension {expected}, found {found}")]
    WrongCodimension { expected: usize, found: usize },
    #[error("cycle dimension {i} exceeds the total dimension {dim_total}")]
    DimensionOutOfRange { i: usize, dim_total: usize },
    #[error("covariant coordinates of length {found} (expected {expected})")]
    CoordinateLength { expected: usize, found: usize },
    #[error("coordinate d_{j} is nonzero for a cycle of dimension {i}")]
    UnsupportedCoordinate { j: usize, i: usize },
    #[error("coordinates are not those of a class of dimension {i}: h^{a} coefficient {coeff} has no basis monomial")]
    Inconsistent { i: usize, a: usize, coeff: String },
    #[error("pairing a codimension {codim} functional with a cycle of dimension {dim}")]
    DegreeMismatch { codim: usize, dim: usize },
    #[error("cannot parse polynomial {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

/// The data `(n, d)` together with the derived `r` and total dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingPresentation {
    pub n: usize,
    pub d: u64,
    pub r: usize,
    pub dim_total: usize,
}

impl RingPresentation {
    pub fn new(n: usize, d: u64) -> Result<Self, RingError> {
        if n == 0 || d == 0 {
            return Err(RingError::InvalidPresentation { n, d });
        }
        let r = (binomial(n as i64 + d as i64, d as i64) - BigInt::one())
            .to_usize()
            .expect("projective dimension fits in usize");
        Ok(Self {
            n,
            d,
            r,
            dim_total: r + n - 1,
        })
    }

    /// Coefficient of `h^i ξ^{r−i}` in the defining relation.
    pub fn relation_coefficient(&self, i: usize) -> Rational {
        let v = BigInt::from(self.d).pow(i as u32);
        let v = if i.is_multiple_of(2) { v } else { -v };
        Rational::from_integer(v)
    }

    /// `h`-exponents of the reduced basis in codimension `codim`, ascending.
    pub fn basis_exponents(&self, codim: usize) -> Vec<usize> {
        (0..=self.n.min(codim))
            .filter(|&a| codim - a < self.r)
            .collect()
    }

    pub fn is_basis_monomial(&self, codim: usize, a: usize) -> bool {
        a <= self.n && a <= codim && codim - a < self.r
    }
}

/// A raw polynomial in `h` and `ξ`: `(a, b) ↦ coefficient of h^a ξ^b`.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Polynomial {
    terms: BTreeMap<(usize, usize), Rational>,
}

impl Polynomial {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn monomial(a: usize, b: usize, coeff: Rational) -> Self {
        let mut p = Self::new();
        p.add_term(a, b, coeff);
        p
    }

    pub fn add_term(&mut self, a: usize, b: usize, coeff: Rational) {
        let e = self.terms.entry((a, b)).or_insert_with(Rational::zero);
        *e += coeff;
        if e.is_zero() {
            self.terms.remove(&(a, b));
        }
    }

    pub fn terms(&self) -> &BTreeMap<(usize, usize), Rational> {
        &self.terms
    }

    /// The common total degree, `None` for the zero polynomial.
    pub fn codim(&self) -> Result<Option<usize>, RingError> {
        let mut it = self.terms.keys().map(|&(a, b)| a + b);
        let Some(first) = it.next() else {
            return Ok(None);
        };
        for k in it {
            if k != first {
                return Err(RingError::NonHomogeneous(first, k));
            }
        }
        Ok(Some(first))
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        let mut out = Polynomial::new();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &other.terms {
                out.add_term(a1 + a2, b1 + b2, c1 * c2);
            }
        }
        out
    }

    /// Parses sums of terms like `2*h*xi^4 - 4*h^2*xi^3` or `3/2*h^2`.
    pub fn parse(input: &str) -> Result<Polynomial, RingError> {
        let fail = |reason: &str| RingError::Parse {
            input: input.to_string(),
            reason: reason.to_string(),
        };
        let s: String = input.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(fail("empty input"));
        }
        let mut terms: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut negative = false;
        for (idx, ch) in s.char_indices() {
            if (ch == '+' || ch == '-') && !(idx > 0 && s[..idx].ends_with('^')) {
                if !cur.is_empty() {
                    terms.push((negative, std::mem::take(&mut cur)));
                } else if idx > 0 {
                    return Err(fail("dangling sign"));
                }
                negative = ch == '-';
            } else {
                cur.push(ch);
            }
        }
        if cur.is_empty() {
            return Err(fail("trailing sign"));
        }
        terms.push((negative, cur));

        let mut out = Polynomial::new();
        for (neg, body) in terms {
            let mut coeff = Rational::one();
            let (mut a, mut b) = (0usize, 0usize);
            for factor in body.split('*') {
                if factor.is_empty() {
                    return Err(fail("empty factor"));
                }
                let (base, exp) = match factor.split_once('^') {
                    Some((base, e)) => {
                        let e: usize = e.parse().map_err(|_| fail("bad exponent"))?;
                        (base, e)
                    }
                    None => (factor, 1),
                };
                match base {
                    "h" | "H" => a += exp,
                    "xi" | "ξ" | "x" => b += exp,
                    num => {
                        if factor.contains('^') {
                            return Err(fail("exponent on a number"));
                        }
                        coeff *= parse_rational(num).map_err(|_| fail("unknown factor"))?;
                    }
                }
            }
            if neg {
                coeff = -coeff;
            }
            out.add_term(a, b, coeff);
        }
        Ok(out)
    }
}

fn fmt_monomial(coeff: &Rational, a: usize, b: usize, first: bool) -> String {
    let mut s = String::new();
    let abs = coeff.abs();
    if coeff.is_negative() {
        s.push_str(if first { "-" } else { " - " });
    } else if !first {
        s.push_str(" + ");
    }
    let mut factors: Vec<String> = Vec::new();
    if !abs.is_one() || (a == 0 && b == 0) {
        factors.push(if abs.is_integer() {
            abs.numer().to_string()
        } else {
            format_rational(&abs)
        });
    }
    match a {
        0 => {}
        1 => factors.push("h".into()),
        _ => factors.push(format!("h^{a}")),
    }
    match b {
        0 => {}
        1 => factors.push("xi".into()),
        _ => factors.push(format!("xi^{b}")),
    }
    s.push_str(&factors.join("*"));
    s
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (&(a, b), c)) in self.terms.iter().rev().enumerate() {
            f.write_str(&fmt_monomial(c, a, b, idx == 0))?;
        }
        Ok(())
    }
}

/// A homogeneous class over the reduced basis: `a ↦ coefficient of h^a ξ^{codim−a}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NumClass {
    pres: RingPresentation,
    codim: usize,
    coeffs: BTreeMap<usize, Rational>,
}

impl NumClass {
    pub fn zero(pres: RingPresentation, codim: usize) -> Self {
        Self {
            pres,
            codim,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(pres: RingPresentation) -> Self {
        reduce_terms(pres, 0, [(0, Rational::one())])
    }

    /// The reduced form of `c·h^a ξ^b`.
    pub fn monomial(pres: RingPresentation, a: usize, b: usize, c: Rational) -> Self {
        reduce_terms(pres, a + b, [(a, c)])
    }

    /// The reduced form of `Σ_a c_a h^a ξ^{codim−a}`; terms with `a > codim` are rejected.
    pub fn from_h_coeffs(
        pres: RingPresentation,
        codim: usize,
        coeffs: impl IntoIterator<Item = (usize, Rational)>,
    ) -> Result<Self, RingError> {
        let coeffs: Vec<(usize, Rational)> = coeffs.into_iter().collect();
        if let Some(&(a, _)) = coeffs.iter().find(|(a, c)| *a > codim && !c.is_zero()) {
            return Err(RingError::WrongCodimension {
                expected: codim,
                found: a,
            });
        }
        Ok(reduce_terms(pres, codim, coeffs))
    }

    pub fn presentation(&self) -> RingPresentation {
        self.pres
    }

    pub fn codim(&self) -> usize {
        self.codim
    }

    pub fn coeffs(&self) -> &BTreeMap<usize, Rational> {
        &self.coeffs
    }

    /// Coefficient `c_a` of `h^a ξ^{codim−a}`.
    pub fn coeff(&self, a: usize) -> Rational {
        self.coeffs.get(&a).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `(c_n, …, c_0)`, the layout used when pairing against covariant tuples.
    pub fn functional_vector(&self) -> Vec<Rational> {
        (0..=self.pres.n).rev().map(|a| self.coeff(a)).collect()
    }

    pub fn to_polynomial(&self) -> Polynomial {
        let mut p = Polynomial::new();
        for (&a, c) in &self.coeffs {
            p.add_term(a, self.codim - a, c.clone());
        }
        p
    }

    pub fn scale(&self, q: &Rational) -> NumClass {
        NumClass::from_h_coeffs(
            self.pres,
            self.codim,
            self.coeffs.iter().map(|(&a, c)| (a, c * q)),
        )
        .expect("exponents already valid")
    }

    pub fn add(&self, other: &NumClass) -> Result<NumClass, RingError> {
        if self.pres != other.pres {
            return Err(RingError::PresentationMismatch);
        }
        if self.codim != other.codim {
            return Err(RingError::WrongCodimension {
                expected: self.codim,
                found: other.codim,
            });
        }
        let terms = self
            .coeffs
            .iter()
            .chain(&other.coeffs)
            .map(|(&a, c)| (a, c.clone()));
        Ok(reduce_terms(self.pres, self.codim, terms))
    }
}

impl fmt::Display for NumClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.to_polynomial().fmt(f)
    }
}

/// One ascending pass over the `h`-exponent: rewriting `ξ^r` only raises it.
fn reduce_terms(
    pres: RingPresentation,
    codim: usize,
    terms: impl IntoIterator<Item = (usize, Rational)>,
) -> NumClass {
    let mut work = vec![Rational::zero(); pres.n + 1];
    for (a, c) in terms {
        if a <= pres.n && a <= codim {
            work[a] += c;
        }
    }
    let mut coeffs = BTreeMap::new();
    for a in 0..=pres.n.min(codim) {
        let c = std::mem::take(&mut work[a]);
        if c.is_zero() {
            continue;
        }
        if codim - a < pres.r {
            coeffs.insert(a, c);
            continue;
        }
        // ξ^r = Σ_{i≥1} (−1)^{i+1} d^i h^i ξ^{r−i}
        for i in 1..=pres.n - a {
            work[a + i] -= &c * pres.relation_coefficient(i);
        }
    }
    NumClass {
        pres,
        codim,
        coeffs,
    }
}

pub fn reduce(p: &Polynomial, pres: RingPresentation) -> Result<NumClass, RingError> {
    let Some(codim) = p.codim()? else {
        return Ok(NumClass::zero(pres, 0));
    };
    Ok(reduce_terms(
        pres,
        codim,
        p.terms().iter().map(|(&(a, _), c)| (a, c.clone())),
    ))
}

/// Reduces a polynomial known to live in `codim`; the zero polynomial is given that codimension.
pub fn reduce_in(
    p: &Polynomial,
    pres: RingPresentation,
    codim: usize,
) -> Result<NumClass, RingError> {
    match p.codim()? {
        None => Ok(NumClass::zero(pres, codim)),
        Some(k) if k == codim => reduce(p, pres),
        Some(k) => Err(RingError::WrongCodimension {
            expected: codim,
            found: k,
        }),
    }
}

pub fn multiply(a: &NumClass, b: &NumClass) -> Result<NumClass, RingError> {
    if a.pres != b.pres {
        return Err(RingError::PresentationMismatch);
    }
    let mut work: BTreeMap<usize, Rational> = BTreeMap::new();
    for (&x, cx) in &a.coeffs {
        for (&y, cy) in &b.coeffs {
            *work.entry(x + y).or_insert_with(Rational::zero) += cx * cy;
        }
    }
    Ok(reduce_terms(a.pres, a.codim + b.codim, work))
}

/// `h^a ξ^b · α`.
pub fn multiply_monomial(alpha: &NumClass, a: usize, b: usize) -> NumClass {
    reduce_terms(
        alpha.pres,
        alpha.codim + a + b,
        alpha.coeffs.iter().map(|(&x, c)| (x + a, c.clone())),
    )
}

/// `∫ α` for a top-codimension class: the coefficient of `h^n ξ^{r−1}`.
pub fn degree(a: &NumClass) -> Result<Rational, RingError> {
    if a.codim != a.pres.dim_total {
        return Err(RingError::WrongCodimension {
            expected: a.pres.dim_total,
            found: a.codim,
        });
    }
    Ok(a.coeff(a.pres.n))
}

/// A cycle of dimension `i` in covariant coordinates, stored as `(d_n, …, d_0)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CovClass {
    pres: RingPresentation,
    i: usize,
    coords: Vec<Rational>,
}

impl CovClass {
    /// Validates the length and the vanishing of `d_j` for `j > i`.
    pub fn new(pres: RingPresentation, i: usize, coords: Vec<Rational>) -> Result<Self, RingError> {
        if i > pres.dim_total {
            return Err(RingError::DimensionOutOfRange {
                i,
                dim_total: pres.dim_total,
            });
        }
        if coords.len() != pres.n + 1 {
            return Err(RingError::CoordinateLength {
                expected: pres.n + 1,
                found: coords.len(),
            });
        }
        for j in (i + 1)..=pres.n {
            if !coords[pres.n - j].is_zero() {
                return Err(RingError::UnsupportedCoordinate { j, i });
            }
        }
        Ok(Self { pres, i, coords })
    }

    pub fn presentation(&self) -> RingPresentation {
        self.pres
    }

    pub fn dim(&self) -> usize {
        self.i
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    /// `d_j`.
    pub fn d(&self, j: usize) -> Rational {
        self.coords[self.pres.n - j].clone()
    }
}

pub fn to_covariant(a: &NumClass) -> Result<CovClass, RingError> {
    let pres = a.pres;
    if a.codim > pres.dim_total {
        return Err(RingError::DimensionOutOfRange {
            i: a.codim,
            dim_total: pres.dim_total,
        });
    }
    let i = pres.dim_total - a.codim;
    let coords = (0..=pres.n)
        .rev()
        .map(|j| {
            if j > i {
                Rational::zero()
            } else {
                degree(&multiply_monomial(a, j, i - j)).expect("top codimension")
            }
        })
        .collect();
    CovClass::new(pres, i, coords)
}

/// Inverts `d_j = c_{n−j} + d·c_{n−j−1}` starting from `c_0 = d_n`.
pub fn from_covariant(c: &CovClass) -> Result<NumClass, RingError> {
    let pres = c.pres;
    let codim = pres.dim_total - c.i;
    let d = Rational::from_integer(BigInt::from(pres.d));
    let mut prev = Rational::zero();
    let mut coeffs = Vec::new();
    for a in 0..=pres.n {
        let ca = c.d(pres.n - a) - &d * &prev;
        if !ca.is_zero() {
            if !pres.is_basis_monomial(codim, a) {
                return Err(RingError::Inconsistent {
                    i: c.i,
                    a,
                    coeff: format_rational(&ca),
                });
            }
            coeffs.push((a, ca.clone()));
        }
        prev = ca;
    }
    Ok(NumClass {
        pres,
        codim,
        coeffs: coeffs.into_iter().collect(),
    })
}

/// `Σ_j c_j d_j`, the intersection number of a codimension `i` functional
/// with an `i`-cycle.
pub fn pair(functional: &NumClass, cycle: &CovClass) -> Result<Rational, RingError> {
    if functional.pres != cycle.pres {
        return Err(RingError::PresentationMismatch);
    }
    if functional.codim != cycle.i {
        return Err(RingError::DegreeMismatch {
            codim: functional.codim,
            dim: cycle.i,
        });
    }
    Ok(crate::rational::dot(
        &functional.functional_vector(),
        &cycle.coords,
    ))
}

/// Covariant tuples of the reduced basis monomials of codimension `dim_total − i`, in ascending `h`-exponent.
pub fn covariant_basis(pres: RingPresentation, i: usize) -> Vec<Vec<Rational>> {
    if i > pres.dim_total {
        return Vec::new();
    }
    let codim = pres.dim_total - i;
    pres.basis_exponents(codim)
        .into_iter()
        .map(|a| {
            let m = NumClass::monomial(pres, a, codim - a, Rational::one());
            to_covariant(&m).expect("codimension in range").coords
        })
        .collect()
}

/// `e_j` as an `(n+1)`-tuple in `(d_n, …, d_0)` layout.
pub fn unit_tuple(n: usize, j: usize) -> Vec<Rational> {
    (0..=n)
        .rev()
        .map(|t| {
            if t == j {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
        .collect()
}

#[derive(Serialize, Deserialize)]
struct NumClassJson {
    n: usize,
    d: u64,
    codim: usize,
    coeffs: BTreeMap<String, String>,
}

#[derive(Serialize, Deserialize)]
struct CovClassJson {
    n: usize,
    d: u64,
    i: usize,
    #[serde(with = "crate::rational::serde_rational_vec")]
    coords: Vec<Rational>,
}

impl Serialize for NumClass {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        NumClassJson {
            n: self.pres.n,
            d: self.pres.d,
            codim: self.codim,
            coeffs: self
                .coeffs
                .iter()
                .map(|(a, c)| (a.to_string(), format_rational(c)))
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for NumClass {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let raw = NumClassJson::deserialize(d)?;
        let pres = RingPresentation::new(raw.n, raw.d).map_err(D::Error::custom)?;
        let mut terms = Vec::new();
        for (a, c) in &raw.coeffs {
            let a: usize = a
                .parse()
                .map_err(|_| D::Error::custom(format!("bad exponent {a:?}")))?;
            terms.push((a, parse_rational(c).map_err(D::Error::custom)?));
        }
        NumClass::from_h_coeffs(pres, raw.codim, terms).map_err(D::Error::custom)
    }
}

impl Serialize for CovClass {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        CovClassJson {
            n: self.pres.n,
            d: self.pres.d,
            i: self.i,
            coords: self.coords.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for CovClass {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        use serde::de::Error;
        let raw = CovClassJson::deserialize(d)?;
        let pres = RingPresentation::new(raw.n, raw.d).map_err(D::Error::custom)?;
        CovClass::new(pres, raw.i, raw.coords).map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn p22() -> RingPresentation {
        RingPresentation::new(2, 2).unwrap()
    }

    fn cls(pres: RingPresentation, s: &str) -> NumClass {
        reduce(&Polynomial::parse(s).unwrap(), pres).unwrap()
    }

    fn ints(xs: &[i64]) -> Vec<Rational> {
        xs.iter().map(|&x| int(x)).collect()
    }

    #[test]
    fn presentation_numbers() {
        let p = p22();
        assert_eq!((p.r, p.dim_total), (5, 6));
        let p = RingPresentation::new(3, 2).unwrap();
        assert_eq!((p.r, p.dim_total), (9, 11));
        assert!(RingPresentation::new(0, 2).is_err());
    }

    #[test]
    fn reduction_examples() {
        let p = p22();
        assert_eq!(cls(p, "xi^5"), cls(p, "2*h*xi^4 - 4*h^2*xi^3"));
        assert!(cls(p, "xi^6").is_zero());
        assert_eq!(cls(p, "h^2*xi^3").to_string(), "h^2*xi^3");
        assert!(reduce(&Polynomial::parse("h + xi^2").unwrap(), p).is_err());
    }

    #[test]
    fn multiplication_examples() {
        let p = p22();
        assert!(multiply(&cls(p, "h"), &cls(p, "h^2")).unwrap().is_zero());
        let x = multiply(&cls(p, "h*xi - h^2"), &cls(p, "xi")).unwrap();
        assert_eq!(x, cls(p, "h*xi^2 - h^2*xi"));
        assert_eq!(
            multiply(&cls(p, "xi^4"), &cls(p, "xi")).unwrap(),
            cls(p, "xi^5")
        );
        let q = RingPresentation::new(2, 3).unwrap();
        assert_eq!(
            multiply(&cls(p, "h"), &cls(q, "h")),
            Err(RingError::PresentationMismatch)
        );
    }

    #[test]
    fn degree_examples() {
        let p = p22();
        assert_eq!(degree(&cls(p, "h^2*xi^4")).unwrap(), int(1));
        assert_eq!(degree(&cls(p, "h*xi^5")).unwrap(), int(2));
        assert_eq!(degree(&cls(p, "xi^6")).unwrap(), int(0));
        assert!(degree(&cls(p, "xi^5")).is_err());
    }

    #[test]
    fn covariant_examples() {
        let p = p22();
        assert_eq!(
            to_covariant(&cls(p, "xi")).unwrap().coords(),
            &ints(&[1, 2, 0])[..]
        );
        assert_eq!(
            to_covariant(&cls(p, "h")).unwrap().coords(),
            &ints(&[0, 1, 2])[..]
        );
        for m in 1..=5 {
            let q = RingPresentation::new(2, m).unwrap();
            let c = to_covariant(&NumClass::one(q)).unwrap();
            assert_eq!(c.coords(), &ints(&[1, m as i64, 0])[..]);
        }
    }

    #[test]
    fn from_covariant_examples() {
        let p = p22();
        let c = CovClass::new(p, 5, ints(&[1, 2, 0])).unwrap();
        assert_eq!(from_covariant(&c).unwrap(), cls(p, "xi"));
        for i in 2..=4 {
            let c = CovClass::new(p, i, ints(&[0, 0, 1])).unwrap();
            let a = from_covariant(&c).unwrap();
            assert_eq!(a.coeffs().len(), 1);
            assert_eq!(a.coeff(2), int(1));
        }
        // h² has codimension 2, so e_0 is no class in dimensions 5 and 6
        for i in 5..=6 {
            let c = CovClass::new(p, i, ints(&[0, 0, 1])).unwrap();
            assert!(from_covariant(&c).is_err());
        }
        let c = CovClass::new(p, 3, ints(&[0, 0, 0])).unwrap();
        assert!(from_covariant(&c).unwrap().is_zero());
        // the top cycle only has the fundamental class
        let c = CovClass::new(p, 6, ints(&[1, 0, 0])).unwrap();
        assert!(matches!(
            from_covariant(&c),
            Err(RingError::Inconsistent { .. })
        ));
        assert!(CovClass::new(p, 1, ints(&[1, 0, 0])).is_err());
    }

    #[test]
    fn pairing_examples() {
        let p = p22();
        let cyc = CovClass::new(p, 4, ints(&[2, 3, 1])).unwrap();
        assert_eq!(pair(&cls(p, "h^2*xi^2"), &cyc).unwrap(), int(2));
        assert_eq!(
            pair(&cls(p, "xi^4 - h*xi^3 + h^2*xi^2"), &cyc).unwrap(),
            int(0)
        );
        let cyc = CovClass::new(p, 4, ints(&[0, 1, 1])).unwrap();
        assert_eq!(
            pair(&cls(p, "2*h*xi^3 - 3*h^2*xi^2"), &cyc).unwrap(),
            int(2)
        );
        // agrees with integrating the product
        let f = cls(p, "2*h*xi^3 - 3*h^2*xi^2");
        let prod = multiply(&f, &from_covariant(&cyc).unwrap()).unwrap();
        assert_eq!(degree(&prod).unwrap(), int(2));
        assert!(pair(&cls(p, "xi^3"), &cyc).is_err());
    }

    #[test]
    fn parser_and_display() {
        let q = Polynomial::parse("2*h*xi^4-4*h^2*xi^3").unwrap();
        assert_eq!(q.to_string(), "-4*h^2*xi^3 + 2*h*xi^4");
        let q = Polynomial::parse("-3/2*h^2 + xi").unwrap();
        assert_eq!(q.terms().len(), 2);
        assert!(Polynomial::parse("2*y").is_err());
        assert!(Polynomial::parse("h+").is_err());
        assert!(Polynomial::parse("").is_err());
        assert_eq!(Polynomial::parse("1").unwrap().to_string(), "1");
    }

    #[test]
    fn json_shapes() {
        let p = p22();
        let a = cls(p, "2*h*xi^4 - 4*h^2*xi^3");
        let s = serde_json::to_string(&a).unwrap();
        assert_eq!(
            s,
            r#"{"n":2,"d":2,"codim":5,"coeffs":{"1":"2/1","2":"-4/1"}}"#
        );
        assert_eq!(serde_json::from_str::<NumClass>(&s).unwrap(), a);
        let c = to_covariant(&cls(p, "xi")).unwrap();
        let s = serde_json::to_string(&c).unwrap();
        assert_eq!(s, r#"{"n":2,"d":2,"i":5,"coords":["1/1","2/1","0/1"]}"#);
        assert_eq!(serde_json::from_str::<CovClass>(&s).unwrap(), c);
    }
}
