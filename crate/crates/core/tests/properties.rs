use num_traits::{One, Zero};
use proptest::prelude::*;

use univhyp::cone::{self, ConeV};
use univhyp::push::{push_tuple, PushSpec};
use univhyp::rational::{frac, int, Rational};
use univhyp::ring::{
    self, from_covariant, multiply_monomial, to_covariant, NumClass, Polynomial, RingPresentation,
};

fn presentation() -> impl Strategy<Value = RingPresentation> {
    (1usize..=4, 1u64..=4).prop_map(|(n, d)| RingPresentation::new(n, d).unwrap())
}

fn rational() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=5).prop_map(|(a, b)| frac(a, b))
}

/// A random class supported on the reduced basis of `codim`.
fn class_in(pres: RingPresentation, codim: usize) -> impl Strategy<Value = NumClass> {
    let exps = pres.basis_exponents(codim);
    proptest::collection::vec(rational(), exps.len()).prop_map(move |cs| {
        NumClass::from_h_coeffs(pres, codim, exps.iter().copied().zip(cs)).unwrap()
    })
}

fn class() -> impl Strategy<Value = NumClass> {
    presentation()
        .prop_flat_map(|p| (Just(p), 0..=p.dim_total))
        .prop_flat_map(|(p, k)| class_in(p, k))
}

/// An arbitrary polynomial of homogeneous codimension, possibly far outside the basis.
fn polynomial() -> impl Strategy<Value = (RingPresentation, Polynomial)> {
    presentation()
        .prop_flat_map(|p| (Just(p), 0..=p.dim_total + 3))
        .prop_flat_map(|(p, k)| {
            let terms = proptest::collection::vec((0..=k, rational()), 1..4);
            (
                Just(p),
                terms.prop_map(move |ts| {
                    let mut poly = Polynomial::new();
                    for (a, c) in ts {
                        poly.add_term(a, k - a, c);
                    }
                    poly
                }),
            )
        })
}

fn int_cone(max_dim: usize, max_rays: usize) -> impl Strategy<Value = ConeV> {
    (1..=max_dim)
        .prop_flat_map(move |dim| {
            proptest::collection::vec(proptest::collection::vec(-4i64..=4, dim), 0..=max_rays)
        })
        .prop_filter_map("empty ray list has no dimension", |rays| {
            let dim = rays.first()?.len();
            ConeV::from_ints(dim, &rays).ok()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn reduction_is_idempotent((pres, p) in polynomial()) {
        let once = ring::reduce(&p, pres).unwrap();
        let twice = ring::reduce_in(&once.to_polynomial(), pres, once.codim()).unwrap();
        prop_assert_eq!(&once, &twice);
        for &a in once.coeffs().keys() {
            prop_assert!(pres.is_basis_monomial(once.codim(), a));
        }
    }

    #[test]
    fn reduction_is_a_ring_map((pres, p) in polynomial(), (_, q) in polynomial()) {
        let (Some(kp), Some(kq)) = (p.codim().unwrap(), q.codim().unwrap()) else { return Ok(()); };
        prop_assume!(kp + kq <= pres.dim_total + 3);
        let lhs = ring::reduce(&p.mul(&q), pres).unwrap();
        let rhs = ring::multiply(&ring::reduce(&p, pres).unwrap(), &ring::reduce(&q, pres).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn top_degree_of_a_class_matches_its_monomial_expansion(a in class()) {
        let pres = a.presentation();
        prop_assume!(a.codim() <= pres.dim_total);
        let top = multiply_monomial(&a, 0, pres.dim_total - a.codim());
        // ∫ h^n ξ^{r−1} = 1, ∫ h^{n−1} ξ^r = d, every other top monomial integrates to 0
        let mut want = Rational::zero();
        for (&x, c) in a.coeffs() {
            let b = pres.dim_total - x;
            if x == pres.n && b + 1 == pres.r {
                want += c;
            } else if x + 1 == pres.n && b == pres.r {
                want += c * int(pres.d as i64);
            }
        }
        prop_assert_eq!(ring::degree(&top).unwrap(), want);
    }

    #[test]
    fn covariant_round_trip(a in class()) {
        let c = to_covariant(&a).unwrap();
        prop_assert_eq!(from_covariant(&c).unwrap(), a);
    }

    #[test]
    fn xi_stability(a in class()) {
        let pres = a.presentation();
        let i = pres.dim_total - a.codim();
        prop_assume!(i > pres.n);
        let before = to_covariant(&a).unwrap();
        let after = to_covariant(&multiply_monomial(&a, 0, 1)).unwrap();
        prop_assert_eq!(after.coords(), before.coords());
    }

    #[test]
    fn triangular_relation(a in class()) {
        let pres = a.presentation();
        let i = pres.dim_total - a.codim();
        prop_assume!(pres.n <= i && i < pres.r);
        let c = to_covariant(&a).unwrap();
        let d = int(pres.d as i64);
        for j in 0..=pres.n {
            let lo = if j < pres.n { a.coeff(pres.n - j - 1) } else { Rational::zero() };
            prop_assert_eq!(c.d(j), a.coeff(pres.n - j) + &d * lo);
        }
    }

    #[test]
    fn pairing_is_bilinear(a in class(), t in rational()) {
        let pres = a.presentation();
        let i = pres.dim_total - a.codim();
        prop_assume!(i <= pres.dim_total);
        let cyc = to_covariant(&a).unwrap();
        for f in pres.basis_exponents(i) {
            let e = NumClass::monomial(pres, f, i - f, Rational::one());
            let direct = ring::degree(&ring::multiply(&e, &a).unwrap()).unwrap();
            prop_assert_eq!(ring::pair(&e, &cyc).unwrap(), direct.clone());
            prop_assert_eq!(ring::pair(&e.scale(&t), &cyc).unwrap(), direct * &t);
        }
    }

    #[test]
    fn dual_is_an_involution(c in int_cone(4, 6)) {
        let dd = cone::dual_cone(&cone::dual_cone(&c));
        prop_assert!(cone::cone_equal(&dd, &c).unwrap());
    }

    #[test]
    fn results_ignore_generator_order(c in int_cone(4, 6), seed in any::<u64>()) {
        let mut rays = c.rational_rays();
        let len = rays.len();
        if len > 1 {
            rays.rotate_left((seed as usize) % len);
            rays.reverse();
        }
        let shuffled = ConeV::new(c.ambient_dim(), &rays).unwrap();
        prop_assert_eq!(&shuffled, &c);
        prop_assert_eq!(cone::dual_cone(&shuffled), cone::dual_cone(&c));
        prop_assert_eq!(cone::extremal_rays(&shuffled), cone::extremal_rays(&c));
    }

    #[test]
    fn pointed_extremal_rays_are_irredundant(c in int_cone(4, 6)) {
        prop_assume!(cone::lineality(&c).is_empty());
        let ext = cone::pointed_extremal_rays(&c).unwrap();
        prop_assert!(cone::cone_equal(&ext, &c).unwrap());
        let rays = ext.rational_rays();
        for k in 0..rays.len() {
            let rest: Vec<Vec<Rational>> = rays.iter().enumerate().filter(|(t, _)| *t != k).map(|(_, r)| r.clone()).collect();
            let rest = ConeV::new(c.ambient_dim(), &rest).unwrap();
            prop_assert!(!cone::member(&rest, &rays[k]).unwrap());
        }
    }

    #[test]
    fn push_is_linear(
        n in 1usize..=3, s in 0usize..=6, t in 0usize..=6,
        x in proptest::collection::vec(rational(), 4),
        y in proptest::collection::vec(rational(), 4),
        q in rational(), lam in rational(),
    ) {
        prop_assume!(q > Rational::zero());
        let spec = PushSpec::new(n, s, t, q).unwrap();
        let (x, y) = (&x[..=n], &y[..=n]);
        let comb: Vec<Rational> = x.iter().zip(y).map(|(a, b)| a + &lam * b).collect();
        let lhs = push_tuple(&comb, &spec);
        let (px, py) = (push_tuple(x, &spec), push_tuple(y, &spec));
        let rhs: Vec<Rational> = px.iter().zip(&py).map(|(a, b)| a + &lam * b).collect();
        prop_assert_eq!(lhs, rhs);
    }
}
