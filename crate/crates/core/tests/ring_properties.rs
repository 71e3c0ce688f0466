//! Ring axioms, π⁺ and ξₙ-integration against independent oracles.

mod common;

use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use kkwcas::ring::{sphere_integrate, sphere_moment, Axis, Monomial, MultiPoly, RatXi, Scalar, SymbolId};

fn scalar() -> impl Strategy<Value = Scalar> {
    (-6i64..=6, 1i64..=4, -6i64..=6, 1i64..=4)
        .prop_map(|(a, b, c, d)| &Scalar::ratio(a, b) + &(&Scalar::ratio(c, d) * &Scalar::i()))
}

const VARS: [SymbolId; 4] = [SymbolId::H1, SymbolId::S, SymbolId::Xi(1), SymbolId::ThetaP(Axis::Normal)];

fn poly() -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((scalar(), prop::collection::vec(0u32..3, 4)), 0..4).prop_map(|terms| {
        MultiPoly::from_terms(terms.into_iter().map(|(c, exps)| {
            let powers = VARS.iter().zip(exps).filter(|(_, e)| *e > 0).map(|(s, e)| (*s, e)).collect();
            (Monomial::from_powers(powers), c)
        }))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn scalar_field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        match a.inv() {
            Some(inv) => prop_assert!((&a * &inv).is_one()),
            None => prop_assert!(a.is_zero()),
        }
    }

    #[test]
    fn polynomial_ring_axioms(a in poly(), b in poly(), c in poly()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &MultiPoly::one(), a.clone());
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn polynomial_text_round_trip(a in poly()) {
        prop_assert_eq!(MultiPoly::parse(&a.to_string()).unwrap(), a);
    }
}

#[test]
fn piplus_idempotent_and_reconstructs() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..100 {
        let r = common::random_ratxi(&mut rng, 1, true);
        assert!(common::piplus_laws_hold(&r), "{r}");
    }
}

#[test]
fn line_integral_matches_quadrature() {
    let worst = common::line_integral_worst_error(50, 5);
    assert!(worst < 1e-8, "worst relative error {worst}");
}

#[test]
fn line_integral_rejects_non_decaying() {
    let r = RatXi::new(vec![MultiPoly::one(), MultiPoly::one()], 1, 1);
    assert!(r.line_integral().is_err());
}

#[test]
fn sphere_moments_match_oracle() {
    for &(alpha, m) in common::MOMENTS {
        assert_eq!(sphere_moment(alpha, m), common::gaussian_ratio_oracle(alpha, m), "{alpha:?} m={m}");
    }
    // Σξ_j² integrates to the sphere volume.
    for m in [3u32, 5] {
        let p = (1..=m as u8).fold(MultiPoly::zero(), |acc, j| &acc + &MultiPoly::var(SymbolId::Xi(j)).pow(2));
        assert_eq!(sphere_integrate(&p, m), MultiPoly::var(SymbolId::Omega(m as u8)));
    }
}

#[test]
fn sphere_moments_match_monte_carlo() {
    for mc in common::monte_carlo_moments(1_000_000, 2024) {
        assert!(mc.within_three_sigma(), "{:?} m={}: {} ± {} vs {}", mc.alpha, mc.m, mc.mean, mc.sigma, mc.exact);
    }
}
