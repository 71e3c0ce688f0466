//! Heat coefficients of the Witten deformation against brute-force oracles.

use num_rational::BigRational;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use kkwcas::ring::{Invariant, MultiPoly, Scalar, SymbolId};
use kkwcas::spectral::{
    curvature_form_trace, curvature_form_trace_matrix, heat_coefficients, spectral_asymptotics, vanishing_trace_failures,
    witten_endomorphism, CurvatureData,
};

fn random_curvature(rng: &mut ChaCha8Rng) -> CurvatureData {
    CurvatureData::numeric(4, |_| BigRational::new(rng.random_range(-20..=20).into(), rng.random_range(1..=7).into()))
}

#[test]
fn omega_trace_against_matrix_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..20 {
        let d = random_curvature(&mut rng);
        assert!(d.has_symmetries());
        let oracle = curvature_form_trace_matrix(&d);
        assert_eq!(oracle, d.riemann_square().scale(&Scalar::from_int(-4)));
        assert_eq!(curvature_form_trace(&d), oracle);
    }
}

#[test]
fn numeric_scalar_curvature_convention() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let d = random_curvature(&mut rng);
    assert_eq!(&d.s + &d.ricci_contraction(), MultiPoly::zero());
    // tr E = −4s for θ = 0.
    let tr_e = witten_endomorphism(&d).trace().as_constant().unwrap();
    assert_eq!(tr_e, d.s.scale(&Scalar::from_int(-4)));
}

#[test]
fn a4_vector_and_closed_manifold_flag() {
    let d = CurvatureData::symbolic(4);
    let closed = heat_coefficients(&d, true).unwrap();
    let v: Vec<String> = closed.a4_vector.entries().iter().map(|x| x.to_string()).collect();
    assert_eq!(v, ["20", "2880", "180", "480", "-32", "32", "-120"]);
    let open = heat_coefficients(&d, false).unwrap();
    let diff = (&open.a4 - &closed.a4).scale(&Scalar::from_int(5760));
    assert_eq!(diff, MultiPoly::parse("48*lap_s + 960*lap_theta2").unwrap());
    assert_eq!(closed.a2, MultiPoly::parse("-1/12*s - theta2").unwrap());
}

#[test]
fn asymptotics_weights() {
    let d = CurvatureData::symbolic(4);
    let c = heat_coefficients(&d, true).unwrap();
    let two = BigRational::from_integer(2.into());
    let f = spectral_asymptotics(&c, &BigRational::one(), &two, &BigRational::one());
    let by_power = f.collect_in(SymbolId::Lambda);
    assert_eq!(by_power[4], MultiPoly::var(SymbolId::Inv(Invariant::Vol)));
    assert_eq!(by_power[2], c.a2.scale(&Scalar::from_int(2)));
    assert_eq!(by_power[0], c.a4);
}

#[test]
fn vanishing_traces_exhaustive() {
    assert_eq!(vanishing_trace_failures(4), 0);
}
