//! Oracles shared by the property tests and the acceptance harness.
#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use kkwcas::clifford::{generators, SignedPerm};
use kkwcas::ring::{sphere_moment, Monomial, MultiPoly, RatXi, Scalar, SymbolId};

pub fn same_up_to_sign(p: &SignedPerm, q: &SignedPerm, sign: i8) -> bool {
    (0..p.dim() as u32).all(|s| {
        let (tp, sp) = p.column(s);
        let (tq, sq) = q.column(s);
        tp == tq && sp == sign * sq
    })
}

/// c_i² = −1, c̄_i² = 1, all distinct generators anticommute, traceless
/// products; every index pair of the explicit ε/ι model.
pub fn clifford_relations_hold(n: usize) -> bool {
    let g = generators(n).unwrap();
    let mut ok = g.id.trace() == 1i64 << n;
    for i in 0..n {
        for j in 0..n {
            let cc = g.c[i].compose(&g.c[j]);
            let bb = g.cbar[i].compose(&g.cbar[j]);
            let cb = g.cbar[j].compose(&g.c[i]);
            if i == j {
                ok &= same_up_to_sign(&cc, &g.id, -1) && same_up_to_sign(&bb, &g.id, 1);
            } else {
                ok &= same_up_to_sign(&cc, &g.c[j].compose(&g.c[i]), -1)
                    && same_up_to_sign(&bb, &g.cbar[j].compose(&g.cbar[i]), -1)
                    && cc.trace() == 0
                    && bb.trace() == 0;
            }
            ok &= same_up_to_sign(&g.c[i].compose(&g.cbar[j]), &cb, -1) && cb.trace() == 0;
        }
    }
    ok
}

/// Numerator degree `a + b + extra` with Gaussian-rational coefficients,
/// sometimes times `h1` when `symbolic`.
pub fn random_ratxi(rng: &mut ChaCha8Rng, extra: i64, symbolic: bool) -> RatXi {
    let a = rng.random_range(0..4u32);
    let b = rng.random_range(0..4u32);
    let deg = (a as i64 + b as i64 + extra).max(0) as usize;
    let num = (0..=deg)
        .map(|_| {
            let c = MultiPoly::constant(Scalar::new(
                BigRational::new(rng.random_range(-7..=7).into(), rng.random_range(1..=3).into()),
                BigRational::new(rng.random_range(-3..=3).into(), 1.into()),
            ));
            if symbolic && rng.random_bool(0.3) {
                &c * &MultiPoly::var(SymbolId::H1)
            } else {
                c
            }
        })
        .collect();
    RatXi::new(num, a, b)
}

/// π⁺ is idempotent, the three parts sum back, and each part has the right poles.
pub fn piplus_laws_hold(r: &RatXi) -> bool {
    let (upper, lower, poly) = r.principal_parts();
    upper.upper_part() == upper
        && &(&upper + &lower) + &poly == *r
        && upper.pole_lower() == 0
        && lower.pole_upper() == 0
        && poly.is_polynomial()
        && upper.num_degree().is_none_or(|d| d < upper.pole_upper() as usize)
}

pub fn pi_coefficient(p: &MultiPoly) -> Option<(f64, f64)> {
    let c = p.coeff(&Monomial::var(SymbolId::Pi));
    let rest = p - &MultiPoly::term(c.clone(), Monomial::var(SymbolId::Pi));
    rest.is_zero().then(|| c.to_f64_pair())
}

/// ∫_ℝ r via ξ = tan t: the transformed integrand is a trigonometric
/// polynomial, so the periodic midpoint rule converges geometrically.
pub fn quadrature(r: &RatXi) -> (f64, f64) {
    let steps = 4096;
    let h = std::f64::consts::PI / steps as f64;
    let mut acc = (0.0, 0.0);
    for k in 0..steps {
        let t = -std::f64::consts::FRAC_PI_2 + (k as f64 + 0.5) * h;
        let sec2 = 1.0 / t.cos().powi(2);
        let (re, im) = r.eval_f64(t.tan()).expect("numeric coefficients");
        acc.0 += re * sec2 * h;
        acc.1 += im * sec2 * h;
    }
    acc
}

/// Worst relative error of exact line integrals against quadrature over
/// `count` decaying instances with poles on both sides.
pub fn line_integral_worst_error(count: usize, seed: u64) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst = 0.0f64;
    let mut checked = 0;
    while checked < count {
        let r = random_ratxi(&mut rng, -2, false);
        if r.pole_upper() == 0 || r.pole_lower() == 0 || r.is_zero() {
            continue;
        }
        let (cr, ci) = pi_coefficient(&r.line_integral().expect("decaying")).expect("one pi");
        let exact = (cr * std::f64::consts::PI, ci * std::f64::consts::PI);
        let numeric = quadrature(&r);
        let err = (exact.0 - numeric.0).hypot(exact.1 - numeric.1);
        let scale = exact.0.hypot(exact.1);
        worst = worst.max(if scale > 1e-12 { err / scale } else { err });
        checked += 1;
    }
    worst
}

/// E[g^α] / E[|g|^{|α|}] for a standard Gaussian in ℝ^m, by recursion
/// rather than closed double factorials.
pub fn gaussian_ratio_oracle(alpha: &[u32], m: u32) -> BigRational {
    fn gauss_moment(e: u32) -> BigInt {
        match e {
            0 => BigInt::from(1),
            e if e % 2 == 1 => BigInt::zero(),
            e => gauss_moment(e - 2) * BigInt::from(e - 1),
        }
    }
    let num = alpha.iter().fold(BigInt::from(1), |acc, &e| acc * gauss_moment(e));
    let total: u32 = alpha.iter().sum();
    let den = (0..total).step_by(2).fold(BigInt::from(1), |acc, k| acc * BigInt::from(m + k));
    BigRational::new(num, den)
}

pub const MOMENTS: &[(&[u32], u32)] = &[
    (&[2], 3),
    (&[4], 3),
    (&[2, 2], 3),
    (&[2, 2, 2], 3),
    (&[6], 3),
    (&[3], 3),
    (&[2], 5),
    (&[4, 2], 5),
    (&[2, 2, 2, 2], 5),
    (&[1, 1], 5),
];

pub struct MonteCarloMoment {
    pub alpha: &'static [u32],
    pub m: u32,
    pub mean: f64,
    pub sigma: f64,
    pub exact: f64,
}

impl MonteCarloMoment {
    pub fn within_three_sigma(&self) -> bool {
        (self.mean - self.exact).abs() <= 3.0 * self.sigma + 1e-12
    }
}

/// Sample means of every entry of [`MOMENTS`] from uniform points on the sphere.
pub fn monte_carlo_moments(samples: usize, seed: u64) -> Vec<MonteCarloMoment> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::new();
    for m in [3u32, 5] {
        let cases: Vec<&'static [u32]> = MOMENTS.iter().filter(|(_, mm)| *mm == m).map(|(a, _)| *a).collect();
        let mut sum = vec![0.0f64; cases.len()];
        let mut sum_sq = vec![0.0f64; cases.len()];
        let mut x = vec![0.0f64; m as usize];
        for _ in 0..samples {
            for v in x.iter_mut() {
                *v = StandardNormal.sample(&mut rng);
            }
            let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
            for (k, alpha) in cases.iter().enumerate() {
                let f: f64 = alpha.iter().enumerate().map(|(j, &e)| (x[j] / norm).powi(e as i32)).product();
                sum[k] += f;
                sum_sq[k] += f * f;
            }
        }
        for (k, alpha) in cases.into_iter().enumerate() {
            let mean = sum[k] / samples as f64;
            let var = (sum_sq[k] / samples as f64 - mean * mean).max(0.0);
            out.push(MonteCarloMoment {
                alpha,
                m,
                mean,
                sigma: (var / samples as f64).sqrt(),
                exact: sphere_moment(alpha, m).to_f64().unwrap(),
            });
        }
    }
    out
}
