//! Machine-derived symbols against their closed forms.
//!
//! Closed forms hold only modulo Σξ_j² = 1, so equality is decided by
//! evaluation at rational points of the tangential unit sphere.

use std::collections::BTreeSet;

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::report::{CaseRecord, TermEntry};
use crate::boundary_geometry::{
    b0_parts, c_thetap, c_xi, cbar_theta, chart_axioms, xi, BoundaryChart, OperatorSpec,
};
use crate::clifford::CliffordElem;
use crate::ring::{MultiPoly, RatXi, Scalar, SymbolId};
use crate::symcalc::{cube_and_invert, invert_first_order, Sources, SymbolKit};

fn rat(p: i64, q: i64) -> BigRational {
    BigRational::new(p.into(), q.into())
}

fn distinct_permutations(items: &[BigRational]) -> Vec<Vec<BigRational>> {
    if items.len() <= 1 {
        return vec![items.to_vec()];
    }
    let mut out = Vec::new();
    let mut seen = BTreeSet::new();
    for (i, head) in items.iter().enumerate() {
        if !seen.insert(head.clone()) {
            continue;
        }
        let mut rest = items.to_vec();
        rest.remove(i);
        for mut tail in distinct_permutations(&rest) {
            tail.insert(0, head.clone());
            out.push(tail);
        }
    }
    out
}

/// Rational points of S^{m−1}: signed permutations of (1,0,…), (3/5,4/5,0,…)
/// and (1/3,2/3,2/3,0,…), deduplicated and sorted.
pub fn sphere_points(m: usize) -> Vec<Vec<BigRational>> {
    let seeds: [&[BigRational]; 3] = [&[rat(1, 1)], &[rat(3, 5), rat(4, 5)], &[rat(1, 3), rat(2, 3), rat(2, 3)]];
    let mut out = BTreeSet::new();
    for seed in seeds {
        if seed.len() > m {
            continue;
        }
        let mut base = seed.to_vec();
        base.resize(m, BigRational::zero());
        for p in distinct_permutations(&base) {
            let nz: Vec<usize> = (0..m).filter(|&i| !p[i].is_zero()).collect();
            for signs in 0u32..1 << nz.len() {
                let mut q = p.clone();
                for (b, &i) in nz.iter().enumerate() {
                    if signs >> b & 1 == 1 {
                        q[i] = -q[i].clone();
                    }
                }
                out.insert(q);
            }
        }
    }
    debug_assert!(out.iter().all(|p| p.iter().map(|x| x * x).sum::<BigRational>().is_one()));
    out.into_iter().collect()
}

fn at_point(x: &CliffordElem, p: &[BigRational]) -> CliffordElem {
    x.substitute(&|s| match s {
        SymbolId::Xi(j) => Some(MultiPoly::constant(Scalar::from_rational(p[j as usize - 1].clone()))),
        _ => None,
    })
}

fn fmt_point(p: &[BigRational]) -> String {
    let parts: Vec<String> = p.iter().map(|x| if x.is_negative() { format!("{x}") } else { x.to_string() }).collect();
    format!("xi'=({})", parts.join(","))
}

/// First sphere point where `x − y` is nonzero.
fn sphere_difference(x: &CliffordElem, y: &CliffordElem, m: usize) -> Option<(Vec<BigRational>, CliffordElem)> {
    let d = x - y;
    if d.is_zero() {
        return None;
    }
    sphere_points(m).into_iter().find_map(|p| {
        let v = at_point(&d, &p);
        (!v.is_zero()).then_some((p, v))
    })
}

fn norm_sq(k: i32) -> RatXi {
    RatXi::norm_sq_pow(k)
}

/// Σ_{j<n} ξ_j², the literal |ξ'|².
fn xi_prime_sq(n: usize) -> MultiPoly {
    (1..n).fold(MultiPoly::zero(), |acc, j| &acc + &xi(j).pow(2))
}

/// q₋₂ = c(ξ)σ₀c(ξ)/|ξ|⁴ + c(ξ)c(dxₙ)[∂ₓₙc(ξ')|ξ|² − c(ξ)∂ₓₙ|ξ|²]/|ξ|⁶.
fn q2_closed_form(kit: &SymbolKit, spec: &OperatorSpec) -> CliffordElem {
    let n = kit.n;
    let c = &kit.c_xi;
    let sigma0 = kit.order_zero(spec).total();
    let first = (&(c * &sigma0) * c).scale(&norm_sq(-2));
    let dnorm = if kit.sources.metric_jet {
        kit.chart.dxn_norm_sq.clone() * xi_prime_sq(n)
    } else {
        MultiPoly::zero()
    };
    let bracket = &kit.dxn_c_xi.scale(&norm_sq(1)) - &c.scale_poly(&dnorm);
    let second = (&(c * &kit.c_normal) * &bracket).scale(&norm_sq(-3));
    &first + &second
}

/// Which display of σ₂ to build: the adjoint sandwich or the plain cube.
#[derive(Clone, Copy)]
enum Cube {
    AdjointSandwich,
    Plain,
}

/// The displayed σ₂, restricted to the given sources. Geometry terms belong
/// to b₀¹, b₀² and the metric jet together and are kept whenever any of them is.
fn sigma2_display(chart: &BoundaryChart, cube: Cube, s: Sources) -> CliffordElem {
    let n = chart.n;
    let h1 = MultiPoly::var(SymbolId::H1);
    let cx = c_xi(n);
    let r2 = norm_sq(1);
    let mut out = CliffordElem::zero(n);
    if s.b01 || s.b02 || s.metric_jet {
        out = &out + &CliffordElem::c(n, n).scale_poly(&(&h1 * &xi_prime_sq(n)));
        let mut conn = CliffordElem::zero(n);
        for k in 1..n {
            let sig = (&CliffordElem::c(n, k) * &CliffordElem::c(n, n)).scale_poly(&h1.scale(&Scalar::ratio(1, 4)));
            let a =
                (&CliffordElem::cbar(n, k) * &CliffordElem::cbar(n, n)).scale_poly(&h1.scale(&Scalar::ratio(-1, 4)));
            conn = &conn + &(&sig + &a).scale_scalar(&Scalar::from_int(4)).scale_poly(&xi(k));
        }
        let gamma_n = chart.gamma_contracted.scale(&Scalar::from_int(-2));
        conn = &conn + &CliffordElem::identity(n).scale(&RatXi::xin().scale(&gamma_n));
        out = &out + &(&cx * &conn);
        let (b01, b02) = b0_parts(chart);
        out = &out + &(&b01 + &b02).scale(&r2);
    }
    if s.c_thetap {
        let ct = c_thetap(n);
        let (sandwich_sign, linear_sign) = match cube {
            Cube::AdjointSandwich => (1, -1),
            Cube::Plain => (-1, 1),
        };
        let sandwich = &(&(&cx * &ct) * &cx) + &ct.scale(&r2).scale_scalar(&Scalar::from_int(sandwich_sign));
        out = &out - &sandwich.scale_scalar(&Scalar::from_int(2));
        out = &out + &ct.scale(&r2).scale_scalar(&Scalar::from_int(linear_sign));
    }
    if s.cbar_theta {
        out = &out + &cbar_theta(n).scale(&r2);
    }
    out
}

fn dims(dim: Option<usize>) -> Vec<usize> {
    [4usize, 6].into_iter().filter(|n| dim.is_none_or(|d| d == *n)).collect()
}

fn sphere_record(id: String, machine: &CliffordElem, display: &CliffordElem, m: usize) -> CaseRecord {
    match sphere_difference(machine, display, m) {
        None => CaseRecord::new(id, "0", "0", true),
        Some((p, d)) => CaseRecord::new(id, "0", format!("{}: {}", fmt_point(&p), d), false),
    }
}

fn sigma2_record(n: usize, cube: Cube) -> CaseRecord {
    let chart = chart_axioms(n);
    let (label, specs) = match cube {
        Cube::AdjointSandwich => ("D*DD*", [OperatorSpec::d_hat_adjoint(n), OperatorSpec::d_hat(n), OperatorSpec::d_hat_adjoint(n)]),
        Cube::Plain => ("DDD", [OperatorSpec::d_hat(n); 3]),
    };
    let machine = |s: Sources| cube_and_invert(&SymbolKit::new(chart.clone(), s), specs).map(|c| c.sigma2);
    let full = match machine(Sources::ALL) {
        Ok(m) => m,
        Err(e) => return CaseRecord::failed(format!("sigma2 {label} n={n}"), "0", e),
    };
    let record = sphere_record(format!("sigma2 {label} n={n}"), &full, &sigma2_display(&chart, cube, Sources::ALL), n - 1);
    let none = Sources::NONE;
    let groups = [
        ("geometry", Sources { b01: true, b02: true, metric_jet: true, ..none }),
        ("cbar(theta)", Sources { cbar_theta: true, ..none }),
        ("c(thetap)", Sources { c_thetap: true, ..none }),
    ];
    let mut terms = Vec::new();
    for (name, s) in groups {
        let Ok(m) = machine(s) else { continue };
        if let Some((p, d)) = sphere_difference(&m, &sigma2_display(&chart, cube, s), n - 1) {
            terms.push(TermEntry { source: name.to_string(), value: format!("{}: {}", fmt_point(&p), d) });
        }
    }
    record.with_terms(terms)
}

fn sigma3_record(n: usize, cube: Cube) -> CaseRecord {
    let (label, specs) = match cube {
        Cube::AdjointSandwich => ("D*DD*", [OperatorSpec::d_hat_adjoint(n), OperatorSpec::d_hat(n), OperatorSpec::d_hat_adjoint(n)]),
        Cube::Plain => ("DDD", [OperatorSpec::d_hat(n); 3]),
    };
    let id = format!("sigma3 {label} n={n}");
    match cube_and_invert(&SymbolKit::new(chart_axioms(n), Sources::ALL), specs) {
        Ok(c) => {
            let display = c_xi(n).scale(&norm_sq(1).scale_scalar(&Scalar::i()));
            sphere_record(id, &c.sigma3, &display, n - 1)
        }
        Err(e) => CaseRecord::failed(id, "0", e),
    }
}

/// One record per closed form, each comparing the difference against 0.
pub fn lemma_records(dim: Option<usize>) -> Vec<CaseRecord> {
    let mut out = Vec::new();
    for n in dims(dim) {
        let chart = chart_axioms(n);
        let expected_b02 = CliffordElem::c(n, n).scale_poly(
            &MultiPoly::var(SymbolId::H1).scale(&Scalar::ratio(-(n as i64 - 1), 4)),
        );
        let b02 = b0_parts(&chart).1;
        out.push(CaseRecord::new(format!("b02 n={n}"), expected_b02.to_string(), b02.to_string(), b02 == expected_b02));
        let kit = SymbolKit::new(chart, Sources::ALL);
        for (label, spec) in [("D", OperatorSpec::d_hat(n)), ("D*", OperatorSpec::d_hat_adjoint(n))] {
            let machine = invert_first_order(&kit, &spec).value(-2);
            out.push(sphere_record(format!("q-2 {label} n={n}"), &machine, &q2_closed_form(&kit, &spec), n - 1));
        }
    }
    if dim.is_none_or(|d| d == 6) {
        for cube in [Cube::AdjointSandwich, Cube::Plain] {
            out.push(sigma3_record(6, cube));
            out.push(sigma2_record(6, cube));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn point_counts() {
        assert_eq!(sphere_points(3).len(), 54);
        assert_eq!(sphere_points(5).len(), 330);
    }
}
