//! Heat coefficients of the Witten deformation D_θ = d + δ + c̄(θ) in
//! dimension 4, and the cutoff asymptotics of its spectral action.
//!
//! Curvature convention: Σ_ij R_ijij = −s. Δ is the positive Laplacian, so
//! f_{,kk} = −Δf. All a_k carry an overall 1/π².

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::clifford::CliffordElem;
use crate::kkw::{CaseRecord, SuiteReport, TermEntry};
use crate::ring::{Axis, Invariant, LapKind, Monomial, MultiPoly, Scalar, SymbolId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpectralError {
    #[error("curvature polynomial is not in the span of the invariant basis: {0}")]
    Unrecognized(String),
}

/// Curvature, ∇θ and θ at a point, in an orthonormal frame (indices 1-based).
#[derive(Clone, Debug)]
pub struct CurvatureData {
    pub n: usize,
    r: BTreeMap<[u8; 4], MultiPoly>,
    /// Scalar curvature; a free symbol or −Σ R_ijij.
    pub s: MultiPoly,
    /// T_ij = (∇_{e_i} θ)_j.
    pub t: BTreeMap<(u8, u8), MultiPoly>,
    pub theta: Vec<MultiPoly>,
}

impl CurvatureData {
    /// Free symbols: canonical R components, `s`, T_i_j and θ_i.
    pub fn symbolic(n: usize) -> Self {
        let mut r = BTreeMap::new();
        for key in all_keys(n) {
            if let Some((sign, sym)) = SymbolId::riemann(key[0], key[1], key[2], key[3]) {
                r.insert(key, MultiPoly::var(sym).scale(&Scalar::from_int(sign as i64)));
            }
        }
        let mut t = BTreeMap::new();
        for i in 1..=n as u8 {
            for j in 1..=n as u8 {
                t.insert((i, j), MultiPoly::var(SymbolId::T(i, j)));
            }
        }
        let theta = (1..=n).map(|k| MultiPoly::var(SymbolId::Theta(Axis::of(k, n)))).collect();
        CurvatureData { n, r, s: MultiPoly::var(SymbolId::S), t, theta }
    }

    /// Rational curvature with pair antisymmetry and pair exchange; the value
    /// of each canonical component comes from `component`. θ = ∇θ = 0.
    pub fn numeric(n: usize, mut component: impl FnMut(SymbolId) -> BigRational) -> Self {
        let mut values: BTreeMap<SymbolId, BigRational> = BTreeMap::new();
        let mut r = BTreeMap::new();
        for key in all_keys(n) {
            if let Some((sign, sym)) = SymbolId::riemann(key[0], key[1], key[2], key[3]) {
                let v = values.entry(sym).or_insert_with(|| component(sym)).clone();
                let v = if sign < 0 { -v } else { v };
                if !v.is_zero() {
                    r.insert(key, MultiPoly::constant(Scalar::from_rational(v)));
                }
            }
        }
        let mut data = CurvatureData { n, r, s: MultiPoly::zero(), t: BTreeMap::new(), theta: vec![MultiPoly::zero(); n] };
        data.s = -data.ricci_contraction();
        data
    }

    pub fn r(&self, i: usize, j: usize, k: usize, l: usize) -> MultiPoly {
        self.r.get(&[i as u8, j as u8, k as u8, l as u8]).cloned().unwrap_or_default()
    }

    /// R_ijkl = −R_jikl = −R_ijlk = R_klij for every index tuple.
    pub fn has_symmetries(&self) -> bool {
        all_keys(self.n).into_iter().all(|[i, j, k, l]| {
            let v = self.r(i as usize, j as usize, k as usize, l as usize);
            v == -self.r(j as usize, i as usize, k as usize, l as usize)
                && v == -self.r(i as usize, j as usize, l as usize, k as usize)
                && v == self.r(k as usize, l as usize, i as usize, j as usize)
        })
    }

    /// Σ_ij R_ijij.
    pub fn ricci_contraction(&self) -> MultiPoly {
        let n = self.n;
        let mut acc = MultiPoly::zero();
        for i in 1..=n {
            for j in 1..=n {
                acc.add_assign(&self.r(i, j, i, j));
            }
        }
        acc
    }

    /// Σ_ijkl R_ijkl².
    pub fn riemann_square(&self) -> MultiPoly {
        self.r.values().fold(MultiPoly::zero(), |acc, v| &acc + &(v * v))
    }

    /// Σ_ijkl R_ijik R_ljlk.
    pub fn ricci_square(&self) -> MultiPoly {
        let n = self.n;
        let mut acc = MultiPoly::zero();
        for j in 1..=n {
            for k in 1..=n {
                let ric = (1..=n).fold(MultiPoly::zero(), |a, i| &a + &self.r(i, j, i, k));
                acc.add_assign(&(&ric * &ric));
            }
        }
        acc
    }

    pub fn theta_square(&self) -> MultiPoly {
        self.theta.iter().fold(MultiPoly::zero(), |acc, v| &acc + &(v * v))
    }

    pub fn grad_theta_square(&self) -> MultiPoly {
        self.t.values().fold(MultiPoly::zero(), |acc, v| &acc + &(v * v))
    }
}

fn all_keys(n: usize) -> Vec<[u8; 4]> {
    let n = n as u8;
    let mut out = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                for l in 1..=n {
                    out.push([i, j, k, l]);
                }
            }
        }
    }
    out
}

/// Σ R_ijkl c̄_i c̄_j c_k c_l.
fn curvature_word(data: &CurvatureData) -> CliffordElem {
    let n = data.n;
    let mut w = CliffordElem::zero(n);
    for (&[i, j, k, l], v) in &data.r {
        let word = &(&(&CliffordElem::cbar(n, i as usize) * &CliffordElem::cbar(n, j as usize))
            * &CliffordElem::c(n, k as usize))
            * &CliffordElem::c(n, l as usize);
        w = &w + &word.scale_poly(v);
    }
    w
}

/// Σ_i c(e_i) c̄(∇_{e_i} θ).
fn gradient_word(data: &CurvatureData) -> CliffordElem {
    let n = data.n;
    let mut w = CliffordElem::zero(n);
    for (&(i, j), v) in &data.t {
        w = &w + &(&CliffordElem::c(n, i as usize) * &CliffordElem::cbar(n, j as usize)).scale_poly(v);
    }
    w
}

/// E = (1/8) Σ R_ijkl c̄_i c̄_j c_k c_l − s/4 − Σ_i c(e_i) c̄(∇_{e_i}θ) − |θ|².
pub fn witten_endomorphism(data: &CurvatureData) -> CliffordElem {
    let n = data.n;
    let scalar = &data.s.scale(&Scalar::ratio(-1, 4)) - &data.theta_square();
    &(&curvature_word(data).scale_scalar(&Scalar::ratio(1, 8)) - &gradient_word(data))
        + &CliffordElem::identity(n).scale_poly(&scalar)
}

/// Ω_ij = −(1/4) Σ_st R_ijst [c̄_s c̄_t − c_s c_t].
pub fn curvature_form(data: &CurvatureData, i: usize, j: usize) -> CliffordElem {
    let n = data.n;
    let mut out = CliffordElem::zero(n);
    for s in 1..=n {
        for t in 1..=n {
            let v = data.r(i, j, s, t);
            if v.is_zero() {
                continue;
            }
            let bar = &CliffordElem::cbar(n, s) * &CliffordElem::cbar(n, t);
            let plain = &CliffordElem::c(n, s) * &CliffordElem::c(n, t);
            out = &out + &(&bar - &plain).scale_poly(&v.scale(&Scalar::ratio(-1, 4)));
        }
    }
    out
}

fn trace_poly(x: &CliffordElem) -> MultiPoly {
    x.trace().as_constant().expect("no xin in curvature symbols")
}

fn trace_product_poly(x: &CliffordElem, y: &CliffordElem) -> MultiPoly {
    x.trace_product(y).as_constant().expect("no xin in curvature symbols")
}

/// Σ_ij tr[Ω_ij Ω_ij].
pub fn curvature_form_trace(data: &CurvatureData) -> MultiPoly {
    let mut acc = MultiPoly::zero();
    for i in 1..=data.n {
        for j in 1..=data.n {
            let w = curvature_form(data, i, j);
            acc.add_assign(&trace_product_poly(&w, &w));
        }
    }
    acc
}

/// Same trace through the explicit ε/ι matrices.
pub fn curvature_form_trace_matrix(data: &CurvatureData) -> MultiPoly {
    let mut acc = MultiPoly::zero();
    for i in 1..=data.n {
        for j in 1..=data.n {
            let m = curvature_form(data, i, j).to_matrix();
            acc.add_assign(&m.mul(&m).trace().as_constant().expect("constant entries"));
        }
    }
    acc
}

fn inv(i: Invariant) -> MultiPoly {
    MultiPoly::var(SymbolId::Inv(i))
}

fn lap(k: LapKind) -> MultiPoly {
    MultiPoly::var(SymbolId::Lap(k))
}

/// Solves `target = Σ c_b basis_b` exactly; `None` if the basis does not
/// span `target` or is degenerate.
fn solve_in_basis(target: &MultiPoly, basis: &[MultiPoly]) -> Option<Vec<Scalar>> {
    let mut rows: BTreeMap<Monomial, Vec<Scalar>> = BTreeMap::new();
    let width = basis.len() + 1;
    let mut put = |m: &Monomial, col: usize, c: &Scalar| {
        rows.entry(m.clone()).or_insert_with(|| vec![Scalar::zero(); width])[col] = c.clone();
    };
    for (b, p) in basis.iter().enumerate() {
        for (m, c) in p.terms() {
            put(m, b, c);
        }
    }
    for (m, c) in target.terms() {
        put(m, basis.len(), c);
    }
    let mut mat: Vec<Vec<Scalar>> = rows.into_values().collect();
    let mut pivot_row = 0;
    let mut pivots = Vec::new();
    for col in 0..basis.len() {
        let p = (pivot_row..mat.len()).find(|&r| !mat[r][col].is_zero())?;
        mat.swap(pivot_row, p);
        let inv = mat[pivot_row][col].inv().expect("nonzero pivot");
        let row: Vec<Scalar> = mat[pivot_row].iter().map(|x| x * &inv).collect();
        for (r, other) in mat.iter_mut().enumerate() {
            if r != pivot_row && !other[col].is_zero() {
                let f = other[col].clone();
                for (o, v) in other.iter_mut().zip(&row) {
                    *o -= &(&f * v);
                }
            }
        }
        mat[pivot_row] = row;
        pivots.push(pivot_row);
        pivot_row += 1;
    }
    if mat[pivot_row..].iter().any(|r| !r[basis.len()].is_zero()) {
        return None;
    }
    Some(pivots.iter().map(|&r| mat[r][basis.len()].clone()).collect())
}

/// Rewrites a polynomial in R, T, θ (and s) as a combination of
/// s², |Ric|², |Riem|², Σ|∇θ|², |θ|⁴ and s|θ|².
fn recognize(data: &CurvatureData, p: &MultiPoly) -> Result<MultiPoly, SpectralError> {
    let rho = data.ricci_contraction();
    let s_sym = data.s.clone();
    let expanded = p.substitute(&|sym| match sym {
        SymbolId::S if s_sym == MultiPoly::var(SymbolId::S) => Some(-rho.clone()),
        _ => None,
    });
    let theta2 = data.theta_square();
    let basis = [
        &rho * &rho,
        data.ricci_square(),
        data.riemann_square(),
        data.grad_theta_square(),
        &theta2 * &theta2,
        &rho * &theta2,
    ];
    let c = solve_in_basis(&expanded, &basis).ok_or_else(|| SpectralError::Unrecognized(p.to_string()))?;
    let s = MultiPoly::var(SymbolId::S);
    let t2 = inv(Invariant::Theta2);
    let images = [
        &s * &s,
        inv(Invariant::Ric2),
        inv(Invariant::Riem2),
        inv(Invariant::GradTheta2),
        &t2 * &t2,
        -(&s * &t2),
    ];
    Ok(images.iter().zip(&c).fold(MultiPoly::zero(), |acc, (img, k)| &acc + &img.scale(k)))
}

/// Linear in s and |θ|² written through θ components: maps to invariants.
fn recognize_linear(data: &CurvatureData, p: &MultiPoly) -> Result<MultiPoly, SpectralError> {
    let s = MultiPoly::var(SymbolId::S);
    let basis = [s.clone(), data.theta_square()];
    let c = solve_in_basis(p, &basis).ok_or_else(|| SpectralError::Unrecognized(p.to_string()))?;
    Ok(&s.scale(&c[0]) + &inv(Invariant::Theta2).scale(&c[1]))
}

/// f ↦ f_{,kk} = −Δf on s and |θ|².
fn second_derivative_trace(p: &MultiPoly) -> MultiPoly {
    p.substitute(&|sym| match sym {
        SymbolId::S => Some(-lap(LapKind::S)),
        SymbolId::Inv(Invariant::Theta2) => Some(-lap(LapKind::Theta2)),
        _ => None,
    })
}

/// a₄ bracket coefficients, in the order the result is usually quoted.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct A4Vector {
    pub s2: Scalar,
    pub grad_theta2: Scalar,
    pub riem2_from_e2: Scalar,
    pub s_theta2: Scalar,
    pub ric2: Scalar,
    pub riem2_explicit: Scalar,
    pub riem2_from_omega: Scalar,
}

impl A4Vector {
    pub fn entries(&self) -> [&Scalar; 7] {
        [
            &self.s2,
            &self.grad_theta2,
            &self.riem2_from_e2,
            &self.s_theta2,
            &self.ric2,
            &self.riem2_explicit,
            &self.riem2_from_omega,
        ]
    }
}

impl fmt::Display for A4Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.entries().iter().map(|x| x.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// a₀, a₂, a₄ times π²: a₀ carries the volume marker, a₂ and a₄ are densities.
#[derive(Clone, Debug)]
pub struct HeatCoefficients {
    pub a0: MultiPoly,
    pub a2: MultiPoly,
    pub a4: MultiPoly,
    /// 5760 π² a₄ split by the term of the integrand it comes from.
    pub a4_terms: Vec<(String, MultiPoly)>,
    pub a4_vector: A4Vector,
}

impl fmt::Display for HeatCoefficients {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "a0 = ({})/pi^2", self.a0)?;
        writeln!(f, "a2 = ({})/pi^2", self.a2)?;
        write!(f, "a4 = ({})/pi^2", self.a4)
    }
}

fn coeff_of(p: &MultiPoly, m: &MultiPoly) -> Scalar {
    let (mono, _) = m.terms().next().expect("monomial");
    p.coeff(mono)
}

/// Seeley–DeWitt coefficients of D_θ². With `closed_manifold` the
/// total-derivative terms are dropped.
pub fn heat_coefficients(data: &CurvatureData, closed_manifold: bool) -> Result<HeatCoefficients, SpectralError> {
    let n = data.n;
    let e = witten_endomorphism(data);
    let id = CliffordElem::identity(n);
    let tr_id = Scalar::from_int(1i64 << n);
    let rho = data.ricci_contraction();
    let s_over_6 = id.scale_poly(&data.s.scale(&Scalar::ratio(1, 6)));
    let tr_e = recognize_linear(data, &trace_poly(&e))?;

    let a0 = inv(Invariant::Vol).scale(&(&tr_id * &Scalar::ratio(1, 16)));
    let a2 = recognize_linear(data, &trace_poly(&(&s_over_6 + &e)))?.scale(&Scalar::ratio(1, 16));

    let omega2 = curvature_form_trace(data);
    let raw: Vec<(&str, MultiPoly)> = vec![
        ("5 RR", (&rho * &rho).scale(&Scalar::from_int(5)).scale(&tr_id)),
        ("-2 Ric^2", data.ricci_square().scale(&Scalar::from_int(-2)).scale(&tr_id)),
        ("2 Riem^2", data.riemann_square().scale(&Scalar::from_int(2)).scale(&tr_id)),
        ("-60 R E", (&rho * &trace_poly(&e)).scale(&Scalar::from_int(-60))),
        ("180 E^2", trace_product_poly(&e, &e).scale(&Scalar::from_int(180))),
        ("30 Omega^2", omega2.scale(&Scalar::from_int(30))),
    ];
    let mut a4_terms = Vec::new();
    for (name, p) in &raw {
        a4_terms.push((name.to_string(), recognize(data, p)?));
    }
    if !closed_manifold {
        // −12 tr R_ijij,kk with Σ R_ijij = −s, and 60 (tr E)_,kk.
        let r_term = second_derivative_trace(&MultiPoly::var(SymbolId::S)).scale(&(&tr_id * &Scalar::from_int(12)));
        a4_terms.push(("-12 R_,kk".to_string(), r_term));
        a4_terms.push(("60 E_,kk".to_string(), second_derivative_trace(&tr_e).scale(&Scalar::from_int(60))));
    }
    let bracket = a4_terms.iter().fold(MultiPoly::zero(), |acc, (_, p)| &acc + p);
    let term = |name: &str| a4_terms.iter().find(|(k, _)| k == name).map(|(_, p)| p.clone()).unwrap_or_default();
    let s = MultiPoly::var(SymbolId::S);
    let t2 = inv(Invariant::Theta2);
    let a4_vector = A4Vector {
        s2: coeff_of(&bracket, &(&s * &s)),
        grad_theta2: coeff_of(&bracket, &inv(Invariant::GradTheta2)),
        riem2_from_e2: coeff_of(&term("180 E^2"), &inv(Invariant::Riem2)),
        s_theta2: coeff_of(&bracket, &(&s * &t2)),
        ric2: coeff_of(&bracket, &inv(Invariant::Ric2)),
        riem2_explicit: coeff_of(&term("2 Riem^2"), &inv(Invariant::Riem2)),
        riem2_from_omega: coeff_of(&term("30 Omega^2"), &inv(Invariant::Riem2)),
    };
    let a4 = bracket.scale(&Scalar::ratio(1, 5760));
    Ok(HeatCoefficients { a0, a2, a4, a4_terms, a4_vector })
}

/// Λ⁴F₄a₀ + Λ²F₂a₂ + F₀a₄, times π².
pub fn spectral_asymptotics(c: &HeatCoefficients, f0: &BigRational, f2: &BigRational, f4: &BigRational) -> MultiPoly {
    let lambda = MultiPoly::var(SymbolId::Lambda);
    let w = |f: &BigRational| Scalar::from_rational(f.clone());
    &(&(&lambda.pow(4) * &c.a0.scale(&w(f4))) + &(&lambda.pow(2) * &c.a2.scale(&w(f2)))) + &c.a4.scale(&w(f0))
}

/// Word-by-word vanishing traces used in the a₂ and a₄ assembly; returns
/// the number of failures.
pub fn vanishing_trace_failures(n: usize) -> usize {
    let mut failures = 0;
    let mut check = |x: CliffordElem| {
        if !x.trace().is_zero() {
            failures += 1;
        }
    };
    for i in 1..=n {
        check(CliffordElem::c(n, i));
        for j in 1..=n {
            if i != j {
                check(&CliffordElem::c(n, i) * &CliffordElem::c(n, j));
                for k in 1..=n {
                    for l in 1..=n {
                        check(
                            &(&(&CliffordElem::cbar(n, i) * &CliffordElem::cbar(n, j)) * &CliffordElem::c(n, k))
                                * &CliffordElem::c(n, l),
                        );
                    }
                }
            }
        }
    }
    check(gradient_word(&CurvatureData::symbolic(n)));
    failures
}

/// Deterministic rational curvature instances (small numerators).
pub fn sample_curvatures(n: usize, count: usize, seed: u64) -> Vec<CurvatureData> {
    // SplitMix64 keeps the sequence fixed without an RNG dependency in the library.
    let mut state = seed;
    let mut next = move || {
        state = state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    };
    (0..count)
        .map(|_| {
            CurvatureData::numeric(n, |_| {
                let num = (next() % 19) as i64 - 9;
                let den = (next() % 5) as i64 + 1;
                BigRational::new(num.into(), den.into())
            })
        })
        .collect()
}

fn record(id: &str, expected: &MultiPoly, computed: &MultiPoly) -> CaseRecord {
    CaseRecord::new(id, expected.to_string(), computed.to_string(), expected == computed)
}

fn parse(text: &str) -> MultiPoly {
    MultiPoly::parse(text).expect("literal")
}

/// The spectral suite: a₀, a₂, trace identities and the a₄ coefficients.
pub fn spectral_report() -> SuiteReport {
    let n = 4;
    let data = CurvatureData::symbolic(n);
    let mut cases = Vec::new();
    match (heat_coefficients(&data, true), heat_coefficients(&data, false)) {
        (Ok(closed), Ok(open)) => {
            cases.push(record("a0 (times pi^2)", &parse("vol"), &closed.a0));
            cases.push(record("a2 (times pi^2)", &parse("-1/12*s - theta2"), &closed.a2));
            let expected_vec = "(20, 2880, 180, 480, -32, 32, -1920)";
            let terms = closed
                .a4_terms
                .iter()
                .map(|(k, v)| TermEntry { source: k.clone(), value: v.to_string() })
                .collect();
            cases.push(
                CaseRecord::new(
                    "a4 coefficient vector",
                    expected_vec,
                    closed.a4_vector.to_string(),
                    closed.a4_vector.to_string() == expected_vec,
                )
                .with_terms(terms),
            );
            let grad_equal = coeff_of(&(&closed.a4 * &MultiPoly::int(5760)), &inv(Invariant::GradTheta2))
                == coeff_of(&(&closed.a4 * &MultiPoly::int(5760)), &inv(Invariant::Theta2).pow(2));
            cases.push(CaseRecord::new(
                "a4 grad theta and theta^4 share a coefficient",
                "true",
                grad_equal.to_string(),
                grad_equal,
            ));
            let lap_part: MultiPoly = MultiPoly::from_terms(
                (&open.a4 - &closed.a4)
                    .scale(&Scalar::from_int(5760))
                    .terms()
                    .map(|(m, c)| (m.clone(), c.clone())),
            );
            cases.push(record("a4 total-derivative terms", &parse("48*lap_s + 960*lap_theta2"), &lap_part));
            let no_lap = !closed.a4.symbols().iter().any(|s| matches!(s, SymbolId::Lap(_)));
            cases.push(CaseRecord::new("closed manifold drops lap markers", "true", no_lap.to_string(), no_lap));
            let flat = spectral_asymptotics(&closed, &BigRational::one(), &BigRational::one(), &BigRational::one());
            let lambda4 = flat.collect_in(SymbolId::Lambda).get(4).cloned().unwrap_or_default();
            cases.push(record("asymptotics Lambda^4 weight (times pi^2)", &parse("vol"), &lambda4));
        }
        (Err(e), _) | (_, Err(e)) => cases.push(CaseRecord::failed("heat coefficients", "", e)),
    }
    let e = witten_endomorphism(&data);
    let tr_e = trace_poly(&e);
    let expected_tr_e = &parse("-4*s") - &data.theta_square().scale(&Scalar::from_int(16));
    cases.push(record("tr E", &expected_tr_e, &tr_e));
    let x = gradient_word(&data);
    cases.push(record(
        "tr (sum c(e_i) cbar(grad theta))^2",
        &data.grad_theta_square().scale(&Scalar::from_int(16)),
        &trace_product_poly(&x, &x),
    ));
    cases.push(record(
        "sum tr Omega_ij Omega_ij",
        &data.riemann_square().scale(&Scalar::from_int(-4)),
        &curvature_form_trace(&data),
    ));
    let samples = sample_curvatures(n, 20, 7);
    let ok = samples
        .iter()
        .filter(|d| {
            let oracle = curvature_form_trace_matrix(d);
            oracle == d.riemann_square().scale(&Scalar::from_int(-4)) && oracle == curvature_form_trace(d)
        })
        .count();
    cases.push(CaseRecord::new("Omega trace identity on 20 rational instances", "20/20", format!("{ok}/20"), ok == 20));
    let failures = vanishing_trace_failures(n);
    cases.push(CaseRecord::new("vanishing trace identities", "0", failures.to_string(), failures == 0));
    SuiteReport::new("spectral", cases)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn flat_endomorphism_is_scalar() {
        let mut d = CurvatureData::numeric(4, |_| BigRational::zero());
        d.s = MultiPoly::var(SymbolId::S);
        let e = witten_endomorphism(&d);
        assert_eq!(e, CliffordElem::identity(4).scale_poly(&MultiPoly::var(SymbolId::S).scale(&Scalar::ratio(-1, 4))));
    }

    #[test]
    fn numeric_instances_are_symmetric() {
        for d in sample_curvatures(4, 3, 1) {
            assert!(d.has_symmetries());
        }
    }

    #[test]
    fn basis_solver_recovers_combination() {
        let x = MultiPoly::var(SymbolId::S);
        let y = MultiPoly::var(SymbolId::H1);
        let target = &x.scale(&Scalar::from_int(3)) - &(&x * &y);
        let c = solve_in_basis(&target, &[x.clone(), &x * &y]).unwrap();
        assert_eq!(c, vec![Scalar::from_int(3), Scalar::from_int(-1)]);
        assert!(solve_in_basis(&y, &[x]).is_none());
    }
}
