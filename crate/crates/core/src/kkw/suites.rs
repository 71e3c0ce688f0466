use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use super::report::{CaseRecord, SuiteReport, TermEntry};
use super::{boundary_total, enumerate_cases, evaluate_case, BoundaryDensity, CaseId, CaseSpec, KkwError};
use crate::boundary_geometry::{b0_parts, chart_axioms, OperatorSpec};
use crate::symcalc::{cube_and_invert, invert_first_order, JetSym, Sources, SymbolKit};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum SuiteId {
    Kkw4,
    Kkw4Sq,
    Kkw6,
    Kkw6Cu,
    Interior,
    Lemmas,
    Spectral,
}

impl SuiteId {
    pub const ALL: [SuiteId; 7] = [
        SuiteId::Kkw4,
        SuiteId::Kkw4Sq,
        SuiteId::Kkw6,
        SuiteId::Kkw6Cu,
        SuiteId::Interior,
        SuiteId::Lemmas,
        SuiteId::Spectral,
    ];

    pub fn name(self) -> &'static str {
        match self {
            SuiteId::Kkw4 => "kkw4",
            SuiteId::Kkw4Sq => "kkw4sq",
            SuiteId::Kkw6 => "kkw6",
            SuiteId::Kkw6Cu => "kkw6cu",
            SuiteId::Interior => "interior",
            SuiteId::Lemmas => "lemmas",
            SuiteId::Spectral => "spectral",
        }
    }

    /// The only dimension a suite runs in, if it is fixed.
    pub fn fixed_dim(self) -> Option<usize> {
        match self {
            SuiteId::Kkw4 | SuiteId::Kkw4Sq | SuiteId::Spectral => Some(4),
            SuiteId::Kkw6 | SuiteId::Kkw6Cu => Some(6),
            SuiteId::Interior | SuiteId::Lemmas => None,
        }
    }
}

impl fmt::Display for SuiteId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SuiteId {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        SuiteId::ALL.into_iter().find(|x| x.name() == s).ok_or_else(|| s.to_string())
    }
}

#[derive(Clone, Debug, Default)]
pub struct SuiteOptions {
    /// Worker threads; `None` uses the global pool.
    pub parallel: Option<usize>,
    /// Restrict dimension-generic suites to one dimension.
    pub dim: Option<usize>,
    /// Fault injection: replace b₀² by −b₀² in every operator.
    pub flip_b02: bool,
}

#[derive(Clone, Copy, Debug)]
pub enum SecondFactor {
    Inverse(OperatorSpec),
    /// Parametrix of the product of three first-order operators.
    CubeInverse([OperatorSpec; 3]),
}

/// A residue of A∘B with A = (first)⁻¹.
#[derive(Clone, Copy, Debug)]
pub struct Pairing {
    pub n: usize,
    pub first: OperatorSpec,
    pub second: SecondFactor,
}

impl Pairing {
    fn orders(&self) -> (i32, i32) {
        match self.second {
            SecondFactor::Inverse(_) => (1, 1),
            SecondFactor::CubeInverse(_) => (1, 3),
        }
    }

    fn symbols(&self, kit: &SymbolKit) -> Result<(JetSym, JetSym), KkwError> {
        let a = invert_first_order(kit, &self.first);
        let b = match &self.second {
            SecondFactor::Inverse(s) => invert_first_order(kit, s),
            SecondFactor::CubeInverse(specs) => cube_and_invert(kit, *specs)?.inverse,
        };
        Ok((a, b))
    }
}

/// One case with its per-source split.
#[derive(Clone, Debug)]
pub struct PairingCase {
    pub case: CaseSpec,
    pub value: BoundaryDensity,
    /// Nonzero single-source contributions, then `residual` if they do not
    /// add up to `value`.
    pub terms: Vec<(String, BoundaryDensity)>,
}

fn kit_for(n: usize, sources: Sources, flip_b02: bool) -> SymbolKit {
    let chart = chart_axioms(n);
    let mut kit = SymbolKit::new(chart.clone(), sources);
    if flip_b02 {
        kit.b02_override = Some(-b0_parts(&chart).1);
    }
    kit
}

/// Every case of a pairing, run once with all sources and once per source.
pub fn evaluate_pairing(p: &Pairing, opts: &SuiteOptions) -> Result<Vec<PairingCase>, KkwError> {
    let (p1, p2) = p.orders();
    let cases = enumerate_cases(p.n, p1, p2)?;
    let mut masks = vec![("all", Sources::ALL)];
    masks.extend(Sources::singles());
    let symbols: Vec<(JetSym, JetSym)> = masks
        .par_iter()
        .map(|(_, m)| p.symbols(&kit_for(p.n, *m, opts.flip_b02)))
        .collect::<Result<_, _>>()?;
    let grid: Vec<(usize, usize)> = (0..masks.len()).flat_map(|m| (0..cases.len()).map(move |c| (m, c))).collect();
    let values: Vec<BoundaryDensity> = grid
        .par_iter()
        .map(|&(m, c)| evaluate_case(&cases[c], &symbols[m].0, &symbols[m].1, p.n))
        .collect::<Result<_, _>>()?;
    let at = |m: usize, c: usize| &values[m * cases.len() + c];
    Ok(cases
        .iter()
        .enumerate()
        .map(|(c, case)| {
            let value = at(0, c).clone();
            let mut terms: Vec<(String, BoundaryDensity)> = (1..masks.len())
                .filter(|&m| !at(m, c).is_zero())
                .map(|m| (masks[m].0.to_string(), at(m, c).clone()))
                .collect();
            let parts: Vec<BoundaryDensity> = (1..masks.len()).map(|m| at(m, c).clone()).collect();
            let residual = &value - &boundary_total(&parts);
            if !residual.is_zero() {
                terms.push(("residual".to_string(), residual));
            }
            PairingCase { case: *case, value, terms }
        })
        .collect())
}

/// Named group of cases and its expected value.
struct Expect {
    id: &'static str,
    cases: &'static [CaseId],
    expected: &'static str,
}

const ALL_CASES: &[CaseId] = &[CaseId::AI, CaseId::AII, CaseId::AIII, CaseId::B, CaseId::C];
const A_CASES: &[CaseId] = &[CaseId::AI, CaseId::AII, CaseId::AIII];

fn pairing_for(suite: SuiteId) -> Option<(Pairing, Vec<Expect>)> {
    let e = |id, cases, expected| Expect { id, cases, expected };
    let d4 = OperatorSpec::d_hat(4);
    let d6 = OperatorSpec::d_hat(6);
    let s6 = OperatorSpec::d_hat_adjoint(6);
    Some(match suite {
        SuiteId::Kkw4 => (
            Pairing { n: 4, first: d4, second: SecondFactor::Inverse(OperatorSpec::d_hat_adjoint(4)) },
            vec![
                e("a)I", &[CaseId::AI], "0"),
                e("a)II", &[CaseId::AII], "-3/2*h1*pi*omega_3"),
                e("a)III", &[CaseId::AIII], "3/2*h1*pi*omega_3"),
                e("b)", &[CaseId::B], "9/2*h1*pi*omega_3 - 4*thetap_n*pi*omega_3"),
                e("c)", &[CaseId::C], "-9/2*h1*pi*omega_3 - 4*thetap_n*pi*omega_3"),
                e("total", ALL_CASES, "-8*thetap_n*pi*omega_3"),
            ],
        ),
        SuiteId::Kkw4Sq => (
            Pairing { n: 4, first: d4, second: SecondFactor::Inverse(d4) },
            vec![
                e("a)", A_CASES, "0"),
                e("b)", &[CaseId::B], "9/2*h1*pi*omega_3 - 4*thetap_n*pi*omega_3"),
                e("c)", &[CaseId::C], "-9/2*h1*pi*omega_3 + 4*thetap_n*pi*omega_3"),
                e("total", ALL_CASES, "0"),
            ],
        ),
        SuiteId::Kkw6 => (
            Pairing { n: 6, first: d6, second: SecondFactor::CubeInverse([s6, d6, s6]) },
            vec![
                e("a)I", &[CaseId::AI], "0"),
                e("a)II", &[CaseId::AII], "-15/2*h1*pi*omega_5"),
                e("a)III", &[CaseId::AIII], "25/2*h1*pi*omega_5"),
                e("b)", &[CaseId::B], "(-195/8-41/8*i)*h1*pi*omega_5 + 120*i*thetap_n*pi*omega_5"),
                e("c)", &[CaseId::C], "55/2*h1*pi*omega_5"),
                e("total", ALL_CASES, "(65/8-41/8*i)*h1*pi*omega_5 + 120*i*thetap_n*pi*omega_5"),
            ],
        ),
        SuiteId::Kkw6Cu => (
            Pairing { n: 6, first: d6, second: SecondFactor::CubeInverse([d6, d6, d6]) },
            vec![
                e("a)", A_CASES, "5*h1*pi*omega_5"),
                e("b)", &[CaseId::B], "(-195/8-41/8*i)*h1*pi*omega_5"),
                e("c)", &[CaseId::C], "55/2*h1*pi*omega_5"),
                e("total", ALL_CASES, "(65/8-41/8*i)*h1*pi*omega_5"),
            ],
        ),
        _ => return None,
    })
}

/// Sums the selected cases and their ledgers, source by source.
fn group_record(ex: &Expect, n: usize, results: &[PairingCase]) -> CaseRecord {
    let picked: Vec<&PairingCase> = results.iter().filter(|r| ex.cases.contains(&r.case.id)).collect();
    let computed = boundary_total(&picked.iter().map(|r| r.value.clone()).collect::<Vec<_>>());
    let mut terms: Vec<TermEntry> = Vec::new();
    for r in &picked {
        for (source, v) in &r.terms {
            let source = if picked.len() > 1 { format!("{} {}", r.case.id, source) } else { source.clone() };
            terms.push(TermEntry { source, value: v.to_string() });
        }
    }
    match BoundaryDensity::parse(ex.expected, n) {
        Ok(expected) => CaseRecord::new(ex.id, expected.to_string(), computed.to_string(), expected == computed)
            .with_terms(terms),
        Err(e) => CaseRecord::failed(ex.id, ex.expected, e),
    }
}

fn pairing_suite(suite: SuiteId, opts: &SuiteOptions) -> SuiteReport {
    let (pairing, expects) = pairing_for(suite).expect("pairing suite");
    let cases = match evaluate_pairing(&pairing, opts) {
        Ok(results) => expects.iter().map(|ex| group_record(ex, pairing.n, &results)).collect(),
        Err(e) => expects.iter().map(|ex| CaseRecord::failed(ex.id, ex.expected, &e)).collect(),
    };
    SuiteReport::new(suite.name(), cases)
}

pub fn verify_suite(suite: SuiteId) -> SuiteReport {
    verify_suite_with(suite, &SuiteOptions::default())
}

/// Runs a suite; the report content does not depend on `opts.parallel`.
pub fn verify_suite_with(suite: SuiteId, opts: &SuiteOptions) -> SuiteReport {
    let run = || match suite {
        SuiteId::Interior => SuiteReport::new(suite.name(), super::interior::interior_records(opts.dim)),
        SuiteId::Lemmas => SuiteReport::new(suite.name(), super::lemmas::lemma_records(opts.dim)),
        SuiteId::Spectral => crate::spectral::spectral_report(),
        _ => pairing_suite(suite, opts),
    };
    match opts.parallel {
        Some(k) => rayon::ThreadPoolBuilder::new()
            .num_threads(k.max(1))
            .build()
            .map(|pool| pool.install(run))
            .unwrap_or_else(|_| run()),
        None => run(),
    }
}
