//! Expression language, runner and the binary's exit-status contract.

use std::path::PathBuf;
use std::process::Command as Process;

use num_bigint::BigUint;
use proptest::prelude::*;

use kkwcas::cli::{
    eval_str, golden_diff, golden_dir, golden_path, parse_expr, run, verify, Atom, BinOp, CliError, Command, Covector,
    ExprAst, Func, GenAction, ReportFormat,
};
use kkwcas::kkw::{SuiteId, SuiteReport};

#[test]
fn documented_evaluations() {
    assert_eq!(eval_str("tr( c(dxn) * c(dxn) )", 4).unwrap(), "-16");
    assert_eq!(eval_str("tr( c(thetap) * c(dxn) )", 6).unwrap(), "-64*thetap_n");
    // π⁺ of i c(ξ)/|ξ|⁴ against its closed form.
    let lhs = eval_str("piplus( (i * c(xi)) / (1 + xin^2)^2 )", 4).unwrap();
    let rhs = eval_str("-i * ((i*xin + 2) * c(xi') + i * c(dxn)) / (4 * (xin - i)^2)", 4).unwrap();
    assert_eq!(lhs, rhs);
}

#[test]
fn integrals_and_derivatives() {
    assert_eq!(eval_str("intxin(1 / (1 + xin^2))", 4).unwrap(), "pi");
    assert_eq!(eval_str("sphere(intxin(tr(c(xi') * c(xi')) / (1 + xin^2)^2))", 4).unwrap(), "-8*pi*omega_3");
    assert_eq!(eval_str("dxn(c(xi')) - dxnc(xi')", 6).unwrap(), "0");
    assert_eq!(eval_str("dxin(xin^3)", 4).unwrap(), "3*xin^2");
    // Leibniz rule: ∂ₓₙ(c(ξ')²) = 2·(h1/2)·c(ξ')², i.e. −h1 Σξ_j².
    assert_eq!(eval_str("dxn(c(xi') * c(xi'))", 4).unwrap(), "-xi_1^2*h1 - xi_2^2*h1 - xi_3^2*h1");
    assert!(eval_str("dxn(c(theta))", 4).is_err());
    assert!(eval_str("c(e1) / c(e2)", 4).is_err());
    assert!(eval_str("c(e5)", 4).is_err());
}

#[test]
fn parse_errors_report_offsets() {
    let err = parse_expr("tr(").unwrap_err();
    assert_eq!(err.offset, 3);
    let err = parse_expr("1 + * 2").unwrap_err();
    assert_eq!(err.offset, 4);
    assert!(err.expected.iter().any(|e| e.contains("number")));
    assert_eq!(parse_expr("c(e1) c(e2)").unwrap_err().offset, 6);
    assert_eq!(parse_expr("x^y").unwrap_err().offset, 0);
}

fn leaf() -> impl Strategy<Value = ExprAst> {
    let covector = prop_oneof![
        (1usize..7).prop_map(Covector::E),
        Just(Covector::Dxn),
        Just(Covector::XiPrime),
        Just(Covector::Xi),
        Just(Covector::Theta),
        Just(Covector::ThetaP),
    ];
    let action = prop_oneof![Just(GenAction::C), Just(GenAction::CBar)];
    let symbol = prop::sample::select(vec!["h1", "pi", "s", "thetap_n", "omega_3", "xi_2", "theta_1"]);
    prop_oneof![
        (0u64..1000).prop_map(|v| Atom::Int(BigUint::from(v))),
        Just(Atom::I),
        Just(Atom::Xin),
        Just(Atom::DxnCXiPrime),
        symbol.prop_map(|s| Atom::Symbol(s.to_string())),
        (action, covector).prop_map(|(a, v)| Atom::Gen(a, v)),
    ]
    .prop_map(ExprAst::Atom)
}

fn expr() -> impl Strategy<Value = ExprAst> {
    leaf().prop_recursive(5, 48, 2, |inner| {
        let op = prop_oneof![Just(BinOp::Add), Just(BinOp::Sub), Just(BinOp::Mul), Just(BinOp::Div)];
        prop_oneof![
            inner.clone().prop_map(|e| ExprAst::Neg(Box::new(e))),
            (inner.clone(), 0u32..5).prop_map(|(e, k)| ExprAst::Pow(Box::new(e), k)),
            (prop::sample::select(Func::ALL.to_vec()), inner.clone()).prop_map(|(f, e)| ExprAst::Call(f, Box::new(e))),
            (op, inner.clone(), inner).prop_map(|(op, a, b)| ExprAst::bin(op, a, b)),
        ]
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn print_parse_fixpoint(e in expr()) {
        let printed = e.to_string();
        let reparsed = parse_expr(&printed).unwrap();
        prop_assert_eq!(&reparsed, &e, "printed as {}", printed);
        prop_assert_eq!(reparsed.to_string(), printed);
    }
}

fn render(suite: &str, parallel: Option<usize>, format: ReportFormat) -> String {
    verify(suite, None, format, None, parallel, false).unwrap().render()
}

#[test]
fn reports_identical_across_thread_counts() {
    for suite in ["kkw4", "kkw4sq", "kkw6"] {
        let base = render(suite, Some(1), ReportFormat::Json);
        for k in [2, 4, 8] {
            assert_eq!(render(suite, Some(k), ReportFormat::Json), base, "{suite} --parallel {k}");
        }
        assert_eq!(render(suite, None, ReportFormat::Text), render(suite, Some(3), ReportFormat::Text));
    }
}

#[test]
fn json_report_round_trips() {
    let text = render("kkw4", None, ReportFormat::Json);
    let report = SuiteReport::from_json(&text).unwrap();
    assert_eq!(report.cases.len(), 6);
    assert!(report.all_match());
    assert_eq!(report.to_json() + "\n", text);
}

#[test]
fn flags_are_validated() {
    assert!(matches!(verify("kkw6", Some(4), ReportFormat::Text, None, None, false), Err(CliError::BadFlag(_))));
    assert!(matches!(verify("lemmas", Some(5), ReportFormat::Text, None, None, false), Err(CliError::BadFlag(_))));
    assert!(matches!(verify("kkw4", None, ReportFormat::Text, None, Some(0), false), Err(CliError::BadFlag(_))));
    assert!(matches!(verify("kkw5", None, ReportFormat::Text, None, None, false), Err(CliError::UnknownSuite(_))));
}

#[test]
fn checked_in_goldens_are_current() {
    let dir = golden_dir(Some(&PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("goldens")));
    for id in SuiteId::ALL {
        let text = std::fs::read_to_string(golden_path(&dir, id)).unwrap();
        let report = kkwcas::kkw::verify_suite(id);
        assert!(golden_diff(&report, &text).is_empty(), "{id} drifted from its golden file");
    }
}

#[test]
fn golden_flag_reports_drift() {
    let dir = std::env::temp_dir().join(format!("kkw-golden-flag-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("kkw4.golden");
    let good = kkwcas::kkw::verify_suite(SuiteId::Kkw4).golden_lines();
    std::fs::write(&path, &good).unwrap();
    assert!(verify("kkw4", None, ReportFormat::Text, Some(&path), None, false).unwrap().passed());
    std::fs::write(&path, good.replace("-8*thetap_n", "-9*thetap_n")).unwrap();
    let doc = verify("kkw4", None, ReportFormat::Text, Some(&path), None, false).unwrap();
    assert!(!doc.passed());
    assert!(doc.render().contains("golden mismatch total"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn run_eval_writes_value() {
    let mut out = Vec::new();
    let code = run(&Command::Eval { expr: "tr(cb(e1) * cb(e1))".into(), dim: 4 }, &mut out).unwrap();
    assert_eq!(code, 0);
    assert_eq!(String::from_utf8(out).unwrap(), "16\n");
}

fn binary() -> Process {
    Process::new(env!("CARGO_BIN_EXE_kkwcas"))
}

#[test]
fn binary_exit_status_contract() {
    let ok = binary().args(["verify", "--suite", "kkw4", "--report", "json"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert!(SuiteReport::from_json(&String::from_utf8(ok.stdout).unwrap()).unwrap().all_match());

    let injected = binary().args(["verify", "--suite", "kkw4", "--flip-b02"]).output().unwrap();
    assert_eq!(injected.status.code(), Some(1));
    assert!(String::from_utf8(injected.stdout).unwrap().contains("[MISMATCH] b)"));

    let unknown = binary().args(["verify", "--suite", "nope"]).output().unwrap();
    assert_eq!(unknown.status.code(), Some(2));
    let bad_dim = binary().args(["verify", "--suite", "kkw4", "--dim", "6"]).output().unwrap();
    assert_eq!(bad_dim.status.code(), Some(2));

    let eval = binary().args(["eval", "tr( c(thetap) * c(dxn) )", "--dim", "6"]).output().unwrap();
    assert_eq!(String::from_utf8(eval.stdout).unwrap(), "-64*thetap_n\n");
    let parse = binary().args(["eval", "tr("]).output().unwrap();
    assert_eq!(parse.status.code(), Some(2));
    assert!(String::from_utf8(parse.stderr).unwrap().contains("byte 3"));
}

#[test]
fn golden_directory_from_environment() {
    let dir = std::env::temp_dir().join(format!("kkw-goldens-env-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    let check = || binary().arg("goldens").env("KKW_GOLDEN_DIR", &dir).output().unwrap();
    assert_eq!(check().status.code(), Some(1), "empty directory has no snapshots");
    let write = binary().args(["goldens", "--write"]).env("KKW_GOLDEN_DIR", &dir).output().unwrap();
    assert_eq!(write.status.code(), Some(0));
    assert!(dir.join("spectral.golden").exists());
    assert_eq!(check().status.code(), Some(0));
    std::fs::remove_dir_all(&dir).unwrap();
}
