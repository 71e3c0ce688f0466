use pykkwcas::api;

#[test]
fn eval_and_errors() {
    assert_eq!(api::eval("tr(c(dxn) * c(dxn))", 4).unwrap(), "-16");
    assert!(api::eval("tr(", 4).unwrap_err().contains("byte 3"));
}

#[test]
fn verify_reports_status() {
    let (json, ok) = api::verify("kkw4", None, Some(2), true).unwrap();
    assert!(ok);
    assert!(json.contains("\"suite\": \"kkw4\""));
    let (_, ok) = api::verify("spectral", None, None, false).unwrap();
    assert!(!ok);
    assert!(api::verify("nope", None, None, true).is_err());
    assert_eq!(api::suites().len(), 7);
    assert_eq!(api::a4_vector().unwrap()[0], "20");
}
