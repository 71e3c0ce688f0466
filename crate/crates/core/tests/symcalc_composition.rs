//! Symbol composition is associative on the orders it tracks.

use kkwcas::boundary_geometry::{chart_axioms, OperatorSpec};
use kkwcas::clifford::CliffordElem;
use kkwcas::ring::{MultiPoly, Scalar, SymbolId};
use kkwcas::symcalc::{cube_and_invert, jet_compose, Sources, SymbolKit};

#[test]
fn triple_products_associate() {
    for n in [4usize, 6] {
        let kit = SymbolKit::new(chart_axioms(n), Sources::ALL);
        let (d, ds) = (OperatorSpec::d_hat(n), OperatorSpec::d_hat_adjoint(n));
        for specs in [[ds, d, ds], [d, d, d], [d, ds, d]] {
            let [a, b, c] = specs.map(|s| kit.sigma_symbols(&s));
            let left = jet_compose(&jet_compose(&a, &b, 1).unwrap(), &c, 2).unwrap();
            let right = jet_compose(&a, &jet_compose(&b, &c, 1).unwrap(), 2).unwrap();
            assert_eq!(left.value(3), right.value(3), "sigma3 n={n}");
            assert_eq!(left.value(2), right.value(2), "sigma2 n={n}");
            assert_eq!(left.dxn(3).unwrap(), right.dxn(3).unwrap(), "jet of sigma3 n={n}");
        }
    }
}

#[test]
fn cube_leading_symbol_is_cubed_clifford() {
    let n = 6;
    let kit = SymbolKit::new(chart_axioms(n), Sources::ALL);
    let d = OperatorSpec::d_hat(n);
    let cube = cube_and_invert(&kit, [d, d, d]).unwrap();
    // (i c(ξ))³ = −i c(ξ)³.
    let sq = &kit.c_xi * &kit.c_xi;
    assert_eq!(cube.sigma3, (&kit.c_xi * &sq).scale_scalar(&-Scalar::i()));
    // q₋₃ σ₃ is the identity modulo the sphere constraint: check on ξ' = e_1.
    let at_e1 = |x: &CliffordElem| {
        x.substitute(&|s| match s {
            SymbolId::Xi(1) => Some(MultiPoly::one()),
            SymbolId::Xi(_) => Some(MultiPoly::zero()),
            _ => None,
        })
    };
    let prod = at_e1(&(&cube.inverse.value(-3) * &cube.sigma3));
    assert_eq!(prod, CliffordElem::identity(n));
}
