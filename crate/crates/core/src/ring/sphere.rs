//! Integration of polynomials over the unit sphere of the tangential covector space.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::{Monomial, MultiPoly, Scalar, SymbolId};

fn double_factorial(k: i64) -> BigInt {
    let mut acc = BigInt::one();
    let mut j = k;
    while j > 1 {
        acc *= BigInt::from(j);
        j -= 2;
    }
    acc
}

/// ∫_{S^{m-1}} ξ^α dσ / Ω_m for an exponent vector, as an exact rational.
pub fn sphere_moment(alpha: &[u32], m: u32) -> BigRational {
    if alpha.iter().any(|e| e % 2 == 1) {
        return BigRational::from_integer(0.into());
    }
    let num = alpha
        .iter()
        .fold(BigInt::one(), |acc, &e| acc * double_factorial(e as i64 - 1));
    let half: u32 = alpha.iter().sum::<u32>() / 2;
    let den = (1..=half).fold(BigInt::one(), |acc, k| acc * BigInt::from(m + 2 * k - 2));
    BigRational::new(num, den)
}

/// Replace every ξ-monomial by its sphere moment times `omega(m)`.
///
/// Symbols other than `xi_j` pass through as constants.
pub fn sphere_integrate(p: &MultiPoly, m: u32) -> MultiPoly {
    let mut out = MultiPoly::zero();
    for (mono, c) in p.terms() {
        let mut alpha = Vec::new();
        let mut rest = Vec::new();
        for &(s, e) in mono.powers() {
            match s {
                SymbolId::Xi(j) => {
                    assert!((j as u32) <= m, "xi_{j} outside a sphere of dimension {m}");
                    alpha.push(e)
                }
                _ => rest.push((s, e)),
            }
        }
        let w = sphere_moment(&alpha, m);
        if w == BigRational::from_integer(0.into()) {
            continue;
        }
        rest.push((SymbolId::Omega(m as u8), 1));
        out.add_term(Monomial::from_powers(rest), &(c * &Scalar::from_rational(w)));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xi(j: u8) -> MultiPoly {
        MultiPoly::var(SymbolId::Xi(j))
    }

    fn omega(m: u8) -> MultiPoly {
        MultiPoly::var(SymbolId::Omega(m))
    }

    #[test]
    fn low_moments() {
        assert!(sphere_integrate(&xi(1), 3).is_zero());
        assert_eq!(sphere_integrate(&xi(1).pow(2), 3), omega(3).scale(&Scalar::ratio(1, 3)));
        let p = &xi(1).pow(2) * &xi(2).pow(2);
        assert_eq!(sphere_integrate(&p, 3), omega(3).scale(&Scalar::ratio(1, 15)));
    }

    #[test]
    fn constraint_consistency() {
        for m in 2..=7u8 {
            let p = (1..=m).fold(MultiPoly::zero(), |acc, j| &acc + &xi(j).pow(2));
            assert_eq!(sphere_integrate(&p, m as u32), omega(m));
            let q = p.pow(2);
            assert_eq!(sphere_integrate(&q, m as u32), omega(m));
        }
    }
}
