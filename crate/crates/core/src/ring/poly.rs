//! Sparse multivariate polynomials over ℚ(i) in formal symbols.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::{Scalar, SymbolId};

/// Product of symbol powers, sorted by symbol with nonzero exponents.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Monomial(Vec<(SymbolId, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(sym: SymbolId) -> Self {
        Monomial(vec![(sym, 1)])
    }

    pub fn from_powers(mut powers: Vec<(SymbolId, u32)>) -> Self {
        powers.sort();
        let mut out: Vec<(SymbolId, u32)> = Vec::with_capacity(powers.len());
        for (s, e) in powers {
            match out.last_mut() {
                Some((t, f)) if *t == s => *f += e,
                _ => out.push((s, e)),
            }
        }
        out.retain(|(_, e)| *e > 0);
        Monomial(out)
    }

    pub fn powers(&self) -> &[(SymbolId, u32)] {
        &self.0
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn exponent(&self, sym: SymbolId) -> u32 {
        self.0
            .binary_search_by(|(s, _)| s.cmp(&sym))
            .map(|k| self.0[k].1)
            .unwrap_or(0)
    }

    /// Monomial with `sym` removed, plus its former exponent.
    pub fn split_off(&self, sym: SymbolId) -> (Monomial, u32) {
        let e = self.exponent(sym);
        let rest = self.0.iter().filter(|(s, _)| *s != sym).cloned().collect();
        (Monomial(rest), e)
    }

    pub fn mul(&self, o: &Monomial) -> Monomial {
        let (a, b) = (&self.0, &o.0);
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut i, mut j) = (0, 0);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i]);
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j]);
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((a[i].0, a[i].1 + b[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        Monomial(out)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, (s, e)) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{s}")?;
            } else {
                write!(f, "{s}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Map from monomial to nonzero coefficient; equal polynomials have equal maps.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, Scalar>,
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn one() -> Self {
        MultiPoly::constant(Scalar::one())
    }

    pub fn constant(c: Scalar) -> Self {
        MultiPoly::term(c, Monomial::one())
    }

    pub fn int(v: i64) -> Self {
        MultiPoly::constant(Scalar::from_int(v))
    }

    pub fn ratio(num: i64, den: i64) -> Self {
        MultiPoly::constant(Scalar::ratio(num, den))
    }

    pub fn i() -> Self {
        MultiPoly::constant(Scalar::i())
    }

    pub fn var(sym: SymbolId) -> Self {
        MultiPoly::term(Scalar::one(), Monomial::var(sym))
    }

    pub fn term(c: Scalar, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        MultiPoly { terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, Scalar)>>(it: I) -> Self {
        let mut p = MultiPoly::zero();
        for (m, c) in it {
            p.add_term(m, &c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The value if the polynomial is a constant.
    pub fn as_constant(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, m: Monomial, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_assign(&mut self, o: &MultiPoly) {
        for (m, c) in &o.terms {
            self.add_term(m.clone(), c);
        }
    }

    pub fn sub_assign(&mut self, o: &MultiPoly) {
        for (m, c) in &o.terms {
            self.add_term(m.clone(), &-c);
        }
    }

    pub fn scale(&self, k: &Scalar) -> MultiPoly {
        if k.is_zero() {
            return MultiPoly::zero();
        }
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(t, c)| (t.mul(m), c.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> MultiPoly {
        let mut acc = MultiPoly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn symbols(&self) -> Vec<SymbolId> {
        let mut out: Vec<SymbolId> = self
            .terms
            .keys()
            .flat_map(|m| m.powers().iter().map(|(s, _)| *s))
            .collect();
        out.sort();
        out.dedup();
        out
    }

    pub fn contains_symbol(&self, sym: SymbolId) -> bool {
        self.terms.keys().any(|m| m.exponent(sym) > 0)
    }

    pub fn degree_in(&self, sym: SymbolId) -> u32 {
        self.terms.keys().map(|m| m.exponent(sym)).max().unwrap_or(0)
    }

    /// Substitute each symbol for which `f` returns a polynomial.
    pub fn substitute(&self, f: &dyn Fn(SymbolId) -> Option<MultiPoly>) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (m, c) in &self.terms {
            let mut kept = Vec::new();
            let mut factor = MultiPoly::constant(c.clone());
            for &(s, e) in m.powers() {
                match f(s) {
                    Some(v) => factor = &factor * &v.pow(e),
                    None => kept.push((s, e)),
                }
            }
            out.add_assign(&factor.mul_monomial(&Monomial::from_powers(kept)));
        }
        out
    }

    /// Group by powers of `sym`: coefficient polynomials indexed by exponent.
    pub fn collect_in(&self, sym: SymbolId) -> Vec<MultiPoly> {
        let mut out: Vec<MultiPoly> = Vec::new();
        for (m, c) in &self.terms {
            let (rest, e) = m.split_off(sym);
            let e = e as usize;
            if out.len() <= e {
                out.resize(e + 1, MultiPoly::zero());
            }
            out[e].add_term(rest, c);
        }
        out
    }

    pub fn map_coeffs(&self, f: impl Fn(&Scalar) -> Scalar) -> MultiPoly {
        MultiPoly::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    /// Parse the canonical text form produced by `Display`.
    pub fn parse(text: &str) -> Result<MultiPoly, super::RingError> {
        super::text::parse_poly(text)
    }
}

impl fmt::Display for MultiPoly {
    /// Canonical form: terms in monomial order joined by ` + ` / ` - `, e.g.
    /// `-3/2*h1*pi*omega_3 + i*thetap_n`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative_leading();
            let mag = if neg { -c } else { c.clone() };
            let body = if m.is_one() {
                mag.to_string()
            } else if mag.is_one() {
                m.to_string()
            } else {
                format!("{mag}*{m}")
            };
            match (k, neg) {
                (0, true) => write!(f, "-{body}")?,
                (0, false) => f.write_str(&body)?,
                (_, true) => write!(f, " - {body}")?,
                (_, false) => write!(f, " + {body}")?,
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, o: &MultiPoly) -> MultiPoly {
        let mut r = self.clone();
        r.add_assign(o);
        r
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, o: &MultiPoly) -> MultiPoly {
        let mut r = self.clone();
        r.sub_assign(o);
        r
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn mul(self, o: &MultiPoly) -> MultiPoly {
        if self.is_zero() || o.is_zero() {
            return MultiPoly::zero();
        }
        let mut r = MultiPoly::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                r.add_term(m1.mul(m2), &(c1 * c2));
            }
        }
        r
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $m(self, o: MultiPoly) -> MultiPoly {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

impl From<Scalar> for MultiPoly {
    fn from(c: Scalar) -> Self {
        MultiPoly::constant(c)
    }
}

impl From<SymbolId> for MultiPoly {
    fn from(s: SymbolId) -> Self {
        MultiPoly::var(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Axis;

    fn h() -> MultiPoly {
        MultiPoly::var(SymbolId::H1)
    }
    fn t1() -> MultiPoly {
        MultiPoly::var(SymbolId::Theta(Axis::Tan(1)))
    }

    #[test]
    fn difference_of_squares() {
        let lhs = &(&h() + &t1()) * &(&h() - &t1());
        let rhs = &(&h() * &h()) - &(&t1() * &t1());
        assert_eq!(lhs, rhs);
        assert!((&lhs * &MultiPoly::zero()).is_zero());
    }

    #[test]
    fn sphere_point_substitution() {
        let p = (1..=3).fold(MultiPoly::zero(), |acc, j| {
            &acc + &MultiPoly::var(SymbolId::Xi(j)).pow(2)
        });
        let pt = [Scalar::ratio(3, 5), Scalar::ratio(4, 5), Scalar::zero()];
        let v = p.substitute(&|s| match s {
            SymbolId::Xi(j) => Some(MultiPoly::constant(pt[j as usize - 1].clone())),
            _ => None,
        });
        assert_eq!(v, MultiPoly::one());
    }

    #[test]
    fn canonical_text() {
        let p = &h().scale(&Scalar::ratio(-3, 2)) + &t1().scale(&Scalar::i());
        assert_eq!(p.to_string(), "-3/2*h1 + i*theta_1");
        assert_eq!(MultiPoly::zero().to_string(), "0");
        assert_eq!((-&h()).to_string(), "-h1");
    }
}
