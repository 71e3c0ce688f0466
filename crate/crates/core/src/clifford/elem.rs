//! Elements of the algebra generated by c(e_i), c̄(e_i), stored in the
//! normal-ordered word basis c_S c̄_T (indices increasing, c's first).
//!
//! The word algebra is a faithful image of the ε/ι model in [`super::model`]:
//! the 4ⁿ words are linearly independent there, and `to_matrix` maps products
//! to products (checked exhaustively in the tests).

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::model::{generators, ExteriorMatrix};
use crate::ring::{MultiPoly, RatXi, Scalar};

/// `(c-mask, c̄-mask)`, bit `i-1` for index `i`.
pub type Word = (u32, u32);

/// Sign of e_S e_U = ± e_{S △ U} for generators squaring to `square`.
fn blade_sign(s: u32, u: u32, square: i8) -> i8 {
    let mut inversions = 0u32;
    let mut rest = s;
    while rest != 0 {
        let a = rest.trailing_zeros();
        inversions += (u & ((1u32 << a) - 1)).count_ones();
        rest &= rest - 1;
    }
    let mut sign = if inversions % 2 == 1 { -1 } else { 1 };
    if square < 0 && (s & u).count_ones() % 2 == 1 {
        sign = -sign;
    }
    sign
}

/// (c_S c̄_T)(c_U c̄_V) = sign · c_{S△U} c̄_{T△V}.
pub fn word_product(x: Word, y: Word) -> (i8, Word) {
    let (s, t) = x;
    let (u, v) = y;
    let cross = if (t.count_ones() * u.count_ones()) % 2 == 1 { -1 } else { 1 };
    let sign = cross * blade_sign(s, u, -1) * blade_sign(t, v, 1);
    (sign, (s ^ u, t ^ v))
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CliffordElem {
    n: u8,
    terms: BTreeMap<Word, RatXi>,
}

impl CliffordElem {
    pub fn zero(n: usize) -> Self {
        CliffordElem { n: n as u8, terms: BTreeMap::new() }
    }

    pub fn identity(n: usize) -> Self {
        CliffordElem::scalar(n, RatXi::one())
    }

    pub fn scalar(n: usize, v: RatXi) -> Self {
        CliffordElem::word(n, (0, 0), v)
    }

    pub fn word(n: usize, w: Word, v: RatXi) -> Self {
        let mut terms = BTreeMap::new();
        if !v.is_zero() {
            terms.insert(w, v);
        }
        CliffordElem { n: n as u8, terms }
    }

    /// c(e_i), 1-based.
    pub fn c(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= n);
        CliffordElem::word(n, (1 << (i - 1), 0), RatXi::one())
    }

    /// c̄(e_i), 1-based.
    pub fn cbar(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= n);
        CliffordElem::word(n, (0, 1 << (i - 1)), RatXi::one())
    }

    pub fn dim(&self) -> usize {
        self.n as usize
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &RatXi)> {
        self.terms.iter()
    }

    pub fn coeff(&self, w: Word) -> RatXi {
        self.terms.get(&w).cloned().unwrap_or_default()
    }

    /// The coefficient if the element is a multiple of the identity.
    pub fn as_scalar(&self) -> Option<RatXi> {
        match self.terms.len() {
            0 => Some(RatXi::zero()),
            1 => self.terms.get(&(0, 0)).cloned(),
            _ => None,
        }
    }

    fn add_word(&mut self, w: Word, v: RatXi) {
        if v.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(v);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &v;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn scale(&self, k: &RatXi) -> CliffordElem {
        let mut out = CliffordElem::zero(self.dim());
        for (w, v) in &self.terms {
            out.add_word(*w, v * k);
        }
        out
    }

    pub fn scale_poly(&self, k: &MultiPoly) -> CliffordElem {
        self.scale(&RatXi::constant(k.clone()))
    }

    pub fn scale_scalar(&self, k: &Scalar) -> CliffordElem {
        let mut out = CliffordElem::zero(self.dim());
        for (w, v) in &self.terms {
            out.add_word(*w, v.scale_scalar(k));
        }
        out
    }

    /// Apply `f` to every coefficient (π⁺, ∂ξₙ, substitution, ...).
    pub fn map_coeffs(&self, f: impl Fn(&RatXi) -> RatXi) -> CliffordElem {
        let mut out = CliffordElem::zero(self.dim());
        for (w, v) in &self.terms {
            out.add_word(*w, f(v));
        }
        out
    }

    pub fn try_map_coeffs<E>(&self, f: impl Fn(&RatXi) -> Result<RatXi, E>) -> Result<CliffordElem, E> {
        let mut out = CliffordElem::zero(self.dim());
        for (w, v) in &self.terms {
            out.add_word(*w, f(v)?);
        }
        Ok(out)
    }

    /// Matrix trace on Λ*(ℝⁿ): 2ⁿ times the identity coefficient.
    pub fn trace(&self) -> RatXi {
        self.coeff((0, 0)).scale_scalar(&Scalar::from_int(1i64 << self.n))
    }

    /// tr(self · o) without forming the product: only w·w pairs reach the identity word.
    pub fn trace_product(&self, o: &CliffordElem) -> RatXi {
        let (small, large) = if self.terms.len() <= o.terms.len() { (self, o) } else { (o, self) };
        let mut parts = Vec::new();
        for (&w, a) in &small.terms {
            if let Some(b) = large.terms.get(&w) {
                let (sign, _) = word_product(w, w);
                let p = a * b;
                parts.push(if sign > 0 { p } else { -p });
            }
        }
        sum_ratxi(parts).scale_scalar(&Scalar::from_int(1i64 << self.n))
    }

    /// Substitute symbols in every coefficient.
    pub fn substitute(&self, f: &dyn Fn(crate::ring::SymbolId) -> Option<MultiPoly>) -> CliffordElem {
        self.map_coeffs(|r| r.substitute(f))
    }

    /// Image in the explicit ε/ι model.
    pub fn to_matrix(&self) -> ExteriorMatrix {
        let g = generators(self.dim()).expect("dimension checked at construction");
        let mut m = ExteriorMatrix::zero(1 << self.n);
        for (&(s, t), v) in &self.terms {
            m.add_perm(&g.word(s, t), v);
        }
        m
    }

    pub fn pow(&self, k: u32) -> CliffordElem {
        let mut acc = CliffordElem::identity(self.dim());
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    pub fn commutator(&self, o: &CliffordElem) -> CliffordElem {
        &(self * o) - &(o * self)
    }
}

fn fmt_word(w: Word) -> String {
    let mut parts = Vec::new();
    for (mask, name) in [(w.0, "c"), (w.1, "cb")] {
        for i in 0..32 {
            if mask >> i & 1 == 1 {
                parts.push(format!("{name}{}", i + 1));
            }
        }
    }
    parts.join("*")
}

impl fmt::Display for CliffordElem {
    /// Coefficient per normal-ordered word, e.g. `(h1)*c1*cb1*cb4 + (-1/2*h1)*c4`.
    /// A pure multiple of the identity prints as its coefficient alone.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        if let Some(s) = self.as_scalar() {
            return write!(f, "{s}");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(&w, v)| if w == (0, 0) { format!("({v})") } else { format!("({v})*{}", fmt_word(w)) })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl<'a> Add<&'a CliffordElem> for &'a CliffordElem {
    type Output = CliffordElem;
    fn add(self, o: &CliffordElem) -> CliffordElem {
        debug_assert_eq!(self.n, o.n);
        let mut out = self.clone();
        for (w, v) in &o.terms {
            out.add_word(*w, v.clone());
        }
        out
    }
}

impl<'a> Sub<&'a CliffordElem> for &'a CliffordElem {
    type Output = CliffordElem;
    fn sub(self, o: &CliffordElem) -> CliffordElem {
        debug_assert_eq!(self.n, o.n);
        let mut out = self.clone();
        for (w, v) in &o.terms {
            out.add_word(*w, -v);
        }
        out
    }
}

impl<'a> Mul<&'a CliffordElem> for &'a CliffordElem {
    type Output = CliffordElem;
    fn mul(self, o: &CliffordElem) -> CliffordElem {
        debug_assert_eq!(self.n, o.n);
        // Collect per target word first so each coefficient sum is normalized once.
        let mut acc: BTreeMap<Word, Vec<RatXi>> = BTreeMap::new();
        for (&x, a) in &self.terms {
            for (&y, b) in &o.terms {
                let (sign, w) = word_product(x, y);
                let p = a * b;
                acc.entry(w).or_default().push(if sign > 0 { p } else { -p });
            }
        }
        let mut out = CliffordElem::zero(self.dim());
        for (w, parts) in acc {
            let sum = sum_ratxi(parts);
            if !sum.is_zero() {
                out.terms.insert(w, sum);
            }
        }
        out
    }
}

/// Sum over a shared common denominator.
pub(crate) fn sum_ratxi(parts: Vec<RatXi>) -> RatXi {
    let mut it = parts.into_iter();
    let Some(first) = it.next() else {
        return RatXi::zero();
    };
    it.fold(first, |acc, p| &acc + &p)
}

impl Neg for &CliffordElem {
    type Output = CliffordElem;
    fn neg(self) -> CliffordElem {
        CliffordElem {
            n: self.n,
            terms: self.terms.iter().map(|(w, v)| (*w, -v)).collect(),
        }
    }
}

impl Neg for CliffordElem {
    type Output = CliffordElem;
    fn neg(self) -> CliffordElem {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<CliffordElem> for CliffordElem {
            type Output = CliffordElem;
            fn $m(self, o: CliffordElem) -> CliffordElem {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn squares_and_anticommutation() {
        let n = 4;
        let id = CliffordElem::identity(n);
        assert_eq!(&CliffordElem::c(n, 1) * &CliffordElem::c(n, 1), -&id);
        assert_eq!(&CliffordElem::cbar(n, 1) * &CliffordElem::cbar(n, 1), id);
        let x = CliffordElem::c(n, 1);
        let y = CliffordElem::cbar(n, 2);
        assert!((&(&x * &y) + &(&y * &x)).is_zero());
    }

    #[test]
    fn trace_of_identity_and_normal_square() {
        assert_eq!(CliffordElem::identity(4).trace(), RatXi::scalar(Scalar::from_int(16)));
        let cn = CliffordElem::c(6, 6);
        assert_eq!((&cn * &cn).trace(), RatXi::scalar(Scalar::from_int(-64)));
    }
}
