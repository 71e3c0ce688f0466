//! Rational functions of ξₙ whose only poles are at ξₙ = ±i.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{MultiPoly, RingError, Scalar, SymbolId};

/// Dense polynomial in ξₙ with `MultiPoly` coefficients, lowest power first.
type XPoly = Vec<MultiPoly>;

fn trim(mut p: XPoly) -> XPoly {
    while p.last().is_some_and(MultiPoly::is_zero) {
        p.pop();
    }
    p
}

fn xp_add(p: &[MultiPoly], q: &[MultiPoly]) -> XPoly {
    let mut out: XPoly = vec![MultiPoly::zero(); p.len().max(q.len())];
    for (k, c) in p.iter().enumerate() {
        out[k].add_assign(c);
    }
    for (k, c) in q.iter().enumerate() {
        out[k].add_assign(c);
    }
    trim(out)
}

fn xp_mul(p: &[MultiPoly], q: &[MultiPoly]) -> XPoly {
    if p.is_empty() || q.is_empty() {
        return Vec::new();
    }
    let mut out: XPoly = vec![MultiPoly::zero(); p.len() + q.len() - 1];
    for (i, a) in p.iter().enumerate() {
        if a.is_zero() {
            continue;
        }
        for (j, b) in q.iter().enumerate() {
            if !b.is_zero() {
                out[i + j].add_assign(&(a * b));
            }
        }
    }
    trim(out)
}

fn xp_scale(p: &[MultiPoly], k: &MultiPoly) -> XPoly {
    trim(p.iter().map(|c| c * k).collect())
}

/// p(ξ)·(ξ − r).
fn xp_mul_linear(p: &[MultiPoly], r: &Scalar) -> XPoly {
    if p.is_empty() {
        return Vec::new();
    }
    let mut out: XPoly = vec![MultiPoly::zero(); p.len() + 1];
    for (k, c) in p.iter().enumerate() {
        out[k + 1].add_assign(c);
        out[k].sub_assign(&c.scale(r));
    }
    trim(out)
}

/// Synthetic division by (ξ − r): quotient and remainder p(r).
fn xp_div_linear(p: &[MultiPoly], r: &Scalar) -> (XPoly, MultiPoly) {
    if p.is_empty() {
        return (Vec::new(), MultiPoly::zero());
    }
    let n = p.len();
    let mut q: XPoly = vec![MultiPoly::zero(); n - 1];
    let mut carry = MultiPoly::zero();
    for k in (0..n).rev() {
        let cur = &p[k] + &carry.scale(r);
        if k == 0 {
            return (trim(q), cur);
        }
        q[k - 1] = cur.clone();
        carry = cur;
    }
    unreachable!()
}

fn xp_deriv(p: &[MultiPoly]) -> XPoly {
    trim(
        p.iter()
            .enumerate()
            .skip(1)
            .map(|(k, c)| c.scale(&Scalar::from_int(k as i64)))
            .collect(),
    )
}

fn binom(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    acc
}

fn scalar_big(v: BigInt) -> Scalar {
    Scalar::from_rational(BigRational::from_integer(v))
}

/// Coefficients of p(r + t) in t.
fn xp_shift(p: &[MultiPoly], r: &Scalar) -> XPoly {
    let mut out: XPoly = vec![MultiPoly::zero(); p.len()];
    for (m, c) in p.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        for (k, slot) in out.iter_mut().enumerate().take(m + 1) {
            let w = &scalar_big(binom(m as u64, k as u64)) * &r.pow((m - k) as u32);
            slot.add_assign(&c.scale(&w));
        }
    }
    trim(out)
}

/// (ξ − r)^k.
fn xp_linear_pow(r: &Scalar, k: u32) -> XPoly {
    let mut p = vec![MultiPoly::one()];
    for _ in 0..k {
        p = xp_mul_linear(&p, r);
    }
    p
}

/// Taylor coefficients g_0..g_{order-1} at `r` of p(ξ)·(ξ − other)^{-e}.
fn local_expansion(p: &[MultiPoly], r: &Scalar, other: &Scalar, e: u32, order: u32) -> XPoly {
    let shifted = xp_shift(p, r);
    let d = r - other;
    let d_inv = d.inv().expect("distinct poles");
    // (t + d)^{-e} = Σ_k (−1)^k C(e+k−1, k) d^{−e−k} t^k
    let series: Vec<Scalar> = (0..order)
        .map(|k| {
            let c = if e == 0 {
                if k == 0 {
                    BigInt::one()
                } else {
                    BigInt::zero()
                }
            } else {
                binom((e + k - 1) as u64, k as u64)
            };
            let sign = if k % 2 == 1 { -BigInt::one() } else { BigInt::one() };
            &scalar_big(c * sign) * &d_inv.pow(e + k)
        })
        .collect();
    let mut g: XPoly = vec![MultiPoly::zero(); order as usize];
    for (m, slot) in g.iter_mut().enumerate() {
        for (k, s) in series.iter().enumerate().take(m + 1) {
            if let Some(c) = shifted.get(m - k) {
                if !c.is_zero() {
                    slot.add_assign(&c.scale(s));
                }
            }
        }
    }
    g
}

/// `num(ξₙ) / ((ξₙ − i)^a (ξₙ + i)^b)` in lowest terms.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct RatXi {
    num: XPoly,
    a: u32,
    b: u32,
}

impl RatXi {
    pub fn new(num: Vec<MultiPoly>, a: u32, b: u32) -> Self {
        let mut r = RatXi { num: trim(num), a, b };
        r.normalize();
        r
    }

    fn normalize(&mut self) {
        if self.num.is_empty() {
            self.a = 0;
            self.b = 0;
            return;
        }
        let i = Scalar::i();
        let mi = -Scalar::i();
        while self.a > 0 {
            let (q, rem) = xp_div_linear(&self.num, &i);
            if !rem.is_zero() {
                break;
            }
            self.num = q;
            self.a -= 1;
        }
        while self.b > 0 {
            let (q, rem) = xp_div_linear(&self.num, &mi);
            if !rem.is_zero() {
                break;
            }
            self.num = q;
            self.b -= 1;
        }
    }

    pub fn zero() -> Self {
        RatXi::default()
    }

    pub fn one() -> Self {
        RatXi::constant(MultiPoly::one())
    }

    pub fn constant(c: MultiPoly) -> Self {
        RatXi::new(vec![c], 0, 0)
    }

    pub fn scalar(c: Scalar) -> Self {
        RatXi::constant(MultiPoly::constant(c))
    }

    /// ξₙ itself.
    pub fn xin() -> Self {
        RatXi::new(vec![MultiPoly::zero(), MultiPoly::one()], 0, 0)
    }

    /// |ξ|² = 1 + ξₙ² raised to `k` (negative allowed).
    pub fn norm_sq_pow(k: i32) -> Self {
        if k >= 0 {
            let base = RatXi::new(vec![MultiPoly::one(), MultiPoly::zero(), MultiPoly::one()], 0, 0);
            let mut acc = RatXi::one();
            for _ in 0..k {
                acc = &acc * &base;
            }
            acc
        } else {
            let e = (-k) as u32;
            RatXi::new(vec![MultiPoly::one()], e, e)
        }
    }

    pub fn num(&self) -> &[MultiPoly] {
        &self.num
    }

    pub fn pole_upper(&self) -> u32 {
        self.a
    }

    pub fn pole_lower(&self) -> u32 {
        self.b
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    pub fn is_polynomial(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    /// Degree of the numerator, `None` for zero.
    pub fn num_degree(&self) -> Option<usize> {
        self.num.len().checked_sub(1)
    }

    /// The coefficient if this is ξₙ-free.
    pub fn as_constant(&self) -> Option<MultiPoly> {
        match (self.is_polynomial(), self.num.len()) {
            (true, 0) => Some(MultiPoly::zero()),
            (true, 1) => Some(self.num[0].clone()),
            _ => None,
        }
    }

    pub fn scale(&self, k: &MultiPoly) -> RatXi {
        RatXi::new(xp_scale(&self.num, k), self.a, self.b)
    }

    pub fn scale_scalar(&self, k: &Scalar) -> RatXi {
        if k.is_zero() {
            return RatXi::zero();
        }
        // A unit scalar cannot introduce a common factor.
        RatXi {
            num: self.num.iter().map(|c| c.scale(k)).collect(),
            a: self.a,
            b: self.b,
        }
    }

    fn raise_to(&self, a: u32, b: u32) -> XPoly {
        let mut p = self.num.clone();
        for _ in self.a..a {
            p = xp_mul_linear(&p, &Scalar::i());
        }
        for _ in self.b..b {
            p = xp_mul_linear(&p, &-Scalar::i());
        }
        p
    }

    /// ∂/∂ξₙ.
    pub fn deriv(&self) -> RatXi {
        if self.is_zero() {
            return RatXi::zero();
        }
        let i = Scalar::i();
        let mi = -Scalar::i();
        // (N' (ξ−i)(ξ+i) − a N (ξ+i) − b N (ξ−i)) / ((ξ−i)^{a+1}(ξ+i)^{b+1})
        let dn = xp_deriv(&self.num);
        let t1 = xp_mul_linear(&xp_mul_linear(&dn, &i), &mi);
        let t2 = xp_mul_linear(&self.num, &mi)
            .iter()
            .map(|c| c.scale(&Scalar::from_int(-(self.a as i64))))
            .collect::<XPoly>();
        let t3 = xp_mul_linear(&self.num, &i)
            .iter()
            .map(|c| c.scale(&Scalar::from_int(-(self.b as i64))))
            .collect::<XPoly>();
        RatXi::new(xp_add(&xp_add(&t1, &t2), &t3), self.a + 1, self.b + 1)
    }

    pub fn deriv_n(&self, k: u32) -> RatXi {
        let mut r = self.clone();
        for _ in 0..k {
            r = r.deriv();
        }
        r
    }

    /// Split into (upper principal part, lower principal part, polynomial part).
    pub fn principal_parts(&self) -> (RatXi, RatXi, RatXi) {
        let i = Scalar::i();
        let mi = -Scalar::i();
        let upper = if self.a > 0 {
            let g = local_expansion(&self.num, &i, &mi, self.b, self.a);
            let mut num: XPoly = Vec::new();
            for (m, c) in g.iter().enumerate() {
                num = xp_add(&num, &xp_scale(&xp_linear_pow(&i, m as u32), c));
            }
            RatXi::new(num, self.a, 0)
        } else {
            RatXi::zero()
        };
        let lower = if self.b > 0 {
            let g = local_expansion(&self.num, &mi, &i, self.a, self.b);
            let mut num: XPoly = Vec::new();
            for (m, c) in g.iter().enumerate() {
                num = xp_add(&num, &xp_scale(&xp_linear_pow(&mi, m as u32), c));
            }
            RatXi::new(num, 0, self.b)
        } else {
            RatXi::zero()
        };
        let poly = &(self - &upper) - &lower;
        debug_assert!(poly.is_polynomial());
        (upper, lower, poly)
    }

    /// π⁺: the principal part at the upper half-plane pole.
    pub fn upper_part(&self) -> RatXi {
        self.principal_parts().0
    }

    /// ∫_ℝ r(ξₙ) dξₙ = 2πi · Res_{ξₙ=i}, as a polynomial carrying one `pi`.
    pub fn line_integral(&self) -> Result<MultiPoly, RingError> {
        let Some(deg) = self.num_degree() else {
            return Ok(MultiPoly::zero());
        };
        if deg as i64 > self.a as i64 + self.b as i64 - 2 {
            return Err(RingError::NonDecaying { degree: deg, a: self.a, b: self.b });
        }
        if self.a == 0 {
            return Ok(MultiPoly::zero());
        }
        let g = local_expansion(&self.num, &Scalar::i(), &-Scalar::i(), self.b, self.a);
        let res = &g[self.a as usize - 1];
        let two_pi_i = MultiPoly::var(SymbolId::Pi).scale(&Scalar::i().scale_int(2));
        Ok(res * &two_pi_i)
    }

    /// Inverse of `c·(ξₙ−i)^p(ξₙ+i)^q / ((ξₙ−i)^a(ξₙ+i)^b)` with `c` a nonzero constant.
    pub fn try_reciprocal(&self) -> Result<RatXi, RingError> {
        if self.is_zero() {
            return Err(RingError::NotInvertible("zero".into()));
        }
        let mut num = self.num.clone();
        let mut p = 0u32;
        let mut q = 0u32;
        for (root, count) in [(Scalar::i(), &mut p), (-Scalar::i(), &mut q)] {
            loop {
                let (quo, rem) = xp_div_linear(&num, &root);
                if !rem.is_zero() || quo.is_empty() {
                    break;
                }
                num = quo;
                *count += 1;
            }
        }
        let c = match num.as_slice() {
            [c] => c.as_constant(),
            _ => None,
        };
        let c_inv = c
            .and_then(|c| c.inv())
            .ok_or_else(|| RingError::NotInvertible(self.to_string()))?;
        let mut out = xp_linear_pow(&Scalar::i(), self.a);
        out = xp_mul(&out, &xp_linear_pow(&-Scalar::i(), self.b));
        let out: XPoly = out.iter().map(|m| m.scale(&c_inv)).collect();
        Ok(RatXi::new(out, p, q))
    }

    /// Substitute symbols in every coefficient.
    pub fn substitute(&self, f: &dyn Fn(SymbolId) -> Option<MultiPoly>) -> RatXi {
        RatXi::new(self.num.iter().map(|c| c.substitute(f)).collect(), self.a, self.b)
    }

    pub fn map_coeffs(&self, f: &dyn Fn(&MultiPoly) -> MultiPoly) -> RatXi {
        RatXi::new(self.num.iter().map(f).collect(), self.a, self.b)
    }

    /// Numerator as one polynomial with the `xin` symbol.
    pub fn num_as_poly(&self) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (k, c) in self.num.iter().enumerate() {
            let x = MultiPoly::var(SymbolId::XiN).pow(k as u32);
            out.add_assign(&(c * &x));
        }
        out
    }

    /// Inverse of [`RatXi::num_as_poly`].
    pub fn from_poly_in_xin(p: &MultiPoly, a: u32, b: u32) -> RatXi {
        RatXi::new(p.collect_in(SymbolId::XiN), a, b)
    }

    /// Floating evaluation at real ξₙ for symbol-free values.
    pub fn eval_f64(&self, x: f64) -> Option<(f64, f64)> {
        let mut acc = (0.0f64, 0.0f64);
        for c in self.num.iter().rev() {
            let (cr, ci) = c.as_constant()?.to_f64_pair();
            acc = (acc.0 * x + cr, acc.1 * x + ci);
        }
        // (x−i)^a (x+i)^b = (x²+1)^{min} (x∓i)^{rest}
        let mut den = (1.0f64, 0.0f64);
        let mul = |p: (f64, f64), q: (f64, f64)| (p.0 * q.0 - p.1 * q.1, p.0 * q.1 + p.1 * q.0);
        for _ in 0..self.a {
            den = mul(den, (x, -1.0));
        }
        for _ in 0..self.b {
            den = mul(den, (x, 1.0));
        }
        let nrm = den.0 * den.0 + den.1 * den.1;
        Some(mul(acc, (den.0 / nrm, -den.1 / nrm)))
    }

    pub fn parse(text: &str) -> Result<RatXi, RingError> {
        super::text::parse_ratxi(text)
    }
}

impl fmt::Display for RatXi {
    /// `num` or `(num)/((xin-i)^a*(xin+i)^b)` with unit exponents omitted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let num = self.num_as_poly();
        if self.is_polynomial() {
            return write!(f, "{num}");
        }
        let mut den = Vec::new();
        for (e, base) in [(self.a, "(xin-i)"), (self.b, "(xin+i)")] {
            match e {
                0 => {}
                1 => den.push(base.to_string()),
                _ => den.push(format!("{base}^{e}")),
            }
        }
        let den = den.join("*");
        let den = if self.a > 0 && self.b > 0 { format!("({den})") } else { den };
        write!(f, "({num})/{den}")
    }
}

impl<'a> Add<&'a RatXi> for &'a RatXi {
    type Output = RatXi;
    fn add(self, o: &RatXi) -> RatXi {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        let a = self.a.max(o.a);
        let b = self.b.max(o.b);
        RatXi::new(xp_add(&self.raise_to(a, b), &o.raise_to(a, b)), a, b)
    }
}

impl<'a> Sub<&'a RatXi> for &'a RatXi {
    type Output = RatXi;
    fn sub(self, o: &RatXi) -> RatXi {
        self + &(-o)
    }
}

impl<'a> Mul<&'a RatXi> for &'a RatXi {
    type Output = RatXi;
    fn mul(self, o: &RatXi) -> RatXi {
        if self.is_zero() || o.is_zero() {
            return RatXi::zero();
        }
        RatXi::new(xp_mul(&self.num, &o.num), self.a + o.a, self.b + o.b)
    }
}

impl Neg for &RatXi {
    type Output = RatXi;
    fn neg(self) -> RatXi {
        RatXi {
            num: self.num.iter().map(|c| -c).collect(),
            a: self.a,
            b: self.b,
        }
    }
}

impl Neg for RatXi {
    type Output = RatXi;
    fn neg(self) -> RatXi {
        -&self
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<RatXi> for RatXi {
            type Output = RatXi;
            fn $m(self, o: RatXi) -> RatXi {
                (&self).$m(&o)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl From<MultiPoly> for RatXi {
    fn from(c: MultiPoly) -> Self {
        RatXi::constant(c)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pole(a: u32, b: u32) -> RatXi {
        RatXi::new(vec![MultiPoly::one()], a, b)
    }

    fn pi() -> MultiPoly {
        MultiPoly::var(SymbolId::Pi)
    }

    #[test]
    fn product_of_simple_poles() {
        assert_eq!(&pole(1, 0) * &pole(0, 1), RatXi::norm_sq_pow(-1));
    }

    #[test]
    fn cancellation() {
        let r = RatXi::new(vec![MultiPoly::i().scale(&Scalar::from_int(-1)), MultiPoly::one()], 2, 0);
        assert_eq!(r, pole(1, 0));
    }

    #[test]
    fn common_denominator() {
        let s = &pole(1, 0) - &pole(0, 1);
        assert_eq!(s, RatXi::norm_sq_pow(-1).scale_scalar(&Scalar::i().scale_int(2)));
        let (re, im) = s.eval_f64(2.0).unwrap();
        assert!((re - 0.0).abs() < 1e-15 && (im - 0.4).abs() < 1e-15);
    }

    #[test]
    fn split_of_inverse_norm() {
        let r = RatXi::norm_sq_pow(-1).scale_scalar(&Scalar::i());
        let (u, l, p) = r.principal_parts();
        assert_eq!(u, pole(1, 0).scale_scalar(&Scalar::ratio(1, 2)));
        assert_eq!(l, pole(0, 1).scale_scalar(&Scalar::ratio(-1, 2)));
        assert!(p.is_zero());
        assert!(pole(0, 1).upper_part().is_zero());
    }

    #[test]
    fn split_with_polynomial_part() {
        let r = RatXi::new(vec![MultiPoly::zero(), MultiPoly::zero(), MultiPoly::one()], 2, 0);
        let (u, l, p) = r.principal_parts();
        assert_eq!(p, RatXi::one());
        assert!(l.is_zero());
        assert_eq!(u.pole_upper(), 2);
        assert_eq!(&(&u + &l) + &p, r);
    }

    #[test]
    fn standard_integrals() {
        let v = RatXi::norm_sq_pow(-2).line_integral().unwrap();
        assert_eq!(v, pi().scale(&Scalar::ratio(1, 2)));
        let v = pole(2, 3).line_integral().unwrap();
        assert_eq!(v, pi().scale(&(&Scalar::i() * &Scalar::ratio(-3, 8))));
        assert!(pole(0, 2).line_integral().unwrap().is_zero());
        assert!(matches!(pole(1, 0).line_integral(), Err(RingError::NonDecaying { .. })));
    }

    #[test]
    fn reciprocal_of_norm_power() {
        let r = RatXi::norm_sq_pow(2).scale_scalar(&Scalar::from_int(3));
        let inv = r.try_reciprocal().unwrap();
        assert_eq!(&r * &inv, RatXi::one());
        assert!(RatXi::xin().try_reciprocal().is_err());
    }

    #[test]
    fn derivative_of_inverse_norm() {
        // d/dξ (1+ξ²)^{-1} = −2ξ (1+ξ²)^{-2}
        let d = RatXi::norm_sq_pow(-1).deriv();
        let expect = (&RatXi::xin() * &RatXi::norm_sq_pow(-2)).scale_scalar(&Scalar::from_int(-2));
        assert_eq!(d, expect);
    }
}
