//! Reader for the canonical text form of polynomials and ξₙ-rational functions.

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{MultiPoly, RatXi, RingError, Scalar, SymbolId};

struct Reader<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Reader<'a> {
    fn err(&self, msg: &str) -> RingError {
        RingError::Parse { offset: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(char::is_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.src[self.pos..].chars().next()
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek() == Some(c) {
            self.pos += c.len_utf8();
            true
        } else {
            false
        }
    }

    fn take_while(&mut self, f: impl Fn(char) -> bool) -> &'a str {
        self.skip_ws();
        let start = self.pos;
        while let Some(c) = self.src[self.pos..].chars().next() {
            if !f(c) {
                break;
            }
            self.pos += c.len_utf8();
        }
        &self.src[start..self.pos]
    }

    fn sum(&mut self) -> Result<RatXi, RingError> {
        let mut acc = if self.eat('-') { -self.product()? } else { self.product()? };
        loop {
            if self.eat('+') {
                acc = &acc + &self.product()?;
            } else if self.eat('-') {
                acc = &acc - &self.product()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn product(&mut self) -> Result<RatXi, RingError> {
        let mut acc = self.power()?;
        loop {
            if self.eat('*') {
                acc = &acc * &self.power()?;
            } else if self.eat('/') {
                let d = self.power()?;
                acc = &acc * &d.try_reciprocal()?;
            } else {
                return Ok(acc);
            }
        }
    }

    fn power(&mut self) -> Result<RatXi, RingError> {
        let base = self.atom()?;
        if !self.eat('^') {
            return Ok(base);
        }
        let digits = self.take_while(|c| c.is_ascii_digit());
        let k: u32 = digits.parse().map_err(|_| self.err("exponent"))?;
        let mut acc = RatXi::one();
        for _ in 0..k {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    fn atom(&mut self) -> Result<RatXi, RingError> {
        match self.peek() {
            Some('(') => {
                self.pos += 1;
                let v = self.sum()?;
                if !self.eat(')') {
                    return Err(self.err("')'"));
                }
                Ok(v)
            }
            Some(c) if c.is_ascii_digit() => {
                let digits = self.take_while(|c| c.is_ascii_digit());
                let v: BigInt = digits.parse().map_err(|_| self.err("integer"))?;
                Ok(RatXi::scalar(Scalar::from_rational(BigRational::from_integer(v))))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let at = self.pos;
                let name = self.take_while(|c| c.is_ascii_alphanumeric() || c == '_');
                match name {
                    "i" => Ok(RatXi::scalar(Scalar::i())),
                    "xin" => Ok(RatXi::xin()),
                    _ => name
                        .parse::<SymbolId>()
                        .map(|s| RatXi::constant(MultiPoly::var(s)))
                        .map_err(|_| RingError::Parse { offset: at, msg: format!("unknown symbol {name}") }),
                }
            }
            _ => Err(self.err("number, symbol or '('")),
        }
    }
}

pub(crate) fn parse_ratxi(text: &str) -> Result<RatXi, RingError> {
    let mut r = Reader { src: text, pos: 0 };
    let v = r.sum()?;
    if r.peek().is_some() {
        return Err(r.err("end of input"));
    }
    Ok(v)
}

pub(crate) fn parse_poly(text: &str) -> Result<MultiPoly, RingError> {
    let r = parse_ratxi(text)?;
    if !r.is_polynomial() {
        return Err(RingError::Parse { offset: 0, msg: "pole in polynomial text".into() });
    }
    Ok(r.num_as_poly())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn poly_round_trip() {
        for s in [
            "0",
            "-3/2*h1*pi*omega_3",
            "(65/8-41/8*i)*h1*pi*omega_4 + 120*i*thetap_n*pi*omega_4",
            "-64*thetap_n",
            "h1^2 - theta_1^2",
        ] {
            let p = MultiPoly::parse(s).unwrap();
            assert_eq!(p.to_string(), s);
        }
    }

    #[test]
    fn ratxi_round_trip() {
        let r = RatXi::norm_sq_pow(-2).scale_scalar(&Scalar::i());
        let s = r.to_string();
        assert_eq!(s, "(i)/((xin-i)^2*(xin+i)^2)");
        assert_eq!(RatXi::parse(&s).unwrap(), r);
    }

    #[test]
    fn reports_offset() {
        match MultiPoly::parse("h1 + ") {
            Err(RingError::Parse { offset, .. }) => assert_eq!(offset, 5),
            other => panic!("{other:?}"),
        }
    }
}
