//! Canonical text and JSON forms of the scalar types.

use num_bigint::BigInt;
use num_rational::BigRational;
use serde::{Deserialize, Serialize};

use super::laurent::{fmt_rational, LaurentPoly};
use super::monomial::Monomial;
use super::ratfunc::{write_den, RatFunc};
use super::series::QSeries;
use crate::error::{Error, Result};

struct Cursor<'a> {
    s: &'a [u8],
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn new(s: &'a str) -> Self {
        Cursor {
            s: s.as_bytes(),
            pos: 0,
        }
    }

    fn peek(&self) -> Option<u8> {
        self.s.get(self.pos).copied()
    }

    fn eat(&mut self, lit: &str) -> bool {
        if self.s[self.pos..].starts_with(lit.as_bytes()) {
            self.pos += lit.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, lit: &str) -> Result<()> {
        if self.eat(lit) {
            Ok(())
        } else {
            Err(self.err(&format!("expected '{lit}'")))
        }
    }

    fn done(&self) -> bool {
        self.pos == self.s.len()
    }

    fn err(&self, what: &str) -> Error {
        let rest = String::from_utf8_lossy(&self.s[self.pos..]);
        Error::Parse(format!("{what} at byte {} near '{rest}'", self.pos))
    }

    fn integer(&mut self) -> Result<BigInt> {
        let start = self.pos;
        if self.peek() == Some(b'-') {
            self.pos += 1;
        }
        while matches!(self.peek(), Some(b'0'..=b'9')) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| self.err("expected integer"))
    }

    fn small(&mut self) -> Result<i32> {
        let n = self.integer()?;
        i32::try_from(n).map_err(|_| self.err("exponent out of range"))
    }

    fn rational(&mut self) -> Result<BigRational> {
        let n = self.integer()?;
        if self.peek() == Some(b'/') && matches!(self.s.get(self.pos + 1), Some(b'0'..=b'9')) {
            self.pos += 1;
            let d = self.integer()?;
            if d == BigInt::from(0) {
                return Err(self.err("zero denominator"));
            }
            return Ok(BigRational::new(n, d));
        }
        Ok(BigRational::from_integer(n))
    }

    fn monomial(&mut self) -> Result<Monomial> {
        let mut e = [0i32; 3];
        loop {
            let idx = match self.peek() {
                Some(b'x') => 0,
                Some(b'y') => 1,
                Some(b'z') => 2,
                _ => return Err(self.err("expected variable")),
            };
            self.pos += 1;
            let mut doubled = 2;
            if self.eat("^{") {
                let k = self.small()?;
                doubled = if self.eat("/2") { k } else { 2 * k };
                self.expect("}")?;
            }
            e[idx] += doubled;
            if !(self.peek() == Some(b'*') && matches!(self.s.get(self.pos + 1), Some(b'x' | b'y' | b'z'))) {
                break;
            }
            self.pos += 1;
        }
        Ok(Monomial::from_doubled(e[0], e[1], e[2]))
    }

    fn term(&mut self) -> Result<(Monomial, BigRational)> {
        if matches!(self.peek(), Some(b'0'..=b'9')) {
            let c = self.rational()?;
            if self.eat("*") {
                return Ok((self.monomial()?, c));
            }
            return Ok((Monomial::ONE, c));
        }
        Ok((self.monomial()?, BigRational::from_integer(1.into())))
    }

    fn laurent(&mut self) -> Result<LaurentPoly> {
        if self.peek() == Some(b'0') && !matches!(self.s.get(self.pos + 1), Some(b'0'..=b'9' | b'/' | b'*')) {
            self.pos += 1;
            return Ok(LaurentPoly::zero());
        }
        let mut terms = Vec::new();
        let mut neg = self.eat("-");
        loop {
            let (m, c) = self.term()?;
            terms.push((m, if neg { -c } else { c }));
            if self.eat(" + ") {
                neg = false;
            } else if self.eat(" - ") {
                neg = true;
            } else {
                break;
            }
        }
        Ok(LaurentPoly::from_terms(terms))
    }

    fn ratfunc(&mut self) -> Result<RatFunc> {
        if !self.eat("(") {
            return Ok(RatFunc::from_poly(self.laurent()?));
        }
        let num = self.laurent()?;
        self.expect(")/(")?;
        let mut r = RatFunc::from_poly(num);
        loop {
            r = self.den_factor(r)?;
            if !self.eat("*") {
                break;
            }
        }
        self.expect(")")?;
        Ok(r)
    }

    fn den_factor(&mut self, r: RatFunc) -> Result<RatFunc> {
        self.expect("(")?;
        let p = self.laurent()?;
        self.expect(")")?;
        let k = if self.eat("^") { self.small()? } else { 1 };
        if k < 1 {
            return Err(self.err("bad multiplicity"));
        }
        r.with_den_factor(p, k as u32)
    }
}

fn finish<T>(c: &Cursor, v: T) -> Result<T> {
    if c.done() {
        Ok(v)
    } else {
        Err(c.err("trailing input"))
    }
}

pub fn parse_monomial(s: &str) -> Result<Monomial> {
    if s == "1" {
        return Ok(Monomial::ONE);
    }
    let mut c = Cursor::new(s);
    let m = c.monomial()?;
    finish(&c, m)
}

pub fn parse_laurent(s: &str) -> Result<LaurentPoly> {
    let mut c = Cursor::new(s);
    let p = c.laurent()?;
    finish(&c, p)
}

pub fn parse_ratfunc(s: &str) -> Result<RatFunc> {
    let mut c = Cursor::new(s);
    let r = c.ratfunc()?;
    finish(&c, r)
}

/// Parses a factored denominator `(f1)^k*(f2)` or `1` back onto a numerator.
pub fn parse_num_den(num: &str, den: &str) -> Result<RatFunc> {
    let mut r = RatFunc::from_poly(parse_laurent(num)?);
    if den == "1" {
        return Ok(r);
    }
    let mut c = Cursor::new(den);
    loop {
        r = c.den_factor(r)?;
        if !c.eat("*") {
            break;
        }
    }
    finish(&c, r)
}

/// The denominator of `r` in the text form used by [`parse_num_den`].
pub fn den_text(r: &RatFunc) -> String {
    let mut s = String::new();
    write_den(&mut s, r.den_factors()).unwrap();
    s
}

pub fn parse_qseries(s: &str) -> Result<QSeries> {
    let mut c = Cursor::new(s);
    c.expect("[")?;
    let nq = c.small()?;
    c.expect(",")?;
    let nbig = c.small()?;
    c.expect("]")?;
    if nq < 0 || nbig < 0 {
        return Err(c.err("negative order"));
    }
    let mut out = QSeries::zero(nq as u32, nbig as u32);
    if c.eat(" 0") {
        return finish(&c, out);
    }
    loop {
        c.expect(" q^")?;
        let a = c.small()?;
        c.expect("*Q^")?;
        let b = c.small()?;
        c.expect(": ")?;
        let v = c.ratfunc()?;
        out.add_term(a, b, v);
        if !c.eat(" ;") {
            break;
        }
    }
    finish(&c, out)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub m: [i32; 3],
    pub c: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FactorJson {
    pub factor: Vec<TermJson>,
    pub mult: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RatFuncJson {
    pub num: Vec<TermJson>,
    pub den: Vec<FactorJson>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeriesTermJson {
    pub q: i32,
    #[serde(rename = "Q")]
    pub big_q: i32,
    pub coeff: RatFuncJson,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QSeriesJson {
    pub nq: u32,
    #[serde(rename = "nQ")]
    pub nbig: u32,
    pub terms: Vec<SeriesTermJson>,
}

pub fn laurent_to_json(p: &LaurentPoly) -> Vec<TermJson> {
    p.terms()
        .iter()
        .map(|(m, c)| TermJson {
            m: m.exponents(),
            c: fmt_rational(c),
        })
        .collect()
}

pub fn laurent_from_json(v: &[TermJson]) -> Result<LaurentPoly> {
    let mut terms = Vec::with_capacity(v.len());
    for t in v {
        let mut c = Cursor::new(&t.c);
        let r = c.rational()?;
        finish(&c, ())?;
        terms.push((Monomial::from_doubled(t.m[0], t.m[1], t.m[2]), r));
    }
    Ok(LaurentPoly::from_terms(terms))
}

pub fn ratfunc_to_json(r: &RatFunc) -> RatFuncJson {
    RatFuncJson {
        num: laurent_to_json(r.num()),
        den: r
            .den_factors()
            .map(|(p, k)| FactorJson {
                factor: laurent_to_json(p),
                mult: k,
            })
            .collect(),
    }
}

pub fn ratfunc_from_json(v: &RatFuncJson) -> Result<RatFunc> {
    let mut r = RatFunc::from_poly(laurent_from_json(&v.num)?);
    for f in &v.den {
        r = r.with_den_factor(laurent_from_json(&f.factor)?, f.mult)?;
    }
    Ok(r)
}

pub fn qseries_to_json(s: &QSeries) -> QSeriesJson {
    QSeriesJson {
        nq: s.nq(),
        nbig: s.nbig(),
        terms: s
            .terms()
            .map(|(a, b, c)| SeriesTermJson {
                q: a,
                big_q: b,
                coeff: ratfunc_to_json(c),
            })
            .collect(),
    }
}

pub fn qseries_from_json(v: &QSeriesJson) -> Result<QSeries> {
    let mut out = QSeries::zero(v.nq, v.nbig);
    for t in &v.terms {
        out.add_term(t.q, t.big_q, ratfunc_from_json(&t.coeff)?);
    }
    Ok(out)
}
