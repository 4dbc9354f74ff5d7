use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_rational::BigRational;
use num_traits::Zero;

use super::laurent::LaurentPoly;
use super::monomial::Monomial;
use super::ratfunc::RatFunc;
use crate::error::{Error, Result};

/// Virtual torus character: an integer combination of monomials.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Character {
    terms: BTreeMap<Monomial, i64>,
}

impl Character {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_terms<I: IntoIterator<Item = (Monomial, i64)>>(iter: I) -> Self {
        let mut c = Character::new();
        for (m, k) in iter {
            c.add_term(m, k);
        }
        c
    }

    pub fn monomial(m: Monomial) -> Self {
        Character::from_terms([(m, 1)])
    }

    pub fn add_term(&mut self, m: Monomial, k: i64) {
        if k == 0 {
            return;
        }
        let e = self.terms.entry(m).or_insert(0);
        *e += k;
        if *e == 0 {
            self.terms.remove(&m);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (Monomial, i64)> + '_ {
        self.terms.iter().map(|(m, k)| (*m, *k))
    }

    pub fn multiplicity(&self, m: Monomial) -> i64 {
        self.terms.get(&m).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Virtual dimension.
    pub fn rank(&self) -> i64 {
        self.terms.values().sum()
    }

    /// Inverts every monomial.
    pub fn dual(&self) -> Character {
        Character::from_terms(self.terms().map(|(m, k)| (m.inv(), k)))
    }

    pub fn mul_monomial(&self, w: Monomial) -> Character {
        Character::from_terms(self.terms().map(|(m, k)| (m.mul(w), k)))
    }

    pub fn scale(&self, c: i64) -> Character {
        Character::from_terms(self.terms().map(|(m, k)| (m, k * c)))
    }

    pub fn mul(&self, other: &Character) -> Character {
        let mut out = Character::new();
        for (m1, k1) in self.terms() {
            for (m2, k2) in other.terms() {
                out.add_term(m1.mul(m2), k1 * k2);
            }
        }
        out
    }

    pub fn to_laurent(&self) -> LaurentPoly {
        LaurentPoly::from_terms(self.terms().map(|(m, k)| (m, BigRational::from_integer(k.into()))))
    }

    /// Reads back a Laurent polynomial with integer coefficients.
    pub fn from_laurent(p: &LaurentPoly) -> Result<Character> {
        let mut out = Character::new();
        for (m, c) in p.terms() {
            if !c.is_integer() {
                return Err(Error::InvalidArgument(format!(
                    "non-integer multiplicity {c} in character"
                )));
            }
            let k: i64 = c
                .numer()
                .try_into()
                .map_err(|_| Error::InvalidArgument("multiplicity overflow".into()))?;
            out.add_term(*m, k);
        }
        Ok(out)
    }

    /// A rational function that happens to be a Laurent polynomial with integer coefficients.
    pub fn from_ratfunc(r: &RatFunc) -> Result<Character> {
        let red = r.reduced();
        if !red.is_polynomial() {
            return Err(Error::InvalidArgument(format!("{r} is not a Laurent polynomial")));
        }
        Character::from_laurent(red.num())
    }

    /// `∏_w (w^{1/2} − w^{−1/2})^{mult(w)}`.
    pub fn bracket(&self) -> Result<RatFunc> {
        let mut num = LaurentPoly::one();
        let mut den = LaurentPoly::one();
        let mut zero = false;
        for (w, k) in self.terms() {
            if w.is_one() {
                if k > 0 {
                    zero = true;
                    continue;
                }
                return Err(Error::DivisionByZeroBracket);
            }
            let root = w.sqrt().ok_or_else(|| Error::HalfIntegerBracket(w.to_string()))?;
            let b = &LaurentPoly::monomial(root) - &LaurentPoly::monomial(root.inv());
            if k > 0 {
                num = &num * &b.pow(k as u32);
            } else {
                den = &den * &b.pow((-k) as u32);
            }
        }
        if zero {
            return Ok(RatFunc::zero());
        }
        RatFunc::new(num, den)
    }
}

/// `{w} = w^{1/2} − w^{−1/2}` for a single monomial.
pub fn bracket_of(w: Monomial) -> Result<RatFunc> {
    Character::monomial(w).bracket()
}

impl<'a> Add<&'a Character> for &'a Character {
    type Output = Character;
    fn add(self, rhs: &Character) -> Character {
        let mut out = self.clone();
        for (m, k) in rhs.terms() {
            out.add_term(m, k);
        }
        out
    }
}

impl<'a> Sub<&'a Character> for &'a Character {
    type Output = Character;
    fn sub(self, rhs: &Character) -> Character {
        self + &(-rhs)
    }
}

impl Neg for &Character {
    type Output = Character;
    fn neg(self) -> Character {
        self.scale(-1)
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_laurent())
    }
}

impl Zero for Character {
    fn zero() -> Self {
        Character::new()
    }
    fn is_zero(&self) -> bool {
        self.is_empty()
    }
}

impl Add for Character {
    type Output = Character;
    fn add(self, rhs: Character) -> Character {
        &self + &rhs
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn half_y() -> Monomial {
        Monomial::from_doubled(0, 1, 0)
    }

    #[test]
    fn bracket_of_y() {
        let b = bracket_of(Monomial::y()).unwrap();
        let expect = &LaurentPoly::monomial(half_y()) - &LaurentPoly::monomial(half_y().inv());
        assert_eq!(b, RatFunc::from(expect));
    }

    #[test]
    fn bracket_is_multiplicative() {
        let c = Character::from_terms([(Monomial::y(), 1), (Monomial::xz(), 1)]);
        let lhs = c.bracket().unwrap();
        let rhs = &bracket_of(Monomial::y()).unwrap() * &bracket_of(Monomial::xz()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn negative_multiplicity_inverts() {
        let c = Character::from_terms([(Monomial::y(), -1)]);
        assert_eq!(c.bracket().unwrap(), bracket_of(Monomial::y()).unwrap().inv().unwrap());
    }

    #[test]
    fn trivial_weight() {
        let pos = Character::from_terms([(Monomial::ONE, 1), (Monomial::y(), 1)]);
        assert!(pos.bracket().unwrap().is_zero());
        let neg = Character::from_terms([(Monomial::ONE, -1)]);
        assert_eq!(neg.bracket().unwrap_err(), Error::DivisionByZeroBracket);
        let half = Character::monomial(half_y());
        assert!(matches!(half.bracket(), Err(Error::HalfIntegerBracket(_))));
    }

    #[test]
    fn ranks() {
        let xyz = Monomial::x().mul(Monomial::y()).mul(Monomial::z());
        let c = Character::from_terms([(Monomial::y(), 1), (xyz.div(Monomial::y()), 1)]);
        assert_eq!(c.rank(), 2);
        assert_eq!(Character::new().rank(), 0);
    }
}
