use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::monomial::Monomial;

/// Sparse Laurent polynomial in `x^{1/2}, y^{1/2}, z^{1/2}` with rational coefficients.
///
/// Terms are kept sorted by monomial (lexicographic on doubled exponents) with
/// no zero coefficients, so derived equality is structural equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LaurentPoly {
    terms: Vec<(Monomial, BigRational)>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::term(BigRational::one(), Monomial::ONE)
    }

    pub fn constant(c: BigRational) -> Self {
        Self::term(c, Monomial::ONE)
    }

    pub fn integer(c: i64) -> Self {
        Self::constant(BigRational::from_integer(c.into()))
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(BigRational::one(), m)
    }

    pub fn term(c: BigRational, m: Monomial) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            LaurentPoly { terms: vec![(m, c)] }
        }
    }

    /// Builds from arbitrary (possibly repeated, possibly zero) terms.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, BigRational)>>(iter: I) -> Self {
        let mut acc: BTreeMap<Monomial, BigRational> = BTreeMap::new();
        for (m, c) in iter {
            *acc.entry(m).or_insert_with(BigRational::zero) += c;
        }
        Self::from_map(acc)
    }

    fn from_map(map: BTreeMap<Monomial, BigRational>) -> Self {
        LaurentPoly {
            terms: map.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn terms(&self) -> &[(Monomial, BigRational)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_one() && self.terms[0].1.is_one()
    }

    /// The single term, if the polynomial is `c · m`.
    pub fn as_term(&self) -> Option<(&BigRational, Monomial)> {
        match self.terms.as_slice() {
            [(m, c)] => Some((c, *m)),
            _ => None,
        }
    }

    /// Coefficient of the trivial monomial.
    pub fn constant_term(&self) -> BigRational {
        self.coeff(Monomial::ONE)
    }

    pub fn coeff(&self, m: Monomial) -> BigRational {
        match self.terms.binary_search_by(|(k, _)| k.cmp(&m)) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => BigRational::zero(),
        }
    }

    /// Lexicographically greatest term.
    pub fn leading(&self) -> Option<(Monomial, &BigRational)> {
        self.terms.last().map(|(m, c)| (*m, c))
    }

    /// Exponent-wise minimum over all terms.
    pub fn min_exponents(&self) -> Option<Monomial> {
        let mut it = self.terms.iter().map(|(m, _)| *m);
        let first = it.next()?;
        Some(it.fold(first, Monomial::min))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        LaurentPoly {
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, m: Monomial) -> Self {
        LaurentPoly {
            terms: self.terms.iter().map(|(k, a)| (k.mul(m), a.clone())).collect(),
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Applies an injective monomial map; coefficients are unchanged.
    pub fn map_monomials<F: Fn(Monomial) -> Monomial>(&self, f: F) -> Self {
        let mut terms: Vec<_> = self.terms.iter().map(|(m, c)| (f(*m), c.clone())).collect();
        terms.sort_by_key(|a| a.0);
        LaurentPoly { terms }
    }

    /// Adams operation: `x ↦ x^n, y ↦ y^n, z ↦ z^n`.
    pub fn adams(&self, n: u32) -> Self {
        if n == 1 {
            return self.clone();
        }
        self.map_monomials(|m| m.pow(n as i32))
    }

    /// Inverts every torus variable.
    pub fn bar(&self) -> Self {
        self.map_monomials(Monomial::inv)
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a remainder.
    pub fn exact_div(&self, divisor: &LaurentPoly) -> Option<LaurentPoly> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if let Some((c, m)) = divisor.as_term() {
            let inv = c.recip();
            return Some(self.mul_monomial(m.inv()).scale(&inv));
        }
        // Shift both operands into the polynomial ring and run division with
        // respect to the lexicographic order; a single divisor is a Groebner
        // basis of its ideal, so a nonzero remainder term means no exact quotient.
        let dshift = divisor.min_exponents().unwrap();
        let d = divisor.mul_monomial(dshift.inv());
        let nshift = self.min_exponents().unwrap();
        let (lead_m, lead_c) = d.leading().unwrap();
        let lead_c = lead_c.clone();
        let mut rem: BTreeMap<Monomial, BigRational> = self.mul_monomial(nshift.inv()).terms.into_iter().collect();
        let mut quot: Vec<(Monomial, BigRational)> = Vec::new();
        while let Some((&m, c)) = rem.iter().next_back() {
            if !m.divisible_by(lead_m) {
                return None;
            }
            let qm = m.div(lead_m);
            let qc = c / &lead_c;
            for (dm, dc) in d.terms.iter() {
                let key = dm.mul(qm);
                let entry = rem.entry(key).or_insert_with(BigRational::zero);
                *entry -= &qc * dc;
                if entry.is_zero() {
                    rem.remove(&key);
                }
            }
            quot.push((qm, qc));
        }
        let q = LaurentPoly::from_terms(quot);
        Some(q.mul_monomial(nshift.div(dshift)))
    }

    /// Evaluates at `x = u², y = v², z = w²` given the square roots `(u, v, w)`.
    pub fn eval_sqrt(&self, roots: &[BigRational; 3]) -> Option<BigRational> {
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (r, e) in roots.iter().zip(m.exponents()) {
                if e != 0 {
                    if r.is_zero() {
                        return None;
                    }
                    t *= pow_rational(r, e);
                }
            }
            acc += t;
        }
        Some(acc)
    }
}

pub(crate) fn pow_rational(r: &BigRational, e: i32) -> BigRational {
    let base = if e < 0 { r.recip() } else { r.clone() };
    num_traits::pow(base, e.unsigned_abs() as usize)
}

impl From<Monomial> for LaurentPoly {
    fn from(m: Monomial) -> Self {
        LaurentPoly::monomial(m)
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = Vec::with_capacity(self.terms.len() + rhs.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &rhs.terms);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(b[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = &a[i].1 + &b[j].1;
                    if !c.is_zero() {
                        out.push((a[i].0, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&a[i..]);
        out.extend_from_slice(&b[j..]);
        LaurentPoly { terms: out }
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(mut self) -> LaurentPoly {
        for (_, c) in self.terms.iter_mut() {
            *c = -c.clone();
        }
        self
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        if let Some((c, m)) = rhs.as_term() {
            return self.mul_monomial(m).scale(c);
        }
        if let Some((c, m)) = self.as_term() {
            return rhs.mul_monomial(m).scale(c);
        }
        let mut acc: BTreeMap<Monomial, BigRational> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                *acc.entry(ma.mul(*mb)).or_insert_with(BigRational::zero) += ca * cb;
            }
        }
        LaurentPoly::from_map(acc)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$f(&rhs)
            }
        }
        impl<'a> $tr<&'a LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $f(self, rhs: &LaurentPoly) -> LaurentPoly {
                (&self).$f(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

pub(crate) fn fmt_rational(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m.is_one() {
                write!(f, "{}", fmt_rational(&abs))?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{}*{m}", fmt_rational(&abs))?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn y() -> LaurentPoly {
        Monomial::y().into()
    }

    #[test]
    fn arithmetic_cancels_to_zero() {
        let p = &y() + &LaurentPoly::one();
        let d = &p - &p;
        assert!(d.is_zero());
    }

    #[test]
    fn exact_division_of_difference_of_squares() {
        let y2m1 = &y().pow(2) - &LaurentPoly::one();
        let ym1 = &y() - &LaurentPoly::one();
        let q = y2m1.exact_div(&ym1).unwrap();
        assert_eq!(q, &y() + &LaurentPoly::one());
        let yp2 = &y() + &LaurentPoly::integer(2);
        assert!(y2m1.exact_div(&yp2).is_none());
    }

    #[test]
    fn exact_division_handles_laurent_shifts() {
        let bracket = &LaurentPoly::monomial(Monomial::from_doubled(0, 1, 0))
            - &LaurentPoly::monomial(Monomial::from_doubled(0, -1, 0));
        let ym1 = &y() - &LaurentPoly::one();
        let q = bracket.exact_div(&ym1).unwrap();
        assert_eq!(q, LaurentPoly::monomial(Monomial::from_doubled(0, -1, 0)));
    }

    #[test]
    fn display_is_canonical() {
        let p = &(&y() - &LaurentPoly::one()) * &LaurentPoly::monomial(Monomial::kappa());
        assert_eq!(p.to_string(), "-x^{1/2}*y^{1/2}*z^{1/2} + x^{1/2}*y^{3/2}*z^{1/2}");
    }
}
