use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::Zero;

use super::monomial::Monomial;
use super::ratfunc::RatFunc;
use crate::error::{Error, Result};

/// Truncated series in `q` and `Q` with rational-function coefficients.
///
/// Terms with `q`-exponent above `nq` or `Q`-exponent above `nbig` are dropped.
/// Negative `q`-exponents are allowed (the inverse gluing kernel carries
/// `Q/q`); callers that use them compute at a raised `nq` and truncate back.
#[derive(Clone, Debug)]
pub struct QSeries {
    nq: i32,
    nbig: i32,
    coeffs: BTreeMap<(i32, i32), RatFunc>,
}

impl QSeries {
    pub fn zero(nq: u32, nbig: u32) -> Self {
        QSeries {
            nq: nq as i32,
            nbig: nbig as i32,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one(nq: u32, nbig: u32) -> Self {
        QSeries::constant(RatFunc::one(), nq, nbig)
    }

    pub fn constant(c: RatFunc, nq: u32, nbig: u32) -> Self {
        QSeries::term(0, 0, c, nq, nbig)
    }

    pub fn integer(c: i64, nq: u32, nbig: u32) -> Self {
        QSeries::constant(RatFunc::integer(c), nq, nbig)
    }

    /// `c · q^a · Q^b`, or zero when it lies beyond the truncation.
    pub fn term(a: i32, b: i32, c: RatFunc, nq: u32, nbig: u32) -> Self {
        let mut s = QSeries::zero(nq, nbig);
        s.add_term(a, b, c);
        s
    }

    /// `c · q^a` with `c` a torus monomial.
    pub fn monomial(a: i32, m: Monomial, nq: u32, nbig: u32) -> Self {
        QSeries::term(a, 0, RatFunc::monomial(m), nq, nbig)
    }

    /// Expansion of `1 / (1 − q^a m)` for `a ≥ 1`.
    pub fn geometric(a: i32, m: Monomial, nq: u32, nbig: u32) -> Self {
        assert!(a >= 1, "geometric series needs a positive q-step");
        let mut s = QSeries::zero(nq, nbig);
        let mut k = 0;
        while a * k <= nq as i32 {
            s.add_term(a * k, 0, RatFunc::monomial(m.pow(k)));
            k += 1;
        }
        s
    }

    pub fn nq(&self) -> u32 {
        self.nq as u32
    }

    pub fn nbig(&self) -> u32 {
        self.nbig as u32
    }

    pub fn orders(&self) -> (u32, u32) {
        (self.nq as u32, self.nbig as u32)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs.get(&(0, 0)).map(|c| *c == RatFunc::one()).unwrap_or(false)
    }

    pub fn coeff(&self, a: i32, b: i32) -> RatFunc {
        self.coeffs.get(&(a, b)).cloned().unwrap_or_default()
    }

    pub fn coeff_ref(&self, a: i32, b: i32) -> Option<&RatFunc> {
        self.coeffs.get(&(a, b))
    }

    /// Nonzero terms in `(q, Q)` order.
    pub fn terms(&self) -> impl Iterator<Item = (i32, i32, &RatFunc)> {
        self.coeffs.iter().map(|((a, b), c)| (*a, *b, c))
    }

    pub fn len(&self) -> usize {
        self.coeffs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest `q`-exponent among nonzero terms.
    pub fn min_q(&self) -> Option<i32> {
        self.coeffs.keys().map(|(a, _)| *a).min()
    }

    pub fn max_big_q(&self) -> Option<i32> {
        self.coeffs.keys().map(|(_, b)| *b).max()
    }

    pub fn add_term(&mut self, a: i32, b: i32, c: RatFunc) {
        if a > self.nq || b > self.nbig || b < 0 || c.is_zero() {
            return;
        }
        match self.coeffs.entry((a, b)) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn truncate(&self, nq: u32, nbig: u32) -> QSeries {
        let nq = (nq as i32).min(self.nq);
        let nbig = (nbig as i32).min(self.nbig);
        QSeries {
            nq,
            nbig,
            coeffs: self
                .coeffs
                .iter()
                .filter(|((a, b), _)| *a <= nq && *b <= nbig)
                .map(|(k, v)| (*k, v.clone()))
                .collect(),
        }
    }

    /// Declares higher truncation orders. Only sound when the caller knows the
    /// stored coefficients are exact up to the new orders.
    pub fn with_orders(mut self, nq: u32, nbig: u32) -> QSeries {
        self.nq = nq as i32;
        self.nbig = nbig as i32;
        self.coeffs.retain(|(a, b), _| *a <= nq as i32 && *b <= nbig as i32);
        self
    }

    /// Keeps only the `Q^0` slice.
    pub fn q_big_zero_slice(&self) -> QSeries {
        QSeries {
            nq: self.nq,
            nbig: self.nbig,
            coeffs: self
                .coeffs
                .iter()
                .filter(|((_, b), _)| *b == 0)
                .map(|(k, v)| (*k, v.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &RatFunc) -> QSeries {
        if c.is_zero() {
            return QSeries::zero(self.nq(), self.nbig());
        }
        self.map_coeffs(|v| v * c)
    }

    pub fn scale_rational(&self, c: &BigRational) -> QSeries {
        if c.is_zero() {
            return QSeries::zero(self.nq(), self.nbig());
        }
        self.map_coeffs(|v| v.scale(c))
    }

    /// Multiplies by `q^a Q^b`, dropping what falls beyond the truncation.
    pub fn shift(&self, a: i32, b: i32) -> QSeries {
        QSeries {
            nq: self.nq,
            nbig: self.nbig,
            coeffs: self
                .coeffs
                .iter()
                .map(|((x, y), v)| ((x + a, y + b), v.clone()))
                .filter(|((x, y), _)| *x <= self.nq && *y <= self.nbig && *y >= 0)
                .collect(),
        }
    }

    pub fn map_coeffs<F: Fn(&RatFunc) -> RatFunc>(&self, f: F) -> QSeries {
        QSeries {
            nq: self.nq,
            nbig: self.nbig,
            coeffs: self
                .coeffs
                .iter()
                .map(|(k, v)| (*k, f(v)))
                .filter(|(_, v)| !v.is_zero())
                .collect(),
        }
    }

    /// Cancels exact denominator factors coefficient-wise.
    pub fn reduced(&self) -> QSeries {
        self.map_coeffs(RatFunc::reduced)
    }

    /// `q ↦ q^n`, `Q ↦ Q^n` and the Adams operation on torus variables.
    pub fn adams(&self, n: u32) -> Result<QSeries> {
        if n == 0 {
            return Err(Error::ZeroAdams);
        }
        let k = n as i32;
        let mut out = QSeries::zero(self.nq(), self.nbig());
        for ((a, b), v) in &self.coeffs {
            if a * k <= self.nq && b * k <= self.nbig {
                out.coeffs.insert((a * k, b * k), v.adams(n));
            }
        }
        Ok(out)
    }

    /// Inverts the torus variables; `q` and `Q` are fixed.
    pub fn bar(&self) -> QSeries {
        self.map_coeffs(RatFunc::bar)
    }

    /// Multiplicative inverse as a series.
    pub fn inverse(&self) -> Result<QSeries> {
        let c0 = match self.coeffs.get(&(0, 0)) {
            Some(c) => c.clone(),
            None => return Err(Error::NotInvertible),
        };
        if self.coeffs.keys().any(|(a, _)| *a < 0) {
            return Err(Error::NotInvertible);
        }
        let c0_inv = c0.inv()?;
        // s = c0 (1 − t)  ⇒  1/s = c0^{-1} Σ t^k, with t nilpotent under truncation.
        let mut t = self.scale(&c0_inv);
        t.coeffs.remove(&(0, 0));
        let t = -t;
        let mut acc = QSeries::one(self.nq(), self.nbig());
        let mut power = QSeries::one(self.nq(), self.nbig());
        loop {
            power = &power * &t;
            if power.is_zero() {
                break;
            }
            acc = &acc + &power;
        }
        Ok(acc.scale(&c0_inv))
    }

    pub fn div(&self, other: &QSeries) -> Result<QSeries> {
        Ok(self * &other.inverse()?)
    }

    /// Whether every nonzero term has positive total weight, counting `Q` before `q`.
    fn is_topologically_nilpotent(&self) -> bool {
        self.coeffs.keys().all(|(a, b)| *b > 0 || (*b == 0 && *a > 0))
    }

    /// Exponential of a nilpotent series.
    pub fn exp(&self) -> Result<QSeries> {
        if !self.is_topologically_nilpotent() {
            return Err(Error::DivergentSymmetricAlgebra);
        }
        let mut acc = QSeries::one(self.nq(), self.nbig());
        let mut term = QSeries::one(self.nq(), self.nbig());
        let mut k = 1i64;
        loop {
            term = (&term * self).scale_rational(&BigRational::new(1.into(), k.into()));
            if term.is_zero() {
                break;
            }
            acc = &acc + &term;
            k += 1;
        }
        Ok(acc)
    }

    /// Plethystic exponential `exp(Σ_n Ψ_n(s) / n)`.
    pub fn scalar_exp(&self) -> Result<QSeries> {
        if self.coeffs.contains_key(&(0, 0)) || !self.is_topologically_nilpotent() {
            return Err(Error::DivergentSymmetricAlgebra);
        }
        let mut log = QSeries::zero(self.nq(), self.nbig());
        let mut n = 1u32;
        loop {
            let psi = self.adams(n)?;
            if psi.is_zero() {
                break;
            }
            log = &log + &psi.scale_rational(&BigRational::new(1.into(), (n as i64).into()));
            n += 1;
        }
        log.exp()
    }

    /// Exact coefficient-wise equality with matching orders.
    pub fn same_as(&self, other: &QSeries) -> bool {
        self.nq == other.nq && self.nbig == other.nbig && self.coeffs_eq(other)
    }

    /// Equality of the stored coefficients, ignoring the declared orders.
    pub fn coeffs_eq(&self, other: &QSeries) -> bool {
        self.coeffs.len() == other.coeffs.len()
            && self
                .coeffs
                .iter()
                .zip(other.coeffs.iter())
                .all(|((k1, v1), (k2, v2))| k1 == k2 && v1 == v2)
    }

    /// Evaluates every coefficient at `x = u², y = v², z = w²`.
    pub fn eval_sqrt(&self, roots: &[BigRational; 3]) -> Option<BTreeMap<(i32, i32), BigRational>> {
        let mut out = BTreeMap::new();
        for (k, v) in &self.coeffs {
            let e = v.eval_sqrt(roots)?;
            if !e.is_zero() {
                out.insert(*k, e);
            }
        }
        Some(out)
    }
}

impl PartialEq for QSeries {
    fn eq(&self, other: &Self) -> bool {
        self.same_as(other)
    }
}
impl Eq for QSeries {}

impl<'a> Add<&'a QSeries> for &'a QSeries {
    type Output = QSeries;
    fn add(self, rhs: &QSeries) -> QSeries {
        let nq = self.nq.min(rhs.nq);
        let nbig = self.nbig.min(rhs.nbig);
        let mut out = self.truncate(nq as u32, nbig as u32);
        for ((a, b), v) in &rhs.coeffs {
            out.add_term(*a, *b, v.clone());
        }
        out
    }
}

impl<'a> Sub<&'a QSeries> for &'a QSeries {
    type Output = QSeries;
    fn sub(self, rhs: &QSeries) -> QSeries {
        self + &(-rhs)
    }
}

impl Neg for &QSeries {
    type Output = QSeries;
    fn neg(self) -> QSeries {
        QSeries {
            nq: self.nq,
            nbig: self.nbig,
            coeffs: self.coeffs.iter().map(|(k, v)| (*k, -v)).collect(),
        }
    }
}

impl Neg for QSeries {
    type Output = QSeries;
    fn neg(self) -> QSeries {
        -&self
    }
}

impl<'a> Mul<&'a QSeries> for &'a QSeries {
    type Output = QSeries;
    fn mul(self, rhs: &QSeries) -> QSeries {
        let nq = self.nq.min(rhs.nq);
        let nbig = self.nbig.min(rhs.nbig);
        let mut acc: BTreeMap<(i32, i32), Vec<RatFunc>> = BTreeMap::new();
        for ((a1, b1), v1) in &self.coeffs {
            for ((a2, b2), v2) in &rhs.coeffs {
                let (a, b) = (a1 + a2, b1 + b2);
                if a <= nq && b <= nbig {
                    acc.entry((a, b)).or_default().push(v1 * v2);
                }
            }
        }
        let mut out = QSeries {
            nq,
            nbig,
            coeffs: BTreeMap::new(),
        };
        for (k, parts) in acc {
            let s = sum_ratfuncs(parts);
            if !s.is_zero() {
                out.coeffs.insert(k, s);
            }
        }
        out
    }
}

/// Sums in a fixed order so results do not depend on who produced the parts.
pub(crate) fn sum_ratfuncs(parts: Vec<RatFunc>) -> RatFunc {
    let mut it = parts.into_iter();
    let mut acc = match it.next() {
        Some(x) => x,
        None => return RatFunc::zero(),
    };
    for p in it {
        acc = &acc + &p;
    }
    acc
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<QSeries> for QSeries {
            type Output = QSeries;
            fn $f(self, rhs: QSeries) -> QSeries {
                (&self).$f(&rhs)
            }
        }
        impl<'a> $tr<&'a QSeries> for QSeries {
            type Output = QSeries;
            fn $f(self, rhs: &QSeries) -> QSeries {
                (&self).$f(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl fmt::Display for QSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.nq, self.nbig)?;
        if self.coeffs.is_empty() {
            return write!(f, " 0");
        }
        for (i, ((a, b), v)) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, " ;")?;
            }
            write!(f, " q^{a}*Q^{b}: {v}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn kinv() -> Monomial {
        Monomial::kappa().inv()
    }

    #[test]
    fn geometric_inverse() {
        let s = &QSeries::one(4, 0) - &QSeries::monomial(1, kinv(), 4, 0);
        let inv = s.inverse().unwrap();
        assert_eq!(inv, QSeries::geometric(1, kinv(), 4, 0));
        assert!((&s * &inv).is_one());
    }

    #[test]
    fn inverse_of_two_minus_q() {
        let s = &QSeries::integer(2, 3, 0) - &QSeries::monomial(1, Monomial::ONE, 3, 0);
        let inv = s.inverse().unwrap();
        for k in 0..=3 {
            let expect = BigRational::new(1.into(), (1i64 << (k + 1)).into());
            assert_eq!(inv.coeff(k, 0), RatFunc::rational(expect));
        }
    }

    #[test]
    fn zero_constant_is_not_invertible() {
        let s = QSeries::monomial(1, Monomial::y(), 3, 0);
        assert_eq!(s.inverse().unwrap_err(), Error::NotInvertible);
    }

    #[test]
    fn scalar_exp_of_line_is_geometric() {
        let w = Monomial::y();
        let s = QSeries::monomial(1, w, 5, 0);
        assert_eq!(s.scalar_exp().unwrap(), QSeries::geometric(1, w, 5, 0));
        let neg = (-&s).scalar_exp().unwrap();
        assert_eq!(neg, &QSeries::one(5, 0) - &s);
    }

    #[test]
    fn scalar_exp_rejects_constant() {
        let s = QSeries::integer(1, 3, 0);
        assert_eq!(s.scalar_exp().unwrap_err(), Error::DivergentSymmetricAlgebra);
    }

    #[test]
    fn adams_examples() {
        let s = &QSeries::monomial(1, Monomial::ONE, 6, 0) * &QSeries::geometric(1, kinv(), 6, 0);
        let expect = &QSeries::monomial(2, Monomial::ONE, 6, 0) * &QSeries::geometric(2, kinv().pow(2), 6, 0);
        assert_eq!(s.adams(2).unwrap(), expect);
        let half = QSeries::monomial(0, Monomial::from_doubled(0, 1, 0), 2, 0);
        assert_eq!(
            half.adams(3).unwrap(),
            QSeries::monomial(0, Monomial::from_doubled(0, 3, 0), 2, 0)
        );
        assert_eq!(QSeries::integer(5, 2, 0).adams(2).unwrap(), QSeries::integer(5, 2, 0));
        assert_eq!(half.adams(0).unwrap_err(), Error::ZeroAdams);
    }

    #[test]
    fn bar_fixes_q() {
        let s = QSeries::monomial(1, Monomial::kappa(), 2, 0);
        assert_eq!(s.bar(), QSeries::monomial(1, kinv(), 2, 0));
    }
}
