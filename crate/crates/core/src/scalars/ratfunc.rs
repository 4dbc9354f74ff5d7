use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::laurent::LaurentPoly;
use super::monomial::Monomial;
use crate::error::{Error, Result};

/// An irreducible-ish denominator factor in normal form: monomial content
/// cleared (exponent-wise minimum is the zero vector) and monic leading term.
///
/// Binomials `w^g ∓ 1` are always split into cyclotomic pieces `Φ_d(w)`, so
/// the factors coming from brackets `{w^n}` and from `1 − w^n` share a common
/// vocabulary and least common multiples stay small.
#[derive(Clone, Debug)]
pub struct Factor {
    poly: Arc<LaurentPoly>,
    cyclotomic: Option<(Monomial, u32)>,
}

impl Factor {
    pub fn poly(&self) -> &LaurentPoly {
        &self.poly
    }

    fn cyclotomic(w: Monomial, d: u32) -> Factor {
        Factor {
            poly: Arc::new(cyclotomic_in(w, d)),
            cyclotomic: Some((w, d)),
        }
    }

    fn generic(p: LaurentPoly) -> Factor {
        Factor {
            poly: Arc::new(p),
            cyclotomic: None,
        }
    }
}

impl PartialEq for Factor {
    fn eq(&self, other: &Self) -> bool {
        self.poly == other.poly
    }
}
impl Eq for Factor {}
impl PartialOrd for Factor {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Factor {
    fn cmp(&self, other: &Self) -> Ordering {
        self.poly.cmp(&other.poly)
    }
}

type Den = BTreeMap<Factor, u32>;

/// Rational function `num / den` in the torus variables.
///
/// The denominator is kept as a product of normalized factors; no
/// multivariate gcd is taken. Equality is decided by cross-multiplication.
#[derive(Clone, Debug)]
pub struct RatFunc {
    num: LaurentPoly,
    den: Den,
}

impl Default for RatFunc {
    fn default() -> Self {
        RatFunc::zero()
    }
}

impl RatFunc {
    pub fn zero() -> Self {
        RatFunc {
            num: LaurentPoly::zero(),
            den: Den::new(),
        }
    }

    pub fn one() -> Self {
        RatFunc::from_poly(LaurentPoly::one())
    }

    pub fn from_poly(num: LaurentPoly) -> Self {
        RatFunc { num, den: Den::new() }
    }

    pub fn integer(c: i64) -> Self {
        RatFunc::from_poly(LaurentPoly::integer(c))
    }

    pub fn rational(c: BigRational) -> Self {
        RatFunc::from_poly(LaurentPoly::constant(c))
    }

    pub fn monomial(m: Monomial) -> Self {
        RatFunc::from_poly(LaurentPoly::monomial(m))
    }

    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut r = RatFunc::from_poly(num);
        r.divide_by_poly(den, 1);
        Ok(r.cleaned())
    }

    pub fn num(&self) -> &LaurentPoly {
        &self.num
    }

    /// The denominator as an expanded polynomial.
    pub fn den(&self) -> LaurentPoly {
        let mut acc = LaurentPoly::one();
        for (f, k) in &self.den {
            acc = &acc * &f.poly().pow(*k);
        }
        acc
    }

    pub fn den_factors(&self) -> impl Iterator<Item = (&LaurentPoly, u32)> {
        self.den.iter().map(|(f, k)| (f.poly(), *k))
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_empty()
    }

    /// `c · m` when the function is a single term with trivial denominator.
    pub fn as_term(&self) -> Option<(BigRational, Monomial)> {
        if !self.den.is_empty() {
            return None;
        }
        self.num.as_term().map(|(c, m)| (c.clone(), m))
    }

    fn cleaned(mut self) -> Self {
        if self.num.is_zero() {
            self.den.clear();
        }
        self
    }

    /// Multiplies the denominator by `p^mult`, normalizing `p` into factors and
    /// moving monomial content and leading coefficients into the numerator.
    fn divide_by_poly(&mut self, p: LaurentPoly, mult: u32) {
        let (unit_c, unit_m, factors) = normalize_factor(p);
        let inv_c = unit_c.recip();
        for _ in 0..mult {
            self.num = self.num.mul_monomial(unit_m.inv()).scale(&inv_c);
        }
        for f in factors {
            *self.den.entry(f).or_insert(0) += mult;
        }
    }

    pub fn inv(&self) -> Result<RatFunc> {
        if self.num.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut num = LaurentPoly::one();
        for (f, k) in &self.den {
            num = &num * &f.poly().pow(*k);
        }
        let mut r = RatFunc::from_poly(num);
        r.divide_by_poly(self.num.clone(), 1);
        Ok(r)
    }

    pub fn div(&self, other: &RatFunc) -> Result<RatFunc> {
        Ok(self * &other.inv()?)
    }

    pub fn pow(&self, n: i32) -> Result<RatFunc> {
        let base = if n < 0 { self.inv()? } else { self.clone() };
        let mut acc = RatFunc::one();
        for _ in 0..n.unsigned_abs() {
            acc = &acc * &base;
        }
        Ok(acc)
    }

    pub fn scale(&self, c: &BigRational) -> RatFunc {
        RatFunc {
            num: self.num.scale(c),
            den: self.den.clone(),
        }
        .cleaned()
    }

    pub fn mul_monomial(&self, m: Monomial) -> RatFunc {
        RatFunc {
            num: self.num.mul_monomial(m),
            den: self.den.clone(),
        }
    }

    /// Adams operation on the torus variables.
    pub fn adams(&self, n: u32) -> RatFunc {
        if n == 1 || self.is_zero() {
            return self.clone();
        }
        let mut r = RatFunc::from_poly(self.num.adams(n));
        for (f, k) in &self.den {
            for g in adams_factor(f, n) {
                *r.den.entry(g).or_insert(0) += k;
            }
        }
        r
    }

    /// Inverts `x, y, z`.
    pub fn bar(&self) -> RatFunc {
        let mut r = RatFunc::from_poly(self.num.bar());
        for (f, k) in &self.den {
            r.divide_by_poly(f.poly().bar(), *k);
        }
        r
    }

    /// Cancels denominator factors that divide the numerator exactly.
    pub fn reduced(&self) -> RatFunc {
        if self.is_zero() {
            return RatFunc::zero();
        }
        let mut num = self.num.clone();
        let mut den = Den::new();
        for (f, k) in &self.den {
            let mut left = *k;
            while left > 0 {
                match num.exact_div(f.poly()) {
                    Some(q) => {
                        num = q;
                        left -= 1;
                    }
                    None => break,
                }
            }
            if left > 0 {
                den.insert(f.clone(), left);
            }
        }
        RatFunc { num, den }
    }

    /// Rewrites both operands over their least common denominator.
    fn common_numerators(a: &RatFunc, b: &RatFunc) -> (LaurentPoly, LaurentPoly, Den) {
        if a.den == b.den {
            return (a.num.clone(), b.num.clone(), a.den.clone());
        }
        let mut lcm = a.den.clone();
        for (f, k) in &b.den {
            let e = lcm.entry(f.clone()).or_insert(0);
            *e = (*e).max(*k);
        }
        let lift = |r: &RatFunc| {
            let mut n = r.num.clone();
            for (f, k) in &lcm {
                let have = r.den.get(f).copied().unwrap_or(0);
                if *k > have {
                    n = &n * &f.poly().pow(k - have);
                }
            }
            n
        };
        (lift(a), lift(b), lcm)
    }

    /// Evaluates at `x = u², y = v², z = w²`; `None` at a pole.
    pub fn eval_sqrt(&self, roots: &[BigRational; 3]) -> Option<BigRational> {
        let n = self.num.eval_sqrt(roots)?;
        let mut d = BigRational::one();
        for (f, k) in &self.den {
            let v = f.poly().eval_sqrt(roots)?;
            if v.is_zero() {
                return None;
            }
            d *= num_traits::pow(v, *k as usize);
        }
        Some(n / d)
    }

    /// Multiplies by `den`-factor `p^k` given in normal form; used by the parser.
    pub(crate) fn with_den_factor(mut self, p: LaurentPoly, k: u32) -> Result<Self> {
        if p.is_zero() {
            return Err(Error::DivisionByZero);
        }
        self.divide_by_poly(p, k);
        Ok(self.cleaned())
    }
}

/// `(c, m, factors)` with `p = c · m · ∏ factors`.
fn normalize_factor(p: LaurentPoly) -> (BigRational, Monomial, Vec<Factor>) {
    assert!(!p.is_zero(), "normalize_factor on zero");
    let shift = p.min_exponents().unwrap();
    let shifted = p.mul_monomial(shift.inv());
    let (_, lead) = shifted.leading().unwrap();
    let lead = lead.clone();
    let monic = shifted.scale(&lead.recip());
    if monic.is_one() {
        return (lead, shift, Vec::new());
    }
    (lead, shift, split_binomial(monic))
}

/// Splits `w^g − 1` and `w^g + 1` into cyclotomic factors in `w`.
fn split_binomial(monic: LaurentPoly) -> Vec<Factor> {
    if monic.len() == 2 {
        let t = monic.terms();
        let (low_m, low_c) = (&t[0].0, &t[0].1);
        let (high_m, _) = (&t[1].0, &t[1].1);
        if low_m.is_one() && (low_c == &-BigRational::one() || low_c.is_one()) {
            let (w, g) = high_m.primitive_root();
            let minus = low_c == &-BigRational::one();
            let ds: Vec<u32> = if minus {
                divisors(g)
            } else {
                divisors(2 * g).into_iter().filter(|d| g % d != 0).collect()
            };
            return ds.into_iter().map(|d| Factor::cyclotomic(w, d)).collect();
        }
    }
    if let Some(f) = recognize_cyclotomic(&monic) {
        return vec![f];
    }
    vec![Factor::generic(monic)]
}

/// Tags `monic` as `Φ_d(w)` when it is one, so later Adams operations split it.
fn recognize_cyclotomic(monic: &LaurentPoly) -> Option<Factor> {
    let (top, _) = monic.leading()?;
    let (w, g) = top.primitive_root();
    if g == 0 {
        return None;
    }
    for d in 3..=(2 * g * g + 2) {
        if euler_phi(d) == g {
            let c = cyclotomic_in(w, d);
            if &c == monic {
                return Some(Factor::cyclotomic(w, d));
            }
        }
    }
    None
}

fn euler_phi(n: u32) -> u32 {
    (1..=n).filter(|k| gcd(*k, n) == 1).count() as u32
}

fn adams_factor(f: &Factor, n: u32) -> Vec<Factor> {
    match f.cyclotomic {
        // Φ_d(w^n) = ∏ Φ_k(w) over k | dn with k / gcd(k, n) = d.
        Some((w, d)) => divisors(d * n)
            .into_iter()
            .filter(|k| k / gcd(*k, n) == d)
            .map(|k| Factor::cyclotomic(w, k))
            .collect(),
        None => {
            let (_, _, fs) = normalize_factor(f.poly().adams(n));
            fs
        }
    }
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn divisors(n: u32) -> Vec<u32> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

/// Integer coefficients of the cyclotomic polynomial `Φ_n`, lowest degree first.
pub(crate) fn cyclotomic_coeffs(n: u32) -> Vec<i64> {
    // x^n − 1 divided by Φ_d for every proper divisor d.
    let mut poly = vec![0i64; n as usize + 1];
    poly[0] = -1;
    poly[n as usize] = 1;
    for d in divisors(n).into_iter().filter(|d| *d < n) {
        let div = cyclotomic_coeffs(d);
        poly = div_monic(&poly, &div);
    }
    poly
}

fn div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qlen = rem.len() - dd;
    let mut q = vec![0i64; qlen];
    for i in (0..qlen).rev() {
        let c = rem[i + dd];
        q[i] = c;
        for (j, dc) in den.iter().enumerate() {
            rem[i + j] -= c * dc;
        }
    }
    debug_assert!(rem.iter().all(|c| *c == 0));
    q
}

fn cyclotomic_in(w: Monomial, d: u32) -> LaurentPoly {
    LaurentPoly::from_terms(
        cyclotomic_coeffs(d)
            .into_iter()
            .enumerate()
            .map(|(k, c)| (w.pow(k as i32), BigRational::from_integer(c.into()))),
    )
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        let (a, b, _) = RatFunc::common_numerators(self, other);
        a == b
    }
}
impl Eq for RatFunc {}

impl<'a> Add<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let (a, b, den) = RatFunc::common_numerators(self, rhs);
        RatFunc { num: &a + &b, den }.cleaned()
    }
}

impl<'a> Sub<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -self.num,
            den: self.den,
        }
    }
}

impl<'a> Mul<&'a RatFunc> for &'a RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        let mut den = self.den.clone();
        for (f, k) in &rhs.den {
            *den.entry(f.clone()).or_insert(0) += k;
        }
        RatFunc {
            num: &self.num * &rhs.num,
            den,
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr<RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $f(self, rhs: RatFunc) -> RatFunc {
                (&self).$f(&rhs)
            }
        }
        impl<'a> $tr<&'a RatFunc> for RatFunc {
            type Output = RatFunc;
            fn $f(self, rhs: &RatFunc) -> RatFunc {
                (&self).$f(rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl From<LaurentPoly> for RatFunc {
    fn from(p: LaurentPoly) -> Self {
        RatFunc::from_poly(p)
    }
}

impl From<Monomial> for RatFunc {
    fn from(m: Monomial) -> Self {
        RatFunc::monomial(m)
    }
}

impl From<i64> for RatFunc {
    fn from(c: i64) -> Self {
        RatFunc::integer(c)
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_empty() {
            return write!(f, "{}", self.num);
        }
        write!(f, "({})/(", self.num)?;
        write_den(f, self.den_factors())?;
        write!(f, ")")
    }
}

/// Writes a factored denominator as `(f1)^k*(f2)`.
pub(crate) fn write_den<'a>(
    f: &mut impl fmt::Write,
    factors: impl Iterator<Item = (&'a LaurentPoly, u32)>,
) -> fmt::Result {
    let mut first = true;
    for (p, k) in factors {
        if !first {
            write!(f, "*")?;
        }
        first = false;
        if k == 1 {
            write!(f, "({p})")?;
        } else {
            write!(f, "({p})^{k}")?;
        }
    }
    if first {
        write!(f, "1")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(ex2: i32, ey2: i32, ez2: i32) -> RatFunc {
        RatFunc::monomial(Monomial::from_doubled(ex2, ey2, ez2))
    }

    #[test]
    fn cyclotomic_polynomials() {
        assert_eq!(cyclotomic_coeffs(1), vec![-1, 1]);
        assert_eq!(cyclotomic_coeffs(2), vec![1, 1]);
        assert_eq!(cyclotomic_coeffs(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_coeffs(12), vec![1, 0, -1, 0, 1]);
    }

    #[test]
    fn cross_multiplication_identity() {
        let one = RatFunc::one();
        let y = m(0, 2, 0);
        let a = one.div(&(&one - &y)).unwrap();
        let b = (&one + &y).div(&(&one - &(&y * &y))).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn bracket_sign_flip_is_detected() {
        let s = &m(0, 1, 0) - &m(0, -1, 0);
        let t = -(&m(0, -1, 0) - &m(0, 1, 0));
        assert_eq!(s, t);
        let u = &m(0, -1, 0) - &m(0, 1, 0);
        assert_ne!(s, u);
    }

    #[test]
    fn x_over_x_is_one() {
        let x = m(2, 0, 0);
        assert_eq!(x.div(&x).unwrap(), RatFunc::one());
    }

    #[test]
    fn adams_of_cyclotomic_factor_matches_direct_construction() {
        let one = RatFunc::one();
        let y = m(0, 2, 0);
        let f = one.div(&(&y + &one)).unwrap();
        let direct = one.div(&(&(&y * &y) + &one)).unwrap();
        assert_eq!(f.adams(2), direct);
        let g = one.div(&(&(&y * &y) - &(&y - &one))).unwrap();
        let gd = one.div(&(&y.pow(4).unwrap() - &(&(&y * &y) - &one))).unwrap();
        assert_eq!(g.adams(2), gd);
    }

    #[test]
    fn bar_of_bracket_inverse() {
        let one = RatFunc::one();
        let b = (&m(0, 1, 0) - &m(0, -1, 0)).inv().unwrap();
        assert_eq!(b.bar(), -b.clone());
        assert_eq!(&b.bar().bar() - &b, RatFunc::zero());
        assert!(!one.is_zero());
    }

    #[test]
    fn reduction_cancels_exact_factors() {
        let one = RatFunc::one();
        let y = m(0, 2, 0);
        let r = (&(&y * &y) - &one).div(&(&y - &one)).unwrap();
        let red = r.reduced();
        assert!(red.is_polynomial());
        assert_eq!(
            red.num(),
            &(&LaurentPoly::monomial(Monomial::y()) + &LaurentPoly::one())
        );
    }
}
