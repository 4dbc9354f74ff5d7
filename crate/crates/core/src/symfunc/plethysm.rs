use std::collections::BTreeMap;

use num_rational::BigRational;

use super::{Basis, SymFunc, SymPoly};
use crate::error::{Error, Result};
use crate::par;
use crate::partitions::{enumerate, z_of, Partition};
use crate::scalars::{LaurentPoly, Monomial, QSeries, RatFunc};

type Piece<K> = BTreeMap<(K, i32, i32), RatFunc>;

/// Additive grading that is positive on every admissible seed term.
fn grade<K: Basis>(k: &K, a: i32, b: i32) -> i64 {
    let (dp, dq) = k.degrees();
    dp as i64 + dq as i64 + a as i64 + 2 * b as i64
}

fn mobius(n: u32) -> i64 {
    let mut n = n;
    let mut sign = 1;
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            n /= d;
            if n.is_multiple_of(d) {
                return 0;
            }
            sign = -sign;
        }
        d += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

impl<K: Basis> SymPoly<K> {
    fn max_grade(&self) -> i64 {
        self.bounds.0 as i64 + self.bounds.1 as i64 + self.nq as i64 + 2 * self.nbig as i64
    }

    fn keep(&self, k: &K, a: i32, b: i32) -> bool {
        let (dp, dq) = k.degrees();
        dp <= self.bounds.0 && dq <= self.bounds.1 && a <= self.nq as i32 && b <= self.nbig as i32
    }

    fn graded(&self) -> BTreeMap<i64, Piece<K>> {
        let mut out: BTreeMap<i64, Piece<K>> = BTreeMap::new();
        for (k, a, b, c) in self.flat_terms() {
            out.entry(grade(&k, a, b)).or_default().insert((k, a, b), c);
        }
        out
    }

    fn reassemble(&self, pieces: Vec<Piece<K>>) -> Self {
        let flat = pieces
            .into_iter()
            .flat_map(|p| p.into_iter().map(|((k, a, b), c)| (k, a, b, c)))
            .collect();
        SymPoly::from_flat(self.bounds, self.nq, self.nbig, flat)
    }

    /// `Σ_j j · L_j · E_{w−j}` for `j` in `lo..=w`, truncated.
    fn weighted_convolution(&self, w: i64, lo: i64, log: &[Piece<K>], exp: &[Piece<K>]) -> Piece<K> {
        let mut jobs: Vec<(i64, &(K, i32, i32), &RatFunc)> = Vec::new();
        for j in lo..=w {
            let lj = &log[j as usize];
            if exp[(w - j) as usize].is_empty() {
                continue;
            }
            for (key, c) in lj {
                jobs.push((j, key, c));
            }
        }
        let rows = par::map(&jobs, |(j, (k1, a1, b1), c1)| {
            let weight = BigRational::from_integer((*j).into());
            let mut row = Vec::new();
            for ((k2, a2, b2), c2) in &exp[(w - j) as usize] {
                let k = k1.times(k2);
                let (a, b) = (a1 + a2, b1 + b2);
                if self.keep(&k, a, b) {
                    row.push(((k, a, b), (*c1 * c2).scale(&weight)));
                }
            }
            row
        });
        let mut acc: Piece<K> = BTreeMap::new();
        for row in rows {
            for (key, c) in row {
                match acc.get_mut(&key) {
                    Some(v) => *v = &*v + &c,
                    None => {
                        acc.insert(key, c);
                    }
                }
            }
        }
        acc.retain(|_, v| !v.is_zero());
        acc
    }

    /// Ordinary exponential of an element with positive grade.
    pub fn exp_plain(&self) -> Result<Self> {
        let graded = self.graded();
        if graded.keys().any(|g| *g <= 0) {
            return Err(Error::DivergentPlethysticExp);
        }
        let top = self.max_grade().max(0);
        let mut log: Vec<Piece<K>> = vec![BTreeMap::new(); top as usize + 1];
        for (g, p) in graded {
            if g <= top {
                log[g as usize] = p;
            }
        }
        let mut exp: Vec<Piece<K>> = vec![BTreeMap::new(); top as usize + 1];
        exp[0].insert((K::unit(), 0, 0), RatFunc::one());
        // w E_w = Σ_j j L_j E_{w−j}
        for w in 1..=top {
            let conv = self.weighted_convolution(w, 1, &log, &exp);
            let inv = BigRational::new(1.into(), w.into());
            exp[w as usize] = conv.into_iter().map(|(k, v)| (k, v.scale(&inv))).collect();
        }
        Ok(self.reassemble(exp))
    }

    /// Ordinary logarithm of an element whose grade-zero part is exactly 1.
    pub fn log_plain(&self) -> Result<Self> {
        let graded = self.graded();
        let top = self.max_grade().max(0);
        let mut exp: Vec<Piece<K>> = vec![BTreeMap::new(); top as usize + 1];
        for (g, p) in graded {
            if g < 0 {
                return Err(Error::InvalidArgument("negative grade in logarithm".into()));
            }
            if g <= top {
                exp[g as usize] = p;
            }
        }
        let unit_ok = exp[0].len() == 1
            && exp[0]
                .get(&(K::unit(), 0, 0))
                .map(|c| *c == RatFunc::one())
                .unwrap_or(false);
        if !unit_ok {
            return Err(Error::InvalidArgument("logarithm needs constant term 1".into()));
        }
        let mut log: Vec<Piece<K>> = vec![BTreeMap::new(); top as usize + 1];
        for w in 1..=top {
            // L_w = E_w − (1/w) Σ_{j<w} j L_j E_{w−j}
            let mut lw = exp[w as usize].clone();
            let conv = self.weighted_convolution_below(w, &log, &exp);
            let inv = BigRational::new((-1).into(), w.into());
            for (k, v) in conv {
                let v = v.scale(&inv);
                match lw.get_mut(&k) {
                    Some(x) => *x = &*x + &v,
                    None => {
                        lw.insert(k, v);
                    }
                }
            }
            lw.retain(|_, v| !v.is_zero());
            log[w as usize] = lw;
        }
        Ok(self.reassemble(log))
    }

    fn weighted_convolution_below(&self, w: i64, log: &[Piece<K>], exp: &[Piece<K>]) -> Piece<K> {
        let mut trimmed: Vec<Piece<K>> = log.to_vec();
        if (w as usize) < trimmed.len() {
            trimmed[w as usize] = BTreeMap::new();
        }
        self.weighted_convolution(w, 1, &trimmed, exp)
    }

    /// Plethystic exponential `exp(Σ_n Ψ_n f / n)`.
    pub fn plethystic_exp(&self) -> Result<Self> {
        if self.graded().keys().any(|g| *g <= 0) {
            return Err(Error::DivergentPlethysticExp);
        }
        let mut log = Self::zero(self.bounds, self.nq, self.nbig);
        let mut n = 1u32;
        loop {
            let psi = self.adams(n)?;
            if psi.is_zero() {
                break;
            }
            let inv = BigRational::new(1.into(), (n as i64).into());
            log = &log + &psi.map_coeffs(|_, v| v.scale_rational(&inv));
            n += 1;
        }
        log.exp_plain()
    }

    /// Inverse of [`SymPoly::plethystic_exp`] via Möbius inversion.
    pub fn plethystic_log(&self) -> Result<Self> {
        let log = self.log_plain()?;
        let mut out = Self::zero(self.bounds, self.nq, self.nbig);
        let mut n = 1u32;
        loop {
            let psi = log.adams(n)?;
            if psi.is_zero() {
                break;
            }
            let mu = mobius(n);
            if mu != 0 {
                let c = BigRational::new(mu.into(), (n as i64).into());
                out = &out + &psi.map_coeffs(|_, v| v.scale_rational(&c));
            }
            n += 1;
        }
        Ok(out)
    }
}

/// Outcome of the `∏ 1/(1 − t^{−m} x_i)` expansion check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HhdReport {
    /// `Exp(p_1/(1−t^{−1}))` agrees with `Σ_μ p_μ / (z_μ ∏ (1 − t^{−μ_i}))`.
    pub exp_matches_product: bool,
    /// Each degree-`d` part times `∏_{i≤d} (1 − t^{−i})` is a Laurent polynomial.
    pub normalization_polynomial: bool,
}

impl HhdReport {
    pub fn passed(&self) -> bool {
        self.exp_matches_product && self.normalization_polynomial
    }
}

fn one_minus(m: Monomial) -> RatFunc {
    RatFunc::from(&LaurentPoly::one() - &LaurentPoly::monomial(m))
}

pub fn exp_hhd_check(t: Monomial, max_deg: u32) -> Result<HhdReport> {
    if t.is_one() {
        return Err(Error::InvalidArgument("trivial weight t".into()));
    }
    let tinv = t.inv();
    let seed_coeff = one_minus(tinv).inv()?;
    let seed = SymFunc::term(Partition::single(1), QSeries::constant(seed_coeff, 0, 0), (max_deg, 0));
    let lhs = seed.plethystic_exp()?;
    let mut rhs = SymFunc::zero((max_deg, 0), 0, 0);
    for d in 0..=max_deg {
        for mu in enumerate(d) {
            let mut den = RatFunc::from(LaurentPoly::constant(z_of(&mu)));
            for part in mu.parts() {
                den = &den * &one_minus(tinv.pow(*part as i32));
            }
            rhs.add_term(mu, QSeries::constant(den.inv()?, 0, 0));
        }
    }
    let mut normalization_polynomial = true;
    for (mu, c) in lhs.terms() {
        let mut norm = RatFunc::one();
        for i in 1..=mu.size() {
            norm = &norm * &one_minus(tinv.pow(i as i32));
        }
        let scaled = &c.coeff(0, 0) * &norm;
        if !scaled.reduced().is_polynomial() {
            normalization_polynomial = false;
        }
    }
    Ok(HhdReport {
        exp_matches_product: lhs.same_as(&rhs),
        normalization_polynomial,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::{complete_h, SymFunc2};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn mobius_values() {
        let v: Vec<i64> = (1..=10).map(mobius).collect();
        assert_eq!(v, [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]);
    }

    #[test]
    fn exp_of_zero_is_one() {
        let z = SymFunc::zero((3, 0), 2, 0);
        assert!(z.plethystic_exp().unwrap().same_as(&SymFunc::one((3, 0), 2, 0)));
    }

    #[test]
    fn exp_of_q_p1_gives_complete_functions() {
        let seed = SymFunc::term(p("1"), QSeries::monomial(1, Monomial::ONE, 4, 0), (4, 0));
        let e = seed.plethystic_exp().unwrap();
        for n in 0..=4u32 {
            let h = complete_h(n, 4, 4, 0);
            for (mu, c) in h.terms() {
                let got = e.coeff(mu);
                assert!(got.same_as(&c.shift(n as i32, 0)), "{mu}");
            }
        }
    }

    #[test]
    fn cauchy_kernel() {
        let seed = SymFunc2::power_sum2(&p("1"), &p("1"), (3, 3), 0, 0);
        let e = seed.plethystic_exp().unwrap();
        for (k, c) in e.terms() {
            assert_eq!(k.0, k.1);
            let expect = QSeries::constant(RatFunc::rational(z_of(&k.0).recip()), 0, 0);
            assert!(c.same_as(&expect));
        }
        assert_eq!(e.len(), 1 + 1 + 2 + 3);
    }

    #[test]
    fn constant_seed_diverges() {
        let one = SymFunc::one((2, 0), 1, 0);
        assert_eq!(one.plethystic_exp().unwrap_err(), Error::DivergentPlethysticExp);
    }

    #[test]
    fn log_inverts_exp() {
        let seed = &SymFunc::term(p("1"), QSeries::monomial(1, Monomial::y(), 3, 0), (3, 0))
            + &SymFunc::term(p("2"), QSeries::monomial(1, Monomial::kappa(), 3, 0), (3, 0));
        let back = seed.plethystic_exp().unwrap().plethystic_log().unwrap();
        assert!(back.same_as(&seed));
    }

    #[test]
    fn hhd_small_degrees() {
        let r = exp_hhd_check(Monomial::y(), 3).unwrap();
        assert!(r.passed());
        let seed = SymFunc::term(
            p("1"),
            QSeries::constant(one_minus(Monomial::y().inv()).inv().unwrap(), 0, 0),
            (2, 0),
        );
        let e = seed.plethystic_exp().unwrap();
        let expect = one_minus(Monomial::y().pow(-2))
            .scale(&BigRational::from_integer(2.into()))
            .inv()
            .unwrap();
        assert_eq!(e.coeff(&p("2")).coeff(0, 0), expect);
        assert!(exp_hhd_check(Monomial::ONE, 2).is_err());
    }
}
