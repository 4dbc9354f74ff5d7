//! The 1-leg and 2-leg vertex series, stable envelopes, the twisted pairing
//! and the consistency chains built from them.

use std::fmt;
use std::str::FromStr;

use num_rational::BigRational;
use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::fock::{matrix_element, Kernel};
use crate::partitions::Partition;
use crate::scalars::{bracket_of, LaurentPoly, Monomial, QSeries, RatFunc};
use crate::symfunc::{schur, skew_schur, SymFunc, SymFunc2};

/// Which denominator the `p̄_1` one-leg term of the 2-leg seed carries.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Variant {
    /// `q/(1 − q/κ)` in the `p̄_1` term, mixed term with `(1 − qκ)/(1 − q/κ)`.
    #[serde(rename = "as-printed")]
    AsPrinted,
    /// `q/(1 − qκ)` in the `p̄_1` term, no `p_1` term, bare mixed term.
    #[serde(rename = "lemma-form")]
    LemmaForm,
}

impl Variant {
    pub const ALL: [Variant; 2] = [Variant::AsPrinted, Variant::LemmaForm];

    pub fn name(&self) -> &'static str {
        match self {
            Variant::AsPrinted => "as-printed",
            Variant::LemmaForm => "lemma-form",
        }
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Variant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "as-printed" | "as_printed" => Ok(Variant::AsPrinted),
            "lemma-form" | "lemma_form" => Ok(Variant::LemmaForm),
            other => Err(Error::InvalidArgument(format!("unknown variant '{other}'"))),
        }
    }
}

/// A named plethystic exponential together with its seed.
#[derive(Clone, Debug)]
pub struct VertexFormula {
    pub name: String,
    pub seed: SymFunc2,
    pub body: SymFunc2,
    pub nq: u32,
    pub nbig: u32,
    pub max_deg: u32,
}

impl VertexFormula {
    fn from_seed(name: impl Into<String>, seed: SymFunc2, nq: u32, nbig: u32, max_deg: u32) -> Result<Self> {
        let body = seed.plethystic_exp()?;
        Ok(VertexFormula {
            name: name.into(),
            seed,
            body,
            nq,
            nbig,
            max_deg,
        })
    }

    pub fn kernel(&self) -> Kernel {
        Kernel::new(self.body.clone())
    }
}

pub(crate) fn brk(m: Monomial) -> RatFunc {
    bracket_of(m).expect("integral weight")
}

pub(crate) fn rat(n: i64) -> BigRational {
    BigRational::from_integer(n.into())
}

/// `1/(1 − q^k κ^{−k})` or `1/(1 − q^k κ^k)`.
pub(crate) fn geom(k: u32, kappa_sign: i32, nq: u32, nbig: u32) -> QSeries {
    QSeries::geometric(k as i32, Monomial::kappa().pow(kappa_sign * k as i32), nq, nbig)
}

/// `q/(1 − q/κ)`.
pub(crate) fn q_over_minus(nq: u32, nbig: u32) -> QSeries {
    geom(1, -1, nq, nbig).shift(1, 0)
}

/// `q/(1 − qκ)`.
pub(crate) fn q_over_plus(nq: u32, nbig: u32) -> QSeries {
    geom(1, 1, nq, nbig).shift(1, 0)
}

/// `(1 − qκ)/(1 − q/κ)`.
pub(crate) fn gluing_ratio(nq: u32, nbig: u32) -> QSeries {
    let num = &QSeries::one(nq, nbig) - &QSeries::monomial(1, Monomial::kappa(), nq, nbig);
    &num * &geom(1, -1, nq, nbig)
}

fn one_minus(m: Monomial) -> RatFunc {
    RatFunc::from(&LaurentPoly::one() - &LaurentPoly::monomial(m))
}

fn p1() -> Partition {
    Partition::single(1)
}

fn left(c: QSeries, bounds: (u32, u32)) -> SymFunc2 {
    SymFunc2::term((p1(), Partition::empty()), c, bounds)
}

fn right(c: QSeries, bounds: (u32, u32)) -> SymFunc2 {
    SymFunc2::term((Partition::empty(), p1()), c, bounds)
}

fn mixed(c: QSeries, bounds: (u32, u32)) -> SymFunc2 {
    SymFunc2::term((p1(), p1()), c, bounds)
}

/// `Exp(−(1/{y}) · q/(1 − q/κ) · p_1)`.
pub fn one_leg(nq: u32, max_deg: u32) -> Result<VertexFormula> {
    let inv_y = brk(Monomial::y()).inv()?;
    let seed = left((-q_over_minus(nq, 0)).scale(&inv_y), (max_deg, 0));
    VertexFormula::from_seed("one-leg", seed, nq, 0, max_deg)
}

/// The 2-leg vertex series in either denominator variant.
pub fn two_leg(nq: u32, max_deg: u32, variant: Variant) -> Result<VertexFormula> {
    let b = (max_deg, max_deg);
    let inv_y = brk(Monomial::y()).inv()?;
    let inv_yxz = (&brk(Monomial::y()) * &brk(Monomial::xz())).inv()?;
    let q = QSeries::monomial(1, Monomial::ONE, nq, 0);
    let seed = match variant {
        Variant::AsPrinted => {
            let single = (-q_over_minus(nq, 0)).scale(&inv_y);
            let mix = (-(&q * &gluing_ratio(nq, 0))).scale(&inv_yxz);
            &(&left(single.clone(), b) + &right(single, b)) + &mixed(mix, b)
        }
        Variant::LemmaForm => {
            let single = (-q_over_plus(nq, 0)).scale(&inv_y);
            let mix = (-q).scale(&inv_yxz);
            &right(single, b) + &mixed(mix, b)
        }
    };
    VertexFormula::from_seed(format!("two-leg/{variant}"), seed, nq, 0, max_deg)
}

/// `G = Exp((1 − qκ)/(1 − q/κ) · p_1 p̄_1)`.
pub fn gluing(nq: u32, max_deg: u32) -> Result<VertexFormula> {
    let seed = mixed(gluing_ratio(nq, 0), (max_deg, max_deg));
    VertexFormula::from_seed("gluing", seed, nq, 0, max_deg)
}

/// The contraction inverse of [`gluing`], `Exp((1 − q/κ)/(1 − qκ) · p_1 p̄_1)`.
pub fn gluing_inv(nq: u32, max_deg: u32) -> Result<VertexFormula> {
    let num = &QSeries::one(nq, 0) - &QSeries::monomial(1, Monomial::kappa().inv(), nq, 0);
    let seed = mixed(&num * &geom(1, 1, nq, 0), (max_deg, max_deg));
    VertexFormula::from_seed("gluing-inv", seed, nq, 0, max_deg)
}

/// `y^{n/2} (xz)^{n − n²/2} · s_λ(p_i/(1 − (xz)^i))` with `n = |λ|`.
pub fn stab(lambda: &Partition, max_deg: u32, nq: u32) -> Result<SymFunc> {
    let n = lambda.size() as i32;
    let pref = Monomial::from_doubled(2 * n - n * n, n, 2 * n - n * n);
    let s = schur(lambda, max_deg, nq, 0);
    let mut inv = Vec::new();
    for k in 0..=max_deg {
        inv.push(if k == 0 {
            RatFunc::one()
        } else {
            one_minus(Monomial::xz().pow(k as i32)).inv()?
        });
    }
    Ok(s.plethys_mul(|k| QSeries::constant(inv[k as usize].clone(), nq, 0))
        .scale_ratfunc(&RatFunc::monomial(pref)))
}

fn mult_series(m: Monomial, sign: i32, nq: u32, nbig: u32) -> impl Fn(u32) -> QSeries + Sync + Send {
    // p_k ↦ (1 − m^{sign·k}) p_k
    move |k| QSeries::constant(one_minus(m.pow(sign * k as i32)), nq, nbig)
}

/// `⟨ conj(f(p_i (1 − (xz)^{−i}))), g(p_i (1 − y^i)) ⟩_Hall`.
pub fn khall_pair(f: &SymFunc, g: &SymFunc) -> QSeries {
    let (nq, nbig) = (f.nq().min(g.nq()), f.nbig().min(g.nbig()));
    let ft = f.plethys_mul(mult_series(Monomial::xz(), -1, nq, nbig)).bar();
    let gt = g.plethys_mul(mult_series(Monomial::y(), 1, nq, nbig));
    ft.pair(&gt)
}

/// The same pairing written with bilinear derivations,
/// `exp(Σ_n n (1 − (xz)^n)(1 − y^n) ∂_{p_n} ∂_{p̄_n}) conj(f)(p̄) g(p)` at `p = p̄ = 0`.
pub fn khall_pair_derivation_form(f: &SymFunc, g: &SymFunc) -> QSeries {
    let (nq, nbig) = (f.nq().min(g.nq()), f.nbig().min(g.nbig()));
    let deg = f.bounds().0.max(g.bounds().0);
    let h = SymFunc2::tensor(&g.truncate((deg, 0), nq, nbig), &f.bar().truncate((deg, 0), nq, nbig));
    let mut acc = h.coeff(&(Partition::empty(), Partition::empty()));
    let mut cur = h;
    let mut k = 1i64;
    while !cur.is_zero() {
        cur = apply_bilinear_derivation(&cur, nq, nbig)
            .map_coeffs(|_, v| v.scale_rational(&BigRational::new(1.into(), k.into())));
        acc = &acc + &cur.coeff(&(Partition::empty(), Partition::empty()));
        k += 1;
    }
    acc
}

/// `Σ_n n (1 − (xz)^n)(1 − y^n) ∂_{p_n} ∂_{p̄_n}`.
fn apply_bilinear_derivation(h: &SymFunc2, nq: u32, nbig: u32) -> SymFunc2 {
    let mut out = SymFunc2::zero(h.bounds(), nq, nbig);
    for ((l, r), v) in h.terms() {
        for (part, ml) in l.multiplicities() {
            let mr = r.parts().iter().filter(|x| **x == part).count() as i64;
            if mr == 0 {
                continue;
            }
            let c = &(&one_minus(Monomial::xz().pow(part as i32)) * &one_minus(Monomial::y().pow(part as i32)))
                .scale(&rat(part as i64 * ml as i64 * mr));
            let drop = |p: &Partition| {
                let mut parts = p.parts().to_vec();
                let pos = parts.iter().position(|x| *x == part).unwrap();
                parts.remove(pos);
                Partition::new(parts)
            };
            out.add_term((drop(l), drop(r)), v.scale(c));
        }
    }
    out
}

/// Both sides of the 1-leg chain: the twisted pairing of the normalized stable
/// envelope with the 1-leg series, and `s_λ(p_i = −q^i/(1 − q^i/κ^i))`.
pub fn one_leg_chain(lambda: &Partition, nq: u32) -> Result<(QSeries, QSeries)> {
    let n = lambda.size() as i32;
    let deg = lambda.size();
    let norm = Monomial::from_doubled(n * n, 0, n * n);
    let f = stab(lambda, deg, nq)?.scale_ratfunc(&RatFunc::monomial(norm));
    let g = one_leg(nq, deg)?.body.left_slice();
    let lhs = khall_pair(&f, &g);
    let rhs = schur(lambda, deg, nq, 0).plethys_eval(|k| -(geom(k, -1, nq, 0).shift(k as i32, 0)));
    Ok((lhs, rhs))
}

/// Solution of `lhs = c · q^shift · rhs` with `c` a single torus monomial times a rational.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MonomialFactor {
    pub coeff: BigRational,
    pub monomial: Monomial,
    pub q_shift: i32,
}

impl fmt::Display for MonomialFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let c = RatFunc::from(LaurentPoly::term(self.coeff.clone(), self.monomial));
        if self.q_shift == 0 {
            write!(f, "{c}")
        } else {
            write!(f, "q^{}*({c})", self.q_shift)
        }
    }
}

/// Finds `c` and `s` with `lhs = c · q^s · rhs` up to the common truncation.
/// Both zero gives the unit factor.
pub fn monomial_ratio(lhs: &QSeries, rhs: &QSeries) -> Option<MonomialFactor> {
    match (lhs.is_zero(), rhs.is_zero()) {
        (true, true) => {
            return Some(MonomialFactor {
                coeff: BigRational::one(),
                monomial: Monomial::ONE,
                q_shift: 0,
            })
        }
        (false, false) => {}
        _ => return None,
    }
    let (la, lb, lc) = lhs.terms().next()?;
    let (ra, rb, rc) = rhs.terms().next()?;
    if lb != rb {
        return None;
    }
    let ratio = lc.div(rc).ok()?.reduced();
    let (coeff, monomial) = ratio.as_term()?;
    let shift = la - ra;
    let scaled = rhs.scale(&ratio).shift(shift, 0);
    let lhs_cut = lhs.truncate(scaled.nq(), scaled.nbig());
    let scaled = scaled.truncate(lhs.nq(), lhs.nbig());
    if lhs_cut.coeffs_eq(&scaled) {
        Some(MonomialFactor {
            coeff,
            monomial,
            q_shift: shift,
        })
    } else {
        None
    }
}

/// Result of comparing the two sides of the 2-leg equivalence for one `(λ, μ)`.
#[derive(Clone, Debug)]
pub struct PairingVerdict {
    pub lambda: Partition,
    pub mu: Partition,
    pub variant: Variant,
    pub lhs: QSeries,
    pub rhs: QSeries,
    /// `lhs = factor · rhs` when such a monomial factor exists.
    pub factor: Option<MonomialFactor>,
}

impl PairingVerdict {
    /// A monomial prefactor exists and does not involve `q`.
    pub fn passed(&self) -> bool {
        matches!(&self.factor, Some(f) if f.q_shift == 0)
    }
}

/// Twisted pairing on two alphabets: the `p̄` alphabet is twisted as in
/// [`khall_pair`], the `p` alphabet with the roles of `y` and `xz` exchanged.
pub fn khall_pair2(f: &SymFunc2, g: &SymFunc2) -> QSeries {
    let (nq, nbig) = (f.nq().min(g.nq()), f.nbig().min(g.nbig()));
    let ft = f
        .plethys_mul2(
            mult_series(Monomial::y(), -1, nq, nbig),
            mult_series(Monomial::xz(), -1, nq, nbig),
        )
        .bar();
    let gt = g.plethys_mul2(
        mult_series(Monomial::xz(), 1, nq, nbig),
        mult_series(Monomial::y(), 1, nq, nbig),
    );
    ft.pair(&gt)
}

/// `y^{−|λ|/2} s_λ(p_i/(1 − y^i)) ⊗ s_μ(p̄_i/(1 − (xz)^{−i}))`.
pub fn two_leg_test_vector(lambda: &Partition, mu: &Partition, max_deg: u32, nq: u32) -> Result<SymFunc2> {
    let mut inv_y = vec![RatFunc::one()];
    let mut inv_xz = vec![RatFunc::one()];
    for k in 1..=max_deg as i32 {
        inv_y.push(one_minus(Monomial::y().pow(k)).inv()?);
        inv_xz.push(one_minus(Monomial::xz().pow(-k)).inv()?);
    }
    let sl = schur(lambda, max_deg, nq, 0)
        .plethys_mul(|k| QSeries::constant(inv_y[k as usize].clone(), nq, 0))
        .scale_ratfunc(&RatFunc::monomial(Monomial::from_doubled(
            0,
            -(lambda.size() as i32),
            0,
        )));
    let sm = schur(mu, max_deg, nq, 0).plethys_mul(|k| QSeries::constant(inv_xz[k as usize].clone(), nq, 0));
    Ok(SymFunc2::tensor(&sl, &sm))
}

/// `s_{μ/λ}` at `p_i = sign · q^i/(1 − (qκ)^i)`.
pub fn skew_at_q_over_plus(lambda: &Partition, mu: &Partition, nq: u32, sign: i64) -> QSeries {
    skew_schur(mu, lambda, mu.size(), nq, 0)
        .plethys_eval(|k| geom(k, 1, nq, 0).shift(k as i32, 0).scale_rational(&rat(sign)))
}

/// Pairs the test vector against the 2-leg series and compares with
/// `κ^{|λ|} s_{μ/λ}(p_i = −q^i/(1 − (qκ)^i))` up to a monomial prefactor.
pub fn two_leg_pairing_check(lambda: &Partition, mu: &Partition, nq: u32, variant: Variant) -> Result<PairingVerdict> {
    let deg = lambda.size().max(mu.size()).max(1);
    two_leg_pairing_check_with(&two_leg(nq, deg, variant)?, variant, lambda, mu)
}

/// [`two_leg_pairing_check`] against an already expanded 2-leg series.
pub fn two_leg_pairing_check_with(
    series: &VertexFormula,
    variant: Variant,
    lambda: &Partition,
    mu: &Partition,
) -> Result<PairingVerdict> {
    let (nq, deg) = (series.nq, series.max_deg);
    if lambda.size() > deg || mu.size() > deg {
        return Err(Error::InvalidArgument(format!(
            "({lambda}; {mu}) exceeds degree bound {deg}"
        )));
    }
    let vector = two_leg_test_vector(lambda, mu, deg, nq)?;
    let lhs = khall_pair2(&vector, &series.body);
    let kappa_l = RatFunc::monomial(Monomial::kappa().pow(lambda.size() as i32));
    let rhs = skew_at_q_over_plus(lambda, mu, nq, -1).scale(&kappa_l);
    let factor = monomial_ratio(&lhs, &rhs);
    Ok(PairingVerdict {
        lambda: lambda.clone(),
        mu: mu.clone(),
        variant,
        lhs,
        rhs,
        factor,
    })
}

/// What the left side of [`two_leg_pairing_check`] actually equals:
/// the ratio to `s_{μ/λ}(p_i = +q^i/(1 − (qκ)^i))`.
pub fn two_leg_pairing_diagnostic(v: &PairingVerdict) -> Option<MonomialFactor> {
    let plus = skew_at_q_over_plus(&v.lambda, &v.mu, v.lhs.nq(), 1);
    monomial_ratio(&v.lhs, &plus)
}

/// Outcome of the Q-polynomiality test for one matrix element.
#[derive(Clone, Debug)]
pub struct QPolyReport {
    pub ratio: QSeries,
    /// Largest Q-degree allowed for the ratio.
    pub degree_bound: i32,
    /// Largest Q-degree that actually occurs.
    pub observed_degree: Option<i32>,
}

impl QPolyReport {
    pub fn passed(&self) -> bool {
        self.observed_degree.map(|d| d <= self.degree_bound).unwrap_or(true)
    }
}

/// Divides the `(λ, μ)` matrix element by the vacuum one and checks that no
/// Q-degree above `|λ| + |μ|` survives.
pub fn q_polynomiality_check(k: &Kernel, lambda: &Partition, mu: &Partition) -> Result<QPolyReport> {
    let vac = matrix_element(k, &Partition::empty(), &Partition::empty());
    let elem = matrix_element(k, lambda, mu);
    let ratio = elem.div(&vac)?;
    Ok(QPolyReport {
        observed_degree: ratio.max_big_q(),
        degree_bound: (lambda.size() + mu.size()) as i32,
        ratio,
    })
}

/// Seed of an exponential series recovered by the plethystic logarithm.
pub fn recovered_seed(f: &VertexFormula) -> Result<SymFunc2> {
    f.body.plethystic_log()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn pp(a: &str, b: &str) -> (Partition, Partition) {
        (p(a), p(b))
    }

    #[test]
    fn one_leg_coefficients() {
        let f = one_leg(3, 2).unwrap();
        let c = f.seed.coeff(&pp("1", ""));
        let inv_y = brk(Monomial::y()).inv().unwrap();
        assert_eq!(c.coeff(1, 0), -&inv_y);
        let k = RatFunc::monomial(Monomial::kappa().inv());
        assert_eq!(c.coeff(2, 0), -(&inv_y * &k));
    }

    #[test]
    fn one_leg_is_two_leg_without_pbar() {
        let a = one_leg(3, 3).unwrap().body.left_slice();
        let b = two_leg(3, 3, Variant::AsPrinted).unwrap().body.left_slice();
        assert!(a.same_as(&b));
    }

    #[test]
    fn two_leg_mixed_coefficients() {
        let f = two_leg(3, 2, Variant::AsPrinted).unwrap();
        let c = f.seed.coeff(&pp("1", "1"));
        let inv = (&brk(Monomial::y()) * &brk(Monomial::xz())).inv().unwrap();
        assert_eq!(c.coeff(1, 0), -&inv);
        let k = RatFunc::monomial(Monomial::kappa());
        let kinv = RatFunc::monomial(Monomial::kappa().inv());
        assert_eq!(c.coeff(2, 0), -(&(&kinv - &k) * &inv));
        assert!("nonsense".parse::<Variant>().is_err());
    }

    #[test]
    fn stab_examples() {
        assert!(stab(&p(""), 2, 0).unwrap().same_as(&SymFunc::one((2, 0), 0, 0)));
        let s1 = stab(&p("1"), 2, 0).unwrap();
        let expect = RatFunc::monomial(Monomial::from_doubled(1, 1, 1))
            .div(&one_minus(Monomial::xz()))
            .unwrap();
        assert_eq!(s1.coeff(&p("1")).coeff(0, 0), expect);
    }

    #[test]
    fn khall_pair_units_and_single_box() {
        let one = SymFunc::one((1, 0), 0, 0);
        assert!(khall_pair(&one, &one).is_one());
        let p1 = SymFunc::power_sum(&p("1"), 1, 0, 0);
        let got = khall_pair(&p1, &p1).coeff(0, 0);
        let expect = &one_minus(Monomial::xz()) * &one_minus(Monomial::y());
        assert_eq!(got, expect);
    }

    #[test]
    fn one_leg_chain_small() {
        for l in ["", "1", "2", "1,1"] {
            let (lhs, rhs) = one_leg_chain(&p(l), 3).unwrap();
            assert!(lhs.same_as(&rhs), "{l}");
        }
    }

    #[test]
    fn derivation_form_agrees() {
        let f = &schur(&p("2"), 2, 1, 0)
            + &SymFunc::power_sum(&p("1"), 2, 1, 0).scale_ratfunc(&RatFunc::monomial(Monomial::kappa()));
        let g = &schur(&p("1,1"), 2, 1, 0)
            + &SymFunc::power_sum(&p("1"), 2, 1, 0).scale_ratfunc(&RatFunc::monomial(Monomial::y()));
        assert!(khall_pair(&f, &g).same_as(&khall_pair_derivation_form(&f, &g)));
    }

    #[test]
    fn gluing_coefficients_and_inverse() {
        let g = gluing(3, 2).unwrap();
        let c = g.seed.coeff(&pp("1", "1"));
        assert!(c.coeff(0, 0) == RatFunc::one());
        let k = RatFunc::monomial(Monomial::kappa());
        let kinv = RatFunc::monomial(Monomial::kappa().inv());
        assert_eq!(c.coeff(1, 0), &kinv - &k);
        let gi = gluing_inv(3, 2).unwrap();
        let id = crate::fock::contract(&g.kernel(), &gi.kernel());
        assert!(id.body.same_as(&Kernel::identity(2, 3, 0).body));
        assert!(matrix_element(&g.kernel(), &p(""), &p("")).is_one());
    }

    #[test]
    fn pairing_trivial_cases() {
        let v = two_leg_pairing_check(&p(""), &p(""), 3, Variant::LemmaForm).unwrap();
        assert!(v.passed());
        let v = two_leg_pairing_check(&p("1"), &p(""), 3, Variant::LemmaForm).unwrap();
        assert!(v.rhs.is_zero());
    }

    #[test]
    fn seed_is_recoverable() {
        let f = two_leg(3, 2, Variant::AsPrinted).unwrap();
        assert!(recovered_seed(&f).unwrap().same_as(&f.seed));
    }
    #[test]
    fn lemma_form_pairing_matches_positive_specialization() {
        for (l, m) in [
            ("", "1"),
            ("", "2"),
            ("1", "1"),
            ("1", "2"),
            ("1", "2,1"),
            ("2", "2"),
            ("1,1", "2,1"),
        ] {
            let (l, m) = (p(l), p(m));
            let (a, b) = (l.size() as i32, m.size() as i32);
            let v = two_leg_pairing_check(&l, &m, 4, Variant::LemmaForm).unwrap();
            let got = two_leg_pairing_diagnostic(&v).unwrap();
            assert_eq!(got.q_shift, a, "{l}|{m}");
            assert_eq!(got.monomial, Monomial::from_doubled(a, 3 * a + b, a), "{l}|{m}");
            assert!(got.coeff.is_one());
        }
    }
}
