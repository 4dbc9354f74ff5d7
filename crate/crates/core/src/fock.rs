//! Vertex operators on the Fock space of symmetric functions and kernels.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::par;
use crate::partitions::{z_of, Partition};
use crate::scalars::{Monomial, QSeries, RatFunc};
use crate::symfunc::{schur, skew_schur, SymFunc, SymFunc2};

/// Operator given by a two-alphabet function: `p` is outgoing, `p̄` incoming.
#[derive(Clone, Debug)]
pub struct Kernel {
    pub body: SymFunc2,
}

impl Kernel {
    pub fn new(body: SymFunc2) -> Self {
        Kernel { body }
    }

    /// The Cauchy kernel `Exp(p_1 p̄_1)`, the identity for contraction.
    pub fn identity(max_deg: u32, nq: u32, nbig: u32) -> Self {
        let mut body = SymFunc2::zero((max_deg, max_deg), nq, nbig);
        for n in 0..=max_deg {
            for mu in crate::partitions::enumerate(n) {
                let c = QSeries::constant(RatFunc::rational(z_of(&mu).recip()), nq, nbig);
                body.add_term((mu.clone(), mu), c);
            }
        }
        Kernel { body }
    }

    /// `f ↦ ⟨body(p, ·), f⟩` in the incoming alphabet.
    pub fn apply(&self, f: &SymFunc) -> SymFunc {
        self.body.pair_right(f)
    }
}

/// `(K1 ∘ K2)(λ, ν) = Σ_μ z_μ K1(λ, μ) K2(μ, ν)`.
pub fn contract(k1: &Kernel, k2: &Kernel) -> Kernel {
    Kernel::new(contract_bodies(&k1.body, &k2.body))
}

/// Entries sharing one middle partition, keyed by the outer partition.
type Column<'a> = Vec<(&'a Partition, &'a QSeries)>;

pub(crate) fn contract_bodies(a: &SymFunc2, b: &SymFunc2) -> SymFunc2 {
    let mut left: BTreeMap<&Partition, Column> = BTreeMap::new();
    for ((l, m), v) in a.terms() {
        left.entry(m).or_default().push((l, v));
    }
    let mut right: BTreeMap<&Partition, Column> = BTreeMap::new();
    for ((m, r), v) in b.terms() {
        right.entry(m).or_default().push((r, v));
    }
    let middles: Vec<(&Partition, &Column, &Column)> = left
        .iter()
        .filter_map(|(m, ls)| right.get(m).map(|rs| (*m, ls, rs)))
        .collect();
    let bounds = (a.bounds().0, b.bounds().1);
    let nq = a.nq().min(b.nq());
    let nbig = a.nbig().min(b.nbig());
    let blocks = par::map(&middles, |(m, ls, rs)| {
        let z = z_of(m);
        let mut block = SymFunc2::zero(bounds, nq, nbig);
        for (l, v) in ls.iter() {
            let vz = v.scale_rational(&z);
            for (r, w) in rs.iter() {
                block.add_term(((*l).clone(), (*r).clone()), &vz * w);
            }
        }
        block
    });
    let mut out = SymFunc2::zero(bounds, nq, nbig);
    for block in blocks {
        out = &out + &block;
    }
    out
}

/// `⟨s_λ ⊗ s_μ, body⟩`.
pub fn matrix_element(k: &Kernel, lambda: &Partition, mu: &Partition) -> QSeries {
    let (nq, nbig) = (k.body.nq(), k.body.nbig());
    let s = SymFunc2::tensor(&schur(lambda, lambda.size(), nq, nbig), &schur(mu, mu.size(), nq, nbig));
    k.body.pair(&s)
}

/// `z^n` for a series `z`.
fn power(z: &QSeries, n: u32) -> QSeries {
    let mut acc = QSeries::one(z.nq(), z.nbig());
    for _ in 0..n {
        acc = &acc * z;
    }
    acc
}

/// Multiplies by `exp(Σ_n z^n p_n / n)`.
pub fn gamma_plus(z: &QSeries, state: &SymFunc) -> SymFunc {
    let bound = state.bounds().0;
    let mut seed = SymFunc::zero((bound, 0), state.nq(), state.nbig());
    for n in 1..=bound {
        let c = power(z, n).scale_rational(&BigRational::new(1.into(), (n as i64).into()));
        seed.add_term(Partition::single(n), c);
    }
    let e = seed.exp_plain().expect("power sums have positive degree");
    &e * state
}

/// Applies `exp(Σ_n z^n ∂/∂p_n)`, i.e. the shift `p_n ↦ p_n + z^n`.
pub fn gamma_minus(z: &QSeries, state: &SymFunc) -> SymFunc {
    let bound = state.bounds().0;
    let powers: Vec<QSeries> = (0..=bound).map(|n| power(z, n)).collect();
    let mut out = SymFunc::zero((bound, 0), state.nq(), state.nbig());
    for (mu, c) in state.terms() {
        // For each part size with multiplicity m, choose how many copies to replace by z^i.
        let mults = mu.multiplicities();
        let mut partial: Vec<(Vec<u32>, QSeries)> = vec![(Vec::new(), c.clone())];
        for (part, m) in mults {
            let mut next = Vec::new();
            for (kept, coeff) in &partial {
                for taken in 0..=m {
                    let binom = binomial(m, taken);
                    let mut cf = coeff.scale_rational(&BigRational::from_integer(binom));
                    for _ in 0..taken {
                        cf = &cf * &powers[part as usize];
                    }
                    if cf.is_zero() {
                        continue;
                    }
                    let mut parts = kept.clone();
                    parts.extend(std::iter::repeat_n(part, (m - taken) as usize));
                    next.push((parts, cf));
                }
            }
            partial = next;
        }
        for (parts, cf) in partial {
            out.add_term(Partition::new(parts), cf);
        }
    }
    out
}

fn binomial(n: u32, k: u32) -> BigInt {
    let mut acc = BigInt::from(1);
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `q^a κ^e` as a series.
fn q_kappa(a: i32, e: i32, nq: u32) -> QSeries {
    QSeries::monomial(a, Monomial::kappa().pow(e), nq, 0)
}

/// `p_k(1, t, t², …) = 1/(1 − t^k)` with `t = q/κ`.
fn principal_from_one(k: u32, nq: u32) -> QSeries {
    QSeries::geometric(k as i32, Monomial::kappa().pow(-(k as i32)), nq, 0)
}

/// `p_k(t, t², …) = t^k/(1 − t^k)` with `t = qκ`.
fn principal_from_t(k: u32, nq: u32) -> QSeries {
    let kk = k as i32;
    &q_kappa(kk, kk, nq) * &QSeries::geometric(kk, Monomial::kappa().pow(kk), nq, 0)
}

/// `Σ_η s_{λ/η}(1, q/κ, …) · s_{μ/η}(qκ, q²κ², …)`, without the prefactor.
pub fn refined_p(lambda: &Partition, mu: &Partition, nq: u32) -> QSeries {
    let mut acc = QSeries::zero(nq, 0);
    let top = lambda.size().min(mu.size());
    for n in 0..=top {
        for eta in crate::partitions::enumerate(n) {
            if !lambda.contains(&eta) || !mu.contains(&eta) {
                continue;
            }
            let left = skew_schur(lambda, &eta, lambda.size(), nq, 0).plethys_eval(|k| principal_from_one(k, nq));
            let right = skew_schur(mu, &eta, mu.size(), nq, 0).plethys_eval(|k| principal_from_t(k, nq));
            acc = &acc + &(&left * &right);
        }
    }
    acc
}

/// The same quantity as a vacuum-normalized product of `Γ±` operators:
/// `⟨λ| Γ_+(1) Γ_+(q/κ) ⋯ Γ_−(qκ) Γ_−(q²κ²) ⋯ |μ⟩`.
pub fn refined_p_gamma(lambda: &Partition, mu: &Partition, nq: u32) -> QSeries {
    let deg = lambda.size().max(mu.size());
    let mut state = schur(mu, deg, nq, 0);
    for j in 1..=nq as i32 {
        state = gamma_minus(&q_kappa(j, j, nq), &state);
    }
    let mut state = state.truncate((lambda.size(), 0), nq, 0);
    for j in 0..=nq as i32 {
        state = gamma_plus(&q_kappa(j, -j, nq), &state);
    }
    state.pair(&schur(lambda, lambda.size(), nq, 0))
}

/// The operator product in the order it is displayed,
/// `⟨λ| ⋯ Γ_−(q/κ) Γ_−(1) Γ_+(qκ) Γ_+(q²κ²) ⋯ |μ⟩`.
///
/// Commuting the factors past each other gives
/// `Exp(qκ / ((1 − q/κ)(1 − qκ))) · refined_p(μ, λ)`.
pub fn refined_p_gamma_displayed_order(lambda: &Partition, mu: &Partition, nq: u32) -> QSeries {
    let deg = mu.size() + nq;
    let mut state = schur(mu, deg, nq, 0);
    for j in 1..=nq as i32 {
        state = gamma_plus(&q_kappa(j, j, nq), &state);
    }
    for j in 0..=nq as i32 {
        state = gamma_minus(&q_kappa(j, -j, nq), &state);
    }
    state.pair(&schur(lambda, lambda.size(), nq, 0))
}

/// The commutation factor relating the two operator orders.
pub fn gamma_commutation_factor(nq: u32) -> QSeries {
    let seed = &(&principal_from_one(1, nq) * &q_kappa(1, 1, nq)) * &QSeries::geometric(1, Monomial::kappa(), nq, 0);
    seed.scalar_exp().expect("seed has positive q-order")
}

/// Per-box prefactor over the intersection of the two cylinders:
/// a box `(i, j, k)` with `j < λ_k` and `i < μ_k` contributes `−κ` when
/// `i < j` and `−κ^{−1}` otherwise. Returned as `(sign, power of κ)`.
pub fn refined_prefactor(lambda: &Partition, mu: &Partition) -> (i32, i32) {
    let mut sign = 1;
    let mut power = 0;
    let rows = lambda.len().min(mu.len());
    for k in 0..rows {
        for j in 0..lambda.part(k) as i32 {
            for i in 0..mu.part(k) as i32 {
                sign = -sign;
                power += if i - j < 0 { 1 } else { -1 };
            }
        }
    }
    (sign, power)
}

/// The prefactor as a scalar.
pub fn refined_prefactor_scalar(lambda: &Partition, mu: &Partition) -> RatFunc {
    let (sign, power) = refined_prefactor(lambda, mu);
    RatFunc::monomial(Monomial::kappa().pow(power)).scale(&BigRational::from_integer(sign.into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfunc::hall;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn one_q(nq: u32) -> QSeries {
        QSeries::monomial(1, Monomial::ONE, nq, 0)
    }

    #[test]
    fn gamma_plus_on_vacuum_gives_complete_functions() {
        let z = one_q(4);
        let v = gamma_plus(&z, &SymFunc::one((4, 0), 4, 0));
        for n in 0..=4u32 {
            let c = hall(&schur(&Partition::single(n), 4, 4, 0), &v);
            assert!(c.same_as(&QSeries::monomial(n as i32, Monomial::ONE, 4, 0)));
        }
        let trunc = gamma_plus(&one_q(0), &SymFunc::one((3, 0), 0, 0));
        assert!(trunc.same_as(&SymFunc::one((3, 0), 0, 0)));
    }

    #[test]
    fn gamma_minus_examples() {
        let one = QSeries::one(2, 0);
        let p1 = SymFunc::power_sum(&p("1"), 2, 2, 0);
        let expect = &p1 + &SymFunc::one((2, 0), 2, 0);
        assert!(gamma_minus(&one, &p1).same_as(&expect));
        let vac = SymFunc::one((2, 0), 2, 0);
        assert!(gamma_minus(&one_q(2), &vac).same_as(&vac));
    }

    #[test]
    fn skew_branching_under_gamma_minus() {
        let z = one_q(3);
        let l = p("2,1");
        let state = gamma_minus(&z, &schur(&l, 3, 3, 0));
        for eta in [p(""), p("1"), p("2"), p("1,1"), p("2,1")] {
            let got = hall(&schur(&eta, 3, 3, 0), &state);
            let expect =
                skew_schur(&l, &eta, 3, 3, 0).plethys_eval(|k| QSeries::monomial(k as i32, Monomial::ONE, 3, 0));
            assert!(got.same_as(&expect), "{eta}");
        }
    }

    #[test]
    fn refined_small_cases() {
        let nq = 3;
        assert!(refined_p(&p(""), &p(""), nq).is_one());
        assert!(refined_p(&p("1"), &p(""), nq).same_as(&principal_from_one(1, nq)));
        assert!(refined_p(&p(""), &p("1"), nq).same_as(&principal_from_t(1, nq)));
        let both = &(&principal_from_one(1, nq) * &principal_from_t(1, nq)) + &QSeries::one(nq, 0);
        assert!(refined_p(&p("1"), &p("1"), nq).same_as(&both));
        assert!(refined_p_gamma(&p("1"), &p("1"), nq).same_as(&both));
    }

    #[test]
    fn displayed_order_differs_by_commutation_factor() {
        let nq = 3;
        for (l, m) in [("1", ""), ("", "1"), ("1", "1"), ("2", "1")] {
            let (l, m) = (p(l), p(m));
            let lhs = refined_p_gamma_displayed_order(&l, &m, nq);
            let rhs = &gamma_commutation_factor(nq) * &refined_p(&m, &l, nq);
            assert!(lhs.same_as(&rhs), "{l} {m}");
        }
    }

    #[test]
    fn prefactor_counts_boxes() {
        assert_eq!(refined_prefactor(&p(""), &p("2")), (1, 0));
        assert_eq!(refined_prefactor(&p("1"), &p("1")), (-1, -1));
        assert_eq!(refined_prefactor(&p("2"), &p("1")), (1, 0));
    }

    #[test]
    fn cauchy_is_identity() {
        let id = Kernel::identity(3, 1, 0);
        let seed =
            SymFunc2::power_sum2(&p("1"), &p("1"), (3, 3), 1, 0).scale(&QSeries::monomial(1, Monomial::y(), 1, 0));
        let k = Kernel::new(
            (&seed + &SymFunc2::power_sum2(&p("1"), &p(""), (3, 3), 1, 0))
                .plethystic_exp()
                .unwrap(),
        );
        assert!(contract(&id, &k).body.same_as(&k.body));
        assert!(contract(&k, &id).body.same_as(&k.body));
        for (l, m) in [("1", "1"), ("2", "1,1"), ("", "")] {
            let e = matrix_element(&id, &p(l), &p(m));
            assert_eq!(e.is_one(), l == m);
            if l != m {
                assert!(e.is_zero());
            }
        }
    }
}
