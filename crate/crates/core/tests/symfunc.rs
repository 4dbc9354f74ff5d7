use kvertex::partitions::{enumerate, enumerate_upto, Partition};
use kvertex::scalars::{Monomial, QSeries, RatFunc};
use kvertex::symfunc::json::{from_json, to_json, SymFuncJson};
use kvertex::symfunc::{complete_h, hall, jacobi_trudi, schur, SymFunc};
use num_rational::BigRational;
use proptest::prelude::*;

const DEG: u32 = 3;
const NQ: u32 = 2;

fn monomial() -> impl Strategy<Value = Monomial> {
    (-2i32..=2, -2i32..=2, -2i32..=2).prop_map(|(a, b, c)| Monomial::from_doubled(2 * a, 2 * b, 2 * c))
}

/// Random function with positive grade in every term.
fn symfunc() -> impl Strategy<Value = SymFunc> {
    let keys = enumerate_upto(DEG);
    let n = keys.len();
    prop::collection::vec((0..n, 0i32..=NQ as i32, monomial(), -2i64..=2), 0..4).prop_map(move |ts| {
        let mut f = SymFunc::zero((DEG, 0), NQ, 0);
        for (k, a, m, c) in ts {
            if keys[k].is_empty() && a == 0 {
                continue;
            }
            let coeff = RatFunc::monomial(m).scale(&BigRational::from_integer(c.into()));
            f.add_term(keys[k].clone(), QSeries::term(a, 0, coeff, NQ, 0));
        }
        f
    })
}

fn kron(a: &Partition, b: &Partition) -> QSeries {
    QSeries::integer((a == b) as i64, 0, 0)
}

#[test]
fn schur_functions_are_orthonormal() {
    for n in 0..=5 {
        let ps = enumerate(n);
        for a in &ps {
            for b in &ps {
                let got = hall(&schur(a, n, 0, 0), &schur(b, n, 0, 0));
                assert!(got.same_as(&kron(a, b)), "<s_{a}, s_{b}> = {got}");
            }
        }
    }
}

#[test]
fn jacobi_trudi_agrees_with_characters() {
    for lambda in enumerate_upto(5) {
        assert!(
            jacobi_trudi(&lambda, 5, 0, 0).same_as(&schur(&lambda, 5, 0, 0)),
            "{lambda}"
        );
    }
}

#[test]
fn pieri_rule() {
    let h1 = complete_h(1, 5, 0, 0);
    for lambda in enumerate_upto(4) {
        let lhs = &h1 * &schur(&lambda, 5, 0, 0);
        let mut rhs = SymFunc::zero((5, 0), 0, 0);
        for mu in enumerate(lambda.size() + 1) {
            if mu.contains(&lambda) {
                rhs = &rhs + &schur(&mu, 5, 0, 0);
            }
        }
        assert!(lhs.same_as(&rhs), "{lambda}");
    }
}

#[test]
fn exponential_of_a_weighted_power_sum() {
    // Exp(t p_1) = Σ_n t^n h_n.
    let t = Monomial::from_doubled(2, -2, 0);
    let seed = SymFunc::power_sum(&Partition::single(1), 5, 0, 0).scale_ratfunc(&RatFunc::monomial(t));
    let mut expect = SymFunc::zero((5, 0), 0, 0);
    for n in 0..=5u32 {
        expect = &expect + &complete_h(n, 5, 0, 0).scale_ratfunc(&RatFunc::monomial(t.pow(n as i32)));
    }
    let got = seed.plethystic_exp().unwrap();
    assert!(got.same_as(&expect));
    assert!(got.plethystic_log().unwrap().same_as(&seed));
}

#[test]
fn constant_seed_does_not_converge() {
    assert!(SymFunc::one((2, 0), 1, 0).plethystic_exp().is_err());
}

#[test]
fn dimension_from_pairing_with_p1_power() {
    for lambda in enumerate_upto(5) {
        let n = lambda.size();
        let p1n = SymFunc::power_sum(&Partition::new(vec![1; n as usize]), 5, 0, 0);
        let got = hall(&schur(&lambda, 5, 0, 0), &p1n);
        let want = QSeries::constant(RatFunc::rational(BigRational::from_integer(lambda.dimension())), 0, 0);
        assert!(got.same_as(&want), "{lambda}");
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn log_inverts_exp(f in symfunc()) {
        let e = f.plethystic_exp().unwrap();
        prop_assert!(e.plethystic_log().unwrap().same_as(&f));
    }

    #[test]
    fn exp_turns_sums_into_products(f in symfunc(), g in symfunc()) {
        let lhs = (&f + &g).plethystic_exp().unwrap();
        let rhs = &f.plethystic_exp().unwrap() * &g.plethystic_exp().unwrap();
        prop_assert!(lhs.same_as(&rhs));
    }

    #[test]
    fn hall_pairing_is_symmetric_and_bilinear(f in symfunc(), g in symfunc(), h in symfunc()) {
        prop_assert!(hall(&f, &g).same_as(&hall(&g, &f)));
        prop_assert!(hall(&(&f + &g), &h).same_as(&(&hall(&f, &h) + &hall(&g, &h))));
    }

    #[test]
    fn json_round_trip(f in symfunc()) {
        let text = serde_json::to_string(&to_json(&f)).unwrap();
        let back: SymFuncJson = serde_json::from_str(&text).unwrap();
        prop_assert!(from_json(&back).unwrap().same_as(&f));
    }
}
