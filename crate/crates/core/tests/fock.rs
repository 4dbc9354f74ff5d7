use kvertex::fock::{contract, gamma_minus, gamma_plus, matrix_element, Kernel};
use kvertex::partitions::{enumerate_upto, Partition};
use kvertex::scalars::{Monomial, QSeries, RatFunc};
use kvertex::symfunc::{SymFunc, SymFunc2};
use proptest::prelude::*;

const DEG: u32 = 3;

fn monomial() -> impl Strategy<Value = Monomial> {
    (-2i32..=2, -2i32..=2, -2i32..=2).prop_map(|(a, b, c)| Monomial::from_doubled(a, b, c))
}

fn one() -> Partition {
    Partition::single(1)
}

/// `Exp(a p_1 p̄_1)`.
fn cauchy(a: Monomial) -> Kernel {
    let seed = SymFunc2::term(
        (one(), one()),
        QSeries::constant(RatFunc::monomial(a), 0, 0),
        (DEG, DEG),
    );
    Kernel::new(seed.plethystic_exp().unwrap())
}

/// A kernel with a handful of random entries.
fn kernel() -> impl Strategy<Value = Kernel> {
    let keys = enumerate_upto(2);
    let n = keys.len();
    prop::collection::vec((0..n, 0..n, monomial(), -2i64..=2), 0..5).prop_map(move |ts| {
        let mut body = SymFunc2::zero((2, 2), 0, 0);
        for (i, j, m, c) in ts {
            let v = RatFunc::monomial(m).scale(&num_rational::BigRational::from_integer(c.into()));
            body.add_term((keys[i].clone(), keys[j].clone()), QSeries::constant(v, 0, 0));
        }
        Kernel::new(body)
    })
}

#[test]
fn identity_matrix_elements() {
    let id = Kernel::identity(4, 0, 0);
    for l in enumerate_upto(4) {
        for m in enumerate_upto(4) {
            let want = QSeries::integer((l == m) as i64, 0, 0);
            assert!(matrix_element(&id, &l, &m).same_as(&want), "{l} {m}");
        }
    }
}

#[test]
fn identity_is_a_unit_for_cauchy_kernels() {
    let id = Kernel::identity(DEG, 0, 0);
    assert!(cauchy(Monomial::ONE).body.same_as(&id.body));
}

#[test]
fn applying_a_kernel_is_contraction_with_a_state() {
    let k = cauchy(Monomial::y());
    let state = SymFunc::power_sum(&Partition::new(vec![2, 1]), DEG, 0, 0);
    let via_apply = k.apply(&state);
    let via_contract = contract(&k, &Kernel::new(state.into_left(0))).body.left_slice();
    assert!(via_apply.same_as(&via_contract));
}

#[test]
fn gamma_operators_commute_up_to_a_scalar() {
    // ⟨∅| Γ_−(z) Γ_+(w) |∅⟩ = 1/(1 − zw).
    let nq = 3;
    let z = QSeries::monomial(1, Monomial::y(), nq, 0);
    let w = QSeries::monomial(0, Monomial::xz(), nq, 0);
    let vac = SymFunc::one((nq, 0), nq, 0);
    let got = gamma_minus(&z, &gamma_plus(&w, &vac)).constant();
    let want = QSeries::geometric(1, Monomial::y().mul(Monomial::xz()), nq, 0);
    assert!(got.same_as(&want), "{got}");
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn cauchy_kernels_compose_multiplicatively(a in monomial(), b in monomial()) {
        let got = contract(&cauchy(a), &cauchy(b));
        prop_assert!(got.body.same_as(&cauchy(a.mul(b)).body));
    }

    #[test]
    fn contraction_is_associative(k1 in kernel(), k2 in kernel(), k3 in kernel()) {
        let lhs = contract(&contract(&k1, &k2), &k3);
        let rhs = contract(&k1, &contract(&k2, &k3));
        prop_assert!(lhs.body.same_as(&rhs.body));
    }

    #[test]
    fn identity_is_neutral(k in kernel()) {
        let id = Kernel::identity(2, 0, 0);
        prop_assert!(contract(&id, &k).body.same_as(&k.body));
        prop_assert!(contract(&k, &id).body.same_as(&k.body));
    }
}
