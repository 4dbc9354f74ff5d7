use kvertex::partitions::{enumerate, factorial, mn_character, z_of, Cell, Partition};
use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u32..6, 0..6).prop_map(Partition::new)
}

/// Standard Young tableaux counted by removing corners.
fn count_tableaux(p: &Partition) -> BigInt {
    if p.is_empty() {
        return BigInt::from(1);
    }
    let parts = p.parts();
    let mut total = BigInt::from(0);
    for i in 0..parts.len() {
        if i + 1 == parts.len() || parts[i + 1] < parts[i] {
            let mut smaller = parts.to_vec();
            smaller[i] -= 1;
            total += count_tableaux(&Partition::new(smaller));
        }
    }
    total
}

#[test]
fn partition_counts() {
    let expect = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42];
    for (n, e) in expect.iter().enumerate() {
        assert_eq!(enumerate(n as u32).len(), *e, "n = {n}");
    }
}

#[test]
fn dimensions_square_sum_to_factorial() {
    for n in 0..=8 {
        let total: BigInt = enumerate(n).iter().map(|l| l.dimension() * l.dimension()).sum();
        assert_eq!(total, factorial(n));
    }
}

#[test]
fn characters_are_orthogonal() {
    for n in 1..=6 {
        let ps = enumerate(n);
        for mu in &ps {
            for nu in &ps {
                let s: i64 = ps
                    .iter()
                    .map(|l| mn_character(l, mu).unwrap() * mn_character(l, nu).unwrap())
                    .sum();
                let want = if mu == nu {
                    z_of(mu)
                } else {
                    BigRational::from_integer(0.into())
                };
                assert_eq!(BigRational::from_integer(s.into()), want, "{mu} {nu}");
            }
        }
    }
}

#[test]
fn class_sizes_sum_to_one() {
    for n in 0..=8 {
        let s: BigRational = enumerate(n).iter().map(|m| z_of(m).recip()).sum();
        assert_eq!(s, BigRational::from_integer(1.into()));
    }
}

#[test]
fn sizes_mismatch_is_an_error() {
    assert!(mn_character(&Partition::single(2), &Partition::single(3)).is_err());
    assert!(Partition::new(vec![2, 1]).arm(Cell::new(1, 1)).is_err());
}

proptest! {
    #[test]
    fn conjugation_is_an_involution(p in partition()) {
        prop_assert_eq!(p.conjugate().conjugate(), p.clone());
        prop_assert_eq!(p.conjugate().size(), p.size());
        prop_assert_eq!(p.conjugate().len() as u32, p.part(0));
    }

    #[test]
    fn hook_formula_counts_tableaux(p in partition()) {
        prop_assume!(p.size() <= 12);
        prop_assert_eq!(p.dimension(), count_tableaux(&p));
        let trivial = Partition::new(vec![1; p.size() as usize]);
        prop_assert_eq!(BigInt::from(mn_character(&p, &trivial).unwrap()), p.dimension());
    }

    #[test]
    fn arms_and_legs_match_the_conjugate(p in partition()) {
        let conj = p.conjugate();
        for c in p.cells() {
            let flipped = Cell::new(c.col, c.row);
            prop_assert_eq!(p.arm(c).unwrap(), conj.leg(flipped).unwrap());
            prop_assert_eq!(p.leg(c).unwrap(), conj.arm(flipped).unwrap());
        }
    }

    #[test]
    fn text_round_trip(p in partition()) {
        prop_assert_eq!(p.to_string().parse::<Partition>().unwrap(), p);
    }
}
