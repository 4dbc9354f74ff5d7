use num_rational::BigRational;

use super::SymFunc;
use crate::partitions::{enumerate, mn_character, z_of, Partition};
use crate::scalars::{QSeries, RatFunc};

fn rational(c: BigRational, nq: u32, nbig: u32) -> QSeries {
    QSeries::constant(RatFunc::rational(c), nq, nbig)
}

/// `s_λ = Σ_μ χ^λ(μ) p_μ / z_μ`.
pub fn schur(lambda: &Partition, max_deg: u32, nq: u32, nbig: u32) -> SymFunc {
    let mut out = SymFunc::zero((max_deg, 0), nq, nbig);
    for mu in enumerate(lambda.size()) {
        let chi = mn_character(lambda, &mu).expect("sizes agree");
        if chi != 0 {
            let c = BigRational::from_integer(chi.into()) / z_of(&mu);
            out.add_term(mu, rational(c, nq, nbig));
        }
    }
    out
}

/// `h_n = Σ_{|μ|=n} p_μ / z_μ`.
pub fn complete_h(n: u32, max_deg: u32, nq: u32, nbig: u32) -> SymFunc {
    let mut out = SymFunc::zero((max_deg, 0), nq, nbig);
    for mu in enumerate(n) {
        let c = z_of(&mu).recip();
        out.add_term(mu, rational(c, nq, nbig));
    }
    out
}

/// `det(h_{λ_i − i + j})` by cofactor expansion.
pub fn jacobi_trudi(lambda: &Partition, max_deg: u32, nq: u32, nbig: u32) -> SymFunc {
    let l = lambda.len();
    let entry = |i: usize, j: usize| -> SymFunc {
        let k = lambda.part(i) as i64 - i as i64 + j as i64;
        if k < 0 {
            SymFunc::zero((max_deg, 0), nq, nbig)
        } else {
            complete_h(k as u32, max_deg, nq, nbig)
        }
    };
    let cols: Vec<usize> = (0..l).collect();
    det_rows(0, &cols, &entry, max_deg, nq, nbig)
}

fn det_rows<F: Fn(usize, usize) -> SymFunc>(
    row: usize,
    cols: &[usize],
    entry: &F,
    max_deg: u32,
    nq: u32,
    nbig: u32,
) -> SymFunc {
    if cols.is_empty() {
        return SymFunc::one((max_deg, 0), nq, nbig);
    }
    let mut acc = SymFunc::zero((max_deg, 0), nq, nbig);
    for (idx, &c) in cols.iter().enumerate() {
        let e = entry(row, c);
        if e.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|x| *x != c).collect();
        let minor = det_rows(row + 1, &rest, entry, max_deg, nq, nbig);
        let term = &e * &minor;
        acc = if idx % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

/// Hall inner product `Σ_μ z_μ f_μ g_μ`.
pub fn hall(f: &SymFunc, g: &SymFunc) -> QSeries {
    f.pair(g)
}

/// `s_{λ/η} = Σ_ν ⟨s_λ, s_η s_ν⟩ s_ν`; zero unless `η ⊆ λ`.
pub fn skew_schur(lambda: &Partition, eta: &Partition, max_deg: u32, nq: u32, nbig: u32) -> SymFunc {
    let mut out = SymFunc::zero((max_deg, 0), nq, nbig);
    if !lambda.contains(eta) {
        return out;
    }
    let n = lambda.size();
    let big = n.max(max_deg);
    let s_lambda = schur(lambda, big, nq, nbig);
    let s_eta = schur(eta, big, nq, nbig);
    for nu in enumerate(n - eta.size()) {
        let s_nu = schur(&nu, big, nq, nbig);
        let c = hall(&s_lambda, &(&s_eta * &s_nu));
        if !c.is_zero() {
            let piece = schur(&nu, max_deg, nq, nbig).scale(&c);
            out = &out + &piece;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    fn r(n: i64, d: i64) -> QSeries {
        rational(BigRational::new(n.into(), d.into()), 0, 0)
    }

    #[test]
    fn small_schur_functions() {
        let s1 = schur(&p("1"), 3, 0, 0);
        assert!(s1.same_as(&SymFunc::power_sum(&p("1"), 3, 0, 0)));
        let s11 = schur(&p("1,1"), 3, 0, 0);
        assert!(s11.coeff(&p("1,1")).same_as(&r(1, 2)));
        assert!(s11.coeff(&p("2")).same_as(&r(-1, 2)));
        let s21 = schur(&p("2,1"), 3, 0, 0);
        assert!(s21.coeff(&p("1,1,1")).same_as(&r(1, 3)));
        assert!(s21.coeff(&p("3")).same_as(&r(-1, 3)));
        assert!(s21.coeff(&p("2,1")).is_zero());
    }

    #[test]
    fn power_sum_pairings() {
        let p2 = SymFunc::power_sum(&p("2"), 2, 0, 0);
        let p11 = SymFunc::power_sum(&p("1,1"), 2, 0, 0);
        assert!(hall(&p2, &p2).same_as(&r(2, 1)));
        assert!(hall(&p2, &p11).is_zero());
    }

    #[test]
    fn skew_examples() {
        let l = p("2,1");
        assert!(skew_schur(&l, &Partition::empty(), 3, 0, 0).same_as(&schur(&l, 3, 0, 0)));
        assert!(skew_schur(&l, &l, 3, 0, 0).same_as(&SymFunc::one((3, 0), 0, 0)));
        let s = skew_schur(&l, &p("1"), 3, 0, 0);
        assert!(s.same_as(&SymFunc::power_sum(&p("1,1"), 3, 0, 0)));
        assert!(skew_schur(&p("1"), &p("2"), 3, 0, 0).is_zero());
    }

    #[test]
    fn jacobi_trudi_small() {
        for l in ["2,1", "3", "1,1,1", "2,2"] {
            let l = p(l);
            assert!(jacobi_trudi(&l, 4, 0, 0).same_as(&schur(&l, 4, 0, 0)), "{l}");
        }
    }
}
