//! Symmetric functions in one or two power-sum alphabets with series coefficients.

mod plethysm;
mod schur;

use std::collections::BTreeMap;
use std::fmt;
use std::hash::Hash;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;

use crate::par;
use crate::partitions::{z_of, Partition};
use crate::scalars::{QSeries, RatFunc};

pub use plethysm::{exp_hhd_check, HhdReport};
pub use schur::{complete_h, hall, jacobi_trudi, schur, skew_schur};

/// Index of a power-sum monomial: one partition, or a pair for two alphabets.
pub trait Basis: Clone + Ord + Hash + fmt::Debug + Send + Sync {
    fn unit() -> Self;
    fn times(&self, other: &Self) -> Self;
    /// Degrees in the `p` and `p̄` alphabets.
    fn degrees(&self) -> (u32, u32);
    /// Image under `p_k ↦ p_{kn}`.
    fn scaled(&self, n: u32) -> Self;
    /// Product of `z` constants.
    fn z(&self) -> BigRational;
    /// Text label of the power-sum monomial.
    fn label(&self) -> String;
}

impl Basis for Partition {
    fn unit() -> Self {
        Partition::empty()
    }
    fn times(&self, other: &Self) -> Self {
        self.union(other)
    }
    fn degrees(&self) -> (u32, u32) {
        (self.size(), 0)
    }
    fn scaled(&self, n: u32) -> Self {
        Partition::scaled(self, n)
    }
    fn z(&self) -> BigRational {
        z_of(self)
    }
    fn label(&self) -> String {
        format!("p[{self}]")
    }
}

impl Basis for (Partition, Partition) {
    fn unit() -> Self {
        (Partition::empty(), Partition::empty())
    }
    fn times(&self, other: &Self) -> Self {
        (self.0.union(&other.0), self.1.union(&other.1))
    }
    fn degrees(&self) -> (u32, u32) {
        (self.0.size(), self.1.size())
    }
    fn scaled(&self, n: u32) -> Self {
        (self.0.scaled(n), self.1.scaled(n))
    }
    fn z(&self) -> BigRational {
        z_of(&self.0) * z_of(&self.1)
    }
    fn label(&self) -> String {
        format!("p[{}] pbar[{}]", self.0, self.1)
    }
}

/// Truncated symmetric function: a finite sum of `coeff · p_key`.
///
/// Degrees above `bounds` and series orders above `(nq, nbig)` are dropped.
#[derive(Clone, Debug)]
pub struct SymPoly<K: Basis> {
    bounds: (u32, u32),
    nq: u32,
    nbig: u32,
    terms: BTreeMap<K, QSeries>,
}

/// One alphabet `p`.
pub type SymFunc = SymPoly<Partition>;
/// Two alphabets `p` (left) and `p̄` (right); doubles as an operator kernel.
pub type SymFunc2 = SymPoly<(Partition, Partition)>;

/// Orders shared by every coefficient of a symmetric function.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Orders {
    pub deg: (u32, u32),
    pub nq: u32,
    pub nbig: u32,
}

impl<K: Basis> SymPoly<K> {
    pub fn zero(bounds: (u32, u32), nq: u32, nbig: u32) -> Self {
        SymPoly {
            bounds,
            nq,
            nbig,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(bounds: (u32, u32), nq: u32, nbig: u32) -> Self {
        let mut s = Self::zero(bounds, nq, nbig);
        s.add_term(K::unit(), QSeries::one(nq, nbig));
        s
    }

    pub fn with_orders(o: Orders) -> Self {
        Self::zero(o.deg, o.nq, o.nbig)
    }

    pub fn orders(&self) -> Orders {
        Orders {
            deg: self.bounds,
            nq: self.nq,
            nbig: self.nbig,
        }
    }

    pub fn bounds(&self) -> (u32, u32) {
        self.bounds
    }

    pub fn nq(&self) -> u32 {
        self.nq
    }

    pub fn nbig(&self) -> u32 {
        self.nbig
    }

    pub fn term(key: K, c: QSeries, bounds: (u32, u32)) -> Self {
        let (nq, nbig) = c.orders();
        let mut s = Self::zero(bounds, nq, nbig);
        s.add_term(key, c);
        s
    }

    fn in_bounds(&self, key: &K) -> bool {
        let (a, b) = key.degrees();
        a <= self.bounds.0 && b <= self.bounds.1
    }

    pub fn add_term(&mut self, key: K, c: QSeries) {
        if !self.in_bounds(&key) {
            return;
        }
        let c = c.truncate(self.nq, self.nbig);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(key) {
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

    pub fn coeff(&self, key: &K) -> QSeries {
        self.terms
            .get(key)
            .cloned()
            .unwrap_or_else(|| QSeries::zero(self.nq, self.nbig))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&K, &QSeries)> {
        self.terms.iter()
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

    /// Restricts to smaller orders.
    pub fn truncate(&self, bounds: (u32, u32), nq: u32, nbig: u32) -> Self {
        let mut out = Self::zero(
            (bounds.0.min(self.bounds.0), bounds.1.min(self.bounds.1)),
            nq.min(self.nq),
            nbig.min(self.nbig),
        );
        for (k, v) in &self.terms {
            out.add_term(k.clone(), v.clone());
        }
        out
    }

    /// Declares larger series orders; sound only when coefficients are exact there.
    pub fn relabel_orders(mut self, nq: u32, nbig: u32) -> Self {
        self.nq = nq;
        self.nbig = nbig;
        self.terms = std::mem::take(&mut self.terms)
            .into_iter()
            .map(|(k, v)| (k, v.with_orders(nq, nbig)))
            .filter(|(_, v)| !v.is_zero())
            .collect();
        self
    }

    pub fn map_coeffs<F: Fn(&K, &QSeries) -> QSeries + Sync + Send>(&self, f: F) -> Self {
        let items: Vec<(&K, &QSeries)> = self.terms.iter().collect();
        let mapped = par::map(&items, |(k, v)| f(k, v));
        let mut out = Self::zero(self.bounds, self.nq, self.nbig);
        for ((k, _), v) in items.into_iter().zip(mapped) {
            out.add_term(k.clone(), v);
        }
        out
    }

    pub fn scale(&self, c: &QSeries) -> Self {
        let mut out = self.map_coeffs(|_, v| v * c);
        out.nq = out.nq.min(c.nq());
        out.nbig = out.nbig.min(c.nbig());
        out
    }

    pub fn scale_ratfunc(&self, c: &RatFunc) -> Self {
        self.map_coeffs(|_, v| v.scale(c))
    }

    /// Cancels exact factors in every coefficient.
    pub fn reduced(&self) -> Self {
        self.map_coeffs(|_, v| v.reduced())
    }

    /// Conjugates the torus variables in every coefficient.
    pub fn bar(&self) -> Self {
        self.map_coeffs(|_, v| v.bar())
    }

    /// Adams operation on power sums and scalars together.
    pub fn adams(&self, n: u32) -> crate::Result<Self> {
        if n == 0 {
            return Err(crate::Error::ZeroAdams);
        }
        let mut out = Self::zero(self.bounds, self.nq, self.nbig);
        for (k, v) in &self.terms {
            let nk = k.scaled(n);
            if out.in_bounds(&nk) {
                let nv = v.adams(n)?;
                out.add_term(nk, nv);
            }
        }
        Ok(out)
    }

    /// Exact equality of every coefficient.
    pub fn same_as(&self, other: &Self) -> bool {
        self.terms.len() == other.terms.len()
            && self
                .terms
                .iter()
                .zip(other.terms.iter())
                .all(|((k1, v1), (k2, v2))| k1 == k2 && v1.coeffs_eq(v2))
    }

    /// First key where the two functions differ, for diagnostics.
    pub fn first_difference(&self, other: &Self) -> Option<(K, QSeries, QSeries)> {
        let mut keys: Vec<&K> = self.terms.keys().chain(other.terms.keys()).collect();
        keys.sort();
        keys.dedup();
        for k in keys {
            let a = self.coeff(k);
            let b = other.coeff(k);
            if !a.coeffs_eq(&b) {
                return Some((k.clone(), a, b));
            }
        }
        None
    }

    /// Flattened `(key, q, Q, coeff)` list in canonical order.
    pub fn flat_terms(&self) -> Vec<(K, i32, i32, RatFunc)> {
        let mut out = Vec::new();
        for (k, v) in &self.terms {
            for (a, b, c) in v.terms() {
                out.push((k.clone(), a, b, c.clone()));
            }
        }
        out
    }

    pub(crate) fn from_flat(bounds: (u32, u32), nq: u32, nbig: u32, flat: Vec<(K, i32, i32, RatFunc)>) -> Self {
        let mut grouped: BTreeMap<K, QSeries> = BTreeMap::new();
        for (k, a, b, c) in flat {
            grouped
                .entry(k)
                .or_insert_with(|| QSeries::zero(nq, nbig))
                .add_term(a, b, c);
        }
        let mut out = Self::zero(bounds, nq, nbig);
        for (k, v) in grouped {
            out.add_term(k, v);
        }
        out
    }

    /// `Σ z_key · f_key · g_key`, the Hall pairing in every alphabet at once.
    pub fn pair(&self, other: &Self) -> QSeries {
        let nq = self.nq.min(other.nq);
        let nbig = self.nbig.min(other.nbig);
        let common: Vec<(&K, &QSeries, &QSeries)> = self
            .terms
            .iter()
            .filter_map(|(k, v)| other.terms.get(k).map(|w| (k, v, w)))
            .collect();
        let parts = par::map(&common, |(k, v, w)| (*v * *w).scale_rational(&k.z()));
        let mut acc = QSeries::zero(nq, nbig);
        for p in parts {
            acc = &acc + &p;
        }
        acc
    }
}

impl SymFunc {
    /// `p_μ` with unit coefficient.
    pub fn power_sum(mu: &Partition, max_deg: u32, nq: u32, nbig: u32) -> Self {
        SymPoly::term(mu.clone(), QSeries::one(nq, nbig), (max_deg, 0))
    }

    /// Places this function in the `p` alphabet of a two-alphabet function.
    pub fn into_left(&self, bound_right: u32) -> SymFunc2 {
        let mut out = SymFunc2::zero((self.bounds.0, bound_right), self.nq, self.nbig);
        for (k, v) in &self.terms {
            out.add_term((k.clone(), Partition::empty()), v.clone());
        }
        out
    }

    /// Places this function in the `p̄` alphabet of a two-alphabet function.
    pub fn into_right(&self, bound_left: u32) -> SymFunc2 {
        let mut out = SymFunc2::zero((bound_left, self.bounds.0), self.nq, self.nbig);
        for (k, v) in &self.terms {
            out.add_term((Partition::empty(), k.clone()), v.clone());
        }
        out
    }

    /// Constant term.
    pub fn constant(&self) -> QSeries {
        self.coeff(&Partition::empty())
    }

    /// Multiplies `p_μ` by `∏ mult(μ_i)`.
    pub fn plethys_mul<F: Fn(u32) -> QSeries + Sync + Send>(&self, mult: F) -> Self {
        self.map_coeffs(|k, v| {
            let mut c = v.clone();
            for part in k.parts() {
                c = &c * &mult(*part);
            }
            c
        })
    }

    /// Substitutes `p_k ↦ value(k)`, returning a scalar series.
    pub fn plethys_eval<F: Fn(u32) -> QSeries + Sync + Send>(&self, value: F) -> QSeries {
        let items: Vec<(&Partition, &QSeries)> = self.terms.iter().collect();
        let parts = par::map(&items, |(k, v)| {
            let mut c = (*v).clone();
            for part in k.parts() {
                c = &c * &value(*part);
            }
            c
        });
        let mut acc = QSeries::zero(self.nq, self.nbig);
        for p in parts {
            acc = &acc + &p;
        }
        acc
    }

    /// `∂/∂p_n`.
    pub fn diff_power(&self, n: u32) -> Self {
        let mut out = Self::zero(self.bounds, self.nq, self.nbig);
        for (k, v) in &self.terms {
            let m = k.parts().iter().filter(|p| **p == n).count();
            if m == 0 {
                continue;
            }
            let mut parts = k.parts().to_vec();
            let pos = parts.iter().position(|p| *p == n).unwrap();
            parts.remove(pos);
            out.add_term(
                Partition::new(parts),
                v.scale_rational(&BigRational::from_integer((m as i64).into())),
            );
        }
        out
    }
}

impl SymFunc2 {
    /// `p_μ ⊗ p̄_ν` with unit coefficient.
    pub fn power_sum2(mu: &Partition, nu: &Partition, bounds: (u32, u32), nq: u32, nbig: u32) -> Self {
        SymPoly::term((mu.clone(), nu.clone()), QSeries::one(nq, nbig), bounds)
    }

    /// The `p̄`-degree-zero slice as a one-alphabet function.
    pub fn left_slice(&self) -> SymFunc {
        let mut out = SymFunc::zero((self.bounds.0, 0), self.nq, self.nbig);
        for ((l, r), v) in &self.terms {
            if r.is_empty() {
                out.add_term(l.clone(), v.clone());
            }
        }
        out
    }

    /// The `p`-degree-zero slice as a one-alphabet function.
    pub fn right_slice(&self) -> SymFunc {
        let mut out = SymFunc::zero((self.bounds.1, 0), self.nq, self.nbig);
        for ((l, r), v) in &self.terms {
            if l.is_empty() {
                out.add_term(r.clone(), v.clone());
            }
        }
        out
    }

    /// Exchanges the two alphabets.
    pub fn swapped(&self) -> SymFunc2 {
        let mut out = SymFunc2::zero((self.bounds.1, self.bounds.0), self.nq, self.nbig);
        for ((l, r), v) in &self.terms {
            out.add_term((r.clone(), l.clone()), v.clone());
        }
        out
    }

    /// Multiplies `p_μ p̄_ν` by `∏ left(μ_i) ∏ right(ν_j)`.
    pub fn plethys_mul2<F, G>(&self, left: F, right: G) -> Self
    where
        F: Fn(u32) -> QSeries + Sync + Send,
        G: Fn(u32) -> QSeries + Sync + Send,
    {
        self.map_coeffs(|(l, r), v| {
            let mut c = v.clone();
            for part in l.parts() {
                c = &c * &left(*part);
            }
            for part in r.parts() {
                c = &c * &right(*part);
            }
            c
        })
    }

    /// `f ⊗ g` for one-alphabet functions.
    pub fn tensor(f: &SymFunc, g: &SymFunc) -> SymFunc2 {
        let nq = f.nq.min(g.nq);
        let nbig = f.nbig.min(g.nbig);
        let mut out = SymFunc2::zero((f.bounds.0, g.bounds.0), nq, nbig);
        for (a, v) in &f.terms {
            for (b, w) in &g.terms {
                out.add_term((a.clone(), b.clone()), v * w);
            }
        }
        out
    }

    /// Hall pairing in the `p̄` alphabet against `g`, leaving a function of `p`.
    pub fn pair_right(&self, g: &SymFunc) -> SymFunc {
        let mut out = SymFunc::zero((self.bounds.0, 0), self.nq.min(g.nq), self.nbig.min(g.nbig));
        for ((l, r), v) in &self.terms {
            if let Some(w) = g.terms.get(r) {
                out.add_term(l.clone(), (v * w).scale_rational(&z_of(r)));
            }
        }
        out
    }

    /// Hall pairing in the `p` alphabet against `f`, leaving a function of `p̄`.
    pub fn pair_left(&self, f: &SymFunc) -> SymFunc {
        self.swapped().pair_right(f)
    }
}

impl<'a, K: Basis> Add<&'a SymPoly<K>> for &'a SymPoly<K> {
    type Output = SymPoly<K>;
    fn add(self, rhs: &SymPoly<K>) -> SymPoly<K> {
        let mut out = self.truncate(rhs.bounds, rhs.nq, rhs.nbig);
        for (k, v) in &rhs.terms {
            out.add_term(k.clone(), v.clone());
        }
        out
    }
}

impl<'a, K: Basis> Sub<&'a SymPoly<K>> for &'a SymPoly<K> {
    type Output = SymPoly<K>;
    fn sub(self, rhs: &SymPoly<K>) -> SymPoly<K> {
        self + &(-rhs)
    }
}

impl<K: Basis> Neg for &SymPoly<K> {
    type Output = SymPoly<K>;
    fn neg(self) -> SymPoly<K> {
        SymPoly {
            bounds: self.bounds,
            nq: self.nq,
            nbig: self.nbig,
            terms: self.terms.iter().map(|(k, v)| (k.clone(), -v)).collect(),
        }
    }
}

impl<'a, K: Basis> Mul<&'a SymPoly<K>> for &'a SymPoly<K> {
    type Output = SymPoly<K>;
    fn mul(self, rhs: &SymPoly<K>) -> SymPoly<K> {
        let bounds = (self.bounds.0.min(rhs.bounds.0), self.bounds.1.min(rhs.bounds.1));
        let nq = self.nq.min(rhs.nq);
        let nbig = self.nbig.min(rhs.nbig);
        let lhs: Vec<(&K, &QSeries)> = self.terms.iter().collect();
        let rows = par::map(&lhs, |(k1, v1)| {
            let mut row = Vec::new();
            for (k2, v2) in &rhs.terms {
                let k = k1.times(k2);
                let (a, b) = k.degrees();
                if a <= bounds.0 && b <= bounds.1 {
                    row.push((k, *v1 * v2));
                }
            }
            row
        });
        let mut out = SymPoly::zero(bounds, nq, nbig);
        for row in rows {
            for (k, v) in row {
                out.add_term(k, v);
            }
        }
        out
    }
}

impl<K: Basis> fmt::Display for SymPoly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (k, v)) in self.terms.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{} -> {v}", k.label())?;
        }
        Ok(())
    }
}

pub mod json {
    //! JSON records `{p, pbar, coeff: {q, Q, num, den}}`.

    use serde::{Deserialize, Serialize};

    use super::{SymFunc, SymFunc2};
    use crate::error::Result;
    use crate::partitions::Partition;
    use crate::scalars::text::{den_text, parse_num_den};
    use crate::scalars::RatFunc;

    #[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
    pub struct CoeffJson {
        pub q: i32,
        #[serde(rename = "Q")]
        pub big_q: i32,
        pub num: String,
        pub den: String,
    }

    #[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
    pub struct RecordJson {
        pub p: Vec<u32>,
        pub pbar: Vec<u32>,
        pub coeff: CoeffJson,
    }

    #[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
    pub struct SymFuncJson {
        pub max_deg_p: u32,
        pub max_deg_pbar: u32,
        pub nq: u32,
        #[serde(rename = "nQ")]
        pub nbig: u32,
        pub terms: Vec<RecordJson>,
    }

    /// Kernel form: the `p` alphabet is labelled "out" and `p̄` "in".
    #[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
    pub struct KernelRecordJson {
        pub out: Vec<u32>,
        #[serde(rename = "in")]
        pub inc: Vec<u32>,
        pub coeff: CoeffJson,
    }

    #[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
    pub struct KernelJson {
        pub max_deg_out: u32,
        pub max_deg_in: u32,
        pub nq: u32,
        #[serde(rename = "nQ")]
        pub nbig: u32,
        pub terms: Vec<KernelRecordJson>,
    }

    fn coeff(a: i32, b: i32, c: &RatFunc) -> CoeffJson {
        CoeffJson {
            q: a,
            big_q: b,
            num: c.num().to_string(),
            den: den_text(c),
        }
    }

    pub fn to_json2(f: &SymFunc2) -> SymFuncJson {
        SymFuncJson {
            max_deg_p: f.bounds.0,
            max_deg_pbar: f.bounds.1,
            nq: f.nq,
            nbig: f.nbig,
            terms: f
                .flat_terms()
                .iter()
                .map(|((l, r), a, b, c)| RecordJson {
                    p: l.parts().to_vec(),
                    pbar: r.parts().to_vec(),
                    coeff: coeff(*a, *b, c),
                })
                .collect(),
        }
    }

    pub fn to_json(f: &SymFunc) -> SymFuncJson {
        to_json2(&f.into_left(0))
    }

    pub fn from_json2(j: &SymFuncJson) -> Result<SymFunc2> {
        let mut flat = Vec::new();
        for t in &j.terms {
            let c = parse_num_den(&t.coeff.num, &t.coeff.den)?;
            flat.push((
                (Partition::new(t.p.clone()), Partition::new(t.pbar.clone())),
                t.coeff.q,
                t.coeff.big_q,
                c,
            ));
        }
        Ok(SymFunc2::from_flat((j.max_deg_p, j.max_deg_pbar), j.nq, j.nbig, flat))
    }

    pub fn from_json(j: &SymFuncJson) -> Result<SymFunc> {
        Ok(from_json2(j)?.left_slice())
    }

    pub fn kernel_to_json(f: &SymFunc2) -> KernelJson {
        let j = to_json2(f);
        KernelJson {
            max_deg_out: j.max_deg_p,
            max_deg_in: j.max_deg_pbar,
            nq: j.nq,
            nbig: j.nbig,
            terms: j
                .terms
                .into_iter()
                .map(|r| KernelRecordJson {
                    out: r.p,
                    inc: r.pbar,
                    coeff: r.coeff,
                })
                .collect(),
        }
    }

    pub fn kernel_from_json(j: &KernelJson) -> Result<SymFunc2> {
        from_json2(&SymFuncJson {
            max_deg_p: j.max_deg_out,
            max_deg_pbar: j.max_deg_in,
            nq: j.nq,
            nbig: j.nbig,
            terms: j
                .terms
                .iter()
                .map(|r| RecordJson {
                    p: r.out.clone(),
                    pbar: r.inc.clone(),
                    coeff: r.coeff.clone(),
                })
                .collect(),
        })
    }
}
