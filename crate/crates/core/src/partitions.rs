//! Partitions, Young diagram statistics and symmetric group characters.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};

/// A weakly decreasing list of positive parts.
///
/// Ordered by size first, then reverse-lexicographically within a size, so
/// `(n)` comes first and `(1^n)` last among partitions of `n`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Sorts and drops zero parts.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|p| *p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    pub fn single(n: u32) -> Self {
        Partition::new(vec![n])
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Row length, zero past the last row.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.part(0) as usize;
        let parts = (0..width)
            .map(|j| self.parts.iter().filter(|p| **p as usize > j).count() as u32)
            .collect();
        Partition { parts }
    }

    /// Concatenation of parts, the index of a product of power sums.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.parts.clone();
        parts.extend_from_slice(&other.parts);
        Partition::new(parts)
    }

    /// Every part multiplied by `n`.
    pub fn scaled(&self, n: u32) -> Partition {
        Partition {
            parts: self.parts.iter().map(|p| p * n).collect(),
        }
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Cells `(row, col)` in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(i, p)| (0..*p as usize).map(move |j| Cell { row: i, col: j }))
    }

    fn check_cell(&self, c: Cell) -> Result<()> {
        if c.col < self.part(c.row) as usize {
            Ok(())
        } else {
            Err(Error::CellOutsideDiagram {
                row: c.row,
                col: c.col,
                partition: self.to_string(),
            })
        }
    }

    pub fn arm(&self, c: Cell) -> Result<u32> {
        self.check_cell(c)?;
        Ok(self.part(c.row) - c.col as u32 - 1)
    }

    pub fn leg(&self, c: Cell) -> Result<u32> {
        self.check_cell(c)?;
        Ok(self.conjugate().part(c.col) - c.row as u32 - 1)
    }

    /// Multiplicities `m_i` of each part size `i`.
    pub fn multiplicities(&self) -> Vec<(u32, u32)> {
        let mut out: Vec<(u32, u32)> = Vec::new();
        for p in &self.parts {
            match out.last_mut() {
                Some((q, m)) if q == p => *m += 1,
                _ => out.push((*p, 1)),
            }
        }
        out
    }

    /// Hook-length count of standard tableaux.
    pub fn dimension(&self) -> BigInt {
        let conj = self.conjugate();
        let mut hooks = BigInt::one();
        for c in self.cells() {
            let h = self.part(c.row) - c.col as u32 + conj.part(c.col) - c.row as u32 - 1;
            hooks *= h;
        }
        factorial(self.size()) / hooks
    }
}

/// A box of a Young diagram; `row` indexes parts, `col` positions within a part.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    pub fn new(row: usize, col: usize) -> Self {
        Cell { row, col }
    }

    pub fn coarm(&self) -> u32 {
        self.col as u32
    }

    pub fn coleg(&self) -> u32 {
        self.row as u32
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for tok in s.split(',') {
            let v: u32 = tok
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("bad partition part '{tok}' in \"{s}\"")))?;
            if v == 0 {
                return Err(Error::Parse(format!("zero part in partition \"{s}\"")));
            }
            parts.push(v);
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!("parts of \"{s}\" are not weakly decreasing")));
        }
        Ok(Partition { parts })
    }
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// `z_μ = ∏ i^{m_i} m_i!`.
pub fn z_of(mu: &Partition) -> BigRational {
    let mut z = BigInt::one();
    for (i, m) in mu.multiplicities() {
        z *= BigInt::from(i).pow(m) * factorial(m);
    }
    BigRational::from_integer(z)
}

/// All partitions of `n`, largest first in reverse-lexicographic order.
pub fn enumerate(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fill(n, n, &mut cur, &mut out);
    out
}

fn fill(rest: u32, cap: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if rest == 0 {
        out.push(Partition { parts: cur.clone() });
        return;
    }
    for p in (1..=rest.min(cap)).rev() {
        cur.push(p);
        fill(rest - p, p, cur, out);
        cur.pop();
    }
}

/// All partitions of size at most `n`, in the global order.
pub fn enumerate_upto(n: u32) -> Vec<Partition> {
    (0..=n).flat_map(enumerate).collect()
}

fn mn_cache() -> &'static Mutex<HashMap<(Partition, Partition), i64>> {
    static CACHE: OnceLock<Mutex<HashMap<(Partition, Partition), i64>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// `χ^λ(μ)` by the Murnaghan–Nakayama rule.
pub fn mn_character(lambda: &Partition, mu: &Partition) -> Result<i64> {
    if lambda.size() != mu.size() {
        return Err(Error::SizeMismatch(lambda.to_string(), mu.to_string()));
    }
    Ok(mn_rec(lambda, mu))
}

fn mn_rec(lambda: &Partition, mu: &Partition) -> i64 {
    if mu.is_empty() {
        return 1;
    }
    let key = (lambda.clone(), mu.clone());
    if let Some(v) = mn_cache().lock().unwrap().get(&key) {
        return *v;
    }
    // Strip the first part of μ as a border strip, via beta-numbers.
    let k = mu.parts[0];
    let rest = Partition {
        parts: mu.parts[1..].to_vec(),
    };
    let len = lambda.len();
    let beta: Vec<i64> = (0..len)
        .map(|i| lambda.parts[i] as i64 + (len - 1 - i) as i64)
        .collect();
    let mut total = 0i64;
    for i in 0..len {
        let nb = beta[i] - k as i64;
        if nb < 0 || beta.contains(&nb) {
            continue;
        }
        let height = beta.iter().filter(|b| **b > nb && **b < beta[i]).count();
        let mut nbeta = beta.clone();
        nbeta[i] = nb;
        nbeta.sort_unstable_by(|a, b| b.cmp(a));
        let n = nbeta.len();
        let parts = nbeta
            .iter()
            .enumerate()
            .map(|(j, b)| (b - (n - 1 - j) as i64) as u32)
            .collect();
        let sign = if height % 2 == 0 { 1 } else { -1 };
        total += sign * mn_rec(&Partition::new(parts), &rest);
    }
    mn_cache().lock().unwrap().insert(key, total);
    total
}
