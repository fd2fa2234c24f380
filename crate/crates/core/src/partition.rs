//! Integer partitions (Young diagrams) and bipartitions.

use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::exactnum::Rational;
use crate::{Error, Result};

/// A weakly decreasing sequence of positive parts. Serializes as a bare
/// JSON array.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl TryFrom<Vec<i64>> for Partition {
    type Error = Error;

    fn try_from(v: Vec<i64>) -> Result<Self> {
        let mut parts = Vec::with_capacity(v.len());
        for x in v {
            if x < 0 {
                return Err(Error::InvalidPartition(format!("negative part {x}")));
            }
            parts.push(x as usize);
        }
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl Partition {
    /// Validates weak decrease; trailing zeros are dropped, interior zeros
    /// are rejected by the ordering check.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Panics on invalid input; meant for literals in tests and tables.
    pub fn from_slice(parts: &[usize]) -> Self {
        Partition::new(parts.to_vec()).expect("valid partition literal")
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `λ_i` with 0-based `i`; zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn conjugate(&self) -> Partition {
        let w = self.part(0);
        Partition((0..w).map(|j| self.0.iter().filter(|&&x| x > j).count()).collect())
    }

    /// Length of the Durfee square.
    pub fn durfee(&self) -> usize {
        self.0.iter().enumerate().take_while(|(i, &x)| x > *i).count()
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    pub fn hooks(&self) -> Vec<usize> {
        let conj = self.conjugate();
        let mut out = Vec::with_capacity(self.size());
        for (i, &row) in self.0.iter().enumerate() {
            for j in 0..row {
                out.push(row - j + conj.part(j) - i - 1);
            }
        }
        out
    }

    /// Number of standard Young tableaux, `n! / ∏ hooks`.
    pub fn hook_dimension(&self) -> BigInt {
        let mut num = BigInt::one();
        for k in 2..=self.size() {
            num *= k;
        }
        let den: BigInt = self.hooks().into_iter().map(BigInt::from).product();
        num / den
    }

    /// `1 / ∏ hooks`, the leading coefficient of the generic dimension.
    pub fn inverse_hook_product(&self) -> Rational {
        let den: BigInt = self.hooks().into_iter().map(BigInt::from).product();
        Rational::new(BigInt::one(), den)
    }

    /// `(n − |λ|, λ_1, λ_2, …)`, if it is a partition.
    pub fn padded(&self, n: usize) -> Option<Partition> {
        let size = self.size();
        if n < size || n - size < self.part(0) {
            return None;
        }
        let mut parts = vec![n - size];
        parts.extend_from_slice(&self.0);
        Partition::new(parts).ok()
    }

    /// Removes the first row.
    pub fn tail(&self) -> Partition {
        Partition(self.0.iter().skip(1).copied().collect())
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all_of_size(n: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                rec(rest - p, p, cur, out);
                cur.pop();
            }
        }
        rec(n, n, &mut cur, &mut out);
        out
    }

    /// All partitions with size at most `n`, by increasing size.
    pub fn all_up_to(n: usize) -> Vec<Partition> {
        (0..=n).flat_map(Partition::all_of_size).collect()
    }

    /// Partitions `η ⊂ self` with `|self| − |η| = k`, by removing cells.
    pub fn subpartitions_removing(&self, k: usize) -> Vec<Partition> {
        let mut out = Vec::new();
        let mut cur = self.0.clone();
        fn rec(i: usize, rest: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition::new(cur.clone()).expect("shrunk rows stay ordered"));
                return;
            }
            if i == cur.len() {
                return;
            }
            // Rows are processed bottom-up so the lower bound of row i is
            // the (already final) row below it.
            let idx = cur.len() - 1 - i;
            let floor = if idx + 1 < cur.len() { cur[idx + 1] } else { 0 };
            let orig = cur[idx];
            for take in 0..=rest.min(orig - floor) {
                cur[idx] = orig - take;
                rec(i + 1, rest - take, cur, out);
            }
            cur[idx] = orig;
        }
        rec(0, k, &mut cur, &mut out);
        out.sort();
        out.dedup();
        out
    }

    /// All partitions contained in `self`.
    pub fn subpartitions(&self) -> Vec<Partition> {
        (0..=self.size()).flat_map(|k| self.subpartitions_removing(k)).collect()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "∅");
        }
        write!(f, "(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// A pair `(λ•, λ∘)` indexing simples of `Rep(GL_t)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Bipartition {
    pub black: Partition,
    pub white: Partition,
}

impl Bipartition {
    pub fn new(black: Partition, white: Partition) -> Self {
        Bipartition { black, white }
    }

    pub fn size(&self) -> (usize, usize) {
        (self.black.size(), self.white.size())
    }

    /// All bipartitions of size `(r − i, s − i)`, `0 ≤ i ≤ min(r, s)`, by
    /// increasing total size.
    pub fn all_below(r: usize, s: usize) -> Vec<Bipartition> {
        let mut out = Vec::new();
        for i in (0..=r.min(s)).rev() {
            for b in Partition::all_of_size(r - i) {
                for w in Partition::all_of_size(s - i) {
                    out.push(Bipartition::new(b.clone(), w));
                }
            }
        }
        out
    }

    /// Highest weight of the GL_n irreducible it interpolates at `t = n`.
    pub fn gl_weight(&self, n: usize) -> Option<Vec<i64>> {
        if self.black.len() + self.white.len() > n {
            return None;
        }
        let mut w = vec![0i64; n];
        for (i, &p) in self.black.parts().iter().enumerate() {
            w[i] = p as i64;
        }
        for (j, &p) in self.white.parts().iter().enumerate() {
            w[n - 1 - j] = -(p as i64);
        }
        Some(w)
    }
}

impl fmt::Display for Bipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}; {})", self.black, self.white)
    }
}
