//! Moments of central-character differences. Coordinates are taken
//! ρ-shifted throughout, so weights enter the formulas directly.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::LieFlavor;
use crate::exactnum::{fmt_rational, parse_rational, rat_pow, Rational};
use crate::{Error, Result};

/// `P_k(x) = (x + 1)^k − x^k`.
pub fn pk(x: &Rational, k: u32) -> Rational {
    rat_pow(&(x + Rational::one()), k) - rat_pow(x, k)
}

/// `P̄_k(c) = (c − 1)^k − c^k`.
pub fn pbark(c: &Rational, k: u32) -> Rational {
    rat_pow(&(c - Rational::one()), k) - rat_pow(c, k)
}

/// Moments `m_k` indexed by `k ≥ 1`. For osp the odd moments vanish.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MomentSequence {
    pub flavor: LieFlavor,
    values: BTreeMap<u32, Rational>,
}

impl MomentSequence {
    pub fn new(flavor: LieFlavor, values: BTreeMap<u32, Rational>) -> Result<Self> {
        if values.contains_key(&0) {
            return Err(Error::InvalidArgument("moments are indexed from k = 1".into()));
        }
        if flavor == LieFlavor::Osp {
            if let Some((k, _)) = values.iter().find(|(k, v)| *k % 2 == 1 && !v.is_zero()) {
                return Err(Error::InvalidArgument(format!("osp moment m_{k} must vanish")));
            }
        }
        Ok(MomentSequence { flavor, values })
    }

    /// Moments `m_1, …, m_K` from a dense list.
    pub fn from_list(flavor: LieFlavor, list: Vec<Rational>) -> Result<Self> {
        Self::new(flavor, list.into_iter().enumerate().map(|(i, v)| (i as u32 + 1, v)).collect())
    }

    pub fn values(&self) -> &BTreeMap<u32, Rational> {
        &self.values
    }

    pub fn get(&self, k: u32) -> Option<&Rational> {
        self.values.get(&k)
    }

    pub fn to_list(&self) -> Vec<Rational> {
        self.values.values().cloned().collect()
    }
}

#[derive(Serialize, Deserialize)]
struct MomentsJson {
    flavor: LieFlavor,
    values: BTreeMap<String, serde_json::Value>,
}

impl Serialize for MomentSequence {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MomentsJson {
            flavor: self.flavor,
            values: self.values.iter().map(|(k, v)| (k.to_string(), serde_json::Value::String(fmt_rational(v)))).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for MomentSequence {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = MomentsJson::deserialize(d)?;
        let mut values = BTreeMap::new();
        for (k, v) in raw.values {
            let k: u32 = k.parse().map_err(|_| D::Error::custom(format!("moment index {k:?} is not a positive integer")))?;
            let v = match &v {
                serde_json::Value::String(s) => parse_rational(s),
                serde_json::Value::Number(n) if n.is_i64() => Ok(Rational::from_integer(n.as_i64().unwrap_or(0).into())),
                other => Err(Error::Parse(format!("moment value {other} is not an integer or rational string"))),
            }
            .map_err(D::Error::custom)?;
            values.insert(k, v);
        }
        MomentSequence::new(raw.flavor, values).map_err(D::Error::custom)
    }
}

/// `m_k = Σ P_k(b_i) + Σ P̄_k(c_j)` for gl; for osp only `b` enters and only
/// even `k` are nonzero.
pub fn char_difference_forward(b: &[Rational], c: &[Rational], flavor: LieFlavor, max_k: u32) -> Result<MomentSequence> {
    if flavor == LieFlavor::Osp && !c.is_empty() {
        return Err(Error::FlavorMismatch("osp moments take only the b vector".into()));
    }
    let values = (1..=max_k)
        .map(|k| {
            let v = if flavor == LieFlavor::Osp && k % 2 == 1 {
                Rational::zero()
            } else {
                b.iter().map(|x| pk(x, k)).chain(c.iter().map(|x| pbark(x, k))).fold(Rational::zero(), |a, x| a + x)
            };
            (k, v)
        })
        .collect();
    MomentSequence::new(flavor, values)
}

/// Moments of `χ − ψ` when `λ = μ + Σ_{up} e_i − Σ_{down} e_j`; indices are
/// 0-based positions in `μ`.
pub fn weight_moment_difference(mu: &[Rational], up: &[usize], down: &[usize], max_k: u32) -> Result<MomentSequence> {
    let mut seen = vec![false; mu.len()];
    for &i in up.iter().chain(down) {
        if i >= mu.len() {
            return Err(Error::InvalidArgument(format!("index {i} outside a weight of length {}", mu.len())));
        }
        if seen[i] {
            return Err(Error::InvalidArgument(format!("index {i} listed twice")));
        }
        seen[i] = true;
    }
    let b: Vec<Rational> = up.iter().map(|&i| mu[i].clone()).collect();
    let c: Vec<Rational> = down.iter().map(|&j| mu[j].clone()).collect();
    let out = char_difference_forward(&b, &c, LieFlavor::Gl, max_k)?;

    let mut lambda = mu.to_vec();
    for &i in up {
        lambda[i] += Rational::one();
    }
    for &j in down {
        lambda[j] -= Rational::one();
    }
    for (k, v) in out.values() {
        let direct = lambda.iter().zip(mu).fold(Rational::zero(), |a, (l, m)| a + rat_pow(l, *k) - rat_pow(m, *k));
        assert_eq!(&direct, v, "power-sum difference disagrees at k = {k}");
    }
    Ok(out)
}

/// Nondecreasing integer vectors of length `len` with entries in `[-bound, bound]`.
fn multisets(len: usize, bound: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    fn rec(len: usize, lo: i64, hi: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for x in lo..=hi {
            cur.push(x);
            rec(len, x, hi, cur, out);
            cur.pop();
        }
    }
    rec(len, -bound, bound, &mut cur, &mut out);
    out
}

/// Integer `b` (length `r`) and `c` (length `s`) in `[-bound, bound]` whose
/// forward moments match every supplied entry of `m`. The first match in
/// lexicographic order of `(b, c)` is returned; osp admits no `c`.
pub fn search_decomposition(m: &MomentSequence, r: usize, s: usize, bound: i64) -> Option<(Vec<i64>, Vec<i64>)> {
    if m.flavor == LieFlavor::Osp && s > 0 {
        return None;
    }
    let keys: Vec<u32> = m.values().keys().copied().filter(|k| m.flavor == LieFlavor::Gl || k % 2 == 0).collect();
    let target: Vec<Rational> = keys.iter().map(|k| m.values()[k].clone()).collect();
    let table = |f: fn(&Rational, u32) -> Rational| -> HashMap<i64, Vec<Rational>> {
        (-bound..=bound).map(|x| (x, keys.iter().map(|&k| f(&Rational::from_integer(x.into()), k)).collect())).collect()
    };
    let (tp, tq) = (table(pk), table(pbark));
    let total = |v: &[i64], t: &HashMap<i64, Vec<Rational>>| -> Vec<Rational> {
        let mut acc = vec![Rational::zero(); keys.len()];
        for x in v {
            for (a, y) in acc.iter_mut().zip(&t[x]) {
                *a += y;
            }
        }
        acc
    };
    let mut by_c: HashMap<Vec<Rational>, Vec<i64>> = HashMap::new();
    for c in multisets(s, bound) {
        by_c.entry(total(&c, &tq)).or_insert(c);
    }
    for b in multisets(r, bound) {
        let need: Vec<Rational> = target.iter().zip(total(&b, &tp)).map(|(t, x)| t - x).collect();
        if let Some(c) = by_c.get(&need) {
            return Some((b, c.clone()));
        }
    }
    None
}

/// Cancels every `b_i` against a `c_j` with `c_j = b_i + 1`; these pairs
/// contribute nothing to any gl moment. Two pairs `(b, c)` share all gl
/// moments exactly when their reduced forms agree, so this is the most a
/// search can recover.
pub fn reduced_pair(b: &[i64], c: &[i64]) -> (Vec<i64>, Vec<i64>) {
    let mut b = b.to_vec();
    let mut c = c.to_vec();
    b.sort_unstable();
    c.sort_unstable();
    let mut keep_b = Vec::new();
    for x in b {
        if let Some(j) = c.iter().position(|&y| y == x + 1) {
            c.remove(j);
        } else {
            keep_b.push(x);
        }
    }
    (keep_b, c)
}
