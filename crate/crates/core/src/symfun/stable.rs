//! Stable Harish-Chandra multiplicities: `λ^(n) = [α^(n), β^(n), γ]` and
//! `μ^(n) = [α^(n) + a, β^(n) + b, δ]` with arms and legs whose row gaps grow
//! with `n`. The multiplicity of `V_ν` (or `V_{(ν,ν̄)}`) in `V_λ ⊗ V_μ^*` is
//! eventually constant and is given by a finite sum of LR coefficients on
//! compressed shapes.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::lr::{lr_coefficient, osp_multiplicity, skew_schur_pairing};
use super::triple::{glue, triple_decode, TriplePartition};
use super::LieFlavor;
use crate::partition::Partition;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShiftData {
    /// Arm shift, one entry per cut row.
    pub a: Vec<i64>,
    /// Leg shift, one entry per cut column.
    pub b: Vec<i64>,
    pub gamma: Partition,
    pub delta: Partition,
}

const SHIFT_LIMIT: i64 = 1_000;

impl ShiftData {
    pub fn k(&self) -> usize {
        self.a.len()
    }

    pub fn l(&self) -> usize {
        self.b.len()
    }

    pub fn validate(&self) -> Result<()> {
        if let Some(x) = self.a.iter().chain(&self.b).find(|x| x.abs() > SHIFT_LIMIT) {
            return Err(Error::InvalidArgument(format!("shift entry {x} outside ±{SHIFT_LIMIT}")));
        }
        Ok(())
    }

    fn abs_max(v: &[i64]) -> usize {
        v.iter().map(|x| x.unsigned_abs() as usize).max().unwrap_or(0)
    }

    /// Smallest `n` for which [`hc_multiplicity_at`] is guaranteed to sit in
    /// the stable range for the given `|ν| + |ν̄|`.
    pub fn stable_threshold(&self, weight: usize) -> usize {
        weight
            + 2 * Self::abs_max(&self.a)
            + 2 * Self::abs_max(&self.b)
            + self.gamma.size()
            + self.delta.size()
            + self.k()
            + self.l()
            + 1
    }

    /// The pair `(λ^(n), μ^(n))`.
    pub fn instantiate(&self, n: usize) -> Result<(Partition, Partition)> {
        self.validate()?;
        let (k, l) = (self.k(), self.l());
        let arm_base = self.gamma.part(0) + self.delta.part(0) + Self::abs_max(&self.a);
        let leg_base = self.gamma.len() + self.delta.len() + Self::abs_max(&self.b);
        let alpha: Vec<usize> = (0..k).map(|i| arm_base + n * (k - i)).collect();
        let beta: Vec<usize> = (0..l).map(|j| leg_base + n * (l - j)).collect();
        let shift = |v: &[usize], s: &[i64]| -> Result<Partition> {
            let out: Vec<usize> = v.iter().zip(s).map(|(&x, &d)| x as i64 + d).map(|x| x.max(0) as usize).collect();
            Partition::new(out)
        };
        let lam = TriplePartition {
            alpha: Partition::new(alpha.clone())?,
            beta: Partition::new(beta.clone())?,
            gamma: self.gamma.clone(),
            k,
            l,
        };
        let mu = TriplePartition { alpha: shift(&alpha, &self.a)?, beta: shift(&beta, &self.b)?, gamma: self.delta.clone(), k, l };
        Ok((triple_decode(&lam)?, triple_decode(&mu)?))
    }
}

/// One summation index `(c, d, ε)`.
#[derive(Clone, Debug)]
struct Config {
    c: Vec<i64>,
    d: Vec<i64>,
    eps: Partition,
}

fn intersection(a: &Partition, b: &Partition) -> Partition {
    Partition::new((0..a.len().min(b.len())).map(|i| a.part(i).min(b.part(i))).collect()).expect("meet of partitions")
}

/// All nonnegative vectors `x ≥ lower` (componentwise) with `Σ x = total`.
fn bounded_compositions(lower: &[i64], total: i64, out: &mut Vec<Vec<i64>>) {
    let free = total - lower.iter().sum::<i64>();
    if free < 0 {
        return;
    }
    let mut cur = lower.to_vec();
    fn rec(i: usize, rest: i64, lower: &[i64], cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if i == cur.len() {
            if rest == 0 {
                out.push(cur.clone());
            }
            return;
        }
        for x in 0..=rest {
            cur[i] = lower[i] + x;
            rec(i + 1, rest - x, lower, cur, out);
        }
        cur[i] = lower[i];
    }
    rec(0, free, lower, &mut cur, out);
}

/// Configurations with `|c| + |d| + |γ| − |ε| = p`.
fn configs(shift: &ShiftData, p: usize) -> Vec<Config> {
    let lower: Vec<i64> = shift.a.iter().chain(&shift.b).map(|&x| (-x).max(0)).collect();
    let meet = intersection(&shift.gamma, &shift.delta);
    let mut out = Vec::new();
    for eps in meet.subpartitions() {
        let total = p as i64 + eps.size() as i64 - shift.gamma.size() as i64;
        if total < 0 {
            continue;
        }
        let mut vecs = Vec::new();
        bounded_compositions(&lower, total, &mut vecs);
        for v in vecs {
            let (c, d) = v.split_at(shift.k());
            out.push(Config { c: c.to_vec(), d: d.to_vec(), eps: eps.clone() });
        }
    }
    out
}

/// `(λ̃, η̃)` for row lengths `c`, column lengths `d`, remainder `g` and
/// inner remainder `eps`: the skew shape `λ̃/η̃` is the disjoint union of
/// rows `c_i`, columns `d_j` and `g/eps`.
fn compressed(c: &[i64], d: &[i64], g: &Partition, eps: &Partition) -> (Partition, Partition) {
    let suffix = |v: &[i64], base: usize| -> Vec<usize> {
        let mut acc = base as i64;
        let mut out: Vec<usize> = v.iter().rev().map(|&x| {
            acc += x;
            acc as usize
        }).collect();
        out.reverse();
        out
    };
    let at = suffix(c, g.part(0));
    let bt = suffix(d, g.len());
    let inner_a: Vec<usize> = at.iter().zip(c).map(|(&x, &y)| x - y as usize).collect();
    let inner_b: Vec<usize> = bt.iter().zip(d).map(|(&x, &y)| x - y as usize).collect();
    (glue(&at, &bt, g), glue(&inner_a, &inner_b, eps))
}

fn shifted(v: &[i64], s: &[i64]) -> Vec<i64> {
    v.iter().zip(s).map(|(x, y)| x + y).collect()
}

fn check_nu(flavor: LieFlavor, nu_bar: Option<&Partition>) -> Result<()> {
    match (flavor, nu_bar) {
        (LieFlavor::Gl, None) => Err(Error::FlavorMismatch("gl multiplicities need (ν, ν̄)".into())),
        (LieFlavor::Osp, Some(_)) => Err(Error::FlavorMismatch("osp multiplicities take a single ν".into())),
        _ => Ok(()),
    }
}

/// The stable value of the multiplicity of `V_ν` (osp) or `V_{(ν,ν̄)}` (gl)
/// in `V_{λ^(n)} ⊗ V_{μ^(n)}^*`, by the compressed-shape sum.
pub fn stable_hc_multiplicity(shift: &ShiftData, nu: &Partition, nu_bar: Option<&Partition>, flavor: LieFlavor) -> Result<u64> {
    shift.validate()?;
    check_nu(flavor, nu_bar)?;
    let sa: i64 = shift.a.iter().sum::<i64>() + shift.b.iter().sum::<i64>();
    let (g, dl) = (shift.gamma.size() as i64, shift.delta.size() as i64);
    match flavor {
        LieFlavor::Gl => {
            let nu_bar = nu_bar.expect("checked");
            // |μ side| − |λ side| is independent of (c, d, ε).
            if sa + dl - g != nu_bar.size() as i64 - nu.size() as i64 {
                return Ok(0);
            }
            Ok(configs(shift, nu.size())
                .par_iter()
                .map(|cf| {
                    let (lt, et) = compressed(&cf.c, &cf.d, &shift.gamma, &cf.eps);
                    let x = lr_coefficient(&lt, &et, nu);
                    if x == 0 {
                        return 0;
                    }
                    let (mt, ft) = compressed(&shifted(&cf.c, &shift.a), &shifted(&cf.d, &shift.b), &shift.delta, &cf.eps);
                    x * lr_coefficient(&mt, &ft, nu_bar)
                })
                .sum())
        }
        LieFlavor::Osp => {
            let twice = nu.size() as i64 + g - dl - sa;
            if twice < 0 || twice % 2 != 0 || twice / 2 > nu.size() as i64 {
                return Ok(0);
            }
            let p = (twice / 2) as usize;
            let q = nu.size() - p;
            let omegas: Vec<Partition> = Partition::all_of_size(p).into_iter().filter(|x| nu.contains(x)).collect();
            let xis: Vec<Partition> = Partition::all_of_size(q).into_iter().filter(|x| nu.contains(x)).collect();
            Ok(configs(shift, p)
                .par_iter()
                .map(|cf| {
                    let (lt, et) = compressed(&cf.c, &cf.d, &shift.gamma, &cf.eps);
                    let (mt, ft) = compressed(&shifted(&cf.c, &shift.a), &shifted(&cf.d, &shift.b), &shift.delta, &cf.eps);
                    let mut s = 0;
                    for om in &omegas {
                        let x = lr_coefficient(&lt, &et, om);
                        if x == 0 {
                            continue;
                        }
                        for xi in &xis {
                            let y = lr_coefficient(nu, om, xi);
                            if y != 0 {
                                s += x * y * lr_coefficient(&mt, &ft, xi);
                            }
                        }
                    }
                    s
                })
                .sum())
        }
    }
}

/// The same multiplicity computed directly on `λ^(n), μ^(n)`.
pub fn hc_multiplicity_at(shift: &ShiftData, nu: &Partition, nu_bar: Option<&Partition>, flavor: LieFlavor, n: usize) -> Result<u64> {
    check_nu(flavor, nu_bar)?;
    let (lam, mu) = shift.instantiate(n)?;
    Ok(match flavor {
        LieFlavor::Gl => skew_schur_pairing(&lam, nu, &mu, nu_bar.expect("checked")),
        LieFlavor::Osp => osp_multiplicity(&lam, &mu, nu),
    })
}
