//! The `[α, β, γ]` encoding: `λ` cut after `k` rows and `l` columns into an
//! arm `α`, a leg `β` and a remainder `γ` below and to the right of the cut.

use serde::{Deserialize, Serialize};

use crate::partition::Partition;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct TriplePartition {
    pub alpha: Partition,
    pub beta: Partition,
    pub gamma: Partition,
    pub k: usize,
    pub l: usize,
}

fn violated(msg: String) -> Error {
    Error::InvalidPartition(msg)
}

/// Cuts `λ` after row `k` and column `l`.
pub fn triple_encode(lambda: &Partition, k: usize, l: usize) -> Result<TriplePartition> {
    let d = lambda.durfee();
    if l > d {
        return Err(violated(format!("column cut l = {l} exceeds the Durfee size {d} of {lambda}")));
    }
    if k > 0 && lambda.part(k - 1) <= l {
        return Err(violated(format!("α has length below k = {k}: λ_{k} = {} ≤ l = {l}", lambda.part(k - 1))));
    }
    let conj = lambda.conjugate();
    if l > 0 && conj.part(l - 1) <= k {
        return Err(violated(format!("β has length below l = {l}: λ'_{l} = {} ≤ k = {k}", conj.part(l - 1))));
    }
    let alpha: Vec<usize> = (0..k).map(|i| lambda.part(i) - l).collect();
    let beta: Vec<usize> = (0..l).map(|j| conj.part(j) - k).collect();
    let rows = conj.part(l).saturating_sub(k);
    let gamma: Vec<usize> = (0..rows).map(|i| lambda.part(k + i) - l).collect();
    let tp = TriplePartition {
        alpha: Partition::new(alpha)?,
        beta: Partition::new(beta)?,
        gamma: Partition::new(gamma)?,
        k,
        l,
    };
    check_corners(&tp)?;
    Ok(tp)
}

fn check_corners(tp: &TriplePartition) -> Result<()> {
    if tp.alpha.len() != tp.k {
        return Err(violated(format!("l(α) = {} but k = {}", tp.alpha.len(), tp.k)));
    }
    if tp.beta.len() != tp.l {
        return Err(violated(format!("l(β) = {} but l = {}", tp.beta.len(), tp.l)));
    }
    if tp.k > 0 && tp.gamma.part(0) > tp.alpha.part(tp.k - 1) {
        return Err(violated(format!("γ_1 = {} exceeds α_k = {}", tp.gamma.part(0), tp.alpha.part(tp.k - 1))));
    }
    if tp.l > 0 && tp.gamma.len() > tp.beta.part(tp.l - 1) {
        return Err(violated(format!("γ'_1 = {} exceeds β_l = {}", tp.gamma.len(), tp.beta.part(tp.l - 1))));
    }
    Ok(())
}

/// Glues arm, leg and remainder back together without validation. Zero
/// entries in `alpha`/`beta` are allowed; callers use this for the padded
/// shapes of the stable multiplicity formula.
pub(crate) fn glue(alpha: &[usize], beta: &[usize], gamma: &Partition) -> Partition {
    let l = beta.len();
    let mut parts: Vec<usize> = alpha.iter().map(|a| a + l).collect();
    let depth = beta.first().copied().unwrap_or(0).max(gamma.len());
    for i in 1..=depth {
        parts.push(beta.iter().filter(|&&b| b >= i).count() + gamma.part(i - 1));
    }
    Partition::new(parts).expect("glued shape is a partition")
}

/// Inverse of [`triple_encode`].
pub fn triple_decode(tp: &TriplePartition) -> Result<Partition> {
    check_corners(tp)?;
    let lambda = glue(tp.alpha.parts(), tp.beta.parts(), &tp.gamma);
    let back = triple_encode(&lambda, tp.k, tp.l)?;
    if &back != tp {
        return Err(violated(format!("{lambda} re-encodes differently")));
    }
    Ok(lambda)
}
