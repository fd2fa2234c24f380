//! Symmetric-function side: Littlewood-Richardson coefficients, Brylinski
//! and King multiplicities, the `[α, β, γ]` encoding, stable multiplicities,
//! and moments of central characters.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

mod lr;
mod moments;
mod stable;
mod triple;

pub use crate::partition::Partition;
pub use lr::{gl_mixed_multiplicity, lr_coefficient, osp_multiplicity, skew_schur_pairing};
pub use moments::{char_difference_forward, pbark, pk, reduced_pair, search_decomposition, weight_moment_difference, MomentSequence};
pub use stable::{hc_multiplicity_at, stable_hc_multiplicity, ShiftData};
pub use triple::{triple_decode, triple_encode, TriplePartition};

/// Which family of central characters or multiplicities is meant.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LieFlavor {
    Gl,
    Osp,
}

impl fmt::Display for LieFlavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LieFlavor::Gl => "gl",
            LieFlavor::Osp => "osp",
        })
    }
}

impl FromStr for LieFlavor {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        match s {
            "gl" => Ok(LieFlavor::Gl),
            "osp" => Ok(LieFlavor::Osp),
            _ => Err(crate::Error::Parse(format!("unknown flavor {s:?}, expected gl or osp"))),
        }
    }
}
