//! Exact computations in the interpolation categories Rep(S_t), Rep(GL_t)
//! and Rep(O_t): diagram Hom spaces over Q(t), Karoubian idempotents and
//! their dimensions, negligible morphisms at integer `t`, the classical
//! matrix realization, and the symmetric-function side (Littlewood-Richardson
//! multiplicities, stable Harish-Chandra multiplicities, central character
//! moments).

pub mod diagrams;
mod error;
pub mod exactnum;
pub mod homspaces;
pub mod json;
pub mod karoubi;
pub mod linalg;
pub mod oracle;
pub mod partition;
pub mod scalar;
pub mod selftest;
pub mod semisimplify;
pub mod symfun;

pub use diagrams::{Diagram, Flavor, ObjectSignature};
pub use error::{Error, Result};
pub use exactnum::{Poly, RatFunc, Rational};
pub use homspaces::Morphism;
pub use partition::{Bipartition, Partition};
