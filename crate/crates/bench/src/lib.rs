//! Fixtures shared by the criterion benches.

use interpcat::diagrams::{enumerate_basis, Diagram, ObjectSignature};

/// All S-flavor basis diagrams of `Hom([l], [m])`.
pub fn s_basis(l: usize, m: usize) -> Vec<Diagram> {
    enumerate_basis(ObjectSignature::s(l), ObjectSignature::s(m))
}
