//! Negligible morphisms: the trace pairing `(f, g) ↦ Tr(f g)`, its radical,
//! and the quotient Hom dimensions at integer `t`.

use rayon::prelude::*;
use serde::Serialize;

use crate::diagrams::{enumerate_basis, Diagram, Flavor, ObjectSignature};
use crate::exactnum::{fmt_rational, RatFunc, Rational};
use crate::homspaces::Morphism;
use crate::linalg::{self, Matrix};
use crate::partition::Partition;
use crate::scalar::Scalar;
use crate::{Error, Result};

/// Symbolic Gram matrices are only built for Hom spaces with at most this
/// many endpoints.
pub const SYMBOLIC_POINT_LIMIT: usize = 4;

/// `Tr(f g)` for basis diagrams `f: X → Y` and `g: Y → X`.
fn pair_trace<C: Scalar>(f: &Diagram, g: &Diagram, powers: &[C]) -> C {
    let (fg, loops) = f.compose_unchecked(g);
    let closure = fg.closure_components().expect("f g is an endomorphism");
    powers[loops as usize + closure].clone()
}

/// `G[i][j] = Tr(f_i ∘ g_j)` with `f_i` running over the e-basis of
/// `Hom(src, tgt)` and `g_j` over that of `Hom(tgt, src)`.
pub fn gram_matrix<C: Scalar>(src: ObjectSignature, tgt: ObjectSignature, param: &C) -> Result<Matrix<C>> {
    if src.flavor != tgt.flavor {
        return Err(Error::FlavorMismatch(format!("{src} vs {tgt}")));
    }
    let rows = enumerate_basis(src, tgt);
    let cols = enumerate_basis(tgt, src);
    let max = 2 * (src.points() + tgt.points()) + 1;
    let powers: Vec<C> = (0..=max as u32).map(|k| param.pow(k)).collect();
    let data: Vec<C> = (0..rows.len() * cols.len())
        .into_par_iter()
        .map(|idx| pair_trace(&rows[idx / cols.len()], &cols[idx % cols.len()], &powers))
        .collect();
    Ok(Matrix { rows: rows.len(), cols: cols.len(), data })
}

/// Gram matrix with its rank, as reported by the `gram` command.
#[derive(Clone, Debug, Serialize)]
pub struct GramReport {
    pub flavor: Flavor,
    pub source: String,
    pub target: String,
    /// `None` for the symbolic matrix over Q(t).
    pub t0: Option<String>,
    pub basis: &'static str,
    pub gram: Vec<Vec<String>>,
    pub rank: usize,
    pub nullity: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub determinant: Option<String>,
}

fn report<C: Scalar>(src: ObjectSignature, tgt: ObjectSignature, t0: Option<String>, g: &Matrix<C>, show: impl Fn(&C) -> String) -> GramReport {
    let rank = g.rank();
    let determinant = (g.rows == g.cols).then(|| show(&linalg::det(g.rows, g.data.clone())));
    GramReport {
        flavor: src.flavor,
        source: src.to_string(),
        target: tgt.to_string(),
        t0,
        basis: "e",
        gram: (0..g.rows).map(|i| (0..g.cols).map(|j| show(g.get(i, j))).collect()).collect(),
        rank,
        nullity: g.rows - rank,
        determinant,
    }
}

/// Gram matrix evaluated at `t = t0`.
pub fn gram(src: ObjectSignature, tgt: ObjectSignature, t0: &Rational) -> Result<GramReport> {
    let g = gram_matrix(src, tgt, t0)?;
    Ok(report(src, tgt, Some(fmt_rational(t0)), &g, fmt_rational))
}

/// Gram matrix over Q(t); limited to small Hom spaces.
pub fn gram_symbolic(src: ObjectSignature, tgt: ObjectSignature) -> Result<GramReport> {
    let points = src.points() + tgt.points();
    if points > SYMBOLIC_POINT_LIMIT {
        return Err(Error::Budget(format!(
            "symbolic Gram matrices need at most {SYMBOLIC_POINT_LIMIT} endpoints, got {points}"
        )));
    }
    let g = gram_matrix(src, tgt, &RatFunc::t())?;
    Ok(report(src, tgt, None, &g, |c| c.to_string()))
}

/// True iff `Tr(f g)` vanishes at `t0` for every basis diagram `g`.
pub fn is_negligible(f: &Morphism, t0: &Rational) -> Result<bool> {
    is_negligible_at(&f.eval(t0)?)
}

/// Same test for a morphism already specialized to its parameter value.
pub fn is_negligible_at(f: &Morphism<Rational>) -> Result<bool> {
    let f = f.to_e();
    if f.is_zero() {
        return Ok(true);
    }
    let (src, tgt) = (f.source(), f.target());
    let max = 2 * (src.points() + tgt.points()) + 1;
    let powers: Vec<Rational> = (0..=max as u32).map(|k| Scalar::pow(f.param(), k)).collect();
    let terms: Vec<(&Diagram, &Rational)> = f.terms().collect();
    Ok(enumerate_basis(tgt, src).par_iter().all(|g| {
        let s = terms.iter().fold(<Rational as Scalar>::zero(), |acc, (d, c)| acc.add(&c.mul(&pair_trace(d, g, &powers))));
        s.is_zero()
    }))
}

/// A basis of the negligible morphisms in `Hom(src, tgt)` at `t0`.
pub fn negligible_basis(src: ObjectSignature, tgt: ObjectSignature, t0: &Rational) -> Result<Vec<Morphism<Rational>>> {
    let g = gram_matrix(src, tgt, t0)?;
    // f = Σ x_i f_i is negligible iff x^T G = 0, i.e. G^T x = 0.
    let gt: Vec<Rational> = (0..g.cols).flat_map(|j| (0..g.rows).map(move |i| (i, j))).map(|(i, j)| g.get(i, j).clone()).collect();
    let rows = enumerate_basis(src, tgt);
    linalg::nullspace(g.cols, g.rows, gt)
        .into_iter()
        .map(|v| {
            Morphism::from_terms(src, tgt, t0.clone(), crate::homspaces::Basis::E, rows.iter().cloned().zip(v))
        })
        .collect()
}

/// Dimension of `Hom(src, tgt)` modulo negligible morphisms at `t = n`.
pub fn quotient_dim(src: ObjectSignature, tgt: ObjectSignature, n: u64) -> Result<usize> {
    Ok(gram(src, tgt, &Rational::from_integer(n.into()))?.rank)
}

/// `L(λ)` with `|λ| ≤ max_size` that become zero in `Rep(S_n)`:
/// exactly those with `|λ| + λ_1 > n`.
pub fn annihilated_simples(n: usize, max_size: usize) -> Vec<Partition> {
    Partition::all_up_to(max_size).into_iter().filter(|l| l.size() + l.part(0) > n).collect()
}

#[cfg(test)]
mod tests {
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    use super::*;
    use crate::exactnum::int;

    fn s(m: usize) -> ObjectSignature {
        ObjectSignature::s(m)
    }

    fn pi() -> Morphism {
        Morphism::from_diagram(Diagram::partition(1, 1, &[vec![1], vec![-1]]).unwrap())
    }

    #[test]
    fn gram_on_end_one() {
        let g = gram_symbolic(s(1), s(1)).unwrap();
        assert_eq!(g.gram, vec![vec!["t".to_string(), "t".into()], vec!["t".into(), "t^2".into()]]);
        assert_eq!(g.determinant.as_deref(), Some("t^3 - t^2"));
        let at1 = gram(s(1), s(1), &int(1)).unwrap();
        assert_eq!((at1.rank, at1.nullity), (1, 1));
        let at2 = gram(s(1), s(1), &int(2)).unwrap();
        assert_eq!((at2.rank, at2.nullity), (2, 0));
        assert!(gram_symbolic(s(2), s(3)).is_err());
    }

    #[test]
    fn negligible_examples() {
        let f = Morphism::identity(s(1)).sub(&pi()).unwrap();
        assert!(is_negligible(&f, &int(1)).unwrap());
        assert!(!is_negligible(&Morphism::identity(s(1)), &int(2)).unwrap());
        assert!(is_negligible(&Morphism::zero(s(1), s(2)), &int(3)).unwrap());
    }

    #[test]
    fn quotient_examples() {
        assert_eq!(quotient_dim(s(2), s(2), 2).unwrap(), 8);
        assert_eq!(quotient_dim(s(1), s(1), 1).unwrap(), 1);
        assert_eq!(quotient_dim(s(1), s(1), 5).unwrap(), 2);
        assert_eq!(quotient_dim(s(0), s(0), 0).unwrap(), 1);
    }

    #[test]
    fn annihilated_examples() {
        let p = |x: &[usize]| Partition::from_slice(x);
        assert_eq!(annihilated_simples(2, 2), vec![p(&[2]), p(&[1, 1])]);
        assert_eq!(annihilated_simples(0, 1), vec![p(&[1])]);
        assert!(annihilated_simples(5, 2).is_empty());
    }

    #[test]
    fn nondegenerate_off_integers() {
        for t0 in [crate::exactnum::rat(5, 2), crate::exactnum::rat(7, 3)] {
            for l in 0..=3 {
                for m in 0..=3 - l {
                    assert_eq!(gram(s(l), s(m), &t0).unwrap().nullity, 0);
                }
            }
        }
    }

    #[test]
    fn negligible_basis_is_negligible() {
        let mut rng = StdRng::seed_from_u64(3);
        for n in 0..=2 {
            let t0 = int(n);
            let basis = negligible_basis(s(2), s(1), &t0).unwrap();
            assert_eq!(basis.len(), 5 - quotient_dim(s(2), s(1), n as u64).unwrap());
            for b in &basis {
                assert!(is_negligible_at(b).unwrap());
                let k = rng.gen_range(0..=2);
                let g = crate::homspaces::random_morphism(&mut rng, s(1), s(k), 3).eval(&t0).unwrap();
                assert!(is_negligible_at(&g.compose(b).unwrap()).unwrap());
            }
        }
    }
}
