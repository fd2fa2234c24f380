//! Classical realization at `t = n`: diagrams as explicit matrices on
//! `V^{⊗m}` (S, O) or `V^{⊗r} ⊗ V*^{⊗s}` (GL) with `dim V = n`.
//!
//! Index tuples are read row-major with the first tensor factor as the most
//! significant digit. Entry `(j, i)` of the matrix of `Hom(X, Y)` pairs the
//! target tuple `j` with the source tuple `i`.

use rayon::prelude::*;
use serde::Serialize;

use crate::diagrams::{enumerate_basis, Diagram, Flavor, ObjectSignature};
use crate::exactnum::Rational;
use crate::homspaces::Morphism;
use crate::karoubi::KaroubiObject;
use crate::linalg::{self, Matrix};
use crate::scalar::Scalar;
use crate::{Error, Result};

pub type DenseMatrix = Matrix<Rational>;

/// Largest number of entries `n^{l+m}` a single matrix may have.
pub const ENTRY_BUDGET: u64 = 1_000_000;

fn check_budget(points: usize, n: u64) -> Result<()> {
    let entries = n.checked_pow(points as u32).unwrap_or(u64::MAX);
    if entries > ENTRY_BUDGET {
        return Err(Error::Budget(format!("{n}^{points} = {entries} matrix entries exceed {ENTRY_BUDGET}")));
    }
    Ok(())
}

/// Integer matrix of a diagram: 1 where the index tuple is constant on
/// every block (`strict` also demands distinct values on distinct blocks).
fn pattern_matrix(d: &Diagram, n: u64, strict: bool) -> Vec<i64> {
    let (l, m) = (d.source().points(), d.target().points());
    let n = n as usize;
    let cols = n.pow(l as u32);
    let rows = n.pow(m as u32);
    let mut out = vec![0i64; rows * cols];
    let labels = d.labels();
    let b = d.num_blocks();
    if strict && b > n {
        return out;
    }
    let mut values = vec![0usize; b];
    let total = n.checked_pow(b as u32).unwrap_or(0);
    if n == 0 && b > 0 {
        return out;
    }
    for code in 0..total {
        let mut c = code;
        for v in values.iter_mut().rev() {
            *v = c % n;
            c /= n;
        }
        if strict {
            let mut seen = vec![false; n];
            if values.iter().any(|&v| std::mem::replace(&mut seen[v], true)) {
                continue;
            }
        }
        let mut i = 0;
        for k in 0..l {
            i = i * n + values[labels[k] as usize];
        }
        let mut j = 0;
        for k in 0..m {
            j = j * n + values[labels[l + k] as usize];
        }
        out[j * cols + i] += 1;
    }
    out
}

fn to_dense(rows: usize, cols: usize, v: Vec<i64>) -> DenseMatrix {
    Matrix { rows, cols, data: v.into_iter().map(|v| Rational::from_integer(v.into())).collect() }
}

fn shape(d: &Diagram, n: u64) -> (usize, usize) {
    let n = n as usize;
    (n.pow(d.target().points() as u32), n.pow(d.source().points() as u32))
}

/// Matrix of the relaxed-pattern basis element `e_P` (for matchings, the
/// contraction of identity, cup and cap factors).
pub fn e_matrix(d: &Diagram, n: u64) -> Result<DenseMatrix> {
    check_budget(d.source().points() + d.target().points(), n)?;
    let (r, c) = shape(d, n);
    Ok(to_dense(r, c, pattern_matrix(d, n, false)))
}

/// Matrix of the strict-pattern element `δ_P` (S flavor only).
pub fn delta_matrix(d: &Diagram, n: u64) -> Result<DenseMatrix> {
    if d.flavor() != Flavor::S {
        return Err(Error::Unsupported("δ matrices exist for the S flavor only".into()));
    }
    check_budget(d.source().points() + d.target().points(), n)?;
    let (r, c) = shape(d, n);
    Ok(to_dense(r, c, pattern_matrix(d, n, true)))
}

/// Matrix of a morphism at `t = n`.
pub fn morphism_matrix(f: &Morphism, n: u64) -> Result<DenseMatrix> {
    let fe = f.to_e();
    let g = fe.eval(&Rational::from_integer(n.into())).map_err(|e| match e {
        Error::Pole(_) => Error::Pole(format!("idempotent not defined at t = {n}")),
        other => other,
    })?;
    let (src, tgt) = (f.source(), f.target());
    check_budget(src.points() + tgt.points(), n)?;
    let nn = n as usize;
    let rows = nn.pow(tgt.points() as u32);
    let cols = nn.pow(src.points() as u32);
    let mut out = Matrix::<Rational>::zeros(rows, cols);
    for (d, c) in g.terms() {
        for (k, v) in pattern_matrix(d, n, false).into_iter().enumerate() {
            if v != 0 {
                out.data[k] = out.data[k].add(&c.mul(&Rational::from_integer(v.into())));
            }
        }
    }
    Ok(out)
}

fn int_mul(a: &[i64], b: &[i64], rows: usize, inner: usize, cols: usize) -> Vec<i64> {
    let mut out = vec![0i64; rows * cols];
    for i in 0..rows {
        for k in 0..inner {
            let x = a[i * inner + k];
            if x == 0 {
                continue;
            }
            for j in 0..cols {
                out[i * cols + j] += x * b[k * cols + j];
            }
        }
    }
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct PairCheck {
    pub outer: String,
    pub inner: String,
    pub loops: u32,
    pub pass: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct StructureReport {
    pub flavor: Flavor,
    pub source: String,
    pub middle: String,
    pub target: String,
    pub n: u64,
    pub checked: usize,
    pub violations: usize,
    pub pairs: Vec<PairCheck>,
}

/// Checks `M(P) M(Q) = n^{N(P, Q)} M(P * Q)` for every `Q: a → b`,
/// `P: b → c` in the diagram bases.
pub fn verify_structure_constants(a: ObjectSignature, b: ObjectSignature, c: ObjectSignature, n: u64) -> Result<StructureReport> {
    if a.flavor != b.flavor || b.flavor != c.flavor {
        return Err(Error::FlavorMismatch(format!("{a}, {b}, {c}")));
    }
    for (x, y) in [(a, b), (b, c), (a, c)] {
        check_budget(x.points() + y.points(), n)?;
    }
    let nn = n as usize;
    let (da, db, dc) = (nn.pow(a.points() as u32), nn.pow(b.points() as u32), nn.pow(c.points() as u32));
    let inner_basis = enumerate_basis(a, b);
    let outer_basis = enumerate_basis(b, c);
    let inner_m: Vec<Vec<i64>> = inner_basis.iter().map(|q| pattern_matrix(q, n, false)).collect();
    let outer_m: Vec<Vec<i64>> = outer_basis.iter().map(|p| pattern_matrix(p, n, false)).collect();
    let pairs: Vec<PairCheck> = (0..outer_basis.len() * inner_basis.len())
        .into_par_iter()
        .map(|idx| {
            let (pi, qi) = (idx / inner_basis.len(), idx % inner_basis.len());
            let (p, q) = (&outer_basis[pi], &inner_basis[qi]);
            let (pq, loops) = p.compose_unchecked(q);
            let lhs = int_mul(&outer_m[pi], &inner_m[qi], dc, db, da);
            let scale = (n as i64).pow(loops);
            let rhs = pattern_matrix(&pq, n, false);
            let pass = lhs.iter().zip(&rhs).all(|(x, y)| *x == scale * y);
            PairCheck { outer: p.to_string(), inner: q.to_string(), loops, pass }
        })
        .collect();
    let violations = pairs.iter().filter(|p| !p.pass).count();
    Ok(StructureReport {
        flavor: a.flavor,
        source: a.to_string(),
        middle: b.to_string(),
        target: c.to_string(),
        n,
        checked: pairs.len(),
        violations,
        pairs,
    })
}

/// Dimension of the span of the diagram matrices in `Hom(V^{⊗src}, V^{⊗tgt})`,
/// which is the classical Hom dimension of the group.
pub fn hom_dim_classical(src: ObjectSignature, tgt: ObjectSignature, n: u64) -> Result<usize> {
    if src.flavor != tgt.flavor {
        return Err(Error::FlavorMismatch(format!("{src} vs {tgt}")));
    }
    check_budget(src.points() + tgt.points(), n)?;
    let basis = enumerate_basis(src, tgt);
    let width = (n as usize).pow((src.points() + tgt.points()) as u32);
    if basis.is_empty() || width == 0 {
        return Ok(0);
    }
    let data: Vec<Rational> = basis
        .iter()
        .flat_map(|d| pattern_matrix(d, n, d.flavor() == Flavor::S))
        .map(|v| Rational::from_integer(v.into()))
        .collect();
    Ok(linalg::rank(basis.len(), width, data))
}

/// Rank of the matrix of `X`'s idempotent at `t = n`, the dimension of its
/// image under the interpolation functor.
pub fn functor_image_rank(x: &KaroubiObject, n: u64) -> Result<usize> {
    Ok(morphism_matrix(x.idem(), n)?.rank())
}

/// `Σ c_P(n) M(e_P)` for a symbolic morphism, convenience for checks that
/// compare against `trace` values.
pub fn trace_at(f: &Morphism, n: u64) -> Result<Rational> {
    let m = morphism_matrix(f, n)?;
    if m.rows != m.cols {
        return Err(Error::NotEndomorphism(format!("{} -> {}", f.source(), f.target())));
    }
    Ok((0..m.rows).fold(<Rational as Scalar>::zero(), |acc, i| acc.add(m.get(i, i))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::int;
    use crate::karoubi::{young_symmetrizer, KaroubiObject};
    use crate::partition::Partition;

    fn s(m: usize) -> ObjectSignature {
        ObjectSignature::s(m)
    }

    fn pi() -> Diagram {
        Diagram::partition(1, 1, &[vec![1], vec![-1]]).unwrap()
    }

    #[test]
    fn small_matrices() {
        let n = 3;
        let e = e_matrix(&pi(), n).unwrap();
        assert!(e.data.iter().all(|x| *x == int(1)));
        let d = delta_matrix(&pi(), n).unwrap();
        for i in 0..3 {
            for j in 0..3 {
                assert_eq!(d.get(i, j), &int(if i == j { 0 } else { 1 }));
            }
        }
        assert_eq!(e_matrix(&Diagram::identity(s(1)), n).unwrap(), Matrix::identity(3));
        assert!(delta_matrix(&Diagram::identity(ObjectSignature::o(1)), 2).is_err());
    }

    #[test]
    fn e_is_sum_of_delta() {
        for d in enumerate_basis(s(2), s(1)) {
            for n in 1..=3 {
                let e = e_matrix(&d, n).unwrap();
                let mut sum = Matrix::<Rational>::zeros(e.rows, e.cols);
                for c in d.coarsenings() {
                    let dm = delta_matrix(&c, n).unwrap();
                    for k in 0..sum.data.len() {
                        sum.data[k] = sum.data[k].add(&dm.data[k]);
                    }
                }
                assert_eq!(sum, e);
            }
        }
    }

    #[test]
    fn structure_constants_small() {
        for n in 1..=3 {
            let r = verify_structure_constants(s(1), s(1), s(1), n).unwrap();
            assert_eq!(r.violations, 0);
            assert_eq!(r.checked, 4);
        }
        let g = ObjectSignature::gl(1, 1);
        let r = verify_structure_constants(g, g, g, 1).unwrap();
        assert_eq!(r.violations, 0);
        let o = ObjectSignature::o(2);
        assert_eq!(verify_structure_constants(o, o, o, 3).unwrap().violations, 0);
    }

    #[test]
    fn classical_hom_dims() {
        assert_eq!(hom_dim_classical(s(2), s(2), 2).unwrap(), 8);
        assert_eq!(hom_dim_classical(s(1), s(1), 2).unwrap(), 2);
        assert_eq!(hom_dim_classical(ObjectSignature::gl(2, 0), ObjectSignature::gl(2, 0), 1).unwrap(), 1);
        assert_eq!(hom_dim_classical(s(0), s(0), 0).unwrap(), 1);
        assert_eq!(hom_dim_classical(s(1), s(1), 0).unwrap(), 0);
        for l in 0..=2 {
            for m in 0..=2 {
                assert_eq!(hom_dim_classical(s(l), s(m), (l + m) as u64).unwrap() as u64, crate::diagrams::bell(l + m));
            }
        }
        assert!(hom_dim_classical(s(5), s(5), 4).is_err());
    }

    #[test]
    fn functor_images() {
        let piq = Morphism::from_diagram(pi()).scale(&"1/t".parse().unwrap());
        let std = KaroubiObject::new(Morphism::identity(s(1)).sub(&piq).unwrap()).unwrap();
        assert_eq!(functor_image_rank(&std, 4).unwrap(), 3);
        assert!(matches!(functor_image_rank(&KaroubiObject::new(piq).unwrap(), 0), Err(Error::Pole(_))));
        let sym = KaroubiObject::new(young_symmetrizer(&Partition::from_slice(&[2]))).unwrap();
        assert_eq!(functor_image_rank(&sym, 3).unwrap(), 6);
        for n in 0..4 {
            assert_eq!(functor_image_rank(&KaroubiObject::identity(s(0)), n).unwrap(), 1);
        }
        assert_eq!(trace_at(sym.idem(), 3).unwrap(), int(6));
    }
}
