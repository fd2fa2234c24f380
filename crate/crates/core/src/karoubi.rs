//! Objects `([m], e)` of the Karoubian envelope: idempotent constructors,
//! multiplicities of indecomposables, decompositions and generic
//! dimensions of the simples `L(λ)`.
//!
//! Multiplicities come from Hom dimensions. For idempotents `e` on `X` and
//! `f` on `Y`, the map `g ↦ f g e` is an idempotent operator on the diagram
//! basis of `Hom(X, Y)`, so its trace is the dimension of
//! `Hom((X, e), (Y, f))`. In the generic (semisimple) category that number
//! is `Σ_λ mult_λ(X) · mult_λ(Y)`. Against the standard objects
//! `Y_λ = L(λ) ⊕ (smaller simples)` the system is triangular.

use std::collections::HashMap;
use std::fmt;
use std::sync::{OnceLock, RwLock};

use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::diagrams::enumerate::{bell, double_factorial};
use crate::diagrams::{enumerate_basis, Diagram, Flavor, ObjectSignature};
use crate::exactnum::{int, RatFunc, Rational};
use crate::homspaces::Morphism;
use crate::partition::{Bipartition, Partition};
use crate::{Error, Result};

/// Largest Hom basis the multiplicity routine will enumerate.
pub const BASIS_BUDGET: u64 = 250_000;

/// Index of a simple object: a partition for S and O, a bipartition for GL.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(untagged)]
pub enum SimpleLabel {
    Partition(Partition),
    Bipartition(Bipartition),
}

impl SimpleLabel {
    fn weight(&self) -> usize {
        match self {
            SimpleLabel::Partition(p) => p.size(),
            SimpleLabel::Bipartition(b) => b.black.size() + b.white.size(),
        }
    }

    fn check_flavor(&self, flavor: Flavor) -> Result<()> {
        match (self, flavor) {
            (SimpleLabel::Partition(_), Flavor::S | Flavor::O) | (SimpleLabel::Bipartition(_), Flavor::GL) => Ok(()),
            _ => Err(Error::FlavorMismatch(format!("label {self} does not index simples of Rep({flavor}_t)"))),
        }
    }
}

impl From<Partition> for SimpleLabel {
    fn from(p: Partition) -> Self {
        SimpleLabel::Partition(p)
    }
}

impl From<Bipartition> for SimpleLabel {
    fn from(b: Bipartition) -> Self {
        SimpleLabel::Bipartition(b)
    }
}

impl fmt::Display for SimpleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SimpleLabel::Partition(p) => write!(f, "{p}"),
            SimpleLabel::Bipartition(b) => write!(f, "{b}"),
        }
    }
}

/// A pair `(X, e)` with `e ∈ End(X)` idempotent.
#[derive(Clone, Debug, PartialEq)]
pub struct KaroubiObject {
    idem: Morphism,
}

impl KaroubiObject {
    pub fn new(idem: Morphism) -> Result<Self> {
        if !is_idempotent(&idem)? {
            return Err(Error::NotIdempotent);
        }
        Ok(KaroubiObject { idem: idem.to_e().into_owned() })
    }

    pub fn identity(sig: ObjectSignature) -> Self {
        KaroubiObject { idem: Morphism::identity(sig) }
    }

    pub fn sig(&self) -> ObjectSignature {
        self.idem.source()
    }

    pub fn idem(&self) -> &Morphism {
        &self.idem
    }

    /// Categorical dimension, `Tr(e)`.
    pub fn dimension(&self) -> RatFunc {
        self.idem.trace().expect("idempotents are endomorphisms")
    }
}

pub fn is_idempotent(f: &Morphism) -> Result<bool> {
    f.is_idempotent()
}

fn perm_diagram(sig: ObjectSignature, perm: &[usize]) -> Diagram {
    let n = perm.len();
    let mut raw = vec![0usize; 2 * n];
    for (i, &p) in perm.iter().enumerate() {
        raw[i] = i;
        raw[n + p] = i;
    }
    Diagram::from_raw(sig, sig, raw)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    crate::diagrams::enumerate::permutations(n)
}

fn sign(perm: &[usize]) -> i64 {
    let mut seen = vec![false; perm.len()];
    let mut s = 1;
    for i in 0..perm.len() {
        if seen[i] {
            continue;
        }
        let mut j = i;
        let mut len = 0;
        while !seen[j] {
            seen[j] = true;
            j = perm[j];
            len += 1;
        }
        if len % 2 == 0 {
            s = -s;
        }
    }
    s
}

/// Normalized Young symmetrizer `(f_λ / n!) Σ_{r ∈ R_λ, c ∈ C_λ} sgn(c) r c`
/// on `sig` (which must have `|λ|` points), for the row-reading tableau.
fn symmetrizer_on(sig: ObjectSignature, lambda: &Partition) -> Morphism {
    let n = lambda.size();
    debug_assert_eq!(sig.points(), n);
    let mut row_of = Vec::with_capacity(n);
    let mut col_of = Vec::with_capacity(n);
    for (i, &len) in lambda.parts().iter().enumerate() {
        for j in 0..len {
            row_of.push(i);
            col_of.push(j);
        }
    }
    let perms = permutations(n);
    let rows: Vec<&Vec<usize>> = perms.iter().filter(|p| p.iter().enumerate().all(|(i, &x)| row_of[i] == row_of[x])).collect();
    let cols: Vec<&Vec<usize>> = perms.iter().filter(|p| p.iter().enumerate().all(|(i, &x)| col_of[i] == col_of[x])).collect();
    let t = RatFunc::t();
    let a = Morphism::from_terms(sig, sig, t.clone(), crate::homspaces::Basis::E, rows.iter().map(|p| (perm_diagram(sig, p), RatFunc::one())))
        .expect("row permutations live in End");
    let b = Morphism::from_terms(
        sig,
        sig,
        t,
        crate::homspaces::Basis::E,
        cols.iter().map(|p| (perm_diagram(sig, p), RatFunc::from_i64(sign(p)))),
    )
    .expect("column permutations live in End");
    let mut factorial = num_bigint::BigInt::one();
    for k in 2..=n {
        factorial *= k;
    }
    let norm = Rational::new(lambda.hook_dimension(), factorial);
    a.compose(&b).expect("same object").scale(&RatFunc::from_rational(norm))
}

/// `y_λ ∈ End([|λ|])` in `Rep(S_t)`.
pub fn young_symmetrizer(lambda: &Partition) -> Morphism {
    symmetrizer_on(ObjectSignature::s(lambda.size()), lambda)
}

/// `y_λ` on `[|λ|]` for S/O, and on the black object `[|λ|, 0]` for GL.
pub fn young_symmetrizer_for(flavor: Flavor, lambda: &Partition) -> Morphism {
    symmetrizer_on(ObjectSignature { flavor, black: lambda.size(), white: 0 }, lambda)
}

/// `y_{λ•} ⊗ y_{λ∘}` on `[|λ•|, |λ∘|]`.
pub fn bipartition_symmetrizer(lambda: &Bipartition) -> Morphism {
    let b = symmetrizer_on(ObjectSignature::gl(lambda.black.size(), 0), &lambda.black);
    let w = symmetrizer_on(ObjectSignature::gl(0, lambda.white.size()), &lambda.white);
    b.tensor(&w).expect("both GL")
}

/// Strands `1..n−2` and the block `{n−1, n, (n−1)', n'}`.
pub fn special_p(n: usize) -> Result<Morphism> {
    if n <= 1 {
        return Err(Error::InvalidArgument(format!("special p needs n > 1, got {n}")));
    }
    let mut blocks: Vec<Vec<i64>> = (1..=n as i64 - 2).map(|i| vec![i, -i]).collect();
    let (a, b) = (n as i64 - 1, n as i64);
    blocks.push(vec![a, b, -a, -b]);
    Ok(Morphism::from_diagram(Diagram::partition(n, n, &blocks)?))
}

/// The data of a promotion: the new idempotent and an explicit isomorphism
/// `([n], f̃) ≅ ([n−1], f)`.
#[derive(Clone, Debug)]
pub struct Promotion {
    pub idem: Morphism,
    /// `([n], f̃) → ([n−1], f)`.
    pub down: Morphism,
    /// `([n−1], f) → ([n], f̃)`.
    pub up: Morphism,
}

/// `φ: small → big` and `φ': big → small` with `φ'φ = c · id`.
fn phi_pair(small: ObjectSignature, t_is_zero: bool) -> Result<(Morphism, Morphism, RatFunc)> {
    let t = RatFunc::t();
    match small.flavor {
        Flavor::S => {
            let m = small.black;
            let big = ObjectSignature::s(m + 1);
            if m == 0 {
                if t_is_zero {
                    return Err(Error::Unsupported("at t = 0 the unit is not a summand of [1]".into()));
                }
                let mu = Diagram::partition(0, 1, &[vec![-1]])?;
                return Ok((Morphism::from_diagram(mu.clone()), Morphism::from_diagram(mu.flip()), t));
            }
            let mut blocks: Vec<Vec<i64>> = (1..m as i64).map(|i| vec![i, -i]).collect();
            let k = m as i64;
            blocks.push(vec![k, -k, -(k + 1)]);
            let phi = Diagram::from_signed_blocks(small, big, &blocks)?;
            Ok((Morphism::from_diagram(phi.clone()), Morphism::from_diagram(phi.flip()), RatFunc::one()))
        }
        Flavor::GL => {
            let (r, s) = (small.black as i64, small.white as i64);
            let big = ObjectSignature::gl(small.black + 1, small.white + 1);
            // Big points: blacks 1..=r+1, whites r+2..=r+s+2; the new black
            // is r+1 and the new white is r+s+2.
            let (nb, nw) = (r + 1, r + s + 2);
            let straight = |i: i64| -> [i64; 2] {
                if i <= r {
                    [i, -i]
                } else {
                    [i, -(i + 1)]
                }
            };
            // φ': big → small, identity on old strands plus a cap on (nb, nw).
            let mut phi_prime: Vec<[i64; 2]> = (1..=r + s)
                .map(|i| {
                    let [a, b] = straight(i);
                    [-b, -a]
                })
                .collect();
            phi_prime.push([nb, nw]);
            let phi_prime = Diagram::walled(
                (big.black, big.white),
                (small.black, small.white),
                &phi_prime,
            )?;
            let (phi, c) = if !t_is_zero {
                let mut pairs: Vec<[i64; 2]> = (1..=r + s).map(straight).collect();
                pairs.push([-nb, -nw]);
                (Diagram::walled((small.black, small.white), (big.black, big.white), &pairs)?, t)
            } else {
                // Route one old strand through the new pair so that the cap
                // of φ' straightens it instead of closing a loop.
                let mut pairs: Vec<[i64; 2]> = Vec::new();
                let routed = if s >= 1 {
                    r + s
                } else if r >= 1 {
                    r
                } else {
                    return Err(Error::Unsupported("at t = 0 the unit is not a summand of [1, 1]".into()));
                };
                for i in 1..=r + s {
                    let [a, b] = straight(i);
                    if i == routed {
                        if i > r {
                            pairs.push([a, -nw]);
                            pairs.push([b, -nb]);
                        } else {
                            pairs.push([a, -nb]);
                            pairs.push([b, -nw]);
                        }
                    } else {
                        pairs.push([a, b]);
                    }
                }
                (Diagram::walled((small.black, small.white), (big.black, big.white), &pairs)?, RatFunc::one())
            };
            Ok((Morphism::from_diagram(phi), Morphism::from_diagram(phi_prime), c))
        }
        Flavor::O => Err(Error::Unsupported("promotion is implemented for the S and GL flavors".into())),
    }
}

/// `f̃ = (1/c) φ f φ'` one size up, with `φ'φ = c · id`.
pub fn promote(f: &Morphism, t_is_zero: bool) -> Result<Morphism> {
    Ok(promotion(f, t_is_zero)?.idem)
}

pub fn promotion(f: &Morphism, t_is_zero: bool) -> Result<Promotion> {
    if !is_idempotent(f)? {
        return Err(Error::NotIdempotent);
    }
    let (phi, phi_prime, c) = phi_pair(f.source(), t_is_zero)?;
    let inv_c = RatFunc::one().checked_div(&c)?;
    let idem = phi.compose(f)?.compose(&phi_prime)?.scale(&inv_c);
    let down = f.compose(&phi_prime)?.compose(&idem)?.scale(&inv_c);
    let up = idem.compose(&phi)?.compose(f)?;
    Ok(Promotion { idem, down, up })
}

/// `Y_λ`: the object whose top simple constituent is `L(λ)`.
pub fn standard_object(flavor: Flavor, label: &SimpleLabel) -> Result<KaroubiObject> {
    label.check_flavor(flavor)?;
    let idem = match label {
        SimpleLabel::Partition(p) => young_symmetrizer_for(flavor, p),
        SimpleLabel::Bipartition(b) => bipartition_symmetrizer(b),
    };
    Ok(KaroubiObject { idem })
}

fn basis_size(src: ObjectSignature, tgt: ObjectSignature) -> u64 {
    let n = src.points() + tgt.points();
    match src.flavor {
        Flavor::S => bell(n),
        Flavor::O => double_factorial(n),
        Flavor::GL => {
            if src.black + tgt.white != tgt.black + src.white {
                0
            } else {
                (1..=(src.black + tgt.white) as u64).product()
            }
        }
    }
}

/// Trace of `g ↦ f g e` on the diagram basis of `Hom(X, Y)`, at one point.
fn hom_dim_at(e: &Morphism<Rational>, f: &Morphism<Rational>) -> Result<Rational> {
    let basis = enumerate_basis(e.source(), f.source());
    let t0 = e.param().clone();
    let max_loops = e.source().points() + 2 * f.source().points() + 1;
    let powers: Vec<Rational> = (0..=max_loops as u32).map(|k| crate::exactnum::rat_pow(&t0, k)).collect();
    let e_terms: Vec<(&Diagram, &Rational)> = e.terms().collect();
    let f_terms: Vec<(&Diagram, &Rational)> = f.terms().collect();
    Ok(basis
        .par_iter()
        .map(|d| {
            let mut acc = <Rational as Zero>::zero();
            for (ed, ec) in &e_terms {
                let (de, n1) = d.compose_unchecked(ed);
                for (fd, fc) in &f_terms {
                    let (fde, n2) = fd.compose_unchecked(&de);
                    if &fde == d {
                        acc += *ec * *fc * &powers[(n1 + n2) as usize];
                    }
                }
            }
            acc
        })
        .reduce(<Rational as Zero>::zero, |a, b| a + b))
}

fn as_count(x: &Rational) -> Result<usize> {
    if !x.is_integer() || x.is_negative() {
        return Err(Error::NonGeneric(format!("Hom dimension evaluated to {x}")));
    }
    x.to_integer().to_usize().ok_or_else(|| Error::Budget("multiplicity overflow".into()))
}

/// Seeded evaluation points with large numerators and denominators.
fn generic_points() -> impl Iterator<Item = Rational> {
    let mut rng = StdRng::seed_from_u64(0x1d3a_5eed);
    std::iter::repeat_with(move || {
        let p: i64 = rng.gen_range(1_000_003..9_999_991);
        let q: i64 = rng.gen_range(10_007..99_991);
        Rational::new(p.into(), q.into())
    })
}

/// `dim Hom(X, Y)` in the generic category, certified by two points.
pub fn hom_dim(x: &KaroubiObject, y: &KaroubiObject, t0: Option<&Rational>) -> Result<usize> {
    if x.sig().flavor != y.sig().flavor {
        return Err(Error::FlavorMismatch(format!("{} vs {}", x.sig(), y.sig())));
    }
    let size = basis_size(x.sig(), y.sig());
    if size == 0 {
        return Ok(0);
    }
    if size > BASIS_BUDGET {
        return Err(Error::Budget(format!("Hom({}, {}) has {size} basis diagrams", x.sig(), y.sig())));
    }
    let mut values = Vec::new();
    let candidates = t0.cloned().into_iter().chain(generic_points());
    for (attempt, p) in candidates.enumerate() {
        if attempt > 8 {
            break;
        }
        let (Ok(e), Ok(f)) = (x.idem.eval(&p), y.idem.eval(&p)) else {
            if t0 == Some(&p) {
                return Err(Error::Pole(format!("idempotent has a pole at t = {p}")));
            }
            continue;
        };
        values.push(hom_dim_at(&e, &f)?);
        if values.len() == 2 {
            break;
        }
    }
    if values.len() < 2 {
        return Err(Error::NonGeneric("could not find two regular evaluation points".into()));
    }
    if values[0] != values[1] {
        return Err(Error::NonGeneric(format!(
            "Hom dimension differs between evaluation points ({} vs {})",
            values[0], values[1]
        )));
    }
    as_count(&values[0])
}

/// Candidate simple constituents of objects on `sig`, by increasing weight.
fn labels_for(sig: ObjectSignature) -> Vec<SimpleLabel> {
    match sig.flavor {
        Flavor::S => Partition::all_up_to(sig.black).into_iter().map(SimpleLabel::from).collect(),
        Flavor::O => (0..=sig.black)
            .filter(|k| (sig.black - k).is_multiple_of(2))
            .flat_map(Partition::all_of_size)
            .map(SimpleLabel::from)
            .collect(),
        Flavor::GL => Bipartition::all_below(sig.black, sig.white).into_iter().map(SimpleLabel::from).collect(),
    }
}

fn label_sig(flavor: Flavor, label: &SimpleLabel) -> ObjectSignature {
    match label {
        SimpleLabel::Partition(p) => ObjectSignature { flavor, black: p.size(), white: 0 },
        SimpleLabel::Bipartition(b) => ObjectSignature::gl(b.black.size(), b.white.size()),
    }
}

type LowerTable = HashMap<(Flavor, SimpleLabel), Vec<(SimpleLabel, usize)>>;

fn lower_memo() -> &'static RwLock<LowerTable> {
    static MEMO: OnceLock<RwLock<LowerTable>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// Constituents of `Y_λ` other than `L(λ)` itself.
fn lower_parts(flavor: Flavor, label: &SimpleLabel) -> Result<Vec<(SimpleLabel, usize)>> {
    let key = (flavor, label.clone());
    if let Some(v) = lower_memo().read().expect("memo lock").get(&key) {
        return Ok(v.clone());
    }
    let y = standard_object(flavor, label)?;
    let below: Vec<SimpleLabel> = labels_for(label_sig(flavor, label)).into_iter().filter(|l| l.weight() < label.weight()).collect();
    let parts = solve(&y, &below, None)?;
    lower_memo().write().expect("memo lock").insert(key, parts.clone());
    Ok(parts)
}

/// Triangular solve for the multiplicities of `labels` (sorted by weight)
/// in `x`.
fn solve(x: &KaroubiObject, labels: &[SimpleLabel], t0: Option<&Rational>) -> Result<Vec<(SimpleLabel, usize)>> {
    let flavor = x.sig().flavor;
    let mut found: HashMap<SimpleLabel, usize> = HashMap::new();
    let mut out = Vec::new();
    for label in labels {
        let y = standard_object(flavor, label)?;
        let h = hom_dim(x, &y, t0)? as i64;
        let mut m = h;
        for (nu, a) in lower_parts(flavor, label)? {
            m -= (a * found.get(&nu).copied().unwrap_or(0)) as i64;
        }
        if m < 0 {
            return Err(Error::NonGeneric(format!("negative multiplicity {m} for {label}")));
        }
        found.insert(label.clone(), m as usize);
        if m > 0 {
            out.push((label.clone(), m as usize));
        }
    }
    Ok(out)
}

/// Multiplicity of `L(λ)` in `X` in the generic category. `t0`, when given,
/// is used as the first evaluation point.
pub fn multiplicity(x: &KaroubiObject, label: &SimpleLabel, t0: Option<&Rational>) -> Result<usize> {
    let flavor = x.sig().flavor;
    label.check_flavor(flavor)?;
    let labels: Vec<SimpleLabel> = labels_for(x.sig()).into_iter().filter(|l| l.weight() <= label.weight()).collect();
    if !labels.contains(label) {
        return Ok(0);
    }
    Ok(solve(x, &labels, t0)?.into_iter().find(|(l, _)| l == label).map_or(0, |(_, m)| m))
}

/// The multiset of simple constituents of `X`.
pub fn decompose(x: &KaroubiObject) -> Result<Vec<(SimpleLabel, usize)>> {
    solve(x, &labels_for(x.sig()), None)
}

type DimTable = HashMap<(Flavor, SimpleLabel), RatFunc>;

fn dim_memo() -> &'static RwLock<DimTable> {
    static MEMO: OnceLock<RwLock<DimTable>> = OnceLock::new();
    MEMO.get_or_init(Default::default)
}

/// Generic dimension of `L(λ)`: `Tr(y_λ)` minus the lower constituents.
pub fn dim_simple(label: &SimpleLabel, flavor: Flavor) -> Result<RatFunc> {
    label.check_flavor(flavor)?;
    let key = (flavor, label.clone());
    if let Some(d) = dim_memo().read().expect("memo lock").get(&key) {
        return Ok(d.clone());
    }
    let mut d = standard_object(flavor, label)?.dimension();
    for (nu, a) in lower_parts(flavor, label)? {
        d = &d - &(&dim_simple(&nu, flavor)? * &RatFunc::from_i64(a as i64));
    }
    dim_memo().write().expect("memo lock").insert(key, d.clone());
    Ok(d)
}

/// `n! / ∏ hooks` of `(n − |λ|, λ)`, zero when that is not a partition.
pub fn hook_length_oracle(lambda: &Partition, n: usize) -> Rational {
    match lambda.padded(n) {
        Some(p) => Rational::from_integer(p.hook_dimension()),
        None => int(0),
    }
}

/// Weyl dimension of the GL_n irreducible with highest weight
/// `(λ•_1, …, 0, …, −λ∘_1)`.
pub fn weyl_dimension_oracle(lambda: &Bipartition, n: usize) -> Rational {
    let Some(w) = lambda.gl_weight(n) else {
        return int(0);
    };
    let mut d = <Rational as One>::one();
    for i in 0..n {
        for j in i + 1..n {
            d *= Rational::new((w[i] - w[j] + (j - i) as i64).into(), ((j - i) as i64).into());
        }
    }
    d
}
