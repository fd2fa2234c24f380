//! Diagram bases of the three flavors and their combinatorial kernels.
//!
//! Every diagram is a set partition of the endpoints of its source row
//! followed by its target row, stored as a restricted growth string: endpoint
//! `i` carries the index of its block, and blocks are numbered in order of
//! their smallest endpoint. Source endpoints come first (`1..l`, written as
//! positive integers in JSON), then target endpoints (`1'..m'`, negative).
//!
//! * `S` diagrams may have blocks of any size.
//! * `O` (Brauer) diagrams are perfect matchings.
//! * `GL` (walled) diagrams are perfect matchings on rows colored
//!   black (V) then white (V*); through-strands join equal colors and
//!   cups/caps join opposite colors.

pub mod enumerate;
mod unionfind;

use std::fmt;

use serde::{Deserialize, Serialize};

pub use enumerate::{bell, double_factorial, enumerate_basis, set_partitions};
pub use unionfind::UnionFind;

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Flavor {
    S,
    GL,
    O,
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Flavor::S => "S",
            Flavor::GL => "GL",
            Flavor::O => "O",
        })
    }
}

impl std::str::FromStr for Flavor {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "S" | "s" => Ok(Flavor::S),
            "GL" | "gl" => Ok(Flavor::GL),
            "O" | "o" => Ok(Flavor::O),
            _ => Err(Error::Parse(format!("unknown flavor {s:?} (expected S, GL or O)"))),
        }
    }
}

/// An object `[m]` (flavors S and O) or `[r, s]` (flavor GL).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ObjectSignature {
    pub flavor: Flavor,
    /// `m` for S/O; number of V factors for GL.
    pub black: usize,
    /// Number of V* factors; always 0 for S/O.
    pub white: usize,
}

impl ObjectSignature {
    pub fn s(m: usize) -> Self {
        ObjectSignature { flavor: Flavor::S, black: m, white: 0 }
    }

    pub fn o(m: usize) -> Self {
        ObjectSignature { flavor: Flavor::O, black: m, white: 0 }
    }

    pub fn gl(r: usize, s: usize) -> Self {
        ObjectSignature { flavor: Flavor::GL, black: r, white: s }
    }

    pub fn new(flavor: Flavor, black: usize, white: usize) -> Result<Self> {
        if flavor != Flavor::GL && white != 0 {
            return Err(Error::InvalidArgument(format!("{flavor} objects have no white points")));
        }
        Ok(ObjectSignature { flavor, black, white })
    }

    pub fn unit(flavor: Flavor) -> Self {
        ObjectSignature { flavor, black: 0, white: 0 }
    }

    pub fn points(&self) -> usize {
        self.black + self.white
    }

    pub fn is_black(&self, i: usize) -> bool {
        i < self.black
    }

    /// `[m]* = [m]`, `[r, s]* = [s, r]`.
    pub fn dual(&self) -> Self {
        match self.flavor {
            Flavor::GL => ObjectSignature::gl(self.white, self.black),
            _ => *self,
        }
    }

    pub fn tensor(&self, other: &Self) -> Result<Self> {
        if self.flavor != other.flavor {
            return Err(Error::FlavorMismatch(format!("{} vs {}", self.flavor, other.flavor)));
        }
        Ok(ObjectSignature {
            flavor: self.flavor,
            black: self.black + other.black,
            white: self.white + other.white,
        })
    }

    pub(crate) fn left_slot(&self, other: &Self, i: usize) -> usize {
        if i < self.black {
            i
        } else {
            self.black + other.black + (i - self.black)
        }
    }

    /// Sorted position of factor `i` of `other` inside `self ⊗ other`.
    pub(crate) fn right_slot(&self, other: &Self, i: usize) -> usize {
        if i < other.black {
            self.black + i
        } else {
            self.black + other.black + self.white + (i - other.black)
        }
    }
}

impl fmt::Display for ObjectSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.flavor {
            Flavor::GL => write!(f, "[{}, {}]", self.black, self.white),
            _ => write!(f, "[{}]", self.black),
        }
    }
}

/// One endpoint of a diagram, 1-based as in the drawings: `Top(i)` is the
/// source point `i`, `Bottom(j)` the target point `j'`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Endpoint {
    Top(usize),
    Bottom(usize),
}

impl Endpoint {
    /// JSON convention: `i` for top points, `-j` for bottom points.
    pub fn from_signed(x: i64) -> Result<Self> {
        match x {
            0 => Err(Error::InvalidDiagram("endpoint 0 does not exist".into())),
            x if x > 0 => Ok(Endpoint::Top(x as usize)),
            x => Ok(Endpoint::Bottom((-x) as usize)),
        }
    }

    pub fn to_signed(self) -> i64 {
        match self {
            Endpoint::Top(i) => i as i64,
            Endpoint::Bottom(j) => -(j as i64),
        }
    }
}

/// A basis diagram of `Hom(src, tgt)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Diagram {
    src: ObjectSignature,
    tgt: ObjectSignature,
    labels: Vec<u16>,
}

/// Relabels block ids into a restricted growth string.
fn canonical_labels(raw: impl IntoIterator<Item = usize>) -> Vec<u16> {
    let mut map: Vec<(usize, u16)> = Vec::new();
    raw.into_iter()
        .map(|r| match map.iter().find(|(k, _)| *k == r) {
            Some(&(_, v)) => v,
            None => {
                let v = map.len() as u16;
                map.push((r, v));
                v
            }
        })
        .collect()
}

impl Diagram {
    /// Builds a diagram from raw blocks, validating coverage and the
    /// flavor's shape rules.
    pub fn from_blocks(src: ObjectSignature, tgt: ObjectSignature, blocks: &[Vec<Endpoint>]) -> Result<Self> {
        if src.flavor != tgt.flavor {
            return Err(Error::FlavorMismatch(format!("{} vs {}", src.flavor, tgt.flavor)));
        }
        let n = src.points() + tgt.points();
        let mut owner = vec![usize::MAX; n];
        for (b, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(Error::InvalidDiagram("empty block".into()));
            }
            for &e in block {
                let idx = match e {
                    Endpoint::Top(i) if (1..=src.points()).contains(&i) => i - 1,
                    Endpoint::Bottom(j) if (1..=tgt.points()).contains(&j) => src.points() + j - 1,
                    _ => return Err(Error::InvalidDiagram(format!("endpoint {} out of range", e.to_signed()))),
                };
                if owner[idx] != usize::MAX {
                    return Err(Error::InvalidDiagram(format!("endpoint {} appears twice", e.to_signed())));
                }
                owner[idx] = b;
            }
        }
        if let Some(missing) = owner.iter().position(|&o| o == usize::MAX) {
            let e = if missing < src.points() {
                Endpoint::Top(missing + 1)
            } else {
                Endpoint::Bottom(missing - src.points() + 1)
            };
            return Err(Error::InvalidDiagram(format!("endpoint {} not covered", e.to_signed())));
        }
        let d = Diagram { src, tgt, labels: canonical_labels(owner) };
        d.validate()?;
        Ok(d)
    }

    /// Convenience for signed-integer blocks (`i` top, `-j` bottom).
    pub fn from_signed_blocks(src: ObjectSignature, tgt: ObjectSignature, blocks: &[Vec<i64>]) -> Result<Self> {
        let blocks = blocks
            .iter()
            .map(|b| b.iter().map(|&x| Endpoint::from_signed(x)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Self::from_blocks(src, tgt, &blocks)
    }

    /// S-flavor partition diagram from `l` to `m`.
    pub fn partition(l: usize, m: usize, blocks: &[Vec<i64>]) -> Result<Self> {
        Self::from_signed_blocks(ObjectSignature::s(l), ObjectSignature::s(m), blocks)
    }

    /// O-flavor Brauer diagram from `l` to `m`.
    pub fn brauer(l: usize, m: usize, pairs: &[[i64; 2]]) -> Result<Self> {
        let blocks: Vec<Vec<i64>> = pairs.iter().map(|p| p.to_vec()).collect();
        Self::from_signed_blocks(ObjectSignature::o(l), ObjectSignature::o(m), &blocks)
    }

    /// GL-flavor walled diagram from `[r1, s1]` to `[r2, s2]`.
    pub fn walled(src: (usize, usize), tgt: (usize, usize), pairs: &[[i64; 2]]) -> Result<Self> {
        let blocks: Vec<Vec<i64>> = pairs.iter().map(|p| p.to_vec()).collect();
        Self::from_signed_blocks(ObjectSignature::gl(src.0, src.1), ObjectSignature::gl(tgt.0, tgt.1), &blocks)
    }

    pub(crate) fn from_raw(src: ObjectSignature, tgt: ObjectSignature, raw: impl IntoIterator<Item = usize>) -> Self {
        Diagram { src, tgt, labels: canonical_labels(raw) }
    }

    fn validate(&self) -> Result<()> {
        match self.flavor() {
            Flavor::S => Ok(()),
            Flavor::O | Flavor::GL => {
                let blocks = self.block_indices();
                if let Some(b) = blocks.iter().find(|b| b.len() != 2) {
                    return Err(Error::InvalidDiagram(format!(
                        "{} diagrams are perfect matchings, found a block of size {}",
                        self.flavor(),
                        b.len()
                    )));
                }
                if self.flavor() == Flavor::GL {
                    if self.src.black + self.tgt.white != self.tgt.black + self.src.white {
                        return Err(Error::InvalidDiagram("walled signature needs r1 + s2 = r2 + s1".into()));
                    }
                    for b in &blocks {
                        let (x, y) = (b[0], b[1]);
                        let same_row = self.is_top(x) == self.is_top(y);
                        let same_color = self.is_black_point(x) == self.is_black_point(y);
                        if same_row == same_color {
                            return Err(Error::InvalidDiagram(format!(
                                "walled edge {{{}, {}}} breaks the color rule",
                                self.endpoint(x).to_signed(),
                                self.endpoint(y).to_signed()
                            )));
                        }
                    }
                }
                Ok(())
            }
        }
    }

    pub fn flavor(&self) -> Flavor {
        self.src.flavor
    }

    pub fn source(&self) -> ObjectSignature {
        self.src
    }

    pub fn target(&self) -> ObjectSignature {
        self.tgt
    }

    pub fn labels(&self) -> &[u16] {
        &self.labels
    }

    pub fn num_blocks(&self) -> usize {
        self.labels.iter().map(|&l| l as usize + 1).max().unwrap_or(0)
    }

    pub fn is_endomorphism(&self) -> bool {
        self.src == self.tgt
    }

    fn is_top(&self, idx: usize) -> bool {
        idx < self.src.points()
    }

    fn is_black_point(&self, idx: usize) -> bool {
        if self.is_top(idx) {
            self.src.is_black(idx)
        } else {
            self.tgt.is_black(idx - self.src.points())
        }
    }

    fn endpoint(&self, idx: usize) -> Endpoint {
        if self.is_top(idx) {
            Endpoint::Top(idx + 1)
        } else {
            Endpoint::Bottom(idx - self.src.points() + 1)
        }
    }

    /// Blocks as lists of endpoint indices (0-based, sources first).
    pub fn block_indices(&self) -> Vec<Vec<usize>> {
        let mut blocks = vec![Vec::new(); self.num_blocks()];
        for (i, &l) in self.labels.iter().enumerate() {
            blocks[l as usize].push(i);
        }
        blocks
    }

    /// Canonical blocks: each sorted, blocks ordered by smallest member with
    /// top points before bottom points.
    pub fn blocks(&self) -> Vec<Vec<Endpoint>> {
        self.block_indices()
            .into_iter()
            .map(|b| b.into_iter().map(|i| self.endpoint(i)).collect())
            .collect()
    }

    pub fn signed_blocks(&self) -> Vec<Vec<i64>> {
        self.blocks().into_iter().map(|b| b.into_iter().map(Endpoint::to_signed).collect()).collect()
    }

    pub fn identity(sig: ObjectSignature) -> Self {
        let n = sig.points();
        Diagram::from_raw(sig, sig, (0..n).chain(0..n))
    }

    /// Permutation diagram `i -> perm[i]'` on `[n]` of the given flavor
    /// (GL: acting on the black points of `[n, 0]`).
    pub fn permutation(flavor: Flavor, perm: &[usize]) -> Result<Self> {
        let n = perm.len();
        let mut seen = vec![false; n];
        for &p in perm {
            if p >= n || seen[p] {
                return Err(Error::InvalidArgument(format!("{perm:?} is not a permutation")));
            }
            seen[p] = true;
        }
        let sig = ObjectSignature { flavor, black: n, white: 0 };
        let mut raw = vec![0usize; 2 * n];
        for (i, &p) in perm.iter().enumerate() {
            raw[i] = i;
            raw[n + p] = i;
        }
        Ok(Diagram::from_raw(sig, sig, raw))
    }

    /// `self ∘ inner`: `inner` acts first. Returns the composite and the
    /// number of components made only of middle points (closed loops for
    /// matchings).
    pub fn compose(&self, inner: &Diagram) -> Result<(Diagram, u32)> {
        if inner.tgt != self.src {
            return Err(Error::SignatureMismatch(format!(
                "cannot compose {} -> {} after {} -> {}",
                self.src, self.tgt, inner.src, inner.tgt
            )));
        }
        Ok(self.compose_unchecked(inner))
    }

    pub(crate) fn compose_unchecked(&self, inner: &Diagram) -> (Diagram, u32) {
        let a = inner.src.points();
        let b = self.src.points();
        let c = self.tgt.points();
        let mut uf = UnionFind::new(a + b + c);
        // Both diagrams index their own endpoints as [top..., bottom...];
        // the inner diagram lives on nodes 0..a+b, the outer on a..a+b+c.
        glue(&mut uf, &inner.labels, 0);
        glue(&mut uf, &self.labels, a);

        let mut outer_roots: Vec<usize> = Vec::with_capacity(a + c);
        for i in (0..a).chain(a + b..a + b + c) {
            outer_roots.push(uf.find(i));
        }
        let mut middle_roots: Vec<usize> = Vec::new();
        for i in a..a + b {
            let r = uf.find(i);
            if !outer_roots.contains(&r) && !middle_roots.contains(&r) {
                middle_roots.push(r);
            }
        }
        (Diagram::from_raw(inner.src, self.tgt, outer_roots), middle_roots.len() as u32)
    }

    /// Disjoint union; signatures concatenate (GL colors re-sorted, black
    /// points first).
    pub fn tensor(&self, other: &Diagram) -> Result<Diagram> {
        if self.flavor() != other.flavor() {
            return Err(Error::FlavorMismatch(format!("{} vs {}", self.flavor(), other.flavor())));
        }
        let src = self.src.tensor(&other.src)?;
        let tgt = self.tgt.tensor(&other.tgt)?;
        let mut raw = vec![0usize; src.points() + tgt.points()];
        let offset = self.num_blocks();
        let (sp, op) = (self.src.points(), other.src.points());
        for (i, &l) in self.labels.iter().enumerate() {
            let pos = if i < sp {
                self.src.left_slot(&other.src, i)
            } else {
                src.points() + self.tgt.left_slot(&other.tgt, i - sp)
            };
            raw[pos] = l as usize;
        }
        for (i, &l) in other.labels.iter().enumerate() {
            let pos = if i < op {
                self.src.right_slot(&other.src, i)
            } else {
                src.points() + self.tgt.right_slot(&other.tgt, i - op)
            };
            raw[pos] = offset + l as usize;
        }
        Ok(Diagram::from_raw(src, tgt, raw))
    }

    /// Swaps the two rows.
    pub fn flip(&self) -> Diagram {
        let sp = self.src.points();
        let raw = self.labels[sp..].iter().chain(&self.labels[..sp]).map(|&l| l as usize);
        Diagram::from_raw(self.tgt, self.src, raw.collect::<Vec<_>>())
    }

    /// True iff every block of `self` lies inside a block of `coarser`.
    pub fn refines(&self, coarser: &Diagram) -> Result<bool> {
        if self.src != coarser.src || self.tgt != coarser.tgt {
            return Err(Error::SignatureMismatch("refinement needs equal endpoint sets".into()));
        }
        let mut image = vec![u16::MAX; self.num_blocks()];
        for (&a, &b) in self.labels.iter().zip(&coarser.labels) {
            let slot = &mut image[a as usize];
            if *slot == u16::MAX {
                *slot = b;
            } else if *slot != b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Every diagram obtained by merging blocks of `self` (including `self`).
    pub fn coarsenings(&self) -> Vec<Diagram> {
        set_partitions(self.num_blocks())
            .into_iter()
            .map(|merge| {
                Diagram::from_raw(self.src, self.tgt, self.labels.iter().map(|&l| merge[l as usize]))
            })
            .collect()
    }

    /// Number of components after joining each source point to the matching
    /// target point; the exponent in `Tr(e_P) = t^{l(P)}`.
    pub fn closure_components(&self) -> Result<usize> {
        if !self.is_endomorphism() {
            return Err(Error::NotEndomorphism(format!("{} -> {}", self.src, self.tgt)));
        }
        let n = self.src.points();
        let mut uf = UnionFind::new(self.num_blocks());
        for i in 0..n {
            uf.union(self.labels[i] as usize, self.labels[n + i] as usize);
        }
        Ok((0..self.num_blocks()).filter(|&b| uf.find(b) == b).count())
    }
}

fn glue(uf: &mut UnionFind, labels: &[u16], offset: usize) {
    let mut first = [usize::MAX; 64];
    let mut spill: Vec<usize> = Vec::new();
    for (i, &l) in labels.iter().enumerate() {
        let l = l as usize;
        let slot = if l < 64 {
            &mut first[l]
        } else {
            if spill.len() <= l - 64 {
                spill.resize(l - 63, usize::MAX);
            }
            &mut spill[l - 64]
        };
        if *slot == usize::MAX {
            *slot = offset + i;
        } else {
            let head = *slot;
            uf.union(head, offset + i);
        }
    }
}

impl fmt::Display for Diagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{{", self.flavor())?;
        for (k, b) in self.blocks().iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{{")?;
            for (j, e) in b.iter().enumerate() {
                if j > 0 {
                    write!(f, ",")?;
                }
                match e {
                    Endpoint::Top(i) => write!(f, "{i}")?,
                    Endpoint::Bottom(i) => write!(f, "{i}'")?,
                }
            }
            write!(f, "}}")?;
        }
        write!(f, "}}: {} -> {}", self.src, self.tgt)
    }
}

/// Free functions mirroring the operation names used in the CLI.
pub fn canonicalize_partition(l: usize, m: usize, raw_blocks: &[Vec<i64>]) -> Result<Diagram> {
    Diagram::partition(l, m, raw_blocks)
}

pub fn compose_partition(p: &Diagram, q: &Diagram) -> Result<(Diagram, u32)> {
    expect_flavor(p, Flavor::S)?;
    expect_flavor(q, Flavor::S)?;
    p.compose(q)
}

pub fn compose_brauer(p: &Diagram, q: &Diagram) -> Result<(Diagram, u32)> {
    expect_flavor(p, Flavor::O)?;
    expect_flavor(q, Flavor::O)?;
    p.compose(q)
}

pub fn compose_walled(p: &Diagram, q: &Diagram) -> Result<(Diagram, u32)> {
    expect_flavor(p, Flavor::GL)?;
    expect_flavor(q, Flavor::GL)?;
    p.compose(q)
}

fn expect_flavor(d: &Diagram, flavor: Flavor) -> Result<()> {
    if d.flavor() != flavor {
        return Err(Error::FlavorMismatch(format!("expected {flavor}, got {}", d.flavor())));
    }
    Ok(())
}
