//! Hom spaces as finitely supported linear combinations of diagrams.
//!
//! A [`Morphism`] carries the value of the parameter `t` it was built over:
//! `RatFunc::t()` for the generic category, or a rational `t0` for a
//! specialization. Composition multiplies each diagram product by
//! `t^{middle components}`.

use std::collections::BTreeMap;
use std::fmt;

use crate::diagrams::{enumerate_basis, Diagram, Flavor, ObjectSignature};
use crate::exactnum::{RatFunc, Rational};
use crate::scalar::Scalar;
use crate::{Error, Result};

/// Which basis the coefficients of an S-flavor morphism refer to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Basis {
    /// Relaxed equality patterns `e_P` (the composition-friendly basis).
    E,
    /// Strict orbit indicators `δ_P`.
    Delta,
}

#[derive(Clone, PartialEq)]
pub struct Morphism<C: Scalar = RatFunc> {
    source: ObjectSignature,
    target: ObjectSignature,
    param: C,
    basis: Basis,
    terms: BTreeMap<Diagram, C>,
}

impl<C: Scalar> Morphism<C> {
    pub fn zero_with(source: ObjectSignature, target: ObjectSignature, param: C) -> Self {
        Morphism { source, target, param, basis: Basis::E, terms: BTreeMap::new() }
    }

    pub fn diagram_with(d: Diagram, param: C) -> Self {
        let mut m = Self::zero_with(d.source(), d.target(), param);
        m.terms.insert(d, C::one());
        m
    }

    pub fn identity_with(sig: ObjectSignature, param: C) -> Self {
        Self::diagram_with(Diagram::identity(sig), param)
    }

    /// Builds a morphism from `(diagram, coefficient)` pairs, merging repeats
    /// and dropping zeros.
    pub fn from_terms(
        source: ObjectSignature,
        target: ObjectSignature,
        param: C,
        basis: Basis,
        terms: impl IntoIterator<Item = (Diagram, C)>,
    ) -> Result<Self> {
        if basis == Basis::Delta && source.flavor != Flavor::S {
            return Err(Error::Unsupported("the δ basis exists for the S flavor only".into()));
        }
        let mut m = Morphism { source, target, param, basis, terms: BTreeMap::new() };
        for (d, c) in terms {
            if d.source() != source || d.target() != target {
                return Err(Error::SignatureMismatch(format!("diagram {d} in Hom({source}, {target})")));
            }
            m.add_term(d, &c);
        }
        Ok(m)
    }

    fn add_term(&mut self, d: Diagram, c: &C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(d) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get().add(c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn source(&self) -> ObjectSignature {
        self.source
    }

    pub fn target(&self) -> ObjectSignature {
        self.target
    }

    pub fn flavor(&self) -> Flavor {
        self.source.flavor
    }

    pub fn param(&self) -> &C {
        &self.param
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Diagram, &C)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_endomorphism(&self) -> bool {
        self.source == self.target
    }

    pub fn coeff(&self, d: &Diagram) -> C {
        self.terms.get(d).cloned().unwrap_or_else(C::zero)
    }

    fn check_same_space(&self, other: &Self) -> Result<()> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::SignatureMismatch(format!(
                "Hom({}, {}) vs Hom({}, {})",
                self.source, self.target, other.source, other.target
            )));
        }
        if self.param != other.param {
            return Err(Error::InvalidArgument("morphisms built over different parameter values".into()));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_space(other)?;
        let (a, b) = (self.to_e(), other.to_e());
        let mut out = a.into_owned();
        for (d, c) in &b.terms {
            out.add_term(d.clone(), c);
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale(&C::one().neg()))
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero_with(self.source, self.target, self.param.clone());
        out.basis = self.basis;
        if !c.is_zero() {
            out.terms = self.terms.iter().map(|(d, x)| (d.clone(), x.mul(c))).collect();
        }
        out
    }

    /// `self ∘ inner` (`inner` acts first).
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        if inner.target != self.source {
            return Err(Error::SignatureMismatch(format!(
                "cannot compose {} -> {} after {} -> {}",
                self.source, self.target, inner.source, inner.target
            )));
        }
        if self.param != inner.param {
            return Err(Error::InvalidArgument("morphisms built over different parameter values".into()));
        }
        let (f, g) = (self.to_e(), inner.to_e());
        let mut powers: Vec<C> = vec![C::one()];
        let mut out = Self::zero_with(inner.source, self.target, self.param.clone());
        for (df, cf) in &f.terms {
            for (dg, cg) in &g.terms {
                let (d, n) = df.compose_unchecked(dg);
                while powers.len() <= n as usize {
                    let next = powers.last().unwrap().mul(&self.param);
                    powers.push(next);
                }
                out.add_term(d, &cf.mul(cg).mul(&powers[n as usize]));
            }
        }
        Ok(out)
    }

    pub fn tensor(&self, other: &Self) -> Result<Self> {
        if self.flavor() != other.flavor() {
            return Err(Error::FlavorMismatch(format!("{} vs {}", self.flavor(), other.flavor())));
        }
        if self.param != other.param {
            return Err(Error::InvalidArgument("morphisms built over different parameter values".into()));
        }
        let (f, g) = (self.to_e(), other.to_e());
        let mut out = Self::zero_with(
            self.source.tensor(&other.source)?,
            self.target.tensor(&other.target)?,
            self.param.clone(),
        );
        for (df, cf) in &f.terms {
            for (dg, cg) in &g.terms {
                out.add_term(df.tensor(dg)?, &cf.mul(cg));
            }
        }
        Ok(out)
    }

    /// Categorical trace `Σ c_P t^{closure components of P}`.
    pub fn trace(&self) -> Result<C> {
        if !self.is_endomorphism() {
            return Err(Error::NotEndomorphism(format!("{} -> {}", self.source, self.target)));
        }
        let f = self.to_e();
        let mut acc = C::zero();
        for (d, c) in &f.terms {
            let k = d.closure_components()? as u32;
            acc = acc.add(&c.mul(&self.param.pow(k)));
        }
        Ok(acc)
    }

    /// Re-expresses an e-basis morphism in the δ basis:
    /// `e_P = Σ_{P' coarsening P} δ_{P'}`.
    pub fn e_to_delta(&self) -> Result<Self> {
        self.require_s()?;
        if self.basis == Basis::Delta {
            return Ok(self.clone());
        }
        let mut out = Self::zero_with(self.source, self.target, self.param.clone());
        out.basis = Basis::Delta;
        for (d, c) in &self.terms {
            for coarser in d.coarsenings() {
                out.add_term(coarser, c);
            }
        }
        Ok(out)
    }

    /// Inverse of [`Self::e_to_delta`] by Möbius inversion over refinement:
    /// `δ_P = Σ_{P' ≥ P} μ(P, P') e_{P'}`.
    pub fn delta_to_e(&self) -> Result<Self> {
        self.require_s()?;
        if self.basis == Basis::E {
            return Ok(self.clone());
        }
        let mut out = Self::zero_with(self.source, self.target, self.param.clone());
        for (d, c) in &self.terms {
            for coarser in d.coarsenings() {
                let mu = mobius(d, &coarser);
                out.add_term(coarser, &c.mul(&C::from_i64(mu)));
            }
        }
        Ok(out)
    }

    fn require_s(&self) -> Result<()> {
        if self.flavor() != Flavor::S {
            return Err(Error::Unsupported(format!("basis change needs the S flavor, got {}", self.flavor())));
        }
        Ok(())
    }

    /// The e-basis form (a clone when already there).
    pub fn to_e(&self) -> std::borrow::Cow<'_, Self> {
        match self.basis {
            Basis::E => std::borrow::Cow::Borrowed(self),
            Basis::Delta => std::borrow::Cow::Owned(self.delta_to_e().expect("δ basis implies S flavor")),
        }
    }

    /// Exact test `f ∘ f = f`.
    pub fn is_idempotent(&self) -> Result<bool> {
        if !self.is_endomorphism() {
            return Err(Error::NotEndomorphism(format!("{} -> {}", self.source, self.target)));
        }
        Ok(self.compose(self)? == *self.to_e())
    }

    /// Map of coefficients with a fallible conversion; zero images are dropped.
    pub fn try_map<D: Scalar>(&self, param: D, mut f: impl FnMut(&C) -> Result<D>) -> Result<Morphism<D>> {
        let terms = self.terms.iter().map(|(d, c)| Ok((d.clone(), f(c)?))).collect::<Result<Vec<_>>>()?;
        Morphism::from_terms(self.source, self.target, param, self.basis, terms)
    }
}

/// `μ(P, P')` of the partition lattice for `P ≤ P'`: the product over blocks
/// of `P'` of `(-1)^{k-1} (k-1)!`, `k` the number of `P`-blocks merged.
fn mobius(fine: &Diagram, coarse: &Diagram) -> i64 {
    let mut merged: BTreeMap<u16, std::collections::BTreeSet<u16>> = BTreeMap::new();
    for (&a, &b) in fine.labels().iter().zip(coarse.labels()) {
        merged.entry(b).or_default().insert(a);
    }
    merged
        .values()
        .map(|s| {
            let k = s.len() as i64;
            let fact: i64 = (1..k).product();
            if k % 2 == 1 {
                fact
            } else {
                -fact
            }
        })
        .product()
}

impl Morphism<RatFunc> {
    /// Basis element over the generic parameter.
    pub fn from_diagram(d: Diagram) -> Self {
        Self::diagram_with(d, RatFunc::t())
    }

    pub fn identity(sig: ObjectSignature) -> Self {
        Self::identity_with(sig, RatFunc::t())
    }

    pub fn zero(source: ObjectSignature, target: ObjectSignature) -> Self {
        Self::zero_with(source, target, RatFunc::t())
    }

    /// Specializes `t = t0`.
    pub fn eval(&self, t0: &Rational) -> Result<Morphism<Rational>> {
        self.try_map(t0.clone(), |c| c.eval(t0))
    }
}

impl<C: Scalar> fmt::Debug for Morphism<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Morphism({} -> {}, t = {}; ", self.source, self.target, self.param)?;
        for (k, (d, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})*{d}")?;
        }
        write!(f, ")")
    }
}

pub fn compose<C: Scalar>(f: &Morphism<C>, g: &Morphism<C>) -> Result<Morphism<C>> {
    f.compose(g)
}

pub fn tensor<C: Scalar>(f: &Morphism<C>, g: &Morphism<C>) -> Result<Morphism<C>> {
    f.tensor(g)
}

pub fn trace<C: Scalar>(f: &Morphism<C>) -> Result<C> {
    f.trace()
}

pub fn e_to_delta<C: Scalar>(f: &Morphism<C>) -> Result<Morphism<C>> {
    f.e_to_delta()
}

pub fn delta_to_e<C: Scalar>(f: &Morphism<C>) -> Result<Morphism<C>> {
    f.delta_to_e()
}

/// `Tr(id_X)`: `t^m` for `[m]`, `t^{r+s}` for `[r, s]`.
pub fn dimension(sig: ObjectSignature) -> RatFunc {
    Morphism::identity(sig).trace().expect("identity is an endomorphism")
}

/// Dimension of `[m]` in Rep(Sp_t), read off Rep(O_{-t}).
pub fn sp_dimension(m: usize) -> RatFunc {
    dimension(ObjectSignature::o(m)).negate_var()
}

/// Trace in Rep(Sp_t) of a Brauer-algebra element, via `t -> -t` on the O
/// flavor trace. Only trace-level quantities are modeled.
pub fn sp_trace(f: &Morphism) -> Result<RatFunc> {
    if f.flavor() != Flavor::O {
        return Err(Error::FlavorMismatch("Sp traces are computed from O-flavor morphisms".into()));
    }
    Ok(f.trace()?.negate_var())
}

/// Points of `X* ⊗ X` (or `X ⊗ X*`) joined by nested arcs.
fn nested_pairs(first: ObjectSignature, second: ObjectSignature) -> Vec<(usize, usize)> {
    let m = first.points();
    (0..m).map(|p| (first.left_slot(&second, p), first.right_slot(&second, m - 1 - p))).collect()
}

/// The diagram of `ev_X : X* ⊗ X -> 1`.
pub fn ev_diagram(sig: ObjectSignature) -> Diagram {
    let dual = sig.dual();
    let src = dual.tensor(&sig).expect("same flavor");
    let mut raw = vec![0usize; src.points()];
    for (k, (a, b)) in nested_pairs(dual, sig).into_iter().enumerate() {
        raw[a] = k;
        raw[b] = k;
    }
    Diagram::from_raw(src, ObjectSignature::unit(sig.flavor), raw)
}

/// The diagram of `coev_X : 1 -> X ⊗ X*`.
pub fn coev_diagram(sig: ObjectSignature) -> Diagram {
    let dual = sig.dual();
    let tgt = sig.tensor(&dual).expect("same flavor");
    let mut raw = vec![0usize; tgt.points()];
    for (k, (a, b)) in nested_pairs(sig, dual).into_iter().enumerate() {
        raw[a] = k;
        raw[b] = k;
    }
    Diagram::from_raw(ObjectSignature::unit(sig.flavor), tgt, raw)
}

pub fn ev(sig: ObjectSignature) -> Morphism {
    Morphism::from_diagram(ev_diagram(sig))
}

pub fn coev(sig: ObjectSignature) -> Morphism {
    Morphism::from_diagram(coev_diagram(sig))
}

/// Braiding `A ⊗ B -> B ⊗ A`.
pub fn swap_diagram(a: ObjectSignature, b: ObjectSignature) -> Result<Diagram> {
    let src = a.tensor(&b)?;
    let tgt = b.tensor(&a)?;
    let sp = src.points();
    let mut raw = vec![0usize; sp + tgt.points()];
    for i in 0..a.points() {
        raw[a.left_slot(&b, i)] = i;
        raw[sp + b.right_slot(&a, i)] = i;
    }
    for j in 0..b.points() {
        let k = a.points() + j;
        raw[a.right_slot(&b, j)] = k;
        raw[sp + b.left_slot(&a, j)] = k;
    }
    Ok(Diagram::from_raw(src, tgt, raw))
}

pub fn swap(a: ObjectSignature, b: ObjectSignature) -> Result<Morphism> {
    Ok(Morphism::from_diagram(swap_diagram(a, b)?))
}

/// Diagram basis of `Hom(src, tgt)` as morphisms.
pub fn basis_morphisms(src: ObjectSignature, tgt: ObjectSignature) -> Vec<Morphism> {
    enumerate_basis(src, tgt).into_iter().map(Morphism::from_diagram).collect()
}

#[cfg(test)]
mod tests;

/// A random sparse morphism with small rational (optionally `t`-dependent)
/// coefficients; used by property checks.
pub fn random_morphism<R: rand::Rng>(
    rng: &mut R,
    src: ObjectSignature,
    tgt: ObjectSignature,
    max_terms: usize,
) -> Morphism {
    let basis = enumerate_basis(src, tgt);
    let mut out = Morphism::zero(src, tgt);
    if basis.is_empty() {
        return out;
    }
    let n = rng.gen_range(1..=max_terms.max(1));
    for _ in 0..n {
        let d = basis[rng.gen_range(0..basis.len())].clone();
        let c = crate::exactnum::rat(rng.gen_range(-3..=3), rng.gen_range(1..=3));
        let coeff = if rng.gen_bool(0.3) {
            &RatFunc::from_rational(c) * &RatFunc::t()
        } else {
            RatFunc::from_rational(c)
        };
        out.add_term(d, &coeff);
    }
    out
}
