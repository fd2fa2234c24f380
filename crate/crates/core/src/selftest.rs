//! Named invariant checks across all modules, with a deterministic text
//! report. Each check draws from its own RNG seeded by the run seed and the
//! check name, so reports are reproducible and checks are independent.

use std::fmt;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::diagrams::{enumerate_basis, Flavor, ObjectSignature};
use crate::exactnum::{int, rat, RatFunc, Rational};
use crate::homspaces::{self, random_morphism, Morphism};
use crate::karoubi::{self, KaroubiObject, SimpleLabel};
use crate::partition::{Bipartition, Partition};
use crate::symfun::{self, LieFlavor, ShiftData};
use crate::{oracle, semisimplify, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Level {
    Quick,
    Full,
}

impl std::str::FromStr for Level {
    type Err = crate::Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "quick" => Ok(Level::Quick),
            "full" => Ok(Level::Full),
            _ => Err(crate::Error::Parse(format!("unknown level {s:?}, expected quick or full"))),
        }
    }
}

/// Replaceable kernels, so the harness itself can be tested against broken
/// implementations.
#[derive(Clone, Copy)]
pub struct Kernels {
    pub delta_to_e: fn(&Morphism) -> Result<Morphism>,
}

impl Default for Kernels {
    fn default() -> Self {
        Kernels { delta_to_e: homspaces::delta_to_e }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: &'static str,
    pub cases: usize,
    pub failures: usize,
    /// First failing case, if any.
    pub first_failure: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub level: Level,
    pub seed: u64,
    pub checks: Vec<CheckResult>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.failures == 0)
    }

    pub fn failed_names(&self) -> Vec<&'static str> {
        self.checks.iter().filter(|c| c.failures > 0).map(|c| c.name).collect()
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let level = if self.level == Level::Quick { "quick" } else { "full" };
        writeln!(f, "selftest level={level} seed={}", self.seed)?;
        for c in &self.checks {
            let status = if c.failures == 0 { "PASS" } else { "FAIL" };
            write!(f, "{status} {:<28} cases={}", c.name, c.cases)?;
            if let Some(first) = &c.first_failure {
                write!(f, " failures={} first: {first}", c.failures)?;
            }
            writeln!(f)?;
        }
        let bad = self.failed_names().len();
        writeln!(f, "{} passed, {bad} failed", self.checks.len() - bad)
    }
}

/// Tally of one check.
struct Tally {
    cases: usize,
    failures: usize,
    first: Option<String>,
}

impl Tally {
    fn new() -> Self {
        Tally { cases: 0, failures: 0, first: None }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self.first.is_none() {
                self.first = Some(what());
            }
        }
    }

    /// Errors count as failures.
    fn check_result(&mut self, r: Result<bool>, what: impl FnOnce() -> String) {
        match r {
            Ok(ok) => self.check(ok, what),
            Err(e) => self.check(false, || format!("{}: {e}", what())),
        }
    }
}

fn rng_for(seed: u64, name: &str) -> StdRng {
    // FNV-1a over the name keeps per-check streams stable across releases.
    let h = name.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ b as u64).wrapping_mul(0x100_0000_01b3));
    StdRng::seed_from_u64(seed ^ h)
}

type Check = fn(&mut StdRng, Level, &Kernels, &mut Tally);

const CHECKS: &[(&str, Check)] = &[
    ("ratfunc_field", ratfunc_field),
    ("compose_associativity", compose_associativity),
    ("e_delta_roundtrip", e_delta_roundtrip),
    ("trace_cyclicity", trace_cyclicity),
    ("rigidity_zigzag", rigidity_zigzag),
    ("tensor_interchange", tensor_interchange),
    ("young_idempotents", young_idempotents),
    ("simple_dimensions", simple_dimensions),
    ("decomposition_accounting", decomposition_accounting),
    ("oracle_structure_constants", oracle_structure_constants),
    ("quotient_matches_classical", quotient_matches_classical),
    ("negligible_absorption", negligible_absorption),
    ("lr_symmetry", lr_symmetry),
    ("triple_roundtrip", triple_roundtrip),
    ("stable_multiplicity", stable_multiplicity),
    ("moment_roundtrip", moment_roundtrip),
    ("telescoping", telescoping),
];

pub fn check_names() -> Vec<&'static str> {
    CHECKS.iter().map(|(n, _)| *n).collect()
}

pub fn run(level: Level, seed: u64) -> Report {
    run_with(level, seed, &Kernels::default())
}

pub fn run_with(level: Level, seed: u64, kernels: &Kernels) -> Report {
    let checks = CHECKS
        .iter()
        .map(|(name, f)| {
            let mut t = Tally::new();
            f(&mut rng_for(seed, name), level, kernels, &mut t);
            CheckResult { name, cases: t.cases, failures: t.failures, first_failure: t.first }
        })
        .collect();
    Report { level, seed, checks }
}

fn scale(level: Level, quick: usize, full: usize) -> usize {
    if level == Level::Quick {
        quick
    } else {
        full
    }
}

fn random_ratfunc(rng: &mut StdRng) -> RatFunc {
    let poly = |rng: &mut StdRng| {
        let deg = rng.gen_range(0..=2);
        (0..=deg).fold(RatFunc::zero(), |acc, _| {
            &(&acc * &RatFunc::t()) + &RatFunc::from_rational(rat(rng.gen_range(-4..=4), rng.gen_range(1..=3)))
        })
    };
    let den = loop {
        let d = poly(rng);
        if !d.is_zero() {
            break d;
        }
    };
    poly(rng).checked_div(&den).expect("nonzero denominator")
}

fn ratfunc_field(rng: &mut StdRng, level: Level, _: &Kernels, t: &mut Tally) {
    for _ in 0..scale(level, 50, 400) {
        let (a, b) = (random_ratfunc(rng), random_ratfunc(rng));
        t.check(&(&a + &b) - &b == a, || format!("(a + b) - b != a for a = {a}, b = {b}"));
        if !b.is_zero() {
            t.check_result(Ok((&a * &b).checked_div(&b).ok() == Some(a.clone())), || format!("a b / b != a for a = {a}, b = {b}"));
        }
        let x = rat(rng.gen_range(-20..=20), rng.gen_range(1..=5));
        if let (Ok(va), Ok(vb), Ok(vab)) = (a.eval(&x), b.eval(&x), (&a * &b).eval(&x)) {
            t.check(vab == va * vb, || format!("evaluation at {x} is not multiplicative"));
        }
    }
}

fn sig(flavor: Flavor, n: usize, rng: &mut StdRng) -> ObjectSignature {
    match flavor {
        Flavor::S => ObjectSignature::s(n),
        Flavor::O => ObjectSignature::o(n),
        Flavor::GL => {
            let b = rng.gen_range(0..=n);
            ObjectSignature::gl(b, n - b)
        }
    }
}

fn compose_associativity(rng: &mut StdRng, level: Level, _: &Kernels, t: &mut Tally) {
    let s = ObjectSignature::s;
    for (a, b, c, d) in (0..=2).flat_map(|a| (0..=2).flat_map(move |b| (0..=2).flat_map(move |c| (0..=2).map(move |d| (a, b, c, d))))) {
        if level == Level::Quick && a + b + c + d > 4 {
            continue;
        }
        for h in enumerate_basis(s(a), s(b)) {
            for g in enumerate_basis(s(b), s(c)) {
                let (gh, n1) = g.compose(&h).expect("composable");
                for f in enumerate_basis(s(c), s(d)) {
                    let (fg, n2) = f.compose(&g).expect("composable");
                    let left = f.compose(&gh).expect("composable");
                    let right = fg.compose(&h).expect("composable");
                    t.check(left.0 == right.0 && left.1 + n1 == right.1 + n2, || format!("({f} {g}) {h}"));
                }
            }
        }
    }
    for _ in 0..scale(level, 20, 200) {
        let flavor = [Flavor::GL, Flavor::O][rng.gen_range(0..2)];
        let pts = |rng: &mut StdRng| rng.gen_range(0..=2) * 2;
        let (x, y) = (sig(flavor, pts(rng), rng), sig(flavor, pts(rng), rng));
        let (z, w) = (sig(flavor, pts(rng), rng), sig(flavor, pts(rng), rng));
        let (f, g, h) = (random_morphism(rng, z, w, 3), random_morphism(rng, y, z, 3), random_morphism(rng, x, y, 3));
        let ok = (|| Ok(f.compose(&g)?.compose(&h)? == f.compose(&g.compose(&h)?)?))();
        t.check_result(ok, || format!("associativity of random {flavor} morphisms {x} -> {y} -> {z} -> {w}"));
    }
}

fn e_delta_roundtrip(rng: &mut StdRng, level: Level, k: &Kernels, t: &mut Tally) {
    for _ in 0..scale(level, 30, 300) {
        let (l, m) = (rng.gen_range(0..=2), rng.gen_range(0..=2));
        let f = random_morphism(rng, ObjectSignature::s(l), ObjectSignature::s(m), 4);
        let ok = (|| Ok((k.delta_to_e)(&homspaces::e_to_delta(&f)?)? == f))();
        t.check_result(ok, || format!("delta_to_e(e_to_delta(f)) != f for f in Hom([{l}], [{m}])"));
    }
}

fn trace_cyclicity(rng: &mut StdRng, level: Level, _: &Kernels, t: &mut Tally) {
    for _ in 0..scale(level, 20, 200) {
        let flavor = [Flavor::S, Flavor::GL, Flavor::O][rng.gen_range(0..3)];
        let step = if flavor == Flavor::S { 1 } else { 2 };
        let x = sig(flavor, rng.gen_range(0..=1) * step, rng);
        let y = sig(flavor, rng.gen_range(0..=1) * step + step, rng);
        let (f, g) = (random_morphism(rng, x, y, 3), random_morphism(rng, y, x, 3));
        let ok = (|| Ok(f.compose(&g)?.trace()? == g.compose(&f)?.trace()?))();
        t.check_result(ok, || format!("Tr(fg) != Tr(gf) for {x} <-> {y}"));
    }
}

fn rigidity_zigzag(_: &mut StdRng, level: Level, _: &Kernels, t: &mut Tally) {
    let max = scale(level, 2, 3);
    let mut sigs: Vec<ObjectSignature> = (0..=max).flat_map(|m| [ObjectSignature::s(m), ObjectSignature::o(m)]).collect();
    sigs.extend((0..=max).flat_map(|r| (0..=max - r).map(move |s| ObjectSignature::gl(r, s))));
    for x in sigs {
        let ok = (|| {
            let xd = x.dual();
            let id = Morphism::identity(x);
            let left = homspaces::ev(x).tensor(&id)?;
            let right = id.tensor(&homspaces::coev(x))?;
            let z = left.compose(&right)?;
            Ok(z == id && xd == x.dual())
        })();
        t.check_result(ok, || format!("zig-zag fails on {x}"));
        t.check(homspaces::dimension(x) == RatFunc::t().pow(x.points() as u32), || format!("dim {x} != t^{}", x.points()));
    }
}

fn tensor_interchange(rng: &mut StdRng, level: Level, _: &Kernels, t: &mut Tally) {
    for _ in 0..scale(level, 10, 100) {
        let flavor = [Flavor::S, Flavor::GL, Flavor::O][rng.gen_range(0..3)];
        let step = if flavor == Flavor::S { 1 } else { 2 };
        let pick = |rng: &mut StdRng| sig(flavor, rng.gen_range(0..=1) * step, rng);
        let (a, b, c) = (pick(rng), pick(rng), pick(rng));
        let (d, e, g) = (pick(rng), pick(rng), pick(rng));
        let (f1, f2) = (random_morphism(rng, b, c, 2), random_morphism(rng, a, b, 2));
        let (g1, g2) = (random_morphism(rng, e, g, 2), random_morphism(rng, d, e, 2));
        let ok = (|| Ok(f1.tensor(&g1)?.compose(&f2.tensor(&g2)?)? == f1.compose(&f2)?.tensor(&g1.compose(&g2)?)?))();
        t.check_result(ok, || format!("interchange fails for {flavor} signatures {a} {b} {c} / {d} {e} {g}"));
        t.check(homspaces::dimension(a.tensor(&d).expect("same flavor")) == &homspaces::dimension(a) * &homspaces::dimension(d), || {
            format!("dim({a} ⊗ {d}) is not multiplicative")
        });
    }
}

fn young_idempotents(_: &mut StdRng, level: Level, _: &Kernels, t: &mut Tally) {
    for lam in Partition::all_up_to(scale(level, 3, 4)) {
        for flavor in [Flavor::S, Flavor::O] {
            let y = karoubi::young_symmetrizer_for(flavor, &lam);
            t.check_result(y.is_idempotent(), || format!("y_{lam} is not idempotent in {flavor}"));
        }
    }
    for bp in Bipartition::all_below(2, scale(level, 1, 2)) {
        let y = karoubi::bipartition_symmetrizer(&bp);
        t.check_result(y.is_idempotent(), || format!("y_{bp} is not idempotent"));
    }
}

fn simple_dimensions(_: &mut StdRng, level: Level, _: &Kernels, t: &mut Tally) {
    for lam in Partition::all_up_to(scale(level, 2, 3)) {
        let d = karoubi::dim_simple(&SimpleLabel::Partition(lam.clone()), Flavor::S);
        for n in lam.size() + lam.part(0)..=12 {
            let ok = d.as_ref().map_err(Clone::clone).and_then(|d| Ok(d.eval(&int(n as i64))? == karoubi::hook_length_oracle(&lam, n)));
            t.check_result(ok, || format!("dim L({lam}) at n = {n} disagrees with the hook-length formula"));
        }
    }
    for bp in Bipartition::all_below(1, scale(level, 1, 2)) {
        let d = karoubi::dim_simple(&SimpleLabel::Bipartition(bp.clone()), Flavor::GL);
        for n in bp.black.len() + bp.white.len()..=8 {
            let ok = d.as_ref().map_err(Clone::clone).and_then(|d| Ok(d.eval(&int(n as i64))? == karoubi::weyl_dimension_oracle(&bp, n)));
            t.check_result(ok, || format!("dim L{bp} at n = {n} disagrees with the Weyl formula"));
        }
    }
}

fn decomposition_accounting(_: &mut StdRng, level: Level, _: &Kernels, t: &mut Tally) {
    let mut objects: Vec<(String, KaroubiObject)> = Vec::new();
    for lam in Partition::all_up_to(scale(level, 2, 3)) {
        let y = karoubi::young_symmetrizer(&lam);
        objects.push((format!("([{}], y_{lam})", lam.size()), KaroubiObject::new(y).expect("symmetrizers are idempotent")));
    }
    objects.push(("[1, 1]".into(), KaroubiObject::identity(ObjectSignature::gl(1, 1))));
    if level == Level::Full {
        objects.push(("[2] in O".into(), KaroubiObject::identity(ObjectSignature::o(2))));
    }
    for (name, x) in objects {
        let ok = (|| {
            let total = karoubi::decompose(&x)?.iter().try_fold(RatFunc::zero(), |acc, (label, m)| {
                Ok::<_, crate::Error>(&acc + &(&RatFunc::from_rational(int(*m as i64)) * &karoubi::dim_simple(label, x.sig().flavor)?))
            })?;
            Ok(total == x.dimension())
        })();
        t.check_result(ok, || format!("Σ mult · dim != Tr(e) for {name}"));
    }
}

fn oracle_structure_constants(_: &mut StdRng, level: Level, _: &Kernels, t: &mut Tally) {
    let (max, top) = (scale(level, 2, 4), scale(level, 3, 4) as u64);
    for n in 2..=top {
        for (a, b, c) in (0..=max).flat_map(|a| (0..=max).flat_map(move |b| (0..=max).map(move |c| (a, b, c)))) {
            if a + b > max || b + c > max {
                continue;
            }
            let s = ObjectSignature::s;
            let r = oracle::verify_structure_constants(s(a), s(b), s(c), n).map(|r| r.violations == 0);
            t.check_result(r, || format!("structure constants [{a}] -> [{b}] -> [{c}] at n = {n}"));
        }
        let g = ObjectSignature::gl(1, 1);
        let r = oracle::verify_structure_constants(g, g, g, n).map(|r| r.violations == 0);
        t.check_result(r, || format!("GL structure constants at n = {n}"));
        let o = ObjectSignature::o(2);
        let r = oracle::verify_structure_constants(o, o, o, n).map(|r| r.violations == 0);
        t.check_result(r, || format!("O structure constants at n = {n}"));
    }
}

fn quotient_matches_classical(_: &mut StdRng, level: Level, _: &Kernels, t: &mut Tally) {
    let (max, nmax) = (scale(level, 2, 4), scale(level, 3, 4) as u64);
    for l in 0..=max {
        for m in 0..=max - l {
            for n in 0..=nmax {
                let s = ObjectSignature::s;
                let ok = (|| Ok(semisimplify::quotient_dim(s(l), s(m), n)? == oracle::hom_dim_classical(s(l), s(m), n)?))();
                t.check_result(ok, || format!("quotient dim of Hom([{l}], [{m}]) at n = {n}"));
            }
        }
    }
}

fn negligible_absorption(rng: &mut StdRng, level: Level, _: &Kernels, t: &mut Tally) {
    let s = ObjectSignature::s;
    for _ in 0..scale(level, 15, 200) {
        let n = rng.gen_range(0..=2i64);
        let t0 = int(n);
        let (l, m) = (rng.gen_range(0..=2), rng.gen_range(0..=2));
        let ok = (|| {
            let basis = semisimplify::negligible_basis(s(l), s(m), &t0)?;
            if basis.is_empty() {
                return Ok(true);
            }
            let f = &basis[rng.gen_range(0..basis.len())];
            let k = rng.gen_range(0..=2);
            let g = random_morphism(rng, s(m), s(k), 3).eval(&t0)?;
            let h = random_morphism(rng, s(k), s(l), 3).eval(&t0)?;
            let j = rng.gen_range(0..=1);
            let u = random_morphism(rng, s(1), s(j), 2).eval(&t0)?;
            Ok(semisimplify::is_negligible_at(&g.compose(f)?)?
                && semisimplify::is_negligible_at(&f.compose(&h)?)?
                && semisimplify::is_negligible_at(&f.tensor(&u)?)?)
        })();
        t.check_result(ok, || format!("negligible ideal in Hom([{l}], [{m}]) at t = {n} does not absorb"));
    }
}

fn lr_symmetry(rng: &mut StdRng, level: Level, _: &Kernels, t: &mut Tally) {
    let all = Partition::all_up_to(6);
    for _ in 0..scale(level, 100, 2000) {
        let lam = &all[rng.gen_range(0..all.len())];
        let subs = lam.subpartitions();
        let mu = &subs[rng.gen_range(0..subs.len())];
        let nus = Partition::all_of_size(lam.size() - mu.size());
        let nu = &nus[rng.gen_range(0..nus.len())];
        t.check(symfun::lr_coefficient(lam, mu, nu) == symfun::lr_coefficient(lam, nu, mu), || format!("c^{lam}_({mu},{nu}) is not symmetric"));
        let wrong = &all[rng.gen_range(0..all.len())];
        if wrong.size() + mu.size() != lam.size() {
            t.check(symfun::lr_coefficient(lam, mu, wrong) == 0, || format!("c^{lam}_({mu},{wrong}) should vanish"));
        }
    }
}

fn triple_roundtrip(_: &mut StdRng, level: Level, _: &Kernels, t: &mut Tally) {
    for lam in Partition::all_up_to(scale(level, 6, 8)) {
        for k in 0..=lam.len() {
            for l in 0..=lam.durfee() {
                if let Ok(tp) = symfun::triple_encode(&lam, k, l) {
                    t.check(symfun::triple_decode(&tp).ok() == Some(lam.clone()), || format!("{lam} cut at ({k}, {l})"));
                }
            }
        }
    }
}

fn stable_multiplicity(rng: &mut StdRng, level: Level, _: &Kernels, t: &mut Tally) {
    for _ in 0..scale(level, 3, 12) {
        let k = rng.gen_range(0..=2);
        let l = rng.gen_range(0..=1);
        let small = |rng: &mut StdRng| Partition::all_up_to(2)[rng.gen_range(0..4)].clone();
        let shift = ShiftData {
            a: (0..k).map(|_| rng.gen_range(-1..=1)).collect(),
            b: (0..l).map(|_| rng.gen_range(-1..=1)).collect(),
            gamma: small(rng),
            delta: small(rng),
        };
        let (nu, nb) = (small(rng), small(rng));
        for (flavor, bar) in [(LieFlavor::Gl, Some(&nb)), (LieFlavor::Osp, None)] {
            let ok = (|| {
                let want = symfun::stable_hc_multiplicity(&shift, &nu, bar, flavor)?;
                let n0 = shift.stable_threshold(nu.size() + nb.size());
                Ok(symfun::hc_multiplicity_at(&shift, &nu, bar, flavor, n0)? == want
                    && symfun::hc_multiplicity_at(&shift, &nu, bar, flavor, n0 + 2)? == want)
            })();
            t.check_result(ok, || format!("{flavor} stable multiplicity for {shift:?}, ν = {nu}"));
        }
    }
}

fn moment_roundtrip(rng: &mut StdRng, level: Level, _: &Kernels, t: &mut Tally) {
    let ints = |v: &[i64]| v.iter().map(|&x| int(x)).collect::<Vec<Rational>>();
    for _ in 0..scale(level, 10, 60) {
        let (r, s) = (rng.gen_range(1..=2), rng.gen_range(0..=2));
        let b: Vec<i64> = (0..r).map(|_| rng.gen_range(-5..=5)).collect();
        let c: Vec<i64> = (0..s).map(|_| rng.gen_range(-5..=5)).collect();
        let kmax = (r + s + 3) as u32;
        let ok = (|| {
            let m = symfun::char_difference_forward(&ints(&b), &ints(&c), LieFlavor::Gl, kmax)?;
            let Some((b2, c2)) = symfun::search_decomposition(&m, r, s, 5) else { return Ok(false) };
            Ok(symfun::reduced_pair(&b, &c) == symfun::reduced_pair(&b2, &c2))
        })();
        t.check_result(ok, || format!("moments of b = {b:?}, c = {c:?} are not recovered"));
    }
}

fn telescoping(_: &mut StdRng, _: Level, _: &Kernels, t: &mut Tally) {
    for m in 1..=8i64 {
        for k in 1..=8u32 {
            let s = (0..m).fold(int(0), |acc, i| acc + symfun::pk(&int(i), k));
            t.check(s == int(m.pow(k)), || format!("Σ_(i<{m}) P_{k}(i) != {m}^{k}"));
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quick_passes_and_is_deterministic() {
        let a = run(Level::Quick, 7);
        assert!(a.passed(), "{a}");
        let b = run(Level::Quick, 7);
        assert_eq!(a.to_string(), b.to_string());
        assert_eq!(a.checks.len(), check_names().len());
    }

    #[test]
    fn broken_inverse_is_named() {
        fn broken(f: &Morphism) -> Result<Morphism> {
            // Reads δ coefficients as e coefficients, skipping the Möbius sum.
            let terms = f.terms().map(|(d, c)| (d.clone(), c.clone()));
            Morphism::from_terms(f.source(), f.target(), f.param().clone(), homspaces::Basis::E, terms)
        }
        let r = run_with(Level::Quick, 1, &Kernels { delta_to_e: broken });
        assert_eq!(r.failed_names(), vec!["e_delta_roundtrip"]);
        assert!(r.to_string().contains("FAIL e_delta_roundtrip"));
    }
}
