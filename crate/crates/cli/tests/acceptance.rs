//! Acceptance suite: one PASS/FAIL line per criterion with timings.
//!
//! A criterion listed in `KNOWN_UNATTAINABLE` prints FAIL when its literal
//! statement cannot hold; the run still succeeds if the strongest provable
//! form of that criterion passes.

use std::collections::HashMap;
use std::process::Command;
use std::time::{Duration, Instant};

use interpcat::diagrams::{enumerate_basis, Diagram, Flavor, ObjectSignature};
use interpcat::exactnum::{int, rat, RatFunc, Rational};
use interpcat::homspaces::{self, random_morphism, Morphism};
use interpcat::karoubi::{self, KaroubiObject, SimpleLabel};
use interpcat::partition::{Bipartition, Partition};
use interpcat::symfun::{self, LieFlavor, ShiftData};
use interpcat::{oracle, semisimplify};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

struct Outcome {
    /// The criterion as stated holds.
    pass: bool,
    /// For known-unattainable criteria: the provable weaker form holds.
    fallback_ok: bool,
    detail: String,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Outcome { pass, fallback_ok: pass, detail: detail.into() }
    }
}

type Criterion = (u32, &'static str, fn() -> Outcome);

const KNOWN_UNATTAINABLE: &[u32] = &[10];

fn s(m: usize) -> ObjectSignature {
    ObjectSignature::s(m)
}

fn p(x: &[usize]) -> Partition {
    Partition::from_slice(x)
}

fn t() -> RatFunc {
    RatFunc::t()
}

fn within(elapsed: Duration, limit: Duration) -> bool {
    elapsed <= limit
}

fn composition_law() -> Outcome {
    let start = Instant::now();
    let pd = Diagram::partition(3, 6, &[vec![1, 3, -2], vec![2, -4, -5], vec![-1], vec![-3, -6]]).unwrap();
    let qd = Diagram::partition(6, 2, &[vec![1, 3], vec![2, -2], vec![4, -1], vec![5], vec![6]]).unwrap();
    let (d, n) = qd.compose(&pd).unwrap();
    let want = Diagram::partition(3, 2, &[vec![1, 3, -2], vec![2, -1]]).unwrap();
    let example = d == want && n == 1;
    let mut triples = 0;
    let mut bad = 0;
    for (a, b, c, e) in (0..=2).flat_map(|a| (0..=2).flat_map(move |b| (0..=2).flat_map(move |c| (0..=2).map(move |e| (a, b, c, e))))) {
        for h in enumerate_basis(s(a), s(b)) {
            for g in enumerate_basis(s(b), s(c)) {
                let (gh, n1) = g.compose(&h).unwrap();
                for f in enumerate_basis(s(c), s(e)) {
                    let (fg, n2) = f.compose(&g).unwrap();
                    let (l, nl) = f.compose(&gh).unwrap();
                    let (r, nr) = fg.compose(&h).unwrap();
                    triples += 1;
                    if l != r || nl + n1 != nr + n2 {
                        bad += 1;
                    }
                }
            }
        }
    }
    let el = start.elapsed();
    Outcome::new(
        example && bad == 0 && within(el, Duration::from_secs(5)),
        format!("worked example -> t^{n} {d}; {triples} triples, {bad} non-associative"),
    )
}

fn trace_dimension() -> Outcome {
    let mut ok = true;
    for m in 0..=5 {
        for sig in [s(m), ObjectSignature::o(m)] {
            ok &= Morphism::identity(sig).trace().unwrap() == t().pow(m as u32);
        }
    }
    for r in 0..=5 {
        for q in 0..=5 - r {
            ok &= homspaces::dimension(ObjectSignature::gl(r, q)) == t().pow((r + q) as u32);
        }
    }
    let mut zig = 0;
    for m in 0..=3 {
        let mut sigs = vec![s(m), ObjectSignature::o(m)];
        sigs.extend((0..=m).map(|r| ObjectSignature::gl(r, m - r)));
        for x in sigs {
            let id = Morphism::identity(x);
            let z = homspaces::ev(x).tensor(&id).unwrap().compose(&id.tensor(&homspaces::coev(x)).unwrap()).unwrap();
            ok &= z == id;
            zig += 1;
        }
    }
    Outcome::new(ok, format!("traces and dimensions symbolic, {zig} zig-zag identities"))
}

fn oracle_homomorphism() -> Outcome {
    let start = Instant::now();
    let (mut checked, mut violations) = (0, 0);
    for n in 2..=4 {
        for l in 0..=4 {
            for m in 0..=4 - l {
                for k in 0..=4 - m {
                    let r = oracle::verify_structure_constants(s(l), s(m), s(k), n).unwrap();
                    checked += r.checked;
                    violations += r.violations;
                }
            }
        }
    }
    let el = start.elapsed();
    Outcome::new(violations == 0 && within(el, Duration::from_secs(120)), format!("{checked} diagram pairs, {violations} violations"))
}

fn simple_dimensions() -> Outcome {
    let parse = |x: &str| x.parse::<RatFunc>().unwrap();
    let cases: Vec<(SimpleLabel, Flavor, RatFunc)> = vec![
        (p(&[1]).into(), Flavor::S, parse("t - 1")),
        (p(&[2]).into(), Flavor::S, parse("t*(t - 3)/2")),
        (p(&[1, 1]).into(), Flavor::S, parse("(t - 1)*(t - 2)/2")),
        (Bipartition::new(p(&[1]), p(&[1])).into(), Flavor::GL, parse("t^2 - 1")),
    ];
    let mut ok = true;
    let mut points = 0;
    for (label, flavor, want) in &cases {
        let d = karoubi::dim_simple(label, *flavor).unwrap();
        ok &= &d == want;
        match label {
            SimpleLabel::Partition(lam) => {
                for n in lam.size() + lam.part(0)..=12 {
                    ok &= d.eval(&int(n as i64)).unwrap() == karoubi::hook_length_oracle(lam, n);
                    points += 1;
                }
            }
            SimpleLabel::Bipartition(bp) => {
                for n in bp.black.len() + bp.white.len()..=12 {
                    ok &= d.eval(&int(n as i64)).unwrap() == karoubi::weyl_dimension_oracle(bp, n);
                    points += 1;
                }
            }
        }
    }
    Outcome::new(ok, format!("4 symbolic values, {points} oracle points"))
}

fn decomposition() -> Outcome {
    let check = |lam: &[usize], want: &[(&[usize], usize)]| {
        let x = KaroubiObject::new(karoubi::young_symmetrizer(&p(lam))).unwrap();
        let got = karoubi::decompose(&x).unwrap();
        let want: Vec<(SimpleLabel, usize)> = want.iter().map(|(l, m)| (p(l).into(), *m)).collect();
        let total = got.iter().fold(RatFunc::zero(), |acc, (l, m)| {
            &acc + &(&RatFunc::from_rational(int(*m as i64)) * &karoubi::dim_simple(l, Flavor::S).unwrap())
        });
        got == want && total == x.dimension()
    };
    let a = check(&[2], &[(&[], 2), (&[1], 2), (&[2], 1)]);
    let b = check(&[1, 1], &[(&[1], 1), (&[1, 1], 1)]);
    Outcome::new(a && b, "y_(2) and y_(1,1) with exact accounting")
}

fn semisimplification() -> Outcome {
    let start = Instant::now();
    let g = semisimplify::gram_symbolic(s(1), s(1)).unwrap();
    let det_ok = g.determinant.as_deref().map(|d| d.parse::<RatFunc>().unwrap()) == Some("t^2*(t - 1)".parse().unwrap());
    let mut ok = det_ok;
    let mut cases = 0;
    for l in 0..=4 {
        for m in 0..=4 - l {
            for n in 0..=4 {
                ok &= semisimplify::quotient_dim(s(l), s(m), n).unwrap() == oracle::hom_dim_classical(s(l), s(m), n).unwrap();
                cases += 1;
            }
            for t0 in [rat(5, 2), rat(7, 3)] {
                ok &= semisimplify::gram(s(l), s(m), &t0).unwrap().nullity == 0;
            }
        }
    }
    let el = start.elapsed();
    Outcome::new(ok && within(el, Duration::from_secs(120)), format!("det {}, {cases} quotient/classical comparisons", g.determinant.unwrap_or_default()))
}

fn negligible_ideal() -> Outcome {
    let mut rng = StdRng::seed_from_u64(0x0b5e);
    let (mut tested, mut failures) = (0, 0);
    while tested < 200 {
        let n = rng.gen_range(0..=2i64);
        let t0 = int(n);
        let (l, m) = (rng.gen_range(0..=2), rng.gen_range(0..=2));
        let basis = semisimplify::negligible_basis(s(l), s(m), &t0).unwrap();
        if basis.is_empty() {
            continue;
        }
        let coeffs: Vec<Rational> = basis.iter().map(|_| rat(rng.gen_range(-3..=3), rng.gen_range(1..=2))).collect();
        let f = basis.iter().zip(&coeffs).fold(Morphism::zero_with(s(l), s(m), t0.clone()), |acc, (b, c)| {
            acc.add(&b.scale(c)).unwrap()
        });
        let k = rng.gen_range(0..=2);
        let g = random_morphism(&mut rng, s(m), s(k), 3).eval(&t0).unwrap();
        let h = random_morphism(&mut rng, s(k), s(l), 3).eval(&t0).unwrap();
        let j = rng.gen_range(0..=2);
        let jj = rng.gen_range(0..=1);
        let u = random_morphism(&mut rng, s(j), s(jj), 2).eval(&t0).unwrap();
        let ok = semisimplify::is_negligible_at(&g.compose(&f).unwrap()).unwrap()
            && semisimplify::is_negligible_at(&f.compose(&h).unwrap()).unwrap()
            && semisimplify::is_negligible_at(&f.tensor(&u).unwrap()).unwrap()
            && semisimplify::is_negligible_at(&u.tensor(&f).unwrap()).unwrap();
        tested += 1;
        if !ok {
            failures += 1;
        }
    }
    Outcome::new(failures == 0, format!("{tested} random instances at t = 0, 1, 2, {failures} failures"))
}

/// Independent LR count: every word of content ν on λ/μ, filtered.
fn lr_brute(lambda: &Partition, mu: &Partition, nu: &Partition) -> u64 {
    if mu.size() + nu.size() != lambda.size() || !lambda.contains(mu) {
        return 0;
    }
    let cells: Vec<(usize, usize)> = (0..lambda.len()).flat_map(|r| (mu.part(r)..lambda.part(r)).map(move |c| (r, c))).collect();
    let mut left = nu.parts().to_vec();
    let mut fill = vec![0usize; cells.len()];
    fn valid(cells: &[(usize, usize)], fill: &[usize]) -> bool {
        let at: HashMap<(usize, usize), usize> = cells.iter().copied().zip(fill.iter().copied()).collect();
        for (&(r, c), &v) in &at {
            if at.get(&(r, c + 1)).is_some_and(|&w| w < v) || at.get(&(r + 1, c)).is_some_and(|&w| w <= v) {
                return false;
            }
        }
        let mut order: Vec<(usize, std::cmp::Reverse<usize>)> = at.keys().map(|&(r, c)| (r, std::cmp::Reverse(c))).collect();
        order.sort();
        let mut count = vec![0usize; fill.len() + 2];
        for (r, std::cmp::Reverse(c)) in order {
            let v = at[&(r, c)];
            count[v] += 1;
            if v > 1 && count[v] > count[v - 1] {
                return false;
            }
        }
        true
    }
    fn rec(i: usize, cells: &[(usize, usize)], left: &mut Vec<usize>, fill: &mut Vec<usize>) -> u64 {
        if i == cells.len() {
            return u64::from(valid(cells, fill));
        }
        let mut n = 0;
        for v in 0..left.len() {
            if left[v] > 0 {
                left[v] -= 1;
                fill[i] = v + 1;
                n += rec(i + 1, cells, left, fill);
                left[v] += 1;
            }
        }
        n
    }
    rec(0, &cells, &mut left, &mut fill)
}

type Poly = HashMap<Vec<u8>, i64>;

fn skew_schur_poly(lambda: &Partition, nu: &Partition, n: usize) -> Poly {
    let cells: Vec<(usize, usize)> = (0..lambda.len()).flat_map(|r| (nu.part(r)..lambda.part(r)).map(move |c| (r, c))).collect();
    fn rec(i: usize, cells: &[(usize, usize)], n: usize, grid: &mut HashMap<(usize, usize), usize>, out: &mut Poly) {
        if i == cells.len() {
            let mut e = vec![0u8; n];
            for v in grid.values() {
                e[v - 1] += 1;
            }
            *out.entry(e).or_default() += 1;
            return;
        }
        let (r, c) = cells[i];
        let mut lo = 1;
        if let Some(&w) = c.checked_sub(1).and_then(|c0| grid.get(&(r, c0))) {
            lo = lo.max(w);
        }
        if let Some(&w) = r.checked_sub(1).and_then(|r0| grid.get(&(r0, c))) {
            lo = lo.max(w + 1);
        }
        for v in lo..=n {
            grid.insert((r, c), v);
            rec(i + 1, cells, n, grid, out);
        }
        grid.remove(&(r, c));
    }
    let mut out = Poly::new();
    rec(0, &cells, n, &mut HashMap::new(), &mut out);
    out
}

fn schur_expand(mut f: Poly, n: usize) -> HashMap<Partition, i64> {
    let mut out = HashMap::new();
    loop {
        f.retain(|_, v| *v != 0);
        let Some(lead) = f.keys().max().cloned() else { break };
        let a = f[&lead];
        let shape = Partition::new(lead.iter().map(|&x| x as usize).collect()).unwrap();
        for (e, v) in skew_schur_poly(&shape, &Partition::empty(), n) {
            *f.entry(e).or_default() -= a * v;
        }
        out.insert(shape, a);
    }
    out
}

fn symmetric_functions() -> Outcome {
    let start = Instant::now();
    let (mut lr_cases, mut lr_bad) = (0, 0);
    for n in 0..=6 {
        for lam in Partition::all_of_size(n) {
            for mu in lam.subpartitions() {
                for nu in Partition::all_of_size(n - mu.size()) {
                    lr_cases += 1;
                    if symfun::lr_coefficient(&lam, &mu, &nu) != lr_brute(&lam, &mu, &nu) {
                        lr_bad += 1;
                    }
                }
            }
        }
    }
    let (mut pair_cases, mut pair_bad) = (0, 0);
    let mut expansions: HashMap<(Partition, Partition, usize), HashMap<Partition, i64>> = HashMap::new();
    for lam in Partition::all_up_to(4) {
        for mu in Partition::all_up_to(4) {
            let vars = (lam.size() + mu.size()).max(1);
            for nu in lam.subpartitions() {
                for nb in mu.subpartitions() {
                    let mut get = |a: &Partition, b: &Partition| {
                        expansions
                            .entry((a.clone(), b.clone(), vars))
                            .or_insert_with(|| schur_expand(skew_schur_poly(a, b, vars), vars))
                            .clone()
                    };
                    let (x, y) = (get(&lam, &nu), get(&mu, &nb));
                    let hall: i64 = x.iter().map(|(k, v)| v * y.get(k).copied().unwrap_or(0)).sum();
                    pair_cases += 1;
                    if symfun::skew_schur_pairing(&lam, &nu, &mu, &nb) as i64 != hall {
                        pair_bad += 1;
                    }
                }
            }
        }
    }
    let one = p(&[1]);
    let osp: Vec<u64> = [p(&[1, 1]), p(&[2]), Partition::empty(), p(&[1])].iter().map(|nu| symfun::osp_multiplicity(&one, &one, nu)).collect();
    let el = start.elapsed();
    Outcome::new(
        lr_bad == 0 && pair_bad == 0 && osp == [1, 1, 1, 0] && within(el, Duration::from_secs(60)),
        format!("lr {lr_cases} triples ({lr_bad} bad), pairing {pair_cases} cases ({pair_bad} bad), osp (1)x(1) = {osp:?}"),
    )
}

fn stabilization() -> Outcome {
    let sd = |a: &[i64], b: &[i64], g: &[usize], d: &[usize]| ShiftData { a: a.to_vec(), b: b.to_vec(), gamma: p(g), delta: p(d) };
    let cases = [
        sd(&[0], &[], &[], &[]),
        sd(&[1], &[], &[], &[]),
        sd(&[-1], &[], &[1], &[]),
        sd(&[0, 1], &[], &[1], &[1]),
        sd(&[], &[0], &[], &[]),
        sd(&[1], &[-1], &[1], &[2]),
        sd(&[2, -1], &[1], &[], &[1]),
    ];
    let (mut checked, mut nonzero, mut bad) = (0, 0, 0);
    for shift in &cases {
        for nu in Partition::all_up_to(2) {
            for nb in Partition::all_up_to(2) {
                let want = symfun::stable_hc_multiplicity(shift, &nu, Some(&nb), LieFlavor::Gl).unwrap();
                let n0 = shift.stable_threshold(nu.size() + nb.size());
                for n in [n0, n0 + 5] {
                    checked += 1;
                    bad += usize::from(symfun::hc_multiplicity_at(shift, &nu, Some(&nb), LieFlavor::Gl, n).unwrap() != want);
                }
                nonzero += usize::from(want > 0);
            }
            let want = symfun::stable_hc_multiplicity(shift, &nu, None, LieFlavor::Osp).unwrap();
            let n0 = shift.stable_threshold(nu.size());
            for n in [n0, n0 + 5] {
                checked += 1;
                bad += usize::from(symfun::hc_multiplicity_at(shift, &nu, None, LieFlavor::Osp, n).unwrap() != want);
            }
            nonzero += usize::from(want > 0);
        }
    }
    Outcome::new(bad == 0, format!("{} shift data, {checked} direct comparisons ({nonzero} nonzero stable values), {bad} mismatches", cases.len()))
}

fn central_characters() -> Outcome {
    let ints = |v: &[i64]| v.iter().map(|&x| int(x)).collect::<Vec<Rational>>();
    let mut rng = StdRng::seed_from_u64(0xc0ffee);
    let (mut exact, mut up_to_kernel, mut degenerate, mut moments_ok, mut unexplained) = (0, 0, 0, 0, 0);
    for _ in 0..100 {
        let (r, s) = (rng.gen_range(1..=3), rng.gen_range(0..=2));
        let mut b: Vec<i64> = (0..r).map(|_| rng.gen_range(-5..=5)).collect();
        let mut c: Vec<i64> = (0..s).map(|_| rng.gen_range(-5..=5)).collect();
        b.sort_unstable();
        c.sort_unstable();
        let k = (r + s + 3) as u32;
        let m = symfun::char_difference_forward(&ints(&b), &ints(&c), LieFlavor::Gl, k).unwrap();
        let Some((b2, c2)) = symfun::search_decomposition(&m, r, s, 5) else { continue };
        moments_ok += usize::from(symfun::char_difference_forward(&ints(&b2), &ints(&c2), LieFlavor::Gl, k).unwrap() == m);
        let hit = b2 == b && c2 == c;
        let deg = b.iter().any(|x| c.contains(&(x + 1)));
        exact += usize::from(hit);
        up_to_kernel += usize::from(symfun::reduced_pair(&b, &c) == symfun::reduced_pair(&b2, &c2));
        degenerate += usize::from(deg);
        unexplained += usize::from(!hit && !deg);
    }
    let mut telescoping = true;
    for m in 1..=8i64 {
        for k in 1..=8u32 {
            telescoping &= (0..m).fold(int(0), |acc, i| acc + symfun::pk(&int(i), k)) == int(m.pow(k));
        }
    }
    let pass = exact == 100 && telescoping;
    let fallback_ok = moments_ok == 100 && up_to_kernel == 100 && unexplained == 0 && telescoping;
    Outcome {
        pass,
        fallback_ok,
        detail: format!(
            "exact recovery {exact}/100; {degenerate} samples contain a pair b_i = c_j - 1 whose moments cancel, \
             so other (b, c) in the box share their moments; recovered modulo that cancellation {up_to_kernel}/100, \
             moments reproduced {moments_ok}/100, misses without a cancelling pair {unexplained}; telescoping m,k <= 8 {}",
            if telescoping { "ok" } else { "FAILED" }
        ),
    }
}

fn cli_determinism() -> Outcome {
    let start = Instant::now();
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_interpcat"))
            .args(["selftest", "full", "--seed", "42"])
            .env_remove("INTERPCAT_SEED")
            .output()
            .expect("run interpcat")
    };
    let (a, b) = (run(), run());
    let el = start.elapsed();
    let ok = a.status.success() && b.status.success() && a.stdout == b.stdout && !a.stdout.is_empty();
    let summary = String::from_utf8_lossy(&a.stdout).lines().last().unwrap_or("").to_string();
    Outcome::new(ok && within(el, Duration::from_secs(600)), format!("two runs byte-identical: {}; {summary}", a.stdout == b.stdout))
}

fn main() {
    let criteria: [Criterion; 11] = [
        (1, "composition law", composition_law),
        (2, "trace and dimension interpolation", trace_dimension),
        (3, "oracle homomorphism", oracle_homomorphism),
        (4, "simple dimensions", simple_dimensions),
        (5, "decomposition accounting", decomposition),
        (6, "semisimplification", semisimplification),
        (7, "negligible ideal", negligible_ideal),
        (8, "symmetric functions", symmetric_functions),
        (9, "stabilization", stabilization),
        (10, "central characters", central_characters),
        (11, "cli determinism", cli_determinism),
    ];
    let mut unexpected = Vec::new();
    for (id, name, f) in criteria {
        let start = Instant::now();
        let o = f();
        let ms = start.elapsed().as_millis();
        let status = if o.pass { "PASS" } else { "FAIL" };
        let known = KNOWN_UNATTAINABLE.contains(&id);
        let note = if !o.pass && known { " [known unattainable; weaker form holds]" } else { "" };
        println!("{status} criterion {id:>2} {name} ({ms} ms): {}{note}", o.detail);
        if !o.pass && !(known && o.fallback_ok) {
            unexpected.push(id);
        }
    }
    if !unexpected.is_empty() {
        eprintln!("unexpected failures: {unexpected:?}");
        std::process::exit(1);
    }
}
