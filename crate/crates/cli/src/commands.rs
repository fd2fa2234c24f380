//! One handler per subcommand; each returns the JSON text to print.

use interpcat::diagrams::Flavor;
use interpcat::exactnum::{fmt_rational, RatFunc};
use interpcat::homspaces;
use interpcat::json::{self, diagram_to_json, morphism_at_to_json, morphism_to_json};
use interpcat::karoubi::{self, KaroubiObject, SimpleLabel};
use interpcat::selftest::{self, Level};
use interpcat::symfun::{self, LieFlavor, MomentSequence, ShiftData, TriplePartition};
use interpcat::{oracle, semisimplify, Error, Morphism};
use serde_json::{json, Value};

use crate::input::{self, usage, CliError, CliResult};
use crate::Command;

/// Seed used by `selftest` when neither `--seed` nor `INTERPCAT_SEED` is set.
pub const DEFAULT_SEED: u64 = 42;

pub fn run(cmd: Command) -> CliResult<String> {
    let v = match cmd {
        Command::Compose { flavor, pair } => compose(flavor, &pair.p, &pair.q)?,
        Command::Tensor { flavor, pair } => tensor(flavor, &pair.p, &pair.q)?,
        Command::Trace { p, t0, sp } => trace(&p, t0.as_deref(), sp)?,
        Command::Dim { flavor, object, sp } => {
            let sig = input::signature(flavor, &object)?;
            let d = if sp {
                if flavor != Flavor::O {
                    return Err(usage("--sp applies to the O flavor"));
                }
                homspaces::sp_dimension(sig.black)
            } else {
                homspaces::dimension(sig)
            };
            json!({"dimension": d.to_string()})
        }
        Command::BasisChange { p, to } => {
            let f = input::morphism(&p)?;
            let g = if to == "delta" { f.e_to_delta()? } else { f.delta_to_e()? };
            morphism_to_json(&g)
        }
        Command::IdemCheck { p } => json!({"idempotent": input::morphism(&p)?.is_idempotent()?}),
        Command::Young { flavor, lambda } => {
            let x = karoubi::standard_object(flavor, &label(flavor, &lambda)?)?;
            json!({"idempotent": morphism_to_json(x.idem()), "trace": x.dimension().to_string()})
        }
        Command::Promote { p, t_zero } => {
            let pr = karoubi::promotion(&input::morphism(&p)?, t_zero)?;
            json!({"idempotent": morphism_to_json(&pr.idem), "down": morphism_to_json(&pr.down), "up": morphism_to_json(&pr.up)})
        }
        Command::SimpleDim { flavor, lambda } => json!({"dimension": karoubi::dim_simple(&label(flavor, &lambda)?, flavor)?.to_string()}),
        Command::Decompose { flavor, p, young } => decompose(flavor, p.as_deref(), young.as_deref())?,
        Command::Gram { hom, t0, symbolic } => {
            let (src, tgt) = (input::signature(hom.flavor, &hom.source)?, input::signature(hom.flavor, &hom.target)?);
            let report = match (symbolic, t0) {
                (true, _) => semisimplify::gram_symbolic(src, tgt)?,
                (false, Some(t)) => semisimplify::gram(src, tgt, &input::rational(&t)?)?,
                (false, None) => return Err(usage("gram needs --t or --symbolic")),
            };
            to_value(&report)
        }
        Command::Negligible { p, t0, flavor, source, target } => {
            let t0 = input::rational(&t0)?;
            match (p, source, target) {
                (Some(p), _, _) => json!({"negligible": semisimplify::is_negligible(&input::morphism(&p)?, &t0)?}),
                (None, Some(l), Some(m)) => {
                    let (src, tgt) = (input::signature(flavor, &l)?, input::signature(flavor, &m)?);
                    let basis = semisimplify::negligible_basis(src, tgt, &t0)?;
                    json!({"t": fmt_rational(&t0), "basis": basis.iter().map(morphism_at_to_json).collect::<Vec<_>>()})
                }
                _ => return Err(usage("negligible needs -P, or both -l and -m")),
            }
        }
        Command::QuotientDim { hom, n } => {
            let (src, tgt) = (input::signature(hom.flavor, &hom.source)?, input::signature(hom.flavor, &hom.target)?);
            json!({"quotient_dim": semisimplify::quotient_dim(src, tgt, n)?})
        }
        Command::OracleCheck { flavor, a, b, c, n, verbose } => {
            let sig = |s: &str| input::signature(flavor, s);
            let mut report = oracle::verify_structure_constants(sig(&a)?, sig(&b)?, sig(&c)?, n)?;
            if !verbose {
                report.pairs.retain(|p| !p.pass);
            }
            to_value(&report)
        }
        Command::FunctorRank { p, n } => {
            let x = KaroubiObject::new(input::morphism(&p)?)?;
            json!({"rank": oracle::functor_image_rank(&x, n)?})
        }
        Command::Lr { lambda, mu, nu } => {
            let (l, m, n) = (input::partition(&lambda, "lambda")?, input::partition(&mu, "mu")?, input::partition(&nu, "nu")?);
            json!({"lr": symfun::lr_coefficient(&l, &m, &n)})
        }
        Command::Pairing { lambda, nu, mu, nu_bar } => {
            let (l, n) = (input::partition(&lambda, "lambda")?, input::partition(&nu, "nu")?);
            let (m, nb) = (input::partition(&mu, "mu")?, input::partition(&nu_bar, "nu-bar")?);
            json!({"pairing": symfun::skew_schur_pairing(&l, &n, &m, &nb)})
        }
        Command::MultGl { lambda, mu, nu, nu_bar } => {
            let (l, m) = (input::partition(&lambda, "lambda")?, input::partition(&mu, "mu")?);
            let (n, nb) = (input::partition(&nu, "nu")?, input::partition(&nu_bar, "nu-bar")?);
            json!({"multiplicity": symfun::gl_mixed_multiplicity(&l, &m, &n, &nb)})
        }
        Command::MultOsp { lambda, mu, nu } => {
            let (l, m, n) = (input::partition(&lambda, "lambda")?, input::partition(&mu, "mu")?, input::partition(&nu, "nu")?);
            json!({"multiplicity": symfun::osp_multiplicity(&l, &m, &n)})
        }
        Command::Triple { lambda, k, l, decode } => match (lambda, decode) {
            (_, Some(d)) => {
                let tp: TriplePartition = from_payload(&d, "--decode")?;
                json!({"lambda": symfun::triple_decode(&tp)?})
            }
            (Some(lam), None) => to_value(&symfun::triple_encode(&input::partition(&lam, "lambda")?, k, l)?),
            (None, None) => return Err(usage("triple needs --lambda or --decode")),
        },
        Command::HcStable { flavor, shift, nu, nu_bar, check_n } => {
            let shift: ShiftData = from_payload(&shift, "--shift")?;
            let nu = input::partition(&nu, "nu")?;
            let nb = nu_bar.map(|x| input::partition(&x, "nu-bar")).transpose()?;
            let m = symfun::stable_hc_multiplicity(&shift, &nu, nb.as_ref(), flavor)?;
            let mut out = json!({"multiplicity": m, "threshold": shift.stable_threshold(nu.size() + nb.as_ref().map_or(0, |x| x.size()))});
            if let Some(n) = check_n {
                out["direct"] = json!(symfun::hc_multiplicity_at(&shift, &nu, nb.as_ref(), flavor, n)?);
                out["n"] = json!(n);
            }
            out
        }
        Command::CharMoments { flavor, b, c, mu, up, down, k } => {
            let m = match (b, mu) {
                (Some(b), None) => {
                    let c = c.map(|c| input::rationals(&c, "c")).transpose()?.unwrap_or_default();
                    symfun::char_difference_forward(&input::rationals(&b, "b")?, &c, flavor, k)?
                }
                (None, Some(mu)) => {
                    if flavor != LieFlavor::Gl {
                        return Err(usage("weight differences are gl moments"));
                    }
                    let up = up.map(|x| input::indices(&x, "up")).transpose()?.unwrap_or_default();
                    let down = down.map(|x| input::indices(&x, "down")).transpose()?.unwrap_or_default();
                    symfun::weight_moment_difference(&input::rationals(&mu, "mu")?, &up, &down, k)?
                }
                _ => return Err(usage("char-moments needs --b or --mu")),
            };
            to_value(&m)
        }
        Command::CharSearch { moments, r, s, bound } => {
            let m: MomentSequence = from_payload(&moments, "--moments")?;
            match symfun::search_decomposition(&m, r, s, bound) {
                Some((b, c)) => json!({"b": b, "c": c}),
                None => Value::Null,
            }
        }
        Command::Selftest { level, seed, json } => return selftest(&level, seed, json),
    };
    Ok(v.to_string())
}

fn to_value<T: serde::Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report types serialize")
}

fn from_payload<T: serde::de::DeserializeOwned>(arg: &str, path: &str) -> CliResult<T> {
    serde_json::from_value(input::payload(arg)?).map_err(|e| Error::Schema { path: path.into(), msg: e.to_string() }.into())
}

fn label(flavor: Flavor, arg: &str) -> CliResult<SimpleLabel> {
    Ok(match flavor {
        Flavor::GL => SimpleLabel::Bipartition(input::bipartition(arg, "lambda")?),
        _ => SimpleLabel::Partition(input::partition(arg, "lambda")?),
    })
}

fn is_diagram(v: &Value) -> bool {
    v.get("blocks").is_some()
}

fn check_flavor(flavor: Option<Flavor>, f: &Morphism) -> CliResult<()> {
    match flavor {
        Some(fl) if fl != f.flavor() => Err(CliError::Domain(Error::FlavorMismatch(format!("--flavor {fl} but the payload is {}", f.flavor())))),
        _ => Ok(()),
    }
}

fn compose(flavor: Option<Flavor>, p: &str, q: &str) -> CliResult<Value> {
    let (pv, qv) = (input::payload(p)?, input::payload(q)?);
    if is_diagram(&pv) && is_diagram(&qv) {
        let (pd, qd) = (json::diagram_from_json(&pv, "-P")?, json::diagram_from_json(&qv, "-Q")?);
        check_flavor(flavor, &Morphism::from_diagram(pd.clone()))?;
        let (d, n) = pd.compose(&qd)?;
        return Ok(json!({"diagram": diagram_to_json(&d), "t_power": n}));
    }
    let (f, g) = (json::morphism_from_json(&pv)?, json::morphism_from_json(&qv)?);
    check_flavor(flavor, &f)?;
    Ok(morphism_to_json(&f.compose(&g)?))
}

fn tensor(flavor: Option<Flavor>, p: &str, q: &str) -> CliResult<Value> {
    let (pv, qv) = (input::payload(p)?, input::payload(q)?);
    if is_diagram(&pv) && is_diagram(&qv) {
        let (pd, qd) = (json::diagram_from_json(&pv, "-P")?, json::diagram_from_json(&qv, "-Q")?);
        check_flavor(flavor, &Morphism::from_diagram(pd.clone()))?;
        return Ok(json!({"diagram": diagram_to_json(&pd.tensor(&qd)?)}));
    }
    let (f, g) = (json::morphism_from_json(&pv)?, json::morphism_from_json(&qv)?);
    check_flavor(flavor, &f)?;
    Ok(morphism_to_json(&f.tensor(&g)?))
}

fn trace(p: &str, t0: Option<&str>, sp: bool) -> CliResult<Value> {
    let f = input::morphism(p)?;
    let tr: RatFunc = if sp { homspaces::sp_trace(&f)? } else { f.trace()? };
    Ok(match t0 {
        Some(t) => json!({"trace": fmt_rational(&tr.eval(&input::rational(t)?)?)}),
        None => json!({"trace": tr.to_string()}),
    })
}

fn decompose(flavor: Flavor, p: Option<&str>, young: Option<&str>) -> CliResult<Value> {
    let x = match (p, young) {
        (Some(p), _) => KaroubiObject::new(input::morphism(p)?)?,
        (None, Some(y)) => karoubi::standard_object(flavor, &label(flavor, y)?)?,
        (None, None) => return Err(usage("decompose needs -P or --young")),
    };
    let flavor = x.sig().flavor;
    let parts = karoubi::decompose(&x)?;
    let mut total = RatFunc::zero();
    let mut components = Vec::new();
    for (lab, mult) in &parts {
        let d = karoubi::dim_simple(lab, flavor)?;
        total = &total + &(&RatFunc::from_rational(interpcat::exactnum::int(*mult as i64)) * &d);
        components.push(json!({"label": lab, "multiplicity": mult, "dim": d.to_string()}));
    }
    let trace = x.dimension();
    Ok(json!({"components": components, "trace": trace.to_string(), "accounting": total == trace}))
}

fn selftest(level: &str, seed: Option<u64>, as_json: bool) -> CliResult<String> {
    let level: Level = level.parse()?;
    let seed = match seed {
        Some(s) => s,
        None => match std::env::var("INTERPCAT_SEED") {
            Ok(v) => v.trim().parse().map_err(|_| usage(format!("INTERPCAT_SEED={v:?} is not an unsigned integer")))?,
            Err(_) => DEFAULT_SEED,
        },
    };
    let report = selftest::run(level, seed);
    let text = if as_json { to_value(&report).to_string() } else { report.to_string().trim_end().to_string() };
    if report.passed() {
        Ok(text)
    } else {
        println!("{text}");
        Err(CliError::Domain(Error::InvalidArgument(format!("failed checks: {}", report.failed_names().join(", ")))))
    }
}

