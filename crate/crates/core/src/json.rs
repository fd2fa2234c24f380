//! JSON readers and writers for signatures, diagrams and morphisms.
//!
//! Diagrams: `{"flavor":"S","top":l,"bottom":m,"blocks":[[1,-2],…]}` with
//! positive entries for source points and negative ones for target points.
//! GL diagrams add `"top_colors"`/`"bottom_colors"` strings (`1` for V, `0`
//! for V*); points are renumbered so that V factors come first.
//!
//! Morphisms: `{"source":…,"target":…,"basis":"e","terms":[{"diagram":…,
//! "coeff":"…"}]}`, plus `"t":"…"` when specialized to a number.

use serde_json::{json, Map, Value};

use crate::diagrams::{Diagram, Flavor, ObjectSignature};
use crate::exactnum::{fmt_rational, parse_rational, RatFunc, Rational};
use crate::homspaces::{Basis, Morphism};
use crate::partition::{Bipartition, Partition};
use crate::scalar::Scalar;
use crate::{Error, Result};

pub fn schema(path: &str, msg: impl Into<String>) -> Error {
    Error::Schema { path: path.to_string(), msg: msg.into() }
}

fn field<'a>(v: &'a Value, path: &str, key: &str) -> Result<&'a Value> {
    v.as_object()
        .ok_or_else(|| schema(path, "expected an object"))?
        .get(key)
        .ok_or_else(|| schema(&format!("{path}.{key}"), "missing field"))
}

fn as_usize(v: &Value, path: &str) -> Result<usize> {
    v.as_u64().map(|x| x as usize).ok_or_else(|| schema(path, "expected a nonnegative integer"))
}

fn as_str<'a>(v: &'a Value, path: &str) -> Result<&'a str> {
    v.as_str().ok_or_else(|| schema(path, "expected a string"))
}

fn colors(sig: ObjectSignature) -> String {
    "1".repeat(sig.black) + &"0".repeat(sig.white)
}

pub fn signature_to_json(sig: ObjectSignature) -> Value {
    match sig.flavor {
        Flavor::GL => json!({"flavor": "GL", "black": sig.black, "white": sig.white}),
        f => json!({"flavor": f.to_string(), "points": sig.black}),
    }
}

pub fn signature_from_json(v: &Value, path: &str) -> Result<ObjectSignature> {
    let flavor: Flavor = as_str(field(v, path, "flavor")?, &format!("{path}.flavor"))?
        .parse()
        .map_err(|e: Error| schema(&format!("{path}.flavor"), e.to_string()))?;
    match flavor {
        Flavor::GL => Ok(ObjectSignature::gl(
            as_usize(field(v, path, "black")?, &format!("{path}.black"))?,
            as_usize(field(v, path, "white")?, &format!("{path}.white"))?,
        )),
        f => ObjectSignature::new(f, as_usize(field(v, path, "points")?, &format!("{path}.points"))?, 0),
    }
}

pub fn diagram_to_json(d: &Diagram) -> Value {
    let (src, tgt) = (d.source(), d.target());
    let mut obj = Map::new();
    obj.insert("flavor".into(), json!(d.flavor().to_string()));
    obj.insert("top".into(), json!(src.points()));
    obj.insert("bottom".into(), json!(tgt.points()));
    obj.insert("blocks".into(), json!(d.signed_blocks()));
    if d.flavor() == Flavor::GL {
        obj.insert("top_colors".into(), json!(colors(src)));
        obj.insert("bottom_colors".into(), json!(colors(tgt)));
    }
    Value::Object(obj)
}

/// Reads a color string and returns the signature plus the map from given
/// positions (1-based) to sorted positions.
fn read_colors(v: &Value, path: &str, points: usize) -> Result<(ObjectSignature, Vec<usize>)> {
    let s = as_str(v, path)?;
    if s.len() != points || !s.chars().all(|c| c == '0' || c == '1') {
        return Err(schema(path, format!("expected {points} characters of 0/1")));
    }
    let black = s.chars().filter(|&c| c == '1').count();
    let (mut nb, mut nw) = (0, 0);
    let pos = s
        .chars()
        .map(|c| {
            if c == '1' {
                nb += 1;
                nb
            } else {
                nw += 1;
                black + nw
            }
        })
        .collect();
    Ok((ObjectSignature::gl(black, points - black), pos))
}

pub fn diagram_from_json(v: &Value, path: &str) -> Result<Diagram> {
    let flavor: Flavor = as_str(field(v, path, "flavor")?, &format!("{path}.flavor"))?
        .parse()
        .map_err(|e: Error| schema(&format!("{path}.flavor"), e.to_string()))?;
    let top = as_usize(field(v, path, "top")?, &format!("{path}.top"))?;
    let bottom = as_usize(field(v, path, "bottom")?, &format!("{path}.bottom"))?;
    let bpath = format!("{path}.blocks");
    let raw = field(v, path, "blocks")?.as_array().ok_or_else(|| schema(&bpath, "expected an array"))?;
    let mut blocks = Vec::with_capacity(raw.len());
    for (i, b) in raw.iter().enumerate() {
        let p = format!("{bpath}[{i}]");
        let arr = b.as_array().ok_or_else(|| schema(&p, "expected an array of endpoints"))?;
        let block = arr
            .iter()
            .enumerate()
            .map(|(j, x)| x.as_i64().ok_or_else(|| schema(&format!("{p}[{j}]"), "expected an integer")))
            .collect::<Result<Vec<i64>>>()?;
        blocks.push(block);
    }
    let (src, tgt) = match flavor {
        Flavor::GL => {
            let (src, tpos) = read_colors(field(v, path, "top_colors")?, &format!("{path}.top_colors"), top)?;
            let (tgt, bpos) = read_colors(field(v, path, "bottom_colors")?, &format!("{path}.bottom_colors"), bottom)?;
            for b in blocks.iter_mut() {
                for x in b.iter_mut() {
                    let (i, table, sign) = if *x > 0 { (*x as usize, &tpos, 1) } else { ((-*x) as usize, &bpos, -1) };
                    if let Some(&p) = i.checked_sub(1).and_then(|k| table.get(k)) {
                        *x = sign * p as i64;
                    }
                }
            }
            (src, tgt)
        }
        f => (ObjectSignature::new(f, top, 0)?, ObjectSignature::new(f, bottom, 0)?),
    };
    Diagram::from_signed_blocks(src, tgt, &blocks).map_err(|e| schema(&bpath, e.to_string()))
}

/// Coefficient formats shared by the morphism reader and writer.
pub trait JsonScalar: Scalar {
    fn to_json_string(&self) -> String;
    fn parse_json(s: &str) -> Result<Self>;
}

impl JsonScalar for RatFunc {
    fn to_json_string(&self) -> String {
        self.to_string()
    }
    fn parse_json(s: &str) -> Result<Self> {
        s.parse()
    }
}

impl JsonScalar for Rational {
    fn to_json_string(&self) -> String {
        fmt_rational(self)
    }
    fn parse_json(s: &str) -> Result<Self> {
        parse_rational(s)
    }
}

fn coeff_from_json<C: JsonScalar>(v: &Value, path: &str) -> Result<C> {
    match v {
        Value::String(s) => C::parse_json(s).map_err(|e| schema(path, e.to_string())),
        Value::Number(n) => n.as_i64().map(C::from_i64).ok_or_else(|| schema(path, "expected an integer or a string")),
        _ => Err(schema(path, "expected a coefficient string")),
    }
}

fn morphism_json<C: JsonScalar>(f: &Morphism<C>, t: Option<String>) -> Value {
    let mut obj = Map::new();
    obj.insert("source".into(), signature_to_json(f.source()));
    obj.insert("target".into(), signature_to_json(f.target()));
    obj.insert("basis".into(), json!(if f.basis() == Basis::Delta { "delta" } else { "e" }));
    if let Some(t) = t {
        obj.insert("t".into(), json!(t));
    }
    let terms: Vec<Value> =
        f.terms().map(|(d, c)| json!({"diagram": diagram_to_json(d), "coeff": c.to_json_string()})).collect();
    obj.insert("terms".into(), Value::Array(terms));
    Value::Object(obj)
}

pub fn morphism_to_json(f: &Morphism) -> Value {
    morphism_json(f, None)
}

pub fn morphism_at_to_json(f: &Morphism<Rational>) -> Value {
    morphism_json(f, Some(fmt_rational(f.param())))
}

fn morphism_parts<C: JsonScalar>(v: &Value, param: C) -> Result<Morphism<C>> {
    let source = signature_from_json(field(v, "$", "source")?, "$.source")?;
    let target = signature_from_json(field(v, "$", "target")?, "$.target")?;
    let basis = match v.get("basis") {
        None => Basis::E,
        Some(b) => match as_str(b, "$.basis")? {
            "e" => Basis::E,
            "delta" => Basis::Delta,
            other => return Err(schema("$.basis", format!("unknown basis {other:?}, expected e or delta"))),
        },
    };
    let raw = field(v, "$", "terms")?.as_array().ok_or_else(|| schema("$.terms", "expected an array"))?;
    let mut terms = Vec::with_capacity(raw.len());
    for (i, t) in raw.iter().enumerate() {
        let p = format!("$.terms[{i}]");
        let d = diagram_from_json(field(t, &p, "diagram")?, &format!("{p}.diagram"))?;
        if d.source() != source || d.target() != target {
            return Err(schema(&format!("{p}.diagram"), format!("diagram does not lie in Hom({source}, {target})")));
        }
        let c = coeff_from_json::<C>(field(t, &p, "coeff")?, &format!("{p}.coeff"))?;
        terms.push((d, c));
    }
    Morphism::from_terms(source, target, param, basis, terms).map_err(|e| schema("$", e.to_string()))
}

/// Reads a generic morphism; a bare diagram object is accepted as a single
/// basis element.
pub fn morphism_from_json(v: &Value) -> Result<Morphism> {
    if v.get("blocks").is_some() {
        return Ok(Morphism::from_diagram(diagram_from_json(v, "$")?));
    }
    if v.get("t").is_some() {
        return Err(schema("$.t", "expected a generic morphism over Q(t)"));
    }
    morphism_parts(v, RatFunc::t())
}

/// Reads a morphism specialized at the number given in its `"t"` field.
pub fn morphism_at_from_json(v: &Value) -> Result<Morphism<Rational>> {
    let t = parse_rational(as_str(field(v, "$", "t")?, "$.t")?).map_err(|e| schema("$.t", e.to_string()))?;
    morphism_parts(v, t)
}

pub fn partition_from_json(v: &Value, path: &str) -> Result<Partition> {
    serde_json::from_value(v.clone()).map_err(|e| schema(path, e.to_string()))
}

pub fn bipartition_from_json(v: &Value, path: &str) -> Result<Bipartition> {
    serde_json::from_value(v.clone()).map_err(|e| schema(path, e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactnum::int;
    use crate::homspaces::random_morphism;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    #[test]
    fn diagram_roundtrip() {
        let d = Diagram::partition(3, 2, &[vec![1, 3, -2], vec![2, -1]]).unwrap();
        let v = diagram_to_json(&d);
        assert_eq!(v, json!({"flavor":"S","top":3,"bottom":2,"blocks":[[1,3,-2],[2,-1]]}));
        assert_eq!(diagram_from_json(&v, "$").unwrap(), d);
        let w = Diagram::walled((1, 1), (1, 1), &[[1, 2], [-1, -2]]).unwrap();
        let v = diagram_to_json(&w);
        assert_eq!(v["top_colors"], json!("10"));
        assert_eq!(diagram_from_json(&v, "$").unwrap(), w);
    }

    #[test]
    fn interleaved_colors_are_sorted() {
        let v = json!({"flavor":"GL","top":2,"bottom":0,"blocks":[[1,2]],"top_colors":"01","bottom_colors":""});
        let d = diagram_from_json(&v, "$").unwrap();
        assert_eq!(d.source(), ObjectSignature::gl(1, 1));
        assert_eq!(d.signed_blocks(), vec![vec![1, 2]]);
    }

    #[test]
    fn schema_errors_name_fields() {
        let v = json!({"flavor":"S","top":1,"bottom":1,"blocks":[[1,"x"]]});
        let e = diagram_from_json(&v, "$").unwrap_err();
        assert_eq!(e, schema("$.blocks[0][1]", "expected an integer"));
        let e = morphism_from_json(&json!({"source":{"flavor":"S","points":1},"terms":[]})).unwrap_err();
        assert!(e.to_string().contains("$.target"));
        let e = diagram_from_json(&json!({"flavor":"Q","top":0,"bottom":0,"blocks":[]}), "$").unwrap_err();
        assert!(e.to_string().contains("$.flavor"));
    }

    #[test]
    fn morphism_roundtrip() {
        let mut rng = StdRng::seed_from_u64(9);
        for sig in [ObjectSignature::s(2), ObjectSignature::gl(1, 1), ObjectSignature::o(2)] {
            let f = random_morphism(&mut rng, sig, sig, 4);
            let v = morphism_to_json(&f);
            let back = morphism_from_json(&v).unwrap();
            assert_eq!(back, f);
            assert_eq!(morphism_to_json(&back).to_string(), v.to_string());
            let g = f.eval(&int(3)).unwrap();
            let w = morphism_at_to_json(&g);
            assert_eq!(morphism_at_from_json(&w).unwrap(), g);
        }
    }
}
