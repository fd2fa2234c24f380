//! Payload readers: every JSON argument is either inline text or a path.

use std::fmt;

use interpcat::diagrams::{Flavor, ObjectSignature};
use interpcat::exactnum::{parse_rational, Rational};
use interpcat::json::{self, schema};
use interpcat::partition::{Bipartition, Partition};
use interpcat::{Error, Morphism};
use serde_json::Value;

/// Failure of a command: usage errors exit with 2, domain errors with 1.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Domain(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Schema { .. } | Error::Parse(_) => CliError::Usage(e.to_string()),
            other => CliError::Domain(other),
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "{m}"),
            CliError::Domain(e) => write!(f, "{e}"),
        }
    }
}

pub type CliResult<T> = std::result::Result<T, CliError>;

pub fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

/// Inline JSON when the argument looks like JSON, otherwise a file path.
pub fn payload(arg: &str) -> CliResult<Value> {
    let trimmed = arg.trim_start();
    let text = if trimmed.starts_with(['{', '[', '"']) || trimmed.parse::<f64>().is_ok() || trimmed == "null" {
        arg.to_string()
    } else {
        std::fs::read_to_string(arg).map_err(|e| usage(format!("cannot read {arg}: {e}")))?
    };
    serde_json::from_str(&text).map_err(|e| usage(format!("invalid JSON in {arg}: {e}")))
}

pub fn morphism(arg: &str) -> CliResult<Morphism> {
    Ok(json::morphism_from_json(&payload(arg)?)?)
}

pub fn partition(arg: &str, what: &str) -> CliResult<Partition> {
    Ok(json::partition_from_json(&payload(arg)?, &format!("--{what}"))?)
}

pub fn bipartition(arg: &str, what: &str) -> CliResult<Bipartition> {
    Ok(json::bipartition_from_json(&payload(arg)?, &format!("--{what}"))?)
}

pub fn rational(arg: &str) -> CliResult<Rational> {
    Ok(parse_rational(arg)?)
}

/// A JSON array of integers or rational strings.
pub fn rationals(arg: &str, what: &str) -> CliResult<Vec<Rational>> {
    let v = payload(arg)?;
    let arr = v.as_array().ok_or_else(|| schema(&format!("--{what}"), "expected an array"))?;
    arr.iter()
        .enumerate()
        .map(|(i, x)| {
            let path = format!("--{what}[{i}]");
            match x {
                Value::Number(n) if n.is_i64() => Ok(Rational::from_integer(n.as_i64().unwrap_or(0).into())),
                Value::String(s) => parse_rational(s).map_err(|e| schema(&path, e.to_string()).into()),
                _ => Err(schema(&path, "expected an integer or a rational string").into()),
            }
        })
        .collect()
}

/// A JSON array of positive integers, converted to 0-based indices.
pub fn indices(arg: &str, what: &str) -> CliResult<Vec<usize>> {
    let v = payload(arg)?;
    let arr = v.as_array().ok_or_else(|| schema(&format!("--{what}"), "expected an array"))?;
    arr.iter()
        .enumerate()
        .map(|(i, x)| match x.as_u64() {
            Some(k) if k >= 1 => Ok(k as usize - 1),
            _ => Err(schema(&format!("--{what}[{i}]"), "expected a 1-based index").into()),
        })
        .collect()
}

/// `m` for S and O objects, `r,s` for GL objects.
pub fn signature(flavor: Flavor, arg: &str) -> CliResult<ObjectSignature> {
    let nums: Vec<usize> = arg
        .split(',')
        .map(|x| x.trim().parse::<usize>().map_err(|_| usage(format!("bad object size {arg:?}"))))
        .collect::<CliResult<_>>()?;
    match (flavor, nums.as_slice()) {
        (Flavor::GL, [r, s]) => Ok(ObjectSignature::gl(*r, *s)),
        (Flavor::GL, _) => Err(usage(format!("GL objects are written r,s; got {arg:?}"))),
        (f, [m]) => Ok(ObjectSignature::new(f, *m, 0)?),
        (f, _) => Err(usage(format!("{f} objects are written as one number; got {arg:?}"))),
    }
}
