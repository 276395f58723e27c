//! Ring names accepted on the command line and dispatch to a concrete ring.

use std::path::{Path, PathBuf};
use std::str::FromStr;

use edet_core::algebras::{skew_cube_algebra, FreeAlgebra, MatrixRing, Octonions, PolyRing, Quaternions, TableAlgebra};
use edet_core::prime_field::PrimeField;
use edet_core::rational::Rationals;
use edet_core::Ring;

use crate::error::{CliError, CliResult};

pub const SKEW_CUBE: &str = "skew-cube";

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Scalar {
    Rational,
    Mod(u64),
}

/// `rational`, `mod:<p>`, `quaternion`, `octonion`, `table:<path>` (or the
/// built-in `table:skew-cube`), `matrixring:<m>:<rational|mod:p>`,
/// `poly:<n>`, `free:<n>`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingSpec {
    Scalar(Scalar),
    Quaternion,
    Octonion,
    Table(String),
    MatrixRing(usize, Scalar),
    Poly(usize),
    Free(usize),
}

fn bad(s: &str) -> CliError {
    CliError::Input(format!(
        "unknown ring `{s}` (expected rational, mod:<p>, quaternion, octonion, table:<path>, \
         matrixring:<m>:<rational|mod:p>, poly:<n> or free:<n>)"
    ))
}

fn parse_scalar(s: &str) -> Option<Scalar> {
    if s == "rational" {
        return Some(Scalar::Rational);
    }
    s.strip_prefix("mod:")?.parse().ok().map(Scalar::Mod)
}

impl FromStr for RingSpec {
    type Err = CliError;

    fn from_str(s: &str) -> CliResult<Self> {
        if let Some(scalar) = parse_scalar(s) {
            return Ok(RingSpec::Scalar(scalar));
        }
        match s {
            "quaternion" => return Ok(RingSpec::Quaternion),
            "octonion" => return Ok(RingSpec::Octonion),
            _ => {}
        }
        let (kind, rest) = s.split_once(':').ok_or_else(|| bad(s))?;
        let order = || rest.parse::<usize>().map_err(|_| bad(s));
        match kind {
            "table" if !rest.is_empty() => Ok(RingSpec::Table(rest.to_string())),
            "poly" => Ok(RingSpec::Poly(order()?)),
            "free" => Ok(RingSpec::Free(order()?)),
            "matrixring" => {
                let (m, inner) = rest.split_once(':').ok_or_else(|| bad(s))?;
                let m = m.parse().map_err(|_| bad(s))?;
                Ok(RingSpec::MatrixRing(m, parse_scalar(inner).ok_or_else(|| bad(s))?))
            }
            _ => Err(bad(s)),
        }
    }
}

/// Work that can run over any ring.
pub trait RingTask {
    type Output;

    fn run<R: Ring>(self, ring: &R) -> CliResult<Self::Output>;
}

/// Builds the ring named by `spec` and runs `task` on it. Relative table
/// paths are looked up under `base` first, then the working directory.
pub fn dispatch<T: RingTask>(spec: &RingSpec, base: Option<&Path>, task: T) -> CliResult<T::Output> {
    match spec {
        RingSpec::Scalar(Scalar::Rational) => task.run(&Rationals::new()),
        RingSpec::Scalar(Scalar::Mod(p)) => task.run(&PrimeField::new(*p)?),
        RingSpec::Quaternion => task.run(&Quaternions::new()),
        RingSpec::Octonion => task.run(&Octonions::new()),
        RingSpec::Table(path) => task.run(&load_table(path, base)?),
        RingSpec::MatrixRing(m, Scalar::Rational) => task.run(&MatrixRing::new(*m, Rationals::new())?),
        RingSpec::MatrixRing(m, Scalar::Mod(p)) => task.run(&MatrixRing::new(*m, PrimeField::new(*p)?)?),
        RingSpec::Poly(n) => task.run(&PolyRing::new(*n)?),
        RingSpec::Free(n) => task.run(&FreeAlgebra::new(*n)?),
    }
}

fn load_table(path: &str, base: Option<&Path>) -> CliResult<TableAlgebra> {
    if path == SKEW_CUBE {
        return Ok(skew_cube_algebra());
    }
    let candidates: Vec<PathBuf> = base
        .filter(|_| Path::new(path).is_relative())
        .map(|b| b.join(path))
        .into_iter()
        .chain([PathBuf::from(path)])
        .collect();
    let file = candidates
        .iter()
        .find(|p| p.is_file())
        .unwrap_or(&candidates[candidates.len() - 1]);
    let value = crate::matrix_file::read_json(file)?;
    Ok(TableAlgebra::from_json(format!("table:{path}"), &value)?)
}
