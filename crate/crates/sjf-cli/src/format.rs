//! `ExpansionFileV1`: truncated Fourier expansions as canonical JSON.
//!
//! Rationals are `"p/q"` strings, coefficients are ordered by the
//! normalized key encoding, object keys are sorted and the file ends with
//! a single LF.

use crate::error::CliError;
use serde::{Deserialize, Serialize};
use sjf_exact::rational::{parse, to_pq, Rational};
use sjf_exact::RatMatrix;
use sjf_fourier::{ExpansionMeta, FourierExpansion, FourierKey};
use std::path::Path;

pub const VERSION: &str = "sjf-expansion-v1";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LevelV1 {
    pub b: String,
    #[serde(rename = "N")]
    pub n: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoeffV1 {
    pub t: Vec<Vec<String>>,
    pub r: Vec<Vec<String>>,
    pub c: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExpansionFileV1 {
    pub version: String,
    pub n: usize,
    pub l: usize,
    pub weight: String,
    pub index: Vec<Vec<String>>,
    pub level: LevelV1,
    pub coeffs: Vec<CoeffV1>,
    pub trunc: String,
}

fn rows(m: &RatMatrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| m.row(i).iter().map(to_pq).collect()).collect()
}

fn rat(s: &str) -> Result<Rational, CliError> {
    parse(s).map_err(|_| CliError::format(format!("{s:?} is not a rational p/q")))
}

fn matrix(v: &[Vec<String>], rows: usize, cols: usize, what: &str) -> Result<RatMatrix, CliError> {
    if v.len() != rows || v.iter().any(|r| r.len() != cols) {
        return Err(CliError::format(format!("{what} must be {rows}x{cols}")));
    }
    let entries = v.iter().flatten().map(|x| rat(x)).collect::<Result<Vec<_>, _>>()?;
    Ok(RatMatrix::new(rows, cols, entries)?)
}

impl ExpansionFileV1 {
    pub fn from_expansion(f: &FourierExpansion) -> Self {
        let m = f.meta();
        let mut coeffs: Vec<(Vec<u8>, CoeffV1)> =
            f.iter().map(|(k, c)| (k.encode(), CoeffV1 { t: rows(&k.t), r: rows(&k.r), c: to_pq(c) })).collect();
        coeffs.sort_by(|a, b| a.0.cmp(&b.0));
        ExpansionFileV1 {
            version: VERSION.into(),
            n: m.n,
            l: m.l,
            weight: to_pq(&m.weight),
            index: rows(&m.index),
            level: LevelV1 { b: to_pq(&m.level_b), n: m.level_c },
            coeffs: coeffs.into_iter().map(|(_, c)| c).collect(),
            trunc: to_pq(f.trunc()),
        }
    }

    pub fn to_expansion(&self) -> Result<FourierExpansion, CliError> {
        if self.version != VERSION {
            return Err(CliError::format(format!("unknown version {:?}, expected {VERSION:?}", self.version)));
        }
        let (n, l) = (self.n, self.l);
        let meta = ExpansionMeta {
            n,
            l,
            weight: rat(&self.weight)?,
            index: matrix(&self.index, l, l, "index")?,
            level_b: rat(&self.level.b)?,
            level_c: self.level.n,
        };
        let mut terms = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            let key = FourierKey::new(matrix(&c.t, n, n, "t")?, matrix(&c.r, l, n, "r")?)?;
            terms.push((key, rat(&c.c)?));
        }
        if terms.len() != terms.iter().map(|(k, _)| k).collect::<std::collections::BTreeSet<_>>().len() {
            return Err(CliError::format("duplicate Fourier keys"));
        }
        Ok(FourierExpansion::new(meta, rat(&self.trunc)?, terms)?)
    }

    /// Canonical text: sorted object keys, two-space indentation, final LF.
    pub fn to_canonical_string(&self) -> String {
        let value = serde_json::to_value(self).expect("serializable");
        let mut s = serde_json::to_string_pretty(&value).expect("serializable");
        s.push('\n');
        s
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::format(format!("invalid expansion file: {e}")))
    }
}

pub fn read_expansion(path: &Path) -> Result<FourierExpansion, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    ExpansionFileV1::parse(&text)?.to_expansion()
}

pub fn write_expansion(path: &Path, f: &FourierExpansion) -> Result<(), CliError> {
    write_text(path, &ExpansionFileV1::from_expansion(f).to_canonical_string())
}

pub fn write_text(path: &Path, text: &str) -> Result<(), CliError> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
    }
    std::fs::write(path, text).map_err(|e| CliError::io(path, e))
}
