//! OEIS b-files and the sequences they are checked against.

use std::path::{Path, PathBuf};

use ncharm::frobenius::Module;
use ncharm::{rational, Rational};
use num_bigint::BigInt;

#[derive(Debug, thiserror::Error)]
pub enum BFileError {
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BFile {
    pub id: String,
    /// `(index, value)` with strictly increasing indices.
    pub entries: Vec<(i64, BigInt)>,
}

impl BFile {
    /// Lines are `index value`; blank lines and lines starting with `#` are skipped.
    pub fn parse(id: &str, text: &str) -> Result<BFile, BFileError> {
        let mut entries: Vec<(i64, BigInt)> = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |msg: String| BFileError::Parse { line: i + 1, msg };
            let mut fields = line.split_whitespace();
            let (Some(a), Some(b), None) = (fields.next(), fields.next(), fields.next()) else {
                return Err(err(format!("expected two fields, got {:?}", line)));
            };
            let index: i64 = a.parse().map_err(|_| err(format!("bad index {:?}", a)))?;
            let value: BigInt = b.parse().map_err(|_| err(format!("bad value {:?}", b)))?;
            if let Some((prev, _)) = entries.last() {
                if index <= *prev {
                    return Err(err(format!("index {} does not follow {}", index, prev)));
                }
            }
            entries.push((index, value));
        }
        Ok(BFile { id: id.to_string(), entries })
    }

    pub fn read(id: &str, path: &Path) -> Result<BFile, BFileError> {
        let text = std::fs::read_to_string(path).map_err(|source| BFileError::Io { path: path.to_path_buf(), source })?;
        Self::parse(id, &text)
    }

    /// The first index, which is aligned with `q^0`.
    pub fn offset(&self) -> Option<i64> {
        self.entries.first().map(|(i, _)| *i)
    }
}

/// Which Hilbert series each sequence records.
pub const BINDINGS: [(&str, Module, usize); 10] = [
    ("A122391", Module::MHar, 2),
    ("A122392", Module::MHar, 3),
    ("A122393", Module::MHar, 4),
    ("A122394", Module::MHar, 5),
    ("A122367", Module::NCHar, 3),
    ("A122368", Module::NCHar, 4),
    ("A122369", Module::NCHar, 5),
    ("A122370", Module::NCHar, 6),
    ("A122371", Module::NCHar, 7),
    ("A122372", Module::NCHar, 8),
];

pub fn binding(id: &str) -> Option<(Module, usize)> {
    BINDINGS.iter().find(|(s, _, _)| *s == id).map(|&(_, m, n)| (m, n))
}

/// `bNNNNNN.txt` for `ANNNNNN`.
pub fn file_name(id: &str) -> String {
    format!("b{}.txt", id.trim_start_matches('A'))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Comparison {
    pub id: String,
    pub module: Module,
    pub n: usize,
    pub compared: usize,
    /// `(b-file index, b-file value, computed value)` of the first disagreement.
    pub mismatch: Option<(i64, BigInt, Rational)>,
}

impl Comparison {
    pub fn passed(&self) -> bool {
        self.mismatch.is_none() && self.compared > 0
    }
}

impl std::fmt::Display for Comparison {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.mismatch {
            None if self.compared > 0 => {
                write!(f, "PASS {} ({}_{}): {} terms agree", self.id, self.module, self.n, self.compared)
            }
            None => write!(f, "FAIL {} ({}_{}): no overlapping terms", self.id, self.module, self.n),
            Some((i, want, got)) => write!(
                f,
                "FAIL {} ({}_{}): index {} has {} in the b-file, computed {}",
                self.id,
                self.module,
                self.n,
                i,
                want,
                rational::to_string(got)
            ),
        }
    }
}

/// Compares the b-file with the Hilbert series of the bound module on every
/// index up to `offset + max_degree`.
pub fn compare(b: &BFile, module: Module, n: usize, max_degree: usize) -> Comparison {
    let offset = b.offset().unwrap_or(0);
    let last = b.entries.last().map(|(i, _)| (i - offset) as usize).unwrap_or(0);
    let trunc = last.min(max_degree);
    let hs = module.frob(n, trunc).hilbert();
    let mut compared = 0;
    let mut mismatch = None;
    for (i, want) in &b.entries {
        let k = (i - offset) as usize;
        if k > trunc {
            break;
        }
        let got = hs.coeff(k);
        compared += 1;
        if got != Rational::from_integer(want.clone()) {
            mismatch = Some((*i, want.clone(), got));
            break;
        }
    }
    Comparison { id: b.id.clone(), module, n, compared, mismatch }
}
