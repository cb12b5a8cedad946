//! File formats for relations, morphisms, stream objects, and reports.
//!
//! Relations are a single object with fields "minus", "plus", and "rel"
//! (rows of 0/1 integers).  Morphisms carry "source" and "target" either
//! inline or as file paths, plus "minus_map" / "plus_map" index arrays.
//! Stream objects are tagged with a "kind" field.  Reports are stable:
//! given the same inputs, flags, and seed the serialized bytes are
//! identical, which is why elapsed time is reported on stderr rather than
//! inside the report.

use crate::relation::{FiniteRelation, RelationError};
use crate::streams::partition::RecurrencePartition;
use crate::streams::{
    ChoppedReal, InfiniteSubset, IntervalPartition, Partition, RecurrenceKind, StreamError,
    UlpFunction,
};
use serde::{Deserialize, Serialize};
use std::io::Read;
use std::path::Path;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("cannot read {path}: {source}")]
    Read {
        path: String,
        source: std::io::Error,
    },
    #[error("cannot write {path}: {source}")]
    Write {
        path: String,
        source: std::io::Error,
    },
    #[error("malformed input: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid relation: {0}")]
    Relation(#[from] RelationError),
    #[error("invalid stream object: {0}")]
    Stream(#[from] StreamError),
}

/// Reads a file, or standard input when the path is "-".
pub fn read_input(path: &str) -> Result<String, IoError> {
    if path == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|source| IoError::Read {
                path: "-".into(),
                source,
            })?;
        Ok(buf)
    } else {
        std::fs::read_to_string(path).map_err(|source| IoError::Read {
            path: path.into(),
            source,
        })
    }
}

pub fn write_output(path: &str, content: &str) -> Result<(), IoError> {
    if path == "-" {
        print!("{content}");
        Ok(())
    } else {
        std::fs::write(path, content).map_err(|source| IoError::Write {
            path: path.into(),
            source,
        })
    }
}

// ---------------------------------------------------------------------------
// Relations

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RelationFile {
    pub minus: Vec<String>,
    pub plus: Vec<String>,
    pub rel: Vec<Vec<u8>>,
    /// Set by construction verbs to name the combinator and its factors.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<String>,
}

impl RelationFile {
    pub fn from_relation(r: &FiniteRelation) -> Self {
        RelationFile {
            minus: r.minus_labels().to_vec(),
            plus: r.plus_labels().to_vec(),
            rel: r
                .matrix()
                .iter()
                .map(|row| row.iter().map(|&b| u8::from(b)).collect())
                .collect(),
            provenance: r.provenance.clone(),
        }
    }

    pub fn into_relation(self) -> Result<FiniteRelation, IoError> {
        let matrix = self
            .rel
            .iter()
            .map(|row| row.iter().map(|&v| v != 0).collect())
            .collect();
        let rel = FiniteRelation::new(self.minus, self.plus, matrix)?;
        Ok(match self.provenance {
            Some(p) => rel.with_provenance(p),
            None => rel,
        })
    }
}

pub fn parse_relation(text: &str) -> Result<FiniteRelation, IoError> {
    serde_json::from_str::<RelationFile>(text)?.into_relation()
}

pub fn load_relation(path: &str) -> Result<FiniteRelation, IoError> {
    parse_relation(&read_input(path)?)
}

pub fn relation_to_string(r: &FiniteRelation) -> String {
    serde_json::to_string_pretty(&RelationFile::from_relation(r)).expect("plain data")
}

// ---------------------------------------------------------------------------
// Morphisms

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(untagged)]
pub enum RelationRef {
    Inline(RelationFile),
    Path(String),
}

impl RelationRef {
    /// Resolves an inline object directly; paths are read relative to
    /// `base_dir` (the directory of the morphism file).
    pub fn resolve(&self, base_dir: &Path) -> Result<FiniteRelation, IoError> {
        match self {
            RelationRef::Inline(f) => f.clone().into_relation(),
            RelationRef::Path(p) => {
                let joined = base_dir.join(p);
                load_relation(&joined.to_string_lossy())
            }
        }
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MorphismFile {
    pub source: RelationRef,
    pub target: RelationRef,
    pub minus_map: Vec<usize>,
    pub plus_map: Vec<usize>,
}

pub fn load_morphism_file(path: &str) -> Result<(MorphismFile, std::path::PathBuf), IoError> {
    let text = read_input(path)?;
    let file: MorphismFile = serde_json::from_str(&text)?;
    let base = if path == "-" {
        std::path::PathBuf::from(".")
    } else {
        Path::new(path)
            .parent()
            .map(Path::to_path_buf)
            .unwrap_or_else(|| std::path::PathBuf::from("."))
    };
    Ok((file, base))
}

// ---------------------------------------------------------------------------
// Stream objects

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct UlpFile {
    pub prefix: Vec<u64>,
    pub period: u64,
    pub increment: u64,
    pub cycle: Vec<u64>,
}

impl UlpFile {
    pub fn from_fn(f: &UlpFunction) -> Self {
        UlpFile {
            prefix: f.prefix().to_vec(),
            period: f.period(),
            increment: f.increment(),
            cycle: f.cycle().to_vec(),
        }
    }

    pub fn into_fn(self) -> Result<UlpFunction, IoError> {
        Ok(UlpFunction::with_period(
            self.prefix,
            self.period,
            self.increment,
            self.cycle,
        )?)
    }
}

/// Kind-tagged wrappers around ULP data.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum StreamObject {
    Function {
        #[serde(flatten)]
        ulp: UlpFile,
    },
    Set {
        bits: UlpFile,
    },
    Partition {
        gaps: UlpFile,
    },
    RecurrencePartition {
        recurrence: RecurrenceKind,
        f: UlpFile,
    },
    Chopped {
        stream: UlpFile,
        partition: Box<StreamObject>,
    },
}

impl StreamObject {
    pub fn from_function(f: &UlpFunction) -> Self {
        StreamObject::Function {
            ulp: UlpFile::from_fn(f),
        }
    }

    pub fn from_set(s: &InfiniteSubset) -> Self {
        StreamObject::Set {
            bits: UlpFile::from_fn(s.bits()),
        }
    }

    pub fn from_partition(p: &Partition) -> Self {
        match p {
            Partition::Ulp(ip) => StreamObject::Partition {
                gaps: UlpFile::from_fn(ip.gaps()),
            },
            Partition::Recurrence(r) => StreamObject::RecurrencePartition {
                recurrence: r.kind,
                f: UlpFile::from_fn(&r.f),
            },
        }
    }

    pub fn from_chopped(c: &ChoppedReal) -> Self {
        StreamObject::Chopped {
            stream: UlpFile::from_fn(c.stream()),
            partition: Box::new(StreamObject::from_partition(c.partition())),
        }
    }

    pub fn into_function(self) -> Result<UlpFunction, IoError> {
        match self {
            StreamObject::Function { ulp } => ulp.into_fn(),
            other => Err(IoError::Json(serde_json::Error::io(
                std::io::Error::new(
                    std::io::ErrorKind::InvalidData,
                    format!("expected kind \"function\", got {other:?}"),
                ),
            ))),
        }
    }

    pub fn into_partition(self) -> Result<Partition, IoError> {
        match self {
            StreamObject::Partition { gaps } => Ok(Partition::Ulp(IntervalPartition::new(
                gaps.into_fn()?,
            )?)),
            StreamObject::RecurrencePartition { recurrence, f } => {
                Ok(Partition::Recurrence(RecurrencePartition {
                    kind: recurrence,
                    f: f.into_fn()?,
                }))
            }
            other => Err(IoError::Json(serde_json::Error::io(
                std::io::Error::new(
                    std::io::ErrorKind::InvalidData,
                    format!("expected a partition kind, got {other:?}"),
                ),
            ))),
        }
    }
}

// ---------------------------------------------------------------------------
// Reports

/// The machine-readable result of one CLI invocation.  `elapsed_ms` is part
/// of the schema but always null: reports must be byte-identical across
/// runs, so wall-clock timing goes to stderr instead.
#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub verb: String,
    pub inputs: Vec<String>,
    pub result: serde_json::Value,
    pub witness: serde_json::Value,
    pub mode: Option<String>,
    pub seed: Option<u64>,
    pub elapsed_ms: Option<u64>,
}

impl Report {
    pub fn new(verb: &str, inputs: Vec<String>) -> Self {
        Report {
            verb: verb.to_string(),
            inputs,
            result: serde_json::Value::Null,
            witness: serde_json::Value::Null,
            mode: None,
            seed: None,
            elapsed_ms: None,
        }
    }

    pub fn to_string_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data")
    }
}
