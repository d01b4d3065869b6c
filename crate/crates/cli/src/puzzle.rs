//! The document handed to the puzzle board: rays, bases, basis-lines and
//! optionally every parity proof, with a checksum over the canonical JSON.
//!
//! Canonical JSON here means object keys in byte order, no whitespace
//! between tokens, UTF-8, and a single trailing LF in files.

use std::collections::BTreeSet;
use std::path::Path;

use peres_core::geometry::BasisClass;
use peres_core::proofs::{classify_proof, enumerate_kernel, is_parity_proof, ProofKind};
use peres_core::{peres, BasisId, BasisSet};
use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::error::{CliError, CliResult};

pub const SCHEMA_VERSION: u32 = 1;
const CHECKSUM_PREFIX: &str = "sha256:";

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct RayRecord {
    pub id: u8,
    pub cell: String,
    pub components: [i32; 4],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct BasisRecord {
    pub id: u8,
    pub rays: [u8; 4],
    /// `inner` or `outer`.
    pub class: String,
    /// Set for inner bases only.
    pub cell: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct BasisLineRecord {
    pub inner_a: u8,
    pub inner_b: u8,
    pub outer: [u8; 2],
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct ProofRecord {
    pub kind: String,
    pub bases: Vec<u8>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct PuzzleDocument {
    pub schema_version: u32,
    pub rays: Vec<RayRecord>,
    pub bases: Vec<BasisRecord>,
    pub basis_lines: Vec<BasisLineRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub known_proofs: Option<Vec<ProofRecord>>,
    #[serde(default)]
    pub checksum: String,
}

fn class_fields(class: BasisClass) -> (String, Option<String>) {
    match class {
        BasisClass::Inner(cell) => ("inner".into(), Some(cell.letter().to_string())),
        BasisClass::Outer => ("outer".into(), None),
    }
}

fn known_proofs() -> CliResult<Vec<ProofRecord>> {
    let mut records = Vec::new();
    for p in enumerate_kernel()? {
        let c = classify_proof(&p)?;
        records.push(ProofRecord {
            kind: c.kind.to_string(),
            bases: p.bases().ids(),
        });
    }
    Ok(records)
}

pub fn ray_records() -> Vec<RayRecord> {
    peres()
        .rays()
        .iter()
        .map(|r| RayRecord {
            id: r.id.get(),
            cell: r.id.cell().letter().to_string(),
            components: r.components,
        })
        .collect()
}

pub fn basis_records() -> Vec<BasisRecord> {
    peres()
        .bases()
        .iter()
        .map(|b| {
            let (class, cell) = class_fields(b.class);
            BasisRecord {
                id: b.id.get(),
                rays: b.ray_ids(),
                class,
                cell,
            }
        })
        .collect()
}

pub fn basis_line_records() -> Vec<BasisLineRecord> {
    peres()
        .basis_lines()
        .iter()
        .map(|l| BasisLineRecord {
            inner_a: l.inner_a.get(),
            inner_b: l.inner_b.get(),
            outer: l.outer.map(BasisId::get),
        })
        .collect()
}

impl PuzzleDocument {
    pub fn build(include_proofs: bool) -> CliResult<Self> {
        let known_proofs = if include_proofs {
            Some(known_proofs()?)
        } else {
            None
        };
        let mut doc = PuzzleDocument {
            schema_version: SCHEMA_VERSION,
            rays: ray_records(),
            bases: basis_records(),
            basis_lines: basis_line_records(),
            known_proofs,
            checksum: String::new(),
        };
        doc.checksum = doc.compute_checksum();
        Ok(doc)
    }

    fn body_value(&self) -> Value {
        let mut value = serde_json::to_value(self).expect("document serializes");
        if let Value::Object(map) = &mut value {
            map.remove("checksum");
        }
        value
    }

    /// `sha256:` followed by the hex digest of the canonical JSON of the
    /// document without its `checksum` member.
    pub fn compute_checksum(&self) -> String {
        let body = serde_json::to_string(&self.body_value()).expect("document serializes");
        let digest = Sha256::digest(body.as_bytes());
        format!("{CHECKSUM_PREFIX}{}", hex::encode(digest))
    }

    /// Canonical JSON text with a trailing LF.
    pub fn to_canonical_json(&self) -> String {
        // Value keeps object members in a sorted map.
        let value = serde_json::to_value(self).expect("document serializes");
        let mut text = serde_json::to_string(&value).expect("document serializes");
        text.push('\n');
        text
    }

    pub fn from_json(text: &str) -> CliResult<Self> {
        serde_json::from_str(text).map_err(|e| CliError::Document(e.to_string()))
    }

    pub fn write(&self, path: &Path) -> CliResult<()> {
        std::fs::write(path, self.to_canonical_json()).map_err(|source| CliError::Io {
            path: path.to_path_buf(),
            source,
        })
    }

    pub fn read(path: &Path) -> CliResult<Self> {
        let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
            path: path.to_path_buf(),
            source,
        })?;
        Self::from_json(&text)
    }

    /// Checks the checksum, then every record against the geometry computed
    /// from scratch. Known proofs must be distinct parity proofs carrying the
    /// right kind.
    pub fn validate(&self) -> CliResult<()> {
        let fail = |msg: String| Err(CliError::Document(msg));
        if self.schema_version != SCHEMA_VERSION {
            return fail(format!("unsupported schemaVersion {}", self.schema_version));
        }
        let expected = self.compute_checksum();
        if self.checksum != expected {
            return fail(format!(
                "checksum {} does not match {expected}",
                self.checksum
            ));
        }
        let reference = Self::build(false)?;
        if self.rays != reference.rays {
            return fail("rays differ from the computed ray table".into());
        }
        if self.bases != reference.bases {
            return fail("bases differ from the computed bases".into());
        }
        if self.basis_lines != reference.basis_lines {
            return fail("basisLines differ from the computed basis-lines".into());
        }
        if let Some(proofs) = &self.known_proofs {
            let mut seen = BTreeSet::new();
            for record in proofs {
                let set = BasisSet::from_ids(&record.bases)
                    .map_err(|e| CliError::Document(e.to_string()))?;
                if set.len() != record.bases.len() || !seen.insert(set.bits()) {
                    return fail(format!("repeated basis or proof in {:?}", record.bases));
                }
                let Some(proof) = is_parity_proof(set) else {
                    return fail(format!("{:?} is not a parity proof", record.bases));
                };
                let kind: ProofKind = record
                    .kind
                    .parse()
                    .map_err(|_| CliError::Document(format!("unknown kind {}", record.kind)))?;
                if classify_proof(&proof)?.kind != kind {
                    return fail(format!("{:?} is not of kind {}", record.bases, record.kind));
                }
            }
        }
        Ok(())
    }
}
