//! On-disk formats: one group per JSON file, and corpus manifests.
//!
//! A group file is
//!
//! ```json
//! {"name": "S3", "degree": 3, "generators": [[1, 0, 2], [1, 2, 0]]}
//! ```
//!
//! with each generator given by its 0-based image list. A manifest wraps a
//! list of such records, each optionally carrying the recipe it came from.

use std::sync::Arc;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::corpus::{Corpus, CorpusEntry, GroupRecipe};
use crate::error::GroupError;
use crate::iso;
use crate::perm::{FiniteGroup, Permutation, MAX_DEGREE, ORDER_BUDGET};

pub const MANIFEST_SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Group(#[from] GroupError),
    #[error("generator {index}: {reason}")]
    Generator { index: usize, reason: String },
    #[error("unsupported schema version {0}")]
    SchemaVersion(u32),
    #[error("group {name:?}: {reason}")]
    Member { name: String, reason: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GroupRecord {
    pub name: String,
    pub degree: usize,
    pub generators: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub recipe: Option<String>,
}

impl GroupRecord {
    pub fn of(g: &FiniteGroup) -> Self {
        GroupRecord {
            name: g.name().unwrap_or("G").to_string(),
            degree: g.degree(),
            generators: g.generators().iter().map(|p| p.images()).collect(),
            recipe: None,
        }
    }

    /// Validates the record and generates its group.
    pub fn to_group(&self) -> Result<FiniteGroup, FormatError> {
        if self.degree == 0 || self.degree > MAX_DEGREE {
            return Err(GroupError::DegreeTooLarge(self.degree).into());
        }
        let mut gens = Vec::with_capacity(self.generators.len());
        for (index, images) in self.generators.iter().enumerate() {
            if images.len() != self.degree {
                return Err(FormatError::Generator {
                    index,
                    reason: format!("has {} images, degree is {}", images.len(), self.degree),
                });
            }
            let p = Permutation::from_images(images).map_err(|e| FormatError::Generator {
                index,
                reason: e.to_string(),
            })?;
            gens.push(p);
        }
        if gens.is_empty() {
            gens.push(Permutation::identity(self.degree));
        }
        Ok(FiniteGroup::new(self.degree, gens)?.with_name(self.name.clone()))
    }
}

/// Parses a group file.
pub fn parse_group(text: &str) -> Result<FiniteGroup, FormatError> {
    let record: GroupRecord = serde_json::from_str(text)?;
    record.to_group()
}

/// Prints a group file; [`parse_group`] reads it back to the same
/// permutations.
pub fn print_group(g: &FiniteGroup) -> String {
    serde_json::to_string_pretty(&GroupRecord::of(g)).expect("records serialize")
}

#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Manifest {
    pub schema_version: u32,
    pub max_order: usize,
    pub groups: Vec<GroupRecord>,
}

impl Manifest {
    pub fn of(corpus: &Corpus) -> Self {
        Manifest {
            schema_version: MANIFEST_SCHEMA_VERSION,
            max_order: corpus.max_order,
            groups: corpus
                .iter()
                .map(|e| GroupRecord {
                    recipe: e.recipe.as_ref().map(|r| r.to_string()),
                    ..GroupRecord::of(&e.group)
                })
                .collect(),
        }
    }
}

pub fn print_manifest(corpus: &Corpus) -> String {
    serde_json::to_string_pretty(&Manifest::of(corpus)).expect("manifests serialize")
}

/// Reads a manifest into a corpus.
///
/// Members keep manifest order. Each must fit `max_order`, carry a recipe
/// (if any) predicting its order, and not be isomorphic to an earlier
/// member.
pub fn parse_manifest(text: &str) -> Result<Corpus, FormatError> {
    let m: Manifest = serde_json::from_str(text)?;
    if m.schema_version != MANIFEST_SCHEMA_VERSION {
        return Err(FormatError::SchemaVersion(m.schema_version));
    }
    if m.max_order == 0 || m.max_order > ORDER_BUDGET {
        return Err(GroupError::OrderBudget {
            limit: ORDER_BUDGET,
        }
        .into());
    }
    let mut groups: Vec<CorpusEntry> = Vec::with_capacity(m.groups.len());
    let mut notices = Vec::new();
    for rec in &m.groups {
        let bad = |reason: String| FormatError::Member {
            name: rec.name.clone(),
            reason,
        };
        let g = rec.to_group()?;
        if g.order() > m.max_order {
            return Err(bad(format!(
                "order {} exceeds max_order {}",
                g.order(),
                m.max_order
            )));
        }
        let recipe = match &rec.recipe {
            None => None,
            Some(s) => {
                let r: GroupRecipe = s.parse()?;
                let predicted = r.predicted_order()?;
                if predicted != g.order() as u64 {
                    return Err(bad(format!(
                        "recipe {s} has order {predicted}, generators give {}",
                        g.order()
                    )));
                }
                Some(r)
            }
        };
        for e in &groups {
            match iso::isomorphic(&g, &e.group) {
                Ok(true) => return Err(bad(format!("isomorphic to {}", e.name()))),
                Ok(false) => {}
                Err(err) => notices.push(format!(
                    "{} vs {}: {err}; kept as distinct",
                    rec.name,
                    e.name()
                )),
            }
        }
        groups.push(CorpusEntry {
            recipe,
            group: Arc::new(g),
        });
    }
    Ok(Corpus {
        max_order: m.max_order,
        groups,
        notices,
    })
}
