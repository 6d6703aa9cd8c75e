//! The group catalog: every group of order ≤ 27, as permutation generators.
//!
//! The catalog ships as a line-oriented text file embedded in the crate
//! (`data/groups.cat`) and can also be loaded from disk.  Format, with `#`
//! starting a comment anywhere on a line:
//!
//! ```text
//! group <order> <name>
//! gen <img0> <img1> ... <img(d-1)>   # one line per generator, 0-based images
//! end
//! ```
//!
//! Element ordering of each group is fixed by BFS closure over the listed
//! generators (see [`FiniteGroup::from_generators`]), so the file determines
//! the element indexing used everywhere downstream.

use crate::group::{FiniteGroup, GroupError};
use crate::perm::Perm;
use std::path::Path;
use thiserror::Error;

const BUILTIN: &str = include_str!("../data/groups.cat");

/// Published number of groups of each order 1–27; index = order.
pub const GROUP_COUNTS: [usize; 28] = [
    0, 1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14, 1, 5, 1, 5, 2, 2, 1,
    15, 2, 2, 5,
];

#[derive(Debug, Error)]
pub enum CatalogError {
    #[error("cannot read catalog: {0}")]
    Io(#[from] std::io::Error),
    #[error("catalog parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("catalog group {name}: {source}")]
    Group { name: String, source: GroupError },
}

/// All catalog groups, in file order.  File order is the tie-breaking order
/// for every group list the classifier emits.
#[derive(Debug, Clone)]
pub struct GroupCatalog {
    groups: Vec<FiniteGroup>,
}

impl GroupCatalog {
    /// The catalog embedded in the crate: all 83 groups of order ≤ 27.
    pub fn builtin() -> GroupCatalog {
        GroupCatalog::parse(BUILTIN).expect("embedded catalog is valid")
    }

    pub fn load(path: &Path) -> Result<GroupCatalog, CatalogError> {
        GroupCatalog::parse(&std::fs::read_to_string(path)?)
    }

    pub fn parse(text: &str) -> Result<GroupCatalog, CatalogError> {
        let mut groups = Vec::new();
        let mut current: Option<(usize, String, Vec<Perm>)> = None;
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: &str| CatalogError::Parse {
                line: lineno + 1,
                msg: msg.to_string(),
            };
            let mut tokens = line.split_whitespace();
            match tokens.next().unwrap() {
                "group" => {
                    if current.is_some() {
                        return Err(err("previous record not closed with 'end'"));
                    }
                    let order: usize = tokens
                        .next()
                        .and_then(|t| t.parse().ok())
                        .ok_or_else(|| err("expected 'group <order> <name>'"))?;
                    let name = tokens
                        .next()
                        .ok_or_else(|| err("expected 'group <order> <name>'"))?
                        .to_string();
                    if tokens.next().is_some() {
                        return Err(err("trailing tokens after group header"));
                    }
                    current = Some((order, name, Vec::new()));
                }
                "gen" => {
                    let record = current
                        .as_mut()
                        .ok_or_else(|| err("'gen' outside a group record"))?;
                    let images: Result<Perm, _> =
                        tokens.map(|t| t.parse::<usize>()).collect();
                    record.2.push(
                        images.map_err(|_| err("non-numeric generator image"))?,
                    );
                }
                "end" => {
                    let (order, name, gens) = current
                        .take()
                        .ok_or_else(|| err("'end' outside a group record"))?;
                    let group =
                        FiniteGroup::from_generators(&gens, order, &name)
                            .map_err(|source| CatalogError::Group {
                                name: name.clone(),
                                source,
                            })?;
                    groups.push(group);
                }
                _ => return Err(err("expected 'group', 'gen' or 'end'")),
            }
        }
        if current.is_some() {
            return Err(CatalogError::Parse {
                line: text.lines().count(),
                msg: "unterminated group record".to_string(),
            });
        }
        Ok(GroupCatalog { groups })
    }

    pub fn groups(&self) -> &[FiniteGroup] {
        &self.groups
    }

    /// Groups of the given order, preserving file order.
    pub fn of_order(&self, v: usize) -> Vec<&FiniteGroup> {
        self.groups.iter().filter(|g| g.order() == v).collect()
    }

    /// Position of a group name in the catalog, if present.
    pub fn position(&self, name: &str) -> Option<usize> {
        self.groups.iter().position(|g| g.name() == name)
    }

    /// The published group count for an order, if in the covered range.
    pub fn expected_count(order: usize) -> Option<usize> {
        GROUP_COUNTS.get(order).copied().filter(|&c| c > 0)
    }

    /// `true` iff the catalog holds exactly the published number of groups of
    /// order `v`.
    pub fn is_complete_for(&self, v: usize) -> bool {
        Self::expected_count(v)
            .is_some_and(|expected| self.of_order(v).len() == expected)
    }
}
