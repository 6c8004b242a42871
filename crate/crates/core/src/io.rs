//! Group and character-table files.
//!
//! A group file is `{"name", "degree", "generators"}` where each generator is
//! a list of cycles, or a single cycle written as a flat list.

use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::groups::{FiniteGroup, Permutation};
use crate::homcount::CharacterTable;
use crate::limits::Limits;

#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(untagged)]
enum GeneratorSpec {
    Cycle(Vec<usize>),
    Cycles(Vec<Vec<usize>>),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct GroupFile {
    name: String,
    degree: usize,
    generators: Vec<GeneratorSpec>,
}

fn schema(path: &Path, reason: impl Into<String>) -> Error {
    Error::Schema {
        path: path.to_path_buf(),
        reason: reason.into(),
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.to_path_buf(),
        source,
    })
}

/// Parses a group definition; `origin` only labels errors.
pub fn parse_group(text: &str, origin: &Path, limits: &Limits) -> Result<FiniteGroup> {
    let file: GroupFile = serde_json::from_str(text).map_err(|e| schema(origin, e.to_string()))?;
    if file.degree == 0 || file.degree > u16::MAX as usize {
        return Err(schema(origin, format!("degree {} out of range", file.degree)));
    }
    let mut gens = Vec::with_capacity(file.generators.len());
    for (i, g) in file.generators.iter().enumerate() {
        let cycles = match g {
            GeneratorSpec::Cycle(c) => vec![c.clone()],
            GeneratorSpec::Cycles(cs) => cs.clone(),
        };
        let p = Permutation::from_cycles(file.degree, &cycles)
            .map_err(|e| schema(origin, format!("generator {i}: {e}")))?;
        gens.push(p);
    }
    FiniteGroup::generate(file.name, file.degree, gens, limits)
}

pub fn load_group(path: &Path, limits: &Limits) -> Result<FiniteGroup> {
    parse_group(&read(path)?, path, limits)
}

/// Loads and validates a character table.
pub fn load_table(path: &Path) -> Result<CharacterTable> {
    let text = read(path)?;
    CharacterTable::from_json(&text).map_err(|e| match e {
        Error::Schema { reason, .. } => schema(path, reason),
        e => e,
    })
}

/// Serialises a group in the file format.
pub fn group_to_json(g: &FiniteGroup) -> String {
    let file = GroupFile {
        name: g.name().to_string(),
        degree: g.degree(),
        generators: g
            .generators()
            .iter()
            .map(|p| GeneratorSpec::Cycles(p.cycles()))
            .collect(),
    };
    serde_json::to_string(&file).expect("group serialises")
}

/// Locates the data directory: `REGENUM_DATA`, then `./data`, then the
/// copy in the source tree this crate was built from.
pub fn data_dir() -> PathBuf {
    if let Some(d) = std::env::var_os("REGENUM_DATA") {
        return PathBuf::from(d);
    }
    let local = PathBuf::from("data");
    if local.join("groups").is_dir() {
        return local;
    }
    Path::new(env!("CARGO_MANIFEST_DIR")).join("../../data")
}

/// Resolves a group argument: an existing path, or a name under `data/groups`.
pub fn group_path(data: &Path, name: &str) -> PathBuf {
    let p = PathBuf::from(name);
    if p.extension().is_some() && p.exists() {
        return p;
    }
    data.join("groups").join(format!("{name}.json"))
}

/// The shipped table for a group name, if there is one.
pub fn table_path(data: &Path, name: &str) -> Option<PathBuf> {
    let p = data.join("tables").join(format!("{name}.json"));
    p.exists().then_some(p)
}

/// A group together with its character table when one is shipped. The table
/// is bound to the group (class by class) before it is returned.
pub fn load_named(data: &Path, name: &str, limits: &Limits) -> Result<(FiniteGroup, Option<CharacterTable>)> {
    let g = load_group(&group_path(data, name), limits)?;
    let table = match table_path(data, g.name()) {
        Some(p) => {
            let t = load_table(&p)?;
            t.bind(&g)?;
            Some(t)
        }
        None => None,
    };
    Ok((g, table))
}
