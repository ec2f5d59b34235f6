//! Input documents.
//!
//! A complex file is a JSON object:
//!
//! ```json
//! { "m": 3, "maximal_faces": [[1, 2], [2, 3], [1, 3]] }
//! ```
//!
//! It may carry a `subgroup` block of the same shape as a standalone
//! subgroup file: `{ "kind": "torus", "generators": [[1, 1, 1]] }`, with
//! 0/1 rows for `"real"` and integer rows for `"torus"`.

use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};
use crate::freeness::{GroupKind, SubgroupSpec};

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct ComplexFile {
    pub m: usize,
    pub maximal_faces: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub subgroup: Option<SubgroupFile>,
}

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct SubgroupFile {
    pub kind: GroupKind,
    pub generators: Vec<Vec<i64>>,
}

impl ComplexFile {
    pub fn from_complex(k: &SimplicialComplex) -> Self {
        ComplexFile {
            m: k.ground_set(),
            maximal_faces: k.facets(),
            subgroup: None,
        }
    }

    pub fn complex(&self) -> Result<SimplicialComplex> {
        SimplicialComplex::from_facets(self.m, &self.maximal_faces)
    }
}

impl SubgroupFile {
    pub fn spec(&self, m: usize) -> Result<SubgroupSpec> {
        SubgroupSpec::new(self.kind, m, &self.generators)
    }
}

fn parse<T: for<'de> Deserialize<'de>>(text: &str, origin: &str) -> Result<T> {
    // serde_json reports "... at line L column C".
    serde_json::from_str(text).map_err(|e| Error::Input(format!("{origin}: {e}")))
}

pub fn parse_complex_file(text: &str, origin: &str) -> Result<ComplexFile> {
    parse(text, origin)
}

pub fn parse_subgroup_file(text: &str, origin: &str) -> Result<SubgroupFile> {
    parse(text, origin)
}

pub fn read_complex_file(path: &Path) -> Result<ComplexFile> {
    let text = read(path)?;
    parse_complex_file(&text, &path.display().to_string())
}

pub fn read_subgroup_file(path: &Path) -> Result<SubgroupFile> {
    let text = read(path)?;
    parse_subgroup_file(&text, &path.display().to_string())
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Input(format!("{}: {e}", path.display())))
}
