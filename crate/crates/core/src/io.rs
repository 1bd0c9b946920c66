//! graph6 files with an optional JSON sidecar (`<file>.json`) carrying the
//! bipartition and, for constructions, the parameters and regions.

use std::fs;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};

use crate::constructions::{ConstructionParams, LabeledConstruction, Region};
use crate::error::Result;
use crate::graph::{BipartiteGraph, Graph, Side};
use crate::graph6::{decode_graph6_lines, encode_graph6};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bipartition {
    /// `X = 0..n`, `Y = n..n + b`.
    pub n: usize,
    pub b: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Sidecar {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub params: Option<ConstructionParams>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub region_of: Option<Vec<Region>>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub bipartition: Option<Bipartition>,
}

impl Sidecar {
    pub fn for_construction(c: &LabeledConstruction) -> Self {
        let bipartition = match c.params {
            ConstructionParams::F { b, n, .. } => Some(Bipartition { n, b }),
            ConstructionParams::H { .. } => None,
        };
        Sidecar {
            params: Some(c.params),
            region_of: Some(c.region_of.clone()),
            bipartition,
        }
    }

    /// Applies the recorded bipartition to `g`, if there is one.
    pub fn bipartite(&self, g: &Graph) -> Result<Option<BipartiteGraph>> {
        match &self.bipartition {
            None => Ok(None),
            Some(bp) => {
                let parts: Vec<Side> = BipartiteGraph::standard_parts(bp.n, bp.b);
                Ok(Some(BipartiteGraph::new(g.clone(), parts)?))
            }
        }
    }
}

pub fn sidecar_path(graph_path: &Path) -> PathBuf {
    let mut name = graph_path.as_os_str().to_owned();
    name.push(".json");
    PathBuf::from(name)
}

/// Writes `g` as a one-line graph6 file.
pub fn write_graph6(path: &Path, g: &Graph) -> Result<()> {
    fs::write(path, encode_graph6(g) + "\n")?;
    Ok(())
}

/// Reads every graph of a graph6 file.
pub fn read_graph6(path: &Path) -> Result<Vec<Graph>> {
    let text = fs::read_to_string(path)?;
    decode_graph6_lines(&text)
}

/// Writes the graph and its sidecar; returns the sidecar path.
pub fn write_construction(path: &Path, c: &LabeledConstruction) -> Result<PathBuf> {
    write_graph6(path, &c.graph)?;
    let side = sidecar_path(path);
    fs::write(&side, serde_json::to_string_pretty(&Sidecar::for_construction(c))? + "\n")?;
    Ok(side)
}

/// Reads the sidecar next to `graph_path`, `None` if there is no such file.
pub fn read_sidecar(graph_path: &Path) -> Result<Option<Sidecar>> {
    let side = sidecar_path(graph_path);
    if !side.exists() {
        return Ok(None);
    }
    Ok(Some(serde_json::from_str(&fs::read_to_string(side)?)?))
}
