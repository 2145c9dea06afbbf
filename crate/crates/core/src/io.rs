//! Text formats: instance files and graph files.
//!
//! Instance files are TOML:
//!
//! ```toml
//! format_version = 1
//! root = 0
//! parents = [0, 0, 0]
//! vertex_capacities = ["unbounded", 1, 1]
//! edge_capacities = [1, 1]
//!
//! [[subtrees]]
//! vertices = [0, 1]
//! demand = 1
//! ```
//!
//! `parents[v]` is the parent of `v` and the root maps to itself.
//! `edge_capacities` lists the edges by ascending child vertex, skipping the
//! root. A capacity is a non-negative integer or the word `unbounded`.
//! `demand` defaults to 1.
//!
//! Graph files hold the vertex count on the first line and one `u v` edge per
//! following line. Blank lines and lines starting with `#` are ignored.

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::gen::SimpleGraph;
use crate::instance::{Capacity, CapacityVector, Instance, Subtree};
use crate::tree::Tree;

pub const FORMAT_VERSION: i64 = 1;

const UNBOUNDED: &str = "unbounded";

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct CapacityToken(Capacity);

impl Serialize for CapacityToken {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        match self.0 {
            Capacity::Finite(k) => serializer.serialize_u64(k),
            Capacity::Unbounded => serializer.serialize_str(UNBOUNDED),
        }
    }
}

impl<'de> Deserialize<'de> for CapacityToken {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Number(u64),
            Word(String),
        }
        match Raw::deserialize(deserializer)? {
            Raw::Number(k) => Ok(CapacityToken(Capacity::Finite(k))),
            Raw::Word(w) if w == UNBOUNDED => Ok(CapacityToken(Capacity::Unbounded)),
            Raw::Word(w) => Err(serde::de::Error::custom(format!(
                "capacity must be a non-negative integer or \"{UNBOUNDED}\", got \"{w}\""
            ))),
        }
    }
}

fn one() -> u64 {
    1
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SubtreeEntry {
    vertices: Vec<usize>,
    #[serde(default = "one")]
    demand: u64,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct InstanceFile {
    format_version: i64,
    root: usize,
    parents: Vec<usize>,
    vertex_capacities: Vec<CapacityToken>,
    edge_capacities: Vec<CapacityToken>,
    #[serde(default)]
    subtrees: Vec<SubtreeEntry>,
}

#[derive(Deserialize)]
struct VersionProbe {
    format_version: i64,
}

pub fn serialize_instance(instance: &Instance) -> String {
    let tree = instance.tree();
    let caps = instance.capacities();
    let file = InstanceFile {
        format_version: FORMAT_VERSION,
        root: tree.root(),
        parents: tree.parents().to_vec(),
        vertex_capacities: (0..tree.vertex_count())
            .map(|v| CapacityToken(caps.vertex(v)))
            .collect(),
        edge_capacities: (0..tree.vertex_count())
            .filter(|&v| v != tree.root())
            .map(|v| CapacityToken(caps.edge(v)))
            .collect(),
        subtrees: instance
            .subtrees()
            .iter()
            .map(|s| SubtreeEntry {
                vertices: s.vertices().to_vec(),
                demand: s.demand(),
            })
            .collect(),
    };
    toml::to_string(&file).expect("instance files contain only integers, strings and arrays")
}

pub fn parse_instance(text: &str) -> Result<Instance> {
    let probe: VersionProbe = toml::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    if probe.format_version != FORMAT_VERSION {
        return Err(Error::FormatVersion {
            found: probe.format_version,
            expected: FORMAT_VERSION,
        });
    }
    let file: InstanceFile = toml::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;

    let tree = Tree::from_parents(&file.parents, file.root).map_err(|e| Error::Parse(format!("parents: {e}")))?;
    let n = tree.vertex_count();
    if file.vertex_capacities.len() != n {
        return Err(Error::Parse(format!(
            "vertex_capacities: expected {n} entries, found {}",
            file.vertex_capacities.len()
        )));
    }
    if file.edge_capacities.len() != n - 1 {
        return Err(Error::Parse(format!(
            "edge_capacities: expected {} entries, found {}",
            n - 1,
            file.edge_capacities.len()
        )));
    }
    let mut edge_caps = vec![Capacity::Unbounded; n];
    let children = (0..n).filter(|&v| v != tree.root());
    for (v, cap) in children.zip(&file.edge_capacities) {
        edge_caps[v] = cap.0;
    }
    let caps = CapacityVector::new(&tree, file.vertex_capacities.iter().map(|c| c.0).collect(), edge_caps)?;

    let subtrees = file
        .subtrees
        .into_iter()
        .enumerate()
        .map(|(index, entry)| {
            Subtree::new(&tree, entry.vertices, entry.demand).map_err(|e| Error::InvalidSubtree {
                index,
                source: Box::new(e),
            })
        })
        .collect::<Result<Vec<_>>>()?;
    Instance::new(tree, subtrees, caps)
}

pub fn serialize_graph(graph: &SimpleGraph) -> String {
    let mut out = format!("{}\n", graph.vertex_count());
    for (u, v) in graph.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

pub fn parse_graph(text: &str) -> Result<SimpleGraph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (line, first) = lines.next().ok_or_else(|| Error::Parse("graph file is empty".into()))?;
    let vertex_count: usize = first
        .parse()
        .map_err(|_| Error::Parse(format!("line {line}: expected vertex count, found \"{first}\"")))?;
    let mut edges = Vec::new();
    for (line, text) in lines {
        let fields: Vec<&str> = text.split_whitespace().collect();
        let parsed = match fields.as_slice() {
            [u, v] => u.parse::<usize>().ok().zip(v.parse::<usize>().ok()),
            _ => None,
        };
        let (u, v) = parsed.ok_or_else(|| Error::Parse(format!("line {line}: expected \"u v\", found \"{text}\"")))?;
        edges.push((u, v));
    }
    SimpleGraph::new(vertex_count, edges)
}
