//! The quiver data model: vertices, an arrow multiset, and the structural
//! operations the rest of the crate is built on (induced subquivers,
//! connected components, arrow removal).

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// An arrow occurrence `source → target`, stored by vertex index.
/// `source == target` is a loop.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arrow {
    pub source: usize,
    pub target: usize,
}

impl Arrow {
    pub fn new(source: usize, target: usize) -> Self {
        Arrow { source, target }
    }

    pub fn is_loop(&self) -> bool {
        self.source == self.target
    }
}

/// A finite quiver. Loops and parallel arrows are allowed.
///
/// Vertex identifiers are opaque strings kept in declaration order; every
/// vector or matrix computed from a quiver is indexed by that order. Arrows
/// form a multiset stored as a list, and an arrow occurrence is addressed
/// by its position in that list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quiver {
    vertices: Vec<String>,
    arrows: Vec<Arrow>,
    index: HashMap<String, usize>,
}

#[derive(Serialize, Deserialize)]
struct QuiverDocument {
    vertices: Vec<String>,
    arrows: Vec<(String, String)>,
}

impl Quiver {
    /// Builds a quiver from vertex identifiers and arrows given by identifier.
    pub fn new<S: Into<String>>(
        vertices: impl IntoIterator<Item = S>,
        arrows: impl IntoIterator<Item = (S, S)>,
    ) -> Result<Self> {
        let vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
        let index = build_index(&vertices)?;
        let arrows = arrows
            .into_iter()
            .enumerate()
            .map(|(k, (s, t))| {
                let (s, t): (String, String) = (s.into(), t.into());
                let lookup = |id: &String, end: usize| {
                    index.get(id).copied().ok_or_else(|| Error::UnknownVertex {
                        id: id.clone(),
                        location: format!("arrows[{k}][{end}]"),
                    })
                };
                Ok(Arrow::new(lookup(&s, 0)?, lookup(&t, 1)?))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Quiver { vertices, arrows, index })
    }

    /// Builds a quiver from arrows given by vertex index.
    pub fn from_indices<S: Into<String>>(
        vertices: impl IntoIterator<Item = S>,
        arrows: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let vertices: Vec<String> = vertices.into_iter().map(Into::into).collect();
        let index = build_index(&vertices)?;
        let n = vertices.len();
        let arrows = arrows
            .into_iter()
            .enumerate()
            .map(|(k, (s, t))| {
                for (end, v) in [(0, s), (1, t)] {
                    if v >= n {
                        return Err(Error::UnknownVertex {
                            id: format!("#{v}"),
                            location: format!("arrows[{k}][{end}]"),
                        });
                    }
                }
                Ok(Arrow::new(s, t))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Quiver { vertices, arrows, index })
    }

    /// Parses the canonical JSON document
    /// `{"vertices": [...], "arrows": [[from, to], ...]}`.
    pub fn parse(text: &str) -> Result<Self> {
        let doc: QuiverDocument = serde_json::from_str(text).map_err(|e| Error::Parse {
            location: format!("line {} column {}", e.line(), e.column()),
            message: e.to_string(),
        })?;
        Quiver::new(doc.vertices, doc.arrows)
    }

    /// Like [`Quiver::parse`] for an already decoded JSON value.
    pub fn from_value(value: serde_json::Value) -> Result<Self> {
        let doc: QuiverDocument = serde_json::from_value(value)
            .map_err(|e| Error::Parse { location: "quiver".into(), message: e.to_string() })?;
        Quiver::new(doc.vertices, doc.arrows)
    }

    /// The canonical JSON document for this quiver.
    pub fn to_json(&self) -> serde_json::Value {
        let doc = QuiverDocument {
            vertices: self.vertices.clone(),
            arrows: self
                .arrows
                .iter()
                .map(|a| (self.vertices[a.source].clone(), self.vertices[a.target].clone()))
                .collect(),
        };
        serde_json::to_value(doc).expect("quiver serializes")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn arrow_count(&self) -> usize {
        self.arrows.len()
    }

    pub fn vertices(&self) -> &[String] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn vertex_name(&self, i: usize) -> &str {
        &self.vertices[i]
    }

    pub fn vertex_index(&self, id: &str) -> Option<usize> {
        self.index.get(id).copied()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn loops_at(&self, i: usize) -> usize {
        self.arrows.iter().filter(|a| a.source == i && a.target == i).count()
    }

    pub fn has_loops(&self) -> bool {
        self.arrows.iter().any(Arrow::is_loop)
    }

    /// Number of arrows between `i` and `j` in either direction (`i != j`).
    pub fn edge_multiplicity(&self, i: usize, j: usize) -> usize {
        self.arrows
            .iter()
            .filter(|a| (a.source == i && a.target == j) || (a.source == j && a.target == i))
            .count()
    }

    /// The vertex set of all of `self`.
    pub fn all_vertices(&self) -> VertexSet {
        VertexSet((0..self.vertex_count()).collect())
    }

    /// Resolves vertex identifiers into a [`VertexSet`].
    pub fn vertex_set<S: AsRef<str>>(&self, ids: impl IntoIterator<Item = S>) -> Result<VertexSet> {
        let indices = ids
            .into_iter()
            .enumerate()
            .map(|(k, id)| {
                self.vertex_index(id.as_ref()).ok_or_else(|| Error::UnknownVertex {
                    id: id.as_ref().to_string(),
                    location: format!("vertex set entry {k}"),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(VertexSet::from_indices(indices))
    }

    /// The subquiver on `set` carrying every arrow of `self` with both ends
    /// in `set`. Vertex order is inherited.
    pub fn induced_subquiver(&self, set: &VertexSet) -> Result<Quiver> {
        let n = self.vertex_count();
        if let Some(&bad) = set.0.iter().find(|&&v| v >= n) {
            return Err(Error::UnknownVertex {
                id: format!("#{bad}"),
                location: "vertex set".into(),
            });
        }
        let mut position = vec![usize::MAX; n];
        for (new, &old) in set.0.iter().enumerate() {
            position[old] = new;
        }
        let arrows = self.arrows.iter().filter_map(|a| {
            let (s, t) = (position[a.source], position[a.target]);
            (s != usize::MAX && t != usize::MAX).then_some((s, t))
        });
        Quiver::from_indices(set.0.iter().map(|&v| self.vertices[v].clone()), arrows)
    }

    /// Connected components of the underlying undirected graph, each sorted,
    /// ordered by smallest vertex index.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let n = self.vertex_count();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for a in &self.arrows {
            let (ra, rb) = (find(&mut parent, a.source), find(&mut parent, a.target));
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut block_of_root: HashMap<usize, usize> = HashMap::new();
        for v in 0..n {
            let root = find(&mut parent, v);
            let b = *block_of_root.entry(root).or_insert_with(|| {
                blocks.push(Vec::new());
                blocks.len() - 1
            });
            blocks[b].push(v);
        }
        blocks.into_iter().map(VertexSet).collect()
    }

    pub fn is_connected(&self) -> bool {
        self.connected_components().len() == 1
    }

    /// Removes the arrow occurrence at position `index`.
    pub fn remove_arrow(&self, index: usize) -> Result<Quiver> {
        if index >= self.arrows.len() {
            return Err(Error::NoSuchArrow(index));
        }
        let mut q = self.clone();
        q.arrows.remove(index);
        Ok(q)
    }

    /// Reverses the arrow occurrence at position `index`.
    pub fn reverse_arrow(&self, index: usize) -> Result<Quiver> {
        if index >= self.arrows.len() {
            return Err(Error::NoSuchArrow(index));
        }
        let mut q = self.clone();
        let a = q.arrows[index];
        q.arrows[index] = Arrow::new(a.target, a.source);
        Ok(q)
    }

    /// Disjoint union; vertex identifiers of `other` get `suffix` appended
    /// when they clash with identifiers of `self`.
    pub fn disjoint_union(&self, other: &Quiver, suffix: &str) -> Quiver {
        let offset = self.vertex_count();
        let mut vertices = self.vertices.clone();
        for v in &other.vertices {
            let mut id = v.clone();
            while vertices.contains(&id) {
                id.push_str(suffix);
            }
            vertices.push(id);
        }
        let arrows = self
            .arrows
            .iter()
            .map(|a| (a.source, a.target))
            .chain(other.arrows.iter().map(|a| (a.source + offset, a.target + offset)));
        Quiver::from_indices(vertices, arrows).expect("disjoint union is well formed")
    }

    /// Bitmask of neighbours of each vertex in the underlying graph, loops
    /// excluded. Only meaningful for at most 64 vertices.
    pub(crate) fn neighbor_masks(&self) -> Vec<u64> {
        let mut masks = vec![0u64; self.vertex_count()];
        for a in &self.arrows {
            if !a.is_loop() {
                masks[a.source] |= 1 << a.target;
                masks[a.target] |= 1 << a.source;
            }
        }
        masks
    }

    /// Names of the vertices of `set`, formatted as `{a,b,c}`.
    pub fn format_set(&self, set: &VertexSet) -> String {
        let names: Vec<&str> = set.0.iter().map(|&v| self.vertex_name(v)).collect();
        format!("{{{}}}", names.join(","))
    }
}

fn build_index(vertices: &[String]) -> Result<HashMap<String, usize>> {
    let mut index = HashMap::with_capacity(vertices.len());
    for (i, v) in vertices.iter().enumerate() {
        if index.insert(v.clone(), i).is_some() {
            return Err(Error::DuplicateVertex {
                id: v.clone(),
                location: format!("vertices[{i}]"),
            });
        }
    }
    Ok(index)
}

impl fmt::Display for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_json())
    }
}

/// A subset of the vertices of some quiver, as sorted vertex indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    pub fn from_indices(mut indices: Vec<usize>) -> Self {
        indices.sort_unstable();
        indices.dedup();
        VertexSet(indices)
    }

    pub fn from_mask(mask: u64) -> Self {
        VertexSet((0..64).filter(|i| mask >> i & 1 == 1).collect())
    }

    pub fn mask(&self) -> u64 {
        self.0.iter().fold(0, |m, &i| m | 1 << i)
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.0.iter().all(|&i| other.contains(i))
    }

    /// Maps indices relative to an induced subquiver on `parent` back to
    /// indices of the ambient quiver.
    pub fn lift(&self, parent: &VertexSet) -> VertexSet {
        VertexSet(self.0.iter().map(|&i| parent.0[i]).collect())
    }
}
