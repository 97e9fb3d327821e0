//! The configuration model: vertices with multiplicities, polygons of germs,
//! and the cyclic germ ordering at each vertex.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Symbolic vertex identifier.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(pub String);

/// Symbolic polygon identifier.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct PolygonId(pub String);

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Display for PolygonId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for VertexId {
    fn from(s: &str) -> Self {
        VertexId(s.to_string())
    }
}

impl From<&str> for PolygonId {
    fn from(s: &str) -> Self {
        PolygonId(s.to_string())
    }
}

impl VertexId {
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl PolygonId {
    pub fn as_str(&self) -> &str {
        &self.0
    }
}

/// One occurrence of a polygon at a vertex: the polygon id plus the slot
/// index into that polygon's vertex list. Ordered lexicographically, which
/// fixes the canonical rotation of every cyclic ordering.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Germ {
    pub polygon: PolygonId,
    pub slot: usize,
}

impl Germ {
    pub fn new(polygon: impl Into<PolygonId>, slot: usize) -> Self {
        Germ { polygon: polygon.into(), slot }
    }
}

impl fmt::Display for Germ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.polygon, self.slot)
    }
}

/// A polygon: an ordered list of vertex occurrences. Slot `i` of the polygon
/// is a germ at `germ_vertices[i]`; repeated vertices make the polygon
/// self-folded at those vertices.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Polygon {
    pub id: PolygonId,
    pub germ_vertices: Vec<VertexId>,
}

impl Polygon {
    pub fn size(&self) -> usize {
        self.germ_vertices.len()
    }

    pub fn is_self_folded(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.germ_vertices.iter().any(|v| !seen.insert(v))
    }

    /// Distinct vertices of the polygon, in first-occurrence order.
    pub fn distinct_vertices(&self) -> Vec<&VertexId> {
        let mut seen = BTreeSet::new();
        self.germ_vertices.iter().filter(|v| seen.insert(*v)).collect()
    }
}

/// A Brauer configuration. Construction canonicalizes every cyclic ordering
/// to start at its lexicographically least germ, so structural equality is
/// rotation-insensitive and serialization is stable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BrauerConfiguration {
    vertices: BTreeMap<VertexId, u32>,
    polygons: Vec<Polygon>,
    orderings: BTreeMap<VertexId, Vec<Germ>>,
    index: BTreeMap<PolygonId, usize>,
}

impl BrauerConfiguration {
    /// Assemble a configuration. Checks referential integrity (duplicate ids,
    /// unknown references, out-of-range slots) but defers semantic validity
    /// to [`BrauerConfiguration::validate`]. Orderings omitted for a vertex
    /// default to its germs in document order.
    pub fn new(
        vertices: BTreeMap<VertexId, u32>,
        polygons: Vec<Polygon>,
        mut orderings: BTreeMap<VertexId, Vec<Germ>>,
    ) -> Result<Self> {
        let mut index = BTreeMap::new();
        for (i, p) in polygons.iter().enumerate() {
            if index.insert(p.id.clone(), i).is_some() {
                return Err(Error::DuplicateId(p.id.0.clone()));
            }
            for v in &p.germ_vertices {
                if !vertices.contains_key(v) {
                    return Err(Error::UnknownVertex(v.0.clone()));
                }
            }
        }
        for (v, germs) in &orderings {
            if !vertices.contains_key(v) {
                return Err(Error::UnknownVertex(v.0.clone()));
            }
            for g in germs {
                let Some(&pi) = index.get(&g.polygon) else {
                    return Err(Error::UnknownPolygon(g.polygon.0.clone()));
                };
                if g.slot >= polygons[pi].size() {
                    return Err(Error::BadGerm(g.to_string()));
                }
            }
        }
        // Default orderings: germs of the vertex in document order.
        for v in vertices.keys() {
            if !orderings.contains_key(v) {
                let mut germs = Vec::new();
                for p in &polygons {
                    for (slot, w) in p.germ_vertices.iter().enumerate() {
                        if w == v {
                            germs.push(Germ { polygon: p.id.clone(), slot });
                        }
                    }
                }
                orderings.insert(v.clone(), germs);
            }
        }
        for germs in orderings.values_mut() {
            canonical_rotation(germs);
        }
        Ok(BrauerConfiguration { vertices, polygons, orderings, index })
    }

    pub fn vertices(&self) -> &BTreeMap<VertexId, u32> {
        &self.vertices
    }

    pub fn polygons(&self) -> &[Polygon] {
        &self.polygons
    }

    pub fn polygon(&self, id: &PolygonId) -> Result<&Polygon> {
        self.index
            .get(id)
            .map(|&i| &self.polygons[i])
            .ok_or_else(|| Error::UnknownPolygon(id.0.clone()))
    }

    pub fn multiplicity(&self, v: &VertexId) -> u32 {
        self.vertices.get(v).copied().unwrap_or(0)
    }

    /// The vertex a germ sits at.
    pub fn germ_vertex(&self, g: &Germ) -> Result<&VertexId> {
        let p = self.polygon(&g.polygon)?;
        p.germ_vertices.get(g.slot).ok_or_else(|| Error::BadGerm(g.to_string()))
    }

    /// Cyclic ordering at a vertex, canonically rotated.
    pub fn ordering(&self, v: &VertexId) -> &[Germ] {
        self.orderings.get(v).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn orderings(&self) -> &BTreeMap<VertexId, Vec<Germ>> {
        &self.orderings
    }

    /// Number of germs at the vertex.
    pub fn valency(&self, v: &VertexId) -> usize {
        self.ordering(v).len()
    }

    /// A vertex is truncated when it has exactly one germ and multiplicity 1.
    pub fn is_truncated(&self, v: &VertexId) -> bool {
        self.valency(v) == 1 && self.multiplicity(v) == 1
    }

    /// The germ following `g` in the cyclic ordering at its vertex.
    pub fn successor_germ(&self, g: &Germ) -> Result<Germ> {
        let v = self.germ_vertex(g)?.clone();
        let ord = self.ordering(&v);
        let pos = ord
            .iter()
            .position(|h| h == g)
            .ok_or_else(|| Error::BadGerm(format!("{g} not in the ordering at {v}")))?;
        Ok(ord[(pos + 1) % ord.len()].clone())
    }

    /// Successor sequence of length `val(v)` starting at `g`.
    pub fn successor_sequence(&self, g: &Germ) -> Result<Vec<Germ>> {
        let v = self.germ_vertex(g)?.clone();
        let ord = self.ordering(&v);
        let pos = ord
            .iter()
            .position(|h| h == g)
            .ok_or_else(|| Error::BadGerm(format!("{g} not in the ordering at {v}")))?;
        Ok((0..ord.len()).map(|i| ord[(pos + i) % ord.len()].clone()).collect())
    }

    /// Predecessor sequence: the successor sequence walked backwards from `g`.
    pub fn predecessor_sequence(&self, g: &Germ) -> Result<Vec<Germ>> {
        let v = self.germ_vertex(g)?.clone();
        let ord = self.ordering(&v);
        let pos = ord
            .iter()
            .position(|h| h == g)
            .ok_or_else(|| Error::BadGerm(format!("{g} not in the ordering at {v}")))?;
        let n = ord.len();
        Ok((0..n).map(|i| ord[(pos + n - i % n) % n].clone()).collect())
    }

    /// All germs of polygon `x` at vertex `v`, in slot order.
    pub fn germs_of_polygon_at(&self, x: &PolygonId, v: &VertexId) -> Result<Vec<Germ>> {
        let p = self.polygon(x)?;
        Ok(p.germ_vertices
            .iter()
            .enumerate()
            .filter(|(_, w)| *w == v)
            .map(|(slot, _)| Germ { polygon: x.clone(), slot })
            .collect())
    }

    /// Human-readable germ label such as `x^v1` or `x^v4,2` (the counter
    /// disambiguates repeated germs of one polygon at one vertex).
    pub fn germ_label(&self, g: &Germ) -> String {
        let Ok(v) = self.germ_vertex(g) else {
            return g.to_string();
        };
        let same: Vec<usize> = self
            .polygon(&g.polygon)
            .map(|p| {
                p.germ_vertices
                    .iter()
                    .enumerate()
                    .filter(|(_, w)| *w == v)
                    .map(|(s, _)| s)
                    .collect()
            })
            .unwrap_or_default();
        if same.len() > 1 {
            let k = same.iter().position(|&s| s == g.slot).unwrap_or(0) + 1;
            format!("{}^{},{}", g.polygon, v, k)
        } else {
            format!("{}^{}", g.polygon, v)
        }
    }

    /// Relabel every vertex and polygon through the given maps. Ids absent
    /// from a map keep their name. Intended for isomorphism tests.
    pub fn relabel(
        &self,
        vmap: &BTreeMap<VertexId, VertexId>,
        pmap: &BTreeMap<PolygonId, PolygonId>,
    ) -> Result<Self> {
        let rv = |v: &VertexId| vmap.get(v).cloned().unwrap_or_else(|| v.clone());
        let rp = |p: &PolygonId| pmap.get(p).cloned().unwrap_or_else(|| p.clone());
        let vertices = self.vertices.iter().map(|(v, &m)| (rv(v), m)).collect();
        let polygons = self
            .polygons
            .iter()
            .map(|p| Polygon {
                id: rp(&p.id),
                germ_vertices: p.germ_vertices.iter().map(&rv).collect(),
            })
            .collect();
        let orderings = self
            .orderings
            .iter()
            .map(|(v, germs)| {
                (
                    rv(v),
                    germs
                        .iter()
                        .map(|g| Germ { polygon: rp(&g.polygon), slot: g.slot })
                        .collect(),
                )
            })
            .collect();
        BrauerConfiguration::new(vertices, polygons, orderings)
    }

    /// Total number of germs across all polygons.
    pub fn germ_count(&self) -> usize {
        self.polygons.iter().map(Polygon::size).sum()
    }

    /// Full validity check. An empty report means the configuration is a
    /// genuine connected Brauer configuration.
    pub fn validate(&self) -> ValidationReport {
        let mut violations = Vec::new();
        if self.polygons.is_empty() {
            violations.push(Violation::Empty);
        }
        for (v, &m) in &self.vertices {
            if m == 0 {
                violations.push(Violation::ZeroMultiplicity { vertex: v.clone() });
            }
        }
        for p in &self.polygons {
            if p.size() < 2 {
                violations.push(Violation::PolygonTooSmall { polygon: p.id.clone() });
            }
        }
        // Orderings must list exactly the germs at their vertex, each once.
        for (v, germs) in &self.orderings {
            let mut expected = BTreeSet::new();
            for p in &self.polygons {
                for (slot, w) in p.germ_vertices.iter().enumerate() {
                    if w == v {
                        expected.insert(Germ { polygon: p.id.clone(), slot });
                    }
                }
            }
            let got: BTreeSet<Germ> = germs.iter().cloned().collect();
            if got.len() != germs.len() || got != expected {
                violations.push(Violation::OrderingMismatch { vertex: v.clone() });
            }
        }
        if !self.is_connected() {
            violations.push(Violation::NotConnected);
        }
        // Polygons with more than two germs may not meet truncated vertices.
        for p in &self.polygons {
            if p.size() > 2 {
                for v in &p.germ_vertices {
                    if self.germs_total_at(v) == 1 && self.multiplicity(v) == 1 {
                        violations.push(Violation::LargePolygonAtTruncatedVertex {
                            polygon: p.id.clone(),
                            vertex: v.clone(),
                        });
                    }
                }
            }
        }
        ValidationReport { violations }
    }

    fn germs_total_at(&self, v: &VertexId) -> usize {
        self.polygons
            .iter()
            .map(|p| p.germ_vertices.iter().filter(|w| *w == v).count())
            .sum()
    }

    /// Connectivity of the vertex-polygon incidence structure. Vertices with
    /// no germs count as isolated components.
    fn is_connected(&self) -> bool {
        if self.vertices.is_empty() {
            return true;
        }
        let start = if let Some(p) = self.polygons.first() {
            Node::Poly(p.id.clone())
        } else {
            return self.vertices.len() <= 1;
        };
        let mut seen = BTreeSet::new();
        let mut queue = VecDeque::from([start]);
        while let Some(n) = queue.pop_front() {
            if !seen.insert(n.clone()) {
                continue;
            }
            match n {
                Node::Poly(pid) => {
                    let p = &self.polygons[self.index[&pid]];
                    for v in &p.germ_vertices {
                        queue.push_back(Node::Vert(v.clone()));
                    }
                }
                Node::Vert(v) => {
                    for p in &self.polygons {
                        if p.germ_vertices.contains(&v) {
                            queue.push_back(Node::Poly(p.id.clone()));
                        }
                    }
                }
            }
        }
        let verts_seen = seen.iter().filter(|n| matches!(n, Node::Vert(_))).count();
        let polys_seen = seen.iter().filter(|n| matches!(n, Node::Poly(_))).count();
        verts_seen == self.vertices.len() && polys_seen == self.polygons.len()
    }

    /// Structural analysis of a valid configuration.
    pub fn analyze(&self) -> ConfigAnalysis {
        let valencies: BTreeMap<VertexId, usize> =
            self.vertices.keys().map(|v| (v.clone(), self.germs_total_at(v))).collect();
        let truncated_vertices: Vec<VertexId> = self
            .vertices
            .keys()
            .filter(|v| valencies[*v] == 1 && self.multiplicity(v) == 1)
            .cloned()
            .collect();
        let truncated_edges: Vec<PolygonId> = self
            .polygons
            .iter()
            .filter(|p| {
                p.size() == 2
                    && p.germ_vertices.iter().any(|v| truncated_vertices.contains(v))
            })
            .map(|p| p.id.clone())
            .collect();
        let is_multiplicity_free = self.vertices.values().all(|&m| m == 1);
        let max_polygon_size = self.polygons.iter().map(Polygon::size).max().unwrap_or(0);
        let self_folded_polygons: Vec<PolygonId> = self
            .polygons
            .iter()
            .filter(|p| p.is_self_folded())
            .map(|p| p.id.clone())
            .collect();
        // In a connected incidence structure a cycle exists exactly when the
        // germ (edge) count reaches the node count.
        let nodes = self.vertices.len() + self.polygons.len();
        let simple_cycle_exists = self.germ_count() + 1 > nodes;
        let is_tree = !simple_cycle_exists;
        ConfigAnalysis {
            valencies,
            truncated_vertices,
            truncated_edges,
            is_tree,
            is_brauer_graph: max_polygon_size <= 2 && !self.polygons.is_empty(),
            is_multiplicity_free,
            max_polygon_size,
            simple_cycle_exists,
            self_folded_polygons,
        }
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
enum Node {
    Vert(VertexId),
    Poly(PolygonId),
}

/// Rotate a cyclic list so its lexicographically least element comes first.
pub(crate) fn canonical_rotation(germs: &mut [Germ]) {
    if germs.is_empty() {
        return;
    }
    let min = germs.iter().enumerate().min_by_key(|(_, g)| (*g).clone()).map(|(i, _)| i);
    if let Some(i) = min {
        germs.rotate_left(i);
    }
}

/// Result of [`BrauerConfiguration::analyze`].
#[derive(Clone, Debug, Serialize)]
pub struct ConfigAnalysis {
    pub valencies: BTreeMap<VertexId, usize>,
    pub truncated_vertices: Vec<VertexId>,
    pub truncated_edges: Vec<PolygonId>,
    pub is_tree: bool,
    pub is_brauer_graph: bool,
    pub is_multiplicity_free: bool,
    pub max_polygon_size: usize,
    pub simple_cycle_exists: bool,
    pub self_folded_polygons: Vec<PolygonId>,
}

/// A single validity violation, with the ids involved.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Violation {
    Empty,
    ZeroMultiplicity { vertex: VertexId },
    PolygonTooSmall { polygon: PolygonId },
    OrderingMismatch { vertex: VertexId },
    NotConnected,
    LargePolygonAtTruncatedVertex { polygon: PolygonId, vertex: VertexId },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::Empty => write!(f, "configuration has no polygons"),
            Violation::ZeroMultiplicity { vertex } => {
                write!(f, "vertex `{vertex}` has multiplicity 0")
            }
            Violation::PolygonTooSmall { polygon } => {
                write!(f, "polygon `{polygon}` has fewer than two germs")
            }
            Violation::OrderingMismatch { vertex } => write!(
                f,
                "ordering at `{vertex}` does not list exactly the germs at that vertex"
            ),
            Violation::NotConnected => write!(f, "configuration is not connected"),
            Violation::LargePolygonAtTruncatedVertex { polygon, vertex } => write!(
                f,
                "polygon `{polygon}` has more than two germs but meets the truncated vertex `{vertex}`"
            ),
        }
    }
}

/// Collected violations; empty means valid.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

impl fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.violations.is_empty() {
            return write!(f, "valid");
        }
        for v in &self.violations {
            writeln!(f, "- {v}")?;
        }
        Ok(())
    }
}

/// Convenience builder for configurations assembled in code.
#[derive(Default)]
pub struct ConfigBuilder {
    vertices: Vec<(String, u32)>,
    polygons: Vec<(String, Vec<String>)>,
    orderings: Vec<(String, Vec<(String, usize)>)>,
}

impl ConfigBuilder {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn vertex(mut self, id: &str, multiplicity: u32) -> Self {
        self.vertices.push((id.to_string(), multiplicity));
        self
    }

    pub fn polygon(mut self, id: &str, vertices: &[&str]) -> Self {
        self.polygons
            .push((id.to_string(), vertices.iter().map(|s| s.to_string()).collect()));
        self
    }

    pub fn polygon_owned(mut self, id: &str, vertices: &[String]) -> Self {
        self.polygons.push((id.to_string(), vertices.to_vec()));
        self
    }

    /// Explicit cyclic ordering at `v`, as `(polygon, slot)` germ references.
    pub fn ordering(mut self, v: &str, germs: &[(&str, usize)]) -> Self {
        self.orderings.push((
            v.to_string(),
            germs.iter().map(|(p, s)| (p.to_string(), *s)).collect(),
        ));
        self
    }

    pub fn ordering_owned(mut self, v: &str, germs: &[(String, usize)]) -> Self {
        self.orderings.push((v.to_string(), germs.to_vec()));
        self
    }

    /// Declare every vertex referenced by a polygon but not listed yet, at
    /// multiplicity one.
    pub fn default_vertices(mut self) -> Self {
        let mut known: BTreeSet<String> = self.vertices.iter().map(|(v, _)| v.clone()).collect();
        for (_, vs) in &self.polygons {
            for v in vs {
                if known.insert(v.clone()) {
                    self.vertices.push((v.clone(), 1));
                }
            }
        }
        self
    }

    pub fn build(self) -> Result<BrauerConfiguration> {
        let mut vertices = BTreeMap::new();
        for (id, m) in self.vertices {
            if vertices.insert(VertexId(id.clone()), m).is_some() {
                return Err(Error::DuplicateId(id));
            }
        }
        let polygons = self
            .polygons
            .into_iter()
            .map(|(id, vs)| Polygon {
                id: PolygonId(id),
                germ_vertices: vs.into_iter().map(VertexId).collect(),
            })
            .collect();
        let mut orderings = BTreeMap::new();
        for (v, germs) in self.orderings {
            let prev = orderings.insert(
                VertexId(v.clone()),
                germs
                    .into_iter()
                    .map(|(p, s)| Germ { polygon: PolygonId(p), slot: s })
                    .collect(),
            );
            if prev.is_some() {
                return Err(Error::DuplicateId(v));
            }
        }
        BrauerConfiguration::new(vertices, polygons, orderings)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin::builtin;

    #[test]
    fn figure_configuration_analysis() {
        let cfg = builtin("fig1").unwrap();
        assert!(cfg.validate().is_valid());
        let a = cfg.analyze();
        assert_eq!(a.valencies[&VertexId::from("v1")], 3);
        assert_eq!(a.valencies[&VertexId::from("v2")], 2);
        assert_eq!(a.valencies[&VertexId::from("v3")], 1);
        assert_eq!(a.valencies[&VertexId::from("v4")], 3);
        assert_eq!(a.valencies[&VertexId::from("v5")], 1);
        assert_eq!(a.truncated_vertices, vec![VertexId::from("v5")]);
        assert_eq!(a.truncated_edges, vec![PolygonId::from("w")]);
        assert!(!a.is_tree);
        assert!(a.simple_cycle_exists);
        assert!(!a.is_brauer_graph);
        assert!(!a.is_multiplicity_free);
        assert_eq!(a.max_polygon_size, 4);
        assert_eq!(
            a.self_folded_polygons,
            vec![PolygonId::from("x"), PolygonId::from("y")]
        );
        assert_eq!(cfg.germ_count(), 10);
    }

    #[test]
    fn successor_sequences_follow_the_cyclic_order() {
        let cfg = builtin("fig1").unwrap();
        // At v1 the order is x[0], y[0], y[1].
        let seq = cfg.successor_sequence(&Germ::new("x", 0)).unwrap();
        assert_eq!(seq, vec![Germ::new("x", 0), Germ::new("y", 0), Germ::new("y", 1)]);
        let seq = cfg.successor_sequence(&Germ::new("y", 1)).unwrap();
        assert_eq!(seq, vec![Germ::new("y", 1), Germ::new("x", 0), Germ::new("y", 0)]);
        // Valency-one vertex: the singleton.
        let seq = cfg.successor_sequence(&Germ::new("w", 1)).unwrap();
        assert_eq!(seq, vec![Germ::new("w", 1)]);
        // Successor of x[2] at v4 is w[0].
        assert_eq!(cfg.successor_germ(&Germ::new("x", 2)).unwrap(), Germ::new("w", 0));
    }

    #[test]
    fn rotated_orderings_are_equal_configurations() {
        let a = ConfigBuilder::new()
            .vertex("u", 1)
            .vertex("v", 1)
            .vertex("t", 1)
            .polygon("e", &["u", "v"])
            .polygon("f", &["v", "t"])
            .polygon("g", &["v", "u"])
            .ordering("v", &[("e", 1), ("f", 0), ("g", 0)])
            .build()
            .unwrap();
        let b = ConfigBuilder::new()
            .vertex("u", 1)
            .vertex("v", 1)
            .vertex("t", 1)
            .polygon("e", &["u", "v"])
            .polygon("f", &["v", "t"])
            .polygon("g", &["v", "u"])
            .ordering("v", &[("g", 0), ("e", 1), ("f", 0)])
            .build()
            .unwrap();
        assert_eq!(a, b);
        let c = ConfigBuilder::new()
            .vertex("u", 1)
            .vertex("v", 1)
            .vertex("t", 1)
            .polygon("e", &["u", "v"])
            .polygon("f", &["v", "t"])
            .polygon("g", &["v", "u"])
            .ordering("v", &[("e", 1), ("g", 0), ("f", 0)])
            .build()
            .unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn validation_flags_mutations() {
        // Disconnected: two disjoint edges.
        let cfg = ConfigBuilder::new()
            .vertex("a", 1)
            .vertex("b", 1)
            .vertex("c", 1)
            .vertex("d", 1)
            .polygon("e", &["a", "b"])
            .polygon("f", &["c", "d"])
            .build()
            .unwrap();
        assert!(cfg.validate().violations.contains(&Violation::NotConnected));

        // Zero multiplicity.
        let cfg = ConfigBuilder::new()
            .vertex("a", 0)
            .vertex("b", 1)
            .polygon("e", &["a", "b"])
            .build()
            .unwrap();
        assert!(cfg
            .validate()
            .violations
            .contains(&Violation::ZeroMultiplicity { vertex: VertexId::from("a") }));

        // Triangle touching a truncated vertex.
        let cfg = ConfigBuilder::new()
            .vertex("a", 1)
            .vertex("b", 1)
            .vertex("c", 1)
            .polygon("t", &["a", "b", "c"])
            .build()
            .unwrap();
        let report = cfg.validate();
        assert!(report.violations.iter().any(|v| matches!(
            v,
            Violation::LargePolygonAtTruncatedVertex { .. }
        )));

        // Dropping one ordering entry is a mismatch.
        let cfg = ConfigBuilder::new()
            .vertex("a", 1)
            .vertex("b", 1)
            .vertex("c", 1)
            .polygon("e", &["a", "b"])
            .polygon("f", &["a", "c"])
            .ordering("a", &[("e", 0)])
            .build()
            .unwrap();
        assert!(cfg
            .validate()
            .violations
            .contains(&Violation::OrderingMismatch { vertex: VertexId::from("a") }));

        // One-gon.
        let cfg = ConfigBuilder::new()
            .vertex("a", 1)
            .polygon("e", &["a"])
            .build()
            .unwrap();
        assert!(cfg
            .validate()
            .violations
            .contains(&Violation::PolygonTooSmall { polygon: PolygonId::from("e") }));
    }

    #[test]
    fn referential_integrity_is_a_construction_error() {
        let err = ConfigBuilder::new()
            .vertex("a", 1)
            .polygon("e", &["a", "zz"])
            .build()
            .unwrap_err();
        assert!(matches!(err, Error::UnknownVertex(_)));

        let err = ConfigBuilder::new()
            .vertex("a", 1)
            .vertex("b", 1)
            .polygon("e", &["a", "b"])
            .ordering("a", &[("e", 7)])
            .build()
            .unwrap_err();
        assert!(matches!(err, Error::BadGerm(_)));
    }
}
