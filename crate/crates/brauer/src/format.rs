//! On-disk format: a JSON document listing vertices, polygons, and cyclic
//! orderings, plus a Graphviz export of the incidence structure.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::config::{BrauerConfiguration, Germ, Polygon, PolygonId, VertexId};
use crate::{Error, Result};

/// Serialized form of a configuration.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ConfigDoc {
    pub vertices: Vec<VertexDoc>,
    pub polygons: Vec<PolygonDoc>,
    /// Cyclic orderings, keyed by vertex. May omit vertices of valency one;
    /// all other vertices must appear.
    #[serde(default)]
    pub orderings: BTreeMap<String, Vec<String>>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct VertexDoc {
    pub id: String,
    #[serde(default = "one")]
    pub multiplicity: u32,
}

fn one() -> u32 {
    1
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct PolygonDoc {
    pub id: String,
    pub vertices: Vec<String>,
}

/// Germ references in orderings: `poly[slot]`, or bare `poly` when the
/// polygon has a single germ at that vertex.
fn parse_germ_ref(s: &str, cfg_polys: &[Polygon], at: &VertexId) -> Result<Germ> {
    let (name, slot) = match s.find('[') {
        Some(i) => {
            let inner = s[i..]
                .strip_prefix('[')
                .and_then(|r| r.strip_suffix(']'))
                .ok_or_else(|| Error::Parse(format!("malformed germ reference `{s}`")))?;
            let slot: usize = inner
                .parse()
                .map_err(|_| Error::Parse(format!("bad slot in germ reference `{s}`")))?;
            (&s[..i], Some(slot))
        }
        None => (s, None),
    };
    let poly = cfg_polys
        .iter()
        .find(|p| p.id.as_str() == name)
        .ok_or_else(|| Error::UnknownPolygon(name.to_string()))?;
    let slots: Vec<usize> = poly
        .germ_vertices
        .iter()
        .enumerate()
        .filter(|(_, v)| *v == at)
        .map(|(i, _)| i)
        .collect();
    match slot {
        Some(k) => {
            if !slots.contains(&k) {
                return Err(Error::BadGerm(format!(
                    "`{s}` is not a germ of `{name}` at `{at}`"
                )));
            }
            Ok(Germ { polygon: poly.id.clone(), slot: k })
        }
        None => match slots.as_slice() {
            [k] => Ok(Germ { polygon: poly.id.clone(), slot: *k }),
            [] => Err(Error::BadGerm(format!("`{name}` has no germ at `{at}`"))),
            _ => Err(Error::BadGerm(format!(
                "`{name}` meets `{at}` more than once; write `{name}[slot]`"
            ))),
        },
    }
}

/// Parse a configuration document. Strict: every vertex of valency two or
/// more must carry an ordering entry listing all of its germs.
pub fn parse(text: &str) -> Result<BrauerConfiguration> {
    let doc: ConfigDoc =
        serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    from_doc(&doc)
}

pub fn from_doc(doc: &ConfigDoc) -> Result<BrauerConfiguration> {
    let mut vertices = BTreeMap::new();
    for v in &doc.vertices {
        if vertices.insert(VertexId(v.id.clone()), v.multiplicity).is_some() {
            return Err(Error::DuplicateId(v.id.clone()));
        }
    }
    let mut polygons = Vec::new();
    for p in &doc.polygons {
        polygons.push(Polygon {
            id: PolygonId(p.id.clone()),
            germ_vertices: p.vertices.iter().map(|s| VertexId(s.clone())).collect(),
        });
    }
    let mut orderings = BTreeMap::new();
    for (v, refs) in &doc.orderings {
        let at = VertexId(v.clone());
        let germs = refs
            .iter()
            .map(|r| parse_germ_ref(r, &polygons, &at))
            .collect::<Result<Vec<_>>>()?;
        orderings.insert(at, germs);
    }
    // Strictness: multi-germ vertices need explicit orderings.
    for (v, _) in &vertices {
        let count: usize = polygons
            .iter()
            .map(|p| p.germ_vertices.iter().filter(|w| *w == v).count())
            .sum();
        if count >= 2 && !orderings.contains_key(v) {
            return Err(Error::Parse(format!(
                "vertex `{v}` has {count} germs but no ordering entry"
            )));
        }
    }
    BrauerConfiguration::new(vertices, polygons, orderings)
}

/// Canonical document for a configuration: sorted vertices, document-order
/// polygons, and one ordering entry per vertex of valency two or more, in
/// the canonical rotation.
pub fn to_doc(cfg: &BrauerConfiguration) -> ConfigDoc {
    let vertices = cfg
        .vertices()
        .iter()
        .map(|(v, &m)| VertexDoc { id: v.0.clone(), multiplicity: m })
        .collect();
    let polygons = cfg
        .polygons()
        .iter()
        .map(|p| PolygonDoc {
            id: p.id.0.clone(),
            vertices: p.germ_vertices.iter().map(|v| v.0.clone()).collect(),
        })
        .collect();
    let mut orderings = BTreeMap::new();
    for (v, germs) in cfg.orderings() {
        if germs.len() < 2 {
            continue;
        }
        orderings.insert(
            v.0.clone(),
            germs.iter().map(|g| germ_ref(cfg, g)).collect(),
        );
    }
    ConfigDoc { vertices, polygons, orderings }
}

fn germ_ref(cfg: &BrauerConfiguration, g: &Germ) -> String {
    let v = cfg.germ_vertex(g).expect("germ of the configuration");
    let count = cfg
        .polygon(&g.polygon)
        .map(|p| p.germ_vertices.iter().filter(|w| *w == v).count())
        .unwrap_or(0);
    if count > 1 {
        format!("{}[{}]", g.polygon, g.slot)
    } else {
        g.polygon.0.clone()
    }
}

pub fn serialize(cfg: &BrauerConfiguration) -> String {
    serde_json::to_string_pretty(&to_doc(cfg)).expect("document serializes")
}

/// Graphviz rendering of the incidence structure: circles for vertices
/// (labelled with multiplicity when above one), boxes for polygons.
pub fn to_dot(cfg: &BrauerConfiguration) -> String {
    let mut out = String::from("graph configuration {\n");
    for (v, &m) in cfg.vertices() {
        let label = if m > 1 { format!("{v} (e={m})") } else { v.0.clone() };
        out.push_str(&format!("  \"v:{v}\" [shape=circle, label=\"{label}\"];\n"));
    }
    for p in cfg.polygons() {
        out.push_str(&format!("  \"p:{}\" [shape=box, label=\"{}\"];\n", p.id, p.id));
        for (slot, v) in p.germ_vertices.iter().enumerate() {
            out.push_str(&format!(
                "  \"p:{}\" -- \"v:{v}\" [label=\"{slot}\"];\n",
                p.id
            ));
        }
    }
    out.push_str("}\n");
    out
}
