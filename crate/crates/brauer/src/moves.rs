//! Configuration-level moves that preserve the derived class: re-attaching
//! a fan of truncated edges one step closer to the unique 3-gon, iterated
//! star normalization, and the multiplicity-splitting construction that
//! trades a multiplicity for a simple 2-cycle.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::Serialize;

use crate::config::{BrauerConfiguration, Germ, Polygon, PolygonId, VertexId};
use crate::{Error, Result};

#[derive(Clone, Debug, Serialize)]
pub struct MoveRecord {
    pub kind: &'static str,
    pub u: String,
    pub u_prime: String,
    /// Polygon ids re-attached from `u` to `u_prime`.
    pub moved: Vec<String>,
    /// Successor sequence at `u_prime` after the move, starting at the
    /// connecting edge.
    pub sequence: Vec<String>,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct MoveLog {
    pub records: Vec<MoveRecord>,
}

impl MoveLog {
    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    /// Re-apply the recorded moves to `cfg`. The records carry enough data
    /// to reproduce the output exactly; mismatched inputs error out.
    pub fn replay(&self, cfg: &BrauerConfiguration) -> Result<BrauerConfiguration> {
        let mut current = cfg.clone();
        for rec in &self.records {
            let (next, log) = reduction_move(
                &current,
                &VertexId::from(rec.u.as_str()),
                &VertexId::from(rec.u_prime.as_str()),
            )?;
            let got = &log.records[0];
            if got.kind != rec.kind || got.moved != rec.moved {
                return Err(Error::Shape(format!(
                    "replay diverged at the move `{}` -> `{}`",
                    rec.u, rec.u_prime
                )));
            }
            current = next;
        }
        Ok(current)
    }
}

/// The unique 3-gon of a configuration satisfying the move assumptions:
/// multiplicity-free tree, exactly one 3-gon, nothing larger.
fn the_triangle(cfg: &BrauerConfiguration) -> Result<&Polygon> {
    let report = cfg.validate();
    if !report.is_valid() {
        return Err(Error::Invalid(report));
    }
    let analysis = cfg.analyze();
    if !analysis.is_multiplicity_free {
        return Err(Error::Precondition("moves need a multiplicity-free configuration".into()));
    }
    if !analysis.is_tree {
        return Err(Error::Precondition("moves need a tree-shaped configuration".into()));
    }
    if analysis.max_polygon_size > 3 {
        return Err(Error::Precondition("moves allow no polygon beyond a 3-gon".into()));
    }
    let tris: Vec<&Polygon> = cfg.polygons().iter().filter(|p| p.size() == 3).collect();
    match tris[..] {
        [t] => Ok(t),
        _ => Err(Error::Precondition(format!(
            "moves need exactly one 3-gon, found {}",
            tris.len()
        ))),
    }
}

/// Vertex distances from the 3-gon's corners, counting crossed polygons.
fn distances(cfg: &BrauerConfiguration, triangle: &Polygon) -> BTreeMap<VertexId, usize> {
    let mut dist: BTreeMap<VertexId, usize> = BTreeMap::new();
    let mut queue = VecDeque::new();
    for v in triangle.distinct_vertices() {
        dist.insert(v.clone(), 0);
        queue.push_back(v.clone());
    }
    while let Some(v) = queue.pop_front() {
        let d = dist[&v];
        for g in cfg.ordering(&v) {
            let poly = cfg.polygon(&g.polygon).expect("germ polygon");
            for w in &poly.germ_vertices {
                if !dist.contains_key(w) {
                    dist.insert(w.clone(), d + 1);
                    queue.push_back(w.clone());
                }
            }
        }
    }
    dist
}

/// A 2-gon one of whose vertices is truncated.
fn is_truncated_edge(cfg: &BrauerConfiguration, p: &Polygon) -> bool {
    p.size() == 2 && p.germ_vertices.iter().any(|v| cfg.is_truncated(v))
}

/// Re-attach every truncated edge hanging at `u` to `u_prime`, the far end
/// of the one connecting edge y₁; the moved germs land in the cyclic order
/// at `u_prime` directly after y₁, keeping their order around `u`.
pub fn reduction_move(
    cfg: &BrauerConfiguration,
    u: &VertexId,
    u_prime: &VertexId,
) -> Result<(BrauerConfiguration, MoveLog)> {
    let triangle = the_triangle(cfg)?;
    if cfg.ordering(u).is_empty() {
        return Err(Error::UnknownVertex(u.to_string()));
    }
    // y₁: the polygon joining u to u′
    let y1 = cfg
        .ordering(u)
        .iter()
        .map(|g| cfg.polygon(&g.polygon).expect("germ polygon"))
        .find(|p| p.germ_vertices.contains(u_prime))
        .ok_or_else(|| Error::Shape(format!("no polygon joins `{u}` to `{u_prime}`")))?;
    if y1.id == triangle.id {
        return Err(Error::Shape(format!(
            "the connecting polygon at `{u}` is the 3-gon `{}`",
            y1.id
        )));
    }
    // successor sequence of y₁ at u fixes the order of the moved edges
    let ord_u = cfg.ordering(u);
    let start = ord_u
        .iter()
        .position(|g| g.polygon == y1.id)
        .expect("y1 sits at u");
    let mut moved: Vec<Germ> = Vec::new();
    for i in 1..ord_u.len() {
        let g = &ord_u[(start + i) % ord_u.len()];
        let p = cfg.polygon(&g.polygon).expect("germ polygon");
        if !is_truncated_edge(cfg, p) {
            return Err(Error::Shape(format!(
                "polygon `{}` at `{u}` is not a truncated edge",
                p.id
            )));
        }
        moved.push(g.clone());
    }

    if moved.is_empty() {
        let seq = rotate_to(cfg.ordering(u_prime), &y1.id);
        let log = MoveLog {
            records: vec![MoveRecord {
                kind: "noop",
                u: u.to_string(),
                u_prime: u_prime.to_string(),
                moved: Vec::new(),
                sequence: seq.iter().map(|g| g.polygon.to_string()).collect(),
            }],
        };
        return Ok((cfg.clone(), log));
    }

    let moved_ids: BTreeSet<&PolygonId> = moved.iter().map(|g| &g.polygon).collect();
    let polygons: Vec<Polygon> = cfg
        .polygons()
        .iter()
        .map(|p| {
            if !moved_ids.contains(&p.id) {
                return p.clone();
            }
            Polygon {
                id: p.id.clone(),
                germ_vertices: p
                    .germ_vertices
                    .iter()
                    .map(|v| if v == u { u_prime.clone() } else { v.clone() })
                    .collect(),
            }
        })
        .collect();

    let mut orderings: BTreeMap<VertexId, Vec<Germ>> = cfg.orderings().clone();
    orderings.insert(u.clone(), vec![Germ::new(y1.id.clone(), y1_slot(y1, u))]);
    let mut at_target = rotate_to(cfg.ordering(u_prime), &y1.id);
    for (offset, g) in moved.iter().enumerate() {
        at_target.insert(1 + offset, g.clone());
    }
    let sequence: Vec<String> = at_target.iter().map(|g| g.polygon.to_string()).collect();
    orderings.insert(u_prime.clone(), at_target);

    let out =
        BrauerConfiguration::new(cfg.vertices().clone(), polygons, orderings)?;
    let log = MoveLog {
        records: vec![MoveRecord {
            kind: "reduction",
            u: u.to_string(),
            u_prime: u_prime.to_string(),
            moved: moved.iter().map(|g| g.polygon.to_string()).collect(),
            sequence,
        }],
    };
    Ok((out, log))
}

fn y1_slot(y1: &Polygon, u: &VertexId) -> usize {
    y1.germ_vertices
        .iter()
        .position(|v| v == u)
        .expect("u sits on y1")
}

fn rotate_to(ordering: &[Germ], first: &PolygonId) -> Vec<Germ> {
    let start = ordering
        .iter()
        .position(|g| g.polygon == *first)
        .expect("polygon in ordering");
    (0..ordering.len())
        .map(|i| ordering[(start + i) % ordering.len()].clone())
        .collect()
}

/// Whether every polygon except the 3-gon is a pendant edge on one of its
/// corners.
pub fn is_star(cfg: &BrauerConfiguration) -> bool {
    let tris: Vec<&Polygon> = cfg.polygons().iter().filter(|p| p.size() == 3).collect();
    let [t] = tris[..] else { return false };
    let corners: BTreeSet<&VertexId> = t.distinct_vertices().into_iter().collect();
    cfg.polygons().iter().all(|p| {
        if p.id == t.id {
            return true;
        }
        p.size() == 2
            && p.germ_vertices.iter().any(|v| corners.contains(v))
            && p.germ_vertices
                .iter()
                .any(|v| !corners.contains(v) && cfg.is_truncated(v))
    })
}

/// Apply reduction moves, deepest fan first, until the tree is a star of
/// three edge fans on the 3-gon.
pub fn normalize_to_star(
    cfg: &BrauerConfiguration,
) -> Result<(BrauerConfiguration, MoveLog)> {
    the_triangle(cfg)?;
    let mut current = cfg.clone();
    let mut log = MoveLog::default();
    loop {
        let triangle = the_triangle(&current)?.clone();
        let corners: BTreeSet<VertexId> =
            triangle.distinct_vertices().into_iter().cloned().collect();
        let dist = distances(&current, &triangle);
        // deepest non-corner vertex whose polygons are one connecting edge
        // plus truncated edges only
        let mut candidate: Option<(usize, VertexId, VertexId)> = None;
        for (v, _) in current.vertices() {
            if corners.contains(v) || current.valency(v) < 2 {
                continue;
            }
            let mut connecting: Vec<&Polygon> = Vec::new();
            for g in current.ordering(v) {
                let p = current.polygon(&g.polygon).expect("germ polygon");
                if !is_truncated_edge(&current, p) {
                    connecting.push(p);
                }
            }
            let [y1] = connecting[..] else { continue };
            let target = y1
                .germ_vertices
                .iter()
                .find(|w| *w != v)
                .expect("2-gon far vertex")
                .clone();
            let d = dist[v];
            let better = match &candidate {
                None => true,
                Some((best, bv, _)) => d > *best || (d == *best && v < bv),
            };
            if better {
                candidate = Some((d, v.clone(), target));
            }
        }
        let Some((_, u, u_prime)) = candidate else { break };
        let (next, step) = reduction_move(&current, &u, &u_prime)?;
        current = next;
        log.records.extend(step.records);
    }
    if !is_star(&current) {
        return Err(Error::Shape("normalization stalled off the star form".into()));
    }
    Ok((current, log))
}

/// Deterministic germ picks for `multiplicity_split`: the first germ of the
/// cyclic ordering at each vertex of multiplicity above one.
pub fn default_split_choices(cfg: &BrauerConfiguration) -> BTreeMap<VertexId, Germ> {
    cfg.vertices()
        .iter()
        .filter(|(_, &m)| m > 1)
        .map(|(v, _)| (v.clone(), cfg.ordering(v)[0].clone()))
        .collect()
}

/// Replace every multiplicity above one by a simple 2-cycle: a fresh vertex
/// t′ and a pair of parallel 2-gons between t and t′, spliced into the
/// ordering at t right after the chosen germ. The output is
/// multiplicity-free.
pub fn multiplicity_split(
    cfg: &BrauerConfiguration,
    picks: &BTreeMap<VertexId, Germ>,
) -> Result<BrauerConfiguration> {
    let report = cfg.validate();
    if !report.is_valid() {
        return Err(Error::Invalid(report));
    }
    let targets: Vec<VertexId> = cfg
        .vertices()
        .iter()
        .filter(|(_, &m)| m > 1)
        .map(|(v, _)| v.clone())
        .collect();
    for t in &targets {
        let Some(pick) = picks.get(t) else {
            return Err(Error::Precondition(format!(
                "no germ picked at `{t}` (multiplicity {})",
                cfg.multiplicity(t)
            )));
        };
        if cfg.germ_vertex(pick)? != t {
            return Err(Error::Precondition(format!(
                "the germ picked for `{t}` sits elsewhere"
            )));
        }
    }
    for v in picks.keys() {
        if !targets.contains(v) {
            return Err(Error::Precondition(format!(
                "`{v}` has multiplicity one; nothing to split"
            )));
        }
    }
    if targets.is_empty() {
        return Ok(cfg.clone());
    }

    let mut vertices: BTreeMap<VertexId, u32> =
        cfg.vertices().keys().map(|v| (v.clone(), 1)).collect();
    let mut polygons = cfg.polygons().to_vec();
    let mut orderings = cfg.orderings().clone();
    let mut taken: BTreeSet<String> =
        polygons.iter().map(|p| p.id.to_string()).collect();
    for t in &targets {
        let prime = fresh_vertex(&vertices, &format!("{t}'"));
        vertices.insert(prime.clone(), 1);
        let p_id = fresh_polygon(&mut taken, &format!("p_{t}"));
        let q_id = fresh_polygon(&mut taken, &format!("q_{t}"));
        for id in [&p_id, &q_id] {
            polygons.push(Polygon {
                id: id.clone(),
                germ_vertices: vec![t.clone(), prime.clone()],
            });
        }
        let ord = orderings.get_mut(t).expect("multiplicity above one implies germs");
        let at = ord
            .iter()
            .position(|g| g == &picks[t])
            .expect("validated pick");
        ord.insert(at + 1, Germ::new(p_id.clone(), 0));
        ord.insert(at + 2, Germ::new(q_id.clone(), 0));
        orderings.insert(prime, vec![Germ::new(p_id, 1), Germ::new(q_id, 1)]);
    }
    BrauerConfiguration::new(vertices, polygons, orderings)
}

fn fresh_vertex(vertices: &BTreeMap<VertexId, u32>, base: &str) -> VertexId {
    let mut id = base.to_string();
    while vertices.contains_key(&VertexId::from(id.as_str())) {
        id.push('\'');
    }
    VertexId::from(id.as_str())
}

fn fresh_polygon(taken: &mut BTreeSet<String>, base: &str) -> PolygonId {
    let mut id = base.to_string();
    while taken.contains(&id) {
        id.push('\'');
    }
    taken.insert(id.clone());
    PolygonId::from(id.as_str())
}
