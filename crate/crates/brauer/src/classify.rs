//! Tame/wild classification of a configuration, with structured evidence.
//!
//! Decision procedure, first match wins:
//!   1. every polygon a 2-gon — the Brauer graph case;
//!   2. a polygon with 5 or more germs — wild;
//!   3. a 4-gon — tame only for the plain cross (one 4-gon, four truncated
//!      legs, every vertex of multiplicity one);
//!   4. 3-gons — tame for the triangle chain (each triangle carrying two
//!      truncated legs, anchored on a common 2-gon core) and for the
//!      exceptional stars (multiplicity-free tree, one triangle, arm sizes on
//!      the six-tuple list); everything else is wild.

use std::collections::{BTreeSet, VecDeque};

use serde_json::{json, Value};

use crate::config::{BrauerConfiguration, Polygon, PolygonId, VertexId};
use crate::quiver::QuiverPresentation;
use crate::strings::{string_violation, witness_band, Band, Letter};
use crate::{Error, Result};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum StarFamily {
    DynkinE,
    EuclideanE,
}

impl StarFamily {
    pub fn code(self) -> &'static str {
        match self {
            StarFamily::DynkinE => "dynkin_e",
            StarFamily::EuclideanE => "euclidean_e",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum WildReason {
    /// A polygon too large for tameness: a 4-gon off the cross shape, or
    /// anything bigger.
    Quadserial,
    /// A single 3-gon next to a cycle or an extra multiplicity, outside the
    /// chain shape.
    CycleOrMultiplicity,
    /// Two or more 3-gons that do not form a triangle chain.
    MultipleTriangles,
    /// A multiplicity-free tree with one 3-gon whose arm counts miss the
    /// exceptional table.
    ExceptionalStarArms,
}

impl WildReason {
    pub fn code(self) -> &'static str {
        match self {
            WildReason::Quadserial => "quadserial",
            WildReason::CycleOrMultiplicity => "cycle_or_multiplicity",
            WildReason::MultipleTriangles => "multiple_triangles",
            WildReason::ExceptionalStarArms => "exceptional_star_arms",
        }
    }
}

/// Evidence for the triangle-chain case: r triangles, two truncated legs
/// each, anchor vertices joined by a connected 2-gon core.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TriangleChain {
    pub r: usize,
    pub triangles: Vec<PolygonId>,
    pub legs: Vec<PolygonId>,
    pub anchors: Vec<VertexId>,
    pub core: Vec<PolygonId>,
    /// Core has no polygons: a lone triangle anchored on a bare vertex whose
    /// extra multiplicity keeps the configuration valid.
    pub degenerate_core: bool,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum TameCase {
    BrauerGraph,
    TriangleChain(TriangleChain),
    ExceptionalStar { arms: (usize, usize, usize), family: StarFamily },
    QuadCross,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Verdict {
    Tame(TameCase),
    Wild { reason: WildReason, detail: String },
}

impl Verdict {
    pub fn is_tame(&self) -> bool {
        matches!(self, Verdict::Tame(_))
    }

    pub fn summary(&self) -> String {
        match self {
            Verdict::Tame(TameCase::BrauerGraph) => "tame: Brauer graph".into(),
            Verdict::Tame(TameCase::TriangleChain(c)) => {
                format!("tame: triangle chain, r = {}", c.r)
            }
            Verdict::Tame(TameCase::ExceptionalStar { arms, family }) => format!(
                "tame: exceptional star ({},{},{}), {}",
                arms.0,
                arms.1,
                arms.2,
                family.code()
            ),
            Verdict::Tame(TameCase::QuadCross) => "tame: 4-gon cross".into(),
            Verdict::Wild { reason, detail } => {
                format!("wild: {} — {detail}", reason.code())
            }
        }
    }
}

/// The wildness certificate this toolkit can produce, if any.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum WildWitness {
    /// A band whose module family detects wildness around one polygon.
    CrossBand(Band),
    /// Arrow indices of a connected acyclic subquiver carrying a wild
    /// hereditary algebra; every directed path inside it avoids the
    /// relations.
    WildSubquiver(Vec<usize>),
    /// No constructive certificate; the reason code names the governing
    /// branch of the classification.
    Unavailable { reason: String },
}

fn wild(reason: WildReason, detail: impl Into<String>) -> Verdict {
    Verdict::Wild { reason, detail: detail.into() }
}

pub fn classify(cfg: &BrauerConfiguration) -> Result<Verdict> {
    let report = cfg.validate();
    if !report.is_valid() {
        return Err(Error::Invalid(report));
    }
    let analysis = cfg.analyze();
    if analysis.max_polygon_size <= 2 {
        return Ok(Verdict::Tame(TameCase::BrauerGraph));
    }
    if analysis.max_polygon_size >= 5 {
        let big = cfg
            .polygons()
            .iter()
            .find(|p| p.size() >= 5)
            .expect("size witness");
        return Ok(wild(
            WildReason::Quadserial,
            format!("polygon {} has {} germs", big.id, big.size()),
        ));
    }
    if analysis.max_polygon_size == 4 {
        return Ok(if is_quad_cross(cfg) {
            Verdict::Tame(TameCase::QuadCross)
        } else {
            wild(WildReason::Quadserial, "a 4-gon outside the plain cross shape")
        });
    }
    // 3-gons present from here on.
    if let Some(chain) = match_triangle_chain(cfg) {
        return Ok(Verdict::Tame(TameCase::TriangleChain(chain)));
    }
    let triangles = cfg.polygons().iter().filter(|p| p.size() == 3).count();
    if triangles >= 2 {
        return Ok(wild(
            WildReason::MultipleTriangles,
            format!("{triangles} 3-gons with no chain decomposition"),
        ));
    }
    if !analysis.is_tree || !analysis.is_multiplicity_free {
        return Ok(wild(
            WildReason::CycleOrMultiplicity,
            "one 3-gon beside a cycle or an extra multiplicity",
        ));
    }
    let arms = arm_counts(cfg)?;
    Ok(match exceptional_family(arms) {
        Some(family) => Verdict::Tame(TameCase::ExceptionalStar { arms, family }),
        None => wild(
            WildReason::ExceptionalStarArms,
            format!("arm counts ({},{},{}) miss the exceptional table", arms.0, arms.1, arms.2),
        ),
    })
}

fn exceptional_family(arms: (usize, usize, usize)) -> Option<StarFamily> {
    match arms {
        (1, 2, 2) | (1, 2, 3) | (1, 2, 4) => Some(StarFamily::DynkinE),
        (1, 2, 5) | (1, 3, 3) | (2, 2, 2) => Some(StarFamily::EuclideanE),
        _ => None,
    }
}

/// Exactly one 4-gon on four distinct plain vertices, each carrying one
/// truncated leg, and nothing else.
fn is_quad_cross(cfg: &BrauerConfiguration) -> bool {
    let quads: Vec<&Polygon> = cfg.polygons().iter().filter(|p| p.size() == 4).collect();
    if quads.len() != 1 || cfg.polygons().len() != 5 {
        return false;
    }
    let x = quads[0];
    if x.is_self_folded() {
        return false;
    }
    let mut legs = BTreeSet::new();
    for v in x.distinct_vertices() {
        match leg_at(cfg, &x.id, v) {
            Some(leg) => {
                legs.insert(leg);
            }
            None => return false,
        }
    }
    legs.len() == 4
}

/// The truncated leg hanging at `v` beside polygon `owner`, if `v` is a
/// plain valency-2 vertex whose other germ is a 2-gon ending at a truncated
/// multiplicity-1 vertex.
fn leg_at(cfg: &BrauerConfiguration, owner: &PolygonId, v: &VertexId) -> Option<PolygonId> {
    if cfg.multiplicity(v) != 1 || cfg.valency(v) != 2 {
        return None;
    }
    let others: Vec<&PolygonId> = cfg
        .ordering(v)
        .iter()
        .map(|g| &g.polygon)
        .filter(|p| *p != owner)
        .collect();
    let [leg_id] = others[..] else { return None };
    let leg = cfg.polygon(leg_id).ok()?;
    if leg.size() != 2 {
        return None;
    }
    let far: Vec<&VertexId> = leg.germ_vertices.iter().filter(|w| *w != v).collect();
    let [far] = far[..] else { return None };
    (cfg.valency(far) == 1 && cfg.multiplicity(far) == 1).then(|| leg.id.clone())
}

/// Decompose into the triangle-chain shape: every 3-gon carries two
/// truncated legs, its third corner anchors into a connected 2-gon core
/// containing all anchors. Multiplicities are free inside the core only.
fn match_triangle_chain(cfg: &BrauerConfiguration) -> Option<TriangleChain> {
    let tris: Vec<&Polygon> = cfg.polygons().iter().filter(|p| p.size() == 3).collect();
    if tris.is_empty() {
        return None;
    }
    let mut triangles = Vec::new();
    let mut legs: Vec<PolygonId> = Vec::new();
    let mut anchors = Vec::new();
    for t in &tris {
        if t.is_self_folded() {
            return None;
        }
        let corners = t.distinct_vertices();
        let with_leg: Vec<(&VertexId, PolygonId)> = corners
            .iter()
            .filter_map(|&v| leg_at(cfg, &t.id, v).map(|leg| (v, leg)))
            .collect();
        let (anchor, chosen) = match with_leg.len() {
            0 | 1 => return None,
            2 => {
                let leg_corners: Vec<&VertexId> = with_leg.iter().map(|(v, _)| *v).collect();
                let u = corners
                    .iter()
                    .copied()
                    .find(|c| !leg_corners.contains(c))
                    .expect("third corner")
                    .clone();
                (u, with_leg)
            }
            _ => {
                // All three corners carry legs; the least one anchors the core.
                let u = with_leg.iter().map(|(v, _)| (*v).clone()).min().expect("corner");
                let rest: Vec<(&VertexId, PolygonId)> =
                    with_leg.into_iter().filter(|(v, _)| **v != u).collect();
                (u, rest)
            }
        };
        anchors.push(anchor);
        legs.extend(chosen.into_iter().map(|(_, l)| l));
        triangles.push(t.id.clone());
    }
    let leg_set: BTreeSet<&PolygonId> = legs.iter().collect();
    if leg_set.len() != legs.len() {
        return None;
    }
    let used: BTreeSet<&PolygonId> = triangles.iter().chain(legs.iter()).collect();
    let core: Vec<PolygonId> = cfg
        .polygons()
        .iter()
        .filter(|p| !used.contains(&p.id))
        .map(|p| p.id.clone())
        .collect();
    if core.iter().any(|p| cfg.polygon(p).expect("listed").size() != 2) {
        return None;
    }
    if core.is_empty() {
        // A bare anchor is only admissible for a lone triangle whose anchor
        // carries extra multiplicity (otherwise the configuration is invalid
        // or the shape is out of scope).
        if triangles.len() == 1 && cfg.multiplicity(&anchors[0]) > 1 {
            return Some(TriangleChain {
                r: 1,
                triangles,
                legs,
                anchors,
                core,
                degenerate_core: true,
            });
        }
        return None;
    }
    if !core_connected(cfg, &core) {
        return None;
    }
    let core_vertices: BTreeSet<&VertexId> = core
        .iter()
        .flat_map(|p| cfg.polygon(p).expect("listed").germ_vertices.iter())
        .collect();
    if anchors.iter().any(|u| !core_vertices.contains(u)) {
        return None;
    }
    Some(TriangleChain {
        r: triangles.len(),
        triangles,
        legs,
        anchors,
        core,
        degenerate_core: false,
    })
}

fn core_connected(cfg: &BrauerConfiguration, core: &[PolygonId]) -> bool {
    let members: BTreeSet<&PolygonId> = core.iter().collect();
    let mut seen = BTreeSet::from([&core[0]]);
    let mut queue = VecDeque::from([&core[0]]);
    while let Some(p) = queue.pop_front() {
        let poly = cfg.polygon(p).expect("listed");
        for v in &poly.germ_vertices {
            for g in cfg.ordering(v) {
                if members.contains(&g.polygon) && seen.insert(&g.polygon) {
                    queue.push_back(&g.polygon);
                }
            }
        }
    }
    seen.len() == core.len()
}

/// Sorted polygon counts of the three subtrees hanging off the unique 3-gon.
pub fn arm_counts(cfg: &BrauerConfiguration) -> Result<(usize, usize, usize)> {
    let analysis = cfg.analyze();
    let tris: Vec<&Polygon> = cfg.polygons().iter().filter(|p| p.size() == 3).collect();
    let [t] = tris[..] else {
        return Err(Error::Precondition(
            "arm counts need exactly one 3-gon".into(),
        ));
    };
    if !analysis.is_tree || !analysis.is_multiplicity_free || t.is_self_folded() {
        return Err(Error::Precondition(
            "arm counts need a multiplicity-free tree around a plain 3-gon".into(),
        ));
    }
    let mut counts: Vec<usize> = t
        .distinct_vertices()
        .into_iter()
        .map(|v| component_polygons(cfg, v, &t.id).len())
        .collect();
    counts.sort_unstable();
    Ok((counts[0], counts[1], counts[2]))
}

/// Polygons reachable from `start` without crossing `banned`.
fn component_polygons(
    cfg: &BrauerConfiguration,
    start: &VertexId,
    banned: &PolygonId,
) -> BTreeSet<PolygonId> {
    let mut polygons = BTreeSet::new();
    let mut seen = BTreeSet::from([start.clone()]);
    let mut queue = VecDeque::from([start.clone()]);
    while let Some(v) = queue.pop_front() {
        for g in cfg.ordering(&v) {
            if g.polygon == *banned {
                continue;
            }
            if polygons.insert(g.polygon.clone()) {
                for u in &cfg.polygon(&g.polygon).expect("validated").germ_vertices {
                    if seen.insert(u.clone()) {
                        queue.push_back(u.clone());
                    }
                }
            }
        }
    }
    polygons
}

/// Produce a wildness certificate for a wild configuration: a band around a
/// qualifying polygon when one exists, otherwise an acyclic wild subquiver
/// stitched from a string between two 3-gons, otherwise the reason code.
pub fn wildness_witness(
    cfg: &BrauerConfiguration,
    pres: &QuiverPresentation,
) -> Result<WildWitness> {
    let verdict = classify(cfg)?;
    let Verdict::Wild { reason, .. } = verdict else {
        return Err(Error::Precondition(
            "configuration is tame; no wildness witness exists".into(),
        ));
    };
    let mut candidates: Vec<&PolygonId> = cfg
        .polygons()
        .iter()
        .filter(|p| p.size() > 2)
        .map(|p| &p.id)
        .collect();
    candidates.extend(
        cfg.polygons()
            .iter()
            .filter(|p| p.size() == 2 && p.is_self_folded())
            .map(|p| &p.id),
    );
    for x in candidates {
        if let Ok(band) = witness_band(cfg, pres, x) {
            return Ok(WildWitness::CrossBand(band));
        }
    }
    let tris: Vec<PolygonId> = cfg
        .polygons()
        .iter()
        .filter(|p| p.size() == 3)
        .map(|p| p.id.clone())
        .collect();
    if tris.len() >= 2 {
        if let Some(arrows) = find_x_subquiver(pres, &tris) {
            return Ok(WildWitness::WildSubquiver(arrows));
        }
    }
    Ok(WildWitness::Unavailable { reason: reason.code().into() })
}

/// Search for the double-T subquiver: a string w between 3-gons x and y,
/// one- and two-letter branches at x, two single-letter branches at y, all
/// on distinct arrows, forming a tree whose directed paths stay nonzero.
fn find_x_subquiver(pres: &QuiverPresentation, tris: &[PolygonId]) -> Option<Vec<usize>> {
    let letters_into = |p: &PolygonId| -> Vec<Letter> {
        let mut v = Vec::new();
        for (i, a) in pres.arrows().iter().enumerate() {
            if a.target == *p {
                v.push(Letter::direct(i));
            }
            if a.source == *p {
                v.push(Letter::formal_inverse(i));
            }
        }
        v
    };
    let letters_from = |p: &PolygonId| -> Vec<Letter> {
        let mut v = Vec::new();
        for (i, a) in pres.arrows().iter().enumerate() {
            if a.source == *p {
                v.push(Letter::direct(i));
            }
            if a.target == *p {
                v.push(Letter::formal_inverse(i));
            }
        }
        v
    };
    let ok = |word: &[Letter]| string_violation(pres, word).is_none();
    for x in tris {
        for y in tris.iter().filter(|y| *y != x) {
            for w in strings_between(pres, x, y, 10, 60) {
                let used: BTreeSet<usize> = w.iter().map(|l| l.arrow).collect();
                for a1 in letters_into(x).into_iter().filter(|l| !used.contains(&l.arrow)) {
                    let mut w1 = vec![a1];
                    w1.extend(&w);
                    if !ok(&w1) {
                        continue;
                    }
                    for a3 in letters_into(x)
                        .into_iter()
                        .filter(|l| !used.contains(&l.arrow) && l.arrow != a1.arrow)
                    {
                        for a2 in letters_into(a3.source(pres))
                            .into_iter()
                            .filter(|l| {
                                !used.contains(&l.arrow)
                                    && l.arrow != a1.arrow
                                    && l.arrow != a3.arrow
                            })
                        {
                            let mut w23 = vec![a2, a3];
                            w23.extend(&w);
                            if !ok(&w23) {
                                continue;
                            }
                            let branch: BTreeSet<usize> =
                                [a1.arrow, a2.arrow, a3.arrow].into();
                            for g1 in letters_from(y).into_iter().filter(|l| {
                                !used.contains(&l.arrow) && !branch.contains(&l.arrow)
                            }) {
                                let mut wg1 = w.clone();
                                wg1.push(g1);
                                if !ok(&wg1) {
                                    continue;
                                }
                                for g2 in letters_from(y).into_iter().filter(|l| {
                                    !used.contains(&l.arrow)
                                        && !branch.contains(&l.arrow)
                                        && l.arrow != g1.arrow
                                }) {
                                    let mut wg2 = w.clone();
                                    wg2.push(g2);
                                    if !ok(&wg2) {
                                        continue;
                                    }
                                    let mut arrows: Vec<usize> = used.iter().copied().collect();
                                    arrows.extend([
                                        a1.arrow, a2.arrow, a3.arrow, g1.arrow, g2.arrow,
                                    ]);
                                    arrows.sort_unstable();
                                    if subquiver_is_tree(pres, &arrows)
                                        && directed_paths_nonzero(pres, &arrows)
                                    {
                                        return Some(arrows);
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    None
}

/// Valid strings from polygon `x` to polygon `y`, shortest first, capped.
fn strings_between(
    pres: &QuiverPresentation,
    x: &PolygonId,
    y: &PolygonId,
    max_len: usize,
    max_found: usize,
) -> Vec<Vec<Letter>> {
    let mut found = Vec::new();
    let mut queue: VecDeque<Vec<Letter>> = VecDeque::new();
    for (i, a) in pres.arrows().iter().enumerate() {
        if a.source == *x {
            queue.push_back(vec![Letter::direct(i)]);
        }
        if a.target == *x {
            queue.push_back(vec![Letter::formal_inverse(i)]);
        }
    }
    let mut explored = 0usize;
    while let Some(word) = queue.pop_front() {
        explored += 1;
        if explored > 20_000 {
            break;
        }
        if string_violation(pres, &word).is_some() {
            continue;
        }
        let tip = word.last().expect("nonempty").target(pres);
        if tip == y {
            found.push(word.clone());
            if found.len() >= max_found {
                break;
            }
        }
        if word.len() < max_len {
            for (i, a) in pres.arrows().iter().enumerate() {
                if a.source == *tip {
                    let mut next = word.clone();
                    next.push(Letter::direct(i));
                    queue.push_back(next);
                }
                if a.target == *tip {
                    let mut next = word.clone();
                    next.push(Letter::formal_inverse(i));
                    queue.push_back(next);
                }
            }
        }
    }
    found
}

fn subquiver_is_tree(pres: &QuiverPresentation, arrows: &[usize]) -> bool {
    let set: BTreeSet<usize> = arrows.iter().copied().collect();
    if set.len() != arrows.len() {
        return false;
    }
    let mut verts: BTreeSet<&PolygonId> = BTreeSet::new();
    for &a in &set {
        verts.insert(&pres.arrow(a).source);
        verts.insert(&pres.arrow(a).target);
    }
    if verts.len() != set.len() + 1 {
        return false;
    }
    let start = *verts.iter().next().expect("nonempty");
    let mut seen = BTreeSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(p) = queue.pop_front() {
        for &a in &set {
            let arrow = pres.arrow(a);
            for q in [&arrow.source, &arrow.target] {
                if (arrow.source == *p || arrow.target == *p) && seen.insert(q) {
                    queue.push_back(q);
                }
            }
        }
    }
    seen.len() == verts.len()
}

/// Every maximal directed path inside the arrow set is nonzero; subpaths
/// follow.
fn directed_paths_nonzero(pres: &QuiverPresentation, arrows: &[usize]) -> bool {
    let set: BTreeSet<usize> = arrows.iter().copied().collect();
    let starts: Vec<usize> = set
        .iter()
        .copied()
        .filter(|&a| {
            !set.iter()
                .any(|&b| b != a && pres.arrow(b).target == pres.arrow(a).source)
        })
        .collect();
    let mut stack: Vec<Vec<usize>> = starts.into_iter().map(|a| vec![a]).collect();
    while let Some(path) = stack.pop() {
        let last = *path.last().expect("nonempty");
        let succs: Vec<usize> = set
            .iter()
            .copied()
            .filter(|&b| b != last && pres.arrow(b).source == pres.arrow(last).target)
            .collect();
        if succs.is_empty() {
            if !matches!(pres.is_path_nonzero(&path), Ok(true)) {
                return false;
            }
        } else {
            for s in succs {
                let mut next = path.clone();
                next.push(s);
                stack.push(next);
            }
        }
    }
    true
}

/// Stable serialization: {type, case, evidence, witness}.
pub fn verdict_document(
    verdict: &Verdict,
    witness: Option<(&WildWitness, &QuiverPresentation)>,
) -> Value {
    let mut doc = match verdict {
        Verdict::Tame(TameCase::BrauerGraph) => json!({
            "type": "tame",
            "case": "brauer_graph",
            "evidence": {},
        }),
        Verdict::Tame(TameCase::TriangleChain(c)) => json!({
            "type": "tame",
            "case": "triangle_chain",
            "evidence": {
                "r": c.r,
                "triangles": c.triangles.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                "legs": c.legs.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                "anchors": c.anchors.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                "core": c.core.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
                "degenerate_core": c.degenerate_core,
            },
        }),
        Verdict::Tame(TameCase::ExceptionalStar { arms, family }) => json!({
            "type": "tame",
            "case": "exceptional_star",
            "evidence": { "arms": [arms.0, arms.1, arms.2], "family": family.code() },
        }),
        Verdict::Tame(TameCase::QuadCross) => json!({
            "type": "tame",
            "case": "quad_cross",
            "evidence": {},
        }),
        Verdict::Wild { reason, detail } => json!({
            "type": "wild",
            "reason": reason.code(),
            "detail": detail,
        }),
    };
    if let Some((w, pres)) = witness {
        let wdoc = match w {
            WildWitness::CrossBand(b) => json!({
                "kind": "cross_band",
                "band": b.display(pres),
            }),
            WildWitness::WildSubquiver(arrows) => json!({
                "kind": "wild_subquiver",
                "arrows": arrows.iter().map(|&a| pres.arrow(a).id.clone()).collect::<Vec<_>>(),
            }),
            WildWitness::Unavailable { reason } => json!({
                "kind": "none",
                "reason": reason,
            }),
        };
        doc["witness"] = wdoc;
    }
    doc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin::builtin;
    use crate::config::ConfigBuilder;
    use crate::quiver::compile;
    use std::collections::BTreeMap;

    fn verdict(name: &str) -> Verdict {
        classify(&builtin(name).unwrap()).unwrap()
    }

    fn star(m1: usize, m2: usize, m3: usize) -> BrauerConfiguration {
        builtin(&format!("star_{m1}_{m2}_{m3}")).unwrap()
    }

    #[test]
    fn builtins_fall_into_their_cases() {
        assert!(matches!(verdict("loopcase"), Verdict::Tame(TameCase::BrauerGraph)));
        assert!(matches!(verdict("caseiv"), Verdict::Tame(TameCase::QuadCross)));
        assert!(matches!(verdict("quadband1"), Verdict::Tame(TameCase::QuadCross)));
        assert!(matches!(
            verdict("quadband2"),
            Verdict::Wild { reason: WildReason::Quadserial, .. }
        ));
        assert!(matches!(
            verdict("fig1"),
            Verdict::Wild { reason: WildReason::Quadserial, .. }
        ));
        for name in ["a1", "a2", "a3", "a4"] {
            assert!(
                matches!(
                    verdict(name),
                    Verdict::Wild { reason: WildReason::CycleOrMultiplicity, .. }
                ),
                "{name}"
            );
        }
    }

    #[test]
    fn triangle_chains_are_recognized() {
        let Verdict::Tame(TameCase::TriangleChain(c)) = verdict("caseii_r1") else {
            panic!("caseii_r1 should be a chain");
        };
        assert_eq!(c.r, 1);
        assert_eq!(c.core, vec![PolygonId::from("g")]);
        assert_eq!(c.anchors, vec![VertexId::from("u1")]);
        assert!(!c.degenerate_core);

        let Verdict::Tame(TameCase::TriangleChain(c)) = verdict("indfunc") else {
            panic!("indfunc should be a chain");
        };
        assert_eq!(c.r, 3);
        assert_eq!(c.core.len(), 2);
        assert_eq!(c.legs.len(), 6);

        // (1,1,k) stars are chains, not exceptional stars.
        let Verdict::Tame(TameCase::TriangleChain(c)) = classify(&star(1, 1, 4)).unwrap()
        else {
            panic!("star(1,1,4) should be a chain");
        };
        assert_eq!(c.r, 1);
        assert_eq!(c.core.len(), 4);
        assert!(matches!(
            classify(&star(1, 1, 1)).unwrap(),
            Verdict::Tame(TameCase::TriangleChain(_))
        ));
    }

    #[test]
    fn degenerate_core_needs_the_extra_multiplicity() {
        let cfg = ConfigBuilder::new()
            .vertex("u", 2)
            .polygon("t", &["u", "v", "w"])
            .polygon("lv", &["v", "vp"])
            .polygon("lw", &["w", "wp"])
            .default_vertices()
            .build()
            .unwrap();
        let Verdict::Tame(TameCase::TriangleChain(c)) = classify(&cfg).unwrap() else {
            panic!("bare anchor with multiplicity should pass");
        };
        assert!(c.degenerate_core);
        assert!(c.core.is_empty());
    }

    #[test]
    fn exceptional_star_table() {
        for (arms, family) in [
            ((1, 2, 2), StarFamily::DynkinE),
            ((1, 2, 3), StarFamily::DynkinE),
            ((1, 2, 4), StarFamily::DynkinE),
            ((1, 2, 5), StarFamily::EuclideanE),
            ((1, 3, 3), StarFamily::EuclideanE),
            ((2, 2, 2), StarFamily::EuclideanE),
        ] {
            let got = classify(&star(arms.0, arms.1, arms.2)).unwrap();
            assert_eq!(
                got,
                Verdict::Tame(TameCase::ExceptionalStar { arms, family }),
                "star {arms:?}"
            );
        }
        for arms in [(1, 2, 6), (1, 3, 4), (2, 2, 3), (3, 3, 3), (1, 4, 4)] {
            assert!(
                matches!(
                    classify(&star(arms.0, arms.1, arms.2)).unwrap(),
                    Verdict::Wild { reason: WildReason::ExceptionalStarArms, .. }
                ),
                "star {arms:?}"
            );
        }
    }

    #[test]
    fn arm_counts_read_the_subtrees() {
        assert_eq!(arm_counts(&star(1, 2, 3)).unwrap(), (1, 2, 3));
        assert_eq!(arm_counts(&star(1, 1, 1)).unwrap(), (1, 1, 1));
        // caterpillar arm: a path of 4 edges
        let cfg = ConfigBuilder::new()
            .polygon("t", &["u1", "u2", "u3"])
            .polygon("l1", &["u1", "w1"])
            .polygon("l2", &["u2", "w2"])
            .polygon("c1", &["u3", "z1"])
            .polygon("c2", &["z1", "z2"])
            .polygon("c3", &["z2", "z3"])
            .polygon("c4", &["z3", "z4"])
            .default_vertices()
            .build()
            .unwrap();
        assert_eq!(arm_counts(&cfg).unwrap(), (1, 1, 4));
        assert!(arm_counts(&builtin("fig1").unwrap()).is_err());
        assert!(arm_counts(&builtin("a1").unwrap()).is_err());
    }

    #[test]
    fn verdicts_survive_relabeling() {
        let cfg = star(1, 2, 3);
        let vmap: BTreeMap<VertexId, VertexId> = cfg
            .vertices()
            .keys()
            .enumerate()
            .map(|(i, v)| (v.clone(), VertexId::from(format!("n{}", 90 - i).as_str())))
            .collect();
        let pmap: BTreeMap<PolygonId, PolygonId> = cfg
            .polygons()
            .iter()
            .enumerate()
            .map(|(i, p)| (p.id.clone(), PolygonId::from(format!("q{}", 40 - i).as_str())))
            .collect();
        let relabeled = cfg.relabel(&vmap, &pmap).unwrap();
        assert_eq!(classify(&cfg).unwrap(), classify(&relabeled).unwrap());

        let chain = builtin("caseii_r1").unwrap();
        let vmap: BTreeMap<VertexId, VertexId> = chain
            .vertices()
            .keys()
            .enumerate()
            .map(|(i, v)| (v.clone(), VertexId::from(format!("x{i}").as_str())))
            .collect();
        let relabeled = chain.relabel(&vmap, &BTreeMap::new()).unwrap();
        let (a, b) = (classify(&chain).unwrap(), classify(&relabeled).unwrap());
        match (a, b) {
            (
                Verdict::Tame(TameCase::TriangleChain(c1)),
                Verdict::Tame(TameCase::TriangleChain(c2)),
            ) => {
                assert_eq!(c1.r, c2.r);
                assert_eq!(c1.degenerate_core, c2.degenerate_core);
            }
            other => panic!("unexpected verdicts {other:?}"),
        }
    }

    fn two_triangle_tree() -> BrauerConfiguration {
        // Triangles x and y joined by one 2-gon, with a two-edge arm and a
        // one-edge arm on x, and one-edge arms on y: wild, no band anywhere.
        ConfigBuilder::new()
            .polygon("x", &["u0", "u1", "u2"])
            .polygon("y", &["w0", "w1", "w2"])
            .polygon("g", &["u0", "w0"])
            .polygon("p1", &["u1", "z1"])
            .polygon("p2", &["z1", "z2"])
            .polygon("q", &["u2", "z3"])
            .polygon("r1", &["w1", "z4"])
            .polygon("r2", &["w2", "z5"])
            .default_vertices()
            .build()
            .unwrap()
    }

    #[test]
    fn two_triangle_tree_gets_a_subquiver_witness() {
        let cfg = two_triangle_tree();
        assert!(matches!(
            classify(&cfg).unwrap(),
            Verdict::Wild { reason: WildReason::MultipleTriangles, .. }
        ));
        let pres = compile(&cfg).unwrap();
        let WildWitness::WildSubquiver(arrows) = wildness_witness(&cfg, &pres).unwrap()
        else {
            panic!("expected a subquiver witness");
        };
        // mechanical validation of the certificate
        assert!(subquiver_is_tree(&pres, &arrows));
        assert!(directed_paths_nonzero(&pres, &arrows));
        let verts: BTreeSet<&PolygonId> = arrows
            .iter()
            .flat_map(|&a| [&pres.arrow(a).source, &pres.arrow(a).target])
            .collect();
        assert_eq!(verts.len(), arrows.len() + 1);
        assert!(verts.len() >= 8);
    }

    #[test]
    fn cross_band_witnesses_lead() {
        for name in ["a1", "a2", "a3", "a4", "fig1"] {
            let cfg = builtin(name).unwrap();
            let pres = compile(&cfg).unwrap();
            assert!(
                matches!(wildness_witness(&cfg, &pres), Ok(WildWitness::CrossBand(_))),
                "{name}"
            );
        }
    }

    #[test]
    fn quad_cross_with_pendant_has_no_certificate() {
        let cfg = ConfigBuilder::new()
            .polygon("x", &["u1", "u2", "u3", "u4"])
            .polygon("e1", &["u1", "w1"])
            .polygon("e2", &["u2", "w2"])
            .polygon("e3", &["u3", "w3"])
            .polygon("e4", &["u4", "w4"])
            .polygon("extra", &["w1", "w5"])
            .ordering("u1", &[("x", 0), ("e1", 0)])
            .ordering("u2", &[("x", 1), ("e2", 0)])
            .ordering("u3", &[("x", 2), ("e3", 0)])
            .ordering("u4", &[("x", 3), ("e4", 0)])
            .default_vertices()
            .build()
            .unwrap();
        assert!(matches!(
            classify(&cfg).unwrap(),
            Verdict::Wild { reason: WildReason::Quadserial, .. }
        ));
        let pres = compile(&cfg).unwrap();
        let witness = wildness_witness(&cfg, &pres).unwrap();
        assert_eq!(
            witness,
            WildWitness::Unavailable { reason: "quadserial".into() }
        );
    }

    #[test]
    fn witnesses_require_wildness() {
        let cfg = builtin("loopcase").unwrap();
        let pres = compile(&cfg).unwrap();
        assert!(wildness_witness(&cfg, &pres).is_err());
    }

    #[test]
    fn growing_a_wild_region_stays_wild() {
        // extend the long arm of a wild (1,2,k) star repeatedly
        for extra in 0..=2 {
            let k = 6 + extra;
            let mut b = ConfigBuilder::new()
                .polygon("t", &["u1", "u2", "u3"])
                .polygon("l1", &["u1", "w1"])
                .polygon("l2a", &["u2", "w2a"])
                .polygon("l2b", &["u2", "w2b"])
                .polygon("m1", &["u3", "z1"]);
            for j in 2..=k {
                b = b.polygon(&format!("m{j}"), &[&format!("z{}", j - 1), &format!("z{j}")]);
            }
            let cfg = b.default_vertices().build().unwrap();
            assert!(!classify(&cfg).unwrap().is_tame(), "arm length {k}");
        }
    }

    #[test]
    fn verdict_documents_are_stable() {
        let v = classify(&star(1, 2, 3)).unwrap();
        let doc = verdict_document(&v, None);
        assert_eq!(doc["type"], "tame");
        assert_eq!(doc["case"], "exceptional_star");
        assert_eq!(doc["evidence"]["arms"][2], 3);
        assert_eq!(doc["evidence"]["family"], "dynkin_e");

        let cfg = builtin("a4").unwrap();
        let pres = compile(&cfg).unwrap();
        let v = classify(&cfg).unwrap();
        let w = wildness_witness(&cfg, &pres).unwrap();
        let doc = verdict_document(&v, Some((&w, &pres)));
        assert_eq!(doc["type"], "wild");
        assert_eq!(doc["reason"], "cycle_or_multiplicity");
        assert_eq!(doc["witness"]["kind"], "cross_band");
    }
}
