//! Compilation of a configuration into its bound quiver: one quiver vertex
//! per polygon, arrows from successor pairs at non-truncated vertices, and
//! the three relation families (truncated-edge powers, commutations of
//! germ cycles, and non-cycle zero pairs).

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::config::{BrauerConfiguration, Germ, PolygonId, VertexId};
use crate::{Error, Result};

/// A quiver arrow. `source_germ → target_germ` is the successor pair at
/// `vertex` that induced it; source/target are the owning polygons.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub id: String,
    pub source: PolygonId,
    pub target: PolygonId,
    pub vertex: VertexId,
    pub source_germ: Germ,
    pub target_germ: Germ,
}

/// One generator of the relation ideal. Paths are arrow indices, composed
/// left to right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Relation {
    /// Full cycle power extended once past its starting arrow, at a
    /// truncated edge (also carries the square of the special loop).
    Truncated(Vec<usize>),
    /// Equality of two full germ-cycle powers of one polygon.
    Commutation(Vec<usize>, Vec<usize>),
    /// Composable pair that sits in no vertex cycle.
    Zero(usize, usize),
}

/// The compiled presentation. Owns a copy of the configuration so the run
/// bounds (multiplicity × valency) stay available.
#[derive(Clone, Debug)]
pub struct QuiverPresentation {
    cfg: BrauerConfiguration,
    vertices: Vec<PolygonId>,
    arrows: Vec<Arrow>,
    relations: Vec<Relation>,
    cycles: BTreeMap<VertexId, Vec<usize>>,
    special_loop_case: bool,
    next_in_cycle: Vec<usize>,
    by_source_germ: BTreeMap<Germ, usize>,
    by_id: BTreeMap<String, usize>,
}

/// Build the presentation for a valid configuration.
pub fn compile(cfg: &BrauerConfiguration) -> Result<QuiverPresentation> {
    let report = cfg.validate();
    if !report.is_valid() {
        return Err(Error::Invalid(report));
    }
    let vertices: Vec<PolygonId> = cfg.polygons().iter().map(|p| p.id.clone()).collect();

    // The one-edge tree with two plain vertices collapses to K[α]/(α²).
    let special_loop_case = vertices.len() == 1
        && cfg.polygons()[0].size() == 2
        && !cfg.polygons()[0].is_self_folded()
        && cfg.vertices().values().all(|&m| m == 1);
    if special_loop_case {
        let p = &cfg.polygons()[0];
        let v = p.germ_vertices.iter().min().unwrap().clone();
        let g = Germ { polygon: p.id.clone(), slot: if p.germ_vertices[0] == v { 0 } else { 1 } };
        let arrow = Arrow {
            id: "loop".to_string(),
            source: p.id.clone(),
            target: p.id.clone(),
            vertex: v.clone(),
            source_germ: g.clone(),
            target_germ: g.clone(),
        };
        let mut by_source_germ = BTreeMap::new();
        by_source_germ.insert(g, 0);
        return Ok(QuiverPresentation {
            cfg: cfg.clone(),
            vertices,
            arrows: vec![arrow],
            relations: vec![Relation::Truncated(vec![0, 0])],
            cycles: BTreeMap::from([(v, vec![0])]),
            special_loop_case: true,
            next_in_cycle: vec![0],
            by_source_germ,
            by_id: BTreeMap::from([("loop".to_string(), 0)]),
        });
    }

    let mut arrows = Vec::new();
    let mut cycles = BTreeMap::new();
    let mut by_source_germ = BTreeMap::new();
    for (v, _) in cfg.vertices() {
        if cfg.is_truncated(v) {
            continue;
        }
        let ord = cfg.ordering(v);
        let mut cycle = Vec::new();
        for (k, g) in ord.iter().enumerate() {
            let h = &ord[(k + 1) % ord.len()];
            let idx = arrows.len();
            arrows.push(Arrow {
                id: format!("{v}#{k}"),
                source: g.polygon.clone(),
                target: h.polygon.clone(),
                vertex: v.clone(),
                source_germ: g.clone(),
                target_germ: h.clone(),
            });
            by_source_germ.insert(g.clone(), idx);
            cycle.push(idx);
        }
        cycles.insert(v.clone(), cycle);
    }
    let mut next_in_cycle = vec![0; arrows.len()];
    for cycle in cycles.values() {
        for (i, &a) in cycle.iter().enumerate() {
            next_in_cycle[a] = cycle[(i + 1) % cycle.len()];
        }
    }
    let by_id = arrows
        .iter()
        .enumerate()
        .map(|(i, a)| (a.id.clone(), i))
        .collect();

    let mut pres = QuiverPresentation {
        cfg: cfg.clone(),
        vertices,
        arrows,
        relations: Vec::new(),
        cycles,
        special_loop_case: false,
        next_in_cycle,
        by_source_germ,
        by_id,
    };
    pres.relations = pres.build_relations();
    Ok(pres)
}

impl QuiverPresentation {
    fn build_relations(&self) -> Vec<Relation> {
        let cfg = &self.cfg;
        let mut rels = Vec::new();
        // Truncated edges: the full cycle power at the far vertex, extended
        // once past its first arrow.
        for p in cfg.polygons() {
            if p.size() != 2 {
                continue;
            }
            for (slot, u) in p.germ_vertices.iter().enumerate() {
                if !cfg.is_truncated(u) {
                    continue;
                }
                let other = Germ { polygon: p.id.clone(), slot: 1 - slot };
                let v = cfg.germ_vertex(&other).expect("two-gon germ").clone();
                if cfg.is_truncated(&v) {
                    continue; // the special case, handled at compile()
                }
                let mut path = self.cycle_power_from(&other);
                path.push(path[0]);
                rels.push(Relation::Truncated(path));
            }
        }
        // Commutations: chain the cycle powers over each polygon's germs at
        // non-truncated vertices, in slot order.
        for p in cfg.polygons() {
            let eligible: Vec<Germ> = (0..p.size())
                .map(|slot| Germ { polygon: p.id.clone(), slot })
                .filter(|g| !cfg.is_truncated(cfg.germ_vertex(g).expect("germ")))
                .collect();
            for pair in eligible.windows(2) {
                rels.push(Relation::Commutation(
                    self.cycle_power_from(&pair[0]),
                    self.cycle_power_from(&pair[1]),
                ));
            }
        }
        // Zero pairs: composable but not consecutive inside a vertex cycle.
        for (a, arr) in self.arrows.iter().enumerate() {
            for (b, brr) in self.arrows.iter().enumerate() {
                if arr.target == brr.source && brr.source_germ != arr.target_germ {
                    rels.push(Relation::Zero(a, b));
                }
            }
        }
        rels
    }

    /// Full cycle power `(𝔠_{v,α})^{𝔢_v}` starting with the arrow whose
    /// source germ is `g`.
    fn cycle_power_from(&self, g: &Germ) -> Vec<usize> {
        let v = self.cfg.germ_vertex(g).expect("germ of the configuration");
        let e = self.cfg.multiplicity(v) as usize;
        let cycle = self.cycle_from_germ(g).expect("non-truncated vertex");
        let mut path = Vec::with_capacity(cycle.len() * e);
        for _ in 0..e {
            path.extend_from_slice(&cycle);
        }
        path
    }

    pub fn config(&self) -> &BrauerConfiguration {
        &self.cfg
    }

    pub fn vertices(&self) -> &[PolygonId] {
        &self.vertices
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, idx: usize) -> &Arrow {
        &self.arrows[idx]
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    pub fn special_loop_case(&self) -> bool {
        self.special_loop_case
    }

    pub fn arrow_index(&self, id: &str) -> Result<usize> {
        self.by_id
            .get(id)
            .copied()
            .ok_or_else(|| Error::UnknownArrow(id.to_string()))
    }

    /// Translate a list of arrow ids into an index path.
    pub fn path(&self, ids: &[&str]) -> Result<Vec<usize>> {
        ids.iter().map(|id| self.arrow_index(id)).collect()
    }

    pub fn path_ids(&self, path: &[usize]) -> Vec<String> {
        path.iter().map(|&i| self.arrows[i].id.clone()).collect()
    }

    /// Arrow whose source germ is `g`, if `g` sits at a non-truncated vertex.
    pub fn arrow_from_germ(&self, g: &Germ) -> Result<usize> {
        self.by_source_germ
            .get(g)
            .copied()
            .ok_or_else(|| Error::BadGerm(format!("no arrow leaves germ {g}")))
    }

    /// Arrow whose target germ is `g`.
    pub fn arrow_into_germ(&self, g: &Germ) -> Result<usize> {
        let a = self.arrow_from_germ(g)?;
        // The cycle is a bijection on its arrows, so invert by scanning.
        let v = &self.arrows[a].vertex;
        let cycle = &self.cycles[v];
        cycle
            .iter()
            .copied()
            .find(|&b| self.next_in_cycle[b] == a)
            .ok_or_else(|| Error::BadGerm(format!("no arrow enters germ {g}")))
    }

    pub fn next_in_cycle(&self, arrow: usize) -> usize {
        self.next_in_cycle[arrow]
    }

    /// The cycle at a non-truncated vertex, starting from its canonical germ.
    pub fn cycle_at(&self, v: &VertexId) -> Result<&[usize]> {
        self.cycles
            .get(v)
            .map(Vec::as_slice)
            .ok_or_else(|| Error::Precondition(format!("vertex `{v}` is truncated or unknown")))
    }

    /// The cycle `𝔠_{v,α}` rotated to start with the arrow of source germ
    /// `start`.
    pub fn cycle_from_germ(&self, start: &Germ) -> Result<Vec<usize>> {
        let first = self.arrow_from_germ(start)?;
        let v = &self.arrows[first].vertex;
        let cycle = &self.cycles[v];
        let pos = cycle.iter().position(|&a| a == first).expect("arrow in its cycle");
        Ok((0..cycle.len()).map(|i| cycle[(pos + i) % cycle.len()]).collect())
    }

    /// Longest nonzero run inside the cycle at `v`: the full cycle power.
    pub fn nonzero_run_bound(&self, v: &VertexId) -> usize {
        if self.special_loop_case {
            return 1;
        }
        self.cfg.multiplicity(v) as usize * self.cfg.valency(v)
    }

    /// Longest run a string may use at `v`: strictly below the socle.
    pub fn string_run_bound(&self, v: &VertexId) -> usize {
        if self.special_loop_case {
            return 1;
        }
        self.nonzero_run_bound(v).saturating_sub(1)
    }

    /// Check composability; returns the offending position otherwise.
    pub fn check_composable(&self, path: &[usize]) -> Result<()> {
        for (i, pair) in path.windows(2).enumerate() {
            if self.arrows[pair[0]].target != self.arrows[pair[1]].source {
                return Err(Error::NotComposable(i));
            }
        }
        Ok(())
    }

    /// Is the path nonzero modulo the relation ideal? Nonzero paths are
    /// exactly the consecutive runs of a single vertex cycle, up to the full
    /// cycle power; one step further always dies.
    pub fn is_path_nonzero(&self, path: &[usize]) -> Result<bool> {
        self.check_composable(path)?;
        if path.is_empty() {
            return Ok(true);
        }
        for pair in path.windows(2) {
            if self.next_in_cycle[pair[0]] != pair[1]
                || self.arrows[pair[1]].source_germ != self.arrows[pair[0]].target_germ
            {
                return Ok(false);
            }
        }
        let v = &self.arrows[path[0]].vertex;
        Ok(path.len() <= self.nonzero_run_bound(v))
    }

    /// Basis of the right projective `ε_x · A`: the stationary path, one
    /// strand per germ of `x` at a non-truncated vertex (all proper initial
    /// runs of the full cycle power), and a single socle class shared by all
    /// full cycle powers.
    pub fn projective_basis(&self, x: &PolygonId) -> Result<ProjectiveBasis> {
        let p = self.cfg.polygon(x)?;
        if self.special_loop_case {
            return Ok(ProjectiveBasis {
                polygon: x.clone(),
                strands: Vec::new(),
                socle: vec![0],
            });
        }
        let mut strands = Vec::new();
        let mut socle = None;
        for slot in 0..p.size() {
            let g = Germ { polygon: x.clone(), slot };
            let v = self.cfg.germ_vertex(&g)?.clone();
            if self.cfg.is_truncated(&v) {
                continue;
            }
            let full = self.cycle_power_from(&g);
            let proper: Vec<Vec<usize>> =
                (1..full.len()).map(|n| full[..n].to_vec()).collect();
            if socle.is_none() {
                socle = Some(full);
            }
            strands.push((g, proper));
        }
        let socle = socle.ok_or_else(|| {
            Error::Precondition(format!("polygon `{x}` has no non-truncated germ"))
        })?;
        Ok(ProjectiveBasis { polygon: x.clone(), strands, socle })
    }

    /// Σ of the projective dimensions: the dimension of the algebra.
    pub fn algebra_dim(&self) -> usize {
        self.vertices
            .iter()
            .map(|x| self.projective_basis(x).expect("compiled polygon").dim())
            .sum()
    }

    /// Human-readable path like `v1#0·v1#1`.
    pub fn path_display(&self, path: &[usize]) -> String {
        if path.is_empty() {
            return "ε".to_string();
        }
        path.iter()
            .map(|&i| self.arrows[i].id.as_str())
            .collect::<Vec<_>>()
            .join("·")
    }

    pub fn relation_display(&self, rel: &Relation) -> String {
        match rel {
            Relation::Truncated(p) => self.path_display(p),
            Relation::Commutation(l, r) => {
                format!("{} - {}", self.path_display(l), self.path_display(r))
            }
            Relation::Zero(a, b) => self.path_display(&[*a, *b]),
        }
    }
}

/// Basis data for one projective.
#[derive(Clone, Debug)]
pub struct ProjectiveBasis {
    pub polygon: PolygonId,
    /// Germ → proper initial runs of its full cycle power, by length.
    pub strands: Vec<(Germ, Vec<Vec<usize>>)>,
    /// One representative of the common socle class.
    pub socle: Vec<usize>,
}

impl ProjectiveBasis {
    /// Stationary + strand paths + socle.
    pub fn dim(&self) -> usize {
        2 + self.strands.iter().map(|(_, s)| s.len()).sum::<usize>()
    }
}

/// Serialized presentation.
#[derive(Serialize)]
pub struct PresentationDoc {
    pub special_loop_case: bool,
    pub vertices: Vec<String>,
    pub arrows: Vec<ArrowDoc>,
    pub relations: Vec<RelationDoc>,
}

#[derive(Serialize)]
pub struct ArrowDoc {
    pub id: String,
    pub source: String,
    pub target: String,
    pub vertex: String,
    pub source_germ: String,
    pub target_germ: String,
}

#[derive(Serialize)]
pub struct RelationDoc {
    pub kind: &'static str,
    pub lhs: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rhs: Option<Vec<String>>,
}

pub fn to_doc(pres: &QuiverPresentation) -> PresentationDoc {
    let cfg = pres.config();
    let arrows = pres
        .arrows()
        .iter()
        .map(|a| ArrowDoc {
            id: a.id.clone(),
            source: a.source.0.clone(),
            target: a.target.0.clone(),
            vertex: a.vertex.0.clone(),
            source_germ: cfg.germ_label(&a.source_germ),
            target_germ: cfg.germ_label(&a.target_germ),
        })
        .collect();
    let relations = pres
        .relations()
        .iter()
        .map(|r| match r {
            Relation::Truncated(p) => RelationDoc {
                kind: "truncated",
                lhs: pres.path_ids(p),
                rhs: None,
            },
            Relation::Commutation(l, rr) => RelationDoc {
                kind: "commutation",
                lhs: pres.path_ids(l),
                rhs: Some(pres.path_ids(rr)),
            },
            Relation::Zero(a, b) => RelationDoc {
                kind: "zero",
                lhs: pres.path_ids(&[*a, *b]),
                rhs: None,
            },
        })
        .collect();
    PresentationDoc {
        special_loop_case: pres.special_loop_case(),
        vertices: pres.vertices().iter().map(|p| p.0.clone()).collect(),
        arrows,
        relations,
    }
}

pub fn to_json(pres: &QuiverPresentation) -> String {
    serde_json::to_string_pretty(&to_doc(pres)).expect("presentation serializes")
}

/// Graphviz rendering of the quiver.
pub fn to_dot(pres: &QuiverPresentation) -> String {
    let mut out = String::from("digraph quiver {\n");
    for p in pres.vertices() {
        out.push_str(&format!("  \"{p}\";\n"));
    }
    for a in pres.arrows() {
        out.push_str(&format!(
            "  \"{}\" -> \"{}\" [label=\"{}\"];\n",
            a.source, a.target, a.id
        ));
    }
    out.push_str("}\n");
    out
}

impl fmt::Display for QuiverPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "quiver: {} vertices, {} arrows, {} relations",
            self.vertices.len(),
            self.arrows.len(),
            self.relations.len()
        )?;
        for a in &self.arrows {
            writeln!(f, "  {}: {} -> {}  ({} at {})", a.id, a.source, a.target,
                self.cfg.germ_label(&a.source_germ), a.vertex)?;
        }
        for r in &self.relations {
            writeln!(f, "  rel: {}", self.relation_display(r))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin::builtin;
    use std::collections::BTreeSet;

    /// Canonical comparable form of a relation, in arrow ids with the
    /// commutation sides sorted.
    fn canon(pres: &QuiverPresentation, r: &Relation) -> (u8, Vec<String>, Vec<String>) {
        match r {
            Relation::Truncated(p) => (0, pres.path_ids(p), Vec::new()),
            Relation::Commutation(l, rr) => {
                let (mut a, mut b) = (pres.path_ids(l), pres.path_ids(rr));
                if b < a {
                    std::mem::swap(&mut a, &mut b);
                }
                (1, a, b)
            }
            Relation::Zero(a, b) => (2, pres.path_ids(&[*a, *b]), Vec::new()),
        }
    }

    fn ids(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn figure_compilation_matches_the_published_presentation() {
        let cfg = builtin("fig1").unwrap();
        let pres = compile(&cfg).unwrap();
        assert_eq!(pres.vertices().len(), 4);
        assert_eq!(pres.arrows().len(), 9);
        assert_eq!(pres.relations().len(), 22);
        assert!(!pres.special_loop_case());

        let truncated = pres
            .relations()
            .iter()
            .filter(|r| matches!(r, Relation::Truncated(_)))
            .count();
        let commutations = pres
            .relations()
            .iter()
            .filter(|r| matches!(r, Relation::Commutation(..)))
            .count();
        let zeros = pres
            .relations()
            .iter()
            .filter(|r| matches!(r, Relation::Zero(..)))
            .count();
        assert_eq!((truncated, commutations, zeros), (1, 5, 16));

        // Arrow dictionary under the canonical rotations:
        //   a1 = v1#0 (x→y), a2 = v1#1 (y→y), a3 = v1#2 (y→x),
        //   b1 = v2#0 (x→z), b2 = v2#1 (z→x), d = v3#0 (z→z),
        //   g1 = v4#2 (x→w), g2 = v4#0 (w→x), g3 = v4#1 (x→x).
        let got: BTreeSet<_> =
            pres.relations().iter().map(|r| canon(&pres, r)).collect();
        let mut want = BTreeSet::new();
        // Truncated edge relation g2 g3 g1 g2.
        want.insert((0u8, ids(&["v4#0", "v4#1", "v4#2", "v4#0"]), vec![]));
        // Five commutations.
        let comm = |a: &[&str], b: &[&str]| {
            let (mut a, mut b) = (ids(a), ids(b));
            if b < a {
                std::mem::swap(&mut a, &mut b);
            }
            (1u8, a, b)
        };
        want.insert(comm(&["v1#0", "v1#1", "v1#2"], &["v2#0", "v2#1"]));
        want.insert(comm(&["v2#0", "v2#1"], &["v4#2", "v4#0", "v4#1"]));
        want.insert(comm(&["v4#2", "v4#0", "v4#1"], &["v4#1", "v4#2", "v4#0"]));
        want.insert(comm(&["v1#1", "v1#2", "v1#0"], &["v1#2", "v1#0", "v1#1"]));
        want.insert(comm(&["v2#1", "v2#0"], &["v3#0", "v3#0"]));
        // Sixteen zero pairs.
        for pair in [
            ["v1#2", "v2#0"], ["v1#2", "v4#2"], ["v1#2", "v4#1"],
            ["v2#1", "v1#0"], ["v2#1", "v4#2"], ["v2#1", "v4#1"],
            ["v4#0", "v1#0"], ["v4#0", "v2#0"], ["v4#0", "v4#2"],
            ["v4#1", "v1#0"], ["v4#1", "v2#0"], ["v4#1", "v4#1"],
            ["v1#1", "v1#1"], ["v1#0", "v1#2"], ["v2#0", "v3#0"],
            ["v3#0", "v2#1"],
        ] {
            want.insert((2u8, ids(&pair), vec![]));
        }
        assert_eq!(got, want);
    }

    #[test]
    fn single_edge_collapses_to_the_loop_algebra() {
        let cfg = builtin("loopcase").unwrap();
        let pres = compile(&cfg).unwrap();
        assert!(pres.special_loop_case());
        assert_eq!(pres.vertices().len(), 1);
        assert_eq!(pres.arrows().len(), 1);
        assert_eq!(pres.relations(), &[Relation::Truncated(vec![0, 0])]);
        assert!(pres.is_path_nonzero(&[0]).unwrap());
        assert!(!pres.is_path_nonzero(&[0, 0]).unwrap());
        let basis = pres.projective_basis(&PolygonId::from("e")).unwrap();
        assert_eq!(basis.dim(), 2);
        assert_eq!(pres.algebra_dim(), 2);
    }

    #[test]
    fn triangle_with_three_legs() {
        let cfg = builtin("star_1_1_1").unwrap();
        let pres = compile(&cfg).unwrap();
        assert_eq!(pres.vertices().len(), 4);
        assert_eq!(pres.arrows().len(), 6);
        let truncated = pres
            .relations()
            .iter()
            .filter(|r| matches!(r, Relation::Truncated(_)))
            .count();
        let commutations = pres
            .relations()
            .iter()
            .filter(|r| matches!(r, Relation::Commutation(..)))
            .count();
        let zeros = pres
            .relations()
            .iter()
            .filter(|r| matches!(r, Relation::Zero(..)))
            .count();
        assert_eq!((truncated, commutations, zeros), (3, 2, 6));
        assert_eq!(pres.relations().len(), 11);
        assert_eq!(pres.algebra_dim(), 14);
    }

    #[test]
    fn cycle_extraction_and_rotation() {
        let cfg = builtin("fig1").unwrap();
        let pres = compile(&cfg).unwrap();
        // Cycle at v4 from the first x-germ there: g1 g2 g3.
        let cycle = pres.cycle_from_germ(&Germ::new("x", 2)).unwrap();
        assert_eq!(pres.path_ids(&cycle), ids(&["v4#2", "v4#0", "v4#1"]));
        // Rotating the start germ rotates the cycle.
        let rotated = pres.cycle_from_germ(&Germ::new("x", 3)).unwrap();
        assert_eq!(pres.path_ids(&rotated), ids(&["v4#1", "v4#2", "v4#0"]));
        // Loop vertex.
        let loop_cycle = pres.cycle_from_germ(&Germ::new("z", 1)).unwrap();
        assert_eq!(pres.path_ids(&loop_cycle), ids(&["v3#0"]));
        // Truncated vertex has no cycle.
        assert!(pres.cycle_at(&VertexId::from("v5")).is_err());
    }

    #[test]
    fn nonzero_paths_follow_the_run_bounds() {
        let cfg = builtin("fig1").unwrap();
        let pres = compile(&cfg).unwrap();
        let p = |ids: &[&str]| pres.path(ids).unwrap();
        // Listed zero relation.
        assert!(!pres.is_path_nonzero(&p(&["v1#0", "v1#2"])).unwrap());
        // Loop with multiplicity two: up to the square survives.
        assert!(pres.is_path_nonzero(&p(&["v3#0"])).unwrap());
        assert!(pres.is_path_nonzero(&p(&["v3#0", "v3#0"])).unwrap());
        assert!(!pres.is_path_nonzero(&p(&["v3#0", "v3#0", "v3#0"])).unwrap());
        // Stationary path.
        assert!(pres.is_path_nonzero(&[]).unwrap());
        // Non-composable input is an error, not `false`.
        let bad = p(&["v1#0", "v2#1"]);
        assert!(matches!(pres.is_path_nonzero(&bad), Err(Error::NotComposable(0))));
        // Full cycle power at a plain vertex is nonzero; one more step dies.
        let full = p(&["v1#0", "v1#1", "v1#2"]);
        assert!(pres.is_path_nonzero(&full).unwrap());
        let over = p(&["v1#0", "v1#1", "v1#2", "v1#0"]);
        assert!(!pres.is_path_nonzero(&over).unwrap());
    }

    #[test]
    fn projective_dimensions_for_the_figure() {
        let cfg = builtin("fig1").unwrap();
        let pres = compile(&cfg).unwrap();
        let bx = pres.projective_basis(&PolygonId::from("x")).unwrap();
        assert_eq!(bx.dim(), 9);
        let lens: Vec<usize> = bx.strands.iter().map(|(_, s)| s.len()).collect();
        assert_eq!(lens, vec![2, 1, 2, 2]);
        let bw = pres.projective_basis(&PolygonId::from("w")).unwrap();
        assert_eq!(bw.dim(), 4);
        assert_eq!(bw.strands.len(), 1);
        assert_eq!(pres.path_ids(&bw.socle), ids(&["v4#0", "v4#1", "v4#2"]));
        // y: two germs at v1, strands of length 2 each → dim 6.
        let by = pres.projective_basis(&PolygonId::from("y")).unwrap();
        assert_eq!(by.dim(), 6);
        // z: one proper path per side (the full powers merge into one socle),
        // so 2 + 1 + 1 even though v3 carries multiplicity 2.
        let bz = pres.projective_basis(&PolygonId::from("z")).unwrap();
        assert_eq!(bz.dim(), 4);
        let lens: Vec<usize> = bz.strands.iter().map(|(_, s)| s.len()).collect();
        assert_eq!(lens, vec![1, 1]);
        // Green–Schroll dimension count: 2·#polygons + Σ val(v)·(e(v)·val(v) − 1).
        assert_eq!(pres.algebra_dim(), 2 * 4 + 6 + 2 + 1 + 6);
    }

    #[test]
    fn zero_pairs_partition_the_composable_pairs() {
        for name in ["fig1", "star_1_1_1", "caseiv", "indfunc"] {
            let cfg = builtin(name).unwrap();
            let pres = compile(&cfg).unwrap();
            let zero: BTreeSet<(usize, usize)> = pres
                .relations()
                .iter()
                .filter_map(|r| match r {
                    Relation::Zero(a, b) => Some((*a, *b)),
                    _ => None,
                })
                .collect();
            for a in 0..pres.arrows().len() {
                for b in 0..pres.arrows().len() {
                    let composable = pres.arrow(a).target == pres.arrow(b).source;
                    let consecutive = composable
                        && pres.arrow(b).source_germ == pres.arrow(a).target_germ;
                    if consecutive {
                        assert!(pres.is_path_nonzero(&[a, b]).is_ok());
                        assert!(!zero.contains(&(a, b)));
                    } else if composable {
                        assert!(zero.contains(&(a, b)));
                    }
                }
            }
        }
    }

    #[test]
    fn compilation_is_deterministic() {
        let cfg = builtin("fig1").unwrap();
        let a = format!("{}", compile(&cfg).unwrap());
        let b = format!("{}", compile(&cfg).unwrap());
        assert_eq!(a, b);
    }

    #[test]
    fn invalid_configurations_are_rejected() {
        let cfg = crate::config::ConfigBuilder::new()
            .vertex("a", 1)
            .vertex("b", 1)
            .vertex("c", 1)
            .polygon("t", &["a", "b", "c"])
            .build()
            .unwrap();
        assert!(matches!(compile(&cfg), Err(Error::Invalid(_))));
    }
}
