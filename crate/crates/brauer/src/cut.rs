//! Admissible cuts: delete one arrow from every vertex cycle of a
//! multiplicity-free presentation. The result is an (almost) gentle algebra
//! whose trivial extension recovers the original one, which pins its
//! dimension to exactly half.
//!
//! Everything here works on arrow indices of the parent presentation, so a
//! cut presentation can always be traced back to the configuration it came
//! from.

use std::collections::{BTreeMap, BTreeSet};

use crate::config::VertexId;
use crate::quiver::{ArrowDoc, PresentationDoc, QuiverPresentation, Relation, RelationDoc};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AdmissibleCut {
    arrows: BTreeSet<usize>,
}

impl AdmissibleCut {
    /// Validate a choice of cut arrows: the configuration must be
    /// multiplicity-free, and the set must pick exactly one arrow from each
    /// vertex cycle and nothing else.
    pub fn new(
        pres: &QuiverPresentation,
        arrows: impl IntoIterator<Item = usize>,
    ) -> Result<Self> {
        let cfg = pres.config();
        for (v, &m) in cfg.vertices() {
            if m > 1 {
                return Err(Error::Precondition(format!(
                    "admissible cuts need a multiplicity-free configuration; vertex `{v}` has multiplicity {m}"
                )));
            }
        }
        let set: BTreeSet<usize> = arrows.into_iter().collect();
        if let Some(&bad) = set.iter().find(|&&a| a >= pres.arrows().len()) {
            return Err(Error::UnknownArrow(format!("#{bad}")));
        }
        let mut consumed = 0usize;
        for (v, _) in cfg.vertices() {
            if cfg.is_truncated(v) {
                continue;
            }
            let cycle = pres.cycle_at(v)?;
            let picked = cycle.iter().filter(|a| set.contains(a)).count();
            match picked {
                1 => consumed += 1,
                0 => {
                    return Err(Error::Precondition(format!(
                        "cut misses the cycle at `{v}`"
                    )))
                }
                n => {
                    return Err(Error::Precondition(format!(
                        "cut picks {n} arrows from the cycle at `{v}`"
                    )))
                }
            }
        }
        if consumed != set.len() {
            let stray = set
                .iter()
                .find(|&&a| {
                    let v = &pres.arrow(a).vertex;
                    cfg.is_truncated(v)
                })
                .copied()
                .unwrap_or(0);
            return Err(Error::Precondition(format!(
                "arrow `{}` belongs to no vertex cycle",
                pres.arrow(stray).id
            )));
        }
        Ok(AdmissibleCut { arrows: set })
    }

    /// Parse the command-line form `v=arrow,v=arrow,...`.
    pub fn parse(pres: &QuiverPresentation, spec: &str) -> Result<Self> {
        let mut arrows = Vec::new();
        for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (v, id) = part
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("cut entry `{part}` is not `vertex=arrow`")))?;
            let idx = pres.arrow_index(id.trim())?;
            let owner = &pres.arrow(idx).vertex;
            if owner != &VertexId::from(v.trim()) {
                return Err(Error::Parse(format!(
                    "arrow `{}` sits in the cycle at `{owner}`, not `{}`",
                    id.trim(),
                    v.trim()
                )));
            }
            arrows.push(idx);
        }
        Self::new(pres, arrows)
    }

    pub fn arrows(&self) -> &BTreeSet<usize> {
        &self.arrows
    }

    pub fn contains(&self, arrow: usize) -> bool {
        self.arrows.contains(&arrow)
    }

    pub fn display(&self, pres: &QuiverPresentation) -> String {
        self.arrows
            .iter()
            .map(|&a| {
                let arrow = pres.arrow(a);
                format!("{}={}", arrow.vertex, arrow.id)
            })
            .collect::<Vec<_>>()
            .join(",")
    }
}

/// The quiver left after deleting the cut arrows, with the relations of the
/// parent that survive inside it.
#[derive(Clone, Debug)]
pub struct CutPresentation {
    pres: QuiverPresentation,
    cut: AdmissibleCut,
    /// Surviving arrows, as indices into the parent presentation.
    arrows: Vec<usize>,
    /// Surviving relations, all monomial paths in parent indices.
    relations: Vec<Vec<usize>>,
    /// The length-2 relations as a pair set, for fast path pruning.
    forbidden: BTreeSet<(usize, usize)>,
}

pub fn cut(pres: &QuiverPresentation, cut: &AdmissibleCut) -> Result<CutPresentation> {
    // re-validate against this presentation
    let cut = AdmissibleCut::new(pres, cut.arrows.iter().copied())?;
    let arrows: Vec<usize> =
        (0..pres.arrows().len()).filter(|a| !cut.contains(*a)).collect();
    let mut relations = Vec::new();
    for rel in pres.relations() {
        let survivor = match rel {
            Relation::Truncated(p) => (!p.iter().any(|a| cut.contains(*a))).then(|| p.clone()),
            Relation::Commutation(l, r) => {
                // Each side is a full cycle power, so in the multiplicity-free
                // setting each side holds its cycle's cut arrow; a side with
                // the other side gone becomes a monomial.
                match (
                    l.iter().any(|a| cut.contains(*a)),
                    r.iter().any(|a| cut.contains(*a)),
                ) {
                    (true, true) => None,
                    (true, false) => Some(r.clone()),
                    (false, true) => Some(l.clone()),
                    (false, false) => {
                        return Err(Error::Shape(
                            "commutation relation untouched by an admissible cut".into(),
                        ))
                    }
                }
            }
            Relation::Zero(a, b) => {
                (!cut.contains(*a) && !cut.contains(*b)).then(|| vec![*a, *b])
            }
        };
        relations.extend(survivor);
    }
    let forbidden = relations
        .iter()
        .filter(|p| p.len() == 2)
        .map(|p| (p[0], p[1]))
        .collect();
    Ok(CutPresentation { pres: pres.clone(), cut, arrows, relations, forbidden })
}

impl CutPresentation {
    pub fn parent(&self) -> &QuiverPresentation {
        &self.pres
    }

    pub fn cut(&self) -> &AdmissibleCut {
        &self.cut
    }

    pub fn arrows(&self) -> &[usize] {
        &self.arrows
    }

    pub fn relations(&self) -> &[Vec<usize>] {
        &self.relations
    }

    /// A composable pair of surviving arrows that is not killed by a
    /// surviving relation.
    fn pair_allowed(&self, a: usize, b: usize) -> bool {
        self.pres.arrow(a).target == self.pres.arrow(b).source
            && !self.forbidden.contains(&(a, b))
    }

    fn path_allowed(&self, path: &[usize]) -> bool {
        for w in path.windows(2) {
            if !self.pair_allowed(w[0], w[1]) {
                return false;
            }
        }
        // longer monomials (none arise from the standard relation shapes,
        // but the survival rule permits them)
        for rel in &self.relations {
            if rel.len() > 2 && path.windows(rel.len()).any(|w| w == rel.as_slice()) {
                return false;
            }
        }
        true
    }

    /// Dimension by path enumeration, capped by the parent dimension; a
    /// blow-up past the cap means the surviving ideal is not admissible.
    pub fn algebra_dim(&self) -> Result<usize> {
        let cap = self.pres.algebra_dim();
        let mut count = self.pres.vertices().len();
        let mut frontier: Vec<Vec<usize>> = self.arrows.iter().map(|&a| vec![a]).collect();
        while let Some(path) = frontier.pop() {
            count += 1;
            if count > cap {
                return Err(Error::Precondition(
                    "path enumeration passed the parent dimension; the cut ideal is not admissible"
                        .into(),
                ));
            }
            for &b in &self.arrows {
                let mut next = path.clone();
                next.push(b);
                if self.pair_allowed(*path.last().expect("nonempty"), b)
                    && self.path_allowed(&next)
                {
                    frontier.push(next);
                }
            }
        }
        Ok(count)
    }

    pub fn display(&self) -> String {
        use std::fmt::Write;
        let mut out = String::new();
        writeln!(out, "cut: {}", self.cut.display(&self.pres)).expect("string write");
        for p in self.pres.vertices() {
            writeln!(out, "  vertex {p}").expect("string write");
        }
        for &a in &self.arrows {
            let arrow = self.pres.arrow(a);
            writeln!(out, "  {}: {} -> {}", arrow.id, arrow.source, arrow.target)
                .expect("string write");
        }
        for rel in &self.relations {
            writeln!(out, "  rel: {}", self.pres.path_display(rel)).expect("string write");
        }
        out
    }
}

/// Export in the compiled-presentation document shape.
pub fn to_doc(cp: &CutPresentation) -> PresentationDoc {
    let pres = cp.parent();
    let cfg = pres.config();
    let arrows = cp
        .arrows()
        .iter()
        .map(|&i| {
            let a = pres.arrow(i);
            ArrowDoc {
                id: a.id.clone(),
                source: a.source.0.clone(),
                target: a.target.0.clone(),
                vertex: a.vertex.0.clone(),
                source_germ: cfg.germ_label(&a.source_germ),
                target_germ: cfg.germ_label(&a.target_germ),
            }
        })
        .collect();
    let relations = cp
        .relations()
        .iter()
        .map(|p| RelationDoc {
            kind: if p.len() == 2 { "zero" } else { "truncated" },
            lhs: pres.path_ids(p),
            rhs: None,
        })
        .collect();
    PresentationDoc {
        special_loop_case: pres.special_loop_case(),
        vertices: pres.vertices().iter().map(|p| p.0.clone()).collect(),
        arrows,
        relations,
    }
}

/// Monomial quadratic-or-longer relations plus unique continuation on both
/// sides of every arrow.
pub fn is_almost_gentle(cp: &CutPresentation) -> bool {
    if cp.relations.iter().any(|p| p.len() < 2) {
        return false;
    }
    for &a in &cp.arrows {
        let onward = cp.arrows.iter().filter(|&&b| cp.pair_allowed(a, b)).count();
        let inward = cp.arrows.iter().filter(|&&b| cp.pair_allowed(b, a)).count();
        if onward > 1 || inward > 1 {
            return false;
        }
    }
    true
}

/// Almost gentle with quadratic relations, at most two arrows in and out of
/// every quiver vertex, and unique relation partners on both sides of every
/// arrow.
pub fn is_gentle(cp: &CutPresentation) -> bool {
    if !is_almost_gentle(cp) || cp.relations.iter().any(|p| p.len() != 2) {
        return false;
    }
    let pres = cp.parent();
    let mut in_deg: BTreeMap<&str, usize> = BTreeMap::new();
    let mut out_deg: BTreeMap<&str, usize> = BTreeMap::new();
    for &a in &cp.arrows {
        *out_deg.entry(pres.arrow(a).source.as_str()).or_default() += 1;
        *in_deg.entry(pres.arrow(a).target.as_str()).or_default() += 1;
    }
    if in_deg.values().chain(out_deg.values()).any(|&d| d > 2) {
        return false;
    }
    for &a in &cp.arrows {
        let killed_onward = cp.forbidden.iter().filter(|&&(x, _)| x == a).count();
        let killed_inward = cp.forbidden.iter().filter(|&&(_, y)| y == a).count();
        if killed_onward > 1 || killed_inward > 1 {
            return false;
        }
    }
    true
}

/// All admissible cuts in deterministic order (vertices ascending, cycle
/// positions counting up), truncated at `limit`.
pub fn enumerate_cuts(pres: &QuiverPresentation, limit: usize) -> Result<Vec<AdmissibleCut>> {
    let cfg = pres.config();
    for (v, &m) in cfg.vertices() {
        if m > 1 {
            return Err(Error::Precondition(format!(
                "admissible cuts need a multiplicity-free configuration; vertex `{v}` has multiplicity {m}"
            )));
        }
    }
    let cycles: Vec<&[usize]> = cfg
        .vertices()
        .iter()
        .filter(|(v, _)| !cfg.is_truncated(v))
        .map(|(v, _)| pres.cycle_at(v))
        .collect::<Result<_>>()?;
    let mut cuts = Vec::new();
    let mut choice = vec![0usize; cycles.len()];
    'all: loop {
        if cuts.len() >= limit {
            break;
        }
        let picked: Vec<usize> =
            choice.iter().zip(&cycles).map(|(&i, c)| c[i]).collect();
        cuts.push(AdmissibleCut::new(pres, picked)?);
        // odometer increment
        for i in (0..choice.len()).rev() {
            choice[i] += 1;
            if choice[i] < cycles[i].len() {
                continue 'all;
            }
            choice[i] = 0;
        }
        break;
    }
    Ok(cuts)
}
