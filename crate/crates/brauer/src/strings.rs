//! Strings and bands: reduced walks in the quiver that avoid the relations.
//!
//! A letter is an arrow or a formal inverse; words compose left to right.
//! Maximal equal-direction runs must stay inside one vertex cycle and are
//! bounded by e(v)·val(v) − 1: strings live modulo the socle, so the full
//! cycle power is reserved for the algebra itself. The bound degenerates to
//! 1 for the one-loop special case.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::Serialize;

use crate::config::{BrauerConfiguration, Germ, PolygonId, VertexId};
use crate::quiver::QuiverPresentation;
use crate::{Error, Result};

/// Dimension vector of a module: polygon → multiplicity.
pub type DimVector = BTreeMap<PolygonId, usize>;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize)]
pub struct Letter {
    pub arrow: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn direct(arrow: usize) -> Self {
        Letter { arrow, inverse: false }
    }

    pub fn formal_inverse(arrow: usize) -> Self {
        Letter { arrow, inverse: true }
    }

    pub fn opposite(self) -> Self {
        Letter { arrow: self.arrow, inverse: !self.inverse }
    }

    pub fn source<'a>(&self, pres: &'a QuiverPresentation) -> &'a PolygonId {
        let a = pres.arrow(self.arrow);
        if self.inverse { &a.target } else { &a.source }
    }

    pub fn target<'a>(&self, pres: &'a QuiverPresentation) -> &'a PolygonId {
        let a = pres.arrow(self.arrow);
        if self.inverse { &a.source } else { &a.target }
    }

    pub fn display(&self, pres: &QuiverPresentation) -> String {
        let id = &pres.arrow(self.arrow).id;
        if self.inverse { format!("{id}^-1") } else { id.clone() }
    }
}

fn check_letters(pres: &QuiverPresentation, letters: &[Letter]) -> Result<()> {
    for l in letters {
        if l.arrow >= pres.arrows().len() {
            return Err(Error::UnknownArrow(format!("#{}", l.arrow)));
        }
    }
    Ok(())
}

/// A (possibly trivial) string word. The base polygon carries the source of
/// the walk; it is redundant for nonempty words.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct StringWord {
    base: PolygonId,
    letters: Vec<Letter>,
}

impl StringWord {
    /// The zero string ε_x.
    pub fn trivial(x: PolygonId) -> Self {
        StringWord { base: x, letters: Vec::new() }
    }

    pub fn from_letters(pres: &QuiverPresentation, letters: Vec<Letter>) -> Result<Self> {
        check_letters(pres, &letters)?;
        let first = letters
            .first()
            .ok_or_else(|| Error::Shape("empty word: use StringWord::trivial".into()))?;
        let base = first.source(pres).clone();
        Ok(StringWord { base, letters })
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn source(&self) -> &PolygonId {
        &self.base
    }

    pub fn target(&self, pres: &QuiverPresentation) -> PolygonId {
        self.letters
            .last()
            .map(|l| l.target(pres).clone())
            .unwrap_or_else(|| self.base.clone())
    }

    pub fn inverse(&self, pres: &QuiverPresentation) -> StringWord {
        StringWord {
            base: self.target(pres),
            letters: self.letters.iter().rev().map(|l| l.opposite()).collect(),
        }
    }

    /// Deterministic representative of {w, w⁻¹}: least letter sequence wins,
    /// so single arrows stay direct.
    pub fn canonical(&self, pres: &QuiverPresentation) -> StringWord {
        let inv = self.inverse(pres);
        if (&inv.letters, &inv.base) < (&self.letters, &self.base) {
            inv
        } else {
            self.clone()
        }
    }

    pub fn display(&self, pres: &QuiverPresentation) -> String {
        if self.is_trivial() {
            return format!("e({})", self.base);
        }
        display_letters(pres, &self.letters)
    }
}

pub fn display_letters(pres: &QuiverPresentation, letters: &[Letter]) -> String {
    letters.iter().map(|l| l.display(pres)).collect::<Vec<_>>().join(" ")
}

/// Parse a letter list: arrow ids separated by spaces, commas or '·', with
/// `^-1` marking a formal inverse.
pub fn parse_letters(pres: &QuiverPresentation, text: &str) -> Result<Vec<Letter>> {
    let mut out = Vec::new();
    for tok in text.split(|c: char| c.is_whitespace() || c == ',' || c == '·') {
        if tok.is_empty() {
            continue;
        }
        let (id, inverse) = match tok.strip_suffix("^-1") {
            Some(rest) => (rest, true),
            None => (tok, false),
        };
        let arrow = pres.arrow_index(id)?;
        out.push(Letter { arrow, inverse });
    }
    Ok(out)
}

/// First reason `letters` fails to be a string, if any.
pub fn string_violation(pres: &QuiverPresentation, letters: &[Letter]) -> Option<String> {
    for pair in letters.windows(2) {
        let (a, b) = (pair[0], pair[1]);
        if a.target(pres) != b.source(pres) {
            return Some(format!(
                "{} does not compose with {}",
                a.display(pres),
                b.display(pres)
            ));
        }
        if b == a.opposite() {
            return Some(format!("{} immediately backtracks", b.display(pres)));
        }
    }
    let mut i = 0;
    while i < letters.len() {
        let mut j = i;
        while j + 1 < letters.len() && letters[j + 1].inverse == letters[i].inverse {
            j += 1;
        }
        // The direct form of an inverse run reverses the arrow order.
        let run: Vec<usize> = if letters[i].inverse {
            letters[i..=j].iter().rev().map(|l| l.arrow).collect()
        } else {
            letters[i..=j].iter().map(|l| l.arrow).collect()
        };
        if let Some(reason) = run_violation(pres, &run) {
            return Some(reason);
        }
        i = j + 1;
    }
    None
}

fn run_violation(pres: &QuiverPresentation, run: &[usize]) -> Option<String> {
    for pair in run.windows(2) {
        if pres.next_in_cycle(pair[0]) != pair[1]
            || pres.arrow(pair[1]).source_germ != pres.arrow(pair[0]).target_germ
        {
            return Some(format!(
                "{} then {} compose to zero",
                pres.arrow(pair[0]).id,
                pres.arrow(pair[1]).id
            ));
        }
    }
    let v = &pres.arrow(run[0]).vertex;
    let bound = pres.string_run_bound(v);
    if run.len() > bound {
        return Some(format!(
            "run of length {} at vertex {v} exceeds the socle bound {bound}",
            run.len()
        ));
    }
    None
}

/// Is the word a string: composable, reduced, and every maximal run a
/// nonzero non-socle path within one vertex cycle?
pub fn is_string(pres: &QuiverPresentation, w: &StringWord) -> Result<bool> {
    check_letters(pres, w.letters())?;
    if w.is_trivial() {
        pres.config().polygon(w.source())?;
        return Ok(true);
    }
    Ok(string_violation(pres, w.letters()).is_none())
}

/// A band in canonical form: the lexicographically least word among all
/// rotations of the band and of its inverse.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub struct Band {
    letters: Vec<Letter>,
}

impl Band {
    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn display(&self, pres: &QuiverPresentation) -> String {
        display_letters(pres, &self.letters)
    }
}

/// Validate a cyclic word as a band and return its canonical representative.
///
/// A band is a nonempty cyclic string all of whose powers are strings and
/// which is not a proper power. Checking the doubled word covers the
/// wrap-around run of every power, and mixed directions rule out unbounded
/// run growth.
pub fn canonical_band(pres: &QuiverPresentation, letters: &[Letter]) -> Result<Band> {
    check_letters(pres, letters)?;
    if letters.is_empty() {
        return Err(Error::NotABand("the empty word".into()));
    }
    let first = letters[0];
    let last = letters[letters.len() - 1];
    if last.target(pres) != first.source(pres) {
        return Err(Error::NotABand(format!(
            "not cyclic: ends at {} but starts at {}",
            last.target(pres),
            first.source(pres)
        )));
    }
    if letters.iter().all(|l| l.inverse) || letters.iter().all(|l| !l.inverse) {
        return Err(Error::NotABand(
            "one-directional cyclic word: its powers outgrow the socle bound".into(),
        ));
    }
    let n = letters.len();
    for d in 1..n {
        if n % d == 0 && (0..n).all(|i| letters[i] == letters[i % d]) {
            return Err(Error::NotABand(format!("proper power of a length-{d} word")));
        }
    }
    let doubled: Vec<Letter> = letters.iter().chain(letters).copied().collect();
    if let Some(reason) = string_violation(pres, &doubled) {
        return Err(Error::NotABand(reason));
    }
    Ok(Band { letters: band_canonical_letters(letters) })
}

fn band_canonical_letters(letters: &[Letter]) -> Vec<Letter> {
    let inv: Vec<Letter> = letters.iter().rev().map(|l| l.opposite()).collect();
    let mut best: Option<Vec<Letter>> = None;
    for word in [letters.to_vec(), inv] {
        for r in 0..word.len() {
            let rot: Vec<Letter> =
                word[r..].iter().chain(&word[..r]).copied().collect();
            if best.as_ref().map_or(true, |b| rot < *b) {
                best = Some(rot);
            }
        }
    }
    best.expect("nonempty word")
}

/// One crossing of a polygon: the germ it enters through and the germ it
/// leaves through (distinct slots; the same vertex only when self-folded).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PathStep {
    pub tail: Germ,
    pub head: Germ,
}

impl PathStep {
    pub fn new(tail: Germ, head: Germ) -> Self {
        PathStep { tail, head }
    }
}

/// A walk in the configuration, recorded germ by germ so that self-folded
/// polygons stay unambiguous.
#[derive(Clone, Debug)]
pub struct ConfigPath {
    steps: Vec<PathStep>,
}

impl ConfigPath {
    pub fn new(cfg: &BrauerConfiguration, steps: Vec<PathStep>) -> Result<Self> {
        if steps.is_empty() {
            return Err(Error::Precondition("a path needs at least one step".into()));
        }
        for s in &steps {
            if s.tail.polygon != s.head.polygon {
                return Err(Error::Precondition(format!(
                    "step mixes polygons {} and {}",
                    s.tail.polygon, s.head.polygon
                )));
            }
            if s.tail == s.head {
                return Err(Error::Precondition(format!(
                    "step must cross between two distinct germs of {}",
                    s.tail.polygon
                )));
            }
            cfg.germ_vertex(&s.tail)?;
            cfg.germ_vertex(&s.head)?;
        }
        for pair in steps.windows(2) {
            if cfg.germ_vertex(&pair[0].head)? != cfg.germ_vertex(&pair[1].tail)? {
                return Err(Error::Precondition(format!(
                    "steps {} and {} do not meet at a common vertex",
                    pair[0].head.polygon, pair[1].tail.polygon
                )));
            }
        }
        Ok(ConfigPath { steps })
    }

    pub fn steps(&self) -> &[PathStep] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn start(&self, cfg: &BrauerConfiguration) -> VertexId {
        cfg.germ_vertex(&self.steps[0].tail).expect("validated").clone()
    }

    pub fn end(&self, cfg: &BrauerConfiguration) -> VertexId {
        cfg.germ_vertex(&self.steps[self.steps.len() - 1].head)
            .expect("validated")
            .clone()
    }

    pub fn is_closed(&self, cfg: &BrauerConfiguration) -> bool {
        self.start(cfg) == self.end(cfg)
    }
}

/// One alternating segment: the direct arc of the vertex cycle from
/// `arrival` to `departure`, or the complementary arc inverted. Equal germs
/// take the full cycle and require multiplicity > 1.
fn segment(
    cfg: &BrauerConfiguration,
    pres: &QuiverPresentation,
    arrival: &Germ,
    departure: &Germ,
    direct: bool,
) -> Result<Vec<Letter>> {
    let v = cfg.germ_vertex(arrival)?;
    if cfg.germ_vertex(departure)? != v {
        return Err(Error::Precondition(format!(
            "germs {arrival} and {departure} sit at different vertices"
        )));
    }
    let cycle = pres.cycle_from_germ(arrival)?;
    let k = if arrival == departure {
        if cfg.multiplicity(v) <= 1 {
            return Err(Error::Precondition(format!(
                "path re-uses germ {arrival} at plain vertex {v}"
            )));
        }
        cycle.len()
    } else {
        1 + cycle
            .iter()
            .position(|&a| pres.arrow(a).target_germ == *departure)
            .ok_or_else(|| Error::BadGerm(format!("{departure} not in the cycle at {v}")))?
    };
    let (arc, rest) = cycle.split_at(k);
    let letters = if direct {
        arc.iter().map(|&a| Letter::direct(a)).collect()
    } else if arrival == departure {
        arc.iter().rev().map(|&a| Letter::formal_inverse(a)).collect()
    } else {
        rest.iter().rev().map(|&a| Letter::formal_inverse(a)).collect()
    };
    Ok(letters)
}

/// Turn a walk into its alternating string: one segment per interior vertex,
/// odd segments direct, even segments inverse. A single-step walk yields the
/// zero string at its polygon.
pub fn path_to_string(
    cfg: &BrauerConfiguration,
    pres: &QuiverPresentation,
    p: &ConfigPath,
) -> Result<StringWord> {
    let n = p.len();
    if n == 1 {
        return Ok(StringWord::trivial(p.steps[0].tail.polygon.clone()));
    }
    let mut letters = Vec::new();
    for i in 1..n {
        let arrival = &p.steps[i - 1].head;
        let departure = &p.steps[i].tail;
        letters.extend(segment(cfg, pres, arrival, departure, i % 2 == 1)?);
    }
    StringWord::from_letters(pres, letters)
}

/// Turn an even closed walk into a band: one segment per visited vertex,
/// including the wrap-around.
pub fn band_from_closed_walk(
    cfg: &BrauerConfiguration,
    pres: &QuiverPresentation,
    p: &ConfigPath,
) -> Result<Band> {
    let n = p.len();
    if !p.is_closed(cfg) {
        return Err(Error::Precondition("walk is not closed".into()));
    }
    if n % 2 != 0 {
        return Err(Error::Precondition(
            "closed walk has odd length; traverse it twice".into(),
        ));
    }
    let mut letters = Vec::new();
    for i in 1..=n {
        let arrival = &p.steps[i - 1].head;
        let departure = &p.steps[i % n].tail;
        letters.extend(segment(cfg, pres, arrival, departure, i % 2 == 1)?);
    }
    canonical_band(pres, &letters)
}

// ---------------------------------------------------------------------------
// Incidence-graph searches for the witness construction.

/// Vertices and polygons reachable from `start` without crossing `banned`.
struct Side {
    vertices: BTreeSet<VertexId>,
    polygons: BTreeSet<PolygonId>,
    germ_count: usize,
}

impl Side {
    fn explore(cfg: &BrauerConfiguration, start: &VertexId, banned: &PolygonId) -> Side {
        let mut vertices = BTreeSet::new();
        let mut polygons = BTreeSet::new();
        let mut queue = VecDeque::from([start.clone()]);
        vertices.insert(start.clone());
        while let Some(v) = queue.pop_front() {
            for g in cfg.ordering(&v) {
                if g.polygon == *banned {
                    continue;
                }
                polygons.insert(g.polygon.clone());
                let poly = cfg.polygon(&g.polygon).expect("validated");
                for u in poly.germ_vertices.iter() {
                    if vertices.insert(u.clone()) {
                        queue.push_back(u.clone());
                    }
                }
            }
        }
        let germ_count = polygons
            .iter()
            .map(|p| cfg.polygon(p).expect("validated").size())
            .sum();
        Side { vertices, polygons, germ_count }
    }

    fn multiplicity_vertex(&self, cfg: &BrauerConfiguration) -> Option<VertexId> {
        self.vertices.iter().find(|v| cfg.multiplicity(v) > 1).cloned()
    }

    /// Connected by construction, so a cycle exists iff the incidence
    /// multigraph has at least as many edges as nodes.
    fn has_cycle(&self) -> bool {
        self.germ_count >= self.vertices.len() + self.polygons.len()
    }

    fn qualifies(&self, cfg: &BrauerConfiguration) -> bool {
        self.multiplicity_vertex(cfg).is_some() || self.has_cycle()
    }
}

/// Germ-labelled BFS tree over the configuration, avoiding one polygon.
fn bfs_paths(
    cfg: &BrauerConfiguration,
    start: &VertexId,
    banned: Option<&PolygonId>,
) -> BTreeMap<VertexId, Vec<PathStep>> {
    let mut paths: BTreeMap<VertexId, Vec<PathStep>> = BTreeMap::new();
    paths.insert(start.clone(), Vec::new());
    let mut queue = VecDeque::from([start.clone()]);
    while let Some(v) = queue.pop_front() {
        let here = paths[&v].clone();
        for g in cfg.ordering(&v) {
            if banned == Some(&g.polygon) {
                continue;
            }
            let poly = cfg.polygon(&g.polygon).expect("validated");
            for (slot, u) in poly.germ_vertices.iter().enumerate() {
                let other = Germ::new(g.polygon.clone(), slot);
                if other == *g || paths.contains_key(u) {
                    continue;
                }
                let mut path = here.clone();
                path.push(PathStep::new(g.clone(), other));
                paths.insert(u.clone(), path);
                queue.push_back(u.clone());
            }
        }
    }
    paths
}

/// Shortest germ cycle through `v` (avoiding `banned`), as a closed walk of
/// steps starting and ending at `v`. `skip` germs at `v` may not serve as the
/// first or last germ of the cycle.
fn cycle_through(
    cfg: &BrauerConfiguration,
    v: &VertexId,
    banned: Option<&PolygonId>,
    skip: &BTreeSet<Germ>,
) -> Option<Vec<PathStep>> {
    let mut best: Option<Vec<PathStep>> = None;
    for g in cfg.ordering(v) {
        if banned == Some(&g.polygon) || skip.contains(g) {
            continue;
        }
        let poly = cfg.polygon(&g.polygon).expect("validated");
        for (slot, u) in poly.germ_vertices.iter().enumerate() {
            let other = Germ::new(g.polygon.clone(), slot);
            if other == *g {
                continue;
            }
            // First step v → u through g/other; find a way back to v that
            // avoids re-crossing the same polygon through the same germ pair.
            let candidate = if u == v {
                // A self-folded polygon at v closes a cycle of length one.
                Some(vec![PathStep::new(g.clone(), other.clone())])
            } else {
                shortest_return(cfg, u, v, banned, &g.polygon, skip).map(|mut back| {
                    let mut walk = vec![PathStep::new(g.clone(), other.clone())];
                    walk.append(&mut back);
                    walk
                })
            };
            if let Some(w) = candidate {
                if best.as_ref().map_or(true, |b| w.len() < b.len()) {
                    best = Some(w);
                }
            }
        }
    }
    best
}

/// Shortest germ path from `from` to `to` avoiding polygons `banned` and
/// `first` (the already-used cycle opener), with the final germ not in `skip`.
fn shortest_return(
    cfg: &BrauerConfiguration,
    from: &VertexId,
    to: &VertexId,
    banned: Option<&PolygonId>,
    first: &PolygonId,
    skip: &BTreeSet<Germ>,
) -> Option<Vec<PathStep>> {
    let mut paths: BTreeMap<VertexId, Vec<PathStep>> = BTreeMap::new();
    paths.insert(from.clone(), Vec::new());
    let mut queue = VecDeque::from([from.clone()]);
    while let Some(v) = queue.pop_front() {
        let here = paths[&v].clone();
        for g in cfg.ordering(&v) {
            if banned == Some(&g.polygon) || g.polygon == *first {
                continue;
            }
            let poly = cfg.polygon(&g.polygon).expect("validated");
            for (slot, u) in poly.germ_vertices.iter().enumerate() {
                let other = Germ::new(g.polygon.clone(), slot);
                if other == *g || paths.contains_key(u) {
                    continue;
                }
                if u == to && skip.contains(&other) {
                    continue;
                }
                let mut path = here.clone();
                path.push(PathStep::new(g.clone(), other));
                if u == to {
                    return Some(path);
                }
                paths.insert(u.clone(), path);
                queue.push_back(u.clone());
            }
        }
    }
    None
}

/// The anchored loop string at vertex `u` of `x`: a string whose first and
/// last letters are direct, leaving and re-entering the germ of `x` at `u`.
/// Exists when the side of `u` away from `x` carries a multiplicity vertex
/// or a cycle.
pub fn tri_string_loop(
    cfg: &BrauerConfiguration,
    pres: &QuiverPresentation,
    x: &PolygonId,
    u: &VertexId,
) -> Result<StringWord> {
    let poly = cfg.polygon(x)?;
    if poly.is_self_folded() {
        return Err(Error::Precondition(format!("{x} is self-folded")));
    }
    let germ_u = cfg
        .germs_of_polygon_at(x, u)?
        .into_iter()
        .next()
        .ok_or_else(|| Error::BadGerm(format!("{x} has no germ at {u}")))?;
    // Anchor the walk at some other vertex of x.
    let u_prime = poly
        .distinct_vertices()
        .into_iter()
        .find(|w| *w != u)
        .cloned()
        .ok_or_else(|| Error::Precondition(format!("{x} has no second vertex")))?;
    let germ_u_prime = cfg.germs_of_polygon_at(x, &u_prime)?[0].clone();

    if cfg.multiplicity(u) > 1 {
        let letters: Vec<Letter> =
            pres.cycle_from_germ(&germ_u)?.into_iter().map(Letter::direct).collect();
        return StringWord::from_letters(pres, letters);
    }

    let side = Side::explore(cfg, u, x);
    let reach = bfs_paths(cfg, u, Some(x));

    // Nearest multiplicity vertex wins; ties and absences fall through to the
    // nearest vertex that lies on a cycle.
    let mut candidates: Vec<(usize, usize, VertexId)> = Vec::new();
    for v in &side.vertices {
        if let Some(p) = reach.get(v) {
            if cfg.multiplicity(v) > 1 {
                candidates.push((p.len(), 0, v.clone()));
            }
        }
    }
    for v in &side.vertices {
        if let Some(p) = reach.get(v) {
            let last_germ: BTreeSet<Germ> =
                p.last().map(|s| [s.head.clone()].into()).unwrap_or_default();
            if cycle_through(cfg, v, Some(x), &last_germ).is_some() {
                candidates.push((p.len(), 1, v.clone()));
            }
        }
    }
    candidates.sort();

    for (_, kind, v) in candidates {
        let approach = reach[&v].clone();
        let mut steps = vec![PathStep::new(germ_u_prime.clone(), germ_u.clone())];
        steps.extend(approach.iter().cloned());
        if kind == 0 {
            // Out to the multiplicity vertex and straight back.
            steps.extend(
                approach.iter().rev().map(|s| PathStep::new(s.head.clone(), s.tail.clone())),
            );
        } else {
            let last_germ: BTreeSet<Germ> =
                approach.last().map(|s| [s.head.clone()].into()).unwrap_or_default();
            let Some(cycle) = cycle_through(cfg, &v, Some(x), &last_germ) else {
                continue;
            };
            let rounds = if cycle.len() % 2 == 0 { 1 } else { 2 };
            for _ in 0..rounds {
                steps.extend(cycle.iter().cloned());
            }
            steps.extend(
                approach.iter().rev().map(|s| PathStep::new(s.head.clone(), s.tail.clone())),
            );
        }
        steps.push(PathStep::new(germ_u.clone(), germ_u_prime.clone()));
        let path = ConfigPath::new(cfg, steps)?;
        match path_to_string(cfg, pres, &path) {
            Ok(w) => {
                debug_assert!(matches!(is_string(pres, &w), Ok(true)));
                return Ok(w);
            }
            Err(_) => continue,
        }
    }
    Err(Error::Precondition(format!(
        "the side of {x} at {u} carries neither a multiplicity vertex nor a usable cycle"
    )))
}

/// Construct a band witnessing wildness around the polygon `x`:
/// self-folded polygons wrap their fold, polygons on a cycle wrap the cycle,
/// and otherwise two disjoint qualifying sides are joined through `x`.
pub fn witness_band(
    cfg: &BrauerConfiguration,
    pres: &QuiverPresentation,
    x: &PolygonId,
) -> Result<Band> {
    let poly = cfg.polygon(x)?;

    // Clause 1: self-folded.
    if poly.is_self_folded() {
        let (_, s1, s2) = first_fold(cfg, x);
        let step = PathStep::new(Germ::new(x.clone(), s1), Germ::new(x.clone(), s2));
        let walk = ConfigPath::new(cfg, vec![step.clone(), step])?;
        return band_from_closed_walk(cfg, pres, &walk);
    }

    // Clause 2: x lies on a simple cycle.
    if let Some(walk) = cycle_walk_through_polygon(cfg, x) {
        let steps = if walk.len() % 2 == 0 {
            walk
        } else {
            let mut doubled = walk.clone();
            doubled.extend(walk);
            doubled
        };
        let path = ConfigPath::new(cfg, steps)?;
        if let Ok(band) = band_from_closed_walk(cfg, pres, &path) {
            return Ok(band);
        }
    }

    // Clause 3: two disjoint qualifying sides.
    let mut qualifying: Vec<(VertexId, Side)> = Vec::new();
    for v in poly.distinct_vertices() {
        let side = Side::explore(cfg, v, x);
        if side.qualifies(cfg) && !qualifying.iter().any(|(_, s)| s.vertices.contains(v)) {
            qualifying.push((v.clone(), side));
        }
    }
    if qualifying.len() >= 2 {
        let (u1, _) = &qualifying[0];
        let (u2, _) = &qualifying[1];
        let w1 = tri_string_loop(cfg, pres, x, u1)?;
        let w2 = tri_string_loop(cfg, pres, x, u2)?;
        let mut letters: Vec<Letter> = w1.inverse(pres).letters().to_vec();
        letters.extend(w2.letters().iter().copied());
        return canonical_band(pres, &letters);
    }
    Err(Error::Precondition(format!(
        "{x} is not self-folded, lies on no cycle, and has {} qualifying side(s)",
        qualifying.len()
    )))
}

/// First vertex at which `x` folds, with its first two slots there.
fn first_fold(cfg: &BrauerConfiguration, x: &PolygonId) -> (VertexId, usize, usize) {
    let poly = cfg.polygon(x).expect("validated");
    for (i, v) in poly.germ_vertices.iter().enumerate() {
        for (j, u) in poly.germ_vertices.iter().enumerate().skip(i + 1) {
            if v == u {
                return (v.clone(), i, j);
            }
        }
    }
    unreachable!("polygon is self-folded");
}

/// Shortest closed walk whose first step crosses `x`.
fn cycle_walk_through_polygon(
    cfg: &BrauerConfiguration,
    x: &PolygonId,
) -> Option<Vec<PathStep>> {
    let poly = cfg.polygon(x).expect("validated");
    let mut best: Option<Vec<PathStep>> = None;
    for (i, a) in poly.germ_vertices.iter().enumerate() {
        for (j, b) in poly.germ_vertices.iter().enumerate() {
            if i == j || a == b {
                continue;
            }
            let skip = BTreeSet::new();
            if let Some(back) = shortest_return(cfg, b, a, None, x, &skip) {
                let mut walk =
                    vec![PathStep::new(Germ::new(x.clone(), i), Germ::new(x.clone(), j))];
                walk.extend(back);
                if best.as_ref().map_or(true, |w| walk.len() < w.len()) {
                    best = Some(walk);
                }
            }
        }
    }
    best
}

// ---------------------------------------------------------------------------
// Enumeration and dimension vectors.

/// All strings of length ≤ `max_len`, one representative per pair {w, w⁻¹}.
pub fn enumerate_strings(pres: &QuiverPresentation, max_len: usize) -> Vec<StringWord> {
    let mut out: BTreeSet<StringWord> = BTreeSet::new();
    for p in pres.vertices() {
        out.insert(StringWord::trivial(p.clone()));
    }
    if max_len == 0 {
        return out.into_iter().collect();
    }
    let mut by_source: BTreeMap<PolygonId, Vec<Letter>> = BTreeMap::new();
    for (i, a) in pres.arrows().iter().enumerate() {
        by_source.entry(a.source.clone()).or_default().push(Letter::direct(i));
        by_source.entry(a.target.clone()).or_default().push(Letter::formal_inverse(i));
    }
    let mut stack: Vec<Vec<Letter>> = by_source
        .values()
        .flatten()
        .map(|&l| vec![l])
        .collect();
    while let Some(word) = stack.pop() {
        if string_violation(pres, &word).is_some() {
            continue;
        }
        let w = StringWord::from_letters(pres, word.clone()).expect("nonempty");
        out.insert(w.canonical(pres));
        if word.len() < max_len {
            let tip = word.last().expect("nonempty").target(pres);
            if let Some(next) = by_source.get(tip) {
                for &l in next {
                    let mut longer = word.clone();
                    longer.push(l);
                    stack.push(longer);
                }
            }
        }
    }
    out.into_iter().collect()
}

/// All bands of length ≤ `max_len`, in canonical form.
pub fn enumerate_bands(pres: &QuiverPresentation, max_len: usize) -> Vec<Band> {
    let mut out: BTreeSet<Band> = BTreeSet::new();
    for w in enumerate_strings(pres, max_len) {
        if !w.is_trivial() {
            if let Ok(b) = canonical_band(pres, w.letters()) {
                out.insert(b);
            }
        }
    }
    out.into_iter().collect()
}

/// Dimension vector of the string module M(w): one K per position.
pub fn string_module_dimvec(pres: &QuiverPresentation, w: &StringWord) -> DimVector {
    let mut d = DimVector::new();
    *d.entry(w.source().clone()).or_default() += 1;
    for l in w.letters() {
        *d.entry(l.target(pres).clone()).or_default() += 1;
    }
    d
}

/// Dimension vector of the band module M(b, n, φ): one Kⁿ per position.
pub fn band_module_dimvec(pres: &QuiverPresentation, b: &Band, n: usize) -> DimVector {
    let mut d = DimVector::new();
    for l in b.letters() {
        *d.entry(l.target(pres).clone()).or_default() += n;
    }
    d
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin::builtin;
    use crate::quiver::compile;
    use proptest::prelude::*;

    fn setup(name: &str) -> (BrauerConfiguration, QuiverPresentation) {
        let cfg = builtin(name).unwrap();
        let pres = compile(&cfg).unwrap();
        (cfg, pres)
    }

    fn word(pres: &QuiverPresentation, text: &str) -> StringWord {
        StringWord::from_letters(pres, parse_letters(pres, text).unwrap()).unwrap()
    }

    fn band(pres: &QuiverPresentation, text: &str) -> Band {
        canonical_band(pres, &parse_letters(pres, text).unwrap()).unwrap()
    }

    #[test]
    fn figure_strings_respect_the_relations() {
        let (_, pres) = setup("fig1");
        // consecutive arrows of one cycle are fine
        assert!(is_string(&pres, &word(&pres, "v1#0 v1#1")).unwrap());
        // a zero pair is not a string
        assert!(!is_string(&pres, &word(&pres, "v1#0 v1#2")).unwrap());
        // full cycle power is reserved for the socle
        assert!(!is_string(&pres, &word(&pres, "v1#0 v1#1 v1#2")).unwrap());
        // immediate backtrack
        assert!(!is_string(&pres, &word(&pres, "v1#0 v1#0^-1")).unwrap());
        // direct runs may not hop between vertex cycles
        assert!(!is_string(&pres, &word(&pres, "v4#0 v2#0")).unwrap());
        // mixed-direction walks are allowed
        assert!(is_string(&pres, &word(&pres, "v2#0 v3#0^-1")).unwrap());
        assert!(is_string(&pres, &word(&pres, "v4#0 v2#1^-1")).unwrap());
        // the zero string
        assert!(is_string(&pres, &StringWord::trivial("x".into())).unwrap());
        assert!(is_string(&pres, &StringWord::trivial("nope".into())).is_err());
    }

    #[test]
    fn single_letters_at_length_one() {
        let (_, pres) = setup("fig1");
        let got = enumerate_strings(&pres, 1);
        let singles: Vec<&StringWord> = got.iter().filter(|w| w.len() == 1).collect();
        assert_eq!(singles.len(), pres.arrows().len());
        assert!(singles.iter().all(|w| !w.letters()[0].inverse));
        assert_eq!(got.iter().filter(|w| w.is_trivial()).count(), 4);
        assert_eq!(got.len(), 13);
    }

    #[test]
    fn loopcase_strings_and_bands() {
        let (_, pres) = setup("loopcase");
        let strings = enumerate_strings(&pres, 3);
        let shown: Vec<String> = strings.iter().map(|w| w.display(&pres)).collect();
        assert_eq!(shown, vec!["e(e)", "loop"]);
        assert!(enumerate_bands(&pres, 3).is_empty());
    }

    #[test]
    fn canonical_band_rejects_degenerate_words() {
        let (_, pres) = setup("a1");
        // all-direct cyclic word
        assert!(matches!(
            canonical_band(&pres, &parse_letters(&pres, "v1#0").unwrap()),
            Err(Error::NotABand(_))
        ));
        // proper power
        let b = parse_letters(&pres, "v1#0^-1 v2#0 v1#0^-1 v2#0").unwrap();
        assert!(matches!(canonical_band(&pres, &b), Err(Error::NotABand(_))));
        // non-cyclic
        let nc = parse_letters(&pres, "u#0").unwrap();
        assert!(canonical_band(&pres, &nc).is_err());
    }

    #[test]
    fn published_bands_for_the_four_examples() {
        for (name, x, expected) in [
            ("a1", "t", "v1#0^-1 v2#0"),
            ("a2", "x", "q#0 q#1^-1"),
            ("a3", "t", "v3#0^-1 b#0 b#1^-1 b#2"),
            ("a4", "t", "a#2^-1 a#1 a#0^-1 b#0 b#1^-1 b#2"),
        ] {
            let (cfg, pres) = setup(name);
            let got = witness_band(&cfg, &pres, &x.into())
                .unwrap_or_else(|e| panic!("{name}: {e}"));
            let want = band(&pres, expected);
            assert_eq!(got, want, "{name}: got {}", got.display(&pres));
        }
    }

    #[test]
    fn figure_polygon_witness_wraps_the_fold() {
        let (cfg, pres) = setup("fig1");
        let got = witness_band(&cfg, &pres, &"x".into()).unwrap();
        assert_eq!(got, band(&pres, "v4#1 v4#0^-1 v4#2^-1"));
        // the self-folded 2-gon works too
        let (cfg3, pres3) = setup("a3");
        let loop_band = witness_band(&cfg3, &pres3, &"y".into()).unwrap();
        assert_eq!(loop_band, band(&pres3, "b#2 b#0 b#1^-1"));
    }

    #[test]
    fn witness_needs_a_qualifying_shape() {
        let (cfg, pres) = setup("loopcase");
        assert!(witness_band(&cfg, &pres, &"e".into()).is_err());
        let (cfg2, pres2) = setup("star_1_1_1");
        assert!(witness_band(&cfg2, &pres2, &"t".into()).is_err());
    }

    #[test]
    fn paths_translate_to_alternating_strings() {
        let (cfg, pres) = setup("fig1");
        // Crossing z out to the multiplicity-2 vertex and back yields the loop.
        let steps = vec![
            PathStep::new(Germ::new("z", 0), Germ::new("z", 1)),
            PathStep::new(Germ::new("z", 1), Germ::new("z", 0)),
        ];
        let p = ConfigPath::new(&cfg, steps).unwrap();
        let w = path_to_string(&cfg, &pres, &p).unwrap();
        assert_eq!(w.display(&pres), "v3#0");
        assert!(is_string(&pres, &w).unwrap());
        // The same turn at the plain vertex v2 is rejected.
        let steps = vec![
            PathStep::new(Germ::new("z", 1), Germ::new("z", 0)),
            PathStep::new(Germ::new("z", 0), Germ::new("z", 1)),
        ];
        let p = ConfigPath::new(&cfg, steps).unwrap();
        assert!(path_to_string(&cfg, &pres, &p).is_err());
        // One step: the zero string.
        let p = ConfigPath::new(
            &cfg,
            vec![PathStep::new(Germ::new("w", 0), Germ::new("w", 1))],
        )
        .unwrap();
        assert_eq!(path_to_string(&cfg, &pres, &p).unwrap(), StringWord::trivial("w".into()));
    }

    #[test]
    fn enumeration_matches_the_naive_oracle() {
        for (name, max_len) in [("loopcase", 4), ("a1", 4), ("star_1_1_1", 4), ("fig1", 3)] {
            let (_, pres) = setup(name);
            let mut naive: BTreeSet<StringWord> = BTreeSet::new();
            for p in pres.vertices() {
                naive.insert(StringWord::trivial(p.clone()));
            }
            let letters: Vec<Letter> = (0..pres.arrows().len())
                .flat_map(|i| [Letter::direct(i), Letter::formal_inverse(i)])
                .collect();
            let mut frontier: Vec<Vec<Letter>> = vec![Vec::new()];
            for _ in 0..max_len {
                let mut next = Vec::new();
                for w in &frontier {
                    for &l in &letters {
                        let mut c = w.clone();
                        c.push(l);
                        if string_violation(&pres, &c).is_none() {
                            naive.insert(
                                StringWord::from_letters(&pres, c.clone())
                                    .unwrap()
                                    .canonical(&pres),
                            );
                            next.push(c);
                        }
                    }
                }
                frontier = next;
            }
            let fast: BTreeSet<StringWord> =
                enumerate_strings(&pres, max_len).into_iter().collect();
            assert_eq!(fast, naive, "{name}");
        }
    }

    #[test]
    fn band_enumeration_finds_the_published_band() {
        let (_, pres) = setup("a1");
        let bands = enumerate_bands(&pres, 2);
        assert_eq!(bands.len(), 1);
        assert_eq!(bands[0], band(&pres, "v1#0^-1 v2#0"));
    }

    #[test]
    fn dimension_vectors_count_positions() {
        let (_, pres) = setup("a1");
        let w = StringWord::trivial("t".into());
        assert_eq!(string_module_dimvec(&pres, &w), [("t".into(), 1)].into());
        let b = band(&pres, "v1#0^-1 v2#0");
        assert_eq!(band_module_dimvec(&pres, &b, 1), [("t".into(), 2)].into());
        assert_eq!(band_module_dimvec(&pres, &b, 3), [("t".into(), 6)].into());
        let (_, presf) = setup("fig1");
        let w = word(&presf, "v4#0 v2#1^-1");
        let d = string_module_dimvec(&presf, &w);
        assert_eq!(d, [("x".into(), 1), ("z".into(), 1), ("w".into(), 1)].into());
        assert_eq!(d, string_module_dimvec(&presf, &w.inverse(&presf)));
    }

    #[test]
    fn witness_bands_survive_their_own_validation() {
        for (name, x) in [
            ("a1", "t"),
            ("a2", "x"),
            ("a3", "t"),
            ("a3", "y"),
            ("a4", "t"),
            ("fig1", "x"),
            ("fig1", "y"),
        ] {
            let (cfg, pres) = setup(name);
            let b = witness_band(&cfg, &pres, &x.into())
                .unwrap_or_else(|e| panic!("{name}/{x}: {e}"));
            let again = canonical_band(&pres, b.letters()).unwrap();
            assert_eq!(b, again, "{name}/{x}");
            let dirs: BTreeSet<bool> = b.letters().iter().map(|l| l.inverse).collect();
            assert_eq!(dirs.len(), 2, "{name}/{x}: band must mix directions");
        }
    }

    proptest! {
        #[test]
        fn canonicalization_is_rotation_and_inversion_invariant(
            seed in 0usize..64, rot in 0usize..8
        ) {
            let (_, pres) = setup("a4");
            let bands = enumerate_bands(&pres, 6);
            prop_assume!(!bands.is_empty());
            let b = &bands[seed % bands.len()];
            let n = b.len();
            let rot = rot % n;
            let rotated: Vec<Letter> = b
                .letters()[rot..]
                .iter()
                .chain(&b.letters()[..rot])
                .copied()
                .collect();
            let inv: Vec<Letter> = rotated.iter().rev().map(|l| l.opposite()).collect();
            prop_assert_eq!(&canonical_band(&pres, &rotated).unwrap(), b);
            prop_assert_eq!(&canonical_band(&pres, &inv).unwrap(), b);
        }

        #[test]
        fn random_words_never_panic(letters in proptest::collection::vec((0usize..9, any::<bool>()), 0..6)) {
            let (_, pres) = setup("fig1");
            let ls: Vec<Letter> = letters
                .into_iter()
                .map(|(a, inv)| Letter { arrow: a, inverse: inv })
                .collect();
            let _ = canonical_band(&pres, &ls);
            if let Ok(w) = StringWord::from_letters(&pres, ls) {
                let _ = is_string(&pres, &w);
            }
        }
    }
}
