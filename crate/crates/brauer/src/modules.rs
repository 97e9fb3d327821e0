//! Finite-dimensional representations of a compiled presentation over exact
//! rationals: string/band realizations, relation checking, Hom spaces,
//! indecomposability via the trace form, projective covers and syzygies.

use std::collections::BTreeMap;

use num::{One, Zero};
use serde::Serialize;

use crate::config::{Germ, PolygonId};
use crate::matrix::{Mat, Rat};
use crate::quiver::{QuiverPresentation, Relation};
use crate::strings::{is_string, Band, DimVector, StringWord};
use crate::{Error, Result};

/// A right module presented by one matrix per arrow, shaped
/// target-dim × source-dim. Vectors are columns; the path a·b acts as
/// map(b)·map(a).
#[derive(Clone, Debug, PartialEq)]
pub struct Representation {
    dims: BTreeMap<PolygonId, usize>,
    maps: Vec<Mat>,
}

impl Representation {
    /// Shape-checked constructor: `maps[i]` belongs to arrow `i` and must be
    /// dims[target] × dims[source]; polygons missing from `dims` count as 0.
    pub fn new(
        pres: &QuiverPresentation,
        dims: BTreeMap<PolygonId, usize>,
        maps: Vec<Mat>,
    ) -> Result<Self> {
        let mut full: BTreeMap<PolygonId, usize> =
            pres.vertices().iter().map(|p| (p.clone(), 0)).collect();
        for (p, d) in dims {
            if !full.contains_key(&p) {
                return Err(Error::UnknownPolygon(p.to_string()));
            }
            full.insert(p, d);
        }
        if maps.len() != pres.arrows().len() {
            return Err(Error::Shape(format!(
                "expected {} arrow maps, got {}",
                pres.arrows().len(),
                maps.len()
            )));
        }
        for (i, m) in maps.iter().enumerate() {
            let a = pres.arrow(i);
            let want = (full[&a.target], full[&a.source]);
            if (m.rows(), m.cols()) != want {
                return Err(Error::Shape(format!(
                    "map for `{}` is {}×{}, expected {}×{}",
                    a.id,
                    m.rows(),
                    m.cols(),
                    want.0,
                    want.1
                )));
            }
        }
        Ok(Representation { dims: full, maps })
    }

    pub fn dims(&self) -> &BTreeMap<PolygonId, usize> {
        &self.dims
    }

    pub fn dim_at(&self, p: &PolygonId) -> usize {
        self.dims.get(p).copied().unwrap_or(0)
    }

    pub fn total_dim(&self) -> usize {
        self.dims.values().sum()
    }

    /// Nonzero coordinates only, matching the string/band dim vectors.
    pub fn dimvec(&self) -> DimVector {
        self.dims.iter().filter(|(_, &d)| d > 0).map(|(p, &d)| (p.clone(), d)).collect()
    }

    pub fn map(&self, arrow: usize) -> &Mat {
        &self.maps[arrow]
    }

    pub fn maps(&self) -> &[Mat] {
        &self.maps
    }

    pub fn is_zero(&self) -> bool {
        self.total_dim() == 0
    }
}

fn zero_maps(pres: &QuiverPresentation, dims: &BTreeMap<PolygonId, usize>) -> Vec<Mat> {
    pres.arrows()
        .iter()
        .map(|a| Mat::zero(dims[&a.target], dims[&a.source]))
        .collect()
}

/// The zero representation.
pub fn zero_rep(pres: &QuiverPresentation) -> Representation {
    let dims: BTreeMap<PolygonId, usize> =
        pres.vertices().iter().map(|p| (p.clone(), 0)).collect();
    let maps = zero_maps(pres, &dims);
    Representation { dims, maps }
}

/// The simple module S(x).
pub fn simple(pres: &QuiverPresentation, x: &PolygonId) -> Result<Representation> {
    realize_string_module(pres, &StringWord::trivial(x.clone()))
}

/// Block-diagonal sum of two representations.
pub fn direct_sum(
    pres: &QuiverPresentation,
    a: &Representation,
    b: &Representation,
) -> Representation {
    let dims: BTreeMap<PolygonId, usize> = pres
        .vertices()
        .iter()
        .map(|p| (p.clone(), a.dim_at(p) + b.dim_at(p)))
        .collect();
    let maps = pres
        .arrows()
        .iter()
        .enumerate()
        .map(|(i, arr)| {
            let (ma, mb) = (a.map(i), b.map(i));
            let mut m = Mat::zero(dims[&arr.target], dims[&arr.source]);
            for r in 0..ma.rows() {
                for c in 0..ma.cols() {
                    m[(r, c)] = ma[(r, c)].clone();
                }
            }
            let (ro, co) = (ma.rows(), ma.cols());
            for r in 0..mb.rows() {
                for c in 0..mb.cols() {
                    m[(ro + r, co + c)] = mb[(r, c)].clone();
                }
            }
            m
        })
        .collect();
    Representation { dims, maps }
}

/// Evaluate a composable path on a representation: map(aₖ)·…·map(a₁).
pub fn path_matrix(
    pres: &QuiverPresentation,
    rep: &Representation,
    path: &[usize],
) -> Result<Mat> {
    if path.is_empty() {
        return Err(Error::Precondition("path evaluation needs a nonempty path".into()));
    }
    pres.check_composable(path)?;
    let mut m = rep.map(path[0]).clone();
    for &a in &path[1..] {
        m = rep.map(a).mul(&m);
    }
    Ok(m)
}

/// Walk positions with one K^n block each, plus the connecting blocks: the
/// shared skeleton of string, band and branched-diagram realizations.
fn assemble(
    pres: &QuiverPresentation,
    positions: &[PolygonId],
    n: usize,
    edges: &[(usize, usize, usize, Mat)],
) -> Representation {
    // block index of every position inside its polygon, in position order
    let mut block: Vec<usize> = vec![0; positions.len()];
    let mut counts: BTreeMap<&PolygonId, usize> = BTreeMap::new();
    for (i, p) in positions.iter().enumerate() {
        let c = counts.entry(p).or_default();
        block[i] = *c;
        *c += 1;
    }
    let dims: BTreeMap<PolygonId, usize> = pres
        .vertices()
        .iter()
        .map(|p| (p.clone(), counts.get(p).copied().unwrap_or(0) * n))
        .collect();
    let mut maps = zero_maps(pres, &dims);
    for (from, to, arrow, m) in edges {
        debug_assert_eq!((m.rows(), m.cols()), (n, n));
        debug_assert_eq!(&positions[*from], &pres.arrow(*arrow).source);
        debug_assert_eq!(&positions[*to], &pres.arrow(*arrow).target);
        let (ro, co) = (block[*to] * n, block[*from] * n);
        for r in 0..n {
            for c in 0..n {
                maps[*arrow][(ro + r, co + c)] = m[(r, c)].clone();
            }
        }
    }
    Representation { dims, maps }
}

fn one() -> Mat {
    Mat::identity(1)
}

/// The string module M(w): one K per position, identity actions along the
/// word. M(ε_x) = S(x).
pub fn realize_string_module(
    pres: &QuiverPresentation,
    w: &StringWord,
) -> Result<Representation> {
    if !is_string(pres, w)? {
        return Err(Error::Shape(format!(
            "`{}` is not a string here",
            w.display(pres)
        )));
    }
    let mut positions = vec![w.source().clone()];
    for l in w.letters() {
        positions.push(l.target(pres).clone());
    }
    let edges: Vec<(usize, usize, usize, Mat)> = w
        .letters()
        .iter()
        .enumerate()
        .map(|(j, l)| {
            if l.inverse {
                (j + 1, j, l.arrow, one())
            } else {
                (j, j + 1, l.arrow, one())
            }
        })
        .collect();
    Ok(assemble(pres, &positions, 1, &edges))
}

/// Jordan block J_n(λ): the twist automorphism of K^n.
fn jordan(n: usize, lambda: &Rat) -> Mat {
    let mut j = Mat::zero(n, n);
    for i in 0..n {
        j[(i, i)] = lambda.clone();
        if i > 0 {
            j[(i, i - 1)] = Rat::one();
        }
    }
    j
}

/// The band module M(b, n, φ_λ): one K^n per position, identities along the
/// walk, with the last letter carrying the Jordan twist J_n(λ).
pub fn realize_band_module(
    pres: &QuiverPresentation,
    b: &Band,
    n: usize,
    lambda: &Rat,
) -> Result<Representation> {
    if lambda.is_zero() {
        return Err(Error::Precondition("band parameter λ must be nonzero".into()));
    }
    if n == 0 {
        return Err(Error::Precondition("band modules need n ≥ 1".into()));
    }
    let m = b.len();
    let positions: Vec<PolygonId> =
        b.letters().iter().map(|l| l.target(pres).clone()).collect();
    let edges: Vec<(usize, usize, usize, Mat)> = b
        .letters()
        .iter()
        .enumerate()
        .map(|(j, l)| {
            let from = (j + m - 1) % m;
            let block = if j == m - 1 { jordan(n, lambda) } else { Mat::identity(n) };
            if l.inverse {
                (j, from, l.arrow, block)
            } else {
                (from, j, l.arrow, block)
            }
        })
        .collect();
    Ok(assemble(pres, &positions, n, &edges))
}

/// The branched one-parameter family drawn on four arrows α₁…α₄ of common
/// source: two source copies, one node per target, α₃ reaching both copies
/// and α₁ closing the circle with the (1 λ) junction.
pub fn quad_circle_module(
    pres: &QuiverPresentation,
    arrows: [usize; 4],
    lambda: &Rat,
) -> Result<Representation> {
    if lambda.is_zero() {
        return Err(Error::Precondition("the family needs λ ≠ 0".into()));
    }
    for (i, &a) in arrows.iter().enumerate() {
        if arrows[..i].contains(&a) {
            return Err(Error::Precondition("the four arrows must be distinct".into()));
        }
    }
    let x = pres.arrow(arrows[0]).source.clone();
    if arrows.iter().any(|&a| pres.arrow(a).source != x) {
        return Err(Error::Precondition("the four arrows must share their source".into()));
    }
    let mut positions = vec![x.clone(), x];
    positions.extend(arrows.iter().map(|&a| pres.arrow(a).target.clone()));
    let scale = |v: Rat| {
        let mut m = Mat::zero(1, 1);
        m[(0, 0)] = v;
        m
    };
    let edges = vec![
        (0, 2, arrows[0], one()),
        (1, 2, arrows[0], scale(lambda.clone())),
        (0, 3, arrows[1], one()),
        (0, 4, arrows[2], one()),
        (1, 4, arrows[2], one()),
        (1, 5, arrows[3], one()),
    ];
    Ok(assemble(pres, &positions, 1, &edges))
}

/// Per-relation residual check.
#[derive(Clone, Debug, Default)]
pub struct CheckReport {
    pub failures: Vec<String>,
}

impl CheckReport {
    pub fn is_clean(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Evaluate every relation on the representation; anything nonzero (or any
/// unequal commutation pair) is recorded with its display form.
pub fn check_relations(
    pres: &QuiverPresentation,
    rep: &Representation,
) -> Result<CheckReport> {
    let mut report = CheckReport::default();
    for rel in pres.relations() {
        let bad = match rel {
            Relation::Truncated(p) => !path_matrix(pres, rep, p)?.is_zero(),
            Relation::Zero(a, b) => !path_matrix(pres, rep, &[*a, *b])?.is_zero(),
            Relation::Commutation(l, r) => {
                path_matrix(pres, rep, l)? != path_matrix(pres, rep, r)?
            }
        };
        if bad {
            report
                .failures
                .push(format!("relation {} does not vanish", pres.relation_display(rel)));
        }
    }
    Ok(report)
}

/// A space of module homomorphisms: dimension and an explicit basis of
/// per-polygon matrix families.
#[derive(Clone, Debug)]
pub struct HomSpace {
    pub dimension: usize,
    pub basis: Vec<BTreeMap<PolygonId, Mat>>,
}

/// Hom_A(M, N): solve Φ_{t(a)}·M_a = N_a·Φ_{s(a)} for all arrows a.
pub fn hom_dim(
    pres: &QuiverPresentation,
    m: &Representation,
    n: &Representation,
) -> HomSpace {
    // unknown layout: per polygon, row-major entries of Φ_p (n.dim × m.dim)
    let polys = pres.vertices();
    let mut offset: BTreeMap<&PolygonId, usize> = BTreeMap::new();
    let mut total = 0usize;
    for p in polys {
        offset.insert(p, total);
        total += n.dim_at(p) * m.dim_at(p);
    }
    let rows: usize = pres
        .arrows()
        .iter()
        .map(|a| n.dim_at(&a.target) * m.dim_at(&a.source))
        .sum();
    let mut sys = Mat::zero(rows, total);
    let mut row = 0;
    for (i, a) in pres.arrows().iter().enumerate() {
        let (ms, mt) = (m.dim_at(&a.source), m.dim_at(&a.target));
        let (ns, nt) = (n.dim_at(&a.source), n.dim_at(&a.target));
        let (off_s, off_t) = (offset[&a.source], offset[&a.target]);
        for r in 0..nt {
            for c in 0..ms {
                // Σ_k Φ_t[r,k]·M_a[k,c] − Σ_k N_a[r,k]·Φ_s[k,c] = 0
                for k in 0..mt {
                    let coeff = m.map(i)[(k, c)].clone();
                    if !coeff.is_zero() {
                        let col = off_t + r * mt + k;
                        let cur = sys[(row, col)].clone();
                        sys[(row, col)] = cur + coeff;
                    }
                }
                for k in 0..ns {
                    let coeff = n.map(i)[(r, k)].clone();
                    if !coeff.is_zero() {
                        let col = off_s + k * ms + c;
                        let cur = sys[(row, col)].clone();
                        sys[(row, col)] = cur - coeff;
                    }
                }
                row += 1;
            }
        }
    }
    let null = sys.nullspace();
    let basis = null
        .columns()
        .into_iter()
        .map(|v| {
            polys
                .iter()
                .map(|p| {
                    let (nr, nc) = (n.dim_at(p), m.dim_at(p));
                    let mut phi = Mat::zero(nr, nc);
                    for r in 0..nr {
                        for c in 0..nc {
                            phi[(r, c)] = v[(offset[p] + r * nc + c, 0)].clone();
                        }
                    }
                    (p.clone(), phi)
                })
                .collect()
        })
        .collect();
    HomSpace { dimension: null.cols(), basis }
}

pub fn end_dim(pres: &QuiverPresentation, m: &Representation) -> usize {
    hom_dim(pres, m, m).dimension
}

/// True iff End(M)/rad End(M) is one-dimensional; the radical is read off
/// the trace form, which is exact in characteristic zero.
pub fn is_indecomposable(pres: &QuiverPresentation, rep: &Representation) -> bool {
    let end = hom_dim(pres, rep, rep);
    let k = end.dimension;
    if k == 0 {
        return false;
    }
    let mut gram = Mat::zero(k, k);
    for i in 0..k {
        for j in 0..k {
            let mut t = Rat::zero();
            for (p, ei) in &end.basis[i] {
                let ej = &end.basis[j][p];
                if ei.rows() > 0 {
                    t += ei.mul(ej).trace();
                }
            }
            gram[(i, j)] = t;
        }
    }
    gram.rank() == 1
}

/// Basis paths of P(x) in a fixed order: the stationary path, every strand
/// in germ order, one socle representative.
fn projective_elements(
    pres: &QuiverPresentation,
    x: &PolygonId,
) -> Result<Vec<(PolygonId, Vec<usize>)>> {
    let pb = pres.projective_basis(x)?;
    let mut elems: Vec<(PolygonId, Vec<usize>)> = vec![(x.clone(), Vec::new())];
    for (_, runs) in &pb.strands {
        for run in runs {
            let last = *run.last().expect("runs are nonempty");
            elems.push((pres.arrow(last).target.clone(), run.clone()));
        }
    }
    elems.push((x.clone(), pb.socle.clone()));
    Ok(elems)
}

/// P(x) via the regular right action on its basis paths. All full cycle
/// powers land on the common socle element.
pub fn projective_representation(
    pres: &QuiverPresentation,
    x: &PolygonId,
) -> Result<Representation> {
    let pb = pres.projective_basis(x)?;
    let elems = projective_elements(pres, x)?;
    let socle_idx = elems.len() - 1;
    // where each basis element goes under each arrow
    let mut transitions: Vec<(usize, usize, usize)> = Vec::new(); // (from, to, arrow)
    if pres.special_loop_case() {
        transitions.push((0, socle_idx, 0));
    } else {
        let mut idx = 1;
        for (g, runs) in &pb.strands {
            let full = full_cycle_word(pres, g)?;
            debug_assert_eq!(full.len(), runs.len() + 1);
            transitions.push((0, idx, full[0]));
            for k in 1..full.len() {
                let from = idx + k - 1;
                let to = if k == runs.len() { socle_idx } else { idx + k };
                transitions.push((from, to, full[k]));
            }
            idx += runs.len();
        }
    }
    let positions: Vec<PolygonId> = elems.iter().map(|(p, _)| p.clone()).collect();
    let edges: Vec<(usize, usize, usize, Mat)> =
        transitions.into_iter().map(|(f, t, a)| (f, t, a, one())).collect();
    Ok(assemble(pres, &positions, 1, &edges))
}

/// The full cycle power at a germ: one turn of the vertex cycle, repeated
/// multiplicity many times.
fn full_cycle_word(pres: &QuiverPresentation, g: &Germ) -> Result<Vec<usize>> {
    let turn = pres.cycle_from_germ(g)?;
    let v = pres.arrow(turn[0]).vertex.clone();
    let e = pres.config().multiplicity(&v) as usize;
    Ok(turn.iter().copied().cycle().take(turn.len() * e).collect())
}

/// Cover, surjection and kernel in one pass.
fn cover_data(
    pres: &QuiverPresentation,
    rep: &Representation,
) -> Result<(Representation, BTreeMap<PolygonId, Mat>, Representation)> {
    let report = check_relations(pres, rep)?;
    if !report.is_clean() {
        return Err(Error::Precondition(format!(
            "representation violates {} relation(s); no cover",
            report.failures.len()
        )));
    }
    // radical = sum of arrow images; top lifts = first standard basis
    // vectors completing it, polygon by polygon
    let mut summands: Vec<(PolygonId, usize)> = Vec::new();
    for p in pres.vertices() {
        let d = rep.dim_at(p);
        if d == 0 {
            continue;
        }
        let incoming: Vec<usize> = (0..pres.arrows().len())
            .filter(|&i| &pres.arrow(i).target == p)
            .collect();
        let rad_cols: usize = incoming.iter().map(|&i| rep.map(i).cols()).sum();
        let mut span = Mat::zero(d, rad_cols + d);
        let mut col = 0;
        for &i in &incoming {
            let m = rep.map(i);
            for c in 0..m.cols() {
                for r in 0..d {
                    span[(r, col)] = m[(r, c)].clone();
                }
                col += 1;
            }
        }
        let mut rank = span.rank();
        for e in 0..d {
            span[(e, col)] = Rat::one();
            let grown = span.rank();
            if grown > rank {
                rank = grown;
                col += 1;
                summands.push((p.clone(), e));
            } else {
                span[(e, col)] = Rat::zero();
            }
        }
    }

    let mut cover = zero_rep(pres);
    let mut images: BTreeMap<PolygonId, Vec<Mat>> = BTreeMap::new();
    for (p, lift) in &summands {
        cover = direct_sum(pres, &cover, &projective_representation(pres, p)?);
        for (q, path) in projective_elements(pres, p)? {
            let mut v = Mat::zero(rep.dim_at(p), 1);
            v[(*lift, 0)] = Rat::one();
            for &a in &path {
                v = rep.map(a).mul(&v);
            }
            images.entry(q).or_default().push(v);
        }
    }
    let mut surjection: BTreeMap<PolygonId, Mat> = BTreeMap::new();
    for q in pres.vertices() {
        let cols = images.get(q).map(Vec::len).unwrap_or(0);
        debug_assert_eq!(cols, cover.dim_at(q));
        let mut s = Mat::zero(rep.dim_at(q), cols);
        if let Some(vs) = images.get(q) {
            for (c, v) in vs.iter().enumerate() {
                for r in 0..rep.dim_at(q) {
                    s[(r, c)] = v[(r, 0)].clone();
                }
            }
        }
        debug_assert_eq!(s.rank(), rep.dim_at(q), "cover fails to surject at {q}");
        surjection.insert(q.clone(), s);
    }

    // kernel representation: restrict the cover's action to per-polygon
    // nullspace bases
    let kernels: BTreeMap<PolygonId, Mat> = pres
        .vertices()
        .iter()
        .map(|q| (q.clone(), surjection[q].nullspace()))
        .collect();
    let omega_dims: BTreeMap<PolygonId, usize> =
        kernels.iter().map(|(q, k)| (q.clone(), k.cols())).collect();
    let omega_maps: Vec<Mat> = pres
        .arrows()
        .iter()
        .enumerate()
        .map(|(i, a)| {
            let pushed = cover.map(i).mul(&kernels[&a.source]);
            kernels[&a.target]
                .solve(&pushed)
                .expect("kernel is closed under the action")
        })
        .collect();
    let omega = Representation { dims: omega_dims, maps: omega_maps };
    Ok((cover, surjection, omega))
}

/// Projective cover: the summed projectives over top(M) and the surjection
/// matrices, polygon by polygon.
pub fn projective_cover(
    pres: &QuiverPresentation,
    rep: &Representation,
) -> Result<(Representation, BTreeMap<PolygonId, Mat>)> {
    let (cover, surj, _) = cover_data(pres, rep)?;
    Ok((cover, surj))
}

/// k-th syzygy Ω^k(M).
pub fn syzygy(
    pres: &QuiverPresentation,
    rep: &Representation,
    k: usize,
) -> Result<Representation> {
    let mut current = rep.clone();
    for _ in 0..k {
        let (_, _, omega) = cover_data(pres, &current)?;
        current = omega;
    }
    Ok(current)
}

/// τ = Ω² dimension vector. Projective input has no τ and errors.
pub fn tau_dimvec(pres: &QuiverPresentation, rep: &Representation) -> Result<DimVector> {
    let first = syzygy(pres, rep, 1)?;
    if first.is_zero() {
        return Err(Error::Precondition(
            "projective module: τ = Ω² degenerates to zero".into(),
        ));
    }
    Ok(syzygy(pres, &first, 1)?.dimvec())
}

/// Serialized representation: dims plus exact `p/q` entries per arrow.
#[derive(Serialize)]
pub struct RepDoc {
    pub dims: BTreeMap<String, usize>,
    pub maps: BTreeMap<String, Vec<Vec<String>>>,
}

pub fn rep_to_doc(pres: &QuiverPresentation, rep: &Representation) -> RepDoc {
    RepDoc {
        dims: rep.dims.iter().map(|(p, &d)| (p.to_string(), d)).collect(),
        maps: pres
            .arrows()
            .iter()
            .enumerate()
            .map(|(i, a)| (a.id.clone(), rep.map(i).to_strings()))
            .collect(),
    }
}
