//! Brauer configuration algebras, computationally.
//!
//! A Brauer configuration is a finite collection of vertices, each carrying a
//! multiplicity, together with polygons (multisets of vertex germs) and an
//! anticlockwise cyclic ordering of the germs at every vertex. Each
//! configuration presents a symmetric special multiserial algebra by quiver
//! and relations. This crate builds that presentation and everything the
//! algebra side of the story needs:
//!
//! * [`config`] — the configuration model: parsing, validation, analysis,
//!   successor sequences.
//! * [`quiver`] — compilation to a quiver with relations, vertex cycles,
//!   projective bases, nonzero-path tests.
//! * [`strings`] — string and band combinatorics, canonical band forms,
//!   walk-to-string translation, wildness witness bands.
//! * [`classify`] — the tame/wild classifier with evidence.
//! * [`cut`] — admissible cuts and the (almost) gentle algebras they produce.
//! * [`moves`] — flip-style reduction moves toward star form, and the
//!   multiplicity-splitting construction.
//! * [`modules`] — exact linear algebra over the rationals: string/band module
//!   realizations, Hom spaces, endomorphism-ring locality, projective covers,
//!   syzygies, and the Auslander-Reiten translate on dimension vectors.
//!
//! Start with [`builtin::builtin`] for ready-made configurations, or parse a
//! document with [`format::parse`]. The `examples/` directory walks through
//! each capability end to end; the `brauer` binary exposes the same operations
//! as subcommands.

pub mod builtin;
pub mod classify;
pub mod config;
pub mod cut;
pub mod format;
pub mod gen;
pub mod matrix;
pub mod modules;
pub mod moves;
pub mod quiver;
pub mod strings;
pub mod suite;

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("unknown polygon `{0}`")]
    UnknownPolygon(String),
    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),
    #[error("duplicate id `{0}`")]
    DuplicateId(String),
    #[error("bad germ reference `{0}`")]
    BadGerm(String),
    #[error("invalid configuration:\n{0}")]
    Invalid(config::ValidationReport),
    #[error("{0}")]
    Precondition(String),
    #[error("path breaks at position {0}: consecutive arrows are not composable")]
    NotComposable(usize),
    #[error("not a band: {0}")]
    NotABand(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
