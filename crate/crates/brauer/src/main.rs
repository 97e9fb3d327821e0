use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rand::prelude::*;
use rand::rngs::StdRng;
use serde_json::{json, Value};

use brauer::builtin::builtin;
use brauer::classify::{classify, verdict_document, wildness_witness, Verdict};
use brauer::config::{BrauerConfiguration, VertexId};
use brauer::cut::{self, enumerate_cuts, AdmissibleCut};
use brauer::matrix::Rat;
use brauer::modules::{
    hom_dim, projective_representation, realize_band_module, rep_to_doc, syzygy,
    tau_dimvec, Representation,
};
use brauer::moves::{
    default_split_choices, multiplicity_split, normalize_to_star, reduction_move,
};
use brauer::quiver::{self, compile, QuiverPresentation};
use brauer::strings::{
    band_module_dimvec, enumerate_bands, enumerate_strings, string_module_dimvec,
    DimVector,
};
use brauer::{format, suite, Error, Result};

#[derive(Parser)]
#[command(
    name = "brauer",
    version,
    about = "Brauer configuration algebras: compile, classify, cut, normalize, compute"
)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Clone, Copy, Default, ValueEnum)]
enum Fmt {
    #[default]
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Cmd {
    /// Parse a configuration and report validity
    Validate {
        /// Builtin name (e.g. fig1, star_1_2_3) or path to a JSON document
        input: String,
        #[arg(long, value_enum, default_value_t)]
        format: Fmt,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Compile to the quiver with relations
    Compile {
        input: String,
        #[arg(long, value_enum, default_value_t)]
        format: Fmt,
        /// Include the parsed configuration alongside the presentation
        #[arg(long)]
        emit_intermediate: bool,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Tame/wild verdict with evidence
    Classify {
        input: String,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Enumerate strings up to a length cap
    Strings {
        input: String,
        #[arg(long, default_value_t = 4)]
        max_len: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Enumerate bands up to a length cap
    Bands {
        input: String,
        #[arg(long, default_value_t = 4)]
        max_len: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Produce the wildness witness band, if the verdict is wild
    Witness {
        input: String,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Build an admissible-cut algebra, or survey all of them
    Cut {
        input: String,
        /// Cut specification `vertex=arrow,vertex=arrow,...`; omit to survey
        #[arg(long)]
        cut: Option<String>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run reduction moves to star form, logging each move
    Normalize {
        input: String,
        /// Include every intermediate configuration
        #[arg(long)]
        emit_intermediate: bool,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Split high multiplicities into simple 2-gon cycles
    Split {
        input: String,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Hom-space dimensions: projectives pairwise, or a band family via --lambda
    Homdim {
        input: String,
        /// Comma-separated nonzero rationals, e.g. "1,2,5/2"
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long, default_value_t = 4)]
        max_len: usize,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Syzygy dimension vectors of a band module family
    Syzygy {
        input: String,
        /// Comma-separated nonzero rationals; sampled from --seed when omitted
        #[arg(long)]
        lambda: Option<String>,
        /// How many syzygy steps to take
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[arg(long, default_value_t = 4)]
        max_len: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Full self-check battery on one configuration
    VerifySuite {
        input: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn load(input: &str) -> Result<(BrauerConfiguration, String)> {
    let path = Path::new(input);
    if path.exists() {
        let text = fs::read_to_string(path)?;
        let label = path
            .file_stem()
            .map(|s| s.to_string_lossy().into_owned())
            .unwrap_or_else(|| input.to_string());
        Ok((parse_flexible(&text)?, label))
    } else {
        let cfg = builtin(input)?;
        Ok((cfg, input.to_string()))
    }
}

/// Accept either a bare configuration document or the output of `split` /
/// `normalize`, which nest one under "configuration" / "star".
fn parse_flexible(text: &str) -> Result<BrauerConfiguration> {
    match format::parse(text) {
        Ok(cfg) => Ok(cfg),
        Err(first) => {
            if let Ok(value) = serde_json::from_str::<Value>(text) {
                for key in ["configuration", "star"] {
                    if let Some(inner) = value.get(key) {
                        return format::parse(&inner.to_string());
                    }
                }
            }
            Err(first)
        }
    }
}

fn emit(text: &str, output: &Option<PathBuf>) -> Result<()> {
    match output {
        Some(p) => fs::write(p, text.as_bytes())?,
        None => {
            use std::io::Write;
            // tolerate a closed pipe (`brauer ... | head`)
            if let Err(e) = writeln!(std::io::stdout(), "{text}") {
                if e.kind() != std::io::ErrorKind::BrokenPipe {
                    return Err(e.into());
                }
            }
        }
    }
    Ok(())
}

fn emit_json(doc: &Value, output: &Option<PathBuf>) -> Result<()> {
    emit(&serde_json::to_string_pretty(doc).expect("document serializes"), output)
}

fn dims_json(d: &DimVector) -> Value {
    Value::Object(
        d.iter()
            .map(|(p, &n)| (p.to_string(), Value::from(n)))
            .collect(),
    )
}

fn quiver_dot(pres: &QuiverPresentation) -> String {
    let mut out = String::from("digraph quiver {\n");
    for p in pres.vertices() {
        out.push_str(&format!("  \"{p}\" [shape=ellipse];\n"));
    }
    for a in pres.arrows() {
        out.push_str(&format!(
            "  \"{}\" -> \"{}\" [label=\"{} @ {}\"];\n",
            a.source, a.target, a.id, a.vertex
        ));
    }
    out.push_str("}\n");
    out
}

fn parse_lambdas(spec: &str) -> Result<Vec<Rat>> {
    let mut out = Vec::new();
    for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let r: Rat = part
            .parse()
            .map_err(|_| Error::Parse(format!("`{part}` is not a rational number")))?;
        if r == Rat::default() {
            return Err(Error::Precondition("band parameters must be nonzero".into()));
        }
        out.push(r);
    }
    if out.is_empty() {
        return Err(Error::Parse("empty λ list".into()));
    }
    Ok(out)
}

/// First band of the presentation under the length cap, for the
/// family-valued verbs.
fn leading_band(
    pres: &QuiverPresentation,
    max_len: usize,
) -> Result<brauer::strings::Band> {
    enumerate_bands(pres, max_len).into_iter().next().ok_or_else(|| {
        Error::Precondition(format!(
            "no band of length ≤ {max_len}; raise --max-len or pick another input"
        ))
    })
}

fn run(cmd: Cmd) -> Result<()> {
    match cmd {
        Cmd::Validate { input, format: fmt, output } => {
            match load(&input) {
                Ok((cfg, label)) => {
                    if matches!(fmt, Fmt::Dot) {
                        return emit(&format::to_dot(&cfg), &output);
                    }
                    let a = cfg.analyze();
                    emit_json(
                        &json!({
                            "input": label,
                            "valid": true,
                            "vertices": cfg.vertices().len(),
                            "polygons": cfg.polygons().len(),
                            "is_tree": a.is_tree,
                            "is_brauer_graph": a.is_brauer_graph,
                            "is_multiplicity_free": a.is_multiplicity_free,
                            "max_polygon_size": a.max_polygon_size,
                            "truncated_vertices": a.truncated_vertices.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                        }),
                        &output,
                    )
                }
                Err(Error::Invalid(report)) => {
                    emit_json(
                        &json!({
                            "input": input,
                            "valid": false,
                            "violations": report
                                .violations
                                .iter()
                                .map(|v| v.to_string())
                                .collect::<Vec<_>>(),
                        }),
                        &output,
                    )?;
                    Err(Error::Precondition("configuration is invalid".into()))
                }
                Err(e) => Err(e),
            }
        }
        Cmd::Compile { input, format: fmt, emit_intermediate, output } => {
            let (cfg, label) = load(&input)?;
            let pres = compile(&cfg)?;
            match fmt {
                Fmt::Dot => emit(&quiver_dot(&pres), &output),
                Fmt::Json => {
                    let pres_doc = serde_json::to_value(quiver::to_doc(&pres))
                        .expect("document serializes");
                    let doc = if emit_intermediate {
                        json!({
                            "input": label,
                            "configuration": format::to_doc(&cfg),
                            "presentation": pres_doc,
                            "algebra_dim": pres.algebra_dim(),
                        })
                    } else {
                        json!({
                            "input": label,
                            "presentation": pres_doc,
                            "algebra_dim": pres.algebra_dim(),
                        })
                    };
                    emit_json(&doc, &output)
                }
            }
        }
        Cmd::Classify { input, output } => {
            let (cfg, label) = load(&input)?;
            let verdict = classify(&cfg)?;
            let doc = match &verdict {
                Verdict::Wild { .. } => {
                    let pres = compile(&cfg)?;
                    match wildness_witness(&cfg, &pres) {
                        Ok(w) => verdict_document(&verdict, Some((&w, &pres))),
                        Err(_) => verdict_document(&verdict, None),
                    }
                }
                _ => verdict_document(&verdict, None),
            };
            emit_json(&json!({ "input": label, "verdict": doc }), &output)
        }
        Cmd::Strings { input, max_len, output } => {
            let (cfg, label) = load(&input)?;
            let pres = compile(&cfg)?;
            let words = enumerate_strings(&pres, max_len);
            let listed: Vec<Value> = words
                .iter()
                .map(|w| {
                    json!({
                        "word": w.display(&pres),
                        "dims": dims_json(&string_module_dimvec(&pres, w)),
                    })
                })
                .collect();
            emit_json(
                &json!({
                    "input": label,
                    "max_len": max_len,
                    "count": words.len(),
                    "strings": listed,
                }),
                &output,
            )
        }
        Cmd::Bands { input, max_len, output } => {
            let (cfg, label) = load(&input)?;
            let pres = compile(&cfg)?;
            let bands = enumerate_bands(&pres, max_len);
            let listed: Vec<Value> = bands
                .iter()
                .map(|b| {
                    json!({
                        "band": b.display(&pres),
                        "dims": dims_json(&band_module_dimvec(&pres, b, 1)),
                    })
                })
                .collect();
            emit_json(
                &json!({
                    "input": label,
                    "max_len": max_len,
                    "count": bands.len(),
                    "bands": listed,
                }),
                &output,
            )
        }
        Cmd::Witness { input, output } => {
            let (cfg, label) = load(&input)?;
            let verdict = classify(&cfg)?;
            if !matches!(verdict, Verdict::Wild { .. }) {
                return Err(Error::Precondition(format!(
                    "`{label}` is {}; only wild configurations have a witness band",
                    verdict.summary()
                )));
            }
            let pres = compile(&cfg)?;
            let witness = wildness_witness(&cfg, &pres)?;
            emit_json(
                &json!({
                    "input": label,
                    "verdict": verdict_document(&verdict, Some((&witness, &pres))),
                }),
                &output,
            )
        }
        Cmd::Cut { input, cut: spec, output } => {
            let (cfg, label) = load(&input)?;
            let pres = compile(&cfg)?;
            let dim_parent = pres.algebra_dim();
            match spec {
                Some(s) => {
                    let c = AdmissibleCut::parse(&pres, &s)?;
                    let cp = cut::cut(&pres, &c)?;
                    emit_json(
                        &json!({
                            "input": label,
                            "cut": c.display(&pres),
                            "parent_dim": dim_parent,
                            "dim": cp.algebra_dim()?,
                            "almost_gentle": cut::is_almost_gentle(&cp),
                            "gentle": cut::is_gentle(&cp),
                            "presentation": serde_json::to_value(cut::to_doc(&cp))
                                .expect("document serializes"),
                        }),
                        &output,
                    )
                }
                None => {
                    let cuts = enumerate_cuts(&pres, 64)?;
                    let rows: Vec<Value> = cuts
                        .iter()
                        .map(|c| -> Result<Value> {
                            let cp = cut::cut(&pres, c)?;
                            Ok(json!({
                                "cut": c.display(&pres),
                                "dim": cp.algebra_dim()?,
                                "almost_gentle": cut::is_almost_gentle(&cp),
                                "gentle": cut::is_gentle(&cp),
                            }))
                        })
                        .collect::<Result<_>>()?;
                    emit_json(
                        &json!({
                            "input": label,
                            "parent_dim": dim_parent,
                            "count": rows.len(),
                            "cuts": rows,
                        }),
                        &output,
                    )
                }
            }
        }
        Cmd::Normalize { input, emit_intermediate, output } => {
            let (cfg, label) = load(&input)?;
            let (star, log) = normalize_to_star(&cfg)?;
            let mut doc = json!({
                "input": label,
                "steps": log.len(),
                "moves": serde_json::to_value(&log.records).expect("records serialize"),
                "star": format::to_doc(&star),
            });
            if emit_intermediate {
                let mut current = cfg.clone();
                let mut intermediates = Vec::new();
                for rec in &log.records {
                    let (next, _) = reduction_move(
                        &current,
                        &VertexId::from(rec.u.as_str()),
                        &VertexId::from(rec.u_prime.as_str()),
                    )?;
                    intermediates.push(serde_json::to_value(format::to_doc(&next))
                        .expect("document serializes"));
                    current = next;
                }
                doc["intermediates"] = Value::Array(intermediates);
            }
            emit_json(&doc, &output)
        }
        Cmd::Split { input, output } => {
            let (cfg, label) = load(&input)?;
            let out_cfg = multiplicity_split(&cfg, &default_split_choices(&cfg))?;
            emit_json(
                &json!({
                    "input": label,
                    "added_vertices": out_cfg.vertices().len() - cfg.vertices().len(),
                    "added_polygons": out_cfg.polygons().len() - cfg.polygons().len(),
                    "configuration": format::to_doc(&out_cfg),
                }),
                &output,
            )
        }
        Cmd::Homdim { input, lambda, max_len, output } => {
            let (cfg, label) = load(&input)?;
            let pres = compile(&cfg)?;
            match lambda {
                Some(spec) => {
                    let lambdas = parse_lambdas(&spec)?;
                    let band = leading_band(&pres, max_len)?;
                    let family: Vec<Representation> = lambdas
                        .iter()
                        .map(|l| realize_band_module(&pres, &band, 1, l))
                        .collect::<Result<_>>()?;
                    let table: Vec<Vec<usize>> = family
                        .iter()
                        .map(|m| {
                            family
                                .iter()
                                .map(|n| hom_dim(&pres, m, n).dimension)
                                .collect()
                        })
                        .collect();
                    emit_json(
                        &json!({
                            "input": label,
                            "band": band.display(&pres),
                            "lambda": lambdas.iter().map(|l| l.to_string()).collect::<Vec<_>>(),
                            "hom_table": table,
                        }),
                        &output,
                    )
                }
                None => {
                    let projectives: Vec<(String, Representation)> = pres
                        .vertices()
                        .iter()
                        .map(|x| {
                            projective_representation(&pres, x).map(|p| (x.to_string(), p))
                        })
                        .collect::<Result<_>>()?;
                    let table: Vec<Vec<usize>> = projectives
                        .iter()
                        .map(|(_, m)| {
                            projectives
                                .iter()
                                .map(|(_, n)| hom_dim(&pres, m, n).dimension)
                                .collect()
                        })
                        .collect();
                    emit_json(
                        &json!({
                            "input": label,
                            "projectives": projectives.iter().map(|(x, _)| x).collect::<Vec<_>>(),
                            "hom_table": table,
                        }),
                        &output,
                    )
                }
            }
        }
        Cmd::Syzygy { input, lambda, k, max_len, seed, output } => {
            let (cfg, label) = load(&input)?;
            let pres = compile(&cfg)?;
            let band = leading_band(&pres, max_len)?;
            let lambdas = match lambda {
                Some(spec) => parse_lambdas(&spec)?,
                None => {
                    let mut rng = StdRng::seed_from_u64(seed);
                    vec![Rat::from_integer(rng.gen_range(1..=9).into())]
                }
            };
            let mut rows = Vec::new();
            for l in &lambdas {
                let m = realize_band_module(&pres, &band, 1, l)?;
                let mut omegas = Vec::new();
                let mut current = m.clone();
                for _ in 0..=k {
                    omegas.push(dims_json(&current.dimvec()));
                    current = syzygy(&pres, &current, 1)?;
                }
                let tau = tau_dimvec(&pres, &m)
                    .map(|d| dims_json(&d))
                    .unwrap_or(Value::Null);
                rows.push(json!({
                    "lambda": l.to_string(),
                    "module": rep_to_doc(&pres, &m),
                    "omega_dims": omegas,
                    "tau_dims": tau,
                }));
            }
            emit_json(
                &json!({
                    "input": label,
                    "band": band.display(&pres),
                    "k": k,
                    "family": rows,
                }),
                &output,
            )
        }
        Cmd::VerifySuite { input, seed, output } => {
            let (cfg, label) = load(&input)?;
            let report = suite::verify(&cfg, &label, seed);
            let passed = report.passed;
            let failed: Vec<String> = report
                .checks
                .iter()
                .filter(|c| !c.passed)
                .map(|c| c.name.clone())
                .collect();
            emit_json(&serde_json::to_value(report).expect("report serializes"), &output)?;
            if passed {
                Ok(())
            } else {
                Err(Error::Precondition(format!(
                    "verify-suite failed: {}",
                    failed.join(", ")
                )))
            }
        }
    }
}
