//! Self-check battery for a single configuration: every piece of the
//! toolkit exercised once with its own internal cross-checks. The CLI
//! exposes this as `verify-suite`.

use rand::prelude::*;
use rand::rngs::StdRng;
use serde::Serialize;

use crate::classify::classify;
use crate::config::BrauerConfiguration;
use crate::cut::{self, enumerate_cuts};
use crate::matrix::rat;
use crate::modules::{
    check_relations, is_indecomposable, projective_representation, realize_band_module,
    realize_string_module, syzygy, tau_dimvec,
};
use crate::moves::{is_star, multiplicity_split, normalize_to_star, default_split_choices};
use crate::quiver::compile;
use crate::strings::{enumerate_bands, enumerate_strings, is_string, string_module_dimvec};
use crate::{format, Result};

#[derive(Serialize)]
pub struct SuiteCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Serialize)]
pub struct SuiteReport {
    pub input: String,
    pub passed: bool,
    pub checks: Vec<SuiteCheck>,
}

impl SuiteReport {
    fn push(&mut self, name: &str, outcome: Result<String>) {
        let (passed, detail) = match outcome {
            Ok(d) => (true, d),
            Err(e) => (false, e.to_string()),
        };
        self.passed &= passed;
        self.checks.push(SuiteCheck { name: name.to_string(), passed, detail });
    }
}

fn ensure(cond: bool, msg: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(crate::Error::Precondition(msg.to_string()))
    }
}

/// Run the battery. Deterministic in `seed` (used for sampled band
/// parameters).
pub fn verify(cfg: &BrauerConfiguration, label: &str, seed: u64) -> SuiteReport {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut report =
        SuiteReport { input: label.to_string(), passed: true, checks: Vec::new() };

    report.push("round-trip", (|| {
        let text = format::serialize(cfg);
        let back = format::parse(&text)?;
        ensure(format::serialize(&back) == text, "serialize→parse→serialize drifted")?;
        Ok(format!("{} bytes stable", text.len()))
    })());

    let pres = match compile(cfg) {
        Ok(p) => p,
        Err(e) => {
            report.push("compile", Err(e));
            return report;
        }
    };
    report.push("compile", (|| {
        let dim = pres.algebra_dim();
        let by_projectives: usize = pres
            .vertices()
            .iter()
            .map(|x| pres.projective_basis(x).map(|pb| pb.dim()))
            .sum::<Result<usize>>()?;
        ensure(
            dim == by_projectives,
            "algebra dimension disagrees with the projective sum",
        )?;
        Ok(format!(
            "{} arrows, {} relations, dim {}",
            pres.arrows().len(),
            pres.relations().len(),
            dim
        ))
    })());

    report.push("projectives", (|| {
        for x in pres.vertices() {
            let p = projective_representation(&pres, x)?;
            let rels = check_relations(&pres, &p)?;
            ensure(rels.is_clean(), &format!("P({x}) violates relations"))?;
            ensure(
                syzygy(&pres, &p, 1)?.is_zero(),
                &format!("P({x}) has a nonzero syzygy"),
            )?;
        }
        Ok(format!("{} projectives clean", pres.vertices().len()))
    })());

    report.push("classify", (|| {
        let verdict = classify(cfg)?;
        Ok(verdict.summary())
    })());

    report.push("strings", (|| {
        let words = enumerate_strings(&pres, 3);
        for w in &words {
            ensure(is_string(&pres, w)?, "enumerated word fails its own check")?;
        }
        for w in words.iter().take(10) {
            let m = realize_string_module(&pres, w)?;
            ensure(
                m.dimvec() == string_module_dimvec(&pres, w),
                "string module dims drifted",
            )?;
            ensure(is_indecomposable(&pres, &m), "string module decomposed")?;
        }
        Ok(format!("{} words to length 3", words.len()))
    })());

    let bands = enumerate_bands(&pres, 4);
    report.push("bands", (|| {
        let lambda = rat(rng.gen_range(1..=9));
        match bands.first() {
            Some(b) => {
                let m = realize_band_module(&pres, b, 1, &lambda)?;
                ensure(
                    check_relations(&pres, &m)?.is_clean(),
                    "band module violates relations",
                )?;
                let tau = tau_dimvec(&pres, &m)?;
                Ok(format!(
                    "{} bands to length 4; M({}, λ={lambda}) has τ dims {:?}",
                    bands.len(),
                    b.display(&pres),
                    tau
                ))
            }
            None => Ok("no bands to length 4".to_string()),
        }
    })());

    let analysis = cfg.analyze();
    report.push("cuts", (|| {
        if !analysis.is_multiplicity_free {
            return Ok("skipped: configuration has multiplicities".to_string());
        }
        if pres.special_loop_case() {
            return Ok("skipped: special loop has no halving cut".to_string());
        }
        let cuts = enumerate_cuts(&pres, 64)?;
        let dim_a = pres.algebra_dim();
        for c in &cuts {
            let cp = cut::cut(&pres, c)?;
            let dim_b = cp.algebra_dim()?;
            ensure(2 * dim_b == dim_a, "cut algebra is not half the size")?;
            ensure(cut::is_almost_gentle(&cp), "cut algebra is not almost gentle")?;
        }
        Ok(format!("{} cuts halve dim {} exactly", cuts.len(), dim_a))
    })());

    report.push("normalize", (|| {
        let one_triangle = analysis.is_multiplicity_free
            && analysis.is_tree
            && analysis.max_polygon_size <= 3
            && cfg.polygons().iter().filter(|p| p.size() == 3).count() == 1;
        if !one_triangle {
            return Ok("skipped: not a one-triangle multiplicity-free tree".to_string());
        }
        let before = classify(cfg)?;
        let (star, log) = normalize_to_star(cfg)?;
        ensure(is_star(&star), "normalization did not reach star form")?;
        ensure(
            classify(&star)?.summary() == before.summary(),
            "verdict changed under normalization",
        )?;
        ensure(
            format::serialize(&log.replay(cfg)?) == format::serialize(&star),
            "move log fails to replay",
        )?;
        Ok(format!("{} moves to star form", log.len()))
    })());

    report.push("split", (|| {
        if analysis.is_multiplicity_free {
            return Ok("skipped: already multiplicity-free".to_string());
        }
        let out = multiplicity_split(cfg, &default_split_choices(cfg))?;
        ensure(
            out.analyze().is_multiplicity_free,
            "split output kept a multiplicity",
        )?;
        Ok(format!(
            "{} → {} polygons, multiplicity-free",
            cfg.polygons().len(),
            out.polygons().len()
        ))
    })());

    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::builtin::builtin;

    #[test]
    fn the_builtins_pass_their_own_battery() {
        for name in [
            "fig1",
            "loopcase",
            "star_1_2_3",
            "caseii_r1",
            "caseiv",
            "quadband1",
            "quadband2",
            "a1",
            "a2",
            "a3",
            "a4",
            "indfunc",
        ] {
            let cfg = builtin(name).unwrap();
            let report = verify(&cfg, name, 0);
            for c in &report.checks {
                assert!(c.passed, "{name}/{}: {}", c.name, c.detail);
            }
        }
    }

    #[test]
    fn reports_serialize() {
        let report = verify(&builtin("a1").unwrap(), "a1", 0);
        let text = serde_json::to_string_pretty(&report).unwrap();
        assert!(text.contains("\"passed\": true"));
    }
}
