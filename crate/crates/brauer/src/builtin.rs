//! Ready-made configurations, addressable by name from the CLI, the examples,
//! and the test suite.
//!
//! `star_m1_m2_m3` is a name family: `star_1_2_3` builds the one-triangle star
//! whose three fans carry 1, 2 and 3 edges.

use crate::config::{BrauerConfiguration, ConfigBuilder};
use crate::{Error, Result};

/// Fixed builtin names (the star family is represented by its pattern).
pub const NAMES: &[&str] = &[
    "fig1",
    "loopcase",
    "star_m1_m2_m3",
    "caseii_r1",
    "caseiv",
    "quadband1",
    "quadband2",
    "a1",
    "a2",
    "a3",
    "a4",
    "indfunc",
];

/// Resolve a builtin configuration by name.
pub fn builtin(name: &str) -> Result<BrauerConfiguration> {
    match name {
        "fig1" => fig1(),
        "loopcase" => loopcase(),
        "caseii_r1" => caseii_r1(),
        "caseiv" => quad_cross("e"),
        "quadband1" => quad_cross("y"),
        "quadband2" => quadband2(),
        "a1" => a1(),
        "a2" => a2(),
        "a3" => a3(),
        "a4" => a4(),
        "indfunc" => indfunc(),
        _ => match parse_star(name) {
            Some((m1, m2, m3)) => star(m1, m2, m3),
            None => Err(Error::Parse(format!(
                "unknown builtin configuration `{name}` (expected one of {} or star_<m1>_<m2>_<m3>)",
                NAMES.join(", ")
            ))),
        },
    }
}

fn parse_star(name: &str) -> Option<(usize, usize, usize)> {
    let rest = name.strip_prefix("star_")?;
    let parts: Vec<&str> = rest.split('_').collect();
    if parts.len() != 3 {
        return None;
    }
    let mut m = [0usize; 3];
    for (i, p) in parts.iter().enumerate() {
        m[i] = p.parse().ok().filter(|&v| v >= 1)?;
    }
    Some((m[0], m[1], m[2]))
}

/// The running example: one 4-gon `x` folded onto `v4`, a self-folded
/// 2-gon `y` at `v1`, connecting edges `z` and `w`, and multiplicity 2 at `v3`.
fn fig1() -> Result<BrauerConfiguration> {
    ConfigBuilder::new()
        .vertex("v1", 1)
        .vertex("v2", 1)
        .vertex("v3", 2)
        .vertex("v4", 1)
        .vertex("v5", 1)
        .polygon("x", &["v1", "v2", "v4", "v4"])
        .polygon("y", &["v1", "v1"])
        .polygon("z", &["v2", "v3"])
        .polygon("w", &["v4", "v5"])
        .ordering("v1", &[("x", 0), ("y", 0), ("y", 1)])
        .ordering("v2", &[("x", 1), ("z", 0)])
        .ordering("v4", &[("w", 0), ("x", 3), ("x", 2)])
        .build()
}

/// A single edge between two plain vertices: the smallest valid configuration.
fn loopcase() -> Result<BrauerConfiguration> {
    ConfigBuilder::new()
        .vertex("u", 1)
        .vertex("v", 1)
        .polygon("e", &["u", "v"])
        .build()
}

/// One triangle with fans of `m1`, `m2`, `m3` pendant edges at its corners.
fn star(m1: usize, m2: usize, m3: usize) -> Result<BrauerConfiguration> {
    let mut b = ConfigBuilder::new()
        .vertex("u1", 1)
        .vertex("u2", 1)
        .vertex("u3", 1)
        .polygon("t", &["u1", "u2", "u3"]);
    for (i, &m) in [m1, m2, m3].iter().enumerate() {
        let u = format!("u{}", i + 1);
        let mut germs: Vec<(String, usize)> = vec![("t".to_string(), i)];
        for j in 1..=m {
            let w = format!("w{}_{}", i + 1, j);
            let e = format!("e{}_{}", i + 1, j);
            b = b.vertex(&w, 1);
            b = b.polygon_owned(&e, &[u.clone(), w]);
            germs.push((e, 0));
        }
        let refs: Vec<(&str, usize)> = germs.iter().map(|(p, s)| (p.as_str(), *s)).collect();
        b = b.ordering(&u, &refs);
    }
    b.build()
}

/// One triangle with two pendant legs, glued along a single edge to a
/// multiplicity-3 vertex.
fn caseii_r1() -> Result<BrauerConfiguration> {
    ConfigBuilder::new()
        .vertex("u1", 1)
        .vertex("v1", 1)
        .vertex("vp1", 1)
        .vertex("w1", 1)
        .vertex("wp1", 1)
        .vertex("g1", 3)
        .polygon("t1", &["u1", "v1", "w1"])
        .polygon("p1", &["v1", "vp1"])
        .polygon("q1", &["w1", "wp1"])
        .polygon("g", &["u1", "g1"])
        .ordering("u1", &[("t1", 0), ("g", 0)])
        .ordering("v1", &[("t1", 1), ("p1", 0)])
        .ordering("w1", &[("t1", 2), ("q1", 0)])
        .build()
}

/// The 4-gon cross: a square with a pendant edge at each corner, all
/// multiplicities one. `leg` prefixes the leg polygon names.
fn quad_cross(leg: &str) -> Result<BrauerConfiguration> {
    let mut b = ConfigBuilder::new().polygon("x", &["u1", "u2", "u3", "u4"]);
    for i in 1..=4 {
        let u = format!("u{i}");
        let w = format!("w{i}");
        let e = format!("{leg}{i}");
        b = b.vertex(&u, 1);
        b = b.vertex(&w, 1);
        b = b.polygon_owned(&e, &[u.clone(), w]);
        b = b.ordering_owned(&u, &[("x".to_string(), i - 1), (e, 0)]);
    }
    b.build()
}

/// A 4-gon with one multiplicity-2 corner of valency one (giving a quiver
/// loop) and pendant edges at the other three corners.
fn quadband2() -> Result<BrauerConfiguration> {
    let mut b = ConfigBuilder::new()
        .vertex("v", 2)
        .polygon("x", &["v", "u2", "u3", "u4"]);
    for i in 2..=4 {
        let u = format!("u{i}");
        let w = format!("w{i}");
        let y = format!("y{i}");
        b = b.vertex(&u, 1);
        b = b.vertex(&w, 1);
        b = b.polygon_owned(&y, &[u.clone(), w]);
        b = b.ordering_owned(&u, &[("x".to_string(), i - 1), (y, 0)]);
    }
    b.build()
}

/// Triangle with two multiplicity-2 corners and one pendant edge.
fn a1() -> Result<BrauerConfiguration> {
    ConfigBuilder::new()
        .vertex("v1", 2)
        .vertex("v2", 2)
        .vertex("u", 1)
        .vertex("s", 1)
        .polygon("t", &["v1", "v2", "u"])
        .polygon("e", &["u", "s"])
        .ordering("u", &[("t", 2), ("e", 0)])
        .build()
}

/// A self-folded triangle with a pendant edge, all multiplicities one.
fn a2() -> Result<BrauerConfiguration> {
    ConfigBuilder::new()
        .vertex("p", 1)
        .vertex("q", 1)
        .vertex("s", 1)
        .polygon("x", &["p", "q", "q"])
        .polygon("e", &["p", "s"])
        .ordering("p", &[("x", 0), ("e", 0)])
        .ordering("q", &[("x", 1), ("x", 2)])
        .build()
}

/// Triangle with one multiplicity-2 corner, a loop edge at another corner,
/// and a pendant edge at the third.
fn a3() -> Result<BrauerConfiguration> {
    ConfigBuilder::new()
        .vertex("v3", 2)
        .vertex("b", 1)
        .vertex("c", 1)
        .vertex("s", 1)
        .polygon("t", &["v3", "b", "c"])
        .polygon("y", &["b", "b"])
        .polygon("e", &["c", "s"])
        .ordering("b", &[("t", 1), ("y", 0), ("y", 1)])
        .ordering("c", &[("t", 2), ("e", 0)])
        .build()
}

/// Triangle with loop edges at two corners and a pendant edge at the third,
/// all multiplicities one.
fn a4() -> Result<BrauerConfiguration> {
    ConfigBuilder::new()
        .vertex("a", 1)
        .vertex("b", 1)
        .vertex("c", 1)
        .vertex("s", 1)
        .polygon("t", &["a", "b", "c"])
        .polygon("yl", &["a", "a"])
        .polygon("yr", &["b", "b"])
        .polygon("e", &["c", "s"])
        .ordering("a", &[("t", 0), ("yl", 0), ("yl", 1)])
        .ordering("b", &[("t", 1), ("yr", 0), ("yr", 1)])
        .ordering("c", &[("t", 2), ("e", 0)])
        .build()
}

/// Three legged triangles chained along a two-edge core path, with
/// multiplicity 2 at both end vertices of the path.
fn indfunc() -> Result<BrauerConfiguration> {
    let mut b = ConfigBuilder::new()
        .vertex("t1", 2)
        .vertex("t2", 2)
        .vertex("u", 1)
        .polygon("y1", &["t1", "a1", "a2"])
        .polygon("tri2", &["u", "b1", "b2"])
        .polygon("tri3", &["t2", "c1", "c2"])
        .polygon("g1", &["t1", "u"])
        .polygon("y2", &["u", "t2"])
        .ordering("t1", &[("y1", 0), ("g1", 0)])
        .ordering("u", &[("tri2", 0), ("g1", 1), ("y2", 0)])
        .ordering("t2", &[("y2", 1), ("tri3", 0)]);
    let corners = [
        ("a1", "y1", 1),
        ("a2", "y1", 2),
        ("b1", "tri2", 1),
        ("b2", "tri2", 2),
        ("c1", "tri3", 1),
        ("c2", "tri3", 2),
    ];
    for (v, poly, slot) in corners {
        let far = format!("f{v}");
        let leg = format!("l{v}");
        b = b.vertex(v, 1);
        b = b.vertex(&far, 1);
        b = b.polygon_owned(&leg, &[v.to_string(), far]);
        b = b.ordering_owned(v, &[(poly.to_string(), slot), (leg, 0)]);
    }
    b.build()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver;

    #[test]
    fn every_builtin_validates_and_compiles() {
        let names = [
            "fig1",
            "loopcase",
            "star_1_1_1",
            "star_1_2_3",
            "star_2_2_2",
            "caseii_r1",
            "caseiv",
            "quadband1",
            "quadband2",
            "a1",
            "a2",
            "a3",
            "a4",
            "indfunc",
        ];
        for name in names {
            let cfg = builtin(name).unwrap();
            let report = cfg.validate();
            assert!(report.is_valid(), "{name}: {report}");
            quiver::compile(&cfg).unwrap_or_else(|e| panic!("{name}: {e}"));
        }
    }

    #[test]
    fn star_names_parse_strictly() {
        assert!(builtin("star_1_2").is_err());
        assert!(builtin("star_0_1_2").is_err());
        assert!(builtin("star_1_2_3_4").is_err());
        assert!(builtin("star_a_b_c").is_err());
        assert!(builtin("nonsense").is_err());
    }

    #[test]
    fn star_shape_counts() {
        let cfg = builtin("star_1_2_3").unwrap();
        assert_eq!(cfg.polygons().len(), 1 + 6);
        assert_eq!(cfg.vertices().len(), 3 + 6);
        let a = cfg.analyze();
        assert!(a.is_tree && a.is_multiplicity_free);
        assert_eq!(a.max_polygon_size, 3);
        // fan corners have valency 1 + m
        assert_eq!(cfg.valency(&"u3".into()), 4);
    }

    #[test]
    fn indfunc_shape() {
        let cfg = builtin("indfunc").unwrap();
        assert_eq!(cfg.vertices().len(), 15);
        assert_eq!(cfg.polygons().len(), 11);
        assert_eq!(cfg.multiplicity(&"t1".into()), 2);
        assert_eq!(cfg.multiplicity(&"t2".into()), 2);
        assert_eq!(cfg.valency(&"u".into()), 3);
        let a = cfg.analyze();
        assert!(a.is_tree);
        assert!(!a.is_multiplicity_free);
    }

    #[test]
    fn self_folded_builtins() {
        for (name, folded) in [("a2", "x"), ("a3", "y"), ("fig1", "x")] {
            let cfg = builtin(name).unwrap();
            let a = cfg.analyze();
            assert!(
                a.self_folded_polygons.contains(&folded.into()),
                "{name} should fold {folded}"
            );
        }
    }
}
