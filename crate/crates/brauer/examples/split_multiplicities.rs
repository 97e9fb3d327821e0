//! Trade multiplicities for 2-gon cycles: split the chained-triangles
//! configuration and compare before and after.

use brauer::builtin::builtin;
use brauer::classify::classify;
use brauer::moves::{default_split_choices, multiplicity_split};

fn main() {
    let cfg = builtin("indfunc").expect("builtin");
    let heavy: Vec<String> = cfg
        .vertices()
        .iter()
        .filter(|(_, &m)| m > 1)
        .map(|(v, &m)| format!("{v} (e={m})"))
        .collect();
    println!("heavy vertices: {}", heavy.join(", "));
    println!("before: {} polygons, {}", cfg.polygons().len(),
        classify(&cfg).expect("classifies").summary());

    let picks = default_split_choices(&cfg);
    let out = multiplicity_split(&cfg, &picks).expect("splits");
    println!(
        "after:  {} polygons, {}",
        out.polygons().len(),
        classify(&out).expect("classifies").summary()
    );
    assert!(out.analyze().is_multiplicity_free);

    for (v, _) in cfg.vertices().iter().filter(|(_, &m)| m > 1) {
        let germs: Vec<String> = out
            .ordering(v)
            .iter()
            .map(|g| g.polygon.to_string())
            .collect();
        println!("  new cycle at {v}: [{}]", germs.join(", "));
    }
}
