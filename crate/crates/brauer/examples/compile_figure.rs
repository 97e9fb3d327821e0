//! Compile the four-polygon showcase configuration and walk through what
//! comes out: arrows grouped by vertex cycle, the relation census, and the
//! projective dimensions.

use brauer::builtin::builtin;
use brauer::quiver::{compile, Relation};

fn main() {
    let cfg = builtin("fig1").expect("builtin");
    let pres = compile(&cfg).expect("compiles");

    println!("quiver vertices: {:?}", pres.vertices());
    println!("\narrows by configuration vertex:");
    for (v, _) in cfg.vertices() {
        let arrows: Vec<String> = pres
            .arrows()
            .iter()
            .filter(|a| &a.vertex == v)
            .map(|a| format!("{}: {} -> {}", a.id, a.source, a.target))
            .collect();
        if !arrows.is_empty() {
            println!("  at {v}: {}", arrows.join(", "));
        }
    }

    let (mut truncated, mut commutation, mut zero) = (0, 0, 0);
    for rel in pres.relations() {
        match rel {
            Relation::Truncated(_) => truncated += 1,
            Relation::Commutation(..) => commutation += 1,
            Relation::Zero(..) => zero += 1,
        }
    }
    println!("\nrelations: {truncated} truncated, {commutation} commutation, {zero} zero");

    println!("\nprojectives:");
    let mut total = 0;
    for x in pres.vertices() {
        let dim = pres.projective_basis(x).expect("projective").dim();
        total += dim;
        println!("  dim P({x}) = {dim}");
    }
    println!("algebra dimension = {total} = {}", pres.algebra_dim());
}
