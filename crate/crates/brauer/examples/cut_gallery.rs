//! Every admissible cut of the triangle-with-legs configuration: each one
//! halves the algebra and lands in the almost-gentle class.

use brauer::builtin::builtin;
use brauer::cut::{self, enumerate_cuts, is_almost_gentle, is_gentle};
use brauer::quiver::compile;

fn main() {
    let cfg = builtin("star_1_1_1").expect("builtin");
    let pres = compile(&cfg).expect("compiles");
    let dim_a = pres.algebra_dim();
    println!("parent algebra dimension: {dim_a}");

    for c in enumerate_cuts(&pres, 64).expect("cuts") {
        let cp = cut::cut(&pres, &c).expect("cut applies");
        let dim_b = cp.algebra_dim().expect("finite");
        println!(
            "  cut {{{}}}: dim {dim_b}{}{}",
            c.display(&pres),
            if is_almost_gentle(&cp) { ", almost gentle" } else { "" },
            if is_gentle(&cp) { ", gentle" } else { "" },
        );
        assert_eq!(2 * dim_b, dim_a);
    }

    // a Brauer graph cut is gentle outright
    let graph = brauer::config::ConfigBuilder::new()
        .polygon("e1", &["u", "v"])
        .polygon("e2", &["v", "w"])
        .polygon("e3", &["w", "u"])
        .ordering("u", &[("e3", 1), ("e1", 0)])
        .ordering("v", &[("e1", 1), ("e2", 0)])
        .ordering("w", &[("e2", 1), ("e3", 0)])
        .default_vertices()
        .build()
        .expect("triangle graph");
    let gpres = compile(&graph).expect("compiles");
    println!("\ntriangle Brauer graph:");
    for c in enumerate_cuts(&gpres, 8).expect("cuts") {
        let cp = cut::cut(&gpres, &c).expect("cut applies");
        println!(
            "  cut {{{}}}: dim {}, gentle: {}",
            c.display(&gpres),
            cp.algebra_dim().expect("finite"),
            is_gentle(&cp)
        );
        assert!(is_gentle(&cp));
    }
}
