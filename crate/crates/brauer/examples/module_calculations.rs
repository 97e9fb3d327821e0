//! Exact module arithmetic: the one-parameter family on the 4-gon cross,
//! Hom tables, and a syzygy ladder that outgrows its module.

use brauer::builtin::builtin;
use brauer::matrix::rat;
use brauer::modules::{
    check_relations, end_dim, hom_dim, is_indecomposable, quad_circle_module,
    realize_band_module, syzygy, tau_dimvec,
};
use brauer::quiver::compile;
use brauer::strings::{canonical_band, Letter};

fn main() {
    // the branched family on the plain 4-gon cross
    let cfg = builtin("quadband1").expect("builtin");
    let pres = compile(&cfg).expect("compiles");
    let arrow = |tgt: &str| {
        pres.arrows()
            .iter()
            .position(|a| a.source.as_str() == "x" && a.target.as_str() == tgt)
            .expect("leg arrow")
    };
    let arrows = [arrow("y1"), arrow("y2"), arrow("y3"), arrow("y4")];
    let family: Vec<_> = [1i64, 2, 3]
        .iter()
        .map(|&l| quad_circle_module(&pres, arrows, &rat(l)).expect("realizes"))
        .collect();
    for (i, m) in family.iter().enumerate() {
        assert!(check_relations(&pres, m).expect("checks").is_clean());
        println!(
            "M_{}: dim {}, End dim {}, indecomposable: {}",
            i + 1,
            m.total_dim(),
            end_dim(&pres, m),
            is_indecomposable(&pres, m)
        );
    }
    println!("cross Hom dims (row -> column):");
    for m in &family {
        let row: Vec<usize> =
            family.iter().map(|n| hom_dim(&pres, m, n).dimension).collect();
        println!("  {row:?}");
    }

    // band modules over the two-loop configuration: Ω² strictly grows
    let cfg = builtin("a1").expect("builtin");
    let pres = compile(&cfg).expect("compiles");
    let loop_at = |v: &str| {
        pres.arrows()
            .iter()
            .position(|a| a.vertex.as_str() == v)
            .expect("loop arrow")
    };
    let band = canonical_band(
        &pres,
        &[
            Letter::formal_inverse(loop_at("v1")),
            Letter::direct(loop_at("v2")),
        ],
    )
    .expect("band");
    let show = |d: &brauer::strings::DimVector| {
        let inner: Vec<String> = d.iter().map(|(p, n)| format!("{p}:{n}")).collect();
        format!("{{{}}}", inner.join(", "))
    };
    println!("\nband {} over the two-loop triangle:", band.display(&pres));
    for l in [1i64, 2, 3] {
        let m = realize_band_module(&pres, &band, 1, &rat(l)).expect("realizes");
        let o1 = syzygy(&pres, &m, 1).expect("syzygy");
        let o2 = syzygy(&pres, &m, 2).expect("syzygy");
        println!(
            "  λ={l}: dims {}, Ω dims {}, Ω² dims {}, τ dims {}",
            show(&m.dimvec()),
            show(&o1.dimvec()),
            show(&o2.dimvec()),
            show(&tau_dimvec(&pres, &m).expect("not projective"))
        );
    }
}
