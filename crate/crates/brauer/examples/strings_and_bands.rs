//! String and band combinatorics on the second wild witness configuration:
//! enumerate short words, show the canonical band, and check the published
//! witness walk.

use brauer::builtin::builtin;
use brauer::quiver::compile;
use brauer::strings::{
    enumerate_bands, enumerate_strings, string_module_dimvec, witness_band,
};

fn main() {
    let cfg = builtin("a2").expect("builtin");
    let pres = compile(&cfg).expect("compiles");

    let words = enumerate_strings(&pres, 3);
    println!("strings of length <= 3: {}", words.len());
    for w in words.iter().take(8) {
        let dims: Vec<String> = string_module_dimvec(&pres, w)
            .iter()
            .map(|(p, n)| format!("{p}:{n}"))
            .collect();
        println!("  {:<24} dims {{{}}}", w.display(&pres), dims.join(", "));
    }

    println!("\nbands of length <= 4:");
    for b in enumerate_bands(&pres, 4) {
        println!("  {}", b.display(&pres));
    }

    // the distinguished band wraps the doubled edge at the central polygon
    let witness = witness_band(&cfg, &pres, &"x".into()).expect("witness");
    println!("\nwitness band at x: {}", witness.display(&pres));
}
