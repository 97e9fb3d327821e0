//! Verdicts for every builtin, plus the exceptional-star sweep: exactly six
//! arm triples stay tame.

use brauer::builtin::{builtin, NAMES};
use brauer::classify::{classify, TameCase, Verdict};

fn main() {
    println!("builtin configurations:");
    for name in NAMES {
        if *name == "star_m1_m2_m3" {
            continue; // pattern entry, swept below
        }
        let cfg = builtin(name).expect("builtin");
        let verdict = classify(&cfg).expect("classifies");
        println!("  {name:<12} {}", verdict.summary());
    }

    println!("\nstar sweep (m1 <= m2 <= m3 <= 8):");
    let mut tame = Vec::new();
    for m1 in 1..=8usize {
        for m2 in m1..=8 {
            for m3 in m2..=8 {
                let cfg = builtin(&format!("star_{m1}_{m2}_{m3}")).expect("star");
                if let Verdict::Tame(TameCase::ExceptionalStar { arms, family }) =
                    classify(&cfg).expect("classifies")
                {
                    tame.push((arms, family.code()));
                }
            }
        }
    }
    for (arms, family) in &tame {
        println!("  ({},{},{})  {family}", arms.0, arms.1, arms.2);
    }
    assert_eq!(tame.len(), 6);
}
