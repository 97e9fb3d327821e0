//! Normalize a caterpillar-armed tree to star form, one reduction move at a
//! time, and watch the verdict stay put.

use brauer::builtin::builtin;
use brauer::classify::classify;
use brauer::config::ConfigBuilder;
use brauer::format;
use brauer::moves::{is_star, normalize_to_star};

fn main() {
    // triangle with a two-edge caterpillar on one corner and single legs on
    // the others: same arm lengths as star_1_1_2, different shape
    let cfg = ConfigBuilder::new()
        .polygon("t", &["c1", "c2", "c3"])
        .polygon("l1", &["c1", "z1"])
        .polygon("l2", &["c2", "z2"])
        .polygon("m1", &["c3", "z3"])
        .polygon("m2", &["z3", "z4"])
        .ordering("c1", &[("t", 0), ("l1", 0)])
        .ordering("c2", &[("t", 1), ("l2", 0)])
        .ordering("c3", &[("t", 2), ("m1", 0)])
        .ordering("z3", &[("m1", 1), ("m2", 0)])
        .default_vertices()
        .build()
        .expect("caterpillar tree");

    println!("before: {}", classify(&cfg).expect("classifies").summary());
    println!("star already? {}", is_star(&cfg));

    let (star, log) = normalize_to_star(&cfg).expect("normalizes");
    for rec in &log.records {
        println!(
            "  move: {} -> {} carrying [{}]",
            rec.u,
            rec.u_prime,
            rec.moved.join(", ")
        );
    }
    println!("after {} move(s): star? {}", log.len(), is_star(&star));
    println!("after:  {}", classify(&star).expect("classifies").summary());

    // the log is a proof object: replaying it reproduces the star
    let replayed = log.replay(&cfg).expect("replays");
    assert_eq!(format::serialize(&replayed), format::serialize(&star));

    // and the result agrees with the builtin star of the same arm profile
    let reference = builtin("star_1_1_2").expect("builtin");
    assert_eq!(
        classify(&reference).expect("classifies").summary(),
        classify(&star).expect("classifies").summary()
    );
    println!("replay OK; verdict matches star_1_1_2");
}
