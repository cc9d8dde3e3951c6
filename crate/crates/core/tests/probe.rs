// Temporary pipeline probe; replaced by the acceptance suite.

use std::time::Instant;

use venn_core::analysis::{fully_reducible_bruteforce, is_venn};
use venn_core::construct::edwards_grid;

#[test]
#[ignore]
fn probe_pipeline() {
    for n in 2..=6 {
        let t = Instant::now();
        let g = edwards_grid(n, 1024).unwrap();
        let build = t.elapsed();
        let t = Instant::now();
        let c = g.compact();
        let compact = t.elapsed();
        let counts = c.edge_counts();
        println!(
            "n={n}: build {build:?}, compact {compact:?} -> shape {:?}, e = {}, r = {}, venn = {}",
            c.shape(),
            counts.total,
            counts.regions,
            is_venn(&c).unwrap(),
        );
    }

    let e4 = edwards_grid(4, 1024).unwrap().compact();
    let t = Instant::now();
    let l1 = e4.lift_prism().unwrap();
    println!("lift e4 -> {:?} in {:?}", l1.shape(), t.elapsed());
    let t = Instant::now();
    let counts = l1.edge_counts();
    println!(
        "lifted e4 edges {:?} total {} regions {} in {:?}",
        counts.per_curve,
        counts.total,
        counts.regions,
        t.elapsed()
    );
    let t = Instant::now();
    let r = fully_reducible_bruteforce(&l1).unwrap();
    println!("lifted e4 fully reducible: {} in {:?}", r.fully_reducible, t.elapsed());

    let t = Instant::now();
    let l2 = l1.compact().lift_prism().unwrap();
    println!("lift^2 e4 -> {:?} in {:?}", l2.shape(), t.elapsed());
    let t = Instant::now();
    let counts = l2.edge_counts();
    println!(
        "4d e4 edges total {} regions {} in {:?}",
        counts.total,
        counts.regions,
        t.elapsed()
    );
    let t = Instant::now();
    let r = fully_reducible_bruteforce(&l2).unwrap();
    println!("4d e4 fully reducible: {} in {:?}", r.fully_reducible, t.elapsed());

    let e5 = edwards_grid(5, 1024).unwrap().compact();
    let t = Instant::now();
    let l5 = e5.lift_prism().unwrap();
    let counts = l5.edge_counts();
    println!(
        "lifted e5 -> {:?}, e = {}, r = {} in {:?}",
        l5.shape(),
        counts.total,
        counts.regions,
        t.elapsed()
    );
    let t = Instant::now();
    let l55 = l5.compact().lift_prism().unwrap();
    let counts = l55.edge_counts();
    println!(
        "4d e5 -> {:?}, e = {}, r = {} in {:?}",
        l55.shape(),
        counts.total,
        counts.regions,
        t.elapsed()
    );
    let t = Instant::now();
    let r = fully_reducible_bruteforce(&l55).unwrap();
    println!("4d e5 fully reducible: {} in {:?}", r.fully_reducible, t.elapsed());
}
